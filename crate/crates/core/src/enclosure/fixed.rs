//! Exact fixed-point accumulation of enclosures.
//!
//! Each added enclosure is rounded outward onto the grid `2^-FIXED_FRAC_BITS`
//! and summed in `i128`. Integer addition is associative, so a sum does not
//! depend on segmentation, worker count or reduction order.

use serde::{Deserialize, Serialize};

use super::{round, Enclosure};

/// Fractional bits of the grid. Sums stay exact while |sum| < 2^(127-88) ≈ 5.5e11.
pub const FIXED_FRAC_BITS: i32 = 88;

const SCALE_DOWN: f64 = 1.0 / (1u128 << FIXED_FRAC_BITS) as f64;

/// Running enclosure `[lo, hi] * 2^-FIXED_FRAC_BITS`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FixedSum {
    pub lo: i128,
    pub hi: i128,
}

/// Splits a finite nonzero `x` into `(m, e)` with `x = m * 2^e`, |m| < 2^53.
#[inline]
fn decompose(x: f64) -> (i64, i32) {
    let bits = x.to_bits();
    let sign = if bits >> 63 == 1 { -1 } else { 1 };
    let exp_bits = ((bits >> 52) & 0x7ff) as i32;
    let frac = (bits & ((1u64 << 52) - 1)) as i64;
    if exp_bits == 0 {
        (sign * frac, -1074)
    } else {
        (sign * (frac | (1i64 << 52)), exp_bits - 1075)
    }
}

/// `floor(x * 2^FIXED_FRAC_BITS)`; `None` when out of range.
#[inline]
pub(crate) fn to_grid_floor(x: f64) -> Option<i128> {
    if x == 0.0 {
        return Some(0);
    }
    if !x.is_finite() {
        return None;
    }
    let (m, e) = decompose(x);
    let shift = e + FIXED_FRAC_BITS;
    if shift >= 0 {
        if shift > 73 {
            return None;
        }
        Some((m as i128) << shift)
    } else if shift > -127 {
        Some((m as i128) >> (-shift))
    } else {
        Some(if m < 0 { -1 } else { 0 })
    }
}

#[inline]
pub(crate) fn to_grid_ceil(x: f64) -> Option<i128> {
    to_grid_floor(-x).map(|v| -v)
}

impl FixedSum {
    pub const ZERO: FixedSum = FixedSum { lo: 0, hi: 0 };

    pub fn from_enclosure(e: Enclosure) -> Self {
        FixedSum {
            lo: to_grid_floor(e.lo()).expect("enclosure outside the fixed-point range"),
            hi: to_grid_ceil(e.hi()).expect("enclosure outside the fixed-point range"),
        }
    }

    #[inline]
    pub fn add(&mut self, e: Enclosure) {
        self.lo += to_grid_floor(e.lo()).expect("enclosure outside the fixed-point range");
        self.hi += to_grid_ceil(e.hi()).expect("enclosure outside the fixed-point range");
    }

    #[inline]
    pub fn sub(&mut self, e: Enclosure) {
        self.add(-e);
    }

    #[inline]
    pub fn add_sum(&mut self, other: &FixedSum) {
        self.lo += other.lo;
        self.hi += other.hi;
    }

    pub fn combined(&self, other: &FixedSum) -> FixedSum {
        FixedSum {
            lo: self.lo + other.lo,
            hi: self.hi + other.hi,
        }
    }

    pub fn to_enclosure(&self) -> Enclosure {
        // Multiplication by a power of two is exact away from subnormals.
        let lo = round::i128_down(self.lo) * SCALE_DOWN;
        let hi = round::i128_up(self.hi) * SCALE_DOWN;
        Enclosure::new(lo, hi).expect("fixed-point sum is ordered")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn grid_rounding_is_directed() {
        assert_eq!(to_grid_floor(1.0), Some(1i128 << FIXED_FRAC_BITS));
        assert_eq!(to_grid_floor(-1e-40), Some(-1));
        assert_eq!(to_grid_ceil(1e-40), Some(1));
        assert_eq!(to_grid_floor(1e-40), Some(0));
        assert_eq!(to_grid_floor(1e15), None);
    }

    #[test]
    fn sums_are_order_independent() {
        let terms: Vec<Enclosure> = (1..200)
            .map(|n| Enclosure::ratio(if n % 3 == 0 { -1 } else { 1 }, n).unwrap())
            .collect();
        let mut fwd = FixedSum::ZERO;
        terms.iter().for_each(|t| fwd.add(*t));
        let mut rev = FixedSum::ZERO;
        terms.iter().rev().for_each(|t| rev.add(*t));
        assert_eq!(fwd, rev);
    }

    proptest! {
        #[test]
        fn roundtrip_contains_input(a in -1e9f64..1e9, w in 0f64..1.0) {
            let e = Enclosure::new(a, a + w).unwrap();
            let back = FixedSum::from_enclosure(e).to_enclosure();
            prop_assert!(back.contains_enclosure(&e));
        }
    }
}
