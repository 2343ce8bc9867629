//! Outward-rounded real intervals.
//!
//! An [`Enclosure`] is the only number type on the certification path. Every
//! operation returns an interval containing the exact image of every point of
//! its inputs; see [`round`] for how endpoints are rounded.

mod constants;
mod fixed;
pub mod round;
mod zeta;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use constants::{ConstantTable, EULER_GAMMA_HI, EULER_GAMMA_LO, ZETA_HALF_CHECK};
pub use fixed::{FixedSum, FIXED_FRAC_BITS};
pub use zeta::{zeta_half, zeta_real, ZETA_MIN_S, ZETA_REAL_DEFAULT_CUTOFF};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnclosureError {
    #[error("invalid enclosure [{lo}, {hi}]")]
    Invalid { lo: f64, hi: f64 },
    #[error("division by an enclosure containing zero: [{lo}, {hi}]")]
    DivisionByZero { lo: f64, hi: f64 },
    #[error("{op} undefined on [{lo}, {hi}]")]
    Domain { op: &'static str, lo: f64, hi: f64 },
    #[error("{op} overflowed to a non-finite endpoint")]
    Overflow { op: &'static str },
    #[error("zeta(s) requires s >= {min}, got {s}")]
    PoleStandOff { s: f64, min: f64 },
}

pub type Result<T> = std::result::Result<T, EnclosureError>;

/// Operation selector for [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Sqrt,
    Log,
    Pow,
}

/// A closed interval `[lo, hi]` with finite endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Enclosure {
    lo: f64,
    hi: f64,
}

impl Enclosure {
    pub const ZERO: Enclosure = Enclosure { lo: 0.0, hi: 0.0 };
    pub const ONE: Enclosure = Enclosure { lo: 1.0, hi: 1.0 };

    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_finite() && hi.is_finite() && lo <= hi {
            Ok(Enclosure { lo, hi })
        } else {
            Err(EnclosureError::Invalid { lo, hi })
        }
    }

    /// Degenerate interval at an exactly representable value.
    ///
    /// Panics on non-finite input.
    pub fn point(x: f64) -> Self {
        assert!(x.is_finite(), "non-finite point {x}");
        Enclosure { lo: x, hi: x }
    }

    pub fn from_u64(n: u64) -> Self {
        Self::from_i128(n as i128)
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_i128(n as i128)
    }

    pub fn from_i128(n: i128) -> Self {
        Enclosure {
            lo: round::i128_down(n),
            hi: round::i128_up(n),
        }
    }

    /// Enclosure of the rational `num / den`.
    pub fn ratio(num: i128, den: i128) -> Result<Self> {
        Self::from_i128(num).div(Self::from_i128(den))
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn width(&self) -> f64 {
        round::sub_up(self.hi, self.lo)
    }

    pub fn mid(&self) -> f64 {
        self.lo * 0.5 + self.hi * 0.5
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_enclosure(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn hull(&self, other: &Enclosure) -> Enclosure {
        Enclosure {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn intersects(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// True when every point of `self` is strictly below every point of `other`.
    pub fn certainly_lt(&self, other: &Enclosure) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_le(&self, other: &Enclosure) -> bool {
        self.hi <= other.lo
    }

    fn finite(self, op: &'static str) -> Result<Self> {
        if self.lo.is_finite() && self.hi.is_finite() {
            Ok(self)
        } else {
            Err(EnclosureError::Overflow { op })
        }
    }

    pub fn checked_add(self, rhs: Enclosure) -> Result<Self> {
        Enclosure {
            lo: round::add_down(self.lo, rhs.lo),
            hi: round::add_up(self.hi, rhs.hi),
        }
        .finite("add")
    }

    pub fn checked_sub(self, rhs: Enclosure) -> Result<Self> {
        Enclosure {
            lo: round::sub_down(self.lo, rhs.hi),
            hi: round::sub_up(self.hi, rhs.lo),
        }
        .finite("sub")
    }

    pub fn checked_mul(self, rhs: Enclosure) -> Result<Self> {
        let (a, b) = (self, rhs);
        let r = if a.lo >= 0.0 && b.lo >= 0.0 {
            Enclosure {
                lo: round::mul_down(a.lo, b.lo),
                hi: round::mul_up(a.hi, b.hi),
            }
        } else {
            let cands = [(a.lo, b.lo), (a.lo, b.hi), (a.hi, b.lo), (a.hi, b.hi)];
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for (x, y) in cands {
                lo = lo.min(round::mul_down(x, y));
                hi = hi.max(round::mul_up(x, y));
            }
            Enclosure { lo, hi }
        };
        r.finite("mul")
    }

    pub fn div(self, rhs: Enclosure) -> Result<Self> {
        if rhs.lo <= 0.0 && rhs.hi >= 0.0 {
            return Err(EnclosureError::DivisionByZero {
                lo: rhs.lo,
                hi: rhs.hi,
            });
        }
        let cands = [
            (self.lo, rhs.lo),
            (self.lo, rhs.hi),
            (self.hi, rhs.lo),
            (self.hi, rhs.hi),
        ];
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (x, y) in cands {
            lo = lo.min(round::div_down(x, y));
            hi = hi.max(round::div_up(x, y));
        }
        Enclosure { lo, hi }.finite("div")
    }

    pub fn recip(self) -> Result<Self> {
        Enclosure::ONE.div(self)
    }

    pub fn sqrt(self) -> Result<Self> {
        if self.lo < 0.0 {
            return Err(EnclosureError::Domain {
                op: "sqrt",
                lo: self.lo,
                hi: self.hi,
            });
        }
        Ok(Enclosure {
            lo: round::sqrt_down(self.lo),
            hi: round::sqrt_up(self.hi),
        })
    }

    pub fn ln(self) -> Result<Self> {
        if self.lo <= 0.0 {
            return Err(EnclosureError::Domain {
                op: "log",
                lo: self.lo,
                hi: self.hi,
            });
        }
        Ok(Enclosure {
            lo: round::ln_down(self.lo),
            hi: round::ln_up(self.hi),
        })
    }

    /// `ln(1 + self)`, accurate for small arguments.
    pub fn ln_1p(self) -> Result<Self> {
        if self.lo <= -1.0 {
            return Err(EnclosureError::Domain {
                op: "log1p",
                lo: self.lo,
                hi: self.hi,
            });
        }
        Ok(Enclosure {
            lo: round::ln_1p_down(self.lo),
            hi: round::ln_1p_up(self.hi),
        })
    }

    /// `ln n` for an integer `n >= 1` below 2^53.
    #[inline]
    pub fn ln_u64(n: u64) -> Self {
        debug_assert!((1..1 << 53).contains(&n));
        let (lo, hi) = round::ln_pair(n as f64);
        Enclosure { lo, hi }
    }

    /// `1/n` for an integer `n >= 1` below 2^53.
    #[inline]
    pub fn recip_u64(n: u64) -> Self {
        let d = n as f64;
        Enclosure {
            lo: round::div_down(1.0, d),
            hi: round::div_up(1.0, d),
        }
    }

    /// `1/√n` for an integer `n >= 1` below 2^53.
    #[inline]
    pub fn recip_sqrt_u64(n: u64) -> Self {
        let d = n as f64;
        Enclosure {
            lo: round::div_down(1.0, round::sqrt_up(d)),
            hi: round::div_up(1.0, round::sqrt_down(d)),
        }
    }

    pub fn exp(self) -> Result<Self> {
        Enclosure {
            lo: round::exp_down(self.lo),
            hi: round::exp_up(self.hi),
        }
        .finite("exp")
    }

    /// `self^exponent` for `self > 0`, via `exp(exponent * ln self)`.
    pub fn pow(self, exponent: Enclosure) -> Result<Self> {
        if self.lo <= 0.0 {
            return Err(EnclosureError::Domain {
                op: "pow",
                lo: self.lo,
                hi: self.hi,
            });
        }
        if exponent.is_point() && exponent.lo == 1.0 {
            return Ok(self);
        }
        exponent.checked_mul(self.ln()?)?.exp()
    }

    pub fn powi(self, n: u32) -> Result<Self> {
        let mut acc = Enclosure::ONE;
        for _ in 0..n {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    pub fn square(self) -> Result<Self> {
        if self.lo >= 0.0 || self.hi <= 0.0 {
            let a = self.abs();
            a.checked_mul(a)
        } else {
            let m = self.lo.abs().max(self.hi);
            Ok(Enclosure {
                lo: 0.0,
                hi: round::mul_up(m, m),
            })
        }
    }

    pub fn abs(self) -> Self {
        if self.lo >= 0.0 {
            self
        } else if self.hi <= 0.0 {
            -self
        } else {
            Enclosure {
                lo: 0.0,
                hi: self.hi.max(-self.lo),
            }
        }
    }

    /// Upper bound of `max(self, other)` as an interval.
    pub fn max(self, other: Enclosure) -> Self {
        Enclosure {
            lo: self.lo.max(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn min(self, other: Enclosure) -> Self {
        Enclosure {
            lo: self.lo.min(other.lo),
            hi: self.hi.min(other.hi),
        }
    }
}

impl Neg for Enclosure {
    type Output = Enclosure;
    fn neg(self) -> Enclosure {
        Enclosure {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

// The operator forms panic on overflow; all endpoints in this crate stay far
// below f64::MAX. Use the `checked_*` methods where that is not guaranteed.
impl Add for Enclosure {
    type Output = Enclosure;
    fn add(self, rhs: Enclosure) -> Enclosure {
        self.checked_add(rhs).expect("enclosure addition overflowed")
    }
}

impl Sub for Enclosure {
    type Output = Enclosure;
    fn sub(self, rhs: Enclosure) -> Enclosure {
        self.checked_sub(rhs).expect("enclosure subtraction overflowed")
    }
}

impl Mul for Enclosure {
    type Output = Enclosure;
    fn mul(self, rhs: Enclosure) -> Enclosure {
        self.checked_mul(rhs).expect("enclosure multiplication overflowed")
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = f.precision() {
            write!(f, "[{:.*e}, {:.*e}]", p, self.lo, p, self.hi)
        } else {
            write!(f, "[{:e}, {:e}]", self.lo, self.hi)
        }
    }
}

/// Dispatch form of the interval operations; `b` is required for the binary ops.
pub fn arith(op: ArithOp, a: Enclosure, b: Option<Enclosure>) -> Result<Enclosure> {
    let rhs = |op_name: &'static str| {
        b.ok_or(EnclosureError::Domain {
            op: op_name,
            lo: a.lo,
            hi: a.hi,
        })
    };
    match op {
        ArithOp::Add => a.checked_add(rhs("add")?),
        ArithOp::Sub => a.checked_sub(rhs("sub")?),
        ArithOp::Mul => a.checked_mul(rhs("mul")?),
        ArithOp::Div => a.div(rhs("div")?),
        ArithOp::Pow => a.pow(rhs("pow")?),
        ArithOp::Sqrt => a.sqrt(),
        ArithOp::Log => a.ln(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(lo: f64, hi: f64) -> Enclosure {
        Enclosure::new(lo, hi).unwrap()
    }

    #[test]
    fn trivial_examples() {
        assert_eq!(Enclosure::point(4.0).sqrt().unwrap(), Enclosure::point(2.0));
        assert_eq!(Enclosure::ONE.ln().unwrap(), Enclosure::ZERO);
        let s = arith(ArithOp::Add, e(1.0, 2.0), Some(e(3.0, 4.0))).unwrap();
        assert!(s.contains_enclosure(&e(4.0, 6.0)));
    }

    #[test]
    fn domain_errors_are_reported() {
        assert!(matches!(
            e(-1.0, 1.0).recip(),
            Err(EnclosureError::DivisionByZero { .. })
        ));
        assert!(matches!(
            e(-1.0, 4.0).sqrt(),
            Err(EnclosureError::Domain { op: "sqrt", .. })
        ));
        assert!(matches!(e(0.0, 2.0).ln(), Err(EnclosureError::Domain { .. })));
        assert!(Enclosure::new(f64::NAN, 1.0).is_err());
        assert!(Enclosure::new(2.0, 1.0).is_err());
        assert!(arith(ArithOp::Add, Enclosure::ONE, None).is_err());
        assert!(matches!(
            Enclosure::point(1e300).checked_mul(Enclosure::point(1e300)),
            Err(EnclosureError::Overflow { .. })
        ));
    }

    #[test]
    fn self_subtraction_contains_zero() {
        let a = Enclosure::ratio(1, 3).unwrap();
        assert!((a - a).contains(0.0));
    }

    #[test]
    fn mixed_sign_products() {
        let p = e(-2.0, 3.0) * e(-5.0, 1.0);
        assert_eq!((p.lo(), p.hi()), (-15.0, 10.0));
        assert_eq!(e(-3.0, 2.0).square().unwrap(), e(0.0, 9.0));
    }

    #[test]
    fn pow_matches_sqrt() {
        let half = Enclosure::ratio(1, 2).unwrap();
        let a = Enclosure::point(30.0).pow(half).unwrap();
        assert!(a.intersects(&Enclosure::point(30.0).sqrt().unwrap()));
        assert!(a.width() < 1e-14);
    }
}
