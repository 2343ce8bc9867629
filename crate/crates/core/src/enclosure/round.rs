//! Directed rounding on top of round-to-nearest hardware arithmetic.
//!
//! For the correctly rounded operations (`+`, `*`, `/`, `sqrt`) the exact
//! rounding error is recovered with an error-free transformation (TwoSum or
//! an FMA residual). Its sign says on which side of the nearest result the
//! exact value lies, so each endpoint moves by at most one ulp and only when
//! the result was inexact.
//!
//! `ln` and `exp` are not correctly rounded by libm; their results are moved
//! outward by [`TRANSCENDENTAL_ULPS`] ulps unconditionally, except for the
//! exact special cases `ln(1) = 0` and `exp(0) = 1`.

/// Outward nudge applied to libm `ln`/`exp` results (glibc documents < 1 ulp).
pub const TRANSCENDENTAL_ULPS: u32 = 2;

/// Below this magnitude FMA residuals may be inexact (gradual underflow).
const RESIDUAL_SAFE_MIN: f64 = f64::MIN_POSITIVE * 9007199254740992.0; // 2^-1022 * 2^53

#[inline]
fn nudge_down(x: f64, ulps: u32) -> f64 {
    let mut v = x;
    for _ in 0..ulps {
        v = v.next_down();
    }
    v
}

#[inline]
fn nudge_up(x: f64, ulps: u32) -> f64 {
    let mut v = x;
    for _ in 0..ulps {
        v = v.next_up();
    }
    v
}

/// Error term `e` with `a + b = s + e` exactly (Knuth's TwoSum).
#[inline]
fn two_sum_err(a: f64, b: f64, s: f64) -> f64 {
    let bb = s - a;
    (a - (s - bb)) + (b - bb)
}

#[inline]
pub fn add_down(a: f64, b: f64) -> f64 {
    let s = a + b;
    if !s.is_finite() {
        return s;
    }
    if two_sum_err(a, b, s) < 0.0 {
        s.next_down()
    } else {
        s
    }
}

#[inline]
pub fn add_up(a: f64, b: f64) -> f64 {
    let s = a + b;
    if !s.is_finite() {
        return s;
    }
    if two_sum_err(a, b, s) > 0.0 {
        s.next_up()
    } else {
        s
    }
}

#[inline]
pub fn sub_down(a: f64, b: f64) -> f64 {
    add_down(a, -b)
}

#[inline]
pub fn sub_up(a: f64, b: f64) -> f64 {
    add_up(a, -b)
}

/// Sign of `exact(a*b) - fl(a*b)`: -1, 0 or 1, or `None` when the residual
/// cannot be trusted.
#[inline]
fn mul_residual_sign(a: f64, b: f64, p: f64) -> Option<i8> {
    if !p.is_finite() {
        return None;
    }
    if p == 0.0 {
        return if a == 0.0 || b == 0.0 { Some(0) } else { None };
    }
    if p.abs() < RESIDUAL_SAFE_MIN {
        return None;
    }
    let e = a.mul_add(b, -p);
    Some(if e > 0.0 {
        1
    } else if e < 0.0 {
        -1
    } else {
        0
    })
}

#[inline]
pub fn mul_down(a: f64, b: f64) -> f64 {
    let p = a * b;
    match mul_residual_sign(a, b, p) {
        Some(s) if s >= 0 => p,
        Some(_) => p.next_down(),
        None => p.next_down(),
    }
}

#[inline]
pub fn mul_up(a: f64, b: f64) -> f64 {
    let p = a * b;
    match mul_residual_sign(a, b, p) {
        Some(s) if s <= 0 => p,
        Some(_) => p.next_up(),
        None => p.next_up(),
    }
}

/// Sign of `exact(a/b) - fl(a/b)`.
#[inline]
fn div_residual_sign(a: f64, b: f64, q: f64) -> Option<i8> {
    if !q.is_finite() || b == 0.0 {
        return None;
    }
    if q == 0.0 {
        return if a == 0.0 { Some(0) } else { None };
    }
    if q.abs() < RESIDUAL_SAFE_MIN || a.abs() < RESIDUAL_SAFE_MIN {
        return None;
    }
    // r = a - q*b is exactly representable for a correctly rounded q.
    let r = (-q).mul_add(b, a);
    let s = if r > 0.0 {
        1
    } else if r < 0.0 {
        -1
    } else {
        0
    };
    Some(if b > 0.0 { s } else { -s })
}

#[inline]
pub fn div_down(a: f64, b: f64) -> f64 {
    let q = a / b;
    match div_residual_sign(a, b, q) {
        Some(s) if s >= 0 => q,
        _ => q.next_down(),
    }
}

#[inline]
pub fn div_up(a: f64, b: f64) -> f64 {
    let q = a / b;
    match div_residual_sign(a, b, q) {
        Some(s) if s <= 0 => q,
        _ => q.next_up(),
    }
}

/// Requires `a >= 0`.
#[inline]
pub fn sqrt_down(a: f64) -> f64 {
    let r = a.sqrt();
    if r == 0.0 {
        return 0.0;
    }
    let e = (-r).mul_add(r, a);
    if e < 0.0 || r < RESIDUAL_SAFE_MIN {
        r.next_down().max(0.0)
    } else {
        r
    }
}

/// Requires `a >= 0`.
#[inline]
pub fn sqrt_up(a: f64) -> f64 {
    let r = a.sqrt();
    if a == 0.0 {
        return 0.0;
    }
    let e = (-r).mul_add(r, a);
    if e > 0.0 || r < RESIDUAL_SAFE_MIN {
        r.next_up()
    } else {
        r
    }
}

/// Requires `a > 0`.
#[inline]
pub fn ln_down(a: f64) -> f64 {
    if a == 1.0 {
        return 0.0;
    }
    let r = nudge_down(a.ln(), TRANSCENDENTAL_ULPS);
    // ln is positive exactly when a > 1.
    if a > 1.0 {
        r.max(0.0)
    } else {
        r
    }
}

/// Requires `a > 0`.
#[inline]
pub fn ln_up(a: f64) -> f64 {
    if a == 1.0 {
        return 0.0;
    }
    let r = nudge_up(a.ln(), TRANSCENDENTAL_ULPS);
    if a < 1.0 {
        r.min(0.0)
    } else {
        r
    }
}

/// `(ln_down(a), ln_up(a))` from a single libm call.
#[inline]
pub fn ln_pair(a: f64) -> (f64, f64) {
    if a == 1.0 {
        return (0.0, 0.0);
    }
    let r = a.ln();
    let (lo, hi) = (nudge_down(r, TRANSCENDENTAL_ULPS), nudge_up(r, TRANSCENDENTAL_ULPS));
    if a > 1.0 {
        (lo.max(0.0), hi)
    } else {
        (lo, hi.min(0.0))
    }
}

/// `ln(1 + a)` rounded down; requires `a > -1`.
#[inline]
pub fn ln_1p_down(a: f64) -> f64 {
    if a == 0.0 {
        return 0.0;
    }
    let r = nudge_down(a.ln_1p(), TRANSCENDENTAL_ULPS);
    if a > 0.0 {
        r.max(0.0)
    } else {
        r
    }
}

#[inline]
pub fn ln_1p_up(a: f64) -> f64 {
    if a == 0.0 {
        return 0.0;
    }
    let r = nudge_up(a.ln_1p(), TRANSCENDENTAL_ULPS);
    if a < 0.0 {
        r.min(0.0)
    } else {
        r
    }
}

#[inline]
pub fn exp_down(a: f64) -> f64 {
    if a == 0.0 {
        return 1.0;
    }
    nudge_down(a.exp(), TRANSCENDENTAL_ULPS).max(0.0)
}

#[inline]
pub fn exp_up(a: f64) -> f64 {
    if a == 0.0 {
        return 1.0;
    }
    let r = a.exp();
    if r == 0.0 {
        return f64::from_bits(1);
    }
    nudge_up(r, TRANSCENDENTAL_ULPS)
}

/// Nearest-rounded conversion followed by a one-sided correction.
#[inline]
pub fn i128_down(v: i128) -> f64 {
    let f = v as f64;
    if f.is_finite() && (f as i128) > v {
        f.next_down()
    } else {
        f
    }
}

#[inline]
pub fn i128_up(v: i128) -> f64 {
    let f = v as f64;
    if f.is_finite() && (f as i128) < v {
        f.next_up()
    } else {
        f
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::FromPrimitive;
    use proptest::prelude::*;

    fn exact(x: f64) -> BigRational {
        BigRational::from_f64(x).unwrap()
    }

    #[test]
    fn exact_operations_are_not_widened() {
        assert_eq!(add_down(1.0, 2.0), 3.0);
        assert_eq!(add_up(1.0, 2.0), 3.0);
        assert_eq!(mul_up(3.0, 7.0), 21.0);
        assert_eq!(div_down(1.0, 4.0), 0.25);
        assert_eq!(sqrt_down(4.0), 2.0);
        assert_eq!(sqrt_up(4.0), 2.0);
        assert_eq!(ln_down(1.0), 0.0);
        assert_eq!(ln_up(1.0), 0.0);
    }

    #[test]
    fn inexact_operations_bracket() {
        assert!(div_down(1.0, 3.0) < div_up(1.0, 3.0));
        assert!(sqrt_down(2.0) < sqrt_up(2.0));
        assert!(add_down(1.0, 1e-20) < add_up(1.0, 1e-20));
    }

    #[test]
    fn i128_conversion_brackets() {
        let v: i128 = (1 << 80) + 12345;
        let lo = i128_down(v);
        let hi = i128_up(v);
        assert!((lo as i128) <= v && (hi as i128) >= v);
        assert_eq!(i128_down(1 << 60), (1u64 << 60) as f64);
    }

    proptest! {
        #[test]
        fn directed_arith_brackets_exact(a in -1e12f64..1e12, b in -1e12f64..1e12) {
            let (ea, eb) = (exact(a), exact(b));
            let s = &ea + &eb;
            prop_assert!(exact(add_down(a, b)) <= s && s <= exact(add_up(a, b)));
            let p = &ea * &eb;
            prop_assert!(exact(mul_down(a, b)) <= p && p <= exact(mul_up(a, b)));
            if b != 0.0 {
                let q = &ea / &eb;
                prop_assert!(exact(div_down(a, b)) <= q && q <= exact(div_up(a, b)));
            }
        }

        #[test]
        fn sqrt_brackets_exact(a in 0f64..1e15) {
            let lo = exact(sqrt_down(a));
            let hi = exact(sqrt_up(a));
            let ea = exact(a);
            prop_assert!(&lo * &lo <= ea && ea <= &hi * &hi);
            prop_assert!(lo >= BigRational::from_integer(BigInt::from(0)));
        }
    }
}
