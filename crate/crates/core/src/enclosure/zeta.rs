//! Rigorous enclosures of the Riemann zeta function at real arguments.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::{Enclosure, EnclosureError, FixedSum, Result};

/// Smallest `s` accepted by [`zeta_real`].
pub const ZETA_MIN_S: f64 = 1.05;

pub const ZETA_REAL_DEFAULT_CUTOFF: u64 = 100_000;

/// Terms of the accelerated eta series used for ζ(1/2).
const BORWEIN_TERMS: usize = 48;

fn biguint_enclosure(v: &BigUint) -> Enclosure {
    if v.is_zero() {
        return Enclosure::ZERO;
    }
    let f = v.to_f64().expect("finite");
    // `to_f64` is within one ulp of the exact value.
    Enclosure::new(f.next_down(), f.next_up()).expect("ordered")
}

/// Borwein's weights `d_0, ..., d_n`, exact.
///
/// `d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)`.
fn borwein_weights(n: usize) -> Vec<BigUint> {
    let factorial = |m: usize| -> BigUint { (1..=m).fold(BigUint::one(), |acc, i| acc * i) };
    let nn = BigUint::from(n);
    let mut out = Vec::with_capacity(n + 1);
    let mut partial = BigUint::zero();
    for i in 0..=n {
        let num = factorial(n + i - 1) * BigUint::from(4u32).pow(i as u32);
        let den = factorial(n - i) * factorial(2 * i);
        // n/(n+i) * C(n+i, 2i) * 4^i, an integer (Chebyshev coefficient).
        let scaled = &nn * num;
        debug_assert!((&scaled % &den).is_zero());
        partial += scaled / den;
        out.push(partial.clone());
    }
    out
}

/// ζ(1/2) via the alternating eta series with Borwein's acceleration.
///
/// `ζ(s) = 1/(1 - 2^{1-s}) * sum_{k<n} (-1)^k (1 - d_k/d_n) (k+1)^{-s} + γ_n`
/// with `|γ_n(s)| <= 3 / ((3+√8)^n |1 - 2^{1-s}|)` for real `s >= 1/2`.
pub fn zeta_half() -> Enclosure {
    zeta_half_with_terms(BORWEIN_TERMS)
}

pub(crate) fn zeta_half_with_terms(n: usize) -> Enclosure {
    let d = borwein_weights(n);
    let dn = biguint_enclosure(&d[n]);
    let mut acc = FixedSum::ZERO;
    for (k, dk) in d.iter().take(n).enumerate() {
        let w = biguint_enclosure(&(&d[n] - dk)).div(dn).expect("d_n > 0");
        let term = w
            .div(Enclosure::from_u64(k as u64 + 1).sqrt().expect("positive"))
            .expect("positive");
        if k % 2 == 0 {
            acc.add(term);
        } else {
            acc.sub(term);
        }
    }
    // 1 - 2^{1/2} < 0
    let denom = Enclosure::ONE - Enclosure::point(2.0).sqrt().expect("positive");
    let main = acc.to_enclosure().div(denom).expect("nonzero");
    let decay = (Enclosure::point(3.0) + Enclosure::point(8.0).sqrt().expect("positive"))
        .powi(n as u32)
        .expect("finite");
    let tail = Enclosure::point(3.0)
        .div(decay * denom.abs())
        .expect("nonzero");
    main + Enclosure::new(-tail.hi(), tail.hi()).expect("ordered")
}

/// ζ(s) for real `s >= 1.05`: direct summation to `cutoff` plus the integral
/// tail `(T+1)^{1-s}/(s-1) <= sum_{n>T} n^{-s} <= T^{1-s}/(s-1)`.
pub fn zeta_real(s: Enclosure, cutoff: u64) -> Result<Enclosure> {
    if s.lo() < ZETA_MIN_S {
        return Err(EnclosureError::PoleStandOff {
            s: s.lo(),
            min: ZETA_MIN_S,
        });
    }
    let cutoff = cutoff.max(1);
    let neg_s = -s;
    let mut acc = FixedSum::ZERO;
    acc.add(Enclosure::ONE);
    for n in 2..=cutoff {
        acc.add(Enclosure::from_u64(n).pow(neg_s)?);
    }
    let one_minus_s = Enclosure::ONE - s;
    let s_minus_one = s - Enclosure::ONE;
    let upper = Enclosure::from_u64(cutoff)
        .pow(one_minus_s)?
        .div(s_minus_one)?;
    let lower = Enclosure::from_u64(cutoff + 1)
        .pow(one_minus_s)?
        .div(s_minus_one)?;
    let tail = Enclosure::new(lower.lo(), upper.hi().max(lower.lo()))?;
    acc.add(tail);
    Ok(acc.to_enclosure())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_are_increasing_integers() {
        let d = borwein_weights(6);
        assert!(d.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(d[0], BigUint::one());
    }

    #[test]
    fn zeta_half_reference_digits() {
        let z = zeta_half();
        // Truncated digits: -1.4603546 < ζ(1/2) < -1.4603545.
        assert!(z.lo() > -1.4603546 && z.hi() < -1.4603545, "{z}");
        assert!(z.contains(-1.460354508809586812889499));
        assert!(z.width() <= 1e-9);
        assert!(z.lo() >= -1.47 && z.hi() <= -1.46);
    }

    #[test]
    fn zeta_half_converges_with_more_terms() {
        // A higher-order run must lie inside (and be no wider than) the default.
        let hi_order = zeta_half_with_terms(64);
        let lo_order = zeta_half_with_terms(24);
        assert!(lo_order.intersects(&hi_order));
        assert!(zeta_half().intersects(&hi_order));
    }

    #[test]
    fn zeta_two_is_pi_squared_over_six() {
        let z = zeta_real(Enclosure::point(2.0), ZETA_REAL_DEFAULT_CUTOFF).unwrap();
        let pi2_6 = std::f64::consts::PI * std::f64::consts::PI / 6.0;
        assert!(z.contains(pi2_6), "{z}");
        assert!(z.width() < 1e-8);
    }

    #[test]
    fn zeta_three_halves_against_larger_cutoff() {
        let s = Enclosure::ratio(3, 2).unwrap();
        let a = zeta_real(s, 20_000).unwrap();
        let b = zeta_real(s, 200_000).unwrap();
        assert!(a.contains_enclosure(&b) || a.intersects(&b));
        assert!(b.width() < a.width());
        assert!(b.contains(2.612375348685488));
    }

    #[test]
    fn pole_stand_off() {
        let s = Enclosure::ratio(101, 100).unwrap();
        assert!(matches!(
            zeta_real(s, 1000),
            Err(EnclosureError::PoleStandOff { .. })
        ));
    }
}
