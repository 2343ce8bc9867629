//! Exact decimal literals such as `0.571`, `8.6386e-8` or `2 160 535`.
//!
//! Ledger coefficients and command-line ranges are decimals; they are kept
//! exact and converted to an [`Enclosure`] (or an integer) only when used.

use std::fmt;
use std::str::FromStr;

use std::cmp::Ordering;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::enclosure::Enclosure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecimalError {
    #[error("malformed decimal literal {0:?}")]
    Malformed(String),
    #[error("decimal literal {0:?} is out of range")]
    OutOfRange(String),
    #[error("{0} is not an integer")]
    NotInteger(String),
}

/// `mantissa * 10^exponent`, normalized so the mantissa has no trailing zeros.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Decimal {
    mantissa: i128,
    exponent: i32,
}

const MAX_EXPONENT: i32 = 60;

impl Decimal {
    pub fn new(mantissa: i128, exponent: i32) -> Self {
        let mut d = Decimal { mantissa, exponent };
        d.normalize();
        d
    }

    pub fn from_u64(n: u64) -> Self {
        Decimal::new(n as i128, 0)
    }

    fn normalize(&mut self) {
        if self.mantissa == 0 {
            self.exponent = 0;
            return;
        }
        while self.mantissa % 10 == 0 {
            self.mantissa /= 10;
            self.exponent += 1;
        }
    }

    pub fn mantissa(&self) -> i128 {
        self.mantissa
    }

    pub fn exponent(&self) -> i32 {
        self.exponent
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa < 0
    }

    /// Exact value as `num / den` with `den > 0`, when it fits in `i128`.
    pub fn to_ratio(&self) -> Option<(i128, i128)> {
        if self.exponent >= 0 {
            let scale = 10i128.checked_pow(self.exponent as u32)?;
            Some((self.mantissa.checked_mul(scale)?, 1))
        } else {
            Some((self.mantissa, 10i128.checked_pow((-self.exponent) as u32)?))
        }
    }

    /// Rigorous enclosure of the decimal value.
    pub fn to_enclosure(&self) -> Enclosure {
        let m = Enclosure::from_i128(self.mantissa);
        let p = pow10(self.exponent.unsigned_abs());
        if self.exponent >= 0 {
            m * p
        } else {
            m.div(p).expect("10^k > 0")
        }
    }

    /// The integer value, or an error when the literal has a fractional part.
    pub fn to_u64(&self) -> Result<u64, DecimalError> {
        if self.mantissa < 0 || self.exponent < 0 {
            return Err(DecimalError::NotInteger(self.to_string()));
        }
        let (num, _) = self
            .to_ratio()
            .ok_or_else(|| DecimalError::OutOfRange(self.to_string()))?;
        u64::try_from(num).map_err(|_| DecimalError::OutOfRange(self.to_string()))
    }

    /// Number of significant digits after normalization.
    pub fn significant_digits(&self) -> u32 {
        let mut m = self.mantissa.unsigned_abs();
        let mut d = 0;
        while m > 0 {
            m /= 10;
            d += 1;
        }
        d.max(1)
    }

    /// Exact product; `None` on overflow.
    pub fn checked_mul(&self, other: &Decimal) -> Option<Decimal> {
        let m = self.mantissa.checked_mul(other.mantissa)?;
        let e = self.exponent.checked_add(other.exponent)?;
        (e.abs() <= MAX_EXPONENT).then(|| Decimal::new(m, e))
    }

    /// `10^exponent` of the last printed digit, given the printed form.
    pub fn unit_in_last_place(&self) -> Enclosure {
        Decimal::new(1, self.exponent).to_enclosure()
    }
}

impl Decimal {
    /// `mantissa * 10^(exponent - base)` as an exact integer, `base <= exponent`.
    fn scaled(&self, base: i32) -> BigInt {
        BigInt::from(self.mantissa) * BigInt::from(10u32).pow((self.exponent - base) as u32)
    }
}

impl Ord for Decimal {
    fn cmp(&self, other: &Self) -> Ordering {
        let base = self.exponent.min(other.exponent);
        self.scaled(base).cmp(&other.scaled(base))
    }
}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Decimal {
    fn from(n: u64) -> Self {
        Decimal::from_u64(n)
    }
}

fn pow10(k: u32) -> Enclosure {
    // 10^k is exact in binary64 for k <= 22.
    if k <= 22 {
        Enclosure::point(10f64.powi(k as i32))
    } else {
        Enclosure::point(10.0).powi(k).expect("finite")
    }
}

impl FromStr for Decimal {
    type Err = DecimalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || DecimalError::Malformed(s.to_string());
        let cleaned: String = s
            .trim()
            .chars()
            .filter(|c| !matches!(c, ' ' | '_' | '\u{202f}' | '\u{a0}'))
            .collect();
        if cleaned.is_empty() {
            return Err(bad());
        }
        let (body, exp_part) = match cleaned.find(['e', 'E']) {
            Some(i) => (&cleaned[..i], Some(&cleaned[i + 1..])),
            None => (cleaned.as_str(), None),
        };
        let mut exponent: i32 = match exp_part {
            Some(e) => e.parse().map_err(|_| bad())?,
            None => 0,
        };
        let (negative, digits) = match body.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, body.strip_prefix('+').unwrap_or(body)),
        };
        let (int_part, frac_part) = match digits.split_once('.') {
            Some((a, b)) => (a, b),
            None => (digits, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let mut mantissa: i128 = 0;
        for c in int_part.chars().chain(frac_part.chars()) {
            mantissa = mantissa
                .checked_mul(10)
                .and_then(|m| m.checked_add((c as u8 - b'0') as i128))
                .ok_or_else(|| DecimalError::OutOfRange(s.to_string()))?;
        }
        exponent -= frac_part.len() as i32;
        if exponent.abs() > MAX_EXPONENT {
            return Err(DecimalError::OutOfRange(s.to_string()));
        }
        if negative {
            mantissa = -mantissa;
        }
        Ok(Decimal::new(mantissa, exponent))
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.mantissa < 0 { "-" } else { "" };
        let digits = self.mantissa.unsigned_abs().to_string();
        let n = digits.len() as i32;
        // Plain notation for moderate exponents, scientific otherwise.
        if self.exponent >= 0 && self.exponent + n <= 21 {
            write!(f, "{sign}{digits}{}", "0".repeat(self.exponent as usize))
        } else if self.exponent < 0 && -self.exponent < n {
            let split = (n + self.exponent) as usize;
            write!(f, "{sign}{}.{}", &digits[..split], &digits[split..])
        } else if self.exponent < 0 && -self.exponent - n <= 6 {
            let zeros = (-self.exponent - n) as usize;
            write!(f, "{sign}0.{}{digits}", "0".repeat(zeros))
        } else {
            let e = self.exponent + n - 1;
            if n == 1 {
                write!(f, "{sign}{digits}e{e}")
            } else {
                write!(f, "{sign}{}.{}e{e}", &digits[..1], &digits[1..])
            }
        }
    }
}

impl Serialize for Decimal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Decimal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
            Float(f64),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Int(i) => Ok(Decimal::new(i as i128, 0)),
            // Shortest round-trip representation of the float literal.
            Raw::Float(x) => format!("{x:e}").parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Decimal {
        s.parse().unwrap()
    }

    #[test]
    fn parses_scientific_literals() {
        assert_eq!(d("0.571"), Decimal::new(571, -3));
        assert_eq!(d("8.6386e-8"), Decimal::new(86386, -12));
        assert_eq!(d("2 160 535").to_u64().unwrap(), 2_160_535);
        assert_eq!(d("1.3e9").to_u64().unwrap(), 1_300_000_000);
        assert_eq!(d("1e19").to_u64().unwrap(), 10_000_000_000_000_000_000);
        assert_eq!(d("-5.44"), Decimal::new(-544, -2));
        assert_eq!(d(".5"), Decimal::new(5, -1));
    }

    #[test]
    fn rejects_non_integers_and_garbage() {
        assert!(matches!(d("1.5").to_u64(), Err(DecimalError::NotInteger(_))));
        assert!(matches!(d("1e30").to_u64(), Err(DecimalError::OutOfRange(_))));
        assert!("abc".parse::<Decimal>().is_err());
        assert!("1e".parse::<Decimal>().is_err());
        assert!("".parse::<Decimal>().is_err());
        assert!("1.2.3".parse::<Decimal>().is_err());
    }

    #[test]
    fn enclosure_contains_value() {
        let e = d("0.571").to_enclosure();
        assert!(e.contains(0.571));
        assert!(e.width() < 1e-15);
        assert_eq!(d("1e16").to_enclosure(), Enclosure::point(1e16));
    }

    #[test]
    fn ordering_is_exact() {
        assert!(d("1e16") > d("9999999999999999"));
        assert!(d("0.571") < d("0.5710001"));
        assert_eq!(d("1.30e9").cmp(&d("1300000000")), Ordering::Equal);
        assert!(d("-5.44") < d("0"));
    }

    #[test]
    fn products_are_exact() {
        let t = d("0.571").checked_mul(&d("160383")).unwrap();
        assert_eq!(t.checked_mul(&t).unwrap(), d("8386657011.588249"));
        assert_eq!(d("0.94").checked_mul(&d("1.01")).unwrap(), d("0.9494"));
        assert!(d("1e40").checked_mul(&d("1e40")).is_none());
    }

    #[test]
    fn display_round_trips() {
        for s in ["0.571", "8.6386e-8", "2160535", "1e30", "-5.44", "0.00067"] {
            assert_eq!(d(&d(s).to_string()), d(s), "{s}");
        }
        assert_eq!(d("0.08").unit_in_last_place(), d("0.01").to_enclosure());
    }
}
