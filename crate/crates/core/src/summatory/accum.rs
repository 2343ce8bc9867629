//! Running-sum states. Every state forms a monoid under [`Accumulator::combine`],
//! so a segment's local sum can be computed before its offset is known.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::enclosure::{round, Enclosure, FixedSum};
use crate::error::{Error, Result};

/// Value of a summatory function at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum SeriesValue {
    Exact(i64),
    Real(Enclosure),
}

impl SeriesValue {
    pub fn to_enclosure(&self) -> Enclosure {
        match *self {
            SeriesValue::Exact(v) => Enclosure::from_i64(v),
            SeriesValue::Real(e) => e,
        }
    }

    pub fn as_exact(&self) -> Option<i64> {
        match *self {
            SeriesValue::Exact(v) => Some(v),
            SeriesValue::Real(_) => None,
        }
    }

    pub fn width(&self) -> f64 {
        match self {
            SeriesValue::Exact(_) => 0.0,
            SeriesValue::Real(e) => e.width(),
        }
    }
}

impl fmt::Display for SeriesValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesValue::Exact(v) => write!(f, "{v}"),
            SeriesValue::Real(e) => write!(f, "{e}"),
        }
    }
}

/// Neumaier-compensated float sum with the bookkeeping for an error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Compensated {
    sum: f64,
    comp: f64,
    abs: f64,
    count: u64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

impl Compensated {
    pub const ZERO: Compensated = Compensated {
        sum: 0.0,
        comp: 0.0,
        abs: 0.0,
        count: 0,
    };

    #[inline]
    pub fn add(&mut self, x: f64) {
        let (s, e) = two_sum(self.sum, x);
        self.sum = s;
        self.comp += e;
        self.abs += x.abs();
        self.count += 1;
    }

    pub fn combined(&self, other: &Compensated) -> Compensated {
        let (s, e) = two_sum(self.sum, other.sum);
        Compensated {
            sum: s,
            comp: self.comp + other.comp + e,
            abs: self.abs + other.abs,
            count: self.count + other.count,
        }
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    /// Worst-case estimate: every term carries up to one ulp of its own
    /// evaluation error, plus the compensated-summation bound
    /// `2u|S| + 4n u^2 sum|x|`.
    pub fn error_estimate(&self) -> f64 {
        let u = f64::EPSILON / 2.0;
        let n = self.count as f64;
        (2.0 * u * self.abs + 2.0 * u * self.value().abs() + 4.0 * n * u * u * self.abs) * 1.01
    }

    /// `value ± error_estimate`. Not rigorous: the estimate trusts libm.
    pub fn to_enclosure(&self) -> Enclosure {
        let v = self.value();
        let e = self.error_estimate();
        Enclosure::new(round::sub_down(v, e), round::add_up(v, e)).expect("ordered")
    }

    fn encode(&self) -> String {
        format!(
            "{:016x}:{:016x}:{:016x}:{}",
            self.sum.to_bits(),
            self.comp.to_bits(),
            self.abs.to_bits(),
            self.count
        )
    }
}

/// Prefix state of a scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Accumulator {
    Exact(i64),
    Fixed(FixedSum),
    Fast(Compensated),
    /// `m` and `M` together, for `m1(x) = m(x) - M(x)/x`.
    Smoothed { m: FixedSum, mertens: i64 },
    /// `M(n)` and `sum |M(n)| log(1+1/n)`; not decomposable, scanned sequentially.
    AbsLog { mertens: i64, sum: FixedSum },
}

impl Accumulator {
    pub fn combine(&self, other: &Accumulator) -> Accumulator {
        use Accumulator::*;
        match (self, other) {
            (Exact(a), Exact(b)) => Exact(a + b),
            (Fixed(a), Fixed(b)) => Fixed(a.combined(b)),
            (Fast(a), Fast(b)) => Fast(a.combined(b)),
            (Smoothed { m: a, mertens: ma }, Smoothed { m: b, mertens: mb }) => Smoothed {
                m: a.combined(b),
                mertens: ma + mb,
            },
            _ => unreachable!("mismatched or non-decomposable accumulators"),
        }
    }

    /// Value of the series at `x`, the last integer folded into this state.
    pub fn value(&self, x: u64) -> SeriesValue {
        match self {
            Accumulator::Exact(v) => SeriesValue::Exact(*v),
            Accumulator::Fixed(s) => SeriesValue::Real(s.to_enclosure()),
            Accumulator::Fast(c) => SeriesValue::Real(c.to_enclosure()),
            Accumulator::Smoothed { m, mertens } => {
                let ratio = Enclosure::from_i64(*mertens)
                    .div(Enclosure::from_u64(x.max(1)))
                    .expect("x > 0");
                SeriesValue::Real(m.to_enclosure() - ratio)
            }
            Accumulator::AbsLog { sum, .. } => SeriesValue::Real(sum.to_enclosure()),
        }
    }

    pub fn encode(&self) -> String {
        match self {
            Accumulator::Exact(v) => format!("exact:{v}"),
            Accumulator::Fixed(s) => format!("fixed:{}:{}", s.lo, s.hi),
            Accumulator::Fast(c) => format!("fast:{}", c.encode()),
            Accumulator::Smoothed { m, mertens } => format!("smoothed:{}:{}:{mertens}", m.lo, m.hi),
            Accumulator::AbsLog { mertens, sum } => format!("abslog:{mertens}:{}:{}", sum.lo, sum.hi),
        }
    }
}

impl FromStr for Accumulator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Checkpoint(format!("unreadable state {s:?}"));
        let parts: Vec<&str> = s.split(':').collect();
        let int = |i: usize| -> Result<i128> { parts.get(i).ok_or_else(bad)?.parse().map_err(|_| bad()) };
        let bits = |i: usize| -> Result<f64> {
            let p = parts.get(i).ok_or_else(bad)?;
            Ok(f64::from_bits(u64::from_str_radix(p, 16).map_err(|_| bad())?))
        };
        let small = |v: i128| i64::try_from(v).map_err(|_| bad());
        let state = match (parts[0], parts.len()) {
            ("exact", 2) => Accumulator::Exact(small(int(1)?)?),
            ("fixed", 3) => Accumulator::Fixed(FixedSum { lo: int(1)?, hi: int(2)? }),
            ("fast", 5) => Accumulator::Fast(Compensated {
                sum: bits(1)?,
                comp: bits(2)?,
                abs: bits(3)?,
                count: parts[4].parse().map_err(|_| bad())?,
            }),
            ("smoothed", 4) => Accumulator::Smoothed {
                m: FixedSum { lo: int(1)?, hi: int(2)? },
                mertens: small(int(3)?)?,
            },
            ("abslog", 4) => Accumulator::AbsLog {
                mertens: small(int(1)?)?,
                sum: FixedSum { lo: int(2)?, hi: int(3)? },
            },
            _ => return Err(bad()),
        };
        Ok(state)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_recovers_cancellation() {
        let mut c = Compensated::ZERO;
        for x in [1e16, 1.0, -1e16, 1.0] {
            c.add(x);
        }
        assert_eq!(c.value(), 2.0);
        assert!(c.to_enclosure().contains(2.0));
    }

    #[test]
    fn states_round_trip_through_text() {
        let mut c = Compensated::ZERO;
        c.add(0.1);
        c.add(1e-3);
        let states = [
            Accumulator::Exact(-17),
            Accumulator::Fixed(FixedSum { lo: -5, hi: 1 << 100 }),
            Accumulator::Fast(c),
            Accumulator::Smoothed { m: FixedSum { lo: 3, hi: 4 }, mertens: -2 },
            Accumulator::AbsLog { mertens: 1, sum: FixedSum { lo: 9, hi: 10 } },
        ];
        for s in states {
            assert_eq!(s.encode().parse::<Accumulator>().unwrap(), s);
        }
        assert!("fixed:1".parse::<Accumulator>().is_err());
        assert!("bogus:1:2".parse::<Accumulator>().is_err());
    }
}
