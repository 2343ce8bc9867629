//! Bound certificates: an upper bound together with the terms it was summed from.

use std::fmt;

use serde::Serialize;

use crate::decimal::Decimal;
use crate::enclosure::round::{add_up, div_down};
use crate::enclosure::Enclosure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Quantity {
    /// `sup |N(x)|/(x log x)`
    #[serde(rename = "sup |N(x)|/(x log x)")]
    N,
    /// `sup |M(x)|/x`
    #[serde(rename = "sup |M(x)|/x")]
    M,
}

impl Quantity {
    pub fn label(&self) -> &'static str {
        match self {
            Quantity::N => "sup |N(x)|/(x log x)",
            Quantity::M => "sup |M(x)|/x",
        }
    }
}

/// `[lo, hi]`, or `[lo, ∞)` when `hi` is `None`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct XRange {
    pub lo: Decimal,
    pub hi: Option<Decimal>,
}

impl XRange {
    pub fn new(lo: Decimal, hi: Option<Decimal>) -> Self {
        XRange { lo, hi }
    }

    pub fn lo_enclosure(&self) -> Enclosure {
        self.lo.to_enclosure()
    }

    pub fn hi_enclosure(&self) -> Option<Enclosure> {
        self.hi.map(|h| h.to_enclosure())
    }
}

impl fmt::Display for XRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.hi {
            Some(h) => write!(f, "[{}, {h}]", self.lo),
            None => write!(f, "[{}, ∞)", self.lo),
        }
    }
}

/// One term of a bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceStep {
    pub lemma: String,
    pub term: String,
    pub value: Enclosure,
    /// Ledger keys and certificate ids the term relies on.
    pub hypotheses: Vec<String>,
}

impl TraceStep {
    pub fn new(lemma: &str, term: &str, value: Enclosure, hypotheses: &[&str]) -> Self {
        TraceStep {
            lemma: lemma.to_string(),
            term: term.to_string(),
            value,
            hypotheses: hypotheses.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn with_hypothesis(mut self, h: impl Into<String>) -> Self {
        self.hypotheses.push(h.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCertificate {
    pub id: String,
    pub quantity: Quantity,
    pub x_range: XRange,
    /// Upward-rounded sum of the terms' upper endpoints.
    pub bound: f64,
    pub trace: Vec<TraceStep>,
    /// Sorted union of the hypotheses of all steps.
    pub hypotheses: Vec<String>,
}

fn upward_sum(trace: &[TraceStep]) -> f64 {
    trace.iter().fold(0.0, |acc, s| add_up(acc, s.value.hi()))
}

impl BoundCertificate {
    pub fn from_trace(id: impl Into<String>, quantity: Quantity, x_range: XRange, trace: Vec<TraceStep>) -> Self {
        let mut hypotheses: Vec<String> = trace.iter().flat_map(|s| s.hypotheses.iter().cloned()).collect();
        hypotheses.sort();
        hypotheses.dedup();
        BoundCertificate {
            id: id.into(),
            quantity,
            x_range,
            bound: upward_sum(&trace),
            trace,
            hypotheses,
        }
    }

    /// Recomputes the bound from the trace.
    pub fn replay(&self) -> f64 {
        upward_sum(&self.trace)
    }

    pub fn replay_matches(&self) -> bool {
        self.replay().to_bits() == self.bound.to_bits()
    }

    /// Largest integer `K` with `bound <= 1/K` guaranteed.
    pub fn reciprocal_floor(&self) -> u64 {
        div_down(1.0, self.bound).floor() as u64
    }

    pub fn term(&self, name: &str) -> Option<&TraceStep> {
        self.trace.iter().find(|s| s.term == name)
    }

    /// Terms of one lemma, summed upward.
    pub fn lemma_total(&self, lemma: &str) -> f64 {
        self.trace
            .iter()
            .filter(|s| s.lemma == lemma)
            .fold(0.0, |acc, s| add_up(acc, s.value.hi()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_is_upward_sum_and_replays() {
        let trace = vec![
            TraceStep::new("a", "t1", Enclosure::new(0.1, 0.1f64.next_up()).unwrap(), &["x"]),
            TraceStep::new("a", "t2", Enclosure::point(0.2), &["y", "x"]),
            TraceStep::new("b", "t3", Enclosure::new(-0.05, -0.04).unwrap(), &[]),
        ];
        let c = BoundCertificate::from_trace(
            "c",
            Quantity::N,
            XRange::new("1e16".parse().unwrap(), None),
            trace,
        );
        assert!(c.bound >= 0.1 + 0.2 - 0.04);
        assert!(c.replay_matches());
        assert_eq!(c.hypotheses, ["x", "y"]);
        assert_eq!(c.lemma_total("b"), -0.04);
        let mut tampered = c.clone();
        tampered.trace[1].value = Enclosure::point(0.3);
        assert!(!tampered.replay_matches());
        assert_eq!(c.x_range.to_string(), "[10000000000000000, ∞)");
    }

    #[test]
    fn reciprocal_floor_is_safe() {
        let c = BoundCertificate::from_trace(
            "c",
            Quantity::M,
            XRange::new(Decimal::from_u64(1), None),
            vec![TraceStep::new("a", "t", Enclosure::point(0.25), &[])],
        );
        assert_eq!(c.reciprocal_floor(), 4);
    }
}
