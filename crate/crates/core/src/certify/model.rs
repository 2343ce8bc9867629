//! Square-root models `|f(X)| <= c·√X` (or `c/√X`) on a range of X.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::decimal::Decimal;
use crate::enclosure::Enclosure;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelTarget {
    #[serde(rename = "M")]
    M,
    PsiMinusX,
    M1,
}

impl ModelTarget {
    pub fn name(&self) -> &'static str {
        match self {
            ModelTarget::M => "M",
            ModelTarget::PsiMinusX => "psi_minus_x",
            ModelTarget::M1 => "m1",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelForm {
    /// `|f(X)| <= c·√X`
    TimesSqrt,
    /// `|f(X)| <= c/√X`
    OverSqrt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Proved or computed within the chain itself.
    Internal,
    /// Quoted from the literature; enters as an axiom.
    External,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Provenance {
    pub source: Source,
    pub citation: String,
}

impl Provenance {
    pub fn external(citation: impl Into<String>) -> Self {
        Provenance {
            source: Source::External,
            citation: citation.into(),
        }
    }

    pub fn internal(citation: impl Into<String>) -> Self {
        Provenance {
            source: Source::Internal,
            citation: citation.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootModel {
    pub target: ModelTarget,
    pub form: ModelForm,
    pub coefficient: Decimal,
    pub range_lo: Decimal,
    /// `None` for an unbounded range.
    pub range_hi: Option<Decimal>,
    pub provenance: Provenance,
}

impl RootModel {
    pub fn new(
        target: ModelTarget,
        form: ModelForm,
        coefficient: Decimal,
        range_lo: Decimal,
        range_hi: Option<Decimal>,
        provenance: Provenance,
    ) -> Result<Self> {
        if coefficient <= Decimal::from_u64(0) {
            return Err(Error::InvalidArgument(format!(
                "model coefficient must be positive, got {coefficient}"
            )));
        }
        if matches!(range_hi, Some(hi) if hi < range_lo) {
            return Err(Error::InvalidArgument(format!(
                "empty model range [{range_lo}, {}]",
                range_hi.unwrap()
            )));
        }
        Ok(RootModel {
            target,
            form,
            coefficient,
            range_lo,
            range_hi,
            provenance,
        })
    }

    pub fn coefficient(&self) -> Enclosure {
        self.coefficient.to_enclosure()
    }

    /// Whether `[lo, hi]` lies inside the model's range.
    pub fn covers(&self, lo: Decimal, hi: Decimal) -> bool {
        lo >= self.range_lo && self.range_hi.is_none_or(|h| hi <= h)
    }

    /// Errors naming the model when `[lo, hi]` leaves its range.
    pub fn require(&self, lo: Decimal, hi: Decimal) -> Result<()> {
        if self.covers(lo, hi) {
            Ok(())
        } else {
            Err(Error::HypothesisRange {
                key: self.to_string(),
                reason: format!("[{lo}, {hi}] is outside the model range"),
            })
        }
    }

    /// The bound `c√X` or `c/√X` at `x > 0`.
    pub fn bound_at(&self, x: Enclosure) -> Result<Enclosure> {
        let root = x.sqrt()?;
        let c = self.coefficient();
        Ok(match self.form {
            ModelForm::TimesSqrt => c * root,
            ModelForm::OverSqrt => c.div(root)?,
        })
    }
}

impl fmt::Display for RootModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rhs = match self.form {
            ModelForm::TimesSqrt => format!("{}·√X", self.coefficient),
            ModelForm::OverSqrt => format!("{}/√X", self.coefficient),
        };
        let hi = self.range_hi.map_or("∞".to_string(), |h| h.to_string());
        write!(
            f,
            "|{}| <= {rhs} on [{}, {hi}] ({})",
            self.target.name(),
            self.range_lo,
            self.provenance.citation
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Decimal {
        s.parse().unwrap()
    }

    #[test]
    fn rejects_bad_models() {
        let p = Provenance::internal("test");
        assert!(RootModel::new(ModelTarget::M, ModelForm::TimesSqrt, d("0"), d("1"), None, p.clone()).is_err());
        assert!(RootModel::new(ModelTarget::M, ModelForm::TimesSqrt, d("1"), d("10"), Some(d("9")), p).is_err());
    }

    #[test]
    fn range_checks_are_exact() {
        let m = RootModel::new(
            ModelTarget::M,
            ModelForm::TimesSqrt,
            d("0.571"),
            d("33"),
            Some(d("1e16")),
            Provenance::external("Hurst"),
        )
        .unwrap();
        assert!(m.covers(d("33"), d("1e16")));
        assert!(!m.covers(d("32"), d("100")));
        assert!(matches!(m.require(d("33"), d("1.00000001e16")), Err(Error::HypothesisRange { .. })));
        assert!(m.bound_at(Enclosure::point(100.0)).unwrap().contains(5.71));
    }
}
