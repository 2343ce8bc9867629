//! The hypothesis ledger: named coefficients with validity ranges and provenance.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::model::{ModelForm, ModelTarget, Provenance, RootModel, Source};
use crate::decimal::Decimal;
use crate::enclosure::Enclosure;
use crate::error::{Error, Result};

/// The ledger shipped with the crate.
pub const BUILTIN_LEDGER: &str = include_str!("../../data/ledger.toml");

/// Keys every ledger must define.
pub const REQUIRED_KEYS: [&str; 24] = [
    "psi_root",
    "M_root",
    "m1_root",
    "m1_tail",
    "cdm",
    "faber_kadiri",
    "q_large",
    "q_small",
    "mu2_sqrt_log",
    "ramare_lambda_small",
    "ramare_lambda_large",
    "lambda_over_k_offset",
    "mu2_over_n_hi",
    "mu2_window_sqrt",
    "mu2_window_log",
    "lambda_sqrt_a",
    "lambda_sqrt_b",
    "lambda_sqrt_c",
    "lambda_sqrt_sharp",
    "mn_gap",
    "abs_log_head",
    "beta_rounded",
    "ramare_M_a",
    "ramare_M_b",
];

/// End point of a validity range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RangeBound {
    Value(Decimal),
    /// `exp(v)`
    Exp(Decimal),
    Infinity,
}

impl RangeBound {
    pub fn to_enclosure(&self) -> Option<Enclosure> {
        match self {
            RangeBound::Value(d) => Some(d.to_enclosure()),
            RangeBound::Exp(d) => d.to_enclosure().exp().ok(),
            RangeBound::Infinity => None,
        }
    }
}

impl FromStr for RangeBound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Ok(RangeBound::Infinity);
        }
        if let Some(inner) = s.strip_prefix("exp(").and_then(|r| r.strip_suffix(')')) {
            return Ok(RangeBound::Exp(inner.parse()?));
        }
        Ok(RangeBound::Value(s.parse()?))
    }
}

impl fmt::Display for RangeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RangeBound::Value(d) => write!(f, "{d}"),
            RangeBound::Exp(d) => write!(f, "exp({d})"),
            RangeBound::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for RangeBound {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which direction of change makes an entry a weaker hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sense {
    Upper,
    Lower,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LedgerEntry {
    pub key: String,
    pub value: Decimal,
    pub range: (RangeBound, RangeBound),
    pub sense: Sense,
    pub provenance: Provenance,
}

impl LedgerEntry {
    pub fn enclosure(&self) -> Enclosure {
        self.value.to_enclosure()
    }

    /// Whether `[lo, hi]` lies inside the validity range, decided conservatively.
    pub fn covers(&self, lo: Enclosure, hi: Enclosure) -> bool {
        let lo_ok = self.range.0.to_enclosure().is_none_or(|r| lo.lo() >= r.hi());
        let hi_ok = match self.range.1 {
            RangeBound::Infinity => true,
            b => b.to_enclosure().is_some_and(|r| hi.hi() <= r.lo()),
        };
        lo_ok && hi_ok
    }

    pub fn require(&self, lo: Enclosure, hi: Enclosure) -> Result<()> {
        if self.covers(lo, hi) {
            Ok(())
        } else {
            Err(Error::HypothesisRange {
                key: self.key.clone(),
                reason: format!(
                    "needed on [{:.6e}, {:.6e}], valid on [{}, {}]",
                    lo.lo(),
                    hi.hi(),
                    self.range.0,
                    self.range.1
                ),
            })
        }
    }

    fn render(&self) -> String {
        let source = match self.provenance.source {
            Source::Internal => "internal",
            Source::External => "external",
        };
        let sense = match self.sense {
            Sense::Upper => "upper",
            Sense::Lower => "lower",
        };
        format!(
            "[{}]\nvalue = {:?}\nrange = [{:?}, {:?}]\nsense = {sense:?}\nsource = {source:?}\ncitation = {:?}\n",
            self.key,
            self.value.to_string(),
            self.range.0.to_string(),
            self.range.1.to_string(),
            self.provenance.citation
        )
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    value: String,
    range: [String; 2],
    sense: Sense,
    source: Source,
    citation: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Ledger {
    entries: BTreeMap<String, LedgerEntry>,
}

impl Ledger {
    pub fn builtin() -> Self {
        Ledger::parse(BUILTIN_LEDGER).expect("the shipped ledger is valid")
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ledger::parse(&text).map_err(|e| match e {
            Error::Ledger(m) => Error::Ledger(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: BTreeMap<String, RawEntry> =
            toml::from_str(text).map_err(|e| Error::Ledger(e.to_string()))?;
        let mut entries = BTreeMap::new();
        for (key, r) in raw {
            let bad = |what: String| Error::Ledger(format!("entry `{key}`: {what}"));
            let value: Decimal = r.value.parse().map_err(|e| bad(format!("{e}")))?;
            let lo: RangeBound = r.range[0].parse().map_err(|e| bad(format!("{e}")))?;
            let hi: RangeBound = r.range[1].parse().map_err(|e| bad(format!("{e}")))?;
            if value.is_negative() {
                return Err(bad("negative value".into()));
            }
            if lo == RangeBound::Infinity {
                return Err(bad("range starts at infinity".into()));
            }
            if let (Some(a), Some(b)) = (lo.to_enclosure(), hi.to_enclosure()) {
                if a.lo() > b.hi() {
                    return Err(bad("empty range".into()));
                }
            }
            let provenance = Provenance {
                source: r.source,
                citation: r.citation,
            };
            entries.insert(
                key.clone(),
                LedgerEntry {
                    key,
                    value,
                    range: (lo, hi),
                    sense: r.sense,
                    provenance,
                },
            );
        }
        let missing: Vec<&str> = REQUIRED_KEYS
            .iter()
            .copied()
            .filter(|k| !entries.contains_key(*k))
            .collect();
        if !missing.is_empty() {
            return Err(Error::Ledger(format!("missing entries: {}", missing.join(", "))));
        }
        Ok(Ledger { entries })
    }

    pub fn get(&self, key: &str) -> Result<&LedgerEntry> {
        self.entries
            .get(key)
            .ok_or_else(|| Error::Ledger(format!("no entry `{key}`")))
    }

    pub fn value(&self, key: &str) -> Result<Enclosure> {
        Ok(self.get(key)?.enclosure())
    }

    pub fn entries(&self) -> impl Iterator<Item = &LedgerEntry> {
        self.entries.values()
    }

    /// Copy with one entry's value replaced.
    pub fn with_value(&self, key: &str, value: Decimal) -> Result<Ledger> {
        let mut out = self.clone();
        out.entries
            .get_mut(key)
            .ok_or_else(|| Error::Ledger(format!("no entry `{key}`")))?
            .value = value;
        Ok(out)
    }

    /// Copy with `key` moved by `percent` in its weakening direction
    /// (negative `percent` strengthens it).
    pub fn weakened(&self, key: &str, percent: i64) -> Result<Ledger> {
        let e = self.get(key)?;
        let signed = match e.sense {
            Sense::Upper => percent,
            Sense::Lower => -percent,
        };
        let factor = Decimal::new(100 + signed as i128, -2);
        let v = e
            .value
            .checked_mul(&factor)
            .ok_or_else(|| Error::Ledger(format!("cannot scale `{key}`")))?;
        self.with_value(key, v)
    }

    /// Square-root model built from an entry.
    pub fn root_model(&self, key: &str, target: ModelTarget, form: ModelForm) -> Result<RootModel> {
        let e = self.get(key)?;
        let bound = |b: RangeBound| match b {
            RangeBound::Value(d) => Ok(Some(d)),
            RangeBound::Infinity => Ok(None),
            RangeBound::Exp(_) => Err(Error::Ledger(format!("`{key}` needs a decimal range"))),
        };
        let lo = bound(e.range.0)?.expect("finite range start");
        RootModel::new(target, form, e.value, lo, bound(e.range.1)?, e.provenance.clone())
    }

    /// Canonical text form; the hash is taken over this.
    pub fn canonical(&self) -> String {
        self.entries.values().map(LedgerEntry::render).collect::<Vec<_>>().join("\n")
    }

    pub fn sha256(&self) -> String {
        Sha256::digest(self.canonical().as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_parses_and_round_trips() {
        let l = Ledger::builtin();
        assert_eq!(l.entries().count(), REQUIRED_KEYS.len());
        assert!(l.get("M_root").unwrap().value == "0.571".parse().unwrap());
        let again = Ledger::parse(&l.canonical()).unwrap();
        assert_eq!(again, l);
        assert_eq!(again.sha256(), l.sha256());
        assert_eq!(l.sha256().len(), 64);
    }

    #[test]
    fn weakening_follows_sense() {
        let l = Ledger::builtin();
        let up = l.weakened("M_root", 1).unwrap();
        assert_eq!(up.get("M_root").unwrap().value, "0.57671".parse().unwrap());
        let low = l.weakened("cdm", 1).unwrap();
        assert_eq!(low.get("cdm").unwrap().value, "4301.55".parse().unwrap());
        assert_ne!(up.sha256(), l.sha256());
    }

    #[test]
    fn ranges_and_errors() {
        let l = Ledger::builtin();
        let fk = l.get("faber_kadiri").unwrap();
        assert_eq!(fk.range.0, RangeBound::Exp("40".parse().unwrap()));
        assert!(!fk.covers(Enclosure::point(1e17), Enclosure::point(1e18)));
        assert!(fk.covers(Enclosure::point(3e17), Enclosure::point(1e30)));
        let m = l.get("M_root").unwrap();
        assert!(m.require(Enclosure::point(33.0), Enclosure::point(1e16)).is_ok());
        assert!(matches!(
            m.require(Enclosure::point(32.0), Enclosure::point(100.0)),
            Err(Error::HypothesisRange { .. })
        ));
        let model = l.root_model("M_root", ModelTarget::M, ModelForm::TimesSqrt).unwrap();
        assert_eq!(model.range_hi, Some("1e16".parse().unwrap()));
        assert!(Ledger::parse("[psi_root]\nvalue = \"0.94\"").is_err());
        let missing = BUILTIN_LEDGER.replace("[cdm]", "[cdm_renamed]");
        assert!(matches!(Ledger::parse(&missing), Err(Error::Ledger(m)) if m.contains("cdm")));
    }
}
