//! Per-integer model checks and checkpointed envelope checks.

use serde::Serialize;

use super::engine::run_segments;
use super::{Accumulator, Mode, SeriesKind, Summatory};
use crate::certify::model::{ModelForm, ModelTarget, RootModel};
use crate::decimal::Decimal;
use crate::enclosure::{Enclosure, FixedSum};
use crate::error::{Error, Result};
use crate::sieve::{sieve_mangoldt, sieve_mobius};

/// Violations and inconclusive points listed individually; the rest are counted.
const MAX_LISTED: usize = 1000;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanReport {
    pub range: (u64, u64),
    pub claim: String,
    pub model: Option<RootModel>,
    /// Points at which the claim was evaluated.
    pub checked: u64,
    /// Largest ratio seen: |f|/√x, |f|·√x, or the envelope utilization.
    pub max_ratio: Enclosure,
    pub argmax_x: u64,
    pub violations: Vec<u64>,
    pub violation_count: u64,
    pub inconclusive: Vec<u64>,
    pub inconclusive_count: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// `Pass` if `value <= bound` certainly, `Fail` if `value > bound` certainly.
pub(crate) fn compare(value: Enclosure, bound: Enclosure) -> Verdict {
    if value.hi() <= bound.lo() {
        Verdict::Pass
    } else if value.lo() > bound.hi() {
        Verdict::Fail
    } else {
        Verdict::Inconclusive
    }
}

impl ScanReport {
    pub(crate) fn new(range: (u64, u64), claim: String, model: Option<RootModel>) -> Self {
        ScanReport {
            range,
            claim,
            model,
            checked: 0,
            max_ratio: Enclosure::ZERO,
            argmax_x: range.0,
            violations: Vec::new(),
            violation_count: 0,
            inconclusive: Vec::new(),
            inconclusive_count: 0,
        }
    }

    fn empty() -> Self {
        ScanReport::new((0, 0), String::new(), None)
    }

    /// True when every point was checked conclusively and passed.
    pub fn passed(&self) -> bool {
        self.violation_count == 0 && self.inconclusive_count == 0
    }

    pub(crate) fn record(&mut self, x: u64, ratio: Enclosure, verdict: Verdict) {
        self.checked += 1;
        if self.checked == 1 || ratio.hi() > self.max_ratio.hi() {
            self.max_ratio = ratio;
            self.argmax_x = x;
        }
        match verdict {
            Verdict::Pass => {}
            Verdict::Fail => {
                self.violation_count += 1;
                if self.violations.len() < MAX_LISTED {
                    self.violations.push(x);
                }
            }
            Verdict::Inconclusive => {
                self.inconclusive_count += 1;
                if self.inconclusive.len() < MAX_LISTED {
                    self.inconclusive.push(x);
                }
            }
        }
    }

    /// Appends a later, disjoint part of the same scan.
    fn absorb(&mut self, part: ScanReport) {
        if part.checked == 0 {
            return;
        }
        if self.checked == 0 || part.max_ratio.hi() > self.max_ratio.hi() {
            self.max_ratio = part.max_ratio;
            self.argmax_x = part.argmax_x;
        }
        self.checked += part.checked;
        self.violation_count += part.violation_count;
        self.inconclusive_count += part.inconclusive_count;
        let room = MAX_LISTED - self.violations.len();
        self.violations.extend(part.violations.into_iter().take(room));
        let room = MAX_LISTED - self.inconclusive.len();
        self.inconclusive.extend(part.inconclusive.into_iter().take(room));
    }
}

/// Constants of the envelope `−a − b log X <= Σ_{k≤X} Λ(k)/√k − 2√X <= b log X − c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnvelopeConstants {
    pub a: Decimal,
    pub b: Decimal,
    pub c: Decimal,
}

impl Default for EnvelopeConstants {
    fn default() -> Self {
        EnvelopeConstants {
            a: Decimal::new(544, -2),
            b: Decimal::new(47, -2),
            c: Decimal::new(119, -2),
        }
    }
}

/// `lo`, the multiples of `stride` strictly between, and `hi`.
fn checkpoint_grid(lo: u64, hi: u64, stride: u64) -> Vec<u64> {
    let stride = stride.max(1);
    let mut pts = vec![lo];
    let mut m = (lo / stride + 1) * stride;
    while m < hi {
        pts.push(m);
        m += stride;
    }
    if hi > lo {
        pts.push(hi);
    }
    pts
}

fn require_range(lo: u64, hi: u64) -> Result<()> {
    if lo == 0 || lo > hi {
        return Err(Error::InvalidArgument(format!("invalid scan range [{lo}, {hi}]")));
    }
    Ok(())
}

impl Summatory {
    /// Checks `model` at every integer of `[lo, hi]`.
    ///
    /// M is checked exactly. For ψ the check runs at the two ends of every
    /// run on which ψ is constant: `ψ(x) − x` decreases along a run, so its
    /// maximum is at the run's first integer and its minimum at the last.
    /// m₁ is checked at every integer with enclosures.
    pub fn verify_root_model(&self, model: &RootModel, lo: u64, hi: u64) -> Result<ScanReport> {
        require_range(lo, hi)?;
        model.require(Decimal::from_u64(lo), Decimal::from_u64(hi))?;
        self.config().check_ceiling(hi)?;
        let report = ScanReport::new((lo, hi), model.to_string(), Some(model.clone()));
        match model.target {
            ModelTarget::M => self.verify_mertens_model(model, lo, hi, report),
            ModelTarget::PsiMinusX => self.verify_psi_model(model, lo, hi, report),
            ModelTarget::M1 => self.verify_m1_model(model, lo, hi, report),
        }
    }

    fn verify_mertens_model(&self, model: &RootModel, lo: u64, hi: u64, mut report: ScanReport) -> Result<ScanReport> {
        let (num, den) = model
            .coefficient
            .to_ratio()
            .ok_or_else(|| Error::InvalidArgument(format!("coefficient {} too large", model.coefficient)))?;
        let (num2, den2) = ((num * num) as u128, (den * den) as u128);
        let form = model.form;
        run_segments(
            self.config(),
            1,
            hi,
            0i64,
            |seg, table| {
                let block = sieve_mobius(seg, table)?;
                let total = block.sum();
                Ok((block, total))
            },
            |a, b| a + b,
            |block, offset| {
                let mut part = ScanReport::empty();
                let mut m = *offset;
                // Exact argmax: maximize M²/x (or M²·x).
                let mut best: Option<(u128, u64)> = None;
                for (n, mu) in block.iter() {
                    m += mu as i64;
                    if n < lo {
                        continue;
                    }
                    let sq = (m as i128 * m as i128) as u128;
                    let ok = match form {
                        ModelForm::TimesSqrt => sq * den2 <= num2 * n as u128,
                        ModelForm::OverSqrt => sq * n as u128 * den2 <= num2,
                    };
                    let better = match (form, best) {
                        (_, None) => true,
                        (ModelForm::TimesSqrt, Some((bs, bx))) => sq * bx as u128 > bs * n as u128,
                        (ModelForm::OverSqrt, Some((bs, bx))) => sq * n as u128 > bs * bx as u128,
                    };
                    if better {
                        best = Some((sq, n));
                    }
                    part.checked += 1;
                    if !ok {
                        part.violation_count += 1;
                        if part.violations.len() < MAX_LISTED {
                            part.violations.push(n);
                        }
                    }
                }
                if let Some((sq, x)) = best {
                    let abs_m = Enclosure::from_u64((sq as f64).sqrt().round() as u64);
                    let root = Enclosure::from_u64(x).sqrt().expect("x > 0");
                    part.max_ratio = match form {
                        ModelForm::TimesSqrt => abs_m.div(root).expect("x > 0"),
                        ModelForm::OverSqrt => abs_m * root,
                    };
                    part.argmax_x = x;
                }
                part
            },
            |part| {
                report.absorb(part);
                Ok(())
            },
        )?;
        Ok(report)
    }

    fn verify_psi_model(&self, model: &RootModel, lo: u64, hi: u64, mut report: ScanReport) -> Result<ScanReport> {
        let c = model.coefficient();
        let form = model.form;
        let check = |part: &mut ScanReport, x: u64, psi: &FixedSum| {
            if x < lo {
                return;
            }
            let xe = Enclosure::from_u64(x);
            let dev = (psi.to_enclosure() - xe).abs();
            let root = xe.sqrt().expect("x > 0");
            let (ratio, bound) = match form {
                ModelForm::TimesSqrt => (dev.div(root).expect("x > 0"), c * root),
                ModelForm::OverSqrt => (dev * root, c.div(root).expect("x > 0")),
            };
            part.record(x, ratio, compare(dev, bound));
        };
        run_segments(
            self.config(),
            1,
            hi,
            FixedSum::ZERO,
            |seg, table| {
                let block = sieve_mangoldt(seg, table)?;
                let mut total = FixedSum::ZERO;
                for e in &block.entries {
                    total.add(Enclosure::ln_u64(e.p));
                }
                Ok((block, total))
            },
            |a, b| a.combined(b),
            |block, offset| {
                let mut part = ScanReport::empty();
                let (seg_lo, seg_hi) = (block.segment.lo(), block.segment.hi());
                let mut candidates = vec![seg_lo, seg_hi - 1];
                if (seg_lo..seg_hi).contains(&lo) {
                    candidates.push(lo);
                }
                // Between jumps |ψ(t) − t|/√t peaks at the left end or in the
                // left limit at the next jump, so those two cover the reals.
                candidates.extend(block.entries.iter().map(|e| e.n));
                candidates.sort_unstable();
                candidates.dedup();
                let mut psi = *offset;
                let mut i = 0;
                for x in candidates {
                    if x > lo && i < block.entries.len() && block.entries[i].n == x {
                        check(&mut part, x, &psi);
                    }
                    while i < block.entries.len() && block.entries[i].n <= x {
                        psi.add(Enclosure::ln_u64(block.entries[i].p));
                        i += 1;
                    }
                    check(&mut part, x, &psi);
                }
                part
            },
            |part| {
                report.absorb(part);
                Ok(())
            },
        )?;
        Ok(report)
    }

    fn verify_m1_model(&self, model: &RootModel, lo: u64, hi: u64, mut report: ScanReport) -> Result<ScanReport> {
        let c = model.coefficient();
        let form = model.form;
        run_segments(
            self.config(),
            1,
            hi,
            (FixedSum::ZERO, 0i64),
            |seg, table| {
                let block = sieve_mobius(seg, table)?;
                let mut m = FixedSum::ZERO;
                let mut big = 0i64;
                for (n, mu) in block.iter() {
                    if mu != 0 {
                        let w = Enclosure::recip_u64(n);
                        if mu > 0 {
                            m.add(w)
                        } else {
                            m.sub(w)
                        }
                        big += mu as i64;
                    }
                }
                Ok((block, (m, big)))
            },
            |a, b| (a.0.combined(&b.0), a.1 + b.1),
            |block, offset| {
                let mut part = ScanReport::empty();
                let (mut m, mut big) = *offset;
                for (n, mu) in block.iter() {
                    if mu != 0 {
                        let w = Enclosure::recip_u64(n);
                        if mu > 0 {
                            m.add(w)
                        } else {
                            m.sub(w)
                        }
                        big += mu as i64;
                    }
                    if n < lo {
                        continue;
                    }
                    let xe = Enclosure::from_u64(n);
                    let m1 = Accumulator::Smoothed { m, mertens: big }.value(n).to_enclosure().abs();
                    let root = xe.sqrt().expect("x > 0");
                    let (ratio, bound) = match form {
                        ModelForm::TimesSqrt => (m1.div(root).expect("x > 0"), c * root),
                        ModelForm::OverSqrt => (m1 * root, c.div(root).expect("x > 0")),
                    };
                    part.record(n, ratio, compare(m1, bound));
                }
                part
            },
            |part| {
                report.absorb(part);
                Ok(())
            },
        )?;
        Ok(report)
    }

    /// Checks `−a − b log X <= Σ_{k≤X} Λ(k)/√k − 2√X <= b log X − c` at `lo`,
    /// every multiple of `stride` in between, and `hi`. The reported ratio is
    /// the distance from the envelope's midline in units of its half-width.
    pub fn lambda_sqrt_envelope_check(
        &self,
        lo: u64,
        hi: u64,
        stride: u64,
        env: EnvelopeConstants,
    ) -> Result<ScanReport> {
        require_range(lo, hi)?;
        let claim = format!(
            "-{} - {} log X <= sum Λ(k)/√k - 2√X <= {} log X - {}",
            env.a, env.b, env.b, env.c
        );
        let points = checkpoint_grid(lo, hi, stride);
        let values = self.values_at(SeriesKind::LambdaOverSqrtK, Mode::Rigorous, &points)?;
        let (a, b, c) = (env.a.to_enclosure(), env.b.to_enclosure(), env.c.to_enclosure());
        let mut report = ScanReport::new((lo, hi), claim, None);
        for (&x, v) in points.iter().zip(values) {
            let xe = Enclosure::from_u64(x);
            let log_x = xe.ln()?;
            let d = v.to_enclosure() - Enclosure::point(2.0) * xe.sqrt()?;
            let upper = b * log_x - c;
            let lower = -a - b * log_x;
            let mid = (upper + lower).div(Enclosure::point(2.0))?;
            let half = (upper - lower).div(Enclosure::point(2.0))?;
            let verdict = match (compare(d, upper), compare(lower, d)) {
                (Verdict::Pass, Verdict::Pass) => Verdict::Pass,
                (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
                _ => Verdict::Inconclusive,
            };
            let ratio = if half.lo() > 0.0 {
                (d - mid).abs().div(half)?
            } else {
                Enclosure::point(f64::MAX)
            };
            report.record(x, ratio, verdict);
        }
        Ok(report)
    }

    /// Checks `Σ_{k≤y} Λ(k)/k <= log y − 0.5` at `lo`, multiples of `stride`, and `hi`.
    pub fn lambda_over_k_check(&self, lo: u64, hi: u64, stride: u64) -> Result<ScanReport> {
        require_range(lo, hi)?;
        let points = checkpoint_grid(lo, hi, stride);
        let values = self.values_at(SeriesKind::LambdaOverK, Mode::Rigorous, &points)?;
        let mut report = ScanReport::new((lo, hi), "sum Λ(k)/k <= log y - 0.5".into(), None);
        for (&y, v) in points.iter().zip(values) {
            let bound = Enclosure::from_u64(y).ln()? - Enclosure::point(0.5);
            let s = v.to_enclosure();
            let ratio = if bound.lo() > 0.0 {
                s.div(bound)?
            } else {
                Enclosure::point(f64::MAX)
            };
            report.record(y, ratio, compare(s, bound));
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::model::Provenance;
    use crate::summatory::ScanConfig;

    fn d(s: &str) -> Decimal {
        s.parse().unwrap()
    }

    fn model(target: ModelTarget, form: ModelForm, c: &str, lo: &str) -> RootModel {
        RootModel::new(target, form, d(c), d(lo), None, Provenance::internal("test")).unwrap()
    }

    fn engine() -> Summatory {
        Summatory::new(ScanConfig::default().with_segment_size(1 << 14))
    }

    #[test]
    fn mertens_model_small_ranges() {
        let s = engine();
        let m = model(ModelTarget::M, ModelForm::TimesSqrt, "0.571", "1");
        let r = s.verify_root_model(&m, 1, 32).unwrap();
        assert!(!r.passed());
        assert_eq!(r.violations[0], 1);
        let m = model(ModelTarget::M, ModelForm::TimesSqrt, "0.571", "33");
        let r = s.verify_root_model(&m, 33, 200_000).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert!(r.max_ratio.hi() <= 0.571);
        assert_eq!(r.checked, 200_000 - 32);
    }

    #[test]
    fn mertens_model_argmax_matches_brute_force() {
        let s = engine();
        let m = model(ModelTarget::M, ModelForm::TimesSqrt, "1", "2");
        let r = s.verify_root_model(&m, 2, 50_000).unwrap();
        let series = s.mertens_scan(50_000, 1).unwrap();
        let (bx, _) = series
            .checkpoints
            .iter()
            .skip(1)
            .map(|c| (c.x, (c.value.as_exact().unwrap() as f64).abs() / (c.x as f64).sqrt()))
            .fold((0, -1.0), |acc, (x, r)| if r > acc.1 { (x, r) } else { acc });
        assert_eq!(r.argmax_x, bx);
    }

    #[test]
    fn psi_model_small_range() {
        let s = engine();
        let m = model(ModelTarget::PsiMinusX, ModelForm::TimesSqrt, "0.94", "11");
        let r = s.verify_root_model(&m, 11, 300_000).unwrap();
        assert!(r.passed(), "{:?} {:?}", r.violations, r.inconclusive);
        // A coefficient far too small must fail early.
        let tight = model(ModelTarget::PsiMinusX, ModelForm::TimesSqrt, "0.01", "11");
        assert!(!s.verify_root_model(&tight, 11, 1000).unwrap().passed());
    }

    #[test]
    fn psi_candidates_cover_the_reals() {
        // Brute force over integers and the left limit at every jump.
        let s = engine();
        let m = model(ModelTarget::PsiMinusX, ModelForm::TimesSqrt, "5", "2");
        let r = s.verify_root_model(&m, 2, 20_000).unwrap();
        let series = s.psi_scan(20_000, 1, Mode::Rigorous).unwrap();
        let psi: Vec<f64> = series.checkpoints.iter().map(|c| c.value.to_enclosure().mid()).collect();
        let mut best = (0, -1.0);
        for x in 2..=20_000u64 {
            let (now, before) = (psi[x as usize - 1], psi[x as usize - 2]);
            let mut dev = (now - x as f64).abs();
            if x > 2 && now != before {
                dev = dev.max((before - x as f64).abs());
            }
            let ratio = dev / (x as f64).sqrt();
            if ratio > best.1 {
                best = (x, ratio);
            }
        }
        assert_eq!(r.argmax_x, best.0);
        assert!(r.max_ratio.contains(best.1) || (r.max_ratio.mid() - best.1).abs() < 1e-12);
    }

    #[test]
    fn m1_model_small_range() {
        let s = engine();
        let m = model(ModelTarget::M1, ModelForm::OverSqrt, "0.129", "2");
        assert!(!s.verify_root_model(&m, 2, 1000).unwrap().passed());
        let r = s.verify_root_model(&m, 5_000_000, 5_100_000).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(r.checked, 100_001);
    }

    #[test]
    fn refuses_ranges_outside_model() {
        let s = engine();
        let m = model(ModelTarget::M, ModelForm::TimesSqrt, "0.571", "33");
        assert!(matches!(s.verify_root_model(&m, 10, 100), Err(Error::HypothesisRange { .. })));
    }

    #[test]
    fn envelopes_hold_on_small_ranges() {
        let s = engine();
        let r = s.lambda_sqrt_envelope_check(11, 200_000, 1000, EnvelopeConstants::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked, 201);
        let r = s.lambda_over_k_check(300, 100_000, 1000).unwrap();
        assert!(r.passed());
        assert!(r.max_ratio.hi() < 1.0);
    }

    #[test]
    fn envelope_at_eleven_is_nonempty() {
        let env = EnvelopeConstants::default();
        let l = Enclosure::point(11.0).ln().unwrap();
        let lower = -env.a.to_enclosure() - env.b.to_enclosure() * l;
        let upper = env.b.to_enclosure() * l - env.c.to_enclosure();
        assert!(lower.certainly_lt(&upper));
    }
}
