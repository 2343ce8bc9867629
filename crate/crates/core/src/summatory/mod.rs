//! Streamed summatory functions of μ and Λ.
//!
//! Integer-valued series (M, Q) are exact. Real-valued series are either
//! rigorous (per-term enclosures summed exactly on a fixed-point grid) or
//! fast (compensated floats with an error estimate). Both give the same
//! answer for any segment size, batch size or worker count.

mod accum;
pub mod checkpoint;
mod threshold;
mod engine;
pub(crate) mod verify;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::enclosure::{Enclosure, FixedSum};
use crate::error::{Error, Result};
use crate::sieve::{sieve_mangoldt, sieve_mobius, PrimePower, PrimeTable, Segment};

pub use accum::{Accumulator, Compensated, SeriesValue};
pub use engine::{ScanConfig, DEFAULT_SCAN_CEILING, DEFAULT_STRIDE, SCAN_CEILING_ENV};
pub use threshold::ExceedanceState;
pub use verify::{EnvelopeConstants, ScanReport};

pub(crate) use engine::{run_segments, walk_dense, MarkPlan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SeriesKind {
    /// Σ μ(n)
    M,
    /// Σ Λ(n)
    Psi,
    /// Σ μ(n) log n
    N,
    /// Σ μ(n)/n
    SmallM,
    /// m(x) − M(x)/x
    M1,
    /// Σ μ²(n)
    Q,
    LambdaOverK,
    LambdaOverSqrtK,
    Mu2OverSqrt,
    Mu2OverN,
    /// Σ |M(n)| log(1 + 1/n)
    AbsMLogWeight,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 11] = [
        SeriesKind::M,
        SeriesKind::Psi,
        SeriesKind::N,
        SeriesKind::SmallM,
        SeriesKind::M1,
        SeriesKind::Q,
        SeriesKind::LambdaOverK,
        SeriesKind::LambdaOverSqrtK,
        SeriesKind::Mu2OverSqrt,
        SeriesKind::Mu2OverN,
        SeriesKind::AbsMLogWeight,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SeriesKind::M => "M",
            SeriesKind::Psi => "psi",
            SeriesKind::N => "N",
            SeriesKind::SmallM => "m",
            SeriesKind::M1 => "m1",
            SeriesKind::Q => "Q",
            SeriesKind::LambdaOverK => "lambda_over_k",
            SeriesKind::LambdaOverSqrtK => "lambda_over_sqrt_k",
            SeriesKind::Mu2OverSqrt => "mu2_over_sqrt",
            SeriesKind::Mu2OverN => "mu2_over_n",
            SeriesKind::AbsMLogWeight => "absM_log_weight",
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, SeriesKind::M | SeriesKind::Q)
    }

    /// Kinds that only exist in rigorous form.
    fn rigorous_only(&self) -> bool {
        matches!(self, SeriesKind::M1 | SeriesKind::AbsMLogWeight)
    }

    fn uses_mangoldt(&self) -> bool {
        matches!(
            self,
            SeriesKind::Psi | SeriesKind::LambdaOverK | SeriesKind::LambdaOverSqrtK
        )
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown series {s:?}")))
    }
}

/// Arithmetic used for real-valued series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Fast,
    #[default]
    Rigorous,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Fast => "fast",
            Mode::Rigorous => "rigorous",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Mode::Fast),
            "rigorous" => Ok(Mode::Rigorous),
            _ => Err(Error::InvalidArgument(format!("unknown mode {s:?}"))),
        }
    }
}

/// Running value at `x`, with the raw state needed to resume after it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Checkpoint {
    pub x: u64,
    pub value: SeriesValue,
    pub state: Accumulator,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummatorySeries {
    pub kind: SeriesKind,
    pub mode: Mode,
    pub stride: u64,
    /// Strictly increasing in `x`; the last one is at `final_x`.
    pub checkpoints: Vec<Checkpoint>,
    pub final_x: u64,
}

impl SummatorySeries {
    pub fn final_value(&self) -> Option<SeriesValue> {
        self.checkpoints.last().map(|c| c.value)
    }

    pub fn value_at(&self, x: u64) -> Option<SeriesValue> {
        let i = self.checkpoints.binary_search_by_key(&x, |c| c.x).ok()?;
        Some(self.checkpoints[i].value)
    }
}

/// Scans summatory functions within a [`ScanConfig`].
#[derive(Debug, Clone, Default)]
pub struct Summatory {
    cfg: ScanConfig,
}

impl Summatory {
    pub fn new(cfg: ScanConfig) -> Self {
        Summatory { cfg }
    }

    pub fn config(&self) -> &ScanConfig {
        &self.cfg
    }

    pub fn mertens_scan(&self, x: u64, stride: u64) -> Result<SummatorySeries> {
        self.scan(SeriesKind::M, Mode::Rigorous, x, stride)
    }

    pub fn psi_scan(&self, x: u64, stride: u64, mode: Mode) -> Result<SummatorySeries> {
        self.scan(SeriesKind::Psi, mode, x, stride)
    }

    pub fn n_scan(&self, x: u64, stride: u64, mode: Mode) -> Result<SummatorySeries> {
        self.scan(SeriesKind::N, mode, x, stride)
    }

    /// Values at every multiple of `stride` up to `x`, and at `x`.
    pub fn scan(&self, kind: SeriesKind, mode: Mode, x: u64, stride: u64) -> Result<SummatorySeries> {
        self.scan_resumable(kind, mode, x, stride, None, |_| Ok(()))
    }

    /// Like [`scan`](Self::scan), optionally continuing after `resume`; every
    /// new checkpoint is passed to `sink` in order. The returned series holds
    /// only the checkpoints computed by this call.
    pub fn scan_resumable(
        &self,
        kind: SeriesKind,
        mode: Mode,
        x: u64,
        stride: u64,
        resume: Option<&Checkpoint>,
        mut sink: impl FnMut(&Checkpoint) -> Result<()>,
    ) -> Result<SummatorySeries> {
        require_positive(x)?;
        if stride == 0 {
            return Err(Error::InvalidArgument("checkpoint stride must be positive".into()));
        }
        let mode = effective_mode(kind, mode);
        let (first, init) = match resume {
            None => (1, zero_state(kind, mode)),
            Some(c) => {
                if mode == Mode::Fast {
                    return Err(Error::IncompatibleCheckpoint(
                        "fast-mode sums depend on the segment grid and cannot be resumed bit-exactly; use rigorous mode".into(),
                    ));
                }
                if std::mem::discriminant(&c.state) != std::mem::discriminant(&zero_state(kind, mode)) {
                    return Err(Error::IncompatibleCheckpoint(format!(
                        "state {} does not belong to a {kind} scan",
                        c.state.encode()
                    )));
                }
                if c.x > x {
                    return Err(Error::IncompatibleCheckpoint(format!(
                        "checkpoint at {} lies beyond the target {x}",
                        c.x
                    )));
                }
                (c.x + 1, c.state)
            }
        };
        let mut checkpoints = Vec::new();
        let plan = MarkPlan::Stride { stride, last: x };
        self.run_series(kind, mode, first, x, init, plan, &mut |c| {
            sink(&c)?;
            checkpoints.push(c);
            Ok(())
        })?;
        Ok(SummatorySeries {
            kind,
            mode,
            stride,
            checkpoints,
            final_x: x,
        })
    }

    /// Values at the given points, which must be strictly increasing.
    pub fn values_at(&self, kind: SeriesKind, mode: Mode, points: &[u64]) -> Result<Vec<SeriesValue>> {
        if points.first() == Some(&0) || points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "points must be positive and strictly increasing".into(),
            ));
        }
        let Some(&last) = points.last() else {
            return Ok(Vec::new());
        };
        let mode = effective_mode(kind, mode);
        let mut out = Vec::with_capacity(points.len());
        self.run_series(kind, mode, 1, last, zero_state(kind, mode), MarkPlan::Points(points), &mut |c| {
            out.push(c.value);
            Ok(())
        })?;
        Ok(out)
    }

    pub fn value_at(&self, kind: SeriesKind, mode: Mode, x: u64) -> Result<SeriesValue> {
        Ok(self.values_at(kind, mode, &[x])?[0])
    }

    /// m₁(x) = Σ_{n≤x} (μ(n)/n)(1 − n/x), evaluated as m(x) − M(x)/x.
    pub fn m1_at(&self, x: u64) -> Result<Enclosure> {
        Ok(self.value_at(SeriesKind::M1, Mode::Rigorous, x)?.to_enclosure())
    }

    /// m₁ at a rational point `num/den >= 1`: m(⌊t⌋) − M(⌊t⌋)/t.
    pub fn m1_at_ratio(&self, num: u64, den: u64) -> Result<Enclosure> {
        if den == 0 || num < den {
            return Err(Error::InvalidArgument(format!("m1 needs t = {num}/{den} >= 1")));
        }
        let floor = num / den;
        let m = self.value_at(SeriesKind::SmallM, Mode::Rigorous, floor)?.to_enclosure();
        let big_m = self.value_at(SeriesKind::M, Mode::Rigorous, floor)?.to_enclosure();
        let t = Enclosure::from_u64(num).div(Enclosure::from_u64(den))?;
        Ok(m.checked_sub(big_m.div(t)?)?)
    }

    /// Rigorous enclosure of one of the weighted sums at `x`.
    pub fn weighted_sum(&self, kind: SeriesKind, x: u64) -> Result<Enclosure> {
        match kind {
            SeriesKind::LambdaOverK
            | SeriesKind::LambdaOverSqrtK
            | SeriesKind::Mu2OverSqrt
            | SeriesKind::Mu2OverN
            | SeriesKind::AbsMLogWeight => Ok(self.value_at(kind, Mode::Rigorous, x)?.to_enclosure()),
            _ => Err(Error::InvalidArgument(format!("{kind} is not a weighted sum"))),
        }
    }

    fn run_series(
        &self,
        kind: SeriesKind,
        mode: Mode,
        first: u64,
        last: u64,
        init: Accumulator,
        plan: MarkPlan<'_>,
        sink: &mut dyn FnMut(Checkpoint) -> Result<()>,
    ) -> Result<Accumulator> {
        if kind == SeriesKind::AbsMLogWeight {
            return self.run_abs_log(first, last, init, plan, sink);
        }
        run_segments(
            &self.cfg,
            first,
            last,
            init,
            |seg, table| produce(kind, mode, seg, table, &plan),
            |a, b| a.combine(b),
            |marks, offset| {
                marks
                    .into_iter()
                    .map(|(x, local)| {
                        let state = offset.combine(&local);
                        Checkpoint {
                            x,
                            value: state.value(x),
                            state,
                        }
                    })
                    .collect::<Vec<_>>()
            },
            |batch| batch.into_iter().try_for_each(&mut *sink),
        )
    }

    /// |M(n)| depends on the running M, so this one is sequential.
    fn run_abs_log(
        &self,
        first: u64,
        last: u64,
        init: Accumulator,
        plan: MarkPlan<'_>,
        sink: &mut dyn FnMut(Checkpoint) -> Result<()>,
    ) -> Result<Accumulator> {
        self.cfg.check_ceiling(last)?;
        let Accumulator::AbsLog { mertens, sum } = init else {
            unreachable!("abs-log scans start from an abs-log state");
        };
        let mut state = (mertens, sum);
        if first > last {
            return Ok(init);
        }
        let table = PrimeTable::for_range_end(last + 1);
        for seg in Segment::tile(first, last + 1, self.cfg.segment_size) {
            let block = sieve_mobius(seg, &table)?;
            let lo = seg.lo();
            let marks = plan.marks_in(lo, seg.hi());
            let (snaps, end) = walk_dense(lo, seg.hi(), &marks, state, |(m, s), n| {
                *m += block.values[(n - lo) as usize] as i64;
                if *m != 0 {
                    let w = Enclosure::recip_u64(n).ln_1p().expect("1/n > -1");
                    s.add(w * Enclosure::from_i64(m.abs()));
                }
            });
            for (x, (mertens, sum)) in snaps {
                let state = Accumulator::AbsLog { mertens, sum };
                sink(Checkpoint {
                    x,
                    value: state.value(x),
                    state,
                })?;
            }
            state = end;
        }
        Ok(Accumulator::AbsLog {
            mertens: state.0,
            sum: state.1,
        })
    }
}

fn require_positive(x: u64) -> Result<()> {
    if x == 0 {
        Err(Error::InvalidArgument("summatory functions start at x = 1".into()))
    } else {
        Ok(())
    }
}

fn effective_mode(kind: SeriesKind, mode: Mode) -> Mode {
    if kind.is_exact() || kind.rigorous_only() {
        Mode::Rigorous
    } else {
        mode
    }
}

pub(crate) fn zero_state(kind: SeriesKind, mode: Mode) -> Accumulator {
    match kind {
        SeriesKind::M | SeriesKind::Q => Accumulator::Exact(0),
        SeriesKind::M1 => Accumulator::Smoothed {
            m: FixedSum::ZERO,
            mertens: 0,
        },
        SeriesKind::AbsMLogWeight => Accumulator::AbsLog {
            mertens: 0,
            sum: FixedSum::ZERO,
        },
        _ => match mode {
            Mode::Rigorous => Accumulator::Fixed(FixedSum::ZERO),
            Mode::Fast => Accumulator::Fast(Compensated::ZERO),
        },
    }
}

type Local = (Vec<(u64, Accumulator)>, Accumulator);

fn wrap<A>((marks, total): (Vec<(u64, A)>, A), f: impl Fn(A) -> Accumulator) -> Local {
    (marks.into_iter().map(|(x, a)| (x, f(a))).collect(), f(total))
}

/// Rigorous Λ weight of a prime power.
#[inline]
fn lambda_weight(kind: SeriesKind, e: &PrimePower) -> Enclosure {
    let log_p = Enclosure::ln_u64(e.p);
    match kind {
        SeriesKind::Psi => log_p,
        SeriesKind::LambdaOverK => log_p.div(Enclosure::from_u64(e.n)).expect("n > 0"),
        SeriesKind::LambdaOverSqrtK => log_p * Enclosure::recip_sqrt_u64(e.n),
        _ => unreachable!(),
    }
}

#[inline]
fn lambda_weight_fast(kind: SeriesKind, e: &PrimePower) -> f64 {
    let log_p = (e.p as f64).ln();
    match kind {
        SeriesKind::Psi => log_p,
        SeriesKind::LambdaOverK => log_p / e.n as f64,
        SeriesKind::LambdaOverSqrtK => log_p / (e.n as f64).sqrt(),
        _ => unreachable!(),
    }
}

/// Rigorous weight of a squarefree `n` (sign applied by the caller).
#[inline]
fn mobius_weight(kind: SeriesKind, n: u64) -> Enclosure {
    match kind {
        SeriesKind::N => Enclosure::ln_u64(n),
        SeriesKind::SmallM | SeriesKind::Mu2OverN => Enclosure::recip_u64(n),
        SeriesKind::Mu2OverSqrt => Enclosure::recip_sqrt_u64(n),
        _ => unreachable!(),
    }
}

#[inline]
fn mobius_weight_fast(kind: SeriesKind, n: u64) -> f64 {
    match kind {
        SeriesKind::N => (n as f64).ln(),
        SeriesKind::SmallM | SeriesKind::Mu2OverN => 1.0 / n as f64,
        SeriesKind::Mu2OverSqrt => 1.0 / (n as f64).sqrt(),
        _ => unreachable!(),
    }
}

fn produce(kind: SeriesKind, mode: Mode, seg: Segment, table: &PrimeTable, plan: &MarkPlan<'_>) -> Result<Local> {
    let (lo, hi) = (seg.lo(), seg.hi());
    let marks = plan.marks_in(lo, hi);
    if kind.uses_mangoldt() {
        let block = sieve_mangoldt(seg, table)?;
        let key = |e: &PrimePower| e.n;
        return Ok(match mode {
            Mode::Rigorous => wrap(
                engine::walk_sparse(&block.entries, key, &marks, FixedSum::ZERO, |a, e| {
                    a.add(lambda_weight(kind, e))
                }),
                Accumulator::Fixed,
            ),
            Mode::Fast => wrap(
                engine::walk_sparse(&block.entries, key, &marks, Compensated::ZERO, |a, e| {
                    a.add(lambda_weight_fast(kind, e))
                }),
                Accumulator::Fast,
            ),
        });
    }
    let block = sieve_mobius(seg, table)?;
    let v = &block.values;
    let mu = |n: u64| v[(n - lo) as usize];
    let signed = matches!(kind, SeriesKind::N | SeriesKind::SmallM);
    Ok(match (kind, mode) {
        (SeriesKind::M, _) => wrap(walk_dense(lo, hi, &marks, 0i64, |a, n| *a += mu(n) as i64), Accumulator::Exact),
        (SeriesKind::Q, _) => wrap(
            walk_dense(lo, hi, &marks, 0i64, |a, n| *a += (mu(n) != 0) as i64),
            Accumulator::Exact,
        ),
        (SeriesKind::M1, _) => wrap(
            walk_dense(lo, hi, &marks, (FixedSum::ZERO, 0i64), |(m, big), n| {
                let s = mu(n);
                if s != 0 {
                    let w = Enclosure::recip_u64(n);
                    if s > 0 {
                        m.add(w)
                    } else {
                        m.sub(w)
                    }
                    *big += s as i64;
                }
            }),
            |(m, mertens)| Accumulator::Smoothed { m, mertens },
        ),
        (_, Mode::Rigorous) => wrap(
            walk_dense(lo, hi, &marks, FixedSum::ZERO, |a, n| {
                let s = mu(n);
                if s != 0 {
                    let w = mobius_weight(kind, n);
                    if s > 0 || !signed {
                        a.add(w)
                    } else {
                        a.sub(w)
                    }
                }
            }),
            Accumulator::Fixed,
        ),
        (_, Mode::Fast) => wrap(
            walk_dense(lo, hi, &marks, Compensated::ZERO, |a, n| {
                let s = mu(n);
                if s != 0 {
                    let w = mobius_weight_fast(kind, n);
                    a.add(if signed { s as f64 * w } else { w })
                }
            }),
            Accumulator::Fast,
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sieve::oracle;

    fn small() -> Summatory {
        Summatory::new(ScanConfig::default().with_segment_size(64))
    }

    #[test]
    fn mertens_examples() {
        let s = small();
        assert_eq!(s.value_at(SeriesKind::M, Mode::Rigorous, 1).unwrap(), SeriesValue::Exact(1));
        assert_eq!(s.value_at(SeriesKind::M, Mode::Rigorous, 10).unwrap(), SeriesValue::Exact(-1));
        let brute: i64 = (1..=33).map(|n| oracle::mu(n) as i64).sum();
        assert_eq!(s.value_at(SeriesKind::M, Mode::Rigorous, 33).unwrap(), SeriesValue::Exact(brute));
    }

    #[test]
    fn psi_and_n_examples() {
        let s = small();
        let psi10 = 3.0 * 2f64.ln() + 2.0 * 3f64.ln() + 5f64.ln() + 7f64.ln();
        for mode in [Mode::Rigorous, Mode::Fast] {
            let v = s.value_at(SeriesKind::Psi, mode, 10).unwrap().to_enclosure();
            assert!(v.contains(psi10), "{v}");
            let n10 = s.value_at(SeriesKind::N, mode, 10).unwrap().to_enclosure();
            assert!(n10.contains(2f64.ln() - 7f64.ln()), "{n10}");
            assert!(s.value_at(SeriesKind::N, mode, 2).unwrap().to_enclosure().contains(-(2f64.ln())));
        }
        assert_eq!(s.value_at(SeriesKind::Psi, Mode::Rigorous, 1).unwrap().to_enclosure(), Enclosure::ZERO);
        assert_eq!(s.value_at(SeriesKind::N, Mode::Rigorous, 1).unwrap().to_enclosure(), Enclosure::ZERO);
        let psi11 = s.value_at(SeriesKind::Psi, Mode::Rigorous, 11).unwrap().to_enclosure();
        assert!((psi11 - Enclosure::point(11.0)).abs().hi() <= 0.94 * 11f64.sqrt());
    }

    #[test]
    fn m1_matches_rational_oracle() {
        let s = small();
        assert_eq!(s.m1_at(1).unwrap(), Enclosure::ZERO);
        // Σ μ(n)(x − n)/(n x) with exact rationals.
        use num_bigint::BigInt;
        use num_rational::BigRational;
        use num_traits::ToPrimitive;
        let x = 100i64;
        let exact: BigRational = (1..=x)
            .map(|n| BigRational::new(BigInt::from(oracle::mu(n as u64) as i64 * (x - n)), BigInt::from(n * x)))
            .sum();
        let approx = exact.to_f64().unwrap();
        let e = s.m1_at(100).unwrap();
        assert!(e.contains(approx), "{e} vs {approx}");
        assert!(e.width() < 1e-14);
    }

    #[test]
    fn weighted_sums_small_cases() {
        let s = small();
        assert_eq!(s.weighted_sum(SeriesKind::LambdaOverK, 1).unwrap(), Enclosure::ZERO);
        let w = s.weighted_sum(SeriesKind::AbsMLogWeight, 32).unwrap();
        assert!(w.lo() > 4.78 && w.hi() < 4.79, "{w}");
        assert!(s.weighted_sum(SeriesKind::M, 10).is_err());
    }

    #[test]
    fn telescoping_and_segment_independence() {
        let x = 5000;
        let reference = Summatory::new(ScanConfig::default().with_segment_size(1 << 20));
        for kind in [SeriesKind::M, SeriesKind::Q] {
            let a = reference.scan(kind, Mode::Rigorous, x, 1).unwrap();
            for seg in [7, 64, 1000] {
                let b = Summatory::new(ScanConfig::default().with_segment_size(seg))
                    .scan(kind, Mode::Rigorous, x, 1)
                    .unwrap();
                assert_eq!(a, b);
            }
            let mut prev = 0;
            for c in &a.checkpoints {
                let v = c.value.as_exact().unwrap();
                let mu = oracle::mu(c.x) as i64;
                let step = if kind == SeriesKind::M { mu } else { mu.abs() };
                assert_eq!(v - prev, step, "{kind} at {}", c.x);
                prev = v;
            }
        }
    }

    #[test]
    fn fast_values_lie_in_rigorous_enclosures() {
        let s = small();
        for kind in [SeriesKind::Psi, SeriesKind::N] {
            let r = s.scan(kind, Mode::Rigorous, 20_000, 1000).unwrap();
            let f = s.scan(kind, Mode::Fast, 20_000, 1000).unwrap();
            for (a, b) in r.checkpoints.iter().zip(&f.checkpoints) {
                let Accumulator::Fast(c) = b.state else { panic!() };
                assert!(a.value.to_enclosure().contains(c.value()), "{kind} at {}", a.x);
            }
        }
    }

    #[test]
    fn ceiling_and_arguments() {
        let s = Summatory::new(ScanConfig::default().with_ceiling(1000));
        assert!(matches!(s.mertens_scan(1001, 10), Err(Error::CeilingExceeded { .. })));
        assert!(s.mertens_scan(0, 10).is_err());
        assert!(s.mertens_scan(10, 0).is_err());
        assert!(s.values_at(SeriesKind::M, Mode::Rigorous, &[5, 3]).is_err());
    }

    #[test]
    fn resume_is_bit_exact() {
        let s = small();
        for kind in [SeriesKind::M, SeriesKind::Psi, SeriesKind::M1, SeriesKind::AbsMLogWeight] {
            let full = s.scan(kind, Mode::Rigorous, 3000, 100).unwrap();
            let first = s.scan(kind, Mode::Rigorous, 1234, 100).unwrap();
            let cut = first.checkpoints.last().unwrap();
            let rest = s
                .scan_resumable(kind, Mode::Rigorous, 3000, 100, Some(cut), |_| Ok(()))
                .unwrap();
            let tail: Vec<_> = full.checkpoints.iter().filter(|c| c.x > 1234).cloned().collect();
            assert_eq!(rest.checkpoints, tail, "{kind}");
        }
        let fast = s.scan(SeriesKind::Psi, Mode::Fast, 100, 10).unwrap();
        let err = s.scan_resumable(SeriesKind::Psi, Mode::Fast, 200, 10, fast.checkpoints.last(), |_| Ok(()));
        assert!(matches!(err, Err(Error::IncompatibleCheckpoint(_))));
    }
}
