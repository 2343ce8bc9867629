//! Exact identities: the hyperbola split of `−N = μ ⋆ Λ` (with m₁ and with
//! Schoenfeld's floor variant), Tchebichef's A(t) and the constants α, β,
//! the Mellin transform of |1 − A|, and the N ↔ M gap.

use num_rational::Ratio;
use serde::Serialize;

use crate::certify::model::{ModelForm, ModelTarget, Provenance, RootModel};
use crate::decimal::Decimal;
use crate::enclosure::{zeta_half, zeta_real, Enclosure, FixedSum, ZETA_REAL_DEFAULT_CUTOFF};
use crate::error::{Error, Result};
use crate::sieve::{sieve_mangoldt, sieve_mobius, PrimePower, PrimeTable, Segment, DEFAULT_SEGMENT_SIZE};
use crate::summatory::verify::{compare, Verdict};
use crate::summatory::{run_segments, Mode, ScanReport, SeriesKind, SeriesValue, Summatory};

/// Both sides of an identity at `(x, y)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityResidual {
    pub x: u64,
    /// `y` as `(numerator, denominator)`.
    pub y: (u64, u64),
    pub lhs: Enclosure,
    /// `lambda_sum`, `psi_sum`, `boundary_term`, `m1_term`.
    pub rhs_terms: Vec<(&'static str, Enclosure)>,
    pub residual: Enclosure,
}

impl IdentityResidual {
    fn assemble(x: u64, y: Ratio<u64>, lhs: Enclosure, rhs_terms: Vec<(&'static str, Enclosure)>) -> Self {
        let rhs = rhs_terms.iter().fold(Enclosure::ZERO, |acc, (_, t)| acc + *t);
        IdentityResidual {
            x,
            y: (*y.numer(), *y.denom()),
            lhs,
            rhs_terms,
            residual: lhs - rhs,
        }
    }

    /// The identity is confirmed when the residual enclosure contains 0.
    pub fn holds(&self) -> bool {
        self.residual.contains(0.0)
    }

    pub fn term(&self, name: &str) -> Option<Enclosure> {
        self.rhs_terms.iter().find(|(n, _)| *n == name).map(|(_, e)| *e)
    }
}

/// μ(1..=n), sieved segment by segment.
pub(crate) fn mobius_upto(n: u64) -> Result<Vec<i8>> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(0);
    if n == 0 {
        return Ok(out);
    }
    let table = PrimeTable::for_range_end(n + 1);
    for seg in Segment::tile(1, n + 1, DEFAULT_SEGMENT_SIZE) {
        out.extend(sieve_mobius(seg, &table)?.values);
    }
    Ok(out)
}

fn prime_powers_upto(n: u64) -> Result<Vec<PrimePower>> {
    let mut out = Vec::new();
    if n < 2 {
        return Ok(out);
    }
    let table = PrimeTable::for_range_end(n + 1);
    for seg in Segment::tile(1, n + 1, DEFAULT_SEGMENT_SIZE) {
        out.extend(sieve_mangoldt(seg, &table)?.entries);
    }
    Ok(out)
}

/// Sorted distinct values with binary-search lookup.
struct Table {
    points: Vec<u64>,
    values: Vec<SeriesValue>,
}

impl Table {
    fn build(engine: &Summatory, kind: SeriesKind, mut points: Vec<u64>) -> Result<Self> {
        points.sort_unstable();
        points.dedup();
        let values = engine.values_at(kind, Mode::Rigorous, &points)?;
        Ok(Table { points, values })
    }

    fn get(&self, x: u64) -> Enclosure {
        let i = self.points.binary_search(&x).expect("point was requested");
        self.values[i].to_enclosure()
    }
}

/// Inputs shared by both hyperbola identities.
struct Split {
    y: Ratio<u64>,
    /// ⌊y⌋
    fy: u64,
    /// ⌊x/y⌋
    ft: u64,
    mu: Vec<i8>,
    powers: Vec<PrimePower>,
    mertens: Table,
    psi: Table,
    n_x: Enclosure,
}

fn split(engine: &Summatory, x: u64, y: Ratio<u64>, all_k: bool) -> Result<Split> {
    if x == 0 || *y.denom() == 0 || y < Ratio::from_integer(1) || y > Ratio::from_integer(x) {
        return Err(Error::InvalidArgument(format!("need 1 <= y <= x, got x = {x}, y = {y}")));
    }
    engine.config().check_ceiling(x)?;
    let fy = y.to_integer();
    let ft = (x as u128 * *y.denom() as u128 / *y.numer() as u128) as u64;
    let mu = mobius_upto(ft)?;
    let powers = prime_powers_upto(fy)?;
    let mut m_points: Vec<u64> = if all_k {
        (1..=fy).map(|k| x / k).collect()
    } else {
        powers.iter().map(|e| x / e.n).collect()
    };
    m_points.push(ft);
    let mut psi_points: Vec<u64> = (1..=ft).filter(|&j| mu[j as usize] != 0).map(|j| x / j).collect();
    psi_points.push(fy);
    Ok(Split {
        y,
        fy,
        ft,
        mertens: Table::build(engine, SeriesKind::M, m_points)?,
        psi: Table::build(engine, SeriesKind::Psi, psi_points)?,
        n_x: engine.value_at(SeriesKind::N, Mode::Rigorous, x)?.to_enclosure(),
        mu,
        powers,
    })
}

/// Checks `−N(x)/x = Σ_{k≤y} (Λ(k)/k) M(x/k)/(x/k) + Σ_{j≤x/y} (μ(j)/j)(ψ(x/j) − x/j)/(x/j)
/// − ((ψ(y) − y)/y) M(x/y)/(x/y) + m₁(x/y)` for rational `1 <= y <= x`.
pub fn hyperbola_residual(engine: &Summatory, x: u64, y: Ratio<u64>) -> Result<IdentityResidual> {
    let s = split(engine, x, y, false)?;
    let xe = Enclosure::from_u64(x);
    let (yn, yd) = (*y.numer(), *y.denom());

    // Each term is multiplied through by x; the common 1/x is applied last.
    let mut lambda = FixedSum::ZERO;
    for e in &s.powers {
        lambda.add(Enclosure::ln_u64(e.p) * s.mertens.get(x / e.n));
    }
    let mut psi = FixedSum::ZERO;
    for j in 1..=s.ft {
        let mu = s.mu[j as usize];
        if mu == 0 {
            continue;
        }
        let t = s.psi.get(x / j) - Enclosure::ratio(x as i128, j as i128)?;
        if mu > 0 {
            psi.add(t)
        } else {
            psi.sub(t)
        }
    }
    let y_e = Enclosure::ratio(yn as i128, yd as i128)?;
    let boundary = -((s.psi.get(s.fy) - y_e) * s.mertens.get(s.ft));
    let t = Enclosure::ratio(x as i128 * yd as i128, yn as i128)?;
    let small_m = engine.value_at(SeriesKind::SmallM, Mode::Rigorous, s.ft)?.to_enclosure();
    let m1 = small_m - s.mertens.get(s.ft).div(t)?;

    let terms = vec![
        ("lambda_sum", lambda.to_enclosure().div(xe)?),
        ("psi_sum", psi.to_enclosure().div(xe)?),
        ("boundary_term", boundary.div(xe)?),
        ("m1_term", m1),
    ];
    Ok(IdentityResidual::assemble(x, s.y, (-s.n_x).div(xe)?, terms))
}

/// Checks `−N(x) − 1 = Σ_{k≤y} (Λ(k) − 1) M(x/k) + Σ_{j≤x/y} μ(j)(ψ(x/j) − ⌊x/j⌋)
/// − (ψ(y) − ⌊y⌋) M(x/y)`.
pub fn schoenfeld_residual(engine: &Summatory, x: u64, y: Ratio<u64>) -> Result<IdentityResidual> {
    let s = split(engine, x, y, true)?;
    let mut lambda = FixedSum::ZERO;
    let mut powers = s.powers.iter().peekable();
    for k in 1..=s.fy {
        let log = match powers.next_if(|e| e.n == k) {
            Some(e) => Enclosure::ln_u64(e.p),
            None => Enclosure::ZERO,
        };
        lambda.add((log - Enclosure::ONE) * s.mertens.get(x / k));
    }
    let mut psi = FixedSum::ZERO;
    for j in 1..=s.ft {
        let mu = s.mu[j as usize];
        if mu == 0 {
            continue;
        }
        let t = s.psi.get(x / j) - Enclosure::from_u64(x / j);
        if mu > 0 {
            psi.add(t)
        } else {
            psi.sub(t)
        }
    }
    let boundary = -((s.psi.get(s.fy) - Enclosure::from_u64(s.fy)) * s.mertens.get(s.ft));
    let terms = vec![
        ("lambda_sum", lambda.to_enclosure()),
        ("psi_sum", psi.to_enclosure()),
        ("boundary_term", boundary),
        ("m1_term", Enclosure::ZERO),
    ];
    Ok(IdentityResidual::assemble(x, s.y, -s.n_x - Enclosure::ONE, terms))
}

/// `A(t) = ⌊t⌋ − ⌊t/2⌋ − ⌊t/3⌋ − ⌊t/5⌋ + ⌊t/30⌋` for rational `t >= 1`.
pub fn chebyshev_a(t: Ratio<u64>) -> Result<i64> {
    if t < Ratio::from_integer(1) {
        return Err(Error::InvalidArgument(format!("A(t) needs t >= 1, got {t}")));
    }
    let (n, d) = (*t.numer() as u128, *t.denom() as u128);
    let fl = |k: u128| (n / (d * k)) as i64;
    Ok(fl(1) - fl(2) - fl(3) - fl(5) + fl(30))
}

/// `1 − A(n)` on `[n, n+1)`: A only jumps at integers.
fn one_minus_a(n: u64) -> i64 {
    1 - chebyshev_a(Ratio::from_integer(n)).expect("n >= 1")
}

/// `2 − 2(1 − 2^{−1/2} − 3^{−1/2} − 5^{−1/2} + 30^{−1/2}) ζ(1/2)`.
pub fn alpha_constant() -> Enclosure {
    let r = |n: u64| Enclosure::recip_sqrt_u64(n);
    let c = Enclosure::ONE - r(2) - r(3) - r(5) + r(30);
    Enclosure::point(2.0) - Enclosure::point(2.0) * c * zeta_half()
}

/// `1 − log 2/2 − log 3/3 − log 5/5 + log 30/30`.
pub fn beta_constant() -> Enclosure {
    let t = |n: u64| Enclosure::ln_u64(n).div(Enclosure::from_u64(n)).expect("n > 0");
    Enclosure::ONE - t(2) - t(3) - t(5) + t(30)
}

/// `∫_1^∞ |1 − A(t)| t^{−1−s} dt` by exact summation over `[1, cutoff)` plus
/// the tail bound `[0, cutoff^{−s}/s]`.
pub fn mellin_quadrature(s: Ratio<u64>, cutoff: u64) -> Result<Enclosure> {
    if *s.numer() == 0 || cutoff < 2 {
        return Err(Error::InvalidArgument("need s > 0 and cutoff >= 2".into()));
    }
    let se = Enclosure::ratio(*s.numer() as i128, *s.denom() as i128)?;
    let half = s == Ratio::new(1, 2);
    let pw = |n: u64| -> Result<Enclosure> {
        if half {
            Ok(Enclosure::recip_sqrt_u64(n))
        } else {
            Ok(Enclosure::from_u64(n).pow(-se)?)
        }
    };
    // Σ w(n) (n^{−s} − (n+1)^{−s}), then / s.
    let mut acc = FixedSum::ZERO;
    let mut cur = pw(1)?;
    for n in 1..cutoff {
        let next = pw(n + 1)?;
        if one_minus_a(n) != 0 {
            acc.add(cur - next);
        }
        cur = next;
    }
    let body = acc.to_enclosure().div(se)?;
    let tail = cur.div(se)?;
    Ok(body + Enclosure::new(0.0, tail.hi())?)
}

/// Quadrature minus closed form for the Mellin transform of |1 − A|.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MellinCheck {
    pub quadrature: Enclosure,
    pub closed_form: Enclosure,
    pub residual: Enclosure,
}

impl MellinCheck {
    pub fn holds(&self) -> bool {
        self.residual.contains(0.0)
    }
}

/// `1/s − (ζ(s)/s)(1 − 2^{−s} − 3^{−s} − 5^{−s} + 30^{−s})` against the quadrature.
pub fn mellin_identity_check(s: Ratio<u64>, cutoff: u64) -> Result<MellinCheck> {
    let se = Enclosure::ratio(*s.numer() as i128, *s.denom() as i128)?;
    let zeta = zeta_real(se, ZETA_REAL_DEFAULT_CUTOFF)?;
    let p = |n: u64| Enclosure::from_u64(n).pow(-se);
    let c = Enclosure::ONE - p(2)? - p(3)? - p(5)? + p(30)?;
    let closed_form = se.recip()? - (zeta * c).div(se)?;
    let quadrature = mellin_quadrature(s, cutoff)?;
    Ok(MellinCheck {
        quadrature,
        closed_form,
        residual: quadrature - closed_form,
    })
}

/// Evaluates `Σ_{n≤u} μ(n)⌊u/(kn)⌋` exactly and compares it with `1_{u≥k}`.
pub fn mobius_floor_identity_check(u: Ratio<u64>, k: u64) -> Result<bool> {
    Ok(mobius_floor_sum(u, k)? == (u >= Ratio::from_integer(k)) as i64)
}

pub fn mobius_floor_sum(u: Ratio<u64>, k: u64) -> Result<i64> {
    if k == 0 || u < Ratio::from_integer(1) {
        return Err(Error::InvalidArgument("need u >= 1 and k >= 1".into()));
    }
    let (un, ud) = (*u.numer() as u128, *u.denom() as u128);
    // Terms vanish once kn > u.
    let last = (un / (ud * k as u128)) as u64;
    let mu = mobius_upto(last)?;
    Ok((1..=last)
        .map(|n| mu[n as usize] as i64 * (un / (ud * k as u128 * n as u128)) as i64)
        .sum())
}

/// `M log x − N` at one checkpoint, computed directly and by Abel summation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MnGapPoint {
    pub x: u64,
    pub mertens: i64,
    pub n: Enclosure,
    /// `M(x) log x − N(x)`
    pub direct: Enclosure,
    /// `Σ_{n<x} M(n) log(1 + 1/n)`
    pub abel: Enclosure,
    /// `|N(x)/(x log x) − M(x)/x|`
    pub gap: Enclosure,
}

impl MnGapPoint {
    pub fn routes_agree(&self) -> bool {
        self.direct.intersects(&self.abel)
    }
}

/// Running state of the single pass behind [`mn_gap_points`].
#[derive(Debug, Clone, Copy, Default)]
struct GapState {
    mertens: i64,
    n: FixedSum,
    /// Σ log(1 + 1/n)
    w: FixedSum,
    /// Σ M(n) log(1 + 1/n)
    v: FixedSum,
}

fn scale(s: &FixedSum, k: i64) -> FixedSum {
    let k = k as i128;
    if k >= 0 {
        FixedSum { lo: s.lo * k, hi: s.hi * k }
    } else {
        FixedSum { lo: s.hi * k, hi: s.lo * k }
    }
}

impl GapState {
    /// Appends a later block whose `v` was accumulated from a zero M offset.
    fn then(&self, b: &GapState) -> GapState {
        GapState {
            mertens: self.mertens + b.mertens,
            n: self.n.combined(&b.n),
            w: self.w.combined(&b.w),
            v: self.v.combined(&scale(&b.w, self.mertens)).combined(&b.v),
        }
    }

    #[inline]
    fn step(&mut self, n: u64, mu: i8) {
        if mu != 0 {
            self.mertens += mu as i64;
            let l = Enclosure::ln_u64(n);
            if mu > 0 {
                self.n.add(l)
            } else {
                self.n.sub(l)
            }
        }
        let w = Enclosure::recip_u64(n).ln_1p().expect("1/n > -1");
        self.w.add(w);
        if self.mertens != 0 {
            self.v.add(w * Enclosure::from_i64(self.mertens));
        }
    }
}

/// Gap data at `lo`, every multiple of `stride` in between, and `hi`.
pub fn mn_gap_points(engine: &Summatory, lo: u64, hi: u64, stride: u64) -> Result<Vec<MnGapPoint>> {
    if lo < 2 || lo > hi || stride == 0 {
        return Err(Error::InvalidArgument(format!("invalid gap scan [{lo}, {hi}] / {stride}")));
    }
    let mut points = vec![lo];
    let mut m = (lo / stride + 1) * stride;
    while m < hi {
        points.push(m);
        m += stride;
    }
    if hi > lo {
        points.push(hi);
    }
    let points = &points;
    let mut out = Vec::with_capacity(points.len());
    run_segments(
        engine.config(),
        1,
        hi,
        GapState::default(),
        |seg, table| {
            let block = sieve_mobius(seg, table)?;
            let a = points.partition_point(|&p| p < seg.lo());
            let b = points.partition_point(|&p| p < seg.hi());
            let mut local = GapState::default();
            let mut marks = Vec::with_capacity(b - a);
            let mut next = a;
            for (n, mu) in block.iter() {
                local.step(n, mu);
                if next < b && points[next] == n {
                    marks.push((n, local));
                    next += 1;
                }
            }
            Ok((marks, local))
        },
        |a, b| a.then(b),
        |marks, offset| {
            marks
                .into_iter()
                .map(|(x, local)| (x, offset.then(&local)))
                .collect::<Vec<_>>()
        },
        |batch| {
            for (x, st) in batch {
                out.push(gap_point(x, &st)?);
            }
            Ok(())
        },
    )?;
    Ok(out)
}

fn gap_point(x: u64, st: &GapState) -> Result<MnGapPoint> {
    let xe = Enclosure::from_u64(x);
    let log_x = Enclosure::ln_u64(x);
    let m = Enclosure::from_i64(st.mertens);
    let n = st.n.to_enclosure();
    let direct = m * log_x - n;
    // v includes the n = x term; Abel's sum stops at x − 1.
    let last = Enclosure::recip_u64(x).ln_1p()? * m;
    let abel = st.v.to_enclosure() - last;
    let gap = direct.abs().div(xe * log_x)?;
    Ok(MnGapPoint {
        x,
        mertens: st.mertens,
        n,
        direct,
        abel,
        gap,
    })
}

/// Lower end of the range on which the gap bound `0.227/(√x log x)` is claimed.
pub const MN_GAP_RANGE_LO: u64 = 1_300_000_000;

/// Checks `|N(x)/(x log x) − M(x)/x| <= c/(√x log x)` at the checkpoints,
/// i.e. `|M log x − N| <= c√x`. The ratio reported is `|M log x − N|/√x`.
/// Points where the two routes disagree count as violations.
pub fn mn_gap_scan(engine: &Summatory, lo: u64, hi: u64, stride: u64, c: Decimal) -> Result<ScanReport> {
    if lo < MN_GAP_RANGE_LO {
        return Err(Error::HypothesisRange {
            key: "mn_gap".into(),
            reason: format!("the gap bound is claimed for x >= {MN_GAP_RANGE_LO}, got {lo}"),
        });
    }
    mn_gap_report(engine, lo, hi, stride, c)
}

/// [`mn_gap_scan`] without the range restriction.
pub fn mn_gap_report(engine: &Summatory, lo: u64, hi: u64, stride: u64, c: Decimal) -> Result<ScanReport> {
    let model = RootModel::new(
        ModelTarget::M,
        ModelForm::TimesSqrt,
        c,
        Decimal::from_u64(lo),
        Some(Decimal::from_u64(hi)),
        Provenance::internal("|M(x) log x - N(x)| <= c√x"),
    )?;
    let ce = c.to_enclosure();
    let mut report = ScanReport::new((lo, hi), format!("|M(x) log x - N(x)| <= {c}·√x"), Some(model));
    for p in mn_gap_points(engine, lo, hi, stride)? {
        let root = Enclosure::from_u64(p.x).sqrt()?;
        let dev = p.direct.abs();
        let ratio = dev.div(root)?;
        let verdict = if p.routes_agree() {
            compare(dev, ce * root)
        } else {
            Verdict::Fail
        };
        report.record(p.x, ratio, verdict);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::summatory::ScanConfig;

    fn engine() -> Summatory {
        Summatory::new(ScanConfig::default().with_segment_size(1 << 16))
    }

    #[test]
    fn hyperbola_examples() {
        let e = engine();
        let r = hyperbola_residual(&e, 10_000, Ratio::from_integer(100)).unwrap();
        assert!(r.holds(), "{:?}", r);
        let r = hyperbola_residual(&e, 1000, Ratio::from_integer(1000)).unwrap();
        assert!(r.holds());
        let r = hyperbola_residual(&e, 1000, Ratio::new(3163, 100)).unwrap();
        assert!(r.holds());
        // A wrong term must break the identity.
        let mut bad = hyperbola_residual(&e, 10_000, Ratio::from_integer(100)).unwrap();
        bad.rhs_terms[3].1 = bad.rhs_terms[3].1 + Enclosure::point(1e-6);
        let bad = IdentityResidual::assemble(bad.x, Ratio::new(bad.y.0, bad.y.1), bad.lhs, bad.rhs_terms);
        assert!(!bad.holds());
    }

    #[test]
    fn schoenfeld_examples() {
        let e = engine();
        for (x, y) in [(10_000, 100), (30, 5), (1, 1), (1000, 1000), (997, 2)] {
            let r = schoenfeld_residual(&e, x, Ratio::from_integer(y)).unwrap();
            assert!(r.holds(), "{x} {y}: {:?}", r);
        }
        let r = schoenfeld_residual(&e, 1, Ratio::from_integer(1)).unwrap();
        assert!(r.lhs.contains(-1.0));
    }

    #[test]
    fn rejects_bad_splits() {
        let e = engine();
        assert!(hyperbola_residual(&e, 10, Ratio::from_integer(11)).is_err());
        assert!(hyperbola_residual(&e, 10, Ratio::new(1, 2)).is_err());
    }

    #[test]
    fn chebyshev_a_examples() {
        assert_eq!(chebyshev_a(Ratio::from_integer(1)).unwrap(), 1);
        assert_eq!(chebyshev_a(Ratio::new(59, 10)).unwrap(), 1);
        assert_eq!(chebyshev_a(Ratio::from_integer(6)).unwrap(), 0);
        let pattern: Vec<i64> = (1..=30).map(one_minus_a).collect();
        assert_eq!(
            pattern,
            [0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 0, 1]
        );
        assert!(chebyshev_a(Ratio::new(1, 2)).is_err());
    }

    #[test]
    fn alpha_beta_closed_forms() {
        let a = alpha_constant();
        assert!(a.lo() >= 0.3962 && a.hi() < 0.3963, "{a}");
        assert!(a.width() <= 1e-6);
        let b = beta_constant();
        assert!(b.lo() >= 0.07870 && b.hi() < 0.07871 && b.hi() <= 0.08, "{b}");
    }

    #[test]
    fn quadrature_oracles() {
        let q = mellin_quadrature(Ratio::new(1, 2), 100_000).unwrap();
        assert!(q.intersects(&alpha_constant()), "{q}");
        let q = mellin_quadrature(Ratio::from_integer(1), 100_000).unwrap();
        assert!(q.intersects(&beta_constant()), "{q}");
    }

    #[test]
    fn mellin_examples() {
        for s in [Ratio::from_integer(2), Ratio::from_integer(3), Ratio::new(11, 10)] {
            let c = mellin_identity_check(s, 3000).unwrap();
            assert!(c.holds(), "{s}: {:?}", c);
        }
        let a = mellin_identity_check(Ratio::from_integer(2), 30).unwrap();
        let b = mellin_identity_check(Ratio::from_integer(2), 300).unwrap();
        assert!(b.residual.width() < a.residual.width());
        assert!(mellin_identity_check(Ratio::new(101, 100), 30).is_err());
    }

    #[test]
    fn mobius_floor_examples() {
        assert!(mobius_floor_identity_check(Ratio::from_integer(100), 7).unwrap());
        assert_eq!(mobius_floor_sum(Ratio::from_integer(100), 7).unwrap(), 1);
        assert_eq!(mobius_floor_sum(Ratio::from_integer(5), 7).unwrap(), 0);
        assert!(mobius_floor_identity_check(Ratio::from_integer(1), 1).unwrap());
        assert!(mobius_floor_identity_check(Ratio::new(71, 10), 7).unwrap());
    }

    #[test]
    fn gap_routes_agree() {
        let e = engine();
        let pts = mn_gap_points(&e, 2, 200_000, 10_000).unwrap();
        assert_eq!(pts.len(), 21);
        for p in &pts {
            assert!(p.routes_agree(), "{p:?}");
            assert!(p.gap.lo() >= 0.0);
        }
        assert!(mn_gap_scan(&e, 1000, 2000, 100, "0.227".parse().unwrap()).is_err());
    }
}
