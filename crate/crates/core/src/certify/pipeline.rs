//! The certification pipelines: first range, dyadic bootstrap, large-x
//! iteration, and the assembly of the final theorem.
//!
//! Pipelines return their certificates together with comparisons against
//! the published values. Broken hypotheses are errors; a value that misses
//! its published counterpart is recorded and makes `passed()` false.

use serde::Serialize;

use super::certificate::{BoundCertificate, Quantity, TraceStep, XRange};
use super::lemmas::{Chain, Level, DYADIC_MAX_A};
use crate::decimal::Decimal;
use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::summatory::{SeriesKind, Summatory};

/// `y` of the first range.
pub const FIRST_RANGE_Y: u64 = 100_000_000;
/// Largest `n` in the head `Σ_{n<=32} |M(n)| log(1 + 1/n)`.
pub const ABS_LOG_HEAD_N: u64 = 32;
/// Values of `a` in the dyadic bootstrap.
pub const DYADIC_STEPS: [u64; 9] = [2, 4, 8, 16, 32, 64, 128, 256, DYADIC_MAX_A];
/// Iteration limit of the large-x bootstrap.
pub const MAX_LARGE_X_ITERATIONS: usize = 10;

/// Published dyadic table: `(a, N, M)`.
pub const PRINTED_DYADIC: [(u64, &str, &str); 9] = [
    (2, "5.60e-6", "5.61e-6"),
    (4, "4.79e-6", "4.80e-6"),
    (8, "4.13e-6", "4.14e-6"),
    (16, "3.59e-6", "3.60e-6"),
    (32, "3.16e-6", "3.18e-6"),
    (64, "2.82e-6", "2.84e-6"),
    (128, "2.56e-6", "2.57e-6"),
    (256, "2.35e-6", "2.36e-6"),
    (500, "2.19e-6", "2.20e-6"),
];
/// Published large-x reciprocal floors, N then M.
pub const PRINTED_LARGE_X_N: [u64; 5] = [11_086, 25_372, 53_324, 104_069, 180_799];
pub const PRINTED_LARGE_X_M: [u64; 5] = [11_035, 25_266, 53_119, 103_697, 180_194];

// ---- comparisons against published values -------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Rule {
    /// `computed <= printed + tol`.
    AtMost { tol: f64 },
    /// `|computed − printed| <=` one unit of the last printed digit.
    Near,
    /// `computed` rounds to the printed digits.
    Rounds,
    /// Integers equal.
    Exact,
    /// `computed >= printed`, integers.
    AtLeast,
    /// Reported only.
    Informational,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reproduction {
    pub label: String,
    pub printed: String,
    pub computed: f64,
    #[serde(flatten)]
    pub rule: Rule,
    pub passed: bool,
}

/// One unit in the last digit of a printed decimal such as `5.60e-6`.
pub fn printed_ulp(text: &str) -> f64 {
    let (mantissa, exp) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().unwrap_or(0)),
        None => (text, 0),
    };
    let frac = mantissa.split_once('.').map_or(0, |(_, f)| f.len() as i32);
    10f64.powi(exp - frac)
}

fn printed_value(text: &str) -> f64 {
    text.parse().expect("printed values are decimal literals")
}

impl Reproduction {
    fn make(label: &str, printed: &str, computed: f64, rule: Rule, passed: bool) -> Self {
        Reproduction {
            label: label.to_string(),
            printed: printed.to_string(),
            computed,
            rule,
            passed,
        }
    }

    pub fn at_most(label: &str, printed: &str, computed: f64, tol: f64) -> Self {
        let ok = computed <= printed_value(printed) + tol;
        Self::make(label, printed, computed, Rule::AtMost { tol }, ok)
    }

    /// `at_most` with one unit of the last printed digit as tolerance.
    pub fn at_most_ulp(label: &str, printed: &str, computed: f64) -> Self {
        Self::at_most(label, printed, computed, printed_ulp(printed))
    }

    pub fn near(label: &str, printed: &str, computed: f64) -> Self {
        let ulp = printed_ulp(printed);
        let ok = (computed - printed_value(printed)).abs() <= ulp * (1.0 + 1e-9);
        Self::make(label, printed, computed, Rule::Near, ok)
    }

    pub fn rounds(label: &str, printed: &str, computed: Enclosure) -> Self {
        let half = printed_ulp(printed) / 2.0;
        let p = printed_value(printed);
        let ok = computed.lo() >= p - half && computed.hi() < p + half;
        Self::make(label, printed, computed.mid(), Rule::Rounds, ok)
    }

    pub fn exact(label: &str, printed: u64, computed: u64) -> Self {
        Self::make(label, &printed.to_string(), computed as f64, Rule::Exact, printed == computed)
    }

    pub fn at_least(label: &str, printed: u64, computed: u64) -> Self {
        Self::make(label, &printed.to_string(), computed as f64, Rule::AtLeast, computed >= printed)
    }

    pub fn informational(label: &str, printed: &str, computed: f64) -> Self {
        Self::make(label, printed, computed, Rule::Informational, true)
    }
}

fn all_passed(r: &[Reproduction]) -> bool {
    r.iter().all(|r| r.passed)
}

fn broken(pipeline: &str, step: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Pipeline {
        pipeline: pipeline.into(),
        step: step.into(),
        reason: reason.into(),
    }
}

fn dec(s: &str) -> Decimal {
    s.parse().expect("decimal literal")
}

// ---- first range ----------------------------------------------------------------

/// Scanned inputs of the first-range pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FirstRangeInputs {
    /// `m₁(10⁸)`.
    pub m1: Enclosure,
    /// `Σ_{j<=10⁸} μ²(j)/√j`.
    pub mu2_sqrt_sum: Enclosure,
    /// `Σ_{n<=32} |M(n)| log(1 + 1/n)`, when computed.
    pub abs_log_head: Option<Enclosure>,
}

impl FirstRangeInputs {
    /// Runs the two 10⁸ scans.
    pub fn compute(engine: &Summatory) -> Result<Self> {
        Ok(FirstRangeInputs {
            m1: engine.m1_at(FIRST_RANGE_Y)?,
            mu2_sqrt_sum: engine.weighted_sum(SeriesKind::Mu2OverSqrt, FIRST_RANGE_Y)?,
            abs_log_head: Some(engine.weighted_sum(SeriesKind::AbsMLogWeight, ABS_LOG_HEAD_N)?),
        })
    }

    /// The published values: `m₁(10⁸) ∈ (0, 1.195e-6)`, `S <= 12158.55`.
    pub fn printed() -> Self {
        FirstRangeInputs {
            m1: dec("1.195e-6").to_enclosure().hull(&Enclosure::ZERO),
            mu2_sqrt_sum: dec("12158.55").to_enclosure().hull(&Enclosure::ZERO),
            abs_log_head: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FirstRange {
    pub inputs: FirstRangeInputs,
    pub n: BoundCertificate,
    pub m: BoundCertificate,
    /// Re-derived gap constant, compared with the ledger's.
    pub gap_constant: Enclosure,
    pub reproductions: Vec<Reproduction>,
}

impl FirstRange {
    pub fn passed(&self) -> bool {
        all_passed(&self.reproductions)
    }
}

pub fn first_range(chain: &Chain, inputs: FirstRangeInputs) -> Result<FirstRange> {
    const P: &str = "first-range";
    let range = XRange::new(dec("1e16"), Some(dec("2e16")));
    let (lo, hi) = (range.lo_enclosure(), range.hi_enclosure().expect("finite"));
    if let Some(head) = inputs.abs_log_head {
        let ledger = chain.ledger.value("abs_log_head")?;
        if !head.certainly_le(&ledger) {
            return Err(broken(P, "abs_log_head", format!("computed head {head} exceeds the ledger's {ledger}")));
        }
    }
    if inputs.m1.lo() < 0.0 && inputs.m1.hi() > 0.0 {
        // Only |m₁| enters, but a sign-indefinite enclosure means the scan was too coarse.
        return Err(broken(P, "m1", format!("m1(1e8) = {} has indefinite sign", inputs.m1)));
    }
    let tail = chain.bound_tail_small(FIRST_RANGE_Y, lo, hi, inputs.m1)?;
    let lambda = chain.bound_lambda_part_small(FIRST_RANGE_Y, lo, hi)?;
    let psi = chain.bound_psi_part_small(FIRST_RANGE_Y, lo, hi, inputs.mu2_sqrt_sum)?;
    let mut trace: Vec<TraceStep> = tail.iter().chain(&lambda).chain(&psi).cloned().collect();
    let n = BoundCertificate::from_trace("first-range/N", Quantity::N, range, trace.clone());
    trace.extend(chain.mn_gap_root(lo, hi)?);
    let m = BoundCertificate::from_trace("first-range/M", Quantity::M, range, trace);

    let mut r = vec![
        Reproduction::at_most_ulp("m1(1e8)", "1.195e-6", inputs.m1.hi()),
        Reproduction::at_most_ulp("sum mu2(j)/sqrt(j), j <= 1e8", "12158.55", inputs.mu2_sqrt_sum.hi()),
        Reproduction::near("tail_small: psi_M_product", "1.46e-10", tail[0].value.hi()),
        Reproduction::near("tail_small: m1_value", "3.25e-8", tail[1].value.hi()),
        Reproduction::at_most_ulp("tail_small", "3.3e-8", n.lemma_total("tail_small")),
        Reproduction::near("lambda_part_small: leading", "3.0998e-6", lambda[0].value.hi()),
        Reproduction::at_most_ulp("lambda_part_small", "3.1002e-6", n.lemma_total("lambda_part_small")),
        Reproduction::at_most_ulp("psi_part_small", "3.1023e-6", n.lemma_total("psi_part_small")),
        Reproduction::at_most("N bound", "6.234983e-6", n.bound, 1e-11),
        Reproduction::at_least("floor(1/N bound)", 160_385, n.reciprocal_floor()),
        Reproduction::at_most("M bound", "6.235045e-6", m.bound, 1e-11),
        Reproduction::at_least("floor(1/M bound)", 160_383, m.reciprocal_floor()),
    ];
    if inputs.m1.lo() <= 0.0 && inputs.abs_log_head.is_some() {
        r.push(Reproduction::make("m1(1e8) > 0", "> 0", inputs.m1.lo(), Rule::Informational, false));
    }
    Ok(FirstRange {
        inputs,
        n,
        m,
        gap_constant: chain.mn_gap_constant()?,
        reproductions: r,
    })
}

// ---- dyadic bootstrap ------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DyadicRow {
    pub a: u64,
    pub n: BoundCertificate,
    pub m: BoundCertificate,
    /// `M bound <= 1/K`.
    pub oui: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dyadic {
    pub rows: Vec<DyadicRow>,
    /// `|M(u)|/u <= 1/K` is certified on `[T, covered_to]`.
    pub covered_to: Decimal,
    /// First step whose hypothesis could not be discharged.
    pub chain_break: Option<String>,
    pub reproductions: Vec<Reproduction>,
}

impl Dyadic {
    pub fn passed(&self) -> bool {
        self.chain_break.is_none() && all_passed(&self.reproductions)
    }

    /// Whether `[10^16, 10^19]` is covered with `1/K`.
    pub fn covers_large_x_start(&self) -> bool {
        self.chain_break.is_none() && self.covered_to >= dec("1e19")
    }
}

pub fn dyadic(chain: &Chain, first: &FirstRange) -> Result<Dyadic> {
    const P: &str = "dyadic";
    let margin = chain.mu2_sqrt_constant_margin()?;
    if margin.lo() < 0.0 {
        return Err(broken(P, "mu2_sqrt_log", format!("derivation of the log coefficient fails by {margin}")));
    }
    let target = chain.target()?;
    let t = chain.threshold()?;
    let k = chain.opts.theorem_constant;
    let sup_hyp = format!("sup |M(u)|/u <= 1/{k} on [1e16, X]");
    let mut chain_break = None;
    let mut covered = dec("1e16");
    if first.m.bound <= target.lo() {
        covered = dec("2e16");
    } else {
        chain_break = Some(first.m.id.clone());
    }
    let mut rows = Vec::new();
    let mut r = Vec::new();
    for (a, printed_n, printed_m) in PRINTED_DYADIC {
        let big_x = dec(&format!("{a}e16"));
        let two_x = dec(&format!("{}e16", 2 * a));
        if chain_break.is_none() && covered < big_x {
            chain_break = Some(format!("a={a}: sup hypothesis covered only to {covered}"));
        }
        let range = XRange::new(big_x, Some(two_x));
        let trace = chain.dyadic_step(Decimal::from_u64(a), target, &sup_hyp)?;
        let n = BoundCertificate::from_trace(format!("dyadic/a={a}/N"), Quantity::N, range, trace.clone());
        let gap = chain.n_to_m_gap(big_x.to_enclosure(), target, t.to_enclosure(), &sup_hyp)?;
        if a == 2 {
            let g = gap.iter().fold(0.0, |s, t| crate::enclosure::round::add_up(s, t.value.hi()));
            r.push(Reproduction::at_most_ulp("n_to_m_gap at 2e16", "1.33e-8", g));
            let konst = chain.n_to_m_constant(t.to_enclosure())?;
            r.push(Reproduction::informational("n_to_m constant", "104586", konst.hi()));
        }
        let mut m_trace = trace;
        m_trace.extend(gap);
        let m = BoundCertificate::from_trace(format!("dyadic/a={a}/M"), Quantity::M, range, m_trace);
        let oui = m.bound <= target.lo();
        if oui && chain_break.is_none() {
            covered = covered.max(two_x);
        } else if chain_break.is_none() {
            chain_break = Some(format!("a={a}: M bound {:.6e} exceeds 1/{k}", m.bound));
        }
        r.push(Reproduction::near(&format!("a={a} N"), printed_n, n.bound));
        r.push(Reproduction::near(&format!("a={a} M"), printed_m, m.bound));
        rows.push(DyadicRow { a, n, m, oui });
    }
    if chain_break.is_none() && covered < dec("1e19") {
        chain_break = Some(format!("coverage ends at {covered}, short of 1e19"));
    }
    Ok(Dyadic {
        rows,
        covered_to: covered,
        chain_break,
        reproductions: r,
    })
}

// ---- large x ------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LargeXRow {
    pub level: Level,
    pub n: BoundCertificate,
    pub m: BoundCertificate,
    pub n_floor: u64,
    pub m_floor: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LargeX {
    pub rows: Vec<LargeXRow>,
    pub l_star: Enclosure,
    /// Hypothesis consumed on `[10^16, 10^19]`, discharged by the dyadic chain.
    pub middle_hypothesis: String,
    pub reproductions: Vec<Reproduction>,
}

impl LargeX {
    pub fn passed(&self) -> bool {
        all_passed(&self.reproductions)
    }

    pub fn final_row(&self) -> &LargeXRow {
        self.rows.last().expect("at least one row")
    }
}

/// `L → ⌊1/M bound⌋`, from the CDM constant until `y² > 10^19`, then one
/// step at `L*`.
pub fn large_x_iteration(chain: &Chain) -> Result<LargeX> {
    const P: &str = "large-x";
    let margin = chain.lambda_over_k_offset_margin()?;
    if margin.lo() < 0.0 {
        return Err(broken(P, "lambda_over_k_offset", format!("offset not implied by the remainder bounds: {margin}")));
    }
    let k = chain.opts.theorem_constant;
    let middle = format!("sup |M(u)|/u <= 1/{k} on [1e16, 1e19]");
    let cdm = chain.ledger.get("cdm")?;
    let l0 = cdm.enclosure().lo().floor() as u64;
    let mut level = Level::L(l0);
    let mut hyp = "cdm".to_string();
    let mut rows: Vec<LargeXRow> = Vec::new();
    loop {
        if rows.len() == MAX_LARGE_X_ITERATIONS {
            return Err(broken(P, "iteration", format!("no convergence in {MAX_LARGE_X_ITERATIONS} steps")));
        }
        let (label, l) = match level {
            Level::L(l) => (format!("L={l}"), Enclosure::from_u64(l)),
            Level::Cap => ("L*".to_string(), chain.l_star()?),
        };
        if l.hi() > k as f64 {
            return Err(broken(P, &label, format!("level exceeds {k}; the middle range cannot supply it")));
        }
        if level == Level::L(l0) {
            let y = chain.level_y(level)?;
            cdm.require(y, y)?;
        }
        let range = XRange::new(dec("1e19"), None);
        let n_trace = chain.large_x_step(level, &hyp)?;
        let n_trace: Vec<TraceStep> = n_trace.into_iter().map(|s| s.with_hypothesis(middle.clone())).collect();
        let n = BoundCertificate::from_trace(format!("large-x/{label}/N"), Quantity::N, range, n_trace.clone());
        let mut m_trace = n_trace;
        m_trace.extend(chain.large_x_gap(level, &hyp)?);
        let m = BoundCertificate::from_trace(format!("large-x/{label}/M"), Quantity::M, range, m_trace);
        let row = LargeXRow {
            level,
            n_floor: n.reciprocal_floor(),
            m_floor: m.reciprocal_floor(),
            n,
            m,
        };
        let next = row.m_floor;
        hyp = row.m.id.clone();
        rows.push(row);
        if level == Level::Cap {
            break;
        }
        let current = match level {
            Level::L(l) => l,
            Level::Cap => unreachable!(),
        };
        if next <= current {
            return Err(broken(P, &label, format!("iteration stalled: {current} -> {next}")));
        }
        level = match chain.level_y(Level::L(next)) {
            Ok(_) => Level::L(next),
            Err(Error::InvalidArgument(_)) => Level::Cap,
            Err(e) => return Err(e),
        };
    }
    let l_star = chain.l_star()?;
    let mut r = vec![Reproduction::exact("floor(L*)", 98_483, l_star.lo().floor() as u64)];
    r[0].passed &= l_star.hi().floor() == l_star.lo().floor();
    if rows.len() != PRINTED_LARGE_X_N.len() {
        r.push(Reproduction::exact("iterations", PRINTED_LARGE_X_N.len() as u64, rows.len() as u64));
    }
    for (i, row) in rows.iter().enumerate().take(PRINTED_LARGE_X_N.len()) {
        r.push(Reproduction::exact(&format!("row {} 1/N", i + 1), PRINTED_LARGE_X_N[i], row.n_floor));
        r.push(Reproduction::exact(&format!("row {} 1/M", i + 1), PRINTED_LARGE_X_M[i], row.m_floor));
    }
    Ok(LargeX {
        rows,
        l_star,
        middle_hypothesis: middle,
        reproductions: r,
    })
}

// ---- final assembly ----------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremA {
    /// `T = (c_M·K)²`, exact.
    pub threshold: Decimal,
    pub threshold_enclosure: Enclosure,
    /// `|M(x)|/x <= 1/constant` for `x >= threshold`.
    pub constant: u64,
    /// `⌊1/bound⌋` of the first-range certificate.
    pub first_range_floor: u64,
    /// `|M(x)|/x <= 1/large_x_constant` for `x >= 10^19`.
    pub large_x_constant: u64,
    /// M certificates in x order, covering `[T, ∞)`.
    pub cover: Vec<BoundCertificate>,
    pub cover_gaps: Vec<String>,
    pub first_range: FirstRange,
    pub dyadic: Dyadic,
    pub large_x: LargeX,
    pub reproductions: Vec<Reproduction>,
}

impl TheoremA {
    pub fn passed(&self) -> bool {
        self.cover_gaps.is_empty()
            && all_passed(&self.reproductions)
            && self.first_range.passed()
            && self.dyadic.passed()
            && self.large_x.passed()
    }

    /// The summary line.
    pub fn statement(&self) -> String {
        format!(
            "|M(x)| <= x/{} for x >= 8.4e9 (T = {:.6e}); |M(x)| <= x/{} for x >= 1e19",
            self.constant,
            self.threshold_enclosure.hi(),
            self.large_x_constant
        )
    }
}

/// `0.571/√x <= 0.571/√T = 1/K` on `[T, 10^16]`, with `√T = c_M·K` exactly.
fn root_model_certificate(chain: &Chain, t: Decimal) -> Result<BoundCertificate> {
    let c = chain.ledger.get("M_root")?;
    let k = Decimal::from_u64(chain.opts.theorem_constant);
    let root = c.value.checked_mul(&k).expect("checked by threshold()");
    if root.checked_mul(&root) != Some(t) {
        return Err(broken("theorem-a", "root-model", "sqrt(T) is not c_M·K exactly"));
    }
    let range = XRange::new(t, Some(dec("1e16")));
    c.require(t.to_enclosure(), Enclosure::point(1e16))?;
    let step = TraceStep::new("root_model", "c_M/sqrt(T)", chain.target()?, &["M_root"]);
    Ok(BoundCertificate::from_trace("theorem-a/root-model/M", Quantity::M, range, vec![step]))
}

/// Holes in the union of `[lo, hi]` over `certs`, starting from `start`.
fn cover_gaps(start: Decimal, certs: &[BoundCertificate]) -> Vec<String> {
    let mut sorted: Vec<&BoundCertificate> = certs.iter().collect();
    sorted.sort_by_key(|c| c.x_range.lo);
    let mut gaps = Vec::new();
    let mut reach = Some(start);
    for c in sorted {
        let Some(r) = reach else { break };
        if c.x_range.lo > r {
            gaps.push(format!("({r}, {}) not covered", c.x_range.lo));
        }
        reach = c.x_range.hi.map(|h| h.max(r));
    }
    if let Some(r) = reach {
        gaps.push(format!("({r}, ∞) not covered"));
    }
    gaps
}

pub fn theorem_a(chain: &Chain, inputs: FirstRangeInputs) -> Result<TheoremA> {
    const P: &str = "theorem-a";
    let first = first_range(chain, inputs)?;
    let dyadic = dyadic(chain, &first)?;
    let large_x = large_x_iteration(chain)?;
    if !dyadic.covers_large_x_start() {
        return Err(broken(
            P,
            "large-x",
            format!(
                "`{}` not discharged: {}",
                large_x.middle_hypothesis,
                dyadic.chain_break.clone().unwrap_or_default()
            ),
        ));
    }
    let t = chain.threshold()?;
    let target = chain.target()?;
    let mut cover = vec![root_model_certificate(chain, t)?, first.m.clone()];
    cover.extend(dyadic.rows.iter().map(|r| r.m.clone()));
    cover.push(large_x.final_row().m.clone());
    let mut gaps = cover_gaps(t, &cover);
    for c in &cover {
        if c.bound > target.hi() || (c.bound > target.lo() && c.id != "theorem-a/root-model/M") {
            gaps.push(format!("{} bound {:.6e} exceeds 1/{}", c.id, c.bound, chain.opts.theorem_constant));
        }
    }
    let te = t.to_enclosure();
    let reproductions = vec![
        Reproduction::rounds("T", "8.3867e9", te),
        Reproduction::at_most("T upper", "8.4e9", te.hi(), 0.0),
        Reproduction::exact("constant", 160_383, chain.opts.theorem_constant),
        Reproduction::at_least("first-range floor", chain.opts.theorem_constant, first.m.reciprocal_floor()),
        Reproduction::exact("large-x constant", 180_194, large_x.final_row().m_floor),
    ];
    Ok(TheoremA {
        threshold: t,
        threshold_enclosure: te,
        constant: chain.opts.theorem_constant,
        first_range_floor: first.m.reciprocal_floor(),
        large_x_constant: large_x.final_row().m_floor,
        cover,
        cover_gaps: gaps,
        first_range: first,
        dyadic,
        large_x,
        reproductions,
    })
}

/// Every certificate of a theorem run, in pipeline order.
pub fn all_certificates(a: &TheoremA) -> Vec<&BoundCertificate> {
    let mut out = vec![&a.first_range.n, &a.first_range.m];
    for r in &a.dyadic.rows {
        out.push(&r.n);
        out.push(&r.m);
    }
    for r in &a.large_x.rows {
        out.push(&r.n);
        out.push(&r.m);
    }
    out.push(&a.cover[0]);
    out
}
