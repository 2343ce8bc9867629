//! One evaluator per bound in the chain.
//!
//! Every evaluator returns its terms as [`TraceStep`]s. Where a bound holds
//! on an x-interval, each term is evaluated at the endpoint that maximizes
//! it; the choice is noted next to the term.

use serde::Serialize;

use super::certificate::TraceStep;
use super::ledger::{Ledger, RangeBound};
use crate::decimal::Decimal;
use crate::enclosure::round::{div_up, mul_up};
use crate::enclosure::{ConstantTable, Enclosure};
use crate::error::{Error, Result};
use crate::identity::{alpha_constant, beta_constant};

/// Start of the large-x range.
pub const LARGE_X: f64 = 1e19;
/// `log Y` for the split point `Y = exp(40)` of the large-x bound.
pub const LARGE_X_LOG_Y: u64 = 40;
/// Lower end of the x/y range for the μ²/√k estimate.
pub const MU2_SQRT_MIN_RATIO: f64 = 1e4;
/// Largest `a` accepted by the dyadic step.
pub const DYADIC_MAX_A: u64 = 500;

/// Coefficient of `log X` in the Λ/√k tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LambdaConstant {
    /// The sharper 0.14 (ledger `lambda_sqrt_sharp`).
    Sharp,
    /// The envelope's own 0.47 (ledger `lambda_sqrt_b`).
    Conservative,
}

impl LambdaConstant {
    pub fn key(&self) -> &'static str {
        match self {
            LambdaConstant::Sharp => "lambda_sqrt_sharp",
            LambdaConstant::Conservative => "lambda_sqrt_b",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainOptions {
    pub lambda_constant: LambdaConstant,
    /// Round `(6/π²)·ε_FK` up to two significant digits, as printed.
    pub round_fk_term: bool,
    /// `K` in the target bound `|M(x)|/x <= 1/K`.
    pub theorem_constant: u64,
}

impl Default for ChainOptions {
    fn default() -> Self {
        ChainOptions {
            lambda_constant: LambdaConstant::Sharp,
            round_fk_term: true,
            theorem_constant: 160_383,
        }
    }
}

/// Iterate of the large-x bootstrap: `y = (c_M·L)²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    L(u64),
    /// `L*` with `y² = 10^19` exactly.
    Cap,
}

/// Evaluators bound to one ledger and option set.
pub struct Chain<'a> {
    pub ledger: &'a Ledger,
    pub opts: ChainOptions,
    pub consts: ConstantTable,
}

fn ln(x: Enclosure) -> Result<Enclosure> {
    Ok(x.ln()?)
}

fn sqrt(x: Enclosure) -> Result<Enclosure> {
    Ok(x.sqrt()?)
}

fn div(a: Enclosure, b: Enclosure) -> Result<Enclosure> {
    Ok(a.div(b)?)
}

/// Smallest two-significant-digit decimal `>= v.hi()`.
pub fn round_up_two_digits(v: Enclosure) -> Result<Enclosure> {
    let hi = v.hi();
    if hi <= 0.0 {
        return Err(Error::InvalidArgument(format!("cannot round {hi} to two digits")));
    }
    let e = hi.log10().floor() as i32 - 1;
    let mut m = div_up(hi, 10f64.powi(e)).ceil() as i128;
    loop {
        let r = Decimal::new(m, e).to_enclosure();
        if r.lo() >= hi {
            return Ok(r);
        }
        m += 1;
    }
}

impl<'a> Chain<'a> {
    pub fn new(ledger: &'a Ledger, opts: ChainOptions) -> Self {
        Chain {
            ledger,
            opts,
            consts: ConstantTable::new(),
        }
    }

    fn v(&self, key: &str) -> Result<Enclosure> {
        self.ledger.value(key)
    }

    fn require(&self, key: &str, lo: Enclosure, hi: Enclosure) -> Result<()> {
        self.ledger.get(key)?.require(lo, hi)
    }

    fn twelve_over_pi2(&self) -> Result<Enclosure> {
        div(Enclosure::point(12.0), self.consts.pi_squared)
    }

    fn lambda_b(&self) -> Result<Enclosure> {
        self.v(self.opts.lambda_constant.key())
    }

    /// The theorem's target `1/K`.
    pub fn target(&self) -> Result<Enclosure> {
        div(Enclosure::ONE, Enclosure::from_u64(self.opts.theorem_constant))
    }

    /// `T = (c_M·K)²` as an exact decimal.
    pub fn threshold(&self) -> Result<Decimal> {
        let c = self.ledger.get("M_root")?.value;
        let s = c
            .checked_mul(&Decimal::from_u64(self.opts.theorem_constant))
            .ok_or_else(|| Error::InvalidArgument("threshold overflows".into()))?;
        s.checked_mul(&s)
            .ok_or_else(|| Error::InvalidArgument("threshold overflows".into()))
    }

    // ---- first range: y fixed, x in [x_lo, x_hi] --------------------------------

    /// `(1/log x)(|ψ(x/y) − x/y|/(x/y)·|M(y)|/y + |m₁(y)|)`.
    pub fn bound_tail_small(&self, y: u64, x_lo: Enclosure, x_hi: Enclosure, m1: Enclosure) -> Result<Vec<TraceStep>> {
        const LEMMA: &str = "tail_small";
        let ye = Enclosure::from_u64(y);
        self.require("psi_root", div(x_lo, ye)?, div(x_hi, ye)?)?;
        self.require("M_root", ye, ye)?;
        // Both terms decrease in x: evaluate at x_lo.
        let log_x = ln(x_lo)?;
        let product = div(self.v("psi_root")? * self.v("M_root")?, sqrt(x_lo)? * log_x)?;
        let m1_term = div(Enclosure::point(m1.abs().hi()), log_x)?;
        Ok(vec![
            TraceStep::new(LEMMA, "psi_M_product", product, &["psi_root", "M_root"]),
            TraceStep::new(LEMMA, "m1_value", m1_term, &["computed:m1(y)"]),
        ])
    }

    /// `(1/log x) Σ_{1<k<=x/y} (Λ(k)/k)|M(x/k)|/(x/k)` via the Λ/√k envelope.
    pub fn bound_lambda_part_small(&self, y: u64, x_lo: Enclosure, x_hi: Enclosure) -> Result<Vec<TraceStep>> {
        const LEMMA: &str = "lambda_part_small";
        let ye = Enclosure::from_u64(y);
        // x/k ranges over [y, x/2].
        self.require("M_root", ye, div(x_hi, Enclosure::point(2.0))?)?;
        self.require("lambda_sqrt_c", div(x_lo, ye)?, div(x_hi, ye)?)?;
        let b_key = self.opts.lambda_constant.key();
        let (c_m, b, c) = (self.v("M_root")?, self.lambda_b()?, self.v("lambda_sqrt_c")?);
        let two_root_y = Enclosure::point(2.0) * sqrt(ye)?;
        // 1/(√x log x): largest at x_lo.
        let lead = div(c_m * two_root_y, sqrt(x_lo)? * ln(x_lo)?)?;
        // b log x/(√x log x) = b/√x: largest at x_lo.
        let log_term = div(c_m * b, sqrt(x_lo)?)?;
        // Subtracted term, smallest in size at x_hi.
        let negative = -div(c_m * (c + b * ln(ye)?), sqrt(x_hi)? * ln(x_hi)?)?;
        Ok(vec![
            TraceStep::new(LEMMA, "leading", lead, &["M_root", "lambda_sqrt_c"]),
            TraceStep::new(LEMMA, "log_x_term", log_term, &["M_root", b_key]),
            TraceStep::new(LEMMA, "negative_term", negative, &["M_root", b_key, "lambda_sqrt_c"]),
        ])
    }

    /// `(1/log x) Σ_{j<=y} (μ²(j)/j)|ψ(x/j) − x/j|/(x/j) <= c_ψ·S/(√x log x)`.
    pub fn bound_psi_part_small(&self, y: u64, x_lo: Enclosure, x_hi: Enclosure, mu2_sqrt_sum: Enclosure) -> Result<Vec<TraceStep>> {
        const LEMMA: &str = "psi_part_small";
        self.require("psi_root", div(x_lo, Enclosure::from_u64(y))?, x_hi)?;
        // Largest at x_lo.
        let t = div(
            self.v("psi_root")? * Enclosure::point(mu2_sqrt_sum.hi()),
            sqrt(x_lo)? * ln(x_lo)?,
        )?;
        Ok(vec![TraceStep::new(LEMMA, "psi_mu2_sum", t, &["psi_root", "computed:sum mu2(j)/sqrt(j)"])])
    }

    // ---- N to M conversions ------------------------------------------------------

    /// `f(x)·√x·log x = α·c_M + log x/√x + H/√x` at `x0`; decreasing in `x0`.
    pub fn mn_gap_constant_at(&self, x0: Enclosure) -> Result<Enclosure> {
        let root = sqrt(x0)?;
        Ok(alpha_constant() * self.v("M_root")? + div(ln(x0)?, root)? + div(self.v("abs_log_head")?, root)?)
    }

    /// [`mn_gap_constant_at`](Self::mn_gap_constant_at) at the start of the
    /// ledger's gap range, where it is largest. Must not exceed the ledger's
    /// gap constant.
    pub fn mn_gap_constant(&self) -> Result<Enclosure> {
        let e = self.ledger.get("mn_gap")?;
        let (lo, hi) = match e.range {
            (RangeBound::Value(lo), RangeBound::Value(hi)) => (lo.to_enclosure(), hi.to_enclosure()),
            _ => return Err(Error::Ledger("`mn_gap` needs a finite decimal range".into())),
        };
        // The M model is used on [33, x/6].
        self.require("M_root", Enclosure::point(33.0), div(hi, Enclosure::point(6.0))?)?;
        self.mn_gap_constant_at(lo)
    }

    /// `|N/(x log x) − M/x| <= c/(√x log x)` on `[x_lo, x_hi]`, after
    /// re-deriving `c` from α.
    pub fn mn_gap_root(&self, x_lo: Enclosure, x_hi: Enclosure) -> Result<Vec<TraceStep>> {
        const LEMMA: &str = "mn_gap_root";
        self.require("mn_gap", x_lo, x_hi)?;
        let derived = self.mn_gap_constant()?;
        let c = self.v("mn_gap")?;
        if !derived.certainly_le(&c) {
            return Err(Error::Pipeline {
                pipeline: "first-range".into(),
                step: "mn_gap".into(),
                reason: format!("derived gap constant {derived} exceeds the ledger's {c}"),
            });
        }
        let t = div(c, sqrt(x_lo)? * ln(x_lo)?)?;
        Ok(vec![TraceStep::new(LEMMA, "gap", t, &["mn_gap", "M_root", "abs_log_head"])])
    }

    /// `H + 2·c_M·√T`: the constant of the `1/(x log x)` term.
    pub fn n_to_m_constant(&self, t: Enclosure) -> Result<Enclosure> {
        Ok(self.v("abs_log_head")? + Enclosure::point(2.0) * self.v("M_root")? * sqrt(t)?)
    }

    /// Gap for `x >= x_lo` given `|M(u)|/u <= sup` on `[T, x/6]`:
    /// `β·sup/log x + (H + 2c_M√T)/(x log x) + 1/x`.
    pub fn n_to_m_gap(&self, x_lo: Enclosure, sup: Enclosure, t: Enclosure, sup_hypothesis: &str) -> Result<Vec<TraceStep>> {
        const LEMMA: &str = "n_to_m_gap";
        if !self.ledger.get("M_root")?.covers(t, t) {
            return Err(Error::HypothesisRange {
                key: "M_root".into(),
                reason: format!("threshold T = {t} must lie in the model range"),
            });
        }
        let beta = self.v("beta_rounded")?;
        if !beta_constant().certainly_le(&beta) {
            return Err(Error::Ledger(format!("beta_rounded {beta} is below β = {}", beta_constant())));
        }
        // All three terms decrease in x.
        let log_x = ln(x_lo)?;
        Ok(vec![
            TraceStep::new(LEMMA, "beta_sup", div(beta * sup, log_x)?, &["beta_rounded"]).with_hypothesis(sup_hypothesis),
            TraceStep::new(LEMMA, "head_over_x_log_x", div(self.n_to_m_constant(t)?, x_lo * log_x)?, &["abs_log_head", "M_root"]),
            TraceStep::new(LEMMA, "one_over_x", div(Enclosure::ONE, x_lo)?, &[]),
        ])
    }

    // ---- dyadic step: X = a·10^16, y = √X, X <= x <= 2X ------------------------

    /// N-terms for `X <= x <= 2X`, given `sup |M(t)|/t <= sup` on `[10^16, 2X]`.
    pub fn dyadic_step(&self, a: Decimal, sup: Enclosure, sup_hypothesis: &str) -> Result<Vec<TraceStep>> {
        const LEMMA: &str = "dyadic";
        if a <= Decimal::from_u64(0) || a > Decimal::from_u64(DYADIC_MAX_A) {
            return Err(Error::InvalidArgument(format!("dyadic step needs 0 < a <= {DYADIC_MAX_A}, got {a}")));
        }
        let ae = a.to_enclosure();
        let big_x = ae * Enclosure::point(1e16);
        let y = sqrt(big_x)?;
        let two_y = Enclosure::point(2.0) * y;
        // x/y lies in [y, 2y]; x/j for j <= x/y lies in [y, 2X].
        self.require("psi_root", y, Enclosure::point(2.0) * big_x)?;
        self.require("M_root", y, Enclosure::point(1e16))?;
        self.require("m1_root", y, two_y)?;
        self.require("mu2_sqrt_log", y, two_y)?;
        self.require("lambda_sqrt_c", y, y)?;
        let (c_psi, c_m) = (self.v("psi_root")?, self.v("M_root")?);
        let log_x = ln(big_x)?;
        let root_x = sqrt(big_x)?;
        // Every term below is non-increasing in x, so x = X.
        let psi_m = div(c_psi * c_m, root_x * log_x)?;
        let m1 = div(self.v("m1_root")?, sqrt(y)? * log_x)?;
        let mu2_main = div(c_psi * self.twelve_over_pi2()?, log_x * sqrt(y)?)?;
        let mu2_log = div(self.v("mu2_sqrt_log")? * c_psi, root_x)?;
        // Σ_{k<=2a−1} Λ(k)/k <= log(2a−1); empty once 2a − 1 < 2.
        let k_max = Enclosure::point(2.0) * ae - Enclosure::ONE;
        let head = if k_max.hi() < 2.0 {
            Enclosure::ZERO
        } else {
            div(ln(k_max)?, log_x)? * sup
        };
        let b = self.lambda_b()?;
        let tail = div(c_m, root_x * log_x)?
            * (Enclosure::point(2.0) * sqrt(y)? + b * ln(y)? - self.v("lambda_sqrt_c")?);
        Ok(vec![
            TraceStep::new(LEMMA, "psi_M_product", psi_m, &["psi_root", "M_root"]),
            TraceStep::new(LEMMA, "m1_root", m1, &["m1_root"]),
            TraceStep::new(LEMMA, "mu2_main", mu2_main, &["psi_root"]),
            TraceStep::new(LEMMA, "mu2_log", mu2_log, &["psi_root", "mu2_sqrt_log"]),
            TraceStep::new(LEMMA, "lambda_head", head, &[]).with_hypothesis(sup_hypothesis),
            TraceStep::new(LEMMA, "lambda_tail", tail, &["M_root", self.opts.lambda_constant.key(), "lambda_sqrt_c"]),
        ])
    }

    // ---- large x: x >= 10^19 ------------------------------------------------------

    /// `y` for a level, with `y² <= 10^19` enforced.
    pub fn level_y(&self, level: Level) -> Result<Enclosure> {
        match level {
            Level::Cap => sqrt(Enclosure::point(LARGE_X)),
            Level::L(l) => {
                let s = self.v("M_root")? * Enclosure::from_u64(l);
                let y = s * s;
                if y.hi() * y.hi() > LARGE_X && mul_up(y.hi(), y.hi()) > LARGE_X {
                    return Err(Error::InvalidArgument(format!(
                        "y = (c_M·{l})² = {:.6e} has y² > 1e19; cap the level at L*",
                        y.hi()
                    )));
                }
                Ok(y)
            }
        }
    }

    /// `L* = 10^{19/4}/c_M`.
    pub fn l_star(&self) -> Result<Enclosure> {
        div(sqrt(sqrt(Enclosure::point(LARGE_X))?)?, self.v("M_root")?)
    }

    fn fk_term(&self) -> Result<Enclosure> {
        let exact = self.consts.six_over_pi_squared() * self.v("faber_kadiri")?;
        if self.opts.round_fk_term {
            round_up_two_digits(exact)
        } else {
            Ok(exact)
        }
    }

    /// N-terms for `x >= 10^19` given `|M(u)|/u <= c_M/√y` for `u >= y`.
    pub fn large_x_step(&self, level: Level, sup_hypothesis: &str) -> Result<Vec<TraceStep>> {
        const LEMMA: &str = "large_x";
        let y = self.level_y(level)?;
        let big = Enclosure::point(LARGE_X);
        let log_big = ln(big)?;
        let log_y_split = Decimal::from_u64(LARGE_X_LOG_Y);
        let split = log_y_split.to_enclosure().exp()?;
        let (c_psi, c_m) = (self.v("psi_root")?, self.v("M_root")?);
        let root_y = sqrt(y)?;
        let sup = div(c_m, root_y)?;
        // m₁(x/y) with x/y >= 10^19/y: the root model up to A, the tail past it.
        let tail = self.ledger.get("m1_tail")?;
        let a_start = tail.range.0.to_enclosure().expect("finite start");
        let x_over_y = div(big, y)?;
        let m1_at = if x_over_y.hi() <= a_start.lo() { x_over_y } else { a_start };
        self.require("m1_root", m1_at, a_start)?;
        self.require("psi_root", y, split)?;
        self.require("lambda_over_k_offset", y, y)?;
        let fk = self.ledger.get("faber_kadiri")?;
        if fk.range.0 != RangeBound::Exp(log_y_split) && !fk.covers(split, split) {
            return Err(Error::HypothesisRange {
                key: "faber_kadiri".into(),
                reason: format!("needed from exp({LARGE_X_LOG_Y}), valid from {}", fk.range.0),
            });
        }
        // Side condition −12/(π²√Y) + c·√Y/x < 0 at x = 10^19, the worst case.
        let side = self.mu2_window_sqrt_side(split, big)?;
        if !side.certainly_lt(&Enclosure::ZERO) {
            return Err(Error::Pipeline {
                pipeline: "large-x".into(),
                step: "mu2_window".into(),
                reason: format!("side condition {side} is not negative"),
            });
        }
        // Every term is constant or decreasing in x: x = 10^19.
        let product = div(div(c_psi, root_y)? * sup, log_big)?;
        // sup of |m₁| on [x/y, ∞): root model up to A, tail beyond.
        let m1_sup = div(self.v("m1_root")?, sqrt(m1_at)?)?.max(div(self.v("m1_tail")?, sqrt(a_start)?)?);
        let m1 = div(m1_sup, log_big)?;
        let lambda = div(sup * (ln(y)? - self.v("lambda_over_k_offset")?), log_big)?;
        let psi_far = self.fk_term()?;
        let window = div(c_psi, log_big)?
            * (div(self.twelve_over_pi2()?, root_y)?
                + div(self.v("mu2_window_log")? * ln(div(split, y)?)?, sqrt(big)?)?);
        Ok(vec![
            TraceStep::new(LEMMA, "psi_M_product", product, &["psi_root"]).with_hypothesis(sup_hypothesis),
            TraceStep::new(LEMMA, "m1_root", m1, &["m1_root", "m1_tail"]),
            TraceStep::new(LEMMA, "lambda_sum", lambda, &["lambda_over_k_offset"]).with_hypothesis(sup_hypothesis),
            TraceStep::new(LEMMA, "psi_far", psi_far, &["faber_kadiri"]),
            TraceStep::new(LEMMA, "mu2_window", window, &["psi_root", "mu2_window_sqrt", "mu2_window_log"]),
        ])
    }

    /// `−12/(π²√Y) + c·√Y/x`.
    pub fn mu2_window_sqrt_side(&self, split: Enclosure, x: Enclosure) -> Result<Enclosure> {
        let root = sqrt(split)?;
        Ok(div(self.v("mu2_window_sqrt")? * root, x)? - div(self.twelve_over_pi2()?, root)?)
    }

    /// `|M|/x <= |N|/(x log x) + β·c_M/(√y log x) + (H + 2c_M√y)/(x log x) + 1/x`
    /// at `x = 10^19`.
    pub fn large_x_gap(&self, level: Level, sup_hypothesis: &str) -> Result<Vec<TraceStep>> {
        let y = self.level_y(level)?;
        let sup = div(self.v("M_root")?, sqrt(y)?)?;
        self.n_to_m_gap(Enclosure::point(LARGE_X), sup, y, sup_hypothesis)
    }

    // ---- auxiliary estimates ---------------------------------------------------

    /// `Σ_{n<=X} μ²(n)/n <= (6/π²) log(7X)`, after checking `exp(c/(6/π²)) < 7`.
    pub fn mu2_over_n_bound(&self, x: Enclosure) -> Result<Enclosure> {
        if x.lo() < 1.0 {
            return Err(Error::InvalidArgument("needs X >= 1".into()));
        }
        let d = self.consts.six_over_pi_squared();
        let factor = div(self.v("mu2_over_n_hi")?, d)?.exp()?;
        if !factor.certainly_lt(&Enclosure::point(7.0)) {
            return Err(Error::Ledger(format!("exp(c/(6/π²)) = {factor} is not below 7")));
        }
        Ok(d * ln(Enclosure::point(7.0) * x)?)
    }

    /// `(1/√x) Σ_{k<=x/y} μ²(k)/√k <= 12/(π²√y) + c·log(x/y)/√x` for `x/y >= 10^4`.
    pub fn mu2_sqrt_bound(&self, x: Enclosure, y: Enclosure) -> Result<Enclosure> {
        let ratio = div(x, y)?;
        self.require("mu2_sqrt_log", ratio, ratio)?;
        Ok(div(self.twelve_over_pi2()?, sqrt(y)?)? + div(self.v("mu2_sqrt_log")? * ln(ratio)?, sqrt(x)?)?)
    }

    /// `Σ_{x/Y<j<=x/y} (μ²(j)/j)/√(x/j) <= (6/π²)(2/√y − 2/√Y) + c₁√Y/x + c₂ log(Y/y)/√x`.
    pub fn mu2_window_bound(&self, x: Enclosure, y: Enclosure, split: Enclosure) -> Result<Enclosure> {
        if !(y.lo() >= 1.0 && split.lo() >= y.hi() && x.lo() >= split.hi()) {
            return Err(Error::InvalidArgument("needs x >= Y >= y >= 1".into()));
        }
        let two = Enclosure::point(2.0);
        let main = self.consts.six_over_pi_squared() * (div(two, sqrt(y)?)? - div(two, sqrt(split)?)?);
        Ok(main
            + div(self.v("mu2_window_sqrt")? * sqrt(split)?, x)?
            + div(self.v("mu2_window_log")? * ln(div(split, y)?)?, sqrt(x)?)?)
    }

    /// Slack in `−6/π² + q + R <= (c − q/2) log X` at the smallest X, with
    /// `R = ½(q₀ − q) log 1664`; the inequality turns the Q(x) bounds into the
    /// μ²/√k estimate.
    pub fn mu2_sqrt_constant_margin(&self) -> Result<Enclosure> {
        let q = self.v("q_large")?;
        let q0 = self.v("q_small")?;
        let switch = self.ledger.get("q_large")?.range.0.to_enclosure().expect("finite");
        let r = Enclosure::point(0.5) * (q0 - q) * ln(switch)?;
        let lhs = q + r - self.consts.six_over_pi_squared();
        let x_min = self.ledger.get("mu2_sqrt_log")?.range.0.to_enclosure().expect("finite");
        let rhs = (self.v("mu2_sqrt_log")? - Enclosure::point(0.5) * q) * ln(x_min)?;
        Ok(rhs - lhs)
    }

    /// Slack in `γ − R(y) >= offset` for `Σ Λ(k)/k <= log y − offset`,
    /// at the worst point of each remainder range.
    pub fn lambda_over_k_offset_margin(&self) -> Result<Enclosure> {
        let offset = self.v("lambda_over_k_offset")?;
        let y0 = self.ledger.get("lambda_over_k_offset")?.range.0.to_enclosure().expect("finite");
        let small = self.v("ramare_lambda_small")?;
        let large = self.v("ramare_lambda_large")?;
        let switch = self.ledger.get("ramare_lambda_large")?.range.0.to_enclosure().expect("finite");
        let gamma = self.consts.euler_gamma;
        let m1 = gamma - div(small, sqrt(y0)?)? - offset;
        let m2 = gamma - div(large, ln(switch)?)? - offset;
        Ok(m1.min(m2))
    }

    /// `1/K = a·u − b·u²` for `u = 1/log x`, smaller root, as `log₁₀ x`.
    pub fn ramare_crossover(&self, k: u64) -> Result<Crossover> {
        let (a, b) = (self.v("ramare_M_a")?, self.v("ramare_M_b")?);
        let c = div(Enclosure::ONE, Enclosure::from_u64(k))?;
        let disc = a * a - Enclosure::point(4.0) * b * c;
        if disc.lo() <= 0.0 {
            return Err(Error::InvalidArgument(format!("no crossover for K = {k}")));
        }
        // 2c/(a + √disc) avoids cancellation.
        let u = div(Enclosure::point(2.0) * c, a + sqrt(disc)?)?;
        let log_x = u.recip()?;
        let log10_x = div(log_x, ln(Enclosure::point(10.0))?)?;
        Ok(Crossover { u, log_x, log10_x })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Crossover {
    pub u: Enclosure,
    pub log_x: Enclosure,
    pub log10_x: Enclosure,
}
