//! Property checks shared by the acceptance runner and the property tests.
//! Each returns a one-line summary, or the first counterexample.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use mertens_core::certify::certificate::BoundCertificate;
use mertens_core::certify::ledger::{Ledger, REQUIRED_KEYS};
use mertens_core::certify::lemmas::{Chain, ChainOptions};
use mertens_core::certify::pipeline::{self, FirstRangeInputs, FIRST_RANGE_Y};
use mertens_core::enclosure::{arith, ArithOp};
use mertens_core::identity::mobius_floor_identity_check;
use mertens_core::{Enclosure, Error, Mode, ScanConfig, SeriesKind, Summatory};

pub type Check = Result<String, String>;

// ---- enclosure containment ---------------------------------------------------------

enum Expr {
    Leaf(f64),
    Bin(ArithOp, Box<Expr>, Box<Expr>),
}

fn random_leaf(rng: &mut StdRng) -> f64 {
    let m: f64 = rng.gen_range(-1000.0..1000.0);
    m * 2f64.powi(rng.gen_range(-30..30))
}

fn random_expr(rng: &mut StdRng, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return Expr::Leaf(random_leaf(rng));
    }
    let op = [ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div][rng.gen_range(0..4)];
    Expr::Bin(op, Box::new(random_expr(rng, depth - 1)), Box::new(random_expr(rng, depth - 1)))
}

fn eval_enclosure(e: &Expr) -> Option<Enclosure> {
    match e {
        Expr::Leaf(v) => Some(Enclosure::point(*v)),
        Expr::Bin(op, a, b) => arith(*op, eval_enclosure(a)?, Some(eval_enclosure(b)?)).ok(),
    }
}

fn eval_exact(e: &Expr) -> Option<BigRational> {
    match e {
        Expr::Leaf(v) => BigRational::from_f64(*v),
        Expr::Bin(op, a, b) => {
            let (a, b) = (eval_exact(a)?, eval_exact(b)?);
            Some(match op {
                ArithOp::Add => a + b,
                ArithOp::Sub => a - b,
                ArithOp::Mul => a * b,
                ArithOp::Div if b.is_zero() => return None,
                ArithOp::Div => a / b,
                _ => unreachable!(),
            })
        }
    }
}

fn q(x: f64) -> BigRational {
    BigRational::from_f64(x).expect("finite")
}

/// Random `+ − × ÷` trees on exact leaves, then a square root when the
/// value is non-negative; every enclosure must contain the exact value.
pub fn expression_trees(count: usize, seed: u64) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    let (mut checked, mut roots) = (0, 0);
    for i in 0..count {
        let e = random_expr(&mut rng, 4);
        let (Some(enc), Some(exact)) = (eval_enclosure(&e), eval_exact(&e)) else {
            continue;
        };
        checked += 1;
        if q(enc.lo()) > exact || exact > q(enc.hi()) {
            return Err(format!("tree {i}: {enc} misses {exact}"));
        }
        if !exact.is_negative() {
            if let Ok(r) = enc.max(Enclosure::ZERO).sqrt() {
                roots += 1;
                let (lo, hi) = (q(r.lo()), q(r.hi()));
                if &lo * &lo > exact || exact > &hi * &hi {
                    return Err(format!("tree {i}: sqrt enclosure {r} misses sqrt({exact})"));
                }
            }
        }
    }
    if checked < count / 2 {
        return Err(format!("only {checked} of {count} trees evaluated"));
    }
    Ok(format!("{checked} trees and {roots} square roots contain the exact value"))
}

// ---- ledger monotonicity ------------------------------------------------------------

/// Every bound of every pipeline, keyed by position.
pub fn all_bounds(ledger: &Ledger) -> mertens_core::Result<Vec<(String, f64)>> {
    let c = Chain::new(ledger, ChainOptions::default());
    let f = pipeline::first_range(&c, FirstRangeInputs::printed())?;
    let d = pipeline::dyadic(&c, &f)?;
    let x = pipeline::large_x_iteration(&c)?;
    let mut out = vec![("first/N".to_string(), f.n.bound), ("first/M".to_string(), f.m.bound)];
    for r in &d.rows {
        out.push((format!("dyadic/{}/N", r.a), r.n.bound));
        out.push((format!("dyadic/{}/M", r.a), r.m.bound));
    }
    for (i, r) in x.rows.iter().enumerate() {
        out.push((format!("large-x/{i}/N"), r.n.bound));
        out.push((format!("large-x/{i}/M"), r.m.bound));
    }
    Ok(out)
}

/// Weakening any entry by 1% never lowers a bound. Either direction may make
/// the ledger inconsistent, in which case the pipeline refuses to certify.
/// Strengthening is reported but not required to be monotone: the large-x
/// split y = (c_M L)² moves with c_M, and a smaller y enlarges the window term.
pub fn ledger_sweeps() -> Check {
    let base_ledger = Ledger::builtin();
    let base = all_bounds(&base_ledger).map_err(|e| e.to_string())?;
    let mut compared = 0;
    let mut rejected = Vec::new();
    let mut raised = Vec::new();
    for key in REQUIRED_KEYS {
        for pct in [1, -1] {
            let l = base_ledger.weakened(key, pct).map_err(|e| e.to_string())?;
            let bounds = match all_bounds(&l) {
                Ok(b) => b,
                Err(Error::Pipeline { step, .. }) => {
                    rejected.push(format!("{key} {pct:+}% at {step}"));
                    continue;
                }
                Err(e) => return Err(format!("{key} {pct:+}%: {e}")),
            };
            for ((name, b0), (name1, b1)) in base.iter().zip(&bounds) {
                if name != name1 {
                    continue;
                }
                compared += 1;
                if pct > 0 && b1 < b0 {
                    return Err(format!("{key} {pct:+}%: {name} moved {b0:e} -> {b1:e}"));
                }
                if pct < 0 && b1 > b0 {
                    raised.push(format!("{key}: {name}"));
                }
            }
        }
    }
    Ok(format!(
        "{} keys x ±1%, {compared} bound comparisons, refused: [{}], raised by strengthening: [{}]",
        REQUIRED_KEYS.len(),
        rejected.join(", "),
        raised.join(", ")
    ))
}

// ---- replay ------------------------------------------------------------------------

pub fn trace_replay() -> Check {
    let l = Ledger::builtin();
    let c = Chain::new(&l, ChainOptions::default());
    let a = pipeline::theorem_a(&c, FirstRangeInputs::printed()).map_err(|e| e.to_string())?;
    let b = pipeline::theorem_a(&c, FirstRangeInputs::printed()).map_err(|e| e.to_string())?;
    let (ca, cb): (Vec<&BoundCertificate>, Vec<&BoundCertificate>) =
        (pipeline::all_certificates(&a), pipeline::all_certificates(&b));
    for (x, y) in ca.iter().zip(&cb) {
        if !x.replay_matches() {
            return Err(format!("{} does not replay", x.id));
        }
        if x.bound.to_bits() != y.bound.to_bits() || x.trace != y.trace {
            return Err(format!("{} differs between runs", x.id));
        }
    }
    Ok(format!("{} certificates replay bitwise", ca.len()))
}

// ---- scan determinism --------------------------------------------------------------

/// Every series to `x` in parallel, serially, and with a different segment
/// size; rigorous values must agree exactly, fast values for a fixed grid.
pub fn parallel_serial(x: u64) -> Check {
    let parallel = Summatory::new(ScanConfig::default());
    let serial = Summatory::new(ScanConfig::default().serial());
    let small = Summatory::new(ScanConfig::default().with_segment_size(1 << 13));
    let stride = (x / 10).max(1);
    let mut n = 0;
    for kind in SeriesKind::ALL {
        let p = parallel.scan(kind, Mode::Rigorous, x, stride).map_err(|e| e.to_string())?;
        let s = serial.scan(kind, Mode::Rigorous, x, stride).map_err(|e| e.to_string())?;
        let g = small.scan(kind, Mode::Rigorous, x, stride).map_err(|e| e.to_string())?;
        if p.checkpoints != s.checkpoints || p.checkpoints != g.checkpoints {
            return Err(format!("{kind}: rigorous checkpoints differ"));
        }
        let pf = parallel.scan(kind, Mode::Fast, x, stride).map_err(|e| e.to_string())?;
        let sf = serial.scan(kind, Mode::Fast, x, stride).map_err(|e| e.to_string())?;
        if pf.checkpoints != sf.checkpoints {
            return Err(format!("{kind}: fast checkpoints differ between parallel and serial"));
        }
        n += 1;
    }
    Ok(format!("{n} series to {x}: parallel, serial and re-segmented scans agree bitwise"))
}

// ---- floor identity ------------------------------------------------------------------

pub fn floor_identities(count: usize, seed: u64) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..count {
        let den: u64 = rng.gen_range(1..=100);
        let num: u64 = rng.gen_range(den..=den * 200_000);
        let k: u64 = rng.gen_range(1..=1000);
        let u = Ratio::new(num, den);
        if !mobius_floor_identity_check(u, k).map_err(|e| e.to_string())? {
            return Err(format!("identity fails at u = {u}, k = {k}"));
        }
    }
    Ok(format!("{count} random (u, k) satisfy the floor identity"))
}

// ---- endpoint soundness --------------------------------------------------------------

/// First-range lemmas evaluated at random interior points never exceed the
/// certified per-lemma totals.
pub fn endpoint_soundness(count: usize, seed: u64) -> Check {
    let l = Ledger::builtin();
    let c = Chain::new(&l, ChainOptions::default());
    let inputs = FirstRangeInputs::printed();
    let cert = pipeline::first_range(&c, inputs).map_err(|e| e.to_string())?.n;
    let mut rng = StdRng::seed_from_u64(seed);
    let total = |steps: Vec<mertens_core::certify::certificate::TraceStep>| -> f64 {
        steps.iter().map(|s| s.value.hi()).sum()
    };
    for _ in 0..count {
        let x = Enclosure::point(rng.gen_range(1e16..2e16));
        let run = || -> mertens_core::Result<[f64; 3]> {
            Ok([
                total(c.bound_tail_small(FIRST_RANGE_Y, x, x, inputs.m1)?),
                total(c.bound_lambda_part_small(FIRST_RANGE_Y, x, x)?),
                total(c.bound_psi_part_small(FIRST_RANGE_Y, x, x, inputs.mu2_sqrt_sum)?),
            ])
        };
        let vals = run().map_err(|e| e.to_string())?;
        for (v, lemma) in vals.iter().zip(["tail_small", "lambda_part_small", "psi_part_small"]) {
            if *v > cert.lemma_total(lemma) {
                return Err(format!("{lemma} at x = {:e}: {v:e} exceeds {:e}", x.mid(), cert.lemma_total(lemma)));
            }
        }
    }
    Ok(format!("{count} interior points stay below the endpoint bounds"))
}

pub fn exact_int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
