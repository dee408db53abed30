//! The certification suite: eleven numbered criteria that together verify
//! the library's composition laws end to end on seeded random sweeps and
//! pinned reference tables. Each criterion produces one pass/fail verdict
//! built from labelled checks; `run_suite` assembles the full report,
//! including the final self-check criterion that turns the suite on itself
//! (the exit claim plus a tolerance-sensitivity probe).
//!
//! Two checks are expected to fail by design and are kept failing as
//! executable documentation: the pinned symmetric table in criterion 6 has
//! permutation-equivalent conditional slices, so the dependence signals it
//! was meant to exhibit vanish identically; and the exactness tolerance in
//! criterion 11 guards quantities that are zero to machine precision, so
//! no positive threshold can be tripped by tightening it. Each such check
//! sits next to a passing supplement that demonstrates the intended
//! substance on an asymmetric table.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chain::{
    bayes_residual, chain_residual, n_chain_residual, pseudo_add_residual, pseudo_sum,
    pseudo_sum_expanded, Rule,
};
use crate::conditional::{conditional, renyi_conditional_closed};
use crate::darotzy::{DarotzyParams, TransformedEntropy};
use crate::families::{entropy, shannon_bits, EntropySpec};
use crate::landsberg::{classify, SamplerConfig};
use crate::prob::{escort_discrepancy, product_join, Axis, JointTable};
use crate::sampling::{sample_dim, sample_joint, sample_joint_nd, sample_simplex};
use crate::tolerances::{
    CLOSED_FORM_TOLERANCE, DISCREPANCY_FLOOR, DISTINCTNESS_FLOOR, EXACT_TOLERANCE,
    LIMIT_TOLERANCE, RESIDUAL_TOLERANCE,
};

/// Seed used when none is supplied (tests, CLI default).
pub const DEFAULT_SEED: u64 = 42;

const SWEEP: u64 = 1000;
const SMALL_SWEEP: u64 = 100;

/// The thresholds every check is measured against. The first four are
/// upper bounds (residuals, agreement gaps); the last two are lower bounds
/// (signals that must exceed a floor to count as present).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Tolerances {
    pub residual: f64,
    pub closed_form: f64,
    pub exact: f64,
    pub limit: f64,
    pub distinct: f64,
    pub discrepancy_floor: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            residual: RESIDUAL_TOLERANCE,
            closed_form: CLOSED_FORM_TOLERANCE,
            exact: EXACT_TOLERANCE,
            limit: LIMIT_TOLERANCE,
            distinct: DISTINCTNESS_FLOOR,
            discrepancy_floor: DISCREPANCY_FLOOR,
        }
    }
}

/// One labelled check inside a criterion.
#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// One numbered criterion: passes iff all its checks pass.
#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub checks: Vec<CheckLine>,
}

/// The full suite outcome.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub tolerances: Tolerances,
    pub criteria: Vec<CriterionResult>,
    pub all_passed: bool,
}

fn rng_for(seed: u64, criterion: u64, lane: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((criterion << 32) | lane);
    rng
}

fn check(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckLine {
    CheckLine {
        label: label.into(),
        passed,
        detail: detail.into(),
    }
}

fn finish(id: u8, title: &str, checks: Vec<CheckLine>) -> CriterionResult {
    let passed = checks.iter().all(|c| c.passed);
    CriterionResult {
        id,
        title: title.to_string(),
        passed,
        checks,
    }
}

fn sweep_max(
    seed: u64,
    criterion: u64,
    lane: u64,
    trials: u64,
    mut f: impl FnMut(&mut ChaCha8Rng) -> f64,
) -> f64 {
    let mut rng = rng_for(seed, criterion, lane);
    let mut max = 0.0f64;
    for _ in 0..trials {
        max = max.max(f(&mut rng).abs());
    }
    max
}

fn bound_line(label: impl Into<String>, max: f64, bound: f64, trials: u64) -> CheckLine {
    check(
        label,
        max <= bound,
        format!("max |deviation| = {max:.3e} over {trials} seeded samples (bound {bound:.0e})"),
    )
}

fn pinned_symmetric() -> JointTable {
    JointTable::new(vec![vec![0.4, 0.1], vec![0.1, 0.4]]).unwrap()
}

fn pinned_asymmetric() -> JointTable {
    JointTable::new(vec![vec![0.5, 0.1], vec![0.1, 0.3]]).unwrap()
}

// ---------------------------------------------------------------- criterion 1

fn c1(seed: u64, tol: &Tolerances) -> CriterionResult {
    let mut checks = Vec::new();
    let mut configs: Vec<(EntropySpec, String)> = Vec::new();
    for q in [0.5, 2.0] {
        configs.push((
            EntropySpec::tsallis(q).unwrap(),
            format!("tsallis(q={q}) composes with coefficient 1-q on independent pairs"),
        ));
        configs.push((
            EntropySpec::landsberg(q).unwrap(),
            format!("landsberg(q={q}) composes with coefficient 1-q on independent pairs"),
        ));
    }
    // gamma = 1 + log2(1.5) induces index 0.5; the extremes bracket it
    for gamma in [1.5849625007211562, 0.5, 2.0] {
        let spec = EntropySpec::behara_chawla(gamma).unwrap();
        let q = spec.extensivity_q();
        configs.push((
            spec,
            format!(
                "behara_chawla(gamma={gamma}) composes with its induced coefficient (q = {q})"
            ),
        ));
    }
    for (lane, (spec, label)) in configs.into_iter().enumerate() {
        let q = spec.extensivity_q();
        let max = sweep_max(seed, 1, lane as u64, SWEEP, |rng| {
            let dx = sample_dim(rng, 2, 6);
            let dy = sample_dim(rng, 2, 6);
            let px = sample_simplex(rng, dx);
            let py = sample_simplex(rng, dy);
            pseudo_add_residual(&spec, &px, &py, Rule::TsallisAdd { q })
                .expect("sweep inputs are valid")
        });
        checks.push(bound_line(label, max, tol.residual, SWEEP));
    }
    // the induced index of behara_chawla never reaches 2, so the q = 2
    // regime of this composition law is exercised by the power-sum families
    let sup = (-8..=8)
        .map(|g| 2.0 - (f64::from(g) / 2.0 - 1.0).exp2())
        .fold(f64::NEG_INFINITY, f64::max);
    checks.push(check(
        "behara_chawla induced index stays below 2 for every gamma",
        sup < 2.0,
        format!(
            "2 - 2^(gamma-1) approaches 2 only as gamma -> -inf (grid sup {sup:.4}); \
             the q = 2 regime is covered by tsallis and landsberg directly"
        ),
    ));
    finish(
        1,
        "power-law families compose with coefficient (1-q) on independent pairs",
        checks,
    )
}

// ---------------------------------------------------------------- criterion 2

fn c2(seed: u64, tol: &Tolerances) -> CriterionResult {
    let mut checks = Vec::new();
    let shannon = EntropySpec::shannon();
    let max = sweep_max(seed, 2, 0, SWEEP, |rng| {
        let rows = sample_dim(rng, 2, 8);
        let cols = sample_dim(rng, 2, 8);
        let t = sample_joint(rng, rows, cols);
        let a = chain_residual(&shannon, &t, Rule::AdditiveChain, Axis::X).unwrap();
        let b = chain_residual(&shannon, &t, Rule::AdditiveChain, Axis::Y).unwrap();
        a.abs().max(b.abs())
    });
    checks.push(bound_line(
        "shannon satisfies the additive chain rule (both conditioning axes)",
        max,
        tol.residual,
        SWEEP,
    ));
    for (i, q) in [0.5, 2.0, 3.0].into_iter().enumerate() {
        let spec = EntropySpec::renyi(q).unwrap();
        let lane = 1 + 2 * i as u64;
        let max = sweep_max(seed, 2, lane, SWEEP, |rng| {
            let rows = sample_dim(rng, 2, 8);
        let cols = sample_dim(rng, 2, 8);
        let t = sample_joint(rng, rows, cols);
            let a = chain_residual(&spec, &t, Rule::AdditiveChain, Axis::X).unwrap();
            let b = chain_residual(&spec, &t, Rule::AdditiveChain, Axis::Y).unwrap();
            a.abs().max(b.abs())
        });
        checks.push(bound_line(
            format!("renyi(q={q}) satisfies the additive chain rule with its exponential mean"),
            max,
            tol.residual,
            SWEEP,
        ));
        let max = sweep_max(seed, 2, lane + 1, SWEEP, |rng| {
            let rows = sample_dim(rng, 2, 8);
        let cols = sample_dim(rng, 2, 8);
        let t = sample_joint(rng, rows, cols);
            let built = conditional(&spec, &t, Axis::Y).unwrap();
            let closed = renyi_conditional_closed(&t, q, Axis::Y).unwrap();
            built - closed
        });
        checks.push(bound_line(
            format!("renyi(q={q}) conditional construction matches the closed form"),
            max,
            tol.closed_form,
            SWEEP,
        ));
    }
    finish(
        2,
        "additive chain rule for shannon and renyi conditionals",
        checks,
    )
}

// ---------------------------------------------------------------- criterion 3

fn c3(seed: u64, tol: &Tolerances) -> CriterionResult {
    let mut checks = Vec::new();
    let mut lane = 0u64;
    for q in [0.5, 2.0] {
        let spec = EntropySpec::tsallis(q).unwrap();
        let max = sweep_max(seed, 3, lane, SWEEP, |rng| {
            let rows = sample_dim(rng, 2, 6);
        let cols = sample_dim(rng, 2, 6);
        let t = sample_joint(rng, rows, cols);
            let a = chain_residual(&spec, &t, Rule::QExtensiveChain { q }, Axis::X).unwrap();
            let b = chain_residual(&spec, &t, Rule::QExtensiveChain { q }, Axis::Y).unwrap();
            a.abs().max(b.abs())
        });
        checks.push(bound_line(
            format!("tsallis(q={q}) satisfies its deformed chain rule"),
            max,
            tol.residual,
            SWEEP,
        ));
        lane += 1;
    }
    for q in [0.5, 2.0] {
        for r in [0.5, 2.0] {
            for family in ["frank_daffertshofer", "sharma_mittal"] {
                let (spec, label) = if family == "frank_daffertshofer" {
                    let s = EntropySpec::frank_daffertshofer(q, r).unwrap();
                    let label = format!(
                        "frank_daffertshofer(q={q}, r={r}) chains with coefficient 1-q"
                    );
                    (s, label)
                } else {
                    let s = EntropySpec::sharma_mittal(q, r).unwrap();
                    let delta = (1.0 - q).exp2() - 1.0;
                    let label = format!(
                        "sharma_mittal(q={q}, r={r}) chains with coefficient delta = {delta:.6}"
                    );
                    (s, label)
                };
                let qe = spec.extensivity_q();
                let max = sweep_max(seed, 3, lane, SWEEP, |rng| {
                    let rows = sample_dim(rng, 2, 6);
        let cols = sample_dim(rng, 2, 6);
        let t = sample_joint(rng, rows, cols);
                    let a =
                        chain_residual(&spec, &t, Rule::QExtensiveChain { q: qe }, Axis::X)
                            .unwrap();
                    let b =
                        chain_residual(&spec, &t, Rule::QExtensiveChain { q: qe }, Axis::Y)
                            .unwrap();
                    a.abs().max(b.abs())
                });
                checks.push(bound_line(label, max, tol.residual, SWEEP));
                lane += 1;
            }
        }
    }
    finish(
        3,
        "deformed chain rule for tsallis and the two-index families",
        checks,
    )
}

// ---------------------------------------------------------------- criterion 4

fn c4(seed: u64, tol: &Tolerances) -> CriterionResult {
    let mut checks = Vec::new();
    let mut lane = 0u64;
    for q in [0.5, 2.0] {
        let map = DarotzyParams::new(1.0, 1.0 - q, 1.0 - q).unwrap();
        let mut bases = vec![(EntropySpec::shannon(), "shannon".to_string())];
        for r in [0.5, 2.0] {
            bases.push((EntropySpec::renyi(r).unwrap(), format!("renyi(r={r})")));
        }
        for (base, base_name) in bases {
            let transformed = TransformedEntropy::new(base, map).unwrap();
            let max = sweep_max(seed, 4, lane, SWEEP, |rng| {
                let rows = sample_dim(rng, 2, 6);
        let cols = sample_dim(rng, 2, 6);
        let t = sample_joint(rng, rows, cols);
                let a = transformed.chain_residual(&t, Axis::X).unwrap();
                let b = transformed.chain_residual(&t, Axis::Y).unwrap();
                a.abs().max(b.abs())
            });
            checks.push(bound_line(
                format!(
                    "{base_name} pushed through the map with gamma = {} \
                     chains with that coefficient",
                    1.0 - q
                ),
                max,
                tol.residual,
                SWEEP,
            ));
            lane += 1;
        }
    }
    for q in [0.5, 2.0] {
        let map = DarotzyParams::new(1.0, 1.0 - q, 1.0 - q).unwrap();
        let a = TransformedEntropy::new(EntropySpec::shannon(), map).unwrap();
        let b = TransformedEntropy::new(EntropySpec::renyi(2.0).unwrap(), map).unwrap();
        let max = sweep_max(seed, 4, lane, SMALL_SWEEP, |rng| {
            let d = sample_dim(rng, 2, 6);
        let p = sample_simplex(rng, d);
            a.entropy(&p).unwrap() - b.entropy(&p).unwrap()
        });
        checks.push(check(
            format!(
                "shannon-based and renyi(2)-based transforms stay distinct (gamma = {})",
                1.0 - q
            ),
            max > tol.distinct,
            format!(
                "max |difference| = {max:.3e} over {SMALL_SWEEP} samples \
                 (must exceed {:.0e})",
                tol.distinct
            ),
        ));
        lane += 1;
    }
    finish(
        4,
        "deformation maps transport the chain rule with their own coefficient",
        checks,
    )
}

// ---------------------------------------------------------------- criterion 5

fn c5(seed: u64, tol: &Tolerances) -> CriterionResult {
    let mut checks = Vec::new();
    let mut lane = 0u64;
    for q in [0.5, 2.0] {
        for r in [0.5, 2.0] {
            let renyi = EntropySpec::renyi(r).unwrap();
            let fd = EntropySpec::frank_daffertshofer(q, r).unwrap();
            let fd_map = DarotzyParams::new(1.0, 1.0 - q, 1.0 - q).unwrap();
            let max = sweep_max(seed, 5, lane, SWEEP, |rng| {
                let d = sample_dim(rng, 2, 6);
        let p = sample_simplex(rng, d);
                entropy(&fd, &p).unwrap() - fd_map.forward(entropy(&renyi, &p).unwrap())
            });
            checks.push(bound_line(
                format!(
                    "frank_daffertshofer(q={q}, r={r}) equals the map with \
                     lambda = gamma = 1-q applied to renyi(r)"
                ),
                max,
                tol.residual,
                SWEEP,
            ));
            lane += 1;
            let sm = EntropySpec::sharma_mittal(q, r).unwrap();
            let delta = (1.0 - q).exp2() - 1.0;
            let sm_map = DarotzyParams::new(1.0, 1.0 - q, delta).unwrap();
            let max = sweep_max(seed, 5, lane, SWEEP, |rng| {
                let d = sample_dim(rng, 2, 6);
        let p = sample_simplex(rng, d);
                entropy(&sm, &p).unwrap() - sm_map.forward(entropy(&renyi, &p).unwrap())
            });
            checks.push(bound_line(
                format!(
                    "sharma_mittal(q={q}, r={r}) equals the map with \
                     lambda = 1-q, gamma = 2^(1-q)-1 applied to renyi(r)"
                ),
                max,
                tol.residual,
                SWEEP,
            ));
            lane += 1;
        }
    }
    finish(
        5,
        "two-index families factor through deformation maps of the order-r entropy",
        checks,
    )
}

// ---------------------------------------------------------------- criterion 6

fn c6(seed: u64, tol: &Tolerances) -> CriterionResult {
    let mut checks = Vec::new();
    let max = sweep_max(seed, 6, 0, SMALL_SWEEP, |rng| {
        let dx = sample_dim(rng, 2, 6);
        let dy = sample_dim(rng, 2, 6);
        let px = sample_simplex(rng, dx);
        let py = sample_simplex(rng, dy);
        escort_discrepancy(&product_join(&px, &py), 2.0).unwrap()
    });
    checks.push(bound_line(
        "escort factorization is exact on independent tables (q = 2)",
        max,
        tol.exact,
        SMALL_SWEEP,
    ));

    let sym = pinned_symmetric();
    let d_sym = escort_discrepancy(&sym, 2.0).unwrap();
    checks.push(check(
        "pinned symmetric table: discrepancy matches its hand-derived value (exactly 0)",
        d_sym.abs() <= tol.exact,
        format!("measured {d_sym:.3e}; both conditional slices are permutations of (0.8, 0.2)"),
    ));
    checks.push(check(
        "pinned symmetric table: discrepancy exceeds the dependence floor",
        d_sym > tol.discrepancy_floor,
        format!(
            "measured {d_sym:.3e} against floor {:.0e}: the table is dependent, but its \
             conditional slices share every power sum, so the escort factorization is exact \
             and the expected dependence signal vanishes identically; kept failing as \
             documentation of that degeneracy",
            tol.discrepancy_floor
        ),
    ));

    let asym = pinned_asymmetric();
    let d_asym = escort_discrepancy(&asym, 2.0).unwrap();
    let golden = 7.0 / 234.0;
    checks.push(check(
        "pinned asymmetric table: discrepancy exceeds the floor and matches 7/234",
        d_asym > tol.discrepancy_floor && (d_asym - golden).abs() <= tol.exact,
        format!(
            "measured {d_asym:.12} vs the exact rational 7/234 = {golden:.12} \
             (floor {:.0e})",
            tol.discrepancy_floor
        ),
    ));

    for (lane, q) in [(1u64, 0.5), (2, 2.0)] {
        let spec = EntropySpec::ja(q).unwrap();
        let max = sweep_max(seed, 6, lane, SWEEP, |rng| {
            let dx = sample_dim(rng, 2, 6);
            let dy = sample_dim(rng, 2, 6);
            let px = sample_simplex(rng, dx);
            let py = sample_simplex(rng, dy);
            pseudo_add_residual(&spec, &px, &py, Rule::TsallisAdd { q }).unwrap()
        });
        checks.push(bound_line(
            format!("ja(q={q}) composes with coefficient 1-q on independent pairs"),
            max,
            tol.residual,
            SWEEP,
        ));
    }

    let ja2 = EntropySpec::ja(2.0).unwrap();
    let r_sym = chain_residual(&ja2, &sym, Rule::QExtensiveChain { q: 2.0 }, Axis::Y).unwrap();
    checks.push(check(
        "pinned symmetric table: ja chain residual matches its hand-derived value (~0)",
        r_sym.abs() <= tol.exact,
        format!("measured {r_sym:.3e}; equal slice power sums collapse the defect"),
    ));
    checks.push(check(
        "pinned symmetric table: ja chain defect exceeds the distinctness floor",
        r_sym.abs() > tol.distinct,
        format!(
            "measured {r_sym:.3e} against floor {:.0e}: the naive conditional violates the \
             deformed chain rule on dependent tables in general, but this table's \
             permutation-equivalent slices make the violation vanish; kept failing as \
             documentation, with the asymmetric supplement below carrying the substance",
            tol.distinct
        ),
    ));

    let r2 = chain_residual(&ja2, &asym, Rule::QExtensiveChain { q: 2.0 }, Axis::Y).unwrap();
    let ja_h = EntropySpec::ja(0.5).unwrap();
    let rh = chain_residual(&ja_h, &asym, Rule::QExtensiveChain { q: 0.5 }, Axis::Y).unwrap();
    let g2 = -0.005698764117754426;
    let gh = 0.006848420099849317;
    checks.push(check(
        "pinned asymmetric table: ja chain defect is macroscopic and matches its pinned values",
        r2.abs() > tol.distinct
            && rh.abs() > tol.distinct
            && (r2 - g2).abs() <= tol.exact
            && (rh - gh).abs() <= tol.exact,
        format!(
            "q=2: measured {r2:.15} vs pinned {g2}; q=0.5: measured {rh:.15} vs pinned {gh} \
             (floor {:.0e})",
            tol.distinct
        ),
    ));

    finish(
        6,
        "escort factorization and the naive-conditional chain defect",
        checks,
    )
}

// ---------------------------------------------------------------- criterion 7

fn c7(seed: u64, tol: &Tolerances) -> CriterionResult {
    let mut checks = Vec::new();
    let mut lane = 0u64;
    for n in [3usize, 4] {
        for q in [0.5, 2.0] {
            let max = sweep_max(seed, 7, lane, SWEEP, |rng| {
                let vs: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..3.0)).collect();
                pseudo_sum(&vs, q) - pseudo_sum_expanded(&vs, q).unwrap()
            });
            checks.push(bound_line(
                format!("deformed sum of {n} terms matches its subset expansion (q={q})"),
                max,
                tol.closed_form,
                SWEEP,
            ));
            lane += 1;
        }
    }
    for q in [0.5, 2.0] {
        let spec = EntropySpec::tsallis(q).unwrap();
        let max = sweep_max(seed, 7, lane, SWEEP, |rng| {
            let t = sample_joint_nd(rng, &[2, 2, 2]);
            n_chain_residual(&spec, &t, q).unwrap()
        });
        checks.push(bound_line(
            format!("tsallis(q={q}) satisfies the 3-variable deformed chain rule"),
            max,
            tol.residual,
            SWEEP,
        ));
        lane += 1;
    }
    let shannon = EntropySpec::shannon();
    let max = sweep_max(seed, 7, lane, SWEEP, |rng| {
        let t = sample_joint_nd(rng, &[2, 2, 2]);
        n_chain_residual(&shannon, &t, 1.0).unwrap()
    });
    checks.push(bound_line(
        "shannon satisfies the 3-variable additive chain rule",
        max,
        tol.residual,
        SWEEP,
    ));
    lane += 1;
    let spec = EntropySpec::tsallis(2.0).unwrap();
    let max = sweep_max(seed, 7, lane, SWEEP / 2, |rng| {
        let t = sample_joint_nd(rng, &[2, 3, 2]);
        n_chain_residual(&spec, &t, 2.0).unwrap()
    });
    checks.push(bound_line(
        "the chain rule is shape-agnostic (tsallis(q=2) on 2x3x2 joints)",
        max,
        tol.residual,
        SWEEP / 2,
    ));
    finish(
        7,
        "n-variable deformed chain rule and its subset expansion",
        checks,
    )
}

// ---------------------------------------------------------------- criterion 8

fn c8(seed: u64, tol: &Tolerances) -> CriterionResult {
    let mut checks = Vec::new();
    for (lane, q) in [(0u64, 0.5), (1, 2.0)] {
        let spec = EntropySpec::tsallis(q).unwrap();
        let max = sweep_max(seed, 8, lane, SWEEP, |rng| {
            let rows = sample_dim(rng, 2, 6);
        let cols = sample_dim(rng, 2, 6);
        let t = sample_joint(rng, rows, cols);
            bayes_residual(&spec, &t, q).unwrap()
        });
        checks.push(bound_line(
            format!("tsallis(q={q}) satisfies the deformed Bayes identity"),
            max,
            tol.residual,
            SWEEP,
        ));
    }
    let shannon = EntropySpec::shannon();
    let max = sweep_max(seed, 8, 2, SWEEP, |rng| {
        let rows = sample_dim(rng, 2, 6);
        let cols = sample_dim(rng, 2, 6);
        let t = sample_joint(rng, rows, cols);
        bayes_residual(&shannon, &t, 1.0).unwrap()
    });
    checks.push(bound_line(
        "at q = 1 the identity degenerates to classical Bayes (shannon)",
        max,
        tol.residual,
        SWEEP,
    ));
    finish(8, "deformed Bayes identity for the tsallis family", checks)
}

// ---------------------------------------------------------------- criterion 9

fn c9(seed: u64, tol: &Tolerances) -> CriterionResult {
    const EPS: f64 = 1e-6; // outside the 1e-9 routing window: the generic branch is exercised
    let ln2 = std::f64::consts::LN_2;
    let mut checks = Vec::new();
    let mut lane = 0u64;

    // (label, family constructor at q, limit value as fn of the sample)
    type Limit = Box<dyn Fn(&crate::prob::ProbVector) -> f64>;
    let renyi2 = EntropySpec::renyi(2.0).unwrap();
    let cases: Vec<(String, Box<dyn Fn(f64) -> EntropySpec>, Limit)> = vec![
        (
            "renyi(q -> 1) approaches the bit-valued shannon entropy".into(),
            Box::new(|q| EntropySpec::renyi(q).unwrap()),
            Box::new(shannon_bits),
        ),
        (
            "tsallis(q -> 1) approaches the shannon entropy in natural-log units".into(),
            Box::new(|q| EntropySpec::tsallis(q).unwrap()),
            Box::new(move |p| ln2 * shannon_bits(p)),
        ),
        (
            "landsberg(q -> 1) approaches the shannon entropy in natural-log units".into(),
            Box::new(|q| EntropySpec::landsberg(q).unwrap()),
            Box::new(move |p| ln2 * shannon_bits(p)),
        ),
        (
            "ja(q -> 1) approaches the shannon entropy in natural-log units".into(),
            Box::new(|q| EntropySpec::ja(q).unwrap()),
            Box::new(move |p| ln2 * shannon_bits(p)),
        ),
        (
            "behara_chawla(gamma -> 1) approaches the bit-valued shannon entropy".into(),
            Box::new(|g| EntropySpec::behara_chawla(g).unwrap()),
            Box::new(shannon_bits),
        ),
        (
            "sharma_mittal(q -> 1, r = 2) approaches the bit-valued renyi(2) entropy".into(),
            Box::new(|q| EntropySpec::sharma_mittal(q, 2.0).unwrap()),
            Box::new({
                let renyi2 = renyi2.clone();
                move |p| entropy(&renyi2, p).unwrap()
            }),
        ),
        (
            "frank_daffertshofer(q -> 1, r = 2) approaches renyi(2) in natural-log units".into(),
            Box::new(|q| EntropySpec::frank_daffertshofer(q, 2.0).unwrap()),
            Box::new({
                let renyi2 = renyi2.clone();
                move |p| ln2 * entropy(&renyi2, p).unwrap()
            }),
        ),
    ];
    for (label, make, limit) in &cases {
        let below = make(1.0 - EPS);
        let above = make(1.0 + EPS);
        let max = sweep_max(seed, 9, lane, SMALL_SWEEP, |rng| {
            let d = sample_dim(rng, 2, 6);
        let p = sample_simplex(rng, d);
            let target = limit(&p);
            let a = entropy(&below, &p).unwrap() - target;
            let b = entropy(&above, &p).unwrap() - target;
            a.abs().max(b.abs())
        });
        checks.push(bound_line(label.clone(), max, tol.limit, SMALL_SWEEP));
        lane += 1;
    }

    // measured gap between the power-sum families' limit and the bit-valued
    // form, recorded so the unit convention is explicit in the report
    let tsallis_near = EntropySpec::tsallis(1.0 - EPS).unwrap();
    let gap = sweep_max(seed, 9, lane, SMALL_SWEEP, |rng| {
        let d = sample_dim(rng, 2, 6);
        let p = sample_simplex(rng, d);
        entropy(&tsallis_near, &p).unwrap() - shannon_bits(&p)
    });
    checks.push(check(
        "unit convention note: power-sum families limit to ln(2) x bits",
        true,
        format!(
            "max |tsallis(q=1-1e-6) - shannon_bits| = {gap:.3e}: differentiating the power \
             sum produces natural logarithms, and rescaling to bits would break the (1-q) \
             composition coefficient verified in criteria 1 and 3; the families are therefore \
             certified against their natural-log limit, while renyi, behara_chawla and \
             sharma_mittal are bit-valued and certified against shannon_bits directly"
        ),
    ));
    finish(9, "q -> 1 limits recover the additive entropy", checks)
}

// --------------------------------------------------------------- criterion 10

fn c10(seed: u64, _tol: &Tolerances) -> CriterionResult {
    let mut checks = Vec::new();
    let cases = [
        (EntropySpec::shannon(), "SHC"),
        (EntropySpec::tsallis(2.0).unwrap(), "S\u{304}H\u{304}C"),
        (EntropySpec::tsallis(0.5).unwrap(), "SH\u{304}C"),
    ];
    for (spec, expected) in &cases {
        let config = SamplerConfig {
            trials: SWEEP,
            seed,
            ..SamplerConfig::default()
        };
        let verdict = classify(spec, &config).expect("classification inputs are valid");
        checks.push(check(
            format!("{} classifies as {expected}", spec.describe()),
            verdict.class_label == *expected && !verdict.inconsistent_label,
            format!(
                "observed {} after {} samples across the three probes",
                verdict.class_label, verdict.samples_used
            ),
        ));
    }
    let mut inconsistent = Vec::new();
    for (spec, _) in &cases {
        for offset in 0..4u64 {
            let config = SamplerConfig {
                trials: SWEEP,
                seed: seed.wrapping_add(offset),
                ..SamplerConfig::default()
            };
            let verdict = classify(spec, &config).expect("classification inputs are valid");
            if verdict.inconsistent_label {
                inconsistent.push(format!("{} @ seed+{offset}", spec.describe()));
            }
        }
    }
    checks.push(check(
        "no run lands on a logically inconsistent label across four seeds",
        inconsistent.is_empty(),
        if inconsistent.is_empty() {
            "the two unrealizable letter combinations (superadditive + homogeneous without \
             concavity, and its mirror) never appear"
                .to_string()
        } else {
            format!("inconsistent verdicts: {}", inconsistent.join(", "))
        },
    ));
    finish(
        10,
        "thermodynamic-property classification matches the known landscape",
        checks,
    )
}

// --------------------------------------------------------------- criterion 11

fn failing_labels(results: &[CriterionResult]) -> BTreeSet<(u8, String)> {
    let mut set = BTreeSet::new();
    for c in results {
        for line in &c.checks {
            if !line.passed {
                set.insert((c.id, line.label.clone()));
            }
        }
    }
    set
}

fn c11(seed: u64, tol: &Tolerances, defaults: &[CriterionResult]) -> CriterionResult {
    let mut checks = Vec::new();
    let pass_count = defaults.iter().filter(|c| c.passed).count();
    checks.push(check(
        "criteria 1-10 all pass at their default tolerances",
        pass_count == defaults.len(),
        format!(
            "{pass_count} of {} passed; the suite's exit claim requires all of them",
            defaults.len()
        ),
    ));

    let default_failures = failing_labels(defaults);
    let flips: [(&str, fn(&mut Tolerances)); 4] = [
        ("residual", |t| t.residual = 1e-15),
        ("closed_form", |t| t.closed_form = 1e-15),
        ("exact", |t| t.exact = 1e-15),
        ("limit", |t| t.limit = 1e-15),
    ];
    for (name, apply) in flips {
        let mut tightened = *tol;
        apply(&mut tightened);
        let rerun = run_criteria(seed, &tightened);
        let new: Vec<(u8, String)> = failing_labels(&rerun)
            .difference(&default_failures)
            .cloned()
            .collect();
        let passed = !new.is_empty();
        let detail = if passed {
            let (id, label) = &new[0];
            format!(
                "{} new failure(s), first in criterion {id}: {label}",
                new.len()
            )
        } else {
            format!(
                "no new failures: every quantity guarded by `{name}` is exact to better than \
                 1e-15 in this implementation, so this probe cannot distinguish the tolerance \
                 being honored from it being ignored; kept failing as documentation of that \
                 blind spot"
            )
        };
        checks.push(check(
            format!("tightening `{name}` to 1e-15 surfaces at least one new failure"),
            passed,
            detail,
        ));
    }
    checks.push(check(
        "floor thresholds are excluded from the tightening probe",
        true,
        "`distinct` and `discrepancy_floor` are lower bounds on signals; setting them to \
         1e-15 loosens the checks instead of tightening them, so they are exercised by the \
         criteria that depend on them rather than by this probe",
    ));
    finish(
        11,
        "suite self-check: exit claim and tolerance sensitivity",
        checks,
    )
}

/// Run one of criteria 1-10 on its own.
pub fn run_criterion(id: u8, seed: u64, tol: &Tolerances) -> Option<CriterionResult> {
    let f: fn(u64, &Tolerances) -> CriterionResult = match id {
        1 => c1,
        2 => c2,
        3 => c3,
        4 => c4,
        5 => c5,
        6 => c6,
        7 => c7,
        8 => c8,
        9 => c9,
        10 => c10,
        _ => return None,
    };
    Some(f(seed, tol))
}

/// Run criteria 1-10 in order.
pub fn run_criteria(seed: u64, tol: &Tolerances) -> Vec<CriterionResult> {
    (1..=10)
        .map(|id| run_criterion(id, seed, tol).unwrap())
        .collect()
}

/// Run the full suite including the self-check criterion. The self-check
/// reruns criteria 1-10 once per tightened tolerance, so this costs about
/// five times a plain `run_criteria`.
pub fn run_suite(seed: u64, tol: &Tolerances) -> SuiteReport {
    let mut criteria = run_criteria(seed, tol);
    let self_check = c11(seed, tol, &criteria);
    criteria.push(self_check);
    let all_passed = criteria.iter().all(|c| c.passed);
    SuiteReport {
        seed,
        tolerances: *tol,
        criteria,
        all_passed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_and_dispatch() {
        let tol = Tolerances::default();
        for id in 1..=10u8 {
            let c = run_criterion(id, 7, &tol).unwrap();
            assert_eq!(c.id, id);
            assert!(!c.checks.is_empty());
        }
        assert!(run_criterion(0, 7, &tol).is_none());
        assert!(run_criterion(11, 7, &tol).is_none());
        assert!(run_criterion(12, 7, &tol).is_none());
    }

    #[test]
    fn criterion_results_are_deterministic_for_a_seed() {
        let tol = Tolerances::default();
        let a = serde_json::to_string(&run_criterion(5, 9, &tol).unwrap()).unwrap();
        let b = serde_json::to_string(&run_criterion(5, 9, &tol).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn criterion_verdict_is_the_conjunction_of_its_checks() {
        let all_pass = finish(1, "t", vec![check("a", true, ""), check("b", true, "")]);
        assert!(all_pass.passed);
        let one_fails = finish(1, "t", vec![check("a", true, ""), check("b", false, "")]);
        assert!(!one_fails.passed);
    }

    #[test]
    fn failing_label_sets_diff_cleanly() {
        let mut r = finish(3, "t", vec![check("a", false, ""), check("b", true, "")]);
        let defaults = failing_labels(std::slice::from_ref(&r));
        assert_eq!(defaults.len(), 1);
        r.checks[1].passed = false;
        let tightened = failing_labels(std::slice::from_ref(&r));
        let new: Vec<_> = tightened.difference(&defaults).collect();
        assert_eq!(new, vec![&(3u8, "b".to_string())]);
    }
}
