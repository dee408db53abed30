//! Cross-family axiom sweeps: maximality at the uniform distribution,
//! invariance under zero-outcome padding, decisiveness at point masses,
//! and a measured (not asserted) look at whether conditioning can increase
//! the deformed entropies.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qentropy::chain::mutual_information;
use qentropy::conditional::conditional;
use qentropy::families::{entropy, EntropySpec};
use qentropy::prob::{Axis, ProbVector};
use qentropy::sampling::{sample_dim, sample_joint, sample_simplex};

fn all_configs() -> Vec<EntropySpec> {
    let mut specs = vec![EntropySpec::shannon()];
    for q in [0.5, 2.0] {
        specs.push(EntropySpec::renyi(q).unwrap());
        specs.push(EntropySpec::tsallis(q).unwrap());
        specs.push(EntropySpec::landsberg(q).unwrap());
        specs.push(EntropySpec::ja(q).unwrap());
    }
    for gamma in [0.5, 2.0] {
        specs.push(EntropySpec::behara_chawla(gamma).unwrap());
    }
    for q in [0.5, 2.0] {
        for r in [0.5, 2.0] {
            specs.push(EntropySpec::frank_daffertshofer(q, r).unwrap());
            specs.push(EntropySpec::sharma_mittal(q, r).unwrap());
        }
    }
    specs
}

/// The one exception to maximality in the catalogue: the naive ja
/// construction with q < 1 (see `ja_below_one_breaks_maximality`).
fn respects_maximality(spec: &EntropySpec) -> bool {
    !(spec.describe().starts_with("ja") && spec.q().unwrap_or(1.0) < 1.0)
}

#[test]
fn uniform_distribution_maximizes_every_family_except_naive_ja() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let configs: Vec<EntropySpec> = all_configs()
        .into_iter()
        .filter(respects_maximality)
        .collect();
    let uniform_values: Vec<Vec<f64>> = configs
        .iter()
        .map(|spec| {
            (2..=6)
                .map(|n| entropy(spec, &ProbVector::uniform(n).unwrap()).unwrap())
                .collect()
        })
        .collect();
    for _ in 0..1000 {
        let n = sample_dim(&mut rng, 2, 6);
        let p = sample_simplex(&mut rng, n);
        for (spec, uniforms) in configs.iter().zip(&uniform_values) {
            let h = entropy(spec, &p).unwrap();
            let bound = uniforms[n - 2];
            assert!(
                h <= bound + 1e-9,
                "{} at n={n}: {h} > uniform value {bound}",
                spec.describe()
            );
        }
    }
}

#[test]
fn ja_below_one_breaks_maximality() {
    // Pinned counterexample: the escort mean of -log2 p under q = 0.5
    // weights can exceed log2(n), so the deformed value exceeds the
    // uniform one. This is a real property of the naive construction, not
    // a numerical artifact; the margin is macroscopic.
    let spec = EntropySpec::ja(0.5).unwrap();
    let p = ProbVector::new(vec![
        0.6591010008156086,
        0.06437942419744015,
        0.043783278132599676,
        0.06490410428455047,
        0.09461244605765237,
        0.07321974651214874,
    ])
    .unwrap();
    let h = entropy(&spec, &p).unwrap();
    let uniform = entropy(&spec, &ProbVector::uniform(6).unwrap()).unwrap();
    assert!(
        h - uniform > 0.04,
        "expected a macroscopic excess, got {h} vs uniform {uniform}"
    );
    // the same construction with q > 1 shows no such excess here
    let spec2 = EntropySpec::ja(2.0).unwrap();
    let h2 = entropy(&spec2, &p).unwrap();
    let uniform2 = entropy(&spec2, &ProbVector::uniform(6).unwrap()).unwrap();
    assert!(h2 <= uniform2 + 1e-9);
}

#[test]
fn zero_outcomes_never_change_the_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let configs = all_configs();
    for _ in 0..200 {
        let n = sample_dim(&mut rng, 2, 5);
        let p = sample_simplex(&mut rng, n);
        let mut padded = p.weights().to_vec();
        padded.push(0.0);
        padded.insert(0, 0.0);
        let padded = ProbVector::new(padded).unwrap();
        for spec in &configs {
            let a = entropy(spec, &p).unwrap();
            let b = entropy(spec, &padded).unwrap();
            assert!(
                (a - b).abs() <= 1e-12,
                "{}: {a} vs {b}",
                spec.describe()
            );
        }
    }
}

#[test]
fn point_masses_have_zero_entropy() {
    for spec in all_configs() {
        for n in 2..=8 {
            for at in [0, n - 1] {
                let p = ProbVector::point_mass(n, at).unwrap();
                let h = entropy(&spec, &p).unwrap();
                assert!(h.abs() <= 1e-12, "{} at n={n}: {h}", spec.describe());
            }
        }
    }
}

#[test]
fn conditioning_monotonicity_measured_per_family() {
    // Shannon provably satisfies H(X|Y) <= H(X); the deformed families do
    // not in general, so their violation rates are measured and printed
    // rather than asserted. The output documents the observed landscape.
    let conditional_specs = vec![
        EntropySpec::shannon(),
        EntropySpec::renyi(0.5).unwrap(),
        EntropySpec::renyi(2.0).unwrap(),
        EntropySpec::tsallis(0.5).unwrap(),
        EntropySpec::tsallis(2.0).unwrap(),
        EntropySpec::frank_daffertshofer(0.5, 2.0).unwrap(),
        EntropySpec::frank_daffertshofer(2.0, 0.5).unwrap(),
        EntropySpec::sharma_mittal(0.5, 2.0).unwrap(),
        EntropySpec::sharma_mittal(2.0, 0.5).unwrap(),
        EntropySpec::ja(0.5).unwrap(),
        EntropySpec::ja(2.0).unwrap(),
    ];
    const TRIALS: usize = 500;
    for spec in &conditional_specs {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        let mut violations = 0usize;
        let mut worst = 0.0f64;
        for _ in 0..TRIALS {
            let rows = sample_dim(&mut rng, 2, 5);
            let cols = sample_dim(&mut rng, 2, 5);
            let t = sample_joint(&mut rng, rows, cols);
            let cond = conditional(spec, &t, Axis::Y).unwrap();
            let marg = entropy(spec, &t.marginal(Axis::X)).unwrap();
            let excess = cond - marg;
            if excess > 1e-12 {
                violations += 1;
                worst = worst.max(excess);
            }
        }
        println!(
            "conditioning monotonicity, {}: {violations}/{TRIALS} violations (worst excess {worst:.3e})",
            spec.describe()
        );
        if spec.describe() == "shannon" {
            assert_eq!(violations, 0, "shannon must satisfy the data-processing bound");
        }
    }
}

#[test]
fn shannon_dependence_measure_is_nonnegative_and_zero_on_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    let shannon = EntropySpec::shannon();
    for _ in 0..300 {
        let rows = sample_dim(&mut rng, 2, 5);
        let cols = sample_dim(&mut rng, 2, 5);
        let t = sample_joint(&mut rng, rows, cols);
        assert!(mutual_information(&shannon, &t).unwrap() >= -1e-12);
    }
    let px = sample_simplex(&mut rng, 4);
    let py = sample_simplex(&mut rng, 3);
    let product = qentropy::prob::product_join(&px, &py);
    assert!(mutual_information(&shannon, &product).unwrap().abs() <= 1e-12);
}
