//! Conditional entropies H(X|Y) per family.
//!
//! Every construction is two-step: (1) evaluate the family entropy on each
//! conditional slice, (2) aggregate the slice values with the family's mean.
//! Shannon aggregates linearly under the conditioning marginal; tsallis
//! linearly under the escort of that marginal; renyi takes the
//! Kolmogorov-Nagumo mean with its exponential generator under the order-q
//! escort. The two-index families (frank_daffertshofer, sharma_mittal)
//! aggregate under the escort of order r — the index of their inner power
//! sum — because that is the unique weighting under which their deformed
//! chain rule closes; order-q weights break it whenever q != r.
//! The ja aggregation is deliberately naive (escort-weighted KN mean of the
//! inner log-likelihoods, deformed afterwards) and does not satisfy any
//! chain rule on dependent tables; it exists to exhibit that failure.
//!
//! Conditioning columns with zero mass are skipped: their aggregation
//! weight is exactly zero and their slices have no entropy to contribute.

use crate::deformed::{kn_mean, KnFunction};
use crate::error::{Error, Result};
use crate::families::{entropy, ja_inner, shannon_bits, EntropySpec, Family};
use crate::prob::{escort, power_sum, Axis, JointTable, ProbVector};
use crate::tolerances::LIMIT_EPSILON;

/// Per-slice family entropies along the conditioning axis; slices on
/// zero-mass columns are left as 0.0 placeholders (they carry zero weight
/// in every aggregation and are skipped by `kn_mean`).
fn slice_values<F>(j: &JointTable, given: Axis, mut f: F) -> Result<Vec<f64>>
where
    F: FnMut(&ProbVector) -> Result<f64>,
{
    let marg = j.marginal(given);
    let n = marg.len();
    let mut values = vec![0.0; n];
    for (i, &mass) in marg.weights().iter().enumerate() {
        if mass > 0.0 {
            values[i] = f(&j.conditional_slice(given, i)?)?;
        }
    }
    Ok(values)
}

/// Conditional entropy of the remaining variable given the `given` axis:
/// `conditional(spec, j, Axis::Y)` is H(X|Y).
///
/// Supported families: shannon, renyi, tsallis, frank_daffertshofer,
/// sharma_mittal, ja. The landsberg and behara_chawla functionals have no
/// conditional construction here.
pub fn conditional(spec: &EntropySpec, j: &JointTable, given: Axis) -> Result<f64> {
    let marg = j.marginal(given);
    match spec.family() {
        Family::Shannon => {
            let values = slice_values(j, given, |s| Ok(shannon_bits(s)))?;
            kn_mean(&values, &marg, &KnFunction::linear())
        }
        Family::Tsallis => {
            let q = spec.q().unwrap();
            let weights = escort(&marg, q)?;
            let values = slice_values(j, given, |s| entropy(spec, s))?;
            kn_mean(&values, &weights, &KnFunction::linear())
        }
        Family::Renyi => {
            let q = spec.q().unwrap();
            let weights = escort(&marg, q)?;
            let values = slice_values(j, given, |s| entropy(spec, s))?;
            kn_mean(&values, &weights, &KnFunction::renyi(q)?)
        }
        Family::FrankDaffertshofer => {
            let (q, r) = (spec.q().unwrap(), spec.r().unwrap());
            let weights = escort(&marg, r)?;
            let values = slice_values(j, given, |s| entropy(spec, s))?;
            kn_mean(&values, &weights, &KnFunction::fd(q, r)?)
        }
        Family::SharmaMittal => {
            let (q, r) = (spec.q().unwrap(), spec.r().unwrap());
            let weights = escort(&marg, r)?;
            let values = slice_values(j, given, |s| entropy(spec, s))?;
            kn_mean(&values, &weights, &KnFunction::sm(q, r)?)
        }
        Family::Ja => {
            let q = spec.q().unwrap();
            let weights = escort(&marg, q)?;
            let inners = slice_values(j, given, |s| ja_inner(s, q))?;
            let u = kn_mean(&inners, &weights, &KnFunction::renyi(q)?)?;
            if (q - 1.0).abs() <= LIMIT_EPSILON {
                Ok(std::f64::consts::LN_2 * u)
            } else {
                Ok((((1.0 - q) * u).exp2() - 1.0) / (1.0 - q))
            }
        }
        Family::Landsberg | Family::BeharaChawla => Err(Error::invalid_parameters(format!(
            "family {} has no conditional construction",
            spec.family()
        ))),
    }
}

/// Closed form of the order-q conditional along `given`:
/// (1/(1-q)) log2( sum_cells p^q / sum_given p^q ). Serves as an
/// independent cross-check of the KN construction for the renyi family.
/// Undefined at q = 1 (use the construction, which routes to Shannon).
pub fn renyi_conditional_closed(j: &JointTable, q: f64, given: Axis) -> Result<f64> {
    if !q.is_finite() {
        return Err(Error::invalid_parameters(format!(
            "q must be finite, got {q}"
        )));
    }
    if (q - 1.0).abs() <= LIMIT_EPSILON {
        return Err(Error::invalid_parameters(
            "closed form is undefined at q = 1",
        ));
    }
    let joint_sum = power_sum(j.cells(), q);
    let marg_sum = power_sum(j.marginal(given).weights(), q);
    Ok((joint_sum / marg_sum).log2() / (1.0 - q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prob::product_join;

    fn j(rows: Vec<Vec<f64>>) -> JointTable {
        JointTable::new(rows).unwrap()
    }

    fn supported_specs() -> Vec<EntropySpec> {
        vec![
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
        ]
    }

    #[test]
    fn shannon_conditional_golden() {
        // columns are (0.8, 0.2) and (0.2, 0.8): H(X|Y) = H2(0.8)
        let t = j(vec![vec![0.4, 0.1], vec![0.1, 0.4]]);
        let h = conditional(&EntropySpec::shannon(), &t, Axis::Y).unwrap();
        let h2 = -(0.8f64 * 0.8f64.log2() + 0.2 * 0.2f64.log2());
        assert!((h - h2).abs() < 1e-14);
        assert!((h - 0.7219280948873623).abs() < 1e-14);
    }

    #[test]
    fn independence_reduces_to_the_marginal() {
        let px = ProbVector::new(vec![0.6, 0.3, 0.1]).unwrap();
        let py = ProbVector::new(vec![0.2, 0.5, 0.3]).unwrap();
        let t = product_join(&px, &py);
        for spec in supported_specs() {
            let c = conditional(&spec, &t, Axis::Y).unwrap();
            let m = entropy(&spec, &px).unwrap();
            assert!((c - m).abs() < 1e-10, "{}: {c} vs {m}", spec.describe());
        }
    }

    #[test]
    fn determined_variable_has_zero_conditional_entropy() {
        let t = j(vec![vec![0.5, 0.0], vec![0.0, 0.5]]);
        for spec in supported_specs() {
            for given in [Axis::X, Axis::Y] {
                let c = conditional(&spec, &t, given).unwrap();
                assert!(c.abs() < 1e-12, "{} given {given}: {c}", spec.describe());
            }
        }
    }

    #[test]
    fn zero_mass_columns_are_skipped() {
        // third column never occurs; values must match the 2-column table
        let padded = j(vec![vec![0.4, 0.1, 0.0], vec![0.1, 0.4, 0.0]]);
        let base = j(vec![vec![0.4, 0.1], vec![0.1, 0.4]]);
        for spec in supported_specs() {
            let a = conditional(&spec, &padded, Axis::Y).unwrap();
            let b = conditional(&spec, &base, Axis::Y).unwrap();
            assert!((a - b).abs() < 1e-12, "{}", spec.describe());
        }
    }

    #[test]
    fn closed_form_golden_and_construction_match() {
        let t = j(vec![vec![0.4, 0.1], vec![0.1, 0.4]]);
        let closed = renyi_conditional_closed(&t, 2.0, Axis::Y).unwrap();
        // sum p^2 = 0.34 over cells, 0.5 over the Y marginal: -log2(0.68)
        assert!((closed - (25.0f64 / 17.0).log2()).abs() < 1e-14, "{closed}");
        let built = conditional(&EntropySpec::renyi(2.0).unwrap(), &t, Axis::Y).unwrap();
        assert!((built - closed).abs() < 1e-12);
    }

    #[test]
    fn closed_form_on_products_and_diagonal() {
        let px = ProbVector::new(vec![0.7, 0.3]).unwrap();
        let py = ProbVector::new(vec![0.4, 0.6]).unwrap();
        let t = product_join(&px, &py);
        for q in [0.5, 2.0, 3.0] {
            let closed = renyi_conditional_closed(&t, q, Axis::Y).unwrap();
            let marg = entropy(&EntropySpec::renyi(q).unwrap(), &px).unwrap();
            assert!((closed - marg).abs() < 1e-12, "q={q}");
        }
        let d = j(vec![vec![0.5, 0.0], vec![0.0, 0.5]]);
        assert!(renyi_conditional_closed(&d, 2.0, Axis::Y)
            .unwrap()
            .abs()
            < 1e-14);
    }

    #[test]
    fn closed_form_rejects_order_one() {
        let t = j(vec![vec![0.4, 0.1], vec![0.1, 0.4]]);
        assert!(renyi_conditional_closed(&t, 1.0, Axis::Y).is_err());
        assert!(renyi_conditional_closed(&t, 1.0 + 1e-12, Axis::Y).is_err());
    }

    #[test]
    fn unsupported_families_are_rejected() {
        let t = j(vec![vec![0.4, 0.1], vec![0.1, 0.4]]);
        for spec in [
            EntropySpec::landsberg(2.0).unwrap(),
            EntropySpec::behara_chawla(0.5).unwrap(),
        ] {
            assert!(matches!(
                conditional(&spec, &t, Axis::Y),
                Err(Error::InvalidParameters { .. })
            ));
        }
    }

    #[test]
    fn ja_aggregation_equals_escort_linear_mean_of_slice_entropies() {
        // The KN mean of inner values under the exponential generator,
        // deformed afterwards, is affinely identical to the escort-weighted
        // arithmetic mean of the deformed slice entropies.
        for q in [0.5, 2.0, 3.0] {
            let spec = EntropySpec::ja(q).unwrap();
            for t in [
                j(vec![vec![0.4, 0.1], vec![0.1, 0.4]]),
                j(vec![vec![0.5, 0.1], vec![0.1, 0.3]]),
                j(vec![vec![0.2, 0.1, 0.15], vec![0.05, 0.3, 0.2]]),
            ] {
                let built = conditional(&spec, &t, Axis::Y).unwrap();
                let marg = t.marginal(Axis::Y);
                let w = escort(&marg, q).unwrap();
                let mut linear = 0.0;
                for (l, &wl) in w.weights().iter().enumerate() {
                    if wl > 0.0 {
                        let s = t.conditional_slice(Axis::Y, l).unwrap();
                        linear += wl * entropy(&spec, &s).unwrap();
                    }
                }
                assert!(
                    (built - linear).abs() < 1e-12,
                    "q={q}: {built} vs {linear}"
                );
            }
        }
    }
}
