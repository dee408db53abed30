//! Composition laws: pseudo-additivity on product joints, two-variable
//! chain rules, the n-variable deformed chain, and the deformed Bayes
//! identity. Everything is expressed as a signed residual (measured minus
//! predicted); verification means the residual vanishes to tolerance.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::conditional::conditional;
use crate::error::{Error, Result};
use crate::families::{entropy, EntropySpec};
use crate::prob::{product_join, Axis, JointNd, JointTable, ProbVector};
use crate::tolerances::LIMIT_EPSILON;

/// A composition law to verify a family against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Rule {
    /// H(XY) = H(X) + H(Y) on independent pairs.
    Additive,
    /// H(XY) = H(X) + H(Y) + (1-q) H(X) H(Y) on independent pairs.
    TsallisAdd { q: f64 },
    /// H(XY) = H(X) + H(Y) + (q-1) H(X) H(Y) on independent pairs.
    LandsbergAdd { q: f64 },
    /// H(XY)^(1/delta) = H(X)^(1/delta) + H(Y)^(1/delta) on independent
    /// pairs; requires delta > 0 and nonnegative entropies.
    DeltaAdd { delta: f64 },
    /// H(XY) = H(Y) + H(X|Y) on arbitrary joints.
    AdditiveChain,
    /// H(XY) = H(Y) + H(X|Y) + (1-q) H(Y) H(X|Y) on arbitrary joints.
    QExtensiveChain { q: f64 },
}

impl Rule {
    pub fn describe(&self) -> String {
        match self {
            Rule::Additive => "additive".into(),
            Rule::TsallisAdd { q } => format!("tsallis-additive(q={q})"),
            Rule::LandsbergAdd { q } => format!("landsberg-additive(q={q})"),
            Rule::DeltaAdd { delta } => format!("delta-additive(delta={delta})"),
            Rule::AdditiveChain => "additive-chain".into(),
            Rule::QExtensiveChain { q } => format!("q-extensive-chain(q={q})"),
        }
    }

    /// Parameters the rule carries, for structured reporting.
    pub fn parameters(&self) -> BTreeMap<String, f64> {
        let mut m = BTreeMap::new();
        match self {
            Rule::TsallisAdd { q }
            | Rule::LandsbergAdd { q }
            | Rule::QExtensiveChain { q } => {
                m.insert("q".into(), *q);
            }
            Rule::DeltaAdd { delta } => {
                m.insert("delta".into(), *delta);
            }
            Rule::Additive | Rule::AdditiveChain => {}
        }
        m
    }
}

/// Residual of a pseudo-additivity law on the product of two independent
/// marginals: H(product) minus the rule's prediction from H(px), H(py).
pub fn pseudo_add_residual(
    spec: &EntropySpec,
    px: &ProbVector,
    py: &ProbVector,
    rule: Rule,
) -> Result<f64> {
    let hx = entropy(spec, px)?;
    let hy = entropy(spec, py)?;
    let hxy = entropy(spec, &product_join(px, py).flatten())?;
    match rule {
        Rule::Additive => Ok(hxy - hx - hy),
        Rule::TsallisAdd { q } => Ok(hxy - (hx + hy + (1.0 - q) * hx * hy)),
        Rule::LandsbergAdd { q } => Ok(hxy - (hx + hy + (q - 1.0) * hx * hy)),
        Rule::DeltaAdd { delta } => {
            if !(delta.is_finite() && delta > 0.0) {
                return Err(Error::invalid_parameters(format!(
                    "delta-additive rule needs delta > 0, got {delta}"
                )));
            }
            for h in [hx, hy, hxy] {
                if h < 0.0 {
                    return Err(Error::NegativeEntropyForDeltaRule { value: h });
                }
            }
            let e = 1.0 / delta;
            Ok(hxy.powf(e) - hx.powf(e) - hy.powf(e))
        }
        Rule::AdditiveChain | Rule::QExtensiveChain { .. } => Err(Error::invalid_parameters(
            format!("{} is a chain rule; use chain_residual", rule.describe()),
        )),
    }
}

/// Residual of a two-variable chain rule on an arbitrary joint:
/// H(XY) minus the prediction assembled from the conditioning marginal and
/// the conditional along `given`.
pub fn chain_residual(
    spec: &EntropySpec,
    j: &JointTable,
    rule: Rule,
    given: Axis,
) -> Result<f64> {
    let h_joint = entropy(spec, &j.flatten())?;
    let h_given = entropy(spec, &j.marginal(given))?;
    let h_cond = conditional(spec, j, given)?;
    match rule {
        Rule::AdditiveChain => Ok(h_joint - (h_given + h_cond)),
        Rule::QExtensiveChain { q } => {
            Ok(h_joint - (h_given + h_cond + (1.0 - q) * h_given * h_cond))
        }
        _ => Err(Error::invalid_parameters(format!(
            "{} applies to independent pairs; use pseudo_add_residual",
            rule.describe()
        ))),
    }
}

/// Deformed sum of a sequence: the q-analogue of addition applied left to
/// right. Closed form [prod_i (1 + (1-q) v_i) - 1] / (1-q); plain sum at
/// q = 1.
pub fn pseudo_sum(values: &[f64], q: f64) -> f64 {
    if (q - 1.0).abs() <= LIMIT_EPSILON {
        return values.iter().sum();
    }
    let prod: f64 = values.iter().map(|v| 1.0 + (1.0 - q) * v).product();
    (prod - 1.0) / (1.0 - q)
}

/// The same deformed sum written as its subset expansion:
/// sum over nonempty S of (1-q)^(|S|-1) * prod_{i in S} v_i.
/// Exponential in len(values); intended as an independent cross-check for
/// short sequences (capped at 20 terms).
pub fn pseudo_sum_expanded(values: &[f64], q: f64) -> Result<f64> {
    let n = values.len();
    if n > 20 {
        return Err(Error::invalid_parameters(format!(
            "subset expansion is exponential; got {n} terms, cap is 20"
        )));
    }
    let mut total = 0.0;
    for mask in 1u32..(1 << n) {
        let mut prod = 1.0;
        for (i, v) in values.iter().enumerate() {
            if mask & (1 << i) != 0 {
                prod *= v;
            }
        }
        total += (1.0 - q).powi(mask.count_ones() as i32 - 1) * prod;
    }
    Ok(total)
}

/// Residual of the n-variable deformed chain rule on a joint of any
/// dimension: H(X1..Xn) minus the deformed sum of the per-step conditionals
/// H(Xi | X1..X{i-1}), each step conditioning on the full joint history.
pub fn n_chain_residual(spec: &EntropySpec, j: &JointNd, q: f64) -> Result<f64> {
    let n = j.ndim();
    if n < 2 {
        return Err(Error::invalid_parameters(format!(
            "n-variable chain needs at least 2 axes, got {n}"
        )));
    }
    let mut steps = Vec::with_capacity(n);
    for i in 1..=n {
        // rows of the pair table enumerate the joint history (X1..X{i-1});
        // for i = 1 the history is trivial and the step is plain H(X1).
        let table = j.leading_marginal(i)?.as_pair_table();
        steps.push(conditional(spec, &table, Axis::X)?);
    }
    let h_joint = entropy(spec, &j.flatten())?;
    Ok(h_joint - pseudo_sum(&steps, q))
}

/// Residual of the deformed Bayes identity
/// Phi(X) H(Y|X) - H(Y) + H(X) - Phi(Y) H(X|Y), with Phi(Z) = 1 + (1-q) H(Z).
/// Vanishes for the tsallis family at its own q (and reduces to the
/// classical Bayes identity at q = 1).
pub fn bayes_residual(spec: &EntropySpec, j: &JointTable, q: f64) -> Result<f64> {
    let hx = entropy(spec, &j.marginal(Axis::X))?;
    let hy = entropy(spec, &j.marginal(Axis::Y))?;
    let hy_given_x = conditional(spec, j, Axis::X)?;
    let hx_given_y = conditional(spec, j, Axis::Y)?;
    let phi_x = 1.0 + (1.0 - q) * hx;
    let phi_y = 1.0 + (1.0 - q) * hy;
    Ok(phi_x * hy_given_x - hy + hx - phi_y * hx_given_y)
}

/// Symmetric dependence measure H(X) + H(Y) - H(XY). Nonnegative for
/// shannon; sign-indefinite for the deformed families.
pub fn mutual_information(spec: &EntropySpec, j: &JointTable) -> Result<f64> {
    let hx = entropy(spec, &j.marginal(Axis::X))?;
    let hy = entropy(spec, &j.marginal(Axis::Y))?;
    let hxy = entropy(spec, &j.flatten())?;
    Ok(hx + hy - hxy)
}

/// One verification outcome in a machine-readable line, suitable for
/// appending to a JSON-lines log.
#[derive(Debug, Clone, Serialize)]
pub struct ResidualRecord {
    pub rule: String,
    pub family: String,
    pub parameters: BTreeMap<String, f64>,
    pub input_digest: String,
    pub residual: f64,
}

impl ResidualRecord {
    pub fn new(
        rule: &Rule,
        spec: &EntropySpec,
        input_digest: impl Into<String>,
        residual: f64,
    ) -> Self {
        let mut parameters = rule.parameters();
        if let Some(q) = spec.q() {
            parameters.entry("family_q".into()).or_insert(q);
        }
        if let Some(r) = spec.r() {
            parameters.entry("family_r".into()).or_insert(r);
        }
        if let Some(g) = spec.gamma() {
            parameters.entry("family_gamma".into()).or_insert(g);
        }
        ResidualRecord {
            rule: rule.describe(),
            family: spec.family().to_string(),
            parameters,
            input_digest: input_digest.into(),
            residual,
        }
    }

    /// Serialize to a single JSON line (no trailing newline). Field and
    /// map ordering are deterministic.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serialization cannot fail")
    }
}


#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    fn simplex(n: usize) -> impl Strategy<Value = ProbVector> {
        prop::collection::vec(0.01f64..1.0, n)
            .prop_map(|w| ProbVector::new(w).unwrap())
    }

    fn joint(max_dim: usize) -> impl Strategy<Value = JointTable> {
        (2..=max_dim, 2..=max_dim).prop_flat_map(|(r, c)| {
            prop::collection::vec(0.01f64..1.0, r * c)
                .prop_map(move |cells| JointTable::from_flat(r, c, cells).unwrap())
        })
    }

    proptest! {
        #[test]
        fn tsallis_pseudo_additivity(
            px in (2usize..=5).prop_flat_map(simplex),
            py in (2usize..=5).prop_flat_map(simplex),
            q in prop::sample::select(vec![0.5f64, 2.0]),
        ) {
            let spec = EntropySpec::tsallis(q).unwrap();
            let r = pseudo_add_residual(&spec, &px, &py, Rule::TsallisAdd { q }).unwrap();
            prop_assert!(r.abs() < 1e-10, "q={q}: {r}");
        }

        #[test]
        fn tsallis_chain_rule(
            t in joint(6),
            q in prop::sample::select(vec![0.5f64, 2.0]),
        ) {
            let spec = EntropySpec::tsallis(q).unwrap();
            for given in [Axis::X, Axis::Y] {
                let r = chain_residual(&spec, &t, Rule::QExtensiveChain { q }, given).unwrap();
                prop_assert!(r.abs() < 1e-10, "q={q} given {given}: {r}");
            }
        }

        #[test]
        fn subset_expansion_agrees(
            vs in prop::collection::vec(0.0f64..3.0, 1..=6),
            q in prop::sample::select(vec![0.5f64, 2.0]),
        ) {
            let closed = pseudo_sum(&vs, q);
            let expanded = pseudo_sum_expanded(&vs, q).unwrap();
            prop_assert!((closed - expanded).abs() < 1e-10);
        }

        #[test]
        fn shannon_mutual_information_is_nonnegative(t in joint(6)) {
            let m = mutual_information(&EntropySpec::shannon(), &t).unwrap();
            prop_assert!(m >= -1e-12, "{m}");
        }

        #[test]
        fn tsallis_bayes_identity(
            t in joint(6),
            q in prop::sample::select(vec![0.5f64, 2.0]),
        ) {
            let spec = EntropySpec::tsallis(q).unwrap();
            let r = bayes_residual(&spec, &t, q).unwrap();
            prop_assert!(r.abs() < 1e-10, "q={q}: {r}");
        }
    }
}
