//! Deformation maps h that carry additive entropies to pseudo-additive
//! ones: h(x + y) = h(x) + h(y) + gamma h(x) h(y). The linear branch
//! (lambda = 0) keeps additivity; the exponential branch
//! h(x) = (2^(lambda x) - 1) / gamma bends it with coefficient gamma.
//! Applying such a map to an additive base entropy (shannon or renyi)
//! yields a transformed functional whose chain rule closes with the same
//! coefficient, verified here by construction.

use serde::{Deserialize, Serialize};

use crate::deformed::{kn_mean, KnFunction};
use crate::error::{Error, Result};
use crate::families::{entropy, EntropySpec, Family};
use crate::prob::{escort, Axis, JointTable, ProbVector};

/// Parameters of the deformation map. `lambda = 0` selects the linear
/// branch h(x) = a x (which forces gamma = 0: a linear map can only
/// preserve plain additivity); `lambda != 0` selects the exponential
/// branch, where lambda and gamma must share a sign so that h is
/// increasing and fixes 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct DarotzyParams {
    a: f64,
    lambda: f64,
    gamma: f64,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    a: f64,
    lambda: f64,
    gamma: f64,
}

impl TryFrom<RawParams> for DarotzyParams {
    type Error = Error;
    fn try_from(r: RawParams) -> Result<Self> {
        DarotzyParams::new(r.a, r.lambda, r.gamma)
    }
}

impl From<DarotzyParams> for RawParams {
    fn from(p: DarotzyParams) -> Self {
        RawParams {
            a: p.a,
            lambda: p.lambda,
            gamma: p.gamma,
        }
    }
}

impl DarotzyParams {
    pub fn new(a: f64, lambda: f64, gamma: f64) -> Result<Self> {
        for (name, v) in [("a", a), ("lambda", lambda), ("gamma", gamma)] {
            if !v.is_finite() {
                return Err(Error::invalid_parameters(format!(
                    "map parameter {name} must be finite, got {v}"
                )));
            }
        }
        if lambda == 0.0 {
            if a <= 0.0 {
                return Err(Error::invalid_parameters(format!(
                    "linear branch needs a > 0, got a = {a}"
                )));
            }
            if gamma != 0.0 {
                return Err(Error::invalid_parameters(format!(
                    "linear branch cannot produce a nonzero composition \
                     coefficient; got gamma = {gamma}"
                )));
            }
        } else if lambda * gamma <= 0.0 {
            return Err(Error::invalid_parameters(format!(
                "exponential branch needs lambda and gamma of the same sign, \
                 got lambda = {lambda}, gamma = {gamma}"
            )));
        }
        Ok(DarotzyParams { a, lambda, gamma })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// The composition coefficient the map induces (0 on the linear branch,
    /// by validation).
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// h(x).
    pub fn forward(&self, x: f64) -> f64 {
        if self.lambda == 0.0 {
            self.a * x
        } else {
            ((self.lambda * x).exp2() - 1.0) / self.gamma
        }
    }

    /// h^(-1)(y); errors when y is outside the range of h.
    pub fn inverse(&self, y: f64) -> Result<f64> {
        if self.lambda == 0.0 {
            return Ok(y / self.a);
        }
        let t = 1.0 + self.gamma * y;
        if t <= 0.0 {
            return Err(Error::OutOfRange { value: y });
        }
        Ok(t.log2() / self.lambda)
    }

    pub fn describe(&self) -> String {
        if self.lambda == 0.0 {
            format!("h(x) = {} x", self.a)
        } else {
            format!(
                "h(x) = (2^({} x) - 1) / {}",
                self.lambda, self.gamma
            )
        }
    }
}

/// The deformed addition x (+)_gamma y = x + y + gamma x y.
pub fn pseudo_add(x: f64, y: f64, gamma: f64) -> f64 {
    x + y + gamma * x * y
}

/// An additive base entropy pushed through a deformation map. The
/// transformed functional is H'(p) = h(H_base(p)); its conditional uses the
/// base family's aggregation weights with the composed generator
/// phi_base o h^(-1), and its chain rule closes with coefficient gamma.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransformedEntropy {
    base: EntropySpec,
    map: DarotzyParams,
    generator: KnFunction,
}

impl TransformedEntropy {
    /// `base` must be shannon or renyi: only additive entropies transport
    /// their chain rule through the map.
    pub fn new(base: EntropySpec, map: DarotzyParams) -> Result<Self> {
        let base_generator = match base.family() {
            Family::Shannon => KnFunction::linear(),
            Family::Renyi => KnFunction::renyi(base.q().unwrap())?,
            other => {
                return Err(Error::invalid_parameters(format!(
                    "transform base must be additive (shannon or renyi), got {other}"
                )))
            }
        };
        let generator = KnFunction::composed(base_generator, map);
        Ok(TransformedEntropy {
            base,
            map,
            generator,
        })
    }

    pub fn base(&self) -> &EntropySpec {
        &self.base
    }

    pub fn map(&self) -> &DarotzyParams {
        &self.map
    }

    /// The Kolmogorov-Nagumo generator of the transformed conditional.
    pub fn generator(&self) -> &KnFunction {
        &self.generator
    }

    pub fn describe(&self) -> String {
        format!("{} pushed through {}", self.base.describe(), self.map.describe())
    }

    /// H'(p) = h(H_base(p)).
    pub fn entropy(&self, p: &ProbVector) -> Result<f64> {
        Ok(self.map.forward(entropy(&self.base, p)?))
    }

    /// Conditional of the transformed functional along `given`:
    /// the KN mean of transformed slice entropies under the base family's
    /// weights (plain marginal for shannon, order-q escort for renyi).
    pub fn conditional(&self, j: &JointTable, given: Axis) -> Result<f64> {
        let marg = j.marginal(given);
        let weights = match self.base.family() {
            Family::Shannon => marg.clone(),
            Family::Renyi => escort(&marg, self.base.q().unwrap())?,
            _ => unreachable!("validated in new"),
        };
        let n = marg.len();
        let mut values = vec![0.0; n];
        for (i, &mass) in marg.weights().iter().enumerate() {
            if mass > 0.0 {
                values[i] = self.entropy(&j.conditional_slice(given, i)?)?;
            }
        }
        kn_mean(&values, &weights, &self.generator)
    }

    /// H'(XY) - H'(Y) - H'(X|Y) - gamma H'(Y) H'(X|Y): the transformed
    /// chain rule's residual, which vanishes by construction.
    pub fn chain_residual(&self, j: &JointTable, given: Axis) -> Result<f64> {
        let h_joint = self.entropy(&j.flatten())?;
        let h_given = self.entropy(&j.marginal(given))?;
        let h_cond = self.conditional(j, given)?;
        let gamma = self.map.gamma();
        Ok(h_joint - (h_given + h_cond + gamma * h_given * h_cond))
    }
}
