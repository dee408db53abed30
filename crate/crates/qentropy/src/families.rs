//! The eight entropy families evaluated on probability vectors.
//!
//! Logarithms are base 2 wherever a logarithm appears, so Shannon entropy is
//! measured in bits. Power-law families (tsallis, landsberg, ja, and
//! frank_daffertshofer through its r-index) contain no free logarithm; their
//! q -> 1 limits are consequently the natural-log Shannon form
//! `ln 2 * shannon` — the scale is pinned by the exact (1-q)-coefficient
//! additivity laws they satisfy and cannot be renormalized to bits without
//! breaking those laws. Parameters within [`LIMIT_EPSILON`] of a degenerate
//! value route to the analytic limit formula.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prob::{escort, power_sum, ProbVector};
use crate::tolerances::LIMIT_EPSILON;

const LN_2: f64 = std::f64::consts::LN_2;

fn near(a: f64, b: f64) -> bool {
    (a - b).abs() <= LIMIT_EPSILON
}

fn check_finite(name: &str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid_parameters(format!(
            "{name} must be finite, got {v}"
        )))
    }
}

/// Family tag. `Ja` is the escort-log functional built from the deformation
/// map applied to an escort-weighted log-likelihood; it deliberately lacks
/// an axiomatic conditional construction and is carried here to exhibit
/// where the chain structure breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Shannon,
    Renyi,
    Tsallis,
    Landsberg,
    BeharaChawla,
    FrankDaffertshofer,
    SharmaMittal,
    Ja,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Shannon => "shannon",
            Family::Renyi => "renyi",
            Family::Tsallis => "tsallis",
            Family::Landsberg => "landsberg",
            Family::BeharaChawla => "behara_chawla",
            Family::FrankDaffertshofer => "frank_daffertshofer",
            Family::SharmaMittal => "sharma_mittal",
            Family::Ja => "ja",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "shannon" => Ok(Family::Shannon),
            "renyi" => Ok(Family::Renyi),
            "tsallis" => Ok(Family::Tsallis),
            "landsberg" => Ok(Family::Landsberg),
            "behara_chawla" | "bc" => Ok(Family::BeharaChawla),
            "frank_daffertshofer" | "fd" => Ok(Family::FrankDaffertshofer),
            "sharma_mittal" | "sm" => Ok(Family::SharmaMittal),
            "ja" => Ok(Family::Ja),
            other => Err(Error::invalid_parameters(format!(
                "unknown entropy family {other:?}"
            ))),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A fully parameterized entropy functional.
///
/// Validation is permissive — any finite deformation parameter is accepted
/// (gamma must be positive) — but the documented and tested envelope is
/// q > 0, r > 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropySpec {
    family: Family,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<f64>,
}

impl EntropySpec {
    pub fn shannon() -> Self {
        EntropySpec {
            family: Family::Shannon,
            q: None,
            r: None,
            gamma: None,
        }
    }

    pub fn renyi(q: f64) -> Result<Self> {
        check_finite("q", q)?;
        Ok(EntropySpec {
            family: Family::Renyi,
            q: Some(q),
            r: None,
            gamma: None,
        })
    }

    pub fn tsallis(q: f64) -> Result<Self> {
        check_finite("q", q)?;
        Ok(EntropySpec {
            family: Family::Tsallis,
            q: Some(q),
            r: None,
            gamma: None,
        })
    }

    pub fn landsberg(q: f64) -> Result<Self> {
        check_finite("q", q)?;
        Ok(EntropySpec {
            family: Family::Landsberg,
            q: Some(q),
            r: None,
            gamma: None,
        })
    }

    /// gamma > 0 required; the spec also carries the induced deformation
    /// index q = 2 - 2^(gamma-1) so the family can join q-parameterized
    /// rule checks without the caller recomputing the coupling.
    pub fn behara_chawla(gamma: f64) -> Result<Self> {
        check_finite("gamma", gamma)?;
        if gamma <= 0.0 {
            return Err(Error::invalid_parameters(format!(
                "behara_chawla needs gamma > 0, got {gamma}"
            )));
        }
        Ok(EntropySpec {
            family: Family::BeharaChawla,
            q: Some(2.0 - (gamma - 1.0).exp2()),
            r: None,
            gamma: Some(gamma),
        })
    }

    pub fn frank_daffertshofer(q: f64, r: f64) -> Result<Self> {
        check_finite("q", q)?;
        check_finite("r", r)?;
        Ok(EntropySpec {
            family: Family::FrankDaffertshofer,
            q: Some(q),
            r: Some(r),
            gamma: None,
        })
    }

    pub fn sharma_mittal(q: f64, r: f64) -> Result<Self> {
        check_finite("q", q)?;
        check_finite("r", r)?;
        Ok(EntropySpec {
            family: Family::SharmaMittal,
            q: Some(q),
            r: Some(r),
            gamma: None,
        })
    }

    pub fn ja(q: f64) -> Result<Self> {
        check_finite("q", q)?;
        Ok(EntropySpec {
            family: Family::Ja,
            q: Some(q),
            r: None,
            gamma: None,
        })
    }

    /// Builds a spec from a family tag plus whichever parameters it needs.
    pub fn from_parts(
        family: Family,
        q: Option<f64>,
        r: Option<f64>,
        gamma: Option<f64>,
    ) -> Result<Self> {
        let need = |name: &str, v: Option<f64>| {
            v.ok_or_else(|| {
                Error::invalid_parameters(format!("family {family} needs parameter {name}"))
            })
        };
        match family {
            Family::Shannon => Ok(EntropySpec::shannon()),
            Family::Renyi => EntropySpec::renyi(need("q", q)?),
            Family::Tsallis => EntropySpec::tsallis(need("q", q)?),
            Family::Landsberg => EntropySpec::landsberg(need("q", q)?),
            Family::BeharaChawla => EntropySpec::behara_chawla(need("gamma", gamma)?),
            Family::FrankDaffertshofer => {
                EntropySpec::frank_daffertshofer(need("q", q)?, need("r", r)?)
            }
            Family::SharmaMittal => EntropySpec::sharma_mittal(need("q", q)?, need("r", r)?),
            Family::Ja => EntropySpec::ja(need("q", q)?),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn q(&self) -> Option<f64> {
        self.q
    }

    pub fn r(&self) -> Option<f64> {
        self.r
    }

    pub fn gamma(&self) -> Option<f64> {
        self.gamma
    }

    /// The base-2 deformation coefficient 2^(1-q) - 1 (sharma_mittal only).
    pub fn delta(&self) -> Option<f64> {
        match self.family {
            Family::SharmaMittal => self.q.map(|q| (1.0 - q).exp2() - 1.0),
            _ => None,
        }
    }

    /// The index q* such that the family composes over independent systems
    /// as H(XY) = H(X) + H(Y) + (1 - q*) H(X) H(Y).
    ///
    /// Additive families (shannon, renyi) have q* = 1. Power-sum families
    /// deform with their own q. behara_chawla deforms with its induced
    /// index, and sharma_mittal with 2 - 2^(1-q) so that 1 - q* equals its
    /// base-2 coefficient delta.
    pub fn extensivity_q(&self) -> f64 {
        match self.family {
            Family::Shannon | Family::Renyi => 1.0,
            Family::Tsallis | Family::Landsberg | Family::FrankDaffertshofer | Family::Ja => {
                self.q.expect("parameterized family carries q")
            }
            Family::BeharaChawla => self.q.expect("induced index stored at construction"),
            Family::SharmaMittal => {
                let q = self.q.expect("sharma_mittal carries q");
                2.0 - (1.0 - q).exp2()
            }
        }
    }

    /// Short tag for reports, e.g. `tsallis(q=2)`.
    pub fn describe(&self) -> String {
        match self.family {
            Family::Shannon => "shannon".to_string(),
            Family::BeharaChawla => format!(
                "behara_chawla(gamma={}, induced q={})",
                self.gamma.unwrap_or(f64::NAN),
                self.q.unwrap_or(f64::NAN)
            ),
            Family::FrankDaffertshofer | Family::SharmaMittal => format!(
                "{}(q={}, r={})",
                self.family,
                self.q.unwrap_or(f64::NAN),
                self.r.unwrap_or(f64::NAN)
            ),
            _ => format!("{}(q={})", self.family, self.q.unwrap_or(f64::NAN)),
        }
    }
}

/// Shannon entropy in bits.
pub fn shannon_bits(p: &ProbVector) -> f64 {
    -p.weights()
        .iter()
        .filter(|&&w| w > 0.0)
        .map(|&w| w * w.log2())
        .sum::<f64>()
}

/// Escort-weighted log-likelihood -sum_k rho_k(q) log2 p_k, the quantity
/// the ja functional deforms. Zero entries carry zero escort weight for
/// q > 0 and are skipped; q <= 0 needs full support.
pub fn ja_inner(p: &ProbVector, q: f64) -> Result<f64> {
    let rho = escort(p, q)?;
    Ok(-rho
        .weights()
        .iter()
        .zip(p.weights())
        .filter(|(_, &w)| w > 0.0)
        .map(|(&r, &w)| r * w.log2())
        .sum::<f64>())
}

/// Evaluates the family functional on `p`, in base-2 units where logs
/// appear (see the module docs for the q -> 1 unit convention).
pub fn entropy(spec: &EntropySpec, p: &ProbVector) -> Result<f64> {
    let w = p.weights();
    match spec.family {
        Family::Shannon => Ok(shannon_bits(p)),
        Family::Renyi => {
            let q = spec.q.unwrap();
            if near(q, 1.0) {
                Ok(shannon_bits(p))
            } else {
                Ok(power_sum(w, q).log2() / (1.0 - q))
            }
        }
        Family::Tsallis => {
            let q = spec.q.unwrap();
            if near(q, 1.0) {
                Ok(LN_2 * shannon_bits(p))
            } else {
                Ok((power_sum(w, q) - 1.0) / (1.0 - q))
            }
        }
        Family::Landsberg => {
            let q = spec.q.unwrap();
            if near(q, 1.0) {
                Ok(LN_2 * shannon_bits(p))
            } else {
                Ok((1.0 / power_sum(w, 2.0 - q) - 1.0) / (1.0 - q))
            }
        }
        Family::BeharaChawla => {
            let gamma = spec.gamma.unwrap();
            if near(gamma, 1.0) {
                Ok(shannon_bits(p))
            } else {
                let ps = power_sum(w, 1.0 / gamma);
                Ok((1.0 - ps.powf(gamma)) / (1.0 - (gamma - 1.0).exp2()))
            }
        }
        Family::FrankDaffertshofer => {
            let (q, r) = (spec.q.unwrap(), spec.r.unwrap());
            match (near(q, 1.0), near(r, 1.0)) {
                (true, true) => Ok(LN_2 * shannon_bits(p)),
                (true, false) => Ok(power_sum(w, r).ln() / (1.0 - r)),
                (false, true) => {
                    Ok(((1.0 - q) * LN_2 * shannon_bits(p)).exp_m1() / (1.0 - q))
                }
                (false, false) => {
                    let ps = power_sum(w, r);
                    Ok((ps.powf((1.0 - q) / (1.0 - r)) - 1.0) / (1.0 - q))
                }
            }
        }
        Family::SharmaMittal => {
            let (q, r) = (spec.q.unwrap(), spec.r.unwrap());
            let delta = (1.0 - q).exp2() - 1.0;
            match (near(q, 1.0), near(r, 1.0)) {
                (true, true) => Ok(shannon_bits(p)),
                (true, false) => Ok(power_sum(w, r).log2() / (1.0 - r)),
                (false, true) => Ok((((1.0 - q) * shannon_bits(p)).exp2() - 1.0) / delta),
                (false, false) => {
                    let ps = power_sum(w, r);
                    Ok((ps.powf((1.0 - q) / (1.0 - r)) - 1.0) / delta)
                }
            }
        }
        Family::Ja => {
            let q = spec.q.unwrap();
            let u = ja_inner(p, q)?;
            if near(q, 1.0) {
                Ok(LN_2 * u)
            } else {
                Ok((((1.0 - q) * u).exp2() - 1.0) / (1.0 - q))
            }
        }
    }
}
