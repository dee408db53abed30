//! Command-line front end: evaluate deformed entropies, verify their
//! composition laws on concrete inputs, and run the certification suite.
//!
//! Every invocation prints a single JSON run report to stdout. Exit codes:
//! 0 success (or all criteria passed), 1 a verified identity missed its
//! tolerance, 2 unreadable or malformed input data, 3 bad parameters.

mod report;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use qentropy::acceptance::{run_suite, Tolerances, DEFAULT_SEED};
use qentropy::chain::{
    chain_residual, n_chain_residual, pseudo_add_residual, ResidualRecord, Rule,
};
use qentropy::conditional::conditional;
use qentropy::darotzy::{DarotzyParams, TransformedEntropy};
use qentropy::families::{entropy, EntropySpec, Family};
use qentropy::io::{load_joint_nd, load_joint_table, load_prob_vector};
use qentropy::landsberg::{classify, SamplerConfig};
use qentropy::prob::{escort_discrepancy, Axis};
use qentropy::tolerances as defaults;

use report::{
    status_for, Failure, RunReport, EXIT_OK, EXIT_PARAMETER, EXIT_VERIFICATION, SCHEMA_VERSION,
};

/// Deformed-entropy calculator and composition-law verifier.
#[derive(Parser, Debug)]
#[command(name = "qentropy", version, max_term_width = 100)]
struct Cli {
    #[command(flatten)]
    tolerances: TolFlags,

    /// Seed for sampled operations (falls back to QENTROPY_SEED, then 42)
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    cmd: Cmd,
}

/// Every threshold the checks depend on, overridable per run and echoed in
/// the report.
#[derive(Args, Debug)]
struct TolFlags {
    /// Largest |residual| an identity check may pass with
    #[arg(long, global = true, default_value_t = defaults::RESIDUAL_TOLERANCE)]
    tol_residual: f64,

    /// Agreement required between a constructed value and its closed form
    #[arg(long, global = true, default_value_t = defaults::CLOSED_FORM_TOLERANCE)]
    tol_closed_form: f64,

    /// Agreement required for identities that are exact rearrangements
    #[arg(long, global = true, default_value_t = defaults::EXACT_TOLERANCE)]
    tol_exact: f64,

    /// Agreement required between a value near a degenerate index and its limit
    #[arg(long, global = true, default_value_t = defaults::LIMIT_TOLERANCE)]
    tol_limit: f64,

    /// Smallest gap treated as a genuine difference
    #[arg(long, global = true, default_value_t = defaults::DISTINCTNESS_FLOOR)]
    tol_distinct: f64,

    /// Smallest dependence measure treated as genuinely nonzero
    #[arg(long, global = true, default_value_t = defaults::DISCREPANCY_FLOOR)]
    tol_discrepancy_floor: f64,
}

impl TolFlags {
    fn build(&self) -> Tolerances {
        Tolerances {
            residual: self.tol_residual,
            closed_form: self.tol_closed_form,
            exact: self.tol_exact,
            limit: self.tol_limit,
            distinct: self.tol_distinct,
            discrepancy_floor: self.tol_discrepancy_floor,
        }
    }
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// Entropy family: shannon, renyi, tsallis, landsberg, behara-chawla,
    /// frank-daffertshofer, sharma-mittal, ja
    #[arg(long)]
    family: String,

    /// Deformation index q
    #[arg(long, allow_negative_numbers = true)]
    q: Option<f64>,

    /// Second index r (frank-daffertshofer, sharma-mittal)
    #[arg(long, allow_negative_numbers = true)]
    r: Option<f64>,

    /// Generator exponent gamma (behara-chawla)
    #[arg(long, allow_negative_numbers = true)]
    gamma: Option<f64>,
}

impl FamilyArgs {
    fn build(&self) -> Result<EntropySpec, Failure> {
        let family: Family = self.family.parse()?;
        let spec = match family {
            Family::Shannon => EntropySpec::shannon(),
            Family::Renyi => EntropySpec::renyi(self.require("q")?)?,
            Family::Tsallis => EntropySpec::tsallis(self.require("q")?)?,
            Family::Landsberg => EntropySpec::landsberg(self.require("q")?)?,
            Family::BeharaChawla => EntropySpec::behara_chawla(self.require("gamma")?)?,
            Family::FrankDaffertshofer => {
                EntropySpec::frank_daffertshofer(self.require("q")?, self.require("r")?)?
            }
            Family::SharmaMittal => {
                EntropySpec::sharma_mittal(self.require("q")?, self.require("r")?)?
            }
            Family::Ja => EntropySpec::ja(self.require("q")?)?,
        };
        Ok(spec)
    }

    fn require(&self, flag: &str) -> Result<f64, Failure> {
        let value = match flag {
            "q" => self.q,
            "r" => self.r,
            _ => self.gamma,
        };
        value.ok_or_else(|| {
            Failure::parameter(format!("family {} requires --{flag}", self.family))
        })
    }
}

fn parse_axis(s: &str) -> Result<Axis, String> {
    s.parse::<Axis>().map_err(|e| e.to_string())
}

fn axis_key(axis: Axis) -> &'static str {
    match axis {
        Axis::X => "x",
        Axis::Y => "y",
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ChainRuleArg {
    /// H(XY) = H(given) + H(other | given)
    Additive,
    /// Deformed chain rule with the family's composition index
    QExtensive,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PseudoRuleArg {
    /// H(XY) = H(X) + H(Y)
    Additive,
    /// H(XY) = H(X) + H(Y) + (1-q) H(X) H(Y)
    Tsallis,
    /// H(XY) = H(X) + H(Y) + (q-1) H(X) H(Y)
    Landsberg,
    /// H(XY)^(1/delta) = H(X)^(1/delta) + H(Y)^(1/delta)
    Delta,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate an entropy functional on a distribution file
    Entropy {
        #[command(flatten)]
        family: FamilyArgs,
        /// Distribution file (.json array or one-row .csv)
        #[arg(long)]
        dist: PathBuf,
    },

    /// Entropy of one axis of a joint table conditioned on the other
    Conditional {
        #[command(flatten)]
        family: FamilyArgs,
        /// Two-dimensional joint table (.json rows or .csv)
        #[arg(long)]
        joint: PathBuf,
        /// Conditioning axis (x or y)
        #[arg(long, value_parser = parse_axis)]
        given: Axis,
    },

    /// Verify a two-variable chain rule on a joint table, conditioning both ways
    ChainCheck {
        #[command(flatten)]
        family: FamilyArgs,
        /// Composition law to check the family against
        #[arg(long, value_enum)]
        rule: ChainRuleArg,
        #[arg(long)]
        joint: PathBuf,
    },

    /// Verify a pseudo-additivity law on the product of two distributions
    PseudoAddCheck {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum)]
        rule: PseudoRuleArg,
        /// Exponent for the delta rule
        #[arg(long, allow_negative_numbers = true)]
        delta: Option<f64>,
        /// First marginal file
        #[arg(long)]
        px: PathBuf,
        /// Second marginal file
        #[arg(long)]
        py: PathBuf,
    },

    /// Verify the n-variable chain rule on an n-dimensional joint (nested JSON)
    NchainCheck {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        joint: PathBuf,
    },

    /// Measure how far joint escort reweighting is from composing marginally
    EscortDiscrepancy {
        /// Escort order
        #[arg(long, allow_negative_numbers = true)]
        q: f64,
        #[arg(long)]
        joint: PathBuf,
    },

    /// Evaluate a deformation-transported entropy and its chain certificate
    DarotzyTransform {
        /// Base family: shannon or renyi
        #[arg(long)]
        base: String,
        /// Index of the renyi base
        #[arg(long, allow_negative_numbers = true)]
        q: Option<f64>,
        /// Composition coefficient of the deformation map
        #[arg(long, allow_negative_numbers = true)]
        gamma: f64,
        /// Exponential rate of the deformation map (0 selects the linear map)
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        /// Slope of the linear map (used only when lambda = 0)
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        a: f64,
        #[arg(long)]
        joint: PathBuf,
    },

    /// Empirically classify a family by superadditivity, homogeneity, concavity
    Classify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Sampling trials per property
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Smallest sampled dimension
        #[arg(long, default_value_t = 2)]
        min_dim: usize,
        /// Largest sampled dimension
        #[arg(long, default_value_t = 6)]
        max_dim: usize,
        /// Sample correlated joints instead of independent products
        #[arg(long)]
        correlated: bool,
    },

    /// Run the full certification suite; exit 0 only if every criterion passes
    VerifyAll,
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("QENTROPY_SEED") {
        Ok(text) => text.trim().parse().map_err(|_| {
            Failure::parameter(format!(
                "QENTROPY_SEED must be an unsigned integer, got {text:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_SEED),
        Err(e) => Err(Failure::parameter(format!("QENTROPY_SEED: {e}"))),
    }
}

/// Hash the raw bytes of an input file into the report's `inputs` map and
/// return the digest for use inside residual records.
fn digest_input(inputs: &mut BTreeMap<String, String>, path: &Path) -> Result<String, Failure> {
    let bytes = std::fs::read(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    let digest = format!("{:x}", Sha256::digest(&bytes));
    inputs.insert(path.display().to_string(), digest.clone());
    Ok(digest)
}

fn execute(
    cmd: &Cmd,
    tolerances: &Tolerances,
    seed: u64,
    inputs: &mut BTreeMap<String, String>,
) -> Result<(serde_json::Value, i32), Failure> {
    match cmd {
        Cmd::Entropy { family, dist } => {
            let spec = family.build()?;
            digest_input(inputs, dist)?;
            let p = load_prob_vector(dist)?;
            let value = entropy(&spec, &p)?;
            Ok((
                serde_json::json!({
                    "family": spec.describe(),
                    "dimension": p.len(),
                    "support": p.support_size(),
                    "value": value,
                }),
                EXIT_OK,
            ))
        }

        Cmd::Conditional {
            family,
            joint,
            given,
        } => {
            let spec = family.build()?;
            digest_input(inputs, joint)?;
            let j = load_joint_table(joint)?;
            let value = conditional(&spec, &j, *given)?;
            let target = given.other();
            let marginal = entropy(&spec, &j.marginal(target))?;
            let non_axiomatic = spec.family() == Family::Ja;
            let mut result = serde_json::json!({
                "family": spec.describe(),
                "given": axis_key(*given),
                "target": axis_key(target),
                "value": value,
                "target_marginal_entropy": marginal,
                "non_axiomatic": non_axiomatic,
            });
            if non_axiomatic {
                result["note"] = serde_json::Value::String(
                    "the ja construction admits no composition law; this value is a deformed \
                     escort mean with no chain-rule guarantee"
                        .into(),
                );
            }
            Ok((result, EXIT_OK))
        }

        Cmd::ChainCheck {
            family,
            rule,
            joint,
        } => {
            let spec = family.build()?;
            let digest = digest_input(inputs, joint)?;
            let j = load_joint_table(joint)?;
            let rule = match rule {
                ChainRuleArg::Additive => Rule::AdditiveChain,
                ChainRuleArg::QExtensive => Rule::QExtensiveChain {
                    q: spec.extensivity_q(),
                },
            };
            let mut checks = Vec::new();
            let mut max_abs: f64 = 0.0;
            for given in [Axis::X, Axis::Y] {
                let residual = chain_residual(&spec, &j, rule, given)?;
                max_abs = max_abs.max(residual.abs());
                checks.push(serde_json::json!({
                    "given": axis_key(given),
                    "record": ResidualRecord::new(&rule, &spec, digest.clone(), residual),
                }));
            }
            let within = max_abs <= tolerances.residual;
            Ok((
                serde_json::json!({
                    "rule": rule.describe(),
                    "checks": checks,
                    "max_abs_residual": max_abs,
                    "within_tolerance": within,
                }),
                if within { EXIT_OK } else { EXIT_VERIFICATION },
            ))
        }

        Cmd::PseudoAddCheck {
            family,
            rule,
            delta,
            px,
            py,
        } => {
            let spec = family.build()?;
            let dx = digest_input(inputs, px)?;
            let dy = digest_input(inputs, py)?;
            let vx = load_prob_vector(px)?;
            let vy = load_prob_vector(py)?;
            let rule = match rule {
                PseudoRuleArg::Additive => Rule::Additive,
                PseudoRuleArg::Tsallis => Rule::TsallisAdd {
                    q: spec.extensivity_q(),
                },
                PseudoRuleArg::Landsberg => Rule::LandsbergAdd {
                    q: spec.extensivity_q(),
                },
                PseudoRuleArg::Delta => Rule::DeltaAdd {
                    delta: delta
                        .ok_or_else(|| Failure::parameter("the delta rule requires --delta"))?,
                },
            };
            let residual = pseudo_add_residual(&spec, &vx, &vy, rule)?;
            let within = residual.abs() <= tolerances.residual;
            Ok((
                serde_json::json!({
                    "rule": rule.describe(),
                    "record": ResidualRecord::new(&rule, &spec, format!("{dx},{dy}"), residual),
                    "within_tolerance": within,
                }),
                if within { EXIT_OK } else { EXIT_VERIFICATION },
            ))
        }

        Cmd::NchainCheck { family, joint } => {
            let spec = family.build()?;
            let digest = digest_input(inputs, joint)?;
            let nd = load_joint_nd(joint)?;
            let q = spec.extensivity_q();
            let rule = Rule::QExtensiveChain { q };
            let residual = n_chain_residual(&spec, &nd, q)?;
            let within = residual.abs() <= tolerances.residual;
            Ok((
                serde_json::json!({
                    "rule": rule.describe(),
                    "ndim": nd.ndim(),
                    "shape": nd.shape(),
                    "record": ResidualRecord::new(&rule, &spec, digest, residual),
                    "within_tolerance": within,
                }),
                if within { EXIT_OK } else { EXIT_VERIFICATION },
            ))
        }

        Cmd::EscortDiscrepancy { q, joint } => {
            digest_input(inputs, joint)?;
            let j = load_joint_table(joint)?;
            let discrepancy = escort_discrepancy(&j, *q)?;
            Ok((
                serde_json::json!({
                    "q": q,
                    "discrepancy": discrepancy,
                    "exceeds_dependence_floor": discrepancy > tolerances.discrepancy_floor,
                }),
                EXIT_OK,
            ))
        }

        Cmd::DarotzyTransform {
            base,
            q,
            gamma,
            lambda,
            a,
            joint,
        } => {
            let base_family: Family = base.parse()?;
            let base_spec = match base_family {
                Family::Shannon => EntropySpec::shannon(),
                Family::Renyi => EntropySpec::renyi(
                    q.ok_or_else(|| Failure::parameter("base renyi requires --q"))?,
                )?,
                other => {
                    return Err(Failure::parameter(format!(
                        "transform base must be shannon or renyi, got {other}"
                    )))
                }
            };
            let map = DarotzyParams::new(*a, *lambda, *gamma)?;
            let transformed = TransformedEntropy::new(base_spec, map)?;
            digest_input(inputs, joint)?;
            let j = load_joint_table(joint)?;
            let joint_entropy = transformed.entropy(&j.flatten())?;
            let mut conditional_values = serde_json::Map::new();
            let mut residuals = serde_json::Map::new();
            let mut max_abs: f64 = 0.0;
            for given in [Axis::X, Axis::Y] {
                let key = format!("given_{}", axis_key(given));
                let value = transformed.conditional(&j, given)?;
                let residual = transformed.chain_residual(&j, given)?;
                max_abs = max_abs.max(residual.abs());
                conditional_values.insert(key.clone(), value.into());
                residuals.insert(key, residual.into());
            }
            Ok((
                serde_json::json!({
                    "base": transformed.base().describe(),
                    "map": transformed.map().describe(),
                    "generator": transformed.generator().describe(),
                    "joint_entropy": joint_entropy,
                    "conditional": conditional_values,
                    "chain_residual": residuals,
                    "chain_within_tolerance": max_abs <= tolerances.residual,
                }),
                EXIT_OK,
            ))
        }

        Cmd::Classify {
            family,
            trials,
            min_dim,
            max_dim,
            correlated,
        } => {
            let spec = family.build()?;
            let config = SamplerConfig {
                trials: *trials,
                min_dim: *min_dim,
                max_dim: *max_dim,
                seed,
                correlated: *correlated,
            };
            let verdict = classify(&spec, &config)?;
            let result =
                serde_json::to_value(&verdict).expect("verdict serialization cannot fail");
            Ok((result, EXIT_OK))
        }

        Cmd::VerifyAll => {
            let suite = run_suite(seed, tolerances);
            let result = serde_json::to_value(&suite).expect("suite serialization cannot fail");
            let code = if suite.all_passed {
                EXIT_OK
            } else {
                EXIT_VERIFICATION
            };
            Ok((result, code))
        }
    }
}

fn main() -> ExitCode {
    let started = Instant::now();
    let argv: Vec<String> = std::env::args().collect();

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let report = RunReport {
                schema_version: SCHEMA_VERSION,
                command: argv,
                status: status_for(EXIT_PARAMETER),
                exit_code: EXIT_PARAMETER,
                error: Some(e.to_string()),
                seed: DEFAULT_SEED,
                tolerances: Tolerances::default(),
                inputs: BTreeMap::new(),
                result: serde_json::Value::Null,
                wall_time_s: started.elapsed().as_secs_f64(),
            };
            println!("{}", report.render());
            return ExitCode::from(EXIT_PARAMETER as u8);
        }
    };

    let tolerances = cli.tolerances.build();
    let mut inputs = BTreeMap::new();
    let (seed, outcome) = match resolve_seed(cli.seed) {
        Ok(seed) => (seed, execute(&cli.cmd, &tolerances, seed, &mut inputs)),
        Err(failure) => (DEFAULT_SEED, Err(failure)),
    };
    let (exit, error, result) = match outcome {
        Ok((result, code)) => (code, None, result),
        Err(f) => (f.exit_code, Some(f.message), serde_json::Value::Null),
    };

    let report = RunReport {
        schema_version: SCHEMA_VERSION,
        command: argv,
        status: status_for(exit),
        exit_code: exit,
        error,
        seed,
        tolerances,
        inputs,
        result,
        wall_time_s: started.elapsed().as_secs_f64(),
    };
    println!("{}", report.render());
    ExitCode::from(exit as u8)
}
