//! Named numeric tolerances used throughout the crate.
//!
//! Every threshold that a check or a limit branch depends on lives here,
//! so the certification suite can report — and deliberately perturb — each
//! one by name.

/// Normalization slack: weights whose sum differs from 1 by at most this
/// are renormalized once without complaint; farther off is still accepted
/// but also renormalized (construction is permissive, evaluation is exact).
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Width of the degenerate-parameter window around q = 1 (and r = 1,
/// gamma = 1): inside it, evaluation routes to the analytic limit formula
/// instead of the generic one.
pub const LIMIT_EPSILON: f64 = 1e-9;

/// Residuals of identities that hold exactly in real arithmetic
/// (chain rules, pseudo-additivity on product distributions, transform
/// certificates) must stay below this under f64 roundoff.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

/// Agreement between a constructed quantity and its closed form
/// (conditional entropies, composed-map identities) at module scale.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-10;

/// Quantities that are equal by rearrangement alone (marginals of product
/// joins, escort factorization on products) must agree this tightly.
pub const EXACT_TOLERANCE: f64 = 1e-12;

/// Continuity check width: an entropy evaluated at |1 - q| = 1e-6 must be
/// within this of its analytic q -> 1 limit.
pub const LIMIT_TOLERANCE: f64 = 1e-4;

/// Two quantities counted as genuinely different must differ by more
/// than this.
pub const DISTINCTNESS_FLOOR: f64 = 1e-6;

/// A dependence measure counted as genuinely nonzero must exceed this.
pub const DISCREPANCY_FLOOR: f64 = 1e-3;

/// Slack used by the property classifier: an inequality counts as violated
/// only when it fails by more than this.
pub const CLASSIFIER_SLACK: f64 = 1e-9;
