//! Generalized-entropy calculus on finite discrete distributions.
//!
//! The crate implements a family of entropy functionals (shannon, renyi,
//! tsallis, landsberg, behara_chawla, frank_daffertshofer, sharma_mittal,
//! and the naive ja construction), escort reweighting, Kolmogorov-Nagumo
//! conditional entropies, and the deformed composition laws that connect
//! them: pseudo-additivity on independent pairs, two- and n-variable chain
//! rules, the deformed Bayes identity, and deformation maps that transport
//! the additive chain rule onto pseudo-additive functionals. A seeded
//! classifier probes superadditivity, replication homogeneity, and
//! concavity empirically, and [`acceptance`] bundles everything into a
//! numbered certification suite with pinned tolerances.
//!
//! Numerical conventions: logarithms are base 2 where they appear directly
//! (shannon, renyi, and the exponential generators), entropies are computed
//! on validated, renormalized probability vectors, and every q -> 1 or
//! r -> 1 degeneracy is routed to its analytic limit inside a fixed window
//! rather than evaluated as 0/0.

pub mod acceptance;
pub mod chain;
pub mod conditional;
pub mod darotzy;
pub mod deformed;
pub mod error;
pub mod families;
pub mod io;
pub mod landsberg;
pub mod prob;
pub mod sampling;
pub mod tolerances;

pub use error::{Error, Result};
pub use families::{entropy, shannon_bits, EntropySpec, Family};
pub use prob::{Axis, JointNd, JointTable, ProbVector};
