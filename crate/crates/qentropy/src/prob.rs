//! Finite discrete distributions and escort reweighting.
//!
//! [`ProbVector`] is a validated probability vector (nonnegative, renormalized
//! once on construction). [`JointTable`] is a two-variable joint distribution
//! with rows indexed by X and columns by Y; [`JointNd`] generalizes to n
//! variables in row-major layout. Escort distributions reweight a
//! distribution by the q-th power of its entries; [`escort_joint_composed`]
//! rebuilds a joint escort from the escort of one marginal and the escorts of
//! the conditional slices, and [`escort_discrepancy`] measures how far that
//! factorization is from the direct joint escort. The discrepancy vanishes on
//! product tables and, more generally, whenever all conditional slices share
//! the same q-power sum; it is positive otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerances::NORM_TOLERANCE;

/// Which variable of a joint table an operation refers to.
/// X indexes rows, Y indexes columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "X",
            Axis::Y => "Y",
        }
    }

    pub fn other(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        }
    }
}

impl std::str::FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Axis> {
        match s.trim().to_ascii_lowercase().as_str() {
            "x" => Ok(Axis::X),
            "y" => Ok(Axis::Y),
            other => Err(Error::invalid_parameters(format!(
                "unknown axis {other:?}, expected \"x\" or \"y\""
            ))),
        }
    }
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn validate_weights(raw: &[f64]) -> Result<f64> {
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }
    for (index, &value) in raw.iter().enumerate() {
        if !value.is_finite() {
            return Err(Error::invalid_parameters(format!(
                "non-finite weight {value} at position {index}"
            )));
        }
        if value < 0.0 {
            return Err(Error::NegativeWeight { index, value });
        }
    }
    let sum: f64 = raw.iter().sum();
    if sum <= 0.0 {
        return Err(Error::ZeroMass);
    }
    Ok(sum)
}

/// A probability vector over a finite alphabet.
///
/// Construction accepts any nonnegative weights with positive total mass and
/// renormalizes them once; from then on the entries sum to 1 up to roundoff.
///
/// ```
/// use qentropy::prob::ProbVector;
/// let p = ProbVector::new(vec![2.0, 2.0]).unwrap();
/// assert_eq!(p.weights(), &[0.5, 0.5]);
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct ProbVector {
    weights: Vec<f64>,
}

impl ProbVector {
    pub fn new(raw: Vec<f64>) -> Result<Self> {
        let sum = validate_weights(&raw)?;
        let mut weights = raw;
        // One renormalization pass, even when the drift is within
        // NORM_TOLERANCE: downstream identities assume unit mass exactly
        // (to roundoff), so construction is permissive but never skips this.
        if (sum - 1.0).abs() > f64::EPSILON {
            for w in &mut weights {
                *w /= sum;
            }
        }
        let _ = NORM_TOLERANCE; // drift below this is considered clean input
        Ok(ProbVector { weights })
    }

    /// Wraps weights that are already normalized (marginals of a normalized
    /// table, escort outputs). Debug builds verify the invariant.
    pub(crate) fn from_normalized(weights: Vec<f64>) -> Self {
        debug_assert!(!weights.is_empty());
        debug_assert!(
            (weights.iter().sum::<f64>() - 1.0).abs() < 1e-9,
            "from_normalized called with drifted mass"
        );
        ProbVector { weights }
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        Ok(ProbVector {
            weights: vec![1.0 / n as f64; n],
        })
    }

    pub fn point_mass(n: usize, at: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        if at >= n {
            return Err(Error::IndexOutOfBounds { index: at, size: n });
        }
        let mut weights = vec![0.0; n];
        weights[at] = 1.0;
        Ok(ProbVector { weights })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.weights.iter()
    }

    /// Number of strictly positive entries.
    pub fn support_size(&self) -> usize {
        self.weights.iter().filter(|&&w| w > 0.0).count()
    }

    /// True when every entry is strictly positive.
    pub fn full_support(&self) -> bool {
        self.weights.iter().all(|&w| w > 0.0)
    }
}

impl TryFrom<Vec<f64>> for ProbVector {
    type Error = Error;

    fn try_from(raw: Vec<f64>) -> Result<Self> {
        ProbVector::new(raw)
    }
}

impl From<ProbVector> for Vec<f64> {
    fn from(p: ProbVector) -> Vec<f64> {
        p.weights
    }
}

/// Sum of w^exponent over the strictly positive entries of `weights`.
///
/// Zero entries are dropped from every power sum: x^e -> 0 as x -> 0+ for
/// e > 0, and the convention extends the same support restriction to all
/// exponents so that expressions stay finite. Operations that cannot
/// tolerate the restriction (escorts of nonpositive order) validate
/// separately and refuse zero entries instead.
pub(crate) fn power_sum(weights: &[f64], exponent: f64) -> f64 {
    weights
        .iter()
        .filter(|&&w| w > 0.0)
        .map(|&w| w.powf(exponent))
        .sum()
}

/// Escort distribution of order `q`: weights proportional to p_i^q.
///
/// For q > 0 zero entries stay zero. For q <= 0 the map is only defined on
/// strictly positive distributions (a zero entry would get infinite or
/// unit weight), so those inputs are rejected.
///
/// ```
/// use qentropy::prob::{escort, ProbVector};
/// let p = ProbVector::new(vec![0.8, 0.2]).unwrap();
/// let e = escort(&p, 2.0).unwrap();
/// assert!((e.weights()[0] - 16.0 / 17.0).abs() < 1e-15);
/// ```
pub fn escort(p: &ProbVector, q: f64) -> Result<ProbVector> {
    if !q.is_finite() {
        return Err(Error::invalid_parameters(format!(
            "escort order must be finite, got {q}"
        )));
    }
    if q <= 0.0 && !p.full_support() {
        return Err(Error::EscortUndefined { q });
    }
    let powered: Vec<f64> = p
        .weights()
        .iter()
        .map(|&w| if w > 0.0 { w.powf(q) } else { 0.0 })
        .collect();
    let total: f64 = powered.iter().sum();
    if !(total.is_finite() && total > 0.0) {
        // Overflow of w^q for extreme q shows up here rather than as NaN
        // downstream.
        return Err(Error::EscortUndefined { q });
    }
    Ok(ProbVector::from_normalized(
        powered.into_iter().map(|w| w / total).collect(),
    ))
}

/// Joint distribution of two variables; rows are X outcomes, columns are Y.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<f64>>", into = "Vec<Vec<f64>>")]
pub struct JointTable {
    rows: usize,
    cols: usize,
    cells: Vec<f64>, // row-major
}

impl JointTable {
    pub fn new(rows_of_cells: Vec<Vec<f64>>) -> Result<Self> {
        if rows_of_cells.is_empty() {
            return Err(Error::EmptyInput);
        }
        let cols = rows_of_cells[0].len();
        for (row, r) in rows_of_cells.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::RaggedRows {
                    row,
                    got: r.len(),
                    expected: cols,
                });
            }
        }
        let rows = rows_of_cells.len();
        let cells: Vec<f64> = rows_of_cells.into_iter().flatten().collect();
        Self::from_flat(rows, cols, cells)
    }

    pub fn from_flat(rows: usize, cols: usize, cells: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 || cells.is_empty() {
            return Err(Error::EmptyInput);
        }
        if cells.len() != rows * cols {
            return Err(Error::invalid_parameters(format!(
                "{rows}x{cols} table needs {} cells, got {}",
                rows * cols,
                cells.len()
            )));
        }
        let sum = validate_weights(&cells)?;
        let mut cells = cells;
        if (sum - 1.0).abs() > f64::EPSILON {
            for c in &mut cells {
                *c /= sum;
            }
        }
        Ok(JointTable { rows, cols, cells })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cell(&self, x: usize, y: usize) -> f64 {
        self.cells[x * self.cols + y]
    }

    pub fn cells(&self) -> &[f64] {
        &self.cells
    }

    fn dim(&self, axis: Axis) -> usize {
        match axis {
            Axis::X => self.rows,
            Axis::Y => self.cols,
        }
    }

    /// The joint cells as a single distribution over (x, y) pairs.
    pub fn flatten(&self) -> ProbVector {
        ProbVector::from_normalized(self.cells.clone())
    }

    /// Distribution of the named variable.
    pub fn marginal(&self, axis: Axis) -> ProbVector {
        let weights = match axis {
            Axis::X => (0..self.rows)
                .map(|x| (0..self.cols).map(|y| self.cell(x, y)).sum())
                .collect(),
            Axis::Y => (0..self.cols)
                .map(|y| (0..self.rows).map(|x| self.cell(x, y)).sum())
                .collect(),
        };
        ProbVector::from_normalized(weights)
    }

    /// Distribution of the other variable given that `given` takes outcome
    /// `index`. Conditioning on an outcome of zero mass is refused.
    pub fn conditional_slice(&self, given: Axis, index: usize) -> Result<ProbVector> {
        let size = self.dim(given);
        if index >= size {
            return Err(Error::IndexOutOfBounds { index, size });
        }
        let raw: Vec<f64> = match given {
            Axis::X => (0..self.cols).map(|y| self.cell(index, y)).collect(),
            Axis::Y => (0..self.rows).map(|x| self.cell(x, index)).collect(),
        };
        let mass: f64 = raw.iter().sum();
        if mass <= 0.0 {
            return Err(Error::ConditionOnNullEvent {
                axis: given.name(),
                index,
            });
        }
        Ok(ProbVector::from_normalized(
            raw.into_iter().map(|c| c / mass).collect(),
        ))
    }
}

impl TryFrom<Vec<Vec<f64>>> for JointTable {
    type Error = Error;

    fn try_from(rows: Vec<Vec<f64>>) -> Result<Self> {
        JointTable::new(rows)
    }
}

impl From<JointTable> for Vec<Vec<f64>> {
    fn from(t: JointTable) -> Vec<Vec<f64>> {
        (0..t.rows)
            .map(|x| t.cells[x * t.cols..(x + 1) * t.cols].to_vec())
            .collect()
    }
}

/// Independent coupling of two distributions: cell (x, y) = px(x) * py(y).
pub fn product_join(px: &ProbVector, py: &ProbVector) -> JointTable {
    let cells: Vec<f64> = px
        .weights()
        .iter()
        .flat_map(|&a| py.weights().iter().map(move |&b| a * b))
        .collect();
    JointTable {
        rows: px.len(),
        cols: py.len(),
        cells,
    }
}

/// Escort of the flattened joint, reshaped back to a table.
pub fn escort_joint_direct(j: &JointTable, q: f64) -> Result<JointTable> {
    let e = escort(&j.flatten(), q)?;
    Ok(JointTable {
        rows: j.rows(),
        cols: j.cols(),
        cells: e.weights().to_vec(),
    })
}

/// Joint escort rebuilt from the factorization through Y: the escort of the
/// Y-marginal supplies column weights, and each column is the escort of the
/// conditional slice given that column. Every column must have positive
/// mass, since each slice is conditioned on.
pub fn escort_joint_composed(j: &JointTable, q: f64) -> Result<JointTable> {
    let marg_y = j.marginal(Axis::Y);
    for (l, &m) in marg_y.weights().iter().enumerate() {
        if m <= 0.0 {
            return Err(Error::ConditionOnNullEvent {
                axis: Axis::Y.name(),
                index: l,
            });
        }
    }
    let col_weights = escort(&marg_y, q)?;
    let mut cells = vec![0.0; j.rows() * j.cols()];
    for l in 0..j.cols() {
        let slice = j.conditional_slice(Axis::Y, l)?;
        let slice_escort = escort(&slice, q)?;
        for k in 0..j.rows() {
            cells[k * j.cols() + l] = col_weights.weights()[l] * slice_escort.weights()[k];
        }
    }
    Ok(JointTable {
        rows: j.rows(),
        cols: j.cols(),
        cells,
    })
}

/// Total-variation distance between the direct joint escort and the
/// composed one: (1/2) * sum of |direct - composed| over all cells.
/// Zero exactly when all conditional slices have equal q-power sums —
/// in particular on product tables — and positive otherwise.
pub fn escort_discrepancy(j: &JointTable, q: f64) -> Result<f64> {
    let direct = escort_joint_direct(j, q)?;
    let composed = escort_joint_composed(j, q)?;
    let l1: f64 = direct
        .cells()
        .iter()
        .zip(composed.cells().iter())
        .map(|(a, b)| (a - b).abs())
        .sum();
    Ok(0.5 * l1)
}

/// Joint distribution of n variables, row-major over the given shape.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JointNd {
    shape: Vec<usize>,
    cells: Vec<f64>,
}

impl JointNd {
    pub fn new(shape: Vec<usize>, cells: Vec<f64>) -> Result<Self> {
        if shape.is_empty() || shape.iter().any(|&d| d == 0) {
            return Err(Error::EmptyInput);
        }
        let expected: usize = shape.iter().product();
        if cells.len() != expected {
            return Err(Error::invalid_parameters(format!(
                "shape {shape:?} needs {expected} cells, got {}",
                cells.len()
            )));
        }
        let sum = validate_weights(&cells)?;
        let mut cells = cells;
        if (sum - 1.0).abs() > f64::EPSILON {
            for c in &mut cells {
                *c /= sum;
            }
        }
        Ok(JointNd { shape, cells })
    }

    pub fn ndim(&self) -> usize {
        self.shape.len()
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn cells(&self) -> &[f64] {
        &self.cells
    }

    pub fn flatten(&self) -> ProbVector {
        ProbVector::from_normalized(self.cells.clone())
    }

    /// Marginal over the first `k` variables (1 <= k <= ndim), summing the
    /// trailing ones out. Row-major layout makes this a blockwise sum.
    pub fn leading_marginal(&self, k: usize) -> Result<JointNd> {
        if k == 0 || k > self.ndim() {
            return Err(Error::IndexOutOfBounds {
                index: k,
                size: self.ndim(),
            });
        }
        if k == self.ndim() {
            return Ok(self.clone());
        }
        let keep: usize = self.shape[..k].iter().product();
        let block: usize = self.shape[k..].iter().product();
        let cells: Vec<f64> = (0..keep)
            .map(|i| self.cells[i * block..(i + 1) * block].iter().sum())
            .collect();
        Ok(JointNd {
            shape: self.shape[..k].to_vec(),
            cells,
        })
    }

    /// View as a two-variable table: the last axis becomes the column
    /// variable, all leading axes are flattened into the row variable.
    /// A one-dimensional joint becomes a single-row table.
    pub fn as_pair_table(&self) -> JointTable {
        let cols = *self.shape.last().expect("shape is nonempty");
        let rows = self.cells.len() / cols;
        JointTable {
            rows,
            cols,
            cells: self.cells.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(rows: Vec<Vec<f64>>) -> JointTable {
        JointTable::new(rows).unwrap()
    }

    #[test]
    fn construction_renormalizes_once() {
        let p = ProbVector::new(vec![0.3, 0.3, 0.3]).unwrap();
        for &w in p.weights() {
            assert!((w - 1.0 / 3.0).abs() < 1e-15);
        }
        assert!((p.weights().iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(ProbVector::new(vec![]), Err(Error::EmptyInput));
        assert_eq!(
            ProbVector::new(vec![0.5, -0.1]),
            Err(Error::NegativeWeight {
                index: 1,
                value: -0.1
            })
        );
        assert_eq!(ProbVector::new(vec![0.0, 0.0]), Err(Error::ZeroMass));
        assert!(matches!(
            ProbVector::new(vec![0.5, f64::NAN]),
            Err(Error::InvalidParameters { .. })
        ));
    }

    #[test]
    fn point_mass_and_uniform() {
        let p = ProbVector::point_mass(3, 1).unwrap();
        assert_eq!(p.weights(), &[0.0, 1.0, 0.0]);
        assert_eq!(p.support_size(), 1);
        let u = ProbVector::uniform(4).unwrap();
        assert_eq!(u.weights(), &[0.25; 4]);
        assert!(ProbVector::uniform(0).is_err());
        assert!(ProbVector::point_mass(2, 5).is_err());
    }

    #[test]
    fn escort_order_two() {
        let p = ProbVector::new(vec![0.8, 0.2]).unwrap();
        let e = escort(&p, 2.0).unwrap();
        assert!((e.weights()[0] - 16.0 / 17.0).abs() < 1e-15);
        assert!((e.weights()[1] - 1.0 / 17.0).abs() < 1e-15);
    }

    #[test]
    fn escort_identity_and_uniform_orders() {
        let p = ProbVector::new(vec![0.5, 0.3, 0.2]).unwrap();
        let e1 = escort(&p, 1.0).unwrap();
        for (a, b) in e1.weights().iter().zip(p.weights()) {
            assert!((a - b).abs() < 1e-15);
        }
        let e0 = escort(&p, 0.0).unwrap();
        for &w in e0.weights() {
            assert!((w - 1.0 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn escort_keeps_zeros_for_positive_order() {
        let p = ProbVector::new(vec![0.0, 0.5, 0.5]).unwrap();
        let e = escort(&p, 2.0).unwrap();
        assert_eq!(e.weights()[0], 0.0);
        assert!((e.weights()[1] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn escort_nonpositive_order_needs_full_support() {
        let p = ProbVector::new(vec![0.0, 0.5, 0.5]).unwrap();
        assert_eq!(escort(&p, 0.0), Err(Error::EscortUndefined { q: 0.0 }));
        assert_eq!(escort(&p, -1.0), Err(Error::EscortUndefined { q: -1.0 }));
        // strictly positive input is fine at q <= 0
        let pos = ProbVector::new(vec![0.5, 0.3, 0.2]).unwrap();
        assert!(escort(&pos, -1.0).is_ok());
    }

    #[test]
    fn table_marginals_and_slices() {
        let t = j(vec![vec![0.4, 0.1], vec![0.1, 0.4]]);
        assert_eq!(t.marginal(Axis::X).weights(), &[0.5, 0.5]);
        assert_eq!(t.marginal(Axis::Y).weights(), &[0.5, 0.5]);
        let s = t.conditional_slice(Axis::Y, 0).unwrap();
        assert!((s.weights()[0] - 0.8).abs() < 1e-15);
        assert!((s.weights()[1] - 0.2).abs() < 1e-15);
    }

    #[test]
    fn table_rejects_ragged_and_null_conditioning() {
        assert_eq!(
            JointTable::new(vec![vec![0.5, 0.5], vec![0.5]]),
            Err(Error::RaggedRows {
                row: 1,
                got: 1,
                expected: 2
            })
        );
        let t = j(vec![vec![0.5, 0.0], vec![0.5, 0.0]]);
        assert_eq!(
            t.conditional_slice(Axis::Y, 1),
            Err(Error::ConditionOnNullEvent { axis: "Y", index: 1 })
        );
        assert_eq!(
            t.conditional_slice(Axis::Y, 7),
            Err(Error::IndexOutOfBounds { index: 7, size: 2 })
        );
    }

    #[test]
    fn product_join_cells() {
        let px = ProbVector::new(vec![0.7, 0.3]).unwrap();
        let py = ProbVector::new(vec![0.5, 0.25, 0.25]).unwrap();
        let t = product_join(&px, &py);
        assert_eq!(t.rows(), 2);
        assert_eq!(t.cols(), 3);
        assert!((t.cell(0, 0) - 0.35).abs() < 1e-15);
        assert!((t.cell(1, 2) - 0.075).abs() < 1e-15);
        assert!((t.cells().iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn joint_escort_direct_cells() {
        let t = j(vec![vec![0.4, 0.1], vec![0.1, 0.4]]);
        let d = escort_joint_direct(&t, 2.0).unwrap();
        assert!((d.cell(0, 0) - 8.0 / 17.0).abs() < 1e-15);
        assert!((d.cell(0, 1) - 1.0 / 34.0).abs() < 1e-15);
        assert!((d.cell(1, 0) - 1.0 / 34.0).abs() < 1e-15);
        assert!((d.cell(1, 1) - 8.0 / 17.0).abs() < 1e-15);
    }

    #[test]
    fn discrepancy_vanishes_when_slices_are_power_equivalent() {
        // The two conditional slices here are permutations of each other,
        // so their q-power sums coincide and the composed escort equals the
        // direct one exactly, even though the table is far from a product.
        let t = j(vec![vec![0.4, 0.1], vec![0.1, 0.4]]);
        let d = escort_discrepancy(&t, 2.0).unwrap();
        assert!(d.abs() < 1e-15, "measured {d:e}");
    }

    #[test]
    fn discrepancy_positive_for_asymmetric_dependence() {
        // Slices (5/6, 1/6) and (1/4, 3/4) have different square sums;
        // the exact total-variation gap at q = 2 is 7/234.
        let t = j(vec![vec![0.5, 0.1], vec![0.1, 0.3]]);
        let d = escort_discrepancy(&t, 2.0).unwrap();
        assert!((d - 7.0 / 234.0).abs() < 1e-14, "measured {d:?}");
    }

    #[test]
    fn composed_escort_refuses_null_columns() {
        let t = j(vec![vec![0.5, 0.0], vec![0.5, 0.0]]);
        assert_eq!(
            escort_joint_composed(&t, 2.0),
            Err(Error::ConditionOnNullEvent { axis: "Y", index: 1 })
        );
    }

    #[test]
    fn nd_leading_marginal_and_pair_view() {
        let cells = vec![
            0.10, 0.05, // (0,0,*)
            0.15, 0.10, // (0,1,*)
            0.20, 0.05, // (1,0,*)
            0.25, 0.10, // (1,1,*)
        ];
        let t = JointNd::new(vec![2, 2, 2], cells).unwrap();
        let m2 = t.leading_marginal(2).unwrap();
        assert_eq!(m2.shape(), &[2, 2]);
        assert!((m2.cells()[0] - 0.15).abs() < 1e-15);
        assert!((m2.cells()[3] - 0.35).abs() < 1e-15);
        let pair = m2.as_pair_table();
        assert_eq!((pair.rows(), pair.cols()), (2, 2));
        let m1 = t.leading_marginal(1).unwrap();
        let single = m1.as_pair_table();
        assert_eq!((single.rows(), single.cols()), (1, 2));
        assert!((single.cell(0, 0) - 0.4).abs() < 1e-15);
    }

    #[test]
    fn serde_round_trip_revalidates() {
        let p: ProbVector = serde_json::from_str("[2.0, 2.0]").unwrap();
        assert_eq!(p.weights(), &[0.5, 0.5]);
        assert!(serde_json::from_str::<ProbVector>("[1.0, -1.0]").is_err());
        let t: JointTable = serde_json::from_str("[[0.4, 0.1], [0.1, 0.4]]").unwrap();
        assert_eq!(t.rows(), 2);
        let back = serde_json::to_string(&t).unwrap();
        let t2: JointTable = serde_json::from_str(&back).unwrap();
        assert_eq!(t, t2);
    }
}
