//! Seeded random generation of distributions and joint tables for the
//! verification sweeps. Everything is deterministic given the RNG state;
//! callers seed a `ChaCha8Rng` and assign stream numbers so that runs are
//! reproducible and independent probes never share a sample path.

use rand::Rng;

use crate::prob::{JointNd, JointTable, ProbVector};

/// A point of the n-simplex, uniformly distributed (flat Dirichlet):
/// normalized independent unit exponentials.
pub fn sample_simplex<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ProbVector {
    assert!(n >= 1, "simplex needs at least one coordinate");
    loop {
        let mut w = Vec::with_capacity(n);
        let mut total = 0.0;
        for _ in 0..n {
            // 1 - U in (0, 1]: never takes the log of zero
            let e = -(1.0 - rng.gen::<f64>()).ln();
            w.push(e);
            total += e;
        }
        if total > 0.0 {
            for v in &mut w {
                *v /= total;
            }
            if let Ok(p) = ProbVector::new(w) {
                return p;
            }
        }
    }
}

/// A uniform dimension draw, inclusive on both ends.
pub fn sample_dim<R: Rng + ?Sized>(rng: &mut R, lo: usize, hi: usize) -> usize {
    assert!(lo <= hi);
    rng.gen_range(lo..=hi)
}

/// A dense joint table with uniformly distributed cells (flat Dirichlet
/// over all rows x cols entries).
pub fn sample_joint<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> JointTable {
    let flat = sample_simplex(rng, rows * cols);
    JointTable::from_flat(rows, cols, flat.weights().to_vec())
        .expect("sampled cells are a valid table")
}

/// A dense joint of arbitrary dimension with uniformly distributed cells.
pub fn sample_joint_nd<R: Rng + ?Sized>(rng: &mut R, shape: &[usize]) -> JointNd {
    let n: usize = shape.iter().product();
    let flat = sample_simplex(rng, n);
    JointNd::new(shape.to_vec(), flat.weights().to_vec())
        .expect("sampled cells are a valid joint")
}
