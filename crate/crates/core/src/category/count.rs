use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{CategoryError, MatrixError};
use crate::matrix::QMatrix;
use crate::rational::int;

/// Square matrix of natural numbers; entry `(i, j)` counts arrows `i → j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CountMatrix {
    dim: usize,
    entries: Vec<u64>,
}

impl CountMatrix {
    pub fn new(dim: usize, entries: Vec<u64>) -> Result<Self, MatrixError> {
        if entries.len() != dim * dim {
            return Err(MatrixError::DimensionMismatch { expected: dim * dim, found: entries.len() });
        }
        Ok(CountMatrix { dim, entries })
    }

    /// Panics on ragged or non-square input.
    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for r in rows {
            assert_eq!(r.as_ref().len(), dim, "count matrix must be square");
            entries.extend_from_slice(r.as_ref());
        }
        CountMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().sum()
    }

    pub fn to_qmatrix(&self) -> QMatrix {
        QMatrix::from_fn(self.dim, |i, j| int(self.get(i, j) as i64))
    }

    pub fn transpose(&self) -> CountMatrix {
        let n = self.dim;
        CountMatrix { dim: n, entries: (0..n * n).map(|k| self.get(k % n, k / n)).collect() }
    }

    /// Every diagonal entry is at least 1.
    pub fn is_reflexive(&self) -> bool {
        (0..self.dim).all(|i| self.get(i, i) >= 1)
    }

    /// First `(i, j, k)` with `Z_ij, Z_jk >= 1` but `Z_ik = 0`.
    pub fn transitivity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in (0..n).filter(|&j| self.get(i, j) > 0) {
                for k in (0..n).filter(|&k| self.get(j, k) > 0) {
                    if self.get(i, k) == 0 {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_failure().is_none()
    }

    /// Simultaneous row and column permutation: entry `(i, j)` of the result
    /// is entry `(perm[i], perm[j])` of `self`.
    pub fn permute(&self, perm: &[usize]) -> CountMatrix {
        let n = self.dim;
        assert_eq!(perm.len(), n);
        CountMatrix { dim: n, entries: (0..n * n).map(|k| self.get(perm[k / n], perm[k % n])).collect() }
    }

    pub fn delete(&self, index: usize) -> Result<CountMatrix, CategoryError> {
        let n = self.dim;
        if index >= n {
            return Err(CategoryError::IndexOutOfRange { index, dim: n });
        }
        let keep: Vec<usize> = (0..n).filter(|&i| i != index).collect();
        Ok(CountMatrix {
            dim: n - 1,
            entries: keep.iter().flat_map(|&i| keep.iter().map(move |&j| (i, j))).map(|(i, j)| self.get(i, j)).collect(),
        })
    }
}

impl fmt::Display for CountMatrix {
    /// The matrix file format: the dimension, then one line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.dim)?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Appends a copy of object `index` (0-based): the new last row and column
/// repeat row and column `index`, and the new diagonal entry is `Z_ii`.
pub fn duplicate_object(z: &CountMatrix, index: usize) -> Result<CountMatrix, CategoryError> {
    let n = z.dim;
    if index >= n {
        return Err(CategoryError::IndexOutOfRange { index, dim: n });
    }
    let src = |i: usize| if i == n { index } else { i };
    let m = n + 1;
    Ok(CountMatrix { dim: m, entries: (0..m * m).map(|k| z.get(src(k / m), src(k % m))).collect() })
}

/// Seeded random matrix with off-diagonal entries uniform in
/// `[1, max_entry]` and diagonal entries uniform in `[2, max_entry]`. Every
/// such matrix is the count matrix of some category.
pub fn random_category_matrix(m: usize, max_entry: u64, seed: u64) -> CountMatrix {
    assert!(m >= 1 && max_entry >= 2, "need m >= 1 and max_entry >= 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..m * m)
        .map(|k| {
            let lo = if k / m == k % m { 2 } else { 1 };
            rng.random_range(lo..=max_entry)
        })
        .collect();
    CountMatrix { dim: m, entries }
}
