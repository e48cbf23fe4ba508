//! Dense square matrices over the rationals.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::MatrixError;
use crate::poly::{Poly, Var};
use crate::rational::Rational;

/// An `m x m` rational matrix stored row-major. `m = 0` is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

/// Outcome of solving `M x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub consistent: bool,
    /// Reduced-row-echelon solution with every free variable set to 0.
    pub particular: Option<Vec<Rational>>,
    pub nullity: usize,
}

impl QMatrix {
    pub fn new(dim: usize, entries: Vec<Rational>) -> Result<Self, MatrixError> {
        if entries.len() != dim * dim {
            return Err(MatrixError::DimensionMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(QMatrix { dim, entries })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        QMatrix { dim, entries }
    }

    /// Panics if the rows are ragged or not square.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let dim = rows.len();
        for r in rows {
            assert_eq!(r.as_ref().len(), dim, "matrix rows must be square");
        }
        Self::from_fn(dim, |i, j| crate::rational::int(rows[i].as_ref()[j]))
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| Rational::zero())
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn transpose(&self) -> QMatrix {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.dim, other.dim);
        Self::from_fn(self.dim, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.dim, other.dim);
        Self::from_fn(self.dim, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        Self::from_fn(self.dim, |i, j| self.get(i, j) * c)
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = QMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> QMatrix {
        let mut base = self.clone();
        let mut acc = QMatrix::identity(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `M - c I`.
    pub fn shift_diagonal(&self, c: &Rational) -> QMatrix {
        let mut out = self.clone();
        for i in 0..self.dim {
            out.entries[i * self.dim + i] -= c;
        }
        out
    }

    /// `s(M)`: the sum of all entries. Zero for the empty matrix.
    pub fn entry_sum(&self) -> Rational {
        self.entries.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Determinant by fraction-free (Bareiss) elimination. The empty matrix
    /// has determinant 1.
    pub fn det(&self) -> Rational {
        let n = self.dim;
        if n == 0 {
            return Rational::one();
        }
        let mut a = self.entries.clone();
        let mut negate = false;
        let mut prev = Rational::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return Rational::zero();
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                negate = !negate;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                let lead = a[i * n + k].clone();
                for j in k + 1..n {
                    let v = (&a[i * n + j] * &pivot - &lead * &a[k * n + j]) / &prev;
                    a[i * n + j] = v;
                }
            }
            prev = pivot;
        }
        let d = a[n * n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        let n = self.dim;
        if n == 0 {
            return Some(QMatrix::zeros(0));
        }
        let w = 2 * n;
        let mut rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        let pivots = rref(&mut rows, w);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, |i, j| rows[i][n + j].clone()))
    }

    /// Classical adjugate: `adj(M)_{ij} = (-1)^{i+j} det(M without row j and column i)`.
    ///
    /// Computed as `det(M) * M^{-1}` when `M` is invertible and by cofactors
    /// otherwise. The 0 x 0 adjugate is the 0 x 0 matrix; every 1 x 1
    /// adjugate is `[[1]]`.
    pub fn adjugate(&self) -> QMatrix {
        let n = self.dim;
        match n {
            0 => return QMatrix::zeros(0),
            1 => return QMatrix::identity(1),
            _ => {}
        }
        if let Some(inv) = self.inverse() {
            return inv.scale(&self.det());
        }
        Self::from_fn(n, |i, j| {
            let minor = self.minor(j, i);
            let c = minor.det();
            if (i + j) % 2 == 0 {
                c
            } else {
                -c
            }
        })
    }

    /// The matrix with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> QMatrix {
        let n = self.dim;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in (0..n).filter(|&i| i != r) {
            for j in (0..n).filter(|&j| j != c) {
                entries.push(self.get(i, j).clone());
            }
        }
        QMatrix { dim: n - 1, entries }
    }

    /// Principal submatrix on the given indices, in the order given.
    pub fn principal(&self, keep: &[usize]) -> QMatrix {
        let k = keep.len();
        Self::from_fn(k, |i, j| self.get(keep[i], keep[j]).clone())
    }

    /// Deletes row `i` and column `i` for every (0-based) `i` in `indices`.
    /// Repeated indices are harmless.
    pub fn delete_rc(&self, indices: &[usize]) -> Result<QMatrix, MatrixError> {
        let mut drop = vec![false; self.dim];
        for &i in indices {
            if i >= self.dim {
                return Err(MatrixError::IndexOutOfRange { index: i, dim: self.dim });
            }
            drop[i] = true;
        }
        let keep: Vec<usize> = (0..self.dim).filter(|&i| !drop[i]).collect();
        Ok(self.principal(&keep))
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<Rational>> = (0..self.dim).map(|i| self.row(i).to_vec()).collect();
        rref(&mut rows, self.dim).len()
    }

    /// Solves `M x = b` exactly.
    pub fn solve_right(&self, b: &[Rational]) -> Result<LinearSolution, MatrixError> {
        let n = self.dim;
        if b.len() != n {
            return Err(MatrixError::DimensionMismatch { expected: n, found: b.len() });
        }
        Ok(solve_system(
            (0..n).map(|i| self.row(i).to_vec()).collect(),
            b.to_vec(),
            n,
        ))
    }

    /// Monic polynomial of least degree annihilating `M`, found as the first
    /// linear dependency among `I, M, M^2, ...`.
    pub fn minimal_polynomial(&self) -> Poly {
        let n = self.dim;
        let mut powers: Vec<QMatrix> = vec![QMatrix::identity(n)];
        loop {
            let k = powers.len();
            let next = powers[k - 1].mul(self);
            // Columns are vec(M^0) .. vec(M^{k-1}); right-hand side vec(M^k).
            let rows: Vec<Vec<Rational>> = (0..n * n)
                .map(|e| powers.iter().map(|p| p.entries[e].clone()).collect())
                .collect();
            let sol = solve_system(rows, next.entries.clone(), k);
            if let Some(c) = sol.particular {
                let mut coeffs: Vec<Rational> = c.into_iter().map(|x| -x).collect();
                coeffs.push(Rational::one());
                return Poly::new(coeffs, Var::U);
            }
            powers.push(next);
        }
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", crate::rational::render_vec(self.row(i)))?;
        }
        write!(f, "]")
    }
}

/// Reduces `rows` (each of length `width`) to reduced row echelon form in
/// place, returning the pivot column of each nonzero row.
fn rref(rows: &mut [Vec<Rational>], width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves a (possibly non-square) system with `unknowns` columns.
fn solve_system(mut rows: Vec<Vec<Rational>>, rhs: Vec<Rational>, unknowns: usize) -> LinearSolution {
    for (row, b) in rows.iter_mut().zip(rhs) {
        row.push(b);
    }
    let pivots = rref(&mut rows, unknowns + 1);
    let rank = pivots.iter().filter(|&&c| c < unknowns).count();
    if pivots.last() == Some(&unknowns) {
        return LinearSolution { consistent: false, particular: None, nullity: unknowns - rank };
    }
    let mut x = vec![Rational::zero(); unknowns];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][unknowns].clone();
    }
    LinearSolution { consistent: true, particular: Some(x), nullity: unknowns - rank }
}
