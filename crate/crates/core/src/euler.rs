//! Euler characteristic and series Euler characteristic of a count matrix.
//!
//! For a finite category with count matrix `Z` the nondegenerate nerve
//! simplices are counted by `c_n = s((Z - I)^n)`, and
//!
//! ```text
//! f(t) = sum c_n t^n = s(adj(I - (Z - I) t)) / det(I - (Z - I) t)
//! g(u) = s(adj(Z - u I)) / det(Z - u I),      f(t) = (1 - u) g(u), u = 1 + 1/t.
//! ```
//!
//! The series Euler characteristic is `f(-1) = g(0)` when finite. It is read
//! off the principal-minor sums
//!
//! ```text
//! det(Z - u I)    = sum_r (-1)^r d_r u^r,   d_r = sum_{|R| = r} det(Z \ R)
//! s(adj(Z - u I)) = sum_r (-1)^r e_r u^r,   e_r = sum_{|R| = r} s(adj(Z \ R))
//! ```
//!
//! as `e_l / d_l`, where `l` is the least index with `d_l != 0`, provided
//! `e_r = 0` for every `r < l`.

use std::fmt;

use num_traits::{One, Zero};

use crate::category::CountMatrix;
use crate::error::MatrixError;
use crate::matrix::QMatrix;
use crate::poly::{Poly, Var};
use crate::ratfunc::{RatFunc, SeriesTruncation};
use crate::rational::{int, render_opt, render_vec, Rational};

/// Largest dimension for which `d_r`, `e_r` are also computed by summing over
/// all `2^m` principal submatrices.
pub const SUBSET_LIMIT: usize = 12;

/// Largest dimension accepted by [`s_adj_permutation_oracle`].
pub const PERMUTATION_LIMIT: usize = 6;

pub const DEFAULT_SERIES_TERMS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Column vector `w` with `Z w = (1, ..., 1)`.
    Weighting,
    /// Row vector `w` with `w Z = (1, ..., 1)`.
    Coweighting,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weighting {
    pub values: Vec<Rational>,
    pub side: Side,
}

impl Weighting {
    pub fn total(&self) -> Rational {
        self.values.iter().sum()
    }

    pub fn satisfies(&self, z: &CountMatrix) -> bool {
        is_weighting(z, &self.values, self.side)
    }
}

pub fn is_weighting(z: &CountMatrix, values: &[Rational], side: Side) -> bool {
    if values.len() != z.dim() {
        return false;
    }
    let q = match side {
        Side::Weighting => z.to_qmatrix(),
        Side::Coweighting => z.to_qmatrix().transpose(),
    };
    q.mul_vec(values).iter().all(One::is_one)
}

/// The reduced-row-echelon solution (free variables zero), if any exists.
pub fn find_weighting(z: &CountMatrix, side: Side) -> Option<Weighting> {
    let q = match side {
        Side::Weighting => z.to_qmatrix(),
        Side::Coweighting => z.to_qmatrix().transpose(),
    };
    let ones = vec![Rational::one(); z.dim()];
    let sol = q.solve_right(&ones).expect("dimensions agree");
    sol.particular.map(|values| Weighting { values, side })
}

/// `χ`: defined when both a weighting and a coweighting exist, and then
/// equal to the total weight of either.
pub fn euler_characteristic(z: &CountMatrix) -> Option<Rational> {
    let w = find_weighting(z, Side::Weighting)?;
    find_weighting(z, Side::Coweighting)?;
    Some(w.total())
}

/// `s(Z^{-1})` when `Z` is invertible.
pub fn mobius_chi(z: &CountMatrix) -> Option<Rational> {
    let q = z.to_qmatrix();
    let det = q.det();
    if det.is_zero() {
        return None;
    }
    Some(q.adjugate().entry_sum() / det)
}

/// `f(t) = s(adj(I - (Z - I) t)) / det(I - (Z - I) t)`, interpolated from
/// exact values at `t = 0, 1, ..., m`.
pub fn f_series_ratfunc(z: &CountMatrix) -> RatFunc {
    let m = z.dim();
    let step = z.to_qmatrix().shift_diagonal(&Rational::one());
    let mut dets = Vec::with_capacity(m + 1);
    let mut sums = Vec::with_capacity(m + 1);
    for k in 0..=m as i64 {
        let t = int(k);
        let a = QMatrix::identity(m).sub(&step.scale(&t));
        dets.push((t.clone(), a.det()));
        sums.push((t, a.adjugate().entry_sum()));
    }
    RatFunc::new(Poly::interpolate(&sums, Var::T), Poly::interpolate(&dets, Var::T))
        .expect("det(I - Mt) is 1 at t = 0")
}

/// `g(u) = s(adj(Z - u I)) / det(Z - u I)`.
pub fn g_ratfunc(z: &CountMatrix) -> RatFunc {
    let (det, sadj) = det_and_sadj_polys(&z.to_qmatrix());
    RatFunc::new(sadj, det).expect("det(Z - uI) is monic up to sign")
}

/// `det(Z - uI)` and `s(adj(Z - uI))` as polynomials in `u`.
///
/// The determinant comes from the Faddeev–LeVerrier recursion for the
/// characteristic polynomial. The adjugate sum is interpolated from its
/// values at `u = 0, ..., m`, each obtained from the rank-one update identity
/// `s(adj(M)) = det(M + J) - det(M)` with `J` the all-ones matrix.
pub fn det_and_sadj_polys(z: &QMatrix) -> (Poly, Poly) {
    let m = z.dim();
    let charpoly = faddeev_leverrier(z);
    let sign = if m.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let det = charpoly.scale(&sign);

    let ones = QMatrix::from_fn(m, |_, _| Rational::one());
    let points: Vec<(Rational, Rational)> = (0..=m as i64)
        .map(|k| {
            let u = int(k);
            let a = z.shift_diagonal(&u);
            let s = a.add(&ones).det() - a.det();
            (u, s)
        })
        .collect();
    (det, Poly::interpolate(&points, Var::U))
}

/// Monic `det(uI - A)`.
fn faddeev_leverrier(a: &QMatrix) -> Poly {
    let n = a.dim();
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut mk = QMatrix::zeros(n);
    let id = QMatrix::identity(n);
    for k in 1..=n {
        mk = a.mul(&mk).add(&id.scale(&c[n - k + 1]));
        let am = a.mul(&mk);
        let trace: Rational = (0..n).map(|i| am.get(i, i).clone()).sum();
        c[n - k] = -trace / int(k as i64);
    }
    Poly::new(c, Var::U)
}

/// Whether the subset-enumeration route was run and matched.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubsetCheck {
    Agreed,
    Disagreed { d: Vec<Rational>, e: Vec<Rational> },
    Skipped { dim: usize, limit: usize },
}

/// `d_0 .. d_m`, `e_0 .. e_m` and `l`, the least `r` with `d_r != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyData {
    pub d: Vec<Rational>,
    pub e: Vec<Rational>,
    pub l: usize,
    pub subset_check: SubsetCheck,
}

impl CharPolyData {
    /// `e_l / d_l` if `e_r = 0` for all `r < l`.
    pub fn series_chi(&self) -> Option<Rational> {
        if self.e[..self.l].iter().all(Zero::is_zero) {
            Some(&self.e[self.l] / &self.d[self.l])
        } else {
            None
        }
    }
}

/// Signs are stripped so that `coeff_r = (-1)^r x_r`.
fn alternating(p: &Poly, m: usize) -> Vec<Rational> {
    (0..=m)
        .map(|r| if r % 2 == 0 { p.coeff(r) } else { -p.coeff(r) })
        .collect()
}

/// `d_r`, `e_r` from the polynomial expansions of `det(Z - uI)` and
/// `s(adj(Z - uI))`.
pub fn char_data_polynomial(z: &QMatrix) -> (Vec<Rational>, Vec<Rational>) {
    let (det, sadj) = det_and_sadj_polys(z);
    (alternating(&det, z.dim()), alternating(&sadj, z.dim()))
}

/// `d_r`, `e_r` as sums over the principal submatrices `Z \ R`, `|R| = r`.
pub fn char_data_subsets(z: &QMatrix, limit: usize) -> Result<(Vec<Rational>, Vec<Rational>), MatrixError> {
    let m = z.dim();
    if m > limit {
        return Err(MatrixError::TooLarge { dim: m, limit });
    }
    let mut d = vec![Rational::zero(); m + 1];
    let mut e = vec![Rational::zero(); m + 1];
    for removed in 0u32..(1u32 << m) {
        let keep: Vec<usize> = (0..m).filter(|&i| removed & (1 << i) == 0).collect();
        let r = m - keep.len();
        let sub = z.principal(&keep);
        d[r] += sub.det();
        e[r] += sub.adjugate().entry_sum();
    }
    Ok((d, e))
}

pub fn char_data(z: &CountMatrix) -> CharPolyData {
    char_data_with_limit(z, SUBSET_LIMIT)
}

/// Computes `d`, `e` both ways when `dim <= limit`; the polynomial route
/// always supplies the returned values.
pub fn char_data_with_limit(z: &CountMatrix, limit: usize) -> CharPolyData {
    let q = z.to_qmatrix();
    let (d, e) = char_data_polynomial(&q);
    let subset_check = match char_data_subsets(&q, limit) {
        Ok((sd, se)) if sd == d && se == e => SubsetCheck::Agreed,
        Ok((sd, se)) => SubsetCheck::Disagreed { d: sd, e: se },
        Err(_) => SubsetCheck::Skipped { dim: q.dim(), limit },
    };
    let l = d.iter().position(|x| !x.is_zero()).expect("d_m = 1");
    CharPolyData { d, e, l, subset_check }
}

/// `χ_Σ = e_l / d_l`, or `None` when `g` has a pole at 0.
pub fn series_chi(z: &CountMatrix) -> Option<Rational> {
    char_data(z).series_chi()
}

/// Diagonalizable over the complex numbers iff the minimal polynomial is
/// squarefree.
pub fn is_diagonalizable(z: &CountMatrix) -> bool {
    let q = z.to_qmatrix();
    if q.dim() == 0 {
        return true;
    }
    q.minimal_polynomial().is_squarefree().expect("minimal polynomial is monic")
}

/// `s(adj(M))` by expansion over permutations:
/// `sum_σ sgn(σ) F(M_{1σ(1)}, ..., M_{mσ(m)})` with
/// `F(x) = sum_i prod_{j != i} x_j`.
pub fn s_adj_permutation_oracle(m: &QMatrix) -> Result<Rational, MatrixError> {
    let n = m.dim();
    if n > PERMUTATION_LIMIT {
        return Err(MatrixError::TooLarge { dim: n, limit: PERMUTATION_LIMIT });
    }
    let mut total = Rational::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, false, &mut |p, odd| {
        let xs: Vec<&Rational> = (0..n).map(|i| m.get(i, p[i])).collect();
        let f: Rational = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != i)
                    .fold(Rational::one(), |acc, j| acc * xs[j])
            })
            .sum();
        if odd {
            total -= f;
        } else {
            total += f;
        }
    });
    Ok(total)
}

/// Visits every permutation of `p[k..]` with its parity.
fn permutations(p: &mut Vec<usize>, k: usize, odd: bool, visit: &mut impl FnMut(&[usize], bool)) {
    if k == p.len() {
        visit(p, odd);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, odd ^ (i != k), visit);
        p.swap(k, i);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass(String),
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: CheckOutcome,
}

impl Check {
    pub fn failed(&self) -> bool {
        matches!(self.outcome, CheckOutcome::Fail(_))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            CheckOutcome::Pass(d) => write!(f, "PASS {}: {d}", self.name),
            CheckOutcome::Fail(d) => write!(f, "FAIL {}: {d}", self.name),
            CheckOutcome::Skipped(d) => write!(f, "SKIP {}: {d}", self.name),
        }
    }
}

/// Every quantity computed for one count matrix, plus the outcome of the
/// internal consistency checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerReport {
    pub z: CountMatrix,
    pub weighting: Option<Weighting>,
    pub coweighting: Option<Weighting>,
    pub chi: Option<Rational>,
    pub has_mobius: bool,
    pub mobius_chi: Option<Rational>,
    pub f: RatFunc,
    pub g: RatFunc,
    pub char_data: CharPolyData,
    pub chi_sigma: Option<Rational>,
    pub diagonalizable: bool,
    pub series_prefix: SeriesTruncation,
    pub checks: Vec<Check>,
}

impl EulerReport {
    pub fn all_passed(&self) -> bool {
        !self.checks.iter().any(Check::failed)
    }
}

pub fn build_report(z: &CountMatrix, series_terms: usize) -> EulerReport {
    let weighting = find_weighting(z, Side::Weighting);
    let coweighting = find_weighting(z, Side::Coweighting);
    let chi = match (&weighting, &coweighting) {
        (Some(w), Some(_)) => Some(w.total()),
        _ => None,
    };
    let mobius = mobius_chi(z);
    let f = f_series_ratfunc(z);
    let g = g_ratfunc(z);
    let char_data = char_data(z);
    let chi_sigma = char_data.series_chi();
    let order = series_terms.saturating_sub(1);
    let series_prefix = f.series(order).expect("f has no pole at 0");

    let mut checks = Vec::new();
    checks.push(Check {
        name: "principal-minor-identity",
        outcome: match &char_data.subset_check {
            SubsetCheck::Agreed => CheckOutcome::Pass("subset sums match polynomial coefficients".into()),
            SubsetCheck::Disagreed { d, e } => CheckOutcome::Fail(format!(
                "subset d = {}, e = {}; polynomial d = {}, e = {}",
                render_vec(d),
                render_vec(e),
                render_vec(&char_data.d),
                render_vec(&char_data.e)
            )),
            SubsetCheck::Skipped { dim, limit } => {
                CheckOutcome::Skipped(format!("dimension {dim} over subset limit {limit}"))
            }
        },
    });
    checks.push(Check {
        name: "substitution",
        outcome: match g.substitute_mobius() {
            Ok(h) if h == f => CheckOutcome::Pass("(1 - u) g(u) at u = 1 + 1/t equals f(t)".into()),
            Ok(h) => CheckOutcome::Fail(format!("substituted g gives {h}, f is {f}")),
            Err(e) => CheckOutcome::Fail(e.to_string()),
        },
    });
    let step = z.to_qmatrix().shift_diagonal(&Rational::one());
    let powers: Vec<Rational> = (0..=order as u32).map(|n| step.pow(n).entry_sum()).collect();
    checks.push(Check {
        name: "series-vs-matrix-powers",
        outcome: if powers == series_prefix.coefficients {
            CheckOutcome::Pass(format!("first {} coefficients equal s((Z - I)^n)", powers.len()))
        } else {
            CheckOutcome::Fail(format!("series {} vs powers {}", series_prefix, render_vec(&powers)))
        },
    });
    let g0 = g.eval(&Rational::zero()).into_value();
    checks.push(Check {
        name: "chi-sigma-two-path",
        outcome: match (&chi_sigma, &g0) {
            (None, None) => CheckOutcome::Pass("undefined, consistent on both paths".into()),
            (Some(a), Some(b)) if a == b => CheckOutcome::Pass(format!("{a} on both paths")),
            _ => CheckOutcome::Fail(format!(
                "e_l/d_l gives {}, g(0) gives {}",
                render_opt(chi_sigma.as_ref()),
                render_opt(g0.as_ref())
            )),
        },
    });
    let sides_ok = weighting.as_ref().is_none_or(|w| w.satisfies(z))
        && coweighting.as_ref().is_none_or(|w| w.satisfies(z));
    checks.push(Check {
        name: "weighting-equations",
        outcome: if sides_ok {
            CheckOutcome::Pass("solutions satisfy their defining equations".into())
        } else {
            CheckOutcome::Fail("a returned solution does not satisfy its equation".into())
        },
    });
    checks.push(Check {
        name: "weighting-totals",
        outcome: match (&weighting, &coweighting) {
            (Some(w), Some(c)) if w.total() == c.total() => {
                CheckOutcome::Pass(format!("both totals are {}", w.total()))
            }
            (Some(w), Some(c)) => CheckOutcome::Fail(format!("{} vs {}", w.total(), c.total())),
            _ => CheckOutcome::Skipped("needs both a weighting and a coweighting".into()),
        },
    });
    checks.push(Check {
        name: "mobius-inversion",
        outcome: match (&mobius, &chi) {
            (Some(a), Some(b)) if a == b => CheckOutcome::Pass(format!("s(Z^-1) = chi = {a}")),
            (Some(a), b) => CheckOutcome::Fail(format!("s(Z^-1) = {a}, chi = {}", render_opt(b.as_ref()))),
            (None, _) => CheckOutcome::Skipped("Z is singular".into()),
        },
    });

    EulerReport {
        z: z.clone(),
        weighting,
        coweighting,
        chi,
        has_mobius: mobius.is_some(),
        mobius_chi: mobius,
        f,
        g,
        char_data,
        chi_sigma,
        diagonalizable: is_diagonalizable(z),
        series_prefix,
        checks,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl fmt::Display for EulerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .z
            .rows()
            .map(|r| format!("[{}]", r.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        let w = |w: &Option<Weighting>| w.as_ref().map_or("none".to_string(), |w| render_vec(&w.values));
        writeln!(f, "Z: [{}]", rows.join(", "))?;
        writeln!(f, "weighting: {}", w(&self.weighting))?;
        writeln!(f, "coweighting: {}", w(&self.coweighting))?;
        writeln!(f, "chi: {}", render_opt(self.chi.as_ref()))?;
        writeln!(f, "mobius inversion: {}", yes_no(self.has_mobius))?;
        writeln!(f, "f(t): {}", self.f)?;
        writeln!(f, "g(u): {}", self.g)?;
        writeln!(f, "d: {}", render_vec(&self.char_data.d))?;
        writeln!(f, "e: {}", render_vec(&self.char_data.e))?;
        writeln!(f, "l: {}", self.char_data.l)?;
        writeln!(f, "chi_sigma: {}", render_opt(self.chi_sigma.as_ref()))?;
        writeln!(f, "diagonalizable: {}", yes_no(self.diagonalizable))?;
        writeln!(f, "series: {}", self.series_prefix)
    }
}
