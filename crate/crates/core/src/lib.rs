//! Euler characteristics of finite categories in exact rational arithmetic.
//!
//! Two invariants are computed from the count matrix `Z` of a finite
//! category (entry `(i, j)` = number of arrows from object `i` to `j`):
//!
//! * `χ`, the common total of a weighting (`Z w = 1`) and a coweighting
//!   (`w Z = 1`), when both exist;
//! * `χ_Σ`, the value at `t = -1` of the rational function summing the
//!   nondegenerate nerve simplex counts `c_n t^n`, when finite.
//!
//! See [`euler::build_report`] for everything at once.

pub mod catalogue;
pub mod category;
pub mod error;
pub mod euler;
pub mod format;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod rational;

pub use category::{CatPresentation, Category, CountMatrix};
pub use error::{CategoryError, MatrixError, PolyError};
pub use euler::{build_report, EulerReport, Side, Weighting};
pub use matrix::{LinearSolution, QMatrix};
pub use poly::{Poly, Var};
pub use ratfunc::{Evaluation, RatFunc, SeriesTruncation};
pub use rational::Rational;
