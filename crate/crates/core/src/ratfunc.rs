//! Normalized rational functions over the rationals and their power series.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::PolyError;
use crate::poly::{Poly, Var};
use crate::rational::Rational;

/// `num / den` with `den` monic and `gcd(num, den) = 1`. The zero function is
/// `0 / 1`. Because the form is canonical, `==` is equality of functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

/// Value of a rational function at a point: finite, or a pole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluation {
    Value(Rational),
    Pole,
}

impl Evaluation {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            Evaluation::Value(v) => Some(v),
            Evaluation::Pole => None,
        }
    }

    pub fn into_value(self) -> Option<Rational> {
        match self {
            Evaluation::Value(v) => Some(v),
            Evaluation::Pole => None,
        }
    }
}

/// Power series coefficients `c_0 .. c_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTruncation {
    pub coefficients: Vec<Rational>,
    pub order: usize,
}

impl SeriesTruncation {
    /// True when every coefficient is a nonnegative integer, as simplex counts are.
    pub fn is_counting(&self) -> bool {
        self.coefficients
            .iter()
            .all(|c| c.is_integer() && *c >= Rational::zero())
    }
}

impl fmt::Display for SeriesTruncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::rational::render_vec(&self.coefficients))
    }
}

impl RatFunc {
    /// Builds `p / q` in lowest terms with a monic denominator.
    pub fn new(p: Poly, q: Poly) -> Result<Self, PolyError> {
        if q.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        if p.var() != q.var() {
            return Err(PolyError::VariableMismatch { expected: q.var(), found: p.var() });
        }
        let var = q.var();
        if p.is_zero() {
            return Ok(RatFunc { num: p, den: Poly::one(var) });
        }
        let g = p.gcd(&q);
        let (p, _) = p.div_rem(&g)?;
        let (q, _) = q.div_rem(&g)?;
        let lc = Rational::one() / q.leading().expect("nonzero denominator");
        Ok(RatFunc { num: p.scale(&lc), den: q.scale(&lc) })
    }

    pub fn from_poly(p: Poly) -> Self {
        let var = p.var();
        RatFunc { num: p, den: Poly::one(var) }
    }

    pub fn zero(var: Var) -> Self {
        Self::from_poly(Poly::zero(var))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.den.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Since numerator and denominator are coprime, a vanishing denominator
    /// is a genuine pole.
    pub fn eval(&self, x: &Rational) -> Evaluation {
        let q = self.den.eval(x);
        if q.is_zero() {
            Evaluation::Pole
        } else {
            Evaluation::Value(self.num.eval(x) / q)
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> RatFunc {
        RatFunc::new(self.num.mul(p), self.den.clone()).expect("denominator stays nonzero")
    }

    /// Coefficients `c_0 .. c_N` of the expansion at 0, with
    /// `den * series = num (mod x^(N+1))`.
    pub fn series(&self, order: usize) -> Result<SeriesTruncation, PolyError> {
        let q0 = self.den.coeff(0);
        if q0.is_zero() {
            return Err(PolyError::PoleAtZero);
        }
        let q = self.den.coeffs();
        let mut c: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.num.coeff(n);
            for k in 1..q.len().min(n + 1) {
                acc -= &q[k] * &c[n - k];
            }
            c.push(acc / &q0);
        }
        Ok(SeriesTruncation { coefficients: c, order })
    }

    /// Given `g(u)`, returns `f(t) = (1 - u) g(u)` with `u = 1 + 1/t`.
    ///
    /// With `g = p/q` and `D = max(deg p, deg q)`, clearing `t^D` gives
    /// `P(t) = sum_k p_k (t + 1)^k t^(D - k)` and likewise `Q(t)`, while
    /// `1 - u = -1/t`; hence `f = -P / (t Q)`.
    pub fn substitute_mobius(&self) -> Result<RatFunc, PolyError> {
        if self.var() != Var::U {
            return Err(PolyError::VariableMismatch { expected: Var::U, found: self.var() });
        }
        if self.is_zero() {
            return Ok(RatFunc::zero(Var::T));
        }
        let d = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        let t = Poly::x(Var::T);
        let t_plus_1 = Poly::from_ints(&[1, 1], Var::T);
        let clear = |p: &Poly| -> Poly {
            p.coeffs()
                .iter()
                .enumerate()
                .fold(Poly::zero(Var::T), |acc, (k, c)| {
                    let term = t_plus_1.pow(k as u32).mul(&t.pow((d - k) as u32));
                    acc.add(&term.scale(c))
                })
        };
        let p = clear(&self.num).neg();
        let q = t.mul(&clear(&self.den));
        RatFunc::new(p, q)
    }
}

impl fmt::Display for RatFunc {
    /// `num / den`, each as an ascending coefficient list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.num, self.den)
    }
}
