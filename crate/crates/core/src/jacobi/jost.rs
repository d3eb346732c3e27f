//! Jost solutions of `a_{n-1} y_{n-1} + b_n y_n + a_n y_{n+1} = (z + 1/z) y_n`
//! with `a_0 = 1` and `y_n = z^n` beyond the rank window.
//!
//! The functions here return the rescaled solution
//! `ũ_k = (a_k a_{k+1} ... a_q) u_k` (for `k = 0` the product starts at
//! `a_1`). It obeys
//!
//! ```text
//! ũ_{n-1} = (z + 1/z - b_n) ũ_n - a_n^2 ũ_{n+1}
//! ```
//!
//! and so has coefficients in the field generated by the `b_j` and `a_j^2`.

use crate::poly::Polynomial;
use crate::scalar::Scalar;

use super::laurent::LaurentPoly;
use super::FiniteRankJacobi;

#[derive(Clone, Debug, PartialEq)]
pub struct JostSolution<S> {
    pub index: usize,
    /// `ũ_k`.
    pub value: LaurentPoly<S>,
    /// Square of the factor relating `ũ_k` to `u_k`.
    pub rescale_sq: S,
}

/// Jost polynomial `ũ_0 = (a_1 ... a_q) u_0`.
#[derive(Clone, Debug, PartialEq)]
pub struct JostPolynomial<S> {
    pub poly: Polynomial<S>,
    /// `prod a_j^2`; `u = poly / sqrt(rescale_sq)`.
    pub rescale_sq: S,
}

impl<S: Scalar> JostPolynomial<S> {
    /// Unrescaled Jost function `u(z)` in `f64`.
    pub fn eval_unscaled(&self, z: f64) -> f64 {
        self.poly.eval_f64(z) / self.rescale_sq.to_f64().sqrt()
    }
}

/// `1 - a^2`, the one-sided perturbation constant.
pub fn alpha_one_sided<S: Scalar>(a_sq: &S) -> S {
    S::one() - a_sq.clone()
}

fn zhukovsky_minus<S: Scalar>(b: S) -> LaurentPoly<S> {
    LaurentPoly::new(-1, vec![S::one(), -b, S::one()])
}

/// Rescaled Jost solutions `ũ_0, ..., ũ_{q+1}`.
pub fn jost_solutions<S: Scalar>(j: &FiniteRankJacobi<S>) -> Vec<LaurentPoly<S>> {
    let q = j.rank();
    let mut out = vec![LaurentPoly::zero(); q + 2];
    out[q + 1] = LaurentPoly::monomial(S::one(), q as i64 + 1);
    let mut next = LaurentPoly::monomial(S::one(), q as i64 + 2);
    for n in (1..=q + 1).rev() {
        let un = out[n].clone();
        let lhs = &(&zhukovsky_minus(j.b(n)) * &un) - &next.scale(&j.a_sq(n));
        out[n - 1] = lhs;
        next = un;
    }
    out
}

pub fn jost_solution<S: Scalar>(j: &FiniteRankJacobi<S>, k: usize) -> JostSolution<S> {
    let q = j.rank();
    if k > q {
        return JostSolution {
            index: k,
            value: LaurentPoly::monomial(S::one(), k as i64),
            rescale_sq: S::one(),
        };
    }
    let rescale_sq = (k.max(1)..=q).fold(S::one(), |acc, i| acc * j.a_sq(i));
    JostSolution {
        index: k,
        value: jost_solutions(j).swap_remove(k),
        rescale_sq,
    }
}

/// `ũ_0` as an ordinary polynomial. Its constant term is always one.
pub fn jost_polynomial<S: Scalar>(j: &FiniteRankJacobi<S>) -> JostPolynomial<S> {
    let u0 = jost_solution(j, 0);
    let poly = u0
        .value
        .to_polynomial()
        .expect("Jost function has no negative powers");
    assert!(
        poly.coeff(0) == S::one(),
        "Jost polynomial must satisfy u(0) = 1 after rescaling"
    );
    JostPolynomial {
        poly,
        rescale_sq: u0.rescale_sq,
    }
}

/// Unrescaled Jost function `u_0` computed with the `a_j` themselves,
/// dividing by `a_{n-1}` at every step.
pub fn jost_function_unscaled(j: &FiniteRankJacobi<f64>) -> LaurentPoly<f64> {
    let q = j.rank();
    let a = |n: usize| if n == 0 { 1.0 } else { j.a_sq(n).sqrt() };
    let mut cur = LaurentPoly::monomial(1.0, q as i64 + 1);
    let mut next = LaurentPoly::monomial(1.0, q as i64 + 2);
    for n in (1..=q + 1).rev() {
        let prev = (&(&zhukovsky_minus(j.b(n)) * &cur) - &next.scale(&a(n))).scale(&(1.0 / a(n - 1)));
        next = cur;
        cur = prev;
    }
    cur
}
