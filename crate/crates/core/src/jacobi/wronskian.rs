//! Wronskian of the two Jost solutions of a two-sided Jacobi matrix.
//!
//! `u⁺_n = z^n` for `n >= high`, `u⁻_n = z^(-n)` for `n <= low`, and
//! `w = a_n (u⁺_n u⁻_{n+1} - u⁺_{n+1} u⁻_n)` does not depend on `n`.
//! With `Π = a_low ... a_{high-1}` the rescaled solutions
//! `ũ⁺_n = (a_n ... a_{high-1}) u⁺_n` and `ũ⁻_n = (a_low ... a_{n-1}) u⁻_n`
//! satisfy recursions in `b_n, a_n^2` only, and
//! `Π w = ũ⁺_n ũ⁻_{n+1} - a_n^2 ũ⁺_{n+1} ũ⁻_n`.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::scalar::{Rational, Scalar};

use super::laurent::LaurentPoly;
use super::TwoSidedJacobi;

#[derive(Clone, Debug, PartialEq)]
pub struct Wronskian<S> {
    /// `Π w(z)`.
    pub value: LaurentPoly<S>,
    /// `Π^2`.
    pub rescale_sq: S,
}

/// `1/a - a`, the two-sided perturbation constant.
pub fn alpha_two_sided(a: f64) -> f64 {
    1.0 / a - a
}

fn zhukovsky_minus<S: Scalar>(b: S) -> LaurentPoly<S> {
    LaurentPoly::new(-1, vec![S::one(), -b, S::one()])
}

/// `ũ⁺_n` for `low - 1 <= n <= high + 1`.
pub fn jost_plus<S: Scalar>(j: &TwoSidedJacobi<S>) -> BTreeMap<i64, LaurentPoly<S>> {
    let (lo, hi) = (j.low(), j.high());
    let mut u = BTreeMap::new();
    u.insert(hi + 1, LaurentPoly::monomial(S::one(), hi + 1));
    u.insert(hi, LaurentPoly::monomial(S::one(), hi));
    for n in (lo..=hi).rev() {
        let next = &(&zhukovsky_minus(j.b(n)) * &u[&n]) - &u[&(n + 1)].scale(&j.a_sq(n));
        u.insert(n - 1, next);
    }
    u
}

/// `ũ⁻_n` for `low - 1 <= n <= high + 1`.
pub fn jost_minus<S: Scalar>(j: &TwoSidedJacobi<S>) -> BTreeMap<i64, LaurentPoly<S>> {
    let (lo, hi) = (j.low(), j.high());
    let mut u = BTreeMap::new();
    u.insert(lo - 1, LaurentPoly::monomial(S::one(), 1 - lo));
    u.insert(lo, LaurentPoly::monomial(S::one(), -lo));
    for n in lo..=hi {
        let next = &(&zhukovsky_minus(j.b(n)) * &u[&n]) - &u[&(n - 1)].scale(&j.a_sq(n - 1));
        u.insert(n + 1, next);
    }
    u
}

fn wronskian_at<S: Scalar>(
    j: &TwoSidedJacobi<S>,
    plus: &BTreeMap<i64, LaurentPoly<S>>,
    minus: &BTreeMap<i64, LaurentPoly<S>>,
    n: i64,
) -> LaurentPoly<S> {
    let first = &plus[&n] * &minus[&(n + 1)];
    let second = (&plus[&(n + 1)] * &minus[&n]).scale(&j.a_sq(n));
    &first - &second
}

/// Rescaled Wronskian. The value is computed at `n = low - 1` and at
/// `n = high` and the two are checked to agree.
pub fn wronskian<S: Scalar>(j: &TwoSidedJacobi<S>) -> Wronskian<S> {
    let plus = jost_plus(j);
    let minus = jost_minus(j);
    let left = wronskian_at(j, &plus, &minus, j.low() - 1);
    let right = wronskian_at(j, &plus, &minus, j.high());
    if S::EXACT {
        assert_eq!(left, right, "Wronskian depends on the index");
    } else {
        let scale = crate::scalar::max_abs_f64(left.coeffs()).max(1.0);
        let lo = left.low().min(right.low());
        let hi = left.high().max(right.high());
        let gap = (lo..=hi)
            .map(|e| (left.coeff(e) - right.coeff(e)).to_f64().abs())
            .fold(0.0, f64::max);
        assert!(gap <= 1e-9 * scale, "Wronskian depends on the index");
    }
    Wronskian {
        value: left,
        rescale_sq: j.product_a_sq(),
    }
}

/// Two-sided matrix of two stars joined through their centers:
/// `a_1 = sqrt(p)`, `a_{-1} = sqrt(q)`, `a_0 = d`, free elsewhere.
pub fn double_star_jacobi(p: &Rational, q: &Rational, d: &Rational) -> Result<TwoSidedJacobi<Rational>> {
    TwoSidedJacobi::with_off_diagonals(&[(-1, q.clone()), (0, d * d), (1, p.clone())])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn free_two_sided() {
        let j = TwoSidedJacobi::with_off_diagonals(&[(0, int(1))]).unwrap();
        let w = wronskian(&j);
        assert_eq!(w.value, LaurentPoly::new(-1, vec![int(1), int(0), int(-1)]));
    }

    #[test]
    fn single_modified_bond() {
        let j = TwoSidedJacobi::with_off_diagonals(&[(0, int(4))]).unwrap();
        let w = wronskian(&j);
        // Π w = 1/z - a_0^2 z
        assert_eq!(w.value, LaurentPoly::new(-1, vec![int(1), int(0), int(-4)]));
        assert_eq!(w.rescale_sq, int(4));
    }

    #[test]
    fn diagonal_entries_enter_both_recursions() {
        let j = TwoSidedJacobi::new(-1, 1, vec![int(1), frac(-1, 2), int(2)], vec![int(3), frac(1, 4)])
            .unwrap();
        let w = wronskian(&j);
        assert!(!w.value.is_zero());
        assert_eq!(w.rescale_sq, frac(3, 4));
    }
}
