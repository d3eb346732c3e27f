//! Eventually free Jacobi matrices and their Jost functions.
//!
//! Off-diagonal entries are stored as squares `a_j^2`. Every recursion in
//! this module is arranged to need only `b_j` and `a_j^2`, so matrices such
//! as `J({0}, {sqrt(3), 1, 1, ...})` stay inside the rationals.

pub mod jost;
pub mod laurent;
pub mod perturbation;
pub mod wronskian;

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

pub use jost::{jost_polynomial, jost_solution, JostPolynomial, JostSolution};
pub use laurent::LaurentPoly;
pub use perturbation::perturbation_determinant_direct;
pub use wronskian::{double_star_jacobi, wronskian, Wronskian};

/// One-sided Jacobi matrix `J({b_j}, {a_j})`, `j >= 1`, equal to the free
/// matrix (`b_j = 0`, `a_j = 1`) beyond its rank window.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteRankJacobi<S> {
    b: Vec<S>,
    a_sq: Vec<S>,
}

impl<S: Scalar> FiniteRankJacobi<S> {
    /// `b[j - 1] = b_j`, `a_sq[j - 1] = a_j^2`. Missing entries are free.
    pub fn new(b: Vec<S>, a_sq: Vec<S>) -> Result<Self> {
        if let Some(j) = a_sq.iter().position(|a| !a.is_positive()) {
            return Err(Error::InvalidParameter(format!(
                "off-diagonal a_{}^2 = {} must be positive",
                j + 1,
                a_sq[j]
            )));
        }
        let mut j = Self { b, a_sq };
        j.trim();
        Ok(j)
    }

    pub fn free() -> Self {
        Self {
            b: Vec::new(),
            a_sq: Vec::new(),
        }
    }

    fn trim(&mut self) {
        while self.b.last().is_some_and(|x| x.is_zero()) {
            self.b.pop();
        }
        while self.a_sq.last().is_some_and(|x| x.is_one()) {
            self.a_sq.pop();
        }
    }

    /// Smallest `q` with `b_j = 0` and `a_j = 1` for every `j > q`.
    pub fn rank(&self) -> usize {
        self.b.len().max(self.a_sq.len())
    }

    pub fn is_free(&self) -> bool {
        self.rank() == 0
    }

    /// `b_j` for `j >= 1`.
    pub fn b(&self, j: usize) -> S {
        assert!(j >= 1, "Jacobi indices start at 1");
        self.b.get(j - 1).cloned().unwrap_or_else(S::zero)
    }

    /// `a_j^2` for `j >= 1`.
    pub fn a_sq(&self, j: usize) -> S {
        assert!(j >= 1, "Jacobi indices start at 1");
        self.a_sq.get(j - 1).cloned().unwrap_or_else(S::one)
    }

    /// `b_1..b_n`, padded with zeros.
    pub fn diagonal(&self, n: usize) -> Vec<S> {
        (1..=n).map(|j| self.b(j)).collect()
    }

    /// `a_1^2..a_n^2`, padded with ones.
    pub fn off_diagonal_sq(&self, n: usize) -> Vec<S> {
        (1..=n).map(|j| self.a_sq(j)).collect()
    }

    /// `prod_{j >= 1} a_j^2`.
    pub fn product_a_sq(&self) -> S {
        self.a_sq.iter().fold(S::one(), |acc, a| acc * a.clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> FiniteRankJacobi<T> {
        let mut j = FiniteRankJacobi {
            b: self.b.iter().map(&f).collect(),
            a_sq: self.a_sq.iter().map(&f).collect(),
        };
        j.trim();
        j
    }

    pub fn to_f64(&self) -> FiniteRankJacobi<f64> {
        self.map(|x| x.to_f64())
    }

    /// Leading `n x n` section as (diagonal, off-diagonal) in `f64`.
    pub fn section(&self, n: usize) -> (Vec<f64>, Vec<f64>) {
        let d = (1..=n).map(|j| self.b(j).to_f64()).collect();
        let e = (1..n).map(|j| self.a_sq(j).to_f64().sqrt()).collect();
        (d, e)
    }
}

impl FiniteRankJacobi<Rational> {
    pub fn from_i64(b: &[i64], a_sq: &[i64]) -> Result<Self> {
        Self::new(
            b.iter().map(|&x| crate::scalar::int(x)).collect(),
            a_sq.iter().map(|&x| crate::scalar::int(x)).collect(),
        )
    }
}

/// Two-sided Jacobi matrix on `Z`, free outside the window `[low, high]`:
/// `b_n` may be nonzero for `low <= n <= high` and `a_n` (joining `n` and
/// `n + 1`) may differ from one for `low <= n < high`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoSidedJacobi<S> {
    low: i64,
    high: i64,
    b: Vec<S>,
    a_sq: Vec<S>,
}

impl<S: Scalar> TwoSidedJacobi<S> {
    /// `b[k] = b_{low + k}` for `k <= high - low`, `a_sq[k] = a_{low + k}^2`
    /// for `k < high - low`.
    pub fn new(low: i64, high: i64, b: Vec<S>, a_sq: Vec<S>) -> Result<Self> {
        if low >= high {
            return Err(Error::InvalidParameter(format!(
                "two-sided window [{low}, {high}] is empty"
            )));
        }
        let width = (high - low) as usize;
        if b.len() != width + 1 || a_sq.len() != width {
            return Err(Error::Dimension(format!(
                "window [{low}, {high}] needs {} diagonal and {width} off-diagonal entries",
                width + 1
            )));
        }
        if let Some(k) = a_sq.iter().position(|a| !a.is_positive()) {
            return Err(Error::InvalidParameter(format!(
                "off-diagonal a_{}^2 must be positive",
                low + k as i64
            )));
        }
        Ok(Self { low, high, b, a_sq })
    }

    /// Free except for the listed off-diagonal squares `(n, a_n^2)`.
    pub fn with_off_diagonals(entries: &[(i64, S)]) -> Result<Self> {
        let low = entries.iter().map(|e| e.0).min().unwrap_or(0);
        let high = entries.iter().map(|e| e.0 + 1).max().unwrap_or(1);
        let width = (high - low) as usize;
        let mut a_sq = vec![S::one(); width];
        for (n, a) in entries {
            a_sq[(n - low) as usize] = a.clone();
        }
        Self::new(low, high, vec![S::zero(); width + 1], a_sq)
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.high
    }

    pub fn b(&self, n: i64) -> S {
        if n < self.low || n > self.high {
            return S::zero();
        }
        self.b[(n - self.low) as usize].clone()
    }

    pub fn a_sq(&self, n: i64) -> S {
        if n < self.low || n >= self.high {
            return S::one();
        }
        self.a_sq[(n - self.low) as usize].clone()
    }

    pub fn product_a_sq(&self) -> S {
        self.a_sq.iter().fold(S::one(), |acc, a| acc * a.clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> TwoSidedJacobi<T> {
        TwoSidedJacobi {
            low: self.low,
            high: self.high,
            b: self.b.iter().map(&f).collect(),
            a_sq: self.a_sq.iter().map(&f).collect(),
        }
    }

    pub fn to_f64(&self) -> TwoSidedJacobi<f64> {
        self.map(|x| x.to_f64())
    }

    /// Section on indices `low - pad ..= high + pad` as (diagonal,
    /// off-diagonal) in `f64`.
    pub fn section(&self, pad: usize) -> (Vec<f64>, Vec<f64>) {
        let from = self.low - pad as i64;
        let to = self.high + pad as i64;
        let d = (from..=to).map(|n| self.b(n).to_f64()).collect();
        let e = (from..to).map(|n| self.a_sq(n).to_f64().sqrt()).collect();
        (d, e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn rank_ignores_free_padding() {
        let j = FiniteRankJacobi::new(vec![int(0), int(2), int(0)], vec![int(3), int(1)]).unwrap();
        assert_eq!(j.rank(), 2);
        assert_eq!(j.b(2), int(2));
        assert_eq!(j.b(7), int(0));
        assert_eq!(j.a_sq(1), int(3));
        assert_eq!(j.a_sq(2), int(1));
        assert!(FiniteRankJacobi::<Rational>::free().is_free());
    }

    #[test]
    fn rejects_nonpositive_off_diagonal() {
        assert!(FiniteRankJacobi::new(vec![], vec![int(1), int(0)]).is_err());
        assert!(TwoSidedJacobi::new(0, 1, vec![int(0), int(0)], vec![frac(-1, 2)]).is_err());
        assert!(TwoSidedJacobi::new(1, 1, vec![int(0)], vec![]).is_err());
    }

    #[test]
    fn two_sided_defaults_outside_window() {
        let j = TwoSidedJacobi::with_off_diagonals(&[(-1, int(3)), (1, int(2))]).unwrap();
        assert_eq!((j.low(), j.high()), (-1, 2));
        assert_eq!(j.a_sq(-1), int(3));
        assert_eq!(j.a_sq(0), int(1));
        assert_eq!(j.a_sq(1), int(2));
        assert_eq!(j.a_sq(5), int(1));
        assert_eq!(j.product_a_sq(), int(6));
        let (d, e) = j.section(2);
        assert_eq!(d.len(), 8);
        assert_eq!(e.len(), 7);
    }
}
