use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Finite Laurent polynomial `sum_k c_k z^(low + k)`.
///
/// Zero coefficients at either end are trimmed, so a nonzero value always
/// has nonzero lowest and highest coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<S> {
    low: i64,
    coeffs: Vec<S>,
}

impl<S: Scalar> LaurentPoly<S> {
    pub fn new(low: i64, coeffs: Vec<S>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        let Some(first) = lead else {
            return Self::zero();
        };
        let last = coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        Self {
            low: low + first as i64,
            coeffs: coeffs[first..=last].to_vec(),
        }
    }

    pub fn zero() -> Self {
        Self {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(S::one(), 0)
    }

    pub fn monomial(c: S, exponent: i64) -> Self {
        Self::new(exponent, vec![c])
    }

    pub fn from_polynomial(p: &Polynomial<S>) -> Self {
        Self::new(0, p.coeffs().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero value).
    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: i64) -> S {
        let k = exponent - self.low;
        if k < 0 {
            return S::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_else(S::zero)
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.low, self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LaurentPoly<T> {
        LaurentPoly::new(self.low, self.coeffs.iter().map(f).collect())
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        let p: f64 = self.coeffs.iter().rev().fold(0.0, |acc, c| acc * z + c.to_f64());
        p * z.powi(self.low as i32)
    }

    /// The ordinary polynomial, if no negative exponent occurs.
    pub fn to_polynomial(&self) -> Option<Polynomial<S>> {
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        if self.low < 0 {
            return None;
        }
        let mut c = vec![S::zero(); self.low as usize];
        c.extend(self.coeffs.iter().cloned());
        Some(Polynomial::new(c))
    }

    /// `z^(-low) * self`, an ordinary polynomial with nonzero constant term.
    pub fn normalized_polynomial(&self) -> Polynomial<S> {
        Polynomial::new(self.coeffs.clone())
    }

    fn combine(&self, rhs: &Self, f: impl Fn(S, S) -> S) -> Self {
        if self.is_zero() && rhs.is_zero() {
            return Self::zero();
        }
        let low = match (self.is_zero(), rhs.is_zero()) {
            (true, _) => rhs.low,
            (_, true) => self.low,
            _ => self.low.min(rhs.low),
        };
        let high = match (self.is_zero(), rhs.is_zero()) {
            (true, _) => rhs.high(),
            (_, true) => self.high(),
            _ => self.high().max(rhs.high()),
        };
        Self::new(
            low,
            (low..=high).map(|e| f(self.coeff(e), rhs.coeff(e))).collect(),
        )
    }
}

impl<S: Scalar> Add for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn add(self, rhs: Self) -> LaurentPoly<S> {
        self.combine(rhs, |a, b| a + b)
    }
}

impl<S: Scalar> Sub for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn sub(self, rhs: Self) -> LaurentPoly<S> {
        self.combine(rhs, |a, b| a - b)
    }
}

impl<S: Scalar> Mul for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn mul(self, rhs: Self) -> LaurentPoly<S> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        LaurentPoly::new(self.low + rhs.low, out)
    }
}

impl<S: Scalar> Neg for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn neg(self) -> LaurentPoly<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> fmt::Display for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})z^{}", self.low + k as i64)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    type L = LaurentPoly<Rational>;

    #[test]
    fn trims_both_ends() {
        let p = L::new(-2, vec![int(0), int(1), int(0), int(3), int(0)]);
        assert_eq!(p.low(), -1);
        assert_eq!(p.high(), 1);
        assert_eq!(p.coeff(1), int(3));
        assert_eq!(p.coeff(5), int(0));
        assert!(L::new(4, vec![int(0)]).is_zero());
    }

    #[test]
    fn zhukovsky_square() {
        let lam = L::new(-1, vec![int(1), int(0), int(1)]);
        let sq = &lam * &lam;
        assert_eq!(sq, L::new(-2, vec![int(1), int(0), int(2), int(0), int(1)]));
        let diff = &sq - &L::monomial(int(2), 0);
        assert_eq!(diff.coeff(0), int(0));
        assert_eq!(diff.coeffs().len(), 5);
    }

    #[test]
    fn polynomial_view() {
        let p = L::new(1, vec![int(2), int(-1)]);
        assert_eq!(p.to_polynomial().unwrap(), Polynomial::from_i64(&[0, 2, -1]));
        assert!(L::monomial(int(1), -1).to_polynomial().is_none());
        assert_eq!(L::monomial(int(1), -1).shift(1), L::one());
        assert!((p.eval_f64(2.0) - 0.0).abs() < 1e-15);
    }
}
