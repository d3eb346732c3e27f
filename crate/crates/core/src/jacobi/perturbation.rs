//! Perturbation determinant `det(I + (J - J_0) R(z + 1/z, J_0))` computed
//! as an ordinary determinant over polynomials in `z`.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

use super::FiniteRankJacobi;

/// Largest rank accepted by [`perturbation_determinant_direct`].
pub const MAX_DIRECT_RANK: usize = 6;

/// Entry `r_ij(z)` of the free resolvent at `z + 1/z`, `i, j >= 1`:
/// `-z^(|i-j|+1) (1 + z^2 + ... + z^(2 min(i,j) - 2))`.
pub fn free_resolvent_entry<S: Scalar>(i: usize, j: usize) -> Polynomial<S> {
    let m = i.min(j);
    let shift = i.abs_diff(j) + 1;
    let mut c = vec![S::zero(); shift + 2 * m - 1];
    for k in 0..m {
        c[shift + 2 * k] = -S::one();
    }
    Polynomial::new(c)
}

/// The determinant is taken after conjugating `J` by the diagonal matrix
/// `diag(a_k a_{k+1} ...)`, which turns the perturbation into
/// `b_j` on the diagonal, `a_j^2 - 1` above it and zero below. The
/// determinant is unchanged and the entries stay in the field of the
/// `b_j, a_j^2`.
pub fn perturbation_determinant_direct<S: Scalar>(j: &FiniteRankJacobi<S>) -> Result<Polynomial<S>> {
    let q = j.rank();
    if q > MAX_DIRECT_RANK {
        return Err(Error::WindowTooLarge {
            rank: q,
            max: MAX_DIRECT_RANK,
        });
    }
    if q == 0 {
        return Ok(Polynomial::constant(S::one()));
    }
    let m = q + 1;
    // (V R)_{ik} = b_i r_ik + (a_i^2 - 1) r_{i+1,k}
    let mut rows: Vec<Vec<Polynomial<S>>> = Vec::with_capacity(m);
    for i in 1..=m {
        let upper = j.a_sq(i) - S::one();
        let row = (1..=m)
            .map(|k| {
                let mut e = free_resolvent_entry::<S>(i, k).scale(&j.b(i));
                if !upper.is_zero() {
                    e = &e + &free_resolvent_entry::<S>(i + 1, k).scale(&upper);
                }
                if i == k {
                    e = &e + &Polynomial::constant(S::one());
                }
                e
            })
            .collect();
        rows.push(row);
    }
    Ok(bareiss_determinant(rows))
}

/// Fraction-free elimination; every division is exact in `S[z]`.
fn bareiss_determinant<S: Scalar>(mut m: Vec<Vec<Polynomial<S>>>) -> Polynomial<S> {
    let n = m.len();
    let mut sign = S::one();
    let mut prev = Polynomial::constant(S::one());
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Polynomial::zero(),
            }
        }
        for i in k + 1..n {
            for c in k + 1..n {
                let num = &(&m[i][c] * &m[k][k]) - &(&m[i][k] * &m[k][c]);
                m[i][c] = num.div_rem(&prev).0;
            }
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scale(&sign)
}
