//! Eigenvalues of real symmetric matrices.
//!
//! Small dense matrices use cyclic Jacobi rotations. Narrow-banded matrices
//! are brought to tridiagonal form by Givens rotations that chase bulges
//! down the band, wide ones by Householder reflections, and tridiagonal
//! spectra come from Sturm-count bisection.

use crate::matrix::SymmetricMatrix;

/// Orders up to this size go through the rotation method.
pub const DENSE_LIMIT: usize = 40;
/// Bandwidths above this use Householder reduction.
pub const NARROW_BAND: usize = 16;

const MAX_SWEEPS: usize = 200;

/// Sorted eigenvalues.
pub fn eig_symmetric(m: &SymmetricMatrix<f64>) -> Vec<f64> {
    let n = m.order();
    if n == 0 {
        return Vec::new();
    }
    let band = m.bandwidth();
    if band <= 1 {
        let d: Vec<f64> = (0..n).map(|i| *m.get(i, i)).collect();
        let e: Vec<f64> = (1..n).map(|i| *m.get(i - 1, i)).collect();
        return tridiagonal_eigenvalues(&d, &e);
    }
    if n <= DENSE_LIMIT {
        return rotation_eigenvalues(m);
    }
    let (d, e) = if band > NARROW_BAND {
        householder_tridiagonal(m)
    } else {
        band_to_tridiagonal(m, band)
    };
    tridiagonal_eigenvalues(&d, &e)
}

/// Householder reduction of a dense symmetric matrix to tridiagonal form.
/// Returns (diagonal, off-diagonal).
pub fn householder_tridiagonal(m: &SymmetricMatrix<f64>) -> (Vec<f64>, Vec<f64>) {
    let n = m.order();
    let mut a: Vec<f64> = m.rows().into_iter().flatten().collect();
    let mut e = vec![0.0; n.saturating_sub(1)];
    let mut v = vec![0.0; n];
    let mut w = vec![0.0; n];
    for k in 0..n.saturating_sub(2) {
        let norm = (k + 1..n).map(|i| a[i * n + k].powi(2)).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = a[(k + 1) * n + k];
        let alpha = if x0 > 0.0 { -norm } else { norm };
        for i in k + 1..n {
            v[i] = a[i * n + k];
        }
        v[k + 1] -= alpha;
        let vv: f64 = (k + 1..n).map(|i| v[i] * v[i]).sum();
        if vv == 0.0 {
            e[k] = x0;
            continue;
        }
        // w = p - (v.p / v.v) v with p = 2 A v / v.v
        for i in k + 1..n {
            let row = &a[i * n..(i + 1) * n];
            w[i] = 2.0 * (k + 1..n).map(|j| row[j] * v[j]).sum::<f64>() / vv;
        }
        let kk = (k + 1..n).map(|i| v[i] * w[i]).sum::<f64>() / vv;
        for i in k + 1..n {
            w[i] -= kk * v[i];
        }
        for i in k + 1..n {
            let (vi, wi) = (v[i], w[i]);
            let row = &mut a[i * n..(i + 1) * n];
            for j in k + 1..n {
                row[j] -= vi * w[j] + wi * v[j];
            }
        }
        e[k] = alpha;
    }
    if n >= 2 {
        e[n - 2] = a[(n - 1) * n + n - 2];
    }
    let d = (0..n).map(|i| a[i * n + i]).collect();
    (d, e)
}

/// Cyclic Jacobi method.
pub fn rotation_eigenvalues(m: &SymmetricMatrix<f64>) -> Vec<f64> {
    let n = m.order();
    let mut a = m.rows();
    let total: f64 = a.iter().flatten().map(|x| x * x).sum();
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off <= 1e-30 * total || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Reduce a symmetric matrix of the given bandwidth to tridiagonal form by
/// an orthogonal similarity. Returns (diagonal, off-diagonal).
pub fn band_to_tridiagonal(m: &SymmetricMatrix<f64>, band: usize) -> (Vec<f64>, Vec<f64>) {
    let n = m.order();
    let mut a: Vec<f64> = m.rows().into_iter().flatten().collect();
    let b = band.max(1);
    // rotate rows/columns p < q = p + 1 so that a[q][col] vanishes
    let rotate = |a: &mut Vec<f64>, p: usize, q: usize, col: usize| {
        let x = a[p * n + col];
        let y = a[q * n + col];
        if y == 0.0 {
            return;
        }
        let h = x.hypot(y);
        let (c, s) = (x / h, y / h);
        let lo = p.saturating_sub(b + 1);
        let hi = (q + b + 2).min(n);
        for k in lo..hi {
            let (u, v) = (a[p * n + k], a[q * n + k]);
            a[p * n + k] = c * u + s * v;
            a[q * n + k] = -s * u + c * v;
        }
        for k in lo..hi {
            let (u, v) = (a[k * n + p], a[k * n + q]);
            a[k * n + p] = c * u + s * v;
            a[k * n + q] = -s * u + c * v;
        }
        a[q * n + col] = 0.0;
        a[col * n + q] = 0.0;
    };
    if b > 1 {
        for k in 0..n.saturating_sub(2) {
            for l in (k + 2..=(k + b).min(n - 1)).rev() {
                rotate(&mut a, l - 1, l, k);
                let mut r = l;
                while r + b < n {
                    rotate(&mut a, r + b - 1, r + b, r - 1);
                    r += b;
                }
            }
        }
    }
    let d = (0..n).map(|i| a[i * n + i]).collect();
    let e = (1..n).map(|i| a[(i - 1) * n + i]).collect();
    (d, e)
}

/// Number of eigenvalues of the tridiagonal matrix strictly below `x`.
pub fn sturm_count(d: &[f64], e: &[f64], x: f64) -> usize {
    let scale = d
        .iter()
        .chain(e)
        .map(|v| v.abs())
        .fold(x.abs(), f64::max)
        .max(f64::MIN_POSITIVE);
    let pivmin = f64::EPSILON * f64::EPSILON * scale;
    let mut count = 0;
    let mut q = 1.0;
    for i in 0..d.len() {
        let coupling = if i == 0 { 0.0 } else { e[i - 1] * e[i - 1] / q };
        q = d[i] - x - coupling;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Sorted eigenvalues of the symmetric tridiagonal matrix with diagonal `d`
/// and off-diagonal `e`.
pub fn tridiagonal_eigenvalues(d: &[f64], e: &[f64]) -> Vec<f64> {
    let n = d.len();
    assert_eq!(e.len(), n.saturating_sub(1), "off-diagonal length");
    if n == 0 {
        return Vec::new();
    }
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = if i > 0 { e[i - 1].abs() } else { 0.0 } + if i + 1 < n { e[i].abs() } else { 0.0 };
        lo = lo.min(d[i] - r);
        hi = hi.max(d[i] + r);
    }
    let pad = 1e-12 * (hi - lo).abs().max(1.0);
    lo -= pad;
    hi += pad;
    let mut out = Vec::with_capacity(n);
    let mut stack = vec![(lo, hi, 0usize, n)];
    while let Some((a, b, ca, cb)) = stack.pop() {
        if ca == cb {
            continue;
        }
        let mid = 0.5 * (a + b);
        let tol = 2.0 * f64::EPSILON * a.abs().max(b.abs()) + f64::MIN_POSITIVE;
        if b - a <= tol || mid <= a || mid >= b {
            let value = if a <= 0.0 && b >= 0.0 { 0.0 } else { mid };
            out.extend(std::iter::repeat_n(value, cb - ca));
            continue;
        }
        let cm = sturm_count(d, e, mid);
        stack.push((a, mid, ca, cm));
        stack.push((mid, b, cm, cb));
    }
    out.sort_by(f64::total_cmp);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path};
    use std::f64::consts::PI;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < tol)
    }

    #[test]
    fn path_spectrum() {
        let m = path(5).unwrap().adjacency::<f64>();
        let expect = [-(3f64.sqrt()), -1.0, 0.0, 1.0, 3f64.sqrt()];
        assert!(close(&eig_symmetric(&m), &expect, 1e-13));
        assert!(close(&rotation_eigenvalues(&m), &expect, 1e-13));
    }

    #[test]
    fn zero_matrix() {
        let m = SymmetricMatrix::<f64>::zeros(3);
        let ev = eig_symmetric(&m);
        assert_eq!(ev.len(), 3);
        assert_eq!(ev, vec![0.0; 3]);
    }

    #[test]
    fn cycle_spectrum_three_ways() {
        let m = cycle(5).unwrap().adjacency::<f64>();
        let mut expect: Vec<f64> = (0..5).map(|k| 2.0 * (2.0 * PI * k as f64 / 5.0).cos()).collect();
        expect.sort_by(f64::total_cmp);
        assert!(close(&rotation_eigenvalues(&m), &expect, 1e-13));
        let (d, e) = band_to_tridiagonal(&m, m.bandwidth());
        assert!(close(&tridiagonal_eigenvalues(&d, &e), &expect, 1e-13));
    }

    #[test]
    fn householder_matches_rotations() {
        let n = 50;
        let mut m = SymmetricMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, (((i * 31 + j * 17) % 23) as f64 - 11.0) / 7.0);
            }
        }
        let (d, e) = householder_tridiagonal(&m);
        assert!(close(&tridiagonal_eigenvalues(&d, &e), &rotation_eigenvalues(&m), 1e-11));
        assert!(close(&eig_symmetric(&m), &rotation_eigenvalues(&m), 1e-11));
    }

    #[test]
    fn band_reduction_on_a_large_cycle() {
        let n = 60;
        let m = cycle(n).unwrap().adjacency::<f64>();
        let mut expect: Vec<f64> =
            (0..n).map(|k| 2.0 * (2.0 * PI * k as f64 / n as f64).cos()).collect();
        expect.sort_by(f64::total_cmp);
        assert!(close(&eig_symmetric(&m), &expect, 1e-12));
    }

    #[test]
    fn sturm_count_of_free_section() {
        let d = vec![0.0; 4];
        let e = vec![1.0; 3];
        // eigenvalues 2cos(pi j/5)
        assert_eq!(sturm_count(&d, &e, 0.0), 2);
        assert_eq!(sturm_count(&d, &e, 1.5), 3);
        assert_eq!(sturm_count(&d, &e, 2.0), 4);
    }
}
