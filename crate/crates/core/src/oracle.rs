//! Finite-section checks of predicted spectra.
//!
//! Every infinite branch is cut after `N` vertices and the resulting finite
//! matrix is diagonalized. Discrete eigenvalues outside the band show up as
//! isolated eigenvalues converging geometrically in `N`; eigenvalues of the
//! finite block inside the band are decoupled from the tails and appear at
//! every size. Nothing here touches Jost polynomials.

use serde::{Deserialize, Serialize};

use crate::graph::{truncate, TailedGraph, WeightedGraph};
use crate::jacobi::{FiniteRankJacobi, TwoSidedJacobi};
use crate::matrix::SymmetricMatrix;
use crate::spectra::eigen::{eig_symmetric, tridiagonal_eigenvalues};
use crate::spectra::Spectrum;

/// Band inflation excluding finite-size artifacts near the edges.
pub const DEFAULT_DELTA: f64 = 0.05;
pub const DEFAULT_TOL: f64 = 1e-8;
/// Second size is `N + PERSISTENCE_STEP`.
pub const PERSISTENCE_STEP: usize = 17;
/// Outliers at the two sizes closer than this count as the same eigenvalue.
const PERSISTENCE_TOL: f64 = 1e-6;

/// An infinite operator that can be cut to finite size.
pub trait Truncation {
    /// Sorted eigenvalues of the section keeping `depth` vertices on every
    /// infinite branch.
    fn truncated_eigenvalues(&self, depth: usize) -> Vec<f64>;
}

impl Truncation for TailedGraph {
    fn truncated_eigenvalues(&self, depth: usize) -> Vec<f64> {
        eig_symmetric(&truncate::<f64>(self, depth))
    }
}

/// `sqrt(scale_sq) J` for a one-sided Jacobi matrix.
#[derive(Clone, Debug)]
pub struct ScaledJacobi {
    pub jacobi: FiniteRankJacobi<f64>,
    pub scale_sq: f64,
}

impl Truncation for ScaledJacobi {
    fn truncated_eigenvalues(&self, depth: usize) -> Vec<f64> {
        let (d, e) = self.jacobi.section(self.jacobi.rank() + depth);
        let s = self.scale_sq.sqrt();
        tridiagonal_eigenvalues(&d, &e).into_iter().map(|x| s * x).collect()
    }
}

/// `sqrt(scale_sq) J` for a two-sided Jacobi matrix, padded by `depth` on
/// both sides of the window.
#[derive(Clone, Debug)]
pub struct ScaledTwoSided {
    pub jacobi: TwoSidedJacobi<f64>,
    pub scale_sq: f64,
}

impl Truncation for ScaledTwoSided {
    fn truncated_eigenvalues(&self, depth: usize) -> Vec<f64> {
        let (d, e) = self.jacobi.section(depth);
        let s = self.scale_sq.sqrt();
        tridiagonal_eigenvalues(&d, &e).into_iter().map(|x| s * x).collect()
    }
}

/// Appends a rooted tree where every vertex has `d` children, `depth`
/// levels below the root. Returns the root index.
fn grow_tree(edges: &mut Vec<(usize, usize)>, next: &mut usize, d: usize, depth: usize) -> usize {
    let root = *next;
    *next += 1;
    let mut level = vec![root];
    for _ in 0..depth {
        let mut children = Vec::with_capacity(level.len() * d);
        for &v in &level {
            for _ in 0..d {
                edges.push((v, *next));
                children.push(*next);
                *next += 1;
            }
        }
        level = children;
    }
    root
}

fn unit_matrix(order: usize, edges: &[(usize, usize)]) -> SymmetricMatrix<f64> {
    let mut m = SymmetricMatrix::zeros(order);
    for &(i, j) in edges {
        m.set(i, j, 1.0);
    }
    m
}

/// A base graph whose vertex is joined by a unit edge to the root of a
/// tree with `d` children per vertex. The tree is built explicitly, so
/// sections grow like `d^depth`.
#[derive(Clone, Debug)]
pub struct BetheCoupling {
    pub base: WeightedGraph,
    /// 1-based.
    pub vertex: usize,
    pub d: usize,
}

impl Truncation for BetheCoupling {
    fn truncated_eigenvalues(&self, depth: usize) -> Vec<f64> {
        let n = self.base.order();
        let mut edges = Vec::new();
        let mut next = n;
        let root = grow_tree(&mut edges, &mut next, self.d, depth);
        let mut m = unit_matrix(next, &edges);
        for (i, j, w) in self.base.edges() {
            m.set(i - 1, j - 1, crate::scalar::ratio_to_f64(w));
        }
        m.set(self.vertex - 1, root, 1.0);
        eig_symmetric(&m)
    }
}

/// Two trees with `d` children per vertex, roots joined by an edge.
#[derive(Clone, Debug)]
pub struct BethePair {
    pub d: usize,
}

impl Truncation for BethePair {
    fn truncated_eigenvalues(&self, depth: usize) -> Vec<f64> {
        let mut edges = Vec::new();
        let mut next = 0;
        let left = grow_tree(&mut edges, &mut next, self.d, depth);
        let right = grow_tree(&mut edges, &mut next, self.d, depth);
        edges.push((left, right));
        eig_symmetric(&unit_matrix(next, &edges))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleOptions {
    pub delta: f64,
    pub tol: f64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            delta: DEFAULT_DELTA,
            tol: DEFAULT_TOL,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Match {
    pub predicted: f64,
    pub found: Option<f64>,
    pub error: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbeddedCheck {
    pub value: f64,
    pub multiplicity: usize,
    /// Truncated eigenvalues within `10 tol`, at each size.
    pub found: [usize; 2],
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub sizes: [usize; 2],
    pub delta: f64,
    pub tol: f64,
    pub band_edge: f64,
    pub matches: Vec<Match>,
    pub embedded: Vec<EmbeddedCheck>,
    /// Outliers at the first size left over after matching.
    pub unmatched: Vec<f64>,
    /// Unmatched outliers that reappear at the second size.
    pub spurious: Vec<f64>,
    pub pass: bool,
}

fn outside(x: f64, edge: f64) -> bool {
    x.abs() > edge
}

/// One-to-one nearest matching, greedy by error. Returns for every
/// prediction the index of its partner.
fn greedy_match(predicted: &[f64], found: &[f64]) -> Vec<Option<usize>> {
    let mut pairs: Vec<(f64, usize, usize)> = predicted
        .iter()
        .enumerate()
        .flat_map(|(i, &p)| found.iter().enumerate().map(move |(j, &f)| ((p - f).abs(), i, j)))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    let mut partner = vec![None; predicted.len()];
    let mut used = vec![false; found.len()];
    for (_, i, j) in pairs {
        if partner[i].is_none() && !used[j] {
            partner[i] = Some(j);
            used[j] = true;
        }
    }
    partner
}

/// Outliers beyond the inflated band that no prediction claimed.
fn leftover(predicted: &[f64], found: &[f64], inflated: f64) -> Vec<f64> {
    let partner = greedy_match(predicted, found);
    let mut used = vec![false; found.len()];
    for j in partner.into_iter().flatten() {
        used[j] = true;
    }
    found
        .iter()
        .zip(used)
        .filter(|&(&x, u)| !u && outside(x, inflated))
        .map(|(&x, _)| x)
        .collect()
}

/// Compare a predicted spectrum against sections at `depth` and
/// `depth + PERSISTENCE_STEP`.
pub fn compare<T: Truncation + ?Sized>(
    predicted: &Spectrum,
    t: &T,
    depth: usize,
    opts: OracleOptions,
) -> OracleReport {
    let sizes = [depth, depth + PERSISTENCE_STEP];
    let first = t.truncated_eigenvalues(sizes[0]);
    let second = t.truncated_eigenvalues(sizes[1]);
    compare_eigenvalues(predicted, sizes, &first, &second, opts)
}

/// [`compare`] on precomputed section spectra.
pub fn compare_eigenvalues(
    predicted: &Spectrum,
    sizes: [usize; 2],
    first: &[f64],
    second: &[f64],
    opts: OracleOptions,
) -> OracleReport {
    let edge = predicted.band_edge();
    let inflated = edge + opts.delta;
    let isolated: Vec<f64> = predicted.values().into_iter().filter(|&x| outside(x, edge)).collect();

    let partner = greedy_match(&isolated, first);
    let matches: Vec<Match> = isolated
        .iter()
        .zip(&partner)
        .map(|(&p, j)| {
            let found = j.map(|j| first[j]);
            Match {
                predicted: p,
                found,
                error: found.map(|f| (f - p).abs()),
            }
        })
        .collect();

    let window = 10.0 * opts.tol;
    let count = |ev: &[f64], x: f64| ev.iter().filter(|&&y| (y - x).abs() <= window).count();
    let embedded: Vec<EmbeddedCheck> = predicted
        .discrete
        .iter()
        .filter(|e| !outside(e.value, edge))
        .map(|e| {
            let found = [count(first, e.value), count(second, e.value)];
            EmbeddedCheck {
                value: e.value,
                multiplicity: e.multiplicity,
                found,
                passed: found.iter().all(|&c| c >= e.multiplicity),
            }
        })
        .collect();

    let unmatched = leftover(&isolated, first, inflated);
    let later = leftover(&isolated, second, inflated);
    let spurious: Vec<f64> = unmatched
        .iter()
        .copied()
        .filter(|x| later.iter().any(|y| (x - y).abs() <= PERSISTENCE_TOL))
        .collect();

    let pass = matches.iter().all(|m| m.error.is_some_and(|e| e <= opts.tol))
        && embedded.iter().all(|e| e.passed)
        && spurious.is_empty();
    OracleReport {
        sizes,
        delta: opts.delta,
        tol: opts.tol,
        band_edge: edge,
        matches,
        embedded,
        unmatched,
        spurious,
        pass,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub depth: usize,
    /// Error of every isolated prediction, in ascending order of value.
    pub errors: Vec<f64>,
    pub max_error: f64,
}

/// Matching errors of the isolated predicted eigenvalues at each depth.
pub fn convergence_study<T: Truncation + ?Sized>(
    predicted: &Spectrum,
    t: &T,
    depths: &[usize],
) -> Vec<ConvergenceRow> {
    let edge = predicted.band_edge();
    let isolated: Vec<f64> = predicted.values().into_iter().filter(|&x| outside(x, edge)).collect();
    depths
        .iter()
        .map(|&depth| {
            let ev = t.truncated_eigenvalues(depth);
            let partner = greedy_match(&isolated, &ev);
            let errors: Vec<f64> = isolated
                .iter()
                .zip(partner)
                .map(|(&p, j)| j.map_or(f64::INFINITY, |j| (ev[j] - p).abs()))
                .collect();
            let max_error = errors.iter().copied().fold(0.0, f64::max);
            ConvergenceRow {
                depth,
                errors,
                max_error,
            }
        })
        .collect()
}

/// Cauchy interlacing for a principal submatrix obtained by deleting `r`
/// rows and columns: `outer_i <= inner_i <= outer_{i+r}`.
pub fn interlaces(outer: &[f64], inner: &[f64], tol: f64) -> bool {
    let Some(r) = outer.len().checked_sub(inner.len()) else {
        return false;
    };
    inner
        .iter()
        .enumerate()
        .all(|(i, &mu)| outer[i] <= mu + tol && mu <= outer[i + r] + tol)
}
