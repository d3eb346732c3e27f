//! Reduction of a finite graph with a tail to finite block ⊕ Jacobi matrix.
//!
//! Starting from the attachment vertex `v`, the recursion
//!
//! ```text
//! q_0 = e_v,   q_{k+1} = A q_k - y_k q_k - z_k q_{k-1},
//! y_k = <A q_k, q_k> / N_k,   z_k = N_k / N_{k-1},   N_k = <q_k, q_k>
//! ```
//!
//! builds orthogonal vectors until `q_{r+1} = 0`. Their span is invariant
//! under the part of `A` living on the finite graph, and in the basis
//! `q_r, ..., q_0` followed by the tail vertices the operator restricted
//! to it is the Jacobi matrix with
//!
//! ```text
//! b = (y_r, ..., y_0, tail b_1, tail b_2, ...)
//! a^2 = (z_r, ..., z_1, d^2, tail a_1^2, ...)
//! ```
//!
//! The orthogonal complement of the span inside the finite graph carries
//! the finite block. In exact mode the vectors are kept unnormalized so
//! everything stays rational; in floating mode they are normalized and
//! reorthogonalized against all earlier vectors.

use crate::error::{Error, Result};
use crate::graph::{TailedGraph, WeightedGraph};
use crate::jacobi::{FiniteRankJacobi, TwoSidedJacobi};
use crate::matrix::{dot, SymmetricMatrix};
use crate::scalar::{int, Rational, Scalar};
use crate::spectra::eigen::eig_symmetric;

/// Float-mode completion skips candidates whose residual norm is below this.
pub const COMPLETION_THRESHOLD: f64 = 1e-8;

/// A basis vector in vertex coordinates with its squared norm.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisVector<S> {
    pub coords: Vec<S>,
    pub norm_sq: S,
}

impl<S: Scalar> BasisVector<S> {
    fn new(coords: Vec<S>) -> Self {
        let norm_sq = dot(&coords, &coords);
        Self { coords, norm_sq }
    }
}

/// The compression of `A` to the orthogonal complement of the Krylov span.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteBlock<S> {
    /// Pairwise orthogonal vectors spanning the complement.
    pub complement: Vec<BasisVector<S>>,
    /// `<c_i, A c_j>`.
    pub compressed: SymmetricMatrix<S>,
    /// Matrix of the block in the orthonormalized complement basis.
    pub matrix: SymmetricMatrix<f64>,
}

impl<S: Scalar> FiniteBlock<S> {
    pub fn order(&self) -> usize {
        self.complement.len()
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        eig_symmetric(&self.matrix)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CopyCount {
    Finite(usize),
    Unbounded,
}

/// Additional summands `sqrt(scale_sq) J_0`, decoupled from everything else.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeCopies {
    pub count: CopyCount,
    pub scale_sq: Rational,
}

impl FreeCopies {
    pub fn none() -> Self {
        Self::finite(0)
    }

    pub fn finite(count: usize) -> Self {
        Self {
            count: CopyCount::Finite(count),
            scale_sq: int(1),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalForm<S> {
    /// Attachment vertex, 1-based.
    pub vertex: usize,
    /// `q_0, ..., q_r`.
    pub krylov: Vec<BasisVector<S>>,
    pub finite_block: FiniteBlock<S>,
    /// The Jacobi component divided by `sqrt(jacobi_scale_sq)`.
    pub jacobi: FiniteRankJacobi<S>,
    pub jacobi_scale_sq: Rational,
    pub free_copies: FreeCopies,
}

impl<S: Scalar> CanonicalForm<S> {
    pub fn krylov_depth(&self) -> usize {
        self.krylov.len()
    }

    /// Order of the base graph.
    pub fn order(&self) -> usize {
        self.krylov.len() + self.finite_block.order()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceStep<S> {
    pub y: S,
    /// `N_k / N_{k-1}`; absent for `k = 0`.
    pub z: Option<S>,
    /// Squared norm of the vector before any normalization.
    pub norm_sq: S,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionTrace<S> {
    pub steps: Vec<TraceStep<S>>,
    /// Index `r` of the last nonzero vector.
    pub termination: usize,
}

fn axpy<S: Scalar>(y: &mut [S], alpha: &S, x: &[S]) {
    if alpha.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = yi.clone() + alpha.clone() * xi.clone();
        }
    }
}

/// Remove the components along `basis` (orthogonal, not necessarily normalized).
fn project_out<S: Scalar>(v: &mut [S], basis: &[BasisVector<S>]) {
    for u in basis {
        let c = dot(v, &u.coords) / u.norm_sq.clone();
        axpy(v, &-c, &u.coords);
    }
}

fn float_threshold<S: Scalar>(a: &SymmetricMatrix<S>) -> f64 {
    1e-10 * a.max_abs() * (a.order() as f64).sqrt()
}

fn krylov<S: Scalar>(a: &SymmetricMatrix<S>, v: usize) -> (Vec<BasisVector<S>>, Vec<S>, Vec<S>, ReductionTrace<S>) {
    let n = a.order();
    let mut q0 = vec![S::zero(); n];
    q0[v] = S::one();
    let mut basis = vec![BasisVector::new(q0)];
    let mut raw_norms = vec![S::one()];
    let mut ys = Vec::new();
    let mut zs: Vec<S> = Vec::new();
    let threshold = float_threshold(a);
    loop {
        let k = basis.len() - 1;
        let qk = &basis[k];
        let aq = a.mul_vec(&qk.coords);
        let y = dot(&aq, &qk.coords) / qk.norm_sq.clone();
        ys.push(y.clone());
        if basis.len() == n {
            break;
        }
        let mut r = aq;
        axpy(&mut r, &-y, &qk.coords);
        if k > 0 {
            let c = if S::EXACT {
                zs[k - 1].clone()
            } else {
                zs[k - 1].sqrt_exact().expect("float square root")
            };
            axpy(&mut r, &-c, &basis[k - 1].coords);
        }
        if S::EXACT {
            if r.iter().all(|x| x.is_zero()) {
                break;
            }
            let next = BasisVector::new(r);
            zs.push(next.norm_sq.clone() / basis[k].norm_sq.clone());
            raw_norms.push(next.norm_sq.clone());
            basis.push(next);
        } else {
            project_out(&mut r, &basis);
            project_out(&mut r, &basis);
            let norm_sq = dot(&r, &r);
            if norm_sq.to_f64().sqrt() <= threshold {
                break;
            }
            let norm = norm_sq.sqrt_exact().expect("float square root");
            zs.push(norm_sq.clone());
            raw_norms.push(norm_sq);
            basis.push(BasisVector {
                coords: r.into_iter().map(|x| x / norm.clone()).collect(),
                norm_sq: S::one(),
            });
        }
    }
    let steps = (0..basis.len())
        .map(|k| TraceStep {
            y: ys[k].clone(),
            z: k.checked_sub(1).map(|i| zs[i].clone()),
            norm_sq: raw_norms[k].clone(),
        })
        .collect();
    let termination = basis.len() - 1;
    (basis, ys, zs, ReductionTrace { steps, termination })
}

fn complete_basis<S: Scalar>(krylov: &[BasisVector<S>], n: usize, v: usize) -> Vec<BasisVector<S>> {
    let want = n - krylov.len();
    let mut all: Vec<BasisVector<S>> = krylov.to_vec();
    let mut out = Vec::with_capacity(want);
    for i in (0..n).filter(|&i| i != v) {
        if out.len() == want {
            break;
        }
        let mut c = vec![S::zero(); n];
        c[i] = S::one();
        project_out(&mut c, &all);
        let vec = if S::EXACT {
            if c.iter().all(|x| x.is_zero()) {
                continue;
            }
            BasisVector::new(c)
        } else {
            project_out(&mut c, &all);
            let norm_sq = dot(&c, &c);
            if norm_sq.to_f64().sqrt() < COMPLETION_THRESHOLD {
                continue;
            }
            let norm = norm_sq.sqrt_exact().expect("float square root");
            BasisVector {
                coords: c.into_iter().map(|x| x / norm.clone()).collect(),
                norm_sq: S::one(),
            }
        };
        all.push(vec.clone());
        out.push(vec);
    }
    out
}

fn compress<S: Scalar>(a: &SymmetricMatrix<S>, complement: Vec<BasisVector<S>>) -> FiniteBlock<S> {
    let m = complement.len();
    let images: Vec<Vec<S>> = complement.iter().map(|c| a.mul_vec(&c.coords)).collect();
    let mut compressed = SymmetricMatrix::zeros(m);
    let mut matrix = SymmetricMatrix::zeros(m);
    for i in 0..m {
        for j in i..m {
            let v = dot(&complement[i].coords, &images[j]);
            let scale = (complement[i].norm_sq.to_f64() * complement[j].norm_sq.to_f64()).sqrt();
            matrix.set(i, j, v.to_f64() / scale);
            compressed.set(i, j, v);
        }
    }
    FiniteBlock {
        complement,
        compressed,
        matrix,
    }
}

/// Reduce the base adjacency `a` with a tail joined to `vertex` (1-based)
/// by a bridge of squared weight `bridge_sq`.
///
/// A vertex with no neighbours in the base graph yields a one-vector Krylov
/// space, so the finite block is `a` with that vertex deleted.
pub fn reduce_single_tail<S: Scalar>(
    a: &SymmetricMatrix<S>,
    vertex: usize,
    bridge_sq: &S,
    tail: &FiniteRankJacobi<S>,
) -> Result<(CanonicalForm<S>, ReductionTrace<S>)> {
    let n = a.order();
    if vertex == 0 || vertex > n {
        return Err(Error::InvalidGraph(format!("attachment vertex {vertex} out of range 1..={n}")));
    }
    if !bridge_sq.is_positive() {
        return Err(Error::InvalidParameter("bridge weight must be positive".into()));
    }
    let v = vertex - 1;
    let (krylov, ys, zs, trace) = krylov(a, v);
    let r = krylov.len() - 1;
    let t = tail.rank();
    let mut b: Vec<S> = ys.iter().rev().cloned().collect();
    b.extend((1..=t).map(|j| tail.b(j)));
    let mut a_sq: Vec<S> = zs.iter().rev().cloned().collect();
    a_sq.push(bridge_sq.clone());
    a_sq.extend((1..=t).map(|j| tail.a_sq(j)));
    debug_assert_eq!(b.len(), r + 1 + t);
    let jacobi = FiniteRankJacobi::new(b, a_sq)?;
    let complement = complete_basis(&krylov, n, v);
    let finite_block = compress(a, complement);
    Ok((
        CanonicalForm {
            vertex,
            krylov,
            finite_block,
            jacobi,
            jacobi_scale_sq: int(1),
            free_copies: FreeCopies::none(),
        },
        trace,
    ))
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResidualReport {
    /// Largest violation of `A q_k = (next) + b q_k + (previous)` relative
    /// to `|q_k|`.
    pub three_term: f64,
    /// Largest normalized inner product between distinct basis vectors,
    /// and deviation of recorded norms.
    pub orthogonality: f64,
    /// Mismatch between the Jacobi entries and the trace, bridge and tail.
    pub extension: f64,
    /// Mismatch of the stored finite block.
    pub block: f64,
}

impl ResidualReport {
    pub fn max(&self) -> f64 {
        self.three_term
            .max(self.orthogonality)
            .max(self.extension)
            .max(self.block)
    }

    pub fn is_exact_zero(&self) -> bool {
        self.max() == 0.0
    }
}

fn max_abs_diff<S: Scalar>(x: &[S], y: &[S]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(a, b)| (a.clone() - b.clone()).to_f64().abs())
        .fold(0.0, f64::max)
}

fn gap<S: Scalar>(x: &S, y: &S) -> f64 {
    (x.clone() - y.clone()).to_f64().abs()
}

/// Recheck every relation a canonical form is supposed to satisfy.
pub fn verify_canonical<S: Scalar>(
    a: &SymmetricMatrix<S>,
    bridge_sq: &S,
    tail: &FiniteRankJacobi<S>,
    cf: &CanonicalForm<S>,
    trace: &ReductionTrace<S>,
) -> Result<ResidualReport> {
    let n = a.order();
    let all: Vec<&BasisVector<S>> = cf.krylov.iter().chain(&cf.finite_block.complement).collect();
    if all.len() != n || all.iter().any(|u| u.coords.len() != n) {
        return Err(Error::Dimension(format!(
            "canonical form has {} basis vectors for a graph of order {n}",
            all.len()
        )));
    }
    if trace.steps.len() != cf.krylov.len() || cf.finite_block.compressed.order() != cf.finite_block.order() {
        return Err(Error::Dimension("trace and canonical form disagree in length".into()));
    }
    let r = cf.krylov.len() - 1;
    let j = &cf.jacobi;

    let mut three_term: f64 = 0.0;
    for k in 0..=r {
        let idx = r + 1 - k;
        let qk = &cf.krylov[k];
        let mut res = a.mul_vec(&qk.coords);
        let b = j.b(idx);
        axpy(&mut res, &-b, &qk.coords);
        if S::EXACT {
            if k < r {
                axpy(&mut res, &-S::one(), &cf.krylov[k + 1].coords);
            }
            if k > 0 {
                axpy(&mut res, &-j.a_sq(idx), &cf.krylov[k - 1].coords);
            }
        } else {
            if k < r {
                let beta = j.a_sq(idx - 1).sqrt_exact().expect("float square root");
                axpy(&mut res, &-beta, &cf.krylov[k + 1].coords);
            }
            if k > 0 {
                let beta = j.a_sq(idx).sqrt_exact().expect("float square root");
                axpy(&mut res, &-beta, &cf.krylov[k - 1].coords);
            }
        }
        let scale = qk.norm_sq.to_f64().sqrt();
        let worst = res.iter().map(|x| x.to_f64().abs()).fold(0.0, f64::max);
        three_term = three_term.max(worst / scale);
    }

    let mut orthogonality: f64 = 0.0;
    for (i, u) in all.iter().enumerate() {
        orthogonality = orthogonality.max(gap(&dot(&u.coords, &u.coords), &u.norm_sq) / u.norm_sq.to_f64());
        for w in &all[i + 1..] {
            let ip = dot(&u.coords, &w.coords).to_f64().abs();
            orthogonality = orthogonality.max(ip / (u.norm_sq.to_f64() * w.norm_sq.to_f64()).sqrt());
        }
    }

    let mut extension: f64 = 0.0;
    for (k, step) in trace.steps.iter().enumerate() {
        let idx = r + 1 - k;
        extension = extension.max(gap(&step.y, &j.b(idx)));
        if let Some(z) = &step.z {
            extension = extension.max(gap(z, &j.a_sq(idx)));
        }
    }
    extension = extension.max(gap(&j.a_sq(r + 1), bridge_sq));
    for t in 1..=tail.rank() + 1 {
        extension = extension
            .max(gap(&j.b(r + 1 + t), &tail.b(t)))
            .max(gap(&j.a_sq(r + 1 + t), &tail.a_sq(t)));
    }
    if j.rank() > r + 1 + tail.rank() {
        extension = extension.max(1.0);
    }

    let comp = &cf.finite_block.complement;
    let mut block: f64 = 0.0;
    for (i, ci) in comp.iter().enumerate() {
        let image = a.mul_vec(&ci.coords);
        let row: Vec<S> = comp.iter().map(|cj| dot(&cj.coords, &image)).collect();
        block = block.max(max_abs_diff(&row, cf.finite_block.compressed.row(i)));
    }

    Ok(ResidualReport {
        three_term,
        orthogonality,
        extension,
        block,
    })
}

/// A single-tail problem equivalent to a tailed graph whose tails all hang
/// off one vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct SingleTail {
    pub adjacency: SymmetricMatrix<Rational>,
    pub vertex: usize,
    pub bridge_sq: Rational,
    pub tail: FiniteRankJacobi<Rational>,
}

/// Merge all rays at one vertex into one ray and `rays - 1` detached copies.
///
/// Rays sharing a vertex and identical edge weights span a symmetric
/// combination coupled to the vertex with squared bridge weight
/// `sum p_i d_i^2`; the rest of the ray space splits into `rays - 1` copies
/// of a single detached ray.
pub fn normalize_multiray(t: &TailedGraph) -> Result<(SingleTail, usize)> {
    let vertex = t.single_vertex().ok_or_else(|| {
        Error::OracleOnly(format!(
            "tails attached at distinct vertices {:?}",
            t.attachment_vertices()
        ))
    })?;
    let first = &t.attachments[0];
    if t.attachments.iter().any(|a| a.tail_weights != first.tail_weights) && t.total_rays() > 1 {
        return Err(Error::OracleOnly(
            "rays at one vertex carry different edge weights".into(),
        ));
    }
    let bridge_sq = t
        .attachments
        .iter()
        .fold(int(0), |acc, a| acc + &a.bridge * &a.bridge * int(a.rays as i64));
    let depth = first.tail_weights.keys().copied().max().unwrap_or(0);
    let a_sq = (1..=depth)
        .map(|j| {
            let w = first.tail_weight(j);
            &w * &w
        })
        .collect();
    Ok((
        SingleTail {
            adjacency: t.base.adjacency(),
            vertex,
            bridge_sq,
            tail: FiniteRankJacobi::new(Vec::new(), a_sq)?,
        },
        t.total_rays() - 1,
    ))
}

/// Rays-at-every-vertex configuration: `p` unweighted rays with a common
/// bridge at each vertex of the base graph.
pub fn sun_parameters(t: &TailedGraph) -> Option<(usize, Rational)> {
    let n = t.base.order();
    if n < 2 || t.attachments.iter().any(|a| !a.is_unweighted()) {
        return None;
    }
    let bridge = t.attachments[0].bridge.clone();
    if t.attachments.iter().any(|a| a.bridge != bridge) {
        return None;
    }
    let mut per_vertex = vec![0usize; n + 1];
    for a in &t.attachments {
        per_vertex[a.vertex] += a.rays;
    }
    let p = per_vertex[1];
    (p > 0 && per_vertex[1..].iter().all(|&c| c == p)).then_some((p, bridge))
}

#[derive(Clone, Debug, PartialEq)]
pub struct SunDecomposition {
    /// Spectrum of the base graph.
    pub eigenvalues: Vec<f64>,
    /// `J({λ_j}, {p d^2})`, one per eigenvalue.
    pub blocks: Vec<FiniteRankJacobi<f64>>,
    pub free_copies: usize,
}

/// Base graph with `p` unweighted rays and unit bridges at every vertex.
pub fn sun_decompose(g: &WeightedGraph, p: usize) -> Result<SunDecomposition> {
    sun_decompose_with_bridge(g, p, &int(1))
}

pub fn sun_decompose_with_bridge(g: &WeightedGraph, p: usize, bridge: &Rational) -> Result<SunDecomposition> {
    if p == 0 {
        return Err(Error::InvalidParameter("need at least one ray per vertex".into()));
    }
    let eigenvalues = eig_symmetric(&g.adjacency::<f64>());
    let coupling = (bridge * bridge * int(p as i64)).to_f64();
    let blocks = eigenvalues
        .iter()
        .map(|&l| FiniteRankJacobi::new(vec![l], vec![coupling]))
        .collect::<Result<_>>()?;
    Ok(SunDecomposition {
        eigenvalues,
        blocks,
        free_copies: (p - 1) * g.order(),
    })
}

/// A base graph joined by a unit bridge to the root of the tree in which
/// every vertex has `d` children.
///
/// The radially symmetric part of the tree is a path with weights
/// `sqrt(d)`, so the Jacobi component is `sqrt(d)` times an eventually free
/// matrix; the rest of the tree splits into infinitely many copies of
/// `sqrt(d) J_0`.
pub fn bethe_coupling<S: Scalar>(g: &WeightedGraph, d: usize, vertex: usize) -> Result<CanonicalForm<S>> {
    if d == 0 {
        return Err(Error::InvalidParameter("tree degree must be at least 1".into()));
    }
    let (mut cf, _) = reduce_single_tail(&g.adjacency::<S>(), vertex, &S::one(), &FiniteRankJacobi::free())?;
    if d == 1 {
        return Ok(cf);
    }
    let ds = S::from_i64(d as i64);
    let r = cf.krylov.len() - 1;
    let root = ds.sqrt_exact();
    let b = (1..=r + 1)
        .map(|j| {
            let bj = cf.jacobi.b(j);
            if bj.is_zero() {
                return Ok(bj);
            }
            let root = root.clone().ok_or_else(|| {
                Error::NotExact(format!("diagonal entries need sqrt({d}) to rescale"))
            })?;
            Ok(bj / root)
        })
        .collect::<Result<Vec<S>>>()?;
    let a_sq = (1..=r + 1).map(|j| cf.jacobi.a_sq(j) / ds.clone()).collect();
    cf.jacobi = FiniteRankJacobi::new(b, a_sq)?;
    cf.jacobi_scale_sq = int(d as i64);
    cf.free_copies = FreeCopies {
        count: CopyCount::Unbounded,
        scale_sq: int(d as i64),
    };
    Ok(cf)
}

/// Two Bethe trees of degree `d` with their roots joined by an edge, as
/// `(J, d)` where the radial operator is `sqrt(d) J`.
pub fn bethe_pair(d: usize) -> Result<(TwoSidedJacobi<Rational>, Rational)> {
    if d == 0 {
        return Err(Error::InvalidParameter("tree degree must be at least 1".into()));
    }
    let scale = int(d as i64);
    let j = TwoSidedJacobi::with_off_diagonals(&[(0, int(1) / &scale)])?;
    Ok((j, scale))
}
