//! Finite weighted graphs and the infinite paths attached to them.
//!
//! Vertices are labeled `1..=n` throughout the public API.

use std::collections::BTreeMap;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;
use crate::scalar::{Rational, Scalar};

/// Simple undirected graph with positive rational edge weights.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph {
    order: usize,
    /// Keyed by `(i, j)` with `i < j`.
    edges: BTreeMap<(usize, usize), Rational>,
}

impl WeightedGraph {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            edges: BTreeMap::new(),
        }
    }

    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut g = Self::new(order);
        for (i, j, w) in edges {
            g.add_edge(i, j, w)?;
        }
        Ok(g)
    }

    pub fn from_unit_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges(order, edges.iter().map(|&(i, j)| (i, j, Rational::one())))
    }

    pub fn add_edge(&mut self, i: usize, j: usize, weight: Rational) -> Result<()> {
        if i == j {
            return Err(Error::InvalidGraph(format!("self-loop at vertex {i}")));
        }
        for v in [i, j] {
            if v == 0 || v > self.order {
                return Err(Error::InvalidGraph(format!(
                    "vertex {v} out of range 1..={}",
                    self.order
                )));
            }
        }
        if !weight.is_positive() {
            return Err(Error::InvalidGraph(format!(
                "edge {{{i}, {j}}} has nonpositive weight {weight}"
            )));
        }
        let key = (i.min(j), i.max(j));
        if self.edges.insert(key, weight).is_some() {
            return Err(Error::InvalidGraph(format!("duplicate edge {{{i}, {j}}}")));
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn weight(&self, i: usize, j: usize) -> Option<&Rational> {
        self.edges.get(&(i.min(j), i.max(j)))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.edges.iter().map(|(&(i, j), w)| (i, j, w))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.keys().filter(|&&(i, j)| i == v || j == v).count()
    }

    pub fn adjacency<S: Scalar>(&self) -> SymmetricMatrix<S> {
        let mut a = SymmetricMatrix::zeros(self.order);
        for (&(i, j), w) in &self.edges {
            a.set(i - 1, j - 1, S::from_rational(w));
        }
        a
    }
}

/// One or more infinite rays hanging off a base vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct TailAttachment {
    pub vertex: usize,
    pub rays: usize,
    /// Weight of the bridge edge joining `vertex` to the first ray vertex.
    pub bridge: Rational,
    /// Exceptions to unit weight: index `j >= 1` is the edge between ray
    /// vertices `j` and `j + 1`. Every other ray edge has weight one.
    pub tail_weights: BTreeMap<usize, Rational>,
}

impl TailAttachment {
    /// A single unweighted ray joined by a unit bridge.
    pub fn free(vertex: usize) -> Self {
        Self {
            vertex,
            rays: 1,
            bridge: Rational::one(),
            tail_weights: BTreeMap::new(),
        }
    }

    pub fn with_rays(mut self, rays: usize) -> Self {
        self.rays = rays;
        self
    }

    pub fn with_bridge(mut self, bridge: Rational) -> Self {
        self.bridge = bridge;
        self
    }

    pub fn with_tail_weight(mut self, index: usize, weight: Rational) -> Self {
        self.tail_weights.insert(index, weight);
        self
    }

    /// Weight of ray edge `j` (between ray vertices `j` and `j + 1`).
    pub fn tail_weight(&self, j: usize) -> Rational {
        self.tail_weights.get(&j).cloned().unwrap_or_else(Rational::one)
    }

    /// Ray edges all carry weight one.
    pub fn is_unweighted(&self) -> bool {
        self.tail_weights.values().all(|w| w.is_one())
    }

    fn validate(&self, order: usize) -> Result<()> {
        if self.vertex == 0 || self.vertex > order {
            return Err(Error::InvalidGraph(format!(
                "tail vertex {} out of range 1..={order}",
                self.vertex
            )));
        }
        if self.rays == 0 {
            return Err(Error::InvalidGraph(format!(
                "attachment at vertex {} has zero rays",
                self.vertex
            )));
        }
        if !self.bridge.is_positive() {
            return Err(Error::InvalidGraph(format!(
                "bridge weight {} at vertex {} is not positive",
                self.bridge, self.vertex
            )));
        }
        for (&j, w) in &self.tail_weights {
            if j == 0 {
                return Err(Error::InvalidGraph("tail weight indices start at 1".into()));
            }
            if !w.is_positive() {
                return Err(Error::InvalidGraph(format!(
                    "tail weight {w} at index {j} is not positive"
                )));
            }
        }
        Ok(())
    }
}

/// A finite graph with tails attached.
#[derive(Clone, Debug, PartialEq)]
pub struct TailedGraph {
    pub base: WeightedGraph,
    pub attachments: Vec<TailAttachment>,
}

impl TailedGraph {
    pub fn total_rays(&self) -> usize {
        self.attachments.iter().map(|a| a.rays).sum()
    }

    /// Distinct attachment vertices in ascending order.
    pub fn attachment_vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.attachments.iter().map(|a| a.vertex).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Every tail hangs off the same vertex.
    pub fn single_vertex(&self) -> Option<usize> {
        match self.attachment_vertices().as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }
}

/// Attach tails to `base`. At least one attachment is required; several
/// attachments may share a vertex.
pub fn attach_tails(base: WeightedGraph, attachments: Vec<TailAttachment>) -> Result<TailedGraph> {
    if attachments.is_empty() {
        return Err(Error::InvalidGraph("at least one tail required".into()));
    }
    for a in &attachments {
        a.validate(base.order())?;
    }
    Ok(TailedGraph { base, attachments })
}

/// Adjacency matrix of the finite graph obtained by keeping `depth`
/// vertices on every ray.
///
/// Base vertices come first, then ray vertices generation by generation;
/// within a generation rays follow attachment order. With this ordering the
/// truncation at `depth` is the leading principal block of the truncation at
/// `depth + 1`. `depth == 0` gives the bare base graph.
pub fn truncate<S: Scalar>(graph: &TailedGraph, depth: usize) -> SymmetricMatrix<S> {
    let n = graph.base.order();
    let rays = graph.total_rays();
    let mut m = SymmetricMatrix::zeros(n + depth * rays);
    for (i, j, w) in graph.base.edges() {
        m.set(i - 1, j - 1, S::from_rational(w));
    }
    if depth == 0 {
        return m;
    }
    let mut ray = 0;
    for att in &graph.attachments {
        let bridge = S::from_rational(&att.bridge);
        let weights: Vec<S> = (1..depth).map(|j| S::from_rational(&att.tail_weight(j))).collect();
        for _ in 0..att.rays {
            let at = |generation: usize| n + (generation - 1) * rays + ray;
            m.set(att.vertex - 1, at(1), bridge.clone());
            for (g, w) in (1..depth).zip(&weights) {
                if !w.is_zero() {
                    m.set(at(g), at(g + 1), w.clone());
                }
            }
            ray += 1;
        }
    }
    m
}
