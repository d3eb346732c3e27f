//! Example graph families with fixed vertex labelings.
//!
//! | kind | vertices | tail vertex |
//! |------|----------|-------------|
//! | `path(m)` | `1 - 2 - ... - m` | `m` |
//! | `cycle(m)`, `kite(m)` | `1 - 2 - ... - m - 1` | `m` |
//! | `star(n)` | leaves `1..=n`, root `n + 1` | root |
//! | `weighted_star(w)` | leaf `k` joined to root `n + 1` with weight `w_k` | root |
//! | `multiple_star(n, p)` | leaves `1..=n`; vertex `(i-1)n + q` joins `in + q`; layer `p` joins root `pn + 1` | root |
//! | `complete_bipartite(p, q)` | parts `1..=p` and `p+1..=p+q` | `p + q` |
//! | `wheel(n)` | cycle `1..=n`, hub `n + 1` | hub |
//! | `sword` | `T(1,2,2)`: `1-6`, `2-3-6`, `4-5-6` | `6` |
//! | `umbrella` | path `1-2-3-4`, each joined to `5` | `5` |
//! | `propeller(n)` | two `(2n+1)`-cycles `1..2n` and `2n+1..4n` through `4n + 1` | `4n + 1` |

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::scalar::Rational;

#[derive(Clone, Debug, PartialEq)]
pub enum GraphKind {
    Path { m: usize },
    Cycle { m: usize },
    Star { n: usize },
    WeightedStar { weights: Vec<Rational> },
    MultipleStar { n: usize, p: usize },
    CompleteBipartite { p: usize, q: usize },
    Wheel { n: usize },
    Sword,
    Umbrella,
    Propeller { n: usize },
    Kite { m: usize },
}

impl GraphKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Path { .. } => "path",
            Self::Cycle { .. } => "cycle",
            Self::Star { .. } => "star",
            Self::WeightedStar { .. } => "weighted-star",
            Self::MultipleStar { .. } => "multiple-star",
            Self::CompleteBipartite { .. } => "complete-bipartite",
            Self::Wheel { .. } => "wheel",
            Self::Sword => "sword",
            Self::Umbrella => "umbrella",
            Self::Propeller { .. } => "propeller",
            Self::Kite { .. } => "kite",
        }
    }

    /// Vertex where the family's tail is conventionally attached.
    pub fn tail_vertex(&self) -> usize {
        match self {
            Self::Path { m } | Self::Cycle { m } | Self::Kite { m } => *m,
            Self::Star { n } | Self::Wheel { n } => n + 1,
            Self::WeightedStar { weights } => weights.len() + 1,
            Self::MultipleStar { n, p } => n * p + 1,
            Self::CompleteBipartite { p, q } => p + q,
            Self::Sword => 6,
            Self::Umbrella => 5,
            Self::Propeller { n } => 4 * n + 1,
        }
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

pub fn generate(kind: &GraphKind) -> Result<WeightedGraph> {
    match kind {
        GraphKind::Path { m } => path(*m),
        GraphKind::Cycle { m } | GraphKind::Kite { m } => cycle(*m),
        GraphKind::Star { n } => star(*n),
        GraphKind::WeightedStar { weights } => weighted_star(weights),
        GraphKind::MultipleStar { n, p } => multiple_star(*n, *p),
        GraphKind::CompleteBipartite { p, q } => complete_bipartite(*p, *q),
        GraphKind::Wheel { n } => wheel(*n),
        GraphKind::Sword => sword(),
        GraphKind::Umbrella => umbrella(),
        GraphKind::Propeller { n } => propeller(*n),
    }
}

pub fn path(m: usize) -> Result<WeightedGraph> {
    require(m >= 1, || format!("path needs m >= 1, got {m}"))?;
    let edges: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
    WeightedGraph::from_unit_edges(m, &edges)
}

pub fn cycle(m: usize) -> Result<WeightedGraph> {
    require(m >= 3, || format!("cycle needs m >= 3, got {m}"))?;
    let mut edges: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
    edges.push((1, m));
    WeightedGraph::from_unit_edges(m, &edges)
}

pub fn star(n: usize) -> Result<WeightedGraph> {
    require(n >= 1, || format!("star needs n >= 1 leaves, got {n}"))?;
    let edges: Vec<_> = (1..=n).map(|k| (k, n + 1)).collect();
    WeightedGraph::from_unit_edges(n + 1, &edges)
}

pub fn weighted_star(weights: &[Rational]) -> Result<WeightedGraph> {
    let n = weights.len();
    require(n >= 1, || "weighted star needs at least one weight".into())?;
    require(weights.iter().all(|w| w.is_positive()), || {
        "weighted star weights must be positive".into()
    })?;
    WeightedGraph::from_edges(
        n + 1,
        weights.iter().enumerate().map(|(k, w)| (k + 1, n + 1, w.clone())),
    )
}

pub fn multiple_star(n: usize, p: usize) -> Result<WeightedGraph> {
    require(n >= 1 && p >= 1, || {
        format!("multiple star needs n, p >= 1, got n={n}, p={p}")
    })?;
    let root = n * p + 1;
    let mut edges = Vec::with_capacity(n * p);
    for q in 1..=n {
        for i in 1..p {
            edges.push(((i - 1) * n + q, i * n + q));
        }
        edges.push(((p - 1) * n + q, root));
    }
    WeightedGraph::from_unit_edges(root, &edges)
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<WeightedGraph> {
    require(p >= 1 && q >= 1, || {
        format!("complete bipartite needs p, q >= 1, got p={p}, q={q}")
    })?;
    let mut edges = Vec::with_capacity(p * q);
    for i in 1..=p {
        for j in p + 1..=p + q {
            edges.push((i, j));
        }
    }
    WeightedGraph::from_unit_edges(p + q, &edges)
}

pub fn wheel(n: usize) -> Result<WeightedGraph> {
    require(n >= 3, || format!("wheel needs n >= 3, got {n}"))?;
    let mut edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
    edges.push((1, n));
    edges.extend((1..=n).map(|k| (k, n + 1)));
    WeightedGraph::from_unit_edges(n + 1, &edges)
}

pub fn sword() -> Result<WeightedGraph> {
    WeightedGraph::from_unit_edges(6, &[(1, 6), (2, 3), (3, 6), (4, 5), (5, 6)])
}

pub fn umbrella() -> Result<WeightedGraph> {
    WeightedGraph::from_unit_edges(
        5,
        &[(1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5)],
    )
}

pub fn propeller(n: usize) -> Result<WeightedGraph> {
    require(n >= 1, || format!("propeller needs n >= 1, got {n}"))?;
    let hub = 4 * n + 1;
    let mut edges = Vec::new();
    for start in [1, 2 * n + 1] {
        let end = start + 2 * n - 1;
        edges.extend((start..end).map(|i| (i, i + 1)));
        edges.push((start, hub));
        edges.push((end, hub));
    }
    WeightedGraph::from_unit_edges(hub, &edges)
}
