//! JSON graph-spec documents.
//!
//! ```json
//! {
//!   "order": 4,
//!   "edges": [[1, 4, "1"], [2, 4, "1"], [3, 4, "1"]],
//!   "tails": [{"vertex": 4, "rays": 1, "bridge": "1", "tail_weights": {"2": "3/2"}}]
//! }
//! ```
//!
//! Weights are strings holding an integer, a decimal or `p/q`; bare JSON
//! integers are accepted too. Writing always uses the canonical `p` / `p/q`
//! form, so rational inputs round-trip exactly.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{attach_tails, TailAttachment, TailedGraph, WeightedGraph};
use crate::scalar::{format_rational, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightText {
    Text(String),
    Integer(i64),
}

impl WeightText {
    pub fn parse(&self) -> Result<Rational> {
        match self {
            Self::Text(s) => parse_rational(s),
            Self::Integer(i) => Ok(crate::scalar::int(*i)),
        }
    }

    fn canonical(r: &Rational) -> Self {
        Self::Text(format_rational(r))
    }
}

fn one() -> WeightText {
    WeightText::Text("1".into())
}

fn one_ray() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TailSpec {
    pub vertex: usize,
    #[serde(default = "one_ray")]
    pub rays: usize,
    #[serde(default = "one")]
    pub bridge: WeightText,
    #[serde(default)]
    pub tail_weights: BTreeMap<String, WeightText>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpec {
    pub order: usize,
    pub edges: Vec<(usize, usize, WeightText)>,
    #[serde(default)]
    pub tails: Vec<TailSpec>,
}

impl GraphSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph spec serializes")
    }

    pub fn base(&self) -> Result<WeightedGraph> {
        let mut g = WeightedGraph::new(self.order);
        for (i, j, w) in &self.edges {
            g.add_edge(*i, *j, w.parse()?)?;
        }
        Ok(g)
    }

    pub fn attachments(&self) -> Result<Vec<TailAttachment>> {
        self.tails
            .iter()
            .map(|t| {
                let mut a = TailAttachment::free(t.vertex)
                    .with_rays(t.rays)
                    .with_bridge(t.bridge.parse()?);
                for (k, w) in &t.tail_weights {
                    let index: usize = k
                        .parse()
                        .map_err(|_| Error::Parse(format!("tail weight index {k:?}")))?;
                    a = a.with_tail_weight(index, w.parse()?);
                }
                Ok(a)
            })
            .collect()
    }

    pub fn tailed(&self) -> Result<TailedGraph> {
        attach_tails(self.base()?, self.attachments()?)
    }

    pub fn from_parts(base: &WeightedGraph, attachments: &[TailAttachment]) -> Self {
        Self {
            order: base.order(),
            edges: base
                .edges()
                .map(|(i, j, w)| (i, j, WeightText::canonical(w)))
                .collect(),
            tails: attachments
                .iter()
                .map(|a| TailSpec {
                    vertex: a.vertex,
                    rays: a.rays,
                    bridge: WeightText::canonical(&a.bridge),
                    tail_weights: a
                        .tail_weights
                        .iter()
                        .map(|(k, w)| (k.to_string(), WeightText::canonical(w)))
                        .collect(),
                })
                .collect(),
        }
    }

    /// Same graph with every weight in canonical form and edges sorted.
    pub fn canonicalize(&self) -> Result<Self> {
        Ok(Self::from_parts(&self.base()?, &self.attachments()?))
    }
}
