use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::walk::{VertexId, Walk};

/// A finite digraph; self-loops are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDigraph", into = "RawDigraph")]
pub struct Digraph {
    vertices: BTreeSet<VertexId>,
    arcs: BTreeSet<(VertexId, VertexId)>,
}

#[derive(Serialize, Deserialize)]
struct RawDigraph {
    vertices: Vec<u64>,
    arcs: Vec<[u64; 2]>,
}

impl TryFrom<RawDigraph> for Digraph {
    type Error = Error;

    fn try_from(raw: RawDigraph) -> Result<Self> {
        Digraph::new(
            raw.vertices.into_iter().map(VertexId),
            raw.arcs.into_iter().map(|[a, b]| (VertexId(a), VertexId(b))),
        )
    }
}

impl From<Digraph> for RawDigraph {
    fn from(g: Digraph) -> Self {
        RawDigraph {
            vertices: g.vertices.iter().map(|v| v.0).collect(),
            arcs: g.arcs.iter().map(|(a, b)| [a.0, b.0]).collect(),
        }
    }
}

impl Digraph {
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        arcs: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        if vertices.is_empty() {
            return Err(Error::InvalidGraph("vertex set is empty".into()));
        }
        let arcs: BTreeSet<(VertexId, VertexId)> = arcs.into_iter().collect();
        if let Some((a, b)) = arcs
            .iter()
            .find(|(a, b)| !vertices.contains(a) || !vertices.contains(b))
        {
            return Err(Error::InvalidGraph(format!(
                "arc ({a},{b}) has an endpoint outside the vertex set"
            )));
        }
        Ok(Digraph { vertices, arcs })
    }

    /// Complete digraph on `1..=n`, with or without self-loops.
    pub fn complete(n: u64, self_loops: bool) -> Result<Self> {
        let vs: Vec<VertexId> = (1..=n).map(VertexId).collect();
        let arcs = vs
            .iter()
            .flat_map(|&a| vs.iter().map(move |&b| (a, b)))
            .filter(|(a, b)| self_loops || a != b)
            .collect::<Vec<_>>();
        Digraph::new(vs.clone(), arcs)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn has_arc(&self, a: VertexId, b: VertexId) -> bool {
        self.arcs.contains(&(a, b))
    }

    /// Out-neighbours of every vertex, in label order.
    pub fn successors(&self) -> BTreeMap<VertexId, Vec<VertexId>> {
        let mut out: BTreeMap<VertexId, Vec<VertexId>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for &(a, b) in &self.arcs {
            out.entry(a).or_default().push(b);
        }
        out
    }

    /// True iff every step of the walk is an arc and every vertex belongs to
    /// the graph.
    pub fn contains_walk(&self, walk: &Walk) -> bool {
        self.vertices.contains(&walk.first())
            && walk.edges().into_iter().all(|(a, b)| self.has_arc(a, b))
    }

    pub fn validate(&self, walk: &Walk) -> Result<()> {
        if self.contains_walk(walk) {
            Ok(())
        } else {
            Err(Error::NotOnGraph)
        }
    }
}
