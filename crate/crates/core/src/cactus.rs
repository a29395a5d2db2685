//! Cacti, the cactus map, temporal trees, towers and corollas.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use num_traits::One;
use serde::Serialize;

use crate::coalgebra::{delta_h_walk, Antipode, Pair, Sides};
use crate::error::{Error, Result};
use crate::forest::{Forest, MultisetForest};
use crate::lincomb::{Coeff, LinComb};
use crate::loop_erasure::{les, Cut, LawlerTrace};
use crate::walk::{VertexId, Walk};

/// Every pair of equal vertices bounds a loop-erased section.
pub fn is_cactus(w: &Walk) -> bool {
    let sections = les(w);
    let vs = w.vertices();
    (0..vs.len()).all(|k| {
        (k + 1..vs.len()).all(|k2| vs[k] != vs[k2] || sections.contains(&Cut::new(k, k2)))
    })
}

/// Relabels so that every newly reached vertex gets a fresh label one above
/// the current maximum, while a return reuses the label of the vertex it
/// returns to. The first label is kept.
pub fn cactus_map(w: &Walk) -> Walk {
    let vs = w.vertices();
    let mut out = Vec::with_capacity(vs.len());
    out.push(vs[0]);
    let mut max = vs[0];
    let mut stack = vec![vs[0]];
    let mut depth: HashMap<VertexId, usize> = HashMap::from([(vs[0], 0)]);
    let mut last_seen: HashMap<VertexId, usize> = HashMap::from([(vs[0], 0)]);
    for (i, &v) in vs.iter().enumerate().skip(1) {
        match depth.get(&v).copied() {
            Some(d) => {
                for u in stack.drain(d + 1..) {
                    depth.remove(&u);
                }
                out.push(out[last_seen[&v]]);
            }
            None => {
                depth.insert(v, stack.len());
                stack.push(v);
                max = VertexId(max.0 + 1);
                out.push(max);
            }
        }
        last_seen.insert(v, i);
    }
    Walk::new(out).expect("nonempty")
}

/// Labels vertices `1, 2, 3, ...` in order of first occurrence.
pub fn canonical_relabel_walk(w: &Walk) -> Walk {
    let mut seen: HashMap<VertexId, VertexId> = HashMap::new();
    w.relabel(|v| {
        let next = VertexId(seen.len() as u64 + 1);
        *seen.entry(v).or_insert(next)
    })
}

/// Relabels every walk of the forest independently.
pub fn canonical_relabel(f: &Forest) -> Forest {
    f.map_walks(canonical_relabel_walk)
}

/// Forgets the labels of the cactus image.
pub fn phi(w: &Walk) -> Walk {
    canonical_relabel_walk(&cactus_map(w))
}

pub fn phi_forest(f: &Forest) -> Forest {
    f.map_walks(phi)
}

pub fn phi_multiset(m: &MultisetForest) -> MultisetForest {
    MultisetForest::new(m.walks().iter().map(phi).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    /// Erasure rank, starting at 0.
    pub rank: usize,
    pub cut: Cut,
    pub cycle: Walk,
    /// Rank of the parent node; `None` for a child of the root.
    pub parent: Option<usize>,
}

/// Erased cycles of the cactus image, arranged by which later cycle (or the
/// skeleton) removed the vertex each one hangs from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TemporalTree {
    pub kappa: Walk,
    pub root: Walk,
    pub nodes: Vec<TreeNode>,
}

pub fn temporal_tree(w: &Walk) -> TemporalTree {
    let kappa = cactus_map(w);
    let trace = LawlerTrace::run(&kappa);
    let mut popped_by: HashMap<usize, usize> = HashMap::new();
    for (rank, c) in trace.cycles.iter().enumerate() {
        for &e in &c.popped_entries {
            popped_by.insert(e, rank);
        }
    }
    let nodes = trace
        .cycles
        .iter()
        .enumerate()
        .map(|(rank, c)| TreeNode {
            rank,
            cut: c.cut,
            cycle: c.cycle.clone(),
            parent: popped_by.get(&c.root_entry).copied(),
        })
        .collect();
    TemporalTree {
        kappa,
        root: trace.skeleton,
        nodes,
    }
}

impl TemporalTree {
    pub fn children(&self, parent: Option<usize>) -> Vec<usize> {
        self.nodes
            .iter()
            .filter(|n| n.parent == parent)
            .map(|n| n.rank)
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph temporal_tree {\n");
        let _ = writeln!(s, "  root [label=\"{}\", shape=box];", self.root);
        for n in &self.nodes {
            let _ = writeln!(s, "  n{} [label=\"{} #{}\"];", n.rank, n.cycle, n.rank + 1);
        }
        for n in &self.nodes {
            match n.parent {
                Some(p) => {
                    let _ = writeln!(s, "  n{} -> n{};", p, n.rank);
                }
                None => {
                    let _ = writeln!(s, "  root -> n{};", n.rank);
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Closed walk whose erased cycles, taken latest first, form a stack: each
/// meets the next exactly in the next one's root, that root differs from
/// its own, and cycles further apart are disjoint.
pub fn is_tower(w: &Walk) -> bool {
    if !w.is_closed() || w.is_trivial() {
        return false;
    }
    let trace = LawlerTrace::run(w);
    if !trace.skeleton.is_trivial() {
        return false;
    }
    let cycles: Vec<(VertexId, HashSet<VertexId>)> = trace
        .cycles
        .iter()
        .rev()
        .map(|c| (c.cycle.first(), c.cycle.vertices().iter().copied().collect()))
        .collect();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            let shared: Vec<VertexId> = cycles[i].1.intersection(&cycles[j].1).copied().collect();
            if j == i + 1 {
                let r = cycles[j].0;
                if shared != [r] || r == cycles[i].0 {
                    return false;
                }
            } else if !shared.is_empty() {
                return false;
            }
        }
    }
    true
}

/// The common root when every erased cycle of a closed walk hangs from its
/// starting vertex.
pub fn is_corolla(w: &Walk) -> Option<VertexId> {
    if !w.is_closed() || w.is_trivial() {
        return None;
    }
    let r = w.first();
    LawlerTrace::run(w)
        .cycles
        .iter()
        .all(|c| c.cycle.first() == r)
        .then_some(r)
}

/// Petals of a corolla: the pieces between consecutive returns to the root.
pub fn petals(w: &Walk) -> Result<Vec<Walk>> {
    let r = is_corolla(w).ok_or(Error::NotCorolla)?;
    let mut out = Vec::new();
    let mut start = 0;
    for (i, &v) in w.vertices().iter().enumerate().skip(1) {
        if v == r {
            out.push(w.subwalk(start, i)?);
            start = i;
        }
    }
    Ok(out)
}

fn join(petals: &[Walk]) -> Walk {
    let mut vs = vec![petals[0].first()];
    for p in petals {
        vs.extend_from_slice(&p.vertices()[1..]);
    }
    Walk::new(vs).expect("nonempty")
}

/// `w ⊗ 1 + 1 ⊗ w + sum over 0 < k < n of (first k petals) ⊗ (last n-k)`.
pub fn corolla_coproduct(w: &Walk) -> Result<LinComb<Pair>> {
    let ps = petals(w)?;
    let mut out = LinComb::zero();
    out.add_term((Forest::single(w.clone()), Forest::unit()), Coeff::one());
    out.add_term((Forest::unit(), Forest::single(w.clone())), Coeff::one());
    for k in 1..ps.len() {
        out.add_term(
            (Forest::single(join(&ps[..k])), Forest::single(join(&ps[k..]))),
            Coeff::one(),
        );
    }
    Ok(out)
}

/// Shape families closed under the Hopf coproduct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Tower,
    Corolla,
    Cactus,
}

impl Family {
    /// Membership of a single walk. Corollas are checked against the given
    /// root when one is supplied.
    pub fn contains(self, w: &Walk, root: Option<VertexId>) -> bool {
        match self {
            Family::Tower => is_tower(w),
            Family::Corolla => match (is_corolla(w), root) {
                (Some(r), Some(want)) => r == want,
                (found, None) => found.is_some(),
                (None, _) => false,
            },
            Family::Cactus => is_cactus(w),
        }
    }
}

/// `(Φ ⊗ Φ)Δ_H(w)` against `Δ_H(Φ(w))`, both in normal form.
pub fn morphism_sides(w: &Walk) -> Sides<Pair> {
    let lhs = delta_h_walk(w).map_basis(|(a, b)| (phi_forest(a), phi_forest(b)));
    let rhs = delta_h_walk(&phi(w))
        .map_basis(|(a, b)| (canonical_relabel(a), canonical_relabel(b)));
    Sides::new(lhs, rhs)
}

/// `Φ(S(w))` against `S(Φ(w))`, both in normal form.
pub fn antipode_morphism_sides(w: &Walk) -> Sides<Forest> {
    let mut s = Antipode::new();
    let lhs = s.walk(w).map_basis(phi_forest);
    let rhs = s.walk(&phi(w)).map_basis(canonical_relabel);
    Sides::new(lhs, rhs)
}
