//! Seeded random walks, forests and structured shapes.
//!
//! Every instance draws from its own ChaCha stream, selected by the instance
//! index, so results do not depend on evaluation order.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cactus::cactus_map;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::walk::{VertexId, Walk};

/// Generator for instance `index` of a run seeded with `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[derive(Debug, Clone)]
pub struct GenConfig {
    pub vertices: u64,
    pub min_len: usize,
    pub max_len: usize,
    pub count: usize,
    pub seed: u64,
    pub self_loops: bool,
    /// Replaces the complete graph when present.
    pub graph: Option<Digraph>,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            vertices: 5,
            min_len: 0,
            max_len: 12,
            count: 10,
            seed: 0,
            self_loops: true,
            graph: None,
        }
    }
}

impl GenConfig {
    pub fn validate(&self) -> Result<()> {
        if self.graph.is_none() && self.vertices == 0 {
            return Err(Error::InvalidConfig("need at least one vertex".into()));
        }
        if self.min_len > self.max_len {
            return Err(Error::InvalidConfig(format!(
                "minimum length {} exceeds maximum length {}",
                self.min_len, self.max_len
            )));
        }
        Ok(())
    }

    pub fn sampler(&self) -> Result<WalkSampler> {
        self.validate()?;
        let graph = match &self.graph {
            Some(g) => g.clone(),
            None => Digraph::complete(self.vertices, self.self_loops)?,
        };
        Ok(WalkSampler::new(&graph))
    }
}

/// Uniform start vertex, then uniform steps along out-arcs. Stops early at a
/// vertex without out-arcs.
#[derive(Debug, Clone)]
pub struct WalkSampler {
    vertices: Vec<VertexId>,
    succ: BTreeMap<VertexId, Vec<VertexId>>,
}

impl WalkSampler {
    pub fn new(graph: &Digraph) -> Self {
        WalkSampler {
            vertices: graph.vertices().collect(),
            succ: graph.successors(),
        }
    }

    pub fn walk<R: Rng>(&self, rng: &mut R, len: usize) -> Walk {
        let mut v = *self.vertices.choose(rng).expect("nonempty graph");
        let mut vs = vec![v];
        for _ in 0..len {
            match self.succ[&v].choose(rng) {
                Some(&next) => {
                    vs.push(next);
                    v = next;
                }
                None => break,
            }
        }
        Walk::new(vs).expect("nonempty")
    }

    pub fn walk_in<R: Rng>(&self, rng: &mut R, min_len: usize, max_len: usize) -> Walk {
        let len = rng.gen_range(min_len..=max_len);
        self.walk(rng, len)
    }

    /// A word of `letters` walks, each of length at most `max_len`.
    pub fn forest<R: Rng>(&self, rng: &mut R, letters: usize, max_len: usize) -> Forest {
        (0..letters).map(|_| self.walk_in(rng, 0, max_len)).collect()
    }
}

/// `count` walks, instance `i` drawn from stream `i` of the seed.
pub fn gen_walks(cfg: &GenConfig) -> Result<Vec<Walk>> {
    let sampler = cfg.sampler()?;
    Ok((0..cfg.count)
        .map(|i| {
            let mut rng = instance_rng(cfg.seed, i as u64);
            sampler.walk_in(&mut rng, cfg.min_len, cfg.max_len)
        })
        .collect())
}

/// A tower of up to `max_cycles` simple cycles, each of length at most
/// `max_cycle_len`. Every cycle uses fresh labels and is entered at a
/// non-root vertex of the one below it.
pub fn random_tower<R: Rng>(rng: &mut R, max_cycles: usize, max_cycle_len: usize) -> Walk {
    let n = rng.gen_range(1..=max_cycles.max(1));
    let mut next_label = 1u64;
    let mut fresh = || {
        let v = VertexId(next_label);
        next_label += 1;
        v
    };
    // cycles[k] lists the vertices of cycle k without the closing return
    let mut cycles: Vec<Vec<VertexId>> = Vec::with_capacity(n);
    let mut entry = Vec::with_capacity(n);
    let mut root = fresh();
    for k in 0..n {
        let last = k + 1 == n;
        let min = if last { 1 } else { 2 };
        let len = rng.gen_range(min..=max_cycle_len.max(min));
        let mut cyc = vec![root];
        cyc.extend((1..len).map(|_| fresh()));
        if !last {
            let at = rng.gen_range(1..cyc.len());
            entry.push(at);
            root = cyc[at];
        }
        cycles.push(cyc);
    }
    let mut out = Vec::new();
    emit_tower(&cycles, &entry, 0, &mut out);
    Walk::new(out).expect("nonempty")
}

fn emit_tower(cycles: &[Vec<VertexId>], entry: &[usize], k: usize, out: &mut Vec<VertexId>) {
    let cyc = &cycles[k];
    if out.is_empty() {
        out.push(cyc[0]);
    }
    for i in 0..cyc.len() {
        if entry.get(k) == Some(&i) {
            emit_tower(cycles, entry, k + 1, out);
        }
        out.push(cyc[(i + 1) % cyc.len()]);
    }
}

/// A corolla rooted at 1 with up to `max_petals` simple cycles through the
/// root, drawing the other vertices from `2..=pool+1`.
pub fn random_corolla<R: Rng>(rng: &mut R, max_petals: usize, pool: u64) -> Walk {
    let root = VertexId(1);
    let others: Vec<VertexId> = (2..=pool + 1).map(VertexId).collect();
    let n = rng.gen_range(1..=max_petals.max(1));
    let mut vs = vec![root];
    for _ in 0..n {
        let k = rng.gen_range(0..=others.len());
        vs.extend(others.choose_multiple(rng, k).copied());
        vs.push(root);
    }
    Walk::new(vs).expect("nonempty")
}

/// The cactus image of a random walk.
pub fn random_cactus<R: Rng>(rng: &mut R, sampler: &WalkSampler, max_len: usize) -> Walk {
    cactus_map(&sampler.walk_in(rng, 0, max_len))
}
