//! Chronological loop erasure.
//!
//! A single left-to-right pass over the walk keeps the current loop-erased
//! walk as a stack. Whenever the next vertex is already on the stack, the
//! cycle it closes is erased. Along the way we record:
//!
//! * every loop-erased section, built incrementally: the closing cycle
//!   `(k', k+1)` itself, and `(k'', k+1)` for every section `(k'', k')`
//!   already recorded that ends where the new cycle starts;
//! * every erased simple cycle, in erasure order, with its vertex sequence as
//!   read off the stack at the time of erasure.
//!
//! Cut coordinates always refer to positions in the original walk.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::walk::{VertexId, Walk};

/// Index pair `(k, k')` into a walk; the section `w_k ... w_k'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Cut {
    pub start: usize,
    pub end: usize,
}

impl Cut {
    pub const fn new(start: usize, end: usize) -> Self {
        Cut { start, end }
    }

    /// Number of steps inside the section.
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }

    /// `self` lies within `other` (non-strict on both ends).
    pub fn within(&self, other: &Cut) -> bool {
        other.start <= self.start && self.end <= other.end
    }

    /// `other` strictly contains `self` in the temporal-context sense:
    /// `l <= k < k' < l'`.
    pub fn strictly_inside(&self, other: &Cut) -> bool {
        other.start <= self.start && self.end < other.end
    }

    /// `k < k' < l < l'` or the reverse: no shared position.
    pub fn disjoint(&self, other: &Cut) -> bool {
        self.end < other.start || other.end < self.start
    }
}

impl From<[usize; 2]> for Cut {
    fn from([start, end]: [usize; 2]) -> Self {
        Cut { start, end }
    }
}

impl From<Cut> for [usize; 2] {
    fn from(c: Cut) -> Self {
        [c.start, c.end]
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.start, self.end)
    }
}

/// One simple cycle removed by the procedure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErasedCycle {
    /// `(k', k+1)`: the cycle closes at step `k+1` on the stack entry last
    /// visited at position `k'`.
    pub cut: Cut,
    /// The cycle as it stood on the loop-erased walk when it was erased.
    pub cycle: Walk,
    /// Steps (positions `1..=l`) consumed by this cycle.
    pub steps: Vec<usize>,
    /// Identifier (the position that pushed it) of the stack entry the cycle
    /// is rooted at.
    pub root_entry: usize,
    /// Identifiers of the stack entries popped by this erasure.
    pub popped_entries: Vec<usize>,
}

#[derive(Debug, Clone, Copy)]
struct Entry {
    vertex: VertexId,
    /// Latest position at which the entry's vertex was visited.
    position: usize,
    /// Position whose step created the entry; 0 for the initial vertex.
    pushed_at: usize,
}

/// Full record of one loop-erasure pass.
#[derive(Debug, Clone)]
pub struct LawlerTrace {
    pub les: BTreeSet<Cut>,
    pub cycles: Vec<ErasedCycle>,
    pub skeleton: Walk,
    /// Steps that survive into the skeleton.
    pub skeleton_steps: Vec<usize>,
}

impl LawlerTrace {
    pub fn run(walk: &Walk) -> Self {
        Self::run_prefix(walk, walk.len())
    }

    /// Processes `w_0 ... w_upto` only.
    fn run_prefix(walk: &Walk, upto: usize) -> Self {
        let vs = walk.vertices();
        let mut stack = vec![Entry {
            vertex: vs[0],
            position: 0,
            pushed_at: 0,
        }];
        let mut on_stack: HashMap<VertexId, usize> = HashMap::from([(vs[0], 0)]);
        let mut last_seen: HashMap<VertexId, usize> = HashMap::from([(vs[0], 0)]);
        // sections grouped by their end position
        let mut ending_at: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut les = BTreeSet::new();
        let mut cycles = Vec::new();

        for (next, &v) in vs.iter().enumerate().take(upto + 1).skip(1) {
            match on_stack.get(&v).copied() {
                Some(depth) => {
                    let anchor = last_seen[&v];
                    debug_assert_eq!(anchor, stack[depth].position);

                    let popped: Vec<Entry> = stack.drain(depth + 1..).collect();
                    for e in &popped {
                        on_stack.remove(&e.vertex);
                    }
                    let mut cycle: Vec<VertexId> = Vec::with_capacity(popped.len() + 2);
                    cycle.push(v);
                    cycle.extend(popped.iter().map(|e| e.vertex));
                    cycle.push(v);
                    let mut steps: Vec<usize> = popped.iter().map(|e| e.pushed_at).collect();
                    steps.push(next);
                    cycles.push(ErasedCycle {
                        cut: Cut::new(anchor, next),
                        cycle: Walk::new(cycle).expect("nonempty"),
                        steps,
                        root_entry: stack[depth].pushed_at,
                        popped_entries: popped.iter().map(|e| e.pushed_at).collect(),
                    });
                    stack[depth].position = next;

                    let mut starts = vec![anchor];
                    if let Some(earlier) = ending_at.get(&anchor) {
                        starts.extend(earlier.iter().copied());
                    }
                    for &s in &starts {
                        les.insert(Cut::new(s, next));
                    }
                    ending_at.insert(next, starts);
                }
                None => {
                    on_stack.insert(v, stack.len());
                    stack.push(Entry {
                        vertex: v,
                        position: next,
                        pushed_at: next,
                    });
                }
            }
            last_seen.insert(v, next);
        }

        let skeleton = Walk::new(stack.iter().map(|e| e.vertex).collect()).expect("nonempty");
        let skeleton_steps = stack.iter().skip(1).map(|e| e.pushed_at).collect();
        LawlerTrace {
            les,
            cycles,
            skeleton,
            skeleton_steps,
        }
    }
}

/// The loop-erased walk after processing `w_0 ... w_k`.
pub fn lew(walk: &Walk, k: usize) -> Result<Walk> {
    if k > walk.len() {
        return Err(Error::BadRange {
            start: 0,
            end: k,
            len: walk.len(),
        });
    }
    Ok(LawlerTrace::run_prefix(walk, k).skeleton)
}

/// All loop-erased sections.
pub fn les(walk: &Walk) -> BTreeSet<Cut> {
    LawlerTrace::run(walk).les
}

/// Erased simple cycles in the order they were erased.
pub fn erased_cycles(walk: &Walk) -> Vec<ErasedCycle> {
    LawlerTrace::run(walk).cycles
}

/// The self-avoiding walk left once every cycle is erased.
pub fn skeleton(walk: &Walk) -> Walk {
    LawlerTrace::run(walk).skeleton
}

pub fn is_les_section(walk: &Walk, cut: Cut) -> Result<bool> {
    walk.check_closed_cut(cut)?;
    Ok(les(walk).contains(&cut))
}
