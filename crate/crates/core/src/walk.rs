//! Walks as vertex sequences and the elementary surgery on them.
//!
//! A walk `w_0 w_1 ... w_l` is stored as its vertex sequence; its length (and
//! Hopf degree) is the number of steps `l`. All index arguments refer to
//! positions in that sequence.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::loop_erasure::Cut;

/// Vertex label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u64);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u64> for VertexId {
    fn from(v: u64) -> Self {
        VertexId(v)
    }
}

/// Shape of a walk with respect to self-intersection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum WalkKind {
    /// Self-avoiding walk: all vertices distinct (includes trivial walks).
    Saw,
    /// Self-avoiding polygon: a simple cycle of positive length.
    Sap,
    Other,
}

impl fmt::Display for WalkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WalkKind::Saw => "SAW",
            WalkKind::Sap => "SAP",
            WalkKind::Other => "other",
        })
    }
}

/// A nonempty sequence of vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Walk(Vec<VertexId>);

impl TryFrom<Vec<u64>> for Walk {
    type Error = Error;

    fn try_from(labels: Vec<u64>) -> Result<Self> {
        Walk::new(labels.into_iter().map(VertexId).collect())
    }
}

impl From<Walk> for Vec<u64> {
    fn from(w: Walk) -> Self {
        w.0.into_iter().map(|v| v.0).collect()
    }
}

impl Walk {
    pub fn new(vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyWalk);
        }
        Ok(Walk(vertices))
    }

    /// Builds a walk from raw labels. Panics on an empty slice.
    pub fn from_labels(labels: &[u64]) -> Self {
        Walk::new(labels.iter().copied().map(VertexId).collect()).expect("nonempty walk")
    }

    /// Builds a walk from a compact digit string such as `"12324522"`.
    /// Panics on anything but ASCII digits; intended for literals and tests.
    pub fn from_digits(digits: &str) -> Self {
        let labels: Vec<u64> = digits
            .chars()
            .map(|c| c.to_digit(10).expect("digit") as u64)
            .collect();
        Walk::from_labels(&labels)
    }

    pub fn trivial(v: VertexId) -> Self {
        Walk(vec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn labels(&self) -> Vec<u64> {
        self.0.iter().map(|v| v.0).collect()
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    /// Walks are never empty; a length-0 walk is the trivial walk on `w_0`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_trivial(&self) -> bool {
        self.0.len() == 1
    }

    pub fn degree(&self) -> usize {
        self.len()
    }

    pub fn first(&self) -> VertexId {
        self.0[0]
    }

    pub fn last(&self) -> VertexId {
        self.0[self.0.len() - 1]
    }

    pub fn at(&self, i: usize) -> VertexId {
        self.0[i]
    }

    pub fn is_closed(&self) -> bool {
        self.first() == self.last()
    }

    /// Set of distinct vertices visited.
    pub fn support(&self) -> BTreeSet<VertexId> {
        self.0.iter().copied().collect()
    }

    /// Multiset of traversed arcs, in traversal order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.0.windows(2).map(|p| (p[0], p[1])).collect()
    }

    /// The subwalk `w_k ... w_k'`.
    pub fn subwalk(&self, k: usize, k_end: usize) -> Result<Walk> {
        if k > k_end || k_end > self.len() {
            return Err(Error::BadRange {
                start: k,
                end: k_end,
                len: self.len(),
            });
        }
        Ok(Walk(self.0[k..=k_end].to_vec()))
    }

    /// Segment of a cut, which must already be known to fit the walk.
    pub(crate) fn segment(&self, cut: Cut) -> Walk {
        Walk(self.0[cut.start..=cut.end].to_vec())
    }

    /// What remains after deleting `w_{k+1} ... w_{k'}` for every cut.
    ///
    /// Cuts are given in this walk's coordinates, must be closed and pairwise
    /// non-overlapping (`k_1 < k_1' < k_2 < ...` after sorting).
    pub fn remainder(&self, cuts: &[Cut]) -> Result<Walk> {
        let mut sorted = cuts.to_vec();
        sorted.sort();
        for &c in &sorted {
            self.check_closed_cut(c)?;
        }
        for pair in sorted.windows(2) {
            if pair[0].end >= pair[1].start {
                return Err(Error::OverlappingCuts(pair[0], pair[1]));
            }
        }
        let mut erased = Erasure::new(self);
        for &c in &sorted {
            erased.erase(c);
        }
        Ok(erased.remainder())
    }

    pub(crate) fn check_cut_range(&self, c: Cut) -> Result<()> {
        if c.start >= c.end || c.end > self.len() {
            return Err(Error::BadRange {
                start: c.start,
                end: c.end,
                len: self.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_closed_cut(&self, c: Cut) -> Result<()> {
        self.check_cut_range(c)?;
        if self.0[c.start] != self.0[c.end] {
            return Err(Error::OpenCut(c));
        }
        Ok(())
    }

    pub fn classify(&self) -> WalkKind {
        let n = self.0.len();
        if all_distinct(&self.0) {
            WalkKind::Saw
        } else if n >= 2 && self.is_closed() && all_distinct(&self.0[..n - 1]) {
            WalkKind::Sap
        } else {
            WalkKind::Other
        }
    }

    /// Applies a relabeling to every vertex.
    pub fn relabel(&self, mut f: impl FnMut(VertexId) -> VertexId) -> Walk {
        Walk(self.0.iter().map(|&v| f(v)).collect())
    }
}

fn all_distinct(vs: &[VertexId]) -> bool {
    let mut seen = BTreeSet::new();
    vs.iter().all(|v| seen.insert(*v))
}

impl fmt::Display for Walk {
    /// Compact digits when every label is a single digit, comma-separated
    /// labels otherwise. A trivial walk with a multi-digit label gets a
    /// trailing comma so that it parses back as one vertex.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|v| v.0 < 10) {
            for v in &self.0 {
                write!(f, "{}", v.0)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.0.to_string()).collect();
            write!(f, "{}", parts.join(","))?;
            if self.0.len() == 1 {
                f.write_str(",")?;
            }
            Ok(())
        }
    }
}

/// Tracks which positions of a walk survive a sequence of (possibly nested)
/// segment removals. Positions keep their original coordinates throughout.
#[derive(Debug, Clone)]
pub(crate) struct Erasure<'a> {
    walk: &'a Walk,
    removed: Vec<bool>,
}

impl<'a> Erasure<'a> {
    pub(crate) fn new(walk: &'a Walk) -> Self {
        Erasure {
            walk,
            removed: vec![false; walk.0.len()],
        }
    }

    /// Removes positions `k+1 ..= k'`.
    pub(crate) fn erase(&mut self, cut: Cut) {
        for r in &mut self.removed[cut.start + 1..=cut.end] {
            *r = true;
        }
    }

    pub(crate) fn remainder(&self) -> Walk {
        Walk(
            self.walk
                .0
                .iter()
                .zip(&self.removed)
                .filter(|(_, &r)| !r)
                .map(|(&v, _)| v)
                .collect(),
        )
    }

    /// Surviving positions of `k ..= k'`, read in order.
    pub(crate) fn segment(&self, cut: Cut) -> Walk {
        Walk(
            (cut.start..=cut.end)
                .filter(|&i| !self.removed[i])
                .map(|i| self.walk.0[i])
                .collect(),
        )
    }
}
