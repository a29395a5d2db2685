//! Admissible cuts, their time order, and the families of cuts the
//! coproducts and the antipode sum over.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::loop_erasure::{les, Cut};
use crate::walk::{Erasure, Walk};

/// Pairwise non-overlapping admissible cuts in increasing position order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ExtCut(Vec<Cut>);

impl ExtCut {
    /// Sorts by position and checks that the cuts do not overlap. Does not
    /// check admissibility, which depends on the walk.
    pub fn new(mut cuts: Vec<Cut>) -> Result<Self> {
        if cuts.is_empty() {
            return Err(Error::EmptyWord);
        }
        cuts.sort();
        for p in cuts.windows(2) {
            if p[0].end >= p[1].start {
                return Err(Error::OverlappingCuts(p[0], p[1]));
            }
        }
        Ok(ExtCut(cuts))
    }

    pub fn cuts(&self) -> &[Cut] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w_c`: the walk with every cut removed.
    pub fn remainder(&self, walk: &Walk) -> Walk {
        let mut e = Erasure::new(walk);
        for &c in &self.0 {
            e.erase(c);
        }
        e.remainder()
    }

    /// `w^c`: the cut subwalks, in position order.
    pub fn pieces(&self, walk: &Walk) -> Forest {
        self.0.iter().map(|&c| walk.segment(c)).collect()
    }
}

impl fmt::Display for ExtCut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Distinct admissible cuts sorted by time order. Members may nest.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Chain(Vec<Cut>);

impl Chain {
    pub fn cuts(&self) -> &[Cut] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The tensor `w_{c1..cn} ⊗ (w_{c1..c(n-1)})^{cn} ⊗ ... ⊗ w^{c1}`,
    /// returned as a word of walks. Removals accumulate in original
    /// coordinates; each segment is read over the positions that survive
    /// the earlier members.
    pub fn tensor(&self, walk: &Walk) -> Forest {
        let mut e = Erasure::new(walk);
        let mut pieces = Vec::with_capacity(self.0.len() + 1);
        for &c in &self.0 {
            pieces.push(e.segment(c));
            e.erase(c);
        }
        pieces.push(e.remainder());
        pieces.reverse();
        Forest::new(pieces)
    }
}

/// An element of `EAdC ∪ {empty, total}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PlusCut {
    /// Cuts nothing: `w ⊗ 1`.
    Empty,
    /// Cuts the whole walk: `1 ⊗ w`.
    Total,
    Ext(ExtCut),
}

impl PlusCut {
    /// Left and right factor of the corresponding coproduct term.
    pub fn split(&self, walk: &Walk) -> (Forest, Forest) {
        match self {
            PlusCut::Empty => (Forest::single(walk.clone()), Forest::unit()),
            PlusCut::Total => (Forest::unit(), Forest::single(walk.clone())),
            PlusCut::Ext(e) => (Forest::single(e.remainder(walk)), e.pieces(walk)),
        }
    }
}

/// `(l, l')` in `les` with `l <= k < k' < l'`.
fn context_in(les: &BTreeSet<Cut>, c: Cut) -> Vec<Cut> {
    les.iter().copied().filter(|d| c.strictly_inside(d)).collect()
}

fn min_in(les: &BTreeSet<Cut>, c: Cut) -> Option<Cut> {
    les.iter()
        .copied()
        .filter(|d| c.strictly_inside(d))
        .min_by_key(|d| (d.len(), *d))
}

fn admissible_in(walk: &Walk, les: &BTreeSet<Cut>, c: Cut) -> bool {
    if !les.contains(&c) || (c.start == 0 && c.end == walk.len()) {
        return false;
    }
    match min_in(les, c) {
        None => true,
        Some(m) => {
            let root = walk.at(c.start);
            !walk.vertices()[c.end + 1..=m.end].contains(&root)
        }
    }
}

fn require_les(walk: &Walk, c: Cut) -> Result<BTreeSet<Cut>> {
    walk.check_cut_range(c)?;
    let sections = les(walk);
    if sections.contains(&c) {
        Ok(sections)
    } else {
        Err(Error::NotLoopErased(c))
    }
}

/// Loop-erased sections strictly containing `c`.
pub fn temporal_context(walk: &Walk, c: Cut) -> Result<Vec<Cut>> {
    let sections = require_les(walk, c)?;
    Ok(context_in(&sections, c))
}

/// The smallest section of the temporal context, if any.
pub fn temporal_min(walk: &Walk, c: Cut) -> Result<Option<Cut>> {
    let sections = require_les(walk, c)?;
    Ok(min_in(&sections, c))
}

pub fn is_admissible(walk: &Walk, c: Cut) -> bool {
    walk.check_cut_range(c).is_ok() && admissible_in(walk, &les(walk), c)
}

/// Sort key realizing the time order on admissible cuts.
fn time_key(c: &Cut) -> (usize, std::cmp::Reverse<usize>) {
    (c.end, std::cmp::Reverse(c.start))
}

/// Admissible cuts, earliest first.
pub fn adc(walk: &Walk) -> Vec<Cut> {
    let sections = les(walk);
    let mut out: Vec<Cut> = sections
        .iter()
        .copied()
        .filter(|&c| admissible_in(walk, &sections, c))
        .collect();
    out.sort_by_key(time_key);
    out
}

/// `l <= k < k' <= l'` or `k < k' < l < l'`.
pub fn time_precedes(c: Cut, d: Cut) -> bool {
    (d.start <= c.start && c.end <= d.end) || c.end < d.start
}

pub fn time_leq(walk: &Walk, c: Cut, d: Cut) -> Result<bool> {
    let a = adc(walk);
    for x in [c, d] {
        if !a.contains(&x) {
            return Err(Error::NotAdmissible(x));
        }
    }
    Ok(time_precedes(c, d))
}

/// All extended admissible cuts. Members are in position order; the list is
/// in depth-first order over position-sorted admissible cuts.
pub fn eadc(walk: &Walk) -> Vec<ExtCut> {
    let mut a = adc(walk);
    a.sort();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    extend_disjoint(&a, 0, &mut cur, &mut out);
    out
}

fn extend_disjoint(a: &[Cut], from: usize, cur: &mut Vec<Cut>, out: &mut Vec<ExtCut>) {
    for i in from..a.len() {
        if cur.last().is_some_and(|l: &Cut| a[i].start <= l.end) {
            continue;
        }
        cur.push(a[i]);
        out.push(ExtCut(cur.clone()));
        extend_disjoint(a, i + 1, cur, out);
        cur.pop();
    }
}

pub fn eadc_n(walk: &Walk, n: usize) -> Vec<ExtCut> {
    eadc(walk).into_iter().filter(|e| e.len() == n).collect()
}

/// `EAdC` followed by the two sentinels.
pub fn eadc_plus(walk: &Walk) -> Vec<PlusCut> {
    let mut out = vec![PlusCut::Empty, PlusCut::Total];
    out.extend(eadc(walk).into_iter().map(PlusCut::Ext));
    out
}

/// Every nonempty subset of the admissible cuts, each in time order. The
/// list is sorted by member sequence.
pub fn chains(walk: &Walk) -> Vec<Chain> {
    let a = adc(walk);
    assert!(a.len() < usize::BITS as usize, "too many admissible cuts");
    let mut out: Vec<Chain> = (1usize..1 << a.len())
        .map(|mask| {
            Chain(
                a.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &c)| c)
                    .collect(),
            )
        })
        .collect();
    out.sort();
    out
}
