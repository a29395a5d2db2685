//! Forests: words of walks in the tensor algebra, and their commutative
//! images in the symmetric algebra.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::walk::Walk;

/// An ordered word `w_1 | ... | w_n` of walks. The empty word is the unit.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Forest(Vec<Walk>);

impl Forest {
    pub fn unit() -> Self {
        Forest(Vec::new())
    }

    pub fn new(walks: Vec<Walk>) -> Self {
        Forest(walks)
    }

    pub fn single(w: Walk) -> Self {
        Forest(vec![w])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn walks(&self) -> &[Walk] {
        &self.0
    }

    pub fn into_walks(self) -> Vec<Walk> {
        self.0
    }

    /// Number of letters in the word.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(Walk::degree).sum()
    }

    pub fn concat(&self, other: &Forest) -> Forest {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Forest(v)
    }

    pub fn to_multiset(&self) -> MultisetForest {
        MultisetForest::new(self.0.clone())
    }

    pub fn map_walks(&self, f: impl FnMut(&Walk) -> Walk) -> Forest {
        Forest(self.0.iter().map(f).collect())
    }
}

impl From<Walk> for Forest {
    fn from(w: Walk) -> Self {
        Forest::single(w)
    }
}

impl FromIterator<Walk> for Forest {
    fn from_iter<I: IntoIterator<Item = Walk>>(iter: I) -> Self {
        Forest(iter.into_iter().collect())
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_word(&self.0, f)
    }
}

fn fmt_word(walks: &[Walk], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if walks.is_empty() {
        return f.write_str("()");
    }
    for (i, w) in walks.iter().enumerate() {
        if i > 0 {
            f.write_str("|")?;
        }
        write!(f, "{w}")?;
    }
    Ok(())
}

/// Canonical sort key for multisets: degree first, then the vertex sequence.
fn canonical_key(w: &Walk) -> (usize, &[crate::walk::VertexId]) {
    (w.degree(), w.vertices())
}

/// A forest with its letter order forgotten, stored in canonical sorted
/// order so that structural equality is multiset equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct MultisetForest(Vec<Walk>);

impl MultisetForest {
    pub fn new(mut walks: Vec<Walk>) -> Self {
        walks.sort_by(|a, b| canonical_key(a).cmp(&canonical_key(b)));
        MultisetForest(walks)
    }

    pub fn unit() -> Self {
        MultisetForest(Vec::new())
    }

    pub fn walks(&self) -> &[Walk] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(Walk::degree).sum()
    }

    /// Disjoint-union product.
    pub fn union(&self, other: &MultisetForest) -> MultisetForest {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        MultisetForest::new(v)
    }

    /// The canonical tensor representative.
    pub fn representative(&self) -> Forest {
        Forest(self.0.clone())
    }
}

impl<'de> Deserialize<'de> for MultisetForest {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Vec::<Walk>::deserialize(d).map(MultisetForest::new)
    }
}

impl fmt::Display for MultisetForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        fmt_word(&self.0, f)?;
        f.write_str("}")
    }
}
