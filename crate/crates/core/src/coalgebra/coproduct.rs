use std::collections::HashMap;

use num_traits::One;

use crate::cuts::{adc, eadc, eadc_plus, PlusCut};
use crate::error::{Error, Result};
use crate::forest::{Forest, MultisetForest};
use crate::lincomb::{Coeff, LinComb};
use crate::loop_erasure::Cut;
use crate::walk::{Erasure, Walk};

pub type Pair = (Forest, Forest);
pub type Triple = (Forest, Forest, Forest);

/// Coefficient of the unit forest.
pub fn counit(x: &LinComb<Forest>) -> Coeff {
    x.coeff(&Forest::unit())
}

/// `a ⊗ b -> b ⊗ a`.
pub fn twist<A: Ord + Clone, B: Ord + Clone>(x: &LinComb<(A, B)>) -> LinComb<(B, A)> {
    x.map_basis(|(a, b)| (b.clone(), a.clone()))
}

/// Multiplication `a ⊗ b -> a|b`.
pub fn multiply(x: &LinComb<Pair>) -> LinComb<Forest> {
    x.map_basis(|(a, b)| a.concat(b))
}

/// `(op ⊗ Id)` on a two-fold tensor.
pub fn apply_left(x: &LinComb<Pair>, mut op: impl FnMut(&Forest) -> LinComb<Pair>) -> LinComb<Triple> {
    x.flat_map(|(a, b)| op(a).map_basis(|(p, q)| (p.clone(), q.clone(), b.clone())))
}

/// `(Id ⊗ op)` on a two-fold tensor.
pub fn apply_right(x: &LinComb<Pair>, mut op: impl FnMut(&Forest) -> LinComb<Pair>) -> LinComb<Triple> {
    x.flat_map(|(a, b)| op(b).map_basis(|(p, q)| (a.clone(), p.clone(), q.clone())))
}

fn single_cut(walk: &Walk, c: Cut) -> (Walk, Walk) {
    let mut e = Erasure::new(walk);
    e.erase(c);
    (e.remainder(), walk.segment(c))
}

/// `sum over admissible c of w_c ⊗ w^c`.
pub fn delta_cp(walk: &Walk) -> LinComb<(Walk, Walk)> {
    adc(walk)
        .into_iter()
        .map(|c| (single_cut(walk, c), Coeff::one()))
        .collect()
}

/// Brace component: the terms of the Hopf coproduct with exactly `n` cuts.
pub fn delta_n(walk: &Walk, n: usize) -> Result<LinComb<(Walk, Forest)>> {
    if n == 0 {
        return Err(Error::ZeroBraceIndex);
    }
    Ok(eadc(walk)
        .into_iter()
        .filter(|e| e.len() == n)
        .map(|e| ((e.remainder(walk), e.pieces(walk)), Coeff::one()))
        .collect())
}

/// `1 ⊗ w + w ⊗ 1 + sum over extended cuts of w_c ⊗ w^c`.
pub fn delta_h_walk(walk: &Walk) -> LinComb<Pair> {
    eadc_plus(walk)
        .iter()
        .map(|p| (p.split(walk), Coeff::one()))
        .collect()
}

/// Component-wise concatenation `(a ⊗ b)(a' ⊗ b') = a|a' ⊗ b|b'`.
pub fn pair_product(x: &LinComb<Pair>, y: &LinComb<Pair>) -> LinComb<Pair> {
    x.tensor(y, |(a, b), (a2, b2)| (a.concat(a2), b.concat(b2)))
}

/// Hopf coproduct on a word, by multiplicativity.
pub fn delta_h_forest(f: &Forest) -> LinComb<Pair> {
    HopfCache::default().forest(f)
}

pub fn delta_h(x: &LinComb<Forest>) -> LinComb<Pair> {
    let mut cache = HopfCache::default();
    x.flat_map(|f| cache.forest(f))
}

/// Coproduct on the symmetric algebra through the canonical representative.
pub fn delta_h_sym(x: &LinComb<MultisetForest>) -> LinComb<(MultisetForest, MultisetForest)> {
    let mut cache = HopfCache::default();
    x.flat_map(|m| push_sym(&cache.forest(&m.representative())))
}

/// Image of a two-fold tensor in the symmetric algebra.
pub fn push_sym(x: &LinComb<Pair>) -> LinComb<(MultisetForest, MultisetForest)> {
    x.map_basis(|(a, b)| (a.to_multiset(), b.to_multiset()))
}

/// Memoizes the per-walk Hopf coproduct across one computation.
#[derive(Debug, Default)]
pub struct HopfCache {
    walks: HashMap<Walk, LinComb<Pair>>,
}

impl HopfCache {
    pub fn walk(&mut self, w: &Walk) -> LinComb<Pair> {
        if let Some(x) = self.walks.get(w) {
            return x.clone();
        }
        let x = delta_h_walk(w);
        self.walks.insert(w.clone(), x.clone());
        x
    }

    pub fn forest(&mut self, f: &Forest) -> LinComb<Pair> {
        let mut acc = LinComb::basis((Forest::unit(), Forest::unit()));
        for w in f.walks() {
            acc = pair_product(&acc, &self.walk(w));
        }
        acc
    }
}

/// Which half of the codendriform splitting to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Half {
    Prec,
    Succ,
}

/// Sums over one `EAdC₊` choice per letter; the half is decided by whether
/// the first letter is cut totally.
fn dendriform_half(f: &Forest, half: Half) -> Result<LinComb<Pair>> {
    let letters = f.walks();
    if letters.is_empty() {
        return Err(Error::EmptyWord);
    }
    let choices: Vec<Vec<(Forest, Forest)>> = letters
        .iter()
        .enumerate()
        .map(|(i, w)| {
            eadc_plus(w)
                .iter()
                .filter(|p| i > 0 || (**p == PlusCut::Total) == (half == Half::Succ))
                .map(|p| p.split(w))
                .collect()
        })
        .collect();

    let mut out = LinComb::zero();
    let mut idx = vec![0usize; choices.len()];
    'outer: loop {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (opts, &i) in choices.iter().zip(&idx) {
            left.extend_from_slice(opts[i].0.walks());
            right.extend_from_slice(opts[i].1.walks());
        }
        out.add_term((Forest::new(left), Forest::new(right)), Coeff::one());
        for pos in (0..idx.len()).rev() {
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                continue 'outer;
            }
            idx[pos] = 0;
        }
        break;
    }
    Ok(out)
}

/// Terms whose first letter is not cut totally.
pub fn delta_prec(f: &Forest) -> Result<LinComb<Pair>> {
    dendriform_half(f, Half::Prec)
}

/// Terms whose first letter is cut totally.
pub fn delta_succ(f: &Forest) -> Result<LinComb<Pair>> {
    dendriform_half(f, Half::Succ)
}
