use std::collections::HashMap;

use crate::cuts::{chains, eadc};
use crate::forest::{Forest, MultisetForest};
use crate::lincomb::{int, LinComb};
use crate::walk::Walk;

/// Antipode computed from the Hopf axiom `m(Id ⊗ S)Δ = ε`, memoized per
/// walk for the lifetime of the value.
#[derive(Debug, Default)]
pub struct Antipode {
    memo: HashMap<Walk, LinComb<Forest>>,
}

impl Antipode {
    pub fn new() -> Self {
        Self::default()
    }

    /// `S(w) = -w - sum over extended cuts of w_c | S(w^c)`.
    pub fn walk(&mut self, w: &Walk) -> LinComb<Forest> {
        if let Some(s) = self.memo.get(w) {
            return s.clone();
        }
        let mut s = LinComb::term(Forest::single(w.clone()), int(-1));
        for e in eadc(w) {
            let rest = LinComb::basis(Forest::single(e.remainder(w)));
            let tail = self.forest(&e.pieces(w));
            s -= &rest.concat(&tail);
        }
        self.memo.insert(w.clone(), s.clone());
        s
    }

    /// Antimorphism: `S(f_1|...|f_n) = S(f_n)|...|S(f_1)`.
    pub fn forest(&mut self, f: &Forest) -> LinComb<Forest> {
        let mut acc = LinComb::one();
        for w in f.walks().iter().rev() {
            acc = acc.concat(&self.walk(w));
        }
        acc
    }

    pub fn apply(&mut self, x: &LinComb<Forest>) -> LinComb<Forest> {
        x.flat_map(|f| self.forest(f))
    }
}

pub fn antipode_recursive(x: &LinComb<Forest>) -> LinComb<Forest> {
    Antipode::new().apply(x)
}

/// Closed chain formula: `-w - sum over chains e of (-1)^|e| T_e`.
pub fn antipode_closed(w: &Walk) -> LinComb<Forest> {
    let mut s = LinComb::term(Forest::single(w.clone()), int(-1));
    for ch in chains(w) {
        let sign = if ch.len() % 2 == 0 { int(-1) } else { int(1) };
        s.add_term(ch.tensor(w), sign);
    }
    s
}

/// The same formula read in the symmetric algebra.
pub fn antipode_sym(w: &Walk) -> LinComb<MultisetForest> {
    antipode_closed(w).to_multiset()
}

/// `S` of a single walk by recursion; convenience for callers holding a walk.
pub fn antipode_of_walk(w: &Walk) -> LinComb<Forest> {
    Antipode::new().walk(w)
}
