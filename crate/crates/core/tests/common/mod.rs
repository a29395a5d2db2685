#![allow(dead_code)]

use walkhopf::{parse_forest, Cut, Forest, LinComb, Pair, Walk};

pub fn w(s: &str) -> Walk {
    Walk::from_digits(s)
}

pub fn f(s: &str) -> Forest {
    parse_forest(s).unwrap()
}

pub fn cut(k: usize, k_end: usize) -> Cut {
    Cut::new(k, k_end)
}

/// Sum of `a⊗b` terms, each with coefficient one.
pub fn pairs(terms: &[&str]) -> LinComb<Pair> {
    let mut out = LinComb::zero();
    for t in terms {
        let (a, b) = t.split_once('⊗').unwrap();
        out = out + LinComb::basis((f(a), f(b)));
    }
    out
}

pub fn triples(terms: &[&str]) -> LinComb<(Forest, Forest, Forest)> {
    let mut out = LinComb::zero();
    for t in terms {
        let parts: Vec<&str> = t.split('⊗').collect();
        out = out + LinComb::basis((f(parts[0]), f(parts[1]), f(parts[2])));
    }
    out
}

pub fn walk_pairs(terms: &[&str]) -> LinComb<(Walk, Walk)> {
    let mut out = LinComb::zero();
    for t in terms {
        let (a, b) = t.split_once('⊗').unwrap();
        out = out + LinComb::basis((w(a), w(b)));
    }
    out
}
