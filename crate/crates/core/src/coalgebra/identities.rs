//! The algebraic identities, each evaluated to both of its sides so that a
//! failure can be reported with the evidence.

use super::antipode::Antipode;
use super::coproduct::{
    apply_left, apply_right, counit, delta_cp, delta_h, delta_n, delta_prec, delta_succ,
    pair_product, push_sym, HopfCache, Pair, Triple,
};
use crate::error::Result;
use crate::forest::{Forest, MultisetForest};
use crate::lincomb::LinComb;
use crate::walk::Walk;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sides<B: Ord> {
    pub lhs: LinComb<B>,
    pub rhs: LinComb<B>,
}

impl<B: Ord> Sides<B> {
    pub fn new(lhs: LinComb<B>, rhs: LinComb<B>) -> Self {
        Sides { lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub type WalkTriple = (Walk, Walk, Walk);

/// `L = (Δ_CP ⊗ Id - Id ⊗ Δ_CP) Δ_CP(w)` against `(Id ⊗ τ) L`.
pub fn copre_lie_sides(w: &Walk) -> Sides<WalkTriple> {
    let l = associator(w);
    let twisted = l.map_basis(|(a, b, c)| (a.clone(), c.clone(), b.clone()));
    Sides::new(l, twisted)
}

fn associator(w: &Walk) -> LinComb<WalkTriple> {
    let d = delta_cp(w);
    let left = d.flat_map(|(a, b)| delta_cp(a).map_basis(|(p, q)| (p.clone(), q.clone(), b.clone())));
    let right = d.flat_map(|(a, b)| delta_cp(b).map_basis(|(p, q)| (a.clone(), p.clone(), q.clone())));
    left - right
}

pub fn copre_lie_check(w: &Walk) -> bool {
    copre_lie_sides(w).holds()
}

/// `(Δ_H ⊗ Id) Δ_H` against `(Id ⊗ Δ_H) Δ_H`.
pub fn coassoc_sides(x: &LinComb<Forest>) -> Sides<Triple> {
    let mut cache = HopfCache::default();
    let d = x.flat_map(|f| cache.forest(f));
    let lhs = apply_left(&d, |f| cache.forest(f));
    let rhs = apply_right(&d, |f| cache.forest(f));
    Sides::new(lhs, rhs)
}

pub fn coassoc_check(x: &LinComb<Forest>) -> bool {
    coassoc_sides(x).holds()
}

/// `(ε ⊗ Id) Δ_H` and `(Id ⊗ ε) Δ_H`, each against the input.
pub fn counit_sides(x: &LinComb<Forest>) -> [Sides<Forest>; 2] {
    let d = delta_h(x);
    let left = d.flat_map(|(a, b)| {
        LinComb::term(b.clone(), counit(&LinComb::basis(a.clone())))
    });
    let right = d.flat_map(|(a, b)| {
        LinComb::term(a.clone(), counit(&LinComb::basis(b.clone())))
    });
    [Sides::new(left, x.clone()), Sides::new(right, x.clone())]
}

/// `m(Id ⊗ S)Δ_H(x)` and `m(S ⊗ Id)Δ_H(x)`, each against `ε(x) 1`.
pub fn convolution_sides(x: &LinComb<Forest>) -> [Sides<Forest>; 2] {
    let mut s = Antipode::new();
    let d = delta_h(x);
    let unit = LinComb::term(Forest::unit(), counit(x));
    let right = d.flat_map(|(a, b)| LinComb::basis(a.clone()).concat(&s.forest(b)));
    let left = d.flat_map(|(a, b)| s.forest(a).concat(&LinComb::basis(b.clone())));
    [Sides::new(right, unit.clone()), Sides::new(left, unit)]
}

pub fn convolution_check(x: &LinComb<Forest>) -> bool {
    convolution_sides(x).iter().all(Sides::holds)
}

/// Every codendriform identity for one word.
#[derive(Debug, Clone)]
pub struct CodendriformSides {
    /// The three compatibility identities, in the order
    /// succ/succ, prec/succ, prec/prec.
    pub compatibility: Vec<(&'static str, Sides<Triple>)>,
    /// `Δ_≺ + Δ_≻ = Δ_H`, then the split rules `Δ_≺(x|y) = Δ_≺(x)Δ_H(y)`
    /// and `Δ_≻(x|y) = Δ_≻(x)Δ_H(y)` for every proper split of the word.
    pub products: Vec<(String, Sides<Pair>)>,
}

impl CodendriformSides {
    pub fn holds(&self) -> bool {
        self.compatibility.iter().all(|(_, s)| s.holds())
            && self.products.iter().all(|(_, s)| s.holds())
    }
}

fn prec(f: &Forest) -> LinComb<Pair> {
    delta_prec(f).expect("nonempty factor")
}

fn succ(f: &Forest) -> LinComb<Pair> {
    delta_succ(f).expect("nonempty factor")
}

pub fn codendriform_sides(f: &Forest) -> Result<CodendriformSides> {
    let p = delta_prec(f)?;
    let s = delta_succ(f)?;
    let mut cache = HopfCache::default();
    let mut h = |g: &Forest| cache.forest(g);

    // Factors fed to Δ_≺ and Δ_≻ below are never empty: a Δ_≺ term keeps
    // a nonempty left factor and a Δ_≻ term a nonempty right factor.
    let compatibility = vec![
        (
            "(ΔH⊗Id)Δ≻ = (Id⊗Δ≻)Δ≻",
            Sides::new(apply_left(&s, &mut h), apply_right(&s, succ)),
        ),
        (
            "(Δ≻⊗Id)Δ≺ = (Id⊗Δ≺)Δ≻",
            Sides::new(apply_left(&p, succ), apply_right(&s, prec)),
        ),
        (
            "(Δ≺⊗Id)Δ≺ = (Id⊗ΔH)Δ≺",
            Sides::new(apply_left(&p, prec), apply_right(&p, &mut h)),
        ),
    ];

    let mut products = vec![(
        "Δ≺ + Δ≻ = ΔH".to_string(),
        Sides::new(p.clone() + s.clone(), h(f)),
    )];
    let walks = f.walks();
    for cut in 1..walks.len() {
        let x = Forest::new(walks[..cut].to_vec());
        let y = Forest::new(walks[cut..].to_vec());
        let hy = h(&y);
        products.push((
            format!("Δ≺({x}|{y}) = Δ≺({x})ΔH({y})"),
            Sides::new(p.clone(), pair_product(&prec(&x), &hy)),
        ));
        products.push((
            format!("Δ≻({x}|{y}) = Δ≻({x})ΔH({y})"),
            Sides::new(s.clone(), pair_product(&succ(&x), &hy)),
        ));
    }
    Ok(CodendriformSides {
        compatibility,
        products,
    })
}

pub fn codendriform_check(f: &Forest) -> Result<bool> {
    Ok(codendriform_sides(f)?.holds())
}

/// `(δ1 ⊗ Id)δ1 - (Id ⊗ δ1)δ1` against `(Id⊗Id⊗Id + Id⊗τ)δ2`.
pub fn brace_sides(w: &Walk) -> Sides<WalkTriple> {
    let lhs = associator(w);
    let mut rhs = LinComb::zero();
    for ((r, pieces), c) in &delta_n(w, 2).expect("n = 2") {
        let [a, b] = pieces.walks() else {
            unreachable!("two-cut term has two pieces")
        };
        rhs.add_term((r.clone(), a.clone(), b.clone()), c.clone());
        rhs.add_term((r.clone(), b.clone(), a.clone()), c.clone());
    }
    Sides::new(lhs, rhs)
}

pub fn brace_prelie_recovery_check(w: &Walk) -> bool {
    brace_sides(w).holds()
}

/// `δ1` read as pairs of walks, against `Δ_CP`.
pub fn delta_one_sides(w: &Walk) -> Sides<(Walk, Walk)> {
    let d1 = delta_n(w, 1).expect("n = 1").map_basis(|(r, pieces)| {
        let [p] = pieces.walks() else {
            unreachable!("one-cut term has one piece")
        };
        (r.clone(), p.clone())
    });
    Sides::new(d1, delta_cp(w))
}

/// The symmetric coproduct read from two representatives of the same
/// multiset.
pub fn sym_representative_sides(
    f: &Forest,
    g: &Forest,
) -> Sides<(MultisetForest, MultisetForest)> {
    let mut cache = HopfCache::default();
    Sides::new(push_sym(&cache.forest(f)), push_sym(&cache.forest(g)))
}
