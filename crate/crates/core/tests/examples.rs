//! Worked examples with known outputs.

mod common;

use std::collections::BTreeSet;

use common::{cut, f, pairs, triples, w, walk_pairs};
use walkhopf::cactus::petals;
use walkhopf::coalgebra::{
    brace_prelie_recovery_check, codendriform_check, coassoc_check, coassoc_sides,
    convolution_check, copre_lie_check, copre_lie_sides, delta_h_sym, WalkTriple,
};
use walkhopf::cuts::time_precedes;
use walkhopf::digraph::Digraph;
use walkhopf::lincomb::int;
use walkhopf::walk::WalkKind;
use walkhopf::{
    adc, antipode_closed, antipode_recursive, antipode_sym, canonical_relabel, cactus_map, chains,
    corolla_coproduct, counit, delta_cp, delta_h, delta_h_walk, delta_n, delta_prec, delta_succ,
    eadc, eadc_n, erased_cycles, is_cactus, is_corolla, is_les_section, is_tower, les, lew,
    parse_walk, phi, skeleton, temporal_context, temporal_min, temporal_tree, time_leq, twist,
    Cut, Error, Forest, LinComb, MultisetForest, VertexId, Walk,
};

fn unit_free<B: Ord + Clone>(x: &LinComb<B>, has_unit: impl Fn(&B) -> bool) -> LinComb<B> {
    x.filter(|b| !has_unit(b))
}

// core model

#[test]
fn subwalks_and_remainders() {
    assert_eq!(w("12324522").subwalk(1, 3).unwrap(), w("232"));
    assert_eq!(w("12324522").subwalk(4, 4).unwrap(), w("4"));
    assert_eq!(w("34555444678879").subwalk(9, 12).unwrap(), w("7887"));
    assert_eq!(w("1233234441").remainder(&[cut(2, 3)]).unwrap(), w("123234441"));
    assert_eq!(w("1233234441").remainder(&[cut(1, 4)]).unwrap(), w("1234441"));
    assert_eq!(w("12324522").remainder(&[cut(1, 7)]).unwrap(), w("12"));
    assert!(w("12324522").remainder(&[cut(1, 6), cut(3, 7)]).is_err());
    assert!(w("12324522").remainder(&[cut(0, 2)]).is_err());
    assert!(w("123").subwalk(2, 5).is_err());
}

#[test]
fn classification() {
    assert_eq!(w("12345").classify(), WalkKind::Saw);
    assert_eq!(w("123451").classify(), WalkKind::Sap);
    assert_eq!(w("12324522").classify(), WalkKind::Other);
    assert_eq!(w("7").classify(), WalkKind::Saw);
}

#[test]
fn graph_membership() {
    let k5 = Digraph::complete(5, true).unwrap();
    assert!(k5.contains_walk(&w("12324522")));
    let one_arc = Digraph::new([VertexId(1), VertexId(2), VertexId(3)], [(VertexId(1), VertexId(2))]).unwrap();
    assert!(one_arc.contains_walk(&w("3")));
    assert!(!one_arc.contains_walk(&w("13")));
}

#[test]
fn words_and_multisets() {
    assert_eq!(f("33").concat(&f("44")), f("33|44"));
    assert_eq!(Forest::unit().concat(&f("2332")), f("2332"));
    assert_eq!(f("33|44").concat(&f("2332")), f("33|44|2332"));
    assert_eq!(f("44|33").to_multiset(), f("33|44").to_multiset());
    assert_eq!(Forest::unit().to_multiset(), MultisetForest::unit());
    assert_eq!(f("33|33").to_multiset().len(), 2);
}

#[test]
fn counit_and_twist() {
    assert_eq!(counit(&LinComb::basis(Forest::unit())), int(1));
    assert_eq!(counit(&LinComb::basis(f("12"))), int(0));
    let x = LinComb::term(Forest::unit(), int(3)) + LinComb::term(f("33|44"), int(5));
    assert_eq!(counit(&x), int(3));
    let ab = pairs(&["12⊗33"]);
    assert_eq!(twist(&ab), pairs(&["33⊗12"]));
    let sym = pairs(&["12⊗33", "33⊗12"]);
    assert_eq!(twist(&sym), sym);
}

// loop erasure

#[test]
fn loop_erased_walks() {
    assert_eq!(lew(&w("12324522"), 0).unwrap(), w("1"));
    assert_eq!(lew(&w("12324522"), 3).unwrap(), w("12"));
    assert_eq!(lew(&w("12324522"), 7).unwrap(), w("12"));
    assert!(lew(&w("12324522"), 8).is_err());
    assert_eq!(skeleton(&w("12324522")), w("12"));
    assert_eq!(skeleton(&w("1231")), w("1"));
    assert_eq!(skeleton(&w("12345")), w("12345"));
}

#[test]
fn loop_erased_sections() {
    let expect: BTreeSet<Cut> = [(1, 3), (3, 6), (1, 6), (6, 7), (3, 7), (1, 7)]
        .iter()
        .map(|&(a, b)| cut(a, b))
        .collect();
    assert_eq!(les(&w("12324522")), expect);
    assert_eq!(les(&w("1232341")), [cut(1, 3), cut(0, 6)].into_iter().collect());
    assert!(les(&w("12345")).is_empty());
    let cycles: Vec<Cut> = erased_cycles(&w("12324522")).iter().map(|c| c.cut).collect();
    assert_eq!(cycles, vec![cut(1, 3), cut(3, 6), cut(6, 7)]);
    let cycles: Vec<Walk> = erased_cycles(&w("12332441")).iter().map(|c| c.cycle.clone()).collect();
    assert_eq!(cycles, vec![w("33"), w("232"), w("44"), w("1241")]);
    let cycles: Vec<Cut> = erased_cycles(&w("123451")).iter().map(|c| c.cut).collect();
    assert_eq!(cycles, vec![cut(0, 5)]);
}

#[test]
fn section_membership() {
    // 323 is the closed section (2,4); (2,5) is not closed at all
    assert!(!is_les_section(&w("1232341"), cut(2, 4)).unwrap());
    assert!(matches!(is_les_section(&w("1232341"), cut(2, 5)), Err(Error::OpenCut { .. })));
    assert!(is_les_section(&w("12324522"), cut(3, 6)).unwrap());
    assert!(is_les_section(&w("121"), cut(0, 2)).unwrap());
}

// cuts

#[test]
fn temporal_contexts() {
    let walk = w("12324522");
    assert_eq!(temporal_context(&walk, cut(1, 3)).unwrap(), vec![cut(1, 6), cut(1, 7)]);
    assert!(temporal_context(&walk, cut(3, 7)).unwrap().is_empty());
    assert!(temporal_context(&w("121"), cut(0, 2)).unwrap().is_empty());
    assert_eq!(temporal_min(&walk, cut(1, 3)).unwrap(), Some(cut(1, 6)));
    assert_eq!(temporal_min(&walk, cut(3, 7)).unwrap(), None);
    assert_eq!(temporal_min(&w("1111"), cut(1, 3)).unwrap(), None);
    assert!(temporal_min(&walk, cut(0, 2)).is_err());
}

#[test]
fn admissibility() {
    assert!(walkhopf::is_admissible(&w("12324345"), cut(1, 3)));
    assert!(walkhopf::is_admissible(&w("12324345"), cut(4, 6)));
    assert!(!walkhopf::is_admissible(&w("12324345"), cut(2, 5)));
    assert!(!walkhopf::is_admissible(&w("12131"), cut(0, 2)));
    assert!(walkhopf::is_admissible(&w("12131"), cut(2, 4)));
    assert!(adc(&w("12345")).is_empty());
    assert_eq!(adc(&w("12324522")), vec![cut(6, 7), cut(3, 7), cut(1, 7)]);
}

#[test]
fn time_order() {
    let walk = w("34555444678879");
    assert!(time_leq(&walk, cut(3, 4), cut(2, 4)).unwrap());
    assert!(time_leq(&walk, cut(2, 4), cut(10, 11)).unwrap());
    assert!(time_leq(&walk, cut(1, 7), cut(1, 7)).unwrap());
    assert!(!time_leq(&walk, cut(9, 12), cut(1, 7)).unwrap());
    assert!(time_leq(&walk, cut(0, 1), cut(1, 7)).is_err());
    assert!(time_precedes(cut(3, 4), cut(2, 4)));
}

#[test]
fn extended_cuts() {
    assert_eq!(eadc(&w("123324441")).len(), 8);
    assert!(eadc(&w("123451")).is_empty());
    let walk = w("1233234441");
    let got: BTreeSet<Vec<Cut>> = eadc(&walk).iter().map(|e| e.cuts().to_vec()).collect();
    let want: BTreeSet<Vec<Cut>> = [
        vec![cut(2, 3)],
        vec![cut(7, 8)],
        vec![cut(6, 8)],
        vec![cut(1, 4)],
        vec![cut(2, 3), cut(7, 8)],
        vec![cut(2, 3), cut(6, 8)],
        vec![cut(1, 4), cut(7, 8)],
        vec![cut(1, 4), cut(6, 8)],
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want);
    assert_eq!(eadc_n(&walk, 1).len(), 4);
    assert_eq!(eadc_n(&walk, 2).len(), 4);
    assert!(eadc_n(&walk, 5).is_empty());
}

#[test]
fn chain_lists() {
    let c = chains(&w("12223445"));
    assert_eq!(c.len(), 7);
    let by_len = |n| c.iter().filter(|ch| ch.len() == n).count();
    assert_eq!((by_len(1), by_len(2), by_len(3)), (3, 3, 1));
    assert!(chains(&w("12345")).is_empty());
    let c: Vec<Vec<Cut>> = chains(&w("1111")).iter().map(|ch| ch.cuts().to_vec()).collect();
    let set: BTreeSet<Vec<Cut>> = c.into_iter().collect();
    let want: BTreeSet<Vec<Cut>> = [vec![cut(2, 3)], vec![cut(1, 3)], vec![cut(2, 3), cut(1, 3)]]
        .into_iter()
        .collect();
    assert_eq!(set, want);
}

// coalgebra

#[test]
fn cut_coproduct() {
    assert_eq!(
        delta_cp(&w("1233234441")),
        walk_pairs(&["123323441⊗44", "12332341⊗444", "123234441⊗33", "1234441⊗2332"])
    );
    assert!(delta_cp(&w("123451")).is_zero());
    assert_eq!(
        delta_cp(&w("12324522")),
        walk_pairs(&["1232452⊗22", "1232⊗24522", "12⊗2324522"])
    );
}

#[test]
fn hopf_coproduct() {
    assert_eq!(delta_h_walk(&w("5")), pairs(&["()⊗5", "5⊗()"]));
    assert_eq!(delta_h_walk(&w("1111")), pairs(&["()⊗1111", "1111⊗()", "111⊗11", "11⊗111"]));
    assert!(delta_h(&LinComb::zero()).is_zero());
    assert_eq!(delta_h(&LinComb::basis(Forest::unit())), pairs(&["()⊗()"]));
    assert_eq!(
        delta_h(&LinComb::basis(f("33|44"))),
        pairs(&["()⊗33|44", "33⊗44", "44⊗33", "33|44⊗()"])
    );
}

#[test]
fn symmetric_coproduct() {
    let x = LinComb::basis(f("33|44").to_multiset());
    let d = delta_h_sym(&x);
    assert_eq!(d.len(), 4);
    let m = |s: &str| f(s).to_multiset();
    assert_eq!(d.coeff(&(m("33"), m("44"))), int(1));
    assert_eq!(d.coeff(&(m("44"), m("33"))), int(1));
    let t = delta_h_sym(&LinComb::basis(m("1111")));
    assert_eq!(t.coeff(&(m("111"), m("11"))), int(1));
    assert_eq!(t.len(), 4);
}

#[test]
fn brace_family() {
    let d1 = delta_n(&w("1233234441"), 1).unwrap();
    assert_eq!(d1.len(), 4);
    let d2 = delta_n(&w("1233234441"), 2).unwrap();
    let want: LinComb<(Walk, Forest)> = ["12323441⊗33|44", "1232341⊗33|444", "123441⊗2332|44", "12341⊗2332|444"]
        .iter()
        .map(|t| {
            let (a, b) = t.split_once('⊗').unwrap();
            LinComb::basis((w(a), f(b)))
        })
        .fold(LinComb::zero(), |acc, x| acc + x);
    assert_eq!(d2, want);
    assert!(delta_n(&w("1233234441"), 3).unwrap().is_zero());
    assert!(matches!(delta_n(&w("1"), 0), Err(Error::ZeroBraceIndex)));
    assert!(brace_prelie_recovery_check(&w("1233234441")));
    assert!(brace_prelie_recovery_check(&w("12345")));
    assert!(brace_prelie_recovery_check(&w("12131")));
}

#[test]
fn dendriform_split() {
    assert_eq!(delta_succ(&f("1111")).unwrap(), pairs(&["()⊗1111"]));
    assert_eq!(delta_prec(&f("111")).unwrap(), pairs(&["111⊗()", "11⊗11"]));
    assert_eq!(delta_prec(&f("123")).unwrap(), pairs(&["123⊗()"]));
    assert!(matches!(delta_prec(&Forest::unit()), Err(Error::EmptyWord)));
    for s in ["123", "111", "33|44"] {
        assert!(codendriform_check(&f(s)).unwrap(), "{s}");
    }
}

#[test]
fn antipodes() {
    let neg = |s: &str| LinComb::term(f(s), int(-1));
    let pos = |s: &str| LinComb::basis(f(s));
    assert_eq!(antipode_recursive(&pos("12345")), neg("12345"));
    assert_eq!(antipode_recursive(&pos("111")), neg("111") + pos("11|11"));
    assert_eq!(
        antipode_recursive(&pos("1111")),
        neg("1111") + pos("111|11") + pos("11|111") + neg("11|11|11")
    );
    assert_eq!(antipode_closed(&w("123451")), neg("123451"));
    let s = antipode_closed(&w("12223445"));
    assert_eq!(s.coeff(&f("12345|44|22|22")), int(1));
    assert_eq!(antipode_sym(&w("12223445")), s.to_multiset());
    assert_eq!(antipode_sym(&w("123451")), neg("123451").to_multiset());
    assert_eq!(antipode_sym(&w("111")), (neg("111") + pos("11|11")).to_multiset());
    assert_eq!(antipode_recursive(&pos("()")), pos("()"));
}

#[test]
fn identity_checks_on_examples() {
    for s in ["1233234441", "12345", "12324522"] {
        assert!(copre_lie_check(&w(s)), "{s}");
    }
    for s in ["1233234441", "7", "1111"] {
        assert!(coassoc_check(&LinComb::basis(f(s))), "{s}");
    }
    for s in ["111", "()", "1233234441"] {
        assert!(convolution_check(&LinComb::basis(f(s))), "{s}");
    }
}

fn walk_triples(terms: &[&str]) -> LinComb<WalkTriple> {
    terms
        .iter()
        .map(|t| {
            let p: Vec<&str> = t.split('⊗').collect();
            LinComb::basis((w(p[0]), w(p[1]), w(p[2])))
        })
        .fold(LinComb::zero(), |acc, x| acc + x)
}

#[test]
fn copre_lie_display() {
    let d = delta_cp(&w("1233234441"));
    let left = d.flat_map(|(a, b)| delta_cp(a).map_basis(|(p, q)| (p.clone(), q.clone(), b.clone())));
    let right = d.flat_map(|(a, b)| delta_cp(b).map_basis(|(p, q)| (a.clone(), p.clone(), q.clone())));
    assert_eq!(
        left,
        walk_triples(&[
            "12332341⊗44⊗44", "12323441⊗33⊗44", "123441⊗2332⊗44",
            "1232341⊗33⊗444", "12341⊗2332⊗444",
            "12323441⊗44⊗33", "1232341⊗444⊗33", "1234441⊗232⊗33",
            "123441⊗44⊗2332", "12341⊗444⊗2332",
        ])
    );
    assert_eq!(right, walk_triples(&["12332341⊗44⊗44", "1234441⊗232⊗33"]));
    let l = copre_lie_sides(&w("1233234441")).lhs;
    assert_eq!(
        l,
        walk_triples(&[
            "12323441⊗33⊗44", "12323441⊗44⊗33",
            "123441⊗2332⊗44", "123441⊗44⊗2332",
            "1232341⊗33⊗444", "1232341⊗444⊗33",
            "12341⊗2332⊗444", "12341⊗444⊗2332",
        ])
    );
}

#[test]
fn triple_coproduct_display() {
    let sides = coassoc_sides(&LinComb::basis(f("1233234441")));
    let has_unit = |t: &(Forest, Forest, Forest)| t.0.is_unit() || t.1.is_unit() || t.2.is_unit();
    let left = triples(&[
        "12332341⊗44⊗44", "12323441⊗33⊗44", "123441⊗2332⊗44", "1232341⊗33|44⊗44",
        "12341⊗2332|44⊗44",
        "1232341⊗33⊗444", "12341⊗2332⊗444",
        "12323441⊗44⊗33", "1232341⊗444⊗33", "1234441⊗232⊗33", "123441⊗232|44⊗33",
        "12341⊗232|444⊗33",
        "12341⊗444⊗2332", "123441⊗44⊗2332",
        "12341⊗232|44⊗33|44", "123441⊗232⊗33|44", "1232341⊗44⊗33|44",
        "12341⊗232⊗33|444",
        "12341⊗44⊗2332|44",
    ]);
    assert_eq!(left.len(), 19);
    assert_eq!(unit_free(&sides.lhs, has_unit), left);
    // the last printed term of the other side is cut short, so only the
    // complete ones are pinned
    let right = triples(&[
        "12332341⊗44⊗44", "1234441⊗232⊗33", "12323441⊗44⊗33", "12323441⊗33⊗44",
        "1232341⊗33⊗444", "1232341⊗444⊗33", "1232341⊗33|44⊗44", "1232341⊗44⊗33|44",
        "123441⊗2332⊗44", "123441⊗232|44⊗33", "123441⊗232⊗33|44", "123441⊗44⊗2332",
        "12341⊗232|444⊗33", "12341⊗2332|44⊗44", "12341⊗232|44⊗33|44", "12341⊗2332⊗444",
        "12341⊗444⊗2332", "12341⊗232⊗33|444",
    ]);
    let rhs = unit_free(&sides.rhs, has_unit);
    for (t, c) in right.iter() {
        assert_eq!(rhs.coeff(t), *c, "{t:?}");
    }
    assert_eq!(rhs.len(), 19);
    assert!(sides.holds());
    assert_eq!(
        sides.lhs.coeff(&(f("12341"), f("232|44"), f("33|44"))),
        int(1)
    );
}

// cactus

#[test]
fn cacti() {
    assert!(!is_cactus(&w("12121")));
    assert!(is_cactus(&w("12131")));
    assert!(is_cactus(&w("12345")));
    assert_eq!(cactus_map(&w("12121")), w("12131"));
    assert_eq!(cactus_map(&w("12332331")), w("12332441"));
    assert_eq!(cactus_map(&w("123")), w("123"));
}

#[test]
fn temporal_trees() {
    let t = temporal_tree(&w("12332331"));
    assert_eq!(t.kappa, w("12332441"));
    assert_eq!(t.root, w("1"));
    let order: Vec<Walk> = t.nodes.iter().map(|n| n.cycle.clone()).collect();
    assert_eq!(order, vec![w("33"), w("232"), w("44"), w("1241")]);
    assert_eq!(t.children(None), vec![3]);
    assert_eq!(t.children(Some(3)), vec![1, 2]);
    assert_eq!(t.children(Some(1)), vec![0]);
    assert!(temporal_tree(&w("1234")).nodes.is_empty());
    let t = temporal_tree(&w("111"));
    assert_eq!(t.nodes.len(), 2);
    assert!(t.nodes.iter().all(|n| n.parent.is_none() && n.cycle == w("11")));
    let dot = temporal_tree(&w("12332331")).to_dot();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("n3 -> n1") || dot.contains("n3 -> n2"), "{dot}");
}

#[test]
fn towers_and_corollas() {
    assert!(is_tower(&w("123454321")));
    assert!(!is_tower(&w("12131")));
    assert!(is_tower(&w("121")));
    assert_eq!(is_corolla(&w("111")), Some(VertexId(1)));
    assert_eq!(is_corolla(&w("123412451")), Some(VertexId(1)));
    assert_eq!(is_corolla(&w("123454321")), None);
    assert_eq!(petals(&w("12131")).unwrap(), vec![w("121"), w("131")]);
    assert_eq!(
        corolla_coproduct(&w("1111")).unwrap(),
        pairs(&["()⊗1111", "1111⊗()", "111⊗11", "11⊗111"])
    );
    assert_eq!(corolla_coproduct(&w("121")).unwrap(), pairs(&["()⊗121", "121⊗()"]));
    assert_eq!(
        corolla_coproduct(&w("12131")).unwrap(),
        pairs(&["()⊗12131", "12131⊗()", "121⊗131"])
    );
    assert!(matches!(corolla_coproduct(&w("1234")), Err(Error::NotCorolla)));
    for s in ["1111", "121", "12131", "123412451"] {
        assert_eq!(corolla_coproduct(&w(s)).unwrap(), delta_h_walk(&w(s)), "{s}");
    }
}

#[test]
fn relabeling() {
    assert_eq!(canonical_relabel(&f("2452")), f("1231"));
    assert_eq!(canonical_relabel(&f("12131")), f("12131"));
    assert_eq!(canonical_relabel(&f("34543|88")), f("12321|11"));
    assert_eq!(phi(&w("12332331")), w("12332441"));
    assert_eq!(phi(&w("7")), w("1"));
    let p = phi(&w("34555444678879"));
    assert_eq!(p.len(), 13);
    assert!(is_cactus(&p));
    assert_eq!(adc(&p), adc(&w("34555444678879")));
}

// cli-facing parsing

#[test]
fn parsing() {
    assert_eq!(parse_walk("12324522").unwrap(), w("12324522"));
    assert_eq!(parse_walk("10,2,10").unwrap(), Walk::from_labels(&[10, 2, 10]));
    assert!(parse_walk("").is_err());
}
