//! Coproducts, antipodes and the identities relating them.

mod antipode;
mod coproduct;
mod identities;

pub use antipode::{antipode_closed, antipode_of_walk, antipode_recursive, antipode_sym, Antipode};
pub use coproduct::{
    apply_left, apply_right, counit, delta_cp, delta_h, delta_h_forest, delta_h_sym, delta_h_walk,
    delta_n, delta_prec, delta_succ, multiply, pair_product, push_sym, twist, HopfCache, Pair,
    Triple,
};
pub use identities::{
    brace_prelie_recovery_check, brace_sides, coassoc_check, coassoc_sides, codendriform_check,
    codendriform_sides, convolution_check, convolution_sides, copre_lie_check, copre_lie_sides,
    counit_sides, delta_one_sides, sym_representative_sides, CodendriformSides, Sides, WalkTriple,
};
