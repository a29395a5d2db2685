//! Walks on digraphs and the algebra of their loop-erased structure.
//!
//! A walk is a vertex sequence. Chronological loop erasure
//! ([`loop_erasure`]) splits it into a self-avoiding skeleton and a history of
//! erased cycles; the [`cuts`] module singles out the admissible cuts, which
//! drive the coproducts and antipodes in [`coalgebra`]. [`cactus`] relabels
//! walks into cacti with the same cut structure and builds temporal trees.
//!
//! ```
//! use walkhopf::{adc, delta_cp, Walk};
//!
//! let w = Walk::from_digits("12324522");
//! assert_eq!(adc(&w).len(), 3);
//! assert_eq!(delta_cp(&w).len(), 3);
//! ```

pub mod cactus;
pub mod check;
pub mod coalgebra;
pub mod cuts;
pub mod digraph;
pub mod error;
pub mod forest;
pub mod gen;
pub mod json;
pub mod lincomb;
pub mod loop_erasure;
pub mod parse;
pub mod walk;

pub use cactus::{
    cactus_map, canonical_relabel, canonical_relabel_walk, corolla_coproduct, is_cactus,
    is_corolla, is_tower, phi, phi_forest, phi_multiset, temporal_tree, TemporalTree,
};
pub use coalgebra::{
    antipode_closed, antipode_recursive, antipode_sym, counit, delta_cp, delta_h, delta_h_forest,
    delta_h_sym, delta_h_walk, delta_n, delta_prec, delta_succ, twist, Pair, Sides, Triple,
};
pub use cuts::{adc, chains, eadc, eadc_n, is_admissible, temporal_context, temporal_min, time_leq, Chain, ExtCut};
pub use digraph::Digraph;
pub use error::{Error, Result};
pub use forest::{Forest, MultisetForest};
pub use json::JsonTerm;
pub use lincomb::{Coeff, LinComb};
pub use loop_erasure::{erased_cycles, is_les_section, les, lew, skeleton, Cut};
pub use parse::{parse_forest, parse_walk};
pub use walk::{VertexId, Walk, WalkKind};
