//! Randomized identity suites.
//!
//! A suite evaluates one identity family on `count` generated inputs. Each
//! instance is reproducible from `(seed, index)` alone; instances run in
//! parallel and the report lists failures in instance order.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cactus::{
    antipode_morphism_sides, corolla_coproduct, is_corolla, morphism_sides, Family,
};
use crate::coalgebra::{
    antipode_closed, brace_sides, coassoc_sides, codendriform_sides, convolution_sides,
    copre_lie_sides, delta_h_walk, delta_one_sides, sym_representative_sides, Antipode, Sides,
};
use crate::cuts::{adc, time_precedes};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::gen::{instance_rng, random_cactus, random_corolla, random_tower, WalkSampler};
use crate::json::JsonTerm;
use crate::lincomb::LinComb;
use crate::loop_erasure::{les, Cut};
use crate::walk::{Erasure, Walk};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Suite {
    #[serde(rename = "copreLie")]
    CopreLie,
    #[serde(rename = "coassoc")]
    Coassoc,
    #[serde(rename = "antipode")]
    Antipode,
    #[serde(rename = "dendriform")]
    Dendriform,
    #[serde(rename = "brace")]
    Brace,
    #[serde(rename = "morphism")]
    Morphism,
    #[serde(rename = "cuts")]
    Cuts,
    #[serde(rename = "subhopf")]
    SubHopf,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::CopreLie,
        Suite::Coassoc,
        Suite::Antipode,
        Suite::Dendriform,
        Suite::Brace,
        Suite::Morphism,
        Suite::Cuts,
        Suite::SubHopf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CopreLie => "copreLie",
            Suite::Coassoc => "coassoc",
            Suite::Antipode => "antipode",
            Suite::Dendriform => "dendriform",
            Suite::Brace => "brace",
            Suite::Morphism => "morphism",
            Suite::Cuts => "cuts",
            Suite::SubHopf => "subhopf",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub count: usize,
    pub vertices: u64,
    pub max_len: usize,
    pub seed: u64,
    /// Walks are drawn on this digraph instead of the complete graph.
    pub graph: Option<Digraph>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            count: 500,
            vertices: 5,
            max_len: 12,
            seed: 0,
            graph: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub instance: usize,
    pub input: Value,
    pub identity: String,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: Suite,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub seed: u64,
    pub elapsed_ms: u128,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Collects the failing identities of one instance.
struct Recorder {
    instance: usize,
    failures: Vec<Failure>,
}

impl Recorder {
    fn sides<B: Ord + Clone>(&mut self, input: Value, identity: &str, s: &Sides<B>)
    where
        LinComb<B>: JsonTerm,
    {
        if !s.holds() {
            self.fail(input, identity, s.lhs.to_json(), s.rhs.to_json());
        }
    }

    fn fail(&mut self, input: Value, identity: &str, lhs: Value, rhs: Value) {
        self.failures.push(Failure {
            instance: self.instance,
            input,
            identity: identity.to_string(),
            lhs,
            rhs,
        });
    }
}

pub fn run_suite(suite: Suite, cfg: &CheckConfig) -> Result<CheckReport> {
    let graph = match &cfg.graph {
        Some(g) => g.clone(),
        None => {
            if cfg.vertices == 0 {
                return Err(Error::InvalidConfig("need at least one vertex".into()));
            }
            Digraph::complete(cfg.vertices, true)?
        }
    };
    let sampler = WalkSampler::new(&graph);
    let start = Instant::now();
    let failures: Vec<Failure> = (0..cfg.count)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut rec = Recorder {
                instance: i,
                failures: Vec::new(),
            };
            run_instance(suite, cfg, &sampler, i, &mut rec);
            rec.failures
        })
        .collect();
    Ok(CheckReport {
        suite,
        instances: cfg.count,
        failures,
        seed: cfg.seed,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn run_instance(suite: Suite, cfg: &CheckConfig, sampler: &WalkSampler, i: usize, rec: &mut Recorder) {
    let mut rng = instance_rng(cfg.seed, i as u64);
    let max_len = cfg.max_len;
    match suite {
        Suite::CopreLie => {
            let w = sampler.walk_in(&mut rng, 0, max_len);
            rec.sides(w.to_json(), "copreLie", &copre_lie_sides(&w));
        }
        Suite::Coassoc => {
            let w = sampler.walk_in(&mut rng, 0, max_len);
            rec.sides(w.to_json(), "coassoc", &coassoc_sides(&LinComb::basis(Forest::single(w.clone()))));
            let f = random_word(&mut rng, sampler, 2, 3, max_len);
            rec.sides(f.to_json(), "coassoc", &coassoc_sides(&LinComb::basis(f.clone())));
        }
        Suite::Antipode => {
            let w = sampler.walk_in(&mut rng, 0, max_len);
            let closed = antipode_closed(&w);
            let recursive = Antipode::new().walk(&w);
            rec.sides(w.to_json(), "closed = recursive", &Sides::new(closed, recursive));
            let [right, left] = convolution_sides(&LinComb::basis(Forest::single(w.clone())));
            rec.sides(w.to_json(), "m(Id⊗S)ΔH = ε1", &right);
            rec.sides(w.to_json(), "m(S⊗Id)ΔH = ε1", &left);
        }
        Suite::Dendriform => {
            let f = random_word(&mut rng, sampler, 1, 3, max_len);
            let sides = codendriform_sides(&f).expect("nonempty word");
            for (name, s) in &sides.compatibility {
                rec.sides(f.to_json(), name, s);
            }
            for (name, s) in &sides.products {
                rec.sides(f.to_json(), name, s);
            }
        }
        Suite::Brace => {
            let w = sampler.walk_in(&mut rng, 0, max_len);
            rec.sides(w.to_json(), "preLie recovery from δ1, δ2", &brace_sides(&w));
            rec.sides(w.to_json(), "δ1 = ΔCP", &delta_one_sides(&w));
        }
        Suite::Morphism => {
            let w = sampler.walk_in(&mut rng, 0, max_len);
            rec.sides(w.to_json(), "(Φ⊗Φ)ΔH = ΔH Φ", &morphism_sides(&w));
            rec.sides(w.to_json(), "Φ S = S Φ", &antipode_morphism_sides(&w));
            let f = random_word(&mut rng, sampler, 2, 3, max_len);
            let mut letters = f.walks().to_vec();
            letters.shuffle(&mut rng);
            let g = Forest::new(letters);
            rec.sides(
                json!([f.to_json(), g.to_json()]),
                "symmetric ΔH independent of representative",
                &sym_representative_sides(&f, &g),
            );
        }
        Suite::Cuts => {
            let w = sampler.walk_in(&mut rng, 0, max_len.min(10));
            cut_structure(&w, rec);
        }
        Suite::SubHopf => {
            let (family, w) = match i % 3 {
                0 => (Family::Tower, random_tower(&mut rng, 4, 4)),
                1 => (Family::Corolla, random_corolla(&mut rng, 4, cfg.vertices.max(1))),
                _ => (Family::Cactus, random_cactus(&mut rng, sampler, max_len)),
            };
            closure(family, &w, rec);
        }
    }
}

/// A word of `lo..=hi` letters whose total length stays near `max_len`.
fn random_word<R: Rng>(rng: &mut R, sampler: &WalkSampler, lo: usize, hi: usize, max_len: usize) -> Forest {
    let n = rng.gen_range(lo..=hi);
    sampler.forest(rng, n, (max_len / n).max(1))
}

fn closed_cuts(w: &Walk) -> Vec<Cut> {
    let vs = w.vertices();
    let mut out = Vec::new();
    for k in 0..vs.len() {
        for k2 in k + 1..vs.len() {
            if vs[k] == vs[k2] {
                out.push(Cut::new(k, k2));
            }
        }
    }
    out
}

fn remove(w: &Walk, c: Cut) -> Walk {
    let mut e = Erasure::new(w);
    e.erase(c);
    e.remainder()
}

/// Coordinates of `d` after removing `c`, for `d` disjoint from `c`.
fn shift_past(d: Cut, c: Cut) -> Cut {
    let gap = c.len();
    let f = |i: usize| if i > c.end { i - gap } else { i };
    Cut::new(f(d.start), f(d.end))
}

/// Exchange and nesting equivalences over all closed cut pairs, the
/// non-straddling characterization of loop-erased sections, and totality
/// of the time order.
fn cut_structure(w: &Walk, rec: &mut Recorder) {
    let input = w.to_json();
    let a = adc(w);
    let sections = les(w);
    let closed = closed_cuts(w);
    let adc_of = |x: &Walk| adc(x);

    for &c in &closed {
        for &d in &closed {
            if c.end < d.start || d.end < c.start {
                let lhs = a.contains(&c) && adc_of(&remove(w, c)).contains(&shift_past(d, c));
                let rhs = a.contains(&d) && adc_of(&remove(w, d)).contains(&shift_past(c, d));
                if lhs != rhs {
                    rec.fail(input.clone(), &format!("exchange of disjoint cuts {c} {d}"), json!(lhs), json!(rhs));
                }
            }
            if c.start < d.start && d.end <= c.end {
                let inner = Cut::new(d.start - c.start, d.end - c.start);
                let outer = Cut::new(c.start, c.end - d.len());
                let lhs = a.contains(&c) && adc_of(&w.segment(c)).contains(&inner);
                let rhs = a.contains(&d) && adc_of(&remove(w, d)).contains(&outer);
                if lhs != rhs {
                    rec.fail(input.clone(), &format!("nesting of cuts {c} {d}"), json!(lhs), json!(rhs));
                }
            }
        }
        let straddled = sections
            .iter()
            .any(|l| l.start < c.start && c.start < l.end && l.end < c.end && w.at(l.start) != w.at(c.start));
        if sections.contains(&c) == straddled {
            rec.fail(
                input.clone(),
                &format!("non-straddling characterization at {c}"),
                json!(sections.contains(&c)),
                json!(!straddled),
            );
        }
    }

    for (i, &c) in a.iter().enumerate() {
        for &d in &a[i + 1..] {
            if time_precedes(c, d) == time_precedes(d, c) {
                rec.fail(input.clone(), &format!("time order totality {c} {d}"), json!(time_precedes(c, d)), json!(time_precedes(d, c)));
            }
        }
    }
}

/// Every factor of every coproduct term stays in the family; corollas also
/// match the closed form.
fn closure(family: Family, w: &Walk, rec: &mut Recorder) {
    let input = w.to_json();
    let root = match family {
        Family::Corolla => is_corolla(w),
        _ => None,
    };
    if !family.contains(w, root) {
        rec.fail(input, &format!("generated input is a {family:?}"), json!(false), json!(true));
        return;
    }
    let d = delta_h_walk(w);
    for ((a, b), _) in &d {
        for x in a.walks().iter().chain(b.walks()) {
            if !family.contains(x, root) {
                rec.fail(
                    input.clone(),
                    &format!("{family:?} closure"),
                    json!({"factor": x.to_json()}),
                    json!({"family": format!("{family:?}")}),
                );
            }
        }
    }
    if family == Family::Corolla {
        let closed = corolla_coproduct(w).expect("corolla");
        rec.sides(input, "corolla closed form", &Sides::new(closed, d));
    }
}
