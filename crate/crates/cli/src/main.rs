use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use walkhopf::check::{run_suite, CheckConfig, CheckReport, Suite};
use walkhopf::coalgebra::{push_sym, Antipode};
use walkhopf::gen::{gen_walks, GenConfig};
use walkhopf::{
    adc, antipode_closed, cactus_map, delta_cp, delta_h, delta_n, delta_prec, delta_succ, eadc,
    erased_cycles, is_cactus, les, lew, parse_forest, parse_walk, phi, skeleton, temporal_tree,
    Digraph, Error, Forest, JsonTerm, LinComb, Walk,
};

#[derive(Parser)]
#[command(name = "walkhopf", version, about = "Loop-erased walks, admissible cuts and walk Hopf algebras")]
struct Cli {
    /// Digraph (JSON: {"vertices": [...], "arcs": [[i, j], ...]}) that input
    /// walks must lie on; also used by `check` and `gen` for sampling.
    #[arg(long, global = true, value_name = "FILE")]
    graph: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Loop-erased sections.
    Les { walk: String },
    /// Loop-erased walk after the first K steps (default: all).
    Lew { walk: String, k: Option<usize> },
    /// Admissible cuts in time order.
    Adc { walk: String },
    /// Extended admissible cuts, optionally only those with N members.
    Eadc {
        walk: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Self-avoiding skeleton.
    Skeleton { walk: String },
    /// SAW, SAP or other.
    Classify { walk: String },
    /// A coproduct of a walk or of a word such as 33|44.
    Coprod {
        #[arg(long, default_value = "hopf")]
        kind: String,
        #[arg(long, value_enum, default_value_t = Algebra::Tensor)]
        algebra: Algebra,
        input: String,
    },
    /// Antipode of a walk or word.
    Antipode {
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Algebra::Tensor)]
        algebra: Algebra,
        input: String,
    },
    /// Cactus image and its unlabeled normal form.
    Cactus { walk: String },
    /// Temporal tree of erased cycles.
    Tree {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        walk: String,
    },
    /// Run a randomized identity suite.
    Check {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        vertices: u64,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sample random walks.
    Gen {
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 5)]
        vertices: u64,
        #[arg(long, default_value_t = 0)]
        min_len: usize,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        no_self_loops: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    Tensor,
    Sym,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Closed,
    Recursive,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

enum Outcome {
    Json(Value),
    Text(String),
    /// A check report with at least one failure.
    Counterexample(Value),
}

fn main() -> ExitCode {
    let (text, code) = render(run(Cli::parse()));
    if code == 2 {
        eprint!("{text}");
    } else {
        // a closed pipe downstream is not our failure
        let _ = io::stdout().lock().write_all(text.as_bytes());
    }
    ExitCode::from(code)
}

/// Output text and exit status.
fn render(result: Result<Outcome, Error>) -> (String, u8) {
    match result {
        Ok(Outcome::Json(v)) => (format!("{v}\n"), 0),
        Ok(Outcome::Text(s)) => (s, 0),
        Ok(Outcome::Counterexample(v)) => (format!("{v}\n"), 3),
        Err(e) => (format!("error: {e}\n"), 2),
    }
}

fn report_outcome(report: &CheckReport) -> Outcome {
    let v = to_value(report);
    if report.passed() {
        Outcome::Json(v)
    } else {
        Outcome::Counterexample(v)
    }
}

struct Ctx {
    graph: Option<Digraph>,
}

impl Ctx {
    fn walk(&self, text: &str) -> Result<Walk, Error> {
        let w = parse_walk(text)?;
        if let Some(g) = &self.graph {
            g.validate(&w)?;
        }
        Ok(w)
    }

    fn forest(&self, text: &str) -> Result<Forest, Error> {
        let f = parse_forest(text)?;
        if let Some(g) = &self.graph {
            for w in f.walks() {
                g.validate(w)?;
            }
        }
        Ok(f)
    }
}

fn load_graph(path: &PathBuf) -> Result<Digraph, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidGraph(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::InvalidGraph(e.to_string()))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let ctx = Ctx {
        graph: cli.graph.as_ref().map(load_graph).transpose()?,
    };
    let out = match cli.command {
        Command::Les { walk } => to_value(&les(&ctx.walk(&walk)?)),
        Command::Lew { walk, k } => {
            let w = ctx.walk(&walk)?;
            lew(&w, k.unwrap_or(w.len()))?.to_json()
        }
        Command::Adc { walk } => to_value(&adc(&ctx.walk(&walk)?)),
        Command::Eadc { walk, n } => {
            let all = eadc(&ctx.walk(&walk)?);
            to_value(&all.into_iter().filter(|e| n.is_none_or(|n| e.len() == n)).collect::<Vec<_>>())
        }
        Command::Skeleton { walk } => skeleton(&ctx.walk(&walk)?).to_json(),
        Command::Classify { walk } => to_value(&ctx.walk(&walk)?.classify()),
        Command::Coprod { kind, algebra, input } => coprod(&ctx, &kind, algebra, &input)?,
        Command::Antipode {
            method,
            algebra,
            input,
        } => {
            let f = ctx.forest(&input)?;
            let s = match method {
                Method::Closed => match f.walks() {
                    [w] => antipode_closed(w),
                    _ => {
                        return Err(Error::Parse(
                            "the closed formula takes a single walk".into(),
                        ))
                    }
                },
                Method::Recursive => Antipode::new().forest(&f),
            };
            match algebra {
                Algebra::Tensor => s.to_json(),
                Algebra::Sym => s.to_multiset().to_json(),
            }
        }
        Command::Cactus { walk } => {
            let w = ctx.walk(&walk)?;
            json!({
                "input_is_cactus": is_cactus(&w),
                "kappa": cactus_map(&w).to_json(),
                "phi": phi(&w).to_json(),
                "erased_cycles": to_value(&erased_cycles(&cactus_map(&w))),
            })
        }
        Command::Tree { format, walk } => {
            let t = temporal_tree(&ctx.walk(&walk)?);
            match format {
                Format::Dot => return Ok(Outcome::Text(t.to_dot())),
                Format::Json => to_value(&t),
            }
        }
        Command::Check {
            suite,
            count,
            vertices,
            max_len,
            seed,
        } => {
            let cfg = CheckConfig {
                count,
                vertices,
                max_len,
                seed,
                graph: ctx.graph.clone(),
            };
            return Ok(report_outcome(&run_suite(suite.parse::<Suite>()?, &cfg)?));
        }
        Command::Gen {
            count,
            vertices,
            min_len,
            max_len,
            seed,
            no_self_loops,
        } => {
            let cfg = GenConfig {
                vertices,
                min_len,
                max_len,
                count,
                seed,
                self_loops: !no_self_loops,
                graph: ctx.graph.clone(),
            };
            Value::Array(gen_walks(&cfg)?.iter().map(Walk::to_json).collect())
        }
    };
    Ok(Outcome::Json(out))
}

fn single_walk(f: &Forest) -> Result<&Walk, Error> {
    match f.walks() {
        [w] => Ok(w),
        _ => Err(Error::Parse("this coproduct takes a single walk".into())),
    }
}

fn coprod(ctx: &Ctx, kind: &str, algebra: Algebra, input: &str) -> Result<Value, Error> {
    let f = ctx.forest(input)?;
    let pairs = match kind {
        "cp" => return Ok(delta_cp(single_walk(&f)?).to_json()),
        "hopf" => delta_h(&LinComb::basis(f)),
        "prec" => delta_prec(&f)?,
        "succ" => delta_succ(&f)?,
        _ => {
            let n = kind
                .strip_prefix("brace:")
                .and_then(|n| n.parse::<usize>().ok())
                .ok_or_else(|| {
                    Error::Parse(format!(
                        "unknown coproduct kind {kind:?}; expected cp, hopf, brace:N, prec or succ"
                    ))
                })?;
            return Ok(delta_n(single_walk(&f)?, n)?.to_json());
        }
    };
    Ok(match algebra {
        Algebra::Tensor => pairs.to_json(),
        Algebra::Sym => push_sym(&pairs).to_json(),
    })
}
