//! `hyperchen` — exact expansions, products and verification suites for
//! Chen calculus on symmetric and hyperoctahedral group algebras. All
//! output is canonical JSON on standard output; given identical arguments
//! the bytes are identical across runs.
//!
//! Exit codes: 0 on success (and on verification success), 1 when a
//! verification suite fails, 2 on usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use hyperchen_core::algebra::{convolve, AlgebraElement};
use hyperchen_core::bases::{expand_basis, omega_r, solomon_idempotent, OmegaBasis};
use hyperchen_core::chen::{ChenEvaluator, CompositeSymbol, IntegralDescriptor};
use hyperchen_core::effective::picard_terms;
use hyperchen_core::io::{
    basis_id_from_json, basis_id_to_json, element_to_json, matrix_rows, model_from_json,
    model_to_json, parse_rational, series_to_json, BasisIdJson, ModelJson,
};
use hyperchen_core::perm::{
    parse_decorated, standardize, standardize_with_ties, SignedPermutation,
};
use hyperchen_core::verify::{run_suite, VerifyOptions};
use hyperchen_core::word::{format_word, parse_word};
use hyperchen_core::{RatElement, RatModel, DEFAULT_MAX_DEGREE, HARD_MAX_DEGREE};

#[derive(Parser)]
#[command(
    name = "hyperchen",
    version,
    about = "Exact Chen calculus on symmetric and hyperoctahedral group algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group operations and statistics on signed permutations
    Perm {
        #[command(subcommand)]
        op: PermOp,
    },
    /// Convolution product of two signed permutations
    Conv {
        /// left factor, e.g. "2 3 1" or "2 -3 1"
        #[arg(allow_hyphen_values = true)]
        x: String,
        /// right factor
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Shuffle product of two decorated words (letters k, -k, ^k)
    Shuffle {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Expand a basis element: family R, T or D, degree, subset ("" for empty)
    Basis {
        family: String,
        n: usize,
        subset: String,
        /// allow the expensive degree-7 expansion
        #[arg(long)]
        allow_degree_7: bool,
    },
    /// Solomon (Eulerian) idempotent of the given degree
    Sol { n: usize },
    /// Magnus element of the regression algebra, truncated
    Omega {
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// closed form to expand: "T" or "canonical"
        #[arg(long, default_value = "T")]
        basis: String,
        /// allow the expensive degree-7 expansion
        #[arg(long)]
        allow_degree_7: bool,
    },
    /// Evaluate exact iterated integrals against a model file
    Eval {
        #[command(subcommand)]
        op: EvalOp,
    },
    /// Run a verification suite; exits 1 if any check fails
    Verify {
        /// conv, shuffleconv, bases, omega, sol, chen, gl, recursion,
        /// magnus, bch, or all
        suite: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        max_total_degree: Option<usize>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        models: Option<usize>,
        /// lower integration bound as an exact rational
        #[arg(long, allow_hyphen_values = true)]
        lower: Option<String>,
        /// upper integration bound as an exact rational
        #[arg(long, allow_hyphen_values = true)]
        upper: Option<String>,
        /// run the model-driven suites against this model file instead of
        /// seeded random models
        #[arg(long)]
        model: Option<PathBuf>,
    },
    /// Parse a model file and print its canonical JSON form
    Dump {
        #[arg(long)]
        model: PathBuf,
    },
    /// Parse a basis id JSON object and echo it canonically
    BasisId {
        /// e.g. {"family":"T","n":3,"S":[1]}
        json: String,
    },
}

#[derive(Subcommand)]
enum PermOp {
    /// Compose two signed permutations (left acts after right)
    Compose {
        #[arg(allow_hyphen_values = true)]
        outer: String,
        #[arg(allow_hyphen_values = true)]
        inner: String,
    },
    /// Group inverse
    Inverse {
        #[arg(allow_hyphen_values = true)]
        perm: String,
    },
    /// Standardization of a decorated integer sequence
    Standardize {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// resolve repeated entries by first occurrence instead of rejecting
        #[arg(long)]
        ties: bool,
    },
    /// Descent set of an unsigned permutation
    Descents {
        #[arg(allow_hyphen_values = true)]
        perm: String,
    },
    /// Regression set of a signed permutation
    Regressions {
        #[arg(allow_hyphen_values = true)]
        perm: String,
    },
}

#[derive(Subcommand)]
enum EvalOp {
    /// Evaluation map of a single signed permutation
    Angle {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
    },
    /// Bracket descriptor over letters k (off-space), -k (model space), ^k (full)
    Bracket {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Composite symbol: head permutation plus trailing full-perturbation block
    Composite {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        head: String,
        #[arg(long, default_value_t = 0)]
        tail: usize,
    },
    /// Picard terms of the full perturbation up to the given order
    Picard {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn emit(value: &impl serde::Serialize) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable output")
    );
}

fn parse_perm(s: &str) -> Result<SignedPermutation, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn check_degree(n: usize, allow_degree_7: bool) -> Result<(), String> {
    let cap = if allow_degree_7 {
        HARD_MAX_DEGREE
    } else {
        DEFAULT_MAX_DEGREE
    };
    if n > cap {
        return Err(format!(
            "degree {n} exceeds the cap of {cap}{}",
            if allow_degree_7 {
                ""
            } else {
                " (pass --allow-degree-7 to go one higher)"
            }
        ));
    }
    Ok(())
}

fn load_model(path: &PathBuf) -> Result<RatModel, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let json: ModelJson = serde_json::from_str(&text).map_err(|e| format!("{e}"))?;
    model_from_json(&json).map_err(|e| format!("{e}"))
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Perm { op } => run_perm(op)?,
        Command::Conv { x, y } => {
            let x = parse_perm(&x)?;
            let y = parse_perm(&y)?;
            let product: RatElement =
                convolve(&AlgebraElement::basis(x), &AlgebraElement::basis(y));
            emit(&element_to_json(&product));
        }
        Command::Shuffle { u, v } => {
            let u = parse_word(&u).map_err(|e| format!("{e}"))?;
            let v = parse_word(&v).map_err(|e| format!("{e}"))?;
            let s = hyperchen_core::word::shuffle(&u, &v);
            let terms: Vec<_> = s
                .terms()
                .map(|(w, m)| json!({"word": format_word(w), "mult": m}))
                .collect();
            emit(&json!({ "terms": terms }));
        }
        Command::Basis {
            family,
            n,
            subset,
            allow_degree_7,
        } => {
            check_degree(n, allow_degree_7)?;
            let members = parse_subset(&subset)?;
            let id = basis_id_from_json(&BasisIdJson {
                family,
                n,
                subset: members,
            })
            .map_err(|e| format!("{e}"))?;
            emit(&element_to_json(&expand_basis(&id)));
        }
        Command::Sol { n } => {
            check_degree(n, true)?;
            emit(&element_to_json(&solomon_idempotent(n)));
        }
        Command::Omega {
            max_degree,
            basis,
            allow_degree_7,
        } => {
            check_degree(max_degree, allow_degree_7)?;
            let basis = match basis.as_str() {
                "T" => OmegaBasis::T,
                "canonical" => OmegaBasis::Canonical,
                other => return Err(format!("unknown basis {other:?}: use T or canonical")),
            };
            emit(&series_to_json(&omega_r(max_degree, basis)));
        }
        Command::Eval { op } => run_eval(op)?,
        Command::Verify {
            suite,
            max_degree,
            max_total_degree,
            dim,
            seed,
            models,
            lower,
            upper,
            model,
        } => {
            let defaults = VerifyOptions::default();
            let opts = VerifyOptions {
                max_degree: max_degree.unwrap_or(defaults.max_degree),
                max_total_degree: max_total_degree.unwrap_or(defaults.max_total_degree),
                dim: dim.unwrap_or(defaults.dim),
                seed: seed.unwrap_or(defaults.seed),
                models: models.unwrap_or(defaults.models),
                lower: match lower {
                    Some(s) => parse_rational(&s).map_err(|e| format!("{e}"))?,
                    None => defaults.lower,
                },
                upper: match upper {
                    Some(s) => parse_rational(&s).map_err(|e| format!("{e}"))?,
                    None => defaults.upper,
                },
                model: match model {
                    Some(path) => Some(load_model(&path)?),
                    None => None,
                },
            };
            let report =
                run_suite(&suite, &opts).ok_or_else(|| format!("unknown suite {suite:?}"))?;
            emit(&report);
            return Ok(if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
        Command::Dump { model } => {
            let model = load_model(&model)?;
            emit(&model_to_json(&model));
        }
        Command::BasisId { json } => {
            let parsed: BasisIdJson = serde_json::from_str(&json).map_err(|e| format!("{e}"))?;
            let id = basis_id_from_json(&parsed).map_err(|e| format!("{e}"))?;
            emit(&basis_id_to_json(&id));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_perm(op: PermOp) -> Result<(), String> {
    match op {
        PermOp::Compose { outer, inner } => {
            let b = parse_perm(&outer)?;
            let s = parse_perm(&inner)?;
            let r = b.compose(&s).map_err(|e| format!("{e}"))?;
            emit(&json!({"perm": r.to_string()}));
        }
        PermOp::Inverse { perm } => {
            let p = parse_perm(&perm)?;
            emit(&json!({"perm": p.inverse().to_string()}));
        }
        PermOp::Standardize { word, ties } => {
            let (values, bars) = parse_decorated(&word).map_err(|e| format!("{e}"))?;
            let st = if ties {
                standardize_with_ties(&values, &bars)
            } else {
                standardize(&values, &bars)
            }
            .map_err(|e| format!("{e}"))?;
            emit(&json!({"perm": st.to_string()}));
        }
        PermOp::Descents { perm } => {
            let p = parse_perm(&perm)?;
            let d = p.descent_set().map_err(|e| format!("{e}"))?;
            emit(&json!({"n": p.degree(), "set": d.members()}));
        }
        PermOp::Regressions { perm } => {
            let p = parse_perm(&perm)?;
            emit(&json!({"n": p.degree(), "set": p.regression_set().members()}));
        }
    }
    Ok(())
}

fn run_eval(op: EvalOp) -> Result<(), String> {
    match op {
        EvalOp::Angle { model, perm } => {
            let model = load_model(&model)?;
            let p = parse_perm(&perm)?;
            let (a, b) = model.operators();
            let mut ev = ChenEvaluator::new(model.window().clone());
            let matrix = ev
                .eval_angle(&AlgebraElement::basis(p), &a, &b)
                .map_err(|e| format!("{e}"))?;
            emit(&json!({"matrix": matrix_rows(&matrix)}));
        }
        EvalOp::Bracket { model, word } => {
            let model = load_model(&model)?;
            let descriptor = IntegralDescriptor::parse(&word).map_err(|e| format!("{e}"))?;
            let mut ev = ChenEvaluator::new(model.window().clone());
            let matrix = ev
                .eval_bracket(&descriptor, model.perturbation(), model.projector())
                .map_err(|e| format!("{e}"))?;
            emit(&json!({"matrix": matrix_rows(&matrix)}));
        }
        EvalOp::Composite { model, head, tail } => {
            let model = load_model(&model)?;
            let head = parse_perm(&head)?;
            let sym = CompositeSymbol::new(head, tail).map_err(|e| format!("{e}"))?;
            let mut ev = ChenEvaluator::new(model.window().clone());
            let matrix = ev
                .eval_composite(&sym, model.perturbation(), model.projector())
                .map_err(|e| format!("{e}"))?;
            emit(&json!({"matrix": matrix_rows(&matrix)}));
        }
        EvalOp::Picard { model, order } => {
            let model = load_model(&model)?;
            let u = picard_terms(&model, order).map_err(|e| format!("{e}"))?;
            let terms: Vec<_> = u.terms().iter().map(matrix_rows).collect();
            emit(&json!({"order": order, "terms": terms}));
        }
    }
    Ok(())
}

fn parse_subset(s: &str) -> Result<Vec<usize>, String> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| format!("bad subset entry {t:?}"))
        })
        .collect()
}
