//! Subcommands and their text / json-lines renderings.

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use stillman_core::exactmath::DegreeVector;
use stillman_core::monoid::{self, FgMonoid};
use stillman_core::polyring::{self, IdealPresentation, MGPolyRing};
use stillman_core::resolution::{self, ResolutionError, ResolutionOptions};
use stillman_core::stillman::{
    self, factor_through, finest_grading, BoundReport, DegreeSequence, ReportOptions, StillmanError,
};

use crate::input::{parse_field_descriptor, parse_input, print_input};

/// Environment variable capping the number of S-pairs a resolution may
/// process.
pub const MAX_PAIRS_ENV: &str = "MGSTILL_MAX_PAIRS";

#[derive(Debug, Parser)]
#[command(name = "mgstill", version, about = "Stillman-type bounds for multigraded polynomial ideals")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Mccullough,
    BurchKohn,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pointedness and bounded factorization of a monoid: the one generated
    /// by `--gens`, or the support of the input ring.
    MonoidCheck {
        /// Generator list such as "(1,0);(-2,1);(0,1)".
        #[arg(long)]
        gens: Option<String>,
        /// Input file; `-` or absent reads standard input.
        input: Option<PathBuf>,
    },
    /// Projective dimension of S/I.
    Pdim {
        input: Option<PathBuf>,
        /// Positive integer weights, one per variable (default all ones).
        #[arg(long, value_delimiter = ',')]
        weight: Option<Vec<u64>>,
        /// Override the coefficient field: QQ or GF(p).
        #[arg(long)]
        field: Option<String>,
    },
    /// Full bound report.
    Report {
        input: Option<PathBuf>,
        /// Degree bound per generator, e.g. "(3,0);(1,2)".
        #[arg(long)]
        degrees: Option<String>,
        #[arg(long, value_delimiter = ',')]
        weight: Option<Vec<u64>>,
        #[arg(long)]
        field: Option<String>,
        /// Skip the free resolution.
        #[arg(long)]
        no_pdim: bool,
    },
    /// Print a member of a family in the input format.
    Family {
        #[arg(value_enum)]
        name: Family,
        #[arg(long)]
        n: usize,
    },
    /// Ideal with `b` + 2 projective dimension over a monoid without bounded
    /// factorization.
    Counterexample {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        b: usize,
    },
    /// Finest grading making the generators homogeneous.
    Refine { input: Option<PathBuf> },
}

/// Exit code, standard output and standard error of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    /// Malformed input or arguments: exit 2.
    Input(String),
    /// Well-formed input the analysis refuses: exit 1.
    Rejected(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Rejected(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Rejected(m) => m,
        }
    }
}

fn resolution_failure(e: ResolutionError) -> Failure {
    match e {
        ResolutionError::NonPositiveWeight(_)
        | ResolutionError::WeightLength { .. }
        | ResolutionError::ZeroGenerator(_)
        | ResolutionError::NotInField(_) => Failure::Input(e.to_string()),
        _ => Failure::Rejected(e.to_string()),
    }
}

fn stillman_failure(e: StillmanError) -> Failure {
    match e {
        StillmanError::Resolution(r) => resolution_failure(r),
        StillmanError::InvalidParameter(_)
        | StillmanError::Ring(_)
        | StillmanError::Monoid(_)
        | StillmanError::Math(_) => Failure::Input(e.to_string()),
        _ => Failure::Rejected(e.to_string()),
    }
}

/// Read [`MAX_PAIRS_ENV`].
pub fn max_pairs_from_env() -> Result<Option<usize>, String> {
    match std::env::var(MAX_PAIRS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("{MAX_PAIRS_ENV} must be a nonnegative integer, found `{v}`")),
        Err(_) => Ok(None),
    }
}

fn read_source(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            return std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())));
        }
        _ => stdin
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("standard input: {e}")))?,
    };
    Ok(text)
}

fn read_ideal(
    path: &Option<PathBuf>,
    field: &Option<String>,
    stdin: &mut dyn Read,
) -> Result<IdealPresentation, Failure> {
    let text = read_source(path, stdin)?;
    let (ring, ideal) = parse_input(&text).map_err(|e| Failure::Input(e.to_string()))?;
    let ideal = ideal.ok_or_else(|| Failure::Input("input has no ideal generators".into()))?;
    match field {
        Some(f) => {
            let field = parse_field_descriptor(f).map_err(|e| Failure::Input(format!("--field: {}", e.message)))?;
            ideal
                .with_ring(ring.with_field(field))
                .map_err(|e| Failure::Input(e.to_string()))
        }
        None => Ok(ideal),
    }
}

fn parse_gens(text: &str) -> Result<FgMonoid, Failure> {
    let gens = monoid::parse_generators(text).map_err(|e| Failure::Input(format!("--gens: {e}")))?;
    let dim = gens
        .first()
        .map(DegreeVector::dimension)
        .ok_or_else(|| Failure::Input("--gens: no generators".into()))?;
    FgMonoid::new(dim, gens).map_err(|e| Failure::Input(format!("--gens: {e}")))
}

fn vec_json(d: &DegreeVector) -> Value {
    Value::Array(d.entries().iter().map(|q| Value::String(q.to_string())).collect())
}

fn vecs_json(ds: &[DegreeVector]) -> Value {
    Value::Array(ds.iter().map(vec_json).collect())
}

fn join(ds: &[DegreeVector]) -> String {
    ds.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

struct Rendered {
    text: String,
    json: Value,
}

fn monoid_check(m: &FgMonoid, zero_vars: &[String]) -> Result<Rendered, Failure> {
    let (bf, witness, cert) = monoid::has_bounded_factorization(m);
    let (pointed, _) = monoid::is_pointed(m);
    let mut json = json!({
        "command": "monoid-check",
        "status": "ok",
        "generators": vecs_json(m.generators()),
        "pointed": pointed,
        "bounded_factorization": bf,
        "witness": null,
        "certificate": null,
        "degree_zero_variables": zero_vars,
    });
    let mut text = format!("pointed: {}, bounded factorization: {}", yes(pointed), yes(bf));
    if let Some(w) = witness {
        // prefer the primitive integral functional when the generators are integral
        let c = monoid::flattening_exists(m)
            .ok()
            .flatten()
            .unwrap_or_else(|| w.functional().clone());
        let ok = monoid::verify_height_witness(m.generators(), &c).map_err(|e| Failure::Rejected(e.to_string()))?;
        if !ok {
            return Err(Failure::Rejected(format!("internal error: witness {c} failed verification")));
        }
        text.push_str(&format!(", witness: {c}"));
        json["witness"] = vec_json(&c);
    }
    if let Some(cert) = cert {
        text.push_str(&format!(", certificate: {cert}"));
        json["certificate"] = json!({
            "relation": cert
                .relation
                .iter()
                .map(|(g, k)| json!({"generator": vec_json(g), "multiplicity": k}))
                .collect::<Vec<_>>(),
        });
    }
    if !zero_vars.is_empty() {
        text.push_str(&format!("\ndegree-zero variables: {}", zero_vars.join(", ")));
    }
    Ok(Rendered { text, json })
}

fn report_json(r: &BoundReport) -> Value {
    json!({
        "command": "report",
        "status": "ok",
        "support_bf": r.support_bf,
        "support_generators": vecs_json(&r.support_generators),
        "height_witness": vec_json(&r.height_witness),
        "degree_bounds": r.degree_bounds.iter().map(|d| d.as_ref().map_or(Value::Null, vec_json)).collect::<Vec<_>>(),
        "flattening_bounds": r.flattening_bounds,
        "flattened_degrees": r.flattened_degrees,
        "known_bound": r.known_bound.as_ref().map(|k| json!({"degrees": k.degrees, "bound": k.bound})),
        "hilbert_bound": r.hilbert_bound,
        "pdim": r.pdim,
        "pdim_weight": r.pdim_weight,
        "regular_sequence": r.regular_sequence,
        "finest_rank": r.finest.rank(),
        "finest_torsion": r.finest.torsion.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "refined_degrees": vecs_json(&r.refined_degrees),
    })
}

/// Report keys that are present, possibly null, in every report line.
pub const REPORT_KEYS: [&str; 4] = ["support_bf", "hilbert_bound", "pdim", "flattened_degrees"];

fn resolution_options(max_pairs: Option<usize>) -> ResolutionOptions {
    ResolutionOptions {
        cancel: None,
        max_pairs,
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read, max_pairs: Option<usize>) -> Result<Rendered, Failure> {
    match &cli.command {
        Command::MonoidCheck { gens: Some(g), .. } => monoid_check(&parse_gens(g)?, &[]),
        Command::MonoidCheck { gens: None, input } => {
            let text = read_source(input, stdin)?;
            let (ring, _) = parse_input(&text).map_err(|e| Failure::Input(e.to_string()))?;
            let (m, zero) = polyring::support_monoid(&ring).map_err(|e| Failure::Input(e.to_string()))?;
            let names: Vec<String> = zero.iter().map(|&v| ring.variables()[v].clone()).collect();
            monoid_check(&m, &names)
        }
        Command::Pdim { input, weight, field } => {
            let ideal = read_ideal(input, field, stdin)?;
            let w = weight.clone().unwrap_or_else(|| vec![1; ideal.ring().nvars()]);
            let p = resolution::pdim_with(&ideal, &w, &resolution_options(max_pairs)).map_err(resolution_failure)?;
            Ok(Rendered {
                text: p.to_string(),
                json: json!({
                    "command": "pdim",
                    "status": "ok",
                    "pdim": p,
                    "weight": w,
                    "field": ideal.ring().field().to_string(),
                }),
            })
        }
        Command::Report {
            input,
            degrees,
            weight,
            field,
            no_pdim,
        } => {
            let ideal = read_ideal(input, field, stdin)?;
            let seq = match degrees {
                Some(text) => {
                    let ds = monoid::parse_generators(text).map_err(|e| Failure::Input(format!("--degrees: {e}")))?;
                    if ds.len() != ideal.generators().len() {
                        return Err(Failure::Input(format!(
                            "--degrees: {} bounds for {} generators",
                            ds.len(),
                            ideal.generators().len()
                        )));
                    }
                    let rank = ideal.ring().grading().rank();
                    if let Some(d) = ds.iter().find(|d| d.dimension() != rank) {
                        return Err(Failure::Input(format!("--degrees: {d} does not have rank {rank}")));
                    }
                    Some(DegreeSequence::new(ds).map_err(stillman_failure)?)
                }
                None => None,
            };
            let opts = ReportOptions {
                compute_pdim: !no_pdim,
                weight: weight.clone(),
                resolution: resolution_options(max_pairs),
            };
            let r = stillman::stillman_report(&ideal, seq.as_ref(), &opts).map_err(stillman_failure)?;
            Ok(Rendered {
                text: r.to_string(),
                json: report_json(&r),
            })
        }
        Command::Family { name, n } => {
            let (label, ideal) = match name {
                Family::Mccullough => ("mccullough", stillman::mccullough_family(*n)),
                Family::BurchKohn => ("burch-kohn", stillman::burch_kohn_family(*n)),
            };
            let ideal = ideal.map_err(stillman_failure)?;
            let text = print_input(ideal.ring(), Some(&ideal));
            Ok(Rendered {
                json: json!({"command": "family", "status": "ok", "family": label, "n": n, "input": text}),
                text: text.trim_end().to_string(),
            })
        }
        Command::Counterexample { gens, b } => {
            let m = parse_gens(gens)?;
            let (ring, ideal, cert) = stillman::non_bf_counterexample(&m, *b).map_err(stillman_failure)?;
            let input = print_input(&ring, Some(&ideal));
            let text = format!("# factorization: {} = {}\n{}", cert.target, cert.parts.iter().map(ToString::to_string).collect::<Vec<_>>().join(" + "), input);
            Ok(Rendered {
                json: json!({
                    "command": "counterexample",
                    "status": "ok",
                    "b": b,
                    "target": vec_json(&cert.target),
                    "parts": vecs_json(&cert.parts),
                    "input": input,
                }),
                text: text.trim_end().to_string(),
            })
        }
        Command::Refine { input } => {
            let ideal = read_ideal(input, &None, stdin)?;
            let ring = ideal.ring();
            let fg = finest_grading(ideal.generators(), ring.nvars()).map_err(stillman_failure)?;
            let refined: Vec<DegreeVector> = ideal
                .generators()
                .iter()
                .map(|g| fg.degree_of(g).expect("nonzero generator"))
                .collect();
            let factors = factor_through(&fg.grading, ring.grading()).is_some();
            let regraded: MGPolyRing = ring
                .with_grading(fg.grading.clone())
                .map_err(|e| Failure::Rejected(e.to_string()))?;
            let refined_ideal = ideal
                .with_ring(regraded.clone())
                .map_err(|e| Failure::Rejected(e.to_string()))?;
            let input = print_input(&regraded, Some(&refined_ideal));
            let torsion: Vec<String> = fg.torsion.iter().map(ToString::to_string).collect();
            let text = format!(
                "# finest grading rank {}, torsion {}\n# refined degrees: {}\n# input grading factors through it: {}\n{}",
                fg.rank(),
                if torsion.is_empty() { "none".to_string() } else { torsion.join(", ") },
                join(&refined),
                yes(factors),
                input
            );
            Ok(Rendered {
                json: json!({
                    "command": "refine",
                    "status": "ok",
                    "rank": fg.rank(),
                    "torsion": torsion,
                    "variable_degrees": vecs_json(fg.grading.degrees()),
                    "refined_degrees": vecs_json(&refined),
                    "input_factors_through": factors,
                    "input": input,
                }),
                text: text.trim_end().to_string(),
            })
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::MonoidCheck { .. } => "monoid-check",
        Command::Pdim { .. } => "pdim",
        Command::Report { .. } => "report",
        Command::Family { .. } => "family",
        Command::Counterexample { .. } => "counterexample",
        Command::Refine { .. } => "refine",
    }
}

/// Run one command against `stdin`; nothing is printed.
pub fn run(cli: &Cli, stdin: &mut dyn Read, max_pairs: Option<usize>) -> Outcome {
    match execute(cli, stdin, max_pairs) {
        Ok(r) => Outcome {
            code: 0,
            stdout: match cli.format {
                Format::Text => format!("{}\n", r.text),
                Format::JsonLines => format!("{}\n", r.json),
            },
            stderr: String::new(),
        },
        Err(f) => {
            let label = if f.code() == 1 { "rejected" } else { "error" };
            let stdout = match cli.format {
                Format::Text => String::new(),
                Format::JsonLines => {
                    let mut obj = json!({
                        "command": command_name(&cli.command),
                        "status": label,
                        "error": f.message(),
                    });
                    if matches!(cli.command, Command::Report { .. }) {
                        for key in REPORT_KEYS {
                            obj[key] = Value::Null;
                        }
                    }
                    format!("{obj}\n")
                }
            };
            Outcome {
                code: f.code(),
                stdout,
                stderr: format!("{label}: {}\n", f.message()),
            }
        }
    }
}

