//! The `rslice` command line. Every subcommand reads an optional JSON
//! document (file argument or stdin) and writes one JSON document (or DOT)
//! to stdout. Exit codes: 0 success, 1 domain error or failed verification,
//! 2 malformed input.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::atlas::build_atlas;
use crate::classes::{class_dimension, classify, enumerate_classes};
use crate::error::LieError;
use crate::io::{self, element_field, emit_label, emit_matrix, emit_partition, emit_triple, Malformed};
use crate::lie::{certify, jm_complete, jordan_decompose, Family, LieAlgebraSpec, Sl2Triple};
use crate::residual::{ax_presentation, subquotient_data, trivial_action_core};
use crate::roots::{ls_induce, orbit_dimension, richardson, LeviOrbitPair, LeviSubset};
use crate::slices::{complementary_slice, contracting_weights, membership_sx, natural_slice, slodowy_slice};
use crate::verify::run_suite;

#[derive(Parser, Debug)]
#[command(name = "rslice", version, about = "Exact slices and decomposition classes for gl_n and sl_n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = AlgebraFlag::Gl)]
    pub algebra: AlgebraFlag,
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 6)]
    pub bound: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraFlag {
    Gl,
    Sl,
}

impl From<AlgebraFlag> for Family {
    fn from(a: AlgebraFlag) -> Family {
        match a {
            AlgebraFlag::Gl => Family::Gl,
            AlgebraFlag::Sl => Family::Sl,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Jordan-Chevalley decomposition with certificate. Input: {"matrix"}.
    Jordan { input: Option<String> },
    /// Complete a nilpotent to an sl2-triple. Input: {"matrix"}.
    Jm { input: Option<String> },
    /// Slodowy slice at a nilpotent. Input: {"matrix"}.
    Slodowy { input: Option<String> },
    /// Decomposition class label. Input: {"matrix"}.
    Classify { input: Option<String> },
    /// Class dimension. Input: {"label": [{size, partition}]}.
    ClassDim { input: Option<String> },
    /// All class labels of the algebra given by --n/--algebra.
    Enumerate,
    /// Lusztig-Spaltenstein induction. Input: {"blocks", "orbits"}.
    Induce { input: Option<String> },
    /// Richardson orbit of the parabolic with these Levi blocks.
    Richardson {
        #[arg(long, value_delimiter = ',', required = true)]
        blocks: Vec<usize>,
    },
    /// Descriptor of the natural slice S_x. Input: {"matrix"}.
    NaturalSlice { input: Option<String> },
    /// Complementary slice S_{x,T}. Input: {"matrix", "triple"?}.
    CompSlice { input: Option<String> },
    /// Is y in S_x? Input: {"x", "y"}.
    Membership { input: Option<String> },
    /// Residual group data of x. Input: {"matrix"}.
    Residual { input: Option<String> },
    /// Seeded invariant sweep; the suite is one of the verify suites or "all".
    Verify { suite: String },
    /// Certified part of the closure order, as JSON or DOT.
    Atlas,
}

enum Failure {
    Malformed(String),
    Domain(LieError),
    /// Verification ran but did not pass; the report is still printed.
    Failed(Value),
}

impl From<Malformed> for Failure {
    fn from(m: Malformed) -> Self {
        Failure::Malformed(m.0)
    }
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        Failure::Domain(e)
    }
}

/// Output text and exit code.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// Parse arguments and run; `stdin` is consulted only when a command needs
/// a document and no file was given.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome { code, stdout: e.to_string() };
        }
    };
    match execute(&cli, stdin) {
        Ok(Output::Json(v)) => Outcome { code: 0, stdout: pretty(&v) },
        Ok(Output::Text(s)) => Outcome { code: 0, stdout: s },
        Err(Failure::Failed(v)) => Outcome { code: 1, stdout: pretty(&v) },
        Err(Failure::Domain(e)) => Outcome { code: 1, stdout: pretty(&io::emit_error(&e)) },
        Err(Failure::Malformed(m)) => Outcome { code: 2, stdout: pretty(&json!({"kind": "Malformed", "message": m})) },
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

enum Output {
    Json(Value),
    Text(String),
}

fn read_doc(input: &Option<String>, stdin: &mut dyn Read) -> Result<Value, Failure> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Malformed(format!("{path}: {e}")))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Failure::Malformed(e.to_string()))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Failure::Malformed(format!("invalid JSON: {e}")))
}

fn algebra_from_flags(cli: &Cli) -> Result<LieAlgebraSpec, Failure> {
    let n = cli.n.ok_or_else(|| Failure::Malformed("--n is required".into()))?;
    LieAlgebraSpec::new(cli.algebra.into(), n).map_err(|e| Failure::Malformed(e.to_string()))
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, Failure> {
    let family: Family = cli.algebra.into();
    let json = |v: Value| Ok(Output::Json(v));
    match &cli.command {
        Command::Jordan { input } => {
            let x = element_field(&read_doc(input, stdin)?, "matrix", family)?;
            let jd = jordan_decompose(&x)?;
            let cert = certify(&x, &jd)?;
            json(json!({
                "semisimple": emit_matrix(jd.semisimple.matrix()),
                "nilpotent": emit_matrix(jd.nilpotent.matrix()),
                "certificate": {
                    "sum": cert.sum_ok,
                    "commute": cert.commute_ok,
                    "squarefree": cert.squarefree_ok,
                    "nilpotent": cert.nilpotent_ok,
                    "witness": cert.witness.as_ref().map(|p| io::emit_vector(p.coeffs())),
                },
            }))
        }
        Command::Jm { input } => {
            let e = element_field(&read_doc(input, stdin)?, "matrix", family)?;
            let t = jm_complete(&e)?;
            let c = t.check()?;
            let mut v = emit_triple(&t);
            v["checks"] = json!({"ef_is_h": c.ef_is_h, "he_is_2e": c.he_is_2e, "hf_is_minus_2f": c.hf_is_minus_2f});
            json(v)
        }
        Command::Slodowy { input } => {
            let e = element_field(&read_doc(input, stdin)?, "matrix", family)?;
            let t = jm_complete(&e)?;
            let s = slodowy_slice(&t, e.algebra())?;
            json(json!({
                "base": emit_matrix(s.base().matrix()),
                "direction_basis": s.directions().basis().iter().map(emit_matrix).collect::<Vec<_>>(),
                "dim": s.dim(),
                "triple": emit_triple(&t),
                "weights": contracting_weights(&t, e.algebra())?,
            }))
        }
        Command::Classify { input } => {
            let x = element_field(&read_doc(input, stdin)?, "matrix", family)?;
            let label = classify(&x)?;
            json(json!({
                "algebra": io::emit_algebra(x.algebra()),
                "label": emit_label(&label),
                "display": label.to_string(),
                "dimension": class_dimension(&label)?,
            }))
        }
        Command::ClassDim { input } => {
            let doc = read_doc(input, stdin)?;
            let raw = doc.get("label").ok_or_else(|| Failure::Malformed("missing field \"label\"".into()))?;
            let algebra = match doc.get("algebra") {
                Some(a) => io::parse_algebra(a)?,
                None => {
                    let n = raw
                        .as_array()
                        .map(|a| a.iter().filter_map(|p| p.get("size").and_then(Value::as_u64)).sum::<u64>() as usize)
                        .unwrap_or(0);
                    LieAlgebraSpec::new(family, n).map_err(|e| Failure::Malformed(e.to_string()))?
                }
            };
            let label = io::parse_label(algebra, raw)?;
            json(json!({"label": emit_label(&label), "display": label.to_string(), "dimension": class_dimension(&label)?}))
        }
        Command::Enumerate => {
            let g = algebra_from_flags(cli)?;
            if g.n > cli.bound {
                return Err(LieError::BoundExceeded { n: g.n, bound: cli.bound }.into());
            }
            let labels = enumerate_classes(g)
                .iter()
                .map(|l| Ok(json!({"label": emit_label(l), "display": l.to_string(), "dimension": class_dimension(l)?})))
                .collect::<Result<Vec<_>, LieError>>()?;
            json(json!({"algebra": io::emit_algebra(g), "count": labels.len(), "classes": labels}))
        }
        Command::Induce { input } => {
            let doc = read_doc(input, stdin)?;
            let blocks: Vec<usize> = doc
                .get("blocks")
                .and_then(|b| serde_json::from_value(b.clone()).ok())
                .ok_or_else(|| Failure::Malformed("\"blocks\" must be an array of positive integers".into()))?;
            let orbits = doc
                .get("orbits")
                .and_then(Value::as_array)
                .ok_or_else(|| Failure::Malformed("\"orbits\" must be an array of partitions".into()))?
                .iter()
                .map(io::parse_partition)
                .collect::<Result<Vec<_>, _>>()?;
            let levi = LeviSubset::new(blocks.clone())?;
            let pair = LeviOrbitPair::new(blocks, orbits)?;
            let ind = ls_induce(&pair)?;
            json(json!({
                "partition": emit_partition(&ind),
                "dimension": orbit_dimension(&ind, levi.n())?,
                "levi_orbit_dim": pair.levi_orbit_dim(),
                "nilradical_dim": levi.nilradical_dim(),
            }))
        }
        Command::Richardson { blocks } => {
            let p = richardson(blocks)?;
            json(json!({"partition": emit_partition(&p), "dimension": orbit_dimension(&p, p.total())?}))
        }
        Command::NaturalSlice { input } => {
            let x = element_field(&read_doc(input, stdin)?, "matrix", family)?;
            json(to_value(&natural_slice(&x)?.to_doc()))
        }
        Command::CompSlice { input } => {
            let doc = read_doc(input, stdin)?;
            let x = element_field(&doc, "matrix", family)?;
            let triple = match doc.get("triple") {
                Some(t) => {
                    let (e, h, f) = io::parse_triple(t, family)?;
                    Some(Sl2Triple { e, h, f })
                }
                None => None,
            };
            let cs = complementary_slice(&x, triple.as_ref())?;
            json(json!({
                "base": emit_matrix(cs.affine.base().matrix()),
                "direction_basis": cs.affine.directions().basis().iter().map(emit_matrix).collect::<Vec<_>>(),
                "triple": cs.triple.as_ref().map(emit_triple),
                "natural": to_value(&cs.natural.to_doc()),
            }))
        }
        Command::Membership { input } => {
            let doc = read_doc(input, stdin)?;
            let x = element_field(&doc, "x", family)?;
            let y = element_field(&doc, "y", family)?;
            json(to_value(&membership_sx(&y, &x)?))
        }
        Command::Residual { input } => {
            let x = element_field(&read_doc(input, stdin)?, "matrix", family)?;
            let mut v = to_value(&subquotient_data(&x)?);
            v["perp_certificate"] = to_value(&trivial_action_core(&x)?);
            v["presentation"] = to_value(&ax_presentation(&x)?);
            json(v)
        }
        Command::Verify { suite } => {
            let n = cli.n.ok_or_else(|| Failure::Malformed("--n is required".into()))?;
            if n == 0 || n > cli.bound {
                return Err(LieError::BoundExceeded { n, bound: cli.bound }.into());
            }
            let report = match run_suite(suite, n, cli.seed, cli.samples) {
                Err(LieError::Unsupported(m)) => return Err(Failure::Malformed(m)),
                other => other?,
            };
            let v = to_value(&report);
            if report.ok {
                json(v)
            } else {
                Err(Failure::Failed(v))
            }
        }
        Command::Atlas => {
            let atlas = build_atlas(algebra_from_flags(cli)?, cli.bound)?;
            match cli.format {
                Format::Json => json(atlas.to_json()),
                Format::Dot => Ok(Output::Text(atlas.to_dot())),
            }
        }
    }
}
