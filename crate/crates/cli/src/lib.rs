//! Front end for the `weyl` binary: expression parsing, text and JSON
//! rendering, and subcommand dispatch.
//!
//! [`run`] is the whole program minus process I/O, so it can be tested
//! in-process.

pub mod expr;
pub mod report;
pub mod sketch;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{error::ErrorKind, Parser, Subcommand};
use weyl_core::{
    find_witness_box_capped, AnalyzeOptions, Outcome, WeylError, WeylElement, DEFAULT_BOX_BOUND,
    DEFAULT_BOX_CAP,
};

use crate::expr::parse_element;
use crate::report::{build_report, grade_report, polygon_report, AnalysisReport};

/// Environment variable overriding the box-oracle cap.
pub const BOX_CAP_VAR: &str = "WEYL_BOX_CAP";

#[derive(Parser, Debug)]
#[command(name = "weyl", version, about = "Exact computations in the first Weyl algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form of an expression.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the normal form of [A, B] = AB - BA.
    Commutator {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Grade components, h-form and grade span.
    Grade {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Newton-polygon edges and joining vertices, with a lattice sketch.
    Polygon {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run the solvability ladder for [x, y] = 1.
    Analyze {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Side of the witness-search box.
        #[arg(long = "box", value_name = "N", default_value_t = DEFAULT_BOX_BOUND)]
        box_bound: u32,
        /// Emit the JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Search for a witness y with [x, y] = 1 and exponents at most N.
    Oracle {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long = "box", value_name = "N")]
        box_bound: u32,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Output {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<WeylError> for Failure {
    fn from(e: WeylError) -> Self {
        match e {
            WeylError::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Runs the program on `args` (including the program name). `box_cap` is
/// the raw value of `WEYL_BOX_CAP`, if set.
pub fn run<I, T>(args: I, box_cap: Option<&str>) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output::ok(text),
                _ => Output::fail(1, text),
            };
        }
    };
    match dispatch(cli.command, box_cap) {
        Ok(out) => Output::ok(out),
        Err(Failure::Usage(msg)) => Output::fail(1, format!("error: {msg}\n")),
        Err(Failure::Internal(msg)) => Output::fail(2, format!("internal error: {msg}\n")),
    }
}

fn parse(s: &str) -> Result<WeylElement, Failure> {
    parse_element(s).map_err(|e| Failure::Usage(e.to_string()))
}

fn box_cap(raw: Option<&str>) -> Result<u32, Failure> {
    match raw {
        None => Ok(DEFAULT_BOX_CAP),
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{BOX_CAP_VAR} must be a nonnegative integer, got {s:?}"))),
    }
}

fn dispatch(cmd: Command, raw_cap: Option<&str>) -> Result<String, Failure> {
    let mut out = String::new();
    match cmd {
        Command::Normalize { expr } => {
            writeln!(out, "{}", parse(&expr)?).unwrap();
        }
        Command::Commutator { a, b } => {
            let (a, b) = (parse(&a)?, parse(&b)?);
            writeln!(out, "{}", a.commutator(&b)).unwrap();
        }
        Command::Grade { expr } => {
            let x = parse(&expr)?;
            let span = weyl_core::grade_span(&x)?;
            writeln!(out, "grade span: [{}, {}]", span.min_grade, span.max_grade).unwrap();
            for c in grade_report(&x) {
                writeln!(out, "grade {}: {}", c.grade, c.element.text).unwrap();
                writeln!(out, "  h-form: ({}) * {}", c.h_text, generator_power(c.grade)).unwrap();
            }
        }
        Command::Polygon { expr } => {
            let x = parse(&expr)?;
            let poly = polygon_report(&x)?.ok_or(WeylError::ZeroElement("Newton polygon"))?;
            if poly.edges.is_empty() {
                writeln!(out, "edges: none").unwrap();
            } else {
                writeln!(out, "edges:").unwrap();
            }
            for e in &poly.edges {
                let support: Vec<String> =
                    e.support.iter().map(|(i, j)| format!("({i},{j})")).collect();
                write!(
                    out,
                    "  weight {} degree {} support {} polynomial {}",
                    e.weight,
                    e.degree,
                    support.join(" "),
                    e.polynomial_text
                )
                .unwrap();
                if let Some(r) = e.power_index {
                    write!(out, " power index {r}").unwrap();
                }
                out.push('\n');
            }
            if !poly.vertices.is_empty() {
                writeln!(out, "vertices:").unwrap();
            }
            for v in &poly.vertices {
                writeln!(
                    out,
                    "  ({},{}) separating weight {}",
                    v.point.0, v.point.1, v.separating_weight
                )
                .unwrap();
            }
            writeln!(out, "lattice:").unwrap();
            out.push_str(&sketch::render(&x, &poly));
        }
        Command::Analyze {
            expr,
            box_bound,
            json,
        } => {
            let x = parse(&expr)?;
            let opts = AnalyzeOptions {
                box_bound: Some(box_bound),
                box_cap: box_cap(raw_cap)?,
            };
            if box_bound > opts.box_cap {
                return Err(WeylError::BoxBoundExceedsCap {
                    bound: box_bound,
                    cap: opts.box_cap,
                }
                .into());
            }
            let report = build_report(&expr, &x, &opts)?;
            if json {
                let text = serde_json::to_string_pretty(&report)
                    .map_err(|e| Failure::Internal(e.to_string()))?;
                writeln!(out, "{text}").unwrap();
            } else {
                render_report(&mut out, &report);
            }
        }
        Command::Oracle { expr, box_bound } => {
            let x = parse(&expr)?;
            match find_witness_box_capped(&x, box_bound, box_cap(raw_cap)?)? {
                Some(y) => writeln!(out, "witness: {y}").unwrap(),
                None => writeln!(out, "no witness with exponents <= {box_bound}").unwrap(),
            }
        }
    }
    Ok(out)
}

fn generator_power(grade: i64) -> String {
    match grade {
        0 => "1".to_string(),
        1 => "q".to_string(),
        -1 => "p".to_string(),
        s if s > 0 => format!("q^{s}"),
        s => format!("p^{}", -s),
    }
}

fn render_report(out: &mut String, r: &AnalysisReport) {
    writeln!(out, "input: {}", r.input).unwrap();
    writeln!(out, "normal form: {}", r.normal_form.text).unwrap();
    if let Some(span) = r.grade_span {
        writeln!(out, "grade span: [{}, {}]", span.min_grade, span.max_grade).unwrap();
    }
    if let Some(poly) = &r.polygon {
        let edges: Vec<String> = poly
            .edges
            .iter()
            .map(|e| match e.power_index {
                Some(k) => format!("{} (power index {k})", e.weight),
                None => e.weight.to_string(),
            })
            .collect();
        let listed = if edges.is_empty() { "none".to_string() } else { edges.join(", ") };
        writeln!(out, "edges: {listed}").unwrap();
    }
    let outcome = match r.verdict.outcome {
        Outcome::Solvable => "solvable",
        Outcome::Unsolvable => "unsolvable",
        Outcome::Unknown => "unknown",
    };
    writeln!(out, "verdict: {outcome}").unwrap();
    if let Some(w) = &r.witness {
        writeln!(out, "witness: {}", w.text).unwrap();
    }
    for reason in &r.verdict.reasons {
        writeln!(out, "rule: {}", reason.rule).unwrap();
        for (k, v) in &reason.parameters {
            writeln!(out, "  {k}: {v}").unwrap();
        }
        writeln!(out, "  statement: {}", reason.citation).unwrap();
    }
    let tried: Vec<String> = r.verdict.attempted.iter().map(|id| id.to_string()).collect();
    writeln!(out, "attempted: {}", tried.join(", ")).unwrap();
    match r.oracle_bound {
        Some(n) => writeln!(out, "oracle bound: {n}").unwrap(),
        None => writeln!(out, "oracle bound: not run").unwrap(),
    }
}
