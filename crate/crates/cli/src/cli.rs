//! Argument parsing and the five subcommands.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 a formula
//! disagreed with the oracle (or a contract failed), 3 an oracle capacity
//! limit was hit.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use fanideal_core::oracle::{betti_table_hochster, betti_table_taylor, graph_invariants};
use fanideal_core::{Field, OracleError, SimpleGraph, SquarefreeMonomialIdeal, Vertex};
use serde_json::json;

use crate::campaign::{
    formula_for, reports_agree, run_campaign, write_jsonl, CampaignOptions, Summary, Verdict,
};
use crate::decompose::decomposition_report;
use crate::formats::{BettiDoc, BuildDoc, FormatError, InputDoc, ReportDoc};
use crate::generate::{Family, GeneratorConfig, Instance};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "fanideal",
    version,
    about = "Invariants of edge ideals of fan graphs: closed formulas checked against a brute-force oracle"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Formula,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    F2,
    Q,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Field {
        match f {
            FieldArg::F2 => Field::Gf2,
            FieldArg::Q => Field::Rationals,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Fans,
    Circ,
    Star,
    Paths,
    Completes,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Fans => Family::Fans,
            FamilyArg::Circ => Family::Circ,
            FamilyArg::Star => Family::Star,
            FamilyArg::Paths => Family::Paths,
            FamilyArg::Completes => Family::Completes,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Hochster,
    Taylor,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Realize a fan or composite specification as a labeled graph.
    Build {
        /// JSON specification file, or `-` for stdin.
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Dimension, depth and regularity of S/I_G.
    Invariants {
        /// Fan specification, composite specification or graph (JSON).
        input: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "f2")]
        field: FieldArg,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Run formulas and oracle over a generated family.
    Verify {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 11)]
        max_vertices: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "f2")]
        field: FieldArg,
        /// Record file (JSON lines); records go to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        /// Add per-phase wall-clock timings to the records.
        #[arg(long)]
        timing: bool,
    },
    /// Split I_G at a vertex into J and K and check the four contracts.
    Decompose {
        input: PathBuf,
        #[arg(long)]
        vertex: Vertex,
        #[arg(long, value_enum, default_value = "f2")]
        field: FieldArg,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    /// Graded Betti numbers of S/I_G.
    Betti {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "f2")]
        field: FieldArg,
        #[arg(long, value_enum, default_value = "hochster")]
        engine: EngineArg,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Format(#[from] FormatError),
    #[error("{0}")]
    Oracle(#[from] OracleError),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Oracle(OracleError::Capacity { .. }) => EXIT_CAPACITY,
            _ => EXIT_USAGE,
        }
    }
}

fn io_error(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn read_input(path: &Path) -> Result<InputDoc, CliError> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(io_error(path))?;
    } else {
        text = fs::read_to_string(path).map_err(io_error(path))?;
    }
    Ok(InputDoc::parse(&text)?)
}

fn input_graph(doc: &InputDoc) -> Result<SimpleGraph, CliError> {
    Ok(match doc {
        InputDoc::Graph(g) => g.clone(),
        InputDoc::Fan(spec) => spec.realize().graph,
        InputDoc::Composite(c) => {
            c.realize()
                .map_err(|e| CliError::Usage(format!("invalid composite: {e}")))?
                .graph
        }
    })
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn report_table(label: &str, r: &ReportDoc) -> String {
    let show = |x: Option<usize>| x.map_or_else(|| "-".to_owned(), |v| v.to_string());
    let mut line = format!(
        "{label:<8} dim {:>3}  depth {:>3}  reg {:>3}",
        show(r.dim),
        show(r.depth),
        show(r.reg)
    );
    if let Some(nu) = r.nu {
        line.push_str(&format!("  nu {nu:>3}"));
    }
    line.push('\n');
    line
}

fn summary_table(s: &Summary) -> String {
    format!(
        "family {}  max_vertices {}  seed {}  field {}\ntotal {}  match {}  mismatch {}  formula-inapplicable {}\n",
        s.family,
        s.max_vertices,
        s.seed,
        s.field,
        s.total,
        s.count(Verdict::Match),
        s.count(Verdict::Mismatch),
        s.count(Verdict::FormulaInapplicable)
    )
}

fn instance_of(doc: &InputDoc) -> Option<Instance> {
    match doc {
        InputDoc::Fan(spec) => Some(Instance::Fan(spec.clone())),
        InputDoc::Composite(c) => Some(Instance::Composite(c.clone())),
        InputDoc::Graph(_) => None,
    }
}

/// Runs one parsed command, writing results to `out`. Returns the exit code.
pub fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let stdout_err = |e: io::Error| CliError::Io {
        path: "<stdout>".into(),
        source: e,
    };
    match command {
        Command::Build {
            input,
            out: path,
            format,
        } => {
            let doc = read_input(&input)?;
            let build = match &doc {
                InputDoc::Fan(spec) => BuildDoc::from_realization(&spec.realize()),
                InputDoc::Composite(c) => BuildDoc::from_composite(
                    &c.realize()
                        .map_err(|e| CliError::Usage(format!("invalid composite: {e}")))?,
                ),
                InputDoc::Graph(g) => BuildDoc::from_graph(g),
            };
            let text = match format {
                FormatArg::Json => pretty(&json!(build)),
                FormatArg::Table => {
                    let edges: Vec<String> = build
                        .graph
                        .edges
                        .iter()
                        .map(|[u, v]| format!("{u}-{v}"))
                        .collect();
                    format!(
                        "{} vertices, {} edges\n{}\n",
                        build.graph.vertices.len(),
                        build.graph.edges.len(),
                        edges.join(" ")
                    )
                }
            };
            match path {
                Some(p) => fs::write(&p, text).map_err(io_error(&p))?,
                None => out.write_all(text.as_bytes()).map_err(stdout_err)?,
            }
            Ok(EXIT_OK)
        }

        Command::Invariants {
            input,
            method,
            field,
            format,
        } => {
            let doc = read_input(&input)?;
            let instance = instance_of(&doc);
            if instance.is_none() && method != MethodArg::Oracle {
                return Err(CliError::Usage(
                    "formulas apply only to fan and composite specifications; use --method oracle for a raw graph".into(),
                ));
            }
            let formula = match (&instance, method) {
                (Some(inst), MethodArg::Formula | MethodArg::Both) => Some(formula_for(inst)),
                _ => None,
            };
            let oracle = if method == MethodArg::Formula {
                None
            } else {
                let g = input_graph(&doc)?;
                let mut r = graph_invariants(&g, field.into())?.report();
                r.nu = Some(g.induced_matching_number());
                Some(r)
            };
            let mut code = EXIT_OK;
            let mut doc_out = serde_json::Map::new();
            let mut table = String::new();
            match &formula {
                Some(Ok(r)) => {
                    table.push_str(&report_table("formula", &ReportDoc::from_report(r)));
                    doc_out.insert("formula".into(), json!(ReportDoc::from_report(r)));
                }
                Some(Err(e)) => {
                    if method == MethodArg::Formula {
                        return Err(CliError::Usage(format!(
                            "formula does not apply: {e} (requires {})",
                            e.precondition()
                        )));
                    }
                    table.push_str(&format!("formula  not applicable: {e}\n"));
                    doc_out.insert("formula".into(), serde_json::Value::Null);
                    doc_out.insert("precondition".into(), json!(e.precondition()));
                    doc_out.insert("reason".into(), json!(e.to_string()));
                }
                None => {}
            }
            if let Some(r) = &oracle {
                table.push_str(&report_table("oracle", &ReportDoc::from_report(r)));
                doc_out.insert("oracle".into(), json!(ReportDoc::from_report(r)));
            }
            if let (Some(f), Some(o)) = (&formula, &oracle) {
                let verdict = match f {
                    Ok(f) if reports_agree(f, o) => Verdict::Match,
                    Ok(_) => {
                        code = EXIT_MISMATCH;
                        Verdict::Mismatch
                    }
                    Err(_) => Verdict::FormulaInapplicable,
                };
                table.push_str(&format!(
                    "verdict  {}\n",
                    json!(verdict).as_str().unwrap_or_default()
                ));
                doc_out.insert("verdict".into(), json!(verdict));
            }
            let text = match format {
                FormatArg::Json => pretty(&serde_json::Value::Object(doc_out)),
                FormatArg::Table => table,
            };
            out.write_all(text.as_bytes()).map_err(stdout_err)?;
            Ok(code)
        }

        Command::Verify {
            family,
            max_vertices,
            samples,
            seed,
            field,
            out: path,
            format,
            timing,
        } => {
            let config = GeneratorConfig {
                family: family.into(),
                max_vertices,
                samples,
                seed,
            };
            let options = CampaignOptions {
                field: field.into(),
                timing,
            };
            let (records, summary) = run_campaign(&config, &options)?;
            match &path {
                Some(p) => {
                    let file = fs::File::create(p).map_err(io_error(p))?;
                    write_jsonl(io::BufWriter::new(file), &records, &summary)
                        .map_err(io_error(p))?;
                    let text = match format {
                        FormatArg::Json => pretty(&json!(summary)),
                        FormatArg::Table => summary_table(&summary),
                    };
                    out.write_all(text.as_bytes()).map_err(stdout_err)?;
                }
                None => write_jsonl(&mut *out, &records, &summary).map_err(stdout_err)?,
            }
            Ok(if summary.count(Verdict::Mismatch) > 0 {
                EXIT_MISMATCH
            } else {
                EXIT_OK
            })
        }

        Command::Decompose {
            input,
            vertex,
            field,
            format,
        } => {
            let g = input_graph(&read_input(&input)?)?;
            if !g.contains_vertex(vertex) {
                return Err(CliError::Usage(format!(
                    "vertex {vertex} is not in the graph"
                )));
            }
            let report = decomposition_report(&g, vertex, field.into())?;
            let text = match format {
                FormatArg::Json => pretty(&json!(report)),
                FormatArg::Table => report.to_text(),
            };
            out.write_all(text.as_bytes()).map_err(stdout_err)?;
            Ok(if report.all_pass() {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            })
        }

        Command::Betti {
            input,
            field,
            engine,
            format,
        } => {
            let g = input_graph(&read_input(&input)?)?;
            let ideal = SquarefreeMonomialIdeal::edge_ideal(&g);
            let table = match engine {
                EngineArg::Hochster => betti_table_hochster(&ideal, field.into())?,
                EngineArg::Taylor => betti_table_taylor(&ideal, field.into())?,
            };
            let doc = BettiDoc::from_table(&table);
            let text = match format {
                FormatArg::Json => pretty(&json!(doc)),
                FormatArg::Table => doc.to_table_text(),
            };
            out.write_all(text.as_bytes()).map_err(stdout_err)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("fanideal").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["verify"]).0, EXIT_USAGE);
        assert_eq!(
            run_args(&["verify", "--family", "paths", "--field", "r"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn help_and_version_exit_zero() {
        let (code, _, text) = run_args(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("verify"));
        assert_eq!(run_args(&["--version"]).0, EXIT_OK);
    }

    #[test]
    fn verify_to_stdout() {
        let (code, out, _) = run_args(&["verify", "--family", "completes", "--max-vertices", "5"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), 5);
    }

    #[test]
    fn missing_file_is_validation_error() {
        let (code, _, err) = run_args(&["invariants", "/nonexistent/spec.json"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("/nonexistent/spec.json"));
    }
}
