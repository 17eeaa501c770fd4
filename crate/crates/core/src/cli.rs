//! Command-line surface of the `finred` binary.
//!
//! Exit codes: 0 on success, 1 when `check` finds a failing property, 2 on
//! malformed input (bad literal or bad arguments).

use std::io::{self, BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::constructions;
use crate::notions::{ClassificationReport, SCHEMA_VERSION};
use crate::stream::{parse_stream, ParseError, UpStream};
use crate::succession::SuccRelation;
use crate::suite::{run_suite, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "finred", version, about = "Decide finitely-red notions on ultimately periodic streams")]
pub struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a stream under the six notions (JSON)
    Classify {
        /// Stream literal such as `BRB(B)`; read from stdin when omitted or `-`
        stream: Option<String>,
    },
    /// Apply a stream transformer and print the canonical result
    Transform {
        #[arg(long, value_enum)]
        name: TransformName,
        stream: Option<String>,
    },
    /// Dump the succession relation for positions below the limit
    Relation {
        stream: Option<String>,
        #[arg(long, default_value_t = 16)]
        limit: usize,
    },
    /// Run the property suite over all small canonical streams
    Check {
        #[arg(long, default_value_t = 5)]
        max_prefix: usize,
        #[arg(long, default_value_t = 4)]
        max_cycle: usize,
        /// Bound for the atmost_n / F^n sweeps
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Fuel for the black-box layer
        #[arg(long, default_value_t = 1000)]
        fuel: usize,
    },
    /// Compare two streams for bisimilarity
    Compare { left: String, right: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TransformName {
    FirstRedTruncate,
    ComplementUntilRed,
    PadDouble,
    SearchTag,
}

impl TransformName {
    pub fn apply(self, s: &UpStream) -> UpStream {
        match self {
            TransformName::FirstRedTruncate => constructions::first_red_truncate(s),
            TransformName::ComplementUntilRed => constructions::complement_until_red(s),
            TransformName::PadDouble => constructions::pad_double(s),
            TransformName::SearchTag => constructions::search_tag(s),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TransformName::FirstRedTruncate => "first-red-truncate",
            TransformName::ComplementUntilRed => "complement-until-red",
            TransformName::PadDouble => "pad-double",
            TransformName::SearchTag => "search-tag",
        }
    }
}

/// Renders a parse error with a caret under the offending offset.
pub fn describe_parse_error(text: &str, err: &ParseError) -> String {
    let caret_col = text[..err.offset.min(text.len())].chars().count();
    format!("error: {err}\n  {text}\n  {}^", " ".repeat(caret_col))
}

fn read_literal(arg: Option<String>, stdin: &mut dyn BufRead) -> io::Result<String> {
    match arg {
        Some(text) if text != "-" => Ok(text),
        _ => {
            let mut line = String::new();
            stdin.read_line(&mut line)?;
            Ok(line.trim_end_matches(['\n', '\r']).to_string())
        }
    }
}

enum Failure {
    Parse(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn literal(arg: Option<String>, stdin: &mut dyn BufRead) -> Result<UpStream, Failure> {
    let text = read_literal(arg, stdin)?;
    parse_stream(&text)
        .map(|s| s.canonicalize())
        .map_err(|e| Failure::Parse(describe_parse_error(&text, &e)))
}

/// Executes a parsed command, writing results to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run(
    cli: Cli,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match execute(cli, stdin, out) {
        Ok(code) => code,
        Err(Failure::Parse(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: Cli, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, Failure> {
    let json = cli.json;
    match cli.command {
        Command::Classify { stream } => {
            let s = literal(stream, stdin)?;
            let report = ClassificationReport::new(&s);
            let text = if json {
                serde_json::to_string(&report)
            } else {
                serde_json::to_string_pretty(&report)
            }
            .expect("report serializes");
            writeln!(out, "{text}")?;
        }
        Command::Transform { name, stream } => {
            let s = literal(stream, stdin)?;
            let result = name.apply(&s);
            if json {
                let doc = json!({
                    "schema": SCHEMA_VERSION,
                    "name": name.as_str(),
                    "input": s,
                    "output": result,
                });
                writeln!(out, "{doc}")?;
            } else {
                writeln!(out, "{result}")?;
            }
        }
        Command::Relation { stream, limit } => {
            let s = literal(stream, stdin)?;
            let edges = SuccRelation::new(&s).edges(limit);
            if json {
                let edges: Vec<_> = edges
                    .iter()
                    .map(|&(from, to)| json!({ "from": from, "to": to }))
                    .collect();
                let doc = json!({ "schema": SCHEMA_VERSION, "stream": s, "edges": edges });
                writeln!(out, "{doc}")?;
            } else {
                for (from, to) in edges {
                    match to {
                        Some(to) => writeln!(out, "{from} -> {to}")?,
                        None => writeln!(out, "{from} -|")?,
                    }
                }
            }
        }
        Command::Check {
            max_prefix,
            max_cycle,
            max_n,
            fuel,
        } => {
            let report = run_suite(&SuiteConfig {
                max_prefix,
                max_cycle,
                max_n,
                fuel,
            });
            if json {
                writeln!(out, "{}", serde_json::to_string(&report).expect("report serializes"))?;
            } else {
                for p in &report.properties {
                    let status = if p.failed == 0 { "PASS" } else { "FAIL" };
                    writeln!(out, "{status} {:<40} {} passed, {} failed", p.name, p.passed, p.failed)?;
                    for f in &p.failures {
                        writeln!(out, "     {f}")?;
                    }
                }
                let failed = report.properties.iter().filter(|p| p.failed > 0).count();
                writeln!(
                    out,
                    "{} streams, {} properties: {} passed, {} failed",
                    report.streams,
                    report.properties.len(),
                    report.properties.len() - failed,
                    failed
                )?;
            }
            if !report.all_passed() {
                return Ok(EXIT_PROPERTY_FAILURE);
            }
        }
        Command::Compare { left, right } => {
            let a = literal(Some(left), stdin)?;
            let b = literal(Some(right), stdin)?;
            let diff = a.first_difference(&b);
            if json {
                let doc = json!({
                    "schema": SCHEMA_VERSION,
                    "bisimilar": diff.is_none(),
                    "first_difference": diff,
                });
                writeln!(out, "{doc}")?;
            } else {
                match diff {
                    None => writeln!(out, "bisimilar")?,
                    Some(k) => writeln!(out, "distinct at position {k}")?,
                }
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` and runs; clap errors map to [`EXIT_USAGE`].
pub fn main_with<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, stdin, out, err),
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            }
        }
    }
}
