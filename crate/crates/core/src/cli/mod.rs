//! Command-line front end. Data goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 a verified property failed, 2 bad usage or
//! unreadable input.

mod pair_input;

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::bitableau::StandardBitableau;
use crate::correspondence::{
    insertion_traced, reverse_bumping_traced, BumpOutcome, BumpStep, CorrespondencePair, InsertStep,
};
use crate::partitions::Bipartition;
use crate::signed_perm::{SignedPermutation, WordError};
use crate::verify::{self, Budget, Property, VerifyError};

pub use pair_input::{parse_pair, PairInputError};

/// Environment variable raising every verification budget to its value.
pub const MAX_N_VAR: &str = "EXOTIC_RS_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "exotic-rs",
    version,
    about = "Exotic Robinson-Schensted correspondence for signed permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Word to pair. Letters are space separated, a minus sign marks a bar.
    Insert {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Print every placement.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Pair to word.
    Bump {
        #[command(flatten)]
        pair: PairSource,
        /// Print every cascade move.
        #[arg(long)]
        trace: bool,
        /// Print the word as a JSON array.
        #[arg(long)]
        json: bool,
    },
    /// The whole bijection at size n, grouped by shape.
    Table {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Words grouped by the shape of their pair.
    Cells {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Standard bitableaux per shape and the total number of pairs.
    Count {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Runs an exhaustive check: golden, roundtrip, inverse, counting,
    /// transition, wtilde or iota.
    Verify {
        property: String,
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Draws a pair with both components growing away from the wall.
    Render {
        #[command(flatten)]
        pair: PairSource,
    },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct Format {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    ascii: bool,
}

#[derive(Debug, Args)]
struct PairSource {
    /// File holding the pair as JSON or in the rendered layout; `-` reads
    /// stdin.
    #[arg(long, value_name = "FILE")]
    pair: PathBuf,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot parse word: {0}")]
    Word(#[from] WordError),
    #[error("{0}")]
    Pair(#[from] PairInputError),
    #[error("{0}")]
    Verify(#[from] VerifyError),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("{MAX_N_VAR} must be a non-negative integer, got {0:?}")]
    BadEnv(String),
    #[error("write failed: {0}")]
    Write(#[from] io::Error),
}

enum Outcome {
    Ok,
    PropertyFailed,
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let to_stdout = !e.use_stderr();
            let text = e.render().to_string();
            let _ = if to_stdout {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return if to_stdout { 0 } else { 2 };
        }
    };
    let budget = match budget_from_env(std::env::var(MAX_N_VAR).ok()) {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    match dispatch(cli.command, &budget, stdin, stdout) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::PropertyFailed) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn budget_from_env(value: Option<String>) -> Result<Budget, CliError> {
    let base = Budget::default();
    match value {
        None => Ok(base),
        Some(v) => v
            .trim()
            .parse::<usize>()
            .map(|n| base.raised_to(n))
            .map_err(|_| CliError::BadEnv(v)),
    }
}

fn read_pair(source: &PairSource, stdin: &mut dyn Read) -> Result<CorrespondencePair, CliError> {
    let path = source.pair.display().to_string();
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text)
    } else {
        std::fs::File::open(&source.pair).and_then(|mut f| f.read_to_string(&mut text))
    }
    .map_err(|source| CliError::Read { path, source })?;
    Ok(parse_pair(&text)?)
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    writeln!(
        out,
        "{}",
        serde_json::to_string(value).expect("output serializes")
    )?;
    Ok(())
}

fn dispatch(
    cmd: Command,
    budget: &Budget,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    match cmd {
        Command::Insert {
            word,
            trace,
            format,
        } => {
            let word: SignedPermutation = word.parse()?;
            let (pair, steps) = insertion_traced(&word);
            if format.json {
                if trace {
                    json_line(
                        out,
                        &serde_json::json!({ "T": pair.t(), "R": pair.r(), "trace": steps }),
                    )?;
                } else {
                    json_line(out, &pair)?;
                }
            } else {
                if trace {
                    for s in &steps {
                        writeln!(out, "{}", describe_insert(s))?;
                    }
                }
                write!(out, "{}", pair.render_ascii())?;
            }
        }
        Command::Bump { pair, trace, json } => {
            let pair = read_pair(&pair, stdin)?;
            let (word, steps) = reverse_bumping_traced(&pair);
            if json {
                if trace {
                    json_line(out, &serde_json::json!({ "word": word, "trace": steps }))?;
                } else {
                    json_line(out, &word)?;
                }
            } else {
                if trace {
                    for s in &steps {
                        writeln!(out, "{}", describe_bump(s))?;
                    }
                }
                writeln!(out, "{word}")?;
            }
        }
        Command::Table { n, json } => table(n, json, budget, out)?,
        Command::Cells { n, json } => {
            let cells = verify::cells(n, budget)?;
            if json {
                writeln!(out, "{}", cells.to_json())?;
            } else {
                for (shape, members) in &cells.cells {
                    let list: Vec<String> = members.iter().map(ToString::to_string).collect();
                    writeln!(out, "{shape}\t{}\t{}", members.len(), list.join(", "))?;
                }
            }
        }
        Command::Count { n, json } => count(n, json, budget, out)?,
        Command::Verify { property, n, json } => {
            let property: Property = property.parse()?;
            let report = verify::verify(property, n, budget)?;
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                writeln!(out, "{}", report.summary())?;
            }
            if !report.passed() {
                return Ok(Outcome::PropertyFailed);
            }
        }
        Command::Render { pair } => {
            let pair = read_pair(&pair, stdin)?;
            write!(out, "{}", pair.render_ascii())?;
        }
    }
    Ok(Outcome::Ok)
}

fn describe_insert(s: &InsertStep) -> String {
    match s.displaced {
        Some(d) => format!("k={} {} -> {} bumps {d}", s.k, s.value, s.to),
        None => format!("k={} {} -> {} new box", s.k, s.value, s.to),
    }
}

fn describe_bump(s: &BumpStep) -> String {
    let tail = match s.outcome {
        BumpOutcome::Moved { to, displaced } => format!("-> {to} bumps {displaced}"),
        BumpOutcome::Unbarred => format!("leaves: w({}) = {}", s.k, s.value),
        BumpOutcome::Barred => format!("leaves: w({}) = -{}", s.k, s.value),
    };
    format!("k={} {} from {} {tail}", s.k, s.value, s.from)
}

#[derive(Serialize)]
struct TableRow<'a> {
    word: &'a SignedPermutation,
    shape: &'a Bipartition,
    #[serde(rename = "T")]
    t: &'a StandardBitableau,
    #[serde(rename = "R")]
    r: &'a StandardBitableau,
}

fn table(n: usize, json: bool, budget: &Budget, out: &mut dyn Write) -> Result<(), CliError> {
    let cells = verify::cells(n, budget)?;
    let rows: Vec<(&Bipartition, &SignedPermutation, CorrespondencePair)> = cells
        .cells
        .iter()
        .flat_map(|(shape, members)| members.iter().map(move |w| (shape, w, crate::insertion(w))))
        .collect();
    if json {
        let records: Vec<TableRow> = rows
            .iter()
            .map(|(shape, word, pair)| TableRow {
                word,
                shape,
                t: pair.t(),
                r: pair.r(),
            })
            .collect();
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&records).expect("table serializes")
        )?;
        return Ok(());
    }
    writeln!(out, "# exotic Robinson-Schensted correspondence, n = {n}")?;
    writeln!(out, "# word\tT\tR")?;
    let mut last: Option<&Bipartition> = None;
    for (shape, word, pair) in &rows {
        if last != Some(*shape) {
            writeln!(out, "# shape {shape}, {} words", cells.cells[*shape].len())?;
            last = Some(*shape);
        }
        let t = serde_json::to_string(pair.t()).expect("tableau serializes");
        let r = serde_json::to_string(pair.r()).expect("tableau serializes");
        writeln!(out, "{word}\t{t}\t{r}")?;
    }
    Ok(())
}

fn count(n: usize, json: bool, budget: &Budget, out: &mut dyn Write) -> Result<(), CliError> {
    if n > budget.count_max_n {
        return Err(VerifyError::BudgetExceeded {
            property: "count".into(),
            n,
            max: budget.count_max_n,
        }
        .into());
    }
    let counts = verify::shape_counts(n);
    let total: u128 = counts.iter().map(|(_, c)| c * c).sum();
    let expected: u128 = (1..=n as u128).product::<u128>() << n;
    if json {
        #[derive(Serialize)]
        struct Row<'a> {
            shape: &'a Bipartition,
            count: String,
        }
        let rows: Vec<Row> = counts
            .iter()
            .map(|(shape, c)| Row {
                shape,
                count: c.to_string(),
            })
            .collect();
        json_line(
            out,
            &serde_json::json!({ "n": n, "shapes": rows, "pairs": total.to_string(), "group_order": expected.to_string() }),
        )?;
    } else {
        writeln!(out, "# shape\tstandard bitableaux")?;
        for (shape, c) in &counts {
            writeln!(out, "{shape}\t{c}")?;
        }
        writeln!(out, "# pairs {total}, 2^n n! = {expected}")?;
    }
    Ok(())
}
