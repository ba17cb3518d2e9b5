//! Command-line front end.
//!
//! Exit status: 0 on success (and on "yes" for decision commands), 1 when a
//! decision is "no" or a bounded search is exhausted, 2 on usage, input or
//! guard errors. Error messages go to stderr with a prefix naming the kind:
//! `error[usage]`, `error[io]`, `error[matrix]`, `error[hieroglyph]`,
//! `error[guard]`.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::bench::{bench, to_csv, Algorithm};
use crate::completion::complete_nondegenerate;
use crate::error::Error;
use crate::generate::{gen_random, Density};
use crate::gf2::{DiagonalAssignment, Gf2Matrix};
use crate::hieroglyph::{canonical_form, overlap_matrix, parse_hieroglyph, Hieroglyph};
use crate::rank_min::{
    min_rank_approx, min_rank_decide, min_rank_exact, min_rank_oracle, upper_bound_even_rows,
    RankBounds,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "diagrank",
    version,
    about = "Minimum rank of GF(2) matrices with a free diagonal"
)]
pub struct RunConfig {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct MatrixInput {
    /// Matrix file, or `-` for stdin.
    pub file: String,
}

#[derive(Debug, Args)]
pub struct WordInput {
    /// Hieroglyph word, file path, or `-` for stdin.
    pub word: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank over GF(2).
    Rank(MatrixInput),
    /// Diagonal making the matrix non-degenerate.
    Complete(MatrixInput),
    /// Decide whether R(M) <= K.
    Decide {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: MatrixInput,
    },
    /// Factor-2 bounds on R(M).
    Approx(MatrixInput),
    /// R(M) by increasing K up to a cap.
    Exact {
        #[arg(long = "k-max")]
        k_max: usize,
        #[command(flatten)]
        input: MatrixInput,
    },
    /// R(M) by trying all 2^n diagonals (n <= 24).
    Oracle(MatrixInput),
    /// Even-row-sum diagonal, rank <= n - 1.
    UpperBound(MatrixInput),
    /// Hieroglyph commands.
    #[command(subcommand)]
    Hiero(HieroCommand),
    /// Random matrix with zero diagonal.
    Gen {
        #[arg(long)]
        n: usize,
        /// Probability of a 1 off the diagonal, as a decimal or `a/b`.
        #[arg(long)]
        density: Density,
        #[arg(long)]
        seed: u64,
    },
    /// Median wall time per size, as CSV.
    Bench {
        #[arg(long)]
        algo: Algorithm,
        /// Comma-separated sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum HieroCommand {
    /// Overlap matrix in the matrix text format.
    Overlap(WordInput),
    /// Decide weak realizability on the disk with K Möbius strips.
    Decide {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: WordInput,
    },
    /// Factor-2 bounds on the genus.
    Approx(WordInput),
    /// Canonical representative under rotation, reversal and renaming.
    Canon(WordInput),
}

/// Failure of a command, classified for the stderr prefix.
#[derive(Debug)]
pub enum CliError {
    Io(String, io::Error),
    Library(Error),
}

impl CliError {
    fn prefix(&self) -> &'static str {
        match self {
            Self::Io(..) => "error[io]",
            Self::Library(
                Error::Matrix(_) | Error::DimensionMismatch { .. } | Error::EmptyMatrix,
            ) => "error[matrix]",
            Self::Library(Error::Hieroglyph(_)) => "error[hieroglyph]",
            Self::Library(Error::OracleGuard { .. }) => "error[guard]",
            Self::Library(_) => "error[usage]",
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Io(path, e) => write!(f, "{}: {path}: {e}", self.prefix()),
            Self::Library(e) => write!(f, "{}: {e}", self.prefix()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::Library(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(
    args: I,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, stdin, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "error[usage]: {rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            code
        }
    }
}

pub fn run(
    config: &RunConfig,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match execute(config, stdin) {
        Ok((code, text)) => {
            if let Err(e) = out.write_all(text.as_bytes()) {
                let _ = writeln!(err, "error[io]: <stdout>: {e}");
                return EXIT_ERROR;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            EXIT_ERROR
        }
    }
}

fn read_source(source: &str, stdin: &mut dyn Read) -> Result<String, CliError> {
    if source == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Io("<stdin>".into(), e))?;
        Ok(buf)
    } else {
        fs::read_to_string(source).map_err(|e| CliError::Io(source.into(), e))
    }
}

fn read_matrix(input: &MatrixInput, stdin: &mut dyn Read) -> Result<Gf2Matrix, CliError> {
    let text = read_source(&input.file, stdin)?;
    Ok(Gf2Matrix::parse(&text).map_err(Error::from)?)
}

/// A word argument is a path if such a file exists, else the word itself.
fn read_hieroglyph(input: &WordInput, stdin: &mut dyn Read) -> Result<Hieroglyph, CliError> {
    let text = if input.word == "-" || Path::new(&input.word).is_file() {
        read_source(&input.word, stdin)?
    } else {
        input.word.clone()
    };
    Ok(parse_hieroglyph(&text).map_err(Error::from)?)
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn bounds_json(b: RankBounds) -> Value {
    json!({ "lower": b.lower, "upper": b.upper })
}

fn yes_no(found: bool) -> &'static str {
    if found {
        "yes"
    } else {
        "no"
    }
}

/// Achieved rank of `m` under `d`, computed independently of the search.
fn achieved(m: &Gf2Matrix, d: &DiagonalAssignment) -> usize {
    m.with_diagonal(d).expect("witness length matches").rank()
}

fn execute(config: &RunConfig, stdin: &mut dyn Read) -> Result<(i32, String), CliError> {
    let json = config.json;
    let ok = |text: String| Ok((EXIT_OK, text));
    match &config.command {
        Command::Rank(input) => {
            let m = read_matrix(input, stdin)?;
            let r = m.rank();
            if json {
                ok(to_json(&json!({ "n": m.n(), "rank": r })))
            } else {
                ok(format!("{r}\n"))
            }
        }
        Command::Complete(input) => {
            let m = read_matrix(input, stdin)?;
            let c = complete_nondegenerate(&m);
            if json {
                ok(to_json(&json!({
                    "n": m.n(),
                    "witness_diagonal": c.diagonal.to_string(),
                    "achieved_rank": c.matrix.rank(),
                    "matrix": c.matrix.render(),
                })))
            } else {
                ok(c.matrix.render())
            }
        }
        Command::Decide { k, input } => {
            let m = read_matrix(input, stdin)?;
            decision_output(&m, *k, json, None)
        }
        Command::Approx(input) => {
            let m = read_matrix(input, stdin)?;
            approx_output(&m, json, None)
        }
        Command::Exact { k_max, input } => {
            let m = read_matrix(input, stdin)?;
            let result = min_rank_exact(&m, *k_max);
            let code = if result.is_some() { EXIT_OK } else { EXIT_NO };
            let text = match (&result, json) {
                (Some(r), true) => to_json(&json!({
                    "n": m.n(),
                    "k_max": k_max,
                    "answer": "yes",
                    "rank_bounds": bounds_json(RankBounds::exact(r.rank)),
                    "witness_diagonal": r.witness.to_string(),
                    "achieved_rank": achieved(&m, &r.witness),
                })),
                (None, true) => to_json(&json!({
                    "n": m.n(),
                    "k_max": k_max,
                    "answer": "exhausted",
                    "rank_bounds": bounds_json(RankBounds::new(k_max + 1, m.n().saturating_sub(1).max(k_max + 1))),
                    "witness_diagonal": Value::Null,
                    "achieved_rank": Value::Null,
                })),
                (Some(r), false) => format!("R = {} witness {}\n", r.rank, r.witness),
                (None, false) => format!("exhausted: R > {k_max}\n"),
            };
            Ok((code, text))
        }
        Command::Oracle(input) => {
            let m = read_matrix(input, stdin)?;
            let r = min_rank_oracle(&m)?;
            if json {
                ok(to_json(&json!({
                    "n": m.n(),
                    "rank_bounds": bounds_json(RankBounds::exact(r.rank)),
                    "witness_diagonal": r.witness.to_string(),
                    "achieved_rank": achieved(&m, &r.witness),
                })))
            } else {
                ok(format!("R = {} witness {}\n", r.rank, r.witness))
            }
        }
        Command::UpperBound(input) => {
            let m = read_matrix(input, stdin)?;
            let d = upper_bound_even_rows(&m)?;
            let r = achieved(&m, &d);
            if json {
                ok(to_json(&json!({
                    "n": m.n(),
                    "rank_bounds": bounds_json(RankBounds::new(0, r)),
                    "witness_diagonal": d.to_string(),
                    "achieved_rank": r,
                })))
            } else {
                ok(format!(
                    "witness {d} achieves rank {r} (n - 1 = {})\n",
                    m.n() - 1
                ))
            }
        }
        Command::Hiero(cmd) => execute_hiero(cmd, json, stdin),
        Command::Gen { n, density, seed } => {
            let m = gen_random(*n, *density, *seed);
            if json {
                ok(to_json(&json!({
                    "n": n,
                    "density": density,
                    "seed": seed,
                    "matrix": m.render(),
                })))
            } else {
                ok(m.render())
            }
        }
        Command::Bench {
            algo,
            sizes,
            k,
            reps,
            seed,
        } => {
            let rows = bench(*algo, sizes, *k, *reps, *seed);
            if json {
                ok(to_json(&serde_json::to_value(&rows).expect("serializable")))
            } else {
                ok(to_csv(&rows))
            }
        }
    }
}

fn execute_hiero(
    cmd: &HieroCommand,
    json: bool,
    stdin: &mut dyn Read,
) -> Result<(i32, String), CliError> {
    match cmd {
        HieroCommand::Overlap(input) => {
            let h = read_hieroglyph(input, stdin)?;
            let m = overlap_matrix(&h).into_inner();
            if json {
                Ok((
                    EXIT_OK,
                    to_json(&json!({ "n": h.n(), "alphabet": h.alphabet(), "matrix": m.render() })),
                ))
            } else {
                Ok((EXIT_OK, m.render()))
            }
        }
        HieroCommand::Decide { k, input } => {
            let h = read_hieroglyph(input, stdin)?;
            let m = overlap_matrix(&h).into_inner();
            decision_output(&m, *k, json, Some(&h))
        }
        HieroCommand::Approx(input) => {
            let h = read_hieroglyph(input, stdin)?;
            let m = overlap_matrix(&h).into_inner();
            approx_output(&m, json, Some(&h))
        }
        HieroCommand::Canon(input) => {
            let h = read_hieroglyph(input, stdin)?;
            let c = canonical_form(&h);
            if json {
                Ok((
                    EXIT_OK,
                    to_json(
                        &json!({ "n": h.n(), "canonical": c.to_string(), "alphabet": c.alphabet() }),
                    ),
                ))
            } else {
                Ok((EXIT_OK, format!("{c}\n")))
            }
        }
    }
}

fn decision_output(
    m: &Gf2Matrix,
    k: usize,
    json: bool,
    word: Option<&Hieroglyph>,
) -> Result<(i32, String), CliError> {
    let outcome = min_rank_decide(m, k);
    let code = if outcome.is_yes() { EXIT_OK } else { EXIT_NO };
    let witness = outcome.witness.as_ref().map(ToString::to_string);
    let rank = outcome.witness.as_ref().map(|d| achieved(m, d));
    let text = if json {
        let mut v = json!({
            "n": m.n(),
            "k": k,
            "answer": yes_no(outcome.is_yes()),
            "witness_diagonal": witness,
            "achieved_rank": rank,
        });
        if let Some(h) = word {
            v["alphabet"] = json!(h.alphabet());
            v["twist_witness"] = json!(witness);
        }
        to_json(&v)
    } else {
        match (witness, rank) {
            (Some(w), Some(r)) => format!("yes witness {w} rank {r}\n"),
            _ => "no\n".to_string(),
        }
    };
    Ok((code, text))
}

fn approx_output(
    m: &Gf2Matrix,
    json: bool,
    word: Option<&Hieroglyph>,
) -> Result<(i32, String), CliError> {
    let a = min_rank_approx(m);
    let rank = achieved(m, &a.witness);
    let text = if json {
        let mut v = json!({
            "n": m.n(),
            "rank_bounds": bounds_json(a.bounds),
            "witness_diagonal": a.witness.to_string(),
            "achieved_rank": rank,
        });
        if let Some(h) = word {
            v["alphabet"] = json!(h.alphabet());
            v["twist_witness"] = json!(a.witness.to_string());
        }
        to_json(&v)
    } else {
        format!(
            "{} <= R <= {} witness {} rank {rank}\n",
            a.bounds.lower, a.bounds.upper, a.witness
        )
    };
    Ok((EXIT_OK, text))
}
