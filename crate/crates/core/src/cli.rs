//! The `perfect-necklace` command line.
//!
//! Exit codes: 0 success or perfect, 1 verified imperfect, 2 invalid input or
//! parameters, 3 capacity or budget exceeded, 4 no θ-predecessor, 5 the
//! brute-force oracle disagrees with the construction.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::format::{self, OutputFormat, PairJson};
use crate::generator::{self, DEFAULT_GUARD};
use crate::oracle::{self, SearchBudget};
use crate::pair::Pair;
use crate::params::Params;
use crate::theta;
use crate::word::Word;

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const IMPERFECT: i32 = 1;
    pub const INVALID: i32 = 2;
    pub const CAPACITY: i32 = 3;
    pub const NO_PREDECESSOR: i32 = 4;
    pub const THEOREM_VIOLATION: i32 = 5;
}

/// Environment variable overriding the generation guard.
pub const GUARD_ENV: &str = "PERFECT_NECKLACE_GUARD";

/// Maximum number of violations printed by `verify` in PLAIN mode.
const SHOWN_VIOLATIONS: usize = 20;

#[derive(Debug, Parser)]
#[command(
    name = "perfect-necklace",
    version,
    about = "Lexicographically greatest (n,k)-perfect necklaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ParamArgs {
    /// Alphabet size
    #[arg(short, long)]
    s: u32,
    /// Word length
    #[arg(short, long)]
    n: usize,
    /// Modulus; must divide n or be a multiple of n
    #[arg(short, long)]
    k: usize,
}

impl ParamArgs {
    fn params(&self) -> Result<Params, Error> {
        Params::new(self.s, self.n, self.k)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stream the greatest (n,k)-perfect necklace
    Generate {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Refuse to emit more symbols than this
        #[arg(long, env = GUARD_ENV)]
        guard: Option<u64>,
    },
    /// List the Lyndon pairs in construction order
    Lyndon {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// List the maximal pairs in decreasing order
    Maximal {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Check whether a circular word is (n,k)-perfect
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
        /// Input file; standard input when absent or "-"
        input: Option<PathBuf>,
    },
    /// Apply θ (or its chain inverse) to a residue-0 pair
    Theta {
        #[command(flatten)]
        params: ParamArgs,
        /// The word of the pair, e.g. 011000 or 3,11,0
        word: String,
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Exhaustively search for the greatest perfect necklace and compare
    Oracle {
        #[command(flatten)]
        params: ParamArgs,
        /// Longest necklace the search will attempt
        #[arg(long, default_value_t = SearchBudget::default().max_length)]
        max_length: u64,
        /// Node budget of the depth-first search
        #[arg(long, default_value_t = SearchBudget::default().max_nodes)]
        max_nodes: u64,
    },
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidParams(_)
        | Error::InvalidInput(_)
        | Error::Precondition(_)
        | Error::Domain(_) => exit::INVALID,
        Error::Capacity { .. } | Error::Budget { .. } => exit::CAPACITY,
        Error::NoPredecessor(_) => exit::NO_PREDECESSOR,
        Error::SearchExhausted => exit::THEOREM_VIOLATION,
    }
}

enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
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
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => exit::SUCCESS,
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            exit::INVALID
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    match command {
        Command::Generate {
            params,
            format,
            guard,
        } => {
            let p = params.params()?;
            let stream = generator::build_necklace_with_guard(&p, guard.unwrap_or(DEFAULT_GUARD))?;
            let mut out = io::BufWriter::new(stdout);
            if format == OutputFormat::Blocks {
                format::write_blocks(&mut out, stream.into_blocks(), p.s())?;
            } else {
                let total = stream.total_length();
                format::write_necklace(&mut out, stream, &p, total, format)?;
            }
            out.flush()?;
            Ok(exit::SUCCESS)
        }
        Command::Lyndon { params, format } => {
            let p = params.params()?;
            let pairs = generator::lyndon_list(&p).map(|l| l.as_pair());
            let count = write_pairs(stdout, pairs, &p, format)?;
            writeln!(stderr, "{count} Lyndon pairs")?;
            Ok(exit::SUCCESS)
        }
        Command::Maximal { params, format } => {
            let p = params.params()?;
            let count = write_pairs(stdout, generator::maximal_list(&p), &p, format)?;
            writeln!(stderr, "{count} maximal pairs")?;
            Ok(exit::SUCCESS)
        }
        Command::Verify {
            params,
            format,
            input,
        } => {
            let p = params.params()?;
            let text = match input {
                Some(path) if path.as_os_str() != "-" => fs::read_to_string(&path)
                    .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?,
                _ => {
                    let mut buf = String::new();
                    stdin.read_to_string(&mut buf)?;
                    buf
                }
            };
            let x = format::parse_word(&text, p.s(), format)?;
            verify(&x, &p, format, stdout)
        }
        Command::Theta {
            params,
            word,
            inverse,
            format,
        } => {
            let p = params.params()?;
            let w = format::parse_word(&word, p.s(), OutputFormat::Plain)?;
            let a = Pair::zero(w, &p)?;
            let b = if inverse {
                theta::theta_preimage(&a, &p)?
            } else {
                theta::theta(&a, &p)?
            };
            writeln!(
                stdout,
                "{}",
                format::render_pair(b.word(), b.residue(), p.s(), format)
            )?;
            Ok(exit::SUCCESS)
        }
        Command::Oracle {
            params,
            max_length,
            max_nodes,
        } => {
            let p = params.params()?;
            let budget = SearchBudget {
                max_length,
                max_nodes,
            };
            let outcome = compare_with_oracle(&p, &budget, generator::necklace_word)?;
            Ok(outcome.report(&p, stdout)?)
        }
    }
}

fn write_pairs(
    stdout: &mut dyn Write,
    pairs: impl Iterator<Item = Pair>,
    p: &Params,
    format: OutputFormat,
) -> io::Result<usize> {
    let mut out = io::BufWriter::new(stdout);
    let mut count = 0;
    if format == OutputFormat::Json {
        out.write_all(b"[")?;
        for (i, a) in pairs.enumerate() {
            if i > 0 {
                out.write_all(b",")?;
            }
            serde_json::to_writer(&mut out, &PairJson::from(&a))?;
            count += 1;
        }
        out.write_all(b"]\n")?;
    } else {
        for a in pairs {
            writeln!(
                out,
                "{}",
                format::render_pair(a.word(), a.residue(), p.s(), format)
            )?;
            count += 1;
        }
    }
    out.flush()?;
    Ok(count)
}

fn verify(
    x: &Word,
    p: &Params,
    format: OutputFormat,
    stdout: &mut dyn Write,
) -> Result<i32, Failure> {
    let report = oracle::check_perfect(x, p)?;
    if format == OutputFormat::Json {
        serde_json::to_writer(&mut *stdout, &report).map_err(io::Error::from)?;
        writeln!(stdout)?;
    } else if report.is_perfect {
        writeln!(stdout, "PERFECT ({p}, length {})", report.input_length)?;
    } else {
        writeln!(
            stdout,
            "NOT PERFECT ({p}, length {}): {} violations",
            report.input_length,
            report.violations.len()
        )?;
        for v in report.violations.iter().take(SHOWN_VIOLATIONS) {
            writeln!(stdout, "  {v}")?;
        }
        if report.violations.len() > SHOWN_VIOLATIONS {
            writeln!(
                stdout,
                "  ... {} more",
                report.violations.len() - SHOWN_VIOLATIONS
            )?;
        }
    }
    Ok(if report.is_perfect {
        exit::SUCCESS
    } else {
        exit::IMPERFECT
    })
}

/// Result of running the exhaustive search next to a construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOutcome {
    pub greatest: Word,
    pub generated: Word,
}

impl OracleOutcome {
    pub fn matches(&self) -> bool {
        self.greatest == self.generated
    }

    /// Prints `<greatest> MATCH` or `<greatest> MISMATCH ...` and returns
    /// the exit code.
    pub fn report(&self, p: &Params, out: &mut dyn Write) -> io::Result<i32> {
        let greatest = format::render_word(&self.greatest, p.s());
        if self.matches() {
            writeln!(out, "{greatest} MATCH")?;
            Ok(exit::SUCCESS)
        } else {
            writeln!(
                out,
                "{greatest} MISMATCH (constructed {})",
                format::render_word(&self.generated, p.s())
            )?;
            Ok(exit::THEOREM_VIOLATION)
        }
    }
}

/// Runs [`oracle::brute_force_greatest`] and `construct` on the same
/// parameters.
pub fn compare_with_oracle<F>(
    p: &Params,
    budget: &SearchBudget,
    construct: F,
) -> Result<OracleOutcome, Error>
where
    F: FnOnce(&Params) -> Result<Word, Error>,
{
    let greatest = oracle::brute_force_greatest(p, budget)?;
    let generated = construct(p)?;
    Ok(OracleOutcome {
        greatest,
        generated,
    })
}
