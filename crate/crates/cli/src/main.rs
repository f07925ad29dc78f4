//! `pnwords`: generate, check and analyze binary words for prefix normality.
//!
//! Exit codes: 0 success, 1 negative verdict (violation, or a query miss with
//! `--strict`), 2 usage error, 3 I/O or format error.

mod source;

use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pnwords::analysis::{
    abelian_complexity, is_prefix_normal_0, is_prefix_normal_1, min_density, min_density_up, pnf0,
    pnf1, UltimatelyPeriodicWord,
};
use pnwords::{compute_profile, Error, FiniteWord, JumbledIndex};

use crate::source::SourceArgs;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    /// A negative verdict whose output has already been printed.
    #[error("negative result")]
    Negative,
}

impl CliError {
    fn from_library(e: Error) -> Self {
        match e {
            Error::Format(_) => CliError::Io(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Negative => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "pnwords",
    version,
    about = "Prefix normal words: generation, checks and analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a prefix of the word.
    Generate(SourceArgs),
    /// Decide prefix normality; prints NORMAL or the first violation.
    Check {
        #[command(flatten)]
        source: SourceArgs,
        /// Check 0-prefix normality instead.
        #[arg(long)]
        zero: bool,
        #[command(flatten)]
        prepend: Prepend,
    },
    /// Print both prefix normal forms (1-form, then 0-form).
    Pnf {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        prepend: Prepend,
        #[command(flatten)]
        window: Window,
    },
    /// Abelian complexity as TSV `n<TAB>psi`.
    Abelian {
        #[command(flatten)]
        source: SourceArgs,
        /// Inclusive range of lengths, `a..b`; defaults to the whole word.
        #[arg(long)]
        range: Option<String>,
    },
    /// Minimum density: `delta iota kappa` of a word, or `delta` of `u x^w`.
    Density {
        #[command(flatten)]
        source: SourceArgs,
        /// Ultimately periodic word `u,x` (preperiod, period).
        #[arg(long, conflicts_with_all = ["builtin", "word", "file"])]
        period: Option<String>,
    },
    /// Build or query a jumbled pattern matching index.
    #[command(subcommand)]
    Index(IndexCommand),
    /// Staircase data: `n<TAB>word_y[<TAB>pnf1_y<TAB>pnf0_y]`, y = #1s − #0s.
    Plotdata {
        #[command(flatten)]
        source: SourceArgs,
        /// Add the columns of both prefix normal forms.
        #[arg(long)]
        pnf: bool,
        #[command(flatten)]
        window: Window,
    },
}

#[derive(Args, Debug)]
struct Window {
    /// Builtins only: number of symbols the forms are computed from
    /// [default: max(4n, 2048)].
    #[arg(long)]
    window: Option<usize>,
}

#[derive(Args, Debug)]
struct Prepend {
    /// Prepend this many 1s before analyzing.
    #[arg(long = "prepend-ones", default_value_t = 0)]
    ones: usize,
}

#[derive(Subcommand, Debug)]
enum IndexCommand {
    /// Write the serialized index of a word.
    Build {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Answer `zeros ones` pairs read from stdin with yes/no.
    Query {
        #[arg(long)]
        index: PathBuf,
        /// Exit with status 1 if any answer is no.
        #[arg(long)]
        strict: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::Negative) {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = dispatch(command, &mut out);
    out.flush()?;
    result
}

fn dispatch(command: Command, out: &mut impl Write) -> Result<(), CliError> {
    match command {
        Command::Generate(source) => {
            writeln!(out, "{}", source.resolve()?.word)?;
        }
        Command::Check {
            source,
            zero,
            prepend,
        } => {
            let word = source.resolve_with_ones(prepend.ones)?.word;
            let verdict = if zero {
                is_prefix_normal_0(&word)
            } else {
                is_prefix_normal_1(&word)
            };
            match verdict.violation() {
                None => writeln!(out, "NORMAL")?,
                Some(v) => {
                    writeln!(out, "VIOLATION {v}")?;
                    return Err(CliError::Negative);
                }
            }
        }
        Command::Pnf {
            source,
            prepend,
            window,
        } => {
            let (_, one, zero) = forms(&source, prepend.ones, window.window)?;
            writeln!(out, "{one}")?;
            writeln!(out, "{zero}")?;
        }
        Command::Abelian { source, range } => {
            let word = source.resolve()?.word;
            let profile = profile_of(&word)?;
            let (lo, hi) = match range {
                Some(r) => parse_range(&r)?,
                None => (1, word.len()),
            };
            if lo == 0 || hi > word.len() || lo > hi {
                return Err(CliError::Usage(format!(
                    "range {lo}..{hi} is not within 1..{}",
                    word.len()
                )));
            }
            for n in lo..=hi {
                let psi = abelian_complexity(&profile, n).map_err(CliError::from_library)?;
                writeln!(out, "{n}\t{psi}")?;
            }
        }
        Command::Density { source, period } => match period {
            Some(p) => {
                let up: UltimatelyPeriodicWord = p
                    .parse()
                    .map_err(|e| CliError::Usage(format!("--period: {e}")))?;
                writeln!(
                    out,
                    "{}",
                    min_density_up(&up).map_err(CliError::from_library)?
                )?;
            }
            None => {
                let word = source.resolve()?.word;
                writeln!(
                    out,
                    "{}",
                    min_density(&word).map_err(CliError::from_library)?
                )?;
            }
        },
        Command::Index(IndexCommand::Build { source, output }) => {
            let word = source.resolve()?.word;
            let index = JumbledIndex::build(&word).map_err(CliError::from_library)?;
            std::fs::write(&output, index.serialize())
                .map_err(|e| CliError::Io(format!("{}: {e}", output.display())))?;
        }
        Command::Index(IndexCommand::Query { index, strict }) => {
            let bytes = std::fs::read(&index)
                .map_err(|e| CliError::Io(format!("{}: {e}", index.display())))?;
            let ix = JumbledIndex::deserialize(&bytes)
                .map_err(|e| CliError::Io(format!("{}: {e}", index.display())))?;
            let mut missed = false;
            for (lineno, line) in io::stdin().lock().lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let (zeros, ones) = parse_pair(&line)
                    .ok_or_else(|| CliError::Io(format!("line {}: expected `x y`", lineno + 1)))?;
                let hit = ix.query(zeros, ones);
                missed |= !hit;
                writeln!(out, "{}", if hit { "yes" } else { "no" })?;
            }
            if strict && missed {
                return Err(CliError::Negative);
            }
        }
        Command::Plotdata {
            source,
            pnf,
            window,
        } => {
            let (word, forms) = if pnf {
                let (word, one, zero) = forms(&source, 0, window.window)?;
                (word, Some((one, zero)))
            } else {
                (source.resolve()?.word, None)
            };
            let height = |w: &FiniteWord, n: usize| {
                let ones = w.prefix_weight(n).expect("n within the word") as i64;
                2 * ones - n as i64
            };
            for n in 0..=word.len() {
                write!(out, "{n}\t{}", height(&word, n))?;
                if let Some((one, zero)) = &forms {
                    write!(out, "\t{}\t{}", height(one, n), height(zero, n))?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

/// The word and both forms. Builtins are infinite words, so their forms are
/// read off a longer generation window and cut to the requested length.
fn forms(
    source: &SourceArgs,
    ones: usize,
    window: Option<usize>,
) -> Result<(FiniteWord, FiniteWord, FiniteWord), CliError> {
    let resolved = source.resolve_with_ones(ones)?;
    let len = resolved.word.len();
    let Some(kind) = resolved.builtin else {
        let profile = profile_of(&resolved.word)?;
        return Ok((resolved.word, pnf1(&profile), pnf0(&profile)));
    };
    let window = window.unwrap_or_else(|| (4 * len).max(2048));
    if window < len {
        return Err(CliError::Usage(format!(
            "--window {window} is shorter than -n {len}"
        )));
    }
    let wide = SourceArgs {
        length: Some(window),
        ..source.clone()
    };
    let profile = profile_of(&wide.resolve_with_ones(ones)?.word)?;
    let cut = |w: FiniteWord| w.prefix(len).expect("window covers the length");
    let reliable = window / 4;
    if len > reliable {
        eprintln!(
            "note: {kind} forms computed from {window} symbols; positions n > {reliable} lie \
             outside the reliable window (heuristic) and may under-report factors"
        );
    } else {
        eprintln!(
            "note: {kind} forms computed from {window} symbols; all {len} positions lie in \
             the reliable window n <= {reliable} (heuristic)"
        );
    }
    Ok((resolved.word, cut(pnf1(&profile)), cut(pnf0(&profile))))
}

fn profile_of(word: &FiniteWord) -> Result<pnwords::PrefixProfile, CliError> {
    compute_profile(word).map_err(CliError::from_library)
}

fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("--range: expected `a..b`, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let x = it.next()?.parse().ok()?;
    let y = it.next()?.parse().ok()?;
    it.next().is_none().then_some((x, y))
}
