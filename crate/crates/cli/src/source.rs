//! Resolution of the word a command operates on.

use std::path::PathBuf;

use clap::Args;
use pnwords::generators::{Builtin, BuiltinKind, Rounding};
use pnwords::{FiniteWord, Rational, SlopeSpec, WordStream};

use crate::CliError;

#[derive(Args, Debug, Clone)]
pub struct SourceArgs {
    /// Builtin word: fibonacci, thue-morse, paperfolding, champernowne,
    /// mechanical, flipext-omega, lazy-flipext-omega, lemma3.
    pub builtin: Option<String>,

    /// Literal bitstring.
    #[arg(long, conflicts_with_all = ["builtin", "file"])]
    pub word: Option<String>,

    /// File holding a bitstring (surrounding whitespace is ignored).
    #[arg(long, conflicts_with = "builtin")]
    pub file: Option<PathBuf>,

    /// Prefix length; required for builtins, truncates literal words.
    #[arg(short = 'n', long = "length")]
    pub length: Option<usize>,

    /// Slope, as `p/q` or `(a+b*sqrt(d))/c`.
    #[arg(long)]
    pub slope: Option<String>,

    /// Intercept of a mechanical word, as `p/q`.
    #[arg(long)]
    pub intercept: Option<String>,

    /// Upper (ceiling) mechanical word; the default.
    #[arg(long, conflicts_with = "lower")]
    pub upper: bool,

    /// Lower (floor) mechanical word.
    #[arg(long)]
    pub lower: bool,

    /// Seed word of the flipext builtins.
    #[arg(long)]
    pub seed: Option<String>,

    /// Target minimum density of the lemma3 builtin, as `p/q`.
    #[arg(long)]
    pub alpha: Option<String>,

    /// First term of the lemma3 sequence, as `p/q`.
    #[arg(long)]
    pub a1: Option<String>,
}

fn usage(what: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("{what}: {e}"))
}

/// The resolved word: a finite prefix plus, for builtins, its name.
pub struct Resolved {
    pub word: FiniteWord,
    pub builtin: Option<BuiltinKind>,
}

impl SourceArgs {
    fn builtin_spec(&self, kind: BuiltinKind) -> Result<Builtin, CliError> {
        let mut b = Builtin::new(kind);
        if let Some(s) = &self.slope {
            b.slope = s.parse::<SlopeSpec>().map_err(|e| usage("--slope", e))?;
        }
        if let Some(s) = &self.intercept {
            b.intercept = s.parse::<Rational>().map_err(|e| usage("--intercept", e))?;
        }
        if self.lower {
            b.rounding = Rounding::Lower;
        }
        if let Some(s) = &self.seed {
            b.seed = s.parse::<FiniteWord>().map_err(|e| usage("--seed", e))?;
        }
        if let Some(s) = &self.alpha {
            b.alpha = s.parse::<Rational>().map_err(|e| usage("--alpha", e))?;
        }
        if let Some(s) = &self.a1 {
            b.a1 = Some(s.parse::<Rational>().map_err(|e| usage("--a1", e))?);
        }
        Ok(b)
    }

    /// The builtin stream, if the source is a builtin.
    pub fn stream(&self) -> Result<Option<(BuiltinKind, WordStream)>, CliError> {
        let Some(name) = &self.builtin else {
            return Ok(None);
        };
        let kind = name
            .parse::<BuiltinKind>()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let stream = self
            .builtin_spec(kind)?
            .stream()
            .map_err(|e| usage(kind.name(), e))?;
        Ok(Some((kind, stream)))
    }

    /// Materializes the source, prefixed by `ones` 1s.
    pub fn resolve_with_ones(&self, ones: usize) -> Result<Resolved, CliError> {
        if let Some((kind, stream)) = self.stream()? {
            let len = self
                .length
                .ok_or_else(|| CliError::Usage(format!("{kind} needs a length (-n)")))?;
            let word = stream
                .prepend_ones(ones)
                .prefix(len)
                .map_err(CliError::from_library)?;
            return Ok(Resolved {
                word,
                builtin: Some(kind),
            });
        }
        let text = match (&self.word, &self.file) {
            (Some(w), _) => w.clone(),
            (None, Some(path)) => std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
            (None, None) => {
                return Err(CliError::Usage(
                    "no word given: name a builtin, or pass --word or --file".into(),
                ))
            }
        };
        let word: FiniteWord = text.trim().parse().map_err(|e| match &self.file {
            Some(path) => CliError::Io(format!("{}: {e}", path.display())),
            None => usage("--word", e),
        })?;
        let word = word.prepend_ones(ones);
        let word = match self.length {
            Some(n) => word.prefix(n).map_err(|e| usage("-n", e))?,
            None => word,
        };
        Ok(Resolved {
            word,
            builtin: None,
        })
    }

    pub fn resolve(&self) -> Result<Resolved, CliError> {
        self.resolve_with_ones(0)
    }
}
