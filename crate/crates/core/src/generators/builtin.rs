//! Named generators with their parameters, as exposed on the command line.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::generators::aperiodic::AperiodicConstruction;
use crate::generators::classic::{
    champernowne_stream, fibonacci_stream, paperfolding_stream, thue_morse_stream,
};
use crate::generators::flipext::{flipext_stream, lazy_alpha_flipext_stream};
use crate::generators::mechanical::{mechanical_stream, Rounding};
use crate::rational::Rational;
use crate::slope::SlopeSpec;
use crate::stream::WordStream;
use crate::word::FiniteWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BuiltinKind {
    Fibonacci,
    ThueMorse,
    Paperfolding,
    Champernowne,
    Mechanical,
    FlipextOmega,
    LazyFlipextOmega,
    Aperiodic,
}

impl BuiltinKind {
    pub const ALL: [BuiltinKind; 8] = [
        BuiltinKind::Fibonacci,
        BuiltinKind::ThueMorse,
        BuiltinKind::Paperfolding,
        BuiltinKind::Champernowne,
        BuiltinKind::Mechanical,
        BuiltinKind::FlipextOmega,
        BuiltinKind::LazyFlipextOmega,
        BuiltinKind::Aperiodic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinKind::Fibonacci => "fibonacci",
            BuiltinKind::ThueMorse => "thue-morse",
            BuiltinKind::Paperfolding => "paperfolding",
            BuiltinKind::Champernowne => "champernowne",
            BuiltinKind::Mechanical => "mechanical",
            BuiltinKind::FlipextOmega => "flipext-omega",
            BuiltinKind::LazyFlipextOmega => "lazy-flipext-omega",
            BuiltinKind::Aperiodic => "lemma3",
        }
    }
}

impl fmt::Display for BuiltinKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let kind = match s {
            "aperiodic" => BuiltinKind::Aperiodic,
            "tm" => BuiltinKind::ThueMorse,
            _ => *BuiltinKind::ALL
                .iter()
                .find(|k| k.name() == s)
                .ok_or_else(|| Error::Parse(format!("unknown builtin word {s:?}")))?,
        };
        Ok(kind)
    }
}

/// A builtin with its parameters; unused parameters are ignored.
#[derive(Clone, Debug)]
pub struct Builtin {
    pub kind: BuiltinKind,
    /// Mechanical and lazy-flipext slope.
    pub slope: SlopeSpec,
    pub intercept: Rational,
    pub rounding: Rounding,
    /// Seed for the flipext operators.
    pub seed: FiniteWord,
    /// Target density of the aperiodic construction.
    pub alpha: Rational,
    /// First term of its sequence; `(1 + α)/2` when absent.
    pub a1: Option<Rational>,
}

impl Builtin {
    /// Defaults: slope `(√5 − 1)/2`, intercept 0, upper rounding, flipext seed
    /// `1101`, lazy seed `1` (when the slope is left at its default), `α = 2/5`.
    pub fn new(kind: BuiltinKind) -> Self {
        Builtin {
            kind,
            slope: SlopeSpec::golden_conjugate(),
            intercept: Rational::zero(),
            rounding: Rounding::Upper,
            seed: match kind {
                BuiltinKind::LazyFlipextOmega => FiniteWord::ones(1),
                _ => FiniteWord::new(vec![1, 1, 0, 1]).expect("binary"),
            },
            alpha: Rational::from_ratio(2, 5),
            a1: None,
        }
    }

    pub fn stream(&self) -> Result<WordStream> {
        match self.kind {
            BuiltinKind::Fibonacci => Ok(fibonacci_stream()),
            BuiltinKind::ThueMorse => Ok(thue_morse_stream()),
            BuiltinKind::Paperfolding => Ok(paperfolding_stream()),
            BuiltinKind::Champernowne => Ok(champernowne_stream()),
            BuiltinKind::Mechanical => {
                mechanical_stream(&self.slope, &self.intercept, self.rounding)
            }
            BuiltinKind::FlipextOmega => flipext_stream(&self.seed),
            BuiltinKind::LazyFlipextOmega => lazy_alpha_flipext_stream(&self.seed, &self.slope),
            BuiltinKind::Aperiodic => {
                let a1 = self
                    .a1
                    .clone()
                    .unwrap_or_else(|| AperiodicConstruction::default_first_term(&self.alpha));
                Ok(AperiodicConstruction::geometric(self.alpha.clone(), a1)?.into_stream())
            }
        }
    }
}
