//! Minimum prefix density `δ`, its least attaining index `ι`, and `κ = P(ι)`,
//! for finite words and for ultimately periodic words `u·x^ω`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::stream::{SymbolSource, WordStream};
use crate::word::FiniteWord;

/// `δ = κ / ι`, with `ι` the least index attaining the minimum prefix density.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinDensityReport {
    pub delta: Rational,
    pub iota: usize,
    pub kappa: usize,
}

impl fmt::Display for MinDensityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.delta, self.iota, self.kappa)
    }
}

/// Exact `δ(w)`, `ι(w)`, `κ(w)` of a non-empty finite word.
pub fn min_density(w: &FiniteWord) -> Result<MinDensityReport> {
    if w.is_empty() {
        return Err(Error::InvalidInput(
            "minimum density of the empty word".into(),
        ));
    }
    // Compare P(i)/i against the best κ/ι by cross-multiplication; values are
    // bounded by the word length, so u128 products cannot overflow.
    let (mut best_ones, mut best_len) = (0usize, 0usize);
    let mut ones = 0usize;
    for (idx, &b) in w.bits().iter().enumerate() {
        ones += b as usize;
        let len = idx + 1;
        let better = best_len == 0
            || (ones as u128) * (best_len as u128) < (best_ones as u128) * (len as u128);
        if better {
            best_ones = ones;
            best_len = len;
        }
    }
    Ok(MinDensityReport {
        delta: Rational::from_ratio(best_ones as i64, best_len as i64),
        iota: best_len,
        kappa: best_ones,
    })
}

/// `u · x^ω` with a non-empty period, kept in a canonical form: `x` is
/// primitive and the preperiod does not end with the last symbol of `x`
/// (so in particular `x` is not a suffix of `u`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UltimatelyPeriodicWord {
    preperiod: FiniteWord,
    period: FiniteWord,
}

impl UltimatelyPeriodicWord {
    pub fn new(preperiod: FiniteWord, period: FiniteWord) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidInput("period must be non-empty".into()));
        }
        let mut x = primitive_root(period.bits()).to_vec();
        let mut u = preperiod.into_bits();
        // Roll the period back over matching preperiod symbols.
        while let (Some(&last_u), Some(&last_x)) = (u.last(), x.last()) {
            if last_u != last_x {
                break;
            }
            u.pop();
            x.rotate_right(1);
        }
        Ok(UltimatelyPeriodicWord {
            preperiod: FiniteWord::from_bits_unchecked(u),
            period: FiniteWord::from_bits_unchecked(x),
        })
    }

    pub fn preperiod(&self) -> &FiniteWord {
        &self.preperiod
    }

    pub fn period(&self) -> &FiniteWord {
        &self.period
    }

    pub fn symbol(&self, i: u64) -> u8 {
        debug_assert!(i >= 1);
        let idx = (i - 1) as usize;
        let u = self.preperiod.bits();
        if idx < u.len() {
            u[idx]
        } else {
            let x = self.period.bits();
            x[(idx - u.len()) % x.len()]
        }
    }

    pub fn prefix(&self, n: usize) -> FiniteWord {
        FiniteWord::from_bits_unchecked((1..=n as u64).map(|i| self.symbol(i)).collect())
    }

    pub fn stream(&self) -> WordStream {
        WordStream::new(PeriodicSource { word: self.clone() })
    }
}

impl fmt::Display for UltimatelyPeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})^ω", self.preperiod, self.period)
    }
}

impl FromStr for UltimatelyPeriodicWord {
    type Err = Error;

    /// `u,x` with `u` possibly empty, e.g. `1,10` for `1(10)^ω` or `,110`.
    fn from_str(s: &str) -> Result<Self> {
        let (u, x) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected `u,x`, got {s:?}")))?;
        UltimatelyPeriodicWord::new(u.trim().parse()?, x.trim().parse()?)
    }
}

struct PeriodicSource {
    word: UltimatelyPeriodicWord,
}

impl SymbolSource for PeriodicSource {
    fn extend(&mut self, emitted: &mut Vec<u8>, target: usize) -> Result<()> {
        while emitted.len() < target {
            emitted.push(self.word.symbol(emitted.len() as u64 + 1));
        }
        Ok(())
    }
}

/// Shortest `y` with `x = y^k`.
fn primitive_root(x: &[u8]) -> &[u8] {
    let n = x.len();
    (1..=n)
        .find(|&p| n.is_multiple_of(p) && (p..n).all(|i| x[i] == x[i - p]))
        .map(|p| &x[..p])
        .unwrap_or(x)
}

/// Exact `δ(u·x^ω)`.
///
/// Past the preperiod, `D(|u| + r + k·|x|)` is `(A + k·B) / (C + k·D)` for each
/// residue `r`, which moves monotonically from its `k = 0` value towards the
/// period density `|x|_1 / |x|`. The infimum is therefore the smaller of the
/// prefix densities over `1..=|u|+|x|` and the period density.
pub fn min_density_up(w: &UltimatelyPeriodicWord) -> Result<Rational> {
    let head = w.prefix(w.preperiod.len() + w.period.len());
    let head_min = min_density(&head)?.delta;
    let period = w.period();
    let period_density = Rational::from_ratio(period.weight() as i64, period.len() as i64);
    Ok(match head_min.cmp(&period_density) {
        Ordering::Greater => period_density,
        _ => head_min,
    })
}
