//! Prefix normality checks with deterministic violation witnesses.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::stream::WordStream;
use crate::word::FiniteWord;

/// A factor carrying more of `symbol` than the prefix of the same length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PNViolation {
    /// Counted symbol: 1 for 1-prefix normality, 0 for 0-prefix normality.
    pub symbol: u8,
    /// 1-based start of the factor.
    pub factor_start: usize,
    pub factor_length: usize,
    /// Occurrences of `symbol` in the factor.
    pub factor_ones: usize,
    /// Occurrences of `symbol` in the prefix of the same length.
    pub prefix_ones: usize,
}

impl fmt::Display for PNViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "len={} start={} ones={} prefix_ones={}",
            self.factor_length, self.factor_start, self.factor_ones, self.prefix_ones
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normality {
    Normal,
    Violation(PNViolation),
}

impl Normality {
    pub fn is_normal(&self) -> bool {
        matches!(self, Normality::Normal)
    }

    pub fn violation(&self) -> Option<&PNViolation> {
        match self {
            Normality::Normal => None,
            Normality::Violation(v) => Some(v),
        }
    }
}

/// Shortest, then leftmost, window with more 1s than the prefix of its length.
///
/// `bits` are counted as given, so the 0-variant passes the complement.
fn first_violation(bits: &[u8], symbol: u8) -> Option<PNViolation> {
    let n = bits.len();
    let mut sums = Vec::with_capacity(n + 1);
    sums.push(0usize);
    for &b in bits {
        sums.push(sums.last().unwrap() + b as usize);
    }
    let sums = &sums;
    (1..=n).into_par_iter().find_map_first(|len| {
        let bound = sums[len];
        (1..=n - len).find_map(|start| {
            let ones = sums[start + len] - sums[start];
            (ones > bound).then_some(PNViolation {
                symbol,
                factor_start: start + 1,
                factor_length: len,
                factor_ones: ones,
                prefix_ones: bound,
            })
        })
    })
}

/// 1-prefix normality: no factor has more 1s than the prefix of equal length.
pub fn is_prefix_normal_1(w: &FiniteWord) -> Normality {
    match first_violation(w.bits(), 1) {
        None => Normality::Normal,
        Some(v) => Normality::Violation(v),
    }
}

/// 0-prefix normality: no factor has more 0s than the prefix of equal length.
pub fn is_prefix_normal_0(w: &FiniteWord) -> Normality {
    match first_violation(w.complement().bits(), 0) {
        None => Normality::Normal,
        Some(v) => Normality::Violation(v),
    }
}

/// Shorthand for `is_prefix_normal_1(w).is_normal()`.
pub fn is_prefix_normal(w: &FiniteWord) -> bool {
    is_prefix_normal_1(w).is_normal()
}

/// Verdict for the length-`len` prefix of a stream; a normal prefix implies
/// all shorter prefixes are normal too.
pub fn check_stream_prefix_normal(stream: &mut WordStream, len: usize) -> Result<Normality> {
    if len == 0 {
        return Err(Error::InvalidInput(
            "prefix length must be at least 1".into(),
        ));
    }
    Ok(is_prefix_normal_1(&stream.prefix(len)?))
}

/// Least `k <= kmax` such that `1^k · prefix(len)` is prefix normal.
pub fn empirical_min_prepend(
    stream: &mut WordStream,
    len: usize,
    kmax: usize,
) -> Result<Option<usize>> {
    let prefix = stream.prefix(len)?;
    Ok((0..=kmax).find(|&k| is_prefix_normal(&prefix.prepend_ones(k))))
}
