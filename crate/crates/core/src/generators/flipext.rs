//! Extension operators that append `0^k 1` to a prefix normal word.
//!
//! * `flipext` picks the least `k` keeping the word prefix normal; it leaves
//!   `δ`, `ι` and `κ` unchanged.
//! * `lazy-α-flipext` picks the greatest `k` with `δ(w0^k) >= α`. Iterated from
//!   `1` it reproduces the upper mechanical word `s'_{α,0}`.

use std::cmp::Ordering;

use crate::analysis::density::min_density;
use crate::analysis::normality::is_prefix_normal;
use crate::error::{Error, Result};
use crate::slope::SlopeSpec;
use crate::stream::{SymbolSource, WordStream};
use crate::word::FiniteWord;

fn require_flipext_input(w: &FiniteWord) -> Result<()> {
    if w.weight() == 0 {
        return Err(Error::InvalidInput(
            "flipext needs a word containing a 1".into(),
        ));
    }
    if !is_prefix_normal(w) {
        return Err(Error::InvalidInput(format!("{w} is not prefix normal")));
    }
    Ok(())
}

/// Least `k` such that `w 0^k 1` is prefix normal, for a prefix normal `w`.
///
/// Appending 0s cannot create a violation, and factors ending before the new 1
/// are already fine, so only the windows ending at the new 1 are tested.
fn flipext_gap(sums: &[usize]) -> usize {
    let n = sums.len() - 1;
    let total = sums[n];
    let sum_at = |t: usize| sums[t.min(n)];
    (0..)
        .find(|&gap| {
            let len = n + gap + 1;
            (1..len).all(|l| total + 1 - sum_at(len - l) <= sum_at(l))
        })
        .expect("some gap always restores prefix normality")
}

/// `w 0^k 1` with the least `k` keeping prefix normality.
pub fn flipext(w: &FiniteWord) -> Result<FiniteWord> {
    require_flipext_input(w)?;
    let gap = flipext_gap(&w.prefix_sums());
    let mut bits = w.bits().to_vec();
    bits.resize(bits.len() + gap, 0);
    bits.push(1);
    Ok(FiniteWord::from_bits_unchecked(bits))
}

struct FlipextSource {
    seed: FiniteWord,
    sums: Vec<usize>,
}

impl SymbolSource for FlipextSource {
    fn extend(&mut self, emitted: &mut Vec<u8>, target: usize) -> Result<()> {
        if emitted.is_empty() {
            emitted.extend_from_slice(self.seed.bits());
            self.sums = self.seed.prefix_sums();
        }
        while emitted.len() < target {
            let gap = flipext_gap(&self.sums);
            let total = *self.sums.last().unwrap();
            emitted.extend(std::iter::repeat_n(0, gap));
            emitted.push(1);
            self.sums.extend(std::iter::repeat_n(total, gap));
            self.sums.push(total + 1);
        }
        Ok(())
    }
}

/// Lazy `flipext^ω(w)`.
pub fn flipext_stream(w: &FiniteWord) -> Result<WordStream> {
    require_flipext_input(w)?;
    Ok(WordStream::new(FlipextSource {
        seed: w.clone(),
        sums: Vec::new(),
    }))
}

fn require_lazy_input(w: &FiniteWord, alpha: &SlopeSpec) -> Result<()> {
    if !alpha.in_half_open_unit() {
        return Err(Error::OutOfRange(format!(
            "slope {alpha} is outside (0, 1]"
        )));
    }
    if w.is_empty() {
        return Err(Error::InvalidInput(
            "minimum density of the empty word is undefined".into(),
        ));
    }
    if !is_prefix_normal(w) {
        return Err(Error::InvalidInput(format!("{w} is not prefix normal")));
    }
    let delta = min_density(w)?.delta;
    if alpha.cmp_rational(&delta) == Ordering::Greater {
        return Err(Error::InvalidInput(format!(
            "minimum density {delta} of {w} is below the slope {alpha}"
        )));
    }
    Ok(())
}

/// Greatest `k` with `|w|_1 / (|w| + k) >= α`, given `|w|_1 / |w| >= α`.
///
/// Since `δ(w) >= α` already holds, `δ(w0^k) >= α` reduces to the density of
/// the whole word `w0^k`.
fn lazy_gap(len: usize, ones: usize, alpha: &SlopeSpec) -> usize {
    let mut gap = 0;
    while alpha.cmp_ratio(ones as u64, (len + gap + 1) as u64) != Ordering::Greater {
        gap += 1;
    }
    gap
}

/// `w 0^k 1` with `k = max { j : δ(w0^j) >= α }`.
pub fn lazy_alpha_flipext(w: &FiniteWord, alpha: &SlopeSpec) -> Result<FiniteWord> {
    require_lazy_input(w, alpha)?;
    let gap = lazy_gap(w.len(), w.weight(), alpha);
    let mut bits = w.bits().to_vec();
    bits.resize(bits.len() + gap, 0);
    bits.push(1);
    Ok(FiniteWord::from_bits_unchecked(bits))
}

struct LazyFlipextSource {
    seed: FiniteWord,
    alpha: SlopeSpec,
    ones: usize,
}

impl SymbolSource for LazyFlipextSource {
    fn extend(&mut self, emitted: &mut Vec<u8>, target: usize) -> Result<()> {
        if emitted.is_empty() {
            emitted.extend_from_slice(self.seed.bits());
            self.ones = self.seed.weight();
        }
        while emitted.len() < target {
            let gap = lazy_gap(emitted.len(), self.ones, &self.alpha);
            emitted.extend(std::iter::repeat_n(0, gap));
            emitted.push(1);
            self.ones += 1;
        }
        Ok(())
    }
}

/// Lazy `lazy-α-flipext^ω(w)`.
pub fn lazy_alpha_flipext_stream(w: &FiniteWord, alpha: &SlopeSpec) -> Result<WordStream> {
    require_lazy_input(w, alpha)?;
    Ok(WordStream::new(LazyFlipextSource {
        seed: w.clone(),
        alpha: alpha.clone(),
        ones: 0,
    }))
}
