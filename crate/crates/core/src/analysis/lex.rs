//! Lexicographic structure: prenecklace prefixes and extreme factors.

use crate::error::{Error, Result};
use crate::word::FiniteWord;

/// Z-array: `z[i]` is the length of the longest common prefix of `s` and
/// `s[i..]`, with `z[0] = |s|`.
fn z_array(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for i in 1..n {
        let mut k = if i < r { z[i - l].min(r - i) } else { 0 };
        while i + k < n && s[k] == s[i + k] {
            k += 1;
        }
        z[i] = k;
        if i + k > r {
            l = i;
            r = i + k;
        }
    }
    z
}

/// Every proper suffix is `<=_lex` the prefix of the same length.
///
/// This is the finite-window reading of "the word dominates all its shifts".
pub fn is_prenecklace_prefix(w: &FiniteWord) -> bool {
    let s = w.bits();
    let z = z_array(s);
    (1..s.len()).all(|i| {
        let k = z[i];
        // Either the suffix is itself a prefix, or it first differs with a 0.
        i + k == s.len() || s[i + k] < s[k]
    })
}

/// Suffix array by prefix doubling.
fn suffix_array(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut sa: Vec<usize> = (0..n).collect();
    let mut rank: Vec<usize> = s.iter().map(|&b| b as usize).collect();
    let mut next = vec![0; n];
    if n < 2 {
        return sa;
    }
    let mut k = 1;
    loop {
        // Rank pairs; a missing second half sorts first (shorter suffix is smaller).
        let key = |i: usize| (rank[i], if i + k < n { rank[i + k] + 1 } else { 0 });
        sa.sort_unstable_by_key(|&i| key(i));
        next[sa[0]] = 0;
        for j in 1..n {
            next[sa[j]] = next[sa[j - 1]] + usize::from(key(sa[j - 1]) != key(sa[j]));
        }
        std::mem::swap(&mut rank, &mut next);
        if rank[sa[n - 1]] == n - 1 || k >= n {
            break;
        }
        k *= 2;
    }
    sa
}

/// Lexicographically extreme factors of one word, for every length.
///
/// Truncation to a common length preserves `<=_lex`, so the extreme length-`n`
/// factor is the truncation of the extreme suffix among those of length `>= n`.
#[derive(Clone, Debug)]
pub struct FactorExtremes {
    bits: Vec<u8>,
    // best_max[n] / best_min[n]: start of the extreme suffix among those with length >= n.
    best_max: Vec<usize>,
    best_min: Vec<usize>,
}

impl FactorExtremes {
    pub fn new(w: &FiniteWord) -> Self {
        let s = w.bits();
        let n = s.len();
        let sa = suffix_array(s);
        let mut pos = vec![0; n];
        for (r, &i) in sa.iter().enumerate() {
            pos[i] = r;
        }
        let mut best_max = vec![0; n + 1];
        let mut best_min = vec![0; n + 1];
        // Sweep lengths from long to short; suffix of length m starts at n − m.
        let mut cur: Option<(usize, usize)> = None;
        for m in (1..=n).rev() {
            let start = n - m;
            cur = Some(match cur {
                None => (start, start),
                Some((hi, lo)) => (
                    if pos[start] > pos[hi] { start } else { hi },
                    if pos[start] < pos[lo] { start } else { lo },
                ),
            });
            let (hi, lo) = cur.unwrap();
            best_max[m] = hi;
            best_min[m] = lo;
        }
        FactorExtremes {
            bits: s.to_vec(),
            best_max,
            best_min,
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.bits.len() {
            return Err(Error::Range {
                index: n,
                max: self.bits.len(),
            });
        }
        Ok(())
    }

    /// Greatest length-`n` factor.
    pub fn max_word(&self, n: usize) -> Result<FiniteWord> {
        self.check(n)?;
        let start = self.best_max[n];
        Ok(FiniteWord::from_bits_unchecked(
            self.bits[start..start + n].to_vec(),
        ))
    }

    /// Least length-`n` factor.
    pub fn min_word(&self, n: usize) -> Result<FiniteWord> {
        self.check(n)?;
        let start = self.best_min[n];
        Ok(FiniteWord::from_bits_unchecked(
            self.bits[start..start + n].to_vec(),
        ))
    }
}

/// Greatest length-`n` factor of `w`.
pub fn max_word(w: &FiniteWord, n: usize) -> Result<FiniteWord> {
    if n > w.len() {
        return Err(Error::Range {
            index: n,
            max: w.len(),
        });
    }
    let s = w.bits();
    let best = (0..=s.len() - n).map(|i| &s[i..i + n]).max().unwrap_or(&[]);
    Ok(FiniteWord::from_bits_unchecked(best.to_vec()))
}

/// Least length-`n` factor of `w`.
pub fn min_word(w: &FiniteWord, n: usize) -> Result<FiniteWord> {
    if n > w.len() {
        return Err(Error::Range {
            index: n,
            max: w.len(),
        });
    }
    let s = w.bits();
    let best = (0..=s.len() - n).map(|i| &s[i..i + n]).min().unwrap_or(&[]);
    Ok(FiniteWord::from_bits_unchecked(best.to_vec()))
}
