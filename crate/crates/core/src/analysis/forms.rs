//! Prefix normal forms, abelian complexity, Parikh sets and balance bounds,
//! all read off a [`PrefixProfile`].

use crate::error::{Error, Result};
use crate::profile::{compute_profile, PrefixProfile};
use crate::word::{FiniteWord, ParikhVector};

/// First differences of `F¹`: the 1-prefix normal word with the same
/// maximum-1s function.
pub fn pnf1(profile: &PrefixProfile) -> FiniteWord {
    let bits = (1..=profile.len())
        .map(|i| (profile.max_ones(i) - profile.max_ones(i - 1)) as u8)
        .collect();
    FiniteWord::from_bits_unchecked(bits)
}

/// Complemented first differences of `F⁰`: the 0-prefix normal word with the
/// same maximum-0s function. Its prefix weights are `f¹`.
pub fn pnf0(profile: &PrefixProfile) -> FiniteWord {
    let bits = (1..=profile.len())
        .map(|i| 1 - (profile.max_zeros(i) - profile.max_zeros(i - 1)) as u8)
        .collect();
    FiniteWord::from_bits_unchecked(bits)
}

fn check_length(profile: &PrefixProfile, n: usize) -> Result<()> {
    if n == 0 || n > profile.len() {
        return Err(Error::Range {
            index: n,
            max: profile.len(),
        });
    }
    Ok(())
}

/// `ψ(n) = F¹(n) − f¹(n) + 1`.
pub fn abelian_complexity(profile: &PrefixProfile, n: usize) -> Result<usize> {
    check_length(profile, n)?;
    Ok(profile.max_ones(n) - profile.min_ones(n) + 1)
}

/// Parikh vectors `(zeros, ones)` of the length-`n` factors, ascending by ones.
///
/// Sliding a window changes its weight by at most one, so every weight between
/// `f¹(n)` and `F¹(n)` occurs.
pub fn parikh_set(profile: &PrefixProfile, n: usize) -> Result<Vec<ParikhVector>> {
    check_length(profile, n)?;
    Ok((profile.min_ones(n)..=profile.max_ones(n))
        .map(|y| ParikhVector::new(n - y, y))
        .collect())
}

/// Equal-length factors differ by at most `c` ones.
pub fn is_c_balanced(w: &FiniteWord, c: usize) -> bool {
    if w.is_empty() {
        return true;
    }
    let profile = compute_profile(w).expect("non-empty word");
    (1..=profile.len()).all(|i| profile.max_ones(i) - profile.min_ones(i) <= c)
}

/// A sufficient number `n·c` of 1s to prepend so the word becomes prefix
/// normal, where `n` is one more than the longest run of 1s.
///
/// Fails when the profiled word is not `c`-balanced, or when it consists of 1s
/// only (no run length is excluded).
pub fn prepend_ones_bound(profile: &PrefixProfile, c: usize) -> Result<usize> {
    if c == 0 {
        return Err(Error::InvalidInput(
            "balance constant must be positive".into(),
        ));
    }
    if let Some(i) = (1..=profile.len()).find(|&i| profile.max_ones(i) - profile.min_ones(i) > c) {
        return Err(Error::InvalidInput(format!(
            "word is not {c}-balanced (length {i})"
        )));
    }
    // F¹(i) = i exactly for the lengths covered by a run of 1s.
    let run = (1..=profile.len())
        .take_while(|&i| profile.max_ones(i) == i)
        .count();
    if run == profile.len() {
        return Err(Error::NoBound(format!(
            "1^{run} occurs in the profiled word; no run length is excluded"
        )));
    }
    Ok((run + 1) * c)
}
