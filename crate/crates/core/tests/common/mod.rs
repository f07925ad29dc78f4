//! Naive reference implementations used as oracles. Each one enumerates
//! factors directly and shares no code with the library's algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Max and min number of 1s over factors of each length `0..=n`, by extending
/// every start position one symbol at a time.
pub fn max_min_ones(bits: &[u8]) -> (Vec<usize>, Vec<usize>) {
    let n = bits.len();
    let mut max = vec![0; n + 1];
    let mut min = vec![usize::MAX; n + 1];
    min[0] = 0;
    for start in 0..n {
        let mut ones = 0;
        for end in start..n {
            ones += bits[end] as usize;
            let len = end - start + 1;
            max[len] = max[len].max(ones);
            min[len] = min[len].min(ones);
        }
    }
    (max, min)
}

/// Every Parikh vector `(zeros, ones)` of a non-empty factor.
pub fn parikh_vectors(bits: &[u8]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for start in 0..bits.len() {
        let mut ones = 0;
        for end in start..bits.len() {
            ones += bits[end] as usize;
            let len = end - start + 1;
            out.insert((len - ones, ones));
        }
    }
    out
}

/// Distinct Parikh vectors among factors of length `len`.
pub fn abelian(bits: &[u8], len: usize) -> usize {
    parikh_vectors(bits)
        .iter()
        .filter(|(z, o)| z + o == len)
        .count()
}

/// No factor has more 1s than the prefix of the same length.
pub fn prefix_normal(bits: &[u8]) -> bool {
    let mut prefix = vec![0usize];
    for &b in bits {
        prefix.push(prefix.last().unwrap() + b as usize);
    }
    (1..bits.len()).all(|start| {
        let mut ones = 0;
        (start..bits.len()).all(|end| {
            ones += bits[end] as usize;
            ones <= prefix[end - start + 1]
        })
    })
}

/// Least `(ones, len)` prefix density, least index on ties, by cross-multiplying.
pub fn min_density(bits: &[u8]) -> (usize, usize) {
    let mut best = (bits[0] as usize, 1);
    let mut ones = 0;
    for (i, &b) in bits.iter().enumerate() {
        ones += b as usize;
        let len = i + 1;
        if ones * best.1 < best.0 * len {
            best = (ones, len);
        }
    }
    best
}

/// All lex-extreme length-`n` factors by scanning every window.
pub fn extreme_factors(bits: &[u8], n: usize) -> (Vec<u8>, Vec<u8>) {
    let windows: Vec<&[u8]> = (0..=bits.len() - n).map(|i| &bits[i..i + n]).collect();
    (
        windows.iter().max().unwrap().to_vec(),
        windows.iter().min().unwrap().to_vec(),
    )
}

/// Suffix starting at every `i >= 1` is `<=` the prefix of equal length.
pub fn prenecklace(bits: &[u8]) -> bool {
    (1..bits.len()).all(|i| bits[i..] <= bits[..bits.len() - i])
}

pub fn all_words(len: usize) -> impl Iterator<Item = Vec<u8>> {
    (0u32..1 << len).map(move |m| (0..len).map(|i| ((m >> i) & 1) as u8).collect())
}

pub fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Vec<u8> {
    let len = rng.gen_range(1..=max_len);
    let p: f64 = rng.gen_range(0.05..0.95);
    (0..len).map(|_| u8::from(rng.gen_bool(p))).collect()
}

pub fn render(bits: &[u8]) -> String {
    bits.iter()
        .map(|&b| if b == 1 { '1' } else { '0' })
        .collect()
}
