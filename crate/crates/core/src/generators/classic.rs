//! Morphic fixpoints (Fibonacci, Thue-Morse), the paperfolding word and the
//! binary Champernowne word.

use crate::error::{Error, Result};
use crate::stream::{SymbolSource, WordStream, MAX_MATERIALIZED};
use crate::word::FiniteWord;

/// A binary morphism together with the letter whose fixpoint is taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismSpec {
    image0: FiniteWord,
    image1: FiniteWord,
    seed: u8,
}

impl MorphismSpec {
    /// Rejects morphisms that are not prolongable on `seed`: the image of the
    /// seed must start with the seed and have length at least 2.
    pub fn new(image0: FiniteWord, image1: FiniteWord, seed: u8) -> Result<Self> {
        if seed > 1 {
            return Err(Error::InvalidInput(format!("seed {seed} is not binary")));
        }
        let spec = MorphismSpec {
            image0,
            image1,
            seed,
        };
        let image = spec.image(seed);
        if image.len() < 2 || image.bits()[0] != seed {
            return Err(Error::InvalidInput(format!(
                "morphism is not prolongable on {seed}: image is {image:?}"
            )));
        }
        Ok(spec)
    }

    /// `0 → 01, 1 → 0`.
    pub fn fibonacci() -> Self {
        Self::new("01".parse().unwrap(), "0".parse().unwrap(), 0).expect("prolongable")
    }

    /// `0 → 01, 1 → 10`, iterated from 0.
    pub fn thue_morse() -> Self {
        Self::new("01".parse().unwrap(), "10".parse().unwrap(), 0).expect("prolongable")
    }

    pub fn image(&self, symbol: u8) -> &FiniteWord {
        if symbol == 0 {
            &self.image0
        } else {
            &self.image1
        }
    }

    pub fn seed(&self) -> u8 {
        self.seed
    }
}

struct FixpointSource {
    spec: MorphismSpec,
    // Invariant once started: emitted == μ(emitted[..expanded]).
    expanded: usize,
}

impl SymbolSource for FixpointSource {
    fn extend(&mut self, emitted: &mut Vec<u8>, target: usize) -> Result<()> {
        if emitted.is_empty() {
            emitted.extend_from_slice(self.spec.image(self.spec.seed).bits());
            self.expanded = 1;
        }
        while emitted.len() < target {
            let Some(&symbol) = emitted.get(self.expanded) else {
                return Err(Error::InvalidInput("morphism fixpoint is finite".into()));
            };
            emitted.extend_from_slice(self.spec.image(symbol).bits());
            self.expanded += 1;
        }
        Ok(())
    }
}

pub fn morphic_stream(spec: &MorphismSpec) -> WordStream {
    WordStream::new(FixpointSource {
        spec: spec.clone(),
        expanded: 0,
    })
}

/// First `n` symbols of the fixpoint of `spec` starting from its seed.
pub fn morphic_fixpoint(spec: &MorphismSpec, n: usize) -> Result<FiniteWord> {
    morphic_stream(spec).prefix(n)
}

/// `i`-th symbol (1-based) of the ordinary paperfolding word: 0 if the odd
/// part of `i` is 1 mod 4, else 1.
pub fn paperfolding_symbol(i: u64) -> u8 {
    debug_assert!(i >= 1);
    let odd = i >> i.trailing_zeros();
    if odd % 4 == 1 {
        0
    } else {
        1
    }
}

pub fn paperfolding_stream() -> WordStream {
    WordStream::from_fn(paperfolding_symbol)
}

pub fn paperfolding(n: usize) -> Result<FiniteWord> {
    paperfolding_stream().prefix(n)
}

struct ChampernowneSource {
    next: u64,
}

impl SymbolSource for ChampernowneSource {
    fn extend(&mut self, emitted: &mut Vec<u8>, target: usize) -> Result<()> {
        while emitted.len() < target {
            let k = self.next;
            if k == 0 {
                emitted.push(0);
            } else {
                let width = 64 - k.leading_zeros();
                emitted.extend((0..width).rev().map(|bit| ((k >> bit) & 1) as u8));
            }
            self.next += 1;
        }
        Ok(())
    }
}

/// Binary expansions of 0, 1, 2, … concatenated.
pub fn champernowne_stream() -> WordStream {
    WordStream::new(ChampernowneSource { next: 0 })
}

pub fn champernowne(n: usize) -> Result<FiniteWord> {
    if n > MAX_MATERIALIZED {
        return Err(Error::Resource {
            requested: n,
            cap: MAX_MATERIALIZED,
        });
    }
    champernowne_stream().prefix(n)
}

pub fn fibonacci_stream() -> WordStream {
    morphic_stream(&MorphismSpec::fibonacci())
}

pub fn thue_morse_stream() -> WordStream {
    morphic_stream(&MorphismSpec::thue_morse())
}
