//! Lower and upper mechanical words and characteristic words.
//!
//! `s(n)  = ⌊α·n + τ⌋ − ⌊α·(n−1) + τ⌋`
//! `s'(n) = ⌈α·n + τ⌉ − ⌈α·(n−1) + τ⌉`
//!
//! Each symbol comes from exact floor/ceil evaluation; no symbol is derived
//! from a floating-point approximation of `α`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::slope::SlopeSpec;
use crate::stream::{SymbolSource, WordStream, MAX_MATERIALIZED};
use crate::word::FiniteWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    /// Floor: the lower mechanical word `s_{α,τ}`.
    Lower,
    /// Ceiling: the upper mechanical word `s'_{α,τ}`.
    Upper,
}

fn validate(alpha: &SlopeSpec, tau: &Rational) -> Result<()> {
    if !alpha.in_closed_unit() {
        return Err(Error::OutOfRange(format!(
            "slope {alpha} is outside [0, 1]"
        )));
    }
    if tau.is_negative() || tau.cmp_ratio(1, 1) != Ordering::Less {
        return Err(Error::OutOfRange(format!(
            "intercept {tau} is outside [0, 1)"
        )));
    }
    if !alpha.is_rational() && !tau.is_zero() {
        return Err(Error::Unsupported(format!(
            "intercept {tau} with irrational slope {alpha}"
        )));
    }
    Ok(())
}

struct MechanicalSource {
    alpha: SlopeSpec,
    tau: Rational,
    rounding: Rounding,
    // Rounded value of α·(i−1) + τ, where i is the next position to emit.
    previous: BigInt,
    next_index: u64,
}

impl MechanicalSource {
    fn new(alpha: SlopeSpec, tau: Rational, rounding: Rounding) -> Result<Self> {
        validate(&alpha, &tau)?;
        let mut source = MechanicalSource {
            alpha,
            tau,
            rounding,
            previous: BigInt::from(0),
            next_index: 1,
        };
        source.previous = source.rounded(0)?;
        Ok(source)
    }

    fn rounded(&self, n: u64) -> Result<BigInt> {
        match self.rounding {
            Rounding::Lower => self.alpha.floor_affine(n, &self.tau),
            Rounding::Upper => self.alpha.ceil_affine(n, &self.tau),
        }
    }
}

impl SymbolSource for MechanicalSource {
    fn extend(&mut self, emitted: &mut Vec<u8>, target: usize) -> Result<()> {
        while emitted.len() < target {
            let current = self.rounded(self.next_index)?;
            let step = (&current - &self.previous)
                .to_u8()
                .filter(|&s| s <= 1)
                .ok_or_else(|| Error::OutOfRange("mechanical step outside {0, 1}".into()))?;
            emitted.push(step);
            self.previous = current;
            self.next_index += 1;
        }
        Ok(())
    }
}

/// Lazy mechanical word of slope `alpha` and intercept `tau`.
pub fn mechanical_stream(
    alpha: &SlopeSpec,
    tau: &Rational,
    rounding: Rounding,
) -> Result<WordStream> {
    Ok(WordStream::new(MechanicalSource::new(
        alpha.clone(),
        tau.clone(),
        rounding,
    )?))
}

fn check_len(n: usize) -> Result<()> {
    if n > MAX_MATERIALIZED {
        Err(Error::Resource {
            requested: n,
            cap: MAX_MATERIALIZED,
        })
    } else {
        Ok(())
    }
}

/// First `n` symbols of the lower mechanical word `s_{α,τ}`.
pub fn mechanical_lower(alpha: &SlopeSpec, tau: &Rational, n: usize) -> Result<FiniteWord> {
    check_len(n)?;
    mechanical_stream(alpha, tau, Rounding::Lower)?.prefix(n)
}

/// First `n` symbols of the upper mechanical word `s'_{α,τ}`.
pub fn mechanical_upper(alpha: &SlopeSpec, tau: &Rational, n: usize) -> Result<FiniteWord> {
    check_len(n)?;
    mechanical_stream(alpha, tau, Rounding::Upper)?.prefix(n)
}

struct CharacteristicSource {
    upper: WordStream,
}

impl SymbolSource for CharacteristicSource {
    fn extend(&mut self, emitted: &mut Vec<u8>, target: usize) -> Result<()> {
        // c_α is s'_{α,0} without its first symbol.
        let bits = self.upper.prefix_bits(target + 1)?;
        emitted.extend_from_slice(&bits[emitted.len() + 1..]);
        Ok(())
    }
}

/// Lazy characteristic word `c_α` for an irrational `α ∈ (0, 1)`.
pub fn characteristic_stream(alpha: &SlopeSpec) -> Result<WordStream> {
    if alpha.is_rational() {
        return Err(Error::Unsupported(
            "characteristic words are only provided for irrational slopes".into(),
        ));
    }
    if !alpha.in_open_unit() {
        return Err(Error::OutOfRange(format!(
            "slope {alpha} is outside (0, 1)"
        )));
    }
    let upper = mechanical_stream(alpha, &Rational::zero(), Rounding::Upper)?;
    Ok(WordStream::new(CharacteristicSource { upper }))
}

/// First `n` symbols of `c_α`, i.e. symbols `2..=n+1` of `s'_{α,0}`.
pub fn characteristic_word(alpha: &SlopeSpec, n: usize) -> Result<FiniteWord> {
    check_len(n)?;
    characteristic_stream(alpha)?.prefix(n)
}
