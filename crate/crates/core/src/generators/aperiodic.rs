//! An aperiodic prefix normal word whose minimum density is a prescribed `α`.
//!
//! Given a strictly decreasing sequence `a_1 > a_2 > …` of rationals in
//! `(0, 1)` converging to `α` from above, stages are built as
//!
//! ```text
//! v(1) = 1^⌈10·a_1⌉ 0^(10 − ⌈10·a_1⌉)                 ℓ_1 = 10 − ⌈10·a_1⌉
//! v(i) = pref(flipext^ω(v(i−1)), k_i·|v(i−1)|) 0^ℓ_i
//! ℓ_i  = ⌊ k_i · (|v(i−1)|_1 − a_i·|v(i−1)|) / a_i ⌋
//! ```
//!
//! with `k_i` the least integer `> 1` making `ℓ_i > ℓ_{i−1}`. Each stage is a
//! prefix of the next, and the limit has density `α`.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::generators::flipext::flipext_stream;
use crate::rational::Rational;
use crate::slope::SlopeSpec;
use crate::stream::{SymbolSource, WordStream, MAX_MATERIALIZED};
use crate::word::FiniteWord;

/// One materialized stage `v(i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    /// 1-based stage number `i`.
    pub index: usize,
    pub word: FiniteWord,
    /// `a_i`.
    pub target: Rational,
    /// `k_i`; `None` for the first stage.
    pub multiplier: Option<u64>,
    /// `ℓ_i`, the length of the trailing run of 0s.
    pub zero_run: usize,
}

type Sequence = Arc<dyn Fn(usize) -> Rational + Send + Sync>;

/// Stage-by-stage builder of the construction.
pub struct AperiodicConstruction {
    alpha: SlopeSpec,
    sequence: Sequence,
    stages: Vec<Stage>,
}

impl std::fmt::Debug for AperiodicConstruction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AperiodicConstruction")
            .field("alpha", &self.alpha)
            .field("stages", &self.stages.len())
            .finish()
    }
}

impl AperiodicConstruction {
    /// `sequence(i)` yields `a_i` for `i >= 1`. Monotonicity and bounds are
    /// checked for each stage as it is materialized.
    pub fn new(
        alpha: SlopeSpec,
        sequence: impl Fn(usize) -> Rational + Send + Sync + 'static,
    ) -> Result<Self> {
        if !alpha.in_open_unit() {
            return Err(Error::OutOfRange(format!(
                "target density {alpha} is outside (0, 1)"
            )));
        }
        Ok(AperiodicConstruction {
            alpha,
            sequence: Arc::new(sequence),
            stages: Vec::new(),
        })
    }

    /// `a_i = α + (a_1 − α) / 2^(i−1)` for a rational `α`.
    pub fn geometric(alpha: Rational, a1: Rational) -> Result<Self> {
        let gap = &a1 - &alpha;
        let base = alpha.clone();
        Self::new(SlopeSpec::Rational(alpha), move |i| {
            let scale = Rational::new(BigInt::one(), BigInt::one() << (i - 1)).expect("non-zero");
            &base + &(&gap * &scale)
        })
    }

    /// Default first term `(1 + α) / 2`.
    pub fn default_first_term(alpha: &Rational) -> Rational {
        &(alpha + &Rational::one()) / &Rational::from_integer(2)
    }

    pub fn alpha(&self) -> &SlopeSpec {
        &self.alpha
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    fn checked_term(&self, i: usize) -> Result<Rational> {
        let a = (self.sequence)(i);
        if !a.is_positive() || a.cmp_ratio(1, 1) != Ordering::Less {
            return Err(Error::InvalidInput(format!(
                "a_{i} = {a} is outside (0, 1)"
            )));
        }
        if self.alpha.cmp_rational(&a) != Ordering::Less {
            return Err(Error::InvalidInput(format!(
                "a_{i} = {a} is not above {}",
                self.alpha
            )));
        }
        if let Some(prev) = self.stages.last() {
            if a >= prev.target {
                return Err(Error::InvalidInput(format!(
                    "sequence is not strictly decreasing at i = {i}: {a} >= {}",
                    prev.target
                )));
            }
        }
        Ok(a)
    }

    /// Materializes and returns the next stage.
    pub fn next_stage(&mut self) -> Result<&Stage> {
        let index = self.stages.len() + 1;
        let target = self.checked_term(index)?;
        let stage = match self.stages.last() {
            None => {
                let ones = (&target * &Rational::from_integer(10)).ceil();
                let ones = ones.to_usize().filter(|&o| o <= 10).expect("a_1 in (0, 1)");
                let mut bits = vec![1; ones];
                bits.resize(10, 0);
                Stage {
                    index,
                    word: FiniteWord::from_bits_unchecked(bits),
                    target,
                    multiplier: None,
                    zero_run: 10 - ones,
                }
            }
            Some(prev) => next_from(prev, index, target)?,
        };
        self.stages.push(stage);
        Ok(self.stages.last().unwrap())
    }

    /// Materializes stages until the newest one has at least `len` symbols.
    pub fn grow_to(&mut self, len: usize) -> Result<&Stage> {
        if len > MAX_MATERIALIZED {
            return Err(Error::Resource {
                requested: len,
                cap: MAX_MATERIALIZED,
            });
        }
        loop {
            let enough = self.stages.last().is_some_and(|s| s.word.len() >= len);
            if enough {
                return Ok(self.stages.last().unwrap());
            }
            self.next_stage()?;
        }
    }

    /// The limit word as a lazy stream.
    pub fn into_stream(self) -> WordStream {
        WordStream::new(AperiodicSource { construction: self })
    }
}

fn next_from(prev: &Stage, index: usize, target: Rational) -> Result<Stage> {
    let len = prev.word.len();
    let ones = prev.word.weight();
    // (|v|_1 − a·|v|) / a
    let slack =
        &(&Rational::from_integer(ones) - &(&target * &Rational::from_integer(len))) / &target;
    if !slack.is_positive() {
        return Err(Error::InvalidInput(format!(
            "stage {index}: a_{index} = {target} leaves no room for a longer zero run"
        )));
    }
    // Least k >= 2 with ⌊k·slack⌋ >= ℓ_{i−1} + 1, i.e. k >= (ℓ_{i−1} + 1) / slack.
    let needed = &Rational::from_integer(prev.zero_run + 1) / &slack;
    let multiplier = needed.ceil().max(BigInt::from(2));
    let zero_run = (&slack * &Rational::from_integer(multiplier.clone())).floor();
    debug_assert!(zero_run > BigInt::from(prev.zero_run));

    let too_big = || Error::Resource {
        requested: usize::MAX,
        cap: MAX_MATERIALIZED,
    };
    let multiplier = multiplier.to_u64().ok_or_else(too_big)?;
    let zero_run = zero_run.to_usize().ok_or_else(too_big)?;
    let head_len = (multiplier as usize).checked_mul(len).ok_or_else(too_big)?;
    let total = head_len.checked_add(zero_run).ok_or_else(too_big)?;
    if total > MAX_MATERIALIZED {
        return Err(Error::Resource {
            requested: total,
            cap: MAX_MATERIALIZED,
        });
    }

    let mut bits = flipext_stream(&prev.word)?.prefix(head_len)?.into_bits();
    bits.resize(total, 0);
    Ok(Stage {
        index,
        word: FiniteWord::from_bits_unchecked(bits),
        target,
        multiplier: Some(multiplier),
        zero_run,
    })
}

struct AperiodicSource {
    construction: AperiodicConstruction,
}

impl SymbolSource for AperiodicSource {
    fn extend(&mut self, emitted: &mut Vec<u8>, target: usize) -> Result<()> {
        let stage = self.construction.grow_to(target)?;
        emitted.extend_from_slice(&stage.word.bits()[emitted.len()..]);
        Ok(())
    }
}
