//! Lazily materialized infinite words.
//!
//! A [`WordStream`] owns a [`SymbolSource`] and the symbols produced so far.
//! Asking for a longer prefix only computes the missing tail, so repeated and
//! nested `prefix` calls always agree.

use crate::error::{Error, Result};
use crate::word::FiniteWord;

/// Upper bound on the number of symbols any stream will materialize.
pub const MAX_MATERIALIZED: usize = 1 << 26;

/// Producer of an infinite binary word.
pub trait SymbolSource: Send {
    /// Appends symbols to `emitted` until `emitted.len() >= target`.
    ///
    /// `emitted` holds exactly the symbols this source has produced so far, in
    /// order. Sources that grow in blocks may overshoot `target`.
    fn extend(&mut self, emitted: &mut Vec<u8>, target: usize) -> Result<()>;
}

/// An infinite binary word with prefix materialization on demand.
pub struct WordStream {
    source: Box<dyn SymbolSource>,
    emitted: Vec<u8>,
}

impl WordStream {
    pub fn new(source: impl SymbolSource + 'static) -> Self {
        WordStream {
            source: Box::new(source),
            emitted: Vec::new(),
        }
    }

    /// Stream whose `i`-th symbol (1-based) is `symbol(i)`.
    pub fn from_fn(symbol: impl Fn(u64) -> u8 + Send + 'static) -> Self {
        WordStream::new(IndexedSource { symbol })
    }

    /// The stream `head · self`.
    pub fn prepend(self, head: FiniteWord) -> WordStream {
        WordStream::new(Prepended { head, tail: self })
    }

    /// The stream `1^k · self`.
    pub fn prepend_ones(self, k: usize) -> WordStream {
        self.prepend(FiniteWord::ones(k))
    }

    /// Number of symbols materialized so far.
    pub fn produced(&self) -> usize {
        self.emitted.len()
    }

    /// The first `n` symbols.
    pub fn prefix(&mut self, n: usize) -> Result<FiniteWord> {
        self.ensure(n)?;
        Ok(FiniteWord::from_bits_unchecked(self.emitted[..n].to_vec()))
    }

    /// Borrowing variant of [`WordStream::prefix`].
    pub fn prefix_bits(&mut self, n: usize) -> Result<&[u8]> {
        self.ensure(n)?;
        Ok(&self.emitted[..n])
    }

    fn ensure(&mut self, n: usize) -> Result<()> {
        if n > MAX_MATERIALIZED {
            return Err(Error::Resource {
                requested: n,
                cap: MAX_MATERIALIZED,
            });
        }
        if self.emitted.len() < n {
            self.source.extend(&mut self.emitted, n)?;
            if self.emitted.len() < n {
                return Err(Error::InvalidInput(format!(
                    "source stopped after {} symbols",
                    self.emitted.len()
                )));
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for WordStream {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WordStream")
            .field("produced", &self.emitted.len())
            .finish()
    }
}

struct IndexedSource<F> {
    symbol: F,
}

impl<F: Fn(u64) -> u8 + Send> SymbolSource for IndexedSource<F> {
    fn extend(&mut self, emitted: &mut Vec<u8>, target: usize) -> Result<()> {
        while emitted.len() < target {
            let i = emitted.len() as u64 + 1;
            emitted.push((self.symbol)(i));
        }
        Ok(())
    }
}

struct Prepended {
    head: FiniteWord,
    tail: WordStream,
}

impl SymbolSource for Prepended {
    fn extend(&mut self, emitted: &mut Vec<u8>, target: usize) -> Result<()> {
        if emitted.is_empty() {
            emitted.extend_from_slice(self.head.bits());
        }
        if emitted.len() < target {
            let need = target - self.head.len();
            let tail = self.tail.prefix_bits(need)?;
            let have = emitted.len() - self.head.len();
            emitted.extend_from_slice(&tail[have..]);
        }
        Ok(())
    }
}
