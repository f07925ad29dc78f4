//! Prefix normal words over `{0, 1}`.
//!
//! * [`word`], [`rational`], [`slope`], [`stream`]: finite words, exact
//!   arithmetic and lazily materialized infinite words.
//! * [`generators`]: Fibonacci, Thue–Morse, paperfolding, Champernowne,
//!   mechanical words with exact slopes, and the extension operators.
//! * [`profile`] and [`analysis`]: max/min 1s per length, prefix normality,
//!   prefix normal forms, abelian complexity, minimum density, lex order.
//! * [`jumbled`]: an indexed binary jumbled pattern matching structure.

pub mod analysis;
pub mod error;
pub mod generators;
pub mod jumbled;
pub mod profile;
pub mod rational;
pub mod slope;
pub mod stream;
pub mod word;

pub use error::{Error, Result};
pub use jumbled::JumbledIndex;
pub use profile::{compute_profile, PrefixProfile};
pub use rational::Rational;
pub use slope::{QuadraticIrrational, SlopeSpec};
pub use stream::{SymbolSource, WordStream, MAX_MATERIALIZED};
pub use word::{FiniteWord, LexOrdering, ParikhVector};
