//! Producers of infinite binary words.

pub mod aperiodic;
pub mod builtin;
pub mod classic;
pub mod flipext;
pub mod mechanical;

pub use aperiodic::{AperiodicConstruction, Stage};
pub use builtin::{Builtin, BuiltinKind};
pub use classic::{
    champernowne, champernowne_stream, fibonacci_stream, morphic_fixpoint, morphic_stream,
    paperfolding, paperfolding_stream, thue_morse_stream, MorphismSpec,
};
pub use flipext::{flipext, flipext_stream, lazy_alpha_flipext, lazy_alpha_flipext_stream};
pub use mechanical::{
    characteristic_stream, characteristic_word, mechanical_lower, mechanical_stream,
    mechanical_upper, Rounding,
};
