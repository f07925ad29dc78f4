//! Predicates and measures over finite words and stream prefixes.

pub mod density;
pub mod forms;
pub mod lex;
pub mod normality;

pub use density::{min_density, min_density_up, MinDensityReport, UltimatelyPeriodicWord};
pub use forms::{abelian_complexity, is_c_balanced, parikh_set, pnf0, pnf1, prepend_ones_bound};
pub use lex::{is_prenecklace_prefix, max_word, min_word, FactorExtremes};
pub use normality::{
    check_stream_prefix_normal, empirical_min_prepend, is_prefix_normal, is_prefix_normal_0,
    is_prefix_normal_1, Normality, PNViolation,
};
