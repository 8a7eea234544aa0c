//! Coxeter matrices, words, Tits rewriting, and spherical subsets.

mod classify;
mod matrix;
mod rewrite;
mod spherical;
mod word;

pub use classify::FiniteType;
pub use matrix::{CoxeterMatrix, Order, DEFAULT_STEP_BUDGET};
pub use spherical::{subset_label, SphericalPoset};
pub use word::{prod_word, GenSet, Word};
