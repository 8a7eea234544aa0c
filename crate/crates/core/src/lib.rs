//! Exact computations with Coxeter groups, buildings, and the buildings
//! obtained as universal covers after replacing Coxeter-matrix entries by
//! infinity.

#![allow(clippy::needless_range_loop)]

pub mod chambers;
pub mod cover;
pub mod coxeter;
mod error;
pub mod io;
pub mod products;
pub mod simplicial;
mod verdict;

pub use error::{Error, Result};
pub use verdict::{Axiom, Verdict, Violation};
