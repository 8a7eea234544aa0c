//! Finite simplicial complexes, posets, order complexes, and integer homology.

mod complex;
mod davis;
mod homology;
mod poset;
mod punctured;
pub mod snf;

pub use complex::SimplicialComplex;
pub use davis::{davis_chamber, davis_chamber_of, MirroredComplex};
pub use homology::{reduced_homology, DegreeHomology, HomologyReport};
pub use poset::Poset;
pub use punctured::{punctured_check, PuncturedReport, PuncturedWitness};
