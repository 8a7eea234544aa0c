//! Coxeter-matrix surgery along a folding map, and balls in the building
//! that covers the original one.
//!
//! A chamber upstairs is a flip class of reduced galleries from a fixed base
//! chamber of `C'`. Galleries are stored by their type over `S` and the
//! chambers of `C'` they visit; a flip replaces a subgallery of type
//! `prod(s,t;m)` by the unique gallery of type `prod(t,s;m)` with the same
//! endpoints downstairs.

mod ball;
mod folding;
mod gallery;
mod verify;

pub use ball::{build_ball, BallOptions, CoveredBall, GalleryClass, DEFAULT_CLASS_CAP};
pub use folding::{flag_nerve_check, surgery, FlagNerveReport, FoldingData};
pub use gallery::{Cover, Gallery};
pub use verify::verify_cover;
