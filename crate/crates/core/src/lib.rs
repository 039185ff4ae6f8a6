//! C-numerical and α-numerical ranges of operators in tracial von Neumann
//! algebras.
//!
//! An operator is described by a [`spectral::SpectralModel`]: a dense matrix,
//! a normal operator with finitely many atoms, or one of the named operators
//! in [`catalog`]. The range is recovered from its supporting function
//! ([`engine::compute_range`]), and [`oracle`] supplies independent
//! Monte-Carlo and brute-force ground truth at matrix scale.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod catalog;
pub mod cli;
pub mod eigfun;
pub mod engine;
pub mod error;
pub mod geometry;
pub mod matrix;
pub mod oracle;
pub mod spectral;

pub use eigfun::StepFunction;
pub use engine::{compute_range, RangeReport, WeightSpec};
pub use error::{Error, Result};
pub use geometry::ConvexRegion;
pub use spectral::{Atom, NamedModel, SpectralModel};
