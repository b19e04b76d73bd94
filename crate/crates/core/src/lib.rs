//! Finite strict double categories presented by identifier tables.
//!
//! The crate validates presentations against the double-category axioms,
//! computes horizontalizations and decorated horizontalizations, and builds
//! the globularily generated piece of a double category through its vertical
//! filtration. Double functors, their restrictions, and a small model of
//! bimodules over the two-element field round out the toolkit.
//!
//! Everything here is pure table manipulation and needs only `alloc`; file
//! formats and the command-line front end live in the `dblcat` crate.
//!
//! All identifier sets are kept in lexicographic token order, so indices,
//! reports, and witnesses are reproducible run to run.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bicat;
pub mod category;
pub mod double;
mod error;
pub mod findim;
pub mod functors;
pub mod gen;
pub mod gg;
mod ident;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
mod report;

pub use bicat::{DecoratedBicategory, Fin2Category, TwoCategoryPresentation};
pub use category::{CatFunctor, CategoryPresentation, FinCategory};
pub use double::{Boundary, DoublePresentation, FinDoubleCategory, SquareDecl};
pub use error::{Error, Result};
pub use functors::{DoubleFunctor, DoubleNaturalTransformation, FunctorPresentation};
pub use gg::{GammaAnalysis, WitnessTree};
pub use ident::Id;
pub use report::{ValidationReport, Violation};
