//! Algebras, bimodules and equivariant morphisms over the two-element
//! field: relative tensor products, the 2-subcyclic predicate, and small
//! tagged double categories of such data.

mod algebra;
mod bimodule;
pub mod fragments;
pub mod linalg;
mod subcyclic;
mod tensor;

pub use algebra::F2Algebra;
pub use bimodule::{equivariant_maps, EquivariantMorphism, F2Bimodule};
pub use fragments::{check_prop_6_4_forward, AlgFragment};
pub use linalg::{BitMatrix, Subspace};
pub use subcyclic::{check_tensor_closure, is_2_subcyclic, subcyclic_morphisms, ClosureReport};
pub use tensor::{tensor_bimodules, tensor_morphisms, TensorProduct};
