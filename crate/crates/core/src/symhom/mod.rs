//! Exact integer symplectic linear algebra on the homology of a punctured
//! surface: the lattice and its intersection form, twist transvections, and
//! completion of partial involutions.

mod completion;
pub mod intlin;
mod lattice;
mod matrix;

pub use completion::complete_partial_involution;
pub use lattice::{is_involution, make_lattice, HClass, HomologyLattice};
pub use matrix::IntMatrix;
