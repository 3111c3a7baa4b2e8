//! Polynomial vector fields, Lie brackets, closure of a 10-element basis into
//! structure constants, and the parity / time-reversal involutions.

mod algebra;
mod field;

pub use algebra::{
    apply_involution, closure, is_automorphism, jacobi_check, jacobi_fields, jacobi_violation,
    rotations_close_as_so3, AlgebraPresentation, ClosureError, Involution, InvolutionKind, Slot,
    StructureConstants, DIM, SLOT_NAMES,
};
pub use field::{combine, lie_bracket, VectorField};
