//! Complex matrix arithmetic and the Lie-theoretic primitives of `sl(n,C)`.

mod forms;
mod matrix;

pub use forms::{
    bracket, cartan_involution, ensure_in_s, inner_g, inner_s, killing_form, phi, MEMBERSHIP_TOL,
};
pub use matrix::SquareComplexMatrix;
