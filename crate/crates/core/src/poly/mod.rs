//! Exact integer Laurent polynomials in `t`, ordinary polynomials in `z`,
//! the Conway/Alexander substitutions, and determinants over `Z[t, t^-1]`.

mod laurent;
mod matrix;
mod zpoly;

pub use laurent::{normalize_alexander, LaurentPoly};
pub use matrix::{bareiss, integer_determinant, LaurentMatrix};
pub use zpoly::{
    alexander_to_conway, constant_is_one, conway_to_alexander, laurent_to_z, substitute_z, ZPoly,
};
