//! Two-bridge knots in Conway notation: classification, Alexander and Conway
//! polynomials by two independent routes, unknotting-number-one families,
//! and the formal basic-class algebra of knot surgery.

pub mod conway;
pub mod error;
pub mod km;
pub mod knot;
pub mod poly;
pub mod sw;

pub use error::{Error, Result};
