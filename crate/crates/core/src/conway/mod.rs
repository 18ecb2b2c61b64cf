//! Conway words, continued-fraction evaluation and the rational
//! classification of two-bridge knots.

mod class;
mod fraction;
mod word;

pub use class::{classify, equivalent, mod_inverse, simple_expansion, MirrorMode, TwoBridgeClass};
pub use fraction::Fraction;
pub use word::{collapse_zeros, evaluate, mirror, Convention, ConwayWord};
