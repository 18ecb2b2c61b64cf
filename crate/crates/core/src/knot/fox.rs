use super::diagram::{Crossing, Diagram};
use crate::error::{Error, Result};
use crate::poly::{normalize_alexander, LaurentMatrix, LaurentPoly};

/// Abelianized Fox derivatives of one Wirtinger relation, as
/// `(over, under_in, under_out)` entries.
///
/// Positive crossings use `x_out = x_over x_in x_over^-1`, negative ones the
/// inverse conjugation; after multiplying by a unit the two rows differ only
/// by exchanging the under-arc entries.
pub fn fox_row(c: &Crossing) -> [LaurentPoly; 3] {
    let one_minus_t = LaurentPoly::from_terms([(0, 1), (1, -1)]);
    let t = LaurentPoly::var();
    let minus_one = LaurentPoly::constant(-1);
    if c.sign > 0 {
        [one_minus_t, t, minus_one]
    } else {
        [one_minus_t, minus_one, t]
    }
}

/// The full `n x n` Alexander matrix of the Wirtinger presentation.
pub fn alexander_matrix(d: &Diagram) -> LaurentMatrix {
    let n = d.arcs();
    let mut m = LaurentMatrix::zeros(n);
    for (row, c) in d.crossings().iter().enumerate() {
        let [over, under_in, under_out] = fox_row(c);
        m.add_to(row, c.over, &over);
        m.add_to(row, c.under_in, &under_in);
        m.add_to(row, c.under_out, &under_out);
    }
    m
}

/// Alexander polynomial from the Fox Jacobian with the first row and column
/// deleted, normalized.
pub fn alexander_via_fox(d: &Diagram) -> Result<LaurentPoly> {
    if d.components() != 1 {
        return Err(Error::MultiComponent(d.components()));
    }
    if d.crossing_count() == 0 {
        return Ok(LaurentPoly::one());
    }
    let det = alexander_matrix(d).minor(0, 0).determinant();
    normalize_alexander(&det)
}
