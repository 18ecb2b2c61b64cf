//! Planar diagrams of two-bridge knots and their Alexander/Conway
//! polynomials, computed by Fox calculus and independently from a Seifert
//! matrix.

pub mod convention;
mod diagram;
mod fox;
mod seifert;

pub use diagram::{diagram_from_word, tangle_closure, Crossing, Diagram};
pub use fox::{alexander_matrix, alexander_via_fox, fox_row};
pub use seifert::{
    alexander_via_seifert, conway_via_seifert, even_form, seifert_from_even, seifert_polynomials,
    SeifertMatrix,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::conway::{classify, evaluate, simple_expansion, ConwayWord, MirrorMode, TwoBridgeClass};
use crate::error::{Error, Result};
use crate::poly::{conway_to_alexander, LaurentPoly, ZPoly};

/// Polynomials of one knot from both routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    /// `None` for the unknot.
    pub class: Option<TwoBridgeClass>,
    pub conway: ZPoly,
    pub alexander: LaurentPoly,
    pub fox_alexander: LaurentPoly,
}

impl CrossCheck {
    pub fn routes_agree(&self) -> bool {
        self.fox_alexander == self.alexander
    }

    /// `∇(t - t^-1) = Δ(t^2)`.
    pub fn identity_holds(&self) -> bool {
        conway_to_alexander(&self.conway).is_ok_and(|d| d == self.alexander)
    }

    pub fn sanity_holds(&self) -> bool {
        knot_polynomial_sane(&self.conway, &self.alexander)
            && knot_polynomial_sane(&self.conway, &self.fox_alexander)
    }

    pub fn conway_degree(&self) -> usize {
        self.conway.degree().unwrap_or(0)
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.routes_agree() {
            Some("Fox and Seifert routes disagree")
        } else if !self.identity_holds() {
            Some("conway_to_alexander(∇) differs from Δ")
        } else if !self.sanity_holds() {
            Some("knot polynomial sanity check failed")
        } else {
            None
        }
    }
}

/// `Δ(1) = ±1`, `Δ` symmetric, `∇` even-powered with constant term 1.
pub fn knot_polynomial_sane(conway: &ZPoly, alexander: &LaurentPoly) -> bool {
    alexander.eval_one().abs().is_one()
        && alexander.is_symmetric()
        && conway.is_even_powered()
        && conway.coeff(0).is_one()
}

/// Both routes for the knot named by `word`; the Fox route runs on the
/// diagram of `word` itself.
pub fn cross_check_word(word: &ConwayWord) -> Result<CrossCheck> {
    let fox_alexander = alexander_via_fox(&diagram_from_word(word)?)?;
    let value = evaluate(word);
    if value.numerator().abs().is_one() {
        return Ok(CrossCheck {
            class: None,
            conway: ZPoly::one(),
            alexander: LaurentPoly::one(),
            fox_alexander,
        });
    }
    let class = classify(word, MirrorMode::Sensitive)?;
    let (conway, alexander) = seifert_polynomials(&class)?;
    Ok(CrossCheck {
        class: Some(class),
        conway,
        alexander,
        fox_alexander,
    })
}

/// Both routes for a knot class; the Fox route runs on the diagram of the
/// all-positive expansion of `p/q`.
pub fn cross_check_class(class: &TwoBridgeClass) -> Result<CrossCheck> {
    if !class.is_knot() {
        return Err(Error::NotKnot(class.p().to_string()));
    }
    let word = simple_expansion(class.p(), class.q());
    let fox_alexander = alexander_via_fox(&diagram_from_word(&word)?)?;
    let (conway, alexander) = seifert_polynomials(class)?;
    Ok(CrossCheck {
        class: Some(class.clone()),
        conway,
        alexander,
        fox_alexander,
    })
}

/// Every two-bridge knot class with `3 <= p <= max_p`, one representative
/// per oriented class, sorted by `(p, q)`.
pub fn knot_classes(max_p: u64) -> Vec<TwoBridgeClass> {
    let mut out = Vec::new();
    for p in (3..=max_p).step_by(2) {
        for q in 1..p {
            if p.gcd(&q) != 1 {
                continue;
            }
            let class = TwoBridgeClass::from_pq(p, q, MirrorMode::Sensitive).expect("coprime");
            if *class.q() == BigInt::from(q) {
                out.push(class);
            }
        }
    }
    out
}

/// Cross-checks every knot class with `p <= max_p` in parallel; results are
/// in class order.
pub fn route_sweep(max_p: u64) -> Vec<(TwoBridgeClass, Result<CrossCheck>)> {
    knot_classes(max_p)
        .into_par_iter()
        .map(|c| {
            let r = cross_check_class(&c);
            (c, r)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conway::Convention;

    #[test]
    fn class_enumeration() {
        // one class per {q, q^-1} pair: p = 5 has q in {1, 2, 3, 4}, 2*3 = 6 = 1 mod 5
        let five: Vec<String> = knot_classes(5).iter().map(|c| c.to_string()).collect();
        assert_eq!(five, ["3/1", "3/2", "5/1", "5/2", "5/4"]);
    }

    #[test]
    fn small_sweep_agrees() {
        for (c, r) in route_sweep(25) {
            let r = r.unwrap();
            assert_eq!(r.first_failure(), None, "{c}");
        }
    }

    #[test]
    fn unknot_word() {
        let w = ConwayWord::new(vec![1], Convention::Plus).unwrap();
        let r = cross_check_word(&w).unwrap();
        assert_eq!(r.class, None);
        assert_eq!(r.conway, ZPoly::one());
        assert!(r.routes_agree());
    }
}
