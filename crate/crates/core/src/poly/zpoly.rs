use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::{format_terms, parse_terms, LaurentPoly};
use crate::error::{Error, Result};

/// Ordinary integer polynomial in `z`, coefficients indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn one() -> Self {
        ZPoly::new([1])
    }

    /// `c * z^d`
    pub fn monomial(c: impl Into<BigInt>, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c.into();
        ZPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Result<usize> {
        if self.is_zero() {
            Err(Error::ZeroPolynomial)
        } else {
            Ok(self.coeffs.len() - 1)
        }
    }

    pub fn is_even_powered(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// Machine form `[c0,c1,...]`; `[]` is zero.
    pub fn to_machine(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    pub fn parse_machine(s: &str) -> Result<ZPoly> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(0, "expected '[c0,c1,...]'"))?;
        if inner.trim().is_empty() {
            return Ok(ZPoly::zero());
        }
        let mut coeffs = Vec::new();
        for part in inner.split(',') {
            coeffs.push(
                part.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::parse(0, format!("bad coefficient '{part}'")))?,
            );
        }
        if coeffs.last().is_some_and(Zero::is_zero) {
            return Err(Error::parse(0, "trailing zero coefficient"));
        }
        Ok(ZPoly::new(coeffs))
    }

    pub fn parse_text(s: &str) -> Result<ZPoly> {
        let terms = parse_terms(s, 'z')?;
        let mut out = ZPoly::zero();
        for (e, c) in terms {
            if e < 0 {
                return Err(Error::parse(0, "negative power of z"));
            }
            out = &out + &ZPoly::monomial(c, e as usize);
        }
        Ok(out)
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (d as i64, c));
        format_terms(f, terms, 'z')
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;

    fn add(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)))
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;

    fn neg(self) -> ZPoly {
        ZPoly::new(self.coeffs.iter().map(|c| -c))
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;

    fn sub(self, rhs: &ZPoly) -> ZPoly {
        self + &(-rhs)
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;

    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }
}

/// `x - x^-1` as a Laurent polynomial.
fn z_in_x() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1), (-1, -1)])
}

/// Substitutes `z = x - x^-1`.
pub fn substitute_z(c: &ZPoly) -> LaurentPoly {
    let z = z_in_x();
    let mut acc = LaurentPoly::zero();
    for coeff in c.coeffs.iter().rev() {
        acc = &(&acc * &z) + &LaurentPoly::constant(coeff.clone());
    }
    acc
}

/// Inverse of [`substitute_z`]: writes a Laurent polynomial in `x` as a
/// polynomial in `z = x - x^-1`, peeling off the top exponent each step.
pub fn laurent_to_z(p: &LaurentPoly) -> Result<ZPoly> {
    let z = z_in_x();
    let mut rest = p.clone();
    let mut out = ZPoly::zero();
    while let Some(top) = rest.max_exp() {
        if top < 0 {
            return Err(Error::NotConwayForm);
        }
        let c = rest.coeff(top);
        rest = &rest - &z.pow(top as u32).scale(&c);
        out = &out + &ZPoly::monomial(c, top as usize);
    }
    Ok(out)
}

/// `∇(t - t^-1) = Δ(t^2)`: substitutes and halves every exponent.
pub fn conway_to_alexander(c: &ZPoly) -> Result<LaurentPoly> {
    substitute_z(c).halve_exponents()
}

/// Inverse of [`conway_to_alexander`] on symmetric inputs.
pub fn alexander_to_conway(delta: &LaurentPoly) -> Result<ZPoly> {
    laurent_to_z(&delta.scale_exponents(2))
}

/// The constant term, as a convenience for knot sanity checks.
pub fn constant_is_one(c: &ZPoly) -> bool {
    c.coeff(0).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn conway_to_alexander_examples() {
        assert_eq!(
            conway_to_alexander(&ZPoly::new([1, 0, 1])).unwrap(),
            lp(&[(1, 1), (0, -1), (-1, 1)])
        );
        assert_eq!(conway_to_alexander(&ZPoly::one()).unwrap(), LaurentPoly::one());
        assert_eq!(
            conway_to_alexander(&ZPoly::new([1, 0, -1])).unwrap(),
            lp(&[(1, -1), (0, 3), (-1, -1)])
        );
    }

    #[test]
    fn odd_power_rejected() {
        assert_eq!(conway_to_alexander(&ZPoly::new([1, 1])), Err(Error::OddExponent));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(ZPoly::new([1, 0, 1]).degree().unwrap(), 2);
        assert_eq!(ZPoly::one().degree().unwrap(), 0);
        assert_eq!(ZPoly::zero().degree(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn alexander_to_conway_inverts() {
        let d = lp(&[(2, 2), (1, -3), (0, 3), (-1, -3), (-2, 2)]);
        let c = alexander_to_conway(&d).unwrap();
        assert_eq!(c, ZPoly::new([1, 0, 5, 0, 2]));
        assert_eq!(conway_to_alexander(&c).unwrap(), d);
    }

    #[test]
    fn laurent_to_z_rejects_non_conway() {
        assert_eq!(laurent_to_z(&lp(&[(-1, 1)])), Err(Error::NotConwayForm));
    }

    #[test]
    fn forms() {
        let c = ZPoly::new([1, 0, -1]);
        assert_eq!(c.to_string(), "1 - z^2");
        assert_eq!(c.to_machine(), "[1,0,-1]");
        assert_eq!(ZPoly::parse_machine("[1,0,-1]").unwrap(), c);
        assert_eq!(ZPoly::parse_text("1 + z^2").unwrap(), ZPoly::new([1, 0, 1]));
        assert!(ZPoly::parse_machine("[1,0]").is_err());
    }
}
