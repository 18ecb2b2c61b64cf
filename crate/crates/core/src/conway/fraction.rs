use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An extended rational number: either `num/den` in lowest terms with
/// `den > 0`, or the formal value ∞ (stored as `1/0`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: BigInt,
    den: BigInt,
}

impl Fraction {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Self::infinity();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Fraction { num, den }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Fraction {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn infinity() -> Self {
        Fraction {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// `1/x`, with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> Self {
        if self.is_infinite() {
            return Fraction::integer(0);
        }
        Fraction::new(self.den.clone(), self.num.clone())
    }

    pub fn neg(&self) -> Self {
        if self.is_infinite() {
            return self.clone();
        }
        Fraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// `a + x`; `a + ∞ = ∞`.
    pub fn add_integer(&self, a: &BigInt) -> Self {
        if self.is_infinite() {
            return self.clone();
        }
        Fraction {
            num: &self.num + a * &self.den,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "1/0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let f = Fraction::new(6, -4);
        assert_eq!(f.numerator(), &BigInt::from(-3));
        assert_eq!(f.denominator(), &BigInt::from(2));
    }

    #[test]
    fn infinity_arithmetic() {
        let inf = Fraction::infinity();
        assert!(inf.add_integer(&BigInt::from(5)).is_infinite());
        assert_eq!(inf.recip(), Fraction::integer(0));
        assert!(Fraction::integer(0).recip().is_infinite());
        assert!(Fraction::new(-7, 0).is_infinite());
    }
}
