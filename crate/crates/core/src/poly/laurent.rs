use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer Laurent polynomial in one variable.
///
/// Stored densely from the lowest exponent; both extreme coefficients are
/// nonzero, and the zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^e`
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_dense(e, vec![c.into()])
    }

    /// The variable itself, `t`.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        terms.sort_by_key(|(e, _)| *e);
        let low = terms[0].0;
        let high = terms[terms.len() - 1].0;
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    fn from_dense(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly {
            low: low + lead as i64,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Units of `Z[t, t^-1]` are `±t^k`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.low {
            return BigInt::zero();
        }
        self.coeffs.get((e - self.low) as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// `maxExp - minExp`; an error for the zero polynomial.
    pub fn span(&self) -> Result<i64> {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => Ok(hi - lo),
            _ => Err(Error::ZeroPolynomial),
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        assert!(
            self.low >= 0 || !x.is_zero(),
            "negative exponent evaluated at zero"
        );
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        if self.low >= 0 {
            acc * x.pow(self.low as u32)
        } else {
            // x = ±1 is the only case used; general x must divide exactly
            let d = x.pow((-self.low) as u32);
            let (q, r) = acc.div_rem(&d);
            assert!(r.is_zero(), "evaluation leaves a fraction");
            q
        }
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_dense(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `P(t^-1)`
    pub fn reflect(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPoly { low: -hi, coeffs }
            }
        }
    }

    /// Coefficient of `t^e` equals coefficient of `t^-e`.
    pub fn is_symmetric(&self) -> bool {
        *self == self.reflect()
    }

    /// `P(t^k)`
    pub fn scale_exponents(&self, k: i64) -> Self {
        assert!(k != 0);
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// `P(t^(1/2))`, defined when every exponent is even.
    pub fn halve_exponents(&self) -> Result<Self> {
        if self.terms().any(|(e, _)| e % 2 != 0) {
            return Err(Error::OddExponent);
        }
        Ok(Self::from_terms(self.terms().map(|(e, c)| (e / 2, c.clone()))))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient in `Z[t, t^-1]`, or `None` when `divisor` does not
    /// divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.coeffs.len() == 1 {
            let d = &divisor.coeffs[0];
            let mut out = Vec::with_capacity(self.coeffs.len());
            for c in &self.coeffs {
                let (q, r) = c.div_rem(d);
                if !r.is_zero() {
                    return None;
                }
                out.push(q);
            }
            return Some(Self::from_dense(self.low - divisor.low, out));
        }
        // Both dense vectors start with a nonzero constant term, so the
        // quotient is an honest polynomial; divide from the top.
        let n = self.coeffs.len();
        let m = divisor.coeffs.len();
        if n < m {
            return None;
        }
        let lead = &divisor.coeffs[m - 1];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let top = &rem[k + m - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(self.low - divisor.low, quot))
    }

    /// Machine form: `e:c` pairs sorted by exponent, comma separated; `0` for
    /// the zero polynomial.
    pub fn to_machine(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms()
            .map(|(e, c)| format!("{e}:{c}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn parse_machine(s: &str) -> Result<LaurentPoly> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        let mut offset = 0;
        for part in s.split(',') {
            let (e, c) = part
                .split_once(':')
                .ok_or_else(|| Error::parse(offset, format!("expected 'exp:coeff', found '{part}'")))?;
            let e: i64 = e.trim().parse().map_err(|_| Error::parse(offset, format!("bad exponent '{e}'")))?;
            let c: BigInt = c.trim().parse().map_err(|_| Error::parse(offset, format!("bad coefficient '{c}'")))?;
            if c.is_zero() {
                return Err(Error::parse(offset, "zero coefficient in machine form"));
            }
            terms.push((e, c));
            offset += part.len() + 1;
        }
        if terms.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::parse(0, "exponents must be strictly increasing"));
        }
        Ok(Self::from_terms(terms))
    }

    /// Parses the text form produced by `Display`, e.g. `-t^-1 + 3 - t`.
    pub fn parse_text(s: &str) -> Result<LaurentPoly> {
        parse_terms(s, 't').map(Self::from_terms)
    }
}

/// Shared parser for `c*v^e` sums in either variable.
pub(crate) fn parse_terms(s: &str, var: char) -> Result<Vec<(i64, BigInt)>> {
    let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
    let pos = |i: usize| chars.get(i).map(|&(p, _)| p).unwrap_or(s.len());
    let mut i = 0;
    let mut terms = Vec::new();
    if chars.is_empty() {
        return Err(Error::parse(0, "empty polynomial"));
    }
    while i < chars.len() {
        let mut sign = BigInt::one();
        match chars[i].1 {
            '+' => i += 1,
            '-' => {
                sign = -sign;
                i += 1
            }
            _ if !terms.is_empty() => return Err(Error::parse(pos(i), "expected '+' or '-'")),
            _ => {}
        }
        let start = i;
        while i < chars.len() && chars[i].1.is_ascii_digit() {
            i += 1;
        }
        let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
        let coeff = if digits.is_empty() {
            None
        } else {
            Some(digits.parse::<BigInt>().map_err(|_| Error::parse(pos(start), "bad coefficient"))?)
        };
        if i < chars.len() && chars[i].1 == '*' {
            i += 1;
        }
        let exp = if i < chars.len() && chars[i].1 == var {
            i += 1;
            if i < chars.len() && chars[i].1 == '^' {
                i += 1;
                let es = i;
                if i < chars.len() && chars[i].1 == '-' {
                    i += 1;
                }
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[es..i].iter().map(|&(_, c)| c).collect();
                text.parse::<i64>().map_err(|_| Error::parse(pos(es), format!("bad exponent '{text}'")))?
            } else {
                1
            }
        } else {
            if coeff.is_none() {
                return Err(Error::parse(pos(i), "expected coefficient or variable"));
            }
            0
        };
        terms.push((exp, sign * coeff.unwrap_or_else(BigInt::one)));
    }
    Ok(terms)
}

pub(crate) fn format_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, &'a BigInt)>,
    var: char,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        let show_coeff = e == 0 || !mag.is_one();
        if show_coeff {
            write!(f, "{mag}")?;
        }
        match e {
            0 => {}
            1 => write!(f, "{var}")?,
            _ => write!(f, "{var}^{e}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, self.terms(), 't')
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.max_exp().unwrap().max(rhs.max_exp().unwrap());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (src, off) in [(self, self.low - low), (rhs, rhs.low - low)] {
            for (i, c) in src.coeffs.iter().enumerate() {
                coeffs[i + off as usize] += c;
            }
        }
        LaurentPoly::from_dense(low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Returns the unit multiple `±t^k · p` that is symmetric under
/// `t -> t^-1` and takes the value `+1` at `t = 1`.
pub fn normalize_alexander(p: &LaurentPoly) -> Result<LaurentPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let at_one = p.eval_one();
    if !at_one.abs().is_one() {
        return Err(Error::NotNormalizable(format!("value {at_one} at t = 1")));
    }
    let (lo, hi) = (p.min_exp().unwrap(), p.max_exp().unwrap());
    if (lo + hi) % 2 != 0 {
        return Err(Error::NotNormalizable("odd span".into()));
    }
    let shifted = p.shift(-(lo + hi) / 2);
    if !shifted.is_symmetric() {
        return Err(Error::NotNormalizable(format!("{p} has no symmetric representative")));
    }
    Ok(if at_one.is_negative() { -shifted } else { shifted })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn ring_examples() {
        let a = lp(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(&a * &LaurentPoly::one(), a);
        let b = &lp(&[(1, 1), (0, -1)]) * &lp(&[(-1, 1), (0, -1)]);
        assert_eq!(b, lp(&[(1, -1), (0, 2), (-1, -1)]));
        let c = &lp(&[(2, 1), (0, 1)]) * &lp(&[(1, 1), (0, 1)]);
        assert_eq!(c.span().unwrap(), 3);
    }

    #[test]
    fn span_examples() {
        assert_eq!(lp(&[(1, 1), (0, -1), (-1, 1)]).span().unwrap(), 2);
        assert_eq!(LaurentPoly::one().span().unwrap(), 0);
        assert_eq!(LaurentPoly::zero().span(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn normalize_examples() {
        let trefoil = lp(&[(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(normalize_alexander(&lp(&[(2, 1), (1, -1), (0, 1)])).unwrap(), trefoil);
        let fig8 = lp(&[(1, -1), (0, 3), (-1, -1)]);
        assert_eq!(normalize_alexander(&fig8).unwrap(), fig8);
        assert_eq!(normalize_alexander(&LaurentPoly::one()).unwrap(), LaurentPoly::one());
        // sign and shift both fixed
        assert_eq!(normalize_alexander(&(-&trefoil.shift(7))).unwrap(), trefoil);
    }

    #[test]
    fn normalize_rejects() {
        assert!(matches!(normalize_alexander(&lp(&[(0, 3)])), Err(Error::NotNormalizable(_))));
        assert!(matches!(
            normalize_alexander(&lp(&[(0, 2), (1, -1)])),
            Err(Error::NotNormalizable(_))
        ));
        // value 1 at t = 1 but not symmetric
        assert!(matches!(
            normalize_alexander(&lp(&[(0, 2), (1, 1), (2, -2)])),
            Err(Error::NotNormalizable(_))
        ));
        assert_eq!(normalize_alexander(&LaurentPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn exact_division() {
        let a = lp(&[(0, 1), (1, -1)]);
        let b = lp(&[(-3, 2), (0, 5), (1, 1)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert!(lp(&[(0, 1), (1, 1)]).div_exact(&lp(&[(0, 2)])).is_none());
        assert!(lp(&[(0, 1), (2, 1)]).div_exact(&lp(&[(0, 1), (1, 1)])).is_none());
    }

    #[test]
    fn text_and_machine_forms() {
        let p = lp(&[(-1, -1), (0, 3), (1, -1)]);
        assert_eq!(p.to_string(), "-t^-1 + 3 - t");
        assert_eq!(LaurentPoly::parse_text(&p.to_string()).unwrap(), p);
        assert_eq!(p.to_machine(), "-1:-1,0:3,1:-1");
        assert_eq!(LaurentPoly::parse_machine(&p.to_machine()).unwrap(), p);
        assert_eq!(LaurentPoly::parse_text("t^-1 - 1 + t").unwrap(), lp(&[(-1, 1), (0, -1), (1, 1)]));
        assert_eq!(LaurentPoly::parse_text("2*t^3 - 5").unwrap(), lp(&[(3, 2), (0, -5)]));
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert!(LaurentPoly::parse_machine("1:0").is_err());
        assert!(LaurentPoly::parse_text("t t").is_err());
    }

    #[test]
    fn evaluation() {
        let p = lp(&[(-1, -1), (0, 3), (1, -1)]);
        assert_eq!(p.eval_one(), BigInt::from(1));
        assert_eq!(p.eval(&BigInt::from(-1)), BigInt::from(5));
        assert_eq!(lp(&[(2, 1), (0, 1)]).eval(&BigInt::from(3)), BigInt::from(10));
    }
}
