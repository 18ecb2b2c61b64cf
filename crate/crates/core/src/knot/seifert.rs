use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::conway::{classify, Convention, ConwayWord, Fraction, MirrorMode, TwoBridgeClass};
use crate::error::{Error, Result};
use crate::poly::{integer_determinant, laurent_to_z, normalize_alexander, LaurentMatrix, LaurentPoly, ZPoly};

/// Seifert matrix of the linear plumbing of twisted bands read off an
/// all-even word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("Seifert matrix must be square".into()));
        }
        Ok(SeifertMatrix { entries })
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// `det(V - V^T)`; ±1 for a Seifert surface of a knot.
    pub fn intersection_determinant(&self) -> BigInt {
        let n = self.dim();
        let skew: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| self.entries[i][j] - self.entries[j][i]).collect())
            .collect();
        integer_determinant(&skew)
    }

    /// `a V + b V^T` with Laurent scalars.
    fn pencil(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentMatrix {
        let n = self.dim();
        let mut m = LaurentMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let v = self.entries[i][j];
                let vt = self.entries[j][i];
                if v == 0 && vt == 0 {
                    continue;
                }
                let entry = &a.scale(&v.into()) + &b.scale(&vt.into());
                m.set(i, j, entry);
            }
        }
        m
    }
}

/// An all-even word of even length for a knot class: the continued fraction
/// of `p/q` with `q` taken even, using even partial quotients under the
/// minus rule, then rewritten under `convention`.
pub fn even_form(class: &TwoBridgeClass, convention: Convention) -> Result<ConwayWord> {
    let p = class.p().clone();
    if !class.is_knot() {
        return Err(Error::NotKnot(p.to_string()));
    }
    let q = if class.q().is_even() {
        class.q().clone()
    } else {
        class.q() - &p
    };
    let limit = p.to_u64().unwrap_or(u64::MAX);
    let mut x = Fraction::new(p.clone(), q);
    let mut entries = Vec::new();
    let mut steps = 0u64;
    loop {
        steps += 1;
        if steps > limit {
            return Err(Error::NonTerminating(format!("even expansion of {class}")));
        }
        let (n, d) = (x.numerator().clone(), x.denominator().clone());
        if d.is_one() {
            if n.is_odd() {
                return Err(Error::Invalid(format!("odd integer {n} in even expansion")));
            }
            entries.push(to_entry(&n)?);
            break;
        }
        let floor = n.div_floor(&d);
        let a = if floor.is_even() { floor } else { floor + 1 };
        entries.push(to_entry(&a)?);
        // x = a - 1/y  =>  y = 1/(a - x)
        x = x.neg().add_integer(&a).recip();
    }
    let word = ConwayWord::new(entries, Convention::Minus)?.with_convention(convention);
    let check = classify(&word, MirrorMode::Sensitive)?;
    let expected = TwoBridgeClass::from_pq(class.p().clone(), class.q().clone(), MirrorMode::Sensitive)?;
    if check != expected {
        return Err(Error::Verification(format!("even form {word} classifies to {check}, not {expected}")));
    }
    Ok(word)
}

fn to_entry(a: &BigInt) -> Result<i64> {
    a.to_i64()
        .ok_or_else(|| Error::Invalid(format!("partial quotient {a} overflows")))
}

/// Diagonal entries are half the entries of the word under the minus rule;
/// the band above the diagonal is all ones.
pub fn seifert_from_even(word: &ConwayWord) -> Result<SeifertMatrix> {
    let minus = word.with_convention(Convention::Minus);
    let m = minus.entries();
    if let Some(&a) = m.iter().find(|a| *a % 2 != 0) {
        return Err(Error::OddEntry(a));
    }
    if m.contains(&0) {
        return Err(Error::ZeroEntry);
    }
    if !m.len().is_multiple_of(2) {
        return Err(Error::NotNormalForm(format!("{word} has odd length")));
    }
    let n = m.len();
    let mut entries = vec![vec![0i64; n]; n];
    for i in 0..n {
        entries[i][i] = m[i] / 2;
        if i + 1 < n {
            entries[i][i + 1] = 1;
        }
    }
    SeifertMatrix::new(entries)
}

/// `det(V - t V^T)`, normalized.
pub fn alexander_via_seifert(v: &SeifertMatrix) -> Result<LaurentPoly> {
    if v.dim() == 0 {
        return Ok(LaurentPoly::one());
    }
    let m = v.pencil(&LaurentPoly::one(), &LaurentPoly::monomial(-1, 1));
    normalize_alexander(&m.determinant())
}

/// `det(x V - x^-1 V^T)` written as a polynomial in `z = x - x^-1`.
pub fn conway_via_seifert(v: &SeifertMatrix) -> Result<ZPoly> {
    if v.dim() == 0 {
        return Ok(ZPoly::one());
    }
    let m = v.pencil(&LaurentPoly::var(), &LaurentPoly::monomial(-1, -1));
    let c = laurent_to_z(&m.determinant())?;
    if !c.is_even_powered() {
        return Err(Error::OddExponent);
    }
    Ok(c)
}

/// Both Seifert-route polynomials for a knot class.
pub fn seifert_polynomials(class: &TwoBridgeClass) -> Result<(ZPoly, LaurentPoly)> {
    let word = even_form(class, Convention::Minus)?;
    let v = seifert_from_even(&word)?;
    Ok((conway_via_seifert(&v)?, alexander_via_seifert(&v)?))
}
