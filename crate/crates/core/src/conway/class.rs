use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::word::{evaluate, ConwayWord, Convention};
use crate::error::{Error, Result};

/// How `classify` treats mirror images.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MirrorMode {
    /// `(p, q)` and `(p, p - q)` are distinct classes.
    #[default]
    Sensitive,
    /// Mirrors are identified.
    Fold,
}

/// Canonical rational classification `(p, q)` of a two-bridge knot or link:
/// `0 < q < p`, `gcd(p, q) = 1`, and `q` is the least representative of its
/// orbit under `q -> q^-1 mod p` (and `q -> p - q` when folded).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridgeClass {
    p: BigInt,
    q: BigInt,
}

impl TwoBridgeClass {
    /// Canonicalizes an arbitrary coprime pair with `p >= 2`.
    pub fn from_pq(p: impl Into<BigInt>, q: impl Into<BigInt>, mode: MirrorMode) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p < BigInt::from(2) {
            return Err(Error::TrivialKnot(format!("p = {p}")));
        }
        let q = q.mod_floor(&p);
        if !q.gcd(&p).is_one() {
            return Err(Error::Invalid(format!("gcd({p}, {q}) != 1")));
        }
        let inv = mod_inverse(&q, &p);
        let mut best = q.clone().min(inv.clone());
        if mode == MirrorMode::Fold {
            best = best.min(&p - &q).min(&p - &inv);
        }
        Ok(TwoBridgeClass { p, q: best })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_knot(&self) -> bool {
        self.p.is_odd()
    }

    pub fn p_u64(&self) -> Option<u64> {
        self.p.to_u64()
    }
}

impl fmt::Display for TwoBridgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Inverse of `a` modulo `m`; `a` and `m` coprime, `m >= 2`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

pub fn classify(word: &ConwayWord, mode: MirrorMode) -> Result<TwoBridgeClass> {
    word.require_reduced()?;
    let value = evaluate(word);
    if value.is_infinite() {
        return Err(Error::TrivialKnot(format!("{word} evaluates to 1/0")));
    }
    let p = value.numerator().abs();
    if p <= BigInt::one() {
        return Err(Error::TrivialKnot(format!("{word} evaluates to {value}")));
    }
    // p/q with a negative numerator is the class (p, -q).
    let q = if value.numerator().is_negative() {
        -value.denominator()
    } else {
        value.denominator().clone()
    };
    TwoBridgeClass::from_pq(p, q, mode)
}

pub fn equivalent(w1: &ConwayWord, w2: &ConwayWord, mode: MirrorMode) -> Result<bool> {
    Ok(classify(w1, mode)? == classify(w2, mode)?)
}

/// The all-positive regular continued fraction of `p/q` with `0 < q < p`,
/// read under the plus rule.
pub fn simple_expansion(p: &BigInt, q: &BigInt) -> ConwayWord {
    let (mut a, mut b) = (p.clone(), q.mod_floor(p));
    let mut entries = Vec::new();
    while !b.is_zero() {
        let (d, r) = a.div_rem(&b);
        entries.push(d.to_i64().expect("partial quotient fits in i64"));
        a = b;
        b = r;
    }
    ConwayWord::unreduced(entries, Convention::Plus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conway::word::mirror;

    fn w(e: &[i64], c: Convention) -> ConwayWord {
        ConwayWord::new(e.to_vec(), c).unwrap()
    }

    fn pq(c: &TwoBridgeClass) -> (i64, i64) {
        (c.p().to_i64().unwrap(), c.q().to_i64().unwrap())
    }

    #[test]
    fn classify_examples() {
        let s = MirrorMode::Sensitive;
        assert_eq!(pq(&classify(&w(&[2, 2], Convention::Minus), s).unwrap()), (3, 2));
        assert_eq!(
            pq(&classify(&w(&[2, 2], Convention::Minus), MirrorMode::Fold).unwrap()),
            (3, 1)
        );
        assert_eq!(pq(&classify(&w(&[5], Convention::Plus), s).unwrap()), (5, 1));
        assert_eq!(pq(&classify(&w(&[2, 2], Convention::Plus), s).unwrap()), (5, 2));
    }

    #[test]
    fn classify_rejects_trivial_and_zero() {
        let s = MirrorMode::Sensitive;
        assert!(matches!(classify(&w(&[1], Convention::Plus), s), Err(Error::TrivialKnot(_))));
        // 1 - 1/2 = 1/2
        assert!(matches!(classify(&w(&[1, 2], Convention::Minus), s), Err(Error::TrivialKnot(_))));
        // 1 + 1/(-1) = 0
        assert!(matches!(classify(&w(&[1, -1], Convention::Plus), s), Err(Error::TrivialKnot(_))));
        let z = ConwayWord::unreduced(vec![2, 0, 2], Convention::Plus);
        assert_eq!(classify(&z, s), Err(Error::ZeroEntry));
    }

    #[test]
    fn equivalent_examples() {
        let s = MirrorMode::Sensitive;
        // 1 + 1/(1 + 1/2) = 5/3, and 2*3 = 1 mod 5
        let a = w(&[2, 2], Convention::Plus);
        let b = w(&[1, 1, 2], Convention::Plus);
        assert!(equivalent(&a, &b, s).unwrap());
        assert!(!equivalent(&a, &w(&[2, 2], Convention::Minus), s).unwrap());
        assert!(equivalent(&a, &a, s).unwrap());
    }

    #[test]
    fn mirror_class_relation() {
        let x = w(&[3, 1, 2], Convention::Plus);
        let c = classify(&x, MirrorMode::Sensitive).unwrap();
        let m = classify(&mirror(&x), MirrorMode::Sensitive).unwrap();
        let expected = TwoBridgeClass::from_pq(c.p().clone(), c.p() - c.q(), MirrorMode::Sensitive).unwrap();
        assert_eq!(m, expected);
        let trefoil = w(&[3], Convention::Plus);
        assert_ne!(
            classify(&trefoil, MirrorMode::Sensitive).unwrap(),
            classify(&mirror(&trefoil), MirrorMode::Sensitive).unwrap()
        );
        assert!(equivalent(&trefoil, &mirror(&trefoil), MirrorMode::Fold).unwrap());
    }

    #[test]
    fn simple_expansion_round_trip() {
        for p in 2..40i64 {
            for q in 1..p {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let word = simple_expansion(&BigInt::from(p), &BigInt::from(q));
                assert_eq!(evaluate(&word), crate::conway::Fraction::new(p, q));
                assert!(word.entries().iter().all(|&a| a > 0));
            }
        }
    }
}
