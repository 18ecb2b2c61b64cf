//! Unknotting-number-one two-bridge words of palindromic form
//! `C(b, b1, ..., bk, ±2, -bk, ..., -b1)`, the one-crossing unknotting move,
//! and families of such knots with growing Conway degree.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::conway::{classify, collapse_zeros, evaluate, Convention, ConwayWord, MirrorMode, TwoBridgeClass};
use crate::error::{Error, Result};
use crate::knot::cross_check_word;
use crate::poly::{LaurentPoly, ZPoly};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KMWord {
    b: i64,
    tail: Vec<i64>,
    sign: i8,
}

impl KMWord {
    /// Checks entries are nonzero, `sign = ±1` and the pattern closes to a
    /// knot. Parity of the numerator does not depend on the evaluation rule.
    pub fn new(b: i64, tail: Vec<i64>, sign: i8) -> Result<KMWord> {
        if b == 0 || tail.contains(&0) {
            return Err(Error::ZeroEntry);
        }
        if sign != 1 && sign != -1 {
            return Err(Error::Invalid(format!("sign must be ±1, got {sign}")));
        }
        let km = KMWord { b, tail, sign };
        let p = evaluate(&km.entries_word(Convention::Plus)).numerator().clone();
        if p.is_even() {
            return Err(Error::NotKnot(p.to_string()));
        }
        Ok(km)
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn tail(&self) -> &[i64] {
        &self.tail
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// Index of the `±2` entry.
    pub fn pivot(&self) -> usize {
        self.tail.len() + 1
    }

    fn entries(&self) -> Vec<i64> {
        let mut e = Vec::with_capacity(2 * self.tail.len() + 2);
        e.push(self.b);
        e.extend(&self.tail);
        e.push(2 * i64::from(self.sign));
        e.extend(self.tail.iter().rev().map(|x| -x));
        e
    }

    fn entries_word(&self, convention: Convention) -> ConwayWord {
        ConwayWord::unreduced(self.entries(), convention)
    }

    /// The palindromic word under `convention`; rejects words naming a link
    /// or the unknot.
    pub fn realize(&self, convention: Convention) -> Result<ConwayWord> {
        let word = ConwayWord::new(self.entries(), convention)?;
        let p = evaluate(&word).numerator().abs();
        if p.is_even() {
            return Err(Error::NotKnot(p.to_string()));
        }
        if p <= One::one() {
            return Err(Error::TrivialKnot(format!("{word} evaluates to ±1/q")));
        }
        Ok(word)
    }
}

impl fmt::Display for KMWord {
    /// `b;b1,b2,...;±`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tail: Vec<String> = self.tail.iter().map(|x| x.to_string()).collect();
        let sign = if self.sign > 0 { '+' } else { '-' };
        write!(f, "{};{};{}", self.b, tail.join(","), sign)
    }
}

impl FromStr for KMWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<KMWord> {
        let parts: Vec<&str> = s.trim().split(';').collect();
        let [b, tail, sign] = parts.as_slice() else {
            return Err(Error::parse(0, "expected 'b;b1,...,bk;±'"));
        };
        let b = b.trim().parse().map_err(|_| Error::parse(0, format!("bad b '{b}'")))?;
        let tail = if tail.trim().is_empty() {
            Vec::new()
        } else {
            tail.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| Error::parse(0, format!("bad entry '{x}'"))))
                .collect::<Result<_>>()?
        };
        let sign = match sign.trim() {
            "+" => 1,
            "-" => -1,
            other => return Err(Error::parse(0, format!("bad sign '{other}'"))),
        };
        KMWord::new(b, tail, sign)
    }
}

/// Sets entry `index` of `word` to zero, collapses, and reports whether the
/// result is the unknot (empty word or a word of value `±1/q`).
pub fn zeroing_unknots(word: &ConwayWord, index: usize) -> bool {
    let mut entries = word.entries().to_vec();
    if index >= entries.len() {
        return false;
    }
    entries[index] = 0;
    let collapsed = collapse_zeros(&ConwayWord::unreduced(entries, word.convention()));
    collapsed.is_empty() || evaluate(&collapsed).numerator().abs().is_one()
}

/// Crossing change at the distinguished `±2` twist: the two half-twists
/// cancel to `0`, and the palindrome then collapses to the unknot.
pub fn unknotting_move(km: &KMWord, convention: Convention) -> bool {
    zeroing_unknots(&km.entries_word(convention), km.pivot())
}

/// Every valid KM word with `|b| <= max_b`, tail length at most `max_k` and
/// tail entries bounded by `max_entry`, in a fixed order.
pub fn km_words_in_range(max_b: i64, max_k: usize, max_entry: i64) -> Vec<KMWord> {
    let values: Vec<i64> = (-max_entry..=max_entry).filter(|&x| x != 0).collect();
    let mut tails: Vec<Vec<i64>> = vec![Vec::new()];
    let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..max_k {
        layer = layer
            .iter()
            .flat_map(|t| {
                values.iter().map(move |&v| {
                    let mut n = t.clone();
                    n.push(v);
                    n
                })
            })
            .collect();
        tails.extend(layer.iter().cloned());
    }
    let mut out = Vec::new();
    for b in (-max_b..=max_b).filter(|&b| b != 0) {
        for tail in &tails {
            for sign in [1, -1] {
                if let Ok(km) = KMWord::new(b, tail.clone(), sign) {
                    out.push(km);
                }
            }
        }
    }
    out
}

/// Seeded random KM words for fuzzing.
pub fn random_km_words(count: usize, seed: u64, max_b: i64, max_k: usize, max_entry: i64) -> Vec<KMWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nonzero = |rng: &mut ChaCha8Rng, m: i64| {
        let a = rng.gen_range(1..=m);
        if rng.gen_bool(0.5) {
            a
        } else {
            -a
        }
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let b = nonzero(&mut rng, max_b);
        let k = rng.gen_range(0..=max_k);
        let tail = (0..k).map(|_| nonzero(&mut rng, max_entry)).collect();
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        if let Ok(km) = KMWord::new(b, tail, sign) {
            out.push(km);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Generator {
    /// `C(2, 2^k, 2, (-2)^k)` for `k = 0, 1, 2, ...`: all entries even, so
    /// the Conway degree is the length `2k + 2`.
    #[default]
    EvenPalindrome,
    /// `C(b, 2)` for `b = 2, 3, ...`: twist knots, all of Conway degree 2.
    Twist,
}

impl Generator {
    pub fn name(self) -> &'static str {
        match self {
            Generator::EvenPalindrome => "even-palindrome",
            Generator::Twist => "twist",
        }
    }

    /// The `i`-th candidate word of the generator (not yet filtered).
    pub fn candidate(self, i: usize) -> Result<KMWord> {
        match self {
            Generator::EvenPalindrome => KMWord::new(2, vec![2; i], 1),
            Generator::Twist => KMWord::new(i as i64 + 2, Vec::new(), 1),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Generator> {
        match s {
            "even-palindrome" => Ok(Generator::EvenPalindrome),
            "twist" => Ok(Generator::Twist),
            _ => Err(Error::Invalid(format!("unknown generator '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub km: KMWord,
    pub word: ConwayWord,
    pub class: TwoBridgeClass,
    pub conway: ZPoly,
    pub alexander: LaurentPoly,
}

impl FamilyMember {
    pub fn degree(&self) -> usize {
        self.conway.degree().unwrap_or(0)
    }

    pub fn record(&self) -> FamilyRecord {
        FamilyRecord {
            word: self.word.clone(),
            class: self.class.clone(),
            conway: self.conway.clone(),
            degree: self.degree(),
            alexander: self.alexander.clone(),
        }
    }
}

/// Builds and fully checks one member: both polynomial routes agree, the
/// unknotting move succeeds.
pub fn family_member(km: &KMWord, convention: Convention) -> Result<FamilyMember> {
    let word = km.realize(convention)?;
    let check = cross_check_word(&word)?;
    if let Some(why) = check.first_failure() {
        return Err(Error::Verification(format!("{word}: {why}")));
    }
    if !unknotting_move(km, convention) {
        return Err(Error::Verification(format!("{word}: unknotting move failed")));
    }
    let class = check.class.expect("realize rejects the unknot");
    Ok(FamilyMember {
        km: km.clone(),
        word,
        class,
        conway: check.conway,
        alexander: check.alexander,
    })
}

/// `count` members of the generator's family, pairwise inequivalent even up
/// to mirror image, with strictly increasing Conway degree.
pub fn generate_family(count: usize, generator: Generator, convention: Convention) -> Result<Vec<FamilyMember>> {
    if count == 0 {
        return Err(Error::Invalid("count must be at least 1".into()));
    }
    let candidates: Vec<KMWord> = (0..count).map(|i| generator.candidate(i)).collect::<Result<_>>()?;
    let members: Vec<FamilyMember> = candidates
        .par_iter()
        .map(|km| family_member(km, convention))
        .collect::<Result<_>>()?;
    for pair in members.windows(2) {
        if pair[1].degree() <= pair[0].degree() {
            return Err(Error::Verification(format!(
                "degree does not increase: {} has {}, {} has {}",
                pair[0].word,
                pair[0].degree(),
                pair[1].word,
                pair[1].degree()
            )));
        }
    }
    let folded: Vec<TwoBridgeClass> = members
        .iter()
        .map(|m| classify(&m.word, MirrorMode::Fold))
        .collect::<Result<_>>()?;
    for i in 0..folded.len() {
        for j in i + 1..folded.len() {
            if folded[i] == folded[j] {
                return Err(Error::Verification(format!(
                    "{} and {} are equivalent",
                    members[i].word, members[j].word
                )));
            }
        }
    }
    Ok(members)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expressibility {
    Expressible(KMWord),
    /// No KM word within the search bounds names the class.
    Inconclusive,
}

/// Bounded search for a KM word naming `class` up to mirror image: tails of
/// length `k` with `2k + 2 <= max_len`, all entries bounded by `max_entry`.
pub fn is_km_expressible(
    class: &TwoBridgeClass,
    max_len: usize,
    max_entry: i64,
    convention: Convention,
) -> Result<Expressibility> {
    let target = TwoBridgeClass::from_pq(class.p().clone(), class.q().clone(), MirrorMode::Fold)?;
    let max_k = max_len.saturating_sub(2) / 2;
    let found = km_words_in_range(max_entry, max_k, max_entry).into_par_iter().find_first(|km| {
        km.realize(convention)
            .and_then(|w| classify(&w, MirrorMode::Fold))
            .is_ok_and(|c| c == target)
    });
    Ok(match found {
        Some(km) => Expressibility::Expressible(km),
        None => Expressibility::Inconclusive,
    })
}

/// One line of `family` output:
/// `word=C(...)@plus\tclass=p/q\tconway=[c0,...]\tdeg=N\talexander=e:c,...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRecord {
    pub word: ConwayWord,
    pub class: TwoBridgeClass,
    pub conway: ZPoly,
    pub degree: usize,
    pub alexander: LaurentPoly,
}

impl fmt::Display for FamilyRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "word={}\tclass={}\tconway={}\tdeg={}\talexander={}",
            self.word,
            self.class,
            self.conway.to_machine(),
            self.degree,
            self.alexander.to_machine()
        )
    }
}

impl FromStr for FamilyRecord {
    type Err = Error;

    fn from_str(line: &str) -> Result<FamilyRecord> {
        let fields: Vec<&str> = line.trim_end_matches(['\n', '\r']).split('\t').collect();
        let get = |i: usize, key: &str| -> Result<&str> {
            fields
                .get(i)
                .and_then(|f| f.strip_prefix(key))
                .and_then(|f| f.strip_prefix('='))
                .ok_or_else(|| Error::parse(0, format!("field {i} should be '{key}=...'")))
        };
        if fields.len() != 5 {
            return Err(Error::parse(0, format!("expected 5 tab-separated fields, got {}", fields.len())));
        }
        let word = ConwayWord::parse(get(0, "word")?)?;
        let (p, q) = get(1, "class")?
            .split_once('/')
            .ok_or_else(|| Error::parse(0, "class should be p/q"))?;
        let parse_int = |s: &str| s.parse::<num_bigint::BigInt>().map_err(|_| Error::parse(0, format!("bad integer '{s}'")));
        let class = TwoBridgeClass::from_pq(parse_int(p)?, parse_int(q)?, MirrorMode::Sensitive)?;
        let conway = ZPoly::parse_machine(get(2, "conway")?)?;
        let degree = get(3, "deg")?
            .parse()
            .map_err(|_| Error::parse(0, "bad degree"))?;
        let alexander = LaurentPoly::parse_machine(get(4, "alexander")?)?;
        Ok(FamilyRecord {
            word,
            class,
            conway,
            degree,
            alexander,
        })
    }
}
