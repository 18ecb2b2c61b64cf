//! Readings of the even-position degree sum for two-bridge words, and the
//! exhaustive scan that tries to pin one of them against computed
//! polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{cross_check_word, knot_classes};
use crate::conway::{evaluate, simple_expansion, Convention, ConwayWord, TwoBridgeClass};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Forward,
    Reversed,
}

/// One way of reading the degree formula: which evaluation rule the words
/// use, which positions are summed, and from which end positions count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Reading {
    pub convention: Convention,
    pub parity: Parity,
    pub orientation: Orientation,
}

/// The formula taken at face value: plus rule, `|a0| + |a2| + ...`.
pub const LITERAL_READING: Reading = Reading {
    convention: Convention::Plus,
    parity: Parity::Even,
    orientation: Orientation::Forward,
};

impl Reading {
    pub fn all() -> Vec<Reading> {
        let mut out = Vec::new();
        for convention in [Convention::Plus, Convention::Minus] {
            for parity in [Parity::Even, Parity::Odd] {
                for orientation in [Orientation::Forward, Orientation::Reversed] {
                    out.push(Reading {
                        convention,
                        parity,
                        orientation,
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parity = match self.parity {
            Parity::Even => "even",
            Parity::Odd => "odd",
        };
        let orientation = match self.orientation {
            Orientation::Forward => "forward",
            Orientation::Reversed => "reversed",
        };
        write!(f, "{}/{}/{}", self.convention, parity, orientation)
    }
}

/// Sum of `|a_i|` over the positions selected by `reading`.
///
/// The word must have even length, no zero entries and carry the reading's
/// convention tag.
pub fn degree_prediction(word: &ConwayWord, reading: Reading) -> Result<u64> {
    if word.convention() != reading.convention {
        return Err(Error::NotNormalForm(format!(
            "{word} is tagged {}, reading expects {}",
            word.convention(),
            reading.convention
        )));
    }
    if word.is_empty() || !word.len().is_multiple_of(2) {
        return Err(Error::NotNormalForm(format!("{word} does not have even length")));
    }
    if !word.is_reduced() {
        return Err(Error::NotNormalForm(format!("{word} has a zero entry")));
    }
    let oriented = match reading.orientation {
        Orientation::Forward => word.clone(),
        Orientation::Reversed => word.reversed(),
    };
    let start = match reading.parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    Ok(oriented.entries().iter().skip(start).step_by(2).map(|a| a.unsigned_abs()).sum())
}

/// The even-length normal form of `p/q` under `convention`.
///
/// Plus: the all-positive regular continued fraction, with a final `a`
/// rewritten as `a-1, 1` when the length is odd. Minus: the expansion with
/// every entry at least 2, with a final `a` rewritten as `a+1, 1`.
pub fn normal_form(class: &TwoBridgeClass, convention: Convention) -> ConwayWord {
    let mut entries = match convention {
        Convention::Plus => simple_expansion(class.p(), class.q()).entries().to_vec(),
        Convention::Minus => ceiling_expansion(class.p(), class.q()),
    };
    if entries.len() % 2 == 1 {
        let last = entries.pop().expect("nonempty expansion");
        match convention {
            Convention::Plus => entries.extend([last - 1, 1]),
            Convention::Minus => entries.extend([last + 1, 1]),
        }
    }
    ConwayWord::new(entries, convention).expect("normal form entries are nonzero")
}

fn ceiling_expansion(p: &BigInt, q: &BigInt) -> Vec<i64> {
    let (mut a, mut b) = (p.clone(), q.mod_floor(p));
    let mut out = Vec::new();
    while !b.is_zero() {
        let c = a.div_ceil(&b);
        out.push(c.to_i64().expect("partial quotient fits in i64"));
        let r = &c * &b - &a;
        a = b;
        b = r;
    }
    out
}

/// A word whose prediction differs from the computed degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub word: ConwayWord,
    pub predicted: u64,
    pub actual: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadingResult {
    pub reading: Reading,
    pub checked: usize,
    pub mismatch_count: usize,
    /// The first few mismatches, in class order.
    pub examples: Vec<Mismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConventionReport {
    pub max_p: u64,
    pub knots: usize,
    pub results: Vec<ReadingResult>,
}

impl ConventionReport {
    pub fn consistent(&self) -> Vec<Reading> {
        self.results
            .iter()
            .filter(|r| r.mismatch_count == 0)
            .map(|r| r.reading)
            .collect()
    }

    /// The unique consistent reading, if there is exactly one.
    pub fn pinned(&self) -> Option<Reading> {
        match self.consistent().as_slice() {
            [r] => Some(*r),
            _ => None,
        }
    }
}

impl fmt::Display for ConventionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "knots with p <= {}: {}", self.max_p, self.knots)?;
        writeln!(f, "{:<22} {:>8} {:>10}  first mismatches", "reading", "checked", "mismatches")?;
        for r in &self.results {
            let ex: Vec<String> = r
                .examples
                .iter()
                .map(|m| format!("{} predicts {} has {}", m.word, m.predicted, m.actual))
                .collect();
            writeln!(
                f,
                "{:<22} {:>8} {:>10}  {}",
                r.reading.to_string(),
                r.checked,
                r.mismatch_count,
                ex.join("; ")
            )?;
        }
        Ok(())
    }
}

const EXAMPLES_KEPT: usize = 4;

/// Computes `deg ∇` for the normal-form word of every knot class with
/// `p <= max_p` under both conventions and scores every reading; never fails
/// on mismatches, only on route disagreement.
pub fn scan_readings(max_p: u64) -> Result<ConventionReport> {
    let classes = knot_classes(max_p);
    let rows: Vec<Result<[(ConwayWord, usize); 2]>> = classes
        .par_iter()
        .map(|c| {
            let plus = normal_form(c, Convention::Plus);
            let minus = normal_form(c, Convention::Minus);
            Ok([(plus.clone(), checked_degree(&plus)?), (minus.clone(), checked_degree(&minus)?)])
        })
        .collect();
    let rows: Vec<[(ConwayWord, usize); 2]> = rows.into_iter().collect::<Result<_>>()?;

    let results = Reading::all()
        .into_iter()
        .map(|reading| {
            let idx = match reading.convention {
                Convention::Plus => 0,
                Convention::Minus => 1,
            };
            let mut result = ReadingResult {
                reading,
                checked: 0,
                mismatch_count: 0,
                examples: Vec::new(),
            };
            for row in &rows {
                let (word, actual) = &row[idx];
                let predicted = degree_prediction(word, reading).expect("normal form");
                result.checked += 1;
                if predicted != *actual as u64 {
                    result.mismatch_count += 1;
                    if result.examples.len() < EXAMPLES_KEPT {
                        result.examples.push(Mismatch {
                            word: word.clone(),
                            predicted,
                            actual: *actual,
                        });
                    }
                }
            }
            result
        })
        .collect();
    Ok(ConventionReport {
        max_p,
        knots: classes.len(),
        results,
    })
}

/// Runs [`scan_readings`] and insists on exactly one consistent reading.
pub fn pin_convention(max_p: u64) -> Result<ConventionReport> {
    let report = scan_readings(max_p)?;
    match report.consistent().len() {
        1 => Ok(report),
        0 => Err(Error::NoConsistentConvention(report.to_string())),
        _ => Err(Error::AmbiguousConvention(report.to_string())),
    }
}

/// `deg ∇` of the knot named by `word`, insisting that both routes agree.
fn checked_degree(word: &ConwayWord) -> Result<usize> {
    let check = cross_check_word(word)?;
    if let Some(why) = check.first_failure() {
        return Err(Error::Verification(format!("{word}: {why}")));
    }
    let span = check.fox_alexander.span()? as usize;
    let degree = check.conway_degree();
    if span != degree {
        return Err(Error::Verification(format!("{word}: span Δ = {span} but deg ∇ = {degree}")));
    }
    Ok(degree)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzReport {
    pub reading: Reading,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

/// Random even-length words of length at most `max_len` with entries in
/// `[-5, 5] \ {0}` under `reading`'s convention, kept when they name a
/// nontrivial knot, each compared against the computed degree.
pub fn degree_fuzz(count: usize, seed: u64, reading: Reading, max_len: usize) -> Result<FuzzReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut words = Vec::with_capacity(count);
    while words.len() < count {
        let len = 2 * rng.gen_range(1..=max_len / 2);
        let entries: Vec<i64> = (0..len)
            .map(|_| {
                let a = rng.gen_range(1..=5);
                if rng.gen_bool(0.5) {
                    a
                } else {
                    -a
                }
            })
            .collect();
        let word = ConwayWord::new(entries, reading.convention)?;
        let p = evaluate(&word).numerator().clone();
        if p.is_odd() && p.magnitude() > &1u32.into() {
            words.push(word);
        }
    }
    let checked: Vec<Result<Option<Mismatch>>> = words
        .par_iter()
        .map(|w| {
            let predicted = degree_prediction(w, reading)?;
            let actual = checked_degree(w)?;
            Ok((predicted != actual as u64).then(|| Mismatch {
                word: w.clone(),
                predicted,
                actual,
            }))
        })
        .collect();
    let mut mismatches = Vec::new();
    for r in checked {
        if let Some(m) = r? {
            mismatches.push(m);
        }
    }
    Ok(FuzzReport {
        reading,
        checked: count,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conway::{classify, MirrorMode};

    fn w(e: &[i64]) -> ConwayWord {
        ConwayWord::new(e.to_vec(), Convention::Plus).unwrap()
    }

    #[test]
    fn literal_prediction_examples() {
        assert_eq!(degree_prediction(&w(&[2, 2]), LITERAL_READING).unwrap(), 2);
        assert_eq!(degree_prediction(&w(&[3, 2, 2, -3]), LITERAL_READING).unwrap(), 5);
        for b in [-7, -3, 4, 9] {
            assert_eq!(degree_prediction(&w(&[b, 2]), LITERAL_READING).unwrap(), b.unsigned_abs());
        }
    }

    #[test]
    fn prediction_rejects_non_normal_words() {
        assert!(matches!(degree_prediction(&w(&[3]), LITERAL_READING), Err(Error::NotNormalForm(_))));
        let minus = ConwayWord::new(vec![2, 2], Convention::Minus).unwrap();
        assert!(matches!(degree_prediction(&minus, LITERAL_READING), Err(Error::NotNormalForm(_))));
        let zero = ConwayWord::unreduced(vec![2, 0], Convention::Plus);
        assert!(matches!(degree_prediction(&zero, LITERAL_READING), Err(Error::NotNormalForm(_))));
    }

    #[test]
    fn other_readings() {
        let word = ConwayWord::new(vec![1, 2, 3, 4], Convention::Minus).unwrap();
        let r = |parity, orientation| Reading {
            convention: Convention::Minus,
            parity,
            orientation,
        };
        assert_eq!(degree_prediction(&word, r(Parity::Even, Orientation::Forward)).unwrap(), 4);
        assert_eq!(degree_prediction(&word, r(Parity::Odd, Orientation::Forward)).unwrap(), 6);
        assert_eq!(degree_prediction(&word, r(Parity::Even, Orientation::Reversed)).unwrap(), 6);
        assert_eq!(degree_prediction(&word, r(Parity::Odd, Orientation::Reversed)).unwrap(), 4);
    }

    #[test]
    fn normal_forms_classify_back() {
        for c in knot_classes(41) {
            for conv in [Convention::Plus, Convention::Minus] {
                let nf = normal_form(&c, conv);
                assert_eq!(nf.len() % 2, 0);
                assert_eq!(classify(&nf, MirrorMode::Sensitive).unwrap(), c, "{nf}");
                if conv == Convention::Minus {
                    assert!(nf.entries()[..nf.len() - 1].iter().all(|&a| a >= 2));
                } else {
                    assert!(nf.entries().iter().all(|&a| a >= 1));
                }
            }
        }
    }

    #[test]
    fn trefoil_and_figure_eight_normal_forms() {
        let trefoil = TwoBridgeClass::from_pq(3, 1, MirrorMode::Sensitive).unwrap();
        assert_eq!(normal_form(&trefoil, Convention::Plus).entries(), &[2, 1]);
        assert_eq!(checked_degree(&normal_form(&trefoil, Convention::Plus)).unwrap(), 2);
        let fig8 = TwoBridgeClass::from_pq(5, 2, MirrorMode::Sensitive).unwrap();
        assert_eq!(normal_form(&fig8, Convention::Plus).entries(), &[2, 2]);
        assert_eq!(checked_degree(&normal_form(&fig8, Convention::Plus)).unwrap(), 2);
    }

    #[test]
    fn scan_scores_every_reading() {
        let report = scan_readings(15).unwrap();
        assert_eq!(report.results.len(), 8);
        assert!(report.results.iter().all(|r| r.checked == report.knots));
    }
}
