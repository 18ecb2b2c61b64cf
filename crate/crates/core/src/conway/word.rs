use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::fraction::Fraction;
use crate::error::{Error, Result};

/// Evaluation rule for a Conway word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Convention {
    /// `a0 + 1/(a1 + 1/(...))`
    Plus,
    /// `a0 - 1/(a1 - 1/(...))`
    Minus,
}

impl Convention {
    /// Convention used when a word carries no `@plus`/`@minus` suffix.
    ///
    /// No reading of the even-position degree sum survives the exhaustive
    /// scan in [`crate::knot::convention`], so nothing pins this; `Plus` is
    /// the reading under which `C(3)` is the trefoil and `C(2,2)` the
    /// figure-eight.
    pub const DEFAULT: Convention = Convention::Plus;

    pub fn name(self) -> &'static str {
        match self {
            Convention::Plus => "plus",
            Convention::Minus => "minus",
        }
    }

    pub fn other(self) -> Convention {
        match self {
            Convention::Plus => Convention::Minus,
            Convention::Minus => Convention::Plus,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A word `C(a0, a1, ..., am)` of half-twist counts.
///
/// Words built through [`ConwayWord::new`] are reduced: nonempty with no zero
/// entries. [`ConwayWord::unreduced`] admits zeros, and [`collapse_zeros`]
/// may return the empty word, which stands for the unknot closure (value ∞).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConwayWord {
    entries: Vec<i64>,
    convention: Convention,
}

impl ConwayWord {
    pub fn new(entries: Vec<i64>, convention: Convention) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyWord);
        }
        if entries.contains(&0) {
            return Err(Error::ZeroEntry);
        }
        Ok(ConwayWord {
            entries,
            convention,
        })
    }

    pub fn unreduced(entries: Vec<i64>, convention: Convention) -> Self {
        ConwayWord {
            entries,
            convention,
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        !self.entries.is_empty() && !self.entries.contains(&0)
    }

    pub fn require_reduced(&self) -> Result<()> {
        if self.entries.is_empty() {
            Err(Error::EmptyWord)
        } else if self.entries.contains(&0) {
            Err(Error::ZeroEntry)
        } else {
            Ok(())
        }
    }

    /// Total number of crossings in the twist-region template.
    pub fn crossing_count(&self) -> u64 {
        self.entries.iter().map(|a| a.unsigned_abs()).sum()
    }

    /// The same rational value written under `target`: the two rules differ
    /// by negating every odd-position entry.
    pub fn with_convention(&self, target: Convention) -> ConwayWord {
        if target == self.convention {
            return self.clone();
        }
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, &a)| if i % 2 == 1 { -a } else { a })
            .collect();
        ConwayWord {
            entries,
            convention: target,
        }
    }

    pub fn reversed(&self) -> ConwayWord {
        let mut entries = self.entries.clone();
        entries.reverse();
        ConwayWord {
            entries,
            convention: self.convention,
        }
    }
}

/// Evaluates the continued fraction; division by zero yields ∞ and
/// `x ± 1/∞ = x`. The empty word evaluates to ∞.
pub fn evaluate(word: &ConwayWord) -> Fraction {
    let mut acc: Option<Fraction> = None;
    for &a in word.entries.iter().rev() {
        let a = BigInt::from(a);
        acc = Some(match acc {
            None => Fraction::integer(a),
            Some(x) => {
                let r = x.recip();
                let r = match word.convention {
                    Convention::Plus => r,
                    Convention::Minus => r.neg(),
                };
                r.add_integer(&a)
            }
        });
    }
    acc.unwrap_or_else(Fraction::infinity)
}

/// Removes zero entries while preserving the value of the word.
///
/// Interior zeros merge their neighbours, `[.., x, 0, y, ..] -> [.., x+y, ..]`,
/// and a trailing zero absorbs its predecessor, `[.., y, x, 0] -> [.., y]`,
/// since `x ± 1/0 = ∞` and `y ± 1/∞ = y`. A leading zero followed by further
/// entries is a genuine reciprocal and is left in place.
pub fn collapse_zeros(word: &ConwayWord) -> ConwayWord {
    let mut w = word.entries.clone();
    loop {
        let n = w.len();
        if let Some(i) = (1..n.saturating_sub(1)).find(|&i| w[i] == 0) {
            let merged = w[i - 1] + w[i + 1];
            w.splice(i - 1..=i + 1, [merged]);
            continue;
        }
        if n >= 2 && w[n - 1] == 0 {
            w.truncate(n - 2);
            continue;
        }
        break;
    }
    ConwayWord {
        entries: w,
        convention: word.convention,
    }
}

pub fn mirror(word: &ConwayWord) -> ConwayWord {
    ConwayWord {
        entries: word.entries.iter().map(|a| -a).collect(),
        convention: word.convention,
    }
}

impl fmt::Display for ConwayWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C(")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")@{}", self.convention)
    }
}

impl ConwayWord {
    /// Parses `C(a0,...,am)` with an optional `@plus`/`@minus` suffix,
    /// ignoring whitespace. Zero entries are accepted here and rejected by
    /// the operations that need a reduced word.
    pub fn parse(s: &str) -> Result<ConwayWord> {
        Self::parse_with_default(s, Convention::DEFAULT)
    }

    pub fn parse_with_default(s: &str, default: Convention) -> Result<ConwayWord> {
        let chars: Vec<(usize, char)> = s
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut i = 0;
        let pos = |i: usize| chars.get(i).map(|&(p, _)| p).unwrap_or(s.len());
        let expect = |i: &mut usize, want: char| -> Result<()> {
            match chars.get(*i) {
                Some(&(_, c)) if c == want => {
                    *i += 1;
                    Ok(())
                }
                Some(&(p, c)) => Err(Error::parse(p, format!("expected '{want}', found '{c}'"))),
                None => Err(Error::parse(s.len(), format!("expected '{want}', found end of input"))),
            }
        };
        expect(&mut i, 'C')?;
        expect(&mut i, '(')?;
        let mut entries = Vec::new();
        loop {
            let start = i;
            if matches!(chars.get(i), Some(&(_, '+')) | Some(&(_, '-'))) {
                i += 1;
            }
            while matches!(chars.get(i), Some(&(_, c)) if c.is_ascii_digit()) {
                i += 1;
            }
            let text: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            let value: i64 = text
                .parse()
                .map_err(|_| Error::parse(pos(start), format!("invalid integer entry '{text}'")))?;
            entries.push(value);
            match chars.get(i) {
                Some(&(_, ',')) => i += 1,
                Some(&(_, ')')) => {
                    i += 1;
                    break;
                }
                Some(&(p, c)) => return Err(Error::parse(p, format!("expected ',' or ')', found '{c}'"))),
                None => return Err(Error::parse(s.len(), "unterminated word")),
            }
        }
        let convention = if i == chars.len() {
            default
        } else {
            expect(&mut i, '@')?;
            let tag: String = chars[i..].iter().map(|&(_, c)| c).collect();
            match tag.to_ascii_lowercase().as_str() {
                "plus" => Convention::Plus,
                "minus" => Convention::Minus,
                _ => return Err(Error::parse(pos(i), format!("unknown convention '{tag}'"))),
            }
        };
        Ok(ConwayWord {
            entries,
            convention,
        })
    }
}

impl FromStr for ConwayWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConwayWord::parse(s)
    }
}
