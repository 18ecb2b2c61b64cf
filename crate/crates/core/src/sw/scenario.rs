//! Line-oriented scenario files for `distinguish_tori`; the grammar is in
//! `docs/scenario.md`.

use std::path::Path;

use num_bigint::BigInt;

use super::{distinguish_tori, BasicClassSet, Class, TorusClass, TorusReport};
use crate::conway::{Convention, ConwayWord};
use crate::error::{Error, Result};
use crate::km::{generate_family, Generator};
use crate::knot::cross_check_word;
use crate::poly::LaurentPoly;

/// Scenarios available by name.
pub const BUILTIN_SCENARIOS: &[(&str, &str)] = &[
    (
        "k3-trefoil",
        "name = k3-trefoil\nrank = 2\ntorus = 1 0\nclass = 0 0 : 1\nknot = trefoil C(3)@plus\n",
    ),
    (
        "singleton-family",
        "name = singleton-family\nrank = 2\ntorus = 1 0\nclass = 0 0 : 1\nfamily = 50 even-palindrome\n",
    ),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotRef {
    Word { label: String, word: ConwayWord },
    Family { count: usize, generator: Generator },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub name: String,
    pub convention: Convention,
    pub classes: BasicClassSet,
    pub torus: TorusClass,
    pub knots: Vec<KnotRef>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Scenario { line, msg: msg.into() }
}

fn parse_ints(line: usize, s: &str) -> Result<Class> {
    s.split_whitespace()
        .map(|x| x.parse::<i64>().map_err(|_| err(line, format!("bad integer '{x}'"))))
        .collect()
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Scenario> {
        let mut name = None;
        let mut rank: Option<(usize, usize)> = None;
        let mut torus: Option<(usize, Class)> = None;
        let mut convention: Option<Convention> = None;
        let mut classes: Vec<(usize, Class, BigInt)> = Vec::new();
        let mut knots = Vec::new();
        // words are parsed after the convention line is known
        let mut pending_words: Vec<(usize, String, String)> = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| err(line, "expected 'key = value'"))?;
            let (key, value) = (key.trim(), value.trim());
            let once = |seen: bool| if seen { Err(err(line, format!("duplicate '{key}'"))) } else { Ok(()) };
            match key {
                "name" => {
                    once(name.is_some())?;
                    name = Some(value.to_string());
                }
                "rank" => {
                    once(rank.is_some())?;
                    let r: usize = value.parse().map_err(|_| err(line, "rank must be a positive integer"))?;
                    if r == 0 {
                        return Err(err(line, "rank must be a positive integer"));
                    }
                    rank = Some((line, r));
                }
                "torus" => {
                    once(torus.is_some())?;
                    torus = Some((line, parse_ints(line, value)?));
                }
                "convention" => {
                    once(convention.is_some())?;
                    convention = Some(match value {
                        "plus" => Convention::Plus,
                        "minus" => Convention::Minus,
                        _ => return Err(err(line, "convention must be 'plus' or 'minus'")),
                    });
                }
                "class" => {
                    let (vector, v) = value
                        .split_once(':')
                        .ok_or_else(|| err(line, "expected 'class = x1 ... xn : value'"))?;
                    let v: BigInt = v.trim().parse().map_err(|_| err(line, format!("bad value '{}'", v.trim())))?;
                    classes.push((line, parse_ints(line, vector)?, v));
                }
                "knot" => {
                    let (label, word) = value
                        .split_once(char::is_whitespace)
                        .ok_or_else(|| err(line, "expected 'knot = label word'"))?;
                    pending_words.push((line, label.to_string(), word.trim().to_string()));
                    knots.push(None);
                }
                "family" => {
                    let mut parts = value.split_whitespace();
                    let count: usize = parts
                        .next()
                        .and_then(|c| c.parse().ok())
                        .filter(|&c| c > 0)
                        .ok_or_else(|| err(line, "family count must be a positive integer"))?;
                    let generator = match parts.next() {
                        Some(g) => g.parse().map_err(|e: Error| err(line, e.to_string()))?,
                        None => Generator::default(),
                    };
                    if parts.next().is_some() {
                        return Err(err(line, "expected 'family = count [generator]'"));
                    }
                    knots.push(Some(KnotRef::Family { count, generator }));
                }
                _ => return Err(err(line, format!("unknown key '{key}'"))),
            }
        }

        let (rank_line, rank) = rank.ok_or_else(|| err(0, "missing 'rank'"))?;
        let (torus_line, torus) = torus.ok_or_else(|| err(0, "missing 'torus'"))?;
        if torus.len() != rank {
            return Err(err(torus_line, format!("torus has {} entries, rank is {rank} (line {rank_line})", torus.len())));
        }
        if classes.is_empty() {
            return Err(err(0, "at least one 'class' is required"));
        }
        let mut set = BasicClassSet::new(rank)?;
        for (line, k, v) in classes {
            if k.len() != rank {
                return Err(err(line, format!("class has {} entries, rank is {rank}", k.len())));
            }
            set.add(k, v)?;
        }
        let convention = convention.unwrap_or(Convention::DEFAULT);
        let mut words = pending_words.into_iter();
        let knots = knots
            .into_iter()
            .map(|k| match k {
                Some(k) => Ok(k),
                None => {
                    let (line, label, text) = words.next().expect("one pending word per knot line");
                    let word = ConwayWord::parse_with_default(&text, convention)
                        .and_then(|w| w.require_reduced().map(|_| w))
                        .map_err(|e| err(line, e.to_string()))?;
                    Ok(KnotRef::Word { label, word })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Scenario {
            name: name.unwrap_or_else(|| "unnamed".into()),
            convention,
            classes: set,
            torus: TorusClass::new(torus),
            knots,
        })
    }

    pub fn builtin(name: &str) -> Option<Scenario> {
        BUILTIN_SCENARIOS
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, text)| Scenario::parse(text).expect("built-in scenarios parse"))
    }

    /// A built-in name, or else a path to a scenario file.
    pub fn load(name_or_path: &str) -> Result<Scenario> {
        if let Some(s) = Scenario::builtin(name_or_path) {
            return Ok(s);
        }
        let text = std::fs::read_to_string(Path::new(name_or_path))
            .map_err(|e| Error::Invalid(format!("cannot read scenario '{name_or_path}': {e}")))?;
        Scenario::parse(&text)
    }

    /// Labels and verified Alexander polynomials of every referenced knot.
    pub fn resolve_knots(&self) -> Result<Vec<(String, LaurentPoly)>> {
        let mut out = Vec::new();
        for k in &self.knots {
            match k {
                KnotRef::Word { label, word } => {
                    let check = cross_check_word(word)?;
                    if let Some(why) = check.first_failure() {
                        return Err(Error::Verification(format!("{word}: {why}")));
                    }
                    out.push((label.clone(), check.alexander));
                }
                KnotRef::Family { count, generator } => {
                    for m in generate_family(*count, *generator, self.convention)? {
                        out.push((m.word.to_string(), m.alexander));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn run(&self) -> Result<TorusReport> {
        distinguish_tori(&self.classes, &self.torus, &self.resolve_knots()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_builtin() {
        let s = Scenario::builtin("k3-trefoil").unwrap();
        assert_eq!(s.classes.rank(), 2);
        let r = s.run().unwrap();
        assert_eq!(r.entries.len(), 1);
        assert_eq!(r.entries[0].lower_bound, 4);
    }

    #[test]
    fn parse_full_grammar() {
        let text = "# two knots\nname = demo\nrank = 3\ntorus = 0 1 0\nconvention = minus\n\
                    class = 0 0 0 : 1\nclass = 0 0 2 : -1\nknot = a C(2,2)\nfamily = 2\n";
        let s = Scenario::parse(text).unwrap();
        assert_eq!(s.name, "demo");
        assert_eq!(s.convention, Convention::Minus);
        assert_eq!(s.classes.len(), 2);
        assert_eq!(s.knots.len(), 2);
        match &s.knots[0] {
            KnotRef::Word { label, word } => {
                assert_eq!(label, "a");
                assert_eq!(word.convention(), Convention::Minus);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(s.resolve_knots().unwrap().len(), 3);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let bad = "rank = 2\ntorus = 1 0 0\nclass = 0 0 : 1\n";
        assert!(matches!(Scenario::parse(bad), Err(Error::Scenario { line: 2, .. })));
        let bad = "rank = 2\ntorus = 1 0\nclass = 0 0 : 1\nknot = x C(2,0)\n";
        assert!(matches!(Scenario::parse(bad), Err(Error::Scenario { line: 4, .. })));
        let bad = "rank = 2\ntorus = 1 0\nwhat = 3\n";
        assert!(matches!(Scenario::parse(bad), Err(Error::Scenario { line: 3, .. })));
        assert!(Scenario::parse("rank = 2\ntorus = 1 0\n").is_err());
    }
}
