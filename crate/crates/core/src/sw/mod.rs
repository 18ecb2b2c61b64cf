//! Formal Seiberg–Witten bookkeeping on a free homology lattice: basic-class
//! sets, the knot-surgery product, the log-transform linear relation and the
//! divisibility invariant of differences of basic classes.

mod scenario;

pub use scenario::{Scenario, KnotRef, BUILTIN_SCENARIOS};

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// A homology class in the free lattice `Z^rank`.
pub type Class = Vec<i64>;

/// Finitely supported map from classes to nonzero integer values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicClassSet {
    rank: usize,
    support: BTreeMap<Class, BigInt>,
}

impl BasicClassSet {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Invalid("rank must be positive".into()));
        }
        Ok(BasicClassSet {
            rank,
            support: BTreeMap::new(),
        })
    }

    pub fn from_pairs(rank: usize, pairs: impl IntoIterator<Item = (Class, BigInt)>) -> Result<Self> {
        let mut s = Self::new(rank)?;
        for (k, v) in pairs {
            s.add(k, v)?;
        }
        Ok(s)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Adds `value` to the value at `class`, dropping the class if the sum
    /// is zero.
    pub fn add(&mut self, class: Class, value: BigInt) -> Result<()> {
        check_rank(self.rank, class.len())?;
        match self.support.entry(class) {
            Entry::Vacant(e) => {
                if !value.is_zero() {
                    e.insert(value);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
        Ok(())
    }

    pub fn get(&self, class: &[i64]) -> BigInt {
        self.support.get(class).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Class, &BigInt)> {
        self.support.iter()
    }

    /// Sum of all values.
    pub fn total(&self) -> BigInt {
        self.support.values().sum()
    }

    /// The set with every class moved by `v`.
    pub fn translate(&self, v: &[i64]) -> Result<Self> {
        check_rank(self.rank, v.len())?;
        Ok(BasicClassSet {
            rank: self.rank,
            support: self
                .support
                .iter()
                .map(|(k, c)| (k.iter().zip(v).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        })
    }

    /// The set with every class multiplied by `s`; values at colliding
    /// classes are summed.
    pub fn scale_classes(&self, s: i64) -> Self {
        let mut out = BasicClassSet {
            rank: self.rank,
            support: BTreeMap::new(),
        };
        for (k, c) in &self.support {
            out.add(k.iter().map(|a| a * s).collect(), c.clone()).expect("same rank");
        }
        out
    }
}

impl fmt::Display for BasicClassSet {
    /// `{(2,0) -> 1, (0,0) -> -1}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .support
            .iter()
            .map(|(k, v)| format!("{} -> {}", format_class(k), v))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn format_class(k: &[i64]) -> String {
    let parts: Vec<String> = k.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn check_rank(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::RankMismatch { expected, found })
    }
}

/// The homology class of an embedded torus; zero means null-homologous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusClass {
    vector: Class,
}

impl TorusClass {
    pub fn new(vector: Class) -> Self {
        TorusClass { vector }
    }

    pub fn vector(&self) -> &[i64] {
        &self.vector
    }

    pub fn rank(&self) -> usize {
        self.vector.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vector.iter().all(|&x| x == 0)
    }
}

/// Multiplies the basic classes by `delta(2T)`: class `κ` with value `c`
/// contributes `c·d_j` at `κ + 2jT` for each coefficient `d_j` of `t^j`.
pub fn knot_surgery(sw: &BasicClassSet, torus: &TorusClass, delta: &LaurentPoly) -> Result<BasicClassSet> {
    check_rank(sw.rank, torus.rank())?;
    let mut out = BasicClassSet::new(sw.rank)?;
    for (k, c) in &sw.support {
        for (j, d) in delta.terms() {
            let shifted: Class = k.iter().zip(&torus.vector).map(|(a, t)| a + 2 * j * t).collect();
            out.add(shifted, c * d)?;
        }
    }
    Ok(out)
}

/// Log-transform coefficients; `gcd(p, q, r) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LogTransformParams {
    p: i64,
    q: i64,
    r: i64,
}

impl LogTransformParams {
    pub fn new(p: i64, q: i64, r: i64) -> Result<Self> {
        if p.gcd(&q).gcd(&r) != 1 {
            return Err(Error::NotCoprime((p, q, r)));
        }
        Ok(LogTransformParams { p, q, r })
    }

    pub fn triple(&self) -> (i64, i64, i64) {
        (self.p, self.q, self.r)
    }
}

/// For each relative class `k` the three sums `S(1,0,0)(k)`, `S(0,1,0)(k)`,
/// `S(0,0,1)(k)`. Relative classes are opaque labels.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RelativeSWVector {
    entries: BTreeMap<Class, [BigInt; 3]>,
}

impl RelativeSWVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, k: Class, sums: [BigInt; 3]) {
        if sums.iter().all(Zero::is_zero) {
            self.entries.remove(&k);
        } else {
            self.entries.insert(k, sums);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Class, &[BigInt; 3])> {
        self.entries.iter()
    }
}

/// `p·S(1,0,0)(k) + q·S(0,1,0)(k) + r·S(0,0,1)(k)` for every `k`, zero
/// results omitted.
pub fn mms_combine(params: LogTransformParams, rel: &RelativeSWVector) -> BTreeMap<Class, BigInt> {
    let (p, q, r) = params.triple();
    mms_combine_raw(p, q, r, rel)
}

/// [`mms_combine`] without the coprimality gate.
pub fn mms_combine_raw(p: i64, q: i64, r: i64, rel: &RelativeSWVector) -> BTreeMap<Class, BigInt> {
    rel.entries
        .iter()
        .map(|(k, [a, b, c])| (k.clone(), a * p + b * q + c * r))
        .filter(|(_, v)| !v.is_zero())
        .collect()
}

/// gcd of the absolute values of the entries.
pub fn divisibility(v: &[i64]) -> Result<u64> {
    let d = v.iter().fold(0u64, |g, &x| g.gcd(&x.unsigned_abs()));
    if d == 0 {
        Err(Error::ZeroVector)
    } else {
        Ok(d)
    }
}

/// Largest divisibility of a difference of two distinct classes in any one
/// candidate set; 0 when no set has two classes. A lower bound for the
/// torus invariant when the candidates are admissible transforms.
pub fn b_invariant(candidates: &[BasicClassSet]) -> u64 {
    let mut best = 0;
    for set in candidates {
        let classes: Vec<&Class> = set.support.keys().collect();
        for (i, a) in classes.iter().enumerate() {
            for b in &classes[i + 1..] {
                let diff: Class = a.iter().zip(b.iter()).map(|(x, y)| x - y).collect();
                if let Ok(d) = divisibility(&diff) {
                    best = best.max(d);
                }
            }
        }
    }
    best
}

/// How a knot's lower bound relates to the degree of its Alexander
/// polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainStatus {
    /// Singleton basic classes: the bound equals `2·d·span` exactly.
    Exact,
    /// The bound is at least `span`.
    Holds,
    /// Singleton model with a bound other than `2·d·span`.
    Violated,
    /// Several basic classes and the bound is below `span`; the geometric
    /// hypotheses are not modelled, so nothing is claimed.
    Unverified,
}

impl ChainStatus {
    pub fn name(self) -> &'static str {
        match self {
            ChainStatus::Exact => "exact",
            ChainStatus::Holds => "holds",
            ChainStatus::Violated => "violated",
            ChainStatus::Unverified => "unverified",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusEntry {
    pub label: String,
    pub span: u64,
    pub lower_bound: u64,
    pub status: ChainStatus,
    pub classes: BasicClassSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusReport {
    pub entries: Vec<TorusEntry>,
    /// Indices of knots sharing a lower bound, ordered by the bound.
    pub groups: Vec<(u64, Vec<usize>)>,
}

impl TorusReport {
    pub fn all_distinct(&self) -> bool {
        self.groups.iter().all(|(_, g)| g.len() == 1)
    }

    pub fn any_violated(&self) -> bool {
        self.entries.iter().any(|e| e.status == ChainStatus::Violated)
    }

    /// One tab-separated record per knot.
    pub fn machine_lines(&self) -> Vec<String> {
        self.entries
            .iter()
            .map(|e| {
                format!(
                    "knot={}\tspan={}\tb_lower={}\tchain={}",
                    e.label,
                    e.span,
                    e.lower_bound,
                    e.status.name()
                )
            })
            .collect()
    }
}

impl fmt::Display for TorusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:<24} {:>6} {:>12}  chain", "knot", "span", "B lower bound")?;
        for e in &self.entries {
            writeln!(f, "{:<24} {:>6} {:>12}  {}", e.label, e.span, e.lower_bound, e.status.name())?;
        }
        for (bound, group) in &self.groups {
            if group.len() > 1 {
                let names: Vec<&str> = group.iter().map(|&i| self.entries[i].label.as_str()).collect();
                writeln!(f, "not distinguished by B (lower bound {bound}): {}", names.join(", "))?;
            }
        }
        let distinct = self.groups.len();
        write!(f, "{distinct} distinct lower bound(s) over {} knot(s)", self.entries.len())
    }
}

/// Surgers the torus with each knot and partitions the knots by the
/// resulting lower bound.
pub fn distinguish_tori(
    sw: &BasicClassSet,
    torus: &TorusClass,
    knots: &[(String, LaurentPoly)],
) -> Result<TorusReport> {
    check_rank(sw.rank, torus.rank())?;
    if sw.is_empty() {
        return Err(Error::Invalid("the basic-class set must be nonempty".into()));
    }
    let d = divisibility(torus.vector()).map_err(|_| Error::Invalid("torus class must be nonzero".into()))?;
    let singleton = sw.len() == 1;
    let mut entries = Vec::with_capacity(knots.len());
    for (label, delta) in knots {
        let classes = knot_surgery(sw, torus, delta)?;
        let lower_bound = b_invariant(std::slice::from_ref(&classes));
        let span = delta.span()? as u64;
        let status = if singleton {
            if lower_bound == 2 * d * span {
                ChainStatus::Exact
            } else {
                ChainStatus::Violated
            }
        } else if lower_bound >= span {
            ChainStatus::Holds
        } else {
            ChainStatus::Unverified
        };
        entries.push(TorusEntry {
            label: label.clone(),
            span,
            lower_bound,
            status,
            classes,
        });
    }
    let mut by_bound: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, e) in entries.iter().enumerate() {
        by_bound.entry(e.lower_bound).or_default().push(i);
    }
    Ok(TorusReport {
        entries,
        groups: by_bound.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(rank: usize, pairs: &[(&[i64], i64)]) -> BasicClassSet {
        BasicClassSet::from_pairs(rank, pairs.iter().map(|(k, v)| (k.to_vec(), BigInt::from(*v)))).unwrap()
    }

    fn trefoil() -> LaurentPoly {
        LaurentPoly::from_terms([(1, 1), (0, -1), (-1, 1)])
    }

    #[test]
    fn surgery_examples() {
        let sw = set(2, &[(&[0, 0], 1)]);
        let t = TorusClass::new(vec![1, 0]);
        assert_eq!(knot_surgery(&sw, &t, &LaurentPoly::one()).unwrap(), sw);
        assert_eq!(
            knot_surgery(&sw, &t, &trefoil()).unwrap(),
            set(2, &[(&[2, 0], 1), (&[0, 0], -1), (&[-2, 0], 1)])
        );
        let sw = set(2, &[(&[1, 0], 2)]);
        let null = TorusClass::new(vec![0, 0]);
        assert_eq!(knot_surgery(&sw, &null, &trefoil()).unwrap(), sw);
        assert_eq!(
            knot_surgery(&sw, &TorusClass::new(vec![1]), &trefoil()),
            Err(Error::RankMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn mms_examples() {
        let mut rel = RelativeSWVector::new();
        rel.insert(vec![0], [1.into(), (-1).into(), 2.into()]);
        rel.insert(vec![1], [0.into(), 0.into(), 5.into()]);
        let basis = mms_combine(LogTransformParams::new(1, 0, 0).unwrap(), &rel);
        assert_eq!(basis, BTreeMap::from([(vec![0], BigInt::from(1))]));
        let third = mms_combine(LogTransformParams::new(0, 0, 1).unwrap(), &rel);
        assert_eq!(third[&vec![1]], BigInt::from(5));
        let mixed = mms_combine(LogTransformParams::new(2, 3, 1).unwrap(), &rel);
        assert_eq!(mixed[&vec![0]], BigInt::from(1));
        assert_eq!(LogTransformParams::new(2, 4, 6), Err(Error::NotCoprime((2, 4, 6))));
        assert!(LogTransformParams::new(0, 0, 0).is_err());
    }

    #[test]
    fn divisibility_examples() {
        assert_eq!(divisibility(&[4, 0]).unwrap(), 4);
        assert_eq!(divisibility(&[6, 9]).unwrap(), 3);
        assert_eq!(divisibility(&[0, 0, 5]).unwrap(), 5);
        assert_eq!(divisibility(&[-6, 4]).unwrap(), 2);
        assert_eq!(divisibility(&[0, 0]), Err(Error::ZeroVector));
    }

    #[test]
    fn b_invariant_examples() {
        let surgered = set(2, &[(&[2, 0], 1), (&[0, 0], -1), (&[-2, 0], 1)]);
        assert_eq!(b_invariant(std::slice::from_ref(&surgered)), 4);
        assert_eq!(b_invariant(&[set(2, &[(&[0, 0], 1)])]), 0);
        let other = set(2, &[(&[0, 0], 1), (&[0, 6], 1)]);
        assert_eq!(b_invariant(&[surgered, other]), 6);
        assert_eq!(b_invariant(&[]), 0);
    }

    #[test]
    fn distinguish_examples() {
        let sw = set(2, &[(&[0, 0], 1)]);
        let t = TorusClass::new(vec![1, 0]);
        let fig8 = LaurentPoly::from_terms([(1, -1), (0, 3), (-1, -1)]);
        let knots = vec![
            ("unknot".to_string(), LaurentPoly::one()),
            ("trefoil".to_string(), trefoil()),
            ("figure-eight".to_string(), fig8),
        ];
        let r = distinguish_tori(&sw, &t, &knots).unwrap();
        let bounds: Vec<u64> = r.entries.iter().map(|e| e.lower_bound).collect();
        assert_eq!(bounds, [0, 4, 4]);
        assert!(r.entries.iter().all(|e| e.status == ChainStatus::Exact));
        assert!(!r.all_distinct());
        assert_eq!(r.groups, vec![(0, vec![0]), (4, vec![1, 2])]);
        assert!(r.to_string().contains("not distinguished by B"));
    }

    #[test]
    fn distinguish_rejects_degenerate_input() {
        let t = TorusClass::new(vec![1, 0]);
        assert!(distinguish_tori(&BasicClassSet::new(2).unwrap(), &t, &[]).is_err());
        let sw = set(2, &[(&[0, 0], 1)]);
        assert!(distinguish_tori(&sw, &TorusClass::new(vec![0, 0]), &[]).is_err());
        assert!(distinguish_tori(&sw, &TorusClass::new(vec![1]), &[]).is_err());
    }

    #[test]
    fn zero_values_are_dropped() {
        let mut s = set(1, &[(&[1], 2)]);
        s.add(vec![1], BigInt::from(-2)).unwrap();
        assert!(s.is_empty());
    }
}
