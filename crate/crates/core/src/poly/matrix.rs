use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use super::laurent::LaurentPoly;

/// Sparse square matrix over `Z[t, t^-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: Vec<BTreeMap<usize, LaurentPoly>>,
}

impl LaurentMatrix {
    pub fn zeros(n: usize) -> Self {
        LaurentMatrix {
            rows: vec![BTreeMap::new(); n],
        }
    }

    pub fn from_dense(entries: Vec<Vec<LaurentPoly>>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n);
        for (i, row) in entries.into_iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> LaurentPoly {
        self.rows[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        assert!(i < self.size() && j < self.size());
        if v.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, v);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &LaurentPoly) {
        let cur = self.get(i, j);
        self.set(i, j, &cur + v);
    }

    /// Deletes row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> LaurentMatrix {
        let n = self.size();
        let mut out = Self::zeros(n - 1);
        for (r, row) in self.rows.iter().enumerate() {
            if r == i {
                continue;
            }
            let rr = if r > i { r - 1 } else { r };
            for (&c, v) in row {
                if c == j {
                    continue;
                }
                let cc = if c > j { c - 1 } else { c };
                out.rows[rr].insert(cc, v.clone());
            }
        }
        out
    }

    /// Exact determinant.
    ///
    /// Eliminates on unit pivots (`±t^k`) first, choosing the entry of least
    /// Markowitz cost each step; the division-free block that remains is
    /// finished by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> LaurentPoly {
        let n = self.size();
        let mut rows = self.rows.clone();
        let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for (r, row) in rows.iter().enumerate() {
            for &c in row.keys() {
                cols[c].insert(r);
            }
        }
        let mut row_live = vec![true; n];
        let mut col_live = vec![true; n];
        let mut det = LaurentPoly::one();
        let mut negate = false;

        loop {
            let mut best: Option<(usize, usize, usize)> = None;
            'search: for r in (0..n).filter(|&r| row_live[r]) {
                for (&c, v) in &rows[r] {
                    if !v.is_unit() {
                        continue;
                    }
                    let cost = (rows[r].len() - 1) * (cols[c].len() - 1);
                    if best.is_none_or(|(_, _, b)| cost < b) {
                        best = Some((r, c, cost));
                        if cost == 0 {
                            break 'search;
                        }
                    }
                }
            }
            let Some((r, c, _)) = best else { break };

            let pos_r = (0..r).filter(|&i| row_live[i]).count();
            let pos_c = (0..c).filter(|&j| col_live[j]).count();
            if (pos_r + pos_c) % 2 == 1 {
                negate = !negate;
            }
            let pivot = rows[r][&c].clone();
            let unit_exp = pivot.min_exp().unwrap();
            let inverse = LaurentPoly::monomial(pivot.coeff(unit_exp), -unit_exp);
            det = &det * &pivot;

            let pivot_row: Vec<(usize, LaurentPoly)> = rows[r]
                .iter()
                .filter(|(&j, _)| j != c)
                .map(|(&j, v)| (j, v.clone()))
                .collect();
            let targets: Vec<usize> = cols[c].iter().copied().filter(|&i| i != r).collect();
            for i in targets {
                let factor = &rows[i].remove(&c).unwrap() * &inverse;
                for (j, v) in &pivot_row {
                    let updated = match rows[i].get(j) {
                        Some(cur) => cur - &(&factor * v),
                        None => -(&factor * v),
                    };
                    if updated.is_zero() {
                        rows[i].remove(j);
                        cols[*j].remove(&i);
                    } else {
                        rows[i].insert(*j, updated);
                        cols[*j].insert(i);
                    }
                }
            }
            for &j in rows[r].keys() {
                cols[j].remove(&r);
            }
            rows[r].clear();
            cols[c].clear();
            row_live[r] = false;
            col_live[c] = false;
        }

        let live_rows: Vec<usize> = (0..n).filter(|&r| row_live[r]).collect();
        let live_cols: Vec<usize> = (0..n).filter(|&c| col_live[c]).collect();
        let dense: Vec<Vec<LaurentPoly>> = live_rows
            .iter()
            .map(|&r| {
                live_cols
                    .iter()
                    .map(|c| rows[r].get(c).cloned().unwrap_or_default())
                    .collect()
            })
            .collect();
        let rest = bareiss(dense);
        let det = &det * &rest;
        if negate {
            -det
        } else {
            det
        }
    }
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn bareiss(mut a: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let m = a.len();
    if m == 0 {
        return LaurentPoly::one();
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..m - 1 {
        if a[k][k].is_zero() {
            match (k + 1..m).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[m - 1][m - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of an integer matrix (the `t = 1` specialisation used for
/// unimodularity checks).
pub fn integer_determinant(entries: &[Vec<i64>]) -> BigInt {
    let lifted = entries
        .iter()
        .map(|row| row.iter().map(|&x| LaurentPoly::constant(x)).collect())
        .collect();
    let d = LaurentMatrix::from_dense(lifted).determinant();
    if d.is_zero() {
        BigInt::default()
    } else {
        d.coeff(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    /// Leibniz expansion, the oracle for small matrices.
    fn leibniz(a: &[Vec<LaurentPoly>]) -> LaurentPoly {
        let n = a.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = LaurentPoly::zero();
        fn rec(k: usize, perm: &mut Vec<usize>, a: &[Vec<LaurentPoly>], total: &mut LaurentPoly) {
            let n = perm.len();
            if k == n {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| perm[i] > perm[j])
                    .count();
                let mut term = LaurentPoly::one();
                for (i, &p) in perm.iter().enumerate() {
                    term = &term * &a[i][p];
                }
                *total = if inversions % 2 == 0 { &*total + &term } else { &*total - &term };
                return;
            }
            for i in k..n {
                perm.swap(k, i);
                rec(k + 1, perm, a, total);
                perm.swap(k, i);
            }
        }
        rec(0, &mut perm, a, &mut total);
        total
    }

    #[test]
    fn two_by_two_seifert_example() {
        // V = [[-1,1],[0,-1]], V - tV^T = [[-1+t, 1], [-t, -1+t]]
        let m = LaurentMatrix::from_dense(vec![
            vec![lp(&[(0, -1), (1, 1)]), lp(&[(0, 1)])],
            vec![lp(&[(1, -1)]), lp(&[(0, -1), (1, 1)])],
        ]);
        // (t-1)^2 + t
        assert_eq!(m.determinant(), lp(&[(0, 1), (1, -1), (2, 1)]));
    }

    #[test]
    fn empty_matrix_has_unit_determinant() {
        assert_eq!(LaurentMatrix::zeros(0).determinant(), LaurentPoly::one());
    }

    #[test]
    fn agrees_with_leibniz_on_pseudo_random_matrices() {
        let mut seed = 0x2545_f491_u64;
        let mut next = || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for n in 1..=5 {
            for _ in 0..20 {
                let a: Vec<Vec<LaurentPoly>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| match next() % 5 {
                                0 => LaurentPoly::zero(),
                                1 => lp(&[(0, 1)]),
                                2 => lp(&[(1, -1)]),
                                3 => lp(&[(0, 1), (1, -1)]),
                                _ => lp(&[((next() % 3) as i64 - 1, (next() % 5) as i64 - 2), (2, 1)]),
                            })
                            .collect()
                    })
                    .collect();
                let expected = leibniz(&a);
                assert_eq!(LaurentMatrix::from_dense(a.clone()).determinant(), expected);
                assert_eq!(bareiss(a), expected);
            }
        }
    }

    #[test]
    fn integer_determinant_examples() {
        assert_eq!(integer_determinant(&[vec![0, 1], vec![-1, 0]]), BigInt::from(1));
        assert_eq!(integer_determinant(&[vec![2, 3], vec![4, 6]]), BigInt::from(0));
        assert_eq!(
            integer_determinant(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]),
            BigInt::from(6)
        );
    }

    #[test]
    fn minor_deletes_row_and_column() {
        let mut m = LaurentMatrix::zeros(3);
        m.set(0, 0, lp(&[(0, 1)]));
        m.set(1, 1, lp(&[(0, 2)]));
        m.set(2, 2, lp(&[(0, 3)]));
        assert_eq!(m.minor(0, 0).determinant(), lp(&[(0, 6)]));
    }
}
