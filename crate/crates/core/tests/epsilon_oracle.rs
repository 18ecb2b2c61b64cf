//! Independent Alexander polynomial oracle: the epsilon-sequence formula for
//! a two-bridge knot p/q, with q odd,
//!   e_i = (-1)^floor(i q / p),  D(t) = sum_k (-1)^k t^(e_1 + ... + e_k).
//! Arithmetic here is plain i64 on a BTreeMap, sharing nothing with the crate.

use std::collections::BTreeMap;

use twobridge::knot::{cross_check_class, knot_classes};

fn epsilon_alexander(p: i64, q: i64) -> BTreeMap<i64, i64> {
    let q = if q % 2 == 0 { p - q } else { q };
    let mut poly = BTreeMap::new();
    let mut s = 0i64;
    for k in 0..p {
        if k > 0 {
            s += if (k * q / p) % 2 == 0 { 1 } else { -1 };
        }
        *poly.entry(s).or_insert(0) += if k % 2 == 0 { 1 } else { -1 };
    }
    poly.retain(|_, c| *c != 0);
    normalize(poly)
}

/// Centre the exponents on zero and make the value at t = 1 positive.
fn normalize(poly: BTreeMap<i64, i64>) -> BTreeMap<i64, i64> {
    let lo = *poly.keys().next().unwrap();
    let hi = *poly.keys().next_back().unwrap();
    assert_eq!((hi - lo) % 2, 0, "odd span");
    let mid = (lo + hi) / 2;
    let sign = if poly.values().sum::<i64>() < 0 { -1 } else { 1 };
    poly.into_iter().map(|(e, c)| (e - mid, sign * c)).collect()
}

#[test]
fn trefoil_by_hand() {
    let d = epsilon_alexander(3, 1);
    assert_eq!(d, BTreeMap::from([(-1, 1), (0, -1), (1, 1)]));
    let d = epsilon_alexander(5, 2);
    assert_eq!(d, BTreeMap::from([(-1, -1), (0, 3), (1, -1)]));
}

#[test]
fn oracle_value_at_one_and_minus_one() {
    for p in (3..60).step_by(2) {
        for q in 1..p {
            if num_integer::Integer::gcd(&p, &q) != 1 {
                continue;
            }
            let d = epsilon_alexander(p, q);
            assert_eq!(d.values().sum::<i64>(), 1, "{p}/{q}");
            let at_minus_one: i64 = d.iter().map(|(e, c)| if e % 2 == 0 { *c } else { -c }).sum();
            assert_eq!(at_minus_one.abs(), p, "{p}/{q}");
        }
    }
}

#[test]
fn crate_routes_match_oracle() {
    let classes = knot_classes(101);
    assert!(classes.len() > 1000);
    for class in classes {
        let p: i64 = class.p().try_into().unwrap();
        let q: i64 = class.q().try_into().unwrap();
        let check = cross_check_class(&class).unwrap();
        let got: BTreeMap<i64, i64> = check
            .alexander
            .terms()
            .map(|(e, c)| (e, i64::try_from(c).unwrap()))
            .collect();
        assert_eq!(got, epsilon_alexander(p, q), "{class}");
        let fox: BTreeMap<i64, i64> = check
            .fox_alexander
            .terms()
            .map(|(e, c)| (e, i64::try_from(c).unwrap()))
            .collect();
        assert_eq!(fox, got, "{class}");
    }
}
