use twobridge::conway::{classify, mirror, Convention, ConwayWord, MirrorMode};
use twobridge::knot::{cross_check_class, cross_check_word, route_sweep};
use twobridge::poly::{LaurentPoly, ZPoly};

fn plus(entries: &[i64]) -> ConwayWord {
    ConwayWord::new(entries.to_vec(), Convention::Plus).unwrap()
}

fn invariants(entries: &[i64]) -> (ZPoly, LaurentPoly) {
    let c = cross_check_word(&plus(entries)).unwrap();
    assert!(c.routes_agree() && c.identity_holds() && c.sanity_holds(), "{entries:?}");
    (c.conway, c.alexander)
}

/// word, fold class, Conway coefficients, symmetric Alexander coefficients
type TableRow = (&'static [i64], &'static str, &'static [i64], &'static [i64]);

fn sym(coeffs: &[i64]) -> LaurentPoly {
    // coefficients from t^0 upward; mirrored onto negative exponents
    let mut terms = vec![(0, coeffs[0])];
    for (j, &c) in coeffs.iter().enumerate().skip(1) {
        terms.push((j as i64, c));
        terms.push((-(j as i64), c));
    }
    LaurentPoly::from_terms(terms)
}

#[test]
fn knot_table_values() {
    let table: [TableRow; 6] = [
        (&[3], "3/1", &[1, 0, 1], &[-1, 1]),
        (&[2, 2], "5/2", &[1, 0, -1], &[3, -1]),
        (&[3, 2], "7/2", &[1, 0, 2], &[-3, 2]),
        (&[4, 2], "9/2", &[1, 0, -2], &[5, -2]),
        (&[3, 1, 2], "11/3", &[1, 0, -1, 0, -1], &[-3, 3, -1]),
        (&[2, 1, 1, 2], "13/5", &[1, 0, 1, 0, 1], &[5, -3, 1]),
    ];
    for (word, class, conway, alexander) in table {
        let (c, a) = invariants(word);
        assert_eq!(classify(&plus(word), MirrorMode::Fold).unwrap().to_string(), class, "{word:?}");
        assert_eq!(c, ZPoly::new(conway.iter().copied()), "{word:?}");
        assert_eq!(a, sym(alexander), "{word:?}");
    }
}

#[test]
fn torus_knots_closed_form() {
    for n in (3..=25).step_by(2) {
        let (c, a) = invariants(&[n]);
        let h = (n - 1) / 2;
        let expected = LaurentPoly::from_terms((-h..=h).map(|e| (e, if (h - e) % 2 == 0 { 1 } else { -1 })));
        assert_eq!(a, expected, "C({n})");
        assert_eq!(c.degree().unwrap() as i64, n - 1);
    }
}

#[test]
fn twist_knots_closed_form() {
    for b in 1..=30i64 {
        let (c, a) = invariants(&[b, 2]);
        let lead = if b % 2 == 1 { (b + 1) / 2 } else { -b / 2 };
        assert_eq!(c, ZPoly::new([1, 0, lead]), "C({b},2)");
        assert_eq!(a.span().unwrap(), 2);
    }
}

#[test]
fn invariants_ignore_mirror_and_reversal() {
    for (class, r) in route_sweep(45) {
        let check = r.unwrap();
        let word = twobridge::conway::simple_expansion(class.p(), class.q());
        for other in [mirror(&word), word.reversed(), word.with_convention(Convention::Minus)] {
            let c = cross_check_word(&other).unwrap();
            assert_eq!(c.conway, check.conway, "{other}");
            assert_eq!(c.alexander, check.alexander, "{other}");
        }
    }
}

#[test]
fn equivalent_words_share_invariants() {
    // 5/2 and 5/3 are the same knot: 2 * 3 = 1 mod 5
    let a = cross_check_word(&plus(&[2, 2])).unwrap();
    let b = cross_check_word(&plus(&[1, 1, 2])).unwrap();
    assert_eq!(a.alexander, b.alexander);
    let class = classify(&plus(&[2, 2]), MirrorMode::Sensitive).unwrap();
    assert_eq!(cross_check_class(&class).unwrap().conway, a.conway);
}
