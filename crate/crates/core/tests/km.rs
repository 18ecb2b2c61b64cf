use twobridge::conway::{classify, Convention, MirrorMode, TwoBridgeClass};
use twobridge::km::{
    generate_family, is_km_expressible, km_words_in_range, random_km_words, unknotting_move, Expressibility,
    FamilyRecord, Generator, KMWord,
};
use twobridge::Error;

#[test]
fn default_family_degrees() {
    let family = generate_family(12, Generator::default(), Convention::Plus).unwrap();
    let degrees: Vec<usize> = family.iter().map(|m| m.degree()).collect();
    assert_eq!(degrees, (1..=12).map(|k| 2 * k).collect::<Vec<_>>());
    for m in &family {
        assert!(unknotting_move(&m.km, Convention::Plus), "{}", m.word);
        assert_eq!(m.alexander.span().unwrap() as usize, m.degree());
        let line = m.record().to_string();
        assert_eq!(line.parse::<FamilyRecord>().unwrap(), m.record());
    }
}

#[test]
fn family_under_minus_rule() {
    let family = generate_family(8, Generator::EvenPalindrome, Convention::Minus).unwrap();
    assert!(family.windows(2).all(|w| w[0].degree() < w[1].degree()));
}

#[test]
fn twist_family_cannot_increase() {
    assert!(generate_family(1, Generator::Twist, Convention::Plus).is_ok());
    assert!(matches!(
        generate_family(3, Generator::Twist, Convention::Plus),
        Err(Error::Verification(_))
    ));
    assert!(matches!(generate_family(0, Generator::Twist, Convention::Plus), Err(Error::Invalid(_))));
}

#[test]
fn exhaustive_and_random_words_unknot() {
    let words = km_words_in_range(5, 2, 3);
    assert!(!words.is_empty());
    let random = random_km_words(300, 9, 12, 5, 7);
    assert_eq!(random.len(), 300);
    for km in words.iter().chain(&random) {
        for conv in [Convention::Plus, Convention::Minus] {
            assert!(unknotting_move(km, conv), "{km} {conv}");
        }
    }
}

#[test]
fn realize_depends_on_rule() {
    let km = KMWord::new(1, vec![], 1).unwrap();
    let trefoil = km.realize(Convention::Plus).unwrap();
    assert_eq!(classify(&trefoil, MirrorMode::Fold).unwrap().to_string(), "3/1");
    assert!(matches!(km.realize(Convention::Minus), Err(Error::TrivialKnot(_))));
    assert!(KMWord::new(0, vec![], 1).is_err());
    assert!(KMWord::new(2, vec![0], 1).is_err());
    assert!(KMWord::new(2, vec![1], 0).is_err());
}

#[test]
fn expressibility_search() {
    let fig8 = TwoBridgeClass::from_pq(5, 2, MirrorMode::Fold).unwrap();
    assert!(matches!(
        is_km_expressible(&fig8, 4, 4, Convention::Plus).unwrap(),
        Expressibility::Expressible(_)
    ));
    // 7/1 has unknotting number three
    let torus = TwoBridgeClass::from_pq(7, 1, MirrorMode::Fold).unwrap();
    assert_eq!(is_km_expressible(&torus, 6, 4, Convention::Plus).unwrap(), Expressibility::Inconclusive);
}
