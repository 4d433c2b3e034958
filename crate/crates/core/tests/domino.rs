//! Domino tableaux through the public API.

use std::collections::BTreeMap;

use ribbonlab::domino::{check_increasing_insertion, inverse_rsk, rsk, ColoredBiword, Domino, DominoTableau};
use ribbonlab::ribbonfn::enumerate_tableaux;
use ribbonlab::{Partition, SkewShape};

fn p(parts: &[usize]) -> Partition {
    Partition::from(parts)
}

#[test]
fn validation_rejects_malformed_tableaux() {
    // (2) is not a 2-core.
    assert!(DominoTableau::new(p(&[2]), vec![]).is_err());
    // Label 0.
    assert!(DominoTableau::new(p(&[]), vec![(0, Domino::horizontal(0, 0))]).is_err());
    // Overlap.
    assert!(DominoTableau::new(p(&[]), vec![(1, Domino::horizontal(0, 0)), (2, Domino::vertical(0, 1))]).is_err());
    // Not a shape.
    assert!(DominoTableau::new(p(&[]), vec![(1, Domino::horizontal(1, 0))]).is_err());
    // Stacked horizontal dominoes under one label are not a strip; side by
    // side vertical ones are.
    assert!(DominoTableau::new(p(&[]), vec![(1, Domino::horizontal(0, 0)), (1, Domino::horizontal(1, 0))]).is_err());
    assert!(DominoTableau::new(p(&[]), vec![(1, Domino::vertical(0, 0)), (1, Domino::vertical(0, 1))]).is_ok());
}

#[test]
fn tableaux_agree_with_the_ribbon_enumeration() {
    for lambda in [p(&[4, 2]), p(&[3, 3]), p(&[3, 2, 1]), p(&[2, 2, 2])] {
        let shape = SkewShape::new(lambda.clone(), ribbonlab::partitions::n_core(&lambda, 2)).unwrap();
        for t in enumerate_tableaux(&shape, 2, 3) {
            let d = DominoTableau::from_ribbon_tableau(&t).unwrap();
            let again = DominoTableau::new(d.core().clone(), d.dominoes().to_vec()).unwrap();
            assert_eq!(again.spin(), t.spin);
            // Trailing unused labels are not stored.
            let mut chain = t.chain.clone();
            while chain.len() > 1 && chain[chain.len() - 1] == chain[chain.len() - 2] {
                chain.pop();
            }
            assert_eq!(again.to_ribbon_tableau().chain, chain);
        }
    }
}

#[test]
fn correspondence_is_a_bijection_on_small_words() {
    // Distinct words give distinct pairs, and every pair with the same shape
    // and matching weights is reached exactly once.
    let mut seen = BTreeMap::new();
    for len in 0..=3 {
        for w in ColoredBiword::all(len, 2, 2) {
            let (pt, qt) = rsk(&w);
            let key = (serde_json::to_string(&pt).unwrap(), serde_json::to_string(&qt).unwrap());
            assert!(seen.insert(key, w.clone()).is_none(), "collision at {w}");
            assert_eq!(inverse_rsk(&pt, &qt).unwrap(), w);
        }
    }
    let pairs = |shape: &Partition| {
        let s = SkewShape::straight(shape.clone());
        enumerate_tableaux(&s, 2, 2).len().pow(2)
    };
    let total: usize = Partition::up_to(6).iter().filter(|l| ribbonlab::partitions::n_core(l, 2).is_empty()).map(pairs).sum();
    assert_eq!(seen.len(), total);
}

#[test]
fn insertion_order_matches_the_domino_order() {
    let mut t = DominoTableau::empty(p(&[]));
    for (c, j) in [(0, 2), (1, 1), (0, 1)] {
        t = t.insert(c, j);
    }
    for c1 in 0..=1 {
        for j1 in 1..=3 {
            for c2 in 0..=1 {
                for j2 in 1..=3 {
                    assert!(check_increasing_insertion(&t, (c1, j1), (c2, j2)), "({c1},{j1}) then ({c2},{j2})");
                }
            }
        }
    }
}

#[test]
fn mismatched_pairs_are_rejected() {
    let w: ColoredBiword = "0 1 1\n1 2 1".parse().unwrap();
    let (pt, _) = rsk(&w);
    let other: ColoredBiword = "0 1 1".parse().unwrap();
    let (_, qt) = rsk(&other);
    assert!(inverse_rsk(&pt, &qt).is_err());
}

#[test]
fn biword_text_round_trip() {
    let w: ColoredBiword = "# example\n1 4 1\n0,3,2\n\n0 2 4\n1 1 3".parse().unwrap();
    assert_eq!(w.len(), 4);
    assert_eq!(w.to_string().parse::<ColoredBiword>().unwrap(), w);
    assert!("2 1 1".parse::<ColoredBiword>().is_err());
    assert!("0 1".parse::<ColoredBiword>().is_err());
    assert!("0 0 1".parse::<ColoredBiword>().is_err());
}

#[test]
fn json_shape() {
    let t = DominoTableau::empty(p(&[])).insert(1, 2).insert(0, 1);
    let v = serde_json::to_value(&t).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["dominoes"].as_array().unwrap().len(), 2);
    assert_eq!(v["spin"], t.spin());
}
