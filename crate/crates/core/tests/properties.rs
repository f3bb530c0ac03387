mod common;

use std::cmp::Ordering;
use std::collections::BTreeSet;

use common::{all_words, params_grid};
use perfect_necklace::format::{parse_word, render_word};
use perfect_necklace::{
    check_perfect, cmp_succ, lyndon_list, necklace_word, reduce, rotate_left, rotate_right,
    rotation_class, Mode, OutputFormat, Pair, Params, Word,
};
use proptest::prelude::*;

fn all_pairs(p: &Params) -> Vec<Pair> {
    all_words(p.s(), p.n())
        .into_iter()
        .flat_map(|w| (0..p.k()).map(move |u| (w.clone(), u)))
        .map(|(w, u)| Pair::new(w, u, p).unwrap())
        .collect()
}

#[test]
fn succ_is_a_total_order() {
    for (n, k) in [
        (1, 1),
        (1, 2),
        (1, 4),
        (2, 1),
        (2, 2),
        (2, 4),
        (3, 1),
        (4, 1),
        (4, 2),
        (4, 4),
    ] {
        let p = Params::new(2, n, k).unwrap();
        let pairs = all_pairs(&p);
        for a in &pairs {
            for b in &pairs {
                let ab = cmp_succ(a, b, &p).unwrap();
                assert_eq!(ab, cmp_succ(b, a, &p).unwrap().reverse());
                assert_eq!(ab == Ordering::Equal, a == b);
            }
        }
        // transitivity: sorting by ≻ must be consistent with every pairwise check
        let mut sorted = pairs.clone();
        sorted.sort_by(|a, b| cmp_succ(b, a, &p).unwrap());
        for i in 0..sorted.len() {
            for j in i + 1..sorted.len() {
                assert_eq!(
                    cmp_succ(&sorted[i], &sorted[j], &p).unwrap(),
                    Ordering::Greater
                );
            }
        }
    }
}

fn arb_pair() -> impl Strategy<Value = (Params, Pair)> {
    (2u32..5, 1usize..7, 1usize..4, any::<bool>())
        .prop_filter_map("valid params", |(s, n, t, multiple)| {
            let k = if multiple {
                n * t
            } else {
                (1..=n).filter(|d| n % d == 0).nth(t - 1)?
            };
            Params::new(s, n, k).ok()
        })
        .prop_flat_map(|p| {
            (
                Just(p),
                proptest::collection::vec(0..p.s(), p.n()),
                0..p.k(),
            )
        })
        .prop_map(|(p, w, u)| {
            let a = Pair::new(Word::new(w), u, &p).unwrap();
            (p, a)
        })
}

proptest! {
    #[test]
    fn rotations_are_inverse((p, a) in arb_pair()) {
        let r = rotate_right(&a, &p).unwrap();
        prop_assert_eq!(rotate_left(&r, &p).unwrap(), a.clone());
        let mut cur = a.clone();
        for _ in 0..p.orbit() {
            cur = rotate_right(&cur, &p).unwrap();
        }
        prop_assert_eq!(cur, a.clone());
        let class = rotation_class(&a, &p).unwrap();
        prop_assert!(class.len() <= p.orbit());
        prop_assert!(class.iter().all(|c| c.residue() < p.k()));
    }

    #[test]
    fn plain_text_round_trips(w in proptest::collection::vec(0u32..10, 0..40), s in 2u32..=10) {
        let w: Vec<u32> = w.into_iter().map(|c| c % s).collect();
        let text = render_word(&w, s);
        prop_assert_eq!(parse_word(&text, s, OutputFormat::Plain).unwrap().to_vec(), w.clone());
        prop_assert_eq!(parse_word(&format!("{text}\n"), s, OutputFormat::Blocks).unwrap().to_vec(), w);
    }

    #[test]
    fn wide_alphabets_round_trip(w in proptest::collection::vec(0u32..1000, 1..40)) {
        let text = render_word(&w, 1000);
        prop_assert_eq!(parse_word(&text, 1000, OutputFormat::Plain).unwrap().to_vec(), w.clone());
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(parse_word(&json, 1000, OutputFormat::Json).unwrap().to_vec(), w);
    }
}

#[test]
fn reduction_is_idempotent() {
    for p in params_grid(&[2, 3], &[1, 2, 3, 4, 6], &[], u64::MAX) {
        assert_eq!(p.mode(), Mode::KDividesN);
        for l in lyndon_list(&p) {
            let embedded = Pair::zero(l.word().repeat(p.n() / l.len()), &p).unwrap();
            assert_eq!(reduce(&embedded, &p).unwrap(), l);
        }
    }
}

#[test]
fn lyndon_pairs_strictly_dominate_their_rotations() {
    for p in params_grid(&[2, 3], &[1, 2, 3, 4, 6], &[2, 3], u64::MAX) {
        for l in lyndon_list(&p) {
            let pl = Params::new(p.s(), l.len(), p.k()).unwrap();
            let a = l.as_pair();
            for r in rotation_class(&a, &pl).unwrap().iter().skip(1) {
                assert_eq!(a.succ_cmp(r), Ordering::Greater, "{p}: {l} vs {r}");
            }
        }
    }
}

#[test]
fn lyndon_pairs_with_k_one_are_lyndon_words() {
    let p = Params::new(2, 5, 1).unwrap();
    let words: Vec<String> = lyndon_list(&p).map(|l| l.word().to_string()).collect();
    assert_eq!(
        words,
        ["1", "11110", "11100", "11010", "11000", "10100", "10000", "0"]
    );
}

#[test]
fn windows_biject_onto_pairs() {
    for p in params_grid(&[2, 3], &[1, 2, 3, 4], &[2, 3], 5_000) {
        let x = necklace_word(&p).unwrap();
        let len = x.len();
        let seen: BTreeSet<(Vec<u32>, usize)> = (0..len)
            .map(|i| ((0..p.n()).map(|t| x[(i + t) % len]).collect(), i % p.k()))
            .collect();
        assert_eq!(seen.len(), len, "{p}");
        let expected: BTreeSet<(Vec<u32>, usize)> = all_words(p.s(), p.n())
            .into_iter()
            .flat_map(|w| (0..p.k()).map(move |u| (w.to_vec(), u)))
            .collect();
        assert_eq!(seen, expected, "{p}");
    }
}

#[test]
fn every_rotation_of_a_perfect_necklace_is_perfect() {
    for p in params_grid(&[2, 3], &[1, 2, 3], &[2], 200) {
        let x = necklace_word(&p).unwrap();
        for r in 0..x.len() {
            assert!(
                check_perfect(&x.rotated(r), &p).unwrap().is_perfect,
                "{p} rotation {r}"
            );
        }
    }
}

#[test]
fn necklace_is_its_own_greatest_rotation() {
    for p in params_grid(&[2, 3, 4], &[1, 2, 3, 4, 5, 6], &[2, 3], 5_000) {
        let x = necklace_word(&p).unwrap();
        let best = (0..x.len()).map(|r| x.rotated(r)).max().unwrap();
        assert_eq!(best, x, "{p}");
    }
}

#[test]
fn wide_alphabet_construction() {
    let p = Params::new(12, 2, 2).unwrap();
    let x = necklace_word(&p).unwrap();
    assert_eq!(x.len(), 288);
    assert!(check_perfect(&x, &p).unwrap().is_perfect);
    assert_eq!(&x[..4], &[11, 11, 11, 10]);
}
