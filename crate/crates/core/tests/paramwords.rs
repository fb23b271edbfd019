mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use ramsey_forge::paramwords::{
    compose_check, embedding_type, enumerate_types, enumerate_types_with_cap, letter_name,
    minimal_envelope, substitute, substitute_set,
};
use ramsey_forge::{Error, ParamWord, Symbol};

use common::*;

fn arb_param_word(a: usize, max_len: usize) -> impl Strategy<Value = ParamWord> {
    prop::collection::vec((0usize..a + 1, 0usize..4), 0..=max_len).prop_map(move |raw| {
        let mut opened = 0;
        let entries = raw
            .into_iter()
            .map(|(kind, p)| {
                if kind < a {
                    Symbol::Letter(kind)
                } else {
                    let p = p.min(opened);
                    opened = opened.max(p + 1);
                    Symbol::Param(p)
                }
            })
            .collect();
        ParamWord::new(a, entries).unwrap()
    })
}

/// The first `len` entries (a prefix of a parameter word is one).
fn prefix(w: &ParamWord, len: usize) -> ParamWord {
    let cut = w.len().min(len);
    ParamWord::new(w.alphabet_size(), w.entries()[..cut].to_vec()).unwrap()
}

fn arb_word_set() -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::vec(0usize..3, 1..=6), 1..=4)
}

proptest! {
    #[test]
    fn substitution_is_a_valid_parameter_word(w in arb_param_word(2, 6), u in arb_param_word(2, 4)) {
        prop_assume!(u.len() <= w.params());
        let wu = substitute(&w, &u).unwrap();
        prop_assert!(wu.len() <= w.len());
        // Revalidates the first-occurrence order of parameters.
        prop_assert_eq!(&ParamWord::new(2, wu.entries().to_vec()).unwrap(), &wu);
        prop_assert!(wu.params() <= u.params());
        if u.len() == w.params() {
            prop_assert_eq!(wu.len(), w.len());
            prop_assert_eq!(wu.params(), u.params());
        }
    }

    #[test]
    fn composition_holds_on_random_triples(
        w in arb_param_word(2, 7), u in arb_param_word(2, 5), v in arb_param_word(2, 4)
    ) {
        let u = prefix(&u, w.params());
        let v = prefix(&v, u.params());
        prop_assert!(compose_check(&w, &u, &v).unwrap());
    }

    #[test]
    fn envelopes_match_brute_force(mut s in arb_word_set()) {
        s.sort();
        s.dedup();
        let r = minimal_envelope(&s).unwrap();
        let (best, envs) = brute_minimal_envelopes(&s);
        prop_assert_eq!(r.d, best);
        prop_assert!(envs.iter().all(|(_, t)| *t == r.tau));
        let tau: Vec<ParamWord> = r.tau.iter().map(|t| ParamWord::plain(3, t).unwrap()).collect();
        let mut expect: Vec<ParamWord> = s.iter().map(|w| ParamWord::plain(3, w).unwrap()).collect();
        expect.sort();
        expect.dedup();
        prop_assert_eq!(substitute_set(&r.envelope, &tau).unwrap(), expect);
    }

    #[test]
    fn types_are_invariant_under_substitution(s in arb_word_set(), seed in any::<u64>()) {
        // Writing S through any all-parameter word with at least as many
        // parameters as the longest word of S and no cuts keeps its type.
        let m = s.iter().map(Vec::len).max().unwrap();
        let mut w: Vec<usize> = (0..m).collect();
        let mut x = seed;
        for _ in 0..3 {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1);
            let pos = (x >> 33) as usize % (w.len() + 1);
            let p = (x >> 40) as usize % m.max(1);
            // Repeating an earlier parameter later keeps the word valid.
            if w[..pos].contains(&p) {
                w.insert(pos, p);
            }
        }
        let image: Vec<Vec<usize>> = s.iter().map(|u| {
            let mut padded = u.clone();
            // Parameters beyond |u| cut the image; pad with the sentinel.
            padded.resize(m, usize::MAX);
            apply(&w, &padded).into_iter().take_while(|&a| a != usize::MAX).collect()
        }).collect();
        prop_assume!(image.iter().all(|v| !v.is_empty()));
        prop_assert_eq!(embedding_type(&image).unwrap(), embedding_type(&s).unwrap());
    }

    #[test]
    fn parse_and_render_roundtrip(w in arb_param_word(3, 8)) {
        let names: Vec<String> = (0..3).map(letter_name).collect();
        prop_assert_eq!(ParamWord::parse(&w.render(&names), &names).unwrap(), w);
    }
}

#[test]
fn pair_catalogue_matches_brute_force() {
    let cat = enumerate_types(2, 2, 3, false).unwrap();
    let ws = words(2, 3);
    let mut oracle = BTreeSet::new();
    for (i, u) in ws.iter().enumerate() {
        for v in &ws[i + 1..] {
            oracle.insert(brute_type(&[u.clone(), v.clone()]));
        }
    }
    let got: BTreeSet<Vec<Vec<usize>>> = cat.types.iter().cloned().collect();
    assert_eq!(got, oracle);
}

#[test]
fn counts_are_monotone_and_renaming_merges() {
    let plain = enumerate_types(2, 1, 4, false).unwrap();
    assert!(plain.counts.windows(2).all(|w| w[0] <= w[1]));
    let renamed = enumerate_types(2, 1, 4, true).unwrap();
    assert_eq!(renamed.count(), 2);
}

#[test]
fn catalogue_cap_returns_partial_result() {
    match enumerate_types_with_cap(2, 2, 5, false, 100) {
        Err(Error::CatalogCapacity { partial, .. }) => {
            assert!(!partial.stabilized);
            assert!(partial.bound < 5);
        }
        other => panic!("expected a capacity error, got {other:?}"),
    }
}
