use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;

use ramsey_forge::relstruct::io::{parse_structure, structure_to_json};
use ramsey_forge::relstruct::{
    canonicalize, embeddings, induced, induced_cycles, is_embedding, is_induced_cycle, isomorphic,
};
use ramsey_forge::{Language, Letter, Structure};

fn language() -> Arc<Language> {
    Arc::new(Language::binary_only(["E", "N"]).unwrap())
}

/// A structure with symmetric E/N letters; `codes[i]` is 0 (no pair),
/// 1 (E) or 2 (N) for the i-th pair in lexicographic order.
fn graph(n: usize, codes: &[u8]) -> Structure {
    let mut a = Structure::with_size(language(), n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if codes[k] > 0 {
                a.set_letter(u, v, Letter::symmetric(codes[k] as u64));
            }
            k += 1;
        }
    }
    a
}

fn arb_structure(max: usize) -> impl Strategy<Value = Structure> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |codes| graph(n, &codes))
    })
}

fn permuted(a: &Structure, perm: &[usize]) -> Structure {
    // Vertex v of `a` becomes vertex perm[v].
    let mut b = Structure::with_size(a.language().clone(), a.len());
    for u in 0..a.len() {
        b.set_vertex_type(perm[u], a.vertex_type(u));
        for v in 0..a.len() {
            if u != v && a.adjacent(u, v) {
                b.set_letter(perm[u], perm[v], a.letter(u, v));
            }
        }
    }
    b
}

/// Induced cycles by brute force: vertex subsets whose Gaifman graph is
/// connected and 2-regular.
fn brute_cycle_sets(a: &Structure, max_len: usize) -> BTreeSet<Vec<usize>> {
    let n = a.len();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs.len() < 3 || vs.len() > max_len {
            continue;
        }
        let deg_two = vs.iter().all(|&u| vs.iter().filter(|&&v| v != u && a.adjacent(u, v)).count() == 2);
        if !deg_two {
            continue;
        }
        // Connected: walk from the first vertex.
        let mut seen = vec![vs[0]];
        let mut i = 0;
        while i < seen.len() {
            let u = seen[i];
            for &v in &vs {
                if v != u && a.adjacent(u, v) && !seen.contains(&v) {
                    seen.push(v);
                }
            }
            i += 1;
        }
        if seen.len() == vs.len() {
            out.insert(vs);
        }
    }
    out
}

proptest! {
    #[test]
    fn embeddings_compose(a in arb_structure(3), b in arb_structure(4), c in arb_structure(5)) {
        let ab = embeddings(&a, &b).unwrap();
        let bc = embeddings(&b, &c).unwrap();
        for f in ab.iter().take(4) {
            for g in bc.iter().take(4) {
                let h: Vec<usize> = f.iter().map(|&x| g[x]).collect();
                prop_assert!(is_embedding(&h, &a, &c));
            }
        }
    }

    #[test]
    fn induced_substructures_chain(a in arb_structure(6), xs in prop::collection::vec(any::<prop::sample::Index>(), 1..5)) {
        let mut outer: Vec<usize> = xs.iter().map(|i| i.index(a.len())).collect();
        outer.sort();
        outer.dedup();
        let inner: Vec<usize> = (0..outer.len()).step_by(2).collect();
        let once = induced(&a, &inner.iter().map(|&i| outer[i]).collect::<Vec<_>>()).unwrap();
        let twice = induced(&induced(&a, &outer).unwrap(), &inner).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn induced_cycles_match_brute_force(a in arb_structure(7), max_len in 3usize..8) {
        let found = induced_cycles(&a, max_len).unwrap();
        let mut sets = BTreeSet::new();
        for c in &found {
            prop_assert!(is_induced_cycle(&a, &c.vertices));
            let mut vs = c.vertices.clone();
            vs.sort();
            prop_assert!(sets.insert(vs), "cycle listed twice");
        }
        prop_assert_eq!(sets, brute_cycle_sets(&a, max_len));
    }

    #[test]
    fn canonical_form_is_relabeling_invariant(a in arb_structure(6), seed in any::<u64>()) {
        let n = a.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let b = permuted(&a, &perm);
        prop_assert!(isomorphic(&a, &b));
        prop_assert_eq!(canonicalize(&a).unwrap(), canonicalize(&b).unwrap());
    }

    #[test]
    fn canonical_form_separates_non_isomorphic(a in arb_structure(4), b in arb_structure(4)) {
        let same = canonicalize(&a).unwrap() == canonicalize(&b).unwrap();
        prop_assert_eq!(same, isomorphic(&a, &b));
    }

    #[test]
    fn json_roundtrip(a in arb_structure(6)) {
        let text = serde_json::to_string(&structure_to_json(&a)).unwrap();
        let back = parse_structure(&text, Some(a.language())).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn four_cycle_has_one_induced_cycle() {
    let c4 = graph(4, &[1, 0, 1, 1, 0, 1]);
    let cycles = induced_cycles(&c4, 6).unwrap();
    assert_eq!(cycles.len(), 1);
    assert_eq!(cycles[0].vertices.len(), 4);
}
