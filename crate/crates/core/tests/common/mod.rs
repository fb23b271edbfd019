//! Brute-force oracles shared by the integration tests. None of them call
//! into the library's search code.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use ramsey_forge::{ClassSpec, Language, Structure};

/// Every restricted growth string of length `len`.
pub fn restricted_growth(len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &out {
            let open = w.iter().max().map_or(0, |m| m + 1);
            for p in 0..=open {
                let mut v = w.clone();
                v.push(p);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Plain substitution into an all-parameter word, written out longhand.
pub fn apply(w: &[usize], u: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for &p in w {
        if p >= u.len() {
            break;
        }
        out.push(u[p]);
    }
    out
}

/// The unique `U` with `W(U) = s`, if any.
fn preimage_of(w: &[usize], s: &[usize]) -> Option<Vec<usize>> {
    let d = w.iter().max().map_or(0, |m| m + 1);
    for k in 0..=d {
        let cut = w.iter().position(|&p| p == k).unwrap_or(w.len());
        if cut != s.len() {
            continue;
        }
        let mut u = vec![usize::MAX; k];
        for (j, &p) in w[..cut].iter().enumerate() {
            if u[p] == usize::MAX {
                u[p] = s[j];
            } else if u[p] != s[j] {
                return None;
            }
        }
        return Some(u);
    }
    None
}

/// All envelopes of `s` of length `M` or `M + 1` (`M` the longest word)
/// with the least parameter count, each with its sorted type.
pub fn brute_minimal_envelopes(s: &[Vec<usize>]) -> (usize, Vec<(Vec<usize>, Vec<Vec<usize>>)>) {
    let m = s.iter().map(Vec::len).max().unwrap();
    let mut best = usize::MAX;
    let mut found = Vec::new();
    for len in m..=m + 1 {
        for w in restricted_growth(len) {
            let d = w.iter().max().map_or(0, |x| x + 1);
            if d > best {
                continue;
            }
            let tau: Option<Vec<Vec<usize>>> = s.iter().map(|x| preimage_of(&w, x)).collect();
            let Some(mut tau) = tau else { continue };
            tau.sort();
            if d < best {
                best = d;
                found.clear();
            }
            found.push((w, tau));
        }
    }
    (best, found)
}

/// The type of `s` according to the brute-force search; panics if minimal
/// envelopes disagree.
pub fn brute_type(s: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let (_, envs) = brute_minimal_envelopes(s);
    let tau = envs[0].1.clone();
    assert!(envs.iter().all(|(_, t)| *t == tau), "minimal envelopes of {s:?} disagree on the type");
    tau
}

/// Words of length `1..=max_len` over `0..alphabet`.
pub fn words(alphabet: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut level = vec![Vec::new()];
    for _ in 0..max_len {
        level = level
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..alphabet).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// Unordered vertex pairs of `n` vertices in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// A metric space (or partial one) in the language of `ClassSpec::metric`.
pub fn metric_structure(language: &Arc<Language>, n: usize, dist: &[Option<u32>]) -> Structure {
    let mut a = Structure::with_size(language.clone(), n);
    for (&(u, v), d) in pairs(n).iter().zip(dist) {
        if let Some(d) = d {
            let sym = format!("d{d}");
            a.add_tuple(&sym, &[u, v]).unwrap();
            a.add_tuple(&sym, &[v, u]).unwrap();
        }
    }
    a
}

/// Reads the distances back; `None` for missing pairs, `Some(0)` for a pair
/// carrying anything but exactly one symmetric distance.
pub fn read_metric(a: &Structure, distances: &[u32]) -> Vec<Option<u32>> {
    pairs(a.len())
        .into_iter()
        .map(|(u, v)| {
            let mut hits = distances.iter().filter(|&&d| {
                let sym = format!("d{d}");
                let fwd = a.tuples(&sym).unwrap();
                fwd.contains(&vec![u, v]) || fwd.contains(&vec![v, u])
            });
            match (hits.next(), hits.next()) {
                (None, _) => None,
                (Some(&d), None) => {
                    let t = a.tuples(&format!("d{d}")).unwrap();
                    if t.contains(&vec![u, v]) && t.contains(&vec![v, u]) {
                        Some(d)
                    } else {
                        Some(0)
                    }
                }
                _ => Some(0),
            }
        })
        .collect()
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// All triangle inequalities hold among assigned pairs.
pub fn metric_ok(n: usize, dist: &[Option<u32>]) -> bool {
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (x, y, z) = (dist[pair_index(n, a, b)], dist[pair_index(n, b, c)], dist[pair_index(n, a, c)]);
                if let (Some(x), Some(y), Some(z)) = (x, y, z) {
                    if x > y + z || y > x + z || z > x + y {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Exhaustive backtracking: does some assignment of values in `s` to the
/// missing pairs give a metric space?
pub fn metric_csp(n: usize, dist: &[Option<u32>], s: &[u32]) -> bool {
    fn go(n: usize, d: &mut Vec<Option<u32>>, i: usize, s: &[u32]) -> bool {
        if !metric_ok(n, d) {
            return false;
        }
        let Some(j) = (i..d.len()).find(|&j| d[j].is_none()) else {
            return true;
        };
        for &x in s {
            d[j] = Some(x);
            if go(n, d, j + 1, s) {
                d[j] = None;
                return true;
            }
        }
        d[j] = None;
        false
    }
    go(n, &mut dist.to_vec(), 0, s)
}

/// The four spec families every audit runs on.
pub fn builtin_specs() -> Vec<(&'static str, ClassSpec)> {
    vec![
        ("rado", ClassSpec::rado()),
        ("triangle-free", ClassSpec::triangle_free()),
        ("metric {1,2,3}", ClassSpec::metric(&[1, 2, 3]).unwrap()),
        ("chain ultrametric", ClassSpec::chain_ultrametric(2)),
    ]
}

/// Distinct letters of `w` in order of first appearance.
pub fn first_appearance(w: &[usize]) -> Vec<usize> {
    let mut seen = BTreeSet::new();
    w.iter().copied().filter(|a| seen.insert(*a)).collect()
}
