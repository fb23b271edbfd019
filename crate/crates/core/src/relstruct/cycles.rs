//! Induced cycle enumeration.

use crate::error::{Error, Result};
use crate::relstruct::{induced, Structure};

/// An induced cycle `v_0 … v_{l-1}` together with the structure it induces
/// (vertices listed in cycle order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub structure: Structure,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Cyclically consecutive vertices adjacent, all other pairs non-adjacent,
/// at least three distinct vertices.
pub fn is_induced_cycle(a: &Structure, seq: &[usize]) -> bool {
    let l = seq.len();
    if l < 3 {
        return false;
    }
    for i in 0..l {
        if seq[i] >= a.len() || seq[i + 1..].contains(&seq[i]) {
            return false;
        }
    }
    for i in 0..l {
        for j in i + 1..l {
            let consecutive = j == i + 1 || (i == 0 && j == l - 1);
            if a.adjacent(seq[i], seq[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Visit every induced cycle of length `3..=max_len` once, as a vertex
/// sequence starting at its smallest vertex and with `v_1 < v_{l-1}`.
///
/// `adjacent` must be symmetric and irreflexive. Stops early when `visit`
/// returns `false`.
pub fn for_each_induced_cycle<A, F>(n: usize, adjacent: A, max_len: usize, mut visit: F)
where
    A: Fn(usize, usize) -> bool,
    F: FnMut(&[usize]) -> bool,
{
    if max_len < 3 {
        return;
    }
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| adjacent(v, u)).collect())
        .collect();
    let mut path = Vec::with_capacity(max_len);
    let mut on_path = vec![false; n];
    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        for &v1 in nbrs[s].iter().filter(|&&v| v > s) {
            path.push(v1);
            on_path[v1] = true;
            let go = grow(&nbrs, &adjacent, max_len, &mut path, &mut on_path, &mut visit);
            on_path[v1] = false;
            path.pop();
            if !go {
                return;
            }
        }
        on_path[s] = false;
        path.pop();
    }

    fn grow<A: Fn(usize, usize) -> bool, F: FnMut(&[usize]) -> bool>(
        nbrs: &[Vec<usize>],
        adjacent: &A,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        visit: &mut F,
    ) -> bool {
        let s = path[0];
        let last = *path.last().expect("nonempty path");
        let k = path.len();
        for &w in &nbrs[last] {
            if w <= s || on_path[w] {
                continue;
            }
            // No chords to interior path vertices.
            if path[1..k - 1].iter().any(|&x| adjacent(w, x)) {
                continue;
            }
            if adjacent(w, s) {
                // Closes a cycle; each cycle is met in two directions.
                if path[1] < w {
                    path.push(w);
                    let go = visit(path);
                    path.pop();
                    if !go {
                        return false;
                    }
                }
            } else if k + 1 < max_len {
                path.push(w);
                on_path[w] = true;
                let go = grow(nbrs, adjacent, max_len, path, on_path, visit);
                on_path[w] = false;
                path.pop();
                if !go {
                    return false;
                }
            }
        }
        true
    }
}

/// All induced cycles of length `3..=max_len`, each once up to rotation and
/// reflection. Triangles count as induced cycles.
pub fn induced_cycles(a: &Structure, max_len: usize) -> Result<Vec<Cycle>> {
    if max_len < 3 {
        return Err(Error::input(format!(
            "cycle length bound must be at least 3, got {max_len}"
        )));
    }
    let mut out = Vec::new();
    for_each_induced_cycle(a.len(), |u, v| a.adjacent(u, v), max_len, |seq| {
        out.push(Cycle {
            vertices: seq.to_vec(),
            structure: induced(a, seq).expect("cycle vertices are valid"),
        });
        true
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relstruct::{Language, Letter};
    use std::sync::Arc;

    fn lang() -> Arc<Language> {
        Arc::new(Language::binary_only(["d1", "d2", "d3"]).unwrap())
    }

    fn with_edges(n: usize, edges: &[(usize, usize)]) -> Structure {
        let mut s = Structure::with_size(lang(), n);
        for &(u, v) in edges {
            s.set_letter(u, v, Letter::symmetric(1));
        }
        s
    }

    #[test]
    fn partial_metric_four_cycle() {
        let s = with_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let c = induced_cycles(&s, 6).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].vertices, vec![0, 1, 2, 3]);
        assert!(is_induced_cycle(&s, &c[0].vertices));
    }

    #[test]
    fn irreducible_structures_yield_their_triangles() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        let k5 = with_edges(5, &edges);
        let c = induced_cycles(&k5, 5).unwrap();
        assert_eq!(c.len(), 10);
        assert!(c.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn paths_are_acyclic() {
        let p5 = with_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert!(induced_cycles(&p5, 5).unwrap().is_empty());
    }

    #[test]
    fn length_bound_is_respected() {
        let c5 = with_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(induced_cycles(&c5, 4).unwrap().is_empty());
        assert_eq!(induced_cycles(&c5, 5).unwrap().len(), 1);
        assert!(matches!(induced_cycles(&c5, 2), Err(Error::Input(_))));
    }

    #[test]
    fn chorded_cycle_is_not_induced() {
        let s = with_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        let c = induced_cycles(&s, 4).unwrap();
        assert_eq!(c.len(), 2);
        assert!(c.iter().all(|c| c.len() == 3));
        assert!(!is_induced_cycle(&s, &[0, 1, 2, 3]));
    }
}
