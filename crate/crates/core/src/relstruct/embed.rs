//! Embeddings, homomorphisms and homomorphism-embeddings between finite
//! structures.

use crate::error::{Error, Result};
use crate::relstruct::Structure;

fn check_language(a: &Structure, b: &Structure) -> Result<()> {
    if a.language() != b.language() {
        return Err(Error::input("structures are over different languages"));
    }
    Ok(())
}

/// Tuples of `a` are mapped to tuples of `b`.
pub fn is_homomorphism(f: &[usize], a: &Structure, b: &Structure) -> bool {
    if f.len() != a.len() || f.iter().any(|&x| x >= b.len()) {
        return false;
    }
    let vt_ok = (0..a.len()).all(|v| {
        let (ta, tb) = (a.vertex_type(v), b.vertex_type(f[v]));
        ta.unary & !tb.unary == 0 && ta.loops & !tb.loops == 0
    });
    vt_ok
        && (0..a.len()).all(|u| {
            (0..a.len()).all(|v| u == v || a.arc(u, v) & !b.arc(f[u], f[v]) == 0)
        })
}

/// Injective, and a tuple holds in `a` exactly when its image holds in `b`.
pub fn is_embedding(f: &[usize], a: &Structure, b: &Structure) -> bool {
    if f.len() != a.len() || f.iter().any(|&x| x >= b.len()) {
        return false;
    }
    let mut used = vec![false; b.len()];
    for &x in f {
        if std::mem::replace(&mut used[x], true) {
            return false;
        }
    }
    (0..a.len()).all(|u| {
        a.vertex_type(u) == b.vertex_type(f[u])
            && (0..a.len()).all(|v| u == v || a.arc(u, v) == b.arc(f[u], f[v]))
    })
}

/// A homomorphism whose restriction to every irreducible substructure of
/// `a` is an embedding.
///
/// Irreducible substructures are cliques of the Gaifman graph, and in a
/// binary language their tuples live on single vertices or adjacent pairs,
/// so it suffices to check every vertex and every adjacent pair.
pub fn is_homomorphism_embedding(f: &[usize], a: &Structure, b: &Structure) -> bool {
    if !is_homomorphism(f, a, b) {
        return false;
    }
    for u in 0..a.len() {
        if a.vertex_type(u) != b.vertex_type(f[u]) {
            return false;
        }
        for v in u + 1..a.len() {
            if a.adjacent(u, v)
                && (f[u] == f[v]
                    || a.arc(u, v) != b.arc(f[u], f[v])
                    || a.arc(v, u) != b.arc(f[v], f[u]))
            {
                return false;
            }
        }
    }
    true
}

/// All embeddings of `a` into `b`, as vertex maps, in lexicographic order.
pub fn embeddings(a: &Structure, b: &Structure) -> Result<Vec<Vec<usize>>> {
    check_language(a, b)?;
    let mut out = Vec::new();
    for_each_embedding(a, b, |f| {
        out.push(f.to_vec());
        true
    });
    Ok(out)
}

/// Visit embeddings of `a` into `b` in lexicographic order until `visit`
/// returns `false`. Languages are assumed equal.
pub fn for_each_embedding<F>(a: &Structure, b: &Structure, mut visit: F)
where
    F: FnMut(&[usize]) -> bool,
{
    let (na, nb) = (a.len(), b.len());
    if na > nb {
        return;
    }
    let mut f = Vec::with_capacity(na);
    let mut used = vec![false; nb];
    extend(a, b, &mut f, &mut used, &mut visit);

    fn extend<F: FnMut(&[usize]) -> bool>(
        a: &Structure,
        b: &Structure,
        f: &mut Vec<usize>,
        used: &mut [bool],
        visit: &mut F,
    ) -> bool {
        let i = f.len();
        if i == a.len() {
            return visit(f);
        }
        let ti = a.vertex_type(i);
        for x in 0..b.len() {
            if used[x] || b.vertex_type(x) != ti {
                continue;
            }
            let fits = (0..i).all(|j| a.arc(j, i) == b.arc(f[j], x) && a.arc(i, j) == b.arc(x, f[j]));
            if !fits {
                continue;
            }
            used[x] = true;
            f.push(x);
            let go_on = extend(a, b, f, used, visit);
            f.pop();
            used[x] = false;
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// Whether `a` and `b` are isomorphic (same size and an embedding exists).
pub fn isomorphic(a: &Structure, b: &Structure) -> bool {
    if a.len() != b.len() || a.language() != b.language() {
        return false;
    }
    let mut found = false;
    for_each_embedding(a, b, |_| {
        found = true;
        false
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relstruct::{Language, Letter};
    use std::sync::Arc;

    fn lang() -> Arc<Language> {
        Arc::new(Language::binary_only(["E"]).unwrap())
    }

    fn complete_graph(n: usize) -> Structure {
        let mut s = Structure::with_size(lang(), n);
        for u in 0..n {
            for v in u + 1..n {
                s.set_letter(u, v, Letter::symmetric(1));
            }
        }
        s
    }

    #[test]
    fn vertex_into_edge_two_ways() {
        let v = Structure::with_size(lang(), 1);
        assert_eq!(embeddings(&v, &complete_graph(2)).unwrap().len(), 2);
    }

    #[test]
    fn edge_into_triangle_six_ways() {
        // Brute force: all 6 injections of 2 into 3 preserve adjacency.
        let mut brute = 0;
        let (e, t) = (complete_graph(2), complete_graph(3));
        for x in 0..3 {
            for y in 0..3 {
                if x != y && is_embedding(&[x, y], &e, &t) {
                    brute += 1;
                }
            }
        }
        assert_eq!(brute, 6);
        assert_eq!(embeddings(&e, &t).unwrap().len(), 6);
    }

    #[test]
    fn collapsing_path_is_homomorphism_embedding() {
        let mut path = Structure::with_size(lang(), 3);
        path.set_letter(0, 1, Letter::symmetric(1));
        path.set_letter(1, 2, Letter::symmetric(1));
        let e = complete_graph(2);
        assert!(is_homomorphism_embedding(&[0, 1, 0], &path, &e));
        assert!(!is_embedding(&[0, 1, 0], &path, &e));
        // Collapsing an edge is not.
        assert!(!is_homomorphism_embedding(&[0, 0, 1], &path, &e));
    }

    #[test]
    fn language_mismatch_is_input_error() {
        let other = Arc::new(Language::binary_only(["F"]).unwrap());
        let a = Structure::with_size(other, 1);
        assert!(matches!(
            embeddings(&a, &complete_graph(2)),
            Err(Error::Input(_))
        ));
    }
}
