//! Canonical forms of small structures by exhaustive minimisation over
//! vertex orders.

use crate::caps::DEFAULT_CANON_CAP;
use crate::error::{Error, Result};
use crate::relstruct::Structure;

/// Canonical byte string: equal for two structures exactly when they are
/// isomorphic. Fails above [`DEFAULT_CANON_CAP`] vertices.
pub fn canonicalize(a: &Structure) -> Result<Vec<u8>> {
    canonicalize_with_cap(a, DEFAULT_CANON_CAP)
}

/// The encoding of an ordering lists, for each position `i`, the type of
/// the vertex placed there followed by its arcs to and from every earlier
/// position. Prefixes are therefore fixed once the first positions are
/// chosen, which lets the search discard orderings whose prefix is already
/// larger than the best complete encoding.
pub fn canonicalize_with_cap(a: &Structure, cap: usize) -> Result<Vec<u8>> {
    let n = a.len();
    if n > cap {
        return Err(Error::capacity(format!(
            "canonicalization is exhaustive and capped at {cap} vertices, structure has {n}"
        )));
    }
    let mut best: Option<Vec<u8>> = None;
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut buf = (n as u64).to_be_bytes().to_vec();
    search(a, &mut order, &mut used, &mut buf, &mut best);
    Ok(best.unwrap_or_else(|| (0u64).to_be_bytes().to_vec()))
}

fn block(a: &Structure, order: &[usize], v: usize, out: &mut Vec<u8>) {
    let t = a.vertex_type(v);
    out.extend_from_slice(&t.unary.to_be_bytes());
    out.extend_from_slice(&t.loops.to_be_bytes());
    for &u in order {
        out.extend_from_slice(&a.arc(v, u).to_be_bytes());
        out.extend_from_slice(&a.arc(u, v).to_be_bytes());
    }
}

fn search(
    a: &Structure,
    order: &mut Vec<usize>,
    used: &mut [bool],
    buf: &mut Vec<u8>,
    best: &mut Option<Vec<u8>>,
) {
    if order.len() == a.len() {
        if best.as_ref().map_or(true, |b| buf.as_slice() < b.as_slice()) {
            *best = Some(buf.clone());
        }
        return;
    }
    for v in 0..a.len() {
        if used[v] {
            continue;
        }
        let mark = buf.len();
        block(a, order, v, buf);
        let keep = match best {
            Some(b) => buf.as_slice() <= &b[..buf.len()],
            None => true,
        };
        if keep {
            used[v] = true;
            order.push(v);
            search(a, order, used, buf, best);
            order.pop();
            used[v] = false;
        }
        buf.truncate(mark);
    }
}
