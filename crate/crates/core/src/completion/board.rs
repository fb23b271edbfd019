//! Letter-assignment boards: the search kernel behind completion.
//!
//! A board holds the vertex types of a partial structure and, per ordered
//! pair, the alphabet index of its letter (or [`UNSET`]). The rule of the
//! class spec is checked locally after each assignment.

use std::collections::HashMap;

use crate::completion::spec::{ClassSpec, CycleRule};
use crate::error::{Error, Result};
use crate::relstruct::{Letter, Structure, VertexType};

pub(crate) const UNSET: u16 = u16::MAX;

/// A forbidden pattern with its letters resolved to alphabet indices.
#[derive(Clone, Debug)]
pub(crate) struct Pattern {
    k: usize,
    vt: Vec<VertexType>,
    cells: Vec<u16>,
    /// Ordered adjacent pairs, each with the order in which the remaining
    /// vertices are matched (every vertex adjacent to an earlier one when
    /// possible).
    anchors: Vec<(usize, usize, Vec<usize>)>,
    /// Some letter of the pattern is not in the alphabet, so it never occurs.
    dead: bool,
}

impl Pattern {
    pub(crate) fn new(s: &Structure, index: &HashMap<Letter, u16>) -> Self {
        let k = s.len();
        let mut cells = vec![UNSET; k * k];
        let mut dead = false;
        for u in 0..k {
            for v in 0..k {
                if u != v && s.adjacent(u, v) {
                    match index.get(&s.letter(u, v)) {
                        Some(&i) => cells[u * k + v] = i,
                        None => dead = true,
                    }
                }
            }
        }
        let mut anchors = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i == j || !s.adjacent(i, j) {
                    continue;
                }
                let mut placed = vec![i, j];
                while placed.len() < k {
                    let next = (0..k)
                        .filter(|x| !placed.contains(x))
                        .find(|&x| placed.iter().any(|&p| s.adjacent(p, x)))
                        .or_else(|| (0..k).find(|x| !placed.contains(x)))
                        .expect("vertices remain");
                    placed.push(next);
                }
                anchors.push((i, j, placed.split_off(2)));
            }
        }
        Pattern {
            k,
            vt: (0..k).map(|v| s.vertex_type(v)).collect(),
            cells,
            anchors,
            dead,
        }
    }

    fn cell(&self, p: usize, q: usize) -> u16 {
        self.cells[p * self.k + q]
    }
}

/// A partial assignment of alphabet letters to the pairs of a vertex set.
#[derive(Clone, Debug)]
pub(crate) struct Board<'a> {
    spec: &'a ClassSpec,
    n: usize,
    vt: Vec<VertexType>,
    cells: Vec<u16>,
}

impl<'a> Board<'a> {
    /// An empty board on vertices of the given types.
    pub(crate) fn empty(spec: &'a ClassSpec, vt: Vec<VertexType>) -> Self {
        let n = vt.len();
        Board { spec, n, vt, cells: vec![UNSET; n * n] }
    }

    /// Reads a structure; fails with the vertices of the first vertex or
    /// adjacent pair whose type or letter is not allowed.
    pub(crate) fn from_structure(spec: &'a ClassSpec, s: &Structure) -> std::result::Result<Self, Vec<usize>> {
        let n = s.len();
        let vt: Vec<VertexType> = (0..n).map(|v| s.vertex_type(v)).collect();
        if let Some(v) = vt.iter().position(|t| !spec.admits_vertex_type(t)) {
            return Err(vec![v]);
        }
        let mut board = Board::empty(spec, vt);
        for u in 0..n {
            for v in u + 1..n {
                if s.adjacent(u, v) {
                    match spec.index16(&s.letter(u, v)) {
                        Some(i) => board.set(u, v, i),
                        None => return Err(vec![u, v]),
                    }
                }
            }
        }
        Ok(board)
    }

    pub(crate) fn get(&self, u: usize, v: usize) -> u16 {
        self.cells[u * self.n + v]
    }

    pub(crate) fn set(&mut self, u: usize, v: usize, letter: u16) {
        self.cells[u * self.n + v] = letter;
        self.cells[v * self.n + u] = self.spec.reverse_index(letter);
    }

    pub(crate) fn unset(&mut self, u: usize, v: usize) {
        self.cells[u * self.n + v] = UNSET;
        self.cells[v * self.n + u] = UNSET;
    }

    pub(crate) fn is_set(&self, u: usize, v: usize) -> bool {
        self.get(u, v) != UNSET
    }

    /// Pairs `u < v` without a letter, in lexicographic order.
    pub(crate) fn unassigned(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.is_set(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub(crate) fn candidates(&self, u: usize, v: usize) -> &'a [u16] {
        self.spec.candidates(self.vt[u], self.vt[v])
    }

    /// Writes every assigned pair of the board into a copy of `base`.
    pub(crate) fn to_structure(&self, base: &Structure) -> Structure {
        let alphabet = self.spec.alphabet_unchecked();
        let mut out = base.clone();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.is_set(u, v) {
                    out.set_letter(u, v, alphabet[self.get(u, v) as usize]);
                }
            }
        }
        out
    }

    /// The rule holds on every part of the board touching the assigned pair
    /// `(u, v)`.
    pub(crate) fn pair_ok(&self, u: usize, v: usize) -> bool {
        match self.spec.rule() {
            CycleRule::Metric(_) => {
                let a = self.spec.value(self.get(u, v));
                (0..self.n).all(|w| {
                    if w == u || w == v || !self.is_set(u, w) || !self.is_set(v, w) {
                        return true;
                    }
                    let b = self.spec.value(self.get(u, w));
                    let c = self.spec.value(self.get(v, w));
                    a <= b + c && b <= a + c && c <= a + b
                })
            }
            CycleRule::Ultrametric(lat) => {
                let a = self.spec.value(self.get(u, v)) as usize;
                (0..self.n).all(|w| {
                    if w == u || w == v || !self.is_set(u, w) || !self.is_set(v, w) {
                        return true;
                    }
                    let b = self.spec.value(self.get(u, w)) as usize;
                    let c = self.spec.value(self.get(v, w)) as usize;
                    lat.leq(a, lat.join(b, c)) && lat.leq(b, lat.join(a, c)) && lat.leq(c, lat.join(a, b))
                })
            }
            CycleRule::ExplicitForbidden(_) | CycleRule::FreeAmalgTriangles(_) => {
                self.spec.patterns().iter().all(|p| !self.copy_through(p, u, v))
            }
        }
    }

    /// The rule holds on the assigned part of the whole board.
    pub(crate) fn consistent(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| !self.is_set(u, v) || self.pair_ok(u, v)))
    }

    /// Some injective homomorphism-embedding of the pattern uses `(u, v)`
    /// as the image of one of its adjacent pairs.
    fn copy_through(&self, p: &Pattern, u: usize, v: usize) -> bool {
        if p.dead || p.k > self.n {
            return false;
        }
        let letter = self.get(u, v);
        let mut f = vec![usize::MAX; p.k];
        let mut used = vec![false; self.n];
        for (i, j, rest) in &p.anchors {
            if p.cell(*i, *j) != letter || p.vt[*i] != self.vt[u] || p.vt[*j] != self.vt[v] {
                continue;
            }
            f[*i] = u;
            f[*j] = v;
            used[u] = true;
            used[v] = true;
            let found = self.extend_copy(p, rest, &mut f, &mut used);
            used[u] = false;
            used[v] = false;
            f[*i] = usize::MAX;
            f[*j] = usize::MAX;
            if found {
                return true;
            }
        }
        false
    }

    fn extend_copy(&self, p: &Pattern, rest: &[usize], f: &mut [usize], used: &mut [bool]) -> bool {
        let Some((&q, tail)) = rest.split_first() else {
            return true;
        };
        for x in 0..self.n {
            if used[x] || self.vt[x] != p.vt[q] {
                continue;
            }
            let fits = (0..p.k).all(|r| {
                f[r] == usize::MAX || p.cell(r, q) == UNSET || self.get(f[r], x) == p.cell(r, q)
            });
            if !fits {
                continue;
            }
            f[q] = x;
            used[x] = true;
            let found = self.extend_copy(p, tail, f, used);
            used[x] = false;
            f[q] = usize::MAX;
            if found {
                return true;
            }
        }
        false
    }

    /// Backtracking over the unassigned pairs in lexicographic order, trying
    /// letters in canonical order. On success the board is fully assigned;
    /// on failure it is restored. `budget` counts visited nodes.
    pub(crate) fn search(&mut self, budget: &mut u64) -> Result<bool> {
        let pairs = self.unassigned();
        self.search_from(&pairs, budget)
    }

    fn search_from(&mut self, pairs: &[(usize, usize)], budget: &mut u64) -> Result<bool> {
        let Some((&(u, v), tail)) = pairs.split_first() else {
            return Ok(true);
        };
        for &c in self.candidates(u, v) {
            if *budget == 0 {
                self.unset(u, v);
                return Err(Error::capacity("completion search exceeded the work cap"));
            }
            *budget -= 1;
            self.set(u, v, c);
            if self.pair_ok(u, v) && self.search_from(tail, budget)? {
                return Ok(true);
            }
        }
        self.unset(u, v);
        Ok(false)
    }

    /// Rule-specific completion attempt. On success the board is fully
    /// assigned and consistent; on failure it is left unchanged.
    pub(crate) fn fast_fill(&mut self) -> bool {
        let pairs = self.unassigned();
        if pairs.is_empty() {
            return self.consistent();
        }
        let filled = match self.spec.rule() {
            CycleRule::Metric(m) => {
                let dist = self.metric_closure(m.max());
                pairs.iter().all(|&(u, v)| {
                    let target = dist[u * self.n + v].min(m.max() as u64) as u32;
                    let Some(&d) = m.distances().iter().find(|&&d| d >= target) else {
                        return false;
                    };
                    match self.spec.letter_of_value(d) {
                        Some(l) if self.candidates(u, v).contains(&l) => {
                            self.set(u, v, l);
                            true
                        }
                        _ => false,
                    }
                }) && self.consistent()
            }
            CycleRule::Ultrametric(lat) => {
                let dist = self.ultrametric_closure(lat);
                pairs.iter().all(|&(u, v)| {
                    let Some(e) = dist[u * self.n + v] else {
                        return false;
                    };
                    match self.spec.letter_of_value(e as u32) {
                        Some(l) if e != lat.bottom() && self.candidates(u, v).contains(&l) => {
                            self.set(u, v, l);
                            true
                        }
                        _ => false,
                    }
                }) && self.consistent()
            }
            CycleRule::ExplicitForbidden(_) | CycleRule::FreeAmalgTriangles(_) => {
                let ranks = pairs.iter().map(|&(u, v)| self.candidates(u, v).len()).max().unwrap_or(0);
                let mut ok = false;
                for r in 0..ranks {
                    let mut placed = true;
                    for &(u, v) in &pairs {
                        let c = self.candidates(u, v);
                        if c.is_empty() {
                            placed = false;
                            break;
                        }
                        self.set(u, v, c[r.min(c.len() - 1)]);
                    }
                    if placed && self.consistent() {
                        ok = true;
                        break;
                    }
                    for &(u, v) in &pairs {
                        self.unset(u, v);
                    }
                }
                ok
            }
        };
        if !filled {
            for &(u, v) in &pairs {
                self.unset(u, v);
            }
        }
        filled
    }

    /// Shortest-path distances over the assigned pairs, with unreachable
    /// pairs at `cap`.
    pub(crate) fn metric_closure(&self, cap: u32) -> Vec<u64> {
        let n = self.n;
        let inf = u64::from(cap) * n as u64 + 1;
        let mut d = vec![inf; n * n];
        for u in 0..n {
            d[u * n + u] = 0;
            for v in 0..n {
                if u != v && self.is_set(u, v) {
                    d[u * n + v] = u64::from(self.spec.value(self.get(u, v)));
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                let dik = d[i * n + k];
                if dik == inf {
                    continue;
                }
                for j in 0..n {
                    let via = dik + d[k * n + j];
                    if via < d[i * n + j] {
                        d[i * n + j] = via;
                    }
                }
            }
        }
        d
    }

    /// Meet over paths of the join of the edge values, over the assigned
    /// pairs; `None` for pairs in different components.
    pub(crate) fn ultrametric_closure(&self, lat: &crate::completion::Lattice) -> Vec<Option<usize>> {
        let n = self.n;
        let mut d: Vec<Option<usize>> = vec![None; n * n];
        for u in 0..n {
            for v in 0..n {
                if u != v && self.is_set(u, v) {
                    d[u * n + v] = Some(self.spec.value(self.get(u, v)) as usize);
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                if i == k {
                    continue;
                }
                let Some(a) = d[i * n + k] else { continue };
                for j in 0..n {
                    if j == i || j == k {
                        continue;
                    }
                    let Some(b) = d[k * n + j] else { continue };
                    let via = lat.join(a, b);
                    d[i * n + j] = Some(match d[i * n + j] {
                        Some(cur) => lat.meet(cur, via),
                        None => via,
                    });
                }
            }
        }
        d
    }
}
