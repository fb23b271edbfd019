use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::relstruct::language::Language;

/// The structure induced on a single vertex: its unary marks and loops.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexType {
    pub unary: u64,
    pub loops: u64,
}

impl VertexType {
    pub const EMPTY: VertexType = VertexType { unary: 0, loops: 0 };

    /// Symbol names holding on the vertex (unary symbols, then loops).
    pub fn names<'a>(&self, language: &'a Language) -> Vec<&'a str> {
        let mut out = language.unary_names(self.unary);
        out.extend(language.binary_names(self.loops));
        out
    }

    pub fn from_names<S: AsRef<str>>(language: &Language, names: &[S]) -> Result<Self> {
        let mut t = VertexType::EMPTY;
        for n in names {
            let n = n.as_ref();
            if let Some(b) = language.unary_bit(n) {
                t.unary |= 1 << b;
            } else if let Some(b) = language.binary_bit(n) {
                t.loops |= 1 << b;
            } else {
                return Err(Error::input(format!("unknown symbol `{n}` in vertex type")));
            }
        }
        Ok(t)
    }

    pub fn to_structure(&self, language: &Arc<Language>) -> Structure {
        let mut s = Structure::with_size(language.clone(), 1);
        s.set_vertex_type(0, *self);
        s
    }
}

/// An ordered two-vertex structure on `{0, 1}`.
///
/// `forward` holds the binary symbols on `(0, 1)`, `backward` those on
/// `(1, 0)`. The derived order (source, target, forward, backward) is the
/// canonical letter order used for every deterministic tie-break.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub source: VertexType,
    pub target: VertexType,
    pub forward: u64,
    pub backward: u64,
}

impl Letter {
    /// A letter with no vertex marks and the same symbols in both directions.
    pub fn symmetric(mask: u64) -> Self {
        Letter {
            source: VertexType::EMPTY,
            target: VertexType::EMPTY,
            forward: mask,
            backward: mask,
        }
    }

    /// Swap the roles of vertices 0 and 1.
    pub fn reverse(&self) -> Letter {
        Letter {
            source: self.target,
            target: self.source,
            forward: self.backward,
            backward: self.forward,
        }
    }

    /// Whether 0 and 1 are adjacent, i.e. the letter is irreducible.
    pub fn is_adjacent(&self) -> bool {
        self.forward | self.backward != 0
    }

    /// Fixed-width big-endian encoding; byte order agrees with `Ord`.
    pub fn key_bytes(&self) -> [u8; 48] {
        let mut out = [0u8; 48];
        let fields = [
            self.source.unary,
            self.source.loops,
            self.target.unary,
            self.target.loops,
            self.forward,
            self.backward,
        ];
        for (chunk, f) in out.chunks_mut(8).zip(fields) {
            chunk.copy_from_slice(&f.to_be_bytes());
        }
        out
    }

    pub fn to_structure(&self, language: &Arc<Language>) -> Structure {
        let mut s = Structure::with_size(language.clone(), 2);
        s.set_vertex_type(0, self.source);
        s.set_vertex_type(1, self.target);
        s.set_letter(0, 1, *self);
        s
    }

    /// Reads the letter of a structure on exactly two vertices.
    pub fn from_structure(s: &Structure) -> Result<Self> {
        if s.len() != 2 {
            return Err(Error::input(format!(
                "a letter has exactly two vertices, got {}",
                s.len()
            )));
        }
        Ok(s.letter(0, 1))
    }

    /// A readable name: the symbol names, with orientation and vertex marks
    /// spelled out only when present.
    pub fn default_name(&self, language: &Language) -> String {
        let join = |mask: u64| {
            if mask == 0 {
                "-".to_string()
            } else {
                language.binary_names(mask).join("+")
            }
        };
        let mut core = join(self.forward);
        if self.forward != self.backward {
            core = format!("{core}/{}", join(self.backward));
        }
        if self.source == VertexType::EMPTY && self.target == VertexType::EMPTY {
            core
        } else {
            let vt = |t: &VertexType| {
                let n = t.names(language);
                if n.is_empty() {
                    "-".to_string()
                } else {
                    n.join("+")
                }
            };
            format!("[{}]{core}[{}]", vt(&self.source), vt(&self.target))
        }
    }
}

/// A finite structure over a unary/binary language.
///
/// Vertices are `0..len()` with display names; relations are stored as a
/// unary mask per vertex and a binary mask per ordered pair (loops on the
/// diagonal).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Structure {
    language: Arc<Language>,
    names: Vec<String>,
    unary: Vec<u64>,
    arcs: Vec<u64>,
}

impl fmt::Debug for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Structure");
        d.field("vertices", &self.names);
        let mut pairs = Vec::new();
        for u in 0..self.len() {
            for v in 0..self.len() {
                let m = self.arc(u, v);
                if m != 0 {
                    pairs.push(format!(
                        "({},{}):{}",
                        self.names[u],
                        self.names[v],
                        self.language.binary_names(m).join("+")
                    ));
                }
            }
        }
        d.field("arcs", &pairs);
        let marks: Vec<_> = (0..self.len())
            .filter(|&v| self.unary[v] != 0)
            .map(|v| {
                format!(
                    "{}:{}",
                    self.names[v],
                    self.language.unary_names(self.unary[v]).join("+")
                )
            })
            .collect();
        if !marks.is_empty() {
            d.field("unary", &marks);
        }
        d.finish()
    }
}

impl Structure {
    /// Empty relations on the named vertices.
    pub fn new(language: Arc<Language>, names: Vec<String>) -> Result<Self> {
        let mut seen = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if seen.insert(n.as_str(), i).is_some() {
                return Err(Error::input(format!("duplicate vertex `{n}`")));
            }
        }
        let n = names.len();
        Ok(Structure {
            language,
            names,
            unary: vec![0; n],
            arcs: vec![0; n * n],
        })
    }

    /// Empty relations on vertices named `0..n`.
    pub fn with_size(language: Arc<Language>, n: usize) -> Self {
        Structure {
            language,
            names: (0..n).map(|i| i.to_string()).collect(),
            unary: vec![0; n],
            arcs: vec![0; n * n],
        }
    }

    pub fn language(&self) -> &Arc<Language> {
        &self.language
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn vertex_type(&self, v: usize) -> VertexType {
        VertexType {
            unary: self.unary[v],
            loops: self.arcs[v * self.len() + v],
        }
    }

    /// Binary symbols holding on `(u, v)`.
    #[inline]
    pub fn arc(&self, u: usize, v: usize) -> u64 {
        self.arcs[u * self.names.len() + v]
    }

    /// The letter induced on `(u, v)`, oriented `0 -> u`, `1 -> v`.
    pub fn letter(&self, u: usize, v: usize) -> Letter {
        Letter {
            source: self.vertex_type(u),
            target: self.vertex_type(v),
            forward: self.arc(u, v),
            backward: self.arc(v, u),
        }
    }

    /// Gaifman adjacency: distinct and joined by some tuple in either order.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && (self.arc(u, v) | self.arc(v, u)) != 0
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&u| self.adjacent(v, u))
    }

    pub fn set_vertex_type(&mut self, v: usize, t: VertexType) {
        let n = self.len();
        self.unary[v] = t.unary;
        self.arcs[v * n + v] = t.loops;
    }

    /// Overwrite the pair `(u, v)` with the binary part of `letter`.
    /// Vertex types are left untouched.
    pub fn set_letter(&mut self, u: usize, v: usize, letter: Letter) {
        debug_assert_ne!(u, v);
        let n = self.len();
        self.arcs[u * n + v] = letter.forward;
        self.arcs[v * n + u] = letter.backward;
    }

    pub fn clear_pair(&mut self, u: usize, v: usize) {
        let n = self.len();
        self.arcs[u * n + v] = 0;
        self.arcs[v * n + u] = 0;
    }

    /// Add a tuple of `symbol` given by vertex indices.
    pub fn add_tuple(&mut self, symbol: &str, tuple: &[usize]) -> Result<()> {
        let n = self.len();
        if let Some(&bad) = tuple.iter().find(|&&v| v >= n) {
            return Err(Error::input(format!("vertex index {bad} out of range")));
        }
        match (self.language.arity(symbol), tuple) {
            (Some(1), &[v]) => {
                let b = self.language.unary_bit(symbol).expect("unary symbol");
                self.unary[v] |= 1 << b;
            }
            (Some(2), &[u, v]) => {
                let b = self.language.binary_bit(symbol).expect("binary symbol");
                self.arcs[u * n + v] |= 1 << b;
            }
            (Some(a), t) => {
                return Err(Error::input(format!(
                    "symbol `{symbol}` has arity {a}, tuple has {} entries",
                    t.len()
                )))
            }
            (None, _) => return Err(Error::input(format!("unknown symbol `{symbol}`"))),
        }
        Ok(())
    }

    /// Tuples of `symbol` as vertex index lists, in lexicographic order.
    pub fn tuples(&self, symbol: &str) -> Result<Vec<Vec<usize>>> {
        let n = self.len();
        match self.language.arity(symbol) {
            Some(1) => {
                let b = self.language.unary_bit(symbol).expect("unary symbol");
                Ok((0..n)
                    .filter(|&v| self.unary[v] >> b & 1 == 1)
                    .map(|v| vec![v])
                    .collect())
            }
            Some(_) => {
                let b = self.language.binary_bit(symbol).expect("binary symbol");
                let mut out = Vec::new();
                for u in 0..n {
                    for v in 0..n {
                        if self.arc(u, v) >> b & 1 == 1 {
                            out.push(vec![u, v]);
                        }
                    }
                }
                Ok(out)
            }
            None => Err(Error::input(format!("unknown symbol `{symbol}`"))),
        }
    }

    /// Total number of relation tuples.
    pub fn tuple_count(&self) -> usize {
        self.unary.iter().map(|m| m.count_ones() as usize).sum::<usize>()
            + self.arcs.iter().map(|m| m.count_ones() as usize).sum::<usize>()
    }

    /// Rename vertices; names must stay unique.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.len() {
            return Err(Error::input("wrong number of vertex names"));
        }
        let fresh = Structure::new(self.language.clone(), names)?;
        self.names = fresh.names;
        Ok(self)
    }

    /// Append a vertex with the given type and no pairs.
    pub fn push_vertex(&mut self, name: String, t: VertexType) -> Result<usize> {
        if self.index_of(&name).is_some() {
            return Err(Error::input(format!("duplicate vertex `{name}`")));
        }
        let n = self.len();
        let mut arcs = vec![0; (n + 1) * (n + 1)];
        for u in 0..n {
            for v in 0..n {
                arcs[u * (n + 1) + v] = self.arcs[u * n + v];
            }
        }
        self.arcs = arcs;
        self.unary.push(0);
        self.names.push(name);
        self.set_vertex_type(n, t);
        Ok(n)
    }

    /// Pairs `u < v` that are not adjacent.
    pub fn non_adjacent_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// The substructure induced on `vertices`, in the given order.
pub fn induced(a: &Structure, vertices: &[usize]) -> Result<Structure> {
    let n = a.len();
    let mut seen = vec![false; n];
    for &v in vertices {
        if v >= n {
            return Err(Error::input(format!("vertex index {v} out of range")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::input(format!("vertex `{}` listed twice", a.name(v))));
        }
    }
    let m = vertices.len();
    let mut arcs = vec![0; m * m];
    for (i, &u) in vertices.iter().enumerate() {
        for (j, &v) in vertices.iter().enumerate() {
            arcs[i * m + j] = a.arc(u, v);
        }
    }
    Ok(Structure {
        language: a.language.clone(),
        names: vertices.iter().map(|&v| a.names[v].clone()).collect(),
        unary: vertices.iter().map(|&v| a.unary[v]).collect(),
        arcs,
    })
}

/// [`induced`] addressed by vertex names.
pub fn induced_by_names<S: AsRef<str>>(a: &Structure, names: &[S]) -> Result<Structure> {
    let idx = names
        .iter()
        .map(|n| {
            a.index_of(n.as_ref())
                .ok_or_else(|| Error::input(format!("unknown vertex `{}`", n.as_ref())))
        })
        .collect::<Result<Vec<_>>>()?;
    induced(a, &idx)
}

/// Gaifman graph as a dense adjacency matrix.
#[derive(Clone, Debug)]
pub struct Gaifman {
    n: usize,
    adj: Vec<bool>,
}

impl Gaifman {
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.adjacent(v, u))
    }
}

pub fn gaifman(a: &Structure) -> Gaifman {
    let n = a.len();
    let mut adj = vec![false; n * n];
    for u in 0..n {
        for v in 0..n {
            adj[u * n + v] = a.adjacent(u, v);
        }
    }
    Gaifman { n, adj }
}

/// Every two distinct vertices are adjacent.
pub fn is_irreducible(a: &Structure) -> bool {
    let n = a.len();
    (0..n).all(|u| (u + 1..n).all(|v| a.adjacent(u, v)))
}

/// Assemble `a` on `(u, v)`, `b` on `(v, w)` and `c` on `(u, w)`.
///
/// Returns `None` when the letters disagree on a shared vertex.
pub fn triangle(language: &Arc<Language>, a: Letter, b: Letter, c: Letter) -> Option<Structure> {
    if a.source != c.source || a.target != b.source || b.target != c.target {
        return None;
    }
    let mut d = Structure::new(
        language.clone(),
        vec!["u".to_string(), "v".to_string(), "w".to_string()],
    )
    .expect("distinct names");
    d.set_vertex_type(0, a.source);
    d.set_vertex_type(1, a.target);
    d.set_vertex_type(2, b.target);
    d.set_letter(0, 1, a);
    d.set_letter(1, 2, b);
    d.set_letter(0, 2, c);
    Some(d)
}
