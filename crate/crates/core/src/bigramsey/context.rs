use std::sync::Arc;

use serde::Serialize;

use crate::completion::ClassSpec;
use crate::error::{Error, Result};
use crate::paramwords::Word;
use crate::relstruct::{triangle, Letter, VertexType};

/// A vertex of the word structure: a nonempty word over the alphabet whose
/// letters all have the same target vertex type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GVertex(pub Word);

impl GVertex {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }
}

/// The structure the word structure induces on an ordered pair of vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GPair {
    NonAdjacent,
    /// The letter, oriented from the first argument to the second.
    Adjacent(Letter),
}

/// The alphabet of a class spec with its triangle admissibility table, the
/// shared input of every word-structure operation.
#[derive(Clone, Debug)]
pub struct GContext {
    spec: Arc<ClassSpec>,
    sigma: Vec<Letter>,
    names: Vec<String>,
    /// `tri_ok[(a * s + b) * s + c]`: `△(σ_a, σ_b, σ_c)` is defined and
    /// admissible.
    tri_ok: Vec<bool>,
}

impl GContext {
    pub fn new(spec: ClassSpec) -> Result<Self> {
        let sigma = spec.alphabet()?.to_vec();
        let s = sigma.len();
        let lang = spec.language().clone();
        let mut tri_ok = vec![false; s * s * s];
        for a in 0..s {
            for b in 0..s {
                for c in 0..s {
                    tri_ok[(a * s + b) * s + c] = triangle(&lang, sigma[a], sigma[b], sigma[c])
                        .is_some_and(|t| spec.admits(&t));
                }
            }
        }
        let names = sigma.iter().map(|l| spec.letter_name(l)).collect();
        Ok(GContext { spec: Arc::new(spec), sigma, names, tri_ok })
    }

    pub fn spec(&self) -> &ClassSpec {
        &self.spec
    }

    /// The alphabet in canonical letter order.
    pub fn sigma(&self) -> &[Letter] {
        &self.sigma
    }

    pub fn letter_names(&self) -> &[String] {
        &self.names
    }

    pub fn letter(&self, i: usize) -> Letter {
        self.sigma[i]
    }

    pub fn index_of(&self, l: &Letter) -> Option<usize> {
        self.sigma.binary_search(l).ok()
    }

    /// `△(σ_a, σ_b, σ_c)` is defined and embeds into the target.
    pub fn triangle_ok(&self, a: usize, b: usize, c: usize) -> bool {
        let s = self.sigma.len();
        self.tri_ok[(a * s + b) * s + c]
    }

    fn check_letters(&self, w: &[usize]) -> Result<()> {
        match w.iter().find(|&&a| a >= self.sigma.len()) {
            Some(a) => Err(Error::input(format!(
                "letter index {a} is outside an alphabet of {} letters",
                self.sigma.len()
            ))),
            None => Ok(()),
        }
    }

    /// Nonempty, and all letters agree on the type of their vertex 1.
    pub fn is_vertex(&self, w: &[usize]) -> Result<bool> {
        self.check_letters(w)?;
        Ok(self.is_vertex_unchecked(w))
    }

    pub(crate) fn is_vertex_unchecked(&self, w: &[usize]) -> bool {
        match w.split_first() {
            None => false,
            Some((&first, rest)) => {
                let t = self.sigma[first].target;
                rest.iter().all(|&a| self.sigma[a].target == t)
            }
        }
    }

    /// The vertex type of a valid word vertex.
    pub fn vertex_type(&self, w: &[usize]) -> VertexType {
        self.sigma[w[0]].target
    }

    /// The pair structure on `(u, v)`. Distinct lengths: with `s` the
    /// shorter and `l` the longer word, adjacent with letter `l_{|s|}`
    /// (oriented from `s`) iff `△(s_i, l_{|s|}, l_i)` is defined and
    /// admissible for every `i < |s|`.
    pub fn pair(&self, u: &[usize], v: &[usize]) -> Result<GPair> {
        if !self.is_vertex(u)? || !self.is_vertex(v)? {
            return Err(Error::input("both words must be valid vertices"));
        }
        if u == v {
            return Err(Error::input("a pair needs two distinct vertices"));
        }
        Ok(self.pair_unchecked(u, v))
    }

    pub(crate) fn pair_unchecked(&self, u: &[usize], v: &[usize]) -> GPair {
        if u.len() == v.len() {
            return GPair::NonAdjacent;
        }
        let (short, long, swapped) = if u.len() < v.len() { (u, v, false) } else { (v, u, true) };
        let mid = long[short.len()];
        if (0..short.len()).all(|i| self.triangle_ok(short[i], mid, long[i])) {
            let l = self.sigma[mid];
            GPair::Adjacent(if swapped { l.reverse() } else { l })
        } else {
            GPair::NonAdjacent
        }
    }

    /// Letters concatenated when every letter name is one character, joined
    /// by `.` otherwise.
    pub fn render(&self, w: &[usize]) -> String {
        let sep = if self.names.iter().all(|n| n.chars().count() == 1) { "" } else { "." };
        w.iter().map(|&a| self.names[a].as_str()).collect::<Vec<_>>().join(sep)
    }

    /// Inverse of [`GContext::render`].
    pub fn parse(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        let tokens: Vec<&str> = if self.names.iter().all(|n| n.chars().count() == 1) && !text.contains('.') {
            text.char_indices().map(|(i, c)| &text[i..i + c.len_utf8()]).collect()
        } else {
            text.split('.').collect()
        };
        tokens
            .iter()
            .map(|t| {
                self.names
                    .iter()
                    .position(|n| n == t)
                    .ok_or_else(|| Error::input(format!("unknown letter `{t}`")))
            })
            .collect()
    }
}
