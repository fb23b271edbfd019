use std::collections::HashMap;

use rayon::prelude::*;

use crate::bigramsey::context::{GContext, GPair};
use crate::caps;
use crate::error::{Error, Result};
use crate::paramwords::Word;
use crate::relstruct::io::{to_dot_with, StructureJson};
use crate::relstruct::Structure;

/// The word structure restricted to vertices of length at most `n`.
#[derive(Clone, Debug)]
pub struct GTruncation {
    pub n: usize,
    /// Vertex words ordered by length, then lexicographically.
    pub words: Vec<Word>,
    pub structure: Structure,
    index: HashMap<Word, usize>,
}

impl GTruncation {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn index_of(&self, w: &[usize]) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn to_json(&self) -> StructureJson {
        StructureJson::from_structure(&self.structure)
    }

    pub fn to_dot(&self, ctx: &GContext) -> String {
        to_dot_with(&self.structure, "G", |l| {
            ctx.index_of(l)
                .map(|i| ctx.letter_names()[i].clone())
                .or_else(|| ctx.index_of(&l.reverse()).map(|i| format!("{}^-1", ctx.letter_names()[i])))
                .unwrap_or_else(|| l.default_name(ctx.spec().language()))
        })
    }
}

/// Valid vertex words of length `1..=n` in (length, lexicographic) order.
pub fn vertex_words(ctx: &GContext, n: usize, cap: usize) -> Result<Vec<Word>> {
    let s = ctx.sigma().len();
    let mut out: Vec<Word> = Vec::new();
    let mut level: Vec<Word> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &level {
            for a in 0..s {
                let mut v = w.clone();
                v.push(a);
                if ctx.is_vertex_unchecked(&v) {
                    next.push(v);
                }
            }
            if out.len() + next.len() > cap {
                return Err(Error::capacity(format!(
                    "the truncation at length {n} has more than {cap} vertices"
                )));
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}

pub fn g_truncation(ctx: &GContext, n: usize) -> Result<GTruncation> {
    g_truncation_with_cap(ctx, n, caps::truncation_cap())
}

pub fn g_truncation_with_cap(ctx: &GContext, n: usize, cap: usize) -> Result<GTruncation> {
    if n == 0 {
        return Err(Error::input("the truncation length must be at least 1"));
    }
    let words = vertex_words(ctx, n, cap)?;
    let names: Vec<String> = words.iter().map(|w| ctx.render(w)).collect();
    let mut structure = Structure::new(ctx.spec().language().clone(), names)?;
    for (v, w) in words.iter().enumerate() {
        structure.set_vertex_type(v, ctx.vertex_type(w));
    }
    let edges: Vec<(usize, usize, crate::relstruct::Letter)> = (0..words.len())
        .into_par_iter()
        .flat_map_iter(|u| {
            let words = &words;
            (u + 1..words.len()).filter_map(move |v| match ctx.pair_unchecked(&words[u], &words[v]) {
                GPair::Adjacent(l) => Some((u, v, l)),
                GPair::NonAdjacent => None,
            })
        })
        .collect();
    for (u, v, l) in edges {
        structure.set_letter(u, v, l);
    }
    let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    Ok(GTruncation { n, words, structure, index })
}
