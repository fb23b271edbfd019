use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::bigramsey::context::GContext;
use crate::bigramsey::truncation::g_truncation;
use crate::caps;
use crate::error::{Error, Result};
use crate::paramwords::{type_of_normalized, Word};
use crate::relstruct::io::StructureJson;
use crate::relstruct::{for_each_embedding, Structure};

/// Embedding types of the copies of `A` in a truncation of the word
/// structure. The number of types bounds the big Ramsey degree of `A` from
/// above once every type has been realized.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeBoundReport {
    pub target: StructureJson,
    pub rule: &'static str,
    pub n: usize,
    pub copies: usize,
    /// Distinct types with one witnessing copy each (vertex words).
    pub types: Vec<TypeWitness>,
    /// `counts[b - 1]`: types realized by copies with words of length at
    /// most `b`.
    pub counts: Vec<usize>,
    pub count: usize,
    /// The counts at `n - 1` and `n` agree.
    pub stabilized: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TypeWitness {
    pub tau: Vec<String>,
    pub copy: Vec<String>,
    /// Longest word of the smallest realizing copy.
    pub level: usize,
}

/// Collects `τ` of the vertex-word set of every copy of `a` in the
/// truncation at length `n`.
pub fn degree_upper_bound(ctx: &GContext, a: &Structure, n: usize) -> Result<DegreeBoundReport> {
    if a.language() != ctx.spec().language() {
        return Err(Error::input("structure and class spec use different languages"));
    }
    if a.is_empty() {
        return Err(Error::input("the target structure needs at least one vertex"));
    }
    let t = g_truncation(ctx, n)?;
    let cap = caps::work_cap() as usize;
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut over = false;
    for_each_embedding(a, &t.structure, |f| {
        let mut img = f.to_vec();
        img.sort_unstable();
        seen.insert(img);
        over = seen.len() > cap;
        !over
    });
    if over {
        return Err(Error::capacity(format!("more than {cap} copies")));
    }
    // type -> (level, copy) with the smallest level, then first copy.
    let mut types: BTreeMap<Vec<Word>, (usize, Vec<usize>)> = BTreeMap::new();
    for img in &seen {
        let mut words: Vec<Word> = img.iter().map(|&v| t.words[v].clone()).collect();
        words.sort();
        let level = words.iter().map(Vec::len).max().unwrap_or(0);
        let tau = type_of_normalized(&words);
        let e = types.entry(tau).or_insert((level, img.clone()));
        if level < e.0 {
            *e = (level, img.clone());
        }
    }
    let counts: Vec<usize> = (1..=n).map(|b| types.values().filter(|(l, _)| *l <= b).count()).collect();
    let stabilized = n >= 2 && counts[n - 1] == counts[n - 2];
    Ok(DegreeBoundReport {
        target: StructureJson::from_structure(a),
        rule: ctx.spec().rule().kind(),
        n,
        copies: seen.len(),
        count: types.len(),
        types: types
            .into_iter()
            .map(|(tau, (level, copy))| TypeWitness {
                tau: tau.iter().map(|w| ctx.render(w)).collect(),
                copy: copy.iter().map(|&v| t.structure.name(v).to_string()).collect(),
                level,
            })
            .collect(),
        counts,
        stabilized,
    })
}
