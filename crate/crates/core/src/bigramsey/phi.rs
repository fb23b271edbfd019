use serde::Serialize;

use crate::bigramsey::context::{GContext, GPair};
use crate::completion::{complete, duplicate_vertex, CompletionResult};
use crate::error::{Error, Result};
use crate::paramwords::Word;
use crate::relstruct::io::StructureJson;
use crate::relstruct::{is_irreducible, Letter, Structure};

/// The embedding of a finite irreducible `K_n` into the word structure.
///
/// `k_prime` is `K_n` extended by a copy of its first vertex, placed first
/// and completed; `words[i]` is the image of the `i`-th vertex of `K_n`: its
/// `j`-th letter is the pair type of `(j, i + 1)` in `k_prime`.
#[derive(Clone, Debug)]
pub struct PhiMap {
    pub k: Structure,
    pub k_prime: Structure,
    /// The letter chosen for the pair of the copy and the original.
    pub duplicate_letter: Letter,
    pub words: Vec<Word>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PhiReport {
    pub k: StructureJson,
    pub k_prime: StructureJson,
    pub duplicate_letter: String,
    pub images: Vec<(String, String)>,
    pub verified: bool,
}

/// Builds `φ` for an irreducible admissible `K_n`.
pub fn phi(ctx: &GContext, k: &Structure) -> Result<PhiMap> {
    let spec = ctx.spec();
    if k.language() != spec.language() {
        return Err(Error::input("structure and class spec use different languages"));
    }
    if k.is_empty() {
        return Err(Error::input("K_n needs at least one vertex"));
    }
    if !is_irreducible(k) || !spec.admits(k) {
        return Err(Error::input("K_n must be irreducible and admissible for the class"));
    }
    let (dup, copy) = duplicate_vertex(k, 0)?;
    let completed = match complete(&dup, spec)? {
        CompletionResult::Completed { structure, .. } => structure,
        CompletionResult::Obstructed(o) => {
            return Err(Error::Alarm(format!(
                "duplicating a vertex of K_n gave a non-completable structure ({})",
                o.kind()
            )))
        }
    };
    // Reorder so the copy is vertex 0 and K_n's vertices follow.
    let n = k.len();
    let order: Vec<usize> = std::iter::once(copy).chain(0..n).collect();
    let k_prime = crate::relstruct::induced(&completed, &order)?;
    let mut words = Vec::with_capacity(n);
    for i in 1..=n {
        let mut w = Vec::with_capacity(i);
        for j in 0..i {
            let l = k_prime.letter(j, i);
            let idx = ctx.index_of(&l).ok_or_else(|| {
                Error::Alarm(format!("pair ({j}, {i}) of the extended structure is not in the alphabet"))
            })?;
            w.push(idx);
        }
        words.push(w);
    }
    Ok(PhiMap { k: k.clone(), duplicate_letter: k_prime.letter(0, 1), k_prime, words })
}

/// Every image is a valid vertex of length `i + 1`, and every pair of
/// images carries exactly the letter of the corresponding pair of `K_n`.
pub fn verify_phi(ctx: &GContext, map: &PhiMap) -> bool {
    let n = map.k.len();
    if map.words.len() != n {
        return false;
    }
    for (i, w) in map.words.iter().enumerate() {
        if w.len() != i + 1 || !matches!(ctx.is_vertex(w), Ok(true)) {
            return false;
        }
        if ctx.vertex_type(w) != map.k.vertex_type(i) {
            return false;
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if ctx.pair_unchecked(&map.words[i], &map.words[j]) != GPair::Adjacent(map.k.letter(i, j)) {
                return false;
            }
        }
    }
    true
}

impl PhiMap {
    pub fn report(&self, ctx: &GContext) -> PhiReport {
        let name = |l: &Letter| {
            ctx.index_of(l)
                .map(|i| ctx.letter_names()[i].clone())
                .unwrap_or_else(|| l.default_name(ctx.spec().language()))
        };
        PhiReport {
            k: StructureJson::from_structure(&self.k),
            k_prime: StructureJson::from_structure(&self.k_prime),
            duplicate_letter: name(&self.duplicate_letter),
            images: self
                .words
                .iter()
                .enumerate()
                .map(|(i, w)| (self.k.name(i).to_string(), ctx.render(w)))
                .collect(),
            verified: verify_phi(ctx, self),
        }
    }
}
