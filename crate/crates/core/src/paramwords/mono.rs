//! Exhaustive search for monochromatic substitution images at tiny sizes.
//!
//! With a nonempty alphabet the coloured objects are the words of length
//! `n` and a witness is an `m`-parameter word of length `n` whose image
//! `{W(U) : U ∈ Σ^m}` is monochromatic (for `m = 1`, a combinatorial line).
//! With the empty alphabet the coloured objects are the `k`-parameter words
//! of length at most `n`, and a witness is an `m`-parameter word `W` of
//! length at most `n` with all of `{W(U) : U a k-parameter word of length
//! at most m}` of one colour.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::paramwords::word::{letter_name, substitute, ParamWord, Symbol};

pub const MAX_ALPHABET: usize = 2;
pub const MAX_LENGTH: usize = 4;
pub const MAX_COLOURS: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelResult {
    pub n: usize,
    pub objects: usize,
    pub candidates: usize,
    pub colourings: u64,
    /// Every colouring has a monochromatic witness.
    pub all_witnessed: bool,
    /// A colouring (object, colour) with no witness, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defeating: Option<Vec<(String, usize)>>,
    /// A witness for the all-zero colouring, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub example_witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonoReport {
    pub alphabet_size: usize,
    pub k: usize,
    pub m: usize,
    pub colours: usize,
    pub levels: Vec<LevelResult>,
    /// Least explored `n` at which every colouring has a witness.
    pub minimal_n: Option<usize>,
}

/// All parameter words over an alphabet of the given size with exactly
/// `params` parameters and length exactly `len`.
pub fn param_words(alphabet_size: usize, params: usize, len: usize) -> Vec<ParamWord> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(a: usize, params: usize, len: usize, opened: usize, cur: &mut Vec<Symbol>, out: &mut Vec<ParamWord>) {
        if params - opened > len - cur.len() {
            return;
        }
        if cur.len() == len {
            if opened == params {
                out.push(ParamWord::new(a, cur.clone()).expect("valid by construction"));
            }
            return;
        }
        for l in 0..a {
            cur.push(Symbol::Letter(l));
            go(a, params, len, opened, cur, out);
            cur.pop();
        }
        for p in 0..=opened.min(params.saturating_sub(1)) {
            if p == opened && opened == params {
                break;
            }
            cur.push(Symbol::Param(p));
            go(a, params, len, opened.max(p + 1), cur, out);
            cur.pop();
        }
    }
    go(alphabet_size, params, len, 0, &mut cur, &mut out);
    out
}

/// Searches every colouring at each `n' = 1..=n`.
pub fn monochromatic_search(
    alphabet_size: usize,
    k: usize,
    m: usize,
    colours: usize,
    n: usize,
) -> Result<MonoReport> {
    if alphabet_size > MAX_ALPHABET || n > MAX_LENGTH || colours > MAX_COLOURS {
        return Err(Error::capacity(format!(
            "search is limited to alphabets of at most {MAX_ALPHABET} letters, length at most \
             {MAX_LENGTH} and at most {MAX_COLOURS} colours"
        )));
    }
    if colours == 0 || n == 0 {
        return Err(Error::input("colours and length must be positive"));
    }
    if m <= k {
        return Err(Error::input("the witness needs more parameters than the coloured words"));
    }
    if alphabet_size > 0 && k != 0 {
        return Err(Error::input("with a nonempty alphabet only plain words (k = 0) are coloured"));
    }
    let names: Vec<String> = (0..alphabet_size).map(letter_name).collect();
    let mut levels = Vec::new();
    for len in 1..=n {
        levels.push(level(alphabet_size, k, m, colours, len, &names)?);
    }
    let minimal_n = levels.iter().find(|l| l.all_witnessed).map(|l| l.n);
    Ok(MonoReport { alphabet_size, k, m, colours, levels, minimal_n })
}

fn level(a: usize, k: usize, m: usize, colours: usize, n: usize, names: &[String]) -> Result<LevelResult> {
    let (objects, candidates, arguments): (Vec<ParamWord>, Vec<ParamWord>, Vec<ParamWord>) = if a > 0 {
        (param_words(a, 0, n), param_words(a, m, n), param_words(a, 0, m))
    } else {
        (
            (1..=n).flat_map(|l| param_words(0, k, l)).collect(),
            (1..=n).flat_map(|l| param_words(0, m, l)).collect(),
            (0..=m).flat_map(|l| param_words(0, k, l)).collect(),
        )
    };
    let mut sorted = objects.clone();
    sorted.sort();
    let objects = sorted;
    // Each candidate's image as object indices; images leaving the object
    // set (too short for k parameters) disqualify the candidate.
    let images: Vec<(usize, Vec<usize>)> = candidates
        .iter()
        .enumerate()
        .filter_map(|(ci, w)| {
            let img: Option<BTreeSet<usize>> = arguments
                .iter()
                .filter(|u| u.len() <= w.params())
                .map(|u| substitute(w, u).ok().and_then(|x| objects.binary_search(&x).ok()))
                .collect();
            img.filter(|s| !s.is_empty()).map(|s| (ci, s.into_iter().collect()))
        })
        .collect();
    let count = objects.len() as u32;
    let colourings = (colours as u64)
        .checked_pow(count)
        .filter(|&c| c <= crate::caps::work_cap())
        .ok_or_else(|| Error::capacity(format!("{colours}^{count} colourings exceed the work cap")))?;

    let render = |w: &ParamWord| w.render(names);
    let mut defeating = None;
    let mut example_witness = None;
    let mut colouring = vec![0usize; objects.len()];
    for code in 0..colourings {
        let mut c = code;
        for slot in colouring.iter_mut() {
            *slot = (c % colours as u64) as usize;
            c /= colours as u64;
        }
        let witness = images
            .iter()
            .find(|(_, img)| img.iter().all(|&o| colouring[o] == colouring[img[0]]));
        if code == 0 {
            example_witness = witness.map(|(ci, _)| render(&candidates[*ci]));
        }
        if witness.is_none() {
            defeating = Some(objects.iter().map(render).zip(colouring.iter().copied()).collect());
            break;
        }
    }
    Ok(LevelResult {
        n,
        objects: objects.len(),
        candidates: images.len(),
        colourings,
        all_witnessed: defeating.is_none(),
        defeating,
        example_witness,
    })
}
