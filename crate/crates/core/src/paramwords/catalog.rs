//! Catalogues of embedding types of `k`-sets of words.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::caps;
use crate::error::{Error, Result};
use crate::paramwords::envelope::type_of_normalized;
use crate::paramwords::word::Word;

/// Distinct types of `k`-sets of words up to a length bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeCatalog {
    pub alphabet_size: usize,
    pub k: usize,
    /// Largest word length explored.
    pub bound: usize,
    /// Whether types differing by a permutation of the alphabet were merged.
    pub renamed: bool,
    /// Distinct types, sorted.
    pub types: Vec<Vec<Word>>,
    /// `counts[b - 1]` is the number of types realized with words of length
    /// at most `b`.
    pub counts: Vec<usize>,
    /// Largest number of envelope parameters among the realized types.
    pub max_d: usize,
    /// The counts at the last two bounds agree.
    pub stabilized: bool,
}

impl TypeCatalog {
    pub fn count(&self) -> usize {
        self.types.len()
    }
}

/// Every word over `Σ = {0, …, alphabet_size-1}` of length `1..=bound`,
/// ordered by length and then lexicographically.
pub fn words_up_to(alphabet_size: usize, bound: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut level: Vec<Word> = vec![Vec::new()];
    for _ in 0..bound {
        level = level
            .iter()
            .flat_map(|w| {
                (0..alphabet_size).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        out.extend(level.iter().cloned());
    }
    out
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// The smallest renaming of the letters of a type under every permutation
/// of the alphabet.
pub fn canonical_renaming(tau: &[Word], alphabet_size: usize) -> Vec<Word> {
    (0..alphabet_size)
        .permutations(alphabet_size)
        .map(|perm| {
            let mut t: Vec<Word> = tau.iter().map(|w| w.iter().map(|&a| perm[a]).collect()).collect();
            t.sort();
            t
        })
        .min()
        .unwrap_or_else(|| tau.to_vec())
}

/// Records, for each type, the smallest length bound realizing it.
fn collect_types(
    alphabet_size: usize,
    k: usize,
    bound: usize,
    rename: bool,
) -> BTreeMap<Vec<Word>, (usize, usize)> {
    let words = words_up_to(alphabet_size, bound);
    let n = words.len();
    (0..n)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<Vec<Word>, (usize, usize)>, first| {
            for rest in (first + 1..n).combinations(k - 1) {
                let mut set: Vec<Word> = std::iter::once(first)
                    .chain(rest)
                    .map(|i| words[i].clone())
                    .collect();
                set.sort();
                let maxlen = set.iter().map(Vec::len).max().unwrap_or(0);
                let mut tau = type_of_normalized(&set);
                let d = tau.iter().map(Vec::len).max().unwrap_or(0);
                if rename {
                    tau = canonical_renaming(&tau, alphabet_size);
                }
                let e = acc.entry(tau).or_insert((maxlen, d));
                e.0 = e.0.min(maxlen);
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (t, (len, d)) in b {
                let e = a.entry(t).or_insert((len, d));
                e.0 = e.0.min(len);
            }
            a
        })
}

/// All types of `k`-sets of words of length `1..=bound` over an alphabet of
/// the given size.
///
/// When the number of sets at the requested bound exceeds the work cap, the
/// catalogue for the largest affordable bound is returned inside
/// [`Error::CatalogCapacity`], flagged as not stabilized.
pub fn enumerate_types(alphabet_size: usize, k: usize, bound: usize, rename: bool) -> Result<TypeCatalog> {
    enumerate_types_with_cap(alphabet_size, k, bound, rename, caps::work_cap())
}

pub fn enumerate_types_with_cap(
    alphabet_size: usize,
    k: usize,
    bound: usize,
    rename: bool,
    cap: u64,
) -> Result<TypeCatalog> {
    if k == 0 || bound == 0 {
        return Err(Error::input("k and the length bound must be at least 1"));
    }
    if alphabet_size == 0 {
        return Err(Error::input("the alphabet must be nonempty"));
    }
    let sets_at = |b: usize| {
        let n: u128 = (1..=b as u32).map(|l| (alphabet_size as u128).saturating_pow(l)).sum();
        binomial(n.min(usize::MAX as u128) as usize, k)
    };
    let affordable = (1..=bound).take_while(|&b| sets_at(b) <= cap as u128).last().unwrap_or(0);
    let build = |b: usize| {
        let found = if b == 0 { BTreeMap::new() } else { collect_types(alphabet_size, k, b, rename) };
        let counts: Vec<usize> = (1..=b).map(|x| found.values().filter(|(l, _)| *l <= x).count()).collect();
        let stabilized = b >= 2 && counts[b - 1] == counts[b - 2];
        TypeCatalog {
            alphabet_size,
            k,
            bound: b,
            renamed: rename,
            max_d: found.values().map(|&(_, d)| d).max().unwrap_or(0),
            types: found.into_keys().collect(),
            counts,
            stabilized,
        }
    };
    if affordable < bound {
        let mut partial = build(affordable);
        partial.stabilized = false;
        return Err(Error::CatalogCapacity {
            reason: format!(
                "{} sets at length bound {} exceed the cap of {cap}",
                sets_at(affordable + 1),
                affordable + 1
            ),
            partial: Box::new(partial),
        });
    }
    Ok(build(bound))
}
