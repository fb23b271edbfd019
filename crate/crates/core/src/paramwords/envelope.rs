//! Minimal envelopes and embedding types of finite word sets.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::paramwords::word::{apply_params, ParamWord, Word};

/// A minimal envelope `W` of a word set `S` over the empty alphabet, with
/// the type `τ` such that `W(τ) = S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnvelopeResult {
    pub envelope: ParamWord,
    /// Sorted; `tau[i]` need not correspond to the i-th input word.
    pub tau: Vec<Word>,
    pub d: usize,
}

impl EnvelopeResult {
    /// The parameter sequence of the envelope.
    pub fn params(&self) -> Vec<usize> {
        self.envelope
            .entries()
            .iter()
            .map(|e| match e {
                crate::paramwords::Symbol::Param(p) => *p,
                crate::paramwords::Symbol::Letter(_) => unreachable!("envelopes have no letters"),
            })
            .collect()
    }
}

/// Sorts and deduplicates `s`, rejecting empty sets and empty words.
pub(crate) fn normalize_set(s: &[Word]) -> Result<Vec<Word>> {
    if s.is_empty() {
        return Err(Error::input("the word set must be nonempty"));
    }
    if s.iter().any(Vec::is_empty) {
        return Err(Error::input("empty words have no envelope"));
    }
    let mut v = s.to_vec();
    v.sort();
    v.dedup();
    Ok(v)
}

/// Position classes of a minimal envelope of the (normalized) set `s`:
/// `class[j]` is the parameter at position `j`.
///
/// Position `j` may share the parameter first used at `i < j` exactly when
/// every word longer than `j` has equal letters at `i` and `j`. A position
/// equal to the length of a shorter word must open a new parameter, since
/// that word is produced by cutting before it. Every other position joins
/// the earliest compatible parameter, or opens a new one if none exists;
/// the number of opened parameters is then the least possible.
pub(crate) fn envelope_classes(s: &[Word]) -> Vec<usize> {
    let m = s.iter().map(Vec::len).max().unwrap_or(0);
    let mut forced = vec![false; m + 1];
    for w in s {
        forced[w.len()] = true;
    }
    let mut starters: Vec<usize> = Vec::new();
    let mut class = vec![0; m];
    for j in 0..m {
        let joined = if forced[j] {
            None
        } else {
            starters
                .iter()
                .position(|&i| s.iter().all(|w| w.len() <= j || w[i] == w[j]))
        };
        class[j] = match joined {
            Some(c) => c,
            None => {
                starters.push(j);
                starters.len() - 1
            }
        };
    }
    class
}

/// The type of word `w` under an envelope with the given classes: its
/// letters at the first position of each parameter, up to its length.
pub(crate) fn preimage(class: &[usize], w: &[usize]) -> Word {
    let mut out = Vec::new();
    for (j, &c) in class.iter().enumerate().take(w.len()) {
        if c == out.len() {
            out.push(w[j]);
        }
    }
    out
}

/// A minimal envelope of `s` together with `τ`. Both are re-checked:
/// substituting `τ` into the envelope must give back `s`.
pub fn minimal_envelope(s: &[Word]) -> Result<EnvelopeResult> {
    let s = normalize_set(s)?;
    let class = envelope_classes(&s);
    let d = class.iter().copied().max().map_or(0, |c| c + 1);
    let mut tau: Vec<Word> = s.iter().map(|w| preimage(&class, w)).collect();
    for (w, t) in s.iter().zip(&tau) {
        if &apply_params(&class, t) != w {
            return Err(Error::Alarm(format!(
                "envelope {class:?} does not reproduce {w:?} from {t:?}"
            )));
        }
    }
    tau.sort();
    Ok(EnvelopeResult { envelope: ParamWord::from_params(&class)?, tau, d })
}

/// `τ(S)`, the type of `S` in any of its minimal envelopes.
pub fn embedding_type(s: &[Word]) -> Result<Vec<Word>> {
    Ok(minimal_envelope(s)?.tau)
}

/// `τ(S)` without validation, for enumeration loops over sets already known
/// to be nonempty with nonempty words.
pub(crate) fn type_of_normalized(s: &[Word]) -> Vec<Word> {
    let class = envelope_classes(s);
    let mut tau: Vec<Word> = s.iter().map(|w| preimage(&class, w)).collect();
    tau.sort();
    tau
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(words: &[&str]) -> EnvelopeResult {
        let s: Vec<Word> = words
            .iter()
            .map(|w| w.bytes().map(|b| (b - b'a') as usize).collect())
            .collect();
        minimal_envelope(&s).unwrap()
    }

    fn show(t: &[Word]) -> Vec<String> {
        t.iter()
            .map(|w| w.iter().map(|&a| char::from(b'a' + a as u8)).collect())
            .collect()
    }

    #[test]
    fn two_words_of_equal_length() {
        let r = env(&["ab", "aa"]);
        assert_eq!(r.d, 2);
        assert_eq!(r.params(), [0, 1]);
        assert_eq!(show(&r.tau), ["aa", "ab"]);
    }

    #[test]
    fn repeated_letter() {
        let r = env(&["aa"]);
        assert_eq!(r.d, 1);
        assert_eq!(r.params(), [0, 0]);
        assert_eq!(show(&r.tau), ["a"]);
    }

    #[test]
    fn prefix_forces_a_parameter() {
        let r = env(&["a", "ab"]);
        assert_eq!(r.d, 2);
        assert_eq!(r.params(), [0, 1]);
        assert_eq!(show(&r.tau), ["a", "ab"]);
    }

    #[test]
    fn periodic_words_condense() {
        assert_eq!(show(&env(&["abab"]).tau), ["ab"]);
        assert_eq!(env(&["abab"]).params(), [0, 1, 0, 1]);
        assert_eq!(show(&env(&["aba"]).tau), ["ab"]);
    }

    #[test]
    fn distinct_single_letters_are_their_own_type() {
        assert_eq!(show(&env(&["a", "b", "c"]).tau), ["a", "b", "c"]);
        assert_eq!(env(&["a", "b"]).params(), [0]);
    }

    #[test]
    fn empty_inputs_are_rejected() {
        assert!(minimal_envelope(&[]).is_err());
        assert!(minimal_envelope(&[vec![]]).is_err());
    }
}
