use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A plain word: indices into an ordered alphabet.
pub type Word = Vec<usize>;

/// One entry of a parameter word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symbol {
    Letter(usize),
    Param(usize),
}

/// A finite word over `Σ ∪ {λ_0, λ_1, …}` whose parameters are exactly
/// `λ_0 … λ_{k-1}`, first occurring in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParamWord {
    alphabet_size: usize,
    entries: Vec<Symbol>,
    params: usize,
}

impl ParamWord {
    pub fn new(alphabet_size: usize, entries: Vec<Symbol>) -> Result<Self> {
        let mut params = 0;
        for (pos, e) in entries.iter().enumerate() {
            match *e {
                Symbol::Letter(a) if a >= alphabet_size => {
                    return Err(Error::input(format!(
                        "letter {a} at position {pos} is outside an alphabet of size {alphabet_size}"
                    )))
                }
                Symbol::Param(i) if i > params => {
                    return Err(Error::input(format!(
                        "parameter _{i} at position {pos} occurs before _{params}"
                    )))
                }
                Symbol::Param(i) if i == params => params += 1,
                _ => {}
            }
        }
        Ok(ParamWord { alphabet_size, entries, params })
    }

    /// A word without parameters.
    pub fn plain(alphabet_size: usize, word: &[usize]) -> Result<Self> {
        Self::new(alphabet_size, word.iter().map(|&a| Symbol::Letter(a)).collect())
    }

    /// The all-parameter word over the empty alphabet with the given
    /// parameter sequence (which must be a restricted growth string).
    pub fn from_params(params: &[usize]) -> Result<Self> {
        Self::new(0, params.iter().map(|&p| Symbol::Param(p)).collect())
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn entries(&self) -> &[Symbol] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn params(&self) -> usize {
        self.params
    }

    /// The letters, if the word has no parameters.
    pub fn as_plain(&self) -> Option<Word> {
        self.entries
            .iter()
            .map(|e| match e {
                Symbol::Letter(a) => Some(*a),
                Symbol::Param(_) => None,
            })
            .collect()
    }

    /// Parses whitespace-separated tokens: `_i` for parameters, otherwise a
    /// letter name from `alphabet`.
    pub fn parse(text: &str, alphabet: &[String]) -> Result<Self> {
        let mut entries = Vec::new();
        for tok in text.split_whitespace() {
            if let Some(i) = tok.strip_prefix('_') {
                let i = i
                    .parse()
                    .map_err(|_| Error::input(format!("bad parameter token `{tok}`")))?;
                entries.push(Symbol::Param(i));
            } else {
                let a = alphabet
                    .iter()
                    .position(|n| n == tok)
                    .ok_or_else(|| Error::input(format!("unknown letter `{tok}`")))?;
                entries.push(Symbol::Letter(a));
            }
        }
        Self::new(alphabet.len(), entries)
    }

    pub fn render(&self, alphabet: &[String]) -> String {
        self.entries
            .iter()
            .map(|e| match *e {
                Symbol::Letter(a) => alphabet.get(a).cloned().unwrap_or_else(|| format!("#{a}")),
                Symbol::Param(i) => format!("_{i}"),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for ParamWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.alphabet_size).map(letter_name).collect();
        f.write_str(&self.render(&names))
    }
}

/// Default letter names `a`, `b`, …, `z`, then `a26`, `a27`, ….
pub fn letter_name(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("a{i}")
    }
}

/// Reads a plain word: whitespace-separated letter names, or one letter per
/// character when every name is a single character.
pub fn parse_word(text: &str, alphabet: &[String]) -> Result<Word> {
    let text = text.trim();
    let tokens: Vec<String> = if text.contains(char::is_whitespace)
        || !alphabet.iter().all(|n| n.chars().count() == 1)
    {
        text.split_whitespace().map(String::from).collect()
    } else {
        text.chars().map(String::from).collect()
    };
    tokens
        .iter()
        .map(|t| {
            alphabet
                .iter()
                .position(|n| n == t)
                .ok_or_else(|| Error::input(format!("unknown letter `{t}`")))
        })
        .collect()
}

/// Renders a plain word; letters are concatenated when all names are single
/// characters and separated by spaces otherwise.
pub fn render_word(word: &[usize], alphabet: &[String]) -> String {
    let sep = if alphabet.iter().all(|n| n.chars().count() == 1) { "" } else { " " };
    word.iter()
        .map(|&a| alphabet.get(a).cloned().unwrap_or_else(|| format!("#{a}")))
        .collect::<Vec<_>>()
        .join(sep)
}

/// `W(U)`: each `λ_i` of `W` with `i < |U|` becomes `U_i`, and the result is
/// cut just before the first `λ_{|U|}`.
pub fn substitute(w: &ParamWord, u: &ParamWord) -> Result<ParamWord> {
    let k = u.len();
    if k > w.params {
        return Err(Error::input(format!(
            "cannot substitute a word of length {k} into a word with {} parameters",
            w.params
        )));
    }
    let mut out = Vec::with_capacity(w.len());
    for e in &w.entries {
        match *e {
            Symbol::Param(i) if i == k => break,
            Symbol::Param(i) => out.push(u.entries[i]),
            letter => out.push(letter),
        }
    }
    ParamWord::new(w.alphabet_size.max(u.alphabet_size), out)
}

/// `W(S) = {W(U) : U ∈ S}`, sorted and without repeats.
pub fn substitute_set(w: &ParamWord, s: &[ParamWord]) -> Result<Vec<ParamWord>> {
    let mut out = s.iter().map(|u| substitute(w, u)).collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// Plain-word substitution into an all-parameter word given by its
/// parameter sequence.
pub(crate) fn apply_params(w: &[usize], u: &[usize]) -> Word {
    let k = u.len();
    let mut out = Vec::with_capacity(w.len());
    for &p in w {
        if p == k {
            break;
        }
        out.push(u[p]);
    }
    out
}

/// `(W(U))(V) = W(U(V))`, for `|U| <= params(W)` and `|V| <= params(U)`.
pub fn compose_check(w: &ParamWord, u: &ParamWord, v: &ParamWord) -> Result<bool> {
    let left = substitute(&substitute(w, u)?, v)?;
    let right = substitute(w, &substitute(u, v)?)?;
    Ok(left == right)
}
