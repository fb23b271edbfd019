use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Masks are `u64`, so each arity holds at most this many symbols.
pub const MAX_SYMBOLS_PER_ARITY: usize = 64;

/// A relation symbol together with its arity (1 or 2).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymbolDef {
    pub name: String,
    pub arity: u8,
}

impl SymbolDef {
    pub fn unary(name: impl Into<String>) -> Self {
        SymbolDef { name: name.into(), arity: 1 }
    }

    pub fn binary(name: impl Into<String>) -> Self {
        SymbolDef { name: name.into(), arity: 2 }
    }
}

/// A finite relational language of unary and binary symbols.
///
/// Unary symbols and binary symbols are each numbered in declaration order;
/// that number is the bit a symbol occupies in vertex and arc masks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Language {
    symbols: Vec<SymbolDef>,
    unary: Vec<usize>,
    binary: Vec<usize>,
    by_name: Vec<(String, usize)>,
}

impl Language {
    pub fn new(symbols: Vec<SymbolDef>) -> Result<Self> {
        let mut seen = HashMap::new();
        let mut unary = Vec::new();
        let mut binary = Vec::new();
        for (i, s) in symbols.iter().enumerate() {
            if s.name.is_empty() {
                return Err(Error::input("symbol names must be nonempty"));
            }
            if seen.insert(s.name.clone(), i).is_some() {
                return Err(Error::input(format!("duplicate symbol `{}`", s.name)));
            }
            match s.arity {
                1 => unary.push(i),
                2 => binary.push(i),
                a => {
                    return Err(Error::input(format!(
                        "symbol `{}` has arity {a}; only unary and binary symbols are supported",
                        s.name
                    )))
                }
            }
        }
        if unary.len() > MAX_SYMBOLS_PER_ARITY || binary.len() > MAX_SYMBOLS_PER_ARITY {
            return Err(Error::capacity(format!(
                "at most {MAX_SYMBOLS_PER_ARITY} symbols per arity are supported"
            )));
        }
        let mut by_name: Vec<(String, usize)> = seen.into_iter().collect();
        by_name.sort();
        Ok(Language { symbols, unary, binary, by_name })
    }

    /// Language of binary symbols only, in the given order.
    pub fn binary_only<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Language::new(names.into_iter().map(SymbolDef::binary).collect())
    }

    pub fn symbols(&self) -> &[SymbolDef] {
        &self.symbols
    }

    pub fn unary_count(&self) -> usize {
        self.unary.len()
    }

    pub fn binary_count(&self) -> usize {
        self.binary.len()
    }

    fn lookup(&self, name: &str) -> Option<usize> {
        self.by_name
            .binary_search_by(|(n, _)| n.as_str().cmp(name))
            .ok()
            .map(|i| self.by_name[i].1)
    }

    /// Bit of the unary symbol `name`.
    pub fn unary_bit(&self, name: &str) -> Option<usize> {
        let idx = self.lookup(name)?;
        self.unary.iter().position(|&i| i == idx)
    }

    /// Bit of the binary symbol `name`.
    pub fn binary_bit(&self, name: &str) -> Option<usize> {
        let idx = self.lookup(name)?;
        self.binary.iter().position(|&i| i == idx)
    }

    pub fn arity(&self, name: &str) -> Option<u8> {
        self.lookup(name).map(|i| self.symbols[i].arity)
    }

    pub fn unary_name(&self, bit: usize) -> &str {
        &self.symbols[self.unary[bit]].name
    }

    pub fn binary_name(&self, bit: usize) -> &str {
        &self.symbols[self.binary[bit]].name
    }

    /// Names of the binary symbols set in `mask`, in bit order.
    pub fn binary_names(&self, mask: u64) -> Vec<&str> {
        bits(mask).map(|b| self.binary_name(b)).collect()
    }

    pub fn unary_names(&self, mask: u64) -> Vec<&str> {
        bits(mask).map(|b| self.unary_name(b)).collect()
    }

    /// Same symbols (names and arities), possibly declared in another order.
    pub fn same_symbols(&self, other: &Language) -> bool {
        let mut a = self.symbols.clone();
        let mut b = other.symbols.clone();
        a.sort();
        b.sort();
        a == b
    }
}

/// Iterator over the set bits of a mask, lowest first.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_ternary_and_duplicates() {
        let err = Language::new(vec![SymbolDef { name: "T".into(), arity: 3 }]);
        assert!(matches!(err, Err(Error::Input(_))));
        let err = Language::new(vec![SymbolDef::binary("E"), SymbolDef::unary("E")]);
        assert!(matches!(err, Err(Error::Input(_))));
    }

    #[test]
    fn bits_are_per_arity() {
        let l = Language::new(vec![
            SymbolDef::binary("E"),
            SymbolDef::unary("red"),
            SymbolDef::binary("N"),
        ])
        .unwrap();
        assert_eq!(l.binary_bit("E"), Some(0));
        assert_eq!(l.binary_bit("N"), Some(1));
        assert_eq!(l.unary_bit("red"), Some(0));
        assert_eq!(l.binary_bit("red"), None);
        assert_eq!(l.binary_names(0b11), vec!["E", "N"]);
    }

    #[test]
    fn bit_iteration() {
        assert_eq!(bits(0b1010).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(bits(0).count(), 0);
    }
}
