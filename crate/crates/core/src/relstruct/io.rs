//! Structure JSON and Graphviz DOT.
//!
//! ```json
//! {"language": [{"name": "E", "arity": 2}],
//!  "vertices": ["a", "b"],
//!  "relations": {"E": [["a", "b"], ["b", "a"]]}}
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::relstruct::{Language, Letter, Structure, SymbolDef};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureJson {
    pub language: Vec<SymbolDef>,
    pub vertices: Vec<String>,
    #[serde(default)]
    pub relations: BTreeMap<String, Vec<Vec<String>>>,
}

impl StructureJson {
    pub fn from_structure(s: &Structure) -> Self {
        let mut relations = BTreeMap::new();
        for sym in s.language().symbols() {
            let tuples = s
                .tuples(&sym.name)
                .expect("symbol of own language")
                .into_iter()
                .map(|t| t.into_iter().map(|v| s.name(v).to_string()).collect())
                .collect();
            relations.insert(sym.name.clone(), tuples);
        }
        StructureJson {
            language: s.language().symbols().to_vec(),
            vertices: s.names().to_vec(),
            relations,
        }
    }

    /// Build the structure. When `language` is given, the declared symbols
    /// must match it (in any order) and its bit layout is used.
    pub fn to_structure(&self, language: Option<&Arc<Language>>) -> Result<Structure> {
        let declared = Language::new(self.language.clone())?;
        let lang = match language {
            Some(l) => {
                if !l.same_symbols(&declared) {
                    return Err(Error::input(
                        "structure language does not match the expected language",
                    ));
                }
                l.clone()
            }
            None => Arc::new(declared),
        };
        let mut s = Structure::new(lang, self.vertices.clone())?;
        let index: BTreeMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        for (sym, tuples) in &self.relations {
            for t in tuples {
                let idx = t
                    .iter()
                    .map(|n| {
                        index
                            .get(n.as_str())
                            .copied()
                            .ok_or_else(|| Error::input(format!("unknown vertex `{n}` in `{sym}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                s.add_tuple(sym, &idx)?;
            }
        }
        Ok(s)
    }
}

pub fn structure_to_json(s: &Structure) -> serde_json::Value {
    serde_json::to_value(StructureJson::from_structure(s)).expect("serializable")
}

pub fn structure_from_json(
    value: &serde_json::Value,
    language: Option<&Arc<Language>>,
) -> Result<Structure> {
    let parsed: StructureJson = serde_json::from_value(value.clone())
        .map_err(|e| Error::input(format!("bad structure JSON: {e}")))?;
    parsed.to_structure(language)
}

pub fn parse_structure(text: &str, language: Option<&Arc<Language>>) -> Result<Structure> {
    let parsed: StructureJson = serde_json::from_str(text)
        .map_err(|e| Error::input(format!("bad structure JSON: {e}")))?;
    parsed.to_structure(language)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT of the Gaifman graph; edges are labelled with the letter on the pair
/// (oriented from the lower-numbered vertex) as named by `letter_name`.
pub fn to_dot_with<F>(s: &Structure, name: &str, letter_name: F) -> String
where
    F: Fn(&Letter) -> String,
{
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", dot_escape(name));
    for v in 0..s.len() {
        let marks = s.vertex_type(v).names(s.language()).join("+");
        let label = if marks.is_empty() {
            s.name(v).to_string()
        } else {
            format!("{} [{}]", s.name(v), marks)
        };
        let _ = writeln!(out, "  n{v} [label=\"{}\"];", dot_escape(&label));
    }
    for u in 0..s.len() {
        for v in u + 1..s.len() {
            if s.adjacent(u, v) {
                let l = letter_name(&s.letter(u, v));
                let _ = writeln!(out, "  n{u} -- n{v} [label=\"{}\"];", dot_escape(&l));
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn to_dot(s: &Structure) -> String {
    let lang = s.language().clone();
    to_dot_with(s, "structure", |l| l.default_name(&lang))
}
