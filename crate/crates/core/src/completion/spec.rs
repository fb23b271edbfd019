use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::completion::board::{Board, Pattern};
use crate::completion::lattice::Lattice;
use crate::error::{Error, Result};
use crate::relstruct::io::StructureJson;
use crate::relstruct::{is_induced_cycle, is_irreducible, Language, Letter, Structure, SymbolDef, VertexType};

/// Metric classes with distances drawn from a finite set `S`.
///
/// The distance `s` is the binary symbol named `d<s>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricRule {
    distances: Vec<u32>,
}

impl MetricRule {
    pub fn new(distances: impl IntoIterator<Item = u32>) -> Result<Self> {
        let set: BTreeSet<u32> = distances.into_iter().collect();
        if set.is_empty() {
            return Err(Error::spec("distance set S must be nonempty"));
        }
        if set.contains(&0) {
            return Err(Error::spec("distances must be positive"));
        }
        Ok(MetricRule { distances: set.into_iter().collect() })
    }

    pub fn distances(&self) -> &[u32] {
        &self.distances
    }

    pub fn symbol_name(s: u32) -> String {
        format!("d{s}")
    }

    /// `S = {1, …, max S}`.
    pub fn is_initial_interval(&self) -> bool {
        self.distances.iter().enumerate().all(|(i, &d)| d as usize == i + 1)
    }

    pub fn max(&self) -> u32 {
        *self.distances.last().expect("nonempty")
    }

    pub fn min(&self) -> u32 {
        self.distances[0]
    }
}

/// What makes an irreducible structure fail to embed into the target, and
/// hence which cycles cannot be completed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleRule {
    /// No injective homomorphism-embedding of any listed induced cycle.
    ExplicitForbidden(Vec<Structure>),
    /// Every triangle satisfies the triangle inequality.
    Metric(MetricRule),
    /// `d(x, z) <= join(d(x, y), d(y, z))` for every triple. The distance
    /// equal to a non-bottom element is the binary symbol with its name.
    Ultrametric(Lattice),
    /// No listed irreducible triangle occurs.
    FreeAmalgTriangles(Vec<Structure>),
}

impl CycleRule {
    pub fn kind(&self) -> &'static str {
        match self {
            CycleRule::ExplicitForbidden(_) => "forbidden_cycles",
            CycleRule::Metric(_) => "metric",
            CycleRule::Ultrametric(_) => "ultrametric",
            CycleRule::FreeAmalgTriangles(_) => "forbidden_triangles",
        }
    }
}

/// Longest induced cycle that can fail to complete.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleBound {
    /// Every cycle completes.
    None,
    AtMost(usize),
    /// Non-completable induced cycles exist at every length.
    Unbounded,
}

impl CycleBound {
    /// Length limit for cycle enumeration on a structure of `n` vertices;
    /// zero when no cycle needs checking.
    pub fn limit(&self, n: usize) -> usize {
        match *self {
            CycleBound::None => 0,
            CycleBound::AtMost(l) => l,
            CycleBound::Unbounded => n,
        }
    }

    /// The integer form: 0 for none, the bound, or `usize::MAX` when unbounded.
    pub fn as_integer(&self) -> usize {
        match *self {
            CycleBound::None => 0,
            CycleBound::AtMost(l) => l,
            CycleBound::Unbounded => usize::MAX,
        }
    }
}

/// Largest `l` with `max S > (l - 1) * min S`: the longest cycle whose
/// longest edge can exceed the sum of the others. Zero when even triangles
/// are always metric.
pub fn nonmetric_cycle_bound(distances: &[u32]) -> usize {
    let (Some(&min), Some(&max)) = (distances.iter().min(), distances.iter().max()) else {
        return 0;
    };
    if min == 0 {
        return 0;
    }
    // l - 1 < max / min  <=>  l - 1 <= ceil(max / min) - 1
    let l = max.div_ceil(min) as usize;
    if l >= 3 {
        l
    } else {
        0
    }
}

/// Intensional description of an infinite irreducible target structure:
/// allowed vertex types, allowed letters, and a rule for larger structures.
#[derive(Clone, Debug)]
pub struct ClassSpec {
    language: Arc<Language>,
    vertex_types: Vec<VertexType>,
    letters: Vec<Letter>,
    names: BTreeMap<Letter, String>,
    rule: CycleRule,

    alphabet: Vec<Letter>,
    allowed_types: Vec<VertexType>,
    letter_index: HashMap<Letter, u16>,
    reverse: Vec<u16>,
    by_types: HashMap<(VertexType, VertexType), Vec<u16>>,
    /// Distance (metric) or lattice element (ultrametric) of each alphabet letter.
    values: Vec<u32>,
    value_letter: HashMap<u32, u16>,
    patterns: Vec<Pattern>,
    cycle_bound: CycleBound,
}

impl PartialEq for ClassSpec {
    fn eq(&self, other: &Self) -> bool {
        self.language == other.language
            && self.vertex_types == other.vertex_types
            && self.letters == other.letters
            && self.names == other.names
            && self.rule == other.rule
    }
}

impl ClassSpec {
    pub fn new(
        language: Arc<Language>,
        vertex_types: Vec<VertexType>,
        letters: Vec<Letter>,
        names: BTreeMap<Letter, String>,
        rule: CycleRule,
    ) -> Result<Self> {
        let vertex_types: Vec<VertexType> =
            vertex_types.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let letters: Vec<Letter> = letters.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let declared: BTreeSet<Letter> = letters.iter().copied().collect();
        for l in &letters {
            if !declared.contains(&l.reverse()) {
                return Err(Error::spec(format!(
                    "letter {} is not closed under reversal",
                    l.default_name(&language)
                )));
            }
            for t in [l.source, l.target] {
                if !vertex_types.contains(&t) {
                    return Err(Error::spec(format!(
                        "letter {} uses a vertex type that is not allowed",
                        l.default_name(&language)
                    )));
                }
            }
        }

        // Fixpoint: letters need adjacent endpoints of allowed types, and a
        // vertex type survives only if some letter starts at it.
        let mut types: BTreeSet<VertexType> = vertex_types.iter().copied().collect();
        let alphabet = loop {
            let alpha: Vec<Letter> = letters
                .iter()
                .copied()
                .filter(|l| l.is_adjacent() && types.contains(&l.source) && types.contains(&l.target))
                .collect();
            let used: BTreeSet<VertexType> = alpha.iter().map(|l| l.source).collect();
            if used == types {
                break alpha;
            }
            types = used;
        };
        if alphabet.len() > u16::MAX as usize - 1 {
            return Err(Error::capacity("too many letters"));
        }
        let letter_index: HashMap<Letter, u16> =
            alphabet.iter().enumerate().map(|(i, &l)| (l, i as u16)).collect();
        let reverse = alphabet.iter().map(|l| letter_index[&l.reverse()]).collect();
        let mut by_types: HashMap<(VertexType, VertexType), Vec<u16>> = HashMap::new();
        for (i, l) in alphabet.iter().enumerate() {
            by_types.entry((l.source, l.target)).or_default().push(i as u16);
        }

        let mut values = Vec::new();
        let mut value_letter = HashMap::new();
        let mut patterns = Vec::new();
        let cycle_bound = match &rule {
            CycleRule::Metric(m) => {
                for l in &alphabet {
                    let d = m
                        .distances()
                        .iter()
                        .copied()
                        .find(|&d| {
                            language
                                .binary_bit(&MetricRule::symbol_name(d))
                                .is_some_and(|b| *l == Letter::symmetric(1 << b))
                        })
                        .ok_or_else(|| {
                            Error::spec(format!(
                                "letter {} is not a distance of S",
                                l.default_name(&language)
                            ))
                        })?;
                    value_letter.insert(d, values.len() as u16);
                    values.push(d);
                }
                if value_letter.len() != m.distances().len() {
                    return Err(Error::spec("every distance of S needs its letter"));
                }
                match nonmetric_cycle_bound(m.distances()) {
                    0 => CycleBound::None,
                    l => CycleBound::AtMost(l),
                }
            }
            CycleRule::Ultrametric(lat) => {
                for l in &alphabet {
                    let e = (0..lat.len())
                        .filter(|&e| e != lat.bottom())
                        .find(|&e| {
                            language
                                .binary_bit(&lat.elements()[e])
                                .is_some_and(|b| *l == Letter::symmetric(1 << b))
                        })
                        .ok_or_else(|| {
                            Error::spec(format!(
                                "letter {} is not a non-bottom lattice element",
                                l.default_name(&language)
                            ))
                        })?;
                    value_letter.insert(e as u32, values.len() as u16);
                    values.push(e as u32);
                }
                if alphabet.is_empty() {
                    CycleBound::None
                } else {
                    CycleBound::Unbounded
                }
            }
            CycleRule::ExplicitForbidden(cycles) => {
                let mut longest = 0;
                for c in cycles {
                    check_pattern_language(c, &language)?;
                    let order: Vec<usize> = (0..c.len()).collect();
                    if !is_induced_cycle(c, &order) {
                        return Err(Error::spec(
                            "forbidden cycles must list an induced cycle in vertex order",
                        ));
                    }
                    longest = longest.max(c.len());
                    patterns.push(Pattern::new(c, &letter_index));
                }
                if longest == 0 {
                    CycleBound::None
                } else {
                    CycleBound::AtMost(longest)
                }
            }
            CycleRule::FreeAmalgTriangles(tris) => {
                for t in tris {
                    check_pattern_language(t, &language)?;
                    if t.len() != 3 || !is_irreducible(t) {
                        return Err(Error::spec("forbidden triangles must be irreducible on 3 vertices"));
                    }
                    patterns.push(Pattern::new(t, &letter_index));
                }
                if tris.is_empty() {
                    CycleBound::None
                } else {
                    CycleBound::AtMost(3)
                }
            }
        };

        Ok(ClassSpec {
            language,
            vertex_types,
            letters,
            names,
            rule,
            allowed_types: types.into_iter().collect(),
            alphabet,
            letter_index,
            reverse,
            by_types,
            values,
            value_letter,
            patterns,
            cycle_bound,
        })
    }

    /// Random graph: symmetric `E` and `N` letters, nothing forbidden.
    pub fn rado() -> Self {
        let language = Arc::new(Language::binary_only(["E", "N"]).expect("valid"));
        Self::graph_like(language, Vec::new())
    }

    /// Triangle-free graphs, encoded irreducibly with an `N` letter.
    pub fn triangle_free() -> Self {
        let language = Arc::new(Language::binary_only(["E", "N"]).expect("valid"));
        let mut k3 = Structure::with_size(language.clone(), 3);
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            k3.set_letter(u, v, Letter::symmetric(1));
        }
        Self::graph_like(language, vec![k3])
    }

    /// `E`/`N` graph letters with the given forbidden triangles.
    pub fn graph_like(language: Arc<Language>, forbidden: Vec<Structure>) -> Self {
        let letters = vec![Letter::symmetric(1), Letter::symmetric(2)];
        let names = letters
            .iter()
            .map(|l| (*l, l.default_name(&language)))
            .collect();
        ClassSpec::new(
            language,
            vec![VertexType::EMPTY],
            letters,
            names,
            CycleRule::FreeAmalgTriangles(forbidden),
        )
        .expect("graph specs are valid")
    }

    /// Rado graph with a unary `mark`: every combination of marks and edge
    /// or non-edge.
    pub fn marked_rado() -> Self {
        let language = Arc::new(
            Language::new(vec![
                SymbolDef::unary("mark"),
                SymbolDef::binary("E"),
                SymbolDef::binary("N"),
            ])
            .expect("valid"),
        );
        let types = [VertexType::EMPTY, VertexType { unary: 1, loops: 0 }];
        let mut letters = Vec::new();
        for s in types {
            for t in types {
                for m in [1, 2] {
                    letters.push(Letter { source: s, target: t, ..Letter::symmetric(m) });
                }
            }
        }
        ClassSpec::new(
            language,
            types.to_vec(),
            letters,
            BTreeMap::new(),
            CycleRule::FreeAmalgTriangles(Vec::new()),
        )
        .expect("valid")
    }

    /// Metric spaces with distances in `S`, symbols `d<s>`.
    pub fn metric(distances: &[u32]) -> Result<Self> {
        let rule = MetricRule::new(distances.iter().copied())?;
        let language = Arc::new(Language::binary_only(
            rule.distances().iter().map(|&d| MetricRule::symbol_name(d)),
        )?);
        let letters: Vec<Letter> = (0..rule.distances().len()).map(|b| Letter::symmetric(1 << b)).collect();
        let names = letters
            .iter()
            .zip(rule.distances())
            .map(|(l, d)| (*l, d.to_string()))
            .collect();
        ClassSpec::new(language, vec![VertexType::EMPTY], letters, names, CycleRule::Metric(rule))
    }

    /// Lattice-valued ultrametric spaces; each non-bottom element is a symbol.
    pub fn ultrametric(lattice: Lattice) -> Result<Self> {
        let elems: Vec<usize> = (0..lattice.len()).filter(|&e| e != lattice.bottom()).collect();
        let language = Arc::new(Language::binary_only(elems.iter().map(|&e| lattice.elements()[e].clone()))?);
        let letters: Vec<Letter> = (0..elems.len()).map(|b| Letter::symmetric(1 << b)).collect();
        let names = letters
            .iter()
            .zip(&elems)
            .map(|(l, &e)| (*l, lattice.elements()[e].clone()))
            .collect();
        ClassSpec::new(language, vec![VertexType::EMPTY], letters, names, CycleRule::Ultrametric(lattice))
    }

    /// Ultrametric spaces over the chain `0 < 1 < … < k`.
    pub fn chain_ultrametric(k: usize) -> Self {
        Self::ultrametric(Lattice::chain(k)).expect("valid")
    }

    pub fn language(&self) -> &Arc<Language> {
        &self.language
    }

    pub fn rule(&self) -> &CycleRule {
        &self.rule
    }

    pub fn declared_letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn declared_vertex_types(&self) -> &[VertexType] {
        &self.vertex_types
    }

    /// Vertex types that survive the letter fixpoint.
    pub fn allowed_vertex_types(&self) -> &[VertexType] {
        &self.allowed_types
    }

    pub fn cycle_bound(&self) -> CycleBound {
        self.cycle_bound
    }

    /// Allowed letters after the fixpoint with vertex types, in canonical
    /// order, or an error if none survive.
    pub fn alphabet(&self) -> Result<&[Letter]> {
        if self.alphabet.is_empty() {
            Err(Error::spec("no letter is admissible; the target cannot be irreducible and infinite"))
        } else {
            Ok(&self.alphabet)
        }
    }

    pub(crate) fn alphabet_unchecked(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn letter_index(&self, l: &Letter) -> Option<usize> {
        self.letter_index.get(l).map(|&i| i as usize)
    }

    pub(crate) fn index16(&self, l: &Letter) -> Option<u16> {
        self.letter_index.get(l).copied()
    }

    pub(crate) fn reverse_index(&self, i: u16) -> u16 {
        self.reverse[i as usize]
    }

    /// Alphabet indices of the letters from type `s` to type `t`, in
    /// canonical order.
    pub(crate) fn candidates(&self, s: VertexType, t: VertexType) -> &[u16] {
        self.by_types.get(&(s, t)).map_or(&[], Vec::as_slice)
    }

    pub(crate) fn value(&self, i: u16) -> u32 {
        self.values[i as usize]
    }

    pub(crate) fn letter_of_value(&self, v: u32) -> Option<u16> {
        self.value_letter.get(&v).copied()
    }

    pub(crate) fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn letter_name(&self, l: &Letter) -> String {
        self.names
            .get(l)
            .cloned()
            .unwrap_or_else(|| l.default_name(&self.language))
    }

    /// Whether a finite structure embeds into the target: it is irreducible,
    /// uses allowed vertex types and letters, and passes the rule.
    pub fn admits(&self, s: &Structure) -> bool {
        if s.language() != &self.language || !is_irreducible(s) {
            return false;
        }
        match Board::from_structure(self, s) {
            Ok(b) => b.consistent(),
            Err(_) => false,
        }
    }

    /// The single-vertex structure is allowed.
    pub fn admits_vertex_type(&self, t: &VertexType) -> bool {
        self.allowed_types.binary_search(t).is_ok()
    }

    pub fn to_json(&self) -> ClassSpecJson {
        let lang = &self.language;
        let vt = |t: &VertexType| t.names(lang).into_iter().map(String::from).collect::<Vec<_>>();
        let rule = match &self.rule {
            CycleRule::Metric(m) => RuleJson::Metric { s: m.distances().to_vec() },
            CycleRule::Ultrametric(l) => RuleJson::Ultrametric(l.clone()),
            CycleRule::ExplicitForbidden(p) => RuleJson::ForbiddenCycles {
                patterns: p.iter().map(StructureJson::from_structure).collect(),
            },
            CycleRule::FreeAmalgTriangles(p) => RuleJson::ForbiddenTriangles {
                patterns: p.iter().map(StructureJson::from_structure).collect(),
            },
        };
        ClassSpecJson {
            language: lang.symbols().to_vec(),
            vertex_types: Some(self.vertex_types.iter().map(vt).collect()),
            letters: Some(
                self.letters
                    .iter()
                    .map(|l| LetterJson {
                        name: self.names.get(l).cloned(),
                        source: vt(&l.source),
                        target: vt(&l.target),
                        forward: lang.binary_names(l.forward).into_iter().map(String::from).collect(),
                        backward: lang.binary_names(l.backward).into_iter().map(String::from).collect(),
                    })
                    .collect(),
            ),
            rule,
        }
    }

    pub fn from_json(j: &ClassSpecJson) -> Result<Self> {
        let language = Arc::new(Language::new(j.language.clone())?);
        let rule = match &j.rule {
            RuleJson::Metric { s } => CycleRule::Metric(MetricRule::new(s.iter().copied())?),
            RuleJson::Ultrametric(l) => CycleRule::Ultrametric(l.clone()),
            RuleJson::ForbiddenCycles { patterns } => CycleRule::ExplicitForbidden(
                patterns.iter().map(|p| p.to_structure(Some(&language))).collect::<Result<_>>()?,
            ),
            RuleJson::ForbiddenTriangles { patterns } => CycleRule::FreeAmalgTriangles(
                patterns.iter().map(|p| p.to_structure(Some(&language))).collect::<Result<_>>()?,
            ),
        };
        let vertex_types = match &j.vertex_types {
            Some(v) => v.iter().map(|t| VertexType::from_names(&language, t)).collect::<Result<Vec<_>>>()?,
            None => vec![VertexType::EMPTY],
        };
        let mut names = BTreeMap::new();
        let letters = match &j.letters {
            Some(ls) => {
                let mut out = Vec::new();
                for l in ls {
                    let mask = |names: &[String]| -> Result<u64> {
                        names.iter().try_fold(0u64, |m, n| {
                            language
                                .binary_bit(n)
                                .map(|b| m | 1 << b)
                                .ok_or_else(|| Error::input(format!("unknown binary symbol `{n}` in letter")))
                        })
                    };
                    let letter = Letter {
                        source: VertexType::from_names(&language, &l.source)?,
                        target: VertexType::from_names(&language, &l.target)?,
                        forward: mask(&l.forward)?,
                        backward: mask(&l.backward)?,
                    };
                    if let Some(n) = &l.name {
                        names.insert(letter, n.clone());
                    }
                    out.push(letter);
                }
                out
            }
            None => match &rule {
                CycleRule::Metric(m) => m
                    .distances()
                    .iter()
                    .map(|&d| {
                        language
                            .binary_bit(&MetricRule::symbol_name(d))
                            .map(|b| Letter::symmetric(1 << b))
                            .ok_or_else(|| Error::spec(format!("metric language lacks symbol d{d}")))
                    })
                    .collect::<Result<_>>()?,
                CycleRule::Ultrametric(lat) => (0..lat.len())
                    .filter(|&e| e != lat.bottom())
                    .map(|e| {
                        language
                            .binary_bit(&lat.elements()[e])
                            .map(|b| Letter::symmetric(1 << b))
                            .ok_or_else(|| Error::spec(format!("language lacks symbol `{}`", lat.elements()[e])))
                    })
                    .collect::<Result<_>>()?,
                _ => return Err(Error::spec("letters must be listed for forbidden-pattern rules")),
            },
        };
        ClassSpec::new(language, vertex_types, letters, names, rule)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let j: ClassSpecJson =
            serde_json::from_str(text).map_err(|e| Error::input(format!("bad class spec JSON: {e}")))?;
        Self::from_json(&j)
    }
}

fn check_pattern_language(p: &Structure, language: &Arc<Language>) -> Result<()> {
    if p.language() != language {
        return Err(Error::spec("forbidden pattern uses a different language"));
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LetterJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default)]
    pub source: Vec<String>,
    #[serde(default)]
    pub target: Vec<String>,
    #[serde(default)]
    pub forward: Vec<String>,
    #[serde(default)]
    pub backward: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RuleJson {
    Metric {
        #[serde(rename = "S")]
        s: Vec<u32>,
    },
    Ultrametric(Lattice),
    ForbiddenCycles { patterns: Vec<StructureJson> },
    ForbiddenTriangles { patterns: Vec<StructureJson> },
}

/// Class spec file format.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassSpecJson {
    pub language: Vec<SymbolDef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_types: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub letters: Option<Vec<LetterJson>>,
    pub rule: RuleJson,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rado_alphabet_has_edge_and_nonedge() {
        let s = ClassSpec::rado();
        let a = s.alphabet().unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(s.letter_name(&a[0]), "E");
        assert_eq!(s.letter_name(&a[1]), "N");
        assert_eq!(s.cycle_bound(), CycleBound::None);
    }

    #[test]
    fn metric_alphabet_one_letter_per_distance() {
        let s = ClassSpec::metric(&[1, 2, 3]).unwrap();
        let names: Vec<_> = s.alphabet().unwrap().iter().map(|l| s.letter_name(l)).collect();
        assert_eq!(names, ["1", "2", "3"]);
        assert_eq!(s.cycle_bound(), CycleBound::AtMost(3));
    }

    #[test]
    fn triangle_free_keeps_both_letters() {
        let s = ClassSpec::triangle_free();
        assert_eq!(s.alphabet().unwrap().len(), 2);
        assert_eq!(s.cycle_bound(), CycleBound::AtMost(3));
    }

    #[test]
    fn nonmetric_bounds() {
        assert_eq!(nonmetric_cycle_bound(&[1, 2, 3]), 3);
        assert_eq!(nonmetric_cycle_bound(&[1, 4]), 4);
        assert_eq!(nonmetric_cycle_bound(&[1]), 0);
        assert_eq!(nonmetric_cycle_bound(&[2, 3]), 0);
    }

    #[test]
    fn nonmetric_bound_matches_brute_force() {
        // Oracle: the longest l admitting edges in S whose maximum exceeds
        // the sum of the rest.
        for s in [vec![1, 2, 3], vec![1, 4], vec![1], vec![2, 3], vec![1, 5], vec![2, 7]] {
            let mut best = 0;
            for l in 3..=8usize {
                let found = s.iter().any(|&big| s.iter().any(|&small| big > small * (l as u32 - 1)));
                if found {
                    best = l;
                }
            }
            assert_eq!(nonmetric_cycle_bound(&s), best, "S = {s:?}");
        }
    }

    #[test]
    fn marked_rado_has_eight_letters() {
        assert_eq!(ClassSpec::marked_rado().alphabet().unwrap().len(), 8);
    }

    #[test]
    fn json_roundtrip_of_builtins() {
        for spec in [
            ClassSpec::rado(),
            ClassSpec::triangle_free(),
            ClassSpec::metric(&[1, 2, 3]).unwrap(),
            ClassSpec::chain_ultrametric(2),
            ClassSpec::ultrametric(Lattice::diamond()).unwrap(),
            ClassSpec::marked_rado(),
        ] {
            let text = serde_json::to_string(&spec.to_json()).unwrap();
            let back = ClassSpec::parse(&text).unwrap();
            assert_eq!(back, spec);
        }
    }

    #[test]
    fn minimal_metric_json() {
        let text = r#"{"language": [{"name": "d1", "arity": 2}, {"name": "d2", "arity": 2},
                                    {"name": "d3", "arity": 2}],
                       "rule": {"kind": "metric", "S": [1, 2, 3]}}"#;
        let spec = ClassSpec::parse(text).unwrap();
        assert_eq!(spec.alphabet().unwrap().len(), 3);
    }

    #[test]
    fn rejects_letters_not_closed_under_reversal() {
        let language = Arc::new(Language::binary_only(["A"]).unwrap());
        let one_way = Letter { forward: 1, backward: 0, ..Letter::symmetric(0) };
        let r = ClassSpec::new(
            language,
            vec![VertexType::EMPTY],
            vec![one_way],
            BTreeMap::new(),
            CycleRule::FreeAmalgTriangles(vec![]),
        );
        assert!(matches!(r, Err(Error::Spec(_))));
    }

    #[test]
    fn rejects_chorded_forbidden_cycle() {
        let language = Arc::new(Language::binary_only(["E", "N"]).unwrap());
        let mut c4 = Structure::with_size(language.clone(), 4);
        for i in 0..4 {
            c4.set_letter(i, (i + 1) % 4, Letter::symmetric(1));
        }
        c4.set_letter(0, 2, Letter::symmetric(1));
        let r = ClassSpec::new(
            language,
            vec![VertexType::EMPTY],
            vec![Letter::symmetric(1), Letter::symmetric(2)],
            BTreeMap::new(),
            CycleRule::ExplicitForbidden(vec![c4]),
        );
        assert!(matches!(r, Err(Error::Spec(_))));
    }

    #[test]
    fn empty_alphabet_is_spec_error() {
        let language = Arc::new(Language::binary_only(["E"]).unwrap());
        let spec = ClassSpec::new(
            language,
            vec![VertexType::EMPTY],
            vec![],
            BTreeMap::new(),
            CycleRule::FreeAmalgTriangles(vec![]),
        )
        .unwrap();
        assert!(matches!(spec.alphabet(), Err(Error::Spec(_))));
    }
}
