use serde::Serialize;

use crate::caps;
use crate::completion::board::Board;
use crate::completion::spec::{ClassSpec, CycleRule};
use crate::error::{Error, Result};
use crate::relstruct::{
    for_each_induced_cycle, induced, is_induced_cycle, is_irreducible, Cycle, Structure,
};

/// Why a structure has no completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// A vertex or adjacent pair whose type or letter is not allowed.
    /// `vertices` index the input; `structure` is the induced substructure.
    BadPair { vertices: Vec<usize>, structure: Structure },
    /// An induced cycle with no completion.
    BadCycle(Cycle),
    /// Every cycle and pair passed, yet no completion was found. Impossible
    /// for a class satisfying the cycle-completion hypothesis.
    SearchExhausted,
}

impl Obstruction {
    pub fn kind(&self) -> &'static str {
        match self {
            Obstruction::BadPair { .. } => "bad_pair",
            Obstruction::BadCycle(_) => "bad_cycle",
            Obstruction::SearchExhausted => "search_exhausted",
        }
    }

    /// Re-derives the obstruction from scratch against the input `a`.
    pub fn verify(&self, a: &Structure, spec: &ClassSpec) -> bool {
        match self {
            Obstruction::BadPair { vertices, structure } => {
                let Ok(again) = induced(a, vertices) else {
                    return false;
                };
                if &again != structure {
                    return false;
                }
                match vertices.as_slice() {
                    [v] => !spec.admits_vertex_type(&a.vertex_type(*v)),
                    [u, v] => {
                        a.adjacent(*u, *v) && spec.letter_index(&a.letter(*u, *v)).is_none()
                    }
                    _ => false,
                }
            }
            Obstruction::BadCycle(c) => {
                let Ok(again) = induced(a, &c.vertices) else {
                    return false;
                };
                again == c.structure
                    && is_induced_cycle(a, &c.vertices)
                    && matches!(cycle_has_completion(c, spec), Ok(false))
            }
            Obstruction::SearchExhausted => false,
        }
    }
}

/// Outcome of [`complete`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompletionResult {
    /// An irreducible admissible structure on the same vertices; `witness`
    /// maps each input vertex to its image (the identity here).
    Completed { structure: Structure, witness: Vec<usize> },
    Obstructed(Obstruction),
}

impl CompletionResult {
    pub fn is_completed(&self) -> bool {
        matches!(self, CompletionResult::Completed { .. })
    }

    pub fn completed(&self) -> Option<&Structure> {
        match self {
            CompletionResult::Completed { structure, .. } => Some(structure),
            CompletionResult::Obstructed(_) => None,
        }
    }

    pub fn obstruction(&self) -> Option<&Obstruction> {
        match self {
            CompletionResult::Completed { .. } => None,
            CompletionResult::Obstructed(o) => Some(o),
        }
    }
}

fn check_language(a: &Structure, spec: &ClassSpec) -> Result<()> {
    if a.language() != spec.language() {
        return Err(Error::input("structure and class spec use different languages"));
    }
    Ok(())
}

/// Whether some assignment of allowed letters to the non-adjacent pairs of
/// the cycle gives an admissible irreducible structure.
pub fn cycle_has_completion(c: &Cycle, spec: &ClassSpec) -> Result<bool> {
    check_language(&c.structure, spec)?;
    has_completion(&c.structure, spec)
}

/// Whether `a` has any completion (pair check plus full search).
pub(crate) fn has_completion(a: &Structure, spec: &ClassSpec) -> Result<bool> {
    let Ok(mut board) = Board::from_structure(spec, a) else {
        return Ok(false);
    };
    if !board.consistent() {
        return Ok(false);
    }
    if board.fast_fill() {
        return Ok(true);
    }
    if exact_fast_path(spec) {
        return Ok(false);
    }
    let mut budget = caps::work_cap();
    board.search(&mut budget)
}

/// Rules whose fast path succeeds exactly when a completion exists.
fn exact_fast_path(spec: &ClassSpec) -> bool {
    match spec.rule() {
        CycleRule::Metric(m) => m.is_initial_interval(),
        CycleRule::Ultrametric(_) => true,
        _ => false,
    }
}

/// Completes `a` to an irreducible structure admissible for `spec`, or
/// reports the first obstruction found.
///
/// Order of checks: forbidden vertex types and letters, the rule-specific
/// fast path, induced cycles up to the spec's bound, and finally a
/// backtracking search over the missing pairs (lexicographic pair order,
/// canonical letter order).
pub fn complete(a: &Structure, spec: &ClassSpec) -> Result<CompletionResult> {
    complete_with_cap(a, spec, caps::work_cap())
}

pub fn complete_with_cap(a: &Structure, spec: &ClassSpec, cap: u64) -> Result<CompletionResult> {
    check_language(a, spec)?;
    let mut board = match Board::from_structure(spec, a) {
        Ok(b) => b,
        Err(vertices) => {
            let structure = induced(a, &vertices)?;
            return Ok(CompletionResult::Obstructed(Obstruction::BadPair { vertices, structure }));
        }
    };
    let done = |board: &Board| CompletionResult::Completed {
        structure: board.to_structure(a),
        witness: (0..a.len()).collect(),
    };
    if board.fast_fill() {
        return Ok(done(&board));
    }

    let limit = spec.cycle_bound().limit(a.len());
    let mut bad = None;
    let mut failure = None;
    for_each_induced_cycle(a.len(), |u, v| a.adjacent(u, v), limit, |seq| {
        let c = Cycle {
            vertices: seq.to_vec(),
            structure: induced(a, seq).expect("cycle vertices are valid"),
        };
        match has_completion(&c.structure, spec) {
            Ok(true) => true,
            Ok(false) => {
                bad = Some(c);
                false
            }
            Err(e) => {
                failure = Some(e);
                false
            }
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    if let Some(c) = bad {
        return Ok(CompletionResult::Obstructed(Obstruction::BadCycle(c)));
    }

    let mut budget = cap;
    if board.consistent() && board.search(&mut budget)? {
        return Ok(done(&board));
    }
    Ok(CompletionResult::Obstructed(Obstruction::SearchExhausted))
}

/// Sets each missing distance to the shortest-path length over present
/// pairs capped at `max S`, rounded up to the next distance of `S`.
///
/// For `S = {1, …, δ}` the result is metric whenever a completion exists;
/// otherwise, and for other `S`, the general completion is used.
pub fn shortest_path_completion(a: &Structure, spec: &ClassSpec) -> Result<CompletionResult> {
    check_language(a, spec)?;
    let CycleRule::Metric(m) = spec.rule() else {
        return Err(Error::input("shortest-path completion needs a metric class"));
    };
    if m.is_initial_interval() {
        if let Ok(mut board) = Board::from_structure(spec, a) {
            if board.fast_fill() {
                return Ok(CompletionResult::Completed {
                    structure: board.to_structure(a),
                    witness: (0..a.len()).collect(),
                });
            }
        }
    }
    complete(a, spec)
}

/// Each missing value becomes the meet over connecting paths of the join
/// of the path's values.
pub fn ultrametric_completion(a: &Structure, spec: &ClassSpec) -> Result<CompletionResult> {
    check_language(a, spec)?;
    if !matches!(spec.rule(), CycleRule::Ultrametric(_)) {
        return Err(Error::input("ultrametric completion needs an ultrametric class"));
    }
    complete(a, spec)
}

/// Adds a copy `v'` of `v` with all of `v`'s tuples and nothing between
/// `v` and `v'`. Returns the new structure and the index of the copy.
pub fn duplicate_vertex(a: &Structure, v: usize) -> Result<(Structure, usize)> {
    if v >= a.len() {
        return Err(Error::input(format!("vertex index {v} out of range")));
    }
    let mut name = format!("{}'", a.name(v));
    while a.index_of(&name).is_some() {
        name.push('\'');
    }
    let mut out = a.clone();
    let copy = out.push_vertex(name, a.vertex_type(v))?;
    for u in 0..a.len() {
        if u != v {
            out.set_letter(copy, u, a.letter(v, u));
        }
    }
    Ok((out, copy))
}

/// Checks a completion result from scratch: irreducible, admissible,
/// extending `a` on every vertex and adjacent pair.
pub fn verify_completion(a: &Structure, spec: &ClassSpec, b: &Structure, witness: &[usize]) -> bool {
    witness.len() == a.len()
        && is_irreducible(b)
        && spec.admits(b)
        && crate::relstruct::is_homomorphism_embedding(witness, a, b)
        && {
            let mut seen = vec![false; b.len()];
            witness.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        }
}

/// JSON view of a completion result.
#[derive(Clone, Debug, Serialize)]
pub struct CompletionReport {
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub completed: Option<crate::relstruct::io::StructureJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<ObstructionReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub vertices: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<crate::relstruct::io::StructureJson>,
}

impl CompletionReport {
    pub fn new(a: &Structure, r: &CompletionResult) -> Self {
        use crate::relstruct::io::StructureJson;
        match r {
            CompletionResult::Completed { structure, witness } => CompletionReport {
                status: "completed",
                completed: Some(StructureJson::from_structure(structure)),
                witness: Some(witness.iter().map(|&w| structure.name(w).to_string()).collect()),
                obstruction: None,
            },
            CompletionResult::Obstructed(o) => {
                let (vertices, structure) = match o {
                    Obstruction::BadPair { vertices, structure } => (vertices.clone(), Some(structure)),
                    Obstruction::BadCycle(c) => (c.vertices.clone(), Some(&c.structure)),
                    Obstruction::SearchExhausted => (Vec::new(), None),
                };
                CompletionReport {
                    status: "obstructed",
                    completed: None,
                    witness: None,
                    obstruction: Some(ObstructionReport {
                        kind: o.kind(),
                        vertices: vertices.iter().map(|&v| a.name(v).to_string()).collect(),
                        structure: structure.map(StructureJson::from_structure),
                    }),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::completion::Lattice;
    use crate::relstruct::{Language, Letter};

    fn metric_space(spec: &ClassSpec, n: usize, edges: &[(usize, usize, u32)]) -> Structure {
        let mut s = Structure::with_size(spec.language().clone(), n);
        for &(u, v, d) in edges {
            s.add_tuple(&format!("d{d}"), &[u, v]).unwrap();
            s.add_tuple(&format!("d{d}"), &[v, u]).unwrap();
        }
        s
    }

    fn dist(spec: &ClassSpec, s: &Structure, u: usize, v: usize) -> u32 {
        spec.value(spec.index16(&s.letter(u, v)).unwrap())
    }

    fn ultra(spec: &ClassSpec, n: usize, edges: &[(usize, usize, &str)]) -> Structure {
        let mut s = Structure::with_size(spec.language().clone(), n);
        for &(u, v, e) in edges {
            s.add_tuple(e, &[u, v]).unwrap();
            s.add_tuple(e, &[v, u]).unwrap();
        }
        s
    }

    #[test]
    fn metric_completion_takes_capped_shortest_path() {
        let spec = ClassSpec::metric(&[1, 2, 3]).unwrap();
        let a = metric_space(&spec, 3, &[(0, 1, 3), (1, 2, 1)]);
        let r = complete(&a, &spec).unwrap();
        let b = r.completed().unwrap();
        assert_eq!(dist(&spec, b, 0, 2), 3);
        assert!(verify_completion(&a, &spec, b, &[0, 1, 2]));
    }

    #[test]
    fn nonmetric_triangle_is_bad_cycle() {
        let spec = ClassSpec::metric(&[1, 2, 3]).unwrap();
        let a = metric_space(&spec, 3, &[(0, 1, 3), (1, 2, 1), (0, 2, 1)]);
        let r = complete(&a, &spec).unwrap();
        let o = r.obstruction().unwrap();
        assert!(matches!(o, Obstruction::BadCycle(c) if c.len() == 3));
        assert!(o.verify(&a, &spec));
    }

    #[test]
    fn four_cycle_3111_completes() {
        let spec = ClassSpec::metric(&[1, 2, 3]).unwrap();
        let a = metric_space(&spec, 4, &[(0, 1, 3), (1, 2, 1), (2, 3, 1), (3, 0, 1)]);
        let c = &crate::relstruct::induced_cycles(&a, 4).unwrap()[0];
        assert!(cycle_has_completion(c, &spec).unwrap());
    }

    #[test]
    fn sparse_set_falls_back_to_search() {
        let spec = ClassSpec::metric(&[1, 4]).unwrap();
        let a = metric_space(&spec, 3, &[(0, 1, 4), (1, 2, 1)]);
        let r = shortest_path_completion(&a, &spec).unwrap();
        assert_eq!(dist(&spec, r.completed().unwrap(), 0, 2), 4);
    }

    #[test]
    fn irreducible_admissible_input_is_returned_unchanged() {
        let spec = ClassSpec::metric(&[1, 2, 3]).unwrap();
        let a = metric_space(&spec, 3, &[(0, 1, 2), (1, 2, 1), (0, 2, 3)]);
        let r = complete(&a, &spec).unwrap();
        assert_eq!(r, CompletionResult::Completed { structure: a, witness: vec![0, 1, 2] });
    }

    #[test]
    fn chain_ultrametric_completion() {
        let spec = ClassSpec::chain_ultrametric(2);
        let a = ultra(&spec, 3, &[(0, 1, "1"), (1, 2, "1")]);
        let b = ultrametric_completion(&a, &spec).unwrap();
        let b = b.completed().unwrap();
        assert_eq!(b.letter(0, 2), Letter::symmetric(1));
    }

    #[test]
    fn diamond_ultrametric_completion_takes_join() {
        let spec = ClassSpec::ultrametric(Lattice::diamond()).unwrap();
        let names = spec.language().binary_names(0b111);
        assert_eq!(names, ["x", "y", "top"]);
        let a = ultra(&spec, 3, &[(0, 1, "x"), (1, 2, "y")]);
        let r = ultrametric_completion(&a, &spec).unwrap();
        let b = r.completed().unwrap();
        let top = spec.language().binary_bit("top").unwrap();
        assert_eq!(b.letter(0, 2), Letter::symmetric(1 << top));
    }

    #[test]
    fn ultrametric_four_cycle_can_be_obstructed() {
        // 2,1,1,1 around a square: the long side exceeds every path join.
        let spec = ClassSpec::chain_ultrametric(2);
        let a = ultra(&spec, 4, &[(0, 1, "2"), (1, 2, "1"), (2, 3, "1"), (3, 0, "1")]);
        let r = complete(&a, &spec).unwrap();
        let o = r.obstruction().unwrap();
        assert!(matches!(o, Obstruction::BadCycle(c) if c.len() == 4));
        assert!(o.verify(&a, &spec));
    }

    #[test]
    fn unknown_letter_is_bad_pair() {
        let language = Arc::new(Language::binary_only(["E", "N"]).unwrap());
        let spec = ClassSpec::rado();
        let mut a = Structure::with_size(language, 2);
        a.add_tuple("E", &[0, 1]).unwrap();
        let r = complete(&a, &spec).unwrap();
        let o = r.obstruction().unwrap();
        assert!(matches!(o, Obstruction::BadPair { vertices, .. } if vertices == &[0, 1]));
        assert!(o.verify(&a, &spec));
    }

    #[test]
    fn duplicated_vertex_is_nonadjacent_to_original() {
        let spec = ClassSpec::metric(&[1, 2, 3]).unwrap();
        let a = metric_space(&spec, 3, &[(0, 1, 1), (1, 2, 2), (0, 2, 2)]);
        let (b, copy) = duplicate_vertex(&a, 0).unwrap();
        assert_eq!(copy, 3);
        assert!(!b.adjacent(0, 3));
        assert_eq!(b.letter(3, 2), a.letter(0, 2));
        assert!(crate::relstruct::induced_cycles(&b, 4).unwrap().iter().all(|c| c.len() == 3));
        // Oracle: the copy sits at 1 from vertex 1 and 2 from vertex 2, so
        // the triangle inequality through vertex 1 caps d(0, 0') at 2.
        let valid: Vec<u32> = (1..=3)
            .filter(|&d| [(1u32, 1u32), (2, 2)].iter().all(|&(x, y)| d <= x + y && x <= d + y && y <= d + x))
            .collect();
        assert_eq!(valid, [1, 2]);
        let r = complete(&b, &spec).unwrap();
        assert!(valid.contains(&dist(&spec, r.completed().unwrap(), 0, 3)));
    }

    #[test]
    fn duplicate_isolated_vertex() {
        let spec = ClassSpec::rado();
        let a = Structure::with_size(spec.language().clone(), 1);
        let (b, _) = duplicate_vertex(&a, 0).unwrap();
        assert_eq!(b.len(), 2);
        assert!(!b.adjacent(0, 1));
    }

    #[test]
    fn triangle_free_long_cycles_complete() {
        let spec = ClassSpec::triangle_free();
        for l in 4..=7 {
            let mut a = Structure::with_size(spec.language().clone(), l);
            for i in 0..l {
                a.set_letter(i, (i + 1) % l, Letter::symmetric(1));
            }
            let r = complete(&a, &spec).unwrap();
            let b = r.completed().unwrap();
            assert!(verify_completion(&a, &spec, b, &(0..l).collect::<Vec<_>>()));
        }
    }
}
