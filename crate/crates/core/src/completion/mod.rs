//! Class specifications for the irreducible target structure and
//! completion of finite partial structures into it.

mod audit;
mod board;
mod complete;
mod lattice;
mod spec;

pub use audit::{
    hypothesis_audit, random_partial, trial_rng, AuditReport, GenMode, TrialOutcome, TrialRecord,
    PRNG_ID,
};
pub use complete::{
    complete, complete_with_cap, cycle_has_completion, duplicate_vertex, shortest_path_completion,
    ultrametric_completion, verify_completion, CompletionReport, CompletionResult, Obstruction,
    ObstructionReport,
};
pub use lattice::Lattice;
pub use spec::{
    nonmetric_cycle_bound, ClassSpec, ClassSpecJson, CycleBound, CycleRule, LetterJson, MetricRule,
    RuleJson,
};

/// The alphabet of `spec`: allowed letters in canonical order.
pub fn alphabet(spec: &ClassSpec) -> crate::Result<Vec<crate::relstruct::Letter>> {
    spec.alphabet().map(<[_]>::to_vec)
}
