//! Randomized check of the completion hypothesis: every random partial
//! structure whose pairs and induced cycles pass must complete.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::completion::board::Board;
use crate::completion::complete::{complete, cycle_has_completion, verify_completion, CompletionResult};
use crate::completion::spec::ClassSpec;
use crate::error::{Error, Result};
use crate::relstruct::io::StructureJson;
use crate::relstruct::{induced_cycles, Structure, VertexType};

/// Identifier of the generator behind every seeded experiment.
pub const PRNG_ID: &str = "ChaCha8Rng(seed_from_u64(seed), stream = trial)";

/// Generator for trial `trial` of a seeded experiment.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GenMode {
    /// Each pair gets a random letter with probability 0.35.
    Sparse,
    /// Each pair gets a random letter with probability 0.65.
    Dense,
    /// A random greedy admissible structure with half its pairs removed.
    Planted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TrialOutcome {
    /// Pairs and cycles passed and the completion verified.
    Completed,
    /// Some pair or cycle failed and `complete` agreed.
    Obstructed,
    /// The hypothesis check and `complete` disagree, or a result failed
    /// verification.
    Failure,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub mode: GenMode,
    pub size: usize,
    pub outcome: TrialOutcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// The generated structure, kept for failures only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<StructureJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub rule: &'static str,
    pub trials: u64,
    pub max_size: usize,
    pub seed: u64,
    pub prng: &'static str,
    pub completed: usize,
    pub obstructed: usize,
    pub failures: usize,
    pub records: Vec<TrialRecord>,
}

impl AuditReport {
    pub fn failing(&self) -> impl Iterator<Item = &TrialRecord> {
        self.records.iter().filter(|r| r.outcome == TrialOutcome::Failure)
    }
}

/// Runs `trials` seeded trials on random partial structures with up to
/// `max_size` vertices.
pub fn hypothesis_audit(spec: &ClassSpec, trials: u64, max_size: usize, seed: u64) -> Result<AuditReport> {
    spec.alphabet()?;
    if max_size == 0 {
        return Err(Error::input("max_size must be positive"));
    }
    let records: Vec<TrialRecord> = (0..trials)
        .into_par_iter()
        .map(|t| run_trial(spec, t, max_size, seed))
        .collect::<Result<_>>()?;
    let count = |o| records.iter().filter(|r| r.outcome == o).count();
    Ok(AuditReport {
        rule: spec.rule().kind(),
        trials,
        max_size,
        seed,
        prng: PRNG_ID,
        completed: count(TrialOutcome::Completed),
        obstructed: count(TrialOutcome::Obstructed),
        failures: count(TrialOutcome::Failure),
        records,
    })
}

/// A random partial structure for the given trial.
pub fn random_partial(spec: &ClassSpec, rng: &mut impl Rng, size: usize, mode: GenMode) -> Structure {
    let types = spec.allowed_vertex_types();
    let vt: Vec<VertexType> = (0..size).map(|_| *types.choose(rng).expect("nonempty alphabet")).collect();
    let mut board = Board::empty(spec, vt.clone());
    let mut pairs: Vec<(usize, usize)> = board.unassigned();
    match mode {
        GenMode::Sparse | GenMode::Dense => {
            let p = if mode == GenMode::Sparse { 0.35 } else { 0.65 };
            for &(u, v) in &pairs {
                if rng.gen_bool(p) {
                    if let Some(&l) = board.candidates(u, v).choose(rng) {
                        board.set(u, v, l);
                    }
                }
            }
        }
        GenMode::Planted => {
            pairs.shuffle(rng);
            for &(u, v) in &pairs {
                let mut cands = board.candidates(u, v).to_vec();
                cands.shuffle(rng);
                for l in cands {
                    board.set(u, v, l);
                    if board.pair_ok(u, v) {
                        break;
                    }
                    board.unset(u, v);
                }
            }
            for &(u, v) in &pairs {
                if rng.gen_bool(0.5) {
                    board.unset(u, v);
                }
            }
        }
    }
    let mut base = Structure::with_size(spec.language().clone(), size);
    for (v, t) in vt.into_iter().enumerate() {
        base.set_vertex_type(v, t);
    }
    board.to_structure(&base)
}

fn run_trial(spec: &ClassSpec, trial: u64, max_size: usize, seed: u64) -> Result<TrialRecord> {
    let mut rng = trial_rng(seed, trial);
    let mode = match trial % 3 {
        0 => GenMode::Sparse,
        1 => GenMode::Dense,
        _ => GenMode::Planted,
    };
    let size = rng.gen_range(1..=max_size);
    let a = random_partial(spec, &mut rng, size, mode);

    let limit = spec.cycle_bound().limit(size);
    let mut hypothesis = true;
    if limit >= 3 {
        for c in induced_cycles(&a, limit)? {
            if !cycle_has_completion(&c, spec)? {
                hypothesis = false;
                break;
            }
        }
    }
    let result = complete(&a, spec)?;
    let (outcome, detail) = match (&result, hypothesis) {
        (CompletionResult::Completed { structure, witness }, true) => {
            if verify_completion(&a, spec, structure, witness) {
                (TrialOutcome::Completed, None)
            } else {
                (TrialOutcome::Failure, Some("completion failed verification".to_string()))
            }
        }
        (CompletionResult::Completed { .. }, false) => (
            TrialOutcome::Failure,
            Some("a non-completable cycle was found but complete succeeded".to_string()),
        ),
        (CompletionResult::Obstructed(o), false) => {
            if o.verify(&a, spec) {
                (TrialOutcome::Obstructed, None)
            } else {
                (TrialOutcome::Failure, Some(format!("{} obstruction failed verification", o.kind())))
            }
        }
        (CompletionResult::Obstructed(o), true) => (
            TrialOutcome::Failure,
            Some(format!("all pairs and cycles pass but complete reported {}", o.kind())),
        ),
    };
    let witness = (outcome == TrialOutcome::Failure).then(|| StructureJson::from_structure(&a));
    Ok(TrialRecord { trial, mode, size, outcome, detail, witness })
}
