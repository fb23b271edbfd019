//! Benchmarks for ramsey-forge. Run with `cargo bench -p ramsey-forge-bench`.

use ramsey_forge::completion::{random_partial, trial_rng, ClassSpec, GenMode};
use ramsey_forge::Structure;

/// Deterministic partial structures for `spec`, one per trial.
pub fn partials(spec: &ClassSpec, count: u64, size: usize, seed: u64) -> Vec<Structure> {
    (0..count)
        .map(|t| random_partial(spec, &mut trial_rng(seed, t), size, GenMode::Planted))
        .collect()
}
