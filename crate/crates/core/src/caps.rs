//! Resource caps shared by the enumeration-heavy operations.
//!
//! Every cap has a compiled default; the `RAMSEY_FORGE_CAP` environment
//! variable replaces the generic work cap used by enumerations, and
//! [`set_cap_override`] replaces both for the rest of the process.

use std::sync::atomic::{AtomicU64, Ordering};

/// Environment variable overriding [`work_cap`].
pub const CAP_ENV: &str = "RAMSEY_FORGE_CAP";

/// Default maximum number of items (vertices, subsets, colourings) an
/// enumeration may visit.
pub const DEFAULT_WORK_CAP: u64 = 5_000_000;

/// Largest structure accepted by exhaustive canonicalization.
pub const DEFAULT_CANON_CAP: usize = 8;

/// Largest word-structure truncation (number of vertices) built by default.
pub const DEFAULT_TRUNCATION_CAP: usize = 4096;

// 0 means unset.
static OVERRIDE: AtomicU64 = AtomicU64::new(0);

/// Sets (or with `None` clears) a cap that takes precedence over the
/// environment for both [`work_cap`] and [`truncation_cap`].
pub fn set_cap_override(cap: Option<u64>) {
    OVERRIDE.store(cap.map_or(0, |c| c.max(1)), Ordering::Relaxed);
}

fn configured() -> Option<u64> {
    match OVERRIDE.load(Ordering::Relaxed) {
        0 => std::env::var(CAP_ENV).ok().and_then(|v| v.trim().parse().ok()),
        c => Some(c),
    }
}

/// The generic work cap.
pub fn work_cap() -> u64 {
    configured().unwrap_or(DEFAULT_WORK_CAP)
}

/// Truncation cap, replaced by the same override as [`work_cap`].
pub fn truncation_cap() -> usize {
    configured()
        .map(|v| usize::try_from(v.max(1)).unwrap_or(usize::MAX))
        .unwrap_or(DEFAULT_TRUNCATION_CAP)
}
