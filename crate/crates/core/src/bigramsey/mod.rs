//! The word structure over the alphabet of pair types of a class: its
//! vertices and pairs, finite truncations, the embedding of the target into
//! it, audits, and degree upper bounds from embedding types.

mod audit;
mod context;
mod degree;
mod phi;
mod truncation;

pub use audit::{
    all_parameter_words, cycle_with_fan, g_cycle_audit, merge_vertices, transport_check,
    transport_pair, transport_random, transport_sweep, CycleAuditReport, CycleFailure,
    TransportReport, TransportViolation,
};
pub use context::{GContext, GPair, GVertex};
pub use degree::{degree_upper_bound, DegreeBoundReport, TypeWitness};
pub use phi::{phi, verify_phi, PhiMap, PhiReport};
pub use truncation::{g_truncation, g_truncation_with_cap, vertex_words, GTruncation};

use crate::completion::ClassSpec;
use crate::error::Result;
use crate::relstruct::Letter;

/// The alphabet of `spec` in canonical order.
pub fn sigma(spec: &ClassSpec) -> Result<Vec<Letter>> {
    spec.alphabet().map(<[_]>::to_vec)
}
