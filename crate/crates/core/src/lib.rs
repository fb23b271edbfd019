//! Combinatorial machinery for big Ramsey degree bounds of structures whose
//! completion obstructions are induced cycles.
//!
//! The crate is organised in four layers:
//!
//! * [`relstruct`]: finite structures over unary and binary languages,
//!   embeddings, induced cycles and small-structure canonical forms.
//! * [`completion`]: intensional class specifications ([`ClassSpec`]) for the
//!   irreducible target structure and completion algorithms with verifiable
//!   obstructions.
//! * [`paramwords`]: parameter words, substitution, minimal envelopes and
//!   embedding types.
//! * [`bigramsey`]: the word structure built over the alphabet of pair types,
//!   the embedding of the target into it, audits and degree upper bounds.

mod error;

pub mod bigramsey;
pub mod caps;
pub mod completion;
pub mod paramwords;
pub mod relstruct;

pub use crate::error::{Error, Result};

pub use crate::bigramsey::{DegreeBoundReport, GContext, GPair, GTruncation, GVertex, PhiMap};
pub use crate::completion::{
    ClassSpec, CompletionResult, CycleBound, CycleRule, Lattice, MetricRule, Obstruction,
};
pub use crate::paramwords::{EnvelopeResult, ParamWord, Symbol, TypeCatalog, Word};
pub use crate::relstruct::{Cycle, Language, Letter, Structure, SymbolDef, VertexType};
