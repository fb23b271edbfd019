//! Finite relational structures over languages of unary and binary symbols.

mod canon;
mod cycles;
mod embed;
pub mod io;
mod language;
mod structure;

pub use canon::{canonicalize, canonicalize_with_cap};
pub use cycles::{for_each_induced_cycle, induced_cycles, is_induced_cycle, Cycle};
pub use embed::{
    embeddings, for_each_embedding, is_embedding, is_homomorphism, is_homomorphism_embedding,
    isomorphic,
};
pub use language::{bits, Language, SymbolDef, MAX_SYMBOLS_PER_ARITY};
pub use structure::{
    gaifman, induced, induced_by_names, is_irreducible, triangle, Gaifman, Letter, Structure,
    VertexType,
};
