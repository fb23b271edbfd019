//! Parameter words over a finite alphabet: substitution, minimal envelopes,
//! embedding types, type catalogues and a tiny monochromatic search.

mod catalog;
mod envelope;
mod mono;
mod word;

pub use catalog::{canonical_renaming, enumerate_types, enumerate_types_with_cap, words_up_to, TypeCatalog};
pub use envelope::{embedding_type, minimal_envelope, EnvelopeResult};
pub use mono::{monochromatic_search, param_words, LevelResult, MonoReport, MAX_ALPHABET, MAX_COLOURS, MAX_LENGTH};
pub use word::{
    compose_check, letter_name, parse_word, render_word, substitute, substitute_set, ParamWord, Symbol,
    Word,
};

pub(crate) use envelope::type_of_normalized;
pub(crate) use word::apply_params;
