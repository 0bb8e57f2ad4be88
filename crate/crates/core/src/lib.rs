//! Word-representability of graphs under split decomposition and
//! recomposition.
//!
//! The crate provides the graph substrate, a word engine with a complete
//! representation-number search, split (de/re)composition, comparability and
//! poset machinery (transitive orientations, realizers, dimension, prn), and
//! certificate-producing constructions for recompositions. Every emitted
//! certificate is re-verified before it is returned.

pub mod construct;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod format;
pub mod graph;
pub mod iso;
pub mod order;
pub mod split;
pub mod word;

pub use construct::{
    all_adjacent_recomposition_word, classify_recomposition, edge_join_word,
    irreducible_recomposition_word, mark_permutations, orient_recomposition,
    recomposition_bipartition, recomposition_permutation_word, uniform_recomposition_word,
    MarkPermutations, Reason, RecompositionCertificate, Verdict,
};
pub use error::{Error, Result};
pub use family::{generate_family, FamilySpec};
pub use graph::{join_by_edge, Graph, MarkedGraph};
pub use iso::{
    are_isomorphic, canonical_form, canonical_marked_form, isomorphic_with_pin, CanonicalForm,
};
pub use order::{
    dimension, enumerate_transitive_orientations, hiraguchi_extend, is_all_adjacent,
    is_prn_irreducible, is_sink_feasible, is_source_feasible, orientation_with_role,
    permutation_word, prn, transitive_orientation, DimSearch, IrreducibleVerdict, Orientation,
    Poset, PrnSearch, Realizer, Role,
};
pub use split::{
    find_split, is_parity, minimal_split_decomposition, parity_oracle, recompose,
    representability_via_decomposition, split_once, ComponentTag, DecompositionRep, Split,
    SplitTree,
};
pub use word::{
    find_k_uniform_word, representation_number, RepSearch, ShiftMode, UniformWord, Word,
};
