//! Exact computation in the free band with identity over a finite alphabet.
//!
//! Elements are represented by minimal deterministic synchronous transducers
//! with input alphabet `{0, 1}`. Two words are equal in the free band exactly
//! when their minimal transducers are isomorphic.

pub mod enumerate;
pub mod error;
pub mod interval;
pub mod minimize;
pub mod minword;
pub mod multiply;
pub mod oracle;
pub mod sample;
pub mod transducer;
pub mod words;

pub use enumerate::enumerate_fb;
pub use error::{Error, Result};
pub use interval::{
    interval_transducer, interval_transducer_full, maximal_subwords, MaximalSubwords,
};
pub use minimize::{equal_in_free_band, equal_transducers, is_minimal, isomorphic, minimize};
pub use minword::{classify_case, min_word, normalize, Classification, OverlapCase};
pub use multiply::{compute_k, multiply, BoundaryMaps, KTable};
pub use sample::WordSampler;
pub use transducer::{treelike, Edge, StateId, Transducer, TransducerBuilder, Violation};
pub use words::{ast, circ, content, f_eval, Content, Letter, Word};
