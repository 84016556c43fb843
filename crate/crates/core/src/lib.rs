//! Analysis of graphic degree sequences: several independent decision
//! procedures, construction and exhaustive enumeration of labeled
//! realizations through single-edge reductions, Ferrers diagrams, and a
//! brute-force oracle for validating everything at small scale.
//!
//! ```
//! use graphseq::{enumerate_all, is_graphic, DegreeSequence, Method};
//!
//! let seq = DegreeSequence::parse("2 2 1 1")?;
//! assert!(is_graphic(&seq, Method::TopRight)?.is_graphic());
//!
//! let realizations: Vec<_> = enumerate_all(&seq).collect();
//! assert_eq!(realizations.len(), 2);
//! # Ok::<(), graphseq::Error>(())
//! ```

#![forbid(unsafe_code)]

pub mod error;
pub mod ferrers;
pub mod graphicality;
pub mod oracle;
pub mod realizations;
pub mod reductions;
pub mod sequence;
pub mod special;

pub use error::{Error, Result};
pub use ferrers::{build_ferrers, render_ferrers, Cell, FerrersDiagram};
pub use graphicality::{
    berge_triple, check_berge, check_bh, check_eg, check_kw, check_weak, is_graphic, top_right,
    CheckReport, IndexSet, Method, Note, PositionalState, Verdict, Witness,
};
pub use realizations::{
    count_realizations, edge_rotation, enumerate_all, realize_kw, realize_with_edge,
    reconstruct_order, Enumeration, LabeledGraph,
};
pub use reductions::{
    backward_canonical, choudum_reduce, extend_top, forward_canonical, lay_off,
    lay_off_with_targets, lemma_cases, two_reduce, LemmaCases, ReductionKind, ReductionStep,
};
pub use sequence::{parse_tokens, DegreeSequence, Entry, IndexProfile, Label};
pub use special::{is_quasi_perfect, quasi_perfect_chain, quasi_perfect_pair, QuasiPerfectKind};
