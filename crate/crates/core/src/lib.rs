//! Andrásfai graphs `And_k`, an explicit minimal bipartification `F_k` of
//! size `floor(k^2/4)` with machine-checkable certificates, and an exact
//! minimum edge-bipartization solver for testing whether `F_k` is minimum.
//!
//! ```
//! use andrasfai_core::{andrasfai_graph, f, is_bipartite, Removal};
//!
//! let g = andrasfai_graph(5).unwrap();
//! let fk = f(5).unwrap();
//! assert_eq!(fk.len(), 6);
//! let rest = g.remove_edges(&fk, Removal::Strict).unwrap();
//! assert!(is_bipartite(&rest).is_bipartite());
//! ```

pub mod andrasfai;
pub mod bipartify;
pub mod bipartite;
pub mod certificate;
pub mod dimacs;
pub mod error;
pub mod graph;
pub mod report;
pub mod solver;
pub mod survey;

pub use andrasfai::{andrasfai, andrasfai_graph, check_structure, inductive_reduction, AndrasfaiInstance};
pub use bipartify::{
    alternative_bipartification, cardinality, delta_f, delta_f_by_difference, f, f_size,
    partition_ab, signature, u1, u2, verify_minimal_bipartification, witness_c, witness_d,
    Cardinality, Rational, ResiduePair,
};
pub use bipartite::{find_odd_cycle_through_edge, is_bipartite, Bipartiteness};
pub use certificate::{
    certify, certify_edge_set, certify_range, check_certificate, designated_witness, BipartificationCertificate,
    CertificateDocument, CertifyOptions, DesignatedWitness, WitnessKind,
};
pub use dimacs::{read_dimacs, write_dimacs};
pub use error::{Error, Result};
pub use graph::{Bipartition, CycleWitness, Edge, EdgeSet, Graph, Removal};
pub use report::{Claim, Counterexample, VerificationReport};
pub use solver::{
    check_conjecture, enumerate_minimum_deletions, max_cut, min_bipartization, ConjectureReport,
    Enumeration, SolverConfig, SolverResult, Verdict,
};
pub use survey::{survey, SurveyRow};
