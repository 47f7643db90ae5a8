//! Simple minors of Boolean functions and their hypergraph encoding.
//!
//! Boolean functions are truth tables ([`TruthTable`]); their Zhegalkin
//! polynomials are hypergraphs ([`Hypergraph`]). On top of those sit the
//! join-irreducibility deciders, the graph and Steiner-system recognizers,
//! and the exhaustive catalog and verification suites.

pub mod boolfn;
pub mod catalog;
pub mod error;
pub mod format;
pub mod graphs;
pub mod hypergraph;
pub mod irreducibility;
pub mod steiner;
pub mod verify;

pub use boolfn::{CanonicalForm, TruthTable, VarMap};
pub use error::{Error, Result};
pub use hypergraph::Hypergraph;
