//! Order-size forcing in 3-uniform hypergraphs.
//!
//! A pair `(m, f)` is *forced* by `(n, e)` when every 3-graph on `n` vertices
//! with `e` edges has an `m`-vertex subset spanning exactly `f` edges. This
//! crate provides the dense [`Hypergraph3`] substrate with canonical
//! labeling, generators for the blow-up and clique/independent-set families
//! used to avoid induced pairs, exhaustive and heuristic forcing checks, the
//! interval-set certificates that rule pairs out, and an exact search over
//! the tetrahedral-number system those certificates leave open.

pub mod binom;
mod canon;
pub mod constructions;
pub mod diophantine;
mod error;
pub mod forcing;
mod graph;
mod link;
mod subsets;
mod text;
mod triple;

pub use canon::{CanonicalForm, CANON_MAX_N};
pub use error::{Error, Result};
pub use graph::{Hypergraph3, Hypergraph3Builder, VertexSet};
pub use link::LinkGraph;
pub use subsets::{DEFAULT_SCAN_BUDGET, SCAN_MAX_N};
pub use triple::{triple_count, triple_rank, triple_unrank, TripleId};
