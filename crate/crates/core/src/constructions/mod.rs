//! Generators and exact counting formulas for the graph families used to
//! avoid induced order-size pairs.

mod blowup;
mod family;
mod hn;
mod interval;
mod plus_minus;
mod seed;
mod sparse;

pub use blowup::{blowup, weak_blowup_fixture, IntraPattern};
pub use family::{f_formula, f_set, g_construction, CanonicalParams, CrossingSet};
pub use hn::{
    construct_hn, construct_hn_iterated, hn_edge_count, hn_iterated_edge_count, is_hn_order,
    part_sizes_hn, HnLayout, PartSizes, DEFAULT_CUTOFF,
};
pub use interval::IntervalSet;
pub use plus_minus::{base_sparse_graph, canonical_minus, canonical_plus, canonical_plus_with, realize_edge_count};
pub use seed::{seed_h, SEED_H_EDGES};
pub use sparse::{
    is_m_sparse, is_m_sparse_with_budget, m_sparse_random, SparseCertificate, SparseCheck,
    SPARSE_CERTIFY_MAX_N,
};

/// Largest vertex count a generator will materialize as a dense bitset.
pub const MATERIALIZE_MAX_N: usize = 1024;

pub(crate) fn check_materialize(n: usize) -> crate::Result<()> {
    if n > MATERIALIZE_MAX_N {
        return crate::error::capability(format!(
            "materializing n = {n} vertices exceeds the limit {MATERIALIZE_MAX_N}; use the counting formulas"
        ));
    }
    Ok(())
}
