use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::binom::c3;
use crate::constructions::{construct_hn_iterated, hn_iterated_edge_count, IntervalSet, DEFAULT_CUTOFF};
use crate::error::{invalid, Result};
use crate::graph::Hypergraph3;

/// Edge counts `e` for which `H_n^it` yields an `n`-vertex graph with `e`
/// edges and no induced `(6, 10)`: any subgraph of `H_n^it`, or any
/// supergraph of its complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AvoidableRange {
    pub n: usize,
    pub construction_edges: u128,
    pub total: u128,
    pub range: IntervalSet,
}

impl AvoidableRange {
    /// `1 - 2 |E(H_n^it)| / C(n,3)`, the share of edge counts this range
    /// leaves open.
    pub fn open_fraction(&self) -> f64 {
        1.0 - 2.0 * self.construction_edges as f64 / self.total as f64
    }

    /// A witness with `e` edges: `H_n^it` with random edges deleted, or the
    /// complement of such a graph for `e` in the upper interval.
    pub fn witness(&self, e: u128, seed: u64) -> Result<Hypergraph3> {
        if !self.range.contains(e) {
            return invalid(format!("e = {e} is outside the avoidable range {}", self.range));
        }
        let upper = e > self.construction_edges;
        let keep = if upper { self.total - e } else { e } as usize;
        let h = construct_hn_iterated(self.n, DEFAULT_CUTOFF)?;
        let mut edges: Vec<_> = h.edges().collect();
        edges.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        edges.truncate(keep);
        let g = Hypergraph3::from_edges(self.n, edges)?;
        Ok(if upper { g.complement() } else { g })
    }
}

pub fn avoidable_range_from_construction(n: usize) -> Result<AvoidableRange> {
    let edges = hn_iterated_edge_count(n, DEFAULT_CUTOFF)?;
    let total = c3(n as u128);
    Ok(AvoidableRange {
        n,
        construction_edges: edges,
        total,
        range: IntervalSet::from_spans([(0, edges), (total - edges, total)]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::{induced_pair_witness, OrderSizePair};

    #[test]
    fn intervals_stay_apart() {
        for n in (7..=3000).filter(|&n| crate::constructions::is_hn_order(n)) {
            let r = avoidable_range_from_construction(n).unwrap();
            assert_eq!(r.range.spans().len(), 2, "n = {n}");
        }
    }

    #[test]
    fn open_fraction_at_2000() {
        let r = avoidable_range_from_construction(2000).unwrap();
        assert!((r.open_fraction() - 0.47106).abs() < 0.01);
    }

    #[test]
    fn witnesses_avoid_six_ten() {
        let r = avoidable_range_from_construction(20).unwrap();
        let p = OrderSizePair::new(6, 10).unwrap();
        for e in [0, 1, 100, r.construction_edges, r.total - r.construction_edges, r.total - 1, r.total] {
            let g = r.witness(e, e as u64).unwrap();
            assert_eq!(g.edge_count() as u128, e);
            assert!(induced_pair_witness(&g, p).unwrap().is_none(), "e = {e}");
        }
        assert!(r.witness(r.construction_edges + 1, 0).is_err());
    }
}
