use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{capability, invalid, Result};
use crate::graph::{Hypergraph3, Hypergraph3Builder};
use crate::subsets::{check_budget, scan_subsets, scan_supersets, PairTable, DEFAULT_SCAN_BUDGET};
use crate::triple::unrank3;

/// Largest `n` for which the random generator certifies its output.
pub const SPARSE_CERTIFY_MAX_N: usize = 32;

/// Evidence that every `m`-set induces at most `m` edges: the heaviest
/// `m`-set found by an exhaustive scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseCertificate {
    pub m: usize,
    pub worst_count: usize,
    /// Lexicographically first `m`-set attaining `worst_count`.
    pub worst_set: Vec<usize>,
}

impl SparseCertificate {
    pub fn is_valid(&self) -> bool {
        self.worst_count <= self.m
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SparseCheck {
    Certified(SparseCertificate),
    /// The lexicographically first `m`-set with more than `m` edges.
    Violation { set: Vec<usize>, count: usize },
}

impl SparseCheck {
    pub fn is_certified(&self) -> bool {
        matches!(self, SparseCheck::Certified(_))
    }
}

/// Exhaustive `m`-sparseness check. When `m >= n` the whole vertex set is
/// the only set examined, so a graph with more than `m` edges in total is
/// never certified.
pub fn is_m_sparse(g: &Hypergraph3, m: usize) -> Result<SparseCheck> {
    is_m_sparse_with_budget(g, m, DEFAULT_SCAN_BUDGET)
}

pub fn is_m_sparse_with_budget(g: &Hypergraph3, m: usize, budget: u128) -> Result<SparseCheck> {
    let n = g.n();
    if m >= n {
        let all: Vec<usize> = (0..n).collect();
        let count = g.edge_count();
        return Ok(if count <= m {
            SparseCheck::Certified(SparseCertificate { m, worst_count: count, worst_set: all })
        } else {
            SparseCheck::Violation { set: all, count }
        });
    }
    check_budget(n, m, budget)?;
    let t = PairTable::new(g)?;
    let mut worst: Option<(u32, Vec<usize>)> = None;
    let mut violation = None;
    let _ = scan_subsets(&t, m, 0..n, &mut |set, count| {
        if count as usize > m {
            violation = Some((set.to_vec(), count as usize));
            return ControlFlow::Break(());
        }
        if worst.as_ref().is_none_or(|(w, _)| count > *w) {
            worst = Some((count, set.to_vec()));
        }
        ControlFlow::Continue(())
    });
    if let Some((set, count)) = violation {
        return Ok(SparseCheck::Violation { set, count });
    }
    let (count, set) = worst.unwrap_or_default();
    Ok(SparseCheck::Certified(SparseCertificate { m, worst_count: count as usize, worst_set: set }))
}

/// A random maximal `m`-sparse graph on `n` vertices: triples are offered in
/// an order shuffled by `seed` and kept unless some `m`-set through the new
/// triple would exceed `m` edges. The result is re-certified exhaustively.
pub fn m_sparse_random(n: usize, m: usize, seed: u64) -> Result<(Hypergraph3, SparseCertificate)> {
    if m < 4 || n < m {
        return invalid(format!("m-sparse generation needs n >= m >= 4, got n = {n}, m = {m}"));
    }
    if n > SPARSE_CERTIFY_MAX_N {
        return capability(format!("certified sparse generation supports n <= {SPARSE_CERTIFY_MAX_N}, got {n}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..crate::triple_count(n)).collect();
    order.shuffle(&mut rng);

    let mut table = PairTable::new(&Hypergraph3::empty(n))?;
    let mut builder = Hypergraph3Builder::new(n);
    for id in order {
        let (a, b, c) = unrank3(id);
        table.toggle(a, b, c);
        let over = scan_supersets(&table, m, &[a, b, c], &mut |_, count| {
            if count as usize > m {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if over.is_break() {
            table.toggle(a, b, c);
        } else {
            builder.insert_id(crate::TripleId(id));
        }
    }
    let g = builder.build();
    match is_m_sparse(&g, m)? {
        SparseCheck::Certified(cert) => Ok((g, cert)),
        SparseCheck::Violation { set, count } => {
            unreachable!("greedy insertion produced an {m}-set {set:?} with {count} edges")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::VertexSet;

    fn brute_worst(g: &Hypergraph3, m: usize) -> usize {
        (0u64..1 << g.n())
            .filter(|s| s.count_ones() as usize == m)
            .map(|s| g.induced_edge_count(&VertexSet::from_mask(s)).unwrap())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn complete_graph_violates() {
        match is_m_sparse(&Hypergraph3::complete(6), 6).unwrap() {
            SparseCheck::Violation { set, count } => {
                assert_eq!(set, vec![0, 1, 2, 3, 4, 5]);
                assert_eq!(count, 20);
            }
            other => panic!("{other:?}"),
        }
        assert!(!is_m_sparse(&Hypergraph3::complete(8), 5).unwrap().is_certified());
    }

    #[test]
    fn few_edges_are_sparse() {
        assert!(is_m_sparse(&Hypergraph3::empty(12), 5).unwrap().is_certified());
        let g = Hypergraph3::from_edges(10, [(0, 1, 2), (0, 1, 3), (2, 5, 9), (4, 6, 8)]).unwrap();
        assert!(is_m_sparse(&g, 4).unwrap().is_certified());
    }

    #[test]
    fn generator_output_certified_and_maximal() {
        for seed in 0..4 {
            let (g, cert) = m_sparse_random(11, 5, seed).unwrap();
            assert!(cert.is_valid());
            assert_eq!(cert.worst_count, brute_worst(&g, 5));
            for (a, b, c) in (0..crate::triple_count(11)).map(unrank3) {
                if g.has_edge(a, b, c) {
                    continue;
                }
                let mut bld = g.to_builder();
                bld.insert(a, b, c).unwrap();
                assert!(!is_m_sparse(&bld.build(), 5).unwrap().is_certified());
            }
        }
    }

    #[test]
    fn n_equal_m_caps_total_edges() {
        let (g, cert) = m_sparse_random(6, 6, 7).unwrap();
        assert!(g.edge_count() <= 6);
        assert_eq!(cert.worst_count, g.edge_count());
    }

    #[test]
    fn generation_is_deterministic() {
        assert_eq!(m_sparse_random(14, 6, 99).unwrap(), m_sparse_random(14, 6, 99).unwrap());
    }

    #[test]
    fn guardrails() {
        assert!(m_sparse_random(5, 6, 0).is_err());
        assert!(m_sparse_random(5, 3, 0).is_err());
        assert!(matches!(m_sparse_random(33, 8, 0), Err(crate::Error::Capability(_))));
        assert!(matches!(
            is_m_sparse_with_budget(&Hypergraph3::empty(30), 10, 1000),
            Err(crate::Error::Capability(_))
        ));
    }
}
