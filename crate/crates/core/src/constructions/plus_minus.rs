use crate::binom::c3;
use crate::error::{invalid, Error, Result};
use crate::graph::Hypergraph3;

use super::{f_formula, g_construction, m_sparse_random, CanonicalParams, CrossingSet, SparseCheck};

/// The sparse graph placed on a base set of `b` vertices. Base sets smaller
/// than `m` get the first `min(m, C(b,3))` triples in colex order, which is
/// trivially `m`-sparse.
pub fn base_sparse_graph(b: usize, m: usize, seed: u64) -> Result<Hypergraph3> {
    if m < 4 {
        return invalid(format!("sparsity order must be at least 4, got {m}"));
    }
    if b < m {
        let keep = m.min(crate::triple_count(b));
        let mut id = 0;
        return Ok(Hypergraph3::from_fn(b, |_, _, _| {
            id += 1;
            id <= keep
        }));
    }
    Ok(m_sparse_random(b, m, seed)?.0)
}

/// `G(S, n, k)` together with `sparse` placed on the base set `{k..n}`.
/// `sparse` must have `n - k` vertices and be `m`-sparse.
pub fn canonical_plus_with(p: CanonicalParams, m: usize, sparse: &Hypergraph3) -> Result<Hypergraph3> {
    let g = g_construction(p)?;
    if sparse.n() != p.n - p.k {
        return invalid(format!("sparse graph has {} vertices, base set has {}", sparse.n(), p.n - p.k));
    }
    if let SparseCheck::Violation { set, count } = super::is_m_sparse(sparse, m)? {
        return invalid(format!("base graph is not {m}-sparse: {set:?} spans {count} edges"));
    }
    let mut b = g.to_builder();
    for (x, y, z) in sparse.edges() {
        b.insert(x + p.k, y + p.k, z + p.k)?;
    }
    Ok(b.build())
}

/// A canonical plus graph: `G(S, n, k)` plus a random certified `m`-sparse
/// graph on the base set.
pub fn canonical_plus(p: CanonicalParams, m: usize, seed: u64) -> Result<Hypergraph3> {
    let sparse = base_sparse_graph(p.n - p.k, m, seed)?;
    canonical_plus_with(p, m, &sparse)
}

/// A canonical minus graph with parameters `p`: `G(S, n, k)` with a certified
/// `m`-sparse graph removed from the clique `A`, built as the complement of
/// the canonical plus graph with parameters `p.complement()`.
pub fn canonical_minus(p: CanonicalParams, m: usize, seed: u64) -> Result<Hypergraph3> {
    Ok(canonical_plus(p.complement(), m, seed)?.complement())
}

/// A canonical plus graph with first parameter `s` and exactly `e` edges.
///
/// If `e = f(S,n,k)` for some `k` the result is `G(S,n,k)` for the smallest
/// such `k`. Otherwise `k` is the smallest value with
/// `f(S,n,k) < e < f(S,n,k+1)` and the first `e - f(S,n,k)` edges (ascending
/// triple id) of a certified `m`-sparse graph on the base set are added.
pub fn realize_edge_count(s: CrossingSet, n: usize, e: u128, m: usize, seed: u64) -> Result<Hypergraph3> {
    if e > c3(n as u128) {
        return invalid(format!("e = {e} exceeds C({n},3)"));
    }
    let f = |k| f_formula(CanonicalParams { s, n, k });
    if let Some(k) = (0..=n).find(|&k| f(k) == e) {
        return g_construction(CanonicalParams::new(s, n, k)?);
    }
    // f(S,n,0) = 0 <= e, so the first k whose successor reaches e brackets it.
    let k = (0..n).find(|&k| f(k) < e && e < f(k + 1)).expect("f(S,n,n) = C(n,3) >= e");
    let needed = e - f(k);
    let p = CanonicalParams::new(s, n, k)?;
    let pool = base_sparse_graph(n - k, m, seed)?;
    let available = pool.edge_count() as u128;
    if needed > available {
        return Err(Error::InsufficientSparseEdges { needed, available });
    }
    let chosen: Vec<_> = pool.edges().take(needed as usize).collect();
    let sparse = Hypergraph3::from_edges(n - k, chosen)?;
    canonical_plus_with(p, m, &sparse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::VertexSet;
    use rand::seq::index::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: CrossingSet, n: usize, k: usize) -> CanonicalParams {
        CanonicalParams::new(s, n, k).unwrap()
    }

    #[test]
    fn empty_sparse_graph_gives_g() {
        for s in CrossingSet::ALL {
            let q = p(s, 14, 5);
            let plus = canonical_plus_with(q, 6, &Hypergraph3::empty(9)).unwrap();
            assert_eq!(plus, g_construction(q).unwrap());
        }
    }

    #[test]
    fn plus_contains_g_and_adds_only_base_edges() {
        let q = p(CrossingSet::ONE, 20, 6);
        let plus = canonical_plus(q, 6, 3).unwrap();
        let g = g_construction(q).unwrap();
        assert!(g.is_subgraph_of(&plus));
        assert!(plus.edge_count() > g.edge_count());
        for (a, _, _) in plus.edges().filter(|&(a, b, c)| !g.has_edge(a, b, c)) {
            assert!(a >= 6);
        }
    }

    #[test]
    fn minus_is_complement_of_plus() {
        let q = p(CrossingSet::TWO, 18, 7);
        let minus = canonical_minus(q, 5, 1).unwrap();
        let plus = canonical_plus(q.complement(), 5, 1).unwrap();
        assert_eq!(minus.complement(), plus);
    }

    #[test]
    fn exact_values_return_g() {
        for s in CrossingSet::ALL {
            for k in 0..=12 {
                let e = f_formula(p(s, 12, k));
                let g = realize_edge_count(s, 12, e, 5, 0).unwrap();
                assert_eq!(g.edge_count() as u128, e);
                let first = (0..=12).find(|&j| f_formula(p(s, 12, j)) == e).unwrap();
                assert_eq!(g, g_construction(p(s, 12, first)).unwrap());
            }
        }
    }

    #[test]
    fn one_more_edge_adds_one_sparse_edge() {
        let e = f_formula(p(CrossingSet::EMPTY, 16, 6)) + 1;
        let g = realize_edge_count(CrossingSet::EMPTY, 16, e, 6, 0).unwrap();
        let base = g_construction(p(CrossingSet::EMPTY, 16, 6)).unwrap();
        assert!(base.is_subgraph_of(&g));
        assert_eq!(g.edge_count(), base.edge_count() + 1);
    }

    #[test]
    fn realize_125_on_20() {
        let g = realize_edge_count(CrossingSet::EMPTY, 20, 125, 8, 11).unwrap();
        assert_eq!(g.edge_count(), 125);
        let base = g_construction(p(CrossingSet::EMPTY, 20, 10)).unwrap();
        assert!(base.is_subgraph_of(&g));
    }

    #[test]
    fn insufficient_pool_is_reported() {
        // k = 3 leaves a 3-vertex base set holding at most one edge.
        let s = CrossingSet::EMPTY;
        let r = realize_edge_count(s, 6, 3, 4, 0);
        assert!(matches!(r, Err(Error::InsufficientSparseEdges { needed: 2, available: 1 })), "{r:?}");
        assert!(realize_edge_count(s, 6, 21, 4, 0).is_err());
    }

    fn window_hit(s: CrossingSet, m: usize, v: u128, plus: bool) -> bool {
        let mm = m as u128;
        (0..=m).any(|x| {
            let f = f_formula(CanonicalParams { s, n: m, k: x });
            if plus {
                f <= v && v <= f + mm
            } else {
                f.saturating_sub(mm) <= v && v <= f
            }
        })
    }

    #[test]
    fn sampled_m_sets_fall_in_windows() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let (n, m) = (24, 6);
        for s in CrossingSet::ALL {
            for k in [0, 4, 9, 14, 18] {
                let q = p(s, n, k);
                let plus = canonical_plus(q, m, k as u64).unwrap();
                let minus = canonical_minus(q, m, k as u64).unwrap();
                for _ in 0..300 {
                    let set = VertexSet::new(sample(&mut rng, n, m));
                    let vp = plus.induced_edge_count(&set).unwrap() as u128;
                    let vm = minus.induced_edge_count(&set).unwrap() as u128;
                    assert!(window_hit(s, m, vp, true), "plus {s} k={k} {set:?} -> {vp}");
                    assert!(window_hit(s, m, vm, false), "minus {s} k={k} {set:?} -> {vm}");
                }
            }
        }
    }
}
