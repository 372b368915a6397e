use crate::error::{invalid, Result};
use crate::graph::{Hypergraph3, VertexSet};

fn edges_in(g: &Hypergraph3, [a, b, c, d]: [usize; 4]) -> u32 {
    [g.has_edge(a, b, c), g.has_edge(a, b, d), g.has_edge(a, c, d), g.has_edge(b, c, d)]
        .into_iter()
        .filter(|&x| x)
        .count() as u32
}

/// Copies of K4^3- hosted by a 4-set spanning `k` edges: one per choice of
/// three of its edges.
fn copies(k: u32) -> u64 {
    match k {
        3 => 1,
        4 => 4,
        _ => 0,
    }
}

fn four_sets(n: usize) -> impl Iterator<Item = [usize; 4]> {
    (0..n).flat_map(move |a| {
        (a + 1..n).flat_map(move |b| (b + 1..n).flat_map(move |c| (c + 1..n).map(move |d| [a, b, c, d])))
    })
}

/// Subgraph copies of K4^3-, counted as (4-set, three of its edges) pairs.
pub fn count_k43minus(g: &Hypergraph3) -> u64 {
    four_sets(g.n()).map(|q| copies(edges_in(g, q))).sum()
}

/// The 4-sets spanning at least three edges: the edge set of the auxiliary
/// 4-graph with one edge per 4-set hosting a copy.
pub fn k43minus_four_sets(g: &Hypergraph3) -> Vec<[usize; 4]> {
    four_sets(g.n()).filter(|&q| edges_in(g, q) >= 3).collect()
}

/// Copies of K4^3- whose four vertices lie in four distinct `parts`.
pub fn count_transversal_k43minus(g: &Hypergraph3, parts: &[VertexSet]) -> Result<u64> {
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    for (i, p) in parts.iter().enumerate() {
        for v in p.iter() {
            if v >= n {
                return invalid(format!("part vertex {v} out of range"));
            }
            if owner[v] != usize::MAX {
                return invalid(format!("vertex {v} lies in two parts"));
            }
            owner[v] = i;
        }
    }
    let mut total = 0;
    for q in four_sets(n) {
        let o = q.map(|v| owner[v]);
        let distinct = o.iter().all(|&x| x != usize::MAX)
            && (0..4).all(|i| (i + 1..4).all(|j| o[i] != o[j]));
        if distinct {
            total += copies(edges_in(g, q));
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{blowup, seed_h};

    fn k4_minus() -> Hypergraph3 {
        Hypergraph3::from_edges(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)]).unwrap()
    }

    fn parts(k: usize, t: usize) -> Vec<VertexSet> {
        (0..k).map(|i| VertexSet::new(i * t..(i + 1) * t)).collect()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_k43minus(&Hypergraph3::complete(4)), 4);
        assert_eq!(count_k43minus(&k4_minus()), 1);
        assert_eq!(count_k43minus(&seed_h()), 0);
        assert!(k43minus_four_sets(&seed_h()).is_empty());
        assert_eq!(k43minus_four_sets(&Hypergraph3::complete(5)).len(), 5);
        assert_eq!(count_k43minus(&Hypergraph3::complete(5)), 20);
    }

    fn brute_transversal(g: &Hypergraph3, t: usize) -> u64 {
        // one vertex from each of the four parts, then every 3-subset of its triples
        let mut total = 0;
        for a in 0..t {
            for b in t..2 * t {
                for c in 2 * t..3 * t {
                    for d in 3 * t..4 * t {
                        let tri = [(a, b, c), (a, b, d), (a, c, d), (b, c, d)];
                        for skip in 0..4 {
                            if (0..4).filter(|&i| i != skip).all(|i| g.has_edge(tri[i].0, tri[i].1, tri[i].2)) {
                                total += 1;
                            }
                        }
                    }
                }
            }
        }
        total
    }

    #[test]
    fn transversal_copies_in_blowups() {
        let g = blowup(&k4_minus(), 2).unwrap();
        let count = count_transversal_k43minus(&g, &parts(4, 2)).unwrap();
        assert_eq!(count, brute_transversal(&g, 2));
        // each transversal 4-set spans exactly the three pattern edges
        assert_eq!(count, 16);
        let g = blowup(&Hypergraph3::complete(4), 2).unwrap();
        assert_eq!(count_transversal_k43minus(&g, &parts(4, 2)).unwrap(), 4 * 16);
    }

    #[test]
    fn overlapping_parts_rejected() {
        let g = Hypergraph3::complete(5);
        let bad = [VertexSet::new([0, 1]), VertexSet::new([1, 2])];
        assert!(count_transversal_k43minus(&g, &bad).is_err());
        assert!(count_transversal_k43minus(&g, &[VertexSet::new([7])]).is_err());
    }
}
