use crate::graph::Hypergraph3;

/// Edges of the six-vertex seed graph `H`, 0-based. In 1-based labels these
/// are 123, 124, 345, 346, 561, 562, 135, 146, 236. Adding 245 (here
/// `(1, 3, 4)`) gives the 5-regular graph behind the Frankl–Füredi
/// construction.
pub const SEED_H_EDGES: [(usize, usize, usize); 9] = [
    (0, 1, 2),
    (0, 1, 3),
    (2, 3, 4),
    (2, 3, 5),
    (0, 4, 5),
    (1, 4, 5),
    (0, 2, 4),
    (0, 3, 5),
    (1, 2, 5),
];

/// The seed graph `H`: 9 edges on 6 vertices, `K4^-`-free, every 6-set
/// (i.e. the whole graph) spanning 9 edges.
pub fn seed_h() -> Hypergraph3 {
    Hypergraph3::from_edges(6, SEED_H_EDGES).expect("seed edges are valid")
}
