use crate::error::{invalid, Result};
use crate::graph::{Hypergraph3, Hypergraph3Builder};

use super::check_materialize;

/// Triples meeting some part in exactly two vertices, which a weak blow-up
/// leaves unconstrained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntraPattern {
    /// None of them are edges: the exact blow-up.
    Empty,
    /// All of them are edges.
    Full,
    /// Exactly the listed triples, in blown-up vertex labels.
    Explicit(Vec<(usize, usize, usize)>),
}

/// The `t`-blow-up `H(t)`: vertex `i` of `H` becomes the independent part
/// `{i*t, ..., i*t + t - 1}`, and a triple with one vertex in each of three
/// parts is an edge iff the part indices form an edge of `H`.
pub fn blowup(h: &Hypergraph3, t: usize) -> Result<Hypergraph3> {
    weak_blowup_fixture(h, t, &IntraPattern::Empty)
}

/// A weak blow-up: transversal triples follow `H`, triples with exactly two
/// vertices in one part follow `pattern`, and every part stays independent.
pub fn weak_blowup_fixture(h: &Hypergraph3, t: usize, pattern: &IntraPattern) -> Result<Hypergraph3> {
    if t == 0 {
        return invalid("blow-up factor must be positive");
    }
    let n = h
        .n()
        .checked_mul(t)
        .ok_or_else(|| crate::Error::Capability("blow-up size overflows".into()))?;
    check_materialize(n)?;
    let part = |v: usize| v / t;
    let shape = |a: usize, b: usize, c: usize| {
        let (pa, pb, pc) = (part(a), part(b), part(c));
        if pa != pb && pb != pc && pa != pc {
            Shape::Transversal(pa, pb, pc)
        } else if pa == pb && pb == pc {
            Shape::Inside
        } else {
            Shape::TwoInPart
        }
    };
    let base = Hypergraph3::from_fn(n, |a, b, c| match shape(a, b, c) {
        Shape::Transversal(x, y, z) => h.has_edge(x, y, z),
        Shape::TwoInPart => matches!(pattern, IntraPattern::Full),
        Shape::Inside => false,
    });
    let IntraPattern::Explicit(extra) = pattern else {
        return Ok(base);
    };
    let mut builder: Hypergraph3Builder = base.to_builder();
    for &(a, b, c) in extra {
        if a.max(b).max(c) >= n || a == b || b == c || a == c {
            return invalid(format!("pattern triple ({a},{b},{c}) is not a triple of the blow-up"));
        }
        match shape(a, b, c) {
            Shape::TwoInPart => {
                builder.insert(a, b, c)?;
            }
            Shape::Inside => {
                return invalid(format!("pattern triple ({a},{b},{c}) lies inside one part"));
            }
            Shape::Transversal(..) => {
                return invalid(format!("pattern triple ({a},{b},{c}) is transversal"));
            }
        }
    }
    Ok(builder.build())
}

enum Shape {
    Transversal(usize, usize, usize),
    TwoInPart,
    Inside,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::seed_h;
    use crate::VertexSet;

    fn k4_minus() -> Hypergraph3 {
        // 1-based 123, 124, 134
        Hypergraph3::from_edges(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)]).unwrap()
    }

    #[test]
    fn single_edge_doubles_to_eight() {
        let e = Hypergraph3::complete(3);
        assert_eq!(blowup(&e, 2).unwrap().edge_count(), 8);
    }

    #[test]
    fn edge_count_scales_cubically() {
        let h = seed_h();
        for t in 1..=5 {
            assert_eq!(blowup(&h, t).unwrap().edge_count(), t * t * t * 9);
        }
    }

    #[test]
    fn parts_are_independent() {
        let g = blowup(&seed_h(), 3).unwrap();
        for p in 0..6 {
            assert!(g.is_independent(&VertexSet::new(3 * p..3 * p + 3)).unwrap());
        }
    }

    #[test]
    fn k4_blowup_ten_edge_six_set() {
        let g = blowup(&Hypergraph3::complete(4), 3).unwrap();
        // three vertices of part 0 plus one from each other part
        let set = VertexSet::new([0, 1, 2, 3, 6, 9]);
        assert_eq!(g.induced_edge_count(&set).unwrap(), 10);
    }

    #[test]
    fn weak_k4_minus_configuration() {
        let g = weak_blowup_fixture(&k4_minus(), 2, &IntraPattern::Empty).unwrap();
        assert_eq!(g, blowup(&k4_minus(), 2).unwrap());
        // x1, x1', x2, x2', x3, x4
        let set = VertexSet::new([0, 1, 2, 3, 4, 6]);
        assert_eq!(g.induced_edge_count(&set).unwrap(), 10);
    }

    #[test]
    fn full_pattern_keeps_parts_independent() {
        let g = weak_blowup_fixture(&Hypergraph3::complete(4), 2, &IntraPattern::Full).unwrap();
        for p in 0..4 {
            assert!(g.is_independent(&VertexSet::new([2 * p, 2 * p + 1])).unwrap());
        }
        // 4 part triples * 2^3 transversal edges, plus 4 part pairs * 6 other vertices
        assert_eq!(g.edge_count(), 32 + 4 * 6);
    }

    #[test]
    fn explicit_pattern_is_validated() {
        let h = Hypergraph3::complete(3);
        let ok = weak_blowup_fixture(&h, 3, &IntraPattern::Explicit(vec![(0, 1, 3)])).unwrap();
        assert_eq!(ok.edge_count(), 27 + 1);
        assert!(weak_blowup_fixture(&h, 3, &IntraPattern::Explicit(vec![(0, 1, 2)])).is_err());
        assert!(weak_blowup_fixture(&h, 3, &IntraPattern::Explicit(vec![(0, 3, 6)])).is_err());
        assert!(weak_blowup_fixture(&h, 3, &IntraPattern::Explicit(vec![(0, 1, 9)])).is_err());
        assert!(blowup(&h, 0).is_err());
    }

    #[test]
    fn oversized_blowups_are_refused() {
        assert!(matches!(blowup(&seed_h(), 1000), Err(crate::Error::Capability(_))));
    }
}
