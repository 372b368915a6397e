use ordersize::constructions::*;
use ordersize::forcing::{count_k43minus, induced_pair_witness, size_histogram, OrderSizePair};
use ordersize::{Hypergraph3, VertexSet};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn iterated_construction_six_sets_span_at_most_nine() {
    for n in (6..=60).filter(|&n| is_hn_order(n)) {
        let g = construct_hn_iterated(n, DEFAULT_CUTOFF).unwrap();
        let h = size_histogram(&g, 6).unwrap();
        assert!(h.max_size().unwrap() <= 9, "n = {n}: {:?}", h.counts);
    }
}

#[test]
fn iterated_construction_histogram_at_30() {
    let h = size_histogram(&construct_hn_iterated(30, 6).unwrap(), 6).unwrap();
    assert!(h.counts[10..].iter().all(|&c| c == 0));
    assert!(h.counts[9] > 0);
}

#[test]
fn iterated_construction_is_k4_minus_free() {
    for n in [20, 37] {
        assert_eq!(count_k43minus(&construct_hn_iterated(n, 6).unwrap()), 0, "n = {n}");
    }
}

#[test]
fn seed_links_and_degrees() {
    let h = seed_h();
    let mut degrees = h.degrees();
    degrees.sort_unstable();
    assert_eq!(degrees, vec![4, 4, 4, 5, 5, 5]);
    for v in 0..6 {
        let link = h.link_graph(v).unwrap();
        assert!((4..=5).contains(&link.edge_count()));
        assert!(link.max_degree() <= 2);
    }
    assert_eq!(count_k43minus(&h), 0);
}

#[test]
fn seed_is_not_isomorphic_to_graphs_with_a_k4_minus() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let h = seed_h();
    for _ in 0..200 {
        // a K4^3- on {0,1,2,3} plus six random further triples
        let mut b = Hypergraph3::from_edges(6, [(0, 1, 2), (0, 1, 3), (0, 2, 3)]).unwrap().to_builder();
        while b.clone().build().edge_count() < 9 {
            let t = sample(&mut rng, 6, 3).into_vec();
            let _ = b.insert(t[0], t[1], t[2]);
        }
        assert!(!h.is_isomorphic(&b.build()).unwrap());
    }
}

#[test]
fn induced_subgraphs_of_g_are_g() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..300 {
        let s = CrossingSet::ALL[rng.gen_range(0..4)];
        let n = rng.gen_range(1..=10);
        let k = rng.gen_range(0..=n);
        let g = g_construction(CanonicalParams::new(s, n, k).unwrap()).unwrap();
        let size = rng.gen_range(1..=n);
        let set = VertexSet::new(sample(&mut rng, n, size));
        let sub = g.induced_subgraph(&set).unwrap();
        let k2 = set.iter().filter(|&v| v < k).count();
        let want = g_construction(CanonicalParams::new(s, size, k2).unwrap()).unwrap();
        assert!(sub.is_isomorphic(&want).unwrap());
    }
}

#[test]
fn sparse_generator_at_24_8() {
    let (g, cert) = m_sparse_random(24, 8, 2024).unwrap();
    assert!(cert.is_valid());
    assert!(is_m_sparse(&g, 8).unwrap().is_certified());
    assert!(g.edge_count() >= 57, "{}", g.edge_count());
}

#[test]
fn blowup_fixture_configurations() {
    let k4 = blowup(&Hypergraph3::complete(4), 3).unwrap();
    let set = VertexSet::new([0, 1, 2, 3, 6, 9]);
    assert_eq!(k4.induced_edge_count(&set).unwrap(), 10);
    assert!(induced_pair_witness(&k4, OrderSizePair::new(6, 10).unwrap()).unwrap().is_some());

    let minus = Hypergraph3::from_edges(4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)]).unwrap();
    let weak = weak_blowup_fixture(&minus, 2, &IntraPattern::Empty).unwrap();
    let set = VertexSet::new([0, 1, 2, 3, 4, 6]);
    // {x1,x1'} x {x2,x2'} x x3 and x4, then {x1,x1'} with x3 x4
    let by_hand = 2 * 2 + 2 * 2 + 2;
    assert_eq!(weak.induced_edge_count(&set).unwrap(), by_hand);
}
