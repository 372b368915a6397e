use std::collections::HashSet;

use ordersize::forcing::{class_counts, enumerate_graphs};
use ordersize::{triple_count, triple_rank, triple_unrank, Hypergraph3, TripleId};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Orbit counts by edge count: the average over `S_n` of the product over
/// triple cycles of `(1 + x^len)`.
fn burnside(n: usize) -> Vec<u64> {
    let t = triple_count(n);
    let perms = permutations(n);
    let mut sum = vec![0u64; t + 1];
    for p in &perms {
        let image: Vec<usize> = (0..t)
            .map(|i| {
                let (a, b, c) = triple_unrank(TripleId(i), n).unwrap();
                let mut v = [p[a], p[b], p[c]];
                v.sort_unstable();
                triple_rank(v[0], v[1], v[2], n).unwrap().0
            })
            .collect();
        let mut seen = vec![false; t];
        let mut poly = vec![0u64; t + 1];
        poly[0] = 1;
        for s in 0..t {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = image[x];
                len += 1;
            }
            for e in (len..=t).rev() {
                poly[e] += poly[e - len];
            }
        }
        sum.iter_mut().zip(&poly).for_each(|(a, b)| *a += b);
    }
    sum.iter().map(|s| s / perms.len() as u64).collect()
}

#[test]
fn class_counts_match_burnside() {
    for n in 0..=5 {
        assert_eq!(class_counts(n).unwrap(), burnside(n), "n = {n}");
    }
    let four: u64 = burnside(4).iter().sum();
    assert_eq!(four, 5);
    assert_eq!(enumerate_graphs(5, 0, |_| {}).unwrap(), 1);
}

#[test]
fn six_ten_classes_match_brute_force_dedup() {
    let mut classes = HashSet::new();
    // every 10-subset of the 20 triples, in colex order of bitmasks
    let mut mask: u32 = (1 << 10) - 1;
    while mask < 1 << 20 {
        let g = Hypergraph3::from_edges(
            6,
            (0..20).filter(|i| mask >> i & 1 == 1).map(|i| triple_unrank(TripleId(i), 6).unwrap()),
        )
        .unwrap();
        classes.insert(g.canonical_form().unwrap().into_graph());
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    let mut visited = HashSet::new();
    let count = enumerate_graphs(6, 10, |g| {
        visited.insert(g.clone());
    })
    .unwrap();
    assert_eq!(count as usize, classes.len());
    assert_eq!(visited, classes);
}
