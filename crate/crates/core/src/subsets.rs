//! Exhaustive scans over the `m`-subsets of a graph on at most 64 vertices.
//!
//! Edge counts are maintained incrementally: when `v` joins a set `T`, it
//! contributes `sum_{a in T} |pair(a, v) & T| / 2` new edges, where
//! `pair(a, v)` is the bitmask of vertices completing `{a, v}` to an edge.

use std::ops::ControlFlow;

use crate::binom::choose;
use crate::error::{capability, Result};
use crate::graph::Hypergraph3;

/// Largest vertex count the subset scanners accept.
pub const SCAN_MAX_N: usize = 64;

/// Default ceiling on the number of subsets a single scan may visit.
pub const DEFAULT_SCAN_BUDGET: u128 = 10_000_000_000;

/// `pair(a, b)` masks for a graph on at most 64 vertices.
#[derive(Clone, Debug)]
pub(crate) struct PairTable {
    n: usize,
    masks: Vec<u64>,
}

impl PairTable {
    pub fn new(g: &Hypergraph3) -> Result<Self> {
        let n = g.n();
        if n > SCAN_MAX_N {
            return capability(format!("subset scans support n <= {SCAN_MAX_N}, got n = {n}"));
        }
        let mut masks = vec![0u64; n * n];
        for (a, b, c) in g.edges() {
            masks[a * n + b] |= 1 << c;
            masks[b * n + a] |= 1 << c;
            masks[a * n + c] |= 1 << b;
            masks[c * n + a] |= 1 << b;
            masks[b * n + c] |= 1 << a;
            masks[c * n + b] |= 1 << a;
        }
        Ok(PairTable { n, masks })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Toggles the triple `{a, b, c}`.
    pub fn toggle(&mut self, a: usize, b: usize, c: usize) {
        let n = self.n;
        self.masks[a * n + b] ^= 1 << c;
        self.masks[b * n + a] ^= 1 << c;
        self.masks[a * n + c] ^= 1 << b;
        self.masks[c * n + a] ^= 1 << b;
        self.masks[b * n + c] ^= 1 << a;
        self.masks[c * n + b] ^= 1 << a;
    }

    /// Edges added by `v` joining the vertex set `members` (bitmask `mask`).
    #[inline]
    pub fn gain(&self, members: &[usize], mask: u64, v: usize) -> u32 {
        let row = &self.masks[v * self.n..(v + 1) * self.n];
        let twice: u32 = members.iter().map(|&a| (row[a] & mask).count_ones()).sum();
        twice / 2
    }

    /// Edge count of a vertex set given as a bitmask.
    #[cfg(test)]
    pub fn count_mask(&self, mask: u64) -> u32 {
        let mut members = [0usize; SCAN_MAX_N];
        let mut len = 0;
        let mut acc = 0u64;
        let mut total = 0;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            total += self.gain(&members[..len], acc, v);
            members[len] = v;
            len += 1;
            acc |= 1 << v;
        }
        total
    }
}

/// Checks `C(n, m)` against `budget`; returns the subset count.
pub(crate) fn check_budget(n: usize, m: usize, budget: u128) -> Result<u128> {
    match choose(n as u64, m as u64) {
        Some(total) if total <= budget => Ok(total),
        Some(total) => capability(format!("C({n},{m}) = {total} subsets exceeds budget {budget}")),
        None => capability(format!("C({n},{m}) overflows the scan budget")),
    }
}

/// Visits, in lexicographic order, every `m`-subset whose smallest element
/// lies in `first`, passing the sorted members and the induced edge count.
pub(crate) fn scan_subsets<F>(
    t: &PairTable,
    m: usize,
    first: std::ops::Range<usize>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize], u32) -> ControlFlow<()>,
{
    let mut chosen = [0usize; SCAN_MAX_N];
    if m == 0 {
        return if first.start == 0 { visit(&[], 0) } else { ControlFlow::Continue(()) };
    }
    if m > t.n {
        return ControlFlow::Continue(());
    }
    let hi = first.end.min(t.n - m + 1);
    for v in first.start..hi {
        chosen[0] = v;
        rec(t, m, v + 1, &mut chosen, 1, 1 << v, 0, 0, visit)?;
    }
    ControlFlow::Continue(())
}

/// Visits every `m`-superset of `base` (members disjoint from `base` chosen
/// in lexicographic order). The slice passed to `visit` lists `base` first.
pub(crate) fn scan_supersets<F>(t: &PairTable, m: usize, base: &[usize], visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize], u32) -> ControlFlow<()>,
{
    if base.len() > m || m > t.n {
        return ControlFlow::Continue(());
    }
    let mut chosen = [0usize; SCAN_MAX_N];
    let mut mask = 0u64;
    let mut count = 0;
    for (i, &v) in base.iter().enumerate() {
        count += t.gain(&chosen[..i], mask, v);
        chosen[i] = v;
        mask |= 1 << v;
    }
    rec(t, m, 0, &mut chosen, base.len(), mask, mask, count, visit)
}

#[allow(clippy::too_many_arguments)]
fn rec<F>(
    t: &PairTable,
    m: usize,
    start: usize,
    chosen: &mut [usize; SCAN_MAX_N],
    depth: usize,
    mask: u64,
    skip: u64,
    count: u32,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize], u32) -> ControlFlow<()>,
{
    if depth == m {
        return visit(&chosen[..m], count);
    }
    let remaining = m - depth;
    for v in start..t.n {
        if skip >> v & 1 == 1 {
            continue;
        }
        if t.n - v - skip_count_above(skip, v) < remaining {
            break;
        }
        let gain = t.gain(&chosen[..depth], mask, v);
        chosen[depth] = v;
        rec(t, m, v + 1, chosen, depth + 1, mask | 1 << v, skip, count + gain, visit)?;
    }
    ControlFlow::Continue(())
}

/// Skipped vertices at or above `v`.
#[inline]
fn skip_count_above(skip: u64, v: usize) -> usize {
    if v >= 64 {
        0
    } else {
        (skip >> v).count_ones() as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn brute_subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
        (0u64..1 << n)
            .filter(|s| s.count_ones() as usize == m)
            .map(|s| VertexSet::from_mask(s).as_slice().to_vec())
            .collect()
    }

    #[test]
    fn scan_matches_direct_counts_in_lex_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let g = Hypergraph3::from_fn(9, |_, _, _| rng.gen_bool(0.4));
        let t = PairTable::new(&g).unwrap();
        for m in 0..=9 {
            let mut seen = Vec::new();
            let _ = scan_subsets(&t, m, 0..9, &mut |s, c| {
                let vs = VertexSet::new(s.iter().copied());
                assert_eq!(c as usize, g.induced_edge_count(&vs).unwrap());
                seen.push(s.to_vec());
                ControlFlow::Continue(())
            });
            let mut expected = brute_subsets(9, m);
            expected.sort();
            assert_eq!(seen, expected, "m = {m}");
        }
    }

    #[test]
    fn supersets_cover_exactly_the_extensions() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let g = Hypergraph3::from_fn(10, |_, _, _| rng.gen_bool(0.5));
        let t = PairTable::new(&g).unwrap();
        let base = [2, 5, 7];
        let mut seen = 0;
        let _ = scan_supersets(&t, 6, &base, &mut |s, c| {
            assert!(base.iter().all(|b| s.contains(b)));
            let vs = VertexSet::new(s.iter().copied());
            assert_eq!(vs.len(), 6);
            assert_eq!(c as usize, g.induced_edge_count(&vs).unwrap());
            seen += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(seen, 35); // C(7, 3)
    }

    #[test]
    fn count_mask_agrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = Hypergraph3::from_fn(12, |_, _, _| rng.gen_bool(0.3));
        let t = PairTable::new(&g).unwrap();
        for _ in 0..50 {
            let mask: u64 = rng.gen::<u64>() & 0xfff;
            let vs = VertexSet::from_mask(mask);
            assert_eq!(t.count_mask(mask) as usize, g.induced_edge_count(&vs).unwrap());
        }
    }
}
