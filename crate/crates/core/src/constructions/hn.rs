use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::Hypergraph3;

use super::{check_materialize, SEED_H_EDGES};

/// Default minimum part size for recursing into a part of `H_n^it`.
pub const DEFAULT_CUTOFF: usize = 6;

/// Sizes of the six parts of `H_n`, indexed by the vertices of the seed graph.
///
/// The two parts on seed vertices 0 and 2 have `ceil(n / (3 sqrt 3))`
/// vertices, the parts on 1, 3 and 4 have `ceil(n (3 - sqrt 3) / 9)`, and
/// part 5 takes the remainder (about `n / (3 sqrt 3)`). The larger parts sit
/// on the three degree-5 vertices of the seed graph, which is the assignment
/// that attains the edge density `4 / (3 + 7 sqrt 3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PartSizes([usize; 6]);

impl PartSizes {
    pub fn sizes(&self) -> [usize; 6] {
        self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// First vertex of each part.
    pub fn offsets(&self) -> [usize; 6] {
        let mut off = [0; 6];
        for i in 1..6 {
            off[i] = off[i - 1] + self.0[i - 1];
        }
        off
    }
}

/// Smallest `a` with `27 a^2 >= n^2`, i.e. `ceil(n / (3 sqrt 3))`.
fn large_part(n: usize) -> usize {
    let n = n as u128;
    let mut a = (n as f64 / 27f64.sqrt()) as u128;
    while a > 0 && 27 * (a - 1) * (a - 1) >= n * n {
        a -= 1;
    }
    while 27 * a * a < n * n {
        a += 1;
    }
    a as usize
}

/// Smallest `b` with `9 b >= n (3 - sqrt 3)`, i.e. `ceil(n (3 - sqrt 3) / 9)`.
fn small_part(n: usize) -> usize {
    let n = n as u128;
    let ok = |b: u128| 9 * b >= 3 * n || (3 * n - 9 * b).pow(2) <= 3 * n * n;
    let mut b = (n as f64 * (3.0 - 3f64.sqrt()) / 9.0) as u128;
    while b > 0 && ok(b - 1) {
        b -= 1;
    }
    while !ok(b) {
        b += 1;
    }
    b as usize
}

pub fn part_sizes_hn(n: usize) -> Result<PartSizes> {
    if n < 6 {
        return invalid(format!("H_n needs n >= 6, got {n}"));
    }
    let (big, small) = (large_part(n), small_part(n));
    let used = 2 * big + 3 * small;
    if used > n {
        return invalid(format!(
            "n = {n}: the ceiled part sizes already total {used}, leaving no valid remainder part"
        ));
    }
    Ok(PartSizes([big, small, big, small, small, n - used]))
}

/// Whether `part_sizes_hn(n)` succeeds: 7, 10, 12 to 15, and every `n >= 17`.
pub fn is_hn_order(n: usize) -> bool {
    part_sizes_hn(n).is_ok()
}

/// The vertex partition of `H_n` or `H_n^it`, with nested layouts for the
/// parts that carry a copy of the construction themselves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HnLayout {
    n: usize,
    sizes: PartSizes,
    offsets: [usize; 6],
    children: Vec<Option<HnLayout>>,
}

impl HnLayout {
    /// Layout of `H_n` (no recursion).
    pub fn flat(n: usize) -> Result<Self> {
        Self::build(n, None)
    }

    /// Layout of `H_n^it`. A part is refined again when its size is at
    /// least `cutoff` and is itself an accepted order.
    pub fn iterated(n: usize, cutoff: usize) -> Result<Self> {
        if cutoff < 6 {
            return invalid(format!("cutoff must be at least 6, got {cutoff}"));
        }
        Self::build(n, Some(cutoff))
    }

    fn build(n: usize, cutoff: Option<usize>) -> Result<Self> {
        let sizes = part_sizes_hn(n)?;
        let children = sizes
            .sizes()
            .iter()
            .map(|&s| match cutoff {
                Some(c) if s >= c && is_hn_order(s) => Self::build(s, cutoff).ok(),
                _ => None,
            })
            .collect();
        Ok(HnLayout { n, sizes, offsets: sizes.offsets(), children })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn part_sizes(&self) -> PartSizes {
        self.sizes
    }

    pub fn child(&self, part: usize) -> Option<&HnLayout> {
        self.children.get(part).and_then(Option::as_ref)
    }

    /// Top-level part containing `v`.
    pub fn part_of(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        (1..6).rev().find(|&i| v >= self.offsets[i]).unwrap_or(0)
    }

    /// Edge test for `a < b < c < n`, without materializing the graph.
    pub fn is_edge(&self, a: usize, b: usize, c: usize) -> bool {
        let (pa, pb, pc) = (self.part_of(a), self.part_of(b), self.part_of(c));
        if pa != pb && pb != pc && pa != pc {
            let mut t = [pa, pb, pc];
            t.sort_unstable();
            return SEED_H_EDGES.contains(&(t[0], t[1], t[2]));
        }
        if pa == pb && pb == pc {
            if let Some(child) = self.child(pa) {
                let o = self.offsets[pa];
                return child.is_edge(a - o, b - o, c - o);
            }
        }
        false
    }

    /// Exact edge count by recursion over the layout.
    pub fn edge_count(&self) -> u128 {
        let s = self.sizes.sizes().map(|x| x as u128);
        let top: u128 = SEED_H_EDGES.iter().map(|&(i, j, k)| s[i] * s[j] * s[k]).sum();
        top + self.children.iter().flatten().map(HnLayout::edge_count).sum::<u128>()
    }

    pub fn materialize(&self) -> Result<Hypergraph3> {
        check_materialize(self.n)?;
        Ok(Hypergraph3::from_fn(self.n, |a, b, c| self.is_edge(a, b, c)))
    }
}

/// `|E(H_n)| = sum over seed edges ijk of |A_i| |A_j| |A_k|`.
pub fn hn_edge_count(n: usize) -> Result<u128> {
    Ok(HnLayout::flat(n)?.edge_count())
}

pub fn hn_iterated_edge_count(n: usize, cutoff: usize) -> Result<u128> {
    Ok(HnLayout::iterated(n, cutoff)?.edge_count())
}

pub fn construct_hn(n: usize) -> Result<Hypergraph3> {
    HnLayout::flat(n)?.materialize()
}

pub fn construct_hn_iterated(n: usize, cutoff: usize) -> Result<Hypergraph3> {
    HnLayout::iterated(n, cutoff)?.materialize()
}
