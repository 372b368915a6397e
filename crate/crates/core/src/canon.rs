//! Canonical labeling of small 3-graphs.
//!
//! Individualization-refinement: vertex colors are refined by hashing, for
//! each vertex, the multiset of color pairs completing it to an edge; a
//! non-discrete partition is split by individualizing each vertex of its
//! smallest cell in turn. Every discrete leaf induces a relabeled edge bitset
//! and the canonical form is the largest one. When a leaf reproduces the
//! current best, the automorphism it witnesses maps the current subtree onto
//! an already explored one, so the subtree is abandoned.

use std::hash::{Hash, Hasher};

use crate::error::{capability, Result};
use crate::graph::Hypergraph3;
use crate::triple::{rank_any, unrank3};

/// Largest vertex count accepted by the canonical labeler.
pub const CANON_MAX_N: usize = 12;

const MAX_EDGES: usize = 220; // C(12, 3)
const MAX_INC: usize = 55; // C(11, 2)

pub(crate) type Bits = [u64; 4];

/// Canonical representative of an isomorphism class plus the relabeling
/// that produces it.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    graph: Hypergraph3,
    perm: Vec<usize>,
}

impl CanonicalForm {
    /// The canonically labeled graph.
    pub fn graph(&self) -> &Hypergraph3 {
        &self.graph
    }

    /// `certificate()[v]` is the canonical label of input vertex `v`.
    pub fn certificate(&self) -> &[usize] {
        &self.perm
    }

    pub fn into_graph(self) -> Hypergraph3 {
        self.graph
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph
    }
}

impl Eq for CanonicalForm {}

impl Hash for CanonicalForm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.graph.hash(state);
    }
}

impl Hypergraph3 {
    /// Canonical form; equal for two graphs iff they are isomorphic.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        let n = self.n();
        if n > CANON_MAX_N {
            return capability(format!(
                "canonical labeling supports n <= {CANON_MAX_N}, got n = {n}"
            ));
        }
        let res = canonize_words(n, self.words());
        let words = res.bits[..self.words().len()].to_vec();
        Ok(CanonicalForm {
            graph: Hypergraph3::from_words(n, words),
            perm: res.perm[..n].iter().map(|&p| p as usize).collect(),
        })
    }

    pub fn is_isomorphic(&self, other: &Hypergraph3) -> Result<bool> {
        if self.n() != other.n() || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct CanonResult {
    pub bits: Bits,
    pub perm: [u8; CANON_MAX_N],
}

/// Canonizes the graph with the given edge bitset. Requires `n <= 12`.
pub(crate) fn canonize_words(n: usize, words: &[u64]) -> CanonResult {
    let mut c = Canonizer::new(n);
    for (wi, &w) in words.iter().enumerate() {
        let mut w = w;
        while w != 0 {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            let (x, y, z) = unrank3(wi * 64 + b);
            c.add_edge(x, y, z);
        }
    }
    c.run()
}

struct Canonizer {
    n: usize,
    edges: [[u8; 3]; MAX_EDGES],
    edge_len: usize,
    inc: [[(u8, u8); MAX_INC]; CANON_MAX_N],
    inc_len: [u8; CANON_MAX_N],
    best: Option<Bits>,
    best_perm: [u8; CANON_MAX_N],
    best_path: [u8; CANON_MAX_N],
    path: [u8; CANON_MAX_N],
    // Unwind target after an automorphism is detected.
    abort_to: usize,
}

#[inline]
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl Canonizer {
    fn new(n: usize) -> Self {
        debug_assert!(n <= CANON_MAX_N);
        Canonizer {
            n,
            edges: [[0; 3]; MAX_EDGES],
            edge_len: 0,
            inc: [[(0, 0); MAX_INC]; CANON_MAX_N],
            inc_len: [0; CANON_MAX_N],
            best: None,
            best_perm: [0; CANON_MAX_N],
            best_path: [0; CANON_MAX_N],
            path: [0; CANON_MAX_N],
            abort_to: usize::MAX,
        }
    }

    fn add_edge(&mut self, a: usize, b: usize, c: usize) {
        let (a, b, c) = (a as u8, b as u8, c as u8);
        self.edges[self.edge_len] = [a, b, c];
        self.edge_len += 1;
        for (v, p) in [(a, (b, c)), (b, (a, c)), (c, (a, b))] {
            let v = v as usize;
            self.inc[v][self.inc_len[v] as usize] = p;
            self.inc_len[v] += 1;
        }
    }

    fn run(mut self) -> CanonResult {
        let mut color = [0u8; CANON_MAX_N];
        self.search(&mut color, 0);
        CanonResult { bits: self.best.unwrap_or([0; 4]), perm: self.best_perm }
    }

    /// Refines position-based colors to a stable partition; returns the
    /// number of cells.
    fn refine(&self, color: &mut [u8; CANON_MAX_N]) -> usize {
        let n = self.n;
        let mut cells = count_cells(color, n);
        loop {
            let mut sig = [0u64; CANON_MAX_N];
            for v in 0..n {
                let mut h = 0u64;
                for &(y, z) in &self.inc[v][..self.inc_len[v] as usize] {
                    let (p, q) = (color[y as usize], color[z as usize]);
                    let key = if p < q { (p as u64) << 8 | q as u64 } else { (q as u64) << 8 | p as u64 };
                    h = h.wrapping_add(mix(key));
                }
                sig[v] = (color[v] as u64) << 56 | (h >> 8);
            }
            let mut next = [0u8; CANON_MAX_N];
            for v in 0..n {
                next[v] = sig[..n].iter().filter(|&&s| s < sig[v]).count() as u8;
            }
            let next_cells = count_cells(&next, n);
            *color = next;
            if next_cells == cells {
                return cells;
            }
            cells = next_cells;
        }
    }

    fn search(&mut self, color: &mut [u8; CANON_MAX_N], depth: usize) {
        let n = self.n;
        if self.refine(color) == n {
            self.leaf(color, depth);
            return;
        }
        // Target: smallest non-singleton cell, ties broken by position.
        let mut size = [0u8; CANON_MAX_N];
        for v in 0..n {
            size[color[v] as usize] += 1;
        }
        let target = (0..n)
            .filter(|&c| size[c] > 1)
            .min_by_key(|&c| (size[c], c))
            .expect("non-discrete partition has a non-singleton cell") as u8;
        for v in 0..n {
            if color[v] != target {
                continue;
            }
            let mut child = *color;
            for u in 0..n {
                if u != v && color[u] == target {
                    child[u] = target + 1;
                }
            }
            self.path[depth] = v as u8;
            self.search(&mut child, depth + 1);
            if self.abort_to < depth {
                return;
            }
            if self.abort_to == depth {
                self.abort_to = usize::MAX;
            }
        }
    }

    fn leaf(&mut self, color: &[u8; CANON_MAX_N], depth: usize) {
        let mut bits = [0u64; 4];
        for e in &self.edges[..self.edge_len] {
            let id = rank_any(color[e[0] as usize] as usize, color[e[1] as usize] as usize, color[e[2] as usize] as usize);
            bits[id / 64] |= 1 << (id % 64);
        }
        match self.best.map(|b| cmp_bits(&bits, &b)) {
            None | Some(std::cmp::Ordering::Greater) => {
                self.best = Some(bits);
                self.best_perm = *color;
                self.best_path = self.path;
            }
            Some(std::cmp::Ordering::Equal) => {
                // Automorphism: abandon back to where this path left the best one.
                if let Some(d) = (0..depth).find(|&d| self.path[d] != self.best_path[d]) {
                    self.abort_to = d;
                }
            }
            Some(std::cmp::Ordering::Less) => {}
        }
    }
}

fn count_cells(color: &[u8; CANON_MAX_N], n: usize) -> usize {
    let mut seen = 0u16;
    for &c in &color[..n] {
        seen |= 1 << c;
    }
    seen.count_ones() as usize
}

#[inline]
fn cmp_bits(a: &Bits, b: &Bits) -> std::cmp::Ordering {
    a.iter().rev().cmp(b.iter().rev())
}
