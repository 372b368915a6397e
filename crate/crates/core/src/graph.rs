use std::fmt;

use crate::error::{invalid, Result};
use crate::link::LinkGraph;
use crate::triple::{rank3, rank_any, sort3, triple_count, unrank3, TripleId};

/// A 3-uniform hypergraph on vertices `0..n`, stored as a dense bitset over
/// colex-ranked triples. Values are immutable once built; use
/// [`Hypergraph3Builder`] to assemble one edge at a time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph3 {
    n: usize,
    words: Vec<u64>,
    edge_count: usize,
}

#[inline]
fn word_len(n: usize) -> usize {
    triple_count(n).div_ceil(64)
}

impl Hypergraph3 {
    pub fn empty(n: usize) -> Self {
        Hypergraph3 { n, words: vec![0; word_len(n)], edge_count: 0 }
    }

    pub fn complete(n: usize) -> Self {
        Self::empty(n).complement()
    }

    /// Builds the graph whose edges are the sorted triples `a < b < c`
    /// accepted by `is_edge`.
    pub fn from_fn(n: usize, mut is_edge: impl FnMut(usize, usize, usize) -> bool) -> Self {
        let mut words = vec![0u64; word_len(n)];
        let mut id = 0usize;
        for c in 2..n {
            for b in 1..c {
                for a in 0..b {
                    if is_edge(a, b, c) {
                        words[id / 64] |= 1 << (id % 64);
                    }
                    id += 1;
                }
            }
        }
        Self::from_words(n, words)
    }

    /// Builds a graph from vertex triples in any order. Repeated triples are
    /// an error.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        let mut builder = Hypergraph3Builder::new(n);
        for (a, b, c) in edges {
            if !builder.insert(a, b, c)? {
                return invalid(format!("duplicate edge {{{a},{b},{c}}}"));
            }
        }
        Ok(builder.build())
    }

    pub(crate) fn from_words(n: usize, mut words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), word_len(n));
        let total = triple_count(n);
        if !total.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (total % 64)) - 1;
            }
        }
        let edge_count = words.iter().map(|w| w.count_ones() as usize).sum();
        Hypergraph3 { n, words, edge_count }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// `C(n, 3)`.
    #[inline]
    pub fn triple_count(&self) -> usize {
        triple_count(self.n)
    }

    /// The raw edge bitset; bit `i` is the triple of colex rank `i`.
    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn density(&self) -> f64 {
        if self.n < 3 {
            0.0
        } else {
            self.edge_count as f64 / self.triple_count() as f64
        }
    }

    #[inline]
    pub fn contains(&self, id: TripleId) -> bool {
        let i = id.0;
        i < self.triple_count() && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn contains_rank(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Whether `{x, y, z}` is an edge; vertex order is irrelevant.
    #[inline]
    pub fn has_edge(&self, x: usize, y: usize, z: usize) -> bool {
        let (a, b, c) = sort3(x, y, z);
        a < b && b < c && c < self.n && self.contains_rank(rank3(a, b, c))
    }

    /// Edge ids in ascending order.
    pub fn edge_ids(&self) -> impl Iterator<Item = TripleId> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            BitIter(w).map(move |b| TripleId(wi * 64 + b))
        })
    }

    /// Edges as sorted triples, in colex order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edge_ids().map(|t| unrank3(t.0))
    }

    pub fn complement(&self) -> Self {
        let words = self.words.iter().map(|w| !w).collect();
        Self::from_words(self.n, words)
    }

    fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.as_slice().last() {
            Some(&v) if v >= self.n => {
                invalid(format!("vertex {v} out of range for n = {}", self.n))
            }
            _ => Ok(()),
        }
    }

    /// `G[S]`, relabeled so that the `i`-th smallest member of `S` becomes `i`.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<Self> {
        self.check_set(set)?;
        let s = set.as_slice();
        Ok(Self::from_fn(s.len(), |a, b, c| self.contains_rank(rank3(s[a], s[b], s[c]))))
    }

    /// Number of edges with all three vertices in `S`.
    pub fn induced_edge_count(&self, set: &VertexSet) -> Result<usize> {
        self.check_set(set)?;
        let s = set.as_slice();
        let mut count = 0;
        for k in 2..s.len() {
            for j in 1..k {
                for i in 0..j {
                    count += usize::from(self.contains_rank(rank3(s[i], s[j], s[k])));
                }
            }
        }
        Ok(count)
    }

    /// `S` spans no edge. Sets with fewer than three vertices are trivially
    /// both independent and cliques.
    pub fn is_independent(&self, set: &VertexSet) -> Result<bool> {
        Ok(self.induced_edge_count(set)? == 0)
    }

    pub fn is_clique(&self, set: &VertexSet) -> Result<bool> {
        Ok(self.induced_edge_count(set)? == triple_count(set.len()))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for (a, b, c) in self.edges() {
            deg[a] += 1;
            deg[b] += 1;
            deg[c] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges().filter(|&(a, b, c)| a == v || b == v || c == v).count()
    }

    /// The link of `v`: pairs `{y, z}` with `{v, y, z}` an edge, on the
    /// remaining `n - 1` vertices relabeled in increasing order.
    pub fn link_graph(&self, v: usize) -> Result<LinkGraph> {
        if v >= self.n {
            return invalid(format!("vertex {v} out of range for n = {}", self.n));
        }
        let relabel = |u: usize| if u > v { u - 1 } else { u };
        let mut pairs = Vec::new();
        for z in 1..self.n {
            for y in 0..z {
                if y != v && z != v && self.has_edge(v, y, z) {
                    pairs.push((relabel(y), relabel(z)));
                }
            }
        }
        Ok(LinkGraph::new(self.n.saturating_sub(1), pairs))
    }

    /// The image of the graph under the vertex map `v -> perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return invalid(format!("permutation length {} != n = {}", perm.len(), self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return invalid("not a permutation");
            }
        }
        let mut words = vec![0u64; self.words.len()];
        for (a, b, c) in self.edges() {
            let id = rank_any(perm[a], perm[b], perm[c]);
            words[id / 64] |= 1 << (id % 64);
        }
        Ok(Self::from_words(self.n, words))
    }

    /// Edge-wise union of two graphs on the same vertex set.
    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return invalid(format!("vertex counts differ: {} vs {}", self.n, other.n));
        }
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        Ok(Self::from_words(self.n, words))
    }

    /// Whether every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &Self) -> bool {
        self.n == other.n && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn to_builder(&self) -> Hypergraph3Builder {
        Hypergraph3Builder { n: self.n, words: self.words.clone() }
    }

    /// Ordering by the bit sequence indexed by ascending triple id
    /// (`0 < 1` at the first differing position). Graphs on fewer vertices
    /// sort first.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n.cmp(&other.n).then_with(|| lex_cmp_words(&self.words, &other.words))
    }
}

pub(crate) fn lex_cmp_words(x: &[u64], y: &[u64]) -> std::cmp::Ordering {
    for (a, b) in x.iter().zip(y) {
        let diff = a ^ b;
        if diff != 0 {
            let low = diff.trailing_zeros();
            return if a >> low & 1 == 0 {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            };
        }
    }
    x.len().cmp(&y.len())
}

impl fmt::Debug for Hypergraph3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph3")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Iterator over the set bit positions of a word.
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// Mutable edge set used to assemble a [`Hypergraph3`].
#[derive(Clone, Debug)]
pub struct Hypergraph3Builder {
    n: usize,
    words: Vec<u64>,
}

impl Hypergraph3Builder {
    pub fn new(n: usize) -> Self {
        Hypergraph3Builder { n, words: vec![0; word_len(n)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn id(&self, x: usize, y: usize, z: usize) -> Result<usize> {
        let (a, b, c) = sort3(x, y, z);
        if !(a < b && b < c) {
            return invalid(format!("triple ({x},{y},{z}) has repeated vertices"));
        }
        if c >= self.n {
            return invalid(format!("vertex {c} out of range for n = {}", self.n));
        }
        Ok(rank3(a, b, c))
    }

    /// Adds `{x, y, z}`; returns `false` if it was already present.
    pub fn insert(&mut self, x: usize, y: usize, z: usize) -> Result<bool> {
        let id = self.id(x, y, z)?;
        Ok(self.insert_id(TripleId(id)))
    }

    /// Removes `{x, y, z}`; returns `false` if it was absent.
    pub fn remove(&mut self, x: usize, y: usize, z: usize) -> Result<bool> {
        let id = self.id(x, y, z)?;
        let (w, bit) = (id / 64, 1u64 << (id % 64));
        let had = self.words[w] & bit != 0;
        self.words[w] &= !bit;
        Ok(had)
    }

    pub(crate) fn insert_id(&mut self, id: TripleId) -> bool {
        let (w, bit) = (id.0 / 64, 1u64 << (id.0 % 64));
        let fresh = self.words[w] & bit == 0;
        self.words[w] |= bit;
        fresh
    }

    pub fn contains(&self, x: usize, y: usize, z: usize) -> bool {
        self.id(x, y, z).is_ok_and(|id| self.words[id / 64] >> (id % 64) & 1 == 1)
    }

    pub fn build(self) -> Hypergraph3 {
        Hypergraph3::from_words(self.n, self.words)
    }
}

/// A set of vertex labels, kept sorted and free of repeats.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(BitIter(mask).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter)
    }
}
