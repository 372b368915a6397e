//! Isomorphism classes of 3-graphs on at most 7 vertices by canonical
//! augmentation.
//!
//! Classes are stored as canonical edge masks (35 triples fit in a `u64`).
//! A child `P + t` of the class `P` is kept iff `t` is the canonical deletion
//! of the child: among the child's edges with the largest invariant
//! (vertex degree sum, pair codegree sum), the one whose canonical image has
//! the highest rank. Acceptance is tested up to automorphism by comparing
//! `canon(child - c*)` with `P`. Accepted children of one parent are
//! deduplicated by canonical mask.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::canon::canonize_words;
use crate::error::{capability, invalid, Result};
use crate::graph::Hypergraph3;
use crate::triple::{rank_any, triple_count, unrank3};

/// Largest vertex count the exhaustive enumerator accepts.
pub const ENUM_MAX_N: usize = 7;

/// Levels below this depth fan out across the thread pool.
const PAR_DEPTH: usize = 5;

/// One isomorphism class, as a canonical edge mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GraphClass {
    n: usize,
    mask: u64,
}

impl GraphClass {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Bit `i` is set iff the triple of colex rank `i` is an edge.
    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn edge_count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn to_graph(&self) -> Hypergraph3 {
        Hypergraph3::from_words(self.n, vec![self.mask])
    }
}

pub(crate) fn check_enum_n(n: usize) -> Result<()> {
    if n > ENUM_MAX_N {
        return capability(format!("exhaustive enumeration supports n <= {ENUM_MAX_N}, got n = {n}"));
    }
    Ok(())
}

/// Per-triple data for a fixed `n`.
struct Tables {
    n: usize,
    total: usize,
    verts: [[usize; 3]; 35],
    pairs: [[usize; 3]; 35],
}

impl Tables {
    fn new(n: usize) -> Self {
        let mut verts = [[0; 3]; 35];
        let mut pairs = [[0; 3]; 35];
        let total = triple_count(n);
        for t in 0..total {
            let (a, b, c) = unrank3(t);
            verts[t] = [a, b, c];
            pairs[t] = [a * 7 + b, a * 7 + c, b * 7 + c];
        }
        Tables { n, total, verts, pairs }
    }

    fn canon(&self, mask: u64) -> (u64, [u8; 12]) {
        let r = canonize_words(self.n, &[mask]);
        (r.bits[0], r.perm)
    }

    /// Canonical children of the class `parent`.
    fn children(&self, parent: u64, out: &mut Vec<u64>) {
        out.clear();
        let mut deg = [0u32; 7];
        let mut codeg = [0u32; 49];
        let mut m = parent;
        while m != 0 {
            let t = m.trailing_zeros() as usize;
            m &= m - 1;
            for &v in &self.verts[t] {
                deg[v] += 1;
            }
            for &p in &self.pairs[t] {
                codeg[p] += 1;
            }
        }
        for t in 0..self.total {
            if parent >> t & 1 == 1 {
                continue;
            }
            let child = parent | 1 << t;
            for &v in &self.verts[t] {
                deg[v] += 1;
            }
            for &p in &self.pairs[t] {
                codeg[p] += 1;
            }
            let inv = |x: usize| -> u32 {
                let d: u32 = self.verts[x].iter().map(|&v| deg[v]).sum();
                let c: u32 = self.pairs[x].iter().map(|&p| codeg[p]).sum();
                d << 8 | c
            };
            let mine = inv(t);
            let mut best = 0;
            let mut ties = 0u64;
            let mut cm = child;
            while cm != 0 {
                let x = cm.trailing_zeros() as usize;
                cm &= cm - 1;
                let v = inv(x);
                if v > best {
                    best = v;
                    ties = 0;
                }
                if v == best {
                    ties |= 1 << x;
                }
            }
            for &v in &self.verts[t] {
                deg[v] -= 1;
            }
            for &p in &self.pairs[t] {
                codeg[p] -= 1;
            }
            if mine < best {
                continue;
            }
            let (cbits, perm) = if ties.count_ones() == 1 { (0, [0; 12]) } else { self.canon(child) };
            if ties.count_ones() > 1 {
                let image = |x: usize| {
                    let [a, b, c] = self.verts[x];
                    rank_any(perm[a] as usize, perm[b] as usize, perm[c] as usize)
                };
                let mut tm = ties;
                let mut star = t;
                let mut star_img = image(t);
                while tm != 0 {
                    let x = tm.trailing_zeros() as usize;
                    tm &= tm - 1;
                    let img = image(x);
                    if img > star_img {
                        star = x;
                        star_img = img;
                    }
                }
                if star != t && self.canon(child & !(1 << star)).0 != parent {
                    continue;
                }
            }
            let cbits = if ties.count_ones() == 1 { self.canon(child).0 } else { cbits };
            if !out.contains(&cbits) {
                out.push(cbits);
            }
        }
    }
}

/// Visits every class on `n` vertices with at most `max_edges` edges,
/// folding into per-worker accumulators that are then merged. `merge` must be
/// associative and commutative for the result to be schedule independent.
/// Returns `None` if `visit` broke off the walk.
pub fn enumerate_classes<A, I, V, M>(n: usize, max_edges: usize, init: I, visit: V, merge: M) -> Result<Option<A>>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, GraphClass) -> ControlFlow<()> + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    check_enum_n(n)?;
    let tables = Tables::new(n);
    let max_edges = max_edges.min(tables.total);
    let stop = AtomicBool::new(false);
    let walker = Walker { tables: &tables, max_edges, stop: &stop, visit: &visit, init: &init, merge: &merge };
    let acc = walker.subtree(0, 0);
    Ok(if stop.load(Ordering::Relaxed) { None } else { Some(acc) })
}

struct Walker<'a, I, V, M> {
    tables: &'a Tables,
    max_edges: usize,
    stop: &'a AtomicBool,
    init: &'a I,
    visit: &'a V,
    merge: &'a M,
}

impl<A, I, V, M> Walker<'_, I, V, M>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, GraphClass) -> ControlFlow<()> + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    fn subtree(&self, root: u64, level: usize) -> A {
        let mut acc = (self.init)();
        if level < PAR_DEPTH {
            if self.visit_one(&mut acc, root) && level < self.max_edges {
                let mut kids = Vec::new();
                self.tables.children(root, &mut kids);
                let sub = kids
                    .into_par_iter()
                    .map(|k| self.subtree(k, level + 1))
                    .reduce(self.init, |a, b| (self.merge)(a, b));
                acc = (self.merge)(acc, sub);
            }
        } else {
            let mut bufs = Vec::new();
            self.dfs(&mut acc, root, level, &mut bufs);
        }
        acc
    }

    fn visit_one(&self, acc: &mut A, mask: u64) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        let class = GraphClass { n: self.tables.n, mask };
        if (self.visit)(acc, class).is_break() {
            self.stop.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn dfs(&self, acc: &mut A, mask: u64, level: usize, bufs: &mut Vec<Vec<u64>>) {
        if !self.visit_one(acc, mask) || level >= self.max_edges {
            return;
        }
        let mut kids = bufs.pop().unwrap_or_default();
        self.tables.children(mask, &mut kids);
        for &k in &kids {
            self.dfs(acc, k, level + 1, bufs);
        }
        bufs.push(kids);
    }
}

/// Calls `visitor` once per isomorphism class of `n`-vertex 3-graphs with
/// exactly `e` edges; returns the number of classes.
pub fn enumerate_graphs(n: usize, e: usize, mut visitor: impl FnMut(&Hypergraph3)) -> Result<u64> {
    check_enum_n(n)?;
    if e > triple_count(n) {
        return invalid(format!("e = {e} exceeds C({n},3)"));
    }
    let mut classes: Vec<u64> = enumerate_classes(
        n,
        e,
        Vec::new,
        |acc: &mut Vec<u64>, c| {
            if c.edge_count() == e {
                acc.push(c.mask());
            }
            ControlFlow::Continue(())
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?
    .expect("visitor never breaks");
    classes.sort_unstable();
    for &m in &classes {
        visitor(&Hypergraph3::from_words(n, vec![m]));
    }
    Ok(classes.len() as u64)
}

/// Number of classes with each edge count `0..=C(n,3)`.
pub fn class_counts(n: usize) -> Result<Vec<u64>> {
    let total = triple_count(n);
    let counts = enumerate_classes(
        n,
        total,
        || vec![0u64; total + 1],
        |acc: &mut Vec<u64>, c| {
            acc[c.edge_count()] += 1;
            ControlFlow::Continue(())
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    )?
    .expect("visitor never breaks");
    Ok(counts)
}

/// Shared counter for budgeted walks.
pub(crate) struct Budget {
    pub limit: u64,
    pub spent: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, spent: AtomicU64::new(0) }
    }

    /// Charges one unit; `false` once the limit is exceeded.
    pub fn charge(&self) -> bool {
        self.spent.fetch_add(1, Ordering::Relaxed) < self.limit
    }

    pub fn spent(&self) -> u64 {
        self.spent.load(Ordering::Relaxed).min(self.limit)
    }
}
