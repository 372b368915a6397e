use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonize_words;
use crate::error::{invalid, Result};
use crate::graph::{Hypergraph3, Hypergraph3Builder};
use crate::subsets::{scan_subsets, scan_supersets, PairTable, SCAN_MAX_N};
use crate::triple::{triple_count, unrank3, TripleId};

use super::enumerate::{check_enum_n, enumerate_classes, Budget, GraphClass};
use super::{induced_pair_witness, OrderSizePair};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ArrowVerdict {
    Forced { graphs_examined: u64 },
    /// A graph with the requested order and size and no induced `(m, f)`.
    NotForced { counterexample: Hypergraph3 },
    Unknown { budget_spent: u64 },
}

impl ArrowVerdict {
    pub fn is_forced(&self) -> bool {
        matches!(self, ArrowVerdict::Forced { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, ArrowVerdict::Unknown { .. })
    }

    pub fn counterexample(&self) -> Option<&Hypergraph3> {
        match self {
            ArrowVerdict::NotForced { counterexample } => Some(counterexample),
            _ => None,
        }
    }
}

/// Edge masks of the `m`-subsets of `{0..n}` for `n <= 7`.
struct SubsetMasks(Vec<u64>);

impl SubsetMasks {
    fn new(n: usize, m: usize) -> Self {
        let v = (0u32..1 << n)
            .filter(|s| s.count_ones() as usize == m)
            .map(|s| {
                let mut mask = 0u64;
                for t in 0..triple_count(n) {
                    let (a, b, c) = unrank3(t);
                    if s >> a & s >> b & s >> c & 1 == 1 {
                        mask |= 1 << t;
                    }
                }
                mask
            })
            .collect();
        SubsetMasks(v)
    }

    fn has_witness(&self, g: u64, f: u128) -> bool {
        self.0.iter().any(|&s| u128::from((g & s).count_ones()) == f)
    }
}

/// `a` precedes `b` when the lowest differing triple is absent from `a`.
fn lex_less(a: u64, b: u64) -> bool {
    let d = a ^ b;
    d != 0 && a & d & d.wrapping_neg() == 0
}

fn keep_least(slot: &mut Option<u64>, cand: u64) {
    if slot.is_none_or(|cur| lex_less(cand, cur)) {
        *slot = Some(cand);
    }
}

fn full_mask(n: usize) -> u64 {
    let t = triple_count(n);
    if t == 64 {
        u64::MAX
    } else {
        (1u64 << t) - 1
    }
}

fn check_pair(n: usize, e: usize, pair: OrderSizePair) -> Result<()> {
    if pair.m > n {
        return invalid(format!("m = {} exceeds n = {n}", pair.m));
    }
    if e > triple_count(n) {
        return invalid(format!("e = {e} exceeds C({n},3)"));
    }
    Ok(())
}

fn verified(g: Hypergraph3, n: usize, e: usize, pair: OrderSizePair) -> Result<ArrowVerdict> {
    assert_eq!((g.n(), g.edge_count()), (n, e), "counterexample has the wrong order or size");
    assert!(induced_pair_witness(&g, pair)?.is_none(), "counterexample contains the pair");
    Ok(ArrowVerdict::NotForced { counterexample: g })
}

/// Decides `(n, e) -> (m, f)` by enumerating every isomorphism class.
/// `budget` caps the number of classes visited across all levels of the
/// augmentation tree. Edge counts above `C(n,3)/2` are decided on the
/// complements with the pair `(m, C(m,3) - f)`.
///
/// A counterexample is the lexicographically least canonical form among all
/// counterexamples.
pub fn arrow_exhaustive(n: usize, e: usize, pair: OrderSizePair, budget: u64) -> Result<ArrowVerdict> {
    check_enum_n(n)?;
    check_pair(n, e, pair)?;
    let total = triple_count(n);
    let flip = 2 * e > total;
    let (level, target) = if flip { (total - e, pair.complement()) } else { (e, pair) };
    let masks = SubsetMasks::new(n, pair.m);
    let budget = Budget::new(budget);
    let full = full_mask(n);
    let found = enumerate_classes(
        n,
        level,
        || (0u64, None::<u64>),
        |acc: &mut (u64, Option<u64>), c: GraphClass| {
            if !budget.charge() {
                return ControlFlow::Break(());
            }
            if c.edge_count() == level {
                acc.0 += 1;
                if !masks.has_witness(c.mask(), target.f) {
                    let g = if flip { canonize_words(n, &[!c.mask() & full]).bits[0] } else { c.mask() };
                    keep_least(&mut acc.1, g);
                }
            }
            ControlFlow::Continue(())
        },
        |a, b| {
            let mut least = a.1;
            if let Some(x) = b.1 {
                keep_least(&mut least, x);
            }
            (a.0 + b.0, least)
        },
    )?;
    match found {
        None => Ok(ArrowVerdict::Unknown { budget_spent: budget.spent() }),
        Some((_, Some(mask))) => verified(Hypergraph3::from_words(n, vec![mask]), n, e, pair),
        Some((examined, None)) => Ok(ArrowVerdict::Forced { graphs_examined: examined }),
    }
}

/// Per-edge-count outcome of an exhaustive scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelOutcome {
    pub e: usize,
    pub classes: u64,
    /// Classes with no induced `(m, f)`.
    pub counterexamples: u64,
    pub least_counterexample: Option<Hypergraph3>,
}

impl LevelOutcome {
    pub fn forced(&self) -> bool {
        self.counterexamples == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ForcedScan {
    pub n: usize,
    pub pair: OrderSizePair,
    pub levels: Vec<LevelOutcome>,
    /// Edge counts `e` with `(n, e) -> (m, f)`.
    pub forced: Vec<usize>,
    /// `|forced| / C(n,3)`, a finite-`n` proxy only.
    pub ratio: f64,
    pub classes_visited: u64,
}

/// Every edge count at once: one walk over all classes on `n <= 7` vertices,
/// with no complement shortcut.
pub fn scan_forced_set(n: usize, pair: OrderSizePair) -> Result<ForcedScan> {
    check_enum_n(n)?;
    check_pair(n, 0, pair)?;
    let total = triple_count(n);
    let masks = SubsetMasks::new(n, pair.m);
    type Acc = Vec<(u64, u64, Option<u64>)>;
    let acc: Acc = enumerate_classes(
        n,
        total,
        || vec![(0, 0, None); total + 1],
        |acc: &mut Acc, c| {
            let slot = &mut acc[c.edge_count()];
            slot.0 += 1;
            if !masks.has_witness(c.mask(), pair.f) {
                slot.1 += 1;
                keep_least(&mut slot.2, c.mask());
            }
            ControlFlow::Continue(())
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                x.0 += y.0;
                x.1 += y.1;
                if let Some(m) = y.2 {
                    keep_least(&mut x.2, m);
                }
            }
            a
        },
    )?
    .expect("visitor never breaks");
    let mut levels = Vec::with_capacity(total + 1);
    for (e, (classes, bad, least)) in acc.into_iter().enumerate() {
        let least_counterexample = match least {
            Some(mask) => {
                let g = Hypergraph3::from_words(n, vec![mask]);
                verified(g.clone(), n, e, pair)?;
                Some(g)
            }
            None => None,
        };
        levels.push(LevelOutcome { e, classes, counterexamples: bad, least_counterexample });
    }
    let forced: Vec<usize> = levels.iter().filter(|l| l.forced()).map(|l| l.e).collect();
    Ok(ForcedScan {
        n,
        pair,
        ratio: forced.len() as f64 / total.max(1) as f64,
        classes_visited: levels.iter().map(|l| l.classes).sum(),
        forced,
        levels,
    })
}

/// Number of `m`-supersets of `base` inducing exactly `f` edges, excluding
/// those that contain every vertex of `skip`.
fn hits_through(t: &PairTable, m: usize, f: u128, base: [usize; 3], skip: Option<[usize; 3]>) -> i64 {
    let mut hits = 0;
    let _ = scan_supersets(t, m, &base, &mut |set, count| {
        let excluded = skip.is_some_and(|s| s.iter().all(|v| set.contains(v)));
        if !excluded && u128::from(count) == f {
            hits += 1;
        }
        ControlFlow::Continue(())
    });
    hits
}

fn count_hits(t: &PairTable, m: usize, f: u128) -> i64 {
    let mut hits = 0;
    let _ = scan_subsets(t, m, 0..t.n(), &mut |_, count| {
        if u128::from(count) == f {
            hits += 1;
        }
        ControlFlow::Continue(())
    });
    hits
}

/// Random graph with `e` edges, or `start` adjusted to `e` edges by deleting
/// or adding random triples.
fn initial_graph(n: usize, e: usize, start: Option<&Hypergraph3>, rng: &mut ChaCha8Rng) -> Vec<bool> {
    let total = triple_count(n);
    let mut on = vec![false; total];
    if let Some(g) = start {
        for TripleId(t) in g.edge_ids() {
            on[t] = true;
        }
    }
    let have = on.iter().filter(|&&b| b).count();
    let (pick, flip_to) = if have > e { (true, false) } else { (false, true) };
    let mut cand: Vec<usize> = (0..total).filter(|&t| on[t] == pick).collect();
    cand.shuffle(rng);
    for &t in cand.iter().take(have.abs_diff(e)) {
        on[t] = flip_to;
    }
    on
}

/// One hill-climbing run of `moves` proposed swaps; returns a graph with no
/// induced `(m, f)` if it reaches one.
fn climb(n: usize, e: usize, pair: OrderSizePair, start: Option<&Hypergraph3>, moves: u64, seed: u64) -> Option<Hypergraph3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = triple_count(n);
    let on = initial_graph(n, e, start, &mut rng);
    let mut edges: Vec<usize> = (0..total).filter(|&t| on[t]).collect();
    let mut holes: Vec<usize> = (0..total).filter(|&t| !on[t]).collect();
    let build = |edges: &[usize]| {
        let mut b = Hypergraph3Builder::new(n);
        for &t in edges {
            b.insert_id(TripleId(t));
        }
        b.build()
    };
    let mut table = PairTable::new(&build(&edges)).ok()?;
    let (m, f) = (pair.m, pair.f);
    let mut score = count_hits(&table, m, f);
    if score == 0 {
        return Some(build(&edges));
    }
    if edges.is_empty() || holes.is_empty() {
        return None;
    }
    for _ in 0..moves {
        let (i, j) = (rng.gen_range(0..edges.len()), rng.gen_range(0..holes.len()));
        let (x, y) = (unrank3(edges[i]), unrank3(holes[j]));
        let (xa, ya) = ([x.0, x.1, x.2], [y.0, y.1, y.2]);
        let before = hits_through(&table, m, f, xa, None) + hits_through(&table, m, f, ya, Some(xa));
        table.toggle(x.0, x.1, x.2);
        table.toggle(y.0, y.1, y.2);
        let after = hits_through(&table, m, f, xa, None) + hits_through(&table, m, f, ya, Some(xa));
        let delta = after - before;
        if delta <= 0 {
            score += delta;
            std::mem::swap(&mut edges[i], &mut holes[j]);
            if score == 0 {
                return Some(build(&edges));
            }
        } else {
            table.toggle(x.0, x.1, x.2);
            table.toggle(y.0, y.1, y.2);
        }
    }
    None
}

/// Heuristic counterexample search for `(n, e) -> (m, f)`: seeded restarts
/// of a hill climb over edge swaps (remove one edge, add one non-edge)
/// minimizing the number of induced `(m, f)` sets. Restart `r` gets
/// `64 * 2^r` proposals until `budget` proposals are spent. `start`, when
/// given, is trimmed or padded to `e` edges and used as every restart's
/// initial graph. Never returns `Forced`.
pub fn arrow_search(
    n: usize,
    e: usize,
    pair: OrderSizePair,
    budget: u64,
    seed: u64,
    start: Option<&Hypergraph3>,
) -> Result<ArrowVerdict> {
    check_pair(n, e, pair)?;
    if n > SCAN_MAX_N {
        return crate::error::capability(format!("search supports n <= {SCAN_MAX_N}, got {n}"));
    }
    if let Some(s) = start {
        if s.n() != n {
            return invalid(format!("start graph has {} vertices, expected {n}", s.n()));
        }
    }
    let mut schedule = Vec::new();
    let mut spent = 0u64;
    let mut r = 0u32;
    while spent < budget || schedule.is_empty() {
        let moves = (64u64 << r.min(40)).min(budget.saturating_sub(spent).max(1));
        schedule.push(moves);
        spent += moves;
        r += 1;
    }
    let hit = schedule.par_iter().enumerate().find_map_first(|(i, &moves)| {
        let restart_seed = seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
        climb(n, e, pair, start, moves, restart_seed)
    });
    match hit {
        Some(g) => verified(g, n, e, pair),
        None => Ok(ArrowVerdict::Unknown { budget_spent: budget }),
    }
}
