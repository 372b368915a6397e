use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::graph::{Hypergraph3, VertexSet};
use crate::subsets::{check_budget, scan_subsets, PairTable, DEFAULT_SCAN_BUDGET};

use super::OrderSizePair;

/// `counts[f]` is the number of `m`-sets inducing exactly `f` edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeHistogram {
    pub m: usize,
    pub counts: Vec<u64>,
}

impl SizeHistogram {
    pub fn count(&self, f: usize) -> u64 {
        self.counts.get(f).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Largest `f` with a nonzero count.
    pub fn max_size(&self) -> Option<usize> {
        self.counts.iter().rposition(|&c| c > 0)
    }
}

/// The lexicographically first `m`-set inducing exactly `f` edges.
pub fn induced_pair_witness(g: &Hypergraph3, pair: OrderSizePair) -> Result<Option<VertexSet>> {
    let m = pair.m;
    if m > g.n() {
        return invalid(format!("m = {m} exceeds n = {}", g.n()));
    }
    check_budget(g.n(), m, DEFAULT_SCAN_BUDGET)?;
    let t = PairTable::new(g)?;
    let mut found = None;
    let _ = scan_subsets(&t, m, 0..g.n(), &mut |set, count| {
        if u128::from(count) == pair.f {
            found = Some(VertexSet::new(set.iter().copied()));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found)
}

pub fn size_histogram(g: &Hypergraph3, m: usize) -> Result<SizeHistogram> {
    size_histogram_with_budget(g, m, DEFAULT_SCAN_BUDGET)
}

pub fn size_histogram_with_budget(g: &Hypergraph3, m: usize, budget: u128) -> Result<SizeHistogram> {
    let n = g.n();
    if m > n {
        return invalid(format!("m = {m} exceeds n = {n}"));
    }
    check_budget(n, m, budget)?;
    let t = PairTable::new(g)?;
    let bins = crate::triple_count(m) + 1;
    let starts = if m == 0 { 1 } else { n - m + 1 };
    let counts = (0..starts)
        .into_par_iter()
        .map(|v| {
            let mut local = vec![0u64; bins];
            let _ = scan_subsets(&t, m, v..v + 1, &mut |_, c| {
                local[c as usize] += 1;
                ControlFlow::Continue(())
            });
            local
        })
        .reduce(
            || vec![0u64; bins],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(SizeHistogram { m, counts })
}
