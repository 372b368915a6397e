use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use crate::binom::{c2, c3, choose};
use crate::constructions::{f_set, CrossingSet};
use crate::error::{invalid, Result};

use super::OrderSizePair;

/// Evidence that `sigma_3(m, f) = 0`: `f` lies outside `F(S, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroDensityCertificate {
    pub pair: OrderSizePair,
    pub s: CrossingSet,
    /// The maximal interval of non-members of `F(S, m)` containing `f`,
    /// within `[0, C(m,3)]`.
    pub gap: (u128, u128),
}

impl ZeroDensityCertificate {
    pub fn new(pair: OrderSizePair, s: CrossingSet) -> Result<Self> {
        let top = c3(pair.m as u128);
        match f_set(s, pair.m).gap_around(pair.f, 0, top) {
            Some(gap) => Ok(ZeroDensityCertificate { pair, s, gap }),
            None => invalid(format!("{} lies in F({s}, {})", pair.f, pair.m)),
        }
    }

    /// Recomputes `F(S, m)` and checks the gap.
    pub fn verify(&self) -> bool {
        let set = f_set(self.s, self.pair.m);
        let (lo, hi) = self.gap;
        lo <= self.pair.f && self.pair.f <= hi && set.intersect_span(lo, hi).is_empty()
    }
}

/// Tries `S = {}, {1}, {2}, {1,2}` in that order and certifies the first
/// with `f` outside `F(S, m)`. Requires `0 < f < C(m,3)`.
pub fn zero_density_certificate(pair: OrderSizePair) -> Result<Option<ZeroDensityCertificate>> {
    if pair.f == 0 || pair.f >= c3(pair.m as u128) {
        return invalid(format!("need 0 < f < C(m,3), got ({}, {})", pair.m, pair.f));
    }
    for s in CrossingSet::ALL {
        if !f_set(s, pair.m).contains(pair.f) {
            return ZeroDensityCertificate::new(pair, s).map(Some);
        }
    }
    Ok(None)
}

/// Values `0 < f < C(m,3)` with `f = C(x1,3) = C(m,3) - C(x2,3) =
/// C(x3,3) + C(x3,2)(m - x3)` for some `x1, x2, x3` in `1..m`, by
/// intersecting the three sorted value lists.
pub fn tetrahedral_filter(m: usize) -> Result<Vec<u128>> {
    if m < 4 {
        return invalid(format!("need m >= 4, got {m}"));
    }
    let mm = m as u128;
    let top = c3(mm);
    let xs = 1..mm;
    let mut tetra: Vec<u128> = xs.clone().map(c3).collect();
    let mut co: Vec<u128> = xs.clone().map(|x| top - c3(x)).collect();
    let mut third: Vec<u128> = xs.map(|x| c3(x) + c2(x) * (mm - x)).collect();
    for v in [&mut tetra, &mut co, &mut third] {
        v.sort_unstable();
        v.dedup();
    }
    let both = sorted_intersection(&tetra, &co);
    Ok(sorted_intersection(&both, &third).into_iter().filter(|&f| f > 0 && f < top).collect())
}

fn sorted_intersection(a: &[u128], b: &[u128]) -> Vec<u128> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// `(1 - ((r-1)/(m-1))^(r-1), 1 - 1/C(m-1, r-1))`, the classical lower and
/// upper bounds on the Turan density of `K_m^r`.
pub fn clique_turan_bounds(m: usize, r: usize) -> Result<(BigRational, BigRational)> {
    if r < 2 || m <= r {
        return invalid(format!("need m > r >= 2, got m = {m}, r = {r}"));
    }
    let one = BigRational::one();
    let ratio = BigRational::new(BigInt::from(r - 1), BigInt::from(m - 1));
    let lower = &one - Pow::pow(ratio, (r - 1) as u32);
    let c = choose((m - 1) as u64, (r - 1) as u64)
        .map(BigInt::from)
        .unwrap_or_else(|| big_choose(m - 1, r - 1));
    let upper = &one - BigRational::new(BigInt::one(), c);
    Ok((lower, upper))
}

fn big_choose(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}
