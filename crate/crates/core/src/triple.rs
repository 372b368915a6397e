//! Colexicographic ranking of 3-subsets.
//!
//! The triple `{a < b < c}` has rank `C(c,3) + C(b,2) + a`. The rank does not
//! depend on the ground-set size, so the triples of `{0..n}` are exactly the
//! ranks `0..C(n,3)` for every `n`.

use serde::{Deserialize, Serialize};

use crate::binom::{c2, c3};
use crate::error::{invalid, Result};

/// Colex rank of a 3-subset of the vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TripleId(pub usize);

impl TripleId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// Number of triples on `n` vertices.
#[inline]
pub fn triple_count(n: usize) -> usize {
    c3(n as u128) as usize
}

#[inline]
pub(crate) fn rank3(a: usize, b: usize, c: usize) -> usize {
    debug_assert!(a < b && b < c);
    c3(c as u128) as usize + c2(b as u128) as usize + a
}

/// Rank of an unordered triple given in any order.
#[inline]
pub(crate) fn rank_any(x: usize, y: usize, z: usize) -> usize {
    let (a, b, c) = sort3(x, y, z);
    rank3(a, b, c)
}

#[inline]
pub(crate) fn sort3(x: usize, y: usize, z: usize) -> (usize, usize, usize) {
    let (x, y) = if x < y { (x, y) } else { (y, x) };
    let (y, z) = if y < z { (y, z) } else { (z, y) };
    let (x, y) = if x < y { (x, y) } else { (y, x) };
    (x, y, z)
}

/// Inverse of [`rank3`]; no range check against a vertex count.
pub(crate) fn unrank3(t: usize) -> (usize, usize, usize) {
    // largest c with C(c,3) <= t
    let mut c = ((6.0 * t as f64).cbrt() as usize).max(2);
    while c3(c as u128 + 1) as usize <= t {
        c += 1;
    }
    while c3(c as u128) as usize > t {
        c -= 1;
    }
    let rest = t - c3(c as u128) as usize;
    let mut b = ((2.0 * rest as f64).sqrt() as usize).max(1);
    while c2(b as u128 + 1) as usize <= rest {
        b += 1;
    }
    while c2(b as u128) as usize > rest {
        b -= 1;
    }
    let a = rest - c2(b as u128) as usize;
    (a, b, c)
}

/// Rank of `{a, b, c}` among the triples of an `n`-vertex set.
pub fn triple_rank(a: usize, b: usize, c: usize, n: usize) -> Result<TripleId> {
    if !(a < b && b < c) {
        return invalid(format!("triple ({a},{b},{c}) is not strictly increasing"));
    }
    if c >= n {
        return invalid(format!("vertex {c} out of range for n = {n}"));
    }
    Ok(TripleId(rank3(a, b, c)))
}

/// The sorted triple with rank `t` among the triples of an `n`-vertex set.
pub fn triple_unrank(t: TripleId, n: usize) -> Result<(usize, usize, usize)> {
    if t.0 >= triple_count(n) {
        return invalid(format!("triple id {} out of range for n = {n}", t.0));
    }
    Ok(unrank3(t.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn colex_order(n: usize) -> Vec<(usize, usize, usize)> {
        let mut all = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    all.push((a, b, c));
                }
            }
        }
        // colex: compare largest element first
        all.sort_by_key(|&(a, b, c)| (c, b, a));
        all
    }

    #[test]
    fn extremes_for_six_vertices() {
        assert_eq!(triple_rank(0, 1, 2, 6).unwrap(), TripleId(0));
        assert_eq!(triple_rank(3, 4, 5, 6).unwrap(), TripleId(19));
    }

    #[test]
    fn matches_enumerated_colex_order() {
        let order = colex_order(6);
        let pos = order.iter().position(|&t| t == (1, 2, 4)).unwrap();
        assert_eq!(pos, 6);
        assert_eq!(triple_rank(1, 2, 4, 6).unwrap(), TripleId(pos));
    }

    #[test]
    fn bijection_up_to_sixteen() {
        for n in 3..=16 {
            let order = colex_order(n);
            assert_eq!(order.len(), triple_count(n));
            for (i, &(a, b, c)) in order.iter().enumerate() {
                assert_eq!(triple_rank(a, b, c, n).unwrap(), TripleId(i));
                assert_eq!(triple_unrank(TripleId(i), n).unwrap(), (a, b, c));
            }
        }
    }

    #[test]
    fn unrank_large_ranks() {
        for &(a, b, c) in &[(0, 1, 2000), (1998, 1999, 2000), (17, 600, 100_000)] {
            assert_eq!(unrank3(rank3(a, b, c)), (a, b, c));
        }
    }

    #[test]
    fn argument_errors() {
        assert!(triple_rank(1, 1, 2, 6).is_err());
        assert!(triple_rank(2, 1, 3, 6).is_err());
        assert!(triple_rank(0, 1, 6, 6).is_err());
        assert!(triple_unrank(TripleId(20), 6).is_err());
    }
}
