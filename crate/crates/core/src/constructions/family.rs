use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::binom::{c2, c3};
use crate::error::{invalid, Error, Result};
use crate::graph::Hypergraph3;

use super::{check_materialize, IntervalSet};

/// A subset `S` of `{1, 2}`: the crossing edge types `E_i` (edges with `i`
/// vertices in the clique part) present in `G(S, n, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossingSet {
    one: bool,
    two: bool,
}

impl CrossingSet {
    pub const EMPTY: CrossingSet = CrossingSet { one: false, two: false };
    pub const ONE: CrossingSet = CrossingSet { one: true, two: false };
    pub const TWO: CrossingSet = CrossingSet { one: false, two: true };
    pub const BOTH: CrossingSet = CrossingSet { one: true, two: true };

    /// All four subsets in the order `{}, {1}, {2}, {1,2}`.
    pub const ALL: [CrossingSet; 4] = [Self::EMPTY, Self::ONE, Self::TWO, Self::BOTH];

    pub fn contains(self, i: usize) -> bool {
        match i {
            1 => self.one,
            2 => self.two,
            _ => false,
        }
    }

    /// `{1, 2} \ S`.
    pub fn complement(self) -> Self {
        CrossingSet { one: !self.one, two: !self.two }
    }

    /// The set `S'` with `G(S, n, k)^c = G(S', n, n - k)` up to relabeling:
    /// `{3 - i : i in {1,2} \ S}`. Equals `{1,2} \ S` only for `S` empty or
    /// full; the singletons map to themselves.
    pub fn for_complement(self) -> Self {
        CrossingSet { one: !self.two, two: !self.one }
    }

    pub fn members(self) -> Vec<u8> {
        [(1, self.one), (2, self.two)].into_iter().filter(|&(_, on)| on).map(|(i, _)| i).collect()
    }

    pub fn from_members(members: &[u8]) -> Result<Self> {
        let mut s = Self::EMPTY;
        for &i in members {
            match i {
                1 => s.one = true,
                2 => s.two = true,
                _ => return invalid(format!("crossing set members must lie in {{1,2}}, got {i}")),
            }
        }
        Ok(s)
    }
}

impl fmt::Display for CrossingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.members().iter().map(u8::to_string).collect();
        write!(f, "{{{}}}", m.join(","))
    }
}

/// Accepts `{}`, `{1}`, `{1,2}`, `12`, `1,2`, `empty`, ...
impl FromStr for CrossingSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}');
        if t.eq_ignore_ascii_case("empty") || t.eq_ignore_ascii_case("none") {
            return Ok(Self::EMPTY);
        }
        let mut members = Vec::new();
        for ch in t.chars().filter(|c| !matches!(c, ',' | ' ')) {
            match ch.to_digit(10) {
                Some(d) => members.push(d as u8),
                None => return invalid(format!("cannot parse crossing set {s:?}")),
            }
        }
        Self::from_members(&members)
    }
}

impl Serialize for CrossingSet {
    fn serialize<Se: Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        self.members().serialize(s)
    }
}

impl<'de> Deserialize<'de> for CrossingSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u8>::deserialize(d)?;
        Self::from_members(&v).map_err(serde::de::Error::custom)
    }
}

/// Parameters `(S, n, k)` of `G(S, n, k)`: a clique `A = {0..k}`, an
/// independent base set `B = {k..n}`, and the crossing edges of each type in `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalParams {
    pub s: CrossingSet,
    pub n: usize,
    pub k: usize,
}

impl CanonicalParams {
    pub fn new(s: CrossingSet, n: usize, k: usize) -> Result<Self> {
        if k > n {
            return invalid(format!("clique size k = {k} exceeds n = {n}"));
        }
        Ok(CanonicalParams { s, n, k })
    }

    /// Parameters of the complement graph with the roles of `A` and `B`
    /// swapped: `(S', n, n - k)` with `S'` from [`CrossingSet::for_complement`].
    pub fn complement(self) -> Self {
        CanonicalParams { s: self.s.for_complement(), n: self.n, k: self.n - self.k }
    }
}

pub fn g_construction(p: CanonicalParams) -> Result<Hypergraph3> {
    CanonicalParams::new(p.s, p.n, p.k)?;
    check_materialize(p.n)?;
    let k = p.k;
    Ok(Hypergraph3::from_fn(p.n, |a, b, c| {
        let inside = [a, b, c].iter().filter(|&&v| v < k).count();
        inside == 3 || p.s.contains(inside)
    }))
}

/// `f(S, n, k) = C(k,3) + sum_{i in S} C(k,i) C(n-k,3-i)`, the edge count of
/// `G(S, n, k)`. Exact while the result fits in `u128`.
pub fn f_formula(p: CanonicalParams) -> u128 {
    let (n, k) = (p.n as u128, p.k as u128);
    let rest = n - k;
    let mut f = c3(k);
    if p.s.contains(1) {
        f += k * c2(rest);
    }
    if p.s.contains(2) {
        f += c2(k) * rest;
    }
    f
}

fn f_at(s: CrossingSet, m: usize, x: usize) -> u128 {
    f_formula(CanonicalParams { s, n: m, k: x })
}

/// `F(S, m)`: the edge counts an induced `m`-set of some canonical plus graph
/// and of some canonical minus graph, both with first parameter `S`, can
/// share. Clamped to `[0, C(m,3)]`.
pub fn f_set(s: CrossingSet, m: usize) -> IntervalSet {
    let mm = m as u128;
    let plus = IntervalSet::from_spans((0..m).map(|x| {
        let f = f_at(s, m, x);
        (f, f + mm)
    }));
    let minus = IntervalSet::from_spans((1..=m).map(|x| {
        let f = f_at(s, m, x);
        (f.saturating_sub(mm), f)
    }));
    plus.intersect(&minus).intersect_span(0, c3(mm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binom::choose;

    fn p(s: CrossingSet, n: usize, k: usize) -> CanonicalParams {
        CanonicalParams::new(s, n, k).unwrap()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(f_formula(p(CrossingSet::EMPTY, 10, 5)), 10);
        assert_eq!(f_formula(p(CrossingSet::ONE, 7, 1)), 15);
        assert_eq!(f_formula(p(CrossingSet::TWO, 6, 3)), 10);
        assert_eq!(g_construction(p(CrossingSet::TWO, 6, 3)).unwrap().edge_count(), 10);
    }

    #[test]
    fn empty_s_is_clique_plus_isolated() {
        let g = g_construction(p(CrossingSet::EMPTY, 9, 5)).unwrap();
        let want = Hypergraph3::from_fn(9, |_, _, c| c < 5);
        assert_eq!(g, want);
    }

    #[test]
    fn popcount_matches_formula_for_every_small_case() {
        let mut cases = 0;
        for s in CrossingSet::ALL {
            for n in 0..=12 {
                for k in 0..=n {
                    let g = g_construction(p(s, n, k)).unwrap();
                    assert_eq!(g.edge_count() as u128, f_formula(p(s, n, k)), "{s} {n} {k}");
                    cases += 1;
                }
            }
        }
        assert_eq!(cases, 4 * (1..=13).sum::<usize>());
    }

    #[test]
    fn full_crossing_set_misses_only_base_triples() {
        for n in 0..20u64 {
            for k in 0..=n {
                let want = choose(n, 3).unwrap() - choose(n - k, 3).unwrap();
                assert_eq!(f_formula(p(CrossingSet::BOTH, n as usize, k as usize)), want);
            }
        }
    }

    #[test]
    fn literal_set_complement_fails_for_singletons() {
        let g = g_construction(p(CrossingSet::ONE, 5, 2)).unwrap();
        assert_eq!(g.complement().edge_count(), 4);
        assert_eq!(f_formula(p(CrossingSet::TWO, 5, 3)), 7);
        assert_eq!(CrossingSet::ONE.for_complement(), CrossingSet::ONE);
        assert_eq!(CrossingSet::EMPTY.for_complement(), CrossingSet::BOTH);
    }

    #[test]
    fn complement_identity() {
        for s in CrossingSet::ALL {
            for n in 0..=10 {
                for k in 0..=n {
                    let g = g_construction(p(s, n, k)).unwrap();
                    let h = g_construction(p(s, n, k).complement()).unwrap();
                    assert!(g.complement().is_isomorphic(&h).unwrap(), "{s} {n} {k}");
                }
            }
        }
    }

    #[test]
    fn consecutive_differences_are_quadratic() {
        for s in CrossingSet::ALL {
            for n in 1..=200usize {
                let bound = 3 * (n as u128) * (n as u128);
                for x in 1..=n {
                    let d = f_at(s, n, x).abs_diff(f_at(s, n, x - 1));
                    assert!(d <= bound, "{s} n={n} x={x}");
                }
            }
        }
    }

    fn brute_member(s: CrossingSet, m: usize, v: u128) -> bool {
        let mm = m as u128;
        if v > c3(mm) {
            return false;
        }
        let plus = (0..m).any(|x| {
            let f = f_at(s, m, x);
            f <= v && v <= f + mm
        });
        let minus = (1..=m).any(|x| {
            let f = f_at(s, m, x);
            f.saturating_sub(mm) <= v && v <= f
        });
        plus && minus
    }

    #[test]
    fn f_set_matches_pointwise_definition() {
        for s in CrossingSet::ALL {
            for m in 1..=40 {
                let set = f_set(s, m);
                for v in 0..=c3(m as u128) + 2 {
                    assert_eq!(set.contains(v), brute_member(s, m, v), "{s} m={m} v={v}");
                }
            }
        }
    }

    #[test]
    fn f_set_examples() {
        assert!(f_set(CrossingSet::EMPTY, 6).contains(10));
        let gap = f_set(CrossingSet::ONE, 16).intersect_span(1, c2(15) - 1);
        assert!(gap.is_empty(), "{gap}");
        let m = 20u128;
        let tetra: Vec<u128> = (0..=m).map(c3).collect();
        for v in f_set(CrossingSet::EMPTY, 20).intersect_span(c2(m - 1), c3(m) - 1).iter() {
            assert!(tetra.contains(&v), "{v}");
        }
    }

    #[test]
    fn crossing_set_parsing() {
        for s in CrossingSet::ALL {
            assert_eq!(s.to_string().parse::<CrossingSet>().unwrap(), s);
            let json = serde_json::to_string(&s).unwrap();
            assert_eq!(serde_json::from_str::<CrossingSet>(&json).unwrap(), s);
        }
        assert_eq!("12".parse::<CrossingSet>().unwrap(), CrossingSet::BOTH);
        assert_eq!("empty".parse::<CrossingSet>().unwrap(), CrossingSet::EMPTY);
        assert!("3".parse::<CrossingSet>().is_err());
        assert!(CanonicalParams::new(CrossingSet::ONE, 3, 4).is_err());
    }
}
