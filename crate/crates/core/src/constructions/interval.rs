use serde::{Deserialize, Serialize};

/// A finite union of closed integer intervals, stored sorted, disjoint and
/// non-adjacent so that equal sets have equal representations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntervalSet {
    spans: Vec<(u128, u128)>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { spans: Vec::new() }
    }

    /// `[lo, hi]`; empty when `lo > hi`.
    pub fn span(lo: u128, hi: u128) -> Self {
        if lo > hi {
            Self::empty()
        } else {
            IntervalSet { spans: vec![(lo, hi)] }
        }
    }

    /// Builds the normalized union of arbitrary closed intervals. Pairs with
    /// `lo > hi` are ignored.
    pub fn from_spans(spans: impl IntoIterator<Item = (u128, u128)>) -> Self {
        let mut v: Vec<(u128, u128)> = spans.into_iter().filter(|&(lo, hi)| lo <= hi).collect();
        v.sort_unstable();
        let mut out: Vec<(u128, u128)> = Vec::with_capacity(v.len());
        for (lo, hi) in v {
            match out.last_mut() {
                Some(last) if lo <= last.1.saturating_add(1) => last.1 = last.1.max(hi),
                _ => out.push((lo, hi)),
            }
        }
        IntervalSet { spans: out }
    }

    pub fn spans(&self) -> &[(u128, u128)] {
        &self.spans
    }

    pub fn is_empty(&self) -> bool {
        self.spans.is_empty()
    }

    /// Number of integers in the set.
    pub fn cardinality(&self) -> u128 {
        self.spans.iter().map(|&(lo, hi)| hi - lo + 1).sum()
    }

    pub fn contains(&self, x: u128) -> bool {
        let i = self.spans.partition_point(|&(_, hi)| hi < x);
        self.spans.get(i).is_some_and(|&(lo, _)| lo <= x)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_spans(self.spans.iter().chain(&other.spans).copied())
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let (a, b) = (&self.spans, &other.spans);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            let lo = a[i].0.max(b[j].0);
            let hi = a[i].1.min(b[j].1);
            if lo <= hi {
                out.push((lo, hi));
            }
            if a[i].1 < b[j].1 {
                i += 1;
            } else {
                j += 1;
            }
        }
        Self::from_spans(out)
    }

    pub fn intersect_span(&self, lo: u128, hi: u128) -> Self {
        self.intersect(&Self::span(lo, hi))
    }

    /// The maximal interval of non-members containing `x`, bounded by
    /// `[lo, hi]`; `None` if `x` is a member or outside the bounds.
    pub fn gap_around(&self, x: u128, lo: u128, hi: u128) -> Option<(u128, u128)> {
        if x < lo || x > hi || self.contains(x) {
            return None;
        }
        let i = self.spans.partition_point(|&(_, h)| h < x);
        let left = if i == 0 { lo } else { (self.spans[i - 1].1 + 1).max(lo) };
        let right = match self.spans.get(i) {
            Some(&(l, _)) => (l - 1).min(hi),
            None => hi,
        };
        Some((left, right))
    }

    pub fn iter(&self) -> impl Iterator<Item = u128> + '_ {
        self.spans.iter().flat_map(|&(lo, hi)| lo..=hi)
    }
}

impl std::fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.spans.is_empty() {
            return f.write_str("{}");
        }
        for (i, (lo, hi)) in self.spans.iter().enumerate() {
            if i > 0 {
                f.write_str(" u ")?;
            }
            write!(f, "[{lo}, {hi}]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn as_set(s: &IntervalSet) -> BTreeSet<u128> {
        s.iter().collect()
    }

    #[test]
    fn adjacent_spans_merge() {
        let s = IntervalSet::from_spans([(5, 7), (0, 4), (9, 9)]);
        assert_eq!(s.spans(), &[(0, 7), (9, 9)]);
        assert_eq!(s.cardinality(), 9);
        assert!(s.contains(7) && !s.contains(8) && s.contains(9) && !s.contains(10));
    }

    #[test]
    fn gaps() {
        let s = IntervalSet::from_spans([(0, 16), (89, 105)]);
        assert_eq!(s.gap_around(5, 0, 560), None);
        assert_eq!(s.gap_around(40, 0, 560), Some((17, 88)));
        assert_eq!(s.gap_around(200, 0, 560), Some((106, 560)));
        assert_eq!(IntervalSet::empty().gap_around(3, 1, 9), Some((1, 9)));
    }

    proptest! {
        #[test]
        fn ops_match_sets(
            a in prop::collection::vec((0u128..60, 0u128..8), 0..6),
            b in prop::collection::vec((0u128..60, 0u128..8), 0..6),
        ) {
            let sa = IntervalSet::from_spans(a.iter().map(|&(l, w)| (l, l + w)));
            let sb = IntervalSet::from_spans(b.iter().map(|&(l, w)| (l, l + w)));
            let (xa, xb) = (as_set(&sa), as_set(&sb));
            prop_assert_eq!(as_set(&sa.union(&sb)), &xa | &xb);
            prop_assert_eq!(as_set(&sa.intersect(&sb)), &xa & &xb);
            for x in 0..80 {
                prop_assert_eq!(sa.contains(x), xa.contains(&x));
            }
            // normalization is canonical
            prop_assert_eq!(IntervalSet::from_spans(xa.iter().map(|&x| (x, x))), sa.clone());
            for w in sa.spans().windows(2) {
                prop_assert!(w[0].1 + 1 < w[1].0);
            }
        }
    }
}
