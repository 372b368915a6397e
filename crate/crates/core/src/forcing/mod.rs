//! The arrow relation `(n, e) -> (m, f)`: induced-size scans, exhaustive and
//! heuristic forcing decisions, copy counts and zero-density certificates.

mod arrow;
mod avoid;
mod certificate;
mod copies;
mod enumerate;
mod scan;

use serde::{Deserialize, Serialize};

use crate::binom::c3;
use crate::error::{invalid, Result};

pub use arrow::{arrow_exhaustive, arrow_search, scan_forced_set, ArrowVerdict, ForcedScan, LevelOutcome};
pub use avoid::{avoidable_range_from_construction, AvoidableRange};
pub use certificate::{clique_turan_bounds, tetrahedral_filter, zero_density_certificate, ZeroDensityCertificate};
pub use copies::{count_k43minus, count_transversal_k43minus, k43minus_four_sets};
pub use enumerate::{class_counts, enumerate_classes, enumerate_graphs, GraphClass, ENUM_MAX_N};
pub use scan::{induced_pair_witness, size_histogram, size_histogram_with_budget, SizeHistogram};

/// An order-size pair `(m, f)`: `m` vertices spanning exactly `f` edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderSizePair {
    pub m: usize,
    pub f: u128,
}

impl OrderSizePair {
    pub fn new(m: usize, f: u128) -> Result<Self> {
        if m < 3 {
            return invalid(format!("order m must be at least 3, got {m}"));
        }
        if f > c3(m as u128) {
            return invalid(format!("size f = {f} exceeds C({m},3)"));
        }
        Ok(OrderSizePair { m, f })
    }

    /// `(m, C(m,3) - f)`, the pair seen by complements.
    pub fn complement(self) -> Self {
        OrderSizePair { m: self.m, f: c3(self.m as u128) - self.f }
    }
}

impl std::fmt::Display for OrderSizePair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.m, self.f)
    }
}
