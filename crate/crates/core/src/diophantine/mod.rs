//! Exact search for `f = C(x1,3) = C(m,3) - C(x2,3) = C(x3,3) + C(x3,2)(m - x3)`
//! with `x1, x2, x3` in `1..m` and `0 < f < C(m,3)`.

mod checker;
mod search;

use serde::{Deserialize, Serialize};

use crate::binom::{c2, c3};
use crate::error::{invalid, Result};

pub use checker::check_solution;
pub use search::{search_range, SearchCheckpoint, SearchOptions, SearchOutcome, DEFAULT_CHUNK};

/// `C(x, 3)`.
pub fn tetra(x: u64) -> u128 {
    c3(u128::from(x))
}

/// Largest `r` with `r^3 <= v`.
fn icbrt(v: u128) -> u128 {
    let (mut lo, mut hi) = (0u128, 1u128 << 43);
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        match mid.checked_mul(mid).and_then(|s| s.checked_mul(mid)) {
            Some(cube) if cube <= v => lo = mid,
            _ => hi = mid - 1,
        }
    }
    lo
}

/// The smallest `x` with `C(x,3) = v`, if any. `is_tetra(0) = Some(0)`.
pub fn is_tetra(v: u128) -> Option<u64> {
    if v == 0 {
        return Some(0);
    }
    // (x-2)^3 < 6 C(x,3) < x^3, so x lies in (cbrt(6v), cbrt(6v) + 2].
    let r = icbrt(v.checked_mul(6)?);
    (r..=r + 2).find(|&x| c3_checked(x) == Some(v)).map(|x| x as u64)
}

fn c3_checked(x: u128) -> Option<u128> {
    if x < 3 {
        return Some(0);
    }
    let (a, b, c) = (x, x - 1, x - 2);
    let ab = if a % 2 == 0 { (a / 2).checked_mul(b)? } else { a.checked_mul(b / 2)? };
    if ab % 3 == 0 {
        (ab / 3).checked_mul(c)
    } else {
        ab.checked_mul(c / 3)
    }
}

/// `C(x3,3) + C(x3,2)(m - x3)`, the edge count of `G({2}, m, x3)`.
pub fn third_form(m: u64, x3: u64) -> Result<u128> {
    if x3 > m {
        return invalid(format!("need x3 <= m, got x3 = {x3}, m = {m}"));
    }
    let (m, x) = (u128::from(m), u128::from(x3));
    Ok(c3(x) + c2(x) * (m - x))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiophantineSolution {
    pub m: u64,
    pub x1: u64,
    pub x2: u64,
    pub x3: u64,
    pub f: u128,
}

impl DiophantineSolution {
    /// Validates all three equalities and the ranges with the independent
    /// checker.
    pub fn new(m: u64, x1: u64, x2: u64, x3: u64, f: u128) -> Result<Self> {
        if !check_solution(m, x1, x2, x3, f) {
            return invalid(format!("({m}, {x1}, {x2}, {x3}, {f}) is not a solution"));
        }
        Ok(DiophantineSolution { m, x1, x2, x3, f })
    }
}

/// Every solution with this `m`, by a single pass over `x3`.
///
/// As `x3` grows, `f` is nondecreasing, so the `x1` with `C(x1,3) >= f` only
/// moves up and the `x2` with `C(x2,3) <= C(m,3) - f` only moves down.
pub fn solve_for_m(m: u64) -> Result<Vec<DiophantineSolution>> {
    if m < 4 {
        return invalid(format!("need m >= 4, got {m}"));
    }
    let mm = u128::from(m);
    let top = c3(mm);
    let mut out = Vec::new();
    let (mut x1, mut x2) = (0u128, mm);
    let mut t1 = 0u128;
    let mut t2 = top;
    let mut f = 0u128;
    for x3 in 1..mm {
        // f(x) - f(x-1) = (x-1)(m-x)
        f += (x3 - 1) * (mm - x3);
        if f == 0 || f >= top {
            continue;
        }
        while t1 < f {
            x1 += 1;
            t1 = c3(x1);
        }
        let rest = top - f;
        while t2 > rest {
            x2 -= 1;
            t2 = c3(x2);
        }
        if t1 == f && t2 == rest && (1..mm).contains(&x1) && (1..mm).contains(&x2) {
            let sol = DiophantineSolution::new(m, x1 as u64, x2 as u64, x3 as u64, f)
                .expect("search and checker disagree");
            out.push(sol);
        }
    }
    Ok(out)
}

/// `C(m,3)` at `m = 10^7` exceeds 64 bits; this multiplies near the top of
/// the supported range and compares with a wide reference.
pub fn arithmetic_self_test() -> bool {
    let m = 10_000_000u64;
    let big = checker::big_choose3(m);
    crate::binom::arithmetic_self_test()
        && tetra(m).to_string() == big.to_string()
        && tetra(m) > u128::from(u64::MAX)
        && third_form(m, m - 1).ok().map(|v| v.to_string()) == Some(checker::big_third(m, m - 1).to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn is_tetra_examples() {
        assert_eq!(is_tetra(10), Some(5));
        assert_eq!(is_tetra(0), Some(0));
        assert_eq!(is_tetra(11), None);
        assert_eq!(is_tetra(1), Some(3));
        for x in 3..5000u64 {
            assert_eq!(is_tetra(tetra(x)), Some(x));
            assert_eq!(is_tetra(tetra(x) + 1), None);
        }
        let x = 12_000_000_000u64;
        assert_eq!(is_tetra(tetra(x)), Some(x));
        assert_eq!(is_tetra(u128::MAX), None);
    }

    #[test]
    fn third_form_examples() {
        assert_eq!(third_form(6, 3).unwrap(), 10);
        for m in 0..50 {
            assert_eq!(third_form(m, 0).unwrap(), 0);
            assert_eq!(third_form(m, m).unwrap(), tetra(m));
        }
        assert!(third_form(5, 6).is_err());
    }

    #[test]
    fn third_form_increasing_on_middle_range() {
        for m in 13..400u64 {
            for x in 5..=m - 4 {
                let d = third_form(m, x).unwrap() - third_form(m, x - 1).unwrap();
                assert!(d > 2 * u128::from(m), "m = {m}, x = {x}");
            }
        }
    }

    fn naive(m: u64) -> Vec<DiophantineSolution> {
        let top = tetra(m);
        let mut out = Vec::new();
        for x1 in 1..m {
            for x2 in 1..m {
                for x3 in 1..m {
                    let f = tetra(x1);
                    if f > 0 && f < top && top - tetra(x2) == f && third_form(m, x3).unwrap() == f {
                        out.push(DiophantineSolution { m, x1, x2, x3, f });
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn agrees_with_triple_loop() {
        for m in 4..=60 {
            let mut got = solve_for_m(m).unwrap();
            got.sort();
            assert_eq!(got, naive(m), "m = {m}");
        }
    }

    #[test]
    fn six_is_the_only_small_m() {
        assert_eq!(
            solve_for_m(6).unwrap(),
            vec![DiophantineSolution { m: 6, x1: 5, x2: 5, x3: 3, f: 10 }]
        );
        assert!(solve_for_m(4).unwrap().is_empty());
        assert!(solve_for_m(5).unwrap().is_empty());
        assert!(solve_for_m(3).is_err());
    }

    #[test]
    fn self_test() {
        assert!(arithmetic_self_test());
    }

    #[test]
    fn constructor_rejects_non_solutions() {
        assert!(DiophantineSolution::new(6, 5, 5, 3, 10).is_ok());
        assert!(DiophantineSolution::new(6, 5, 5, 2, 10).is_err());
        assert!(DiophantineSolution::new(6, 6, 5, 3, 10).is_err());
    }
}
