//! Arbitrary-precision re-verification of solutions, written without the
//! `u128` binomial helpers used by the search.

use num_bigint::BigUint;

pub(crate) fn big_choose3(x: u64) -> BigUint {
    if x < 3 {
        return BigUint::from(0u8);
    }
    BigUint::from(x) * BigUint::from(x - 1) * BigUint::from(x - 2) / BigUint::from(6u8)
}

fn big_choose2(x: u64) -> BigUint {
    if x < 2 {
        return BigUint::from(0u8);
    }
    BigUint::from(x) * BigUint::from(x - 1) / BigUint::from(2u8)
}

pub(crate) fn big_third(m: u64, x: u64) -> BigUint {
    big_choose3(x) + big_choose2(x) * BigUint::from(m - x)
}

/// Whether `(m, x1, x2, x3, f)` satisfies all three equalities with every
/// `x_i` in `1..m` and `0 < f < C(m,3)`.
pub fn check_solution(m: u64, x1: u64, x2: u64, x3: u64, f: u128) -> bool {
    if [x1, x2, x3].iter().any(|&x| x == 0 || x >= m) {
        return false;
    }
    let f = BigUint::from(f);
    let top = big_choose3(m);
    f > BigUint::from(0u8)
        && f < top
        && big_choose3(x1) == f
        && &top - big_choose3(x2) == f
        && big_third(m, x3) == f
}
