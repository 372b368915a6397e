//! Exact binomial coefficients on `u128`, with the convention `C(y, x) = 0`
//! for `y < x`.

/// `C(x, 2)`.
#[inline]
pub const fn c2(x: u128) -> u128 {
    if x < 2 {
        0
    } else if x.is_multiple_of(2) {
        (x / 2) * (x - 1)
    } else {
        x * ((x - 1) / 2)
    }
}

/// `C(x, 3)`, exact for every `x` whose result fits in `u128`
/// (roughly `x < 1.2e13`).
#[inline]
pub const fn c3(x: u128) -> u128 {
    if x < 3 {
        return 0;
    }
    // Split the factor 6 between the three consecutive factors so the
    // intermediate product never exceeds the final value by more than 6x.
    let (mut a, mut b, mut c) = (x, x - 1, x - 2);
    if a % 2 == 0 {
        a /= 2;
    } else {
        b /= 2;
    }
    if a % 3 == 0 {
        a /= 3;
    } else if b % 3 == 0 {
        b /= 3;
    } else {
        c /= 3;
    }
    a * b * c
}

/// Checked `C(n, k)`; `None` on `u128` overflow.
pub fn choose(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step.
        let num = u128::from(n - i);
        let den = u128::from(i + 1);
        let g = gcd(acc, den);
        let (acc_r, den_r) = (acc / g, den / g);
        // gcd(acc_r, den_r) = 1, so den_r divides num.
        acc = acc_r.checked_mul(num / den_r)?;
    }
    Some(acc)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exercises `u128` multiplication on operands near the largest values the
/// Diophantine search produces (`C(m, 3)` at `m = 10^7` is about `1.7e20`,
/// beyond `u64`). Returns `false` if any product disagrees with its
/// schoolbook reconstruction from 64-bit limbs.
pub fn arithmetic_self_test() -> bool {
    let samples: [u128; 4] = [
        c3(10_000_000),
        c3(1_000_000_000),
        c3(5_000_000_000_000),
        u128::from(u64::MAX) - 12345,
    ];
    samples.iter().all(|&x| {
        let y = 3u128;
        let Some(p) = x.checked_mul(y) else {
            return false;
        };
        let (hi, lo) = ((x >> 64) as u64, x as u64);
        let lo_p = u128::from(lo) * y;
        let hi_p = (u128::from(hi) * y) << 64;
        p == lo_p + hi_p && p / y == x
    }) && {
        let x: u128 = 10_000_000;
        c3(x) == x * (x - 1) * (x - 2) / 6
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values_match_pascal() {
        let mut row = vec![1u128];
        for n in 0..=60u64 {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(choose(n, k as u64), Some(v), "C({n},{k})");
            }
            let mut next = vec![1u128; row.len() + 1];
            for k in 1..row.len() {
                next[k] = row[k - 1] + row[k];
            }
            row = next;
        }
        for x in 0..200u128 {
            assert_eq!(c3(x), choose(x as u64, 3).unwrap());
            assert_eq!(c2(x), choose(x as u64, 2).unwrap());
        }
    }

    #[test]
    fn large_c3_exact() {
        // 10^7 * (10^7 - 1) * (10^7 - 2) / 6
        let x: u128 = 10_000_000;
        assert_eq!(c3(x), x * (x - 1) * (x - 2) / 6);
        assert!(c3(x) > u128::from(u64::MAX) / 100);
        assert!(arithmetic_self_test());
    }

    #[test]
    fn choose_overflow_is_detected() {
        assert_eq!(choose(200, 100), None);
        assert_eq!(choose(5, 7), Some(0));
    }
}
