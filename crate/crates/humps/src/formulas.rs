//! Closed-form and recurrence counting, all exact via big integers.

use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact nonnegative count. All public counting functions return this.
pub type BigCount = BigUint;

/// Arguments outside an operation's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("arguments out of domain for {op}: n={n}, k={k}")]
pub struct DomainError {
    pub op: &'static str,
    pub n: u64,
    pub k: u64,
}

/// Which side classes of flat-free balanced paths to count, split by the
/// first and last step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SideClass {
    /// First step up, last step down.
    UpDown,
    /// First step up, last step up.
    UpUp,
    /// No side restriction.
    Any,
}

fn exact_div(numerator: BigCount, divisor: u64, op: &'static str) -> BigCount {
    let divisor = BigUint::from(divisor);
    let quotient = &numerator / &divisor;
    let remainder = &numerator % &divisor;
    assert!(
        remainder.is_zero(),
        "{op}: {numerator} is not divisible by {divisor}"
    );
    quotient
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigCount::one();
    // After step i the accumulator holds C(n - k + i, i), so every division
    // is exact.
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigCount {
    exact_div(binomial(2 * n, n), n + 1, "catalan")
}

static MOTZKIN_MEMO: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

/// The order-`n` count of nonnegative three-letter paths of `n` steps, via
/// the recurrence `m(t) = m(t-1) + sum_{i=2..=t} m(i-2) * m(t-i)` seeded with
/// `m(0) = m(1) = 1`. Memoized behind a lock, so concurrent callers are safe.
pub fn motzkin(n: u64) -> BigCount {
    let n = usize::try_from(n).expect("order fits a usize");
    let mut memo = MOTZKIN_MEMO.lock().expect("memo lock");
    if memo.is_empty() {
        memo.push(BigUint::one());
        memo.push(BigUint::one());
    }
    while memo.len() <= n {
        let t = memo.len();
        let mut acc = memo[t - 1].clone();
        for i in 2..=t {
            acc += &memo[i - 2] * &memo[t - i];
        }
        memo.push(acc);
    }
    memo[n].clone()
}

/// `C(n, k) * C(n, k - 1) / n` for `1 <= k <= n`.
pub fn narayana(n: u64, k: u64) -> Result<BigCount, DomainError> {
    if n == 0 || k == 0 || k > n {
        return Err(DomainError {
            op: "narayana",
            n,
            k,
        });
    }
    Ok(exact_div(
        binomial(n, k) * binomial(n, k - 1),
        n,
        "narayana",
    ))
}

/// `(C(n-1, k-1)^2 + C(n-1, k-2) * C(n-1, k-1)) / k` for `1 <= k <= n`.
/// Always equal to [`narayana`].
pub fn narayana_from_classes(n: u64, k: u64) -> Result<BigCount, DomainError> {
    if n == 0 || k == 0 || k > n {
        return Err(DomainError {
            op: "narayana_from_classes",
            n,
            k,
        });
    }
    let first = binomial(n - 1, k - 1);
    let second = match k.checked_sub(2) {
        Some(k2) => binomial(n - 1, k2),
        None => BigCount::zero(),
    };
    Ok(exact_div(
        &first * &first + second * &first,
        k,
        "narayana_from_classes",
    ))
}

/// Total number of peaks over all nonnegative flat-free balanced paths of
/// order `n`: `C(2n - 1, n)`, with the empty order counting zero.
pub fn peaks_dyck_total(n: u64) -> BigCount {
    if n == 0 {
        return BigCount::zero();
    }
    binomial(2 * n - 1, n)
}

/// Number of unconstrained flat-free balanced paths of order `n`:
/// `C(2n, n)`. Always twice [`peaks_dyck_total`] for `n >= 1`.
pub fn super_dyck_count(n: u64) -> BigCount {
    binomial(2 * n, n)
}

/// Number of unconstrained three-letter paths of `n` steps ending at height
/// 0: `sum_j C(n, j) * C(n - j, j)`.
pub fn super_motzkin_count(n: u64) -> BigCount {
    let mut acc = BigCount::zero();
    for j in 0..=n / 2 {
        acc += binomial(n, j) * binomial(n - j, j);
    }
    acc
}

/// Total number of humps over all order-`n` nonnegative three-letter paths:
/// `(super_motzkin_count(n) - 1) / 2`.
pub fn humps_motzkin_total(n: u64) -> BigCount {
    exact_div(super_motzkin_count(n) - 1u32, 2, "humps_motzkin_total")
}

/// Number of order-`n` unconstrained flat-free balanced paths with exactly
/// `k` peaks, restricted to the given side class.
///
/// Requires `n >= 1` and `k <= n`.
pub fn super_dyck_class_count(n: u64, k: u64, class: SideClass) -> Result<BigCount, DomainError> {
    if n == 0 || k > n {
        return Err(DomainError {
            op: "super_dyck_class_count",
            n,
            k,
        });
    }
    let count = match class {
        SideClass::UpDown => match k.checked_sub(1) {
            Some(k1) => {
                let c = binomial(n - 1, k1);
                &c * &c
            }
            None => BigCount::zero(),
        },
        SideClass::UpUp => match k.checked_sub(1) {
            Some(k1) => binomial(n - 1, k1) * binomial(n - 1, k),
            None => BigCount::zero(),
        },
        SideClass::Any => {
            let c = binomial(n, k);
            &c * &c
        }
    };
    Ok(count)
}

/// Number of unconstrained Schröder-shaped paths of order `n`:
/// `sum_k C(n + k, 2k) * C(2k, k)`.
pub fn super_schroeder_count(n: u64) -> BigCount {
    let mut acc = BigCount::zero();
    for k in 0..=n {
        acc += binomial(n + k, 2 * k) * binomial(2 * k, k);
    }
    acc
}

/// Total number of humps over all order-`n` nonnegative Schröder-shaped
/// paths: `(super_schroeder_count(n) - 1) / 2`.
pub fn humps_schroeder_total(n: u64) -> BigCount {
    exact_div(super_schroeder_count(n) - 1u32, 2, "humps_schroeder_total")
}

/// The two sides of the peak-coloring identity:
/// `sum_k C(n, k)^2 * (m + 1)^k` and
/// `sum_k C(n + k, 2k) * C(2k, k) * m^(n - k)`, with `0^0 = 1`.
pub fn schroeder_identity_sides(n: u64, m: u64) -> (BigCount, BigCount) {
    let mut lhs = BigCount::zero();
    let mut rhs = BigCount::zero();
    let base = BigUint::from(m + 1);
    let weight = BigUint::from(m);
    for k in 0..=n {
        let exp = u32::try_from(k).expect("order fits a u32");
        let c = binomial(n, k);
        lhs += &c * &c * base.pow(exp);
        let co_exp = u32::try_from(n - k).expect("order fits a u32");
        rhs += binomial(n + k, 2 * k) * binomial(2 * k, k) * weight.pow(co_exp);
    }
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigCount {
        BigUint::from(n)
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), big(6));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binomial(20, 10), big(184_756));
        assert_eq!(binomial(7, 0), big(1));
        assert_eq!(binomial(7, 7), big(1));
    }

    #[test]
    fn binomial_symmetry_and_pascal() {
        for n in 0..=20u64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n, n - k));
                if n >= 1 && k >= 1 {
                    assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
                }
            }
        }
    }

    #[test]
    fn catalan_values() {
        let expected = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(catalan(n as u64), big(want));
        }
    }

    #[test]
    fn motzkin_values() {
        let expected = [
            1u64, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634,
        ];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(motzkin(n as u64), big(want));
        }
        // Repeated calls hit the memo and agree.
        assert_eq!(motzkin(9), big(835));
    }

    #[test]
    fn narayana_values_and_sums() {
        assert_eq!(narayana(4, 2).unwrap(), big(6));
        assert_eq!(narayana(5, 3).unwrap(), big(20));
        for n in 1..=12u64 {
            assert_eq!(narayana(n, 1).unwrap(), big(1));
            let mut total = BigCount::zero();
            let mut weighted = BigCount::zero();
            for k in 1..=n {
                let v = narayana(n, k).unwrap();
                weighted += &v * BigUint::from(k);
                total += v;
            }
            assert_eq!(total, catalan(n));
            assert_eq!(weighted, peaks_dyck_total(n));
        }
        assert!(narayana(4, 0).is_err());
        assert!(narayana(4, 5).is_err());
        assert!(narayana(0, 1).is_err());
    }

    #[test]
    fn narayana_from_classes_matches() {
        assert_eq!(narayana_from_classes(6, 3).unwrap(), big(50));
        for n in 1..=30u64 {
            for k in 1..=n {
                assert_eq!(
                    narayana_from_classes(n, k).unwrap(),
                    narayana(n, k).unwrap()
                );
            }
        }
        assert!(narayana_from_classes(3, 4).is_err());
    }

    #[test]
    fn peak_totals() {
        assert_eq!(peaks_dyck_total(0), big(0));
        assert_eq!(peaks_dyck_total(1), big(1));
        assert_eq!(peaks_dyck_total(2), big(3));
        assert_eq!(super_dyck_count(2), big(6));
        for n in 1..=12u64 {
            assert_eq!(super_dyck_count(n), peaks_dyck_total(n) * 2u32);
        }
    }

    #[test]
    fn hump_totals_three_letter() {
        let sm = [
            1u64, 1, 3, 7, 19, 51, 141, 393, 1107, 3139, 8953, 25653, 73789,
        ];
        for (n, &want) in sm.iter().enumerate() {
            assert_eq!(super_motzkin_count(n as u64), big(want));
        }
        assert_eq!(humps_motzkin_total(2), big(1));
        assert_eq!(humps_motzkin_total(3), big(3));
        for n in 0..=12u64 {
            assert_eq!(super_motzkin_count(n), humps_motzkin_total(n) * 2u32 + 1u32);
        }
    }

    #[test]
    fn side_class_counts() {
        assert_eq!(
            super_dyck_class_count(2, 1, SideClass::UpDown).unwrap(),
            big(1)
        );
        assert_eq!(
            super_dyck_class_count(2, 1, SideClass::Any).unwrap(),
            big(4)
        );
        assert_eq!(
            super_dyck_class_count(2, 0, SideClass::Any).unwrap(),
            big(1)
        );
        assert_eq!(
            super_dyck_class_count(2, 0, SideClass::UpDown).unwrap(),
            big(0)
        );
        assert!(super_dyck_class_count(0, 0, SideClass::Any).is_err());
        assert!(super_dyck_class_count(3, 4, SideClass::Any).is_err());

        // The four side classes partition each peak stratum: UD + UU counts
        // the up-first half, and mirroring pairs it with the down-first half.
        for n in 1..=16u64 {
            let mut total = BigCount::zero();
            for k in 0..=n {
                let ud = super_dyck_class_count(n, k, SideClass::UpDown).unwrap();
                let uu = super_dyck_class_count(n, k, SideClass::UpUp).unwrap();
                total += ud + uu;
            }
            assert_eq!(total * 2u32, super_dyck_count(n));
        }
    }

    #[test]
    fn hump_totals_schroeder() {
        let ss = [1u64, 3, 13, 63, 321, 1683, 8989, 48639, 265729];
        for (n, &want) in ss.iter().enumerate() {
            assert_eq!(super_schroeder_count(n as u64), big(want));
        }
        assert_eq!(humps_schroeder_total(1), big(1));
        assert_eq!(humps_schroeder_total(2), big(6));
        for n in 0..=12u64 {
            assert_eq!(
                super_schroeder_count(n),
                humps_schroeder_total(n) * 2u32 + 1u32
            );
        }
    }

    #[test]
    fn coloring_identity_sides() {
        let (lhs, rhs) = schroeder_identity_sides(2, 1);
        assert_eq!(lhs, big(13));
        assert_eq!(rhs, big(13));
        let (lhs, rhs) = schroeder_identity_sides(2, 2);
        assert_eq!(lhs, big(22));
        assert_eq!(rhs, big(22));
        for n in 0..=20u64 {
            for m in 0..=5u64 {
                let (lhs, rhs) = schroeder_identity_sides(n, m);
                assert_eq!(lhs, rhs, "sides differ at n={n}, m={m}");
            }
        }
        // m = 0 keeps only the flat-free paths.
        for n in 0..=10u64 {
            let (lhs, _) = schroeder_identity_sides(n, 0);
            assert_eq!(lhs, super_dyck_count(n));
        }
        // m = 1 gives the unconstrained Schröder counts.
        for n in 0..=10u64 {
            let (lhs, _) = schroeder_identity_sides(n, 1);
            assert_eq!(lhs, super_schroeder_count(n));
        }
    }
}
