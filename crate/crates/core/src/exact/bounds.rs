//! Closed-form sizes and degree bounds for the extremal families.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::binom::{binom, binom_q, ratio};
use crate::error::{ensure_pre, Result};

/// Size bound for intersecting families of diversity at least
/// `C(n-u-1, n-k-1)`: `C(n-1,k-1) + C(n-u-1,n-k-1) - C(n-u-1,k-1)`.
pub fn kz_bound(n: i64, k: i64, u: i64) -> Result<BigInt> {
    ensure_pre!(k > 0 && n > 2 * k, "need n > 2k > 0 (n = {n}, k = {k})");
    ensure_pre!((3..=k).contains(&u), "need 3 <= u <= k (u = {u}, k = {k})");
    Ok(kz_bound_unchecked(n, k, u))
}

pub(crate) fn kz_bound_unchecked(n: i64, k: i64, u: i64) -> BigInt {
    binom(n - 1, k - 1) + binom(n - u - 1, n - k - 1) - binom(n - u - 1, k - 1)
}

/// Floating-point evaluation of [`kz_bound`] for real `u`, using
/// Gamma-function binomials. For plotting only.
pub fn kz_bound_real(n: f64, k: f64, u: f64) -> f64 {
    fn gbinom(a: f64, b: f64) -> f64 {
        use statrs::function::gamma::ln_gamma;
        if b < 0.0 || a - b < 0.0 {
            return 0.0;
        }
        (ln_gamma(a + 1.0) - ln_gamma(b + 1.0) - ln_gamma(a - b + 1.0)).exp()
    }
    gbinom(n - 1.0, k - 1.0) + gbinom(n - u - 1.0, n - k - 1.0) - gbinom(n - u - 1.0, k - 1.0)
}

/// Minimum t-degree of the Hilton-Milner family `H_k`:
/// `C(n-t-1, k-t-1) - C(n-t-k-1, k-t-1)`.
pub fn hm_t_degree_bound(n: i64, k: i64, t: i64) -> Result<BigInt> {
    ensure_pre!(1 <= t && t < k, "need 1 <= t < k (t = {t}, k = {k})");
    ensure_pre!(n >= 2 * k + 1, "need n >= 2k + 1 (n = {n}, k = {k})");
    Ok(binom(n - t - 1, k - t - 1) - binom(n - t - k - 1, k - t - 1))
}

/// Minimum t-degree of `A_0(n, k, s)`: `C(n-t, k-t) - C(n-s-t, k-t)`.
pub fn a0_t_degree(n: i64, k: i64, s: i64, t: i64) -> Result<BigInt> {
    ensure_pre!(
        1 <= t && t <= k && k <= n,
        "need 1 <= t <= k <= n (n = {n}, k = {k}, t = {t})"
    );
    ensure_pre!(s >= 1, "need s >= 1 (s = {s})");
    Ok(binom(n - t, k - t) - binom(n - s - t, k - t))
}

/// `|A_0(n, k, s)| = C(n, k) - C(n - s, k)`.
pub fn a0_size(n: i64, k: i64, s: i64) -> BigInt {
    binom(n, k) - binom(n - s, k)
}

/// `|H_u|` by counting members through their intersection with `[2, u+1]`,
/// independently of the closed form in [`kz_bound`].
pub fn hm_size_by_count(n: i64, k: i64, u: i64) -> BigInt {
    let rest = n - u - 1;
    let through_one: BigInt = (1..=u.min(k - 1))
        .map(|j| binom(u, j) * binom(rest, k - 1 - j))
        .sum();
    through_one + binom(rest, k - u)
}

/// Ground set size tied to `(u, s, k)` in the stability bound.
pub fn emc_ground_size(k: i64, s: i64, u: i64) -> i64 {
    (u + s - 1) * (k - 1) + s + k
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmcBound {
    pub n: i64,
    pub exact: BigRational,
    pub floor: BigInt,
}

/// Size bound for families with matching number `s` and covering number
/// above `s`: `C(n,k) - C(n-s,k) - (u-s-1)/u * C(n-s-k, k-1)`.
pub fn emc_size_bound(n: i64, k: i64, s: i64, u: i64) -> Result<EmcBound> {
    ensure_pre!(s >= 2 && k >= 2, "need s, k >= 2 (s = {s}, k = {k})");
    ensure_pre!(u >= s + 1, "need u >= s + 1 (u = {u}, s = {s})");
    let expected = emc_ground_size(k, s, u);
    ensure_pre!(
        n == expected,
        "n must equal (u+s-1)(k-1)+s+k = {expected} (got n = {n})"
    );
    let exact = binom_q(n, k) - binom_q(n - s, k) - ratio(u - s - 1, u) * binom_q(n - s - k, k - 1);
    let floor = exact.numer().div_floor(exact.denom());
    Ok(EmcBound { n, exact, floor })
}

/// Number of members of `H_k` containing 1 that meet `[k+2, n]` in at most
/// `t - 1` elements: `sum_{i=k-t}^{k-1} C(k, i) C(n-k-1, k-i-1)`.
pub fn alpha_closed_form(n: i64, k: i64, t: i64) -> BigInt {
    (k - t..=k - 1)
        .filter(|&i| i >= 1)
        .map(|i| binom(k, i) * binom(n - k - 1, k - i - 1))
        .sum()
}

/// Lossy conversion for display.
pub fn approx(q: &BigRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let (n, d) = (q.numer().to_f64(), q.denom().to_f64());
    match (n, d) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => f64::NAN,
    }
}
