//! Executable identities and inequality predicates, evaluated in exact
//! rational arithmetic.
//!
//! Each [`ClaimId`] is either an identity (true wherever its preconditions
//! hold; a `false` is a bug) or a regime predicate (an inequality whose truth
//! depends on the parameters, e.g. "holds once k >= 30").
//!
//! | claim                     | params      | preconditions                               |
//! |---------------------------|-------------|---------------------------------------------|
//! | `EQ25_IDENTITY`           | n k         | k >= 3, n >= k + 3                          |
//! | `EQ04_BOUND`              | n k u       | n >= 2k + 2, 3 <= u <= k                    |
//! | `EQ07_IDENTITY`           | n k t       | 1 <= t < k, n >= 2k + 1                     |
//! | `EQ01_BOUND`              | n k u       | n > 2k, 3 <= u <= k                         |
//! | `EQ02_PRED`               | n k t       | 1 <= t < k, n >= k + 1                      |
//! | `EQ151_PRED`              | n k t       | 1 <= t < k, k >= 3, n >= 2k + 1             |
//! | `EQ05_PRED`               | n k t       | 1 <= t < k, n >= 2k + 1                     |
//! | `EQ19_PRED`               | n k t       | 1 <= t < k, n >= 2k + 1                     |
//! | `EQ16_PRED`               | n k t       | 1 <= t < k, n >= 2k + 1                     |
//! | `EQ13_PRED`               | n k t u     | 1 <= t < k, n >= 2k + 1, 3 <= u <= k-t-2    |
//! | `EQ10_PRED`               | n k t       | 1 <= t < k, n >= 2k + 1                     |
//! | `EQ11_PRED`               | n k t       | 1 <= t < k, n >= 2k + 1                     |
//! | `EQ09_PRED`               | n k         | k >= 2, n >= 2k + 2                         |
//! | `EQ33_35_PRED`            | n k s t     | 1 <= t < k, s >= 1, n >= s+t+2st, n >= s+k+2k(k-1) |
//! | `EQHIL_BOUND`             | k s t u [n] | s, k >= 2, u >= s + 1, 1 <= t < k, n = (u+s-1)(k-1)+s+k |
//! | `KZ_EQUALS_HM_AT_U_EQ_K`  | n k         | k >= 3, n > 2k                              |
//! | `A0_TDEGREE_FORM`         | n k s t     | 1 <= t <= k, s >= 1, n - s >= k             |
//! | `HM_TDEGREE_FORM`         | n k t       | 1 <= t < k, n >= 2k + 1                     |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::binom::{binom, binom_q, int, product, ratio};
use super::bounds::{
    a0_t_degree, emc_ground_size, emc_size_bound, hm_size_by_count, hm_t_degree_bound,
    kz_bound_unchecked,
};
use crate::error::{ensure_pre, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
pub enum ClaimId {
    EQ25_IDENTITY,
    EQ04_BOUND,
    EQ07_IDENTITY,
    EQ01_BOUND,
    EQ02_PRED,
    EQ151_PRED,
    EQ05_PRED,
    EQ19_PRED,
    EQ16_PRED,
    EQ13_PRED,
    EQ10_PRED,
    EQ11_PRED,
    EQ09_PRED,
    EQ33_35_PRED,
    EQHIL_BOUND,
    KZ_EQUALS_HM_AT_U_EQ_K,
    A0_TDEGREE_FORM,
    HM_TDEGREE_FORM,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    Identity,
    Regime,
}

impl ClaimId {
    pub const ALL: [ClaimId; 18] = [
        ClaimId::EQ25_IDENTITY,
        ClaimId::EQ04_BOUND,
        ClaimId::EQ07_IDENTITY,
        ClaimId::EQ01_BOUND,
        ClaimId::EQ02_PRED,
        ClaimId::EQ151_PRED,
        ClaimId::EQ05_PRED,
        ClaimId::EQ19_PRED,
        ClaimId::EQ16_PRED,
        ClaimId::EQ13_PRED,
        ClaimId::EQ10_PRED,
        ClaimId::EQ11_PRED,
        ClaimId::EQ09_PRED,
        ClaimId::EQ33_35_PRED,
        ClaimId::EQHIL_BOUND,
        ClaimId::KZ_EQUALS_HM_AT_U_EQ_K,
        ClaimId::A0_TDEGREE_FORM,
        ClaimId::HM_TDEGREE_FORM,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::EQ25_IDENTITY => "EQ25_IDENTITY",
            ClaimId::EQ04_BOUND => "EQ04_BOUND",
            ClaimId::EQ07_IDENTITY => "EQ07_IDENTITY",
            ClaimId::EQ01_BOUND => "EQ01_BOUND",
            ClaimId::EQ02_PRED => "EQ02_PRED",
            ClaimId::EQ151_PRED => "EQ151_PRED",
            ClaimId::EQ05_PRED => "EQ05_PRED",
            ClaimId::EQ19_PRED => "EQ19_PRED",
            ClaimId::EQ16_PRED => "EQ16_PRED",
            ClaimId::EQ13_PRED => "EQ13_PRED",
            ClaimId::EQ10_PRED => "EQ10_PRED",
            ClaimId::EQ11_PRED => "EQ11_PRED",
            ClaimId::EQ09_PRED => "EQ09_PRED",
            ClaimId::EQ33_35_PRED => "EQ33_35_PRED",
            ClaimId::EQHIL_BOUND => "EQHIL_BOUND",
            ClaimId::KZ_EQUALS_HM_AT_U_EQ_K => "KZ_EQUALS_HM_AT_U_EQ_K",
            ClaimId::A0_TDEGREE_FORM => "A0_TDEGREE_FORM",
            ClaimId::HM_TDEGREE_FORM => "HM_TDEGREE_FORM",
        }
    }

    pub fn kind(self) -> ClaimKind {
        use ClaimId::*;
        match self {
            EQ25_IDENTITY | EQ04_BOUND | EQ07_IDENTITY | EQ01_BOUND | EQ02_PRED
            | KZ_EQUALS_HM_AT_U_EQ_K | A0_TDEGREE_FORM | HM_TDEGREE_FORM => ClaimKind::Identity,
            _ => ClaimKind::Regime,
        }
    }

    /// Short alias: the name without its `_IDENTITY`/`_BOUND`/`_PRED` suffix.
    fn alias(self) -> &'static str {
        let name = self.name();
        for suffix in ["_IDENTITY", "_BOUND", "_PRED"] {
            if let Some(stem) = name.strip_suffix(suffix) {
                return stem;
            }
        }
        name
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    /// Accepts full names and suffix-free aliases, case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name() == up || c.alias() == up)
            .or_else(|| match up.as_str() {
                "EQ33" | "EQ35" | "EQ33_35" => Some(ClaimId::EQ33_35_PRED),
                "KZ_EQUALS_HM" => Some(ClaimId::KZ_EQUALS_HM_AT_U_EQ_K),
                _ => None,
            })
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

/// Parameter point; fields a claim does not use stay `None`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamPoint {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<i64>,
}

impl ParamPoint {
    pub fn nk(n: i64, k: i64) -> Self {
        ParamPoint {
            n: Some(n),
            k: Some(k),
            ..Default::default()
        }
    }

    pub fn nkt(n: i64, k: i64, t: i64) -> Self {
        ParamPoint {
            t: Some(t),
            ..ParamPoint::nk(n, k)
        }
    }

    pub fn with_s(mut self, s: i64) -> Self {
        self.s = Some(s);
        self
    }

    pub fn with_u(mut self, u: i64) -> Self {
        self.u = Some(u);
        self
    }

    fn get(&self, name: &str, v: Option<i64>, claim: ClaimId) -> Result<i64> {
        v.ok_or_else(|| Error::Precondition(format!("{claim} needs parameter `{name}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
}

impl Relation {
    fn test(self, lhs: &BigRational, rhs: &BigRational) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        }
    }
}

/// Result of evaluating one claim at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct ClaimOutcome {
    pub claim: ClaimId,
    pub params: ParamPoint,
    pub holds: bool,
    pub lhs: BigRational,
    pub relation: Relation,
    pub rhs: BigRational,
    /// Set when part of a check was skipped (e.g. a vanishing denominator).
    pub note: Option<String>,
}

impl ClaimOutcome {
    fn compare(
        claim: ClaimId,
        params: ParamPoint,
        lhs: BigRational,
        relation: Relation,
        rhs: BigRational,
    ) -> Self {
        let holds = relation.test(&lhs, &rhs);
        ClaimOutcome {
            claim,
            params,
            holds,
            lhs,
            relation,
            rhs,
            note: None,
        }
    }

    fn and(mut self, extra: bool) -> Self {
        self.holds &= extra;
        self
    }
}

/// Evaluates `claim` at `point`.
pub fn evaluate(claim: ClaimId, point: &ParamPoint) -> Result<ClaimOutcome> {
    use ClaimId::*;
    let p = *point;
    let n = || p.get("n", p.n, claim);
    let k = || p.get("k", p.k, claim);
    let t = || p.get("t", p.t, claim);
    let s = || p.get("s", p.s, claim);
    let u = || p.get("u", p.u, claim);

    match claim {
        EQ25_IDENTITY => eq25(n()?, k()?),
        EQ04_BOUND => eq04(n()?, k()?, u()?),
        EQ07_IDENTITY => eq07(n()?, k()?, t()?),
        EQ01_BOUND => eq01(n()?, k()?, u()?),
        EQ02_PRED => eq02(n()?, k()?, t()?),
        EQ151_PRED => eq151(n()?, k()?, t()?),
        EQ05_PRED => eq05(n()?, k()?, t()?),
        EQ19_PRED => eq19(n()?, k()?, t()?),
        EQ16_PRED => eq16(n()?, k()?, t()?),
        EQ13_PRED => eq13(n()?, k()?, t()?, u()?),
        EQ10_PRED => eq10(n()?, k()?, t()?),
        EQ11_PRED => eq11(n()?, k()?, t()?),
        EQ09_PRED => eq09(n()?, k()?),
        EQ33_35_PRED => eq33_35(n()?, k()?, s()?, t()?),
        EQHIL_BOUND => eqhil(p.n, k()?, s()?, t()?, u()?),
        KZ_EQUALS_HM_AT_U_EQ_K => kz_hm(n()?, k()?),
        A0_TDEGREE_FORM => a0_form(n()?, k()?, s()?, t()?),
        HM_TDEGREE_FORM => hm_form(n()?, k()?, t()?),
    }
}

/// Truth value of `claim` at `point`.
pub fn check_case_predicates(point: &ParamPoint, claim: ClaimId) -> Result<bool> {
    evaluate(claim, point).map(|o| o.holds)
}

pub fn check_eq25(n: i64, k: i64) -> Result<bool> {
    eq25(n, k).map(|o| o.holds)
}

pub fn check_eq04(n: i64, k: i64, u: i64) -> Result<bool> {
    eq04(n, k, u).map(|o| o.holds)
}

pub fn check_eq07(n: i64, k: i64, t: i64) -> Result<bool> {
    eq07(n, k, t).map(|o| o.holds)
}

fn pre_tk(t: i64, k: i64) -> Result<()> {
    ensure_pre!(1 <= t && t < k, "need 1 <= t < k (t = {t}, k = {k})");
    Ok(())
}

fn pre_n_2k1(n: i64, k: i64) -> Result<()> {
    ensure_pre!(n > 2 * k, "need n >= 2k + 1 (n = {n}, k = {k})");
    Ok(())
}

/// `prod_{i=1}^{k} (n-k+1-i)/(n-t-i)`, the ratio `C(n-t-k-1,k-t-1)/C(n-t-1,k-t-1)`.
fn hm_product(n: i64, k: i64, t: i64) -> BigRational {
    product(1..=k, |i| (n - k + 1 - i, n - t - i))
}

/// `k(k-1)(3n-2k-2) / (n(n-1)(n-2))`.
fn eq25_coefficient(n: i64, k: i64) -> BigRational {
    BigRational::new(
        BigInt::from(k) * (k - 1) * (3 * n - 2 * k - 2),
        BigInt::from(n) * (n - 1) * (n - 2),
    )
}

fn eq25(n: i64, k: i64) -> Result<ClaimOutcome> {
    ensure_pre!(k >= 3 && n >= k + 3, "need k >= 3 and n >= k + 3 (n = {n}, k = {k})");
    let p = ParamPoint::nk(n, k);
    let first = binom_q(n - 1, k - 1) - binom_q(n - 4, k - 1) + binom_q(n - 4, k - 3);
    let sum_form: BigRational = (2..=4).map(|i| binom_q(n - i, k - 2)).sum::<BigRational>()
        + binom_q(n - 4, k - 3);
    let second = binom_q(n - 2, k - 2) + int(2) * binom_q(n - 3, k - 2);
    let third = (int(1) + ratio(2 * (n - k), n - 2)) * binom_q(n - 2, k - 2);
    let fourth = eq25_coefficient(n, k) * binom_q(n, k);
    let chain = first == sum_form && sum_form == second && second == third;
    Ok(ClaimOutcome::compare(ClaimId::EQ25_IDENTITY, p, first, Relation::Eq, fourth).and(chain))
}

fn eq04(n: i64, k: i64, u: i64) -> Result<ClaimOutcome> {
    ensure_pre!(n >= 2 * k + 2, "need n >= 2k + 2 (n = {n}, k = {k})");
    ensure_pre!((3..=k).contains(&u), "need 3 <= u <= k (u = {u}, k = {k})");
    let p = ParamPoint::nk(n, k).with_u(u);
    let rhs = BigRational::new(
        BigInt::from(k - 1) * (k - 2),
        BigInt::from(n - k - 1) * (n - k - 2),
    );
    let den = binom(n - u - 1, k - 1);
    if den.is_zero() {
        let mut o = ClaimOutcome::compare(ClaimId::EQ04_BOUND, p, int(0), Relation::Le, rhs);
        o.note = Some(format!("C({}, {}) = 0; ratio skipped", n - u - 1, k - 1));
        return Ok(o);
    }
    let lhs = BigRational::new(binom(n - u - 1, n - k - 1), den);
    // Middle term of the chain: the product at u = 3.
    let middle = product(k..=n - k - 1, |i| (n - 3 - i, n - 1 - i));
    let via_product = product(k..=n - k - 1, |i| (n - u - i, n - 1 - i));
    let chain = lhs == via_product && lhs <= middle && middle <= rhs;
    Ok(ClaimOutcome::compare(ClaimId::EQ04_BOUND, p, lhs, Relation::Le, rhs).and(chain))
}

fn eq07(n: i64, k: i64, t: i64) -> Result<ClaimOutcome> {
    pre_tk(t, k)?;
    pre_n_2k1(n, k)?;
    let p = ParamPoint::nkt(n, k, t);
    let den = binom(n - t - 1, k - t - 1);
    ensure_pre!(!den.is_zero(), "C({}, {}) vanishes", n - t - 1, k - t - 1);
    let lhs = BigRational::new(binom(n - t - k - 1, k - t - 1), den);
    // First telescoping step.
    let step = ratio(n - 2 * k + 1, n - t - k)
        * BigRational::new(binom(n - t - k, k - t - 1), binom(n - t - 1, k - t - 1));
    let rhs = hm_product(n, k, t);
    Ok(ClaimOutcome::compare(ClaimId::EQ07_IDENTITY, p, lhs.clone(), Relation::Eq, rhs)
        .and(step == lhs))
}

fn eq01(n: i64, k: i64, u: i64) -> Result<ClaimOutcome> {
    ensure_pre!(k > 0 && n > 2 * k, "need n > 2k > 0 (n = {n}, k = {k})");
    ensure_pre!((3..=k).contains(&u), "need 3 <= u <= k (u = {u}, k = {k})");
    let p = ParamPoint::nk(n, k).with_u(u);
    let bound = BigRational::from_integer(kz_bound_unchecked(n, k, u));
    let counted = BigRational::from_integer(hm_size_by_count(n, k, u));
    // Diversity of H_u: members avoiding 1 are exactly those holding [2, u+1].
    let gamma_ok = binom(n - u - 1, k - u) == binom(n - u - 1, n - k - 1);
    Ok(ClaimOutcome::compare(ClaimId::EQ01_BOUND, p, bound, Relation::Eq, counted).and(gamma_ok))
}

fn eq02(n: i64, k: i64, t: i64) -> Result<ClaimOutcome> {
    pre_tk(t, k)?;
    ensure_pre!(n > k, "need n >= k + 1 (n = {n}, k = {k})");
    let p = ParamPoint::nkt(n, k, t);
    // Averaging over t-subsets of [2, n]: C(k-1,t) C(n-1,k-1) / C(n-1,t).
    let lhs = binom_q(k - 1, t) * binom_q(n - 1, k - 1) / binom_q(n - 1, t);
    let rhs = binom_q(n - t - 1, k - t - 1);
    let weight_ok = binom_q(k, t) == ratio(k, k - t) * binom_q(k - 1, t);
    Ok(ClaimOutcome::compare(ClaimId::EQ02_PRED, p, lhs, Relation::Eq, rhs).and(weight_ok))
}

fn eq151(n: i64, k: i64, t: i64) -> Result<ClaimOutcome> {
    pre_tk(t, k)?;
    ensure_pre!(k >= 3, "need k >= 3 (k = {k})");
    pre_n_2k1(n, k)?;
    let lhs = ratio(k, k - t);
    let rhs = ratio(n - k - 2, k - 2);
    Ok(ClaimOutcome::compare(ClaimId::EQ151_PRED, ParamPoint::nkt(n, k, t), lhs, Relation::Le, rhs))
}

fn eq05(n: i64, k: i64, t: i64) -> Result<ClaimOutcome> {
    pre_tk(t, k)?;
    pre_n_2k1(n, k)?;
    let lhs = eq25_coefficient(n, k);
    let rhs = ratio(k - t, n - t);
    Ok(ClaimOutcome::compare(ClaimId::EQ05_PRED, ParamPoint::nkt(n, k, t), lhs, Relation::Le, rhs))
}

fn eq19(n: i64, k: i64, t: i64) -> Result<ClaimOutcome> {
    pre_tk(t, k)?;
    pre_n_2k1(n, k)?;
    let lhs = binom_q(n - k - 2, k - 2);
    let rhs = binom_q(k, t) * (binom_q(n - k - 1, t) + binom_q(n - k + t + 1, t + 2));
    Ok(ClaimOutcome::compare(ClaimId::EQ19_PRED, ParamPoint::nkt(n, k, t), lhs, Relation::Ge, rhs))
}

fn eq16(n: i64, k: i64, t: i64) -> Result<ClaimOutcome> {
    pre_tk(t, k)?;
    pre_n_2k1(n, k)?;
    let lhs = int(1)
        - BigRational::new(
            BigInt::from(k) * (k - 1) * (k - 2),
            BigInt::from(k - t) * (n - k - 1) * (n - k - 2),
        );
    let rhs = int(1) - ratio(k, n - k + 1);
    Ok(ClaimOutcome::compare(ClaimId::EQ16_PRED, ParamPoint::nkt(n, k, t), lhs, Relation::Ge, rhs))
}

fn eq13(n: i64, k: i64, t: i64, u: i64) -> Result<ClaimOutcome> {
    pre_tk(t, k)?;
    pre_n_2k1(n, k)?;
    ensure_pre!(
        u >= 3 && u <= k - t - 2,
        "need 3 <= u <= k - t - 2 (u = {u}, k = {k}, t = {t})"
    );
    let lhs = binom_q(n - u - 1, k - 1)
        - ratio(k, k - t) * binom_q(n - u - 1, n - k - 1)
        - hm_product(n, k, t) * binom_q(n - 1, k - 1);
    Ok(ClaimOutcome::compare(
        ClaimId::EQ13_PRED,
        ParamPoint::nkt(n, k, t).with_u(u),
        lhs,
        Relation::Ge,
        BigRational::zero(),
    ))
}

/// `1 - (2k+6t)/n >= (1 - k/n)^{3k/4}`, compared after raising both sides to
/// the fourth power so the exponent stays integral. `lhs`/`rhs` hold the
/// fourth powers.
fn eq10(n: i64, k: i64, t: i64) -> Result<ClaimOutcome> {
    pre_tk(t, k)?;
    pre_n_2k1(n, k)?;
    let base = int(1) - ratio(2 * k + 6 * t, n);
    let negative = base.is_negative();
    let lhs = Pow::pow(base, 4u32);
    let rhs = Pow::pow(int(1) - ratio(k, n), (3 * k) as u32);
    let mut o = ClaimOutcome::compare(ClaimId::EQ10_PRED, ParamPoint::nkt(n, k, t), lhs, Relation::Ge, rhs)
        .and(!negative);
    o.note = Some("both sides raised to the fourth power".into());
    Ok(o)
}

fn eq11(n: i64, k: i64, t: i64) -> Result<ClaimOutcome> {
    pre_tk(t, k)?;
    pre_n_2k1(n, k)?;
    let lhs = ratio(k - t, n - t) * (int(1) - hm_product(n, k, t));
    let rhs = eq25_coefficient(n, k);
    Ok(ClaimOutcome::compare(ClaimId::EQ11_PRED, ParamPoint::nkt(n, k, t), lhs, Relation::Ge, rhs))
}

fn eq09(n: i64, k: i64) -> Result<ClaimOutcome> {
    ensure_pre!(k >= 2, "need k >= 2 (k = {k})");
    ensure_pre!(n >= 2 * k + 2, "need n >= 2k + 2 (n = {n}, k = {k})");
    let lhs = ratio(n - 2 * k - 2, n);
    let rhs = product(2..=k, |i| (n - k + 1 - i, n - 1 - i));
    Ok(ClaimOutcome::compare(ClaimId::EQ09_PRED, ParamPoint::nk(n, k), lhs, Relation::Ge, rhs))
}

fn eq33_35(n: i64, k: i64, s: i64, t: i64) -> Result<ClaimOutcome> {
    pre_tk(t, k)?;
    ensure_pre!(s >= 1, "need s >= 1 (s = {s})");
    ensure_pre!(n >= s + t + 2 * s * t, "need n >= s + t + 2st (n = {n})");
    ensure_pre!(n >= s + k + 2 * k * (k - 1), "need n >= s + k + 2k(k-1) (n = {n})");
    let p = ParamPoint::nkt(n, k, t).with_s(s);
    let lhs = product(0..t, |i| (n - i, n - s - i)) - int(1);
    let rhs = ratio(2 * t * s, n - s - t);
    let spread = BigRational::new(binom(n - s - k, k - 1), binom(n - s, k));
    let spread_ok = spread > ratio(k, 2 * (n - s - t));
    Ok(ClaimOutcome::compare(ClaimId::EQ33_35_PRED, p, lhs, Relation::Le, rhs).and(spread_ok))
}

/// Averaged t-degree bound for families with covering number above `s`
/// compared with the minimum t-degree of `A_0`: holds when the latter is
/// strictly larger.
fn eqhil(n: Option<i64>, k: i64, s: i64, t: i64, u: i64) -> Result<ClaimOutcome> {
    pre_tk(t, k)?;
    let n_rule = emc_ground_size(k, s, u);
    let n = n.unwrap_or(n_rule);
    let bound = emc_size_bound(n, k, s, u)?;
    let p = ParamPoint::nkt(n, k, t).with_s(s).with_u(u);
    let lhs = BigRational::from_integer(a0_t_degree(n, k, s, t)?);
    let rhs = binom_q(k, t) / binom_q(n, t) * bound.exact;
    Ok(ClaimOutcome::compare(ClaimId::EQHIL_BOUND, p, lhs, Relation::Gt, rhs))
}

fn kz_hm(n: i64, k: i64) -> Result<ClaimOutcome> {
    ensure_pre!(k >= 3 && n > 2 * k, "need k >= 3 and n > 2k (n = {n}, k = {k})");
    let lhs = BigRational::from_integer(kz_bound_unchecked(n, k, k));
    let rhs = binom_q(n - 1, k - 1) - binom_q(n - k - 1, k - 1) + BigRational::one();
    Ok(ClaimOutcome::compare(
        ClaimId::KZ_EQUALS_HM_AT_U_EQ_K,
        ParamPoint::nk(n, k),
        lhs,
        Relation::Eq,
        rhs,
    ))
}

fn a0_form(n: i64, k: i64, s: i64, t: i64) -> Result<ClaimOutcome> {
    ensure_pre!(1 <= t && t <= k, "need 1 <= t <= k (t = {t}, k = {k})");
    ensure_pre!(s >= 1 && n - s >= k, "need s >= 1 and n - s >= k (n = {n}, s = {s})");
    let lhs = BigRational::from_integer(a0_t_degree(n, k, s, t)?);
    let rhs = binom_q(k, t) / binom_q(n, t) * binom_q(n, k)
        - binom_q(k, t) / binom_q(n - s, t) * binom_q(n - s, k);
    Ok(ClaimOutcome::compare(
        ClaimId::A0_TDEGREE_FORM,
        ParamPoint::nkt(n, k, t).with_s(s),
        lhs,
        Relation::Eq,
        rhs,
    ))
}

fn hm_form(n: i64, k: i64, t: i64) -> Result<ClaimOutcome> {
    let lhs = BigRational::from_integer(hm_t_degree_bound(n, k, t)?);
    let rhs = (int(1) - hm_product(n, k, t)) * binom_q(n - t - 1, k - t - 1);
    Ok(ClaimOutcome::compare(
        ClaimId::HM_TDEGREE_FORM,
        ParamPoint::nkt(n, k, t),
        lhs,
        Relation::Eq,
        rhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_names_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(c.name().parse::<ClaimId>().unwrap(), c);
        }
        assert_eq!("EQ07".parse::<ClaimId>().unwrap(), ClaimId::EQ07_IDENTITY);
        assert_eq!("eq19".parse::<ClaimId>().unwrap(), ClaimId::EQ19_PRED);
        assert_eq!("EQ25".parse::<ClaimId>().unwrap(), ClaimId::EQ25_IDENTITY);
        assert_eq!("EQHIL".parse::<ClaimId>().unwrap(), ClaimId::EQHIL_BOUND);
        assert_eq!("EQ33".parse::<ClaimId>().unwrap(), ClaimId::EQ33_35_PRED);
        assert!(matches!("EQ99".parse::<ClaimId>(), Err(Error::UnknownClaim(_))));
    }

    #[test]
    fn eq25_values() {
        let o = eq25(10, 4).unwrap();
        assert!(o.holds);
        assert_eq!(o.lhs, int(70));
        let o = eq25(7, 3).unwrap();
        assert!(o.holds);
        assert_eq!(o.lhs, int(13));
        for k in 3..=10 {
            assert!(check_eq25(2 * k + 2, k).unwrap());
        }
        assert!(check_eq25(5, 3).is_err());
    }

    #[test]
    fn eq04_values() {
        assert!(check_eq04(12, 4, 3).unwrap());
        for k in 3..=8 {
            assert!(check_eq04(2 * k + 2, k, k).unwrap());
        }
        assert!(check_eq04(9, 4, 3).is_err());
    }

    #[test]
    fn eq07_values() {
        let o = eq07(12, 4, 1).unwrap();
        assert!(o.holds);
        assert_eq!(o.lhs, ratio(1, 3));
        assert_eq!(o.rhs, ratio(1, 3));
        for k in 2..=6 {
            for t in 1..k {
                assert!(check_eq07(2 * k + 1, k, t).unwrap());
            }
        }
    }

    #[test]
    fn cited_regime_points() {
        let at = |c, p: ParamPoint| check_case_predicates(&p, c).unwrap();
        assert!(at(ClaimId::EQ19_PRED, ParamPoint::nkt(65, 30, 1)));
        assert!(!at(ClaimId::EQ19_PRED, ParamPoint::nkt(63, 29, 1)));
        assert!(at(ClaimId::EQ19_PRED, ParamPoint::nkt(36, 15, 1)));
        assert!(at(ClaimId::EQ09_PRED, ParamPoint::nk(28, 12)));
        // t = 1 in the first case holds for any n >= 2k + 2.
        for k in 3..30 {
            assert!(at(ClaimId::EQ05_PRED, ParamPoint::nkt(2 * k + 2, k, 1)));
            assert!(at(ClaimId::EQ151_PRED, ParamPoint::nkt(2 * k + 1, k, 1)));
            assert!(at(ClaimId::EQ16_PRED, ParamPoint::nkt(2 * k + 2, k, 1)));
        }
    }

    #[test]
    fn missing_parameters_are_reported() {
        let e = check_case_predicates(&ParamPoint::nk(10, 4), ClaimId::EQ19_PRED).unwrap_err();
        assert!(matches!(e, Error::Precondition(ref m) if m.contains("`t`")), "{e}");
    }

    #[test]
    fn eqhil_uses_rule_for_n() {
        let p = ParamPoint {
            k: Some(3),
            s: Some(2),
            t: Some(1),
            u: Some(3),
            ..Default::default()
        };
        // u = s + 1 makes the stability term vanish; A_0's degree cannot
        // exceed the plain average.
        let o = evaluate(ClaimId::EQHIL_BOUND, &p).unwrap();
        assert_eq!(o.params.n, Some(13));
        assert!(!o.holds);
        let bad = ParamPoint { n: Some(14), ..p };
        assert!(evaluate(ClaimId::EQHIL_BOUND, &bad).is_err());
    }

    #[test]
    fn identities_hold_on_small_grid() {
        for k in 3..=6i64 {
            for n in 2 * k + 1..=20 {
                assert!(check_case_predicates(&ParamPoint::nk(n, k), ClaimId::KZ_EQUALS_HM_AT_U_EQ_K).unwrap());
                for t in 1..k {
                    let p = ParamPoint::nkt(n, k, t);
                    assert!(check_case_predicates(&p, ClaimId::HM_TDEGREE_FORM).unwrap());
                    assert!(check_case_predicates(&p, ClaimId::EQ02_PRED).unwrap());
                    for s in 1..=(n - k).min(4) {
                        assert!(check_case_predicates(&p.with_s(s), ClaimId::A0_TDEGREE_FORM).unwrap());
                    }
                }
                for u in 3..=k {
                    assert!(check_case_predicates(&ParamPoint::nk(n, k).with_u(u), ClaimId::EQ01_BOUND).unwrap());
                }
            }
        }
    }
}
