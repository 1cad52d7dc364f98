//! The named extremal families, built with fixed anchors so that output is
//! deterministic. Use [`Family::relabel`] for isomorphic copies.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ensure_pre, Result};
use crate::family::{binom_u64, full_mask, k_subsets, Family, GroundSet};

/// Refuse to materialize layers bigger than this.
const MAX_MEMBERS: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum ConstructionId {
    Star { n: usize, k: usize, center: usize },
    HiltonMilner { n: usize, k: usize, u: usize },
    A0 { n: usize, k: usize, s: usize },
    Ak { n: usize, k: usize, s: usize },
    FullLayer { n: usize, k: usize },
}

impl ConstructionId {
    pub fn build(self) -> Result<Family> {
        match self {
            ConstructionId::Star { n, k, center } => star(n, k, center),
            ConstructionId::HiltonMilner { n, k, u } => hilton_milner(n, k, u),
            ConstructionId::A0 { n, k, s } => a0(n, k, s),
            ConstructionId::Ak { n, k, s } => ak(k, s, n),
            ConstructionId::FullLayer { n, k } => full_layer(n, k),
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstructionId::Star { n, k, center } => write!(f, "star(n={n}, k={k}, center={center})"),
            ConstructionId::HiltonMilner { n, k, u } => write!(f, "H_{u}(n={n}, k={k})"),
            ConstructionId::A0 { n, k, s } => write!(f, "A0(n={n}, k={k}, s={s})"),
            ConstructionId::Ak { n, k, s } => write!(f, "Ak(k={k}, s={s}) in [{n}]"),
            ConstructionId::FullLayer { n, k } => write!(f, "C([{n}], {k})"),
        }
    }
}

fn layer_filtered(n: usize, k: usize, keep: impl Fn(u64) -> bool) -> Result<Family> {
    GroundSet::new(n)?;
    ensure_pre!(k <= n, "need k <= n (k = {k}, n = {n})");
    ensure_pre!(
        binom_u64(n, k) <= MAX_MEMBERS,
        "C({n}, {k}) exceeds the materialization limit"
    );
    Ok(Family::from_masks_unchecked(
        n,
        k,
        k_subsets(n, k).filter(|&m| keep(m)).collect(),
    ))
}

/// All k-sets containing `center`.
pub fn star(n: usize, k: usize, center: usize) -> Result<Family> {
    ensure_pre!(1 <= k && k <= n, "need 1 <= k <= n (k = {k}, n = {n})");
    ensure_pre!(
        (1..=n).contains(&center),
        "center {center} must lie in [1, {n}]"
    );
    let bit = 1u64 << (center - 1);
    layer_filtered(n, k, |m| m & bit != 0)
}

/// `H_u`: k-sets containing `[2, u+1]`, together with k-sets containing 1
/// that meet `[2, u+1]`.
pub fn hilton_milner(n: usize, k: usize, u: usize) -> Result<Family> {
    ensure_pre!(
        2 <= u && u <= k && 2 * k <= n,
        "need 2 <= u <= k <= n - k (n = {n}, k = {k}, u = {u})"
    );
    let anchor = full_mask(u + 1) & !1;
    layer_filtered(n, k, |m| {
        m & anchor == anchor || (m & 1 != 0 && m & anchor != 0)
    })
}

/// `A_0(n, k, s)`: k-sets meeting `[s]`.
pub fn a0(n: usize, k: usize, s: usize) -> Result<Family> {
    ensure_pre!(
        1 <= s && s < n,
        "need 1 <= s <= n - 1 (s = {s}, n = {n})"
    );
    let head = full_mask(s);
    layer_filtered(n, k, |m| m & head != 0)
}

/// `A_k(k, s)`: every k-subset of `[k(s+1) - 1]`, inside ground set `[n]`.
pub fn ak(k: usize, s: usize, n: usize) -> Result<Family> {
    ensure_pre!(k >= 1 && s >= 1, "need k, s >= 1 (k = {k}, s = {s})");
    let m = k * (s + 1) - 1;
    ensure_pre!(n >= m, "need n >= k(s+1) - 1 = {m} (n = {n})");
    let inner = layer_filtered(m, k, |_| true)?;
    Family::from_sets(n, k, inner.sets().iter().copied())
}

/// Every k-subset of `[n]`.
pub fn full_layer(n: usize, k: usize) -> Result<Family> {
    layer_filtered(n, k, |_| true)
}
