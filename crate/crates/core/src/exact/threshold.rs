//! Scans a claim along an affine rule `n = a*k + b` to find the smallest `k`
//! from which it holds through the end of the window.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::claims::{evaluate, ClaimId, ParamPoint};
use crate::error::{Error, Result};

pub const SCAN_MIN_K: i64 = 3;
pub const SCAN_MAX_K: i64 = 200;

/// `n = a*k + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineRule {
    pub a: i64,
    pub b: i64,
}

impl AffineRule {
    pub fn new(a: i64, b: i64) -> Self {
        AffineRule { a, b }
    }

    pub fn at(self, k: i64) -> i64 {
        self.a * k + self.b
    }
}

impl fmt::Display for AffineRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, b) => write!(f, "{b}"),
            (a, 0) => write!(f, "{a}k"),
            (a, b) if b < 0 => write!(f, "{a}k-{}", -b),
            (a, b) => write!(f, "{a}k+{b}"),
        }
    }
}

impl FromStr for AffineRule {
    type Err = Error;

    /// Parses `2k+5`, `k`, `3k-1`, `k+8`, or a constant such as `40`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("`{s}` is not an affine rule in k"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let compact = compact.to_ascii_lowercase();
        let Some(kpos) = compact.find('k') else {
            return compact
                .parse::<i64>()
                .map(|b| AffineRule::new(0, b))
                .map_err(|_| bad());
        };
        let coeff = compact[..kpos].trim_end_matches('*');
        let a = match coeff {
            "" | "+" => 1,
            "-" => -1,
            c => c.parse::<i64>().map_err(|_| bad())?,
        };
        let rest = &compact[kpos + 1..];
        let b = if rest.is_empty() {
            0
        } else {
            let (sign, digits) = rest.split_at(1);
            let v = digits.parse::<i64>().map_err(|_| bad())?;
            match sign {
                "+" => v,
                "-" => -v,
                _ => return Err(bad()),
            }
        };
        Ok(AffineRule::new(a, b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdReport {
    pub claim: ClaimId,
    pub rule: String,
    pub t: Option<i64>,
    /// Smallest k such that the claim holds for every scanned k' >= k.
    pub threshold: i64,
    /// Some k below the threshold also satisfies the claim.
    pub non_monotone: bool,
    /// Values of k below the threshold where the claim holds.
    pub sporadic: Vec<i64>,
    pub window: (i64, i64),
}

/// Scans `k` in `[3, 200]`; points whose preconditions fail count as not
/// holding. `extra` supplies `s`/`u` for claims that need them.
pub fn find_threshold(
    claim: ClaimId,
    rule: AffineRule,
    t: Option<i64>,
    extra: ParamPoint,
) -> Result<ThresholdReport> {
    find_threshold_in(claim, rule, t, extra, SCAN_MIN_K, SCAN_MAX_K)
}

pub fn find_threshold_in(
    claim: ClaimId,
    rule: AffineRule,
    t: Option<i64>,
    extra: ParamPoint,
    lo: i64,
    hi: i64,
) -> Result<ThresholdReport> {
    let holds: Vec<(i64, bool)> = (lo..=hi)
        .map(|k| {
            let point = ParamPoint {
                n: Some(rule.at(k)),
                k: Some(k),
                t,
                ..extra
            };
            (k, evaluate(claim, &point).map(|o| o.holds).unwrap_or(false))
        })
        .collect();

    let first_of_tail = holds
        .iter()
        .rev()
        .take_while(|(_, h)| *h)
        .last()
        .map(|(k, _)| *k)
        .ok_or_else(|| Error::NeverHolds(format!("{claim} along n = {rule} at k = {hi}")))?;
    let sporadic: Vec<i64> = holds
        .iter()
        .filter(|(k, h)| *h && *k < first_of_tail)
        .map(|(k, _)| *k)
        .collect();

    Ok(ThresholdReport {
        claim,
        rule: rule.to_string(),
        t,
        threshold: first_of_tail,
        non_monotone: !sporadic.is_empty(),
        sporadic,
        window: (lo, hi),
    })
}
