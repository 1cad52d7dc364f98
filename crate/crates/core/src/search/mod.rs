//! Exhaustive optimization over families of k-subsets of a small ground set.
//!
//! Since t-degrees only grow when sets are added, the maximum of the minimum
//! t-degree under a hereditary constraint (intersecting, `nu <= s`) is
//! attained by a maximal family, and a non-trivial family stays non-trivial
//! when extended. The engine therefore walks maximal families only, with
//! `[k]` fixed as a member and an optimistic completion bound.
//!
//! Sizes are limited by a budget table:
//!
//! | mode                  | (n, k)                       | node cap |
//! |-----------------------|------------------------------|----------|
//! | single family         | k <= 2, n <= 12              | 5e7      |
//! | single family         | k = 3, n <= 9                | 2e8      |
//! | single family         | k = 4, n <= 9                | 1e9      |
//! | pair (Problem 2)      | k <= 3, n <= 8               | 1e9      |
//! | maximal enumeration   | k <= 4, n <= 9 (k <= 2: 12)  | as above |
//!
//! `EXTSET_BUDGET_OVERRIDE` replaces the node cap. A search that runs out of
//! nodes reports `status: timeout` with whatever it found; enumeration
//! refuses instead.

mod bits;
pub mod canon;
mod engine;
mod pair;
mod pool;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_pre, Error, Result};
use crate::exact::{a0_t_degree, binom, hm_t_degree_bound};
use crate::family::{binom_u64, Family};
use crate::invariants::{are_cross_intersecting, is_intersecting, matching_number, min_t_degree};

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, Labeling, MAX_CANON_N};

use bits::CAPACITY;
use engine::{Engine, Node, Rule, Universe, INTERSECTING};
use pair::PairEngine;
use pool::{Shared, SEED_TASK};

pub const BUDGET_ENV: &str = "EXTSET_BUDGET_OVERRIDE";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSet {
    pub n: usize,
    pub k: usize,
    #[serde(default = "one")]
    pub t: usize,
    #[serde(default)]
    pub intersecting: bool,
    #[serde(default)]
    pub non_trivial: bool,
    #[serde(default)]
    pub matching_at_most: Option<usize>,
    /// Disjoint cross-intersecting pairs instead of single families.
    #[serde(default)]
    pub pair_mode: bool,
}

fn one() -> usize {
    1
}

impl ConstraintSet {
    pub fn new(n: usize, k: usize, t: usize) -> Self {
        ConstraintSet {
            n,
            k,
            t,
            intersecting: false,
            non_trivial: false,
            matching_at_most: None,
            pair_mode: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (n, k, t) = (self.n, self.k, self.t);
        ensure_pre!(1 <= k && k <= n, "need 1 <= k <= n (n = {n}, k = {k})");
        ensure_pre!(n <= MAX_CANON_N, "search needs n <= {MAX_CANON_N} (n = {n})");
        if self.pair_mode {
            ensure_pre!(
                !self.intersecting && !self.non_trivial && self.matching_at_most.is_none(),
                "pair mode excludes the single-family constraints"
            );
            return Ok(());
        }
        ensure_pre!(1 <= t && t < k, "need 1 <= t < k (t = {t}, k = {k})");
        if let Some(s) = self.matching_at_most {
            ensure_pre!(s >= 1, "matching bound must be at least 1");
        }
        if self.non_trivial && k == 1 && (self.intersecting || self.matching_at_most == Some(1)) {
            return Err(Error::Infeasible(
                "an intersecting family of singletons is a single star".into(),
            ));
        }
        Ok(())
    }

    fn rule(&self) -> Rule {
        match self.matching_at_most {
            _ if self.intersecting => INTERSECTING,
            Some(1) => INTERSECTING,
            Some(s) => Rule::MatchingAtMost(s),
            None => Rule::Free,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    MaxMinTDegree,
    MaxMinPairSize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchProblem {
    pub constraints: ConstraintSet,
    pub objective: Objective,
    /// Value the optimum is compared against, e.g. a theorem's right side.
    #[serde(default, with = "ratio_str")]
    pub reference_bound: Option<BigRational>,
    /// Node cap; defaults to the budget table.
    #[serde(default)]
    pub budget: Option<u64>,
}

impl SearchProblem {
    pub fn new(constraints: ConstraintSet) -> Self {
        let objective = if constraints.pair_mode {
            Objective::MaxMinPairSize
        } else {
            Objective::MaxMinTDegree
        };
        SearchProblem {
            constraints,
            objective,
            reference_bound: None,
            budget: None,
        }
    }

    /// Intersecting families; reference `C(n-t-1, k-t-1)`.
    pub fn ekr_degree(n: usize, k: usize, t: usize) -> Self {
        let mut c = ConstraintSet::new(n, k, t);
        c.intersecting = true;
        let mut p = SearchProblem::new(c);
        p.reference_bound = Some(int_ratio(binom(
            n as i64 - t as i64 - 1,
            k as i64 - t as i64 - 1,
        )));
        p
    }

    /// Non-trivial intersecting families; reference `delta_t(H_k)`.
    pub fn hm_degree(n: usize, k: usize, t: usize) -> Self {
        let mut c = ConstraintSet::new(n, k, t);
        c.intersecting = true;
        c.non_trivial = true;
        let mut p = SearchProblem::new(c);
        p.reference_bound = hm_t_degree_bound(n as i64, k as i64, t as i64)
            .ok()
            .map(int_ratio);
        p
    }

    /// Families with `nu <= s`; reference `delta_t(A_0(n, k, s))`.
    pub fn emc_degree(n: usize, k: usize, s: usize, t: usize) -> Self {
        let mut c = ConstraintSet::new(n, k, t);
        c.matching_at_most = Some(s);
        let mut p = SearchProblem::new(c);
        p.reference_bound = a0_t_degree(n as i64, k as i64, s as i64, t as i64)
            .ok()
            .map(int_ratio);
        p
    }

    /// Problem 1: non-trivial intersecting at `n = 2k + 1`, against `delta(H_k)`.
    pub fn problem1(k: usize) -> Self {
        SearchProblem::hm_degree(2 * k + 1, k, 1)
    }

    /// Problem 2: disjoint cross-intersecting pairs, against `C(n-1, k-1) / 2`.
    pub fn problem2(n: usize, k: usize) -> Self {
        let mut c = ConstraintSet::new(n, k, 1);
        c.pair_mode = true;
        let mut p = SearchProblem::new(c);
        p.reference_bound = Some(BigRational::new(binom(n as i64 - 1, k as i64 - 1), BigInt::from(2)));
        p
    }

    pub fn validate(&self) -> Result<()> {
        self.constraints.validate()?;
        ensure_pre!(
            (self.objective == Objective::MaxMinPairSize) == self.constraints.pair_mode,
            "objective {:?} does not match pair_mode = {}",
            self.objective,
            self.constraints.pair_mode
        );
        Ok(())
    }

    /// Node cap after the budget table, the problem and the environment.
    pub fn node_cap(&self) -> Result<u64> {
        let c = &self.constraints;
        let (n, k) = (c.n, c.k);
        let table = if c.pair_mode {
            (k <= 3 && n <= 8).then_some(1_000_000_000)
        } else {
            match k {
                1 | 2 if n <= 12 => Some(50_000_000),
                3 if n <= 9 => Some(200_000_000),
                4 if n <= 9 => Some(1_000_000_000),
                _ => None,
            }
        };
        let Some(table) = table else {
            return Err(Error::BudgetExceeded(format!(
                "(n, k) = ({n}, {k}) is outside the search budget table"
            )));
        };
        Ok(env_cap().unwrap_or(self.budget.unwrap_or(table)))
    }
}

fn env_cap() -> Option<u64> {
    std::env::var(BUDGET_ENV).ok()?.trim().parse().ok()
}

fn int_ratio(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Exact,
    Timeout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Family { family: Family },
    Pair { a: Family, b: Family },
}

/// The theorem whose hypotheses hold at the searched parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremCheck {
    pub theorem: String,
    #[serde(with = "big_str")]
    pub bound: BigInt,
    /// False would be a counterexample.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    pub problem: SearchProblem,
    pub status: Status,
    pub optimum: Option<u64>,
    pub witness: Option<Witness>,
    pub canonical_form: Option<CanonicalForm>,
    pub nodes_expanded: u64,
    pub isomorph_rejections: u64,
    /// `optimum` compared to the reference bound: -1, 0 or 1.
    pub versus_reference: Option<i8>,
    pub theorem: Option<TheoremCheck>,
}

impl SearchResult {
    /// Whether a completed search contradicts a theorem.
    pub fn is_counterexample(&self) -> bool {
        self.theorem.as_ref().is_some_and(|t| !t.holds)
    }
}

/// Maximize the objective of `problem` on `threads` workers. The optimum and
/// the witness do not depend on `threads`.
pub fn solve(problem: &SearchProblem, threads: usize) -> Result<SearchResult> {
    problem.validate()?;
    match problem.objective {
        Objective::MaxMinTDegree => maximize_min_t_degree(problem, threads),
        Objective::MaxMinPairSize => maximize_pair(problem, threads),
    }
}

pub fn maximize_min_t_degree(problem: &SearchProblem, threads: usize) -> Result<SearchResult> {
    problem.validate()?;
    ensure_pre!(
        problem.objective == Objective::MaxMinTDegree,
        "pair problems go through probe_problem2 or solve"
    );
    let c = problem.constraints;
    let cap = problem.node_cap()?;
    check_universe(c.n, c.k)?;
    let u = Universe::new(c.n, c.k, c.t);
    let plans = plans(&u, &c);
    let shared = Shared::new(cap);
    if let Some(seed) = seed_value(&c) {
        shared.offer(seed, SEED_TASK);
    }
    let tasks: Vec<(usize, Node)> = plans
        .iter()
        .enumerate()
        .flat_map(|(e, (engine, root))| engine.tasks(*root).into_iter().map(move |t| (e, t)))
        .collect();
    let results = pool::run(tasks, threads, |i, (e, node)| plans[*e].0.maximize(i, node, &shared));
    let best = pick(results);
    let status = if shared.aborted() { Status::Timeout } else { Status::Exact };
    let Some((value, members)) = best else {
        if status == Status::Exact {
            return Err(Error::Infeasible(format!(
                "no family over (n, k) = ({}, {}) meets the constraints",
                c.n, c.k
            )));
        }
        return Ok(empty_result(problem, shared.nodes()));
    };
    let fam = u.family(&members);
    let lab = canonical_labeling(&fam)?;
    let fam = fam.relabel(&lab.perm)?;
    validate_family(&c, &fam, value as usize)?;
    let optimum = value as u64;
    Ok(SearchResult {
        problem: problem.clone(),
        status,
        optimum: Some(optimum),
        witness: Some(Witness::Family { family: fam }),
        canonical_form: Some(lab.form),
        nodes_expanded: shared.nodes(),
        isomorph_rejections: 0,
        versus_reference: compare(optimum, &problem.reference_bound),
        theorem: (status == Status::Exact)
            .then(|| theorem_check(&c, optimum))
            .flatten(),
    })
}

/// Engines and roots covering every feasible family up to relabeling.
///
/// For pairwise intersecting families, split on the least pairwise
/// intersection `j`: relabel so that `[k]` and `[j] + [k+1, 2k-j]` realize
/// it, then every other member meets both in at least `j` elements. Leaves
/// are only maximal within their case, which is fine for the optimum but
/// not for enumeration.
fn plans<'a>(u: &'a Universe, c: &ConstraintSet) -> Vec<(Engine<'a>, Node)> {
    let (n, k) = (c.n, c.k);
    match c.rule() {
        Rule::MeetAtLeast(1) => (1..=k)
            .filter(|&j| 2 * k - j <= n)
            .map(|j| {
                let e = Engine::new(u, Rule::MeetAtLeast(j), c.non_trivial);
                let low = (1u64 << j) - 1;
                let high = ((1u64 << (2 * k - j)) - 1) & !((1u64 << k) - 1);
                let b = u.index_of(low | high).expect("k-set in universe");
                let root = if b == 0 { e.root(&[0]) } else { e.root(&[0, b]) };
                (e, root)
            })
            .collect(),
        rule => {
            let e = Engine::new(u, rule, c.non_trivial);
            let root = e.root(&[0]);
            vec![(e, root)]
        }
    }
}

fn maximize_pair(problem: &SearchProblem, threads: usize) -> Result<SearchResult> {
    let c = problem.constraints;
    let cap = problem.node_cap()?;
    check_universe(c.n, c.k)?;
    let u = Universe::new(c.n, c.k, 1);
    let engine = PairEngine { u: &u };
    let shared = Shared::new(cap);
    let tasks = engine.tasks();
    let results = pool::run(tasks, threads, |i, node| engine.maximize(i, node, &shared));
    let best = pick(results);
    let status = if shared.aborted() { Status::Timeout } else { Status::Exact };
    let Some((value, node)) = best else {
        return Ok(empty_result(problem, shared.nodes()));
    };
    let (a, b) = engine.sides(&node);
    let (a, b) = (u.family(&a), u.family(&b));
    let (a, b, form) = canonical_pair(&a, &b)?;
    validate_pair(&a, &b, value as usize)?;
    let optimum = value as u64;
    Ok(SearchResult {
        problem: problem.clone(),
        status,
        optimum: Some(optimum),
        witness: Some(Witness::Pair { a, b }),
        canonical_form: Some(form),
        nodes_expanded: shared.nodes(),
        isomorph_rejections: 0,
        versus_reference: compare(optimum, &problem.reference_bound),
        theorem: None,
    })
}

/// Maximum of `delta(F)` over non-trivial intersecting `F` at `n = 2k + 1`.
/// Reported against `delta(H_k)`; nothing is asserted.
pub fn probe_problem1(k: usize, threads: usize) -> Result<SearchResult> {
    ensure_pre!((2..=4).contains(&k), "problem 1 probes need 2 <= k <= 4 (k = {k})");
    maximize_min_t_degree(&SearchProblem::problem1(k), threads)
}

/// Maximum of `min(|A|, |B|)` over disjoint cross-intersecting pairs.
/// Reported against `C(n-1, k-1) / 2`; nothing is asserted.
pub fn probe_problem2(n: usize, k: usize, threads: usize) -> Result<SearchResult> {
    solve(&SearchProblem::problem2(n, k), threads)
}

/// One representative per isomorphism class, ordered by canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub classes: Vec<Family>,
    pub nodes_expanded: u64,
    pub isomorph_rejections: u64,
}

/// Every maximal intersecting subfamily of `C([n], k)` up to isomorphism.
/// Each class is returned in its canonical labeling.
pub fn enumerate_maximal_intersecting(n: usize, k: usize, threads: usize) -> Result<Enumeration> {
    let mut c = ConstraintSet::new(n, k, 1);
    c.intersecting = true;
    ensure_pre!(1 <= k && k <= n, "need 1 <= k <= n (n = {n}, k = {k})");
    ensure_pre!(n <= MAX_CANON_N, "search needs n <= {MAX_CANON_N} (n = {n})");
    let problem = SearchProblem::new(c);
    let cap = problem.node_cap()?;
    check_universe(n, k)?;
    let u = Universe::new(n, k, 1);
    let engine = Engine::new(&u, INTERSECTING, false);
    let shared = Shared::new(cap);
    let tasks = engine.tasks(engine.root(&[0]));
    let per_task = pool::run(tasks, threads, |_, node| {
        let mut seen: BTreeMap<CanonicalForm, Family> = BTreeMap::new();
        let mut dup = 0u64;
        engine.enumerate(node, &shared, &mut |leaf| {
            let fam = u.family(leaf);
            let items: Vec<(u8, u64)> = fam.masks().map(|m| (0, m)).collect();
            let lab = canon::canonize(n, k, &items);
            if seen.contains_key(&lab.form) {
                dup += 1;
            } else {
                seen.insert(lab.form, fam.relabel_unchecked(&lab.perm));
            }
        });
        (seen, dup)
    });
    if shared.aborted() {
        return Err(Error::BudgetExceeded(format!(
            "enumeration at (n, k) = ({n}, {k}) exceeded {cap} nodes"
        )));
    }
    let mut all: BTreeMap<CanonicalForm, Family> = BTreeMap::new();
    let mut rejections = 0;
    for (seen, dup) in per_task {
        rejections += dup;
        for (form, fam) in seen {
            if all.contains_key(&form) {
                rejections += 1;
            } else {
                all.insert(form, fam);
            }
        }
    }
    for fam in all.values() {
        if !is_intersecting(fam) {
            return Err(Error::Unsound(format!("{fam:?} is not intersecting")));
        }
    }
    Ok(Enumeration {
        classes: all.into_values().collect(),
        nodes_expanded: shared.nodes(),
        isomorph_rejections: rejections,
    })
}

/// Canonical form of a pair; the unordered pair, so the sides may swap.
pub fn canonical_pair(a: &Family, b: &Family) -> Result<(Family, Family, CanonicalForm)> {
    a.check_same_shape(b)?;
    ensure_pre!(a.n() <= MAX_CANON_N, "canonical forms need n <= {MAX_CANON_N}");
    let items = |x: &Family, y: &Family| -> Vec<(u8, u64)> {
        x.masks().map(|m| (0, m)).chain(y.masks().map(|m| (1, m))).collect()
    };
    let ab = canon::canonize(a.n(), a.k(), &items(a, b));
    let ba = canon::canonize(a.n(), a.k(), &items(b, a));
    let (x, y, lab) = if ab.form <= ba.form { (a, b, ab) } else { (b, a, ba) };
    Ok((x.relabel(&lab.perm)?, y.relabel(&lab.perm)?, lab.form))
}

fn check_universe(n: usize, k: usize) -> Result<()> {
    let m = binom_u64(n, k);
    if m as usize > CAPACITY {
        return Err(Error::BudgetExceeded(format!(
            "C({n}, {k}) = {m} candidate sets exceeds {CAPACITY}"
        )));
    }
    Ok(())
}

/// Highest value, lowest task among equals.
fn pick<W>(results: Vec<Option<(u32, W)>>) -> Option<(u32, W)> {
    let mut best: Option<(u32, W)> = None;
    for (value, w) in results.into_iter().flatten() {
        if best.as_ref().map_or(true, |(b, _)| value > *b) {
            best = Some((value, w));
        }
    }
    best
}

/// A lower bound known to be attained, so only strictly worse subtrees are
/// cut by it.
fn seed_value(c: &ConstraintSet) -> Option<u32> {
    let (n, k, t) = (c.n as i64, c.k as i64, c.t as i64);
    let v = match c.rule() {
        // The star through [t+1] is intersecting and trivial.
        Rule::MeetAtLeast(1) if !c.non_trivial => binom(n - t - 1, k - t - 1),
        // A_0 has nu <= s when n >= (s+1)k; it is non-trivial for s >= 2.
        Rule::MatchingAtMost(s) if n >= (s as i64 + 1) * k => {
            a0_t_degree(n, k, s as i64, t).ok()?
        }
        _ => return None,
    };
    u32::try_from(v).ok()
}

fn empty_result(problem: &SearchProblem, nodes: u64) -> SearchResult {
    SearchResult {
        problem: problem.clone(),
        status: Status::Timeout,
        optimum: None,
        witness: None,
        canonical_form: None,
        nodes_expanded: nodes,
        isomorph_rejections: 0,
        versus_reference: None,
        theorem: None,
    }
}

fn compare(optimum: u64, reference: &Option<BigRational>) -> Option<i8> {
    let r = reference.as_ref()?;
    let o = BigRational::from_integer(BigInt::from(optimum));
    Some(match o.cmp(r) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    })
}

fn validate_family(c: &ConstraintSet, fam: &Family, value: usize) -> Result<()> {
    let fail = |what: &str| Err(Error::Unsound(format!("{what}: {fam:?}")));
    if c.intersecting && !is_intersecting(fam) {
        return fail("not intersecting");
    }
    if c.non_trivial && fam.common_intersection().map_or(true, |m| m != 0) {
        return fail("trivial");
    }
    if let Some(s) = c.matching_at_most {
        if matching_number(fam) > s {
            return fail("matching number too large");
        }
    }
    if min_t_degree(fam, c.t)?.min != value {
        return fail("minimum t-degree differs from the optimum");
    }
    Ok(())
}

fn validate_pair(a: &Family, b: &Family, value: usize) -> Result<()> {
    if a.iter().any(|s| b.contains(*s)) {
        return Err(Error::Unsound("pair is not disjoint".into()));
    }
    if !are_cross_intersecting(a, b)? {
        return Err(Error::Unsound("pair is not cross-intersecting".into()));
    }
    if a.len().min(b.len()) != value {
        return Err(Error::Unsound("pair size differs from the optimum".into()));
    }
    Ok(())
}

/// The degree theorem applicable at these parameters, if any, with the
/// verdict on `optimum`.
fn theorem_check(c: &ConstraintSet, optimum: u64) -> Option<TheoremCheck> {
    let (n, k, t) = (c.n as i64, c.k as i64, c.t as i64);
    let (theorem, bound) = match c.rule() {
        Rule::MeetAtLeast(1) if !c.non_trivial => {
            if t == 1 && n > 2 * k {
                ("degree-ekr", binom(n - 2, k - 2))
            } else if (n - 2 * k) * (k - t) >= 3 * t * k {
                ("t-degree-ekr", binom(n - t - 1, k - t - 1))
            } else {
                return None;
            }
        }
        Rule::MeetAtLeast(1) => {
            let regime = if t == 1 {
                (k >= 30 && n >= 2 * k + 5)
                    || ((k == 4 || k == 5) && n >= 30 * k * k)
                    || (k >= 6 && n >= 4 * k * k)
            } else {
                4 * (t + 2) <= k && n >= 2 * k + 14 * t
            };
            if !regime {
                return None;
            }
            ("t-degree-hilton-milner", hm_t_degree_bound(n, k, t).ok()?)
        }
        Rule::MatchingAtMost(s) => {
            let s = s as i64;
            let thm17 = n >= 2 * k * k && if t == 1 { k >= 3 * s } else { k >= 5 * s * t };
            let hz = t == 1 && n >= 3 * k * k * (s + 1);
            if !(thm17 || hz) {
                return None;
            }
            ("t-degree-emc", a0_t_degree(n, k, s, t).ok()?)
        }
        Rule::Free | Rule::MeetAtLeast(_) => return None,
    };
    let holds = BigInt::from(optimum) <= bound;
    Some(TheoremCheck {
        theorem: theorem.into(),
        bound,
        holds,
    })
}

mod big_str {
    use num_bigint::BigInt;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }
}

mod ratio_str {
    use num_rational::BigRational;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(r) => s.serialize_str(&r.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigRational>, D::Error> {
        let raw: Option<String> = Option::deserialize(d)?;
        raw.map(|s| s.trim().parse().map_err(D::Error::custom)).transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{a0, star};

    #[test]
    fn ekr_7_3() {
        let r = maximize_min_t_degree(&SearchProblem::ekr_degree(7, 3, 1), 1).unwrap();
        assert_eq!(r.status, Status::Exact);
        assert_eq!(r.optimum, Some(5));
        assert_eq!(r.canonical_form, Some(canonical_form(&star(7, 3, 1).unwrap()).unwrap()));
        assert_eq!(r.versus_reference, Some(0));
        assert!(r.theorem.unwrap().holds);
    }

    #[test]
    fn n_equal_2k_beats_the_bound() {
        let r = maximize_min_t_degree(&SearchProblem::ekr_degree(6, 3, 1), 2).unwrap();
        assert!(r.optimum.unwrap() >= 5);
        assert!(r.theorem.is_none());
    }

    #[test]
    fn emc_8_2() {
        let r = maximize_min_t_degree(&SearchProblem::emc_degree(8, 2, 2, 1), 2).unwrap();
        assert_eq!(r.optimum, Some(2));
        assert_eq!(r.canonical_form, Some(canonical_form(&a0(8, 2, 2).unwrap()).unwrap()));
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_maximal_intersecting(5, 2, 1).unwrap().classes.len(), 2);
        assert_eq!(enumerate_maximal_intersecting(4, 2, 2).unwrap().classes.len(), 2);
    }

    #[test]
    fn budget_table_refuses() {
        let e = maximize_min_t_degree(&SearchProblem::ekr_degree(10, 3, 1), 1).unwrap_err();
        assert!(matches!(e, Error::BudgetExceeded(_)));
        let mut p = SearchProblem::problem2(5, 2);
        p.constraints.intersecting = true;
        assert!(matches!(solve(&p, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn problem2_small() {
        let r = probe_problem2(5, 2, 1).unwrap();
        assert_eq!(r.status, Status::Exact);
        assert!(r.optimum.unwrap() >= 1);
    }
}
