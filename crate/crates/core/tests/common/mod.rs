//! Slow, obviously-correct reference implementations. Nothing here calls
//! into the crate's own algorithms except to build inputs.
#![allow(dead_code)]

pub mod schema;

use extset::{Family, KSet};

/// All k-subsets of [n] as sorted 1-indexed element lists, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for e in start..=n {
            cur.push(e);
            go(e + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn mask(elems: &[usize]) -> u64 {
    elems.iter().fold(0, |m, &e| m | 1 << (e - 1))
}

pub fn to_family(n: usize, k: usize, masks: &[u64]) -> Family {
    Family::from_sets(n, k, masks.iter().map(|&m| KSet::from_mask(m, n).unwrap())).unwrap()
}

pub fn masks(f: &Family) -> Vec<u64> {
    f.iter().map(|s| s.mask()).collect()
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// min over t-subsets T of [n] of #{F : T ⊆ F}.
pub fn min_t_degree(n: usize, t: usize, fam: &[u64]) -> usize {
    subsets(n, t)
        .iter()
        .map(|ts| {
            let tm = mask(ts);
            fam.iter().filter(|&&f| f & tm == tm).count()
        })
        .min()
        .unwrap()
}

pub fn degrees(n: usize, fam: &[u64]) -> Vec<usize> {
    (0..n)
        .map(|i| fam.iter().filter(|&&f| f >> i & 1 == 1).count())
        .collect()
}

pub fn intersecting(fam: &[u64]) -> bool {
    fam.iter().all(|&a| fam.iter().all(|&b| a & b != 0))
}

pub fn trivial(fam: &[u64]) -> bool {
    fam.iter().fold(u64::MAX, |acc, &m| acc & m) != 0
}

/// Largest pairwise disjoint subcollection, by plain include/exclude.
pub fn matching_number(fam: &[u64]) -> usize {
    fn go(fam: &[u64], used: u64) -> usize {
        match fam.split_first() {
            None => 0,
            Some((&f, rest)) => {
                let skip = go(rest, used);
                if f & used == 0 {
                    skip.max(1 + go(rest, used | f))
                } else {
                    skip
                }
            }
        }
    }
    go(fam, 0)
}

/// Smallest element set meeting every member, by size then lexicographic.
pub fn covering_number(n: usize, fam: &[u64]) -> usize {
    (0..=n)
        .find(|&c| {
            subsets(n, c)
                .iter()
                .any(|s| fam.iter().all(|&f| f & mask(s) != 0))
        })
        .unwrap()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// `perm[i]` is the 0-indexed image of element `i`.
pub fn apply(perm: &[usize], m: u64) -> u64 {
    (0..perm.len())
        .filter(|&i| m >> i & 1 == 1)
        .fold(0, |acc, i| acc | 1 << perm[i])
}

/// Lexicographically least sorted image over all n! relabelings.
pub fn brute_canonical(n: usize, fam: &[u64], perms: &[Vec<usize>]) -> Vec<u64> {
    perms
        .iter()
        .map(|p| {
            let mut v: Vec<u64> = fam.iter().map(|&m| apply(p, m)).collect();
            v.sort_unstable();
            v
        })
        .min()
        .unwrap_or_default()
        .into_iter()
        .chain(std::iter::once(n as u64))
        .collect()
}

/// Every subfamily satisfying a hereditary predicate, checked on each
/// extension; `visit` sees each one once.
pub fn hereditary_families(
    universe: &[u64],
    ok: &dyn Fn(&[u64]) -> bool,
    visit: &mut dyn FnMut(&[u64]),
) {
    fn go(
        universe: &[u64],
        i: usize,
        cur: &mut Vec<u64>,
        ok: &dyn Fn(&[u64]) -> bool,
        visit: &mut dyn FnMut(&[u64]),
    ) {
        if i == universe.len() {
            visit(cur);
            return;
        }
        go(universe, i + 1, cur, ok, visit);
        cur.push(universe[i]);
        if ok(cur) {
            go(universe, i + 1, cur, ok, visit);
        }
        cur.pop();
    }
    go(universe, 0, &mut Vec::new(), ok, visit);
}

pub fn universe(n: usize, k: usize) -> Vec<u64> {
    subsets(n, k).iter().map(|s| mask(s)).collect()
}

/// The constraint presets, as plain predicates on a family.
#[derive(Debug, Clone, Copy)]
pub enum Preset {
    Intersecting,
    NonTrivialIntersecting,
    MatchingAtMost(usize),
}

/// Unpruned maximum of the minimum t-degree over all nonempty feasible
/// subfamilies.
pub fn brute_max_min_t_degree(n: usize, k: usize, t: usize, preset: Preset) -> Option<usize> {
    let uni = universe(n, k);
    let hereditary: Box<dyn Fn(&[u64]) -> bool> = match preset {
        Preset::Intersecting | Preset::NonTrivialIntersecting => {
            // Only the newest member needs checking.
            Box::new(|f: &[u64]| {
                let (last, rest) = f.split_last().unwrap();
                rest.iter().all(|&a| a & last != 0)
            })
        }
        // A new (s+1)-packing has to use the newest member.
        Preset::MatchingAtMost(s) => Box::new(move |f: &[u64]| {
            let (last, rest) = f.split_last().unwrap();
            let away: Vec<u64> = rest.iter().copied().filter(|&a| a & last == 0).collect();
            matching_number(&away) < s
        }),
    };
    let mut best: Option<usize> = None;
    hereditary_families(&uni, &*hereditary, &mut |f| {
        if f.is_empty() {
            return;
        }
        if matches!(preset, Preset::NonTrivialIntersecting) && trivial(f) {
            return;
        }
        let v = min_t_degree(n, t, f);
        best = Some(best.map_or(v, |b| b.max(v)));
    });
    best
}

/// Unpruned maximum of min(|A|, |B|) over disjoint cross-intersecting pairs.
pub fn brute_pair_optimum(n: usize, k: usize) -> usize {
    let uni = universe(n, k);
    let m = uni.len();
    let mut best = 0;
    for bits in 1u64..(1 << m) {
        let a: Vec<u64> = (0..m).filter(|&i| bits >> i & 1 == 1).map(|i| uni[i]).collect();
        if a.len() <= best {
            continue;
        }
        let b = (0..m)
            .filter(|&i| bits >> i & 1 == 0)
            .filter(|&i| a.iter().all(|&x| x & uni[i] != 0))
            .count();
        best = best.max(a.len().min(b));
    }
    best
}

/// Maximal intersecting families up to isomorphism, by brute force.
pub fn brute_maximal_intersecting_classes(n: usize, k: usize) -> usize {
    let uni = universe(n, k);
    let perms = permutations(n);
    let mut classes = std::collections::BTreeSet::new();
    hereditary_families(
        &uni,
        &|f: &[u64]| {
            let (last, rest) = f.split_last().unwrap();
            rest.iter().all(|&a| a & last != 0)
        },
        &mut |f| {
            let maximal = uni
                .iter()
                .all(|u| f.contains(u) || f.iter().any(|&a| a & u == 0));
            if !f.is_empty() && maximal {
                classes.insert(brute_canonical(n, f, &perms));
            }
        },
    );
    classes.len()
}
