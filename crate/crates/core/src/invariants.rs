//! Exact family statistics: degrees, t-degrees, diversity, matching and
//! covering numbers, and the intersection predicates.

use crate::error::{ensure_pre, Error, Result};
use crate::family::{binom_u64, colex_rank, full_mask, k_subsets, BitIter, Family, KSet};

/// Largest t-degree table we are willing to allocate.
const MAX_TDEGREE_TABLE: u64 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    /// `degrees[i - 1]` is the degree of element `i`.
    pub degrees: Vec<usize>,
    pub max: usize,
    pub min: usize,
    /// Smallest element attaining `max`.
    pub argmax: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TDegreeProfile {
    pub t: usize,
    pub min: usize,
    /// Numerically smallest t-set attaining `min`.
    pub witness: KSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diversity(pub usize);

pub fn is_intersecting(fam: &Family) -> bool {
    let sets = fam.sets();
    sets.iter()
        .enumerate()
        .all(|(i, a)| sets[i + 1..].iter().all(|b| a.intersects(*b)))
}

/// Whether all members share an element.
pub fn is_trivial(fam: &Family) -> Result<bool> {
    fam.common_intersection()
        .map(|m| m != 0)
        .ok_or(Error::EmptyFamily)
}

pub fn degree_profile(fam: &Family) -> DegreeProfile {
    let mut degrees = vec![0usize; fam.n()];
    for s in fam {
        for b in BitIter(s.mask()) {
            degrees[b] += 1;
        }
    }
    let max = degrees.iter().copied().max().unwrap_or(0);
    let min = degrees.iter().copied().min().unwrap_or(0);
    let argmax = degrees.iter().position(|&d| d == max).unwrap_or(0) + 1;
    DegreeProfile {
        degrees,
        max,
        min,
        argmax,
    }
}

/// t-degree of every t-subset of `[n]`, indexed by colex rank.
pub fn t_degree_table(fam: &Family, t: usize) -> Result<Vec<u32>> {
    ensure_pre!(
        t >= 1 && t <= fam.k(),
        "t = {t} must satisfy 1 <= t <= k = {}",
        fam.k()
    );
    let size = binom_u64(fam.n(), t);
    ensure_pre!(
        size <= MAX_TDEGREE_TABLE,
        "C({}, {t}) t-sets is too many to tabulate",
        fam.n()
    );
    let mut table = vec![0u32; size as usize];
    let positions: Vec<u64> = k_subsets(fam.k(), t).collect();
    let mut elems = Vec::with_capacity(fam.k());
    for s in fam {
        elems.clear();
        elems.extend(BitIter(s.mask()));
        for &pos in &positions {
            let sub = BitIter(pos).fold(0u64, |acc, p| acc | 1u64 << elems[p]);
            table[colex_rank(sub)] += 1;
        }
    }
    Ok(table)
}

/// Inverse of [`colex_rank`] for t-sets.
pub(crate) fn colex_unrank(mut rank: usize, t: usize) -> u64 {
    let mut mask = 0u64;
    for i in (1..=t).rev() {
        let mut c = i - 1;
        while binom_u64(c + 1, i) as usize <= rank {
            c += 1;
        }
        rank -= binom_u64(c, i) as usize;
        mask |= 1u64 << c;
    }
    mask
}

/// Minimum t-degree over all t-subsets of `[n]`, including uncovered ones.
pub fn min_t_degree(fam: &Family, t: usize) -> Result<TDegreeProfile> {
    let table = t_degree_table(fam, t)?;
    let (rank, &min) = table
        .iter()
        .enumerate()
        .min_by_key(|&(i, d)| (*d, i))
        .expect("C(n, t) >= 1 for t <= k <= n");
    Ok(TDegreeProfile {
        t,
        min: min as usize,
        witness: KSet::from_mask_unchecked(colex_unrank(rank, t)),
    })
}

pub fn diversity(fam: &Family) -> Diversity {
    Diversity(fam.len() - degree_profile(fam).max)
}

pub fn matching_number(fam: &Family) -> usize {
    if fam.k() == 0 {
        return fam.len();
    }
    let masks: Vec<u64> = fam.masks().collect();
    max_packing(&masks, fam.k())
}

/// Size of the largest pairwise disjoint subcollection of nonempty `k`-sets.
pub(crate) fn max_packing(sets: &[u64], k: usize) -> usize {
    let mut best = 0;
    pack_search(sets, k, 0, &mut best, usize::MAX);
    best
}

/// Whether some `need` members of `sets` are pairwise disjoint.
pub(crate) fn has_packing(sets: &[u64], k: usize, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    let mut best = 0;
    pack_search(sets, k, 0, &mut best, need);
    best >= need
}

fn pack_search(cands: &[u64], k: usize, depth: usize, best: &mut usize, stop_at: usize) {
    if depth > *best {
        *best = depth;
    }
    if *best >= stop_at || cands.is_empty() {
        return;
    }
    let union = cands.iter().fold(0u64, |a, &m| a | m);
    let room = (union.count_ones() as usize / k).min(cands.len());
    if depth + room <= *best {
        return;
    }
    let first = cands[0];
    let rest: Vec<u64> = cands[1..]
        .iter()
        .copied()
        .filter(|&m| m & first == 0)
        .collect();
    pack_search(&rest, k, depth + 1, best, stop_at);
    pack_search(&cands[1..], k, depth, best, stop_at);
}

/// Minimum number of elements meeting every member.
pub fn covering_number(fam: &Family) -> Result<usize> {
    if fam.is_empty() {
        return Err(Error::EmptyFamily);
    }
    ensure_pre!(fam.k() > 0, "the empty set cannot be covered");
    let masks: Vec<u64> = fam.masks().collect();
    let lower = matching_number(fam);
    Ok((lower..=fam.n())
        .find(|&d| can_cover(&masks, 0, d))
        .expect("[n] itself is a cover"))
}

fn can_cover(sets: &[u64], chosen: u64, budget: usize) -> bool {
    let Some(&open) = sets.iter().find(|&&m| m & chosen == 0) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    BitIter(open).any(|b| can_cover(sets, chosen | 1u64 << b, budget - 1))
}

pub fn are_cross_intersecting(a: &Family, b: &Family) -> Result<bool> {
    a.check_same_shape(b)?;
    Ok(a.iter().all(|x| b.iter().all(|y| x.intersects(*y))))
}

/// Members containing element 1 that meet `[k+2, n]` in at most `t - 1`
/// elements and meet `[2, k+1]`. On the Hilton-Milner family this is the
/// loss term bounded in the degree comparison against it.
pub fn low_spread_count(fam: &Family, t: usize) -> usize {
    let k = fam.k();
    let n = fam.n();
    let core = full_mask(k + 1) & !1;
    let tail = full_mask(n) & !full_mask(k + 1);
    fam.masks()
        .filter(|&m| m & 1 != 0 && m & core != 0 && ((m & tail).count_ones() as usize) < t)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, k: usize, lists: &[&[usize]]) -> Family {
        let v: Vec<Vec<usize>> = lists.iter().map(|l| l.to_vec()).collect();
        Family::from_element_lists(n, k, &v).unwrap()
    }

    fn star(n: usize, k: usize) -> Family {
        Family::from_masks_unchecked(n, k, k_subsets(n, k).filter(|m| m & 1 != 0).collect())
    }

    #[test]
    fn intersecting_basics() {
        assert!(is_intersecting(&star(7, 3)));
        assert!(!is_intersecting(&fam(7, 3, &[&[1, 2, 3], &[4, 5, 6]])));
        assert!(is_intersecting(&Family::new(7, 3).unwrap()));
    }

    #[test]
    fn triviality() {
        assert!(is_trivial(&star(7, 3)).unwrap());
        assert!(is_trivial(&fam(5, 2, &[&[3, 4]])).unwrap());
        assert!(!is_trivial(&fam(5, 2, &[&[1, 2], &[2, 3], &[1, 3]])).unwrap());
        assert_eq!(is_trivial(&Family::new(5, 2).unwrap()), Err(Error::EmptyFamily));
    }

    #[test]
    fn star_degrees() {
        let p = degree_profile(&star(7, 3));
        assert_eq!(p.degrees[0], 15);
        assert_eq!(p.degrees[1], 5);
        assert_eq!((p.min, p.max, p.argmax), (5, 15, 1));
        let empty = degree_profile(&Family::new(4, 2).unwrap());
        assert_eq!(empty.degrees, vec![0; 4]);
    }

    #[test]
    fn t_degree_edge_cases() {
        // Element 6 lies in no member of C([5], 3).
        let layer = Family::from_masks_unchecked(6, 3, k_subsets(5, 3).collect());
        let p = min_t_degree(&layer, 1).unwrap();
        assert_eq!(p.min, 0);
        assert_eq!(p.witness.mask(), 1 << 5);

        // A k-set outside a proper subfamily has k-degree 0.
        let f = fam(5, 2, &[&[1, 2], &[2, 3]]);
        assert_eq!(min_t_degree(&f, 2).unwrap().min, 0);
        let full = Family::from_masks_unchecked(4, 2, k_subsets(4, 2).collect());
        assert_eq!(min_t_degree(&full, 2).unwrap().min, 1);

        assert!(min_t_degree(&f, 0).is_err());
        assert!(min_t_degree(&f, 3).is_err());
    }

    #[test]
    fn unrank_inverts_rank() {
        for t in 1..=4 {
            for m in k_subsets(10, t) {
                assert_eq!(colex_unrank(colex_rank(m), t), m);
            }
        }
    }

    #[test]
    fn diversity_values() {
        assert_eq!(diversity(&star(7, 3)), Diversity(0));
        let layer = Family::from_masks_unchecked(5, 3, k_subsets(5, 3).collect());
        assert_eq!(diversity(&layer), Diversity(4));
    }

    #[test]
    fn matching_values() {
        assert_eq!(matching_number(&star(7, 3)), 1);
        let k5 = Family::from_masks_unchecked(5, 2, k_subsets(5, 2).collect());
        assert_eq!(matching_number(&k5), 2);
        assert_eq!(matching_number(&Family::new(5, 2).unwrap()), 0);
        let empty_set = Family::from_masks_unchecked(3, 0, vec![0]);
        assert_eq!(matching_number(&empty_set), 1);
    }

    #[test]
    fn covering_values() {
        assert_eq!(covering_number(&star(7, 3)).unwrap(), 1);
        let k5 = Family::from_masks_unchecked(5, 2, k_subsets(5, 2).collect());
        assert_eq!(covering_number(&k5).unwrap(), 4);
        assert_eq!(covering_number(&Family::new(5, 2).unwrap()), Err(Error::EmptyFamily));
    }

    #[test]
    fn cross_intersection() {
        let s = star(7, 3);
        assert!(are_cross_intersecting(&s, &s).unwrap());
        let a = fam(7, 3, &[&[1, 2, 3]]);
        let b = fam(7, 3, &[&[4, 5, 6]]);
        assert!(!are_cross_intersecting(&a, &b).unwrap());

        let pair = 0b11u64;
        let a = Family::from_masks_unchecked(
            7,
            3,
            k_subsets(7, 3).filter(|m| m & pair == pair).collect(),
        );
        let b = Family::from_masks_unchecked(
            7,
            3,
            k_subsets(7, 3).filter(|m| m & pair != 0).collect(),
        );
        assert!(are_cross_intersecting(&a, &b).unwrap());
        assert!(are_cross_intersecting(&a, &fam(6, 3, &[&[1, 2, 3]])).is_err());
    }
}
