//! k-sets over a ground set `[n]` and families of them.
//!
//! Elements are 1-indexed at every public boundary and stored 0-indexed in a
//! `u64` mask, so element `i` is bit `i - 1`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set; one machine word per set.
pub const MAX_N: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::GroundSetSize(n));
        }
        Ok(GroundSet { n })
    }

    pub fn size(self) -> usize {
        self.n
    }

    /// Mask with every element of `[n]` set.
    pub fn full_mask(self) -> u64 {
        full_mask(self.n)
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of `[n]` held as a bitmask; `k` is its popcount.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSet {
    mask: u64,
}

impl KSet {
    pub fn from_elements(elements: &[usize], n: usize) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let mut mask = 0u64;
        for &e in elements {
            if e == 0 || e > ground.size() {
                return Err(Error::ElementOutOfRange {
                    element: e as i64,
                    n,
                });
            }
            let bit = 1u64 << (e - 1);
            if mask & bit != 0 {
                return Err(Error::DuplicateElement(e));
            }
            mask |= bit;
        }
        Ok(KSet { mask })
    }

    pub fn from_mask(mask: u64, n: usize) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let stray = mask & !ground.full_mask();
        if stray != 0 {
            return Err(Error::ElementOutOfRange {
                element: i64::from(stray.trailing_zeros()) + 1,
                n,
            });
        }
        Ok(KSet { mask })
    }

    /// Caller guarantees the mask fits the ground set in use.
    pub(crate) const fn from_mask_unchecked(mask: u64) -> Self {
        KSet { mask }
    }

    pub fn mask(self) -> u64 {
        self.mask
    }

    pub fn k(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn contains(self, element: usize) -> bool {
        element >= 1 && element <= MAX_N && self.mask & (1u64 << (element - 1)) != 0
    }

    pub fn is_subset_of(self, other: KSet) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn disjoint(self, other: KSet) -> bool {
        self.mask & other.mask == 0
    }

    pub fn intersects(self, other: KSet) -> bool {
        !self.disjoint(other)
    }

    /// Increasing 1-indexed elements.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        BitIter(self.mask).map(|b| b + 1)
    }

    /// Applies `perm`, where `perm[i - 1]` is the image of element `i`.
    pub fn relabel(self, perm: &[usize]) -> KSet {
        let mask = BitIter(self.mask).fold(0u64, |acc, b| acc | 1u64 << (perm[b] - 1));
        KSet { mask }
    }
}

impl fmt::Debug for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

impl fmt::Display for KSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.elements() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

/// Free-standing form of [`KSet::disjoint`].
pub fn disjoint(a: KSet, b: KSet) -> bool {
    a.disjoint(b)
}

/// Iterator over the 0-indexed set bits of a word.
#[derive(Clone, Copy, Debug)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for BitIter {}

/// All `k`-subsets of `{0..n}` as masks, in increasing numeric order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = full_mask(n);
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some(full_mask(k))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack; stop once the next mask leaves [n].
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let succ = (((r ^ cur) >> 2) / c) | r;
                (succ & !limit == 0).then_some(succ)
            }
        };
        Some(cur)
    })
}

/// Binomial coefficient for the small arguments used in indexing tables.
pub fn binom_u64(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Colex rank of a mask among all masks with the same popcount.
pub fn colex_rank(mask: u64) -> usize {
    BitIter(mask)
        .enumerate()
        .map(|(i, b)| binom_u64(b, i + 1) as usize)
        .sum()
}

/// A deduplicated, sorted collection of `k`-subsets of `[n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    n: usize,
    k: usize,
    sets: Vec<KSet>,
}

impl Family {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        GroundSet::new(n)?;
        if k > n {
            return Err(Error::Precondition(format!("k = {k} exceeds n = {n}")));
        }
        Ok(Family {
            n,
            k,
            sets: Vec::new(),
        })
    }

    /// Builds a family, sorting and dropping repeats.
    pub fn from_sets(n: usize, k: usize, sets: impl IntoIterator<Item = KSet>) -> Result<Self> {
        let mut fam = Family::new(n, k)?;
        let full = full_mask(n);
        for s in sets {
            fam.check_member(s, full)?;
            fam.sets.push(s);
        }
        fam.sets.sort_unstable();
        fam.sets.dedup();
        Ok(fam)
    }

    /// Builds a family from masks the caller knows are valid k-sets of [n].
    pub(crate) fn from_masks_unchecked(n: usize, k: usize, mut masks: Vec<u64>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        debug_assert!(masks
            .iter()
            .all(|m| m.count_ones() as usize == k && m & !full_mask(n) == 0));
        Family {
            n,
            k,
            sets: masks.into_iter().map(KSet::from_mask_unchecked).collect(),
        }
    }

    pub fn from_element_lists(n: usize, k: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let sets = lists
            .iter()
            .map(|l| KSet::from_elements(l, n))
            .collect::<Result<Vec<_>>>()?;
        Family::from_sets(n, k, sets)
    }

    fn check_member(&self, s: KSet, full: u64) -> Result<()> {
        if s.mask & !full != 0 {
            return Err(Error::ElementOutOfRange {
                element: i64::from((s.mask & !full).trailing_zeros()) + 1,
                n: self.n,
            });
        }
        if s.k() != self.k {
            return Err(Error::UniformityMismatch {
                expected: self.k,
                found: s.k(),
            });
        }
        Ok(())
    }

    /// Inserts `s`; returns whether the family grew.
    pub fn insert(&mut self, s: KSet) -> Result<bool> {
        self.check_member(s, full_mask(self.n))?;
        match self.sets.binary_search(&s) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.sets.insert(pos, s);
                Ok(true)
            }
        }
    }

    /// Value-returning insert.
    pub fn with(mut self, s: KSet) -> Result<Self> {
        self.insert(s)?;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[KSet] {
        &self.sets
    }

    pub fn iter(&self) -> std::slice::Iter<'_, KSet> {
        self.sets.iter()
    }

    pub fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        self.sets.iter().map(|s| s.mask)
    }

    pub fn contains(&self, s: KSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.n, self.k)
    }

    pub(crate) fn check_same_shape(&self, other: &Family) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    /// Union of all members as a mask.
    pub fn support(&self) -> u64 {
        self.sets.iter().fold(0, |acc, s| acc | s.mask)
    }

    /// Intersection of all members; `None` for the empty family.
    pub fn common_intersection(&self) -> Option<u64> {
        self.sets.iter().map(|s| s.mask).reduce(|a, b| a & b)
    }

    /// Applies a permutation of `[n]` given as 1-indexed images.
    pub fn relabel(&self, perm: &[usize]) -> Result<Family> {
        check_permutation(perm, self.n)?;
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Family {
        let masks = self.sets.iter().map(|s| s.relabel(perm).mask).collect();
        Family::from_masks_unchecked(self.n, self.k, masks)
    }

    pub fn union(&self, other: &Family) -> Result<Family> {
        self.check_same_shape(other)?;
        let masks = self.masks().chain(other.masks()).collect();
        Ok(Family::from_masks_unchecked(self.n, self.k, masks))
    }

    pub fn to_element_lists(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|s| s.elements().collect()).collect()
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = &'a KSet;
    type IntoIter = std::slice::Iter<'a, KSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family(n={}, k={}, ", self.n, self.k)?;
        f.debug_list().entries(self.sets.iter()).finish()?;
        write!(f, ")")
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::Precondition(format!(
            "permutation has {} entries, expected {n}",
            perm.len()
        )));
    }
    let mut seen = 0u64;
    for &p in perm {
        if p == 0 || p > n {
            return Err(Error::ElementOutOfRange {
                element: p as i64,
                n,
            });
        }
        let bit = 1u64 << (p - 1);
        if seen & bit != 0 {
            return Err(Error::DuplicateElement(p));
        }
        seen |= bit;
    }
    Ok(())
}
