//! Canonical labeling of families under permutations of the ground set.
//!
//! Individualization-refinement on the element side of the set/element
//! incidence structure: elements are split by the multiset of "set types"
//! they lie in until the ordered partition is stable, then the first
//! non-singleton cell is branched on. Each discrete partition induces a
//! relabeling; the canonical form is the lexicographically least relabeled
//! family over all leaves. Elements exchanged by a transposition automorphism
//! (twins) yield isomorphic subtrees, so only one per twin class is branched.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{ensure_pre, Result};
use crate::family::{BitIter, Family};

/// Largest ground set accepted; the search regime.
pub const MAX_CANON_N: usize = 16;

/// Byte string equal for two inputs iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

#[derive(Debug, Clone)]
pub struct Labeling {
    pub form: CanonicalForm,
    /// `perm[i - 1]` is the canonical label of element `i`.
    pub perm: Vec<usize>,
}

pub fn canonical_form(fam: &Family) -> Result<CanonicalForm> {
    canonical_labeling(fam).map(|l| l.form)
}

pub fn canonical_labeling(fam: &Family) -> Result<Labeling> {
    ensure_pre!(
        fam.n() <= MAX_CANON_N,
        "canonical forms need n <= {MAX_CANON_N} (n = {})",
        fam.n()
    );
    let items: Vec<(u8, u64)> = fam.masks().map(|m| (0, m)).collect();
    Ok(canonize(fam.n(), fam.k(), &items))
}

/// Canonical labeling of a family of colored sets.
pub(crate) fn canonize(n: usize, k: usize, items: &[(u8, u64)]) -> Labeling {
    let mut c = Canonizer::new(n, items);
    c.search(vec![(0..n).collect()]);
    let (code, perm0) = c.best.expect("the search tree has at least one leaf");
    let mut bytes = Vec::with_capacity(2 + 3 * code.len());
    bytes.push(n as u8);
    bytes.push(k as u8);
    for (color, mask) in code {
        bytes.push(color);
        bytes.extend_from_slice(&mask.to_be_bytes());
    }
    Labeling {
        form: CanonicalForm(bytes),
        perm: perm0.into_iter().map(|p| p + 1).collect(),
    }
}

type Code = Vec<(u8, u16)>;

struct Canonizer<'a> {
    n: usize,
    items: &'a [(u8, u64)],
    /// Items containing each element.
    incidence: Vec<Vec<usize>>,
    twin_class: Vec<usize>,
    best: Option<(Code, Vec<usize>)>,
}

impl<'a> Canonizer<'a> {
    fn new(n: usize, items: &'a [(u8, u64)]) -> Self {
        let mut incidence = vec![Vec::new(); n];
        for (j, &(_, m)) in items.iter().enumerate() {
            for b in BitIter(m) {
                incidence[b].push(j);
            }
        }
        let twin_class = twin_classes(n, items);
        Canonizer {
            n,
            items,
            incidence,
            twin_class,
            best: None,
        }
    }

    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let mut cell_of = vec![0u16; self.n];
        loop {
            for (ci, cell) in cells.iter().enumerate() {
                for &e in cell {
                    cell_of[e] = ci as u16;
                }
            }
            // Type of each item: its color and the sorted cells it touches.
            let item_sigs: Vec<(u8, Vec<u16>)> = self
                .items
                .iter()
                .map(|&(color, m)| {
                    let mut v: Vec<u16> = BitIter(m).map(|b| cell_of[b]).collect();
                    v.sort_unstable();
                    (color, v)
                })
                .collect();
            let mut distinct: Vec<&(u8, Vec<u16>)> = item_sigs.iter().collect();
            distinct.sort_unstable();
            distinct.dedup();
            let item_type: Vec<usize> = item_sigs
                .iter()
                .map(|s| distinct.binary_search(&s).expect("present"))
                .collect();

            let mut next = Vec::with_capacity(cells.len());
            let mut split = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<usize>, usize)> = cell
                    .iter()
                    .map(|&e| {
                        let mut sig: Vec<usize> =
                            self.incidence[e].iter().map(|&j| item_type[j]).collect();
                        sig.sort_unstable();
                        (sig, e)
                    })
                    .collect();
                keyed.sort();
                let mut group: Vec<usize> = Vec::new();
                for i in 0..keyed.len() {
                    if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                        next.push(std::mem::take(&mut group));
                        split = true;
                    }
                    group.push(keyed[i].1);
                }
                next.push(group);
            }
            cells = next;
            if !split {
                return cells;
            }
        }
    }

    fn search(&mut self, cells: Vec<Vec<usize>>) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &e in &cells[target] {
            let class = self.twin_class[e];
            if tried.contains(&class) {
                continue;
            }
            tried.push(class);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![e]);
            child.push(cells[target].iter().copied().filter(|&x| x != e).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.search(child);
        }
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let mut perm = vec![0usize; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let mut code: Code = self
            .items
            .iter()
            .map(|&(color, m)| {
                let relabeled = BitIter(m).fold(0u16, |acc, b| acc | 1u16 << perm[b]);
                (color, relabeled)
            })
            .collect();
        code.sort_unstable();
        match &self.best {
            Some((best, _)) if *best <= code => {}
            _ => self.best = Some((code, perm)),
        }
    }
}

/// Classes of elements pairwise exchanged by transposition automorphisms.
fn twin_classes(n: usize, items: &[(u8, u64)]) -> Vec<usize> {
    let mut sorted: Vec<(u8, u64)> = items.to_vec();
    sorted.sort_unstable();
    let mut class: Vec<usize> = (0..n).collect();
    let mut scratch = Vec::with_capacity(items.len());
    for a in 0..n {
        if class[a] != a {
            continue;
        }
        for b in a + 1..n {
            if class[b] != b {
                continue;
            }
            let (ba, bb) = (1u64 << a, 1u64 << b);
            scratch.clear();
            scratch.extend(items.iter().map(|&(c, m)| {
                let swapped = match (m & ba != 0, m & bb != 0) {
                    (true, false) => m & !ba | bb,
                    (false, true) => m & !bb | ba,
                    _ => m,
                };
                (c, swapped)
            }));
            scratch.sort_unstable();
            if scratch == sorted {
                class[b] = a;
            }
        }
    }
    class
}
