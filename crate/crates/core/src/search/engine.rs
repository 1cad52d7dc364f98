//! Branch and bound over maximal families under a hereditary constraint.
//!
//! Nodes are Bron–Kerbosch triples: `r` is the chosen family, `p` the
//! members that can still be added, `x` members that could be added but whose
//! branches were already explored. A leaf with `p` and `x` both empty is a
//! maximal family. For every pivot `u`, each maximal family through the node
//! contains `u` or some candidate disjoint from `u` (otherwise `u` could be
//! added), so only those are branched on. This holds for both the
//! pairwise rules and the bounded-matching constraint.

use crate::family::{k_subsets, Family};
use crate::invariants::has_packing;

use super::bits::Bits;
use super::pool::Shared;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Rule {
    Free,
    /// Members pairwise share at least this many elements.
    MeetAtLeast(usize),
    /// `nu <= s` with `s >= 2`.
    MatchingAtMost(usize),
}

pub(crate) const INTERSECTING: Rule = Rule::MeetAtLeast(1);

pub(crate) struct Universe {
    pub n: usize,
    pub k: usize,
    pub masks: Vec<u64>,
    disjoint: Vec<Bits>,
    /// t-sets (by colex rank) inside each member.
    tsets_of: Vec<Vec<u32>>,
    /// Members containing each t-set.
    containing: Vec<Bits>,
}

impl Universe {
    /// Caller guarantees `C(n, k) <= CAPACITY` and `1 <= t <= k`.
    pub fn new(n: usize, k: usize, t: usize) -> Self {
        let masks: Vec<u64> = k_subsets(n, k).collect();
        let disjoint = masks
            .iter()
            .map(|&a| masks.iter().enumerate().filter(|&(_, &b)| a & b == 0).map(|(j, _)| j).collect())
            .collect();
        let tmasks: Vec<u64> = k_subsets(n, t).collect();
        let mut containing = vec![Bits::EMPTY; tmasks.len()];
        let mut tsets_of = vec![Vec::new(); masks.len()];
        // k_subsets yields colex order, so the index is the colex rank.
        for (ti, &tm) in tmasks.iter().enumerate() {
            for (i, &sm) in masks.iter().enumerate() {
                if sm & tm == tm {
                    containing[ti].set(i);
                    tsets_of[i].push(ti as u32);
                }
            }
        }
        Universe {
            n,
            k,
            masks,
            disjoint,
            tsets_of,
            containing,
        }
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.masks.binary_search(&mask).ok()
    }

    /// Members sharing at least `j` elements with each member, itself
    /// excluded.
    fn meet_at_least(&self, j: usize) -> Vec<Bits> {
        self.masks
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                self.masks
                    .iter()
                    .enumerate()
                    .filter(|&(o, &b)| o != i && (a & b).count_ones() as usize >= j)
                    .map(|(o, _)| o)
                    .collect()
            })
            .collect()
    }

    /// Members meeting member `i`, including `i`.
    pub fn closed_meets(&self, i: usize) -> Bits {
        !self.disjoint[i] & Bits::first_n(self.len())
    }

    pub fn num_tsets(&self) -> usize {
        self.containing.len()
    }

    pub fn family(&self, members: &Bits) -> Family {
        Family::from_masks_unchecked(self.n, self.k, members.iter().map(|i| self.masks[i]).collect())
    }

    pub fn degrees(&self, members: &Bits) -> Vec<u32> {
        let mut deg = vec![0u32; self.num_tsets()];
        for i in members.iter() {
            self.add(&mut deg, i);
        }
        deg
    }

    #[inline]
    fn add(&self, deg: &mut [u32], i: usize) {
        for &t in &self.tsets_of[i] {
            deg[t as usize] += 1;
        }
    }

    #[inline]
    fn remove(&self, deg: &mut [u32], i: usize) {
        for &t in &self.tsets_of[i] {
            deg[t as usize] -= 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Node {
    pub r: Bits,
    pub p: Bits,
    pub x: Bits,
}

pub(crate) struct Engine<'a> {
    u: &'a Universe,
    rule: Rule,
    non_trivial: bool,
    /// Pairwise rules: the compatibility graph.
    adj: Vec<Bits>,
    /// Members `v` such that a maximal family avoiding `u` must contain a
    /// candidate from `conflicts[u]`.
    conflicts: Vec<Bits>,
}

/// Tasks are cut from the top of the tree until at least this many exist.
/// Fixed, so that the task list does not depend on the worker count.
const MIN_TASKS: usize = 64;
const MAX_SPLIT_DEPTH: usize = 3;

impl<'a> Engine<'a> {
    pub fn new(u: &'a Universe, rule: Rule, non_trivial: bool) -> Self {
        let all = Bits::first_n(u.len());
        let (adj, conflicts) = match rule {
            Rule::Free => (Vec::new(), vec![Bits::EMPTY; u.len()]),
            Rule::MeetAtLeast(j) => {
                let adj = u.meet_at_least(j);
                let conflicts = adj
                    .iter()
                    .enumerate()
                    .map(|(i, a)| {
                        let mut c = !*a & all;
                        c.clear(i);
                        c
                    })
                    .collect();
                (adj, conflicts)
            }
            Rule::MatchingAtMost(_) => (Vec::new(), u.disjoint.clone()),
        };
        Engine {
            u,
            rule,
            non_trivial,
            adj,
            conflicts,
        }
    }

    /// Candidates in `cands` (with `v` itself dropped) that stay addable
    /// once `v` joins `r`.
    fn compatible(&self, r: &Bits, v: usize, mut cands: Bits) -> Bits {
        cands.clear(v);
        match self.rule {
            Rule::Free => cands,
            Rule::MeetAtLeast(_) => cands & self.adj[v],
            Rule::MatchingAtMost(s) => {
                let mut out = cands & !self.u.disjoint[v];
                // A new (s+1)-packing must use both v and q.
                for q in (cands & self.u.disjoint[v]).iter() {
                    let forbid = self.u.masks[q] | self.u.masks[v];
                    let rest: Vec<u64> = r
                        .iter()
                        .map(|i| self.u.masks[i])
                        .filter(|&m| m & forbid == 0)
                        .collect();
                    if !has_packing(&rest, self.u.k, s - 1) {
                        out.set(q);
                    }
                }
                out
            }
        }
    }

    /// The node whose family is exactly `members`, added in order.
    pub fn root(&self, members: &[usize]) -> Node {
        let mut node = Node {
            r: Bits::EMPTY,
            p: Bits::first_n(self.u.len()),
            x: Bits::EMPTY,
        };
        for &v in members {
            debug_assert!(node.p.get(v), "root members must be compatible");
            node = self.child(&node, v);
        }
        node
    }

    pub fn child(&self, node: &Node, v: usize) -> Node {
        let mut r = node.r;
        r.set(v);
        Node {
            r,
            p: self.compatible(&node.r, v, node.p),
            x: self.compatible(&node.r, v, node.x),
        }
    }

    /// Pivoted branch set, ordered by the weakest t-set each candidate
    /// would reinforce.
    pub fn branches(&self, node: &Node, deg: &[u32]) -> Vec<usize> {
        let mut best: Option<Bits> = None;
        for u in (node.p | node.x).iter() {
            let mut b = node.p & self.conflicts[u];
            if node.p.get(u) {
                b.set(u);
            }
            if best.map_or(true, |c| b.count() < c.count()) {
                let empty = b.is_empty();
                best = Some(b);
                if empty {
                    break;
                }
            }
        }
        let mut out: Vec<(u32, usize)> = best
            .unwrap_or(Bits::EMPTY)
            .iter()
            .map(|v| {
                let weakest = self.u.tsets_of[v]
                    .iter()
                    .map(|&t| deg[t as usize])
                    .min()
                    .unwrap_or(0);
                (weakest, v)
            })
            .collect();
        out.sort_unstable();
        out.into_iter().map(|(_, v)| v).collect()
    }

    /// Optimistic completion: no t-set can gain more than the candidates
    /// through it.
    fn upper_bound(&self, node: &Node, deg: &[u32]) -> u32 {
        deg.iter()
            .zip(&self.u.containing)
            .map(|(&d, c)| d + node.p.and_count(c) as u32)
            .min()
            .unwrap_or(0)
    }

    fn accepts(&self, r: &Bits) -> bool {
        if !self.non_trivial {
            return true;
        }
        let common = r.iter().fold(u64::MAX, |acc, i| acc & self.u.masks[i]);
        common == 0
    }

    /// Split the tree below `root` into a deterministic list of disjoint
    /// subtrees.
    pub fn tasks(&self, root: Node) -> Vec<Node> {
        let mut frontier = vec![root];
        for _ in 0..MAX_SPLIT_DEPTH {
            if frontier.len() >= MIN_TASKS {
                break;
            }
            let mut next = Vec::new();
            for mut node in frontier {
                if node.p.is_empty() {
                    next.push(node);
                    continue;
                }
                let deg = self.u.degrees(&node.r);
                for v in self.branches(&node, &deg) {
                    next.push(self.child(&node, v));
                    node.p.clear(v);
                    node.x.set(v);
                }
            }
            frontier = next;
        }
        frontier
    }

    /// Best leaf of one task: `(min t-degree, family)`, first in DFS order
    /// among equals.
    pub fn maximize(&self, task: u32, node: &Node, shared: &Shared) -> Option<(u32, Bits)> {
        let mut deg = self.u.degrees(&node.r);
        let mut best = None;
        self.max_dfs(*node, &mut deg, task, shared, &mut best);
        best
    }

    fn max_dfs(
        &self,
        mut node: Node,
        deg: &mut Vec<u32>,
        task: u32,
        shared: &Shared,
        best: &mut Option<(u32, Bits)>,
    ) {
        if !shared.tick() {
            return;
        }
        if node.p.is_empty() {
            if node.x.is_empty() && self.accepts(&node.r) {
                let value = deg.iter().copied().min().unwrap_or(0);
                if best.map_or(true, |(b, _)| value > b) {
                    *best = Some((value, node.r));
                    shared.offer(value, task);
                }
            }
            return;
        }
        if shared.prunes(self.upper_bound(&node, deg), task) {
            return;
        }
        for v in self.branches(&node, deg) {
            let child = self.child(&node, v);
            self.u.add(deg, v);
            self.max_dfs(child, deg, task, shared, best);
            self.u.remove(deg, v);
            if shared.aborted() {
                return;
            }
            node.p.clear(v);
            node.x.set(v);
            if shared.prunes(self.upper_bound(&node, deg), task) {
                return;
            }
        }
    }

    /// Every accepted maximal family below `node`.
    pub fn enumerate(&self, node: &Node, shared: &Shared, visit: &mut dyn FnMut(&Bits)) {
        self.enum_dfs(*node, shared, visit);
    }

    fn enum_dfs(&self, mut node: Node, shared: &Shared, visit: &mut dyn FnMut(&Bits)) {
        if !shared.tick() {
            return;
        }
        if node.p.is_empty() {
            if node.x.is_empty() && self.accepts(&node.r) {
                visit(&node.r);
            }
            return;
        }
        // Ordering is irrelevant without a bound.
        let deg = vec![0u32; self.u.num_tsets()];
        for v in self.branches(&node, &deg) {
            let child = self.child(&node, v);
            self.enum_dfs(child, shared, visit);
            if shared.aborted() {
                return;
            }
            node.p.clear(v);
            node.x.set(v);
        }
    }
}
