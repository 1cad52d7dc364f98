//! Disjoint cross-intersecting pairs.
//!
//! For a fixed `A` the best partner is `B = CN(A) \ A`, where `CN(A)` is the
//! set of members meeting every member of `A`. So the search decides `A`
//! member by member (include or exclude) and scores
//! `min(|A|, |CN(A) \ A|)`; `[k]` can be assumed to lie in `A`.

use super::bits::Bits;
use super::engine::Universe;
use super::pool::Shared;

#[derive(Debug, Clone, Copy)]
pub(crate) struct PairNode {
    a: Bits,
    cn: Bits,
    open: Bits,
}

const SPLIT_DEPTH: usize = 6;

pub(crate) struct PairEngine<'a> {
    pub u: &'a Universe,
}

impl PairEngine<'_> {
    pub fn root(&self) -> PairNode {
        let mut a = Bits::EMPTY;
        a.set(0);
        let mut open = Bits::first_n(self.u.len());
        open.clear(0);
        PairNode {
            a,
            cn: self.u.closed_meets(0),
            open,
        }
    }

    fn include(&self, node: &PairNode, v: usize) -> PairNode {
        let mut n = *node;
        n.a.set(v);
        n.cn &= self.u.closed_meets(v);
        n.open.clear(v);
        n
    }

    fn exclude(&self, node: &PairNode, v: usize) -> PairNode {
        let mut n = *node;
        n.open.clear(v);
        n
    }

    pub fn partner(&self, node: &PairNode) -> Bits {
        node.cn & !node.a
    }

    fn value(&self, node: &PairNode) -> u32 {
        node.a.count().min(self.partner(node).count()) as u32
    }

    /// Adding `v` caps the partner at `c_v`, so the best completion using
    /// `j` more members is `min(|A| + j, j-th largest c_v)`.
    fn bound_and_pick(&self, node: &PairNode) -> (u32, Option<usize>) {
        let size = node.a.count();
        let partner = self.partner(node);
        let mut caps: Vec<(usize, usize)> = node
            .open
            .iter()
            .map(|v| {
                let mut p = partner & self.u.closed_meets(v);
                p.clear(v);
                (p.count(), v)
            })
            .collect();
        // Largest cap first, then smallest index.
        caps.sort_unstable_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        let mut best = size;
        for (j, &(c, _)) in caps.iter().enumerate() {
            best = best.max((size + j + 1).min(c));
        }
        let ub = best.min(partner.count()) as u32;
        (ub, caps.first().map(|&(_, v)| v))
    }

    pub fn tasks(&self) -> Vec<PairNode> {
        let mut frontier = vec![self.root()];
        for _ in 0..SPLIT_DEPTH {
            let mut next = Vec::with_capacity(2 * frontier.len());
            for node in frontier {
                match node.open.first() {
                    Some(v) => {
                        next.push(self.include(&node, v));
                        next.push(self.exclude(&node, v));
                    }
                    None => next.push(node),
                }
            }
            frontier = next;
        }
        frontier
    }

    /// Best `A` below `node`, first in DFS order among equals.
    pub fn maximize(&self, task: u32, node: &PairNode, shared: &Shared) -> Option<(u32, PairNode)> {
        let mut best = None;
        self.dfs(*node, task, shared, &mut best);
        best
    }

    fn dfs(&self, node: PairNode, task: u32, shared: &Shared, best: &mut Option<(u32, PairNode)>) {
        if !shared.tick() {
            return;
        }
        let value = self.value(&node);
        if best.as_ref().map_or(true, |(b, _)| value > *b) {
            *best = Some((value, node));
            shared.offer(value, task);
        }
        let (ub, pick) = self.bound_and_pick(&node);
        let Some(v) = pick else { return };
        if ub <= value || shared.prunes(ub, task) {
            return;
        }
        self.dfs(self.include(&node, v), task, shared, best);
        if shared.aborted() {
            return;
        }
        self.dfs(self.exclude(&node, v), task, shared, best);
    }

    pub fn sides(&self, node: &PairNode) -> (Bits, Bits) {
        (node.a, self.partner(node))
    }
}
