//! Task pool with a shared monotone incumbent.
//!
//! The incumbent packs `(value, task)` into one word so that a single
//! `fetch_max` prefers higher values and, among equal values, lower task
//! indices. A task keeps exploring ties only while the incumbent comes from a
//! later task, so the reported witness is always the first optimum (in DFS
//! order) of the lowest-index optimal task, whatever the worker count.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering::Relaxed};
use std::sync::Mutex;

pub(crate) struct Shared {
    incumbent: AtomicU64,
    nodes: AtomicU64,
    cap: u64,
    aborted: AtomicBool,
}

/// Task index used for externally supplied lower bounds.
pub(crate) const SEED_TASK: u32 = u32::MAX;

fn key(value: u32, task: u32) -> u64 {
    (value as u64) << 32 | (u32::MAX - task) as u64
}

impl Shared {
    pub(crate) fn new(cap: u64) -> Self {
        Shared {
            incumbent: AtomicU64::new(key(0, SEED_TASK)),
            nodes: AtomicU64::new(0),
            cap,
            aborted: AtomicBool::new(false),
        }
    }

    /// Whether a subtree of `task` whose leaves are worth at most `ub` can
    /// be skipped.
    #[inline]
    pub(crate) fn prunes(&self, ub: u32, task: u32) -> bool {
        let k = self.incumbent.load(Relaxed);
        let value = (k >> 32) as u32;
        let owner = u32::MAX - k as u32;
        ub < value || (ub == value && owner <= task)
    }

    #[inline]
    pub(crate) fn offer(&self, value: u32, task: u32) {
        self.incumbent.fetch_max(key(value, task), Relaxed);
    }

    /// Count one node; false once the budget is spent.
    #[inline]
    pub(crate) fn tick(&self) -> bool {
        if self.nodes.fetch_add(1, Relaxed) >= self.cap {
            self.aborted.store(true, Relaxed);
        }
        !self.aborted.load(Relaxed)
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Relaxed).min(self.cap.saturating_add(1))
    }

    pub(crate) fn aborted(&self) -> bool {
        self.aborted.load(Relaxed)
    }
}

/// Run `work(index, task)` over all tasks on `threads` workers; results come
/// back in task order.
pub(crate) fn run<T, R, F>(tasks: Vec<T>, threads: usize, work: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(u32, &T) -> R + Sync,
{
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..tasks.len()).map(|_| None).collect());
    let worker = || loop {
        let i = next.fetch_add(1, Relaxed);
        let Some(task) = tasks.get(i) else { break };
        let r = work(i as u32, task);
        slots.lock().expect("no worker panicked")[i] = Some(r);
    };
    let threads = threads.max(1).min(tasks.len().max(1));
    if threads == 1 {
        worker();
    } else {
        std::thread::scope(|s| {
            for _ in 0..threads {
                s.spawn(worker);
            }
        });
    }
    slots
        .into_inner()
        .expect("no worker panicked")
        .into_iter()
        .map(|r| r.expect("every task ran"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ties_prefer_earlier_tasks() {
        let s = Shared::new(10);
        assert!(!s.prunes(0, 0));
        s.offer(3, 5);
        assert!(s.prunes(2, 0));
        assert!(!s.prunes(3, 4));
        assert!(s.prunes(3, 5));
        assert!(s.prunes(3, 6));
        s.offer(3, 2);
        assert!(s.prunes(3, 4));
        s.offer(3, 7);
        assert!(!s.prunes(3, 1));
    }

    #[test]
    fn seeds_only_prune_strictly_worse() {
        let s = Shared::new(10);
        s.offer(4, SEED_TASK);
        assert!(s.prunes(3, 0));
        assert!(!s.prunes(4, 1_000_000));
    }

    #[test]
    fn results_in_task_order() {
        let out = run((0..50).collect(), 4, |i, &t: &i32| (i, t * 2));
        assert!(out.iter().enumerate().all(|(i, &(j, v))| i as u32 == j && v == 2 * i as i32));
    }

    #[test]
    fn budget_aborts() {
        let s = Shared::new(3);
        assert!((0..3).all(|_| s.tick()));
        assert!(!s.tick());
        assert!(s.aborted());
    }
}
