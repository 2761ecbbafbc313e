//! Counting and enumerating the semigroup tree with the seeds descending step.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bitvec::BitVec;
use crate::error::{Error, Result};
use crate::seeds::{DescentState, SeedNode};

pub const DEFAULT_FRONTIER_DEPTH: u32 = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountResult {
    pub genus: u32,
    pub count: u64,
    /// Tree nodes touched, the start node and the counted leaves included.
    pub nodes_visited: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Bits needed to run the tree down to `genus`: every node has `c ≤ 2g`.
pub fn capacity_for(genus: u32) -> Result<usize> {
    let needed = 2 * genus as usize + 2;
    if needed > BitVec::<2>::MAX_CAPACITY {
        return Err(Error::GenusTooLarge {
            genus,
            needed,
            available: BitVec::<2>::MAX_CAPACITY,
        });
    }
    Ok(needed)
}

fn prepare(start: &SeedNode, genus: u32) -> Result<SeedNode> {
    if genus < start.genus() {
        return Err(Error::GenusBelowStart {
            target: genus,
            start: start.genus(),
        });
    }
    start.resized(capacity_for(genus)?)
}

/// One level of the depth-first walk.
struct Frame {
    node: SeedNode,
    state: DescentState,
    next: u32,
}

impl Frame {
    fn new(node: SeedNode) -> Self {
        Frame {
            state: DescentState::new(&node),
            node,
            next: 0,
        }
    }

    /// Advances to the next seed offset and descends there.
    #[inline]
    fn next_child(&mut self) -> Option<SeedNode> {
        let m = self.node.multiplicity();
        let seeds = self.node.seed_bits();
        while self.next < m && !seeds.test(self.next as usize) {
            self.next += 1;
        }
        if self.next == m {
            return None;
        }
        let offset = self.next;
        self.next += 1;
        Some(
            self.node
                .descend_with(offset, &mut self.state)
                .expect("scan stops on seed bits"),
        )
    }
}

/// Number of genus-`genus` descendants of `start`, by an iterative
/// depth-first walk holding one frame per depth.
pub fn count_dfs(start: &SeedNode, genus: u32) -> Result<CountResult> {
    let began = Instant::now();
    let start = prepare(start, genus)?;
    let (count, nodes_visited) = dfs(start, genus);
    Ok(CountResult {
        genus,
        count,
        nodes_visited,
        elapsed: began.elapsed(),
    })
}

fn dfs(start: SeedNode, genus: u32) -> (u64, u64) {
    if start.genus() == genus {
        return (1, 1);
    }
    let mut count = 0u64;
    let mut visited = 1u64;
    let leaf_parent = genus - 1;
    if start.genus() == leaf_parent {
        let n = start.child_count() as u64;
        return (n, 1 + n);
    }

    let mut frames: Vec<Frame> = Vec::with_capacity((genus - start.genus()) as usize);
    frames.push(Frame::new(start));
    while let Some(top) = frames.last_mut() {
        match top.next_child() {
            None => {
                frames.pop();
            }
            Some(child) => {
                visited += 1;
                if child.genus() == leaf_parent {
                    // Leaves are counted, not built.
                    let n = child.child_count() as u64;
                    count += n;
                    visited += n;
                } else {
                    frames.push(Frame::new(child));
                }
            }
        }
    }
    (count, visited)
}

/// Same contract as [`count_dfs`], walking the tree by recursion.
pub fn count_recursive(start: &SeedNode, genus: u32) -> Result<CountResult> {
    let began = Instant::now();
    let start = prepare(start, genus)?;
    let mut visited = 0;
    let count = recurse(&start, genus, &mut visited);
    Ok(CountResult {
        genus,
        count,
        nodes_visited: visited,
        elapsed: began.elapsed(),
    })
}

fn recurse(node: &SeedNode, genus: u32, visited: &mut u64) -> u64 {
    *visited += 1;
    if node.genus() == genus {
        return 1;
    }
    if node.genus() + 1 == genus {
        let n = node.child_count() as u64;
        *visited += n;
        return n;
    }
    let mut state = DescentState::new(node);
    let seeds = node.seed_bits();
    let mut n = 0;
    for offset in 0..node.multiplicity() {
        if seeds.test(offset as usize) {
            let child = node.descend_with(offset, &mut state).expect("offset is a seed bit");
            n += recurse(&child, genus, visited);
        }
    }
    n
}

/// Calls `visit` on every genus-`genus` descendant of `start`, depth first
/// with children in increasing offset. Returns the number of calls.
pub fn enumerate<F>(start: &SeedNode, genus: u32, mut visit: F) -> Result<u64>
where
    F: FnMut(&SeedNode),
{
    enumerate_until(start, genus, |n| {
        visit(n);
        ControlFlow::Continue(())
    })
}

/// Like [`enumerate`], stopping as soon as `visit` breaks.
pub fn enumerate_until<F>(start: &SeedNode, genus: u32, mut visit: F) -> Result<u64>
where
    F: FnMut(&SeedNode) -> ControlFlow<()>,
{
    let start = prepare(start, genus)?;
    Ok(walk_level(start, genus, &mut visit).0)
}

/// Visits the nodes at `genus` and returns how many were visited, along with
/// the number of nodes above that level that were expanded.
fn walk_level<F>(start: SeedNode, genus: u32, visit: &mut F) -> (u64, u64)
where
    F: FnMut(&SeedNode) -> ControlFlow<()>,
{
    if start.genus() == genus {
        let _ = visit(&start);
        return (1, 0);
    }
    let (mut hits, mut above) = (0, 1);
    let mut frames = vec![Frame::new(start)];
    while let Some(top) = frames.last_mut() {
        match top.next_child() {
            None => {
                frames.pop();
            }
            Some(child) if child.genus() == genus => {
                hits += 1;
                if visit(&child).is_break() {
                    break;
                }
            }
            Some(child) => {
                above += 1;
                frames.push(Frame::new(child));
            }
        }
    }
    (hits, above)
}

/// All nodes at `genus` with `start` as ancestor, in canonical order.
pub fn collect_level(start: &SeedNode, genus: u32) -> Result<Vec<SeedNode>> {
    let mut out = Vec::new();
    enumerate(start, genus, |n| out.push(*n))?;
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct SequenceReport {
    pub counts: Vec<CountResult>,
    /// Genera `g` with `n_{g+2} < n_{g+1} + n_g`.
    pub fibonacci_violations: Vec<u32>,
}

impl SequenceReport {
    pub fn values(&self) -> Vec<u64> {
        self.counts.iter().map(|r| r.count).collect()
    }
}

/// `n_g` for `g = 0..=max_genus`.
pub fn sequence(max_genus: u32) -> Result<SequenceReport> {
    capacity_for(max_genus)?;
    let root = SeedNode::root();
    let counts = (0..=max_genus)
        .map(|g| count_dfs(&root, g))
        .collect::<Result<Vec<_>>>()?;
    let fibonacci_violations = fibonacci_violations(&counts.iter().map(|r| r.count).collect::<Vec<_>>());
    Ok(SequenceReport {
        counts,
        fibonacci_violations,
    })
}

/// Indices `g` at which `n[g + 2] < n[g + 1] + n[g]`.
pub fn fibonacci_violations(n: &[u64]) -> Vec<u32> {
    n.windows(3)
        .enumerate()
        .filter(|(_, w)| w[2] < w[1] + w[0])
        .map(|(g, _)| g as u32)
        .collect()
}

/// Counts genus-`genus` semigroups by splitting the tree at the frontier
/// level `min(frontier_depth, genus)` and handing frontier subtrees to
/// `workers` threads. The result does not depend on the worker count.
pub fn count_parallel(genus: u32, workers: usize, frontier_depth: u32) -> Result<CountResult> {
    let began = Instant::now();
    let workers = workers.max(1);
    let root = prepare(&SeedNode::root(), genus)?;
    let level = frontier_depth.min(genus);

    let mut frontier = Vec::new();
    let (_, above) = walk_level(root, level, &mut |n: &SeedNode| {
        frontier.push(*n);
        ControlFlow::Continue(())
    });

    let cursor = AtomicUsize::new(0);
    let totals: Vec<(u64, u64)> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers.min(frontier.len().max(1)))
            .map(|_| {
                scope.spawn(|| {
                    let (mut count, mut visited) = (0u64, 0u64);
                    loop {
                        let i = cursor.fetch_add(1, Ordering::Relaxed);
                        let Some(node) = frontier.get(i) else { break };
                        let (c, v) = dfs(*node, genus);
                        count += c;
                        visited += v;
                    }
                    (count, visited)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });

    let (count, below) = totals.iter().fold((0u64, 0u64), |(c, v), &(dc, dv)| (c + dc, v + dv));
    Ok(CountResult {
        genus,
        count,
        nodes_visited: above + below,
        elapsed: began.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1() -> SeedNode {
        SeedNode::from_strings("11110110", "11011111", 5).unwrap()
    }

    fn example2() -> SeedNode {
        SeedNode::from_strings("11111110100110", "11010000011111", 8).unwrap()
    }

    #[test]
    fn small_counts() {
        let root = SeedNode::root();
        assert_eq!(count_dfs(&root, 0).unwrap().count, 1);
        assert_eq!(count_dfs(&root, 1).unwrap().count, 1);
        assert_eq!(count_dfs(&root, 5).unwrap().count, 12);
        assert_eq!(count_recursive(&root, 4).unwrap().count, 7);
        assert_eq!(count_dfs(&root, 10).unwrap().count, 204);
    }

    #[test]
    fn counts_below_a_node() {
        assert_eq!(count_dfs(&example1(), 7).unwrap().count, 4);
        assert_eq!(count_dfs(&example1(), 6).unwrap().count, 1);
        assert_eq!(count_recursive(&example2(), 11).unwrap().count, 3);
        assert!(matches!(
            count_dfs(&example1(), 5),
            Err(Error::GenusBelowStart { target: 5, start: 6 })
        ));
    }

    #[test]
    fn genus_capacity_limit() {
        assert!(capacity_for(63).is_ok());
        assert!(matches!(
            count_dfs(&SeedNode::root(), 64),
            Err(Error::GenusTooLarge { genus: 64, .. })
        ));
    }

    #[test]
    fn visited_is_cumulative_level_size() {
        let r = count_dfs(&SeedNode::root(), 6).unwrap();
        assert_eq!(r.nodes_visited, 1 + 1 + 2 + 4 + 7 + 12 + 23);
        let r = count_recursive(&SeedNode::root(), 6).unwrap();
        assert_eq!(r.nodes_visited, 50);
        assert_eq!(count_parallel(6, 3, 2).unwrap().nodes_visited, 50);
    }

    #[test]
    fn enumerate_order() {
        let level2: Vec<Vec<u32>> = collect_level(&SeedNode::root(), 2)
            .unwrap()
            .iter()
            .map(|n| n.gap_values())
            .collect();
        // {0,3,4,…} then {0,2,4,5,…}.
        assert_eq!(level2, vec![vec![1, 2], vec![1, 3]]);
        assert_eq!(enumerate(&SeedNode::root(), 3, |_| {}).unwrap(), 4);
        let mut seen = 0;
        let visited = enumerate_until(&SeedNode::root(), 5, |_| {
            seen += 1;
            if seen == 3 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        assert_eq!((visited, seen), (3, 3));
    }

    #[test]
    fn sequence_head() {
        let report = sequence(5).unwrap();
        assert_eq!(report.values(), [1, 1, 2, 4, 7, 12]);
        assert!(report.fibonacci_violations.is_empty());
        assert_eq!(fibonacci_violations(&[1, 1, 1]), [0]);
    }

    #[test]
    fn parallel_matches() {
        assert_eq!(count_parallel(5, 8, 5).unwrap().count, 12);
        assert_eq!(count_parallel(10, 1, 0).unwrap().count, 204);
        assert_eq!(count_parallel(3, 4, 9).unwrap().count, 4);
    }
}
