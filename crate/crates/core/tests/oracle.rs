//! The incremental algorithms against from-scratch recomputation, node by
//! node, over whole levels of the tree.

use seedtree::baselines::{decomposition_numbers_bruteforce, AperyNode, DecompNode, Entry, GenTrackNode, TreeNode};
use seedtree::{decode_node, encode_node, split_table, FullSemigroup, SeedNode};

/// Every node up to `max_genus`, in depth-first order.
fn all_nodes(max_genus: u32) -> Vec<SeedNode> {
    let mut out = Vec::new();
    let mut stack = vec![SeedNode::root()];
    while let Some(node) = stack.pop() {
        if node.genus() < max_genus {
            stack.extend(node.children().map(|(_, c)| c));
        }
        out.push(node);
    }
    out
}

#[test]
fn descent_equals_recomputed_child() {
    let nodes = all_nodes(12);
    assert_eq!(nodes.len(), 1413);
    for node in nodes.iter().filter(|n| n.genus() < 12) {
        let parent = decode_node(node).unwrap();
        for (offset, child) in node.children() {
            let sigma = node.conductor() + offset;
            let expected = encode_node(&parent.remove(sigma).unwrap()).unwrap();
            assert_eq!(child.conductor(), expected.conductor());
            assert_eq!(child.multiplicity(), expected.multiplicity());
            assert_eq!(
                child.gap_string(),
                expected.gap_string(),
                "parent {node:?}, offset {offset}"
            );
            assert_eq!(
                child.seed_string(),
                expected.seed_string(),
                "parent {node:?}, offset {offset}"
            );
        }
    }
}

#[test]
fn split_table_equals_bruteforce_table() {
    for node in all_nodes(12) {
        let semigroup = decode_node(&node).unwrap();
        let table = semigroup.seeds_table_bruteforce();
        assert_eq!(split_table(&node).unwrap(), table);
        assert_eq!(table.total_entries(), semigroup.conductor() as usize);
        assert_eq!(table.rows().len(), semigroup.k() as usize);
    }
}

#[test]
fn seed_bounds_per_order() {
    for node in all_nodes(12) {
        let s = decode_node(&node).unwrap();
        let table = split_table(&node).unwrap();
        for (i, row) in table.rows().iter().enumerate() {
            let width = (s.lambda(i + 1) - s.lambda(i)) as usize;
            // Order-i seeds lie in [c, c + λ_{i+1} - λ_i).
            assert_eq!(row.len(), width);
            assert!(row.iter().filter(|&&b| b).count() <= width);
        }
        let row0 = table.rows()[0].iter().filter(|&&b| b).count();
        let big_generators = s.generators().into_iter().filter(|&x| x >= s.conductor()).count();
        assert_eq!(row0, big_generators);
        assert_eq!(row0, node.children().count());
    }
}

#[test]
fn new_order_seed_counts() {
    for node in all_nodes(11) {
        let k = node.k() as usize;
        for (offset, child) in node.children() {
            if offset == 0 {
                continue;
            }
            let table = split_table(&child).unwrap();
            let new_ones: usize = table.rows()[k..].iter().map(|r| r.iter().filter(|&&b| b).count()).sum();
            assert_eq!(new_ones, if offset == 1 { 2 } else { 3 }, "{node:?} offset {offset}");
        }
    }
}

#[test]
fn child_conductor_and_frobenius() {
    for node in all_nodes(10) {
        for (offset, child) in node.children() {
            let s = decode_node(&child).unwrap();
            assert_eq!(child.conductor(), node.conductor() + offset + 1);
            assert_eq!(*s.gaps().last().unwrap(), node.conductor() + offset);
        }
    }
}

#[test]
fn generator_tracking_matches_first_seed_row() {
    for node in all_nodes(12) {
        let s = decode_node(&node).unwrap();
        let gt = GenTrackNode::from_semigroup(&s);
        let c = s.conductor();
        let from_array: Vec<u32> = (c..c + s.multiplicity())
            .filter(|&i| gt.entry(i) == Entry::Generator)
            .collect();
        let from_seeds: Vec<u32> = node.children().map(|(o, _)| c + o).collect();
        assert_eq!(from_array, from_seeds);
    }
}

#[test]
fn generator_tracking_updates_match_recomputation() {
    for node in all_nodes(9) {
        let s = decode_node(&node).unwrap();
        let gt = GenTrackNode::from_semigroup(&s);
        for (offset, _) in node.children() {
            let sigma = s.conductor() + offset;
            assert_eq!(
                gt.remove(sigma),
                GenTrackNode::from_semigroup(&s.remove(sigma).unwrap())
            );
        }
    }
}

#[test]
fn decomposition_numbers_flag_generators() {
    for node in all_nodes(10) {
        let s = decode_node(&node).unwrap();
        let dn = DecompNode::from_semigroup(&s);
        let (c, m) = (s.conductor(), s.multiplicity());
        let brute = decomposition_numbers_bruteforce(&s, c + 2 * m);
        for x in c..c + 2 * m {
            assert_eq!(dn.decomposition_number(x), brute[x as usize]);
            assert_eq!(dn.decomposition_number(x) == 1, s.is_generator(x), "x = {x} in {s}");
        }
    }
}

/// Walks a baseline tree using only its own incremental updates and checks
/// each node against the representation rebuilt from its gap set.
fn check_incremental<N, F>(max_genus: u32, rebuild: F)
where
    N: TreeNode + PartialEq + std::fmt::Debug,
    F: Fn(&N) -> N,
{
    let mut stack = vec![N::root()];
    let mut checked = 0;
    while let Some(node) = stack.pop() {
        assert_eq!(node, rebuild(&node));
        if node.genus() < max_genus {
            stack.extend(node.children());
        }
        checked += 1;
    }
    assert_eq!(checked, 1 + 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67 + 118 + 204);
}

#[test]
fn decomposition_updates_match_recomputation() {
    check_incremental::<DecompNode, _>(10, |n| {
        DecompNode::from_semigroup(&FullSemigroup::from_gaps(n.gaps()).unwrap())
    });
}

#[test]
fn generator_tracking_walk_matches_recomputation() {
    check_incremental::<GenTrackNode, _>(10, |n| {
        GenTrackNode::from_semigroup(&FullSemigroup::from_gaps(n.gaps()).unwrap())
    });
}

#[test]
fn apery_walk_matches_recomputation() {
    check_incremental::<AperyNode, _>(10, |n| {
        AperyNode::from_semigroup(&FullSemigroup::from_gaps(n.gaps()).unwrap())
    });
}

#[test]
fn ordinary_nodes() {
    for m in 1..12 {
        let s = FullSemigroup::ordinary(m);
        assert!(s.is_ordinary());
        assert_eq!(s.genus(), s.conductor() - 1);
        let table = s.seeds_table_bruteforce();
        assert_eq!(table.rows().len(), 1);
        assert!(table.rows()[0].iter().all(|&b| b));
    }
}
