use anyhow::{bail, ensure, Context, Result};

use seedtree::bench::Algorithm;
use seedtree::{decode_node, encode_node, split_table, SeedNode};

/// Deepest level checked node by node against recomputation.
const ORACLE_GENUS: u32 = 12;

pub fn run(max_genus: u32) -> Result<()> {
    let depth = max_genus.min(ORACLE_GENUS);
    let nodes = check_nodes(depth)?;
    println!("oracle: {nodes} nodes to genus {depth} match recomputation");

    for genus in 0..=max_genus {
        let mut first: Option<(Algorithm, u64)> = None;
        for alg in Algorithm::ALL {
            let n = alg.count(genus)?.count;
            match first {
                None => first = Some((alg, n)),
                Some((a, m)) if m != n => {
                    bail!("genus {genus}: {a} counts {m}, {alg} counts {n}")
                }
                Some(_) => {}
            }
        }
        let (_, n) = first.expect("at least one algorithm");
        println!("genus {genus}: {n}");
    }
    println!(
        "counts agree across {} algorithms to genus {max_genus}",
        Algorithm::ALL.len()
    );
    Ok(())
}

/// Walks the tree to `depth` and checks each node and each descent step.
fn check_nodes(depth: u32) -> Result<u64> {
    let mut stack = vec![SeedNode::root()];
    let mut seen = 0;
    while let Some(node) = stack.pop() {
        seen += 1;
        node.check_invariants()?;
        let semigroup = decode_node(&node)?;
        let c = semigroup.conductor();
        ensure!(semigroup.genus() == node.genus(), "genus of {semigroup}");

        let table = split_table(&node)?;
        ensure!(
            table == semigroup.seeds_table_bruteforce(),
            "seeds table of {semigroup} differs from the direct computation"
        );
        for (i, row) in table.rows().iter().enumerate() {
            let width = semigroup.lambda(i + 1) - semigroup.lambda(i);
            ensure!(
                row.len() == width as usize,
                "row {i} of {semigroup} has length {}",
                row.len()
            );
        }
        let row0 = table.rows()[0].iter().filter(|&&b| b).count();
        let children: Vec<_> = node.children().collect();
        ensure!(
            row0 == children.len(),
            "{semigroup}: {row0} order-0 seeds, {} children",
            children.len()
        );

        if node.genus() == depth {
            continue;
        }
        for (offset, child) in children.into_iter().rev() {
            let removed = semigroup
                .remove(c + offset)
                .with_context(|| format!("removing {} from {semigroup}", c + offset))?;
            let expected = encode_node(&removed)?;
            ensure!(
                child.gap_string() == expected.gap_string()
                    && child.seed_string() == expected.seed_string()
                    && child.multiplicity() == expected.multiplicity(),
                "descending from {semigroup} at offset {offset} gave\n{child}\nexpected\n{expected}"
            );
            stack.push(child);
        }
    }
    Ok(seen)
}
