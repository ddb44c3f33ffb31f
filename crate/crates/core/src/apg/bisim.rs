use std::collections::HashMap;

use super::Apg;

/// A strongly extensional graph together with the map sending each original
/// node to its class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub graph: Apg,
    pub map: Vec<usize>,
}

/// Coarsest bisimulation by signature refinement.
///
/// Starting from one block, each round splits blocks by the set of blocks
/// their children fall into. A round that creates no new block is stable.
/// Block ids are assigned in order of first appearance, so the result only
/// depends on node order.
fn coarsest_partition(g: &Apg) -> (Vec<usize>, usize) {
    let n = g.len();
    let mut block = vec![0usize; n];
    let mut count = usize::from(n > 0);
    loop {
        let mut ids: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut next = vec![0usize; n];
        for v in 0..n {
            let mut sig: Vec<usize> = g.children(v).iter().map(|&c| block[c]).collect();
            sig.sort_unstable();
            sig.dedup();
            let fresh = ids.len();
            next[v] = *ids.entry((block[v], sig)).or_insert(fresh);
        }
        let refined = ids.len();
        block = next;
        if refined == count {
            return (block, count);
        }
        count = refined;
    }
}

pub fn bisim_quotient(g: &Apg) -> Quotient {
    let (map, count) = coarsest_partition(g);
    let mut representative = vec![usize::MAX; count];
    for v in g.nodes().rev() {
        representative[map[v]] = v;
    }
    let mut graph = Apg::new();
    for &r in &representative {
        graph
            .add_node(g.name(r))
            .expect("representatives are distinct nodes");
    }
    for (b, &r) in representative.iter().enumerate() {
        graph.set_children(b, g.children(r).iter().map(|&c| map[c]).collect());
    }
    graph.set_point(g.point().map(|p| map[p]));
    Quotient { graph, map }
}
