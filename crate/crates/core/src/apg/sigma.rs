use super::{solve, Apg, Outcome};
use crate::error::{Error, Result};

/// Largest index [`sigma_witness`] searches for by default.
pub const SIGMA_WITNESS_BOUND: usize = 12;

/// `x` is nonempty and has no ∈-minimal element: every child shares a child
/// with `x`.
pub fn is_sigma_node(g: &Apg, x: usize) -> bool {
    let kids = g.children(x);
    !kids.is_empty()
        && kids
            .iter()
            .all(|&y| g.children(y).iter().any(|z| kids.binary_search(z).is_ok()))
}

/// First node of `class` (in the given order) without ∈-minimal elements.
pub fn sigma<I: IntoIterator<Item = usize>>(g: &Apg, class: I) -> Option<usize> {
    class.into_iter().find(|&x| is_sigma_node(g, x))
}

/// First counterexample to Regularity with every quantifier restricted to
/// `class`: a node of the class that has a child in the class, each of which
/// shares a class child with it.
pub fn regularity_failure(g: &Apg, class: &[bool]) -> Option<usize> {
    g.nodes().find(|&x| {
        if !class[x] {
            return false;
        }
        let kids: Vec<usize> = g
            .children(x)
            .iter()
            .copied()
            .filter(|&y| class[y])
            .collect();
        !kids.is_empty()
            && kids.iter().all(|&y| {
                g.children(y)
                    .iter()
                    .any(|&z| class[z] && kids.binary_search(&z).is_ok())
            })
    })
}

pub fn sigma_witness(nu: usize) -> Result<Apg> {
    sigma_witness_with_bound(nu, SIGMA_WITNESS_BOUND)
}

/// Smallest pointed graph whose point has index `nu` and no ∈-minimal
/// element.
///
/// Every index `0..=nu` must occur in such a graph (a node of index `i > 0`
/// needs a child of index `i - 1`), so no graph has fewer than `nu + 1` nodes,
/// and in a graph with exactly `nu + 1` nodes node indices are a permutation of
/// `0..=nu`. The search therefore labels node `i` with index `i` and
/// enumerates, for increasing edge counts, every child assignment consistent
/// with those labels:
///
/// * node 0 is empty;
/// * an odd node `i` holds `i - 1`, any odd nodes, and even nodes above `i`;
/// * an even node `i > 0` holds `i - 1` and any odd nodes below it.
///
/// Within one edge count, candidates are ordered lexicographically by the
/// child masks of nodes `nu, nu - 1, ..., 1`. A graph with `nu + 1` nodes
/// always exists (a self-member `{y, z}` chain over the well-founded
/// witnesses), so the search never needs more nodes.
pub fn sigma_witness_with_bound(nu: usize, bound: usize) -> Result<Apg> {
    if nu <= 1 {
        return Err(Error::SigmaDomain { nu });
    }
    if nu > bound {
        return Err(Error::WitnessBound { n: nu, bound });
    }
    let n = nu + 1;
    let required: Vec<u64> = (0..n)
        .map(|i| if i == 0 { 0 } else { 1 << (i - 1) })
        .collect();
    let optional: Vec<u64> = (0..n)
        .map(|i| {
            let mut mask = 0u64;
            if i == 0 {
                return 0;
            }
            for j in 0..n {
                let allowed = if i % 2 == 1 {
                    j % 2 == 1 || j > i
                } else {
                    j % 2 == 1 && j < i - 1
                };
                if allowed && j != i - 1 {
                    mask |= 1 << j;
                }
            }
            mask
        })
        .collect();
    let max_extra: u32 = optional.iter().map(|m| m.count_ones()).sum();
    let mut search = Search {
        nu,
        required,
        optional,
        masks: vec![0; n],
    };
    for extra in 0..=max_extra {
        if search.assign(nu, extra) {
            let children = search
                .masks
                .iter()
                .map(|&m| (0..n).filter(|&j| m >> j & 1 == 1).collect())
                .collect();
            let mut g = Apg::from_adjacency("v", children);
            g.set_point(Some(nu));
            return Ok(g);
        }
    }
    Err(Error::SearchExhausted { nu, nodes: n })
}

struct Search {
    nu: usize,
    required: Vec<u64>,
    optional: Vec<u64>,
    masks: Vec<u64>,
}

impl Search {
    /// Assigns nodes `node, node - 1, ..., 1` using exactly `budget` optional
    /// edges.
    fn assign(&mut self, node: usize, budget: u32) -> bool {
        if node == 0 {
            return budget == 0 && self.accept();
        }
        let remaining: u32 = self.optional[1..node].iter().map(|m| m.count_ones()).sum();
        let opt = self.optional[node];
        let point = self.nu;
        let mut sub = 0u64;
        loop {
            let used = sub.count_ones();
            if used <= budget && budget - used <= remaining {
                let mask = self.required[node] | sub;
                // a child of the point must share a child with it
                let ok = node == point
                    || self.masks[point] >> node & 1 == 0
                    || mask & self.masks[point] != 0;
                if ok {
                    self.masks[node] = mask;
                    if self.assign(node - 1, budget - used) {
                        return true;
                    }
                }
            }
            if sub == opt {
                return false;
            }
            sub = sub.wrapping_sub(opt) & opt;
        }
    }

    fn accept(&self) -> bool {
        let n = self.nu + 1;
        let children = self
            .masks
            .iter()
            .map(|&m| (0..n).filter(|&j| m >> j & 1 == 1).collect())
            .collect();
        let g = Apg::from_adjacency("v", children);
        let outcomes = solve(&g);
        let labelled = outcomes.iter().enumerate().all(|(i, o)| o.w() == Some(i));
        labelled && is_sigma_node(&g, self.nu) && outcomes[self.nu] != Outcome::Draw
    }
}
