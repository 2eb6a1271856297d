//! Two-coloring of the neighbor graph of a partition.

use std::collections::VecDeque;

use crate::geometry::GridMask;
use crate::nodal::boundary::{boundary_of_labels, filled_labels};
use crate::nodal::domains::NodalPartition;

/// Cells are neighbors when they share more than this many dual edges, so
/// that contact at a single corner does not count.
pub const MIN_SHARED_EDGES: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// `colors[ℓ − 1] ∈ {0, 1}` for label `ℓ`.
    Bipartite { colors: Vec<u8> },
    /// Labels along a closed walk of odd length.
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

/// Neighbor lists per label (index `ℓ − 1`).
pub fn adjacency(partition: &NodalPartition, mask: &GridMask) -> Vec<Vec<usize>> {
    let labels = filled_labels(partition, mask);
    let shared = boundary_of_labels(&labels, mask).shared_lengths();
    let mut adj = vec![Vec::new(); partition.count];
    for (&(a, b), &len) in &shared {
        if a > 0 && b > 0 && len > MIN_SHARED_EDGES {
            adj[a - 1].push(b);
            adj[b - 1].push(a);
        }
    }
    adj
}

pub fn is_bipartite(partition: &NodalPartition, mask: &GridMask) -> Bipartiteness {
    let adj = adjacency(partition, mask);
    let k = adj.len();
    let mut color: Vec<Option<u8>> = vec![None; k];
    let mut parent = vec![usize::MAX; k];
    for s in 0..k {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            for &lb in &adj[a] {
                let b = lb - 1;
                match color[b] {
                    None => {
                        color[b] = Some(1 - color[a].unwrap());
                        parent[b] = a;
                        queue.push_back(b);
                    }
                    Some(c) if c == color[a].unwrap() => {
                        return Bipartiteness::OddCycle(odd_cycle(&parent, a, b));
                    }
                    _ => {}
                }
            }
        }
    }
    Bipartiteness::Bipartite { colors: color.into_iter().map(|c| c.unwrap()).collect() }
}

/// Join the tree paths of two same-colored neighbors at their lowest common
/// ancestor; the result, with the edge `a–b`, is an odd cycle.
fn odd_cycle(parent: &[usize], a: usize, b: usize) -> Vec<usize> {
    let path = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let pa = path(a);
    let pb = path(b);
    let mut ia = pa.len();
    let mut ib = pb.len();
    while ia > 0 && ib > 0 && pa[ia - 1] == pb[ib - 1] {
        ia -= 1;
        ib -= 1;
    }
    // pa[ia] == pb[ib] is the common ancestor
    let mut cycle: Vec<usize> = pa[..=ia].to_vec();
    cycle.extend(pb[..ib].iter().rev());
    cycle.into_iter().map(|v| v + 1).collect()
}
