//! Graph plumbing shared by the cell and orbit computations.

use petgraph::algo::kosaraju_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use petgraph::unionfind::UnionFind;

/// Strongly connected components of the digraph on `0..adj.len()`.
///
/// Returns a component id per node. Ids are dense and numbered in order of
/// each component's smallest node, so the labelling is canonical.
/// petgraph's Kosaraju runs on explicit-stack DFS, so deep graphs are fine.
pub fn scc_labels(adj: &[Vec<u32>]) -> Vec<u32> {
    let mut g = DiGraph::<(), ()>::with_capacity(adj.len(), adj.iter().map(Vec::len).sum());
    for _ in 0..adj.len() {
        g.add_node(());
    }
    for (u, targets) in adj.iter().enumerate() {
        for &v in targets {
            g.add_edge(NodeIndex::new(u), NodeIndex::new(v as usize), ());
        }
    }
    let mut raw = vec![0u32; adj.len()];
    for (c, comp) in kosaraju_scc(&g).into_iter().enumerate() {
        for v in comp {
            raw[v.index()] = c as u32;
        }
    }
    canonical_labels(&raw)
}

/// Connected components of the undirected graph given by `pairs`.
pub fn union_find_labels(len: usize, pairs: impl IntoIterator<Item = (u32, u32)>) -> Vec<u32> {
    let mut uf = UnionFind::<u32>::new(len);
    for (a, b) in pairs {
        uf.union(a, b);
    }
    canonical_labels(&uf.into_labeling())
}

/// Relabels arbitrary class keys as `0, 1, ...` in order of first appearance.
pub fn canonical_labels<K: std::hash::Hash + Eq + Clone>(raw: &[K]) -> Vec<u32> {
    let mut seen = std::collections::HashMap::with_capacity(raw.len() / 2);
    raw.iter()
        .map(|k| {
            let next = seen.len() as u32;
            *seen.entry(k.clone()).or_insert(next)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scc_on_a_small_graph() {
        // 0 -> 1 -> 2 -> 0, 2 -> 3, 3 -> 4 -> 3
        let adj = vec![vec![1], vec![2], vec![0, 3], vec![4], vec![3], vec![]];
        assert_eq!(scc_labels(&adj), vec![0, 0, 0, 1, 1, 2]);
    }

    #[test]
    fn long_path_does_not_recurse() {
        let n = 200_000u32;
        let mut adj: Vec<Vec<u32>> = (0..n).map(|i| vec![(i + 1) % n]).collect();
        adj[0].push(5);
        let labels = scc_labels(&adj);
        assert!(labels.iter().all(|&c| c == 0));
    }

    #[test]
    fn union_find() {
        assert_eq!(union_find_labels(5, [(4, 2), (1, 0)]), vec![0, 0, 1, 2, 1]);
    }
}
