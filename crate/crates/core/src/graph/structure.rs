use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};

/// A tree hanging off one cycle vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantTree {
    /// The cycle vertex the tree is attached to.
    pub root: usize,
    /// Non-root vertices in BFS order from the root.
    pub vertices: Vec<usize>,
    /// Largest distance from the root to a tree vertex.
    pub depth: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicyclicDecomposition {
    /// Cycle vertices in cyclic order, starting at the smallest index and
    /// continuing towards its smaller cycle neighbor.
    pub cycle: Vec<usize>,
    /// Non-empty pendant trees, ordered by position of the root on `cycle`.
    pub trees: Vec<PendantTree>,
}

impl UnicyclicDecomposition {
    pub fn girth(&self) -> usize {
        self.cycle.len()
    }

    /// Position of `v` on the cycle, if it is a cycle vertex.
    pub fn cycle_position(&self, v: usize) -> Option<usize> {
        self.cycle.iter().position(|&c| c == v)
    }
}

/// Splits a connected unicyclic graph into its cycle and pendant trees.
///
/// The cycle is what remains after repeatedly stripping degree-1 vertices.
pub fn unicyclic_decompose(g: &Graph) -> Result<UnicyclicDecomposition> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.n();
    if g.edge_count() != n {
        return Err(Error::NotUnicyclic {
            vertices: n,
            edges: g.edge_count(),
        });
    }

    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = queue.pop_front() {
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    queue.push_back(w);
                }
            }
        }
    }

    let on_cycle: Vec<bool> = removed.iter().map(|&r| !r).collect();
    let start = (0..n)
        .find(|&v| on_cycle[v])
        .ok_or_else(|| Error::InternalConsistency("no cycle left after pruning".into()))?;
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *g
        .neighbors(start)
        .iter()
        .find(|&&w| on_cycle[w])
        .ok_or_else(|| Error::InternalConsistency("cycle vertex without cycle neighbor".into()))?;
    while cur != start {
        cycle.push(cur);
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| on_cycle[w] && w != prev)
            .ok_or_else(|| Error::InternalConsistency("broken cycle walk".into()))?;
        prev = cur;
        cur = next;
    }
    if cycle.len() < 3 || cycle.len() != on_cycle.iter().filter(|&&b| b).count() {
        return Err(Error::InternalConsistency(format!(
            "cycle walk visited {} vertices",
            cycle.len()
        )));
    }

    let mut trees = Vec::new();
    for &root in &cycle {
        let mut vertices = Vec::new();
        let mut depth = 0;
        let mut queue: VecDeque<(usize, usize, usize)> = g
            .neighbors(root)
            .iter()
            .filter(|&&w| !on_cycle[w])
            .map(|&w| (w, root, 1))
            .collect();
        while let Some((v, parent, d)) = queue.pop_front() {
            vertices.push(v);
            depth = depth.max(d);
            for &w in g.neighbors(v) {
                if w != parent {
                    queue.push_back((w, v, d + 1));
                }
            }
        }
        if !vertices.is_empty() {
            trees.push(PendantTree {
                root,
                vertices,
                depth,
            });
        }
    }

    Ok(UnicyclicDecomposition { cycle, trees })
}

/// Exact diameter of a connected graph.
pub fn diameter(g: &Graph) -> Result<usize> {
    diameter_and_path(g).map(|(d, _)| d)
}

/// Diameter and a diametral path.
///
/// Ties are broken towards the lexicographically smallest endpoint pair
/// `(u, v)`, `u < v`, and then the lexicographically smallest vertex
/// sequence from `u` to `v`.
pub fn diameter_and_path(g: &Graph) -> Result<(usize, Vec<usize>)> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.n();
    let mut best = (0, 0, 0);
    for u in 0..n {
        let dist = g.bfs_distances(u);
        for v in u + 1..n {
            if dist[v] > best.0 {
                best = (dist[v], u, v);
            }
        }
    }
    let (d, u, v) = best;
    let to_v = g.bfs_distances(v);
    let mut path = vec![u];
    let mut cur = u;
    while cur != v {
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| to_v[w] + 1 == to_v[cur])
            .expect("BFS layers are consistent");
        path.push(cur);
    }
    Ok((d, path))
}
