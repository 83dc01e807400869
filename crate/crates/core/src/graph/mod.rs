//! Simple undirected graphs and the unicyclic families.
//!
//! Vertices are `0..n`. Adjacency lists are kept sorted and deduplicated so
//! that two graphs with the same edge set compare equal.

mod io;
mod reduce;
mod structure;

pub use io::{read_edge_list, read_edge_list_file, write_edge_list, write_edge_list_file};
pub use reduce::{reduce_to_core, CoreClassification, CoreKind};
pub use structure::{
    diameter, diameter_and_path, unicyclic_decompose, PendantTree, UnicyclicDecomposition,
};

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::invalid(format!(
                "edge ({u}, {v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::invalid(format!("duplicate edge ({u}, {v})"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    /// Adds a new isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeNotPresent(u, v));
        }
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        Ok(g)
    }

    /// Deletes vertex `v`; vertices above `v` shift down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Induced subgraph on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut nb: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        Graph { adj }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nb| nb.iter().map(|&w| w + off).collect()),
        );
        Graph { adj }
    }

    /// Component label per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().1 == 1
    }

    /// BFS distances from `source`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) == 1).collect()
    }
}

/// Parameters of the compass graph `C_{n,r}(r', t)`.
///
/// A cycle `C_r` carries two pendant paths `P_t` and `P_s`, `s = n - r - t`,
/// attached at cycle vertices `r'` apart along the cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CompassParams {
    pub n: usize,
    pub r: usize,
    pub r_prime: usize,
    pub t: usize,
}

impl CompassParams {
    pub fn new(n: usize, r: usize, r_prime: usize, t: usize) -> Result<Self> {
        let p = CompassParams { n, r, r_prime, t };
        p.validate()?;
        Ok(p)
    }

    pub fn s(&self) -> usize {
        self.n - self.r - self.t
    }

    /// `max(r' + t + s, max(t, s) + floor(r/2))`. The first term is the
    /// tail-to-tail distance; the second wins when `min(t, s) < floor(r/2) - r'`.
    pub fn diameter(&self) -> usize {
        let s = self.s();
        (self.r_prime + self.t + s).max(self.t.max(s) + self.r / 2)
    }

    pub fn validate(&self) -> Result<()> {
        let CompassParams { n, r, r_prime, t } = *self;
        if r < 3 || r + 2 > n {
            return Err(Error::invalid(format!(
                "compass needs 3 <= r <= n - 2, got n = {n}, r = {r}"
            )));
        }
        if r_prime < 1 || r_prime > r / 2 {
            return Err(Error::invalid(format!(
                "compass needs 1 <= r' <= floor(r/2), got r = {r}, r' = {r_prime}"
            )));
        }
        if t < 1 || t + r >= n {
            return Err(Error::invalid(format!(
                "compass needs t >= 1 and s = n - r - t >= 1, got n = {n}, r = {r}, t = {t}"
            )));
        }
        Ok(())
    }

    /// All valid parameter tuples with exactly `n` vertices, in lexicographic
    /// `(r, r', t)` order.
    pub fn all_with_n(n: usize) -> Vec<CompassParams> {
        let mut out = Vec::new();
        for r in 3..=n.saturating_sub(2) {
            for r_prime in 1..=r / 2 {
                for t in 1..n - r {
                    out.push(CompassParams { n, r, r_prime, t });
                }
            }
        }
        out
    }
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("path needs at least one vertex"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle on `0..n` with consecutive edges and the closing edge `(0, n-1)`.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges)
}

/// Lollipop `C_{n,r}`: cycle on `0..r` closed by `(0, r-1)`, tail
/// `r-1 - r - ... - (n-1)`. Deleting the edge `(0, r-1)` leaves the path
/// `0 - 1 - ... - (n-1)`. `r = n` gives the cycle.
pub fn make_lollipop(n: usize, r: usize) -> Result<Graph> {
    if r < 3 || r > n {
        return Err(Error::invalid(format!(
            "lollipop needs 3 <= r <= n, got n = {n}, r = {r}"
        )));
    }
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, r - 1));
    Graph::from_edges(n, &edges)
}

/// Compass `C_{n,r}(r', t)`.
///
/// Labeling (1-based `v_i` in the proofs is index `i - 1` here):
/// `0..t` is the tail `P_t`, `t..t+r` the cycle closed by `(t, t+r-1)`,
/// `t+r..n` the tail `P_s` hanging from the degree-3 vertex `t+r-1`. The
/// tail `P_t` joins the cycle through the edge `(t-1, t+r'-1)`, and
/// `t+r'-1` sits at cycle distance `r'` from `t+r-1`.
pub fn make_compass(p: CompassParams) -> Result<Graph> {
    p.validate()?;
    let CompassParams { n, r, r_prime, t } = p;
    let mut edges = Vec::with_capacity(n);
    edges.extend((1..t).map(|i| (i - 1, i)));
    edges.extend((t + 1..t + r).map(|i| (i - 1, i)));
    edges.push((t, t + r - 1));
    edges.extend((t + r..n).map(|i| (i - 1, i)));
    edges.push((t - 1, t + r_prime - 1));
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_generator() {
        let p1 = make_path(1).unwrap();
        assert_eq!((p1.n(), p1.edge_count()), (1, 0));
        let p3 = make_path(3).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let p5 = make_path(5).unwrap();
        assert_eq!(p5.edge_count(), 4);
        assert_eq!(diameter(&p5).unwrap(), 4);
        assert!(make_path(0).is_err());
    }

    #[test]
    fn cycle_generator() {
        let c3 = make_cycle(3).unwrap();
        assert_eq!(c3.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        let c6 = make_cycle(6).unwrap();
        assert_eq!(c6.edge_count(), 6);
        assert_eq!(diameter(&c6).unwrap(), 3);
        let c4 = make_cycle(4).unwrap();
        assert_eq!(unicyclic_decompose(&c4).unwrap().girth(), 4);
        assert!(make_cycle(2).is_err());
    }

    #[test]
    fn lollipop_generator() {
        let g = make_lollipop(12, 8).unwrap();
        assert_eq!((g.n(), g.edge_count()), (12, 12));
        assert_eq!(diameter(&g).unwrap(), 8);
        assert_eq!(make_lollipop(6, 6).unwrap(), make_cycle(6).unwrap());
        let g = make_lollipop(5, 3).unwrap();
        assert_eq!(diameter(&g).unwrap(), 3);
        assert_eq!(unicyclic_decompose(&g).unwrap().girth(), 3);
        assert!(make_lollipop(5, 2).is_err());
        assert!(make_lollipop(5, 6).is_err());
    }

    #[test]
    fn compass_generator() {
        let g = make_compass(CompassParams::new(14, 8, 4, 3).unwrap()).unwrap();
        assert_eq!((g.n(), g.edge_count()), (14, 14));
        assert_eq!(diameter(&g).unwrap(), 10);
        let g = make_compass(CompassParams::new(12, 6, 3, 1).unwrap()).unwrap();
        assert_eq!(diameter(&g).unwrap(), 9);
        let p = CompassParams::new(8, 3, 1, 1).unwrap();
        assert_eq!((p.s(), p.diameter()), (4, 6));
        assert_eq!(diameter(&make_compass(p).unwrap()).unwrap(), 6);
        // a short tail leaves the far side of the cycle as the diameter
        let p = CompassParams::new(8, 6, 1, 1).unwrap();
        assert_eq!(p.r_prime + p.t + p.s(), 3);
        assert_eq!(p.diameter(), 4);
    }

    #[test]
    fn compass_diameter_closed_form() {
        for p in (5..=20).flat_map(CompassParams::all_with_n) {
            assert_eq!(
                diameter(&make_compass(p).unwrap()).unwrap(),
                p.diameter(),
                "{p:?}"
            );
        }
    }

    #[test]
    fn compass_rejects_bad_params() {
        assert!(CompassParams::new(8, 3, 2, 1).is_err());
        assert!(CompassParams::new(8, 3, 0, 1).is_err());
        assert!(CompassParams::new(8, 6, 1, 2).is_err());
        assert!(CompassParams::new(5, 4, 1, 1).is_err());
        assert!(CompassParams::new(8, 2, 1, 1).is_err());
    }

    #[test]
    fn compass_attachment_distance() {
        for p in (7..=14).flat_map(CompassParams::all_with_n) {
            let g = make_compass(p).unwrap();
            let dist = g.bfs_distances(p.t + p.r - 1);
            assert_eq!(dist[p.t + p.r_prime - 1], p.r_prime, "{p:?}");
            assert!(g.has_edge(p.t - 1, p.t + p.r_prime - 1));
        }
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn edge_and_vertex_deletion() {
        let c = make_cycle(5).unwrap();
        let p = c.without_edge(0, 4).unwrap();
        assert_eq!(p, make_path(5).unwrap());
        assert!(matches!(
            c.without_edge(0, 2),
            Err(Error::EdgeNotPresent(0, 2))
        ));
        let l = make_lollipop(6, 4).unwrap();
        assert_eq!(l.without_vertex(5), make_lollipop(5, 4).unwrap());
    }

    #[test]
    fn union_components() {
        let g = make_cycle(3)
            .unwrap()
            .disjoint_union(&make_path(2).unwrap());
        assert_eq!(g.n(), 5);
        assert_eq!(g.components().1, 2);
        assert!(!g.is_connected());
    }
}
