use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Random labeled tree: vertex `i` picks a parent below it, then labels are
/// shuffled.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut g = Graph::empty(n);
    for i in 1..n {
        let p = rng.gen_range(0..i);
        g.try_add_edge(labels[p], labels[i])
            .expect("tree edge is new");
    }
    g
}

/// Random tree plus one uniformly chosen non-edge. Needs `n >= 3`.
pub fn random_unicyclic<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 3, "unicyclic graphs need at least 3 vertices");
    let mut g = random_tree(n, rng);
    let missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let &(u, v) = missing
        .choose(rng)
        .expect("a tree on 3+ vertices has a non-edge");
    g.try_add_edge(u, v).expect("chosen pair is a non-edge");
    g
}

/// Random tree plus up to `extra` further random edges.
pub fn random_connected<R: Rng>(n: usize, extra: usize, rng: &mut R) -> Graph {
    let mut g = random_tree(n, rng);
    for _ in 0..extra {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v && !g.has_edge(u, v) {
            g.try_add_edge(u, v).expect("checked non-edge");
        }
    }
    g
}
