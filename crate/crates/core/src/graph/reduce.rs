use std::collections::VecDeque;

use serde::Serialize;

use super::{diameter_and_path, unicyclic_decompose, CompassParams, Graph};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CoreKind {
    Cycle { r: usize },
    Lollipop { n: usize, r: usize },
    Compass(CompassParams),
    Other,
}

impl CoreKind {
    pub fn family_name(&self) -> &'static str {
        match self {
            CoreKind::Cycle { .. } => "cycle",
            CoreKind::Lollipop { .. } => "lollipop",
            CoreKind::Compass(_) => "compass",
            CoreKind::Other => "other",
        }
    }
}

/// Minimal unicyclic subgraph containing a diametral path, with its family.
#[derive(Debug, Clone)]
pub struct CoreClassification {
    pub kind: CoreKind,
    /// The core, relabeled to `0..core.n()`.
    pub core: Graph,
    /// `vertex_map[i]` is the input vertex that became core vertex `i`.
    pub vertex_map: Vec<usize>,
    /// The diametral path used, in input labels.
    pub diametral_path: Vec<usize>,
    pub diameter: usize,
}

impl CoreClassification {
    /// True when the core is the whole input graph.
    pub fn is_whole_graph(&self, g: &Graph) -> bool {
        self.core.n() == g.n()
    }
}

/// Reduces a unicyclic graph to the induced subgraph on the cycle, the
/// diametral path and (when the path misses the cycle) the shortest tree path
/// joining them. Every other vertex hangs off this core through pendant
/// trees, so pendant deletion carries any lower bound on `m[0,1)` for the
/// core over to the input.
///
/// The family is recognized by reading off cycle length, tail lengths and
/// the cycle distance between attachment points.
pub fn reduce_to_core(g: &Graph) -> Result<CoreClassification> {
    let dec = unicyclic_decompose(g)?;
    let (diameter, path) = diameter_and_path(g)?;
    let n = g.n();

    let mut keep = vec![false; n];
    for &v in dec.cycle.iter().chain(&path) {
        keep[v] = true;
    }
    if !path.iter().any(|&v| dec.cycle_position(v).is_some()) {
        for v in connector(g, &dec.cycle, &path) {
            keep[v] = true;
        }
    }
    let vertex_map: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
    let core = g.induced_subgraph(&vertex_map);
    let kind = classify(&core)?;

    Ok(CoreClassification {
        kind,
        core,
        vertex_map,
        diametral_path: path,
        diameter,
    })
}

/// Shortest path from the cycle to `targets`, inclusive of both ends.
fn connector(g: &Graph, cycle: &[usize], targets: &[usize]) -> Vec<usize> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    for &c in cycle {
        seen[c] = true;
        queue.push_back(c);
    }
    let mut hit = None;
    while let Some(u) = queue.pop_front() {
        if targets.contains(&u) {
            hit = Some(u);
            break;
        }
        for &w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut out = Vec::new();
    let mut cur = hit.expect("connected graph reaches the path");
    loop {
        out.push(cur);
        if parent[cur] == usize::MAX {
            break;
        }
        cur = parent[cur];
    }
    out
}

/// Names the family of a connected unicyclic graph by parameter
/// reconstruction, or `Other`.
pub(crate) fn classify(core: &Graph) -> Result<CoreKind> {
    let dec = unicyclic_decompose(core)?;
    let r = dec.girth();

    // every tree must be a bare path hanging from its root by an end vertex
    let mut tails = Vec::new();
    for tree in &dec.trees {
        let root_branches = core
            .neighbors(tree.root)
            .iter()
            .filter(|&&w| dec.cycle_position(w).is_none())
            .count();
        let is_path = root_branches == 1
            && tree.vertices.iter().all(|&v| core.degree(v) <= 2)
            && tree.depth == tree.vertices.len();
        if !is_path {
            return Ok(CoreKind::Other);
        }
        tails.push((dec.cycle_position(tree.root).unwrap(), tree.depth));
    }

    Ok(match tails.as_slice() {
        [] => CoreKind::Cycle { r },
        [_] => CoreKind::Lollipop { n: core.n(), r },
        [(pa, la), (pb, lb)] => {
            let gap = pa.abs_diff(*pb);
            let r_prime = gap.min(r - gap);
            CompassParams::new(core.n(), r, r_prime, *la.min(lb))
                .map(CoreKind::Compass)
                .unwrap_or(CoreKind::Other)
        }
        _ => CoreKind::Other,
    })
}
