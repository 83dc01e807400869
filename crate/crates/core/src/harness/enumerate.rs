use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ENUMERATION_MAX_N: usize = 11;

/// Unlabeled rooted trees up to a given order.
///
/// A tree is stored as the non-increasing list of its root's subtree ids.
/// Ids are assigned in order of size, so a tree is produced exactly once per
/// multiset of subtrees and no isomorphism test is needed.
struct RootedTrees {
    size: Vec<usize>,
    children: Vec<Vec<usize>>,
    by_size: Vec<Vec<usize>>,
}

impl RootedTrees {
    fn up_to(max_size: usize) -> Self {
        let mut rt = RootedTrees {
            size: Vec::new(),
            children: Vec::new(),
            by_size: vec![Vec::new(); max_size + 1],
        };
        for k in 1..=max_size {
            let known = rt.size.len();
            let mut shapes = Vec::new();
            rt.multisets(k - 1, known, &mut Vec::new(), &mut shapes);
            for kids in shapes {
                rt.by_size[k].push(rt.size.len());
                rt.size.push(k);
                rt.children.push(kids);
            }
        }
        rt
    }

    /// Non-increasing id sequences among the first `limit` ids with sizes
    /// summing to `remaining`.
    fn multisets(
        &self,
        remaining: usize,
        limit: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for id in (0..limit).rev() {
            if self.size[id] <= remaining {
                cur.push(id);
                self.multisets(remaining - self.size[id], id + 1, cur, out);
                cur.pop();
            }
        }
    }

    fn attach(&self, g: &mut Graph, root: usize, id: usize) {
        for &c in &self.children[id] {
            let v = g.add_vertex();
            g.try_add_edge(root, v).expect("fresh vertex");
            self.attach(g, v, c);
        }
    }
}

fn dihedral_min(seq: &[usize]) -> Vec<usize> {
    let r = seq.len();
    let mut best = seq.to_vec();
    for k in 0..r {
        let rot: Vec<usize> = (0..r).map(|i| seq[(i + k) % r]).collect();
        let refl: Vec<usize> = (0..r).map(|i| seq[(k + r - i) % r]).collect();
        best = best.min(rot).min(refl);
    }
    best
}

fn compositions(total: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() + 1 == parts {
        cur.push(total);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for a in 0..=total {
        cur.push(a);
        compositions(total - a, parts, cur, out);
        cur.pop();
    }
}

/// All connected unicyclic graphs on `n` vertices, one per isomorphism
/// class, for `3 <= n <= 11`.
///
/// Each graph is a cycle `0..r` with a rooted tree hung on every cycle
/// vertex; the class is identified by the sequence of tree shapes around the
/// cycle up to rotation and reflection. Output is sorted by girth, then by
/// that canonical sequence.
pub fn enumerate_unicyclic(n: usize) -> Result<Vec<Graph>> {
    if !(3..=ENUMERATION_MAX_N).contains(&n) {
        return Err(Error::invalid(format!(
            "enumeration supports 3 <= n <= {ENUMERATION_MAX_N}, got {n}"
        )));
    }
    let trees = RootedTrees::up_to(n - 2);
    let mut classes: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    for r in 3..=n {
        let mut comps = Vec::new();
        compositions(n - r, r, &mut Vec::new(), &mut comps);
        for comp in comps {
            let choices: Vec<&[usize]> = comp
                .iter()
                .map(|&a| trees.by_size[a + 1].as_slice())
                .collect();
            let mut idx = vec![0usize; r];
            loop {
                let seq: Vec<usize> = (0..r).map(|i| choices[i][idx[i]]).collect();
                classes.insert((r, dihedral_min(&seq)));
                let Some(pos) = (0..r).rev().find(|&i| idx[i] + 1 < choices[i].len()) else {
                    break;
                };
                idx[pos] += 1;
                idx[pos + 1..].iter_mut().for_each(|x| *x = 0);
            }
        }
    }
    Ok(classes
        .into_iter()
        .map(|(r, seq)| {
            let mut g = Graph::empty(r);
            for i in 0..r {
                g.try_add_edge(i, (i + 1) % r).expect("cycle edge");
            }
            for (i, &id) in seq.iter().enumerate() {
                trees.attach(&mut g, i, id);
            }
            g
        })
        .collect())
}
