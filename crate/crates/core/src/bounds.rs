//! Lower bounds on `m_G[0,1)`, the exact domination number and per-graph
//! verdicts.
//!
//! Every verdict in a [`BoundReport`] compares a formula against the exact
//! count on the input graph itself. The core classification only decides
//! which family formulas apply.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_linalg::integer;
use crate::graph::{diameter, reduce_to_core, unicyclic_decompose, CompassParams, CoreKind, Graph};
use crate::spectra::{count_below_one, multiplicity};

/// Default vertex cap for [`domination_number`].
pub const DOMINATION_CAP: usize = 32;

fn check_dr(d: usize, r: usize) -> Result<()> {
    if d < 1 || r < 3 {
        return Err(Error::invalid(format!(
            "need d >= 1 and r >= 3, got d = {d}, r = {r}"
        )));
    }
    Ok(())
}

/// `ceil(d/3) + ceil(r/6) - 1`.
pub fn main_lower_bound(d: usize, r: usize) -> Result<usize> {
    check_dr(d, r)?;
    Ok(d.div_ceil(3) + r.div_ceil(6) - 1)
}

/// `ceil((d+1)/3) + ceil(r/6) - 1` when `r` is not a multiple of 6, else the
/// main bound.
pub fn refined_lollipop_bound(d: usize, r: usize) -> Result<usize> {
    check_dr(d, r)?;
    if r % 6 == 0 {
        main_lower_bound(d, r)
    } else {
        Ok((d + 1).div_ceil(3) + r.div_ceil(6) - 1)
    }
}

/// `d/3 + ceil(r/6)` for `C_{n,r}` when `d = n - ceil(r/2)` is a multiple of
/// 3 and `r` is not a multiple of 6.
pub fn lollipop_exact_count(n: usize, r: usize) -> Result<Option<usize>> {
    if r < 3 || r >= n {
        return Err(Error::invalid(format!(
            "lollipop needs 3 <= r < n, got n = {n}, r = {r}"
        )));
    }
    let d = n - r.div_ceil(2);
    Ok((d % 3 == 0 && r % 6 != 0).then(|| d / 3 + r.div_ceil(6)))
}

/// `ceil((d+1)/3)`, the lower bound on `m_T[0,1)` for a tree of diameter `d`.
pub fn tree_lower_bound(d: usize) -> usize {
    (d + 1).div_ceil(3)
}

/// `(base, strengthened)`: the main bound, and `ceil(d/3) + ceil(r/6)` when
/// `n = 0 mod 3`, `r = 0 mod 6`, `r' = r/2` and `t = 1 mod 3`.
pub fn compass_bounds(p: CompassParams) -> Result<(usize, Option<usize>)> {
    p.validate()?;
    let d = p.diameter();
    let base = main_lower_bound(d, p.r)?;
    let strong = p.n % 3 == 0 && p.r % 6 == 0 && 2 * p.r_prime == p.r && p.t % 3 == 1;
    Ok((base, strong.then_some(base + 1)))
}

/// `floor(r/2) - r'`.
pub fn compass_alpha(p: CompassParams) -> usize {
    p.r / 2 - p.r_prime
}

pub fn domination_number(g: &Graph) -> Result<usize> {
    domination_number_with_cap(g, DOMINATION_CAP)
}

/// Exact domination number by branch and bound on bitmasks.
///
/// Branches on the closed neighbourhood of the lowest undominated vertex.
/// A greedy set gives the first upper bound; `ceil((d+1)/3)` is a lower bound
/// for connected graphs and stops the search as soon as it is reached.
pub fn domination_number_with_cap(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.n();
    if cap > 64 {
        return Err(Error::invalid(format!("domination cap {cap} exceeds 64")));
    }
    if n > cap {
        return Err(Error::SizeCapExceeded { n, cap });
    }
    if n == 0 {
        return Ok(0);
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let closed: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u64 << v, |m, &w| m | (1u64 << w))
        })
        .collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    let mut dominated = 0u64;
    let mut greedy = 0;
    while dominated != full {
        let best = (0..n)
            .max_by_key(|&v| ((closed[v] & !dominated).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        dominated |= closed[best];
        greedy += 1;
    }

    let lower = tree_lower_bound(diameter_of_connected(g));
    let mut search = Search {
        closed: &closed,
        full,
        max_cover: closed.iter().map(|m| m.count_ones()).max().unwrap(),
        best: greedy,
        lower,
    };
    if search.best > lower {
        search.run(0, 0);
    }
    Ok(search.best)
}

fn diameter_of_connected(g: &Graph) -> usize {
    (0..g.n())
        .map(|v| g.bfs_distances(v).into_iter().max().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

struct Search<'a> {
    closed: &'a [u64],
    full: u64,
    max_cover: u32,
    best: usize,
    lower: usize,
}

impl Search<'_> {
    fn run(&mut self, dominated: u64, size: usize) {
        if dominated == self.full {
            self.best = self.best.min(size);
            return;
        }
        let open = (self.full & !dominated).count_ones();
        if size + open.div_ceil(self.max_cover) as usize >= self.best {
            return;
        }
        let u = (self.full & !dominated).trailing_zeros() as usize;
        let mut choices: Vec<usize> = (0..self.closed.len())
            .filter(|&w| self.closed[w] >> u & 1 == 1)
            .collect();
        choices.sort_by_key(|&w| std::cmp::Reverse((self.closed[w] & !dominated).count_ones()));
        for w in choices {
            self.run(dominated | self.closed[w], size + 1);
            if self.best <= self.lower {
                return;
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    /// `count01 >= main_bound`.
    pub main_bound: bool,
    /// `count01 <= gamma`; `None` when gamma was not computed.
    pub hedetniemi: Option<bool>,
    /// `(d+1)/3 <= main_bound <= count01 <= gamma`, for girth at least 7.
    pub chain: Option<bool>,
    /// `count01 >= refined_bound`, when a refined bound applies.
    pub refined: Option<bool>,
    /// `count01 == exact_count`, when an exact count is known.
    pub exact_count: Option<bool>,
}

impl Verdicts {
    pub fn all_hold(&self) -> bool {
        self.main_bound
            && [self.hedetniemi, self.chain, self.refined, self.exact_count]
                .into_iter()
                .all(|v| v != Some(false))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub girth: usize,
    pub diameter: usize,
    pub count01: usize,
    pub mult1: usize,
    pub gamma: Option<usize>,
    pub main_bound: usize,
    /// Lollipop refinement or strengthened compass bound for the core family.
    pub refined_bound: Option<usize>,
    /// Closed-form value of `count01` when the graph itself is a cycle or a
    /// lollipop covered by the exact formula.
    pub exact_count: Option<usize>,
    /// `floor(r/2) - r'` for compass cores.
    pub alpha: Option<usize>,
    /// The largest applicable lower bound.
    pub k: usize,
    pub core: CoreKind,
    pub core_is_whole_graph: bool,
    pub verdicts: Verdicts,
}

/// Builds the full report for a connected unicyclic graph, computing gamma
/// when `g` has at most [`DOMINATION_CAP`] vertices.
pub fn analyze(g: &Graph) -> Result<BoundReport> {
    let n = g.n();
    let girth = unicyclic_decompose(g)?.girth();
    let d = diameter(g)?;
    let class = reduce_to_core(g)?;
    let whole = class.is_whole_graph(g);

    let count01 = count_below_one(g);
    let mult1 = multiplicity(g, &integer(1));
    let gamma = if n <= DOMINATION_CAP {
        Some(domination_number(g)?)
    } else {
        None
    };
    let main_bound = main_lower_bound(d, girth)?;

    let (refined_bound, alpha) = match class.kind {
        CoreKind::Lollipop { r, .. } if r % 6 != 0 => (Some(refined_lollipop_bound(d, r)?), None),
        CoreKind::Compass(p) => {
            // the compass with t and s exchanged is the same graph
            let swapped = CompassParams { t: p.s(), ..p };
            let strong = compass_bounds(p)?.1.or(compass_bounds(swapped)?.1);
            (strong, Some(compass_alpha(p)))
        }
        _ => (None, None),
    };
    let exact_count = match class.kind {
        CoreKind::Cycle { r } if whole => Some(2 * r.div_ceil(6) - 1),
        CoreKind::Lollipop { n, r } if whole => lollipop_exact_count(n, r)?,
        _ => None,
    };
    let k = main_bound.max(refined_bound.unwrap_or(0));

    let verdicts = Verdicts {
        main_bound: count01 >= main_bound,
        hedetniemi: gamma.map(|gm| count01 <= gm),
        chain: (girth >= 7).then(|| {
            d < 3 * main_bound && main_bound <= count01 && gamma.is_none_or(|gm| count01 <= gm)
        }),
        refined: refined_bound.map(|b| count01 >= b),
        exact_count: exact_count.map(|c| count01 == c),
    };

    Ok(BoundReport {
        n,
        girth,
        diameter: d,
        count01,
        mult1,
        gamma,
        main_bound,
        refined_bound,
        exact_count,
        alpha,
        k,
        core: class.kind,
        core_is_whole_graph: whole,
        verdicts,
    })
}
