use std::fmt;
use std::io::Write;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{analyze, domination_number, BoundReport, DOMINATION_CAP};
use crate::error::{Error, Result};
use crate::exact_linalg::integer;
use crate::graph::{
    make_compass, make_cycle, make_lollipop, make_path, CompassParams, CoreKind, Graph,
};
use crate::spectra::{count_below_one, multiplicity};

pub const SWEEP_HEADER: &str =
    "family,n,r,r_prime,t,d,girth,main_bound,refined_bound,count01,mult1,gamma,bound_ok,hedetniemi_ok";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Lollipop,
    Compass,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Path,
        Family::Cycle,
        Family::Lollipop,
        Family::Compass,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Lollipop => "lollipop",
            Family::Compass => "compass",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.name() == s)
            .ok_or_else(|| {
                Error::invalid(format!(
                    "unknown family {s:?}; expected path, cycle, lollipop or compass"
                ))
            })
    }
}

/// One CSV row. `None` becomes an empty cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub family: String,
    pub n: usize,
    pub r: Option<usize>,
    pub r_prime: Option<usize>,
    pub t: Option<usize>,
    pub d: usize,
    pub girth: Option<usize>,
    pub main_bound: Option<usize>,
    pub refined_bound: Option<usize>,
    pub count01: usize,
    pub mult1: usize,
    pub gamma: Option<usize>,
    pub bound_ok: Option<bool>,
    pub hedetniemi_ok: Option<bool>,
}

impl SweepRow {
    /// Row for a unicyclic graph from its report, with the family parameters
    /// given explicitly.
    pub fn from_report(
        family: &str,
        params: (Option<usize>, Option<usize>, Option<usize>),
        rep: &BoundReport,
    ) -> Self {
        SweepRow {
            family: family.to_string(),
            n: rep.n,
            r: params.0,
            r_prime: params.1,
            t: params.2,
            d: rep.diameter,
            girth: Some(rep.girth),
            main_bound: Some(rep.main_bound),
            refined_bound: rep.refined_bound,
            count01: rep.count01,
            mult1: rep.mult1,
            gamma: rep.gamma,
            bound_ok: Some(rep.verdicts.main_bound),
            hedetniemi_ok: rep.verdicts.hedetniemi,
        }
    }

    /// Row for a unicyclic graph, naming the family when the graph is itself
    /// a cycle, lollipop or compass.
    pub fn describe(rep: &BoundReport) -> Self {
        let (family, params) = match rep.core {
            _ if !rep.core_is_whole_graph => ("unicyclic", (None, None, None)),
            CoreKind::Cycle { r } => ("cycle", (Some(r), None, None)),
            CoreKind::Lollipop { r, .. } => ("lollipop", (Some(r), None, None)),
            CoreKind::Compass(p) => ("compass", (Some(p.r), Some(p.r_prime), Some(p.t))),
            CoreKind::Other => ("unicyclic", (None, None, None)),
        };
        Self::from_report(family, params, rep)
    }

    /// Row for a tree. Girth and bound columns stay empty.
    pub fn for_tree(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n == 0 || !g.is_connected() {
            return Err(Error::NotConnected);
        }
        if g.edge_count() != n - 1 {
            return Err(Error::invalid("graph is not a tree"));
        }
        let is_path = n == 1 || (0..n).all(|v| g.degree(v) <= 2);
        let d = (0..n)
            .map(|v| g.bfs_distances(v).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0);
        let count01 = count_below_one(g);
        let gamma = if n <= DOMINATION_CAP {
            Some(domination_number(g)?)
        } else {
            None
        };
        Ok(SweepRow {
            family: if is_path { "path" } else { "tree" }.to_string(),
            n,
            r: None,
            r_prime: None,
            t: None,
            d,
            girth: None,
            main_bound: None,
            refined_bound: None,
            count01,
            mult1: multiplicity(g, &integer(1)),
            gamma,
            bound_ok: None,
            hedetniemi_ok: gamma.map(|gm| count01 <= gm),
        })
    }
}

enum Instance {
    Path(usize),
    Cycle(usize),
    Lollipop(usize, usize),
    Compass(CompassParams),
}

impl Instance {
    fn row(&self) -> Result<SweepRow> {
        match *self {
            Instance::Path(n) => SweepRow::for_tree(&make_path(n)?),
            Instance::Cycle(n) => Ok(SweepRow::from_report(
                "cycle",
                (Some(n), None, None),
                &analyze(&make_cycle(n)?)?,
            )),
            Instance::Lollipop(n, r) => Ok(SweepRow::from_report(
                "lollipop",
                (Some(r), None, None),
                &analyze(&make_lollipop(n, r)?)?,
            )),
            Instance::Compass(p) => Ok(SweepRow::from_report(
                "compass",
                (Some(p.r), Some(p.r_prime), Some(p.t)),
                &analyze(&make_compass(p)?)?,
            )),
        }
    }
}

fn instances_with_n(family: Family, n: usize) -> Vec<Instance> {
    match family {
        Family::Path if n >= 1 => vec![Instance::Path(n)],
        Family::Cycle if n >= 3 => vec![Instance::Cycle(n)],
        Family::Lollipop => (3..n).map(|r| Instance::Lollipop(n, r)).collect(),
        Family::Compass => CompassParams::all_with_n(n)
            .into_iter()
            .map(Instance::Compass)
            .collect(),
        _ => Vec::new(),
    }
}

/// Writes one row per family member with order in `n_range`, in
/// lexicographic parameter order, and returns the number of rows.
///
/// Members of one order are analyzed in parallel; each order is written
/// before the next one starts.
pub fn sweep<W: Write>(family: Family, n_range: RangeInclusive<usize>, out: W) -> Result<usize> {
    if n_range.is_empty() {
        return Err(Error::invalid(format!(
            "empty range {}..{}",
            n_range.start(),
            n_range.end()
        )));
    }
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    writer.write_record(SWEEP_HEADER.split(','))?;
    let mut rows = 0;
    for n in n_range {
        let batch: Vec<Result<SweepRow>> = instances_with_n(family, n)
            .par_iter()
            .map(Instance::row)
            .collect();
        for row in batch {
            writer.serialize(row?)?;
            rows += 1;
        }
        writer.flush().map_err(|e| Error::Csv(e.into()))?;
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(family: Family, range: RangeInclusive<usize>) -> (String, Vec<SweepRow>) {
        let mut buf = Vec::new();
        sweep(family, range, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let parsed = csv::Reader::from_reader(text.as_bytes())
            .deserialize()
            .collect::<std::result::Result<Vec<SweepRow>, _>>()
            .unwrap();
        (text, parsed)
    }

    #[test]
    fn header_is_exact() {
        let (text, _) = rows(Family::Cycle, 3..=3);
        assert_eq!(text.lines().next().unwrap(), SWEEP_HEADER);
    }

    #[test]
    fn lollipop_rows_hold() {
        let (_, parsed) = rows(Family::Lollipop, 4..=20);
        assert_eq!(parsed.len(), (4..=20).map(|n| n - 3).sum::<usize>());
        assert!(parsed
            .iter()
            .all(|r| r.bound_ok == Some(true) && r.r_prime.is_none()));
        let pairs: Vec<(usize, usize)> = parsed.iter().map(|r| (r.n, r.r.unwrap())).collect();
        let mut sorted = pairs.clone();
        sorted.sort();
        assert_eq!(pairs, sorted);
    }

    #[test]
    fn cycle_counts() {
        let (_, parsed) = rows(Family::Cycle, 3..=60);
        for row in parsed {
            assert_eq!(row.count01, 2 * row.n.div_ceil(6) - 1);
            assert_eq!(row.girth, Some(row.n));
        }
    }

    #[test]
    fn compass_rows_flag_strengthened_cases() {
        let (_, parsed) = rows(Family::Compass, 5..=16);
        let strong = parsed
            .iter()
            .find(|r| (r.n, r.r, r.r_prime, r.t) == (12, Some(6), Some(3), Some(1)))
            .unwrap();
        assert_eq!(strong.refined_bound, Some(4));
        assert!(parsed
            .iter()
            .all(|r| r.bound_ok == Some(true) && r.hedetniemi_ok == Some(true)));
    }

    #[test]
    fn path_rows_leave_bound_cells_empty() {
        let (text, parsed) = rows(Family::Path, 1..=6);
        assert_eq!(parsed.len(), 6);
        assert!(text
            .lines()
            .nth(3)
            .unwrap()
            .starts_with("path,3,,,,2,,,,1,1,1,,true"));
        assert!(parsed.iter().all(|r| r.count01 == r.n.div_ceil(3)));
    }

    #[test]
    fn empty_range_is_rejected() {
        #[allow(clippy::reversed_empty_ranges)]
        let range = 5..=4;
        assert!(sweep(Family::Path, range, Vec::new()).is_err());
    }

    #[test]
    fn describe_names_whole_family_graphs() {
        let rep = analyze(&make_lollipop(9, 4).unwrap()).unwrap();
        assert_eq!(SweepRow::describe(&rep).family, "lollipop");
        let mut g = make_cycle(5).unwrap();
        let v = g.add_vertex();
        g.try_add_edge(0, v).unwrap();
        let w = g.add_vertex();
        g.try_add_edge(0, w).unwrap();
        let rep = analyze(&g).unwrap();
        assert_eq!(SweepRow::describe(&rep).family, "unicyclic");
    }
}
