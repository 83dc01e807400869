use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use unicyclic::bounds::{analyze, BoundReport, Verdicts};
use unicyclic::graph::{
    make_compass, make_cycle, make_lollipop, make_path, read_edge_list_file, write_edge_list_file,
    CompassParams, CoreKind,
};
use unicyclic::harness::{run_suite, sweep, Family, Limits, Suite, SweepRow};
use unicyclic::{Error, Graph, Result};

#[derive(Parser)]
#[command(
    name = "unicyclic",
    version,
    about = "Exact Laplacian eigenvalue counts and bounds for unicyclic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family graph as an edge list.
    Gen {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Girth (lollipop, compass).
        #[arg(long)]
        r: Option<usize>,
        /// Cycle distance between the two tail attachments (compass).
        #[arg(long)]
        rp: Option<usize>,
        /// Length of the first tail (compass).
        #[arg(long)]
        t: Option<usize>,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Count eigenvalues in [0,1) and check every applicable bound.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite; exits non-zero when any check fails.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Analyze every family member with order in A..B (inclusive) as CSV.
    Scan {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_parser = parse_range)]
        n_range: RangeInclusive<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `A..B` or `A..=B`, both inclusive, or a single `A`.
fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad bound {x:?}: {e}"))
    };
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let a = num(s)?;
            Ok(a..=a)
        }
    }
}

fn need(value: Option<usize>, flag: &str, family: Family) -> Result<usize> {
    value
        .ok_or_else(|| Error::InvalidParameter(format!("--{flag} is required for family {family}")))
}

fn generate(
    family: Family,
    n: usize,
    r: Option<usize>,
    rp: Option<usize>,
    t: Option<usize>,
) -> Result<Graph> {
    match family {
        Family::Path => make_path(n),
        Family::Cycle => make_cycle(n),
        Family::Lollipop => make_lollipop(n, need(r, "r", family)?),
        Family::Compass => make_compass(CompassParams::new(
            n,
            need(r, "r", family)?,
            need(rp, "rp", family)?,
            need(t, "t", family)?,
        )?),
    }
}

#[derive(Serialize)]
struct AnalyzeJson<'a> {
    #[serde(flatten)]
    row: &'a SweepRow,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    core: Option<CoreKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdicts: Option<Verdicts>,
}

fn cell<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn print_table(row: &SweepRow, rep: Option<&BoundReport>) {
    let mut lines = vec![
        ("family", row.family.clone()),
        ("n", row.n.to_string()),
        ("r", cell(row.r)),
        ("r_prime", cell(row.r_prime)),
        ("t", cell(row.t)),
        ("diameter", row.d.to_string()),
        ("girth", cell(row.girth)),
        ("m[0,1)", row.count01.to_string()),
        ("m(1)", row.mult1.to_string()),
        ("gamma", cell(row.gamma)),
        ("main_bound", cell(row.main_bound)),
        ("refined_bound", cell(row.refined_bound)),
        ("bound_ok", cell(row.bound_ok)),
        ("hedetniemi_ok", cell(row.hedetniemi_ok)),
    ];
    if let Some(rep) = rep {
        lines.push(("exact_count", cell(rep.exact_count)));
        lines.push(("alpha", cell(rep.alpha)));
        lines.push(("k", rep.k.to_string()));
        lines.push(("core", rep.core.family_name().to_string()));
        lines.push(("chain_ok", cell(rep.verdicts.chain)));
        lines.push(("all_verdicts_hold", rep.verdicts.all_hold().to_string()));
    }
    for (key, value) in lines {
        println!("{key:<18}{value}");
    }
}

fn run_analyze(file: &Path, json: bool) -> Result<()> {
    let g = read_edge_list_file(file)?;
    let (row, rep) = if g.n() > 0 && g.edge_count() + 1 == g.n() {
        (SweepRow::for_tree(&g)?, None)
    } else {
        let rep = analyze(&g)?;
        (SweepRow::describe(&rep), Some(rep))
    };
    if json {
        let out = AnalyzeJson {
            row: &row,
            alpha: rep.as_ref().and_then(|r| r.alpha),
            k: rep.as_ref().map(|r| r.k),
            exact_count: rep.as_ref().and_then(|r| r.exact_count),
            core: rep.as_ref().map(|r| r.core),
            verdicts: rep.as_ref().map(|r| r.verdicts),
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&out).expect("report serializes")
        );
    } else {
        print_table(&row, rep.as_ref());
    }
    Ok(())
}

fn run_scan(family: Family, range: RangeInclusive<usize>, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|source| Error::Io {
                path: path.display().to_string(),
                source,
            })?;
            sweep(family, range, BufWriter::new(file))?;
        }
        None => {
            sweep(family, range, io::stdout().lock())?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen {
            family,
            n,
            r,
            rp,
            t,
            out,
        } => {
            write_edge_list_file(&generate(family, n, r, rp, t)?, &out)?;
        }
        Command::Analyze { file, json } => run_analyze(&file, json)?,
        Command::Verify { suite, max_n, seed } => {
            let report = run_suite(suite, Limits { max_n, seed })?;
            print!("{report}");
            io::stdout().flush().ok();
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Scan {
            family,
            n_range,
            out,
        } => run_scan(family, n_range, out.as_deref())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
