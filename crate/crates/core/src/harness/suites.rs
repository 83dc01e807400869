use std::time::Instant;

use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::random::{random_connected, random_tree, random_unicyclic};
use super::{enumerate_unicyclic, Limits, Suite, VerifyReport, ENUMERATION_MAX_N};
use crate::bounds::{
    analyze, compass_bounds, domination_number, lollipop_exact_count, main_lower_bound,
    refined_lollipop_bound, tree_lower_bound,
};
use crate::charpoly::{
    join_identity_holds, lollipop_value_at_one, phi_lollipop, verify_charpoly_identities,
};
use crate::error::{Error, Result};
use crate::exact_linalg::{integer, Rational};
use crate::graph::{
    diameter, make_compass, make_cycle, make_lollipop, make_path, CompassParams, Graph,
};
use crate::spectra::{
    check_interlacing, count_below, count_below_one, multiplicity, spectrum_float,
};
use crate::witnesses::{
    compass_one_witness, cycle_one_vectors, lollipop_one_witness, path_one_vector,
};

pub const TREE_INSTANCES: usize = 200;
pub const INTERLACING_INSTANCES: usize = 200;
pub const ATTACHMENT_INSTANCES: usize = 100;
pub const RANDOM_JOINS: usize = 20;

/// Failure lines for one instance.
struct Checks {
    label: String,
    failures: Vec<String>,
}

impl Checks {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(format!("{}: {}", self.label, what()));
        }
    }
}

fn instance(label: String, body: impl FnOnce(&mut Checks) -> Result<()>) -> Vec<String> {
    let mut checks = Checks {
        label,
        failures: Vec::new(),
    };
    if let Err(e) = body(&mut checks) {
        let line = format!("{}: {e}", checks.label);
        checks.failures.push(line);
    }
    checks.failures
}

/// Runs `check` over `items` in parallel and keeps failures in item order.
fn run_all<T: Sync>(
    items: &[T],
    check: impl Fn(&T) -> Vec<String> + Sync + Send,
) -> (usize, Vec<String>) {
    let per_item: Vec<Vec<String>> = items.par_iter().map(check).collect();
    (items.len(), per_item.into_iter().flatten().collect())
}

/// Runs one suite. Failures are reported, not returned as errors; an error
/// means the limits themselves are unusable.
pub fn run_suite(suite: Suite, limits: Limits) -> Result<VerifyReport> {
    let start = Instant::now();
    let max_n = limits.max_n.unwrap_or(suite.default_max_n());
    let (instances, failures) = match suite {
        Suite::Paths => paths(max_n),
        Suite::Cycles => cycles(max_n),
        Suite::Lollipops => lollipops(max_n),
        Suite::Compasses => compasses(max_n),
        Suite::Witnesses => witnesses(max_n),
        Suite::Charpoly => charpoly(max_n, limits.seed)?,
        Suite::Exhaustive => exhaustive(max_n)?,
        Suite::Trees => trees(max_n, limits.seed)?,
        Suite::Interlacing => interlacing(max_n, limits.seed)?,
        Suite::Attachment => attachment(max_n, limits.seed)?,
        Suite::Inequalities => {
            let mut total = (0, Vec::new());
            let size = |part: Suite| limits.max_n.unwrap_or(part.default_max_n());
            for part in [
                trees(size(Suite::Trees), limits.seed)?,
                interlacing(size(Suite::Interlacing), limits.seed)?,
                attachment(size(Suite::Attachment), limits.seed)?,
            ] {
                total.0 += part.0;
                total.1.extend(part.1);
            }
            total
        }
    };
    Ok(VerifyReport {
        suite: suite.name().to_string(),
        instances,
        failures,
        wall_time: start.elapsed(),
    })
}

fn paths(max_n: usize) -> (usize, Vec<String>) {
    let ns: Vec<usize> = (1..=max_n).collect();
    run_all(&ns, |&n| {
        instance(format!("path n={n}"), |c| {
            let g = make_path(n)?;
            let count = count_below_one(&g);
            c.expect(count == n.div_ceil(3), || {
                format!("count {count} != ceil(n/3)")
            });
            let m = multiplicity(&g, &integer(1));
            c.expect(m == usize::from(n % 3 == 0), || {
                format!("multiplicity of 1 is {m}")
            });
            if n % 3 == 0 {
                path_one_vector(n)?;
            }
            Ok(())
        })
    })
}

fn cycles(max_n: usize) -> (usize, Vec<String>) {
    let ns: Vec<usize> = (3..=max_n).collect();
    run_all(&ns, |&n| {
        instance(format!("cycle n={n}"), |c| {
            let g = make_cycle(n)?;
            let count = count_below_one(&g);
            c.expect(count == 2 * n.div_ceil(6) - 1, || {
                format!("count {count} != 2 ceil(n/6) - 1")
            });
            let bound = main_lower_bound(n / 2, n)?;
            c.expect(count >= bound, || {
                format!("count {count} below bound {bound}")
            });
            let m = multiplicity(&g, &integer(1));
            c.expect((m == 2) == (n % 6 == 0), || {
                format!("multiplicity of 1 is {m}")
            });
            if n % 6 == 0 {
                cycle_one_vectors(n)?;
            }
            Ok(())
        })
    })
}

fn sign(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// A rational strictly between the `(k-1)`-th and `k`-th smallest
/// eigenvalues of `g`, bracketed in floating point and then certified by an
/// exact count. `k = 1` uses `-1/2`.
fn certified_probe(g: &Graph, k: usize) -> Result<Option<Rational>> {
    let alpha = if k == 1 {
        Rational::new((-1).into(), 2.into())
    } else {
        let spectrum = spectrum_float(g, 1e-12)?;
        let mid = (spectrum.values[k - 2] + spectrum.values[k - 1]) / 2.0;
        let scale = 1i64 << 40;
        Rational::new(((mid * scale as f64).round() as i64).into(), scale.into())
    };
    let ok = count_below(g, &alpha) == k - 1 && multiplicity(g, &alpha) == 0;
    Ok(ok.then_some(alpha))
}

fn lollipops(max_n: usize) -> (usize, Vec<String>) {
    let pairs: Vec<(usize, usize)> = (3..=max_n)
        .flat_map(|n| (3..=n).map(move |r| (n, r)))
        .collect();
    run_all(&pairs, |&(n, r)| {
        instance(format!("lollipop n={n} r={r}"), |c| {
            let g = if r == n {
                make_cycle(n)?
            } else {
                make_lollipop(n, r)?
            };
            let d = diameter(&g)?;
            let count = count_below_one(&g);
            let bound = main_lower_bound(d, r)?;
            c.expect(count >= bound, || {
                format!("count {count} below bound {bound}")
            });
            if r == n {
                return Ok(());
            }
            c.expect(d == n - r.div_ceil(2), || {
                format!("diameter {d} != n - ceil(r/2)")
            });
            if r % 6 != 0 {
                let refined = refined_lollipop_bound(d, r)?;
                c.expect(count >= refined, || {
                    format!("count {count} below refined bound {refined}")
                });
            }
            let Some(k) = lollipop_exact_count(n, r)? else {
                return Ok(());
            };
            c.expect(count == k, || format!("count {count} != exact value {k}"));
            let phi = phi_lollipop(n, r)?;
            let at_one = phi.eval_at(&integer(1));
            let table = lollipop_value_at_one(r).expect("r is not a multiple of 6");
            c.expect(at_one == integer(table), || {
                format!("phi(1) = {at_one}, table says {table}")
            });
            match certified_probe(&g, k)? {
                None => c.expect(false, || format!("no certified probe below eigenvalue {k}")),
                Some(alpha) => {
                    let s = sign(&phi.eval_at(&alpha));
                    let want = if (n - k + 1) % 2 == 0 { 1 } else { -1 };
                    c.expect(s == want, || {
                        format!("phi({alpha}) has sign {s}, expected {want}")
                    });
                    c.expect(s == -sign(&at_one), || {
                        format!("phi({alpha}) and phi(1) share a sign")
                    });
                }
            }
            Ok(())
        })
    })
}

fn compasses(max_n: usize) -> (usize, Vec<String>) {
    let params: Vec<CompassParams> = (5..=max_n).flat_map(CompassParams::all_with_n).collect();
    run_all(&params, |&p| {
        let label = format!("compass n={} r={} r'={} t={}", p.n, p.r, p.r_prime, p.t);
        instance(label, |c| {
            let g = make_compass(p)?;
            let d = diameter(&g)?;
            c.expect(d == p.diameter(), || {
                format!("diameter {d} != closed form {}", p.diameter())
            });
            let count = count_below_one(&g);
            let (base, strong) = compass_bounds(p)?;
            c.expect(count >= base, || {
                format!("count {count} below base bound {base}")
            });
            if let Some(s) = strong {
                c.expect(count >= s, || {
                    format!("count {count} below strengthened bound {s}")
                });
            }
            Ok(())
        })
    })
}

enum WitnessCase {
    Path(usize),
    Cycle(usize),
    Lollipop(usize, usize),
    Compass(CompassParams),
}

fn witnesses(max_n: usize) -> (usize, Vec<String>) {
    let mut cases: Vec<WitnessCase> = Vec::new();
    cases.extend((3..=max_n).step_by(3).map(WitnessCase::Path));
    cases.extend((6..=max_n).step_by(6).map(WitnessCase::Cycle));
    for n in 4..=max_n {
        for r in 3..n {
            if matches!((r % 6, n % 3), (0, _) | (1, 0) | (3, 1)) {
                cases.push(WitnessCase::Lollipop(n, r));
            }
        }
        for r in (6..n.saturating_sub(1)).step_by(6) {
            for t in 1..n - r {
                cases.push(WitnessCase::Compass(CompassParams {
                    n,
                    r,
                    r_prime: r / 2,
                    t,
                }));
            }
        }
    }
    let one = integer(1);
    run_all(&cases, |case| match *case {
        WitnessCase::Path(n) => instance(format!("path witness n={n}"), |c| {
            path_one_vector(n)?;
            let m = multiplicity(&make_path(n)?, &one);
            c.expect(m >= 1, || format!("multiplicity of 1 is {m}"));
            Ok(())
        }),
        WitnessCase::Cycle(n) => instance(format!("cycle witnesses n={n}"), |c| {
            cycle_one_vectors(n)?;
            let m = multiplicity(&make_cycle(n)?, &one);
            c.expect(m == 2, || format!("multiplicity of 1 is {m}"));
            Ok(())
        }),
        WitnessCase::Lollipop(n, r) => instance(format!("lollipop witness n={n} r={r}"), |c| {
            let w = lollipop_one_witness(n, r)?;
            c.expect(w.is_some(), || "no witness returned".into());
            let m = multiplicity(&make_lollipop(n, r)?, &one);
            let want = if r % 6 == 0 && n % 3 == 0 { 2 } else { 1 };
            c.expect(m == want, || {
                format!("multiplicity of 1 is {m}, expected {want}")
            });
            Ok(())
        }),
        WitnessCase::Compass(p) => {
            let label = format!(
                "compass witness n={} r={} r'={} t={}",
                p.n, p.r, p.r_prime, p.t
            );
            instance(label, |c| {
                let w = compass_one_witness(p)?;
                c.expect(w.is_some(), || "no witness returned".into());
                let m = multiplicity(&make_compass(p)?, &one);
                c.expect(m >= 1, || format!("multiplicity of 1 is {m}"));
                Ok(())
            })
        }
    })
}

fn charpoly(max_n: usize, seed: u64) -> Result<(usize, Vec<String>)> {
    let report = verify_charpoly_identities(max_n)?;
    let mut failures: Vec<String> = report
        .failures()
        .map(|f| format!("{} ({}): polynomials differ", f.identity, f.instance))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let joins: Vec<(Graph, usize, Graph, usize)> = (0..RANDOM_JOINS)
        .map(|_| {
            let a = random_connected(rng.gen_range(1..=5), rng.gen_range(0..=2), &mut rng);
            let b = random_connected(rng.gen_range(1..=5), rng.gen_range(0..=2), &mut rng);
            let (u, v) = (rng.gen_range(0..a.n()), rng.gen_range(0..b.n()));
            (a, u, b, v)
        })
        .collect();
    let (count, join_failures) = run_all(&joins, |(a, u, b, v)| {
        instance(
            format!(
                "random join {:?}@{u} + {:?}@{v}",
                a.edges().collect::<Vec<_>>(),
                b.edges().collect::<Vec<_>>()
            ),
            |c| {
                c.expect(join_identity_holds(a, *u, b, *v), || {
                    "join identity fails".into()
                });
                Ok(())
            },
        )
    });
    failures.extend(join_failures);
    Ok((report.checks.len() + count, failures))
}

fn exhaustive(max_n: usize) -> Result<(usize, Vec<String>)> {
    if max_n > ENUMERATION_MAX_N {
        return Err(Error::invalid(format!(
            "exhaustive suite supports n <= {ENUMERATION_MAX_N}, got {max_n}"
        )));
    }
    let mut graphs = Vec::new();
    for n in 3..=max_n {
        graphs.extend(enumerate_unicyclic(n)?);
    }
    Ok(run_all(&graphs, |g| {
        instance(
            format!("unicyclic {:?}", g.edges().collect::<Vec<_>>()),
            |c| {
                let rep = analyze(g)?;
                let v = rep.verdicts;
                c.expect(v.main_bound, || {
                    format!("count {} below bound {}", rep.count01, rep.main_bound)
                });
                c.expect(v.hedetniemi == Some(true), || {
                    format!("count {} above gamma {:?}", rep.count01, rep.gamma)
                });
                c.expect(v.all_hold(), || format!("verdicts {v:?}"));
                Ok(())
            },
        )
    }))
}

fn random_sizes(
    count: usize,
    lo: usize,
    max_n: usize,
    seed: u64,
    what: &str,
) -> Result<(ChaCha8Rng, Vec<usize>)> {
    if max_n < lo {
        return Err(Error::invalid(format!(
            "{what} need max_n >= {lo}, got {max_n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sizes = (0..count).map(|_| rng.gen_range(lo..=max_n)).collect();
    Ok((rng, sizes))
}

fn trees(max_n: usize, seed: u64) -> Result<(usize, Vec<String>)> {
    let (mut rng, sizes) = random_sizes(TREE_INSTANCES, 2, max_n, seed, "random trees")?;
    let graphs: Vec<Graph> = sizes
        .into_iter()
        .map(|n| random_tree(n, &mut rng))
        .collect();
    Ok(run_all(&graphs, |g| {
        instance(format!("tree {:?}", g.edges().collect::<Vec<_>>()), |c| {
            let d = (0..g.n())
                .map(|v| g.bfs_distances(v).into_iter().max().unwrap_or(0))
                .max()
                .unwrap_or(0);
            let count = count_below_one(g);
            let gamma = domination_number(g)?;
            let lower = tree_lower_bound(d);
            c.expect(lower <= count, || {
                format!("count {count} below ceil((d+1)/3) = {lower}")
            });
            c.expect(count <= gamma, || {
                format!("count {count} above gamma {gamma}")
            });
            Ok(())
        })
    }))
}

fn interlacing(max_n: usize, seed: u64) -> Result<(usize, Vec<String>)> {
    let (mut rng, sizes) = random_sizes(
        INTERLACING_INSTANCES,
        2,
        max_n,
        seed,
        "interlacing instances",
    )?;
    let pairs: Vec<(Graph, (usize, usize))> = sizes
        .into_iter()
        .map(|n| {
            let g = random_connected(n, rng.gen_range(0..=n / 2), &mut rng);
            let edges: Vec<_> = g.edges().collect();
            let e = *edges
                .choose(&mut rng)
                .expect("connected graph on 2+ vertices has an edge");
            (g, e)
        })
        .collect();
    Ok(run_all(&pairs, |(g, e)| {
        instance(
            format!(
                "interlacing {:?} minus {e:?}",
                g.edges().collect::<Vec<_>>()
            ),
            |c| {
                c.expect(check_interlacing(g, *e)?, || {
                    "interlacing chain fails".into()
                });
                Ok(())
            },
        )
    }))
}

struct Attachment {
    base: Graph,
    pendant_at: usize,
    path_len: usize,
    path_at: usize,
}

fn attachment(max_n: usize, seed: u64) -> Result<(usize, Vec<String>)> {
    let (mut rng, sizes) =
        random_sizes(ATTACHMENT_INSTANCES, 3, max_n, seed, "attachment instances")?;
    let cases: Vec<Attachment> = sizes
        .into_iter()
        .enumerate()
        .map(|(i, n)| Attachment {
            base: random_unicyclic(n, &mut rng),
            pendant_at: rng.gen_range(0..n),
            path_len: if i % 2 == 0 { 3 } else { 6 },
            path_at: rng.gen_range(0..n),
        })
        .collect();
    let one = integer(1);
    Ok(run_all(&cases, |a| {
        let label = format!(
            "attachment {:?} pendant@{} P_{}@{}",
            a.base.edges().collect::<Vec<_>>(),
            a.pendant_at,
            a.path_len,
            a.path_at
        );
        instance(label, |c| {
            let g = &a.base;
            let count = count_below_one(g);
            let mut with_pendant = g.clone();
            let v = with_pendant.add_vertex();
            with_pendant.try_add_edge(a.pendant_at, v)?;
            let grown = count_below_one(&with_pendant);
            c.expect(grown >= count, || {
                format!("adding a pendant drops the count from {count} to {grown}")
            });
            for p in g.pendant_vertices() {
                let reduced = count_below_one(&g.without_vertex(p));
                c.expect(count >= reduced, || {
                    format!("deleting pendant {p} raises the count to {reduced}")
                });
            }

            let path = make_path(a.path_len)?;
            let mut h = g.disjoint_union(&path);
            h.try_add_edge(a.path_at, g.n())?;
            let (mg, mh) = (multiplicity(g, &one), multiplicity(&h, &one));
            c.expect(mg == mh, || {
                format!("multiplicity of 1 changes from {mg} to {mh}")
            });
            Ok(())
        })
    }))
}
