//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero on any
//! failure.

use std::process::ExitCode;
use std::time::Instant;

use unicyclic::exact_linalg::integer;
use unicyclic::graph::{make_compass, make_lollipop, CompassParams};
use unicyclic::harness::{run_suite, Limits, Suite};
use unicyclic::spectra::count_interval;

struct Outcome {
    passed: bool,
    detail: String,
}

fn suite(suite: Suite, max_n: usize) -> Outcome {
    match run_suite(
        suite,
        Limits {
            max_n: Some(max_n),
            seed: 0,
        },
    ) {
        Ok(rep) => {
            let mut detail = format!(
                "{} instances, {} failures",
                rep.instances,
                rep.failures.len()
            );
            for line in rep.failures.iter().take(5) {
                detail.push_str(&format!("\n      {line}"));
            }
            Outcome {
                passed: rep.passed() && rep.instances > 0,
                detail,
            }
        }
        Err(e) => Outcome {
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

fn worked_examples() -> Outcome {
    let zero = integer(0);
    let one = integer(1);
    let a = count_interval(&make_lollipop(12, 8).unwrap(), &zero, &one)
        .unwrap()
        .count;
    let p = CompassParams::new(14, 8, 4, 3).unwrap();
    let b = count_interval(&make_compass(p).unwrap(), &zero, &one)
        .unwrap()
        .count;
    Outcome {
        passed: a == 4 && b == 5,
        detail: format!("m[0,1) of C(12,8) = {a} (want 4), of C(14,8)(4,3) = {b} (want 5)"),
    }
}

type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            "path law, n = 1..120",
            Box::new(|| suite(Suite::Paths, 120)),
        ),
        (
            "cycle law, n = 3..120",
            Box::new(|| suite(Suite::Cycles, 120)),
        ),
        ("worked examples", Box::new(worked_examples)),
        (
            "lollipop bounds, exact counts, phi(1) table, sign probes, 3 <= r <= n <= 40",
            Box::new(|| suite(Suite::Lollipops, 40)),
        ),
        (
            "compass base and strengthened bounds, n <= 26",
            Box::new(|| suite(Suite::Compasses, 26)),
        ),
        (
            "eigenvalue-1 witnesses and multiplicities, n <= 60",
            Box::new(|| suite(Suite::Witnesses, 60)),
        ),
        (
            "characteristic polynomial identities, n <= 12, 20 random joins",
            Box::new(|| suite(Suite::Charpoly, 12)),
        ),
        (
            "edge interlacing, 200 seeded pairs, n <= 30, slack 1e-8",
            Box::new(|| suite(Suite::Interlacing, 30)),
        ),
        (
            "pendant monotonicity and P_3/P_6 attachment, 100 seeded instances",
            Box::new(|| suite(Suite::Attachment, 15)),
        ),
        (
            "main bound and domination bound on all unicyclic graphs, n <= 10",
            Box::new(|| suite(Suite::Exhaustive, 10)),
        ),
        (
            "tree inequality, 200 seeded trees, n <= 20",
            Box::new(|| suite(Suite::Trees, 20)),
        ),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!(
            "{status} {:>2}. {name}: {} [{:.2} s]",
            i + 1,
            outcome.detail,
            start.elapsed().as_secs_f64()
        );
        if !outcome.passed {
            failed += 1;
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
