//! Enumeration, verification suites and CSV sweeps.

mod enumerate;
pub mod random;
mod suites;
mod sweep;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};

pub use enumerate::{enumerate_unicyclic, ENUMERATION_MAX_N};
pub use suites::{
    run_suite, ATTACHMENT_INSTANCES, INTERLACING_INSTANCES, RANDOM_JOINS, TREE_INSTANCES,
};
pub use sweep::{sweep, Family, SweepRow, SWEEP_HEADER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Paths,
    Cycles,
    Lollipops,
    Compasses,
    Witnesses,
    Charpoly,
    Exhaustive,
    Trees,
    Interlacing,
    Attachment,
    /// Trees, interlacing and attachment together.
    Inequalities,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Paths,
        Suite::Cycles,
        Suite::Lollipops,
        Suite::Compasses,
        Suite::Witnesses,
        Suite::Charpoly,
        Suite::Exhaustive,
        Suite::Trees,
        Suite::Interlacing,
        Suite::Attachment,
        Suite::Inequalities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Paths => "paths",
            Suite::Cycles => "cycles",
            Suite::Lollipops => "lollipops",
            Suite::Compasses => "compasses",
            Suite::Witnesses => "witnesses",
            Suite::Charpoly => "charpoly",
            Suite::Exhaustive => "exhaustive",
            Suite::Trees => "trees",
            Suite::Interlacing => "interlacing",
            Suite::Attachment => "attachment",
            Suite::Inequalities => "inequalities",
        }
    }

    /// Size limit used when none is given.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Paths | Suite::Cycles => 120,
            Suite::Lollipops => 40,
            Suite::Compasses => 26,
            Suite::Witnesses => 60,
            Suite::Charpoly => 12,
            Suite::Exhaustive => 10,
            Suite::Trees => 20,
            Suite::Interlacing => 30,
            Suite::Attachment => 15,
            // each part falls back to its own default
            Suite::Inequalities => 30,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::invalid(format!(
                    "unknown suite {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Limits {
    /// Largest graph order to check; `None` uses the suite default.
    pub max_n: Option<usize>,
    /// Seed for the random suites.
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub instances: usize,
    /// One line per failed check, naming the offending instance.
    pub failures: Vec<String>,
    pub wall_time: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} instances, {} failures, {:.2} s",
            self.suite,
            self.instances,
            self.failures.len(),
            self.wall_time.as_secs_f64()
        )?;
        for line in &self.failures {
            writeln!(f, "  FAIL {line}")?;
        }
        Ok(())
    }
}
