//! The verification suite registry: every published claim becomes one check
//! with a stable id, run per degree. `docs/checks.md` maps each id to the
//! claim it verifies.

mod codes;
mod curves;
mod diffsets;
mod equivalence;
mod identities;
mod observations;
mod profiles;

use std::sync::Arc;
use std::time::Instant;

use serde_json::Value;
use trinodiff_core::FieldCtx;

use crate::config::{RunConfig, Suite};
use crate::report::{CheckResult, CheckStatus};

/// What one check computed, next to what the claim says.
pub struct Outcome {
    pub passed: bool,
    pub observed: Value,
    pub expected: Value,
}

impl Outcome {
    /// Pass iff the two payloads are equal.
    pub fn compare(observed: Value, expected: Value) -> Outcome {
        Outcome {
            passed: observed == expected,
            observed,
            expected,
        }
    }
}

type CheckFn = Box<dyn Fn(&FieldCtx) -> Outcome + Send + Sync>;

pub struct Check {
    pub id: String,
    pub suite: Suite,
    /// Published as an observation or open conjecture rather than a theorem.
    pub conjecture: bool,
    /// Skip with this reason instead of running.
    pub skip: Option<String>,
    run: CheckFn,
}

impl Check {
    pub fn new(
        id: impl Into<String>,
        suite: Suite,
        run: impl Fn(&FieldCtx) -> Outcome + Send + Sync + 'static,
    ) -> Check {
        Check {
            id: id.into(),
            suite,
            conjecture: false,
            skip: None,
            run: Box::new(run),
        }
    }

    pub fn conjecture(mut self) -> Check {
        self.conjecture = true;
        self
    }

    pub fn skipped(mut self, reason: impl Into<String>) -> Check {
        self.skip = Some(reason.into());
        self
    }
}

/// All checks for one degree, across every suite.
pub fn build_checks(m: u32, deep: bool) -> Vec<Check> {
    let mut checks = Vec::new();
    checks.extend(diffsets::checks(m));
    checks.extend(profiles::checks(m));
    checks.extend(equivalence::checks(m));
    checks.extend(curves::checks(m, deep));
    checks.extend(identities::checks(m));
    checks.extend(codes::checks(m));
    checks.extend(observations::checks(m));
    checks
}

/// Execute the configured suites and return results sorted by id.
pub fn run_suites(config: &RunConfig) -> Vec<CheckResult> {
    let mut jobs: Vec<(Arc<FieldCtx>, Check)> = Vec::new();
    for &m in &config.m_values {
        let ctx = Arc::new(FieldCtx::new(m).expect("validated degree"));
        for check in build_checks(m, config.deep) {
            if config.suites.contains(&check.suite) {
                jobs.push((Arc::clone(&ctx), check));
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .expect("thread pool");
    let timing = config.timing;
    let mut results: Vec<CheckResult> = pool.install(|| {
        use rayon::prelude::*;
        jobs.par_iter()
            .map(|(ctx, check)| run_one(ctx, check, timing))
            .collect()
    });
    results.sort_by(|a, b| a.id.cmp(&b.id));
    results
}

fn run_one(ctx: &FieldCtx, check: &Check, timing: bool) -> CheckResult {
    if let Some(reason) = &check.skip {
        return CheckResult {
            id: check.id.clone(),
            status: CheckStatus::Skipped,
            observed: Value::String(reason.clone()),
            expected: Value::Null,
            elapsed_ms: 0,
        };
    }
    let start = Instant::now();
    let outcome = (check.run)(ctx);
    let elapsed_ms = if timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    let status = match (outcome.passed, check.conjecture) {
        (true, false) => CheckStatus::Pass,
        (false, false) => CheckStatus::Fail,
        (true, true) => CheckStatus::ConjecturePass,
        (false, true) => CheckStatus::ConjectureFail,
    };
    CheckResult {
        id: check.id.clone(),
        status,
        observed: outcome.observed,
        expected: outcome.expected,
        elapsed_ms,
    }
}
