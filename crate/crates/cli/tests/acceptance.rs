//! Acceptance battery: ten criteria, each printed as one pass/fail line.
//! Every assertion is exact (these are finite computations); the only
//! tolerance anywhere is the wall-clock budget of criterion 1.
//!
//! Run with `cargo test --test acceptance -- --nocapture --test-threads=1`
//! to see all ten lines in order.

use std::collections::BTreeMap;
use std::time::Instant;

use trinodiff::config::{RunConfig, Suite};
use trinodiff::report::{CheckResult, CheckStatus};
use trinodiff::run_suites;

const DEGREES: [u32; 4] = [5, 7, 9, 11];
const CURVE_DEGREES: [u32; 3] = [5, 7, 9];

fn suite_results(m_values: &[u32], suites: &[Suite], deep: bool) -> Vec<CheckResult> {
    let config = RunConfig::new(m_values.to_vec(), suites.to_vec())
        .expect("valid config")
        .with_threads(1)
        .with_deep(deep);
    run_suites(&config)
}

struct Gate {
    criterion: &'static str,
    failures: Vec<String>,
}

impl Gate {
    fn new(criterion: &'static str) -> Gate {
        Gate {
            criterion,
            failures: Vec::new(),
        }
    }

    fn expect_all(&mut self, results: &[CheckResult], prefixes: &[&str], want: CheckStatus) {
        let mut matched = 0usize;
        for r in results {
            if prefixes.iter().any(|p| r.id.starts_with(p)) {
                matched += 1;
                if r.status != want {
                    self.failures.push(format!(
                        "{} is {} (observed {}, expected {})",
                        r.id,
                        r.status.as_str(),
                        r.observed,
                        r.expected
                    ));
                }
            }
        }
        if matched == 0 {
            self.failures
                .push(format!("no checks matched {prefixes:?}"));
        }
    }

    fn expect_true(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("PASS {}", self.criterion);
        } else {
            println!("FAIL {}", self.criterion);
            for f in &self.failures {
                println!("   - {f}");
            }
            panic!(
                "{} failed:\n{}",
                self.criterion,
                self.failures.join("\n")
            );
        }
    }
}

#[test]
fn criterion_01_difference_sets() {
    // Each trinomial value-set is a (2^m - 1, 2^(m-1), 2^(m-2)) difference
    // set, verified within 60 s per degree on one core.
    let mut gate = Gate::new("criterion 1: singer difference sets for f1..f11, m in {5,7,9,11}");
    for &m in &DEGREES {
        let start = Instant::now();
        let results = suite_results(&[m], &[Suite::Diffsets], false);
        let elapsed = start.elapsed();
        for i in 1..=11 {
            let id = format!("diffset.f{i}.m{m}");
            let r = results.iter().find(|r| r.id == id).expect("check exists");
            gate.expect_true(
                &format!("{id}: observed {}", r.observed),
                r.status == CheckStatus::Pass,
            );
        }
        gate.expect_true(
            &format!("diffsets at m = {m} took {elapsed:?} (budget 60 s)"),
            elapsed.as_secs() < 60,
        );
    }
    gate.finish();
}

#[test]
fn criterion_02_zero_one_four_profiles() {
    let mut gate = Gate::new("criterion 2: (0,1,4) preimage profiles, m in {5,7,9,11}");
    let results = suite_results(&DEGREES, &[Suite::Profiles], false);
    gate.expect_all(&results, &["profile."], CheckStatus::Pass);
    gate.finish();
}

#[test]
fn criterion_03_equivalence_classes() {
    let mut gate = Gate::new("criterion 3: four value-set equivalence classes, m in {5,7,9,11}");
    let results = suite_results(&DEGREES, &[Suite::Equivalence], false);
    gate.expect_all(&results, &["equiv."], CheckStatus::Pass);
    gate.finish();
}

#[test]
fn criterion_04_curve_counts() {
    // Published counts: low-degree family 2^m - 2 and 2^m - 1; high-degree
    // family 2^m, 2^m and 0; no-point curves empty. m = 11 runs the same
    // scans through the deep path.
    let mut gate = Gate::new("criterion 4: affine curve counts, m in {5,7,9} and deep m=11");
    let mut results = suite_results(&CURVE_DEGREES, &[Suite::Curves], false);
    results.extend(suite_results(&[11], &[Suite::Curves], true));
    gate.expect_all(
        &results,
        &["curve.count.", "curve.nopoint.", "curve.union."],
        CheckStatus::Pass,
    );
    gate.finish();
}

#[test]
fn criterion_05_functional_identities() {
    let mut gate = Gate::new("criterion 5: functional identities and profile cardinalities, m in {5,7,9,11}");
    let results = suite_results(&DEGREES, &[Suite::Identities], false);
    gate.expect_all(
        &results,
        &[
            "identity.g.",
            "identity.eq",
            "identity.second",
            "identity.p_",
            "identity.h_histogram",
            "identity.h1_equals_t1",
            "identity.change_of_functions",
            "identity.quadform",
            "identity.sextic_trace",
            "identity.dickson_permutes",
        ],
        CheckStatus::Pass,
    );
    gate.finish();
}

#[test]
fn criterion_06_set_identities() {
    let mut gate = Gate::new("criterion 6: value-set / trace-set identities and partitions, m in {5,7,9,11}");
    let identity_results = suite_results(&DEGREES, &[Suite::Identities], false);
    gate.expect_all(
        &identity_results,
        &[
            "identity.canon_c_power_t1",
            "identity.canon_c_t_sigma1",
            "identity.canon_d_cube_t1",
            "identity.canon_d_t3",
        ],
        CheckStatus::Pass,
    );
    let diffset_results = suite_results(&DEGREES, &[Suite::Diffsets], false);
    gate.expect_all(&diffset_results, &["diffset.partition."], CheckStatus::Pass);
    gate.finish();
}

#[test]
fn criterion_07_triweight_codes() {
    // f3..f11 and the trace-set codes are proven tri-weight; f1 and f2 carry
    // conjecture status and must also verify numerically at these degrees.
    let mut gate = Gate::new("criterion 7: tri-weight codes, m in {5,7,9,11}");
    let results = suite_results(&DEGREES, &[Suite::Codes], false);
    let proven: Vec<String> = (3..=11).map(|i| format!("code.f{i}.")).collect();
    let proven_refs: Vec<&str> = proven.iter().map(|s| s.as_str()).collect();
    gate.expect_all(&results, &proven_refs, CheckStatus::Pass);
    gate.expect_all(
        &results,
        &["code.t3.", "code.t5.", "code.t_sigma_plus_1.", "code.complement."],
        CheckStatus::Pass,
    );
    gate.expect_all(
        &results,
        &["code.f1.", "code.f2."],
        CheckStatus::ConjecturePass,
    );
    gate.finish();
}

#[test]
fn criterion_08_dual_codes() {
    let mut gate = Gate::new("criterion 8: dual weights (0, 0, (2^(2m-4) - 2^(m-3))/3), m in {5,7,9,11}");
    let results = suite_results(&DEGREES, &[Suite::Codes], false);
    let proven: Vec<String> = (3..=11).map(|i| format!("code.dual.f{i}.")).collect();
    let proven_refs: Vec<&str> = proven.iter().map(|s| s.as_str()).collect();
    gate.expect_all(&results, &proven_refs, CheckStatus::Pass);
    gate.expect_all(
        &results,
        &["code.dual.t3.", "code.dual.t5.", "code.dual.t_sigma_plus_1."],
        CheckStatus::Pass,
    );
    gate.expect_all(
        &results,
        &["code.dual.f1.", "code.dual.f2."],
        CheckStatus::ConjecturePass,
    );
    gate.finish();
}

#[test]
fn criterion_09_root_count_profiles() {
    let mut gate = Gate::new("criterion 9: root-count profiles and the quintic/sextic comparison, m in {5,7,9}");
    let results = suite_results(&CURVE_DEGREES, &[Suite::Curves], false);
    gate.expect_all(
        &results,
        &["curve.bluher.", "curve.bluher_p.", "curve.six_five."],
        CheckStatus::Pass,
    );
    gate.finish();
}

#[test]
fn criterion_10_observations() {
    // Conjecture channel: the quotient maps are two-to-one Singer sets at
    // every tested degree; the published equivalent binomials match for all
    // but f4, whose printed entry is refuted by the sweep (its quotient is
    // value-set equivalent to x^2 + x instead). The criterion requires the
    // suite to report these as conjecture status and to exercise all eleven.
    let mut gate = Gate::new("criterion 10: quotient-map observations (conjecture channel), m in {5,7,9,11}");
    let results = suite_results(&DEGREES, &[Suite::Observations], false);
    let mut statuses: BTreeMap<String, Vec<CheckStatus>> = BTreeMap::new();
    for r in &results {
        gate.expect_true(
            &format!("{} must be conjecture-status, got {}", r.id, r.status.as_str()),
            matches!(
                r.status,
                CheckStatus::ConjecturePass | CheckStatus::ConjectureFail
            ),
        );
        gate.expect_true(
            &format!("{}: quotient map is not two-to-one: {}", r.id, r.observed),
            r.observed["two_to_one"] == serde_json::json!(true),
        );
        gate.expect_true(
            &format!("{}: value-set is not a singer difference set: {}", r.id, r.observed),
            r.observed["singer"] == serde_json::json!(true),
        );
        let key = r.id.split(".m").next().unwrap_or(&r.id).to_string();
        statuses.entry(key).or_default().push(r.status);
    }
    for (check, st) in statuses {
        let expected = if check == "obs.quotient.f4" {
            // printed equivalent refuted at every degree
            CheckStatus::ConjectureFail
        } else {
            CheckStatus::ConjecturePass
        };
        gate.expect_true(
            &format!("{check} should be {} at every degree", expected.as_str()),
            st.iter().all(|&s| s == expected),
        );
    }
    gate.finish();
}
