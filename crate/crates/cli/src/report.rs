//! Check results and report rendering.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::config::RunConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "conjecture-pass")]
    ConjecturePass,
    #[serde(rename = "conjecture-fail")]
    ConjectureFail,
    #[serde(rename = "skipped")]
    Skipped,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::ConjecturePass => "conjecture-pass",
            CheckStatus::ConjectureFail => "conjecture-fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

/// One verification outcome, carrying both payloads for post-hoc diffing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: CheckStatus,
    pub observed: Value,
    pub expected: Value,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: u64,
    pub fail: u64,
    pub conjecture: u64,
    pub conjecture_fail: u64,
    pub skipped: u64,
}

pub fn summarize(results: &[CheckResult]) -> Summary {
    let mut s = Summary::default();
    for r in results {
        match r.status {
            CheckStatus::Pass => s.pass += 1,
            CheckStatus::Fail => s.fail += 1,
            CheckStatus::ConjecturePass => s.conjecture += 1,
            CheckStatus::ConjectureFail => {
                s.conjecture += 1;
                s.conjecture_fail += 1;
            }
            CheckStatus::Skipped => s.skipped += 1,
        }
    }
    s
}

/// Whether the run should exit nonzero under the given strictness.
pub fn run_failed(results: &[CheckResult], strict: bool) -> bool {
    results.iter().any(|r| {
        r.status == CheckStatus::Fail || (strict && r.status == CheckStatus::ConjectureFail)
    })
}

/// Render the report document. Results must already be sorted by id.
pub fn render_report(results: &[CheckResult], config: &RunConfig, format: crate::config::OutputFormat) -> Vec<u8> {
    match format {
        crate::config::OutputFormat::Json => render_json(results, config),
        crate::config::OutputFormat::Csv => render_csv(results),
        crate::config::OutputFormat::Text => render_text(results),
    }
}

fn field_info(config: &RunConfig) -> Value {
    let mut ms = Vec::new();
    let mut moduli = Vec::new();
    for &m in &config.m_values {
        let ctx = trinodiff_core::FieldCtx::new(m).expect("validated degree");
        ms.push(json!(m));
        moduli.push(json!(format!("{:#x}", ctx.modulus())));
    }
    json!({ "m": ms, "modulus_hex": moduli })
}

fn render_json(results: &[CheckResult], config: &RunConfig) -> Vec<u8> {
    let s = summarize(results);
    let doc = json!({
        "version": 1,
        "field": field_info(config),
        "checks": results,
        "summary": {
            "pass": s.pass,
            "fail": s.fail,
            "conjecture": s.conjecture,
            "conjecture_fail": s.conjecture_fail,
            "skipped": s.skipped,
        },
    });
    let mut out = serde_json::to_vec_pretty(&doc).expect("serializable report");
    out.push(b'\n');
    out
}

fn render_csv(results: &[CheckResult]) -> Vec<u8> {
    let mut out = String::from("id,status,elapsed_ms\n");
    for r in results {
        out.push_str(&format!("{},{},{}\n", r.id, r.status.as_str(), r.elapsed_ms));
    }
    out.into_bytes()
}

fn render_text(results: &[CheckResult]) -> Vec<u8> {
    let id_width = results.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut out = String::new();
    out.push_str(&format!("{:<id_width$}  {:<15}  {:>10}\n", "id", "status", "elapsed_ms"));
    for r in results {
        out.push_str(&format!(
            "{:<id_width$}  {:<15}  {:>10}\n",
            r.id,
            r.status.as_str(),
            r.elapsed_ms
        ));
        if r.status == CheckStatus::Fail || r.status == CheckStatus::ConjectureFail {
            out.push_str(&format!("{:width$}    observed: {}\n", "", r.observed, width = id_width));
            out.push_str(&format!("{:width$}    expected: {}\n", "", r.expected, width = id_width));
        }
    }
    let s = summarize(results);
    out.push_str(&format!(
        "\n{} pass, {} fail, {} conjecture ({} failed), {} skipped\n",
        s.pass, s.fail, s.conjecture, s.conjecture_fail, s.skipped
    ));
    out.into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{OutputFormat, RunConfig};

    fn result(id: &str, status: CheckStatus) -> CheckResult {
        CheckResult {
            id: id.to_string(),
            status,
            observed: json!({"v": 1}),
            expected: json!({"v": 1}),
            elapsed_ms: 0,
        }
    }

    #[test]
    fn empty_report_has_zero_summary() {
        let cfg = RunConfig::new(vec![5], vec![]).unwrap();
        let bytes = render_report(&[], &cfg, OutputFormat::Json);
        let doc: Value = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(doc["checks"].as_array().unwrap().len(), 0);
        assert_eq!(doc["summary"]["pass"], 0);
        assert_eq!(doc["version"], 1);
        assert_eq!(doc["field"]["m"][0], 5);
    }

    #[test]
    fn single_check_carries_both_payloads() {
        let cfg = RunConfig::new(vec![5], vec![]).unwrap();
        let bytes = render_report(&[result("a.m5", CheckStatus::Pass)], &cfg, OutputFormat::Json);
        let doc: Value = serde_json::from_slice(&bytes).unwrap();
        let checks = doc["checks"].as_array().unwrap();
        assert_eq!(checks.len(), 1);
        assert!(checks[0]["observed"].is_object());
        assert!(checks[0]["expected"].is_object());
        assert_eq!(doc["summary"]["pass"], 1);
    }

    #[test]
    fn csv_flattens_id_status_elapsed() {
        let bytes = render_csv(&[result("x.m5", CheckStatus::Fail)]);
        assert_eq!(
            String::from_utf8(bytes).unwrap(),
            "id,status,elapsed_ms\nx.m5,fail,0\n"
        );
    }

    #[test]
    fn failure_gates_exit_status() {
        let pass = result("a", CheckStatus::Pass);
        let conj = result("b", CheckStatus::ConjectureFail);
        assert!(!run_failed(std::slice::from_ref(&pass), false));
        assert!(!run_failed(&[pass.clone(), conj.clone()], false));
        assert!(run_failed(&[pass, conj], true));
        assert!(run_failed(&[result("c", CheckStatus::Fail)], false));
    }
}
