//! Serializable run reports and their plain-text rendering.
//!
//! The JSON layout is versioned through `schema`; default runs zero the
//! timing fields so that repeated runs with the same configuration produce
//! byte-identical output.

use serde::{Deserialize, Serialize};

use crate::cnum::format_complex;
use crate::verify::EntryResult;

pub const SCHEMA: &str = "ybq-report/1";
pub const TOOL_NAME: &str = "ybq";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub tool: ToolInfo,
    pub mode: String,
    pub config: ConfigReport,
    pub entries: Vec<EntryReport>,
    pub summary: Summary,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl ToolInfo {
    pub fn current() -> Self {
        ToolInfo {
            name: TOOL_NAME.into(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigReport {
    pub n: u32,
    pub samples: u32,
    pub seed: u64,
    pub pole_margin: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance_override: Option<f64>,
    pub parallel: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EntryReport {
    pub identity: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub n: u32,
    pub expectation: String,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_residual: Option<f64>,
    pub rejected_points: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notices: Vec<String>,
    pub samples: Vec<SampleReport>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SampleReport {
    pub index: u32,
    pub point: Vec<PointVar>,
    pub parts: Vec<PartReport>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointVar {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PartReport {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub kind: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub total: u32,
    pub passed: u32,
    pub failed: u32,
    pub rejected_points: u64,
    pub elapsed_ms: u64,
}

impl EntryReport {
    pub fn from_result(e: &EntryResult) -> Self {
        let max = e.worst_hold_residual();
        let min = e.weakest_break_residual();
        EntryReport {
            identity: e.identity.name().into(),
            family: e.family.map(|f| f.name().into()),
            n: e.n,
            expectation: e.expectation.name().into(),
            tolerance: e.tolerance,
            max_residual: (max > 0.0).then_some(max),
            min_residual: min.is_finite().then_some(min),
            rejected_points: e.rejected_points,
            passed: e.passed,
            notices: e.notices.clone(),
            samples: e
                .samples
                .iter()
                .enumerate()
                .map(|(k, s)| SampleReport {
                    index: k as u32,
                    point: s
                        .point
                        .iter()
                        .map(|(name, z)| PointVar {
                            name: (*name).into(),
                            value: format_complex(*z),
                        })
                        .collect(),
                    parts: s
                        .parts
                        .iter()
                        .map(|p| PartReport {
                            name: p.name.into(),
                            value: p.value,
                            bound: p.bound,
                            kind: p.kind.name().into(),
                            passed: p.passed,
                        })
                        .collect(),
                    passed: s.passed,
                })
                .collect(),
        }
    }
}

impl Report {
    pub fn new(mode: &str, config: ConfigReport, results: &[EntryResult]) -> Self {
        let entries: Vec<EntryReport> = results.iter().map(EntryReport::from_result).collect();
        let passed = entries.iter().filter(|e| e.passed).count() as u32;
        let rejected = entries.iter().map(|e| e.rejected_points).sum();
        let total = entries.len() as u32;
        Report {
            schema: SCHEMA.into(),
            tool: ToolInfo::current(),
            mode: mode.into(),
            config,
            summary: Summary {
                total,
                passed,
                failed: total - passed,
                rejected_points: rejected,
                elapsed_ms: 0,
            },
            entries,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let cfg = &self.config;
        out.push_str(&format!(
            "{} {}  N={}  samples={}  seed={}  pole-margin={}  parallel={}\n",
            self.tool.name,
            self.mode,
            cfg.n,
            cfg.samples,
            cfg.seed,
            cfg.pole_margin,
            if cfg.parallel { "on" } else { "off" }
        ));
        for e in &self.entries {
            let status = if e.passed { "[ok]  " } else { "[FAIL]" };
            let family = e.family.as_deref().unwrap_or("-");
            // report the binding part: the at-most part closest to (or over)
            // its bound, or for break entries the weakest at-least part
            let parts = e.samples.iter().flat_map(|s| &s.parts);
            let residual = if e.expectation == "break" {
                parts
                    .filter(|p| p.kind == "at-least")
                    .min_by(|a, b| (a.value / a.bound).total_cmp(&(b.value / b.bound)))
                    .map(|p| format!("weakest {} {:.3e} (floor {:.1e})", p.name, p.value, p.bound))
            } else {
                parts
                    .filter(|p| p.kind == "at-most")
                    .max_by(|a, b| (a.value / a.bound).total_cmp(&(b.value / b.bound)))
                    .map(|p| format!("worst {} {:.3e} (bound {:.1e})", p.name, p.value, p.bound))
            }
            .unwrap_or_else(|| "no residual parts".into());
            out.push_str(&format!(
                "{status} {:<17} {:<19} {residual}  [{} samples, expect {}]\n",
                e.identity,
                family,
                e.samples.len(),
                e.expectation,
            ));
            // JSON keeps every notice; text shows a few to stay readable
            const SHOWN_NOTES: usize = 3;
            for n in e.notices.iter().take(SHOWN_NOTES) {
                out.push_str(&format!("       note: {n}\n"));
            }
            if e.notices.len() > SHOWN_NOTES {
                out.push_str(&format!(
                    "       note: (+{} more in the json report)\n",
                    e.notices.len() - SHOWN_NOTES
                ));
            }
            if !e.passed {
                for s in e.samples.iter().filter(|s| !s.passed) {
                    let point: Vec<String> = s
                        .point
                        .iter()
                        .map(|p| format!("{}={}", p.name, p.value))
                        .collect();
                    out.push_str(&format!("       at {}\n", point.join(" ")));
                    for p in s.parts.iter().filter(|p| !p.passed) {
                        out.push_str(&format!(
                            "         {}: {:.6e} violates {} {:.1e}\n",
                            p.name, p.value, p.kind, p.bound
                        ));
                    }
                }
            }
        }
        out.push_str(&format!(
            "summary: {}/{} passed, {} rejected points, {} ms\n",
            self.summary.passed, self.summary.total, self.summary.rejected_points,
            self.summary.elapsed_ms
        ));
        out
    }
}

// ---------------------------------------------------------------------------
// throughput report
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BenchReport {
    pub schema: String,
    pub tool: ToolInfo,
    pub mode: String,
    pub sizes: Vec<BenchSize>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BenchSize {
    pub n: u32,
    pub nnz: u64,
    pub nnz_expected: u64,
    pub estimated_product_mib: f64,
    pub build_ms: f64,
    /// None when the size was skipped by the memory budget.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub passed: bool,
}

impl BenchReport {
    pub fn new(sizes: Vec<BenchSize>) -> Self {
        let passed = sizes.iter().all(|s| s.passed);
        BenchReport {
            schema: SCHEMA.into(),
            tool: ToolInfo::current(),
            mode: "bench".into(),
            sizes,
            passed,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str("ybq bench: two-leg build + three-leg residual per size\n");
        out.push_str("   N        nnz   expected   est-MiB   build-ms   residual-ms\n");
        for s in &self.sizes {
            let status = if s.passed { "ok" } else { "FAIL" };
            let residual = s
                .residual_ms
                .map(|ms| format!("{ms:>13.2}"))
                .unwrap_or_else(|| format!("{:>13}", "skipped"));
            out.push_str(&format!(
                "{:>4} {:>10} {:>10} {:>9.2} {:>10.2} {residual}   {status}\n",
                s.n, s.nnz, s.nnz_expected, s.estimated_product_mib, s.build_ms
            ));
            if let Some(note) = &s.note {
                out.push_str(&format!("       note: {note}\n"));
            }
        }
        out
    }
}
