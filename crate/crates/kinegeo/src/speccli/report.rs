//! Verification reports and their text and JSON renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::catalog::{KinematicsClass, GENUINE_KINEMATICS};

use super::verify::Suite;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    fn word(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skip",
        }
    }
}

/// One check: kind and subject, with the outcome and a diagnostic.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub check: String,
    pub subject: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub time_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub catalog_version: String,
    /// Sample seed in hexadecimal.
    pub seed: String,
    pub suites: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub only: Option<String>,
    pub checks: Vec<CheckResult>,
    pub warnings: Vec<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl VerificationReport {
    /// Pass iff no check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    fn of_suite(&self, s: Suite) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| c.suite == s).collect()
    }
}

/// Render a report.
pub fn emit_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => emit_json(report),
        Format::Text => emit_text(report),
    }
}

/// Pretty JSON with a trailing newline; field order is fixed by the schema.
pub fn emit_json(report: &VerificationReport) -> String {
    let mut v = serde_json::to_value(report).expect("report serializes");
    let summary = serde_json::json!({
        "overall": if report.passed() { "pass" } else { "fail" },
        "pass": report.count(Status::Pass),
        "fail": report.count(Status::Fail),
        "skipped": report.count(Status::Skipped),
    });
    v.as_object_mut().expect("object").insert("summary".into(), summary);
    let mut s = serde_json::to_string_pretty(&v).expect("json");
    s.push('\n');
    s
}

/// Re-emit a JSON report from its text (used to check stability).
pub fn reemit_json(text: &str) -> Result<String, serde_json::Error> {
    let v: serde_json::Value = serde_json::from_str(text)?;
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let width = |s: &str| s.chars().count();
    let mut w: Vec<usize> = header.iter().map(|h| width(h)).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate().take(w.len()) {
            w[i] = w[i].max(width(c));
        }
    }
    let line = |cells: Vec<&str>| {
        let n = cells.len();
        let mut s = String::from(" ");
        for (i, c) in cells.into_iter().enumerate() {
            s.push(' ');
            s.push_str(c);
            if i + 1 < n {
                s.push_str(&" ".repeat(w[i] - width(c) + 1));
            }
        }
        s.trim_end().to_string()
    };
    let _ = writeln!(out, "{}", line(header.to_vec()));
    for r in rows {
        let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
    }
}

/// Subjects in first-appearance order, with their checks.
fn by_subject<'a>(checks: &[&'a CheckResult]) -> Vec<(&'a str, Vec<&'a CheckResult>)> {
    let mut out: Vec<(&str, Vec<&CheckResult>)> = Vec::new();
    for c in checks {
        match out.iter_mut().find(|(s, _)| *s == c.subject) {
            Some((_, v)) => v.push(c),
            None => out.push((&c.subject, vec![c])),
        }
    }
    out
}

fn verified_line(out: &mut String, noun: &str, groups: &[(&str, Vec<&CheckResult>)]) {
    let ok = groups.iter().filter(|(_, v)| v.iter().all(|c| c.status != Status::Fail)).count();
    let _ = writeln!(out, "{} verified: {}/{}", noun, ok, groups.len());
}

/// One row per subject, one column per check kind, plus one detail column.
fn pivot(out: &mut String, title: &str, noun: &str, checks: &[&CheckResult], detail_of: Option<&str>) {
    if checks.is_empty() {
        return;
    }
    let mut kinds: Vec<&str> = Vec::new();
    for c in checks {
        if !kinds.contains(&c.check.as_str()) {
            kinds.push(&c.check);
        }
    }
    let groups = by_subject(checks);
    let mut header = vec!["name"];
    header.extend(&kinds);
    if detail_of.is_some() {
        header.push("detail");
    }
    let rows: Vec<Vec<String>> = groups
        .iter()
        .map(|(s, v)| {
            let mut r = vec![s.to_string()];
            for k in &kinds {
                r.push(v.iter().find(|c| c.check == *k).map_or("-", |c| c.status.word()).to_string());
            }
            if let Some(d) = detail_of {
                r.push(v.iter().find(|c| c.check == d).map_or(String::new(), |c| c.detail.clone()));
            }
            r
        })
        .collect();
    let _ = writeln!(out, "\n{}", title);
    table(out, &header, &rows);
    verified_line(out, noun, &groups);
}

fn listing(out: &mut String, title: &str, noun: &str, checks: &[&CheckResult]) {
    if checks.is_empty() {
        return;
    }
    let _ = writeln!(out, "\n{}", title);
    let rows: Vec<Vec<String>> =
        checks.iter().map(|c| vec![c.status.word().to_string(), c.subject.clone(), c.detail.clone()]).collect();
    table(out, &["status", "subject", "detail"], &rows);
    verified_line(out, noun, &by_subject(checks));
}

fn kinematics_grid(out: &mut String, checks: &[&CheckResult]) {
    if checks.is_empty() {
        return;
    }
    let _ = writeln!(out, "\nGenuine kinematics (spatial curvature sign)");
    let cell = |class: KinematicsClass, sign: i8| -> String {
        GENUINE_KINEMATICS
            .iter()
            .find(|r| r.class == class && r.curvature_sign == sign)
            .map(|r| {
                let st = checks.iter().find(|c| c.check == "cell" && c.subject == r.geometry).map(|c| c.status);
                match st {
                    Some(Status::Pass) | None => r.geometry.to_string(),
                    Some(s) => format!("{} [{}]", r.geometry, s.word()),
                }
            })
            .unwrap_or_default()
    };
    let rows: Vec<Vec<String>> = [
        (KinematicsClass::Relativistic, "relativistic"),
        (KinematicsClass::AbsoluteTime, "absolute time"),
        (KinematicsClass::AbsoluteSpace, "absolute space"),
    ]
    .iter()
    .map(|&(c, name)| vec![name.to_string(), cell(c, 1), cell(c, 0), cell(c, -1)])
    .collect();
    table(out, &["class", "k > 0", "k = 0", "k < 0"], &rows);
    listing(out, "Genuine kinematics checks", "genuine kinematics checks", checks);
}

/// Human-readable report with one table per suite.
pub fn emit_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "kinegeo verification report");
    let _ = writeln!(out, "  catalog  {}", r.catalog_version);
    let _ = writeln!(out, "  seed     {}", r.seed);
    let _ = writeln!(out, "  suites   {}", r.suites.join(", "));
    if let Some(o) = &r.only {
        let _ = writeln!(out, "  only     {}", o);
    }
    pivot(&mut out, "Algebras", "algebras", &r.of_suite(Suite::Closure), None);
    pivot(&mut out, "Geometries", "geometries", &r.of_suite(Suite::Geometry), Some("signature"));
    listing(&mut out, "Contraction graph", "contraction edges", &r.of_suite(Suite::Contraction));
    listing(&mut out, "Duality", "duality pairs", &r.of_suite(Suite::Duality));
    listing(&mut out, "Additivity", "additivity identities", &r.of_suite(Suite::Additivity));
    listing(&mut out, "Time/space contrast", "contrast rows", &r.of_suite(Suite::Contrast));
    kinematics_grid(&mut out, &r.of_suite(Suite::Kinematics));
    listing(&mut out, "Finite transformations", "finite maps", &r.of_suite(Suite::Finite));
    listing(&mut out, "Combinatory bases", "combinatory bases", &r.of_suite(Suite::Combinatory));
    if r.failures().next().is_some() {
        let _ = writeln!(out, "\nFailures");
        for c in r.failures() {
            let _ = writeln!(out, "  FAIL {}/{} {}: {}", c.suite.name(), c.check, c.subject, c.detail);
        }
    }
    if !r.warnings.is_empty() {
        let _ = writeln!(out, "\nWarnings");
        for w in &r.warnings {
            let _ = writeln!(out, "  {}", w);
        }
    }
    if r.checks.iter().any(|c| c.time_ms.is_some()) {
        let total: f64 = r.checks.iter().filter_map(|c| c.time_ms).sum();
        let _ = writeln!(out, "\ncheck time: {:.1} ms (summed over checks)", total);
    }
    let _ = writeln!(
        out,
        "\noverall: {} ({} checks: {} passed, {} failed, {} skipped)",
        if r.passed() { "PASS" } else { "FAIL" },
        r.checks.len(),
        r.count(Status::Pass),
        r.count(Status::Fail),
        r.count(Status::Skipped)
    );
    out
}
