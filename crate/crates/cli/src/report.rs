//! Report shapes shared by the text and JSON renderers.
//!
//! Every JSON report has `command`, `params`, `verdict` and `pairs`; the
//! remaining fields appear only when they apply.

use serde::Serialize;
use serde_json::{Map, Value};

use schurlc::logconcavity::{Certificate, CheckReport, PairRecord, Witness};

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub params: Map<String, Value>,
    pub verdict: String,
    pub pairs: Vec<PairJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<PointJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<Summary>,
}

impl Report {
    pub fn new(command: &'static str, params: Map<String, Value>, verdict: impl Into<String>) -> Self {
        Report {
            command,
            params,
            verdict: verdict.into(),
            pairs: Vec::new(),
            witness: None,
            certificate: None,
            result: None,
            points: None,
            summary: None,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PairJson {
    pub n: usize,
    pub i: usize,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

/// A negative coefficient; `at` is a partition, an irreducible `[m]` or an
/// exponent depending on the certificate. Coefficients are decimal strings.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessJson {
    pub n: usize,
    pub i: usize,
    pub at: String,
    pub coefficient: String,
}

#[derive(Debug, Serialize)]
pub struct PointJson {
    pub label: String,
    pub in_hypothesis: bool,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub pairs: Vec<PairJson>,
}

#[derive(Debug, Default, Serialize)]
pub struct Summary {
    pub points: usize,
    pub holds: usize,
    pub vacuous: usize,
    pub in_hypothesis_failures: usize,
    pub other_failures: usize,
}

pub fn certificate_string(c: &Certificate) -> String {
    match c {
        Certificate::Schur(f) => f.to_string(),
        Certificate::Irr(d) => d.to_string(),
        Certificate::Poly(p) => p.to_string(),
    }
}

pub fn witness_json(pair: &PairRecord) -> Option<WitnessJson> {
    let (at, coefficient) = match pair.witness.as_ref()? {
        Witness::Schur(p, c) => (p.to_string(), c.to_string()),
        Witness::Irr(m, c) => (format!("[{m}]"), c.to_string()),
        Witness::Coefficient(e, c) => (format!("q^{e}"), c.to_string()),
    };
    Some(WitnessJson {
        n: pair.n,
        i: pair.i,
        at,
        coefficient,
    })
}

pub fn pairs_json(report: &CheckReport, verbose: bool) -> Vec<PairJson> {
    report
        .pairs
        .iter()
        .map(|pair| PairJson {
            n: pair.n,
            i: pair.i,
            holds: pair.witness.is_none(),
            witness: witness_json(pair),
            certificate: verbose.then(|| certificate_string(&pair.certificate)),
        })
        .collect()
}

/// Folds a check into `report`: verdict, pairs and first witness.
pub fn attach_check(report: &mut Report, check: &CheckReport, verbose: bool) {
    report.verdict = check.verdict.as_str().to_string();
    report.pairs = pairs_json(check, verbose);
    if let Some(first) = check.first_failure() {
        report.witness = witness_json(first);
        if verbose {
            report.certificate = Some(certificate_string(&first.certificate));
        }
    }
}

fn witness_text(w: &WitnessJson) -> String {
    format!("coefficient {} on {}", w.coefficient, w.at)
}

/// Human-readable rendering; certificates only under `verbose`.
pub fn render_text(report: &Report, verbose: bool) -> String {
    let mut out = String::new();
    if let Some(result) = &report.result {
        match result {
            Value::String(s) => out.push_str(&format!("{s}\n")),
            Value::Array(items) => {
                for item in items {
                    out.push_str(&format!("{}\n", item.as_str().unwrap_or_default()));
                }
            }
            other => out.push_str(&format!("{other}\n")),
        }
    }
    if let Some(points) = &report.points {
        for pt in points {
            let scope = if pt.in_hypothesis { "in-hypothesis" } else { "outside" };
            match &pt.witness {
                Some(w) => out.push_str(&format!(
                    "{} {scope} {} at n={} i={}: {}\n",
                    pt.label,
                    pt.verdict,
                    w.n,
                    w.i,
                    witness_text(w)
                )),
                None => out.push_str(&format!("{} {scope} {}\n", pt.label, pt.verdict)),
            }
        }
    }
    for pair in &report.pairs {
        match &pair.witness {
            Some(w) => out.push_str(&format!("n={} i={} fails: {}\n", pair.n, pair.i, witness_text(w))),
            None => out.push_str(&format!("n={} i={} holds\n", pair.n, pair.i)),
        }
        if verbose {
            if let Some(c) = &pair.certificate {
                out.push_str(&format!("  certificate: {c}\n"));
            }
        }
    }
    if let Some(s) = &report.summary {
        out.push_str(&format!(
            "points: {}, holds: {}, vacuous: {}, in-hypothesis failures: {}, other failures: {}\n",
            s.points, s.holds, s.vacuous, s.in_hypothesis_failures, s.other_failures
        ));
    }
    if report.result.is_none() || !report.pairs.is_empty() {
        out.push_str(&format!("verdict: {}\n", report.verdict));
    }
    out
}
