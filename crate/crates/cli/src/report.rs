use innerbody::verify::VerificationReport;
use serde::Serialize;

/// One JSON line of a verification report.
#[derive(Debug, Serialize)]
pub struct ReportLine<'a> {
    pub check: &'a str,
    pub body: &'a str,
    pub t: &'a [f64],
    pub margin: &'a [f64],
    pub passed: bool,
    pub worst_margin: Option<f64>,
    pub tolerance: f64,
    pub inconclusive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'a str>,
}

impl<'a> From<&'a VerificationReport> for ReportLine<'a> {
    fn from(r: &'a VerificationReport) -> Self {
        ReportLine {
            check: &r.check,
            body: &r.body,
            t: &r.t_values,
            margin: &r.margins,
            passed: r.passed,
            worst_margin: r.worst_margin.is_finite().then_some(r.worst_margin),
            tolerance: r.tolerance,
            inconclusive: r.inconclusive,
            note: r.note.as_deref(),
        }
    }
}

pub fn to_lines(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(&ReportLine::from(r)).expect("reports serialize"));
        out.push('\n');
    }
    out
}

/// Reports that count against the exit status: failed, and not from the
/// report-only Matheron probe.
pub fn failures(reports: &[VerificationReport]) -> usize {
    reports
        .iter()
        .filter(|r| !r.passed && r.check != "matheron-probe")
        .count()
}
