use std::fmt::Write as _;

/// One inequality `left ≤ right`, evaluated. `slack = right − left`, so a
/// nonnegative slack means the inequality holds as stated.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub name: String,
    pub left: f64,
    pub right: f64,
    pub slack: f64,
    /// Every parameter that went into the evaluation.
    pub inputs: Vec<(String, f64)>,
    /// The inequality being evaluated, in words.
    pub provenance: String,
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn new(name: impl Into<String>, left: f64, right: f64, provenance: impl Into<String>) -> Self {
        BoundReport {
            name: name.into(),
            left,
            right,
            slack: right - left,
            inputs: Vec::new(),
            provenance: provenance.into(),
            notes: Vec::new(),
        }
    }

    pub fn with_input(mut self, key: impl Into<String>, value: f64) -> Self {
        self.inputs.push((key.into(), value));
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn input(&self, key: &str) -> Option<f64> {
        self.inputs.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }

    /// Holds up to an absolute allowance `tol`.
    pub fn holds(&self, tol: f64) -> bool {
        self.slack >= -tol
    }

    /// The stored slack agrees with `right − left`.
    pub fn is_consistent(&self) -> bool {
        let s = self.right - self.left;
        (s - self.slack).abs() <= 1e-12 * (1.0 + s.abs())
    }

    pub const HEADER: [&'static str; 7] = ["name", "left", "right", "slack", "inputs", "provenance", "notes"];

    /// One delimited row matching [`BoundReport::HEADER`]. Inputs are written
    /// as `key=value` pairs joined by `;`, notes joined by ` | `.
    pub fn to_row(&self, sep: char) -> String {
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let clean = |s: &str| s.replace(sep, " ");
        [
            clean(&self.name),
            format!("{}", self.left),
            format!("{}", self.right),
            format!("{}", self.slack),
            clean(&inputs.join(";")),
            clean(&self.provenance),
            clean(&self.notes.join(" | ")),
        ]
        .join(&sep.to_string())
    }
}

/// Aligned plain-text table, one line per report.
pub fn summary_table(reports: &[BoundReport]) -> String {
    let width = reports.iter().map(|r| r.name.chars().count()).max().unwrap_or(4).max(4);
    let mut out = String::new();
    let _ = writeln!(out, "{:<width$}  {:>14}  {:>14}  {:>12}  status", "name", "left", "right", "slack");
    for r in reports {
        let status = if r.slack >= 0.0 { "holds" } else { "VIOLATED" };
        let _ = writeln!(out, "{:<width$}  {:>14.6}  {:>14.6}  {:>12.4e}  {status}", r.name, r.left, r.right, r.slack);
    }
    out
}
