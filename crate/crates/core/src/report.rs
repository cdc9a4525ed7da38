use serde::{Deserialize, Serialize};

/// One claimed value checked against an independently computed one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyEntry {
    pub label: String,
    pub claimed: f64,
    pub observed: f64,
    pub relative_deviation: f64,
    pub within_tolerance: bool,
}

impl DiscrepancyEntry {
    pub fn new(label: impl Into<String>, claimed: f64, observed: f64, tolerance: f64) -> Self {
        let relative_deviation = relative_deviation(claimed, observed);
        Self {
            label: label.into(),
            claimed,
            observed,
            relative_deviation,
            within_tolerance: relative_deviation <= tolerance,
        }
    }
}

/// `|claimed - observed| / |observed|`, or the absolute difference when `observed == 0`.
pub fn relative_deviation(claimed: f64, observed: f64) -> f64 {
    let diff = (claimed - observed).abs();
    if observed == 0.0 {
        diff
    } else {
        diff / observed.abs()
    }
}

/// Structured record of printed constants and forms against their oracles.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub subject: String,
    pub tolerance: f64,
    pub entries: Vec<DiscrepancyEntry>,
    /// Reference levels that the claimed ladder does not produce.
    pub skipped: Vec<f64>,
    pub max_relative_deviation: f64,
    /// Median ratio claimed/observed, when a constant scale factor is being fitted.
    pub fitted_factor: Option<f64>,
    /// Which candidate the oracle selected, for adjudication runs.
    pub winner: Option<String>,
    pub notes: Vec<String>,
}

impl DiscrepancyReport {
    pub fn new(subject: impl Into<String>, tolerance: f64) -> Self {
        Self {
            subject: subject.into(),
            tolerance,
            ..Default::default()
        }
    }

    pub fn push(&mut self, entry: DiscrepancyEntry) {
        if entry.relative_deviation > self.max_relative_deviation
            || entry.relative_deviation.is_nan()
        {
            self.max_relative_deviation = entry.relative_deviation;
        }
        self.entries.push(entry);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// True when every entry is within tolerance.
    pub fn all_within_tolerance(&self) -> bool {
        self.entries.iter().all(|e| e.within_tolerance)
    }
}

/// Median of a sample; `NaN` for an empty one.
pub fn median(values: &[f64]) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    if v.len() % 2 == 1 {
        v[mid]
    } else {
        0.5 * (v[mid - 1] + v[mid])
    }
}
