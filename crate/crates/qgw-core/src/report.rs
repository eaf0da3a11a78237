//! Structured verification reports with a stable JSON shape.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub id: String,
    pub paper_ref: String,
    pub residual: f64,
    pub pass: bool,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub example: String,
    pub tol: f64,
    pub t_samples: Vec<f64>,
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> Vec<&ReportEntry> {
        self.entries.iter().filter(|e| !e.pass).collect()
    }

    /// Entries sorted by residual, largest first; ties keep id order.
    pub fn worst(&self, k: usize) -> Vec<&ReportEntry> {
        let mut v: Vec<&ReportEntry> = self.entries.iter().collect();
        v.sort_by(|a, b| {
            b.residual
                .partial_cmp(&a.residual)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then_with(|| a.id.cmp(&b.id))
        });
        v.truncate(k);
        v
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        VerificationReport {
            example: "unit".into(),
            tol: 1e-9,
            t_samples: vec![1.0, -1.0, 0.5, -0.5, 1.0 / 3.0],
            entries: vec![
                ReportEntry {
                    id: "REL-2.8".into(),
                    paper_ref: "mutually commute".into(),
                    residual: 3.2e-16,
                    pass: true,
                    note: String::new(),
                },
                ReportEntry {
                    id: "REL-4.20".into(),
                    paper_ref: "P^{-2it} = ...".into(),
                    residual: 2.0e-3,
                    pass: false,
                    note: "synthetic".into(),
                },
            ],
        }
    }

    #[test]
    fn json_round_trip_is_bit_identical() {
        let r = sample();
        let a = r.to_json();
        let back = VerificationReport::from_json(&a).unwrap();
        assert_eq!(back, r);
        let b = back.to_json();
        assert_eq!(a.as_bytes(), b.as_bytes());
    }

    #[test]
    fn ordering_and_predicates() {
        let r = sample();
        assert!(!r.all_pass());
        assert_eq!(r.failures().len(), 1);
        let w = r.worst(1);
        assert_eq!(w[0].id, "REL-4.20");
    }
}
