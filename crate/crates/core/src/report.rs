//! The JSON analysis report: one stable schema consumed by the CLI and
//! by golden tests. Field names are part of the interface; bump
//! `report_version` when they change.

use serde::Serialize;

use crate::analysis::{
    check_3conn_properties, check_bounds, check_structural_lemmas, classify_ties, face_census,
    tie_face_incidence_check, vertex_connectivity, BoundReport, CheckReport, ConnectivityReport,
    TieInfo,
};
use crate::embedding::{Drawing, ValidationReport};
use crate::maximality::is_maximal;
use std::collections::BTreeMap;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub report_version: u32,
    pub n: usize,
    pub e: usize,
    pub c: usize,
    pub validation: ValidationReport,
    pub maximal: Option<bool>,
    pub connectivity: Option<ConnectivityReport>,
    pub face_census: BTreeMap<String, usize>,
    pub tie_classes: Vec<TieInfo>,
    pub bounds: BoundReport,
    pub lemma_checks: Vec<CheckReport>,
    pub tie_face_incidence: Vec<CheckReport>,
    pub three_connected_properties: Vec<CheckReport>,
}

impl AnalysisReport {
    /// Whether any applicable, enforced check failed (drives --strict).
    pub fn failed(&self) -> bool {
        !self.validation.ok
            || self.bounds.failed()
            || self.lemma_checks.iter().any(|c| c.failed())
            || self.tie_face_incidence.iter().any(|c| c.failed())
            || self.three_connected_properties.iter().any(|c| c.failed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Run the full analysis pipeline on one drawing.
pub fn analyze(d: &Drawing) -> AnalysisReport {
    let validation = d.validate();
    let maximal = if validation.ok { Some(is_maximal(d)) } else { None };
    let connectivity = vertex_connectivity(d).ok();
    let face_census = face_census(d)
        .into_iter()
        .map(|(class, count)| (class.to_string(), count))
        .collect();
    AnalysisReport {
        report_version: REPORT_VERSION,
        n: d.n(),
        e: d.e(),
        c: d.c(),
        validation,
        maximal,
        connectivity,
        face_census,
        tie_classes: classify_ties(d),
        bounds: check_bounds(d),
        lemma_checks: check_structural_lemmas(d),
        tie_face_incidence: tie_face_incidence_check(d),
        three_connected_properties: check_3conn_properties(d),
    }
}
