//! Flat output records. Field order here is the column order users see;
//! arbitrary-precision counts travel as decimal strings.

use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct CountRecord {
    pub family: &'static str,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enumerated: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Debug, Serialize)]
pub struct PathRecord {
    pub index: u64,
    pub path: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hump_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hump_point: Option<usize>,
    pub class: &'static str,
    pub humps: usize,
}

#[derive(Debug, Serialize)]
pub struct StatsRecord {
    pub path: String,
    pub len: usize,
    pub up: usize,
    pub down: usize,
    pub flat: usize,
    pub final_height: i64,
    pub min_height: i64,
    pub max_height: i64,
    pub class: &'static str,
    pub humps: usize,
    pub hump_points: String,
    pub valley_points: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub up_runs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub down_runs: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ForwardRecord {
    pub source: String,
    pub hump_index: usize,
    pub hump_point: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub image: String,
    pub image_class: &'static str,
    pub image_humps: usize,
    pub source_humps: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub svg_source: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub svg_image: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct BackwardRecord {
    pub image: String,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub carried_hump_point: usize,
    pub preimage: String,
    pub hump_index: usize,
    pub hump_point: usize,
    pub preimage_class: &'static str,
    pub preimage_humps: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub svg_image: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub svg_preimage: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct SuiteRecord {
    pub suite: &'static str,
    pub cases: u64,
    pub failures: u64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct RenderRecord {
    pub path: String,
    pub format: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

/// What goes to stderr when a command cannot produce its records.
#[derive(Debug, Serialize)]
pub struct Diagnostic {
    pub error: String,
    pub detail: String,
}
