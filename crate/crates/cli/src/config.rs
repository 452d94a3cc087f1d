//! Optional JSON run configuration. Every field mirrors a command-line flag;
//! flags take precedence over the file.

use std::path::{Path, PathBuf};

use serde::Deserialize;

#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub p: Option<u64>,
    pub m: Option<i64>,
    pub n: Option<i64>,
    pub method: Option<String>,
    pub suite: Option<String>,
    pub pmin: Option<u64>,
    pub pmax: Option<u64>,
    pub instances: Option<usize>,
    pub sizes: Option<Vec<String>>,
    pub positions: Option<u32>,
    pub policy: Option<String>,
    pub schemes: Option<Vec<String>>,
    pub seed: Option<u64>,
    pub jobs: Option<usize>,
    pub log_power: Option<f64>,
    pub tol_scale: Option<f64>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub summary: Option<bool>,
    pub cache_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
    }
}
