//! Frozen oracle answers.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::InstanceFile;

/// Oracle answer for one instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenResult {
    pub rect: [f64; 4],
    pub area: f64,
    /// Certified upper bound, for oracles that only bracket the optimum.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GoldenRecord {
    pub instance: InstanceFile,
    pub seed: u64,
    /// Name of the oracle that produced `result`.
    pub oracle: String,
    pub result: GoldenResult,
    /// Allowed absolute deviation in area.
    pub tolerance: f64,
}

impl GoldenRecord {
    pub fn parse(text: &str) -> Result<Self> {
        let rec: GoldenRecord =
            serde_json::from_str(text).map_err(|e| Error::InvalidInstance(e.to_string()))?;
        rec.instance.validate()?;
        Ok(rec)
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("record serializes");
        s.push('\n');
        s
    }

    /// Does `area` agree with the frozen answer?
    pub fn accepts(&self, area: f64) -> bool {
        let upper = self.result.upper.unwrap_or(self.result.area);
        area >= self.result.area - self.tolerance && area <= upper + self.tolerance
    }
}

/// Every `*.json` record under `dir`, sorted by file name.
pub fn load_dir(dir: &Path) -> Result<Vec<(PathBuf, GoldenRecord)>> {
    let io = |e: std::io::Error| Error::InvalidInstance(format!("{}: {e}", dir.display()));
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = fs::read_to_string(&p).map_err(io)?;
            let rec = GoldenRecord::parse(&text)
                .map_err(|e| Error::InvalidInstance(format!("{}: {e}", p.display())))?;
            Ok((p, rec))
        })
        .collect()
}
