//! Instance files.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point, Rect, UnitCircle};

/// JSON instance: red points plus either blue points or blue unit circles.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub red: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blue_points: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blue_circles: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frame: Option<[f64; 4]>,
}

impl InstanceFile {
    /// Parses and validates. Syntax errors carry serde's line and column.
    pub fn parse(text: &str) -> Result<Self> {
        let inst: InstanceFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidInstance(e.to_string()))?;
        inst.validate()?;
        Ok(inst)
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance serializes");
        s.push('\n');
        s
    }

    pub fn validate(&self) -> Result<()> {
        let coords = self
            .red
            .iter()
            .chain(self.blue_points.iter().flatten())
            .chain(self.blue_circles.iter().flatten())
            .flat_map(|p| p.iter())
            .chain(self.frame.iter().flatten());
        if coords.clone().any(|c| !c.is_finite()) {
            return Err(Error::InvalidInstance("coordinates must be finite".into()));
        }
        if self.red.is_empty() {
            return Err(Error::InvalidInstance(
                "at least one red point is required".into(),
            ));
        }
        if self.blue_points.is_some() && self.blue_circles.is_some() {
            return Err(Error::InvalidInstance(
                "give blue_points or blue_circles, not both".into(),
            ));
        }
        if let Some(f) = self.frame() {
            if !f.is_valid() {
                return Err(Error::InvalidInstance(format!("frame {f:?} is inverted")));
            }
        }
        Ok(())
    }

    pub fn red_points(&self) -> Vec<Point> {
        self.red.iter().map(|p| Point::new(p[0], p[1])).collect()
    }

    pub fn blue_points(&self) -> Vec<Point> {
        self.blue_points
            .iter()
            .flatten()
            .map(|p| Point::new(p[0], p[1]))
            .collect()
    }

    pub fn circles(&self) -> Vec<UnitCircle> {
        self.blue_circles
            .iter()
            .flatten()
            .map(|c| UnitCircle::new(c[0], c[1]))
            .collect()
    }

    pub fn frame(&self) -> Option<Rect> {
        self.frame.map(|f| Rect::new(f[0], f[1], f[2], f[3]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let inst = InstanceFile {
            red: vec![[0.1, 1.0 / 3.0], [2.0_f64.sqrt(), -1e-300]],
            blue_points: Some(vec![[std::f64::consts::PI, 5e17]]),
            k: Some(2),
            frame: Some([-10.0, -10.0, 10.0, 1e18]),
            ..Default::default()
        };
        assert_eq!(InstanceFile::parse(&inst.render()).unwrap(), inst);
    }

    #[test]
    fn rejects_bad_input() {
        let err = InstanceFile::parse("{\"red\": [[0, 1],\n [2]]}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        assert!(InstanceFile::parse("{\"red\": [[1e999, 0]]}").is_err());
        assert!(InstanceFile::parse("{\"red\": [[NaN, 0]]}").is_err());
        assert!(InstanceFile::parse("{\"red\": []}").is_err());
        assert!(InstanceFile::parse(
            "{\"red\": [[0,0]], \"blue_points\": [], \"blue_circles\": []}"
        )
        .is_err());
    }
}
