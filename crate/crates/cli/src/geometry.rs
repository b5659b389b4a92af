//! Geometry records and their CSV / JSON serialisations.
//!
//! CSV columns are fixed as `kind,id,theta_or_index,x,y,z`, one row per
//! point. The JSON form mirrors the record structure and embeds the name
//! of the manifest that produced it; CSV files get a sidecar
//! `<file>.manifest.json` instead since the column set is pinned.

use std::collections::BTreeMap;

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

/// One geometric object: a tangent arrow, a circle, a d-line segment or
/// a ray, as a list of points with one curve parameter each.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeometryRecord {
    pub kind: String,
    pub id: u32,
    /// Curve parameter per point: the angle θ for circles, the ray
    /// parameter h for rays, a plain index otherwise.
    pub params: Vec<f64>,
    pub points: Vec<[f64; 3]>,
    pub meta: BTreeMap<String, f64>,
}

impl GeometryRecord {
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.points.is_empty() {
            bail!("record {} has no points", self.id);
        }
        if self.points.len() != self.params.len() {
            bail!("record {} has {} params for {} points", self.id, self.params.len(), self.points.len());
        }
        if self
            .points
            .iter()
            .flatten()
            .chain(self.params.iter())
            .chain(self.meta.values())
            .any(|v| !v.is_finite())
        {
            bail!("record {} contains non-finite values", self.id);
        }
        Ok(())
    }
}

/// The JSON document wrapping a record set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeometryFile {
    /// Name of the manifest file written alongside this data.
    pub manifest: String,
    pub records: Vec<GeometryRecord>,
}

pub fn to_csv(records: &[GeometryRecord]) -> String {
    let mut out = String::from("kind,id,theta_or_index,x,y,z\n");
    for rec in records {
        for (param, point) in rec.params.iter().zip(&rec.points) {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                rec.kind, rec.id, param, point[0], point[1], point[2]
            ));
        }
    }
    out
}

pub fn to_json(manifest_name: &str, records: &[GeometryRecord]) -> anyhow::Result<String> {
    let file = GeometryFile {
        manifest: manifest_name.to_string(),
        records: records.to_vec(),
    };
    let mut text = serde_json::to_string_pretty(&file).context("serialising records")?;
    text.push('\n');
    Ok(text)
}

pub fn from_json(text: &str) -> anyhow::Result<GeometryFile> {
    let file: GeometryFile = serde_json::from_str(text).context("parsing geometry JSON")?;
    for rec in &file.records {
        rec.validate()?;
    }
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> GeometryRecord {
        let mut meta = BTreeMap::new();
        meta.insert("s".to_string(), 0.5);
        meta.insert("tau".to_string(), 0.0);
        GeometryRecord {
            kind: "circle".into(),
            id: 3,
            params: vec![0.0, std::f64::consts::FRAC_PI_2],
            points: vec![[1.0, 0.0, 0.5], [0.25, -0.5, 1.0]],
            meta,
        }
    }

    #[test]
    fn csv_layout_is_exactly_the_contract() {
        let text = to_csv(&[sample()]);
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "kind,id,theta_or_index,x,y,z");
        assert_eq!(lines.next().unwrap(), "circle,3,0,1,0,0.5");
        assert_eq!(lines.next().unwrap(), "circle,3,1.5707963267948966,0.25,-0.5,1");
        assert!(lines.next().is_none());
    }

    #[test]
    fn json_round_trips() {
        let records = vec![sample()];
        let text = to_json("scene.manifest.json", &records).unwrap();
        let back = from_json(&text).unwrap();
        assert_eq!(back.manifest, "scene.manifest.json");
        assert_eq!(back.records, records);
    }

    #[test]
    fn validation_rejects_bad_records() {
        let mut rec = sample();
        rec.points.clear();
        rec.params.clear();
        assert!(rec.validate().is_err());
        let mut rec = sample();
        rec.points[0][1] = f64::NAN;
        assert!(rec.validate().is_err());
    }
}
