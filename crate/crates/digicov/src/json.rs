//! JSON schemas for images, maps, curves and reports.
//!
//! Image:  {"dim": n, "t": t, "points": [[c1,...,cn], ...]}
//! Map:    {"source": <image or path>, "target": <same>,
//!          "pairs": [[[src coords],[tgt coords]], ...]}
//! Curve:  image fields plus "order": [indices into points]

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{validate_scc, SimpleClosedCurve};
use crate::error::DomainError;
use crate::lattice::{AdjacencyKind, DigitalImage, Point};
use crate::morphism::{DigitalMap, Witness};
use crate::oracle::Counterexample;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ImageJson {
    pub dim: u32,
    pub t: u32,
    pub points: Vec<Vec<i64>>,
}

impl ImageJson {
    pub fn to_image(&self) -> Result<DigitalImage, JsonError> {
        let kind = AdjacencyKind::new(self.t, self.dim)?;
        let mut seen = BTreeSet::new();
        for coords in &self.points {
            if coords.len() != self.dim as usize {
                return Err(JsonError::Domain(DomainError::DimensionMismatch {
                    expected: self.dim as usize,
                    got: coords.len(),
                }));
            }
            if !seen.insert(coords.clone()) {
                return Err(JsonError::Invalid(format!("duplicate point {coords:?}")));
            }
        }
        Ok(DigitalImage::new(
            kind,
            self.points.iter().map(|c| Point::new(c.clone())),
        )?)
    }

    pub fn from_image(image: &DigitalImage) -> Self {
        ImageJson {
            dim: image.kind().n(),
            t: image.kind().t(),
            points: image.points().iter().map(|p| p.coords().to_vec()).collect(),
        }
    }
}

/// An image given inline or as a path to an image file (resolved
/// relative to the referring file).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ImageRef {
    Path(String),
    Inline(ImageJson),
}

impl ImageRef {
    fn resolve(&self, base_dir: &Path) -> Result<DigitalImage, JsonError> {
        match self {
            ImageRef::Inline(json) => json.to_image(),
            ImageRef::Path(rel) => {
                let path = base_dir.join(rel);
                load_image(&path)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapJson {
    pub source: ImageRef,
    pub target: ImageRef,
    pub pairs: Vec<(Vec<i64>, Vec<i64>)>,
}

impl MapJson {
    pub fn to_map(&self, base_dir: &Path) -> Result<DigitalMap, JsonError> {
        let source = self.source.resolve(base_dir)?;
        let target = self.target.resolve(base_dir)?;
        let pairs: Vec<(Point, Point)> = self
            .pairs
            .iter()
            .map(|(a, b)| (Point::new(a.clone()), Point::new(b.clone())))
            .collect();
        Ok(DigitalMap::new(source, target, pairs)?)
    }

    pub fn from_map(map: &DigitalMap) -> Self {
        MapJson {
            source: ImageRef::Inline(ImageJson::from_image(map.source())),
            target: ImageRef::Inline(ImageJson::from_image(map.target())),
            pairs: map
                .pairs()
                .map(|(a, b)| (a.coords().to_vec(), b.coords().to_vec()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveJson {
    pub dim: u32,
    pub t: u32,
    pub points: Vec<Vec<i64>>,
    pub order: Vec<usize>,
}

impl CurveJson {
    pub fn to_curve(&self) -> Result<SimpleClosedCurve, JsonError> {
        let image = ImageJson {
            dim: self.dim,
            t: self.t,
            points: self.points.clone(),
        }
        .to_image()?;
        if self.order.len() != self.points.len() {
            return Err(JsonError::Invalid(
                "order must list every point index exactly once".into(),
            ));
        }
        let mut ordered = Vec::with_capacity(self.order.len());
        for &i in &self.order {
            let coords = self
                .points
                .get(i)
                .ok_or_else(|| JsonError::Invalid(format!("order index {i} out of range")))?;
            ordered.push(Point::new(coords.clone()));
        }
        Ok(validate_scc(ordered, *image.kind())?)
    }

    pub fn from_curve(curve: &SimpleClosedCurve) -> Self {
        let points: Vec<Vec<i64>> = curve.order().iter().map(|p| p.coords().to_vec()).collect();
        CurveJson {
            dim: curve.image().kind().n(),
            t: curve.image().kind().t(),
            order: (0..points.len()).collect(),
            points,
        }
    }
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent()
        .map(|p| p.to_path_buf())
        .unwrap_or_else(|| PathBuf::from("."))
}

pub fn load_image(path: &Path) -> Result<DigitalImage, JsonError> {
    let text = std::fs::read_to_string(path)?;
    let json: ImageJson = serde_json::from_str(&text)?;
    json.to_image()
}

pub fn load_map(path: &Path) -> Result<DigitalMap, JsonError> {
    let text = std::fs::read_to_string(path)?;
    let json: MapJson = serde_json::from_str(&text)?;
    json.to_map(&base_dir(path))
}

pub fn load_curve(path: &Path) -> Result<SimpleClosedCurve, JsonError> {
    let text = std::fs::read_to_string(path)?;
    let json: CurveJson = serde_json::from_str(&text)?;
    json.to_curve()
}

pub fn write_pretty<T: Serialize>(path: &Path, value: &T) -> Result<(), JsonError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

/// Counterexample as map JSON plus the failing-clause annotation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CounterexampleJson {
    pub hypothesis: String,
    pub conclusion: String,
    pub map: MapJson,
    pub witness: Option<Witness>,
}

impl CounterexampleJson {
    pub fn from_counterexample(c: &Counterexample) -> Self {
        CounterexampleJson {
            hypothesis: c.hypothesis.to_string(),
            conclusion: c.conclusion.to_string(),
            map: MapJson::from_map(&c.map),
            witness: c.failing_witness.clone(),
        }
    }
}
