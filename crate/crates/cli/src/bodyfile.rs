//! JSON body files: `{dim, halfspaces: [{a, b}], vertices, name}` with at
//! least one representation.

use std::path::Path;

use innerbody::{ConvexBody, GeomError, HalfSpace, Vector};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HalfSpaceEntry {
    pub a: Vec<f64>,
    pub b: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BodyFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub halfspaces: Option<Vec<HalfSpaceEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<f64>>>,
}

/// Parses JSON text, reporting the failing field path and position.
pub fn parse(text: &str) -> CliResult<BodyFile> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        // serde_json's message already ends with the line and column.
        let path = e.path().to_string();
        if path == "." {
            CliError::Usage(e.inner().to_string())
        } else {
            CliError::Usage(format!("field {path}: {}", e.inner()))
        }
    })
}

pub fn read(path: &Path) -> CliResult<BodyFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse(&text).map_err(|e| match e {
        CliError::Usage(m) => CliError::Usage(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn check_len(field: String, len: usize, dim: usize) -> CliResult<()> {
    if len != dim {
        return Err(CliError::Usage(format!("field {field} has {len} entries, expected {dim}")));
    }
    Ok(())
}

fn shape_error(e: GeomError) -> CliError {
    match e {
        GeomError::UnsupportedDimension(n) => CliError::Unsupported(n),
        GeomError::InvalidInput(m) => CliError::Usage(m),
        GeomError::Numeric(m) => CliError::Numeric(m),
        other => CliError::Inconsistent(other.to_string()),
    }
}

impl BodyFile {
    /// Builds and validates the body. Halfspace normals are normalized; when
    /// both representations are given the vertex list must match the
    /// vertices of the halfspace intersection.
    pub fn to_body(&self) -> CliResult<ConvexBody> {
        let n = self.dim;
        if n < 2 {
            return Err(CliError::Usage(format!("field dim: {n} < 2")));
        }
        if let Some(hs) = &self.halfspaces {
            for (i, h) in hs.iter().enumerate() {
                check_len(format!("halfspaces[{i}].a"), h.a.len(), n)?;
            }
        }
        if let Some(vs) = &self.vertices {
            for (i, v) in vs.iter().enumerate() {
                check_len(format!("vertices[{i}]"), v.len(), n)?;
            }
        }
        let points: Option<Vec<Vector>> = self
            .vertices
            .as_ref()
            .map(|vs| vs.iter().map(|v| Vector::from_column_slice(v)).collect());
        match (&self.halfspaces, points) {
            (None, None) => Err(CliError::Usage(
                "body needs halfspaces or vertices".into(),
            )),
            (None, Some(points)) => {
                if points.is_empty() {
                    return Err(CliError::Usage("field vertices is empty".into()));
                }
                ConvexBody::from_vertices(&points).map_err(shape_error)
            }
            (Some(hs), points) => {
                if hs.is_empty() {
                    return Err(CliError::Usage("field halfspaces is empty".into()));
                }
                let halfspaces = hs
                    .iter()
                    .enumerate()
                    .map(|(i, h)| {
                        HalfSpace::new(Vector::from_column_slice(&h.a), h.b)
                            .map_err(|e| CliError::Usage(format!("field halfspaces[{i}]: {e}")))
                    })
                    .collect::<CliResult<Vec<_>>>()?;
                let body = ConvexBody::from_halfspaces(halfspaces).map_err(shape_error)?;
                if let Some(points) = points {
                    check_vertices(&body, &points)?;
                }
                Ok(body)
            }
        }
    }

    pub fn from_body(body: &ConvexBody, name: Option<String>) -> Self {
        BodyFile {
            dim: body.dim(),
            name,
            halfspaces: Some(
                body.halfspaces()
                    .iter()
                    .map(|h| HalfSpaceEntry {
                        a: h.normal().iter().copied().collect(),
                        b: h.offset(),
                    })
                    .collect(),
            ),
            vertices: Some(body.vertices().iter().map(|v| v.iter().copied().collect()).collect()),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("body files serialize");
        s.push('\n');
        s
    }
}

/// The listed vertices must be exactly the vertices of `body`.
fn check_vertices(body: &ConvexBody, points: &[Vector]) -> CliResult<()> {
    let eps = body.eps().max(1e-9 * body.extent());
    let near = |a: &Vector, b: &Vector| (a - b).amax() <= eps;
    for (i, p) in points.iter().enumerate() {
        if !body.vertices().iter().any(|v| near(v, p)) {
            return Err(CliError::Inconsistent(format!(
                "vertices[{i}] is not a vertex of the halfspace intersection"
            )));
        }
    }
    for v in body.vertices() {
        if !points.iter().any(|p| near(v, p)) {
            let coords: Vec<f64> = v.iter().copied().collect();
            return Err(CliError::Inconsistent(format!(
                "halfspace intersection has vertex {coords:?} missing from vertices"
            )));
        }
    }
    Ok(())
}

/// Reads a body file and builds the body; the name defaults to the file stem.
pub fn load(path: &Path) -> CliResult<(ConvexBody, String)> {
    let file = read(path)?;
    let body = file.to_body()?;
    let name = file.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "body".into())
    });
    Ok((body, name))
}
