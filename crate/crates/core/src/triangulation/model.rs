use crate::geodesic::{geodesic_between, GeodesicError, GeodesicSegment};
use crate::surface::{FaceId, PolyhedralSurface, SurfacePoint};
use crate::tolerance::Tolerances;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TriangulationError {
    #[error("edge {edge} ({a}-{b}): {source}")]
    Edge {
        edge: usize,
        a: usize,
        b: usize,
        source: GeodesicError,
    },
    #[error("malformed complex: {0}")]
    Malformed(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("corner angle at vertex {vertex} of triangle {triangle}: {source}")]
    Angle {
        triangle: usize,
        vertex: usize,
        source: GeodesicError,
    },
    #[error("invalid triangulation json: {0}")]
    Json(String),
}

/// A triangulation edge: the geodesic between two triangulation vertices.
/// When several shortest geodesics tie, `witness_face` names a face whose
/// interior only the intended one meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriEdge {
    pub a: usize,
    pub b: usize,
    #[serde(default)]
    pub witness_face: Option<FaceId>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeodesicTriangulation {
    pub vertices: Vec<SurfacePoint>,
    pub edges: Vec<TriEdge>,
    /// Each triangle as three edge ids.
    pub triangles: Vec<[usize; 3]>,
    /// Optional display names for the vertices.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

impl GeodesicTriangulation {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("triangulation serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, TriangulationError> {
        serde_json::from_str(text).map_err(|e| TriangulationError::Json(e.to_string()))
    }

    pub fn label(&self, v: usize) -> String {
        self.labels
            .get(v)
            .cloned()
            .unwrap_or_else(|| format!("p{v}"))
    }

    /// The three vertices of a triangle, ascending.
    pub fn triangle_vertices(&self, t: usize) -> Result<[usize; 3], TriangulationError> {
        let mut vs: Vec<usize> = self.triangles[t]
            .iter()
            .flat_map(|&e| {
                let edge = &self.edges[e];
                [edge.a, edge.b]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        match vs[..] {
            [x, y, z] => Ok([x, y, z]),
            _ => Err(TriangulationError::Malformed(format!(
                "triangle {t} does not have three corners"
            ))),
        }
    }

    /// Realize every edge as a geodesic segment oriented from `a` to `b`.
    pub fn realize(
        &self,
        surface: &PolyhedralSurface,
        max_faces: usize,
        tol: &Tolerances,
    ) -> Result<Vec<GeodesicSegment>, TriangulationError> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                geodesic_between(
                    surface,
                    &self.vertices[e.a],
                    &self.vertices[e.b],
                    e.witness_face,
                    max_faces,
                    tol,
                )
                .map_err(|source| TriangulationError::Edge {
                    edge: i,
                    a: e.a,
                    b: e.b,
                    source,
                })
            })
            .collect()
    }
}
