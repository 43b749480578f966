//! Geodesics by unfolding: exhaustive shortest-path enumeration over
//! backtrack-free face sequences, direction coordinates in the cone chart at
//! a point, intersection classification and straight ray tracing.

mod direction;
mod fan;
mod intersect;
mod shortest;
mod trace;
mod unfold;

pub use direction::{
    angle_gap, direction_at, direction_from, direction_vector, fan_coordinate, interior_angle,
    DirectionCoordinate, End,
};
pub use fan::{vertex_fan, FanEntry};
pub use intersect::{segments_intersect, Intersection};
pub use shortest::{geodesic_between, shortest_geodesics, DEFAULT_MAX_FACES};
pub use trace::{trace_ray, TracedPath};
pub use unfold::{unfold, UnfoldedChart};

use crate::planar::P2;
use crate::surface::{FaceId, SurfacePoint};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeodesicError {
    #[error("faces {0} and {1} are not glued along a side")]
    NotAdjacent(FaceId, FaceId),
    #[error("face sequence backtracks at position {0}")]
    Backtrack(usize),
    #[error("empty face sequence")]
    EmptySequence,
    #[error("endpoints coincide")]
    SamePoint,
    #[error("invalid surface point {0}")]
    InvalidPoint(SurfacePoint),
    #[error("max_faces={max_faces} is too small: {reason}")]
    MaxFacesTooSmall { max_faces: usize, reason: String },
    #[error("{0} tied shortest geodesics and no witness face")]
    Ambiguous(usize),
    #[error("witness face {face} selects {matches} of {total} tied geodesics")]
    Witness {
        face: FaceId,
        matches: usize,
        total: usize,
    },
    #[error("directions have different base points")]
    BaseMismatch,
    #[error("point {0} is not an endpoint of the segment")]
    NotAnEndpoint(SurfacePoint),
    #[error("witness direction lies on a wedge boundary")]
    WitnessOnBoundary,
    #[error("ray hits a cone point at arc length {arc_length}")]
    ConePointHit { arc_length: f64 },
}

/// Straight sub-segment of a geodesic inside one face, in that face's chart.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Piece {
    pub face: FaceId,
    pub start: [f64; 2],
    pub end: [f64; 2],
}

impl Piece {
    pub fn start(&self) -> P2 {
        P2::new(self.start[0], self.start[1])
    }

    pub fn end(&self) -> P2 {
        P2::new(self.end[0], self.end[1])
    }

    pub fn length(&self) -> f64 {
        (self.end() - self.start()).norm()
    }
}

/// A shortest path realized as a straight segment in an unfolded face strip.
#[derive(Debug, Clone)]
pub struct GeodesicSegment {
    pub from: SurfacePoint,
    pub to: SurfacePoint,
    pub chart: UnfoldedChart,
    pub pieces: Vec<Piece>,
    pub length: f64,
}

impl GeodesicSegment {
    pub fn faces(&self) -> &[FaceId] {
        &self.chart.faces
    }

    /// Whether the segment passes through face `f` along a piece of positive length.
    pub fn traverses(&self, f: FaceId) -> bool {
        self.pieces.iter().any(|p| p.face == f)
    }

    /// Faces whose interior the segment meets, sorted.
    pub fn interior_faces(
        &self,
        eps: f64,
        surface: &crate::surface::PolyhedralSurface,
    ) -> Vec<FaceId> {
        let mut out: Vec<FaceId> = self
            .pieces
            .iter()
            .filter(|p| {
                let mid = nalgebra::center(&p.start(), &p.end());
                crate::planar::convex_contains_strict(&surface.face(p.face).corners, &mid, eps)
            })
            .map(|p| p.face)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Point at arc-length fraction `t ∈ [0, 1]`, as (face, chart coordinates).
    pub fn chart_point_at(&self, t: f64) -> (FaceId, P2) {
        let target = t.clamp(0.0, 1.0) * self.length;
        let mut acc = 0.0;
        for p in &self.pieces {
            let l = p.length();
            if acc + l >= target || std::ptr::eq(p, self.pieces.last().expect("non-empty")) {
                let s = if l > 0.0 {
                    ((target - acc) / l).clamp(0.0, 1.0)
                } else {
                    0.0
                };
                return (p.face, p.start() + (p.end() - p.start()) * s);
            }
            acc += l;
        }
        unreachable!("segment without pieces")
    }

    /// Canonical surface point at arc-length fraction `t`.
    pub fn point_at(
        &self,
        surface: &crate::surface::PolyhedralSurface,
        t: f64,
        eps: f64,
    ) -> SurfacePoint {
        if t <= 0.0 {
            return self.from;
        }
        if t >= 1.0 {
            return self.to;
        }
        let (f, q) = self.chart_point_at(t);
        surface.locate(f, &q, eps)
    }

    /// The same geodesic traversed backwards.
    pub fn reversed(&self, surface: &crate::surface::PolyhedralSurface) -> GeodesicSegment {
        let mut faces = self.chart.faces.clone();
        faces.reverse();
        let chart = unfold(surface, &faces).expect("reverse of a valid strip is valid");
        let pieces = self
            .pieces
            .iter()
            .rev()
            .map(|p| Piece {
                face: p.face,
                start: p.end,
                end: p.start,
            })
            .collect();
        GeodesicSegment {
            from: self.to,
            to: self.from,
            chart,
            pieces,
            length: self.length,
        }
    }

    /// Unordered endpoint pair plus the faces whose interior the geodesic
    /// crosses. Identifies a geodesic between two vertices uniquely.
    pub fn key(&self, surface: &crate::surface::PolyhedralSurface, eps: f64) -> GeodesicKey {
        let (a, b) = (self.from, self.to);
        GeodesicKey {
            endpoints: [a.to_string(), b.to_string()],
            faces: self.interior_faces(eps, surface),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GeodesicKey {
    pub endpoints: [String; 2],
    pub faces: Vec<FaceId>,
}

/// Serializable form of a geodesic.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeodesicJson {
    pub from: SurfacePoint,
    pub to: SurfacePoint,
    pub faces: Vec<FaceId>,
    pub length: f64,
    /// `[face, x, y]` triples: the start of every piece, then the end point.
    pub polyline: Vec<(FaceId, f64, f64)>,
}

impl From<&GeodesicSegment> for GeodesicJson {
    fn from(g: &GeodesicSegment) -> Self {
        let mut polyline: Vec<(FaceId, f64, f64)> = g
            .pieces
            .iter()
            .map(|p| (p.face, p.start[0], p.start[1]))
            .collect();
        if let Some(last) = g.pieces.last() {
            polyline.push((last.face, last.end[0], last.end[1]));
        }
        GeodesicJson {
            from: g.from,
            to: g.to,
            faces: g.chart.faces.clone(),
            length: g.length,
            polyline,
        }
    }
}
