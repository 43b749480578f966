use super::{GeodesicError, GeodesicSegment};
use crate::planar::{ccw_angle, heading, rotate, wrap_angle, V2};
use crate::surface::{FaceId, PolyhedralSurface, SurfacePoint};
use serde::Serialize;
use std::f64::consts::{PI, TAU};

/// A tangent direction at a point, as an angle `phi ∈ [0, total)` in the
/// point's cone chart (`total` is the cone angle at vertices, 2π elsewhere).
///
/// At a vertex the angle is measured counter-clockwise from its
/// lowest-id incident edge. At an edge point it is measured from the
/// direction of the edge's higher vertex, as seen in the lower-id face. In
/// a face interior it is the heading in the face chart.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DirectionCoordinate {
    pub base: SurfacePoint,
    pub phi: f64,
    pub total: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    Start,
    Finish,
}

/// Fan coordinate of the chart vector `v` at `base`, expressed in face `f`.
pub fn fan_coordinate(surface: &PolyhedralSurface, base: &SurfacePoint, f: FaceId, v: &V2) -> f64 {
    match *base {
        SurfacePoint::Vertex { id } => {
            let star = surface.star(id);
            let face = surface.face(f);
            let i = face.corner_of(id).expect("face is incident to the vertex");
            let c = star
                .corners
                .iter()
                .find(|c| c.face == f && c.corner == i)
                .expect("corner in star");
            let next = face.corners[(i + 1) % face.len()] - face.corners[i];
            let mut a = ccw_angle(&next, v);
            if a > c.angle {
                // Slightly outside the corner through rounding: snap to the nearer side.
                a = if a > 0.5 * (c.angle + TAU) {
                    0.0
                } else {
                    c.angle
                };
            }
            wrap_angle(c.offset + a, star.cone_angle)
        }
        SurfacePoint::Edge { edge, .. } => {
            let (reference, _) = edge_frame(surface, edge);
            let (g, _) = surface.edge(edge).sides[0];
            let w = if f == g {
                *v
            } else {
                let side = surface
                    .shared_side(g, f)
                    .expect("face is incident to the edge");
                surface.gluing(g, side).partner_to_self.rotation * v
            };
            ccw_angle(&reference, &w)
        }
        SurfacePoint::Face { .. } => heading(v),
    }
}

/// Reference direction at an edge point (in the chart of the lower-id face)
/// and whether that face lies on the `phi ∈ [0, π]` side.
fn edge_frame(surface: &PolyhedralSurface, edge: usize) -> (V2, bool) {
    let e = surface.edge(edge);
    let (g, side) = e.sides[0];
    let face = surface.face(g);
    let (a, b) = face.side(side);
    let (va, _) = face.side_vertices(side);
    // The face interior is on the left of its own side direction.
    if va == e.lo {
        (b - a, true)
    } else {
        (a - b, false)
    }
}

/// Face and unit chart vector for the direction `phi` at `base`.
pub fn direction_vector(
    surface: &PolyhedralSurface,
    base: &SurfacePoint,
    phi: f64,
) -> (FaceId, V2) {
    let total = surface.total_angle(base);
    let phi = wrap_angle(phi, total);
    match *base {
        SurfacePoint::Vertex { id } => {
            let star = surface.star(id);
            let c = star
                .corners
                .iter()
                .rev()
                .find(|c| c.offset <= phi)
                .unwrap_or(&star.corners[0]);
            let face = surface.face(c.face);
            let next = face.corners[(c.corner + 1) % face.len()] - face.corners[c.corner];
            (c.face, rotate(&next.normalize(), phi - c.offset))
        }
        SurfacePoint::Edge { edge, .. } => {
            let (reference, first_is_upper) = edge_frame(surface, edge);
            let e = surface.edge(edge);
            let (g, side) = e.sides[0];
            let dir = rotate(&reference.normalize(), phi);
            let in_first = if first_is_upper {
                phi <= PI
            } else {
                phi >= PI || phi == 0.0
            };
            if in_first {
                (g, dir)
            } else {
                let gl = surface.gluing(g, side);
                (gl.face, gl.partner_to_self.rotation.inverse() * dir)
            }
        }
        SurfacePoint::Face { face, .. } => (face, V2::new(phi.cos(), phi.sin())),
    }
}

/// Outgoing direction of `g` at one of its ends.
pub fn direction_at(
    surface: &PolyhedralSurface,
    g: &GeodesicSegment,
    end: End,
) -> DirectionCoordinate {
    let (base, face, v) = match end {
        End::Start => {
            let p = g.pieces.first().expect("non-empty");
            (g.from, p.face, p.end() - p.start())
        }
        End::Finish => {
            let p = g.pieces.last().expect("non-empty");
            (g.to, p.face, p.start() - p.end())
        }
    };
    DirectionCoordinate {
        base,
        phi: fan_coordinate(surface, &base, face, &v),
        total: surface.total_angle(&base),
    }
}

/// Outgoing direction of `g` at the endpoint `p`.
pub fn direction_from(
    surface: &PolyhedralSurface,
    g: &GeodesicSegment,
    p: &SurfacePoint,
    eps: f64,
) -> Result<DirectionCoordinate, GeodesicError> {
    if surface.same_point(&g.from, p, eps) {
        Ok(direction_at(surface, g, End::Start))
    } else if surface.same_point(&g.to, p, eps) {
        Ok(direction_at(surface, g, End::Finish))
    } else {
        Err(GeodesicError::NotAnEndpoint(*p))
    }
}

/// Angle of the wedge from `d1` to `d2` that contains `witness`.
pub fn interior_angle(
    surface: &PolyhedralSurface,
    d1: &DirectionCoordinate,
    d2: &DirectionCoordinate,
    witness: &DirectionCoordinate,
    eps_len: f64,
    eps_ang: f64,
) -> Result<f64, GeodesicError> {
    if !surface.same_point(&d1.base, &d2.base, eps_len)
        || !surface.same_point(&d1.base, &witness.base, eps_len)
    {
        return Err(GeodesicError::BaseMismatch);
    }
    let total = d1.total;
    let alpha = wrap_angle(d2.phi - d1.phi, total);
    let beta = wrap_angle(witness.phi - d1.phi, total);
    if beta <= eps_ang || (beta - alpha).abs() <= eps_ang || total - beta <= eps_ang {
        return Err(GeodesicError::WitnessOnBoundary);
    }
    Ok(if beta < alpha { alpha } else { total - alpha })
}

/// Smaller of the two angles between directions at the same point.
pub fn angle_gap(d1: &DirectionCoordinate, d2: &DirectionCoordinate) -> f64 {
    let a = wrap_angle(d2.phi - d1.phi, d1.total);
    a.min(d1.total - a)
}
