use super::GeodesicSegment;
use crate::planar::{intersect_segments, point_segment_distance, SegmentHit};
use crate::surface::{PolyhedralSurface, SurfacePoint};
use serde::Serialize;

/// How two geodesic segments meet.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", content = "point", rename_all = "snake_case")]
pub enum Intersection {
    Disjoint,
    /// They meet only in points that are endpoints of both.
    SharedEndpoint,
    /// They meet in a point that is interior to at least one of them.
    Crossing(SurfacePoint),
    /// They share a sub-segment of positive length.
    Overlap,
}

pub fn segments_intersect(
    surface: &PolyhedralSurface,
    g1: &GeodesicSegment,
    g2: &GeodesicSegment,
    eps: f64,
) -> Intersection {
    let mut points: Vec<SurfacePoint> = Vec::new();
    for e1 in [g1.from, g1.to] {
        for e2 in [g2.from, g2.to] {
            if e1.is_vertex() && surface.same_point(&e1, &e2, eps) {
                points.push(e1);
            }
        }
    }
    for p1 in &g1.pieces {
        for p2 in &g2.pieces {
            let (b0, b1, side) = if p1.face == p2.face {
                (p2.start(), p2.end(), None)
            } else if let Some(j) = surface.shared_side(p1.face, p2.face) {
                let iso = surface.gluing(p1.face, j).partner_to_self;
                (
                    iso.transform_point(&p2.start()),
                    iso.transform_point(&p2.end()),
                    Some(j),
                )
            } else {
                continue;
            };
            let on_side = |q: &crate::planar::P2| match side {
                None => true,
                Some(j) => {
                    let (a, b) = surface.face(p1.face).side(j);
                    point_segment_distance(q, &a, &b) <= eps
                }
            };
            match intersect_segments(&p1.start(), &p1.end(), &b0, &b1, eps) {
                SegmentHit::None => {}
                SegmentHit::Point { p, .. } => {
                    if on_side(&p) {
                        points.push(surface.locate(p1.face, &p, eps));
                    }
                }
                SegmentHit::Overlap { s0, s1 } => {
                    let a = p1.start() + (p1.end() - p1.start()) * s0;
                    let b = p1.start() + (p1.end() - p1.start()) * s1;
                    if on_side(&a) && on_side(&b) {
                        return Intersection::Overlap;
                    }
                }
            }
        }
    }
    let shared_end = |x: &SurfacePoint| {
        let in1 = surface.same_point(x, &g1.from, eps) || surface.same_point(x, &g1.to, eps);
        let in2 = surface.same_point(x, &g2.from, eps) || surface.same_point(x, &g2.to, eps);
        in1 && in2
    };
    match points.iter().find(|x| !shared_end(x)) {
        Some(x) => Intersection::Crossing(*x),
        None if points.is_empty() => Intersection::Disjoint,
        None => Intersection::SharedEndpoint,
    }
}
