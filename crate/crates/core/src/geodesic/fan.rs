use super::{direction_at, shortest_geodesics, End, GeodesicError};
use crate::surface::{FaceId, PolyhedralSurface, SurfacePoint, VertexId};
use crate::tolerance::Tolerances;
use serde::Serialize;

/// One shortest vertex-to-vertex geodesic leaving a vertex.
#[derive(Debug, Clone, Serialize)]
pub struct FanEntry {
    pub target: VertexId,
    pub phi: f64,
    pub length: f64,
    pub faces: Vec<FaceId>,
}

/// All shortest geodesics from `v` to every other vertex, sorted by their
/// direction coordinate at `v`.
pub fn vertex_fan(
    surface: &PolyhedralSurface,
    v: VertexId,
    max_faces: usize,
    tol: &Tolerances,
) -> Result<Vec<FanEntry>, GeodesicError> {
    let from = SurfacePoint::vertex(v);
    if v >= surface.vertex_count() {
        return Err(GeodesicError::InvalidPoint(from));
    }
    let mut out = Vec::new();
    for w in (0..surface.vertex_count()).filter(|&w| w != v) {
        for g in shortest_geodesics(surface, &from, &SurfacePoint::vertex(w), max_faces, tol)? {
            let d = direction_at(surface, &g, End::Start);
            out.push(FanEntry {
                target: w,
                phi: d.phi,
                length: g.length,
                faces: g.faces().to_vec(),
            });
        }
    }
    out.sort_by(|a, b| a.phi.total_cmp(&b.phi));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::build_cuboctahedron;
    use crate::tolerance::ANGLE_QUANTUM;
    use std::collections::BTreeMap;

    #[test]
    fn twenty_rays_evenly_spaced() {
        let s = build_cuboctahedron(1.0).unwrap();
        let tol = Tolerances::default();
        for v in 0..12 {
            let fan = vertex_fan(&s, v, 8, &tol).unwrap();
            assert_eq!(fan.len(), 20);
            let theta = s.cone_angle(v);
            for k in 0..20 {
                let next = if k + 1 < 20 {
                    fan[k + 1].phi
                } else {
                    fan[0].phi + theta
                };
                assert!((next - fan[k].phi - ANGLE_QUANTUM).abs() < 1e-9);
            }
            let mut mult: BTreeMap<VertexId, usize> = BTreeMap::new();
            for e in &fan {
                *mult.entry(e.target).or_default() += 1;
            }
            let d = s.skeleton_distances_from(v).unwrap();
            for (&w, &m) in &mult {
                let expect = match d[w] {
                    1 => 1,
                    2 if s.is_square_diagonal(v, w) => 1,
                    2 => 2,
                    3 => 6,
                    _ => unreachable!(),
                };
                assert_eq!(m, expect, "v{v} -> v{w}");
            }
            assert_eq!(mult.len(), 11);
        }
    }
}
