use super::{direction_vector, GeodesicError, Piece};
use crate::planar::{cross, P2, V2};
use crate::surface::{PolyhedralSurface, SurfacePoint};
use crate::tolerance::Tolerances;
use serde::Serialize;

/// A straight path traced from a point in a given direction.
#[derive(Debug, Clone, Serialize)]
pub struct TracedPath {
    pub start: SurfacePoint,
    pub end: SurfacePoint,
    pub length: f64,
    pub pieces: Vec<Piece>,
}

/// Follow the straight line leaving `base` at fan coordinate `phi` for
/// `length`. Fails with `ConePointHit` if the line runs into a vertex first.
pub fn trace_ray(
    surface: &PolyhedralSurface,
    base: &SurfacePoint,
    phi: f64,
    length: f64,
    tol: &Tolerances,
) -> Result<TracedPath, GeodesicError> {
    if !surface.is_valid_point(base) || length.is_nan() || length < 0.0 {
        return Err(GeodesicError::InvalidPoint(*base));
    }
    let base = surface.canonicalize(base, tol.eps_len);
    if length == 0.0 {
        return Ok(TracedPath {
            start: base,
            end: base,
            length: 0.0,
            pieces: Vec::new(),
        });
    }
    let eps = tol.eps_len;
    let (mut f, d0) = direction_vector(surface, &base, phi);
    let mut x = surface
        .position_in(&base, f)
        .expect("direction face contains the base");
    let mut d: V2 = d0;
    let mut travelled = 0.0;
    let mut pieces = Vec::new();
    loop {
        let face = surface.face(f);
        let n = face.len();
        // Nearest outward crossing of a side along the ray.
        let mut exit: Option<(f64, usize, f64)> = None;
        for i in 0..n {
            let (a, b) = face.side(i);
            let e = b - a;
            let denom = cross(&d, &e);
            if cross(&e, &d) >= 0.0 || denom.abs() <= f64::EPSILON {
                continue;
            }
            let w = a - x;
            let s = cross(&w, &e) / denom;
            let t = cross(&w, &d) / denom;
            let elen = e.norm();
            if s <= eps || t * elen < -eps || t * elen > elen + eps {
                continue;
            }
            if exit.is_none_or(|(s0, _, _)| s < s0) {
                exit = Some((s, i, t.clamp(0.0, 1.0)));
            }
        }
        let (s, i, t) = exit.expect("a ray from inside a convex face leaves through a side");
        let remaining = length - travelled;
        if remaining <= s {
            let end = x + d * remaining;
            pieces.push(piece(f, &x, &end));
            let end_point = surface.locate(f, &end, eps);
            return Ok(TracedPath {
                start: base,
                end: end_point,
                length,
                pieces,
            });
        }
        let (a, b) = face.side(i);
        let elen = (b - a).norm();
        if t * elen <= eps || (1.0 - t) * elen <= eps {
            return Err(GeodesicError::ConePointHit {
                arc_length: travelled + s,
            });
        }
        let hit = x + d * s;
        pieces.push(piece(f, &x, &hit));
        travelled += s;
        let gl = surface.gluing(f, i);
        let back = surface.gluing(gl.face, gl.side).partner_to_self;
        x = back.transform_point(&hit);
        d = back.rotation * d;
        f = gl.face;
    }
}

fn piece(face: usize, a: &P2, b: &P2) -> Piece {
    Piece {
        face,
        start: [a.x, a.y],
        end: [b.x, b.y],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesic::{direction_at, shortest_geodesics, End};
    use crate::surface::build_cuboctahedron;

    #[test]
    fn tracing_a_geodesic_reproduces_it() {
        let s = build_cuboctahedron(1.0).unwrap();
        let tol = Tolerances::default();
        let p = SurfacePoint::Face {
            face: 4,
            x: 0.3,
            y: 0.6,
        };
        let q = SurfacePoint::Face {
            face: 11,
            x: 0.5,
            y: 0.3,
        };
        for g in shortest_geodesics(&s, &p, &q, 8, &tol).unwrap() {
            let d = direction_at(&s, &g, End::Start);
            let path = trace_ray(&s, &p, d.phi, g.length, &tol).unwrap();
            assert!(s.same_point(&path.end, &q, 1e-9), "{} vs {}", path.end, q);
        }
    }

    #[test]
    fn ray_along_an_edge_hits_the_next_vertex() {
        let s = build_cuboctahedron(1.0).unwrap();
        let tol = Tolerances::default();
        let v = SurfacePoint::vertex(0);
        let err = trace_ray(&s, &v, 0.0, 3.0, &tol).unwrap_err();
        match err {
            GeodesicError::ConePointHit { arc_length } => assert!((arc_length - 1.0).abs() < 1e-9),
            other => panic!("{other:?}"),
        }
        let short = trace_ray(&s, &v, 0.0, 0.5, &tol).unwrap();
        assert!(matches!(short.end, SurfacePoint::Edge { .. }));
        let zero = trace_ray(&s, &v, 0.3, 0.0, &tol).unwrap();
        assert_eq!(zero.end, v);
        assert!(zero.pieces.is_empty());
    }
}
