//! Geodesic triangulations of the surface: the data model, the two
//! explicit constructions, and a verifier that checks the complex, the
//! edge intersections, the corner angles and the curvature bookkeeping.

mod construct;
mod model;
mod verify;

pub use construct::{
    acute_frame, construct_acute12, construct_nonobtuse8, construct_nonobtuse8_from,
    point_on_diagonal, star_fraction, AcuteFrame,
};
pub use model::{GeodesicTriangulation, TriEdge, TriangulationError};
pub use verify::{
    check_complex, check_edges, corner_angles, verify, CheckResult, CheckStatus, Classification,
    CornerAngle, GaussBonnet, VerificationReport, CHECK_NAMES,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geodesic::{angle_gap, direction_from, shortest_geodesics, DEFAULT_MAX_FACES};
    use crate::surface::{build_cuboctahedron, SurfacePoint};
    use crate::tolerance::Tolerances;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(f64::total_cmp);
        v
    }

    #[test]
    fn nonobtuse8_angles_and_shape() {
        let s = build_cuboctahedron(1.0).unwrap();
        let tol = Tolerances::default();
        let t = construct_nonobtuse8(&s, &tol).unwrap();
        assert_eq!(
            (t.vertices.len(), t.edges.len(), t.triangles.len()),
            (6, 12, 8)
        );
        let r = verify(&s, &t, DEFAULT_MAX_FACES, &tol);
        assert!(r.valid, "{:#?}", r.checks);
        assert_eq!(r.classification, Some(Classification::NonObtuse));
        assert!(r.margin.unwrap().abs() < 1e-9);
        for tri in 0..8 {
            let a = sorted(
                r.angles
                    .iter()
                    .filter(|c| c.triangle == tri)
                    .map(|c| c.angle)
                    .collect(),
            );
            let expect = [5.0 * PI / 12.0, 5.0 * PI / 12.0, FRAC_PI_2];
            assert!(
                a.iter().zip(expect).all(|(x, y)| (x - y).abs() < 1e-9),
                "{a:?}"
            );
        }
        // c and c' are flat: four right angles.
        for v in [4, 5] {
            assert!(!t.vertices[v].is_vertex());
            let sum: f64 = r
                .angles
                .iter()
                .filter(|c| c.vertex == v)
                .map(|c| c.angle)
                .sum();
            assert!((sum - 2.0 * PI).abs() < 1e-9);
        }
        let gb = r.gauss_bonnet.unwrap();
        assert!((gb.total_excess - 8.0 * FRAC_PI_3).abs() < 1e-8);
        assert!(gb.enclosed.iter().all(|&k| k == 1));
    }

    #[test]
    fn nonobtuse8_triangles_are_congruent() {
        let s = build_cuboctahedron(1.0).unwrap();
        let tol = Tolerances::default();
        let t = construct_nonobtuse8(&s, &tol).unwrap();
        let seg = t.realize(&s, DEFAULT_MAX_FACES, &tol).unwrap();
        let lens: Vec<Vec<f64>> = t
            .triangles
            .iter()
            .map(|tri| sorted(tri.iter().map(|&e| seg[e].length).collect()))
            .collect();
        for l in &lens {
            for k in 0..3 {
                assert!((l[k] - lens[0][k]).abs() < 1e-9);
            }
        }
        // Oracle: diagonal √2 and two half belt geodesics (1 + √3) / 2.
        let half = (1.0 + 3f64.sqrt()) / 2.0;
        assert!((lens[0][0] - half).abs() < 1e-9 && (lens[0][2] - 2f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn nonobtuse8_is_equivariant() {
        let s = build_cuboctahedron(1.0).unwrap();
        let tol = Tolerances::default();
        let base = construct_nonobtuse8(&s, &tol).unwrap();
        let (a, b) = (
            base.vertices[0].as_vertex().unwrap(),
            base.vertices[1].as_vertex().unwrap(),
        );
        let reference = sorted(
            verify(&s, &base, 8, &tol)
                .angles
                .iter()
                .map(|c| c.angle)
                .collect(),
        );
        for g in s.isometry_group().iter().step_by(7) {
            let t = construct_nonobtuse8_from(&s, g[a], g[b], &tol).unwrap();
            let r = verify(&s, &t, 8, &tol);
            assert!(r.valid);
            let got = sorted(r.angles.iter().map(|c| c.angle).collect());
            assert!(got
                .iter()
                .zip(&reference)
                .all(|(x, y)| (x - y).abs() < 1e-9));
        }
    }

    #[test]
    fn removing_a_triangle_breaks_the_complex() {
        let s = build_cuboctahedron(1.0).unwrap();
        let tol = Tolerances::default();
        let mut t = construct_nonobtuse8(&s, &tol).unwrap();
        t.triangles.pop();
        let r = verify(&s, &t, 8, &tol);
        assert!(!r.valid);
        assert_eq!(r.check("complex"), Some(CheckStatus::Fail));
        assert_eq!(r.check("edges"), Some(CheckStatus::Skipped));
    }

    #[test]
    fn json_round_trip() {
        let s = build_cuboctahedron(1.0).unwrap();
        let t = construct_acute12(&s, &Tolerances::default()).unwrap();
        let back = GeodesicTriangulation::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        let v: serde_json::Value = serde_json::from_str(&t.to_json()).unwrap();
        assert!(v["edges"][0].get("witness_face").is_some());
    }

    #[test]
    fn acute12_is_acute() {
        let s = build_cuboctahedron(1.0).unwrap();
        let tol = Tolerances::default();
        let t = construct_acute12(&s, &tol).unwrap();
        assert_eq!(
            (t.vertices.len(), t.edges.len(), t.triangles.len()),
            (8, 18, 12)
        );
        let r = verify(&s, &t, DEFAULT_MAX_FACES, &tol);
        assert!(r.valid, "{:#?}", r.checks);
        assert_eq!(r.classification, Some(Classification::Acute));
        assert_eq!(r.angles.len(), 36);
        assert!(r.angles.iter().all(|c| c.angle < FRAC_PI_2));
        let total: f64 = r.angles.iter().map(|c| c.angle).sum();
        // Oracle: four cone vertices at 5π/3 and four flat points at 2π.
        assert!((total - 44.0 * PI / 3.0).abs() < 1e-8);
        assert!((r.gauss_bonnet.unwrap().total_excess - 8.0 * FRAC_PI_3).abs() < 1e-8);
    }

    #[test]
    fn star_point_position() {
        // Oracle: ray at π/6 from the corner of a unit right isosceles
        // triangle meets the hypotenuse x + y = 1.
        let r = 1.0 / ((PI / 6.0).cos() + (PI / 6.0).sin());
        let p = (r * (PI / 6.0).cos(), r * (PI / 6.0).sin());
        assert!((r - (3f64.sqrt() - 1.0)).abs() < 1e-12);
        let from_a1 = (p.0 - 1.0).hypot(p.1);
        assert!((from_a1 - (6f64.sqrt() - 2f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!((from_a1 / 2f64.sqrt() - star_fraction()).abs() < 1e-12);

        let s = build_cuboctahedron(1.0).unwrap();
        let tol = Tolerances::default();
        let fr = acute_frame(&s, &tol).unwrap();
        let a = SurfacePoint::vertex(fr.corners[0]);
        let a1 = SurfacePoint::vertex(fr.cycle[0]);
        let b1 = SurfacePoint::vertex(fr.cycle[1]);
        let star = fr.stars[0];
        let one = |p: &SurfacePoint, q: &SurfacePoint| {
            shortest_geodesics(&s, p, q, 8, &tol).unwrap().remove(0)
        };
        assert!((one(&a, &star).length - (3f64.sqrt() - 1.0)).abs() < 1e-9);
        let at_a = |q: &SurfacePoint| direction_from(&s, &one(&a, q), &a, 1e-9).unwrap();
        assert!((angle_gap(&at_a(&a1), &at_a(&star)) - PI / 6.0).abs() < 1e-9);
        // Angle a a* b' in the flat chart at a*.
        let at_star = |q: &SurfacePoint| direction_from(&s, &one(&star, q), &star, 1e-9).unwrap();
        assert!((angle_gap(&at_star(&a), &at_star(&b1)) - 5.0 * PI / 12.0).abs() < 1e-9);
    }

    #[test]
    fn reference_wedge_bounds_the_angle_at_a_star() {
        let s = build_cuboctahedron(1.0).unwrap();
        let tol = Tolerances::default();
        let fr = acute_frame(&s, &tol).unwrap();
        let (a1, d1) = (fr.cycle[0], fr.cycle[3]);
        // α: corner of the square on d' a' on the side of a.
        let alpha = fr.regions[0]
            .iter()
            .copied()
            .find(|&v| s.edge_between(v, a1).is_some() && s.edge_between(v, d1).is_some())
            .unwrap();
        assert_ne!(alpha, fr.corners[3]);
        let alpha_star = point_on_diagonal(&s, a1, d1, star_fraction(), 1e-9).unwrap();
        let star = fr.stars[0];
        let one = |p: &SurfacePoint, q: &SurfacePoint| {
            shortest_geodesics(&s, p, q, 8, &tol).unwrap().remove(0)
        };
        let at = |q: &SurfacePoint| direction_from(&s, &one(&star, q), &star, 1e-9).unwrap();
        let a = SurfacePoint::vertex(fr.corners[0]);
        let wedge = angle_gap(&at(&alpha_star), &at(&a));
        assert!((wedge - FRAC_PI_2).abs() < 1e-9);
        let d_star = fr.stars[3];
        assert!(angle_gap(&at(&d_star), &at(&a)) < wedge);
    }
}
