use super::atlas::{GeodesicAtlas, Side};
use super::combinatorial::{enumerate_sphere_triangulations, min_degree_bound};
use super::{Certificate, Params, Verdict};
use crate::planar::wrap_angle;
use crate::surface::{FaceShape, PolyhedralSurface, VertexId};
use crate::tolerance::{snap_to_grid, Tolerances, ANGLE_QUANTUM};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, TAU};

/// How the base geodesic sits on the surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseClass {
    /// A skeleton edge.
    Edge,
    /// Diagonal of a square face.
    Diagonal,
    /// Distance two, bending over a triangle-square pair.
    Bent,
    /// Antipodal, through triangle, square, triangle.
    AntipodalTst,
    /// Antipodal, any other strip.
    Antipodal,
}

impl BaseClass {
    fn name(self) -> &'static str {
        match self {
            BaseClass::Edge => "edge",
            BaseClass::Diagonal => "diagonal",
            BaseClass::Bent => "bent",
            BaseClass::AntipodalTst => "antipodal-tst",
            BaseClass::Antipodal => "antipodal",
        }
    }
}

/// A base geodesic v1 v2 with rays at 5π/12 on one side that meet at a
/// common surface vertex v3.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ApexCandidate {
    pub base: [VertexId; 2],
    pub base_faces: Vec<usize>,
    pub class: BaseClass,
    pub side: Side,
    pub apex: VertexId,
    /// Apex angle in multiples of π/12.
    pub apex_slots: i64,
    pub apex_angle: f64,
}

/// Rays at `base_slots`·π/12 from both ends of every base geodesic, on both
/// sides; returns the pairs that close at a third surface vertex.
pub fn apex_candidates(
    surface: &PolyhedralSurface,
    atlas: &GeodesicAtlas,
    base_slots: i64,
) -> Vec<ApexCandidate> {
    let mut out = Vec::new();
    for g in &atlas.geodesics {
        let class = classify(g.skeleton_distance, g.square_diagonal, &g.shapes);
        for side in Side::BOTH {
            let s = side.sign();
            let (Some(g13), Some(g23)) = (
                atlas.at(g.from, g.slot_from + s * base_slots),
                atlas.at(g.to, g.slot_to - s * base_slots),
            ) else {
                continue;
            };
            let v3 = g13.to;
            if v3 != g23.to || v3 == g.from || v3 == g.to {
                continue;
            }
            let m = atlas.slots[v3];
            let (k, raw) = match side {
                Side::Left => (g23.slot_to - g13.slot_to, g23.phi_to - g13.phi_to),
                Side::Right => (g13.slot_to - g23.slot_to, g13.phi_to - g23.phi_to),
            };
            out.push(ApexCandidate {
                base: [g.from, g.to],
                base_faces: g.segment.faces().to_vec(),
                class,
                side,
                apex: v3,
                apex_slots: k.rem_euclid(m),
                apex_angle: wrap_angle(raw, surface.cone_angle(v3)),
            });
        }
    }
    out
}

fn classify(d: usize, diagonal: bool, shapes: &[FaceShape]) -> BaseClass {
    use FaceShape::{Square, Triangle};
    match d {
        1 => BaseClass::Edge,
        2 if diagonal => BaseClass::Diagonal,
        2 => BaseClass::Bent,
        _ if shapes == [Triangle, Square, Triangle] => BaseClass::AntipodalTst,
        _ => BaseClass::Antipodal,
    }
}

/// Tuples of `n` corner angles, each 1..=cap quanta, summing to `total` quanta.
fn corner_tuples(n: usize, cap: i64, total: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for k in 1..=cap.min(total) {
        for mut rest in corner_tuples(n - 1, cap, total - k) {
            rest.insert(0, k);
            out.push(rest);
        }
    }
    out
}

/// Largest whole number of quanta strictly below π/2.
fn acute_cap() -> i64 {
    (FRAC_PI_2 / ANGLE_QUANTUM).round() as i64 - 1
}

/// No acute geodesic triangulation with eight triangles.
pub fn check_no_acute_8(
    surface: &PolyhedralSurface,
    max_faces: usize,
    tol: &Tolerances,
) -> Certificate {
    let params = Params::new(tol, max_faces);
    let claim = "acute8".to_string();

    // (i) the octahedron is the only candidate complex.
    let types = enumerate_sphere_triangulations(8).expect("supported size");
    let candidates: Vec<_> = types.iter().filter(|t| t.min_degree() >= 4).collect();
    let step1 = candidates.len() == 1 && candidates[0].degree_sequence() == vec![4; 6];

    // (ii) a degree-4 vertex cannot be a flat point.
    let flat_min = min_degree_bound(TAU, FRAC_PI_2, true, tol.eps_ang);
    let step2 = flat_min > 4;

    // (iii) four acute multiples of π/12 filling the cone angle.
    let cone = (0..surface.vertex_count())
        .map(|v| snap_to_grid(surface.cone_angle(v), tol.snap))
        .collect::<Vec<_>>();
    let cone_slots = cone.first().copied().flatten();
    let uniform = cone.iter().all(|&c| c == cone_slots);
    let tuples = cone_slots
        .map(|m| corner_tuples(4, acute_cap(), m))
        .unwrap_or_default();
    let step3 = uniform && tuples.len() == 1 && tuples[0].iter().all(|&k| k == 5);

    // (iv) geometric search.
    let atlas = match GeodesicAtlas::build(surface, max_faces, tol) {
        Ok(a) => a,
        Err(e) => {
            return Certificate {
                claim,
                verdict: Verdict::Inconclusive,
                evidence: json!({ "error": e.to_string() }),
                params,
            }
        }
    };
    let quantized = atlas.is_quantized();
    let found = apex_candidates(surface, &atlas, 5);
    let all_equal: Vec<&ApexCandidate> = found.iter().filter(|c| c.apex_slots == 5).collect();
    let step4 = quantized && all_equal.is_empty();

    let mut by_class: BTreeMap<&str, Value> = BTreeMap::new();
    for class in [
        BaseClass::Edge,
        BaseClass::Diagonal,
        BaseClass::Bent,
        BaseClass::AntipodalTst,
        BaseClass::Antipodal,
    ] {
        let bases = atlas
            .geodesics
            .iter()
            .filter(|g| classify(g.skeleton_distance, g.square_diagonal, &g.shapes) == class)
            .count();
        let mut hist: BTreeMap<String, usize> = BTreeMap::new();
        for c in found.iter().filter(|c| c.class == class) {
            *hist.entry(c.apex_slots.to_string()).or_insert(0) += 1;
        }
        let closing = found.iter().filter(|c| c.class == class).count();
        by_class.insert(
            class.name(),
            json!({ "base_geodesics": bases, "sides_tested": 2 * bases, "sides_closing": closing, "apex_slots": hist }),
        );
    }
    let witness = |class: BaseClass, slots: i64| {
        found
            .iter()
            .find(|c| c.class == class && c.apex_slots == slots)
            .map(|c| serde_json::to_value(c).expect("serializes"))
    };

    let verdict = Verdict::from_bool(step1 && step2 && step3 && step4);
    Certificate {
        claim,
        verdict,
        evidence: json!({
            "octahedron_unique": {
                "types_f8": types.len(),
                "min_degree_4": candidates.len(),
                "degrees": candidates.first().map(|t| t.degree_sequence()),
                "pass": step1,
            },
            "vertices_on_surface_vertices": {
                "flat_point_min_degree_strict": flat_min,
                "pass": step2,
            },
            "isogonal_corners": {
                "cone_slots": cone_slots,
                "acute_cap_slots": acute_cap(),
                "tuples": tuples,
                "pass": step3,
            },
            "search": {
                "ordered_pairs": atlas.geodesics.iter().map(|g| (g.from, g.to)).collect::<std::collections::BTreeSet<_>>().len(),
                "base_geodesics": atlas.geodesics.len(),
                "quantized": quantized,
                "by_base": by_class,
                "all_angles_5pi12": all_equal.len(),
                "edge_base_witness": witness(BaseClass::Edge, 2),
                "antipodal_base_witness": witness(BaseClass::AntipodalTst, 10),
                "pass": step4,
            },
        }),
        params,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::build_cuboctahedron;

    #[test]
    fn only_isogonal_tuple() {
        assert_eq!(corner_tuples(4, 5, 20), vec![vec![5, 5, 5, 5]]);
        assert_eq!(corner_tuples(2, 3, 4).len(), 3);
        assert_eq!(acute_cap(), 5);
    }

    #[test]
    fn edge_base_closes_at_pi_over_6() {
        let s = build_cuboctahedron(1.0).unwrap();
        let tol = Tolerances::default();
        let atlas = GeodesicAtlas::build(&s, 8, &tol).unwrap();
        let found = apex_candidates(&s, &atlas, 5);
        let edge: Vec<_> = found
            .iter()
            .filter(|c| c.class == BaseClass::Edge)
            .collect();
        assert!(!edge.is_empty());
        for c in &edge {
            assert_eq!(c.apex_slots, 2);
            assert!((c.apex_angle - std::f64::consts::PI / 6.0).abs() < 1e-9);
        }
        assert!(found.iter().all(|c| c.apex_slots != 5));
    }
}
