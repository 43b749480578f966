use super::acute10::check_no_acute_10;
use super::acute8::check_no_acute_8;
use super::combinatorial::{enumerate_sphere_triangulations, min_degree_bound};
use super::{Certificate, Params, Verdict};
use crate::surface::PolyhedralSurface;
use crate::tolerance::Tolerances;
use crate::triangulation::{
    construct_acute12, construct_nonobtuse8, verify, Classification, GeodesicTriangulation,
};
use serde_json::json;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

/// A closed triangulated surface has 3F/2 edges, so F must be even.
pub fn check_size_parity(faces: usize, tol: &Tolerances) -> Certificate {
    let odd = faces % 2 == 1;
    Certificate {
        claim: "parity-odd".to_string(),
        verdict: Verdict::from_bool(faces >= 1),
        evidence: json!({
            "faces": faces,
            "three_f": 3 * faces,
            "odd": odd,
            "excluded": odd,
        }),
        params: Params::new(tol, 0),
    }
}

/// No non-obtuse triangulation with fewer than eight triangles.
pub fn check_nonobtuse_lower_bound(surface: &PolyhedralSurface, tol: &Tolerances) -> Certificate {
    let cone = surface.cone_angle(0);
    let at_vertex = min_degree_bound(cone, FRAC_PI_2, false, tol.eps_ang);
    let at_flat = min_degree_bound(TAU, FRAC_PI_2, false, tol.eps_ang);
    let bound_ok = at_vertex == 4 && at_flat == 4 && (cone - 5.0 * PI / 3.0).abs() <= tol.eps_ang;

    let mut sizes = Vec::new();
    let mut all_ok = bound_ok;
    for f in 1..8usize {
        let entry = if f % 2 == 1 {
            json!({ "faces": f, "excluded_by": "parity" })
        } else if f < 4 {
            // f/2 + 2 vertices carry fewer than f distinct triangles.
            let v = f / 2 + 2;
            let triples = v * (v - 1) * (v - 2) / 6;
            all_ok &= triples < f;
            json!({ "faces": f, "excluded_by": "too_few_vertices", "vertices": v, "triples": triples })
        } else {
            let types = enumerate_sphere_triangulations(f).expect("supported size");
            let min_degrees: Vec<usize> = types.iter().map(|t| t.min_degree()).collect();
            all_ok &= min_degrees.iter().all(|&d| d < at_vertex.min(at_flat));
            json!({
                "faces": f,
                "excluded_by": "low_degree",
                "types": types.len(),
                "degree_sequences": types.iter().map(|t| t.degree_sequence()).collect::<Vec<_>>(),
                "min_degrees": min_degrees,
            })
        };
        sizes.push(entry);
    }
    Certificate {
        claim: "thm1-lb".to_string(),
        verdict: Verdict::from_bool(all_ok),
        evidence: json!({
            "min_degree_at_vertex": at_vertex,
            "min_degree_at_flat_point": at_flat,
            "sizes": sizes,
        }),
        params: Params::new(tol, 0),
    }
}

fn construction(
    claim: &str,
    surface: &PolyhedralSurface,
    built: Result<GeodesicTriangulation, crate::triangulation::TriangulationError>,
    want: Classification,
    max_faces: usize,
    tol: &Tolerances,
) -> Certificate {
    let params = Params::new(tol, max_faces);
    let t = match built {
        Ok(t) => t,
        Err(e) => {
            return Certificate {
                claim: claim.to_string(),
                verdict: Verdict::Fails,
                evidence: json!({ "error": e.to_string() }),
                params,
            }
        }
    };
    let r = verify(surface, &t, max_faces, tol);
    let class_ok = match want {
        Classification::Acute => r.classification == Some(Classification::Acute),
        _ => matches!(
            r.classification,
            Some(Classification::Acute | Classification::NonObtuse)
        ),
    };
    Certificate {
        claim: claim.to_string(),
        verdict: Verdict::from_bool(r.valid && class_ok),
        evidence: json!({
            "triangles": t.triangles.len(),
            "vertices": t.vertices.len(),
            "edges": t.edges.len(),
            "valid": r.valid,
            "classification": r.classification,
            "margin": r.margin,
            "max_angle": r.max_angle,
            "checks": r.checks,
        }),
        params,
    }
}

/// Minimum sizes of acute and non-obtuse triangulations, with every
/// supporting certificate.
pub fn main_theorem_report(
    surface: &PolyhedralSurface,
    max_faces: usize,
    tol: &Tolerances,
) -> Certificate {
    let parity9 = check_size_parity(9, tol);
    let parity11 = check_size_parity(11, tol);
    let acute8 = check_no_acute_8(surface, max_faces, tol);
    let acute10 = check_no_acute_10(surface, max_faces, tol);
    let acute12 = construction(
        "acute12",
        surface,
        construct_acute12(surface, tol),
        Classification::Acute,
        max_faces,
        tol,
    );
    let mut nonobtuse8 = construction(
        "nonobtuse8",
        surface,
        construct_nonobtuse8(surface, tol),
        Classification::NonObtuse,
        max_faces,
        tol,
    );
    let lower = check_nonobtuse_lower_bound(surface, tol);
    nonobtuse8.verdict = Verdict::all([nonobtuse8.verdict, lower.verdict]);
    nonobtuse8.evidence["lower_bound"] = serde_json::to_value(&lower).expect("serializes");

    let subs = [parity9, parity11, acute8, acute10, acute12, nonobtuse8];
    let verdict = Verdict::all(subs.iter().map(|c| c.verdict));
    let holds = verdict == Verdict::Holds;
    Certificate {
        claim: "main".to_string(),
        verdict,
        evidence: json!({
            "acute_minimum": holds.then_some(12),
            "nonobtuse_minimum": holds.then_some(8),
            "sub_certificate_count": subs.len(),
            "sub_certificates": subs,
        }),
        params: Params::new(tol, max_faces),
    }
}
