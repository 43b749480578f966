use super::apex::check_apex_infeasible;
use super::atlas::GeodesicAtlas;
use super::c5::{adjacency_scan, enumerate_c5, C5Filters};
use super::combinatorial::{enumerate_sphere_triangulations, min_degree_bound};
use super::{Certificate, Params, Verdict};
use crate::surface::PolyhedralSurface;
use crate::tolerance::Tolerances;
use serde_json::json;
use std::f64::consts::{FRAC_PI_2, TAU};

/// No acute geodesic triangulation with ten triangles.
pub fn check_no_acute_10(
    surface: &PolyhedralSurface,
    max_faces: usize,
    tol: &Tolerances,
) -> Certificate {
    let params = Params::new(tol, max_faces);
    let claim = "acute10".to_string();

    // (i) the pentagonal bipyramid is the only candidate complex.
    let types = enumerate_sphere_triangulations(10).expect("supported size");
    let candidates: Vec<_> = types.iter().filter(|t| t.min_degree() >= 4).collect();
    let step1 =
        candidates.len() == 1 && candidates[0].degree_sequence() == vec![5, 5, 4, 4, 4, 4, 4];

    // (ii) its five degree-4 vertices sit on surface vertices.
    let flat_min = min_degree_bound(TAU, FRAC_PI_2, true, tol.eps_ang);
    let four_acute_cover_flat = 4.0 * FRAC_PI_2 > TAU + tol.eps_ang;
    let step2 = flat_min > 4 && !four_acute_cover_flat;

    // (iii) the 5-cycle through them.
    let (subsets, least_adjacent) = adjacency_scan(surface);
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
    let main = enumerate_c5(surface, &atlas, C5Filters::default(), tol);
    let variants: Vec<_> = [(false, true), (true, false), (false, false)]
        .into_iter()
        .map(|(pruning, strict)| {
            let e = enumerate_c5(surface, &atlas, C5Filters { pruning, strict }, tol);
            json!({ "pruning": pruning, "strict": strict, "cycles": e.configurations.len(), "orbits": e.orbits.len() })
        })
        .collect();
    let step3 =
        atlas.is_quantized() && subsets == 792 && least_adjacent >= 2 && main.orbits.len() == 1;

    // (iv) no apex on some side of each surviving cycle.
    let apex: Vec<Certificate> = main
        .orbits
        .iter()
        .map(|orbit| check_apex_infeasible(surface, &main.configurations[orbit[0]], max_faces, tol))
        .collect();
    let step4 = Verdict::all(apex.iter().map(|c| c.verdict));

    let verdict = Verdict::all([Verdict::from_bool(step1 && step2 && step3), step4]);
    Certificate {
        claim,
        verdict,
        evidence: json!({
            "bipyramid_unique": {
                "types_f10": types.len(),
                "min_degree_4": candidates.len(),
                "degrees": candidates.first().map(|t| t.degree_sequence()),
                "pass": step1,
            },
            "cycle_on_surface_vertices": {
                "flat_point_min_degree_strict": flat_min,
                "four_acute_angles_cover_2pi": four_acute_cover_flat,
                "pass": step2,
            },
            "cycle_enumeration": {
                "five_subsets": subsets,
                "least_adjacent_pairs": least_adjacent,
                "cycles": main.configurations.len(),
                "orbits": main.orbits.len(),
                "orbit_sizes": main.orbits.iter().map(|o| o.len()).collect::<Vec<_>>(),
                "without_filters": variants,
                "pass": step3,
            },
            "apex": apex,
        }),
        params,
    }
}
