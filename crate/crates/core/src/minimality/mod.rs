//! Certificates for the lower bounds: parity of the face count, the
//! non-obtuse bound below eight triangles, and the absence of acute
//! triangulations with eight or ten triangles.

mod acute10;
mod acute8;
mod apex;
mod atlas;
mod c5;
mod combinatorial;
mod report;

pub use acute10::check_no_acute_10;
pub use acute8::{check_no_acute_8, ApexCandidate, BaseClass};
pub use apex::{check_apex_infeasible, ApexSide, FeasiblePolygon};
pub use atlas::{GeodesicAtlas, Side, VertexGeodesic};
pub use c5::{
    adjacency_scan, cycle_key, enumerate_c5, transformed_key, C5Configuration, C5Enumeration,
    C5Filters,
};
pub use combinatorial::{
    enumerate_sphere_triangulations, min_degree_bound, tetrahedron, CombinatorialTriangulation,
    EnumerationError,
};
pub use report::{check_nonobtuse_lower_bound, check_size_parity, main_theorem_report};

use crate::tolerance::Tolerances;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl Verdict {
    /// Conjunction: any failure fails, otherwise any doubt is inconclusive.
    pub fn all(items: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut out = Verdict::Holds;
        for v in items {
            out = match (out, v) {
                (Verdict::Fails, _) | (_, Verdict::Fails) => Verdict::Fails,
                (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
                _ => Verdict::Holds,
            };
        }
        out
    }

    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Params {
    pub eps_len: f64,
    pub eps_ang: f64,
    pub snap: f64,
    pub max_faces: usize,
}

impl Params {
    pub fn new(tol: &Tolerances, max_faces: usize) -> Self {
        Self {
            eps_len: tol.eps_len,
            eps_ang: tol.eps_ang,
            snap: tol.snap,
            max_faces,
        }
    }
}

/// Evidence bundle for one claim. Evidence objects have sorted keys, so the
/// serialized form is byte-for-byte reproducible.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub claim: String,
    pub verdict: Verdict,
    pub evidence: Value,
    pub params: Params,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::build_cuboctahedron;

    #[test]
    fn parity() {
        let tol = Tolerances::default();
        for (f, odd) in [(9, true), (11, true), (12, false)] {
            let c = check_size_parity(f, &tol);
            assert!(c.holds());
            assert_eq!(c.evidence["excluded"], odd);
        }
        assert_eq!(check_size_parity(0, &tol).verdict, Verdict::Fails);
    }

    #[test]
    fn nonobtuse_lower_bound_holds() {
        let s = build_cuboctahedron(1.0).unwrap();
        let c = check_nonobtuse_lower_bound(&s, &Tolerances::default());
        assert!(c.holds(), "{}", c.to_json());
        let sizes = c.evidence["sizes"].as_array().unwrap();
        assert_eq!(sizes[3]["types"], 1);
        assert_eq!(
            sizes[3]["degree_sequences"][0],
            serde_json::json!([3, 3, 3, 3])
        );
        assert_eq!(sizes[5]["types"], 1);
        assert_eq!(sizes[5]["min_degrees"][0], 3);
    }

    #[test]
    fn acute8_witnesses() {
        let s = build_cuboctahedron(1.0).unwrap();
        let c = check_no_acute_8(&s, 8, &Tolerances::default());
        assert!(c.holds());
        let search = &c.evidence["search"];
        assert_eq!(search["all_angles_5pi12"], 0);
        assert_eq!(search["ordered_pairs"], 132);
        let pi = std::f64::consts::PI;
        let a1 = search["edge_base_witness"]["apex_angle"].as_f64().unwrap();
        let a3 = search["antipodal_base_witness"]["apex_angle"]
            .as_f64()
            .unwrap();
        assert!((a1 - pi / 6.0).abs() < 1e-9);
        assert!((a3 - 5.0 * pi / 6.0).abs() < 1e-9);
    }

    #[test]
    fn apex_region_replay() {
        let s = build_cuboctahedron(1.0).unwrap();
        let tol = Tolerances::default();
        let atlas = GeodesicAtlas::build(&s, 8, &tol).unwrap();
        let e = enumerate_c5(&s, &atlas, C5Filters::default(), &tol);
        let c5 = &e.configurations[e.orbits[0][0]];
        let cert = check_apex_infeasible(&s, c5, 8, &tol);
        assert!(cert.holds());
        let sides: Vec<ApexSide> = serde_json::from_value(cert.evidence["sides"].clone()).unwrap();
        // The side holding three surface vertices: they span a triangle
        // face, and every feasible apex lies in it, away from its corners.
        let small = sides
            .iter()
            .find(|sd| sd.region_vertices.len() == 3)
            .unwrap();
        assert_eq!(small.verdict, Verdict::Holds);
        let abc = s
            .faces()
            .iter()
            .find(|f| small.region_vertices.iter().all(|v| f.vertices.contains(v)) && f.len() == 3)
            .unwrap();
        assert_eq!(small.feasible_faces, vec![abc.id]);
        for p in &small.feasible {
            for x in &p.polygon {
                assert!(abc
                    .corners
                    .iter()
                    .all(|c| (c.x - x[0]).hypot(c.y - x[1]) > 1e-3));
            }
            assert!(p.margin > tol.eps_len);
        }
        // Neighbouring faces of the region carry no feasible apex.
        for f in &small.region_faces {
            if *f != abc.id {
                assert!(!small.feasible_faces.contains(f));
            }
        }
        assert!(sides
            .iter()
            .all(|sd| sd.separated && !sd.depth_limited && sd.vertex_apexes.is_empty()));
    }

    #[test]
    fn acute10_holds() {
        let s = build_cuboctahedron(1.0).unwrap();
        let c = check_no_acute_10(&s, 8, &Tolerances::default());
        assert!(c.holds(), "{}", c.evidence["cycle_enumeration"]);
        assert_eq!(c.evidence["cycle_enumeration"]["orbits"], 1);
        assert_eq!(
            c.evidence["bipyramid_unique"]["degrees"],
            serde_json::json!([5, 5, 4, 4, 4, 4, 4])
        );
    }

    #[test]
    fn verdict_conjunction() {
        use Verdict::*;
        assert_eq!(Verdict::all([Holds, Holds]), Holds);
        assert_eq!(Verdict::all([Holds, Inconclusive]), Inconclusive);
        assert_eq!(Verdict::all([Inconclusive, Fails, Holds]), Fails);
        assert_eq!(Verdict::all([]), Holds);
    }
}
