use super::model::{GeodesicTriangulation, TriangulationError};
use crate::geodesic::{
    direction_from, interior_angle, segments_intersect, shortest_geodesics, GeodesicSegment,
    Intersection,
};
use crate::surface::PolyhedralSurface;
use crate::tolerance::Tolerances;
use serde::Serialize;
use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI, TAU};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CornerAngle {
    pub triangle: usize,
    pub vertex: usize,
    pub angle: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Acute,
    NonObtuse,
    Neither,
}

#[derive(Debug, Clone, Serialize)]
pub struct GaussBonnet {
    /// Angle sum minus π, per triangle.
    pub excess: Vec<f64>,
    /// Excess in units of π/3 (number of enclosed cone points).
    pub enclosed: Vec<i64>,
    pub total_excess: f64,
    /// Curvature carried by triangulation vertices that are cone points.
    pub vertex_curvature: f64,
    pub total: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub checks: Vec<CheckResult>,
    pub angles: Vec<CornerAngle>,
    pub classification: Option<Classification>,
    pub margin: Option<f64>,
    pub max_angle: Option<f64>,
    pub gauss_bonnet: Option<GaussBonnet>,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<CheckStatus> {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.status)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub const CHECK_NAMES: [&str; 6] = [
    "complex",
    "edges",
    "angles",
    "closure",
    "gauss_bonnet",
    "classification",
];

/// Combinatorial sanity: every edge in exactly two triangles, every vertex
/// link a single cycle, Euler characteristic 2.
pub fn check_complex(t: &GeodesicTriangulation) -> Vec<String> {
    let mut bad = Vec::new();
    let nv = t.vertices.len();
    let ne = t.edges.len();
    for (i, e) in t.edges.iter().enumerate() {
        if e.a >= nv || e.b >= nv || e.a == e.b {
            bad.push(format!("edge {i} has invalid endpoints {}-{}", e.a, e.b));
        }
    }
    for (i, tri) in t.triangles.iter().enumerate() {
        if tri.iter().any(|&e| e >= ne) {
            bad.push(format!("triangle {i} references a missing edge"));
        }
    }
    if !bad.is_empty() {
        return bad;
    }
    let mut uses = vec![0usize; ne];
    for (i, tri) in t.triangles.iter().enumerate() {
        let mut es = tri.to_vec();
        es.sort_unstable();
        es.dedup();
        if es.len() != 3 {
            bad.push(format!("triangle {i} repeats an edge"));
            continue;
        }
        for &e in tri {
            uses[e] += 1;
        }
        match t.triangle_vertices(i) {
            Ok(vs) => {
                // Three edges on three vertices form a triangle iff each vertex lies on two of them.
                for v in vs {
                    let k = tri
                        .iter()
                        .filter(|&&e| t.edges[e].a == v || t.edges[e].b == v)
                        .count();
                    if k != 2 {
                        bad.push(format!("triangle {i} is not a 3-cycle"));
                        break;
                    }
                }
            }
            Err(e) => bad.push(e.to_string()),
        }
    }
    for (e, &u) in uses.iter().enumerate() {
        if u != 2 {
            bad.push(format!("edge {e} lies in {u} triangles"));
        }
    }
    let mut seen = BTreeMap::new();
    for (i, e) in t.edges.iter().enumerate() {
        let key = (e.a.min(e.b), e.a.max(e.b), e.witness_face);
        if let Some(j) = seen.insert(key, i) {
            bad.push(format!("edges {j} and {i} coincide"));
        }
    }
    if !bad.is_empty() {
        return bad;
    }
    // Vertex links: the triangles at v, glued along shared edges at v, form one cycle.
    for v in 0..nv {
        let at_v: Vec<usize> = (0..t.triangles.len())
            .filter(|&i| {
                t.triangle_vertices(i)
                    .map(|vs| vs.contains(&v))
                    .unwrap_or(false)
            })
            .collect();
        if at_v.is_empty() {
            bad.push(format!("vertex {v} is in no triangle"));
            continue;
        }
        let mut visited = vec![false; at_v.len()];
        let mut stack = vec![0];
        visited[0] = true;
        while let Some(k) = stack.pop() {
            for (m, &other) in at_v.iter().enumerate() {
                if !visited[m] {
                    let shares = t.triangles[at_v[k]].iter().any(|&e| {
                        (t.edges[e].a == v || t.edges[e].b == v) && t.triangles[other].contains(&e)
                    });
                    if shares {
                        visited[m] = true;
                        stack.push(m);
                    }
                }
            }
        }
        if visited.iter().any(|&x| !x) {
            bad.push(format!("link of vertex {v} is disconnected"));
        }
    }
    let chi = nv as i64 - ne as i64 + t.triangles.len() as i64;
    if chi != 2 {
        bad.push(format!("V - E + F = {chi}, expected 2"));
    }
    bad
}

/// Pairwise intersections: edges may only meet at a common endpoint.
pub fn check_edges(
    surface: &PolyhedralSurface,
    t: &GeodesicTriangulation,
    segments: &[GeodesicSegment],
    tol: &Tolerances,
) -> Vec<String> {
    let mut bad = Vec::new();
    for i in 0..segments.len() {
        for j in i + 1..segments.len() {
            let (ei, ej) = (&t.edges[i], &t.edges[j]);
            let shares = ei.a == ej.a || ei.a == ej.b || ei.b == ej.a || ei.b == ej.b;
            let got = segments_intersect(surface, &segments[i], &segments[j], tol.eps_len);
            let ok = match got {
                Intersection::Disjoint => !shares,
                Intersection::SharedEndpoint => shares,
                _ => false,
            };
            if !ok {
                bad.push(format!("edges {i} and {j}: {got:?}"));
            }
        }
    }
    bad
}

/// Corner angles of every triangle, ordered by triangle then vertex id.
///
/// The wedge between the two edges at a corner is chosen by a witness
/// direction: the start of a shortest geodesic from the corner to the arc
/// length midpoint of the opposite edge.
pub fn corner_angles(
    surface: &PolyhedralSurface,
    t: &GeodesicTriangulation,
    segments: &[GeodesicSegment],
    max_faces: usize,
    tol: &Tolerances,
) -> Result<Vec<CornerAngle>, TriangulationError> {
    let mut out = Vec::with_capacity(3 * t.triangles.len());
    for (ti, tri) in t.triangles.iter().enumerate() {
        let vs = t.triangle_vertices(ti)?;
        for v in vs {
            let err = |source| TriangulationError::Angle {
                triangle: ti,
                vertex: v,
                source,
            };
            let p = t.vertices[v];
            let incident: Vec<usize> = tri
                .iter()
                .copied()
                .filter(|&e| t.edges[e].a == v || t.edges[e].b == v)
                .collect();
            let opposite = tri
                .iter()
                .copied()
                .find(|e| !incident.contains(e))
                .expect("3-cycle");
            let d1 =
                direction_from(surface, &segments[incident[0]], &p, tol.eps_len).map_err(err)?;
            let d2 =
                direction_from(surface, &segments[incident[1]], &p, tol.eps_len).map_err(err)?;
            let mid = segments[opposite].point_at(surface, 0.5, tol.eps_len);
            let towards = shortest_geodesics(surface, &p, &mid, max_faces, tol).map_err(err)?;
            // Every point of this geodesic near p, such as the one at parameter
            // 0.01, is seen from p in the same direction.
            let w = direction_from(surface, &towards[0], &p, tol.eps_len).map_err(err)?;
            let angle =
                interior_angle(surface, &d1, &d2, &w, tol.eps_len, tol.eps_ang).map_err(err)?;
            out.push(CornerAngle {
                triangle: ti,
                vertex: v,
                angle,
            });
        }
    }
    Ok(out)
}

pub fn verify(
    surface: &PolyhedralSurface,
    t: &GeodesicTriangulation,
    max_faces: usize,
    tol: &Tolerances,
) -> VerificationReport {
    let mut report = VerificationReport {
        valid: false,
        checks: Vec::new(),
        angles: Vec::new(),
        classification: None,
        margin: None,
        max_angle: None,
        gauss_bonnet: None,
    };
    let push = |report: &mut VerificationReport, name: &'static str, detail: Vec<String>| {
        let status = if detail.is_empty() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        report.checks.push(CheckResult {
            name,
            status,
            detail,
        });
        status == CheckStatus::Pass
    };
    let skip_rest = |report: &mut VerificationReport| {
        for name in CHECK_NAMES.iter().skip(report.checks.len()) {
            report.checks.push(CheckResult {
                name,
                status: CheckStatus::Skipped,
                detail: Vec::new(),
            });
        }
    };

    let bad_points: Vec<String> = t
        .vertices
        .iter()
        .enumerate()
        .filter(|(_, p)| !surface.is_valid_point(p))
        .map(|(i, p)| format!("vertex {i} ({p}) is not on the surface"))
        .collect();
    let mut complex = bad_points;
    if complex.is_empty() {
        complex = check_complex(t);
    }
    if !push(&mut report, "complex", complex) {
        skip_rest(&mut report);
        return report;
    }

    let segments = match t.realize(surface, max_faces, tol) {
        Ok(s) => s,
        Err(e) => {
            push(&mut report, "edges", vec![e.to_string()]);
            skip_rest(&mut report);
            return report;
        }
    };
    let edges_ok = push(
        &mut report,
        "edges",
        check_edges(surface, t, &segments, tol),
    );

    let angles = match corner_angles(surface, t, &segments, max_faces, tol) {
        Ok(a) => a,
        Err(e) => {
            push(&mut report, "angles", vec![e.to_string()]);
            skip_rest(&mut report);
            return report;
        }
    };
    push(&mut report, "angles", Vec::new());
    report.angles = angles.clone();

    // Angle closure at each triangulation vertex.
    let mut sums = vec![0.0; t.vertices.len()];
    for a in &angles {
        sums[a.vertex] += a.angle;
    }
    let closure: Vec<String> = sums
        .iter()
        .enumerate()
        .filter_map(|(v, &s)| {
            let total = surface.total_angle(&t.vertices[v]);
            ((s - total).abs() > 1e-9)
                .then(|| format!("vertex {v}: angles sum to {s}, total angle {total}"))
        })
        .collect();
    let closure_ok = push(&mut report, "closure", closure);

    // Gauss-Bonnet bookkeeping.
    let mut excess = vec![-PI; t.triangles.len()];
    for a in &angles {
        excess[a.triangle] += a.angle;
    }
    let mut gb_bad = Vec::new();
    let enclosed: Vec<i64> = excess
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let k = (x / FRAC_PI_3).round();
            if (x - k * FRAC_PI_3).abs() > 1e-9 || k < 0.0 {
                gb_bad.push(format!(
                    "triangle {i}: excess {x} is not a non-negative multiple of pi/3"
                ));
            }
            k as i64
        })
        .collect();
    let total_excess: f64 = excess.iter().sum();
    let vertex_curvature: f64 = t
        .vertices
        .iter()
        .filter(|p| p.is_vertex())
        .map(|p| TAU - surface.total_angle(p))
        .sum();
    let total = total_excess + vertex_curvature;
    if (total - 2.0 * TAU).abs() > 1e-8 {
        gb_bad.push(format!("total curvature {total}, expected 4pi"));
    }
    let gb_ok = push(&mut report, "gauss_bonnet", gb_bad);
    report.gauss_bonnet = Some(GaussBonnet {
        excess,
        enclosed,
        total_excess,
        vertex_curvature,
        total,
    });

    let max_angle = angles
        .iter()
        .map(|a| a.angle)
        .fold(f64::NEG_INFINITY, f64::max);
    let margin = FRAC_PI_2 - max_angle;
    let class = if margin > tol.eps_ang {
        Classification::Acute
    } else if margin >= -tol.eps_ang {
        Classification::NonObtuse
    } else {
        Classification::Neither
    };
    report.max_angle = Some(max_angle);
    report.margin = Some(margin);
    report.classification = Some(class);
    push(&mut report, "classification", Vec::new());
    report.valid = edges_ok && closure_ok && gb_ok;
    report
}
