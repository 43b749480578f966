//! One line per acceptance criterion; exits non-zero if any fails.

use cuboct::geodesic::{
    angle_gap, direction_from, shortest_geodesics, vertex_fan, GeodesicSegment, DEFAULT_MAX_FACES,
};
use cuboct::minimality::{
    adjacency_scan, check_no_acute_10, check_no_acute_8, check_nonobtuse_lower_bound,
    check_size_parity, enumerate_sphere_triangulations, main_theorem_report, min_degree_bound,
    Verdict,
};
use cuboct::surface::{build_cuboctahedron, PolyhedralSurface, SurfacePoint};
use cuboct::triangulation::{
    acute_frame, construct_acute12, construct_nonobtuse8, verify, CheckStatus, Classification,
    VerificationReport,
};
use cuboct::Tolerances;
use serde_json::Value;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn(&Ctx) -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

struct Ctx {
    s: PolyhedralSurface,
    tol: Tolerances,
}

impl Ctx {
    fn geodesics(&self, a: usize, b: usize) -> Vec<GeodesicSegment> {
        shortest_geodesics(
            &self.s,
            &SurfacePoint::vertex(a),
            &SurfacePoint::vertex(b),
            DEFAULT_MAX_FACES,
            &self.tol,
        )
        .expect("vertex pair has a shortest path")
    }
}

fn close(a: f64, b: f64, eps: f64) -> bool {
    (a - b).abs() <= eps
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

fn report_ok(r: &VerificationReport) -> Outcome {
    ensure!(r.valid, "verifier rejects: {:?}", r.checks);
    for c in &r.checks {
        ensure!(
            c.status == CheckStatus::Pass,
            "check {} is {:?}",
            c.name,
            c.status
        );
    }
    Ok(())
}

fn cone_angles(c: &Ctx) -> Outcome {
    for v in 0..12 {
        let a = c.s.cone_angle(v);
        ensure!(close(a, 5.0 * PI / 3.0, 1e-12), "vertex {v}: {a}");
    }
    Ok(())
}

fn fans(c: &Ctx) -> Outcome {
    for v in 0..12 {
        let fan = vertex_fan(&c.s, v, DEFAULT_MAX_FACES, &c.tol).map_err(|e| e.to_string())?;
        ensure!(fan.len() == 20, "vertex {v}: {} rays", fan.len());
        for i in 0..20 {
            let next = if i == 19 {
                fan[0].phi + c.s.cone_angle(v)
            } else {
                fan[i + 1].phi
            };
            ensure!(
                close(next - fan[i].phi, PI / 12.0, 1e-9),
                "vertex {v}: gap {i}"
            );
        }
        let mut mult = vec![0usize; 12];
        for e in &fan {
            mult[e.target] += 1;
        }
        mult.remove(v);
        mult.sort_unstable();
        ensure!(
            mult == [1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 6],
            "vertex {v}: multiplicities {mult:?}"
        );
    }
    Ok(())
}

fn nonobtuse8(c: &Ctx) -> Outcome {
    let t = construct_nonobtuse8(&c.s, &c.tol).map_err(|e| e.to_string())?;
    let r = verify(&c.s, &t, DEFAULT_MAX_FACES, &c.tol);
    report_ok(&r)?;
    ensure!(t.triangles.len() == 8, "{} triangles", t.triangles.len());
    for tri in 0..8 {
        let a = sorted(
            r.angles
                .iter()
                .filter(|x| x.triangle == tri)
                .map(|x| x.angle)
                .collect(),
        );
        let want = [5.0 * PI / 12.0, 5.0 * PI / 12.0, FRAC_PI_2];
        ensure!(
            a.len() == 3 && a.iter().zip(want).all(|(x, y)| close(*x, y, 1e-9)),
            "triangle {tri}: {a:?}"
        );
    }
    let seg = t
        .realize(&c.s, DEFAULT_MAX_FACES, &c.tol)
        .map_err(|e| e.to_string())?;
    let lens: Vec<Vec<f64>> = t
        .triangles
        .iter()
        .map(|tri| sorted(tri.iter().map(|&e| seg[e].length).collect()))
        .collect();
    for l in &lens {
        ensure!(
            l.iter().zip(&lens[0]).all(|(x, y)| close(*x, *y, 1e-9)),
            "not congruent: {l:?}"
        );
    }
    ensure!(
        r.classification == Some(Classification::NonObtuse),
        "{:?}",
        r.classification
    );
    ensure!(
        close(r.margin.unwrap_or(f64::NAN), 0.0, 1e-9),
        "margin {:?}",
        r.margin
    );
    Ok(())
}

/// Regression floor on the acute margin, frozen after the first run (measured 0.0192 rad).
const ACUTE_MARGIN_FLOOR: f64 = 1e-3;

fn acute12(c: &Ctx) -> Outcome {
    let t = construct_acute12(&c.s, &c.tol).map_err(|e| e.to_string())?;
    let r = verify(&c.s, &t, DEFAULT_MAX_FACES, &c.tol);
    report_ok(&r)?;
    ensure!(
        t.triangles.len() == 12 && r.angles.len() == 36,
        "{} angles",
        r.angles.len()
    );
    ensure!(
        r.angles.iter().all(|x| x.angle < FRAC_PI_2),
        "an angle reaches π/2"
    );
    ensure!(
        r.classification == Some(Classification::Acute),
        "{:?}",
        r.classification
    );
    let margin = r.margin.unwrap_or(f64::NAN);
    ensure!(margin > ACUTE_MARGIN_FLOOR, "margin {margin}");

    // ∠a a* b' measured between the shortest geodesics leaving a*.
    let fr = acute_frame(&c.s, &c.tol).map_err(|e| e.to_string())?;
    let star = fr.stars[0];
    let out = |q: SurfacePoint| {
        let g = shortest_geodesics(&c.s, &star, &q, DEFAULT_MAX_FACES, &c.tol).expect("path");
        direction_from(&c.s, &g[0], &star, c.tol.eps_len).expect("leaves a*")
    };
    let w = angle_gap(
        &out(SurfacePoint::vertex(fr.corners[0])),
        &out(SurfacePoint::vertex(fr.cycle[1])),
    );
    ensure!(close(w, 5.0 * PI / 12.0, 1e-9), "witness angle {w}");
    Ok(())
}

fn gauss_bonnet(c: &Ctx) -> Outcome {
    for t in [
        construct_nonobtuse8(&c.s, &c.tol),
        construct_acute12(&c.s, &c.tol),
    ] {
        let t = t.map_err(|e| e.to_string())?;
        let r = verify(&c.s, &t, DEFAULT_MAX_FACES, &c.tol);
        let gb = r.gauss_bonnet.as_ref().ok_or("no ledger")?;
        // Oracle: angle sums minus π, summed directly from the corner angles.
        let direct: f64 = (0..t.triangles.len())
            .map(|k| {
                r.angles
                    .iter()
                    .filter(|x| x.triangle == k)
                    .map(|x| x.angle)
                    .sum::<f64>()
                    - PI
            })
            .sum();
        ensure!(
            close(gb.total_excess, 8.0 * FRAC_PI_3, 1e-8),
            "excess {}",
            gb.total_excess
        );
        ensure!(
            close(direct, 8.0 * FRAC_PI_3, 1e-8),
            "direct excess {direct}"
        );
        ensure!(
            r.check("closure") == Some(CheckStatus::Pass),
            "closure check failed"
        );
        for (i, p) in t.vertices.iter().enumerate() {
            let sum: f64 = r
                .angles
                .iter()
                .filter(|x| x.vertex == i)
                .map(|x| x.angle)
                .sum();
            let want = if p.is_vertex() {
                5.0 * PI / 3.0
            } else {
                2.0 * PI
            };
            ensure!(close(sum, want, 1e-8), "vertex {i}: angle sum {sum}");
        }
    }
    Ok(())
}

fn nonobtuse_lb(c: &Ctx) -> Outcome {
    for f in [4, 6] {
        let types = enumerate_sphere_triangulations(f).map_err(|e| e.to_string())?;
        ensure!(types.len() == 1, "F={f}: {} types", types.len());
        ensure!(
            types[0].min_degree() == 3,
            "F={f}: min degree {}",
            types[0].min_degree()
        );
    }
    let k = min_degree_bound(5.0 * PI / 3.0, FRAC_PI_2, false, c.tol.eps_ang);
    ensure!(k == 4, "bound {k}");
    let cert = check_nonobtuse_lower_bound(&c.s, &c.tol);
    ensure!(cert.verdict == Verdict::Holds, "{:?}", cert.verdict);
    Ok(())
}

fn acute8(c: &Ctx) -> Outcome {
    let cert = check_no_acute_8(&c.s, DEFAULT_MAX_FACES, &c.tol);
    ensure!(cert.verdict == Verdict::Holds, "{:?}", cert.verdict);
    let e = &cert.evidence;
    ensure!(
        e["octahedron_unique"]["min_degree_4"] == 1,
        "octahedron not unique"
    );
    ensure!(
        e["octahedron_unique"]["degrees"] == serde_json::json!([4, 4, 4, 4, 4, 4]),
        "degrees"
    );
    let search = &e["search"];
    ensure!(
        search["ordered_pairs"] == 132,
        "pairs {}",
        search["ordered_pairs"]
    );
    ensure!(
        search["all_angles_5pi12"] == 0,
        "witnesses {}",
        search["all_angles_5pi12"]
    );
    for (key, want) in [
        ("edge_base_witness", PI / 6.0),
        ("antipodal_base_witness", 5.0 * PI / 6.0),
    ] {
        let got = search[key]["apex_angle"]
            .as_f64()
            .ok_or(format!("no {key}"))?;
        ensure!(close(got, want, 1e-9), "{key}: {got}");
    }
    Ok(())
}

fn acute10(c: &Ctx) -> Outcome {
    let types = enumerate_sphere_triangulations(10).map_err(|e| e.to_string())?;
    let min4: Vec<_> = types.iter().filter(|t| t.min_degree() >= 4).collect();
    ensure!(
        min4.len() == 1 && min4[0].degree_sequence() == [5, 5, 4, 4, 4, 4, 4],
        "bipyramid"
    );
    let (subsets, least) = adjacency_scan(&c.s);
    ensure!(subsets == 792 && least >= 2, "scan ({subsets}, {least})");
    let cert = check_no_acute_10(&c.s, DEFAULT_MAX_FACES, &c.tol);
    ensure!(cert.verdict == Verdict::Holds, "{:?}", cert.verdict);
    let orbits = cert.evidence["cycle_enumeration"]["orbits"]
        .as_u64()
        .unwrap_or(0);
    ensure!(orbits == 1, "{orbits} orbits");
    let apex = cert.evidence["apex"]
        .as_array()
        .ok_or("no apex certificates")?;
    ensure!(
        apex.len() as u64 == orbits,
        "apex certificates {}",
        apex.len()
    );
    for a in apex {
        ensure!(a["verdict"] == "holds", "apex {}", a["verdict"]);
        for side in a["evidence"]["sides"].as_array().into_iter().flatten() {
            ensure!(
                side["verdict"] == "holds",
                "side {} is {}",
                side["side"],
                side["verdict"]
            );
            ensure!(
                side["depth_limited"] == false && side["separated"] == true,
                "degenerate side"
            );
        }
    }
    Ok(())
}

fn parity(c: &Ctx) -> Outcome {
    for f in [9, 11] {
        let cert = check_size_parity(f, &c.tol);
        ensure!(
            cert.verdict == Verdict::Holds && cert.evidence["odd"] == true,
            "F={f}"
        );
        // Oracle: 3F = 2E has no solution for odd F.
        ensure!((3 * f) % 2 == 1, "F={f}");
    }
    Ok(())
}

fn aggregate(_: &Ctx) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_cuboct"))
        .arg("paper-check")
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(
        out.status.code() == Some(0),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure!(
        v["acute_minimum"] == 12,
        "acute minimum {}",
        v["acute_minimum"]
    );
    ensure!(
        v["nonobtuse_minimum"] == 8,
        "non-obtuse minimum {}",
        v["nonobtuse_minimum"]
    );
    ensure!(v["all_hold"] == true, "not all hold");
    Ok(())
}

/// Interior points of a vertex-to-vertex geodesic stay off every face corner.
fn clear_of_cone_points(s: &PolyhedralSurface, g: &GeodesicSegment) -> bool {
    let n = g.pieces.len();
    g.pieces.iter().enumerate().all(|(i, p)| {
        let (a, b) = (p.start(), p.end());
        s.face(p.face).corners.iter().all(|c| {
            let ab = b - a;
            let t = ((c - a).dot(&ab) / ab.norm_squared()).clamp(0.0, 1.0);
            let d = (a + ab * t - c).norm();
            d > 1e-6 || (i == 0 && t < 1e-9) || (i + 1 == n && t > 1.0 - 1e-9)
        })
    })
}

fn properties(c: &Ctx) -> Outcome {
    let mut dist = [[0.0; 12]; 12];
    let mut ties = [[0usize; 12]; 12];
    for a in 0..12 {
        for b in 0..12 {
            if a == b {
                continue;
            }
            let gs = c.geodesics(a, b);
            dist[a][b] = gs[0].length;
            ties[a][b] = gs.len();
            for g in &gs {
                ensure!(close(g.length, dist[a][b], 1e-9), "{a}->{b}: unequal ties");
                ensure!(
                    clear_of_cone_points(&c.s, g),
                    "{a}->{b} touches a cone point"
                );
            }
        }
    }
    for a in 0..12 {
        for b in 0..12 {
            ensure!(
                close(dist[a][b], dist[b][a], 1e-9) && ties[a][b] == ties[b][a],
                "asymmetric {a},{b}"
            );
            for m in 0..12 {
                ensure!(
                    dist[a][b] <= dist[a][m] + dist[m][b] + 1e-9,
                    "triangle {a},{m},{b}"
                );
            }
        }
    }
    for (v, row) in dist.iter().enumerate() {
        let fan = vertex_fan(&c.s, v, DEFAULT_MAX_FACES, &c.tol).map_err(|e| e.to_string())?;
        let span = fan[19].phi - fan[0].phi + PI / 12.0;
        ensure!(
            close(span, c.s.cone_angle(v), 1e-9),
            "fan at {v} does not close"
        );
        for e in &fan {
            ensure!(
                close(e.length, row[e.target], 1e-9),
                "fan ray {v}->{} not shortest",
                e.target
            );
        }
    }
    let r1 = main_theorem_report(&c.s, DEFAULT_MAX_FACES, &c.tol).to_json();
    let r2 = main_theorem_report(&c.s, DEFAULT_MAX_FACES, &c.tol).to_json();
    ensure!(r1 == r2, "certificate JSON differs between runs");
    Ok(())
}

fn main() {
    let ctx = Ctx {
        s: build_cuboctahedron(1.0).expect("surface"),
        tol: Tolerances::default(),
    };
    let criteria: [Criterion; 11] = [
        ("cone angles 5π/3", cone_angles),
        ("vertex fans of 20 rays", fans),
        ("non-obtuse 8-triangle construction", nonobtuse8),
        ("acute 12-triangle construction", acute12),
        ("Gauss-Bonnet ledger", gauss_bonnet),
        ("non-obtuse lower bound", nonobtuse_lb),
        ("no acute 8-triangulation", acute8),
        ("no acute 10-triangulation", acute10),
        ("odd sizes impossible", parity),
        ("paper-check aggregate", aggregate),
        ("property suite", properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(|| check(&ctx)))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
