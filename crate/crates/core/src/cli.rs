//! Command-line front end. `run` parses arguments, writes JSON to stdout
//! (or `--out`), and returns the process exit status: 0 on success, 1 when a
//! verdict fails or a computation errors, 2 on usage errors. Errors are
//! reported on stderr as one JSON object.

use crate::geodesic::{
    shortest_geodesics, vertex_fan, FanEntry, GeodesicError, GeodesicJson, DEFAULT_MAX_FACES,
};
use crate::minimality::{
    check_apex_infeasible, check_no_acute_10, check_no_acute_8, check_nonobtuse_lower_bound,
    check_size_parity, enumerate_c5, main_theorem_report, C5Filters, Certificate, GeodesicAtlas,
    Verdict,
};
use crate::planar::P2;
use crate::surface::{
    build_cuboctahedron, PolyhedralSurface, SurfaceError, SurfacePoint, VertexId,
};
use crate::svg::{render_fan, render_net, Net, Overlay};
use crate::tolerance::{ToleranceError, Tolerances, ANGLE_QUANTUM};
use crate::triangulation::{
    construct_acute12, construct_nonobtuse8, verify, Classification, GeodesicTriangulation,
    TriangulationError,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(
    name = "cuboct",
    version,
    about = "Geodesics, triangulations and certificates on the cuboctahedral surface"
)]
pub struct Cli {
    /// Set both length and angle tolerances.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// Length tolerance.
    #[arg(long, global = true)]
    pub eps_len: Option<f64>,
    /// Angle tolerance in radians.
    #[arg(long, global = true)]
    pub eps_ang: Option<f64>,
    /// Tolerance for snapping angles to multiples of π/12.
    #[arg(long, global = true)]
    pub snap: Option<f64>,
    /// Longest face strip searched for shortest paths.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_FACES)]
    pub max_faces: usize,
    /// Surface JSON to use instead of the unit cuboctahedron.
    #[arg(long, global = true)]
    pub surface: Option<PathBuf>,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Directory for SVG figures.
    #[arg(long, global = true)]
    pub svg_dir: Option<PathBuf>,
    /// Print nothing on stdout.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Faces, gluings, cone angles and skeleton distances.
    Surface,
    /// All shortest geodesics between two points (v<id>, e<edge>:<t>, f<face>:<x>,<y>).
    Geodesics {
        #[arg(long)]
        from: SurfacePoint,
        #[arg(long)]
        to: SurfacePoint,
    },
    /// The fan of shortest geodesics to all other vertices.
    Fan {
        #[arg(long)]
        vertex: VertexId,
    },
    /// Emit one of the explicit triangulations.
    Triangulate {
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Verify a triangulation JSON file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Run a lower-bound certificate.
    Minimality {
        #[arg(long, value_enum, default_value_t = Check::All)]
        check: Check,
        /// Face count for the parity check.
        #[arg(long, default_value_t = 9)]
        faces: usize,
        /// Also write the certificate here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Full pipeline with a summary of every result.
    PaperCheck,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Kind {
    Nonobtuse8,
    Acute12,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Check {
    Parity,
    NonobtuseLb,
    Acute8,
    Acute10,
    All,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Tolerance(#[from] ToleranceError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Geodesic(#[from] GeodesicError),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("result failed: {0}")]
    Verdict(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Tolerance(_) => "tolerance",
            CliError::Surface(_) => "surface",
            CliError::Geodesic(_) => "geodesic",
            CliError::Triangulation(_) => "triangulation",
            CliError::Io { .. } => "io",
            CliError::Verdict(_) => "verdict",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Tolerance(_) => 2,
            _ => 1,
        }
    }
}

/// Parse `argv` (including the program name) and execute.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let msg = e.render().to_string();
            report_error(stderr, &CliError::Usage(msg.trim().to_string()));
            return 2;
        }
    };
    match execute(&cli) {
        Ok((value, ok)) => {
            let text = serde_json::to_string_pretty(&value).expect("json") + "\n";
            if let Some(path) = &cli.out {
                if let Err(e) = write_file(path, &text) {
                    report_error(stderr, &e);
                    return e.exit_code();
                }
            } else if !cli.quiet {
                let _ = stdout.write_all(text.as_bytes());
            }
            if ok {
                0
            } else {
                report_error(stderr, &CliError::Verdict(summary_line(&value)));
                1
            }
        }
        Err(e) => {
            report_error(stderr, &e);
            e.exit_code()
        }
    }
}

fn report_error(stderr: &mut dyn Write, e: &CliError) {
    let _ = writeln!(
        stderr,
        "{}",
        json!({ "error": e.kind(), "message": e.to_string() })
    );
}

fn summary_line(v: &Value) -> String {
    ["verdict", "valid", "all_hold"]
        .iter()
        .find_map(|k| v.get(*k).map(|x| format!("{k} = {x}")))
        .unwrap_or_else(|| "see output".to_string())
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn tolerances(cli: &Cli) -> Result<Tolerances, CliError> {
    let mut t = Tolerances::default();
    if let Some(x) = cli.tolerance {
        t.eps_len = x;
        t.eps_ang = x;
    }
    t.eps_len = cli.eps_len.unwrap_or(t.eps_len);
    t.eps_ang = cli.eps_ang.unwrap_or(t.eps_ang);
    t.snap = cli.snap.unwrap_or(t.snap);
    t.validate()?;
    Ok(t)
}

fn load_surface(cli: &Cli) -> Result<PolyhedralSurface, CliError> {
    match &cli.surface {
        None => Ok(build_cuboctahedron(1.0)?),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            })?;
            Ok(PolyhedralSurface::from_json_str(&text)?)
        }
    }
}

fn svg_out(cli: &Cli, name: &str, body: &str) -> Result<(), CliError> {
    if let Some(dir) = &cli.svg_dir {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
            path: dir.display().to_string(),
            source,
        })?;
        write_file(&dir.join(name), body)?;
    }
    Ok(())
}

/// Result JSON and whether everything it reports holds.
fn execute(cli: &Cli) -> Result<(Value, bool), CliError> {
    if cli.max_faces == 0 {
        return Err(CliError::Usage("--max-faces must be positive".to_string()));
    }
    let tol = tolerances(cli)?;
    let s = load_surface(cli)?;
    match &cli.command {
        Command::Surface => Ok((surface_summary(&s)?, true)),
        Command::Geodesics { from, to } => {
            let gs = shortest_geodesics(&s, from, to, cli.max_faces, &tol)?;
            if cli.svg_dir.is_some() {
                let overlays: Vec<Overlay> = gs
                    .iter()
                    .map(|g| Overlay::Geodesic {
                        segment: g.clone(),
                        color: "#b22".to_string(),
                    })
                    .collect();
                svg_out(
                    cli,
                    "geodesics.svg",
                    &render_net(&s, &Net::unfold(&s), &overlays),
                )?;
            }
            let list: Vec<GeodesicJson> = gs.iter().map(GeodesicJson::from).collect();
            Ok((
                json!({ "from": from, "to": to, "count": list.len(), "geodesics": list }),
                true,
            ))
        }
        Command::Fan { vertex } => {
            if *vertex >= s.vertex_count() {
                return Err(CliError::Usage(format!(
                    "vertex {vertex} out of range 0..{}",
                    s.vertex_count()
                )));
            }
            let fan = vertex_fan(&s, *vertex, cli.max_faces, &tol)?;
            svg_out(
                cli,
                &format!("fan-v{vertex}.svg"),
                &render_fan(&s, *vertex, &fan),
            )?;
            Ok((fan_summary(&s, *vertex, &fan, &tol), true))
        }
        Command::Triangulate { kind } => {
            let t = match kind {
                Kind::Nonobtuse8 => construct_nonobtuse8(&s, &tol)?,
                Kind::Acute12 => construct_acute12(&s, &tol)?,
            };
            if cli.svg_dir.is_some() {
                let name = match kind {
                    Kind::Nonobtuse8 => "nonobtuse8.svg",
                    Kind::Acute12 => "acute12.svg",
                };
                svg_out(cli, name, &triangulation_svg(&s, &t, cli.max_faces, &tol)?)?;
            }
            Ok((serde_json::to_value(&t).expect("serializes"), true))
        }
        Command::Verify { input } => {
            let text = std::fs::read_to_string(input).map_err(|source| CliError::Io {
                path: input.display().to_string(),
                source,
            })?;
            let t = GeodesicTriangulation::from_json(&text)?;
            let r = verify(&s, &t, cli.max_faces, &tol);
            Ok((serde_json::to_value(&r).expect("serializes"), r.valid))
        }
        Command::Minimality { check, faces, json } => {
            let cert = match check {
                Check::Parity => check_size_parity(*faces, &tol),
                Check::NonobtuseLb => check_nonobtuse_lower_bound(&s, &tol),
                Check::Acute8 => check_no_acute_8(&s, cli.max_faces, &tol),
                Check::Acute10 => {
                    c5_svg(cli, &s, &tol)?;
                    check_no_acute_10(&s, cli.max_faces, &tol)
                }
                Check::All => {
                    c5_svg(cli, &s, &tol)?;
                    main_theorem_report(&s, cli.max_faces, &tol)
                }
            };
            if let Some(path) = json {
                write_file(path, &(cert.to_json() + "\n"))?;
            }
            let ok = cert.holds();
            Ok((serde_json::to_value(&cert).expect("serializes"), ok))
        }
        Command::PaperCheck => paper_check(cli, &s, &tol),
    }
}

fn surface_summary(s: &PolyhedralSurface) -> Result<Value, CliError> {
    let cones: Vec<f64> = (0..s.vertex_count()).map(|v| s.cone_angle(v)).collect();
    let mut shells = Vec::new();
    for v in 0..s.vertex_count() {
        let d = s.skeleton_distances_from(v)?;
        let mut count: BTreeMap<usize, usize> = BTreeMap::new();
        for x in d.into_iter().filter(|&x| x > 0) {
            *count.entry(x).or_insert(0) += 1;
        }
        shells.push(count.into_values().collect::<Vec<_>>());
    }
    Ok(json!({
        "vertices": s.vertex_count(),
        "edges": s.edges().len(),
        "faces": s.faces().len(),
        "area": s.area(),
        "cone_angles": cones,
        "skeleton_shells": shells,
        "isometries": s.isometry_group().len(),
        "surface": s.to_json(),
    }))
}

fn fan_summary(s: &PolyhedralSurface, v: VertexId, fan: &[FanEntry], tol: &Tolerances) -> Value {
    let cone = s.cone_angle(v);
    let gaps: Vec<f64> = (0..fan.len())
        .map(|i| {
            let next = if i + 1 == fan.len() {
                fan[0].phi + cone
            } else {
                fan[i + 1].phi
            };
            next - fan[i].phi
        })
        .collect();
    let uniform = gaps
        .iter()
        .all(|g| (g - ANGLE_QUANTUM).abs() <= tol.eps_ang);
    let mut by_target: BTreeMap<VertexId, usize> = BTreeMap::new();
    for e in fan {
        *by_target.entry(e.target).or_insert(0) += 1;
    }
    let mut multiplicities: Vec<usize> = by_target.values().copied().collect();
    multiplicities.sort_unstable();
    json!({
        "vertex": v,
        "cone_angle": cone,
        "count": fan.len(),
        "gaps": gaps,
        "uniform_gaps": uniform,
        "multiplicities": multiplicities,
        "directions": fan,
    })
}

fn triangulation_svg(
    s: &PolyhedralSurface,
    t: &GeodesicTriangulation,
    max_faces: usize,
    tol: &Tolerances,
) -> Result<String, CliError> {
    let segs = t.realize(s, max_faces, tol)?;
    let mut overlays: Vec<Overlay> = segs
        .into_iter()
        .map(|g| Overlay::Geodesic {
            segment: g,
            color: "#b22".to_string(),
        })
        .collect();
    for (i, p) in t.vertices.iter().enumerate() {
        if let Some((face, q)) = s.charts_of(p).into_iter().next() {
            overlays.push(Overlay::Marker {
                face,
                point: q,
                label: t.label(i),
            });
        }
    }
    Ok(render_net(s, &Net::unfold(s), &overlays))
}

/// The surviving 5-cycle and its feasible apex polygons.
fn c5_svg(cli: &Cli, s: &PolyhedralSurface, tol: &Tolerances) -> Result<(), CliError> {
    if cli.svg_dir.is_none() {
        return Ok(());
    }
    let atlas = GeodesicAtlas::build(s, cli.max_faces, tol)?;
    let e = enumerate_c5(s, &atlas, C5Filters::default(), tol);
    let Some(orbit) = e.orbits.first() else {
        return Ok(());
    };
    let c5 = &e.configurations[orbit[0]];
    let cert = check_apex_infeasible(s, c5, cli.max_faces, tol);
    let mut overlays: Vec<Overlay> = c5
        .segments
        .iter()
        .map(|g| Overlay::Geodesic {
            segment: g.clone(),
            color: "#1a5".to_string(),
        })
        .collect();
    let colors = ["#d80", "#36c"];
    for (side, color) in cert.evidence["sides"]
        .as_array()
        .into_iter()
        .flatten()
        .zip(colors)
    {
        for p in side["feasible"].as_array().into_iter().flatten() {
            let face = p["face"].as_u64().unwrap_or(0) as usize;
            let points: Vec<P2> = p["polygon"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|xy| P2::new(xy[0].as_f64().unwrap_or(0.0), xy[1].as_f64().unwrap_or(0.0)))
                .collect();
            overlays.push(Overlay::Polygon {
                face,
                points,
                color: color.to_string(),
            });
        }
    }
    for (i, v) in c5.vertices.iter().enumerate() {
        if let Some((face, q)) = s.charts_of(&SurfacePoint::vertex(*v)).into_iter().next() {
            overlays.push(Overlay::Marker {
                face,
                point: q,
                label: format!("v{}", i + 1),
            });
        }
    }
    svg_out(cli, "c5.svg", &render_net(s, &Net::unfold(s), &overlays))
}

fn verdict_of(c: &Certificate) -> Value {
    serde_json::to_value(c.verdict).expect("serializes")
}

fn paper_check(
    cli: &Cli,
    s: &PolyhedralSurface,
    tol: &Tolerances,
) -> Result<(Value, bool), CliError> {
    let cone_error = (0..s.vertex_count())
        .map(|v| (s.cone_angle(v) - 5.0 * std::f64::consts::PI / 3.0).abs())
        .fold(0.0, f64::max);
    let cones_ok = cone_error <= 1e-12;

    let mut fans = Vec::new();
    let mut fans_ok = true;
    for v in 0..s.vertex_count() {
        let fan = vertex_fan(s, v, cli.max_faces, tol)?;
        let f = fan_summary(s, v, &fan, tol);
        let ok = fan.len() == 20
            && f["uniform_gaps"] == true
            && f["multiplicities"] == json!([1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 6]);
        fans_ok &= ok;
        fans.push(json!({ "vertex": v, "count": fan.len(), "ok": ok }));
        if v == 0 {
            svg_out(cli, "fan-v0.svg", &render_fan(s, v, &fan))?;
        }
    }

    let mut constructions = serde_json::Map::new();
    let mut constructions_ok = true;
    for (name, built, want) in [
        (
            "nonobtuse8",
            construct_nonobtuse8(s, tol),
            Classification::NonObtuse,
        ),
        ("acute12", construct_acute12(s, tol), Classification::Acute),
    ] {
        let t = built?;
        let r = verify(s, &t, cli.max_faces, tol);
        let ok = r.valid && r.classification == Some(want);
        constructions_ok &= ok;
        constructions.insert(
            name.to_string(),
            json!({
                "triangles": t.triangles.len(),
                "valid": r.valid,
                "classification": r.classification,
                "margin": r.margin,
                "max_angle": r.max_angle,
                "total_excess": r.gauss_bonnet.as_ref().map(|g| g.total_excess),
            }),
        );
        svg_out(
            cli,
            &format!("{name}.svg"),
            &triangulation_svg(s, &t, cli.max_faces, tol)?,
        )?;
    }

    c5_svg(cli, s, tol)?;
    let report = main_theorem_report(s, cli.max_faces, tol);
    let mut certificates = serde_json::Map::new();
    for sub in report.evidence["sub_certificates"]
        .as_array()
        .into_iter()
        .flatten()
    {
        let claim = sub["claim"].as_str().unwrap_or("?");
        let key = match claim {
            "parity-odd" => format!("parity-{}", sub["evidence"]["faces"]),
            other => other.to_string(),
        };
        certificates.insert(key, sub["verdict"].clone());
        if claim == "nonobtuse8" {
            certificates.insert(
                "thm1-lb".to_string(),
                sub["evidence"]["lower_bound"]["verdict"].clone(),
            );
        }
    }
    let holds = report.verdict == Verdict::Holds;
    let all = cones_ok && fans_ok && constructions_ok && holds;
    Ok((
        json!({
            "all_hold": all,
            "acute_minimum": report.evidence["acute_minimum"],
            "nonobtuse_minimum": report.evidence["nonobtuse_minimum"],
            "cone_angles": { "max_error": cone_error, "ok": cones_ok },
            "fans": { "ok": fans_ok, "vertices": fans },
            "constructions": constructions,
            "certificates": certificates,
            "verdict": verdict_of(&report),
        }),
        all,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("cuboct").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn fan_of_vertex_zero() {
        let (code, out, _) = call(&["fan", "--vertex", "0"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["count"], 20);
        assert_eq!(v["uniform_gaps"], true);
    }

    #[test]
    fn usage_errors_exit_2_with_json() {
        for args in [
            &["bogus"][..],
            &["fan"],
            &["--eps-len", "0.1", "surface"],
            &["fan", "--vertex", "99"],
        ] {
            let (code, _, err) = call(args);
            assert_eq!(code, 2, "{args:?}");
            let v: Value = serde_json::from_str(err.trim()).unwrap();
            assert!(v["message"].is_string());
        }
    }

    #[test]
    fn geodesics_between_antipodes() {
        let (code, out, _) = call(&["geodesics", "--from", "v0", "--to", "v3"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["count"], 6);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("paper-check"));
    }
}
