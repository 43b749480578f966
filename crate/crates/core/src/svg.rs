//! SVG drawings: a flat net of the surface with overlays, and the direction
//! fan at a vertex. Output is deterministic; no timestamps.

use crate::geodesic::{FanEntry, GeodesicSegment};
use crate::planar::{clip_convex, polygon_area, rotate, P2};
use crate::surface::{FaceId, FaceShape, PolyhedralSurface, VertexId};
use nalgebra::{Isometry2, Translation2};
use std::collections::VecDeque;
use std::fmt::Write;

const SCALE: f64 = 90.0;
const MARGIN: f64 = 20.0;

/// Placement of every face chart in the drawing plane.
#[derive(Debug, Clone)]
pub struct Net {
    pub placements: Vec<Isometry2<f64>>,
}

impl Net {
    /// Unfold faces breadth-first, skipping placements that would overlap a
    /// face already drawn; faces left over go in a row underneath.
    pub fn unfold(surface: &PolyhedralSurface) -> Net {
        let n = surface.faces().len();
        let mut placed: Vec<Option<Isometry2<f64>>> = vec![None; n];
        let mut queue = VecDeque::from([0]);
        placed[0] = Some(Isometry2::identity());
        let mut progress = true;
        while progress {
            progress = false;
            while let Some(f) = queue.pop_front() {
                let at = placed[f].expect("queued faces are placed");
                for j in 0..surface.face(f).len() {
                    let gl = surface.gluing(f, j);
                    if placed[gl.face].is_some() {
                        continue;
                    }
                    let cand = at * gl.partner_to_self;
                    if !overlaps(surface, &placed, gl.face, &cand) {
                        placed[gl.face] = Some(cand);
                        queue.push_back(gl.face);
                        progress = true;
                    }
                }
            }
        }
        let bottom = placed
            .iter()
            .enumerate()
            .filter_map(|(f, p)| p.map(|p| corners(surface, f, &p)))
            .flatten()
            .map(|p| p.y)
            .fold(0.0, f64::min);
        let mut x = 0.0;
        let placements = placed
            .into_iter()
            .map(|p| {
                p.unwrap_or_else(|| {
                    let t = Isometry2::from_parts(
                        Translation2::new(x, bottom - 1.5),
                        Default::default(),
                    );
                    x += 1.5;
                    t
                })
            })
            .collect();
        Net { placements }
    }

    pub fn place(&self, face: FaceId, p: &P2) -> P2 {
        self.placements[face].transform_point(p)
    }
}

fn corners(surface: &PolyhedralSurface, f: FaceId, at: &Isometry2<f64>) -> Vec<P2> {
    surface
        .face(f)
        .corners
        .iter()
        .map(|c| at.transform_point(c))
        .collect()
}

fn overlaps(
    surface: &PolyhedralSurface,
    placed: &[Option<Isometry2<f64>>],
    f: FaceId,
    at: &Isometry2<f64>,
) -> bool {
    let poly = corners(surface, f, at);
    placed
        .iter()
        .enumerate()
        .filter_map(|(g, p)| p.map(|p| corners(surface, g, &p)))
        .any(|other| polygon_area(&clip_convex(&poly, &other)) > 1e-9)
}

/// Something drawn on top of the net.
#[derive(Debug, Clone)]
pub enum Overlay {
    Geodesic {
        segment: GeodesicSegment,
        color: String,
    },
    Polygon {
        face: FaceId,
        points: Vec<P2>,
        color: String,
    },
    Marker {
        face: FaceId,
        point: P2,
        label: String,
    },
}

struct Canvas {
    min: P2,
    height: f64,
    body: String,
}

impl Canvas {
    fn new(points: impl Iterator<Item = P2>) -> (Canvas, f64, f64) {
        let (mut lo, mut hi) = (
            P2::new(f64::INFINITY, f64::INFINITY),
            P2::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        );
        for p in points {
            lo = P2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = P2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let w = (hi.x - lo.x) * SCALE + 2.0 * MARGIN;
        let h = (hi.y - lo.y) * SCALE + 2.0 * MARGIN;
        (
            Canvas {
                min: lo,
                height: h,
                body: String::new(),
            },
            w,
            h,
        )
    }

    fn xy(&self, p: &P2) -> (f64, f64) {
        (
            (p.x - self.min.x) * SCALE + MARGIN,
            self.height - ((p.y - self.min.y) * SCALE + MARGIN),
        )
    }

    fn points(&self, ps: &[P2]) -> String {
        ps.iter()
            .map(|p| {
                let (x, y) = self.xy(p);
                format!("{x:.2},{y:.2}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn finish(canvas: Canvas, w: f64, h: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.0} {h:.0}\" font-family=\"sans-serif\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{}</svg>\n",
        canvas.body
    )
}

/// The net with face and vertex labels and the overlays on top.
pub fn render_net(surface: &PolyhedralSurface, net: &Net, overlays: &[Overlay]) -> String {
    let all = (0..surface.faces().len()).flat_map(|f| corners(surface, f, &net.placements[f]));
    let (mut c, w, h) = Canvas::new(all);
    for f in surface.faces() {
        let poly = corners(surface, f.id, &net.placements[f.id]);
        let fill = match f.shape {
            FaceShape::Triangle => "#f3e6c8",
            FaceShape::Square => "#d9e7f2",
        };
        let _ = writeln!(
            c.body,
            "<polygon points=\"{}\" fill=\"{fill}\" stroke=\"#555\" stroke-width=\"1\"/>",
            c.points(&poly)
        );
        let mid = crate::planar::centroid(&poly);
        let (x, y) = c.xy(&mid);
        let _ = writeln!(c.body, "<text x=\"{x:.2}\" y=\"{y:.2}\" font-size=\"9\" fill=\"#999\" text-anchor=\"middle\">f{}</text>", f.id);
        for (v, p) in f.vertices.iter().zip(&poly) {
            // Nudge labels towards the face centre so neighbours do not collide.
            let q = p + (mid - p) * 0.18;
            let (x, y) = c.xy(&q);
            let _ = writeln!(
                c.body,
                "<text x=\"{x:.2}\" y=\"{y:.2}\" font-size=\"8\" text-anchor=\"middle\">{v}</text>"
            );
        }
    }
    for o in overlays {
        match o {
            Overlay::Geodesic { segment, color } => {
                for piece in &segment.pieces {
                    let (a, b) = (
                        net.place(piece.face, &piece.start()),
                        net.place(piece.face, &piece.end()),
                    );
                    let ((x1, y1), (x2, y2)) = (c.xy(&a), c.xy(&b));
                    let _ = writeln!(
                        c.body,
                        "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>"
                    );
                }
            }
            Overlay::Polygon {
                face,
                points,
                color,
            } => {
                let placed: Vec<P2> = points.iter().map(|p| net.place(*face, p)).collect();
                let _ = writeln!(
                    c.body,
                    "<polygon points=\"{}\" fill=\"{color}\" fill-opacity=\"0.45\" stroke=\"{color}\"/>",
                    c.points(&placed)
                );
            }
            Overlay::Marker { face, point, label } => {
                let (x, y) = c.xy(&net.place(*face, point));
                let _ = writeln!(
                    c.body,
                    "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"black\"/>"
                );
                let _ = writeln!(
                    c.body,
                    "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"10\">{label}</text>",
                    x + 4.0,
                    y - 4.0
                );
            }
        }
    }
    finish(c, w, h)
}

/// The star of `v` laid flat, corner after corner, with every fan ray.
/// The missing angle 2π − Θ shows as the gap after the last corner.
pub fn render_fan(surface: &PolyhedralSurface, v: VertexId, fan: &[FanEntry]) -> String {
    let star = surface.star(v);
    let mut wedges = Vec::new();
    for corner in &star.corners {
        let face = surface.face(corner.face);
        let at = face.corners[corner.corner];
        let out = face.corners[(corner.corner + 1) % face.len()] - at;
        // Turn the chart so the corner's outgoing side points along its offset.
        let turn = corner.offset - out.y.atan2(out.x);
        let poly: Vec<P2> = face
            .corners
            .iter()
            .map(|p| P2::from(rotate(&(p - at), turn)))
            .collect();
        wedges.push((face.shape, poly));
    }
    let all = wedges
        .iter()
        .flat_map(|(_, p)| p.iter().copied())
        .chain([P2::new(-1.6, -1.6), P2::new(1.6, 1.6)]);
    let (mut c, w, h) = Canvas::new(all);
    for (shape, poly) in &wedges {
        let fill = match shape {
            FaceShape::Triangle => "#f3e6c8",
            FaceShape::Square => "#d9e7f2",
        };
        let _ = writeln!(
            c.body,
            "<polygon points=\"{}\" fill=\"{fill}\" stroke=\"#555\"/>",
            c.points(poly)
        );
    }
    let origin = P2::origin();
    for e in fan {
        let tip = P2::new(1.5 * e.phi.cos(), 1.5 * e.phi.sin());
        let ((x1, y1), (x2, y2)) = (c.xy(&origin), c.xy(&tip));
        let _ = writeln!(
            c.body,
            "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"#b22\" stroke-width=\"1\"/>"
        );
        let label = P2::new(1.58 * e.phi.cos(), 1.58 * e.phi.sin());
        let (x, y) = c.xy(&label);
        let _ = writeln!(
            c.body,
            "<text x=\"{x:.2}\" y=\"{y:.2}\" font-size=\"9\" text-anchor=\"middle\">{}</text>",
            e.target
        );
    }
    finish(c, w, h)
}
