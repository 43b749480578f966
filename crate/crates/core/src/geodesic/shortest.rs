use super::{GeodesicError, GeodesicSegment, Piece, UnfoldedChart};
use crate::planar::{clip_segment_to_cone, cross, orient, point_segment_distance, P2, V2};
use crate::surface::{FaceId, PolyhedralSurface, SurfacePoint};
use crate::tolerance::Tolerances;

pub const DEFAULT_MAX_FACES: usize = 8;

/// Visibility cone at the source, counter-clockwise from `.0` to `.1`.
type Window = Option<(V2, V2)>;

struct Search<'a> {
    surface: &'a PolyhedralSurface,
    target: Vec<(FaceId, P2)>,
    src: P2,
    max_faces: usize,
    tol: &'a Tolerances,
    best: f64,
    found: Vec<(f64, UnfoldedChart, Vec<P2>)>,
    /// Smallest distance to an exit that was cut off by the depth limit.
    truncated: f64,
}

/// Every shortest geodesic from `p` to `q`, sorted by face sequence.
///
/// The search enumerates backtrack-free face sequences of length at most
/// `max_faces`, tracking the cone of directions from `p` that still passes
/// through the strip. Paths whose continuation could still beat the best
/// length but were cut off by the depth limit make the call fail with
/// `MaxFacesTooSmall` instead of returning a possibly wrong answer.
pub fn shortest_geodesics(
    surface: &PolyhedralSurface,
    p: &SurfacePoint,
    q: &SurfacePoint,
    max_faces: usize,
    tol: &Tolerances,
) -> Result<Vec<GeodesicSegment>, GeodesicError> {
    for x in [p, q] {
        if !surface.is_valid_point(x) {
            return Err(GeodesicError::InvalidPoint(*x));
        }
    }
    let p = surface.canonicalize(p, tol.eps_len);
    let q = surface.canonicalize(q, tol.eps_len);
    if surface.same_point(&p, &q, tol.eps_len) {
        return Err(GeodesicError::SamePoint);
    }
    let mut found = Vec::new();
    let mut best = f64::INFINITY;
    let mut truncated = f64::INFINITY;
    for (f0, src) in surface.charts_of(&p) {
        let mut search = Search {
            surface,
            target: surface.charts_of(&q),
            src,
            max_faces,
            tol,
            best,
            found: Vec::new(),
            truncated: f64::INFINITY,
        };
        let window = start_window(surface, &p, f0, &src);
        let mut chart = UnfoldedChart::single(f0);
        search.visit(&mut chart, window, None);
        best = best.min(search.best);
        truncated = truncated.min(search.truncated);
        found.extend(search.found);
    }
    if found.is_empty() {
        return Err(GeodesicError::MaxFacesTooSmall {
            max_faces,
            reason: "no path found".into(),
        });
    }
    if truncated <= best + tol.eps_len {
        return Err(GeodesicError::MaxFacesTooSmall {
            max_faces,
            reason: "longer face sequences could still give a shorter path".into(),
        });
    }
    found.retain(|(len, _, _)| *len <= best + tol.eps_len);
    found.sort_by(|a, b| a.1.faces.cmp(&b.1.faces));

    let mut out: Vec<GeodesicSegment> = Vec::new();
    for (length, chart, crossings) in found {
        let g = build_segment(surface, p, q, chart, &crossings, length);
        // Distinct shortest paths cannot share an interior point, so the
        // midpoint identifies the geodesic. Sorting kept the smallest sequence first.
        let mid = g.point_at(surface, 0.5, tol.eps_len);
        if !out
            .iter()
            .any(|h| surface.same_point(&h.point_at(surface, 0.5, tol.eps_len), &mid, tol.eps_len))
        {
            out.push(g);
        }
    }
    Ok(out)
}

/// The unique shortest geodesic, or the one tied geodesic that meets the
/// interior of `witness_face` when several tie.
pub fn geodesic_between(
    surface: &PolyhedralSurface,
    p: &SurfacePoint,
    q: &SurfacePoint,
    witness_face: Option<FaceId>,
    max_faces: usize,
    tol: &Tolerances,
) -> Result<GeodesicSegment, GeodesicError> {
    let mut all = shortest_geodesics(surface, p, q, max_faces, tol)?;
    match witness_face {
        None if all.len() == 1 => Ok(all.remove(0)),
        None => Err(GeodesicError::Ambiguous(all.len())),
        Some(face) => {
            let total = all.len();
            let mut hits: Vec<GeodesicSegment> = all
                .into_iter()
                .filter(|g| g.interior_faces(tol.eps_len, surface).contains(&face))
                .collect();
            if hits.len() == 1 {
                Ok(hits.remove(0))
            } else {
                Err(GeodesicError::Witness {
                    face,
                    matches: hits.len(),
                    total,
                })
            }
        }
    }
}

fn start_window(surface: &PolyhedralSurface, p: &SurfacePoint, f: FaceId, src: &P2) -> Window {
    let face = surface.face(f);
    match *p {
        SurfacePoint::Vertex { id } => {
            let i = face
                .corner_of(id)
                .expect("vertex chart lies in an incident face");
            let n = face.len();
            Some((
                face.corners[(i + 1) % n] - src,
                face.corners[(i + n - 1) % n] - src,
            ))
        }
        SurfacePoint::Edge { .. } => {
            let i = (0..face.len())
                .min_by(|&a, &b| {
                    let (a0, a1) = face.side(a);
                    let (b0, b1) = face.side(b);
                    point_segment_distance(src, &a0, &a1)
                        .total_cmp(&point_segment_distance(src, &b0, &b1))
                })
                .expect("face has sides");
            let (a, b) = face.side(i);
            Some((b - src, a - src))
        }
        SurfacePoint::Face { .. } => None,
    }
}

impl Search<'_> {
    fn visit(&mut self, chart: &mut UnfoldedChart, window: Window, entry: Option<usize>) {
        let k = chart.faces.len() - 1;
        let f = chart.faces[k];
        let eps = self.tol.eps_len;
        if let Some(&(_, local)) = self.target.iter().find(|(g, _)| *g == f) {
            let placed = chart.placements[k].transform_point(&local);
            if let Some(crossings) = self.validate(chart, &placed) {
                let len = (placed - self.src).norm();
                if len <= self.best + eps {
                    self.best = self.best.min(len);
                    self.found.push((len, chart.clone(), crossings));
                }
            }
        }
        let corners = chart.placed_corners(self.surface, k);
        let n = corners.len();
        for i in 0..n {
            if Some(i) == entry {
                continue;
            }
            let a = corners[i];
            let b = corners[(i + 1) % n];
            let side_len = (b - a).norm();
            if orient(&a, &b, &self.src) <= eps * side_len {
                continue;
            }
            let (t0, t1) = match window {
                Some((lo, hi)) => match clip_segment_to_cone(&self.src, &lo, &hi, &a, &b) {
                    Some(r) => r,
                    None => continue,
                },
                None => (0.0, 1.0),
            };
            if (t1 - t0) * side_len <= eps {
                continue;
            }
            let a2 = a + (b - a) * t0;
            let b2 = a + (b - a) * t1;
            let dist = point_segment_distance(&self.src, &a2, &b2);
            if dist > self.best + eps {
                continue;
            }
            if chart.faces.len() >= self.max_faces {
                self.truncated = self.truncated.min(dist);
                continue;
            }
            let next_entry = self.surface.gluing(f, i).side;
            chart.push(self.surface, i);
            self.visit(
                chart,
                Some((a2 - self.src, b2 - self.src)),
                Some(next_entry),
            );
            chart.pop();
        }
    }

    /// Crossing points of the straight segment with every shared side, if it
    /// crosses each one strictly inside and in order.
    fn validate(&self, chart: &UnfoldedChart, q: &P2) -> Option<Vec<P2>> {
        let eps = self.tol.eps_len;
        let d = q - self.src;
        let len = d.norm();
        if len <= eps {
            return None;
        }
        let mut out = Vec::with_capacity(chart.exit_sides.len());
        let mut s_prev = 0.0;
        for k in 0..chart.exit_sides.len() {
            let (a, b) = chart.shared_side(self.surface, k);
            let e = b - a;
            let elen = e.norm();
            let denom = cross(&d, &e);
            if denom.abs() <= f64::EPSILON * len * elen {
                return None;
            }
            let w = a - self.src;
            let s = cross(&w, &e) / denom;
            let t = cross(&w, &d) / denom;
            if s <= s_prev + eps / len
                || s >= 1.0 - eps / len
                || t * elen <= eps
                || t * elen >= elen - eps
            {
                return None;
            }
            s_prev = s;
            out.push(self.src + d * s);
        }
        Some(out)
    }
}

fn build_segment(
    surface: &PolyhedralSurface,
    from: SurfacePoint,
    to: SurfacePoint,
    chart: UnfoldedChart,
    crossings: &[P2],
    length: f64,
) -> GeodesicSegment {
    let src = surface
        .charts_of(&from)
        .into_iter()
        .find(|(f, _)| *f == chart.faces[0])
        .expect("start chart")
        .1;
    let last = *chart.faces.last().expect("non-empty");
    let dst_local = surface.position_in(&to, last).expect("end chart");
    let dst = chart
        .placements
        .last()
        .expect("non-empty")
        .transform_point(&dst_local);
    let mut stops = Vec::with_capacity(crossings.len() + 2);
    stops.push(src);
    stops.extend_from_slice(crossings);
    stops.push(dst);
    let pieces = chart
        .faces
        .iter()
        .enumerate()
        .map(|(k, &f)| {
            let inv = chart.placements[k].inverse();
            let s = inv.transform_point(&stops[k]);
            let e = inv.transform_point(&stops[k + 1]);
            Piece {
                face: f,
                start: [s.x, s.y],
                end: [e.x, e.y],
            }
        })
        .collect();
    GeodesicSegment {
        from,
        to,
        chart,
        pieces,
        length,
    }
}
