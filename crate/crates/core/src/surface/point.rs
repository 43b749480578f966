use super::{EdgeId, FaceId, PolyhedralSurface, VertexId};
use crate::planar::{point_segment_distance, P2};
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;
use std::fmt;

/// A location on the surface in canonical form.
///
/// Vertices are stored by id; points interior to an edge by the undirected
/// edge id and the parameter `t ∈ (0, 1)` from its lower to its higher vertex;
/// everything else by face id and chart coordinates. Each point therefore has
/// exactly one representation and equality of canonical forms is equality
/// of points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SurfacePoint {
    Vertex { id: VertexId },
    Edge { edge: EdgeId, t: f64 },
    Face { face: FaceId, x: f64, y: f64 },
}

impl fmt::Display for SurfacePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfacePoint::Vertex { id } => write!(f, "v{id}"),
            SurfacePoint::Edge { edge, t } => write!(f, "e{edge}:{t}"),
            SurfacePoint::Face { face, x, y } => write!(f, "f{face}:{x},{y}"),
        }
    }
}

impl std::str::FromStr for SurfacePoint {
    type Err = String;

    /// Parses `v<id>`, `e<edge>:<t>` or `f<face>:<x>,<y>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad =
            || format!("cannot parse point '{s}' (expected v<id>, e<edge>:<t> or f<face>:<x>,<y>)");
        let (head, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        match head {
            "v" => rest
                .parse()
                .map(|id| SurfacePoint::Vertex { id })
                .map_err(|_| bad()),
            "e" => {
                let (e, t) = rest.split_once(':').ok_or_else(bad)?;
                Ok(SurfacePoint::Edge {
                    edge: e.parse().map_err(|_| bad())?,
                    t: t.parse().map_err(|_| bad())?,
                })
            }
            "f" => {
                let (f, xy) = rest.split_once(':').ok_or_else(bad)?;
                let (x, y) = xy.split_once(',').ok_or_else(bad)?;
                Ok(SurfacePoint::Face {
                    face: f.parse().map_err(|_| bad())?,
                    x: x.parse().map_err(|_| bad())?,
                    y: y.parse().map_err(|_| bad())?,
                })
            }
            _ => Err(bad()),
        }
    }
}

impl SurfacePoint {
    pub fn vertex(id: VertexId) -> Self {
        SurfacePoint::Vertex { id }
    }

    pub fn as_vertex(&self) -> Option<VertexId> {
        match *self {
            SurfacePoint::Vertex { id } => Some(id),
            _ => None,
        }
    }

    pub fn is_vertex(&self) -> bool {
        matches!(self, SurfacePoint::Vertex { .. })
    }
}

impl PolyhedralSurface {
    /// Total angle around a point: the cone angle at vertices, 2π elsewhere.
    pub fn total_angle(&self, p: &SurfacePoint) -> f64 {
        match *p {
            SurfacePoint::Vertex { id } => self.cone_angle(id),
            _ => TAU,
        }
    }

    /// Every face containing `p`, with the point's chart coordinates there.
    /// Ordered by face id.
    pub fn charts_of(&self, p: &SurfacePoint) -> Vec<(FaceId, P2)> {
        match *p {
            SurfacePoint::Vertex { id } => {
                let mut out: Vec<(FaceId, P2)> = self
                    .star(id)
                    .corners
                    .iter()
                    .map(|c| (c.face, self.face(c.face).corners[c.corner]))
                    .collect();
                out.sort_by_key(|(f, _)| *f);
                out
            }
            SurfacePoint::Edge { edge, t } => {
                let e = self.edge(edge);
                e.sides
                    .iter()
                    .map(|&(f, side)| {
                        let face = self.face(f);
                        let (a, b) = face.side(side);
                        // Side runs between lo and hi in one of the two directions.
                        let (va, _) = face.side_vertices(side);
                        let p = if va == e.lo {
                            a + (b - a) * t
                        } else {
                            b + (a - b) * t
                        };
                        (f, p)
                    })
                    .collect()
            }
            SurfacePoint::Face { face, x, y } => vec![(face, P2::new(x, y))],
        }
    }

    /// Chart coordinates of `p` in face `f`, if `f` contains it.
    pub fn position_in(&self, p: &SurfacePoint, f: FaceId) -> Option<P2> {
        self.charts_of(p)
            .into_iter()
            .find(|(g, _)| *g == f)
            .map(|(_, q)| q)
    }

    /// Canonical point for chart coordinates `q` in face `f`. Points within
    /// `eps` of a corner become vertices, within `eps` of a side become edge
    /// points; `q` is assumed to lie in the closed face up to `eps`.
    pub fn locate(&self, f: FaceId, q: &P2, eps: f64) -> SurfacePoint {
        let face = self.face(f);
        if let Some(i) = (0..face.len()).find(|&i| (face.corners[i] - q).norm() <= eps) {
            return SurfacePoint::Vertex {
                id: face.vertices[i],
            };
        }
        for i in 0..face.len() {
            let (a, b) = face.side(i);
            if point_segment_distance(q, &a, &b) <= eps {
                let (va, vb) = face.side_vertices(i);
                let e = self.edge_between(va, vb).expect("side is an edge");
                let s = ((q - a).dot(&(b - a)) / (b - a).norm_squared()).clamp(0.0, 1.0);
                let t = if va == self.edge(e).lo { s } else { 1.0 - s };
                return SurfacePoint::Edge { edge: e, t };
            }
        }
        SurfacePoint::Face {
            face: f,
            x: q.x,
            y: q.y,
        }
    }

    /// Re-canonicalize a point (e.g. a hand-written face point on a side).
    pub fn canonicalize(&self, p: &SurfacePoint, eps: f64) -> SurfacePoint {
        match *p {
            SurfacePoint::Vertex { .. } => *p,
            SurfacePoint::Edge { edge, t } => {
                let e = self.edge(edge);
                let len = self.edge_length();
                if t * len <= eps {
                    SurfacePoint::Vertex { id: e.lo }
                } else if (1.0 - t) * len <= eps {
                    SurfacePoint::Vertex { id: e.hi }
                } else {
                    *p
                }
            }
            SurfacePoint::Face { face, x, y } => self.locate(face, &P2::new(x, y), eps),
        }
    }

    /// Whether the point is a valid location (ids in range, parameters inside).
    pub fn is_valid_point(&self, p: &SurfacePoint) -> bool {
        match *p {
            SurfacePoint::Vertex { id } => id < self.vertex_count(),
            SurfacePoint::Edge { edge, t } => edge < self.edges().len() && t > 0.0 && t < 1.0,
            SurfacePoint::Face { face, x, y } => {
                face < self.faces().len()
                    && crate::planar::convex_contains(&self.face(face).corners, &P2::new(x, y), 0.0)
            }
        }
    }

    /// Approximate equality: same canonical kind and ids, coordinates within `eps`.
    pub fn same_point(&self, a: &SurfacePoint, b: &SurfacePoint, eps: f64) -> bool {
        let a = self.canonicalize(a, eps);
        let b = self.canonicalize(b, eps);
        match (a, b) {
            (SurfacePoint::Vertex { id: x }, SurfacePoint::Vertex { id: y }) => x == y,
            (SurfacePoint::Edge { edge: e1, t: t1 }, SurfacePoint::Edge { edge: e2, t: t2 }) => {
                e1 == e2 && (t1 - t2).abs() * self.edge_length() <= eps
            }
            (
                SurfacePoint::Face {
                    face: f1,
                    x: x1,
                    y: y1,
                },
                SurfacePoint::Face {
                    face: f2,
                    x: x2,
                    y: y2,
                },
            ) => f1 == f2 && (x1 - x2).hypot(y1 - y2) <= eps,
            _ => false,
        }
    }

    /// 3D position of a point in the documentation embedding, when available.
    pub fn embed(&self, p: &SurfacePoint) -> Option<[f64; 3]> {
        let pos = self.positions()?;
        let (f, q) = self.charts_of(p).into_iter().next()?;
        let face = self.face(f);
        // Affine map from chart to space using corners 0, 1 and the last corner.
        let c0 = face.corners[0];
        let u = face.corners[1] - c0;
        let w = face.corners[face.len() - 1] - c0;
        let det = u.x * w.y - u.y * w.x;
        let d = q - c0;
        let a = (d.x * w.y - d.y * w.x) / det;
        let b = (u.x * d.y - u.y * d.x) / det;
        let p0 = pos[face.vertices[0]];
        let p1 = pos[face.vertices[1]];
        let pn = pos[face.vertices[face.len() - 1]];
        Some([0, 1, 2].map(|k| p0[k] + a * (p1[k] - p0[k]) + b * (pn[k] - p0[k])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::build_cuboctahedron;

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["v3", "e5:0.25", "f2:0.5,0.125"] {
            let p: SurfacePoint = text.parse().unwrap();
            assert_eq!(p.to_string(), text);
        }
        assert!("x1".parse::<SurfacePoint>().is_err());
        assert!("e1".parse::<SurfacePoint>().is_err());
    }

    #[test]
    fn locate_snaps_to_corners_and_sides() {
        let s = build_cuboctahedron(1.0).unwrap();
        let f = s.face(0);
        assert_eq!(
            s.locate(0, &f.corners[2], 1e-9),
            SurfacePoint::Vertex { id: f.vertices[2] }
        );
        let mid = P2::new(0.5, 0.0);
        match s.locate(0, &mid, 1e-9) {
            SurfacePoint::Edge { t, .. } => assert!((t - 0.5).abs() < 1e-15),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            s.locate(0, &P2::new(0.5, 0.5), 1e-9),
            SurfacePoint::Face { face: 0, .. }
        ));
    }

    #[test]
    fn edge_point_charts_agree_through_gluing() {
        let s = build_cuboctahedron(1.0).unwrap();
        for e in s.edges() {
            let p = SurfacePoint::Edge { edge: e.id, t: 0.3 };
            let charts = s.charts_of(&p);
            assert_eq!(charts.len(), 2);
            let (f, side) = e.sides[0];
            let gl = s.gluing(f, side);
            let q = s.position_in(&p, gl.face).unwrap();
            let mapped = gl.partner_to_self.transform_point(&q);
            assert!((mapped - s.position_in(&p, f).unwrap()).norm() < 1e-12);
            // Both charts locate back to the same canonical point.
            for (g, q) in charts {
                assert!(s.same_point(&s.locate(g, &q, 1e-9), &p, 1e-12));
            }
        }
    }

    #[test]
    fn embedding_maps_edge_midpoints_consistently() {
        let s = build_cuboctahedron(1.0).unwrap();
        let pos = s.positions().unwrap();
        for e in s.edges() {
            let m = s.embed(&SurfacePoint::Edge { edge: e.id, t: 0.5 }).unwrap();
            for k in 0..3 {
                assert!((m[k] - 0.5 * (pos[e.lo][k] + pos[e.hi][k])).abs() < 1e-12);
            }
        }
    }
}
