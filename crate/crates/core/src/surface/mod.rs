//! Convex polyhedral surfaces as planar faces glued along their edges.
//!
//! Every face carries its own planar chart (a regular polygon with the first
//! corner at the origin and the first side along the +x axis, corners listed
//! counter-clockwise as seen from outside). Edge gluings are rigid motions
//! between neighbouring charts, so all metric questions can be answered
//! intrinsically. A 3D embedding is kept only for documentation output.

mod point;
mod symmetry;

pub use point::SurfacePoint;
pub use symmetry::VertexPermutation;

use crate::planar::{ccw_angle, P2};
use nalgebra::{Isometry2, Translation2, UnitComplex};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::f64::consts::PI;
use thiserror::Error;

pub type VertexId = usize;
pub type FaceId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceShape {
    Triangle,
    Square,
}

impl FaceShape {
    pub fn corner_count(self) -> usize {
        match self {
            FaceShape::Triangle => 3,
            FaceShape::Square => 4,
        }
    }

    pub fn corner_angle(self) -> f64 {
        match self {
            FaceShape::Triangle => PI / 3.0,
            FaceShape::Square => PI / 2.0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Face {
    pub id: FaceId,
    pub shape: FaceShape,
    /// Vertex cycle, counter-clockwise seen from outside.
    pub vertices: Vec<VertexId>,
    /// Planar chart coordinates of the corners, same order as `vertices`.
    pub corners: Vec<P2>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn corner_of(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    /// Side `i` runs from corner `i` to corner `i + 1`.
    pub fn side(&self, i: usize) -> (P2, P2) {
        let n = self.len();
        (self.corners[i], self.corners[(i + 1) % n])
    }

    pub fn side_vertices(&self, i: usize) -> (VertexId, VertexId) {
        let n = self.len();
        (self.vertices[i], self.vertices[(i + 1) % n])
    }
}

/// Undirected skeleton edge; `lo < hi`.
#[derive(Debug, Clone)]
pub struct Edge {
    pub id: EdgeId,
    pub lo: VertexId,
    pub hi: VertexId,
    /// The two (face, side) incidences, ordered by face id.
    pub sides: [(FaceId, usize); 2],
}

/// Gluing of one directed face side to its partner.
#[derive(Debug, Clone)]
pub struct Gluing {
    pub face: FaceId,
    pub side: usize,
    /// Rigid motion taking the partner's chart into this face's chart so that
    /// the shared side coincides pointwise.
    pub partner_to_self: Isometry2<f64>,
}

/// One face corner in a vertex star.
#[derive(Debug, Clone)]
pub struct StarCorner {
    pub face: FaceId,
    pub corner: usize,
    pub angle: f64,
    /// Fan coordinate at which this corner starts (its outgoing side).
    pub offset: f64,
}

/// Cyclic fan of face corners around a vertex, counter-clockwise, starting at
/// the corner whose outgoing side is the lowest-id incident edge.
#[derive(Debug, Clone)]
pub struct VertexStar {
    pub vertex: VertexId,
    pub corners: Vec<StarCorner>,
    pub cone_angle: f64,
    pub reference_edge: EdgeId,
}

#[derive(Debug, Error, PartialEq)]
pub enum SurfaceError {
    #[error("edge length must be positive, got {0}")]
    EdgeLength(f64),
    #[error("face ids must be 0..n in order; found id {found} at position {position}")]
    FaceIds { position: usize, found: usize },
    #[error("face {face}: shape {shape:?} needs {expected} vertices, got {got}")]
    FaceArity {
        face: FaceId,
        shape: FaceShape,
        expected: usize,
        got: usize,
    },
    #[error("vertex ids must be contiguous from 0; vertex {0} is never used")]
    VertexIds(VertexId),
    #[error("directed side {0}->{1} appears twice (inconsistent orientation or non-manifold)")]
    DuplicateSide(VertexId, VertexId),
    #[error("side {0}->{1} has no partner")]
    UnmatchedSide(VertexId, VertexId),
    #[error("vertex {0} does not have a single disc-like star")]
    BadStar(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("surface has no central symmetry")]
    NoCentralSymmetry,
    #[error("invalid surface json: {0}")]
    Json(String),
}

/// Face description used for construction and (de)serialization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceSpec {
    pub id: FaceId,
    pub vertices: Vec<VertexId>,
    pub shape: FaceShape,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceJson {
    pub faces: Vec<FaceSpec>,
    pub edge_length: f64,
}

#[derive(Debug, Clone)]
pub struct PolyhedralSurface {
    edge_length: f64,
    faces: Vec<Face>,
    edges: Vec<Edge>,
    gluings: Vec<Vec<Gluing>>,
    stars: Vec<VertexStar>,
    adjacency: Vec<Vec<VertexId>>,
    edge_index: HashMap<(VertexId, VertexId), EdgeId>,
    side_index: HashMap<(VertexId, VertexId), (FaceId, usize)>,
    positions: Option<Vec<[f64; 3]>>,
}

fn regular_polygon(shape: FaceShape, edge_length: f64) -> Vec<P2> {
    let n = shape.corner_count();
    let turn = 2.0 * PI / n as f64;
    let mut pts = Vec::with_capacity(n);
    let mut p = P2::new(0.0, 0.0);
    for i in 0..n {
        pts.push(p);
        let a = turn * i as f64;
        p += nalgebra::Vector2::new(a.cos(), a.sin()) * edge_length;
    }
    // Exact values for the square keep the charts free of rounding noise.
    if shape == FaceShape::Square {
        pts = vec![
            P2::new(0.0, 0.0),
            P2::new(edge_length, 0.0),
            P2::new(edge_length, edge_length),
            P2::new(0.0, edge_length),
        ];
    }
    pts
}

impl PolyhedralSurface {
    /// Glue regular polygons of the given edge length into a closed surface.
    pub fn from_faces(edge_length: f64, specs: &[FaceSpec]) -> Result<Self, SurfaceError> {
        if !(edge_length > 0.0 && edge_length.is_finite()) {
            return Err(SurfaceError::EdgeLength(edge_length));
        }
        let mut specs: Vec<FaceSpec> = specs.to_vec();
        specs.sort_by_key(|s| s.id);
        for (i, s) in specs.iter().enumerate() {
            if s.id != i {
                return Err(SurfaceError::FaceIds {
                    position: i,
                    found: s.id,
                });
            }
            let expected = s.shape.corner_count();
            if s.vertices.len() != expected {
                return Err(SurfaceError::FaceArity {
                    face: s.id,
                    shape: s.shape,
                    expected,
                    got: s.vertices.len(),
                });
            }
        }
        let n_vertices = specs
            .iter()
            .flat_map(|s| s.vertices.iter())
            .max()
            .map_or(0, |m| m + 1);
        let mut used = vec![false; n_vertices];
        specs
            .iter()
            .flat_map(|s| s.vertices.iter())
            .for_each(|&v| used[v] = true);
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(SurfaceError::VertexIds(v));
        }

        let faces: Vec<Face> = specs
            .iter()
            .map(|s| Face {
                id: s.id,
                shape: s.shape,
                vertices: s.vertices.clone(),
                corners: regular_polygon(s.shape, edge_length),
            })
            .collect();

        let mut side_index = HashMap::new();
        for f in &faces {
            for i in 0..f.len() {
                let key = f.side_vertices(i);
                if side_index.insert(key, (f.id, i)).is_some() {
                    return Err(SurfaceError::DuplicateSide(key.0, key.1));
                }
            }
        }
        let mut undirected: BTreeMap<(VertexId, VertexId), [(FaceId, usize); 2]> = BTreeMap::new();
        for (&(a, b), &(f, i)) in &side_index {
            let &(g, j) = side_index
                .get(&(b, a))
                .ok_or(SurfaceError::UnmatchedSide(a, b))?;
            if a < b {
                let mut sides = [(f, i), (g, j)];
                sides.sort();
                undirected.insert((a, b), sides);
            }
        }
        let edges: Vec<Edge> = undirected
            .iter()
            .enumerate()
            .map(|(id, (&(lo, hi), &sides))| Edge { id, lo, hi, sides })
            .collect();
        let edge_index: HashMap<(VertexId, VertexId), EdgeId> = edges
            .iter()
            .flat_map(|e| [((e.lo, e.hi), e.id), ((e.hi, e.lo), e.id)])
            .collect();

        let gluings: Vec<Vec<Gluing>> = faces
            .iter()
            .map(|f| {
                (0..f.len())
                    .map(|i| {
                        let (a, b) = f.side_vertices(i);
                        let (g, j) = side_index[&(b, a)];
                        let gf = &faces[g];
                        // In g the side runs b -> a.
                        let (pa, pb) = f.side(i);
                        let (qb, qa) = gf.side(j);
                        let rot = ccw_angle(&(qa - qb), &(pa - pb));
                        let r = UnitComplex::new(rot);
                        let t = pb.coords - r.transform_vector(&qb.coords);
                        Gluing {
                            face: g,
                            side: j,
                            partner_to_self: Isometry2::from_parts(Translation2::from(t), r),
                        }
                    })
                    .collect()
            })
            .collect();

        let mut adjacency = vec![Vec::new(); n_vertices];
        for e in &edges {
            adjacency[e.lo].push(e.hi);
            adjacency[e.hi].push(e.lo);
        }
        adjacency.iter_mut().for_each(|a| a.sort_unstable());

        let mut surface = Self {
            edge_length,
            faces,
            edges,
            gluings,
            stars: Vec::new(),
            adjacency,
            edge_index,
            side_index,
            positions: None,
        };
        surface.stars = (0..n_vertices)
            .map(|v| surface.build_star(v))
            .collect::<Result<_, _>>()?;
        Ok(surface)
    }

    fn build_star(&self, v: VertexId) -> Result<VertexStar, SurfaceError> {
        let reference_edge = self.adjacency[v]
            .iter()
            .map(|&w| self.edge_index[&(v, w)])
            .min()
            .ok_or(SurfaceError::BadStar(v))?;
        let e = &self.edges[reference_edge];
        let w = if e.lo == v { e.hi } else { e.lo };
        let (mut face, _) = self.side_index[&(v, w)];
        let total: usize = self
            .faces
            .iter()
            .filter(|f| f.corner_of(v).is_some())
            .count();
        let mut corners = Vec::new();
        let mut offset = 0.0;
        loop {
            let f = &self.faces[face];
            let corner = f.corner_of(v).ok_or(SurfaceError::BadStar(v))?;
            let angle = f.shape.corner_angle();
            corners.push(StarCorner {
                face,
                corner,
                angle,
                offset,
            });
            offset += angle;
            // Counter-clockwise neighbour: across the incoming side prev -> v.
            let prev = f.vertices[(corner + f.len() - 1) % f.len()];
            let (next_face, _) = self.side_index[&(v, prev)];
            face = next_face;
            if face == corners[0].face {
                break;
            }
            if corners.len() > total {
                return Err(SurfaceError::BadStar(v));
            }
        }
        if corners.len() != total {
            return Err(SurfaceError::BadStar(v));
        }
        Ok(VertexStar {
            vertex: v,
            corners,
            cone_angle: offset,
            reference_edge,
        })
    }

    pub fn edge_length(&self) -> f64 {
        self.edge_length
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn star(&self, v: VertexId) -> &VertexStar {
        &self.stars[v]
    }

    pub fn stars(&self) -> &[VertexStar] {
        &self.stars
    }

    pub fn cone_angle(&self, v: VertexId) -> f64 {
        self.stars[v].cone_angle
    }

    pub fn neighbours(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.edge_index.get(&(a, b)).copied()
    }

    /// Face and side index of the directed side `a -> b`.
    pub fn directed_side(&self, a: VertexId, b: VertexId) -> Option<(FaceId, usize)> {
        self.side_index.get(&(a, b)).copied()
    }

    pub fn gluing(&self, f: FaceId, side: usize) -> &Gluing {
        &self.gluings[f][side]
    }

    /// Side of `f` shared with `g`, if the faces are glued along a side.
    pub fn shared_side(&self, f: FaceId, g: FaceId) -> Option<usize> {
        self.gluings[f].iter().position(|gl| gl.face == g)
    }

    pub fn positions(&self) -> Option<&[[f64; 3]]> {
        self.positions.as_deref()
    }

    pub fn area(&self) -> f64 {
        let l2 = self.edge_length * self.edge_length;
        self.faces
            .iter()
            .map(|f| match f.shape {
                FaceShape::Triangle => l2 * 3f64.sqrt() / 4.0,
                FaceShape::Square => l2,
            })
            .sum()
    }

    /// Breadth-first distances in the 1-skeleton from `v`.
    pub fn skeleton_distances_from(&self, v: VertexId) -> Result<Vec<usize>, SurfaceError> {
        if v >= self.vertex_count() {
            return Err(SurfaceError::UnknownVertex(v));
        }
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adjacency[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        Ok(dist)
    }

    pub fn skeleton_distance(&self, v: VertexId, w: VertexId) -> Result<usize, SurfaceError> {
        if w >= self.vertex_count() {
            return Err(SurfaceError::UnknownVertex(w));
        }
        Ok(self.skeleton_distances_from(v)?[w])
    }

    /// Whether `a` and `b` are opposite corners of a square face.
    pub fn is_square_diagonal(&self, a: VertexId, b: VertexId) -> bool {
        self.faces.iter().any(|f| {
            f.shape == FaceShape::Square
                && matches!((f.corner_of(a), f.corner_of(b)), (Some(i), Some(j)) if (i + 2) % 4 == j)
        })
    }

    pub fn to_json(&self) -> SurfaceJson {
        SurfaceJson {
            faces: self
                .faces
                .iter()
                .map(|f| FaceSpec {
                    id: f.id,
                    vertices: f.vertices.clone(),
                    shape: f.shape,
                })
                .collect(),
            edge_length: self.edge_length,
        }
    }

    pub fn from_json(json: &SurfaceJson) -> Result<Self, SurfaceError> {
        Self::from_faces(json.edge_length, &json.faces)
    }

    pub fn from_json_str(text: &str) -> Result<Self, SurfaceError> {
        let json: SurfaceJson =
            serde_json::from_str(text).map_err(|e| SurfaceError::Json(e.to_string()))?;
        Self::from_json(&json)
    }
}

/// Unit-scale cuboctahedron vertex directions, `(±1, ±1, 0)` and permutations.
pub(crate) const CUBOCTAHEDRON_DIRECTIONS: [[i8; 3]; 12] = [
    [1, 1, 0],
    [1, -1, 0],
    [-1, 1, 0],
    [-1, -1, 0],
    [1, 0, 1],
    [1, 0, -1],
    [-1, 0, 1],
    [-1, 0, -1],
    [0, 1, 1],
    [0, 1, -1],
    [0, -1, 1],
    [0, -1, -1],
];

/// The cuboctahedral surface with the given edge length.
///
/// Vertex `i` sits at `CUBOCTAHEDRON_DIRECTIONS[i] * edge_length / √2`.
/// Faces 0..6 are the squares (normals +x, -x, +y, -y, +z, -z), faces
/// 6..14 the triangles, one per octant.
pub fn build_cuboctahedron(edge_length: f64) -> Result<PolyhedralSurface, SurfaceError> {
    let dirs = CUBOCTAHEDRON_DIRECTIONS;
    let mut face_sets: Vec<(FaceShape, [f64; 3], Vec<VertexId>)> = Vec::new();
    for axis in 0..3 {
        for sign in [1i8, -1] {
            let members: Vec<VertexId> = (0..12).filter(|&v| dirs[v][axis] == sign).collect();
            let mut normal = [0.0; 3];
            normal[axis] = sign as f64;
            face_sets.push((FaceShape::Square, normal, members));
        }
    }
    for sx in [1i8, -1] {
        for sy in [1i8, -1] {
            for sz in [1i8, -1] {
                let s = [sx, sy, sz];
                let members: Vec<VertexId> = (0..12)
                    .filter(|&v| (0..3).all(|k| dirs[v][k] == 0 || dirs[v][k] == s[k]))
                    .collect();
                face_sets.push((
                    FaceShape::Triangle,
                    [sx as f64, sy as f64, sz as f64],
                    members,
                ));
            }
        }
    }
    let pos =
        |v: VertexId| -> [f64; 3] { [dirs[v][0] as f64, dirs[v][1] as f64, dirs[v][2] as f64] };
    let specs: Vec<FaceSpec> = face_sets
        .into_iter()
        .enumerate()
        .map(|(id, (shape, n, members))| {
            let c: [f64; 3] = {
                let mut c = [0.0; 3];
                for &v in &members {
                    let p = pos(v);
                    (0..3).for_each(|k| c[k] += p[k] / members.len() as f64);
                }
                c
            };
            let u = {
                let p = pos(members[0]);
                [p[0] - c[0], p[1] - c[1], p[2] - c[2]]
            };
            let w = [
                n[1] * u[2] - n[2] * u[1],
                n[2] * u[0] - n[0] * u[2],
                n[0] * u[1] - n[1] * u[0],
            ];
            let dot = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
            let mut ordered: Vec<(f64, VertexId)> = members
                .iter()
                .map(|&v| {
                    let p = pos(v);
                    let d = [p[0] - c[0], p[1] - c[1], p[2] - c[2]];
                    (dot(d, w).atan2(dot(d, u)).rem_euclid(2.0 * PI), v)
                })
                .collect();
            ordered.sort_by(|a, b| a.0.total_cmp(&b.0));
            let mut vertices: Vec<VertexId> = ordered.into_iter().map(|(_, v)| v).collect();
            let start = vertices
                .iter()
                .enumerate()
                .min_by_key(|(_, &v)| v)
                .map(|(i, _)| i)
                .unwrap_or(0);
            vertices.rotate_left(start);
            FaceSpec {
                id,
                vertices,
                shape,
            }
        })
        .collect();
    let mut s = PolyhedralSurface::from_faces(edge_length, &specs)?;
    let scale = edge_length / 2f64.sqrt();
    s.positions = Some((0..12).map(|v| pos(v).map(|x| x * scale)).collect());
    Ok(s)
}

/// Unit-cube surface (8 vertices at the binary corners, 6 squares). A second
/// convex surface for exercising the engine away from the cuboctahedron.
pub fn build_cube(edge_length: f64) -> Result<PolyhedralSurface, SurfaceError> {
    let quads = [
        vec![0, 2, 3, 1],
        vec![4, 5, 7, 6],
        vec![0, 1, 5, 4],
        vec![2, 6, 7, 3],
        vec![0, 4, 6, 2],
        vec![1, 3, 7, 5],
    ];
    let specs: Vec<FaceSpec> = quads
        .into_iter()
        .enumerate()
        .map(|(id, vertices)| FaceSpec {
            id,
            vertices,
            shape: FaceShape::Square,
        })
        .collect();
    let mut s = PolyhedralSurface::from_faces(edge_length, &specs)?;
    s.positions = Some(
        (0..8)
            .map(|v| {
                [(v & 1) as f64, ((v >> 1) & 1) as f64, ((v >> 2) & 1) as f64]
                    .map(|x| x * edge_length)
            })
            .collect(),
    );
    Ok(s)
}

/// Regular tetrahedron surface; it has no central symmetry.
pub fn build_tetrahedron(edge_length: f64) -> Result<PolyhedralSurface, SurfaceError> {
    let tris = [vec![0, 1, 2], vec![0, 3, 1], vec![0, 2, 3], vec![1, 3, 2]];
    let specs: Vec<FaceSpec> = tris
        .into_iter()
        .enumerate()
        .map(|(id, vertices)| FaceSpec {
            id,
            vertices,
            shape: FaceShape::Triangle,
        })
        .collect();
    PolyhedralSurface::from_faces(edge_length, &specs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn unit_cuboctahedron_counts_and_cone_angles() {
        let s = build_cuboctahedron(1.0).unwrap();
        assert_eq!(s.vertex_count(), 12);
        assert_eq!(s.edges().len(), 24);
        assert_eq!(s.faces().len(), 14);
        assert_eq!(
            s.faces()
                .iter()
                .filter(|f| f.shape == FaceShape::Square)
                .count(),
            6
        );
        for v in 0..12 {
            assert!((s.cone_angle(v) - 5.0 * PI / 3.0).abs() < 1e-12);
            assert_eq!(s.neighbours(v).len(), 4);
        }
        // Every edge separates a triangle from a square.
        for e in s.edges() {
            let shapes = e.sides.map(|(f, _)| s.face(f).shape);
            assert_ne!(shapes[0], shapes[1]);
        }
    }

    #[test]
    fn gluings_are_involutions_and_match_sides() {
        let s = build_cuboctahedron(1.0).unwrap();
        for f in s.faces() {
            for i in 0..f.len() {
                let gl = s.gluing(f.id, i);
                let back = s.gluing(gl.face, gl.side);
                assert_eq!((back.face, back.side), (f.id, i));
                let (pa, pb) = f.side(i);
                let (qb, qa) = s.face(gl.face).side(gl.side);
                let ma = gl.partner_to_self.transform_point(&qa);
                let mb = gl.partner_to_self.transform_point(&qb);
                assert!((ma - pa).norm() < 1e-12 && (mb - pb).norm() < 1e-12);
                // Partner lands on the other side of the shared edge.
                let far = s.face(gl.face).corners[(gl.side + 2) % s.face(gl.face).len()];
                let far = gl.partner_to_self.transform_point(&far);
                assert!(crate::planar::orient(&pa, &pb, &far) < 0.0);
            }
        }
    }

    #[test]
    fn star_walk_closes_with_cone_angle() {
        let s = build_cuboctahedron(1.0).unwrap();
        for star in s.stars() {
            let sum: f64 = star.corners.iter().map(|c| c.angle).sum();
            assert!((sum - star.cone_angle).abs() < 1e-12);
            assert_eq!(star.corners.len(), 4);
            let first = &star.corners[0];
            let f = s.face(first.face);
            let next = f.vertices[(first.corner + 1) % f.len()];
            assert_eq!(s.edge_between(star.vertex, next), Some(star.reference_edge));
        }
    }

    #[test]
    fn total_curvature_is_four_pi() {
        let s = build_cuboctahedron(1.0).unwrap();
        let k: f64 = (0..12).map(|v| 2.0 * PI - s.cone_angle(v)).sum();
        assert!((k - 4.0 * PI).abs() < 1e-9);
    }

    #[test]
    fn scaled_area_matches_closed_form() {
        let s = build_cuboctahedron(2.0).unwrap();
        // Six squares of side 2 plus eight equilateral triangles of side 2.
        let oracle = 6.0 * 4.0 + 8.0 * (3f64.sqrt() / 4.0) * 4.0;
        assert!((s.area() - oracle).abs() < 1e-12);
        assert!((s.area() - 4.0 * (6.0 + 2.0 * 3f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            build_cuboctahedron(0.0).unwrap_err(),
            SurfaceError::EdgeLength(0.0)
        );
        let open = vec![FaceSpec {
            id: 0,
            vertices: vec![0, 1, 2],
            shape: FaceShape::Triangle,
        }];
        assert!(matches!(
            PolyhedralSurface::from_faces(1.0, &open),
            Err(SurfaceError::UnmatchedSide(..))
        ));
        let arity = vec![FaceSpec {
            id: 0,
            vertices: vec![0, 1],
            shape: FaceShape::Triangle,
        }];
        assert!(matches!(
            PolyhedralSurface::from_faces(1.0, &arity),
            Err(SurfaceError::FaceArity { .. })
        ));
    }

    #[test]
    fn shell_sizes_are_4_6_1() {
        let s = build_cuboctahedron(1.0).unwrap();
        for v in 0..12 {
            let d = s.skeleton_distances_from(v).unwrap();
            let shell = |k| d.iter().filter(|&&x| x == k).count();
            assert_eq!((shell(0), shell(1), shell(2), shell(3)), (1, 4, 6, 1));
            let diagonals = (0..12).filter(|&w| s.is_square_diagonal(v, w)).count();
            assert_eq!(diagonals, 2);
        }
        assert_eq!(s.skeleton_distance(0, 0), Ok(0));
        assert_eq!(
            s.skeleton_distance(0, 99),
            Err(SurfaceError::UnknownVertex(99))
        );
        let sq = &s.faces()[0];
        assert_eq!(s.skeleton_distance(sq.vertices[0], sq.vertices[1]), Ok(1));
    }

    #[test]
    fn json_round_trip_rebuilds_same_surface() {
        let s = build_cuboctahedron(1.0).unwrap();
        let text = serde_json::to_string(&s.to_json()).unwrap();
        let t = PolyhedralSurface::from_json_str(&text).unwrap();
        assert_eq!(t.to_json(), s.to_json());
        assert!(PolyhedralSurface::from_json_str("{\"faces\":1}").is_err());
    }

    #[test]
    fn cube_has_three_quarter_cones() {
        let c = build_cube(1.0).unwrap();
        assert_eq!(c.vertex_count(), 8);
        for v in 0..8 {
            assert!((c.cone_angle(v) - 1.5 * PI).abs() < 1e-12);
        }
    }
}
