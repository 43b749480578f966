use super::model::{GeodesicTriangulation, TriEdge, TriangulationError};
use crate::geodesic::{
    segments_intersect, shortest_geodesics, GeodesicSegment, Intersection, DEFAULT_MAX_FACES,
};
use crate::surface::{FaceId, FaceShape, PolyhedralSurface, SurfacePoint, VertexId};
use crate::tolerance::Tolerances;
use std::collections::BTreeSet;

fn fail(msg: impl Into<String>) -> TriangulationError {
    TriangulationError::Construction(msg.into())
}

fn geodesics(
    s: &PolyhedralSurface,
    p: &SurfacePoint,
    q: &SurfacePoint,
    tol: &Tolerances,
) -> Result<Vec<GeodesicSegment>, TriangulationError> {
    shortest_geodesics(s, p, q, DEFAULT_MAX_FACES, tol)
        .map_err(|e| fail(format!("{p} -> {q}: {e}")))
}

/// Lowest-id face whose interior `all[chosen]` meets and no other tie does.
fn witness_face(
    s: &PolyhedralSurface,
    all: &[GeodesicSegment],
    chosen: usize,
    tol: &Tolerances,
) -> Result<Option<FaceId>, TriangulationError> {
    if all.len() == 1 {
        return Ok(None);
    }
    let others: BTreeSet<FaceId> = all
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != chosen)
        .flat_map(|(_, g)| g.interior_faces(tol.eps_len, s))
        .collect();
    all[chosen]
        .interior_faces(tol.eps_len, s)
        .into_iter()
        .find(|f| !others.contains(f))
        .map(Some)
        .ok_or_else(|| fail("tied geodesics cannot be told apart by a face"))
}

/// Edge between two construction vertices, requiring a unique geodesic.
fn unique_edge(
    s: &PolyhedralSurface,
    vertices: &[SurfacePoint],
    a: usize,
    b: usize,
    tol: &Tolerances,
) -> Result<TriEdge, TriangulationError> {
    let all = geodesics(s, &vertices[a], &vertices[b], tol)?;
    if all.len() != 1 {
        return Err(fail(format!(
            "{} shortest geodesics between {} and {}",
            all.len(),
            vertices[a],
            vertices[b]
        )));
    }
    Ok(TriEdge {
        a,
        b,
        witness_face: None,
    })
}

fn edge_index(edges: &[TriEdge], a: usize, b: usize) -> usize {
    edges
        .iter()
        .position(|e| (e.a == a && e.b == b) || (e.a == b && e.b == a))
        .expect("edge was created for every triangle side")
}

fn triangles_from(edges: &[TriEdge], corners: &[[usize; 3]]) -> Vec<[usize; 3]> {
    corners
        .iter()
        .map(|&[x, y, z]| {
            [
                edge_index(edges, x, y),
                edge_index(edges, y, z),
                edge_index(edges, z, x),
            ]
        })
        .collect()
}

/// The eight-triangle non-obtuse triangulation built on the diagonal of the
/// lowest-id square face.
pub fn construct_nonobtuse8(
    s: &PolyhedralSurface,
    tol: &Tolerances,
) -> Result<GeodesicTriangulation, TriangulationError> {
    let square = s
        .faces()
        .iter()
        .find(|f| f.shape == FaceShape::Square)
        .ok_or_else(|| fail("surface has no square face"))?;
    construct_nonobtuse8_from(s, square.vertices[0], square.vertices[2], tol)
}

/// Non-obtuse triangulation from a square diagonal `a b`: the triangle,
/// square, triangle geodesics from `a` and `b` to their antipodes cross
/// at right angles in two points `c`, `c'`, and the four square diagonals
/// `a b`, `a b'`, `a' b`, `a' b'` complete eight congruent triangles.
pub fn construct_nonobtuse8_from(
    s: &PolyhedralSurface,
    a: VertexId,
    b: VertexId,
    tol: &Tolerances,
) -> Result<GeodesicTriangulation, TriangulationError> {
    if !s.is_square_diagonal(a, b) {
        return Err(fail(format!(
            "v{a} and v{b} are not opposite corners of a square"
        )));
    }
    let a2 = s.antipode(a).map_err(|e| fail(e.to_string()))?;
    let b2 = s.antipode(b).map_err(|e| fail(e.to_string()))?;
    let belt = |x: VertexId, y: VertexId| -> Result<Vec<GeodesicSegment>, TriangulationError> {
        let all = geodesics(s, &SurfacePoint::vertex(x), &SurfacePoint::vertex(y), tol)?;
        let shapes = [FaceShape::Triangle, FaceShape::Square, FaceShape::Triangle];
        Ok(all
            .into_iter()
            .filter(|g| {
                g.faces()
                    .iter()
                    .map(|&f| s.face(f).shape)
                    .eq(shapes.iter().copied())
            })
            .collect())
    };
    let ga = belt(a, a2)?;
    let gb = belt(b, b2)?;
    let mut crossings: Vec<SurfacePoint> = Vec::new();
    for x in &ga {
        for y in &gb {
            if let Intersection::Crossing(p) = segments_intersect(s, x, y, tol.eps_len) {
                if !crossings.iter().any(|q| s.same_point(q, &p, tol.eps_len)) {
                    crossings.push(p);
                }
            }
        }
    }
    if crossings.len() != 2 {
        return Err(fail(format!(
            "expected two crossings of the chosen geodesics, found {}",
            crossings.len()
        )));
    }
    crossings.sort_by_key(|p| s.charts_of(p).first().map(|(f, _)| *f));
    let vertices = vec![
        SurfacePoint::vertex(a),
        SurfacePoint::vertex(b),
        SurfacePoint::vertex(a2),
        SurfacePoint::vertex(b2),
        crossings[0],
        crossings[1],
    ];
    let (va, vb, va2, vb2, vc, vc2) = (0, 1, 2, 3, 4, 5);
    let corners = [
        [va, vb, vc],
        [va, vb2, vc],
        [va, vb, vc2],
        [va, vb2, vc2],
        [va2, vb, vc],
        [va2, vb2, vc],
        [va2, vb, vc2],
        [va2, vb2, vc2],
    ];
    let mut edges = Vec::new();
    for &[x, y, z] in &corners {
        for (p, q) in [(x, y), (y, z), (z, x)] {
            if !edges
                .iter()
                .any(|e: &TriEdge| (e.a == p && e.b == q) || (e.a == q && e.b == p))
            {
                edges.push(unique_edge(s, &vertices, p.min(q), p.max(q), tol)?);
            }
        }
    }
    let triangles = triangles_from(&edges, &corners);
    let labels = ["a", "b", "a'", "b'", "c", "c'"].map(String::from).to_vec();
    Ok(GeodesicTriangulation {
        vertices,
        edges,
        triangles,
        labels,
    })
}

/// Named points of the twelve-triangle construction.
#[derive(Debug, Clone)]
pub struct AcuteFrame {
    /// Square-diagonal 4-cycle `a' b' c' d'`.
    pub cycle: [VertexId; 4],
    /// `a, b, c, d`: `a` is the other corner of the square on `a' b'`, and so on.
    pub corners: [VertexId; 4],
    /// `a*, b*, c*, d*` on the diagonals `a' b'`, `b' c'`, `c' d'`, `d' a'`.
    pub stars: [SurfacePoint; 4],
    /// The two sides of the cycle as vertex sets; `a, c` lie in the first.
    pub regions: [Vec<VertexId>; 2],
}

/// Fraction of a square diagonal from its start to the point seen from the
/// adjacent corner at π/6 off the start: |a'a*| / |a'b'| = (√3 - 1) / 2.
pub fn star_fraction() -> f64 {
    (3f64.sqrt() - 1.0) / 2.0
}

/// Chart point at fraction `t` along the diagonal `from -> to` of a square face.
pub fn point_on_diagonal(
    s: &PolyhedralSurface,
    from: VertexId,
    to: VertexId,
    t: f64,
    eps: f64,
) -> Option<SurfacePoint> {
    let f = s.faces().iter().find(|f| {
        f.shape == FaceShape::Square
            && matches!((f.corner_of(from), f.corner_of(to)), (Some(i), Some(j)) if (i + 2) % 4 == j)
    })?;
    let p = f.corners[f.corner_of(from)?];
    let q = f.corners[f.corner_of(to)?];
    Some(s.locate(f.id, &(p + (q - p) * t), eps))
}

fn components_without(s: &PolyhedralSurface, removed: &[VertexId]) -> Vec<Vec<VertexId>> {
    let n = s.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<VertexId>> = Vec::new();
    for start in 0..n {
        if removed.contains(&start) || comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![start];
        comp[start] = id;
        let mut k = 0;
        while k < members.len() {
            let x = members[k];
            for &y in s.neighbours(x) {
                if !removed.contains(&y) && comp[y] == usize::MAX {
                    comp[y] = id;
                    members.push(y);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Locate the frame: the first square-diagonal 4-cycle in vertex order, its
/// two sides, and the corners and points on the diagonals.
pub fn acute_frame(
    s: &PolyhedralSurface,
    tol: &Tolerances,
) -> Result<AcuteFrame, TriangulationError> {
    let n = s.vertex_count();
    let partners =
        |v: VertexId| -> Vec<VertexId> { (0..n).filter(|&w| s.is_square_diagonal(v, w)).collect() };
    let mut cycle = None;
    'search: for a1 in 0..n {
        for &b1 in &partners(a1) {
            for &c1 in partners(b1).iter().filter(|&&c| c != a1) {
                for &d1 in partners(c1).iter().filter(|&&d| d != b1 && d != a1) {
                    if s.is_square_diagonal(d1, a1) {
                        cycle = Some([a1, b1, c1, d1]);
                        break 'search;
                    }
                }
            }
        }
    }
    let cycle = cycle.ok_or_else(|| fail("no closed 4-cycle of square diagonals"))?;
    let comps = components_without(s, &cycle);
    if comps.len() != 2 {
        return Err(fail(format!(
            "diagonal cycle leaves {} regions",
            comps.len()
        )));
    }
    let regions = [comps[0].clone(), comps[1].clone()];
    let mut corners = [0; 4];
    let mut stars = [SurfacePoint::vertex(0); 4];
    for k in 0..4 {
        let (x, y) = (cycle[k], cycle[(k + 1) % 4]);
        let region = &regions[k % 2];
        corners[k] = region
            .iter()
            .copied()
            .find(|&v| s.edge_between(v, x).is_some() && s.edge_between(v, y).is_some())
            .ok_or_else(|| fail(format!("no corner next to v{x} and v{y}")))?;
        stars[k] = point_on_diagonal(s, x, y, star_fraction(), tol.eps_len)
            .ok_or_else(|| fail("cycle edge is not a square diagonal"))?;
    }
    Ok(AcuteFrame {
        cycle,
        corners,
        stars,
        regions,
    })
}

/// Faces lying on one side of the cycle: those whose vertices off the cycle
/// all belong to the region.
fn region_faces(s: &PolyhedralSurface, frame: &AcuteFrame, side: usize) -> BTreeSet<FaceId> {
    s.faces()
        .iter()
        .filter(|f| {
            f.vertices
                .iter()
                .filter(|v| !frame.cycle.contains(v))
                .all(|v| frame.regions[side].contains(v))
        })
        .map(|f| f.id)
        .collect()
}

/// The twelve-triangle acute triangulation.
pub fn construct_acute12(
    s: &PolyhedralSurface,
    tol: &Tolerances,
) -> Result<GeodesicTriangulation, TriangulationError> {
    let frame = acute_frame(s, tol)?;
    let [a, b, c, d] = frame.corners.map(SurfacePoint::vertex);
    let [sa, sb, sc, sd] = frame.stars;
    let vertices = vec![a, b, c, d, sa, sb, sc, sd];
    let (a, b, c, d, sa, sb, sc, sd) = (0, 1, 2, 3, 4, 5, 6, 7);
    let corners = [
        [sa, a, sb],
        [sa, sb, b],
        [sa, b, d],
        [sa, d, sd],
        [sa, sd, a],
        [sb, b, sc],
        [sb, sc, c],
        [sb, c, a],
        [sc, c, sd],
        [sc, sd, d],
        [sc, d, b],
        [sd, c, a],
    ];
    // Tied edges between consecutive diagonal points take the side named here.
    let side_of = |p: usize, q: usize| -> Option<usize> {
        match (p.min(q), p.max(q)) {
            (4, 5) | (6, 7) => Some(1),
            (5, 6) | (4, 7) => Some(0),
            _ => None,
        }
    };
    let mut edges: Vec<TriEdge> = Vec::new();
    for &[x, y, z] in &corners {
        for (p, q) in [(x, y), (y, z), (z, x)] {
            if edges
                .iter()
                .any(|e| (e.a == p && e.b == q) || (e.a == q && e.b == p))
            {
                continue;
            }
            let (p, q) = (p.min(q), p.max(q));
            let edge = match side_of(p, q) {
                None => unique_edge(s, &vertices, p, q, tol)?,
                Some(side) => {
                    let all = geodesics(s, &vertices[p], &vertices[q], tol)?;
                    let wanted = region_faces(s, &frame, side);
                    let unwanted = region_faces(s, &frame, 1 - side);
                    let hits: Vec<usize> = (0..all.len())
                        .filter(|&i| {
                            let fs = all[i].interior_faces(tol.eps_len, s);
                            fs.iter().any(|f| wanted.contains(f))
                                && !fs.iter().any(|f| unwanted.contains(f))
                        })
                        .collect();
                    if hits.len() != 1 {
                        return Err(fail(format!(
                            "{} candidate geodesics on the requested side",
                            hits.len()
                        )));
                    }
                    TriEdge {
                        a: p,
                        b: q,
                        witness_face: witness_face(s, &all, hits[0], tol)?,
                    }
                }
            };
            edges.push(edge);
        }
    }
    let triangles = triangles_from(&edges, &corners);
    let labels = ["a", "b", "c", "d", "a*", "b*", "c*", "d*"]
        .map(String::from)
        .to_vec();
    Ok(GeodesicTriangulation {
        vertices,
        edges,
        triangles,
        labels,
    })
}
