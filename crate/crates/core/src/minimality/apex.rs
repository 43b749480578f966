use super::atlas::Side;
use super::c5::C5Configuration;
use super::{Certificate, Params, Verdict};
use crate::geodesic::{
    direction_at, segments_intersect, shortest_geodesics, End, GeodesicSegment, Intersection,
};
use crate::planar::{
    clip_convex, clip_left, clip_segment_to_cone, cross, orient, point_segment_distance,
    polygon_area, rotate, split_by_line, wrap_angle, P2, V2,
};
use crate::surface::{EdgeId, FaceId, PolyhedralSurface, SurfacePoint, VertexId};
use crate::tolerance::{snap_to_grid, Tolerances};
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::collections::BTreeSet;
use std::f64::consts::FRAC_PI_2;

/// Window propagation gives up beyond this many faces.
const MAX_DEPTH: usize = 30;

/// Outcome for the region on one side of the cycle.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ApexSide {
    pub side: Side,
    pub verdict: Verdict,
    /// Cycle vertices in traversal order, with the region on the left.
    pub cycle: Vec<VertexId>,
    /// Wedge towards the region at each cycle vertex, raw and in π/12 units.
    pub wedges: Vec<f64>,
    pub wedge_slots: Vec<Option<i64>>,
    /// The cycle cuts the surface into exactly two regions.
    pub separated: bool,
    pub region_faces: Vec<FaceId>,
    pub region_vertices: Vec<VertexId>,
    pub depth_limited: bool,
    /// Faces meeting the set of apex positions allowed by the angle
    /// constraints at the cycle vertices.
    pub feasible_faces: Vec<FaceId>,
    pub feasible: Vec<FeasiblePolygon>,
    /// Surface vertices inside the region that admit acute spokes.
    pub vertex_apexes: Vec<VertexId>,
    /// Least disc margin over all feasible polygons.
    pub margin: Option<f64>,
    pub offending: Option<[f64; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FeasiblePolygon {
    pub face: FaceId,
    pub polygon: Vec<[f64; 2]>,
    pub area: f64,
    /// Cycle positions j, j+1 whose diametral disc contains the polygon.
    pub disc: [usize; 2],
    pub margin: f64,
}

/// A convex part of a face cut out by the cycle.
struct Piece {
    face: FaceId,
    poly: Vec<P2>,
}

struct Region {
    pieces: Vec<Piece>,
    inside: Vec<bool>,
    separated: bool,
    blocked: BTreeSet<EdgeId>,
}

/// Reachable set of straight spokes from one cycle vertex inside one piece.
struct Reach {
    face: FaceId,
    poly: Vec<P2>,
    source: P2,
}

struct Window {
    piece: usize,
    source: P2,
    lo: V2,
    hi: V2,
    depth: usize,
}

fn side_interval(poly: &[P2], a: &P2, b: &P2, eps: f64) -> Option<(P2, P2)> {
    let d = b - a;
    let len2 = d.norm_squared();
    let ts: Vec<f64> = poly
        .iter()
        .filter(|x| point_segment_distance(x, a, b) <= eps)
        .map(|x| (x - a).dot(&d) / len2)
        .collect();
    let lo = ts.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = ts.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (ts.len() >= 2 && (hi - lo) * len2.sqrt() > eps).then(|| (a + d * lo, a + d * hi))
}

fn on_boundary(poly: &[P2], p: &P2, eps: f64) -> bool {
    (0..poly.len()).any(|i| point_segment_distance(p, &poly[i], &poly[(i + 1) % poly.len()]) <= eps)
}

fn cone_triangle(source: &P2, lo: &V2, hi: &V2) -> Vec<P2> {
    const FAR: f64 = 20.0;
    vec![
        *source,
        source + lo.normalize() * FAR,
        source + hi.normalize() * FAR,
    ]
}

impl Region {
    /// Every face as one piece, nothing blocked.
    fn whole(surface: &PolyhedralSurface) -> Region {
        let pieces: Vec<Piece> = surface
            .faces()
            .iter()
            .map(|f| Piece {
                face: f.id,
                poly: f.corners.clone(),
            })
            .collect();
        let inside = vec![true; pieces.len()];
        Region {
            pieces,
            inside,
            separated: true,
            blocked: BTreeSet::new(),
        }
    }
}

/// Straight segments of length at most `limit` leaving `v` inside the
/// region, optionally only in the fan interval (start, width).
fn propagate(
    surface: &PolyhedralSurface,
    region: &Region,
    adjacency: &[Vec<usize>],
    v: VertexId,
    interval: Option<(f64, f64)>,
    limit: f64,
    tol: &Tolerances,
) -> (Vec<Reach>, bool) {
    let eps = tol.eps_len;
    let mut spokes = Spokes {
        surface,
        region,
        adjacency,
        eps,
        reach_limit: limit,
        depth_limited: false,
        out: Vec::new(),
    };
    let cone = surface.cone_angle(v);
    for c in &surface.star(v).corners {
        let arcs: Vec<(f64, f64)> = match interval {
            None => vec![(0.0, c.angle)],
            Some((start, width)) => {
                let rel = wrap_angle(start - c.offset, cone);
                [rel, rel - cone]
                    .iter()
                    .map(|&s| (s.max(0.0), (s + width).min(c.angle)))
                    .collect()
            }
        };
        for (a0, a1) in arcs {
            if a1 - a0 <= tol.eps_ang {
                continue;
            }
            let face = surface.face(c.face);
            let corner = face.corners[c.corner];
            let out = (face.corners[(c.corner + 1) % face.len()] - corner).normalize();
            let (lo, hi) = (rotate(&out, a0), rotate(&out, a1));
            for (k, p) in region.pieces.iter().enumerate() {
                if p.face == c.face
                    && region.inside[k]
                    && p.poly.iter().any(|x| (x - corner).norm() <= eps)
                {
                    spokes.run(Window {
                        piece: k,
                        source: corner,
                        lo,
                        hi,
                        depth: 0,
                    });
                }
            }
        }
    }
    (spokes.out, spokes.depth_limited)
}

/// Convex pieces of `r` not strictly closer, through another unfolding, to
/// the same source vertex.
fn shortest_part(r: Reach, all: &[Reach], eps: f64) -> Vec<Reach> {
    let area_eps = eps * eps;
    let mut parts = vec![r.poly];
    for w in all
        .iter()
        .filter(|w| w.face == r.face && (w.source - r.source).norm() > eps)
    {
        let u = w.source - r.source;
        let mid = P2::from((w.source.coords + r.source.coords) * 0.5);
        let closer = clip_left(&w.poly, &mid, &(mid + V2::new(u.y, -u.x)));
        if polygon_area(&closer) <= area_eps {
            continue;
        }
        parts = parts
            .into_iter()
            .flat_map(|p| subtract(p, &closer, area_eps))
            .collect();
    }
    parts
        .into_iter()
        .map(|poly| Reach {
            face: r.face,
            poly,
            source: r.source,
        })
        .collect()
}

/// Convex pieces covering `p` minus the convex polygon `c`.
fn subtract(p: Vec<P2>, c: &[P2], area_eps: f64) -> Vec<Vec<P2>> {
    if polygon_area(&clip_convex(&p, c)) <= area_eps {
        return vec![p];
    }
    let mut out = Vec::new();
    let mut rest = p;
    for i in 0..c.len() {
        let (a, b) = (c[i], c[(i + 1) % c.len()]);
        let outside = clip_left(&rest, &b, &a);
        if polygon_area(&outside) > area_eps {
            out.push(outside);
        }
        rest = clip_left(&rest, &a, &b);
    }
    out
}

fn build_region(surface: &PolyhedralSurface, cycle: &[GeodesicSegment], eps: f64) -> Region {
    let area_eps = eps * eps;
    let mut blocked = BTreeSet::new();
    let mut chords: Vec<Vec<(P2, P2)>> = vec![Vec::new(); surface.faces().len()];
    for g in cycle {
        let skeleton = match (g.from.as_vertex(), g.to.as_vertex()) {
            (Some(a), Some(b)) => surface
                .edge_between(a, b)
                .filter(|_| (g.length - surface.edge_length()).abs() <= eps),
            _ => None,
        };
        match skeleton {
            Some(e) => {
                blocked.insert(e);
            }
            None => {
                for p in &g.pieces {
                    chords[p.face].push((p.start(), p.end()));
                }
            }
        }
    }
    let mut pieces = Vec::new();
    for f in surface.faces() {
        let mut parts = vec![f.corners.clone()];
        for (a, b) in &chords[f.id] {
            parts = parts
                .into_iter()
                .flat_map(|poly| {
                    let (l, r) = split_by_line(&poly, a, b);
                    [l, r]
                })
                .filter(|p| polygon_area(p) > area_eps)
                .collect();
        }
        pieces.extend(parts.into_iter().map(|poly| Piece { face: f.id, poly }));
    }

    // Seeds on each side of every directed cycle edge.
    let mut seeds = [Vec::new(), Vec::new()];
    for g in cycle {
        let (a, b) = (
            g.from.as_vertex().expect("vertex"),
            g.to.as_vertex().expect("vertex"),
        );
        if surface
            .edge_between(a, b)
            .is_some_and(|e| blocked.contains(&e))
        {
            for (k, (x, y)) in [(a, b), (b, a)].into_iter().enumerate() {
                let (f, j) = surface.directed_side(x, y).expect("skeleton edge");
                let (s0, s1) = surface.face(f).side(j);
                seeds[k].extend(
                    pieces
                        .iter()
                        .enumerate()
                        .filter(|(_, p)| {
                            p.face == f && side_interval(&p.poly, &s0, &s1, eps).is_some()
                        })
                        .map(|(i, _)| i),
                );
            }
        } else {
            for c in &g.pieces {
                let mid = P2::from((c.start().coords + c.end().coords) * 0.5);
                for (i, p) in pieces.iter().enumerate() {
                    if p.face != c.face || !on_boundary(&p.poly, &mid, eps) {
                        continue;
                    }
                    let o = orient(&c.start(), &c.end(), &crate::planar::centroid(&p.poly));
                    if o > eps {
                        seeds[0].push(i);
                    } else if o < -eps {
                        seeds[1].push(i);
                    }
                }
            }
        }
    }

    let adjacency = piece_adjacency(surface, &pieces, &blocked, eps);
    let flood = |start: &[usize]| {
        let mut seen = vec![false; pieces.len()];
        let mut stack = start.to_vec();
        while let Some(i) = stack.pop() {
            if std::mem::replace(&mut seen[i], true) {
                continue;
            }
            stack.extend(adjacency[i].iter().copied().filter(|&j| !seen[j]));
        }
        seen
    };
    let left = flood(&seeds[0]);
    let right = flood(&seeds[1]);
    let separated = !seeds[0].is_empty()
        && !seeds[1].is_empty()
        && left.iter().zip(&right).all(|(l, r)| l != r);
    Region {
        pieces,
        inside: left,
        separated,
        blocked,
    }
}

fn piece_adjacency(
    surface: &PolyhedralSurface,
    pieces: &[Piece],
    blocked: &BTreeSet<EdgeId>,
    eps: f64,
) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); pieces.len()];
    for (i, p) in pieces.iter().enumerate() {
        let face = surface.face(p.face);
        for j in 0..face.len() {
            let (va, vb) = face.side_vertices(j);
            if surface
                .edge_between(va, vb)
                .is_some_and(|e| blocked.contains(&e))
            {
                continue;
            }
            let (s0, s1) = face.side(j);
            let Some((a, b)) = side_interval(&p.poly, &s0, &s1, eps) else {
                continue;
            };
            let gl = surface.gluing(p.face, j);
            for (k, q) in pieces.iter().enumerate() {
                if q.face != gl.face {
                    continue;
                }
                let (t0, t1) = surface.face(q.face).side(gl.side);
                let Some((c, d)) = side_interval(&q.poly, &t0, &t1, eps) else {
                    continue;
                };
                let (c, d) = (
                    gl.partner_to_self.transform_point(&c),
                    gl.partner_to_self.transform_point(&d),
                );
                if overlap(&a, &b, &c, &d).is_some_and(|(x, y)| (y - x).norm() > eps) {
                    adj[i].push(k);
                }
            }
        }
    }
    adj
}

/// Common part of two collinear segments.
fn overlap(a: &P2, b: &P2, c: &P2, d: &P2) -> Option<(P2, P2)> {
    let u = b - a;
    let len2 = u.norm_squared();
    let tc = (c - a).dot(&u) / len2;
    let td = (d - a).dot(&u) / len2;
    let lo = tc.min(td).max(0.0);
    let hi = tc.max(td).min(1.0);
    (hi > lo).then(|| (a + u * lo, a + u * hi))
}

struct Spokes<'a> {
    surface: &'a PolyhedralSurface,
    region: &'a Region,
    adjacency: &'a [Vec<usize>],
    eps: f64,
    reach_limit: f64,
    depth_limited: bool,
    out: Vec<Reach>,
}

impl Spokes<'_> {
    fn run(&mut self, w: Window) {
        let (region, adjacency) = (self.region, self.adjacency);
        let piece = &region.pieces[w.piece];
        let poly = clip_convex(&piece.poly, &cone_triangle(&w.source, &w.lo, &w.hi));
        if polygon_area(&poly) <= self.eps * self.eps {
            return;
        }
        self.out.push(Reach {
            face: piece.face,
            poly: poly.clone(),
            source: w.source,
        });
        let face = self.surface.face(piece.face);
        for j in 0..face.len() {
            let (s0, s1) = face.side(j);
            if orient(&s0, &s1, &w.source) <= self.eps {
                continue;
            }
            let Some((a, b)) = side_interval(&poly, &s0, &s1, self.eps) else {
                continue;
            };
            let Some((t0, t1)) = clip_segment_to_cone(&w.source, &w.lo, &w.hi, &a, &b) else {
                continue;
            };
            let (p, q) = (a + (b - a) * t0, a + (b - a) * t1);
            if (q - p).norm() <= self.eps
                || point_segment_distance(&w.source, &p, &q) > self.reach_limit
            {
                continue;
            }
            if w.depth >= MAX_DEPTH {
                self.depth_limited = true;
                continue;
            }
            let gl = self.surface.gluing(piece.face, j);
            let to_next = self.surface.gluing(gl.face, gl.side).partner_to_self;
            let source = to_next.transform_point(&w.source);
            let (p, q) = (to_next.transform_point(&p), to_next.transform_point(&q));
            let (n0, n1) = self.surface.face(gl.face).side(gl.side);
            for &k in &adjacency[w.piece] {
                let next = &region.pieces[k];
                if next.face != gl.face {
                    continue;
                }
                let Some((c, d)) = side_interval(&next.poly, &n0, &n1, self.eps) else {
                    continue;
                };
                let Some((x, y)) = overlap(&p, &q, &c, &d) else {
                    continue;
                };
                if (y - x).norm() <= self.eps {
                    continue;
                }
                let (mut lo, mut hi) = (x - source, y - source);
                if cross(&lo, &hi) < 0.0 {
                    std::mem::swap(&mut lo, &mut hi);
                }
                self.run(Window {
                    piece: k,
                    source,
                    lo,
                    hi,
                    depth: w.depth + 1,
                });
            }
        }
    }
}

/// Fan interval (start, width) of allowed spoke directions at a cycle vertex.
fn allowed_interval(phi_out: f64, wedge: f64) -> (f64, f64) {
    (phi_out + wedge - FRAC_PI_2, FRAC_PI_2 - (wedge - FRAC_PI_2))
}

fn evaluate_side(
    surface: &PolyhedralSurface,
    c5: &C5Configuration,
    side: Side,
    max_faces: usize,
    tol: &Tolerances,
) -> ApexSide {
    let eps = tol.eps_len;
    let (cycle, segments): (Vec<VertexId>, Vec<GeodesicSegment>) = match side {
        Side::Left => (c5.vertices.to_vec(), c5.segments.clone()),
        Side::Right => (0..5)
            .map(|k| {
                (
                    c5.vertices[(5 - k) % 5],
                    c5.segments[(9 - k) % 5].reversed(surface),
                )
            })
            .unzip(),
    };
    let phi_out: Vec<f64> = segments
        .iter()
        .map(|g| direction_at(surface, g, End::Start).phi)
        .collect();
    let phi_in: Vec<f64> = (0..5)
        .map(|i| direction_at(surface, &segments[(i + 4) % 5], End::Finish).phi)
        .collect();
    let wedges: Vec<f64> = (0..5)
        .map(|i| wrap_angle(phi_in[i] - phi_out[i], surface.cone_angle(cycle[i])))
        .collect();
    let wedge_slots = wedges.iter().map(|&w| snap_to_grid(w, tol.snap)).collect();

    let region = build_region(surface, &segments, eps);
    let region_faces: Vec<FaceId> = region
        .pieces
        .iter()
        .zip(&region.inside)
        .filter(|(_, &r)| r)
        .map(|(p, _)| p.face)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let region_vertices: Vec<VertexId> = (0..surface.vertex_count())
        .filter(|v| !cycle.contains(v))
        .filter(|&v| {
            region.pieces.iter().zip(&region.inside).any(|(p, &r)| {
                let f = surface.face(p.face);
                r && f
                    .corner_of(v)
                    .is_some_and(|c| p.poly.iter().any(|x| (x - f.corners[c]).norm() <= eps))
            })
        })
        .collect();

    // Straight spokes from each cycle vertex into the region, cut down to
    // the points they reach by a shortest path.
    let adjacency = piece_adjacency(surface, &region.pieces, &region.blocked, eps);
    let whole = Region::whole(surface);
    let whole_adjacency = piece_adjacency(surface, &whole.pieces, &whole.blocked, eps);
    let reach_limit = (1.0 + 3f64.sqrt() + 2f64.sqrt()) * surface.edge_length();
    let mut reaches: Vec<Vec<Reach>> = Vec::new();
    let mut depth_limited = false;
    for i in 0..5 {
        let (start, width) = allowed_interval(phi_out[i], wedges[i]);
        let (spokes, limited) = propagate(
            surface,
            &region,
            &adjacency,
            cycle[i],
            Some((start, width)),
            reach_limit,
            tol,
        );
        let far = spokes
            .iter()
            .flat_map(|r| r.poly.iter().map(move |x| (x - r.source).norm()))
            .fold(0.0, f64::max);
        let (all, all_limited) = propagate(
            surface,
            &whole,
            &whole_adjacency,
            cycle[i],
            None,
            far + eps,
            tol,
        );
        depth_limited |= limited || all_limited;
        reaches.push(
            spokes
                .into_iter()
                .flat_map(|r| shortest_part(r, &all, eps))
                .collect(),
        );
    }

    // Apex positions reachable from all five cycle vertices.
    let area_eps = eps * eps;
    let mut feasible = Vec::new();
    let mut margin: Option<f64> = None;
    let mut offending = None;
    let mut outside = false;
    for f in 0..surface.faces().len() {
        let mut combos: Vec<(Vec<P2>, Vec<P2>)> =
            vec![(surface.face(f).corners.clone(), Vec::new())];
        for per_vertex in &reaches {
            let mut next = Vec::new();
            for (poly, sources) in &combos {
                for r in per_vertex.iter().filter(|r| r.face == f) {
                    let cut = clip_convex(poly, &r.poly);
                    if polygon_area(&cut) > area_eps {
                        let mut s = sources.clone();
                        s.push(r.source);
                        next.push((cut, s));
                    }
                }
            }
            combos = next;
        }
        for (poly, sources) in combos {
            let (j, m, worst) = (0..5)
                .map(|j| {
                    let (a, b) = (sources[j], sources[(j + 1) % 5]);
                    let center = P2::from((a.coords + b.coords) * 0.5);
                    let r = (a - b).norm() * 0.5;
                    let (m, x) = poly
                        .iter()
                        .map(|x| (r - (x - center).norm(), *x))
                        .min_by(|p, q| p.0.total_cmp(&q.0))
                        .expect("non-empty polygon");
                    (j, m, x)
                })
                .max_by(|p, q| p.1.total_cmp(&q.1))
                .expect("five pairs");
            if margin.is_none_or(|old| m < old) {
                margin = Some(m);
                if m.abs() <= eps {
                    offending = Some([worst.x, worst.y]);
                }
            }
            outside |= m < -eps;
            feasible.push(FeasiblePolygon {
                face: f,
                area: polygon_area(&poly),
                polygon: poly.iter().map(|x| [x.x, x.y]).collect(),
                disc: [j, (j + 1) % 5],
                margin: m,
            });
        }
    }
    let feasible_faces: Vec<FaceId> = feasible
        .iter()
        .map(|p| p.face)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let vertex_apexes: Vec<VertexId> = region_vertices
        .iter()
        .copied()
        .filter(|&u| {
            vertex_apex_feasible(
                surface, &cycle, &segments, &phi_out, &wedges, u, max_faces, tol,
            )
        })
        .collect();

    let degenerate = margin.is_some_and(|m| m.abs() <= eps);
    let verdict = if !region.separated || depth_limited || degenerate {
        Verdict::Inconclusive
    } else if outside || !vertex_apexes.is_empty() {
        Verdict::Fails
    } else {
        Verdict::Holds
    };
    ApexSide {
        side,
        verdict,
        cycle,
        wedges,
        wedge_slots,
        separated: region.separated,
        region_faces,
        region_vertices,
        depth_limited,
        feasible_faces,
        feasible,
        vertex_apexes,
        margin,
        offending,
    }
}

/// Whether some choice of shortest geodesic spokes from the cycle to the
/// surface vertex `u` keeps every angle at the cycle vertices and at `u`
/// below π/2.
#[allow(clippy::too_many_arguments)]
fn vertex_apex_feasible(
    surface: &PolyhedralSurface,
    cycle: &[VertexId],
    segments: &[GeodesicSegment],
    phi_out: &[f64],
    wedges: &[f64],
    u: VertexId,
    max_faces: usize,
    tol: &Tolerances,
) -> bool {
    let cone_u = surface.cone_angle(u);
    let mut options: Vec<Vec<f64>> = Vec::new();
    for (i, &v) in cycle.iter().enumerate() {
        let Ok(gs) = shortest_geodesics(
            surface,
            &SurfacePoint::vertex(v),
            &SurfacePoint::vertex(u),
            max_faces,
            tol,
        ) else {
            return false;
        };
        let (start, width) = allowed_interval(phi_out[i], wedges[i]);
        let ok: Vec<f64> = gs
            .iter()
            .filter(|g| {
                let psi = wrap_angle(
                    direction_at(surface, g, End::Start).phi - start,
                    surface.cone_angle(v),
                );
                psi > tol.eps_ang && psi < width - tol.eps_ang
            })
            .filter(|g| {
                segments
                    .iter()
                    .all(|e| match segments_intersect(surface, g, e, tol.eps_len) {
                        Intersection::Disjoint => true,
                        Intersection::SharedEndpoint => {
                            e.from.as_vertex() == Some(v) || e.to.as_vertex() == Some(v)
                        }
                        _ => false,
                    })
            })
            .map(|g| direction_at(surface, g, End::Finish).phi)
            .collect();
        if ok.is_empty() {
            return false;
        }
        options.push(ok);
    }
    // Spokes must turn once around u with every wedge acute.
    let mut choice = vec![0.0; 5];
    fn pick(k: usize, options: &[Vec<f64>], choice: &mut Vec<f64>, cone: f64, eps: f64) -> bool {
        if k == options.len() {
            let wedges: Vec<f64> = (0..5)
                .map(|i| wrap_angle(choice[(i + 1) % 5] - choice[i], cone))
                .collect();
            let total: f64 = wedges.iter().sum();
            return (total - cone).abs() <= eps
                && wedges.iter().all(|&w| w > eps && w < FRAC_PI_2 - eps);
        }
        for &phi in &options[k] {
            choice[k] = phi;
            if pick(k + 1, options, choice, cone, eps) {
                return true;
            }
        }
        false
    }
    pick(0, &options, &mut choice, cone_u, tol.eps_ang.max(1e-9))
}

/// No apex of a pentagonal bipyramid over `c5` satisfies the acute angle
/// constraints on at least one side of the cycle.
pub fn check_apex_infeasible(
    surface: &PolyhedralSurface,
    c5: &C5Configuration,
    max_faces: usize,
    tol: &Tolerances,
) -> Certificate {
    let sides: Vec<ApexSide> = Side::BOTH
        .iter()
        .map(|&s| evaluate_side(surface, c5, s, max_faces, tol))
        .collect();
    let verdict = if sides.iter().any(|s| s.verdict == Verdict::Holds) {
        Verdict::Holds
    } else if sides.iter().any(|s| s.verdict == Verdict::Inconclusive) {
        Verdict::Inconclusive
    } else {
        Verdict::Fails
    };
    Certificate {
        claim: "apex-infeasible".to_string(),
        verdict,
        evidence: json!({ "configuration": c5, "sides": sides }),
        params: Params::new(tol, max_faces),
    }
}
