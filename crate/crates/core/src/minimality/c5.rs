use super::atlas::{GeodesicAtlas, VertexGeodesic};
use crate::geodesic::{segments_intersect, GeodesicSegment, Intersection};
use crate::surface::{FaceId, PolyhedralSurface, VertexId};
use crate::tolerance::Tolerances;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// A 5-cycle of surface vertices joined by shortest geodesics.
#[derive(Debug, Clone, Serialize)]
pub struct C5Configuration {
    pub vertices: [VertexId; 5],
    /// Atlas ids of the edges; edge i runs from vertex i to vertex i+1.
    #[serde(skip)]
    pub edges: [usize; 5],
    #[serde(skip)]
    pub segments: Vec<GeodesicSegment>,
    /// Faces crossed in their interior by each edge.
    pub edge_faces: Vec<Vec<FaceId>>,
    /// A face singling out each edge among its tied geodesics.
    pub witness_faces: Vec<Option<FaceId>>,
    /// Wedge on the left of the traversal at each vertex, in π/12 units.
    pub left_slots: [i64; 5],
    pub left_angles: [f64; 5],
    pub right_angles: [f64; 5],
}

impl C5Configuration {
    pub fn edge<'a>(&self, atlas: &'a GeodesicAtlas, i: usize) -> &'a VertexGeodesic {
        &atlas.geodesics[self.edges[i]]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct C5Filters {
    /// Exclude antipodal and square-diagonal edges, and chords between
    /// skeleton neighbours.
    pub pruning: bool,
    /// Cycle angles strictly between 2π/3 and π (otherwise closed).
    pub strict: bool,
}

impl Default for C5Filters {
    fn default() -> Self {
        Self {
            pruning: true,
            strict: true,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct C5Enumeration {
    pub filters: C5Filters,
    pub configurations: Vec<C5Configuration>,
    /// Indices into `configurations`, one list per isometry orbit.
    pub orbits: Vec<Vec<usize>>,
}

type CycleKey = (Vec<VertexId>, Vec<Vec<FaceId>>);

struct Search<'a> {
    surface: &'a PolyhedralSurface,
    atlas: &'a GeodesicAtlas,
    filters: C5Filters,
    eps: f64,
    cache: HashMap<(usize, usize), Intersection>,
    found: Vec<[usize; 5]>,
}

impl Search<'_> {
    fn wedge_ok(&self, l: i64) -> bool {
        // 2π/3 and π are 8 and 12 quanta.
        if self.filters.strict {
            (9..=11).contains(&l)
        } else {
            (8..=12).contains(&l)
        }
    }

    fn edge_ok(&self, g: &VertexGeodesic) -> bool {
        !self.filters.pruning || (g.skeleton_distance != 3 && !g.square_diagonal)
    }

    fn meet(&mut self, a: usize, b: usize) -> Intersection {
        let key = (a.min(b), a.max(b));
        if let Some(x) = self.cache.get(&key) {
            return *x;
        }
        let x = segments_intersect(
            self.surface,
            &self.atlas.geodesics[a].segment,
            &self.atlas.geodesics[b].segment,
            self.eps,
        );
        self.cache.insert(key, x);
        x
    }

    fn compatible(&mut self, edges: &[usize], next: usize, closing: bool) -> bool {
        let i = edges.len();
        for (j, &e) in edges.iter().enumerate() {
            let adjacent = j + 1 == i || (closing && j == 0);
            let want = if adjacent {
                Intersection::SharedEndpoint
            } else {
                Intersection::Disjoint
            };
            if self.meet(e, next) != want {
                return false;
            }
        }
        true
    }

    fn extend(&mut self, verts: &mut Vec<VertexId>, edges: &mut Vec<usize>) {
        let i = verts.len() - 1;
        let v = verts[i];
        let last = &self.atlas.geodesics[*edges.last().expect("first edge placed")];
        let k_in = last.slot_to;
        let m = self.atlas.slots[v];
        for l in 8..=12 {
            if !self.wedge_ok(l) {
                continue;
            }
            let Some(&id) = self.atlas.fans[v].get((k_in - l).rem_euclid(m) as usize) else {
                continue;
            };
            let Some(id) = id else { continue };
            let g = &self.atlas.geodesics[id];
            let w = g.to;
            if !self.edge_ok(g) {
                continue;
            }
            if i < 4 {
                if w <= verts[0] || verts.contains(&w) {
                    continue;
                }
                if !self.compatible(edges, id, false) {
                    continue;
                }
                verts.push(w);
                edges.push(id);
                self.extend(verts, edges);
                verts.pop();
                edges.pop();
            } else {
                if w != verts[0] || verts[1] >= verts[4] {
                    continue;
                }
                let first = &self.atlas.geodesics[edges[0]];
                let l0 = (g.slot_to - first.slot_from).rem_euclid(self.atlas.slots[w]);
                if !self.wedge_ok(l0) || !self.compatible(edges, id, true) {
                    continue;
                }
                let mut all = edges.clone();
                all.push(id);
                if self.filters.pruning && !self.chords_ok(verts) {
                    continue;
                }
                self.found.push(all.try_into().expect("five edges"));
            }
        }
    }

    /// Skeleton neighbours in the cycle must be consecutive.
    fn chords_ok(&self, verts: &[VertexId]) -> bool {
        (0..5).all(|i| {
            (i + 2..5)
                .filter(|&j| !(i == 0 && j == 4))
                .all(|j| self.surface.edge_between(verts[i], verts[j]).is_none())
        })
    }
}

/// Every 5-cycle of surface vertices whose geodesic edges are pairwise
/// non-crossing and whose cycle angles obey the filters, each cycle listed
/// once, grouped into orbits of the isometry group.
pub fn enumerate_c5(
    surface: &PolyhedralSurface,
    atlas: &GeodesicAtlas,
    filters: C5Filters,
    tol: &Tolerances,
) -> C5Enumeration {
    let mut search = Search {
        surface,
        atlas,
        filters,
        eps: tol.eps_len,
        cache: HashMap::new(),
        found: Vec::new(),
    };
    for v in 0..surface.vertex_count() {
        for (id, g) in atlas.geodesics.iter().enumerate() {
            if g.from != v || g.to <= v || !search.edge_ok(g) {
                continue;
            }
            search.extend(&mut vec![v, g.to], &mut vec![id]);
        }
    }
    let configurations: Vec<C5Configuration> = search
        .found
        .iter()
        .map(|edges| configuration(surface, atlas, edges, tol))
        .collect();

    let group = surface.isometry_group();
    let faces: Vec<Vec<FaceId>> = group
        .iter()
        .map(|p| surface.face_permutation(p).expect("isometry"))
        .collect();
    let mut orbits: BTreeMap<CycleKey, Vec<usize>> = BTreeMap::new();
    for (i, c) in configurations.iter().enumerate() {
        let key = group
            .iter()
            .zip(&faces)
            .map(|(p, q)| dihedral_key(&transform(c, p, q)))
            .min()
            .expect("non-empty group");
        orbits.entry(key).or_default().push(i);
    }
    C5Enumeration {
        filters,
        configurations,
        orbits: orbits.into_values().collect(),
    }
}

fn configuration(
    surface: &PolyhedralSurface,
    atlas: &GeodesicAtlas,
    edges: &[usize; 5],
    tol: &Tolerances,
) -> C5Configuration {
    let gs: Vec<&VertexGeodesic> = edges.iter().map(|&e| &atlas.geodesics[e]).collect();
    let vertices: [VertexId; 5] = std::array::from_fn(|i| gs[i].from);
    let edge_faces: Vec<Vec<FaceId>> = gs
        .iter()
        .map(|g| g.segment.interior_faces(tol.eps_len, surface))
        .collect();
    let witness_faces = gs
        .iter()
        .zip(&edge_faces)
        .map(|(g, own)| {
            let others: BTreeSet<FaceId> = atlas
                .between(g.from, g.to)
                .filter(|(_, h)| h.slot_from != g.slot_from)
                .flat_map(|(_, h)| h.segment.interior_faces(tol.eps_len, surface))
                .collect();
            if others.is_empty() && atlas.between(g.from, g.to).count() == 1 {
                None
            } else {
                own.iter().copied().find(|f| !others.contains(f))
            }
        })
        .collect();
    let mut left_slots = [0; 5];
    let mut left_angles = [0.0; 5];
    let mut right_angles = [0.0; 5];
    for i in 0..5 {
        let incoming = gs[(i + 4) % 5];
        let outgoing = gs[i];
        let v = vertices[i];
        let cone = surface.cone_angle(v);
        left_slots[i] = (incoming.slot_to - outgoing.slot_from).rem_euclid(atlas.slots[v]);
        left_angles[i] = crate::planar::wrap_angle(incoming.phi_to - outgoing.phi_from, cone);
        right_angles[i] = cone - left_angles[i];
    }
    C5Configuration {
        vertices,
        edges: *edges,
        segments: gs.iter().map(|g| g.segment.clone()).collect(),
        edge_faces,
        witness_faces,
        left_slots,
        left_angles,
        right_angles,
    }
}

fn transform(c: &C5Configuration, perm: &[VertexId], faces: &[FaceId]) -> CycleKey {
    let verts = c.vertices.iter().map(|&v| perm[v]).collect();
    let edge_faces = c
        .edge_faces
        .iter()
        .map(|fs| {
            let mut out: Vec<FaceId> = fs.iter().map(|&f| faces[f]).collect();
            out.sort_unstable();
            out
        })
        .collect();
    (verts, edge_faces)
}

/// Least key over the ten rotations and reflections of the cycle.
fn dihedral_key((verts, faces): &CycleKey) -> CycleKey {
    let n = verts.len();
    let mut best: Option<CycleKey> = None;
    for r in 0..n {
        for reflect in [false, true] {
            let (v, f): (Vec<VertexId>, Vec<Vec<FaceId>>) = if reflect {
                // Vertex r, r-1, ...; edge between r-k and r-k-1 is edge r-k-1.
                (0..n)
                    .map(|k| {
                        (
                            verts[(r + n - k) % n],
                            faces[(r + 2 * n - k - 1) % n].clone(),
                        )
                    })
                    .unzip()
            } else {
                (0..n)
                    .map(|k| (verts[(r + k) % n], faces[(r + k) % n].clone()))
                    .unzip()
            };
            let key = (v, f);
            if best.as_ref().is_none_or(|b| key < *b) {
                best = Some(key);
            }
        }
    }
    best.expect("non-empty cycle")
}

/// Normalized key of a configuration, independent of where the cycle starts
/// and which way it runs.
pub fn cycle_key(c: &C5Configuration) -> (Vec<VertexId>, Vec<Vec<FaceId>>) {
    dihedral_key(&(c.vertices.to_vec(), c.edge_faces.clone()))
}

/// Key of the image of a configuration under an isometry.
pub fn transformed_key(
    c: &C5Configuration,
    perm: &[VertexId],
    faces: &[FaceId],
) -> (Vec<VertexId>, Vec<Vec<FaceId>>) {
    dihedral_key(&transform(c, perm, faces))
}

/// Number of 5-subsets of vertices, and the least number of skeleton
/// edges inside any of them.
pub fn adjacency_scan(surface: &PolyhedralSurface) -> (usize, usize) {
    let n = surface.vertex_count();
    let mut count = 0;
    let mut least = usize::MAX;
    let mut subset = Vec::with_capacity(5);
    fn rec(
        s: &PolyhedralSurface,
        n: usize,
        start: usize,
        subset: &mut Vec<usize>,
        count: &mut usize,
        least: &mut usize,
    ) {
        if subset.len() == 5 {
            *count += 1;
            let pairs = (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .filter(|&(i, j)| s.edge_between(subset[i], subset[j]).is_some())
                .count();
            *least = (*least).min(pairs);
            return;
        }
        for v in start..n {
            subset.push(v);
            rec(s, n, v + 1, subset, count, least);
            subset.pop();
        }
    }
    rec(surface, n, 0, &mut subset, &mut count, &mut least);
    (count, least)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::build_cuboctahedron;
    use std::f64::consts::PI;

    #[test]
    fn every_five_subset_has_two_adjacent_pairs() {
        let s = build_cuboctahedron(1.0).unwrap();
        let (count, least) = adjacency_scan(&s);
        assert_eq!(count, 792);
        assert!(least >= 2);
    }

    #[test]
    fn one_orbit_survives() {
        let s = build_cuboctahedron(1.0).unwrap();
        let tol = Tolerances::default();
        let atlas = GeodesicAtlas::build(&s, 8, &tol).unwrap();
        let e = enumerate_c5(&s, &atlas, C5Filters::default(), &tol);
        assert_eq!(
            e.orbits.len(),
            1,
            "{:?}",
            e.orbits.iter().map(|o| o.len()).collect::<Vec<_>>()
        );
        let allowed = [3.0 * PI / 4.0, 5.0 * PI / 6.0, 11.0 * PI / 12.0];
        for c in &e.configurations {
            for (l, r) in c.left_angles.iter().zip(&c.right_angles) {
                assert!(allowed.iter().any(|a| (a - l).abs() < 1e-9));
                assert!(allowed.iter().any(|a| (a - r).abs() < 1e-9));
            }
        }
    }

    #[test]
    fn orbits_are_closed_under_isometries() {
        let s = build_cuboctahedron(1.0).unwrap();
        let tol = Tolerances::default();
        let atlas = GeodesicAtlas::build(&s, 8, &tol).unwrap();
        let e = enumerate_c5(&s, &atlas, C5Filters::default(), &tol);
        let keys: BTreeSet<_> = e.configurations.iter().map(cycle_key).collect();
        assert_eq!(keys.len(), e.configurations.len());
        for p in s.isometry_group() {
            let q = s.face_permutation(&p).unwrap();
            for c in &e.configurations {
                assert!(keys.contains(&transformed_key(c, &p, &q)));
            }
        }
    }
}
