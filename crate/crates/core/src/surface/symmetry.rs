use super::{FaceId, FaceShape, PolyhedralSurface, SurfaceError, VertexId};
use std::collections::HashMap;

/// A surface isometry, recorded by its action on vertices.
pub type VertexPermutation = Vec<VertexId>;

impl PolyhedralSurface {
    fn face_lookup(&self) -> HashMap<Vec<VertexId>, (FaceId, FaceShape)> {
        self.faces()
            .iter()
            .map(|f| {
                let mut key = f.vertices.clone();
                key.sort_unstable();
                (key, (f.id, f.shape))
            })
            .collect()
    }

    /// Face permutation induced by a vertex permutation, if it maps every
    /// face onto a face of the same shape.
    pub fn face_permutation(&self, perm: &[VertexId]) -> Option<Vec<FaceId>> {
        let lookup = self.face_lookup();
        self.faces()
            .iter()
            .map(|f| {
                let mut key: Vec<VertexId> = f.vertices.iter().map(|&v| perm[v]).collect();
                key.sort_unstable();
                lookup
                    .get(&key)
                    .filter(|(_, shape)| *shape == f.shape)
                    .map(|(g, _)| *g)
            })
            .collect()
    }

    /// All skeleton automorphisms that map faces to faces of the same shape.
    /// These are exactly the isometries of the surface (orientation
    /// preserving and reversing). Sorted lexicographically; the identity
    /// comes first.
    pub fn isometry_group(&self) -> Vec<VertexPermutation> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        if n == 0 {
            return out;
        }
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        // Assign vertices in BFS order so every vertex after the first has an
        // already-assigned neighbour, which keeps the search tiny.
        let order = {
            let d = self.skeleton_distances_from(0).expect("vertex 0 exists");
            let mut o: Vec<VertexId> = (0..n).collect();
            o.sort_by_key(|&v| (d[v], v));
            o
        };
        self.extend_automorphism(&order, 0, &mut perm, &mut used, &mut out);
        out.retain(|p| self.face_permutation(p).is_some());
        out.sort();
        out
    }

    fn extend_automorphism(
        &self,
        order: &[VertexId],
        depth: usize,
        perm: &mut Vec<VertexId>,
        used: &mut Vec<bool>,
        out: &mut Vec<VertexPermutation>,
    ) {
        if depth == order.len() {
            out.push(perm.clone());
            return;
        }
        let v = order[depth];
        for w in 0..self.vertex_count() {
            if used[w] || self.neighbours(v).len() != self.neighbours(w).len() {
                continue;
            }
            // Adjacency with already-assigned vertices must be preserved both ways.
            let consistent = order[..depth].iter().all(|&u| {
                let a = self.edge_between(u, v).is_some();
                let b = self.edge_between(perm[u], w).is_some();
                a == b
            });
            if !consistent {
                continue;
            }
            perm[v] = w;
            used[w] = true;
            self.extend_automorphism(order, depth + 1, perm, used, out);
            used[w] = false;
            perm[v] = usize::MAX;
        }
    }

    /// Image of `v` under the central symmetry: the unique vertex at maximal
    /// skeleton distance, provided that map is a fixed-point-free involutive
    /// isometry.
    pub fn antipode(&self, v: VertexId) -> Result<VertexId, SurfaceError> {
        let map = self.central_symmetry()?;
        map.get(v).copied().ok_or(SurfaceError::UnknownVertex(v))
    }

    /// The central symmetry as a vertex permutation.
    pub fn central_symmetry(&self) -> Result<VertexPermutation, SurfaceError> {
        let n = self.vertex_count();
        let mut map = Vec::with_capacity(n);
        for v in 0..n {
            let d = self.skeleton_distances_from(v)?;
            let far = *d.iter().max().ok_or(SurfaceError::NoCentralSymmetry)?;
            let at_far: Vec<VertexId> = (0..n).filter(|&w| d[w] == far).collect();
            if at_far.len() != 1 || far == 0 {
                return Err(SurfaceError::NoCentralSymmetry);
            }
            map.push(at_far[0]);
        }
        let involution = (0..n).all(|v| map[map[v]] == v && map[v] != v);
        if !involution || self.face_permutation(&map).is_none() {
            return Err(SurfaceError::NoCentralSymmetry);
        }
        let preserves_edges = self
            .edges()
            .iter()
            .all(|e| self.edge_between(map[e.lo], map[e.hi]).is_some());
        if !preserves_edges {
            return Err(SurfaceError::NoCentralSymmetry);
        }
        Ok(map)
    }
}

#[cfg(test)]
mod tests {
    use crate::surface::{
        build_cube, build_cuboctahedron, build_tetrahedron, SurfaceError, CUBOCTAHEDRON_DIRECTIONS,
    };

    #[test]
    fn antipode_is_a_distance_three_involution() {
        let s = build_cuboctahedron(1.0).unwrap();
        let mut hit = [0; 12];
        for v in 0..12 {
            let a = s.antipode(v).unwrap();
            assert_eq!(s.antipode(a).unwrap(), v);
            assert_eq!(s.skeleton_distance(v, a).unwrap(), 3);
            hit[a] += 1;
            // Point symmetry in the embedding.
            let d = CUBOCTAHEDRON_DIRECTIONS;
            assert!((0..3).all(|k| d[a][k] == -d[v][k]));
        }
        assert!(hit.iter().all(|&h| h == 1));
    }

    #[test]
    fn tetrahedron_has_no_antipodes() {
        let t = build_tetrahedron(1.0).unwrap();
        assert_eq!(t.antipode(0), Err(SurfaceError::NoCentralSymmetry));
        assert_eq!(build_cube(1.0).unwrap().antipode(0), Ok(7));
    }

    /// Independent oracle: the 48 signed permutation matrices acting on the
    /// embedded vertex directions.
    fn signed_permutation_images() -> Vec<Vec<usize>> {
        let d = CUBOCTAHEDRON_DIRECTIONS;
        let perms3 = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let mut out = Vec::new();
        for p in perms3 {
            for signs in 0..8 {
                let sg = [0, 1, 2].map(|k| if signs >> k & 1 == 1 { -1i8 } else { 1 });
                let img: Vec<usize> = (0..12)
                    .map(|v| {
                        let w = [0, 1, 2].map(|k| sg[k] * d[v][p[k]]);
                        (0..12).find(|&u| d[u] == w).unwrap()
                    })
                    .collect();
                out.push(img);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn isometry_group_matches_signed_permutations() {
        let s = build_cuboctahedron(1.0).unwrap();
        let g = s.isometry_group();
        assert_eq!(g.len(), 48);
        assert_eq!(g, signed_permutation_images());
        assert_eq!(g[0], (0..12).collect::<Vec<_>>());
        // Closed under composition.
        for a in &g {
            for b in &g {
                let c: Vec<usize> = (0..12).map(|v| a[b[v]]).collect();
                assert!(g.binary_search(&c).is_ok());
            }
        }
        for p in &g {
            let fp = s.face_permutation(p).unwrap();
            for f in s.faces() {
                assert_eq!(s.face(fp[f.id]).shape, f.shape);
            }
        }
    }
}
