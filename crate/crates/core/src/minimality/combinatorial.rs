use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("unsupported face count {0} (supported: 4, 6, 8, 10)")]
    UnsupportedFaceCount(usize),
}

/// An abstract triangulated 2-sphere given by its vertex triples.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CombinatorialTriangulation {
    pub vertex_count: usize,
    /// Faces as ascending triples, sorted.
    pub faces: Vec<[usize; 3]>,
}

impl CombinatorialTriangulation {
    pub fn new(vertex_count: usize, faces: impl IntoIterator<Item = [usize; 3]>) -> Self {
        let mut faces: Vec<[usize; 3]> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f
            })
            .collect();
        faces.sort_unstable();
        Self {
            vertex_count,
            faces,
        }
    }

    pub fn edges(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for f in &self.faces {
            for (a, b) in [(f[0], f[1]), (f[1], f[2]), (f[0], f[2])] {
                *out.entry((a, b)).or_insert(0) += 1;
            }
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for &(a, b) in self.edges().keys() {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Neighbours of `v` in cyclic order around it, if its link is one cycle.
    pub fn link_cycle(&self, v: usize) -> Option<Vec<usize>> {
        let link: Vec<(usize, usize)> = self
            .faces
            .iter()
            .filter(|f| f.contains(&v))
            .map(|f| {
                let o: Vec<usize> = f.iter().copied().filter(|&x| x != v).collect();
                (o[0], o[1])
            })
            .collect();
        if link.len() < 3 {
            return None;
        }
        let mut cycle = vec![link[0].0, link[0].1];
        let mut used = vec![false; link.len()];
        used[0] = true;
        loop {
            let last = *cycle.last().expect("non-empty");
            let next =
                (0..link.len()).find(|&k| !used[k] && (link[k].0 == last || link[k].1 == last));
            let Some(k) = next else { break };
            used[k] = true;
            let w = if link[k].0 == last {
                link[k].1
            } else {
                link[k].0
            };
            if w == cycle[0] {
                break;
            }
            cycle.push(w);
        }
        let closed = used.iter().all(|&u| u) && cycle.len() == link.len();
        let distinct = cycle.iter().collect::<BTreeSet<_>>().len() == cycle.len();
        (closed && distinct).then_some(cycle)
    }

    /// Simplicial 2-sphere test: distinct faces, every edge in two faces,
    /// every vertex link a single cycle, connected, Euler characteristic 2.
    pub fn is_sphere(&self) -> bool {
        let f = self.faces.len();
        let edges = self.edges();
        let distinct = self.faces.windows(2).all(|w| w[0] != w[1]);
        let manifold = edges.values().all(|&k| k == 2);
        let links = (0..self.vertex_count).all(|v| self.link_cycle(v).is_some());
        let euler = self.vertex_count as i64 - edges.len() as i64 + f as i64 == 2;
        let handshake = 2 * edges.len() == 3 * f;
        distinct && manifold && links && euler && handshake && self.is_connected()
    }

    fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(a, b) in self.edges().keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn relabel(&self, perm: &[usize]) -> Self {
        Self::new(
            self.vertex_count,
            self.faces.iter().map(|f| f.map(|v| perm[v])),
        )
    }

    /// Canonical representative: the lexicographically least relabelled face
    /// list, over relabellings that list vertices by non-increasing degree.
    pub fn canonical(&self) -> Self {
        let deg = self.degrees();
        let mut slot_degree = deg.clone();
        slot_degree.sort_unstable_by(|a, b| b.cmp(a));
        let mut best: Option<Self> = None;
        let n = self.vertex_count;
        self.search_labels(
            &deg,
            &slot_degree,
            0,
            &mut vec![0; n],
            &mut vec![false; n],
            &mut best,
        );
        best.expect("at least one relabelling")
    }

    fn search_labels(
        &self,
        deg: &[usize],
        slot_degree: &[usize],
        slot: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        best: &mut Option<Self>,
    ) {
        if slot == self.vertex_count {
            let cand = self.relabel(perm);
            if best.as_ref().is_none_or(|b| cand.faces < b.faces) {
                *best = Some(cand);
            }
            return;
        }
        for v in 0..self.vertex_count {
            if !used[v] && deg[v] == slot_degree[slot] {
                used[v] = true;
                perm[v] = slot;
                self.search_labels(deg, slot_degree, slot + 1, perm, used, best);
                used[v] = false;
            }
        }
    }

    /// All triangulations obtained by splitting one vertex into an edge.
    fn vertex_splits(&self) -> Vec<Self> {
        let n = self.vertex_count;
        let mut out = Vec::new();
        for v in 0..n {
            let cyc = self.link_cycle(v).expect("sphere has cyclic links");
            let d = cyc.len();
            for i in 0..d {
                for len in 1..d {
                    // The new vertex takes the arc cyc[i..=i+len].
                    let arc: Vec<usize> = (0..=len).map(|k| cyc[(i + k) % d]).collect();
                    let moved: BTreeSet<(usize, usize)> = arc
                        .windows(2)
                        .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
                        .collect();
                    let mut faces: Vec<[usize; 3]> = Vec::with_capacity(self.faces.len() + 2);
                    for f in &self.faces {
                        if f.contains(&v) {
                            let o: Vec<usize> = f.iter().copied().filter(|&x| x != v).collect();
                            if moved.contains(&(o[0].min(o[1]), o[0].max(o[1]))) {
                                faces.push([n, o[0], o[1]]);
                                continue;
                            }
                        }
                        faces.push(*f);
                    }
                    faces.push([v, n, arc[0]]);
                    faces.push([v, n, arc[len]]);
                    out.push(Self::new(n + 1, faces));
                }
            }
        }
        out
    }
}

/// The boundary of the tetrahedron.
pub fn tetrahedron() -> CombinatorialTriangulation {
    CombinatorialTriangulation::new(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
}

/// Every simplicial 2-sphere with `faces` triangles, up to isomorphism,
/// in canonical form and sorted.
pub fn enumerate_sphere_triangulations(
    faces: usize,
) -> Result<Vec<CombinatorialTriangulation>, EnumerationError> {
    if !matches!(faces, 4 | 6 | 8 | 10) {
        return Err(EnumerationError::UnsupportedFaceCount(faces));
    }
    let target_v = faces / 2 + 2;
    let mut level: BTreeSet<CombinatorialTriangulation> =
        BTreeSet::from([tetrahedron().canonical()]);
    for _ in 4..target_v {
        let mut next = BTreeSet::new();
        for t in &level {
            for s in t.vertex_splits() {
                next.insert(s.canonical());
            }
        }
        level = next;
    }
    let out: Vec<CombinatorialTriangulation> = level.into_iter().collect();
    debug_assert!(out.iter().all(|t| t.is_sphere() && t.faces.len() == faces));
    Ok(out)
}

/// Fewest corners of angle below (`strict`) or at most `cap` that can fill a
/// total angle `total`.
pub fn min_degree_bound(total: f64, cap: f64, strict: bool, eps: f64) -> usize {
    let mut k = 1;
    loop {
        let filled = k as f64 * cap;
        let enough = if strict {
            filled > total + eps
        } else {
            filled >= total - eps
        };
        if enough {
            return k;
        }
        k += 1;
    }
}
