use crate::geodesic::{direction_at, shortest_geodesics, End, GeodesicError, GeodesicSegment};
use crate::surface::{FaceShape, PolyhedralSurface, SurfacePoint, VertexId};
use crate::tolerance::{snap_to_grid, Tolerances, ANGLE_QUANTUM};
use serde::{Deserialize, Serialize};

/// A shortest geodesic between two surface vertices with its slots in the
/// direction fans at both ends.
#[derive(Debug, Clone)]
pub struct VertexGeodesic {
    pub from: VertexId,
    pub to: VertexId,
    pub segment: GeodesicSegment,
    pub phi_from: f64,
    pub phi_to: f64,
    /// Fan slot at `from`: phi_from = fan origin + slot · π/12.
    pub slot_from: i64,
    pub slot_to: i64,
    pub shapes: Vec<FaceShape>,
    pub skeleton_distance: usize,
    pub square_diagonal: bool,
}

/// Side of a directed geodesic or cycle: left is counter-clockwise from the
/// direction of travel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Left, Side::Right];

    /// +1 for left, -1 for right.
    pub fn sign(self) -> i64 {
        match self {
            Side::Left => 1,
            Side::Right => -1,
        }
    }
}

/// Every shortest vertex-to-vertex geodesic, indexed by fan slot.
#[derive(Debug, Clone)]
pub struct GeodesicAtlas {
    pub geodesics: Vec<VertexGeodesic>,
    /// For each vertex, the geodesic leaving it through each slot.
    pub fans: Vec<Vec<Option<usize>>>,
    /// Slots per full turn at each vertex.
    pub slots: Vec<i64>,
}

impl GeodesicAtlas {
    /// Build the atlas. Fails if some vertex cone angle is not a multiple of
    /// π/12 or a geodesic direction is off the grid.
    pub fn build(
        surface: &PolyhedralSurface,
        max_faces: usize,
        tol: &Tolerances,
    ) -> Result<Self, GeodesicError> {
        let n = surface.vertex_count();
        let mut raw: Vec<(VertexId, VertexId, GeodesicSegment, f64, f64)> = Vec::new();
        for v in 0..n {
            for w in (0..n).filter(|&w| w != v) {
                for g in shortest_geodesics(
                    surface,
                    &SurfacePoint::vertex(v),
                    &SurfacePoint::vertex(w),
                    max_faces,
                    tol,
                )? {
                    let a = direction_at(surface, &g, End::Start).phi;
                    let b = direction_at(surface, &g, End::Finish).phi;
                    raw.push((v, w, g, a, b));
                }
            }
        }
        let slots: Vec<i64> = (0..n)
            .map(|v| snap_to_grid(surface.cone_angle(v), tol.snap).unwrap_or(-1))
            .collect();
        // Fan origin at each vertex: direction of its first geodesic.
        let origin: Vec<f64> = (0..n)
            .map(|v| {
                raw.iter()
                    .filter(|r| r.0 == v)
                    .map(|r| r.3)
                    .fold(f64::INFINITY, f64::min)
            })
            .collect();
        let slot_of = |v: VertexId, phi: f64| -> i64 {
            let k = snap_to_grid(phi - origin[v], tol.snap).unwrap_or(i64::MIN);
            if slots[v] > 0 && k != i64::MIN {
                k.rem_euclid(slots[v])
            } else {
                -1
            }
        };
        let mut fans: Vec<Vec<Option<usize>>> = slots
            .iter()
            .map(|&m| vec![None; m.max(0) as usize])
            .collect();
        let mut geodesics = Vec::with_capacity(raw.len());
        for (v, w, g, a, b) in raw {
            let slot_from = slot_of(v, a);
            let slot_to = slot_of(w, b);
            if slot_from >= 0 {
                fans[v][slot_from as usize] = Some(geodesics.len());
            }
            geodesics.push(VertexGeodesic {
                from: v,
                to: w,
                shapes: g.faces().iter().map(|&f| surface.face(f).shape).collect(),
                segment: g,
                phi_from: a,
                phi_to: b,
                slot_from,
                slot_to,
                skeleton_distance: surface.skeleton_distance(v, w).unwrap_or(usize::MAX),
                square_diagonal: surface.is_square_diagonal(v, w),
            });
        }
        Ok(Self {
            geodesics,
            fans,
            slots,
        })
    }

    /// Whether every direction landed on the π/12 grid and every slot is used once.
    pub fn is_quantized(&self) -> bool {
        self.geodesics
            .iter()
            .all(|g| g.slot_from >= 0 && g.slot_to >= 0)
            && self.fans.iter().all(|f| f.iter().all(|s| s.is_some()))
            && self.fans.iter().map(|f| f.len()).sum::<usize>() == self.geodesics.len()
    }

    pub fn at(&self, v: VertexId, slot: i64) -> Option<&VertexGeodesic> {
        let m = self.slots[v];
        self.fans[v]
            .get(slot.rem_euclid(m) as usize)
            .copied()
            .flatten()
            .map(|i| &self.geodesics[i])
    }

    pub fn between(
        &self,
        v: VertexId,
        w: VertexId,
    ) -> impl Iterator<Item = (usize, &VertexGeodesic)> {
        self.geodesics
            .iter()
            .enumerate()
            .filter(move |(_, g)| g.from == v && g.to == w)
    }

    pub fn quantum() -> f64 {
        ANGLE_QUANTUM
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::build_cuboctahedron;

    #[test]
    fn atlas_is_quantized() {
        let s = build_cuboctahedron(1.0).unwrap();
        let a = GeodesicAtlas::build(&s, 8, &Tolerances::default()).unwrap();
        assert!(a.is_quantized());
        assert_eq!(a.geodesics.len(), 240);
        assert!(a.slots.iter().all(|&m| m == 20));
        // Reversal swaps the slots.
        for g in &a.geodesics {
            let back = a.at(g.to, g.slot_to).unwrap();
            assert_eq!((back.to, back.slot_to), (g.from, g.slot_from));
        }
    }
}
