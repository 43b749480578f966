use super::GeodesicError;
use crate::planar::P2;
use crate::surface::{FaceId, PolyhedralSurface};
use nalgebra::Isometry2;

/// A strip of edge-adjacent faces laid out in one plane.
#[derive(Debug, Clone)]
pub struct UnfoldedChart {
    pub faces: Vec<FaceId>,
    /// Rigid motion taking each face's own chart into the common plane.
    pub placements: Vec<Isometry2<f64>>,
    /// Side index (in `faces[k]`) shared with `faces[k + 1]`.
    pub exit_sides: Vec<usize>,
}

impl UnfoldedChart {
    pub fn single(face: FaceId) -> Self {
        Self {
            faces: vec![face],
            placements: vec![Isometry2::identity()],
            exit_sides: Vec::new(),
        }
    }

    /// Extend the strip across side `side` of its last face.
    pub fn push(&mut self, surface: &PolyhedralSurface, side: usize) {
        let last = *self.faces.last().expect("non-empty strip");
        let gl = surface.gluing(last, side);
        let placement = self.placements.last().expect("non-empty strip") * gl.partner_to_self;
        self.faces.push(gl.face);
        self.placements.push(placement);
        self.exit_sides.push(side);
    }

    pub fn pop(&mut self) {
        self.faces.pop();
        self.placements.pop();
        self.exit_sides.pop();
    }

    /// Corners of face `k` in the common plane.
    pub fn placed_corners(&self, surface: &PolyhedralSurface, k: usize) -> Vec<P2> {
        let iso = &self.placements[k];
        surface
            .face(self.faces[k])
            .corners
            .iter()
            .map(|c| iso.transform_point(c))
            .collect()
    }

    /// The shared side between `faces[k]` and `faces[k + 1]` in the common plane.
    pub fn shared_side(&self, surface: &PolyhedralSurface, k: usize) -> (P2, P2) {
        let (a, b) = surface.face(self.faces[k]).side(self.exit_sides[k]);
        let iso = &self.placements[k];
        (iso.transform_point(&a), iso.transform_point(&b))
    }
}

/// Lay out a backtrack-free sequence of glued faces in the plane of the first.
pub fn unfold(
    surface: &PolyhedralSurface,
    faces: &[FaceId],
) -> Result<UnfoldedChart, GeodesicError> {
    let (&first, rest) = faces.split_first().ok_or(GeodesicError::EmptySequence)?;
    let mut chart = UnfoldedChart::single(first);
    for (k, &next) in rest.iter().enumerate() {
        if k >= 1 && faces[k - 1] == next {
            return Err(GeodesicError::Backtrack(k + 1));
        }
        let cur = faces[k];
        let side = surface
            .shared_side(cur, next)
            .ok_or(GeodesicError::NotAdjacent(cur, next))?;
        chart.push(surface, side);
    }
    Ok(chart)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{build_cube, build_cuboctahedron, FaceShape};

    #[test]
    fn single_face_is_identity() {
        let s = build_cuboctahedron(1.0).unwrap();
        let c = unfold(&s, &[3]).unwrap();
        assert_eq!(c.placed_corners(&s, 0), s.face(3).corners);
    }

    #[test]
    fn triangle_square_triangle_strip_apexes() {
        let s = build_cuboctahedron(1.0).unwrap();
        // A square and the two triangles glued to opposite sides of it.
        let sq = s.face(0);
        let t1 = s.gluing(0, 0).face;
        let t2 = s.gluing(0, 2).face;
        assert_eq!(s.face(t1).shape, FaceShape::Triangle);
        let c = unfold(&s, &[t1, 0, t2]).unwrap();
        let apex = |k: usize, shared: (usize, usize)| {
            let face = s.face(c.faces[k]);
            let i = (0..3)
                .find(|&i| face.vertices[i] != shared.0 && face.vertices[i] != shared.1)
                .unwrap();
            c.placements[k].transform_point(&face.corners[i])
        };
        let a = apex(0, sq.side_vertices(0));
        let b = apex(2, sq.side_vertices(2));
        // Oracle: apex heights √3/2 on both sides of a unit square.
        assert!(((a - b).norm() - (1.0 + 3f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn two_cube_squares_make_a_rectangle() {
        let s = build_cube(1.0).unwrap();
        let g = s.gluing(0, 0).face;
        let c = unfold(&s, &[0, g]).unwrap();
        let mut pts: Vec<P2> = c.placed_corners(&s, 0);
        pts.extend(c.placed_corners(&s, 1));
        let (minx, maxx) = pts
            .iter()
            .fold((f64::MAX, f64::MIN), |(a, b), p| (a.min(p.x), b.max(p.x)));
        let (miny, maxy) = pts
            .iter()
            .fold((f64::MAX, f64::MIN), |(a, b), p| (a.min(p.y), b.max(p.y)));
        let (w, h) = (maxx - minx, maxy - miny);
        assert!(((w * h) - 2.0).abs() < 1e-12 && (w.max(h) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_sequences() {
        let s = build_cuboctahedron(1.0).unwrap();
        // Two squares never share a side on the cuboctahedron.
        assert_eq!(
            unfold(&s, &[0, 1]).unwrap_err(),
            GeodesicError::NotAdjacent(0, 1)
        );
        let t = s.gluing(0, 0).face;
        assert_eq!(
            unfold(&s, &[0, t, 0]).unwrap_err(),
            GeodesicError::Backtrack(2)
        );
        assert_eq!(unfold(&s, &[]).unwrap_err(), GeodesicError::EmptySequence);
    }

    #[test]
    fn shared_sides_coincide() {
        let s = build_cuboctahedron(1.0).unwrap();
        let t = s.gluing(4, 1).face;
        let u = s.gluing(t, (s.shared_side(t, 4).unwrap() + 1) % 3).face;
        let c = unfold(&s, &[4, t, u]).unwrap();
        for k in 0..2 {
            let (a, b) = c.shared_side(&s, k);
            let next = s.face(c.faces[k + 1]);
            let j = s.shared_side(c.faces[k + 1], c.faces[k]).unwrap();
            let (qb, qa) = next.side(j);
            let iso = &c.placements[k + 1];
            assert!((iso.transform_point(&qa) - a).norm() < 1e-12);
            assert!((iso.transform_point(&qb) - b).norm() < 1e-12);
        }
    }
}
