//! Small planar toolkit used by the unfolding engine and the apex-region
//! clipper: orientation predicates, segment intersection, convex clipping.

use nalgebra::{Point2, Vector2};
use std::f64::consts::TAU;

pub type P2 = Point2<f64>;
pub type V2 = Vector2<f64>;

#[inline]
pub fn cross(a: &V2, b: &V2) -> f64 {
    a.x * b.y - a.y * b.x
}

/// Signed area of the parallelogram (b - a, c - a); positive when a, b, c turn left.
#[inline]
pub fn orient(a: &P2, b: &P2, c: &P2) -> f64 {
    cross(&(b - a), &(c - a))
}

/// Angle of `v` in `[0, 2π)`.
#[inline]
pub fn heading(v: &V2) -> f64 {
    wrap_angle(v.y.atan2(v.x), TAU)
}

/// Counter-clockwise angle from `a` to `b`, in `[0, 2π)`.
#[inline]
pub fn ccw_angle(a: &V2, b: &V2) -> f64 {
    wrap_angle(cross(a, b).atan2(a.dot(b)), TAU)
}

/// Reduce `x` into `[0, period)`.
#[inline]
pub fn wrap_angle(x: f64, period: f64) -> f64 {
    let r = x.rem_euclid(period);
    if r >= period {
        0.0
    } else {
        r
    }
}

#[inline]
pub fn rotate(v: &V2, angle: f64) -> V2 {
    let (s, c) = angle.sin_cos();
    V2::new(c * v.x - s * v.y, s * v.x + c * v.y)
}

/// Unsigned angle between two vectors, in `[0, π]`.
#[inline]
pub fn angle_between(a: &V2, b: &V2) -> f64 {
    cross(a, b).abs().atan2(a.dot(b))
}

pub fn point_segment_distance(p: &P2, a: &P2, b: &P2) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_squared();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = ((p - a).dot(&ab) / len2).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm()
}

/// Result of intersecting two closed planar segments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SegmentHit {
    None,
    /// Single point with parameters along both segments.
    Point {
        p: P2,
        s: f64,
        t: f64,
    },
    /// Collinear overlap of positive length (parameters along the first segment).
    Overlap {
        s0: f64,
        s1: f64,
    },
}

/// Intersect segments `a0a1` and `b0b1`. `eps` is an absolute length tolerance.
pub fn intersect_segments(a0: &P2, a1: &P2, b0: &P2, b1: &P2, eps: f64) -> SegmentHit {
    let da = a1 - a0;
    let db = b1 - b0;
    let la = da.norm();
    let lb = db.norm();
    if la <= eps || lb <= eps {
        // Degenerate: treat as point tests.
        let (p, q0, q1, is_a) = if la <= eps {
            (a0, b0, b1, true)
        } else {
            (b0, a0, a1, false)
        };
        if point_segment_distance(p, q0, q1) <= eps {
            let qd = q1 - q0;
            let t = if qd.norm_squared() > 0.0 {
                ((p - q0).dot(&qd) / qd.norm_squared()).clamp(0.0, 1.0)
            } else {
                0.0
            };
            return if is_a {
                SegmentHit::Point { p: *p, s: 0.0, t }
            } else {
                SegmentHit::Point {
                    p: *p,
                    s: t,
                    t: 0.0,
                }
            };
        }
        return SegmentHit::None;
    }
    let denom = cross(&da, &db);
    let w = b0 - a0;
    // Parallel when the sine of the angle is below eps relative to the lengths.
    if denom.abs() <= eps * la.max(lb) * 1e-3 + f64::MIN_POSITIVE {
        // Distance between the supporting lines.
        let off = cross(&da, &w).abs() / la;
        if off > eps {
            return SegmentHit::None;
        }
        let ua = da / la;
        let t0 = w.dot(&ua) / la;
        let t1 = (b1 - a0).dot(&ua) / la;
        let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        let s0 = lo.max(0.0);
        let s1 = hi.min(1.0);
        if (s1 - s0) * la > eps {
            return SegmentHit::Overlap { s0, s1 };
        }
        if (s1 - s0) * la >= -eps {
            let s = ((s0 + s1) * 0.5).clamp(0.0, 1.0);
            let p = a0 + da * s;
            let t = ((p - b0).dot(&db) / (lb * lb)).clamp(0.0, 1.0);
            return SegmentHit::Point { p, s, t };
        }
        return SegmentHit::None;
    }
    let s = cross(&w, &db) / denom;
    let t = cross(&w, &da) / denom;
    let ea = eps / la;
    let eb = eps / lb;
    if s < -ea || s > 1.0 + ea || t < -eb || t > 1.0 + eb {
        return SegmentHit::None;
    }
    let s = s.clamp(0.0, 1.0);
    let t = t.clamp(0.0, 1.0);
    SegmentHit::Point {
        p: a0 + da * s,
        s,
        t,
    }
}

/// Signed area of a polygon (counter-clockwise positive).
pub fn polygon_area(poly: &[P2]) -> f64 {
    let n = poly.len();
    if n < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        acc += a.x * b.y - b.x * a.y;
    }
    0.5 * acc
}

pub fn centroid(poly: &[P2]) -> P2 {
    let n = poly.len().max(1) as f64;
    let s = poly.iter().fold(V2::zeros(), |acc, p| acc + p.coords);
    P2::from(s / n)
}

/// Keep the part of a convex polygon where `orient(a, b, p) >= 0`
/// (left of the directed line a -> b).
pub fn clip_left(poly: &[P2], a: &P2, b: &P2) -> Vec<P2> {
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 2);
    if n == 0 {
        return out;
    }
    let dir = b - a;
    let norm = dir.norm();
    let side = |p: &P2| cross(&dir, &(p - a)) / norm;
    for i in 0..n {
        let cur = &poly[i];
        let nxt = &poly[(i + 1) % n];
        let sc = side(cur);
        let sn = side(nxt);
        if sc >= 0.0 {
            out.push(*cur);
        }
        if (sc > 0.0 && sn < 0.0) || (sc < 0.0 && sn > 0.0) {
            let t = sc / (sc - sn);
            out.push(cur + (nxt - cur) * t);
        }
    }
    dedup_ring(&mut out, 1e-15);
    out
}

/// Intersection of two convex counter-clockwise polygons.
pub fn clip_convex(subject: &[P2], clip: &[P2]) -> Vec<P2> {
    let mut out = subject.to_vec();
    let n = clip.len();
    for i in 0..n {
        if out.is_empty() {
            break;
        }
        out = clip_left(&out, &clip[i], &clip[(i + 1) % n]);
    }
    out
}

fn dedup_ring(ring: &mut Vec<P2>, eps: f64) {
    ring.dedup_by(|a, b| (*a - *b).norm() <= eps);
    while ring.len() > 1 && (ring[0] - ring[ring.len() - 1]).norm() <= eps {
        ring.pop();
    }
}

/// Split a convex polygon by the line through `a` and `b`; returns (left, right).
pub fn split_by_line(poly: &[P2], a: &P2, b: &P2) -> (Vec<P2>, Vec<P2>) {
    (clip_left(poly, a, b), clip_left(poly, b, a))
}

/// Whether `p` lies in the closed convex counter-clockwise polygon, with tolerance.
pub fn convex_contains(poly: &[P2], p: &P2, eps: f64) -> bool {
    let n = poly.len();
    (0..n).all(|i| {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        let d = b - a;
        cross(&d, &(p - a)) / d.norm() >= -eps
    })
}

/// Whether `p` lies strictly inside the convex polygon by more than `eps`.
pub fn convex_contains_strict(poly: &[P2], p: &P2, eps: f64) -> bool {
    let n = poly.len();
    (0..n).all(|i| {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        let d = b - a;
        cross(&d, &(p - a)) / d.norm() > eps
    })
}

/// Clip segment `a b` to the closed cone at `apex` spanned counter-clockwise
/// from `lo` to `hi` (opening at most π). Returns the clipped parameter range.
pub fn clip_segment_to_cone(apex: &P2, lo: &V2, hi: &V2, a: &P2, b: &P2) -> Option<(f64, f64)> {
    let mut t0 = 0.0f64;
    let mut t1 = 1.0f64;
    // Half-plane: cross(lo, x - apex) >= 0, and cross(x - apex, hi) >= 0.
    for (n_dir, sign) in [(lo, 1.0), (hi, -1.0)] {
        let fa = sign * cross(n_dir, &(a - apex));
        let fb = sign * cross(n_dir, &(b - apex));
        let scale = n_dir.norm();
        let fa = fa / scale;
        let fb = fb / scale;
        if fa < 0.0 && fb < 0.0 {
            return None;
        }
        if fa < 0.0 {
            t0 = t0.max(fa / (fa - fb));
        } else if fb < 0.0 {
            t1 = t1.min(fa / (fa - fb));
        }
    }
    if t0 > t1 {
        return None;
    }
    Some((t0, t1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> P2 {
        P2::new(x, y)
    }

    #[test]
    fn crossing_segments_meet_once() {
        match intersect_segments(&p(0., 0.), &p(2., 2.), &p(0., 2.), &p(2., 0.), 1e-12) {
            SegmentHit::Point { p: q, s, t } => {
                assert!((q - p(1., 1.)).norm() < 1e-12);
                assert!((s - 0.5).abs() < 1e-12 && (t - 0.5).abs() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn collinear_overlap_is_reported() {
        let hit = intersect_segments(&p(0., 0.), &p(2., 0.), &p(1., 0.), &p(3., 0.), 1e-12);
        assert!(matches!(hit, SegmentHit::Overlap { .. }));
        let touch = intersect_segments(&p(0., 0.), &p(1., 0.), &p(1., 0.), &p(3., 0.), 1e-12);
        assert!(matches!(touch, SegmentHit::Point { .. }));
        let apart = intersect_segments(&p(0., 0.), &p(1., 0.), &p(1.5, 0.), &p(3., 0.), 1e-12);
        assert_eq!(apart, SegmentHit::None);
    }

    #[test]
    fn clipping_square_by_diagonal_halves_area() {
        let sq = [p(0., 0.), p(1., 0.), p(1., 1.), p(0., 1.)];
        let (l, r) = split_by_line(&sq, &p(0., 0.), &p(1., 1.));
        assert!((polygon_area(&l) - 0.5).abs() < 1e-15);
        assert!((polygon_area(&r) - 0.5).abs() < 1e-15);
        let tri = [p(0.5, -1.), p(2., 0.5), p(0.5, 2.)];
        let both = clip_convex(&sq, &tri);
        assert!(polygon_area(&both) > 0.0 && polygon_area(&both) < 1.0);
    }

    #[test]
    fn ccw_angle_wraps() {
        let x = V2::new(1., 0.);
        let y = V2::new(0., 1.);
        assert!((ccw_angle(&x, &y) - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!((ccw_angle(&y, &x) - 1.5 * std::f64::consts::PI).abs() < 1e-15);
        assert_eq!(ccw_angle(&x, &x), 0.0);
    }

    #[test]
    fn cone_clip_keeps_visible_part() {
        let apex = p(0., 0.);
        let lo = V2::new(1., -1.);
        let hi = V2::new(1., 1.);
        let (t0, t1) = clip_segment_to_cone(&apex, &lo, &hi, &p(1., -3.), &p(1., 3.)).unwrap();
        assert!((t0 - 1.0 / 3.0).abs() < 1e-12 && (t1 - 2.0 / 3.0).abs() < 1e-12);
        assert!(clip_segment_to_cone(&apex, &lo, &hi, &p(-1., -3.), &p(-1., 3.)).is_none());
    }
}
