//! Orientation and segment-pair predicates, all exact.

use super::{cross, dot, AngularInterval, Dir, Point, Segment};
use crate::error::GeometryError;
use serde::{Deserialize, Serialize};

/// Sign of the determinant of (q - p, r - p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Exact orientation of the ordered triple (p, q, r).
pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    let det = cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y);
    match det.cmp(&0) {
        std::cmp::Ordering::Greater => Orientation::CounterClockwise,
        std::cmp::Ordering::Less => Orientation::Clockwise,
        std::cmp::Ordering::Equal => Orientation::Collinear,
    }
}

/// Classification of a segment pair.
///
/// `Cross`: the open interiors share a point. `ShareEndpoint`: the segments
/// share a vertex. `Disjoint`: no point in common at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IntersectionType {
    Disjoint,
    ShareEndpoint,
    Cross,
}

impl std::fmt::Display for IntersectionType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            IntersectionType::Disjoint => "DISJOINT",
            IntersectionType::ShareEndpoint => "SHARE_ENDPOINT",
            IntersectionType::Cross => "CROSS",
        };
        f.write_str(s)
    }
}

/// True if `p` lies on the closed segment `s`, assuming `p` is collinear
/// with `s`.
fn collinear_point_on_segment(p: Point, s: Segment) -> bool {
    debug_assert_eq!(orientation(s.a, s.b, p), Orientation::Collinear);
    // On the segment iff the projections onto both axes are within range.
    p.x >= s.a.x.min(s.b.x)
        && p.x <= s.a.x.max(s.b.x)
        && p.y >= s.a.y.min(s.b.y)
        && p.y <= s.a.y.max(s.b.y)
}

/// Exact classification of a segment pair.
///
/// Errors on configurations that violate general position in a way the
/// three-valued answer cannot express: identical segments, collinear
/// overlaps, and endpoints lying in the other segment's interior.
pub fn classify_pair(s1: Segment, s2: Segment) -> Result<IntersectionType, GeometryError> {
    if (s1.a == s2.a && s1.b == s2.b) || (s1.a == s2.b && s1.b == s2.a) {
        return Err(GeometryError::CollinearOverlap);
    }

    // Shared endpoint: at most one is possible after the identity check.
    let shared = [(s1.a, s1.b), (s1.b, s1.a)]
        .into_iter()
        .find_map(|(cand, other1)| {
            if cand == s2.a {
                Some((cand, other1, s2.b))
            } else if cand == s2.b {
                Some((cand, other1, s2.a))
            } else {
                None
            }
        });
    if let Some((shared, p, q)) = shared {
        if orientation(shared, p, q) == Orientation::Collinear
            && dot(
                p.x - shared.x,
                p.y - shared.y,
                q.x - shared.x,
                q.y - shared.y,
            ) > 0
        {
            // The two segments extend from the shared vertex in the same
            // direction: a positive-length overlap.
            return Err(GeometryError::CollinearOverlap);
        }
        return Ok(IntersectionType::ShareEndpoint);
    }

    let d1 = orientation(s2.a, s2.b, s1.a);
    let d2 = orientation(s2.a, s2.b, s1.b);
    let d3 = orientation(s1.a, s1.b, s2.a);
    let d4 = orientation(s1.a, s1.b, s2.b);

    if d1 == Orientation::Collinear && d2 == Orientation::Collinear {
        // All four endpoints on one line. Any shared point would be a
        // vertex-on-vertex touch, already excluded above.
        let overlap = collinear_point_on_segment(s1.a, s2)
            || collinear_point_on_segment(s1.b, s2)
            || collinear_point_on_segment(s2.a, s1)
            || collinear_point_on_segment(s2.b, s1);
        return if overlap {
            Err(GeometryError::CollinearOverlap)
        } else {
            Ok(IntersectionType::Disjoint)
        };
    }

    // A collinear endpoint inside the other closed segment is a T-junction:
    // not expressible as CROSS / SHARE_ENDPOINT / DISJOINT.
    for (d, p, s) in [
        (d1, s1.a, s2),
        (d2, s1.b, s2),
        (d3, s2.a, s1),
        (d4, s2.b, s1),
    ] {
        if d == Orientation::Collinear && collinear_point_on_segment(p, s) {
            return Err(GeometryError::EndpointOnInterior);
        }
    }

    // Proper crossing needs strictly opposite orientations on both sides.
    let opposite = |a: Orientation, b: Orientation| {
        a != Orientation::Collinear && b != Orientation::Collinear && a != b
    };
    if opposite(d1, d2) && opposite(d3, d4) {
        Ok(IntersectionType::Cross)
    } else {
        Ok(IntersectionType::Disjoint)
    }
}

/// The closed angular interval of ray directions from `v` that hit the
/// segment `s`. Errors if `v` lies on the supporting line of `s`.
pub fn ray_hit_interval(v: Point, s: Segment) -> Result<AngularInterval, GeometryError> {
    if orientation(s.a, s.b, v) == Orientation::Collinear {
        return Err(GeometryError::PointOnSupportingLine { at: (v.x, v.y) });
    }
    let da = Dir::between(v, s.a);
    let db = Dir::between(v, s.b);
    Ok(AngularInterval::spanning(da, db))
}

/// Exact test: does the ray from `v` in direction `d` hit the closed
/// segment `s`?
pub fn ray_hits_segment(v: Point, d: Dir, s: Segment) -> bool {
    // Endpoint sides relative to the ray's supporting line.
    let ca = cross(d.x, d.y, s.a.x - v.x, s.a.y - v.y);
    let cb = cross(d.x, d.y, s.b.x - v.x, s.b.y - v.y);
    if (ca > 0 && cb > 0) || (ca < 0 && cb < 0) {
        return false;
    }
    if ca == 0 && cb == 0 {
        // Segment collinear with the ray line: hits iff some endpoint lies
        // on the forward side or the segment straddles v.
        let ta = dot(d.x, d.y, s.a.x - v.x, s.a.y - v.y);
        let tb = dot(d.x, d.y, s.b.x - v.x, s.b.y - v.y);
        return ta >= 0 || tb >= 0;
    }
    if ca == 0 {
        // Only endpoint a on the ray line.
        return dot(d.x, d.y, s.a.x - v.x, s.a.y - v.y) >= 0;
    }
    if cb == 0 {
        return dot(d.x, d.y, s.b.x - v.x, s.b.y - v.y) >= 0;
    }
    // The line of the ray crosses the segment interior; the hit is on the
    // forward half iff the intersection parameter u >= 0 where
    // u = cross(a - v, b - a) / cross(d, b - a). The denominator is
    // nonzero here (endpoints strictly on opposite sides).
    let denom = cross(d.x, d.y, s.b.x - s.a.x, s.b.y - s.a.y);
    let numer = cross(s.a.x - v.x, s.a.y - v.y, s.b.x - s.a.x, s.b.y - s.a.y);
    debug_assert!(denom != 0);
    (numer >= 0) == (denom > 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    fn seg(ax: i64, ay: i64, bx: i64, by: i64) -> Segment {
        Segment::new(p(ax, ay), p(bx, by)).unwrap()
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(
            orientation(p(0, 0), p(1, 0), p(0, 1)),
            Orientation::CounterClockwise
        );
        assert_eq!(
            orientation(p(0, 0), p(1, 1), p(2, 2)),
            Orientation::Collinear
        );
        assert_eq!(
            orientation(p(0, 0), p(0, 1), p(1, 0)),
            Orientation::Clockwise
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_pair(seg(0, 0, 2, 2), seg(0, 2, 2, 0)).unwrap(),
            IntersectionType::Cross
        );
        assert_eq!(
            classify_pair(seg(0, 0, 1, 0), seg(1, 0, 2, 3)).unwrap(),
            IntersectionType::ShareEndpoint
        );
        assert_eq!(
            classify_pair(seg(0, 0, 1, 0), seg(0, 2, 1, 2)).unwrap(),
            IntersectionType::Disjoint
        );
    }

    #[test]
    fn classify_degenerate_cases() {
        // Identical segments.
        assert!(classify_pair(seg(0, 0, 1, 0), seg(1, 0, 0, 0)).is_err());
        // Collinear overlap through a shared endpoint.
        assert!(classify_pair(seg(0, 0, 2, 0), seg(0, 0, 1, 0)).is_err());
        // Collinear touch in opposite directions is a plain shared endpoint.
        assert_eq!(
            classify_pair(seg(1, 0, 0, 0), seg(0, 0, -1, 0)).unwrap(),
            IntersectionType::ShareEndpoint
        );
        // T-junction: endpoint in the other segment's interior.
        assert!(classify_pair(seg(0, 0, 2, 0), seg(1, 0, 1, 5)).is_err());
        // Collinear but separated.
        assert_eq!(
            classify_pair(seg(0, 0, 1, 0), seg(2, 0, 3, 0)).unwrap(),
            IntersectionType::Disjoint
        );
    }

    #[test]
    fn ray_hit_interval_examples() {
        let i = ray_hit_interval(p(0, 0), seg(1, -1, 1, 1)).unwrap();
        assert_eq!(i.start, Dir::new(1, -1));
        assert_eq!(i.end, Dir::new(1, 1));

        let i = ray_hit_interval(p(0, 0), seg(2, 1, 2, 2)).unwrap();
        assert_eq!(i.start, Dir::new(2, 1));
        assert_eq!(i.end, Dir::new(2, 2));

        // v on the supporting line errors.
        assert!(ray_hit_interval(p(0, 0), seg(1, 0, 5, 0)).is_err());
    }

    #[test]
    fn ray_hit_matches_interval_on_samples() {
        // 360 sampled directions plus the interval boundaries agree with the
        // direct ray test.
        let v = p(0, 0);
        let s = seg(-3, 5, 4, 5);
        let interval = ray_hit_interval(v, s).unwrap();
        let mut dirs: Vec<Dir> = Vec::new();
        for k in 0..360u32 {
            let theta = (k as f64).to_radians();
            let dx = (1000.0 * theta.cos()).round() as i64;
            let dy = (1000.0 * theta.sin()).round() as i64;
            if dx != 0 || dy != 0 {
                dirs.push(Dir::new(dx, dy));
            }
        }
        dirs.push(interval.start);
        dirs.push(interval.end);
        for d in dirs {
            assert_eq!(
                interval.contains(d),
                ray_hits_segment(v, d, s),
                "direction ({}, {})",
                d.x,
                d.y
            );
        }
    }
}
