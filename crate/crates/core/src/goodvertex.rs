//! Good-endpoint analysis of disjoint matchings.
//!
//! An endpoint v of a matching edge is good when every ray from v misses at
//! least one matching edge. A ray from v always meets v's own edge (they
//! share the point v), so v is good exactly when no single ray hits all the
//! OTHER edges: the intersection of their angular hit intervals is empty.

use crate::error::MatchingError;
use crate::geometry::interval_intersection_witness;
use crate::geometry::{
    classify_pair, ray_hit_interval, validate_general_position, AngularInterval, Dir,
    GeneralPositionReport, IntersectionType, Point, Segment, Violation,
};
use num::{BigInt, BigRational, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// A set of pairwise disjoint segments with endpoints in general position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointMatching {
    segments: Vec<Segment>,
}

impl DisjointMatching {
    pub fn new(segments: Vec<Segment>) -> Result<Self, MatchingError> {
        if segments.is_empty() {
            return Err(MatchingError::TooSmall { len: 0 });
        }
        for j in 0..segments.len() {
            for i in 0..j {
                match classify_pair(segments[i], segments[j])? {
                    IntersectionType::Disjoint => {}
                    _ => return Err(MatchingError::NotDisjoint { i, j }),
                }
            }
        }
        let endpoints: Vec<Point> = segments.iter().flat_map(|s| [s.a, s.b]).collect();
        if let GeneralPositionReport::Violation(v) = validate_general_position(&endpoints) {
            return Err(match v {
                Violation::DuplicatePair { i, j } => {
                    MatchingError::Graph(crate::error::GraphError::DuplicatePoint { i, j })
                }
                Violation::CollinearTriple { i, j, k } => {
                    MatchingError::Graph(crate::error::GraphError::CollinearTriple { i, j, k })
                }
            });
        }
        Ok(DisjointMatching { segments })
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn endpoint(&self, edge: usize, end: usize) -> Point {
        let s = self.segments[edge];
        match end {
            0 => s.a,
            1 => s.b,
            _ => panic!("endpoint selector must be 0 or 1"),
        }
    }

    /// A ray direction from the endpoint hitting every other edge, when one
    /// exists. `None` means the endpoint is good.
    pub fn stabbing_direction(
        &self,
        edge: usize,
        end: usize,
    ) -> Result<Option<Dir>, MatchingError> {
        let v = self.endpoint(edge, end);
        let mut intervals: Vec<AngularInterval> = Vec::with_capacity(self.segments.len() - 1);
        for (i, &s) in self.segments.iter().enumerate() {
            if i == edge {
                continue;
            }
            intervals.push(ray_hit_interval(v, s)?);
        }
        Ok(interval_intersection_witness(&intervals))
    }

    /// True iff every ray from the endpoint misses at least one edge of the
    /// matching (the endpoint's own edge counts as always hit).
    pub fn is_good(&self, edge: usize, end: usize) -> Result<bool, MatchingError> {
        Ok(self.stabbing_direction(edge, end)?.is_none())
    }

    /// All good endpoints, as (edge, end) pairs in index order.
    pub fn good_endpoints(&self) -> Result<Vec<(usize, usize)>, MatchingError> {
        let mut good = Vec::new();
        for edge in 0..self.segments.len() {
            for end in 0..2 {
                if self.is_good(edge, end)? {
                    good.push((edge, end));
                }
            }
        }
        Ok(good)
    }

    /// For |M| >= 4: does the matching have at least |M| - 2 good
    /// endpoints?
    pub fn check_good_endpoint_bound(&self) -> Result<bool, MatchingError> {
        if self.len() < 4 {
            return Err(MatchingError::TooSmall { len: self.len() });
        }
        Ok(self.good_endpoints()?.len() >= self.len() - 2)
    }
}

// ---------------------------------------------------------------------------
// The three-edge frame with zero good endpoints
// ---------------------------------------------------------------------------

/// Classification of an added fourth edge relative to the frame triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FourthEdgeCase {
    InsideT,
    OneInOneOut,
    OutsideT,
}

/// Three pairwise disjoint edges with no good endpoint. Prolonging each
/// edge along its supporting line hits another edge; the three pairwise
/// line intersections form the triangle T, each corner interior to exactly
/// one edge, cyclically.
#[derive(Debug, Clone)]
pub struct TriangleFrame {
    edges: [Segment; 3],
    /// T corners as exact rationals: corner[k] is the intersection of the
    /// supporting lines of the two edges other than... the pair (i, j) with
    /// i < j, in the order (0,1), (0,2), (1,2).
    corners: [(BigRational, BigRational); 3],
}

/// Canonical integer realization: triangle (0,0), (100,0), (50,90); each
/// segment runs along one side-line, through one corner and out.
const FRAME_TEMPLATE: [[(i64, i64); 2]; 3] = [
    [(-80, 0), (90, 0)],
    [(140, -72), (55, 81)],
    [(90, 162), (5, 9)],
];

fn rational_point(x: i64, y: i64) -> (BigRational, BigRational) {
    (
        BigRational::from_integer(BigInt::from(x)),
        BigRational::from_integer(BigInt::from(y)),
    )
}

/// Intersection of the supporting lines of s1 and s2, with the parameter of
/// the intersection along each segment (0..1 means interior).
fn line_intersection(
    s1: Segment,
    s2: Segment,
) -> Option<((BigRational, BigRational), BigRational, BigRational)> {
    let d1 = (s1.b.x - s1.a.x, s1.b.y - s1.a.y);
    let d2 = (s2.b.x - s2.a.x, s2.b.y - s2.a.y);
    let denom = crate::geometry::cross(d1.0, d1.1, d2.0, d2.1);
    if denom == 0 {
        return None;
    }
    let diff = (s2.a.x - s1.a.x, s2.a.y - s1.a.y);
    let t_num = crate::geometry::cross(diff.0, diff.1, d2.0, d2.1);
    let u_num = crate::geometry::cross(diff.0, diff.1, d1.0, d1.1);
    let big = |v: i128| BigRational::from_integer(BigInt::from(v));
    let t = big(t_num) / big(denom);
    let u = big(u_num) / big(denom);
    let (ax, ay) = rational_point(s1.a.x, s1.a.y);
    let px = ax + &t * BigRational::from_integer(BigInt::from(d1.0));
    let py = ay + &t * BigRational::from_integer(BigInt::from(d1.1));
    Some(((px, py), t, u))
}

fn strictly_between_01(t: &BigRational) -> bool {
    t.is_positive() && t < &BigRational::from_integer(BigInt::from(1))
}

impl TriangleFrame {
    /// Validates that the three edges realize the frame configuration:
    /// pairwise disjoint, general position, supporting lines pairwise
    /// non-parallel, each line intersection interior to exactly one of its
    /// two edges with the hits forming a 3-cycle, and zero good endpoints.
    pub fn new(edges: [Segment; 3]) -> Result<Self, MatchingError> {
        let matching = DisjointMatching::new(edges.to_vec())?;
        if !matching.good_endpoints()?.is_empty() {
            return Err(MatchingError::GenerationFailed { attempts: 0 });
        }

        let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
        let mut corners: Vec<(BigRational, BigRational)> = Vec::with_capacity(3);
        // hit[i] = j: prolonging edge i reaches the interior of edge j.
        let mut hit: [Option<usize>; 3] = [None; 3];
        for &(i, j) in &pairs {
            let (p, t, u) = line_intersection(edges[i], edges[j])
                .ok_or(MatchingError::GenerationFailed { attempts: 0 })?;
            let on_i = strictly_between_01(&t);
            let on_j = strictly_between_01(&u);
            match (on_i, on_j) {
                // Corner interior to edge j: edge i, prolonged, hits j.
                (false, true) => {
                    if hit[i].replace(j).is_some() {
                        return Err(MatchingError::GenerationFailed { attempts: 0 });
                    }
                }
                (true, false) => {
                    if hit[j].replace(i).is_some() {
                        return Err(MatchingError::GenerationFailed { attempts: 0 });
                    }
                }
                _ => return Err(MatchingError::GenerationFailed { attempts: 0 }),
            }
            corners.push(p);
        }
        // The hits must form a 3-cycle.
        let h0 = hit[0].unwrap();
        if hit.iter().any(|h| h.is_none()) || hit[h0] == Some(0) {
            return Err(MatchingError::GenerationFailed { attempts: 0 });
        }
        Ok(TriangleFrame {
            edges,
            corners: [corners[0].clone(), corners[1].clone(), corners[2].clone()],
        })
    }

    pub fn edges(&self) -> &[Segment; 3] {
        &self.edges
    }

    pub fn corners(&self) -> &[(BigRational, BigRational); 3] {
        &self.corners
    }

    pub fn matching(&self) -> DisjointMatching {
        DisjointMatching::new(self.edges.to_vec()).expect("validated at construction")
    }

    /// Exact location of an integer point relative to the triangle T:
    /// Some(true) strictly inside, Some(false) strictly outside, None on
    /// the boundary.
    pub fn point_in_triangle(&self, p: Point) -> Option<bool> {
        let (px, py) = rational_point(p.x, p.y);
        let mut signs = Vec::with_capacity(3);
        for k in 0..3 {
            let (ax, ay) = &self.corners[k];
            let (bx, by) = &self.corners[(k + 1) % 3];
            let cross = (bx - ax) * (&py - ay) - (by - ay) * (&px - ax);
            if cross.is_zero() {
                return None;
            }
            signs.push(cross.is_positive());
        }
        Some(signs.iter().all(|&s| s) || signs.iter().all(|&s| !s))
    }

    /// Bounding box of the frame edges, for samplers.
    pub fn bounding_box(&self) -> (Point, Point) {
        let mut min = Point::new(i64::MAX, i64::MAX);
        let mut max = Point::new(i64::MIN, i64::MIN);
        for s in &self.edges {
            for p in [s.a, s.b] {
                min.x = min.x.min(p.x);
                min.y = min.y.min(p.y);
                max.x = max.x.max(p.x);
                max.y = max.y.max(p.y);
            }
        }
        (min, max)
    }
}

/// A random integer realization of the frame: the canonical template under
/// a random similarity (quarter-turn rotations, optional reflection,
/// integer scale and translation) plus coordinate jitter, validated until
/// every frame property holds.
pub fn generate_triangle_frame(seed: u64) -> Result<TriangleFrame, MatchingError> {
    const ATTEMPTS: u32 = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let scale = rng.gen_range(1..=3i64);
        let rot = rng.gen_range(0..4u8);
        let reflect = rng.gen_bool(0.5);
        let dx = rng.gen_range(-1000..=1000i64);
        let dy = rng.gen_range(-1000..=1000i64);
        let jitter = 2 * scale;
        let mut transform = |(x, y): (i64, i64)| -> Point {
            let (mut x, mut y) = (x, y);
            if reflect {
                x = -x;
            }
            for _ in 0..rot {
                let t = x;
                x = -y;
                y = t;
            }
            let jx = rng.gen_range(-jitter..=jitter);
            let jy = rng.gen_range(-jitter..=jitter);
            Point::new(x * scale + dx + jx, y * scale + dy + jy)
        };
        let mut segs: Vec<Segment> = Vec::with_capacity(3);
        let mut ok = true;
        for e in FRAME_TEMPLATE {
            let a = transform(e[0]);
            let b = transform(e[1]);
            match Segment::new(a, b) {
                Ok(s) => segs.push(s),
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        if let Ok(frame) = TriangleFrame::new([segs[0], segs[1], segs[2]]) {
            return Ok(frame);
        }
    }
    Err(MatchingError::GenerationFailed { attempts: ATTEMPTS })
}

/// Case label for a disjoint fourth edge, by exact point-in-triangle tests
/// on its endpoints.
pub fn classify_fourth_edge(
    frame: &TriangleFrame,
    e: Segment,
) -> Result<FourthEdgeCase, MatchingError> {
    for (i, &f) in frame.edges.iter().enumerate() {
        match classify_pair(f, e)? {
            IntersectionType::Disjoint => {}
            _ => return Err(MatchingError::NotDisjoint { i, j: 3 }),
        }
    }
    let ins_a = frame
        .point_in_triangle(e.a)
        .ok_or(MatchingError::OnTriangleBoundary)?;
    let ins_b = frame
        .point_in_triangle(e.b)
        .ok_or(MatchingError::OnTriangleBoundary)?;
    Ok(match (ins_a, ins_b) {
        (true, true) => FourthEdgeCase::InsideT,
        (false, false) => FourthEdgeCase::OutsideT,
        _ => FourthEdgeCase::OneInOneOut,
    })
}

/// True iff the frame plus the disjoint fourth edge has at least two good
/// endpoints.
pub fn added_edge_yields_two_good(
    frame: &TriangleFrame,
    e: Segment,
) -> Result<bool, MatchingError> {
    classify_fourth_edge(frame, e)?;
    let mut segs = frame.edges.to_vec();
    segs.push(e);
    let m = DisjointMatching::new(segs)?;
    Ok(m.good_endpoints()?.len() >= 2)
}

/// Rejection-samples a fourth edge realizing the requested case, disjoint
/// from the frame and in general position with it.
pub fn sample_fourth_edge(
    frame: &TriangleFrame,
    case: FourthEdgeCase,
    seed: u64,
) -> Result<Segment, MatchingError> {
    const ATTEMPTS: u32 = 20_000;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = frame.bounding_box();
    let w = (hi.x - lo.x).max(1);
    let h = (hi.y - lo.y).max(1);
    let far_lo = Point::new(lo.x - w, lo.y - h);
    let far_hi = Point::new(hi.x + w, hi.y + h);

    let sample_in = |rng: &mut ChaCha8Rng, a: Point, b: Point| {
        Point::new(rng.gen_range(a.x..=b.x), rng.gen_range(a.y..=b.y))
    };

    for _ in 0..ATTEMPTS {
        let (p, q) = match case {
            FourthEdgeCase::InsideT => (sample_in(&mut rng, lo, hi), sample_in(&mut rng, lo, hi)),
            FourthEdgeCase::OutsideT | FourthEdgeCase::OneInOneOut => (
                sample_in(&mut rng, lo, hi),
                sample_in(&mut rng, far_lo, far_hi),
            ),
        };
        if p == q {
            continue;
        }
        let inside_p = frame.point_in_triangle(p);
        let inside_q = frame.point_in_triangle(q);
        let (Some(ip), Some(iq)) = (inside_p, inside_q) else {
            continue;
        };
        let matches_case = match case {
            FourthEdgeCase::InsideT => ip && iq,
            FourthEdgeCase::OutsideT => !ip && !iq,
            FourthEdgeCase::OneInOneOut => ip != iq,
        };
        if !matches_case {
            continue;
        }
        let Ok(e) = Segment::new(p, q) else { continue };
        // Full validation: disjointness, general position, case label.
        let mut segs = frame.edges.to_vec();
        segs.push(e);
        if DisjointMatching::new(segs).is_err() {
            continue;
        }
        match classify_fourth_edge(frame, e) {
            Ok(c) if c == case => return Ok(e),
            _ => continue,
        }
    }
    Err(MatchingError::GenerationFailed { attempts: ATTEMPTS })
}
