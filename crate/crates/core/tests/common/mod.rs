//! Shared helpers for the integration suites: an independent
//! rational-arithmetic classifier, random instance generators, and exact
//! recount utilities. Everything here deliberately avoids the library's
//! orientation-based predicate path.

#![allow(dead_code)]

use geomgraph::geometry::{Dir, Point, Segment};
use geomgraph::goodvertex::DisjointMatching;
use geomgraph::graph::GeometricGraph;
use num::{BigInt, BigRational, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn cross_rat(
    ax: &BigRational,
    ay: &BigRational,
    bx: &BigRational,
    by: &BigRational,
) -> BigRational {
    ax * by - ay * bx
}

/// Independent classifier: solves the parametric intersection of the two
/// supporting lines in exact rational arithmetic and reads the
/// classification off the parameters. Errors (as `Err(())`) on the same
/// degenerate configurations the library rejects: collinear overlaps and
/// endpoints interior to the other segment.
pub fn rational_classify(s1: Segment, s2: Segment) -> Result<geomgraph::IntersectionType, ()> {
    use geomgraph::IntersectionType as T;
    let (ax, ay) = (rat(s1.a.x), rat(s1.a.y));
    let (bx, by) = (rat(s1.b.x), rat(s1.b.y));
    let (cx, cy) = (rat(s2.a.x), rat(s2.a.y));
    let (dx, dy) = (rat(s2.b.x), rat(s2.b.y));
    let (e1x, e1y) = (&bx - &ax, &by - &ay);
    let (e2x, e2y) = (&dx - &cx, &dy - &cy);
    let (acx, acy) = (&cx - &ax, &cy - &ay);

    let denom = cross_rat(&e1x, &e1y, &e2x, &e2y);
    let zero = BigRational::zero();
    let one = rat(1);

    if denom.is_zero() {
        // Parallel. Distinct lines cannot meet at all.
        if !cross_rat(&acx, &acy, &e1x, &e1y).is_zero() {
            return Ok(T::Disjoint);
        }
        // Collinear: compare parameter intervals of s2's endpoints on s1.
        let len2 = &e1x * &e1x + &e1y * &e1y;
        let param =
            |px: &BigRational, py: &BigRational| ((px - &ax) * &e1x + (py - &ay) * &e1y) / &len2;
        let (tc, td) = (param(&cx, &cy), param(&dx, &dy));
        let (lo, hi) = if tc <= td { (tc, td) } else { (td, tc) };
        let start = if lo > zero { lo.clone() } else { zero.clone() };
        let end = if hi < one { hi.clone() } else { one.clone() };
        if start < end {
            return Err(()); // positive-length overlap
        }
        if start == end {
            // Single shared point; it must be a shared vertex.
            return Ok(T::ShareEndpoint);
        }
        return Ok(T::Disjoint);
    }

    let t = cross_rat(&acx, &acy, &e2x, &e2y) / &denom;
    let u = cross_rat(&acx, &acy, &e1x, &e1y) / &denom;
    let inside = |v: &BigRational| v > &zero && v < &one;
    let boundary = |v: &BigRational| v == &zero || v == &one;
    if inside(&t) && inside(&u) {
        return Ok(T::Cross);
    }
    if (inside(&t) || boundary(&t)) && (inside(&u) || boundary(&u)) {
        // The lines meet on both closed segments but not in both interiors.
        return if boundary(&t) && boundary(&u) {
            Ok(T::ShareEndpoint)
        } else {
            Err(()) // endpoint interior to the other segment
        };
    }
    Ok(T::Disjoint)
}

/// Independent exact ray test: the ray v + s*d, s >= 0, meets the closed
/// segment? Solved with rational parameters, no orientation predicates.
pub fn rational_ray_hits(v: Point, d: Dir, seg: Segment) -> bool {
    let (vx, vy) = (rat(v.x), rat(v.y));
    let (dxr, dyr) = (rat(d.x), rat(d.y));
    let (ax, ay) = (rat(seg.a.x), rat(seg.a.y));
    let (bx, by) = (rat(seg.b.x), rat(seg.b.y));
    let (ex, ey) = (&bx - &ax, &by - &ay);
    let zero = BigRational::zero();
    let one = rat(1);

    let denom = cross_rat(&dxr, &dyr, &ex, &ey);
    if denom.is_zero() {
        // Ray parallel to the segment line.
        let (wx, wy) = (&ax - &vx, &ay - &vy);
        if !cross_rat(&dxr, &dyr, &wx, &wy).is_zero() {
            return false;
        }
        // Collinear: does any segment point have a nonnegative ray
        // parameter? Project both endpoints onto d.
        let len = &dxr * &dxr + &dyr * &dyr;
        let sa = (&wx * &dxr + &wy * &dyr) / &len;
        let sb = ((&bx - &vx) * &dxr + (&by - &vy) * &dyr) / &len;
        return sa >= zero || sb >= zero;
    }
    let (wx, wy) = (&ax - &vx, &ay - &vy);
    let s = cross_rat(&wx, &wy, &ex, &ey) / &denom;
    let u = cross_rat(&wx, &wy, &dxr, &dyr) / &denom;
    s >= zero && u >= zero && u <= one
}

/// Random general-position integer points in a square, built incrementally
/// so rejection stays cheap.
pub fn random_points(rng: &mut ChaCha8Rng, n: usize, scale: i64) -> Vec<Point> {
    use geomgraph::geometry::{orientation, Orientation};
    let mut points: Vec<Point> = Vec::with_capacity(n);
    'outer: while points.len() < n {
        'attempt: for _ in 0..1000 {
            let p = Point::new(rng.gen_range(-scale..=scale), rng.gen_range(-scale..=scale));
            for (i, &a) in points.iter().enumerate() {
                if a == p {
                    continue 'attempt;
                }
                for &b in &points[i + 1..] {
                    if orientation(a, b, p) == Orientation::Collinear {
                        continue 'attempt;
                    }
                }
            }
            points.push(p);
            continue 'outer;
        }
        panic!("could not extend random point set");
    }
    points
}

/// Random geometric graph: general-position points plus a random subset of
/// vertex pairs as edges.
pub fn random_graph(
    rng: &mut ChaCha8Rng,
    n_points: usize,
    n_edges: usize,
    scale: i64,
) -> GeometricGraph {
    let points = random_points(rng, n_points, scale);
    let mut pairs: Vec<(usize, usize)> = (0..n_points)
        .flat_map(|u| ((u + 1)..n_points).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    pairs.truncate(n_edges.min(pairs.len()));
    GeometricGraph::new(points, pairs).expect("general position guarantees a valid graph")
}

/// Random pairwise-disjoint matching of `size` short segments, grown one
/// segment at a time with full validation.
pub fn random_disjoint_matching(rng: &mut ChaCha8Rng, size: usize, scale: i64) -> DisjointMatching {
    let max_len = (scale / 4).max(2);
    'restart: for _ in 0..200 {
        let mut segments: Vec<Segment> = Vec::with_capacity(size);
        'next: while segments.len() < size {
            for _ in 0..500 {
                let ax = rng.gen_range(-scale..=scale);
                let ay = rng.gen_range(-scale..=scale);
                let bx = ax + rng.gen_range(-max_len..=max_len);
                let by = ay + rng.gen_range(-max_len..=max_len);
                let p = Point::new(ax, ay);
                let q = Point::new(bx, by);
                if p == q {
                    continue;
                }
                let Ok(s) = Segment::new(p, q) else { continue };
                let mut trial = segments.clone();
                trial.push(s);
                if DisjointMatching::new(trial).is_ok() {
                    segments.push(s);
                    continue 'next;
                }
            }
            continue 'restart;
        }
        return DisjointMatching::new(segments).expect("validated incrementally");
    }
    panic!("could not build a random disjoint matching of size {size}");
}
