//! Predicate properties: agreement with the rational parametric solver and
//! the structural invariants of orientation / classification.

mod common;

use common::{rational_classify, rng};
use geomgraph::geometry::{
    classify_pair, orientation, ray_hit_interval, ray_hits_segment, Dir, Orientation, Point,
    Segment,
};
use geomgraph::IntersectionType;
use proptest::prelude::*;
use rand::Rng;

fn seg(ax: i64, ay: i64, bx: i64, by: i64) -> Option<Segment> {
    Segment::new(Point::new(ax, ay), Point::new(bx, by)).ok()
}

#[test]
fn classify_agrees_with_rational_solver_on_random_pairs() {
    let mut r = rng(0xC1A551F1);
    let mut checked = 0u32;
    while checked < 20_000 {
        let c: Vec<i64> = (0..8).map(|_| r.gen_range(-1000..=1000)).collect();
        let (Some(s1), Some(s2)) = (seg(c[0], c[1], c[2], c[3]), seg(c[4], c[5], c[6], c[7]))
        else {
            continue;
        };
        let got = classify_pair(s1, s2).map_err(|_| ());
        let expected = rational_classify(s1, s2);
        assert_eq!(got, expected, "mismatch on {s1:?} vs {s2:?}");
        checked += 1;
    }
}

#[test]
fn classify_agrees_on_structured_degenerate_pairs() {
    let mut r = rng(0xDE6E);
    for _ in 0..5_000 {
        // Shared endpoint, sometimes collinear extensions.
        let shared = Point::new(r.gen_range(-50..=50), r.gen_range(-50..=50));
        let d1 = (r.gen_range(-9..=9), r.gen_range(-9..=9));
        if d1 == (0, 0) {
            continue;
        }
        let mode = r.gen_range(0..3);
        let d2 = match mode {
            0 => (d1.0, d1.1),   // same direction: overlap
            1 => (-d1.0, -d1.1), // opposite: touch only
            _ => (r.gen_range(-9..=9), r.gen_range(-9..=9)),
        };
        if d2 == (0, 0) {
            continue;
        }
        let k1 = r.gen_range(1..=5);
        let k2 = r.gen_range(1..=5);
        let (Some(s1), Some(s2)) = (
            Segment::new(
                shared,
                Point::new(shared.x + k1 * d1.0, shared.y + k1 * d1.1),
            )
            .ok(),
            Segment::new(
                shared,
                Point::new(shared.x + k2 * d2.0, shared.y + k2 * d2.1),
            )
            .ok(),
        ) else {
            continue;
        };
        assert_eq!(
            classify_pair(s1, s2).map_err(|_| ()),
            rational_classify(s1, s2),
            "mismatch on shared-endpoint pair {s1:?} vs {s2:?}"
        );
    }
}

#[test]
fn collinear_configurations_agree_with_solver() {
    let mut r = rng(0xC0111);
    for _ in 0..5_000 {
        // Four points on one line, random segment parameterizations.
        let base = Point::new(r.gen_range(-100..=100), r.gen_range(-100..=100));
        let d = (r.gen_range(-7..=7), r.gen_range(-7..=7));
        if d == (0, 0) {
            continue;
        }
        let mut ks: Vec<i64> = (0..4).map(|_| r.gen_range(-20..=20)).collect();
        ks.dedup();
        if ks.len() < 4 {
            continue;
        }
        let at = |k: i64| Point::new(base.x + k * d.0, base.y + k * d.1);
        let (Some(s1), Some(s2)) = (
            Segment::new(at(ks[0]), at(ks[1])).ok(),
            Segment::new(at(ks[2]), at(ks[3])).ok(),
        ) else {
            continue;
        };
        assert_eq!(
            classify_pair(s1, s2).map_err(|_| ()),
            rational_classify(s1, s2),
            "mismatch on collinear pair {s1:?} vs {s2:?}"
        );
    }
}

proptest! {
    #[test]
    fn orientation_antisymmetry(
        px in -2000i64..2000, py in -2000i64..2000,
        qx in -2000i64..2000, qy in -2000i64..2000,
        rx in -2000i64..2000, ry in -2000i64..2000,
    ) {
        let (p, q, r) = (Point::new(px, py), Point::new(qx, qy), Point::new(rx, ry));
        prop_assert_eq!(orientation(p, q, r), orientation(p, r, q).reversed());
        // Cyclic shifts preserve the orientation sign.
        prop_assert_eq!(orientation(p, q, r), orientation(q, r, p));
    }

    #[test]
    fn classify_is_symmetric(
        c in proptest::array::uniform8(-1000i64..1000),
    ) {
        let s1 = Segment::new(Point::new(c[0], c[1]), Point::new(c[2], c[3]));
        let s2 = Segment::new(Point::new(c[4], c[5]), Point::new(c[6], c[7]));
        if let (Ok(s1), Ok(s2)) = (s1, s2) {
            let a = classify_pair(s1, s2).map_err(|_| ());
            let b = classify_pair(s2, s1).map_err(|_| ());
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn cross_iff_strictly_opposite_orientations(
        c in proptest::array::uniform8(-1000i64..1000),
    ) {
        let s1 = Segment::new(Point::new(c[0], c[1]), Point::new(c[2], c[3]));
        let s2 = Segment::new(Point::new(c[4], c[5]), Point::new(c[6], c[7]));
        if let (Ok(s1), Ok(s2)) = (s1, s2) {
            if let Ok(t) = classify_pair(s1, s2) {
                let opposite = |a: Orientation, b: Orientation| {
                    a != Orientation::Collinear && b != Orientation::Collinear && a != b
                };
                let d1 = orientation(s2.a, s2.b, s1.a);
                let d2 = orientation(s2.a, s2.b, s1.b);
                let d3 = orientation(s1.a, s1.b, s2.a);
                let d4 = orientation(s1.a, s1.b, s2.b);
                let proper = opposite(d1, d2) && opposite(d3, d4);
                // A shared endpoint never counts as a proper crossing.
                prop_assert_eq!(t == IntersectionType::Cross, proper);
            }
        }
    }
}

#[test]
fn ray_hit_interval_agrees_with_ray_tests_on_random_instances() {
    let mut r = rng(0x4A45);
    for _ in 0..300 {
        let v = Point::new(r.gen_range(-100..=100), r.gen_range(-100..=100));
        let a = Point::new(r.gen_range(-100..=100), r.gen_range(-100..=100));
        let b = Point::new(r.gen_range(-100..=100), r.gen_range(-100..=100));
        let Ok(s) = Segment::new(a, b) else { continue };
        let Ok(interval) = ray_hit_interval(v, s) else {
            continue;
        };
        let mut dirs: Vec<Dir> = Vec::with_capacity(362);
        for k in 0..360u32 {
            let theta = (k as f64).to_radians();
            let dx = (10_000.0 * theta.cos()).round() as i64;
            let dy = (10_000.0 * theta.sin()).round() as i64;
            dirs.push(Dir::new(dx, dy));
        }
        dirs.push(interval.start);
        dirs.push(interval.end);
        for d in dirs {
            assert_eq!(
                interval.contains(d),
                ray_hits_segment(v, d, s),
                "v={v:?} s={s:?} d=({}, {})",
                d.x,
                d.y
            );
            assert_eq!(
                ray_hits_segment(v, d, s),
                common::rational_ray_hits(v, d, s),
                "exact ray test disagrees with rational solver"
            );
        }
    }
}
