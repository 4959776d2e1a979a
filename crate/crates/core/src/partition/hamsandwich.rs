//! Discrete ham-sandwich cuts by exhaustive candidate enumeration.

use crate::error::PartitionError;
use crate::geometry::{orientation, DirectedLine, Orientation, Point};
use serde::Serialize;

/// Exact point counts of one class relative to the cut.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SideCounts {
    pub left: usize,
    pub on: usize,
    pub right: usize,
}

/// A line simultaneously bisecting two point classes: each open halfplane
/// holds at most floor(|V_i|/2) points of class i.
#[derive(Debug, Clone, Serialize)]
pub struct HamSandwichCut {
    pub line: DirectedLine,
    /// Indices (into v1 and v2) of the two points the cut passes through.
    pub through: (usize, usize),
    pub counts: [SideCounts; 2],
}

fn class_counts(points: &[Point], p: Point, q: Point) -> SideCounts {
    let mut c = SideCounts {
        left: 0,
        on: 0,
        right: 0,
    };
    for &x in points {
        if x == p || x == q {
            c.on += 1;
            continue;
        }
        match orientation(p, q, x) {
            Orientation::CounterClockwise => c.left += 1,
            Orientation::Clockwise => c.right += 1,
            Orientation::Collinear => c.on += 1,
        }
    }
    c
}

fn balanced(c: SideCounts, n: usize) -> bool {
    c.left <= n / 2 && c.right <= n / 2
}

/// Finds a cut through one point of each class by exhaustive enumeration
/// over all cross pairs, in index order. For general-position input the
/// candidate family always contains a valid cut; failing to find one is an
/// internal invariant failure, never a silently invalid cut.
pub fn ham_sandwich(v1: &[Point], v2: &[Point]) -> Result<HamSandwichCut, PartitionError> {
    if v1.is_empty() || v2.is_empty() {
        return Err(PartitionError::TooFewPoints {
            n: v1.len().min(v2.len()),
            min: 1,
        });
    }
    for (i, &p) in v1.iter().enumerate() {
        for (j, &q) in v2.iter().enumerate() {
            if p == q {
                continue;
            }
            let c1 = class_counts(v1, p, q);
            let c2 = class_counts(v2, p, q);
            if balanced(c1, v1.len()) && balanced(c2, v2.len()) {
                return Ok(HamSandwichCut {
                    line: DirectedLine::through_points(p, q),
                    through: (i, j),
                    counts: [c1, c2],
                });
            }
        }
    }
    Err(PartitionError::InvariantFailure(
        "no candidate line bisects both classes; input violates general position".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::new(x, y)).collect()
    }

    #[test]
    fn symmetric_cross_example() {
        let v1 = pts(&[(0, 0), (2, 0)]);
        let v2 = pts(&[(1, 1), (1, -1)]);
        let cut = ham_sandwich(&v1, &v2).unwrap();
        for (c, n) in cut.counts.iter().zip([v1.len(), v2.len()]) {
            assert!(c.left <= n / 2 && c.right <= n / 2);
            assert_eq!(c.left + c.on + c.right, n);
        }
    }

    #[test]
    fn singletons_joined_by_the_cut() {
        let v1 = pts(&[(0, 0)]);
        let v2 = pts(&[(5, 5)]);
        let cut = ham_sandwich(&v1, &v2).unwrap();
        assert_eq!(cut.counts[0].on, 1);
        assert_eq!(cut.counts[1].on, 1);
        assert_eq!(cut.counts[0].left + cut.counts[0].right, 0);
    }

    #[test]
    fn empty_class_rejected() {
        assert!(ham_sandwich(&[], &pts(&[(0, 0)])).is_err());
    }

    #[test]
    fn skewed_sizes_balance() {
        let v1 = pts(&[(0, 0), (10, 1), (3, 7), (8, 9), (1, 13)]);
        let v2 = pts(&[(20, 2), (23, 11), (27, 5)]);
        let cut = ham_sandwich(&v1, &v2).unwrap();
        assert!(cut.counts[0].left <= 2 && cut.counts[0].right <= 2);
        assert!(cut.counts[1].left <= 1 && cut.counts[1].right <= 1);
    }
}
