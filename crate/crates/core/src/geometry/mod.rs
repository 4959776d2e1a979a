//! Exact geometric primitives over integer coordinates.
//!
//! Every predicate in this module is computed with exact integer (or exact
//! rational) arithmetic. Input coordinates are bounded by [`COORD_LIMIT`] so
//! that all three-point determinants fit comfortably in `i128`.

mod interval;
mod line;
mod predicates;
mod validate;

pub use interval::{interval_intersection_witness, AngularInterval};
pub use line::DirectedLine;
pub use predicates::{
    classify_pair, orientation, ray_hit_interval, ray_hits_segment, IntersectionType, Orientation,
};
pub use validate::{perturb, validate_general_position, GeneralPositionReport, Violation};

use crate::error::GeometryError;
use serde::{Deserialize, Serialize};

/// Coordinate magnitude budget: |x|, |y| <= 2^30.
pub const COORD_LIMIT: i64 = 1 << 30;

/// A point with integer coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Checks the coordinate magnitude budget.
    pub fn in_budget(&self) -> bool {
        self.x.abs() <= COORD_LIMIT && self.y.abs() <= COORD_LIMIT
    }
}

/// A straight-line segment between two distinct points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Self, GeometryError> {
        if a == b {
            return Err(GeometryError::DegenerateSegment { at: (a.x, a.y) });
        }
        Ok(Segment { a, b })
    }

    pub fn endpoints(&self) -> [Point; 2] {
        [self.a, self.b]
    }

    /// True if `p` equals one of the endpoints.
    pub fn has_endpoint(&self, p: Point) -> bool {
        self.a == p || self.b == p
    }
}

/// Exact side classification relative to a directed line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    On,
    Right,
}

/// An integer direction vector, nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dir {
    pub x: i64,
    pub y: i64,
}

impl Dir {
    pub fn new(x: i64, y: i64) -> Self {
        debug_assert!(x != 0 || y != 0, "zero direction");
        Dir { x, y }
    }

    /// Direction of the vector from `p` to `q`.
    pub fn between(p: Point, q: Point) -> Self {
        debug_assert!(p != q);
        Dir::new(q.x - p.x, q.y - p.y)
    }

    pub fn reversed(self) -> Self {
        Dir::new(-self.x, -self.y)
    }
}

/// Exact 2D cross product of two integer vectors.
pub fn cross(ax: i64, ay: i64, bx: i64, by: i64) -> i128 {
    ax as i128 * by as i128 - ay as i128 * bx as i128
}

/// Exact dot product of two integer vectors.
pub fn dot(ax: i64, ay: i64, bx: i64, by: i64) -> i128 {
    ax as i128 * bx as i128 + ay as i128 * by as i128
}

pub fn cross_dir(a: Dir, b: Dir) -> i128 {
    cross(a.x, a.y, b.x, b.y)
}

pub fn dot_dir(a: Dir, b: Dir) -> i128 {
    dot(a.x, a.y, b.x, b.y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_rejects_degenerate() {
        assert!(Segment::new(Point::new(1, 2), Point::new(1, 2)).is_err());
        assert!(Segment::new(Point::new(0, 0), Point::new(1, 0)).is_ok());
    }

    #[test]
    fn budget_check() {
        assert!(Point::new(COORD_LIMIT, -COORD_LIMIT).in_budget());
        assert!(!Point::new(COORD_LIMIT + 1, 0).in_budget());
    }
}
