//! Directed lines with exact rational anchor and direction.
//!
//! Lines produced by the rotation and ham-sandwich procedures pass through
//! input points and stay integral; translated cut lines land between
//! vertices and need rational coordinates. Side tests clear denominators
//! once at construction, so the hot path is a pure integer sign evaluation.

use super::{Point, Side};
use num::{BigInt, BigRational, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

/// A directed line: exact rational origin and nonzero rational direction.
/// LEFT is the counterclockwise side of the direction vector.
#[derive(Debug, Clone, PartialEq)]
pub struct DirectedLine {
    origin: (BigRational, BigRational),
    direction: (BigRational, BigRational),
    // Implicit form a*x + b*y + c with denominators cleared:
    // side(p) = sign(a*p.x + b*p.y + c), positive = LEFT.
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl DirectedLine {
    pub fn new(origin: (BigRational, BigRational), direction: (BigRational, BigRational)) -> Self {
        assert!(
            !direction.0.is_zero() || !direction.1.is_zero(),
            "line direction must be nonzero"
        );
        // side(p) = sign(dx*(py - oy) - dy*(px - ox))
        //         = sign(-dy*px + dx*py + (dy*ox - dx*oy))
        let (dx, dy) = (&direction.0, &direction.1);
        let (ox, oy) = (&origin.0, &origin.1);
        let a = -dy.clone();
        let b = dx.clone();
        let c = dy * ox - dx * oy;
        // Clear the common positive denominator.
        let denom = a.denom() * b.denom() * c.denom();
        let scale = |r: &BigRational| (r * BigRational::from_integer(denom.clone())).to_integer();
        let line = DirectedLine {
            a: scale(&a),
            b: scale(&b),
            c: scale(&c),
            origin,
            direction,
        };
        debug_assert!(denom.is_positive());
        line
    }

    /// The directed line through two integer points, from `p` towards `q`.
    pub fn through_points(p: Point, q: Point) -> Self {
        assert!(p != q, "line through coincident points");
        let int = |v: i64| BigRational::from_integer(BigInt::from(v));
        Self::new((int(p.x), int(p.y)), (int(q.x - p.x), int(q.y - p.y)))
    }

    pub fn origin(&self) -> &(BigRational, BigRational) {
        &self.origin
    }

    pub fn direction(&self) -> &(BigRational, BigRational) {
        &self.direction
    }

    /// Exact side of an integer point.
    pub fn side_of(&self, p: Point) -> Side {
        let v = &self.a * BigInt::from(p.x) + &self.b * BigInt::from(p.y) + &self.c;
        if v.is_positive() {
            Side::Left
        } else if v.is_negative() {
            Side::Right
        } else {
            Side::On
        }
    }

    /// The line with the same anchor and reversed direction.
    pub fn reversed(&self) -> Self {
        Self::new(
            self.origin.clone(),
            (-self.direction.0.clone(), -self.direction.1.clone()),
        )
    }

    /// Translate the origin by `t * along`, keeping the direction.
    pub fn translated_along(&self, along: &(BigRational, BigRational), t: &BigRational) -> Self {
        Self::new(
            (&self.origin.0 + t * &along.0, &self.origin.1 + t * &along.1),
            self.direction.clone(),
        )
    }
}

fn rational_pair(r: &BigRational) -> [String; 2] {
    [r.numer().to_string(), r.denom().to_string()]
}

// Serialized as exact numerator/denominator string pairs so no precision is
// lost in JSON.
impl Serialize for DirectedLine {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("DirectedLine", 2)?;
        s.serialize_field(
            "origin",
            &[rational_pair(&self.origin.0), rational_pair(&self.origin.1)],
        )?;
        s.serialize_field(
            "direction",
            &[
                rational_pair(&self.direction.0),
                rational_pair(&self.direction.1),
            ],
        )?;
        s.end()
    }
}
