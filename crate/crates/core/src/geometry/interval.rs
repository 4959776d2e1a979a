//! Angular intervals of ray directions, bounded by exact direction vectors.

use super::{cross_dir, Dir};

/// A closed arc of directions subtending less than a half-turn, stored as
/// its two boundary direction vectors. The arc runs counterclockwise from
/// `start` to `end`, so `cross(start, end) > 0` always holds (the minor
/// arc; no winding flag is needed under this normalization).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AngularInterval {
    pub start: Dir,
    pub end: Dir,
}

impl AngularInterval {
    /// The interval spanning the two directions, normalized so the sweep
    /// from `start` to `end` is counterclockwise and under a half-turn.
    /// The directions must not be parallel or antiparallel.
    pub fn spanning(a: Dir, b: Dir) -> Self {
        let c = cross_dir(a, b);
        assert!(c != 0, "parallel directions do not span an interval");
        if c > 0 {
            AngularInterval { start: a, end: b }
        } else {
            AngularInterval { start: b, end: a }
        }
    }

    /// Closed membership test. For an arc under a half-turn the pair of
    /// cross-product signs characterizes membership exactly: the half-plane
    /// counterclockwise of `start` meets the half-plane clockwise of `end`
    /// in precisely this arc.
    pub fn contains(&self, d: Dir) -> bool {
        cross_dir(self.start, d) >= 0 && cross_dir(d, self.end) >= 0
    }
}

/// True iff the closed intersection of all intervals is nonempty.
///
/// Each interval is a closed arc shorter than a half-turn, so any pairwise
/// intersection is a single (possibly empty) arc, the total intersection is
/// a single arc, and when nonempty it contains a boundary direction of one
/// of the constituents. Testing all boundary directions is therefore a
/// complete decision procedure. An empty family intersects to the full
/// circle of directions.
pub fn interval_intersection_witness(intervals: &[AngularInterval]) -> Option<Dir> {
    if intervals.is_empty() {
        return Some(Dir::new(1, 0));
    }
    intervals
        .iter()
        .flat_map(|i| [i.start, i.end])
        .find(|&cand| intervals.iter().all(|i| i.contains(cand)))
}
