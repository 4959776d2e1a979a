//! Halving edges and the rotating halving line.
//!
//! A halving edge is a vertex pair whose connecting line leaves exactly
//! (n-2)/2 vertices strictly on each side. Rotating the halving line
//! through a half-turn visits every halving edge once, in exact angular
//! order; the vertex sides change only at those events, so each recorded
//! step satisfies the halving invariant and the per-step edge-count deltas
//! stay below n. The sweep stops being useful once some event satisfies
//! |e_left - e_right| <= 2n, which the reversal argument guarantees.

use crate::error::PartitionError;
use crate::geometry::{cross, orientation, DirectedLine, Orientation, Point};
use crate::graph::GeometricGraph;
use serde::Serialize;

/// One recorded position of the rotating halving line.
#[derive(Debug, Clone, Serialize)]
pub struct HalvingState {
    pub step: usize,
    /// Vertex the directed line emanates from.
    pub pivot: usize,
    /// The two on-line vertices `(a, b)`; the line is directed from a to b.
    pub pair: (usize, usize),
    pub line: DirectedLine,
    /// Edges of the graph lying entirely in the open left halfplane.
    pub e_left: usize,
    pub e_right: usize,
}

/// The full event trace of one rotation, plus the index of the first
/// balanced state (the procedure's result).
#[derive(Debug, Clone, Serialize)]
pub struct RotationTrace {
    pub trace: Vec<HalvingState>,
    pub balanced_index: usize,
}

impl RotationTrace {
    pub fn final_state(&self) -> &HalvingState {
        &self.trace[self.balanced_index]
    }
}

fn strict_side_counts(points: &[Point], a: usize, b: usize) -> (usize, usize) {
    let mut left = 0;
    let mut right = 0;
    for (i, &p) in points.iter().enumerate() {
        if i == a || i == b {
            continue;
        }
        match orientation(points[a], points[b], p) {
            Orientation::CounterClockwise => left += 1,
            Orientation::Clockwise => right += 1,
            Orientation::Collinear => unreachable!("general position"),
        }
    }
    (left, right)
}

/// The lexicographically first vertex pair whose line halves the point set.
/// The pair need not be an edge of the graph.
pub fn find_halving_edge(g: &GeometricGraph) -> Result<(usize, usize), PartitionError> {
    let points = g.points();
    let n = points.len();
    if n < 2 {
        return Err(PartitionError::TooFewPoints { n, min: 2 });
    }
    if !n.is_multiple_of(2) {
        return Err(PartitionError::OddPointCount { n });
    }
    let half = (n - 2) / 2;
    for a in 0..n {
        for b in (a + 1)..n {
            let (left, right) = strict_side_counts(points, a, b);
            if left == half && right == half {
                return Ok((a, b));
            }
        }
    }
    Err(PartitionError::InvariantFailure(
        "no halving edge found in a general-position even point set".into(),
    ))
}

/// Ordered event: the line through `(a, b)` directed from a to b.
struct Event {
    a: usize,
    b: usize,
    dir: (i64, i64),
    /// True for the closing event, a half-turn from the start.
    at_half_turn: bool,
}

/// Rotates the halving line through a half-turn, recording every halving
/// edge event. The returned trace starts at the initial halving edge and
/// ends at the same pair with reversed direction; `balanced_index` points
/// at the first event with |e_left - e_right| <= 2n.
pub fn rotate_to_balance(g: &GeometricGraph) -> Result<RotationTrace, PartitionError> {
    let (u, v) = find_halving_edge(g)?;
    let points = g.points();
    let n = points.len();
    let half = (n - 2) / 2;
    let d0 = (points[v].x - points[u].x, points[v].y - points[u].y);

    // Every halving pair contributes exactly one event direction in the
    // half-open half-turn arc after d0.
    let mut events: Vec<Event> = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let (left, right) = strict_side_counts(points, a, b);
            if left != half || right != half {
                continue;
            }
            let d = (points[b].x - points[a].x, points[b].y - points[a].y);
            let c = cross(d0.0, d0.1, d.0, d.1);
            if c > 0 {
                events.push(Event {
                    a,
                    b,
                    dir: d,
                    at_half_turn: false,
                });
            } else if c < 0 {
                events.push(Event {
                    a: b,
                    b: a,
                    dir: (-d.0, -d.1),
                    at_half_turn: false,
                });
            } else {
                // Parallel to the start: only the initial pair itself can be
                // a halving edge here; it closes the sweep reversed.
                debug_assert_eq!((a, b), (u, v), "two parallel halving edges");
                events.push(Event {
                    a: b,
                    b: a,
                    dir: (-d.0, -d.1),
                    at_half_turn: true,
                });
            }
        }
    }
    events.sort_by(|x, y| {
        use std::cmp::Ordering;
        match (x.at_half_turn, y.at_half_turn) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => {
                let c = cross(x.dir.0, x.dir.1, y.dir.0, y.dir.1);
                // Distinct halving edges never share a direction.
                debug_assert!(c != 0);
                if c > 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    });

    let mut trace = Vec::with_capacity(events.len() + 1);
    let record = |step: usize, a: usize, b: usize| {
        let (left, right) = strict_side_counts(points, a, b);
        debug_assert_eq!((left, right), (half, half), "halving invariant");
        let mut e_left = 0;
        let mut e_right = 0;
        for &(x, y) in g.edges() {
            if x == a || x == b || y == a || y == b {
                continue;
            }
            let ox = orientation(points[a], points[b], points[x]);
            let oy = orientation(points[a], points[b], points[y]);
            if ox == Orientation::CounterClockwise && oy == Orientation::CounterClockwise {
                e_left += 1;
            } else if ox == Orientation::Clockwise && oy == Orientation::Clockwise {
                e_right += 1;
            }
        }
        HalvingState {
            step,
            pivot: a,
            pair: (a, b),
            line: DirectedLine::through_points(points[a], points[b]),
            e_left,
            e_right,
        }
    };

    trace.push(record(0, u, v));
    for (i, ev) in events.iter().enumerate() {
        trace.push(record(i + 1, ev.a, ev.b));
    }

    let limit = 2 * n;
    let balanced_index = trace
        .iter()
        .position(|s| s.e_left.abs_diff(s.e_right) <= limit)
        .ok_or_else(|| {
            PartitionError::InvariantFailure(
                "no rotation event reached the balanced edge-count window".into(),
            )
        })?;

    Ok(RotationTrace {
        trace,
        balanced_index,
    })
}
