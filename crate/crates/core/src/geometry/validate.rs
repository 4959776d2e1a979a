//! General-position validation and the perturbation utility.

use super::{orientation, Orientation, Point};
use crate::error::GeometryError;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// A general-position violation: the first offending pair or triple in
/// lexicographic index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    DuplicatePair { i: usize, j: usize },
    CollinearTriple { i: usize, j: usize, k: usize },
}

/// Outcome of [`validate_general_position`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneralPositionReport {
    Ok,
    Violation(Violation),
}

impl GeneralPositionReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, GeneralPositionReport::Ok)
    }
}

/// Canonical direction for collinearity bucketing: maps d and -d to the
/// same representative in the upper half-plane.
fn canonical_direction(mut dx: i64, mut dy: i64) -> (i64, i64) {
    if dy < 0 || (dy == 0 && dx < 0) {
        dx = -dx;
        dy = -dy;
    }
    let g = gcd(dx.unsigned_abs(), dy.unsigned_abs());
    if g > 1 {
        dx /= g as i64;
        dy /= g as i64;
    }
    (dx, dy)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

/// OK iff all points are distinct and no three are collinear.
///
/// The fast check sorts directions around each anchor (O(n^2 log n)); when a
/// violation exists, a cubic scan in index order recovers the first
/// offending pair or triple for the report.
pub fn validate_general_position(points: &[Point]) -> GeneralPositionReport {
    if fast_general_position(points) {
        return GeneralPositionReport::Ok;
    }
    GeneralPositionReport::Violation(first_violation(points).expect("violation must exist"))
}

fn fast_general_position(points: &[Point]) -> bool {
    let n = points.len();
    // Distinctness via a sorted copy.
    let mut sorted: Vec<Point> = points.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    // Collinearity: around each anchor, two other points share a canonical
    // direction iff the triple is collinear.
    let mut dirs: Vec<(i64, i64)> = Vec::with_capacity(n.saturating_sub(1));
    for (i, &p) in points.iter().enumerate() {
        dirs.clear();
        for (j, &q) in points.iter().enumerate() {
            if i != j {
                dirs.push(canonical_direction(q.x - p.x, q.y - p.y));
            }
        }
        dirs.sort_unstable();
        if dirs.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
    }
    true
}

fn first_violation(points: &[Point]) -> Option<Violation> {
    let n = points.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if points[i] == points[j] {
                return Some(Violation::DuplicatePair { i, j });
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if orientation(points[i], points[j], points[k]) == Orientation::Collinear {
                    return Some(Violation::CollinearTriple { i, j, k });
                }
            }
        }
    }
    None
}

/// Jitters every coordinate by a uniform integer in [-magnitude, magnitude]
/// and re-validates, retrying with fresh draws up to 100 times.
///
/// With magnitude 0 this is the identity on inputs that already satisfy
/// general position.
pub fn perturb(points: &[Point], seed: u64, magnitude: i64) -> Result<Vec<Point>, GeometryError> {
    assert!(magnitude >= 0, "perturbation magnitude must be nonnegative");
    const ATTEMPTS: u32 = 100;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let jittered: Vec<Point> = points
            .iter()
            .map(|p| {
                let dx = if magnitude == 0 {
                    0
                } else {
                    rng.gen_range(-magnitude..=magnitude)
                };
                let dy = if magnitude == 0 {
                    0
                } else {
                    rng.gen_range(-magnitude..=magnitude)
                };
                Point::new(p.x + dx, p.y + dy)
            })
            .collect();
        if validate_general_position(&jittered).is_ok() {
            return Ok(jittered);
        }
    }
    Err(GeometryError::PerturbationFailed { attempts: ATTEMPTS })
}
