//! Translation balancing: slide the cut line along the halving line until
//! the crossing edges split as evenly as possible.

use crate::geometry::{DirectedLine, Point};
use crate::graph::GeometricGraph;
use num::{BigInt, BigRational, Signed, Zero};

/// Among all translates of `l_prime` along `l` (direction kept), returns
/// the one minimizing max(fully-left, fully-right) over `crossing_edges`,
/// ties broken by the leftmost (smallest-parameter) event gap. Candidate
/// positions are the n+1 gaps between consecutive vertex events, taken at
/// exact rational midpoints so no vertex lies on the returned line.
///
/// `crossing_edges` must be the edges of `g` whose endpoints lie strictly
/// on opposite sides of `l`. With no crossing edges, or when the two lines
/// are parallel, `l_prime` is returned unchanged.
pub fn translate_balance(
    l: &DirectedLine,
    l_prime: &DirectedLine,
    crossing_edges: &[usize],
    g: &GeometricGraph,
) -> DirectedLine {
    if crossing_edges.is_empty() {
        return l_prime.clone();
    }
    let along = l.direction().clone();
    let (dx, dy) = l_prime.direction().clone();
    let (ox, oy) = l_prime.origin().clone();
    // Translation parameter of the line through vertex x:
    //   t_x = cross(dir', x - origin') / cross(dir', dir_l)
    let denom = &dx * &along.1 - &dy * &along.0;
    if denom.is_zero() {
        return l_prime.clone();
    }
    let rat = |v: i64| BigRational::from_integer(BigInt::from(v));
    let t_of = |p: Point| -> BigRational {
        let cx = &dx * (rat(p.y) - &oy) - &dy * (rat(p.x) - &ox);
        cx / denom.clone()
    };

    let n = g.vertex_count();
    let t_values: Vec<BigRational> = (0..n).map(|i| t_of(g.points()[i])).collect();
    let mut sorted = t_values.clone();
    sorted.sort();
    sorted.dedup();

    // Candidate gap parameters: before all events, exact midpoints between
    // consecutive distinct events, after all events.
    let one = BigRational::from_integer(BigInt::from(1));
    let two = BigRational::from_integer(BigInt::from(2));
    let mut candidates: Vec<BigRational> = Vec::with_capacity(sorted.len() + 1);
    candidates.push(sorted.first().unwrap() - &one);
    for w in sorted.windows(2) {
        candidates.push((&w[0] + &w[1]) / &two);
    }
    candidates.push(sorted.last().unwrap() + &one);

    // Vertex x is left of the translate at parameter tau iff
    // denom * (t_x - tau) > 0.
    let denom_positive = denom.is_positive();
    let mut best: Option<(usize, BigRational)> = None;
    for tau in candidates {
        let mut fully_left = 0usize;
        let mut fully_right = 0usize;
        for &e in crossing_edges {
            let (a, b) = g.edges()[e];
            let left_a = (t_values[a] > tau) == denom_positive;
            let left_b = (t_values[b] > tau) == denom_positive;
            match (left_a, left_b) {
                (true, true) => fully_left += 1,
                (false, false) => fully_right += 1,
                _ => {}
            }
        }
        let score = fully_left.max(fully_right);
        if best.as_ref().is_none_or(|(s, _)| score < *s) {
            best = Some((score, tau));
        }
    }
    let (_, tau) = best.expect("at least one candidate gap");
    l_prime.translated_along(&along, &tau)
}
