//! Extremal-search harness: point-set generators and greedy pattern-free
//! edge maximization, probing edge-count bounds at desk scale.

use crate::detect::{detect, find_witness_with_edge, Query, RelationGraph, SearchBudget, Status};
use crate::error::HarnessError;
use crate::geometry::{
    classify_pair, orientation, validate_general_position, Orientation, Point, Segment,
};
use crate::graph::GeometricGraph;
use crate::matrix::IntersectionMatrix;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;

/// Families of generated point sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    /// Uniform integer points in a disk.
    RandomDisk,
    /// Points in convex position (all on their hull).
    Convex,
    /// Jittered square grid.
    PerturbedGrid,
}

impl std::str::FromStr for GeneratorKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "random-disk" => Ok(GeneratorKind::RandomDisk),
            "convex" => Ok(GeneratorKind::Convex),
            "perturbed-grid" => Ok(GeneratorKind::PerturbedGrid),
            other => Err(format!("unknown generator {other:?}")),
        }
    }
}

/// Parameters of one generated point set.
#[derive(Debug, Clone, Copy)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub seed: u64,
    pub coordinate_scale: i64,
}

/// Generates `n` general-position integer points, deterministically in the
/// seed, rejection-resampling until validation passes.
pub fn generate_points(spec: &GeneratorSpec) -> Result<Vec<Point>, HarnessError> {
    if spec.n < 2 {
        return Err(HarnessError::TooFewPoints(spec.n));
    }
    const SET_ATTEMPTS: u32 = 50;
    let scale = spec.coordinate_scale.max(16);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for _ in 0..SET_ATTEMPTS {
        let points = match spec.kind {
            GeneratorKind::RandomDisk => random_disk(&mut rng, spec.n, scale),
            GeneratorKind::Convex => convex_circle(&mut rng, spec.n, scale),
            GeneratorKind::PerturbedGrid => perturbed_grid(&mut rng, spec.n, scale),
        };
        let Some(points) = points else { continue };
        if !validate_general_position(&points).is_ok() {
            continue;
        }
        if spec.kind == GeneratorKind::Convex && convex_hull_size(&points) != points.len() {
            continue;
        }
        return Ok(points);
    }
    Err(HarnessError::GenerationFailed {
        attempts: SET_ATTEMPTS,
    })
}

/// Incremental sampling: each new point must keep the prefix in general
/// position, so whole-set rejections are rare.
fn random_disk(rng: &mut ChaCha8Rng, n: usize, r: i64) -> Option<Vec<Point>> {
    let mut points: Vec<Point> = Vec::with_capacity(n);
    let r2 = (r as i128) * (r as i128);
    'outer: for _ in 0..n {
        'point: for _ in 0..200 {
            let x = rng.gen_range(-r..=r);
            let y = rng.gen_range(-r..=r);
            if (x as i128) * (x as i128) + (y as i128) * (y as i128) > r2 {
                continue;
            }
            let p = Point::new(x, y);
            for (i, &a) in points.iter().enumerate() {
                if a == p {
                    continue 'point;
                }
                for &b in &points[i + 1..] {
                    if orientation(a, b, p) == Orientation::Collinear {
                        continue 'point;
                    }
                }
            }
            points.push(p);
            continue 'outer;
        }
        return None;
    }
    Some(points)
}

fn convex_circle(rng: &mut ChaCha8Rng, n: usize, scale: i64) -> Option<Vec<Point>> {
    // Stratified angles keep gaps at least 0.2 * TAU / n; a radius growing
    // with n^2 keeps every consecutive-triple sagitta above one lattice
    // unit, so rounding cannot create collinear triples.
    let r = scale.max(20 * (n as i64) * (n as i64)) as f64;
    let points: Vec<Point> = (0..n)
        .map(|i| {
            let t = std::f64::consts::TAU * (i as f64 + rng.gen_range(0.1..0.9)) / n as f64;
            Point::new((r * t.cos()).round() as i64, (r * t.sin()).round() as i64)
        })
        .collect();
    Some(points)
}

fn perturbed_grid(rng: &mut ChaCha8Rng, n: usize, scale: i64) -> Option<Vec<Point>> {
    let side = (n as f64).sqrt().ceil() as i64;
    let cell = (scale / side.max(1)).max(8);
    let jitter = cell / 4;
    let mut points = Vec::with_capacity(n);
    'cells: for row in 0..side {
        for col in 0..side {
            if points.len() == n {
                break 'cells;
            }
            points.push(Point::new(
                col * cell + rng.gen_range(-jitter..=jitter),
                row * cell + rng.gen_range(-jitter..=jitter),
            ));
        }
    }
    Some(points)
}

/// Number of hull vertices (strict turns; collinear inputs undercount,
/// which the general-position validation already excludes).
pub fn convex_hull_size(points: &[Point]) -> usize {
    if points.len() < 3 {
        return points.len();
    }
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    let build = |iter: &mut dyn Iterator<Item = Point>| {
        let mut chain: Vec<Point> = Vec::new();
        for p in iter {
            while chain.len() >= 2
                && orientation(chain[chain.len() - 2], chain[chain.len() - 1], p)
                    != Orientation::CounterClockwise
            {
                chain.pop();
            }
            chain.push(p);
        }
        chain
    };
    let lower = build(&mut pts.iter().copied());
    let upper = build(&mut pts.iter().rev().copied());
    lower.len() + upper.len() - 2
}

/// One extremal-search trial result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentRecord {
    pub n: usize,
    pub trial: u32,
    pub seed: u64,
    pub query: String,
    pub edges: usize,
    pub maximal: bool,
    /// NONE: every candidate decided and the final recheck certified the
    /// graph pattern-free. BUDGET: some search ran out of budget.
    pub status: Status,
    pub elapsed_ms: u64,
}

/// Greedy maximal pattern-free graph: candidate edges are inserted in a
/// seeded random order and kept only when the detector certifies that no
/// witness of `query` appears. A budget exhaustion rejects the candidate
/// (conservative) and voids the maximality flag.
pub fn maximal_pattern_free(
    points: &[Point],
    query: &Query,
    seed: u64,
    per_candidate_budget: SearchBudget,
) -> Result<(GeometricGraph, bool, Status), HarnessError> {
    let n = points.len();
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    candidates.shuffle(&mut rng);

    let mut rel = RelationGraph::with_capacity(candidates.len());
    let mut kept: Vec<(usize, usize)> = Vec::new();
    let mut budget_hit = false;

    for &(u, v) in &candidates {
        let seg = Segment::new(points[u], points[v]).expect("distinct points");
        let mut row = Vec::with_capacity(kept.len());
        for &(a, b) in &kept {
            let other = Segment::new(points[a], points[b]).expect("distinct points");
            row.push(match classify_pair(other, seg) {
                Ok(t) => t,
                Err(e) => return Err(HarnessError::Graph(e.into())),
            });
        }
        rel.push_edge(&row);
        let x = rel.edge_count() - 1;
        let d = find_witness_with_edge(&rel, query, x, per_candidate_budget)?;
        match d.status {
            Status::None => kept.push((u, v)),
            Status::Found => rel.pop_edge(),
            Status::Budget => {
                budget_hit = true;
                rel.pop_edge();
            }
        }
    }

    let graph = GeometricGraph::new(points.to_vec(), kept)?;
    // Fresh full detector pass over the final graph.
    let matrix = IntersectionMatrix::from_graph(&graph)?;
    let recheck = detect(&matrix, query, SearchBudget::nodes(u64::MAX / 2))?;
    let status = match recheck.status {
        Status::Found => {
            return Err(HarnessError::InvariantFailure(
                "greedy graph failed its pattern-free recheck".into(),
            ))
        }
        Status::Budget => Status::Budget,
        Status::None => {
            if budget_hit {
                Status::Budget
            } else {
                Status::None
            }
        }
    };
    Ok((graph, !budget_hit && status == Status::None, status))
}

fn derive_seed(master: u64, n: usize, trial: u32, stream: u64) -> u64 {
    // splitmix64 over a mixed key.
    let mut z = master
        ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (trial as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9)
        ^ stream.wrapping_mul(0x94D0_49BB_1331_11EB);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Runs the full experiment matrix: one record per (n, trial), each with a
/// private seed derived from (master seed, n, trial). Per-record failures
/// are reported on the error stream and the run continues.
pub fn growth_experiment(
    kind: GeneratorKind,
    coordinate_scale: i64,
    query: &Query,
    n_values: &[usize],
    trials: u32,
    master_seed: u64,
    per_candidate_budget: SearchBudget,
) -> Vec<Result<(ExperimentRecord, GeometricGraph), HarnessError>> {
    let mut out = Vec::new();
    let mut sorted_n = n_values.to_vec();
    sorted_n.sort_unstable();
    for &n in &sorted_n {
        for trial in 0..trials {
            let gen_seed = derive_seed(master_seed, n, trial, 1);
            let shuffle_seed = derive_seed(master_seed, n, trial, 2);
            let start = Instant::now();
            let result = generate_points(&GeneratorSpec {
                kind,
                n,
                seed: gen_seed,
                coordinate_scale,
            })
            .and_then(|points| {
                maximal_pattern_free(&points, query, shuffle_seed, per_candidate_budget)
            })
            .map(|(graph, maximal, status)| {
                let record = ExperimentRecord {
                    n,
                    trial,
                    seed: gen_seed,
                    query: query.to_string(),
                    edges: graph.edge_count(),
                    maximal,
                    status,
                    elapsed_ms: start.elapsed().as_millis() as u64,
                };
                (record, graph)
            });
            out.push(result);
        }
    }
    out
}

/// CSV with the fixed column set; rows already sorted by (n, trial).
pub fn records_to_csv(records: &[ExperimentRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "n",
        "trial",
        "seed",
        "query",
        "edges",
        "maximal",
        "status",
        "elapsed_ms",
    ])
    .expect("csv header");
    for r in records {
        let status = match r.status {
            Status::Found => "FOUND",
            Status::None => "NONE",
            Status::Budget => "BUDGET",
        };
        w.write_record([
            r.n.to_string(),
            r.trial.to_string(),
            r.seed.to_string(),
            r.query.clone(),
            r.edges.to_string(),
            r.maximal.to_string(),
            status.to_string(),
            r.elapsed_ms.to_string(),
        ])
        .expect("csv row");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("csv utf8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic_and_valid() {
        for kind in [
            GeneratorKind::RandomDisk,
            GeneratorKind::Convex,
            GeneratorKind::PerturbedGrid,
        ] {
            let spec = GeneratorSpec {
                kind,
                n: 24,
                seed: 11,
                coordinate_scale: 1000,
            };
            let a = generate_points(&spec).unwrap();
            let b = generate_points(&spec).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.len(), 24);
            assert!(validate_general_position(&a).is_ok());
        }
    }

    #[test]
    fn convex_generator_outputs_hull_points() {
        let spec = GeneratorSpec {
            kind: GeneratorKind::Convex,
            n: 12,
            seed: 3,
            coordinate_scale: 100_000,
        };
        let pts = generate_points(&spec).unwrap();
        assert_eq!(convex_hull_size(&pts), 12);
    }

    #[test]
    fn perturbed_grid_has_distinct_valid_points() {
        let spec = GeneratorSpec {
            kind: GeneratorKind::PerturbedGrid,
            n: 9,
            seed: 5,
            coordinate_scale: 900,
        };
        let pts = generate_points(&spec).unwrap();
        assert_eq!(pts.len(), 9);
        assert!(validate_general_position(&pts).is_ok());
    }

    #[test]
    fn crossing_free_graph_is_planar_bounded() {
        let spec = GeneratorSpec {
            kind: GeneratorKind::RandomDisk,
            n: 20,
            seed: 9,
            coordinate_scale: 500,
        };
        let pts = generate_points(&spec).unwrap();
        let q = Query::PairwiseCrossing { k: 2 };
        let (g, maximal, status) =
            maximal_pattern_free(&pts, &q, 77, SearchBudget::default()).unwrap();
        assert!(g.edge_count() <= 3 * 20 - 6);
        assert!(maximal);
        assert_eq!(status, Status::None);
        // Recheck independently.
        let m = IntersectionMatrix::from_graph(&g).unwrap();
        let d = detect(&m, &q, SearchBudget::default()).unwrap();
        assert_eq!(d.status, Status::None);
    }

    #[test]
    fn family_free_graph_respects_linear_bound() {
        let spec = GeneratorSpec {
            kind: GeneratorKind::RandomDisk,
            n: 16,
            seed: 21,
            coordinate_scale: 400,
        };
        let pts = generate_points(&spec).unwrap();
        let q = Query::CrossingFamily { k: 2, l: 1 };
        let (g, _, status) = maximal_pattern_free(&pts, &q, 5, SearchBudget::default()).unwrap();
        assert!(g.edge_count() <= 64 * 16 + 64);
        assert_eq!(status, Status::None);
        let m = IntersectionMatrix::from_graph(&g).unwrap();
        assert_eq!(
            detect(&m, &q, SearchBudget::default()).unwrap().status,
            Status::None
        );
    }

    #[test]
    fn csv_is_deterministic_modulo_elapsed() {
        let q = Query::PairwiseCrossing { k: 2 };
        let run = || {
            let results = growth_experiment(
                GeneratorKind::RandomDisk,
                300,
                &q,
                &[8, 12],
                2,
                42,
                SearchBudget::default(),
            );
            let records: Vec<ExperimentRecord> = results
                .into_iter()
                .map(|r| r.expect("experiment succeeds").0)
                .collect();
            records_to_csv(&records)
        };
        let strip_elapsed = |csv: &str| {
            csv.lines()
                .map(|l| l.rsplit_once(',').unwrap().0.to_string())
                .collect::<Vec<_>>()
                .join("\n")
        };
        assert_eq!(strip_elapsed(&run()), strip_elapsed(&run()));
    }

    #[test]
    fn csv_quotes_query_column() {
        let r = ExperimentRecord {
            n: 4,
            trial: 0,
            seed: 1,
            query: "crossing-family:2,1".into(),
            edges: 3,
            maximal: true,
            status: Status::None,
            elapsed_ms: 0,
        };
        let csv = records_to_csv(&[r]);
        assert!(csv.contains("\"crossing-family:2,1\""));
        assert!(csv.starts_with("n,trial,seed,query,edges,maximal,status,elapsed_ms"));
    }

    #[test]
    fn budget_exhaustion_voids_maximality() {
        // A one-node budget cannot certify anything; every candidate is
        // conservatively rejected and the flag must clear.
        let spec = GeneratorSpec {
            kind: GeneratorKind::RandomDisk,
            n: 10,
            seed: 2,
            coordinate_scale: 200,
        };
        let pts = generate_points(&spec).unwrap();
        let q = Query::DisjointMatching { k: 2 };
        let (g, maximal, status) =
            maximal_pattern_free(&pts, &q, 3, SearchBudget::nodes(1)).unwrap();
        assert!(!maximal);
        assert_eq!(status, Status::Budget);
        // The pattern-free guarantee survives: rejected-everything is safe.
        let m = IntersectionMatrix::from_graph(&g).unwrap();
        assert_eq!(
            detect(&m, &q, SearchBudget::default()).unwrap().status,
            Status::None
        );
    }
}
