//! Partition procedure properties, rechecked with independent exact
//! counting: the halving invariant along the whole rotation trace, bounded
//! per-step deltas, ham-sandwich bisection, and decomposition accounting.

mod common;

use common::{random_graph, random_points, rng};
use geomgraph::geometry::{orientation, Orientation, Point, Side};
use geomgraph::graph::GeometricGraph;
use geomgraph::partition::{
    decompose, find_halving_edge, ham_sandwich, rotate_to_balance, PartitionNode,
};
use rand::Rng;

/// Independent side recount through the pair of on-line vertices.
fn recount(points: &[Point], pair: (usize, usize)) -> (usize, usize) {
    let (a, b) = pair;
    let mut left = 0;
    let mut right = 0;
    for (i, &p) in points.iter().enumerate() {
        if i == a || i == b {
            continue;
        }
        match orientation(points[a], points[b], p) {
            Orientation::CounterClockwise => left += 1,
            Orientation::Clockwise => right += 1,
            Orientation::Collinear => panic!("general position"),
        }
    }
    (left, right)
}

fn recount_edges(g: &GeometricGraph, pair: (usize, usize)) -> (usize, usize) {
    let points = g.points();
    let (a, b) = pair;
    let mut e_left = 0;
    let mut e_right = 0;
    for &(x, y) in g.edges() {
        if [x, y].contains(&a) || [x, y].contains(&b) {
            continue;
        }
        let ox = orientation(points[a], points[b], points[x]);
        let oy = orientation(points[a], points[b], points[y]);
        if ox == Orientation::CounterClockwise && oy == Orientation::CounterClockwise {
            e_left += 1;
        }
        if ox == Orientation::Clockwise && oy == Orientation::Clockwise {
            e_right += 1;
        }
    }
    (e_left, e_right)
}

#[test]
fn halving_edge_validated_by_side_counts() {
    let mut r = rng(0x7A1);
    for _ in 0..60 {
        let n = 2 * r.gen_range(1..=15);
        let points = random_points(&mut r, n, 300);
        let g = GeometricGraph::new(points.clone(), vec![]).unwrap();
        let (a, b) = find_halving_edge(&g).unwrap();
        let (l, rr) = recount(&points, (a, b));
        assert_eq!(l, (n - 2) / 2);
        assert_eq!(rr, (n - 2) / 2);
    }
}

#[test]
fn rotation_trace_invariants_hold() {
    let mut r = rng(0x707A7E);
    for _ in 0..40 {
        let n = 2 * r.gen_range(2..=20);
        let e = r.gen_range(0..=3 * n);
        let g = random_graph(&mut r, n, e, 500);
        let t = rotate_to_balance(&g).unwrap();
        let half = (n - 2) / 2;

        for (i, s) in t.trace.iter().enumerate() {
            assert_eq!(s.step, i);
            // Exact halving at every recorded step.
            assert_eq!(recount(g.points(), s.pair), (half, half));
            // Recorded edge counts match an independent recount.
            assert_eq!(recount_edges(&g, s.pair), (s.e_left, s.e_right));
        }
        // Per-step deltas bounded by n.
        for w in t.trace.windows(2) {
            assert!(w[0].e_left.abs_diff(w[1].e_left) <= n);
            assert!(w[0].e_right.abs_diff(w[1].e_right) <= n);
        }
        // Termination bound: at most n(n-1) events.
        assert!(t.trace.len() <= n * (n - 1));
        // Reversal: last event is the first pair reversed with swapped counts.
        let first = t.trace.first().unwrap();
        let last = t.trace.last().unwrap();
        assert_eq!(last.pair, (first.pair.1, first.pair.0));
        assert_eq!((last.e_left, last.e_right), (first.e_right, first.e_left));
        // The balanced state satisfies the window.
        let f = t.final_state();
        assert!(f.e_left.abs_diff(f.e_right) <= 2 * n);
    }
}

#[test]
fn ham_sandwich_bisects_random_instances() {
    let mut r = rng(0x4A3);
    for _ in 0..120 {
        let n1 = r.gen_range(1..=40);
        let n2 = r.gen_range(1..=40);
        let all = random_points(&mut r, n1 + n2, 800);
        let (v1, v2) = all.split_at(n1);
        let cut = ham_sandwich(v1, v2).unwrap();
        // Exact recount straight from the returned line.
        for (class, points) in [(0, v1), (1, v2)] {
            let mut left = 0;
            let mut right = 0;
            let mut on = 0;
            for &p in points {
                match cut.line.side_of(p) {
                    Side::Left => left += 1,
                    Side::Right => right += 1,
                    Side::On => on += 1,
                }
            }
            assert_eq!(
                (left, on, right),
                (
                    cut.counts[class].left,
                    cut.counts[class].on,
                    cut.counts[class].right
                )
            );
            assert!(left <= points.len() / 2, "left overfull");
            assert!(right <= points.len() / 2, "right overfull");
        }
    }
}

fn collect_leaf_and_discards(
    node: &PartitionNode,
    leaf_edges: &mut Vec<usize>,
    discards: &mut Vec<usize>,
) {
    leaf_edges.extend(&node.leaf_edges);
    if let Some(split) = &node.split {
        for edges in split.discards.values() {
            discards.extend(edges);
        }
    }
    for c in &node.children {
        collect_leaf_and_discards(c, leaf_edges, discards);
    }
}

#[test]
fn decompose_accounts_every_edge_exactly_once() {
    let mut r = rng(0xDEC0);
    for _ in 0..25 {
        let n = r.gen_range(6..=48);
        let e = r.gen_range(0..=2 * n);
        let g = random_graph(&mut r, n, e, 900);
        let t = decompose(&g, 4).unwrap();
        let mut leaf = Vec::new();
        let mut disc = Vec::new();
        collect_leaf_and_discards(&t.root, &mut leaf, &mut disc);
        let mut all: Vec<usize> = leaf.iter().chain(disc.iter()).copied().collect();
        all.sort_unstable();
        let expect: Vec<usize> = (0..g.edge_count()).collect();
        assert_eq!(all, expect, "each edge accounted exactly once");
    }
}

fn check_child_sizes(node: &PartitionNode) {
    if node.children.is_empty() {
        return;
    }
    let n = node.vertices.len();
    let lo = (n / 4).saturating_sub(2);
    let hi = n.div_ceil(4) * 3 + 2;
    for c in &node.children {
        assert!(
            c.vertices.len() >= lo && c.vertices.len() <= hi,
            "child size {} outside [{lo}, {hi}] for node of {n}",
            c.vertices.len()
        );
        check_child_sizes(c);
    }
}

#[test]
fn decompose_children_balanced_and_depth_bounded() {
    let mut r = rng(0xBA1A);
    for _ in 0..15 {
        let n = r.gen_range(12..=64);
        let e = r.gen_range(n..=3 * n);
        let g = random_graph(&mut r, n, e, 1200);
        let t = decompose(&g, 4).unwrap();
        check_child_sizes(&t.root);
        let bound = ((n as f64).ln() / (4f64 / 3f64).ln()).ceil() as usize + 1;
        assert!(
            t.depth() <= bound,
            "depth {} exceeds {bound} for n={n}",
            t.depth()
        );
    }
}

#[test]
fn decompose_deterministic() {
    let mut r = rng(0xD3);
    let g = random_graph(&mut r, 30, 60, 700);
    let a = decompose(&g, 4).unwrap().to_json();
    let b = decompose(&g, 4).unwrap().to_json();
    assert_eq!(a, b);
}

#[test]
fn quadrant_vertices_partition_the_split() {
    let mut r = rng(0x9A9A);
    let g = random_graph(&mut r, 40, 80, 1000);
    let t = decompose(&g, 6).unwrap();
    fn walk(node: &PartitionNode) {
        if let Some(split) = &node.split {
            let mut quad: Vec<usize> = split.quadrants.iter().flatten().copied().collect();
            quad.sort_unstable();
            let mut expected: Vec<usize> = node.vertices.clone();
            if let Some(w) = split.odd_vertex {
                expected.retain(|&v| v != w);
            }
            expected.sort_unstable();
            assert_eq!(quad, expected, "quadrants partition the active set");
            // Children are the diagonal unions.
            let mut c1: Vec<usize> = split.quadrants[0]
                .iter()
                .chain(&split.quadrants[3])
                .copied()
                .collect();
            c1.sort_unstable();
            assert_eq!(c1, node.children[0].vertices);
            let mut c2: Vec<usize> = split.quadrants[1]
                .iter()
                .chain(&split.quadrants[2])
                .copied()
                .collect();
            c2.sort_unstable();
            assert_eq!(c2, node.children[1].vertices);
        }
        for c in &node.children {
            walk(c);
        }
    }
    walk(&t.root);
}
