//! Recursive decomposition: halve the vertices with a rotated halving
//! line, cut again with a translated ham-sandwich line, recurse on the two
//! diagonal quadrant unions, and account for every discarded edge.

use super::{ham_sandwich, rotate_to_balance, translate_balance};
use crate::error::PartitionError;
use crate::geometry::{DirectedLine, Side};
use crate::graph::GeometricGraph;
use serde::Serialize;
use std::collections::BTreeMap;

/// Why an edge was dropped at a node instead of passed to a child.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscardReason {
    /// Entirely in the open left halfplane of the halving line.
    LeftOfL,
    RightOfL,
    /// Crossing the halving line but entirely on one side of the cut.
    SameSideOfLPrime,
    /// Endpoints fall into different children.
    BetweenChildren,
    /// Incident to the vertex dropped to restore even parity.
    OddVertexDrop,
}

/// Split data recorded at an internal node.
#[derive(Debug, Clone, Serialize)]
pub struct SplitInfo {
    pub line_l: DirectedLine,
    pub line_l_prime: DirectedLine,
    /// Vertex sets V11, V12, V21, V22 (global indices).
    pub quadrants: [Vec<usize>; 4],
    /// Dropped vertex when the node size was odd.
    pub odd_vertex: Option<usize>,
    /// Discarded edge ids per reason.
    pub discards: BTreeMap<DiscardReason, Vec<usize>>,
}

/// One node: its vertex set, the split (for internal nodes), the edges kept
/// at a leaf, and zero or two children.
#[derive(Debug, Clone, Serialize)]
pub struct PartitionNode {
    pub vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitInfo>,
    pub leaf_edges: Vec<usize>,
    pub children: Vec<PartitionNode>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PartitionTree {
    pub leaf_size: usize,
    pub root: PartitionNode,
}

impl PartitionTree {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tree serialization cannot fail")
    }

    pub fn depth(&self) -> usize {
        fn go(n: &PartitionNode) -> usize {
            1 + n.children.iter().map(go).max().unwrap_or(0)
        }
        go(&self.root)
    }

    /// Total discarded edges plus leaf edges; equals the graph's edge count
    /// when the accounting is exact.
    pub fn accounted_edges(&self) -> usize {
        fn go(n: &PartitionNode) -> usize {
            let here = n.leaf_edges.len()
                + n.split
                    .as_ref()
                    .map(|s| s.discards.values().map(Vec::len).sum())
                    .unwrap_or(0);
            here + n.children.iter().map(go).sum::<usize>()
        }
        go(&self.root)
    }
}

/// Recursively decomposes the graph down to `leaf_size` vertices per leaf.
pub fn decompose(g: &GeometricGraph, leaf_size: usize) -> Result<PartitionTree, PartitionError> {
    if leaf_size < 2 {
        return Err(PartitionError::BadLeafSize(leaf_size));
    }
    let vertices: Vec<usize> = (0..g.vertex_count()).collect();
    let edges: Vec<usize> = (0..g.edge_count()).collect();
    let root = build_node(g, vertices, edges, leaf_size)?;
    Ok(PartitionTree { leaf_size, root })
}

fn build_node(
    g: &GeometricGraph,
    vertices: Vec<usize>,
    edge_ids: Vec<usize>,
    leaf_size: usize,
) -> Result<PartitionNode, PartitionError> {
    if vertices.len() <= leaf_size {
        return Ok(PartitionNode {
            vertices,
            split: None,
            leaf_edges: edge_ids,
            children: Vec::new(),
        });
    }

    let mut discards: BTreeMap<DiscardReason, Vec<usize>> = BTreeMap::new();
    let mut active: Vec<usize> = vertices.clone();
    let mut remaining: Vec<usize> = edge_ids.clone();

    // Restore even parity by dropping the vertex of minimum degree within
    // this node (ties: lowest index).
    let mut odd_vertex = None;
    if !active.len().is_multiple_of(2) {
        let degree = |v: usize| {
            remaining
                .iter()
                .filter(|&&e| {
                    let (a, b) = g.edges()[e];
                    a == v || b == v
                })
                .count()
        };
        let &w = active.iter().min_by_key(|&&v| (degree(v), v)).unwrap();
        odd_vertex = Some(w);
        let (dropped, kept): (Vec<usize>, Vec<usize>) = remaining.iter().partition(|&&e| {
            let (a, b) = g.edges()[e];
            a == w || b == w
        });
        if !dropped.is_empty() {
            discards.insert(DiscardReason::OddVertexDrop, dropped);
        }
        remaining = kept;
        active.retain(|&v| v != w);
    }

    // Induced subgraph on the active vertices, locally renumbered.
    let local_of: BTreeMap<usize, usize> =
        active.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let local_points: Vec<_> = active.iter().map(|&v| g.points()[v]).collect();
    let local_edges: Vec<(usize, usize)> = remaining
        .iter()
        .map(|&e| {
            let (a, b) = g.edges()[e];
            (local_of[&a], local_of[&b])
        })
        .collect();
    let sub = GeometricGraph::new(local_points, local_edges)?;

    let rotation = rotate_to_balance(&sub)?;
    let state = rotation.final_state();
    let (la, lb) = state.pair;
    let line_l = state.line.clone();

    // Vertex classes by side of l; the two on-line vertices join the class
    // on their directed side.
    let mut v1_local: Vec<usize> = vec![la];
    let mut v2_local: Vec<usize> = vec![lb];
    for i in 0..sub.vertex_count() {
        if i == la || i == lb {
            continue;
        }
        match line_l.side_of(sub.points()[i]) {
            Side::Left => v1_local.push(i),
            Side::Right => v2_local.push(i),
            Side::On => unreachable!("general position"),
        }
    }
    v1_local.sort_unstable();
    v2_local.sort_unstable();

    let side_of_l = |i: usize| -> Side {
        if i == la {
            Side::Left
        } else if i == lb {
            Side::Right
        } else {
            line_l.side_of(sub.points()[i])
        }
    };

    // Edges fully on one side of l are discarded here.
    let mut crossing: Vec<usize> = Vec::new();
    let mut kept_pairs: Vec<usize> = Vec::new();
    for (slot, &e) in remaining.iter().enumerate() {
        let (a, b) = sub_edge(&sub, slot);
        let sa = line_l.side_of(sub.points()[a]);
        let sb = line_l.side_of(sub.points()[b]);
        match (sa, sb) {
            (Side::Left, Side::Left) => discards.entry(DiscardReason::LeftOfL).or_default().push(e),
            (Side::Right, Side::Right) => {
                discards.entry(DiscardReason::RightOfL).or_default().push(e)
            }
            _ => {
                if sa != Side::On && sb != Side::On {
                    crossing.push(slot);
                }
                kept_pairs.push(slot);
            }
        }
    }

    let v1_points: Vec<_> = v1_local.iter().map(|&i| sub.points()[i]).collect();
    let v2_points: Vec<_> = v2_local.iter().map(|&i| sub.points()[i]).collect();
    let cut = ham_sandwich(&v1_points, &v2_points)?;
    let line_l_prime = translate_balance(&line_l, &cut.line, &crossing, &sub);

    // Quadrants; vertices exactly on l' (only possible in the degenerate
    // parallel case) count as left.
    let mut quadrants: [Vec<usize>; 4] = Default::default();
    let mut child1: Vec<usize> = Vec::new();
    let mut child2: Vec<usize> = Vec::new();
    let mut in_child1 = vec![false; sub.vertex_count()];
    for i in 0..sub.vertex_count() {
        let left_of_lp = line_l_prime.side_of(sub.points()[i]) != Side::Right;
        let in_v1 = side_of_l(i) == Side::Left;
        let q = match (in_v1, left_of_lp) {
            (true, true) => 0,   // V11
            (true, false) => 1,  // V12
            (false, true) => 2,  // V21
            (false, false) => 3, // V22
        };
        quadrants[q].push(active[i]);
        if q == 0 || q == 3 {
            child1.push(i);
            in_child1[i] = true;
        } else {
            child2.push(i);
        }
    }

    // No progress means the translated cut failed to separate anything;
    // close the node as a leaf rather than recurse forever. This cannot
    // happen for general-position inputs with a proper crossing cut.
    if child1.is_empty() || child2.is_empty() {
        return Ok(PartitionNode {
            vertices,
            split: None,
            leaf_edges: edge_ids,
            children: Vec::new(),
        });
    }

    // Route the surviving edges.
    let mut edges_c1: Vec<usize> = Vec::new();
    let mut edges_c2: Vec<usize> = Vec::new();
    for &slot in &kept_pairs {
        let e = remaining[slot];
        let (a, b) = sub_edge(&sub, slot);
        if in_child1[a] && in_child1[b] {
            edges_c1.push(e);
        } else if !in_child1[a] && !in_child1[b] {
            edges_c2.push(e);
        } else if side_of_l(a) != side_of_l(b)
            && (line_l_prime.side_of(sub.points()[a]) != Side::Right)
                == (line_l_prime.side_of(sub.points()[b]) != Side::Right)
        {
            discards
                .entry(DiscardReason::SameSideOfLPrime)
                .or_default()
                .push(e);
        } else {
            discards
                .entry(DiscardReason::BetweenChildren)
                .or_default()
                .push(e);
        }
    }

    let to_global = |locals: &[usize]| -> Vec<usize> {
        let mut v: Vec<usize> = locals.iter().map(|&i| active[i]).collect();
        v.sort_unstable();
        v
    };
    let c1_vertices = to_global(&child1);
    let c2_vertices = to_global(&child2);

    let split = SplitInfo {
        line_l,
        line_l_prime,
        quadrants,
        odd_vertex,
        discards,
    };

    let left = build_node(g, c1_vertices, edges_c1, leaf_size)?;
    let right = build_node(g, c2_vertices, edges_c2, leaf_size)?;
    Ok(PartitionNode {
        vertices,
        split: Some(split),
        leaf_edges: Vec::new(),
        children: vec![left, right],
    })
}

fn sub_edge(sub: &GeometricGraph, slot: usize) -> (usize, usize) {
    sub.edges()[slot]
}
