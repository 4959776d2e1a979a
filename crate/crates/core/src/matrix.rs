//! The intersection matrix: total symmetric classification of edge pairs,
//! and the intersection graphs of matchings.

use crate::error::{DetectError, GraphError};
use crate::geometry::{classify_pair, IntersectionType};
use crate::graph::{GeometricGraph, MatrixFile};
use serde::{Deserialize, Serialize};

/// Where a matrix came from. Abstract matrices skip geometric validation;
/// the caller vouches that they describe a simple topological graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Geometric,
    Topological,
}

/// Symmetric, total map from unordered edge-index pairs to their
/// [`IntersectionType`], stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionMatrix {
    edge_count: usize,
    entries: Vec<IntersectionType>,
    provenance: Provenance,
}

fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

impl IntersectionMatrix {
    /// Classifies every pair of the graph's edges.
    pub fn from_graph(g: &GeometricGraph) -> Result<Self, GraphError> {
        let e = g.edge_count();
        let mut entries = Vec::with_capacity(e * e.saturating_sub(1) / 2);
        for j in 0..e {
            for i in 0..j {
                entries.push(classify_pair(g.segment(i), g.segment(j))?);
            }
        }
        Ok(IntersectionMatrix {
            edge_count: e,
            entries,
            provenance: Provenance::Geometric,
        })
    }

    /// Builds an abstract matrix from an explicit pair list. Every unordered
    /// pair must appear exactly once.
    pub fn from_file(file: &MatrixFile) -> Result<Self, GraphError> {
        let e = file.edge_count;
        let total = e * e.saturating_sub(1) / 2;
        let mut entries: Vec<Option<IntersectionType>> = vec![None; total];
        for &(i, j, ref kind) in &file.pairs {
            if i == j || i >= e || j >= e {
                return Err(GraphError::BadMatrixEntry {
                    i,
                    j,
                    problem: "indices must be distinct and in range".into(),
                });
            }
            let t = match kind.as_str() {
                "CROSS" => IntersectionType::Cross,
                "SHARE_ENDPOINT" => IntersectionType::ShareEndpoint,
                "DISJOINT" => IntersectionType::Disjoint,
                other => {
                    return Err(GraphError::BadMatrixEntry {
                        i,
                        j,
                        problem: format!("unknown intersection type {other:?}"),
                    })
                }
            };
            let slot = &mut entries[pair_index(i.min(j), i.max(j))];
            if slot.is_some() {
                return Err(GraphError::BadMatrixEntry {
                    i,
                    j,
                    problem: "pair listed more than once".into(),
                });
            }
            *slot = Some(t);
        }
        let mut filled = Vec::with_capacity(total);
        for j in 0..e {
            for i in 0..j {
                match entries[pair_index(i, j)] {
                    Some(t) => filled.push(t),
                    None => return Err(GraphError::MissingMatrixEntry { i, j }),
                }
            }
        }
        Ok(IntersectionMatrix {
            edge_count: e,
            entries: filled,
            provenance: Provenance::Topological,
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// The classification of the unordered pair {i, j}, i != j.
    pub fn get(&self, i: usize, j: usize) -> IntersectionType {
        assert!(i != j, "matrix entries exist for distinct edges only");
        self.entries[pair_index(i.min(j), i.max(j))]
    }

    /// Appends one edge given its classification against every existing
    /// edge, in index order. Used by the incremental harness.
    pub fn push_edge(&mut self, row: &[IntersectionType]) {
        assert_eq!(row.len(), self.edge_count);
        self.entries.extend_from_slice(row);
        self.edge_count += 1;
    }

    /// Removes the most recently appended edge.
    pub fn pop_edge(&mut self) {
        assert!(self.edge_count > 0);
        self.edge_count -= 1;
        self.entries
            .truncate(self.edge_count * self.edge_count.saturating_sub(1) / 2);
    }
}

/// The four graphs on three vertices, as realized by matchings of segments.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CircleGraphPattern3 {
    /// Three pairwise crossing segments (triangle intersection graph).
    TripleCrossing,
    /// Three pairwise disjoint segments (empty intersection graph).
    TripleDisjoint,
    /// Two disjoint segments both crossing a third (path).
    Grid21,
    /// Two crossing segments both disjoint from a third (edge + isolated vertex).
    Family21,
}

impl CircleGraphPattern3 {
    /// Number of crossing pairs among the three edges; this count determines
    /// the 3-vertex intersection graph up to isomorphism.
    pub fn crossing_pairs(self) -> usize {
        match self {
            CircleGraphPattern3::TripleCrossing => 3,
            CircleGraphPattern3::Grid21 => 2,
            CircleGraphPattern3::Family21 => 1,
            CircleGraphPattern3::TripleDisjoint => 0,
        }
    }

    pub fn all() -> [CircleGraphPattern3; 4] {
        [
            CircleGraphPattern3::TripleCrossing,
            CircleGraphPattern3::TripleDisjoint,
            CircleGraphPattern3::Grid21,
            CircleGraphPattern3::Family21,
        ]
    }
}

impl std::fmt::Display for CircleGraphPattern3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CircleGraphPattern3::TripleCrossing => "k3",
            CircleGraphPattern3::TripleDisjoint => "empty",
            CircleGraphPattern3::Grid21 => "grid21",
            CircleGraphPattern3::Family21 => "family21",
        };
        f.write_str(s)
    }
}

/// The intersection graph of a matching: vertices are edge ids, adjacency
/// means the segments cross (edges of a matching intersect iff they cross).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingIntersectionGraph {
    pub edge_ids: Vec<usize>,
    /// Index pairs into `edge_ids`, i < j.
    pub adjacency: Vec<(usize, usize)>,
}

impl MatchingIntersectionGraph {
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.edge_ids.len()];
        for &(i, j) in &self.adjacency {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg.sort_unstable();
        deg
    }

    /// For a 3-edge matching: the realized pattern.
    pub fn pattern3(&self) -> Option<CircleGraphPattern3> {
        if self.edge_ids.len() != 3 {
            return None;
        }
        Some(match self.adjacency.len() {
            3 => CircleGraphPattern3::TripleCrossing,
            2 => CircleGraphPattern3::Grid21,
            1 => CircleGraphPattern3::Family21,
            0 => CircleGraphPattern3::TripleDisjoint,
            _ => unreachable!(),
        })
    }
}

/// Builds the intersection graph of the given edge set, which must form a
/// matching: no pair may share an endpoint.
pub fn matching_intersection_graph(
    m: &IntersectionMatrix,
    edge_ids: &[usize],
) -> Result<MatchingIntersectionGraph, DetectError> {
    for &id in edge_ids {
        if id >= m.edge_count() {
            return Err(DetectError::EdgeOutOfRange {
                index: id,
                count: m.edge_count(),
            });
        }
    }
    let mut adjacency = Vec::new();
    for j in 0..edge_ids.len() {
        for i in 0..j {
            match m.get(edge_ids[i], edge_ids[j]) {
                IntersectionType::ShareEndpoint => {
                    return Err(DetectError::NotAMatching {
                        i: edge_ids[i],
                        j: edge_ids[j],
                    })
                }
                IntersectionType::Cross => adjacency.push((i, j)),
                IntersectionType::Disjoint => {}
            }
        }
    }
    Ok(MatchingIntersectionGraph {
        edge_ids: edge_ids.to_vec(),
        adjacency,
    })
}
