//! Geometric graph container and JSON serialization.

use crate::error::GraphError;
use crate::geometry::{validate_general_position, Point, Segment, Violation};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A geometric graph: integer points plus an edge list over vertex indices.
/// Edges are stored normalized with u < v; no self-loops or duplicates; the
/// point set satisfies general position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricGraph {
    points: Vec<Point>,
    edges: Vec<(usize, usize)>,
}

impl GeometricGraph {
    pub fn new(points: Vec<Point>, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for p in &points {
            if !p.in_budget() {
                return Err(GraphError::CoordinateOutOfBudget { x: p.x, y: p.y });
            }
        }
        match validate_general_position(&points) {
            r if r.is_ok() => {}
            crate::geometry::GeneralPositionReport::Violation(v) => {
                return Err(match v {
                    Violation::DuplicatePair { i, j } => GraphError::DuplicatePoint { i, j },
                    Violation::CollinearTriple { i, j, k } => {
                        GraphError::CollinearTriple { i, j, k }
                    }
                })
            }
            _ => unreachable!(),
        }
        let mut normalized = Vec::with_capacity(edges.len());
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u >= points.len() || v >= points.len() {
                return Err(GraphError::IndexOutOfRange {
                    index: u.max(v),
                    count: points.len(),
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                let first = normalized.iter().position(|&e| e == key).unwrap();
                return Err(GraphError::DuplicateEdge {
                    first,
                    second: index,
                });
            }
            normalized.push(key);
        }
        Ok(GeometricGraph {
            points,
            edges: normalized,
        })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// The straight-line segment realizing edge `i`.
    pub fn segment(&self, i: usize) -> Segment {
        let (u, v) = self.edges[i];
        Segment::new(self.points[u], self.points[v]).expect("validated edge")
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| u == vertex || v == vertex)
            .count()
    }
}

/// Wire format for graph files.
#[derive(Debug, Serialize, Deserialize)]
pub struct GraphFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<[i64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<MatrixFile>,
}

/// Wire format for abstract topological input: an explicit intersection
/// matrix with every unordered pair listed.
#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    pub edge_count: usize,
    pub pairs: Vec<(usize, usize, String)>,
}

/// Either a geometric graph or an abstract intersection matrix, as loaded
/// from a graph file.
#[derive(Debug)]
pub enum LoadedInput {
    Geometric(GeometricGraph),
    Topological(crate::matrix::IntersectionMatrix),
}

impl LoadedInput {
    pub fn matrix(&self) -> Result<crate::matrix::IntersectionMatrix, GraphError> {
        match self {
            LoadedInput::Geometric(g) => crate::matrix::IntersectionMatrix::from_graph(g),
            LoadedInput::Topological(m) => Ok(m.clone()),
        }
    }

    pub fn geometric(&self) -> Result<&GeometricGraph, GraphError> {
        match self {
            LoadedInput::Geometric(g) => Ok(g),
            LoadedInput::Topological(_) => Err(GraphError::NotGeometric),
        }
    }
}

/// Parses a graph file. A `matrix` key selects abstract topological input;
/// otherwise `points`/`edges` describe a geometric graph.
pub fn load_input(json: &str) -> Result<LoadedInput, GraphError> {
    let file: GraphFile =
        serde_json::from_str(json).map_err(|e| GraphError::Parse(e.to_string()))?;
    match (file.matrix, file.points, file.edges) {
        (Some(m), None, None) => Ok(LoadedInput::Topological(
            crate::matrix::IntersectionMatrix::from_file(&m)?,
        )),
        (None, Some(points), edges) => {
            let points = points
                .into_iter()
                .map(|[x, y]| Point::new(x, y))
                .collect::<Vec<_>>();
            let edges = edges
                .unwrap_or_default()
                .into_iter()
                .map(|[u, v]| (u, v))
                .collect::<Vec<_>>();
            Ok(LoadedInput::Geometric(GeometricGraph::new(points, edges)?))
        }
        (Some(_), _, _) => Err(GraphError::Parse(
            "a file carries either points/edges or a matrix, not both".into(),
        )),
        (None, None, _) => Err(GraphError::Parse(
            "missing points (or matrix) in graph file".into(),
        )),
    }
}

pub fn load_graph(json: &str) -> Result<GeometricGraph, GraphError> {
    match load_input(json)? {
        LoadedInput::Geometric(g) => Ok(g),
        LoadedInput::Topological(_) => Err(GraphError::NotGeometric),
    }
}

pub fn save_graph(g: &GeometricGraph) -> String {
    let file = GraphFile {
        points: Some(g.points.iter().map(|p| [p.x, p.y]).collect()),
        edges: Some(g.edges.iter().map(|&(u, v)| [u, v]).collect()),
        matrix: None,
    };
    serde_json::to_string_pretty(&file).expect("graph serialization cannot fail")
}
