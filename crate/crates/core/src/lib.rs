//! Exact computational machinery for geometric graphs: crossing/disjoint
//! classification, detection of forbidden substructures (crossing families,
//! natural grids, pairwise crossing or disjoint sets, three-edge circle
//! patterns), halving-line and ham-sandwich partition procedures, good
//! endpoint analysis of disjoint matchings, and an extremal-search harness
//! for probing edge-count bounds at desk scale.

pub mod cli;
pub mod detect;
pub mod error;
pub mod extremal;
pub mod geometry;
pub mod goodvertex;
pub mod graph;
pub mod matrix;
pub mod partition;
pub mod render;

pub use geometry::{
    classify_pair, orientation, AngularInterval, DirectedLine, IntersectionType, Orientation,
    Point, Segment, Side,
};
pub use graph::{load_graph, load_input, save_graph, GeometricGraph, LoadedInput};
pub use matrix::{CircleGraphPattern3, IntersectionMatrix};
