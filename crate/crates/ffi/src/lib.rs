//! C ABI for the geomgraph library.
//!
//! Handles are opaque pointers created and freed here; every result string
//! is heap-allocated UTF-8 that the caller must release with
//! [`gg_string_free`]. Functions return [`GgStatus`] codes mirroring the
//! CLI exit codes: 0 ok, 1 internal error, 2 parse error, 3 validation
//! error, 4 null or invalid argument.

use geomgraph::detect::{detect, Query, SearchBudget};
use geomgraph::error::GraphError;
use geomgraph::extremal::{growth_experiment, records_to_csv, ExperimentRecord, GeneratorKind};
use geomgraph::geometry::{Point, Segment};
use geomgraph::goodvertex::DisjointMatching;
use geomgraph::graph::{load_input, LoadedInput};
use geomgraph::partition::{decompose, ham_sandwich, rotate_to_balance};
use geomgraph::render::{render_svg, RenderOptions};
use std::ffi::{c_char, CStr, CString};
use std::ptr;

/// Result codes for every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GgStatus {
    Ok = 0,
    InternalError = 1,
    ParseError = 2,
    ValidationError = 3,
    NullArgument = 4,
}

/// Opaque handle to a loaded input: a geometric graph or an abstract
/// intersection matrix.
pub struct GgGraph {
    inner: LoadedInput,
}

fn graph_status(e: &GraphError) -> GgStatus {
    match e {
        GraphError::Parse(_) => GgStatus::ParseError,
        _ => GgStatus::ValidationError,
    }
}

/// # Safety
/// `s` must be a valid NUL-terminated string pointer.
unsafe fn cstr<'a>(s: *const c_char) -> Option<&'a str> {
    if s.is_null() {
        return None;
    }
    CStr::from_ptr(s).to_str().ok()
}

fn hand_out_string(payload: String, out: *mut *mut c_char) -> GgStatus {
    match CString::new(payload) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            GgStatus::Ok
        }
        Err(_) => GgStatus::InternalError,
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn gg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Parses a graph file (JSON) into a handle.
///
/// # Safety
/// `json` must be a valid NUL-terminated string; `out` must be a valid
/// pointer to a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn gg_graph_from_json(
    json: *const c_char,
    out: *mut *mut GgGraph,
) -> GgStatus {
    if out.is_null() {
        return GgStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let Some(json) = cstr(json) else {
        return GgStatus::NullArgument;
    };
    match load_input(json) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(GgGraph { inner }));
            GgStatus::Ok
        }
        Err(e) => graph_status(&e),
    }
}

/// Releases a handle created by [`gg_graph_from_json`].
///
/// # Safety
/// `g` must be a pointer previously returned by this library, not yet
/// freed; NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn gg_graph_free(g: *mut GgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Releases a string returned by any `gg_*` call.
///
/// # Safety
/// `s` must originate from this library and must not be freed twice; NULL
/// is a no-op.
#[no_mangle]
pub unsafe extern "C" fn gg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Serializes a geometric handle back to the JSON file format.
///
/// # Safety
/// `g` must be a live handle; `out` a writable pointer slot.
#[no_mangle]
pub unsafe extern "C" fn gg_graph_to_json(g: *const GgGraph, out: *mut *mut c_char) -> GgStatus {
    if g.is_null() || out.is_null() {
        return GgStatus::NullArgument;
    }
    match &(*g).inner {
        LoadedInput::Geometric(graph) => hand_out_string(geomgraph::save_graph(graph), out),
        LoadedInput::Topological(_) => GgStatus::ValidationError,
    }
}

/// Runs a detector; the witness JSON lands in `out`.
/// Pattern grammar: `crossing-family:K,L | grid:K,L | pairwise-crossing:K |
/// disjoint-matching:K | circle3:{k3|empty|grid21|family21}`.
///
/// # Safety
/// `g` must be a live handle; `pattern` a valid string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gg_detect(
    g: *const GgGraph,
    pattern: *const c_char,
    node_budget: u64,
    out: *mut *mut c_char,
) -> GgStatus {
    if g.is_null() || out.is_null() {
        return GgStatus::NullArgument;
    }
    let Some(pattern) = cstr(pattern) else {
        return GgStatus::NullArgument;
    };
    let Ok(query) = pattern.parse::<Query>() else {
        return GgStatus::ParseError;
    };
    let matrix = match (*g).inner.matrix() {
        Ok(m) => m,
        Err(e) => return graph_status(&e),
    };
    match detect(&matrix, &query, SearchBudget::nodes(node_budget.max(1))) {
        Ok(d) => hand_out_string(d.to_json(), out),
        Err(_) => GgStatus::ParseError,
    }
}

/// Recursive decomposition; the partition tree JSON lands in `out`.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gg_decompose(
    g: *const GgGraph,
    leaf_size: u32,
    out: *mut *mut c_char,
) -> GgStatus {
    if g.is_null() || out.is_null() {
        return GgStatus::NullArgument;
    }
    let graph = match (*g).inner.geometric() {
        Ok(gr) => gr,
        Err(e) => return graph_status(&e),
    };
    match decompose(graph, leaf_size as usize) {
        Ok(tree) => hand_out_string(tree.to_json(), out),
        Err(geomgraph::error::PartitionError::InvariantFailure(_)) => GgStatus::InternalError,
        Err(_) => GgStatus::ValidationError,
    }
}

/// Rotating halving line trace as JSON.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gg_halving_trace(g: *const GgGraph, out: *mut *mut c_char) -> GgStatus {
    if g.is_null() || out.is_null() {
        return GgStatus::NullArgument;
    }
    let graph = match (*g).inner.geometric() {
        Ok(gr) => gr,
        Err(e) => return graph_status(&e),
    };
    match rotate_to_balance(graph) {
        Ok(trace) => match serde_json::to_string_pretty(&trace) {
            Ok(json) => hand_out_string(json, out),
            Err(_) => GgStatus::InternalError,
        },
        Err(geomgraph::error::PartitionError::InvariantFailure(_)) => GgStatus::InternalError,
        Err(_) => GgStatus::ValidationError,
    }
}

/// Ham-sandwich cut of two point classes given as
/// `{"v1": [[x,y],...], "v2": [[x,y],...]}`; the cut JSON lands in `out`.
///
/// # Safety
/// `json` must be a valid string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gg_ham_sandwich(json: *const c_char, out: *mut *mut c_char) -> GgStatus {
    if out.is_null() {
        return GgStatus::NullArgument;
    }
    let Some(json) = cstr(json) else {
        return GgStatus::NullArgument;
    };
    #[derive(serde::Deserialize)]
    struct TwoClasses {
        v1: Vec<[i64; 2]>,
        v2: Vec<[i64; 2]>,
    }
    let Ok(classes) = serde_json::from_str::<TwoClasses>(json) else {
        return GgStatus::ParseError;
    };
    let v1: Vec<Point> = classes.v1.iter().map(|&[x, y]| Point::new(x, y)).collect();
    let v2: Vec<Point> = classes.v2.iter().map(|&[x, y]| Point::new(x, y)).collect();
    match ham_sandwich(&v1, &v2) {
        Ok(cut) => match serde_json::to_string_pretty(&cut) {
            Ok(json) => hand_out_string(json, out),
            Err(_) => GgStatus::InternalError,
        },
        Err(geomgraph::error::PartitionError::InvariantFailure(_)) => GgStatus::InternalError,
        Err(_) => GgStatus::ValidationError,
    }
}

/// Good-endpoint report for a handle whose edges form a disjoint matching.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gg_good_endpoints(g: *const GgGraph, out: *mut *mut c_char) -> GgStatus {
    if g.is_null() || out.is_null() {
        return GgStatus::NullArgument;
    }
    let graph = match (*g).inner.geometric() {
        Ok(gr) => gr,
        Err(e) => return graph_status(&e),
    };
    let segments: Vec<Segment> = (0..graph.edge_count()).map(|i| graph.segment(i)).collect();
    let matching = match DisjointMatching::new(segments) {
        Ok(m) => m,
        Err(_) => return GgStatus::ValidationError,
    };
    let good = match matching.good_endpoints() {
        Ok(g) => g,
        Err(_) => return GgStatus::ValidationError,
    };
    #[derive(serde::Serialize)]
    struct GoodJson {
        size: usize,
        good_count: usize,
        good: Vec<(usize, usize)>,
    }
    let payload = serde_json::to_string_pretty(&GoodJson {
        size: matching.len(),
        good_count: good.len(),
        good,
    })
    .expect("serialization cannot fail");
    hand_out_string(payload, out)
}

/// Renders the graph as SVG; optionally detects `pattern` (may be NULL)
/// and highlights the witness.
///
/// # Safety
/// `g` must be a live handle; `pattern` NULL or a valid string; `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn gg_render_svg(
    g: *const GgGraph,
    pattern: *const c_char,
    node_budget: u64,
    out: *mut *mut c_char,
) -> GgStatus {
    if g.is_null() || out.is_null() {
        return GgStatus::NullArgument;
    }
    let graph = match (*g).inner.geometric() {
        Ok(gr) => gr,
        Err(e) => return graph_status(&e),
    };
    let mut opts = RenderOptions::default();
    if !pattern.is_null() {
        let Some(pattern) = cstr(pattern) else {
            return GgStatus::NullArgument;
        };
        let Ok(query) = pattern.parse::<Query>() else {
            return GgStatus::ParseError;
        };
        let matrix = match (*g).inner.matrix() {
            Ok(m) => m,
            Err(e) => return graph_status(&e),
        };
        match detect(&matrix, &query, SearchBudget::nodes(node_budget.max(1))) {
            Ok(d) => {
                opts.witness_e1 = d.e1;
                opts.witness_e2 = d.e2;
            }
            Err(_) => return GgStatus::ParseError,
        }
    }
    hand_out_string(render_svg(graph, &opts), out)
}

/// Runs the extremal harness and returns the CSV. `n_list` is a
/// comma-separated list of point counts; `generator` is one of
/// `random-disk`, `convex`, `perturbed-grid`.
///
/// # Safety
/// `pattern`, `n_list`, `generator` must be valid strings; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gg_extremal_csv(
    pattern: *const c_char,
    n_list: *const c_char,
    trials: u32,
    seed: u64,
    node_budget: u64,
    generator: *const c_char,
    coordinate_scale: i64,
    out: *mut *mut c_char,
) -> GgStatus {
    if out.is_null() {
        return GgStatus::NullArgument;
    }
    let (Some(pattern), Some(n_list), Some(generator)) =
        (cstr(pattern), cstr(n_list), cstr(generator))
    else {
        return GgStatus::NullArgument;
    };
    let Ok(query) = pattern.parse::<Query>() else {
        return GgStatus::ParseError;
    };
    let Ok(kind) = generator.parse::<GeneratorKind>() else {
        return GgStatus::ParseError;
    };
    let mut ns: Vec<usize> = Vec::new();
    for part in n_list.split(',') {
        match part.trim().parse::<usize>() {
            Ok(n) => ns.push(n),
            Err(_) => return GgStatus::ParseError,
        }
    }
    if ns.is_empty() || trials == 0 {
        return GgStatus::ParseError;
    }
    let results = growth_experiment(
        kind,
        coordinate_scale.max(16),
        &query,
        &ns,
        trials,
        seed,
        SearchBudget::nodes(node_budget.max(1)),
    );
    let mut records: Vec<ExperimentRecord> = Vec::new();
    for r in results {
        match r {
            Ok((record, _)) => records.push(record),
            Err(_) => return GgStatus::InternalError,
        }
    }
    hand_out_string(records_to_csv(&records), out)
}
