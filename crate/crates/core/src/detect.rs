//! Detectors for forbidden substructures: pairwise crossing sets, disjoint
//! matchings, crossing families, natural grids, and 3-edge circle patterns.
//!
//! Every detector is a deterministic branch-and-bound search over the
//! intersection matrix. `NONE` is only reported after exhausting the search
//! space; running out of budget is a distinct outcome and never means
//! "pattern-free".

use crate::error::DetectError;
use crate::geometry::IntersectionType;
use crate::matrix::{CircleGraphPattern3, IntersectionMatrix};
use serde::Serialize;
use std::time::{Duration, Instant};

/// Limits for one detector invocation.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    /// Maximum number of search-tree nodes to explore.
    pub node_limit: u64,
    /// Optional wall-clock deadline in milliseconds. Off by default; node
    /// budgets keep runs reproducible.
    pub deadline_ms: Option<u64>,
}

impl SearchBudget {
    pub fn nodes(node_limit: u64) -> Self {
        assert!(node_limit >= 1);
        SearchBudget {
            node_limit,
            deadline_ms: None,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::nodes(1_000_000)
    }
}

/// The two witness kinds certified by [`FamilyWitness`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilyKind {
    /// e1: pairwise crossing, e2: pairwise crossing, across: disjoint.
    CrossingFamily,
    /// e1: pairwise disjoint, e2: pairwise disjoint, across: crossing.
    NaturalGrid,
}

/// The (E1, E2) pair certifying a crossing family or natural grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyWitness {
    pub e1: Vec<usize>,
    pub e2: Vec<usize>,
    pub kind: FamilyKind,
}

/// A detection query, in the CLI grammar:
/// `crossing-family:K,L | grid:K,L | pairwise-crossing:K |
/// disjoint-matching:K | circle3:{k3|empty|grid21|family21}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Query {
    CrossingFamily { k: usize, l: usize },
    NaturalGrid { k: usize, l: usize },
    PairwiseCrossing { k: usize },
    DisjointMatching { k: usize },
    Circle3(CircleGraphPattern3),
}

impl Query {
    fn check_args(&self) -> Result<(), DetectError> {
        let (k, l) = match *self {
            Query::CrossingFamily { k, l } | Query::NaturalGrid { k, l } => (k, l),
            Query::PairwiseCrossing { k } | Query::DisjointMatching { k } => (k, 1),
            Query::Circle3(_) => (1, 1),
        };
        if k == 0 || l == 0 {
            return Err(DetectError::BadArguments { k, l });
        }
        Ok(())
    }
}

impl std::fmt::Display for Query {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Query::CrossingFamily { k, l } => write!(f, "crossing-family:{k},{l}"),
            Query::NaturalGrid { k, l } => write!(f, "grid:{k},{l}"),
            Query::PairwiseCrossing { k } => write!(f, "pairwise-crossing:{k}"),
            Query::DisjointMatching { k } => write!(f, "disjoint-matching:{k}"),
            Query::Circle3(p) => write!(f, "circle3:{p}"),
        }
    }
}

impl std::str::FromStr for Query {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (head, rest) = s
            .split_once(':')
            .ok_or_else(|| format!("pattern {s:?} is missing parameters"))?;
        let parse_k = |rest: &str| {
            rest.parse::<usize>()
                .map_err(|_| format!("bad count {rest:?} in pattern {s:?}"))
        };
        let parse_kl = |rest: &str| -> Result<(usize, usize), String> {
            let (a, b) = rest
                .split_once(',')
                .ok_or_else(|| format!("pattern {s:?} needs K,L"))?;
            Ok((parse_k(a)?, parse_k(b)?))
        };
        match head {
            "crossing-family" => {
                let (k, l) = parse_kl(rest)?;
                Ok(Query::CrossingFamily { k, l })
            }
            "grid" => {
                let (k, l) = parse_kl(rest)?;
                Ok(Query::NaturalGrid { k, l })
            }
            "pairwise-crossing" => Ok(Query::PairwiseCrossing { k: parse_k(rest)? }),
            "disjoint-matching" => Ok(Query::DisjointMatching { k: parse_k(rest)? }),
            "circle3" => {
                let p = match rest {
                    "k3" => CircleGraphPattern3::TripleCrossing,
                    "empty" => CircleGraphPattern3::TripleDisjoint,
                    "grid21" => CircleGraphPattern3::Grid21,
                    "family21" => CircleGraphPattern3::Family21,
                    other => return Err(format!("unknown circle3 pattern {other:?}")),
                };
                Ok(Query::Circle3(p))
            }
            other => Err(format!("unknown pattern kind {other:?}")),
        }
    }
}

/// Search status, serialized as FOUND / NONE / BUDGET.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Found,
    None,
    Budget,
}

/// The outcome of one detector run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Detection {
    pub query: Query,
    pub status: Status,
    pub e1: Vec<usize>,
    pub e2: Vec<usize>,
    pub nodes_explored: u64,
}

impl Detection {
    pub fn found(&self) -> bool {
        self.status == Status::Found
    }

    /// The certified family witness, for family and grid queries.
    pub fn family_witness(&self) -> Option<FamilyWitness> {
        if self.status != Status::Found {
            return None;
        }
        let kind = match self.query {
            Query::CrossingFamily { .. } => FamilyKind::CrossingFamily,
            Query::NaturalGrid { .. } => FamilyKind::NaturalGrid,
            _ => return None,
        };
        Some(FamilyWitness {
            e1: self.e1.clone(),
            e2: self.e2.clone(),
            kind,
        })
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct DetectionJson<'a> {
            found: bool,
            kind: String,
            e1: &'a [usize],
            e2: &'a [usize],
            nodes_explored: u64,
            status: Status,
        }
        serde_json::to_string_pretty(&DetectionJson {
            found: self.found(),
            kind: self.query.to_string(),
            e1: &self.e1,
            e2: &self.e2,
            nodes_explored: self.nodes_explored,
            status: self.status,
        })
        .expect("detection serialization cannot fail")
    }
}

// ---------------------------------------------------------------------------
// Relation bitsets
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Relation {
    Cross,
    Disjoint,
}

impl Relation {
    fn flipped(self) -> Relation {
        match self {
            Relation::Cross => Relation::Disjoint,
            Relation::Disjoint => Relation::Cross,
        }
    }
}

/// Adjacency rows of the CROSS and DISJOINT relations as bitsets.
pub struct RelationGraph {
    n: usize,
    words: usize,
    cross: Vec<u64>,
    disjoint: Vec<u64>,
}

impl RelationGraph {
    /// An empty relation graph able to grow to `max_edges` rows without
    /// reallocation of row strides. Rows are appended with [`Self::push_edge`].
    pub fn with_capacity(max_edges: usize) -> Self {
        RelationGraph {
            n: 0,
            words: max_edges.div_ceil(64).max(1),
            cross: Vec::new(),
            disjoint: Vec::new(),
        }
    }

    /// Appends one edge given its classification against every existing
    /// edge, in index order.
    pub fn push_edge(&mut self, row: &[IntersectionType]) {
        assert_eq!(row.len(), self.n);
        let new = self.n;
        assert!(new < self.words * 64, "relation graph capacity exceeded");
        let base = new * self.words;
        self.cross.resize(base + self.words, 0);
        self.disjoint.resize(base + self.words, 0);
        for (j, &t) in row.iter().enumerate() {
            let rows = match t {
                IntersectionType::Cross => &mut self.cross,
                IntersectionType::Disjoint => &mut self.disjoint,
                IntersectionType::ShareEndpoint => continue,
            };
            rows[base + j / 64] |= 1 << (j % 64);
            rows[j * self.words + new / 64] |= 1 << (new % 64);
        }
        self.n += 1;
    }

    /// Removes the most recently appended edge.
    pub fn pop_edge(&mut self) {
        assert!(self.n > 0);
        let last = self.n - 1;
        let mask = !(1u64 << (last % 64));
        for j in 0..last {
            self.cross[j * self.words + last / 64] &= mask;
            self.disjoint[j * self.words + last / 64] &= mask;
        }
        self.cross.truncate(last * self.words);
        self.disjoint.truncate(last * self.words);
        self.n = last;
    }

    pub fn from_matrix(m: &IntersectionMatrix) -> Self {
        let n = m.edge_count();
        let words = n.div_ceil(64).max(1);
        let mut cross = vec![0u64; n * words];
        let mut disjoint = vec![0u64; n * words];
        for j in 0..n {
            for i in 0..j {
                let rows = match m.get(i, j) {
                    IntersectionType::Cross => Some(&mut cross),
                    IntersectionType::Disjoint => Some(&mut disjoint),
                    IntersectionType::ShareEndpoint => None,
                };
                if let Some(rows) = rows {
                    rows[i * words + j / 64] |= 1 << (j % 64);
                    rows[j * words + i / 64] |= 1 << (i % 64);
                }
            }
        }
        RelationGraph {
            n,
            words,
            cross,
            disjoint,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.n
    }

    fn row(&self, rel: Relation, i: usize) -> &[u64] {
        let rows = match rel {
            Relation::Cross => &self.cross,
            Relation::Disjoint => &self.disjoint,
        };
        &rows[i * self.words..(i + 1) * self.words]
    }

    fn degree(&self, rel: Relation, i: usize) -> usize {
        self.row(rel, i)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Edge ids ordered by descending degree in `rel`, ties by index.
    fn order_by_degree(&self, rel: Relation) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(self.degree(rel, i)), i));
        order
    }
}

#[derive(Clone, PartialEq, Eq)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn empty(words: usize) -> Self {
        Bits {
            words: vec![0; words],
        }
    }

    fn full(n: usize, words: usize) -> Self {
        let mut b = Bits {
            words: vec![0u64; words],
        };
        for w in 0..n / 64 {
            b.words[w] = !0;
        }
        if !n.is_multiple_of(64) {
            b.words[n / 64] = !0u64 >> (64 - n % 64);
        }
        b
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn and(&self, other: &[u64]) -> Bits {
        Bits {
            words: self.words.iter().zip(other).map(|(a, b)| a & b).collect(),
        }
    }

    fn intersects(&self, other: &[u64]) -> bool {
        self.words.iter().zip(other).any(|(a, b)| a & b != 0)
    }
}

// ---------------------------------------------------------------------------
// Branch-and-bound family / clique search
// ---------------------------------------------------------------------------

struct BudgetState {
    limit: u64,
    nodes: u64,
    deadline: Option<Instant>,
    exceeded: bool,
}

impl BudgetState {
    fn new(budget: SearchBudget) -> Self {
        BudgetState {
            limit: budget.node_limit,
            nodes: 0,
            deadline: budget
                .deadline_ms
                .map(|ms| Instant::now() + Duration::from_millis(ms)),
            exceeded: false,
        }
    }

    /// Counts one node; returns false when the budget is exhausted.
    fn tick(&mut self) -> bool {
        if self.exceeded {
            return false;
        }
        if self.nodes >= self.limit {
            self.exceeded = true;
            return false;
        }
        self.nodes += 1;
        if let Some(d) = self.deadline {
            if self.nodes.is_multiple_of(4096) && Instant::now() > d {
                self.exceeded = true;
                return false;
            }
        }
        true
    }
}

/// Two-phase search: a clique of `first_size` in the `within` relation
/// (E1), then a clique of `second_size` in `within` among edges that are
/// `across`-related to all of E1 (E2). With `second_size` 0 this is a plain
/// clique search.
struct FamilySearch<'a> {
    rel: &'a RelationGraph,
    within: Relation,
    across: Relation,
    first_size: usize,
    second_size: usize,
    order: Vec<usize>,
    budget: BudgetState,
    result: Option<(Vec<usize>, Vec<usize>)>,
}

impl<'a> FamilySearch<'a> {
    fn new(
        rel: &'a RelationGraph,
        within: Relation,
        first_size: usize,
        second_size: usize,
        budget: SearchBudget,
    ) -> Self {
        FamilySearch {
            rel,
            within,
            across: within.flipped(),
            first_size,
            second_size,
            order: rel.order_by_degree(within),
            budget: BudgetState::new(budget),
            result: None,
        }
    }

    /// Greedy-coloring upper bound on the largest `within`-clique inside
    /// `cand`, capped at `needed` (enough to decide pruning).
    fn coloring_bound(&self, cand: &Bits, needed: usize) -> usize {
        let mut classes: Vec<Bits> = Vec::new();
        for &v in &self.order {
            if !cand.get(v) {
                continue;
            }
            let row = self.rel.row(self.within, v);
            match classes.iter_mut().find(|c| !c.intersects(row)) {
                Some(class) => class.set(v),
                None => {
                    let mut class = Bits::empty(self.rel.words);
                    class.set(v);
                    classes.push(class);
                    if classes.len() >= needed {
                        return classes.len();
                    }
                }
            }
        }
        classes.len()
    }

    fn run(&mut self, fixed_first: Option<usize>) {
        if self.rel.n == 0 {
            return;
        }
        let cand = Bits::full(self.rel.n, self.rel.words);
        let across_common = Bits::full(self.rel.n, self.rel.words);
        let mut chosen = Vec::with_capacity(self.first_size);
        if let Some(x) = fixed_first {
            if !self.budget.tick() {
                return;
            }
            chosen.push(x);
            let next_cand = cand.and(self.rel.row(self.within, x));
            let next_across = across_common.and(self.rel.row(self.across, x));
            if chosen.len() == self.first_size {
                self.complete_first(&chosen, &next_across);
            } else {
                self.extend_first(&mut chosen, next_cand, next_across);
            }
            return;
        }
        self.extend_first(&mut chosen, cand, across_common);
    }

    /// Returns true when the search should stop unwinding (found or budget).
    fn extend_first(&mut self, chosen: &mut Vec<usize>, cand: Bits, across_common: Bits) -> bool {
        if self.result.is_some() || self.budget.exceeded {
            return true;
        }
        debug_assert!(chosen.len() < self.first_size);
        let remaining = self.first_size - chosen.len();
        if cand.count() < remaining {
            return false;
        }
        if self.second_size > 0 && across_common.count() < self.second_size {
            return false;
        }
        if self.coloring_bound(&cand, remaining) < remaining {
            return false;
        }
        let mut cand = cand;
        for idx in 0..self.order.len() {
            let v = self.order[idx];
            if !cand.get(v) {
                continue;
            }
            if !self.budget.tick() {
                return true;
            }
            chosen.push(v);
            let next_cand = cand.and(self.rel.row(self.within, v));
            let next_across = across_common.and(self.rel.row(self.across, v));
            let stop = if chosen.len() == self.first_size {
                self.complete_first(chosen, &next_across)
            } else {
                self.extend_first(chosen, next_cand, next_across)
            };
            chosen.pop();
            if stop {
                return true;
            }
            cand.clear(v);
        }
        false
    }

    fn complete_first(&mut self, chosen: &[usize], across_common: &Bits) -> bool {
        if self.second_size == 0 {
            let mut e1 = chosen.to_vec();
            e1.sort_unstable();
            self.result = Some((e1, Vec::new()));
            return true;
        }
        let mut second = Vec::with_capacity(self.second_size);
        if self.extend_second(&mut second, across_common.clone()) {
            let mut e1 = chosen.to_vec();
            e1.sort_unstable();
            second.sort_unstable();
            self.result = Some((e1, second));
            return true;
        }
        // Budget exhaustion also stops the outer enumeration.
        self.budget.exceeded
    }

    fn extend_second(&mut self, chosen: &mut Vec<usize>, cand: Bits) -> bool {
        if self.budget.exceeded {
            return false;
        }
        let remaining = self.second_size - chosen.len();
        if cand.count() < remaining {
            return false;
        }
        if self.coloring_bound(&cand, remaining) < remaining {
            return false;
        }
        let mut cand = cand;
        for idx in 0..self.order.len() {
            let v = self.order[idx];
            if !cand.get(v) {
                continue;
            }
            if !self.budget.tick() {
                return false;
            }
            chosen.push(v);
            if chosen.len() == self.second_size {
                return true;
            }
            let next = cand.and(self.rel.row(self.within, v));
            if self.extend_second(chosen, next) {
                return true;
            }
            chosen.pop();
            cand.clear(v);
        }
        false
    }

    fn detection(self, query: Query) -> Detection {
        let nodes_explored = self.budget.nodes;
        match self.result {
            Some((e1, e2)) => Detection {
                query,
                status: Status::Found,
                e1,
                e2,
                nodes_explored,
            },
            None => Detection {
                query,
                status: if self.budget.exceeded {
                    Status::Budget
                } else {
                    Status::None
                },
                e1: Vec::new(),
                e2: Vec::new(),
                nodes_explored,
            },
        }
    }
}

// ---------------------------------------------------------------------------
// Public detectors
// ---------------------------------------------------------------------------

/// A set of k pairwise crossing edges.
pub fn find_pairwise_crossing(
    m: &IntersectionMatrix,
    k: usize,
    budget: SearchBudget,
) -> Result<Detection, DetectError> {
    let query = Query::PairwiseCrossing { k };
    query.check_args()?;
    let rel = RelationGraph::from_matrix(m);
    Ok(run_family(&rel, Relation::Cross, k, 0, budget, None, query))
}

/// A matching of k pairwise disjoint edges.
pub fn find_disjoint_matching(
    m: &IntersectionMatrix,
    k: usize,
    budget: SearchBudget,
) -> Result<Detection, DetectError> {
    let query = Query::DisjointMatching { k };
    query.check_args()?;
    let rel = RelationGraph::from_matrix(m);
    Ok(run_family(
        &rel,
        Relation::Disjoint,
        k,
        0,
        budget,
        None,
        query,
    ))
}

/// A (k,l)-crossing family: k pairwise crossing edges, l pairwise crossing
/// edges, every pair across the two sets disjoint.
pub fn find_crossing_family(
    m: &IntersectionMatrix,
    k: usize,
    l: usize,
    budget: SearchBudget,
) -> Result<Detection, DetectError> {
    let query = Query::CrossingFamily { k, l };
    query.check_args()?;
    let rel = RelationGraph::from_matrix(m);
    Ok(run_family(&rel, Relation::Cross, k, l, budget, None, query))
}

/// A natural (k,l)-grid: k pairwise disjoint edges all crossing l pairwise
/// disjoint edges.
pub fn find_natural_grid(
    m: &IntersectionMatrix,
    k: usize,
    l: usize,
    budget: SearchBudget,
) -> Result<Detection, DetectError> {
    let query = Query::NaturalGrid { k, l };
    query.check_args()?;
    let rel = RelationGraph::from_matrix(m);
    Ok(run_family(
        &rel,
        Relation::Disjoint,
        k,
        l,
        budget,
        None,
        query,
    ))
}

/// Runs any query against a matrix.
pub fn detect(
    m: &IntersectionMatrix,
    query: &Query,
    budget: SearchBudget,
) -> Result<Detection, DetectError> {
    match *query {
        Query::PairwiseCrossing { k } => find_pairwise_crossing(m, k, budget),
        Query::DisjointMatching { k } => find_disjoint_matching(m, k, budget),
        Query::CrossingFamily { k, l } => find_crossing_family(m, k, l, budget),
        Query::NaturalGrid { k, l } => find_natural_grid(m, k, l, budget),
        Query::Circle3(p) => find_matching_with_pattern(m, p, budget),
    }
}

fn run_family(
    rel: &RelationGraph,
    within: Relation,
    k: usize,
    l: usize,
    budget: SearchBudget,
    fixed_first: Option<usize>,
    query: Query,
) -> Detection {
    let mut search = FamilySearch::new(rel, within, k, l, budget);
    search.run(fixed_first);
    search.detection(query)
}

/// Three edges, pairwise not sharing endpoints, whose matching intersection
/// graph is isomorphic to `pattern`. Isomorphism for 3-vertex graphs is
/// decided by the number of crossing pairs alone.
pub fn find_matching_with_pattern(
    m: &IntersectionMatrix,
    pattern: CircleGraphPattern3,
    budget: SearchBudget,
) -> Result<Detection, DetectError> {
    let rel = RelationGraph::from_matrix(m);
    Ok(pattern_search(&rel, pattern, budget, None))
}

fn pattern_search(
    rel: &RelationGraph,
    pattern: CircleGraphPattern3,
    budget: SearchBudget,
    required: Option<usize>,
) -> Detection {
    let query = Query::Circle3(pattern);
    let need = pattern.crossing_pairs();
    let mut budget = BudgetState::new(budget);
    let mut witness: Option<[usize; 3]> = None;

    let first_range: Vec<usize> = match required {
        Some(x) => vec![x],
        None => (0..rel.n).collect(),
    };
    'outer: for &i in &first_range {
        if !budget.tick() {
            break;
        }
        for j in 0..rel.n {
            if j == i || (required.is_none() && j < i) {
                continue;
            }
            let t1 = match pair_relation(rel, i, j) {
                Some(r) => r,
                None => continue,
            };
            if !budget.tick() {
                break 'outer;
            }
            let c1 = usize::from(t1 == Relation::Cross);
            if c1 > need || need - c1 > 2 {
                continue;
            }
            // Third edge: split the remaining crossing count over the pairs
            // (i, .) and (j, .).
            for (t2, t3) in [
                (Relation::Cross, Relation::Cross),
                (Relation::Cross, Relation::Disjoint),
                (Relation::Disjoint, Relation::Cross),
                (Relation::Disjoint, Relation::Disjoint),
            ] {
                let total =
                    c1 + usize::from(t2 == Relation::Cross) + usize::from(t3 == Relation::Cross);
                if total != need {
                    continue;
                }
                if let Some(third) = first_common_third(rel, i, j, t2, t3, required.is_none()) {
                    witness = Some([i, j, third]);
                    break 'outer;
                }
            }
        }
    }

    match witness {
        Some(mut w) => {
            w.sort_unstable();
            Detection {
                query,
                status: Status::Found,
                e1: w.to_vec(),
                e2: Vec::new(),
                nodes_explored: budget.nodes,
            }
        }
        None => Detection {
            query,
            status: if budget.exceeded {
                Status::Budget
            } else {
                Status::None
            },
            e1: Vec::new(),
            e2: Vec::new(),
            nodes_explored: budget.nodes,
        },
    }
}

/// First edge related to i by t2 and to j by t3; with `canonical` the
/// third index must exceed j so unordered triples appear once.
fn first_common_third(
    rel: &RelationGraph,
    i: usize,
    j: usize,
    t2: Relation,
    t3: Relation,
    canonical: bool,
) -> Option<usize> {
    let row_i = rel.row(t2, i);
    let row_j = rel.row(t3, j);
    for (w, (a, b)) in row_i.iter().zip(row_j).enumerate() {
        let mut word = a & b;
        while word != 0 {
            let cand = w * 64 + word.trailing_zeros() as usize;
            word &= word - 1;
            if cand == i || cand == j {
                continue;
            }
            if canonical && cand < j {
                continue;
            }
            return Some(cand);
        }
    }
    None
}

fn pair_relation(rel: &RelationGraph, i: usize, j: usize) -> Option<Relation> {
    if rel.row(Relation::Cross, i)[j / 64] >> (j % 64) & 1 == 1 {
        Some(Relation::Cross)
    } else if rel.row(Relation::Disjoint, i)[j / 64] >> (j % 64) & 1 == 1 {
        Some(Relation::Disjoint)
    } else {
        None
    }
}

/// Rechecks a family witness against the matrix.
pub fn verify_witness(m: &IntersectionMatrix, w: &FamilyWitness) -> bool {
    let e = m.edge_count();
    if w.e1.is_empty() || w.e2.is_empty() {
        return false;
    }
    if w.e1.iter().chain(&w.e2).any(|&i| i >= e) {
        return false;
    }
    let mut all: Vec<usize> = w.e1.iter().chain(&w.e2).copied().collect();
    all.sort_unstable();
    all.dedup();
    if all.len() != w.e1.len() + w.e2.len() {
        return false;
    }
    let (within, across) = match w.kind {
        FamilyKind::CrossingFamily => (IntersectionType::Cross, IntersectionType::Disjoint),
        FamilyKind::NaturalGrid => (IntersectionType::Disjoint, IntersectionType::Cross),
    };
    let pairwise = |set: &[usize]| {
        set.iter()
            .enumerate()
            .all(|(a, &i)| set[a + 1..].iter().all(|&j| m.get(i, j) == within))
    };
    pairwise(&w.e1)
        && pairwise(&w.e2)
        && w.e1
            .iter()
            .all(|&i| w.e2.iter().all(|&j| m.get(i, j) == across))
}

// ---------------------------------------------------------------------------
// Exhaustive oracle
// ---------------------------------------------------------------------------

const ORACLE_CAP: u128 = 10_000_000;

/// Witness shape shared by the oracle and the brute-force comparisons.
pub type WitnessSets = (Vec<usize>, Vec<usize>);

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
        if acc > ORACLE_CAP.saturating_mul(1000) {
            return u128::MAX;
        }
    }
    acc
}

/// Ground truth by full enumeration over index subsets in lexicographic
/// order, independent of the branch-and-bound path. Errors when
/// C(edge_count, k+l) exceeds 10^7.
pub fn exhaustive_oracle(
    m: &IntersectionMatrix,
    query: &Query,
) -> Result<Option<WitnessSets>, DetectError> {
    query.check_args()?;
    let e = m.edge_count();
    let total_choose = match *query {
        Query::CrossingFamily { k, l } | Query::NaturalGrid { k, l } => k + l,
        Query::PairwiseCrossing { k } | Query::DisjointMatching { k } => k,
        Query::Circle3(_) => 3,
    };
    if binomial(e, total_choose) > ORACLE_CAP {
        return Err(DetectError::EnumerationTooLarge {
            edges: e,
            choose: total_choose,
        });
    }

    let all_rel = |set: &[usize], t: IntersectionType| {
        set.iter()
            .enumerate()
            .all(|(a, &i)| set[a + 1..].iter().all(|&j| m.get(i, j) == t))
    };

    match *query {
        Query::PairwiseCrossing { k } => Ok(combinations(e, k)
            .find(|set| all_rel(set, IntersectionType::Cross))
            .map(|set| (set, Vec::new()))),
        Query::DisjointMatching { k } => Ok(combinations(e, k)
            .find(|set| all_rel(set, IntersectionType::Disjoint))
            .map(|set| (set, Vec::new()))),
        Query::CrossingFamily { k, l } => Ok(oracle_family(m, e, k, l, IntersectionType::Cross)),
        Query::NaturalGrid { k, l } => Ok(oracle_family(m, e, k, l, IntersectionType::Disjoint)),
        Query::Circle3(p) => {
            let need = p.crossing_pairs();
            for set in combinations(e, 3) {
                let types = [
                    m.get(set[0], set[1]),
                    m.get(set[0], set[2]),
                    m.get(set[1], set[2]),
                ];
                if types.contains(&IntersectionType::ShareEndpoint) {
                    continue;
                }
                let crossings = types
                    .iter()
                    .filter(|&&t| t == IntersectionType::Cross)
                    .count();
                if crossings == need {
                    return Ok(Some((set, Vec::new())));
                }
            }
            Ok(None)
        }
    }
}

fn oracle_family(
    m: &IntersectionMatrix,
    e: usize,
    k: usize,
    l: usize,
    within: IntersectionType,
) -> Option<WitnessSets> {
    let across = match within {
        IntersectionType::Cross => IntersectionType::Disjoint,
        _ => IntersectionType::Cross,
    };
    let all_rel = |set: &[usize], t: IntersectionType| {
        set.iter()
            .enumerate()
            .all(|(a, &i)| set[a + 1..].iter().all(|&j| m.get(i, j) == t))
    };
    for e1 in combinations(e, k) {
        if !all_rel(&e1, within) {
            continue;
        }
        let rest: Vec<usize> = (0..e).filter(|i| !e1.contains(i)).collect();
        for pick in combinations(rest.len(), l) {
            let e2: Vec<usize> = pick.iter().map(|&i| rest[i]).collect();
            if all_rel(&e2, within)
                && e1
                    .iter()
                    .all(|&i| e2.iter().all(|&j| m.get(i, j) == across))
            {
                return Some((e1, e2));
            }
        }
    }
    None
}

/// Lexicographic k-combinations of 0..n.
fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut state: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let current = state.clone()?;
        let next = {
            let mut c = current.clone();
            let mut i = k;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if c[i] < n - (k - i) {
                    c[i] += 1;
                    for j in i + 1..k {
                        c[j] = c[j - 1] + 1;
                    }
                    break Some(c);
                }
            }
        };
        state = next;
        Some(current)
    })
}

// ---------------------------------------------------------------------------
// Incremental detection for the harness
// ---------------------------------------------------------------------------

/// Searches for a witness of `query` that uses the edge `x`. Given a matrix
/// whose other edges are already known witness-free, this decides whether
/// adding `x` introduced the pattern.
pub fn find_witness_with_edge(
    rel: &RelationGraph,
    query: &Query,
    x: usize,
    budget: SearchBudget,
) -> Result<Detection, DetectError> {
    query.check_args()?;
    if x >= rel.n {
        return Err(DetectError::EdgeOutOfRange {
            index: x,
            count: rel.n,
        });
    }
    Ok(match *query {
        Query::PairwiseCrossing { k } => {
            run_family(rel, Relation::Cross, k, 0, budget, Some(x), *query)
        }
        Query::DisjointMatching { k } => {
            run_family(rel, Relation::Disjoint, k, 0, budget, Some(x), *query)
        }
        Query::CrossingFamily { k, l } => {
            family_with_edge(rel, Relation::Cross, k, l, budget, x, *query)
        }
        Query::NaturalGrid { k, l } => {
            family_with_edge(rel, Relation::Disjoint, k, l, budget, x, *query)
        }
        Query::Circle3(p) => pattern_search(rel, p, budget, Some(x)),
    })
}

/// Tries x in the E1 role, then in the E2 role (as the fixed element of the
/// transposed query). Node counts accumulate across both phases.
fn family_with_edge(
    rel: &RelationGraph,
    within: Relation,
    k: usize,
    l: usize,
    budget: SearchBudget,
    x: usize,
    query: Query,
) -> Detection {
    let first = run_family(rel, within, k, l, budget, Some(x), query);
    if first.status != Status::None {
        return first;
    }
    let remaining = SearchBudget {
        node_limit: budget
            .node_limit
            .saturating_sub(first.nodes_explored)
            .max(1),
        deadline_ms: budget.deadline_ms,
    };
    let mut swapped = run_family(rel, within, l, k, remaining, Some(x), query);
    // Swap the roles back so e1 always holds the k-side.
    std::mem::swap(&mut swapped.e1, &mut swapped.e2);
    swapped.nodes_explored += first.nodes_explored;
    swapped
}

/// Convenience wrapper over [`find_witness_with_edge`] building the
/// relation rows from a matrix.
pub fn matrix_has_witness_with_edge(
    m: &IntersectionMatrix,
    query: &Query,
    x: usize,
    budget: SearchBudget,
) -> Result<Detection, DetectError> {
    let rel = RelationGraph::from_matrix(m);
    find_witness_with_edge(&rel, query, x, budget)
}
