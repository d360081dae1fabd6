//! Exhaustive enumeration of connected graphs with maximum degree at most 3,
//! and exact extremal censuses computed from it.
//!
//! Generation is canonical augmentation by vertex addition. A child is the
//! parent plus one vertex joined to 1..=3 parent vertices of degree below 3.
//! It is accepted only if the new vertex lies in the automorphism orbit of the
//! child's canonical deletion vertex: the non-cut vertex with the highest
//! canonical label. Deleting a non-cut vertex keeps the graph connected and
//! never raises a degree, so every class has exactly one accepted parent.
//! Isomorphic children of the same parent are merged by certificate.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::canonical_form;
use crate::census::EdgeCensus;
use crate::graph::{bits, Graph, MAX_DEGREE, MAX_ORDER};
use crate::graph6::write_graph6;
use crate::index::IndexDefinition;

/// Relative tolerance under which index values count as tied.
pub const TIE_TOLERANCE: f64 = 1e-9;

/// Practical upper bound on the enumerated order.
pub const ENUMERATION_LIMIT: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Max,
    Min,
}

impl Direction {
    pub const BOTH: [Direction; 2] = [Direction::Max, Direction::Min];

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Max => "max",
            Direction::Min => "min",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Direction {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "max" | "maximum" => Ok(Direction::Max),
            "min" | "minimum" => Ok(Direction::Min),
            _ => Err(format!("unknown direction {s:?} (expected max or min)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("order {0} is outside the enumeration range 1..={ENUMERATION_LIMIT}")]
    OrderOutOfRange(usize),
    #[error("(n, m) = ({n}, {m}) is outside the chemical range 7 <= n, n-1 <= m <= (3n-3)/2")]
    NotChemical { n: usize, m: usize },
    #[error("no chemical graph of order {n} and size {m}")]
    EmptyClass { n: usize, m: usize },
}

/// True iff `(n, m)` is the order and size of some chemical graph.
pub fn is_chemical_pair(n: usize, m: usize) -> bool {
    n >= 7 && m + 1 >= n && 2 * m + 3 <= 3 * n
}

/// All chemical `(n, m)` pairs with `n_min <= n <= n_max`, in order.
pub fn chemical_pairs(n_min: usize, n_max: usize) -> Vec<(usize, usize)> {
    (n_min.max(7)..=n_max)
        .flat_map(|n| (n - 1..=(3 * n - 3) / 2).map(move |m| (n, m)))
        .collect()
}

/// Generates one representative per isomorphism class of connected graphs of
/// order `n` with maximum degree at most 3, in canonical labeling.
///
/// Each level is expanded in parallel over parents on `workers` threads;
/// results are merged in parent order and finally sorted by size and
/// canonical adjacency, so the output does not depend on `workers`.
pub fn enumerate_connected_maxdeg3(n: usize, workers: usize) -> Result<Vec<Graph>, OracleError> {
    if n == 0 || n > ENUMERATION_LIMIT {
        return Err(OracleError::OrderOutOfRange(n));
    }
    let pool = thread_pool(workers);
    let mut level = vec![Graph::from_rows_unchecked(vec![0])];
    for _ in 1..n {
        level = pool.install(|| {
            level
                .par_iter()
                .map(children)
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .collect()
        });
    }
    sort_stream(&mut level);
    Ok(level)
}

fn sort_stream(graphs: &mut [Graph]) {
    graphs.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.rows().cmp(b.rows())));
}

pub(crate) fn thread_pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
}

/// Accepted children of `parent`, canonically labeled.
fn children(parent: &Graph) -> Vec<Graph> {
    let k = parent.order();
    let open = (0..k)
        .filter(|&v| parent.degree(v) < MAX_DEGREE)
        .fold(0u64, |acc, v| acc | 1 << v);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in submasks(open) {
        if mask.count_ones() as usize > MAX_DEGREE {
            continue;
        }
        let child = parent.with_new_vertex(mask);
        let canon = canonical_form(&child);
        let deletion = (0..=k)
            .filter(|&v| !is_cut_vertex(&child, v))
            .max_by_key(|&v| canon.labeling[v])
            .expect("a connected graph has a non-cut vertex");
        if canon.same_orbit(deletion, k) && seen.insert(canon.rows.clone()) {
            out.push(canon.graph());
        }
    }
    out
}

/// Nonempty submasks of `mask` in increasing numeric order.
fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let positions: Vec<usize> = bits(mask).collect();
    (1u64..1 << positions.len()).map(move |sel| {
        bits(sel).fold(0u64, |acc, i| acc | 1 << positions[i])
    })
}

fn is_cut_vertex(g: &Graph, v: usize) -> bool {
    let n = g.order();
    if n <= 2 {
        return false;
    }
    let all = ((1u128 << n) - 1) as u64 & !(1 << v);
    let start = 1u64 << all.trailing_zeros();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let mut next = 0;
        for u in bits(frontier) {
            next |= g.row(u);
        }
        next &= all;
        frontier = next & !seen;
        seen |= next;
    }
    seen != all
}

/// A census seen in the enumeration with the number of graphs realizing it
/// and the first such graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusWitness {
    pub census: EdgeCensus,
    pub witness: String,
    pub graphs: usize,
}

/// Census statistics of all enumerated graphs of one order, by size.
#[derive(Debug, Clone, Default)]
pub struct Atlas {
    pub order: usize,
    by_size: BTreeMap<usize, SizeClass>,
}

#[derive(Debug, Clone, Default)]
struct SizeClass {
    graph_count: usize,
    censuses: BTreeMap<EdgeCensus, CensusWitness>,
}

impl Atlas {
    fn build(order: usize, graphs: &[Graph]) -> Self {
        let mut by_size: BTreeMap<usize, SizeClass> = BTreeMap::new();
        for g in graphs {
            let class = by_size.entry(g.size()).or_default();
            class.graph_count += 1;
            let census = g.edge_census().expect("enumerated graphs have maximum degree 3");
            class
                .censuses
                .entry(census)
                .or_insert_with(|| CensusWitness { census, witness: write_graph6(g), graphs: 0 })
                .graphs += 1;
        }
        Self { order, by_size }
    }

    pub fn graph_count(&self, m: usize) -> usize {
        self.by_size.get(&m).map_or(0, |c| c.graph_count)
    }

    pub fn censuses(&self, m: usize) -> BTreeSet<EdgeCensus> {
        self.by_size
            .get(&m)
            .map(|c| c.censuses.keys().copied().collect())
            .unwrap_or_default()
    }

    pub fn witnesses(&self, m: usize) -> Vec<CensusWitness> {
        self.by_size
            .get(&m)
            .map(|c| c.censuses.values().cloned().collect())
            .unwrap_or_default()
    }

    pub fn sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_size.keys().copied()
    }
}

/// Optimal censuses for one index, order, size and direction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub index: String,
    pub n: usize,
    pub m: usize,
    pub direction: Direction,
    pub optimum: f64,
    pub optimal_censuses: Vec<CensusWitness>,
    pub graph_count: usize,
}

impl ExtremalReport {
    pub fn census_set(&self) -> BTreeSet<EdgeCensus> {
        self.optimal_censuses.iter().map(|w| w.census).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "index", "n", "m", "direction", "optimum", "x12", "x13", "x22", "x23", "x33",
            "graphs", "witness_graph6",
        ])
        .expect("in-memory write");
        for cw in &self.optimal_censuses {
            let mut rec = vec![
                self.index.clone(),
                self.n.to_string(),
                self.m.to_string(),
                self.direction.to_string(),
                format!("{}", self.optimum),
            ];
            rec.extend(cw.census.to_array().iter().map(u64::to_string));
            rec.push(cw.graphs.to_string());
            rec.push(cw.witness.clone());
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

/// Picks the censuses whose value is within [`TIE_TOLERANCE`] (relative,
/// floored at an absolute scale of 1) of the best value in `direction`.
pub fn extremal_among<'a>(
    f: &IndexDefinition,
    direction: Direction,
    candidates: impl IntoIterator<Item = &'a CensusWitness>,
) -> Option<(f64, Vec<CensusWitness>)> {
    let scored: Vec<(f64, &CensusWitness)> =
        candidates.into_iter().map(|w| (f.evaluate(&w.census), w)).collect();
    let better = |a: f64, b: f64| match direction {
        Direction::Max => a > b,
        Direction::Min => a < b,
    };
    let best = scored
        .iter()
        .map(|&(v, _)| v)
        .reduce(|a, b| if better(b, a) { b } else { a })?;
    let tol = TIE_TOLERANCE * best.abs().max(1.0);
    let winners = scored
        .into_iter()
        .filter(|&(v, _)| (v - best).abs() <= tol)
        .map(|(_, w)| w.clone())
        .collect();
    Some((best, winners))
}

/// Caching front end over the enumeration: graphs and atlases are computed
/// once per order and shared.
pub struct Oracle {
    workers: usize,
    graphs: Mutex<BTreeMap<usize, Arc<Vec<Graph>>>>,
    atlases: Mutex<BTreeMap<usize, Arc<Atlas>>>,
}

impl Oracle {
    pub fn new(workers: usize) -> Self {
        Self {
            workers: workers.max(1),
            graphs: Mutex::new(BTreeMap::new()),
            atlases: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    pub fn graphs(&self, n: usize) -> Result<Arc<Vec<Graph>>, OracleError> {
        if n == 0 || n > ENUMERATION_LIMIT.min(MAX_ORDER) {
            return Err(OracleError::OrderOutOfRange(n));
        }
        let mut cache = self.graphs.lock().expect("graph cache poisoned");
        if let Some(g) = cache.get(&n) {
            return Ok(Arc::clone(g));
        }
        let graphs = Arc::new(enumerate_connected_maxdeg3(n, self.workers)?);
        cache.insert(n, Arc::clone(&graphs));
        Ok(graphs)
    }

    pub fn atlas(&self, n: usize) -> Result<Arc<Atlas>, OracleError> {
        if let Some(a) = self.atlases.lock().expect("atlas cache poisoned").get(&n) {
            return Ok(Arc::clone(a));
        }
        let atlas = Arc::new(Atlas::build(n, &self.graphs(n)?));
        self.atlases
            .lock()
            .expect("atlas cache poisoned")
            .insert(n, Arc::clone(&atlas));
        Ok(atlas)
    }

    /// Censuses realized by at least one chemical graph of order `n`, size `m`.
    pub fn census_atlas(&self, n: usize, m: usize) -> Result<BTreeSet<EdgeCensus>, OracleError> {
        if !is_chemical_pair(n, m) {
            return Err(OracleError::NotChemical { n, m });
        }
        Ok(self.atlas(n)?.censuses(m))
    }

    pub fn extremal_censuses(
        &self,
        f: &IndexDefinition,
        n: usize,
        m: usize,
        direction: Direction,
    ) -> Result<ExtremalReport, OracleError> {
        if !is_chemical_pair(n, m) {
            return Err(OracleError::NotChemical { n, m });
        }
        let atlas = self.atlas(n)?;
        let witnesses = atlas.witnesses(m);
        let (optimum, optimal_censuses) =
            extremal_among(f, direction, &witnesses).ok_or(OracleError::EmptyClass { n, m })?;
        Ok(ExtremalReport {
            index: f.name.clone(),
            n,
            m,
            direction,
            optimum,
            optimal_censuses,
            graph_count: atlas.graph_count(m),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::builtin;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_connected_maxdeg3(n, 1).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 10, 29]);
    }

    #[test]
    fn order_four_members() {
        let graphs = enumerate_connected_maxdeg3(4, 1).unwrap();
        let sizes: Vec<usize> = graphs.iter().map(Graph::size).collect();
        // P4 and the claw; C4 and the paw; the diamond; K4
        assert_eq!(sizes, vec![3, 3, 4, 4, 5, 6]);
    }

    #[test]
    fn cut_vertices() {
        let p = Graph::path(4);
        assert!(!is_cut_vertex(&p, 0));
        assert!(is_cut_vertex(&p, 1));
        assert!(!is_cut_vertex(&Graph::cycle(4), 2));
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(enumerate_connected_maxdeg3(0, 1), Err(OracleError::OrderOutOfRange(0)));
        let oracle = Oracle::new(1);
        assert_eq!(
            oracle.census_atlas(6, 5),
            Err(OracleError::NotChemical { n: 6, m: 5 })
        );
        let r = builtin("Randic").unwrap();
        assert_eq!(oracle.extremal_censuses(&r, 8, 10, Direction::Max).unwrap().n, 8);
        assert!(oracle.extremal_censuses(&r, 8, 11, Direction::Max).is_err());
    }

    #[test]
    fn randic_on_trees_of_order_seven() {
        let oracle = Oracle::new(2);
        let r = builtin("Randic").unwrap();
        let rep = oracle.extremal_censuses(&r, 7, 6, Direction::Max).unwrap();
        assert_eq!(rep.census_set(), BTreeSet::from([EdgeCensus::new(2, 0, 4, 0, 0)]));
        assert!((rep.optimum - (2f64.sqrt() + 2.0)).abs() < 1e-12);
    }

    #[test]
    fn ties_use_relative_tolerance() {
        let f = IndexDefinition::new("flat", [1.0; 5]).unwrap();
        let ws: Vec<CensusWitness> = [[2, 0, 4, 0, 0], [0, 4, 0, 2, 0]]
            .into_iter()
            .map(|c| CensusWitness { census: c.into(), witness: String::new(), graphs: 1 })
            .collect();
        let (best, winners) = extremal_among(&f, Direction::Min, &ws).unwrap();
        assert_eq!(best, 6.0);
        assert_eq!(winners.len(), 2);
    }

    #[test]
    fn direction_parsing() {
        assert_eq!("MAX".parse::<Direction>(), Ok(Direction::Max));
        assert_eq!("min".parse::<Direction>(), Ok(Direction::Min));
        assert!("up".parse::<Direction>().is_err());
    }
}
