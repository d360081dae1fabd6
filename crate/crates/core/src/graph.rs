//! Small simple undirected graphs and the chemical-graph predicate.
//!
//! Adjacency is kept twice: a packed bit row per vertex for O(1) edge queries
//! and a neighbor list for iteration. Graphs are immutable once built.

use std::fmt;

use thiserror::Error;

use crate::census::{EdgeCensus, VertexCounts};

/// Largest order the engine accepts (one `u64` adjacency row per vertex).
pub const MAX_ORDER: usize = 64;

/// Largest degree allowed in a chemical graph.
pub const MAX_DEGREE: usize = 3;

/// Smallest order of a chemical graph.
pub const MIN_CHEMICAL_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} exceeds the engine limit of {MAX_ORDER} vertices")]
    TooLarge(usize),
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge ({0}, {1})")]
    ParallelEdge(usize, usize),
    #[error("vertex {vertex} has degree {degree}, above the maximum of {MAX_DEGREE}")]
    DegreeTooHigh { vertex: usize, degree: usize },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Any simple graph can be represented; [`Graph::chemical_check`] decides
/// whether it is a chemical graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    rows: Vec<u64>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops and parallel edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if rows[u] >> v & 1 == 1 {
                return Err(GraphError::ParallelEdge(u, v));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    /// Builds a graph from symmetric, loop-free adjacency rows.
    ///
    /// # Panics
    /// Panics if the rows are not symmetric, contain a loop, or reference
    /// vertices beyond `rows.len()`.
    pub fn from_rows(rows: Vec<u64>) -> Self {
        let n = rows.len();
        assert!(n <= MAX_ORDER, "order {n} exceeds engine limit");
        for (u, &row) in rows.iter().enumerate() {
            assert_eq!(row >> u & 1, 0, "self-loop at {u}");
            assert!(n == 64 || row >> n == 0, "row {u} references vertex >= {n}");
            for v in bits(row) {
                assert_eq!(rows[v] >> u & 1, 1, "asymmetric adjacency at ({u}, {v})");
            }
        }
        Self::from_rows_unchecked(rows)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        let neighbors = rows.iter().map(|&r| bits(r).collect()).collect();
        Self { rows, neighbors }
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_edges(n, &edges).expect("complete graph is simple")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, &edges).expect("petersen graph is simple")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return false;
        }
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// Returns a copy with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order());
        let mut rows = vec![0u64; self.order()];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Self::from_rows_unchecked(rows)
    }

    /// Graph obtained by appending a vertex adjacent to every vertex in `mask`.
    pub(crate) fn with_new_vertex(&self, mask: u64) -> Self {
        let n = self.order();
        let mut rows = self.rows.clone();
        for v in bits(mask) {
            rows[v] |= 1 << n;
        }
        rows.push(mask);
        Self::from_rows_unchecked(rows)
    }

    /// Counts `(i,j)`-edges. Fails on a vertex of degree above 3.
    ///
    /// Edges touching a degree-0 vertex cannot exist, and `(1,1)`-edges (only
    /// possible in a `K2` component) are not represented in the census.
    pub fn edge_census(&self) -> Result<EdgeCensus, GraphError> {
        for v in 0..self.order() {
            let degree = self.degree(v);
            if degree > MAX_DEGREE {
                return Err(GraphError::DegreeTooHigh { vertex: v, degree });
            }
        }
        let mut census = EdgeCensus::default();
        for (u, v) in self.edges() {
            census.add_edge(self.degree(u), self.degree(v));
        }
        Ok(census)
    }

    /// Tallies vertices of degree 1, 2 and 3.
    pub fn vertex_counts(&self) -> VertexCounts {
        let mut counts = VertexCounts::default();
        for v in 0..self.order() {
            match self.degree(v) {
                1 => counts.n1 += 1,
                2 => counts.n2 += 1,
                3 => counts.n3 += 1,
                _ => {}
            }
        }
        counts
    }

    /// Checks the chemical-graph definition, reporting the first violated clause.
    pub fn chemical_check(&self) -> ChemicalCheck {
        let n = self.order();
        if !self.is_connected() {
            return ChemicalCheck::Rejected(Violation::Disconnected);
        }
        let max_degree = self.max_degree();
        if max_degree > MAX_DEGREE {
            return ChemicalCheck::Rejected(Violation::DegreeTooHigh(max_degree));
        }
        if n < MIN_CHEMICAL_ORDER {
            return ChemicalCheck::Rejected(Violation::OrderTooSmall(n));
        }
        let m = self.size();
        if 2 * m > 3 * n - 3 {
            return ChemicalCheck::Rejected(Violation::TooDense { n, m });
        }
        ChemicalCheck::Chemical
    }

    pub fn is_chemical(&self) -> bool {
        self.chemical_check().is_chemical()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges().collect::<Vec<_>>())
    }
}

/// Outcome of [`Graph::chemical_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChemicalCheck {
    Chemical,
    Rejected(Violation),
}

impl ChemicalCheck {
    pub fn is_chemical(self) -> bool {
        matches!(self, ChemicalCheck::Chemical)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("graph is not connected")]
    Disconnected,
    #[error("maximum degree {0} exceeds 3")]
    DegreeTooHigh(usize),
    #[error("order {0} is below 7")]
    OrderTooSmall(usize),
    #[error("size {m} exceeds (3n-3)/2 for n = {n}")]
    TooDense { n: usize, m: usize },
}

/// Iterates the set bits of `word` in increasing order.
#[inline]
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(b)
        }
    })
}
