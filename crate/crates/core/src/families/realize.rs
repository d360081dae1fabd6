use thiserror::Error;

use crate::census::EdgeCensus;
use crate::graph::{Graph, MIN_CHEMICAL_ORDER};

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("search budget of {0} nodes exhausted before a decision")]
    BudgetExceeded(u64),
}

/// Finds a chemical graph with census `x`, or `None` when there is none.
///
/// Vertices are labeled with the degree sequence implied by `x` and the graph
/// is grown as one component from vertex 0, saturating the lowest open vertex
/// first. Untouched vertices of equal degree are interchangeable, so only one
/// per degree class is tried. Partners are ordered by scarcest remaining
/// edge-type budget, ties by vertex index.
pub fn realize_census(x: &EdgeCensus, budget: u64) -> Result<Option<Graph>, RealizeError> {
    let Ok(counts) = x.vertex_counts() else {
        return Ok(None);
    };
    let (n, m) = (counts.order() as usize, x.size() as usize);
    if n < MIN_CHEMICAL_ORDER || 2 * m > 3 * n - 3 || n > crate::graph::MAX_ORDER {
        return Ok(None);
    }
    let mut s = Search {
        deg: Vec::with_capacity(n),
        rem: Vec::with_capacity(n),
        floor: Vec::with_capacity(n),
        adj: Vec::with_capacity(n),
        pool: [0, counts.n1 as usize, counts.n2 as usize, counts.n3 as usize],
        budget: x.to_array(),
        open: 0,
        nodes: 0,
        limit: budget,
    };
    for d in 1..=3 {
        if s.pool[d] == 0 {
            continue;
        }
        s.touch(d);
        if s.step()? {
            let g = Graph::from_rows(s.adj.clone());
            debug_assert_eq!(g.edge_census().ok(), Some(*x));
            return Ok(Some(g));
        }
        s.untouch();
    }
    Ok(None)
}

struct Search {
    deg: Vec<usize>,
    rem: Vec<usize>,
    floor: Vec<usize>,
    adj: Vec<u64>,
    /// Untouched vertices per degree.
    pool: [usize; 4],
    budget: [u64; 5],
    /// Unused stubs over touched vertices.
    open: usize,
    nodes: u64,
    limit: u64,
}

fn edge_type(a: usize, b: usize) -> Option<usize> {
    match (a.min(b), a.max(b)) {
        (1, 2) => Some(0),
        (1, 3) => Some(1),
        (2, 2) => Some(2),
        (2, 3) => Some(3),
        (3, 3) => Some(4),
        _ => None,
    }
}

#[derive(Clone, Copy)]
enum Partner {
    Touched(usize),
    Fresh(usize),
}

impl Search {
    fn touch(&mut self, d: usize) -> usize {
        let v = self.deg.len();
        self.pool[d] -= 1;
        self.deg.push(d);
        self.rem.push(d);
        self.floor.push(v + 1);
        self.adj.push(0);
        self.open += d;
        v
    }

    fn untouch(&mut self) {
        let d = self.deg.pop().unwrap();
        let r = self.rem.pop().unwrap();
        self.floor.pop();
        self.adj.pop();
        self.pool[d] += 1;
        self.open -= r;
    }

    fn link(&mut self, u: usize, v: usize, t: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.rem[u] -= 1;
        self.rem[v] -= 1;
        self.open -= 2;
        self.budget[t] -= 1;
    }

    fn unlink(&mut self, u: usize, v: usize, t: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        self.rem[u] += 1;
        self.rem[v] += 1;
        self.open += 2;
        self.budget[t] += 1;
    }

    fn step(&mut self) -> Result<bool, RealizeError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(RealizeError::BudgetExceeded(self.limit));
        }
        let untouched: usize = self.pool.iter().sum();
        let Some(u) = self.rem.iter().position(|&r| r > 0) else {
            return Ok(untouched == 0 && self.budget.iter().all(|&b| b == 0));
        };

        let du = self.deg[u];
        let mut options: Vec<(u64, usize, Partner, usize)> = Vec::new();
        for v in self.floor[u]..self.deg.len() {
            if self.rem[v] == 0 || self.adj[u] >> v & 1 == 1 {
                continue;
            }
            if let Some(t) = edge_type(du, self.deg[v]) {
                if self.budget[t] > 0 {
                    options.push((self.budget[t], v, Partner::Touched(v), t));
                }
            }
        }
        for d in 1..=3 {
            if self.pool[d] == 0 {
                continue;
            }
            if let Some(t) = edge_type(du, d) {
                if self.budget[t] > 0 {
                    options.push((self.budget[t], self.deg.len(), Partner::Fresh(d), t));
                }
            }
        }
        options.sort_by_key(|&(b, idx, _, _)| (b, idx));

        let saved_floor = self.floor[u];
        for (_, _, partner, t) in options {
            let v = match partner {
                Partner::Touched(v) => v,
                Partner::Fresh(d) => self.touch(d),
            };
            self.link(u, v, t);
            self.floor[u] = v + 1;
            // the component must keep an open stub while vertices remain outside it
            let stranded = self.open == 0 && self.pool.iter().sum::<usize>() > 0;
            if !stranded && self.step()? {
                return Ok(true);
            }
            self.floor[u] = saved_floor;
            self.unlink(u, v, t);
            if let Partner::Fresh(_) = partner {
                self.untouch();
            }
        }
        Ok(false)
    }
}
