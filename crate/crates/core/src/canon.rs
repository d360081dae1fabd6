//! Canonical labeling by partition refinement and exhaustive
//! individualization.
//!
//! The search tree is explored without automorphism pruning, so the leaves
//! that attain the best certificate form one coset of the automorphism group.
//! That gives vertex orbits for free, which canonical augmentation needs.
//! Fine for graphs of maximum degree 3 on a dozen vertices; not meant for
//! large or highly regular inputs.

use crate::graph::{bits, Graph};

/// Canonical labeling of a graph together with its automorphism orbits.
#[derive(Debug, Clone)]
pub struct Canonical {
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    /// Adjacency rows of the relabeled graph.
    pub rows: Vec<u64>,
    /// `orbits[v]` is the smallest vertex in the automorphism orbit of `v`.
    pub orbits: Vec<usize>,
}

impl Canonical {
    pub fn graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.rows.clone())
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbits[u] == self.orbits[v]
    }
}

/// Computes the canonical form of `g`. Isomorphic graphs get identical `rows`.
pub fn canonical_form(g: &Graph) -> Canonical {
    let n = g.order();
    if n == 0 {
        return Canonical { labeling: vec![], rows: vec![], orbits: vec![] };
    }
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(g, &mut cells);
    let mut best = Best { rows: Vec::new(), labelings: Vec::new() };
    search(g, cells, &mut best);

    let first = best.labelings[0].clone();
    let mut parent: Vec<usize> = (0..n).collect();
    for other in &best.labelings[1..] {
        let mut at = vec![0; n];
        for (v, &p) in other.iter().enumerate() {
            at[p] = v;
        }
        for v in 0..n {
            union(&mut parent, v, at[first[v]]);
        }
    }
    let orbits = (0..n).map(|v| find(&mut parent, v)).collect();
    Canonical { labeling: first, rows: best.rows, orbits }
}

/// Convenience: canonical adjacency rows only.
pub fn certificate(g: &Graph) -> Vec<u64> {
    canonical_form(g).rows
}

struct Best {
    rows: Vec<u64>,
    labelings: Vec<Vec<usize>>,
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Best) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut labeling = vec![0; g.order()];
        for (p, cell) in cells.iter().enumerate() {
            labeling[cell[0]] = p;
        }
        let rows = relabeled_rows(g, &cells, &labeling);
        if best.labelings.is_empty() || rows > best.rows {
            best.rows = rows;
            best.labelings = vec![labeling];
        } else if rows == best.rows {
            best.labelings.push(labeling);
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cells[target].iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        refine(g, &mut next);
        search(g, next, best);
    }
}

fn relabeled_rows(g: &Graph, cells: &[Vec<usize>], labeling: &[usize]) -> Vec<u64> {
    cells
        .iter()
        .map(|cell| {
            bits(g.row(cell[0])).fold(0u64, |acc, w| acc | 1 << labeling[w])
        })
        .collect()
}

/// Refines an ordered partition to the coarsest equitable partition finer
/// than it. Cells are split by the number of neighbors in a splitter cell,
/// sub-cells ordered by increasing count.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = cells[s].iter().fold(0u64, |acc, &v| acc | 1 << v);
            for c in 0..cells.len() {
                if cells[c].len() == 1 {
                    continue;
                }
                let count = |v: usize| (g.row(v) & splitter).count_ones();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[c].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        parts.push(Vec::new());
                        last = Some(k);
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, parts);
                continue 'restart;
            }
        }
        return;
    }
}

fn find(parent: &mut [usize], v: usize) -> usize {
    let mut root = v;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = v;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    // keep the smaller vertex as root so orbit ids are orbit minima
    if ra < rb {
        parent[rb] = ra;
    } else if rb < ra {
        parent[ra] = rb;
    }
}
