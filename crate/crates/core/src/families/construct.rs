use thiserror::Error;

use crate::census::EdgeCensus;
use crate::graph::Graph;
use crate::oracle::is_chemical_pair;

use super::realize::{realize_census, RealizeError};
use super::{family_censuses, FamilyId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("construction needs even n >= 8 and n <= m <= (3n-3)/2, got (n, m) = ({n}, {m})")]
    OutOfRange { n: usize, m: usize },
    #[error("fallback realizer failed: {0}")]
    Realize(#[from] RealizeError),
    #[error("no graph realizes the F1 census {0}")]
    NoWitness(EdgeCensus),
}

#[derive(Debug, Clone)]
pub struct F1Construction {
    pub graph: Graph,
    pub census: EdgeCensus,
    /// Set when the cycle-and-chords graph failed validation and the
    /// realizer produced the witness instead.
    pub fallback: Option<String>,
}

/// Cycle on `m - n/2` vertices, `m - n` chords `v_i v_{off+i}` with
/// `off = ceil((2m - n) / 4)`, and a pendant on every unmatched cycle vertex.
pub fn construct_f1_explicit(n: usize, m: usize, budget: u64) -> Result<F1Construction, ConstructError> {
    if n % 2 == 1 || n < 8 || m < n || !is_chemical_pair(n, m) {
        return Err(ConstructError::OutOfRange { n, m });
    }
    let target = *family_censuses(FamilyId::F1, n, m)
        .censuses
        .iter()
        .next()
        .ok_or(ConstructError::OutOfRange { n, m })?;

    let fallback = match cycle_with_chords(n, m) {
        Ok(g) => match g.edge_census() {
            Ok(c) if c == target && g.is_chemical() => {
                return Ok(F1Construction { graph: g, census: target, fallback: None })
            }
            Ok(c) => format!("construction produced census {c}, expected {target}"),
            Err(e) => e.to_string(),
        },
        Err(e) => e,
    };
    let graph = realize_census(&target, budget)?.ok_or(ConstructError::NoWitness(target))?;
    Ok(F1Construction { graph, census: target, fallback: Some(fallback) })
}

fn cycle_with_chords(n: usize, m: usize) -> Result<Graph, String> {
    let len = m - n / 2;
    let chords = m - n;
    let off = (2 * m - n).div_ceil(4);
    let mut edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    let mut matched = vec![false; len];
    for i in 1..=chords {
        let (a, b) = (i - 1, off + i - 1);
        if b >= len {
            return Err(format!("chord endpoint {} exceeds cycle length {len}", b + 1));
        }
        matched[a] = true;
        matched[b] = true;
        edges.push((a, b));
    }
    let mut next = len;
    for (v, &is_matched) in matched.iter().enumerate() {
        if !is_matched {
            edges.push((v, next));
            next += 1;
        }
    }
    if next != n {
        return Err(format!("construction used {next} vertices, expected {n}"));
    }
    Graph::from_edges(n, &edges).map_err(|e| e.to_string())
}
