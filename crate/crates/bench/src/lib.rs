//! Shared inputs for the criterion benches.

use chemgraph::{EdgeCensus, FamilyId, IndexDefinition};

/// Indices covering each branch of the classifier.
pub fn sample_indices() -> Vec<IndexDefinition> {
    ["Randic", "Zagreb2", "Zagreb1", "Sigma", "ABC", "aZagreb", "Albertson"]
        .iter()
        .map(|name| chemgraph::builtin(name).expect("built in"))
        .collect()
}

/// Every family census for `n_min <= n <= n_max`.
pub fn family_workload(n_min: usize, n_max: usize) -> Vec<EdgeCensus> {
    let mut out = Vec::new();
    for (n, m) in chemgraph::oracle::chemical_pairs(n_min, n_max) {
        for id in FamilyId::ALL {
            out.extend(chemgraph::family_censuses(id, n, m).censuses);
        }
    }
    out
}
