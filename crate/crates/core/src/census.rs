//! Edge censuses and the integer arithmetic around them.
//!
//! Everything here is exact: the order formula has denominators 2, 3 and 6,
//! so it is evaluated on six times the order.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Number of `(i,j)`-edges for the five degree pairs of a graph with
/// maximum degree 3 and no `K2` component.
///
/// Serialized as the array `[x12, x13, x22, x23, x33]`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u64; 5]", into = "[u64; 5]")]
pub struct EdgeCensus {
    pub x12: u64,
    pub x13: u64,
    pub x22: u64,
    pub x23: u64,
    pub x33: u64,
}

impl EdgeCensus {
    pub const fn new(x12: u64, x13: u64, x22: u64, x23: u64, x33: u64) -> Self {
        Self { x12, x13, x22, x23, x33 }
    }

    pub const fn to_array(self) -> [u64; 5] {
        [self.x12, self.x13, self.x22, self.x23, self.x33]
    }

    /// Builds a census from signed components, or `None` if any is negative.
    pub fn from_signed(v: [i64; 5]) -> Option<Self> {
        if v.iter().any(|&c| c < 0) {
            return None;
        }
        Some(Self::from(v.map(|c| c as u64)))
    }

    pub(crate) fn add_edge(&mut self, du: usize, dv: usize) {
        match (du.min(dv), du.max(dv)) {
            (1, 2) => self.x12 += 1,
            (1, 3) => self.x13 += 1,
            (2, 2) => self.x22 += 1,
            (2, 3) => self.x23 += 1,
            (3, 3) => self.x33 += 1,
            // (1,1) is a K2 component; never part of a graph of order >= 3
            _ => {}
        }
    }

    /// Number of edges.
    pub fn size(&self) -> u64 {
        self.to_array().iter().sum()
    }

    /// Recovers the number of vertices of each degree.
    pub fn vertex_counts(&self) -> Result<VertexCounts, CensusError> {
        let twice_n2 = self.x12 + 2 * self.x22 + self.x23;
        let thrice_n3 = self.x13 + self.x23 + 2 * self.x33;
        if !twice_n2.is_multiple_of(2) || !thrice_n3.is_multiple_of(3) {
            return Err(CensusError::Inconsistent { census: *self, twice_n2, thrice_n3 });
        }
        Ok(VertexCounts { n1: self.x12 + self.x13, n2: twice_n2 / 2, n3: thrice_n3 / 3 })
    }

    /// Order and size `(n, m)` implied by the census.
    pub fn order_size(&self) -> Result<(u64, u64), CensusError> {
        let counts = self.vertex_counts()?;
        debug_assert_eq!(6 * counts.order(), self.six_times_order());
        Ok((counts.order(), self.size()))
    }

    fn six_times_order(&self) -> u64 {
        9 * self.x12 + 8 * self.x13 + 6 * self.x22 + 5 * self.x23 + 4 * self.x33
    }

    /// `self + k * a`, failing if a component would become negative.
    pub fn apply_transform(&self, a: &TransformVector, k: i64) -> Result<Self, CensusError> {
        let x = self.to_array();
        let d = a.to_array();
        let mut out = [0i64; 5];
        for t in 0..5 {
            out[t] = x[t] as i64 + k * d[t];
        }
        Self::from_signed(out).ok_or(CensusError::LeavesCone { census: *self, transform: *a, k })
    }

    /// Every census of order `n` and size `m` with integral vertex counts.
    pub fn all_with_order_size(n: u64, m: u64) -> Vec<Self> {
        let mut out = Vec::new();
        for x12 in 0..=m {
            for x13 in 0..=m - x12 {
                for x22 in 0..=m - x12 - x13 {
                    for x23 in 0..=m - x12 - x13 - x22 {
                        let x = Self::new(x12, x13, x22, x23, m - x12 - x13 - x22 - x23);
                        if x.six_times_order() == 6 * n && x.vertex_counts().is_ok() {
                            out.push(x);
                        }
                    }
                }
            }
        }
        out
    }

    /// Decides whether some connected simple graph of maximum degree at most
    /// 3 has exactly this census.
    ///
    /// With [`ChemicalGate::On`] the order and size must also satisfy the
    /// chemical-graph bounds `n >= 7` and `2m <= 3n - 3`.
    pub fn realizability(&self, gate: ChemicalGate) -> Realizability {
        let counts = match self.vertex_counts() {
            Ok(c) => c,
            Err(_) => return Realizability { violations: vec![Condition::NonIntegralCounts] },
        };
        let VertexCounts { n2, n3, .. } = counts;
        let (n, m) = (counts.order(), self.size());
        let delta = |v: u64| u64::from(v >= 1);
        let pairs = |k: u64| k * k.saturating_sub(1) / 2;
        let mut violations = Vec::new();

        if (1..=3).contains(&n3) && self.x33 > pairs(n3) {
            violations.push(Condition::X33ExceedsPairs);
        }
        if (1..=2).contains(&n2) && self.x22 > pairs(n2) {
            violations.push(Condition::X22ExceedsPairs);
        }
        if (1..=2).contains(&n2) && n3 == 1 && self.x23 > n2 * n3 {
            violations.push(Condition::X23ExceedsProduct);
        }
        // the lower bounds are written as `lhs + 1 >= rhs` to stay unsigned
        if self.x23 + 1 < delta(n2) + delta(n3) {
            violations.push(Condition::X23TooSmall);
        }
        if self.x23 + self.x33 + 1 < n3 + delta(n2) {
            violations.push(Condition::Degree3SideTooSparse);
        }
        if self.x22 + self.x23 + 1 < n2 + delta(n3) {
            violations.push(Condition::Degree2SideTooSparse);
        }
        if m + 1 < n {
            violations.push(Condition::TooFewEdges);
        }
        if gate == ChemicalGate::On {
            if n < 7 {
                violations.push(Condition::OrderBelowSeven);
            }
            if 2 * m + 3 > 3 * n {
                violations.push(Condition::TooDense);
            }
        }
        Realizability { violations }
    }

    /// [`EdgeCensus::realizability`] with the chemical gate on.
    pub fn is_realizable(&self) -> bool {
        self.realizability(ChemicalGate::On).is_realizable()
    }
}

impl From<[u64; 5]> for EdgeCensus {
    fn from(v: [u64; 5]) -> Self {
        Self::new(v[0], v[1], v[2], v[3], v[4])
    }
}

impl From<EdgeCensus> for [u64; 5] {
    fn from(x: EdgeCensus) -> Self {
        x.to_array()
    }
}

impl Add for EdgeCensus {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.x12 + rhs.x12,
            self.x13 + rhs.x13,
            self.x22 + rhs.x22,
            self.x23 + rhs.x23,
            self.x33 + rhs.x33,
        )
    }
}

impl fmt::Display for EdgeCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.x12, self.x13, self.x22, self.x23, self.x33)
    }
}

/// Number of vertices of degree 1, 2 and 3.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexCounts {
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
}

impl VertexCounts {
    pub fn order(&self) -> u64 {
        self.n1 + self.n2 + self.n3
    }
}

/// Integer direction `(a12, a13, a22, a23, a33)` along which a census is moved.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 5]", into = "[i64; 5]")]
pub struct TransformVector {
    pub a12: i64,
    pub a13: i64,
    pub a22: i64,
    pub a23: i64,
    pub a33: i64,
}

impl TransformVector {
    pub const fn new(a12: i64, a13: i64, a22: i64, a23: i64, a33: i64) -> Self {
        Self { a12, a13, a22, a23, a33 }
    }

    pub const fn to_array(self) -> [i64; 5] {
        [self.a12, self.a13, self.a22, self.a23, self.a33]
    }

    /// True iff moving along the vector changes neither the order nor the size.
    pub fn is_nm_preserving(&self) -> bool {
        let six_n = 9 * self.a12 + 8 * self.a13 + 6 * self.a22 + 5 * self.a23 + 4 * self.a33;
        let m: i64 = self.to_array().iter().sum();
        six_n == 0 && m == 0
    }
}

impl From<[i64; 5]> for TransformVector {
    fn from(v: [i64; 5]) -> Self {
        Self::new(v[0], v[1], v[2], v[3], v[4])
    }
}

impl From<TransformVector> for [i64; 5] {
    fn from(a: TransformVector) -> Self {
        a.to_array()
    }
}

/// Whether [`EdgeCensus::realizability`] also enforces the chemical-graph
/// bounds on order and size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChemicalGate {
    #[default]
    On,
    Off,
}

/// A realizability condition that a census can violate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Error)]
pub enum Condition {
    #[error("vertex counts n2 or n3 are not integers")]
    NonIntegralCounts,
    #[error("x33 exceeds n3(n3-1)/2 while n3 <= 3")]
    X33ExceedsPairs,
    #[error("x22 exceeds n2(n2-1)/2 while n2 <= 2")]
    X22ExceedsPairs,
    #[error("x23 exceeds n2*n3 while n2 <= 2 and n3 = 1")]
    X23ExceedsProduct,
    #[error("x23 < delta(n2) + delta(n3) - 1")]
    X23TooSmall,
    #[error("x23 + x33 < n3 + delta(n2) - 1")]
    Degree3SideTooSparse,
    #[error("x22 + x23 < n2 + delta(n3) - 1")]
    Degree2SideTooSparse,
    #[error("m < n - 1")]
    TooFewEdges,
    #[error("order below 7")]
    OrderBelowSeven,
    #[error("m > (3n-3)/2")]
    TooDense,
}

/// Result of a realizability test: the list of violated conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Realizability {
    pub violations: Vec<Condition>,
}

impl Realizability {
    pub fn is_realizable(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("inconsistent census {census}: 2*n2 = {twice_n2}, 3*n3 = {thrice_n3}")]
    Inconsistent { census: EdgeCensus, twice_n2: u64, thrice_n3: u64 },
    #[error("transform leaves census cone: {census} + {k} * {transform:?} has a negative component")]
    LeavesCone { census: EdgeCensus, transform: TransformVector, k: i64 },
}
