//! The twelve extremal families, each a set of censuses parameterized by
//! order and size, plus witness graphs for their censuses.

mod construct;
mod realize;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::census::EdgeCensus;
use crate::graph6::write_graph6;
use crate::oracle::is_chemical_pair;

pub use construct::{construct_f1_explicit, ConstructError, F1Construction};
pub use realize::{realize_census, RealizeError, DEFAULT_NODE_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
}

impl FamilyId {
    pub const ALL: [FamilyId; 12] = [
        FamilyId::F1,
        FamilyId::F2,
        FamilyId::F3,
        FamilyId::F4,
        FamilyId::F5,
        FamilyId::F6,
        FamilyId::F7,
        FamilyId::F8,
        FamilyId::F9,
        FamilyId::F10,
        FamilyId::F11,
        FamilyId::F12,
    ];

    pub fn number(self) -> usize {
        self as usize + 1
    }

    /// Censuses of the family at order `n` and size `m`.
    pub fn censuses(self, n: usize, m: usize) -> FamilyCensusSet {
        family_censuses(self, n, m)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.number())
    }
}

impl FromStr for FamilyId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s.strip_prefix(['F', 'f']).unwrap_or(s);
        match digits.parse::<usize>() {
            Ok(k @ 1..=12) => Ok(FamilyId::ALL[k - 1]),
            _ => Err(format!("unknown family {s:?} (expected F1..F12)")),
        }
    }
}

/// The censuses of one family at one `(n, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCensusSet {
    pub family: FamilyId,
    pub n: usize,
    pub m: usize,
    pub censuses: BTreeSet<EdgeCensus>,
    /// Why the set is empty, when it is.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl FamilyCensusSet {
    pub fn contains(&self, x: &EdgeCensus) -> bool {
        self.censuses.contains(x)
    }

    pub fn is_empty(&self) -> bool {
        self.censuses.is_empty()
    }

    /// JSON array of census arrays, e.g. `[[0,0,4,2,5]]`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.censuses).expect("censuses serialize")
    }
}

/// Collects table rows, dropping any whose entries are fractional or negative.
struct Rows(BTreeSet<EdgeCensus>);

impl Rows {
    fn new() -> Self {
        Rows(BTreeSet::new())
    }

    fn push(&mut self, row: [Option<i64>; 5]) {
        let mut v = [0i64; 5];
        for (slot, entry) in v.iter_mut().zip(row) {
            match entry {
                Some(x) => *slot = x,
                None => return,
            }
        }
        if let Some(x) = EdgeCensus::from_signed(v) {
            self.0.insert(x);
        }
    }
}

/// Exact quotient, or `None` when `den` does not divide `num`.
fn q(num: i64, den: i64) -> Option<i64> {
    (num % den == 0).then(|| num / den)
}

fn z(x: i64) -> Option<i64> {
    Some(x)
}

/// Census rows of family `id` applicable at `(n, m)`.
///
/// Outside the chemical range the set is empty and `reason` says why.
pub fn family_censuses(id: FamilyId, n: usize, m: usize) -> FamilyCensusSet {
    let mut set = FamilyCensusSet { family: id, n, m, censuses: BTreeSet::new(), reason: None };
    if !is_chemical_pair(n, m) {
        set.reason = Some(format!(
            "(n, m) = ({n}, {m}) is outside 7 <= n, n-1 <= m <= (3n-3)/2"
        ));
        return set;
    }
    let (n, m) = (n as i64, m as i64);
    let mut rows = Rows::new();
    match id {
        FamilyId::F1 => f1_rows(&mut rows, n, m),
        FamilyId::F2 => {
            path_cycle_rows(&mut rows, n, m);
            if m == n + 1 {
                rows.push([z(0), z(0), z(m - 5), z(4), z(1)]);
            }
            if m > n + 1 {
                rows.push([z(0), z(0), z(3 * n - 2 * m - 1), z(2), z(3 * m - 3 * n - 1)]);
            }
        }
        FamilyId::F3 => {
            if n % 2 == 0 {
                f1_rows(&mut rows, n, m);
            } else {
                rows.push([
                    z(1),
                    q(3 * n - 2 * m - 3, 2),
                    z(0),
                    z(1),
                    q(4 * m - 3 * n - 1, 2),
                ]);
            }
        }
        FamilyId::F4 => {
            if m == n - 1 {
                rows.push([z(2), z(0), z(m - 2), z(0), z(0)]);
            } else if 5 * m < 6 * n {
                rows.push([z(0), z(0), z(6 * n - 5 * m), z(6 * m - 6 * n), z(0)]);
            } else {
                rows.push([z(0), z(0), z(0), z(6 * n - 4 * m), z(5 * m - 6 * n)]);
            }
        }
        FamilyId::F5 => {
            path_cycle_rows(&mut rows, n, m);
            if m == n + 1 {
                rows.push([z(0), z(0), z(m - 6), z(6), z(0)]);
                rows.push([z(0), z(0), z(m - 5), z(4), z(1)]);
            }
            if m > n + 1 {
                for a in (6 * n - 5 * m).max(0)..=3 * n - 2 * m - 1 {
                    rows.push([z(0), z(0), z(a), z(6 * n - 4 * m - 2 * a), z(5 * m - 6 * n + a)]);
                }
            }
        }
        FamilyId::F6 => {
            let lo = ceil_div(6 * n - 5 * m, 3).max(0);
            let hi = (3 * n - 2 * m).div_euclid(2);
            for a in lo..=hi {
                rows.push([z(0), z(a), z(0), z(6 * n - 4 * m - 4 * a), z(5 * m - 6 * n + 3 * a)]);
            }
        }
        FamilyId::F7 => {
            path_cycle_rows(&mut rows, n, m);
            if m == n + 1 {
                rows.push([z(0), z(0), z(m - 5), z(4), z(1)]);
                rows.push([z(1), z(0), z(m - 7), z(3), z(3)]);
                if n >= 8 {
                    rows.push([z(2), z(0), z(m - 9), z(2), z(5)]);
                }
            }
            if m > n + 1 {
                upper_two_rows(&mut rows, n, m);
            }
        }
        FamilyId::F8 => {
            let small = (7..=9).contains(&n);
            if m + 1 == n && small {
                rows.push([z(2), z(0), z(m - 2), z(0), z(0)]);
                rows.push([z(3), z(0), z(m - 6), z(3), z(0)]);
            } else if m == n && (n == 7 || n == 8) {
                rows.push([z(2), z(0), z(m - 7), z(4), z(1)]);
            } else if n == 7 && m == 8 {
                rows.push([z(1), z(0), z(1), z(3), z(3)]);
            } else {
                let k = (3 * n - 2 * m).div_euclid(3);
                rows.push([z(k), z(0), z(m.rem_euclid(3)), z(k), z((7 * m - 6 * n).div_euclid(3))]);
            }
        }
        FamilyId::F9 => {
            let r = (2 * m).rem_euclid(3);
            if 5 * m <= 6 * n + 2 {
                rows.push([
                    z(0),
                    q(6 * n - 5 * m + r, 3),
                    z(0),
                    q(8 * m - 6 * n - 4 * r, 3),
                    z(r),
                ]);
            }
            if 5 * m >= 6 * n + 3 {
                rows.push([z(0), z(0), z(0), z(6 * n - 4 * m), z(5 * m - 6 * n)]);
            }
        }
        FamilyId::F10 => f10_rows(&mut rows, n, m),
        FamilyId::F11 => {
            f10_rows(&mut rows, n, m);
            if 5 * m <= 6 * n - 2 && m % 3 == 1 {
                rows.push([z(1), q(6 * n - 5 * m - 4, 3), z(0), q(8 * m - 6 * n + 1, 3), z(0)]);
                rows.push([z(0), q(6 * n - 5 * m + 2, 3), z(0), q(8 * m - 6 * n - 8, 3), z(2)]);
            }
            if 5 * m == 6 * n - 1 {
                rows.push([z(0), z(1), z(0), z(m - 3), z(2)]);
            }
        }
        FamilyId::F12 => {
            path_cycle_rows(&mut rows, n, m);
            if m == n + 1 {
                if n >= 8 {
                    rows.push([z(2), z(0), z(m - 9), z(2), z(5)]);
                }
                rows.push([z(1), z(1), z(m - 8), z(1), z(5)]);
                rows.push([z(1), z(0), z(m - 7), z(3), z(3)]);
                rows.push([z(0), z(1), z(m - 6), z(2), z(3)]);
                rows.push([z(0), z(0), z(m - 5), z(4), z(1)]);
            }
            if m > n + 1 {
                upper_two_rows(&mut rows, n, m);
            }
        }
    }
    set.censuses = rows.0;
    if set.censuses.is_empty() {
        set.reason = Some(format!("no row of {id} applies at (n, m) = ({n}, {m})"));
    }
    set
}

fn f1_rows(rows: &mut Rows, n: i64, m: i64) {
    if n % 2 == 0 {
        rows.push([z(0), q(3 * n - 2 * m, 2), z(0), z(0), q(4 * m - 3 * n, 2)]);
    } else {
        rows.push([z(0), q(3 * n - 2 * m - 1, 2), z(0), z(2), q(4 * m - 3 * n - 3, 2)]);
    }
}

/// The path row at `m = n - 1` and the cycle row at `m = n`.
fn path_cycle_rows(rows: &mut Rows, n: i64, m: i64) {
    if m == n - 1 {
        rows.push([z(2), z(0), z(m - 2), z(0), z(0)]);
    }
    if m == n {
        rows.push([z(0), z(0), z(m), z(0), z(0)]);
    }
}

/// Shared rows of F7 and F12 for `n + 1 < m`.
fn upper_two_rows(rows: &mut Rows, n: i64, m: i64) {
    rows.push([z(0), z(0), z(3 * n - 2 * m - 1), z(2), z(3 * m - 3 * n - 1)]);
    rows.push([z(1), z(0), z(3 * n - 2 * m - 3), z(1), z(3 * m - 3 * n + 1)]);
}

fn f10_rows(rows: &mut Rows, n: i64, m: i64) {
    if 5 * m <= 6 * n - 2 {
        match m % 3 {
            0 => rows.push([z(0), q(6 * n - 5 * m, 3), z(0), q(8 * m - 6 * n, 3), z(0)]),
            1 => rows.push([z(0), q(6 * n - 5 * m - 1, 3), z(1), q(8 * m - 6 * n - 2, 3), z(0)]),
            _ => rows.push([z(0), q(6 * n - 5 * m + 1, 3), z(0), q(8 * m - 6 * n - 4, 3), z(1)]),
        }
    }
    if 5 * m == 6 * n - 1 {
        rows.push([z(0), z(0), z(1), z(m - 1), z(0)]);
    }
    if 5 * m >= 6 * n {
        rows.push([z(0), z(0), z(0), z(6 * n - 4 * m), z(5 * m - 6 * n)]);
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// True iff `x` belongs to family `id` at its own order and size.
pub fn is_member(x: &EdgeCensus, id: FamilyId) -> Result<bool, crate::census::CensusError> {
    let (n, m) = x.order_size()?;
    Ok(family_censuses(id, n as usize, m as usize).contains(x))
}

/// One line of a family atlas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasRow {
    pub family: FamilyId,
    pub n: usize,
    pub m: usize,
    pub census: EdgeCensus,
    pub witness_graph6: Option<String>,
}

/// Rows for every family census over the chemical pairs with
/// `n_min <= n <= n_max`, each with a witness from [`realize_census`].
pub fn family_atlas(
    families: &[FamilyId],
    n_min: usize,
    n_max: usize,
    budget: u64,
) -> Result<Vec<AtlasRow>, RealizeError> {
    let mut out = Vec::new();
    for &family in families {
        for (n, m) in crate::oracle::chemical_pairs(n_min, n_max) {
            for census in family_censuses(family, n, m).censuses {
                let witness = realize_census(&census, budget)?.map(|g| write_graph6(&g));
                out.push(AtlasRow { family, n, m, census, witness_graph6: witness });
            }
        }
    }
    Ok(out)
}

/// CSV with columns `family,n,m,x12,x13,x22,x23,x33,witness_graph6`.
pub fn atlas_to_csv(rows: &[AtlasRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["family", "n", "m", "x12", "x13", "x22", "x23", "x33", "witness_graph6"])
        .expect("in-memory write");
    for r in rows {
        let mut rec = vec![r.family.to_string(), r.n.to_string(), r.m.to_string()];
        rec.extend(r.census.to_array().iter().map(u64::to_string));
        rec.push(r.witness_graph6.clone().unwrap_or_default());
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

pub fn atlas_to_json(rows: &[AtlasRow]) -> String {
    serde_json::to_string_pretty(rows).expect("atlas serializes")
}
