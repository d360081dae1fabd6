//! Degree-based topological indices.
//!
//! An index is a linear functional on the edge census, fixed by one real
//! coefficient per degree pair. The built-in table evaluates each index's
//! closed-form edge weight `c(i, j)` at the five pairs.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::census::EdgeCensus;

/// Default absolute tolerance for sign classification.
pub const DEFAULT_EPSILON: f64 = 1e-9;

/// The five degree pairs in census order.
pub const PAIRS: [(u32, u32); 5] = [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3)];

const COMPLEMENT_SUFFIX: &str = "~";

/// A named coefficient vector `(c12, c13, c22, c23, c33)`.
///
/// JSON form: `{"name": "...", "c": [c12, c13, c22, c23, c33]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexDefinition {
    pub name: String,
    #[serde(rename = "c")]
    pub coeffs: [f64; 5],
}

impl IndexDefinition {
    pub fn new(name: impl Into<String>, coeffs: [f64; 5]) -> Result<Self, IndexError> {
        if let Some(pos) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(IndexError::NonFinite(pos));
        }
        Ok(Self { name: name.into(), coeffs })
    }

    /// Evaluates a closed-form edge weight at the five degree pairs.
    pub fn from_weight(name: impl Into<String>, weight: impl Fn(f64, f64) -> f64) -> Self {
        let coeffs = PAIRS.map(|(i, j)| weight(i as f64, j as f64));
        Self::new(name, coeffs).expect("built-in weights are finite")
    }

    pub fn c12(&self) -> f64 {
        self.coeffs[0]
    }
    pub fn c13(&self) -> f64 {
        self.coeffs[1]
    }
    pub fn c22(&self) -> f64 {
        self.coeffs[2]
    }
    pub fn c23(&self) -> f64 {
        self.coeffs[3]
    }
    pub fn c33(&self) -> f64 {
        self.coeffs[4]
    }

    /// Coefficient of the unordered degree pair `{i, j}`.
    pub fn coeff(&self, i: u32, j: u32) -> f64 {
        let key = (i.min(j), i.max(j));
        let pos = PAIRS
            .iter()
            .position(|&p| p == key)
            .unwrap_or_else(|| panic!("no coefficient for degree pair ({i}, {j})"));
        self.coeffs[pos]
    }

    pub fn evaluate(&self, x: &EdgeCensus) -> f64 {
        self.coeffs
            .iter()
            .zip(x.to_array())
            .map(|(c, k)| c * k as f64)
            .sum()
    }

    /// The index with every coefficient negated. Applying it twice restores
    /// the original name as well as the coefficients.
    pub fn complement(&self) -> Self {
        let name = match self.name.strip_suffix(COMPLEMENT_SUFFIX) {
            Some(base) => base.to_string(),
            None => format!("{}{COMPLEMENT_SUFFIX}", self.name),
        };
        Self { name, coeffs: self.coeffs.map(|c| -c) }
    }

    pub fn v_profile(&self, epsilon: f64) -> VProfile {
        VProfile::new(self, epsilon)
    }

    /// True if the coefficient vectors agree within `epsilon` componentwise.
    pub fn same_coefficients(&self, other: &Self, epsilon: f64) -> bool {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| (a - b).abs() < epsilon)
    }
}

impl fmt::Display for IndexDefinition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.name, self.coeffs)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IndexError {
    #[error("unknown index {name:?}; available: {}", available.join(", "))]
    Unknown { name: String, available: Vec<String> },
    #[error("coefficient {0} is not finite")]
    NonFinite(usize),
}

/// One row of the built-in table.
pub struct Builtin {
    pub short_name: &'static str,
    pub long_name: &'static str,
    /// ASCII spelling accepted in addition to `short_name`.
    pub alias: Option<&'static str>,
    pub formula: &'static str,
    pub weight: fn(f64, f64) -> f64,
}

impl Builtin {
    pub fn definition(&self) -> IndexDefinition {
        IndexDefinition::from_weight(self.short_name, self.weight)
    }

    fn matches(&self, name: &str) -> bool {
        self.short_name.eq_ignore_ascii_case(name)
            || self.short_name.to_lowercase() == name.to_lowercase()
            || self.alias.is_some_and(|a| a.eq_ignore_ascii_case(name))
    }
}

macro_rules! builtin {
    ($short:expr, $long:expr, $alias:expr, $formula:expr, |$i:ident, $j:ident| $body:expr) => {
        Builtin {
            short_name: $short,
            long_name: $long,
            alias: $alias,
            formula: $formula,
            weight: |$i: f64, $j: f64| $body,
        }
    };
}

/// The 33 built-in degree-based indices.
pub static BUILTINS: [Builtin; 33] = [
    builtin!("ABC", "Atom-bond connectivity index", None, "sqrt((i+j-2)/(ij))",
        |i, j| ((i + j - 2.0) / (i * j)).sqrt()),
    builtin!("ABSC", "Atom-bond sum-connectivity index", None, "sqrt((i+j-2)/(i+j))",
        |i, j| ((i + j - 2.0) / (i + j)).sqrt()),
    builtin!("Albertson", "Albertson index", None, "|i-j|",
        |i, j| (i - j).abs()),
    builtin!("AG", "Arithmetic-geometric index", None, "(i+j)/(2 sqrt(ij))",
        |i, j| (i + j) / (2.0 * (i * j).sqrt())),
    builtin!("AG-GA", "Difference between AG and GA", None, "(i+j)/(2 sqrt(ij)) - 2 sqrt(ij)/(i+j)",
        |i, j| (i + j) / (2.0 * (i * j).sqrt()) - 2.0 * (i * j).sqrt() / (i + j)),
    builtin!("Extended", "Extended index", None, "(i/j + j/i)/2",
        |i, j| 0.5 * (i / j + j / i)),
    builtin!("Forgotten", "Forgotten index", None, "i^2 + j^2",
        |i, j| i * i + j * j),
    builtin!("GA", "Geometric-arithmetic index", None, "2 sqrt(ij)/(i+j)",
        |i, j| 2.0 * (i * j).sqrt() / (i + j)),
    builtin!("Gourava1", "First Gourava index", None, "i+j+ij",
        |i, j| i + j + i * j),
    builtin!("Gourava2", "Second Gourava index", None, "(i+j)ij",
        |i, j| (i + j) * i * j),
    builtin!("hGourava1", "First hyper-Gourava index", None, "(i+j+ij)^2",
        |i, j| (i + j + i * j).powi(2)),
    builtin!("hGourava2", "Second hyper-Gourava index", None, "((i+j)ij)^2",
        |i, j| ((i + j) * i * j).powi(2)),
    builtin!("GouravaSC", "Gourava sum-connectivity index", None, "1/sqrt(i+j+ij)",
        |i, j| 1.0 / (i + j + i * j).sqrt()),
    builtin!("GouravaPC", "Gourava product-connectivity index", None, "sqrt(ij(i+j))",
        |i, j| (i * j * (i + j)).sqrt()),
    builtin!("Harmonic", "Harmonic index", None, "2/(i+j)",
        |i, j| 2.0 / (i + j)),
    builtin!("InvDeg", "Inverse degree index", None, "i^-2 + j^-2",
        |i, j| i.powi(-2) + j.powi(-2)),
    builtin!("InvSumDeg", "Inverse sum of degree index", None, "ij/(i+j)",
        |i, j| i * j / (i + j)),
    builtin!("Randić", "Randić index", Some("Randic"), "1/sqrt(ij)",
        |i, j| 1.0 / (i * j).sqrt()),
    builtin!("rRandić", "Reciprocal Randić index", Some("rRandic"), "sqrt(ij)",
        |i, j| (i * j).sqrt()),
    builtin!("Sigma", "Sigma index", None, "(i-j)^2",
        |i, j| (i - j).powi(2)),
    builtin!("Sombor", "Sombor index", None, "sqrt(i^2 + j^2)",
        |i, j| (i * i + j * j).sqrt()),
    builtin!("rSombor", "Reduced Sombor index", None, "sqrt((i-1)^2 + (j-1)^2)",
        |i, j| ((i - 1.0).powi(2) + (j - 1.0).powi(2)).sqrt()),
    builtin!("SumConn", "Sum connectivity index", None, "1/sqrt(i+j)",
        |i, j| 1.0 / (i + j).sqrt()),
    builtin!("rSumConn", "Reciprocal sum connectivity index", None, "sqrt(i+j)",
        |i, j| (i + j).sqrt()),
    builtin!("Zagreb1", "First Zagreb index", None, "i+j",
        |i, j| i + j),
    builtin!("Zagreb2", "Second Zagreb index", None, "ij",
        |i, j| i * j),
    builtin!("aZagreb", "Augmented Zagreb index", None, "(ij/(i+j-2))^3",
        |i, j| (i * j / (i + j - 2.0)).powi(3)),
    builtin!("hZagreb1", "First hyper-Zagreb index", None, "(i+j)^2",
        |i, j| (i + j).powi(2)),
    builtin!("hZagreb2", "Second hyper-Zagreb index", None, "(ij)^2",
        |i, j| (i * j).powi(2)),
    builtin!("lnZagreb1", "Nat. log. of the multiplicative sum Zagreb index", None, "ln(i+j)",
        |i, j| (i + j).ln()),
    builtin!("lnZagreb2", "Nat. log. of the first multiplicative Zagreb index", None, "2(ln(i)/i + ln(j)/j)",
        |i, j| 2.0 * (i.ln() / i + j.ln() / j)),
    builtin!("lnZagreb3", "Nat. log. of the second multiplicative Zagreb index", None, "ln(i) + ln(j)",
        |i, j| i.ln() + j.ln()),
    builtin!("mZagreb", "Modified first Zagreb index", None, "i^-3 + j^-3",
        |i, j| i.powi(-3) + j.powi(-3)),
];

/// Indices that are not among the 33 built-ins but can be looked up by name.
pub static EXTRAS: [Builtin; 1] = [builtin!(
    "rrRandić",
    "Reduced reciprocal Randić index",
    Some("rrRandic"),
    "sqrt((i-1)(j-1))",
    |i, j| ((i - 1.0) * (j - 1.0)).sqrt()
)];

/// Looks up one of the 33 built-ins by short name (case-insensitive, with
/// ASCII aliases such as `Randic`).
pub fn builtin(name: &str) -> Result<IndexDefinition, IndexError> {
    BUILTINS
        .iter()
        .find(|b| b.matches(name))
        .map(Builtin::definition)
        .ok_or_else(|| unknown(name))
}

/// Like [`builtin`] but also searches [`EXTRAS`].
pub fn named(name: &str) -> Result<IndexDefinition, IndexError> {
    BUILTINS
        .iter()
        .chain(EXTRAS.iter())
        .find(|b| b.matches(name))
        .map(Builtin::definition)
        .ok_or_else(|| unknown(name))
}

fn unknown(name: &str) -> IndexError {
    IndexError::Unknown {
        name: name.to_string(),
        available: BUILTINS
            .iter()
            .chain(EXTRAS.iter())
            .map(|b| b.short_name.to_string())
            .collect(),
    }
}

pub fn all_builtins() -> Vec<IndexDefinition> {
    BUILTINS.iter().map(Builtin::definition).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn classify(value: f64, epsilon: f64) -> Self {
        if value.abs() < epsilon {
            Sign::Zero
        } else if value > 0.0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Negative => '-',
            Sign::Zero => '0',
            Sign::Positive => '+',
        }
    }
}

/// Quantities read off the V-profile by the classification rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VTerm {
    V1,
    V2,
    V3,
    V4,
    V5,
    V6,
    V7,
    V8,
    /// `V5 + V7 - 2 V6`
    S2,
    /// `V5 + V7 - 4 V6`
    S4,
}

impl VTerm {
    pub const ALL: [VTerm; 10] = [
        VTerm::V1,
        VTerm::V2,
        VTerm::V3,
        VTerm::V4,
        VTerm::V5,
        VTerm::V6,
        VTerm::V7,
        VTerm::V8,
        VTerm::S2,
        VTerm::S4,
    ];

    pub fn label(self) -> &'static str {
        match self {
            VTerm::V1 => "V1",
            VTerm::V2 => "V2",
            VTerm::V3 => "V3",
            VTerm::V4 => "V4",
            VTerm::V5 => "V5",
            VTerm::V6 => "V6",
            VTerm::V7 => "V7",
            VTerm::V8 => "V8",
            VTerm::S2 => "V5+V7-2V6",
            VTerm::S4 => "V5+V7-4V6",
        }
    }
}

impl fmt::Display for VTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The eight V-values of an index, the two derived combinations, and their
/// signs under an absolute tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VProfile {
    /// `V1..V8` at positions `0..8`.
    pub v: [f64; 8],
    pub s2: f64,
    pub s4: f64,
    pub epsilon: f64,
}

impl VProfile {
    pub fn new(f: &IndexDefinition, epsilon: f64) -> Self {
        assert!(epsilon > 0.0, "epsilon must be positive");
        let c = |i, j| f.coeff(i, j);
        // Gains from turning a degree-2 endpoint opposite a degree-i vertex into
        // degree 3, and the reverse.
        let up = |i| c(3, i) - c(2, i);
        let down = |i| c(2, i) - c(3, i);
        let min_up_123 = up(1).min(up(2)).min(up(3));
        let min_up_23 = up(2).min(up(3));
        let min_down_123 = down(1).min(down(2)).min(down(3));
        let min_down_23 = down(2).min(down(3));

        let v1 = c(1, 3) - c(2, 2) + min_up_123 + min_up_23;
        let v2 = c(1, 3) - c(1, 2) + min_down_23;
        let v3 = c(2, 2) - c(1, 3) + min_down_123 + min_down_23;
        let v4 = 2.0 * c(2, 2) - c(1, 2) - c(2, 3) + 2.0 * min_down_123;
        let v5 = c(1, 3) - 4.0 * c(2, 3) + 3.0 * c(3, 3);
        let v6 = c(2, 2) - 2.0 * c(2, 3) + c(3, 3);
        let v7 = c(1, 2) - c(1, 3) - c(2, 3) + c(3, 3);
        let v8 = -2.0 * c(1, 2) + 3.0 * c(1, 3) - 2.0 * c(2, 3) + c(3, 3);
        Self {
            v: [v1, v2, v3, v4, v5, v6, v7, v8],
            s2: v5 + v7 - 2.0 * v6,
            s4: v5 + v7 - 4.0 * v6,
            epsilon,
        }
    }

    pub fn value(&self, term: VTerm) -> f64 {
        match term {
            VTerm::V1 => self.v[0],
            VTerm::V2 => self.v[1],
            VTerm::V3 => self.v[2],
            VTerm::V4 => self.v[3],
            VTerm::V5 => self.v[4],
            VTerm::V6 => self.v[5],
            VTerm::V7 => self.v[6],
            VTerm::V8 => self.v[7],
            VTerm::S2 => self.s2,
            VTerm::S4 => self.s4,
        }
    }

    pub fn sign(&self, term: VTerm) -> Sign {
        Sign::classify(self.value(term), self.epsilon)
    }

    /// Sign string over `V1..V8`, e.g. `"++--0+++"`.
    pub fn sign_pattern(&self) -> String {
        VTerm::ALL[..8].iter().map(|&t| self.sign(t).symbol()).collect()
    }
}
