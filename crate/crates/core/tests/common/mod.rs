//! Expectations shared by the integration tests, written out independently
//! of the classifier.

#![allow(dead_code)]

use std::collections::BTreeSet;

use chemgraph::index::{Sign, VTerm, BUILTINS, EXTRAS};
use chemgraph::{family_censuses, EdgeCensus, FamilyId};

/// Extremal set expected for one direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expect {
    F(FamilyId),
    F1OrF3,
    /// F8 except for the two small cases.
    AZagrebMax,
}

pub fn expected_set(e: Expect, n: usize, m: usize) -> BTreeSet<EdgeCensus> {
    match e {
        Expect::F(id) => family_censuses(id, n, m).censuses,
        Expect::F1OrF3 => {
            let mut s = family_censuses(FamilyId::F1, n, m).censuses;
            s.extend(family_censuses(FamilyId::F3, n, m).censuses);
            s
        }
        Expect::AZagrebMax => match (n, m) {
            (7, 8) => [EdgeCensus::new(1, 1, 0, 1, 5)].into(),
            (8, 8) => [EdgeCensus::new(2, 1, 0, 2, 3)].into(),
            _ => family_censuses(FamilyId::F8, n, m).censuses,
        },
    }
}

use Expect::{F, F1OrF3};
use FamilyId::*;

/// (index, maximizers, minimizers) for the 29 indices of the three grouped
/// results.
pub const GROUPED: [(&str, Expect, Expect); 29] = [
    ("ABSC", F(F1), F(F2)),
    ("AG", F(F1), F(F2)),
    ("AG-GA", F(F1), F(F2)),
    ("Extended", F(F1), F(F2)),
    ("rSumConn", F(F1), F(F2)),
    ("Sombor", F(F1), F(F2)),
    ("rSombor", F(F1), F(F2)),
    ("lnZagreb1", F(F1), F(F2)),
    ("GA", F(F2), F(F1)),
    ("GouravaSC", F(F2), F(F1)),
    ("Harmonic", F(F2), F(F1)),
    ("Randic", F(F2), F(F1)),
    ("SumConn", F(F2), F(F1)),
    ("Gourava1", F(F3), F(F4)),
    ("Gourava2", F(F3), F(F4)),
    ("hGourava1", F(F3), F(F4)),
    ("hGourava2", F(F3), F(F4)),
    ("GouravaPC", F(F3), F(F4)),
    ("InvSumDeg", F(F3), F(F4)),
    ("rRandic", F(F3), F(F4)),
    ("Zagreb2", F(F3), F(F4)),
    ("hZagreb1", F(F3), F(F4)),
    ("hZagreb2", F(F3), F(F4)),
    ("Forgotten", F1OrF3, F(F5)),
    ("InvDeg", F1OrF3, F(F5)),
    ("Zagreb1", F1OrF3, F(F5)),
    ("lnZagreb3", F1OrF3, F(F5)),
    ("mZagreb", F1OrF3, F(F5)),
    ("lnZagreb2", F(F5), F1OrF3),
];

/// The four indices with their own families.
pub const SPECIAL: [(&str, Expect, Expect); 4] = [
    ("Sigma", F(F6), F(F7)),
    ("ABC", F(F9), F(F8)),
    ("aZagreb", Expect::AZagrebMax, F(F10)),
    ("Albertson", F(F11), F(F12)),
];

/// A sign condition asserted for an index (or its complement).
pub struct SignFixture {
    pub index: &'static str,
    pub complement: bool,
    pub signs: &'static [(VTerm, Sign)],
}

const P: Sign = Sign::Positive;
const N: Sign = Sign::Negative;
const Z: Sign = Sign::Zero;
use VTerm::*;

const RULE1: &[(VTerm, Sign)] = &[(V1, P), (V2, P), (V5, P)];
const RULE2: &[(VTerm, Sign)] = &[(V3, P), (V4, P), (V6, P)];
const RULE3: &[(VTerm, Sign)] = &[(V1, P), (V6, P), (V7, P), (V8, P)];
const RULE4: &[(VTerm, Sign)] = &[(V3, P), (V4, P), (V6, N)];
const RULE13: &[(VTerm, Sign)] = &[(V1, P), (V5, P), (V7, Z)];
const RULE5: &[(VTerm, Sign)] = &[(V3, P), (V4, P), (V6, Z)];

macro_rules! fx {
    ($name:expr, $comp:expr, $signs:expr) => {
        SignFixture { index: $name, complement: $comp, signs: $signs }
    };
}

/// Sign conditions as asserted in the proofs of the grouped and special
/// results, for each index or its complement.
pub const SIGN_FIXTURES: &[SignFixture] = &[
    fx!("ABSC", false, RULE1),
    fx!("AG", false, RULE1),
    fx!("AG-GA", false, RULE1),
    fx!("Extended", false, RULE1),
    fx!("rSumConn", false, RULE1),
    fx!("Sombor", false, RULE1),
    fx!("rSombor", false, RULE1),
    fx!("lnZagreb1", false, RULE1),
    fx!("GA", true, RULE1),
    fx!("GouravaSC", true, RULE1),
    fx!("Harmonic", true, RULE1),
    fx!("Randic", true, RULE1),
    fx!("SumConn", true, RULE1),
    fx!("ABSC", true, RULE2),
    fx!("AG", true, RULE2),
    fx!("AG-GA", true, RULE2),
    fx!("Extended", true, RULE2),
    fx!("Sombor", true, RULE2),
    fx!("rSombor", true, RULE2),
    fx!("rSumConn", true, RULE2),
    fx!("lnZagreb1", true, RULE2),
    fx!("GA", false, RULE2),
    fx!("GouravaSC", false, RULE2),
    fx!("Harmonic", false, RULE2),
    fx!("Randic", false, RULE2),
    fx!("SumConn", false, RULE2),
    fx!("Gourava1", false, RULE3),
    fx!("Gourava2", false, RULE3),
    fx!("hGourava1", false, RULE3),
    fx!("hGourava2", false, RULE3),
    fx!("GouravaPC", false, RULE3),
    fx!("InvSumDeg", false, RULE3),
    fx!("rRandic", false, RULE3),
    fx!("Zagreb2", false, RULE3),
    fx!("hZagreb1", false, RULE3),
    fx!("hZagreb2", false, RULE3),
    fx!("Gourava1", true, RULE4),
    fx!("Gourava2", true, RULE4),
    fx!("hGourava1", true, RULE4),
    fx!("hGourava2", true, RULE4),
    fx!("GouravaPC", true, RULE4),
    fx!("InvSumDeg", true, RULE4),
    fx!("rRandic", true, RULE4),
    fx!("Zagreb2", true, RULE4),
    fx!("hZagreb1", true, RULE4),
    fx!("hZagreb2", true, RULE4),
    fx!("Forgotten", false, RULE13),
    fx!("InvDeg", false, RULE13),
    fx!("Zagreb1", false, RULE13),
    fx!("lnZagreb2", true, RULE13),
    fx!("lnZagreb3", false, RULE13),
    fx!("mZagreb", false, RULE13),
    fx!("Forgotten", true, RULE5),
    fx!("InvDeg", true, RULE5),
    fx!("Zagreb1", true, RULE5),
    fx!("lnZagreb2", false, RULE5),
    fx!("lnZagreb3", true, RULE5),
    fx!("mZagreb", true, RULE5),
    fx!("Sigma", false, &[(V1, P), (V2, P), (V5, Z)]),
    fx!("Sigma", true, &[(V3, P), (V6, P), (S2, Z)]),
    fx!("ABC", false, &[(V1, P), (V2, P), (V5, N)]),
    fx!("ABC", true, &[(V3, P), (V6, P), (S4, Z)]),
    fx!("aZagreb", false, &[(V6, P), (S4, Z)]),
    fx!("rrRandic", false, &[(V1, N), (V2, N), (V3, N), (V4, N)]),
];

/// V1..V8, s2, s4 straight from the defining sums, with the coefficients
/// taken from the weight function rather than an `IndexDefinition`.
pub fn independent_v(weight: fn(f64, f64) -> f64, complement: bool) -> [f64; 10] {
    let s = if complement { -1.0 } else { 1.0 };
    let c = |i: u32, j: u32| s * weight(f64::from(i.min(j)), f64::from(i.max(j)));
    let d32 = |i: u32| c(3, i) - c(2, i);
    let d23 = |i: u32| -d32(i);
    let min_of = |f: &dyn Fn(u32) -> f64, from: u32| (from..=3).map(f).fold(f64::INFINITY, f64::min);
    let v1 = c(1, 3) - c(2, 2) + min_of(&d32, 1) + min_of(&d32, 2);
    let v2 = c(1, 3) - c(1, 2) + min_of(&d23, 2);
    let v3 = c(2, 2) - c(1, 3) + min_of(&d23, 1) + min_of(&d23, 2);
    let v4 = 2.0 * c(2, 2) - c(1, 2) - c(2, 3) + 2.0 * min_of(&d23, 1);
    let v5 = c(1, 3) - 4.0 * c(2, 3) + 3.0 * c(3, 3);
    let v6 = c(2, 2) - 2.0 * c(2, 3) + c(3, 3);
    let v7 = c(1, 2) - c(1, 3) - c(2, 3) + c(3, 3);
    let v8 = -2.0 * c(1, 2) + 3.0 * c(1, 3) - 2.0 * c(2, 3) + c(3, 3);
    [v1, v2, v3, v4, v5, v6, v7, v8, v5 + v7 - 2.0 * v6, v5 + v7 - 4.0 * v6]
}

/// Weight function of a built-in or extra index by short name or alias.
pub fn weight_of(name: &str) -> fn(f64, f64) -> f64 {
    BUILTINS
        .iter()
        .chain(EXTRAS.iter())
        .find(|b| b.short_name == name || b.alias == Some(name))
        .unwrap_or_else(|| panic!("no index named {name}"))
        .weight
}
