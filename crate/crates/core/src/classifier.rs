//! Decision table from V-profile signs to predicted extremal families, with
//! dedicated handling of the augmented Zagreb and Albertson indices, and a
//! verifier that compares predictions with the oracle.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::census::EdgeCensus;
use crate::families::{family_censuses, FamilyId};
use crate::index::{builtin, IndexDefinition, Sign, VProfile, VTerm};
use crate::oracle::{chemical_pairs, thread_pool, Direction, Oracle, OracleError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyDescriptor {
    Family(FamilyId),
    F1UnionF3,
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyDescriptor::Family(id) => write!(f, "{id}"),
            FamilyDescriptor::F1UnionF3 => f.write_str("F1∪F3"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SpecialCase {
    /// F8 except at (7, 8) and (8, 8).
    AZagrebMax,
    /// F10.
    AZagrebMin,
    /// F11.
    AlbertsonMax,
    /// F12.
    AlbertsonMin,
}

impl SpecialCase {
    pub fn label(self) -> &'static str {
        match self {
            SpecialCase::AZagrebMax => "F8 (aZagreb max)",
            SpecialCase::AZagrebMin => "F10 (aZagreb min)",
            SpecialCase::AlbertsonMax => "F11 (Albertson max)",
            SpecialCase::AlbertsonMin => "F12 (Albertson min)",
        }
    }

    /// The special case reached by optimizing the complement instead.
    fn flipped(self) -> Self {
        match self {
            SpecialCase::AZagrebMax => SpecialCase::AZagrebMin,
            SpecialCase::AZagrebMin => SpecialCase::AZagrebMax,
            SpecialCase::AlbertsonMax => SpecialCase::AlbertsonMin,
            SpecialCase::AlbertsonMin => SpecialCase::AlbertsonMax,
        }
    }
}

/// Predicted extremal set for one direction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Family(FamilyDescriptor),
    Special(SpecialCase),
    Unclassified,
    /// More than one rule fired; every conclusion is listed.
    Conflicting(Vec<FamilyDescriptor>),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Family(d) => write!(f, "{d}"),
            Verdict::Special(s) => f.write_str(s.label()),
            Verdict::Unclassified => f.write_str("unclassified"),
            Verdict::Conflicting(ds) => {
                let parts: Vec<String> = ds.iter().map(ToString::to_string).collect();
                write!(f, "conflict({})", parts.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ClassificationRule {
    pub conditions: &'static [(VTerm, Sign)],
    pub conclusion: FamilyDescriptor,
}

impl ClassificationRule {
    pub fn fires(&self, p: &VProfile) -> bool {
        self.conditions.iter().all(|&(t, s)| p.sign(t) == s)
    }

    pub fn describe(&self) -> String {
        let conds: Vec<String> = self
            .conditions
            .iter()
            .map(|&(t, s)| {
                let rel = match s {
                    Sign::Positive => ">",
                    Sign::Negative => "<",
                    Sign::Zero => "=",
                };
                format!("{t}{rel}0")
            })
            .collect();
        format!("{} => {}", conds.join(", "), self.conclusion)
    }
}

use FamilyDescriptor::{F1UnionF3, Family as Fam};
use Sign::{Negative as Neg, Positive as Pos, Zero};
use VTerm::*;

/// The ten rules, in table order.
pub static RULES: [ClassificationRule; 10] = [
    ClassificationRule { conditions: &[(V1, Pos), (V2, Pos), (V5, Pos)], conclusion: Fam(FamilyId::F1) },
    ClassificationRule { conditions: &[(V3, Pos), (V4, Pos), (V6, Pos)], conclusion: Fam(FamilyId::F2) },
    ClassificationRule {
        conditions: &[(V1, Pos), (V6, Pos), (V7, Pos), (V8, Pos)],
        conclusion: Fam(FamilyId::F3),
    },
    ClassificationRule { conditions: &[(V3, Pos), (V4, Pos), (V6, Neg)], conclusion: Fam(FamilyId::F4) },
    ClassificationRule { conditions: &[(V1, Pos), (V5, Pos), (V7, Zero)], conclusion: F1UnionF3 },
    ClassificationRule { conditions: &[(V3, Pos), (V4, Pos), (V6, Zero)], conclusion: Fam(FamilyId::F5) },
    ClassificationRule { conditions: &[(V1, Pos), (V2, Pos), (V5, Zero)], conclusion: Fam(FamilyId::F6) },
    ClassificationRule { conditions: &[(V3, Pos), (V6, Pos), (S2, Zero)], conclusion: Fam(FamilyId::F7) },
    ClassificationRule { conditions: &[(V3, Pos), (V6, Pos), (S4, Zero)], conclusion: Fam(FamilyId::F8) },
    ClassificationRule { conditions: &[(V1, Pos), (V2, Pos), (V5, Neg)], conclusion: Fam(FamilyId::F9) },
];

/// Outcome of the rule table in one direction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DirectionResult {
    pub verdict: Verdict,
    /// Indices into [`RULES`] that fired.
    pub fired_rules: Vec<usize>,
    pub sign_pattern: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationResult {
    pub index: String,
    pub coefficients: [f64; 5],
    pub epsilon: f64,
    pub max: DirectionResult,
    pub min: DirectionResult,
    /// Human-readable descriptions of directions where several rules fired.
    pub conflicts: Vec<String>,
}

impl ClassificationResult {
    pub fn direction(&self, dir: Direction) -> &DirectionResult {
        match dir {
            Direction::Max => &self.max,
            Direction::Min => &self.min,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("classification serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "index      {}", self.index);
        for dir in Direction::BOTH {
            let r = self.direction(dir);
            let fired: Vec<String> = r.fired_rules.iter().map(|&i| RULES[i].conclusion.to_string()).collect();
            let _ = writeln!(
                out,
                "{:<10} {:<22} signs {}  fired [{}]",
                dir.as_str(),
                r.verdict.to_string(),
                r.sign_pattern,
                fired.join(", ")
            );
        }
        for c in &self.conflicts {
            let _ = writeln!(out, "conflict   {c}");
        }
        out
    }
}

fn special_of(f: &IndexDefinition, eps: f64) -> Option<SpecialCase> {
    let az = builtin("aZagreb").expect("aZagreb is built in");
    let al = builtin("Albertson").expect("Albertson is built in");
    if f.same_coefficients(&az, eps) {
        Some(SpecialCase::AZagrebMax)
    } else if f.same_coefficients(&az.complement(), eps) {
        Some(SpecialCase::AZagrebMin)
    } else if f.same_coefficients(&al, eps) {
        Some(SpecialCase::AlbertsonMax)
    } else if f.same_coefficients(&al.complement(), eps) {
        Some(SpecialCase::AlbertsonMin)
    } else {
        None
    }
}

fn apply_rules(f: &IndexDefinition, eps: f64) -> DirectionResult {
    let p = f.v_profile(eps);
    let fired: Vec<usize> = (0..RULES.len()).filter(|&i| RULES[i].fires(&p)).collect();
    let verdict = match fired.as_slice() {
        [] => Verdict::Unclassified,
        [i] => Verdict::Family(RULES[*i].conclusion),
        many => Verdict::Conflicting(many.iter().map(|&i| RULES[i].conclusion).collect()),
    };
    DirectionResult { verdict, fired_rules: fired, sign_pattern: p.sign_pattern() }
}

/// Applies the rule table to `f` for maximization and to its complement for
/// minimization. The aZagreb and Albertson coefficient vectors (and their
/// complements) override the table.
pub fn classify(f: &IndexDefinition, eps: f64) -> ClassificationResult {
    let mut max = apply_rules(f, eps);
    let mut min = apply_rules(&f.complement(), eps);
    if let Some(s) = special_of(f, eps) {
        max.verdict = Verdict::Special(s);
        min.verdict = Verdict::Special(s.flipped());
    }
    let conflicts = [(Direction::Max, &max), (Direction::Min, &min)]
        .iter()
        .filter_map(|(dir, r)| match &r.verdict {
            Verdict::Conflicting(ds) => {
                let names: Vec<String> = ds.iter().map(ToString::to_string).collect();
                Some(format!("{dir}: rules for {} all fired", names.join(", ")))
            }
            _ => None,
        })
        .collect();
    ClassificationResult {
        index: f.name.clone(),
        coefficients: f.coeffs,
        epsilon: eps,
        max,
        min,
        conflicts,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredictionError {
    #[error("no prediction: {0}")]
    NoPrediction(String),
}

fn descriptor_censuses(d: FamilyDescriptor, n: usize, m: usize) -> BTreeSet<EdgeCensus> {
    match d {
        FamilyDescriptor::Family(id) => family_censuses(id, n, m).censuses,
        FamilyDescriptor::F1UnionF3 => {
            let mut s = family_censuses(FamilyId::F1, n, m).censuses;
            s.extend(family_censuses(FamilyId::F3, n, m).censuses);
            s
        }
    }
}

/// Censuses of the extremal chemical graphs of order `n` and size `m`
/// predicted by `result` in direction `dir`.
pub fn predicted_censuses(
    result: &ClassificationResult,
    dir: Direction,
    n: usize,
    m: usize,
) -> Result<BTreeSet<EdgeCensus>, PredictionError> {
    match &result.direction(dir).verdict {
        Verdict::Family(d) => Ok(descriptor_censuses(*d, n, m)),
        Verdict::Special(SpecialCase::AZagrebMax) => Ok(match (n, m) {
            (7, 8) => [EdgeCensus::new(1, 1, 0, 1, 5)].into(),
            (8, 8) => [EdgeCensus::new(2, 1, 0, 2, 3)].into(),
            _ => family_censuses(FamilyId::F8, n, m).censuses,
        }),
        Verdict::Special(SpecialCase::AZagrebMin) => Ok(family_censuses(FamilyId::F10, n, m).censuses),
        Verdict::Special(SpecialCase::AlbertsonMax) => Ok(family_censuses(FamilyId::F11, n, m).censuses),
        Verdict::Special(SpecialCase::AlbertsonMin) => Ok(family_censuses(FamilyId::F12, n, m).censuses),
        Verdict::Unclassified => Err(PredictionError::NoPrediction(format!("{} is unclassified for {dir}", result.index))),
        Verdict::Conflicting(_) => {
            Err(PredictionError::NoPrediction(format!("{} has conflicting rules for {dir}", result.index)))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Agree,
    Disagree,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationEntry {
    pub n: usize,
    pub m: usize,
    pub direction: Direction,
    pub status: Status,
    pub optimum: f64,
    pub observed: BTreeSet<EdgeCensus>,
    pub predicted: Option<BTreeSet<EdgeCensus>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub index: String,
    pub n_max: usize,
    pub max_verdict: String,
    pub min_verdict: String,
    pub agreements: usize,
    pub disagreements: usize,
    pub skipped: usize,
    pub entries: Vec<VerificationEntry>,
}

fn set_text(s: &BTreeSet<EdgeCensus>) -> String {
    let parts: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(" "))
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned table with one line per `(n, m, direction)`.
    pub fn to_text(&self) -> String {
        let rows: Vec<[String; 6]> = self
            .entries
            .iter()
            .map(|e| {
                [
                    e.n.to_string(),
                    e.m.to_string(),
                    e.direction.to_string(),
                    format!("{:?}", e.status).to_lowercase(),
                    e.predicted.as_ref().map_or_else(|| "-".to_string(), set_text),
                    set_text(&e.observed),
                ]
            })
            .collect();
        let header = ["n", "m", "dir", "status", "predicted", "observed"].map(String::from);
        let mut widths = header.clone().map(|h| h.chars().count());
        for r in &rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}: max {}, min {}; {} agree, {} disagree, {} skipped",
            self.index, self.max_verdict, self.min_verdict, self.agreements, self.disagreements, self.skipped
        );
        for r in std::iter::once(&header).chain(rows.iter()) {
            let cells: Vec<String> = r
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        }
        out
    }
}

/// Compares the oracle's extremal census sets with the predicted ones for
/// every chemical `(n, m)` with `n <= n_max` and both directions.
pub fn verify_characterization(
    f: &IndexDefinition,
    n_max: usize,
    oracle: &Oracle,
    eps: f64,
) -> Result<VerificationReport, OracleError> {
    let result = classify(f, eps);
    let pairs = chemical_pairs(7, n_max);
    for n in 7..=n_max {
        oracle.atlas(n)?;
    }
    let tasks: Vec<(usize, usize, Direction)> = pairs
        .iter()
        .flat_map(|&(n, m)| Direction::BOTH.map(|d| (n, m, d)))
        .collect();
    let entries = thread_pool(oracle.workers()).install(|| {
        tasks
            .par_iter()
            .map(|&(n, m, direction)| {
                let report = oracle.extremal_censuses(f, n, m, direction)?;
                let observed = report.census_set();
                let predicted = predicted_censuses(&result, direction, n, m).ok();
                let status = match &predicted {
                    None => Status::Skipped,
                    Some(p) if *p == observed => Status::Agree,
                    Some(_) => Status::Disagree,
                };
                Ok(VerificationEntry { n, m, direction, status, optimum: report.optimum, observed, predicted })
            })
            .collect::<Result<Vec<_>, OracleError>>()
    })?;
    let count = |s: Status| entries.iter().filter(|e| e.status == s).count();
    Ok(VerificationReport {
        index: f.name.clone(),
        n_max,
        max_verdict: result.max.verdict.to_string(),
        min_verdict: result.min.verdict.to_string(),
        agreements: count(Status::Agree),
        disagreements: count(Status::Disagree),
        skipped: count(Status::Skipped),
        entries,
    })
}
