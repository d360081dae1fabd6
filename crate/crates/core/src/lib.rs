//! Degree-based topological indices on chemical graphs (connected, maximum
//! degree 3): edge censuses, extremal families, an exhaustive enumeration
//! oracle, and a classifier that predicts extremal graphs from coefficient
//! sign conditions.

pub mod canon;
pub mod census;
pub mod classifier;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod index;
pub mod oracle;

pub use census::{
    CensusError, ChemicalGate, Condition, EdgeCensus, Realizability, TransformVector, VertexCounts,
};
pub use classifier::{
    classify, predicted_censuses, verify_characterization, ClassificationResult, ClassificationRule,
    FamilyDescriptor, SpecialCase, Verdict, VerificationReport,
};
pub use families::{
    construct_f1_explicit, family_censuses, is_member, realize_census, FamilyCensusSet, FamilyId,
};
pub use graph::{ChemicalCheck, Graph, GraphError, Violation};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use index::{builtin, named, IndexDefinition, IndexError, Sign, VProfile, VTerm, DEFAULT_EPSILON};
pub use oracle::{enumerate_connected_maxdeg3, Direction, ExtremalReport, Oracle, OracleError};
