//! Finite-model workbench for Γ-AG-groupoids.
//!
//! Structures are explicit multiplication tables; every law, ideal notion
//! (crisp and intuitionistic fuzzy), and cataloged statement is decided by
//! exact exhaustive computation with concrete counterwitnesses. Grades are
//! exact rationals, so no verdict depends on rounding.
//!
//! All values are immutable after construction and every operation is a
//! pure function; concurrent evaluation over disjoint inputs needs no
//! coordination.

pub mod carrier;
pub mod crisp;
pub mod error;
pub mod fixtures;
pub mod grade;
pub mod ifs;
pub mod ifs_ideals;
pub mod theorem;

pub use carrier::{
    check_law, derive_power_gamma, eval_law_instance, intra_regular_witness, intra_regularity,
    product, validate_groupoid, witness_is_violation, Element, GammaGroupoid, GammaIndex,
    IntraRegularWitness, IntraRegularityReport, LawId, LawReport, LawWitness,
};
pub use crisp::{
    is_crisp, is_duo, is_duo_bounded, level_cut, subset_product, CrispKind, CrispSubset,
    CrispVerdict, CrispWitness, DuoVerdict, IdealSide,
};
pub use error::{Error, Result};
pub use grade::{Grade, GradeError};
pub use ifs::{
    compose, contains, derive_seed, equals, intersect, is_idempotent, random_ifs, union, Ifs,
};
pub use ifs_ideals::{
    characterize_by_composition, is_if, GradeSide, IfsKind, IfsVerdict, IfsWitness,
};
pub use theorem::{
    enumerate_groupoids, hunt, ifs_witness_summary, law_witness_summary, semilattice_check,
    verify, verify_with_facts, Conclusion, ConclusionPart, GroupoidEnumerator, GroupoidSource,
    Hypothesis, HuntConfig, HuntCounterexample, HuntReport, IfsArity, InstanceBundle,
    StructuralFacts, TheoremId, TheoremVerdict,
};
