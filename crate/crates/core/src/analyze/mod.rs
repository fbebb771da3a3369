//! Decompositions and decision procedures on finite algebras.

use thiserror::Error;

pub mod conjugates;
pub mod discriminator;
pub mod enumerate;
pub mod flags;
pub mod identities;
pub mod quotient;
pub mod uz;

pub use conjugates::{
    check_conjugate_equations, conjugate_values, conjugate_violation, scheme_equations,
    ConjugateWitness, Scheme,
};
pub use discriminator::{discriminator_violation, eval_discriminator, is_discriminator};
pub use enumerate::{
    compact_cyclic_orders, enumerate_mx, enumerate_mx_jobs, enumerate_prefix, merge_classes,
    mx_canonical, rab_family, search_prefixes, top_cancellative_monoids, SearchPrefix,
};
pub use flags::{height, is_compact_url, is_unilinear, url_flags, width, URLFlags};
pub use identities::{
    check_knotted, check_weak_commutativity, knotted_violation, validate_partition,
    weak_commutativity_violation,
};
pub use quotient::{comparability_quotient, reconstruct_cocycle, Quotient, Reconstruction};
pub use uz::{compute_uz, decompose_mx, round_trip, ABDecomposition, UzSplit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyzeError {
    #[error("algebra is not bounded")]
    NotBounded,
    #[error("lattice is not of the form M_X")]
    NotMxShaped,
    #[error("classification clause violated: {0}")]
    ClassificationViolation(String),
    #[error("algebra is not a compact unilinear residuated lattice")]
    NotCompact,
    #[error("reconstruction hypotheses fail: {0}")]
    HypothesesFail(String),
    #[error("bad partition {0}")]
    BadPartition(String),
    #[error("knotted identity needs m != n, got both {0}")]
    TrivialKnot(usize),
    #[error("found {found} algebras, more than the cap of {cap}")]
    CapExceeded { cap: usize, found: usize },
}
