//! Signatures of finitely generated abelian groups as elements of
//! `P = 2 × I^⊕ω`, and the Z-closed downsets describing subvarieties.

use thiserror::Error;

pub mod downset;
pub mod pf;
pub mod primes;
pub mod sig;

pub use downset::{
    downset_contains, downset_intersect, downset_union, partitions_below, Component, DownsetDesc,
    ZViolation,
};
pub use pf::{pf_is_z_closed, sig_to_algebra, PFDownset};
pub use primes::{factorize, is_prime, nth_prime, prime_index};
pub use sig::{partition_leq, sig_of_invariant_factors, GroupSig};

pub fn exp_of(a: &GroupSig) -> u32 {
    a.exp()
}

pub fn primes_of(a: &GroupSig) -> std::collections::BTreeSet<usize> {
    a.primes()
}

pub fn sig_leq(a: &GroupSig, b: &GroupSig) -> bool {
    a.leq(b)
}

pub fn sig_join(a: &GroupSig, b: &GroupSig) -> GroupSig {
    a.join(b)
}

pub fn sig_meet(a: &GroupSig, b: &GroupSig) -> GroupSig {
    a.meet(b)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    #[error("invariant factor {0} is not at least 2")]
    InvalidFactor(u64),
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("component D{0} is not contained in D0")]
    ContainmentViolation(usize),
    #[error("signature has positive rank; the group is infinite")]
    InfiniteGroup,
    #[error("kind index {0} is not in 0..=3")]
    InvalidKind(u8),
    #[error("construction failed: {0}")]
    Construct(String),
}
