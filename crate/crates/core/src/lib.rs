//! Finite residuated lattices, with an emphasis on unilinear ones: construction,
//! verification, decomposition, enumeration, residuated frames and the
//! signature combinatorics of their subvarieties.

pub mod analyze;
pub mod cli;
pub mod construct;
pub mod finalg;
pub mod frames;
pub mod varieties;
