//! Table-based finite algebras: order and monoid validation, residuals,
//! law checking, terms, isomorphism and induced partial algebras.

pub mod algebra;
pub mod iso;
pub mod monoid;
pub mod order;
pub mod partial;
pub mod report;
pub mod residual;
pub mod table;
pub mod term;

pub use algebra::{BuildError, FinRL, Parts, ShapeError};
pub use iso::{dedup_isomorphic, find_isomorphism, is_isomorphic};
pub use monoid::{check_monoid, MonoidError};
pub use order::{validate_order, Lattice, OrderError};
pub use partial::{induced_partial, Op, PartialAlgebra};
pub use report::{check_residuated_lattice, LawResult, Report};
pub use residual::{derive_residuals, ResidualError, Side};
pub use table::{Relation, Table};
pub use term::{
    biimplication, discriminator_term, eval_term, left_conjugate, r_term, right_conjugate, var,
    Assignment, Term, TermError,
};
