//! Explicit constructions: `M_X`, the zero-semigroup kinds, `R_{A,B}` and
//! `M_G`, the cyclic-monoid URLs and the cocycle extension `R_{φ,f}`.

pub mod cocycle;
pub mod cyclic;
pub mod mx;
pub mod rab;
pub mod zkind;

pub use cocycle::{
    bounded_product, cancellation_violation, check_cocycle, check_res_end, cyclic_group,
    make_cocycle_extension, pair_index, CocycleData, CocycleError,
};
pub use cyclic::{cyclic_index, cyclic_mul, cyclic_order, make_cyclic_url, Orient};
pub use mx::{is_mx_shaped, make_mx_lattice, mx_order};
pub use rab::{
    check_zero_cancellative, direct_product, make_mg, make_rab, make_rab_with_layout,
    ConstructError, RabLayout, ZeroMonoid,
};
pub use zkind::ZKind;
