use crate::finalg::{validate_order, Lattice, Relation};

/// The order of `M_X`: index 0 is ⊥, `1..=n` the antichain `X`, `n+1` is ⊤.
pub fn mx_order(n: usize) -> Relation {
    let top = n + 1;
    Relation::from_fn(n + 2, |x, y| x == y || x == 0 || y == top)
}

pub fn make_mx_lattice(n: usize) -> Lattice {
    validate_order(&mx_order(n)).expect("M_X is a lattice")
}

/// Whether a lattice is `M_X` shaped: bounded, with every other pair of
/// distinct elements incomparable.
pub fn is_mx_shaped(lat: &Lattice) -> bool {
    let (Some(b), Some(t)) = (lat.bot, lat.top) else {
        return false;
    };
    let n = lat.leq.size();
    (0..n).all(|x| (0..n).all(|y| x == y || x == b || y == t || !lat.leq.holds(x, y)))
}
