use thiserror::Error;

use super::order::Lattice;
use super::table::Table;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResidualError {
    /// `x <= y` but multiplying by `z` on `side` breaks the order.
    #[error("multiplication not order-preserving: {x} <= {y} but not under {side:?} multiplication by {z}")]
    NotOrderPreserving {
        x: usize,
        y: usize,
        z: usize,
        side: Side,
    },
    #[error("no maximum solution for {side:?} division at ({x}, {z})")]
    NoMaximum { x: usize, z: usize, side: Side },
}

pub fn monotonicity_violation(lat: &Lattice, mul: &Table) -> Option<(usize, usize, usize, Side)> {
    let n = mul.size();
    for x in 0..n {
        for y in 0..n {
            if !lat.leq.holds(x, y) {
                continue;
            }
            for z in 0..n {
                if !lat.leq.holds(mul.get(z, x), mul.get(z, y)) {
                    return Some((x, y, z, Side::Left));
                }
                if !lat.leq.holds(mul.get(x, z), mul.get(y, z)) {
                    return Some((x, y, z, Side::Right));
                }
            }
        }
    }
    None
}

/// Maximum of the candidates under the lattice order, if the set has one.
fn maximum(lat: &Lattice, candidates: impl Iterator<Item = usize>) -> Option<usize> {
    // In a lattice, a finite set has a maximum iff its join is a member.
    let mut members = Vec::new();
    let mut acc: Option<usize> = None;
    for c in candidates {
        acc = Some(acc.map_or(c, |a| lat.join.get(a, c)));
        members.push(c);
    }
    acc.filter(|j| members.contains(j))
}

/// Computes `x\z = max{y : xy <= z}` and `z/x = max{y : yx <= z}` by scanning.
///
/// The right residual table is indexed as `rdiv[z][x] = z/x`.
pub fn derive_residuals(lat: &Lattice, mul: &Table) -> Result<(Table, Table), ResidualError> {
    if let Some((x, y, z, side)) = monotonicity_violation(lat, mul) {
        return Err(ResidualError::NotOrderPreserving { x, y, z, side });
    }
    let n = mul.size();
    let mut ldiv = Table::from_fn(n, |_, _| 0);
    let mut rdiv = Table::from_fn(n, |_, _| 0);
    for x in 0..n {
        for z in 0..n {
            let l = maximum(lat, (0..n).filter(|&y| lat.leq.holds(mul.get(x, y), z))).ok_or(
                ResidualError::NoMaximum {
                    x,
                    z,
                    side: Side::Left,
                },
            )?;
            let r = maximum(lat, (0..n).filter(|&y| lat.leq.holds(mul.get(y, x), z))).ok_or(
                ResidualError::NoMaximum {
                    x,
                    z,
                    side: Side::Right,
                },
            )?;
            ldiv.set(x, z, l);
            rdiv.set(z, x, r);
        }
    }
    Ok((ldiv, rdiv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finalg::order::validate_order;
    use crate::finalg::table::Relation;

    #[test]
    fn boolean_two_implication() {
        let lat = validate_order(&Relation::from_fn(2, |x, y| x <= y)).unwrap();
        let mul = Table::from_fn(2, |x, y| x.min(y));
        let (ldiv, rdiv) = derive_residuals(&lat, &mul).unwrap();
        assert_eq!(ldiv.get(0, 0), 1);
        assert_eq!(ldiv.get(1, 0), 0);
        assert_eq!(rdiv.get(0, 1), 0);
    }

    #[test]
    fn diamond_boolean_algebra_is_residuated() {
        // 0 < 1,2 < 3
        let lat = validate_order(&Relation::from_fn(4, |x, y| x == y || x == 0 || y == 3)).unwrap();
        let (ldiv, _) = derive_residuals(&lat, &lat.meet).unwrap();
        assert_eq!(ldiv.get(1, 0), 2);
        assert_eq!(ldiv.get(2, 0), 1);
    }

    #[test]
    fn order_reversing_product_rejected() {
        let lat = validate_order(&Relation::from_fn(2, |x, y| x <= y)).unwrap();
        // negation-like table: 1*y = 1 - y
        let mul = Table::from_fn(2, |x, y| if x == 1 { 1 - y } else { 0 });
        assert!(matches!(
            derive_residuals(&lat, &mul),
            Err(ResidualError::NotOrderPreserving { .. })
        ));
    }

    #[test]
    fn non_join_preserving_product_has_no_maximum() {
        // Diamond with ⊤·a and ⊤·b small but ⊤·⊤ = ⊤: monotone, not residuated.
        let lat = validate_order(&Relation::from_fn(4, |x, y| x == y || x == 0 || y == 3)).unwrap();
        let mul = Table::from_fn(4, |x, y| if x == 3 && y == 3 { 3 } else { 0 });
        assert!(matches!(
            derive_residuals(&lat, &mul),
            Err(ResidualError::NoMaximum { .. })
        ));
    }
}
