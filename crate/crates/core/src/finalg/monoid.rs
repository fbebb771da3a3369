use thiserror::Error;

use super::table::Table;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("table entry ({x}, {y}) = {value} lies outside the carrier")]
    OutOfRange { x: usize, y: usize, value: usize },
    #[error("unit {0} lies outside the carrier")]
    UnitOutOfRange(usize),
    #[error("not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("unit fails to be a two-sided identity at {0}")]
    NotIdentity(usize),
}

pub fn associativity_violation(mul: &Table) -> Option<(usize, usize, usize)> {
    let n = mul.size();
    for a in 0..n {
        for b in 0..n {
            let ab = mul.get(a, b);
            for c in 0..n {
                if mul.get(a, mul.get(b, c)) != mul.get(ab, c) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

pub fn identity_violation(mul: &Table, unit: usize) -> Option<usize> {
    (0..mul.size()).find(|&x| mul.get(unit, x) != x || mul.get(x, unit) != x)
}

pub fn check_monoid(mul: &Table, unit: usize) -> Result<(), MonoidError> {
    if let Some((x, y, value)) = mul.out_of_range() {
        return Err(MonoidError::OutOfRange { x, y, value });
    }
    if unit >= mul.size() {
        return Err(MonoidError::UnitOutOfRange(unit));
    }
    if let Some((a, b, c)) = associativity_violation(mul) {
        return Err(MonoidError::NotAssociative { a, b, c });
    }
    if let Some(x) = identity_violation(mul, unit) {
        return Err(MonoidError::NotIdentity(x));
    }
    Ok(())
}

/// Two-sided inverse of `x`, if any.
pub fn inverse(mul: &Table, unit: usize, x: usize) -> Option<usize> {
    (0..mul.size()).find(|&y| mul.get(x, y) == unit && mul.get(y, x) == unit)
}

pub fn is_commutative(mul: &Table) -> bool {
    let n = mul.size();
    (0..n).all(|x| (0..n).all(|y| mul.get(x, y) == mul.get(y, x)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_is_a_monoid() {
        let z2 = Table::from_fn(2, |x, y| (x + y) % 2);
        assert_eq!(check_monoid(&z2, 0), Ok(()));
        assert_eq!(inverse(&z2, 0, 1), Some(1));
    }

    #[test]
    fn left_projection_with_fake_unit_fails() {
        // x*y = x is associative but has no two-sided identity
        let t = Table::from_fn(2, |x, _| x);
        assert_eq!(check_monoid(&t, 0), Err(MonoidError::NotIdentity(1)));
    }

    #[test]
    fn subtraction_mod_three_is_not_associative() {
        let t = Table::from_fn(3, |x, y| (3 + x - y) % 3);
        assert_eq!(
            check_monoid(&t, 0),
            Err(MonoidError::NotAssociative { a: 0, b: 0, c: 1 })
        );
    }

    #[test]
    fn boolean_kind_semigroup_with_external_unit() {
        // 0 = bot, 1 = b1, 2 = b2, 3 = adjoined unit
        let t = Table::from_fn(4, |x, y| match (x, y) {
            (3, y) => y,
            (x, 3) => x,
            (x, y) if x == y => x,
            _ => 0,
        });
        assert_eq!(check_monoid(&t, 3), Ok(()));
    }
}
