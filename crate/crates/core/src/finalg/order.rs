use thiserror::Error;

use super::table::{Relation, Table};

/// The lattice reduct of a finite algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub leq: Relation,
    pub meet: Table,
    pub join: Table,
    pub bot: Option<usize>,
    pub top: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosetLaw {
    Reflexivity,
    Antisymmetry,
    Transitivity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MissingBound {
    Infimum,
    Supremum,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("empty carrier")]
    Empty,
    #[error("not a partial order: {law:?} fails at {witness:?}")]
    NotAPoset { law: PosetLaw, witness: Vec<usize> },
    #[error("not a lattice: pair ({x}, {y}) has no {missing:?}")]
    NotALattice {
        x: usize,
        y: usize,
        missing: MissingBound,
    },
}

pub fn poset_violation(leq: &Relation) -> Option<(PosetLaw, Vec<usize>)> {
    let n = leq.size();
    if let Some(x) = (0..n).find(|&x| !leq.holds(x, x)) {
        return Some((PosetLaw::Reflexivity, vec![x]));
    }
    for x in 0..n {
        for y in 0..n {
            if x != y && leq.holds(x, y) && leq.holds(y, x) {
                return Some((PosetLaw::Antisymmetry, vec![x, y]));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if !leq.holds(x, y) {
                continue;
            }
            for z in 0..n {
                if leq.holds(y, z) && !leq.holds(x, z) {
                    return Some((PosetLaw::Transitivity, vec![x, y, z]));
                }
            }
        }
    }
    None
}

/// Greatest lower bound of `x` and `y` under `leq`, if one exists.
fn infimum(leq: &Relation, x: usize, y: usize) -> Option<usize> {
    let n = leq.size();
    let lower: Vec<usize> = (0..n)
        .filter(|&z| leq.holds(z, x) && leq.holds(z, y))
        .collect();
    lower
        .iter()
        .copied()
        .find(|&m| lower.iter().all(|&z| leq.holds(z, m)))
}

fn supremum(leq: &Relation, x: usize, y: usize) -> Option<usize> {
    let n = leq.size();
    let upper: Vec<usize> = (0..n)
        .filter(|&z| leq.holds(x, z) && leq.holds(y, z))
        .collect();
    upper
        .iter()
        .copied()
        .find(|&m| upper.iter().all(|&z| leq.holds(m, z)))
}

/// Checks that `leq` is a lattice order and returns its meet and join tables.
pub fn validate_order(leq: &Relation) -> Result<Lattice, OrderError> {
    let n = leq.size();
    if n == 0 {
        return Err(OrderError::Empty);
    }
    if let Some((law, witness)) = poset_violation(leq) {
        return Err(OrderError::NotAPoset { law, witness });
    }
    let mut meet = Table::from_fn(n, |_, _| 0);
    let mut join = Table::from_fn(n, |_, _| 0);
    for x in 0..n {
        for y in 0..n {
            let inf = infimum(leq, x, y).ok_or(OrderError::NotALattice {
                x,
                y,
                missing: MissingBound::Infimum,
            })?;
            let sup = supremum(leq, x, y).ok_or(OrderError::NotALattice {
                x,
                y,
                missing: MissingBound::Supremum,
            })?;
            meet.set(x, y, inf);
            join.set(x, y, sup);
        }
    }
    let bot = (0..n).find(|&b| (0..n).all(|x| leq.holds(b, x)));
    let top = (0..n).find(|&t| (0..n).all(|x| leq.holds(x, t)));
    Ok(Lattice {
        leq: leq.clone(),
        meet,
        join,
        bot,
        top,
    })
}
