use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::rab::ConstructError;
use crate::finalg::{derive_residuals, validate_order, FinRL, Parts, Relation, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orient {
    /// `a^i ≤ a^j` iff `j = i + ns`.
    Up,
    /// The dual order on the middle layer.
    Down,
}

impl FromStr for Orient {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "up" => Ok(Orient::Up),
            "down" => Ok(Orient::Down),
            other => Err(format!("orientation must be up or down, got {other}")),
        }
    }
}

impl fmt::Display for Orient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orient::Up => "up",
            Orient::Down => "down",
        })
    }
}

/// `[n]_r^s`: exponents past the tail wrap into the cycle.
pub fn cyclic_index(n: usize, r: usize, s: usize) -> usize {
    if n < r + s {
        n
    } else {
        r + (n - r) % s
    }
}

/// Layout: ⊥ = 0, `a^i` = `i + 1`, ⊤ = `r + s + 1`.
pub fn cyclic_mul(r: usize, s: usize) -> Table {
    let n = r + s + 2;
    let top = n - 1;
    Table::from_fn(n, |x, y| match (x, y) {
        (0, _) | (_, 0) => 0,
        _ if x == top || y == top => top,
        _ => cyclic_index(x - 1 + y - 1, r, s) + 1,
    })
}

/// The unilinear order on `M ∪ {⊥, ⊤}` for the given orientation.
pub fn cyclic_order(r: usize, s: usize, orient: Orient) -> Relation {
    let n = r + s + 2;
    let top = n - 1;
    Relation::from_fn(n, |x, y| {
        if x == 0 || y == top || x == y {
            return true;
        }
        if y == 0 || x == top {
            return false;
        }
        let (i, j) = match orient {
            Orient::Up => (x - 1, y - 1),
            Orient::Down => (y - 1, x - 1),
        };
        j >= i && (j - i) % s == 0
    })
}

/// `a^i\a^j` in the up orientation, as exponent (`None` for ⊥).
fn up_div(i: usize, j: usize, r: usize, s: usize) -> Option<usize> {
    if (j < i && i <= r) || (j < r && r <= i) {
        None
    } else if i <= j && j < r {
        Some(j - i)
    } else if i < r && r <= j {
        Some(j + (r + s - 1 + i - j) / s * s - i)
    } else {
        // r ≤ i, j: the unique k in the cycle with a^i a^k = a^j
        (r..r + s).find(|&k| cyclic_index(i + k, r, s) == j)
    }
}

/// `a^i\a^j` in the down orientation, as exponent.
fn down_div(i: usize, j: usize, s: usize) -> usize {
    if i <= j {
        j - i
    } else {
        j + (i - j).div_ceil(s) * s - i
    }
}

/// The compact URL on `{1, a, …, a^{r+s−1}} ∪ {⊥, ⊤}` with closed-form divisions.
pub fn make_cyclic_url(r: usize, s: usize, orient: Orient) -> Result<FinRL, ConstructError> {
    if s == 0 || r + s < 2 {
        return Err(ConstructError::Invalid(format!(
            "cyclic monoid needs s >= 1 and r + s >= 2, got r = {r}, s = {s}"
        )));
    }
    let n = r + s + 2;
    let top = n - 1;
    let lat = validate_order(&cyclic_order(r, s, orient)).expect("unilinear order is a lattice");
    let mul = cyclic_mul(r, s);
    let div = Table::from_fn(n, |x, z| {
        if x == 0 || z == top {
            top
        } else if x == top || z == 0 {
            0
        } else {
            let (i, j) = (x - 1, z - 1);
            match orient {
                Orient::Up => up_div(i, j, r, s).map_or(0, |k| k + 1),
                Orient::Down => down_div(i, j, s) + 1,
            }
        }
    });
    // Commutative: z/x = x\z.
    let rdiv = Table::from_fn(n, |z, x| div.get(x, z));
    let (dl, dr) = derive_residuals(&lat, &mul)?;
    for (table, closed, derived) in [("ldiv", &div, &dl), ("rdiv", &rdiv, &dr)] {
        for x in 0..n {
            for y in 0..n {
                if closed.get(x, y) != derived.get(x, y) {
                    return Err(ConstructError::DivisionMismatch { table, x, y });
                }
            }
        }
    }
    let names = (0..n)
        .map(|x| match x {
            0 => "bot".to_string(),
            1 => "1".to_string(),
            2 => "a".to_string(),
            _ if x == top => "top".to_string(),
            _ => format!("a{}", x - 1),
        })
        .collect();
    FinRL::from_parts(Parts {
        leq: lat.leq,
        meet: lat.meet,
        join: lat.join,
        mul,
        ldiv: div,
        rdiv,
        unit: 1,
        bot: Some(0),
        top: Some(top),
        names: Some(names),
    })
    .map_err(|e| ConstructError::Invalid(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finalg::check_residuated_lattice;

    #[test]
    fn index_arithmetic() {
        assert_eq!(cyclic_index(1, 2, 3), 1);
        assert_eq!(cyclic_index(7, 2, 3), 4);
        assert_eq!(cyclic_index(5, 2, 3), 2);
    }

    #[test]
    fn up_two_two_divisions() {
        let alg = make_cyclic_url(2, 2, Orient::Up).unwrap();
        // a^i has index i + 1
        assert_eq!(alg.ldiv(2, 1), 0);
        assert_eq!(alg.ldiv(2, 4), 3);
        assert!(check_residuated_lattice(&alg).passed());
    }

    #[test]
    fn down_two_two_divisions() {
        let alg = make_cyclic_url(2, 2, Orient::Down).unwrap();
        assert_eq!(alg.ldiv(2, 1), 2);
        assert!(check_residuated_lattice(&alg).passed());
    }

    #[test]
    fn degenerate_sizes_rejected() {
        assert!(make_cyclic_url(1, 0, Orient::Up).is_err());
        assert!(make_cyclic_url(0, 1, Orient::Up).is_err());
        assert!(make_cyclic_url(1, 1, Orient::Down).is_ok());
    }
}
