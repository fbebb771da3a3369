use thiserror::Error;

use super::mx::make_mx_lattice;
use super::zkind::ZKind;
use crate::finalg::{
    check_monoid, derive_residuals, BuildError, FinRL, MonoidError, Parts, Relation, ResidualError,
    Table,
};

/// A finite monoid with a distinguished absorbing element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroMonoid {
    pub table: Table,
    pub unit: usize,
    pub zero: usize,
    pub names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Residual(#[from] ResidualError),
    #[error("element {0} is not absorbing")]
    ZeroNotAbsorbing(usize),
    #[error(
        "monoid is not cancellative away from its zero: {x}*{y} = {x}*{z} or {y}*{x} = {z}*{x}"
    )]
    NotTopCancellative { x: usize, y: usize, z: usize },
    #[error("invariant factor {0} is below 2")]
    InvalidFactor(u64),
    #[error("closed-form {table} differs from the derived residual at ({x}, {y})")]
    DivisionMismatch {
        table: &'static str,
        x: usize,
        y: usize,
    },
    #[error("{0}")]
    Invalid(String),
}

impl ZeroMonoid {
    pub fn size(&self) -> usize {
        self.table.size()
    }

    /// The one-element monoid `{⊤}`.
    pub fn trivial() -> Self {
        ZeroMonoid {
            table: Table::from_fn(1, |_, _| 0),
            unit: 0,
            zero: 0,
            names: Some(vec!["top".into()]),
        }
    }

    /// A finite group given by its table with a fresh zero adjoined last.
    pub fn group_with_zero(group: &Table, unit: usize, names: Option<Vec<String>>) -> Self {
        let n = group.size();
        let table = Table::from_fn(
            n + 1,
            |x, y| if x == n || y == n { n } else { group.get(x, y) },
        );
        let names = names.map(|mut ns| {
            ns.push("top".into());
            ns
        });
        ZeroMonoid {
            table,
            unit,
            zero: n,
            names,
        }
    }

    /// `Z_{n₁} × ⋯ × Z_{n_k}` with a zero adjoined.
    pub fn abelian_with_zero(factors: &[u64]) -> Result<Self, ConstructError> {
        if let Some(&f) = factors.iter().find(|&&f| f < 2) {
            return Err(ConstructError::InvalidFactor(f));
        }
        let (table, names) = abelian_group(factors);
        Ok(Self::group_with_zero(&table, 0, Some(names)))
    }

    pub fn name(&self, x: usize) -> String {
        self.names
            .as_ref()
            .map_or_else(|| format!("u{x}"), |ns| ns[x].clone())
    }
}

/// Table of `Z_{n₁} × ⋯ × Z_{n_k}` in mixed radix, identity at 0, with element names.
pub fn abelian_group(factors: &[u64]) -> (Table, Vec<String>) {
    let radix: Vec<usize> = factors.iter().map(|&f| f as usize).collect();
    let order: usize = radix.iter().product();
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; radix.len()];
        for i in (0..radix.len()).rev() {
            d[i] = x % radix[i];
            x /= radix[i];
        }
        d
    };
    let encode = |d: &[usize]| d.iter().zip(&radix).fold(0, |acc, (&v, &r)| acc * r + v);
    let table = Table::from_fn(order, |x, y| {
        let (dx, dy) = (digits(x), digits(y));
        let sum: Vec<usize> = (0..radix.len())
            .map(|i| (dx[i] + dy[i]) % radix[i])
            .collect();
        encode(&sum)
    });
    let names = (0..order)
        .map(|x| {
            if x == 0 {
                return "1".to_string();
            }
            let d = digits(x);
            if radix.len() == 1 {
                if d[0] == 1 {
                    "a".to_string()
                } else {
                    format!("a{}", d[0])
                }
            } else {
                let parts: Vec<String> = d.iter().map(|v| v.to_string()).collect();
                format!("g{}", parts.join("_"))
            }
        })
        .collect();
    (table, names)
}

/// Whether `xy = xz ≠ 0` implies `y = z` and `yx = zx ≠ 0` implies `y = z`.
pub fn check_zero_cancellative(mon: &Table, zero: usize) -> Result<bool, ConstructError> {
    Ok(zero_cancellation_violation(mon, zero)?.is_none())
}

pub fn zero_cancellation_violation(
    mon: &Table,
    zero: usize,
) -> Result<Option<(usize, usize, usize)>, ConstructError> {
    let n = mon.size();
    if zero >= n || (0..n).any(|x| mon.get(zero, x) != zero || mon.get(x, zero) != zero) {
        return Err(ConstructError::ZeroNotAbsorbing(zero));
    }
    for x in 0..n {
        for y in 0..n {
            for z in y + 1..n {
                let left = mon.get(x, y) == mon.get(x, z) && mon.get(x, y) != zero;
                let right = mon.get(y, x) == mon.get(z, x) && mon.get(y, x) != zero;
                if left || right {
                    return Ok(Some((x, y, z)));
                }
            }
        }
    }
    Ok(None)
}

/// Where each part of `R_{A,B}` lives in the combined carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RabLayout {
    /// Image of each element of `A` (the zero goes to ⊤).
    pub a_map: Vec<usize>,
    /// Image of each local element of `Z ∪ {⊥}` (0 goes to ⊥).
    pub b_map: Vec<usize>,
    pub size: usize,
}

impl RabLayout {
    fn new(a: &ZeroMonoid, kind: ZKind) -> Self {
        let na = a.size();
        let size = na + kind.nonzero() + 1;
        let top = size - 1;
        let mut a_map = vec![0; na];
        let mut next = 1;
        for (x, slot) in a_map.iter_mut().enumerate() {
            if x == a.zero {
                *slot = top;
            } else {
                *slot = next;
                next += 1;
            }
        }
        let b_map = std::iter::once(0)
            .chain(next..next + kind.nonzero())
            .collect();
        RabLayout { a_map, b_map, size }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Part {
    A(usize),
    B(usize),
}

/// Builds `R_{A,B}` with divisions from the closed forms, then confirms them
/// against the brute-force residuals.
pub fn make_rab(a: &ZeroMonoid, kind: ZKind) -> Result<FinRL, ConstructError> {
    let (alg, _) = make_rab_with_layout(a, kind)?;
    Ok(alg)
}

pub fn make_rab_with_layout(
    a: &ZeroMonoid,
    kind: ZKind,
) -> Result<(FinRL, RabLayout), ConstructError> {
    check_monoid(&a.table, a.unit)?;
    if let Some((x, y, z)) = zero_cancellation_violation(&a.table, a.zero)? {
        return Err(ConstructError::NotTopCancellative { x, y, z });
    }
    let layout = RabLayout::new(a, kind);
    let n = layout.size;
    let (bot, top) = (0, n - 1);
    let mut part = vec![Part::B(0); n];
    for (x, &g) in layout.a_map.iter().enumerate() {
        part[g] = Part::A(x);
    }
    for (b, &g) in layout.b_map.iter().enumerate() {
        part[g] = Part::B(b);
    }
    let lat = make_mx_lattice(n - 2);
    let mul = Table::from_fn(n, |x, y| match (part[x], part[y]) {
        (Part::A(p), Part::A(q)) => layout.a_map[a.table.get(p, q)],
        (Part::A(_), Part::B(_)) => y,
        (Part::B(_), Part::A(_)) => x,
        (Part::B(p), Part::B(q)) => layout.b_map[kind.mul(p, q)],
    });
    // x\z; the division is commutative in shape, with `left` selecting the side in A.
    let div = |x: usize, z: usize, left: bool| -> usize {
        if x == bot || z == top {
            return top;
        }
        match (part[x], part[z]) {
            (Part::A(p), Part::A(q)) => {
                let solve = (0..a.size()).find(|&s| {
                    let prod = if left {
                        a.table.get(p, s)
                    } else {
                        a.table.get(s, p)
                    };
                    prod == q
                });
                solve.map_or(bot, |s| layout.a_map[s])
            }
            // a\b = 1\b = b, and ⊤\b = b since ⊤ acts as the identity on B
            (Part::A(_), Part::B(q)) => layout.b_map[q],
            (Part::B(p), Part::B(q)) => kind.ldiv_nonzero(p, q).map_or(top, |v| layout.b_map[v]),
            // b\a = b\1 = b\⊥
            (Part::B(p), Part::A(_)) => kind.ldiv_nonzero(p, 0).map_or(top, |v| layout.b_map[v]),
        }
    };
    let ldiv = Table::from_fn(n, |x, z| div(x, z, true));
    let rdiv = Table::from_fn(n, |z, x| div(x, z, false));

    let (dl, dr) = derive_residuals(&lat, &mul)?;
    for (table, closed, derived) in [("ldiv", &ldiv, &dl), ("rdiv", &rdiv, &dr)] {
        for x in 0..n {
            for y in 0..n {
                if closed.get(x, y) != derived.get(x, y) {
                    return Err(ConstructError::DivisionMismatch { table, x, y });
                }
            }
        }
    }
    let mut names = vec![String::new(); n];
    for (x, &g) in layout.a_map.iter().enumerate() {
        names[g] = if x == a.zero { "top".into() } else { a.name(x) };
    }
    names[bot] = "bot".into();
    for (b, name) in kind.names().into_iter().enumerate() {
        names[layout.b_map[b + 1]] = name.into();
    }
    let alg = FinRL::from_parts(Parts {
        leq: lat.leq,
        meet: lat.meet,
        join: lat.join,
        mul,
        ldiv,
        rdiv,
        unit: layout.a_map[a.unit],
        bot: Some(bot),
        top: Some(top),
        names: Some(names),
    })
    .map_err(|e| ConstructError::Invalid(e.to_string()))?;
    Ok((alg, layout))
}

/// `M_G` for `G = Z_{n₁} × ⋯ × Z_{n_k}`; the empty list gives the trivial group.
pub fn make_mg(factors: &[u64]) -> Result<FinRL, ConstructError> {
    make_rab(&ZeroMonoid::abelian_with_zero(factors)?, ZKind::Trivial)
}

/// Componentwise product, with index `x·|B| + y` for the pair `(x, y)`.
pub fn direct_product(a: &FinRL, b: &FinRL) -> FinRL {
    let nb = b.size();
    let n = a.size() * nb;
    let pair = |x: usize| (x / nb, x % nb);
    let lift = |f: &dyn Fn(usize, usize, usize, usize) -> (usize, usize)| {
        Table::from_fn(n, |x, y| {
            let ((x1, x2), (y1, y2)) = (pair(x), pair(y));
            let (p, q) = f(x1, x2, y1, y2);
            p * nb + q
        })
    };
    let names = match (a.names(), b.names()) {
        (Some(na), Some(nb_)) => Some(
            (0..n)
                .map(|x| format!("({},{})", na[x / nb], nb_[x % nb]))
                .collect(),
        ),
        _ => None,
    };
    FinRL::from_parts(Parts {
        leq: Relation::from_fn(n, |x, y| {
            let ((x1, x2), (y1, y2)) = (pair(x), pair(y));
            a.leq(x1, y1) && b.leq(x2, y2)
        }),
        meet: lift(&|x1, x2, y1, y2| (a.meet(x1, y1), b.meet(x2, y2))),
        join: lift(&|x1, x2, y1, y2| (a.join(x1, y1), b.join(x2, y2))),
        mul: lift(&|x1, x2, y1, y2| (a.mul(x1, y1), b.mul(x2, y2))),
        ldiv: lift(&|x1, x2, y1, y2| (a.ldiv(x1, y1), b.ldiv(x2, y2))),
        rdiv: lift(&|x1, x2, y1, y2| (a.rdiv(x1, y1), b.rdiv(x2, y2))),
        unit: a.unit() * nb + b.unit(),
        bot: a.bot().zip(b.bot()).map(|(p, q)| p * nb + q),
        top: a.top().zip(b.top()).map(|(p, q)| p * nb + q),
        names,
    })
    .expect("product tables are well shaped")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finalg::check_residuated_lattice;

    fn z2_top() -> ZeroMonoid {
        ZeroMonoid::abelian_with_zero(&[2]).unwrap()
    }

    #[test]
    fn zero_cancellative_cases() {
        assert!(check_zero_cancellative(&z2_top().table, 2).unwrap());
        // {1, a, ⊤} with a² = a
        let idem = Table::from_fn(3, |x, y| match (x, y) {
            (2, _) | (_, 2) => 2,
            (0, y) => y,
            (x, 0) => x,
            _ => 1,
        });
        assert!(!check_zero_cancellative(&idem, 2).unwrap());
        assert!(check_zero_cancellative(&Table::from_fn(1, |_, _| 0), 0).unwrap());
        assert_eq!(
            check_zero_cancellative(&idem, 1),
            Err(ConstructError::ZeroNotAbsorbing(1))
        );
    }

    #[test]
    fn trivial_a_with_two_idempotents_is_boolean_four() {
        let alg = make_rab(&ZeroMonoid::trivial(), ZKind::TwoIdempotents).unwrap();
        assert_eq!(alg.size(), 4);
        assert!(alg.is_integral());
        assert!((0..4).all(|x| (0..4).all(|y| alg.mul(x, y) == alg.meet(x, y))));
    }

    #[test]
    fn mz2_group_division() {
        let alg = make_rab(&z2_top(), ZKind::Trivial).unwrap();
        // bot, 1, a, top
        assert_eq!(alg.ldiv(2, 2), 1);
        assert_eq!(alg.ldiv(2, 1), 2);
        assert!(check_residuated_lattice(&alg).passed());
    }

    #[test]
    fn every_kind_over_z2() {
        for kind in ZKind::ALL {
            let alg = make_rab(&z2_top(), kind).unwrap();
            assert_eq!(alg.size(), 4 + kind.nonzero());
            assert!(check_residuated_lattice(&alg).passed(), "{kind:?}");
        }
    }

    #[test]
    fn group_elements_act_like_unit_on_b() {
        let alg = make_rab(&z2_top(), ZKind::Nilpotent).unwrap();
        // bot=0, 1=1, a=2, b=3, top=4
        assert_eq!(alg.mul(2, 3), 3);
        assert_eq!(alg.mul(3, 3), 0);
        for op in [
            FinRL::ldiv,
            FinRL::rdiv,
            FinRL::meet,
            FinRL::join,
            FinRL::mul,
        ] {
            assert_eq!(op(&alg, 2, 3), op(&alg, 1, 3));
            assert_eq!(op(&alg, 3, 2), op(&alg, 3, 1));
        }
    }

    #[test]
    fn mg_sizes_and_bad_factor() {
        assert_eq!(make_mg(&[]).unwrap().size(), 3);
        assert_eq!(make_mg(&[2, 2]).unwrap().size(), 6);
        assert_eq!(make_mg(&[1]), Err(ConstructError::InvalidFactor(1)));
    }

    #[test]
    fn heyting_square_is_residuated() {
        let h3 = make_rab(&ZeroMonoid::trivial(), ZKind::Idempotent).unwrap();
        let sq = direct_product(&h3, &h3);
        assert_eq!(sq.size(), 9);
        assert!(check_residuated_lattice(&sq).passed());
    }
}
