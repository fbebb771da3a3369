use thiserror::Error;

use super::monoid::{check_monoid, MonoidError};
use super::order::{validate_order, Lattice, OrderError};
use super::residual::{derive_residuals, ResidualError};
use super::table::{Relation, Table};

/// A finite residuated lattice stored as full operation tables.
///
/// Values are only produced by constructors that check shapes; the algebraic
/// laws are checked by [`build`](FinRL::build) and reported by
/// [`check_residuated_lattice`](super::report::check_residuated_lattice).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinRL {
    leq: Relation,
    meet: Table,
    join: Table,
    mul: Table,
    ldiv: Table,
    rdiv: Table,
    unit: usize,
    bot: Option<usize>,
    top: Option<usize>,
    names: Option<Vec<String>>,
}

/// Raw table data for [`FinRL::from_parts`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parts {
    pub leq: Relation,
    pub meet: Table,
    pub join: Table,
    pub mul: Table,
    pub ldiv: Table,
    pub rdiv: Table,
    pub unit: usize,
    pub bot: Option<usize>,
    pub top: Option<usize>,
    pub names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("empty carrier")]
    Empty,
    #[error("{table} has size {found}, expected {expected}")]
    SizeMismatch {
        table: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{table} entry ({x}, {y}) = {value} lies outside the carrier")]
    OutOfRange {
        table: &'static str,
        x: usize,
        y: usize,
        value: usize,
    },
    #[error("constant {name} = {value} lies outside the carrier")]
    ConstantOutOfRange { name: &'static str, value: usize },
    #[error("expected {expected} names, found {found}")]
    NameCount { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Residual(#[from] ResidualError),
    #[error("size mismatch: order on {order} elements, product on {mul}")]
    SizeMismatch { order: usize, mul: usize },
}

impl FinRL {
    /// Assembles an algebra from tables, checking only sizes and index ranges.
    pub fn from_parts(p: Parts) -> Result<Self, ShapeError> {
        let n = p.leq.size();
        if n == 0 {
            return Err(ShapeError::Empty);
        }
        let tables = [
            ("meet", &p.meet),
            ("join", &p.join),
            ("mul", &p.mul),
            ("ldiv", &p.ldiv),
            ("rdiv", &p.rdiv),
        ];
        for (table, t) in tables {
            if t.size() != n {
                return Err(ShapeError::SizeMismatch {
                    table,
                    expected: n,
                    found: t.size(),
                });
            }
            if let Some((x, y, value)) = t.out_of_range() {
                return Err(ShapeError::OutOfRange { table, x, y, value });
            }
        }
        let consts = [("unit", Some(p.unit)), ("bot", p.bot), ("top", p.top)];
        for (name, v) in consts {
            if let Some(value) = v.filter(|&v| v >= n) {
                return Err(ShapeError::ConstantOutOfRange { name, value });
            }
        }
        if let Some(names) = &p.names {
            if names.len() != n {
                return Err(ShapeError::NameCount {
                    expected: n,
                    found: names.len(),
                });
            }
        }
        Ok(FinRL {
            leq: p.leq,
            meet: p.meet,
            join: p.join,
            mul: p.mul,
            ldiv: p.ldiv,
            rdiv: p.rdiv,
            unit: p.unit,
            bot: p.bot,
            top: p.top,
            names: p.names,
        })
    }

    /// Validates order and monoid, then derives both residual tables.
    pub fn build(leq: &Relation, mul: &Table, unit: usize) -> Result<Self, BuildError> {
        let lat = validate_order(leq)?;
        if mul.size() != leq.size() {
            return Err(BuildError::SizeMismatch {
                order: leq.size(),
                mul: mul.size(),
            });
        }
        check_monoid(mul, unit)?;
        let (ldiv, rdiv) = derive_residuals(&lat, mul)?;
        Ok(Self::assemble(lat, mul.clone(), ldiv, rdiv, unit))
    }

    /// Like [`build`](Self::build) but with division tables supplied by the caller.
    pub fn with_divisions(
        lat: Lattice,
        mul: Table,
        ldiv: Table,
        rdiv: Table,
        unit: usize,
    ) -> Result<Self, ShapeError> {
        Self::from_parts(Parts {
            leq: lat.leq,
            meet: lat.meet,
            join: lat.join,
            mul,
            ldiv,
            rdiv,
            unit,
            bot: lat.bot,
            top: lat.top,
            names: None,
        })
    }

    fn assemble(lat: Lattice, mul: Table, ldiv: Table, rdiv: Table, unit: usize) -> Self {
        FinRL {
            leq: lat.leq,
            meet: lat.meet,
            join: lat.join,
            mul,
            ldiv,
            rdiv,
            unit,
            bot: lat.bot,
            top: lat.top,
            names: None,
        }
    }

    pub fn to_parts(&self) -> Parts {
        Parts {
            leq: self.leq.clone(),
            meet: self.meet.clone(),
            join: self.join.clone(),
            mul: self.mul.clone(),
            ldiv: self.ldiv.clone(),
            rdiv: self.rdiv.clone(),
            unit: self.unit,
            bot: self.bot,
            top: self.top,
            names: self.names.clone(),
        }
    }

    pub fn size(&self) -> usize {
        self.leq.size()
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq.holds(x, y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq.holds(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq.holds(x, y) || self.leq.holds(y, x)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet.get(x, y)
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join.get(x, y)
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul.get(x, y)
    }

    /// `x\z`
    #[inline]
    pub fn ldiv(&self, x: usize, z: usize) -> usize {
        self.ldiv.get(x, z)
    }

    /// `z/x`
    #[inline]
    pub fn rdiv(&self, z: usize, x: usize) -> usize {
        self.rdiv.get(z, x)
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn bot(&self) -> Option<usize> {
        self.bot
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn is_bounded(&self) -> bool {
        self.bot.is_some() && self.top.is_some()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, x: usize) -> String {
        match &self.names {
            Some(ns) => ns[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.size(), "one name per element");
        self.names = Some(names);
        self
    }

    pub fn without_names(mut self) -> Self {
        self.names = None;
        self
    }

    pub fn leq_relation(&self) -> &Relation {
        &self.leq
    }

    pub fn meet_table(&self) -> &Table {
        &self.meet
    }

    pub fn join_table(&self) -> &Table {
        &self.join
    }

    pub fn mul_table(&self) -> &Table {
        &self.mul
    }

    pub fn ldiv_table(&self) -> &Table {
        &self.ldiv
    }

    pub fn rdiv_table(&self) -> &Table {
        &self.rdiv
    }

    pub fn lattice(&self) -> Lattice {
        Lattice {
            leq: self.leq.clone(),
            meet: self.meet.clone(),
            join: self.join.clone(),
            bot: self.bot,
            top: self.top,
        }
    }

    /// Elements other than the bounds.
    pub fn middle(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&x| Some(x) != self.bot && Some(x) != self.top)
            .collect()
    }

    pub fn is_chain(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| (0..n).all(|y| self.comparable(x, y)))
    }

    pub fn is_commutative(&self) -> bool {
        super::monoid::is_commutative(&self.mul)
    }

    pub fn is_integral(&self) -> bool {
        self.top == Some(self.unit)
    }

    /// `x^k`, with `x^0 = 1`.
    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(self.unit, |acc, _| self.mul(acc, x))
    }

    /// Relabels elements: `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> FinRL {
        let n = self.size();
        let names = self.names.as_ref().map(|ns| {
            let mut out = vec![String::new(); n];
            for x in 0..n {
                out[perm[x]] = ns[x].clone();
            }
            out
        });
        // rdiv[z][x] relabels like any other binary table
        FinRL {
            leq: self.leq.relabel(perm),
            meet: self.meet.relabel(perm),
            join: self.join.relabel(perm),
            mul: self.mul.relabel(perm),
            ldiv: self.ldiv.relabel(perm),
            rdiv: self.rdiv.relabel(perm),
            unit: perm[self.unit],
            bot: self.bot.map(|b| perm[b]),
            top: self.top.map(|t| perm[t]),
            names,
        }
    }

    /// Moves `bot` to index 0 and `top` to `n-1`, keeping the others in order.
    pub fn normalized(&self) -> FinRL {
        let n = self.size();
        let mut order: Vec<usize> = Vec::with_capacity(n);
        order.extend(self.bot);
        order.extend(self.middle());
        order.extend(self.top.filter(|&t| Some(t) != self.bot));
        let mut perm = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        self.permuted(&perm)
    }

    /// Restriction to a subset closed under every operation (and containing the constants).
    pub fn subalgebra(&self, subset: &[usize]) -> Option<FinRL> {
        let mut inside = vec![false; self.size()];
        for &s in subset {
            inside[s] = true;
        }
        let consts = [Some(self.unit), self.bot, self.top];
        if consts.iter().flatten().any(|&c| !inside[c]) {
            return None;
        }
        let elems: Vec<usize> = (0..self.size()).filter(|&x| inside[x]).collect();
        let tables = [&self.meet, &self.join, &self.mul, &self.ldiv, &self.rdiv];
        for t in tables {
            for &x in &elems {
                for &y in &elems {
                    if !inside[t.get(x, y)] {
                        return None;
                    }
                }
            }
        }
        let mut pos = vec![usize::MAX; self.size()];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = i;
        }
        let m = elems.len();
        let sub = |t: &Table| Table::from_fn(m, |i, j| pos[t.get(elems[i], elems[j])]);
        Some(FinRL {
            leq: Relation::from_fn(m, |i, j| self.leq(elems[i], elems[j])),
            meet: sub(&self.meet),
            join: sub(&self.join),
            mul: sub(&self.mul),
            ldiv: sub(&self.ldiv),
            rdiv: sub(&self.rdiv),
            unit: pos[self.unit],
            bot: self.bot.map(|b| pos[b]),
            top: self.top.map(|t| pos[t]),
            names: self
                .names
                .as_ref()
                .map(|ns| elems.iter().map(|&x| ns[x].clone()).collect()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Relation {
        Relation::from_fn(n, |x, y| x <= y)
    }

    #[test]
    fn boolean_two_builds() {
        let alg = FinRL::build(&chain(2), &Table::from_fn(2, |x, y| x.min(y)), 1).unwrap();
        assert!(alg.is_integral());
        assert_eq!(alg.ldiv(1, 0), 0);
        assert_eq!(alg.rdiv(0, 1), 0);
    }

    #[test]
    fn normalization_moves_bounds() {
        // top at 0, bot at 2
        let leq = Relation::from_fn(3, |x, y| x >= y);
        let alg = FinRL::build(&leq, &Table::from_fn(3, |x, y| x.max(y)), 0).unwrap();
        let norm = alg.normalized();
        assert_eq!((norm.bot(), norm.top()), (Some(0), Some(2)));
        assert!(norm.leq(0, 1) && norm.leq(1, 2));
        assert_eq!(norm.unit(), 2);
    }

    #[test]
    fn from_parts_rejects_bad_shapes() {
        let alg = FinRL::build(&chain(2), &Table::from_fn(2, |x, y| x.min(y)), 1).unwrap();
        let mut p = alg.to_parts();
        p.unit = 5;
        assert_eq!(
            FinRL::from_parts(p).unwrap_err(),
            ShapeError::ConstantOutOfRange {
                name: "unit",
                value: 5
            }
        );
        let mut p = alg.to_parts();
        p.mul = Table::from_fn(3, |_, _| 0);
        assert!(matches!(
            FinRL::from_parts(p),
            Err(ShapeError::SizeMismatch { table: "mul", .. })
        ));
    }

    #[test]
    fn subalgebra_of_chain() {
        let alg = FinRL::build(&chain(3), &Table::from_fn(3, |x, y| x.min(y)), 2).unwrap();
        let sub = alg.subalgebra(&[0, 2]).unwrap();
        assert_eq!(sub.size(), 2);
        assert!(alg.subalgebra(&[1, 2]).is_none());
    }
}
