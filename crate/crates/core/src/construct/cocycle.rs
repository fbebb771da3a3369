use thiserror::Error;

use crate::finalg::{
    check_monoid, check_residuated_lattice, derive_residuals, monoid::inverse, validate_order,
    FinRL, Parts, Relation, Report, Table,
};

/// Data for the extension `R_{φ,f}` of a residuated chain `A` by a
/// cancellative monoid `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleData {
    pub k: Table,
    pub k_unit: usize,
    pub a: FinRL,
    /// `phi[k][x] = φ_k(x)`.
    pub phi: Vec<Vec<usize>>,
    /// `f[k1][k2] = f(k1, k2)`.
    pub f: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CocycleError {
    #[error("cocycle data invalid: {0}")]
    CocycleInvalid(String),
    #[error("K is not cancellative at ({x}, {y}, {z})")]
    NotCancellative { x: usize, y: usize, z: usize },
    #[error("closed-form {table} differs from the derived residual at ({x}, {y})")]
    DivisionMismatch {
        table: &'static str,
        x: usize,
        y: usize,
    },
}

impl CocycleData {
    /// Trivial `φ` and `f` over the given chain and monoid.
    pub fn trivial(a: FinRL, k: Table, k_unit: usize) -> Self {
        let nk = k.size();
        let na = a.size();
        let one = a.unit();
        CocycleData {
            phi: vec![(0..na).collect(); nk],
            f: vec![vec![one; nk]; nk],
            k,
            k_unit,
            a,
        }
    }

    pub fn is_trivial(&self) -> bool {
        let one = self.a.unit();
        self.phi
            .iter()
            .all(|p| p.iter().enumerate().all(|(x, &v)| x == v))
            && self.f.iter().flatten().all(|&v| v == one)
    }

    pub fn k_size(&self) -> usize {
        self.k.size()
    }

    fn inv(&self, x: usize) -> Option<usize> {
        inverse(self.a.mul_table(), self.a.unit(), x)
    }
}

/// `Z_n` as a table.
pub fn cyclic_group(n: usize) -> Table {
    Table::from_fn(n, |x, y| (x + y) % n)
}

pub fn cancellation_violation(k: &Table) -> Option<(usize, usize, usize)> {
    let n = k.size();
    for x in 0..n {
        for y in 0..n {
            for z in y + 1..n {
                if k.get(x, y) == k.get(x, z) || k.get(y, x) == k.get(z, x) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// If `g` is an order-preserving, residuated monoid endomorphism of the chain,
/// returns its residual `g*(b) = max{a : g(a) ≤ b}`.
pub fn check_res_end(a: &FinRL, g: &[usize]) -> Option<Vec<usize>> {
    let n = a.size();
    if g.len() != n || g.iter().any(|&v| v >= n) {
        return None;
    }
    let monotone = (0..n).all(|x| (0..n).all(|y| !a.leq(x, y) || a.leq(g[x], g[y])));
    let endo = g[a.unit()] == a.unit()
        && (0..n).all(|x| (0..n).all(|y| g[a.mul(x, y)] == a.mul(g[x], g[y])));
    if !monotone || !endo {
        return None;
    }
    (0..n)
        .map(|b| {
            let sols: Vec<usize> = (0..n).filter(|&x| a.leq(g[x], b)).collect();
            sols.iter()
                .copied()
                .find(|&m| sols.iter().all(|&x| a.leq(x, m)))
        })
        .collect()
}

/// Checks the hypotheses of the extension and the four cocycle conditions.
pub fn check_cocycle(d: &CocycleData) -> Report {
    let mut rep = Report::new();
    let nk = d.k.size();
    let na = d.a.size();
    let one = d.a.unit();
    let shapes_ok = d.phi.len() == nk
        && d.phi
            .iter()
            .all(|p| p.len() == na && p.iter().all(|&v| v < na))
        && d.f.len() == nk
        && d.f
            .iter()
            .all(|r| r.len() == nk && r.iter().all(|&v| v < na));
    rep.record("shapes", (!shapes_ok).then(Vec::new));
    if !shapes_ok {
        return rep;
    }
    let k_ok = check_monoid(&d.k, d.k_unit).is_ok();
    rep.record("k-monoid", (!k_ok).then(Vec::new));
    if !k_ok {
        return rep;
    }
    rep.record(
        "k-cancellative",
        cancellation_violation(&d.k).map(|(x, y, z)| vec![x, y, z]),
    );
    let a_ok = check_residuated_lattice(&d.a).passed();
    rep.record(
        "a-residuated-chain",
        (!(a_ok && d.a.is_chain())).then(Vec::new),
    );
    rep.record(
        "phi-res-end",
        (0..nk)
            .find(|&k| check_res_end(&d.a, &d.phi[k]).is_none())
            .map(|k| vec![k]),
    );
    let pairs = || (0..nk).flat_map(move |x| (0..nk).map(move |y| (x, y)));
    rep.record(
        "f-invertible",
        pairs()
            .find(|&(x, y)| d.inv(d.f[x][y]).is_none())
            .map(|(x, y)| vec![x, y]),
    );
    rep.record(
        "f-normalized",
        (0..nk)
            .find(|&k| d.f[k][d.k_unit] != one || d.f[d.k_unit][k] != one)
            .map(|k| vec![k]),
    );
    rep.record(
        "phi-unit",
        (0..na).find(|&x| d.phi[d.k_unit][x] != x).map(|x| vec![x]),
    );
    // φ_{k1k2}(a) = f(k1,k2) φ_{k1}φ_{k2}(a) f(k1,k2)^{-1}
    let twisted = pairs().find_map(|(k1, k2)| {
        let fv = d.f[k1][k2];
        let finv = d.inv(fv)?;
        (0..na)
            .find(|&x| {
                let rhs = d.a.mul(d.a.mul(fv, d.phi[k1][d.phi[k2][x]]), finv);
                d.phi[d.k.get(k1, k2)][x] != rhs
            })
            .map(|x| vec![k1, k2, x])
    });
    rep.record("phi-twisted", twisted);
    // f(k1, k2k3) φ_{k1}(f(k2,k3)) = f(k1k2, k3) f(k1,k2)
    let mut cocycle = None;
    'outer: for k1 in 0..nk {
        for k2 in 0..nk {
            for k3 in 0..nk {
                let lhs = d.a.mul(d.f[k1][d.k.get(k2, k3)], d.phi[k1][d.f[k2][k3]]);
                let rhs = d.a.mul(d.f[d.k.get(k1, k2)][k3], d.f[k1][k2]);
                if lhs != rhs {
                    cocycle = Some(vec![k1, k2, k3]);
                    break 'outer;
                }
            }
        }
    }
    rep.record("cocycle", cocycle);
    rep
}

/// Index of `(a, k)` in the extension; ⊥ is 0 and ⊤ is last.
pub fn pair_index(na: usize, a: usize, k: usize) -> usize {
    1 + k * na + a
}

/// Builds `R_{φ,f}` with the closed-form divisions.
pub fn make_cocycle_extension(d: &CocycleData) -> Result<FinRL, CocycleError> {
    let rep = check_cocycle(d);
    if let Some(fail) = rep.first_failure() {
        if fail.law == "k-cancellative" {
            let w = fail.witness.clone().unwrap_or_default();
            return Err(CocycleError::NotCancellative {
                x: w[0],
                y: w[1],
                z: w[2],
            });
        }
        return Err(CocycleError::CocycleInvalid(format!(
            "{} fails at {:?}",
            fail.law, fail.witness
        )));
    }
    let a = &d.a;
    let (na, nk) = (a.size(), d.k.size());
    let n = na * nk + 2;
    let top = n - 1;
    let split = |x: usize| ((x - 1) % na, (x - 1) / na);
    let at = |p: usize, k: usize| pair_index(na, p, k);
    let inv = |x: usize| d.inv(x).expect("checked invertible");
    let star: Vec<Vec<usize>> = (0..nk)
        .map(|k| check_res_end(a, &d.phi[k]).expect("checked residuated"))
        .collect();
    let leq = Relation::from_fn(n, |x, y| {
        if x == 0 || y == top || x == y {
            return true;
        }
        if y == 0 || x == top {
            return false;
        }
        let ((a1, k1), (a2, k2)) = (split(x), split(y));
        k1 == k2 && a.leq(a1, a2)
    });
    let lat = validate_order(&leq).expect("unilinear order is a lattice");
    let mul = Table::from_fn(n, |x, y| {
        if x == 0 || y == 0 {
            return 0;
        }
        if x == top || y == top {
            return top;
        }
        let ((a1, k1), (a2, k2)) = (split(x), split(y));
        let v = a.mul(a.mul(a1, d.phi[k1][a2]), inv(d.f[k1][k2]));
        at(v, d.k.get(k1, k2))
    });
    let ldiv = Table::from_fn(n, |x, y| {
        if x == 0 || y == top {
            return top;
        }
        if x == top || y == 0 {
            return 0;
        }
        let ((a1, k1), (a2, k2)) = (split(x), split(y));
        match (0..nk).find(|&k| d.k.get(k1, k) == k2) {
            Some(k) => at(star[k1][a.ldiv(a1, a.mul(a2, d.f[k1][k]))], k),
            None => 0,
        }
    });
    // rdiv[y][x] = y/x
    let rdiv = Table::from_fn(n, |y, x| {
        if x == 0 || y == top {
            return top;
        }
        if x == top || y == 0 {
            return 0;
        }
        let ((a1, k1), (a2, k2)) = (split(x), split(y));
        match (0..nk).find(|&k| d.k.get(k, k1) == k2) {
            Some(k) => at(a.rdiv(a.mul(a2, d.f[k][k1]), d.phi[k][a1]), k),
            None => 0,
        }
    });
    let (dl, dr) =
        derive_residuals(&lat, &mul).map_err(|e| CocycleError::CocycleInvalid(e.to_string()))?;
    for (table, closed, derived) in [("ldiv", &ldiv, &dl), ("rdiv", &rdiv, &dr)] {
        for x in 0..n {
            for y in 0..n {
                if closed.get(x, y) != derived.get(x, y) {
                    return Err(CocycleError::DivisionMismatch { table, x, y });
                }
            }
        }
    }
    let names = (0..n)
        .map(|x| match x {
            0 => "bot".to_string(),
            _ if x == top => "top".to_string(),
            _ => {
                let (p, k) = split(x);
                format!("({},{})", a.name(p), k)
            }
        })
        .collect();
    FinRL::from_parts(Parts {
        leq: lat.leq,
        meet: lat.meet,
        join: lat.join,
        mul,
        ldiv,
        rdiv,
        unit: at(a.unit(), d.k_unit),
        bot: Some(0),
        top: Some(top),
        names: Some(names),
    })
    .map_err(|e| CocycleError::CocycleInvalid(e.to_string()))
}

/// `A ×ᵇ K` assembled from the product order and monoid, with residuals derived
/// by scanning rather than by formula.
pub fn bounded_product(a: &FinRL, k: &Table, k_unit: usize) -> Option<FinRL> {
    let (na, nk) = (a.size(), k.size());
    let n = na * nk + 2;
    let top = n - 1;
    let split = |x: usize| ((x - 1) % na, (x - 1) / na);
    let leq = Relation::from_fn(n, |x, y| {
        x == 0 || y == top || x == y || {
            x != top && y != 0 && {
                let ((a1, k1), (a2, k2)) = (split(x), split(y));
                k1 == k2 && a.leq(a1, a2)
            }
        }
    });
    let mul = Table::from_fn(n, |x, y| {
        if x == 0 || y == 0 {
            0
        } else if x == top || y == top {
            top
        } else {
            let ((a1, k1), (a2, k2)) = (split(x), split(y));
            pair_index(na, a.mul(a1, a2), k.get(k1, k2))
        }
    });
    FinRL::build(&leq, &mul, pair_index(na, a.unit(), k_unit)).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{make_rab, ZKind, ZeroMonoid};
    use crate::finalg::is_isomorphic;

    fn boolean2() -> FinRL {
        make_rab(&ZeroMonoid::trivial(), ZKind::Trivial).unwrap()
    }

    #[test]
    fn trivial_data_passes_and_builds() {
        let d = CocycleData::trivial(boolean2(), cyclic_group(2), 0);
        assert!(check_cocycle(&d).passed());
        let r = make_cocycle_extension(&d).unwrap();
        assert_eq!(r.size(), 6);
        assert!(check_residuated_lattice(&r).passed());
        let bp = bounded_product(&boolean2(), &cyclic_group(2), 0).unwrap();
        assert!(is_isomorphic(&r, &bp));
    }

    #[test]
    fn broken_normalization_reported() {
        let mut d = CocycleData::trivial(boolean2(), cyclic_group(2), 0);
        d.f[1][0] = 0;
        let rep = check_cocycle(&d);
        assert_eq!(rep.get("f-normalized").unwrap().witness, Some(vec![1]));
        assert!(make_cocycle_extension(&d).is_err());
    }

    #[test]
    fn res_end_cases() {
        let a = boolean2();
        assert_eq!(check_res_end(&a, &[0, 1]), Some(vec![0, 1]));
        // constant ⊤ is a monoid endomorphism here, but nothing maps below ⊥
        assert_eq!(check_res_end(&a, &[1, 1]), None);
        assert_eq!(check_res_end(&a, &[1, 0]), None);
    }

    #[test]
    fn non_cancellative_k_rejected() {
        let k = Table::from_fn(2, |x, y| x.max(y));
        let d = CocycleData::trivial(boolean2(), k, 0);
        assert!(matches!(
            make_cocycle_extension(&d),
            Err(CocycleError::NotCancellative { .. })
        ));
    }
}
