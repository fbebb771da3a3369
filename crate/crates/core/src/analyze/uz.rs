use serde::Serialize;

use super::AnalyzeError;
use crate::construct::{is_mx_shaped, make_rab, ZKind, ZeroMonoid};
use crate::finalg::{find_isomorphism, FinRL, Table};

/// Middle elements split by how they act on ⊤.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UzSplit {
    /// `x⊤ = ⊤`
    pub u: Vec<usize>,
    /// `x⊤ = x`
    pub z: Vec<usize>,
}

/// The monoid part, the zero-semigroup kind, and where each came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ABDecomposition {
    pub a: ZeroMonoid,
    pub kind: ZKind,
    /// `a_witness[i]` is the source element for local index `i` of `A`.
    pub a_witness: Vec<usize>,
    /// `b_witness[i]` is the source element for local index `i` of `Z ∪ {⊥}`.
    pub b_witness: Vec<usize>,
}

fn bounds(r: &FinRL) -> Result<(usize, usize), AnalyzeError> {
    match (r.bot(), r.top()) {
        (Some(b), Some(t)) if is_mx_shaped(&r.lattice()) => Ok((b, t)),
        (Some(_), Some(_)) => Err(AnalyzeError::NotMxShaped),
        _ => Err(AnalyzeError::NotBounded),
    }
}

fn violation(clause: &str) -> AnalyzeError {
    AnalyzeError::ClassificationViolation(clause.to_string())
}

/// Splits the middle of an algebra on `M_X` and verifies the deconstruction clauses.
pub fn compute_uz(r: &FinRL) -> Result<UzSplit, AnalyzeError> {
    let (bot, top) = bounds(r)?;
    let n = r.size();
    if (0..n).any(|x| r.mul(x, top) != r.mul(top, x)) {
        return Err(violation("top is not central"));
    }
    let mut split = UzSplit {
        u: vec![],
        z: vec![],
    };
    for x in r.middle() {
        match r.mul(x, top) {
            v if v == top => split.u.push(x),
            v if v == x => split.z.push(x),
            _ => return Err(violation("x*top is neither x nor top")),
        }
    }
    let mut u_top = split.u.clone();
    u_top.push(top);
    for &x in &u_top {
        for &y in &u_top {
            if !u_top.contains(&r.mul(x, y)) {
                return Err(violation("U with top is not closed"));
            }
            for &z in &u_top {
                if y != z
                    && ((r.mul(x, y) == r.mul(x, z) && r.mul(x, y) != top)
                        || (r.mul(y, x) == r.mul(z, x) && r.mul(y, x) != top))
                {
                    return Err(violation("U with top is not top-cancellative"));
                }
            }
        }
    }
    let mut z_bot = vec![bot];
    z_bot.extend(&split.z);
    let local: Option<Vec<Vec<usize>>> = z_bot
        .iter()
        .map(|&x| {
            z_bot
                .iter()
                .map(|&y| z_bot.iter().position(|&v| v == r.mul(x, y)))
                .collect()
        })
        .collect();
    let local = local.ok_or_else(|| violation("Z with bot is not closed"))?;
    if ZKind::recognize(&local).is_none() {
        return Err(violation("Z with bot matches none of the four tables"));
    }
    for &a in &split.u {
        for &b in &split.z {
            if r.mul(a, b) != b || r.mul(b, a) != b {
                return Err(violation("ab = ba = b fails"));
            }
        }
    }
    Ok(split)
}

/// Recovers `(A, kind)` with `make_rab(A, kind) ≅ R`.
pub fn decompose_mx(r: &FinRL) -> Result<ABDecomposition, AnalyzeError> {
    let split = compute_uz(r)?;
    let (bot, top) = bounds(r)?;
    let mut a_witness = split.u.clone();
    a_witness.push(top);
    let pos = |x: usize| a_witness.iter().position(|&v| v == x).expect("closed");
    let m = a_witness.len();
    let table = Table::from_fn(m, |i, j| pos(r.mul(a_witness[i], a_witness[j])));
    let unit = pos(if split.u.contains(&r.unit()) {
        r.unit()
    } else {
        top
    });
    let names = a_witness.iter().map(|&x| r.name(x)).collect();
    let mut b_witness = vec![bot];
    b_witness.extend(&split.z);
    let local: Vec<Vec<usize>> = b_witness
        .iter()
        .map(|&x| {
            b_witness
                .iter()
                .map(|&y| {
                    b_witness
                        .iter()
                        .position(|&v| v == r.mul(x, y))
                        .expect("closed")
                })
                .collect()
        })
        .collect();
    let kind = ZKind::recognize(&local).expect("checked in compute_uz");
    Ok(ABDecomposition {
        a: ZeroMonoid {
            table,
            unit,
            zero: m - 1,
            names: Some(names),
        },
        kind,
        a_witness,
        b_witness,
    })
}

/// Rebuilds from a decomposition and returns an isomorphism onto the source.
pub fn round_trip(r: &FinRL) -> Result<Vec<usize>, AnalyzeError> {
    let d = decompose_mx(r)?;
    let rebuilt = make_rab(&d.a, d.kind).map_err(|e| violation(&e.to_string()))?;
    find_isomorphism(&rebuilt, r).ok_or_else(|| violation("rebuilt algebra is not isomorphic"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::make_mg;

    #[test]
    fn mz2_is_all_units() {
        let r = make_mg(&[2]).unwrap();
        let s = compute_uz(&r).unwrap();
        assert_eq!(
            s,
            UzSplit {
                u: vec![1, 2],
                z: vec![]
            }
        );
    }

    #[test]
    fn nilpotent_kind_over_z2() {
        let r = make_rab(
            &ZeroMonoid::abelian_with_zero(&[2]).unwrap(),
            ZKind::Nilpotent,
        )
        .unwrap();
        let s = compute_uz(&r).unwrap();
        assert_eq!((s.u.len(), s.z.len()), (2, 1));
        let d = decompose_mx(&r).unwrap();
        assert_eq!(d.kind, ZKind::Nilpotent);
        assert_eq!(d.a.size(), 3);
        assert!(round_trip(&r).is_ok());
    }

    #[test]
    fn boolean_four_has_empty_u() {
        let r = make_rab(&ZeroMonoid::trivial(), ZKind::TwoIdempotents).unwrap();
        let s = compute_uz(&r).unwrap();
        assert!(s.u.is_empty());
        assert_eq!(s.z.len(), 2);
        assert_eq!(decompose_mx(&r).unwrap().kind, ZKind::TwoIdempotents);
    }

    #[test]
    fn mz3_round_trips() {
        let r = make_mg(&[3]).unwrap();
        let d = decompose_mx(&r).unwrap();
        assert_eq!((d.a.size(), d.kind), (4, ZKind::Trivial));
        assert!(round_trip(&r).is_ok());
    }
}
