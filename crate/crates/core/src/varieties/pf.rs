use serde::Serialize;

use super::downset::DownsetDesc;
use super::sig::GroupSig;
use super::VarietyError;
use crate::construct::{make_rab, ZKind, ZeroMonoid};
use crate::finalg::FinRL;

/// A downset of `P × F`, where `F` has `0 < 1, 2, 3` with `1, 2, 3` pairwise incomparable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PFDownset {
    d: [DownsetDesc; 4],
}

impl PFDownset {
    pub fn new(d: [DownsetDesc; 4]) -> Result<Self, VarietyError> {
        for (i, di) in d.iter().enumerate().skip(1) {
            if !di.is_subset(&d[0]) {
                return Err(VarietyError::ContainmentViolation(i));
            }
        }
        Ok(PFDownset { d })
    }

    pub fn component(&self, i: usize) -> &DownsetDesc {
        &self.d[i]
    }
}

pub fn pf_is_z_closed(d: &PFDownset) -> bool {
    d.d.iter().all(DownsetDesc::is_z_closed)
}

/// `M_G + i`: `make_rab` over the finite group with signature `a`, with zero-semigroup kind `i`.
pub fn sig_to_algebra(a: &GroupSig, i: u8) -> Result<FinRL, VarietyError> {
    if a.rank_flag() == 1 {
        return Err(VarietyError::InfiniteGroup);
    }
    let kind = ZKind::from_tag(i).ok_or(VarietyError::InvalidKind(i))?;
    let monoid = ZeroMonoid::abelian_with_zero(&a.prime_power_factors())
        .map_err(|e| VarietyError::Construct(e.to_string()))?;
    make_rab(&monoid, kind).map_err(|e| VarietyError::Construct(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::make_mg;
    use crate::finalg::{check_residuated_lattice, is_isomorphic};

    fn d(s: &str) -> DownsetDesc {
        s.parse().unwrap()
    }

    #[test]
    fn containment_checked() {
        let p = d("(principal (0; 1))");
        assert!(PFDownset::new([p.clone(), p.clone(), p.clone(), p.clone()]).is_ok());
        let big = d("(principal (0; 2))");
        assert_eq!(
            PFDownset::new([p.clone(), big, p.clone(), p]),
            Err(VarietyError::ContainmentViolation(1))
        );
    }

    #[test]
    fn closedness_is_componentwise() {
        let closed = d("(family [1] p2) (principal (1;))");
        let open = d("(family [1] p2)");
        let pf = PFDownset::new([closed.clone(), closed.clone(), closed, open]).unwrap();
        assert!(!pf_is_z_closed(&pf));
    }

    #[test]
    fn algebras() {
        let z2 = GroupSig::cyclic(1, 1);
        assert!(is_isomorphic(
            &sig_to_algebra(&z2, 0).unwrap(),
            &make_mg(&[2]).unwrap()
        ));
        let r = sig_to_algebra(&z2, 2).unwrap();
        assert_eq!(r.size(), 6);
        assert!(check_residuated_lattice(&r).passed());
        assert_eq!(
            sig_to_algebra(&GroupSig::z(), 0),
            Err(VarietyError::InfiniteGroup)
        );
    }
}
