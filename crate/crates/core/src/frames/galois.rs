use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::frame::{galois_closure, Frame};
use super::FramesError;
use crate::finalg::{derive_residuals, FinRL, Lattice, Relation, Table};

/// `W⁺`: the `γ_N`-closed subsets of `W` with the induced operations.
#[derive(Clone, Debug)]
pub struct GaloisAlgebra {
    closed_sets: Vec<FixedBitSet>,
    algebra: FinRL,
}

impl GaloisAlgebra {
    /// Closed sets in index-lexicographic order; element `i` of the algebra is set `i`.
    pub fn closed_sets(&self) -> &[FixedBitSet] {
        &self.closed_sets
    }

    pub fn algebra(&self) -> &FinRL {
        &self.algebra
    }

    pub fn index_of(&self, s: &FixedBitSet) -> Option<usize> {
        self.closed_sets.iter().position(|c| c == s)
    }
}

fn set_name(frame: &Frame, s: &FixedBitSet) -> String {
    let a = frame.algebra();
    let parts: Vec<String> = frame
        .elements_of(s)
        .into_iter()
        .map(|x| a.name(x))
        .collect();
    format!("{{{}}}", parts.join(","))
}

pub fn build_galois_algebra(frame: &Frame) -> Result<GaloisAlgebra, FramesError> {
    let a = frame.algebra();
    let w = frame.w();
    let mut seen: HashSet<FixedBitSet> = HashSet::from([frame.full_set()]);
    let mut closed = vec![frame.full_set()];
    for g in frame.generators() {
        let fresh: Vec<FixedBitSet> = closed
            .iter()
            .map(|c| {
                let mut s = c.clone();
                s.intersect_with(g);
                s
            })
            .filter(|s| seen.insert(s.clone()))
            .collect();
        closed.extend(fresh);
    }
    closed.sort_by_key(|s| s.ones().collect::<Vec<_>>());
    let k = closed.len();
    let index = |s: &FixedBitSet| {
        closed
            .iter()
            .position(|c| c == s)
            .ok_or_else(|| FramesError::NotClosed(set_name(frame, s)))
    };
    let pos = |x: usize| frame.position(x).expect("W is a submonoid");
    let product = |x: &FixedBitSet, y: &FixedBitSet| {
        let mut s = frame.empty_set();
        for p in x.ones() {
            for q in y.ones() {
                s.insert(pos(a.mul(w[p], w[q])));
            }
        }
        s
    };
    // {z : ∀x ∈ X, xz ∈ Y} or {z : ∀x ∈ X, zx ∈ Y}
    let division = |x: &FixedBitSet, y: &FixedBitSet, left: bool| {
        let mut s = frame.empty_set();
        for z in 0..w.len() {
            let ok = x.ones().all(|p| {
                let v = if left {
                    a.mul(w[p], w[z])
                } else {
                    a.mul(w[z], w[p])
                };
                y.contains(pos(v))
            });
            s.set(z, ok);
        }
        s
    };
    let mut meet = Table::from_fn(k, |_, _| 0);
    let mut join = meet.clone();
    let mut mul = meet.clone();
    let mut ldiv = meet.clone();
    let mut rdiv = meet.clone();
    for i in 0..k {
        for j in 0..k {
            let (x, y) = (&closed[i], &closed[j]);
            let mut cap = x.clone();
            cap.intersect_with(y);
            meet.set(i, j, index(&cap)?);
            let mut cup = x.clone();
            cup.union_with(y);
            join.set(i, j, index(&galois_closure(frame, &cup))?);
            mul.set(i, j, index(&galois_closure(frame, &product(x, y)))?);
            ldiv.set(i, j, index(&division(x, y, true))?);
            // rdiv[y][x] = y/x
            rdiv.set(j, i, index(&division(x, y, false))?);
        }
    }
    let leq = Relation::from_fn(k, |i, j| closed[i].is_subset(&closed[j]));
    let unit = index(&galois_closure(frame, &frame.set_of(&[a.unit()])))?;
    let lat = Lattice {
        leq,
        meet,
        join,
        bot: Some(0),
        top: Some(index(&frame.full_set())?),
    };
    let (dl, dr) =
        derive_residuals(&lat, &mul).map_err(|e| FramesError::Residual(e.to_string()))?;
    if dl != ldiv || dr != rdiv {
        return Err(FramesError::DivisionMismatch);
    }
    let names = closed.iter().map(|s| set_name(frame, s)).collect();
    let algebra = FinRL::with_divisions(lat, mul, ldiv, rdiv, unit)
        .map_err(|e| FramesError::Residual(e.to_string()))?
        .with_names(names);
    Ok(GaloisAlgebra {
        closed_sets: closed,
        algebra,
    })
}
