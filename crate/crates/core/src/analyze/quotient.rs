use serde::Serialize;

use super::{flags::url_flags, AnalyzeError};
use crate::construct::{
    cancellation_violation, check_cocycle, make_cocycle_extension, pair_index, CocycleData,
};
use crate::finalg::{FinRL, Relation, Table};

/// The comparability partition of the middle layer and the hypothesis flags
/// for reconstruction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quotient {
    /// Maximal chains of the middle, each listed bottom to top. Class 0 holds the unit.
    pub classes: Vec<Vec<usize>>,
    /// Multiplication of classes; `k_unit` is always 0.
    pub k: Vec<Vec<usize>>,
    pub k_unit: usize,
    /// Products of comparable pairs stay comparable.
    pub congruence: bool,
    pub cancellative: bool,
    /// Every class meets the set `G = {x : xH = [x] = Hx}` and `G` is closed
    /// under multiplication; enough for the reconstruction to go through.
    pub admissible: bool,
    /// `xH = [x] = Hx` for every `x`.
    pub strictly_admissible: bool,
    /// Some choice of representatives, `1̄ = 1`, has injective left and right
    /// multiplication on `H`.
    pub k_cancellative: bool,
}

impl Quotient {
    pub fn h(&self) -> &[usize] {
        &self.classes[0]
    }

    pub fn k_table(&self) -> Table {
        Table::from_rows(&self.k).expect("square")
    }

    pub fn class_of(&self, x: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&x))
    }
}

fn require_compact(r: &FinRL) -> Result<(), AnalyzeError> {
    if r.is_bounded() && url_flags(r).compact {
        Ok(())
    } else {
        Err(AnalyzeError::NotCompact)
    }
}

fn is_class_image(r: &FinRL, x: usize, h: &[usize], class: &[usize]) -> bool {
    let mut left: Vec<usize> = h.iter().map(|&y| r.mul(x, y)).collect();
    let mut right: Vec<usize> = h.iter().map(|&y| r.mul(y, x)).collect();
    let mut want = class.to_vec();
    for v in [&mut left, &mut right, &mut want] {
        v.sort_unstable();
        v.dedup();
    }
    left == want && right == want
}

fn injective_on(r: &FinRL, x: usize, h: &[usize]) -> bool {
    let distinct = |f: &dyn Fn(usize) -> usize| {
        let mut v: Vec<usize> = h.iter().map(|&y| f(y)).collect();
        v.sort_unstable();
        v.dedup();
        v.len() == h.len()
    };
    distinct(&|y| r.mul(x, y)) && distinct(&|y| r.mul(y, x))
}

pub fn comparability_quotient(r: &FinRL) -> Result<Quotient, AnalyzeError> {
    require_compact(r)?;
    let n = r.size();
    let middle = r.middle();
    let mut classes: Vec<Vec<usize>> = vec![];
    for &x in &middle {
        match classes.iter_mut().find(|c| r.comparable(c[0], x)) {
            Some(c) => c.push(x),
            None => classes.push(vec![x]),
        }
    }
    let unit = r.unit();
    // compactness keeps 1 in the middle
    let hpos = classes
        .iter()
        .position(|c| c.contains(&unit))
        .ok_or(AnalyzeError::NotCompact)?;
    let h = classes.remove(hpos);
    classes.insert(0, h);
    for c in classes.iter_mut() {
        c.sort_by_key(|&x| (0..n).filter(|&y| r.leq(y, x)).count());
    }
    let class_of = |x: usize| classes.iter().position(|c| c.contains(&x));
    let mut congruence = true;
    let mut k = vec![vec![0; classes.len()]; classes.len()];
    for (i, ci) in classes.iter().enumerate() {
        for (j, cj) in classes.iter().enumerate() {
            let target = class_of(r.mul(ci[0], cj[0]));
            k[i][j] = target.unwrap_or(0);
            congruence &= target.is_some()
                && ci
                    .iter()
                    .all(|&x| cj.iter().all(|&y| class_of(r.mul(x, y)) == target));
        }
    }
    let kt = Table::from_rows(&k).expect("square");
    let cancellative = congruence && cancellation_violation(&kt).is_none();
    let h = &classes[0];
    let g: Vec<usize> = middle
        .iter()
        .copied()
        .filter(|&x| class_of(x).is_some_and(|c| is_class_image(r, x, h, &classes[c])))
        .collect();
    let strictly_admissible = congruence && g.len() == middle.len();
    let admissible = congruence
        && classes.iter().all(|c| c.iter().any(|x| g.contains(x)))
        && g.iter()
            .all(|&x| g.iter().all(|&y| g.contains(&r.mul(x, y))));
    let k_cancellative = classes.iter().enumerate().all(|(i, c)| {
        if i == 0 {
            injective_on(r, unit, h)
        } else {
            c.iter().any(|&x| injective_on(r, x, h))
        }
    });
    Ok(Quotient {
        classes,
        k,
        k_unit: 0,
        congruence,
        cancellative,
        admissible,
        strictly_admissible,
        k_cancellative,
    })
}

#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub data: CocycleData,
    /// `selection[k]` is the representative `k̄`.
    pub selection: Vec<usize>,
    /// `psi[x]` is the image of `x` in `make_cocycle_extension(&data)`.
    pub psi: Vec<usize>,
}

fn fail(which: &str) -> AnalyzeError {
    AnalyzeError::HypothesesFail(which.to_string())
}

/// Recovers `(H, K, φ, f)` with `R ≅ R_{φ,f}`, using the least selection of
/// representatives that works, and checks the isomorphism table by table.
pub fn reconstruct_cocycle(r: &FinRL) -> Result<Reconstruction, AnalyzeError> {
    let q = comparability_quotient(r)?;
    for (ok, which) in [
        (q.congruence, "comparability is not a congruence"),
        (q.cancellative, "quotient monoid is not cancellative"),
        (q.admissible, "comparability is not admissible"),
        (q.k_cancellative, "H is not K-cancellative"),
    ] {
        if !ok {
            return Err(fail(which));
        }
    }
    let h = q.h().to_vec();
    let nh = h.len();
    let hpos = |x: usize| h.iter().position(|&v| v == x);
    let hmul = Table::from_fn(nh, |i, j| {
        hpos(r.mul(h[i], h[j])).expect("H is a submonoid")
    });
    let hleq = Relation::from_fn(nh, |i, j| r.leq(h[i], h[j]));
    let unit = r.unit();
    let a = FinRL::build(&hleq, &hmul, hpos(unit).expect("unit in H"))
        .map_err(|_| fail("H is not a residuated chain"))?
        .with_names(h.iter().map(|&x| r.name(x)).collect());
    let kt = q.k_table();
    let nk = kt.size();
    let candidates: Vec<Vec<usize>> = q
        .classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if i == 0 {
                vec![unit]
            } else {
                let mut v: Vec<usize> = c
                    .iter()
                    .copied()
                    .filter(|&x| injective_on(r, x, &h) && is_class_image(r, x, &h, c))
                    .collect();
                v.sort_unstable();
                v
            }
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return Err(fail("no representative is both admissible and injective"));
    }
    let mut choice = vec![0; nk];
    loop {
        let sel: Vec<usize> = (0..nk).map(|k| candidates[k][choice[k]]).collect();
        if let Some(rec) = try_selection(r, &q, &a, &h, &kt, &sel) {
            return Ok(rec);
        }
        let Some(i) = (0..nk).rev().find(|&i| choice[i] + 1 < candidates[i].len()) else {
            return Err(fail(
                "no selection of representatives yields a valid cocycle",
            ));
        };
        choice[i] += 1;
        choice[i + 1..].iter_mut().for_each(|c| *c = 0);
    }
}

fn try_selection(
    r: &FinRL,
    q: &Quotient,
    a: &FinRL,
    h: &[usize],
    kt: &Table,
    sel: &[usize],
) -> Option<Reconstruction> {
    let nk = kt.size();
    let nh = h.len();
    // the unique h with h·t = x, as an index into H
    let solve_right = |t: usize, x: usize| (0..nh).find(|&i| r.mul(h[i], t) == x);
    let phi: Option<Vec<Vec<usize>>> = (0..nk)
        .map(|k| {
            (0..nh)
                .map(|i| solve_right(sel[k], r.mul(sel[k], h[i])))
                .collect()
        })
        .collect();
    let f: Option<Vec<Vec<usize>>> = (0..nk)
        .map(|k1| {
            (0..nk)
                .map(|k2| solve_right(r.mul(sel[k1], sel[k2]), sel[kt.get(k1, k2)]))
                .collect()
        })
        .collect();
    let data = CocycleData {
        k: kt.clone(),
        k_unit: q.k_unit,
        a: a.clone(),
        phi: phi?,
        f: f?,
    };
    if !check_cocycle(&data).passed() {
        return None;
    }
    let ext = make_cocycle_extension(&data).ok()?;
    let n = r.size();
    let (bot, top) = (r.bot()?, r.top()?);
    let mut psi = vec![0; n];
    for x in 0..n {
        psi[x] = if x == bot {
            0
        } else if x == top {
            ext.size() - 1
        } else {
            let k = q.class_of(x)?;
            pair_index(nh, solve_right(sel[k], x)?, k)
        };
    }
    let mut seen = vec![false; ext.size()];
    for &p in &psi {
        if std::mem::replace(&mut seen[p], true) {
            return None;
        }
    }
    let preserved = ext.size() == n
        && (0..n).all(|x| {
            (0..n).all(|y| {
                r.leq(x, y) == ext.leq(psi[x], psi[y])
                    && psi[r.mul(x, y)] == ext.mul(psi[x], psi[y])
            })
        });
    preserved.then(|| Reconstruction {
        data,
        selection: sel.to_vec(),
        psi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{bounded_product, cyclic_group, make_cyclic_url, make_mg, Orient};
    use crate::finalg::is_isomorphic;

    fn two_chain() -> FinRL {
        FinRL::build(
            &Relation::from_fn(2, |x, y| x <= y),
            &Table::from_fn(2, |x, y| x.min(y)),
            1,
        )
        .unwrap()
    }

    #[test]
    fn cyclic_two_two_up() {
        let r = make_cyclic_url(2, 2, Orient::Up).unwrap();
        let q = comparability_quotient(&r).unwrap();
        // 1 = 1, a = 2, a2 = 3, a3 = 4
        assert_eq!(q.classes, vec![vec![1, 3], vec![2, 4]]);
        assert!(is_isomorphic_k(&q.k, 2));
        assert!(q.cancellative && q.congruence);
        assert!(!q.admissible);
        assert!(reconstruct_cocycle(&r).is_err());
    }

    fn is_isomorphic_k(k: &[Vec<usize>], n: usize) -> bool {
        k.len() == n && (0..n).all(|i| (0..n).all(|j| k[i][j] == (i + j) % n))
    }

    #[test]
    fn mg_classes_are_singletons() {
        let r = make_mg(&[3]).unwrap();
        let q = comparability_quotient(&r).unwrap();
        assert!(q.classes.iter().all(|c| c.len() == 1));
        assert!(q.strictly_admissible && q.k_cancellative);
        let rec = reconstruct_cocycle(&r).unwrap();
        assert_eq!(rec.data.a.size(), 1);
        assert!(rec.data.is_trivial());
    }

    #[test]
    fn bounded_product_round_trip() {
        let r = bounded_product(&two_chain(), &cyclic_group(2), 0).unwrap();
        let q = comparability_quotient(&r).unwrap();
        assert_eq!(q.h().len(), 2);
        assert!(q.admissible && q.k_cancellative && !q.strictly_admissible);
        let rec = reconstruct_cocycle(&r).unwrap();
        assert!(rec.data.is_trivial());
        assert!(is_isomorphic(
            &make_cocycle_extension(&rec.data).unwrap(),
            &r
        ));
    }

    #[test]
    fn not_compact_rejected() {
        let above = [
            vec![0, 1, 2, 3, 4],
            vec![1, 3, 4],
            vec![2, 3, 4],
            vec![3, 4],
            vec![4],
        ];
        let leq = Relation::from_fn(5, |x, y| above[x].contains(&y));
        let lat = crate::finalg::validate_order(&leq).unwrap();
        let r = FinRL::build(&leq, &lat.meet, 4).unwrap();
        assert_eq!(comparability_quotient(&r), Err(AnalyzeError::NotCompact));
    }
}
