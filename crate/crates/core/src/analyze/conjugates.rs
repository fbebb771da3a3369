use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::finalg::{var, Assignment, FinRL, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Scheme {
    /// Semiunilinearity.
    Srl,
    /// `Srl` plus the height-3 equation.
    M,
    /// The five-term basis for algebras generated by the `M_G`.
    Mg,
}

impl FromStr for Scheme {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "srl" => Ok(Scheme::Srl),
            "m" => Ok(Scheme::M),
            "mg" => Ok(Scheme::Mg),
            other => Err(format!("unknown scheme {other}, expected srl, m or mg")),
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Srl => "srl",
            Scheme::M => "m",
            Scheme::Mg => "mg",
        })
    }
}

/// `1 = γ₁(p₁) ∨ ⋯ ∨ γₖ(pₖ)`, stored as the list of `pᵢ`.
pub type ConjugateEquation = Vec<Term>;

fn join_all(ts: &[&str]) -> Term {
    ts.iter()
        .skip(1)
        .fold(var(ts[0]), |acc, v| acc.join(var(v)))
}

pub fn scheme_equations(scheme: Scheme) -> Vec<ConjugateEquation> {
    let (x, y) = (|| var("x"), || var("y"));
    let srl = vec![
        vec![x().ldiv(y()), y().ldiv(x()), x().meet(y()).ldiv(var("z"))],
        vec![x().ldiv(y()), y().ldiv(x()), var("w").ldiv(x().join(y()))],
    ];
    match scheme {
        Scheme::Srl => srl,
        Scheme::M => {
            let mut eqs = srl;
            eqs.push(vec![
                join_all(&["x1", "x2"]).ldiv(var("x1")),
                join_all(&["x1", "x2", "x3"]).ldiv(join_all(&["x1", "x2"])),
                join_all(&["x1", "x2", "x3", "x4"]).ldiv(join_all(&["x1", "x2", "x3"])),
            ]);
            eqs
        }
        Scheme::Mg => {
            let (u, v) = (|| var("u"), || var("v"));
            vec![vec![
                u().ldiv(v()),
                v().ldiv(u()),
                x().ldiv(u().meet(v())),
                u().join(v()).ldiv(x()),
                x().mul(x().ldiv(Term::One)),
            ]]
        }
    }
}

/// For each element `v`, the values `γ(v)` over iterated conjugates with at
/// most `depth` layers; depth 0 is `v ∧ 1` alone.
pub fn conjugate_values(r: &FinRL, depth: usize) -> Vec<BTreeSet<usize>> {
    let n = r.size();
    let one = r.unit();
    let lambda = |c: usize, w: usize| r.meet(r.ldiv(c, r.mul(w, c)), one);
    let rho = |c: usize, w: usize| r.meet(r.rdiv(r.mul(c, w), c), one);
    (0..n)
        .map(|v| {
            let mut all: BTreeSet<usize> = [r.meet(v, one)].into();
            let mut layer: BTreeSet<usize> = [v].into();
            for _ in 0..depth {
                let next: BTreeSet<usize> = layer
                    .iter()
                    .flat_map(|&w| (0..n).flat_map(move |c| [lambda(c, w), rho(c, w)]))
                    .collect();
                all.extend(&next);
                layer = next;
            }
            all
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugateWitness {
    /// Index into the scheme's equation list.
    pub equation: usize,
    pub assignment: Vec<(String, usize)>,
    /// The chosen `γᵢ(pᵢ)` whose join misses 1.
    pub values: Vec<usize>,
}

/// Picks one value per set so the join stays strictly below 1.
fn failing_choice(r: &FinRL, sets: &[&BTreeSet<usize>]) -> Option<Vec<usize>> {
    fn go(r: &FinRL, sets: &[&BTreeSet<usize>], acc: usize, chosen: &mut Vec<usize>) -> bool {
        if r.leq(r.unit(), acc) {
            return false;
        }
        let Some((first, rest)) = sets.split_first() else {
            return true;
        };
        for &v in first.iter() {
            chosen.push(v);
            if go(r, rest, r.join(acc, v), chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = vec![];
    let bot = r.bot().expect("bounded");
    go(r, sets, bot, &mut chosen).then_some(chosen)
}

/// First failing instance of the scheme, up to conjugate depth `depth`.
/// Requires a bounded algebra so the empty join exists.
pub fn conjugate_violation(r: &FinRL, scheme: Scheme, depth: usize) -> Option<ConjugateWitness> {
    let conj = conjugate_values(r, depth);
    let n = r.size();
    for (idx, eq) in scheme_equations(scheme).into_iter().enumerate() {
        let names: Vec<String> = eq
            .iter()
            .flat_map(|t| t.vars())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut vals = vec![0; names.len()];
        loop {
            let asg: Assignment = names.iter().cloned().zip(vals.iter().copied()).collect();
            let sets: Vec<&BTreeSet<usize>> = eq
                .iter()
                .map(|t| &conj[t.eval(r, &asg).expect("all variables bound")])
                .collect();
            if let Some(values) = failing_choice(r, &sets) {
                return Some(ConjugateWitness {
                    equation: idx,
                    assignment: asg.into_iter().collect(),
                    values,
                });
            }
            let Some(i) = (0..vals.len()).rev().find(|&i| vals[i] + 1 < n) else {
                break;
            };
            vals[i] += 1;
            vals[i + 1..].iter_mut().for_each(|v| *v = 0);
        }
    }
    None
}

/// True when every instance up to conjugate depth `depth` holds.
pub fn check_conjugate_equations(r: &FinRL, scheme: Scheme, depth: usize) -> bool {
    conjugate_violation(r, scheme, depth).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::make_mg;
    use crate::finalg::{validate_order, Relation, Table};

    #[test]
    fn mz2_is_semiunilinear() {
        let r = make_mg(&[2]).unwrap();
        assert!(check_conjugate_equations(&r, Scheme::Srl, 1));
        assert!(check_conjugate_equations(&r, Scheme::M, 1));
        assert!(check_conjugate_equations(&r, Scheme::Mg, 1));
    }

    #[test]
    fn chain_at_depth_zero() {
        let r = FinRL::build(
            &Relation::from_fn(4, |x, y| x <= y),
            &Table::from_fn(4, |x, y| x.min(y)),
            3,
        )
        .unwrap();
        assert!(check_conjugate_equations(&r, Scheme::Srl, 0));
    }

    #[test]
    fn non_unilinear_heyting_fails() {
        let above = [
            vec![0, 1, 2, 3, 4],
            vec![1, 3, 4],
            vec![2, 3, 4],
            vec![3, 4],
            vec![4],
        ];
        let leq = Relation::from_fn(5, |x, y| above[x].contains(&y));
        let lat = validate_order(&leq).unwrap();
        let r = FinRL::build(&leq, &lat.meet, 4).unwrap();
        let w = conjugate_violation(&r, Scheme::Srl, 0).unwrap();
        assert_eq!(w.equation, 1);
        assert!(conjugate_violation(&r, Scheme::Srl, 2).is_some());
    }

    #[test]
    fn depth_zero_is_meet_with_one() {
        let r = make_mg(&[2]).unwrap();
        let c = conjugate_values(&r, 0);
        assert_eq!(c[3], [1].into());
        assert_eq!(c[2], [0].into());
    }
}
