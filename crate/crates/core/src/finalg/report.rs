use std::fmt;

use serde::Serialize;

use super::algebra::FinRL;
use super::monoid::{associativity_violation, identity_violation};
use super::order::poset_violation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub law: String,
    pub passed: bool,
    /// First failing instance in lexicographic order.
    pub witness: Option<Vec<usize>>,
}

/// Ordered list of law outcomes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub results: Vec<LawResult>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, law: impl Into<String>, witness: Option<Vec<usize>>) {
        self.results.push(LawResult {
            law: law.into(),
            passed: witness.is_none(),
            witness,
        });
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn first_failure(&self) -> Option<&LawResult> {
        self.results.iter().find(|r| !r.passed)
    }

    pub fn get(&self, law: &str) -> Option<&LawResult> {
        self.results.iter().find(|r| r.law == law)
    }

    pub fn extend(&mut self, other: Report) {
        self.results.extend(other.results);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match &r.witness {
                None => writeln!(f, "{} pass", r.law)?,
                Some(w) => {
                    let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                    writeln!(f, "{} FAIL {}", r.law, w.join(" "))?
                }
            }
        }
        Ok(())
    }
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn meet_violation(a: &FinRL) -> Option<Vec<usize>> {
    let n = a.size();
    pairs(n)
        .find(|&(x, y)| {
            let m = a.meet(x, y);
            !(a.leq(m, x) && a.leq(m, y))
                || (0..n).any(|z| a.leq(z, x) && a.leq(z, y) && !a.leq(z, m))
        })
        .map(|(x, y)| vec![x, y])
}

fn join_violation(a: &FinRL) -> Option<Vec<usize>> {
    let n = a.size();
    pairs(n)
        .find(|&(x, y)| {
            let j = a.join(x, y);
            !(a.leq(x, j) && a.leq(y, j))
                || (0..n).any(|z| a.leq(x, z) && a.leq(y, z) && !a.leq(j, z))
        })
        .map(|(x, y)| vec![x, y])
}

/// Checks every law of a finite residuated lattice, in a fixed order.
pub fn check_residuated_lattice(a: &FinRL) -> Report {
    let n = a.size();
    let mut rep = Report::new();
    rep.record(
        "partial-order",
        poset_violation(a.leq_relation()).map(|(_, w)| w),
    );
    rep.record("meet", meet_violation(a));
    rep.record("join", join_violation(a));
    rep.record(
        "associativity",
        associativity_violation(a.mul_table()).map(|(x, y, z)| vec![x, y, z]),
    );
    rep.record(
        "identity",
        identity_violation(a.mul_table(), a.unit()).map(|x| vec![x]),
    );
    rep.record(
        "monotonicity",
        triples(n)
            .find(|&(x, y, z)| {
                a.leq(x, y) && !(a.leq(a.mul(z, x), a.mul(z, y)) && a.leq(a.mul(x, z), a.mul(y, z)))
            })
            .map(|(x, y, z)| vec![x, y, z]),
    );
    rep.record(
        "residuation-left",
        triples(n)
            .find(|&(x, y, z)| a.leq(a.mul(x, y), z) != a.leq(y, a.ldiv(x, z)))
            .map(|(x, y, z)| vec![x, y, z]),
    );
    rep.record(
        "residuation-right",
        triples(n)
            .find(|&(x, y, z)| a.leq(a.mul(x, y), z) != a.leq(x, a.rdiv(z, y)))
            .map(|(x, y, z)| vec![x, y, z]),
    );
    rep.record(
        "bounds",
        [a.bot().map(|b| (b, true)), a.top().map(|t| (t, false))]
            .into_iter()
            .flatten()
            .find_map(|(c, least)| {
                (0..n)
                    .find(|&x| if least { !a.leq(c, x) } else { !a.leq(x, c) })
                    .map(|x| vec![c, x])
            }),
    );
    rep.record(
        "bottom-absorbing",
        a.bot().and_then(|b| {
            (0..n)
                .find(|&x| a.mul(b, x) != b || a.mul(x, b) != b)
                .map(|x| vec![x])
        }),
    );
    rep.record(
        "bound-divisions",
        match (a.bot(), a.top()) {
            (Some(b), Some(t)) => (0..n)
                .find(|&x| {
                    a.ldiv(b, x) != t || a.ldiv(x, t) != t || a.rdiv(x, b) != t || a.rdiv(t, x) != t
                })
                .map(|x| vec![x]),
            _ => None,
        },
    );
    rep
}
