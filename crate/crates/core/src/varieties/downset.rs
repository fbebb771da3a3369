//! Finitely described downsets of `P`.
//!
//! Every membership, containment and intersection question reduces to
//! finitely many comparisons:
//! - a tower above `b` at prime `n` only matters through `b ⊕ (K)` once `K`
//!   exceeds every exponent in sight, since larger `K` change nothing else;
//! - a prime family behaves identically at every prime index beyond the
//!   indices mentioned in the data, so one such index stands for all of them.
//!
//! Z-closure asks for `a ∨ Z` whenever `D` holds unboundedly large torsion
//! above `a`. Only unbounded components can supply that, so the candidates
//! per component kind are:
//! - principal: none, the component is finite;
//! - tower at `b`, prime `n`: `b ⊕ (k)` for `k` up to one past every exponent
//!   in `D`, because membership of `b ⊕ (k) ∨ Z` is constant from there on;
//! - family with base `b`: `b` itself, since the family grows only by new primes.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::primes::{nth_prime, prime_index};
use super::sig::{partition_leq, GroupSig};
use super::VarietyError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Component {
    /// `↓g`
    Principal(GroupSig),
    /// `↓{base × Z_{p_n^k} : k ≥ 0}`
    ExpTower { base: GroupSig, prime: usize },
    /// `↓{base ⊕ shape at p_m : m ≥ from}`
    PrimeFamily {
        shape: Vec<u32>,
        from: usize,
        base: GroupSig,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DownsetDesc {
    pub components: Vec<Component>,
}

/// `a` lies in the downset, but `a ∨ (1; 0; …)` does not although the
/// exponents or primes above `a` are unbounded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZViolation {
    pub a: GroupSig,
    pub missing: GroupSig,
}

fn shape_exp(s: &[u32]) -> u32 {
    s.iter().copied().max().unwrap_or(0)
}

impl Component {
    fn max_exp(&self) -> u32 {
        match self {
            Component::Principal(g) => g.exp(),
            Component::ExpTower { base, .. } => base.exp(),
            Component::PrimeFamily { shape, base, .. } => base.exp().max(shape_exp(shape)),
        }
    }

    fn max_index(&self) -> usize {
        let idx = |g: &GroupSig| g.primes().last().copied().unwrap_or(0);
        match self {
            Component::Principal(g) => idx(g),
            Component::ExpTower { base, prime } => idx(base).max(*prime),
            Component::PrimeFamily { from, base, .. } => idx(base).max(*from),
        }
    }

    pub fn contains(&self, a: &GroupSig) -> bool {
        match self {
            Component::Principal(g) => a.leq(g),
            Component::ExpTower { base, prime } => {
                let k = a.exp().max(base.exp());
                a.leq(&base.extend(*prime, &[k]))
            }
            Component::PrimeFamily { shape, from, base } => {
                let last = 1 + a
                    .primes()
                    .into_iter()
                    .chain(base.primes())
                    .chain([*from])
                    .max()
                    .unwrap_or(1);
                (*from..=last).any(|m| a.leq(&base.extend(m, shape)))
            }
        }
    }

    /// Unbounded components above some base, with that base.
    fn unbounded_base(&self) -> Option<&GroupSig> {
        match self {
            Component::Principal(_) => None,
            Component::ExpTower { base, .. } => Some(base),
            Component::PrimeFamily { shape, base, .. } => (!shape.is_empty()).then_some(base),
        }
    }
}

impl DownsetDesc {
    pub fn new(components: Vec<Component>) -> Self {
        DownsetDesc { components }
    }

    pub fn principal(g: GroupSig) -> Self {
        Self::new(vec![Component::Principal(g)])
    }

    pub fn contains(&self, a: &GroupSig) -> bool {
        self.components.iter().any(|c| c.contains(a))
    }

    fn max_exp(&self) -> u32 {
        self.components
            .iter()
            .map(Component::max_exp)
            .max()
            .unwrap_or(0)
    }

    fn max_index(&self) -> usize {
        self.components
            .iter()
            .map(Component::max_index)
            .max()
            .unwrap_or(0)
    }

    /// First `a` at which Z-closedness fails.
    pub fn z_violation(&self) -> Option<ZViolation> {
        let z = GroupSig::z();
        let big = 1 + self.max_exp();
        for c in &self.components {
            match c {
                Component::ExpTower { base, prime } => {
                    for k in 0..=big {
                        let a = base.extend(*prime, &[k]);
                        let missing = a.join(&z);
                        if !self.contains(&missing) {
                            return Some(ZViolation { a, missing });
                        }
                    }
                }
                _ => {
                    if let Some(base) = c.unbounded_base() {
                        let missing = base.join(&z);
                        if !self.contains(&missing) {
                            return Some(ZViolation {
                                a: base.clone(),
                                missing,
                            });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_z_closed(&self) -> bool {
        self.z_violation().is_none()
    }

    /// `self ⊆ other` as sets of signatures.
    pub fn is_subset(&self, other: &DownsetDesc) -> bool {
        self.components.iter().all(|c| match c {
            Component::Principal(g) => other.contains(g),
            Component::ExpTower { base, prime } => {
                let k = 1 + other.max_exp().max(base.exp());
                other.contains(&base.extend(*prime, &[k]))
            }
            Component::PrimeFamily { shape, from, base } => {
                let last = 1 + other.max_index().max(c.max_index());
                (*from..=last).all(|m| other.contains(&base.extend(m, shape)))
            }
        })
    }
}

pub fn downset_contains(d: &DownsetDesc, a: &GroupSig) -> bool {
    d.contains(a)
}

pub fn downset_union(d: &DownsetDesc, e: &DownsetDesc) -> DownsetDesc {
    DownsetDesc::new(d.components.iter().chain(&e.components).cloned().collect())
}

fn principal_meet(g: &GroupSig, c: &Component) -> Vec<Component> {
    match c {
        Component::Principal(h) => vec![Component::Principal(g.meet(h))],
        Component::ExpTower { base, prime } => {
            let k = g.exp().max(base.exp());
            vec![Component::Principal(g.meet(&base.extend(*prime, &[k])))]
        }
        Component::PrimeFamily { shape, from, base } => {
            let last = 1 + g
                .primes()
                .into_iter()
                .chain(base.primes())
                .chain([*from])
                .max()
                .unwrap_or(1);
            (*from..=last)
                .map(|m| Component::Principal(g.meet(&base.extend(m, shape))))
                .collect()
        }
    }
}

/// Case table for two components; the result is again a finite union.
fn component_meet(c: &Component, d: &Component) -> Vec<Component> {
    use Component::*;
    match (c, d) {
        (Principal(g), _) => principal_meet(g, d),
        (_, Principal(g)) => principal_meet(g, c),
        (ExpTower { base: b, prime: n }, ExpTower { base: e, prime: m }) => {
            if n == m {
                vec![ExpTower {
                    base: b.meet(e),
                    prime: *n,
                }]
            } else {
                let k = 1 + b.exp().max(e.exp());
                vec![Principal(b.extend(*n, &[k]).meet(&e.extend(*m, &[k])))]
            }
        }
        (ExpTower { base, prime }, fam @ PrimeFamily { .. })
        | (fam @ PrimeFamily { .. }, ExpTower { base, prime }) => {
            let k = 1 + fam.max_exp().max(base.exp());
            principal_meet(&base.extend(*prime, &[k]), fam)
        }
        (
            PrimeFamily {
                shape: s1,
                from: f1,
                base: b1,
            },
            PrimeFamily {
                shape: s2,
                from: f2,
                base: b2,
            },
        ) => {
            // indices from `fresh` on are untouched by either base
            let fresh = 1 + c.max_index().max(d.max_index());
            let mut out = vec![];
            for m1 in *f1..=fresh + 1 {
                for m2 in *f2..=fresh + 1 {
                    if m1 == m2 && m1 >= fresh {
                        continue;
                    }
                    out.push(Principal(b1.extend(m1, s1).meet(&b2.extend(m2, s2))));
                }
            }
            let len = s1.len().min(s2.len());
            let shape: Vec<u32> = (0..len).map(|i| s1[i].min(s2[i])).collect();
            out.push(PrimeFamily {
                shape,
                from: fresh,
                base: b1.meet(b2),
            });
            out
        }
    }
}

pub fn downset_intersect(d: &DownsetDesc, e: &DownsetDesc) -> DownsetDesc {
    DownsetDesc::new(
        d.components
            .iter()
            .flat_map(|c| e.components.iter().flat_map(move |x| component_meet(c, x)))
            .collect(),
    )
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Principal(g) => write!(f, "(principal {g})"),
            Component::ExpTower { base, prime } => {
                write!(f, "(tower {base} p{})", nth_prime(*prime))
            }
            Component::PrimeFamily { shape, from, base } => {
                let parts: Vec<String> = shape.iter().map(u32::to_string).collect();
                write!(f, "(family [{}] p{}", parts.join(","), nth_prime(*from))?;
                if *base != GroupSig::trivial() {
                    write!(f, " {base}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for DownsetDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(Component::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

fn syntax(msg: impl Into<String>) -> VarietyError {
    VarietyError::Syntax(msg.into())
}

fn parse_prime_tag(t: &str) -> Result<usize, VarietyError> {
    let p: u64 = t
        .strip_prefix('p')
        .and_then(|r| r.parse().ok())
        .ok_or_else(|| syntax(format!("expected a prime tag like p3, found {t:?}")))?;
    prime_index(p).ok_or_else(|| syntax(format!("{p} is not prime")))
}

/// Top-level parenthesized groups of `s`.
fn groups(s: &str) -> Result<Vec<&str>, VarietyError> {
    let mut out = vec![];
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => {
                if depth == 0 {
                    start = i;
                }
                depth += 1;
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| syntax("unbalanced ')'"))?;
                if depth == 0 {
                    out.push(&s[start..=i]);
                }
            }
            c if depth == 0 && !c.is_whitespace() => {
                return Err(syntax(format!("unexpected {c:?} outside a component")));
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(syntax("unbalanced '('"));
    }
    Ok(out)
}

impl FromStr for Component {
    type Err = VarietyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| syntax(s))?;
        let body = body.trim();
        let (kw, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        match kw {
            "principal" => Ok(Component::Principal(rest.parse()?)),
            "tower" => {
                let (sig, tag) = rest
                    .rsplit_once(char::is_whitespace)
                    .ok_or_else(|| syntax(s))?;
                Ok(Component::ExpTower {
                    base: sig.parse()?,
                    prime: parse_prime_tag(tag.trim())?,
                })
            }
            "family" => {
                let rest = rest
                    .strip_prefix('[')
                    .ok_or_else(|| syntax(format!("family needs a [shape]: {s}")))?;
                let (shape, rest) = rest.split_once(']').ok_or_else(|| syntax(s))?;
                let shape: Vec<u32> = shape
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse()
                            .map_err(|_| syntax(format!("bad shape entry {t:?}")))
                    })
                    .collect::<Result<_, _>>()?;
                let rest = rest.trim();
                let (tag, base) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let base = if base.trim().is_empty() {
                    GroupSig::trivial()
                } else {
                    base.parse()?
                };
                let mut shape = shape;
                shape.retain(|&x| x > 0);
                shape.sort_unstable_by(|a, b| b.cmp(a));
                Ok(Component::PrimeFamily {
                    shape,
                    from: parse_prime_tag(tag)?,
                    base,
                })
            }
            other => Err(syntax(format!("unknown component kind {other:?}"))),
        }
    }
}

impl FromStr for DownsetDesc {
    type Err = VarietyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(DownsetDesc::new(
            groups(s)?
                .into_iter()
                .map(str::parse)
                .collect::<Result<_, _>>()?,
        ))
    }
}

/// Every partition dominated by `p`; used to scan small regions.
pub fn partitions_below(p: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for (i, &cap) in p.iter().enumerate() {
        let mut next = vec![];
        for q in &out {
            if q.len() < i {
                continue;
            }
            let bound = q.last().copied().unwrap_or(u32::MAX).min(cap);
            for v in 1..=bound {
                let mut r = q.clone();
                r.push(v);
                next.push(r);
            }
        }
        out.extend(next);
    }
    out.sort();
    out.dedup();
    out.retain(|q| partition_leq(q, p));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> GroupSig {
        s.parse().unwrap()
    }

    fn d(s: &str) -> DownsetDesc {
        s.parse().unwrap()
    }

    #[test]
    fn membership() {
        assert!(d("(principal (0; 2,1))").contains(&sig("(0; 1,1)")));
        let fam = d("(family [1] p2)");
        assert!(fam.contains(&sig("(0; 0; (1))")));
        assert!(!fam.contains(&GroupSig::z()));
        assert!(!fam.contains(&sig("(0; 1; 1)")));
        let tower = d("(tower (0; 1) p3)");
        assert!(tower.contains(&sig("(0; 1; 7)")));
        assert!(!tower.contains(&sig("(0; 2; 1)")));
    }

    #[test]
    fn z_closedness() {
        assert!(d("(principal (0; 2,1)) (principal (1;))").is_z_closed());
        let fam = d("(family [1] p2)");
        assert_eq!(
            fam.z_violation(),
            Some(ZViolation {
                a: GroupSig::trivial(),
                missing: GroupSig::z()
            })
        );
        assert!(d("(family [1] p2) (principal (1;))").is_z_closed());
        // the worked example above a = (0;1;0;…)
        let t = d("(tower (0; 1) p3)");
        assert_eq!(t.z_violation().unwrap().missing, sig("(1; 1)"));
        assert!(d("(tower (0; 1) p3) (tower (1; 1) p3)").is_z_closed());
        // growing the number of factors at a fixed prime is not unbounded
        assert!(d("(principal (0; 1; 1,1,1,1))").is_z_closed());
    }

    #[test]
    fn intersections() {
        let p = downset_intersect(&d("(principal (0; 2))"), &d("(principal (0; 1,1))"));
        assert_eq!(p, d("(principal (0; 1))"));
        let q = downset_intersect(&d("(family [1] p2)"), &d("(principal (0; 1))"));
        assert!(q.contains(&sig("(0; 1)")));
        assert!(!q.contains(&sig("(0; 0; 1)")));
        assert!(q.is_subset(&d("(principal (0; 1))")) && d("(principal (0; 1))").is_subset(&q));
    }

    #[test]
    fn text_round_trip() {
        for s in [
            "(principal (0; p2:[2,1]))",
            "(tower (0; p2:[1]) p3)",
            "(family [1] p2) (principal (1;))",
            "(family [2,1] p5 (0; p2:[1]))",
        ] {
            assert_eq!(d(s).to_string(), s);
        }
    }

    #[test]
    fn partitions_below_count() {
        assert_eq!(
            partitions_below(&[2, 1]),
            vec![vec![], vec![1], vec![1, 1], vec![2], vec![2, 1]]
        );
    }
}
