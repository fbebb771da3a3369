use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::primes::{factorize, nth_prime, prime_index};
use super::VarietyError;

/// An element of `P = 2 × I^⊕ω`: the rank flag and, per prime index, a
/// partition stored in descending order. Absent indices are the zero sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GroupSig {
    rank_flag: u8,
    torsion: BTreeMap<usize, Vec<u32>>,
}

fn canonical(mut p: Vec<u32>) -> Vec<u32> {
    p.retain(|&x| x > 0);
    p.sort_unstable_by(|a, b| b.cmp(a));
    p
}

fn pointwise(a: &[u32], b: &[u32], f: fn(u32, u32) -> u32) -> Vec<u32> {
    let len = a.len().max(b.len());
    let at = |v: &[u32], i: usize| v.get(i).copied().unwrap_or(0);
    canonical((0..len).map(|i| f(at(a, i), at(b, i))).collect())
}

/// Pointwise dominance of descending partitions padded with zeros.
pub fn partition_leq(a: &[u32], b: &[u32]) -> bool {
    a.len() <= b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

impl GroupSig {
    /// Canonicalizes: any nonzero rank becomes 1, partitions are sorted and zeros dropped.
    pub fn new(rank: u32, torsion: impl IntoIterator<Item = (usize, Vec<u32>)>) -> Self {
        let mut t = BTreeMap::new();
        for (n, p) in torsion {
            assert!(n >= 1, "prime indices start at 1");
            let entry: &mut Vec<u32> = t.entry(n).or_default();
            entry.extend(p);
        }
        let torsion = t
            .into_iter()
            .map(|(n, p)| (n, canonical(p)))
            .filter(|(_, p)| !p.is_empty())
            .collect();
        GroupSig {
            rank_flag: u8::from(rank > 0),
            torsion,
        }
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    /// `(1; 0; 0; …)`, the signature of `Z`.
    pub fn z() -> Self {
        GroupSig::new(1, [])
    }

    /// `Z_{p_n^k}`.
    pub fn cyclic(n: usize, k: u32) -> Self {
        GroupSig::new(0, [(n, vec![k])])
    }

    pub fn rank_flag(&self) -> u8 {
        self.rank_flag
    }

    pub fn with_rank_flag(mut self, flag: u8) -> Self {
        self.rank_flag = u8::from(flag > 0);
        self
    }

    pub fn partition(&self, n: usize) -> &[u32] {
        self.torsion.get(&n).map_or(&[], Vec::as_slice)
    }

    pub fn torsion(&self) -> &BTreeMap<usize, Vec<u32>> {
        &self.torsion
    }

    /// Largest partition entry, 0 when the torsion part is trivial.
    pub fn exp(&self) -> u32 {
        self.torsion.values().flatten().copied().max().unwrap_or(0)
    }

    /// Prime indices with a nonzero partition.
    pub fn primes(&self) -> BTreeSet<usize> {
        self.torsion.keys().copied().collect()
    }

    pub fn leq(&self, other: &GroupSig) -> bool {
        self.rank_flag <= other.rank_flag
            && self
                .torsion
                .iter()
                .all(|(n, p)| partition_leq(p, other.partition(*n)))
    }

    fn combine(&self, other: &GroupSig, rank: u8, f: fn(u32, u32) -> u32) -> GroupSig {
        let keys: BTreeSet<usize> = self
            .torsion
            .keys()
            .chain(other.torsion.keys())
            .copied()
            .collect();
        GroupSig::new(
            rank.into(),
            keys.into_iter()
                .map(|n| (n, pointwise(self.partition(n), other.partition(n), f))),
        )
    }

    pub fn join(&self, other: &GroupSig) -> GroupSig {
        self.combine(other, self.rank_flag.max(other.rank_flag), u32::max)
    }

    pub fn meet(&self, other: &GroupSig) -> GroupSig {
        self.combine(other, self.rank_flag.min(other.rank_flag), u32::min)
    }

    /// Direct product with `Z_{p_n^k}` for each part of `parts`.
    pub fn extend(&self, n: usize, parts: &[u32]) -> GroupSig {
        let mut t = self.torsion.clone();
        t.entry(n).or_default().extend(parts);
        GroupSig::new(self.rank_flag.into(), t)
    }

    /// Group order, `None` for infinite groups.
    pub fn order(&self) -> Option<u64> {
        if self.rank_flag == 1 {
            return None;
        }
        Some(
            self.torsion
                .iter()
                .flat_map(|(n, p)| p.iter().map(move |&e| nth_prime(*n).pow(e)))
                .product(),
        )
    }

    /// Cyclic factors `p^e`, one per partition entry, by increasing prime.
    pub fn prime_power_factors(&self) -> Vec<u64> {
        self.torsion
            .iter()
            .flat_map(|(n, p)| p.iter().map(move |&e| nth_prime(*n).pow(e)))
            .collect()
    }
}

/// Signature of `Z^rank × Z_{f₁} × ⋯`; any positive rank collapses to flag 1.
pub fn sig_of_invariant_factors(factors: &[u64], rank: u32) -> Result<GroupSig, VarietyError> {
    let mut parts: Vec<(usize, Vec<u32>)> = vec![];
    for &f in factors {
        if f < 2 {
            return Err(VarietyError::InvalidFactor(f));
        }
        for (p, e) in factorize(f) {
            parts.push((prime_index(p).expect("factor is prime"), vec![e]));
        }
    }
    Ok(GroupSig::new(rank, parts))
}

impl fmt::Display for GroupSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .torsion
            .iter()
            .map(|(n, p)| {
                let entries: Vec<String> = p.iter().map(u32::to_string).collect();
                format!(" p{}:[{}]", nth_prime(*n), entries.join(","))
            })
            .collect();
        write!(f, "({};{})", self.rank_flag, parts.join(";"))
    }
}

fn syntax(msg: impl Into<String>) -> VarietyError {
    VarietyError::Syntax(msg.into())
}

fn parse_numbers(s: &str) -> Result<Vec<u32>, VarietyError> {
    let s = s
        .trim()
        .trim_start_matches(['[', '('])
        .trim_end_matches([']', ')']);
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty() && *t != "…" && *t != "...")
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| syntax(format!("expected a number, found {t:?}")))
        })
        .collect()
}

impl FromStr for GroupSig {
    type Err = VarietyError;

    /// Accepts the tagged form `(1; p2:[2,1]; p3:[3])` and the positional form
    /// `(1; 2,1; 3; 0; …)`, where the `n`-th segment belongs to the `n`-th prime.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| syntax(format!("signature must be parenthesized: {s:?}")))?;
        let mut segs = inner.split(';').map(str::trim);
        let rank = match segs.next() {
            Some("0") => 0,
            Some("1") => 1,
            other => return Err(syntax(format!("rank flag must be 0 or 1, found {other:?}"))),
        };
        let mut torsion = vec![];
        let mut position = 0;
        for seg in segs {
            if seg.is_empty() || seg == "…" || seg == "..." {
                continue;
            }
            if let Some(rest) = seg.strip_prefix('p') {
                let (p, parts) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax(format!("expected pN:[…], found {seg:?}")))?;
                let p: u64 = p
                    .trim()
                    .parse()
                    .map_err(|_| syntax(format!("bad prime in {seg:?}")))?;
                let n = prime_index(p).ok_or_else(|| syntax(format!("{p} is not prime")))?;
                torsion.push((n, parse_numbers(parts)?));
            } else {
                position += 1;
                torsion.push((position, parse_numbers(seg)?));
            }
        }
        Ok(GroupSig::new(rank, torsion))
    }
}
