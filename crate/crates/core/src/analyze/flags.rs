use serde::Serialize;

use crate::finalg::FinRL;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct URLFlags {
    pub is_unilinear: bool,
    pub is_linear: bool,
    pub top_central: bool,
    pub top_unital: bool,
    pub rigorously_compact: bool,
    pub compact: bool,
    pub height: usize,
    pub width: usize,
}

impl URLFlags {
    /// `key=value` lines in field order.
    pub fn to_lines(&self) -> Vec<String> {
        vec![
            format!("is_unilinear={}", self.is_unilinear),
            format!("is_linear={}", self.is_linear),
            format!("top_central={}", self.top_central),
            format!("top_unital={}", self.top_unital),
            format!("rigorously_compact={}", self.rigorously_compact),
            format!("compact={}", self.compact),
            format!("height={}", self.height),
            format!("width={}", self.width),
        ]
    }
}

/// Pairs of incomparable elements; the barred bounds `u ∨ v`, `u ∧ v` range over these.
fn incomparable_pairs(r: &FinRL) -> Vec<(usize, usize)> {
    let n = r.size();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !r.comparable(u, v))
        .collect()
}

/// The (URL) axiom: incomparable elements meet below everything and join above everything.
pub fn is_unilinear(r: &FinRL) -> bool {
    let n = r.size();
    incomparable_pairs(r).iter().all(|&(u, v)| {
        let (m, j) = (r.meet(u, v), r.join(u, v));
        (0..n).all(|w| r.leq(m, w) && r.leq(w, j))
    })
}

/// Number of elements in a longest chain.
pub fn height(r: &FinRL) -> usize {
    let n = r.size();
    // elements sorted by down-set size form a linear extension
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&y| r.leq(y, x)).count());
    let mut best = vec![1; n];
    for (i, &x) in order.iter().enumerate() {
        for &y in &order[..i] {
            if r.lt(y, x) {
                best[x] = best[x].max(best[y] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Size of a largest antichain, by Dilworth: `n` minus a maximum matching
/// in the strict-order bipartite graph.
pub fn width(r: &FinRL) -> usize {
    let n = r.size();
    let mut match_right = vec![usize::MAX; n];
    fn augment(r: &FinRL, x: usize, seen: &mut [bool], match_right: &mut [usize]) -> bool {
        for y in 0..r.size() {
            if r.lt(x, y) && !seen[y] {
                seen[y] = true;
                if match_right[y] == usize::MAX || augment(r, match_right[y], seen, match_right) {
                    match_right[y] = x;
                    return true;
                }
            }
        }
        false
    }
    let mut matched = 0;
    for x in 0..n {
        let mut seen = vec![false; n];
        if augment(r, x, &mut seen, &mut match_right) {
            matched += 1;
        }
    }
    n - matched
}

pub fn url_flags(r: &FinRL) -> URLFlags {
    let n = r.size();
    let is_linear = r.is_chain();
    let is_unilinear = is_linear || is_unilinear(r);
    let pairs = incomparable_pairs(r);
    // x·⊤̄ = ⊤̄·x, vacuous in chains
    let top_central = pairs.iter().all(|&(u, v)| {
        let t = r.join(u, v);
        (0..n).all(|x| r.mul(x, t) == r.mul(t, x))
    });
    // x = ⊥̄ or x·⊤̄ = ⊤̄ = ⊤̄·x
    let top_unital = pairs.iter().all(|&(u, v)| {
        let (t, b) = (r.join(u, v), r.meet(u, v));
        (0..n).all(|x| x == b || (r.mul(x, t) == t && r.mul(t, x) == t))
    });
    let rigorously_compact = match (r.bot(), r.top()) {
        (Some(b), Some(t)) => (0..n).all(|x| x == b || (r.mul(t, x) == t && r.mul(x, t) == t)),
        _ => false,
    };
    let middle = r.middle();
    let middle_closed = r.bot().is_some()
        && r.top().is_some()
        && middle
            .iter()
            .all(|&x| middle.iter().all(|&y| middle.contains(&r.mul(x, y))));
    let compact = is_unilinear && top_unital && (is_linear || middle_closed);
    URLFlags {
        is_unilinear,
        is_linear,
        top_central,
        top_unital,
        rigorously_compact,
        compact,
        height: height(r),
        width: width(r),
    }
}

pub fn is_compact_url(r: &FinRL) -> bool {
    url_flags(r).compact
}
