use super::algebra::FinRL;

/// Per-element data preserved by any isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Invariant {
    constant: u8,
    below: usize,
    above: usize,
    idempotent: bool,
    power_index: usize,
    power_period: usize,
    fixes: usize,
}

/// Index and period of the cyclic subsemigroup generated by `x`.
pub fn index_period(a: &FinRL, x: usize) -> (usize, usize) {
    let mut seen = vec![usize::MAX; a.size()];
    let mut p = x;
    let mut k = 1;
    loop {
        if seen[p] != usize::MAX {
            return (seen[p], k - seen[p]);
        }
        seen[p] = k;
        p = a.mul(p, x);
        k += 1;
    }
}

fn invariants(a: &FinRL) -> Vec<Invariant> {
    let n = a.size();
    (0..n)
        .map(|x| {
            let (power_index, power_period) = index_period(a, x);
            let constant = u8::from(x == a.unit())
                | (u8::from(Some(x) == a.bot()) << 1)
                | (u8::from(Some(x) == a.top()) << 2);
            Invariant {
                constant,
                below: (0..n).filter(|&y| a.leq(y, x)).count(),
                above: (0..n).filter(|&y| a.leq(x, y)).count(),
                idempotent: a.mul(x, x) == x,
                power_index,
                power_period,
                fixes: (0..n).filter(|&y| a.mul(x, y) == y).count(),
            }
        })
        .collect()
}

/// Sorted multiset of element invariants; equal for isomorphic algebras.
pub fn invariant_key(a: &FinRL) -> Vec<String> {
    let mut v: Vec<String> = invariants(a).iter().map(|i| format!("{i:?}")).collect();
    v.sort();
    v
}

/// Searches for a bijection `f` with `f(x)` the image of `x` preserving order,
/// product, unit and bounds.
pub fn find_isomorphism(a: &FinRL, b: &FinRL) -> Option<Vec<usize>> {
    let n = a.size();
    if n != b.size()
        || a.bot().is_some() != b.bot().is_some()
        || a.top().is_some() != b.top().is_some()
    {
        return None;
    }
    let ia = invariants(a);
    let ib = invariants(b);
    let mut sa = ia.clone();
    let mut sb = ib.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| ia[x] == ib[y]).collect())
        .collect();
    // Most constrained elements first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| candidates[x].len());
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &order, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn consistent(a: &FinRL, b: &FinRL, map: &[usize], x: usize) -> bool {
    let fx = map[x];
    for y in 0..a.size() {
        let fy = map[y];
        if fy == usize::MAX {
            continue;
        }
        if a.leq(x, y) != b.leq(fx, fy) || a.leq(y, x) != b.leq(fy, fx) {
            return false;
        }
        for (p, q) in [(x, y), (y, x)] {
            let w = map[a.mul(p, q)];
            if w != usize::MAX && w != b.mul(map[p], map[q]) {
                return false;
            }
        }
    }
    // Products whose value is x but whose factors were fixed earlier.
    for p in 0..a.size() {
        if map[p] == usize::MAX {
            continue;
        }
        for q in 0..a.size() {
            if map[q] != usize::MAX && a.mul(p, q) == x && b.mul(map[p], map[q]) != fx {
                return false;
            }
        }
    }
    true
}

fn extend(
    a: &FinRL,
    b: &FinRL,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if consistent(a, b, map, x) && extend(a, b, order, candidates, depth + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

pub fn is_isomorphic(a: &FinRL, b: &FinRL) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Groups algebras into isomorphism classes, keeping the first member of each.
pub fn dedup_isomorphic(algs: Vec<FinRL>) -> Vec<FinRL> {
    let mut reps: Vec<(Vec<String>, FinRL)> = Vec::new();
    for alg in algs {
        let key = invariant_key(&alg);
        if !reps
            .iter()
            .any(|(k, r)| *k == key && is_isomorphic(r, &alg))
        {
            reps.push((key, alg));
        }
    }
    reps.into_iter().map(|(_, r)| r).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finalg::table::{Relation, Table};

    fn chain_alg(n: usize) -> FinRL {
        FinRL::build(
            &Relation::from_fn(n, |x, y| x <= y),
            &Table::from_fn(n, |x, y| x.min(y)),
            n - 1,
        )
        .unwrap()
    }

    #[test]
    fn identity_on_self() {
        let a = chain_alg(4);
        assert_eq!(find_isomorphism(&a, &a), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn relabelled_copy_found_both_ways() {
        let a = chain_alg(3);
        let b = a.permuted(&[2, 0, 1]);
        let f = find_isomorphism(&a, &b).unwrap();
        assert_eq!(f, vec![2, 0, 1]);
        assert!(find_isomorphism(&b, &a).is_some());
    }

    #[test]
    fn size_mismatch_is_none() {
        assert!(find_isomorphism(&chain_alg(3), &chain_alg(4)).is_none());
    }

    #[test]
    fn idempotents_have_index_and_period_one() {
        let c = chain_alg(3);
        assert!((0..3).all(|x| index_period(&c, x) == (1, 1)));
    }
}
