use std::collections::BTreeMap;
use std::thread;

use serde::Serialize;

use super::{flags::url_flags, AnalyzeError};
use crate::construct::{
    check_zero_cancellative, cyclic_mul, make_rab, mx_order, ZKind, ZeroMonoid,
};
use crate::finalg::{check_residuated_lattice, FinRL, Relation, Table};

/// One slice of the search: the unit's position and, when there is a free
/// cell at all, the value of the first one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SearchPrefix {
    pub unit: usize,
    pub first: Option<usize>,
}

struct Search {
    n: usize,
    unit: usize,
    leq: Relation,
    cells: Vec<(usize, usize)>,
    domains: Vec<Vec<usize>>,
}

const UNSET: usize = usize::MAX;

impl Search {
    fn new(nx: usize, unit: usize) -> Self {
        let n = nx + 2;
        let top = n - 1;
        let mut cells = vec![];
        let mut domains = vec![];
        for x in 1..n {
            for y in 1..n {
                if x == unit || y == unit || (x == top && y == top) {
                    continue;
                }
                cells.push((x, y));
                domains.push(match (x == top, y == top) {
                    (true, _) => vec![y, top],
                    (_, true) => vec![x, top],
                    _ => (0..n).collect(),
                });
            }
        }
        Search {
            n,
            unit,
            leq: mx_order(nx),
            cells,
            domains,
        }
    }

    /// ⊥ absorbing, the unit row and column, and `⊤⊤ = ⊤`.
    fn seed(&self) -> Vec<Vec<usize>> {
        let (n, top) = (self.n, self.n - 1);
        let mut m = vec![vec![UNSET; n]; n];
        for x in 0..n {
            m[0][x] = 0;
            m[x][0] = 0;
        }
        for x in 1..n {
            m[self.unit][x] = x;
            m[x][self.unit] = x;
        }
        m[top][top] = top;
        m
    }

    fn consistent(&self, m: &[Vec<usize>], x: usize, y: usize) -> bool {
        let n = self.n;
        let v = m[x][y];
        // monotone in each argument, checked against the new cell
        let le = |a: usize, b: usize| self.leq.holds(a, b);
        for z in 0..n {
            let col = m[z][y];
            if z != x && col != UNSET && ((le(z, x) && !le(col, v)) || (le(x, z) && !le(v, col))) {
                return false;
            }
            let row = m[x][z];
            if z != y && row != UNSET && ((le(z, y) && !le(row, v)) || (le(y, z) && !le(v, row))) {
                return false;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = m[a][b];
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    let bc = m[b][c];
                    if bc == UNSET {
                        continue;
                    }
                    let (l, r) = (m[ab][c], m[a][bc]);
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&self, m: &mut Vec<Vec<usize>>, i: usize, out: &mut Vec<FinRL>) {
        if i == self.cells.len() {
            let table = Table::from_rows(m).expect("square");
            if let Ok(r) = FinRL::build(&self.leq, &table, self.unit) {
                if check_residuated_lattice(&r).passed() {
                    out.push(r);
                }
            }
            return;
        }
        let (x, y) = self.cells[i];
        for &v in &self.domains[i] {
            m[x][y] = v;
            if self.consistent(m, x, y) {
                self.run(m, i + 1, out);
            }
        }
        m[x][y] = UNSET;
    }
}

fn unit_choices(nx: usize) -> Vec<usize> {
    if nx == 0 {
        vec![1]
    } else {
        vec![1, nx + 1]
    }
}

/// The independent slices of the search space for `|X| = nx`.
pub fn search_prefixes(nx: usize) -> Vec<SearchPrefix> {
    unit_choices(nx)
        .into_iter()
        .flat_map(|unit| {
            let s = Search::new(nx, unit);
            match s.domains.first() {
                None => vec![SearchPrefix { unit, first: None }],
                Some(d) => d
                    .iter()
                    .map(|&v| SearchPrefix {
                        unit,
                        first: Some(v),
                    })
                    .collect(),
            }
        })
        .collect()
}

/// All residuated lattices in one slice, not yet deduplicated.
pub fn enumerate_prefix(nx: usize, prefix: SearchPrefix) -> Vec<FinRL> {
    let s = Search::new(nx, prefix.unit);
    let mut m = s.seed();
    let mut out = vec![];
    match prefix.first {
        None => s.run(&mut m, 0, &mut out),
        Some(v) => {
            let (x, y) = s.cells[0];
            m[x][y] = v;
            if s.consistent(&m, x, y) {
                s.run(&mut m, 1, &mut out);
            }
        }
    }
    out
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// The least relabeling of an algebra on `M_X` under permutations of `X`,
/// with the multiplication table and unit as its key.
pub fn mx_canonical(r: &FinRL) -> (Vec<usize>, FinRL) {
    let r = r.normalized();
    let n = r.size();
    let nx = n.saturating_sub(2);
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for p in permutations(nx) {
        let mut perm: Vec<usize> = (0..n).collect();
        for (i, &j) in p.iter().enumerate() {
            perm[i + 1] = j + 1;
        }
        let mut inv = vec![0; n];
        for (x, &y) in perm.iter().enumerate() {
            inv[y] = x;
        }
        let mut key: Vec<usize> = vec![perm[r.unit()]];
        for x in 0..n {
            for y in 0..n {
                key.push(perm[r.mul(inv[x], inv[y])]);
            }
        }
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, perm));
        }
    }
    let (key, perm) = best.expect("at least the identity");
    (key, r.permuted(&perm))
}

/// Keeps one representative per isomorphism class, sorted by canonical key.
pub fn merge_classes(parts: impl IntoIterator<Item = FinRL>) -> Vec<FinRL> {
    let mut seen = BTreeMap::new();
    for r in parts {
        let (key, canon) = mx_canonical(&r);
        seen.entry(key).or_insert(canon);
    }
    seen.into_values().collect()
}

fn capped(out: Vec<FinRL>, cap: Option<usize>) -> Result<Vec<FinRL>, AnalyzeError> {
    match cap {
        Some(c) if out.len() > c => Err(AnalyzeError::CapExceeded {
            cap: c,
            found: out.len(),
        }),
        _ => Ok(out),
    }
}

/// Every residuated lattice on `M_X` with `|X| = nx`, up to isomorphism.
pub fn enumerate_mx(nx: usize, cap: Option<usize>) -> Result<Vec<FinRL>, AnalyzeError> {
    enumerate_mx_jobs(nx, cap, 1)
}

/// As `enumerate_mx`, with prefixes spread over `jobs` threads. The result
/// does not depend on `jobs`.
pub fn enumerate_mx_jobs(
    nx: usize,
    cap: Option<usize>,
    jobs: usize,
) -> Result<Vec<FinRL>, AnalyzeError> {
    let prefixes = search_prefixes(nx);
    let jobs = jobs.clamp(1, prefixes.len().max(1));
    let found: Vec<FinRL> = if jobs == 1 {
        prefixes
            .iter()
            .flat_map(|&p| enumerate_prefix(nx, p))
            .collect()
    } else {
        let chunks: Vec<Vec<SearchPrefix>> = (0..jobs)
            .map(|j| prefixes.iter().skip(j).step_by(jobs).copied().collect())
            .collect();
        thread::scope(|s| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|chunk| {
                    s.spawn(move || {
                        chunk
                            .iter()
                            .flat_map(|&p| enumerate_prefix(nx, p))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("search thread panicked"))
                .collect()
        })
    };
    capped(merge_classes(found), cap)
}

/// `⊤`-cancellative monoids with zero on `m` elements, up to isomorphism.
/// The unit is 0 and the zero is `m − 1`.
pub fn top_cancellative_monoids(m: usize) -> Vec<ZeroMonoid> {
    match m {
        0 => return vec![],
        1 => return vec![ZeroMonoid::trivial()],
        _ => {}
    }
    let zero = m - 1;
    let free: Vec<(usize, usize)> = (1..zero)
        .flat_map(|x| (1..zero).map(move |y| (x, y)))
        .collect();
    let mut t = vec![vec![UNSET; m]; m];
    for x in 0..m {
        t[0][x] = x;
        t[x][0] = x;
        t[zero][x] = zero;
        t[x][zero] = zero;
    }
    fn ok(t: &[Vec<usize>], zero: usize) -> bool {
        let m = t.len();
        for a in 0..m {
            for b in 0..m {
                let ab = t[a][b];
                if ab == UNSET {
                    continue;
                }
                for c in 0..m {
                    // xy = xz ≠ ⊤ forces y = z, on both sides
                    if b != c
                        && ab != zero
                        && (t[a][c] == ab || t[c][a] == t[b][a] && t[b][a] != zero)
                    {
                        return false;
                    }
                    let bc = t[b][c];
                    if bc == UNSET || t[ab][c] == UNSET || t[a][bc] == UNSET {
                        continue;
                    }
                    if t[ab][c] != t[a][bc] {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn go(t: &mut Vec<Vec<usize>>, free: &[(usize, usize)], zero: usize, out: &mut Vec<Table>) {
        let Some((&(x, y), rest)) = free.split_first() else {
            out.push(Table::from_rows(t).expect("square"));
            return;
        };
        for v in 0..t.len() {
            t[x][y] = v;
            if ok(t, zero) {
                go(t, rest, zero, out);
            }
        }
        t[x][y] = UNSET;
    }
    let mut tables = vec![];
    go(&mut t, &free, zero, &mut tables);
    let mut classes: BTreeMap<Vec<usize>, Table> = BTreeMap::new();
    for table in tables {
        if !check_zero_cancellative(&table, zero).unwrap_or(false) {
            continue;
        }
        let key = permutations(m - 2)
            .into_iter()
            .map(|p| {
                let mut perm: Vec<usize> = (0..m).collect();
                for (i, &j) in p.iter().enumerate() {
                    perm[i + 1] = j + 1;
                }
                let mut inv = vec![0; m];
                for (x, &y) in perm.iter().enumerate() {
                    inv[y] = x;
                }
                (0..m * m)
                    .map(|c| perm[table.get(inv[c / m], inv[c % m])])
                    .collect::<Vec<_>>()
            })
            .min()
            .expect("nonempty");
        classes.entry(key).or_insert(table);
    }
    classes
        .into_values()
        .map(|table| ZeroMonoid {
            table,
            unit: 0,
            zero,
            names: None,
        })
        .collect()
}

/// The algebras `R_{A,B}` on `M_X` with `|X| = nx`, over every `⊤`-cancellative
/// `A` and every kind that fit, up to isomorphism.
pub fn rab_family(nx: usize) -> Vec<FinRL> {
    let mut found = vec![];
    for m in 1..=nx + 1 {
        for kind in ZKind::ALL {
            if m - 1 + kind.nonzero() != nx {
                continue;
            }
            for a in top_cancellative_monoids(m) {
                if let Ok(r) = make_rab(&a, kind) {
                    found.push(r);
                }
            }
        }
    }
    merge_classes(found)
}

/// Sets of lists over `0..k`: every way to split the elements into chains.
fn chain_partitions(k: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for e in 0..k {
        let mut next = vec![];
        for p in &out {
            let mut fresh = p.clone();
            fresh.push(vec![e]);
            next.push(fresh);
            for (ci, chain) in p.iter().enumerate() {
                for pos in 0..=chain.len() {
                    let mut q = p.clone();
                    q[ci].insert(pos, e);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

/// Every unilinear order on `{1, a, …, a^{r+s−1}} ∪ {⊥, ⊤}` under which the
/// cyclic multiplication is a compact URL. Layout as in `make_cyclic_url`.
pub fn compact_cyclic_orders(r: usize, s: usize) -> Vec<Relation> {
    let k = r + s;
    let n = k + 2;
    let top = n - 1;
    let mul = cyclic_mul(r, s);
    let mut out = vec![];
    for p in chain_partitions(k) {
        let mut rank = vec![(0, 0); k];
        for (ci, chain) in p.iter().enumerate() {
            for (pos, &e) in chain.iter().enumerate() {
                rank[e] = (ci, pos);
            }
        }
        let leq = Relation::from_fn(n, |x, y| {
            if x == 0 || y == top || x == y {
                return true;
            }
            if y == 0 || x == top {
                return false;
            }
            let ((c1, p1), (c2, p2)) = (rank[x - 1], rank[y - 1]);
            c1 == c2 && p1 <= p2
        });
        if let Ok(alg) = FinRL::build(&leq, &mul, 1) {
            if url_flags(&alg).compact {
                out.push(leq);
            }
        }
    }
    out
}
