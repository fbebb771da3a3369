//! Brute-force oracles shared by the integration suites. Everything here is
//! computed from raw tables, never through the library's own derivations.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use unilinear::construct::ZeroMonoid;
use unilinear::finalg::{FinRL, Relation, Table};
use unilinear::varieties::GroupSig;

// ---------------------------------------------------------------- algebras

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

/// Every residuated-lattice law, checked directly on the tables.
pub fn laws_hold(a: &FinRL) -> Result<(), String> {
    let n = a.size();
    for x in 0..n {
        if !a.leq(x, x) {
            return Err(format!("reflexivity at {x}"));
        }
        for y in 0..n {
            if x != y && a.leq(x, y) && a.leq(y, x) {
                return Err(format!("antisymmetry at {x},{y}"));
            }
            for z in 0..n {
                if a.leq(x, y) && a.leq(y, z) && !a.leq(x, z) {
                    return Err(format!("transitivity at {x},{y},{z}"));
                }
            }
        }
    }
    for (x, y) in all_pairs(n) {
        let lower: Vec<usize> = (0..n).filter(|&z| a.leq(z, x) && a.leq(z, y)).collect();
        let upper: Vec<usize> = (0..n).filter(|&z| a.leq(x, z) && a.leq(y, z)).collect();
        let (m, j) = (a.meet(x, y), a.join(x, y));
        if !lower.contains(&m) || lower.iter().any(|&z| !a.leq(z, m)) {
            return Err(format!("meet at {x},{y}"));
        }
        if !upper.contains(&j) || upper.iter().any(|&z| !a.leq(j, z)) {
            return Err(format!("join at {x},{y}"));
        }
    }
    let e = a.unit();
    for x in 0..n {
        if a.mul(e, x) != x || a.mul(x, e) != x {
            return Err(format!("unit at {x}"));
        }
    }
    for (x, y) in all_pairs(n) {
        for z in 0..n {
            if a.mul(a.mul(x, y), z) != a.mul(x, a.mul(y, z)) {
                return Err(format!("associativity at {x},{y},{z}"));
            }
            let below = a.leq(a.mul(x, y), z);
            if below != a.leq(y, a.ldiv(x, z)) {
                return Err(format!("left residuation at {x},{y},{z}"));
            }
            if below != a.leq(x, a.rdiv(z, y)) {
                return Err(format!("right residuation at {x},{y},{z}"));
            }
        }
    }
    if let Some(b) = a.bot() {
        if (0..n).any(|x| !a.leq(b, x)) {
            return Err("declared bottom is not least".into());
        }
    }
    if let Some(t) = a.top() {
        if (0..n).any(|x| !a.leq(x, t)) {
            return Err("declared top is not greatest".into());
        }
    }
    Ok(())
}

fn greatest(leq: impl Fn(usize, usize) -> bool, set: &[usize]) -> Option<usize> {
    set.iter()
        .copied()
        .find(|&m| set.iter().all(|&s| leq(s, m)))
}

/// `x\z` and `z/x` as maxima of solution sets, `None` unless every solution
/// set is the principal down-set of its maximum.
pub fn brute_residuals(
    n: usize,
    leq: impl Fn(usize, usize) -> bool + Copy,
    mul: impl Fn(usize, usize) -> usize + Copy,
) -> Option<(Vec<Vec<usize>>, Vec<Vec<usize>>)> {
    let mut l = vec![vec![0; n]; n];
    let mut r = vec![vec![0; n]; n];
    for x in 0..n {
        for z in 0..n {
            let ls: Vec<usize> = (0..n).filter(|&y| leq(mul(x, y), z)).collect();
            let rs: Vec<usize> = (0..n).filter(|&y| leq(mul(y, x), z)).collect();
            l[x][z] = greatest(leq, &ls)?;
            r[z][x] = greatest(leq, &rs)?;
            let principal =
                |set: &[usize], m: usize| (0..n).all(|y| !leq(y, m) || set.contains(&y));
            if !principal(&ls, l[x][z]) || !principal(&rs, r[z][x]) {
                return None;
            }
        }
    }
    Some((l, r))
}

/// Division tables of `a` agree with the brute-force maxima.
pub fn divisions_match(a: &FinRL) -> Result<(), String> {
    let n = a.size();
    let (l, r) =
        brute_residuals(n, |x, y| a.leq(x, y), |x, y| a.mul(x, y)).ok_or("no residuals")?;
    for (x, z) in all_pairs(n) {
        if a.ldiv(x, z) != l[x][z] {
            return Err(format!("ldiv differs at {x},{z}"));
        }
        if a.rdiv(z, x) != r[z][x] {
            return Err(format!("rdiv differs at {z},{x}"));
        }
    }
    Ok(())
}

/// An order-and-product isomorphism `a → b`, by backtracking.
pub fn iso(a: &FinRL, b: &FinRL) -> Option<Vec<usize>> {
    let n = a.size();
    if n != b.size() {
        return None;
    }
    let down = |r: &FinRL, x: usize| (0..n).filter(|&y| r.leq(y, x)).count();
    let idem = |r: &FinRL, x: usize| r.mul(x, x) == x;
    let sig_a: Vec<_> = (0..n)
        .map(|x| (down(a, x), idem(a, x), x == a.unit()))
        .collect();
    let sig_b: Vec<_> = (0..n)
        .map(|x| (down(b, x), idem(b, x), x == b.unit()))
        .collect();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        a: &FinRL,
        b: &FinRL,
        sa: &[(usize, bool, bool)],
        sb: &[(usize, bool, bool)],
        i: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = a.size();
        if i == n {
            return all_pairs(n).all(|(x, y)| b.mul(map[x], map[y]) == map[a.mul(x, y)]);
        }
        for c in 0..n {
            if used[c] || sa[i] != sb[c] {
                continue;
            }
            map[i] = c;
            let consistent = (0..=i).all(|j| {
                a.leq(i, j) == b.leq(c, map[j])
                    && a.leq(j, i) == b.leq(map[j], c)
                    && [a.mul(i, j), a.mul(j, i)]
                        .iter()
                        .zip([b.mul(c, map[j]), b.mul(map[j], c)])
                        .all(|(&p, q)| p > i || map[p] == q)
            });
            if consistent {
                used[c] = true;
                if go(a, b, sa, sb, i + 1, map, used) {
                    return true;
                }
                used[c] = false;
            }
        }
        map[i] = usize::MAX;
        false
    }
    go(a, b, &sig_a, &sig_b, 0, &mut map, &mut used).then_some(map)
}

/// Monoid isomorphism between two tables fixing the given units.
pub fn monoid_iso(t1: &Table, u1: usize, t2: &Table, u2: usize) -> bool {
    let n = t1.size();
    if n != t2.size() {
        return false;
    }
    permutations(n)
        .into_iter()
        .any(|p| p[u1] == u2 && all_pairs(n).all(|(x, y)| p[t1.get(x, y)] == t2.get(p[x], p[y])))
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn chain(n: usize) -> Relation {
    Relation::from_fn(n, |x, y| x <= y)
}

fn built(leq: &Relation, mul: &[Vec<usize>], unit: usize) -> FinRL {
    FinRL::build(leq, &Table::from_rows(mul).unwrap(), unit).unwrap()
}

pub fn boolean2() -> FinRL {
    built(&chain(2), &[vec![0, 0], vec![0, 1]], 1)
}

/// `0 < a, b < 1`, multiplication is meet.
pub fn boolean4() -> FinRL {
    let leq = Relation::from_fn(4, |x, y| x == y || x == 0 || y == 3);
    let meet = |x: usize, y: usize| {
        if x == y {
            x
        } else if x == 3 {
            y
        } else if y == 3 {
            x
        } else {
            0
        }
    };
    built(
        &leq,
        &(0..4)
            .map(|x| (0..4).map(|y| meet(x, y)).collect())
            .collect::<Vec<_>>(),
        3,
    )
}

pub fn heyting3() -> FinRL {
    built(
        &chain(3),
        &(0..3)
            .map(|x| (0..3).map(|y| x.min(y)).collect())
            .collect::<Vec<_>>(),
        2,
    )
}

/// Łukasiewicz on three elements: `a·a = 0`.
pub fn mv3() -> FinRL {
    built(
        &chain(3),
        &(0..3usize)
            .map(|x| (0..3usize).map(|y| (x + y).saturating_sub(2)).collect())
            .collect::<Vec<_>>(),
        2,
    )
}

/// The 3-chain with unit in the middle and `⊤·⊤ = ⊤`.
pub fn middle_unit3() -> FinRL {
    built(&chain(3), &[vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]], 1)
}

/// `Z_{n_1} × ⋯ × Z_{n_k}` with an absorbing top adjoined last; unit 0.
pub fn group_with_top(factors: &[usize]) -> ZeroMonoid {
    let g: usize = factors.iter().product();
    let digits = |mut x: usize| -> Vec<usize> {
        factors
            .iter()
            .map(|&f| {
                let d = x % f;
                x /= f;
                d
            })
            .collect()
    };
    let encode = |d: &[usize]| {
        d.iter()
            .zip(factors)
            .rev()
            .fold(0, |acc, (&v, &f)| acc * f + v)
    };
    let table = Table::from_fn(g + 1, |x, y| {
        if x == g || y == g {
            g
        } else {
            let s: Vec<usize> = digits(x)
                .iter()
                .zip(digits(y))
                .zip(factors)
                .map(|((a, b), f)| (a + b) % f)
                .collect();
            encode(&s)
        }
    });
    ZeroMonoid {
        table,
        unit: 0,
        zero: g,
        names: None,
    }
}

/// Every monoid on `m` elements with unit 0, absorbing `m − 1`, and
/// cancellation away from the absorbing element, up to isomorphism.
pub fn top_cancellative_search(m: usize) -> Vec<ZeroMonoid> {
    if m == 1 {
        return vec![ZeroMonoid {
            table: Table::from_fn(1, |_, _| 0),
            unit: 0,
            zero: 0,
            names: None,
        }];
    }
    let z = m - 1;
    let free: Vec<(usize, usize)> = (1..z).flat_map(|x| (1..z).map(move |y| (x, y))).collect();
    let mut found: Vec<ZeroMonoid> = vec![];
    let total = m.pow(free.len() as u32);
    for code in 0..total {
        let mut c = code;
        let table = {
            let mut t = vec![vec![0; m]; m];
            for x in 0..m {
                for y in 0..m {
                    t[x][y] = if x == z || y == z {
                        z
                    } else if x == 0 {
                        y
                    } else if y == 0 {
                        x
                    } else {
                        0
                    };
                }
            }
            for &(x, y) in &free {
                t[x][y] = c % m;
                c /= m;
            }
            Table::from_rows(&t).unwrap()
        };
        let assoc = (0..m).all(|x| {
            all_pairs(m)
                .all(|(y, w)| table.get(table.get(x, y), w) == table.get(x, table.get(y, w)))
        });
        let cancel = (0..m).all(|x| {
            all_pairs(m).all(|(y, w)| {
                y == w
                    || (table.get(x, y) == z || table.get(x, y) != table.get(x, w))
                        && (table.get(y, x) == z || table.get(y, x) != table.get(w, x))
            })
        });
        if assoc && cancel && !found.iter().any(|f| monoid_iso(&f.table, 0, &table, 0)) {
            found.push(ZeroMonoid {
                table,
                unit: 0,
                zero: z,
                names: None,
            });
        }
    }
    found
}

/// Every residuated chain on `n` elements (each unit position, all monotone products).
pub fn residuated_chains(n: usize) -> Vec<FinRL> {
    let mut out = vec![];
    for unit in 0..n {
        let mut t = vec![vec![usize::MAX; n]; n];
        let cells: Vec<(usize, usize)> = all_pairs(n).collect();
        fn go(
            t: &mut Vec<Vec<usize>>,
            cells: &[(usize, usize)],
            i: usize,
            unit: usize,
            out: &mut Vec<Vec<Vec<usize>>>,
        ) {
            let n = t.len();
            if i == cells.len() {
                out.push(t.clone());
                return;
            }
            let (x, y) = cells[i];
            let lo = [
                x.checked_sub(1).map(|p| t[p][y]),
                y.checked_sub(1).map(|p| t[x][p]),
            ]
            .into_iter()
            .flatten()
            .max()
            .unwrap_or(0);
            for v in lo..n {
                if x == unit && v != y || y == unit && v != x {
                    continue;
                }
                t[x][y] = v;
                go(t, cells, i + 1, unit, out);
            }
            t[x][y] = usize::MAX;
        }
        let mut tables = vec![];
        go(&mut t, &cells, 0, unit, &mut tables);
        for tab in tables {
            let assoc =
                (0..n).all(|x| all_pairs(n).all(|(y, z)| tab[tab[x][y]][z] == tab[x][tab[y][z]]));
            // on a finite chain a monotone product is residuated iff it fixes the bottom
            if assoc
                && tab[0][0] == 0
                && tab.iter().all(|r| r[0] == 0)
                && (0..n).all(|y| tab[0][y] == 0)
            {
                out.push(built(&chain(n), &tab, unit));
            }
        }
    }
    out
}

// ---------------------------------------------------------------- terms

/// `t(x,y,z) = r(x↔y)·z ∨ (r(x↔y)\⊥ ∧ 1)·x`, evaluated on the tables.
pub fn discriminator_value(a: &FinRL, x: usize, y: usize, z: usize) -> usize {
    let one = a.unit();
    let bot = a.bot().expect("bounded");
    let bi = a.meet(a.meet(a.ldiv(x, y), a.ldiv(y, x)), one);
    let inv = a.rdiv(one, bi);
    let r = a.meet(
        a.mul(a.join(one, bi), a.meet(one, bi)),
        a.mul(a.join(one, inv), a.meet(one, inv)),
    );
    a.join(a.mul(r, z), a.mul(a.meet(a.ldiv(r, bot), one), x))
}

pub fn discriminator_holds(a: &FinRL) -> Option<[usize; 3]> {
    let n = a.size();
    for x in 0..n {
        for (y, z) in all_pairs(n) {
            let want = if x == y { z } else { x };
            if discriminator_value(a, x, y, z) != want {
                return Some([x, y, z]);
            }
        }
    }
    None
}

pub fn is_unilinear(a: &FinRL) -> bool {
    let n = a.size();
    all_pairs(n).all(|(u, v)| {
        a.leq(u, v)
            || a.leq(v, u)
            || (0..n).all(|w| a.leq(a.meet(u, v), w) && a.leq(w, a.join(u, v)))
    })
}

pub fn satisfies_knotted(a: &FinRL, m: usize, k: usize) -> bool {
    (0..a.size()).all(|x| a.leq(a.pow(x, m), a.pow(x, k)))
}

pub fn is_commutative(a: &FinRL) -> bool {
    all_pairs(a.size()).all(|(x, y)| a.mul(x, y) == a.mul(y, x))
}

// ---------------------------------------------------------------- frames

/// The Galois-closed subsets of `W` for the frame of `a` over `b`, computed
/// by closing every subset of `W`.
pub struct FrameOracle {
    pub w: Vec<usize>,
    pub closed: BTreeSet<Vec<bool>>,
    wprime: Vec<(usize, usize, usize)>,
    a: FinRL,
}

impl FrameOracle {
    pub fn new(a: &FinRL, b: &[usize]) -> Self {
        let mut w: BTreeSet<usize> = b.iter().copied().collect();
        w.extend([a.unit(), a.bot().unwrap(), a.top().unwrap()]);
        loop {
            let prods: Vec<usize> = w
                .iter()
                .flat_map(|&x| w.iter().map(move |&y| a.mul(x, y)))
                .collect();
            let before = w.len();
            w.extend(prods);
            if w.len() == before {
                break;
            }
        }
        let w: Vec<usize> = w.into_iter().collect();
        let wprime = w
            .iter()
            .flat_map(|&y| {
                b.iter()
                    .flat_map(|&c| w.iter().map(move |&z| (y, c, z)))
                    .collect::<Vec<_>>()
            })
            .collect();
        let mut me = FrameOracle {
            w,
            closed: BTreeSet::new(),
            wprime,
            a: a.clone(),
        };
        let k = me.w.len();
        for mask in 0..(1u64 << k) {
            let s: Vec<bool> = (0..k).map(|i| mask >> i & 1 == 1).collect();
            let c = me.close(&s);
            me.closed.insert(c);
        }
        me
    }

    fn relates(&self, x: usize, (y, c, z): (usize, usize, usize)) -> bool {
        self.a.leq(self.a.mul(self.a.mul(y, x), z), c)
    }

    pub fn close(&self, s: &[bool]) -> Vec<bool> {
        let up: Vec<_> = self
            .wprime
            .iter()
            .copied()
            .filter(|&p| {
                self.w
                    .iter()
                    .zip(s)
                    .all(|(&x, &inn)| !inn || self.relates(x, p))
            })
            .collect();
        self.w
            .iter()
            .map(|&x| up.iter().all(|&p| self.relates(x, p)))
            .collect()
    }

    pub fn singleton(&self, x: usize) -> Vec<bool> {
        self.close(&self.w.iter().map(|&v| v == x).collect::<Vec<_>>())
    }

    pub fn product(&self, s: &[bool], t: &[bool]) -> Vec<bool> {
        let mut p = vec![false; self.w.len()];
        for (i, &x) in self.w.iter().enumerate() {
            for (j, &y) in self.w.iter().enumerate() {
                if s[i] && t[j] {
                    let xy = self.a.mul(x, y);
                    p[self.w.iter().position(|&v| v == xy).unwrap()] = true;
                }
            }
        }
        self.close(&p)
    }

    pub fn join(&self, s: &[bool], t: &[bool]) -> Vec<bool> {
        self.close(&s.iter().zip(t).map(|(a, b)| *a || *b).collect::<Vec<_>>())
    }

    pub fn meet(&self, s: &[bool], t: &[bool]) -> Vec<bool> {
        s.iter().zip(t).map(|(a, b)| *a && *b).collect()
    }

    /// `{z : x·z ∈ t for all x ∈ s}`
    pub fn ldiv(&self, s: &[bool], t: &[bool]) -> Vec<bool> {
        self.w
            .iter()
            .map(|&z| {
                self.w.iter().zip(s).all(|(&x, &inn)| {
                    !inn || t[self.w.iter().position(|&v| v == self.a.mul(x, z)).unwrap()]
                })
            })
            .collect()
    }

    /// `{z : z·x ∈ t for all x ∈ s}`
    pub fn rdiv(&self, t: &[bool], s: &[bool]) -> Vec<bool> {
        self.w
            .iter()
            .map(|&z| {
                self.w.iter().zip(s).all(|(&x, &inn)| {
                    !inn || t[self.w.iter().position(|&v| v == self.a.mul(z, x)).unwrap()]
                })
            })
            .collect()
    }

    /// Checks that `b ↦ γ({b})` is injective and preserves every operation
    /// whose value on `B` stays in `B`.
    pub fn embedding_holds(&self, b: &[usize]) -> Result<(), String> {
        let a = &self.a;
        let img: BTreeMap<usize, Vec<bool>> = b.iter().map(|&x| (x, self.singleton(x))).collect();
        let distinct: BTreeSet<&Vec<bool>> = img.values().collect();
        if distinct.len() != b.len() {
            return Err("images collide".into());
        }
        for &x in b {
            for &y in b {
                let ops: [(&str, usize, Vec<bool>); 5] = [
                    ("mul", a.mul(x, y), self.product(&img[&x], &img[&y])),
                    ("meet", a.meet(x, y), self.meet(&img[&x], &img[&y])),
                    ("join", a.join(x, y), self.join(&img[&x], &img[&y])),
                    ("ldiv", a.ldiv(x, y), self.ldiv(&img[&x], &img[&y])),
                    ("rdiv", a.rdiv(x, y), self.rdiv(&img[&x], &img[&y])),
                ];
                for (op, v, got) in ops {
                    if let Some(want) = img.get(&v) {
                        if *want != got {
                            return Err(format!("{op} at ({x}, {y})"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------- groups

pub const PRIMES: [u64; 18] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
];

pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            acc.push(p);
            go(n - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = vec![];
    go(n, n, &mut vec![], &mut out);
    out
}

/// A finite abelian group as prime-power cyclic factors.
#[derive(Clone, Debug)]
pub struct FiniteAbelian {
    pub factors: Vec<u64>,
    pub sig: GroupSig,
}

impl FiniteAbelian {
    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    fn digits(&self, mut x: u64) -> Vec<u64> {
        self.factors
            .iter()
            .map(|&f| {
                let d = x % f;
                x /= f;
                d
            })
            .collect()
    }

    fn add(&self, x: u64, y: u64) -> u64 {
        let s: Vec<u64> = self
            .digits(x)
            .iter()
            .zip(self.digits(y))
            .zip(&self.factors)
            .map(|((a, b), f)| (a + b) % f)
            .collect();
        s.iter()
            .zip(&self.factors)
            .rev()
            .fold(0, |acc, (&v, &f)| acc * f + v)
    }

    fn add_table(&self) -> Vec<Vec<u64>> {
        (0..self.order())
            .map(|x| (0..self.order()).map(|y| self.add(x, y)).collect())
            .collect()
    }

    fn element_orders(&self, add: &[Vec<u64>]) -> Vec<u64> {
        (0..self.order())
            .map(|x| {
                let (mut k, mut y) = (1, x);
                while y != 0 {
                    y = add[y as usize][x as usize];
                    k += 1;
                }
                k
            })
            .collect()
    }

    fn stats_of(orders: &[u64], mask: u64) -> Vec<(u64, usize)> {
        let mut m = BTreeMap::new();
        for (x, &o) in orders.iter().enumerate() {
            if mask >> x & 1 == 1 {
                *m.entry(o).or_insert(0) += 1;
            }
        }
        m.into_iter().collect()
    }

    /// Element-order statistics, which fix a finite abelian group up to isomorphism.
    pub fn stats(&self) -> Vec<(u64, usize)> {
        let orders = self.element_orders(&self.add_table());
        Self::stats_of(&orders, u64::MAX >> (64 - self.order()))
    }

    /// Order statistics of every subgroup, found by closing under generators.
    pub fn subgroup_stats(&self) -> HashSet<Vec<(u64, usize)>> {
        let n = self.order();
        let add = self.add_table();
        let orders = self.element_orders(&add);
        let mut seen: HashSet<u64> = HashSet::from([1]);
        let mut queue = vec![1u64];
        while let Some(s) = queue.pop() {
            let members: Vec<u64> = (0..n).filter(|x| s >> x & 1 == 1).collect();
            for h in (0..n).filter(|h| s >> h & 1 == 0) {
                // <S, h> is the union of the cosets S + k·h
                let mut t = s;
                let mut mult = h;
                while mult != 0 {
                    for &x in &members {
                        t |= 1 << add[x as usize][mult as usize];
                    }
                    mult = add[mult as usize][h as usize];
                }
                if seen.insert(t) {
                    queue.push(t);
                }
            }
        }
        seen.into_iter()
            .map(|m| Self::stats_of(&orders, m))
            .collect()
    }
}

/// Every finite abelian group with order at most `max`, one per isomorphism class.
pub fn abelian_groups_up_to(max: u64) -> Vec<FiniteAbelian> {
    let mut out = vec![];
    for n in 1..=max {
        let mut rest = n;
        let mut prime_parts: Vec<(usize, u64, u32)> = vec![];
        for (i, &p) in PRIMES.iter().enumerate() {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            if e > 0 {
                prime_parts.push((i + 1, p, e));
            }
        }
        let mut combos: Vec<Vec<(usize, u64, Vec<u32>)>> = vec![vec![]];
        for &(idx, p, e) in &prime_parts {
            combos = combos
                .into_iter()
                .flat_map(|c| {
                    partitions(e).into_iter().map(move |part| {
                        let mut c = c.clone();
                        c.push((idx, p, part));
                        c
                    })
                })
                .collect();
        }
        for c in combos {
            let factors = c
                .iter()
                .flat_map(|(_, p, part)| part.iter().map(move |&k| p.pow(k)))
                .collect();
            let sig = GroupSig::new(0, c.iter().map(|(idx, _, part)| (*idx, part.clone())));
            out.push(FiniteAbelian { factors, sig });
        }
    }
    out
}
