use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use super::FramesError;
use crate::finalg::FinRL;

/// Least multiplicatively closed superset of `b ∪ {1}`, sorted.
pub fn generate_submonoid(a: &FinRL, b: &[usize]) -> Vec<usize> {
    let mut w: BTreeSet<usize> = b.iter().copied().collect();
    w.insert(a.unit());
    loop {
        let products: Vec<usize> = w
            .iter()
            .flat_map(|&x| w.iter().map(move |&y| a.mul(x, y)))
            .filter(|p| !w.contains(p))
            .collect();
        if products.is_empty() {
            return w.into_iter().collect();
        }
        w.extend(products);
    }
}

/// The residuated frame `W_{A,B}`: `x N (y, b, z)` iff `y x z ≤ b`.
///
/// Subsets of `W` are bitsets over positions in [`Frame::w`].
#[derive(Clone, Debug)]
pub struct Frame {
    a: FinRL,
    b: Vec<usize>,
    w: Vec<usize>,
    wprime: Vec<(usize, usize, usize)>,
    /// `rows[i] = {(y, b, z)}^◁` for `wprime[i]`.
    rows: Vec<FixedBitSet>,
    /// Distinct rows; every closed set is an intersection of these.
    generators: Vec<FixedBitSet>,
}

impl Frame {
    /// Adds `⊥`, `⊤` and `1` to `b` before generating `W`.
    pub fn new(a: &FinRL, b: &[usize]) -> Result<Self, FramesError> {
        let n = a.size();
        if let Some(&x) = b.iter().find(|&&x| x >= n) {
            return Err(FramesError::OutOfRange(x));
        }
        let mut bset: BTreeSet<usize> = b.iter().copied().collect();
        bset.extend(a.bot());
        bset.extend(a.top());
        bset.insert(a.unit());
        let b: Vec<usize> = bset.into_iter().collect();
        let w = generate_submonoid(a, &b);
        let mut wprime = Vec::with_capacity(w.len() * w.len() * b.len());
        for &y in &w {
            for &bb in &b {
                for &z in &w {
                    wprime.push((y, bb, z));
                }
            }
        }
        let rows: Vec<FixedBitSet> = wprime
            .iter()
            .map(|&(y, bb, z)| {
                let mut s = FixedBitSet::with_capacity(w.len());
                for (i, &x) in w.iter().enumerate() {
                    s.set(i, a.leq(a.mul(a.mul(y, x), z), bb));
                }
                s
            })
            .collect();
        let mut generators: Vec<FixedBitSet> = rows
            .iter()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        generators.sort_by_key(|s| s.ones().collect::<Vec<_>>());
        Ok(Frame {
            a: a.clone(),
            b,
            w,
            wprime,
            rows,
            generators,
        })
    }

    pub fn algebra(&self) -> &FinRL {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn w(&self) -> &[usize] {
        &self.w
    }

    pub fn wprime(&self) -> &[(usize, usize, usize)] {
        &self.wprime
    }

    pub fn generators(&self) -> &[FixedBitSet] {
        &self.generators
    }

    /// `x N w′` for an element `x` of `W` (as an index of `A`).
    pub fn relates(&self, x: usize, wp: (usize, usize, usize)) -> bool {
        let (y, b, z) = wp;
        self.a.leq(self.a.mul(self.a.mul(y, x), z), b)
    }

    pub fn position(&self, x: usize) -> Option<usize> {
        self.w.binary_search(&x).ok()
    }

    pub fn empty_set(&self) -> FixedBitSet {
        FixedBitSet::with_capacity(self.w.len())
    }

    pub fn full_set(&self) -> FixedBitSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    /// Bitset of the given elements of `A`; elements outside `W` are ignored.
    pub fn set_of(&self, elems: &[usize]) -> FixedBitSet {
        let mut s = self.empty_set();
        for p in elems.iter().filter_map(|&x| self.position(x)) {
            s.insert(p);
        }
        s
    }

    /// Elements of `A` in a subset of `W`.
    pub fn elements_of(&self, s: &FixedBitSet) -> Vec<usize> {
        s.ones().map(|p| self.w[p]).collect()
    }

    /// `X^▷` as indices into [`wprime`](Self::wprime).
    pub fn upper(&self, x: &FixedBitSet) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&i| x.is_subset(&self.rows[i]))
            .collect()
    }

    /// `Y^◁` for indices into [`wprime`](Self::wprime).
    pub fn lower(&self, y: &[usize]) -> FixedBitSet {
        let mut s = self.full_set();
        for &i in y {
            s.intersect_with(&self.rows[i]);
        }
        s
    }
}

/// `γ_N(X) = X^▷◁`.
pub fn galois_closure(frame: &Frame, x: &FixedBitSet) -> FixedBitSet {
    // intersecting the distinct rows above X gives the same set as X^▷◁
    let mut s = frame.full_set();
    for g in &frame.generators {
        if x.is_subset(g) {
            s.intersect_with(g);
        }
    }
    s
}
