use std::fmt;

/// A square operation table over the carrier `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Table {
    n: usize,
    cells: Vec<usize>,
}

impl Table {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                cells.push(f(x, y));
            }
        }
        Table { n, cells }
    }

    /// Builds a table from rows; `None` when the rows do not form a square.
    pub fn from_rows(rows: &[Vec<usize>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(Table {
            n,
            cells: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: usize) {
        self.cells[x * self.n + y] = v;
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.cells[x * self.n..(x + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.cells.chunks(self.n.max(1)).take(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.rows().map(|r| r.to_vec()).collect()
    }

    /// First cell holding a value outside the carrier.
    pub fn out_of_range(&self) -> Option<(usize, usize, usize)> {
        (0..self.n)
            .flat_map(|x| (0..self.n).map(move |y| (x, y)))
            .map(|(x, y)| (x, y, self.get(x, y)))
            .find(|&(_, _, v)| v >= self.n)
    }

    /// Relabels the carrier: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Table {
        let mut out = Table {
            n: self.n,
            cells: vec![0; self.n * self.n],
        };
        for x in 0..self.n {
            for y in 0..self.n {
                out.set(perm[x], perm[y], perm[self.get(x, y)]);
            }
        }
        out
    }
}

impl fmt::Debug for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// A binary relation on `0..n`, stored densely.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl Relation {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut bits = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                bits.push(f(x, y));
            }
        }
        Relation { n, bits }
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(Relation {
            n,
            bits: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn holds(&self, x: usize, y: usize) -> bool {
        self.bits[x * self.n + y]
    }

    pub fn transpose(&self) -> Relation {
        Relation::from_fn(self.n, |x, y| self.holds(y, x))
    }

    pub fn to_rows(&self) -> Vec<Vec<bool>> {
        self.bits
            .chunks(self.n.max(1))
            .take(self.n)
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn relabel(&self, perm: &[usize]) -> Relation {
        let mut bits = vec![false; self.n * self.n];
        for x in 0..self.n {
            for y in 0..self.n {
                bits[perm[x] * self.n + perm[y]] = self.holds(x, y);
            }
        }
        Relation { n: self.n, bits }
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect();
        f.debug_list().entries(rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabel_swaps_entries() {
        let t = Table::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let r = t.relabel(&[1, 0]);
        // new identity is 1
        assert_eq!(r.to_rows(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Table::from_rows(&[vec![0, 1], vec![1]]).is_none());
        assert!(Relation::from_rows(&[vec![true], vec![true, false]]).is_none());
    }
}
