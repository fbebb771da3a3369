use super::algebra::FinRL;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Meet,
    Join,
    Mul,
    /// `x\y`
    Ldiv,
    /// `x/y`
    Rdiv,
}

impl Op {
    pub const ALL: [Op; 5] = [Op::Meet, Op::Join, Op::Mul, Op::Ldiv, Op::Rdiv];

    pub fn apply(self, a: &FinRL, x: usize, y: usize) -> usize {
        match self {
            Op::Meet => a.meet(x, y),
            Op::Join => a.join(x, y),
            Op::Mul => a.mul(x, y),
            Op::Ldiv => a.ldiv(x, y),
            Op::Rdiv => a.rdiv(x, y),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Op::Meet => "meet",
            Op::Join => "join",
            Op::Mul => "mul",
            Op::Ldiv => "ldiv",
            Op::Rdiv => "rdiv",
        }
    }
}

/// The partial algebra induced on a subset of a finite algebra.
#[derive(Clone, Debug)]
pub struct PartialAlgebra<'a> {
    parent: &'a FinRL,
    inside: Vec<bool>,
}

pub fn induced_partial<'a>(parent: &'a FinRL, subset: &[usize]) -> PartialAlgebra<'a> {
    let mut inside = vec![false; parent.size()];
    for &s in subset {
        inside[s] = true;
    }
    PartialAlgebra { parent, inside }
}

impl<'a> PartialAlgebra<'a> {
    pub fn parent(&self) -> &'a FinRL {
        self.parent
    }

    pub fn contains(&self, x: usize) -> bool {
        self.inside.get(x).copied().unwrap_or(false)
    }

    pub fn elements(&self) -> Vec<usize> {
        (0..self.inside.len()).filter(|&x| self.inside[x]).collect()
    }

    /// `op(x, y)` when both arguments and the result lie in the subset.
    pub fn op(&self, op: Op, x: usize, y: usize) -> Option<usize> {
        if !self.contains(x) || !self.contains(y) {
            return None;
        }
        Some(op.apply(self.parent, x, y)).filter(|&v| self.contains(v))
    }

    /// Every defined instance `(op, x, y, value)` in index order.
    pub fn defined(&self) -> Vec<(Op, usize, usize, usize)> {
        let elems = self.elements();
        let mut out = Vec::new();
        for op in Op::ALL {
            for &x in &elems {
                for &y in &elems {
                    if let Some(v) = self.op(op, x, y) {
                        out.push((op, x, y, v));
                    }
                }
            }
        }
        out
    }

    pub fn is_total(&self, op: Op) -> bool {
        let elems = self.elements();
        elems
            .iter()
            .all(|&x| elems.iter().all(|&y| self.op(op, x, y).is_some()))
    }
}
