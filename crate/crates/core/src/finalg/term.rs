use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use super::algebra::FinRL;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    One,
    Bot,
    Top,
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    /// `a\b`
    Ldiv(Box<Term>, Box<Term>),
    /// `a/b`
    Rdiv(Box<Term>, Box<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("variable {0} has no value")]
    UnboundVariable(String),
    #[error("constant {0} needs a bounded algebra")]
    UnboundedConstant(&'static str),
}

pub type Assignment = BTreeMap<String, usize>;

pub fn var(name: &str) -> Term {
    Term::Var(name.to_string())
}

impl Term {
    pub fn meet(self, o: Term) -> Term {
        Term::Meet(Box::new(self), Box::new(o))
    }

    pub fn join(self, o: Term) -> Term {
        Term::Join(Box::new(self), Box::new(o))
    }

    pub fn mul(self, o: Term) -> Term {
        Term::Mul(Box::new(self), Box::new(o))
    }

    /// `self\o`
    pub fn ldiv(self, o: Term) -> Term {
        Term::Ldiv(Box::new(self), Box::new(o))
    }

    /// `self/o`
    pub fn rdiv(self, o: Term) -> Term {
        Term::Rdiv(Box::new(self), Box::new(o))
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::One | Term::Bot | Term::Top => {}
            Term::Meet(a, b)
            | Term::Join(a, b)
            | Term::Mul(a, b)
            | Term::Ldiv(a, b)
            | Term::Rdiv(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn eval(&self, alg: &FinRL, asg: &Assignment) -> Result<usize, TermError> {
        Ok(match self {
            Term::Var(v) => *asg
                .get(v)
                .ok_or_else(|| TermError::UnboundVariable(v.clone()))?,
            Term::One => alg.unit(),
            Term::Bot => alg.bot().ok_or(TermError::UnboundedConstant("bot"))?,
            Term::Top => alg.top().ok_or(TermError::UnboundedConstant("top"))?,
            Term::Meet(a, b) => alg.meet(a.eval(alg, asg)?, b.eval(alg, asg)?),
            Term::Join(a, b) => alg.join(a.eval(alg, asg)?, b.eval(alg, asg)?),
            Term::Mul(a, b) => alg.mul(a.eval(alg, asg)?, b.eval(alg, asg)?),
            Term::Ldiv(a, b) => alg.ldiv(a.eval(alg, asg)?, b.eval(alg, asg)?),
            Term::Rdiv(a, b) => alg.rdiv(a.eval(alg, asg)?, b.eval(alg, asg)?),
        })
    }
}

pub fn eval_term(alg: &FinRL, t: &Term, asg: &Assignment) -> Result<usize, TermError> {
    t.eval(alg, asg)
}

/// Left conjugate `x\(a x) ∧ 1`.
pub fn left_conjugate(x: Term, a: Term) -> Term {
    x.clone().ldiv(a.mul(x)).meet(Term::One)
}

/// Right conjugate `(x a)/x ∧ 1`.
pub fn right_conjugate(x: Term, a: Term) -> Term {
    x.clone().mul(a).rdiv(x).meet(Term::One)
}

/// `r(x) = (1 ∨ x)(1 ∧ x) ∧ (1 ∨ 1/x)(1 ∧ 1/x)`
pub fn r_term(x: Term) -> Term {
    let inv = Term::One.rdiv(x.clone());
    let left = Term::One.join(x.clone()).mul(Term::One.meet(x));
    let right = Term::One.join(inv.clone()).mul(Term::One.meet(inv));
    left.meet(right)
}

/// `x ↔ y = x\y ∧ y\x ∧ 1`
pub fn biimplication(x: Term, y: Term) -> Term {
    x.clone().ldiv(y.clone()).meet(y.ldiv(x)).meet(Term::One)
}

/// `t(x,y,z) = r(x↔y) z ∨ (r(x↔y)\⊥ ∧ 1) x`
pub fn discriminator_term(x: Term, y: Term, z: Term) -> Term {
    let r = r_term(biimplication(x.clone(), y));
    r.clone()
        .mul(z)
        .join(r.ldiv(Term::Bot).meet(Term::One).mul(x))
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::One => write!(f, "1"),
            Term::Bot => write!(f, "bot"),
            Term::Top => write!(f, "top"),
            Term::Meet(a, b) => write!(f, "({a} & {b})"),
            Term::Join(a, b) => write!(f, "({a} | {b})"),
            Term::Mul(a, b) => write!(f, "({a} * {b})"),
            Term::Ldiv(a, b) => write!(f, "({a} \\ {b})"),
            Term::Rdiv(a, b) => write!(f, "({a} / {b})"),
        }
    }
}
