use super::AnalyzeError;
use crate::finalg::{discriminator_term, var, Assignment, FinRL, Term};

fn t_term() -> Term {
    discriminator_term(var("x"), var("y"), var("z"))
}

fn eval_with(r: &FinRL, t: &Term, x: usize, y: usize, z: usize) -> usize {
    let asg: Assignment = [("x", x), ("y", y), ("z", z)]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    t.eval(r, &asg).expect("bounded and all variables bound")
}

/// `t(x, y, z) = r(x↔y)·z ∨ (r(x↔y)\⊥ ∧ 1)·x`
pub fn eval_discriminator(r: &FinRL, x: usize, y: usize, z: usize) -> Result<usize, AnalyzeError> {
    if !r.is_bounded() {
        return Err(AnalyzeError::NotBounded);
    }
    Ok(eval_with(r, &t_term(), x, y, z))
}

/// First triple where `t` misbehaves, with the value it produced.
pub fn discriminator_violation(r: &FinRL) -> Result<Option<([usize; 3], usize)>, AnalyzeError> {
    if !r.is_bounded() {
        return Err(AnalyzeError::NotBounded);
    }
    let t = t_term();
    let n = r.size();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let v = eval_with(r, &t, x, y, z);
                let want = if x == y { z } else { x };
                if v != want {
                    return Ok(Some(([x, y, z], v)));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_discriminator(r: &FinRL) -> Result<bool, AnalyzeError> {
    Ok(discriminator_violation(r)?.is_none())
}
