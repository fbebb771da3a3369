use super::AnalyzeError;
use crate::finalg::FinRL;

/// First `x` with `x^m ≰ x^n`.
pub fn knotted_violation(r: &FinRL, m: usize, n: usize) -> Result<Option<usize>, AnalyzeError> {
    if m == n {
        return Err(AnalyzeError::TrivialKnot(m));
    }
    Ok((0..r.size()).find(|&x| !r.leq(r.pow(x, m), r.pow(x, n))))
}

pub fn check_knotted(r: &FinRL, m: usize, n: usize) -> Result<bool, AnalyzeError> {
    Ok(knotted_violation(r, m, n)?.is_none())
}

pub fn validate_partition(a: &[usize]) -> Result<(), AnalyzeError> {
    let bad = |why: &str| Err(AnalyzeError::BadPartition(format!("{a:?}: {why}")));
    if a.len() < 2 {
        return bad("needs at least two parts");
    }
    if a.iter().sum::<usize>() != a.len() {
        return bad("parts must sum to the number of parts");
    }
    if a.iter().all(|&p| p == 1) {
        return bad("partition is constant");
    }
    Ok(())
}

/// First `(x, y₁, …, yₙ)` with `x y₁ x ⋯ yₙ x ≠ x^{a₀} y₁ x^{a₁} ⋯ yₙ x^{aₙ}`.
pub fn weak_commutativity_violation(
    r: &FinRL,
    a: &[usize],
) -> Result<Option<Vec<usize>>, AnalyzeError> {
    validate_partition(a)?;
    let size = r.size();
    let k = a.len();
    let mut tuple = vec![0; k];
    loop {
        let x = tuple[0];
        let ys = &tuple[1..];
        let mut lhs = x;
        let mut rhs = r.pow(x, a[0]);
        for (i, &y) in ys.iter().enumerate() {
            lhs = r.mul(r.mul(lhs, y), x);
            rhs = r.mul(r.mul(rhs, y), r.pow(x, a[i + 1]));
        }
        if lhs != rhs {
            return Ok(Some(tuple));
        }
        let Some(i) = (0..k).rev().find(|&i| tuple[i] + 1 < size) else {
            return Ok(None);
        };
        tuple[i] += 1;
        tuple[i + 1..].iter_mut().for_each(|t| *t = 0);
    }
}

pub fn check_weak_commutativity(r: &FinRL, a: &[usize]) -> Result<bool, AnalyzeError> {
    Ok(weak_commutativity_violation(r, a)?.is_none())
}
