use std::fmt;

use serde::Serialize;

use super::frame::{galois_closure, Frame};
use super::galois::{build_galois_algebra, GaloisAlgebra};
use super::FramesError;
use crate::analyze::{
    check_knotted, check_weak_commutativity, knotted_violation, weak_commutativity_violation,
};
use crate::finalg::{induced_partial, FinRL, Report};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingInstance {
    pub op: &'static str,
    pub x: usize,
    pub y: usize,
    pub value: usize,
    pub preserved: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingReport {
    pub b: Vec<usize>,
    pub w: Vec<usize>,
    pub w_plus_size: usize,
    /// `(b, index of γ({b}) in W⁺)`.
    pub images: Vec<(usize, usize)>,
    pub injective: bool,
    pub instances: Vec<EmbeddingInstance>,
}

impl EmbeddingReport {
    pub fn ok(&self) -> bool {
        self.injective && self.instances.iter().all(|i| i.preserved)
    }
}

/// Checks the map `b ↦ γ({b})` against every defined operation of the
/// partial subalgebra on `B`, without failing early.
pub fn embedding_report(frame: &Frame, plus: &GaloisAlgebra) -> EmbeddingReport {
    let a = frame.algebra();
    let b = frame.b().to_vec();
    let image = |x: usize| {
        let s = galois_closure(frame, &frame.set_of(&[x]));
        plus.index_of(&s).expect("closures are closed")
    };
    let images: Vec<(usize, usize)> = b.iter().map(|&x| (x, image(x))).collect();
    let mut targets: Vec<usize> = images.iter().map(|&(_, i)| i).collect();
    targets.sort_unstable();
    targets.dedup();
    let injective = targets.len() == images.len();
    let img = |x: usize| images.iter().find(|&&(y, _)| y == x).expect("in B").1;
    let w = plus.algebra();
    let instances = induced_partial(a, &b)
        .defined()
        .into_iter()
        .map(|(op, x, y, v)| EmbeddingInstance {
            op: op.symbol(),
            x,
            y,
            value: v,
            preserved: op.apply(w, img(x), img(y)) == img(v),
        })
        .collect();
    EmbeddingReport {
        b: b.clone(),
        w: frame.w().to_vec(),
        w_plus_size: w.size(),
        images,
        injective,
        instances,
    }
}

/// Builds `W_{A,B}⁺` and verifies that the partial subalgebra on `B` embeds.
pub fn check_fep_embedding(
    a: &FinRL,
    b: &[usize],
) -> Result<(GaloisAlgebra, EmbeddingReport), FramesError> {
    let frame = Frame::new(a, b)?;
    let plus = build_galois_algebra(&frame)?;
    let report = embedding_report(&frame, &plus);
    if !report.injective {
        return Err(FramesError::EmbeddingFailure(
            "map b -> γ({b}) is not injective".into(),
        ));
    }
    if let Some(i) = report.instances.iter().find(|i| !i.preserved) {
        return Err(FramesError::EmbeddingFailure(format!(
            "{} not preserved at ({}, {})",
            i.op, i.x, i.y
        )));
    }
    Ok((plus, report))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum IdentitySpec {
    /// `x^m ≤ x^n`
    Knotted {
        m: usize,
        n: usize,
    },
    /// `x y₁ x ⋯ yₙ x = x^{a₀} y₁ ⋯ yₙ x^{aₙ}`
    WeakCommutativity(Vec<usize>),
    Commutative,
}

impl fmt::Display for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentitySpec::Knotted { m, n } => write!(f, "knotted x^{m}<=x^{n}"),
            IdentitySpec::WeakCommutativity(a) => {
                let parts: Vec<String> = a.iter().map(|p| p.to_string()).collect();
                write!(f, "weak-commutativity ({})", parts.join(","))
            }
            IdentitySpec::Commutative => f.write_str("commutativity"),
        }
    }
}

fn commutativity_violation(r: &FinRL) -> Option<Vec<usize>> {
    let n = r.size();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| r.mul(x, y) != r.mul(y, x))
        .map(|(x, y)| vec![x, y])
}

impl IdentitySpec {
    pub fn holds(&self, r: &FinRL) -> Result<bool, FramesError> {
        Ok(match self {
            IdentitySpec::Knotted { m, n } => check_knotted(r, *m, *n)?,
            IdentitySpec::WeakCommutativity(a) => check_weak_commutativity(r, a)?,
            IdentitySpec::Commutative => r.is_commutative(),
        })
    }

    pub fn violation(&self, r: &FinRL) -> Result<Option<Vec<usize>>, FramesError> {
        Ok(match self {
            IdentitySpec::Knotted { m, n } => knotted_violation(r, *m, *n)?.map(|x| vec![x]),
            IdentitySpec::WeakCommutativity(a) => weak_commutativity_violation(r, a)?,
            IdentitySpec::Commutative => commutativity_violation(r),
        })
    }
}

/// For each identity that holds in `A`, one law in the report recording
/// whether it holds in `W_{A,B}⁺` too.
pub fn check_preservation(
    a: &FinRL,
    b: &[usize],
    identities: &[IdentitySpec],
) -> Result<Report, FramesError> {
    let mut rep = Report::new();
    if identities.is_empty() {
        return Ok(rep);
    }
    let plus = build_galois_algebra(&Frame::new(a, b)?)?;
    for id in identities {
        if id.holds(a)? {
            rep.record(id.to_string(), id.violation(plus.algebra())?);
        }
    }
    Ok(rep)
}
