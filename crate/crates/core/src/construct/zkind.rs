use std::fmt;

use serde::{Deserialize, Serialize};

/// The four possible zero-subsemigroups `Z ∪ {⊥}`.
///
/// Local indices: 0 is ⊥, then the nonzero elements in order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ZKind {
    /// `{⊥}` alone.
    Trivial,
    /// `{⊥, b}` with `b² = ⊥`.
    Nilpotent,
    /// `{⊥, b₁, b₂}` with `bᵢ² = bᵢ` and `b₁b₂ = b₂b₁ = ⊥`.
    TwoIdempotents,
    /// `{⊥, b}` with `b² = b`.
    Idempotent,
}

impl ZKind {
    pub const ALL: [ZKind; 4] = [
        ZKind::Trivial,
        ZKind::Nilpotent,
        ZKind::TwoIdempotents,
        ZKind::Idempotent,
    ];

    pub fn tag(self) -> u8 {
        match self {
            ZKind::Trivial => 0,
            ZKind::Nilpotent => 1,
            ZKind::TwoIdempotents => 2,
            ZKind::Idempotent => 3,
        }
    }

    pub fn from_tag(tag: u8) -> Option<Self> {
        ZKind::ALL.get(tag as usize).copied()
    }

    /// Number of nonzero elements.
    pub fn nonzero(self) -> usize {
        match self {
            ZKind::Trivial => 0,
            ZKind::Nilpotent | ZKind::Idempotent => 1,
            ZKind::TwoIdempotents => 2,
        }
    }

    /// Product of local indices.
    pub fn mul(self, x: usize, y: usize) -> usize {
        match self {
            ZKind::Nilpotent => 0,
            _ if x == y => x,
            _ => 0,
        }
    }

    /// `b\z` for a nonzero `b` and any `z`, both local, inside `Z ∪ {⊥, ⊤}`
    /// where ⊤ acts as identity. `None` stands for ⊤.
    pub fn ldiv_nonzero(self, b: usize, z: usize) -> Option<usize> {
        if b == z {
            return None;
        }
        match self {
            // b\⊥ = b
            ZKind::Nilpotent => Some(b),
            // b₁\⊥ = b₂ and b₁\b₂ = b₂
            ZKind::TwoIdempotents => Some(3 - b),
            // b\⊥ = ⊥
            ZKind::Idempotent => Some(0),
            ZKind::Trivial => unreachable!("no nonzero elements"),
        }
    }

    pub fn names(self) -> Vec<&'static str> {
        match self {
            ZKind::Trivial => vec![],
            ZKind::Nilpotent | ZKind::Idempotent => vec!["b"],
            ZKind::TwoIdempotents => vec!["b1", "b2"],
        }
    }

    /// Recognizes the kind from a product table on local indices.
    pub fn recognize(table: &[Vec<usize>]) -> Option<Self> {
        ZKind::ALL.into_iter().find(|k| {
            table.len() == k.nonzero() + 1
                && (0..table.len()).all(|x| (0..table.len()).all(|y| table[x][y] == k.mul(x, y)))
        })
    }
}

impl fmt::Display for ZKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}
