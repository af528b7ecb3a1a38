use crate::rewrite::count_normal_words;

use super::{HopfError, QuotientContext};

/// Reference associated graded algebra `R # kZ^rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reference {
    /// Jordan plane: `s + 1` words of degree `s`.
    JordanPlane { rank: usize },
    /// Tensor algebra on one letter: one word per degree.
    FreeRankOne { rank: usize },
}

/// Number of points of `Z^rank` with `ℓ1` norm exactly `n`, for `n ≤ maxlen`.
pub fn sphere_counts(rank: usize, maxlen: usize) -> Vec<u128> {
    let mut acc = vec![0u128; maxlen + 1];
    acc[0] = 1;
    for _ in 0..rank {
        let mut next = vec![0u128; maxlen + 1];
        for (i, &a) in acc.iter().enumerate() {
            for j in 0..=maxlen - i {
                next[i + j] += a * if j == 0 { 1 } else { 2 };
            }
        }
        acc = next;
    }
    acc
}

/// Per-length word counts of the reference, convolving the braided part
/// with the group part.
pub fn reference_counts(r: Reference, maxlen: usize) -> Vec<u128> {
    let (rank, braided): (usize, fn(usize) -> u128) = match r {
        Reference::JordanPlane { rank } => (rank, |s| s as u128 + 1),
        Reference::FreeRankOne { rank } => (rank, |_| 1),
    };
    let sphere = sphere_counts(rank, maxlen);
    (0..=maxlen).map(|n| (0..=n).map(|s| braided(s) * sphere[n - s]).sum()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatch {
    pub ours: Vec<u128>,
    pub reference: Vec<u128>,
}

impl GradedMatch {
    pub fn holds(&self) -> bool {
        self.ours == self.reference
    }
}

/// Compares per-length normal-word counts of `q` with the reference.
pub fn graded_match(q: &QuotientContext, r: Reference, maxlen: usize) -> Result<GradedMatch, HopfError> {
    q.require(maxlen)?;
    Ok(GradedMatch { ours: count_normal_words(&q.system, maxlen), reference: reference_counts(r, maxlen) })
}
