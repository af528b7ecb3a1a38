use std::cmp::Ordering;

use crate::ncpoly::{Alphabet, Letter, NCPolynomial, Word};
use crate::scalar::Scalar;

use super::RewriteError;

/// Admissible order on words: total degree, then filtration weight (the
/// number of skew-primitive letters), then lexicographic by precedence.
///
/// With all weights zero this is plain degree-lexicographic order. The
/// weight tie-break is what lets `g a1` lead `g a1 - a1 g - g + g g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    rank: Vec<u16>,
    weight: Vec<u32>,
}

/// Sort key realizing a [`MonomialOrder`] as a derived `Ord`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderKey {
    degree: u32,
    weight: u32,
    ranks: Vec<u16>,
}

impl MonomialOrder {
    /// `precedence` lists every letter once, highest first.
    pub fn new(precedence: &[Letter], weight: Vec<u32>) -> Result<Self, RewriteError> {
        let n = weight.len();
        if precedence.len() != n {
            return Err(RewriteError::PrecedenceNotTotal(format!(
                "precedence has {} letters, alphabet has {n}",
                precedence.len()
            )));
        }
        let mut rank = vec![u16::MAX; n];
        for (pos, l) in precedence.iter().enumerate() {
            let slot = rank
                .get_mut(l.index())
                .ok_or_else(|| RewriteError::PrecedenceNotTotal(format!("letter #{} out of range", l.0)))?;
            if *slot != u16::MAX {
                return Err(RewriteError::PrecedenceNotTotal(format!("letter #{} listed twice", l.0)));
            }
            *slot = (n - 1 - pos) as u16;
        }
        Ok(Self { rank, weight })
    }

    pub fn deglex(precedence: &[Letter]) -> Result<Self, RewriteError> {
        Self::new(precedence, vec![0; precedence.len()])
    }

    /// Weights from Hopf roles: skew-primitive letters weigh 1, group letters 0.
    pub fn for_alphabet(alphabet: &Alphabet, precedence: &[Letter]) -> Result<Self, RewriteError> {
        let weight = alphabet.letters().map(|l| u32::from(!alphabet.is_group(l))).collect();
        Self::new(precedence, weight)
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    /// Letters from highest to lowest precedence.
    pub fn precedence(&self) -> Vec<Letter> {
        let mut ls: Vec<Letter> = (0..self.rank.len()).map(|i| Letter(i as u16)).collect();
        ls.sort_by_key(|l| std::cmp::Reverse(self.rank[l.index()]));
        ls
    }

    pub fn key(&self, w: &Word) -> OrderKey {
        let ls = w.letters();
        OrderKey {
            degree: ls.len() as u32,
            weight: ls.iter().map(|l| self.weight.get(l.index()).copied().unwrap_or(0)).sum(),
            ranks: ls.iter().map(|l| self.rank.get(l.index()).copied().unwrap_or(0)).collect(),
        }
    }

    pub fn cmp(&self, a: &Word, b: &Word) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn leading<'a>(&self, p: &'a NCPolynomial) -> Option<(&'a Word, &'a Scalar)> {
        p.terms().max_by(|(a, _), (b, _)| self.cmp(a, b))
    }

    /// Canonical rendering: terms sorted by this order, largest first.
    pub fn render(&self, p: &NCPolynomial, alphabet: &Alphabet) -> String {
        p.render_with(alphabet, |w| self.key(w))
    }
}
