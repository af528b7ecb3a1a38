use std::collections::BTreeMap;

use crate::ncpoly::{counit_eval, Alphabet, Letter, NCPolynomial, Word};
use crate::rewrite::{complete, ConfluenceCertificate, MonomialOrder, RewriteSystem};
use crate::scalar::Scalar;

use super::FamilyError;

/// A finitely presented algebra with Hopf roles on its generators.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub name: String,
    pub alphabet: Alphabet,
    pub relations: Vec<NCPolynomial>,
    /// Highest first.
    pub precedence: Vec<Letter>,
    pub params: BTreeMap<String, Scalar>,
    /// Short description of how the presentation was produced.
    pub provenance: String,
    /// Generator/inverse pairs of the free abelian group, in generator order.
    pub group: Vec<(Letter, Letter)>,
    /// The distinguished group-like `g` tagging the skew-primitives.
    pub g: Option<Word>,
    /// Skew-primitive basis used for adjoint matrices: `(a1, a2)` or `(a)`.
    pub skew_basis: Vec<Letter>,
}

impl AlgebraPresentation {
    pub fn letter(&self, name: &str) -> Result<Letter, FamilyError> {
        Ok(self.alphabet.lookup(name)?)
    }

    /// Shorthand for a letter as a polynomial. Panics on unknown names;
    /// meant for the fixed alphabets built in this module.
    pub fn var(&self, name: &str) -> NCPolynomial {
        NCPolynomial::letter(self.alphabet.lookup(name).unwrap_or_else(|_| panic!("no letter `{name}`")))
    }

    pub fn order(&self) -> Result<MonomialOrder, FamilyError> {
        Ok(MonomialOrder::for_alphabet(&self.alphabet, &self.precedence)?)
    }

    pub fn system(&self) -> Result<RewriteSystem, FamilyError> {
        Ok(RewriteSystem::from_relations(self.alphabet.clone(), self.order()?, &self.relations)?)
    }

    pub fn completed(&self, maxdeg: usize) -> Result<(RewriteSystem, ConfluenceCertificate), FamilyError> {
        Ok(complete(&self.system()?, maxdeg)?)
    }

    /// The group element with exponent vector `h` as a word: generators in
    /// order, each raised to its exponent (inverse letters for negatives).
    pub fn group_word(&self, h: &[i64]) -> Result<Word, FamilyError> {
        if h.len() != self.group.len() {
            return Err(FamilyError::Group(crate::groupdata::GroupError::RankMismatch {
                expected: self.group.len(),
                got: h.len(),
            }));
        }
        let mut ls = Vec::new();
        for (&(x, xi), &e) in self.group.iter().zip(h) {
            let l = if e >= 0 { x } else { xi };
            ls.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
        }
        Ok(Word::new(ls))
    }

    /// Relations with nonzero counit; empty for a bialgebra presentation.
    pub fn counit_violations(&self) -> Result<Vec<usize>, FamilyError> {
        let mut bad = Vec::new();
        for (i, r) in self.relations.iter().enumerate() {
            if !num_traits::Zero::is_zero(&counit_eval(r, &self.alphabet)?) {
                bad.push(i);
            }
        }
        Ok(bad)
    }

    pub fn with_extra_relation(mut self, r: NCPolynomial, label: &str) -> Self {
        self.relations.push(r);
        self.provenance = format!("{} + {label}", self.provenance);
        self
    }
}
