//! Hopf structure on quotients `k⟨X⟩/I`: descent of Δ, ε and S, skew-primitive
//! tests, adjoint matrices, Hopf maps and filtration-wise isomorphism checks.

mod adjoint;
mod coproduct;
mod graded;
mod maps;
mod span;

#[cfg(test)]
mod tests;

pub use adjoint::{adjoint_apply, adjoint_matrix, adjoint_matrix_exp, AdjointMatrix};
pub use coproduct::{
    antipode_descends, antipode_failures, coproduct_descends, coproduct_failures, coproduct_in_quotient,
    is_skew_primitive, skew_primitive_space,
};
pub use graded::{graded_match, reference_counts, sphere_counts, GradedMatch, Reference};
pub use maps::{check_hopf_map, check_iso_up_to_degree, hopf_map_failures, HopfMapSpec, IsoFailure, IsoVerdict};
pub use span::PolySpan;

use thiserror::Error;

use crate::families::{AlgebraPresentation, FamilyError};
use crate::ncpoly::{NCPolynomial, NcError, TensorElement};
use crate::rewrite::{ConfluenceCertificate, RewriteError, RewriteSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("no confluence certificate up to degree {0}")]
    NoCertificate(usize),
    #[error("adjoint image leaves the skew-primitive span: {0}")]
    BasisExpressFailure(String),
    #[error("presentation has no (1 - g, a) basis")]
    NoSkewBasis,
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// A presentation together with its completed rewriting system.
#[derive(Clone, Debug)]
pub struct QuotientContext {
    pub presentation: AlgebraPresentation,
    pub system: RewriteSystem,
    pub certificate: ConfluenceCertificate,
}

impl QuotientContext {
    /// Completes the presentation with overlaps checked to `degree`.
    pub fn new(presentation: AlgebraPresentation, degree: usize) -> Result<Self, HopfError> {
        let (system, certificate) = presentation.completed(degree)?;
        Ok(Self { presentation, system, certificate })
    }

    pub fn require(&self, deg: usize) -> Result<(), HopfError> {
        if self.certificate.covers(deg) {
            Ok(())
        } else {
            Err(HopfError::NoCertificate(deg))
        }
    }

    pub fn nf(&self, p: &NCPolynomial) -> Result<NCPolynomial, HopfError> {
        Ok(self.system.normal_form(p)?)
    }

    /// Normal form applied to each leg.
    pub fn nf_tensor(&self, t: &TensorElement) -> Result<TensorElement, HopfError> {
        t.map_legs(|w| self.nf(&NCPolynomial::word(w.clone())))
    }

    pub fn render(&self, p: &NCPolynomial) -> String {
        self.system.render(p)
    }

    pub fn render_tensor(&self, t: &TensorElement) -> String {
        t.render(self.system.alphabet())
    }

    pub fn var(&self, name: &str) -> NCPolynomial {
        self.presentation.var(name)
    }
}

/// A failed identity: what was checked and the nonzero residue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    pub label: String,
    pub witness: String,
}
