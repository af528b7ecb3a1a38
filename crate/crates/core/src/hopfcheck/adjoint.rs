use num_traits::{One, Zero};

use crate::linalg::Matrix;
use crate::ncpoly::{NCPolynomial, Word};
use crate::scalar::Scalar;

use super::{HopfError, QuotientContext};

/// `γ_h(p) = h p h⁻¹ − p`, reduced.
pub fn adjoint_apply(h: &Word, p: &NCPolynomial, q: &QuotientContext) -> Result<NCPolynomial, HopfError> {
    q.require(p.degree() + 2 * h.degree())?;
    let hinv = q.system.alphabet().inverse_word(h)?;
    let conj = NCPolynomial::word(h.clone()).nc_mul(p).nc_mul(&NCPolynomial::word(hinv));
    q.nf(&(&conj - p))
}

/// Matrix of `x ↦ h x h⁻¹` on `(1 − g, a1, a2)` or `(1 − γ, a)`; column `j`
/// holds the coordinates of the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointMatrix {
    pub m: Matrix,
}

impl AdjointMatrix {
    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    /// Entry `(1,2)`: `γ_h(a1) = ζ(h)(1 − g)`.
    pub fn zeta(&self) -> Scalar {
        self.m.get(0, 1).clone()
    }

    /// Entry `(1,3)`.
    pub fn xi(&self) -> Option<Scalar> {
        (self.dim() == 3).then(|| self.m.get(0, 2).clone())
    }

    /// Entry `(2,3)`.
    pub fn eta(&self) -> Option<Scalar> {
        (self.dim() == 3).then(|| self.m.get(1, 2).clone())
    }

    pub fn is_unipotent_upper(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let v = self.m.get(i, j);
                match i.cmp(&j) {
                    std::cmp::Ordering::Equal => v.is_one(),
                    std::cmp::Ordering::Greater => v.is_zero(),
                    std::cmp::Ordering::Less => true,
                }
            })
        })
    }

    pub fn mul(&self, other: &AdjointMatrix) -> AdjointMatrix {
        AdjointMatrix { m: self.m.mul(&other.m) }
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.m.to_rows()
    }
}

fn basis(q: &QuotientContext) -> Result<Vec<NCPolynomial>, HopfError> {
    let p = &q.presentation;
    let g = p.g.as_ref().ok_or(HopfError::NoSkewBasis)?;
    if p.skew_basis.is_empty() {
        return Err(HopfError::NoSkewBasis);
    }
    let mut b = vec![&NCPolynomial::one() - &NCPolynomial::word(g.clone())];
    b.extend(p.skew_basis.iter().map(|&l| NCPolynomial::letter(l)));
    Ok(b)
}

fn coordinates(v: &NCPolynomial, q: &QuotientContext, basis: &[NCPolynomial]) -> Result<Vec<Scalar>, HopfError> {
    let mut coords = vec![v.coeff(&Word::one())];
    coords.extend(q.presentation.skew_basis.iter().map(|&l| v.coeff(&Word::letter(l))));
    let mut rest = v.clone();
    for (c, b) in coords.iter().zip(basis) {
        rest.add_scaled(b, &-c);
    }
    if rest.is_zero() {
        Ok(coords)
    } else {
        Err(HopfError::BasisExpressFailure(q.render(&rest)))
    }
}

pub fn adjoint_matrix(h: &Word, q: &QuotientContext) -> Result<AdjointMatrix, HopfError> {
    let b = basis(q)?;
    let mut m = Matrix::zeros(b.len(), b.len());
    for (j, x) in b.iter().enumerate() {
        let image = x + &adjoint_apply(h, x, q)?;
        for (i, c) in coordinates(&image, q, &b)?.into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(AdjointMatrix { m })
}

/// [`adjoint_matrix`] for the group element with the given exponent vector.
pub fn adjoint_matrix_exp(h: &[i64], q: &QuotientContext) -> Result<AdjointMatrix, HopfError> {
    adjoint_matrix(&q.presentation.group_word(h)?, q)
}
