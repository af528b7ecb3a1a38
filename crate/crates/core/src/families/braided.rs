use crate::linalg::Matrix;
use crate::scalar::{int, Scalar};

/// Two-dimensional braided vector space, braiding stored as a 4×4 matrix on
/// `x1⊗x1, x1⊗x2, x2⊗x1, x2⊗x2`; column `k` is the image of basis vector `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedSpace {
    pub c: Matrix,
}

impl BraidedSpace {
    /// `c(xi ⊗ x1) = x1 ⊗ xi`, `c(xi ⊗ x2) = (x1 + x2) ⊗ xi`.
    pub fn v12() -> Self {
        let mut c = Matrix::zeros(4, 4);
        let idx = |i: usize, j: usize| 2 * i + j;
        for i in 0..2 {
            c.set(idx(0, i), idx(i, 0), int(1));
            c.set(idx(0, i), idx(i, 1), int(1));
            c.set(idx(1, i), idx(i, 1), int(1));
        }
        Self { c }
    }

    /// Coordinates of `c(xi ⊗ xj)`, indices from 0.
    pub fn apply(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..4).map(|r| self.c.get(r, 2 * i + j).clone()).collect()
    }

    pub fn is_invertible(&self) -> bool {
        self.c.is_invertible()
    }

    /// `(c⊗id)(id⊗c)(c⊗id) = (id⊗c)(c⊗id)(id⊗c)` on `V^{⊗3}`.
    pub fn check_braid_equation(&self) -> bool {
        let id = Matrix::identity(2);
        let c1 = self.c.kron(&id);
        let c2 = id.kron(&self.c);
        c1.mul(&c2).mul(&c1) == c2.mul(&c1).mul(&c2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v12_images() {
        let b = BraidedSpace::v12();
        // c(x1⊗x1) = x1⊗x1
        assert_eq!(b.apply(0, 0), vec![int(1), int(0), int(0), int(0)]);
        // c(x1⊗x2) = x1⊗x1 + x2⊗x1
        assert_eq!(b.apply(0, 1), vec![int(1), int(0), int(1), int(0)]);
        // c(x2⊗x1) = x1⊗x2
        assert_eq!(b.apply(1, 0), vec![int(0), int(1), int(0), int(0)]);
        // c(x2⊗x2) = x1⊗x2 + x2⊗x2
        assert_eq!(b.apply(1, 1), vec![int(0), int(1), int(0), int(1)]);
        assert!(b.is_invertible());
    }

    #[test]
    fn braid_relation() {
        assert!(BraidedSpace::v12().check_braid_equation());
        // a non-braiding: flip plus a rank-one perturbation
        let mut bad = BraidedSpace::v12();
        bad.c.set(3, 0, int(1));
        assert!(!bad.check_braid_equation());
    }
}
