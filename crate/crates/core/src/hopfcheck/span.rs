use num_traits::Zero;

use crate::ncpoly::{NCPolynomial, Word};
use crate::scalar::one;

/// Incremental echelon basis of a span of polynomials, coordinates being
/// the words. Each basis vector remembers which combination of inserted
/// tags produced it, so a dependency comes with an explicit relation.
#[derive(Clone, Debug, Default)]
pub struct PolySpan {
    // (pivot word, vector with pivot coefficient 1, tag combination)
    basis: Vec<(Word, NCPolynomial, NCPolynomial)>,
}

impl PolySpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `v` against the basis; returns the remainder and the tag
    /// combination subtracted along the way.
    pub fn reduce(&self, v: &NCPolynomial) -> (NCPolynomial, NCPolynomial) {
        let mut r = v.clone();
        let mut used = NCPolynomial::zero();
        for (pivot, b, tag) in &self.basis {
            let c = r.coeff(pivot);
            if !c.is_zero() {
                r.add_scaled(b, &-&c);
                used.add_scaled(tag, &c);
            }
        }
        (r, used)
    }

    pub fn contains(&self, v: &NCPolynomial) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Adds `v`, labelled by `tag`. On dependency returns the nonzero tag
    /// combination whose vector vanishes.
    pub fn insert(&mut self, v: &NCPolynomial, tag: &NCPolynomial) -> Result<(), NCPolynomial> {
        let (r, used) = self.reduce(v);
        let combo = tag - &used;
        let Some((pivot, c)) = r.terms().last().map(|(w, c)| (w.clone(), c.clone())) else {
            return Err(combo);
        };
        let inv = one() / c;
        let r = r.scale(&inv);
        let combo = combo.scale(&inv);
        // keep earlier vectors free of the new pivot
        for (_, b, t) in &mut self.basis {
            let k = b.coeff(&pivot);
            if !k.is_zero() {
                b.add_scaled(&r, &-&k);
                t.add_scaled(&combo, &-&k);
            }
        }
        self.basis.push((pivot, r, combo));
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::Letter;
    use crate::scalar::int;

    #[test]
    fn dependency_reports_relation() {
        let x = NCPolynomial::letter(Letter(0));
        let y = NCPolynomial::letter(Letter(1));
        let tags: Vec<_> = (2..5).map(|i| NCPolynomial::letter(Letter(i))).collect();
        let mut s = PolySpan::new();
        s.insert(&(&x + &y), &tags[0]).unwrap();
        s.insert(&(&x - &y), &tags[1]).unwrap();
        let rel = s.insert(&x, &tags[2]).unwrap_err();
        // x = ½(x+y) + ½(x−y)
        assert_eq!(rel.coeff(&Word::letter(Letter(4))), int(1));
        assert_eq!(rel.len(), 3);
        assert!(s.contains(&y));
        assert_eq!(s.dim(), 2);
    }
}
