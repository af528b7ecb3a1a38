use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;

use super::alphabet::Alphabet;
use super::poly::NCPolynomial;
use super::word::Word;
use crate::scalar::Scalar;

/// Element of the `R`-fold tensor power of the free algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<const R: usize> {
    terms: BTreeMap<[Word; R], Scalar>,
}

/// Rank-2 tensors carry coproducts.
pub type TensorElement = Tensor<2>;
pub type Tensor3 = Tensor<3>;

impl<const R: usize> Default for Tensor<R> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<const R: usize> Tensor<R> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn simple(legs: [Word; R], c: Scalar) -> Self {
        let mut t = Self::zero();
        t.add_term(legs, c);
        t
    }

    pub fn add_term(&mut self, legs: [Word; R], c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(legs) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Word; R], &Scalar)> {
        self.terms.iter()
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        for (k, x) in &other.terms {
            self.add_term(k.clone(), x * c);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::from_integer(1.into()));
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Leg-wise product in the tensor power algebra.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let legs: [Word; R] = std::array::from_fn(|i| a[i].concat(&b[i]));
                out.add_term(legs, x * y);
            }
        }
        out
    }

    /// Applies a linear map to every leg. `f` maps a word to a polynomial.
    pub fn map_legs<E, F>(&self, mut f: F) -> Result<Self, E>
    where
        F: FnMut(&Word) -> Result<NCPolynomial, E>,
    {
        let mut out = Self::zero();
        for (legs, c) in &self.terms {
            let images = legs.iter().map(&mut f).collect::<Result<Vec<_>, E>>()?;
            expand_product(&images, c, &mut out);
        }
        Ok(out)
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(legs, c)| {
                let parts: Vec<_> = legs.iter().map(|w| alphabet.render_word(w)).collect();
                format!("({}) {}", c, parts.join(" ⊗ "))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn expand_product<const R: usize>(images: &[NCPolynomial], c: &Scalar, out: &mut Tensor<R>) {
    fn rec<const R: usize>(
        images: &[NCPolynomial],
        i: usize,
        legs: &mut Vec<Word>,
        c: Scalar,
        out: &mut Tensor<R>,
    ) {
        if i == images.len() {
            let arr: [Word; R] = std::array::from_fn(|k| legs[k].clone());
            out.add_term(arr, c);
            return;
        }
        for (w, x) in images[i].terms() {
            legs.push(w.clone());
            rec(images, i + 1, legs, &c * x, out);
            legs.pop();
        }
    }
    rec(images, 0, &mut Vec::with_capacity(R), c.clone(), out);
}

impl TensorElement {
    pub fn from_pair(left: &NCPolynomial, right: &NCPolynomial) -> Self {
        let mut out = Self::zero();
        for (u, a) in left.terms() {
            for (v, b) in right.terms() {
                out.add_term([u.clone(), v.clone()], a * b);
            }
        }
        out
    }

    /// Multiplication map `m(f ⊗ g)` after applying `f`, `g` leg-wise.
    pub fn contract<E, F, G>(&self, mut f: F, mut g: G) -> Result<NCPolynomial, E>
    where
        F: FnMut(&Word) -> Result<NCPolynomial, E>,
        G: FnMut(&Word) -> Result<NCPolynomial, E>,
    {
        let mut out = NCPolynomial::zero();
        for ([u, v], c) in &self.terms {
            let prod = f(u)?.nc_mul(&g(v)?);
            out.add_scaled(&prod, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::Letter;
    use crate::scalar::int;

    #[test]
    fn leg_products_and_cancellation() {
        let x = Word::letter(Letter(0));
        let y = Word::letter(Letter(1));
        let t = TensorElement::simple([x.clone(), Word::one()], int(1));
        let s = TensorElement::simple([Word::one(), y.clone()], int(2));
        let p = t.mul(&s);
        assert_eq!(p, TensorElement::simple([x.clone(), y.clone()], int(2)));
        assert!(p.sub(&p).is_zero());
    }
}
