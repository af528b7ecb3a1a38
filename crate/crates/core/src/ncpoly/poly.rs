use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::alphabet::{Alphabet, Letter};
use super::word::Word;
use super::NcError;
use crate::scalar::Scalar;

/// Finite linear combination of words with exact rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NCPolynomial {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(Word::one(), c)
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, Scalar::one())
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(Word::letter(l))
    }

    /// Product of single letters, e.g. `monomial(&[g, a1])` is `g a1`.
    pub fn monomial(ls: &[Letter]) -> Self {
        Self::word(Word::new(ls.to_vec()))
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Maximal word length; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x * c);
        }
    }

    /// Free-algebra product: bilinear extension of concatenation.
    pub fn nc_mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.nc_mul(self))
    }

    /// Applies the algebra homomorphism determined by `image` on letters.
    pub fn substitute<F>(&self, image: F) -> Result<Self, NcError>
    where
        F: Fn(Letter) -> Option<NCPolynomial>,
    {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for &l in w.letters() {
                let img = image(l).ok_or(NcError::MissingImage(l))?;
                acc = acc.nc_mul(&img);
            }
            out += &acc;
        }
        Ok(out)
    }

    /// Substitution driven by a letter-indexed table.
    pub fn substitute_table(&self, table: &[Option<NCPolynomial>]) -> Result<Self, NcError> {
        self.substitute(|l| table.get(l.index()).cloned().flatten())
    }

    /// Canonical text form: letters separated by spaces, coefficients as
    /// `p/q`, terms in the order given by `key` (largest first).
    pub fn render_with<K: Ord, F: Fn(&Word) -> K>(&self, alphabet: &Alphabet, key: F) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(w, _)| std::cmp::Reverse(key(w)));
        let mut out = String::new();
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if w.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push(' ');
                }
                out.push_str(&alphabet.render_word(w));
            }
        }
        out
    }

    /// Rendering in storage order (deglex over letter ids).
    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.render_with(alphabet, |w| w.clone())
    }
}

impl std::ops::AddAssign<&NCPolynomial> for NCPolynomial {
    fn add_assign(&mut self, rhs: &NCPolynomial) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl std::ops::SubAssign<&NCPolynomial> for NCPolynomial {
    fn sub_assign(&mut self, rhs: &NCPolynomial) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c.clone());
        }
    }
}

impl Add for &NCPolynomial {
    type Output = NCPolynomial;
    fn add(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &NCPolynomial {
    type Output = NCPolynomial;
    fn sub(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &NCPolynomial {
    type Output = NCPolynomial;
    fn mul(self, rhs: &NCPolynomial) -> NCPolynomial {
        self.nc_mul(rhs)
    }
}

impl Neg for &NCPolynomial {
    type Output = NCPolynomial;
    fn neg(self) -> NCPolynomial {
        self.scale(&-Scalar::one())
    }
}

impl Add for NCPolynomial {
    type Output = NCPolynomial;
    fn add(mut self, rhs: NCPolynomial) -> NCPolynomial {
        self += &rhs;
        self
    }
}

impl Sub for NCPolynomial {
    type Output = NCPolynomial;
    fn sub(mut self, rhs: NCPolynomial) -> NCPolynomial {
        self -= &rhs;
        self
    }
}

impl Mul for NCPolynomial {
    type Output = NCPolynomial;
    fn mul(self, rhs: NCPolynomial) -> NCPolynomial {
        self.nc_mul(&rhs)
    }
}

impl Neg for NCPolynomial {
    type Output = NCPolynomial;
    fn neg(self) -> NCPolynomial {
        (&self).neg()
    }
}

impl Mul<&NCPolynomial> for &Scalar {
    type Output = NCPolynomial;
    fn mul(self, rhs: &NCPolynomial) -> NCPolynomial {
        rhs.scale(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    fn setup() -> (Alphabet, Letter, Letter) {
        let mut a = Alphabet::new();
        let (g, _) = a.add_group_gen("g").unwrap();
        let a1 = a.add_skew("a1", Word::letter(g), Word::one()).unwrap();
        (a, g, a1)
    }

    #[test]
    fn unit_is_identity() {
        let (_, g, a1) = setup();
        let p = &NCPolynomial::letter(g) + &NCPolynomial::letter(a1).scale(&q(3, 2));
        assert_eq!(NCPolynomial::one().nc_mul(&p), p);
        assert_eq!(p.nc_mul(&NCPolynomial::one()), p);
    }

    #[test]
    fn product_is_concatenation() {
        let (_, g, a1) = setup();
        let p = NCPolynomial::letter(g).nc_mul(&NCPolynomial::letter(a1));
        assert_eq!(p, NCPolynomial::monomial(&[g, a1]));
    }

    #[test]
    fn difference_of_squares_does_not_collect() {
        // (a1 + g)(a1 - g) = a1a1 - a1g + ga1 - gg
        let (_, g, a1) = setup();
        let x = NCPolynomial::letter(a1);
        let y = NCPolynomial::letter(g);
        let lhs = (&x + &y).nc_mul(&(&x - &y));
        let expected = NCPolynomial::from_terms([
            (Word::new(vec![a1, a1]), int(1)),
            (Word::new(vec![a1, g]), int(-1)),
            (Word::new(vec![g, a1]), int(1)),
            (Word::new(vec![g, g]), int(-1)),
        ]);
        assert_eq!(lhs, expected);
        assert_eq!(lhs.len(), 4);
    }

    #[test]
    fn cancellation_drops_terms() {
        let (_, g, _) = setup();
        let x = NCPolynomial::letter(g);
        assert!((&x - &x).is_zero());
        assert_eq!(x.scale(&int(0)), NCPolynomial::zero());
    }

    #[test]
    fn substitution_squares() {
        let (a, g, a1) = setup();
        let gi = a.inverse(g).unwrap();
        // a1 -> 1/2 g a1 g_inv on a1 a1
        let img = NCPolynomial::monomial(&[g, a1, gi]).scale(&q(1, 2));
        let sq = NCPolynomial::monomial(&[a1, a1]);
        let out = sq.substitute(|l| if l == a1 { Some(img.clone()) } else { None }).unwrap();
        assert_eq!(out, NCPolynomial::monomial(&[g, a1, gi, g, a1, gi]).scale(&q(1, 4)));
        let err = NCPolynomial::letter(g).substitute(|l| if l == a1 { Some(img.clone()) } else { None });
        assert!(matches!(err, Err(NcError::MissingImage(l)) if l == g));
    }

    #[test]
    fn identity_substitution() {
        let (_, g, a1) = setup();
        let p = NCPolynomial::monomial(&[g, a1, a1]).scale(&q(-2, 7)) + NCPolynomial::one();
        assert_eq!(p.substitute(|l| Some(NCPolynomial::letter(l))).unwrap(), p);
    }

    #[test]
    fn rendering() {
        let (a, g, a1) = setup();
        let p = NCPolynomial::from_terms([
            (Word::new(vec![a1, a1]), q(-1, 2)),
            (Word::letter(g), int(1)),
            (Word::one(), int(3)),
        ]);
        assert_eq!(p.render(&a), "-1/2 a1 a1 + g + 3");
        assert_eq!(NCPolynomial::zero().render(&a), "0");
    }
}
