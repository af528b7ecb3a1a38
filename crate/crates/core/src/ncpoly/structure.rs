//! Coproduct, counit and antipode of the free algebra, determined by the
//! Hopf roles of its generators.

use num_traits::{One, Zero};

use super::alphabet::{Alphabet, Letter, Role};
use super::poly::NCPolynomial;
use super::tensor::{Tensor3, TensorElement};
use super::word::Word;
use super::NcError;
use crate::scalar::Scalar;

fn letter_coproduct(l: Letter, alphabet: &Alphabet) -> Result<TensorElement, NcError> {
    let w = Word::letter(l);
    Ok(match alphabet.role(l)? {
        Role::GroupGen { .. } | Role::GroupGenInverse { .. } => TensorElement::simple([w.clone(), w], Scalar::one()),
        Role::SkewPrimitive { left, right } => {
            let mut t = TensorElement::simple([w.clone(), right.clone()], Scalar::one());
            t.add_term([left.clone(), w], Scalar::one());
            t
        }
    })
}

/// `Δ(w)` for a single word, as the product of the letter coproducts.
pub fn word_coproduct(w: &Word, alphabet: &Alphabet) -> Result<TensorElement, NcError> {
    let mut acc = TensorElement::simple([Word::one(), Word::one()], Scalar::one());
    for &l in w.letters() {
        acc = acc.mul(&letter_coproduct(l, alphabet)?);
    }
    Ok(acc)
}

/// Coproduct of the free Hopf algebra: group letters are group-like,
/// `SkewPrimitive(g, h)` letters satisfy `Δ(a) = a ⊗ h + g ⊗ a`.
pub fn free_coproduct(p: &NCPolynomial, alphabet: &Alphabet) -> Result<TensorElement, NcError> {
    let mut out = TensorElement::zero();
    for (w, c) in p.terms() {
        out.add_scaled(&word_coproduct(w, alphabet)?, c);
    }
    Ok(out)
}

pub fn word_counit(w: &Word, alphabet: &Alphabet) -> Result<Scalar, NcError> {
    for &l in w.letters() {
        if !alphabet.role(l)?.is_group() {
            return Ok(Scalar::zero());
        }
    }
    Ok(Scalar::one())
}

pub fn counit_eval(p: &NCPolynomial, alphabet: &Alphabet) -> Result<Scalar, NcError> {
    let mut acc = Scalar::zero();
    for (w, c) in p.terms() {
        acc += word_counit(w, alphabet)? * c;
    }
    Ok(acc)
}

pub fn word_antipode(w: &Word, alphabet: &Alphabet) -> Result<NCPolynomial, NcError> {
    let mut acc = NCPolynomial::one();
    for &l in w.letters().iter().rev() {
        let img = match alphabet.role(l)? {
            Role::GroupGen { inverse } => NCPolynomial::letter(*inverse),
            Role::GroupGenInverse { of } => NCPolynomial::letter(*of),
            Role::SkewPrimitive { left, right } => {
                // S(a) = -left^{-1} a right^{-1}
                let li = alphabet.inverse_word(left)?;
                let ri = alphabet.inverse_word(right)?;
                NCPolynomial::term(li.concat(&Word::letter(l)).concat(&ri), -Scalar::one())
            }
        };
        acc = acc.nc_mul(&img);
    }
    Ok(acc)
}

/// Anti-homomorphic antipode of the free Hopf algebra.
pub fn antipode_apply(p: &NCPolynomial, alphabet: &Alphabet) -> Result<NCPolynomial, NcError> {
    let mut out = NCPolynomial::zero();
    for (w, c) in p.terms() {
        out.add_scaled(&word_antipode(w, alphabet)?, c);
    }
    Ok(out)
}

/// `(Δ ⊗ id)` on a rank-2 tensor.
pub fn coproduct_left(t: &TensorElement, alphabet: &Alphabet) -> Result<Tensor3, NcError> {
    let mut out = Tensor3::zero();
    for ([u, v], c) in t.terms() {
        for ([x, y], d) in word_coproduct(u, alphabet)?.terms() {
            out.add_term([x.clone(), y.clone(), v.clone()], c * d);
        }
    }
    Ok(out)
}

/// `(id ⊗ Δ)` on a rank-2 tensor.
pub fn coproduct_right(t: &TensorElement, alphabet: &Alphabet) -> Result<Tensor3, NcError> {
    let mut out = Tensor3::zero();
    for ([u, v], c) in t.terms() {
        for ([x, y], d) in word_coproduct(v, alphabet)?.terms() {
            out.add_term([u.clone(), x.clone(), y.clone()], c * d);
        }
    }
    Ok(out)
}

/// `(ε ⊗ id)` and `(id ⊗ ε)` on a rank-2 tensor.
pub fn counit_left(t: &TensorElement, alphabet: &Alphabet) -> Result<NCPolynomial, NcError> {
    let mut out = NCPolynomial::zero();
    for ([u, v], c) in t.terms() {
        out.add_term(v.clone(), word_counit(u, alphabet)? * c);
    }
    Ok(out)
}

pub fn counit_right(t: &TensorElement, alphabet: &Alphabet) -> Result<NCPolynomial, NcError> {
    let mut out = NCPolynomial::zero();
    for ([u, v], c) in t.terms() {
        out.add_term(u.clone(), word_counit(v, alphabet)? * c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{half, int, q};

    struct Fx {
        a: Alphabet,
        g: Letter,
        gi: Letter,
        a1: Letter,
        a2: Letter,
    }

    fn fx() -> Fx {
        let mut a = Alphabet::new();
        let (g, gi) = a.add_group_gen("g").unwrap();
        let a1 = a.add_skew("a1", Word::letter(g), Word::one()).unwrap();
        let a2 = a.add_skew("a2", Word::letter(g), Word::one()).unwrap();
        Fx { a, g, gi, a1, a2 }
    }

    fn w(ls: &[Letter]) -> Word {
        Word::new(ls.to_vec())
    }

    #[test]
    fn coproduct_of_a1() {
        let f = fx();
        let d = free_coproduct(&NCPolynomial::letter(f.a1), &f.a).unwrap();
        let mut e = TensorElement::simple([w(&[f.a1]), Word::one()], int(1));
        e.add_term([w(&[f.g]), w(&[f.a1])], int(1));
        assert_eq!(d, e);
    }

    #[test]
    fn coproduct_of_a1a2_matches_expansion() {
        // a1a2⊗1 + a1g⊗a2 + ga2⊗a1 + g²⊗a1a2
        let f = fx();
        let d = free_coproduct(&NCPolynomial::monomial(&[f.a1, f.a2]), &f.a).unwrap();
        let mut e = TensorElement::zero();
        e.add_term([w(&[f.a1, f.a2]), Word::one()], int(1));
        e.add_term([w(&[f.a1, f.g]), w(&[f.a2])], int(1));
        e.add_term([w(&[f.g, f.a2]), w(&[f.a1])], int(1));
        e.add_term([w(&[f.g, f.g]), w(&[f.a1, f.a2])], int(1));
        assert_eq!(d, e);
    }

    #[test]
    fn coproduct_with_two_sided_tags() {
        // K in P_{T^-1, T}: Δ(K T^-1) = K T^-1 ⊗ T T^-1 + T^-1 T^-1 ⊗ K T^-1 before cancellation
        let mut a = Alphabet::new();
        let (t, ti) = a.add_group_gen("T").unwrap();
        let k = a.add_skew("K", Word::letter(ti), Word::letter(t)).unwrap();
        let d = free_coproduct(&NCPolynomial::monomial(&[k, ti]), &a).unwrap();
        let mut e = TensorElement::zero();
        e.add_term([w(&[k, ti]), w(&[t, ti])], int(1));
        e.add_term([w(&[ti, ti]), w(&[k, ti])], int(1));
        assert_eq!(d, e);
    }

    #[test]
    fn counit_values() {
        let f = fx();
        assert_eq!(counit_eval(&NCPolynomial::word(Word::power(f.g, 4)), &f.a).unwrap(), int(1));
        let one_minus_g = &NCPolynomial::one() - &NCPolynomial::letter(f.g);
        assert_eq!(counit_eval(&one_minus_g, &f.a).unwrap(), int(0));
        // z = a1a2 - a2a1 - 1/2 a1^2 + a2 + 1/2 a1
        let z = NCPolynomial::from_terms([
            (w(&[f.a1, f.a2]), int(1)),
            (w(&[f.a2, f.a1]), int(-1)),
            (w(&[f.a1, f.a1]), q(-1, 2)),
            (w(&[f.a2]), int(1)),
            (w(&[f.a1]), half()),
        ]);
        assert_eq!(counit_eval(&z, &f.a).unwrap(), int(0));
    }

    #[test]
    fn antipode_on_generators() {
        let f = fx();
        assert_eq!(antipode_apply(&NCPolynomial::letter(f.g), &f.a).unwrap(), NCPolynomial::letter(f.gi));
        assert_eq!(
            antipode_apply(&NCPolynomial::letter(f.a1), &f.a).unwrap(),
            NCPolynomial::term(w(&[f.gi, f.a1]), int(-1))
        );
        // S(g a1) = S(a1) S(g) = -g^-1 a1 g^-1
        assert_eq!(
            antipode_apply(&NCPolynomial::monomial(&[f.g, f.a1]), &f.a).unwrap(),
            NCPolynomial::term(w(&[f.gi, f.a1, f.gi]), int(-1))
        );
    }

    #[test]
    fn antipode_needs_group_inverse() {
        let mut a = Alphabet::new();
        let x = a.add_skew("x", Word::one(), Word::one()).unwrap();
        // primitive letters have empty tags, so this works
        assert!(antipode_apply(&NCPolynomial::letter(x), &a).is_ok());
        assert!(matches!(free_coproduct(&NCPolynomial::letter(Letter(9)), &a), Err(NcError::MissingRole(_))));
    }
}
