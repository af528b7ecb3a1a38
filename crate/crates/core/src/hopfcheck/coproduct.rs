use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::linalg::Matrix;
use crate::ncpoly::{antipode_apply, counit_eval, free_coproduct, word_antipode, word_coproduct, word_counit};
use crate::ncpoly::{NCPolynomial, TensorElement, Word};
use crate::rewrite::enumerate_normal_words;
use crate::scalar::Scalar;

use super::{CheckFailure, HopfError, QuotientContext};

/// `Δ(p)` computed in the free algebra, each leg then reduced.
pub fn coproduct_in_quotient(p: &NCPolynomial, q: &QuotientContext) -> Result<TensorElement, HopfError> {
    q.require(p.degree())?;
    let t = free_coproduct(p, q.system.alphabet())?;
    q.nf_tensor(&t)
}

fn skew_defect(p: &NCPolynomial, g_left: &Word, q: &QuotientContext) -> Result<TensorElement, HopfError> {
    let d = coproduct_in_quotient(p, q)?;
    let p = q.nf(p)?;
    let gl = q.nf(&NCPolynomial::word(g_left.clone()))?;
    let mut expected = TensorElement::from_pair(&p, &NCPolynomial::one());
    expected.add_scaled(&TensorElement::from_pair(&gl, &p), &Scalar::one());
    Ok(d.sub(&q.nf_tensor(&expected)?))
}

/// `Δ(p) = p⊗1 + gL⊗p` in the quotient.
pub fn is_skew_primitive(p: &NCPolynomial, g_left: &Word, q: &QuotientContext) -> Result<bool, HopfError> {
    Ok(skew_defect(p, g_left, q)?.is_zero())
}

fn max_relation_degree(q: &QuotientContext) -> usize {
    q.presentation.relations.iter().map(NCPolynomial::degree).max().unwrap_or(0)
}

/// Relations whose counit is nonzero or whose leg-wise reduced coproduct
/// does not vanish.
pub fn coproduct_failures(q: &QuotientContext) -> Result<Vec<CheckFailure>, HopfError> {
    q.require(2 * max_relation_degree(q))?;
    let alphabet = q.system.alphabet();
    let mut out = Vec::new();
    for (i, r) in q.presentation.relations.iter().enumerate() {
        let e = counit_eval(r, alphabet)?;
        if !e.is_zero() {
            out.push(CheckFailure { label: format!("counit of relation {i}"), witness: e.to_string() });
        }
        let d = coproduct_in_quotient(r, q)?;
        if !d.is_zero() {
            out.push(CheckFailure { label: format!("coproduct of relation {i}"), witness: q.render_tensor(&d) });
        }
    }
    Ok(out)
}

pub fn coproduct_descends(q: &QuotientContext) -> Result<bool, HopfError> {
    Ok(coproduct_failures(q)?.is_empty())
}

/// Words of degree at most this are tested against the antipode axioms.
const ANTIPODE_WORD_DEGREE: usize = 3;

/// `S(r) ∈ I` for each relation, and both antipode axioms on the normal
/// words of degree at most 3.
pub fn antipode_failures(q: &QuotientContext) -> Result<Vec<CheckFailure>, HopfError> {
    q.require(2 * max_relation_degree(q).max(ANTIPODE_WORD_DEGREE))?;
    let alphabet = q.system.alphabet();
    let mut out = Vec::new();
    for (i, r) in q.presentation.relations.iter().enumerate() {
        let s = q.nf(&antipode_apply(r, alphabet)?)?;
        if !s.is_zero() {
            out.push(CheckFailure { label: format!("antipode of relation {i}"), witness: q.render(&s) });
        }
    }
    let layers = enumerate_normal_words(&q.system, &q.certificate, ANTIPODE_WORD_DEGREE)?;
    for w in layers.iter().flatten() {
        let d = word_coproduct(w, alphabet)?;
        let eps = NCPolynomial::constant(word_counit(w, alphabet)?);
        let s_id = d.contract(|u| word_antipode(u, alphabet), |v| Ok(NCPolynomial::word(v.clone())))?;
        let id_s = d.contract(|u| Ok(NCPolynomial::word(u.clone())), |v| word_antipode(v, alphabet))?;
        for (side, m) in [("m(S⊗id)Δ", s_id), ("m(id⊗S)Δ", id_s)] {
            let r = q.nf(&(&m - &eps))?;
            if !r.is_zero() {
                out.push(CheckFailure {
                    label: format!("{side} on {}", alphabet.render_word(w)),
                    witness: q.render(&r),
                });
            }
        }
    }
    Ok(out)
}

pub fn antipode_descends(q: &QuotientContext) -> Result<bool, HopfError> {
    Ok(antipode_failures(q)?.is_empty())
}

/// Basis of `{p ∈ span of normal words of degree ≤ maxdeg : Δ(p) = p⊗1 + gL⊗p}`,
/// by an exact kernel computation over normal-word coordinates.
pub fn skew_primitive_space(q: &QuotientContext, g_left: &Word, maxdeg: usize) -> Result<Vec<NCPolynomial>, HopfError> {
    q.require(2 * maxdeg.max(g_left.degree()))?;
    let words: Vec<Word> = enumerate_normal_words(&q.system, &q.certificate, maxdeg)?.into_iter().flatten().collect();
    let mut defects = Vec::with_capacity(words.len());
    let mut rows: BTreeMap<[Word; 2], usize> = BTreeMap::new();
    for w in &words {
        let d = skew_defect(&NCPolynomial::word(w.clone()), g_left, q)?;
        for (legs, _) in d.terms() {
            let n = rows.len();
            rows.entry(legs.clone()).or_insert(n);
        }
        defects.push(d);
    }
    let mut m = Matrix::zeros(rows.len(), words.len());
    for (j, d) in defects.iter().enumerate() {
        for (legs, c) in d.terms() {
            m.set(rows[legs], j, c.clone());
        }
    }
    Ok(m
        .kernel()
        .into_iter()
        .map(|v| {
            NCPolynomial::from_terms(words.iter().cloned().zip(v).filter(|(_, c): &(Word, Scalar)| !c.is_zero()))
        })
        .collect())
}
