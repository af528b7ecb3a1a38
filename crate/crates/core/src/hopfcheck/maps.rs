use std::collections::HashMap;

use num_traits::One;

use crate::ncpoly::{counit_eval, free_coproduct, Letter, NCPolynomial, NcError, Word};
use crate::rewrite::{count_normal_words, cumulative, enumerate_normal_words};

use super::coproduct::coproduct_in_quotient;
use super::{CheckFailure, HopfError, PolySpan, QuotientContext};

/// Algebra map between two quotients given on generators.
#[derive(Clone, Debug)]
pub struct HopfMapSpec<'a> {
    pub source: &'a QuotientContext,
    pub target: &'a QuotientContext,
    /// Indexed by source letter.
    pub images: Vec<Option<NCPolynomial>>,
}

impl<'a> HopfMapSpec<'a> {
    /// Images by source letter name. A group generator sent to a bare group
    /// word gets its inverse letter mapped to the inverse word unless given.
    pub fn new(
        source: &'a QuotientContext,
        target: &'a QuotientContext,
        assignments: &[(&str, NCPolynomial)],
    ) -> Result<Self, HopfError> {
        let sa = source.system.alphabet();
        let ta = target.system.alphabet();
        let mut images = vec![None; sa.len()];
        for (name, img) in assignments {
            images[sa.lookup(name)?.index()] = Some(img.clone());
        }
        for (x, xi) in source.presentation.group.clone() {
            for (from, to) in [(x, xi), (xi, x)] {
                if images[to.index()].is_some() {
                    continue;
                }
                if let Some(w) = images[from.index()].as_ref().and_then(bare_word) {
                    if let Ok(inv) = ta.inverse_word(&w) {
                        images[to.index()] = Some(NCPolynomial::word(inv));
                    }
                }
            }
        }
        Ok(Self { source, target, images })
    }

    /// Image of a source polynomial, not reduced.
    pub fn apply(&self, p: &NCPolynomial) -> Result<NCPolynomial, HopfError> {
        Ok(p.substitute_table(&self.images)?)
    }

    fn image_degree(&self) -> usize {
        self.images.iter().flatten().map(NCPolynomial::degree).max().unwrap_or(0)
    }

    fn missing(&self) -> Option<Letter> {
        self.images.iter().position(Option::is_none).map(|i| Letter(i as u16))
    }
}

fn bare_word(p: &NCPolynomial) -> Option<Word> {
    let mut it = p.terms();
    match (it.next(), it.next()) {
        (Some((w, c)), None) if c.is_one() => Some(w.clone()),
        _ => None,
    }
}

/// Relations mapping to nonzero elements, generators whose coproduct or
/// counit is not preserved.
pub fn hopf_map_failures(phi: &HopfMapSpec) -> Result<Vec<CheckFailure>, HopfError> {
    if let Some(l) = phi.missing() {
        return Err(NcError::MissingImage(l).into());
    }
    let (s, t) = (phi.source, phi.target);
    let rel_deg = s.presentation.relations.iter().map(NCPolynomial::degree).max().unwrap_or(0);
    t.require(2 * rel_deg.max(1) * phi.image_degree().max(1))?;
    let mut out = Vec::new();
    for (i, r) in s.presentation.relations.iter().enumerate() {
        let img = t.nf(&phi.apply(r)?)?;
        if !img.is_zero() {
            out.push(CheckFailure { label: format!("image of relation {i}"), witness: t.render(&img) });
        }
    }
    let sa = s.system.alphabet();
    for x in sa.letters() {
        let xp = NCPolynomial::letter(x);
        let img = phi.apply(&xp)?;
        let pushed = free_coproduct(&xp, sa)?.map_legs(|w| t.nf(&phi.apply(&NCPolynomial::word(w.clone()))?))?;
        let direct = coproduct_in_quotient(&img, t)?;
        let diff = pushed.sub(&direct);
        if !diff.is_zero() {
            out.push(CheckFailure { label: format!("coproduct at {}", sa.name(x)), witness: t.render_tensor(&diff) });
        }
        let (es, et) = (counit_eval(&xp, sa)?, counit_eval(&img, t.system.alphabet())?);
        if es != et {
            out.push(CheckFailure { label: format!("counit at {}", sa.name(x)), witness: format!("{es} vs {et}") });
        }
    }
    Ok(out)
}

pub fn check_hopf_map(phi: &HopfMapSpec) -> Result<bool, HopfError> {
    Ok(hopf_map_failures(phi)?.is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoFailure {
    Injectivity,
    Surjectivity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    IsoUpTo(usize),
    Fails { kind: IsoFailure, witness: String },
}

/// Bijectivity on the filtration pieces spanned by words of length `≤ d`:
/// the images of the source normal words are independent, and every target
/// normal word of length `≤ d` lies in their span with matching counts.
pub fn check_iso_up_to_degree(phi: &HopfMapSpec, d: usize) -> Result<IsoVerdict, HopfError> {
    if let Some(l) = phi.missing() {
        return Err(NcError::MissingImage(l).into());
    }
    let (s, t) = (phi.source, phi.target);
    t.require(d * phi.image_degree().max(1))?;
    let source_words = enumerate_normal_words(&s.system, &s.certificate, d)?;
    let mut images: HashMap<Word, NCPolynomial> = HashMap::new();
    images.insert(Word::one(), NCPolynomial::one());
    let mut span = PolySpan::new();
    for w in source_words.iter().flatten() {
        let img = match w.letters().split_last() {
            None => NCPolynomial::one(),
            Some((&last, init)) => {
                // prefixes of normal words are normal, so already computed
                let prefix = &images[&Word::new(init.to_vec())];
                t.nf(&prefix.nc_mul(phi.images[last.index()].as_ref().expect("checked total")))?
            }
        };
        if let Err(rel) = span.insert(&img, &NCPolynomial::word(w.clone())) {
            return Ok(IsoVerdict::Fails {
                kind: IsoFailure::Injectivity,
                witness: format!("{} maps to 0", s.render(&rel)),
            });
        }
        images.insert(w.clone(), img);
    }
    let target_words = enumerate_normal_words(&t.system, &t.certificate, d)?;
    for w in target_words.iter().flatten() {
        if !span.contains(&NCPolynomial::word(w.clone())) {
            return Ok(IsoVerdict::Fails {
                kind: IsoFailure::Surjectivity,
                witness: format!("{} is not in the image", t.system.alphabet().render_word(w)),
            });
        }
    }
    let cs = cumulative(&count_normal_words(&s.system, d));
    let ct = cumulative(&count_normal_words(&t.system, d));
    if cs != ct {
        return Ok(IsoVerdict::Fails {
            kind: IsoFailure::Surjectivity,
            witness: format!("cumulative counts {cs:?} vs {ct:?}"),
        });
    }
    Ok(IsoVerdict::IsoUpTo(d))
}
