use std::collections::BTreeMap;

use crate::groupdata::GroupSpec;
use crate::ncpoly::{Alphabet, Letter, NCPolynomial, Word};
use crate::scalar::{half, one, Scalar};

use super::{AlgebraPresentation, FamilyError};

/// Conjugation data of one group element on `(1 − g, a1, a2)`:
/// `γ(a1) = ζ(1 − g)` and `γ(a2) = η a1 + ξ(1 − g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    pub zeta: Scalar,
    pub eta: Scalar,
    pub xi: Scalar,
}

impl Action {
    pub fn new(zeta: Scalar, eta: Scalar, xi: Scalar) -> Self {
        Self { zeta, eta, xi }
    }

    /// Data of the inverse element; the unipotent matrix inverse gives
    /// `ξ(h⁻¹) = −ξ(h) + ζ(h)η(h)`.
    pub fn inverse(&self) -> Self {
        Self { zeta: -&self.zeta, eta: -&self.eta, xi: &self.zeta * &self.eta - &self.xi }
    }
}

/// Relation tying `a1, a2` together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopRelation {
    None,
    /// `a1a2 − a2a1 − ½a1² + a2 + ½a1 − λ(1 − g²)`.
    Jordanian { lambda: Scalar },
    /// `a1a2 − a2a1 − ½a1² − λ(1 − g²)`.
    Diagonal { lambda: Scalar },
}

/// Input for [`make_lifting`].
#[derive(Clone, Debug)]
pub struct LiftingSpec {
    pub name: String,
    pub group: GroupSpec,
    /// One or two names; the first is `a1`.
    pub skew_names: Vec<String>,
    /// Per group generator. `None` leaves the skew letters free.
    pub action: Option<Vec<Action>>,
    pub top: TopRelation,
    pub params: BTreeMap<String, Scalar>,
    pub provenance: String,
}

/// Presentation over `Z^n` with skew-primitives in `P_{g,1}`: group
/// relations, one conjugation relation per generator and per inverse, and
/// the top relation. `g` must be one of the generators.
pub fn make_lifting(spec: &LiftingSpec) -> Result<AlgebraPresentation, FamilyError> {
    let gi = spec.group.g_generator().ok_or(FamilyError::GNotGenerator)?;
    if spec.skew_names.len() > 2 {
        return Err(FamilyError::BadSkewCount(spec.skew_names.len()));
    }
    if !matches!(spec.top, TopRelation::None) && spec.skew_names.len() != 2 {
        return Err(FamilyError::BadSkewCount(spec.skew_names.len()));
    }
    let mut alphabet = Alphabet::new();
    let mut group = Vec::new();
    for name in spec.group.names() {
        group.push(alphabet.add_group_gen(name)?);
    }
    let g = Word::letter(group[gi].0);
    let mut skew = Vec::new();
    for name in &spec.skew_names {
        skew.push(alphabet.add_skew(name, g.clone(), Word::one())?);
    }

    let unit = NCPolynomial::one();
    let gp = NCPolynomial::word(g.clone());
    let one_minus_g = &unit - &gp;
    let mut relations = Vec::new();
    for &(x, xi) in &group {
        relations.push(&NCPolynomial::monomial(&[x, xi]) - &unit);
        relations.push(&NCPolynomial::monomial(&[xi, x]) - &unit);
    }
    for i in 0..group.len() {
        for j in i + 1..group.len() {
            for &u in &[group[i].0, group[i].1] {
                for &v in &[group[j].0, group[j].1] {
                    relations.push(&NCPolynomial::monomial(&[u, v]) - &NCPolynomial::monomial(&[v, u]));
                }
            }
        }
    }
    if let Some(actions) = &spec.action {
        if actions.len() != group.len() {
            return Err(FamilyError::Group(crate::groupdata::GroupError::RankMismatch {
                expected: group.len(),
                got: actions.len(),
            }));
        }
        for (&(x, xinv), act) in group.iter().zip(actions) {
            relations.extend(conjugation(x, act, &skew, &one_minus_g));
            relations.extend(conjugation(xinv, &act.inverse(), &skew, &one_minus_g));
        }
    }
    let g2 = gp.nc_mul(&gp);
    let one_minus_g2 = &unit - &g2;
    match &spec.top {
        TopRelation::None => {}
        TopRelation::Jordanian { lambda } => {
            let (a1, a2) = (skew[0], skew[1]);
            let mut z = jordan_z(a1, a2);
            z.add_scaled(&one_minus_g2, &-lambda);
            relations.push(z);
        }
        TopRelation::Diagonal { lambda } => {
            let (a1, a2) = (skew[0], skew[1]);
            let mut r = &NCPolynomial::monomial(&[a1, a2]) - &NCPolynomial::monomial(&[a2, a1]);
            r.add_scaled(&NCPolynomial::monomial(&[a1, a1]), &-half());
            r.add_scaled(&one_minus_g2, &-lambda);
            relations.push(r);
        }
    }

    // each generator sits next to its inverse; ranking all generators above
    // all inverses makes the group relations complete to an infinite set
    let mut precedence: Vec<Letter> = group.iter().flat_map(|p| [p.0, p.1]).collect();
    precedence.extend(skew.iter().rev());
    Ok(AlgebraPresentation {
        name: spec.name.clone(),
        alphabet,
        relations,
        precedence,
        params: spec.params.clone(),
        provenance: spec.provenance.clone(),
        group,
        g: Some(g),
        skew_basis: skew,
    })
}

/// `z = a1a2 − a2a1 − ½a1² + a2 + ½a1`.
pub(crate) fn jordan_z(a1: Letter, a2: Letter) -> NCPolynomial {
    let mut z = &NCPolynomial::monomial(&[a1, a2]) - &NCPolynomial::monomial(&[a2, a1]);
    z.add_scaled(&NCPolynomial::monomial(&[a1, a1]), &-half());
    z.add_scaled(&NCPolynomial::letter(a2), &one());
    z.add_scaled(&NCPolynomial::letter(a1), &half());
    z
}

fn conjugation(x: Letter, act: &Action, skew: &[Letter], one_minus_g: &NCPolynomial) -> Vec<NCPolynomial> {
    let xp = NCPolynomial::letter(x);
    let mut out = Vec::new();
    if let Some(&a1) = skew.first() {
        let mut img = NCPolynomial::letter(a1);
        img.add_scaled(one_minus_g, &act.zeta);
        out.push(&NCPolynomial::monomial(&[x, a1]) - &img.nc_mul(&xp));
    }
    if let (Some(&a1), Some(&a2)) = (skew.first(), skew.get(1)) {
        let mut img = NCPolynomial::letter(a2);
        img.add_scaled(&NCPolynomial::letter(a1), &act.eta);
        img.add_scaled(one_minus_g, &act.xi);
        out.push(&NCPolynomial::monomial(&[x, a2]) - &img.nc_mul(&xp));
    }
    out
}
