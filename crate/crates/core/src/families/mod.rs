//! Presentations of the liftings of the Jordan plane and their relatives,
//! the braided space `V(1,2)`, and Ore-extension cross-checks.

mod braided;
mod lifting;
mod ore;
mod presentation;

pub use braided::BraidedSpace;
pub use lifting::{make_lifting, Action, LiftingSpec, TopRelation};
pub use ore::{verify_ore_tower, OreFailure, OreTower};
pub use presentation::AlgebraPresentation;

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use crate::groupdata::{
    eval_xi, validate_yd_triple, GroupError, GroupSpec, TripleKind, XiMap, XiMode, YDTriple,
};
use crate::ncpoly::{Alphabet, NCPolynomial, NcError, Word};
use crate::rewrite::RewriteError;
use crate::scalar::{half, int, one, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error("invalid YD-triple: {0}")]
    InvalidTriple(String),
    #[error("ξ must be additive (ζ = 0) here")]
    WrongXiMode,
    #[error("ξ(g) = {0}; the coproduct only descends when ξ(g) = 0")]
    XiNotNormalized(String),
    #[error("ħ must be nonzero")]
    ZeroPlanck,
    #[error("g must be one of the group generators")]
    GNotGenerator,
    #[error("expected one or two skew-primitive letters, got {0}")]
    BadSkewCount(usize),
    #[error("Ore tower data: {0}")]
    BadOreData(String),
    #[error("system is not certified confluent up to degree {0}")]
    NotConfluent(usize),
}

fn params(kv: &[(&str, Scalar)]) -> BTreeMap<String, Scalar> {
    kv.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn cyclic() -> GroupSpec {
    GroupSpec::standard(1).expect("rank one")
}

fn jordan_g() -> Action {
    Action::new(one(), one(), Scalar::zero())
}

/// `ũ`: `g` group-like, `a1, a2 ∈ P_{g,1}`, `γ_g(a1) = 1 − g`, `γ_g(a2) = a1`.
pub fn make_wujor() -> AlgebraPresentation {
    make_lifting(&LiftingSpec {
        name: "wujor".into(),
        group: cyclic(),
        skew_names: vec!["a1".into(), "a2".into()],
        action: Some(vec![jordan_g()]),
        top: TopRelation::None,
        params: BTreeMap::new(),
        provenance: "free Jordanian lifting over Z".into(),
    })
    .expect("fixed data")
}

/// `u_λ = ũ / (z − λ(1 − g²))`; `λ = 0` is `u`.
pub fn make_ujor_lambda(lambda: Scalar) -> AlgebraPresentation {
    make_lifting(&LiftingSpec {
        name: "ujor_lambda".into(),
        group: cyclic(),
        skew_names: vec!["a1".into(), "a2".into()],
        action: Some(vec![jordan_g()]),
        top: TopRelation::Jordanian { lambda: lambda.clone() },
        params: params(&[("lambda", lambda)]),
        provenance: "Jordanian lifting over Z with z = lambda (1 - g^2)".into(),
    })
    .expect("fixed data")
}

/// `k⟨g^{±1}, a1, a2⟩` with only the group relations.
pub fn make_free_u() -> AlgebraPresentation {
    make_lifting(&LiftingSpec {
        name: "free_u".into(),
        group: cyclic(),
        skew_names: vec!["a1".into(), "a2".into()],
        action: None,
        top: TopRelation::None,
        params: BTreeMap::new(),
        provenance: "free algebra on g^{+-1}, a1, a2".into(),
    })
    .expect("fixed data")
}

fn check_trivial_character(d: &YDTriple) -> Result<(), FamilyError> {
    match validate_yd_triple(d) {
        TripleKind::Invalid(why) => Err(FamilyError::InvalidTriple(why)),
        TripleKind::NonJordanian => Err(FamilyError::InvalidTriple("χ(g) ≠ 1".into())),
        TripleKind::Jordanian if !d.chi().is_trivial() => Err(FamilyError::InvalidTriple("χ ≠ ε".into())),
        TripleKind::Jordanian => Ok(()),
    }
}

/// `U_ξ(D, λ)`: `a1` central under `G`, `γ_h(a2) = η(h)a1 + ξ(h)(1 − g)`,
/// and `a1a2 − a2a1 − ½a1² = λ(1 − g²)`.
///
/// Requires `ξ(g) = 0`; otherwise `Δ` of the last relation picks up
/// `ξ(g)(g − g²) ⊗ a1` and the quotient is not a bialgebra.
pub fn make_u_xi(d: &YDTriple, xi: &XiMap, lambda: Scalar) -> Result<AlgebraPresentation, FamilyError> {
    check_trivial_character(d)?;
    if xi.mode() != XiMode::CaseA {
        return Err(FamilyError::WrongXiMode);
    }
    let xg = eval_xi(xi, d.group().g());
    if !xg.is_zero() {
        return Err(FamilyError::XiNotNormalized(xg.to_string()));
    }
    let actions = d
        .eta()
        .values()
        .iter()
        .zip(xi.values())
        .map(|(e, x)| Action::new(Scalar::zero(), e.clone(), x.clone()))
        .collect();
    let names: Vec<String> = d.group().names().to_vec();
    let mut p = params(&[("lambda", lambda.clone())]);
    for (i, n) in names.iter().enumerate() {
        p.insert(format!("eta({n})"), d.eta().values()[i].clone());
        p.insert(format!("xi({n})"), xi.values()[i].clone());
    }
    make_lifting(&LiftingSpec {
        name: "u_xi".into(),
        group: d.group().clone(),
        skew_names: vec!["a1".into(), "a2".into()],
        action: Some(actions),
        top: TopRelation::Diagonal { lambda },
        params: p,
        provenance: format!("lifting with zeta = 0 over Z^{}", names.len()),
    })
}

/// `u(D)`: `γ_h(a1) = η(h)(1 − g)`, `γ_h(a2) = η(h)a1 + ξ(h)(1 − g)` with
/// `ξ(h) = ½(η(h)² − η(h))`, and `z = 0`.
pub fn make_ujor_d(d: &YDTriple) -> Result<AlgebraPresentation, FamilyError> {
    check_trivial_character(d)?;
    let xi = XiMap::case_b_canonical(d.eta().clone());
    let actions = d
        .eta()
        .values()
        .iter()
        .zip(xi.values())
        .map(|(e, x)| Action::new(e.clone(), e.clone(), x.clone()))
        .collect();
    let names: Vec<String> = d.group().names().to_vec();
    let mut p = BTreeMap::new();
    for (i, n) in names.iter().enumerate() {
        p.insert(format!("eta({n})"), d.eta().values()[i].clone());
    }
    make_lifting(&LiftingSpec {
        name: "ujor_d".into(),
        group: d.group().clone(),
        skew_names: vec!["a1".into(), "a2".into()],
        action: Some(actions),
        top: TopRelation::Jordanian { lambda: Scalar::zero() },
        params: p,
        provenance: format!("Jordanian lifting with zeta = eta over Z^{}", names.len()),
    })
}

/// `ũ` over `Z² = ⟨g, h⟩` with `h` acting by `(ζ, η, ξ) = (η_h, η_h, r)`
/// and no top relation. Consistent for every `r` since the two actions
/// commute when `ζ = η`.
pub fn make_ujor_free_stage(eta_h: Scalar, r: Scalar) -> Result<AlgebraPresentation, FamilyError> {
    make_lifting(&LiftingSpec {
        name: "ujor_free_stage".into(),
        group: GroupSpec::standard(2)?,
        skew_names: vec!["a1".into(), "a2".into()],
        action: Some(vec![jordan_g(), Action::new(eta_h.clone(), eta_h.clone(), r.clone())]),
        top: TopRelation::None,
        params: params(&[("eta(h)", eta_h), ("xi(h)", r)]),
        provenance: "Jordanian lifting over Z^2 before imposing z".into(),
    })
}

/// Jordanian quantum `sl(2)` `U_ħ` on `K, Y, T^{±1}`: `T` group-like,
/// `K, Y ∈ P_{T⁻¹,T}`.
pub fn make_ohn(hbar: Scalar) -> Result<AlgebraPresentation, FamilyError> {
    if hbar.is_zero() {
        return Err(FamilyError::ZeroPlanck);
    }
    let mut a = Alphabet::new();
    let (t, ti) = a.add_group_gen("T")?;
    let k = a.add_skew("K", Word::letter(ti), Word::letter(t))?;
    let y = a.add_skew("Y", Word::letter(ti), Word::letter(t))?;
    let m = NCPolynomial::monomial;
    let unit = NCPolynomial::one();
    let h2 = &hbar * &half();
    let mut rels = vec![&m(&[t, ti]) - &unit, &m(&[ti, t]) - &unit];
    // [K,T] = T² − 1
    rels.push(&(&(&m(&[k, t]) - &m(&[t, k])) - &m(&[t, t])) + &unit);
    // K T⁻¹ = T⁻¹ K − 1 + T⁻²
    rels.push(&(&(&m(&[k, ti]) - &m(&[ti, k])) + &unit) - &m(&[ti, ti]));
    // [Y,T] = −ħ/2 (KT + TK)
    let mut r = &m(&[y, t]) - &m(&[t, y]);
    r.add_scaled(&(&m(&[k, t]) + &m(&[t, k])), &h2);
    rels.push(r);
    // Y T⁻¹ = T⁻¹ Y + ħ/2 (T⁻¹K + KT⁻¹)
    let mut r = &m(&[y, ti]) - &m(&[ti, y]);
    r.add_scaled(&(&m(&[ti, k]) + &m(&[k, ti])), &-&h2);
    rels.push(r);
    // [K,Y] = −½(YT + TY + YT⁻¹ + T⁻¹Y)
    let mut r = &m(&[k, y]) - &m(&[y, k]);
    let s = &(&(&m(&[y, t]) + &m(&[t, y])) + &m(&[y, ti])) + &m(&[ti, y]);
    r.add_scaled(&s, &half());
    rels.push(r);
    Ok(AlgebraPresentation {
        name: "ohn".into(),
        alphabet: a,
        relations: rels,
        precedence: vec![y, k, t, ti],
        params: params(&[("hbar", hbar)]),
        provenance: "Jordanian quantum sl(2) U_hbar".into(),
        group: vec![(t, ti)],
        g: None,
        skew_basis: vec![],
    })
}

/// `k⟨x1, x2⟩ / (x2x1 − x1x2 + ½x1²)`.
pub fn make_jordan_plane() -> AlgebraPresentation {
    let mut a = Alphabet::new();
    let x1 = a.add_skew("x1", Word::one(), Word::one()).expect("fresh");
    let x2 = a.add_skew("x2", Word::one(), Word::one()).expect("fresh");
    let mut r = &NCPolynomial::monomial(&[x2, x1]) - &NCPolynomial::monomial(&[x1, x2]);
    r.add_scaled(&NCPolynomial::monomial(&[x1, x1]), &half());
    AlgebraPresentation {
        name: "jordan_plane".into(),
        alphabet: a,
        relations: vec![r],
        precedence: vec![x2, x1],
        params: BTreeMap::new(),
        provenance: "Jordan plane".into(),
        group: vec![],
        g: None,
        skew_basis: vec![x1, x2],
    }
}

/// `k⟨γ^{±1}, a⟩` with `γaγ⁻¹ = a + (1 − γ)`, `a ∈ P_{γ,1}`.
pub fn make_example_indecomposable() -> AlgebraPresentation {
    make_lifting(&LiftingSpec {
        name: "indecomposable".into(),
        group: GroupSpec::new(vec!["gamma".into()], vec![1]).expect("rank one"),
        skew_names: vec!["a".into()],
        action: Some(vec![Action::new(one(), Scalar::zero(), Scalar::zero())]),
        top: TopRelation::None,
        params: BTreeMap::new(),
        provenance: "one skew-primitive with indecomposable conjugation".into(),
    })
    .expect("fixed data")
}

/// Group algebra of `Z^rank`.
pub fn make_group_algebra(rank: usize) -> Result<AlgebraPresentation, FamilyError> {
    make_lifting(&LiftingSpec {
        name: format!("kZ{rank}"),
        group: GroupSpec::standard(rank)?,
        skew_names: vec![],
        action: None,
        top: TopRelation::None,
        params: BTreeMap::new(),
        provenance: format!("group algebra of Z^{rank}"),
    })
}

/// Sample `YDTriple` over `Z^n` with `χ = ε`, `η(g) = 1` and the given
/// values on the remaining generators.
pub fn jordanian_triple(eta_rest: &[Scalar]) -> Result<YDTriple, FamilyError> {
    let mut v = vec![int(1)];
    v.extend_from_slice(eta_rest);
    Ok(YDTriple::trivial_character(v.len(), v)?)
}
