//! The verification suite. Every check derives its own generator from the
//! seed and its id, so results do not depend on scheduling.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Display;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::families::{
    jordanian_triple, make_example_indecomposable, make_ohn, make_u_xi, make_ujor_d, make_ujor_free_stage,
    make_ujor_lambda, make_wujor, verify_ore_tower, AlgebraPresentation, BraidedSpace, OreTower,
};
use crate::groupdata::{XiMap, YDTriple};
use crate::hopfcheck::{
    adjoint_apply, adjoint_matrix_exp, antipode_failures, check_iso_up_to_degree, coproduct_failures,
    coproduct_in_quotient, graded_match, hopf_map_failures, is_skew_primitive, skew_primitive_space,
    AdjointMatrix, HopfMapSpec, IsoFailure, IsoVerdict, QuotientContext, Reference,
};
use crate::linalg::Matrix;
use crate::ncpoly::{
    coproduct_left, coproduct_right, counit_left, counit_right, free_coproduct, Letter, NCPolynomial, TensorElement,
    Word,
};
use crate::rewrite::{
    count_normal_words, cumulative, enumerate_normal_words, gk_estimate, Strategy, Verdict,
};
use crate::scalar::{half, int, q, Scalar};

use super::report::{CheckRecord, Report, Status};
use super::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Completion degree and the degree of isomorphism checks.
    pub degree: usize,
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { seed: 0, degree: 6, timing: true }
    }
}

/// Instances per randomized property.
pub const PROPERTY_INSTANCES: usize = 100;

#[derive(Default)]
struct Outcome {
    params: BTreeMap<String, String>,
    failures: Vec<String>,
}

impl Outcome {
    fn param(&mut self, k: impl Into<String>, v: impl Display) {
        self.params.insert(k.into(), v.to_string());
    }

    fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }
}

type Run = fn(&SuiteConfig, &mut ChaCha8Rng) -> Result<Outcome, CliError>;

struct Check {
    id: &'static str,
    anchor: &'static str,
    run: Run,
}

const CHECKS: &[Check] = &[
    Check { id: "c01.z-coproduct", anchor: "z-skew-primitive", run: z_coproduct },
    Check { id: "c01.z-invariant", anchor: "z-adjoint-invariant", run: z_invariant },
    Check { id: "c02.phi-shift", anchor: "phi-lambda-mu-on-z", run: phi_shift },
    Check { id: "c02.phi-hopf-map", anchor: "phi-lambda-mu-hopf", run: phi_hopf_map },
    Check { id: "c02.phi-iso", anchor: "phi-zero-lambda-iso", run: phi_iso },
    Check { id: "c03.psi-hopf-map", anchor: "jordanian-sl2-embedding", run: psi_hopf_map },
    Check { id: "c03.psi-injective", anchor: "jordanian-sl2-embedding", run: psi_injective },
    Check { id: "c04.u-confluent", anchor: "u-pbw-basis", run: u_confluent },
    Check { id: "c04.u-normal-words", anchor: "u-pbw-basis", run: u_normal_words },
    Check { id: "c04.u-ore-tower", anchor: "u-ore-tower", run: u_ore_tower },
    Check { id: "c04.u-growth", anchor: "u-gk-dimension", run: u_growth },
    Check { id: "c05.graded-match", anchor: "associated-graded", run: graded_matches },
    Check { id: "c05.growth-z", anchor: "gk-dimension-z", run: growth_z },
    Check { id: "c05.growth-z2", anchor: "gk-dimension-z2", run: growth_z2 },
    Check { id: "c06.u-d-hopf", anchor: "u-d-hopf-structure", run: u_d_hopf },
    Check { id: "c06.u-xi-hopf", anchor: "u-xi-hopf-structure", run: u_xi_hopf },
    Check { id: "c07.adjoint-matrices", anchor: "adjoint-action-matrix", run: adjoint_matrices },
    Check { id: "c07.cocycle", anchor: "adjoint-matrix-cocycle", run: cocycle },
    Check { id: "c07.gamma-h-z", anchor: "gamma-h-of-z", run: gamma_h_z },
    Check { id: "c07.zeta-eta", anchor: "zeta-proportional-to-eta", run: zeta_eta },
    Check { id: "c08.skew-primitives", anchor: "g2-skew-primitives", run: skew_primitives },
    Check { id: "c09.braid", anchor: "jordan-braiding", run: braid },
    Check { id: "c10.indecomposable", anchor: "indecomposable-example", run: indecomposable },
    Check { id: "c11.associativity", anchor: "free-associativity", run: prop_associativity },
    Check { id: "c11.coassociativity", anchor: "free-coassociativity", run: prop_coassociativity },
    Check { id: "c11.counit", anchor: "free-counit", run: prop_counit },
    Check { id: "c11.delta-multiplicative", anchor: "free-delta-multiplicative", run: prop_delta_mult },
    Check { id: "c11.nf-linearity", anchor: "normal-form-linear", run: prop_nf_linear },
    Check { id: "c11.nf-multiplicativity", anchor: "normal-form-multiplicative", run: prop_nf_mult },
    Check { id: "c11.nf-strategy", anchor: "normal-form-strategy-independent", run: prop_nf_strategy },
    Check { id: "c11.adjoint-product-rule", anchor: "adjoint-product-rule", run: prop_adjoint_product },
];

pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

fn salt(id: &str) -> u64 {
    // FNV-1a
    id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

fn run_one(c: &Check, cfg: &SuiteConfig) -> CheckRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ salt(c.id));
    let start = Instant::now();
    let res = (c.run)(cfg, &mut rng);
    let ms = cfg.timing.then(|| start.elapsed().as_millis() as u64);
    let (params, status, witness) = match res {
        Ok(o) if o.failures.is_empty() => (o.params, Status::Pass, None),
        Ok(o) => (o.params, Status::Fail, Some(o.failures.join("; "))),
        Err(e) => (BTreeMap::new(), Status::Error, Some(e.to_string())),
    };
    CheckRecord { id: c.id.into(), anchor: c.anchor.into(), params, status, witness, ms }
}

/// Runs every check whose id starts with one of `filter` (all if empty).
pub fn run_suite(cfg: &SuiteConfig, filter: &[String]) -> Report {
    let selected: Vec<&Check> =
        CHECKS.iter().filter(|c| filter.is_empty() || filter.iter().any(|f| c.id.starts_with(f.as_str()))).collect();
    Report::new(selected.par_iter().map(|c| run_one(c, cfg)).collect())
}

// sampling

fn rational(rng: &mut ChaCha8Rng) -> Scalar {
    q(rng.gen_range(-9..=9), rng.gen_range(1..=6))
}

fn nonzero_rational(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let r = rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng, letters: &[Letter], maxdeg: usize, maxterms: usize) -> NCPolynomial {
    let mut p = NCPolynomial::zero();
    for _ in 0..rng.gen_range(1..=maxterms) {
        let d = rng.gen_range(0..=maxdeg);
        let w: Vec<Letter> = (0..d).map(|_| letters[rng.gen_range(0..letters.len())]).collect();
        p.add_term(Word::new(w), rational(rng));
    }
    p
}

fn letters_of(p: &AlgebraPresentation) -> Vec<Letter> {
    p.alphabet.letters().collect()
}

// helpers

fn ctx(p: AlgebraPresentation, cfg: &SuiteConfig) -> Result<QuotientContext, CliError> {
    Ok(QuotientContext::new(p, cfg.degree)?)
}

fn z_of(c: &QuotientContext) -> NCPolynomial {
    let (a1, a2) = (c.var("a1"), c.var("a2"));
    let mut z = &a1.nc_mul(&a2) - &a2.nc_mul(&a1);
    z.add_scaled(&a1.nc_mul(&a1), &-half());
    z.add_scaled(&a2, &int(1));
    z.add_scaled(&a1, &half());
    z
}

fn one_minus_g2(c: &QuotientContext) -> Result<NCPolynomial, CliError> {
    let mut e = vec![0; c.presentation.group.len()];
    e[0] = 2;
    Ok(&NCPolynomial::one() - &NCPolynomial::word(c.presentation.group_word(&e)?))
}

fn g2_word(c: &QuotientContext) -> Result<Word, CliError> {
    Ok(c.presentation.group_word(&[2])?)
}

fn rows(m: &AdjointMatrix) -> String {
    format!("{:?}", m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn matrix3(e: [[Scalar; 3]; 3]) -> Vec<Vec<Scalar>> {
    e.into_iter().map(Vec::from).collect()
}

fn u_xi_z2(eta_h: Scalar, xi_h: Scalar, lambda: Scalar) -> Result<AlgebraPresentation, CliError> {
    let d = YDTriple::trivial_character(2, vec![int(1), eta_h]).map_err(crate::families::FamilyError::from)?;
    let xi = XiMap::case_a(d.eta().clone(), vec![Scalar::zero(), xi_h]).map_err(crate::families::FamilyError::from)?;
    Ok(make_u_xi(&d, &xi, lambda)?)
}

fn u_d_z2(eta_h: Scalar) -> Result<AlgebraPresentation, CliError> {
    Ok(make_ujor_d(&jordanian_triple(&[eta_h])?)?)
}

fn phi_map<'a>(src: &'a QuotientContext, tgt: &'a QuotientContext, mu: &Scalar) -> Result<HopfMapSpec<'a>, CliError> {
    let mut a2 = tgt.var("a2");
    a2.add_scaled(&(&NCPolynomial::one() - &tgt.var("g")), mu);
    Ok(HopfMapSpec::new(src, tgt, &[("g", tgt.var("g")), ("a1", tgt.var("a1")), ("a2", a2)])?)
}

fn psi_map<'a>(src: &'a QuotientContext, tgt: &'a QuotientContext, hbar: &Scalar) -> Result<HopfMapSpec<'a>, CliError> {
    let ti = tgt.var("T_inv");
    let x = tgt.var("K").nc_mul(&ti);
    let y = tgt.var("Y").nc_mul(&ti);
    let mut a2 = &(-(q(1, 4) / hbar)) * &y;
    a2.add_scaled(&x, &q(-1, 4));
    Ok(HopfMapSpec::new(src, tgt, &[("g", ti.nc_mul(&ti)), ("a1", &half() * &x), ("a2", a2)])?)
}

const SAMPLES: usize = 3;

// c01

fn z_coproduct(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let w = ctx(make_wujor(), cfg)?;
    let z = z_of(&w);
    let nz = w.nf(&z)?;
    let g2 = NCPolynomial::word(g2_word(&w)?);
    let mut expected = TensorElement::from_pair(&nz, &NCPolynomial::one());
    expected.add_scaled(&TensorElement::from_pair(&g2, &nz), &int(1));
    let got = coproduct_in_quotient(&z, &w)?;
    let diff = got.sub(&w.nf_tensor(&expected)?);
    o.expect(diff.is_zero(), || format!("Δ(z) - z⊗1 - g²⊗z = {}", w.render_tensor(&diff)));
    let a1 = w.var("a1");
    o.expect(!is_skew_primitive(&a1.nc_mul(&a1), &g2_word(&w)?, &w)?, || "a1² reported skew-primitive".into());
    Ok(o)
}

fn z_invariant(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let w = ctx(make_wujor(), cfg)?;
    let g = w.presentation.group_word(&[1])?;
    let r = adjoint_apply(&g, &z_of(&w), &w)?;
    o.expect(r.is_zero(), || format!("γ_g(z) = {}", w.render(&r)));
    Ok(o)
}

// c02

fn lambda_mu_samples(rng: &mut ChaCha8Rng, o: &mut Outcome) -> Vec<(Scalar, Scalar)> {
    (0..SAMPLES)
        .map(|i| {
            let (l, m) = (rational(rng), nonzero_rational(rng));
            o.param(format!("lambda,mu[{i}]"), format!("{l},{m}"));
            (l, m)
        })
        .collect()
}

fn phi_shift(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let w = ctx(make_wujor(), cfg)?;
    let z = z_of(&w);
    let omg2 = one_minus_g2(&w)?;
    for (_, mu) in lambda_mu_samples(rng, &mut o) {
        let phi = phi_map(&w, &w, &mu)?;
        let diff = w.nf(&(&(&phi.apply(&z)? - &z) - &(&mu * &omg2)))?;
        o.expect(diff.is_zero(), || format!("mu = {mu}: φ(z) - z - μ(1-g²) = {}", w.render(&diff)));
    }
    Ok(o)
}

fn phi_hopf_map(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    for (l, m) in lambda_mu_samples(rng, &mut o) {
        let src = ctx(make_ujor_lambda(&l + &m), cfg)?;
        let tgt = ctx(make_ujor_lambda(l.clone()), cfg)?;
        let fails = hopf_map_failures(&phi_map(&src, &tgt, &m)?)?;
        o.expect(fails.is_empty(), || format!("({l},{m}): {}: {}", fails[0].label, fails[0].witness));
    }
    Ok(o)
}

fn phi_iso(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    o.param("degree", cfg.degree);
    let tgt = ctx(make_ujor_lambda(Scalar::zero()), cfg)?;
    for (i, (_, l)) in lambda_mu_samples(rng, &mut o).into_iter().enumerate() {
        o.params.remove(&format!("lambda,mu[{i}]"));
        o.param(format!("lambda[{i}]"), &l);
        let src = ctx(make_ujor_lambda(l.clone()), cfg)?;
        let phi = phi_map(&src, &tgt, &l)?;
        let fails = hopf_map_failures(&phi)?;
        o.expect(fails.is_empty(), || format!("λ = {l}: not a Hopf map"));
        let v = check_iso_up_to_degree(&phi, cfg.degree)?;
        o.expect(v == IsoVerdict::IsoUpTo(cfg.degree), || format!("λ = {l}: {v:?}"));
    }
    Ok(o)
}

// c03

fn hbar_samples(rng: &mut ChaCha8Rng, o: &mut Outcome) -> Vec<Scalar> {
    (0..SAMPLES)
        .map(|i| {
            let h = nonzero_rational(rng);
            o.param(format!("hbar[{i}]"), &h);
            h
        })
        .collect()
}

fn psi_hopf_map(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let src = ctx(make_ujor_lambda(q(-1, 32)), cfg)?;
    for h in hbar_samples(rng, &mut o) {
        let tgt = ctx(make_ohn(h.clone())?, cfg)?;
        let fails = hopf_map_failures(&psi_map(&src, &tgt, &h)?)?;
        o.expect(fails.is_empty(), || format!("ħ = {h}: {}: {}", fails[0].label, fails[0].witness));
    }
    Ok(o)
}

fn psi_injective(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    o.param("degree", cfg.degree);
    let src = ctx(make_ujor_lambda(q(-1, 32)), cfg)?;
    for (i, h) in hbar_samples(rng, &mut o).into_iter().enumerate() {
        let tgt = ctx(make_ohn(h.clone())?, cfg)?;
        match check_iso_up_to_degree(&psi_map(&src, &tgt, &h)?, cfg.degree)? {
            IsoVerdict::Fails { kind: IsoFailure::Injectivity, witness } => {
                o.expect(false, || format!("ħ = {h}: kernel element {witness}"))
            }
            IsoVerdict::Fails { kind: IsoFailure::Surjectivity, witness } => {
                o.param(format!("proper-subalgebra[{i}]"), witness)
            }
            IsoVerdict::IsoUpTo(_) => o.expect(false, || format!("ħ = {h}: unexpectedly surjective")),
        }
    }
    Ok(o)
}

// c04

const PBW_DEGREE: usize = 8;

fn u_confluent(_: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let (sys, cert) = make_ujor_lambda(Scalar::zero()).completed(PBW_DEGREE)?;
    o.param("rules", sys.rules().len());
    o.param("added", cert.added.len());
    o.expect(cert.verdict == Verdict::ConfluentUpTo(PBW_DEGREE), || format!("verdict {:?}", cert.verdict));
    Ok(o)
}

fn u_normal_words(_: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let p = make_ujor_lambda(Scalar::zero());
    let (sys, cert) = p.completed(PBW_DEGREE)?;
    let (a1, a2, g, gi) = (p.letter("a1")?, p.letter("a2")?, p.letter("g")?, p.letter("g_inv")?);
    let mut expected = BTreeSet::new();
    for m in 0..=PBW_DEGREE {
        for k in 0..=PBW_DEGREE - m {
            for j in -((PBW_DEGREE - m - k) as i64)..=(PBW_DEGREE - m - k) as i64 {
                let mut w = vec![a1; m];
                w.extend(std::iter::repeat_n(a2, k));
                w.extend(std::iter::repeat_n(if j > 0 { g } else { gi }, j.unsigned_abs() as usize));
                expected.insert(Word::new(w));
            }
        }
    }
    let got: BTreeSet<Word> = enumerate_normal_words(&sys, &cert, PBW_DEGREE)?.into_iter().flatten().collect();
    o.expect(got == expected, || {
        let extra = got.difference(&expected).next().map(|w| p.alphabet.render_word(w));
        let missing = expected.difference(&got).next().map(|w| p.alphabet.render_word(w));
        format!("extra {extra:?}, missing {missing:?}")
    });
    let cum = cumulative(&count_normal_words(&sys, PBW_DEGREE));
    let formula: Vec<u128> = (0..=PBW_DEGREE as u128).map(|n| (0..=n).map(|s| (s + 1) * (2 * (n - s) + 1)).sum()).collect();
    o.param("cumulative", format!("{cum:?}"));
    o.expect(cum == formula, || format!("counts {cum:?} vs {formula:?}"));
    Ok(o)
}

fn u_ore_tower(_: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let p = make_ujor_lambda(Scalar::zero());
    let (sys, cert) = p.completed(PBW_DEGREE)?;
    let fails = verify_ore_tower(&OreTower::ujor(&p), &sys, &cert)?;
    o.expect(fails.is_empty(), || format!("{}: {}", fails[0].identity, sys.render(&fails[0].residue)));
    Ok(o)
}

fn slope(p: &AlgebraPresentation, maxlen: usize, o: &mut Outcome, lo: f64, hi: f64) -> Result<(), CliError> {
    let (sys, cert) = p.completed(PBW_DEGREE)?;
    if !cert.covers(maxlen) {
        return Err(crate::rewrite::RewriteError::NoCertificate(maxlen).into());
    }
    let s = gk_estimate(&cumulative(&count_normal_words(&sys, maxlen)))?;
    o.param(format!("slope({}, {maxlen})", p.name), format!("{s:.4}"));
    o.expect((lo..=hi).contains(&s), || format!("{}: slope {s:.4} outside [{lo}, {hi}]", p.name));
    Ok(())
}

fn u_growth(_: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    slope(&make_ujor_lambda(Scalar::zero()), 40, &mut o, 2.85, 3.15)?;
    Ok(o)
}

// c05

fn graded_matches(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let (e, x, l) = (rational(rng), rational(rng), rational(rng));
    o.param("eta(h)", &e);
    o.param("xi(h)", &x);
    o.param("lambda", &l);
    let d1 = YDTriple::trivial_character(1, vec![int(1)]).map_err(crate::families::FamilyError::from)?;
    let xi1 = XiMap::case_a(d1.eta().clone(), vec![Scalar::zero()]).map_err(crate::families::FamilyError::from)?;
    let cases = [
        (make_ujor_lambda(Scalar::zero()), 1),
        (make_u_xi(&d1, &xi1, l.clone())?, 1),
        (u_xi_z2(e.clone(), x, l)?, 2),
        (make_ujor_d(&jordanian_triple(&[])?)?, 1),
        (u_d_z2(e)?, 2),
    ];
    for (p, rank) in cases {
        let name = format!("{} over Z^{rank}", p.name);
        let m = graded_match(&ctx(p, cfg)?, Reference::JordanPlane { rank }, PBW_DEGREE)?;
        o.expect(m.holds(), || format!("{name}: {:?} vs {:?}", m.ours, m.reference));
    }
    Ok(o)
}

fn growth_z(_: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let l = rational(rng);
    o.param("lambda", &l);
    let d1 = YDTriple::trivial_character(1, vec![int(1)]).map_err(crate::families::FamilyError::from)?;
    let xi1 = XiMap::case_a(d1.eta().clone(), vec![Scalar::zero()]).map_err(crate::families::FamilyError::from)?;
    slope(&make_ujor_lambda(Scalar::zero()), 40, &mut o, 2.8, 3.2)?;
    slope(&make_u_xi(&d1, &xi1, l)?, 40, &mut o, 2.8, 3.2)?;
    Ok(o)
}

fn growth_z2(_: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let (e, x, l) = (rational(rng), rational(rng), rational(rng));
    o.param("eta(h)", &e);
    o.param("xi(h)", &x);
    o.param("lambda", &l);
    slope(&u_d_z2(e.clone())?, 30, &mut o, 3.8, 4.2)?;
    slope(&u_xi_z2(e, x, l)?, 30, &mut o, 3.8, 4.2)?;
    Ok(o)
}

// c06

fn hopf_structure(c: &QuotientContext, label: &str, o: &mut Outcome) -> Result<(), CliError> {
    let cf = coproduct_failures(c)?;
    o.expect(cf.is_empty(), || format!("{label}: {}: {}", cf[0].label, cf[0].witness));
    let af = antipode_failures(c)?;
    o.expect(af.is_empty(), || format!("{label}: {}: {}", af[0].label, af[0].witness));
    Ok(())
}

fn u_d_hopf(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    for i in 0..SAMPLES {
        let e = rational(rng);
        o.param(format!("eta(h)[{i}]"), &e);
        hopf_structure(&ctx(u_d_z2(e.clone())?, cfg)?, &format!("eta(h) = {e}"), &mut o)?;
    }
    Ok(o)
}

fn u_xi_hopf(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    for i in 0..SAMPLES {
        let (e, x, l) = (rational(rng), rational(rng), rational(rng));
        o.param(format!("eta,xi,lambda[{i}]"), format!("{e},{x},{l}"));
        hopf_structure(&ctx(u_xi_z2(e, x, l)?, cfg)?, &format!("sample {i}"), &mut o)?;
    }
    Ok(o)
}

// c07

fn expect_matrix(o: &mut Outcome, label: &str, got: &AdjointMatrix, want: Vec<Vec<Scalar>>) {
    o.expect(got.to_rows() == want && got.is_unipotent_upper(), || format!("{label}: got {}", rows(got)));
}

fn adjoint_matrices(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let (e, x, l) = (rational(rng), rational(rng), rational(rng));
    o.param("eta(h)", &e);
    o.param("xi(h)", &x);
    o.param("lambda", &l);
    let (z, u) = (Scalar::zero(), Scalar::one());
    let ud = ctx(u_d_z2(e.clone())?, cfg)?;
    let canon = &half() * &(&(&e * &e) - &e);
    expect_matrix(&mut o, "u(D) ‖g‖", &adjoint_matrix_exp(&[1, 0], &ud)?, matrix3([
        [u.clone(), u.clone(), z.clone()],
        [z.clone(), u.clone(), u.clone()],
        [z.clone(), z.clone(), u.clone()],
    ]));
    expect_matrix(&mut o, "u(D) ‖h‖", &adjoint_matrix_exp(&[0, 1], &ud)?, matrix3([
        [u.clone(), e.clone(), canon],
        [z.clone(), u.clone(), e.clone()],
        [z.clone(), z.clone(), u.clone()],
    ]));
    expect_matrix(&mut o, "u(D) ‖1‖", &adjoint_matrix_exp(&[0, 0], &ud)?, Matrix::identity(3).to_rows());
    let ux = ctx(u_xi_z2(e.clone(), x.clone(), l)?, cfg)?;
    expect_matrix(&mut o, "U_xi ‖g‖", &adjoint_matrix_exp(&[1, 0], &ux)?, matrix3([
        [u.clone(), z.clone(), z.clone()],
        [z.clone(), u.clone(), u.clone()],
        [z.clone(), z.clone(), u.clone()],
    ]));
    expect_matrix(&mut o, "U_xi ‖h‖", &adjoint_matrix_exp(&[0, 1], &ux)?, matrix3([
        [u.clone(), z.clone(), x],
        [z.clone(), u.clone(), e],
        [z.clone(), z, u],
    ]));
    Ok(o)
}

struct MatrixCache<'a> {
    c: &'a QuotientContext,
    memo: HashMap<Vec<i64>, AdjointMatrix>,
}

impl MatrixCache<'_> {
    fn get(&mut self, h: &[i64]) -> Result<AdjointMatrix, CliError> {
        if let Some(m) = self.memo.get(h) {
            return Ok(m.clone());
        }
        let m = adjoint_matrix_exp(h, self.c)?;
        self.memo.insert(h.to_vec(), m.clone());
        Ok(m)
    }
}

fn random_exponents(rng: &mut ChaCha8Rng) -> Vec<i64> {
    vec![rng.gen_range(-2..=2), rng.gen_range(-2..=2)]
}

fn cocycle(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let (e, x, l) = (rational(rng), rational(rng), rational(rng));
    o.param("eta(h)", &e);
    o.param("xi(h)", &x);
    o.param("pairs", PROPERTY_INSTANCES);
    for c in [ctx(u_d_z2(e.clone())?, cfg)?, ctx(u_xi_z2(e.clone(), x.clone(), l.clone())?, cfg)?] {
        let mut cache = MatrixCache { c: &c, memo: HashMap::new() };
        for _ in 0..PROPERTY_INSTANCES {
            let (h, k) = (random_exponents(rng), random_exponents(rng));
            let hk: Vec<i64> = h.iter().zip(&k).map(|(a, b)| a + b).collect();
            let prod = cache.get(&h)?.mul(&cache.get(&k)?);
            let direct = cache.get(&hk)?;
            o.expect(prod == direct, || format!("{}: ‖{h:?}‖‖{k:?}‖ = {} ≠ {}", c.presentation.name, rows(&prod), rows(&direct)));
        }
    }
    Ok(o)
}

fn zeta_eta(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let (e, x, l) = (rational(rng), rational(rng), rational(rng));
    o.param("eta(h)", &e);
    for c in [ctx(u_d_z2(e.clone())?, cfg)?, ctx(u_xi_z2(e.clone(), x.clone(), l.clone())?, cfg)?] {
        let mut cache = MatrixCache { c: &c, memo: HashMap::new() };
        let zg = cache.get(&[1, 0])?.zeta();
        for _ in 0..20 {
            let h = random_exponents(rng);
            let m = cache.get(&h)?;
            let eta = m.eta().expect("3×3");
            o.expect(m.zeta() == &eta * &zg, || format!("{}: h = {h:?}: ζ = {}, η ζ(g) = {}", c.presentation.name, m.zeta(), &eta * &zg));
        }
    }
    Ok(o)
}

fn gamma_h_z(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    for i in 0..5 {
        let (e, r) = (rational(rng), rational(rng));
        o.param(format!("eta,xi[{i}]"), format!("{e},{r}"));
        let canon = &half() * &(&(&e * &e) - &e);
        for xi in [r, canon.clone()] {
            let c = ctx(make_ujor_free_stage(e.clone(), xi.clone())?, cfg)?;
            let h = c.presentation.group_word(&[0, 1])?;
            let got = adjoint_apply(&h, &z_of(&c), &c)?;
            let coeff = &(&(&half() * &e) - &(&half() * &(&e * &e))) + &xi;
            let want = &coeff * &one_minus_g2(&c)?;
            o.expect(got == c.nf(&want)?, || format!("η = {e}, ξ = {xi}: γ_h(z) = {}", c.render(&got)));
            o.expect(got.is_zero() == (xi == canon), || format!("η = {e}, ξ = {xi}: vanishing mismatch"));
        }
    }
    Ok(o)
}

// c08 - c10

fn skew_primitives(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let u = ctx(make_ujor_lambda(Scalar::zero()), cfg)?;
    let space = skew_primitive_space(&u, &g2_word(&u)?, 2)?;
    o.param("dimension", space.len());
    let omg2 = one_minus_g2(&u)?;
    let spanned = space.len() == 1 && {
        let v = &space[0];
        v == &(&v.coeff(&Word::one()) * &omg2)
    };
    o.expect(spanned, || format!("basis {:?}", space.iter().map(|p| u.render(p)).collect::<Vec<_>>()));
    Ok(o)
}

fn braid(_: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let b = BraidedSpace::v12();
    o.expect(b.is_invertible(), || "braiding not invertible".into());
    o.expect(b.check_braid_equation(), || "braid equation fails".into());
    Ok(o)
}

fn indecomposable(cfg: &SuiteConfig, _: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let c = ctx(make_example_indecomposable(), cfg)?;
    let (gm, a, gi) = (c.var("gamma"), c.var("a"), c.var("gamma_inv"));
    let conj = c.nf(&gm.nc_mul(&a).nc_mul(&gi))?;
    let want = &(&a + &NCPolynomial::one()) - &gm;
    o.expect(conj == want, || format!("γaγ⁻¹ = {}", c.render(&conj)));
    let m = adjoint_matrix_exp(&[1], &c)?;
    o.expect(m.to_rows() == vec![vec![int(1), int(1)], vec![int(0), int(1)]], || format!("‖γ‖ = {}", rows(&m)));
    let gm = graded_match(&c, Reference::FreeRankOne { rank: 1 }, PBW_DEGREE)?;
    o.expect(gm.holds(), || format!("{:?} vs {:?}", gm.ours, gm.reference));
    o.param("counts", format!("{:?}", gm.ours));
    Ok(o)
}

// c11

fn free_instances(
    rng: &mut ChaCha8Rng,
    o: &mut Outcome,
    maxdeg: usize,
    mut f: impl FnMut(&AlgebraPresentation, &[NCPolynomial; 3], &mut Outcome) -> Result<(), CliError>,
) -> Result<(), CliError> {
    o.param("instances", PROPERTY_INSTANCES);
    let families = [make_wujor(), make_ohn(int(1))?, make_example_indecomposable()];
    for i in 0..PROPERTY_INSTANCES {
        let p = &families[i % families.len()];
        let ls = letters_of(p);
        let xs = [random_poly(rng, &ls, maxdeg, 3), random_poly(rng, &ls, maxdeg, 3), random_poly(rng, &ls, maxdeg, 3)];
        f(p, &xs, o)?;
    }
    Ok(())
}

fn prop_associativity(_: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    free_instances(rng, &mut o, 3, |p, [x, y, z], o| {
        let l = x.nc_mul(y).nc_mul(z);
        let r = x.nc_mul(&y.nc_mul(z));
        o.expect(l == r, || format!("{}: ({})({})({})", p.name, x.render(&p.alphabet), y.render(&p.alphabet), z.render(&p.alphabet)));
        Ok(())
    })?;
    Ok(o)
}

fn prop_delta_mult(_: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    free_instances(rng, &mut o, 3, |p, [x, y, _], o| {
        let a = &p.alphabet;
        let l = free_coproduct(&x.nc_mul(y), a)?;
        let r = free_coproduct(x, a)?.mul(&free_coproduct(y, a)?);
        o.expect(l == r, || format!("{}: Δ(xy) ≠ Δ(x)Δ(y) for x = {}", p.name, x.render(a)));
        Ok(())
    })?;
    Ok(o)
}

fn prop_coassociativity(_: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    free_instances(rng, &mut o, 4, |p, [x, _, _], o| {
        let a = &p.alphabet;
        let d = free_coproduct(x, a)?;
        o.expect(coproduct_left(&d, a)? == coproduct_right(&d, a)?, || format!("{}: {}", p.name, x.render(a)));
        Ok(())
    })?;
    Ok(o)
}

fn prop_counit(_: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    free_instances(rng, &mut o, 4, |p, [x, _, _], o| {
        let a = &p.alphabet;
        let d = free_coproduct(x, a)?;
        o.expect(&counit_left(&d, a)? == x && &counit_right(&d, a)? == x, || format!("{}: {}", p.name, x.render(a)));
        Ok(())
    })?;
    Ok(o)
}

fn quotient_instances(
    cfg: &SuiteConfig,
    rng: &mut ChaCha8Rng,
    o: &mut Outcome,
    mut f: impl FnMut(&QuotientContext, &[NCPolynomial; 2], &mut ChaCha8Rng, &mut Outcome) -> Result<(), CliError>,
) -> Result<(), CliError> {
    let (l, h, e) = (rational(rng), nonzero_rational(rng), rational(rng));
    o.param("lambda", &l);
    o.param("hbar", &h);
    o.param("eta(h)", &e);
    o.param("instances", PROPERTY_INSTANCES);
    let cs = [ctx(make_ujor_lambda(l), cfg)?, ctx(make_ohn(h)?, cfg)?, ctx(u_d_z2(e)?, cfg)?];
    for i in 0..PROPERTY_INSTANCES {
        let c = &cs[i % cs.len()];
        let ls = letters_of(&c.presentation);
        let xs = [random_poly(rng, &ls, 3, 3), random_poly(rng, &ls, 3, 3)];
        f(c, &xs, rng, o)?;
    }
    Ok(())
}

fn prop_nf_linear(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    quotient_instances(cfg, rng, &mut o, |c, [x, y], rng, o| {
        let (a, b) = (rational(rng), rational(rng));
        let mut lhs = &a * x;
        lhs.add_scaled(y, &b);
        let mut rhs = &a * &c.nf(x)?;
        rhs.add_scaled(&c.nf(y)?, &b);
        o.expect(c.nf(&lhs)? == rhs, || format!("{}: x = {}", c.presentation.name, c.render(x)));
        Ok(())
    })?;
    Ok(o)
}

fn prop_nf_mult(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    quotient_instances(cfg, rng, &mut o, |c, [x, y], _, o| {
        let l = c.nf(&x.nc_mul(y))?;
        let r = c.nf(&c.nf(x)?.nc_mul(&c.nf(y)?))?;
        o.expect(l == r, || format!("{}: x = {}, y = {}", c.presentation.name, c.render(x), c.render(y)));
        Ok(())
    })?;
    Ok(o)
}

fn prop_nf_strategy(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    quotient_instances(cfg, rng, &mut o, |c, [x, y], _, o| {
        let p = x.nc_mul(y);
        let l = c.system.normal_form_with(&p, Strategy::Leftmost)?;
        let r = c.system.normal_form_with(&p, Strategy::Rightmost)?;
        o.expect(l == r, || format!("{}: {}", c.presentation.name, c.render(&p)));
        Ok(())
    })?;
    Ok(o)
}

fn prop_adjoint_product(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Result<Outcome, CliError> {
    let mut o = Outcome::default();
    let (e, x0, l) = (rational(rng), rational(rng), rational(rng));
    o.param("eta(h)", &e);
    o.param("xi(h)", &x0);
    o.param("instances", PROPERTY_INSTANCES);
    let cs = [ctx(u_d_z2(e.clone())?, cfg)?, ctx(u_xi_z2(e, x0, l)?, cfg)?];
    for i in 0..PROPERTY_INSTANCES {
        let c = &cs[i % cs.len()];
        let ls = letters_of(&c.presentation);
        let (x, y) = (random_poly(rng, &ls, 3, 3), random_poly(rng, &ls, 3, 3));
        let hv = random_exponents(rng);
        let h = c.presentation.group_word(&hv)?;
        let gx = adjoint_apply(&h, &x, c)?;
        let gy = adjoint_apply(&h, &y, c)?;
        let lhs = adjoint_apply(&h, &x.nc_mul(&y), c)?;
        let rhs = c.nf(&(&gx.nc_mul(&(&gy + &y)) + &x.nc_mul(&gy)))?;
        o.expect(lhs == rhs, || format!("{}: h = {hv:?}, x = {}, y = {}", c.presentation.name, c.render(&x), c.render(&y)));
    }
    Ok(o)
}
