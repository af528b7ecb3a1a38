use super::*;
use crate::families::{
    jordanian_triple, make_example_indecomposable, make_lifting, make_ohn, make_u_xi, make_ujor_d,
    make_free_u, make_ujor_free_stage, make_ujor_lambda, make_wujor, Action, LiftingSpec, TopRelation,
};
use crate::groupdata::{GroupSpec, XiMap, YDTriple};
use crate::ncpoly::{NCPolynomial, Word};
use num_traits::Zero;

use crate::scalar::{half, int, q, Scalar};

fn ctx(p: AlgebraPresentation) -> QuotientContext {
    QuotientContext::new(p, 6).unwrap()
}

fn z(q: &QuotientContext) -> NCPolynomial {
    let (a1, a2) = (q.var("a1"), q.var("a2"));
    let mut z = &a1.nc_mul(&a2) - &a2.nc_mul(&a1);
    z.add_scaled(&a1.nc_mul(&a1), &-half());
    z.add_scaled(&a2, &int(1));
    z.add_scaled(&a1, &half());
    z
}

fn g2(q: &QuotientContext) -> Word {
    q.presentation.group_word(&[2]).unwrap()
}

#[test]
fn z_is_skew_primitive_in_wujor() {
    let w = ctx(make_wujor());
    let zz = z(&w);
    let d = coproduct_in_quotient(&zz, &w).unwrap();
    let g2p = NCPolynomial::word(g2(&w));
    let mut expected = TensorElement::from_pair(&w.nf(&zz).unwrap(), &NCPolynomial::one());
    expected.add_scaled(&TensorElement::from_pair(&g2p, &w.nf(&zz).unwrap()), &int(1));
    assert_eq!(d, w.nf_tensor(&expected).unwrap());
    assert!(is_skew_primitive(&zz, &g2(&w), &w).unwrap());
    for lambda in [int(1), q(-1, 32), q(7, 3)] {
        let mut p = zz.clone();
        p.add_scaled(&(&NCPolynomial::one() - &g2p), &-&lambda);
        assert!(is_skew_primitive(&p, &g2(&w), &w).unwrap());
    }
    let a1 = w.var("a1");
    assert!(!is_skew_primitive(&a1.nc_mul(&a1), &g2(&w), &w).unwrap());
    assert!(adjoint_apply(&w.presentation.group_word(&[1]).unwrap(), &zz, &w).unwrap().is_zero());
}

#[test]
fn simple_coproducts() {
    let w = ctx(make_wujor());
    let g = w.var("g");
    let one = NCPolynomial::one();
    let omg = &one - &g;
    let mut expected = TensorElement::from_pair(&omg, &one);
    expected.add_scaled(&TensorElement::from_pair(&g, &omg), &int(1));
    assert_eq!(coproduct_in_quotient(&omg, &w).unwrap(), expected);

    let o = ctx(make_ohn(int(2)).unwrap());
    let x = o.var("K").nc_mul(&o.var("T_inv"));
    let tm2 = o.var("T_inv").nc_mul(&o.var("T_inv"));
    let mut expected = TensorElement::from_pair(&x, &one);
    expected.add_scaled(&TensorElement::from_pair(&tm2, &x), &int(1));
    assert_eq!(coproduct_in_quotient(&x, &o).unwrap(), o.nf_tensor(&expected).unwrap());
}

#[test]
fn gamma_on_generators() {
    let w = ctx(make_wujor());
    let g = w.presentation.group_word(&[1]).unwrap();
    let one = NCPolynomial::one();
    assert_eq!(adjoint_apply(&g, &w.var("a1"), &w).unwrap(), &one - &w.var("g"));
    assert_eq!(adjoint_apply(&g, &w.var("a2"), &w).unwrap(), w.var("a1"));
}

#[test]
fn gamma_h_of_z_in_free_stage() {
    for r in [int(0), int(3), q(5, 2)] {
        let f = ctx(make_ujor_free_stage(int(3), r.clone()).unwrap());
        let h = f.presentation.group_word(&[0, 1]).unwrap();
        let got = adjoint_apply(&h, &z(&f), &f).unwrap();
        let omg2 = &NCPolynomial::one() - &NCPolynomial::word(f.presentation.group_word(&[2, 0]).unwrap());
        assert_eq!(got, &(&r - &int(3)) * &omg2, "r = {r}");
    }
}

#[test]
fn adjoint_matrices() {
    let d = jordanian_triple(&[int(3)]).unwrap();
    let ud = ctx(make_ujor_d(&d).unwrap());
    let g = adjoint_matrix_exp(&[1, 0], &ud).unwrap();
    assert_eq!(g.to_rows(), vec![vec![int(1), int(1), int(0)], vec![int(0), int(1), int(1)], vec![int(0), int(0), int(1)]]);
    let h = adjoint_matrix_exp(&[0, 1], &ud).unwrap();
    assert_eq!((h.zeta(), h.eta(), h.xi()), (int(3), Some(int(3)), Some(int(3))));
    assert_eq!(adjoint_matrix_exp(&[1, 1], &ud).unwrap(), g.mul(&h));
    assert_eq!(adjoint_matrix_exp(&[0, 0], &ud).unwrap().to_rows(), crate::linalg::Matrix::identity(3).to_rows());

    let yd = YDTriple::trivial_character(2, vec![int(1), q(2, 3)]).unwrap();
    let xi = XiMap::case_a(yd.eta().clone(), vec![Scalar::zero(), q(-5, 4)]).unwrap();
    let u = ctx(make_u_xi(&yd, &xi, int(1)).unwrap());
    let h = adjoint_matrix_exp(&[0, 1], &u).unwrap();
    assert_eq!(h.to_rows(), vec![vec![int(1), int(0), q(-5, 4)], vec![int(0), int(1), q(2, 3)], vec![int(0), int(0), int(1)]]);
    assert!(h.is_unipotent_upper());
    let inv = adjoint_matrix_exp(&[0, -1], &u).unwrap();
    assert_eq!(inv.mul(&h).to_rows(), crate::linalg::Matrix::identity(3).to_rows());
}

#[test]
fn indecomposable_jordan_block() {
    let e = ctx(make_example_indecomposable());
    let m = adjoint_matrix_exp(&[1], &e).unwrap();
    assert_eq!(m.to_rows(), vec![vec![int(1), int(1)], vec![int(0), int(1)]]);
    let gm = graded_match(&e, Reference::FreeRankOne { rank: 1 }, 8).unwrap();
    assert!(gm.holds(), "{gm:?}");
}

#[test]
fn descent_for_families() {
    let d = jordanian_triple(&[int(3)]).unwrap();
    let ud = ctx(make_ujor_d(&d).unwrap());
    assert!(coproduct_descends(&ud).unwrap());
    assert!(antipode_descends(&ud).unwrap());
    let yd = YDTriple::trivial_character(2, vec![int(1), int(2)]).unwrap();
    let xi = XiMap::case_a(yd.eta().clone(), vec![Scalar::zero(), q(1, 3)]).unwrap();
    let u = ctx(make_u_xi(&yd, &xi, q(-2, 5)).unwrap());
    assert_eq!(coproduct_failures(&u).unwrap(), vec![]);
    assert_eq!(antipode_failures(&u).unwrap(), vec![]);
    let o = ctx(make_ohn(q(-1, 3)).unwrap());
    assert_eq!(coproduct_failures(&o).unwrap(), vec![]);
    assert_eq!(antipode_failures(&o).unwrap(), vec![]);
}

#[test]
fn broken_presentations_fail_descent() {
    // without conjugation relations a1² is not killed by Δ
    let f = make_free_u();
    let a1 = f.var("a1");
    let broken = ctx(f.with_extra_relation(a1.nc_mul(&a1), "a1^2"));
    assert!(!coproduct_descends(&broken).unwrap());
    // in ũ the same relation forces g = 1, a1 = 0 and the quotient k[a2] is Hopf
    let w = make_wujor();
    let a1 = w.var("a1");
    let collapsed = ctx(w.with_extra_relation(a1.nc_mul(&a1), "a1^2"));
    assert!(collapsed.nf(&collapsed.var("g")).unwrap().coeff(&Word::one()) == int(1));
    assert!(coproduct_descends(&collapsed).unwrap());

    // ξ(g) ≠ 0 with the diagonal top relation
    let p = make_lifting(&LiftingSpec {
        name: "bad".into(),
        group: GroupSpec::standard(1).unwrap(),
        skew_names: vec!["a1".into(), "a2".into()],
        action: Some(vec![Action::new(Scalar::zero(), int(1), int(1))]),
        top: TopRelation::Diagonal { lambda: Scalar::zero() },
        params: Default::default(),
        provenance: "xi(g) = 1".into(),
    })
    .unwrap();
    let bad = ctx(p);
    let fails = coproduct_failures(&bad).unwrap();
    assert_eq!(fails.len(), 1, "{fails:?}");
    assert!(fails[0].label.contains("coproduct"));
}

fn phi_lambda_mu<'a>(src: &'a QuotientContext, tgt: &'a QuotientContext, mu: &Scalar) -> HopfMapSpec<'a> {
    let mut a2 = tgt.var("a2");
    a2.add_scaled(&(&NCPolynomial::one() - &tgt.var("g")), mu);
    HopfMapSpec::new(src, tgt, &[("g", tgt.var("g")), ("a1", tgt.var("a1")), ("a2", a2)]).unwrap()
}

#[test]
fn phi_lambda_mu_is_hopf_map() {
    for (l, m) in [(int(0), int(1)), (int(2), int(-3)), (half(), q(1, 3))] {
        let src = ctx(make_ujor_lambda(&l + &m));
        let tgt = ctx(make_ujor_lambda(l.clone()));
        let phi = phi_lambda_mu(&src, &tgt, &m);
        assert_eq!(hopf_map_failures(&phi).unwrap(), vec![]);
        // wrong shift breaks the top relation
        let psi = phi_lambda_mu(&src, &tgt, &(&m + &int(1)));
        assert!(!check_hopf_map(&psi).unwrap());
    }
    let w = ctx(make_wujor());
    let mu = q(4, 9);
    let phi = phi_lambda_mu(&w, &w, &mu);
    let diff = w.nf(&(&phi.apply(&z(&w)).unwrap() - &z(&w))).unwrap();
    let omg2 = &NCPolynomial::one() - &NCPolynomial::word(g2(&w));
    assert_eq!(diff, &mu * &omg2);
}

#[test]
fn phi_zero_lambda_is_iso() {
    for l in [int(1), q(-1, 32), q(5, 7)] {
        let src = ctx(make_ujor_lambda(l.clone()));
        let tgt = ctx(make_ujor_lambda(Scalar::zero()));
        let phi = phi_lambda_mu(&src, &tgt, &l);
        assert!(check_hopf_map(&phi).unwrap());
        assert_eq!(check_iso_up_to_degree(&phi, 6).unwrap(), IsoVerdict::IsoUpTo(6));
    }
    let u = ctx(make_ujor_lambda(Scalar::zero()));
    let id = phi_lambda_mu(&u, &u, &Scalar::zero());
    assert_eq!(check_iso_up_to_degree(&id, 4).unwrap(), IsoVerdict::IsoUpTo(4));
}

fn psi<'a>(src: &'a QuotientContext, tgt: &'a QuotientContext, hbar: &Scalar) -> HopfMapSpec<'a> {
    let ti = tgt.var("T_inv");
    let x = tgt.var("K").nc_mul(&ti);
    let y = tgt.var("Y").nc_mul(&ti);
    let mut a2 = &(-(q(1, 4) / hbar)) * &y;
    a2.add_scaled(&x, &q(-1, 4));
    HopfMapSpec::new(src, tgt, &[("g", ti.nc_mul(&ti)), ("a1", &half() * &x), ("a2", a2)]).unwrap()
}

#[test]
fn jordanian_sl2_embedding() {
    let src = ctx(make_ujor_lambda(q(-1, 32)));
    for h in [int(1), int(2), q(-1, 3)] {
        let tgt = ctx(make_ohn(h.clone()).unwrap());
        let map = psi(&src, &tgt, &h);
        assert_eq!(hopf_map_failures(&map).unwrap(), vec![]);
        match check_iso_up_to_degree(&map, 4).unwrap() {
            IsoVerdict::Fails { kind: IsoFailure::Surjectivity, witness } => assert!(witness.contains('T'), "{witness}"),
            other => panic!("{other:?}"),
        }
    }
    // other values of λ are not mapped consistently
    let wrong = ctx(make_ujor_lambda(int(0)));
    let tgt = ctx(make_ohn(int(1)).unwrap());
    assert!(!check_hopf_map(&psi(&wrong, &tgt, &int(1))).unwrap());
}

#[test]
fn skew_primitives_of_degree_two() {
    let u = ctx(make_ujor_lambda(Scalar::zero()));
    let space = skew_primitive_space(&u, &g2(&u), 2).unwrap();
    assert_eq!(space.len(), 1);
    let omg2 = &NCPolynomial::one() - &NCPolynomial::word(g2(&u));
    let v = &space[0];
    let c = v.coeff(&Word::one());
    assert_eq!(v, &(&c * &omg2));
}

#[test]
fn graded_counts() {
    assert_eq!(sphere_counts(2, 4), vec![1, 4, 8, 12, 16]);
    assert_eq!(reference_counts(Reference::JordanPlane { rank: 1 }, 3), vec![1, 4, 9, 16]);
    let u = ctx(make_ujor_lambda(Scalar::zero()));
    assert!(graded_match(&u, Reference::JordanPlane { rank: 1 }, 8).unwrap().holds());
    let d = jordanian_triple(&[int(2)]).unwrap();
    let ud = ctx(make_ujor_d(&d).unwrap());
    assert!(graded_match(&ud, Reference::JordanPlane { rank: 2 }, 8).unwrap().holds());
    assert!(!graded_match(&ud, Reference::JordanPlane { rank: 1 }, 8).unwrap().holds());
}
