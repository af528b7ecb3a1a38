//! Shipped presentation files define the same algebras as the built-in
//! families: each side's relations vanish in the other's quotient, and the
//! normal-word counts agree.

use std::collections::BTreeMap;

use jordan_lift::cli::{build_family, parse_expr, parse_presentation};
use jordan_lift::families::AlgebraPresentation;
use jordan_lift::hopfcheck::QuotientContext;
use jordan_lift::ncpoly::NCPolynomial;
use jordan_lift::rewrite::count_normal_words;

fn load_file(name: &str) -> AlgebraPresentation {
    let path = format!("{}/presentations/{name}", env!("CARGO_MANIFEST_DIR"));
    let src = std::fs::read_to_string(&path).unwrap();
    parse_presentation(&src, name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn family(name: &str, params: &[(&str, &str)]) -> AlgebraPresentation {
    let raw: BTreeMap<String, String> = params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect();
    build_family(name, &raw).unwrap()
}

/// Moves `p` into the other alphabet by name.
fn transport(p: &NCPolynomial, from: &QuotientContext, to: &QuotientContext) -> NCPolynomial {
    let al = &from.presentation.alphabet;
    parse_expr(&p.render(al), &to.presentation.alphabet).unwrap()
}

fn relations_vanish(from: &QuotientContext, to: &QuotientContext) {
    for r in &from.presentation.relations {
        let moved = transport(r, from, to);
        assert!(to.nf(&moved).unwrap().is_zero(), "{} does not vanish in {}", r.render(&from.presentation.alphabet), to.presentation.name);
    }
}

fn assert_same_algebra(file: &str, fam: AlgebraPresentation) {
    let a = QuotientContext::new(load_file(file), 6).unwrap();
    let b = QuotientContext::new(fam, 6).unwrap();
    assert!(a.certificate.exhaustive && b.certificate.exhaustive, "{file}");
    relations_vanish(&a, &b);
    relations_vanish(&b, &a);
    assert_eq!(count_normal_words(&a.system, 12), count_normal_words(&b.system, 12), "{file}");
}

#[test]
fn jordan_plane_file() {
    assert_same_algebra("jordan_plane.pres", family("jordan_plane", &[]));
}

#[test]
fn wujor_files() {
    assert_same_algebra("wujor.pres", family("wujor", &[]));
    assert_same_algebra("wujor_bare.pres", family("wujor", &[]));
}

#[test]
fn u_file() {
    assert_same_algebra("u.pres", family("u", &[("lambda", "0")]));
}

#[test]
fn ohn_file() {
    assert_same_algebra("ohn.pres", family("ohn", &[("hbar", "1")]));
}

#[test]
fn ujor_d_file() {
    assert_same_algebra("ujor_d_z2.pres", family("ujor_d", &[("eta", "1,3")]));
}

#[test]
fn u_xi_file() {
    assert_same_algebra("u_xi_z2.pres", family("u_xi", &[("eta", "1,2"), ("xi", "0,5/2"), ("lambda", "2/3")]));
}

#[test]
fn a_different_parameter_is_a_different_algebra() {
    let a = QuotientContext::new(load_file("ohn.pres"), 6).unwrap();
    let b = QuotientContext::new(family("ohn", &[("hbar", "2")]), 6).unwrap();
    let moved: Vec<bool> =
        a.presentation.relations.iter().map(|r| b.nf(&transport(r, &a, &b)).unwrap().is_zero()).collect();
    assert!(moved.contains(&false));
}
