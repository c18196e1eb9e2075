mod common;

use num_traits::Zero;

use su2_centralizer::bratteli::{build_bratteli, centralizer_dim, coupling_sets, tensor_decompose};
use su2_centralizer::diagalg::{bb_basis, bb_presentation, btl_presentation, verify_btl_iso};
use su2_centralizer::exact::{kron, mat_rank, minimal_polynomial, q, qi, span_closure, Matrix, Rational};
use su2_centralizer::ncalg::{
    certify_closure, check_homomorphism, find_basis, structure_constants, truncated_dim, NCPoly, Presentation, Word,
};
use su2_centralizer::racah::{
    build_quotient, hjk_presentation, verify_braid_remark, verify_derived_identities, verify_kernel_on_matrices,
    verify_s3_invariance, DerivedCase,
};
use su2_centralizer::su2rep::{
    build_context, spectrum_difference, spin_rep, verify_casimir_identity, CasimirLabel, Difference,
};
use su2_centralizer::Spin;

use common::s;

fn diag(v: &[i64]) -> Matrix<Rational> {
    Matrix::from_diag(&v.iter().map(|&x| qi(x)).collect::<Vec<_>>())
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| qi(x)).collect()
}

fn words(ws: &[&[u8]]) -> Vec<Word> {
    ws.iter().map(|w| Word::new(w.to_vec())).collect()
}

/// `TL_3(1)` written in `A = 2 − σ1`, `B = 2 − σ2`.
fn tl_in_ab() -> Presentation {
    let p = Presentation::new(&["A", "B"]);
    let (a, b) = (p.gen("A"), p.gen("B"));
    let ab = a.anticommutator(&b);
    let aba = (&(&ab.scale(&qi(2)) - &a.scale(&qi(3))) - &b.scale(&qi(4))).add_scalar(&qi(6));
    let bab = (&(&ab.scale(&qi(2)) - &a.scale(&qi(4))) - &b.scale(&qi(3))).add_scalar(&qi(6));
    p.with_relation("A^2", &(&a * &a) - &a.scale(&qi(2)))
        .with_relation("B^2", &(&b * &b) - &b.scale(&qi(2)))
        .with_relation("ABA", &(&(&a * &b) * &a) - &aba)
        .with_relation("BAB", &(&(&b * &a) * &b) - &bab)
}

fn tl_in_sigma() -> Presentation {
    let p = Presentation::new(&["s1", "s2"]);
    let (s1, s2) = (p.gen("s1"), p.gen("s2"));
    p.with_relation("s1^2", &(&s1 * &s1) - &s1.scale(&qi(2)))
        .with_relation("s2^2", &(&s2 * &s2) - &s2.scale(&qi(2)))
        .with_relation("s1s2s1", &(&(&s1 * &s2) * &s1) - &s1)
        .with_relation("s2s1s2", &(&(&s2 * &s1) * &s2) - &s2)
}

#[test]
fn ranks() {
    assert_eq!(mat_rank(&Matrix::<Rational>::identity(3)), 3);
    assert_eq!(mat_rank(&Matrix::<Rational>::zeros(2, 2)), 0);
    assert_eq!(mat_rank(&Matrix::from_rows(vec![ints(&[1, 2]), ints(&[2, 4])])), 1);
}

#[test]
fn kronecker_products() {
    assert_eq!(kron(&Matrix::<Rational>::identity(2), &Matrix::identity(3)), Matrix::identity(6));
    let k = kron(&diag(&[1, 2]), &Matrix::identity(2));
    assert_eq!(k, diag(&[1, 1, 2, 2]));
    let big = kron(&Matrix::<Rational>::zeros(2, 2), &Matrix::zeros(3, 3));
    assert_eq!((big.rows(), big.cols()), (6, 6));
}

#[test]
fn minimal_polynomials() {
    assert_eq!(minimal_polynomial(&Matrix::<Rational>::identity(4)), ints(&[-1, 1]));
    assert_eq!(minimal_polynomial(&diag(&[0, 2])), ints(&[0, -2, 1]));
    let ctx = build_context(Spin::HALF, Spin::HALF, Spin::HALF).unwrap();
    assert_eq!(minimal_polynomial(ctx.casimir(CasimirLabel::K12)), ints(&[0, -2, 1]));
}

#[test]
fn span_closures() {
    assert_eq!(span_closure(&[Matrix::<Rational>::identity(3)]).len(), 1);
    assert_eq!(span_closure(&[diag(&[1, 2])]).len(), 2);
    let ctx = build_context(Spin::HALF, Spin::HALF, Spin::HALF).unwrap();
    let gens = [ctx.casimir(CasimirLabel::K12).clone(), ctx.casimir(CasimirLabel::K23).clone()];
    assert_eq!(span_closure(&gens).len(), 5);
}

#[test]
fn spin_representations() {
    let r0 = spin_rep::<Rational>(Spin::ZERO);
    assert!(r0.e.is_zero() && r0.f.is_zero() && r0.h.is_zero() && r0.h.rows() == 1);
    let r = spin_rep::<Rational>(Spin::HALF);
    assert_eq!(r.h, diag(&[1, -1]));
    assert_eq!(r.e.entries().iter().filter(|x| !x.is_zero()).count(), 1);
    assert_eq!(r.f.entries().iter().filter(|x| !x.is_zero()).count(), 1);
    assert_eq!(spin_rep::<Rational>(Spin::ONE).casimir(), Matrix::scalar(3, qi(2)));
    for t in 0..=6 {
        assert!(spin_rep::<Rational>(s(t)).satisfies_chevalley());
        assert!(spin_rep::<f64>(s(t)).satisfies_chevalley());
    }
}

#[test]
fn casimir_identity_and_spectra() {
    for j in [[Spin::HALF; 3], [Spin::ONE; 3], [s(4), s(2), s(3)]] {
        assert!(verify_casimir_identity(&build_context(j[0], j[1], j[2]).unwrap()));
    }
    let ctx = build_context(Spin::HALF, Spin::HALF, Spin::HALF).unwrap();
    assert_eq!(spectrum_difference(&ctx, Difference::Total12).unwrap(), vec![q(-5, 4), q(3, 4), q(7, 4)]);
    let ctx = build_context(Spin::ONE, Spin::ONE, Spin::ONE).unwrap();
    assert_eq!(spectrum_difference(&ctx, Difference::Total12).unwrap(), ints(&[-4, -2, 0, 2, 4, 6]));
    let ctx = build_context(s(3), Spin::ZERO, Spin::ZERO).unwrap();
    assert_eq!(spectrum_difference(&ctx, Difference::Total12).unwrap(), ints(&[0]));
}

#[test]
fn clebsch_gordan_and_bratteli() {
    assert_eq!(tensor_decompose(Spin::HALF, Spin::HALF), vec![Spin::ZERO, Spin::ONE]);
    assert_eq!(tensor_decompose(s(5), Spin::ZERO), vec![s(5)]);
    assert_eq!(tensor_decompose(s(3), s(3)), vec![s(0), s(2), s(4), s(6)]);
    assert_eq!(build_bratteli(Spin::HALF, Spin::HALF, Spin::HALF).bottom, vec![(s(1), 2), (s(3), 1)]);
    assert_eq!(
        build_bratteli(Spin::ONE, Spin::ONE, Spin::ONE).bottom,
        vec![(s(0), 1), (s(2), 3), (s(4), 2), (s(6), 1)]
    );
    assert_eq!(build_bratteli(s(3), s(3), s(3)).bottom, vec![(s(1), 2), (s(3), 4), (s(5), 3), (s(7), 2), (s(9), 1)]);
    assert_eq!(coupling_sets(Spin::ONE, Spin::HALF, Spin::HALF).m231, ints(&[-2, 0, 2, 4]));
    assert_eq!(
        coupling_sets(Spin::HALF, Spin::ONE, Spin::ONE).m231,
        vec![q(-9, 4), q(-5, 4), q(3, 4), q(7, 4), q(11, 4)]
    );
    assert_eq!(centralizer_dim(Spin::HALF, Spin::HALF, Spin::HALF), 5);
    assert_eq!(centralizer_dim(Spin::HALF, Spin::ONE, Spin::ONE), 9);
    assert_eq!(centralizer_dim(s(4), Spin::ONE, Spin::ONE), 19);
    assert_eq!(centralizer_dim(s(7), Spin::ZERO, Spin::ZERO), 1);
}

#[test]
fn truncated_dimensions() {
    assert_eq!(truncated_dim(&tl_in_sigma(), 5), 5);
    assert_eq!(truncated_dim(&btl_presentation(Spin::ONE), 6), 6);
    assert_eq!(truncated_dim(&bb_presentation(), 6), 9);
}

#[test]
fn closure_certificates() {
    let pres = build_quotient(Spin::HALF, Spin::HALF, Spin::HALF).presentation;
    assert!(certify_closure(&pres, &words(&[&[], &[0], &[1], &[0, 1], &[1, 0]]), 5));
    let h = hjk_presentation(Spin::ONE, Spin::HALF, &qi(2));
    assert!(certify_closure(&h, &words(&[&[], &[0], &[1], &[0, 1]]), 5));
    let free = Presentation::new(&["A", "B"]);
    for level in 2..=5 {
        assert!(!certify_closure(&free, &words(&[&[]]), level));
    }
}

#[test]
fn structure_constant_tables() {
    let tl = tl_in_ab();
    let basis = words(&[&[], &[0], &[1], &[0, 1], &[1, 0]]);
    let t = structure_constants(&tl, &basis, 5).unwrap();
    assert_eq!(t[1][2], ints(&[0, 0, 0, 1, 0]));
    assert_eq!(t[3][1], ints(&[6, -3, -4, 2, 2]));

    let t = structure_constants(&bb_presentation(), &bb_basis(), 6).unwrap();
    let e0e1 = 4;
    let mut expected = vec![qi(0); 9];
    expected[2] = q(3, 2);
    assert_eq!(t[2][e0e1], expected);
}

#[test]
fn homomorphisms() {
    let (h, one) = (Spin::HALF, Spin::ONE);
    let src = build_quotient(one, one, h).presentation;
    let dst = build_quotient(h, one, one).presentation;
    let (a, b, c) = (dst.gen("A"), dst.gen("B"), dst.gen("C"));
    assert!(check_homomorphism(&src, &[b, a, c], &dst, None, 7).unwrap());

    let racah = build_quotient(h, h, h).presentation;
    let tl = tl_in_sigma();
    let (s1, s2) = (tl.gen("s1"), tl.gen("s2"));
    let two = NCPoly::constant(qi(2));
    let (ia, ib) = (&two - &s1, &two - &s2);
    let g = (&(&ia.anticommutator(&ib) - &ia.scale(&qi(2))) - &ib.scale(&qi(2))).add_scalar(&qi(4));
    let ic = g.add_scalar(&q(-1, 4));
    assert!(check_homomorphism(&racah, &[ia, ib, ic], &tl, None, 5).unwrap());

    let wrong = [tl.gen("s1"), tl.gen("s2"), NCPoly::zero()];
    assert!(!check_homomorphism(&racah, &wrong, &tl, None, 5).unwrap());
}

#[test]
fn permutation_maps() {
    let r = verify_s3_invariance(Spin::ONE, Spin::HALF, Spin::ONE, 7).unwrap();
    assert!(r.holds(), "{r:?}");
    assert!(r.phi2_involutive);
    let r = verify_s3_invariance(Spin::HALF, Spin::HALF, Spin::HALF, 7).unwrap();
    assert!(r.holds());
    let r = verify_s3_invariance(Spin::HALF, Spin::ONE, s(3), 7).unwrap();
    assert!(r.set_laws);
}

#[test]
fn kernels() {
    for j in [[Spin::HALF; 3], [Spin::ONE; 3], [s(3), Spin::ONE, Spin::HALF]] {
        assert!(verify_kernel_on_matrices(j[0], j[1], j[2]).unwrap().all_vanish);
    }
}

#[test]
fn closed_form_identities() {
    for case in [
        DerivedCase::TlSimplified,
        DerivedCase::BrauerC,
        DerivedCase::BtlLemma(Spin::ONE),
        DerivedCase::BbG,
        DerivedCase::BbPresentation,
    ] {
        let r = verify_derived_identities(case).unwrap();
        assert!(r.holds, "{r:?}");
    }
    assert!(verify_derived_identities(DerivedCase::BtlLemma(Spin::HALF)).is_err());
}

#[test]
fn braid_samples() {
    for (j, z, c) in [(Spin::ONE, q(1, 2), q(7, 4)), (s(3), qi(1), q(11, 4)), (Spin::ONE, qi(0), qi(2))] {
        let r = verify_braid_remark(j, &z, 7).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.c, c);
    }
}

#[test]
fn boundary_temperley_lieb_at_two() {
    let r = verify_btl_iso(s(4)).unwrap();
    assert!(r.holds);
    assert_eq!(r.central_spectrum, ["0", "3/2", "5/2"]);
    assert_eq!(find_basis(&btl_presentation(s(4)), 6).unwrap().dim(), 6);
}
