mod common;

use num_traits::Zero;
use proptest::prelude::*;

use su2_centralizer::bratteli::{build_bratteli, centralizer_dim, coupling_sets, tensor_decompose};
use su2_centralizer::diagalg::{enumerate_diagrams, BrauerDiagram, DiagElement};
use su2_centralizer::exact::{
    eval_poly, kron, mat_rank, minimal_polynomial, qi, span_closure, span_dim, split_over, AlgebraElement, Matrix,
    Rational,
};
use su2_centralizer::ncalg::{certify, truncated_dim, NCPoly};
use su2_centralizer::racah::{build_quotient, s3_set_laws};
use su2_centralizer::su2rep::{build_context, is_scalar_multiple, spectrum_difference, CasimirLabel, Difference};
use su2_centralizer::Spin;

use common::{oracle_dim, s};

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-3i64..=3, rows * cols)
        .prop_map(move |v| Matrix::from_vec(rows, cols, v.into_iter().map(qi).collect()))
}

fn square() -> impl Strategy<Value = Matrix<Rational>> {
    (1usize..=4).prop_flat_map(|n| small_matrix(n, n))
}

fn spin(max_twice: u32) -> impl Strategy<Value = Spin> {
    (0..=max_twice).prop_map(Spin::from_twice)
}

fn triple(max_twice: u32) -> impl Strategy<Value = [Spin; 3]> {
    [spin(max_twice), spin(max_twice), spin(max_twice)]
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_is_transpose_invariant((r, c) in (1usize..=5, 1usize..=5), seed in any::<u64>()) {
        let v: Vec<Rational> = (0..r * c).map(|i| qi(((seed >> (i % 60)) & 3) as i64 - 1)).collect();
        let m = Matrix::from_vec(r, c, v);
        prop_assert_eq!(mat_rank(&m), mat_rank(&m.transpose()));
        prop_assert!(mat_rank(&m) <= r.min(c));
    }

    #[test]
    fn minimal_polynomial_annihilates(m in square()) {
        let p = minimal_polynomial(&m);
        prop_assert!(p.len() >= 2 && p.len() <= m.rows() + 1);
        prop_assert!(eval_poly(&p, &m).is_zero());
        let powers: Vec<Matrix<Rational>> = (0..p.len() as u32 - 1).map(|k| m.pow(k)).collect();
        prop_assert_eq!(span_dim(&powers), powers.len());
    }

    #[test]
    fn kron_is_associative(a in small_matrix(2, 1), b in small_matrix(1, 2), c in small_matrix(2, 2)) {
        prop_assert_eq!(kron(&kron(&a, &b), &c), kron(&a, &kron(&b, &c)));
    }

    #[test]
    fn span_closure_is_independent_and_closed(a in small_matrix(3, 3), b in small_matrix(3, 3)) {
        let gens = vec![a, b];
        let basis = span_closure(&gens);
        prop_assert_eq!(span_dim(&basis), basis.len());
        prop_assert!(basis.len() <= 9);
        for x in &basis {
            for g in &gens {
                let mut ext = basis.clone();
                ext.push(g.mul(x));
                prop_assert_eq!(span_dim(&ext), basis.len());
            }
        }
    }

    #[test]
    fn bratteli_counts_dimension(j in triple(6)) {
        let b = build_bratteli(j[0], j[1], j[2]);
        let total: usize = b.bottom.iter().map(|(l, d)| d * l.dim()).sum();
        prop_assert_eq!(total, j[0].dim() * j[1].dim() * j[2].dim());
        prop_assert_eq!(b.centralizer_dim(), oracle_dim(j));
    }

    #[test]
    fn coupling_sets_obey_permutation_laws(j in triple(6)) {
        prop_assert!(s3_set_laws(j[0], j[1], j[2]));
    }

    #[test]
    fn tensor_decompose_is_symmetric(a in spin(8), b in spin(8)) {
        let ab = tensor_decompose(a, b);
        prop_assert_eq!(&ab, &tensor_decompose(b, a));
        prop_assert_eq!(ab.iter().map(|l| l.dim()).sum::<usize>(), a.dim() * b.dim());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn casimirs_lie_in_centralizer(j in triple(3)) {
        let ctx = build_context(j[0], j[1], j[2]).unwrap();
        for label in CasimirLabel::ALL {
            prop_assert!(ctx.in_centralizer(ctx.casimir(label)));
        }
        for (a, label) in [CasimirLabel::K1, CasimirLabel::K2, CasimirLabel::K3].into_iter().enumerate() {
            prop_assert!(is_scalar_multiple(ctx.casimir(label), &j[a].casimir()));
        }
    }

    #[test]
    fn casimir_spectra_match_coupling_sets(j in triple(3)) {
        let ctx = build_context(j[0], j[1], j[2]).unwrap();
        let c = coupling_sets(j[0], j[1], j[2]);
        for (label, set) in [
            (CasimirLabel::K12, &c.j12),
            (CasimirLabel::K23, &c.j23),
            (CasimirLabel::K13, &c.j13),
            (CasimirLabel::K123, &c.j123),
        ] {
            let expected: Vec<Rational> = sorted(set.iter().map(|l| l.casimir()).collect());
            let p = minimal_polynomial(&ctx.casimir_blocks(label));
            prop_assert_eq!(p.len(), expected.len() + 1);
            prop_assert_eq!(split_over(&p, &expected).map(sorted), Some(expected.clone()));
        }
        prop_assert_eq!(spectrum_difference(&ctx, Difference::Total12).unwrap(), c.m123.clone());
        prop_assert_eq!(spectrum_difference(&ctx, Difference::Total23).unwrap(), c.m231.clone());
        prop_assert_eq!(spectrum_difference(&ctx, Difference::Total13).unwrap(), c.m132.clone());
    }

    #[test]
    fn adding_relations_never_grows_truncated_dim(j in triple(2), mask in 0u32..64, level in 2usize..=4) {
        let pres = build_quotient(j[0], j[1], j[2]).presentation;
        let names: Vec<String> = pres.relations().iter().map(|r| r.name.clone()).collect();
        let subset = pres.filter_relations(|r| {
            let i = names.iter().position(|n| *n == r.name).unwrap();
            mask & (1 << (i % 6)) != 0
        });
        prop_assert!(truncated_dim(&pres, level) <= truncated_dim(&subset, level));
    }

    #[test]
    fn diagram_unit_and_associativity(x in diag_element(), y in diag_element(), z in diag_element()) {
        let one = DiagElement::identity(qi(3));
        prop_assert_eq!(one.multiply(&x), x.clone());
        prop_assert_eq!(x.multiply(&one), x.clone());
        prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
    }
}

fn diag_element() -> impl Strategy<Value = DiagElement> {
    prop::collection::vec(-2i64..=2, 15).prop_map(|cs| {
        enumerate_diagrams(false)
            .into_iter()
            .zip(cs)
            .fold(DiagElement::zero(qi(3)), |acc, (d, c)| acc.add(&DiagElement::diagram(d, qi(3)).scale(&qi(c))))
    })
}

#[test]
fn planar_diagrams_close_under_composition() {
    let planar = enumerate_diagrams(true);
    assert_eq!(planar.len(), 5);
    for x in &planar {
        for y in &planar {
            assert!(x.compose(y).0.is_planar());
        }
    }
}

#[test]
fn brauer_regular_representation_is_faithful() {
    let delta = qi(3);
    let ds = enumerate_diagrams(false);
    let left = |x: &BrauerDiagram| {
        let e = DiagElement::diagram(*x, delta.clone());
        let cols: Vec<Vec<Rational>> =
            ds.iter().map(|d| e.multiply(&DiagElement::diagram(*d, delta.clone())).coords()).collect();
        Matrix::from_fn(15, 15, |i, j| cols[j][i].clone())
    };
    let mats: Vec<Matrix<Rational>> = ds.iter().map(left).collect();
    assert_eq!(span_dim(&mats), 15);
    for x in &ds {
        for y in &ds {
            let (xy, loops) = x.compose(y);
            let scale = (0..loops).fold(qi(1), |acc, _| acc * &delta);
            assert_eq!(mats_of(&ds, &mats, x) * mats_of(&ds, &mats, y), left(&xy).scale(&scale));
        }
    }
}

fn mats_of<'a>(ds: &[BrauerDiagram], mats: &'a [Matrix<Rational>], x: &BrauerDiagram) -> &'a Matrix<Rational> {
    &mats[ds.iter().position(|d| d == x).unwrap()]
}

#[test]
fn certified_quotients_are_associative_with_central_c() {
    let cases = [
        [Spin::HALF; 3],
        [Spin::ONE, Spin::HALF, Spin::HALF],
        [Spin::HALF, Spin::ONE, Spin::ONE],
        [Spin::ONE, Spin::HALF, Spin::ONE],
    ];
    for j in cases {
        let pres = build_quotient(j[0], j[1], j[2]).presentation;
        let cert = certify(&pres, 7).unwrap();
        assert!(cert.exact);
        assert_eq!(cert.dim(), centralizer_dim(j[0], j[1], j[2]));
        let t = cert.structure_constants();
        let d = cert.dim();
        let combine = |u: &[Rational], right: usize, left: Option<usize>| -> Vec<Rational> {
            let mut acc = vec![Rational::zero(); d];
            for (m, c) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let prod = match left {
                    None => &t[m][right],
                    Some(i) => &t[i][m],
                };
                for (a, p) in acc.iter_mut().zip(prod) {
                    *a += c * p;
                }
            }
            acc
        };
        for i in 0..d {
            for k in 0..d {
                for (jj, row) in t.iter().enumerate() {
                    assert_eq!(combine(&t[i][jj], k, None), combine(&row[k], 0, Some(i)));
                }
            }
        }
        let c = pres.gen("C");
        for g in ["A", "B"] {
            assert!(cert.reduces_to_zero(&c.commutator(&pres.gen(g))));
        }
        assert!(!cert.reduces_to_zero(&NCPoly::one()));
    }
}

#[test]
fn oracle_agrees_on_a_fixed_grid() {
    for a in 0..=5 {
        for b in 0..=5 {
            for c in 0..=5 {
                assert_eq!(centralizer_dim(s(a), s(b), s(c)), oracle_dim([s(a), s(b), s(c)]));
            }
        }
    }
}
