//! Quotiented Racah algebras attached to a spin triple, and the
//! verification pipeline comparing them with the centralizer.
//!
//! The matrix side evaluates relations at `A = K12`, `B = K23`,
//! `C = K123`. The abstract side bounds dimensions with closure
//! certificates from [`crate::ncalg`], either directly or after splitting
//! the algebra along the eigenvalues of the central generator `C`: since
//! `C` satisfies a polynomial with distinct roots, the quotient is the
//! direct sum of its specializations `C = c`, and in each of them the pairs
//! of characteristic relations for `A`, `B` and `A + B` collapse to a single
//! relation over the intersection of their root sets.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bratteli::{build_bratteli, centralizer_dim, coupling_sets, CouplingSets};
use crate::exact::{eval_root_product, fmt_rational, q, qi, serde_rational, span_closure, Rational};
use crate::ncalg::{certify, certify_with_basis, start_level, ClosureCertificate, NCPoly, Presentation, Word};
use crate::su2rep::{build_context, verify_casimir_identity, CasimirLabel, Spin, TensorContext};
use crate::{Error, QBlockMatrix, Result};

/// Default truncation bound for abstract certificates.
pub const DEFAULT_LMAX: usize = 7;

/// Characteristic relations above this degree skip the direct abstract
/// bound in favour of the split along central characters.
pub const DIRECT_DEGREE_LIMIT: usize = 6;

/// A relation either as an explicit polynomial or as `∏ (linear − root)`,
/// which is evaluated on matrices without expansion.
#[derive(Clone, Debug, PartialEq)]
pub enum RelationForm {
    Poly(NCPoly),
    RootProduct { linear: NCPoly, roots: Vec<Rational> },
}

impl RelationForm {
    pub fn to_poly(&self) -> NCPoly {
        match self {
            RelationForm::Poly(p) => p.clone(),
            RelationForm::RootProduct { linear, roots } => NCPoly::root_product(linear, roots),
        }
    }

    pub fn eval(&self, images: &[QBlockMatrix]) -> QBlockMatrix {
        let unit = images[0].identity_like();
        match self {
            RelationForm::Poly(p) => p.eval(images, &unit),
            RelationForm::RootProduct { linear, roots } => eval_root_product(roots, &linear.eval(images, &unit)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RacahRelation {
    pub name: String,
    pub form: RelationForm,
}

/// The quotient attached to `(j1, j2, j3)`: generators `A`, `B` and central
/// `C`, relations UR1, UR2 and the characteristic relations.
#[derive(Clone, Debug)]
pub struct RacahQuotientSpec {
    pub spins: [Spin; 3],
    pub alphas: [Rational; 3],
    pub coupling: CouplingSets,
    pub relations: Vec<RacahRelation>,
    pub presentation: Presentation,
}

impl RacahQuotientSpec {
    pub fn alpha_sum(&self) -> Rational {
        self.alphas.iter().sum()
    }

    /// Largest degree among the characteristic relations.
    pub fn max_degree(&self) -> usize {
        self.presentation.max_degree()
    }
}

fn gens3() -> (NCPoly, NCPoly, NCPoly) {
    (NCPoly::gen(0), NCPoly::gen(1), NCPoly::gen(2))
}

fn k(v: Rational) -> NCPoly {
    NCPoly::constant(v)
}

fn casimirs(spins: &[Spin]) -> Vec<Rational> {
    spins.iter().map(|s| s.casimir()).collect()
}

/// UR1 and UR2 with numeric `α` and `C` given as a polynomial (the
/// generator, or a number).
pub fn universal_relations(alphas: &[Rational; 3], c: &NCPoly) -> [NCPoly; 2] {
    let (a, b, _) = gens3();
    let sum: Rational = alphas.iter().sum();
    let two = qi(2);
    let c_plus = c.add_scalar(&sum);
    let ur1 = &(&(&b.commutator(&a.commutator(&b)) + &(&b * &b).scale(&two)) + &a.anticommutator(&b).scale(&two))
        - &(&(&c_plus * &b).scale(&two) + &(&k(alphas[0].clone()) - c).scale(&(&two * (&alphas[2] - &alphas[1]))));
    let ur2 = &(&(&a.commutator(&b.commutator(&a)) + &(&a * &a).scale(&two)) + &a.anticommutator(&b).scale(&two))
        - &(&(&c_plus * &a).scale(&two) + &(&k(alphas[2].clone()) - c).scale(&(&two * (&alphas[0] - &alphas[1]))));
    [ur1, ur2]
}

pub fn build_quotient(j1: Spin, j2: Spin, j3: Spin) -> RacahQuotientSpec {
    let spins = [j1, j2, j3];
    let alphas = [j1.casimir(), j2.casimir(), j3.casimir()];
    let coupling = coupling_sets(j1, j2, j3);
    let sum: Rational = alphas.iter().sum();
    let (a, b, c) = gens3();
    let [ur1, ur2] = universal_relations(&alphas, &c);
    let rp = |linear: NCPoly, roots: Vec<Rational>| RelationForm::RootProduct { linear, roots };
    let c_minus_a = &c - &a;
    let c_minus_b = &c - &b;
    let rels = vec![
        ("UR1", RelationForm::Poly(ur1)),
        ("UR2", RelationForm::Poly(ur2)),
        ("quo1:A", rp(a.clone(), casimirs(&coupling.j12))),
        ("quo1:B", rp(b.clone(), casimirs(&coupling.j23))),
        ("quo1:C", rp(c.clone(), casimirs(&coupling.j123))),
        ("quo2", rp((&c_minus_a - &b).add_scalar(&sum), casimirs(&coupling.j13))),
        ("quo3", rp((&a + &b).add_scalar(&-sum.clone()), coupling.m132.clone())),
        ("quo5:A", rp(c_minus_a, coupling.m123.clone())),
        ("quo5:B", rp(c_minus_b, coupling.m231.clone())),
    ];
    let relations: Vec<RacahRelation> =
        rels.into_iter().map(|(n, form)| RacahRelation { name: n.to_string(), form }).collect();
    let mut presentation = Presentation::new(&["A", "B", "C"]).with_central("C");
    for r in &relations {
        presentation.add_relation(r.name.clone(), r.form.to_poly());
    }
    RacahQuotientSpec { spins, alphas, coupling, relations, presentation }
}

/// `[K12, K23, K123]` as weight-block matrices.
pub fn casimir_images(ctx: &TensorContext) -> Vec<QBlockMatrix> {
    [CasimirLabel::K12, CasimirLabel::K23, CasimirLabel::K123].iter().map(|&l| ctx.casimir_blocks(l)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelReport {
    pub spins: [Spin; 3],
    pub casimir_identity: bool,
    pub relations: Vec<NamedCheck>,
    pub all_vanish: bool,
}

/// Evaluates every relation of [`build_quotient`] at the Casimirs.
pub fn verify_kernel_on_matrices(j1: Spin, j2: Spin, j3: Spin) -> Result<KernelReport> {
    let ctx = build_context(j1, j2, j3)?;
    let spec = build_quotient(j1, j2, j3);
    let images = casimir_images(&ctx);
    let relations: Vec<NamedCheck> = spec
        .relations
        .iter()
        .map(|r| NamedCheck { name: r.name.clone(), holds: r.form.eval(&images).is_zero() })
        .collect();
    let casimir_identity = verify_casimir_identity(&ctx);
    let all_vanish = casimir_identity && relations.iter().all(|r| r.holds);
    Ok(KernelReport { spins: [j1, j2, j3], casimir_identity, relations, all_vanish })
}

/// Dimension of the algebra generated by `K12, K23, K123`.
pub fn matrix_lower_bound(ctx: &TensorContext) -> usize {
    span_closure(&casimir_images(ctx)).len()
}

/// Which of the optional characteristic relations take part.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationSelection {
    pub quo2: bool,
    pub quo3: bool,
    pub quo5_a: bool,
    pub quo5_b: bool,
}

impl RelationSelection {
    pub const FULL: RelationSelection = RelationSelection { quo2: true, quo3: true, quo5_a: true, quo5_b: true };
    /// quo2, quo3 and the `C − B` half of quo5 removed.
    pub const REDUCED: RelationSelection = RelationSelection { quo2: false, quo3: false, quo5_a: true, quo5_b: false };
}

fn intersect(base: Option<Vec<Rational>>, other: Vec<Rational>) -> Vec<Rational> {
    let other: BTreeSet<Rational> = other.into_iter().collect();
    match base {
        None => other.into_iter().collect(),
        Some(b) => b.into_iter().filter(|x| other.contains(x)).collect::<BTreeSet<_>>().into_iter().collect(),
    }
}

/// The specialization `C = ℓ(ℓ+1)` of the quotient, on generators `A, B`.
pub fn character_presentation(spec: &RacahQuotientSpec, l: Spin, sel: RelationSelection) -> Result<Presentation> {
    let c = l.casimir();
    let co = &spec.coupling;
    let sum = spec.alpha_sum();
    let label = format!("C = {}", fmt_rational(&c));
    let a_roots = {
        let base: Vec<Rational> = casimirs(&co.j12).into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if sel.quo5_a {
            intersect(Some(base), co.m123.iter().map(|m| &c - m).collect())
        } else {
            base
        }
    };
    let b_roots = {
        let base: Vec<Rational> = casimirs(&co.j23).into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if sel.quo5_b {
            intersect(Some(base), co.m231.iter().map(|m| &c - m).collect())
        } else {
            base
        }
    };
    let mut ab_roots: Option<Vec<Rational>> = None;
    if sel.quo2 {
        ab_roots = Some(intersect(ab_roots, casimirs(&co.j13).iter().map(|v| &c + &sum - v).collect()));
    }
    if sel.quo3 {
        ab_roots = Some(intersect(ab_roots, co.m132.iter().map(|m| &sum + m).collect()));
    }
    if a_roots.is_empty() {
        return Err(Error::EmptyCharacter(label, "A".into()));
    }
    if b_roots.is_empty() {
        return Err(Error::EmptyCharacter(label, "B".into()));
    }
    if ab_roots.as_ref().is_some_and(|r| r.is_empty()) {
        return Err(Error::EmptyCharacter(label, "A+B".into()));
    }
    let (a, b, _) = gens3();
    let [ur1, ur2] = universal_relations(&spec.alphas, &k(c));
    let mut p = Presentation::new(&["A", "B"])
        .with_relation("UR1", ur1)
        .with_relation("UR2", ur2)
        .with_relation("char:A", NCPoly::root_product(&a, &a_roots))
        .with_relation("char:B", NCPoly::root_product(&b, &b_roots));
    if let Some(r) = ab_roots {
        p.add_relation("char:A+B", NCPoly::root_product(&(&a + &b), &r));
    }
    Ok(p)
}

/// Abstract dimension of one central character.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterDim {
    pub spin: Spin,
    #[serde(with = "serde_rational")]
    pub c: Rational,
    /// `None` when no certificate was found by the truncation bound.
    pub dim: Option<usize>,
    /// Multiplicity squared of `ℓ` in the centralizer.
    pub target: usize,
    pub basis: Vec<String>,
    #[serde(skip)]
    pub certificate: Option<ClosureCertificate>,
}

pub fn decompose_with(spec: &RacahQuotientSpec, sel: RelationSelection, lmax: usize) -> Result<Vec<CharacterDim>> {
    let [j1, j2, j3] = spec.spins;
    let brat = build_bratteli(j1, j2, j3);
    let mut out = Vec::new();
    for (l, d) in brat.bottom.iter().rev() {
        let pres = character_presentation(spec, *l, sel)?;
        let cert = certify(&pres, lmax).ok();
        out.push(CharacterDim {
            spin: *l,
            c: l.casimir(),
            dim: cert.as_ref().map(|c| c.dim()),
            target: d * d,
            basis: cert
                .as_ref()
                .map(|c| c.basis.iter().map(|w| w.fmt_with(pres.names())).collect())
                .unwrap_or_default(),
            certificate: cert,
        });
    }
    Ok(out)
}

/// Certified dimension of each specialization `C = ℓ(ℓ+1)`, `ℓ ∈ J123`,
/// listed from the largest `ℓ` down.
pub fn decompose_by_central_character(j1: Spin, j2: Spin, j3: Spin, lmax: usize) -> Result<Vec<CharacterDim>> {
    decompose_with(&build_quotient(j1, j2, j3), RelationSelection::FULL, lmax)
}

/// Sum of the character dimensions, if all of them are certified.
pub fn total_dim(chars: &[CharacterDim]) -> Option<usize> {
    chars.iter().map(|c| c.dim).sum()
}

/// Zero test in the full quotient through the central-character split.
#[derive(Clone, Debug)]
pub struct SplitModel {
    pub characters: Vec<CharacterDim>,
}

impl SplitModel {
    pub fn new(spec: &RacahQuotientSpec, lmax: usize) -> Result<Self> {
        Ok(SplitModel { characters: decompose_with(spec, RelationSelection::FULL, lmax)? })
    }

    /// `Some(true)` if `p` (in `A, B, C`) lies in the ideal, `Some(false)` if
    /// some specialization keeps a nonzero image, `None` if a character is
    /// uncertified.
    pub fn reduces_to_zero(&self, p: &NCPoly) -> Option<bool> {
        let mut all = true;
        for ch in &self.characters {
            let cert = ch.certificate.as_ref()?;
            let special = p.substitute(&[NCPoly::gen(0), NCPoly::gen(1), k(ch.c.clone())]);
            all &= cert.reduces_to_zero(&special);
        }
        Some(all)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum UpperBoundMethod {
    Direct { level: usize },
    CentralCharacter,
    None,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub spins: [Spin; 3],
    pub lower: usize,
    pub upper: Option<usize>,
    pub target: usize,
    pub verified: bool,
    pub method: UpperBoundMethod,
    pub basis: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub characters: Vec<CharacterDim>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl ConjectureReport {
    pub fn inconclusive(&self) -> bool {
        self.upper.is_none()
    }
}

/// Matrix lower bound against an abstract upper bound. The direct
/// presentation is tried when its relations have degree at most
/// [`DIRECT_DEGREE_LIMIT`]; otherwise, or when it does not close by `lmax`,
/// the bound is the sum over central characters.
pub fn verify_conjecture(j1: Spin, j2: Spin, j3: Spin, lmax: usize) -> Result<ConjectureReport> {
    let ctx = build_context(j1, j2, j3)?;
    let lower = matrix_lower_bound(&ctx);
    let target = centralizer_dim(j1, j2, j3);
    let spec = build_quotient(j1, j2, j3);
    let mut report = ConjectureReport {
        spins: [j1, j2, j3],
        lower,
        upper: None,
        target,
        verified: false,
        method: UpperBoundMethod::None,
        basis: Vec::new(),
        characters: Vec::new(),
        elapsed_ms: None,
    };
    if spec.max_degree() <= DIRECT_DEGREE_LIMIT {
        if let Ok(cert) = certify(&spec.presentation, lmax) {
            report.upper = Some(cert.dim());
            report.method = UpperBoundMethod::Direct { level: cert.level };
            report.basis = cert.basis.iter().map(|w| w.fmt_with(spec.presentation.names())).collect();
        }
    }
    if report.upper.is_none() {
        let chars = decompose_with(&spec, RelationSelection::FULL, lmax)?;
        report.upper = total_dim(&chars);
        if report.upper.is_some() {
            report.method = UpperBoundMethod::CentralCharacter;
            report.basis = chars
                .iter()
                .flat_map(|ch| ch.basis.iter().map(move |w| format!("[C={}] {}", fmt_rational(&ch.c), w)))
                .collect();
        }
        report.characters = chars;
    }
    report.verified = report.upper == Some(lower) && lower == target;
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct S3Report {
    pub spins: [Spin; 3],
    pub set_laws: bool,
    /// `None`: inconclusive.
    pub phi1: Option<bool>,
    pub phi2: Option<bool>,
    pub phi2_involutive: bool,
}

impl S3Report {
    pub fn holds(&self) -> bool {
        self.set_laws && self.phi1 == Some(true) && self.phi2 == Some(true) && self.phi2_involutive
    }
}

fn sorted(mut v: Vec<Spin>) -> Vec<Spin> {
    v.sort();
    v
}

/// Transformation laws of the coupling sets under `1 ↔ 3` and `1 ↔ 2`,
/// together with `M123 = M213`.
pub fn s3_set_laws(j1: Spin, j2: Spin, j3: Spin) -> bool {
    let c = coupling_sets(j1, j2, j3);
    let s13 = coupling_sets(j3, j2, j1);
    let s12 = coupling_sets(j2, j1, j3);
    let law13 = s13.j123 == c.j123
        && s13.j13 == sorted(c.j13.clone())
        && s13.m132 == c.m132
        && s13.j12 == c.j23
        && s13.j23 == c.j12
        && s13.m123 == c.m231
        && s13.m231 == c.m123;
    let law12 = s12.j123 == c.j123
        && s12.j12 == c.j12
        && s12.m123 == c.m123
        && s12.j13 == c.j23
        && s12.j23 == c.j13
        && s12.m132 == c.m231
        && s12.m231 == c.m132;
    let m213 = build_bratteli(j2, j1, j3).edge_values() == c.m123;
    law13 && law12 && m213
}

/// Images of `A, B, C` under `φ2`.
pub fn phi2_images(alphas: &[Rational; 3]) -> Vec<NCPoly> {
    let (a, b, c) = gens3();
    let sum: Rational = alphas.iter().sum();
    vec![a.clone(), (&(&c - &a) - &b).add_scalar(&sum), c]
}

fn relations_map_to_zero(src: &RacahQuotientSpec, images: &[NCPoly], dst: &SplitModel) -> Option<bool> {
    let mut all = true;
    for r in src.presentation.relations() {
        all &= dst.reduces_to_zero(&r.poly.substitute(images))?;
    }
    Some(all)
}

/// Set laws, and the maps `φ1: R̄(α3,α2,α1) → R̄(α1,α2,α3)` and
/// `φ2: R̄(α2,α1,α3) → R̄(α1,α2,α3)` sending relations into the ideal.
pub fn verify_s3_invariance(j1: Spin, j2: Spin, j3: Spin, lmax: usize) -> Result<S3Report> {
    let dst_spec = build_quotient(j1, j2, j3);
    let dst = SplitModel::new(&dst_spec, lmax)?;
    let (a, b, c) = gens3();
    let phi1 = relations_map_to_zero(&build_quotient(j3, j2, j1), &[b.clone(), a.clone(), c.clone()], &dst);
    let images2 = phi2_images(&dst_spec.alphas);
    let phi2 = relations_map_to_zero(&build_quotient(j2, j1, j3), &images2, &dst);
    let twice: Vec<NCPoly> = images2.iter().map(|p| p.substitute(&images2)).collect();
    Ok(S3Report {
        spins: [j1, j2, j3],
        set_laws: s3_set_laws(j1, j2, j3),
        phi1,
        phi2,
        phi2_involutive: twice == vec![a, b, c],
    })
}

/// Closed-form identities checked on Casimir matrices.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DerivedCase {
    TlSimplified,
    BrauerC,
    BtlLemma(Spin),
    BbG,
    BbPresentation,
}

impl DerivedCase {
    pub fn spins(self) -> [Spin; 3] {
        let (h, one) = (Spin::HALF, Spin::ONE);
        match self {
            DerivedCase::TlSimplified => [h, h, h],
            DerivedCase::BrauerC => [one, one, one],
            DerivedCase::BtlLemma(j) => [j, h, h],
            DerivedCase::BbG | DerivedCase::BbPresentation => [h, one, one],
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DerivedReport {
    pub case: DerivedCase,
    pub checks: Vec<NamedCheck>,
    pub holds: bool,
}

/// The identities of a case as polynomials in `A, B, C` that must vanish.
pub fn derived_identities(case: DerivedCase) -> Result<Vec<(String, NCPoly)>> {
    let (a, b, c) = gens3();
    let ab = a.anticommutator(&b);
    let mut out: Vec<(&str, NCPoly)> = Vec::new();
    match case {
        DerivedCase::TlSimplified => {
            let g = c.add_scalar(&q(1, 4));
            let ga = &(&ab.scale(&qi(2)) - &a.scale(&qi(3))) - &b.scale(&qi(4));
            let gb = &(&ab.scale(&qi(2)) - &a.scale(&qi(4))) - &b.scale(&qi(3));
            let (ga, gb) = (ga.add_scalar(&qi(6)), gb.add_scalar(&qi(6)));
            out.push(("A^2 = 2A", &(&a * &a) - &a.scale(&qi(2))));
            out.push(("B^2 = 2B", &(&b * &b) - &b.scale(&qi(2))));
            out.push(("ABA = 2{A,B} - 3A - 4B + 6", &(&(&a * &b) * &a) - &ga));
            out.push(("BAB = 2{A,B} - 4A - 3B + 6", &(&(&b * &a) * &b) - &gb));
            let g_expr = (&(&ab - &a.scale(&qi(2))) - &b.scale(&qi(2))).add_scalar(&qi(4));
            out.push(("G = {A,B} - 2A - 2B + 4", &g - &g_expr));
            out.push(("GA = 2{A,B} - 3A - 4B + 6", &(&g * &a) - &ga));
            out.push(("GB = 2{A,B} - 4A - 3B + 6", &(&g * &b) - &gb));
            out.push(("(G-1)(G-4) = 0", NCPoly::root_product(&g, &[qi(1), qi(4)])));
        }
        DerivedCase::BrauerC => {
            let aa = &a * &a;
            let cubic = &(&(&(&a * &b) * &a) - &(&aa * &b)) - (&(&b * &aa));
            let rhs = &(&(&aa + &ab) - &a.scale(&qi(7))) - &b;
            let rhs = &rhs.add_scalar(&qi(6)) + &cubic.scale(&q(1, 4));
            out.push(("C = 6 - 7A - B + A^2 + {A,B} + (ABA - A^2B - BA^2)/4", &c - &rhs));
        }
        DerivedCase::BtlLemma(j) => {
            if j.twice() < 2 {
                return Err(Error::ExcludedCase("btl(j) needs j >= 1".into()));
            }
            let tj = j.value() * qi(2);
            let inv = qi(1) / &tj;
            let z = (&tj + qi(1)) / &tj;
            let jv = j.value();
            let sa = (&k((&jv + q(1, 2)) * (&jv + q(3, 2))) - &a).scale(&inv);
            let sb = &k(qi(2)) - &b;
            let g = (&k((&jv + qi(1)) * (&jv + qi(2))) - &c).scale(&inv);
            let anti = sa.anticommutator(&sb);
            let g_expr = &(&sb.scale(&z) + &sa.scale(&qi(2))) - &anti;
            let g1 = g.add_scalar(&(qi(1) - &z * qi(2)));
            out.push(("G = zB' + 2A' - {A',B'}", &g - &g_expr));
            out.push(("(G + 1 - 2z)B' = 0", &g1 * &sb));
            out.push(("(G + 1 - 2z)(G - 2A') = 0", &g1 * &(&g - &sa.scale(&qi(2)))));
            out.push(("A'^2 = zA'", &(&sa * &sa) - &sa.scale(&z)));
            out.push(("B'^2 = 2B'", &(&sb * &sb) - &sb.scale(&qi(2))));
            out.push(("B'A'B' = B'", &(&(&sb * &sa) * &sb) - &sb));
            out.push(("G(G - 2z)(G + 1 - 2z) = 0", NCPoly::root_product(&g, &[qi(0), &z * qi(2), &z * qi(2) - qi(1)])));
        }
        DerivedCase::BbG => {
            let sa = a.add_scalar(&q(1, 4));
            let g = c.add_scalar(&q(1, 4));
            let anti = sa.anticommutator(&b);
            let aba = &(&sa * &b) * &sa;
            let bab = &(&b * &sa) * &b;
            let lem12 = &(&b.scale(&q(3, 2)) - &anti.scale(&q(1, 2))) + &aba.scale(&q(1, 4));
            out.push(("G = 3B/2 - {A',B}/2 + A'BA'/4", &g - &lem12));
            let lem13 = &(&(&(&sa.scale(&qi(2)) + &b.scale(&qi(8))) - &(&b * &b).scale(&q(1, 2)))
                - &anti.scale(&qi(2)))
                + &(&aba.scale(&q(1, 2)) + &bab.scale(&q(1, 2)));
            out.push((
                "GB = -8 + 2A' + 8B - B^2/2 - 2{A',B} + A'BA'/2 + BA'B/2",
                &(&g * &b) - &lem13.add_scalar(&qi(-8)),
            ));
        }
        DerivedCase::BbPresentation => {
            let sa = a.add_scalar(&q(1, 4));
            let anti = sa.anticommutator(&b);
            let bb = &b * &b;
            out.push(("(A'-1)(A'-4) = 0", NCPoly::root_product(&sa, &[qi(1), qi(4)])));
            out.push(("B(B-2)(B-6) = 0", NCPoly::root_product(&b, &[qi(0), qi(2), qi(6)])));
            let lhs = &(&(&b * &sa) * &b) - &(&(&sa * &b) * &sa);
            let rhs = &(&(&(&sa * &bb) + &(&bb * &sa)) - &bb.scale(&qi(3))) - &anti.scale(&qi(6));
            let rhs = &(&rhs + &b.scale(&qi(26))) + &sa.scale(&qi(4));
            out.push(("n1", &lhs - &rhs.add_scalar(&qi(-16))));
            let n2 = [
                (qi(1), &(&b * &sa) * &bb),
                (qi(16), &sa * &b),
                (qi(-2), &sa * &bb),
                (qi(-8), &(&b * &sa) * &b),
                (qi(12), &b * &sa),
                (qi(6), bb.clone()),
                (qi(-48), b.clone()),
                (qi(-24), sa.clone()),
                (qi(72), NCPoly::one()),
            ]
            .iter()
            .fold(NCPoly::zero(), |acc, (x, p)| &acc + &p.scale(x));
            out.push(("n2", n2));
        }
    }
    Ok(out.into_iter().map(|(n, p)| (n.to_string(), p)).collect())
}

pub fn verify_derived_identities(case: DerivedCase) -> Result<DerivedReport> {
    let [j1, j2, j3] = case.spins();
    let ctx = build_context(j1, j2, j3)?;
    let images = casimir_images(&ctx);
    let unit = images[0].identity_like();
    let checks: Vec<NamedCheck> = derived_identities(case)?
        .into_iter()
        .map(|(name, p)| NamedCheck { name, holds: p.eval(&images, &unit).is_zero() })
        .collect();
    let holds = checks.iter().all(|c| c.holds);
    Ok(DerivedReport { case, checks, holds })
}

/// `H_{j,k,c}`: UR1, UR2 at `α = (j(j+1), 3/4, k(k+1))` and `C = c`, with
/// the quadratic relations for `A` and `B`.
pub fn hjk_presentation(j: Spin, k_spin: Spin, c: &Rational) -> Presentation {
    let alphas = [j.casimir(), Spin::HALF.casimir(), k_spin.casimir()];
    let (a, b, _) = gens3();
    let [ur1, ur2] = universal_relations(&alphas, &k(c.clone()));
    let quad = |g: &NCPoly, x: Rational| {
        let x2 = &x * &x;
        (&(g * g) - &g.scale(&(&x2 * qi(2)))).add_scalar(&(&x2 * (&x2 - qi(1))))
    };
    Presentation::new(&["A", "B"])
        .with_relation("UR1", ur1)
        .with_relation("UR2", ur2)
        .with_relation("quad:A", quad(&a, j.x()))
        .with_relation("quad:B", quad(&b, k_spin.x()))
}

/// Rewritten forms of UR1 and UR2 in `H_{j,k,c}`, as vanishing polynomials.
pub fn hjk_rewritten(j: Spin, k_spin: Spin, c: &Rational) -> [NCPoly; 2] {
    let (a, b, _) = gens3();
    let (x2, y2) = (j.x() * j.x(), k_spin.x() * k_spin.x());
    let ab = a.anticommutator(&b);
    let shift = c + q(1, 4);
    let tail = |u2: &Rational, v2: &Rational| (u2 - qi(1)) * (u2 + v2 - &shift);
    let ur1 = &(&(&ab.scale(&(&x2 - qi(1))) - &b.scale(&(&x2 * (&x2 - qi(1))))) + &a.scale(&(&y2 - &x2 + &shift)))
        .add_scalar(&tail(&x2, &y2));
    let ur2 = &(&(&ab.scale(&(&y2 - qi(1))) - &a.scale(&(&y2 * (&y2 - qi(1))))) + &b.scale(&(&x2 - &y2 + &shift)))
        .add_scalar(&tail(&y2, &x2));
    [&(&(&a * &b) * &a) - ur1, &(&(&b * &a) * &b) - ur2]
}

fn hjk_basis() -> Vec<Word> {
    vec![Word::empty(), Word::new(vec![0]), Word::new(vec![1]), Word::new(vec![0, 1])]
}

fn hjk_certificate(pres: &Presentation, lmax: usize) -> Result<ClosureCertificate> {
    let mut last = Error::NotClosed(lmax);
    for level in start_level(pres)..=lmax {
        match certify_with_basis(pres, &hjk_basis(), level) {
            Ok(c) => return Ok(c),
            Err(e) => last = e,
        }
    }
    Err(last)
}

fn check_hjk_args(j: Spin, k_spin: Spin) -> Result<()> {
    if j == Spin::HALF && k_spin == Spin::HALF {
        return Err(Error::ExcludedCase("(j, k) = (1/2, 1/2)".into()));
    }
    if j < k_spin {
        return Err(Error::Invalid(format!("expected j >= k, got j = {j}, k = {k_spin}")));
    }
    Ok(())
}

#[derive(Clone, Debug, Serialize)]
pub struct HjkReport {
    pub j: Spin,
    pub k: Spin,
    #[serde(with = "serde_rational")]
    pub c: Rational,
    /// Level at which `{1, A, B, AB}` closed.
    pub level: Option<usize>,
    pub rewritten_relations: bool,
    pub holds: bool,
}

/// Certifies that `{1, A, B, AB}` spans `H_{j,k,c}` and that the rewritten
/// forms of UR1, UR2 hold there.
pub fn verify_hjk(j: Spin, k_spin: Spin, c: &Rational, lmax: usize) -> Result<HjkReport> {
    check_hjk_args(j, k_spin)?;
    let pres = hjk_presentation(j, k_spin, c);
    let cert = hjk_certificate(&pres, lmax).ok();
    let rewritten =
        cert.as_ref().is_some_and(|cert| hjk_rewritten(j, k_spin, c).iter().all(|p| cert.reduces_to_zero(p)));
    Ok(HjkReport {
        j,
        k: k_spin,
        c: c.clone(),
        level: cert.as_ref().map(|c| c.level),
        rewritten_relations: rewritten,
        holds: cert.is_some() && rewritten,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BraidReport {
    pub j: Spin,
    #[serde(with = "serde_rational")]
    pub z: Rational,
    #[serde(with = "serde_rational")]
    pub c: Rational,
    pub checks: Vec<NamedCheck>,
    pub holds: bool,
}

/// In `H_{j,j,c}` with `c = x² − 1/4 − z²`, the shifted generators
/// `A' = A + z − x²`, `B' = B + z − x²` satisfy the quadratic, braid and
/// cubic relations.
pub fn verify_braid_remark(j: Spin, z: &Rational, lmax: usize) -> Result<BraidReport> {
    check_hjk_args(j, j)?;
    let x2 = j.x() * j.x();
    let c = &x2 - q(1, 4) - z * z;
    let pres = hjk_presentation(j, j, &c);
    let cert = hjk_certificate(&pres, lmax)?;
    let (a, b, _) = gens3();
    let shift = z - &x2;
    let (sa, sb) = (a.add_scalar(&shift), b.add_scalar(&shift));
    let quad = |g: &NCPoly| (&(g * g) - &g.scale(&(z * qi(2)))).add_scalar(&-(&x2 - z * z));
    let aba = &(&sa * &sb) * &sa;
    let bab = &(&sb * &sa) * &sb;
    let cubic_rhs =
        &(&(&sa * &sb) + &(&sb * &sa)).scale(&(z - qi(1))) + &(&sa + &sb).scale(&(-(z * z) + z * qi(2) - &x2));
    let constant = z * z * z - z * z * qi(3) + &x2 * z * qi(3) - &x2;
    let rels = [
        ("A'^2 = 2zA' + x^2 - z^2", quad(&sa)),
        ("B'^2 = 2zB' + x^2 - z^2", quad(&sb)),
        ("A'B'A' = B'A'B'", &aba - &bab),
        ("A'B'A' = cubic", &aba - &cubic_rhs.add_scalar(&constant)),
    ];
    let checks: Vec<NamedCheck> =
        rels.iter().map(|(n, p)| NamedCheck { name: n.to_string(), holds: cert.reduces_to_zero(p) }).collect();
    let holds = checks.iter().all(|c| c.holds);
    Ok(BraidReport { j, z: z.clone(), c, checks, holds })
}

#[derive(Clone, Debug, Serialize)]
pub struct RedundancyReport {
    pub j: Spin,
    pub k: Spin,
    pub target: usize,
    pub full: Option<usize>,
    pub reduced: Option<usize>,
    pub unchanged: bool,
}

/// For `(j, 1/2, k)`, compares the certified dimension with and without
/// quo2, quo3 and the `C − B` half of quo5.
pub fn test_relation_redundancy(j: Spin, k_spin: Spin, lmax: usize) -> Result<RedundancyReport> {
    check_hjk_args(j, k_spin)?;
    let spec = build_quotient(j, Spin::HALF, k_spin);
    let full = total_dim(&decompose_with(&spec, RelationSelection::FULL, lmax)?);
    let reduced = total_dim(&decompose_with(&spec, RelationSelection::REDUCED, lmax)?);
    Ok(RedundancyReport {
        j,
        k: k_spin,
        target: centralizer_dim(j, Spin::HALF, k_spin),
        full,
        reduced,
        unchanged: full.is_some() && full == reduced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: u32) -> Spin {
        Spin::from_twice(t)
    }

    #[test]
    fn kernel_small_cases() {
        for spins in [[1, 1, 1], [2, 2, 2], [3, 2, 1]] {
            let r = verify_kernel_on_matrices(s(spins[0]), s(spins[1]), s(spins[2])).unwrap();
            assert!(r.all_vanish, "{:?}", r);
        }
    }

    #[test]
    fn spin_half_cube() {
        let r = verify_conjecture(s(1), s(1), s(1), DEFAULT_LMAX).unwrap();
        assert_eq!((r.lower, r.upper, r.target), (5, Some(5), 5));
        assert!(r.verified);
        let ch = decompose_by_central_character(s(1), s(1), s(1), DEFAULT_LMAX).unwrap();
        let dims: Vec<Option<usize>> = ch.iter().map(|c| c.dim).collect();
        assert_eq!(dims, vec![Some(1), Some(4)]);
    }

    #[test]
    fn hjk_exclusion() {
        assert!(matches!(verify_hjk(s(1), s(1), &qi(0), 5), Err(Error::ExcludedCase(_))));
    }
}
