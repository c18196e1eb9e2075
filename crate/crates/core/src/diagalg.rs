//! Brauer and Temperley–Lieb diagrams on three strands, the boundary
//! algebras `btl(j)` and `bB`, and their identifications with quotiented
//! Racah algebras.
//!
//! Points `0, 1, 2` are the top row and `3, 4, 5` the bottom row (printed
//! `1 2 3` and `1' 2' 3'`). In a product `x·y` the diagram `x` sits on top
//! of `y`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::{fmt_rational, minimal_polynomial, q, qi, span_dim, split_over, AlgebraElement, Rational};
use crate::ncalg::{
    certify, certify_with_basis, homomorphism_holds, start_level, ClosureCertificate, NCPoly, Presentation, Word,
};
use crate::racah::{build_quotient, casimir_images, NamedCheck, DEFAULT_LMAX};
use crate::su2rep::{build_context, Spin};
use crate::{Error, QBlockMatrix, Result};

const STRANDS: usize = 3;
const POINTS: usize = 2 * STRANDS;

/// A perfect matching of the six points, as sorted pairs `(a, b)` with
/// `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BrauerDiagram {
    pairs: [(u8, u8); STRANDS],
}

impl BrauerDiagram {
    /// Canonicalizes `pairs`; `None` unless they form a perfect matching.
    pub fn new(pairs: [(u8, u8); STRANDS]) -> Option<Self> {
        let mut seen = [false; POINTS];
        let mut out = pairs.map(|(a, b)| (a.min(b), a.max(b)));
        for &(a, b) in &out {
            if a == b || b as usize >= POINTS || seen[a as usize] || seen[b as usize] {
                return None;
            }
            seen[a as usize] = true;
            seen[b as usize] = true;
        }
        out.sort();
        Some(BrauerDiagram { pairs: out })
    }

    fn from_partner(partner: &[u8; POINTS]) -> Self {
        let mut pairs = Vec::with_capacity(STRANDS);
        for (a, &b) in partner.iter().enumerate() {
            if (a as u8) < b {
                pairs.push((a as u8, b));
            }
        }
        BrauerDiagram { pairs: pairs.try_into().expect("perfect matching") }
    }

    pub fn identity() -> Self {
        BrauerDiagram { pairs: [(0, 3), (1, 4), (2, 5)] }
    }

    /// Crossing of strands `i` and `i + 1` (`i` is 1 or 2).
    pub fn s(i: usize) -> Self {
        let mut p = [(0, 3), (1, 4), (2, 5)];
        let (a, b) = (i as u8 - 1, i as u8);
        p[a as usize] = (a, b + 3);
        p[b as usize] = (b, a + 3);
        BrauerDiagram::new(p).expect("valid crossing")
    }

    /// Cup-cap on strands `i` and `i + 1` (`i` is 1 or 2).
    pub fn e(i: usize) -> Self {
        let (a, b) = (i as u8 - 1, i as u8);
        let c = 3 - a - b;
        BrauerDiagram::new([(a, b), (a + 3, b + 3), (c, c + 3)]).expect("valid cup-cap")
    }

    pub fn pairs(&self) -> &[(u8, u8); STRANDS] {
        &self.pairs
    }

    fn partner(&self) -> [u8; POINTS] {
        let mut p = [0u8; POINTS];
        for &(a, b) in &self.pairs {
            p[a as usize] = b;
            p[b as usize] = a;
        }
        p
    }

    /// No two pairs cross when the points are drawn on a rectangle.
    pub fn is_planar(&self) -> bool {
        // Position around the boundary: top left to right, bottom right to left.
        let pos = |p: u8| if p < 3 { p } else { 8 - p };
        let arcs: Vec<(u8, u8)> = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (pos(a), pos(b));
                (x.min(y), x.max(y))
            })
            .collect();
        arcs.iter().all(|&(a, b)| arcs.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
    }

    /// Concatenation with `self` on top; returns the diagram and the number
    /// of closed loops.
    pub fn compose(&self, below: &BrauerDiagram) -> (BrauerDiagram, usize) {
        let (x, y) = (self.partner(), below.partner());
        let mut visited = [false; STRANDS];
        let mut out = [0u8; POINTS];
        // Follows a strand entering the middle row at `m` from the top
        // diagram (`down`) or from the bottom one, until it leaves.
        let walk = |mut m: usize, mut down: bool, visited: &mut [bool; STRANDS]| -> u8 {
            loop {
                visited[m] = true;
                let next = if down { y[m] } else { x[m + 3] };
                match (down, next) {
                    (true, n) if n >= 3 => return n,
                    (false, n) if n < 3 => return n,
                    (true, n) => {
                        m = n as usize;
                        down = false;
                    }
                    (false, n) => {
                        m = n as usize - 3;
                        down = true;
                    }
                }
            }
        };
        for t in 0..3 {
            let u = x[t];
            out[t] = if u < 3 { u } else { walk(u as usize - 3, true, &mut visited) };
        }
        for bpt in 3..6 {
            let v = y[bpt];
            out[bpt] = if v >= 3 { v } else { walk(v as usize, false, &mut visited) };
        }
        let mut loops = 0;
        for start in 0..STRANDS {
            if visited[start] {
                continue;
            }
            loops += 1;
            let mut m = start;
            loop {
                visited[m] = true;
                m = y[m] as usize;
                visited[m] = true;
                m = x[m + 3] as usize - 3;
                if m == start {
                    break;
                }
            }
        }
        (BrauerDiagram::from_partner(&out), loops)
    }
}

fn point_label(p: u8) -> String {
    if p < 3 {
        format!("{}", p + 1)
    } else {
        format!("{}'", p - 2)
    }
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.pairs.iter().map(|&(a, b)| format!("({},{})", point_label(a), point_label(b))).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All 15 diagrams, or the 5 planar ones, in increasing order.
pub fn enumerate_diagrams(planar_only: bool) -> Vec<BrauerDiagram> {
    fn rec(free: Vec<u8>, acc: &mut Vec<(u8, u8)>, out: &mut Vec<BrauerDiagram>) {
        let Some((&first, rest)) = free.split_first() else {
            out.push(BrauerDiagram::new(acc.clone().try_into().expect("three pairs")).expect("matching"));
            return;
        };
        for (k, &other) in rest.iter().enumerate() {
            let mut remaining = rest.to_vec();
            remaining.remove(k);
            acc.push((first, other));
            rec(remaining, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec((0..POINTS as u8).collect(), &mut Vec::new(), &mut out);
    out.retain(|d| !planar_only || d.is_planar());
    out.sort();
    out
}

fn all_diagrams() -> &'static [BrauerDiagram] {
    static ALL: OnceLock<Vec<BrauerDiagram>> = OnceLock::new();
    ALL.get_or_init(|| enumerate_diagrams(false))
}

/// Rational combination of diagrams with loop value `delta`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagElement {
    terms: BTreeMap<BrauerDiagram, Rational>,
    delta: Rational,
}

impl DiagElement {
    pub fn zero(delta: Rational) -> Self {
        DiagElement { terms: BTreeMap::new(), delta }
    }

    pub fn diagram(d: BrauerDiagram, delta: Rational) -> Self {
        let mut x = DiagElement::zero(delta);
        x.add_term(d, Rational::one());
        x
    }

    pub fn identity(delta: Rational) -> Self {
        DiagElement::diagram(BrauerDiagram::identity(), delta)
    }

    pub fn delta(&self) -> &Rational {
        &self.delta
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BrauerDiagram, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &BrauerDiagram) -> Rational {
        self.terms.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, d: BrauerDiagram, c: Rational) {
        if c.is_zero() {
            return;
        }
        let v = self.coeff(&d) + c;
        if v.is_zero() {
            self.terms.remove(&d);
        } else {
            self.terms.insert(d, v);
        }
    }

    /// Bilinear concatenation product; each closed loop contributes `delta`.
    pub fn multiply(&self, other: &DiagElement) -> DiagElement {
        assert_eq!(self.delta, other.delta, "loop values differ");
        let mut out = DiagElement::zero(self.delta.clone());
        for (x, a) in &self.terms {
            for (y, b) in &other.terms {
                let (d, loops) = x.compose(y);
                out.add_term(d, a * b * num_traits::pow(self.delta.clone(), loops));
            }
        }
        out
    }
}

impl fmt::Display for DiagElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("{}*{}", fmt_rational(c), d)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl AlgebraElement for DiagElement {
    type Scalar = Rational;

    fn mul(&self, rhs: &Self) -> Self {
        self.multiply(rhs)
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(*d, c.clone());
        }
        out
    }

    fn scale(&self, c: &Rational) -> Self {
        let mut out = DiagElement::zero(self.delta.clone());
        for (d, x) in &self.terms {
            out.add_term(*d, x * c);
        }
        out
    }

    fn unit(&self) -> Self {
        DiagElement::identity(self.delta.clone())
    }

    fn coords(&self) -> Vec<Rational> {
        all_diagrams().iter().map(|d| self.coeff(d)).collect()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn check(name: impl Into<String>, holds: bool) -> NamedCheck {
    NamedCheck { name: name.into(), holds }
}

fn central_in<E: AlgebraElement>(z: &E, gens: &[E]) -> bool {
    gens.iter().all(|g| z.commutes_with(g))
}

/// Sorted roots of the minimal polynomial of `m`, when it splits over
/// `candidates` with simple roots.
fn spectrum_within<E: AlgebraElement<Scalar = Rational>>(m: &E, candidates: &[Rational]) -> Option<Vec<Rational>> {
    let mut roots = split_over(&minimal_polynomial(m), candidates)?;
    roots.sort();
    Some(roots)
}

fn fmt_roots(roots: &Option<Vec<Rational>>) -> Vec<String> {
    roots.iter().flatten().map(fmt_rational).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct IsoReport {
    pub name: String,
    pub checks: Vec<NamedCheck>,
    /// Dimension of the span of the image of the listed words.
    pub span_rank: usize,
    /// Certified dimension of the abstract presentation, where one is built.
    pub abstract_dim: Option<usize>,
    /// Roots of the minimal polynomial of the central image.
    pub central_spectrum: Vec<String>,
    pub holds: bool,
}

impl IsoReport {
    fn finish(
        name: &str,
        checks: Vec<NamedCheck>,
        span_rank: usize,
        abstract_dim: Option<usize>,
        spectrum: Vec<String>,
    ) -> Self {
        let holds = checks.iter().all(|c| c.holds);
        IsoReport { name: name.into(), checks, span_rank, abstract_dim, central_spectrum: spectrum, holds }
    }
}

fn elem(d: BrauerDiagram, delta: &Rational) -> DiagElement {
    DiagElement::diagram(d, delta.clone())
}

fn words(list: &[&[u8]]) -> Vec<Word> {
    list.iter().map(|w| Word::new(w.to_vec())).collect()
}

/// Evaluates each relation of the `(j1, j2, j3)` quotient at the images.
fn quotient_checks<E: AlgebraElement<Scalar = Rational>>(spins: [Spin; 3], images: &[E], unit: &E) -> Vec<NamedCheck> {
    let spec = build_quotient(spins[0], spins[1], spins[2]);
    let mut out: Vec<NamedCheck> = spec
        .presentation
        .relations()
        .iter()
        .map(|r| check(r.name.clone(), r.poly.eval(images, unit).is_zero()))
        .collect();
    out.push(check("C central", central_in(&images[2], images)));
    out
}

/// `A ↦ 2 − σ1`, `B ↦ 2 − σ2` into planar diagrams at loop value 2.
pub fn verify_tl_iso() -> IsoReport {
    let delta = qi(2);
    let one = DiagElement::identity(delta.clone());
    let s1 = elem(BrauerDiagram::e(1), &delta);
    let s2 = elem(BrauerDiagram::e(2), &delta);
    let a = one.scale(&qi(2)).sub(&s1);
    let b = one.scale(&qi(2)).sub(&s2);
    let g = a.mul(&b).add(&b.mul(&a)).sub(&a.scale(&qi(2))).sub(&b.scale(&qi(2))).add_scalar(&qi(4));
    let c = g.add_scalar(&q(-1, 4));
    let stated = s1.mul(&s2).add(&s2.mul(&s1)).sub(&s1.scale(&qi(2))).sub(&s2.scale(&qi(2))).add_scalar(&qi(4));

    let mut checks = vec![
        check("s1^2 = 2 s1", s1.mul(&s1) == s1.scale(&qi(2))),
        check("s2^2 = 2 s2", s2.mul(&s2) == s2.scale(&qi(2))),
        check("s1 s2 s1 = s1", s1.mul(&s2).mul(&s1) == s1),
        check("s2 s1 s2 = s2", s2.mul(&s1).mul(&s2) == s2),
    ];
    checks.extend(quotient_checks([Spin::HALF; 3], &[a.clone(), b.clone(), c], &one));
    let images = [one.clone(), a.clone(), b.clone(), a.mul(&b), b.mul(&a)];
    let rank = span_dim(&images);
    checks.push(check("{1, A, B, AB, BA} spans the planar algebra", rank == enumerate_diagrams(true).len()));
    checks.push(check("image of G matches the stated formula", g == stated));
    checks.push(check("image of G is central", central_in(&g, &[s1, s2])));
    let spectrum = spectrum_within(&g, &[qi(1), qi(4)]);
    checks.push(check("(G-1)(G-4) = 0", spectrum == Some(vec![qi(1), qi(4)])));
    IsoReport::finish("tl", checks, rank, None, fmt_roots(&spectrum))
}

/// The Brauer algebra `B_3(η)` as a presentation on `s1, s2, e1, e2`.
pub fn brauer_presentation(eta: &Rational) -> Presentation {
    let p = Presentation::new(&["s1", "s2", "e1", "e2"]);
    let (s1, s2, e1, e2) = (p.gen("s1"), p.gen("s2"), p.gen("e1"), p.gen("e2"));
    let one = NCPoly::one();
    p.with_relation("s1^2", &(&s1 * &s1) - &one)
        .with_relation("s2^2", &(&s2 * &s2) - &one)
        .with_relation("e1^2", &(&e1 * &e1) - &e1.scale(eta))
        .with_relation("e2^2", &(&e2 * &e2) - &e2.scale(eta))
        .with_relation("s1e1", &(&s1 * &e1) - &e1)
        .with_relation("e1s1", &(&e1 * &s1) - &e1)
        .with_relation("s2e2", &(&s2 * &e2) - &e2)
        .with_relation("e2s2", &(&e2 * &s2) - &e2)
        .with_relation("braid", &(&(&s1 * &s2) * &s1) - &(&(&s2 * &s1) * &s2))
        .with_relation("e1e2e1", &(&(&e1 * &e2) * &e1) - &e1)
        .with_relation("e2e1e2", &(&(&e2 * &e1) * &e2) - &e2)
        .with_relation("s1e2e1", &(&(&s1 * &e2) * &e1) - &(&s2 * &e1))
        .with_relation("e2e1s2", &(&(&e2 * &e1) * &s2) - &(&e2 * &s1))
}

/// The fifteen words in `A, B` listed as a basis of the `(1, 1, 1)` quotient.
pub fn brauer_racah_basis() -> Vec<Word> {
    words(&[
        &[],
        &[0],
        &[1],
        &[0, 0],
        &[1, 1],
        &[0, 1],
        &[1, 0],
        &[0, 0, 1],
        &[0, 1, 1],
        &[0, 1, 0],
        &[1, 0, 1],
        &[1, 0, 0],
        &[1, 0, 1, 0],
        &[0, 0, 1, 1],
        &[0, 1, 0, 1],
    ])
}

fn inverse_e(x: &NCPoly) -> NCPoly {
    NCPoly::root_product(x, &[qi(2), qi(6)]).scale(&q(1, 4))
}

fn inverse_s(x: &NCPoly) -> NCPoly {
    (&(x * x).scale(&q(1, 4)) - &x.scale(&q(3, 2))).add_scalar(&qi(1))
}

/// `A ↦ 2(s1 − e1) + 4`, `B ↦ 2(s2 − e2) + 4` into `B_3(3)`.
pub fn verify_brauer_iso() -> IsoReport {
    let delta = qi(3);
    let one = DiagElement::identity(delta.clone());
    let (s1, s2) = (elem(BrauerDiagram::s(1), &delta), elem(BrauerDiagram::s(2), &delta));
    let (e1, e2) = (elem(BrauerDiagram::e(1), &delta), elem(BrauerDiagram::e(2), &delta));
    let gens = [s1.clone(), s2.clone(), e1.clone(), e2.clone()];
    let mut checks: Vec<NamedCheck> = brauer_presentation(&delta)
        .relations()
        .iter()
        .map(|r| check(format!("B3(3) {}", r.name), r.poly.eval(&gens, &one).is_zero()))
        .collect();

    let a = s1.sub(&e1).scale(&qi(2)).add_scalar(&qi(4));
    let b = s2.sub(&e2).scale(&qi(2)).add_scalar(&qi(4));
    let (pa, pb) = (NCPoly::gen(0), NCPoly::gen(1));
    let aa = &pa * &pa;
    let cubic = &(&(&(&pa * &pb) * &pa) - &(&aa * &pb)) - &(&pb * &aa);
    let c_poly =
        &(&(&(&aa + &pa.anticommutator(&pb)) - &pa.scale(&qi(7))) - &pb).add_scalar(&qi(6)) + &cubic.scale(&q(1, 4));
    let c = c_poly.eval(&[a.clone(), b.clone()], &one);
    checks.extend(quotient_checks([Spin::ONE; 3], &[a.clone(), b.clone(), c.clone()], &one));

    let basis_images: Vec<DiagElement> = brauer_racah_basis()
        .iter()
        .map(|w| NCPoly::monomial(w.clone(), qi(1)).eval(&[a.clone(), b.clone()], &one))
        .collect();
    let rank = span_dim(&basis_images);
    checks.push(check("the 15 words are independent", rank == 15));

    let ab = [a.clone(), b.clone()];
    checks.push(check("(A-2)(A-6)/4 -> e1", inverse_e(&pa).eval(&ab, &one) == e1));
    checks.push(check("A^2/4 - 3A/2 + 1 -> s1", inverse_s(&pa).eval(&ab, &one) == s1));
    checks.push(check("(B-2)(B-6)/4 -> e2", inverse_e(&pb).eval(&ab, &one) == e2));
    checks.push(check("B^2/4 - 3B/2 + 1 -> s2", inverse_s(&pb).eval(&ab, &one) == s2));

    let stated = s1
        .sub(&e1)
        .scale(&qi(2))
        .add(&s2.sub(&e2).scale(&qi(2)))
        .add(&s1.mul(&s2.sub(&e2)).mul(&s1).scale(&qi(2)))
        .add_scalar(&qi(6));
    checks.push(check("image of C matches the stated formula", c == stated));
    checks.push(check("image of C is central", central_in(&c, &gens)));
    let spectrum = spectrum_within(&c, &[qi(0), qi(2), qi(6), qi(12)]);
    checks.push(check("C(C-2)(C-6)(C-12) = 0", spectrum == Some(vec![qi(0), qi(2), qi(6), qi(12)])));

    // Inverse direction at the level of presentations.
    let abstract_dim = match certify(&brauer_presentation(&delta), DEFAULT_LMAX) {
        Ok(cert) => {
            let images = vec![inverse_s(&pa), inverse_s(&pb), inverse_e(&pa), inverse_e(&pb)];
            let racah = certify(&build_quotient(Spin::ONE, Spin::ONE, Spin::ONE).presentation, DEFAULT_LMAX).ok();
            let inverse_ok =
                racah.as_ref().is_some_and(|r| homomorphism_holds(&brauer_presentation(&delta), &images, r));
            checks.push(check("inverse map respects the B3(3) relations", inverse_ok));
            Some(cert.dim())
        }
        Err(_) => None,
    };
    checks.push(check("B3(3) presentation has dimension 15", abstract_dim == Some(15)));
    IsoReport::finish("brauer", checks, rank, abstract_dim, fmt_roots(&spectrum))
}

/// `btl(j)`: `σ0² = zσ0`, `σ1² = 2σ1`, `σ1σ0σ1 = σ1` with `z = (2j+1)/(2j)`.
pub fn btl_presentation(j: Spin) -> Presentation {
    let z = btl_z(j);
    let p = Presentation::new(&["s0", "s1"]);
    let (s0, s1) = (p.gen("s0"), p.gen("s1"));
    p.with_relation("s0^2", &(&s0 * &s0) - &s0.scale(&z))
        .with_relation("s1^2", &(&s1 * &s1) - &s1.scale(&qi(2)))
        .with_relation("s1s0s1", &(&(&s1 * &s0) * &s1) - &s1)
}

fn btl_z(j: Spin) -> Rational {
    let tj = j.value() * qi(2);
    (&tj + qi(1)) / tj
}

fn certify_words(pres: &Presentation, basis: &[Word], lmax: usize) -> Option<ClosureCertificate> {
    (start_level(pres)..=lmax).find_map(|l| certify_with_basis(pres, basis, l).ok())
}

/// The matrix model `[2j] ⊗ [1] ⊗ [1]` of `btl(j)`, the six-word basis, the
/// abstract dimension and the image of the central element.
pub fn verify_btl_iso(j: Spin) -> Result<IsoReport> {
    if j.twice() < 2 {
        return Err(Error::ExcludedCase("btl(j) needs j >= 1".into()));
    }
    let ctx = build_context(j, Spin::HALF, Spin::HALF)?;
    let [k12, k23, k123]: [QBlockMatrix; 3] = casimir_images(&ctx).try_into().expect("three images");
    let one = k12.identity_like();
    let tj = j.value() * qi(2);
    let jv = j.value();
    let z = btl_z(j);
    let s0 = k12.scale(&-qi(1)).add_scalar(&((&jv + q(1, 2)) * (&jv + q(3, 2)))).scale(&(qi(1) / &tj));
    let s1 = k23.scale(&-qi(1)).add_scalar(&qi(2));
    let pres = btl_presentation(j);
    let gens = [s0.clone(), s1.clone()];
    let mut checks: Vec<NamedCheck> =
        pres.relations().iter().map(|r| check(format!("btl {}", r.name), r.poly.eval(&gens, &one).is_zero())).collect();

    let six = words(&[&[], &[0], &[1], &[0, 1], &[1, 0], &[0, 1, 0]]);
    let images: Vec<QBlockMatrix> = six.iter().map(|w| NCPoly::monomial(w.clone(), qi(1)).eval(&gens, &one)).collect();
    let rank = span_dim(&images);
    checks.push(check("six words independent on the matrix model", rank == 6));

    let g = k123.scale(&-qi(1)).add_scalar(&((&jv + qi(1)) * (&jv + qi(2)))).scale(&(qi(1) / &tj));
    let stated = s1.scale(&z).add(&s0.scale(&qi(2))).sub(&s0.mul(&s1)).sub(&s1.mul(&s0));
    checks.push(check("central image matches the stated formula", g == stated));
    checks.push(check("central image is central", central_in(&g, &gens)));
    let expected = {
        let mut v = vec![qi(0), (&jv + qi(1)) / &jv, (&tj + qi(1)) / &jv];
        v.sort();
        v
    };
    let spectrum = spectrum_within(&g, &expected);
    checks.push(check("central spectrum", spectrum.as_ref() == Some(&expected)));

    let cert = certify(&pres, DEFAULT_LMAX).ok();
    let abstract_dim = cert.as_ref().map(ClosureCertificate::dim);
    checks.push(check("btl(j) has dimension 6", abstract_dim == Some(6)));
    checks.push(check("the six words span btl(j)", certify_words(&pres, &six, DEFAULT_LMAX).is_some()));
    // A = (j+1/2)(j+3/2) − 2jσ0, B = 2 − σ1, C = (j+1)(j+2) − 2jG.
    let (p0, p1) = (NCPoly::gen(0), NCPoly::gen(1));
    let pa = p0.scale(&-tj.clone()).add_scalar(&((&jv + q(1, 2)) * (&jv + q(3, 2))));
    let pb = p1.scale(&-qi(1)).add_scalar(&qi(2));
    let pg = &(&p1.scale(&z) + &p0.scale(&qi(2))) - &p0.anticommutator(&p1);
    let pc = pg.scale(&-tj).add_scalar(&((&jv + qi(1)) * (&jv + qi(2))));
    let hom = cert
        .as_ref()
        .is_some_and(|c| homomorphism_holds(&build_quotient(j, Spin::HALF, Spin::HALF).presentation, &[pa, pb, pc], c));
    checks.push(check("quotient relations hold in btl(j)", hom));
    Ok(IsoReport::finish(&format!("btl:{j}"), checks, rank, abstract_dim, fmt_roots(&spectrum)))
}

/// The one-boundary Brauer algebra on `e0, e1, s1`. Eight defining
/// relations, the fourth of which has two sides.
pub fn bb_presentation() -> Presentation {
    let p = Presentation::new(&["e0", "e1", "s1"]);
    let (e0, e1, s1) = (p.gen("e0"), p.gen("e1"), p.gen("s1"));
    let one = NCPoly::one();
    let d = &s1 - &e1;
    let anti = e0.anticommutator(&d);
    let s1e0s1 = &(&s1 * &e0) * &s1;
    let rhs3 = &(&(&(&e0.scale(&qi(2)) + &e1) - &s1).add_scalar(&qi(1)) + &anti.scale(&qi(2))) - &s1e0s1.scale(&qi(2));
    let rhs4 = &(&(&(&e0.scale(&qi(2)) + &s1) - &e1).add_scalar(&qi(-1)) - &anti.scale(&qi(2))) + &s1e0s1.scale(&qi(2));
    p.with_relation("e0^2", &(&e0 * &e0) - &e0.scale(&q(3, 2)))
        .with_relation("s1^2", &(&s1 * &s1) - &one)
        .with_relation("e1^2", &(&e1 * &e1) - &e1.scale(&qi(3)))
        .with_relation("s1e1", &(&s1 * &e1) - &e1)
        .with_relation("e1s1", &(&e1 * &s1) - &e1)
        .with_relation("e1e0s1", &(&(&e1 * &e0) * &s1) - &(&e1 - &(&e1 * &e0)))
        .with_relation("s1e0e1", &(&(&s1 * &e0) * &e1) - &(&e1 - &(&e0 * &e1)))
        .with_relation("e0s1e0", &(&(&e0 * &s1) * &e0).scale(&qi(4)) - &rhs3)
        .with_relation("e0e1e0", &(&(&e0 * &e1) * &e0).scale(&qi(4)) - &rhs4)
}

/// The nine words listed as a basis of `bB`.
pub fn bb_basis() -> Vec<Word> {
    words(&[&[], &[0], &[1], &[2], &[0, 1], &[1, 0], &[0, 2], &[2, 0], &[2, 0, 2]])
}

/// The matrix model `[1] ⊗ [2] ⊗ [2]` of `bB`, its basis, abstract dimension
/// and central image.
pub fn verify_bb_iso() -> Result<IsoReport> {
    let ctx = build_context(Spin::HALF, Spin::ONE, Spin::ONE)?;
    let [k12, k23, k123]: [QBlockMatrix; 3] = casimir_images(&ctx).try_into().expect("three images");
    let one = k12.identity_like();
    let script_a = k12.add_scalar(&q(1, 4));
    let b = k23;
    let e0 = script_a.scale(&q(-1, 2)).add_scalar(&qi(2));
    let (pb, unit_b) = (NCPoly::gen(0), [b.clone()]);
    let e1 = inverse_e(&pb).eval(&unit_b, &one);
    let s1 = inverse_s(&pb).eval(&unit_b, &one);
    let gens = [e0.clone(), e1.clone(), s1.clone()];
    let pres = bb_presentation();
    let mut checks: Vec<NamedCheck> =
        pres.relations().iter().map(|r| check(format!("bB {}", r.name), r.poly.eval(&gens, &one).is_zero())).collect();
    checks.push(check("e1 e0 e1 = 3/2 e1", e1.mul(&e0).mul(&e1) == e1.scale(&q(3, 2))));

    let basis = bb_basis();
    let images: Vec<QBlockMatrix> =
        basis.iter().map(|w| NCPoly::monomial(w.clone(), qi(1)).eval(&gens, &one)).collect();
    let rank = span_dim(&images);
    checks.push(check("nine words independent on the matrix model", rank == 9));

    let g = k123.add_scalar(&q(1, 4));
    let stated =
        s1.sub(&e1).scale(&qi(2)).sub(&e0.scale(&qi(2))).sub(&s1.mul(&e0).mul(&s1).scale(&qi(2))).add_scalar(&qi(7));
    checks.push(check("central image matches the stated formula", g == stated));
    checks.push(check("central image is central", central_in(&g, &gens)));
    let spectrum = spectrum_within(&g, &[qi(1), qi(4), qi(9)]);
    checks.push(check("(G-1)(G-4)(G-9) = 0", spectrum == Some(vec![qi(1), qi(4), qi(9)])));
    // The forward map reproduces the Casimirs.
    let a_img = e0.scale(&qi(-2)).add_scalar(&qi(4));
    let b_img = s1.sub(&e1).scale(&qi(2)).add_scalar(&qi(4));
    checks.push(check("4 - 2e0 = A + 1/4 and 2(s1 - e1) + 4 = B", a_img == script_a && b_img == b));

    let cert = certify(&pres, DEFAULT_LMAX).ok();
    let abstract_dim = cert.as_ref().map(ClosureCertificate::dim);
    checks.push(check("bB has dimension 9", abstract_dim == Some(9)));
    checks.push(check("the nine words span bB", certify_words(&pres, &basis, DEFAULT_LMAX).is_some()));
    let (p0, p1, p2) = (NCPoly::gen(0), NCPoly::gen(1), NCPoly::gen(2));
    let pa = p0.scale(&qi(-2)).add_scalar(&q(15, 4));
    let pbb = (&p2 - &p1).scale(&qi(2)).add_scalar(&qi(4));
    let pg = &(&(&p2 - &p1).scale(&qi(2)) - &p0.scale(&qi(2))) - &(&(&p2 * &p0) * &p2).scale(&qi(2));
    let pc = pg.add_scalar(&(qi(7) - q(1, 4)));
    let hom = cert.as_ref().is_some_and(|c| {
        homomorphism_holds(&build_quotient(Spin::HALF, Spin::ONE, Spin::ONE).presentation, &[pa, pbb, pc], c)
    });
    checks.push(check("quotient relations hold in bB", hom));
    Ok(IsoReport::finish("bb", checks, rank, abstract_dim, fmt_roots(&spectrum)))
}
