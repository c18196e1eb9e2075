//! Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
//! exact (integer or rational equality); the only tolerances are wall-clock
//! budgets.

mod common;

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use su2_centralizer::bratteli::{centralizer_dim, coupling_sets, CouplingSets};
use su2_centralizer::diagalg::{
    enumerate_diagrams, verify_bb_iso, verify_brauer_iso, verify_btl_iso, verify_tl_iso, DiagElement,
};
use su2_centralizer::exact::{eval_poly, minimal_polynomial, q, qi, span_closure, span_dim, AlgebraElement, Rational};
use su2_centralizer::racah::{
    casimir_images, decompose_by_central_character, matrix_lower_bound, s3_set_laws, test_relation_redundancy,
    verify_braid_remark, verify_conjecture, verify_hjk, verify_kernel_on_matrices, DEFAULT_LMAX,
};
use su2_centralizer::su2rep::{build_context, CasimirLabel};
use su2_centralizer::{Error, Spin};

use common::{oracle_dim, s, triples, unordered_triples};

const LMAX: usize = DEFAULT_LMAX;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, notes: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(what.into());
        }
    }

    fn within(&mut self, elapsed: Duration, budget: Duration, what: &str) {
        self.expect(elapsed <= budget, format!("{what} took {elapsed:?}, budget {budget:?}"));
    }
}

fn name(j: &[Spin; 3]) -> String {
    format!("({}, {}, {})", j[0], j[1], j[2])
}

fn set(mut v: Vec<Rational>) -> Vec<Rational> {
    v.sort();
    v.dedup();
    v
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    let (h, one, th) = (Spin::HALF, Spin::ONE, s(3));
    let cases = [
        ([h, h, h], 5),
        ([one, one, one], 15),
        ([one, h, h], 6),
        ([th, h, h], 6),
        ([s(4), h, h], 6),
        ([h, one, one], 9),
        ([th, th, th], 34),
    ];
    for (j, d) in cases {
        let start = Instant::now();
        let by_sum = centralizer_dim(j[0], j[1], j[2]);
        let by_span = matrix_lower_bound(&build_context(j[0], j[1], j[2]).expect("within cap"));
        o.expect(by_sum == d && by_span == d, format!("{}: Σd² = {by_sum}, span = {by_span}, expected {d}", name(&j)));
        if j == [th, th, th] {
            o.within(start.elapsed(), Duration::from_secs(60), "(3/2)^3");
        }
    }
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    let (h, one, th) = (Spin::HALF, Spin::ONE, s(3));
    let mut check = |j: [Spin; 3], label: &str, pick: fn(&CouplingSets) -> Vec<Rational>, expected: Vec<Rational>| {
        let got = set(pick(&coupling_sets(j[0], j[1], j[2])));
        o.expect(got == set(expected), format!("{label} {}", name(&j)));
    };
    let m123 = |c: &CouplingSets| c.m123.clone();
    let m231 = |c: &CouplingSets| c.m231.clone();
    let m132 = |c: &CouplingSets| c.m132.clone();
    let ints = |v: &[i64]| v.iter().map(|&n| qi(n)).collect::<Vec<_>>();
    let quarters = |v: &[i64]| v.iter().map(|&n| q(n, 4)).collect::<Vec<_>>();

    for (j, expected) in [
        ([h, h, h], vec![q(7, 4), q(-5, 4), q(3, 4)]),
        ([one, one, one], ints(&[-4, -2, 0, 2, 4, 6])),
        ([th, th, th], quarters(&[-33, -21, -13, -9, -5, 7, 11, 15, 27, 39, 51])),
    ] {
        check(j, "M123", m123, expected.clone());
        check(j, "M231", m231, expected.clone());
        check(j, "M132", m132, expected);
    }
    for twice in [2, 3, 4] {
        let v = s(twice).value();
        let j = [s(twice), h, h];
        let ma = vec![&v + q(5, 4), -&v - q(3, 4), &v + q(1, 4), -&v + q(1, 4)];
        let mb = vec![&v * (&v + qi(3)), (&v + qi(2)) * (&v - qi(1)), &v * (&v + qi(1)), (&v + qi(1)) * (&v - qi(2))];
        check(j, "M123", m123, ma.clone());
        check(j, "M132", m132, ma);
        check(j, "M231", m231, mb);
    }
    check([h, one, one], "M231", m231, quarters(&[-9, -5, 3, 7, 11]));
    check([h, one, one], "M123", m123, ints(&[-3, 0, 3, 5]));
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let sweep = unordered_triples(4);
    o.expect(sweep.len() == 35, format!("sweep has {} triples", sweep.len()));
    for j in sweep {
        let r = verify_kernel_on_matrices(j[0], j[1], j[2]).expect("within cap");
        o.expect(r.casimir_identity, format!("Casimir identity fails for {}", name(&j)));
        for c in r.relations.iter().filter(|c| !c.holds) {
            o.expect(false, format!("{} does not vanish for {}", c.name, name(&j)));
        }
    }
    o.within(start.elapsed(), Duration::from_secs(300), "kernel sweep");
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    let (h, one, th) = (Spin::HALF, Spin::ONE, s(3));
    let cases = [
        [h, h, h],
        [one, one, one],
        [h, one, one],
        [th, th, th],
        [one, h, h],
        [th, h, h],
        [s(4), h, h],
        [one, h, one],
        [th, h, one],
        [s(4), h, th],
    ];
    for j in cases {
        let r = verify_conjecture(j[0], j[1], j[2], LMAX).expect("within cap");
        o.expect(r.verified, format!("{}: lower {} upper {:?} target {}", name(&j), r.lower, r.upper, r.target));
    }
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    let (h, one, th) = (Spin::HALF, Spin::ONE, s(3));
    for (j, expected, total) in
        [([h, h, h], vec![1, 4], 5), ([one, one, one], vec![1, 4, 9, 1], 15), ([th, th, th], vec![1, 4, 9, 16, 4], 34)]
    {
        let chars = decompose_by_central_character(j[0], j[1], j[2], LMAX).expect("characters");
        let dims: Vec<Option<usize>> = chars.iter().map(|c| c.dim).collect();
        let want: Vec<Option<usize>> = expected.iter().copied().map(Some).collect();
        o.expect(dims == want, format!("{}: got {dims:?}", name(&j)));
        o.expect(expected.iter().sum::<usize>() == total, format!("{}: sum", name(&j)));
    }
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    let tl = verify_tl_iso();
    o.expect(tl.holds && tl.span_rank == 5 && tl.central_spectrum == ["1", "4"], "tl");
    let br = verify_brauer_iso();
    o.expect(br.holds && br.span_rank == 15 && br.central_spectrum == ["0", "2", "6", "12"], "brauer");
    for twice in [2, 3, 4] {
        let r = verify_btl_iso(s(twice)).expect("btl");
        o.expect(r.holds && r.span_rank == 6 && r.abstract_dim == Some(6), format!("btl:{}", s(twice)));
    }
    let bb = verify_bb_iso().expect("bB");
    o.expect(
        bb.holds && bb.span_rank == 9 && bb.abstract_dim == Some(9) && bb.central_spectrum == ["1", "4", "9"],
        "bB",
    );
    for r in [&tl, &br, &bb] {
        for c in r.checks.iter().filter(|c| !c.holds) {
            o.expect(false, format!("{}: {}", r.name, c.name));
        }
    }
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    let (h, one, th) = (Spin::HALF, Spin::ONE, s(3));
    for (j, k) in [(one, h), (one, one), (th, one), (s(4), h)] {
        for c in [qi(0), qi(2), q(7, 4)] {
            let r = verify_hjk(j, k, &c, LMAX).expect("admissible");
            o.expect(r.holds, format!("hjk ({j}, {k}, {c})"));
        }
    }
    o.expect(matches!(verify_hjk(h, h, &qi(0), LMAX), Err(Error::ExcludedCase(_))), "(1/2, 1/2) not excluded");
    for (j, z) in [(one, q(1, 2)), (th, qi(1)), (one, qi(0))] {
        let r = verify_braid_remark(j, &z, LMAX).expect("admissible");
        o.expect(r.holds, format!("braid ({j}, {z})"));
    }
    for (j, k) in [(one, h), (th, one)] {
        let r = test_relation_redundancy(j, k, LMAX).expect("admissible");
        o.expect(r.unchanged, format!("redundancy ({j}, {k}): {:?} vs {:?}", r.full, r.reduced));
    }
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();

    for (delta, planar) in [(qi(3), false), (qi(2), true)] {
        let ds: Vec<DiagElement> =
            enumerate_diagrams(planar).into_iter().map(|d| DiagElement::diagram(d, delta.clone())).collect();
        let mut assoc = true;
        for x in &ds {
            for y in &ds {
                let xy = x.mul(y);
                for z in &ds {
                    assoc &= xy.mul(z) == x.mul(&y.mul(z));
                }
            }
        }
        o.expect(assoc, format!("associativity at delta = {delta}"));
    }

    for j in [[Spin::HALF; 3], [Spin::ONE; 3], [s(3), Spin::ONE, Spin::HALF], [s(4), Spin::ONE, Spin::ONE]] {
        let ctx = build_context(j[0], j[1], j[2]).expect("within cap");
        for label in [CasimirLabel::K12, CasimirLabel::K23, CasimirLabel::K123] {
            let m = ctx.casimir_blocks(label);
            o.expect(
                eval_poly(&minimal_polynomial(&m), &m).is_zero(),
                format!("minimal polynomial {label:?} {}", name(&j)),
            );
        }
        let gens = casimir_images(&ctx);
        let basis = span_closure(&gens);
        o.expect(span_dim(&basis) == basis.len(), format!("span_closure independence {}", name(&j)));
        let closed = basis
            .iter()
            .all(|b| gens.iter().all(|g| span_dim(&[basis.clone(), vec![g.mul(b)]].concat()) == basis.len()));
        o.expect(closed, format!("span_closure closure {}", name(&j)));
    }

    let mut rng = StdRng::seed_from_u64(0x5eed_2024);
    for _ in 0..20 {
        let j: [Spin; 3] = [0; 3].map(|_| s(rng.gen_range(0..=4)));
        o.expect(s3_set_laws(j[0], j[1], j[2]), format!("S3 set laws {}", name(&j)));
    }

    for j in triples(5) {
        o.expect(centralizer_dim(j[0], j[1], j[2]) == oracle_dim(j), format!("oracle disagrees at {}", name(&j)));
    }
    o.expect(
        centralizer_dim(s(4), Spin::ONE, Spin::ONE) == 19 && oracle_dim([s(4), Spin::ONE, Spin::ONE]) == 19,
        "(2, 1, 1) -> 19",
    );
    o
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("centralizer dimensions, Σd² and span closure (exact)", criterion_1),
        ("coupling sets (exact set equality)", criterion_2),
        ("kernel sweep over 35 triples (exact zero matrices)", criterion_3),
        ("conjecture lower = upper = target by Lmax = 7", criterion_4),
        ("central-character decompositions (exact)", criterion_5),
        ("isomorphism suite (exact)", criterion_6),
        ("H_{j,k,c}, braid and redundancy checks", criterion_7),
        ("property suites and Clebsch-Gordan oracle", criterion_8),
    ];
    let mut failed = 0;
    for (i, (label, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} {label} [{:.2?}]", i + 1, start.elapsed());
        for note in &outcome.notes {
            println!("    {note}");
        }
        if !outcome.pass {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
