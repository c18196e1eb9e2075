use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use su2_centralizer::bratteli::{build_bratteli, centralizer_dim, coupling_sets};
use su2_centralizer::diagalg::{verify_bb_iso, verify_brauer_iso, verify_btl_iso, verify_tl_iso, IsoReport};
use su2_centralizer::exact::{parse_rational, q, qi, Rational};
use su2_centralizer::racah::{
    decompose_by_central_character, test_relation_redundancy, verify_braid_remark, verify_conjecture,
    verify_derived_identities, verify_hjk, verify_kernel_on_matrices, verify_s3_invariance, DerivedCase,
};
use su2_centralizer::su2rep::{build_context, spectrum_difference, Difference};
use su2_centralizer::Spin;

/// Exact verification of su(2) triple tensor-product centralizers as
/// quotients of the Racah algebra.
#[derive(Parser, Debug)]
#[command(name = "su2c", version)]
struct Cli {
    /// Largest truncation degree for abstract certificates.
    #[arg(long, global = true, default_value_t = 7, value_parser = clap::value_parser!(u32).range(4..=12))]
    lmax: u32,
    /// Largest accepted twice-spin.
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u32).range(0..=8))]
    cap: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Record wall-clock time per check.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bratteli diagram and coupling sets.
    Bratteli { j1: Spin, j2: Spin, j3: Spin },
    /// Centralizer dimension `Σ d²`.
    Dim { j1: Spin, j2: Spin, j3: Spin },
    /// Quotient relations evaluated on the Casimir matrices.
    Kernel { j1: Spin, j2: Spin, j3: Spin },
    /// Matrix lower bound against the certified abstract upper bound.
    Conjecture { j1: Spin, j2: Spin, j3: Spin },
    /// Certified dimension of each central character.
    Characters { j1: Spin, j2: Spin, j3: Spin },
    /// Behaviour under permutations of the spins.
    S3 { j1: Spin, j2: Spin, j3: Spin },
    /// Isomorphism with a diagram or boundary algebra: tl, brauer, btl:<j>, bb.
    Iso { target: IsoTarget },
    /// Four-element spanning set of H_{j,k,c}.
    Hjk {
        j: Spin,
        k: Spin,
        #[arg(value_parser = parse_q, allow_hyphen_values = true)]
        c: Rational,
    },
    /// Braid relations in H_{j,j,c} with c = x² − 1/4 − z².
    Braid {
        j: Spin,
        #[arg(value_parser = parse_q, allow_hyphen_values = true)]
        z: Rational,
    },
    /// Certified dimension of (j, 1/2, k) with and without the removable relations.
    Redundancy { j: Spin, k: Spin },
    /// Every check with a published value.
    PaperSuite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum IsoTarget {
    Tl,
    Brauer,
    Btl(Spin),
    Bb,
}

impl std::str::FromStr for IsoTarget {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tl" => Ok(IsoTarget::Tl),
            "brauer" => Ok(IsoTarget::Brauer),
            "bb" => Ok(IsoTarget::Bb),
            _ => match s.strip_prefix("btl:") {
                Some(j) => j.parse().map(IsoTarget::Btl).map_err(|e| format!("{e}")),
                None => Err(format!("unknown target `{s}`; expected tl, brauer, btl:<j> or bb")),
            },
        }
    }
}

fn parse_q(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("invalid rational `{s}`"))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Verified,
    Inconclusive,
    Failed,
    Error,
}

impl Status {
    fn from(verified: bool, inconclusive: bool) -> Self {
        if verified {
            Status::Verified
        } else if inconclusive {
            Status::Inconclusive
        } else {
            Status::Failed
        }
    }
}

#[derive(Serialize)]
struct CheckResult {
    name: String,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
    data: Value,
}

#[derive(Serialize)]
struct Report {
    schema: u32,
    command: String,
    inputs: Value,
    results: Vec<CheckResult>,
    verified: bool,
    inconclusive: Vec<String>,
}

type Outcome = anyhow::Result<(Status, Value)>;

struct Runner {
    lmax: usize,
    timing: bool,
    results: Vec<CheckResult>,
}

impl Runner {
    fn run(&mut self, name: impl Into<String>, f: impl FnOnce(usize) -> Outcome) {
        let start = Instant::now();
        let (status, data) = match f(self.lmax) {
            Ok(r) => r,
            Err(e) => (Status::Error, json!({ "error": format!("{e:#}") })),
        };
        let elapsed_ms = self.timing.then(|| start.elapsed().as_millis());
        self.results.push(CheckResult { name: name.into(), status, elapsed_ms, data });
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn sorted(mut v: Vec<Rational>) -> Vec<Rational> {
    v.sort();
    v.dedup();
    v
}

fn conjecture(j: [Spin; 3], expected: Option<usize>) -> impl FnOnce(usize) -> Outcome {
    move |lmax| {
        let r = verify_conjecture(j[0], j[1], j[2], lmax)?;
        let matches = expected.is_none_or(|e| e == r.target);
        Ok((Status::from(r.verified && matches, r.inconclusive()), to_value(&r)))
    }
}

fn characters(j: [Spin; 3], expected: Option<Vec<usize>>) -> impl FnOnce(usize) -> Outcome {
    move |lmax| {
        let chars = decompose_by_central_character(j[0], j[1], j[2], lmax)?;
        let dims: Vec<Option<usize>> = chars.iter().map(|c| c.dim).collect();
        let inconclusive = dims.iter().any(Option::is_none);
        let agree = chars.iter().all(|c| c.dim == Some(c.target));
        let matches = expected.is_none_or(|e| dims == e.into_iter().map(Some).collect::<Vec<_>>());
        Ok((Status::from(agree && matches, inconclusive), to_value(&chars)))
    }
}

fn kernel(j: [Spin; 3]) -> impl FnOnce(usize) -> Outcome {
    move |_| {
        let r = verify_kernel_on_matrices(j[0], j[1], j[2])?;
        Ok((Status::from(r.all_vanish && r.casimir_identity, false), to_value(&r)))
    }
}

fn s3(j: [Spin; 3]) -> impl FnOnce(usize) -> Outcome {
    move |lmax| {
        let r = verify_s3_invariance(j[0], j[1], j[2], lmax)?;
        let inconclusive = r.phi1.is_none() || r.phi2.is_none();
        Ok((Status::from(r.holds(), inconclusive), to_value(&r)))
    }
}

fn iso(target: IsoTarget) -> impl FnOnce(usize) -> Outcome {
    move |_| {
        let r: IsoReport = match target {
            IsoTarget::Tl => verify_tl_iso(),
            IsoTarget::Brauer => verify_brauer_iso(),
            IsoTarget::Btl(j) => verify_btl_iso(j)?,
            IsoTarget::Bb => verify_bb_iso()?,
        };
        Ok((Status::from(r.holds, false), to_value(&r)))
    }
}

fn hjk(j: Spin, k: Spin, c: Rational) -> impl FnOnce(usize) -> Outcome {
    move |lmax| {
        let r = verify_hjk(j, k, &c, lmax)?;
        Ok((Status::from(r.holds, r.level.is_none()), to_value(&r)))
    }
}

fn braid(j: Spin, z: Rational) -> impl FnOnce(usize) -> Outcome {
    move |lmax| {
        let r = verify_braid_remark(j, &z, lmax)?;
        Ok((Status::from(r.holds, false), to_value(&r)))
    }
}

fn redundancy(j: Spin, k: Spin) -> impl FnOnce(usize) -> Outcome {
    move |lmax| {
        let r = test_relation_redundancy(j, k, lmax)?;
        let inconclusive = r.full.is_none() || r.reduced.is_none();
        Ok((Status::from(r.unchanged, inconclusive), to_value(&r)))
    }
}

fn derived(case: DerivedCase) -> impl FnOnce(usize) -> Outcome {
    move |_| {
        let r = verify_derived_identities(case)?;
        Ok((Status::from(r.holds, false), to_value(&r)))
    }
}

fn value_check(data: Value, holds: bool) -> Outcome {
    Ok((Status::from(holds, false), data))
}

fn s(twice: u32) -> Spin {
    Spin::from_twice(twice)
}

fn triple_name(j: &[Spin; 3]) -> String {
    format!("({}, {}, {})", j[0], j[1], j[2])
}

fn rationals(v: &[Rational]) -> Value {
    to_value(&v.iter().map(su2_centralizer::exact::fmt_rational).collect::<Vec<_>>())
}

fn coupling_check(
    j: [Spin; 3],
    pick: fn(&su2_centralizer::bratteli::CouplingSets) -> Vec<Rational>,
    expected: Vec<Rational>,
) -> impl FnOnce(usize) -> Outcome {
    move |_| {
        let got = sorted(pick(&coupling_sets(j[0], j[1], j[2])));
        let expected = sorted(expected);
        value_check(json!({ "got": rationals(&got), "expected": rationals(&expected) }), got == expected)
    }
}

fn paper_suite(runner: &mut Runner) {
    let h = Spin::HALF;
    let one = Spin::ONE;
    let th = s(3);

    let dims: [([Spin; 3], usize); 7] = [
        ([h, h, h], 5),
        ([one, one, one], 15),
        ([one, h, h], 6),
        ([th, h, h], 6),
        ([s(4), h, h], 6),
        ([h, one, one], 9),
        ([th, th, th], 34),
    ];
    for (j, d) in dims {
        runner.run(format!("dim {}", triple_name(&j)), move |_| {
            let got = centralizer_dim(j[0], j[1], j[2]);
            value_check(json!({ "dim": got, "expected": d }), got == d)
        });
    }

    type Pick = fn(&su2_centralizer::bratteli::CouplingSets) -> Vec<Rational>;
    let m123: Pick = |c| c.m123.clone();
    let m231: Pick = |c| c.m231.clone();
    let m132: Pick = |c| c.m132.clone();
    let all: [(&str, Pick); 3] = [("M123", m123), ("M231", m231), ("M132", m132)];
    let m7 = [-33, -21, -13, -9, -5, 7, 11, 15, 27, 39, 51].iter().map(|&n| q(n, 4)).collect::<Vec<_>>();
    let uniform = [
        ([h, h, h], vec![q(7, 4), q(-5, 4), q(3, 4)]),
        ([one, one, one], [-4, -2, 0, 2, 4, 6].iter().map(|&n| qi(n)).collect()),
        ([th, th, th], m7),
    ];
    for (j, expected) in uniform {
        for (label, pick) in all {
            runner.run(format!("{label} {}", triple_name(&j)), coupling_check(j, pick, expected.clone()));
        }
    }
    for twice in [2u32, 3, 4] {
        let j = s(twice);
        let v = j.value();
        let m_a = vec![&v + q(5, 4), -&v - q(3, 4), &v + q(1, 4), -&v + q(1, 4)];
        let m_b = vec![&v * (&v + qi(3)), (&v + qi(2)) * (&v - qi(1)), &v * (&v + qi(1)), (&v + qi(1)) * (&v - qi(2))];
        let t = [j, h, h];
        runner.run(format!("M123 {}", triple_name(&t)), coupling_check(t, m123, m_a.clone()));
        runner.run(format!("M132 {}", triple_name(&t)), coupling_check(t, m132, m_a));
        runner.run(format!("M231 {}", triple_name(&t)), coupling_check(t, m231, m_b));
    }
    let t = [h, one, one];
    runner.run(format!("M123 {}", triple_name(&t)), coupling_check(t, m123, vec![qi(-3), qi(0), qi(3), qi(5)]));
    runner.run(format!("M132 {}", triple_name(&t)), coupling_check(t, m132, vec![qi(-3), qi(0), qi(3), qi(5)]));
    runner.run(
        format!("M231 {}", triple_name(&t)),
        coupling_check(t, m231, vec![q(-9, 4), q(-5, 4), q(3, 4), q(7, 4), q(11, 4)]),
    );

    runner.run("spectrum K123-K12 (1/2, 1/2, 1/2)", move |_| {
        let got = sorted(spectrum_difference(&build_context(h, h, h)?, Difference::Total12)?);
        let expected = sorted(vec![q(7, 4), q(-5, 4), q(3, 4)]);
        value_check(json!({ "got": rationals(&got) }), got == expected)
    });
    runner.run("spectrum K123-K12 (1, 1, 1)", move |_| {
        let got = sorted(spectrum_difference(&build_context(one, one, one)?, Difference::Total12)?);
        let expected: Vec<Rational> = [-4, -2, 0, 2, 4, 6].iter().map(|&n| qi(n)).collect();
        value_check(json!({ "got": rationals(&got) }), got == expected)
    });

    for j in [[h, h, h], [one, one, one]] {
        runner.run(format!("kernel {}", triple_name(&j)), kernel(j));
    }

    let conj: [([Spin; 3], Option<usize>); 10] = [
        ([h, h, h], Some(5)),
        ([one, one, one], Some(15)),
        ([h, one, one], Some(9)),
        ([th, th, th], Some(34)),
        ([one, h, h], Some(6)),
        ([th, h, h], Some(6)),
        ([s(4), h, h], Some(6)),
        ([one, h, one], None),
        ([th, h, one], None),
        ([s(4), h, th], None),
    ];
    for (j, e) in conj {
        runner.run(format!("conjecture {}", triple_name(&j)), conjecture(j, e));
    }

    let chars: [([Spin; 3], Vec<usize>); 3] =
        [([h, h, h], vec![1, 4]), ([one, one, one], vec![1, 4, 9, 1]), ([th, th, th], vec![1, 4, 9, 16, 4])];
    for (j, e) in chars {
        runner.run(format!("characters {}", triple_name(&j)), characters(j, Some(e)));
    }

    runner.run("s3 (1/2, 1, 1)", s3([h, one, one]));

    for case in [
        DerivedCase::TlSimplified,
        DerivedCase::BrauerC,
        DerivedCase::BtlLemma(one),
        DerivedCase::BbG,
        DerivedCase::BbPresentation,
    ] {
        let label = match case {
            DerivedCase::TlSimplified => "tl-simplified".to_string(),
            DerivedCase::BrauerC => "brauer-c".to_string(),
            DerivedCase::BtlLemma(j) => format!("btl-lemma {j}"),
            DerivedCase::BbG => "bb-g".to_string(),
            DerivedCase::BbPresentation => "bb-presentation".to_string(),
        };
        runner.run(format!("identities {label}"), derived(case));
    }

    runner.run("iso tl", iso(IsoTarget::Tl));
    runner.run("iso brauer", iso(IsoTarget::Brauer));
    runner.run("iso btl:1", iso(IsoTarget::Btl(one)));
    runner.run("iso bb", iso(IsoTarget::Bb));

    for (j, k) in [(one, h), (th, one)] {
        for c in [qi(0), qi(2)] {
            runner.run(format!("hjk {j} {k} {}", su2_centralizer::exact::fmt_rational(&c)), hjk(j, k, c));
        }
    }
    runner.run("hjk 1/2 1/2 excluded", move |lmax| match verify_hjk(h, h, &qi(0), lmax) {
        Err(su2_centralizer::Error::ExcludedCase(m)) => value_check(json!({ "excluded": m }), true),
        other => value_check(json!({ "unexpected": format!("{other:?}") }), false),
    });
    for (j, k) in [(one, h), (th, one)] {
        runner.run(format!("redundancy {j} {k}"), redundancy(j, k));
    }
}

fn check_cap(cap: u32, spins: &[Spin]) -> anyhow::Result<()> {
    for sp in spins {
        if sp.twice() > cap {
            bail!("spin {sp} exceeds the cap 2j <= {cap}");
        }
    }
    Ok(())
}

fn execute(cli: &Cli) -> anyhow::Result<Report> {
    let mut runner = Runner { lmax: cli.lmax as usize, timing: cli.timing, results: Vec::new() };
    let (command, inputs) = match &cli.command {
        Command::Bratteli { j1, j2, j3 } => {
            let j = [*j1, *j2, *j3];
            check_cap(cli.cap, &j)?;
            runner.run("bratteli", move |_| {
                let data = json!({ "bratteli": build_bratteli(j[0], j[1], j[2]), "coupling": coupling_sets(j[0], j[1], j[2]) });
                Ok((Status::Verified, data))
            });
            ("bratteli", json!({ "spins": j }))
        }
        Command::Dim { j1, j2, j3 } => {
            let j = [*j1, *j2, *j3];
            check_cap(cli.cap, &j)?;
            runner.run("dim", move |_| Ok((Status::Verified, json!({ "dim": centralizer_dim(j[0], j[1], j[2]) }))));
            ("dim", json!({ "spins": j }))
        }
        Command::Kernel { j1, j2, j3 } => {
            let j = [*j1, *j2, *j3];
            check_cap(cli.cap, &j)?;
            runner.run("kernel", kernel(j));
            ("kernel", json!({ "spins": j }))
        }
        Command::Conjecture { j1, j2, j3 } => {
            let j = [*j1, *j2, *j3];
            check_cap(cli.cap, &j)?;
            runner.run("conjecture", conjecture(j, None));
            ("conjecture", json!({ "spins": j, "lmax": cli.lmax }))
        }
        Command::Characters { j1, j2, j3 } => {
            let j = [*j1, *j2, *j3];
            check_cap(cli.cap, &j)?;
            runner.run("characters", characters(j, None));
            ("characters", json!({ "spins": j, "lmax": cli.lmax }))
        }
        Command::S3 { j1, j2, j3 } => {
            let j = [*j1, *j2, *j3];
            check_cap(cli.cap, &j)?;
            runner.run("s3", s3(j));
            ("s3", json!({ "spins": j, "lmax": cli.lmax }))
        }
        Command::Iso { target } => {
            let label = match target {
                IsoTarget::Tl => "tl".to_string(),
                IsoTarget::Brauer => "brauer".to_string(),
                IsoTarget::Btl(j) => {
                    check_cap(cli.cap, &[*j])?;
                    format!("btl:{j}")
                }
                IsoTarget::Bb => "bb".to_string(),
            };
            runner.run(format!("iso {label}"), iso(target.clone()));
            ("iso", json!({ "target": label }))
        }
        Command::Hjk { j, k, c } => {
            check_cap(cli.cap, &[*j, *k])?;
            runner.run("hjk", hjk(*j, *k, c.clone()));
            ("hjk", json!({ "j": j, "k": k, "c": su2_centralizer::exact::fmt_rational(c), "lmax": cli.lmax }))
        }
        Command::Braid { j, z } => {
            check_cap(cli.cap, &[*j])?;
            runner.run("braid", braid(*j, z.clone()));
            ("braid", json!({ "j": j, "z": su2_centralizer::exact::fmt_rational(z), "lmax": cli.lmax }))
        }
        Command::Redundancy { j, k } => {
            check_cap(cli.cap, &[*j, *k])?;
            runner.run("redundancy", redundancy(*j, *k));
            ("redundancy", json!({ "j": j, "k": k, "lmax": cli.lmax }))
        }
        Command::PaperSuite => {
            paper_suite(&mut runner);
            ("paper-suite", json!({ "lmax": cli.lmax }))
        }
    };
    let results = runner.results;
    let verified = results.iter().all(|r| r.status == Status::Verified);
    let inconclusive = results.iter().filter(|r| r.status == Status::Inconclusive).map(|r| r.name.clone()).collect();
    Ok(Report { schema: 1, command: command.to_string(), inputs, results, verified, inconclusive })
}

fn exit_code(report: &Report) -> u8 {
    if report.results.iter().any(|r| matches!(r.status, Status::Failed | Status::Error)) {
        1
    } else if !report.inconclusive.is_empty() {
        2
    } else {
        0
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    for r in &report.results {
        let status = serde_json::to_string(&r.status).expect("status serializes");
        let time = r.elapsed_ms.map(|t| format!(" [{t} ms]")).unwrap_or_default();
        out += &format!("{:<13} {}{}\n    {}\n", status.trim_matches('"').to_uppercase(), r.name, time, r.data);
    }
    out + &format!("verified: {}\n", report.verified)
}

fn main() -> ExitCode {
    // Usage errors exit with 1; 2 is reserved for inconclusive runs.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&cli).context("su2c") {
        Ok(report) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
                Format::Text => render_text(&report),
            };
            // A closed pipe is not an error worth reporting.
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(exit_code(&report))
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
