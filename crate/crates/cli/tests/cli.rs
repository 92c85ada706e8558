use std::io::Write;
use std::process::{Command, Stdio};

use ncgb_cli::parse::{parse_job, parse_poly, to_ring, ParseErrorKind};
use ncgb_cli::{execute, OutputFormat, RunOptions};
use ncgb_core::coeff::Integers;
use ncgb_core::{CoeffRing, Word};
use proptest::prelude::*;

const INTRO: &str = "ring Z <x,y> deglex(x>y) bound 3; ideal 2*x, 3*y;";
const BINOMIAL: &str = "ring Z <x,y> deglex(x>y) bound 4;\nideal 2*x - 3*y, x*y - 3*x, y*x - x*y;\noption redTail;\n";

fn run(text: &str, ro: &RunOptions) -> (i32, String, String) {
    execute(text, ro)
}

#[test]
fn parses_a_small_job() {
    let job = parse_job(INTRO).unwrap();
    assert_eq!(job.generators.len(), 2);
    assert_eq!(job.bound, 3);
    assert_eq!(job.ring.alphabet.names(), &["x".to_string(), "y".to_string()]);
}

#[test]
fn commutator_expands() {
    let job = parse_job("ring Z <x,q> deglex(x>q) bound 2; ideal [q,x];").unwrap();
    let alg = job.ring.rational_algebra();
    let expected = parse_poly(&job.ring, "q*x - x*q").unwrap();
    assert_eq!(job.generators, vec![expected.clone()]);
    assert_eq!(alg.render(&expected), "-x*q + q*x");
}

#[test]
fn options_and_comments() {
    let job = parse_job("# header\nring Q <x> deglex(x) bound 4; // trailing\nideal x^2 - 1/2;\noption redSB; option stats; option monomials 3;")
        .unwrap();
    assert!(job.options.reduce && job.options.stats);
    assert_eq!(job.options.monomial_basis_upto, Some(3));
}

#[test]
fn parse_errors_carry_positions() {
    let cases: &[(&str, usize, usize, ParseErrorKind)] = &[
        ("ring Z <x,y> deglex(x>y) bound 3;\nideal 2*x + w;", 2, 13, ParseErrorKind::UnknownVariable("w".into())),
        ("ring Z <x> deglex(x) bound 3;\nideal x^-2;", 2, 9, ParseErrorKind::NegativeExponent),
        ("ring Z <x> deglex(x);", 1, 21, ParseErrorKind::MissingBound),
    ];
    for (text, line, col, kind) in cases {
        let e = parse_job(text).unwrap_err();
        assert_eq!((e.line, e.col, &e.kind), (*line, *col, kind), "{text}");
    }
    let e = parse_job("ring Z <x> deglex(x) bound 3; ideal x/2;").unwrap_err();
    assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
    let e = parse_job("ring R <x> deglex(x) bound 3;").unwrap_err();
    assert!(matches!(e.kind, ParseErrorKind::InvalidRing(_)));
    assert!(e.to_string().starts_with("line 1, column 6:"));
}

#[test]
fn parse_failure_exits_with_one() {
    let (code, out, err) = run("ring Z <x> deglex(x) bound 3; ideal y;", &RunOptions::default());
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("line 1, column 37: unknown variable `y`"), "{err}");
}

#[test]
fn prime_power_modulus_is_unsupported() {
    let text = "ring Zmod 4 <x> deglex(x) bound 2; ideal 2*x;";
    assert!(parse_job(text).is_ok());
    let (code, _, err) = run(text, &RunOptions::default());
    assert_eq!(code, 2);
    assert!(err.contains("prime-power moduli unsupported"), "{err}");
}

#[test]
fn intro_golden_output() {
    let (code, out, err) = run(INTRO, &RunOptions::default());
    assert_eq!(code, 0, "{err}");
    assert_eq!(out, "3*y\n2*x\ny*x\nx*y\nflag: truncated\n");
    let (_, out, _) = run(&INTRO.replace("bound 3", "bound 5"), &RunOptions::default());
    assert!(out.ends_with("flag: conjecturally-complete\n"), "{out}");
}

#[test]
fn binomial_golden_output() {
    let (code, out, _) = run(BINOMIAL, &RunOptions::default());
    assert_eq!(code, 0);
    assert_eq!(out, "2*x - 3*y\n3*y^2 - 9*y\ny*x + x - 6*y\nx*y + x - 6*y\nflag: truncated\n");
}

#[test]
fn stats_block() {
    let ro = RunOptions { stats: true, ..RunOptions::default() };
    let (_, out, _) = run(INTRO, &ro);
    let stats = out.split("stats:\n").nth(1).unwrap();
    for key in ["pairs_created=", "pairs_processed=", "basis_insertions=2", "insertions_length_2=2"] {
        assert!(stats.lines().any(|l| l.starts_with(key)), "{key} missing in {stats}");
    }
}

#[test]
fn json_output() {
    let ro = RunOptions { output: OutputFormat::Json, monomials: Some(2), ..RunOptions::default() };
    let (code, out, _) = run(INTRO, &ro);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["basis"], serde_json::json!(["3*y", "2*x", "y*x", "x*y"]));
    assert_eq!(v["flag"], "truncated");
    assert_eq!(v["stats"]["basis_insertions"], 2);
    assert_eq!(v["monomials"], serde_json::json!(["1"]));
}

#[test]
fn monomials_over_q() {
    let text = "ring Q <x,y,z> deglex(z>y>x) bound 7; ideal y*x - 3*x*y - 3*z, z*x - 2*x*z + y, z*y - y*z - x;";
    let ro = RunOptions { monomials: Some(7), ..RunOptions::default() };
    let (_, out, _) = run(text, &ro);
    assert!(out.contains("monomials: 1, x, y, z, x^2\n"), "{out}");
}

#[test]
fn equivalence_against_own_output() {
    let (_, out, _) = run(BINOMIAL, &RunOptions::default());
    let ro = RunOptions { equiv: Some(out), ..RunOptions::default() };
    let (_, out2, _) = run(BINOMIAL, &ro);
    assert!(out2.ends_with("equivalent: true\n"), "{out2}");
    let ro = RunOptions { equiv: Some("2*x - 3*y\n".into()), ..RunOptions::default() };
    let (_, out3, _) = run(BINOMIAL, &ro);
    assert!(out3.ends_with("equivalent: false\n"), "{out3}");
}

#[test]
fn coprime_modulus_runs() {
    let (code, out, err) = run("ring Zmod 6 <x,y> deglex(x>y) bound 3; ideal 3*x, 2*y;", &RunOptions::default());
    assert_eq!(code, 0, "{err}");
    assert!(out.lines().any(|l| l == "3*x"), "{out}");
    assert!(out.lines().any(|l| l == "2*y"), "{out}");
}

#[test]
fn runs_are_deterministic() {
    let text = "ring Z <x,y,z> degrightlex(x>y>z) bound 9; ideal y*x - 3*x*y - z, z*x - x*z + y, z*y - y*z - x;";
    let ro = RunOptions { stats: true, ..RunOptions::default() };
    assert_eq!(run(text, &ro), run(text, &ro));
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ncgb"))
}

#[test]
fn binary_reads_file_and_stdin() {
    let path = std::env::temp_dir().join(format!("ncgb-cli-test-{}.job", std::process::id()));
    std::fs::write(&path, INTRO).unwrap();
    let out = binary().arg(&path).arg("--stats").output().unwrap();
    std::fs::remove_file(&path).ok();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("basis_insertions=2"));

    let mut child = binary().arg("-").stdin(Stdio::piped()).stdout(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(INTRO.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout), "3*y\n2*x\ny*x\nx*y\nflag: truncated\n");
}

#[test]
fn binary_exit_codes() {
    let mut child = binary().stdin(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(b"ring Zmod 12 <x> deglex(x) bound 2; ideal x;").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = binary().arg("/nonexistent/job").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

fn poly_terms() -> impl Strategy<Value = Vec<(i64, Vec<u8>)>> {
    prop::collection::vec((-20i64..=20, prop::collection::vec(0u8..3, 0..5)), 0..6)
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(terms in poly_terms()) {
        let job = parse_job("ring Z <x,y,z> degrightlex(y>x>z) bound 5;").unwrap();
        let src = job.ring.rational_algebra();
        let alg = src.with_ring(Integers);
        let f = alg.from_terms(terms.iter().map(|(c, w)| (alg.ring().from_i64(*c), Word::from_letters(w))).collect());
        let text = alg.render(&f);
        let back = to_ring(&src, &alg, &parse_poly(&job.ring, &text).unwrap());
        prop_assert_eq!(back, f);
    }
}
