use std::path::PathBuf;

use proptest::prelude::*;
use stillman_cli::{parse_field_descriptor, parse_input, print_input, ParseError};
use stillman_core::exactmath::{rat, ratio, DegreeVector};
use stillman_core::polyring::{CoefficientField, GradingSpec, IdealPresentation, MGPolyRing, Monomial, Polynomial};
use stillman_core::stillman::{burch_kohn_family, mccullough_family, non_bf_counterexample};
use stillman_core::FgMonoid;

fn inputs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("inputs")
}

fn input_files() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(inputs_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "txt"))
        .collect();
    files.sort();
    files
}

fn err(text: &str) -> ParseError {
    parse_input(text).unwrap_err()
}

fn round_trip(ring: &MGPolyRing, ideal: Option<&IdealPresentation>) {
    let printed = print_input(ring, ideal);
    let (r2, i2) = parse_input(&printed).unwrap_or_else(|e| panic!("{e}\n{printed}"));
    assert_eq!(&r2, ring);
    assert_eq!(i2.as_ref(), ideal);
    assert_eq!(print_input(&r2, i2.as_ref()), printed);
}

#[test]
fn hirzebruch_file() {
    let text = std::fs::read_to_string(inputs_dir().join("hirzebruch.txt")).unwrap();
    let (ring, ideal) = parse_input(&text).unwrap();
    assert_eq!(ring.nvars(), 4);
    assert_eq!(ring.grading().rank(), 2);
    assert_eq!(ring.field(), CoefficientField::Prime(32003));
    let expected: Vec<DegreeVector> = [[1, 0], [-2, 1], [1, 0], [0, 1]]
        .iter()
        .map(|d| DegreeVector::from_ints(d))
        .collect();
    assert_eq!(ring.grading().degrees(), expected.as_slice());
    let ideal = ideal.unwrap();
    assert_eq!(ideal.generators().len(), 2);
    assert_eq!(
        ideal.generators()[1],
        Polynomial::from_terms([
            (Monomial::from_pairs([(0, 1), (3, 1)]), rat(1)),
            (Monomial::from_pairs([(1, 1), (2, 3)]), rat(-3)),
        ])
    );
}

#[test]
fn empty_ideal_block_gives_a_ring() {
    let (ring, ideal) = parse_input("ring\n  field QQ\n  rank 1\n  var t deg (1/3)\nideal\n").unwrap();
    assert!(ideal.is_none());
    assert_eq!(ring.grading().degree(0).unwrap(), &DegreeVector::new(vec![ratio(1, 3)]));
    let (_, ideal) = parse_input("ring\n field QQ\n rank 0\n var t deg ()\n").unwrap();
    assert!(ideal.is_none());
}

#[test]
fn every_input_file_round_trips() {
    let files = input_files();
    assert!(files.len() >= 4);
    for path in files {
        let text = std::fs::read_to_string(&path).unwrap();
        let (ring, ideal) = parse_input(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        round_trip(&ring, ideal.as_ref());
    }
}

#[test]
fn generated_inputs_round_trip() {
    for n in 1..=4 {
        let i = mccullough_family(n).unwrap();
        round_trip(i.ring(), Some(&i));
    }
    for n in 2..=4 {
        let i = burch_kohn_family(n).unwrap();
        round_trip(i.ring(), Some(&i));
    }
    let m = FgMonoid::from_int_tuples(&[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
    let (ring, ideal, _) = non_bf_counterexample(&m, 4).unwrap();
    round_trip(&ring, Some(&ideal));
}

#[test]
fn undeclared_variable_is_located() {
    let e = err("ring\n  field QQ\n  rank 1\n  var x deg (1)\nideal\n  gen x^2 + 3*w\n");
    assert_eq!((e.line, e.column), (6, 15));
    assert!(e.message.contains("unknown variable `w`"));
    assert_eq!(e.to_string(), "line 6, column 15: unknown variable `w`");
}

#[test]
fn syntax_errors() {
    let head = "ring\n  field QQ\n  rank 2\n";
    let e = err(&format!("{head}  var x deg (1/0,1)\n"));
    assert_eq!((e.line, e.column), (4, 14));
    assert!(e.message.contains("zero denominator"));
    let e = err(&format!("{head}  var x deg (1,0)\n  var x deg (0,1)\n"));
    assert_eq!((e.line, e.column), (5, 7));
    assert!(e.message.contains("duplicate variable `x`"));
    let e = err(&format!("{head}  var x deg (1)\n"));
    assert!(e.message.contains("rank is 2"));
    let e = err(&format!("{head}  var x deg 1,0\n"));
    assert_eq!((e.line, e.column), (4, 13));
    let e = err(&format!("{head}  var x deg (1,0) extra\n"));
    assert_eq!(e.column, 19);
    let e = err(&format!("{head}  var x deg (1,0)\nideal\n  gen x - x\n"));
    assert!(e.message.contains("zero"));
    let e = err(&format!("{head}  var x deg (1,0)\nideal\n  gen x^\n"));
    assert!(e.message.contains("exponent"));
    let e = err(&format!("{head}  var x deg (1,0)\nideal\n  gen x y\n"));
    assert_eq!((e.line, e.column), (6, 9));
    let e = err(&format!("{head}  var x deg (1,0)\nideal\n  gen x $ 2\n"));
    assert!(e.message.contains("unexpected character"));
    let e = err("ring\n  field GF(4)\n");
    assert_eq!((e.line, e.column), (2, 12));
    let e = err("ring\n  field RR\n");
    assert!(e.message.contains("unknown field"));
    let e = err("ring\n  field QQ\n  var x deg (1)\n");
    assert!(e.message.contains("`rank` must come before"));
    let e = err("ring\n  rank 1\n  var x deg (1)\nideal\n  gen x\n");
    assert!(e.message.contains("no `field`"));
    let e = err("ideal\n");
    assert_eq!(e.line, 1);
    assert!(err("").message.contains("no `ring`"));
    let e = err("ring\n  field QQ\n  rank 1\nideal\n  var x deg (1)\n");
    assert!(e.message.contains("unexpected keyword `var`"));
}

#[test]
fn comments_signs_and_fractions() {
    let text = "ring # the ring\n  field GF(7)\n  rank 1\n  var x deg (+2)\n  var y deg (-1/2)\nideal\n  gen -x*2*y + 1/3*y^3 - 4\n";
    let (ring, ideal) = parse_input(text).unwrap();
    assert_eq!(ring.field(), CoefficientField::Prime(7));
    let f = ideal.unwrap().generators()[0].clone();
    assert_eq!(f.coefficient(&Monomial::from_pairs([(0, 1), (1, 1)])), rat(-2));
    assert_eq!(f.coefficient(&Monomial::from_pairs([(1, 3)])), ratio(1, 3));
    assert_eq!(f.coefficient(&Monomial::one()), rat(-4));
    assert_eq!(parse_field_descriptor("QQ").unwrap(), CoefficientField::Rationals);
    assert_eq!(parse_field_descriptor("GF(32003)").unwrap(), CoefficientField::Prime(32003));
    assert!(parse_field_descriptor("GF(32003) x").is_err());
}

fn arb_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (
            prop::collection::vec(0u32..4, nvars),
            (-20i64..20, 1i64..5),
        ),
        1..5,
    )
    .prop_map(|terms| {
        Polynomial::from_terms(
            terms
                .into_iter()
                .map(|(e, (n, d))| (Monomial::from_dense(&e), ratio(n, d))),
        )
    })
}

proptest! {
    #[test]
    fn printed_rings_reparse(
        rank in 0usize..3,
        degs in prop::collection::vec(prop::collection::vec((-6i64..7, 1i64..4), 3), 1..4),
        polys in prop::collection::vec(arb_poly(3), 0..3),
        rational_field in any::<bool>(),
    ) {
        let nvars = degs.len();
        let degrees: Vec<DegreeVector> = degs
            .iter()
            .map(|d| DegreeVector::new(d[..rank].iter().map(|&(n, q)| ratio(n, q)).collect()))
            .collect();
        let names: Vec<String> = (0..nvars).map(|i| format!("v{i}")).collect();
        let field = if rational_field { CoefficientField::Rationals } else { CoefficientField::default() };
        let ring = MGPolyRing::new(names, GradingSpec::new(rank, degrees).unwrap(), field).unwrap();
        let gens: Vec<Polynomial> = polys
            .into_iter()
            .filter(|p| !p.is_zero() && p.max_var().is_none_or(|v| v < nvars))
            .collect();
        let ideal = (!gens.is_empty()).then(|| IdealPresentation::new(ring.clone(), gens).unwrap());
        round_trip(&ring, ideal.as_ref());
    }
}
