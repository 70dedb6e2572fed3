use euclid_elements::dsl::{self, Kind, StmtKind};
use euclid_elements::geom::Point;
use euclid_elements::number::Constructible as Num;
use euclid_elements::Error;

fn example(name: &str) -> String {
    std::fs::read_to_string(format!("{}/examples/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn one_point_declaration() {
    let s = dsl::parse("point A = (0, 0)").unwrap();
    assert_eq!(s.statements.len(), 1);
    assert!(matches!(&s.statements[0].kind, StmtKind::Let { kind: Kind::Point, .. }));
}

#[test]
fn missing_comma_is_reported_where_it_belongs() {
    let d = dsl::parse("point A = (0 0)").unwrap_err();
    assert_eq!(d.len(), 1, "{d:?}");
    assert_eq!((d[0].span.line, d[0].span.col), (1, 13));
    assert!(d[0].message.contains("`,`"), "{}", d[0]);
}

#[test]
fn equilateral_script_has_six_statements_and_the_apex() {
    let src = example("i1.euc");
    let s = dsl::parse(&src).unwrap();
    assert_eq!(s.statements.len(), 6);
    assert!(dsl::check(&s).is_empty());
    let out = dsl::interpret(&s).unwrap();
    let half = Num::ratio(1, 2);
    let h = Num::from_int(3).sqrt_nonneg().unwrap().div(&Num::from_int(2)).unwrap();
    assert_eq!(out.point("C"), Some(&Point::new(half, h)));
}

#[test]
fn application_script_is_clean_and_passes() {
    let s = dsl::parse(&example("i44.euc")).unwrap();
    assert_eq!(dsl::check(&s), vec![]);
    let out = dsl::interpret(&s).unwrap();
    assert_eq!(out.assertions.len(), 4);
    assert!(out.passed(), "{}", out.report());
}

#[test]
fn use_before_definition() {
    let s = dsl::parse("point A = (0, 0)\nsegment s = join(A, B)\npoint B = (1, 0)").unwrap();
    let d = dsl::check(&s);
    assert_eq!(d.len(), 1, "{d:?}");
    assert_eq!(d[0].span.line, 2);
}

#[test]
fn circle_arity() {
    let s = dsl::parse("point A = (0, 0)\ncircle c = circle(A)").unwrap();
    assert_eq!(dsl::check(&s).len(), 1);
}

#[test]
fn second_of_one_intersection() {
    let src = "segment AB = [(0, 0), (2, 0)]\nline l = [(1, -1), (1, 1)]\ncircle c = circle(A, B)\npoint P = intersect(AB, l) second\n";
    let s = dsl::parse(src).unwrap();
    assert!(dsl::check(&s).is_empty());
    let e = dsl::interpret(&s).unwrap_err();
    assert_eq!(e.error, Error::NoSuchIntersection);
    assert_eq!(e.span.line, 4);
}

#[test]
fn recovery_reports_every_bad_line() {
    let (s, d) = dsl::parse_partial("point A = (0 0)\npoint B = (1, 0)\nsegment = join(A, B)\nfoo\n");
    assert_eq!(d.len(), 3, "{d:?}");
    assert_eq!(s.statements.len(), 1);
    let lines: Vec<usize> = d.iter().map(|x| x.span.line).collect();
    assert_eq!(lines, [1, 3, 4]);
}

#[test]
fn printing_round_trips() {
    for name in ["i1.euc", "i1_checked.euc", "i44.euc"] {
        let s = dsl::parse(&example(name)).unwrap();
        let again = dsl::parse(&s.to_string()).unwrap();
        assert_eq!(s.without_spans(), again.without_spans(), "{name}");
    }
}

#[test]
fn traces_repeat_exactly() {
    let src = example("i44.euc");
    let a = dsl::run(&src).unwrap().trace.to_text();
    let b = dsl::run(&src).unwrap().trace.to_text();
    assert_eq!(a, b);
}
