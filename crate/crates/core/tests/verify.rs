use euclid_elements::elements::Instance;
use euclid_elements::geom::{Angle, Figure, Object, Point, Ray, Segment};
use euclid_elements::verify::{all_ids, compare, run_suite, suite_instance, StrategyOutcome, THEOREM_ROW};
use euclid_elements::Error;

fn p(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

#[test]
fn equilateral_suite_passes() {
    let r = run_suite("I.1", 100, 7).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.rows[0].passed, 100);
}

#[test]
fn application_suite_superposition_counts() {
    let r = run_suite("I.44", 100, 7).unwrap();
    assert!(r.passed(), "{r}");
    for row in &r.rows {
        assert_eq!(row.passed, 100, "{}", row.strategy);
        let expected = if row.strategy == "euclid_superposition" { 100 } else { 0 };
        assert_eq!(row.superposing_instances, expected, "{}", row.strategy);
    }
}

#[test]
fn complements_suite_has_zero_residuals() {
    let r = run_suite("I.43", 100, 7).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.rows.len(), 2);
    assert_eq!(r.row(THEOREM_ROW).unwrap().passed, 100);
}

#[test]
fn every_suite_passes() {
    for id in all_ids() {
        let r = run_suite(id, 25, 11).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.rows.iter().all(|row| row.inapplicable == 0), "{r}");
    }
}

#[test]
fn suites_are_deterministic() {
    let a = run_suite("I.23", 20, 3).unwrap();
    let b = run_suite("I.23", 20, 3).unwrap();
    assert_eq!(a.to_string(), b.to_string());
    assert_eq!(a.records(), b.records());
    assert_ne!(suite_instance("I.23", "euclid", 3, 0).unwrap(), suite_instance("I.23", "euclid", 3, 1).unwrap());
}

#[test]
fn a_suffix_runs_one_strategy() {
    let r = run_suite("I.44.chester", 5, 1).unwrap();
    assert_eq!(r.rows.len(), 1);
    assert_eq!(r.rows[0].strategy, "robert_of_chester");
    assert!(matches!(run_suite("I.99", 1, 1), Err(Error::UnknownProposition(_))));
}

#[test]
fn angle_copy_strategies_compared() {
    let inst = Instance::new(vec![
        Object::Ray(Ray::new(p(0, 0), p(3, 1)).unwrap()),
        Object::Angle(Angle::new(p(5, 0), p(1, 1), p(2, 4)).unwrap()),
    ]);
    let r = compare("I.23", &["euclid", "proclus"], &inst).unwrap();
    assert!(r.passed(), "{r}");
    let (a, b) = (r.rows[0].counts().unwrap(), r.rows[1].counts().unwrap());
    assert_ne!(a, b);
}

#[test]
fn application_compared_superposition_one_against_zero() {
    let inst = Instance::new(vec![
        Object::Segment(Segment::new(p(0, 0), p(4, 0)).unwrap()),
        Object::Figure(Figure::new(vec![p(3, 4), p(0, 0), p(6, 0)]).unwrap()),
        Object::Angle(Angle::new(p(1, 0), p(0, 0), p(0, 1)).unwrap()),
    ]);
    let r = compare("I.44", &["euclid_superposition", "alnayrizi"], &inst).unwrap();
    assert_eq!(r.rows[0].counts().unwrap().superpositions, 1);
    assert_eq!(r.rows[1].counts().unwrap().superpositions, 0);
    assert!(r.records().contains("superpositions=1"));
}

#[test]
fn inapplicable_strategy_is_recorded() {
    let inst = Instance::new(vec![
        Object::Segment(Segment::new(p(0, 0), p(4, 0)).unwrap()),
        Object::Figure(Figure::new(vec![p(0, 3), p(0, 0), p(4, 0)]).unwrap()),
        Object::Angle(Angle::new(p(1, 0), p(0, 0), p(0, 1)).unwrap()),
    ]);
    let r = compare("I.44", &["alnayrizi", "tinemue"], &inst).unwrap();
    assert!(matches!(r.rows[1].outcome, StrategyOutcome::Inapplicable(_)));
    assert!(r.passed());
}

#[test]
fn square_strategies_give_one_vertex_set() {
    let inst = Instance::new(vec![Object::Segment(Segment::new(p(1, 2), p(4, 6)).unwrap())]);
    let r = compare("I.46", &["campanus_first", "campanus_second"], &inst).unwrap();
    assert_eq!(r.rows[0].outputs().unwrap(), r.rows[1].outputs().unwrap());
    assert_eq!(r.rows[0].outputs().unwrap().len(), 4);
}
