use euclid_elements::elements::*;
use euclid_elements::geom::*;
use euclid_elements::{Constructible as Num, Error};

fn p(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

fn seg(a: Point, b: Point) -> Segment {
    Segment::new(a, b).unwrap()
}

fn sqrt(n: i64) -> Num {
    Num::from_int(n).sqrt_nonneg().unwrap()
}

fn right_angle() -> Angle {
    Angle::new(p(1, 0), p(0, 0), p(0, 1)).unwrap()
}

#[test]
fn equilateral_apex_upper_and_lower() {
    let r = p1(&seg(p(0, 0), p(1, 0)), Side::Left).unwrap();
    assert_eq!(r.point("C").unwrap(), &Point::new(Num::ratio(1, 2), sqrt(3).scale(1, 2)));
    let r = p1(&seg(p(0, 0), p(2, 0)), Side::Right).unwrap();
    assert_eq!(r.point("C").unwrap(), &Point::new(Num::one(), -sqrt(3)));
    assert!(r.passed());
}

#[test]
fn placing_a_line_at_a_point() {
    let r = p2(&p(0, 0), &seg(p(3, 0), p(3, 1))).unwrap();
    assert_eq!(r.point("L").unwrap().dist_sq(&p(0, 0)), Num::one());
    let r = p2(&p(5, 5), &seg(p(0, 0), p(1, 1))).unwrap();
    assert_eq!(r.point("L").unwrap().dist_sq(&p(5, 5)), Num::from_int(2));
    let c = r.trace.direct_counts();
    assert_eq!(c.circles, 2);
    assert!(c.joins >= 2);
    assert_eq!(c.subconstructions, 1);
    assert_eq!(r.trace.superposition_count(), 0);
    assert!(r.trace.is_well_formed());
}

#[test]
fn cutting_off_the_less() {
    let r = p3(&seg(p(0, 0), p(5, 0)), &seg(p(7, 7), p(7, 9))).unwrap();
    assert_eq!(r.point("E").unwrap(), &p(2, 0));
    let e = p3(&seg(p(0, 0), p(2, 0)), &seg(p(1, 1), p(1, 3))).unwrap_err();
    assert!(matches!(e, Error::PreconditionViolated(_)));
    let r = p3(&seg(p(0, 0), p(2, 2)), &seg(p(0, 5), p(1, 5))).unwrap();
    let h = sqrt(2).scale(1, 2);
    assert_eq!(r.point("E").unwrap(), &Point::new(h.clone(), h));
}

#[test]
fn bisections_and_perpendiculars() {
    let r = p9(&right_angle()).unwrap();
    assert!(collinear(&p(0, 0), &p(1, 1), r.point("F").unwrap()));
    let r = p10(&seg(p(0, 0), p(1, 0))).unwrap();
    assert_eq!(r.point("D").unwrap(), &Point::new(Num::ratio(1, 2), Num::zero()));
    let x_axis = Line::new(p(0, 0), p(1, 0)).unwrap();
    let r = p12(&x_axis, &p(3, 4)).unwrap();
    assert_eq!(r.point("H").unwrap(), &p(3, 0));
    let r = p11(&x_axis, &p(2, 0), Side::Left).unwrap();
    let f = r.point("F").unwrap();
    assert!(f.x == Num::from_int(2) && f.y.is_positive());
    let e = p11(&x_axis, &p(2, 1), Side::Left).unwrap_err();
    assert!(matches!(e, Error::PreconditionViolated(_)));
}

#[test]
fn triangle_from_three_lengths() {
    let ray = Ray::new(p(0, 0), p(1, 0)).unwrap();
    let f = place_triangle_on_ray(&Num::from_int(3), &Num::from_int(4), &Num::from_int(5), &ray, Side::Left)
        .unwrap();
    assert_eq!(f.vertices, vec![p(0, 0), p(4, 0), p(0, 3)]);
    let e = p22_lengths(&Num::one(), &Num::one(), &Num::from_int(2), &ray, Side::Left).unwrap_err();
    assert!(matches!(e, Error::TriangleInequalityViolated));
    let f = place_triangle_on_ray(&Num::one(), &Num::one(), &Num::one(), &ray, Side::Left).unwrap();
    let eq = p1(&seg(p(0, 0), p(1, 0)), Side::Left).unwrap();
    assert_eq!(&f.vertices[2], eq.point("C").unwrap());
}

#[test]
fn copying_angles() {
    let ray = Ray::new(p(1, 1), p(3, 2)).unwrap();
    let r = p23(&ray, &right_angle(), Side::Left, P23Strategy::Euclid).unwrap();
    let k = r.point("K").unwrap();
    assert!(k.sub(&p(1, 1)).dot(&p(3, 2).sub(&p(1, 1))).is_zero());

    let tri = p1(&seg(p(0, 0), p(1, 0)), Side::Left).unwrap();
    let apex = tri.point("C").unwrap().clone();
    let sixty = Angle::new(p(1, 0), p(0, 0), apex).unwrap();
    let mut traces = Vec::new();
    for s in P23Strategy::ALL {
        let r = p23(&ray, &sixty, Side::Right, s).unwrap();
        let Some(Object::Angle(a)) = r.get("GAK") else { panic!("no angle") };
        assert_eq!(a.measure().cos, Num::ratio(1, 2));
        assert_eq!(r.trace.superposition_count(), 0);
        traces.push(r.trace.counts());
    }
    assert_ne!(traces[0], traces[1]);
}

#[test]
fn parallels() {
    let x_axis = Line::new(p(0, 0), p(1, 0)).unwrap();
    let r = p31(&p(0, 1), &x_axis).unwrap();
    let Some(Object::Line(l)) = r.get("EF") else { panic!("no line") };
    assert!(l.incident(&p(7, 1)));
    assert_eq!(intersect_lines(l, &x_axis), LineMeet::NoIntersection);
    let diag = Line::new(p(0, 0), p(1, 1)).unwrap();
    let r = p31(&p(2, 3), &diag).unwrap();
    let Some(Object::Line(l)) = r.get("EF") else { panic!("no line") };
    assert!(l.incident(&p(2, 3)) && l.incident(&p(3, 4)));
    let r = p31(&p(5, 0), &x_axis).unwrap();
    assert!(r.verification[0].text.starts_with("coincident"));
}

#[test]
fn parallelogram_equal_to_the_three_four_triangle() {
    let t = Figure::new(vec![p(0, 3), p(0, 0), p(4, 0)]).unwrap();
    assert_eq!(t.content(), Num::from_int(6));
    let mut counts = Vec::new();
    for s in P42Strategy::ALL {
        let r = p42(&t, &right_angle(), *s).unwrap();
        assert_eq!(r.figure("FECG").unwrap().content(), Num::from_int(6));
        counts.push(r.trace.counts());
    }
    assert_ne!(counts[0], counts[1]);
}

#[test]
fn parallelogram_placed_on_a_ray() {
    let t = Figure::new(vec![p(1, 4), p(-2, 0), p(3, 1)]).unwrap();
    let d = Angle::new(p(3, 1), p(0, 0), p(1, 2)).unwrap();
    let ray = Ray::new(p(1, 1), p(2, 5)).unwrap();
    let r = p42_on_ray(&t, &d, &ray, Side::Right).unwrap();
    let f = r.figure("EHGF").unwrap();
    assert_eq!(f.vertices[0], p(1, 1));
    assert!(ray.contains(&f.vertices[1]));
    assert_eq!(f.content(), t.content());
}

#[test]
fn complements_are_equal() {
    let sq = Figure::new(vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap();
    let half = Point::new(Num::ratio(1, 2), Num::ratio(1, 2));
    let r = p43_complements(&sq, &half).unwrap();
    assert_eq!(r.figure("EBFK").unwrap().content(), Num::ratio(1, 4));
    assert_eq!(r.figure("HKGD").unwrap().content(), Num::ratio(1, 4));

    let rect = Figure::new(vec![p(0, 0), p(4, 0), p(4, 3), p(0, 3)]).unwrap();
    let k = Point::new(Num::one(), Num::ratio(3, 4));
    let r = p43_complements(&rect, &k).unwrap();
    let (a, b) = (r.figure("EBFK").unwrap(), r.figure("HKGD").unwrap());
    assert_eq!(signed_area(a).abs(), signed_area(b).abs());
    assert_eq!(a.content(), Num::ratio(9, 4));

    let e = p43_complements(&rect, &p(0, 0)).unwrap_err();
    assert!(matches!(e, Error::PreconditionViolated(_)));
}

#[test]
fn application_gives_a_breadth_of_three() {
    let ab = seg(p(0, 0), p(4, 0));
    let t = Figure::new(vec![p(3, 4), p(0, 0), p(6, 0)]).unwrap();
    assert_eq!(t.content(), Num::from_int(12));
    for s in P44Strategy::ALL {
        let r = p44(&ab, &t, &right_angle(), Side::Left, *s).unwrap();
        let f = r.figure("BALM").unwrap();
        assert_eq!(f.vertices, vec![p(0, 0), p(4, 0), p(4, 3), p(0, 3)], "{s}");
    }
}

#[test]
fn application_strategies_agree_and_only_euclid_superposes() {
    // The given angle is the one the median makes with the base, so the
    // equal-angle case applies.
    let t = Figure::new(vec![p(1, 5), p(-1, 0), p(5, 2)]).unwrap();
    let m = p(-1, 0).midpoint(&p(5, 2));
    let d = Angle::new(p(5, 2), m, p(1, 5)).unwrap();
    let ab = seg(p(2, -1), p(-1, 3));
    let mut contents = Vec::new();
    let mut supers = Vec::new();
    for s in P44Strategy::ALL {
        let r = p44(&ab, &t, &d, Side::Right, *s).unwrap();
        contents.push(r.figure("BALM").unwrap().content());
        supers.push(r.trace.superposition_count());
    }
    assert!(contents.iter().all(|c| *c == t.content()));
    assert_eq!(supers, vec![1, 0, 0, 0, 0]);
}

#[test]
fn tinemue_outside_the_equal_case() {
    let t = Figure::new(vec![p(0, 3), p(0, 0), p(4, 0)]).unwrap();
    let e = p44(&seg(p(0, 0), p(4, 0)), &t, &right_angle(), Side::Left, P44Strategy::TinemueEqualCase)
        .unwrap_err();
    assert!(matches!(e, Error::StrategyInapplicable { .. }));
}

fn decagon() -> Figure {
    // a star-shaped, non-convex ten-sided figure
    let pts = [(4, 0), (2, 1), (3, 3), (1, 2), (0, 4), (-1, 2), (-3, 3), (-2, 1), (-4, 0), (0, -3)];
    Figure::new(pts.iter().map(|&(x, y)| p(x, y)).collect()).unwrap()
}

#[test]
fn figure_of_ten_sides_makes_eight_triangles() {
    let f = decagon();
    assert!(f.is_simple() && !f.is_convex());
    let r = p45(&right_angle(), &f).unwrap();
    assert!(r.verification.iter().any(|c| c.text == "triangles: 8"));
    assert_eq!(r.figure("KF").unwrap().content(), f.content());
}

#[test]
fn n_gon_makes_n_minus_two_triangles() {
    for n in 3..=12usize {
        let pts: Vec<Point> = (0..n as i64).map(|i| p(i, i * i)).collect();
        let f = Figure::new(pts).unwrap();
        assert_eq!(triangulate(&f).unwrap().len(), n - 2);
    }
}

#[test]
fn unit_square_applied() {
    let sq = Figure::new(vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap();
    let r = p45(&right_angle(), &sq).unwrap();
    assert_eq!(r.figure("KF").unwrap().content(), Num::one());
}

#[test]
fn a_triangle_applied_as_a_figure_matches_i42() {
    let t = Figure::new(vec![p(2, 5), p(-1, 0), p(4, 1)]).unwrap();
    let d = Angle::new(p(3, 1), p(0, 0), p(1, 2)).unwrap();
    let a = p45(&d, &t).unwrap();
    let b = p42(&t, &d, P42Strategy::Euclid).unwrap();
    assert_eq!(a.figure("KF").unwrap().content(), b.figure("FECG").unwrap().content());
}

#[test]
fn self_crossing_figure_is_refused() {
    let bow = Figure::new(vec![p(0, 0), p(2, 2), p(2, 0), p(0, 2)]).unwrap();
    assert!(matches!(p45(&right_angle(), &bow).unwrap_err(), Error::NotSimple));
}

#[test]
fn squares() {
    let r = p46(&seg(p(0, 0), p(1, 0)), Side::Left, P46Strategy::CampanusFirst).unwrap();
    assert_eq!(r.figure("ABDC").unwrap().vertices, vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]);
    let mut sets = Vec::new();
    for s in P46Strategy::ALL {
        let r = p46(&seg(p(0, 0), p(1, 1)), Side::Right, *s).unwrap();
        let f = r.figure("ABDC").unwrap();
        assert_eq!(f.content(), Num::from_int(2));
        let mut v = f.vertices.clone();
        v.sort();
        sets.push(v);
    }
    assert_eq!(sets[0], sets[1]);
}

#[test]
fn theorem_parallelogram_double_the_triangle() {
    let pg = Figure::new(vec![p(0, 0), p(4, 0), p(5, 3), p(1, 3)]).unwrap();
    let t = Figure::new(vec![p(0, 0), p(4, 0), p(2, 3)]).unwrap();
    let r = check_theorem("I.41", &Bundle::figures(vec![pg, t])).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn theorem_vertical_angles() {
    let b = Bundle::points(vec![p(-2, -1), p(4, 2), p(0, 3), p(0, -3), p(0, 0)]);
    assert!(check_theorem("I.15", &b).unwrap().passed());
}

#[test]
fn theorem_same_base_same_parallels() {
    let a = Figure::new(vec![p(0, 0), p(4, 0), p(5, 3), p(1, 3)]).unwrap();
    let b = Figure::new(vec![p(0, 0), p(4, 0), p(-1, 3), p(-5, 3)]).unwrap();
    let r = check_theorem("I.35", &Bundle::figures(vec![a.clone(), b])).unwrap();
    assert!(r.passed());
    assert_eq!(a.content(), Num::from_int(12));
    let c = Figure::new(vec![p(0, 0), p(4, 0), p(5, 4), p(1, 4)]).unwrap();
    let e = check_theorem("I.35", &Bundle::figures(vec![a, c])).unwrap_err();
    assert!(matches!(e, Error::HypothesisNotSatisfied { .. }));
}

#[test]
fn proposition_ids_and_catalog() {
    assert_eq!(split_id("I.44.chester").unwrap(), ("I.44", Some("chester")));
    assert_eq!(split_id("I.10").unwrap(), ("I.10", None));
    assert!(split_id("I.99").is_err());
    let inst = Instance::new(vec![Object::Segment(seg(p(0, 0), p(1, 0)))]);
    assert!(run("I.1", None, &inst).unwrap().passed());
    assert!(run("I.46.campanus2", None, &inst).unwrap().passed());
    assert!(matches!(run("I.1", Some("proclus"), &inst), Err(Error::UnknownStrategy(_))));
    assert!(matches!(run("I.10", None, &Instance::new(vec![])), Err(Error::PreconditionViolated(_))));
}
