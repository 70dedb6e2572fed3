//! Property tests for the invariants of numbers, geometry, constructions,
//! scripts and drawings.

use proptest::prelude::*;

use euclid_elements::dsl;
use euclid_elements::elements::{p23, p42, p45, P23Strategy, P42Strategy};
use euclid_elements::geom::{
    angle_eq, intersect_circles, intersect_lines, orient, parallel, signed_area, superpose, Angle, Circle, Figure,
    Isometry, Line, LineMeet, Point, Ray, Segment, Side,
};
use euclid_elements::number::Constructible as Num;
use euclid_elements::render::{render, render_result, RenderOptions};
use euclid_elements::Sign;

fn rational() -> impl Strategy<Value = Num> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Num::ratio(n, d))
}

/// `p + q·√r` with `r` a small non-square, so sums and products mix fields.
fn quadratic() -> impl Strategy<Value = Num> {
    (rational(), rational(), prop::sample::select(vec![2i64, 3, 5, 6, 7])).prop_map(|(p, q, r)| {
        let root = Num::from_int(r).sqrt_nonneg().unwrap();
        &p + &(&q * &root)
    })
}

fn point() -> impl Strategy<Value = Point> {
    (-12i64..=12, -12i64..=12).prop_map(|(x, y)| Point::from_ints(x, y))
}

fn distinct_pair() -> impl Strategy<Value = (Point, Point)> {
    (point(), point()).prop_filter("distinct", |(a, b)| a != b)
}

fn triangle() -> impl Strategy<Value = Figure> {
    (point(), point(), point())
        .prop_filter("proper", |(a, b, c)| orient(a, b, c) != Sign::Zero)
        .prop_map(|(a, b, c)| Figure::new(vec![a, b, c]).unwrap())
}

fn angle() -> impl Strategy<Value = Angle> {
    (point(), point(), point())
        .prop_filter("proper", |(a, v, b)| orient(a, v, b) != Sign::Zero)
        .prop_map(|(a, v, b)| Angle::new(a, v, b).unwrap())
}

/// A rigid motion with rational rotation `((1 - t²), 2t) / (1 + t²)`.
fn isometry() -> impl Strategy<Value = Isometry> {
    (-6i64..=6, 1i64..=4, rational(), rational(), any::<bool>()).prop_map(|(a, b, tx, ty, reflect)| {
        let d = a * a + b * b;
        let mut m = Isometry::rotation(Num::ratio(b * b - a * a, d), Num::ratio(2 * a * b, d)).unwrap();
        m.tx = tx;
        m.ty = ty;
        m.reflect = reflect;
        m
    })
}

fn moved(m: &Isometry, f: &Figure) -> Figure {
    Figure::new(f.vertices.iter().map(|p| m.apply(p)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_associative_and_commutative(a in quadratic(), b in quadratic(), c in quadratic()) {
        prop_assert_eq!((&(&a + &b) + &c - &(&a + &(&b + &c))).sign(), Sign::Zero);
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_distributes(a in quadratic(), b in quadratic(), c in quadratic()) {
        let lhs = &a * &(&b + &c);
        let rhs = &(&a * &b) + &(&a * &c);
        prop_assert_eq!((lhs - rhs).sign(), Sign::Zero);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn nonzero_values_have_inverses(a in quadratic()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * &a.recip().unwrap(), Num::one());
    }

    #[test]
    fn roots_square_back(a in quadratic()) {
        let x = a.abs();
        let r = x.sqrt_nonneg().unwrap();
        prop_assert!(!r.is_negative());
        prop_assert_eq!((r.square() - x).sign(), Sign::Zero);
    }

    #[test]
    fn nested_roots_square_back(a in quadratic(), b in quadratic()) {
        // a radicand one level deeper than its parts
        let x = &a.square() + &b.abs();
        prop_assume!(x.is_positive());
        let r = x.sqrt_nonneg().unwrap();
        prop_assert_eq!(r.square(), x);
    }

    #[test]
    fn order_agrees_with_the_sign_of_the_difference(a in quadratic(), b in quadratic()) {
        let expected = match (&a - &b).sign() {
            Sign::Negative => std::cmp::Ordering::Less,
            Sign::Zero => std::cmp::Ordering::Equal,
            Sign::Positive => std::cmp::Ordering::Greater,
        };
        prop_assert_eq!(a.cmp(&b), expected);
        prop_assert_eq!(a == b, expected == std::cmp::Ordering::Equal);
    }

    #[test]
    fn approximations_bracket_the_value(a in quadratic(), digits in 1usize..30) {
        let s = a.approx(digits);
        let v: f64 = s.parse().unwrap();
        prop_assert!((v - a.to_f64()).abs() <= 10f64.powi(-(digits as i32)) + 1e-12 * a.to_f64().abs());
    }

    #[test]
    fn crossing_lines_meet_on_both((a, b) in distinct_pair(), (c, d) in distinct_pair()) {
        let (l1, l2) = (Line::new(a, b).unwrap(), Line::new(c, d).unwrap());
        match intersect_lines(&l1, &l2) {
            LineMeet::Point(p) => {
                prop_assert!(l1.incident(&p) && l2.incident(&p));
                prop_assert!(!parallel(&l1, &l2));
            }
            LineMeet::NoIntersection | LineMeet::Coincident => prop_assert!(parallel(&l1, &l2)),
        }
    }

    #[test]
    fn circle_meets_lie_on_both(c1 in point(), r1 in 1i64..80, c2 in point(), r2 in 1i64..80) {
        let a = Circle::with_radius_sq(c1, Num::from_int(r1)).unwrap();
        let b = Circle::with_radius_sq(c2, Num::from_int(r2)).unwrap();
        if let Ok(pts) = intersect_circles(&a, &b) {
            for p in &pts {
                prop_assert!(a.on_circle(p) && b.on_circle(p));
            }
            // lexicographic order, so traces are deterministic
            prop_assert!(pts.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn superposition_preserves_distances(
        (a, b) in distinct_pair(),
        o in point(),
        (dx, dy) in (-6i64..=6, -6i64..=6),
        side in prop::sample::select(vec![Side::Left, Side::Right]),
        cloud in prop::collection::vec(point(), 5),
    ) {
        prop_assume!(dx != 0 || dy != 0);
        let from = Segment::new(a.clone(), b.clone()).unwrap();
        // an equal segment from `o` in another direction
        let dir = Point::from_ints(dx, dy).sub(&Point::origin());
        let k = from.length_sq().div(&dir.norm_sq()).unwrap().sqrt_nonneg().unwrap();
        let to = Segment::new(o.clone(), o.offset(&dir.scaled(&k))).unwrap();
        let m = superpose(&from, &to, side).unwrap();
        prop_assert_eq!(m.apply(&a), to.a.clone());
        prop_assert_eq!(m.apply(&b), to.b.clone());
        prop_assert_eq!(m.c.square() + m.s.square(), Num::one());
        for p in &cloud {
            for q in &cloud {
                prop_assert_eq!(m.apply(p).dist_sq(&m.apply(q)), p.dist_sq(q));
            }
        }
    }

    #[test]
    fn area_is_invariant_under_motion_and_negates_on_reversal(t in triangle(), m in isometry()) {
        let a = signed_area(&t);
        let image = signed_area(&moved(&m, &t));
        if m.reflect {
            prop_assert_eq!(image, -&a);
        } else {
            prop_assert_eq!(image, a.clone());
        }
        prop_assert_eq!(signed_area(&t.reversed()), -&a);
    }

    #[test]
    fn equal_angles_form_an_equivalence(x in angle(), m1 in isometry(), m2 in isometry()) {
        let y = Angle::new(m1.apply(&x.arm1), m1.apply(&x.vertex), m1.apply(&x.arm2)).unwrap();
        let z = Angle::new(m2.apply(&y.arm1), m2.apply(&y.vertex), m2.apply(&y.arm2)).unwrap();
        prop_assert!(angle_eq(&x, &x));
        prop_assert!(angle_eq(&x, &y) && angle_eq(&y, &x));
        prop_assert!(angle_eq(&y, &z) && angle_eq(&x, &z));
        prop_assert!(angle_eq(&x, &x.swapped()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn angle_copies_agree_across_strategies(model in angle(), (o, t) in distinct_pair()) {
        let ray = Ray::new(o, t).unwrap();
        let mut copies = Vec::new();
        for s in P23Strategy::ALL {
            let r = p23(&ray, &model, Side::Left, s).unwrap();
            prop_assert!(r.passed());
            match r.get("GAK") {
                Some(euclid_elements::geom::Object::Angle(a)) => copies.push(a.clone()),
                other => prop_assert!(false, "no angle: {:?}", other),
            }
        }
        for c in &copies {
            prop_assert!(angle_eq(c, &model));
        }
    }

    #[test]
    fn a_triangle_applied_whole_matches_the_parallelogram(t in triangle(), d in angle()) {
        let whole = p45(&d, &t).unwrap();
        let single = p42(&t, &d, P42Strategy::Euclid).unwrap();
        let content = |r: &euclid_elements::elements::PropositionResult| {
            r.objects
                .iter()
                .rev()
                .find_map(|n| match &n.object {
                    euclid_elements::geom::Object::Figure(f) if f.len() == 4 => Some(f.content()),
                    _ => None,
                })
                .unwrap()
        };
        prop_assert_eq!(content(&whole), content(&single));
        prop_assert_eq!(content(&single), t.content());
    }
}

/// Script lines built from the statement forms of the language.
fn script_line() -> impl Strategy<Value = String> {
    let name = prop::sample::select(vec!["A", "B", "C", "D", "AB", "CD", "ABC", "K2"]);
    let num = (-20i64..=20, 1i64..=9).prop_map(|(n, d)| if d == 1 { n.to_string() } else { format!("{n}/{d}") });
    let pt = (num.clone(), num).prop_map(|(x, y)| format!("({x}, {y})"));
    prop_oneof![
        (name.clone(), pt.clone()).prop_map(|(n, p)| format!("point {n} = {p}")),
        (name.clone(), pt.clone(), pt.clone()).prop_map(|(n, p, q)| format!("segment {n} = [{p}, {q}]")),
        (name.clone(), name.clone(), name.clone()).prop_map(|(n, a, b)| format!("circle {n} = circle({a}, {b})")),
        (name.clone(), name.clone(), name.clone(), prop::sample::select(vec!["", " first", " side upper", " not(A)"]))
            .prop_map(|(n, a, b, s)| format!("point {n} = intersect({a}, {b}){s}")),
        (name.clone(), name.clone()).prop_map(|(a, b)| format!("assert seg_eq({a}, {b})")),
        (name.clone(), name.clone(), name).prop_map(|(n, a, b)| format!("segment {n} = join({a}, {b})")),
        pt.prop_map(|p| format!("point Q = (sqrt(2) + 1/3, 2 * (1 - 3)) # from {p}")),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printing_round_trips(lines in prop::collection::vec(script_line(), 1..8)) {
        let src = lines.join("\n");
        let s = dsl::parse(&src).unwrap();
        let again = dsl::parse(&s.to_string()).unwrap();
        prop_assert_eq!(s.without_spans(), again.without_spans());
    }

    #[test]
    fn diagnostics_point_into_the_text(
        lines in prop::collection::vec(script_line(), 1..6),
        cuts in prop::collection::vec((any::<prop::sample::Index>(), "[()\\[\\],=#a-z0-9 .+*/-]{0,3}"), 0..4),
    ) {
        // damage a valid script at random places
        let mut src = lines.join("\n");
        for (at, junk) in cuts {
            let mut i = at.index(src.len() + 1);
            while !src.is_char_boundary(i) {
                i -= 1;
            }
            src.replace_range(i..(i + 1).min(src.len()), &junk);
        }
        let (script, mut diags) = dsl::parse_partial(&src);
        diags.extend(dsl::check(&script));
        let lines = src.split('\n').count();
        for d in diags {
            prop_assert!(d.span.start <= d.span.end && d.span.end <= src.len(), "{} in {:?}", d, src);
            prop_assert!(d.span.line >= 1 && d.span.line <= lines && d.span.col >= 1, "{} in {:?}", d, src);
        }
    }

    #[test]
    fn drawings_are_pure_and_label_each_point_once(pts in prop::collection::vec(point(), 1..6)) {
        use euclid_elements::elements::{Named, Role};
        use euclid_elements::geom::Object;
        let names = ["P", "Q", "R", "S", "T", "U"];
        let objects: Vec<Named> = pts
            .iter()
            .zip(names)
            .map(|(p, n)| Named { name: n.to_string(), object: Object::Point(p.clone()), role: Role::Given })
            .collect();
        let a = render(&objects, &RenderOptions::default()).unwrap();
        let b = render(&objects, &RenderOptions::default()).unwrap();
        prop_assert_eq!(&a, &b);
        let svg = String::from_utf8(a).unwrap();
        for n in &names[..pts.len()] {
            prop_assert_eq!(svg.matches(&format!(">{n}</text>")).count(), 1);
        }
    }
}

#[test]
fn interpretation_is_a_pure_function_of_the_text() {
    let src = "segment AB = [(0, 0), (3, 1)]\ncircle K = circle(A, B)\ncircle L = circle(B, A)\n\
               point C = intersect(K, L) side upper\nsegment CA = join(C, A)\nsegment CB = join(C, B)\n\
               assert seg_eq(CA, CB)\n";
    let runs: Vec<_> = (0..3).map(|_| dsl::run(src).unwrap()).collect();
    for r in &runs[1..] {
        assert_eq!(r.trace.to_text(), runs[0].trace.to_text());
        assert_eq!(r.report(), runs[0].report());
        let opts = RenderOptions::default();
        assert_eq!(
            render_result(&r.to_result(), &opts).unwrap(),
            render_result(&runs[0].to_result(), &opts).unwrap()
        );
    }
}
