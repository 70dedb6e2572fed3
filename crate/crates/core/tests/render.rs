use euclid_elements::elements::{run, Instance};
use euclid_elements::geom::{Angle, Figure, Object, Point, Segment};
use euclid_elements::render::{render, render_result, RenderOptions};
use euclid_elements::Error;

fn p(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

fn svg(id: &str, objects: Vec<Object>) -> String {
    let r = run(id, None, &Instance::new(objects)).unwrap();
    String::from_utf8(render_result(&r, &RenderOptions::default()).unwrap()).unwrap()
}

fn labels(svg: &str) -> Vec<String> {
    svg.lines()
        .filter_map(|l| l.strip_prefix("<text ").and_then(|t| t.split('>').nth(1)))
        .map(|t| t.trim_end_matches("</text").to_string())
        .collect()
}

#[test]
fn equilateral_figure_census() {
    let s = svg("I.1", vec![Object::Segment(Segment::new(p(0, 0), p(1, 0)).unwrap())]);
    assert_eq!(s.matches("<circle ").count(), 2);
    assert_eq!(s.matches("<line ").count(), 3);
    assert_eq!(labels(&s), ["A", "B", "C"]);
    std::fs::write("/tmp/r/i1.svg", &s).unwrap();
}

#[test]
fn application_figure_labels_completion_points() {
    let s = svg(
        "I.44",
        vec![
            Object::Segment(Segment::new(p(0, 0), p(4, 0)).unwrap()),
            Object::Figure(Figure::new(vec![p(3, 4), p(0, 0), p(6, 0)]).unwrap()),
            Object::Angle(Angle::new(p(1, 0), p(0, 0), p(0, 1)).unwrap()),
        ],
    );
    std::fs::write("/tmp/r/i44.svg", &s).unwrap();
    let l = labels(&s);
    for name in ["H", "L", "K", "M"] {
        assert_eq!(l.iter().filter(|x| *x == name).count(), 1, "{name} in {l:?}");
    }
}

#[test]
fn rendering_is_byte_identical() {
    let inst = Instance::new(vec![Object::Segment(Segment::new(p(1, 2), p(4, 6)).unwrap())]);
    let r = run("I.46", None, &inst).unwrap();
    let a = render_result(&r, &RenderOptions::default()).unwrap();
    let b = render_result(&run("I.46", None, &inst).unwrap(), &RenderOptions::default()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn empty_input_has_nothing_to_render() {
    assert!(matches!(render(&[], &RenderOptions::default()), Err(Error::NothingToRender)));
}
