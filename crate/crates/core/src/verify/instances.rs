//! Random instances that satisfy each proposition's hypotheses.
//!
//! Coordinates are rationals on a small grid: denominators at most 16 and
//! magnitudes at most 32. Whatever the hypotheses demand beyond genericity
//! (equal sides, parallels, a point on a line) is built in exactly rather
//! than searched for.

use dashu_ratio::RBig;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::elements::{Bundle, Instance};
use crate::geom::{collinear, Angle, Figure, Isometry, Object, Point, Ray, Segment, Side};
use crate::number::Constructible as Num;

const MAX_DEN: i64 = 16;
const MAX_MAG: i64 = 32;

pub(crate) struct Gen<'a> {
    pub rng: &'a mut ChaCha8Rng,
}

impl Gen<'_> {
    fn rational(&mut self, den: i64, mag: i64) -> Num {
        let q = self.rng.gen_range(1..=den);
        let p = self.rng.gen_range(-mag * q..=mag * q);
        Num::from_rational(RBig::from_parts_signed(p.into(), q.into()))
    }

    fn coord(&mut self) -> Num {
        self.rational(MAX_DEN, MAX_MAG)
    }

    fn point(&mut self) -> Point {
        Point::new(self.coord(), self.coord())
    }

    /// A rational strictly between 0 and 1.
    fn unit(&mut self) -> Num {
        let q = self.rng.gen_range(2..=MAX_DEN);
        Num::ratio(self.rng.gen_range(1..q), q)
    }

    /// A positive rational of moderate size.
    fn positive(&mut self) -> Num {
        let q = self.rng.gen_range(1..=MAX_DEN);
        Num::ratio(self.rng.gen_range(1..=2 * q), q)
    }

    fn side(&mut self) -> Side {
        if self.rng.gen_bool(0.5) {
            Side::Left
        } else {
            Side::Right
        }
    }

    fn distinct_from(&mut self, a: &Point) -> Point {
        loop {
            let b = self.point();
            if &b != a {
                return b;
            }
        }
    }

    fn off_line(&mut self, a: &Point, b: &Point) -> Point {
        loop {
            let c = self.point();
            if !collinear(a, b, &c) {
                return c;
            }
        }
    }

    fn segment(&mut self) -> Segment {
        let a = self.point();
        let b = self.distinct_from(&a);
        Segment::new(a, b).expect("distinct endpoints")
    }

    fn triangle(&mut self) -> [Point; 3] {
        let a = self.point();
        let b = self.distinct_from(&a);
        let c = self.off_line(&a, &b);
        [a, b, c]
    }

    fn angle(&mut self) -> Angle {
        let [a, v, b] = self.triangle();
        Angle::new(a, v, b).expect("non-collinear arms")
    }

    fn ray(&mut self) -> Ray {
        let s = self.segment();
        Ray::new(s.a, s.b).expect("distinct points")
    }

    /// A rigid motion with rational entries, from the half-angle tangent.
    fn motion(&mut self) -> Isometry {
        let t = self.rational(8, 4);
        let d = Num::one() + t.square();
        let c = (Num::one() - t.square()).div(&d).expect("positive");
        let s = (t.scale(2, 1)).div(&d).expect("positive");
        let mut m = Isometry::rotation(c, s).expect("unit rotation");
        m.tx = self.coord();
        m.ty = self.coord();
        m.reflect = self.rng.gen_bool(0.5);
        m
    }

    /// `a + t (b - a)`.
    fn along(a: &Point, b: &Point, t: &Num) -> Point {
        a.offset(&b.sub(a).scaled(t))
    }

    /// A simple polygon with 3 to `max` sides, star-shaped about the
    /// centroid of its vertices.
    pub fn polygon(&mut self, max: usize) -> Figure {
        loop {
            let n = self.rng.gen_range(3..=max);
            let mut pts: Vec<Point> = (0..n).map(|_| self.point()).collect();
            let cx = pts.iter().map(|p| p.x.to_f64()).sum::<f64>() / n as f64;
            let cy = pts.iter().map(|p| p.y.to_f64()).sum::<f64>() / n as f64;
            let key = |p: &Point| (p.y.to_f64() - cy).atan2(p.x.to_f64() - cx);
            pts.sort_by(|p, q| key(p).total_cmp(&key(q)));
            if let Ok(f) = Figure::new(pts) {
                if f.is_simple() && f.content().is_positive() {
                    return f;
                }
            }
        }
    }

    fn parallelogram(&mut self) -> [Point; 4] {
        let [a, b, d] = self.triangle();
        let c = b.offset(&d.sub(&a));
        [a, b, c, d]
    }
}

fn fig(pts: Vec<Point>) -> Figure {
    Figure::new(pts).expect("generated figure is valid")
}

/// An instance of construction `base` for `strategy`.
pub(crate) fn construction(g: &mut Gen, base: &str, strategy: &str) -> Instance {
    let side = g.side();
    let objects = match base {
        "I.1" | "I.10" | "I.46" => vec![Object::Segment(g.segment())],
        "I.2" => vec![Object::Point(g.point()), Object::Segment(g.segment())],
        "I.3" => loop {
            let (s, t) = (g.segment(), g.segment());
            match s.length_sq().cmp(&t.length_sq()) {
                std::cmp::Ordering::Greater => break vec![Object::Segment(s), Object::Segment(t)],
                std::cmp::Ordering::Less => break vec![Object::Segment(t), Object::Segment(s)],
                std::cmp::Ordering::Equal => continue,
            }
        },
        "I.9" => vec![Object::Angle(g.angle())],
        "I.11" => {
            let s = g.segment();
            let c = Gen::along(&s.a, &s.b, &g.rational(MAX_DEN, 2));
            vec![Object::Line(s.line()), Object::Point(c)]
        }
        "I.12" => {
            let s = g.segment();
            let c = g.off_line(&s.a, &s.b);
            vec![Object::Line(s.line()), Object::Point(c)]
        }
        "I.22" => {
            let [a, b, c] = g.triangle();
            let seg = |p: &Point, q: &Point| Object::Segment(Segment::new(p.clone(), q.clone()).unwrap());
            vec![seg(&a, &b), seg(&b, &c), seg(&c, &a), Object::Ray(g.ray())]
        }
        "I.23" => vec![Object::Ray(g.ray()), Object::Angle(g.angle())],
        "I.31" => {
            let s = g.segment();
            let p = g.off_line(&s.a, &s.b);
            vec![Object::Point(p), Object::Line(s.line())]
        }
        "I.42" => vec![Object::Figure(fig(g.triangle().to_vec())), Object::Angle(g.angle())],
        "I.43" => {
            let pg = g.parallelogram();
            let k = Gen::along(&pg[0], &pg[2], &g.unit());
            vec![Object::Figure(fig(pg.to_vec())), Object::Point(k)]
        }
        "I.44" => {
            let ab = g.segment();
            let t = g.triangle();
            let d = if strategy == "tinemue_equal_case" {
                // the equal case: the given angle is the median's angle at the base
                let m = t[1].midpoint(&t[2]);
                Angle::new(t[2].clone(), m, t[0].clone()).expect("apex off the base")
            } else {
                g.angle()
            };
            vec![Object::Segment(ab), Object::Figure(fig(t.to_vec())), Object::Angle(d)]
        }
        "I.45" => {
            let f = g.polygon(super::MAX_POLYGON_SIDES);
            vec![Object::Figure(f), Object::Angle(g.angle())]
        }
        other => unreachable!("no generator for {other}"),
    };
    Instance::new(objects).on(side)
}

/// A bundle satisfying the hypotheses of theorem `id`.
pub(crate) fn theorem(g: &mut Gen, id: &str) -> Bundle {
    match id {
        "I.4" | "I.8" | "I.26" => {
            let t = g.triangle();
            let m = g.motion();
            let image: Vec<Point> = t.iter().map(|p| m.apply(p)).collect();
            Bundle::figures(vec![fig(t.to_vec()), fig(image)])
        }
        "I.7" => {
            let [a, b, c] = g.triangle();
            Bundle::points(vec![a, b, c.clone(), c])
        }
        "I.13" => {
            let c = g.point();
            let d = g.distinct_from(&c);
            let b = Gen::along(&c, &d, &g.unit());
            let a = g.off_line(&c, &d);
            Bundle::points(vec![a, b, c, d])
        }
        "I.14" => {
            let [a, b, c] = g.triangle();
            let d = b.offset(&b.sub(&c).scaled(&g.positive()));
            Bundle::points(vec![a, b, c, d])
        }
        "I.15" => {
            let a = g.point();
            let b = g.distinct_from(&a);
            let e = Gen::along(&a, &b, &g.unit());
            let c = g.off_line(&a, &b);
            let d = e.offset(&e.sub(&c).scaled(&g.positive()));
            Bundle::points(vec![a, b, c, d, e])
        }
        "I.16" | "I.32" => {
            let [a, b, c] = g.triangle();
            let d = c.offset(&c.sub(&b).scaled(&g.positive()));
            Bundle::figures(vec![fig(vec![a, b, c])]).with_points(vec![d])
        }
        "I.20" => Bundle::figures(vec![fig(g.triangle().to_vec())]),
        "I.27" | "I.28" | "I.29" => {
            let a = g.point();
            let b = g.distinct_from(&a);
            let e = Gen::along(&a, &b, &g.unit());
            let f = g.off_line(&a, &b);
            let dir = b.sub(&a);
            let c = f.offset(&dir.scaled(&-g.positive()));
            let d = f.offset(&dir.scaled(&g.positive()));
            Bundle::points(vec![a, b, c, d, e, f])
        }
        "I.30" => {
            let e = g.point();
            let f = g.distinct_from(&e);
            let dir = f.sub(&e);
            let a = g.off_line(&e, &f);
            let c = loop {
                let c = g.off_line(&e, &f);
                if !collinear(&a, &a.offset(&dir), &c) {
                    break c;
                }
            };
            let b = a.offset(&dir.scaled(&g.positive()));
            let d = c.offset(&dir.scaled(&-g.positive()));
            Bundle::points(vec![a, b, c, d, e, f])
        }
        "I.33" => {
            let [a, b, c] = g.triangle();
            let d = c.offset(&b.sub(&a));
            Bundle::points(vec![a, b, c, d])
        }
        "I.34" => Bundle::figures(vec![fig(g.parallelogram().to_vec())]),
        "I.35" | "I.36" | "I.37" | "I.38" | "I.41" => {
            let [a, b, top] = g.triangle();
            let h = top.sub(&a);
            let base = b.sub(&a);
            // a second base on the same line, equal to the first
            let (e, f) = if matches!(id, "I.36" | "I.38") {
                let e = a.offset(&base.scaled(&g.rational(MAX_DEN, 3)));
                let f = e.offset(&base);
                (e, f)
            } else {
                (a.clone(), b.clone())
            };
            let lift = |g: &mut Gen, p: &Point| p.offset(&h).offset(&base.scaled(&g.rational(MAX_DEN, 2)));
            let pg = |g: &mut Gen, p: &Point, q: &Point| {
                let w = lift(g, p).sub(p);
                fig(vec![p.clone(), q.clone(), q.offset(&w), p.offset(&w)])
            };
            let tri = |g: &mut Gen, p: &Point, q: &Point| fig(vec![p.clone(), q.clone(), lift(g, p)]);
            let figures = match id {
                "I.35" | "I.36" => vec![pg(g, &a, &b), pg(g, &e, &f)],
                "I.37" | "I.38" => vec![tri(g, &a, &b), tri(g, &e, &f)],
                _ => vec![pg(g, &a, &b), tri(g, &a, &b)],
            };
            Bundle::figures(figures)
        }
        "I.43" => {
            let pg = g.parallelogram();
            let k = Gen::along(&pg[0], &pg[2], &g.unit());
            Bundle::figures(vec![fig(pg.to_vec())]).with_points(vec![k])
        }
        other => unreachable!("no generator for {other}"),
    }
}
