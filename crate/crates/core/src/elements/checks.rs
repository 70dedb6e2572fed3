//! Claim builders: each returns the exact residual of one relation.

use super::Claim;
use crate::geom::{signed_area, Angle, AngleMeasure, Figure, Point, Side};

pub fn len_eq(text: &str, a: (&Point, &Point), b: (&Point, &Point)) -> Claim {
    Claim::zero(text, a.0.dist_sq(a.1) - b.0.dist_sq(b.1))
}

pub fn angle_eq(text: &str, a: &Angle, b: &Angle) -> Claim {
    Claim::zero(text, a.measure().cos - b.measure().cos)
}

/// `a` is greater than `b`: its cosine is smaller.
pub fn angle_gt(text: &str, a: &Angle, b: &Angle) -> Claim {
    Claim::positive(text, b.measure().cos - a.measure().cos)
}

/// Residual `|m - target|²` of two angle measures.
pub fn measure_eq(text: &str, m: &AngleMeasure, target: &AngleMeasure) -> Claim {
    Claim::zero(
        text,
        (&m.cos - &target.cos).square() + (&m.sin - &target.sin).square(),
    )
}

pub fn right(text: &str, a: &Angle) -> Claim {
    Claim::zero(
        text,
        a.arm1.sub(&a.vertex).dot(&a.arm2.sub(&a.vertex)),
    )
}

/// Dot product of the two directions.
pub fn perpendicular(text: &str, a: (&Point, &Point), b: (&Point, &Point)) -> Claim {
    Claim::zero(text, a.1.sub(a.0).dot(&b.1.sub(b.0)))
}

pub fn parallel(text: &str, a: (&Point, &Point), b: (&Point, &Point)) -> Claim {
    Claim::zero(text, a.1.sub(a.0).cross(&b.1.sub(b.0)))
}

pub fn collinear(text: &str, a: &Point, b: &Point, c: &Point) -> Claim {
    Claim::zero(text, b.sub(a).cross(&c.sub(a)))
}

pub fn on_side(text: &str, p: &Point, q: &Point, x: &Point, side: Side) -> Claim {
    let o = q.sub(p).cross(&x.sub(p));
    Claim::positive(
        text,
        match side {
            Side::Left => o,
            Side::Right => -o,
        },
    )
}

/// `x` lies on the closed segment `pq`: collinear and between.
pub fn on_segment(text: &str, p: &Point, q: &Point, x: &Point) -> Vec<Claim> {
    let t = x.sub(p).dot(&q.sub(p));
    vec![
        collinear(&format!("{text}: collinear"), p, q, x),
        Claim::fact(
            format!("{text}: between"),
            !t.is_negative() && t <= p.dist_sq(q),
        ),
    ]
}

pub fn content_eq(text: &str, a: &Figure, b: &Figure) -> Claim {
    Claim::zero(text, a.content() - b.content())
}

/// `content(a) = k · content(b)`.
pub fn content_ratio(text: &str, a: &Figure, b: &Figure, k: i64) -> Claim {
    Claim::zero(text, a.content() - b.content().scale(k, 1))
}

pub fn same_point(text: &str, a: &Point, b: &Point) -> Claim {
    Claim::zero(text, a.dist_sq(b))
}

/// Opposite sides parallel and equal.
pub fn parallelogram(text: &str, f: &Figure) -> Vec<Claim> {
    let v = &f.vertices;
    vec![
        parallel(&format!("{text}: first pair parallel"), (&v[0], &v[1]), (&v[3], &v[2])),
        parallel(&format!("{text}: second pair parallel"), (&v[1], &v[2]), (&v[0], &v[3])),
        len_eq(&format!("{text}: first pair equal"), (&v[0], &v[1]), (&v[3], &v[2])),
        len_eq(&format!("{text}: second pair equal"), (&v[1], &v[2]), (&v[0], &v[3])),
        Claim::fact(format!("{text}: non-degenerate"), !signed_area(f).is_zero()),
    ]
}
