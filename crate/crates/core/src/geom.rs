//! Points, lines, circles and figures over constructible coordinates.
//!
//! Everything here is exact. The three postulate primitives are [`join`],
//! [`extend`] and [`circle`]; intersections are computed in closed form and
//! returned in the canonical lexicographic point order. Rigid motions
//! ([`Isometry`]) stand in for superposition.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::number::{Constructible as Num, Interval, Sign};

#[derive(Clone, PartialEq, Eq)]
pub struct Point {
    pub x: Num,
    pub y: Num,
}

impl Point {
    pub fn new(x: Num, y: Num) -> Point {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Point {
        Point::new(Num::from_int(x), Num::from_int(y))
    }

    pub fn origin() -> Point {
        Point::from_ints(0, 0)
    }

    pub fn sub(&self, o: &Point) -> Vector {
        Vector {
            x: &self.x - &o.x,
            y: &self.y - &o.y,
        }
    }

    pub fn offset(&self, v: &Vector) -> Point {
        Point::new(&self.x + &v.x, &self.y + &v.y)
    }

    pub fn midpoint(&self, o: &Point) -> Point {
        Point::new((&self.x + &o.x).scale(1, 2), (&self.y + &o.y).scale(1, 2))
    }

    /// Enclosures of the components of `o - self`.
    fn enclosure_to(&self, o: &Point) -> (Interval, Interval) {
        (
            o.x.enclosure().sub(self.x.enclosure()),
            o.y.enclosure().sub(self.y.enclosure()),
        )
    }

    pub fn dist_sq(&self, o: &Point) -> Num {
        self.sub(o).norm_sq()
    }

    /// Largest radical nesting depth among the coordinates.
    pub fn radical_depth(&self) -> u32 {
        self.x.radical_depth().max(self.y.radical_depth())
    }
}

/// Canonical point order: lexicographic by `(x, y)`.
impl Ord for Point {
    fn cmp(&self, o: &Point) -> Ordering {
        self.x.cmp(&o.x).then_with(|| self.y.cmp(&o.y))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, o: &Point) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector {
    pub x: Num,
    pub y: Num,
}

impl Vector {
    pub fn dot(&self, o: &Vector) -> Num {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn cross(&self, o: &Vector) -> Num {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn norm_sq(&self) -> Num {
        self.x.square() + self.y.square()
    }

    pub fn scaled(&self, k: &Num) -> Vector {
        Vector {
            x: &self.x * k,
            y: &self.y * k,
        }
    }

    /// Quarter turn counterclockwise.
    pub fn perp(&self) -> Vector {
        Vector {
            x: -&self.y,
            y: self.x.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

/// Side of a directed line `p → q`; `Left` is counterclockwise.
///
/// For a base drawn left to right, `Left` is the upper half-plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Side {
    #[default]
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }

    fn sign(self) -> Sign {
        match self {
            Side::Left => Sign::Positive,
            Side::Right => Sign::Negative,
        }
    }
}

/// Orientation of the triple: positive when `a, b, c` turn counterclockwise.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Sign {
    let (u, v) = (a.enclosure_to(b), a.enclosure_to(c));
    let cross = u.0.mul(v.1).sub(u.1.mul(v.0));
    filtered(cross, || b.sub(a).cross(&c.sub(a)).sign())
}

/// Sign of `(b - a)·(d - c)`.
pub fn dot_sign(a: &Point, b: &Point, c: &Point, d: &Point) -> Sign {
    let (u, v) = (a.enclosure_to(b), c.enclosure_to(d));
    let dot = u.0.mul(v.0).add(u.1.mul(v.1));
    filtered(dot, || b.sub(a).dot(&d.sub(c)).sign())
}

/// The sign of an enclosure when it excludes zero, else the exact sign.
fn filtered(iv: Interval, exact: impl FnOnce() -> Sign) -> Sign {
    match iv.sign() {
        Some(1) => Sign::Positive,
        Some(-1) => Sign::Negative,
        _ => exact(),
    }
}

pub fn collinear(a: &Point, b: &Point, c: &Point) -> bool {
    orient(a, b, c) == Sign::Zero
}

/// Which side of the directed line `p → q` the point lies on, if any.
pub fn side_of(p: &Point, q: &Point, x: &Point) -> Option<Side> {
    match orient(p, q, x) {
        Sign::Positive => Some(Side::Left),
        Sign::Negative => Some(Side::Right),
        Sign::Zero => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Segment> {
        if a == b {
            return Err(Error::DegenerateInput("segment endpoints coincide".into()));
        }
        Ok(Segment { a, b })
    }

    pub fn length_sq(&self) -> Num {
        self.a.dist_sq(&self.b)
    }

    pub fn length(&self) -> Num {
        self.length_sq()
            .sqrt_nonneg()
            .expect("squared length is non-negative")
    }

    pub fn line(&self) -> Line {
        Line {
            p: self.a.clone(),
            q: self.b.clone(),
        }
    }

    pub fn reversed(&self) -> Segment {
        Segment {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// Closed containment.
    pub fn contains(&self, x: &Point) -> bool {
        collinear(&self.a, &self.b, x) && {
            let t = x.sub(&self.a).dot(&self.b.sub(&self.a));
            !t.is_negative() && t <= self.length_sq()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub p: Point,
    pub q: Point,
}

impl Line {
    pub fn new(p: Point, q: Point) -> Result<Line> {
        if p == q {
            return Err(Error::DegenerateInput("line through one point".into()));
        }
        Ok(Line { p, q })
    }

    pub fn direction(&self) -> Vector {
        self.q.sub(&self.p)
    }

    pub fn incident(&self, x: &Point) -> bool {
        collinear(&self.p, &self.q, x)
    }

    /// Equality as point sets.
    pub fn same_as(&self, o: &Line) -> bool {
        self.incident(&o.p) && self.incident(&o.q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    pub origin: Point,
    pub through: Point,
}

impl Ray {
    pub fn new(origin: Point, through: Point) -> Result<Ray> {
        if origin == through {
            return Err(Error::DegenerateInput("ray without direction".into()));
        }
        Ok(Ray { origin, through })
    }

    pub fn line(&self) -> Line {
        Line {
            p: self.origin.clone(),
            q: self.through.clone(),
        }
    }

    pub fn direction(&self) -> Vector {
        self.through.sub(&self.origin)
    }

    pub fn contains(&self, x: &Point) -> bool {
        collinear(&self.origin, &self.through, x)
            && !x.sub(&self.origin).dot(&self.direction()).is_negative()
    }

    /// The ray from the same origin pointing the other way.
    pub fn opposite(&self) -> Ray {
        let d = self.direction();
        Ray {
            origin: self.origin.clone(),
            through: Point::new(&self.origin.x - &d.x, &self.origin.y - &d.y),
        }
    }
}

/// A circle; the radius is kept squared so that no root is taken until asked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    pub center: Point,
    pub radius_sq: Num,
}

impl Circle {
    pub fn with_radius_sq(center: Point, radius_sq: Num) -> Result<Circle> {
        if !radius_sq.is_positive() {
            return Err(Error::DegenerateInput("circle of zero radius".into()));
        }
        Ok(Circle { center, radius_sq })
    }

    pub fn radius(&self) -> Num {
        self.radius_sq.sqrt_nonneg().expect("positive radius")
    }

    pub fn on_circle(&self, x: &Point) -> bool {
        self.center.dist_sq(x) == self.radius_sq
    }
}

/// Undirected rectilineal angle at `vertex` between the arms towards `arm1`
/// and `arm2`; always strictly between zero and two right angles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Angle {
    pub vertex: Point,
    pub arm1: Point,
    pub arm2: Point,
}

impl Angle {
    pub fn new(arm1: Point, vertex: Point, arm2: Point) -> Result<Angle> {
        if arm1 == vertex || arm2 == vertex {
            return Err(Error::DegenerateInput("angle arm of zero length".into()));
        }
        if collinear(&arm1, &vertex, &arm2) {
            return Err(Error::DegenerateInput(
                "angle arms lie in a straight line".into(),
            ));
        }
        Ok(Angle {
            vertex,
            arm1,
            arm2,
        })
    }

    fn u(&self) -> Vector {
        self.arm1.sub(&self.vertex)
    }

    fn v(&self) -> Vector {
        self.arm2.sub(&self.vertex)
    }

    /// Exact cosine and sine of the angle.
    pub fn measure(&self) -> AngleMeasure {
        let (u, v) = (self.u(), self.v());
        let norm = (u.norm_sq() * v.norm_sq())
            .sqrt_nonneg()
            .expect("positive norms");
        AngleMeasure {
            cos: u.dot(&v).div(&norm).expect("nonzero norm"),
            sin: u.cross(&v).abs().div(&norm).expect("nonzero norm"),
        }
    }

    pub fn swapped(&self) -> Angle {
        Angle {
            vertex: self.vertex.clone(),
            arm1: self.arm2.clone(),
            arm2: self.arm1.clone(),
        }
    }
}

/// An angle magnitude as an exact unit vector `(cos, sin)`. Sums may reach
/// beyond two right angles, so `sin` may be negative after addition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngleMeasure {
    pub cos: Num,
    pub sin: Num,
}

impl AngleMeasure {
    pub fn right() -> AngleMeasure {
        AngleMeasure {
            cos: Num::zero(),
            sin: Num::one(),
        }
    }

    pub fn two_right() -> AngleMeasure {
        AngleMeasure {
            cos: Num::from_int(-1),
            sin: Num::zero(),
        }
    }

    pub fn add(&self, o: &AngleMeasure) -> AngleMeasure {
        AngleMeasure {
            cos: &self.cos * &o.cos - &self.sin * &o.sin,
            sin: &self.sin * &o.cos + &self.cos * &o.sin,
        }
    }
}

/// Closed polygon given by its vertices in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Figure {
    pub vertices: Vec<Point>,
}

impl Figure {
    pub fn new(vertices: Vec<Point>) -> Result<Figure> {
        if vertices.len() < 3 {
            return Err(Error::DegenerateInput(
                "a figure needs at least three vertices".into(),
            ));
        }
        let n = vertices.len();
        if (0..n).any(|i| vertices[i] == vertices[(i + 1) % n]) {
            return Err(Error::DegenerateInput(
                "consecutive vertices coincide".into(),
            ));
        }
        Ok(Figure { vertices })
    }

    pub fn triangle(a: Point, b: Point, c: Point) -> Result<Figure> {
        if collinear(&a, &b, &c) {
            return Err(Error::DegenerateInput("triangle vertices are collinear".into()));
        }
        Figure::new(vec![a, b, c])
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i % self.vertices.len()]
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn reversed(&self) -> Figure {
        let mut v = self.vertices.clone();
        v.reverse();
        Figure { vertices: v }
    }

    /// Content of the figure: the absolute signed area.
    pub fn content(&self) -> Num {
        signed_area(self).abs()
    }

    /// No two edges meet except adjacent edges at their shared vertex.
    pub fn is_simple(&self) -> bool {
        let n = self.vertices.len();
        if signed_area(self).is_zero() {
            return false;
        }
        for i in 0..n {
            let (a, b) = (self.vertex(i), self.vertex(i + 1));
            for j in i + 1..n {
                let (c, d) = (self.vertex(j), self.vertex(j + 1));
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    // shared vertex only: the far endpoints must not fold back
                    let (shared, p, q) = if j == i + 1 { (b, a, d) } else { (a, b, c) };
                    if collinear(p, shared, q)
                        && !p.sub(shared).dot(&q.sub(shared)).is_negative()
                    {
                        return false;
                    }
                } else if segments_meet(a, b, c, d) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len();
        let mut seen: Option<Sign> = None;
        for i in 0..n {
            let s = orient(self.vertex(i), self.vertex(i + 1), self.vertex(i + 2));
            if s == Sign::Zero {
                return false;
            }
            match seen {
                None => seen = Some(s),
                Some(t) if t != s => return false,
                _ => {}
            }
        }
        self.is_simple()
    }
}

/// Any of the geometric objects a construction can name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Point(Point),
    Segment(Segment),
    Line(Line),
    Ray(Ray),
    Circle(Circle),
    Angle(Angle),
    Figure(Figure),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Point(_) => "point",
            Object::Segment(_) => "segment",
            Object::Line(_) => "line",
            Object::Ray(_) => "ray",
            Object::Circle(_) => "circle",
            Object::Angle(_) => "angle",
            Object::Figure(_) => "figure",
        }
    }

    /// Every point the object is drawn through.
    pub fn points(&self) -> Vec<&Point> {
        match self {
            Object::Point(p) => vec![p],
            Object::Segment(s) => vec![&s.a, &s.b],
            Object::Line(l) => vec![&l.p, &l.q],
            Object::Ray(r) => vec![&r.origin, &r.through],
            Object::Circle(c) => vec![&c.center],
            Object::Angle(a) => vec![&a.arm1, &a.vertex, &a.arm2],
            Object::Figure(f) => f.vertices.iter().collect(),
        }
    }

    pub fn radical_depth(&self) -> u32 {
        let d = self.points().iter().map(|p| p.radical_depth()).max().unwrap_or(0);
        match self {
            Object::Circle(c) => d.max(c.radius_sq.radical_depth()),
            _ => d,
        }
    }
}

/// Closed segments `ab` and `cd` share a point.
pub fn segments_meet(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 != o2 && o3 != o4 && o1 != Sign::Zero && o2 != Sign::Zero && o3 != Sign::Zero
        && o4 != Sign::Zero
    {
        return true;
    }
    let on = |p: &Point, q: &Point, x: &Point| Segment {
        a: p.clone(),
        b: q.clone(),
    }
    .contains(x);
    if o1 == Sign::Zero && on(a, b, c)
        || o2 == Sign::Zero && on(a, b, d)
        || o3 == Sign::Zero && on(c, d, a)
        || o4 == Sign::Zero && on(c, d, b)
    {
        return true;
    }
    o1 != o2 && o3 != o4 && o1 != Sign::Zero && o2 != Sign::Zero
}

/// Postulate 1: the line through two distinct points.
pub fn join(p: &Point, q: &Point) -> Result<Line> {
    Line::new(p.clone(), q.clone())
}

pub fn join_segment(p: &Point, q: &Point) -> Result<Segment> {
    Segment::new(p.clone(), q.clone())
}

/// Which endpoint a segment is produced beyond.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    A,
    B,
}

/// Postulate 2: produce a segment beyond one endpoint. The ray starts at
/// the other endpoint and covers the segment.
pub fn extend(s: &Segment, beyond: End) -> Ray {
    match beyond {
        End::B => Ray {
            origin: s.a.clone(),
            through: s.b.clone(),
        },
        End::A => Ray {
            origin: s.b.clone(),
            through: s.a.clone(),
        },
    }
}

/// Postulate 3: the circle with the given centre through the given point.
pub fn circle(center: &Point, distance_to: &Point) -> Result<Circle> {
    if center == distance_to {
        return Err(Error::DegenerateInput("circle of zero radius".into()));
    }
    Circle::with_radius_sq(center.clone(), center.dist_sq(distance_to))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineMeet {
    Point(Point),
    NoIntersection,
    Coincident,
}

pub fn intersect_lines(l1: &Line, l2: &Line) -> LineMeet {
    let d1 = l1.direction();
    let d2 = l2.direction();
    let den = d1.cross(&d2);
    if den.is_zero() {
        return if l1.incident(&l2.p) {
            LineMeet::Coincident
        } else {
            LineMeet::NoIntersection
        };
    }
    let t = l2.p.sub(&l1.p).cross(&d2).div(&den).expect("nonzero");
    LineMeet::Point(l1.p.offset(&d1.scaled(&t)))
}

fn roots_along(base: &Point, dir: &Vector, a: &Num, b: &Num, c: &Num) -> Vec<Point> {
    // a·t² + b·t + c = 0
    let disc = b.square() - (a * c).scale(4, 1);
    let two_a = a.scale(2, 1);
    let mut out = match disc.sign() {
        Sign::Negative => vec![],
        Sign::Zero => {
            let t = (-b).div(&two_a).expect("nonzero");
            vec![base.offset(&dir.scaled(&t))]
        }
        Sign::Positive => {
            let s = disc.sqrt_nonneg().expect("positive");
            let k = two_a.recip().expect("nonzero");
            [(-b) - &s, (-b) + &s]
                .iter()
                .map(|n| base.offset(&dir.scaled(&(n * &k))))
                .collect()
        }
    };
    out.sort();
    out
}

pub fn intersect_line_circle(l: &Line, c: &Circle) -> Vec<Point> {
    let d = l.direction();
    let f = l.p.sub(&c.center);
    let a = d.norm_sq();
    let b = f.dot(&d).scale(2, 1);
    let cc = f.norm_sq() - &c.radius_sq;
    roots_along(&l.p, &d, &a, &b, &cc)
}

pub fn intersect_circles(c1: &Circle, c2: &Circle) -> Result<Vec<Point>> {
    let d = c2.center.sub(&c1.center);
    let dd = d.norm_sq();
    if dd.is_zero() {
        return if c1.radius_sq == c2.radius_sq {
            Err(Error::Coincident)
        } else {
            Ok(vec![])
        };
    }
    let t = (&dd + &c1.radius_sq - &c2.radius_sq)
        .div(&dd.scale(2, 1))
        .expect("nonzero");
    let foot = c1.center.offset(&d.scaled(&t));
    let h_sq = c1.radius_sq.div(&dd).expect("nonzero") - t.square();
    let mut out = match h_sq.sign() {
        Sign::Negative => vec![],
        Sign::Zero => vec![foot],
        Sign::Positive => {
            let h = h_sq.sqrt_nonneg().expect("positive");
            let off = d.perp().scaled(&h);
            vec![
                foot.offset(&off),
                foot.offset(&off.scaled(&Num::from_int(-1))),
            ]
        }
    };
    out.sort();
    Ok(out)
}

/// Equal lengths, compared through squared lengths.
pub fn segment_eq(s1: &Segment, s2: &Segment) -> bool {
    s1.length_sq() == s2.length_sq()
}

/// Equal angles: equal cosines, decided without taking roots.
pub fn angle_eq(a1: &Angle, a2: &Angle) -> bool {
    let (u1, v1) = (a1.u(), a1.v());
    let (u2, v2) = (a2.u(), a2.v());
    let d1 = u1.dot(&v1);
    let d2 = u2.dot(&v2);
    if d1.sign() != d2.sign() {
        return false;
    }
    // d1²·|u2|²|v2|² = d2²·|u1|²|v1|²
    d1.square() * u2.norm_sq() * v2.norm_sq() == d2.square() * u1.norm_sq() * v1.norm_sq()
}

/// Compares two angles by magnitude.
pub fn angle_cmp(a1: &Angle, a2: &Angle) -> Ordering {
    // larger angle ⇔ smaller cosine
    a2.measure().cos.cmp(&a1.measure().cos)
}

pub fn is_right(a: &Angle) -> bool {
    a.u().dot(&a.v()).is_zero()
}

/// Parallel or coincident: direction cross product vanishes.
pub fn parallel(l1: &Line, l2: &Line) -> bool {
    l1.direction().cross(&l2.direction()).is_zero()
}

/// Shoelace sum; positive for counterclockwise vertex order.
pub fn signed_area(f: &Figure) -> Num {
    let mut acc = Num::zero();
    for (p, q) in f.edges() {
        acc = acc + (&p.x * &q.y - &q.x * &p.y);
    }
    acc.scale(1, 2)
}

/// A rigid motion `x ↦ R·x + t`, where `R` is a rotation by `(c, s)`,
/// preceded by the reflection `(x, y) ↦ (x, -y)` when `reflect` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry {
    pub c: Num,
    pub s: Num,
    pub tx: Num,
    pub ty: Num,
    pub reflect: bool,
}

impl Isometry {
    pub fn identity() -> Isometry {
        Isometry {
            c: Num::one(),
            s: Num::zero(),
            tx: Num::zero(),
            ty: Num::zero(),
            reflect: false,
        }
    }

    pub fn rotation(c: Num, s: Num) -> Result<Isometry> {
        if (c.square() + s.square()) != Num::one() {
            return Err(Error::DegenerateInput("c² + s² must equal 1".into()));
        }
        Ok(Isometry {
            c,
            s,
            ..Isometry::identity()
        })
    }

    fn linear(&self, x: &Num, y: &Num) -> (Num, Num) {
        if self.reflect {
            (&self.c * x + &self.s * y, &self.s * x - &self.c * y)
        } else {
            (&self.c * x - &self.s * y, &self.s * x + &self.c * y)
        }
    }

    pub fn apply(&self, p: &Point) -> Point {
        let (x, y) = self.linear(&p.x, &p.y);
        Point::new(x + &self.tx, y + &self.ty)
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Isometry) -> Isometry {
        // compose the linear parts through their action on the basis
        let (e1x, e1y) = next.linear(&self.linear(&Num::one(), &Num::zero()).0, &self.linear(&Num::one(), &Num::zero()).1);
        let reflect = self.reflect != next.reflect;
        let t = next.apply(&Point::new(self.tx.clone(), self.ty.clone()));
        Isometry {
            c: e1x,
            s: e1y,
            tx: t.x,
            ty: t.y,
            reflect,
        }
    }
}

pub fn apply_isometry(m: &Isometry, p: &Point) -> Point {
    m.apply(p)
}

/// The rigid motion carrying `from` onto `to` endpoint by endpoint.
///
/// `side` names where the left half-plane of `from` lands relative to `to`:
/// `Left` gives a direct motion, `Right` a mirrored one.
pub fn superpose(from: &Segment, to: &Segment, side: Side) -> Result<Isometry> {
    if !segment_eq(from, to) {
        return Err(Error::SuperpositionMismatch);
    }
    let u = from.b.sub(&from.a);
    let v = to.b.sub(&to.a);
    let n = u.norm_sq();
    let (c, s, reflect) = match side {
        Side::Left => (
            u.dot(&v).div(&n)?,
            u.cross(&v).div(&n)?,
            false,
        ),
        Side::Right => (
            (&u.x * &v.x - &u.y * &v.y).div(&n)?,
            (&u.y * &v.x + &u.x * &v.y).div(&n)?,
            true,
        ),
    };
    let mut m = Isometry {
        c,
        s,
        tx: Num::zero(),
        ty: Num::zero(),
        reflect,
    };
    let image = m.apply(&from.a);
    m.tx = &to.a.x - &image.x;
    m.ty = &to.a.y - &image.y;
    Ok(m)
}

/// Point reflection: `through` becomes the midpoint of `p` and the result.
pub fn point_reflect(p: &Point, through: &Point) -> Point {
    Point::new(
        through.x.scale(2, 1) - &p.x,
        through.y.scale(2, 1) - &p.y,
    )
}

/// Triangulates a simple polygon into `n - 2` triangles of vertex indices.
///
/// Convex input is fanned from the first vertex; anything else is ear-clipped
/// with exact orientation tests. Triangles keep the figure's orientation.
pub fn triangulate(f: &Figure) -> Result<Vec<[usize; 3]>> {
    if !f.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = f.len();
    if f.is_convex() {
        return Ok((1..n - 1).map(|i| [0, i, i + 1]).collect());
    }
    let ccw = signed_area(f).is_positive();
    let turn = if ccw { Sign::Positive } else { Sign::Negative };
    let mut idx: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n - 2);
    while idx.len() > 3 {
        let m = idx.len();
        let ear = (0..m).find(|&k| {
            let (i0, i1, i2) = (idx[(k + m - 1) % m], idx[k], idx[(k + 1) % m]);
            let (a, b, c) = (f.vertex(i0), f.vertex(i1), f.vertex(i2));
            if orient(a, b, c) != turn {
                return false;
            }
            idx.iter()
                .filter(|&&j| j != i0 && j != i1 && j != i2)
                .all(|&j| !in_closed_triangle(a, b, c, f.vertex(j), turn))
        });
        let Some(k) = ear else {
            return Err(Error::NotSimple);
        };
        out.push([idx[(k + m - 1) % m], idx[k], idx[(k + 1) % m]]);
        idx.remove(k);
    }
    if orient(f.vertex(idx[0]), f.vertex(idx[1]), f.vertex(idx[2])) != turn {
        return Err(Error::NotSimple);
    }
    out.push([idx[0], idx[1], idx[2]]);
    Ok(out)
}

fn in_closed_triangle(a: &Point, b: &Point, c: &Point, x: &Point, turn: Sign) -> bool {
    let away = match turn {
        Sign::Positive => Sign::Negative,
        _ => Sign::Positive,
    };
    orient(a, b, x) != away && orient(b, c, x) != away && orient(c, a, x) != away
}

/// Whether `x` is strictly on the given side of the directed line `p → q`.
pub fn on_side(p: &Point, q: &Point, x: &Point, side: Side) -> bool {
    orient(p, q, x) == side.sign()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn q(n: i64, d: i64) -> Num {
        Num::ratio(n, d)
    }

    fn sqrt(n: i64) -> Num {
        Num::from_int(n).sqrt_nonneg().unwrap()
    }

    #[test]
    fn join_and_incidence() {
        let x_axis = join(&pt(0, 0), &pt(1, 0)).unwrap();
        assert!(x_axis.incident(&pt(5, 0)));
        assert!(matches!(join(&pt(0, 0), &pt(0, 0)), Err(Error::DegenerateInput(_))));
        // (3,5) is on the line through (1,1),(2,3): det [[1,2],[2,4]] = 0
        assert!(join(&pt(1, 1), &pt(2, 3)).unwrap().incident(&pt(3, 5)));
    }

    #[test]
    fn extend_covers_beyond_endpoint() {
        let s = join_segment(&pt(0, 0), &pt(1, 0)).unwrap();
        assert!(extend(&s, End::B).contains(&pt(2, 0)));
        assert!(extend(&s, End::A).contains(&pt(-1, 0)));
        assert!(!extend(&s, End::B).contains(&pt(-1, 0)));
        let d = join_segment(&pt(0, 0), &pt(1, 1)).unwrap();
        assert!(extend(&d, End::B).contains(&pt(3, 3)));
    }

    #[test]
    fn circle_radius() {
        assert_eq!(circle(&pt(0, 0), &pt(1, 0)).unwrap().radius(), Num::one());
        assert_eq!(circle(&pt(0, 0), &pt(1, 1)).unwrap().radius().square(), Num::from_int(2));
        assert!(matches!(circle(&pt(0, 0), &pt(0, 0)), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn line_intersections() {
        let x = join(&pt(0, 0), &pt(1, 0)).unwrap();
        let y = join(&pt(0, 0), &pt(0, 1)).unwrap();
        assert_eq!(intersect_lines(&x, &y), LineMeet::Point(pt(0, 0)));
        let y1 = join(&pt(0, 1), &pt(1, 1)).unwrap();
        assert_eq!(intersect_lines(&x, &y1), LineMeet::NoIntersection);
        assert_eq!(intersect_lines(&x, &x), LineMeet::Coincident);
        // y = x and x + y/2 = 1 → (2/3, 2/3)
        let l1 = join(&pt(0, 0), &pt(1, 1)).unwrap();
        let l2 = join(&pt(0, 2), &pt(1, 0)).unwrap();
        assert_eq!(
            intersect_lines(&l1, &l2),
            LineMeet::Point(Point::new(q(2, 3), q(2, 3)))
        );
    }

    #[test]
    fn line_circle_cases() {
        let unit = circle(&pt(0, 0), &pt(1, 0)).unwrap();
        let x = join(&pt(0, 0), &pt(1, 0)).unwrap();
        assert_eq!(intersect_line_circle(&x, &unit), vec![pt(-1, 0), pt(1, 0)]);
        let tangent = join(&pt(0, 1), &pt(1, 1)).unwrap();
        assert_eq!(intersect_line_circle(&tangent, &unit), vec![pt(0, 1)]);
        let miss = join(&pt(0, 2), &pt(1, 2)).unwrap();
        assert!(intersect_line_circle(&miss, &unit).is_empty());
    }

    #[test]
    fn circle_circle_cases() {
        let c0 = circle(&pt(0, 0), &pt(1, 0)).unwrap();
        let c1 = circle(&pt(1, 0), &pt(2, 0)).unwrap();
        let h = sqrt(3).scale(1, 2);
        assert_eq!(
            intersect_circles(&c0, &c1).unwrap(),
            vec![Point::new(q(1, 2), -&h), Point::new(q(1, 2), h)]
        );
        let c2 = circle(&pt(2, 0), &pt(3, 0)).unwrap();
        assert_eq!(intersect_circles(&c0, &c2).unwrap(), vec![pt(1, 0)]);
        let c3 = circle(&pt(3, 0), &pt(4, 0)).unwrap();
        assert!(intersect_circles(&c0, &c3).unwrap().is_empty());
        assert_eq!(intersect_circles(&c0, &c0), Err(Error::Coincident));
    }

    #[test]
    fn equalities() {
        let s = |a: Point, b: Point| Segment::new(a, b).unwrap();
        assert!(segment_eq(&s(pt(0, 0), pt(1, 0)), &s(pt(5, 5), pt(5, 6))));
        assert!(segment_eq(
            &s(pt(0, 0), pt(1, 1)),
            &s(pt(0, 0), Point::new(sqrt(2), Num::zero()))
        ));
        assert!(!segment_eq(&s(pt(0, 0), pt(1, 0)), &s(pt(0, 0), pt(2, 0))));

        let right1 = Angle::new(pt(1, 0), pt(0, 0), pt(0, 1)).unwrap();
        let right2 = Angle::new(pt(1, 1), pt(0, 0), pt(-1, 1)).unwrap();
        let half = Angle::new(pt(1, 0), pt(0, 0), pt(1, 1)).unwrap();
        assert!(angle_eq(&right1, &right2));
        assert!(!angle_eq(&right1, &half));
        assert!(is_right(&right1) && !is_right(&half));
        assert!(matches!(
            Angle::new(pt(1, 0), pt(0, 0), pt(-1, 0)),
            Err(Error::DegenerateInput(_))
        ));

        let apex = Point::new(q(1, 2), sqrt(3).scale(1, 2));
        let a = Angle::new(pt(1, 0), pt(0, 0), apex.clone()).unwrap();
        let b = Angle::new(pt(0, 0), pt(1, 0), apex).unwrap();
        assert!(angle_eq(&a, &b));
        assert_eq!(a.measure().cos, q(1, 2));
    }

    #[test]
    fn parallels() {
        let l = |a, b, c, d| join(&pt(a, b), &pt(c, d)).unwrap();
        assert!(parallel(&l(0, 0, 1, 0), &l(0, 1, 1, 1)));
        assert!(!parallel(&l(0, 0, 1, 0), &l(0, 0, 0, 1)));
        assert!(parallel(&l(0, 0, 1, 1), &l(0, 1, 1, 2)));
    }

    #[test]
    fn areas() {
        let t = Figure::new(vec![pt(0, 0), pt(4, 0), pt(0, 3)]).unwrap();
        assert_eq!(signed_area(&t), Num::from_int(6));
        let t2 = Figure::new(vec![pt(0, 0), pt(5, 0), pt(0, 2)]).unwrap();
        assert_eq!(signed_area(&t2), Num::from_int(5));
        let cw = Figure::new(vec![pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)]).unwrap();
        assert_eq!(signed_area(&cw), Num::from_int(-1));
    }

    #[test]
    fn superposition() {
        let s = |a: Point, b: Point| Segment::new(a, b).unwrap();
        let m = superpose(&s(pt(0, 0), pt(1, 0)), &s(pt(0, 0), pt(0, 1)), Side::Left).unwrap();
        assert_eq!((m.c.clone(), m.s.clone()), (Num::zero(), Num::one()));
        let id = superpose(&s(pt(0, 0), pt(1, 0)), &s(pt(0, 0), pt(1, 0)), Side::Left).unwrap();
        assert_eq!(id, Isometry::identity());
        let from = s(pt(0, 0), pt(2, 0));
        let to = s(pt(1, 1), pt(1, 3));
        for side in [Side::Left, Side::Right] {
            let m = superpose(&from, &to, side).unwrap();
            assert_eq!(m.apply(&from.a), to.a);
            assert_eq!(m.apply(&from.b), to.b);
            let probe = pt(1, 1);
            let img = m.apply(&probe);
            assert_eq!(img.dist_sq(&to.a), probe.dist_sq(&from.a));
            assert_eq!(img.dist_sq(&to.b), probe.dist_sq(&from.b));
            assert!(on_side(&to.a, &to.b, &img, side));
        }
        assert_eq!(
            superpose(&from, &s(pt(0, 0), pt(1, 0)), Side::Left),
            Err(Error::SuperpositionMismatch)
        );
    }

    #[test]
    fn isometry_composition() {
        let quarter = Isometry::rotation(Num::zero(), Num::one()).unwrap();
        assert_eq!(quarter.apply(&pt(1, 0)), pt(0, 1));
        assert_eq!(Isometry::identity().apply(&pt(3, 4)), pt(3, 4));
        let half = quarter.then(&quarter);
        assert_eq!(half.apply(&pt(2, 3)), pt(-2, -3));
    }

    #[test]
    fn reflection_through_point() {
        assert_eq!(point_reflect(&pt(0, 1), &pt(0, 0)), pt(0, -1));
        assert_eq!(point_reflect(&pt(4, 4), &pt(4, 4)), pt(4, 4));
        assert_eq!(point_reflect(&pt(2, 3), &pt(1, 1)), pt(0, -1));
    }

    #[test]
    fn simple_and_triangulated() {
        let bow = Figure::new(vec![pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)]).unwrap();
        assert!(!bow.is_simple());
        assert_eq!(triangulate(&bow), Err(Error::NotSimple));
        let l_shape = Figure::new(vec![
            pt(0, 0),
            pt(2, 0),
            pt(2, 1),
            pt(1, 1),
            pt(1, 2),
            pt(0, 2),
        ])
        .unwrap();
        assert!(l_shape.is_simple() && !l_shape.is_convex());
        let tris = triangulate(&l_shape).unwrap();
        assert_eq!(tris.len(), 4);
        let total = tris.iter().fold(Num::zero(), |acc, t| {
            let f = Figure::new(t.iter().map(|&i| l_shape.vertex(i).clone()).collect()).unwrap();
            acc + signed_area(&f)
        });
        assert_eq!(total, signed_area(&l_shape));
    }
}
