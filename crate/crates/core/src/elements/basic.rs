//! I.1–I.3, I.9–I.12 and I.31.

use super::checks;
use super::trace::{Ctx, Dir, Pick, Pt};
use super::triangles::{sub_i23, P23Strategy};
use super::{Claim, PropositionResult, Role};
use crate::error::{Error, Result};
use crate::geom::{
    point_reflect, side_of, Angle, Figure, Line, Object, Point, Ray, Segment, Side,
};

pub(crate) fn i1(cx: &mut Ctx, a: &Pt, b: &Pt, side: Side) -> Result<Pt> {
    let ca = cx.circle(a, b)?;
    let cb = cx.circle(b, a)?;
    let c = cx.meet(
        "C",
        &ca,
        &cb,
        Pick::Side {
            from: a.clone(),
            to: b.clone(),
            side,
        },
    )?;
    cx.join(&c, a)?;
    cx.join(&c, b)?;
    Ok(c)
}

pub(crate) fn sub_i1(cx: &mut Ctx, a: &Pt, b: &Pt, side: Side, hint: &str) -> Result<Pt> {
    let mut out = cx.call("I.1", &[a, b], &[hint], |c, xs| {
        let a = c.given("A", xs[0].clone());
        let b = c.given("B", xs[1].clone());
        Ok(vec![i1(c, &a, &b, side)?])
    })?;
    Ok(out.remove(0))
}

/// Places at `a` a line equal to `bc`; returns its far end `L`.
pub(crate) fn i2(cx: &mut Ctx, a: &Pt, b: &Pt, c: &Pt) -> Result<Pt> {
    if a.at == b.at {
        // the given line already starts at `a`
        return Ok(c.clone());
    }
    cx.join(a, b)?;
    let d = sub_i1(cx, a, b, Side::Left, "D")?;
    let ae = cx.extend(&d, a)?;
    let bf = cx.extend(&d, b)?;
    let cgh = cx.circle(b, c)?;
    let g = cx.meet(
        "G",
        &cgh,
        &bf,
        Pick::Beyond {
            from: d.clone(),
            past: b.clone(),
        },
    )?;
    let gkl = cx.circle(&d, &g)?;
    let l = cx.meet(
        "L",
        &gkl,
        &ae,
        Pick::Beyond {
            from: d.clone(),
            past: a.clone(),
        },
    )?;
    cx.join(a, &l)?;
    Ok(l)
}

pub(crate) fn sub_i2(cx: &mut Ctx, a: &Pt, b: &Pt, c: &Pt, hint: &str) -> Result<Pt> {
    let mut out = cx.call("I.2", &[a, b, c], &[hint], |cx, xs| {
        let a = cx.given("A", xs[0].clone());
        let b = cx.given("B", xs[1].clone());
        let c = cx.given("C", xs[2].clone());
        Ok(vec![i2(cx, &a, &b, &c)?])
    })?;
    Ok(out.remove(0))
}

/// Cuts off from the ray at `o` a length equal to `pq`.
pub(crate) fn cut(cx: &mut Ctx, o: &Pt, dir: Dir<'_>, p: &Pt, q: &Pt) -> Result<Pt> {
    let l = sub_i2(cx, o, p, q, "L")?;
    let circ = cx.circle(o, &l)?;
    let x = dir.point();
    let line = cx.line(x, o)?;
    let pick = match dir {
        Dir::Toward(t) => Pick::Along {
            from: o.clone(),
            toward: t.clone(),
        },
        Dir::AwayFrom(f) => Pick::Beyond {
            from: f.clone(),
            past: o.clone(),
        },
    };
    cx.meet("E", &line, &circ, pick)
}

pub(crate) fn sub_cut(
    cx: &mut Ctx,
    o: &Pt,
    dir: Dir<'_>,
    p: &Pt,
    q: &Pt,
    hint: &str,
) -> Result<Pt> {
    let toward = matches!(dir, Dir::Toward(_));
    let mut out = cx.call("I.3", &[o, dir.point(), p, q], &[hint], |cx, xs| {
        let o = cx.given("A", xs[0].clone());
        let x = cx.given("B", xs[1].clone());
        let p = cx.given("C", xs[2].clone());
        let q = cx.given("D", xs[3].clone());
        let d = if toward { Dir::Toward(&x) } else { Dir::AwayFrom(&x) };
        Ok(vec![cut(cx, &o, d, &p, &q)?])
    })?;
    Ok(out.remove(0))
}

/// Bisects the angle `b a c`; returns a point on the bisector.
pub(crate) fn i9(cx: &mut Ctx, b: &Pt, a: &Pt, c: &Pt) -> Result<Pt> {
    let d = b;
    let e = sub_cut(cx, a, Dir::Toward(c), a, d, "E")?;
    cx.join(d, &e)?;
    let away = side_of(&d.at, &e.at, &a.at)
        .ok_or_else(|| Error::DegenerateInput("angle arms lie in a straight line".into()))?
        .opposite();
    let f = sub_i1(cx, d, &e, away, "F")?;
    cx.join(a, &f)?;
    Ok(f)
}

pub(crate) fn sub_i9(cx: &mut Ctx, b: &Pt, a: &Pt, c: &Pt, hint: &str) -> Result<Pt> {
    let mut out = cx.call("I.9", &[b, a, c], &[hint], |cx, xs| {
        let b = cx.given("B", xs[0].clone());
        let a = cx.given("A", xs[1].clone());
        let c = cx.given("C", xs[2].clone());
        Ok(vec![i9(cx, &b, &a, &c)?])
    })?;
    Ok(out.remove(0))
}

pub(crate) fn i10(cx: &mut Ctx, a: &Pt, b: &Pt) -> Result<Pt> {
    let c = sub_i1(cx, a, b, Side::Left, "C")?;
    let f = sub_i9(cx, a, &c, b, "F")?;
    let cd = cx.line(&c, &f)?;
    let ab = cx.line(a, b)?;
    cx.meet("D", &cd, &ab, Pick::Only)
}

pub(crate) fn sub_i10(cx: &mut Ctx, a: &Pt, b: &Pt, hint: &str) -> Result<Pt> {
    let mut out = cx.call("I.10", &[a, b], &[hint], |cx, xs| {
        let a = cx.given("A", xs[0].clone());
        let b = cx.given("B", xs[1].clone());
        Ok(vec![i10(cx, &a, &b)?])
    })?;
    Ok(out.remove(0))
}

/// Perpendicular at `c` on the line `a b`, rising on `side` of `a → b`;
/// returns a second point `F` of it.
pub(crate) fn i11(cx: &mut Ctx, a: &Pt, b: &Pt, c: &Pt, side: Side) -> Result<Pt> {
    let d = if c.at != b.at { b } else { a };
    let circ = cx.circle(c, d)?;
    let line = cx.line(a, b)?;
    let e = cx.meet("E", &circ, &line, Pick::Not(d.clone()))?;
    let same_way = e.at.sub(&d.at).dot(&b.at.sub(&a.at)).is_positive();
    let s = if same_way { side } else { side.opposite() };
    let f = sub_i1(cx, d, &e, s, "F")?;
    cx.join(c, &f)?;
    Ok(f)
}

pub(crate) fn sub_i11(cx: &mut Ctx, a: &Pt, b: &Pt, c: &Pt, side: Side, hint: &str) -> Result<Pt> {
    let mut out = cx.call("I.11", &[a, b, c], &[hint], |cx, xs| {
        let a = cx.given("A", xs[0].clone());
        let b = cx.given("B", xs[1].clone());
        let c = cx.given("C", xs[2].clone());
        Ok(vec![i11(cx, &a, &b, &c, side)?])
    })?;
    Ok(out.remove(0))
}

/// Foot `H` of the perpendicular from `c` to the line `a b`.
pub(crate) fn i12(cx: &mut Ctx, a: &Pt, b: &Pt, c: &Pt) -> Result<(Pt, Pt, Pt)> {
    let d = cx.given("D", point_reflect(&c.at, &a.at));
    let efg = cx.circle(c, &d)?;
    let ab = cx.line(a, b)?;
    let e = cx.meet("E", &efg, &ab, Pick::First)?;
    let g = cx.meet("G", &efg, &ab, Pick::Second)?;
    let h = sub_i10(cx, &e, &g, "H")?;
    cx.join(c, &g)?;
    cx.join(c, &h)?;
    cx.join(c, &e)?;
    Ok((h, e, g))
}

/// Through `a`, the parallel to the line `b c`; returns a second point of it.
pub(crate) fn i31(cx: &mut Ctx, a: &Pt, b: &Pt, c: &Pt, strategy: P23Strategy) -> Result<Pt> {
    let (d, other) = if a.at.dist_sq(&b.at) <= a.at.dist_sq(&c.at) {
        (b, c)
    } else {
        (c, b)
    };
    cx.join(a, d)?;
    let away = side_of(&a.at, &d.at, &other.at)
        .ok_or_else(|| Error::DegenerateInput("point lies on the line".into()))?
        .opposite();
    let e = sub_i23(cx, a, d, (other, d, a), away, strategy, "E")?;
    cx.extend(&e, a)?;
    Ok(e)
}

pub(crate) fn sub_i31(cx: &mut Ctx, a: &Pt, b: &Pt, c: &Pt, hint: &str) -> Result<Pt> {
    let mut out = cx.call("I.31", &[a, b, c], &[hint], |cx, xs| {
        let a = cx.given("A", xs[0].clone());
        let b = cx.given("B", xs[1].clone());
        let c = cx.given("C", xs[2].clone());
        Ok(vec![i31(cx, &a, &b, &c, P23Strategy::Euclid)?])
    })?;
    Ok(out.remove(0))
}

fn tri(a: &Point, b: &Point, c: &Point) -> Result<Figure> {
    Figure::triangle(a.clone(), b.clone(), c.clone())
}

/// I.1: the equilateral triangle on `ab`, apex on `side` of `a → b`.
pub fn p1(ab: &Segment, side: Side) -> Result<PropositionResult> {
    let mut cx = Ctx::new("I.1");
    let a = cx.given("A", ab.a.clone());
    let b = cx.given("B", ab.b.clone());
    let c = i1(&mut cx, &a, &b, side)?;
    PropositionResult::new("I.1", cx.finish())
        .with("A", Object::Point(a.at.clone()), Role::Given)
        .with("B", Object::Point(b.at.clone()), Role::Given)
        .with("AB", Object::Segment(ab.clone()), Role::Given)
        .with("C", Object::Point(c.at.clone()), Role::Result)
        .with("ABC", Object::Figure(tri(&a.at, &b.at, &c.at)?), Role::Result)
        .claim(checks::len_eq("CA = AB", (&c.at, &a.at), (&a.at, &b.at)))
        .claim(checks::len_eq("CB = AB", (&c.at, &b.at), (&a.at, &b.at)))
        .claim(checks::on_side("C on the requested side", &a.at, &b.at, &c.at, side))
        .checked()
}

/// I.2: at `a`, a line `AL` equal to `bc`.
///
/// When `a` is already the start of `bc` the given line itself is returned.
pub fn p2(a: &Point, bc: &Segment) -> Result<PropositionResult> {
    let mut cx = Ctx::new("I.2");
    let pa = cx.given("A", a.clone());
    let pb = cx.given("B", bc.a.clone());
    let pc = cx.given("C", bc.b.clone());
    let l = i2(&mut cx, &pa, &pb, &pc)?;
    let trace = cx.finish();
    let supers = trace.superposition_count();
    PropositionResult::new("I.2", trace)
        .with("A", Object::Point(pa.at.clone()), Role::Given)
        .with("BC", Object::Segment(bc.clone()), Role::Given)
        .with("L", Object::Point(l.at.clone()), Role::Result)
        .with("AL", Object::Segment(Segment::new(pa.at.clone(), l.at.clone())?), Role::Result)
        .claim(checks::len_eq("AL = BC", (&pa.at, &l.at), (&bc.a, &bc.b)))
        .claim(Claim::fact("no superposition", supers == 0))
        .checked()
}

/// I.3: the point `E` on `greater` with `AE` equal to `less`.
pub fn p3(greater: &Segment, less: &Segment) -> Result<PropositionResult> {
    if greater.length_sq() <= less.length_sq() {
        return Err(Error::PreconditionViolated(
            "the first line is not greater than the second".into(),
        ));
    }
    let mut cx = Ctx::new("I.3");
    let a = cx.given("A", greater.a.clone());
    let b = cx.given("B", greater.b.clone());
    let c = cx.given("C", less.a.clone());
    let d = cx.given("D", less.b.clone());
    let e = cut(&mut cx, &a, Dir::Toward(&b), &c, &d)?;
    let mut r = PropositionResult::new("I.3", cx.finish())
        .with("AB", Object::Segment(greater.clone()), Role::Given)
        .with("CD", Object::Segment(less.clone()), Role::Given)
        .with("E", Object::Point(e.at.clone()), Role::Result)
        .claim(checks::len_eq("AE = CD", (&a.at, &e.at), (&c.at, &d.at)));
    for c in checks::on_segment("E on AB", &a.at, &b.at, &e.at) {
        r = r.claim(c);
    }
    r.checked()
}

/// I.3 on a ray: the point at distance `|length|` from the origin.
pub fn cut_on_ray(ray: &Ray, length: &Segment) -> Result<PropositionResult> {
    let mut cx = Ctx::new("I.3");
    let a = cx.given("A", ray.origin.clone());
    let b = cx.given("B", ray.through.clone());
    let c = cx.given("C", length.a.clone());
    let d = cx.given("D", length.b.clone());
    let e = cut(&mut cx, &a, Dir::Toward(&b), &c, &d)?;
    PropositionResult::new("I.3", cx.finish())
        .with("E", Object::Point(e.at.clone()), Role::Result)
        .claim(checks::len_eq("AE = CD", (&a.at, &e.at), (&c.at, &d.at)))
        .claim(Claim::fact("E on the ray", ray.contains(&e.at)))
        .checked()
}

/// I.9: the bisector of `angle`, as a ray from its vertex.
pub fn p9(angle: &Angle) -> Result<PropositionResult> {
    let mut cx = Ctx::new("I.9");
    let b = cx.given("B", angle.arm1.clone());
    let a = cx.given("A", angle.vertex.clone());
    let c = cx.given("C", angle.arm2.clone());
    let f = i9(&mut cx, &b, &a, &c)?;
    let half1 = Angle::new(b.at.clone(), a.at.clone(), f.at.clone())?;
    let half2 = Angle::new(f.at.clone(), a.at.clone(), c.at.clone())?;
    PropositionResult::new("I.9", cx.finish())
        .with("BAC", Object::Angle(angle.clone()), Role::Given)
        .with("F", Object::Point(f.at.clone()), Role::Result)
        .with("AF", Object::Ray(Ray::new(a.at.clone(), f.at.clone())?), Role::Result)
        .claim(checks::angle_eq("BAF = FAC", &half1, &half2))
        .checked()
}

/// I.10: the midpoint `D` of `s`.
pub fn p10(s: &Segment) -> Result<PropositionResult> {
    let mut cx = Ctx::new("I.10");
    let a = cx.given("A", s.a.clone());
    let b = cx.given("B", s.b.clone());
    let d = i10(&mut cx, &a, &b)?;
    let mut r = PropositionResult::new("I.10", cx.finish())
        .with("AB", Object::Segment(s.clone()), Role::Given)
        .with("D", Object::Point(d.at.clone()), Role::Result)
        .claim(checks::len_eq("AD = DB", (&a.at, &d.at), (&d.at, &b.at)));
    for c in checks::on_segment("D on AB", &a.at, &b.at, &d.at) {
        r = r.claim(c);
    }
    r.checked()
}

/// I.11: the perpendicular to `l` at `p`, rising on `side` of `l.p → l.q`.
pub fn p11(l: &Line, p: &Point, side: Side) -> Result<PropositionResult> {
    if !l.incident(p) {
        return Err(Error::PreconditionViolated("the point is not on the line".into()));
    }
    let mut cx = Ctx::new("I.11");
    let a = cx.given("A", l.p.clone());
    let b = cx.given("B", l.q.clone());
    let c = cx.given("C", p.clone());
    let f = i11(&mut cx, &a, &b, &c, side)?;
    PropositionResult::new("I.11", cx.finish())
        .with("AB", Object::Line(l.clone()), Role::Given)
        .with("C", Object::Point(c.at.clone()), Role::Given)
        .with("F", Object::Point(f.at.clone()), Role::Result)
        .with("CF", Object::Line(Line::new(c.at.clone(), f.at.clone())?), Role::Result)
        .claim(checks::perpendicular("CF at right angles to AB", (&c.at, &f.at), (&a.at, &b.at)))
        .claim(checks::on_side("F on the requested side", &a.at, &b.at, &f.at, side))
        .checked()
}

/// I.12: the perpendicular from `p` to `l`, with its foot `H`.
pub fn p12(l: &Line, p: &Point) -> Result<PropositionResult> {
    if l.incident(p) {
        return Err(Error::PreconditionViolated("the point is on the line".into()));
    }
    let mut cx = Ctx::new("I.12");
    let a = cx.given("A", l.p.clone());
    let b = cx.given("B", l.q.clone());
    let c = cx.given("C", p.clone());
    let (h, e, g) = i12(&mut cx, &a, &b, &c)?;
    PropositionResult::new("I.12", cx.finish())
        .with("AB", Object::Line(l.clone()), Role::Given)
        .with("C", Object::Point(c.at.clone()), Role::Given)
        .with("H", Object::Point(h.at.clone()), Role::Result)
        .with("CH", Object::Segment(Segment::new(c.at.clone(), h.at.clone())?), Role::Result)
        .claim(checks::collinear("H on AB", &a.at, &b.at, &h.at))
        .claim(checks::perpendicular("CH at right angles to AB", (&c.at, &h.at), (&a.at, &b.at)))
        .claim(checks::len_eq("GH = EH", (&g.at, &h.at), (&e.at, &h.at)))
        .claim(checks::len_eq("CG = CE", (&c.at, &g.at), (&c.at, &e.at)))
        .checked()
}

/// I.31: the parallel to `l` through `p`.
///
/// When `p` is on `l` the line itself is returned and the result is
/// flagged with a `coincident` claim.
pub fn p31(p: &Point, l: &Line) -> Result<PropositionResult> {
    p31_with(p, l, P23Strategy::Euclid)
}

pub fn p31_with(p: &Point, l: &Line, strategy: P23Strategy) -> Result<PropositionResult> {
    let mut cx = Ctx::new("I.31");
    let a = cx.given("A", p.clone());
    let b = cx.given("B", l.p.clone());
    let c = cx.given("C", l.q.clone());
    if l.incident(p) {
        return PropositionResult::new("I.31", cx.finish())
            .with("BC", Object::Line(l.clone()), Role::Given)
            .with("EF", Object::Line(l.clone()), Role::Result)
            .claim(Claim::fact("coincident: the point lies on the given line", true))
            .checked();
    }
    let e = i31(&mut cx, &a, &b, &c, strategy)?;
    PropositionResult::new("I.31", cx.finish())
        .with("A", Object::Point(a.at.clone()), Role::Given)
        .with("BC", Object::Line(l.clone()), Role::Given)
        .with("E", Object::Point(e.at.clone()), Role::Result)
        .with("EF", Object::Line(Line::new(e.at.clone(), a.at.clone())?), Role::Result)
        .claim(checks::parallel("EF parallel to BC", (&e.at, &a.at), (&b.at, &c.at)))
        .claim(Claim::fact(
            "EF never meets BC",
            matches!(
                crate::geom::intersect_lines(&Line::new(e.at.clone(), a.at.clone())?, l),
                crate::geom::LineMeet::NoIntersection
            ),
        ))
        .checked()
}
