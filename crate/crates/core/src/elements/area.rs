//! Application of areas: I.42 to I.46.

use std::fmt;
use std::str::FromStr;

use super::basic::{sub_cut, sub_i10, sub_i11, sub_i31};
use super::checks;
use super::trace::{Ctx, Dir, Pick, Pt};
use super::triangles::{sub_i22, sub_i23, P23Strategy};
use super::{Claim, PropositionResult, Role};
use crate::error::{Error, Result};
use crate::geom::{
    self, collinear, side_of, triangulate, Angle, AngleMeasure, Figure, Object, Point, Ray,
    Segment, Side, Vector,
};

macro_rules! strategy_enum {
    ($(#[$doc:meta])* $name:ident { $($(#[$vdoc:meta])* $v:ident => $s:literal / $short:literal),+ $(,)? }) => {
        $(#[$doc])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum $name {
            $($(#[$vdoc])* $v),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$v),+];

            pub fn name(self) -> &'static str {
                match self {
                    $($name::$v => $s),+
                }
            }

            /// The suffix used in proposition identifiers, empty for Euclid.
            pub fn suffix(self) -> &'static str {
                match self {
                    $($name::$v => $short),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        /// Accepts the full name or the identifier suffix.
        impl FromStr for $name {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                $name::ALL
                    .iter()
                    .copied()
                    .find(|p| p.name() == s || (!p.suffix().is_empty() && p.suffix() == s))
                    .ok_or_else(|| Error::UnknownStrategy(s.to_string()))
            }
        }
    };
}

strategy_enum! {
    /// How I.42 completes its parallelogram.
    P42Strategy {
        /// Both remaining sides by I.31.
        Euclid => "euclid" / "",
        /// The last side cut off equal to the half base.
        Alnayrizi => "alnayrizi" / "alnayrizi",
    }
}

strategy_enum! {
    /// How I.44 gets its parallelogram next to the given line.
    P44Strategy {
        /// I.42 anywhere, then moved into place.
        EuclidSuperposition => "euclid_superposition" / "",
        /// Half the base cut off the produced line, I.42 built on it.
        Alnayrizi => "alnayrizi" / "alnayrizi",
        /// The whole base laid off, the triangle rebuilt from its base angles.
        RobertOfChester => "robert_of_chester" / "chester",
        /// The triangle rebuilt behind the line, parallels throughout.
        Campanus => "campanus" / "campanus",
        /// The triangle laid on the produced line; only when its median
        /// already makes the given angle.
        TinemueEqualCase => "tinemue_equal_case" / "tinemue",
    }
}

strategy_enum! {
    /// Campanus's two proofs of I.46.
    P46Strategy {
        /// Perpendiculars at both ends.
        CampanusFirst => "campanus_first" / "",
        /// One perpendicular, then a parallel.
        CampanusSecond => "campanus_second" / "campanus2",
    }
}

fn prop_id(base: &str, suffix: &str) -> String {
    if suffix.is_empty() {
        base.to_string()
    } else {
        format!("{base}.{suffix}")
    }
}

fn degenerate(what: &str) -> Error {
    Error::DegenerateInput(what.to_string())
}

/// The direction along a line through `o` that agrees with `v`, named by
/// one of the line's known points.
fn dir_along<'a>(o: &Point, known: &[&'a Pt], v: &Vector) -> Result<Dir<'a>> {
    let x = known
        .iter()
        .find(|p| p.at != *o)
        .ok_or_else(|| degenerate("no second point on the line"))?;
    Ok(if x.at.sub(o).dot(v).is_positive() {
        Dir::Toward(x)
    } else {
        Dir::AwayFrom(x)
    })
}

fn figure(pts: &[&Pt]) -> Result<Figure> {
    Figure::new(pts.iter().map(|p| p.at.clone()).collect())
}

fn proper_triangle(t: &Figure) -> Result<()> {
    if t.len() != 3 || t.content().is_zero() {
        return Err(degenerate("expected a triangle with non-zero content"));
    }
    Ok(())
}

fn triangle_pts(cx: &mut Ctx, t: &Figure, names: [&str; 3]) -> [Pt; 3] {
    [0, 1, 2].map(|i| cx.given(names[i], t.vertex(i).clone()))
}

fn angle_pts(cx: &mut Ctx, d: &Angle, n: &str) -> [Pt; 3] {
    [
        cx.given(&format!("{n}1"), d.arm1.clone()),
        cx.given(n, d.vertex.clone()),
        cx.given(&format!("{n}2"), d.arm2.clone()),
    ]
}

fn point(p: &Pt) -> Object {
    Object::Point(p.at.clone())
}

/// I.42 on the triangle `a b c` (apex first) in the angle `d`. Returns
/// `(F, E, G)` of the parallelogram `F E C G`: `E` bisects `b c`, the
/// angle `F E C` equals `d` and `F` is on the side of `a`.
pub(crate) fn i42(
    cx: &mut Ctx,
    t: [&Pt; 3],
    d: [&Pt; 3],
    strategy: P42Strategy,
) -> Result<(Pt, Pt, Pt)> {
    let [a, b, c] = t;
    let model = (d[0], d[1], d[2]);
    let e = sub_i10(cx, b, c, "E")?;
    cx.join(a, &e)?;
    let s = side_of(&e.at, &c.at, &a.at).ok_or_else(|| degenerate("the triangle is flat"))?;
    let (f, g) = match strategy {
        P42Strategy::Euclid => {
            let k = sub_i23(cx, &e, c, model, s, P23Strategy::Euclid, "K")?;
            let p = sub_i31(cx, a, b, c, "P")?;
            let q = sub_i31(cx, c, &e, &k, "Q")?;
            let ek = cx.line(&e, &k)?;
            let ap = cx.line(a, &p)?;
            let cq = cx.line(c, &q)?;
            let f = cx.meet("F", &ek, &ap, Pick::Only)?;
            let g = cx.meet("G", &ap, &cq, Pick::Only)?;
            (f, g)
        }
        P42Strategy::Alnayrizi => {
            let p = sub_i31(cx, a, b, c, "P")?;
            let k = sub_i23(cx, &e, c, model, s, P23Strategy::Euclid, "K")?;
            let ek = cx.line(&e, &k)?;
            let ap = cx.line(a, &p)?;
            let f = cx.meet("F", &ek, &ap, Pick::Only)?;
            let dir = dir_along(&f.at, &[a, &p], &c.at.sub(&e.at))?;
            let g = sub_cut(cx, &f, dir, &e, c, "G")?;
            (f, g)
        }
    };
    cx.join(&e, &f)?;
    cx.join(&f, &g)?;
    cx.join(c, &g)?;
    Ok((f, e, g))
}

pub(crate) fn sub_i42(
    cx: &mut Ctx,
    t: [&Pt; 3],
    d: [&Pt; 3],
    strategy: P42Strategy,
    hints: [&str; 3],
) -> Result<(Pt, Pt, Pt)> {
    let id = prop_id("I.42", strategy.suffix());
    let inputs = [t[0], t[1], t[2], d[0], d[1], d[2]];
    let out = cx.call(&id, &inputs, &hints, |cx, xs| {
        let a = cx.given("A", xs[0].clone());
        let b = cx.given("B", xs[1].clone());
        let c = cx.given("C", xs[2].clone());
        let d1 = cx.given("D1", xs[3].clone());
        let d = cx.given("D", xs[4].clone());
        let d2 = cx.given("D2", xs[5].clone());
        let (f, e, g) = i42(cx, [&a, &b, &c], [&d1, &d, &d2], strategy)?;
        Ok(vec![f, e, g])
    })?;
    let mut it = out.into_iter();
    Ok((it.next().unwrap(), it.next().unwrap(), it.next().unwrap()))
}

/// I.42 with its side `E C` laid along the ray from `o` in direction `dir`,
/// `E` at `o` and the parallelogram on `side`. Returns `[F, E, C, G]`.
fn i42_on_ray(
    cx: &mut Ctx,
    t: [&Pt; 3],
    d: [&Pt; 3],
    o: &Pt,
    dir: Dir<'_>,
    side: Side,
) -> Result<[Pt; 4]> {
    let [a, b, c] = t;
    let m = sub_i10(cx, b, c, "M")?;
    let h = sub_cut(cx, o, dir, b, &m, "H")?;
    let p = sub_cut(cx, o, Dir::AwayFrom(&h), b, &m, "P")?;
    let (q, k) = sub_i22(cx, [(b, a), (b, c), (c, a)], &p, Dir::Toward(o), side, ["Q", "K"])?;
    let (f, e, g) = sub_i42(cx, [&k, &p, &q], d, P42Strategy::Euclid, ["F", "E", "G"])?;
    Ok([f, e, q, g])
}

/// Completes the figure of I.44 from the parallelogram `B E F G` lying with
/// `B E` in a straight line with `A B`. Returns `(L, M)`, the far corners of
/// the complement `B A L M` on the given line.
#[allow(clippy::too_many_arguments)]
fn complete(
    cx: &mut Ctx,
    a: &Pt,
    b: &Pt,
    e: &Pt,
    f: &Pt,
    g: &Pt,
    hints: [&str; 4],
) -> Result<(Pt, Pt)> {
    let p = sub_i31(cx, a, b, g, "P")?;
    let ap = cx.line(a, &p)?;
    let fg = cx.extend(f, g)?;
    let h = cx.meet(hints[0], &ap, &fg, Pick::Only)?;
    cx.join(&h, b)?;
    let hb = cx.extend(&h, b)?;
    let fe = cx.extend(f, e)?;
    let k = cx.meet(hints[1], &hb, &fe, Pick::Only)?;
    let q = sub_i31(cx, &k, e, a, "Q")?;
    let kq = cx.line(&k, &q)?;
    let ha = cx.extend(&h, a)?;
    let gb = cx.extend(g, b)?;
    let l = cx.meet(hints[2], &kq, &ha, Pick::Only)?;
    let m = cx.meet(hints[3], &kq, &gb, Pick::Only)?;
    cx.join(&l, &m)?;
    Ok((l, m))
}

/// I.44 on the line from `b` to `a` (the angle goes at `b`), the result on
/// `side` of `b → a`. Returns `(L, M)` of the parallelogram `B A L M`.
fn i44(
    cx: &mut Ctx,
    b: &Pt,
    a: &Pt,
    t: [&Pt; 3],
    d: [&Pt; 3],
    side: Side,
    strategy: P44Strategy,
) -> Result<(Pt, Pt)> {
    let [t0, t1, t2] = t;
    match strategy {
        P44Strategy::EuclidSuperposition => {
            let (f1, e1, g1) = sub_i42(cx, t, d, P42Strategy::Euclid, ["F'", "E'", "G'"])?;
            let have = side_of(&e1.at, &t2.at, &f1.at)
                .ok_or_else(|| degenerate("flat parallelogram"))?;
            let motion = if have == side { Side::Left } else { Side::Right };
            let (_, images) = cx.superpose(
                (&e1, t2),
                b,
                Dir::AwayFrom(a),
                motion,
                &[(t2, "E"), (&g1, "F"), (&f1, "G")],
            )?;
            let [e, f, g]: [Pt; 3] = images.try_into().expect("three images");
            complete(cx, a, b, &e, &f, &g, ["H", "K", "L", "M"])
        }
        P44Strategy::Alnayrizi => {
            cx.extend(a, b)?;
            let [f, _, c, g] = i42_on_ray(cx, t, d, b, Dir::AwayFrom(a), side)?;
            complete(cx, a, b, &c, &g, &f, ["L", "M", "N", "X"])
        }
        P44Strategy::RobertOfChester => {
            cx.extend(a, b)?;
            let m = sub_i10(cx, t1, t2, "M")?;
            let h = sub_cut(cx, b, Dir::AwayFrom(a), t1, &m, "H")?;
            let p = sub_cut(cx, b, Dir::AwayFrom(&h), t1, &m, "P")?;
            let r = sub_i23(cx, &p, &h, (t2, t1, t0), side, P23Strategy::Euclid, "R")?;
            let s = sub_i23(cx, &h, &p, (t1, t2, t0), side.opposite(), P23Strategy::Euclid, "S")?;
            let pr = cx.line(&p, &r)?;
            let hs = cx.line(&h, &s)?;
            let q = cx.meet("Q", &pr, &hs, Pick::Only)?;
            cx.join(&q, &p)?;
            cx.join(&q, &h)?;
            let (f, _, g) = sub_i42(cx, [&q, &p, &h], d, P42Strategy::Euclid, ["F", "E", "G"])?;
            complete(cx, a, b, &h, &g, &f, ["T", "K", "L", "N"])
        }
        P44Strategy::Campanus => {
            let (v, w) = (b, a);
            let g = sub_cut(cx, v, Dir::AwayFrom(w), t1, t2, "g")?;
            let r = sub_i23(cx, &g, v, (t2, t1, t0), side.opposite(), P23Strategy::Euclid, "r")?;
            let s = sub_i23(cx, v, &g, (t1, t2, t0), side, P23Strategy::Euclid, "s")?;
            let gr = cx.line(&g, &r)?;
            let vs = cx.line(v, &s)?;
            let k = cx.meet("k", &gr, &vs, Pick::Only)?;
            cx.join(&k, &g)?;
            cx.join(&k, v)?;
            let h = sub_i10(cx, &g, v, "h")?;
            let k2 = sub_i31(cx, &k, &g, v, "x")?;
            let top = cx.line(&k, &k2)?;
            let l1 = sub_i23(cx, v, &g, (d[0], d[1], d[2]), side, P23Strategy::Euclid, "t")?;
            let vl = cx.line(v, &l1)?;
            let l = cx.meet("l", &vl, &top, Pick::Only)?;
            let h2 = sub_i31(cx, &h, v, &l, "y")?;
            let hh = cx.line(&h, &h2)?;
            let m = cx.meet("m", &hh, &top, Pick::Only)?;
            let w2 = sub_i31(cx, w, v, &l, "z")?;
            let ww = cx.line(w, &w2)?;
            let n = cx.meet("n", &ww, &top, Pick::Only)?;
            let nv = cx.extend(&n, v)?;
            let mh = cx.extend(&m, &h)?;
            let o = cx.meet("o", &nv, &mh, Pick::Only)?;
            let o2 = sub_i31(cx, &o, v, w, "u")?;
            let oo = cx.line(&o, &o2)?;
            let nw = cx.extend(&n, w)?;
            let lv = cx.extend(&l, v)?;
            let q = cx.meet("q", &oo, &nw, Pick::Only)?;
            let p = cx.meet("p", &oo, &lv, Pick::Only)?;
            cx.join(&q, &p)?;
            Ok((q, p))
        }
        P44Strategy::TinemueEqualCase => {
            let (v, w) = (b, a);
            let (c, dd) = sub_i22(
                cx,
                [(t1, t0), (t1, t2), (t2, t0)],
                v,
                Dir::AwayFrom(w),
                side,
                ["c", "d"],
            )?;
            let o = sub_i10(cx, v, &c, "o")?;
            cx.join(&o, &dd)?;
            let top = Angle::new(c.at.clone(), o.at.clone(), dd.at.clone())?;
            let given = Angle::new(d[0].at.clone(), d[1].at.clone(), d[2].at.clone())?;
            if !geom::angle_eq(&top, &given) {
                return Err(Error::StrategyInapplicable {
                    strategy: P44Strategy::TinemueEqualCase.name().into(),
                    reason: "the upper right angle at o differs from the given angle".into(),
                });
            }
            let x = sub_i31(cx, &dd, v, &c, "x")?;
            let y = sub_i31(cx, v, &o, &dd, "y")?;
            let dx = cx.line(&dd, &x)?;
            let vy = cx.line(v, &y)?;
            let f = cx.meet("f", &dx, &vy, Pick::Only)?;
            cx.join(v, &f)?;
            cx.join(&dd, &f)?;
            complete(cx, w, v, &o, &dd, &f, ["h", "g", "k", "i"])
        }
    }
}

pub(crate) fn sub_i44(
    cx: &mut Ctx,
    b: &Pt,
    a: &Pt,
    t: [&Pt; 3],
    d: [&Pt; 3],
    side: Side,
    strategy: P44Strategy,
    hints: [&str; 2],
) -> Result<(Pt, Pt)> {
    let id = prop_id("I.44", strategy.suffix());
    let inputs = [b, a, t[0], t[1], t[2], d[0], d[1], d[2]];
    let out = cx.call(&id, &inputs, &hints, |cx, xs| {
        let b = cx.given("B", xs[0].clone());
        let a = cx.given("A", xs[1].clone());
        let t = [2, 3, 4].map(|i| cx.given(&format!("C{}", i - 1), xs[i].clone()));
        let d1 = cx.given("D1", xs[5].clone());
        let d = cx.given("D", xs[6].clone());
        let d2 = cx.given("D2", xs[7].clone());
        let (l, m) = i44(cx, &b, &a, [&t[0], &t[1], &t[2]], [&d1, &d, &d2], side, strategy)?;
        Ok(vec![l, m])
    })?;
    let mut it = out.into_iter();
    Ok((it.next().unwrap(), it.next().unwrap()))
}

/// I.42: a parallelogram equal to the triangle `t` in the angle `d`.
///
/// The triangle's first vertex is its apex and the other two its base. The
/// result `FECG` has its angle at `E` equal to `d`.
pub fn p42(t: &Figure, d: &Angle, strategy: P42Strategy) -> Result<PropositionResult> {
    proper_triangle(t)?;
    let id = prop_id("I.42", strategy.suffix());
    let mut cx = Ctx::new(&id);
    let [a, b, c] = triangle_pts(&mut cx, t, ["A", "B", "C"]);
    let [d1, dv, d2] = angle_pts(&mut cx, d, "D");
    let (f, e, g) = i42(&mut cx, [&a, &b, &c], [&d1, &dv, &d2], strategy)?;
    let pg = figure(&[&f, &e, &c, &g])?;
    let angle = Angle::new(f.at.clone(), e.at.clone(), c.at.clone())?;
    PropositionResult::new(&id, cx.finish())
        .with("ABC", Object::Figure(t.clone()), Role::Given)
        .with("D", Object::Angle(d.clone()), Role::Given)
        .with("E", point(&e), Role::Auxiliary)
        .with("F", point(&f), Role::Result)
        .with("G", point(&g), Role::Result)
        .with("FECG", Object::Figure(pg.clone()), Role::Result)
        .claims(checks::parallelogram("FECG", &pg))
        .claim(checks::content_eq("FECG equals ABC", &pg, t))
        .claim(checks::angle_eq("FEC = D", &angle, d))
        .checked()
}

/// I.42 placed: the parallelogram `EHGF` has `E` at the origin of `ray`,
/// `H` along it, the angle `FEH` equal to `d`, and lies on `side` of the ray.
pub fn p42_on_ray(t: &Figure, d: &Angle, ray: &Ray, side: Side) -> Result<PropositionResult> {
    proper_triangle(t)?;
    let mut cx = Ctx::new("I.42");
    let [a, b, c] = triangle_pts(&mut cx, t, ["A", "B", "C"]);
    let [d1, dv, d2] = angle_pts(&mut cx, d, "D");
    let o = cx.given("O", ray.origin.clone());
    let r = cx.given("R", ray.through.clone());
    let [f, e, h, g] = i42_on_ray(
        &mut cx,
        [&a, &b, &c],
        [&d1, &dv, &d2],
        &o,
        Dir::Toward(&r),
        side,
    )?;
    let pg = figure(&[&e, &h, &g, &f])?;
    let angle = Angle::new(f.at.clone(), e.at.clone(), h.at.clone())?;
    PropositionResult::new("I.42", cx.finish())
        .with("ABC", Object::Figure(t.clone()), Role::Given)
        .with("D", Object::Angle(d.clone()), Role::Given)
        .with("OR", Object::Ray(ray.clone()), Role::Given)
        .with("EHGF", Object::Figure(pg.clone()), Role::Result)
        .claims(checks::parallelogram("EHGF", &pg))
        .claim(checks::content_eq("EHGF equals ABC", &pg, t))
        .claim(checks::angle_eq("FEH = D", &angle, d))
        .claim(checks::same_point("E is the origin of the ray", &e.at, &ray.origin))
        .claim(Claim::fact("EH along the ray", ray.contains(&h.at)))
        .claim(checks::on_side("F on the requested side", &e.at, &h.at, &f.at, side))
        .checked()
}

/// I.43: the complements about the diameter `AC` of the parallelogram
/// `ABCD` through its point `k`.
pub fn p43_complements(pg: &Figure, k: &Point) -> Result<PropositionResult> {
    if pg.len() != 4 || !checks::parallelogram("", pg).iter().all(Claim::holds) {
        return Err(Error::PreconditionViolated("expected a parallelogram ABCD".into()));
    }
    let (va, vc) = (pg.vertex(0), pg.vertex(2));
    let t = k.sub(va).dot(&vc.sub(va));
    if !collinear(va, vc, k) || !t.is_positive() || t >= va.dist_sq(vc) {
        return Err(Error::PreconditionViolated(
            "K must lie strictly inside the diameter AC".into(),
        ));
    }
    let mut cx = Ctx::new("I.43");
    let [a, b, c, d] = [0, 1, 2, 3].map(|i| cx.given(["A", "B", "C", "D"][i], pg.vertex(i).clone()));
    let k = cx.given("K", k.clone());
    cx.join(&a, &c)?;
    let x = sub_i31(&mut cx, &k, &a, &d, "X")?;
    let y = sub_i31(&mut cx, &k, &a, &b, "Y")?;
    let kx = cx.line(&k, &x)?;
    let ky = cx.line(&k, &y)?;
    let ab = cx.line(&a, &b)?;
    let dc = cx.line(&d, &c)?;
    let ad = cx.line(&a, &d)?;
    let bc = cx.line(&b, &c)?;
    let e = cx.meet("E", &kx, &ab, Pick::Only)?;
    let g = cx.meet("G", &kx, &dc, Pick::Only)?;
    let h = cx.meet("H", &ky, &ad, Pick::Only)?;
    let f = cx.meet("F", &ky, &bc, Pick::Only)?;
    for (p, q) in [(&e, &g), (&h, &f)] {
        cx.join(p, q)?;
    }
    let first = figure(&[&e, &b, &f, &k])?;
    let second = figure(&[&h, &k, &g, &d])?;
    PropositionResult::new("I.43", cx.finish())
        .with("ABCD", Object::Figure(pg.clone()), Role::Given)
        .with("K", point(&k), Role::Given)
        .with("AEKH", Object::Figure(figure(&[&a, &e, &k, &h])?), Role::Auxiliary)
        .with("KFCG", Object::Figure(figure(&[&k, &f, &c, &g])?), Role::Auxiliary)
        .with("EBFK", Object::Figure(first.clone()), Role::Result)
        .with("HKGD", Object::Figure(second.clone()), Role::Result)
        .claims(checks::parallelogram("EBFK", &first))
        .claims(checks::parallelogram("HKGD", &second))
        .claim(checks::content_eq("EBFK equals HKGD", &first, &second))
        .checked()
}

/// I.44: on `ab` a parallelogram equal to the triangle `t` (apex first),
/// with its angle at `ab.a` equal to `d`, lying on `side` of `ab`.
///
/// The result is `BALM` in Euclid's letters: `B = ab.a`, `A = ab.b`.
pub fn p44(
    ab: &Segment,
    t: &Figure,
    d: &Angle,
    side: Side,
    strategy: P44Strategy,
) -> Result<PropositionResult> {
    proper_triangle(t)?;
    let id = prop_id("I.44", strategy.suffix());
    let mut cx = Ctx::new(&id);
    let b = cx.given("B", ab.a.clone());
    let a = cx.given("A", ab.b.clone());
    let [c1, c2, c3] = triangle_pts(&mut cx, t, ["C1", "C2", "C3"]);
    let [d1, dv, d2] = angle_pts(&mut cx, d, "D");
    let (l, m) = i44(&mut cx, &b, &a, [&c1, &c2, &c3], [&d1, &dv, &d2], side, strategy)?;
    let trace = cx.finish();
    let expected = usize::from(strategy == P44Strategy::EuclidSuperposition);
    let supers = trace.superposition_count();
    let pg = figure(&[&b, &a, &l, &m])?;
    let angle = Angle::new(a.at.clone(), b.at.clone(), m.at.clone())?;
    PropositionResult::new(&id, trace)
        .with("AB", Object::Segment(ab.clone()), Role::Given)
        .with("C", Object::Figure(t.clone()), Role::Given)
        .with("D", Object::Angle(d.clone()), Role::Given)
        .with("L", point(&l), Role::Result)
        .with("M", point(&m), Role::Result)
        .with("BALM", Object::Figure(pg.clone()), Role::Result)
        .claims(checks::parallelogram("BALM", &pg))
        .claim(checks::content_eq("BALM equals C", &pg, t))
        .claim(checks::angle_eq("ABM = D", &angle, d))
        .claim(checks::on_side("BALM on the requested side", &b.at, &a.at, &l.at, side))
        .claim(Claim::zero(
            format!("superposition steps: {expected}"),
            geom_count(supers) - geom_count(expected),
        ))
        .checked()
}

fn geom_count(n: usize) -> crate::number::Constructible {
    crate::number::Constructible::from_int(n as i64)
}

/// I.45: a parallelogram equal to the rectilineal figure `f` in the angle
/// `d`.
///
/// The figure is cut into triangles; the first goes by I.42 and each
/// following one is applied by I.44 to the last side reached, so that the
/// pieces run on in a straight line.
pub fn p45(d: &Angle, f: &Figure) -> Result<PropositionResult> {
    let tris = triangulate(f)?;
    let mut cx = Ctx::new("I.45");
    let v: Vec<Pt> = (0..f.len())
        .map(|i| cx.given(&format!("P{}", i + 1), f.vertex(i).clone()))
        .collect();
    let [e1, ev, e2] = angle_pts(&mut cx, d, "E");
    let e = [&e1, &ev, &e2];
    let first = tris[0];
    let (ff, k, g) = sub_i42(
        &mut cx,
        first.map(|i| &v[i]),
        e,
        P42Strategy::Euclid,
        ["F", "K", "G"],
    )?;
    let mut prev = k.clone();
    let mut bottom = v[first[2]].clone();
    let mut top = g;
    let mut stitches = Vec::new();
    for (n, tri) in tris.iter().enumerate().skip(1) {
        let away = side_of(&bottom.at, &top.at, &prev.at)
            .ok_or_else(|| degenerate("flat parallelogram"))?
            .opposite();
        let hints = [format!("L{n}"), format!("M{n}")];
        let (l, m) = sub_i44(
            &mut cx,
            &bottom,
            &top,
            tri.map(|i| &v[i]),
            e,
            away,
            P44Strategy::Alnayrizi,
            [&hints[0], &hints[1]],
        )?;
        let before = Angle::new(prev.at.clone(), bottom.at.clone(), top.at.clone())?;
        let after = Angle::new(top.at.clone(), bottom.at.clone(), m.at.clone())?;
        stitches.push(checks::measure_eq(
            &format!("stitch {n}: abutting angles at {} make two right angles", bottom.label),
            &before.measure().add(&after.measure()),
            &AngleMeasure::two_right(),
        ));
        stitches.push(checks::collinear(
            &format!("stitch {n}: {}{}{} in a straight line", prev.label, bottom.label, m.label),
            &prev.at,
            &bottom.at,
            &m.at,
        ));
        stitches.push(checks::collinear(
            &format!("stitch {n}: {}{}{} in a straight line", ff.label, top.label, l.label),
            &ff.at,
            &top.at,
            &l.at,
        ));
        prev = bottom;
        bottom = m;
        top = l;
    }
    let pg = figure(&[&ff, &k, &bottom, &top])?;
    let angle = Angle::new(ff.at.clone(), k.at.clone(), bottom.at.clone())?;
    let count = tris.len();
    let want = f.len() - 2;
    let mut r = PropositionResult::new("I.45", cx.finish())
        .with("F0", Object::Figure(f.clone()), Role::Given)
        .with("E", Object::Angle(d.clone()), Role::Given);
    for (i, t) in tris.iter().enumerate() {
        let piece = Figure::triangle(
            f.vertex(t[0]).clone(),
            f.vertex(t[1]).clone(),
            f.vertex(t[2]).clone(),
        )?;
        r = r.with(&format!("T{}", i + 1), Object::Figure(piece), Role::Auxiliary);
    }
    r.with("KF", Object::Figure(pg.clone()), Role::Result)
        .claim(Claim::zero(
            format!("triangles: {count}"),
            geom_count(count) - geom_count(want),
        ))
        .claims(stitches)
        .claims(checks::parallelogram("KF", &pg))
        .claim(checks::content_eq("KF equals the figure", &pg, f))
        .claim(checks::angle_eq("FK to the base = E", &angle, d))
        .checked()
}

/// I.46: the square on `ab`, lying on `side` of it. The result is `ABDC`.
pub fn p46(ab: &Segment, side: Side, strategy: P46Strategy) -> Result<PropositionResult> {
    let id = prop_id("I.46", strategy.suffix());
    let mut cx = Ctx::new(&id);
    let a = cx.given("A", ab.a.clone());
    let b = cx.given("B", ab.b.clone());
    let (c, d) = match strategy {
        P46Strategy::CampanusFirst => {
            let e = sub_i11(&mut cx, &a, &b, &a, side, "E")?;
            let f = sub_i11(&mut cx, &a, &b, &b, side, "F")?;
            let c = sub_cut(&mut cx, &a, Dir::Toward(&e), &a, &b, "C")?;
            let d = sub_cut(&mut cx, &b, Dir::Toward(&f), &a, &b, "D")?;
            (c, d)
        }
        P46Strategy::CampanusSecond => {
            let e = sub_i11(&mut cx, &a, &b, &a, side, "E")?;
            let c = sub_cut(&mut cx, &a, Dir::Toward(&e), &a, &b, "C")?;
            let g = sub_i31(&mut cx, &c, &a, &b, "G")?;
            let dir = dir_along(&c.at, &[&g], &b.at.sub(&a.at))?;
            let d = sub_cut(&mut cx, &c, dir, &a, &b, "D")?;
            (c, d)
        }
    };
    for (p, q) in [(&a, &c), (&c, &d), (&b, &d)] {
        cx.join(p, q)?;
    }
    let sq = figure(&[&a, &b, &d, &c])?;
    let mut r = PropositionResult::new(&id, cx.finish())
        .with("AB", Object::Segment(ab.clone()), Role::Given)
        .with("C", point(&c), Role::Result)
        .with("D", point(&d), Role::Result)
        .with("ABDC", Object::Figure(sq.clone()), Role::Result)
        .claim(checks::on_side("the square on the requested side", &a.at, &b.at, &c.at, side));
    let vs = &sq.vertices;
    for i in 0..4 {
        let (p, q) = (&vs[i], &vs[(i + 1) % 4]);
        r = r.claim(checks::len_eq(&format!("side {} equals AB", i + 1), (p, q), (&a.at, &b.at)));
        let corner = Angle::new(vs[(i + 3) % 4].clone(), p.clone(), q.clone())?;
        r = r.claim(checks::right(&format!("angle {} right", i + 1), &corner));
    }
    r.checked()
}
