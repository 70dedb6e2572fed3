//! I.22 and the six ways of copying an angle (I.23).

use std::fmt;
use std::str::FromStr;

use super::basic::sub_cut;
use super::checks;
use super::trace::{Ctx, Dir, Pick, Pt};
use super::{PropositionResult, Role};
use crate::error::{Error, Result};
use crate::geom::{Angle, Figure, Object, Point, Ray, Segment, Side};
use crate::number::Constructible as Num;

/// Triangle from three lengths with `F` at `o`, `G` along the ray `dir`:
/// `FK = a`, `FG = b`, `GK = c`. Returns `(G, K)`.
pub(crate) fn i22(
    cx: &mut Ctx,
    lens: [(&Pt, &Pt); 3],
    o: &Pt,
    dir: Dir<'_>,
    side: Side,
) -> Result<(Pt, Pt)> {
    let [a, b, c] = lens;
    triangle_inequality(&[a, b, c].map(|(p, q)| p.at.dist_sq(&q.at)))?;
    cx.extend(dir.point(), o)?;
    let d = sub_cut(cx, o, dir.flip(), a.0, a.1, "D")?;
    let g = sub_cut(cx, o, dir, b.0, b.1, "G")?;
    let h = sub_cut(cx, &g, Dir::AwayFrom(o), c.0, c.1, "H")?;
    let dkl = cx.circle(o, &d)?;
    let klh = cx.circle(&g, &h)?;
    let k = cx.meet(
        "K",
        &dkl,
        &klh,
        Pick::Side {
            from: o.clone(),
            to: g.clone(),
            side,
        },
    )?;
    cx.join(&k, o)?;
    cx.join(&k, &g)?;
    Ok((g, k))
}

/// Strict triangle inequality on squared lengths, decided exactly without
/// taking roots: `a < b + c` iff `a² - b² - c² < 2bc`, and when the left
/// side is non-negative iff its square is below `4b²c²`.
fn triangle_inequality(sq: &[Num; 3]) -> Result<()> {
    if sq.iter().any(|s| !s.is_positive()) {
        return Err(Error::TriangleInequalityViolated);
    }
    for i in 0..3 {
        let (b, c) = (&sq[(i + 1) % 3], &sq[(i + 2) % 3]);
        let lhs = &(&sq[i] - b) - c;
        if !lhs.is_negative() && lhs.square() >= (b * c).scale(4, 1) {
            return Err(Error::TriangleInequalityViolated);
        }
    }
    Ok(())
}

pub(crate) fn sub_i22(
    cx: &mut Ctx,
    lens: [(&Pt, &Pt); 3],
    o: &Pt,
    dir: Dir<'_>,
    side: Side,
    hints: [&str; 2],
) -> Result<(Pt, Pt)> {
    let [a, b, c] = lens;
    let toward = matches!(dir, Dir::Toward(_));
    let inputs = [a.0, a.1, b.0, b.1, c.0, c.1, o, dir.point()];
    let out = cx.call("I.22", &inputs, &hints, |cx, xs| {
        let a0 = cx.given("A", xs[0].clone());
        let a1 = cx.given("A'", xs[1].clone());
        let b0 = cx.given("B", xs[2].clone());
        let b1 = cx.given("B'", xs[3].clone());
        let c0 = cx.given("C", xs[4].clone());
        let c1 = cx.given("C'", xs[5].clone());
        let o = cx.given("F", xs[6].clone());
        let t = cx.given("E", xs[7].clone());
        let d = if toward { Dir::Toward(&t) } else { Dir::AwayFrom(&t) };
        let (g, k) = i22(cx, [(&a0, &a1), (&b0, &b1), (&c0, &c1)], &o, d, side)?;
        Ok(vec![g, k])
    })?;
    let mut it = out.into_iter();
    Ok((it.next().unwrap(), it.next().unwrap()))
}

fn segment_pts(cx: &mut Ctx, s: &Segment, n: &str) -> (Pt, Pt) {
    (cx.given(n, s.a.clone()), cx.given(&format!("{n}'"), s.b.clone()))
}

/// I.22: the triangle `F G K` with `FK = a`, `FG = b`, `GK = c`, where `F`
/// is the origin of `ray`, `G` lies along it and `K` on `side` of it.
///
/// So lengths 3, 4, 5 on the positive x-axis give the apex `(0, 3)`.
pub fn p22(lens: [&Segment; 3], ray: &Ray, side: Side) -> Result<PropositionResult> {
    let mut cx = Ctx::new("I.22");
    let a = segment_pts(&mut cx, lens[0], "A");
    let b = segment_pts(&mut cx, lens[1], "B");
    let c = segment_pts(&mut cx, lens[2], "C");
    let f = cx.given("F", ray.origin.clone());
    let e = cx.given("E", ray.through.clone());
    let (g, k) = i22(&mut cx, [(&a.0, &a.1), (&b.0, &b.1), (&c.0, &c.1)], &f, Dir::Toward(&e), side)?;
    let t = Figure::triangle(f.at.clone(), g.at.clone(), k.at.clone())?;
    PropositionResult::new("I.22", cx.finish())
        .with("F", Object::Point(f.at.clone()), Role::Given)
        .with("FE", Object::Ray(ray.clone()), Role::Given)
        .with("G", Object::Point(g.at.clone()), Role::Result)
        .with("K", Object::Point(k.at.clone()), Role::Result)
        .with("FGK", Object::Figure(t), Role::Result)
        .claim(checks::len_eq("FK = A", (&f.at, &k.at), (&a.0.at, &a.1.at)))
        .claim(checks::len_eq("FG = B", (&f.at, &g.at), (&b.0.at, &b.1.at)))
        .claim(checks::len_eq("GK = C", (&g.at, &k.at), (&c.0.at, &c.1.at)))
        .claim(checks::collinear("G on the ray", &ray.origin, &ray.through, &g.at))
        .claim(checks::on_side("K on the requested side", &f.at, &g.at, &k.at, side))
        .checked()
}

/// Given lengths laid off along the x-direction from the ray's origin.
fn length_segments(o: &Point, lens: [&Num; 3]) -> Result<[Segment; 3]> {
    let mk = |l: &Num| {
        if !l.is_positive() {
            return Err(Error::TriangleInequalityViolated);
        }
        Segment::new(o.clone(), Point::new(&o.x + l, o.y.clone()))
    };
    Ok([mk(lens[0])?, mk(lens[1])?, mk(lens[2])?])
}

/// [`p22`] with the three lengths given as numbers.
pub fn p22_lengths(a: &Num, b: &Num, c: &Num, ray: &Ray, side: Side) -> Result<PropositionResult> {
    let segs = length_segments(&ray.origin, [a, b, c])?;
    p22([&segs[0], &segs[1], &segs[2]], ray, side)
}

/// Places a triangle with sides `a, b, c` on `ray` as [`p22`] does and
/// returns its vertices `[F, G, K]`.
pub fn place_triangle_on_ray(a: &Num, b: &Num, c: &Num, ray: &Ray, side: Side) -> Result<Figure> {
    let r = p22_lengths(a, b, c, ray, side)?;
    r.figure("FGK").cloned().ok_or(Error::PostconditionFailed("no triangle".into()))
}

/// How I.23 copies the angle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum P23Strategy {
    /// Through the triangle of I.22.
    Euclid,
    /// Producing the line both ways and drawing both intersections.
    Proclus,
    /// First fitting the line to the angle's arm, by I.3 or I.2.
    Albertus,
    /// One cut and two circles with transferred radii.
    Commandinus,
    /// Three cuts on the line, then two circles.
    Clavius,
    /// The I.22 layout written out in place.
    Campanus,
}

impl P23Strategy {
    pub const ALL: [P23Strategy; 6] = [
        P23Strategy::Euclid,
        P23Strategy::Proclus,
        P23Strategy::Albertus,
        P23Strategy::Commandinus,
        P23Strategy::Clavius,
        P23Strategy::Campanus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            P23Strategy::Euclid => "euclid",
            P23Strategy::Proclus => "proclus",
            P23Strategy::Albertus => "albertus",
            P23Strategy::Commandinus => "commandinus",
            P23Strategy::Clavius => "clavius",
            P23Strategy::Campanus => "campanus",
        }
    }
}

impl fmt::Display for P23Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for P23Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        P23Strategy::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownStrategy(s.to_string()))
    }
}

/// Copies the angle `model = (arm1, vertex, arm2)` to the ray `o → t`, the
/// new arm on `side`. Returns `(G, K)`: `G` on the ray, `K` on the new arm,
/// with angle `G o K` equal to the model.
pub(crate) fn i23(
    cx: &mut Ctx,
    o: &Pt,
    t: &Pt,
    model: (&Pt, &Pt, &Pt),
    side: Side,
    strategy: P23Strategy,
) -> Result<(Pt, Pt)> {
    let (d, c, e) = model;
    let pick = |from: &Pt, to: &Pt| Pick::Side {
        from: from.clone(),
        to: to.clone(),
        side,
    };
    match strategy {
        P23Strategy::Euclid => {
            cx.join(d, e)?;
            sub_i22(cx, [(c, d), (c, e), (d, e)], o, Dir::Toward(t), side, ["G", "K"])
        }
        P23Strategy::Proclus => {
            let b = sub_cut(cx, o, Dir::Toward(t), c, e, "B")?;
            cx.join(d, e)?;
            let f = sub_cut(cx, o, Dir::AwayFrom(&b), c, d, "F")?;
            let g = sub_cut(cx, &b, Dir::AwayFrom(o), d, e, "G")?;
            let k = cx.circle(o, &f)?;
            let l = cx.circle(&b, &g)?;
            let m = cx.meet("M", &k, &l, pick(o, &b))?;
            let n = cx.meet(
                "N",
                &k,
                &l,
                Pick::Side {
                    from: o.clone(),
                    to: b.clone(),
                    side: side.opposite(),
                },
            )?;
            for p in [&m, &n] {
                cx.join(p, o)?;
                cx.join(p, &b)?;
            }
            Ok((b, m))
        }
        P23Strategy::Albertus => {
            let target = c.at.dist_sq(&e.at);
            let have = o.at.dist_sq(&t.at);
            let b = match have.cmp(&target) {
                std::cmp::Ordering::Greater => sub_cut(cx, o, Dir::Toward(t), c, e, "B")?,
                std::cmp::Ordering::Less => {
                    cx.extend(o, t)?;
                    sub_cut(cx, o, Dir::Toward(t), c, e, "B")?
                }
                std::cmp::Ordering::Equal => t.clone(),
            };
            let cc = sub_cut(cx, o, Dir::AwayFrom(&b), c, d, "C")?;
            let ee = sub_cut(cx, &b, Dir::AwayFrom(o), d, e, "E")?;
            let ca = cx.circle(o, &cc)?;
            let cb = cx.circle(&b, &ee)?;
            let dd = cx.meet("D", &ca, &cb, pick(o, &b))?;
            cx.join(&dd, o)?;
            cx.join(&dd, &b)?;
            Ok((b, dd))
        }
        P23Strategy::Commandinus => {
            cx.join(d, e)?;
            let g = sub_cut(cx, o, Dir::Toward(t), c, e, "G")?;
            let c1 = cx.circle_radius(o, c, d)?;
            let c2 = cx.circle_radius(&g, e, d)?;
            let f = cx.meet("F", &c1, &c2, pick(o, &g))?;
            cx.join(o, &f)?;
            cx.join(&f, &g)?;
            Ok((g, f))
        }
        P23Strategy::Clavius => {
            let i = sub_cut(cx, o, Dir::Toward(t), c, d, "I")?;
            let l = sub_cut(cx, o, Dir::Toward(t), c, e, "L")?;
            let m = sub_cut(cx, &i, Dir::AwayFrom(o), d, e, "M")?;
            let cl = cx.circle(o, &l)?;
            let im = cx.circle(&i, &m)?;
            let k = cx.meet("K", &cl, &im, pick(o, &i))?;
            cx.join(o, &k)?;
            cx.join(&i, &k)?;
            Ok((i, k))
        }
        P23Strategy::Campanus => {
            let dd = sub_cut(cx, o, Dir::AwayFrom(t), c, d, "D")?;
            let g = sub_cut(cx, o, Dir::Toward(t), c, e, "G")?;
            let h = sub_cut(cx, &g, Dir::AwayFrom(o), d, e, "H")?;
            let dk = cx.circle(o, &dd)?;
            let kh = cx.circle(&g, &h)?;
            let k = cx.meet("K", &dk, &kh, pick(o, &g))?;
            cx.join(&k, o)?;
            cx.join(&k, &g)?;
            Ok((g, k))
        }
    }
}

pub(crate) fn sub_i23(
    cx: &mut Ctx,
    o: &Pt,
    t: &Pt,
    model: (&Pt, &Pt, &Pt),
    side: Side,
    strategy: P23Strategy,
    hint: &str,
) -> Result<Pt> {
    let id = match strategy {
        P23Strategy::Euclid => "I.23".to_string(),
        s => format!("I.23.{}", s.name()),
    };
    let mut out = cx.call(&id, &[o, t, model.0, model.1, model.2], &[hint], |cx, xs| {
        let o = cx.given("A", xs[0].clone());
        let t = cx.given("B", xs[1].clone());
        let d = cx.given("D", xs[2].clone());
        let c = cx.given("C", xs[3].clone());
        let e = cx.given("E", xs[4].clone());
        let (_, k) = i23(cx, &o, &t, (&d, &c, &e), side, strategy)?;
        Ok(vec![k])
    })?;
    Ok(out.remove(0))
}

/// I.23: at the origin of `target`, an angle equal to `model` with one arm
/// along `target` and the other on `side` of it.
pub fn p23(target: &Ray, model: &Angle, side: Side, strategy: P23Strategy) -> Result<PropositionResult> {
    let id = match strategy {
        P23Strategy::Euclid => "I.23".to_string(),
        s => format!("I.23.{}", s.name()),
    };
    let mut cx = Ctx::new(&id);
    let a = cx.given("A", target.origin.clone());
    let b = cx.given("B", target.through.clone());
    let d = cx.given("D", model.arm1.clone());
    let c = cx.given("C", model.vertex.clone());
    let e = cx.given("E", model.arm2.clone());
    let (g, k) = i23(&mut cx, &a, &b, (&d, &c, &e), side, strategy)?;
    let result = Angle::new(g.at.clone(), a.at.clone(), k.at.clone())?;
    let on_ray = target.contains(&g.at);
    PropositionResult::new(&id, cx.finish())
        .with("AB", Object::Ray(target.clone()), Role::Given)
        .with("DCE", Object::Angle(model.clone()), Role::Given)
        .with("K", Object::Point(k.at.clone()), Role::Result)
        .with("GAK", Object::Angle(result.clone()), Role::Result)
        .claim(checks::angle_eq("GAK = DCE", &result, model))
        .claim(super::Claim::fact("AG along the given ray", on_ray))
        .claim(checks::on_side("K on the requested side", &a.at, &b.at, &k.at, side))
        .checked()
}
