//! Instance validators for the theorems of Book I.
//!
//! Each validator first checks exactly that the bundle has the theorem's
//! hypothesis shape, then reports the residuals of its conclusion.

use super::checks;
use super::{Claim, Report};
use crate::error::{Error, Result};
use crate::geom::{collinear, side_of, Angle, AngleMeasure, Figure, Point};
use crate::number::Constructible as Num;

/// The figures and points a theorem is checked on.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bundle {
    pub figures: Vec<Figure>,
    pub points: Vec<Point>,
}

impl Bundle {
    pub fn figures(figures: Vec<Figure>) -> Bundle {
        Bundle {
            figures,
            points: Vec::new(),
        }
    }

    pub fn points(points: Vec<Point>) -> Bundle {
        Bundle {
            figures: Vec::new(),
            points,
        }
    }

    pub fn with_points(mut self, points: Vec<Point>) -> Bundle {
        self.points = points;
        self
    }
}

/// Theorem identifiers with a validator, and the bundle each expects.
pub const THEOREMS: &[(&str, &str)] = &[
    ("I.4", "triangles ABC, DEF with AB = DE, AC = DF, angle A = angle D"),
    ("I.7", "points A, B, C, D with CA = DA, CB = DB, C and D on one side of AB"),
    ("I.8", "triangles ABC, DEF with the three sides equal in order"),
    ("I.13", "points A, B, C, D with B strictly between C and D, A off CD"),
    ("I.14", "points A, B, C, D, C and D on either side of AB, ABC + ABD two right angles"),
    ("I.15", "points A, B, C, D, E with AB and CD crossing at E"),
    ("I.16", "triangle ABC and point D on BC produced beyond C"),
    ("I.20", "triangle ABC"),
    ("I.26", "triangles ABC, DEF with angles B = E, C = F and BC = EF or AB = DE"),
    ("I.27", "points A, B, C, D, E, F; E inside AB, F on CD, A and D on either side of EF, AEF = EFD"),
    ("I.28", "points A, B, C, D, E, F; E inside AB, F on CD, A and D on either side of EF, BEF + EFD two right angles"),
    ("I.29", "points A, B, C, D, E, F; AB parallel to CD, E inside AB, F on CD, A and D on either side of EF"),
    ("I.30", "points A, B, C, D, E, F with AB and CD each parallel to EF"),
    ("I.32", "triangle ABC and point D on BC produced beyond C"),
    ("I.33", "points A, B, C, D with AB equal and parallel to CD, pointing the same way"),
    ("I.34", "parallelogram ABCD"),
    ("I.35", "two parallelograms on the same base and in the same parallels"),
    ("I.36", "two parallelograms on equal bases and in the same parallels"),
    ("I.37", "two triangles on the same base and in the same parallels"),
    ("I.38", "two triangles on equal bases and in the same parallels"),
    ("I.41", "a parallelogram and a triangle on the same base and in the same parallels"),
    ("I.43", "parallelogram ABCD and point K strictly inside the diameter AC"),
];

struct Ctx<'a> {
    theorem: &'a str,
}

impl Ctx<'_> {
    fn fail(&self, reason: impl Into<String>) -> Error {
        Error::HypothesisNotSatisfied {
            theorem: self.theorem.to_string(),
            reason: reason.into(),
        }
    }

    fn require(&self, holds: bool, reason: &str) -> Result<()> {
        if holds {
            Ok(())
        } else {
            Err(self.fail(reason))
        }
    }

    fn points<'b>(&self, b: &'b Bundle, n: usize) -> Result<&'b [Point]> {
        if b.points.len() != n || !b.figures.is_empty() {
            return Err(self.fail(format!("expected {n} points")));
        }
        Ok(&b.points)
    }

    fn figures<'b>(&self, b: &'b Bundle, sizes: &[usize], points: usize) -> Result<&'b [Figure]> {
        let shape = b.figures.iter().map(Figure::len).collect::<Vec<_>>();
        if shape != sizes || b.points.len() != points {
            return Err(self.fail(format!(
                "expected figures with {sizes:?} vertices and {points} points"
            )));
        }
        for f in &b.figures {
            self.require(!f.content().is_zero(), "figure with zero content")?;
        }
        Ok(&b.figures)
    }

    fn angle(&self, a: &Point, v: &Point, b: &Point) -> Result<Angle> {
        Angle::new(a.clone(), v.clone(), b.clone()).map_err(|_| self.fail("not a proper angle"))
    }

    fn parallelogram(&self, f: &Figure) -> Result<()> {
        self.require(
            f.len() == 4 && checks::parallelogram("", f).iter().all(Claim::holds),
            "not a parallelogram",
        )
    }
}

fn eq_len(a: (&Point, &Point), b: (&Point, &Point)) -> bool {
    a.0.dist_sq(a.1) == b.0.dist_sq(b.1)
}

fn eq_angle(a: &Angle, b: &Angle) -> bool {
    crate::geom::angle_eq(a, b)
}

fn strictly_between(p: &Point, q: &Point, x: &Point) -> bool {
    let t = x.sub(p).dot(&q.sub(p));
    collinear(p, q, x) && t.is_positive() && t < p.dist_sq(q)
}

fn opposite_sides(p: &Point, q: &Point, x: &Point, y: &Point) -> bool {
    matches!(
        (side_of(p, q, x), side_of(p, q, y)),
        (Some(s), Some(t)) if s == t.opposite()
    )
}

fn same_side(p: &Point, q: &Point, x: &Point, y: &Point) -> bool {
    matches!((side_of(p, q, x), side_of(p, q, y)), (Some(s), Some(t)) if s == t)
}

fn two_right(text: &str, a: &Angle, b: &Angle) -> Claim {
    checks::measure_eq(text, &a.measure().add(&b.measure()), &AngleMeasure::two_right())
}

fn length(p: &Point, q: &Point) -> Num {
    p.dist_sq(q).sqrt_nonneg().expect("squared length is non-negative")
}

fn lines_parallel_distinct(text: &str, a: (&Point, &Point), b: (&Point, &Point)) -> Vec<Claim> {
    vec![
        checks::parallel(text, a, b),
        Claim::fact(format!("{text}: distinct lines"), !collinear(a.0, a.1, b.0)),
    ]
}

/// Finds a base edge of each figure on one straight line, with every other
/// vertex of both figures on a single line parallel to it. With `same`
/// the two bases must coincide; otherwise they must be equal.
fn same_parallels(f: &Figure, g: &Figure, same: bool) -> Option<((Point, Point), (Point, Point))> {
    let edges = |h: &Figure| -> Vec<(usize, usize)> { (0..h.len()).map(|i| (i, (i + 1) % h.len())).collect() };
    for (i1, j1) in edges(f) {
        for (i2, j2) in edges(g) {
            let (p, q) = (f.vertex(i1), f.vertex(j1));
            let (r, s) = (g.vertex(i2), g.vertex(j2));
            if !collinear(p, q, r) || !collinear(p, q, s) {
                continue;
            }
            let ok_base = if same {
                (p == r && q == s) || (p == s && q == r)
            } else {
                eq_len((p, q), (r, s))
            };
            if !ok_base {
                continue;
            }
            let others: Vec<&Point> = (0..f.len())
                .filter(|&k| k != i1 && k != j1)
                .map(|k| f.vertex(k))
                .chain((0..g.len()).filter(|&k| k != i2 && k != j2).map(|k| g.vertex(k)))
                .collect();
            let o = others[0];
            if collinear(p, q, o) {
                continue;
            }
            let dir = q.sub(p);
            if others.iter().all(|x| dir.cross(&x.sub(o)).is_zero()) {
                return Some(((p.clone(), q.clone()), (r.clone(), s.clone())));
            }
        }
    }
    None
}

/// Checks the conclusion of theorem `id` on `bundle`.
pub fn check_theorem(id: &str, bundle: &Bundle) -> Result<Report> {
    let cx = Ctx { theorem: id };
    let claims = match id {
        "I.4" => {
            let t = cx.figures(bundle, &[3, 3], 0)?;
            let [a, b, c] = [0, 1, 2].map(|i| t[0].vertex(i));
            let [d, e, f] = [0, 1, 2].map(|i| t[1].vertex(i));
            cx.require(
                eq_len((a, b), (d, e))
                    && eq_len((a, c), (d, f))
                    && eq_angle(&cx.angle(b, a, c)?, &cx.angle(e, d, f)?),
                "two sides and the included angle are not equal",
            )?;
            vec![
                checks::len_eq("base BC = base EF", (b, c), (e, f)),
                checks::angle_eq("ABC = DEF", &cx.angle(a, b, c)?, &cx.angle(d, e, f)?),
                checks::angle_eq("ACB = DFE", &cx.angle(a, c, b)?, &cx.angle(d, f, e)?),
                checks::content_eq("triangle ABC = triangle DEF", &t[0], &t[1]),
            ]
        }
        "I.7" => {
            let p = cx.points(bundle, 4)?;
            let [a, b, c, d] = [&p[0], &p[1], &p[2], &p[3]];
            cx.require(a != b, "A and B coincide")?;
            cx.require(same_side(a, b, c, d), "C and D are not on one side of AB")?;
            cx.require(
                eq_len((c, a), (d, a)) && eq_len((c, b), (d, b)),
                "the lines from A and from B are not equal",
            )?;
            vec![checks::same_point("C and D are the same point", c, d)]
        }
        "I.8" => {
            let t = cx.figures(bundle, &[3, 3], 0)?;
            let [a, b, c] = [0, 1, 2].map(|i| t[0].vertex(i));
            let [d, e, f] = [0, 1, 2].map(|i| t[1].vertex(i));
            cx.require(
                eq_len((a, b), (d, e)) && eq_len((a, c), (d, f)) && eq_len((b, c), (e, f)),
                "the three sides are not equal in order",
            )?;
            vec![
                checks::angle_eq("BAC = EDF", &cx.angle(b, a, c)?, &cx.angle(e, d, f)?),
                checks::angle_eq("ABC = DEF", &cx.angle(a, b, c)?, &cx.angle(d, e, f)?),
                checks::angle_eq("ACB = DFE", &cx.angle(a, c, b)?, &cx.angle(d, f, e)?),
            ]
        }
        "I.13" => {
            let p = cx.points(bundle, 4)?;
            let [a, b, c, d] = [&p[0], &p[1], &p[2], &p[3]];
            cx.require(strictly_between(c, d, b), "B is not strictly between C and D")?;
            cx.require(!collinear(c, d, a), "A lies on CD")?;
            vec![two_right(
                "ABC + ABD = two right angles",
                &cx.angle(a, b, c)?,
                &cx.angle(a, b, d)?,
            )]
        }
        "I.14" => {
            let p = cx.points(bundle, 4)?;
            let [a, b, c, d] = [&p[0], &p[1], &p[2], &p[3]];
            cx.require(opposite_sides(a, b, c, d), "C and D are not on either side of AB")?;
            let (abc, abd) = (cx.angle(a, b, c)?, cx.angle(a, b, d)?);
            cx.require(
                two_right("", &abc, &abd).holds(),
                "ABC and ABD are not together two right angles",
            )?;
            vec![
                checks::collinear("CB and BD in a straight line", c, b, d),
                Claim::fact("B between C and D", strictly_between(c, d, b)),
            ]
        }
        "I.15" => {
            let p = cx.points(bundle, 5)?;
            let [a, b, c, d, e] = [&p[0], &p[1], &p[2], &p[3], &p[4]];
            cx.require(
                strictly_between(a, b, e) && strictly_between(c, d, e) && !collinear(a, b, c),
                "AB and CD do not cut one another at E",
            )?;
            vec![
                checks::angle_eq("AEC = DEB", &cx.angle(a, e, c)?, &cx.angle(d, e, b)?),
                checks::angle_eq("CEB = AED", &cx.angle(c, e, b)?, &cx.angle(a, e, d)?),
            ]
        }
        "I.16" | "I.32" => {
            let t = cx.figures(bundle, &[3], 1)?;
            let [a, b, c] = [0, 1, 2].map(|i| t[0].vertex(i));
            let d = &bundle.points[0];
            cx.require(strictly_between(b, d, c), "D is not on BC produced beyond C")?;
            let acd = cx.angle(a, c, d)?;
            let (cba, bac, acb) = (cx.angle(c, b, a)?, cx.angle(b, a, c)?, cx.angle(a, c, b)?);
            if id == "I.16" {
                vec![
                    checks::angle_gt("ACD > CBA", &acd, &cba),
                    checks::angle_gt("ACD > BAC", &acd, &bac),
                ]
            } else {
                vec![
                    checks::measure_eq(
                        "ACD = CAB + ABC",
                        &acd.measure(),
                        &bac.measure().add(&cba.measure()),
                    ),
                    checks::measure_eq(
                        "the three angles make two right angles",
                        &bac.measure().add(&cba.measure()).add(&acb.measure()),
                        &AngleMeasure::two_right(),
                    ),
                ]
            }
        }
        "I.20" => {
            let t = cx.figures(bundle, &[3], 0)?;
            let [a, b, c] = [0, 1, 2].map(|i| t[0].vertex(i));
            vec![
                Claim::positive("BA + AC > BC", length(b, a) + length(a, c) - length(b, c)),
                Claim::positive("AB + BC > AC", length(a, b) + length(b, c) - length(a, c)),
                Claim::positive("BC + CA > AB", length(b, c) + length(c, a) - length(a, b)),
            ]
        }
        "I.26" => {
            let t = cx.figures(bundle, &[3, 3], 0)?;
            let [a, b, c] = [0, 1, 2].map(|i| t[0].vertex(i));
            let [d, e, f] = [0, 1, 2].map(|i| t[1].vertex(i));
            cx.require(
                eq_angle(&cx.angle(a, b, c)?, &cx.angle(d, e, f)?)
                    && eq_angle(&cx.angle(a, c, b)?, &cx.angle(d, f, e)?)
                    && (eq_len((b, c), (e, f)) || eq_len((a, b), (d, e))),
                "two angles and a corresponding side are not equal",
            )?;
            vec![
                checks::len_eq("AB = DE", (a, b), (d, e)),
                checks::len_eq("AC = DF", (a, c), (d, f)),
                checks::len_eq("BC = EF", (b, c), (e, f)),
                checks::angle_eq("BAC = EDF", &cx.angle(b, a, c)?, &cx.angle(e, d, f)?),
            ]
        }
        "I.27" | "I.28" | "I.29" => {
            let p = cx.points(bundle, 6)?;
            let [a, b, c, d, e, f] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]];
            cx.require(c != d && e != f, "coincident points")?;
            cx.require(strictly_between(a, b, e), "E is not strictly between A and B")?;
            cx.require(collinear(c, d, f) && d != f, "F is not on CD apart from D")?;
            cx.require(opposite_sides(e, f, a, d), "A and D are not on either side of EF")?;
            let (aef, efd, bef) = (cx.angle(a, e, f)?, cx.angle(e, f, d)?, cx.angle(b, e, f)?);
            match id {
                "I.27" => {
                    cx.require(eq_angle(&aef, &efd), "the alternate angles are not equal")?;
                    lines_parallel_distinct("AB parallel to CD", (a, b), (c, d))
                }
                "I.28" => {
                    cx.require(
                        two_right("", &bef, &efd).holds(),
                        "the interior angles are not two right angles",
                    )?;
                    lines_parallel_distinct("AB parallel to CD", (a, b), (c, d))
                }
                _ => {
                    cx.require(
                        b.sub(a).cross(&d.sub(c)).is_zero() && !collinear(a, b, c),
                        "AB and CD are not parallel",
                    )?;
                    vec![
                        checks::angle_eq("AEF = EFD", &aef, &efd),
                        two_right("BEF + EFD = two right angles", &bef, &efd),
                    ]
                }
            }
        }
        "I.30" => {
            let p = cx.points(bundle, 6)?;
            let [a, b, c, d, e, f] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]];
            cx.require(a != b && c != d && e != f, "coincident points")?;
            let par = |x: &Point, y: &Point| y.sub(x).cross(&f.sub(e)).is_zero();
            cx.require(par(a, b) && par(c, d), "AB or CD is not parallel to EF")?;
            vec![checks::parallel("AB parallel to CD", (a, b), (c, d))]
        }
        "I.33" => {
            let p = cx.points(bundle, 4)?;
            let [a, b, c, d] = [&p[0], &p[1], &p[2], &p[3]];
            cx.require(a != b && !collinear(a, b, c), "AB and CD are not on distinct lines")?;
            cx.require(
                b.sub(a).cross(&d.sub(c)).is_zero()
                    && eq_len((a, b), (c, d))
                    && b.sub(a).dot(&d.sub(c)).is_positive(),
                "AB and CD are not equal, parallel and in the same direction",
            )?;
            vec![
                checks::len_eq("AC = BD", (a, c), (b, d)),
                checks::parallel("AC parallel to BD", (a, c), (b, d)),
            ]
        }
        "I.34" => {
            let f = cx.figures(bundle, &[4], 0)?;
            cx.parallelogram(&f[0])?;
            let [a, b, c, d] = [0, 1, 2, 3].map(|i| f[0].vertex(i));
            let abc = Figure::triangle(a.clone(), b.clone(), c.clone())?;
            let acd = Figure::triangle(a.clone(), c.clone(), d.clone())?;
            vec![
                checks::len_eq("AB = CD", (a, b), (c, d)),
                checks::len_eq("BC = DA", (b, c), (d, a)),
                checks::angle_eq("ABC = CDA", &cx.angle(a, b, c)?, &cx.angle(c, d, a)?),
                checks::angle_eq("BAD = DCB", &cx.angle(b, a, d)?, &cx.angle(d, c, b)?),
                checks::content_eq("the diameter AC bisects the area", &abc, &acd),
            ]
        }
        "I.35" | "I.36" | "I.37" | "I.38" | "I.41" => {
            let sizes: &[usize] = match id {
                "I.35" | "I.36" => &[4, 4],
                "I.37" | "I.38" => &[3, 3],
                _ => &[4, 3],
            };
            let f = cx.figures(bundle, sizes, 0)?;
            for g in f.iter().filter(|g| g.len() == 4) {
                cx.parallelogram(g)?;
            }
            let same = matches!(id, "I.35" | "I.37" | "I.41");
            let ((p, q), (r, s)) = same_parallels(&f[0], &f[1], same).ok_or_else(|| {
                cx.fail(if same {
                    "not on the same base and in the same parallels"
                } else {
                    "not on equal bases and in the same parallels"
                })
            })?;
            let base = checks::len_eq("the bases are equal", (&p, &q), (&r, &s));
            let conclusion = if id == "I.41" {
                checks::content_ratio("the parallelogram is double the triangle", &f[0], &f[1], 2)
            } else {
                checks::content_eq("the figures are equal in content", &f[0], &f[1])
            };
            vec![base, conclusion]
        }
        "I.43" => {
            let f = cx.figures(bundle, &[4], 1)?;
            cx.parallelogram(&f[0])?;
            let [a, b, c, d] = [0, 1, 2, 3].map(|i| f[0].vertex(i));
            let k = &bundle.points[0];
            cx.require(strictly_between(a, c, k), "K is not strictly inside the diameter AC")?;
            // E on AB, F on BC, G on CD, H on DA, from the parallels through K
            let e = a.offset(&b.sub(a).scaled(&ratio_along(a, c, k)));
            let h = a.offset(&d.sub(a).scaled(&ratio_along(a, c, k)));
            let f_ = h.offset(&b.sub(a));
            let g = e.offset(&d.sub(a));
            let first = Figure::new(vec![e, b.clone(), f_, k.clone()])?;
            let second = Figure::new(vec![h, k.clone(), g, d.clone()])?;
            vec![checks::content_eq("complement EBFK = complement HKGD", &first, &second)]
        }
        _ => return Err(Error::UnknownProposition(id.to_string())),
    };
    Ok(Report {
        theorem: id.to_string(),
        claims,
    })
}

/// The parameter `t` with `k = a + t (c - a)`.
fn ratio_along(a: &Point, c: &Point, k: &Point) -> Num {
    k.sub(a)
        .dot(&c.sub(a))
        .div(&a.dist_sq(c))
        .expect("A and C are distinct")
}
