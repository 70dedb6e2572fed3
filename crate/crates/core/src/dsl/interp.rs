//! Running checked scripts.

use std::collections::HashMap;
use std::fmt;

use dashu_int::IBig;
use dashu_ratio::RBig;

use super::ast::*;
use super::check::vertex_letters;
use crate::elements::{run, Claim, Ctx, Curve, CurveRef, Instance, Named, Pick, PropositionResult, Pt, Role, Trace};
use crate::error::{Error, Result};
use crate::geom::{self, Angle, Figure, Line, Object, Point, Ray, Segment, Side};
use crate::number::{parse_rational, Constructible as Num};

/// A construction error, at the statement that raised it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptError {
    pub span: Span,
    pub error: Error,
}

impl fmt::Display for ScriptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.span, self.error)
    }
}

impl std::error::Error for ScriptError {}

/// One `assert` and how it came out.
#[derive(Clone, Debug)]
pub struct Assertion {
    pub span: Span,
    pub claim: Claim,
}

/// Everything a script built.
#[derive(Clone, Debug)]
pub struct Outcome {
    /// Every named object, in definition order; members of proposition
    /// results are named `result.member`.
    pub objects: Vec<Named>,
    pub trace: Trace,
    pub assertions: Vec<Assertion>,
    /// Declared objects and the results of proposition calls, for drawing.
    drawn: Vec<Named>,
}

impl Outcome {
    /// All assertions hold.
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.claim.holds())
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.iter().find(|n| n.name == name).map(|n| &n.object)
    }

    pub fn point(&self, name: &str) -> Option<&Point> {
        match self.get(name) {
            Some(Object::Point(p)) => Some(p),
            _ => None,
        }
    }

    /// The script as a proposition result: declared objects as given,
    /// proposition results as results, assertions as its verification.
    pub fn to_result(&self) -> PropositionResult {
        PropositionResult {
            id: self.trace.proposition.clone(),
            objects: self.drawn.clone(),
            trace: self.trace.clone(),
            verification: self.assertions.iter().map(|a| a.claim.clone()).collect(),
        }
    }

    /// One line per assertion, then a verdict.
    pub fn report(&self) -> String {
        let mut out = String::new();
        for a in &self.assertions {
            out.push_str(&format!("{}: {}\n", a.span, a.claim));
        }
        let failed = self.assertions.iter().filter(|a| !a.claim.holds()).count();
        out.push_str(&format!(
            "{} assertion{}, {failed} failed\n",
            self.assertions.len(),
            if self.assertions.len() == 1 { "" } else { "s" }
        ));
        out
    }
}

#[derive(Clone)]
struct Binding {
    object: Object,
    /// Labels of the points the object was made from.
    refs: Vec<String>,
}

struct Interp {
    ctx: Ctx,
    env: HashMap<String, Binding>,
    labels: HashMap<String, Pt>,
    objects: Vec<Named>,
    drawn: Vec<Named>,
    assertions: Vec<Assertion>,
}

/// Runs a script that passed the checker.
pub(crate) fn interpret(script: &Script) -> std::result::Result<Outcome, ScriptError> {
    let mut it = Interp {
        ctx: Ctx::new("script"),
        env: HashMap::new(),
        labels: HashMap::new(),
        objects: Vec::new(),
        drawn: Vec::new(),
        assertions: Vec::new(),
    };
    for st in &script.statements {
        it.statement(st).map_err(|error| ScriptError { span: st.span, error })?;
    }
    Ok(Outcome {
        objects: it.objects,
        trace: it.ctx.finish(),
        assertions: it.assertions,
        drawn: it.drawn,
    })
}

/// The exact value of a coordinate.
pub(crate) fn coord(c: &Coord) -> Result<Num> {
    Ok(match c {
        Coord::Num(s) => Num::from_rational(decimal(s)?),
        Coord::Sqrt(c) => coord(c)?.sqrt_nonneg()?,
        Coord::Group(c) => coord(c)?,
        Coord::Neg(c) => -coord(c)?,
        Coord::Bin(a, op, b) => {
            let (a, b) = (coord(a)?, coord(b)?);
            match op {
                Op::Add => &a + &b,
                Op::Sub => &a - &b,
                Op::Mul => &a * &b,
                Op::Div => a.div(&b)?,
            }
        }
    })
}

fn decimal(s: &str) -> Result<RBig> {
    match s.split_once('.') {
        None => parse_rational(s),
        Some((whole, frac)) => {
            let n = parse_rational(&format!("{whole}{frac}"))?;
            let scale = IBig::from(10u8).pow(frac.len());
            Ok(n / RBig::from(scale))
        }
    }
}

pub(crate) fn point_lit(p: &PointLit) -> Result<Point> {
    Ok(Point::new(coord(&p.x)?, coord(&p.y)?))
}

/// The object of `kind` through `pts`, as a literal list describes it.
pub(crate) fn from_points(kind: Kind, pts: Vec<Point>) -> Result<Object> {
    let two = |pts: Vec<Point>| -> Result<(Point, Point)> {
        let mut it = pts.into_iter();
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => Ok((a, b)),
            _ => Err(Error::PreconditionViolated(format!("a {} takes 2 points", kind.name()))),
        }
    };
    Ok(match kind {
        Kind::Point => {
            return Err(Error::PreconditionViolated("a point is written `(x, y)`".into()));
        }
        Kind::Segment => {
            let (a, b) = two(pts)?;
            Object::Segment(Segment::new(a, b)?)
        }
        Kind::Line => {
            let (a, b) = two(pts)?;
            Object::Line(Line::new(a, b)?)
        }
        Kind::Ray => {
            let (a, b) = two(pts)?;
            Object::Ray(Ray::new(a, b)?)
        }
        Kind::Circle => {
            let (c, t) = two(pts)?;
            Object::Circle(geom::circle(&c, &t)?)
        }
        Kind::Angle => match <[Point; 3]>::try_from(pts) {
            Ok([a, v, b]) => Object::Angle(Angle::new(a, v, b)?),
            Err(_) => return Err(Error::PreconditionViolated("an angle takes 3 points".into())),
        },
        Kind::Figure => Object::Figure(Figure::new(pts)?),
    })
}

fn kind_of(o: &Object) -> Kind {
    Kind::parse(o.kind()).expect("object kinds are script kinds")
}

impl Interp {
    fn bind(&mut self, name: &str, object: Object, refs: Vec<String>, role: Option<Role>) {
        let named = Named {
            name: name.to_string(),
            object: object.clone(),
            role: role.unwrap_or(Role::Auxiliary),
        };
        if role.is_some() {
            self.drawn.push(named.clone());
        }
        self.objects.push(named);
        self.env.insert(name.to_string(), Binding { object, refs });
    }

    fn binding(&self, name: &Ident) -> Result<&Binding> {
        self.env
            .get(&name.name)
            .ok_or_else(|| Error::PreconditionViolated(format!("`{}` is not defined", name.name)))
    }

    fn statement(&mut self, st: &Statement) -> Result<()> {
        match &st.kind {
            StmtKind::Let { kind, name, value } => self.define(*kind, &name.name, value),
            StmtKind::Assert { pred, args } => {
                let claim = self.assertion(*pred, args, &st.to_string())?;
                self.assertions.push(Assertion { span: st.span, claim });
                Ok(())
            }
        }
    }

    fn define(&mut self, kind: Kind, name: &str, value: &Expr) -> Result<()> {
        match value {
            Expr::Literal(Arg::Point(p)) => {
                let at = point_lit(p)?;
                let pt = self.ctx.given(name, at.clone());
                self.labels.insert(name.to_string(), pt.clone());
                self.bind(name, Object::Point(at), vec![pt.label], Some(Role::Given));
            }
            Expr::Literal(Arg::List(items, _)) => {
                let letters = vertex_letters(name, items);
                let mut refs = Vec::new();
                let mut pts = Vec::new();
                for (i, item) in items.iter().enumerate() {
                    let pt = match (item, &letters) {
                        (Arg::Point(p), Some(l)) => {
                            let at = point_lit(p)?;
                            let pt = self.ctx.given(&l[i], at.clone());
                            self.labels.insert(l[i].clone(), pt.clone());
                            self.bind(&l[i], Object::Point(at), vec![pt.label.clone()], Some(Role::Given));
                            pt
                        }
                        _ => self.pt(item)?,
                    };
                    refs.push(pt.label);
                    pts.push(pt.at);
                }
                let object = from_points(kind, pts)?;
                self.bind(name, object, refs, Some(Role::Given));
            }
            Expr::Literal(Arg::Name(other)) => {
                let b = self.binding(other)?.clone();
                self.bind(name, b.object, b.refs, None);
            }
            Expr::Prim {
                prim, args, select, ..
            } => self.primitive(name, *prim, args, select.as_ref())?,
            Expr::Prop {
                id,
                args,
                strategy,
                side,
                ..
            } => self.proposition(kind, name, &id.name, args, strategy.as_ref(), *side)?,
        }
        Ok(())
    }

    /// A labeled point for an argument.
    fn pt(&mut self, a: &Arg) -> Result<Pt> {
        match a {
            Arg::Name(id) => {
                if let Some(pt) = self.labels.get(&id.name) {
                    return Ok(pt.clone());
                }
                match &self.binding(id)?.object {
                    Object::Point(p) => Ok(Pt {
                        label: id.name.clone(),
                        at: p.clone(),
                    }),
                    o => Err(Error::PreconditionViolated(format!("`{}` is a {}, not a point", id.name, o.kind()))),
                }
            }
            Arg::Point(p) => Ok(Pt {
                label: p.to_string(),
                at: point_lit(p)?,
            }),
            Arg::List(..) => Err(Error::PreconditionViolated("expected a point, found a list".into())),
        }
    }

    /// Two labeled points fixing a straight argument.
    fn straight(&mut self, a: &Arg) -> Result<(Pt, Pt)> {
        let (p, q, refs, name) = match a {
            Arg::List(items, _) if items.len() == 2 => return Ok((self.pt(&items[0])?, self.pt(&items[1])?)),
            Arg::Name(id) => {
                let b = self.binding(id)?;
                let (p, q) = match &b.object {
                    Object::Segment(s) => (s.a.clone(), s.b.clone()),
                    Object::Line(l) => (l.p.clone(), l.q.clone()),
                    Object::Ray(r) => (r.origin.clone(), r.through.clone()),
                    o => {
                        return Err(Error::PreconditionViolated(format!(
                            "`{}` is a {}, not straight",
                            id.name,
                            o.kind()
                        )))
                    }
                };
                (p, q, b.refs.clone(), id.name.clone())
            }
            _ => return Err(Error::PreconditionViolated("expected a straight line".into())),
        };
        let (lp, lq) = match refs.as_slice() {
            [a, b] => (a.clone(), b.clone()),
            _ => (format!("{name}.1"), format!("{name}.2")),
        };
        Ok((Pt { label: lp, at: p }, Pt { label: lq, at: q }))
    }

    fn curve(&mut self, a: &Arg) -> Result<CurveRef> {
        if let Arg::Name(id) = a {
            let b = self.binding(id)?;
            if let Object::Circle(c) = &b.object {
                let refs = if b.refs.is_empty() { vec![id.name.clone()] } else { b.refs.clone() };
                return Ok(CurveRef {
                    curve: Curve::Circle(c.clone()),
                    refs,
                });
            }
        }
        let (p, q) = self.straight(a)?;
        self.ctx.line(&p, &q)
    }

    fn pick(&mut self, sel: Option<&Selector>) -> Result<Pick> {
        Ok(match sel {
            None => Pick::Only,
            Some(Selector::First) => Pick::First,
            Some(Selector::Second) => Pick::Second,
            Some(Selector::Upper) => Pick::Upper,
            Some(Selector::Lower) => Pick::Lower,
            Some(Selector::LeftOf(a)) | Some(Selector::RightOf(a)) => {
                let (from, to) = self.straight(a)?;
                let side = if matches!(sel, Some(Selector::LeftOf(_))) { Side::Left } else { Side::Right };
                Pick::Side { from, to, side }
            }
            Some(Selector::OppositeSide(l, p)) => {
                let (from, to) = self.straight(l)?;
                Pick::OppositeSide { from, to, of: self.pt(p)? }
            }
            Some(Selector::SameSide(l, p)) => {
                let (from, to) = self.straight(l)?;
                Pick::SameSide { from, to, of: self.pt(p)? }
            }
            Some(Selector::Along(a, b)) => Pick::Along {
                from: self.pt(a)?,
                toward: self.pt(b)?,
            },
            Some(Selector::Beyond(a, b)) => Pick::Beyond {
                from: self.pt(a)?,
                past: self.pt(b)?,
            },
            Some(Selector::Not(a)) => Pick::Not(self.pt(a)?),
        })
    }

    fn last_object(&self) -> Object {
        self.ctx
            .trace()
            .steps
            .last()
            .and_then(|s| s.object.clone())
            .expect("the step just recorded an object")
    }

    fn primitive(&mut self, name: &str, prim: Prim, args: &[Arg], sel: Option<&Selector>) -> Result<()> {
        match prim {
            Prim::Join | Prim::Extend | Prim::Circle => {
                let (a, b) = (self.pt(&args[0])?, self.pt(&args[1])?);
                match prim {
                    Prim::Join => {
                        self.ctx.join(&a, &b)?;
                    }
                    Prim::Extend => {
                        self.ctx.extend(&a, &b)?;
                    }
                    _ => {
                        self.ctx.circle(&a, &b)?;
                    }
                }
                let object = self.last_object();
                self.bind(name, object, vec![a.label, b.label], None);
            }
            Prim::Intersect => {
                let (x, y) = (self.curve(&args[0])?, self.curve(&args[1])?);
                let pick = self.pick(sel)?;
                let pt = self.ctx.meet(name, &x, &y, pick)?;
                self.labels.insert(name.to_string(), pt.clone());
                self.bind(name, Object::Point(pt.at), vec![pt.label], None);
            }
        }
        Ok(())
    }

    fn proposition(
        &mut self,
        kind: Kind,
        name: &str,
        id: &str,
        args: &[Arg],
        strategy: Option<&Ident>,
        side: Option<Side>,
    ) -> Result<()> {
        let mut objects = Vec::new();
        let mut inputs = Vec::new();
        for a in args {
            match a {
                Arg::Name(n) => {
                    objects.push(self.binding(n)?.object.clone());
                    inputs.push(n.name.clone());
                }
                _ => {
                    let pt = self.pt(a)?;
                    objects.push(Object::Point(pt.at));
                    inputs.push(pt.label);
                }
            }
        }
        let inst = Instance::new(objects).on(side.unwrap_or_default());
        let r = run(id, strategy.map(|s| s.name.as_str()), &inst)?;
        let bound = r
            .objects
            .iter()
            .find(|n| n.role == Role::Result && kind_of(&n.object) == kind)
            .ok_or_else(|| Error::PreconditionViolated(format!("{id} gives no {}", kind.name())))?
            .object
            .clone();
        let outputs: Vec<(&str, Point)> = r
            .objects
            .iter()
            .filter_map(|n| match (&n.object, n.role) {
                (Object::Point(p), Role::Result) => Some((n.name.as_str(), p.clone())),
                _ => None,
            })
            .collect();
        let pts = self.ctx.record_call(r.trace.clone(), inputs, &outputs);
        self.bind(name, bound, vec![], None);
        for n in &r.objects {
            let member = format!("{name}.{}", n.name);
            let refs = match pts.iter().zip(&outputs).find(|(_, o)| o.0 == n.name) {
                Some((pt, _)) => {
                    self.labels.insert(member.clone(), pt.clone());
                    vec![pt.label.clone()]
                }
                None => vec![],
            };
            self.bind(&member, n.object.clone(), refs, None);
            if n.role == Role::Result && !matches!(n.object, Object::Point(_)) {
                self.drawn.push(Named {
                    name: member,
                    object: n.object.clone(),
                    role: Role::Result,
                });
            }
        }
        Ok(())
    }

    /// The object of `kind` an assertion argument stands for.
    fn object(&mut self, a: &Arg, kind: Option<Kind>) -> Result<Object> {
        match a {
            Arg::Name(id) => Ok(self.binding(id)?.object.clone()),
            Arg::Point(p) => Ok(Object::Point(point_lit(p)?)),
            Arg::List(items, _) => {
                let pts = items.iter().map(|i| self.pt(i).map(|p| p.at)).collect::<Result<Vec<_>>>()?;
                from_points(kind.unwrap_or(Kind::Line), pts)
            }
        }
    }

    fn assertion(&mut self, pred: Pred, args: &[Arg], text: &str) -> Result<Claim> {
        let bad = |what: &str| Error::PreconditionViolated(format!("{} needs {what}", pred.name()));
        Ok(match pred {
            Pred::SegEq => match (self.object(&args[0], Some(Kind::Segment))?, self.object(&args[1], Some(Kind::Segment))?) {
                (Object::Segment(s), Object::Segment(t)) => Claim::zero(text, &s.length_sq() - &t.length_sq()),
                _ => return Err(bad("segments")),
            },
            Pred::AngleEq => match (self.object(&args[0], Some(Kind::Angle))?, self.object(&args[1], Some(Kind::Angle))?) {
                (Object::Angle(a), Object::Angle(b)) => Claim::fact(text, geom::angle_eq(&a, &b)),
                _ => return Err(bad("angles")),
            },
            Pred::AreaEq => match (self.object(&args[0], Some(Kind::Figure))?, self.object(&args[1], Some(Kind::Figure))?) {
                (Object::Figure(f), Object::Figure(g)) => Claim::zero(text, &f.content() - &g.content()),
                _ => return Err(bad("figures")),
            },
            Pred::Parallel => {
                let (a, b) = (self.straight(&args[0])?, self.straight(&args[1])?);
                let cross = a.1.at.sub(&a.0.at).cross(&b.1.at.sub(&b.0.at));
                Claim::zero(text, cross)
            }
            Pred::RightAngle => match self.object(&args[0], Some(Kind::Angle))? {
                Object::Angle(a) => Claim::fact(text, geom::is_right(&a)),
                _ => return Err(bad("an angle")),
            },
            Pred::Collinear => {
                let (p, q, r) = (self.pt(&args[0])?, self.pt(&args[1])?, self.pt(&args[2])?);
                Claim::fact(text, geom::collinear(&p.at, &q.at, &r.at))
            }
        })
    }
}

