use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::number::Sign;
use crate::geom::{
    self, intersect_circles, intersect_line_circle, intersect_lines, Circle, End, Isometry, Line,
    LineMeet, Object, Point, Segment, Side,
};

/// A point together with the letter it goes by in a construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pt {
    pub label: String,
    pub at: Point,
}

/// Direction of a ray starting at a known point.
#[derive(Clone, Copy, Debug)]
pub enum Dir<'a> {
    Toward(&'a Pt),
    AwayFrom(&'a Pt),
}

impl Dir<'_> {
    pub fn point(&self) -> &Pt {
        match self {
            Dir::Toward(p) | Dir::AwayFrom(p) => p,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Dir::Toward(p) => Dir::AwayFrom(p),
            Dir::AwayFrom(p) => Dir::Toward(p),
        }
    }

    /// Direction vector for a ray starting at `origin`.
    pub fn vector(&self, origin: &Point) -> geom::Vector {
        match self {
            Dir::Toward(p) => p.at.sub(origin),
            Dir::AwayFrom(p) => origin.sub(&p.at),
        }
    }
}

/// A line or circle usable in an intersection, with the points defining it.
#[derive(Clone, Debug)]
pub struct CurveRef {
    pub curve: Curve,
    pub refs: Vec<String>,
}

#[derive(Clone, Debug)]
pub enum Curve {
    Line(Line),
    Circle(Circle),
}

/// Rule selecting one point among the intersections of two curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pick {
    /// Least point in the canonical `(x, y)` order.
    First,
    /// Second point in canonical order.
    Second,
    /// The curves must meet exactly once.
    Only,
    /// The one point higher than every other.
    Upper,
    /// The one point lower than every other.
    Lower,
    /// Strictly on the given side of the directed line `from → to`.
    Side { from: Pt, to: Pt, side: Side },
    /// On the other side of the line `from to` than `of`.
    OppositeSide { from: Pt, to: Pt, of: Pt },
    /// On the same side of the line `from to` as `of`.
    SameSide { from: Pt, to: Pt, of: Pt },
    /// On the closed ray from `from` through `toward`.
    Along { from: Pt, toward: Pt },
    /// Past `past` when travelling from `from`.
    Beyond { from: Pt, past: Pt },
    /// Any intersection other than this point.
    Not(Pt),
}

impl Pick {
    fn refs(&self) -> Vec<String> {
        match self {
            Pick::First | Pick::Second | Pick::Only | Pick::Upper | Pick::Lower => vec![],
            Pick::Side { from, to, .. } => vec![from.label.clone(), to.label.clone()],
            Pick::OppositeSide { from, to, of } | Pick::SameSide { from, to, of } => {
                vec![from.label.clone(), to.label.clone(), of.label.clone()]
            }
            Pick::Along { from, toward } => vec![from.label.clone(), toward.label.clone()],
            Pick::Beyond { from, past } => vec![from.label.clone(), past.label.clone()],
            Pick::Not(p) => vec![p.label.clone()],
        }
    }

    fn describe(&self) -> String {
        match self {
            Pick::First => "first".into(),
            Pick::Second => "second".into(),
            Pick::Only => "only".into(),
            Pick::Upper => "side upper".into(),
            Pick::Lower => "side lower".into(),
            Pick::Side { from, to, side } => {
                let s = match side {
                    Side::Left => "left_of",
                    Side::Right => "right_of",
                };
                format!("side {s}({}, {})", from.label, to.label)
            }
            Pick::OppositeSide { from, to, of } => {
                format!("opposite_side({}{}, {})", from.label, to.label, of.label)
            }
            Pick::SameSide { from, to, of } => {
                format!("same_side({}{}, {})", from.label, to.label, of.label)
            }
            Pick::Along { from, toward } => format!("along({}, {})", from.label, toward.label),
            Pick::Beyond { from, past } => format!("beyond({}, {})", from.label, past.label),
            Pick::Not(p) => format!("not({})", p.label),
        }
    }

    /// Applies the rule to candidates already in canonical order.
    pub fn select(&self, candidates: Vec<Point>) -> Result<Point> {
        let keep = |f: &dyn Fn(&Point) -> bool| -> Result<Point> {
            let mut it = candidates.iter().filter(|p| f(p));
            match (it.next(), it.next()) {
                (Some(p), None) => Ok(p.clone()),
                _ => Err(Error::NoSuchIntersection),
            }
        };
        match self {
            Pick::First => candidates.first().cloned().ok_or(Error::NoSuchIntersection),
            Pick::Second => candidates.get(1).cloned().ok_or(Error::NoSuchIntersection),
            Pick::Upper | Pick::Lower => {
                let key = |p: &Point| if *self == Pick::Upper { p.y.clone() } else { -&p.y };
                let best = candidates.iter().map(key).max().ok_or(Error::NoSuchIntersection)?;
                keep(&|p| key(p) == best)
            }
            Pick::Only => match candidates.as_slice() {
                [p] => Ok(p.clone()),
                _ => Err(Error::NoSuchIntersection),
            },
            Pick::Side { from, to, side } => keep(&|p| geom::on_side(&from.at, &to.at, p, *side)),
            Pick::OppositeSide { from, to, of } => {
                let s = geom::side_of(&from.at, &to.at, &of.at)
                    .ok_or_else(|| Error::DegenerateInput(format!("{} lies on the line", of.label)))?;
                keep(&|p| geom::on_side(&from.at, &to.at, p, s.opposite()))
            }
            Pick::SameSide { from, to, of } => {
                let s = geom::side_of(&from.at, &to.at, &of.at)
                    .ok_or_else(|| Error::DegenerateInput(format!("{} lies on the line", of.label)))?;
                keep(&|p| geom::on_side(&from.at, &to.at, p, s))
            }
            Pick::Along { from, toward } => {
                keep(&|p| geom::dot_sign(&from.at, p, &from.at, &toward.at) != Sign::Negative)
            }
            Pick::Beyond { from, past } => {
                keep(&|p| geom::dot_sign(&past.at, p, &from.at, &past.at) == Sign::Positive)
            }
            Pick::Not(q) => keep(&|p| *p != q.at),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// Postulate 1.
    Join,
    /// Postulate 2.
    Extend,
    /// Postulate 3; `transferred` marks a radius carried over from elsewhere.
    Circle { transferred: bool },
    PickIntersection(Pick),
    /// Placing a figure by a rigid motion.
    Superpose,
    /// A call to an earlier proposition.
    SubConstruction(String),
}

#[derive(Clone, Debug)]
pub struct Step {
    pub kind: StepKind,
    pub inputs: Vec<String>,
    pub outputs: Vec<String>,
    pub object: Option<Object>,
    pub sub: Option<Trace>,
    /// Output points, in order, for steps that produce points.
    pub points: Vec<Point>,
}

/// The ordered record of one construction.
#[derive(Clone, Debug, Default)]
pub struct Trace {
    pub proposition: String,
    pub given: Vec<(String, Point)>,
    pub steps: Vec<Step>,
}

/// Postulate, pick and call counts of a trace.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counts {
    pub joins: usize,
    pub extends: usize,
    pub circles: usize,
    pub picks: usize,
    pub superpositions: usize,
    pub subconstructions: usize,
    pub max_radical_depth: u32,
}

impl Counts {
    pub fn postulate_steps(&self) -> usize {
        self.joins + self.extends + self.circles
    }
}

impl Trace {
    /// Counts of this level only; calls count once each.
    pub fn direct_counts(&self) -> Counts {
        let mut c = Counts::default();
        for s in &self.steps {
            c.tally(s);
        }
        c
    }

    /// Counts over this level and every nested call.
    pub fn counts(&self) -> Counts {
        let mut c = Counts::default();
        self.accumulate(&mut c);
        c
    }

    fn accumulate(&self, c: &mut Counts) {
        for (_, p) in &self.given {
            c.max_radical_depth = c.max_radical_depth.max(p.radical_depth());
        }
        for s in &self.steps {
            c.tally(s);
            if let Some(sub) = &s.sub {
                sub.accumulate(c);
            }
        }
    }

    pub fn superposition_count(&self) -> usize {
        self.counts().superpositions
    }

    /// Every step only refers to labels introduced before it.
    pub fn is_well_formed(&self) -> bool {
        let mut known: BTreeSet<&str> = self.given.iter().map(|(l, _)| l.as_str()).collect();
        for s in &self.steps {
            if !s.inputs.iter().all(|i| known.contains(i.as_str())) {
                return false;
            }
            if let Some(sub) = &s.sub {
                if sub.given.len() != s.inputs.len() || !sub.is_well_formed() {
                    return false;
                }
            }
            for o in &s.outputs {
                known.insert(o.as_str());
            }
        }
        true
    }

    /// Deterministic text form; nested calls are indented.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out, 0);
        out
    }

    fn write_text(&self, out: &mut String, indent: usize) {
        let pad = "  ".repeat(indent);
        let _ = writeln!(out, "{pad}construction {}", self.proposition);
        for (l, p) in &self.given {
            let _ = writeln!(out, "{pad}  given {l} = {}", approx_point(p));
        }
        for s in &self.steps {
            let _ = write!(out, "{pad}  ");
            match &s.kind {
                StepKind::Join => {
                    let _ = write!(out, "join {}", s.inputs.join(" "));
                }
                StepKind::Extend => {
                    let _ = write!(out, "extend {} beyond {}", s.inputs[0], s.inputs[1]);
                }
                StepKind::Circle { transferred: false } => {
                    let _ = write!(out, "circle center {} through {}", s.inputs[0], s.inputs[1]);
                }
                StepKind::Circle { transferred: true } => {
                    let _ = write!(
                        out,
                        "circle center {} radius {}{} (transferred)",
                        s.inputs[0], s.inputs[1], s.inputs[2]
                    );
                }
                StepKind::PickIntersection(p) => {
                    let _ = write!(out, "intersect [{}] {}", s.inputs.join(" "), p.describe());
                }
                StepKind::Superpose => {
                    let _ = write!(out, "superpose [{}]", s.inputs.join(" "));
                }
                StepKind::SubConstruction(id) => {
                    let _ = write!(out, "apply {id} [{}]", s.inputs.join(" "));
                }
            }
            if !s.outputs.is_empty() {
                let _ = write!(out, " -> {}", s.outputs.join(" "));
            }
            for (l, p) in s.outputs.iter().zip(&s.points) {
                let _ = write!(out, " {l}={}", approx_point(p));
            }
            out.push('\n');
            if let Some(sub) = &s.sub {
                sub.write_text(out, indent + 2);
            }
        }
    }
}

impl Counts {
    fn tally(&mut self, s: &Step) {
        match s.kind {
            StepKind::Join => self.joins += 1,
            StepKind::Extend => self.extends += 1,
            StepKind::Circle { .. } => self.circles += 1,
            StepKind::PickIntersection(_) => self.picks += 1,
            StepKind::Superpose => self.superpositions += 1,
            StepKind::SubConstruction(_) => self.subconstructions += 1,
        }
        for p in &s.points {
            self.max_radical_depth = self.max_radical_depth.max(p.radical_depth());
        }
        if let Some(o) = &s.object {
            self.max_radical_depth = self.max_radical_depth.max(o.radical_depth());
        }
    }
}

fn approx_point(p: &Point) -> String {
    format!("({:.6}, {:.6})", p.x.to_f64(), p.y.to_f64())
}

/// Construction context: hands out fresh labels and records steps.
#[derive(Debug)]
pub struct Ctx {
    trace: Trace,
    used: BTreeSet<String>,
}

impl Ctx {
    pub fn new(proposition: &str) -> Ctx {
        Ctx {
            trace: Trace {
                proposition: proposition.to_string(),
                ..Trace::default()
            },
            used: BTreeSet::new(),
        }
    }

    pub fn finish(self) -> Trace {
        self.trace
    }

    pub fn trace(&self) -> &Trace {
        &self.trace
    }

    fn fresh(&mut self, hint: &str) -> String {
        let mut label = hint.to_string();
        let mut n = 2;
        while self.used.contains(&label) {
            label = format!("{hint}{n}");
            n += 1;
        }
        self.used.insert(label.clone());
        label
    }

    /// Introduces a given point (or one "taken at random").
    pub fn given(&mut self, hint: &str, at: Point) -> Pt {
        let label = self.fresh(hint);
        self.trace.given.push((label.clone(), at.clone()));
        Pt { label, at }
    }

    fn push(&mut self, kind: StepKind, inputs: Vec<String>, outputs: Vec<String>, object: Option<Object>, points: Vec<Point>) {
        self.trace.steps.push(Step {
            kind,
            inputs,
            outputs,
            object,
            sub: None,
            points,
        });
    }

    /// Postulate 1.
    pub fn join(&mut self, a: &Pt, b: &Pt) -> Result<Segment> {
        let s = geom::join_segment(&a.at, &b.at)?;
        let name = format!("{}{}", a.label, b.label);
        self.push(
            StepKind::Join,
            vec![a.label.clone(), b.label.clone()],
            vec![name],
            Some(Object::Segment(s.clone())),
            vec![],
        );
        Ok(s)
    }

    /// Postulate 2: produce `from → past` beyond `past`.
    pub fn extend(&mut self, from: &Pt, past: &Pt) -> Result<CurveRef> {
        let s = geom::join_segment(&from.at, &past.at)?;
        let ray = geom::extend(&s, End::B);
        self.push(
            StepKind::Extend,
            vec![from.label.clone(), past.label.clone()],
            vec![],
            Some(Object::Ray(ray.clone())),
            vec![],
        );
        Ok(CurveRef {
            curve: Curve::Line(ray.line()),
            refs: vec![from.label.clone(), past.label.clone()],
        })
    }

    /// Postulate 3.
    pub fn circle(&mut self, center: &Pt, through: &Pt) -> Result<CurveRef> {
        let c = geom::circle(&center.at, &through.at)?;
        self.push(
            StepKind::Circle { transferred: false },
            vec![center.label.clone(), through.label.clone()],
            vec![],
            Some(Object::Circle(c.clone())),
            vec![],
        );
        Ok(CurveRef {
            curve: Curve::Circle(c),
            refs: vec![center.label.clone(), through.label.clone()],
        })
    }

    /// A circle whose radius is the length of `r1 r2`, drawn elsewhere.
    pub fn circle_radius(&mut self, center: &Pt, r1: &Pt, r2: &Pt) -> Result<CurveRef> {
        let c = geom::Circle::with_radius_sq(center.at.clone(), r1.at.dist_sq(&r2.at))?;
        self.push(
            StepKind::Circle { transferred: true },
            vec![center.label.clone(), r1.label.clone(), r2.label.clone()],
            vec![],
            Some(Object::Circle(c.clone())),
            vec![],
        );
        Ok(CurveRef {
            curve: Curve::Circle(c),
            refs: vec![center.label.clone(), r1.label.clone(), r2.label.clone()],
        })
    }

    /// The straight line through two labeled points, as already drawn.
    pub fn line(&self, a: &Pt, b: &Pt) -> Result<CurveRef> {
        Ok(CurveRef {
            curve: Curve::Line(geom::join(&a.at, &b.at)?),
            refs: vec![a.label.clone(), b.label.clone()],
        })
    }

    /// Picks one intersection point of two curves.
    pub fn meet(&mut self, hint: &str, a: &CurveRef, b: &CurveRef, pick: Pick) -> Result<Pt> {
        let candidates = intersections(&a.curve, &b.curve)?;
        let at = pick.select(candidates)?;
        let label = self.fresh(hint);
        let mut inputs = a.refs.clone();
        inputs.extend(b.refs.iter().cloned());
        inputs.extend(pick.refs());
        self.push(
            StepKind::PickIntersection(pick),
            inputs,
            vec![label.clone()],
            None,
            vec![at.clone()],
        );
        Ok(Pt { label, at })
    }

    /// Records a rigid motion carrying `src.0` to `origin` and `src.1` onto
    /// the ray from `origin` in direction `dir`, and returns the labeled
    /// images of `carried`. `side` is where the left of `src` lands.
    pub fn superpose(
        &mut self,
        src: (&Pt, &Pt),
        origin: &Pt,
        dir: Dir<'_>,
        side: Side,
        carried: &[(&Pt, &str)],
    ) -> Result<(Isometry, Vec<Pt>)> {
        let from = Segment::new(src.0.at.clone(), src.1.at.clone())?;
        let v = dir.vector(&origin.at);
        let k = from.length_sq().div(&v.norm_sq())?.sqrt_nonneg()?;
        let to = Segment::new(origin.at.clone(), origin.at.offset(&v.scaled(&k)))?;
        let m = geom::superpose(&from, &to, side)?;
        let mut inputs = vec![
            src.0.label.clone(),
            src.1.label.clone(),
            origin.label.clone(),
            dir.point().label.clone(),
        ];
        let mut outs = Vec::new();
        for (p, hint) in carried {
            if !inputs.contains(&p.label) {
                inputs.push(p.label.clone());
            }
            let at = m.apply(&p.at);
            let label = self.fresh(hint);
            outs.push(Pt { label, at });
        }
        self.push(
            StepKind::Superpose,
            inputs,
            outs.iter().map(|p| p.label.clone()).collect(),
            None,
            outs.iter().map(|p| p.at.clone()).collect(),
        );
        Ok((m, outs))
    }

    /// Runs an earlier proposition in its own context.
    ///
    /// `body` receives the child context and the input coordinates and must
    /// declare its givens in the same order as `inputs`. The points it
    /// returns are relabeled in this context using `hints`.
    pub fn call(
        &mut self,
        id: &str,
        inputs: &[&Pt],
        hints: &[&str],
        body: impl FnOnce(&mut Ctx, &[Point]) -> Result<Vec<Pt>>,
    ) -> Result<Vec<Pt>> {
        let mut child = Ctx::new(id);
        let coords: Vec<Point> = inputs.iter().map(|p| p.at.clone()).collect();
        let outs = body(&mut child, &coords)?;
        debug_assert_eq!(outs.len(), hints.len());
        let mut result = Vec::with_capacity(outs.len());
        for (o, h) in outs.into_iter().zip(hints) {
            let label = self.fresh(h);
            result.push(Pt { label, at: o.at });
        }
        self.trace.steps.push(Step {
            kind: StepKind::SubConstruction(id.to_string()),
            inputs: inputs.iter().map(|p| p.label.clone()).collect(),
            outputs: result.iter().map(|p| p.label.clone()).collect(),
            object: None,
            sub: Some(child.finish()),
            points: result.iter().map(|p| p.at.clone()).collect(),
        });
        Ok(result)
    }
}

impl Ctx {
    /// Records a finished run of an earlier proposition. The points in
    /// `outputs` are labeled here from their hints.
    pub fn record_call(&mut self, sub: Trace, inputs: Vec<String>, outputs: &[(&str, Point)]) -> Vec<Pt> {
        let result: Vec<Pt> = outputs
            .iter()
            .map(|(hint, at)| Pt {
                label: self.fresh(hint),
                at: at.clone(),
            })
            .collect();
        self.trace.steps.push(Step {
            kind: StepKind::SubConstruction(sub.proposition.clone()),
            inputs,
            outputs: result.iter().map(|p| p.label.clone()).collect(),
            object: None,
            sub: Some(sub),
            points: result.iter().map(|p| p.at.clone()).collect(),
        });
        result
    }
}

fn intersections(a: &Curve, b: &Curve) -> Result<Vec<Point>> {
    match (a, b) {
        (Curve::Line(l1), Curve::Line(l2)) => match intersect_lines(l1, l2) {
            LineMeet::Point(p) => Ok(vec![p]),
            LineMeet::NoIntersection => Ok(vec![]),
            LineMeet::Coincident => Err(Error::Coincident),
        },
        (Curve::Line(l), Curve::Circle(c)) | (Curve::Circle(c), Curve::Line(l)) => {
            Ok(intersect_line_circle(l, c))
        }
        (Curve::Circle(c1), Curve::Circle(c2)) => intersect_circles(c1, c2),
    }
}
