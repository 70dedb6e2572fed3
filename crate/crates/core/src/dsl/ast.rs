//! Syntax trees of construction scripts, and their canonical printing.

use std::fmt;

use crate::geom::Side;

/// A stretch of source text: byte offsets plus the 1-based line and
/// column (in characters) where it starts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub col: usize,
}

impl Span {
    /// From the start of `self` to the end of `other`.
    pub fn to(self, other: Span) -> Span {
        Span {
            end: other.end.max(self.end),
            ..self
        }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// The type of a named object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Point,
    Segment,
    Line,
    Ray,
    Circle,
    Angle,
    Figure,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::Point,
        Kind::Segment,
        Kind::Line,
        Kind::Ray,
        Kind::Circle,
        Kind::Angle,
        Kind::Figure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Point => "point",
            Kind::Segment => "segment",
            Kind::Line => "line",
            Kind::Ray => "ray",
            Kind::Circle => "circle",
            Kind::Angle => "angle",
            Kind::Figure => "figure",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Segments, lines and rays.
    pub fn is_straight(self) -> bool {
        matches!(self, Kind::Segment | Kind::Line | Kind::Ray)
    }

    /// Anything that can be intersected.
    pub fn is_curve(self) -> bool {
        self.is_straight() || self == Kind::Circle
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub span: Span,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

impl Op {
    fn symbol(self) -> &'static str {
        match self {
            Op::Add => "+",
            Op::Sub => "-",
            Op::Mul => "*",
            Op::Div => "/",
        }
    }
}

/// A coordinate: decimal numbers combined by `+ - * /`, `sqrt` and
/// parentheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coord {
    Num(String),
    Sqrt(Box<Coord>),
    Group(Box<Coord>),
    Neg(Box<Coord>),
    Bin(Box<Coord>, Op, Box<Coord>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointLit {
    pub x: Coord,
    pub y: Coord,
    pub span: Span,
}

/// An argument: a name, a point literal, or a bracketed list of points
/// whose kind comes from where it is used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Name(Ident),
    Point(PointLit),
    List(Vec<Arg>, Span),
}

impl Arg {
    pub fn span(&self) -> Span {
        match self {
            Arg::Name(i) => i.span,
            Arg::Point(p) => p.span,
            Arg::List(_, s) => *s,
        }
    }
}

/// The construction primitives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prim {
    Join,
    Extend,
    Circle,
    Intersect,
}

impl Prim {
    pub const ALL: [Prim; 4] = [Prim::Join, Prim::Extend, Prim::Circle, Prim::Intersect];

    pub fn name(self) -> &'static str {
        match self {
            Prim::Join => "join",
            Prim::Extend => "extend",
            Prim::Circle => "circle",
            Prim::Intersect => "intersect",
        }
    }

    pub fn parse(s: &str) -> Option<Prim> {
        Prim::ALL.into_iter().find(|p| p.name() == s)
    }
}

/// Which intersection point an `intersect` keeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    First,
    Second,
    Upper,
    Lower,
    LeftOf(Arg),
    RightOf(Arg),
    OppositeSide(Arg, Arg),
    SameSide(Arg, Arg),
    Along(Arg, Arg),
    Beyond(Arg, Arg),
    Not(Arg),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Literal(Arg),
    Prim {
        prim: Prim,
        args: Vec<Arg>,
        select: Option<Selector>,
        span: Span,
    },
    Prop {
        id: Ident,
        args: Vec<Arg>,
        strategy: Option<Ident>,
        side: Option<Side>,
        span: Span,
    },
}

/// Assertion predicates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pred {
    SegEq,
    AngleEq,
    AreaEq,
    Parallel,
    RightAngle,
    Collinear,
}

impl Pred {
    pub const ALL: [Pred; 6] = [
        Pred::SegEq,
        Pred::AngleEq,
        Pred::AreaEq,
        Pred::Parallel,
        Pred::RightAngle,
        Pred::Collinear,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pred::SegEq => "seg_eq",
            Pred::AngleEq => "angle_eq",
            Pred::AreaEq => "area_eq",
            Pred::Parallel => "parallel",
            Pred::RightAngle => "right_angle",
            Pred::Collinear => "collinear",
        }
    }

    pub fn parse(s: &str) -> Option<Pred> {
        Pred::ALL.into_iter().find(|p| p.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StmtKind {
    Let { kind: Kind, name: Ident, value: Expr },
    Assert { pred: Pred, args: Vec<Arg> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement {
    pub kind: StmtKind,
    pub span: Span,
}

/// A parsed script: statements in source order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub statements: Vec<Statement>,
}

impl Script {
    /// The same tree with every span zeroed, for comparing structure.
    pub fn without_spans(&self) -> Script {
        let mut s = self.clone();
        for st in &mut s.statements {
            st.span = Span::default();
            match &mut st.kind {
                StmtKind::Let { name, value, .. } => {
                    name.span = Span::default();
                    match value {
                        Expr::Literal(a) => erase_arg(a),
                        Expr::Prim { args, select, span, .. } => {
                            *span = Span::default();
                            args.iter_mut().for_each(erase_arg);
                            if let Some(sel) = select {
                                erase_selector(sel);
                            }
                        }
                        Expr::Prop {
                            id, args, strategy, span, ..
                        } => {
                            *span = Span::default();
                            id.span = Span::default();
                            args.iter_mut().for_each(erase_arg);
                            if let Some(s) = strategy {
                                s.span = Span::default();
                            }
                        }
                    }
                }
                StmtKind::Assert { args, .. } => args.iter_mut().for_each(erase_arg),
            }
        }
        s
    }
}

fn erase_arg(a: &mut Arg) {
    match a {
        Arg::Name(i) => i.span = Span::default(),
        Arg::Point(p) => p.span = Span::default(),
        Arg::List(items, s) => {
            *s = Span::default();
            items.iter_mut().for_each(erase_arg);
        }
    }
}

fn erase_selector(s: &mut Selector) {
    match s {
        Selector::First | Selector::Second | Selector::Upper | Selector::Lower => {}
        Selector::LeftOf(a) | Selector::RightOf(a) | Selector::Not(a) => erase_arg(a),
        Selector::OppositeSide(a, b)
        | Selector::SameSide(a, b)
        | Selector::Along(a, b)
        | Selector::Beyond(a, b) => {
            erase_arg(a);
            erase_arg(b);
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Num(n) => f.write_str(n),
            Coord::Sqrt(c) => write!(f, "sqrt({c})"),
            Coord::Group(c) => write!(f, "({c})"),
            Coord::Neg(c) => write!(f, "-{c}"),
            Coord::Bin(a, op, b) => write!(f, "{a} {} {b}", op.symbol()),
        }
    }
}

impl fmt::Display for PointLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, a) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{a}")?;
    }
    Ok(())
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Name(i) => f.write_str(&i.name),
            Arg::Point(p) => write!(f, "{p}"),
            Arg::List(items, _) => {
                f.write_str("[")?;
                list(f, items)?;
                f.write_str("]")
            }
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::First => f.write_str("first"),
            Selector::Second => f.write_str("second"),
            Selector::Upper => f.write_str("side upper"),
            Selector::Lower => f.write_str("side lower"),
            Selector::LeftOf(a) => write!(f, "side left_of({a})"),
            Selector::RightOf(a) => write!(f, "side right_of({a})"),
            Selector::OppositeSide(a, b) => write!(f, "opposite_side({a}, {b})"),
            Selector::SameSide(a, b) => write!(f, "same_side({a}, {b})"),
            Selector::Along(a, b) => write!(f, "along({a}, {b})"),
            Selector::Beyond(a, b) => write!(f, "beyond({a}, {b})"),
            Selector::Not(a) => write!(f, "not({a})"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Literal(a) => write!(f, "{a}"),
            Expr::Prim { prim, args, select, .. } => {
                write!(f, "{}(", prim.name())?;
                list(f, args)?;
                f.write_str(")")?;
                if let Some(s) = select {
                    write!(f, " {s}")?;
                }
                Ok(())
            }
            Expr::Prop {
                id, args, strategy, side, ..
            } => {
                write!(f, "prop {}(", id.name)?;
                list(f, args)?;
                f.write_str(")")?;
                if let Some(s) = strategy {
                    write!(f, " strategy {}", s.name)?;
                }
                match side {
                    Some(Side::Left) => f.write_str(" side left"),
                    Some(Side::Right) => f.write_str(" side right"),
                    None => Ok(()),
                }
            }
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            StmtKind::Let { kind, name, value } => write!(f, "{} {} = {value}", kind.name(), name.name),
            StmtKind::Assert { pred, args } => {
                write!(f, "assert {}(", pred.name())?;
                list(f, args)?;
                f.write_str(")")
            }
        }
    }
}

/// The canonical text: one statement per line, comments dropped.
impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.statements {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
