//! Static checks: names defined once and before use, argument counts, and
//! object kinds.

use std::collections::HashMap;

use super::ast::*;
use super::Diagnostic;
use crate::elements::split_id;

/// What an argument position accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Want {
    Kind(Kind),
    Straight,
    Curve,
    /// A proposition input: a name or a point.
    Input,
    /// Only the names are checked, after an arity error.
    Defined,
}

impl Want {
    fn describe(self) -> String {
        match self {
            Want::Kind(k) => format!("a {}", k.name()),
            Want::Straight => "a segment, line or ray".into(),
            Want::Curve => "a segment, line, ray or circle".into(),
            Want::Input => "a name or a point".into(),
            Want::Defined => "anything".into(),
        }
    }

    fn accepts(self, k: Kind) -> bool {
        match self {
            Want::Kind(w) => w == k,
            Want::Straight => k.is_straight(),
            Want::Curve => k.is_curve(),
            Want::Input | Want::Defined => true,
        }
    }
}

#[derive(Clone, Copy)]
enum Ty {
    Known(Kind),
    /// A member of a proposition's result, known only when run.
    Member,
}

struct Checker {
    defs: HashMap<String, (Ty, Span)>,
    /// Names bound by `prop`, whose members may be used as `name.member`.
    results: HashMap<String, Span>,
    diags: Vec<Diagnostic>,
}

/// Upper-case names with one letter per listed point also name the points,
/// as `segment AB = [(0, 0), (1, 0)]` names `A` and `B`.
pub(crate) fn vertex_letters(name: &str, items: &[Arg]) -> Option<Vec<String>> {
    let letters: Vec<char> = name.chars().collect();
    (letters.len() == items.len() && letters.iter().all(|c| c.is_ascii_uppercase()))
        .then(|| letters.iter().map(|c| c.to_string()).collect())
}

/// Diagnostics for a parsed script; empty when it is clean.
pub(crate) fn check(script: &Script) -> Vec<Diagnostic> {
    let mut c = Checker {
        defs: HashMap::new(),
        results: HashMap::new(),
        diags: Vec::new(),
    };
    for st in &script.statements {
        match &st.kind {
            StmtKind::Let { kind, name, value } => c.define_let(*kind, name, value),
            StmtKind::Assert { pred, args } => {
                let (n, want) = match pred {
                    Pred::SegEq => (2, Want::Kind(Kind::Segment)),
                    Pred::AngleEq => (2, Want::Kind(Kind::Angle)),
                    Pred::AreaEq => (2, Want::Kind(Kind::Figure)),
                    Pred::Parallel => (2, Want::Straight),
                    Pred::RightAngle => (1, Want::Kind(Kind::Angle)),
                    Pred::Collinear => (3, Want::Kind(Kind::Point)),
                };
                c.args(pred.name(), st.span, args, &vec![want; n]);
            }
        }
    }
    c.diags
}

impl Checker {
    fn define(&mut self, name: &Ident, ty: Ty) {
        if name.name.contains('.') {
            self.diags.push(Diagnostic::error(
                name.span,
                format!("`{}`: names may not contain `.`", name.name),
            ));
            return;
        }
        if let Some((_, first)) = self.defs.get(&name.name) {
            let first = *first;
            self.diags.push(
                Diagnostic::error(name.span, format!("`{}` is already defined", name.name))
                    .with_note(format!("first defined at {first}")),
            );
            return;
        }
        self.defs.insert(name.name.clone(), (ty, name.span));
    }

    fn define_let(&mut self, kind: Kind, name: &Ident, value: &Expr) {
        match value {
            Expr::Literal(a) => {
                self.arg(a, Want::Kind(kind));
                if let Arg::List(items, _) = a {
                    if let Some(letters) = vertex_letters(&name.name, items) {
                        for (l, item) in letters.iter().zip(items) {
                            if matches!(item, Arg::Point(_)) {
                                let id = Ident {
                                    name: l.clone(),
                                    span: item.span(),
                                };
                                self.define(&id, Ty::Known(Kind::Point));
                            }
                        }
                    }
                }
            }
            Expr::Prim {
                prim, args, select, span,
            } => {
                let (made, wants): (Kind, Vec<Want>) = match prim {
                    Prim::Join => (Kind::Segment, vec![Want::Kind(Kind::Point); 2]),
                    Prim::Extend => (Kind::Ray, vec![Want::Kind(Kind::Point); 2]),
                    Prim::Circle => (Kind::Circle, vec![Want::Kind(Kind::Point); 2]),
                    Prim::Intersect => (Kind::Point, vec![Want::Curve; 2]),
                };
                self.args(prim.name(), *span, args, &wants);
                if let Some(sel) = select {
                    if *prim != Prim::Intersect {
                        self.diags.push(Diagnostic::error(
                            *span,
                            format!("only `intersect` takes a selector, not `{}`", prim.name()),
                        ));
                    }
                    self.selector(sel);
                }
                if made != kind {
                    self.diags.push(Diagnostic::error(
                        *span,
                        format!("`{}` makes a {}, not a {}", prim.name(), made.name(), kind.name()),
                    ));
                }
            }
            Expr::Prop { id, args, .. } => {
                if split_id(&id.name).is_err() {
                    self.diags
                        .push(Diagnostic::error(id.span, format!("unknown proposition `{}`", id.name)));
                }
                for a in args {
                    self.arg(a, Want::Input);
                }
                self.results.insert(name.name.clone(), name.span);
            }
        }
        self.define(name, Ty::Known(kind));
    }

    fn selector(&mut self, sel: &Selector) {
        let point = Want::Kind(Kind::Point);
        match sel {
            Selector::First | Selector::Second | Selector::Upper | Selector::Lower => {}
            Selector::LeftOf(a) | Selector::RightOf(a) => self.arg(a, Want::Straight),
            Selector::OppositeSide(l, p) | Selector::SameSide(l, p) => {
                self.arg(l, Want::Straight);
                self.arg(p, point);
            }
            Selector::Along(a, b) | Selector::Beyond(a, b) => {
                self.arg(a, point);
                self.arg(b, point);
            }
            Selector::Not(a) => self.arg(a, point),
        }
    }

    fn args(&mut self, what: &str, span: Span, args: &[Arg], wants: &[Want]) {
        if args.len() != wants.len() {
            let n = wants.len();
            self.diags.push(Diagnostic::error(
                span,
                format!(
                    "`{what}` takes {n} argument{}, got {}",
                    if n == 1 { "" } else { "s" },
                    args.len()
                ),
            ));
            for a in args {
                self.arg(a, Want::Defined);
            }
            return;
        }
        for (a, w) in args.iter().zip(wants) {
            self.arg(a, *w);
        }
    }

    fn lookup(&mut self, name: &Ident) -> Option<Ty> {
        if let Some((ty, _)) = self.defs.get(&name.name) {
            return Some(*ty);
        }
        if let Some((base, _)) = name.name.split_once('.') {
            if self.results.contains_key(base) {
                return Some(Ty::Member);
            }
        }
        self.diags
            .push(Diagnostic::error(name.span, format!("`{}` is not defined", name.name)));
        None
    }

    fn arg(&mut self, a: &Arg, want: Want) {
        match a {
            Arg::Name(id) => {
                if let Some(Ty::Known(k)) = self.lookup(id) {
                    if !want.accepts(k) {
                        self.diags.push(Diagnostic::error(
                            id.span,
                            format!("expected {}, `{}` is a {}", want.describe(), id.name, k.name()),
                        ));
                    }
                }
            }
            Arg::Point(p) => {
                if !want.accepts(Kind::Point) {
                    self.diags.push(Diagnostic::error(
                        p.span,
                        format!("expected {}, found a point", want.describe()),
                    ));
                }
            }
            Arg::List(items, span) => {
                for item in items {
                    self.arg(item, Want::Kind(Kind::Point));
                }
                let n = items.len();
                let ok = match want {
                    Want::Kind(Kind::Point) | Want::Input => {
                        self.diags.push(Diagnostic::error(
                            *span,
                            format!("expected {}, found a list", want.describe()),
                        ));
                        return;
                    }
                    Want::Kind(Kind::Angle) => n == 3,
                    Want::Kind(Kind::Figure) => n >= 3,
                    Want::Defined => true,
                    _ => n == 2,
                };
                if !ok {
                    let need = match want {
                        Want::Kind(Kind::Angle) => "3 points",
                        Want::Kind(Kind::Figure) => "at least 3 points",
                        _ => "2 points",
                    };
                    self.diags.push(Diagnostic::error(
                        *span,
                        format!("{} takes {need}, got {n}", want.describe()),
                    ));
                }
            }
        }
    }
}
