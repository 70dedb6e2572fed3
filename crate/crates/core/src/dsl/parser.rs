//! Recursive-descent parser with recovery at line ends.

use super::ast::*;
use super::lexer::{lex, Tok, Token};
use super::Diagnostic;
use crate::geom::Side;

/// Parses `src`; the script holds every statement that parsed cleanly.
pub(crate) fn parse(src: &str) -> (Script, Vec<Diagnostic>) {
    let mut diags = Vec::new();
    let toks = lex(src, &mut diags);
    let mut p = Parser {
        src,
        toks: &toks,
        pos: 0,
        diags,
    };
    let mut script = Script::default();
    loop {
        while p.peek() == &Tok::Newline {
            p.pos += 1;
        }
        if p.peek() == &Tok::Eof {
            break;
        }
        match p.statement() {
            Ok(s) => script.statements.push(s),
            Err(()) => p.recover(),
        }
    }
    let mut diags = p.diags;
    diags.sort_by_key(|d| d.span.start);
    (script, diags)
}

/// The error has already been recorded.
type PResult<T> = Result<T, ()>;

struct Parser<'a> {
    src: &'a str,
    toks: &'a [Token],
    pos: usize,
    diags: Vec<Diagnostic>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn span(&self) -> Span {
        self.toks[self.pos].span
    }

    fn bump(&mut self) -> &Token {
        let t = &self.toks[self.pos];
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    /// End of the last consumed token, as an empty span.
    fn after_prev(&self) -> Span {
        let Some(prev) = self.pos.checked_sub(1).map(|i| self.toks[i].span) else {
            return self.span();
        };
        let width = self.src[prev.start..prev.end].chars().count();
        Span {
            start: prev.end,
            end: prev.end,
            line: prev.line,
            col: prev.col + width,
        }
    }

    fn prev_end(&self) -> usize {
        self.pos.checked_sub(1).map_or(0, |i| self.toks[i].span.end)
    }

    fn error_here<T>(&mut self, expected: &str) -> PResult<T> {
        let found = self.peek().describe();
        let span = self.span();
        self.diags
            .push(Diagnostic::error(span, format!("expected {expected}, found {found}")));
        Err(())
    }

    fn recover(&mut self) {
        while !matches!(self.peek(), Tok::Newline | Tok::Eof) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char, context: &str) -> PResult<()> {
        if self.peek() == &Tok::Punct(c) {
            self.pos += 1;
            return Ok(());
        }
        let found = self.peek().describe();
        self.diags.push(
            Diagnostic::error(self.after_prev(), format!("expected `{c}` {context}"))
                .with_note(format!("found {found}")),
        );
        Err(())
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == &Tok::Punct(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == w)
    }

    fn ident(&mut self, what: &str) -> PResult<Ident> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                let span = self.bump().span;
                Ok(Ident { name, span })
            }
            _ => self.error_here(what),
        }
    }

    fn statement(&mut self) -> PResult<Statement> {
        let start = self.span();
        let kind = if self.is_word("assert") {
            self.pos += 1;
            let w = self.ident("a predicate")?;
            let Some(pred) = Pred::parse(&w.name) else {
                let names: Vec<_> = Pred::ALL.iter().map(|p| p.name()).collect();
                self.diags.push(
                    Diagnostic::error(w.span, format!("unknown predicate `{}`", w.name))
                        .with_note(format!("predicates: {}", names.join(", "))),
                );
                return Err(());
            };
            self.expect('(', "after the predicate")?;
            let args = self.args(')')?;
            StmtKind::Assert { pred, args }
        } else {
            let Tok::Ident(w) = self.peek().clone() else {
                return self.error_here("a declaration or `assert`");
            };
            let Some(kind) = Kind::parse(&w) else {
                return self.error_here("a kind (point, segment, line, ray, circle, angle, figure) or `assert`");
            };
            self.pos += 1;
            let name = self.ident("a name")?;
            self.expect('=', "after the name")?;
            let value = self.expr()?;
            StmtKind::Let { kind, name, value }
        };
        let span = start.to(Span {
            end: self.prev_end(),
            ..start
        });
        if !matches!(self.peek(), Tok::Newline | Tok::Eof) {
            return self.error_here("end of line");
        }
        Ok(Statement { kind, span })
    }

    fn expr(&mut self) -> PResult<Expr> {
        let start = self.span();
        match self.peek().clone() {
            Tok::Punct('(' | '[') => Ok(Expr::Literal(self.arg()?)),
            Tok::Ident(w) if w == "prop" => {
                self.pos += 1;
                let id = self.ident("a proposition such as `I.44`")?;
                self.expect('(', "after the proposition")?;
                let args = self.args(')')?;
                let strategy = if self.is_word("strategy") {
                    self.pos += 1;
                    Some(self.ident("a strategy name")?)
                } else {
                    None
                };
                let side = if self.is_word("side") {
                    self.pos += 1;
                    if self.is_word("left") {
                        self.pos += 1;
                        Some(Side::Left)
                    } else if self.is_word("right") {
                        self.pos += 1;
                        Some(Side::Right)
                    } else {
                        return self.error_here("`left` or `right`");
                    }
                } else {
                    None
                };
                Ok(Expr::Prop {
                    id,
                    args,
                    strategy,
                    side,
                    span: start.to(Span { end: self.prev_end(), ..start }),
                })
            }
            Tok::Ident(w) => {
                let Some(prim) = Prim::parse(&w) else {
                    return self.error_here("a literal, `prop`, or one of join, extend, circle, intersect");
                };
                self.pos += 1;
                self.expect('(', "after the primitive")?;
                let args = self.args(')')?;
                let select = if matches!(self.peek(), Tok::Newline | Tok::Eof) {
                    None
                } else {
                    Some(self.selector()?)
                };
                Ok(Expr::Prim {
                    prim,
                    args,
                    select,
                    span: start.to(Span { end: self.prev_end(), ..start }),
                })
            }
            _ => self.error_here("an expression"),
        }
    }

    /// Comma-separated arguments up to `close`, which is consumed.
    fn args(&mut self, close: char) -> PResult<Vec<Arg>> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.arg()?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(',', "between arguments")?;
        }
    }

    fn arg(&mut self) -> PResult<Arg> {
        let start = self.span();
        match self.peek().clone() {
            Tok::Punct('(') => Ok(Arg::Point(self.point()?)),
            Tok::Punct('[') => {
                self.pos += 1;
                let items = self.args(']')?;
                if let Some(bad) = items.iter().find(|a| matches!(a, Arg::List(..))) {
                    self.diags
                        .push(Diagnostic::error(bad.span(), "lists hold names and points only"));
                    return Err(());
                }
                if items.is_empty() {
                    self.diags.push(Diagnostic::error(start, "empty list"));
                    return Err(());
                }
                Ok(Arg::List(items, start.to(Span { end: self.prev_end(), ..start })))
            }
            Tok::Ident(_) => Ok(Arg::Name(self.ident("a name")?)),
            _ => self.error_here("a name, a point `(x, y)` or a list `[...]`"),
        }
    }

    fn point(&mut self) -> PResult<PointLit> {
        let start = self.span();
        self.expect('(', "to open the point")?;
        let x = self.coord()?;
        self.expect(',', "between coordinates")?;
        let y = self.coord()?;
        self.expect(')', "to close the point")?;
        Ok(PointLit {
            x,
            y,
            span: start.to(Span { end: self.prev_end(), ..start }),
        })
    }

    fn coord(&mut self) -> PResult<Coord> {
        let mut acc = if self.eat('-') {
            Coord::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            let op = if self.eat('+') {
                Op::Add
            } else if self.eat('-') {
                Op::Sub
            } else {
                return Ok(acc);
            };
            acc = Coord::Bin(Box::new(acc), op, Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> PResult<Coord> {
        let mut acc = self.atom()?;
        loop {
            let op = if self.eat('*') {
                Op::Mul
            } else if self.eat('/') {
                Op::Div
            } else {
                return Ok(acc);
            };
            acc = Coord::Bin(Box::new(acc), op, Box::new(self.atom()?));
        }
    }

    fn atom(&mut self) -> PResult<Coord> {
        match self.peek().clone() {
            Tok::Number(n) => {
                self.pos += 1;
                Ok(Coord::Num(n))
            }
            Tok::Ident(w) if w == "sqrt" => {
                self.pos += 1;
                self.expect('(', "after `sqrt`")?;
                let c = self.coord()?;
                self.expect(')', "to close `sqrt`")?;
                Ok(Coord::Sqrt(Box::new(c)))
            }
            Tok::Punct('(') => {
                self.pos += 1;
                let c = self.coord()?;
                self.expect(')', "to close the group")?;
                Ok(Coord::Group(Box::new(c)))
            }
            _ => self.error_here("a number, `sqrt(...)` or `(...)`"),
        }
    }

    fn selector(&mut self) -> PResult<Selector> {
        let w = self.ident("a selector")?;
        let one = |p: &mut Self| -> PResult<Arg> {
            p.expect('(', "after the selector")?;
            let a = p.arg()?;
            p.expect(')', "to close the selector")?;
            Ok(a)
        };
        let two = |p: &mut Self| -> PResult<(Arg, Arg)> {
            p.expect('(', "after the selector")?;
            let a = p.arg()?;
            p.expect(',', "between arguments")?;
            let b = p.arg()?;
            p.expect(')', "to close the selector")?;
            Ok((a, b))
        };
        Ok(match w.name.as_str() {
            "first" => Selector::First,
            "second" => Selector::Second,
            "side" => {
                let s = self.ident("`upper`, `lower`, `left_of` or `right_of`")?;
                match s.name.as_str() {
                    "upper" => Selector::Upper,
                    "lower" => Selector::Lower,
                    "left_of" => Selector::LeftOf(one(self)?),
                    "right_of" => Selector::RightOf(one(self)?),
                    other => {
                        self.diags
                            .push(Diagnostic::error(s.span, format!("unknown side `{other}`")));
                        return Err(());
                    }
                }
            }
            "opposite_side" => {
                let (a, b) = two(self)?;
                Selector::OppositeSide(a, b)
            }
            "same_side" => {
                let (a, b) = two(self)?;
                Selector::SameSide(a, b)
            }
            "along" => {
                let (a, b) = two(self)?;
                Selector::Along(a, b)
            }
            "beyond" => {
                let (a, b) = two(self)?;
                Selector::Beyond(a, b)
            }
            "not" => Selector::Not(one(self)?),
            other => {
                self.diags.push(
                    Diagnostic::error(w.span, format!("unknown selector `{other}`")).with_note(
                        "selectors: first, second, side upper|lower|left_of(..)|right_of(..), \
                         opposite_side, same_side, along, beyond, not",
                    ),
                );
                return Err(());
            }
        })
    }
}
