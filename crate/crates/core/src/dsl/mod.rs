//! A line-oriented language for constructions.
//!
//! A script declares given objects by their coordinates, draws with the
//! three postulates, picks intersections, calls propositions, and asserts
//! equalities. The I.1 construction reads:
//!
//! ```text
//! # on a given finite straight line to construct an equilateral triangle
//! segment AB = [(0, 0), (1, 0)]
//! circle BCD = circle(A, B)
//! circle ACE = circle(B, A)
//! point C = intersect(BCD, ACE) side upper
//! segment CA = join(C, A)
//! segment CB = join(C, B)
//! ```
//!
//! The grammar, selectors and predicates are described in
//! `docs/script-language.md`.

mod ast;
mod check;
mod interp;
mod lexer;
mod parser;

use std::fmt;

pub use ast::{Arg, Coord, Expr, Ident, Kind, Op, PointLit, Pred, Prim, Script, Selector, Span, Statement, StmtKind};
pub use interp::{Assertion, Outcome, ScriptError};

use crate::elements::Instance;
use crate::geom::Side;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

/// A message tied to a place in the script.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub span: Span,
    pub severity: Severity,
    pub message: String,
    pub note: Option<String>,
}

impl Diagnostic {
    pub fn error(span: Span, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            span,
            severity: Severity::Error,
            message: message.into(),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Diagnostic {
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{}: {level}: {}", self.span, self.message)?;
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

impl From<ScriptError> for Diagnostic {
    fn from(e: ScriptError) -> Diagnostic {
        Diagnostic::error(e.span, e.error.to_string())
    }
}

/// Parses a script. Syntax errors are collected with their spans and
/// parsing resumes at the next line.
pub fn parse(src: &str) -> Result<Script, Vec<Diagnostic>> {
    let (script, diags) = parser::parse(src);
    if diags.is_empty() {
        Ok(script)
    } else {
        Err(diags)
    }
}

/// Parses as much as possible, returning the clean statements along with
/// every diagnostic.
pub fn parse_partial(src: &str) -> (Script, Vec<Diagnostic>) {
    parser::parse(src)
}

/// Definition, arity and kind errors; empty for a clean script.
pub fn check(script: &Script) -> Vec<Diagnostic> {
    check::check(script)
}

/// Runs a checked script.
pub fn interpret(script: &Script) -> Result<Outcome, ScriptError> {
    interp::interpret(script)
}

/// Parses, checks and runs `src`, stopping at the first stage with errors.
pub fn run(src: &str) -> Result<Outcome, Vec<Diagnostic>> {
    let script = parse(src)?;
    let diags = check(&script);
    if !diags.is_empty() {
        return Err(diags);
    }
    interpret(&script).map_err(|e| vec![e.into()])
}

/// Reads an instance description: declarations only, one object per line,
/// in the order the proposition takes them. `side` is where new figures
/// are to lie.
pub fn parse_instance(src: &str, side: Side) -> Result<Instance, Vec<Diagnostic>> {
    let script = parse(src)?;
    let mut diags = check(&script);
    for st in &script.statements {
        if !matches!(&st.kind, StmtKind::Let { value: Expr::Literal(_), .. }) {
            diags.push(Diagnostic::error(st.span, "instance files hold declarations with coordinates only"));
        }
    }
    if !diags.is_empty() {
        return Err(diags);
    }
    let outcome = interpret(&script).map_err(|e| vec![Diagnostic::from(e)])?;
    let objects = script
        .statements
        .iter()
        .filter_map(|st| match &st.kind {
            StmtKind::Let { name, .. } => outcome.get(&name.name).cloned(),
            StmtKind::Assert { .. } => None,
        })
        .collect();
    Ok(Instance::new(objects).on(side))
}
