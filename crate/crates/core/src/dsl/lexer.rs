//! Tokens of the script language.

use super::ast::Span;
use super::Diagnostic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    /// Letters, digits, `_` and `'`, with inner dots as in `I.44` or `P.H`.
    Ident(String),
    /// Digits with an optional fractional part.
    Number(String),
    Punct(char),
    Newline,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) | Tok::Number(s) => format!("`{s}`"),
            Tok::Punct(c) => format!("`{c}`"),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub span: Span,
}

fn ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

/// Splits `src` into tokens. Stray characters are reported and skipped.
pub(crate) fn lex(src: &str, diags: &mut Vec<Diagnostic>) -> Vec<Token> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let (mut line, mut line_start) = (1, 0);
    let mut i = 0;
    let span = |from: usize, to: usize, line: usize, line_start: usize| {
        let start = chars.get(from).map_or(src.len(), |c| c.0);
        let end = chars.get(to).map_or(src.len(), |c| c.0);
        Span {
            start,
            end,
            line,
            col: from - line_start + 1,
        }
    };
    while i < chars.len() {
        let c = chars[i].1;
        let start = i;
        if c == '\n' {
            out.push(Token {
                tok: Tok::Newline,
                span: span(i, i + 1, line, line_start),
            });
            i += 1;
            line += 1;
            line_start = i;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i].1 != '\n' {
                i += 1;
            }
            continue;
        }
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            if i + 1 < chars.len() && chars[i].1 == '.' && chars[i + 1].1.is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
            }
            Tok::Number(chars[start..i].iter().map(|c| c.1).collect())
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() {
                let d = chars[i].1;
                if ident_char(d) || (d == '.' && chars.get(i + 1).is_some_and(|n| n.1.is_alphanumeric())) {
                    i += 1;
                } else {
                    break;
                }
            }
            Tok::Ident(chars[start..i].iter().map(|c| c.1).collect())
        } else if "()[],=+-*/".contains(c) {
            i += 1;
            Tok::Punct(c)
        } else {
            i += 1;
            diags.push(Diagnostic::error(
                span(start, i, line, line_start),
                format!("unexpected character `{c}`"),
            ));
            continue;
        };
        out.push(Token {
            tok,
            span: span(start, i, line, line_start),
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        span: span(chars.len(), chars.len(), line, line_start),
    });
    out
}
