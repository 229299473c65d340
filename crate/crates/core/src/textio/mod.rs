//! Text formats for grammars and automata, and DOT export.
//!
//! Both formats are line oriented, whitespace separated and use `#` for
//! comments. A grammar file:
//!
//! ```text
//! grammar
//! start S
//! terminals a b
//! variables S
//! S -> a S b | eps
//! ```
//!
//! An automaton file, where `eps` labels a λ-move and a transition line lists
//! the targets of one `(state, label)` cell:
//!
//! ```text
//! automaton
//! alphabet a b
//! left q0
//! right p1 p2
//! initial q0
//! final q0
//! q0 a -> p1
//! q0 b -> p2
//! p1 a -> q0
//! p2 b -> q0
//! ```
//!
//! Directives may repeat (their arguments accumulate) and may be empty.
//! Serialization is canonical: sorted, one line per production head or
//! transition cell, LF line endings and a trailing newline.

mod automaton;
mod dot;
mod grammar;

use std::fmt;

use thiserror::Error;

use crate::error::{AutomatonError, GrammarError};

pub use automaton::{parse_automaton, serialize_automaton};
pub use dot::to_dot;
pub use grammar::{parse_grammar, serialize_grammar};

/// 1-based line and column (in characters) of a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error(transparent)]
    Grammar(#[from] GrammarError),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{span}: {kind}")]
pub struct ParseError {
    pub span: SourceSpan,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn syntax(span: SourceSpan, msg: impl Into<String>) -> Self {
        ParseError {
            span,
            kind: ParseErrorKind::Syntax(msg.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub span: SourceSpan,
}

/// Non-empty lines of `text` with comments removed, split into tokens.
pub(crate) fn tokenize(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut lines = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        let mut column = 0;
        for (byte, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
            column += 1;
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some((byte, column)),
                (true, Some((b, c))) => {
                    tokens.push(Token {
                        text: &line[b..byte],
                        span: SourceSpan { line: i + 1, column: c },
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            lines.push(tokens);
        }
    }
    lines
}

/// Span just past the last line of `text`, for errors about missing content.
pub(crate) fn end_span(text: &str) -> SourceSpan {
    SourceSpan {
        line: text.lines().count() + 1,
        column: 1,
    }
}

/// Checks the header line and returns the remaining lines.
pub(crate) fn expect_header<'a, 't>(
    text: &str,
    lines: &'a [Vec<Token<'t>>],
    header: &str,
) -> Result<&'a [Vec<Token<'t>>], ParseError> {
    match lines.first() {
        None => Err(ParseError::syntax(end_span(text), format!("expected `{header}` header"))),
        Some(first) if first.len() == 1 && first[0].text == header => Ok(&lines[1..]),
        Some(first) => Err(ParseError::syntax(
            first[0].span,
            format!("expected `{header}` header"),
        )),
    }
}
