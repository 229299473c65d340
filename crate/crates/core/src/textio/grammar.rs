use std::collections::BTreeMap;

use super::{end_span, expect_header, tokenize, ParseError, SourceSpan};
use crate::grammar::{render_body, validate_grammar_located, GrammarLocation, LinearGrammar, RawGrammar};
use crate::word::EPS;

#[derive(Default)]
struct Spans {
    start: Option<SourceSpan>,
    terminals: Vec<SourceSpan>,
    variables: Vec<SourceSpan>,
    heads: Vec<SourceSpan>,
    bodies: Vec<Vec<SourceSpan>>,
    /// First token of each alternative.
    alternatives: Vec<SourceSpan>,
}

impl Spans {
    fn locate(&self, at: GrammarLocation, fallback: SourceSpan) -> SourceSpan {
        match at {
            GrammarLocation::Start => self.start.unwrap_or(fallback),
            GrammarLocation::Terminal(i) => self.terminals[i],
            GrammarLocation::Variable(i) => self.variables[i],
            GrammarLocation::Head(i) => self.heads[i],
            GrammarLocation::BodySymbol(i, j) => self.bodies[i][j],
            GrammarLocation::Production(i) => self.alternatives[i],
        }
    }
}

pub fn parse_grammar(text: &str) -> Result<LinearGrammar, ParseError> {
    let lines = tokenize(text);
    let body = expect_header(text, &lines, "grammar")?;
    let mut raw = RawGrammar::default();
    let mut spans = Spans::default();

    for line in body {
        let first = &line[0];
        if line.get(1).is_some_and(|t| t.text == "->") {
            let head = first;
            // Each alternative with the `->` or `|` token before it.
            let mut alternatives = vec![(line[1].span, Vec::new())];
            for tok in &line[2..] {
                if tok.text == "|" {
                    alternatives.push((tok.span, Vec::new()));
                } else {
                    alternatives.last_mut().unwrap().1.push(tok);
                }
            }
            for (sep, alt) in alternatives {
                let Some(lead) = alt.first() else {
                    return Err(ParseError::syntax(sep, "empty alternative; write `eps` for the empty body"));
                };
                let names: Vec<String> = if alt.len() == 1 && lead.text == EPS {
                    Vec::new()
                } else if let Some(e) = alt.iter().find(|t| t.text == EPS) {
                    return Err(ParseError::syntax(e.span, "`eps` must stand alone as a body"));
                } else {
                    alt.iter().map(|t| t.text.to_string()).collect()
                };
                raw.productions.push((head.text.to_string(), names));
                spans.heads.push(head.span);
                spans.bodies.push(alt.iter().map(|t| t.span).collect());
                spans.alternatives.push(lead.span);
            }
            continue;
        }
        let args = &line[1..];
        match first.text {
            "start" => {
                if spans.start.is_some() {
                    return Err(ParseError::syntax(first.span, "duplicate `start` directive"));
                }
                let [v] = args else {
                    return Err(ParseError::syntax(first.span, "`start` takes exactly one variable"));
                };
                raw.start = v.text.to_string();
                spans.start = Some(v.span);
            }
            "terminals" => {
                for t in args {
                    raw.terminals.push(t.text.to_string());
                    spans.terminals.push(t.span);
                }
            }
            "variables" => {
                for t in args {
                    raw.variables.push(t.text.to_string());
                    spans.variables.push(t.span);
                }
            }
            other => {
                return Err(ParseError::syntax(
                    first.span,
                    format!("unknown directive `{other}`; production lines need `->`"),
                ))
            }
        }
    }
    if spans.start.is_none() {
        return Err(ParseError::syntax(end_span(text), "missing `start` directive"));
    }
    validate_grammar_located(&raw).map_err(|(e, at)| ParseError {
        span: spans.locate(at, end_span(text)),
        kind: e.into(),
    })
}

/// Canonical text of `g`: start, sorted terminals, variables with the start
/// first, then one line per head in that order with sorted alternatives.
pub fn serialize_grammar(g: &LinearGrammar) -> String {
    let mut by_head: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    for p in g.productions() {
        by_head.entry(p.head()).or_default().push(render_body(p.body()));
    }
    let join = |items: Vec<&str>| items.iter().map(|s| format!(" {s}")).collect::<String>();
    let mut out = String::from("grammar\n");
    out += &format!("start {}\n", g.start());
    out += &format!("terminals{}\n", join(g.terminals().iter().map(String::as_str).collect()));
    out += &format!("variables{}\n", join(g.ordered_variables()));
    for v in g.ordered_variables() {
        if let Some(bodies) = by_head.get(v) {
            out += &format!("{v} -> {}\n", bodies.join(" | "));
        }
    }
    out
}
