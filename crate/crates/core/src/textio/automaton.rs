use super::{expect_header, tokenize, ParseError, SourceSpan};
use crate::automaton::{validate_automaton_located, AutomatonLocation, Label, LinearAutomaton, RawAutomaton};
use crate::word::EPS;

#[derive(Default)]
struct Spans {
    alphabet: Vec<SourceSpan>,
    left: Vec<SourceSpan>,
    right: Vec<SourceSpan>,
    initial: Vec<SourceSpan>,
    accepting: Vec<SourceSpan>,
    /// Source, label and targets of each transition line.
    transitions: Vec<(SourceSpan, SourceSpan, Vec<SourceSpan>)>,
}

impl Spans {
    fn locate(&self, at: AutomatonLocation) -> SourceSpan {
        use AutomatonLocation as Loc;
        match at {
            Loc::Alphabet(i) => self.alphabet[i],
            Loc::Left(i) => self.left[i],
            Loc::Right(i) => self.right[i],
            Loc::Initial(i) => self.initial[i],
            Loc::Accepting(i) => self.accepting[i],
            Loc::TransitionSource(i) => self.transitions[i].0,
            Loc::TransitionLabel(i) => self.transitions[i].1,
            Loc::TransitionTarget(i, j) => self.transitions[i].2[j],
        }
    }
}

pub fn parse_automaton(text: &str) -> Result<LinearAutomaton, ParseError> {
    let lines = tokenize(text);
    let body = expect_header(text, &lines, "automaton")?;
    let mut raw = RawAutomaton::default();
    let mut spans = Spans::default();

    for line in body {
        let first = &line[0];
        if line.get(2).is_some_and(|t| t.text == "->") {
            let label = &line[1];
            raw.transitions.push((
                first.text.to_string(),
                (label.text != EPS).then(|| label.text.to_string()),
                line[3..].iter().map(|t| t.text.to_string()).collect(),
            ));
            spans.transitions.push((
                first.span,
                label.span,
                line[3..].iter().map(|t| t.span).collect(),
            ));
            continue;
        }
        let (names, at) = match first.text {
            "alphabet" => (&mut raw.alphabet, &mut spans.alphabet),
            "left" => (&mut raw.left, &mut spans.left),
            "right" => (&mut raw.right, &mut spans.right),
            "initial" => (&mut raw.initial, &mut spans.initial),
            "final" => (&mut raw.accepting, &mut spans.accepting),
            other => {
                return Err(ParseError::syntax(
                    first.span,
                    format!("unknown directive `{other}`; transition lines look like `q a -> p`"),
                ))
            }
        };
        for t in &line[1..] {
            names.push(t.text.to_string());
            at.push(t.span);
        }
    }
    validate_automaton_located(&raw).map_err(|(e, at)| ParseError {
        span: spans.locate(at),
        kind: e.into(),
    })
}

/// Canonical text of `m`: sorted directives followed by one line per
/// transition cell, cells ordered by state then label with λ last.
pub fn serialize_automaton(m: &LinearAutomaton) -> String {
    fn line<'a>(key: &str, items: impl IntoIterator<Item = &'a String>) -> String {
        let mut s = key.to_string();
        for item in items {
            s.push(' ');
            s.push_str(item);
        }
        s.push('\n');
        s
    }
    let mut out = String::from("automaton\n");
    out += &line("alphabet", m.alphabet());
    out += &line("left", m.left_states());
    out += &line("right", m.right_states());
    out += &line("initial", m.initial());
    out += &line("final", m.accepting());
    for ((q, label), targets) in m.delta() {
        let label = match label {
            Label::Symbol(a) => a.as_str(),
            Label::Lambda => EPS,
        };
        out += &line(&format!("{q} {label} ->"), targets);
    }
    out
}
