use crate::automaton::{Label, LinearAutomaton, StateClass};
use crate::word::{FreshNames, EPS};

/// Graphviz description of `m`. Left states are circles, right states boxes,
/// accepting states get a double border, and each initial state is entered
/// from an invisible point node.
pub fn to_dot(m: &LinearAutomaton) -> String {
    let mut out = String::from("digraph automaton {\n    rankdir=LR;\n");
    for q in m.states() {
        let shape = match m.class_of(q) {
            Some(StateClass::Right) => "box",
            _ => "circle",
        };
        let border = if m.accepting().contains(q) { ", peripheries=2" } else { "" };
        out += &format!("    \"{q}\" [shape={shape}{border}];\n");
    }
    let mut names = FreshNames::new(m.states());
    for q in m.initial() {
        let entry = names.fresh("start");
        out += &format!("    \"{entry}\" [shape=point, style=invis];\n");
        out += &format!("    \"{entry}\" -> \"{q}\";\n");
    }
    for ((q, label), targets) in m.delta() {
        let label = match label {
            Label::Symbol(a) => a.as_str(),
            Label::Lambda => EPS,
        };
        for t in targets {
            out += &format!("    \"{q}\" -> \"{t}\" [label=\"{label}\"];\n");
        }
    }
    out.push_str("}\n");
    out
}
