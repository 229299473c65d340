//! Conversions between linear grammars and linear automata.
//!
//! | from | to | function |
//! |------|----|----------|
//! | linear grammar | λ-NLA | [`grammar_to_nla`] |
//! | λ-NLA | linear grammar | [`nla_to_grammar`] |
//! | deterministic linear grammar | DLA | [`det_grammar_to_dla`] |
//! | even linear grammar | even NLA | [`even_grammar_to_nla`] |
//! | even NLA | even linear grammar | [`even_nla_to_grammar`] |

use std::collections::{BTreeMap, BTreeSet};

use crate::automaton::{Delta, Label, LinearAutomaton, StateClass};
use crate::error::{AutomatonError, GrammarError};
use crate::grammar::{to_even_normal_form, to_slnf, LinearGrammar, Production, Symbol, VariableClass};
use crate::word::FreshNames;

/// Automaton of a grammar already in SLNF.
///
/// A variable is a left state when it has an `A -> aB` body and a right state
/// when it has `A -> Ba`; variables with neither are left states. Bare
/// terminal bodies `A -> a` move to one shared accepting sink of class
/// `sink_class`, which is only added when such a body exists.
fn slnf_to_nla(g: &LinearGrammar, sink_class: StateClass) -> LinearAutomaton {
    debug_assert!(g.is_slnf());
    let mut left = BTreeSet::new();
    let mut right = BTreeSet::new();
    for v in g.variables() {
        let reads_right = g.productions_of(v).any(|p| {
            matches!(p.body(), [Symbol::Variable(_), Symbol::Terminal(_)])
        });
        if reads_right {
            right.insert(v.clone());
        } else {
            left.insert(v.clone());
        }
    }

    let mut names = FreshNames::new(g.variables().iter().cloned());
    let mut sink = None;
    let mut delta: Delta = BTreeMap::new();
    let mut accepting = BTreeSet::new();
    for p in g.productions() {
        let head = p.head().to_string();
        let (label, target) = match p.body() {
            [] => {
                accepting.insert(head);
                continue;
            }
            [Symbol::Variable(b)] => (Label::Lambda, b.clone()),
            [Symbol::Terminal(a)] => {
                let s = sink.get_or_insert_with(|| names.fresh("fin")).clone();
                (Label::Symbol(a.clone()), s)
            }
            [Symbol::Terminal(a), Symbol::Variable(b)] | [Symbol::Variable(b), Symbol::Terminal(a)] => {
                (Label::Symbol(a.clone()), b.clone())
            }
            _ => unreachable!("grammar is in SLNF"),
        };
        delta.entry((head, label)).or_default().insert(target);
    }
    if let Some(s) = sink {
        accepting.insert(s.clone());
        match sink_class {
            StateClass::Left => left.insert(s),
            StateClass::Right => right.insert(s),
        };
    }
    LinearAutomaton::from_parts(
        left,
        right,
        g.terminals().clone(),
        delta,
        BTreeSet::from([g.start().to_string()]),
        accepting,
    )
}

/// λ-NLA accepting the language of `g`, built from its SLNF.
///
/// States are the SLNF variables (plus an accepting sink for bare-terminal
/// bodies); `A -> aB` and `A -> Ba` read `a` into `B`, `A -> a` reads `a` into
/// the sink, `A -> B` is a λ-move, and `A -> λ` makes `A` accepting.
pub fn grammar_to_nla(g: &LinearGrammar) -> LinearAutomaton {
    slnf_to_nla(&to_slnf(g), StateClass::Left)
}

/// Grammar with one variable per state.
///
/// A left state `q` with `p ∈ δ(q, a)` yields `q -> a p`, a right state
/// `q -> p a`, a λ-move `q -> p`, and an accepting state `q -> λ`. With a
/// single initial state that state is the start variable; otherwise a fresh
/// start copies the productions of every initial state.
pub fn nla_to_grammar(m: &LinearAutomaton) -> LinearGrammar {
    let (vars, var_of) = state_variables(m);
    let mut productions: BTreeMap<String, BTreeSet<Vec<Symbol>>> = BTreeMap::new();
    for ((q, label), targets) in m.delta() {
        let class = m.class_of(q).expect("own state");
        for t in targets {
            let target = Symbol::Variable(var_of[t.as_str()].clone());
            let body = match (label, class) {
                (Label::Lambda, _) => vec![target],
                (Label::Symbol(a), StateClass::Left) => vec![Symbol::terminal(a.as_str()), target],
                (Label::Symbol(a), StateClass::Right) => vec![target, Symbol::terminal(a.as_str())],
            };
            productions.entry(var_of[q.as_str()].clone()).or_default().insert(body);
        }
    }
    for f in m.accepting() {
        productions.entry(var_of[f.as_str()].clone()).or_default().insert(Vec::new());
    }
    assemble(m, vars, &var_of, productions)
}

/// Maps each state to a grammar variable of the same name, renaming states
/// that clash with an alphabet symbol.
fn state_variables(m: &LinearAutomaton) -> (BTreeSet<String>, BTreeMap<&str, String>) {
    let mut names = FreshNames::new(m.states().iter().map(|s| s.to_string()).chain(m.alphabet().iter().cloned()));
    let mut var_of = BTreeMap::new();
    for q in m.states() {
        let v = if m.alphabet().contains(q) {
            names.fresh(q)
        } else {
            q.to_string()
        };
        var_of.insert(q, v);
    }
    (var_of.values().cloned().collect(), var_of)
}

fn assemble(
    m: &LinearAutomaton,
    mut vars: BTreeSet<String>,
    var_of: &BTreeMap<&str, String>,
    productions: BTreeMap<String, BTreeSet<Vec<Symbol>>>,
) -> LinearGrammar {
    let mut out: BTreeSet<Production> = productions
        .iter()
        .flat_map(|(h, bodies)| bodies.iter().map(move |b| Production::unchecked(h.clone(), b.clone())))
        .collect();
    let start = if m.initial().len() == 1 {
        var_of[m.initial().iter().next().unwrap().as_str()].clone()
    } else {
        let mut names = FreshNames::new(vars.iter().chain(m.alphabet()).cloned());
        let s = names.fresh("S");
        for q in m.initial() {
            for body in productions.get(&var_of[q.as_str()]).into_iter().flatten() {
                out.insert(Production::unchecked(s.clone(), body.clone()));
            }
        }
        vars.insert(s.clone());
        s
    };
    LinearGrammar::from_parts(start, m.alphabet().clone(), vars, out)
}

/// DLA for a deterministic linear grammar.
///
/// The SLNF of a deterministic linear grammar only has `A -> aB`, `A -> Ba`
/// and `A -> λ` bodies; right-linear variables become left states,
/// left-linear ones right states, and `A -> λ` marks `A` accepting.
pub fn det_grammar_to_dla(g: &LinearGrammar) -> Result<LinearAutomaton, GrammarError> {
    if !g.is_deterministic_linear() {
        return Err(GrammarError::NotDeterministicLinear);
    }
    let slnf = to_slnf(g);
    assert!(
        slnf.productions().iter().all(|p| matches!(
            p.body(),
            [] | [Symbol::Terminal(_), Symbol::Variable(_)] | [Symbol::Variable(_), Symbol::Terminal(_)]
        )),
        "SLNF of a deterministic linear grammar has only aB, Ba and λ bodies"
    );
    let mut left = BTreeSet::new();
    let mut right = BTreeSet::new();
    for v in slnf.variables() {
        match slnf.class_of(v) {
            VariableClass::LeftLinear => right.insert(v.clone()),
            _ => left.insert(v.clone()),
        };
    }
    let m = slnf_to_nla(&slnf, StateClass::Left);
    debug_assert_eq!(m.left_states(), &left);
    debug_assert_eq!(m.right_states(), &right);
    debug_assert!(m.is_deterministic());
    Ok(m)
}

/// Even NLA for an even linear grammar.
///
/// The grammar is brought to even normal form, each `A -> aBb` is split into
/// `A -> aC`, `C -> Bb` with a fresh `C`, and the result is turned into an
/// automaton. The sink for `A -> a` bodies is a right state so every move
/// crosses classes.
pub fn even_grammar_to_nla(g: &LinearGrammar) -> Result<LinearAutomaton, GrammarError> {
    let g = to_even_normal_form(g)?;
    let mut names = FreshNames::new(g.variables().iter().chain(g.terminals()).cloned());
    let mut vars = g.variables().clone();
    let mut productions = BTreeSet::new();
    for p in g.productions() {
        match p.body() {
            [a @ Symbol::Terminal(_), b @ Symbol::Variable(_), c @ Symbol::Terminal(_)] => {
                let fresh = names.fresh(p.head());
                vars.insert(fresh.clone());
                productions.insert(Production::unchecked(
                    p.head(),
                    vec![a.clone(), Symbol::Variable(fresh.clone())],
                ));
                productions.insert(Production::unchecked(fresh, vec![b.clone(), c.clone()]));
            }
            _ => {
                productions.insert(p.clone());
            }
        }
    }
    let split = LinearGrammar::from_parts(g.start().to_string(), g.terminals().clone(), vars, productions);
    Ok(slnf_to_nla(&split, StateClass::Right))
}

/// Even linear grammar (in even normal form) for an even NLA.
///
/// Starting from the one-variable-per-state grammar, every `q -> a p` is
/// replaced by `q -> a x` for each body `x` of `p`, and every `p -> q a` by
/// `p -> x a` for each body `x` of `q`; `q -> λ` is kept for accepting `q`.
pub fn even_nla_to_grammar(m: &LinearAutomaton) -> Result<LinearGrammar, AutomatonError> {
    if let Some((from, to)) = m.first_uneven_move()? {
        return Err(AutomatonError::NotEven { from, to });
    }
    let base = nla_to_grammar(m);
    let (vars, var_of) = state_variables(m);
    fn bodies<'a>(g: &'a LinearGrammar, v: &'a str) -> Vec<&'a [Symbol]> {
        g.productions_of(v).map(Production::body).collect()
    }
    let mut folded: BTreeMap<String, BTreeSet<Vec<Symbol>>> = BTreeMap::new();
    for q in m.states() {
        let v = &var_of[q];
        let entry = folded.entry(v.clone()).or_default();
        for body in bodies(&base, v) {
            match body {
                [] => {
                    entry.insert(Vec::new());
                }
                [a @ Symbol::Terminal(_), Symbol::Variable(p)] => {
                    for x in bodies(&base, p) {
                        let mut b = vec![a.clone()];
                        b.extend_from_slice(x);
                        entry.insert(b);
                    }
                }
                [Symbol::Variable(p), a @ Symbol::Terminal(_)] => {
                    for x in bodies(&base, p) {
                        let mut b = x.to_vec();
                        b.push(a.clone());
                        entry.insert(b);
                    }
                }
                _ => unreachable!("state grammar of a λ-free automaton"),
            }
        }
    }
    Ok(assemble(m, vars, &var_of, folded))
}
