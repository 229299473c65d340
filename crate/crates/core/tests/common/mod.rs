//! Seeded random grammars and automata shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use linlang::automaton::validate_automaton;
use linlang::grammar::validate_grammar;
use linlang::{LinearAutomaton, LinearGrammar, RawAutomaton, RawGrammar};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const TERMINALS: [&str; 2] = ["a", "b"];
const VARIABLES: [&str; 4] = ["S", "A", "B", "C"];

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

fn pick_terminals(rng: &mut StdRng, sigma: &[&str], n: usize) -> Vec<String> {
    (0..n).map(|_| sigma.choose(rng).unwrap().to_string()).collect()
}

fn pick_up_to(rng: &mut StdRng, sigma: &[&str], max: usize) -> Vec<String> {
    let n = rng.gen_range(0..=max);
    pick_terminals(rng, sigma, n)
}

fn finish_grammar(sigma: &[&str], vars: &[&str], rules: Vec<(String, Vec<String>)>) -> LinearGrammar {
    let mut raw = RawGrammar::new(vars[0], sigma, vars);
    raw.productions = rules;
    validate_grammar(&raw).expect("generated grammar is valid")
}

/// Linear grammar with 1 to 4 variables and 1 or 2 terminals; bodies hold at
/// most 3 terminals and at most one variable.
pub fn random_grammar(rng: &mut StdRng) -> LinearGrammar {
    let sigma = &TERMINALS[..rng.gen_range(1..=2)];
    let vars = &VARIABLES[..rng.gen_range(1..=4)];
    let mut rules = Vec::new();
    for _ in 0..rng.gen_range(1..=6) {
        let head = vars.choose(rng).unwrap().to_string();
        let mut body = pick_up_to(rng, sigma, 3);
        if rng.gen_bool(0.6) {
            let at = rng.gen_range(0..=body.len());
            body.insert(at, vars.choose(rng).unwrap().to_string());
        }
        rules.push((head, body));
    }
    finish_grammar(sigma, vars, rules)
}

/// Deterministic linear grammar: bodies `a u B v` with a distinct leading
/// terminal per variable, or λ.
pub fn random_det_grammar(rng: &mut StdRng) -> LinearGrammar {
    let sigma = &TERMINALS[..rng.gen_range(1..=2)];
    let vars = &VARIABLES[..rng.gen_range(1..=4)];
    let mut rules = Vec::new();
    for v in vars {
        for a in sigma {
            if rng.gen_bool(0.6) {
                let mut body = vec![a.to_string()];
                body.extend(pick_up_to(rng, sigma, 1));
                body.push(vars.choose(rng).unwrap().to_string());
                body.extend(pick_up_to(rng, sigma, 2));
                rules.push((v.to_string(), body));
            }
        }
        if rng.gen_bool(0.5) {
            rules.push((v.to_string(), Vec::new()));
        }
    }
    finish_grammar(sigma, vars, rules)
}

/// Even linear grammar: bodies `u B v` with `|u| = |v| ≤ 2`, terminal strings
/// of length at most 3, or λ.
pub fn random_even_grammar(rng: &mut StdRng) -> LinearGrammar {
    let sigma = &TERMINALS[..rng.gen_range(1..=2)];
    let vars = &VARIABLES[..rng.gen_range(1..=3)];
    let mut rules = Vec::new();
    for _ in 0..rng.gen_range(1..=6) {
        let head = vars.choose(rng).unwrap().to_string();
        let body = if rng.gen_bool(0.6) {
            let k = rng.gen_range(0..=2);
            let mut body = pick_terminals(rng, sigma, k);
            body.push(vars.choose(rng).unwrap().to_string());
            body.extend(pick_terminals(rng, sigma, k));
            body
        } else {
            pick_up_to(rng, sigma, 3)
        };
        rules.push((head, body));
    }
    finish_grammar(sigma, vars, rules)
}

/// Automaton with 1 to 4 states over 1 or 2 symbols. With `lambda`, some
/// cells are λ-moves.
pub fn random_automaton(rng: &mut StdRng, lambda: bool) -> LinearAutomaton {
    let sigma = &TERMINALS[..rng.gen_range(1..=2)];
    let n = rng.gen_range(1..=4);
    let states: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for q in &states {
        if rng.gen_bool(0.5) {
            left.push(q.as_str());
        } else {
            right.push(q.as_str());
        }
    }
    let mut raw = RawAutomaton::new(sigma, &left, &right);
    let mut labels: Vec<Option<&str>> = sigma.iter().map(|a| Some(*a)).collect();
    if lambda {
        labels.push(None);
    }
    let mut cells: BTreeMap<(String, Option<&str>), Vec<String>> = BTreeMap::new();
    for _ in 0..rng.gen_range(0..=2 * n + 2) {
        let q = states.choose(rng).unwrap().clone();
        let label = *labels.choose(rng).unwrap();
        let t = states.choose(rng).unwrap().clone();
        cells.entry((q, label)).or_default().push(t);
    }
    for ((q, label), targets) in cells {
        let t: Vec<&str> = targets.iter().map(String::as_str).collect();
        raw = raw.transition(&q, label.unwrap_or("eps"), &t);
    }
    let initial: Vec<&str> = states
        .iter()
        .filter(|_| rng.gen_bool(0.4))
        .map(String::as_str)
        .collect();
    let initial = if initial.is_empty() { vec![states[0].as_str()] } else { initial };
    let accepting: Vec<&str> = states.iter().filter(|_| rng.gen_bool(0.4)).map(String::as_str).collect();
    validate_automaton(&raw.initial(&initial).accepting(&accepting)).expect("generated automaton is valid")
}

/// λ-free automaton whose moves all cross between the classes.
pub fn random_even_automaton(rng: &mut StdRng) -> LinearAutomaton {
    let sigma = &TERMINALS[..rng.gen_range(1..=2)];
    let nl = rng.gen_range(1..=2);
    let nr = rng.gen_range(1..=2);
    let left: Vec<String> = (0..nl).map(|i| format!("q{i}")).collect();
    let right: Vec<String> = (0..nr).map(|i| format!("p{i}")).collect();
    let l: Vec<&str> = left.iter().map(String::as_str).collect();
    let r: Vec<&str> = right.iter().map(String::as_str).collect();
    let mut raw = RawAutomaton::new(sigma, &l, &r);
    for (from, to) in [(&l, &r), (&r, &l)] {
        for q in from.iter() {
            for a in sigma {
                let targets: Vec<&str> = to.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
                raw = raw.transition(q, a, &targets);
            }
        }
    }
    let all: Vec<&str> = l.iter().chain(&r).copied().collect();
    let initial: Vec<&str> = all.iter().copied().filter(|_| rng.gen_bool(0.3)).collect();
    let initial = if initial.is_empty() { vec![l[0]] } else { initial };
    let accepting: Vec<&str> = all.iter().copied().filter(|_| rng.gen_bool(0.4)).collect();
    validate_automaton(&raw.initial(&initial).accepting(&accepting)).expect("generated automaton is valid")
}

/// Whether `g` and `h` are equal up to a renaming of variables that keeps the
/// start variable.
pub fn isomorphic(g: &LinearGrammar, h: &LinearGrammar) -> bool {
    use linlang::{Production, Symbol};
    if g.variables().len() != h.variables().len()
        || g.productions().len() != h.productions().len()
        || g.terminals() != h.terminals()
    {
        return false;
    }
    let gv: Vec<&String> = g.variables().iter().filter(|v| *v != g.start()).collect();
    let hv: Vec<&String> = h.variables().iter().filter(|v| *v != h.start()).collect();
    let mut perm: Vec<usize> = (0..hv.len()).collect();
    loop {
        let mut map: BTreeMap<&str, &str> = gv.iter().zip(&perm).map(|(a, &i)| (a.as_str(), hv[i].as_str())).collect();
        map.insert(g.start(), h.start());
        let renamed: std::collections::BTreeSet<Production> = g
            .productions()
            .iter()
            .map(|p| {
                let body = p
                    .body()
                    .iter()
                    .map(|s| match s {
                        Symbol::Variable(v) => Symbol::variable(map[v.as_str()]),
                        t => t.clone(),
                    })
                    .collect();
                Production::new(map[p.head()], body).unwrap()
            })
            .collect();
        if &renamed == h.productions() {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
