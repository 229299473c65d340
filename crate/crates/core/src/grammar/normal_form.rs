use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{BodyShape, LinearGrammar, Production, Symbol, VariableClass};
use crate::error::GrammarError;
use crate::word::FreshNames;

fn fresh_names(g: &LinearGrammar) -> FreshNames {
    FreshNames::new(g.variables().iter().chain(g.terminals().iter()).cloned())
}

fn rebuild(
    g: &LinearGrammar,
    extra_vars: impl IntoIterator<Item = String>,
    productions: BTreeSet<Production>,
) -> LinearGrammar {
    let mut variables = g.variables().clone();
    variables.extend(extra_vars);
    LinearGrammar::from_parts(
        g.start().to_string(),
        g.terminals().clone(),
        variables,
        productions,
    )
}

/// Linear normal form.
///
/// 1. Every `A -> u B v` with both flanks non-empty is split at the variable:
///    productions sharing head and left flank `u` go through one fresh `C`,
///    giving `A -> u C` and `C -> B v`.
/// 2. Each variable that still mixes `u B` and `B v` bodies has its `B v`
///    bodies moved behind a fresh `C`: `A -> C`, `C -> B v`.
///
/// A grammar already in LNF is returned unchanged.
pub fn to_lnf(g: &LinearGrammar) -> LinearGrammar {
    if g.is_lnf() {
        return g.clone();
    }
    let mut names = fresh_names(g);
    let mut fresh = Vec::new();

    let mut productions = BTreeSet::new();
    let mut groups: BTreeMap<(&str, &[Symbol]), Vec<&Production>> = BTreeMap::new();
    for p in g.productions() {
        match p.shape() {
            BodyShape::Linear { left, right, .. } if !left.is_empty() && !right.is_empty() => {
                groups.entry((p.head(), left)).or_default().push(p);
            }
            _ => {
                productions.insert(p.clone());
            }
        }
    }
    for ((head, left), members) in groups {
        let c = names.fresh(head);
        let mut body = left.to_vec();
        body.push(Symbol::Variable(c.clone()));
        productions.insert(Production::unchecked(head, body));
        for p in members {
            let split = p.body()[left.len()..].to_vec();
            productions.insert(Production::unchecked(c.clone(), split));
        }
        fresh.push(c);
    }
    let stage = rebuild(g, fresh.iter().cloned(), productions);

    let mixed: Vec<String> = stage
        .variables()
        .iter()
        .filter(|v| stage.class_of(v) == VariableClass::Neither)
        .cloned()
        .collect();
    if mixed.is_empty() {
        return stage;
    }
    let mut productions = stage.productions().clone();
    for a in &mixed {
        let c = names.fresh(a);
        let moved: Vec<Production> = stage
            .productions_of(a)
            .filter(|p| {
                matches!(p.shape(), BodyShape::Linear { left, right, .. }
                    if left.is_empty() && !right.is_empty())
            })
            .cloned()
            .collect();
        for p in moved {
            productions.remove(&p);
            productions.insert(Production::unchecked(c.clone(), p.body().to_vec()));
        }
        productions.insert(Production::unchecked(
            a.clone(),
            vec![Symbol::Variable(c.clone())],
        ));
        fresh.push(c);
    }
    rebuild(&stage, fresh, productions)
}

fn is_slnf_body(body: &[Symbol]) -> bool {
    matches!(
        body,
        [] | [_] | [Symbol::Terminal(_), Symbol::Variable(_)] | [Symbol::Variable(_), Symbol::Terminal(_)]
    )
}

/// Strong linear normal form.
///
/// Runs [`to_lnf`], then shortens every body that is not yet `aB`, `Ba`, `a`,
/// `B` or λ. Right-linear (and `Both`) variables peel terminals from the left,
/// left-linear ones from the right. The long bodies of `A` that share the
/// peeled terminal `a` go through one fresh `C`: `A -> a C` (or `A -> C a`)
/// and `C` receives the shortened bodies. Fresh variables are processed the
/// same way, peeling from the same side as their parent.
pub fn to_slnf(g: &LinearGrammar) -> LinearGrammar {
    let g = to_lnf(g);
    if g.is_slnf() {
        return g;
    }
    let mut names = fresh_names(&g);
    let mut fresh = Vec::new();
    let mut productions = BTreeSet::new();
    let mut work: VecDeque<(String, bool, Vec<Vec<Symbol>>)> = g
        .variables()
        .iter()
        .map(|v| {
            let from_left = g.class_of(v) != VariableClass::LeftLinear;
            let bodies = g.productions_of(v).map(|p| p.body().to_vec()).collect();
            (v.clone(), from_left, bodies)
        })
        .collect();
    while let Some((head, from_left, bodies)) = work.pop_front() {
        let mut groups: BTreeMap<Symbol, Vec<Vec<Symbol>>> = BTreeMap::new();
        for mut body in bodies {
            if is_slnf_body(&body) {
                productions.insert(Production::unchecked(head.clone(), body));
                continue;
            }
            let peeled = if from_left { body.remove(0) } else { body.pop().expect("long body") };
            groups.entry(peeled).or_default().push(body);
        }
        for (a, rest) in groups {
            let c = names.fresh(&head);
            let outer = if from_left {
                vec![a, Symbol::Variable(c.clone())]
            } else {
                vec![Symbol::Variable(c.clone()), a]
            };
            productions.insert(Production::unchecked(head.clone(), outer));
            fresh.push(c.clone());
            work.push_back((c, from_left, rest));
        }
    }
    rebuild(&g, fresh, productions)
}

/// Removes every `A -> B` production, giving `A` the non-unit bodies of each
/// variable reachable from it through unit productions.
pub fn eliminate_unit_productions(g: &LinearGrammar) -> LinearGrammar {
    if !g.productions().iter().any(Production::is_unit) {
        return g.clone();
    }
    let mut units: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for p in g.productions().iter().filter(|p| p.is_unit()) {
        units.entry(p.head()).or_default().push(p.body()[0].name());
    }
    let mut productions = BTreeSet::new();
    for a in g.variables() {
        let mut reach: BTreeSet<&str> = BTreeSet::from([a.as_str()]);
        let mut queue = VecDeque::from([a.as_str()]);
        while let Some(v) = queue.pop_front() {
            for &w in units.get(v).into_iter().flatten() {
                if reach.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        for v in reach {
            for p in g.productions_of(v).filter(|p| !p.is_unit()) {
                productions.insert(Production::unchecked(a.clone(), p.body().to_vec()));
            }
        }
    }
    rebuild(g, [], productions)
}

/// Even normal form: every body is `aBb`, a single terminal, or λ.
///
/// Unit productions are eliminated first; wider bodies are then unwrapped one
/// terminal pair at a time through fresh variables, so `A -> abba` becomes
/// `A -> a C a`, `C -> b D b`, `D -> λ`.
pub fn to_even_normal_form(g: &LinearGrammar) -> Result<LinearGrammar, GrammarError> {
    if !g.is_even_linear() {
        return Err(GrammarError::NotEvenLinear);
    }
    let g = eliminate_unit_productions(g);
    if g.is_even_normal_form() {
        return Ok(g);
    }
    let mut names = fresh_names(&g);
    let mut fresh = Vec::new();
    let mut productions = BTreeSet::new();
    for p in g.productions() {
        let mut head = p.head().to_string();
        let mut body = p.body().to_vec();
        loop {
            let done = match Production::unchecked(head.clone(), body.clone()).shape() {
                BodyShape::Terminals(t) => t.len() <= 1,
                BodyShape::Linear { left, .. } => left.len() <= 1,
            };
            if done {
                break;
            }
            let c = names.fresh(&head);
            let last = body.pop().expect("wide body");
            let first = body.remove(0);
            productions.insert(Production::unchecked(
                head,
                vec![first, Symbol::Variable(c.clone()), last],
            ));
            fresh.push(c.clone());
            head = c;
        }
        productions.insert(Production::unchecked(head, body));
    }
    Ok(rebuild(&g, fresh, productions))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::{enumerate_language, validate_grammar, RawGrammar};

    fn grammar(start: &str, terminals: &[&str], variables: &[&str], rules: &[(&str, &str)]) -> LinearGrammar {
        let mut raw = RawGrammar::new(start, terminals, variables);
        for (h, b) in rules {
            raw = raw.rule(h, b);
        }
        validate_grammar(&raw).unwrap()
    }

    fn eq1() -> LinearGrammar {
        grammar(
            "S",
            &["a", "b"],
            &["S"],
            &[
                ("S", "a S b"),
                ("S", "a S b b"),
                ("S", "a S b b b"),
                ("S", "a b"),
                ("S", "a b b"),
                ("S", "a b b b"),
            ],
        )
    }

    fn det_2_1() -> LinearGrammar {
        grammar(
            "S",
            &["a", "b"],
            &["S", "A"],
            &[("S", "b b S"), ("S", "a A b"), ("A", "a a A b b"), ("A", "eps")],
        )
    }

    fn same_language(a: &LinearGrammar, b: &LinearGrammar, n: usize) {
        assert_eq!(enumerate_language(a, n), enumerate_language(b, n));
    }

    #[test]
    fn lnf_of_example_grammar_matches_known_shape() {
        let lnf = to_lnf(&eq1());
        assert!(lnf.is_lnf());
        same_language(&eq1(), &lnf, 12);
        // S -> a S_1 | ab | abb | abbb ; S_1 -> S b | S bb | S bbb
        assert_eq!(lnf.variables().len(), 2);
        assert_eq!(lnf.productions().len(), 7);
        assert_eq!(
            lnf.classify_variable("S_1"),
            Ok(VariableClass::LeftLinear)
        );
    }

    #[test]
    fn lnf_is_identity_on_lnf() {
        let lnf = to_lnf(&eq1());
        assert_eq!(to_lnf(&lnf), lnf);
    }

    #[test]
    fn lnf_mixed_variable_is_funneled() {
        let g = grammar(
            "S",
            &["a", "b"],
            &["S"],
            &[("S", "a S"), ("S", "S b"), ("S", "eps")],
        );
        let lnf = to_lnf(&g);
        assert!(lnf.is_lnf());
        assert!(lnf
            .productions()
            .contains(&Production::unchecked("S", vec![Symbol::variable("S_1")])));
        same_language(&g, &lnf, 8);
    }

    #[test]
    fn deterministic_grammar_keeps_condition() {
        let lnf = to_lnf(&det_2_1());
        assert!(lnf.is_lnf());
        assert!(lnf.satisfies_deterministic_condition());
        same_language(&det_2_1(), &lnf, 12);
        let slnf = to_slnf(&det_2_1());
        assert!(slnf.is_slnf());
        assert!(slnf.satisfies_deterministic_condition());
        same_language(&det_2_1(), &slnf, 12);
    }

    #[test]
    fn slnf_of_example() {
        let slnf = to_slnf(&eq1());
        assert!(slnf.is_slnf());
        same_language(&eq1(), &slnf, 12);
        assert_eq!(to_slnf(&slnf), slnf);
    }

    #[test]
    fn slnf_peels_left_linear_from_the_right() {
        let g = grammar(
            "S",
            &["a", "b"],
            &["S", "A"],
            &[("S", "a A"), ("S", "a b"), ("A", "S b b"), ("A", "b a b")],
        );
        let slnf = to_slnf(&g);
        assert!(slnf.is_slnf(), "{slnf}");
        same_language(&g, &slnf, 10);
    }

    #[test]
    fn unit_elimination() {
        let g = grammar("S", &["a"], &["S", "A"], &[("S", "A"), ("A", "a")]);
        let expected = grammar("S", &["a"], &["S", "A"], &[("S", "a"), ("A", "a")]);
        assert_eq!(eliminate_unit_productions(&g), expected);

        let cyc = grammar(
            "S",
            &["a"],
            &["S", "A"],
            &[("S", "A"), ("A", "S"), ("S", "a")],
        );
        assert_eq!(eliminate_unit_productions(&cyc), expected);
    }

    #[test]
    fn even_normal_form() {
        let g = grammar(
            "S",
            &["a", "b", "c"],
            &["S"],
            &[("S", "a b S b a"), ("S", "c")],
        );
        let e = to_even_normal_form(&g).unwrap();
        assert!(e.is_even_normal_form());
        same_language(&g, &e, 10);

        let pal = grammar("S", &["a"], &["S"], &[("S", "a S a"), ("S", "eps")]);
        assert_eq!(to_even_normal_form(&pal).unwrap(), pal);

        let abba = grammar("S", &["a", "b"], &["S"], &[("S", "a b b a")]);
        let e = to_even_normal_form(&abba).unwrap();
        assert!(e.is_even_normal_form());
        assert!(e.productions().iter().any(|p| p.body().is_empty()));
        same_language(&abba, &e, 10);

        let uneven = grammar("S", &["a", "b"], &["S"], &[("S", "a S b b")]);
        assert_eq!(to_even_normal_form(&uneven), Err(GrammarError::NotEvenLinear));
    }
}
