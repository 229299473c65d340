//! The `Lin(k)` hierarchy of explicit nondeterminism.
//!
//! `Lin(k)` is the class of languages accepted by some NLA whose degree of
//! explicit nondeterminism ([`LinearAutomaton::ndeg`]) is `k`. The languages
//! `L(k) = {a^m b^n : m ≤ n ≤ (k+1)m}` witness the levels.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::automaton::{Delta, Label, LinearAutomaton};
use crate::error::AutomatonError;
use crate::word::{FreshNames, Word};

/// Splits `w` as `a^m b^n`, or `None` when it has another shape.
fn a_then_b(w: &Word) -> Option<(usize, usize)> {
    let syms = w.symbols();
    let m = syms.iter().take_while(|s| *s == "a").count();
    let rest = &syms[m..];
    rest.iter().all(|s| s == "b").then_some((m, rest.len()))
}

/// `w = a^m b^n` with `m ≤ n ≤ (k+1)m`; the empty word is included.
pub fn lk_predicate(k: usize, w: &Word) -> bool {
    match a_then_b(w) {
        Some((m, n)) => m <= n && n <= (k + 1) * m,
        None => false,
    }
}

/// [`lk_predicate`] with `m ≥ 1`, which excludes the empty word.
pub fn lk_predicate_strict(k: usize, w: &Word) -> bool {
    !w.is_empty() && lk_predicate(k, w)
}

/// NLA for `L(k)` with `ndeg = k`.
///
/// The left state `q0` (initial and accepting) reads one `a` into the right
/// chain `p0 … pk`; each `p_i` reads one `b` and either returns to the left
/// state `q1` (accepting, same moves as `q0`) or continues to `p_{i+1}`. A
/// round therefore consumes one `a` and between `1` and `k+1` `b`s, and the
/// only nondeterminism is the `k` branching cells of the chain.
pub fn build_lk_automaton(k: usize) -> LinearAutomaton {
    let s = |x: &str| x.to_string();
    let p = |i: usize| format!("p{i}");
    let mut delta: Delta = BTreeMap::new();
    delta.insert((s("q0"), Label::symbol("a")), BTreeSet::from([p(0)]));
    delta.insert((s("q1"), Label::symbol("a")), BTreeSet::from([p(0)]));
    for i in 0..=k {
        let mut targets = BTreeSet::from([s("q1")]);
        if i < k {
            targets.insert(p(i + 1));
        }
        delta.insert((p(i), Label::symbol("b")), targets);
    }
    LinearAutomaton::from_parts(
        BTreeSet::from([s("q0"), s("q1")]),
        (0..=k).map(p).collect(),
        BTreeSet::from([s("a"), s("b")]),
        delta,
        BTreeSet::from([s("q0")]),
        BTreeSet::from([s("q0"), s("q1")]),
    )
}

/// The `k` this automaton witnesses: its `ndeg`, an upper bound on the
/// hierarchy level of its language.
pub fn lin_k_upper_bound(m: &LinearAutomaton) -> Result<usize, AutomatonError> {
    m.ndeg()
}

/// Adds two fresh left states `x`, `y` and the single move
/// `δ(x, a) = {x, y}`. Neither state is reachable, so the language is
/// unchanged while `ndeg` grows by one.
pub fn pad_ndeg(m: &LinearAutomaton, a: &str) -> Result<LinearAutomaton, AutomatonError> {
    if m.has_lambda_moves() {
        return Err(AutomatonError::HasLambdaMoves);
    }
    if !m.alphabet().contains(a) {
        return Err(AutomatonError::SymbolNotInAlphabet(a.to_string()));
    }
    let mut names = FreshNames::new(m.states());
    let x = names.fresh("pad");
    let y = names.fresh("pad");
    let mut left = m.left_states().clone();
    left.insert(x.clone());
    left.insert(y.clone());
    let mut delta = m.delta().clone();
    delta.insert((x.clone(), Label::symbol(a)), BTreeSet::from([x, y]));
    Ok(LinearAutomaton::from_parts(
        left,
        m.right_states().clone(),
        m.alphabet().clone(),
        delta,
        m.initial().clone(),
        m.accepting().clone(),
    ))
}

/// `L(k)` with its automaton and membership predicate.
#[derive(Clone)]
pub struct HierarchyWitness {
    pub k: usize,
    pub automaton: LinearAutomaton,
    pub predicate: Arc<dyn Fn(&Word) -> bool + Send + Sync>,
}

impl HierarchyWitness {
    pub fn new(k: usize) -> Self {
        HierarchyWitness {
            k,
            automaton: build_lk_automaton(k),
            predicate: Arc::new(move |w| lk_predicate(k, w)),
        }
    }
}

impl std::fmt::Debug for HierarchyWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HierarchyWitness")
            .field("k", &self.k)
            .field("automaton", &self.automaton)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::all_words;

    fn w(s: &str) -> Word {
        Word::from_chars(s)
    }

    #[test]
    fn predicate_examples() {
        assert!(lk_predicate(1, &w("ab")));
        assert!(!lk_predicate(1, &w("ba")));
        assert!(lk_predicate(3, &w("abbb")));
        assert!(lk_predicate(2, &w("abbb")));
        assert!(!lk_predicate(1, &w("abbb")));
        assert!(lk_predicate(0, &Word::empty()));
        assert!(!lk_predicate_strict(0, &Word::empty()));
        assert!(!lk_predicate(5, &w("aab")));
        assert!(!lk_predicate(5, &w("abab")));
    }

    #[test]
    fn k0_is_deterministic_anbn() {
        let m = build_lk_automaton(0);
        assert!(m.is_deterministic());
        assert_eq!(m.ndeg().unwrap(), 0);
        let expected: BTreeSet<Word> = (0..=5).map(|n| w(&format!("{}{}", "a".repeat(n), "b".repeat(n)))).collect();
        assert_eq!(m.enumerate_accepted(10), expected);
    }

    #[test]
    fn k2_examples() {
        let m = build_lk_automaton(2);
        assert_eq!(m.ndeg().unwrap(), 2);
        assert!(m.accepts(&w("aabbb")).unwrap());
        assert!(!m.accepts(&w("abbbb")).unwrap());
    }

    #[test]
    fn automaton_matches_predicate() {
        for k in 0..=4 {
            let m = build_lk_automaton(k);
            assert_eq!(m.ndeg().unwrap(), k);
            let expected: BTreeSet<Word> = all_words(m.alphabet(), 10)
                .into_iter()
                .filter(|x| lk_predicate(k, x))
                .collect();
            assert_eq!(m.enumerate_accepted(10), expected, "k = {k}");
        }
    }

    #[test]
    fn determinizable_only_at_level_zero() {
        assert!(build_lk_automaton(0).is_determinizable().unwrap());
        for k in 1..=4 {
            let mixed = build_lk_automaton(k).mixed_subsets().unwrap();
            assert_eq!(
                mixed[0].members,
                BTreeSet::from(["p1".to_string(), "q1".to_string()])
            );
        }
    }

    #[test]
    fn upper_bound_is_ndeg() {
        assert_eq!(lin_k_upper_bound(&build_lk_automaton(4)).unwrap(), 4);
    }

    #[test]
    fn padding_adds_one() {
        let m = build_lk_automaton(1);
        let padded = pad_ndeg(&m, "a").unwrap();
        assert_eq!(padded.ndeg().unwrap(), 2);
        assert_eq!(padded.enumerate_accepted(10), m.enumerate_accepted(10));
        let twice = pad_ndeg(&padded, "b").unwrap();
        assert_eq!(twice.ndeg().unwrap(), 3);
        assert_eq!(twice.state_count(), m.state_count() + 4);
        assert!(pad_ndeg(&m, "c").is_err());
    }

    #[test]
    fn witness_bundles_both_sides() {
        let h = HierarchyWitness::new(3);
        assert_eq!(h.automaton.ndeg().unwrap(), 3);
        assert!((h.predicate)(&w("abbbb")));
        assert!(!(h.predicate)(&w("abbbbb")));
    }
}
