//! Reference grammars, automata and language predicates.
//!
//! Grammar and automaton fixtures are stored as text files under `corpus/`
//! and parsed on load. Each fixture carries an oracle: a direct membership
//! check on strings that never goes through grammar or automaton code.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::automaton::LinearAutomaton;
use crate::grammar::LinearGrammar;
use crate::hierarchy::lk_predicate;
use crate::textio::{parse_automaton, parse_grammar};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureKind {
    Grammar,
    Automaton,
    Predicate,
}

#[derive(Debug, Clone)]
pub enum Payload {
    Grammar(LinearGrammar),
    Automaton(LinearAutomaton),
    /// The fixture is its oracle.
    Predicate,
}

/// A language given by a membership test over a fixed alphabet.
#[derive(Clone)]
pub struct Oracle {
    pub alphabet: BTreeSet<String>,
    pub accepts: Arc<dyn Fn(&Word) -> bool + Send + Sync>,
}

impl Oracle {
    fn new(alphabet: &[&str], accepts: impl Fn(&Word) -> bool + Send + Sync + 'static) -> Self {
        Oracle {
            alphabet: alphabet.iter().map(|s| s.to_string()).collect(),
            accepts: Arc::new(accepts),
        }
    }

    pub fn contains(&self, w: &Word) -> bool {
        (self.accepts)(w)
    }

    /// Members of length at most `max_len`.
    pub fn enumerate(&self, max_len: usize) -> BTreeSet<Word> {
        crate::all_words(&self.alphabet, max_len)
            .into_iter()
            .filter(|w| self.contains(w))
            .collect()
    }
}

impl fmt::Debug for Oracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Oracle")
            .field("alphabet", &self.alphabet)
            .finish_non_exhaustive()
    }
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub id: String,
    pub kind: FixtureKind,
    pub payload: Payload,
    pub provenance: &'static str,
    pub caveats: &'static str,
    pub oracle: Oracle,
}

impl Fixture {
    pub fn grammar(&self) -> Option<&LinearGrammar> {
        match &self.payload {
            Payload::Grammar(g) => Some(g),
            _ => None,
        }
    }

    pub fn automaton(&self) -> Option<&LinearAutomaton> {
        match &self.payload {
            Payload::Automaton(m) => Some(m),
            _ => None,
        }
    }
}

/// Lengths of maximal blocks of equal symbols, e.g. `aabbba` gives
/// `[(a, 2), (b, 3), (a, 1)]`.
fn runs(w: &Word) -> Vec<(&str, usize)> {
    let mut out: Vec<(&str, usize)> = Vec::new();
    for s in w.symbols() {
        match out.last_mut() {
            Some((last, n)) if *last == s.as_str() => *n += 1,
            _ => out.push((s.as_str(), 1)),
        }
    }
    out
}

/// Membership tests used as independent oracles.
pub mod predicates {
    use super::runs;
    use crate::word::Word;

    fn is_const(w: &[String], s: &str) -> bool {
        w.iter().all(|x| x == s)
    }

    /// `a^m b^n` with `1 ≤ m ≤ n ≤ 3m`.
    pub fn eq1(w: &Word) -> bool {
        match runs(w).as_slice() {
            [("a", m), ("b", n)] => m <= n && *n <= 3 * m,
            _ => false,
        }
    }

    /// `{a^m b^n a^{2n} : m ≥ 1, n ≥ 0} ∪ {a^k b^{2m} a^m b^n : k, m ≥ 0, n ≥ 1}`,
    /// checked by trying every split of the string.
    pub fn exnla(w: &Word) -> bool {
        let s = w.symbols();
        let len = s.len();
        for n in 0..=len / 3 {
            let m = len - 3 * n;
            if m >= 1
                && is_const(&s[..m], "a")
                && is_const(&s[m..m + n], "b")
                && is_const(&s[m + n..], "a")
            {
                return true;
            }
        }
        for m in 0..=len / 3 {
            for n in 1..=len - 3 * m {
                let k = len - 3 * m - n;
                if is_const(&s[..k], "a")
                    && is_const(&s[k..k + 2 * m], "b")
                    && is_const(&s[k + 2 * m..k + 3 * m], "a")
                    && is_const(&s[k + 3 * m..], "b")
                {
                    return true;
                }
            }
        }
        false
    }

    /// `{a^n b^n : n ≥ 1} ∪ {a^n c^n : n ≥ 1}`.
    pub fn anbn_ancn(w: &Word) -> bool {
        matches!(runs(w).as_slice(), [("a", m), ("b" | "c", n)] if m == n)
    }

    pub fn palindrome(w: &Word) -> bool {
        *w == w.reversed()
    }

    pub fn even_palindrome(w: &Word) -> bool {
        w.len().is_multiple_of(2) && palindrome(w)
    }

    /// `b^m a^n b^n` with `m` even and `n` odd.
    pub fn det_2_1(w: &Word) -> bool {
        match runs(w).as_slice() {
            [("a", n), ("b", k)] => n == k && n % 2 == 1,
            [("b", m), ("a", n), ("b", k)] => m % 2 == 0 && n == k && n % 2 == 1,
            _ => false,
        }
    }
}

/// Source file of every file-backed fixture.
const FILES: &[(&str, &str)] = &[
    ("ex_lg_grammar", include_str!("../corpus/ex_lg.grm")),
    ("ex_lnf_grammar", include_str!("../corpus/ex_lnf.grm")),
    ("ex_slnf_grammar", include_str!("../corpus/ex_slnf.grm")),
    ("det_grammar_2_1", include_str!("../corpus/det_2_1.grm")),
    ("det_grammar_2_1_lnf", include_str!("../corpus/det_2_1_lnf.grm")),
    ("det_grammar_2_1_slnf", include_str!("../corpus/det_2_1_slnf.grm")),
    ("even_palindrome_grammar", include_str!("../corpus/even_palindrome.grm")),
    ("ex_nla", include_str!("../corpus/ex_nla.lin")),
    ("dla_anbn_ancn", include_str!("../corpus/dla_anbn_ancn.lin")),
    ("palindrome_even", include_str!("../corpus/palindrome_even.lin")),
    ("palindrome_all", include_str!("../corpus/palindrome_all.lin")),
    ("lk_automaton_0", include_str!("../corpus/lk_0.lin")),
    ("lk_automaton_1", include_str!("../corpus/lk_1.lin")),
    ("lk_automaton_2", include_str!("../corpus/lk_2.lin")),
    ("lk_automaton_3", include_str!("../corpus/lk_3.lin")),
    ("lk_automaton_4", include_str!("../corpus/lk_4.lin")),
    ("lk_automaton_5", include_str!("../corpus/lk_5.lin")),
    ("lk_automaton_6", include_str!("../corpus/lk_6.lin")),
];

const PREDICATES: &[&str] = &["eq1_predicate", "exnla_predicate"];

/// Every registered id: file-backed fixtures first, then predicates.
pub fn fixture_ids() -> Vec<&'static str> {
    FILES.iter().map(|(id, _)| *id).chain(PREDICATES.iter().copied()).collect()
}

/// The checked-in text of a file-backed fixture.
pub fn source_text(id: &str) -> Option<&'static str> {
    FILES.iter().find(|(i, _)| *i == id).map(|(_, text)| *text)
}

/// Id of `lk_automaton(k)`, registered for `k ≤ 6`.
pub fn lk_fixture_id(k: usize) -> String {
    format!("lk_automaton_{k}")
}

const EQ1_PROVENANCE: &str = "worked linear grammar for a^m b^n with 1 ≤ m ≤ n ≤ 3m";
const DET_PROVENANCE: &str = "worked deterministic linear grammar S -> bbS | aAb, A -> aaAbb | eps";
const PALINDROME_CAVEAT: &str = "the drawn diagram marks only q0 accepting, which accepts the even-length \
palindromes; the accompanying text claims all palindromes, which palindrome_all accepts by also marking p1 and p2";

fn describe(id: &str) -> Option<(&'static str, &'static str, Oracle)> {
    let ab = ["a", "b"];
    let entry = match id {
        "ex_lg_grammar" | "eq1_predicate" => (EQ1_PROVENANCE, "", Oracle::new(&ab, predicates::eq1)),
        "ex_lnf_grammar" => (
            "linear normal form of the a^m b^n (m ≤ n ≤ 3m) grammar, as given with the worked example",
            "",
            Oracle::new(&ab, predicates::eq1),
        ),
        "ex_slnf_grammar" => (
            "strong linear normal form of the a^m b^n (m ≤ n ≤ 3m) grammar, variables S, A .. F",
            "",
            Oracle::new(&ab, predicates::eq1),
        ),
        "det_grammar_2_1" => (DET_PROVENANCE, "", Oracle::new(&ab, predicates::det_2_1)),
        "det_grammar_2_1_lnf" => (
            "linear normal form stage of the deterministic grammar, variables S, A .. E",
            "",
            Oracle::new(&ab, predicates::det_2_1),
        ),
        "det_grammar_2_1_slnf" => (
            "strong linear normal form stage of the deterministic grammar, E -> Abb split into E -> Fb, F -> Ab",
            "",
            Oracle::new(&ab, predicates::det_2_1),
        ),
        "even_palindrome_grammar" => (
            "even linear grammar for the even-length palindromes over {a, b}",
            "",
            Oracle::new(&ab, predicates::even_palindrome),
        ),
        "ex_nla" | "exnla_predicate" => (
            "worked λ-NLA with left states q0..q3, right states p1..p4 and δ(q0, λ) = {p3}",
            "",
            Oracle::new(&ab, predicates::exnla),
        ),
        "dla_anbn_ancn" => (
            "DLA for {a^n b^n : n ≥ 1} ∪ {a^n c^n : n ≥ 1}, a language with no deterministic linear grammar",
            "",
            Oracle::new(&["a", "b", "c"], predicates::anbn_ancn),
        ),
        "palindrome_even" => (
            "palindrome DLA exactly as drawn, F = {q0}",
            PALINDROME_CAVEAT,
            Oracle::new(&ab, predicates::even_palindrome),
        ),
        "palindrome_all" => (
            "palindrome DLA with F = {q0, p1, p2}",
            PALINDROME_CAVEAT,
            Oracle::new(&ab, predicates::palindrome),
        ),
        _ => {
            let k: usize = id.strip_prefix("lk_automaton_")?.parse().ok()?;
            (
                "witness automaton for L(k) = {a^m b^n : m ≤ n ≤ (k+1)m}",
                "the drawn witness reads its branching chain with the left head and so accepts \
                 {a^m b^n : n ≤ m ≤ (k+1)n}; this automaton mirrors it so that it accepts L(k) as defined",
                Oracle::new(&ab, move |w| lk_predicate(k, w)),
            )
        }
    };
    Some(entry)
}

pub fn load_fixture(id: &str) -> Result<Fixture, CorpusError> {
    let unknown = || CorpusError::UnknownFixture(id.to_string());
    let (kind, payload) = if let Some(text) = source_text(id) {
        if text.starts_with("grammar") {
            let g = parse_grammar(text).expect("corpus grammar parses");
            (FixtureKind::Grammar, Payload::Grammar(g))
        } else {
            let m = parse_automaton(text).expect("corpus automaton parses");
            (FixtureKind::Automaton, Payload::Automaton(m))
        }
    } else if PREDICATES.contains(&id) {
        (FixtureKind::Predicate, Payload::Predicate)
    } else {
        return Err(unknown());
    };
    let (provenance, caveats, oracle) = describe(id).ok_or_else(unknown)?;
    Ok(Fixture {
        id: id.to_string(),
        kind,
        payload,
        provenance,
        caveats,
        oracle,
    })
}

/// All fixtures in [`fixture_ids`] order.
pub fn all_fixtures() -> Vec<Fixture> {
    fixture_ids()
        .into_iter()
        .map(|id| load_fixture(id).expect("registered id"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::enumerate_language;

    fn w(s: &str) -> Word {
        Word::from_chars(s)
    }

    #[test]
    fn runs_of_word() {
        assert_eq!(runs(&w("aabbba")), vec![("a", 2), ("b", 3), ("a", 1)]);
        assert!(runs(&Word::empty()).is_empty());
    }

    #[test]
    fn predicate_spot_checks() {
        use predicates::*;
        assert!(eq1(&w("abbb")) && !eq1(&w("abbbb")) && !eq1(&Word::empty()));
        assert!(exnla(&w("a")) && exnla(&w("abaa")) && exnla(&w("b")) && exnla(&w("bbab")));
        assert!(!exnla(&Word::empty()) && !exnla(&w("ba")));
        assert!(anbn_ancn(&w("aacc")) && !anbn_ancn(&w("abc")) && !anbn_ancn(&Word::empty()));
        assert!(det_2_1(&w("ab")) && det_2_1(&w("bbaaabbb")) && !det_2_1(&w("baab")));
        assert!(!det_2_1(&w("aabb")));
        assert!(even_palindrome(&w("abba")) && !even_palindrome(&w("aba")) && palindrome(&w("aba")));
    }

    #[test]
    fn registry_lookup() {
        let f = load_fixture("ex_lg_grammar").unwrap();
        assert_eq!(f.kind, FixtureKind::Grammar);
        assert_eq!(f.grammar().unwrap().productions().len(), 6);
        assert_eq!(load_fixture("ex_nla").unwrap().automaton().unwrap().state_count(), 8);
        assert!(load_fixture("dla_anbn_ancn").unwrap().automaton().unwrap().is_deterministic());
        assert_eq!(
            load_fixture("nope").unwrap_err(),
            CorpusError::UnknownFixture("nope".into())
        );
        assert!(load_fixture("lk_automaton_7").is_err());
    }

    #[test]
    fn ids_are_unique_with_provenance() {
        let ids = fixture_ids();
        let set: BTreeSet<_> = ids.iter().collect();
        assert_eq!(set.len(), ids.len());
        for f in all_fixtures() {
            assert!(!f.provenance.is_empty(), "{}", f.id);
        }
    }

    #[test]
    fn lk_files_match_builder() {
        for k in 0..=6 {
            let f = load_fixture(&lk_fixture_id(k)).unwrap();
            assert_eq!(f.automaton().unwrap(), &crate::hierarchy::build_lk_automaton(k));
        }
    }

    #[test]
    fn fixtures_match_their_oracles() {
        for f in all_fixtures() {
            let expected = f.oracle.enumerate(10);
            match &f.payload {
                Payload::Grammar(g) => assert_eq!(enumerate_language(g, 10), expected, "{}", f.id),
                Payload::Automaton(m) => assert_eq!(m.enumerate_accepted(10), expected, "{}", f.id),
                Payload::Predicate => {}
            }
        }
    }
}
