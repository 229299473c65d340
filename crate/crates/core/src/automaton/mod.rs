//! Two-head linear automata.
//!
//! A [`LinearAutomaton`] has two disjoint state classes. A left state reads the
//! leftmost remaining input symbol, a right state the rightmost one; λ-moves
//! change state without reading. A word is accepted when some run from an
//! initial state consumes the whole input and stops in an accepting state.
//!
//! Without λ-moves the automaton is an NLA; an NLA with at most one target per
//! `(state, symbol)` is a DLA.

mod simulate;
mod subset;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::AutomatonError;
use crate::word::{is_identifier, EPS};

pub use simulate::InstantaneousDescription;
pub use subset::{Homogeneity, SubsetState};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StateClass {
    Left,
    Right,
}

impl StateClass {
    pub fn flipped(self) -> Self {
        match self {
            StateClass::Left => StateClass::Right,
            StateClass::Right => StateClass::Left,
        }
    }
}

/// Transition label. λ sorts after every symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Symbol(String),
    Lambda,
}

impl Label {
    pub fn symbol(s: impl Into<String>) -> Self {
        Label::Symbol(s.into())
    }

    pub fn is_lambda(&self) -> bool {
        matches!(self, Label::Lambda)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Symbol(s) => f.write_str(s),
            Label::Lambda => f.write_str(EPS),
        }
    }
}

/// Unvalidated automaton description. A transition's label `None` is λ.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawAutomaton {
    pub alphabet: Vec<String>,
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub initial: Vec<String>,
    pub accepting: Vec<String>,
    pub transitions: Vec<(String, Option<String>, Vec<String>)>,
}

impl RawAutomaton {
    pub fn new(alphabet: &[&str], left: &[&str], right: &[&str]) -> Self {
        let owned = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect();
        RawAutomaton {
            alphabet: owned(alphabet),
            left: owned(left),
            right: owned(right),
            ..Default::default()
        }
    }

    pub fn initial(mut self, states: &[&str]) -> Self {
        self.initial.extend(states.iter().map(|s| s.to_string()));
        self
    }

    pub fn accepting(mut self, states: &[&str]) -> Self {
        self.accepting.extend(states.iter().map(|s| s.to_string()));
        self
    }

    /// Adds `from --label--> targets`; the label `eps` is a λ-move.
    pub fn transition(mut self, from: &str, label: &str, targets: &[&str]) -> Self {
        let label = (label != EPS).then(|| label.to_string());
        self.transitions.push((
            from.to_string(),
            label,
            targets.iter().map(|s| s.to_string()).collect(),
        ));
        self
    }
}

/// Where a validation error was found in a [`RawAutomaton`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AutomatonLocation {
    Alphabet(usize),
    Left(usize),
    Right(usize),
    Initial(usize),
    Accepting(usize),
    TransitionSource(usize),
    TransitionLabel(usize),
    /// Transition index, target index.
    TransitionTarget(usize, usize),
}

/// Non-fatal findings about a valid automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    /// No initial state: the automaton accepts nothing.
    EmptyInitialSet,
    /// More than one initial state.
    MultipleInitialStates(usize),
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::EmptyInitialSet => {
                f.write_str("the initial set is empty; the automaton accepts nothing")
            }
            Diagnostic::MultipleInitialStates(n) => write!(f, "the automaton has {n} initial states"),
        }
    }
}

pub type Delta = BTreeMap<(String, Label), BTreeSet<String>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearAutomaton {
    left: BTreeSet<String>,
    right: BTreeSet<String>,
    alphabet: BTreeSet<String>,
    delta: Delta,
    initial: BTreeSet<String>,
    accepting: BTreeSet<String>,
}

pub fn validate_automaton(raw: &RawAutomaton) -> Result<LinearAutomaton, AutomatonError> {
    validate_automaton_located(raw).map_err(|(e, _)| e)
}

pub(crate) fn validate_automaton_located(
    raw: &RawAutomaton,
) -> Result<LinearAutomaton, (AutomatonError, AutomatonLocation)> {
    use AutomatonLocation as Loc;

    let mut alphabet = BTreeSet::new();
    for (i, a) in raw.alphabet.iter().enumerate() {
        if !is_identifier(a) {
            return Err((AutomatonError::InvalidName(a.clone()), Loc::Alphabet(i)));
        }
        if !alphabet.insert(a.clone()) {
            return Err((AutomatonError::DuplicateName(a.clone()), Loc::Alphabet(i)));
        }
    }
    let mut left = BTreeSet::new();
    for (i, q) in raw.left.iter().enumerate() {
        if !is_identifier(q) {
            return Err((AutomatonError::InvalidName(q.clone()), Loc::Left(i)));
        }
        if !left.insert(q.clone()) {
            return Err((AutomatonError::DuplicateName(q.clone()), Loc::Left(i)));
        }
    }
    let mut right = BTreeSet::new();
    for (i, q) in raw.right.iter().enumerate() {
        if !is_identifier(q) {
            return Err((AutomatonError::InvalidName(q.clone()), Loc::Right(i)));
        }
        if left.contains(q) {
            return Err((AutomatonError::ClassOverlap(q.clone()), Loc::Right(i)));
        }
        if !right.insert(q.clone()) {
            return Err((AutomatonError::DuplicateName(q.clone()), Loc::Right(i)));
        }
    }
    let known = |q: &String| left.contains(q) || right.contains(q);
    let mut initial = BTreeSet::new();
    for (i, q) in raw.initial.iter().enumerate() {
        if !known(q) {
            return Err((AutomatonError::UnknownState(q.clone()), Loc::Initial(i)));
        }
        initial.insert(q.clone());
    }
    let mut accepting = BTreeSet::new();
    for (i, q) in raw.accepting.iter().enumerate() {
        if !known(q) {
            return Err((AutomatonError::UnknownState(q.clone()), Loc::Accepting(i)));
        }
        accepting.insert(q.clone());
    }
    let mut delta: Delta = BTreeMap::new();
    for (i, (from, label, targets)) in raw.transitions.iter().enumerate() {
        if !known(from) {
            return Err((AutomatonError::UnknownState(from.clone()), Loc::TransitionSource(i)));
        }
        let label = match label {
            None => Label::Lambda,
            Some(a) if alphabet.contains(a) => Label::Symbol(a.clone()),
            Some(a) => {
                return Err((AutomatonError::UnknownSymbol(a.clone()), Loc::TransitionLabel(i)))
            }
        };
        for (j, t) in targets.iter().enumerate() {
            if !known(t) {
                return Err((AutomatonError::UnknownState(t.clone()), Loc::TransitionTarget(i, j)));
            }
        }
        if !targets.is_empty() {
            delta
                .entry((from.clone(), label))
                .or_default()
                .extend(targets.iter().cloned());
        }
    }
    Ok(LinearAutomaton {
        left,
        right,
        alphabet,
        delta,
        initial,
        accepting,
    })
}

impl LinearAutomaton {
    pub(crate) fn from_parts(
        left: BTreeSet<String>,
        right: BTreeSet<String>,
        alphabet: BTreeSet<String>,
        mut delta: Delta,
        initial: BTreeSet<String>,
        accepting: BTreeSet<String>,
    ) -> Self {
        delta.retain(|_, targets| !targets.is_empty());
        let m = LinearAutomaton {
            left,
            right,
            alphabet,
            delta,
            initial,
            accepting,
        };
        debug_assert!(m.left.is_disjoint(&m.right));
        debug_assert!(m.initial.iter().chain(&m.accepting).all(|q| m.class_of(q).is_some()));
        debug_assert!(m.delta.iter().all(|((q, l), ts)| m.class_of(q).is_some()
            && match l {
                Label::Symbol(a) => m.alphabet.contains(a),
                Label::Lambda => true,
            }
            && ts.iter().all(|t| m.class_of(t).is_some())));
        m
    }

    pub fn left_states(&self) -> &BTreeSet<String> {
        &self.left
    }

    pub fn right_states(&self) -> &BTreeSet<String> {
        &self.right
    }

    pub fn alphabet(&self) -> &BTreeSet<String> {
        &self.alphabet
    }

    pub fn delta(&self) -> &Delta {
        &self.delta
    }

    pub fn initial(&self) -> &BTreeSet<String> {
        &self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<String> {
        &self.accepting
    }

    /// All states, sorted by name.
    pub fn states(&self) -> BTreeSet<&str> {
        self.left
            .iter()
            .chain(&self.right)
            .map(String::as_str)
            .collect()
    }

    pub fn state_count(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn class_of(&self, q: &str) -> Option<StateClass> {
        if self.left.contains(q) {
            Some(StateClass::Left)
        } else if self.right.contains(q) {
            Some(StateClass::Right)
        } else {
            None
        }
    }

    /// Targets of `q` on `label`; empty when undefined.
    pub fn targets(&self, q: &str, label: &Label) -> impl Iterator<Item = &str> + '_ {
        self.delta
            .get(&(q.to_string(), label.clone()))
            .into_iter()
            .flatten()
            .map(String::as_str)
    }

    pub fn transition_count(&self) -> usize {
        self.delta.values().map(BTreeSet::len).sum()
    }

    pub fn has_lambda_moves(&self) -> bool {
        self.delta.keys().any(|(_, l)| l.is_lambda())
    }

    pub fn diagnostics(&self) -> Vec<Diagnostic> {
        match self.initial.len() {
            0 => vec![Diagnostic::EmptyInitialSet],
            1 => vec![],
            n => vec![Diagnostic::MultipleInitialStates(n)],
        }
    }

    fn require_lambda_free(&self) -> Result<(), AutomatonError> {
        if self.has_lambda_moves() {
            Err(AutomatonError::HasLambdaMoves)
        } else {
            Ok(())
        }
    }

    /// The least set containing `q` closed under λ-moves.
    pub fn lambda_closure(&self, q: &str) -> Result<BTreeSet<String>, AutomatonError> {
        if self.class_of(q).is_none() {
            return Err(AutomatonError::UnknownState(q.to_string()));
        }
        let mut closure = BTreeSet::from([q.to_string()]);
        let mut stack = vec![q.to_string()];
        while let Some(p) = stack.pop() {
            for t in self.targets(&p, &Label::Lambda) {
                if closure.insert(t.to_string()) {
                    stack.push(t.to_string());
                }
            }
        }
        Ok(closure)
    }

    /// An equivalent automaton without λ-moves and with the same state classes.
    ///
    /// Closures are folded into transition targets and initial states, never
    /// into sources, since the state performing a read decides which head
    /// moves: `δ'(q, a) = ⋃ closure(p)` for `p ∈ δ(q, a)`,
    /// `I' = ⋃ closure(q)` for `q ∈ I`, and `F' = F`.
    pub fn eliminate_lambda(&self) -> LinearAutomaton {
        if !self.has_lambda_moves() {
            return self.clone();
        }
        let closure = |q: &str| self.lambda_closure(q).expect("state of this automaton");
        let mut delta: Delta = BTreeMap::new();
        for ((q, label), targets) in &self.delta {
            if label.is_lambda() {
                continue;
            }
            let folded = delta.entry((q.clone(), label.clone())).or_default();
            for t in targets {
                folded.extend(closure(t));
            }
        }
        let initial = self.initial.iter().flat_map(|q| closure(q)).collect();
        LinearAutomaton::from_parts(
            self.left.clone(),
            self.right.clone(),
            self.alphabet.clone(),
            delta,
            initial,
            self.accepting.clone(),
        )
    }

    /// No λ-moves and at most one target per `(state, symbol)`. Several
    /// initial states are allowed.
    pub fn is_deterministic(&self) -> bool {
        !self.has_lambda_moves() && self.delta.values().all(|ts| ts.len() <= 1)
    }

    /// Every move crosses between the classes.
    pub fn is_even(&self) -> Result<bool, AutomatonError> {
        Ok(self.first_uneven_move()?.is_none())
    }

    pub(crate) fn first_uneven_move(&self) -> Result<Option<(String, String)>, AutomatonError> {
        self.require_lambda_free()?;
        for ((q, _), targets) in &self.delta {
            let class = self.class_of(q);
            if let Some(t) = targets.iter().find(|t| self.class_of(t) == class) {
                return Ok(Some((q.clone(), t.clone())));
            }
        }
        Ok(None)
    }

    /// Degree of explicit nondeterminism: the total number of transition
    /// targets minus the number of non-empty `(state, symbol)` cells.
    pub fn ndeg(&self) -> Result<usize, AutomatonError> {
        self.require_lambda_free()?;
        Ok(self.transition_count() - self.delta.len())
    }

    /// Every state swaps class; transitions are kept. The result accepts the
    /// reversals of the words this automaton accepts.
    pub fn flip_classes(&self) -> LinearAutomaton {
        LinearAutomaton::from_parts(
            self.right.clone(),
            self.left.clone(),
            self.alphabet.clone(),
            self.delta.clone(),
            self.initial.clone(),
            self.accepting.clone(),
        )
    }
}

impl fmt::Display for LinearAutomaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::textio::serialize_automaton(self))
    }
}
