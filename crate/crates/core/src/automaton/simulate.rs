use std::collections::{BTreeMap, BTreeSet};

use super::{Label, LinearAutomaton, StateClass};
use crate::error::AutomatonError;
use crate::word::{all_words, Word};

/// Current state plus the unread span `input[lo..hi]` of the input.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InstantaneousDescription {
    pub state: String,
    pub lo: usize,
    pub hi: usize,
}

impl InstantaneousDescription {
    pub fn new(state: impl Into<String>, lo: usize, hi: usize) -> Self {
        InstantaneousDescription {
            state: state.into(),
            lo,
            hi,
        }
    }

    pub fn remaining(&self, input: &Word) -> Word {
        input.slice(self.lo, self.hi)
    }

    /// `(state,remaining)`, the remainder written `eps` once exhausted.
    pub fn render(&self, input: &Word) -> String {
        format!("({},{})", self.state, self.remaining(input))
    }
}

/// Index-based view of an automaton used by the search routines.
struct Compiled<'a> {
    names: Vec<&'a str>,
    class: Vec<StateClass>,
    accepting: Vec<bool>,
    initial: Vec<usize>,
    symbols: BTreeMap<&'a str, usize>,
    /// `reads[q][a]`: sorted targets of `q` on symbol `a`.
    reads: Vec<Vec<Vec<usize>>>,
    lambda: Vec<Vec<usize>>,
}

impl<'a> Compiled<'a> {
    fn new(m: &'a LinearAutomaton) -> Self {
        let names: Vec<&str> = m.states().into_iter().collect();
        let index: BTreeMap<&str, usize> = names.iter().enumerate().map(|(i, n)| (*n, i)).collect();
        let symbols: BTreeMap<&str, usize> = m
            .alphabet()
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let mut reads = vec![vec![Vec::new(); symbols.len()]; names.len()];
        let mut lambda = vec![Vec::new(); names.len()];
        for ((q, label), targets) in m.delta() {
            let ts: Vec<usize> = targets.iter().map(|t| index[t.as_str()]).collect();
            match label {
                Label::Symbol(a) => reads[index[q.as_str()]][symbols[a.as_str()]] = ts,
                Label::Lambda => lambda[index[q.as_str()]] = ts,
            }
        }
        Compiled {
            class: names.iter().map(|n| m.class_of(n).expect("own state")).collect(),
            accepting: names.iter().map(|n| m.accepting().contains(*n)).collect(),
            initial: m.initial().iter().map(|q| index[q.as_str()]).collect(),
            names,
            symbols,
            reads,
            lambda,
        }
    }

    fn encode(&self, w: &Word) -> Result<Vec<usize>, AutomatonError> {
        w.symbols()
            .iter()
            .map(|s| {
                self.symbols
                    .get(s.as_str())
                    .copied()
                    .ok_or_else(|| AutomatonError::SymbolNotInAlphabet(s.clone()))
            })
            .collect()
    }

    /// Successors of `(q, lo, hi)`: reads first, then λ-moves, each in
    /// state-name order.
    fn successors(&self, input: &[usize], (q, lo, hi): (usize, usize, usize)) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        if lo < hi {
            match self.class[q] {
                StateClass::Left => {
                    out.extend(self.reads[q][input[lo]].iter().map(|&t| (t, lo + 1, hi)))
                }
                StateClass::Right => {
                    out.extend(self.reads[q][input[hi - 1]].iter().map(|&t| (t, lo, hi - 1)))
                }
            }
        }
        out.extend(self.lambda[q].iter().map(|&t| (t, lo, hi)));
        out
    }

    fn accepts(&self, input: &[usize]) -> bool {
        let n = input.len();
        let width = n + 1;
        let slot = |(q, lo, hi): (usize, usize, usize)| (q * width + lo) * width + hi;
        let mut seen = vec![false; self.names.len() * width * width];
        let mut stack = Vec::new();
        for &q in &self.initial {
            let id = (q, 0, n);
            if !std::mem::replace(&mut seen[slot(id)], true) {
                stack.push(id);
            }
        }
        while let Some(id) = stack.pop() {
            let (q, lo, hi) = id;
            if lo == hi && self.accepting[q] {
                return true;
            }
            for next in self.successors(input, id) {
                if !std::mem::replace(&mut seen[slot(next)], true) {
                    stack.push(next);
                }
            }
        }
        false
    }

    /// Depth-first search in successor order; the first accepting run found.
    fn trace(&self, input: &[usize]) -> Option<Vec<(usize, usize, usize)>> {
        let n = input.len();
        let width = n + 1;
        let slot = |(q, lo, hi): (usize, usize, usize)| (q * width + lo) * width + hi;
        let mut seen = vec![false; self.names.len() * width * width];
        for &q in &self.initial {
            let root = (q, 0, n);
            if std::mem::replace(&mut seen[slot(root)], true) {
                continue;
            }
            let mut path = vec![root];
            let mut pending = vec![self.successors(input, root).into_iter()];
            if root.1 == root.2 && self.accepting[q] {
                return Some(path);
            }
            while let Some(iter) = pending.last_mut() {
                match iter.next() {
                    Some(next) => {
                        if std::mem::replace(&mut seen[slot(next)], true) {
                            continue;
                        }
                        path.push(next);
                        if next.1 == next.2 && self.accepting[next.0] {
                            return Some(path);
                        }
                        pending.push(self.successors(input, next).into_iter());
                    }
                    None => {
                        pending.pop();
                        path.pop();
                    }
                }
            }
        }
        None
    }
}

impl LinearAutomaton {
    /// All one-move successors of `id` on `input`.
    pub fn step(&self, id: &InstantaneousDescription, input: &Word) -> BTreeSet<InstantaneousDescription> {
        let mut out = BTreeSet::new();
        let Some(class) = self.class_of(&id.state) else {
            return out;
        };
        let syms = input.symbols();
        if id.lo < id.hi && id.hi <= syms.len() {
            let (read, lo, hi) = match class {
                StateClass::Left => (&syms[id.lo], id.lo + 1, id.hi),
                StateClass::Right => (&syms[id.hi - 1], id.lo, id.hi - 1),
            };
            for t in self.targets(&id.state, &Label::Symbol(read.clone())) {
                out.insert(InstantaneousDescription::new(t, lo, hi));
            }
        }
        for t in self.targets(&id.state, &Label::Lambda) {
            out.insert(InstantaneousDescription::new(t, id.lo, id.hi));
        }
        out
    }

    /// Whether some run from an initial state consumes `w` and halts in an
    /// accepting state. The search visits each `(state, lo, hi)` at most once,
    /// so λ-cycles terminate.
    pub fn accepts(&self, w: &Word) -> Result<bool, AutomatonError> {
        let c = Compiled::new(self);
        Ok(c.accepts(&c.encode(w)?))
    }

    /// One accepting run for `w`, from the initial description to an accepting
    /// state with the input exhausted, or `None` when `w` is rejected.
    ///
    /// Initial states are tried in name order; from each description reads
    /// are explored before λ-moves and targets in name order.
    pub fn trace(&self, w: &Word) -> Result<Option<Vec<InstantaneousDescription>>, AutomatonError> {
        let c = Compiled::new(self);
        let input = c.encode(w)?;
        Ok(c.trace(&input).map(|run| {
            run.into_iter()
                .map(|(q, lo, hi)| InstantaneousDescription::new(c.names[q], lo, hi))
                .collect()
        }))
    }

    /// Accepted words of length at most `max_len`, in canonical order.
    pub fn enumerate_accepted(&self, max_len: usize) -> BTreeSet<Word> {
        let c = Compiled::new(self);
        if c.initial.is_empty() || !c.accepting.iter().any(|&f| f) {
            return BTreeSet::new();
        }
        all_words(self.alphabet(), max_len)
            .into_iter()
            .filter(|w| c.accepts(&c.encode(w).expect("word over own alphabet")))
            .collect()
    }
}
