//! Linear grammars.
//!
//! A grammar is linear when every production body holds at most one variable.
//! Each variable is further classified by where that variable sits:
//!
//! * right linear: every body is terminal-only or `zB` (variable last),
//! * left linear: every body is terminal-only or `Bz` (variable first).
//!
//! A grammar is in linear normal form (LNF) when every variable is left or
//! right linear, and in strong linear normal form (SLNF) when additionally each
//! body is one of `aB`, `Ba`, `a`, `B` or the empty body.

mod enumerate;
mod normal_form;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::GrammarError;
use crate::word::{is_identifier, EPS};

pub use enumerate::enumerate_language;
pub use normal_form::{eliminate_unit_productions, to_even_normal_form, to_lnf, to_slnf};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Terminal(String),
    Variable(String),
}

impl Symbol {
    pub fn terminal(name: impl Into<String>) -> Self {
        Symbol::Terminal(name.into())
    }

    pub fn variable(name: impl Into<String>) -> Self {
        Symbol::Variable(name.into())
    }

    pub fn name(&self) -> &str {
        match self {
            Symbol::Terminal(n) | Symbol::Variable(n) => n,
        }
    }

    pub fn is_variable(&self) -> bool {
        matches!(self, Symbol::Variable(_))
    }
}

/// Decomposition of a linear body.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BodyShape<'a> {
    /// Only terminals (possibly none).
    Terminals(&'a [Symbol]),
    /// `left var right`, where `left` and `right` hold only terminals.
    Linear {
        left: &'a [Symbol],
        var: &'a str,
        right: &'a [Symbol],
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Production {
    head: String,
    body: Vec<Symbol>,
}

impl Production {
    /// Fails with `NotLinear` when the body holds more than one variable.
    pub fn new(head: impl Into<String>, body: Vec<Symbol>) -> Result<Self, GrammarError> {
        let head = head.into();
        if body.iter().filter(|s| s.is_variable()).count() > 1 {
            return Err(GrammarError::NotLinear {
                body: render_body(&body),
                head,
            });
        }
        Ok(Production { head, body })
    }

    pub fn head(&self) -> &str {
        &self.head
    }

    pub fn body(&self) -> &[Symbol] {
        &self.body
    }

    pub fn is_unit(&self) -> bool {
        self.body.len() == 1 && self.body[0].is_variable()
    }

    pub fn shape(&self) -> BodyShape<'_> {
        match self.body.iter().position(Symbol::is_variable) {
            None => BodyShape::Terminals(&self.body),
            Some(i) => BodyShape::Linear {
                left: &self.body[..i],
                var: self.body[i].name(),
                right: &self.body[i + 1..],
            },
        }
    }

    pub(crate) fn unchecked(head: impl Into<String>, body: Vec<Symbol>) -> Self {
        let p = Production {
            head: head.into(),
            body,
        };
        debug_assert!(p.body.iter().filter(|s| s.is_variable()).count() <= 1);
        p
    }
}

pub(crate) fn render_body(body: &[Symbol]) -> String {
    if body.is_empty() {
        EPS.to_string()
    } else {
        body.iter().map(Symbol::name).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for Production {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.head, render_body(&self.body))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VariableClass {
    RightLinear,
    LeftLinear,
    Both,
    Neither,
}

/// Unvalidated grammar description; bodies name their symbols and are resolved
/// against the declarations by [`validate_grammar`]. An empty body is λ.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawGrammar {
    pub start: String,
    pub terminals: Vec<String>,
    pub variables: Vec<String>,
    pub productions: Vec<(String, Vec<String>)>,
}

impl RawGrammar {
    pub fn new(start: &str, terminals: &[&str], variables: &[&str]) -> Self {
        RawGrammar {
            start: start.to_string(),
            terminals: terminals.iter().map(|s| s.to_string()).collect(),
            variables: variables.iter().map(|s| s.to_string()).collect(),
            productions: Vec::new(),
        }
    }

    /// Adds `head -> body` with a whitespace-separated body; `eps` or the
    /// blank string is the empty body.
    pub fn rule(mut self, head: &str, body: &str) -> Self {
        let body = body
            .split_whitespace()
            .filter(|t| *t != EPS)
            .map(String::from)
            .collect();
        self.productions.push((head.to_string(), body));
        self
    }
}

/// Where a validation error was found in a [`RawGrammar`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrammarLocation {
    Start,
    Terminal(usize),
    Variable(usize),
    Head(usize),
    /// Production index, symbol index within the body.
    BodySymbol(usize, usize),
    Production(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearGrammar {
    start: String,
    terminals: BTreeSet<String>,
    variables: BTreeSet<String>,
    productions: BTreeSet<Production>,
}

pub fn validate_grammar(raw: &RawGrammar) -> Result<LinearGrammar, GrammarError> {
    validate_grammar_located(raw).map_err(|(e, _)| e)
}

pub(crate) fn validate_grammar_located(
    raw: &RawGrammar,
) -> Result<LinearGrammar, (GrammarError, GrammarLocation)> {
    let mut terminals = BTreeSet::new();
    let mut variables = BTreeSet::new();
    for (i, t) in raw.terminals.iter().enumerate() {
        let at = GrammarLocation::Terminal(i);
        if !is_identifier(t) {
            return Err((GrammarError::InvalidName(t.clone()), at));
        }
        if !terminals.insert(t.clone()) {
            return Err((GrammarError::DuplicateSymbol(t.clone()), at));
        }
    }
    for (i, v) in raw.variables.iter().enumerate() {
        let at = GrammarLocation::Variable(i);
        if !is_identifier(v) {
            return Err((GrammarError::InvalidName(v.clone()), at));
        }
        if terminals.contains(v) || !variables.insert(v.clone()) {
            return Err((GrammarError::DuplicateSymbol(v.clone()), at));
        }
    }
    if !variables.contains(&raw.start) {
        return Err((
            GrammarError::StartNotDeclared(raw.start.clone()),
            GrammarLocation::Start,
        ));
    }
    let mut productions = BTreeSet::new();
    for (i, (head, body)) in raw.productions.iter().enumerate() {
        if !variables.contains(head) {
            let e = if terminals.contains(head) {
                GrammarError::NotLinear {
                    head: head.clone(),
                    body: render_names(body),
                }
            } else {
                GrammarError::UnknownSymbol(head.clone())
            };
            return Err((e, GrammarLocation::Head(i)));
        }
        let mut symbols = Vec::with_capacity(body.len());
        for (j, name) in body.iter().enumerate() {
            if terminals.contains(name) {
                symbols.push(Symbol::Terminal(name.clone()));
            } else if variables.contains(name) {
                symbols.push(Symbol::Variable(name.clone()));
            } else {
                return Err((
                    GrammarError::UnknownSymbol(name.clone()),
                    GrammarLocation::BodySymbol(i, j),
                ));
            }
        }
        let p = Production::new(head.clone(), symbols)
            .map_err(|e| (e, GrammarLocation::Production(i)))?;
        productions.insert(p);
    }
    Ok(LinearGrammar {
        start: raw.start.clone(),
        terminals,
        variables,
        productions,
    })
}

fn render_names(body: &[String]) -> String {
    if body.is_empty() {
        EPS.to_string()
    } else {
        body.join(" ")
    }
}

impl LinearGrammar {
    pub(crate) fn from_parts(
        start: String,
        terminals: BTreeSet<String>,
        variables: BTreeSet<String>,
        productions: BTreeSet<Production>,
    ) -> Self {
        debug_assert!(variables.contains(&start));
        debug_assert!(productions.iter().all(|p| variables.contains(p.head())
            && p.body().iter().all(|s| match s {
                Symbol::Terminal(t) => terminals.contains(t),
                Symbol::Variable(v) => variables.contains(v),
            })));
        LinearGrammar {
            start,
            terminals,
            variables,
            productions,
        }
    }

    pub fn start(&self) -> &str {
        &self.start
    }

    pub fn terminals(&self) -> &BTreeSet<String> {
        &self.terminals
    }

    pub fn variables(&self) -> &BTreeSet<String> {
        &self.variables
    }

    pub fn productions(&self) -> &BTreeSet<Production> {
        &self.productions
    }

    pub fn productions_of<'a>(&'a self, head: &'a str) -> impl Iterator<Item = &'a Production> {
        self.productions.iter().filter(move |p| p.head == head)
    }

    /// Variables in canonical order: the start variable first, then the rest
    /// sorted.
    pub fn ordered_variables(&self) -> Vec<&str> {
        let mut out = vec![self.start.as_str()];
        out.extend(
            self.variables
                .iter()
                .map(String::as_str)
                .filter(|v| *v != self.start),
        );
        out
    }

    pub fn classify_variable(&self, v: &str) -> Result<VariableClass, GrammarError> {
        if !self.variables.contains(v) {
            return Err(GrammarError::UnknownSymbol(v.to_string()));
        }
        Ok(self.class_of(v))
    }

    pub(crate) fn class_of(&self, v: &str) -> VariableClass {
        let mut right = true;
        let mut left = true;
        for p in self.productions_of(v) {
            if let BodyShape::Linear { left: l, right: r, .. } = p.shape() {
                right &= r.is_empty();
                left &= l.is_empty();
            }
        }
        match (right, left) {
            (true, true) => VariableClass::Both,
            (true, false) => VariableClass::RightLinear,
            (false, true) => VariableClass::LeftLinear,
            (false, false) => VariableClass::Neither,
        }
    }

    pub fn is_lnf(&self) -> bool {
        self.variables
            .iter()
            .all(|v| self.class_of(v) != VariableClass::Neither)
    }

    pub fn is_slnf(&self) -> bool {
        self.is_lnf()
            && self.productions.iter().all(|p| {
                matches!(
                    p.body.as_slice(),
                    [] | [_] | [Symbol::Terminal(_), Symbol::Variable(_)]
                        | [Symbol::Variable(_), Symbol::Terminal(_)]
                )
            })
    }

    /// Deterministic linear grammar: every production is `A -> λ` or
    /// `A -> a w` with `a` a terminal and `w` holding the variable, and two
    /// productions of one variable that start with the same terminal are equal.
    pub fn is_deterministic_linear(&self) -> bool {
        let mut by_lead: BTreeMap<(&str, &str), &Production> = BTreeMap::new();
        for p in &self.productions {
            if p.body.is_empty() {
                continue;
            }
            let lead = match &p.body[0] {
                Symbol::Terminal(a) => a.as_str(),
                Symbol::Variable(_) => return false,
            };
            if !p.body.iter().any(Symbol::is_variable) {
                return false;
            }
            if by_lead.insert((p.head.as_str(), lead), p).is_some() {
                return false;
            }
        }
        true
    }

    /// The determinism condition in the form the normalization pipeline
    /// maintains: no unit productions, no non-empty terminal-only bodies, and
    /// per variable at most one body starting with a given terminal and at
    /// most one variable-first body ending with a given terminal.
    ///
    /// Implied by [`Self::is_deterministic_linear`] and preserved by
    /// [`to_lnf`] and [`to_slnf`].
    pub fn satisfies_deterministic_condition(&self) -> bool {
        let mut leads: BTreeSet<(&str, &str)> = BTreeSet::new();
        let mut trails: BTreeSet<(&str, &str)> = BTreeSet::new();
        for p in &self.productions {
            match p.shape() {
                BodyShape::Terminals(t) if !t.is_empty() => return false,
                BodyShape::Terminals(_) => {}
                BodyShape::Linear { left, right, .. } => {
                    let key = match (left.first(), right.last()) {
                        (Some(a), _) => (&mut leads, a.name()),
                        (None, Some(a)) => (&mut trails, a.name()),
                        (None, None) => return false,
                    };
                    if !key.0.insert((p.head.as_str(), key.1)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Every variable-bearing body has terminal flanks of equal length.
    pub fn is_even_linear(&self) -> bool {
        self.productions.iter().all(|p| match p.shape() {
            BodyShape::Terminals(_) => true,
            BodyShape::Linear { left, right, .. } => left.len() == right.len(),
        })
    }

    /// Every body is `aBb`, a single terminal, or λ.
    pub fn is_even_normal_form(&self) -> bool {
        self.productions.iter().all(|p| match p.shape() {
            BodyShape::Terminals(t) => t.len() <= 1,
            BodyShape::Linear { left, right, .. } => left.len() == 1 && right.len() == 1,
        })
    }
}

impl fmt::Display for LinearGrammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::textio::serialize_grammar(self))
    }
}
