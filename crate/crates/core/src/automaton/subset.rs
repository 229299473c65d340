use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::{Delta, Label, LinearAutomaton, StateClass};
use crate::error::AutomatonError;
use crate::word::FreshNames;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Homogeneity {
    AllLeft,
    AllRight,
    Mixed,
}

/// A set of states reached by the subset construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetState {
    pub members: BTreeSet<String>,
    pub homogeneity: Homogeneity,
}

impl SubsetState {
    fn new(m: &LinearAutomaton, members: BTreeSet<String>) -> Self {
        let lefts = members.iter().filter(|q| m.left_states().contains(*q)).count();
        let homogeneity = if lefts == members.len() {
            Homogeneity::AllLeft
        } else if lefts == 0 {
            Homogeneity::AllRight
        } else {
            Homogeneity::Mixed
        };
        SubsetState {
            members,
            homogeneity,
        }
    }
}

fn image(m: &LinearAutomaton, x: &BTreeSet<String>, a: &str) -> BTreeSet<String> {
    let label = Label::Symbol(a.to_string());
    x.iter()
        .flat_map(|q| m.targets(q, &label))
        .map(String::from)
        .collect()
}

impl LinearAutomaton {
    /// The least family of state sets containing `{q}` for each initial `q`
    /// and closed under `X ↦ ⋃_{q ∈ X} δ(q, a)`, in breadth-first discovery
    /// order. Empty images are left out.
    pub fn subset_states(&self) -> Result<Vec<SubsetState>, AutomatonError> {
        if self.has_lambda_moves() {
            return Err(AutomatonError::HasLambdaMoves);
        }
        let mut seen: BTreeSet<BTreeSet<String>> = BTreeSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        for q in self.initial() {
            let x = BTreeSet::from([q.clone()]);
            if seen.insert(x.clone()) {
                queue.push_back(x);
            }
        }
        while let Some(x) = queue.pop_front() {
            for a in self.alphabet() {
                let y = image(self, &x, a);
                if !y.is_empty() && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
            order.push(SubsetState::new(self, x));
        }
        Ok(order)
    }

    /// Mixed members of [`Self::subset_states`].
    pub fn mixed_subsets(&self) -> Result<Vec<SubsetState>, AutomatonError> {
        Ok(self
            .subset_states()?
            .into_iter()
            .filter(|x| x.homogeneity == Homogeneity::Mixed)
            .collect())
    }

    /// An equivalent DLA exists through the subset construction exactly when no
    /// reachable subset mixes left and right states.
    pub fn is_determinizable(&self) -> Result<bool, AutomatonError> {
        Ok(self.mixed_subsets()?.is_empty())
    }

    /// The subset automaton: one state per reachable subset, classed by its
    /// members, initial states `{q}` for `q ∈ I`, accepting subsets those
    /// meeting `F`. Subset states are named by joining member names with `_`;
    /// singletons keep their member's name.
    pub fn determinize(&self) -> Result<LinearAutomaton, AutomatonError> {
        let subsets = self.subset_states()?;
        if let Some(x) = subsets.iter().find(|x| x.homogeneity == Homogeneity::Mixed) {
            return Err(AutomatonError::NotDeterminizable {
                subset: x.members.iter().cloned().collect(),
            });
        }
        let mut names = FreshNames::default();
        let mut name_of: BTreeMap<&BTreeSet<String>, String> = BTreeMap::new();
        // Singletons first so they keep their own names.
        let by_size = {
            let mut v: Vec<&SubsetState> = subsets.iter().collect();
            v.sort_by_key(|x| x.members.len());
            v
        };
        for x in by_size {
            let joined = x.members.iter().cloned().collect::<Vec<_>>().join("_");
            let name = if names.is_taken(&joined) {
                names.fresh(&joined)
            } else {
                names.reserve(&joined);
                joined
            };
            name_of.insert(&x.members, name);
        }

        let mut left = BTreeSet::new();
        let mut right = BTreeSet::new();
        let mut accepting = BTreeSet::new();
        let mut delta: Delta = BTreeMap::new();
        for x in &subsets {
            let name = name_of[&x.members].clone();
            match x.homogeneity {
                Homogeneity::AllLeft => left.insert(name.clone()),
                _ => right.insert(name.clone()),
            };
            if x.members.iter().any(|q| self.accepting().contains(q)) {
                accepting.insert(name.clone());
            }
            for a in self.alphabet() {
                let y = image(self, &x.members, a);
                if !y.is_empty() {
                    delta.insert(
                        (name.clone(), Label::Symbol(a.clone())),
                        BTreeSet::from([name_of[&y].clone()]),
                    );
                }
            }
        }
        let initial = self
            .initial()
            .iter()
            .map(|q| name_of[&BTreeSet::from([q.clone()])].clone())
            .collect();
        Ok(LinearAutomaton::from_parts(
            left,
            right,
            self.alphabet().clone(),
            delta,
            initial,
            accepting,
        ))
    }
}

impl SubsetState {
    pub fn class(&self) -> Option<StateClass> {
        match self.homogeneity {
            Homogeneity::AllLeft => Some(StateClass::Left),
            Homogeneity::AllRight => Some(StateClass::Right),
            Homogeneity::Mixed => None,
        }
    }
}
