use std::collections::{BTreeSet, HashSet, VecDeque};

use super::{BodyShape, LinearGrammar};
use crate::word::Word;

/// All words of length at most `max_len` derivable from the start variable,
/// in canonical (length, then lexicographic) order.
///
/// A sentential form of a linear grammar is `u A v` with `u`, `v` terminal
/// strings, so the search runs over `(u, A, v)` triples. Flanks only grow, which
/// bounds the frontier by `|u| + |v| <= max_len`; a visited set absorbs unit
/// cycles.
pub fn enumerate_language(g: &LinearGrammar, max_len: usize) -> BTreeSet<Word> {
    type Form = (Vec<String>, String, Vec<String>);
    let mut out = BTreeSet::new();
    let mut seen: HashSet<Form> = HashSet::new();
    let mut queue: VecDeque<Form> = VecDeque::new();
    let start: Form = (Vec::new(), g.start().to_string(), Vec::new());
    seen.insert(start.clone());
    queue.push_back(start);

    while let Some((u, var, v)) = queue.pop_front() {
        for p in g.productions_of(&var) {
            match p.shape() {
                BodyShape::Terminals(t) => {
                    if u.len() + t.len() + v.len() > max_len {
                        continue;
                    }
                    let mut w = u.clone();
                    w.extend(t.iter().map(|s| s.name().to_string()));
                    w.extend(v.iter().cloned());
                    out.insert(Word::new(w));
                }
                BodyShape::Linear { left, var: next, right } => {
                    if u.len() + left.len() + right.len() + v.len() > max_len {
                        continue;
                    }
                    let mut nu = u.clone();
                    nu.extend(left.iter().map(|s| s.name().to_string()));
                    let mut nv: Vec<String> = right.iter().map(|s| s.name().to_string()).collect();
                    nv.extend(v.iter().cloned());
                    let form = (nu, next.to_string(), nv);
                    if seen.insert(form.clone()) {
                        queue.push_back(form);
                    }
                }
            }
        }
    }
    out
}
