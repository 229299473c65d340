use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

/// Token used for the empty string and for λ-moves in every text format.
pub const EPS: &str = "eps";

/// Whether `s` is usable as a symbol or state name.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && s != EPS
}

/// A string over an alphabet of named symbols.
///
/// Words order by length first and lexicographically (on symbol names) second,
/// so a `BTreeSet<Word>` iterates in the canonical enumeration order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<String>);

impl Word {
    pub fn new(symbols: Vec<String>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// One symbol per character.
    pub fn from_chars(s: &str) -> Self {
        Word(s.chars().map(String::from).collect())
    }

    pub fn symbols(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Word(self.0.iter().rev().cloned().collect())
    }

    /// Parses user input against an alphabet.
    ///
    /// `eps` and the blank string are the empty word. Whitespace-separated
    /// text is split on whitespace; otherwise, when every alphabet symbol is a
    /// single character, the text is split into characters.
    pub fn parse_over(text: &str, alphabet: &BTreeSet<String>) -> Result<Word, String> {
        let text = text.trim();
        if text.is_empty() || text == EPS {
            return Ok(Word::empty());
        }
        if text.split_whitespace().count() > 1 {
            return Ok(Word(text.split_whitespace().map(String::from).collect()));
        }
        if alphabet.contains(text) {
            return Ok(Word(vec![text.to_string()]));
        }
        if alphabet.iter().all(|s| s.chars().count() == 1) {
            return Ok(Word::from_chars(text));
        }
        Err(format!(
            "cannot split `{text}` into symbols; separate multi-character symbols with spaces"
        ))
    }

    pub(crate) fn slice(&self, lo: usize, hi: usize) -> Word {
        if lo >= hi {
            Word::empty()
        } else {
            Word(self.0[lo..hi].to_vec())
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str(EPS)
        } else if self.0.iter().all(|s| s.chars().count() == 1) {
            f.write_str(&self.0.concat())
        } else {
            f.write_str(&self.0.join(" "))
        }
    }
}

impl From<Vec<String>> for Word {
    fn from(symbols: Vec<String>) -> Self {
        Word(symbols)
    }
}

/// Every word over `alphabet` of length at most `max_len`, in canonical order.
pub fn all_words(alphabet: &BTreeSet<String>, max_len: usize) -> Vec<Word> {
    let symbols: Vec<&String> = alphabet.iter().collect();
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        if symbols.is_empty() {
            break;
        }
        let mut next = Vec::with_capacity(layer.len() * symbols.len());
        for w in &layer {
            for s in &symbols {
                let mut v = w.0.clone();
                v.push((*s).clone());
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Generator of fresh names following the `<base>_k` scheme, `k` the smallest
/// positive integer giving an unused name. A trailing `_<digits>` on the base
/// is dropped first, so names derived from `S_1` continue as `S_2`, `S_3`.
#[derive(Debug, Clone, Default)]
pub(crate) struct FreshNames {
    taken: BTreeSet<String>,
}

impl FreshNames {
    pub(crate) fn new<I, S>(taken: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        FreshNames {
            taken: taken.into_iter().map(Into::into).collect(),
        }
    }

    pub(crate) fn fresh(&mut self, base: &str) -> String {
        let root = match base.rfind('_') {
            Some(i)
                if i > 0
                    && i + 1 < base.len()
                    && base[i + 1..].bytes().all(|b| b.is_ascii_digit()) =>
            {
                &base[..i]
            }
            _ => base,
        };
        let mut k = 1usize;
        loop {
            let candidate = format!("{root}_{k}");
            if !self.taken.contains(&candidate) {
                self.taken.insert(candidate.clone());
                return candidate;
            }
            k += 1;
        }
    }

    pub(crate) fn reserve(&mut self, name: &str) {
        self.taken.insert(name.to_string());
    }

    pub(crate) fn is_taken(&self, name: &str) -> bool {
        self.taken.contains(name)
    }
}
