//! Linear languages through two lenses: linear grammars and two-head linear
//! automata.
//!
//! A linear automaton keeps two read heads on its input, one at each end. A
//! state belongs either to the left class (it consumes the leftmost remaining
//! symbol) or to the right class (it consumes the rightmost one), and a string
//! is accepted once the heads have crossed in an accepting state. These
//! machines accept exactly the languages generated by linear grammars.
//!
//! The crate provides:
//!
//! * [`grammar`]: linear grammars, their normal forms and a bounded language
//!   enumerator,
//! * [`automaton`]: λ-NLA / NLA / DLA values, simulation, λ-elimination,
//!   the degree of explicit nondeterminism and subset determinization,
//! * [`transform`]: conversions between the two models,
//! * [`hierarchy`]: the `L(k)` witnesses of the `Lin(k)` hierarchy,
//! * [`textio`]: the text formats and DOT export,
//! * [`corpus`]: a registry of reference grammars, automata and predicates.
//!
//! ```
//! use linlang::textio::parse_automaton;
//! use linlang::Word;
//!
//! let pal = parse_automaton(
//!     "automaton
//!      alphabet a b
//!      left q0
//!      right p1 p2
//!      initial q0
//!      final q0
//!      q0 a -> p1
//!      q0 b -> p2
//!      p1 a -> q0
//!      p2 b -> q0
//!     ",
//! )
//! .unwrap();
//! assert!(pal.accepts(&Word::from_chars("abba")).unwrap());
//! assert!(!pal.accepts(&Word::from_chars("ab")).unwrap());
//! ```

pub mod automaton;
pub mod corpus;
pub mod error;
pub mod grammar;
pub mod hierarchy;
pub mod textio;
pub mod transform;
mod word;

pub use automaton::{
    InstantaneousDescription, Label, LinearAutomaton, RawAutomaton, StateClass, SubsetState,
};
pub use error::{AutomatonError, GrammarError};
pub use grammar::{LinearGrammar, Production, RawGrammar, Symbol, VariableClass};
pub use word::{all_words, is_identifier, Word, EPS};
