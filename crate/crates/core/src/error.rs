use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrammarError {
    #[error("`{0}` is not a valid symbol name")]
    InvalidName(String),
    #[error("symbol `{0}` is declared more than once")]
    DuplicateSymbol(String),
    #[error("start variable `{0}` is not declared as a variable")]
    StartNotDeclared(String),
    #[error("undeclared symbol `{0}`")]
    UnknownSymbol(String),
    #[error("production `{head} -> {body}` is not linear")]
    NotLinear { head: String, body: String },
    #[error("grammar is not even linear")]
    NotEvenLinear,
    #[error("grammar is not deterministic linear")]
    NotDeterministicLinear,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("`{0}` is not a valid name")]
    InvalidName(String),
    #[error("`{0}` is declared more than once")]
    DuplicateName(String),
    #[error("state `{0}` is declared both left and right")]
    ClassOverlap(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("symbol `{0}` is not in the alphabet")]
    UnknownSymbol(String),
    #[error("input symbol `{0}` is not in the alphabet")]
    SymbolNotInAlphabet(String),
    #[error("automaton has λ-moves")]
    HasLambdaMoves,
    #[error("automaton is not even: {from} -> {to} stays in the same class")]
    NotEven { from: String, to: String },
    #[error("automaton is not determinizable: subset {{{}}} mixes left and right states", .subset.join(", "))]
    NotDeterminizable { subset: Vec<String> },
}
