//! `linlang`: command-line access to linear grammars and linear automata.
//!
//! Exit status: 0 success or a positive check, 1 a negative check (a
//! rejected word, a failed property, inequivalent languages), 2 a usage or
//! parse error, 3 an input that violates the operation's precondition.

use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use linlang::grammar::{enumerate_language, to_even_normal_form, to_lnf, to_slnf};
use linlang::hierarchy::build_lk_automaton;
use linlang::textio::{parse_automaton, parse_grammar, serialize_automaton, serialize_grammar, to_dot};
use linlang::transform;
use linlang::{LinearAutomaton, LinearGrammar, VariableClass, Word};

#[derive(Parser)]
#[command(name = "linlang", version, about = "Linear grammars and two-head linear automata")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Io {
    /// Input file; standard input when absent or `-`
    #[arg(short = 'i', long = "file", global = true)]
    input: Option<PathBuf>,
    /// Output file; standard output when absent or `-`
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on grammar files
    Grammar {
        #[command(subcommand)]
        op: GrammarOp,
        #[command(flatten)]
        io: Io,
    },
    /// Operations on automaton files
    Auto {
        #[command(subcommand)]
        op: AutoOp,
        #[command(flatten)]
        io: Io,
    },
    /// Conversions between grammars and automata
    Convert {
        #[command(subcommand)]
        op: ConvertOp,
        #[command(flatten)]
        io: Io,
    },
    /// Generate automata
    Gen {
        #[command(subcommand)]
        op: GenOp,
        #[command(flatten)]
        io: Io,
    },
    /// Compare two languages on all words up to a length
    Equiv {
        kind1: Kind,
        file1: PathBuf,
        kind2: Kind,
        file2: PathBuf,
        #[arg(long)]
        max_len: usize,
        #[command(flatten)]
        io: Io,
    },
    /// Export an automaton
    Export {
        #[command(subcommand)]
        op: ExportOp,
        #[command(flatten)]
        io: Io,
    },
}

#[derive(Subcommand)]
enum GrammarOp {
    /// Validate and summarize
    Check,
    /// Classify each variable and report normal forms
    Classify,
    /// Linear normal form
    Lnf,
    /// Strong linear normal form
    Slnf,
    /// Even normal form of an even linear grammar
    EvenNf,
    /// Words of the language up to a length
    Enum {
        #[arg(long)]
        max_len: usize,
    },
}

#[derive(Subcommand)]
enum AutoOp {
    /// Validate and summarize
    Check,
    /// Run the automaton on a word
    Simulate {
        /// The word; `eps` for the empty word
        #[arg(long = "input", allow_hyphen_values = true)]
        word: String,
        /// Print one accepting run, one configuration per line
        #[arg(long)]
        trace: bool,
    },
    /// Accepted words up to a length
    Enum {
        #[arg(long)]
        max_len: usize,
    },
    /// Remove λ-moves
    ElimLambda,
    /// Whether the automaton is a DLA
    IsDet,
    /// Whether every move alternates between left and right states
    IsEven,
    /// Whether the subset construction yields a DLA
    IsDeterminizable,
    /// Subset construction
    Determinize {
        /// Fail unless the result has exactly one initial state
        #[arg(long)]
        strict: bool,
    },
    /// Degree of explicit nondeterminism
    Ndeg,
}

#[derive(Subcommand)]
enum ConvertOp {
    /// Grammar to λ-NLA
    G2a,
    /// Automaton to grammar
    A2g,
    /// Deterministic linear grammar to DLA
    DetG2dla,
    /// Even linear grammar to even NLA
    EvenG2a,
    /// Even NLA to even linear grammar
    EvenA2g,
}

#[derive(Subcommand)]
enum GenOp {
    /// Witness automaton for {a^m b^n : m <= n <= (k+1)m}
    Lk {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum ExportOp {
    /// Graphviz description
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Grammar file
    G,
    /// Automaton file
    A,
}

/// Result text and exit status of a successful command.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }

    fn check(holds: bool, text: String) -> Self {
        Outcome {
            text,
            code: if holds { 0 } else { 1 },
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }

    fn precondition(message: impl ToString) -> Self {
        Failure {
            code: 3,
            message: message.to_string(),
        }
    }
}

fn read_source(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::usage(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::usage(format!("standard input: {e}")))?;
            Ok(s)
        }
    }
}

fn load_grammar(path: Option<&PathBuf>) -> Result<LinearGrammar, Failure> {
    let name = path.map_or("<stdin>".into(), |p| p.display().to_string());
    parse_grammar(&read_source(path)?).map_err(|e| Failure::usage(format!("{name}:{e}")))
}

fn load_automaton(path: Option<&PathBuf>) -> Result<LinearAutomaton, Failure> {
    let name = path.map_or("<stdin>".into(), |p| p.display().to_string());
    let m = parse_automaton(&read_source(path)?).map_err(|e| Failure::usage(format!("{name}:{e}")))?;
    for d in m.diagnostics() {
        eprintln!("warning: {d}");
    }
    Ok(m)
}

fn words(set: &BTreeSet<Word>) -> String {
    set.iter().map(|w| format!("{w}\n")).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn class_name(c: VariableClass) -> &'static str {
    match c {
        VariableClass::RightLinear => "right-linear",
        VariableClass::LeftLinear => "left-linear",
        VariableClass::Both => "both",
        VariableClass::Neither => "neither",
    }
}

fn grammar_op(op: &GrammarOp, io: &Io) -> Result<Outcome, Failure> {
    let g = load_grammar(io.input.as_ref())?;
    Ok(Outcome::ok(match op {
        GrammarOp::Check => format!(
            "ok: {} variables, {} terminals, {} productions\n",
            g.variables().len(),
            g.terminals().len(),
            g.productions().len()
        ),
        GrammarOp::Classify => {
            let mut out = String::new();
            for v in g.ordered_variables() {
                let c = g.classify_variable(v).expect("declared variable");
                out += &format!("{v} {}\n", class_name(c));
            }
            out += &format!("lnf {}\n", yes_no(g.is_lnf()));
            out += &format!("slnf {}\n", yes_no(g.is_slnf()));
            out += &format!("deterministic-linear {}\n", yes_no(g.is_deterministic_linear()));
            out += &format!("even-linear {}\n", yes_no(g.is_even_linear()));
            out
        }
        GrammarOp::Lnf => serialize_grammar(&to_lnf(&g)),
        GrammarOp::Slnf => serialize_grammar(&to_slnf(&g)),
        GrammarOp::EvenNf => {
            serialize_grammar(&to_even_normal_form(&g).map_err(Failure::precondition)?)
        }
        GrammarOp::Enum { max_len } => words(&enumerate_language(&g, *max_len)),
    }))
}

fn auto_op(op: &AutoOp, io: &Io) -> Result<Outcome, Failure> {
    let m = load_automaton(io.input.as_ref())?;
    Ok(match op {
        AutoOp::Check => Outcome::ok(format!(
            "ok: {} left states, {} right states, {} transitions{}\n",
            m.left_states().len(),
            m.right_states().len(),
            m.transition_count(),
            if m.has_lambda_moves() { ", has λ-moves" } else { "" }
        )),
        AutoOp::Simulate { word, trace } => {
            let w = Word::parse_over(word, m.alphabet()).map_err(Failure::usage)?;
            if *trace {
                match m.trace(&w).map_err(Failure::usage)? {
                    Some(run) => Outcome::ok(run.iter().map(|d| d.render(&w) + "\n").collect()),
                    None => Outcome::check(false, "reject\n".into()),
                }
            } else {
                let accepted = m.accepts(&w).map_err(Failure::usage)?;
                Outcome::check(accepted, if accepted { "accept\n" } else { "reject\n" }.into())
            }
        }
        AutoOp::Enum { max_len } => Outcome::ok(words(&m.enumerate_accepted(*max_len))),
        AutoOp::ElimLambda => Outcome::ok(serialize_automaton(&m.eliminate_lambda())),
        AutoOp::IsDet => {
            let d = m.is_deterministic();
            Outcome::check(d, format!("{}\n", yes_no(d)))
        }
        AutoOp::IsEven => {
            let e = m.is_even().map_err(Failure::precondition)?;
            Outcome::check(e, format!("{}\n", yes_no(e)))
        }
        AutoOp::IsDeterminizable => {
            let mixed = m.mixed_subsets().map_err(Failure::precondition)?;
            let mut text = format!("{}\n", yes_no(mixed.is_empty()));
            if let Some(x) = mixed.first() {
                let members: Vec<&str> = x.members.iter().map(String::as_str).collect();
                text += &format!("mixed subset {{{}}}\n", members.join(", "));
            }
            Outcome::check(mixed.is_empty(), text)
        }
        AutoOp::Determinize { strict } => {
            let d = m.determinize().map_err(Failure::precondition)?;
            if *strict && d.initial().len() != 1 {
                return Err(Failure::precondition(format!(
                    "the result has {} initial states; --strict requires exactly one",
                    d.initial().len()
                )));
            }
            Outcome::ok(serialize_automaton(&d))
        }
        AutoOp::Ndeg => Outcome::ok(format!("{}\n", m.ndeg().map_err(Failure::precondition)?)),
    })
}

fn convert_op(op: &ConvertOp, io: &Io) -> Result<Outcome, Failure> {
    let input = io.input.as_ref();
    Ok(Outcome::ok(match op {
        ConvertOp::G2a => serialize_automaton(&transform::grammar_to_nla(&load_grammar(input)?)),
        ConvertOp::A2g => serialize_grammar(&transform::nla_to_grammar(&load_automaton(input)?)),
        ConvertOp::DetG2dla => {
            serialize_automaton(&transform::det_grammar_to_dla(&load_grammar(input)?).map_err(Failure::precondition)?)
        }
        ConvertOp::EvenG2a => {
            serialize_automaton(&transform::even_grammar_to_nla(&load_grammar(input)?).map_err(Failure::precondition)?)
        }
        ConvertOp::EvenA2g => {
            serialize_grammar(&transform::even_nla_to_grammar(&load_automaton(input)?).map_err(Failure::precondition)?)
        }
    }))
}

fn language(kind: Kind, path: &PathBuf, max_len: usize) -> Result<BTreeSet<Word>, Failure> {
    Ok(match kind {
        Kind::G => enumerate_language(&load_grammar(Some(path))?, max_len),
        Kind::A => load_automaton(Some(path))?.enumerate_accepted(max_len),
    })
}

fn run(cli: &Cli) -> Result<(Outcome, Option<PathBuf>), Failure> {
    let (outcome, io) = match &cli.command {
        Command::Grammar { op, io } => (grammar_op(op, io)?, io),
        Command::Auto { op, io } => (auto_op(op, io)?, io),
        Command::Convert { op, io } => (convert_op(op, io)?, io),
        Command::Gen { op: GenOp::Lk { k }, io } => {
            (Outcome::ok(serialize_automaton(&build_lk_automaton(*k))), io)
        }
        Command::Equiv {
            kind1,
            file1,
            kind2,
            file2,
            max_len,
            io,
        } => {
            if file1.as_os_str() == "-" && file2.as_os_str() == "-" {
                return Err(Failure::usage("only one operand can be read from standard input"));
            }
            let first = language(*kind1, file1, *max_len)?;
            let second = language(*kind2, file2, *max_len)?;
            let mut text = String::new();
            for w in first.difference(&second) {
                text += &format!("- {w}\n");
            }
            for w in second.difference(&first) {
                text += &format!("+ {w}\n");
            }
            (Outcome::check(text.is_empty(), text), io)
        }
        Command::Export { op: ExportOp::Dot, io } => {
            (Outcome::ok(to_dot(&load_automaton(io.input.as_ref())?)), io)
        }
    };
    Ok((outcome, io.output.clone()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((outcome, output)) => {
            let written = match output {
                Some(p) if p.as_os_str() != "-" => fs::write(&p, &outcome.text),
                _ => io::stdout().write_all(outcome.text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
