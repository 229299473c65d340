use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use linlang::grammar::{enumerate_language, to_slnf};
use linlang::textio::{parse_automaton, parse_grammar, serialize_automaton, serialize_grammar, to_dot};
use linlang::transform;

fn corpus(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "corpus", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn read(name: &str) -> String {
    std::fs::read_to_string(corpus(name)).unwrap()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linlang")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_linlang"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn simulate_trace() {
    let nla = corpus("ex_nla.lin");
    let o = run(&["auto", "simulate", "-i", &nla, "--input", "abbaaaa", "--trace"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        &lines[..5],
        ["(q0,abbaaaa)", "(p1,bbaaaa)", "(p2,bbaaa)", "(q1,bbaa)", "(p1,baa)"]
    );
    let again = run(&["auto", "simulate", "-i", &nla, "--input", "abbaaaa", "--trace"]);
    assert_eq!(again.stdout, o.stdout);
}

#[test]
fn simulate_accept_and_reject() {
    let nla = corpus("ex_nla.lin");
    let yes = run(&["auto", "simulate", "-i", &nla, "--input", "ab"]);
    assert_eq!((code(&yes), stdout(&yes).as_str()), (0, "accept\n"));
    let no = run(&["auto", "simulate", "-i", &nla, "--input", "ba"]);
    assert_eq!((code(&no), stdout(&no).as_str()), (1, "reject\n"));
    let traced = run(&["auto", "simulate", "-i", &nla, "--input", "eps", "--trace"]);
    assert_eq!(code(&traced), 1);
    let bad = run(&["auto", "simulate", "-i", &nla, "--input", "abc"]);
    assert_eq!(code(&bad), 2);
}

#[test]
fn ndeg_of_dla() {
    let o = run(&["auto", "ndeg", "-i", &corpus("dla_anbn_ancn.lin")]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "0\n"));
    let o = run(&["auto", "ndeg", "-i", &corpus("lk_4.lin")]);
    assert_eq!(stdout(&o), "4\n");
}

#[test]
fn equiv_reports_symmetric_difference() {
    let dir = std::env::temp_dir().join(format!("linlang-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let lk2 = dir.join("lk2.lin");
    let gen = run(&["gen", "lk", "--k", "2", "-o", lk2.to_str().unwrap()]);
    assert_eq!(code(&gen), 0);
    assert!(gen.stdout.is_empty());

    let grammar = corpus("ex_lg.grm");
    let o = run(&["equiv", "g", &grammar, "a", lk2.to_str().unwrap(), "--max-len", "12"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (1, "+ eps\n"));

    let lk3 = stdout(&run(&["gen", "lk", "--k", "3"]));
    let o = run_stdin(&["equiv", "g", &grammar, "a", "-", "--max-len", "8"], &lk3);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "+ eps\n+ abbbb\n");

    let same = run(&["equiv", "g", &grammar, "g", &corpus("ex_slnf.grm"), "--max-len", "10"]);
    assert_eq!((code(&same), stdout(&same).as_str()), (0, ""));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn outputs_match_library() {
    let g = parse_grammar(&read("ex_lg.grm")).unwrap();
    let o = run(&["grammar", "slnf", "-i", &corpus("ex_lg.grm")]);
    assert_eq!(stdout(&o), serialize_grammar(&to_slnf(&g)));

    let o = run(&["grammar", "enum", "--max-len", "6", "-i", &corpus("ex_lg.grm")]);
    let expected: String = enumerate_language(&g, 6).iter().map(|w| format!("{w}\n")).collect();
    assert_eq!(stdout(&o), expected);

    let o = run(&["convert", "g2a", "-i", &corpus("ex_lg.grm")]);
    assert_eq!(stdout(&o), serialize_automaton(&transform::grammar_to_nla(&g)));

    let d = parse_grammar(&read("det_2_1.grm")).unwrap();
    let o = run(&["convert", "det-g2dla", "-i", &corpus("det_2_1.grm")]);
    assert_eq!(stdout(&o), serialize_automaton(&transform::det_grammar_to_dla(&d).unwrap()));

    let pal = parse_automaton(&read("palindrome_even.lin")).unwrap();
    let o = run(&["convert", "even-a2g", "-i", &corpus("palindrome_even.lin")]);
    assert_eq!(stdout(&o), serialize_grammar(&transform::even_nla_to_grammar(&pal).unwrap()));
    let o = run(&["export", "dot", "-i", &corpus("palindrome_even.lin")]);
    assert_eq!(stdout(&o), to_dot(&pal));

    let nla = parse_automaton(&read("ex_nla.lin")).unwrap();
    let o = run_stdin(&["auto", "elim-lambda"], &read("ex_nla.lin"));
    assert_eq!(stdout(&o), serialize_automaton(&nla.eliminate_lambda()));
    let o = run(&["convert", "a2g", "-i", &corpus("ex_nla.lin")]);
    assert_eq!(stdout(&o), serialize_grammar(&transform::nla_to_grammar(&nla)));
}

#[test]
fn generated_witness_matches_corpus() {
    for k in 0..=6 {
        let o = run(&["gen", "lk", "--k", &k.to_string()]);
        assert_eq!(stdout(&o), read(&format!("lk_{k}.lin")));
    }
}

#[test]
fn boolean_checks_map_to_exit_codes() {
    let cases = [
        (vec!["auto", "is-det"], "dla_anbn_ancn.lin", 0, "yes\n"),
        (vec!["auto", "is-det"], "lk_1.lin", 1, "no\n"),
        (vec!["auto", "is-even"], "palindrome_even.lin", 0, "yes\n"),
        (vec!["auto", "is-even"], "lk_2.lin", 1, "no\n"),
        (vec!["auto", "is-determinizable"], "palindrome_all.lin", 0, "yes\n"),
        (vec!["auto", "is-determinizable"], "lk_2.lin", 1, "no\nmixed subset {p1, q1}\n"),
    ];
    for (args, file, status, text) in cases {
        let path = corpus(file);
        let mut args = args.clone();
        args.extend(["-i", path.as_str()]);
        let o = run(&args);
        assert_eq!((code(&o), stdout(&o).as_str()), (status, text), "{args:?}");
    }
}

#[test]
fn precondition_violations_exit_3() {
    let cases = [
        vec!["auto", "is-even", "-i"],
        vec!["auto", "ndeg", "-i"],
        vec!["auto", "determinize", "-i"],
    ];
    for args in cases {
        let path = corpus("ex_nla.lin");
        let mut args = args.clone();
        args.push(&path);
        let o = run(&args);
        assert_eq!(code(&o), 3, "{args:?}");
        assert!(stderr(&o).starts_with("error:"));
    }
    assert_eq!(code(&run(&["convert", "det-g2dla", "-i", &corpus("ex_lg.grm")])), 3);
    assert_eq!(code(&run(&["grammar", "even-nf", "-i", &corpus("ex_lg.grm")])), 3);
    assert_eq!(code(&run(&["convert", "even-g2a", "-i", &corpus("ex_lg.grm")])), 3);
    assert_eq!(code(&run(&["auto", "determinize", "-i", &corpus("lk_1.lin")])), 3);
}

#[test]
fn strict_determinize_requires_one_initial_state() {
    let two = "automaton\nalphabet a\nleft x y\ninitial x y\nfinal y\nx a -> y\n";
    let lax = run_stdin(&["auto", "determinize"], two);
    assert_eq!(code(&lax), 0);
    assert!(stderr(&lax).contains("2 initial states"));
    let strict = run_stdin(&["auto", "determinize", "--strict"], two);
    assert_eq!(code(&strict), 3);
    let one = run(&["auto", "determinize", "--strict", "-i", &corpus("dla_anbn_ancn.lin")]);
    let dla = parse_automaton(&read("dla_anbn_ancn.lin")).unwrap();
    assert_eq!(stdout(&one), serialize_automaton(&dla));
}

#[test]
fn parse_errors_exit_2_with_position() {
    let o = run_stdin(&["grammar", "check"], "grammar\nstart S\nterminals a\nvariables S\nS -> a X\n");
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("5:8"), "{}", stderr(&o));
    let o = run_stdin(&["auto", "check"], "automaton\nleft q\nright q\n");
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("3:7"), "{}", stderr(&o));
    assert_eq!(code(&run(&["grammar", "frobnicate"])), 2);
    assert_eq!(code(&run(&["auto", "check", "-i", "/nonexistent/file.lin"])), 2);
}

#[test]
fn check_and_classify() {
    let o = run(&["grammar", "check", "-i", &corpus("ex_lg.grm")]);
    assert_eq!(stdout(&o), "ok: 1 variables, 2 terminals, 6 productions\n");
    let o = run(&["grammar", "classify", "-i", &corpus("ex_lnf.grm")]);
    assert_eq!(
        stdout(&o),
        "S right-linear\nA left-linear\nlnf yes\nslnf no\ndeterministic-linear no\neven-linear no\n"
    );
    let o = run(&["auto", "check", "-i", &corpus("ex_nla.lin")]);
    assert_eq!(stdout(&o), "ok: 4 left states, 4 right states, 11 transitions, has λ-moves\n");
}
