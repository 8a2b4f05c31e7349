//! Line-oriented text format and DOT export.
//!
//! ```text
//! alphabet: a b
//! states: 3
//! initial: 0
//! final: 0 1
//! trans: 0 a 1
//! trans: 1 eps 2
//! ```
//!
//! `eps` marks an ε-transition; `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::dfa::Dfa;
use super::nfa::Nfa;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter};

pub fn parse_automaton(text: &str) -> Result<Nfa> {
    let mut alphabet: Option<Alphabet> = None;
    let mut states: Option<usize> = None;
    let mut initial: Vec<(usize, usize)> = Vec::new();
    let mut finals: Vec<(usize, usize)> = Vec::new();
    let mut trans: Vec<(usize, usize, Option<Letter>, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |msg: String| Error::Format { line: line_no, msg };
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| err("expected `key: value`".into()))?;
        let toks: Vec<&str> = rest.split_whitespace().collect();
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| err(format!("expected a state number, got {t:?}")))
        };
        match key.trim() {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(err("duplicate alphabet".into()));
                }
                alphabet = Some(Alphabet::parse(rest).map_err(|e| err(e.to_string()))?);
            }
            "states" => {
                if toks.len() != 1 {
                    return Err(err("expected one number".into()));
                }
                states = Some(num(toks[0])?);
            }
            "initial" => {
                for t in toks {
                    initial.push((line_no, num(t)?));
                }
            }
            "final" => {
                for t in toks {
                    finals.push((line_no, num(t)?));
                }
            }
            "trans" => {
                if toks.len() != 3 {
                    return Err(err("expected `trans: <q> <letter> <q>`".into()));
                }
                let letter = if toks[1] == "eps" {
                    None
                } else {
                    Some(toks[1].parse::<Letter>().map_err(|e| err(e.to_string()))?)
                };
                trans.push((line_no, num(toks[0])?, letter, num(toks[2])?));
            }
            other => return Err(err(format!("unknown key {other:?}"))),
        }
    }

    let alphabet = alphabet.ok_or(Error::Format {
        line: 0,
        msg: "missing `alphabet:`".into(),
    })?;
    let n = states.ok_or(Error::Format {
        line: 0,
        msg: "missing `states:`".into(),
    })?;
    let mut nfa = Nfa::with_states(alphabet, n);
    let wrap = |line: usize| {
        move |e: Error| Error::Format {
            line,
            msg: e.to_string(),
        }
    };
    for (line, q) in initial {
        nfa.add_initial(q).map_err(wrap(line))?;
    }
    for (line, q) in finals {
        nfa.set_final(q, true).map_err(wrap(line))?;
    }
    for (line, p, l, q) in trans {
        nfa.add_transition(p, l, q).map_err(wrap(line))?;
    }
    Ok(nfa)
}

fn alphabet_line(alphabet: &Alphabet) -> String {
    let names: Vec<String> = alphabet.letters().iter().map(|l| l.to_string()).collect();
    format!("alphabet: {}\n", names.join(" "))
}

pub fn write_dfa(dfa: &Dfa) -> String {
    let mut out = alphabet_line(dfa.alphabet());
    writeln!(out, "states: {}", dfa.num_states()).unwrap();
    writeln!(out, "initial: {}", dfa.initial()).unwrap();
    let finals: Vec<String> = (0..dfa.num_states())
        .filter(|&q| dfa.is_final(q))
        .map(|q| q.to_string())
        .collect();
    writeln!(out, "final: {}", finals.join(" ")).unwrap();
    for q in 0..dfa.num_states() {
        for (a, l) in dfa.alphabet().letters().iter().enumerate() {
            writeln!(out, "trans: {q} {l} {}", dfa.next(q, a)).unwrap();
        }
    }
    out
}

pub fn write_nfa(nfa: &Nfa) -> String {
    let mut out = alphabet_line(nfa.alphabet());
    writeln!(out, "states: {}", nfa.num_states()).unwrap();
    let init: Vec<String> = nfa.initial_states().map(|q| q.to_string()).collect();
    writeln!(out, "initial: {}", init.join(" ")).unwrap();
    let finals: Vec<String> = (0..nfa.num_states())
        .filter(|&q| nfa.is_final(q))
        .map(|q| q.to_string())
        .collect();
    writeln!(out, "final: {}", finals.join(" ")).unwrap();
    for (p, l, q) in nfa.transitions() {
        match l {
            Some(l) => writeln!(out, "trans: {p} {l} {q}").unwrap(),
            None => writeln!(out, "trans: {p} eps {q}").unwrap(),
        }
    }
    out
}

fn dot(
    n: usize,
    initial: &[usize],
    is_final: impl Fn(usize) -> bool,
    edges: Vec<(usize, String, usize)>,
) -> String {
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n");
    for q in 0..n {
        if is_final(q) {
            writeln!(out, "  {q} [shape=doublecircle];").unwrap();
        } else {
            writeln!(out, "  {q};").unwrap();
        }
    }
    for (i, q) in initial.iter().enumerate() {
        writeln!(out, "  start{i} [shape=point];\n  start{i} -> {q};").unwrap();
    }
    let mut grouped: BTreeMap<(usize, usize), Vec<String>> = BTreeMap::new();
    for (p, label, q) in edges {
        grouped.entry((p, q)).or_default().push(label);
    }
    for ((p, q), labels) in grouped {
        writeln!(out, "  {p} -> {q} [label=\"{}\"];", labels.join(",")).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn dfa_to_dot(dfa: &Dfa) -> String {
    let mut edges = Vec::new();
    for q in 0..dfa.num_states() {
        for (a, l) in dfa.alphabet().letters().iter().enumerate() {
            edges.push((q, l.to_string(), dfa.next(q, a)));
        }
    }
    dot(
        dfa.num_states(),
        &[dfa.initial()],
        |q| dfa.is_final(q),
        edges,
    )
}

pub fn nfa_to_dot(nfa: &Nfa) -> String {
    let edges = nfa
        .transitions()
        .into_iter()
        .map(|(p, l, q)| (p, l.map_or("ε".to_string(), |l| l.to_string()), q))
        .collect();
    let init: Vec<usize> = nfa.initial_states().collect();
    dot(nfa.num_states(), &init, |q| nfa.is_final(q), edges)
}
