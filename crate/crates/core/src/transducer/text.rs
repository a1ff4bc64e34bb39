//! FBT v1 text serialization and Graphviz export.
//!
//! ```text
//! FBT 1 <nstates> <initial> <alphabet_size>
//! <id> <terminal 0|1> <t0_target|-> <t0_out|-> <t1_target|-> <t1_out|->
//! ```
//!
//! Output letters are written as integer ids.

use std::fmt::Write;

use super::{State, Transducer, NO_STATE};
use crate::error::{Error, Result};
use crate::words::Letter;

pub fn to_fbt(t: &Transducer) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "FBT 1 {} {} {}",
        t.num_states(),
        t.initial,
        t.alphabet_size()
    )
    .unwrap();
    for (q, st) in t.states.iter().enumerate() {
        write!(s, "{q} {}", u8::from(st.terminal)).unwrap();
        for b in 0..2 {
            if st.next[b] == NO_STATE {
                s.push_str(" - -");
            } else {
                write!(s, " {} {}", st.next[b], st.out[b]).unwrap();
            }
        }
        s.push('\n');
    }
    s
}

fn parse_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

fn num(tok: &str, line: usize, what: &str) -> Result<u32> {
    tok.parse::<u32>()
        .map_err(|_| parse_err(line, format!("bad {what} '{tok}'")))
}

/// Parses FBT v1. The result is not validated.
pub fn parse_fbt(src: &str) -> Result<Transducer> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    if h.len() != 5 || h[0] != "FBT" || h[1] != "1" {
        return Err(parse_err(
            ln,
            "expected 'FBT 1 <nstates> <initial> <alphabet_size>'",
        ));
    }
    let n = num(h[2], ln, "state count")? as usize;
    let initial = num(h[3], ln, "initial state")?;
    let alphabet = num(h[4], ln, "alphabet size")?;
    if n == 0 {
        return Err(parse_err(ln, "a transducer needs at least one state"));
    }
    let mut states: Vec<Option<State>> = vec![None; n];
    for (ln, line) in lines {
        let tok: Vec<&str> = line.split_whitespace().collect();
        if tok.len() != 6 {
            return Err(parse_err(ln, "expected 6 fields"));
        }
        let id = num(tok[0], ln, "state id")? as usize;
        if id >= n {
            return Err(parse_err(ln, format!("state id {id} out of range")));
        }
        if states[id].is_some() {
            return Err(parse_err(ln, format!("state {id} defined twice")));
        }
        let terminal = match tok[1] {
            "0" => false,
            "1" => true,
            other => return Err(parse_err(ln, format!("bad terminal flag '{other}'"))),
        };
        let mut st = State::new(terminal);
        for b in 0..2 {
            match (tok[2 + 2 * b], tok[3 + 2 * b]) {
                ("-", "-") => {}
                ("-", _) | (_, "-") => {
                    return Err(parse_err(
                        ln,
                        format!("transition {b} must give both target and output or neither"),
                    ))
                }
                (t, o) => {
                    st.next[b] = num(t, ln, "target")?;
                    if st.next[b] == NO_STATE {
                        return Err(parse_err(ln, "target out of range"));
                    }
                    st.out[b] = Letter(num(o, ln, "output letter")?).id();
                }
            }
        }
        states[id] = Some(st);
    }
    let states = states
        .into_iter()
        .enumerate()
        .map(|(q, s)| s.ok_or_else(|| Error::Parse(format!("state {q} missing"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Transducer::from_raw(states, initial, alphabet))
}

/// Graphviz rendering; edges are labelled `bit|letter`.
pub fn to_dot(t: &Transducer) -> String {
    let mut s = String::from("digraph transducer {\n  rankdir=TB;\n  start [shape=point];\n");
    writeln!(s, "  start -> {};", t.initial).unwrap();
    for (q, st) in t.states.iter().enumerate() {
        let shape = if st.terminal {
            "doublecircle"
        } else {
            "circle"
        };
        writeln!(s, "  {q} [shape={shape}];").unwrap();
    }
    for (q, st) in t.states.iter().enumerate() {
        for b in 0..2 {
            if st.next[b] != NO_STATE {
                writeln!(
                    s,
                    "  {q} -> {} [label=\"{b}|{}\"];",
                    st.next[b],
                    Letter(st.out[b])
                )
                .unwrap();
            }
        }
    }
    s.push_str("}\n");
    s
}
