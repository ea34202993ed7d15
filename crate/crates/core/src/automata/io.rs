//! Line-oriented automaton file format.
//!
//! ```text
//! automaton v1
//! alphabet: a b
//! states: 3
//! initial: 0
//! finals: 1 2
//! trans: 0 a 1
//! trans: 1 b 2
//! ```
//!
//! Transition lines are sorted by (source, symbol in alphabet order,
//! target), so equal automata serialize to identical bytes.

use std::fmt::Write;

use super::{Dfa, Nfa};
use crate::error::{Error, Result};
use crate::regex::{Alphabet, Symbol};

pub const HEADER: &str = "automaton v1";

impl Nfa {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let names: Vec<&str> = self.alphabet().iter().map(Symbol::name).collect();
        let finals: Vec<String> = self.finals().map(|q| q.to_string()).collect();
        writeln!(out, "{HEADER}").unwrap();
        writeln!(out, "{}", join_field("alphabet", &names)).unwrap();
        writeln!(out, "states: {}", self.num_states()).unwrap();
        writeln!(out, "initial: {}", self.initial()).unwrap();
        writeln!(out, "{}", join_field("finals", &finals)).unwrap();
        for (p, a, q) in self.transitions() {
            writeln!(out, "trans: {p} {} {q}", names[a]).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Nfa> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let bad = |line: usize, message: &str| Error::Format {
            line,
            message: message.to_string(),
        };
        let mut next = |key: &str| -> Result<(usize, String)> {
            let (no, l) = lines.next().ok_or_else(|| bad(0, "unexpected end of file"))?;
            if key.is_empty() {
                return Ok((no, l.to_string()));
            }
            let rest = l
                .strip_prefix(key)
                .and_then(|r| r.strip_prefix(':'))
                .ok_or_else(|| bad(no, &format!("expected `{key}:`")))?;
            Ok((no, rest.trim().to_string()))
        };
        let (no, header) = next("")?;
        if header != HEADER {
            return Err(bad(no, "missing `automaton v1` header"));
        }
        let (no, names) = next("alphabet")?;
        let alphabet = Alphabet::from_names(names.split_whitespace())
            .map_err(|e| bad(no, &e.to_string()))?;
        let number = |no: usize, s: &str| -> Result<usize> {
            s.parse().map_err(|_| bad(no, &format!("bad number `{s}`")))
        };
        let (no, states) = next("states")?;
        let states = number(no, &states)?;
        if states == 0 {
            return Err(bad(no, "an automaton needs at least one state"));
        }
        let (no, initial) = next("initial")?;
        let initial = number(no, &initial)?;
        if initial >= states {
            return Err(bad(no, "initial state out of range"));
        }
        let mut a = Nfa::new(alphabet, states, initial);
        let (no, finals) = next("finals")?;
        for f in finals.split_whitespace() {
            let q = number(no, f)?;
            if q >= states {
                return Err(bad(no, "final state out of range"));
            }
            a.set_final(q, true);
        }
        for (no, l) in lines {
            let rest = l
                .strip_prefix("trans:")
                .ok_or_else(|| bad(no, "expected `trans:`"))?;
            let parts: Vec<&str> = rest.split_whitespace().collect();
            let [p, s, q] = parts[..] else {
                return Err(bad(no, "transition needs `p a q`"));
            };
            let (p, q) = (number(no, p)?, number(no, q)?);
            if p >= states || q >= states {
                return Err(bad(no, "state out of range"));
            }
            let s = a
                .alphabet()
                .id_of(s)
                .ok_or_else(|| bad(no, &format!("symbol `{s}` not in alphabet")))?;
            a.add_transition(p, s, q);
        }
        Ok(a)
    }
}

fn join_field(key: &str, items: &[impl AsRef<str>]) -> String {
    let mut s = format!("{key}:");
    for i in items {
        s.push(' ');
        s.push_str(i.as_ref());
    }
    s
}

impl Dfa {
    pub fn to_text(&self) -> String {
        self.to_nfa().to_text()
    }

    pub fn from_text(text: &str) -> Result<Dfa> {
        Dfa::from_nfa(&Nfa::from_text(text)?)
    }
}
