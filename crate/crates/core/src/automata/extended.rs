//! Compilation of extended expressions (with `∩` and `¬`) into NFAs.

use super::{complement_dfa, determinize_collapsed, glushkov, minimize, product, Nfa};
use crate::budget::Budget;
use crate::error::Result;
use crate::regex::{Alphabet, Regex};

/// NFA for `L(a) ∪ L(b)`; fresh initial state copying both initial fan-outs.
pub fn union_nfa(a: &Nfa, b: &Nfa) -> Nfa {
    let mut c = Nfa::new(a.alphabet().clone(), 1, 0);
    let oa = c.absorb(a);
    let ob = c.absorb(b);
    for &(s, t) in a.edges(a.initial()) {
        c.add_transition(0, s, t + oa);
    }
    for &(s, t) in b.edges(b.initial()) {
        c.add_transition(0, s, t + ob);
    }
    c.set_final(0, a.is_final(a.initial()) || b.is_final(b.initial()));
    c.trim()
}

/// NFA for `L(a)·L(b)`; finals of `a` take over the fan-out of `b`'s initial state.
pub fn concat_nfa(a: &Nfa, b: &Nfa) -> Nfa {
    let mut c = a.clone();
    let ob = c.absorb(b);
    let b_nullable = b.is_final(b.initial());
    let finals_a: Vec<usize> = a.finals().collect();
    for f in finals_a {
        for &(s, t) in b.edges(b.initial()) {
            c.add_transition(f, s, t + ob);
        }
        c.set_final(f, b_nullable);
    }
    c.trim()
}

fn iterate(a: &Nfa, nullable: bool) -> Nfa {
    let mut c = Nfa::new(a.alphabet().clone(), 1, 0);
    let oa = c.absorb(a);
    let fan_out: Vec<(usize, usize)> = a
        .edges(a.initial())
        .iter()
        .map(|&(s, t)| (s, t + oa))
        .collect();
    for &(s, t) in &fan_out {
        c.add_transition(0, s, t);
    }
    for f in a.finals() {
        for &(s, t) in &fan_out {
            c.add_transition(f + oa, s, t);
        }
    }
    c.set_final(0, nullable);
    c.trim()
}

/// NFA for `L(a)*`.
pub fn star_nfa(a: &Nfa) -> Nfa {
    iterate(a, true)
}

/// NFA for `L(a)+`.
pub fn plus_nfa(a: &Nfa) -> Nfa {
    iterate(a, a.is_final(a.initial()))
}

/// Compiles any extended expression. Plain subexpressions go through the
/// Glushkov construction, intersections through the product, negations
/// through determinize–minimize–complement.
pub fn extended_to_nfa(r: &Regex, alphabet: &Alphabet, budget: &Budget) -> Result<Nfa> {
    budget.poll()?;
    if r.is_plain() {
        return glushkov(r, alphabet);
    }
    let a = match r {
        Regex::Concat(x, y) => concat_nfa(
            &extended_to_nfa(x, alphabet, budget)?,
            &extended_to_nfa(y, alphabet, budget)?,
        ),
        Regex::Union(x, y) => union_nfa(
            &extended_to_nfa(x, alphabet, budget)?,
            &extended_to_nfa(y, alphabet, budget)?,
        ),
        Regex::Star(x) => star_nfa(&extended_to_nfa(x, alphabet, budget)?),
        Regex::Plus(x) => plus_nfa(&extended_to_nfa(x, alphabet, budget)?),
        Regex::Intersect(x, y) => product(
            &extended_to_nfa(x, alphabet, budget)?,
            &extended_to_nfa(y, alphabet, budget)?,
            budget,
        )?
        .trim(),
        Regex::Negate(x) => {
            let inner = extended_to_nfa(x, alphabet, budget)?;
            let d = minimize(&determinize_collapsed(&inner, budget)?);
            complement_dfa(&d).to_nfa()
        }
        Regex::Empty | Regex::Epsilon | Regex::Sym(_) => unreachable!("plain"),
    };
    budget.check_states(a.num_states())?;
    Ok(a)
}
