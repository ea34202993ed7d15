use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::automata::{concat_nfa, determinize_collapsed, minimize, star_nfa, union_nfa, Dfa, Nfa};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::regex::{format, Regex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    /// Smallest size of a plain expression for the target, if within bounds.
    pub size: Option<usize>,
    #[serde(serialize_with = "as_text")]
    pub witness: Option<Regex>,
    pub candidates: usize,
    /// Distinct languages first reached at each size `1..=searched`.
    pub new_languages: Vec<usize>,
}

fn as_text<S: serde::Serializer>(r: &Option<Regex>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&format(r)),
        None => s.serialize_none(),
    }
}

struct Class {
    regex: Regex,
    nfa: Nfa,
}

fn canonical(a: &Nfa, budget: &Budget) -> Result<(String, Nfa)> {
    let d = minimize(&determinize_collapsed(a, budget)?);
    Ok((d.to_text(), d.to_nfa()))
}

/// Exhaustive search over plain expressions (`∅`, `ε`, symbols, `·`, `+`,
/// `*`) by increasing size. Each language is kept once, with the first
/// expression that reached it; larger expressions are built only from these
/// representatives, which loses nothing because swapping a subterm for an
/// equivalent smaller one never increases the size.
pub fn minimal_regex_size(target: &Dfa, max_size: usize, budget: &Budget) -> Result<SearchOutcome> {
    if max_size > budget.max_size {
        return Err(Error::BudgetExceeded {
            what: "search size",
            limit: budget.max_size,
        });
    }
    let sigma = target.alphabet().clone();
    let goal = minimize(target).to_text();
    let mut seen: HashMap<String, usize> = HashMap::new();
    // by_size[s] lists the classes whose minimal size is s
    let mut by_size: Vec<Vec<Class>> = vec![Vec::new()];
    let mut outcome = SearchOutcome {
        size: None,
        witness: None,
        candidates: 0,
        new_languages: Vec::new(),
    };
    for size in 1..=max_size {
        budget.poll()?;
        let candidates: Vec<(Regex, Nfa)> = if size == 1 {
            let mut atoms = vec![
                (Regex::Empty, Nfa::empty(sigma.clone())),
                (Regex::Epsilon, eps(&sigma)),
            ];
            for (i, s) in sigma.iter().enumerate() {
                let mut a = Nfa::new(sigma.clone(), 2, 0);
                a.add_transition(0, i, 1);
                a.set_final(1, true);
                atoms.push((Regex::Sym(s.clone()), a));
            }
            atoms
        } else {
            let mut jobs: Vec<(u8, &Class, Option<&Class>)> = Vec::new();
            for c in &by_size[size - 1] {
                jobs.push((b'*', c, None));
            }
            for left in 1..size - 1 {
                let right = size - 1 - left;
                for a in &by_size[left] {
                    for b in &by_size[right] {
                        jobs.push((b'.', a, Some(b)));
                    }
                }
                if left <= right {
                    for (i, a) in by_size[left].iter().enumerate() {
                        let start = if left == right { i + 1 } else { 0 };
                        for b in &by_size[right][start.min(by_size[right].len())..] {
                            jobs.push((b'|', a, Some(b)));
                        }
                    }
                }
            }
            outcome.candidates += jobs.len();
            if outcome.candidates > budget.max_candidates {
                return Err(Error::BudgetExceeded {
                    what: "search candidates",
                    limit: budget.max_candidates,
                });
            }
            jobs.into_iter()
                .map(|(op, a, b)| match (op, b) {
                    (b'*', _) => (Regex::star(a.regex.clone()), star_nfa(&a.nfa)),
                    (b'.', Some(b)) => (Regex::concat(a.regex.clone(), b.regex.clone()), concat_nfa(&a.nfa, &b.nfa)),
                    (_, Some(b)) => (Regex::union(a.regex.clone(), b.regex.clone()), union_nfa(&a.nfa, &b.nfa)),
                    _ => unreachable!(),
                })
                .collect()
        };
        if size == 1 {
            outcome.candidates += candidates.len();
        }
        let keyed: Vec<Result<(String, Nfa)>> = candidates
            .par_iter()
            .map(|(_, a)| {
                budget.poll()?;
                canonical(a, budget)
            })
            .collect();
        let mut fresh = Vec::new();
        for ((regex, _), key) in candidates.into_iter().zip(keyed) {
            let (key, nfa) = key?;
            if seen.contains_key(&key) {
                continue;
            }
            seen.insert(key.clone(), size);
            if key == goal && outcome.size.is_none() {
                outcome.size = Some(size);
                outcome.witness = Some(regex.clone());
            }
            fresh.push(Class { regex, nfa });
        }
        outcome.new_languages.push(fresh.len());
        by_size.push(fresh);
        if outcome.size.is_some() {
            break;
        }
    }
    Ok(outcome)
}

fn eps(sigma: &crate::regex::Alphabet) -> Nfa {
    let mut a = Nfa::new(sigma.clone(), 1, 0);
    a.set_final(0, true);
    a
}
