use std::collections::HashMap;

use super::{Dfa, Nfa, StateId};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Subset construction over the reachable subsets. The empty subset is not
/// materialized, so the result may be partial.
pub fn determinize(a: &Nfa, budget: &Budget) -> Result<Dfa> {
    subsets(a, budget, None)
}

/// States accepting every word: the largest set of final states in which
/// each state has, for every symbol, a successor inside the set.
pub fn universal_states(a: &Nfa) -> Vec<bool> {
    let k = a.alphabet().len();
    let mut u: Vec<bool> = (0..a.num_states()).map(|q| a.is_final(q)).collect();
    loop {
        let mut changed = false;
        for q in 0..a.num_states() {
            if u[q] && !(0..k).all(|s| a.successors(q, s).any(|t| u[t])) {
                u[q] = false;
                changed = true;
            }
        }
        if !changed {
            return u;
        }
    }
}

/// Subset construction in which every subset containing a universal state
/// is replaced by one accepting sink. Same language as [`determinize`], but
/// subsets that differ only after acceptance is certain are not told apart,
/// which keeps "some violation occurs" automata small.
pub fn determinize_collapsed(a: &Nfa, budget: &Budget) -> Result<Dfa> {
    let u = universal_states(a);
    match u.iter().position(|&x| x) {
        Some(top) => subsets(a, budget, Some((&u, top))),
        None => subsets(a, budget, None),
    }
}

fn subsets(a: &Nfa, budget: &Budget, universal: Option<(&[bool], StateId)>) -> Result<Dfa> {
    let k = a.alphabet().len();
    let collapse = |set: &mut Vec<StateId>| {
        if let Some((u, top)) = universal {
            if set.iter().any(|&q| u[q]) {
                set.clear();
                set.push(top);
            }
        }
    };
    let mut ids: HashMap<Vec<StateId>, StateId> = HashMap::new();
    let mut start = vec![a.initial()];
    collapse(&mut start);
    let mut subsets = vec![start];
    ids.insert(subsets[0].clone(), 0);
    let mut rows: Vec<Vec<Option<StateId>>> = Vec::new();
    let mut buckets: Vec<Vec<StateId>> = vec![Vec::new(); k];
    let mut i = 0;
    while i < subsets.len() {
        if i % 1024 == 0 {
            budget.poll()?;
        }
        for bucket in &mut buckets {
            bucket.clear();
        }
        for &q in &subsets[i] {
            for &(s, t) in a.edges(q) {
                buckets[s].push(t);
            }
        }
        let mut row = vec![None; k];
        for (s, bucket) in buckets.iter_mut().enumerate() {
            if bucket.is_empty() {
                continue;
            }
            bucket.sort_unstable();
            bucket.dedup();
            collapse(bucket);
            let id = match ids.get(bucket.as_slice()) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    budget.check_states(id + 1)?;
                    ids.insert(bucket.clone(), id);
                    subsets.push(bucket.clone());
                    id
                }
            };
            row[s] = Some(id);
        }
        rows.push(row);
        i += 1;
    }
    let mut d = Dfa::new(a.alphabet().clone(), subsets.len(), 0);
    for (q, row) in rows.into_iter().enumerate() {
        for (s, t) in row.into_iter().enumerate() {
            d.set_transition(q, s, t);
        }
        d.set_final(q, subsets[q].iter().any(|&p| a.is_final(p)));
    }
    Ok(d)
}

/// Totalizes and swaps final and non-final states: `L = Σ* \ L(d)`.
pub fn complement_dfa(d: &Dfa) -> Dfa {
    let mut c = d.totalize();
    for q in 0..c.num_states() {
        let f = c.is_final(q);
        c.set_final(q, !f);
    }
    c
}

/// Reachable cross product; accepts `L(a) ∩ L(b)`. The alphabets must hold
/// the same symbols; the result uses `a`'s order.
pub fn product(a: &Nfa, b: &Nfa, budget: &Budget) -> Result<Nfa> {
    if !a.alphabet().same_set(b.alphabet()) {
        return Err(Error::AlphabetMismatch);
    }
    let b = b.with_alphabet(a.alphabet())?;
    let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut pairs = vec![(a.initial(), b.initial())];
    ids.insert(pairs[0], 0);
    let mut edges: Vec<Vec<(usize, StateId)>> = Vec::new();
    let mut i = 0;
    while i < pairs.len() {
        if i % 1024 == 0 {
            budget.poll()?;
        }
        let (p, q) = pairs[i];
        let mut out = Vec::new();
        for &(s, p2) in a.edges(p) {
            for q2 in b.successors(q, s) {
                let id = match ids.get(&(p2, q2)) {
                    Some(&id) => id,
                    None => {
                        let id = pairs.len();
                        budget.check_states(id + 1)?;
                        ids.insert((p2, q2), id);
                        pairs.push((p2, q2));
                        id
                    }
                };
                out.push((s, id));
            }
        }
        edges.push(out);
        i += 1;
    }
    let mut c = Nfa::new(a.alphabet().clone(), pairs.len(), 0);
    for (id, out) in edges.into_iter().enumerate() {
        for (s, t) in out {
            c.add_transition(id, s, t);
        }
        let (p, q) = pairs[id];
        c.set_final(id, a.is_final(p) && b.is_final(q));
    }
    Ok(c)
}
