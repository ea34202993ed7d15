use std::collections::{HashMap, VecDeque};

use super::{determinize_collapsed, Dfa, Nfa, StateId};
use crate::budget::Budget;
use crate::error::{Error, Result};

const NONE: usize = usize::MAX;

/// Canonical minimal DFA: unreachable and dead states are dropped (so the
/// result is partial), equivalent states merged by partition refinement,
/// and states numbered breadth-first from the initial state trying symbols
/// in alphabet order. Equal languages over the same alphabet give equal
/// results, and therefore identical serializations.
pub fn minimize(d: &Dfa) -> Dfa {
    let n = d.num_states();
    let k = d.alphabet().len();
    let nfa = d.to_nfa();
    let reach = nfa.reachable();
    let co = nfa.coreachable();
    let live: Vec<bool> = (0..n).map(|q| reach[q] && co[q]).collect();
    if !live[d.initial()] {
        return Dfa::new(d.alphabet().clone(), 1, 0);
    }
    let succ = |q: StateId, a: usize| d.step(q, a).filter(|&t| live[t]);

    let mut class: Vec<usize> = (0..n).map(|q| usize::from(d.is_final(q))).collect();
    let mut count = 0;
    loop {
        let mut sigs: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next = vec![NONE; n];
        for q in (0..n).filter(|&q| live[q]) {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(class[q]);
            sig.extend((0..k).map(|a| succ(q, a).map_or(NONE, |t| class[t])));
            let fresh = sigs.len();
            next[q] = *sigs.entry(sig).or_insert(fresh);
        }
        let new_count = sigs.len();
        class = next;
        if new_count == count {
            break;
        }
        count = new_count;
    }

    // representative state per class, then breadth-first renumbering
    let mut rep = vec![NONE; count];
    for q in (0..n).filter(|&q| live[q]) {
        if rep[class[q]] == NONE {
            rep[class[q]] = q;
        }
    }
    let mut order = vec![NONE; count];
    let mut queue = VecDeque::from([class[d.initial()]]);
    order[class[d.initial()]] = 0;
    let mut seq = vec![class[d.initial()]];
    while let Some(c) = queue.pop_front() {
        for a in 0..k {
            if let Some(t) = succ(rep[c], a) {
                let tc = class[t];
                if order[tc] == NONE {
                    order[tc] = seq.len();
                    seq.push(tc);
                    queue.push_back(tc);
                }
            }
        }
    }
    let mut out = Dfa::new(d.alphabet().clone(), seq.len(), 0);
    for (i, &c) in seq.iter().enumerate() {
        out.set_final(i, d.is_final(rep[c]));
        for a in 0..k {
            out.set_transition(i, a, succ(rep[c], a).map(|t| order[class[t]]));
        }
    }
    out
}

fn canonical(a: &Nfa, budget: &Budget) -> Result<String> {
    Ok(minimize(&determinize_collapsed(a, budget)?).to_text())
}

/// Language equality, decided by comparing canonical minimal DFAs.
pub fn equivalent(a: &Nfa, b: &Nfa, budget: &Budget) -> Result<bool> {
    if !a.alphabet().same_set(b.alphabet()) {
        return Err(Error::AlphabetMismatch);
    }
    let b = b.with_alphabet(a.alphabet())?;
    Ok(canonical(a, budget)? == canonical(&b, budget)?)
}

/// The length-lexicographically smallest word (in `a`'s alphabet order) in
/// the symmetric difference of the two languages, if any.
pub fn distinguishing_word(a: &Nfa, b: &Nfa, budget: &Budget) -> Result<Option<Vec<usize>>> {
    if !a.alphabet().same_set(b.alphabet()) {
        return Err(Error::AlphabetMismatch);
    }
    let b = b.with_alphabet(a.alphabet())?;
    let da = determinize_collapsed(a, budget)?;
    let db = determinize_collapsed(&b, budget)?;
    let k = a.alphabet().len();
    let accepting = |s: Option<StateId>, d: &Dfa| s.is_some_and(|q| d.is_final(q));
    type Pair = (Option<StateId>, Option<StateId>);
    let start: Pair = (Some(da.initial()), Some(db.initial()));
    let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
    parent.insert(start, None);
    let mut queue = VecDeque::from([start]);
    let mut steps = 0usize;
    while let Some(pair) = queue.pop_front() {
        steps += 1;
        if steps.is_multiple_of(1024) {
            budget.poll()?;
            budget.check_states(parent.len())?;
        }
        if accepting(pair.0, &da) != accepting(pair.1, &db) {
            let mut word = Vec::new();
            let mut cur = pair;
            while let Some(Some((prev, s))) = parent.get(&cur) {
                word.push(*s);
                cur = *prev;
            }
            word.reverse();
            return Ok(Some(word));
        }
        for s in 0..k {
            let next = (
                pair.0.and_then(|q| da.step(q, s)),
                pair.1.and_then(|q| db.step(q, s)),
            );
            if next == (None, None) {
                continue;
            }
            parent.entry(next).or_insert_with(|| {
                queue.push_back(next);
                Some((pair, s))
            });
        }
    }
    Ok(None)
}
