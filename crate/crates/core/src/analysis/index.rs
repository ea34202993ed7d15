use std::collections::BTreeSet;

use crate::automata::{extended_to_nfa, Nfa};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::regex::{Regex, Symbol};
use crate::witnesses::z_alphabet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexResult {
    Finite(usize),
    Infinite,
}

/// States reachable from `from` by reading `w`.
fn read(a: &Nfa, from: usize, w: &[usize]) -> BTreeSet<usize> {
    let mut cur = BTreeSet::from([from]);
    for &s in w {
        cur = cur.iter().flat_map(|&q| a.successors(q, s)).collect();
        if cur.is_empty() {
            break;
        }
    }
    cur
}

/// Whether `w` occurs as a factor of some word of `L(a)`.
pub fn covers(a: &Nfa, w: &[usize]) -> bool {
    let t = a.trim();
    if t.is_empty_language() {
        return false;
    }
    // every state of the trimmed automaton is on an accepting path
    (0..t.num_states()).any(|p| !read(&t, p, w).is_empty())
}

/// Greatest `m` such that `wᵐ` is a factor of a word in `L(a)`; `None` when
/// the language is empty. Works on the graph with an edge `p → q` whenever
/// reading `w` can lead from `p` to `q` in the trimmed automaton: `wᵐ` is
/// covered iff that graph has a walk of `m` edges.
pub fn word_index(a: &Nfa, w: &[usize]) -> Result<Option<IndexResult>> {
    if w.is_empty() {
        return Err(Error::Range("the index is defined for non-empty words".into()));
    }
    let t = a.trim();
    if t.is_empty_language() {
        return Ok(None);
    }
    let n = t.num_states();
    let succ: Vec<BTreeSet<usize>> = (0..n).map(|p| read(&t, p, w)).collect();
    // longest walk by memoized DFS; a back edge means a cycle
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done(usize),
    }
    let mut mark = vec![Mark::New; n];
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(root, succ[root].iter().copied().collect())];
        mark[root] = Mark::Open;
        while let Some((p, pending)) = stack.last_mut() {
            let p = *p;
            if let Some(q) = pending.pop() {
                match mark[q] {
                    Mark::Open => return Ok(Some(IndexResult::Infinite)),
                    Mark::New => {
                        mark[q] = Mark::Open;
                        stack.push((q, succ[q].iter().copied().collect()));
                    }
                    Mark::Done(_) => {}
                }
            } else {
                let best = succ[p]
                    .iter()
                    .map(|&q| match mark[q] {
                        Mark::Done(d) => d + 1,
                        _ => unreachable!("successors are finished first"),
                    })
                    .max()
                    .unwrap_or(0);
                mark[p] = Mark::Done(best);
                stack.pop();
            }
        }
    }
    let m = mark
        .iter()
        .map(|m| match m {
            Mark::Done(d) => *d,
            _ => 0,
        })
        .max()
        .unwrap_or(0);
    Ok(Some(IndexResult::Finite(m)))
}

fn z_indices(s: &Symbol) -> Option<(usize, usize)> {
    let inner = s.name().strip_prefix("a(")?.strip_suffix(')')?;
    let (i, j) = inner.split_once(',')?;
    Some((i.parse().ok()?, j.parse().ok()?))
}

/// Nodes `i` that occur (as `a(i,·)` or `a(·,i)`) in every non-empty word of
/// `L(r)`, for `r` over the alphabet of paths on `n` nodes.
pub fn sidekicks(r: &Regex, n: usize, budget: &Budget) -> Result<BTreeSet<usize>> {
    let sigma = z_alphabet(n);
    if let Some(s) = r.occurrences().into_iter().find(|s| !sigma.contains(s)) {
        return Err(Error::WrongAlphabet(format!("`{s}` is not a(i,j) with i, j < {n}")));
    }
    let a = extended_to_nfa(r, &sigma, budget)?;
    let edges: Vec<(usize, usize)> = sigma.iter().map(|s| z_indices(s).unwrap()).collect();
    let mut out = BTreeSet::new();
    for i in 0..n {
        // non-empty words avoiding i: one step on an allowed symbol, then any path
        let allowed = |s: usize| edges[s].0 != i && edges[s].1 != i;
        let mut seen = vec![false; a.num_states()];
        let mut stack: Vec<usize> = a
            .edges(a.initial())
            .iter()
            .filter(|(s, _)| allowed(*s))
            .map(|&(_, q)| q)
            .collect();
        let mut avoids = false;
        while let Some(q) = stack.pop() {
            if std::mem::replace(&mut seen[q], true) {
                continue;
            }
            if a.is_final(q) {
                avoids = true;
                break;
            }
            stack.extend(a.edges(q).iter().filter(|(s, _)| allowed(*s)).map(|&(_, t)| t));
        }
        if !avoids {
            out.insert(i);
        }
    }
    Ok(out)
}

/// All `t*` subterms, outermost first (pre-order).
pub fn starred_subexpressions<S>(r: &Regex<S>) -> Vec<&Regex<S>> {
    fn go<'a, S>(r: &'a Regex<S>, out: &mut Vec<&'a Regex<S>>) {
        match r {
            Regex::Empty | Regex::Epsilon | Regex::Sym(_) => {}
            Regex::Star(a) => {
                out.push(r);
                go(a, out);
            }
            Regex::Plus(a) | Regex::Negate(a) => go(a, out),
            Regex::Concat(a, b) | Regex::Union(a, b) | Regex::Intersect(a, b) => {
                go(a, out);
                go(b, out);
            }
        }
    }
    let mut out = Vec::new();
    go(r, &mut out);
    out
}
