//! Finite automata and the conversions between them and regular expressions.
//!
//! NFAs carry no ε-transitions. DFAs may be partial: a missing transition
//! rejects. Both are bound to an [`Alphabet`]; symbols are referred to by
//! their alphabet index.

mod eliminate;
mod extended;
mod glushkov;
mod io;
mod minimize;
mod subset;

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::regex::{Alphabet, Symbol};

pub use eliminate::{eliminate_states, eliminate_states_with, Eliminated};
pub use extended::{concat_nfa, extended_to_nfa, plus_nfa, star_nfa, union_nfa};
pub use glushkov::glushkov;
pub use io::HEADER;
pub use minimize::{distinguishing_word, equivalent, minimize};
pub use subset::{complement_dfa, determinize, determinize_collapsed, product, universal_states};

pub type StateId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    initial: StateId,
    finals: Vec<bool>,
    /// Outgoing edges per state as `(symbol, target)`, sorted and deduplicated.
    edges: Vec<Vec<(usize, StateId)>>,
}

impl Nfa {
    /// `states` states with no transitions and no final states.
    pub fn new(alphabet: Alphabet, states: usize, initial: StateId) -> Nfa {
        assert!(initial < states.max(1), "initial state out of range");
        let states = states.max(1);
        Nfa {
            alphabet,
            initial,
            finals: vec![false; states],
            edges: vec![Vec::new(); states],
        }
    }

    /// Automaton for the empty language.
    pub fn empty(alphabet: Alphabet) -> Nfa {
        Nfa::new(alphabet, 1, 0)
    }

    /// Automaton for `Σ*`.
    pub fn universal(alphabet: Alphabet) -> Nfa {
        let mut a = Nfa::new(alphabet, 1, 0);
        a.set_final(0, true);
        for s in 0..a.alphabet.len() {
            a.add_transition(0, s, 0);
        }
        a
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn num_states(&self) -> usize {
        self.edges.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// `|Q| + |δ|`.
    pub fn size(&self) -> usize {
        self.num_states() + self.num_transitions()
    }

    pub fn add_state(&mut self) -> StateId {
        self.edges.push(Vec::new());
        self.finals.push(false);
        self.edges.len() - 1
    }

    pub fn set_initial(&mut self, q: StateId) {
        assert!(q < self.num_states());
        self.initial = q;
    }

    pub fn set_final(&mut self, q: StateId, is_final: bool) {
        self.finals[q] = is_final;
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(q, _)| q)
    }

    pub fn add_transition(&mut self, from: StateId, symbol: usize, to: StateId) {
        assert!(symbol < self.alphabet.len(), "symbol id out of range");
        assert!(to < self.num_states(), "target state out of range");
        let edges = &mut self.edges[from];
        if let Err(at) = edges.binary_search(&(symbol, to)) {
            edges.insert(at, (symbol, to));
        }
    }

    /// All transitions `(p, a, q)`, sorted.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, usize, StateId)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .flat_map(|(p, e)| e.iter().map(move |&(a, q)| (p, a, q)))
    }

    /// Outgoing `(symbol, target)` pairs of `q`, sorted by symbol.
    pub fn edges(&self, q: StateId) -> &[(usize, StateId)] {
        &self.edges[q]
    }

    pub fn successors(&self, q: StateId, symbol: usize) -> impl Iterator<Item = StateId> + '_ {
        let e = &self.edges[q];
        let lo = e.partition_point(|&(a, _)| a < symbol);
        e[lo..]
            .iter()
            .take_while(move |&&(a, _)| a == symbol)
            .map(|&(_, t)| t)
    }

    pub fn is_deterministic(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.windows(2).all(|w| w[0].0 != w[1].0))
    }

    pub fn accepts(&self, word: &[Symbol]) -> Result<bool> {
        Ok(self.accepts_ids(&self.alphabet.ids(word)?))
    }

    pub fn accepts_ids(&self, word: &[usize]) -> bool {
        let mut current = vec![false; self.num_states()];
        current[self.initial] = true;
        for &a in word {
            let mut next = vec![false; self.num_states()];
            let mut any = false;
            for (q, _) in current.iter().enumerate().filter(|(_, &on)| on) {
                for t in self.successors(q, a) {
                    next[t] = true;
                    any = true;
                }
            }
            if !any {
                return false;
            }
            current = next;
        }
        current.iter().zip(&self.finals).any(|(&on, &f)| on && f)
    }

    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        seen[self.initial] = true;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for &(_, t) in &self.edges[q] {
                if !std::mem::replace(&mut seen[t], true) {
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// States from which a final state is reachable.
    pub fn coreachable(&self) -> Vec<bool> {
        let mut preds = vec![Vec::new(); self.num_states()];
        for (p, _, q) in self.transitions() {
            preds[q].push(p);
        }
        let mut seen = self.finals.clone();
        let mut stack: Vec<StateId> = self.finals().collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !std::mem::replace(&mut seen[p], true) {
                    stack.push(p);
                }
            }
        }
        seen
    }

    pub fn is_empty_language(&self) -> bool {
        !self.coreachable()[self.initial]
    }

    /// Keeps the initial state and every state that is both reachable and
    /// co-reachable; ids are renumbered in increasing order.
    pub fn trim(&self) -> Nfa {
        let reach = self.reachable();
        let co = self.coreachable();
        let keep: Vec<bool> = (0..self.num_states())
            .map(|q| q == self.initial || (reach[q] && co[q]))
            .collect();
        self.restrict(&keep)
    }

    fn restrict(&self, keep: &[bool]) -> Nfa {
        let mut map = vec![usize::MAX; self.num_states()];
        let mut n = 0;
        for q in 0..self.num_states() {
            if keep[q] {
                map[q] = n;
                n += 1;
            }
        }
        let mut out = Nfa::new(self.alphabet.clone(), n, map[self.initial]);
        for q in (0..self.num_states()).filter(|&q| keep[q]) {
            out.finals[map[q]] = self.finals[q];
            out.edges[map[q]] = self.edges[q]
                .iter()
                .filter(|&&(_, t)| keep[t])
                .map(|&(a, t)| (a, map[t]))
                .collect();
        }
        out
    }

    /// Re-expresses the automaton over `target`, which must contain every
    /// symbol of the current alphabet.
    pub fn with_alphabet(&self, target: &Alphabet) -> Result<Nfa> {
        if target == &self.alphabet {
            return Ok(self.clone());
        }
        let map: Vec<usize> = self
            .alphabet
            .iter()
            .map(|s| target.id(s).ok_or(Error::AlphabetMismatch))
            .collect::<Result<_>>()?;
        let mut out = Nfa::new(target.clone(), self.num_states(), self.initial);
        out.finals = self.finals.clone();
        for (p, a, q) in self.transitions() {
            out.add_transition(p, map[a], q);
        }
        Ok(out)
    }

    /// Copies all states of `other` (same alphabet) into `self`, returning the
    /// id offset of the copy.
    pub(crate) fn absorb(&mut self, other: &Nfa) -> usize {
        debug_assert_eq!(self.alphabet, other.alphabet);
        let offset = self.num_states();
        for q in 0..other.num_states() {
            self.finals.push(other.finals[q]);
            self.edges
                .push(other.edges[q].iter().map(|&(a, t)| (a, t + offset)).collect());
        }
        offset
    }
}

/// Deterministic automaton with a possibly partial transition function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: StateId,
    finals: Vec<bool>,
    delta: Vec<Vec<Option<StateId>>>,
}

impl Dfa {
    pub fn new(alphabet: Alphabet, states: usize, initial: StateId) -> Dfa {
        let states = states.max(1);
        assert!(initial < states);
        let k = alphabet.len();
        Dfa {
            alphabet,
            initial,
            finals: vec![false; states],
            delta: vec![vec![None; k]; states],
        }
    }

    /// Builds a DFA by exploring `step` from `start`; states are numbered in
    /// breadth-first order, symbols tried in alphabet order.
    pub fn explore<S, F, A>(alphabet: Alphabet, start: S, mut step: F, accepting: A) -> Dfa
    where
        S: Clone + Eq + std::hash::Hash,
        F: FnMut(&S, usize) -> Option<S>,
        A: Fn(&S) -> bool,
    {
        let k = alphabet.len();
        let mut ids = std::collections::HashMap::new();
        let mut states = vec![start.clone()];
        ids.insert(start, 0);
        let mut delta: Vec<Vec<Option<StateId>>> = Vec::new();
        let mut i = 0;
        while i < states.len() {
            let mut row = vec![None; k];
            for (a, slot) in row.iter_mut().enumerate() {
                if let Some(next) = step(&states[i], a) {
                    let id = *ids.entry(next.clone()).or_insert_with(|| {
                        states.push(next);
                        states.len() - 1
                    });
                    *slot = Some(id);
                }
            }
            delta.push(row);
            i += 1;
        }
        Dfa {
            alphabet,
            initial: 0,
            finals: states.iter().map(accepting).collect(),
            delta,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn num_states(&self) -> usize {
        self.delta.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.delta.iter().flatten().filter(|t| t.is_some()).count()
    }

    pub fn size(&self) -> usize {
        self.num_states() + self.num_transitions()
    }

    pub fn add_state(&mut self) -> StateId {
        self.delta.push(vec![None; self.alphabet.len()]);
        self.finals.push(false);
        self.delta.len() - 1
    }

    pub fn set_final(&mut self, q: StateId, is_final: bool) {
        self.finals[q] = is_final;
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn set_transition(&mut self, from: StateId, symbol: usize, to: Option<StateId>) {
        assert!(to.is_none_or(|t| t < self.num_states()));
        self.delta[from][symbol] = to;
    }

    pub fn step(&self, q: StateId, symbol: usize) -> Option<StateId> {
        self.delta[q][symbol]
    }

    pub fn is_total(&self) -> bool {
        self.delta.iter().flatten().all(Option::is_some)
    }

    pub fn run(&self, word: &[usize]) -> Option<StateId> {
        word.iter()
            .try_fold(self.initial, |q, &a| self.delta[q][a])
    }

    pub fn accepts_ids(&self, word: &[usize]) -> bool {
        self.run(word).is_some_and(|q| self.finals[q])
    }

    pub fn accepts(&self, word: &[Symbol]) -> Result<bool> {
        Ok(self.accepts_ids(&self.alphabet.ids(word)?))
    }

    /// Adds a rejecting sink if any transition is missing.
    pub fn totalize(&self) -> Dfa {
        if self.is_total() {
            return self.clone();
        }
        let mut out = self.clone();
        let sink = out.add_state();
        for row in &mut out.delta {
            for t in row.iter_mut() {
                t.get_or_insert(sink);
            }
        }
        out
    }

    pub fn to_nfa(&self) -> Nfa {
        let mut a = Nfa::new(self.alphabet.clone(), self.num_states(), self.initial);
        a.finals = self.finals.clone();
        for (p, row) in self.delta.iter().enumerate() {
            a.edges[p] = row
                .iter()
                .enumerate()
                .filter_map(|(s, t)| t.map(|t| (s, t)))
                .collect();
        }
        a
    }

    /// Succeeds when every (state, symbol) pair has at most one transition.
    pub fn from_nfa(a: &Nfa) -> Result<Dfa> {
        if !a.is_deterministic() {
            return Err(Error::NotDeterministic);
        }
        let mut d = Dfa::new(a.alphabet.clone(), a.num_states(), a.initial);
        d.finals = a.finals.clone();
        for (p, s, q) in a.transitions() {
            d.delta[p][s] = Some(q);
        }
        Ok(d)
    }

    pub fn with_alphabet(&self, target: &Alphabet) -> Result<Dfa> {
        Dfa::from_nfa(&self.to_nfa().with_alphabet(target)?)
    }
}

impl From<&Dfa> for Nfa {
    fn from(d: &Dfa) -> Nfa {
        d.to_nfa()
    }
}
