//! The M family: path words with every other node circled, and its SORE pair.

use super::PathWord;
use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::regex::{symbol_set, Alphabet, Regex, Symbol};

/// Symbols of `Σ_M`. Circled indices are written with a trailing `*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MSymbol {
    /// `a(i*,j)`
    CircledFrom(usize, usize),
    /// `a(i,j*)`
    CircledTo(usize, usize),
    /// `rt(i)`, opening a pair of edges at node `i`.
    Open(usize),
    /// `tr(i)`, closing the word at node `i`.
    Close(usize),
}

impl MSymbol {
    pub fn name(&self) -> String {
        match *self {
            MSymbol::CircledFrom(i, j) => format!("a({i}*,{j})"),
            MSymbol::CircledTo(i, j) => format!("a({i},{j}*)"),
            MSymbol::Open(i) => format!("rt({i})"),
            MSymbol::Close(i) => format!("tr({i})"),
        }
    }
}

pub fn m_symbol(s: MSymbol) -> Symbol {
    Symbol::new(&s.name()).unwrap()
}

/// `2n² + 2n` symbols: for each `(i, j)` the two circled edges, then the
/// open and close markers of each node.
pub fn m_alphabet(n: usize) -> Alphabet {
    let edges = (0..n).flat_map(|i| {
        (0..n).flat_map(move |j| [MSymbol::CircledFrom(i, j), MSymbol::CircledTo(i, j)])
    });
    let markers = (0..n).flat_map(|i| [MSymbol::Open(i), MSymbol::Close(i)]);
    Alphabet::from_names(edges.chain(markers).map(|s| s.name())).unwrap()
}

/// Each edge pair `a(i,j) a(j,k)` becomes `rt(i) a(i,j*) a(j*,k)`.
pub fn rho_hat_encode(w: &PathWord) -> Result<Vec<Symbol>> {
    if w.num_edges() % 2 == 1 {
        return Err(Error::OddLength(w.num_edges()));
    }
    let ix = w.indices();
    let mut out = Vec::with_capacity(3 * ix.len() / 2);
    for pair in ix.windows(3).step_by(2) {
        let (i, j, k) = (pair[0], pair[1], pair[2]);
        out.push(m_symbol(MSymbol::Open(i)));
        out.push(m_symbol(MSymbol::CircledTo(i, j)));
        out.push(m_symbol(MSymbol::CircledFrom(j, k)));
    }
    Ok(out)
}

/// `ρ̂(w)` followed by `tr(end point)`.
pub fn m_member(w: &PathWord) -> Result<Vec<Symbol>> {
    let mut out = rho_hat_encode(w)?;
    out.push(m_symbol(MSymbol::Close(w.end_point())));
    Ok(out)
}

/// Direct DFA with `3n + 2` states: start, after `rt(i)`, after
/// `a(i,j*)`, at node `k`, and done.
pub fn m_dfa(n: usize) -> Result<Dfa> {
    if n == 0 {
        return Err(Error::Range("n must be at least 1".into()));
    }
    let sigma = m_alphabet(n);
    let id = |s: MSymbol| sigma.id_of(&s.name()).unwrap();
    let (opened, circled, node, done) = (1, 1 + n, 1 + 2 * n, 1 + 3 * n);
    let mut d = Dfa::new(sigma.clone(), 3 * n + 2, 0);
    d.set_final(done, true);
    for i in 0..n {
        d.set_transition(0, id(MSymbol::Open(i)), Some(opened + i));
        d.set_transition(node + i, id(MSymbol::Open(i)), Some(opened + i));
        d.set_transition(node + i, id(MSymbol::Close(i)), Some(done));
        for j in 0..n {
            d.set_transition(opened + i, id(MSymbol::CircledTo(i, j)), Some(circled + j));
            d.set_transition(circled + i, id(MSymbol::CircledFrom(i, j)), Some(node + j));
        }
    }
    Ok(d)
}

fn set_of(items: impl IntoIterator<Item = MSymbol>) -> Regex {
    let syms: Vec<Symbol> = items.into_iter().map(m_symbol).collect();
    symbol_set(&syms)
}

/// Two SOREs of size `O(n²)` intersecting to M: `r` fixes the block format
/// and matches circled indices, `s` matches the plain ones.
pub fn m_sore_pair(n: usize) -> (Regex, Regex) {
    assert!(n >= 1, "m_sore_pair needs n ≥ 1");
    let opens = set_of((0..n).map(MSymbol::Open));
    let closes = set_of((0..n).map(MSymbol::Close));
    let circled = Regex::union_of((0..n).map(|i| {
        Regex::concat(
            set_of((0..n).map(|j| MSymbol::CircledTo(j, i))),
            set_of((0..n).map(|j| MSymbol::CircledFrom(i, j))),
        )
    }));
    let r = Regex::concat(Regex::plus(Regex::concat(opens, circled)), closes);

    let s = Regex::star(Regex::union_of((0..n).map(|i| {
        let incoming = set_of((0..n).map(|j| MSymbol::CircledFrom(j, i)));
        let outgoing = set_of((0..n).map(|j| MSymbol::CircledTo(i, j)));
        Regex::concat_of([
            Regex::union(incoming, Regex::Epsilon),
            Regex::union(m_symbol_re(MSymbol::Open(i)), m_symbol_re(MSymbol::Close(i))),
            Regex::union(outgoing, Regex::Epsilon),
        ])
    })));
    (r, s)
}

fn m_symbol_re(s: MSymbol) -> Regex {
    Regex::Sym(m_symbol(s))
}
