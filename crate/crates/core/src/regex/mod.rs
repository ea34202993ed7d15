//! Extended regular expressions over interned symbols.
//!
//! [`Regex`] covers plain expressions (∅, ε, symbols, concatenation, union,
//! Kleene star), the single-occurrence `r+` sugar, and the extended operators
//! intersection and negation. The size measure is the length of the
//! parenthesis-free reverse Polish form.

mod marking;
mod parse;
mod print;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use marking::{glushkov_sets, mark, GlushkovSets, MarkedRegex, MarkedSymbol, Positions};
pub use parse::{parse, parse_infer};
pub use print::{format, write_symbol};

/// An interned alphabet token.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    /// Names must be non-empty and free of whitespace and control characters,
    /// so that they survive the line-oriented file formats.
    pub fn new(name: &str) -> Result<Symbol> {
        if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c.is_control()) {
            return Err(Error::InvalidSymbol(name.to_string()));
        }
        Ok(Symbol(Arc::from(name)))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Insertion-ordered set of symbols. The order drives every canonical
/// output (minimized automata, length-lexicographic enumeration).
#[derive(Clone, Default)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
    index: HashMap<Symbol, usize>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.symbols.iter()).finish()
    }
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_names<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Alphabet> {
        let mut alphabet = Alphabet::new();
        for name in names {
            alphabet.insert(Symbol::new(name.as_ref())?)?;
        }
        Ok(alphabet)
    }

    /// One symbol per character, e.g. `"ab"` is `{a, b}`.
    pub fn from_chars(chars: &str) -> Result<Alphabet> {
        Alphabet::from_names(chars.chars().map(|c| c.to_string()))
    }

    /// Reads the alphabet file format: one symbol name per line, blank lines
    /// skipped, and lines starting with `#` treated as comments unless the
    /// whole line is the single symbol `#`.
    pub fn parse_file(text: &str) -> Result<Alphabet> {
        let names = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && (*l == "#" || !l.starts_with('#')));
        Alphabet::from_names(names)
    }

    pub fn insert(&mut self, symbol: Symbol) -> Result<usize> {
        if self.index.contains_key(&symbol) {
            return Err(Error::DuplicateSymbol(symbol.name().to_string()));
        }
        let id = self.symbols.len();
        self.index.insert(symbol.clone(), id);
        self.symbols.push(symbol);
        Ok(id)
    }

    /// Inserts unless already present; returns the id either way.
    pub fn intern(&mut self, symbol: Symbol) -> usize {
        match self.index.get(&symbol) {
            Some(&id) => id,
            None => self.insert(symbol).expect("fresh symbol"),
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn iter(&self) -> impl Iterator<Item = &Symbol> {
        self.symbols.iter()
    }

    pub fn id(&self, symbol: &Symbol) -> Option<usize> {
        self.index.get(symbol).copied()
    }

    pub fn id_of(&self, name: &str) -> Option<usize> {
        Symbol::new(name).ok().and_then(|s| self.id(&s))
    }

    pub fn get(&self, id: usize) -> &Symbol {
        &self.symbols[id]
    }

    /// Looks a symbol up by name.
    pub fn symbol(&self, name: &str) -> Result<Symbol> {
        self.id_of(name)
            .map(|id| self.symbols[id].clone())
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn contains(&self, symbol: &Symbol) -> bool {
        self.index.contains_key(symbol)
    }

    /// Same symbols, possibly in a different order.
    pub fn same_set(&self, other: &Alphabet) -> bool {
        self.len() == other.len() && other.iter().all(|s| self.contains(s))
    }

    /// Translates a word of names into symbol ids.
    pub fn ids(&self, word: &[Symbol]) -> Result<Vec<usize>> {
        word.iter()
            .map(|s| self.id(s).ok_or_else(|| Error::UnknownSymbol(s.name().to_string())))
            .collect()
    }

    /// Splits a textual word into symbols. Words containing whitespace are
    /// split on it; otherwise the longest alphabet symbol matching at each
    /// position is taken.
    pub fn tokenize(&self, text: &str) -> Result<Vec<Symbol>> {
        if text.chars().any(char::is_whitespace) {
            return text.split_whitespace().map(|t| self.symbol(t)).collect();
        }
        let mut out = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let best = self
                .symbols
                .iter()
                .filter(|s| rest.starts_with(s.name()))
                .max_by_key(|s| s.name().len())
                .ok_or_else(|| Error::UnknownSymbol(rest.to_string()))?;
            rest = &rest[best.name().len()..];
            out.push(best.clone());
        }
        Ok(out)
    }

    /// Renders a word of symbol ids; single-character alphabets are
    /// concatenated, others space-separated.
    pub fn render(&self, word: &[usize]) -> String {
        if self.symbols.iter().all(|s| s.name().chars().count() == 1) {
            word.iter().map(|&id| self.symbols[id].name()).collect()
        } else {
            word.iter()
                .map(|&id| self.symbols[id].name())
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

/// Extended regular expression AST, generic over the symbol type so that
/// marked expressions share the same representation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Regex<S = Symbol> {
    Empty,
    Epsilon,
    Sym(S),
    Concat(Box<Regex<S>>, Box<Regex<S>>),
    Union(Box<Regex<S>>, Box<Regex<S>>),
    Star(Box<Regex<S>>),
    /// `r+`, meaning `rr*`.
    Plus(Box<Regex<S>>),
    Intersect(Box<Regex<S>>, Box<Regex<S>>),
    Negate(Box<Regex<S>>),
}

impl<S> Regex<S> {
    pub fn sym(s: S) -> Self {
        Regex::Sym(s)
    }

    pub fn concat(a: Self, b: Self) -> Self {
        Regex::Concat(Box::new(a), Box::new(b))
    }

    pub fn union(a: Self, b: Self) -> Self {
        Regex::Union(Box::new(a), Box::new(b))
    }

    pub fn star(a: Self) -> Self {
        Regex::Star(Box::new(a))
    }

    pub fn plus(a: Self) -> Self {
        Regex::Plus(Box::new(a))
    }

    pub fn intersect(a: Self, b: Self) -> Self {
        Regex::Intersect(Box::new(a), Box::new(b))
    }

    pub fn negate(a: Self) -> Self {
        Regex::Negate(Box::new(a))
    }

    /// Left-associated union; `∅` when empty.
    pub fn union_of(items: impl IntoIterator<Item = Self>) -> Self {
        items
            .into_iter()
            .reduce(Regex::union)
            .unwrap_or(Regex::Empty)
    }

    /// Left-associated concatenation; `ε` when empty.
    pub fn concat_of(items: impl IntoIterator<Item = Self>) -> Self {
        items
            .into_iter()
            .reduce(Regex::concat)
            .unwrap_or(Regex::Epsilon)
    }

    /// Length of the parenthesis-free reverse Polish form.
    pub fn size(&self) -> usize {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Sym(_) => 1,
            Regex::Star(r) | Regex::Plus(r) | Regex::Negate(r) => r.size() + 1,
            Regex::Concat(a, b) | Regex::Union(a, b) | Regex::Intersect(a, b) => {
                a.size() + b.size() + 1
            }
        }
    }

    /// No negation or intersection anywhere.
    pub fn is_plain(&self) -> bool {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Sym(_) => true,
            Regex::Star(r) | Regex::Plus(r) => r.is_plain(),
            Regex::Concat(a, b) | Regex::Union(a, b) => a.is_plain() && b.is_plain(),
            Regex::Intersect(..) | Regex::Negate(_) => false,
        }
    }

    pub fn uses_plus(&self) -> bool {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Sym(_) => false,
            Regex::Plus(_) => true,
            Regex::Star(r) | Regex::Negate(r) => r.uses_plus(),
            Regex::Concat(a, b) | Regex::Union(a, b) | Regex::Intersect(a, b) => {
                a.uses_plus() || b.uses_plus()
            }
        }
    }

    /// Symbol occurrences in left-to-right order.
    pub fn occurrences(&self) -> Vec<&S> {
        let mut out = Vec::new();
        self.collect_occurrences(&mut out);
        out
    }

    fn collect_occurrences<'a>(&'a self, out: &mut Vec<&'a S>) {
        match self {
            Regex::Empty | Regex::Epsilon => {}
            Regex::Sym(s) => out.push(s),
            Regex::Star(r) | Regex::Plus(r) | Regex::Negate(r) => r.collect_occurrences(out),
            Regex::Concat(a, b) | Regex::Union(a, b) | Regex::Intersect(a, b) => {
                a.collect_occurrences(out);
                b.collect_occurrences(out);
            }
        }
    }

    /// Whether ε belongs to the language. Exact for every operator.
    pub fn nullable(&self) -> bool {
        match self {
            Regex::Empty | Regex::Sym(_) => false,
            Regex::Epsilon | Regex::Star(_) => true,
            Regex::Plus(r) => r.nullable(),
            Regex::Negate(r) => !r.nullable(),
            Regex::Concat(a, b) | Regex::Intersect(a, b) => a.nullable() && b.nullable(),
            Regex::Union(a, b) => a.nullable() || b.nullable(),
        }
    }

    pub fn map_symbols<T>(&self, f: &mut impl FnMut(&S) -> T) -> Regex<T> {
        match self {
            Regex::Empty => Regex::Empty,
            Regex::Epsilon => Regex::Epsilon,
            Regex::Sym(s) => Regex::Sym(f(s)),
            Regex::Concat(a, b) => Regex::concat(a.map_symbols(f), b.map_symbols(f)),
            Regex::Union(a, b) => Regex::union(a.map_symbols(f), b.map_symbols(f)),
            Regex::Intersect(a, b) => Regex::intersect(a.map_symbols(f), b.map_symbols(f)),
            Regex::Star(r) => Regex::star(r.map_symbols(f)),
            Regex::Plus(r) => Regex::plus(r.map_symbols(f)),
            Regex::Negate(r) => Regex::negate(r.map_symbols(f)),
        }
    }
}

impl<S: Clone> Regex<S> {
    /// Removes `∅` subterms using `∅·r = r·∅ = ∅`, `∅+r = r+∅ = r`,
    /// `∅* = ε`, `∅+ = ∅` and `∅∩r = ∅`. The result denotes the same language
    /// and is either `∅` itself or contains no `∅` outside negations.
    pub fn prune_empty(&self) -> Regex<S> {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Sym(_) => self.clone(),
            Regex::Concat(a, b) | Regex::Intersect(a, b) => {
                let (a, b) = (a.prune_empty(), b.prune_empty());
                if matches!(a, Regex::Empty) || matches!(b, Regex::Empty) {
                    Regex::Empty
                } else if matches!(self, Regex::Concat(..)) {
                    Regex::concat(a, b)
                } else {
                    Regex::intersect(a, b)
                }
            }
            Regex::Union(a, b) => match (a.prune_empty(), b.prune_empty()) {
                (Regex::Empty, r) | (r, Regex::Empty) => r,
                (a, b) => Regex::union(a, b),
            },
            Regex::Star(r) => match r.prune_empty() {
                Regex::Empty => Regex::Epsilon,
                r => Regex::star(r),
            },
            Regex::Plus(r) => match r.prune_empty() {
                Regex::Empty => Regex::Empty,
                r => Regex::plus(r),
            },
            Regex::Negate(r) => Regex::negate(r.prune_empty()),
        }
    }
}

/// `L(r)^0 ∪ … ∪ L(r)^n`, written `(ε + r(ε + r(⋯(ε + r))))` with nesting
/// depth `n − 1`. `n = 0` gives `ε`.
pub fn repeat_upto<S: Clone>(r: &Regex<S>, n: usize) -> Regex<S> {
    if n == 0 {
        return Regex::Epsilon;
    }
    let mut acc = Regex::union(Regex::Epsilon, r.clone());
    for _ in 1..n {
        acc = Regex::union(Regex::Epsilon, Regex::concat(r.clone(), acc));
    }
    acc
}

/// `r^k` as a left-associated concatenation; `ε` for `k = 0`.
pub fn power<S: Clone>(r: &Regex<S>, k: usize) -> Regex<S> {
    Regex::concat_of(std::iter::repeat_n(r.clone(), k))
}

/// The union `a₁ + ⋯ + aₙ` of a symbol set, in the given order; `∅` when empty.
pub fn symbol_set<'a>(symbols: impl IntoIterator<Item = &'a Symbol>) -> Regex {
    Regex::union_of(symbols.into_iter().cloned().map(Regex::Sym))
}

/// `Σ` as a union over the whole alphabet.
pub fn any_symbol(alphabet: &Alphabet) -> Regex {
    symbol_set(alphabet.iter())
}

/// `Σ*`.
pub fn universe(alphabet: &Alphabet) -> Regex {
    Regex::star(any_symbol(alphabet))
}
