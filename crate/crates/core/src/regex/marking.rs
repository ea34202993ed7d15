//! Marking (subscripting every symbol occurrence) and the Glushkov position
//! sets: nullability, first, last and follow.

use std::collections::BTreeSet;
use std::fmt;

use super::{Regex, Symbol};
use crate::error::{Error, Result};

/// A symbol occurrence: the base symbol plus its 1-based left-to-right
/// occurrence index in the originating expression.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MarkedSymbol {
    pub base: Symbol,
    pub occurrence: usize,
}

impl MarkedSymbol {
    pub fn new(base: Symbol, occurrence: usize) -> Self {
        MarkedSymbol { base, occurrence }
    }

    /// Position index (0-based) in [`Positions`].
    pub fn position(&self) -> usize {
        self.occurrence - 1
    }
}

impl fmt::Display for MarkedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.base, self.occurrence)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedRegex {
    pub root: Regex<MarkedSymbol>,
    pub origin: Regex,
}

impl MarkedRegex {
    /// Drops all subscripts.
    pub fn unmark(&self) -> Regex {
        self.root.map_symbols(&mut |m| m.base.clone())
    }

    /// `sym(r♭)` in occurrence order.
    pub fn symbols(&self) -> Vec<MarkedSymbol> {
        self.root.occurrences().into_iter().cloned().collect()
    }
}

/// Subscripts every symbol occurrence 1..k from left to right.
pub fn mark(r: &Regex) -> Result<MarkedRegex> {
    if !r.is_plain() {
        return Err(Error::ExtendedOperator("mark"));
    }
    let mut next = 0;
    let root = r.map_symbols(&mut |s| {
        next += 1;
        MarkedSymbol::new(s.clone(), next)
    });
    Ok(MarkedRegex {
        root,
        origin: r.clone(),
    })
}

/// Position sets of a plain expression, indexed by 0-based occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positions<S = Symbol> {
    /// Base symbol of each position.
    pub symbols: Vec<S>,
    pub nullable: bool,
    pub first: BTreeSet<usize>,
    pub last: BTreeSet<usize>,
    pub follow: Vec<BTreeSet<usize>>,
}

impl<S: Clone> Positions<S> {
    /// Structural single-pass computation; `r+` contributes like `rr*`.
    pub fn of(r: &Regex<S>) -> Result<Positions<S>> {
        if !r.is_plain() {
            return Err(Error::ExtendedOperator("position sets"));
        }
        let mut symbols = Vec::new();
        let mut follow = Vec::new();
        let (nullable, first, last) = walk(r, &mut symbols, &mut follow);
        Ok(Positions {
            symbols,
            nullable,
            first: first.into_iter().collect(),
            last: last.into_iter().collect(),
            follow,
        })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Positions lying on some accepting path of the position automaton,
    /// i.e. occurring in at least one word of the language.
    pub fn useful(&self) -> Vec<bool> {
        let k = self.len();
        let mut reach = vec![false; k];
        let mut stack: Vec<usize> = self.first.iter().copied().collect();
        while let Some(p) = stack.pop() {
            if !std::mem::replace(&mut reach[p], true) {
                stack.extend(self.follow[p].iter().copied());
            }
        }
        let mut preds = vec![Vec::new(); k];
        for (p, succ) in self.follow.iter().enumerate() {
            for &q in succ {
                preds[q].push(p);
            }
        }
        let mut coreach = vec![false; k];
        let mut stack: Vec<usize> = self.last.iter().copied().collect();
        while let Some(p) = stack.pop() {
            if !std::mem::replace(&mut coreach[p], true) {
                stack.extend(preds[p].iter().copied());
            }
        }
        (0..k).map(|p| reach[p] && coreach[p]).collect()
    }

    /// The same sets restricted to useful positions. For expressions without
    /// `∅` nothing changes; otherwise the result describes exactly the
    /// language of the expression.
    pub fn trimmed(&self) -> Positions<S> {
        let useful = self.useful();
        let keep = |set: &BTreeSet<usize>| -> BTreeSet<usize> {
            set.iter().copied().filter(|&p| useful[p]).collect()
        };
        Positions {
            symbols: self.symbols.clone(),
            nullable: self.nullable,
            first: keep(&self.first),
            last: keep(&self.last),
            follow: self
                .follow
                .iter()
                .enumerate()
                .map(|(p, f)| if useful[p] { keep(f) } else { BTreeSet::new() })
                .collect(),
        }
    }
}

fn walk<S: Clone>(
    r: &Regex<S>,
    symbols: &mut Vec<S>,
    follow: &mut Vec<BTreeSet<usize>>,
) -> (bool, Vec<usize>, Vec<usize>) {
    match r {
        Regex::Empty => (false, vec![], vec![]),
        Regex::Epsilon => (true, vec![], vec![]),
        Regex::Sym(s) => {
            let p = symbols.len();
            symbols.push(s.clone());
            follow.push(BTreeSet::new());
            (false, vec![p], vec![p])
        }
        Regex::Union(a, b) => {
            let (na, mut fa, mut la) = walk(a, symbols, follow);
            let (nb, fb, lb) = walk(b, symbols, follow);
            fa.extend(fb);
            la.extend(lb);
            (na || nb, fa, la)
        }
        Regex::Concat(a, b) => {
            let (na, mut fa, la) = walk(a, symbols, follow);
            let (nb, fb, mut lb) = walk(b, symbols, follow);
            for &x in &la {
                follow[x].extend(fb.iter().copied());
            }
            if na {
                fa.extend(fb.iter().copied());
            }
            if nb {
                lb.extend(la);
            }
            (na && nb, fa, lb)
        }
        Regex::Star(a) | Regex::Plus(a) => {
            let (na, fa, la) = walk(a, symbols, follow);
            for &x in &la {
                follow[x].extend(fa.iter().copied());
            }
            (matches!(r, Regex::Star(_)) || na, fa, la)
        }
        Regex::Intersect(..) | Regex::Negate(_) => unreachable!("checked by Positions::of"),
    }
}

/// Glushkov sets of a marked expression, as sets of marked symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlushkovSets {
    pub nullable: bool,
    pub first: BTreeSet<MarkedSymbol>,
    pub last: BTreeSet<MarkedSymbol>,
    pub follow: BTreeSet<(MarkedSymbol, MarkedSymbol)>,
}

pub fn glushkov_sets(m: &MarkedRegex) -> GlushkovSets {
    let pos = Positions::of(&m.root).expect("marked expressions are plain");
    let at = |p: usize| pos.symbols[p].clone();
    GlushkovSets {
        nullable: pos.nullable,
        first: pos.first.iter().map(|&p| at(p)).collect(),
        last: pos.last.iter().map(|&p| at(p)).collect(),
        follow: pos
            .follow
            .iter()
            .enumerate()
            .flat_map(|(p, succ)| succ.iter().map(move |&q| (p, q)))
            .map(|(p, q)| (at(p), at(q)))
            .collect(),
    }
}
