//! Polynomial complement of one-unambiguous expressions.

use std::collections::BTreeSet;

use super::{is_one_unambiguous, live_positions, marked_at};
use crate::error::{Error, Result};
use crate::regex::{symbol_set, universe, Alphabet, MarkedSymbol, Positions, Regex, Symbol};

fn check_alphabet(r: &Regex, alphabet: &Alphabet) -> Result<()> {
    match r.occurrences().into_iter().find(|s| !alphabet.contains(s)) {
        Some(s) => Err(Error::UnknownSymbol(s.name().to_string())),
        None => Ok(()),
    }
}

fn require_unambiguous(r: &Regex) -> Result<()> {
    if is_one_unambiguous(r)?.is_one_unambiguous {
        Ok(())
    } else {
        Err(Error::NotOneUnambiguous)
    }
}

fn position_of(pos: &Positions, x: &MarkedSymbol) -> Result<usize> {
    let p = x.occurrence.wrapping_sub(1);
    if x.occurrence == 0 || p >= pos.len() || pos.symbols[p] != x.base {
        return Err(Error::UnknownMarkedSymbol(x.to_string()));
    }
    Ok(p)
}

fn missing<'a>(alphabet: &Alphabet, present: impl Iterator<Item = &'a Symbol>) -> Vec<Symbol> {
    let present: BTreeSet<&Symbol> = present.collect();
    alphabet.iter().filter(|s| !present.contains(s)).cloned().collect()
}

fn nfirst_of(pos: &Positions, alphabet: &Alphabet) -> Vec<Symbol> {
    missing(alphabet, pos.first.iter().map(|&p| &pos.symbols[p]))
}

fn nfollow_of(pos: &Positions, p: usize, alphabet: &Alphabet) -> Vec<Symbol> {
    missing(alphabet, pos.follow[p].iter().map(|&q| &pos.symbols[q]))
}

/// Symbols of `alphabet` that start no word of `L(r)`, in alphabet order.
pub fn nfirst(r: &Regex, alphabet: &Alphabet) -> Result<Vec<Symbol>> {
    require_unambiguous(r)?;
    check_alphabet(r, alphabet)?;
    Ok(nfirst_of(&live_positions(r)?, alphabet))
}

/// Symbols that never directly follow occurrence `x` in a marked word.
pub fn nfollow(r: &Regex, x: &MarkedSymbol, alphabet: &Alphabet) -> Result<Vec<Symbol>> {
    check_alphabet(r, alphabet)?;
    let pos = live_positions(r)?;
    let p = position_of(&pos, x)?;
    Ok(nfollow_of(&pos, p, alphabet))
}

/// Occurrences that end some marked word.
pub fn last_marked(r: &Regex) -> Result<BTreeSet<MarkedSymbol>> {
    require_unambiguous(r)?;
    let pos = live_positions(r)?;
    Ok(pos.last.iter().map(|&p| marked_at(&pos, p)).collect())
}

fn init_of(nullable: bool, nfirst: &[Symbol], alphabet: &Alphabet) -> Regex {
    let tail = Regex::concat(symbol_set(nfirst), universe(alphabet));
    if nullable {
        tail
    } else {
        Regex::union(Regex::Epsilon, tail)
    }
}

/// Words outside `L(r)` that already fail at the first symbol: `nfirst·Σ*`,
/// plus `ε` when `r` is not nullable.
pub fn init_expr(r: &Regex, alphabet: &Alphabet) -> Result<Regex> {
    check_alphabet(r, alphabet)?;
    let pos = live_positions(r)?;
    Ok(init_of(pos.nullable, &nfirst_of(&pos, alphabet), alphabet))
}

/// Unmarked expression for the prefixes of marked words that end at `x`.
/// `∅` when `x` occurs in no word.
pub fn prefix_to(r: &Regex, x: &MarkedSymbol) -> Result<Regex> {
    if !r.is_plain() {
        return Err(Error::ExtendedOperator("prefix_to"));
    }
    let pos = live_positions(r)?;
    let p = position_of(&pos, x)?;
    if !pos.useful()[p] {
        return Ok(Regex::Empty);
    }
    Ok(prefix_at(r, p))
}

fn prefix_at(r: &Regex, p: usize) -> Regex {
    match r {
        Regex::Sym(_) => r.clone(),
        Regex::Concat(a, b) | Regex::Union(a, b) => {
            let left = a.occurrences().len();
            match (r, p < left) {
                (_, true) => prefix_at(a, p),
                (Regex::Concat(..), false) => Regex::concat((**a).clone(), prefix_at(b, p - left)),
                _ => prefix_at(b, p - left),
            }
        }
        Regex::Star(a) | Regex::Plus(a) => Regex::concat(Regex::star((**a).clone()), prefix_at(a, p)),
        Regex::Empty | Regex::Epsilon | Regex::Intersect(..) | Regex::Negate(_) => {
            unreachable!("position lies in a plain subexpression")
        }
    }
}

/// `Σ* \ L(r)` for one-unambiguous `r`, without negation or intersection:
/// the words that fail at the start, plus for each occurrence `x` the
/// prefixes ending at `x` that either stop there (when `x` is not last) or
/// continue with a symbol that cannot follow `x`.
pub fn complement_unambiguous(r: &Regex, alphabet: &Alphabet) -> Result<Regex> {
    if !r.is_plain() {
        return Err(Error::ExtendedOperator("complement_unambiguous"));
    }
    check_alphabet(r, alphabet)?;
    let r = r.prune_empty();
    require_unambiguous(&r)?;
    let pos = live_positions(&r)?;
    let sigma_star = universe(alphabet);
    let mut not_last = Vec::new();
    let mut last = Vec::new();
    for p in 0..pos.len() {
        let r_x = prefix_at(&r, p);
        let escape = Regex::concat(symbol_set(&nfollow_of(&pos, p, alphabet)), sigma_star.clone());
        if pos.last.contains(&p) {
            last.push(Regex::concat(r_x, escape));
        } else {
            not_last.push(Regex::concat(r_x, Regex::union(Regex::Epsilon, escape)));
        }
    }
    let init = init_of(pos.nullable, &nfirst_of(&pos, alphabet), alphabet);
    let all = std::iter::once(init).chain(not_last).chain(last);
    Ok(Regex::union_of(all).prune_empty())
}
