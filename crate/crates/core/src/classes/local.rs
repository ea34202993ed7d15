//! Local languages of SOREs and their linear-size intersection.

use std::collections::BTreeSet;

use super::{is_sore, live_positions};
use crate::automata::{eliminate_states, Dfa};
use crate::error::{Error, Result};
use crate::regex::{format, universe, Alphabet, Regex, Symbol};

/// First, last and follow sets of a SORE on plain symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalProfile {
    pub nullable: bool,
    pub first: BTreeSet<Symbol>,
    pub last: BTreeSet<Symbol>,
    pub follow: BTreeSet<(Symbol, Symbol)>,
}

impl LocalProfile {
    /// Component-wise intersection.
    pub fn intersect(&self, other: &LocalProfile) -> LocalProfile {
        LocalProfile {
            nullable: self.nullable && other.nullable,
            first: &self.first & &other.first,
            last: &self.last & &other.last,
            follow: &self.follow & &other.follow,
        }
    }
}

pub fn local_profile(r: &Regex) -> Result<LocalProfile> {
    if !is_sore(r) {
        return Err(Error::NotSore(format(r)));
    }
    let pos = live_positions(r)?;
    let sym = |p: &usize| pos.symbols[*p].clone();
    Ok(LocalProfile {
        nullable: pos.nullable,
        first: pos.first.iter().map(sym).collect(),
        last: pos.last.iter().map(sym).collect(),
        follow: pos
            .follow
            .iter()
            .enumerate()
            .flat_map(|(p, f)| f.iter().map(move |q| (p, *q)))
            .map(|(p, q)| (sym(&p), sym(&q)))
            .collect(),
    })
}

/// DFA of the local language: state 0 is the start, state `i + 1` means
/// "last symbol read was the `i`-th symbol of `alphabet`".
pub fn local_dfa(profile: &LocalProfile, alphabet: &Alphabet) -> Result<Dfa> {
    let id = |s: &Symbol| alphabet.id(s).ok_or_else(|| Error::UnknownSymbol(s.name().to_string()));
    let mut d = Dfa::new(alphabet.clone(), alphabet.len() + 1, 0);
    d.set_final(0, profile.nullable);
    for s in &profile.first {
        let i = id(s)?;
        d.set_transition(0, i, Some(i + 1));
    }
    for s in &profile.last {
        d.set_final(id(s)? + 1, true);
    }
    for (a, b) in &profile.follow {
        d.set_transition(id(a)? + 1, id(b)?, Some(id(b)? + 1));
    }
    Ok(d)
}

/// The local DFA of the intersected profiles; it has `|Σ| + 1` states.
pub fn intersect_sores_dfa(rs: &[Regex], alphabet: &Alphabet) -> Result<Dfa> {
    let mut profile: Option<LocalProfile> = None;
    for r in rs {
        let p = local_profile(r)?;
        profile = Some(match profile {
            None => p,
            Some(acc) => acc.intersect(&p),
        });
    }
    match profile {
        Some(p) => local_dfa(&p, alphabet),
        None => Err(Error::Range("intersection of no expressions".into())),
    }
}

/// Expression for the intersection of SOREs. The empty list gives `Σ*`.
pub fn intersect_sores(rs: &[Regex], alphabet: &Alphabet) -> Result<Regex> {
    if rs.is_empty() {
        return Ok(universe(alphabet));
    }
    let d = intersect_sores_dfa(rs, alphabet)?;
    Ok(eliminate_states(&d.to_nfa()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{equivalent, glushkov, product};
    use crate::budget::Budget;
    use crate::regex::parse;

    fn s(name: &str) -> Symbol {
        Symbol::new(name).unwrap()
    }

    fn set(names: &str) -> BTreeSet<Symbol> {
        names.chars().map(|c| s(&c.to_string())).collect()
    }

    fn pairs(list: &[&str]) -> BTreeSet<(Symbol, Symbol)> {
        list.iter()
            .map(|p| (s(&p[0..1]), s(&p[1..2])))
            .collect()
    }

    #[test]
    fn profiles() {
        let abc = Alphabet::from_chars("abc").unwrap();
        let p = local_profile(&parse("ab*", &abc).unwrap()).unwrap();
        assert!(!p.nullable);
        assert_eq!(p.first, set("a"));
        assert_eq!(p.last, set("ab"));
        assert_eq!(p.follow, pairs(&["ab", "bb"]));

        let p = local_profile(&parse("(a|b)+c", &abc).unwrap()).unwrap();
        assert_eq!(p.first, set("ab"));
        assert_eq!(p.last, set("c"));
        assert_eq!(p.follow, pairs(&["aa", "ab", "ac", "ba", "bb", "bc"]));

        let p = local_profile(&Regex::Epsilon).unwrap();
        assert!(p.nullable && p.first.is_empty() && p.last.is_empty() && p.follow.is_empty());

        assert!(matches!(local_profile(&parse("aa", &abc).unwrap()), Err(Error::NotSore(_))));
    }

    #[test]
    fn intersection_example() {
        let abc = Alphabet::from_chars("abc").unwrap();
        let rs = [parse("ab*", &abc).unwrap(), parse("a(b|c)*", &abc).unwrap()];
        let d = intersect_sores_dfa(&rs, &abc).unwrap();
        assert_eq!(d.num_states(), 4);
        let r = intersect_sores(&rs, &abc).unwrap();
        let b = Budget::default();
        let expected = glushkov(&parse("ab*", &abc).unwrap(), &abc).unwrap();
        assert!(equivalent(&glushkov(&r, &abc).unwrap(), &expected, &b).unwrap());
        let p = product(&glushkov(&rs[0], &abc).unwrap(), &glushkov(&rs[1], &abc).unwrap(), &b).unwrap();
        assert!(equivalent(&d.to_nfa(), &p, &b).unwrap());
    }

    #[test]
    fn singleton_and_disjoint() {
        let abc = Alphabet::from_chars("abc").unwrap();
        let r = parse("(a|b)+c", &abc).unwrap();
        let out = intersect_sores(std::slice::from_ref(&r), &abc).unwrap();
        let b = Budget::default();
        assert!(equivalent(&glushkov(&out, &abc).unwrap(), &glushkov(&r, &abc).unwrap(), &b).unwrap());

        let rs = [parse("a*", &abc).unwrap(), parse("b*", &abc).unwrap()];
        assert_eq!(intersect_sores(&rs, &abc).unwrap(), Regex::Epsilon);
        let rs = [parse("a", &abc).unwrap(), parse("b", &abc).unwrap()];
        assert_eq!(intersect_sores(&rs, &abc).unwrap(), Regex::Empty);
    }
}
