//! Structural classes of expressions: one-unambiguous expressions and
//! single-occurrence expressions (SOREs), plus the constructions that only
//! work inside those classes.

mod complement;
mod local;

use std::collections::{HashSet, VecDeque};

pub use complement::{complement_unambiguous, init_expr, last_marked, nfirst, nfollow, prefix_to};
pub use local::{intersect_sores, intersect_sores_dfa, local_dfa, local_profile, LocalProfile};

use crate::error::{Error, Result};
use crate::regex::{MarkedSymbol, Positions, Regex, Symbol};

/// A violation of one-unambiguity: after the marked prefix `prefix`, both
/// `x` and `y` can be read, they differ, and they carry the same symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fork {
    pub prefix: Vec<MarkedSymbol>,
    pub x: MarkedSymbol,
    pub y: MarkedSymbol,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnambiguityReport {
    pub is_one_unambiguous: bool,
    pub witness: Option<Fork>,
}

/// Position sets restricted to positions that occur in some word.
pub(crate) fn live_positions(r: &Regex) -> Result<Positions> {
    Ok(Positions::of(r)?.trimmed())
}

pub(crate) fn marked_at(pos: &Positions, p: usize) -> MarkedSymbol {
    MarkedSymbol::new(pos.symbols[p].clone(), p + 1)
}

/// Decides one-unambiguity through determinism of the Glushkov automaton
/// (restricted to live positions). On failure the fork with the shortest
/// prefix is reported; among equally short ones the smallest subscript pair.
pub fn is_one_unambiguous(r: &Regex) -> Result<UnambiguityReport> {
    if !r.is_plain() {
        return Err(Error::ExtendedOperator("one-unambiguity"));
    }
    let pos = live_positions(r)?;
    // BFS over Glushkov states: None is the initial state.
    let mut parent: Vec<Option<Option<usize>>> = vec![None; pos.len()];
    let mut queue = VecDeque::from([None]);
    let mut seen = vec![false; pos.len()];
    let mut layer_forks: Vec<(usize, Fork)> = Vec::new();
    let mut depth = vec![0usize; pos.len()];
    while let Some(state) = queue.pop_front() {
        let d = state.map_or(0, |p| depth[p]);
        if let Some((best, _)) = layer_forks.first() {
            if d > *best {
                break;
            }
        }
        let succ = match state {
            None => &pos.first,
            Some(p) => &pos.follow[p],
        };
        if let Some((x, y)) = smallest_clash(&pos, succ.iter().copied()) {
            let prefix = trace(&pos, &parent, state);
            layer_forks.push((
                d,
                Fork {
                    prefix,
                    x: marked_at(&pos, x),
                    y: marked_at(&pos, y),
                },
            ));
        }
        for &q in succ {
            if !seen[q] {
                seen[q] = true;
                parent[q] = Some(state);
                depth[q] = d + 1;
                queue.push_back(Some(q));
            }
        }
    }
    let witness = layer_forks
        .into_iter()
        .min_by(|(_, a), (_, b)| {
            (a.x.occurrence, a.y.occurrence).cmp(&(b.x.occurrence, b.y.occurrence))
        })
        .map(|(_, f)| f);
    Ok(UnambiguityReport {
        is_one_unambiguous: witness.is_none(),
        witness,
    })
}

fn smallest_clash(pos: &Positions, succ: impl Iterator<Item = usize>) -> Option<(usize, usize)> {
    let succ: Vec<usize> = succ.collect();
    for (i, &x) in succ.iter().enumerate() {
        if let Some(&y) = succ[i + 1..].iter().find(|&&y| pos.symbols[y] == pos.symbols[x]) {
            return Some((x, y));
        }
    }
    None
}

fn trace(pos: &Positions, parent: &[Option<Option<usize>>], mut state: Option<usize>) -> Vec<MarkedSymbol> {
    let mut word = Vec::new();
    while let Some(p) = state {
        word.push(marked_at(pos, p));
        state = parent[p].expect("visited");
    }
    word.reverse();
    word
}

/// Every symbol occurs at most once and no negation or intersection is used.
pub fn is_sore(r: &Regex) -> bool {
    if !r.is_plain() {
        return false;
    }
    let mut seen: HashSet<&Symbol> = HashSet::new();
    r.occurrences().into_iter().all(|s| seen.insert(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::glushkov;
    use crate::regex::{parse, Alphabet};

    fn re(text: &str) -> Regex {
        parse(text, &Alphabet::from_chars("abc").unwrap()).unwrap()
    }

    fn m(name: &str, k: usize) -> MarkedSymbol {
        MarkedSymbol::new(Symbol::new(name).unwrap(), k)
    }

    #[test]
    fn a_star_a_is_ambiguous_at_the_start() {
        let report = is_one_unambiguous(&re("a*a")).unwrap();
        assert!(!report.is_one_unambiguous);
        assert_eq!(
            report.witness,
            Some(Fork {
                prefix: vec![],
                x: m("a", 1),
                y: m("a", 2)
            })
        );
        assert!(is_one_unambiguous(&re("aa*")).unwrap().is_one_unambiguous);
    }

    #[test]
    fn fork_after_a_prefix() {
        let report = is_one_unambiguous(&re("b(a|ab)")).unwrap();
        let fork = report.witness.unwrap();
        assert_eq!(fork.prefix, vec![m("b", 1)]);
        assert_eq!((fork.x, fork.y), (m("a", 2), m("a", 3)));

        let fork = is_one_unambiguous(&re("(a|b)*a")).unwrap().witness.unwrap();
        assert_eq!(fork.prefix, vec![]);
        assert_eq!((fork.x, fork.y), (m("a", 1), m("a", 3)));
    }

    #[test]
    fn dead_positions_do_not_count() {
        assert!(is_one_unambiguous(&re("a%0|a")).unwrap().is_one_unambiguous);
        assert!(is_one_unambiguous(&re("%0")).unwrap().is_one_unambiguous);
        assert!(!is_one_unambiguous(&re("a|ab")).unwrap().is_one_unambiguous);
    }

    #[test]
    fn matches_glushkov_determinism_without_empty_set() {
        let sigma = Alphabet::from_chars("abc").unwrap();
        for text in ["(a|b)*c", "a(b|c)*a", "(ab|ac)", "(a*b)*", "(a|%e)a", "a+a", "(ab)+a"] {
            let r = re(text);
            let det = glushkov(&r, &sigma).unwrap().is_deterministic();
            assert_eq!(is_one_unambiguous(&r).unwrap().is_one_unambiguous, det, "{text}");
        }
    }

    #[test]
    fn extended_operators_rejected() {
        assert!(is_one_unambiguous(&re("!a")).is_err());
    }

    #[test]
    fn sore_examples() {
        assert!(is_sore(&re("(a|b)+c")));
        assert!(!is_sore(&re("a*(a|b)+")));
        assert!(is_sore(&Regex::Epsilon));
        assert!(!is_sore(&re("a&b")));
    }
}
