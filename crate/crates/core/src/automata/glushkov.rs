use super::Nfa;
use crate::error::{Error, Result};
use crate::regex::{Alphabet, Positions, Regex};

/// Position automaton: state 0 is the initial state, state `p` is the
/// `p`-th symbol occurrence. Exactly `occurrences + 1` states.
pub fn glushkov(r: &Regex, alphabet: &Alphabet) -> Result<Nfa> {
    if !r.is_plain() {
        return Err(Error::ExtendedOperator("glushkov"));
    }
    let pos = Positions::of(r)?;
    let ids = alphabet.ids(&pos.symbols)?;
    let mut a = Nfa::new(alphabet.clone(), pos.len() + 1, 0);
    a.set_final(0, pos.nullable);
    for &p in &pos.first {
        a.add_transition(0, ids[p], p + 1);
    }
    for (p, succ) in pos.follow.iter().enumerate() {
        for &q in succ {
            a.add_transition(p + 1, ids[q], q + 1);
        }
    }
    for &p in &pos.last {
        a.set_final(p + 1, true);
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::parse;

    #[test]
    fn a_a_star() {
        let sigma = Alphabet::from_chars("a").unwrap();
        let a = glushkov(&parse("aa*", &sigma).unwrap(), &sigma).unwrap();
        assert_eq!(a.num_states(), 3);
        let t: Vec<_> = a.transitions().collect();
        assert_eq!(t, [(0, 0, 1), (1, 0, 2), (2, 0, 2)]);
        assert_eq!(a.finals().collect::<Vec<_>>(), [1, 2]);
        for n in 0..=5 {
            assert_eq!(a.accepts_ids(&vec![0; n]), n >= 1);
        }
    }

    #[test]
    fn epsilon_is_a_single_final_state() {
        let sigma = Alphabet::from_chars("a").unwrap();
        let a = glushkov(&Regex::Epsilon, &sigma).unwrap();
        assert_eq!(a.num_states(), 1);
        assert_eq!(a.num_transitions(), 0);
        assert!(a.is_final(0));
    }

    #[test]
    fn state_count_is_occurrences_plus_one() {
        let sigma = Alphabet::from_chars("abc").unwrap();
        let a = glushkov(&parse("(a|b)*a|bc", &sigma).unwrap(), &sigma).unwrap();
        assert_eq!(a.num_states(), 6);
    }

    #[test]
    fn errors() {
        let sigma = Alphabet::from_chars("ab").unwrap();
        let r = parse("a&b", &sigma).unwrap();
        assert_eq!(glushkov(&r, &sigma), Err(Error::ExtendedOperator("glushkov")));
        let small = Alphabet::from_chars("a").unwrap();
        assert!(matches!(
            glushkov(&parse("ab", &sigma).unwrap(), &small),
            Err(Error::UnknownSymbol(_))
        ));
    }
}
