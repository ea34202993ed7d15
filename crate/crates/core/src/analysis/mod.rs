//! Brute-force oracles and empirical probes: bounded enumeration, the index
//! of a word in an expression, sidekicks, exhaustive minimal-size search and
//! size blow-up reports.

mod bench;
mod index;
mod search;

use std::cmp::Ordering;
use std::collections::BTreeSet;

pub use bench::{blowup_report, BlowupReport, BlowupRow, Pipeline, CSV_HEADER};
pub use index::{covers, sidekicks, starred_subexpressions, word_index, IndexResult};
pub use search::{minimal_regex_size, SearchOutcome};

use crate::automata::{determinize_collapsed, extended_to_nfa, Nfa};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::regex::{Alphabet, Regex};

/// Length-then-lexicographic order on words of symbol ids.
pub fn length_lex(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// All accepted words up to `max_len`, in length-lex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LanguageOracle {
    alphabet: Alphabet,
    max_len: usize,
    words: Vec<Vec<usize>>,
}

impl LanguageOracle {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn words(&self) -> &[Vec<usize>] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &[usize]) -> bool {
        self.words
            .binary_search_by(|w| length_lex(w, word))
            .is_ok()
    }

    /// Words as text, using the alphabet's rendering.
    pub fn rendered(&self) -> Vec<String> {
        self.words.iter().map(|w| self.alphabet.render(w)).collect()
    }
}

/// Breadth-first walk of the subset automaton, one length at a time,
/// skipping prefixes that cannot be completed.
pub fn enumerate(a: &Nfa, max_len: usize, budget: &Budget) -> Result<LanguageOracle> {
    if max_len > budget.max_len {
        return Err(Error::BudgetExceeded {
            what: "enumeration length",
            limit: budget.max_len,
        });
    }
    let d = determinize_collapsed(&a.trim(), budget)?;
    let live = d.to_nfa().coreachable();
    let k = d.alphabet().len();
    let mut words = Vec::new();
    let mut layer: Vec<(Vec<usize>, usize)> = Vec::new();
    if live[d.initial()] {
        layer.push((Vec::new(), d.initial()));
    }
    for len in 0..=max_len {
        budget.poll()?;
        for (w, q) in &layer {
            if d.is_final(*q) {
                words.push(w.clone());
            }
        }
        if words.len() > budget.max_words {
            return Err(Error::BudgetExceeded {
                what: "enumerated words",
                limit: budget.max_words,
            });
        }
        if len == max_len {
            break;
        }
        let mut next = Vec::new();
        for (w, q) in &layer {
            for s in 0..k {
                if let Some(t) = d.step(*q, s).filter(|&t| live[t]) {
                    let mut v = w.clone();
                    v.push(s);
                    next.push((v, t));
                }
            }
            if next.len() > budget.max_words {
                return Err(Error::BudgetExceeded {
                    what: "enumerated prefixes",
                    limit: budget.max_words,
                });
            }
        }
        layer = next;
    }
    Ok(LanguageOracle {
        alphabet: d.alphabet().clone(),
        max_len,
        words,
    })
}

/// Enumeration of any extended expression through its automaton.
pub fn enumerate_regex(r: &Regex, alphabet: &Alphabet, max_len: usize, budget: &Budget) -> Result<LanguageOracle> {
    enumerate(&extended_to_nfa(r, alphabet, budget)?, max_len, budget)
}

/// Compares two languages up to `max_len`. `None` means they agree; otherwise
/// the length-lex smallest word in exactly one of them.
pub fn equal_upto(a: &Nfa, b: &Nfa, max_len: usize, budget: &Budget) -> Result<Option<Vec<usize>>> {
    if !a.alphabet().same_set(b.alphabet()) {
        return Err(Error::AlphabetMismatch);
    }
    let b = b.with_alphabet(a.alphabet())?;
    let x = enumerate(a, max_len, budget)?;
    let y = enumerate(&b, max_len, budget)?;
    let (mut i, mut j) = (0, 0);
    loop {
        match (x.words.get(i), y.words.get(j)) {
            (None, None) => return Ok(None),
            (Some(w), None) | (None, Some(w)) => return Ok(Some(w.clone())),
            (Some(u), Some(v)) => match length_lex(u, v) {
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                Ordering::Less => return Ok(Some(u.clone())),
                Ordering::Greater => return Ok(Some(v.clone())),
            },
        }
    }
}

/// Set-semantics evaluation of an extended expression, truncated at
/// `max_len`. Independent of every automaton construction; meant as a test
/// oracle for small inputs.
pub fn naive_language(r: &Regex, alphabet: &Alphabet, max_len: usize) -> Result<BTreeSet<Vec<usize>>> {
    Ok(match r {
        Regex::Empty => BTreeSet::new(),
        Regex::Epsilon => BTreeSet::from([vec![]]),
        Regex::Sym(s) => {
            let id = alphabet.id(s).ok_or_else(|| Error::UnknownSymbol(s.name().to_string()))?;
            if max_len == 0 {
                BTreeSet::new()
            } else {
                BTreeSet::from([vec![id]])
            }
        }
        Regex::Union(a, b) => {
            let mut x = naive_language(a, alphabet, max_len)?;
            x.extend(naive_language(b, alphabet, max_len)?);
            x
        }
        Regex::Intersect(a, b) => {
            let x = naive_language(a, alphabet, max_len)?;
            let y = naive_language(b, alphabet, max_len)?;
            x.intersection(&y).cloned().collect()
        }
        Regex::Concat(a, b) => {
            let x = naive_language(a, alphabet, max_len)?;
            let y = naive_language(b, alphabet, max_len)?;
            concat_sets(&x, &y, max_len)
        }
        Regex::Star(a) | Regex::Plus(a) => {
            let x = naive_language(a, alphabet, max_len)?;
            let mut acc = x.clone();
            loop {
                let more = concat_sets(&acc, &x, max_len);
                let before = acc.len();
                acc.extend(more);
                if acc.len() == before {
                    break;
                }
            }
            if matches!(r, Regex::Star(_)) {
                acc.insert(vec![]);
            }
            acc
        }
        Regex::Negate(a) => {
            let x = naive_language(a, alphabet, max_len)?;
            all_words(alphabet.len(), max_len)
                .into_iter()
                .filter(|w| !x.contains(w))
                .collect()
        }
    })
}

fn concat_sets(x: &BTreeSet<Vec<usize>>, y: &BTreeSet<Vec<usize>>, max_len: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for u in x {
        for v in y {
            if u.len() + v.len() <= max_len {
                out.insert([u.as_slice(), v.as_slice()].concat());
            }
        }
    }
    out
}

/// `Σ^{≤max_len}` over `k` symbols.
pub fn all_words(k: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..k).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}
