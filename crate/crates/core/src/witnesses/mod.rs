//! Generators for the lower-bound witness families: path words over the
//! `a(i,j)` alphabet, their binary block encodings, the one-unambiguous and
//! SORE families whose intersections reach them, and the bundles the CLI
//! writes out.

mod bundle;
mod complement;
mod m;

pub use bundle::{Family, Payload, WitnessBundle, WitnessMeta};
pub use complement::{complement_witness, unamb_family};
pub use m::{m_alphabet, m_dfa, m_member, m_sore_pair, m_symbol, rho_hat_encode, MSymbol};

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::regex::{Alphabet, Symbol};

/// Name of the end marker closing every word of the L family.
pub const END_MARKER: &str = "$end";

/// A path `i₀ → i₁ → ⋯ → i_k` in the complete directed graph on `n` nodes,
/// read as the word `a(i₀,i₁) a(i₁,i₂) ⋯`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathWord {
    indices: Vec<usize>,
    n: usize,
}

impl PathWord {
    /// At least two indices (one edge), each below `n`.
    pub fn new(indices: Vec<usize>, n: usize) -> Result<PathWord> {
        if indices.len() < 2 {
            return Err(Error::Range("a path needs at least one edge".into()));
        }
        if let Some(i) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::Range(format!("node {i} is not below {n}")));
        }
        Ok(PathWord { indices, n })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.indices.len() - 1
    }

    pub fn start_point(&self) -> usize {
        self.indices[0]
    }

    pub fn end_point(&self) -> usize {
        *self.indices.last().unwrap()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.indices.windows(2).map(|w| (w[0], w[1]))
    }

    /// The word over `z_alphabet(n)`.
    pub fn to_symbols(&self) -> Vec<Symbol> {
        self.edges().map(|(i, j)| z_symbol(i, j)).collect()
    }

    /// Every path of exactly `edges` edges over `n` nodes, in lexicographic
    /// order of the index sequence.
    pub fn all(n: usize, edges: usize) -> Vec<PathWord> {
        let mut out: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        for _ in 0..edges {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..n).map(move |j| {
                        let mut q = p.clone();
                        q.push(j);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(|indices| PathWord { indices, n }).collect()
    }
}

pub fn z_symbol(i: usize, j: usize) -> Symbol {
    Symbol::new(&format!("a({i},{j})")).unwrap()
}

/// `{a(i,j) | 0 ≤ i,j < n}`, row by row.
pub fn z_alphabet(n: usize) -> Alphabet {
    Alphabet::from_names((0..n).flat_map(|i| (0..n).map(move |j| format!("a({i},{j})")))).unwrap()
}

/// DFA for all path words over `n` nodes: a start state plus one final
/// state per node.
pub fn z_dfa(n: usize) -> Result<Dfa> {
    if n == 0 {
        return Err(Error::Range("n must be at least 1".into()));
    }
    let mut d = Dfa::new(z_alphabet(n), n + 1, 0);
    for i in 0..n {
        d.set_final(i + 1, true);
        for j in 0..n {
            let a = i * n + j;
            d.set_transition(0, a, Some(j + 1));
            d.set_transition(i + 1, a, Some(j + 1));
        }
    }
    Ok(d)
}

/// `⌈log₂ n⌉`.
pub fn bit_width(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::Range(format!("binary encodings need n ≥ 2, got {n}")));
    }
    Ok((usize::BITS - (n - 1).leading_zeros()) as usize)
}

/// Zero-padded, most significant bit first, `⌈log₂ n⌉` bits.
pub fn encode_int(i: usize, n: usize) -> Result<String> {
    let bits = bit_width(n)?;
    if i >= n {
        return Err(Error::Range(format!("{i} is not below {n}")));
    }
    Ok(format!("{i:0bits$b}"))
}

/// Each edge `a(i,j)` becomes the block `enc(j)$enc(i)#`.
pub fn rho_encode(w: &PathWord) -> Result<String> {
    let mut out = String::new();
    for (i, j) in w.edges() {
        out.push_str(&encode_int(j, w.n)?);
        out.push('$');
        out.push_str(&encode_int(i, w.n)?);
        out.push('#');
    }
    Ok(out)
}

/// `{0, 1, $, #}`.
pub fn k_alphabet() -> Alphabet {
    Alphabet::from_chars("01$#").unwrap()
}

/// `{0, 1, $, #}` plus the end marker.
pub fn l_alphabet() -> Alphabet {
    Alphabet::from_names(["0", "1", "$", "#", END_MARKER]).unwrap()
}

const DOLLAR: usize = 2;
const HASH: usize = 3;
const END: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum KState {
    /// Reading the first number of a block; `carry` is the first number of
    /// the previous block, which the second number must repeat.
    First { carry: Option<usize>, value: usize, len: usize },
    Second { first: usize, carry: Option<usize>, value: usize, len: usize },
}

impl KState {
    const START: KState = KState::First { carry: None, value: 0, len: 0 };

    fn accepting(&self) -> bool {
        matches!(self, KState::First { carry: Some(_), len: 0, .. })
    }

    fn step(&self, a: usize, n: usize, bits: usize) -> Option<KState> {
        // a value prefix is kept only while some completion stays below n
        let fits = |v: usize, len: usize| v << (bits - len) < n;
        match *self {
            KState::First { carry, value, len } => match a {
                0 | 1 if len < bits => {
                    let v = 2 * value + a;
                    fits(v, len + 1).then_some(KState::First { carry, value: v, len: len + 1 })
                }
                DOLLAR if len == bits => Some(KState::Second { first: value, carry, value: 0, len: 0 }),
                _ => None,
            },
            KState::Second { first, carry, value, len } => match a {
                0 | 1 if len < bits => match carry {
                    Some(c) => ((c >> (bits - 1 - len)) & 1 == a).then_some(KState::Second {
                        first,
                        carry,
                        value: 0,
                        len: len + 1,
                    }),
                    None => {
                        let v = 2 * value + a;
                        fits(v, len + 1).then_some(KState::Second { first, carry, value: v, len: len + 1 })
                    }
                },
                HASH if len == bits => Some(KState::First { carry: Some(first), value: 0, len: 0 }),
                _ => None,
            },
        }
    }
}

/// DFA for the block encodings of path words over `n ≥ 2` nodes. The
/// states remember the current block's first number and compare the next
/// block's second number against it bit by bit, so there are
/// `O(n² log n)` of them.
pub fn k_dfa(n: usize) -> Result<Dfa> {
    let bits = bit_width(n)?;
    Ok(Dfa::explore(
        k_alphabet(),
        KState::START,
        |q, a| q.step(a, n, bits),
        KState::accepting,
    ))
}

/// `ρ(w)` followed by the end marker, for paths with an even number of edges.
pub fn l_member(w: &PathWord) -> Result<Vec<Symbol>> {
    if w.num_edges() % 2 == 1 {
        return Err(Error::OddLength(w.num_edges()));
    }
    let sigma = l_alphabet();
    let mut word = sigma.tokenize(&rho_encode(w)?)?;
    word.push(sigma.symbol(END_MARKER)?);
    Ok(word)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum LState {
    Blocks { k: KState, odd: bool },
    End,
}

/// DFA for the L family: even block count, then the end marker.
pub fn l_dfa(n: usize) -> Result<Dfa> {
    let bits = bit_width(n)?;
    let step = |q: &LState, a: usize| match q {
        LState::End => None,
        LState::Blocks { k, odd } if a == END => (k.accepting() && !odd).then_some(LState::End),
        LState::Blocks { k, odd } => k.step(a, n, bits).map(|k| LState::Blocks {
            k,
            odd: odd ^ (a == HASH),
        }),
    };
    let start = LState::Blocks { k: KState::START, odd: false };
    Ok(Dfa::explore(l_alphabet(), start, step, |q| *q == LState::End))
}
