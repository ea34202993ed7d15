use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{complement_witness, k_dfa, l_dfa, m_dfa, m_sore_pair, unamb_family, z_dfa};
use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::regex::Regex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Z,
    K,
    ComplementWitness,
    L,
    M,
    SorePair,
    UnambFamily,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Z,
        Family::K,
        Family::ComplementWitness,
        Family::L,
        Family::M,
        Family::SorePair,
        Family::UnambFamily,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Z => "z-dfa",
            Family::K => "k-dfa",
            Family::ComplementWitness => "complement-witness",
            Family::L => "l-family",
            Family::M => "m-dfa",
            Family::SorePair => "m-sore-pair",
            Family::UnambFamily => "unamb-family",
        }
    }

    /// Growth of the declared size in `n`.
    pub fn bound(self) -> &'static str {
        match self {
            Family::Z => "O(n^2)",
            Family::K | Family::L => "O(n^2 log n)",
            Family::ComplementWitness | Family::UnambFamily => "O(n)",
            Family::M | Family::SorePair => "O(n^2)",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Range(format!("unknown family `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Regex(Regex),
    Regexes(Vec<Regex>),
    Dfa(Dfa),
}

impl Payload {
    /// Expression size, summed over lists; states plus transitions for automata.
    pub fn size(&self) -> usize {
        match self {
            Payload::Regex(r) => r.size(),
            Payload::Regexes(rs) => rs.iter().map(Regex::size).sum(),
            Payload::Dfa(d) => d.size(),
        }
    }

    /// Automaton file text, or one expression per line.
    pub fn to_text(&self) -> String {
        match self {
            Payload::Regex(r) => format!("{r}\n"),
            Payload::Regexes(rs) => rs.iter().map(|r| format!("{r}\n")).collect(),
            Payload::Dfa(d) => d.to_text(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessMeta {
    pub family: String,
    pub n: usize,
    pub declared_size: usize,
    pub alphabet_size: usize,
    pub bound: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessBundle {
    pub family: Family,
    pub n: usize,
    pub payload: Payload,
}

impl WitnessBundle {
    pub fn generate(family: Family, n: usize) -> Result<WitnessBundle> {
        let at_least = |min: usize| {
            if n < min {
                Err(Error::Range(format!("{family} needs n ≥ {min}")))
            } else {
                Ok(())
            }
        };
        let payload = match family {
            Family::Z => Payload::Dfa(z_dfa(n)?),
            Family::K => Payload::Dfa(k_dfa(n)?),
            Family::L => Payload::Dfa(l_dfa(n)?),
            Family::M => Payload::Dfa(m_dfa(n)?),
            Family::ComplementWitness => {
                at_least(1)?;
                Payload::Regex(complement_witness(n))
            }
            Family::SorePair => {
                at_least(1)?;
                let (r, s) = m_sore_pair(n);
                Payload::Regexes(vec![r, s])
            }
            Family::UnambFamily => {
                at_least(1)?;
                Payload::Regexes(unamb_family(n))
            }
        };
        Ok(WitnessBundle { family, n, payload })
    }

    pub fn declared_size(&self) -> usize {
        self.payload.size()
    }

    pub fn meta(&self) -> WitnessMeta {
        let alphabet_size = match &self.payload {
            Payload::Dfa(d) => d.alphabet().len(),
            Payload::Regex(r) => distinct(std::slice::from_ref(r)),
            Payload::Regexes(rs) => distinct(rs),
        };
        WitnessMeta {
            family: self.family.name().to_string(),
            n: self.n,
            declared_size: self.declared_size(),
            alphabet_size,
            bound: self.family.bound().to_string(),
        }
    }

    /// One JSON object, no trailing newline.
    pub fn meta_json(&self) -> String {
        serde_json::to_string(&self.meta()).expect("plain struct serializes")
    }
}

fn distinct(rs: &[Regex]) -> usize {
    let mut seen = std::collections::HashSet::new();
    for r in rs {
        seen.extend(r.occurrences());
    }
    seen.len()
}
