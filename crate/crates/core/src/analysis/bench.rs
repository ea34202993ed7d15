use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::automata::{complement_dfa, determinize_collapsed, eliminate_states_with, glushkov, minimize, product};
use crate::budget::Budget;
use crate::classes::{complement_unambiguous, intersect_sores};
use crate::error::{Error, Result};
use crate::regex::{Alphabet, Regex};
use crate::witnesses::{k_alphabet, l_alphabet, m_alphabet, Family, Payload, WitnessBundle};

pub const CSV_HEADER: &str = "family,n,input_size,output_size,wall_ms";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pipeline {
    /// Glushkov, subset construction, swap finals, state elimination.
    ComplementNaive,
    ComplementUnambiguous,
    /// Product of Glushkov automata, minimized, then state elimination.
    IntersectProduct,
    IntersectSore,
}

impl Pipeline {
    pub const ALL: [Pipeline; 4] = [
        Pipeline::ComplementNaive,
        Pipeline::ComplementUnambiguous,
        Pipeline::IntersectProduct,
        Pipeline::IntersectSore,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pipeline::ComplementNaive => "complement-naive",
            Pipeline::ComplementUnambiguous => "complement-unambiguous",
            Pipeline::IntersectProduct => "intersect-product",
            Pipeline::IntersectSore => "intersect-sore",
        }
    }

    /// Worst-case output size in terms of the input size `m`.
    pub fn bound_label(self) -> &'static str {
        match self {
            Pipeline::ComplementNaive | Pipeline::IntersectProduct => "2^2^m",
            Pipeline::ComplementUnambiguous => "m^3",
            Pipeline::IntersectSore => "m*|S|*4^m",
        }
    }
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pipeline {
    type Err = Error;

    fn from_str(s: &str) -> Result<Pipeline> {
        Pipeline::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Range(format!("unknown pipeline `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupRow {
    pub n: usize,
    pub input_size: usize,
    /// `None` when the budget ran out.
    pub output_size: Option<u64>,
    pub wall_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupReport {
    pub family: Family,
    pub pipeline: Pipeline,
    pub bound_label: &'static str,
    pub rows: Vec<BlowupRow>,
}

impl BlowupReport {
    /// CSV with the fixed header; exhausted rows carry `exceeded`. With
    /// `timing` off the time column is 0, making the output reproducible.
    pub fn to_csv(&self, timing: bool) -> String {
        let mut out = format!("{CSV_HEADER}\n");
        for r in &self.rows {
            let output = r.output_size.map_or("exceeded".to_string(), |s| s.to_string());
            let ms = if timing { r.wall_ms } else { 0 };
            out.push_str(&format!("{},{},{},{output},{ms}\n", self.family, r.n, r.input_size));
        }
        out
    }
}

fn family_alphabet(family: Family, n: usize) -> Result<Alphabet> {
    Ok(match family {
        Family::ComplementWitness => k_alphabet(),
        Family::UnambFamily => l_alphabet(),
        Family::SorePair => m_alphabet(n),
        _ => return Err(Error::Range(format!("{family} produces an automaton, not expressions"))),
    })
}

fn measure(pipeline: Pipeline, rs: &[Regex], sigma: &Alphabet, budget: &Budget) -> Result<u64> {
    match pipeline {
        Pipeline::ComplementNaive => {
            let mut total = 0u64;
            for r in rs {
                let d = minimize(&determinize_collapsed(&glushkov(r, sigma)?, budget)?);
                let c = minimize(&complement_dfa(&d));
                total = total.saturating_add(eliminate_states_with(&c.to_nfa(), budget)?.size());
            }
            Ok(total)
        }
        Pipeline::ComplementUnambiguous => {
            let mut total = 0u64;
            for r in rs {
                budget.poll()?;
                total += complement_unambiguous(r, sigma)?.size() as u64;
            }
            Ok(total)
        }
        Pipeline::IntersectProduct => {
            let mut acc = glushkov(&rs[0], sigma)?;
            for r in &rs[1..] {
                acc = product(&acc, &glushkov(r, sigma)?, budget)?.trim();
            }
            let d = minimize(&determinize_collapsed(&acc, budget)?);
            Ok(eliminate_states_with(&d.to_nfa(), budget)?.size())
        }
        Pipeline::IntersectSore => Ok(intersect_sores(rs, sigma)?.size() as u64),
    }
}

/// Runs `pipeline` on the family's expressions for every `n`. Rows that
/// exhaust the budget are kept with no output size; other errors abort.
pub fn blowup_report(
    family: Family,
    ns: impl IntoIterator<Item = usize>,
    pipeline: Pipeline,
    budget: &Budget,
) -> Result<BlowupReport> {
    let mut rows = Vec::new();
    let mut last = None;
    for n in ns {
        if last.is_some_and(|l| n <= l) {
            return Err(Error::Range("n values must increase".into()));
        }
        last = Some(n);
        let sigma = family_alphabet(family, n)?;
        let rs = match WitnessBundle::generate(family, n)?.payload {
            Payload::Regex(r) => vec![r],
            Payload::Regexes(rs) => rs,
            Payload::Dfa(_) => unreachable!("rejected by family_alphabet"),
        };
        let input_size = rs.iter().map(Regex::size).sum();
        let start = Instant::now();
        let output_size = match measure(pipeline, &rs, &sigma, budget) {
            Ok(s) => Some(s),
            Err(e) if e.is_budget() => None,
            Err(e) => return Err(e),
        };
        rows.push(BlowupRow {
            n,
            input_size,
            output_size,
            wall_ms: start.elapsed().as_millis(),
        });
    }
    Ok(BlowupReport {
        family,
        pipeline,
        bound_label: pipeline.bound_label(),
        rows,
    })
}
