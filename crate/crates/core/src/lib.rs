//! Regular-expression algebra: extended regexes, automata conversions, the
//! polynomial complement of one-unambiguous expressions, intersection of
//! single-occurrence expressions, and the succinctness witness families,
//! together with brute-force language oracles to check all of them.

pub mod budget;
pub mod cli;
pub mod classes;
pub mod error;
pub mod analysis;
pub mod automata;
pub mod regex;
pub mod witnesses;

pub use budget::{Budget, CancelToken};
pub use error::{Error, Result};
pub use automata::{Dfa, Nfa};
pub use regex::{Alphabet, MarkedRegex, MarkedSymbol, Regex, Symbol};
