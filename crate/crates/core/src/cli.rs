//! The `rexlab` command line.
//!
//! Exit codes: 0 success, 1 negative verification, 2 usage or input error,
//! 3 budget exhausted or interrupted.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use crate::analysis::{
    blowup_report, equal_upto, minimal_regex_size, word_index, IndexResult, Pipeline,
};
use crate::automata::{
    complement_dfa, determinize, determinize_collapsed, distinguishing_word, eliminate_states_with, extended_to_nfa,
    minimize, product, Nfa, HEADER,
};
use crate::budget::{Budget, CancelToken};
use crate::classes::{complement_unambiguous, intersect_sores, is_one_unambiguous, is_sore};
use crate::error::{Error, Result};
use crate::regex::{format, parse, parse_infer, Alphabet, Regex};
use crate::witnesses::{Family, WitnessBundle};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable holding a wall-clock limit in milliseconds.
pub const BUDGET_ENV: &str = "REXLAB_BUDGET_MS";

#[derive(Parser, Debug)]
#[command(name = "rexlab", version, about = "Regular expression algebra toolkit")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug)]
struct Common {
    /// Alphabet: a string of one-character symbols (`ab`), or names
    /// separated by commas or spaces (`a,b,c`).
    #[arg(long, global = true)]
    alphabet: Option<String>,
    /// File with one symbol name per line.
    #[arg(long, global = true, conflicts_with = "alphabet")]
    alphabet_file: Option<String>,
    #[arg(long, global = true, default_value_t = Budget::default().max_states)]
    max_states: usize,
    #[arg(long, global = true, default_value_t = Budget::default().max_len)]
    max_len: usize,
    #[arg(long, global = true, default_value_t = Budget::default().max_size)]
    max_size: usize,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Parse and print an expression in normal form.
    Parse { input: Option<String> },
    /// Print the size of an expression.
    Size { input: Option<String> },
    /// Report one-unambiguity (with a witness) and the SORE property.
    Classify { input: Option<String> },
    /// Compile an expression into an automaton.
    ToNfa { input: Option<String> },
    /// Determinize an expression or automaton.
    ToDfa {
        input: Option<String>,
        /// Also minimize.
        #[arg(long)]
        minimize: bool,
    },
    /// Convert an automaton (or expression) to an expression by state elimination.
    ToRegex { input: Option<String> },
    /// Complement an expression over the given alphabet.
    Complement {
        input: Option<String>,
        #[arg(long, conflicts_with = "force_unambiguous")]
        force_naive: bool,
        #[arg(long)]
        force_unambiguous: bool,
    },
    /// Intersect expressions, given as arguments or one per line on stdin.
    Intersect {
        inputs: Vec<String>,
        /// Use the linear construction for single-occurrence expressions.
        #[arg(long)]
        sore: bool,
    },
    /// Generate a witness family member.
    Witness {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// Append a JSON metadata line to this file.
        #[arg(long)]
        meta: Option<String>,
    },
    /// Check membership or equivalence; exit 1 when the check fails.
    Verify {
        input: Option<String>,
        #[arg(long, group = "check")]
        accepts: Option<String>,
        #[arg(long, group = "check")]
        rejects: Option<String>,
        /// Compare two inputs for language equality.
        #[arg(long, num_args = 2, value_names = ["A", "B"], group = "check")]
        equiv: Option<Vec<String>>,
        /// Restrict `--equiv` to words up to this length.
        #[arg(long, requires = "equiv")]
        upto: Option<usize>,
    },
    /// Measure output sizes of a pipeline over a witness family, as CSV.
    Bench {
        #[arg(long)]
        family: String,
        #[arg(long)]
        pipeline: String,
        /// Parameter range `a..b` (inclusive) or a single value.
        #[arg(long)]
        n: String,
        /// Print 0 in the time column so output is reproducible.
        #[arg(long)]
        no_time: bool,
    },
    /// Index of a word: the largest m such that w^m is a factor of the language.
    Index {
        input: Option<String>,
        #[arg(long)]
        word: String,
    },
    /// Smallest plain expression for a language, by exhaustive search.
    Minsize {
        input: Option<String>,
        /// Append the search record as a JSON line to this file.
        #[arg(long)]
        log: Option<String>,
    },
}

/// Runs one command. `stdin` is only read when an input is `-` or omitted.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write, cancel: CancelToken) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let mut budget = Budget::default().with_cancel(cancel);
    budget.max_states = cli.common.max_states;
    budget.max_len = cli.common.max_len;
    budget.max_size = cli.common.max_size;
    if let Ok(ms) = std::env::var(BUDGET_ENV) {
        match ms.trim().parse::<u64>() {
            Ok(ms) => budget = budget.with_time_limit(Duration::from_millis(ms)),
            Err(_) => {
                let _ = writeln!(err, "error: {BUDGET_ENV} must be a number of milliseconds");
                return EXIT_USAGE;
            }
        }
    }
    let mut ctx = Ctx {
        common: &cli.common,
        budget,
        stdin,
        out,
    };
    match ctx.dispatch(&cli.verb) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_budget() {
                EXIT_BUDGET
            } else {
                EXIT_USAGE
            }
        }
    }
}

enum Input {
    Regex(Regex, Alphabet),
    Automaton(Nfa),
}

struct Ctx<'a> {
    common: &'a Common,
    budget: Budget,
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

fn io_error(e: std::io::Error) -> Error {
    Error::Range(format!("i/o: {e}"))
}

impl Ctx<'_> {
    fn emit(&mut self, text: &str) -> Result<()> {
        self.out.write_all(text.as_bytes()).map_err(io_error)
    }

    fn line(&mut self, text: &str) -> Result<()> {
        self.emit(text)?;
        self.emit("\n")
    }

    fn alphabet(&self) -> Result<Option<Alphabet>> {
        if let Some(path) = &self.common.alphabet_file {
            let text = std::fs::read_to_string(path).map_err(io_error)?;
            return Alphabet::parse_file(&text).map(Some);
        }
        match &self.common.alphabet {
            None => Ok(None),
            Some(text) if text.contains(',') || text.contains(char::is_whitespace) => {
                Alphabet::from_names(text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()))
                    .map(Some)
            }
            Some(text) => Alphabet::from_chars(text).map(Some),
        }
    }

    /// `-` or nothing reads stdin; an existing file path reads the file;
    /// anything else is taken literally.
    fn text(&mut self, input: Option<&str>) -> Result<String> {
        match input {
            None | Some("-") => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).map_err(io_error)?;
                Ok(s)
            }
            Some(p) if std::path::Path::new(p).is_file() => std::fs::read_to_string(p).map_err(io_error),
            Some(literal) => Ok(literal.to_string()),
        }
    }

    fn regex_text(&self, text: &str) -> Result<(Regex, Alphabet)> {
        let text = text.trim();
        match self.alphabet()? {
            Some(sigma) => Ok((parse(text, &sigma)?, sigma)),
            None => parse_infer(text),
        }
    }

    fn input(&mut self, input: Option<&str>) -> Result<Input> {
        let text = self.text(input)?;
        if text.trim_start().starts_with(HEADER) {
            Ok(Input::Automaton(Nfa::from_text(&text)?))
        } else {
            let (r, sigma) = self.regex_text(&text)?;
            Ok(Input::Regex(r, sigma))
        }
    }

    fn regex(&mut self, input: Option<&str>) -> Result<(Regex, Alphabet)> {
        match self.input(input)? {
            Input::Regex(r, s) => Ok((r, s)),
            Input::Automaton(_) => Err(Error::Range("expected an expression, got an automaton".into())),
        }
    }

    fn automaton(&mut self, input: Option<&str>) -> Result<Nfa> {
        match self.input(input)? {
            Input::Automaton(a) => Ok(a),
            Input::Regex(r, sigma) => extended_to_nfa(&r, &sigma, &self.budget),
        }
    }

    fn dispatch(&mut self, verb: &Verb) -> Result<i32> {
        match verb {
            Verb::Parse { input } => {
                let (r, _) = self.regex(input.as_deref())?;
                self.line(&format(&r))?;
            }
            Verb::Size { input } => {
                let (r, _) = self.regex(input.as_deref())?;
                self.line(&r.size().to_string())?;
            }
            Verb::Classify { input } => {
                let (r, _) = self.regex(input.as_deref())?;
                self.classify(&r)?;
            }
            Verb::ToNfa { input } => {
                let a = self.automaton(input.as_deref())?;
                self.emit(&a.to_text())?;
            }
            Verb::ToDfa { input, minimize: min } => {
                let a = self.automaton(input.as_deref())?;
                let d = determinize(&a, &self.budget)?;
                let d = if *min { minimize(&d) } else { d };
                self.emit(&d.to_text())?;
            }
            Verb::ToRegex { input } => {
                let a = self.automaton(input.as_deref())?;
                let r = eliminate_states_with(&a, &self.budget)?;
                let r = r.to_regex_within(self.budget.max_expr_nodes as u64).ok_or(Error::BudgetExceeded {
                    what: "expression size",
                    limit: self.budget.max_expr_nodes,
                })?;
                self.line(&format(&r))?;
            }
            Verb::Complement {
                input,
                force_naive,
                force_unambiguous,
            } => {
                if self.common.alphabet.is_none() && self.common.alphabet_file.is_none() {
                    return Err(Error::Range("complement needs --alphabet or --alphabet-file".into()));
                }
                let (r, sigma) = self.regex(input.as_deref())?;
                let s = self.complement(&r, &sigma, *force_naive, *force_unambiguous)?;
                self.line(&format(&s))?;
            }
            Verb::Intersect { inputs, sore } => {
                let rs = self.expressions(inputs)?;
                let sigma = match self.alphabet()? {
                    Some(s) => s,
                    None => {
                        let mut s = Alphabet::new();
                        for r in &rs {
                            for x in r.occurrences() {
                                s.intern(x.clone());
                            }
                        }
                        s
                    }
                };
                let r = if *sore {
                    intersect_sores(&rs, &sigma)?
                } else {
                    let mut acc = extended_to_nfa(&rs[0], &sigma, &self.budget)?;
                    for r in &rs[1..] {
                        acc = product(&acc, &extended_to_nfa(r, &sigma, &self.budget)?, &self.budget)?.trim();
                    }
                    let d = minimize(&determinize_collapsed(&acc, &self.budget)?);
                    let e = eliminate_states_with(&d.to_nfa(), &self.budget)?;
                    e.to_regex_within(self.budget.max_expr_nodes as u64).ok_or(Error::BudgetExceeded {
                        what: "expression size",
                        limit: self.budget.max_expr_nodes,
                    })?
                };
                self.line(&format(&r))?;
            }
            Verb::Witness { family, n, meta } => {
                let family: Family = family.parse()?;
                let bundle = WitnessBundle::generate(family, *n)?;
                self.emit(&bundle.payload.to_text())?;
                if let Some(path) = meta {
                    let mut f = std::fs::OpenOptions::new()
                        .create(true)
                        .append(true)
                        .open(path)
                        .map_err(io_error)?;
                    writeln!(f, "{}", bundle.meta_json()).map_err(io_error)?;
                }
            }
            Verb::Verify {
                input,
                accepts,
                rejects,
                equiv,
                upto,
            } => return self.verify(input.as_deref(), accepts, rejects, equiv, *upto),
            Verb::Bench {
                family,
                pipeline,
                n,
                no_time,
            } => {
                let family: Family = family.parse()?;
                let pipeline: Pipeline = pipeline.parse()?;
                let report = blowup_report(family, parse_range(n)?, pipeline, &self.budget)?;
                self.emit(&report.to_csv(!no_time))?;
            }
            Verb::Index { input, word } => {
                let a = self.automaton(input.as_deref())?;
                let w = a.alphabet().ids(&a.alphabet().tokenize(word)?)?;
                let text = match word_index(&a, &w)? {
                    None => "empty language".to_string(),
                    Some(IndexResult::Infinite) => "infinite".to_string(),
                    Some(IndexResult::Finite(m)) => m.to_string(),
                };
                self.line(&text)?;
            }
            Verb::Minsize { input, log } => {
                let a = self.automaton(input.as_deref())?;
                let d = determinize_collapsed(&a, &self.budget)?;
                let outcome = minimal_regex_size(&d, self.common.max_size, &self.budget)?;
                match (&outcome.size, &outcome.witness) {
                    (Some(s), Some(w)) => {
                        self.line(&format!("size: {s}"))?;
                        self.line(&format!("witness: {}", format(w)))?;
                    }
                    _ => self.line(&format!(
                        "none up to size {} ({} candidates)",
                        self.common.max_size, outcome.candidates
                    ))?,
                }
                if let Some(path) = log {
                    let mut f = std::fs::OpenOptions::new()
                        .create(true)
                        .append(true)
                        .open(path)
                        .map_err(io_error)?;
                    let json = serde_json::to_string(&outcome).expect("plain struct serializes");
                    writeln!(f, "{json}").map_err(io_error)?;
                }
            }
        }
        Ok(EXIT_OK)
    }

    fn expressions(&mut self, inputs: &[String]) -> Result<Vec<Regex>> {
        let mut texts = Vec::new();
        if inputs.is_empty() || inputs.iter().any(|i| i == "-") {
            let all = self.text(None)?;
            texts.extend(all.lines().filter(|l| !l.trim().is_empty()).map(str::to_string));
        }
        for i in inputs.iter().filter(|i| *i != "-") {
            let t = self.text(Some(i))?;
            texts.extend(t.lines().filter(|l| !l.trim().is_empty()).map(str::to_string));
        }
        if texts.is_empty() {
            return Err(Error::Range("no expressions to intersect".into()));
        }
        let sigma = self.alphabet()?;
        texts
            .iter()
            .map(|t| match &sigma {
                Some(s) => parse(t.trim(), s),
                None => parse_infer(t.trim()).map(|(r, _)| r),
            })
            .collect()
    }

    fn classify(&mut self, r: &Regex) -> Result<()> {
        if !r.is_plain() {
            self.line("one-unambiguous: n/a (uses negation or intersection)")?;
            return self.line("sore: false");
        }
        let report = is_one_unambiguous(r)?;
        self.line(&format!("one-unambiguous: {}", report.is_one_unambiguous))?;
        if let Some(f) = report.witness {
            let prefix: Vec<String> = f.prefix.iter().map(|m| m.to_string()).collect();
            let prefix = if prefix.is_empty() { "ε".to_string() } else { prefix.join(" ") };
            self.line(&format!("witness: prefix={prefix} x={} y={}", f.x, f.y))?;
        }
        self.line(&format!("sore: {}", is_sore(r)))
    }

    fn complement(&mut self, r: &Regex, sigma: &Alphabet, naive: bool, unambiguous: bool) -> Result<Regex> {
        if !naive && r.is_plain() {
            match complement_unambiguous(r, sigma) {
                Ok(s) => return Ok(s),
                Err(Error::NotOneUnambiguous) if !unambiguous => {}
                Err(e) => return Err(e),
            }
        } else if unambiguous {
            return Err(Error::ExtendedOperator("complement_unambiguous"));
        }
        let a = extended_to_nfa(r, sigma, &self.budget)?;
        let d = minimize(&complement_dfa(&minimize(&determinize_collapsed(&a, &self.budget)?)));
        let e = eliminate_states_with(&d.to_nfa(), &self.budget)?;
        e.to_regex_within(self.budget.max_expr_nodes as u64).ok_or(Error::BudgetExceeded {
            what: "expression size",
            limit: self.budget.max_expr_nodes,
        })
    }

    fn verify(
        &mut self,
        input: Option<&str>,
        accepts: &Option<String>,
        rejects: &Option<String>,
        equiv: &Option<Vec<String>>,
        upto: Option<usize>,
    ) -> Result<i32> {
        if let Some(files) = equiv {
            let a = self.automaton(Some(&files[0]))?;
            let b = self.automaton(Some(&files[1]))?;
            let diverge = match upto {
                Some(len) => equal_upto(&a, &b, len, &self.budget)?,
                None => distinguishing_word(&a, &b, &self.budget)?,
            };
            return match diverge {
                None => {
                    self.line("equivalent")?;
                    Ok(EXIT_OK)
                }
                Some(w) => {
                    let shown = if w.is_empty() { "ε".to_string() } else { a.alphabet().render(&w) };
                    self.line(&format!("divergent: {shown}"))?;
                    Ok(EXIT_NEGATIVE)
                }
            };
        }
        let (word, expect) = match (accepts, rejects) {
            (Some(w), _) => (w, true),
            (_, Some(w)) => (w, false),
            _ => return Err(Error::Range("verify needs --accepts, --rejects or --equiv".into())),
        };
        let a = self.automaton(input)?;
        let accepted = a.accepts(&a.alphabet().tokenize(word)?)?;
        self.line(if accepted { "accept" } else { "reject" })?;
        Ok(if accepted == expect { EXIT_OK } else { EXIT_NEGATIVE })
    }
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Range(format!("bad range `{text}`, expected `a..b` or `n`"));
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            Ok(n..=n)
        }
    }
}
