use std::fmt::{self, Write};

use super::parse::RESERVED;
use super::{MarkedSymbol, Regex, Symbol};

// Binding strength of each node; children weaker than required get parentheses.
fn level<S>(r: &Regex<S>) -> u8 {
    match r {
        Regex::Union(..) => 0,
        Regex::Intersect(..) => 1,
        Regex::Concat(..) => 2,
        Regex::Negate(_) => 3,
        Regex::Star(_) | Regex::Plus(_) => 4,
        Regex::Empty | Regex::Epsilon | Regex::Sym(_) => 5,
    }
}

fn write_at<S, W: Write>(
    r: &Regex<S>,
    min: u8,
    out: &mut W,
    sym: &mut impl FnMut(&S, &mut W) -> fmt::Result,
) -> fmt::Result {
    let paren = level(r) < min;
    if paren {
        out.write_char('(')?;
    }
    match r {
        Regex::Empty => out.write_str("%0")?,
        Regex::Epsilon => out.write_str("%e")?,
        Regex::Sym(s) => sym(s, out)?,
        Regex::Union(a, b) => {
            write_at(a, 0, out, sym)?;
            out.write_char('|')?;
            write_at(b, 1, out, sym)?;
        }
        Regex::Intersect(a, b) => {
            write_at(a, 1, out, sym)?;
            out.write_char('&')?;
            write_at(b, 2, out, sym)?;
        }
        Regex::Concat(a, b) => {
            write_at(a, 2, out, sym)?;
            write_at(b, 3, out, sym)?;
        }
        Regex::Negate(a) => {
            out.write_char('!')?;
            write_at(a, 3, out, sym)?;
        }
        Regex::Star(a) => {
            write_at(a, 4, out, sym)?;
            out.write_char('*')?;
        }
        Regex::Plus(a) => {
            write_at(a, 4, out, sym)?;
            out.write_char('+')?;
        }
    }
    if paren {
        out.write_char(')')?;
    }
    Ok(())
}

/// Writes a symbol token: bare when it is a single unreserved ASCII
/// character, quoted otherwise.
pub fn write_symbol<W: Write>(s: &Symbol, out: &mut W) -> fmt::Result {
    let name = s.name();
    let mut chars = name.chars();
    if let (Some(c), None) = (chars.next(), chars.next()) {
        if c.is_ascii_graphic() && !RESERVED.contains(&c) {
            return out.write_char(c);
        }
    }
    out.write_char('\'')?;
    for c in name.chars() {
        if c == '\'' || c == '\\' {
            out.write_char('\\')?;
        }
        out.write_char(c)?;
    }
    out.write_char('\'')
}

/// Precedence-minimal text that parses back to the same tree.
pub fn format(r: &Regex) -> String {
    let mut out = String::new();
    write_at(r, 0, &mut out, &mut |s, o| write_symbol(s, o)).expect("writing to a String");
    out
}

impl fmt::Display for Regex<Symbol> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_at(self, 0, f, &mut |s, o| write_symbol(s, o))
    }
}

impl fmt::Display for Regex<MarkedSymbol> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_at(self, 0, f, &mut |s, o| write!(o, "{s}"))
    }
}
