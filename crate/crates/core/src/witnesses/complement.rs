use super::{k_alphabet, l_alphabet, END_MARKER};
use crate::regex::{power, repeat_upto, symbol_set, Alphabet, Regex};

struct Letters {
    sigma: Alphabet,
}

impl Letters {
    fn sym(&self, name: &str) -> Regex {
        Regex::Sym(self.sigma.symbol(name).unwrap())
    }

    fn set(&self, names: &str) -> Regex {
        let syms: Vec<_> = names.chars().map(|c| self.sigma.symbol(&c.to_string()).unwrap()).collect();
        symbol_set(&syms)
    }

    /// `0 + 1 + $ + #`, never the end marker.
    fn any(&self) -> Regex {
        self.set("01$#")
    }

    fn any_star(&self) -> Regex {
        Regex::star(self.any())
    }
}

/// Concatenation that skips `ε` factors.
fn cat(items: impl IntoIterator<Item = Regex>) -> Regex {
    Regex::concat_of(items.into_iter().filter(|r| *r != Regex::Epsilon))
}

/// An `O(n)` expression whose complement over `{0,1,$,#}` is the block
/// language of paths over `2ⁿ` nodes: the union of the ways a word can fail
/// to be a correctly chained sequence of `n`-bit blocks.
pub fn complement_witness(n: usize) -> Regex {
    assert!(n >= 1, "complement_witness needs n ≥ 1");
    let l = Letters { sigma: k_alphabet() };
    let any = l.any();
    let all = l.any_star();
    let bit = l.set("01");

    let bad_start = Regex::union_of([
        repeat_upto(&any, n),
        cat([repeat_upto(&bit, n - 1), l.set("$#"), all.clone()]),
        cat([power(&bit, n), l.set("01#"), all.clone()]),
    ]);
    let bad_after = |mark: &str, wrong: &str| {
        cat([
            all.clone(),
            l.sym(mark),
            Regex::union(
                cat([repeat_upto(&any, n - 1), l.set("#$")]),
                cat([power(&any, n), l.set(wrong)]),
            ),
            all.clone(),
        ])
    };
    let bad_end = cat([all.clone(), l.set("01$")]);
    let block_start = Regex::union(
        Regex::star(bit.clone()),
        cat([all.clone(), l.sym("#"), Regex::star(bit.clone())]),
    );
    let mismatch = |x: &str, y: &str| {
        cat([
            block_start.clone(),
            l.sym(x),
            power(&any, 3 * n + 2),
            l.sym(y),
            all.clone(),
        ])
    };
    Regex::union_of([
        bad_start,
        bad_after("$", "01$"),
        bad_after("#", "01#"),
        bad_end,
        Regex::union(mismatch("0", "1"), mismatch("1", "0")),
    ])
}

/// `2n + 1` one-unambiguous expressions over `{0,1,$,#,$end}` of size
/// `O(n)` whose intersection is the L language for `2ⁿ` nodes: one for the
/// block format, and for every bit position one checking the blocks that
/// meet at odd `#`s and one for even `#`s.
pub fn unamb_family(n: usize) -> Vec<Regex> {
    assert!(n >= 1, "unamb_family needs n ≥ 1");
    let l = Letters { sigma: l_alphabet() };
    let any = l.any();
    let bit = l.set("01");
    let end = l.sym(END_MARKER);
    let sig = |k: usize| power(&any, k);

    let number = power(&bit, n);
    let format = cat([
        Regex::star(cat([
            number.clone(),
            l.sym("$"),
            number.clone(),
            l.sym("#"),
            number.clone(),
            l.sym("$"),
            number,
            l.sym("#"),
        ])),
        end.clone(),
    ]);
    let mut out = vec![format];

    for i in 0..n {
        let same = |b: &str| cat([l.sym(b), sig(3 * n + 2), l.sym(b)]);
        out.push(cat([
            Regex::star(cat([
                sig(i),
                Regex::union(same("0"), same("1")),
                sig(n - i - 1),
                l.sym("#"),
            ])),
            end.clone(),
        ]));
    }
    for i in 0..n {
        let same = |b: &str| {
            cat([
                l.sym(b),
                sig(2 * n - i + 1),
                Regex::union(
                    end.clone(),
                    cat([sig(n + i + 1), l.sym(b), sig(n - i - 1), l.sym("#")]),
                ),
            ])
        };
        out.push(cat([
            sig(2 * n + 2),
            Regex::star(cat([sig(i), Regex::union(same("0"), same("1"))])),
        ]));
    }
    out
}
