#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rexlab::classes::is_one_unambiguous;
use rexlab::{Alphabet, Regex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn alphabet(k: usize) -> Alphabet {
    Alphabet::from_chars(&"abcde"[..k]).unwrap()
}

/// Random plain expression of RPN size exactly `size`.
pub fn random_regex(rng: &mut ChaCha8Rng, sigma: &Alphabet, size: usize) -> Regex {
    match size {
        0 => unreachable!(),
        1 => {
            let roll = rng.gen_range(0..20);
            if roll == 0 {
                Regex::Epsilon
            } else if roll == 1 {
                Regex::Empty
            } else {
                Regex::sym(sigma.get(rng.gen_range(0..sigma.len())).clone())
            }
        }
        2 => {
            let inner = random_regex(rng, sigma, 1);
            if rng.gen_bool(0.7) {
                Regex::star(inner)
            } else {
                Regex::plus(inner)
            }
        }
        _ => match rng.gen_range(0..10) {
            0 => Regex::star(random_regex(rng, sigma, size - 1)),
            1 => Regex::plus(random_regex(rng, sigma, size - 1)),
            k => {
                let left = rng.gen_range(1..size - 1);
                let a = random_regex(rng, sigma, left);
                let b = random_regex(rng, sigma, size - 1 - left);
                if k < 6 {
                    Regex::concat(a, b)
                } else {
                    Regex::union(a, b)
                }
            }
        },
    }
}

/// Random expression without ∅, size in `1..=max_size`, alphabet of 1..=max_k symbols.
pub fn random_plain(rng: &mut ChaCha8Rng, max_k: usize, max_size: usize) -> (Regex, Alphabet) {
    let sigma = alphabet(rng.gen_range(1..=max_k));
    loop {
        let size = rng.gen_range(1..=max_size);
        let r = random_regex(rng, &sigma, size);
        if !contains_empty(&r) {
            return (r, sigma);
        }
    }
}

pub fn contains_empty(r: &Regex) -> bool {
    match r {
        Regex::Empty => true,
        Regex::Epsilon | Regex::Sym(_) => false,
        Regex::Concat(a, b) | Regex::Union(a, b) | Regex::Intersect(a, b) => {
            contains_empty(a) || contains_empty(b)
        }
        Regex::Star(a) | Regex::Plus(a) | Regex::Negate(a) => contains_empty(a),
    }
}

/// Size drawn uniformly first, then rejection sampling at that size until
/// the expression is one-unambiguous, so large sizes are not crowded out.
pub fn random_one_unambiguous(rng: &mut ChaCha8Rng, max_k: usize, max_size: usize) -> (Regex, Alphabet) {
    let size = rng.gen_range(1..=max_size);
    loop {
        let sigma = alphabet(rng.gen_range(1..=max_k));
        let r = random_regex(rng, &sigma, size);
        if !contains_empty(&r) && is_one_unambiguous(&r).unwrap().is_one_unambiguous {
            return (r, sigma);
        }
    }
}

/// Random single-occurrence expression over a random subset of `sigma`.
pub fn random_sore(rng: &mut ChaCha8Rng, sigma: &Alphabet) -> Regex {
    let mut symbols: Vec<_> = sigma.symbols().to_vec();
    symbols.shuffle(rng);
    symbols.truncate(rng.gen_range(1..=sigma.len()));
    sore_over(rng, &symbols)
}

fn sore_over(rng: &mut ChaCha8Rng, symbols: &[rexlab::Symbol]) -> Regex {
    let base = if symbols.len() == 1 {
        Regex::sym(symbols[0].clone())
    } else {
        let cut = rng.gen_range(1..symbols.len());
        let a = sore_over(rng, &symbols[..cut]);
        let b = sore_over(rng, &symbols[cut..]);
        if rng.gen_bool(0.5) {
            Regex::concat(a, b)
        } else {
            Regex::union(a, b)
        }
    };
    match rng.gen_range(0..8) {
        0 => Regex::star(base),
        1 => Regex::plus(base),
        2 => Regex::union(base, Regex::Epsilon),
        _ => base,
    }
}

pub fn random_word(rng: &mut ChaCha8Rng, k: usize, min: usize, max: usize) -> Vec<usize> {
    let len = rng.gen_range(min..=max);
    (0..len).map(|_| rng.gen_range(0..k)).collect()
}

/// Proptest strategy for plain expressions over the first `k` letters.
pub fn plain_strategy(k: usize, with_empty: bool) -> impl proptest::strategy::Strategy<Value = Regex> {
    use proptest::prelude::*;
    let sigma = alphabet(k);
    let empty_weight = u32::from(with_empty);
    let leaf = prop_oneof![
        8 => (0..k).prop_map(move |i| Regex::sym(sigma.get(i).clone())),
        1 => Just(Regex::Epsilon),
        empty_weight => Just(Regex::Empty),
    ];
    leaf.prop_recursive(5, 24, 2, |inner| {
        prop_oneof![
            3 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Regex::concat(a, b)),
            3 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Regex::union(a, b)),
            2 => inner.clone().prop_map(Regex::star),
            1 => inner.prop_map(Regex::plus),
        ]
    })
}

/// Same, with intersection and negation mixed in.
pub fn extended_strategy(k: usize) -> impl proptest::strategy::Strategy<Value = Regex> {
    use proptest::prelude::*;
    let sigma = alphabet(k);
    let leaf = prop_oneof![
        8 => (0..k).prop_map(move |i| Regex::sym(sigma.get(i).clone())),
        1 => Just(Regex::Epsilon),
        1 => Just(Regex::Empty),
    ];
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            3 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Regex::concat(a, b)),
            3 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Regex::union(a, b)),
            2 => inner.clone().prop_map(Regex::star),
            1 => inner.clone().prop_map(Regex::plus),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Regex::intersect(a, b)),
            1 => inner.prop_map(Regex::negate),
        ]
    })
}

/// Every occurrence renamed `p0, p1, ...`: the marked expression as a plain
/// expression over its positions, built without the library's marking.
pub fn positions_as_symbols(r: &Regex) -> (Regex, Alphabet) {
    let mut next = 0;
    let renamed = r.map_symbols(&mut |_| {
        next += 1;
        rexlab::Symbol::new(&format!("p{}", next - 1)).unwrap()
    });
    let names: Vec<String> = (0..next).map(|i| format!("p{i}")).collect();
    (renamed, Alphabet::from_names(&names).unwrap())
}

pub fn config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases,
        failure_persistence: None,
        ..Default::default()
    }
}
