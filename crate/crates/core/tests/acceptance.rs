//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line, even when an earlier one fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::Rng;
use rexlab::analysis::{covers, enumerate, minimal_regex_size, naive_language, word_index, IndexResult};
use rexlab::automata::{
    complement_dfa, determinize, determinize_collapsed, eliminate_states, equivalent, glushkov,
    minimize, product,
};
use rexlab::classes::{complement_unambiguous, intersect_sores, intersect_sores_dfa, is_one_unambiguous, is_sore};
use rexlab::regex::{mark, parse};
use rexlab::witnesses::{
    complement_witness, k_alphabet, k_dfa, l_alphabet, l_dfa, m_alphabet, m_dfa, m_member,
    m_sore_pair, rho_encode, unamb_family, z_dfa, PathWord,
};
use rexlab::{Alphabet, Budget, CancelToken, Nfa, Regex};

/// Largest size(s)/size(r)³ on the seeded corpus of criterion 2. It is hit
/// by a single symbol over four letters, where the Σ* terms dominate:
/// complement of `a` has size 35. Criterion 10 reuses it as the envelope.
const CUBIC_CONSTANT: f64 = 35.0;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("took {t:.1?}, limit {limit:?}"))
}

fn same(a: &Nfa, b: &Nfa) -> bool {
    equivalent(a, b, &Budget::default()).unwrap()
}

fn dfa_complement(r: &Regex, sigma: &Alphabet) -> Nfa {
    let b = Budget::default();
    let d = minimize(&determinize_collapsed(&glushkov(r, sigma).unwrap(), &b).unwrap());
    complement_dfa(&d).to_nfa()
}

fn iterated_product(rs: &[Regex], sigma: &Alphabet) -> Nfa {
    let b = Budget::default();
    let mut acc = glushkov(&rs[0], sigma).unwrap();
    for r in &rs[1..] {
        acc = product(&acc, &glushkov(r, sigma).unwrap(), &b).unwrap().trim();
    }
    acc
}

fn words_of(a: &Nfa, max_len: usize) -> BTreeSet<Vec<usize>> {
    enumerate(a, max_len, &Budget::default()).unwrap().words().iter().cloned().collect()
}

fn criterion_1() -> Outcome {
    let sigma = k_alphabet();
    let mut sizes = Vec::new();
    for n in 1..=2 {
        let start = Instant::now();
        let r = complement_witness(n);
        let c = dfa_complement(&r, &sigma);
        let k = k_dfa(1 << n).map_err(|e| e.to_string())?;
        ensure(same(&c, &k.to_nfa()), || format!("n={n}: complement differs from K_{}", 1 << n))?;
        within(start, Duration::from_secs(30))?;
        sizes.push(format!("n={n} size {}", r.size()));
    }
    Ok(sizes.join(", "))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut rng = common::rng(2);
    let mut worst: f64 = 0.0;
    let (mut largest, mut big) = (0, 0);
    for i in 0..500 {
        let (r, sigma) = common::random_one_unambiguous(&mut rng, 4, 30);
        let s = complement_unambiguous(&r, &sigma).map_err(|e| format!("#{i} {r}: {e}"))?;
        let oracle = dfa_complement(&r, &sigma);
        ensure(same(&glushkov(&s, &sigma).unwrap(), &oracle), || format!("#{i}: wrong complement of {r}"))?;
        largest = largest.max(r.size());
        big += usize::from(r.size() >= 15);
        let n = r.size() as f64;
        worst = worst.max(s.size() as f64 / (n * n * n));
    }
    ensure(worst <= CUBIC_CONSTANT, || format!("max ratio {worst:.4} > {CUBIC_CONSTANT}"))?;
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "500 expressions ({big} of size >= 15, largest {largest}), max size(s)/size(r)^3 = {worst:.4} <= {CUBIC_CONSTANT}"
    ))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for n in 1..=3 {
        let sigma = m_alphabet(n);
        let (r, s) = m_sore_pair(n);
        ensure(is_sore(&r) && is_sore(&s), || format!("n={n}: pair is not SORE"))?;
        let p = product(&glushkov(&r, &sigma).unwrap(), &glushkov(&s, &sigma).unwrap(), &Budget::default())
            .unwrap()
            .trim();
        let mut oracle = BTreeSet::new();
        for edges in [2, 4] {
            for w in PathWord::all(n, edges) {
                oracle.insert(sigma.ids(&m_member(&w).unwrap()).unwrap());
            }
        }
        ensure(words_of(&p, 7) == oracle, || format!("n={n}: words up to length 7 differ"))?;
        let direct = m_dfa(n).unwrap().to_nfa();
        ensure(same(&p, &direct), || format!("n={n}: product differs from the M_n automaton"))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok("n=1..3 agree with enumeration and the direct automaton".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let sigma = l_alphabet();
    for n in 1..=2 {
        let family = unamb_family(n);
        ensure(family.len() == 2 * n + 1, || format!("n={n}: {} members", family.len()))?;
        for r in &family {
            ensure(is_one_unambiguous(r).unwrap().is_one_unambiguous, || format!("n={n}: {r} is ambiguous"))?;
        }
        let p = iterated_product(&family, &sigma);
        ensure(same(&p, &l_dfa(1 << n).unwrap().to_nfa()), || format!("n={n}: product differs from L"))?;
    }
    within(start, Duration::from_secs(120))?;
    Ok("n=1,2 members one-unambiguous, product equals L_{2^n}".into())
}

fn criterion_5() -> Outcome {
    let mut rng = common::rng(5);
    for i in 0..200 {
        let sigma = common::alphabet(rng.gen_range(1..=5));
        let count = rng.gen_range(1..=4);
        let rs: Vec<Regex> = (0..count).map(|_| common::random_sore(&mut rng, &sigma)).collect();
        for r in &rs {
            ensure(is_sore(r), || format!("#{i}: generator produced non-SORE {r}"))?;
        }
        let dfa = intersect_sores_dfa(&rs, &sigma).unwrap();
        ensure(dfa.num_states() <= sigma.len() + 1, || format!("#{i}: {} states", dfa.num_states()))?;
        let s = intersect_sores(&rs, &sigma).unwrap();
        ensure(same(&glushkov(&s, &sigma).unwrap(), &iterated_product(&rs, &sigma)), || {
            format!("#{i}: intersection of {rs:?} differs")
        })?;
    }
    Ok("200 lists, all equal to the product, DFA <= |Sigma|+1 states".into())
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let b = Budget::default();
    let z = minimal_regex_size(&z_dfa(2).unwrap(), 1, &b).map_err(|e| e.to_string())?;
    ensure(z.size.is_none(), || format!("Z_2 has size {:?}", z.size))?;
    let k = minimal_regex_size(&k_dfa(2).unwrap(), 3, &b).map_err(|e| e.to_string())?;
    ensure(k.size.is_none(), || format!("K_2 has size {:?}", k.size))?;
    within(start, Duration::from_secs(300))?;
    Ok(format!("no Z_2 at size <= 1 ({} candidates), no K_2 at size <= 3 ({} candidates)", z.candidates, k.candidates))
}

fn criterion_7() -> Outcome {
    let mut rng = common::rng(7);
    let mut checked = 0;
    let mut largest = 0;
    while checked < 1000 {
        let (r, sigma) = common::random_plain(&mut rng, 3, 14);
        let w = common::random_word(&mut rng, sigma.len(), 1, 3);
        let a = glushkov(&r, &sigma).unwrap();
        if let Some(IndexResult::Finite(m)) = word_index(&a, &w).unwrap() {
            ensure(m < 2 * r.size(), || format!("{r} w={w:?}: index {m} >= 2*{}", r.size()))?;
            let power = |k: usize| w.repeat(k);
            ensure(covers(&a, &power(m)) && !covers(&a, &power(m + 1)), || format!("{r} w={w:?}: cover mismatch"))?;
            largest = largest.max(m);
            checked += 1;
        }
    }
    Ok(format!("1000 finite-index pairs, no violation, largest index {largest}"))
}

fn criterion_8() -> Outcome {
    let mut rng = common::rng(8);
    let b = Budget::default();
    for i in 0..1000 {
        let sigma = common::alphabet(rng.gen_range(1..=3));
        let size = rng.gen_range(1..=14);
        let r = common::random_regex(&mut rng, &sigma, size);
        let oracle = naive_language(&r, &sigma, 6).unwrap();
        let g = glushkov(&r, &sigma).unwrap();
        ensure(g.num_states() == r.occurrences().len() + 1, || format!("#{i}: glushkov state count of {r}"))?;
        ensure(words_of(&g, 6) == oracle, || format!("#{i}: glushkov language of {r}"))?;
        let d = determinize(&g, &b).unwrap();
        ensure(words_of(&d.to_nfa(), 6) == oracle, || format!("#{i}: determinize of {r}"))?;
        let c = complement_dfa(&d);
        for w in rexlab::analysis::all_words(sigma.len(), 6) {
            ensure(c.accepts_ids(&w) != oracle.contains(&w), || format!("#{i}: complement of {r} on {w:?}"))?;
        }
        let e = eliminate_states(&g);
        let ge = glushkov(&e, &sigma).unwrap();
        ensure(words_of(&ge, 6) == oracle, || format!("#{i}: eliminate_states language of {r}"))?;
        ensure(same(&ge, &g), || format!("#{i}: eliminate_states round trip of {r}"))?;
    }
    Ok("1000 expressions, all conversions agree to length 6".into())
}

fn criterion_9() -> Outcome {
    let w = PathWord::new(vec![3, 2, 1, 4, 2], 5).unwrap();
    let rho = rho_encode(&w).unwrap();
    ensure(rho == "010$011#001$010#100$001#010$100#", || format!("rho_5 = {rho}"))?;
    let sigma = Alphabet::from_chars("abc").unwrap();
    let marked = mark(&parse("(a|b)*a|bc", &sigma).unwrap()).unwrap().root.to_string();
    ensure(marked == "(a_1|b_2)*a_3|b_4c_5", || format!("marking = {marked}"))?;
    let w = PathWord::new(vec![2, 4, 3, 3, 0], 5).unwrap();
    let hat: Vec<String> = m_member(&w).unwrap().iter().map(|s| s.name().to_string()).collect();
    let expected = ["rt(2)", "a(2,4*)", "a(4*,3)", "rt(3)", "a(3,3*)", "a(3*,0)", "tr(0)"];
    ensure(hat == expected, || format!("rho-hat = {hat:?}"))?;
    Ok(format!("{rho} | {marked} | {}", hat.join(" ")))
}

fn bench_csv(family: &str, pipeline: &str, ns: &str) -> Result<Vec<(usize, usize, Option<u64>)>, String> {
    let args = ["rexlab", "bench", "--family", family, "--pipeline", pipeline, "--n", ns, "--no-time"];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = rexlab::cli::run(args, &mut std::io::empty(), &mut out, &mut err, CancelToken::new());
    ensure(code == 0, || format!("bench exited {code}: {}", String::from_utf8_lossy(&err)))?;
    let text = String::from_utf8(out).unwrap();
    let mut rows = Vec::new();
    for line in text.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        rows.push((f[1].parse().unwrap(), f[2].parse().unwrap(), f[3].parse().ok()));
    }
    Ok(rows)
}

fn criterion_10() -> Outcome {
    let naive = bench_csv("complement-witness", "complement-naive", "1..3")?;
    let out: Vec<f64> = naive
        .iter()
        .map(|r| r.2.map(|x| x as f64).ok_or_else(|| format!("n={} exceeded the budget", r.0)))
        .collect::<Result<_, _>>()?;
    let (g1, g2) = (out[1] / out[0], out[2] / out[1]);
    ensure(g1 > 1.0 && g2 > g1, || format!("growth factors {g1:.1}, {g2:.1} are not increasing"))?;
    let unamb = bench_csv("unamb-family", "complement-unambiguous", "1..3")?;
    for &(n, input, output) in &unamb {
        let output = output.ok_or_else(|| format!("unamb n={n} exceeded the budget"))? as f64;
        let bound = CUBIC_CONSTANT * (input as f64).powi(3);
        ensure(output <= bound, || format!("unamb n={n}: {output} > {bound}"))?;
    }
    Ok(format!(
        "naive outputs {:?} (growth {g1:.1}x then {g2:.1}x); unambiguous outputs {:?} within the cubic envelope",
        out,
        unamb.iter().map(|r| r.2.unwrap()).collect::<Vec<_>>()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("complement witness identity", criterion_1),
        ("one-unambiguous complement", criterion_2),
        ("SORE pair intersection", criterion_3),
        ("one-unambiguous family identity", criterion_4),
        ("SORE linear intersection", criterion_5),
        ("lower-bound spot checks", criterion_6),
        ("index bound", criterion_7),
        ("conversion soundness", criterion_8),
        ("worked examples", criterion_9),
        ("blow-up trend", criterion_10),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let label = format!("criterion {} ({name})", i + 1);
        if !filter.is_empty() && !filter.iter().any(|f| label.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("PASS {label} [{t:.1?}]: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {label} [{t:.1?}]: {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
