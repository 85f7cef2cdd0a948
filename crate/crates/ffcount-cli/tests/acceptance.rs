//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `--nocapture`). All comparisons are exact integer checks.

use std::process::Command;

use ffcount::congruence::{
    coefficient_vector, congruence_eval, mirror_identity_check_with, power_sum_check,
};
use ffcount::counting::{
    m_table, m_table_bruteforce, m_value, m_value_bruteforce, n_table_bruteforce, n_table_from_m,
    NTable,
};
use ffcount::residue::{odd_primes_below, vandermonde_check, FactorialTable, Modulus, Residue};
use ffcount::verify::{affine_symmetries_of, check_main_theorem, inversive_symmetries_of};
use ffcount::{make_field, Structure, Zmod};

fn report(criterion: &str, failures: &[String]) {
    if failures.is_empty() {
        println!("{criterion}: PASS");
    } else {
        println!("{criterion}: FAIL ({} counterexamples)", failures.len());
        for f in failures.iter().take(5) {
            println!("  {f}");
        }
        panic!("{criterion} failed; first counterexample: {}", failures[0]);
    }
}

fn prime_n_table(p: u64) -> NTable<Zmod> {
    let f = Zmod::odd_prime(p).unwrap();
    n_table_from_m(&m_table(&f).unwrap())
}

#[test]
fn criterion_01_theorem_16_over_t_below_1000() {
    let mut failures = Vec::new();
    for p in odd_primes_below(1000) {
        let f = Zmod::odd_prime(p).unwrap();
        let table = prime_n_table(p);
        let sixteen = 16 % p;
        for t in 1..p {
            let mirror = f.mul(&sixteen, &f.inv(&t).unwrap());
            if table.get(&t) != table.get(&mirror) {
                failures.push(format!(
                    "p={p}, t={t}: N(t)={} vs N(16/t)={}",
                    table.get(&t),
                    table.get(&mirror)
                ));
            }
        }
    }
    report("criterion 1 (N(16/t) = N(t), odd primes p < 1000)", &failures);
}

#[test]
fn criterion_02_upper_bound_below_1000() {
    let mut failures = Vec::new();
    for p in odd_primes_below(1000) {
        let table = prime_n_table(p);
        let bound = 2 * p - 4;
        if table.get(&0) != bound {
            failures.push(format!("p={p}: N(0)={} expected {bound}", table.get(&0)));
        }
        let max = (0..p).map(|t| table.get(&t)).max().unwrap();
        if max != bound {
            failures.push(format!("p={p}: max N = {max} expected {bound}"));
        }
        for t in 0..p {
            if table.get(&t) > bound {
                failures.push(format!("p={p}, t={t}: N={} > {bound}", table.get(&t)));
            }
        }
    }
    report(
        "criterion 2 (max N = N(0) = 2p-4, odd primes p < 1000)",
        &failures,
    );
}

#[test]
fn criterion_03_parity_below_1000() {
    let mut failures = Vec::new();
    for p in odd_primes_below(1000) {
        let table = prime_n_table(p);
        for t in 0..p {
            let odd = table.get(&t) % 2 == 1;
            let at_four = t == 4 % p || t == (p - 4 % p) % p;
            if odd != at_four {
                failures.push(format!("p={p}, t={t}: N={} odd={odd}", table.get(&t)));
            }
        }
    }
    report(
        "criterion 3 (N odd exactly at t = +-4, odd primes p < 1000)",
        &failures,
    );
}

#[test]
fn criterion_04_m_distribution_below_1000() {
    let mut failures = Vec::new();
    for p in odd_primes_below(1000) {
        let table = m_table(&Zmod::odd_prime(p).unwrap()).unwrap();
        let count = |v: u64| table.values().iter().filter(|&&x| x == v).count() as u64;
        if count(0) != (p - 1) / 2 || count(1) != 2 || count(2) != (p - 3) / 2 {
            failures.push(format!(
                "p={p}: distribution 0x{} 1x{} 2x{}",
                count(0),
                count(1),
                count(2)
            ));
        }
        if table.total() != p - 1 {
            failures.push(format!("p={p}: sum M = {} expected {}", table.total(), p - 1));
        }
    }
    report(
        "criterion 4 (M takes 0/1/2 with multiplicities (p-1)/2, 2, (p-3)/2; sum p-1)",
        &failures,
    );
}

#[test]
fn criterion_05_oracle_equivalence_to_200() {
    let mut failures = Vec::new();
    for p in odd_primes_below(201) {
        let f = Zmod::odd_prime(p).unwrap();
        let m_formula = m_table(&f).unwrap();
        let m_brute = m_table_bruteforce(&f).unwrap();
        if m_formula.values() != m_brute.values() {
            failures.push(format!("p={p}: M tables differ"));
        }
        let n_formula = n_table_from_m(&m_formula);
        let n_brute = n_table_bruteforce(&f).unwrap();
        if n_formula.values() != n_brute.values() {
            failures.push(format!("p={p}: N tables differ"));
        }
    }
    report(
        "criterion 5 (formula path = brute force for all a and t, p <= 200)",
        &failures,
    );
}

#[test]
fn criterion_06_polynomial_congruence_to_200() {
    let mut failures = Vec::new();
    for p in odd_primes_below(201) {
        let modulus = Modulus::odd_prime(p).unwrap();
        let f = Zmod::odd_prime(p).unwrap();
        let cv = coefficient_vector(modulus).unwrap();
        let table = prime_n_table(p);
        for t in 0..p {
            let eval = congruence_eval(&cv, Residue::from_u64(t, modulus)).value();
            if eval != table.get(&t) % p {
                failures.push(format!(
                    "p={p}, t={t}: polynomial {eval} vs N mod p {}",
                    table.get(&t) % p
                ));
            }
        }
        for t in 1..p {
            let mirror = f.mul(&(16 % p), &f.inv(&t).unwrap());
            let at_t = congruence_eval(&cv, Residue::from_u64(t, modulus)).value();
            let at_mirror = congruence_eval(&cv, Residue::from_u64(mirror, modulus)).value();
            if at_t != at_mirror {
                failures.push(format!("p={p}, t={t}: eval {at_t} vs eval at 16/t {at_mirror}"));
            }
        }
    }
    report(
        "criterion 6 (polynomial route: eval = N mod p and eval(16/t) = eval(t), p <= 200)",
        &failures,
    );
}

#[test]
fn criterion_07_power_sum_to_101() {
    let mut failures = Vec::new();
    for p in odd_primes_below(102) {
        let modulus = Modulus::odd_prime(p).unwrap();
        for t in 0..p {
            if !power_sum_check(modulus, Residue::from_u64(t, modulus)).unwrap() {
                failures.push(format!("p={p}, t={t}"));
            }
        }
    }
    report(
        "criterion 7 (power-sum identity for the non-solution count, p <= 101)",
        &failures,
    );
}

#[test]
fn criterion_08_mirror_identity_to_2000() {
    let mut failures = Vec::new();
    for p in odd_primes_below(2001) {
        let table = FactorialTable::new(Modulus::odd_prime(p).unwrap()).unwrap();
        for k in (0..p).step_by(2) {
            if !mirror_identity_check_with(&table, k).unwrap() {
                failures.push(format!("p={p}, k={k}"));
            }
        }
    }
    report(
        "criterion 8 (mirror factorial identity for all even k, p <= 2000)",
        &failures,
    );
}

#[test]
fn criterion_09_vandermonde_to_300() {
    let mut failures = Vec::new();
    for m in 0..=300u64 {
        if !vandermonde_check(m) {
            failures.push(format!("m={m}"));
        }
    }
    report(
        "criterion 9 (sum of squared binomials = central binomial, n <= 300)",
        &failures,
    );
}

#[test]
fn criterion_10_extension_field_probe() {
    let mut failures = Vec::new();
    let cases = [(3u64, 2usize), (5, 2), (3, 3), (7, 2), (3, 4), (11, 2)];
    let equivalence_required = [9u64, 25, 27, 49];
    for (p, k) in cases {
        let spec = make_field(Modulus::odd_prime(p).unwrap(), k).unwrap();
        let q = spec.order();
        let brute = n_table_bruteforce(&spec).unwrap();
        let verdict = check_main_theorem(&brute);
        println!(
            "  q={q}: 16/t identity verdict = {}{}",
            if verdict.pass { "pass" } else { "FAIL" },
            verdict
                .counterexample
                .as_ref()
                .map(|c| format!(" ({c})"))
                .unwrap_or_default()
        );
        if equivalence_required.contains(&q) {
            let m_formula = m_table(&spec).unwrap();
            let m_brute = m_table_bruteforce(&spec).unwrap();
            if m_formula.values() != m_brute.values() {
                failures.push(format!("q={q}: M formula vs brute force differ"));
            }
            let n_formula = n_table_from_m(&m_formula);
            if n_formula.values() != brute.values() {
                failures.push(format!("q={q}: N formula vs brute force differ"));
            }
        }
    }
    report(
        "criterion 10 (F_q probe: brute-force tables, verdicts, and q <= 49 equivalence)",
        &failures,
    );
}

#[test]
fn criterion_11_symmetry_search_p13() {
    let mut failures = Vec::new();
    let p = 13u64;
    let f = Zmod::odd_prime(p).unwrap();
    let formula_table = prime_n_table(p);
    let affine = affine_symmetries_of(&formula_table);
    let inversive = inversive_symmetries_of(&formula_table);

    for pair in [(1, 0), (12, 0)] {
        if !affine.contains(&pair) {
            failures.push(format!("affine set misses {pair:?}"));
        }
    }
    for a in [3u64, 10] {
        if !inversive.contains(&a) {
            failures.push(format!("inversive set misses {a}"));
        }
    }

    // Independent confirmation: the same searches over the brute-force
    // pair-count table must return identical sets.
    let brute_table = n_table_bruteforce(&f).unwrap();
    if affine != affine_symmetries_of(&brute_table) {
        failures.push("affine sets differ between formula and brute-force tables".into());
    }
    if inversive != inversive_symmetries_of(&brute_table) {
        failures.push("inversive sets differ between formula and brute-force tables".into());
    }
    println!("  p=13: affine = {affine:?}, inversive = {inversive:?}");
    report(
        "criterion 11 (symmetry search at p = 13, confirmed on the brute-force table)",
        &failures,
    );
}

#[test]
fn criterion_12_cli_determinism_under_jobs() {
    let run = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_ffcount"))
            .args(["verify", "--max-p", "200", "--jobs", jobs])
            .output()
            .expect("binary runs")
    };
    let sequential = run("1");
    let parallel = run("4");
    let mut failures = Vec::new();
    if sequential.status.code() != Some(0) {
        failures.push(format!("--jobs 1 exit code {:?}", sequential.status.code()));
    }
    if parallel.status.code() != Some(0) {
        failures.push(format!("--jobs 4 exit code {:?}", parallel.status.code()));
    }
    if sequential.stdout != parallel.stdout {
        failures.push("stdout differs between --jobs 1 and --jobs 4".into());
    }
    report(
        "criterion 12 (verify --max-p 200: byte-identical under --jobs 1 and 4, exit 0)",
        &failures,
    );
}

// Residue arithmetic invariants backing the criteria above.
#[test]
fn supporting_wilson_and_legendre_invariants() {
    let mut failures = Vec::new();
    for p in odd_primes_below(1000) {
        let modulus = Modulus::odd_prime(p).unwrap();
        let table = FactorialTable::new(modulus).unwrap();
        if table.factorial(p - 1) != p - 1 {
            failures.push(format!("p={p}: (p-1)! != -1"));
        }
        let squares = (1..p)
            .filter(|&a| Residue::from_u64(a, modulus).legendre().unwrap() == 1)
            .count() as u64;
        if squares != (p - 1) / 2 {
            failures.push(format!("p={p}: {squares} squares"));
        }
    }
    report("supporting invariants (Wilson, square counts, p < 1000)", &failures);
}

// The M/N oracles running over small rings, exercising the question-5 surface.
#[test]
fn supporting_ring_counts() {
    let mut failures = Vec::new();
    for n in 2..=60u64 {
        let ring = Zmod::new(n).unwrap();
        let units = ring.units().len() as u64;
        let m = m_table_bruteforce(&ring).unwrap();
        if m.total() != units {
            failures.push(format!("n={n}: sum M = {} expected {units}", m.total()));
        }
        let table = n_table_bruteforce(&ring).unwrap();
        if table.total() != units * units {
            failures.push(format!("n={n}: sum N = {} expected {}", table.total(), units * units));
        }
        for a in 0..n {
            let brute = m_value_bruteforce(&ring, &a).unwrap();
            if m.get(&a) != brute {
                failures.push(format!("n={n}, a={a}: M table {} vs value {brute}", m.get(&a)));
            }
            if ring.is_odd_prime_field() && m_value(&ring, &a).unwrap() != brute {
                failures.push(format!("n={n}, a={a}: formula vs brute force"));
            }
        }
    }
    report("supporting invariants (ring counts over Z/nZ, n <= 60)", &failures);
}
