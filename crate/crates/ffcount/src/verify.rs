//! Exhaustive verification of the counting identities over a given structure:
//! the upper bound N(t) <= N(0) = 2p-4, the parity rule (N(t) odd exactly at
//! t = 4 and t = -4), the symmetry N(16/t) = N(t), a step-by-step replay of
//! the argument combining them, and searches for all profile-preserving
//! affine and inversive transformations of t.

use std::time::{Duration, Instant};

use crate::congruence::{
    coefficient_vector, congruence_eval, mirror_identity_check_with, power_sum_check,
    POWER_SUM_LIMIT,
};
use crate::counting::{m_table, n_table_from_m, NTable};
use crate::error::Result;
use crate::residue::{inv_mod, mul_mod, FactorialTable, Modulus, Residue};
use crate::structure::{Structure, Zmod};

/// Outcome of one exhaustive check, with the first counterexample on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub universe: u64,
    pub pass: bool,
    pub counterexample: Option<String>,
}

impl CheckResult {
    fn pass(name: &'static str, universe: u64) -> Self {
        CheckResult {
            name,
            universe,
            pass: true,
            counterexample: None,
        }
    }

    fn fail(name: &'static str, universe: u64, counterexample: String) -> Self {
        CheckResult {
            name,
            universe,
            pass: false,
            counterexample: Some(counterexample),
        }
    }
}

/// All checks run against one structure.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub structure: String,
    pub checks: Vec<CheckResult>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// One line per report; stable across runs (no timing included).
    pub fn summary_line(&self) -> String {
        if self.all_pass() {
            format!("{} checks={} pass", self.structure, self.checks.len())
        } else {
            let failures: Vec<String> = self
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| {
                    format!(
                        "{}: {}",
                        c.name,
                        c.counterexample.as_deref().unwrap_or("failed")
                    )
                })
                .collect();
            format!(
                "{} checks={} FAIL [{}]",
                self.structure,
                self.checks.len(),
                failures.join("; ")
            )
        }
    }

    /// One JSON object per check, newline separated.
    pub fn to_json_lines(&self) -> String {
        self.checks
            .iter()
            .map(|c| {
                let mut obj = serde_json::json!({
                    "structure": self.structure,
                    "check": c.name,
                    "universe": c.universe,
                    "pass": c.pass,
                });
                if let Some(ce) = &c.counterexample {
                    obj["counterexample"] = serde_json::json!(ce);
                }
                obj.to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Profile-preserving transformations of t found by exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub p: u64,
    /// Pairs (a, b) with N(a t + b) = N(t) for every t.
    pub affine: Vec<(u64, u64)>,
    /// Values a with N(a / t) = N(t) for every t != 0.
    pub inversive: Vec<u64>,
}

/// Checks N(t) <= N(0) = 2p - 4 for every t, with equality at t = 0.
pub fn check_upper_bound(nt: &NTable<Zmod>) -> CheckResult {
    let p = nt.structure().n();
    let name = "upper_bound";
    let bound = 2 * p - 4;
    if nt.get(&0) != bound {
        return CheckResult::fail(name, p, format!("N(0)={} expected {}", nt.get(&0), bound));
    }
    for t in 0..p {
        if nt.get(&t) > bound {
            return CheckResult::fail(name, p, format!("t={t}: N(t)={} > {bound}", nt.get(&t)));
        }
    }
    CheckResult::pass(name, p)
}

/// Checks that N(t) is odd exactly at t = 4 and t = -4.
pub fn check_parity(nt: &NTable<Zmod>) -> CheckResult {
    let p = nt.structure().n();
    let name = "parity";
    for t in 0..p {
        let odd = nt.get(&t) % 2 == 1;
        let at_four = t == 4 % p || t == (p - 4 % p) % p;
        if odd != at_four {
            return CheckResult::fail(
                name,
                p,
                format!("t={t}: N(t)={} parity violates the +-4 rule", nt.get(&t)),
            );
        }
    }
    CheckResult::pass(name, p)
}

/// Checks the exact equality N(16/t) = N(t) for every invertible t != 0.
pub fn check_main_theorem<S: Structure>(nt: &NTable<S>) -> CheckResult {
    let s = nt.structure();
    let name = "theorem_16_over_t";
    let sixteen = s.embed(16);
    let units = s.units();
    let universe = units.len() as u64;
    for t in &units {
        let mirror = s.mul(&sixteen, &s.inv(t).expect("unit"));
        if nt.get(t) != nt.get(&mirror) {
            return CheckResult::fail(
                name,
                universe,
                format!(
                    "t={}: N(t)={} but N(16/t)={} at 16/t={}",
                    s.code_of(t),
                    nt.get(t),
                    nt.get(&mirror),
                    s.code_of(&mirror)
                ),
            );
        }
    }
    CheckResult::pass(name, universe)
}

/// Builds the N table for p and runs [`check_upper_bound`].
pub fn verify_upper_bound(p: Modulus) -> Result<CheckResult> {
    Ok(check_upper_bound(&prime_table(p)?))
}

/// Builds the N table for p and runs [`check_parity`].
pub fn verify_parity(p: Modulus) -> Result<CheckResult> {
    Ok(check_parity(&prime_table(p)?))
}

/// Builds the N table and runs [`check_main_theorem`] over the structure.
pub fn verify_main_theorem<S: Structure>(s: &S) -> Result<CheckResult> {
    let m = m_table(s)?;
    Ok(check_main_theorem(&n_table_from_m(&m)))
}

fn prime_table(p: Modulus) -> Result<NTable<Zmod>> {
    let f = Zmod::odd_prime(p.n())?;
    Ok(n_table_from_m(&m_table(&f)?))
}

/// One step of the combining argument.
#[derive(Debug, Clone)]
pub struct ProofStep {
    pub name: &'static str,
    pub detail: String,
    pub pass: bool,
}

/// The four-step argument that upgrades the mod-p congruence to equality.
#[derive(Debug, Clone)]
pub struct ProofTrace {
    pub p: u64,
    pub t: u64,
    pub steps: Vec<ProofStep>,
}

impl ProofTrace {
    pub fn all_pass(&self) -> bool {
        self.steps.iter().all(|s| s.pass)
    }
}

/// Replays, for one (p, t), how the congruence, the upper bound, and the
/// parity rule force N(16/t) - N(t) = 0.
pub fn proof_replay(p: Modulus, t: u64) -> Result<ProofTrace> {
    let pp = p.n();
    let table = prime_table(p)?;
    let tv = t % pp;
    let mirror = mul_mod(16 % pp, Residue::from_u64(tv, p).inv()?.value(), pp);
    let n_t = table.get(&tv);
    let n_m = table.get(&mirror);
    let bound = 2 * pp - 4;
    let mut steps = Vec::with_capacity(4);

    let congruent = n_t % pp == n_m % pp;
    steps.push(ProofStep {
        name: "congruent_mod_p",
        detail: format!("N({tv})={n_t}, N({mirror})={n_m}, both = {} mod {pp}", n_t % pp),
        pass: congruent,
    });

    let bounded = n_t <= bound && n_m <= bound;
    steps.push(ProofStep {
        name: "bounded_by_n_zero",
        detail: format!("N(0)={bound}; {n_t} <= {bound} and {n_m} <= {bound}"),
        pass: bounded,
    });

    let at_four = |v: u64| v == 4 % pp || v == (pp - 4 % pp) % pp;
    let parity_ok = (n_t % 2 == n_m % 2) && (at_four(tv) == at_four(mirror));
    steps.push(ProofStep {
        name: "same_parity",
        detail: format!(
            "t {} +-4 iff 16/t {} +-4; parities {} and {}",
            if at_four(tv) { "is" } else { "is not" },
            if at_four(mirror) { "is" } else { "is not" },
            n_t % 2,
            n_m % 2
        ),
        pass: parity_ok,
    });

    // A multiple of p, bounded by 2p-4 < 2p in absolute value, and even:
    // the difference can only be 0.
    let diff = n_m as i64 - n_t as i64;
    steps.push(ProofStep {
        name: "difference_zero",
        detail: format!("N(16/t) - N(t) = {diff}, a multiple of {pp} in [-{bound}, {bound}] of even parity"),
        pass: congruent && bounded && parity_ok && diff == 0,
    });

    Ok(ProofTrace {
        p: pp,
        t: tv,
        steps,
    })
}

/// All (a, b) with N(a t + b) = N(t) for every t, from a precomputed table.
pub fn affine_symmetries_of(nt: &NTable<Zmod>) -> Vec<(u64, u64)> {
    let p = nt.structure().n();
    let mut found = Vec::new();
    for a in 1..p {
        for b in 0..p {
            let preserves = (0..p).all(|t| nt.get(&((mul_mod(a, t, p) + b) % p)) == nt.get(&t));
            if preserves {
                found.push((a, b));
            }
        }
    }
    found
}

/// All a with N(a / t) = N(t) for every t != 0, from a precomputed table.
pub fn inversive_symmetries_of(nt: &NTable<Zmod>) -> Vec<u64> {
    let p = nt.structure().n();
    let inverses: Vec<u64> = (0..p)
        .map(|t| if t == 0 { 0 } else { inv_mod(t, p).expect("prime") })
        .collect();
    (1..p)
        .filter(|&a| (1..p).all(|t| nt.get(&mul_mod(a, inverses[t as usize], p)) == nt.get(&t)))
        .collect()
}

/// Exhaustive O(p^3) search for profile-preserving affine maps.
pub fn search_affine_symmetries(p: Modulus) -> Result<Vec<(u64, u64)>> {
    Ok(affine_symmetries_of(&prime_table(p)?))
}

/// Exhaustive O(p^2) search for profile-preserving scaled inversions.
pub fn search_inversive_symmetries(p: Modulus) -> Result<Vec<u64>> {
    Ok(inversive_symmetries_of(&prime_table(p)?))
}

/// Both symmetry searches over one prime.
pub fn symmetry_report(p: Modulus) -> Result<SymmetryReport> {
    let table = prime_table(p)?;
    Ok(SymmetryReport {
        p: p.n(),
        affine: affine_symmetries_of(&table),
        inversive: inversive_symmetries_of(&table),
    })
}

/// The full check battery for one odd prime: upper bound, parity, the 16/t
/// theorem, the polynomial congruence route, the mirror factorial identity,
/// and (for p within [`POWER_SUM_LIMIT`]) the direct power-sum identity.
pub fn verify_prime(p: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let modulus = Modulus::odd_prime(p)?;
    let f = Zmod::odd_prime(p)?;
    let table = n_table_from_m(&m_table(&f)?);
    let mut checks = vec![
        check_upper_bound(&table),
        check_parity(&table),
        check_main_theorem(&table),
    ];
    checks.push(check_poly_congruence(modulus, &table)?);
    checks.push(check_mirror_factorial(modulus)?);
    if p <= POWER_SUM_LIMIT {
        checks.push(check_power_sum(modulus)?);
    }
    Ok(VerificationReport {
        structure: f.descriptor(),
        checks,
        elapsed: start.elapsed(),
    })
}

fn check_poly_congruence(p: Modulus, nt: &NTable<Zmod>) -> Result<CheckResult> {
    let pp = p.n();
    let name = "poly_congruence";
    let cv = coefficient_vector(p)?;
    for t in 0..pp {
        let eval = congruence_eval(&cv, Residue::from_u64(t, p)).value();
        if eval != nt.get(&t) % pp {
            return Ok(CheckResult::fail(
                name,
                pp,
                format!("t={t}: polynomial gives {eval}, N(t)={} mod {pp}", nt.get(&t) % pp),
            ));
        }
    }
    for t in 1..pp {
        let mirror = mul_mod(16 % pp, inv_mod(t, pp).expect("prime"), pp);
        let at_t = congruence_eval(&cv, Residue::from_u64(t, p)).value();
        let at_mirror = congruence_eval(&cv, Residue::from_u64(mirror, p)).value();
        if at_t != at_mirror {
            return Ok(CheckResult::fail(
                name,
                pp,
                format!("t={t}: polynomial at t gives {at_t}, at 16/t gives {at_mirror}"),
            ));
        }
    }
    Ok(CheckResult::pass(name, pp))
}

fn check_mirror_factorial(p: Modulus) -> Result<CheckResult> {
    let pp = p.n();
    let name = "mirror_factorial";
    let table = FactorialTable::new(p)?;
    for k in (0..pp).step_by(2) {
        if !mirror_identity_check_with(&table, k)? {
            return Ok(CheckResult::fail(name, (pp + 1) / 2, format!("k={k}")));
        }
    }
    Ok(CheckResult::pass(name, (pp + 1) / 2))
}

fn check_power_sum(p: Modulus) -> Result<CheckResult> {
    let pp = p.n();
    let name = "power_sum";
    for t in 0..pp {
        if !power_sum_check(p, Residue::from_u64(t, p))? {
            return Ok(CheckResult::fail(name, pp, format!("t={t}")));
        }
    }
    Ok(CheckResult::pass(name, pp))
}

/// Runs [`verify_prime`] over the given primes, partitioned round-robin
/// across `jobs` workers; reports come back in ascending-p order regardless
/// of scheduling.
pub fn verify_primes(primes: &[u64], jobs: usize) -> Result<Vec<VerificationReport>> {
    let jobs = jobs.max(1);
    let mut reports: Vec<(u64, VerificationReport)> = if jobs == 1 || primes.len() <= 1 {
        primes
            .iter()
            .map(|&p| Ok((p, verify_prime(p)?)))
            .collect::<Result<Vec<_>>>()?
    } else {
        let chunks: Vec<Vec<u64>> = (0..jobs)
            .map(|i| primes.iter().skip(i).step_by(jobs).copied().collect())
            .collect();
        let mut collected = Vec::with_capacity(primes.len());
        let results: Vec<Result<Vec<(u64, VerificationReport)>>> =
            std::thread::scope(|scope| {
                let handles: Vec<_> = chunks
                    .iter()
                    .map(|chunk| {
                        scope.spawn(move || {
                            chunk
                                .iter()
                                .map(|&p| Ok((p, verify_prime(p)?)))
                                .collect::<Result<Vec<_>>>()
                        })
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("verification worker panicked"))
                    .collect()
            });
        for r in results {
            collected.extend(r?);
        }
        collected
    };
    reports.sort_by_key(|(p, _)| *p);
    Ok(reports.into_iter().map(|(_, r)| r).collect())
}
