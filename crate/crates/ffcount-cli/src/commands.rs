//! One function per subcommand, all returning the process exit code:
//! 0 = success / all checks pass, 1 = a verification check failed,
//! Err(message) = usage error, mapped to exit 2 by `main`.

use ffcount::congruence::coefficient_vector;
use ffcount::counting::{
    image_sets, m_table, m_value, m_value_bruteforce, n_table, n_table_bruteforce,
    n_value_bruteforce, n_value_formula,
};
use ffcount::residue::odd_primes_below;
use ffcount::verify::{symmetry_report, verify_primes, VerificationReport};
use ffcount::{make_field, FieldSpec, Modulus, Structure, Zmod};

use crate::cache::{self, CachedTable};
use crate::output;
use crate::{Cli, Command, Format, StructureArgs};

/// Largest modulus accepted by the table commands.
const TABLE_LIMIT: u64 = 1_000_000;

/// Largest prime accepted by `verify` (the battery is O(p^2) per prime).
const VERIFY_LIMIT: u64 = 20_000;

/// Largest prime accepted by `symmetries` (the affine scan is O(p^3)).
const SYMMETRY_LIMIT: u64 = 1_000;

pub fn run(cli: &Cli) -> Result<i32, String> {
    match &cli.command {
        Command::Mtable(args) => table_command(cli, args, TableKind::M),
        Command::Ntable(args) => table_command(cli, args, TableKind::N),
        Command::Coeffs { p } => cmd_coeffs(*p),
        Command::Verify { p, max_p } => cmd_verify(cli, *p, *max_p),
        Command::Symmetries { p } => cmd_symmetries(*p),
        Command::Sets(args) => cmd_sets(cli, args),
        Command::Ext { p, k } => cmd_ext(cli, *p, *k),
        Command::Zn { n } => cmd_zn(cli, *n),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum TableKind {
    M,
    N,
}

impl TableKind {
    fn name(self) -> &'static str {
        match self {
            TableKind::M => "mtable",
            TableKind::N => "ntable",
        }
    }

    fn headers(self) -> (&'static str, &'static str) {
        match self {
            TableKind::M => ("a", "M"),
            TableKind::N => ("t", "N"),
        }
    }
}

enum StructureChoice {
    Prime(Zmod),
    Ring(Zmod),
    Ext(FieldSpec),
}

fn parse_structure(args: &StructureArgs) -> Result<StructureChoice, String> {
    match (args.p, args.n, args.k) {
        (Some(p), None, None) => {
            check_table_size(p)?;
            Ok(StructureChoice::Prime(odd_prime_field(p)?))
        }
        (Some(p), None, Some(k)) => {
            check_table_size(p)?;
            let modulus = Modulus::odd_prime(p).map_err(|_| bad_prime_message(p))?;
            let spec = make_field(modulus, k).map_err(|e| e.to_string())?;
            check_table_size(spec.order())?;
            Ok(StructureChoice::Ext(spec))
        }
        (None, Some(n), None) => {
            check_table_size(n)?;
            let ring = Zmod::new(n).map_err(|e| e.to_string())?;
            if n % 2 == 0 {
                eprintln!("note: n={n} is even; no field structure applies, counting over units only");
            }
            Ok(StructureChoice::Ring(ring))
        }
        _ => Err("give exactly one of --p, --n, or --p with --k".into()),
    }
}

fn odd_prime_field(p: u64) -> Result<Zmod, String> {
    Zmod::odd_prime(p).map_err(|_| bad_prime_message(p))
}

fn bad_prime_message(p: u64) -> String {
    if p % 2 == 0 {
        format!("--p {p}: p must be an odd prime; even moduli are only supported as rings via --n")
    } else {
        format!("--p {p}: p must be an odd prime")
    }
}

fn check_table_size(n: u64) -> Result<(), String> {
    if n > TABLE_LIMIT {
        Err(format!("modulus {n} exceeds the table limit {TABLE_LIMIT}"))
    } else {
        Ok(())
    }
}

fn table_command(cli: &Cli, args: &StructureArgs, kind: TableKind) -> Result<i32, String> {
    match parse_structure(args)? {
        StructureChoice::Prime(s) | StructureChoice::Ring(s) => emit_table(cli, &s, kind),
        StructureChoice::Ext(spec) => emit_table(cli, &spec, kind),
    }
}

fn emit_table<S: Structure>(cli: &Cli, s: &S, kind: TableKind) -> Result<i32, String> {
    // Formula path over fields, brute force over rings.
    let compute = || -> Result<Vec<u64>, String> {
        match kind {
            TableKind::M => Ok(m_table(s).map_err(|e| e.to_string())?.values().to_vec()),
            TableKind::N => Ok(n_table(s).map_err(|e| e.to_string())?.values().to_vec()),
        }
    };
    let values = table_values(cli, s, kind, compute)?;
    let (key_header, value_header) = kind.headers();
    match cli.format {
        Format::Csv => print!("{}", output::table_csv(key_header, value_header, &values)),
        Format::Json => println!("{}", output::table_json(kind.name(), &s.descriptor(), &values)),
    }
    Ok(0)
}

/// Runs `compute`, going through the cache directory when one is given.
fn table_values<S: Structure>(
    cli: &Cli,
    s: &S,
    kind: TableKind,
    compute: impl Fn() -> Result<Vec<u64>, String>,
) -> Result<Vec<u64>, String> {
    let Some(dir) = &cli.cache_dir else {
        return compute();
    };

    let path = cache::cache_path(dir, kind.name(), &s.slug());
    if let Some(cached) = cache::load(&path) {
        if cached.kind == kind.name() && cached.structure == s.descriptor() {
            if let Some(values) = cached.dense_values() {
                if values.len() as u64 == s.order()
                    && (cli.trust_cache || spot_check(s, kind, &values)?)
                {
                    return Ok(values);
                }
            }
        }
        eprintln!("note: cached table {} is stale, recomputing", path.display());
    }
    let values = compute()?;
    let entry = CachedTable::from_values(kind.name(), &s.descriptor(), &values);
    cache::store(&path, &entry).map_err(|e| format!("cannot write cache file: {e}"))?;
    Ok(values)
}

/// Recomputes a few entries of a cached table and compares.
fn spot_check<S: Structure>(s: &S, kind: TableKind, values: &[u64]) -> Result<bool, String> {
    let elems = s.elements();
    let formula = s.has_char_formula();
    let m = if formula && kind == TableKind::N {
        Some(m_table(s).map_err(|e| e.to_string())?)
    } else {
        None
    };
    for idx in cache::spot_indices(values.len()) {
        let elem = &elems[idx];
        let expect = match (kind, formula) {
            (TableKind::M, true) => m_value(s, elem).map_err(|e| e.to_string())?,
            (TableKind::M, false) => m_value_bruteforce(s, elem).map_err(|e| e.to_string())?,
            (TableKind::N, true) => n_value_formula(elem, m.as_ref().expect("built above")),
            (TableKind::N, false) => n_value_bruteforce(s, elem).map_err(|e| e.to_string())?,
        };
        if values[idx] != expect {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cmd_coeffs(p: u64) -> Result<i32, String> {
    let modulus = Modulus::odd_prime(p).map_err(|_| bad_prime_message(p))?;
    let cv = coefficient_vector(modulus).map_err(|e| e.to_string())?;
    println!("{}", cv.to_json());
    Ok(0)
}

fn cmd_verify(cli: &Cli, p: Option<u64>, max_p: Option<u64>) -> Result<i32, String> {
    let primes: Vec<u64> = match (p, max_p) {
        (Some(p), None) => {
            odd_prime_field(p)?;
            if p > VERIFY_LIMIT {
                return Err(format!("--p {p} exceeds the verify limit {VERIFY_LIMIT}"));
            }
            vec![p]
        }
        (None, Some(bound)) => {
            if bound > VERIFY_LIMIT {
                return Err(format!(
                    "--max-p {bound} exceeds the verify limit {VERIFY_LIMIT}"
                ));
            }
            odd_primes_below(bound + 1)
        }
        _ => return Err("give exactly one of --p or --max-p".into()),
    };
    let reports = verify_primes(&primes, cli.jobs as usize).map_err(|e| e.to_string())?;
    print_verify_reports(cli.format, &reports);
    Ok(if reports.iter().all(VerificationReport::all_pass) {
        0
    } else {
        1
    })
}

fn print_verify_reports(format: Format, reports: &[VerificationReport]) {
    match format {
        Format::Csv => {
            for report in reports {
                println!("{}", report.summary_line());
            }
            let failures = reports.iter().filter(|r| !r.all_pass()).count();
            let noun = if reports.len() == 1 { "prime" } else { "primes" };
            if failures == 0 {
                println!("summary: {} {noun}, all checks pass", reports.len());
            } else {
                println!("summary: {} {noun}, {failures} with failures", reports.len());
            }
        }
        Format::Json => {
            for report in reports {
                println!("{}", report.to_json_lines());
            }
        }
    }
}

fn cmd_symmetries(p: u64) -> Result<i32, String> {
    let field = odd_prime_field(p)?;
    if p > SYMMETRY_LIMIT {
        return Err(format!("--p {p} exceeds the symmetry-search limit {SYMMETRY_LIMIT}"));
    }
    let report = symmetry_report(field.modulus()).map_err(|e| e.to_string())?;
    let affine: Vec<[u64; 2]> = report.affine.iter().map(|&(a, b)| [a, b]).collect();
    println!(
        "{}",
        serde_json::json!({
            "p": report.p,
            "affine": affine,
            "inversive": report.inversive,
        })
    );
    Ok(0)
}

fn cmd_sets(cli: &Cli, args: &StructureArgs) -> Result<i32, String> {
    match parse_structure(args)? {
        StructureChoice::Prime(s) | StructureChoice::Ring(s) => emit_sets(cli, &s),
        StructureChoice::Ext(spec) => emit_sets(cli, &spec),
    }
}

fn emit_sets<S: Structure>(cli: &Cli, s: &S) -> Result<i32, String> {
    let sets = image_sets(s).map_err(|e| e.to_string())?;
    match cli.format {
        Format::Csv => print!("{}", output::sets_csv(s, &sets)),
        Format::Json => println!("{}", output::sets_json(s, &sets)),
    }
    Ok(0)
}

fn cmd_ext(cli: &Cli, p: u64, k: usize) -> Result<i32, String> {
    let modulus = Modulus::odd_prime(p).map_err(|_| bad_prime_message(p))?;
    let spec = make_field(modulus, k).map_err(|e| e.to_string())?;
    check_table_size(spec.order())?;
    // The campaign table is deliberately brute force; the formula path is
    // what gets verified against it elsewhere.
    let compute = || -> Result<Vec<u64>, String> {
        Ok(n_table_bruteforce(&spec)
            .map_err(|e| e.to_string())?
            .values()
            .to_vec())
    };
    let values = table_values(cli, &spec, TableKind::N, compute)?;
    let verdict = theorem_verdict_from_values(&spec, &values);
    match cli.format {
        Format::Csv => {
            print!("{}", output::table_csv("t", "N", &values));
            eprintln!(
                "field: {}, defining polynomial coefficients (constant first): {:?}",
                spec.descriptor(),
                spec.irreducible()
            );
            match &verdict {
                None => eprintln!("theorem_16_over_t: pass"),
                Some(ce) => {
                    eprintln!("theorem_16_over_t: FAIL");
                    eprintln!("counterexample: {ce}");
                }
            }
        }
        Format::Json => {
            let mut obj = serde_json::json!({
                "kind": "ntable",
                "structure": spec.descriptor(),
                "q": spec.order(),
                "p": spec.p(),
                "k": spec.degree(),
                "irreducible": spec.irreducible(),
                "values": output::table_map(&values),
                "theorem_16_over_t": verdict.is_none(),
            });
            if let Some(ce) = &verdict {
                obj["counterexample"] = serde_json::json!(ce);
            }
            println!("{obj}");
        }
    }
    Ok(if verdict.is_none() { 0 } else { 1 })
}

/// First counterexample to N(16/t) = N(t) in a dense value table, if any.
fn theorem_verdict_from_values<S: Structure>(s: &S, values: &[u64]) -> Option<String> {
    let sixteen = s.embed(16);
    for t in s.units() {
        let mirror = s.mul(&sixteen, &s.inv(&t).expect("unit"));
        let (it, im) = (s.index_of(&t), s.index_of(&mirror));
        if values[it] != values[im] {
            return Some(format!(
                "t={}: N(t)={} but N(16/t)={} at 16/t={}",
                s.code_of(&t),
                values[it],
                values[im],
                s.code_of(&mirror)
            ));
        }
    }
    None
}

fn cmd_zn(cli: &Cli, n: u64) -> Result<i32, String> {
    check_table_size(n)?;
    let ring = Zmod::new(n).map_err(|e| e.to_string())?;
    let even = n % 2 == 0;
    let compute = || -> Result<Vec<u64>, String> {
        Ok(n_table_bruteforce(&ring)
            .map_err(|e| e.to_string())?
            .values()
            .to_vec())
    };
    let values = table_values(cli, &ring, TableKind::N, compute)?;
    match cli.format {
        Format::Csv => {
            if even {
                eprintln!("note: n={n} is even; no field structure applies, counting over units only");
            }
            print!("{}", output::table_csv("t", "N", &values));
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::json!({
                    "kind": "ntable",
                    "structure": ring.descriptor(),
                    "n": n,
                    "even_modulus": even,
                    "values": output::table_map(&values),
                })
            );
        }
    }
    Ok(0)
}
