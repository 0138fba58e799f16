//! `salg` — exact splitting-algebra computations on the command line.
//!
//! Subcommands: `check` (decide whether the only symmetric invariants are
//! the base-ring constants), `invariants` (Howell basis of the invariant
//! module), `witness` (construct and verify a non-constant invariant when
//! one exists), and `selftest` (exhaustive cross-check of the condition
//! against brute-force linear algebra).

use clap::{Args, Parser, Subcommand, ValueEnum};
use salg_core::invariants::{condition_star, invariant_module, InvariantModule};
use salg_core::ring::{Ideal, Ring, RingElem};
use salg_core::splitalg::{AlgElem, Perm, SplitAlg};
use salg_core::witness::{build_witness, WitnessReport};
use serde_json::{json, Value};

const EXIT_INPUT: i32 = 2;
const EXIT_SIZE_CAP: i32 = 3;
const EXIT_MISMATCH: i32 = 4;

/// Largest instance count a single selftest (modulus, degree) pair may
/// enumerate.
const SELFTEST_INSTANCE_CAP: u128 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "salg",
    version,
    about = "Exact splitting-algebra computations over products of Z/m",
    long_about = "Constructs the splitting algebra of a monic polynomial over a \
finite product of residue rings Z/m, computes symmetric-group invariants by \
exact linear algebra, decides whether the only invariants are the base-ring \
constants, and constructs a verified non-constant invariant when one exists."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the only symmetric invariants are the constants
    Check(CheckArgs),
    /// Print a Howell basis of the invariant module per ring factor
    Invariants(InvariantsArgs),
    /// Construct and verify a non-constant invariant when one exists
    Witness(InstanceArgs),
    /// Cross-check the annihilator condition against brute force
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// Base ring, e.g. "Z/12" or "Z/4xZ/3"
    #[arg(long)]
    ring: String,
    /// Coefficients a_1,...,a_n of f = t^n + a_1 t^(n-1) + ... + a_n
    #[arg(long)]
    coeffs: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Acting group (only the full symmetric group "Sn" is supported)
    #[arg(long, default_value = "Sn")]
    group: String,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Claimed roots r1,...,rn; verified to satisfy f = (t-r1)...(t-rn)
    #[arg(long)]
    roots: Option<String>,
}

#[derive(Args)]
struct InvariantsArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Size cap on the polynomial degree (the module is n! columns wide)
    #[arg(long, default_value_t = 6)]
    max_degree: usize,
}

#[derive(Args)]
struct SelftestArgs {
    /// Moduli to sweep: a range "a..b" (inclusive) or a list "a,b,c"
    #[arg(long, default_value = "2..12")]
    moduli: String,
    /// Polynomial degrees to sweep, e.g. "2,3"
    #[arg(long, default_value = "2,3")]
    degrees: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// An error carrying the process exit code to use.
struct Failure {
    message: String,
    code: i32,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            message: message.into(),
            code: EXIT_INPUT,
        }
    }

    fn size_cap(message: impl Into<String>) -> Failure {
        Failure {
            message: message.into(),
            code: EXIT_SIZE_CAP,
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(args) => cmd_check(&args),
        Command::Invariants(args) => cmd_invariants(&args),
        Command::Witness(args) => cmd_witness(&args),
        Command::Selftest(args) => cmd_selftest(&args),
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            std::process::exit(f.code);
        }
    }
}

/// Parses the ring spec, the coefficient list, and the group name, and
/// constructs the splitting algebra.
fn parse_instance(args: &InstanceArgs) -> Result<(Ring, Vec<RingElem>, SplitAlg), Failure> {
    let ring = Ring::parse(&args.ring).map_err(|e| Failure::input(e.to_string()))?;
    let coeffs = parse_ring_elems(&ring, &args.coeffs, "coefficient")?;
    if coeffs.is_empty() {
        return Err(Failure::input("at least one coefficient is required"));
    }
    validate_group(&args.group, coeffs.len())?;
    let alg = SplitAlg::construct(&ring, &coeffs).map_err(|e| Failure::input(e.to_string()))?;
    Ok((ring, coeffs, alg))
}

/// Parses a comma-separated list of integers into ring elements.
fn parse_ring_elems(ring: &Ring, list: &str, what: &str) -> Result<Vec<RingElem>, Failure> {
    list.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map(|v| ring.from_int(v))
                .map_err(|_| Failure::input(format!("invalid {what} {tok:?}: expected an integer")))
        })
        .collect()
}

/// Accepts only names for the full symmetric group: "Sn", "S_n" or the
/// explicit "S<degree>".
fn validate_group(group: &str, degree: usize) -> Result<(), Failure> {
    let rest = group
        .strip_prefix('S')
        .or_else(|| group.strip_prefix('s'))
        .map(|r| r.strip_prefix('_').unwrap_or(r));
    let ok = match rest {
        Some("n") => true,
        Some(digits) => digits
            .parse::<usize>()
            .map(|d| d == degree)
            .unwrap_or(false),
        None => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Failure::input(format!(
            "unsupported group {group:?}: only the full symmetric group (\"Sn\" or \"S{degree}\") is supported"
        )))
    }
}

fn verdict_str(holds: bool) -> &'static str {
    if holds {
        "only invariants are A"
    } else {
        "non-trivial invariants exist"
    }
}

// ---------------------------------------------------------------- JSON ---

fn json_ring_elem(e: &RingElem) -> Value {
    json!(e.residues())
}

fn json_ideal(i: &Ideal) -> Value {
    json!(i.generators())
}

fn json_alg_elem(x: &AlgElem) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(exps, coeff)| {
            json!({
                "exps": exps.exps(),
                "coeff": coeff.residues(),
            })
        })
        .collect();
    json!(terms)
}

fn json_witness(w: &WitnessReport) -> Value {
    let trail: Vec<Value> = w
        .trail
        .iter()
        .map(|step| {
            json!({
                "pair": [step.pair.0, step.pair.1],
                "product": json_alg_elem(&step.product),
            })
        })
        .collect();
    json!({
        "seed": json_ring_elem(&w.seed),
        "trail": trail,
        "x": json_alg_elem(&w.sigma_invariant),
        "multiplied_by_last_root": w.multiplied_by_last_root,
        "y": json_alg_elem(&w.witness),
        "verification": {
            "invariant": w.verification.invariant,
            "in_base": w.verification.in_base,
            "two_x_in_base": w.verification.stability.two_x_in_base,
            "d_f_x_in_base": w.verification.stability.d_f_x_in_base,
        },
    })
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

// ------------------------------------------------------------- commands ---

fn cmd_check(args: &CheckArgs) -> Result<i32, Failure> {
    let (ring, coeffs, alg) = parse_instance(&args.instance)?;
    let roots_verified = match &args.roots {
        None => None,
        Some(list) => {
            let roots = parse_ring_elems(&ring, list, "root")?;
            match alg.verify_roots(&roots) {
                Ok(true) => Some(true),
                Ok(false) => {
                    return Err(Failure::input("claimed roots do not factor the polynomial"))
                }
                Err(e) => return Err(Failure::input(e.to_string())),
            }
        }
    };
    let report = condition_star(&alg);
    match args.instance.format {
        Format::Text => {
            println!("ring: {ring}");
            println!("coeffs: {}", display_coeffs(&coeffs));
            if roots_verified == Some(true) {
                println!("roots: verified");
            }
            println!("d_f = {}", report.d_f);
            println!("ann2 = {}", report.ann2);
            println!("annD = {}", report.ann_d);
            println!("intersection = {}", report.intersection);
            println!("verdict: {}", verdict_str(report.holds));
        }
        Format::Json => {
            let mut v = json!({
                "ring": ring.to_string(),
                "coeffs": coeffs.iter().map(json_ring_elem).collect::<Vec<_>>(),
                "d_f": json_ring_elem(&report.d_f),
                "ann2": json_ideal(&report.ann2),
                "annD": json_ideal(&report.ann_d),
                "intersection": json_ideal(&report.intersection),
                "verdict": verdict_str(report.holds),
            });
            if let Some(ok) = roots_verified {
                v["roots_verified"] = json!(ok);
            }
            print_json(&v);
        }
    }
    Ok(0)
}

fn cmd_invariants(args: &InvariantsArgs) -> Result<i32, Failure> {
    let (ring, coeffs, alg) = parse_instance(&args.instance)?;
    let n = alg.degree();
    if n > args.max_degree {
        return Err(Failure::size_cap(format!(
            "degree {n} exceeds the size cap {} (the module has n! = {} columns); raise --max-degree to proceed",
            args.max_degree,
            (1..=n).product::<usize>(),
        )));
    }
    let module = invariant_module(&alg, &Perm::adjacent_transpositions(n))
        .map_err(|e| Failure::input(e.to_string()))?;
    match args.instance.format {
        Format::Text => {
            println!("ring: {ring}");
            println!("coeffs: {}", display_coeffs(&coeffs));
            for (f, basis) in module.factor_bases().iter().enumerate() {
                println!("factor Z/{}: rank {}", ring.factors()[f], basis.rank());
                for r in 0..basis.rank() {
                    let row = module.row_elem(f, r).expect("basis row renders");
                    println!("  {row}");
                }
            }
        }
        Format::Json => {
            print_json(&json_invariants(&ring, &coeffs, &module));
        }
    }
    Ok(0)
}

fn json_invariants(ring: &Ring, coeffs: &[RingElem], module: &InvariantModule) -> Value {
    let basis: Vec<Value> = module
        .factor_bases()
        .iter()
        .enumerate()
        .map(|(f, b)| {
            let rows: Vec<Value> = (0..b.rank())
                .map(|r| json_alg_elem(&module.row_elem(f, r).expect("basis row renders")))
                .collect();
            json!(rows)
        })
        .collect();
    json!({
        "ring": ring.to_string(),
        "coeffs": coeffs.iter().map(json_ring_elem).collect::<Vec<_>>(),
        "basis": basis,
        "rank": module.ranks(),
    })
}

fn cmd_witness(args: &InstanceArgs) -> Result<i32, Failure> {
    let (ring, coeffs, alg) = parse_instance(args)?;
    let witness = build_witness(&alg).map_err(|e| Failure::input(e.to_string()))?;
    match args.format {
        Format::Text => {
            println!("ring: {ring}");
            println!("coeffs: {}", display_coeffs(&coeffs));
            match &witness {
                None => println!("condition holds — no witness exists"),
                Some(w) => {
                    println!("seed: {}", w.seed);
                    println!("descent:");
                    for step in &w.trail {
                        println!("  ({},{}) -> {}", step.pair.0, step.pair.1, step.product);
                    }
                    let suffix = if w.multiplied_by_last_root {
                        "  (multiplied by the last root)"
                    } else {
                        ""
                    };
                    println!("x = {}{suffix}", w.sigma_invariant);
                    println!("y = {}", w.witness);
                    println!(
                        "verification: invariant={}, in_base={}, 2y in A={}, d_f*y in A={}",
                        w.verification.invariant,
                        w.verification.in_base,
                        w.verification.stability.two_x_in_base,
                        w.verification.stability.d_f_x_in_base,
                    );
                }
            }
        }
        Format::Json => {
            let v = json!({
                "ring": ring.to_string(),
                "coeffs": coeffs.iter().map(json_ring_elem).collect::<Vec<_>>(),
                "verdict": verdict_str(witness.is_none()),
                "witness": witness.as_ref().map(json_witness).unwrap_or(Value::Null),
            });
            print_json(&v);
        }
    }
    Ok(0)
}

fn display_coeffs(coeffs: &[RingElem]) -> String {
    let parts: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

// ------------------------------------------------------------- selftest ---

struct SelftestCell {
    modulus: u64,
    degree: usize,
    instances: u64,
    holds: u64,
    witnesses: u64,
    mismatches: u64,
}

fn cmd_selftest(args: &SelftestArgs) -> Result<i32, Failure> {
    let moduli = parse_moduli(&args.moduli)?;
    let degrees = parse_degrees(&args.degrees)?;
    let mut cells = Vec::new();
    for &m in &moduli {
        for &d in &degrees {
            let count = (m as u128).pow(d as u32);
            if count > SELFTEST_INSTANCE_CAP {
                return Err(Failure::size_cap(format!(
                    "modulus {m}, degree {d} needs {count} instances (cap {SELFTEST_INSTANCE_CAP})"
                )));
            }
            if d > 6 {
                return Err(Failure::size_cap(format!(
                    "degree {d} exceeds the size cap 6 (the module has n! columns)"
                )));
            }
            cells.push(selftest_cell(m, d)?);
        }
    }
    let total_instances: u64 = cells.iter().map(|c| c.instances).sum();
    let total_mismatches: u64 = cells.iter().map(|c| c.mismatches).sum();
    match args.format {
        Format::Text => {
            for c in &cells {
                println!(
                    "modulus {}, degree {}: instances={}, condition holds={}, witnesses={}, mismatches={}",
                    c.modulus, c.degree, c.instances, c.holds, c.witnesses, c.mismatches
                );
            }
            println!("total: instances={total_instances}, mismatches={total_mismatches}");
        }
        Format::Json => {
            let results: Vec<Value> = cells
                .iter()
                .map(|c| {
                    json!({
                        "modulus": c.modulus,
                        "degree": c.degree,
                        "instances": c.instances,
                        "holds": c.holds,
                        "witnesses": c.witnesses,
                        "mismatches": c.mismatches,
                    })
                })
                .collect();
            print_json(&json!({
                "results": results,
                "total_instances": total_instances,
                "total_mismatches": total_mismatches,
            }));
        }
    }
    Ok(if total_mismatches == 0 {
        0
    } else {
        EXIT_MISMATCH
    })
}

/// Sweeps every monic degree-`d` polynomial over `Z/m` (coefficients in
/// ascending lexicographic order, so the report is deterministic): the
/// annihilator condition must agree with brute-force linear algebra, and
/// every failing instance must yield a verified witness.
fn selftest_cell(m: u64, d: usize) -> Result<SelftestCell, Failure> {
    let ring = Ring::new(vec![m]).map_err(|e| Failure::input(e.to_string()))?;
    let gens = Perm::adjacent_transpositions(d);
    let mut cell = SelftestCell {
        modulus: m,
        degree: d,
        instances: 0,
        holds: 0,
        witnesses: 0,
        mismatches: 0,
    };
    let mut coeffs = vec![0u64; d];
    loop {
        let elems: Vec<RingElem> = coeffs.iter().map(|&c| ring.from_int(c as i64)).collect();
        cell.instances += 1;
        let consistent = (|| -> Option<bool> {
            let alg = SplitAlg::construct(&ring, &elems).ok()?;
            let holds = condition_star(&alg).holds;
            let brute = invariant_module(&alg, &gens).ok()?;
            if holds {
                cell.holds += 1;
            }
            if holds != brute.is_constants_only() {
                return Some(false);
            }
            match build_witness(&alg).ok()? {
                Some(w) => {
                    if holds || !brute.contains(&alg, &w.witness).ok()? {
                        return Some(false);
                    }
                    cell.witnesses += 1;
                }
                None => {
                    if !holds {
                        return Some(false);
                    }
                }
            }
            Some(true)
        })();
        if consistent != Some(true) {
            cell.mismatches += 1;
        }
        // next coefficient tuple, last coefficient fastest
        let mut k = d;
        loop {
            if k == 0 {
                return Ok(cell);
            }
            coeffs[k - 1] += 1;
            if coeffs[k - 1] < m {
                break;
            }
            coeffs[k - 1] = 0;
            k -= 1;
        }
    }
}

fn parse_moduli(spec: &str) -> Result<Vec<u64>, Failure> {
    let spec = spec.trim();
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: u64 = lo
            .trim()
            .parse()
            .map_err(|_| Failure::input(format!("invalid modulus range start {lo:?}")))?;
        let hi: u64 = hi
            .trim()
            .parse()
            .map_err(|_| Failure::input(format!("invalid modulus range end {hi:?}")))?;
        if lo < 2 || hi < lo {
            return Err(Failure::input(format!(
                "modulus range {spec:?} must satisfy 2 <= start <= end"
            )));
        }
        return Ok((lo..=hi).collect());
    }
    let list: Result<Vec<u64>, Failure> = spec
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| Failure::input(format!("invalid modulus {tok:?}")))
        })
        .collect();
    let list = list?;
    if list.iter().any(|&m| m < 2) {
        return Err(Failure::input("moduli must be at least 2"));
    }
    Ok(list)
}

fn parse_degrees(spec: &str) -> Result<Vec<usize>, Failure> {
    let list: Result<Vec<usize>, Failure> = spec
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Failure::input(format!("invalid degree {tok:?}")))
        })
        .collect();
    let list = list?;
    if list.contains(&0) {
        return Err(Failure::input("degrees must be at least 1"));
    }
    Ok(list)
}
