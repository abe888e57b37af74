//! `adder2d`: generate 2D nearest-neighbor adders, verify them, and report
//! their depths.
//!
//! Exit status: 0 on success, 1 when a verification fails (a JSON failure
//! record is printed), 2 on a usage error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use adder2d::adder::{assemble, AdderParams, Evaluation};
use adder2d::blocks::Variant;
use adder2d::decompose::{verify_toffoli, DecompositionScheme, ToffoliCheck};
use adder2d::ir::GateKind;
use adder2d::layout::{build_layout, exact_sqrt};
use adder2d::qec::{adder_reduction_ratio, counts_by_level, physical_gate_count, QecParams};
use adder2d::schedule::{check_depths, CostModel};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

/// Largest width swept exhaustively (2^18 pairs at n = 9).
const EXHAUSTIVE_LIMIT: usize = 9;

#[derive(Parser)]
#[command(name = "adder2d", version, about = "2D nearest-neighbor quantum adders")]
struct Cli {
    /// Print a single JSON document instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an adder and write its gate list.
    Generate {
        #[arg(long, value_parser = parse_width)]
        n: usize,
        #[arg(long, default_value = "optimized")]
        variant: Variant,
        #[arg(long, default_value = "standard")]
        scheme: DecompositionScheme,
        /// Expand every Toffoli into Clifford+T gates.
        #[arg(long)]
        expand: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check both variants against (a + b) mod 2^n.
    Verify {
        #[arg(long, value_parser = parse_width)]
        n: usize,
        #[arg(long, value_enum, default_value_t = VerifyMode::Exhaustive)]
        mode: VerifyMode,
        /// Pairs drawn in random mode.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Depth report.
    Depth {
        #[arg(long, value_parser = parse_width)]
        n: usize,
        #[arg(long, default_value = "optimized")]
        variant: Variant,
        #[arg(long, default_value = "t14s1")]
        cost_model: CostModel,
        #[arg(long, value_enum, default_value_t = DepthMode::Paper)]
        mode: DepthMode,
    },
    /// Compare Toffoli decompositions with the 8x8 Toffoli permutation.
    DecompCheck {
        /// One scheme; all three when absent.
        #[arg(long)]
        scheme: Option<DecompositionScheme>,
    },
    /// Physical gate count N_U * N_E^L of a concatenated code.
    Qec {
        #[arg(long)]
        nu: u64,
        #[arg(long)]
        ne: u64,
        #[arg(long)]
        level: u32,
        /// Also report the optimized/baseline ratios at this width.
        #[arg(long, value_parser = parse_width)]
        n: Option<usize>,
    },
    /// Write the grid layout as JSON.
    ExportLayout {
        #[arg(long, value_parser = parse_width)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Qasm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyMode {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DepthMode {
    /// Block depths summed along the critical block chain.
    Paper,
    /// ASAP schedule of the assembled circuit.
    Free,
}

fn parse_width(s: &str) -> Result<usize, String> {
    let n: usize = s.parse().map_err(|_| format!("{s:?} is not an integer"))?;
    match exact_sqrt(n) {
        Some(m) if m >= 2 => Ok(n),
        _ => Err(format!("{n} is not a perfect square >= 4")),
    }
}

enum Failure {
    Usage(String),
    Verification(Value),
}

impl From<adder2d::error::Error> for Failure {
    fn from(e: adder2d::error::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn emit(out: Option<&PathBuf>, text: &str) -> Outcome {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("writing {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json serializes"));
}

fn generate(
    json_out: bool,
    n: usize,
    variant: Variant,
    scheme: DecompositionScheme,
    expand: bool,
    format: Format,
    out: Option<PathBuf>,
) -> Outcome {
    let mut params = AdderParams::new(n, variant);
    if expand {
        params = params.expanded(scheme);
    }
    let ad = assemble(params)?;
    let text = match format {
        Format::Text => ad.circuit.to_text(),
        Format::Qasm => ad.circuit.to_qasm(),
    };
    if json_out {
        if let Some(p) = &out {
            emit(Some(p), &text)?;
        }
        let counts: serde_json::Map<String, Value> =
            GateKind::ALL.iter().map(|&k| (k.name().to_string(), json!(ad.circuit.count(k)))).collect();
        print_json(&json!({
            "n": n,
            "variant": variant,
            "scheme": scheme,
            "expand": expand,
            "qubits": ad.circuit.n_qubits,
            "gates": ad.circuit.len(),
            "counts": counts,
            "io_map": ad.io_map,
            "out": out,
        }));
        Ok(())
    } else {
        emit(out.as_ref(), &text)
    }
}

fn verify(json_out: bool, n: usize, mode: VerifyMode, samples: usize, seed: u64) -> Outcome {
    let pairs: Vec<(u64, u64)> = match mode {
        VerifyMode::Exhaustive => {
            if n > EXHAUSTIVE_LIMIT {
                return Err(Failure::Usage(format!(
                    "exhaustive mode supports n <= {EXHAUSTIVE_LIMIT}; use --mode random"
                )));
            }
            let side = 1u64 << n;
            (0..side * side).map(|x| (x % side, x / side)).collect()
        }
        VerifyMode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..samples).map(|_| (rng.gen_range(0..1u64 << n), rng.gen_range(0..1u64 << n))).collect()
        }
    };
    let base = assemble(AdderParams::new(n, Variant::Baseline))?;
    let opt = assemble(AdderParams::new(n, Variant::Optimized))?;
    let results: Vec<(Evaluation, Evaluation)> = pairs
        .par_iter()
        .map(|&(a, b)| Ok((base.evaluate(a, b)?, opt.evaluate(a, b)?)))
        .collect::<adder2d::error::Result<_>>()?;
    let fail = |pick: fn(&(Evaluation, Evaluation)) -> Evaluation| -> Vec<Evaluation> {
        results.iter().map(pick).filter(|e| !e.ok()).collect()
    };
    let base_fail = fail(|r| r.0);
    let opt_fail = fail(|r| r.1);
    let disagree: Vec<(u64, u64)> =
        results.iter().filter(|(x, y)| x.sum != y.sum).map(|(x, _)| (x.a, x.b)).collect();
    let mode_name = if mode == VerifyMode::Exhaustive { "exhaustive" } else { "random" };
    let record = json!({
        "command": "verify",
        "n": n,
        "mode": mode_name,
        "seed": (mode == VerifyMode::Random).then_some(seed),
        "pairs": pairs.len(),
        "baseline_failures": base_fail.len(),
        "optimized_failures": opt_fail.len(),
        "disagreements": disagree.len(),
        "first_failures": {
            "baseline": base_fail.iter().take(10).collect::<Vec<_>>(),
            "optimized": opt_fail.iter().take(10).collect::<Vec<_>>(),
            "disagree": disagree.iter().take(10).collect::<Vec<_>>(),
        },
    });
    if !base_fail.is_empty() || !opt_fail.is_empty() || !disagree.is_empty() {
        return Err(Failure::Verification(record));
    }
    if json_out {
        print_json(&record);
    } else {
        println!("verify n={n} {mode_name}: {} pairs", pairs.len());
        println!("baseline   0 failures");
        println!("optimized  0 failures");
        println!("variants agree on every pair");
    }
    Ok(())
}

fn depth(json_out: bool, n: usize, variant: Variant, cost: CostModel, mode: DepthMode) -> Outcome {
    let r = check_depths(n, variant, &cost)?;
    let total = match mode {
        DepthMode::Paper => r.total_sequential,
        DepthMode::Free => r.total_asap as i64,
    };
    if json_out {
        let mut v = serde_json::to_value(&r).expect("report serializes");
        v["mode"] = json!(if mode == DepthMode::Paper { "paper" } else { "free" });
        v["total"] = json!(total);
        print_json(&v);
    } else {
        print!("{}", r.to_table());
        let label = if mode == DepthMode::Paper { "block sum" } else { "free" };
        println!("\ntotal ({label}) {total}");
        if let Some(f) = r.formula_expected {
            println!("published formula {f}");
        }
    }
    Ok(())
}

fn decomp_check(json_out: bool, scheme: Option<DecompositionScheme>) -> Outcome {
    let schemes = scheme.map_or(DecompositionScheme::ALL.to_vec(), |s| vec![s]);
    let checks: Vec<ToffoliCheck> = schemes.into_iter().map(verify_toffoli).collect();
    let ok = checks.iter().all(|c| c.ok);
    let record = json!({ "command": "decomp-check", "ok": ok, "checks": checks });
    if !ok {
        return Err(Failure::Verification(record));
    }
    if json_out {
        print_json(&record);
    } else {
        println!("{:<10} {:>6} {:>6} {:>6} {:>12}", "scheme", "cnot", "swap", "t", "max error");
        for c in &checks {
            println!(
                "{:<10} {:>6} {:>6} {:>6} {:>12.3e}",
                c.scheme.name(),
                c.cnots,
                c.swaps,
                c.t_count,
                c.max_error
            );
        }
    }
    Ok(())
}

fn qec(json_out: bool, nu: u64, ne: u64, level: u32, n: Option<usize>) -> Outcome {
    let count = physical_gate_count(QecParams { n_u: nu, n_e: ne, level });
    let levels: Vec<String> = counts_by_level(nu, ne, level).iter().map(|c| c.to_string()).collect();
    let ratio = n.map(|n| adder_reduction_ratio(n, &CostModel::T14S1)).transpose()?;
    if json_out {
        print_json(&json!({
            "n_u": nu,
            "n_e": ne,
            "level": level,
            "physical_gates": count.to_string(),
            "by_level": levels,
            "ratio": ratio,
        }));
    } else {
        println!("N_U={nu} N_E={ne} L={level}: {count} physical gates");
        for (l, c) in levels.iter().enumerate() {
            println!("  level {l}: {c}");
        }
        if let Some(r) = ratio {
            println!(
                "n={}: depth coefficients {}/{} = {}, gates {}/{} = {}",
                r.n,
                r.optimized_coefficient,
                r.baseline_coefficient,
                r.depth_ratio,
                r.optimized_gates,
                r.baseline_gates,
                r.gate_ratio
            );
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Generate { n, variant, scheme, expand, format, out } => {
            generate(cli.json, n, variant, scheme, expand, format, out)
        }
        Command::Verify { n, mode, samples, seed } => verify(cli.json, n, mode, samples, seed),
        Command::Depth { n, variant, cost_model, mode } => depth(cli.json, n, variant, cost_model, mode),
        Command::DecompCheck { scheme } => decomp_check(cli.json, scheme),
        Command::Qec { nu, ne, level, n } => qec(cli.json, nu, ne, level, n),
        Command::ExportLayout { n, out } => emit(out.as_ref(), &(build_layout(n)?.to_json() + "\n")),
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("ADDER2D_THREADS") else {
        return Ok(());
    };
    let threads: usize = v
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or(format!("ADDER2D_THREADS={v:?} is not a positive integer"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(record)) => {
            print_json(&json!({ "status": "fail", "record": record }));
            ExitCode::from(1)
        }
    }
}
