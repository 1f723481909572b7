//! Command-line front end for the ladder cluster simulator.
//!
//! Exit codes: 0 on success, 1 on usage or validation errors, 2 on numerical
//! failures. Sweep output goes to `--out` as CSV (written to a temp file and
//! renamed into place) or to stdout when no path is given. The
//! `LADDERFLOW_THREADS` environment variable caps worker parallelism.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use ladderflow::config::{parse_angle, SweepConfig, SweepMode};
use ladderflow::csv::{write_csv, write_csv_file, CsvMeta};
use ladderflow::{fixed_sweep, random_sweep, trend_report, DriverError};
use ladderflow_core::cluster::{measurement_cascade, prepare_cluster, LadderGraph};
use ladderflow_core::correl::{concurrence, discord, Subsystem};
use ladderflow_core::experiments::Preset;
use ladderflow_core::pauli::{paper_generators, pauli_expectation, stabilizer_census};
use ladderflow_core::qstate::{DensityMatrix, MeasurementSpec, StateVector};

#[derive(Parser)]
#[command(
    name = "ladderflow",
    version,
    about = "Ladder cluster states under X-Y-plane measurements: discord and concurrence of the last rung"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Random-angle sweep: per sample, draw all n-3 angles and average the
    /// correlations over every outcome branch; writes CSV
    Sweep(SweepArgs),
    /// Fixed-angle sweep: keep phi_1..phi_{n-4} fixed and grid phi_{n-3}
    /// over [0, 2pi); writes CSV
    Fixed(FixedArgs),
    /// Evaluate one configuration and print a human-readable report
    Single(SingleArgs),
    /// Check the tabulated transformed generators against simulation
    VerifyGenerators(VerifyGeneratorsArgs),
    /// Count stabilizing Pauli strings of post-measurement branches
    Census(CensusArgs),
    /// Summarize fixed sweeps across ladder sizes
    Trend(TrendArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Ladder size (even, >= 4) [default: from --config]
    #[arg(long)]
    n: Option<u32>,
    /// Number of random angle tuples [default: 500]
    #[arg(long)]
    samples: Option<usize>,
    /// RNG seed for the angle draws [default: 0]
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV path [default: stdout]
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON config file mirroring the sweep keys; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct FixedArgs {
    /// Ladder size (even, >= 4) [default: from --config]
    #[arg(long)]
    n: Option<u32>,
    /// Named preset supplying phi_1..phi_{n-4}: example1 or example2
    #[arg(long)]
    preset: Option<String>,
    /// Explicit fixed angles phi_1..phi_{n-4}, comma-separated; accepts
    /// radians or pi-multiples like 0.37pi; overrides --preset
    #[arg(long)]
    angles: Option<String>,
    /// Grid resolution for phi_{n-3} over [0, 2pi) [default: 256]
    #[arg(long)]
    grid: Option<usize>,
    /// Seed recorded in the CSV header [default: 0]
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV path [default: stdout]
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON config file mirroring the sweep keys; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct SingleArgs {
    /// Ladder size (even, >= 4)
    #[arg(long)]
    n: u32,
    /// All n-3 measurement angles, comma-separated; radians or pi-multiples
    #[arg(long)]
    angles: String,
    /// "avg" to average over\u{20}all outcome branches, or explicit bits like 0,1,0
    #[arg(long, default_value = "avg")]
    outcomes: String,
    /// Measure only qubits 1..k instead of 1..n-3
    #[arg(long)]
    measure_first: Option<usize>,
}

#[derive(Args)]
struct VerifyGeneratorsArgs {
    /// Ladder size with tabulated generators: 4 or 6
    #[arg(long)]
    n: u32,
    /// Random angle/outcome tuples to test
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// RNG seed for the trials
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct CensusArgs {
    /// Ladder size (even, >= 4)
    #[arg(long)]
    n: u32,
    /// All n-3 measurement angles, comma-separated; radians or pi-multiples
    #[arg(long)]
    angles: String,
    /// Explicit outcome bits; all 2^(n-3) branches when omitted
    #[arg(long)]
    outcomes: Option<String>,
}

#[derive(Args)]
struct TrendArgs {
    /// Preset to sweep: example1 or example2
    #[arg(long)]
    preset: String,
    /// Grid resolution per ladder size
    #[arg(long, default_value_t = 256)]
    grid: usize,
    /// Ladder sizes, comma-separated
    #[arg(long, default_value = "4,6,8,10")]
    sizes: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are successes, not usage errors
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    if let Err(e) = install_thread_pool() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }

    let result = match cli.command {
        Command::Sweep(args) => run_sweep(args),
        Command::Fixed(args) => run_fixed(args),
        Command::Single(args) => run_single(args),
        Command::VerifyGenerators(args) => run_verify_generators(args),
        Command::Census(args) => run_census(args),
        Command::Trend(args) => run_trend(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Honor LADDERFLOW_THREADS; machine parallelism otherwise.
fn install_thread_pool() -> Result<(), DriverError> {
    if let Ok(value) = std::env::var("LADDERFLOW_THREADS") {
        let threads: usize = value
            .parse()
            .map_err(|_| DriverError::Config(format!("LADDERFLOW_THREADS='{value}' is not a thread count")))?;
        if threads == 0 {
            return Err(DriverError::Config(String::from("LADDERFLOW_THREADS must be >= 1")));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| DriverError::Config(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn load_config(
    path: Option<&PathBuf>,
    n: Option<u32>,
    mode: SweepMode,
) -> Result<SweepConfig, DriverError> {
    let mut config = match path {
        Some(p) => SweepConfig::from_json(&fs::read_to_string(p)?)?,
        None => SweepConfig {
            n: n.ok_or_else(|| DriverError::Config(String::from("--n is required (or provide --config)")))?,
            mode,
            samples: 500,
            grid_points: 256,
            preset: None,
            angles: None,
            seed: 0,
            output_path: None,
        },
    };
    config.mode = mode;
    if let Some(n) = n {
        config.n = n;
    }
    Ok(config)
}

fn emit_csv(config: &SweepConfig, meta: &CsvMeta, records: &[ladderflow_core::experiments::SweepRecord]) -> Result<(), DriverError> {
    match &config.output_path {
        Some(path) => write_csv_file(path, meta, records)?,
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write_csv(&mut lock, meta, records)?;
            lock.flush()?;
        }
    }
    Ok(())
}

fn run_sweep(args: SweepArgs) -> Result<(), DriverError> {
    let mut config = load_config(args.config.as_ref(), args.n, SweepMode::Random)?;
    if let Some(samples) = args.samples {
        config.samples = samples;
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if let Some(out) = args.out {
        config.output_path = Some(out);
    }
    let records = random_sweep(&config)?;
    let meta = CsvMeta {
        seed: config.seed,
        n: config.n,
        mode: String::from(SweepMode::Random.name()),
        extras: vec![],
    };
    emit_csv(&config, &meta, &records)
}

fn run_fixed(args: FixedArgs) -> Result<(), DriverError> {
    let mut config = load_config(args.config.as_ref(), args.n, SweepMode::Fixed)?;
    if let Some(grid) = args.grid {
        config.grid_points = grid;
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if let Some(preset) = args.preset {
        config.preset = Some(preset);
        config.angles = None;
    }
    if let Some(list) = args.angles {
        config.angles = Some(split_angle_args(&list)?);
    }
    if let Some(out) = args.out {
        config.output_path = Some(out);
    }
    let records = fixed_sweep(&config)?;

    let mut extras = Vec::new();
    if let (Some(name), None) = (&config.preset, &config.angles) {
        extras.push((String::from("preset"), name.clone()));
        if let Some(preset) = Preset::parse(name) {
            let in_pi: Vec<String> = preset
                .angles_in_pi_units(config.n)?
                .iter()
                .map(|x| format!("{x}pi"))
                .collect();
            if !in_pi.is_empty() {
                extras.push((String::from("fixed_angles"), in_pi.join(",")));
            }
        }
    } else {
        let fixed = config.fixed_angles()?;
        if !fixed.is_empty() {
            let rendered: Vec<String> =
                fixed.iter().map(|x| ladderflow::csv::format_value(*x)).collect();
            extras.push((String::from("fixed_angles"), rendered.join(",")));
        }
    }
    let meta = CsvMeta {
        seed: config.seed,
        n: config.n,
        mode: String::from(SweepMode::Fixed.name()),
        extras,
    };
    emit_csv(&config, &meta, &records)
}

fn split_angle_args(list: &str) -> Result<Vec<ladderflow::AngleArg>, DriverError> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| Ok(ladderflow::AngleArg::Text(String::from(s.trim()))))
        .collect()
}

fn parse_angle_list(list: &str, expected: usize, what: &str) -> Result<Vec<f64>, DriverError> {
    let angles: Vec<f64> = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(parse_angle)
        .collect::<Result<_, _>>()?;
    if angles.len() != expected {
        return Err(DriverError::Config(format!(
            "{what} takes {expected} angles, got {}",
            angles.len()
        )));
    }
    Ok(angles)
}

fn parse_outcome_list(list: &str, expected: usize) -> Result<Vec<u8>, DriverError> {
    let outcomes: Vec<u8> = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| match s.trim() {
            "0" => Ok(0u8),
            "1" => Ok(1u8),
            other => Err(DriverError::Config(format!("outcome '{other}' is not a bit"))),
        })
        .collect::<Result<_, _>>()?;
    if outcomes.len() != expected {
        return Err(DriverError::Config(format!(
            "expected {expected} outcome bits, got {}",
            outcomes.len()
        )));
    }
    Ok(outcomes)
}

fn specs_for(angles: &[f64], outcomes: &[u8]) -> Result<Vec<MeasurementSpec>, DriverError> {
    Ok(angles
        .iter()
        .zip(outcomes.iter())
        .enumerate()
        .map(|(i, (&a, &s))| MeasurementSpec::new(i as u32 + 1, a, s))
        .collect::<Result<_, _>>()
        .map_err(DriverError::Core)?)
}

fn print_density_matrix(rho: &DensityMatrix) {
    println!("reduced state of qubits {:?}:", rho.labels());
    for r in 0..rho.dim() {
        let row: Vec<String> = (0..rho.dim())
            .map(|c| {
                let z = rho.entry(r, c);
                format!("{:+.6}{:+.6}i", z.re, z.im)
            })
            .collect();
        println!("  [ {} ]", row.join("  "));
    }
}

fn print_branch_report(
    post: &StateVector,
    probability: f64,
    rho: &DensityMatrix,
) -> Result<(), DriverError> {
    println!("branch probability: {probability:.12}");
    print_density_matrix(rho);
    let d_last = discord(rho, Subsystem::B).map_err(DriverError::Core)?;
    let d_second = discord(rho, Subsystem::A).map_err(DriverError::Core)?;
    println!(
        "D_meas_last       = {:.6}  (basis theta={:.6}, alpha={:.6})",
        d_last.value, d_last.optimal_basis.theta, d_last.optimal_basis.alpha
    );
    println!(
        "D_meas_secondlast = {:.6}  (basis theta={:.6}, alpha={:.6})",
        d_second.value, d_second.optimal_basis.theta, d_second.optimal_basis.alpha
    );
    println!("concurrence       = {:.6}", concurrence(rho).map_err(DriverError::Core)?);
    if post.num_qubits() <= 8 {
        let report = stabilizer_census(post).map_err(DriverError::Core)?;
        println!(
            "census: {} unit-magnitude Pauli strings over {} qubits; stabilizer state: {}",
            report.count,
            post.num_qubits(),
            report.is_stabilizer
        );
    } else {
        println!("census: skipped (register larger than 8 qubits)");
    }
    Ok(())
}

fn run_single(args: SingleArgs) -> Result<(), DriverError> {
    let graph = LadderGraph::new(args.n).map_err(DriverError::Core)?;
    let m = args.n as usize - 3;
    let angles = parse_angle_list(&args.angles, m, "single")?;
    let measured = args.measure_first.unwrap_or(m);
    if measured == 0 || measured > m {
        return Err(DriverError::Config(format!(
            "--measure-first must be between 1 and {m}"
        )));
    }
    let cluster = prepare_cluster(&graph);
    let keep = [args.n - 1, args.n];

    if args.outcomes == "avg" {
        let mut acc = [0.0f64; 3];
        let mut weight = 0.0;
        let mut branches = 0u32;
        let mut stabilizer_branches = 0u32;
        let mut census_available = true;
        for branch in 0..1u32 << measured {
            let outcomes: Vec<u8> =
                (0..measured).map(|i| ((branch >> (measured - 1 - i)) & 1) as u8).collect();
            let specs = specs_for(&angles[..measured], &outcomes)?;
            let (p, post) = match measurement_cascade(&cluster, &specs) {
                Ok(v) => v,
                Err(ladderflow_core::Error::ZeroProbabilityBranch) => continue,
                Err(e) => return Err(DriverError::Core(e)),
            };
            let rho = post.partial_trace(&keep).map_err(DriverError::Core)?;
            acc[0] += p * discord(&rho, Subsystem::B).map_err(DriverError::Core)?.value;
            acc[1] += p * discord(&rho, Subsystem::A).map_err(DriverError::Core)?.value;
            acc[2] += p * concurrence(&rho).map_err(DriverError::Core)?;
            if post.num_qubits() <= 8 {
                if stabilizer_census(&post).map_err(DriverError::Core)?.is_stabilizer {
                    stabilizer_branches += 1;
                }
            } else {
                census_available = false;
            }
            weight += p;
            branches += 1;
        }
        if weight <= 0.0 {
            return Err(DriverError::Core(ladderflow_core::Error::NumericalFailure(
                String::from("every outcome branch had zero probability"),
            )));
        }
        println!(
            "n={} angles=[{}] measured qubits 1..{measured}, averaged over {branches} branches",
            args.n,
            angles.iter().map(|a| format!("{a:.6}")).collect::<Vec<_>>().join(", ")
        );
        println!("D_meas_last       = {:.6}", acc[0] / weight);
        println!("D_meas_secondlast = {:.6}", acc[1] / weight);
        println!("concurrence       = {:.6}", acc[2] / weight);
        if census_available {
            println!("census: stabilizer on {stabilizer_branches}/{branches} branches");
        } else {
            println!("census: skipped (register larger than 8 qubits)");
        }
        // the reduced state is branch-independent only in special cases, but
        // the last branch's register shape applies to all: print the averaged
        // reduced state for inspection
        let averaged = average_reduced_state(&cluster, &angles[..measured], measured, &keep)?;
        print_density_matrix(&averaged);
    } else {
        let outcomes = parse_outcome_list(&args.outcomes, measured)?;
        let specs = specs_for(&angles[..measured], &outcomes)?;
        let (p, post) = measurement_cascade(&cluster, &specs).map_err(DriverError::Core)?;
        let rho = post.partial_trace(&keep).map_err(DriverError::Core)?;
        println!(
            "n={} angles=[{}] outcomes={:?}",
            args.n,
            angles.iter().map(|a| format!("{a:.6}")).collect::<Vec<_>>().join(", "),
            outcomes
        );
        print_branch_report(&post, p, &rho)?;
    }
    Ok(())
}

/// Probability-weighted average of the reduced output states over branches.
fn average_reduced_state(
    cluster: &StateVector,
    angles: &[f64],
    measured: usize,
    keep: &[u32],
) -> Result<DensityMatrix, DriverError> {
    let mut acc = ladderflow_core::linalg::CMatrix::zeros(1 << keep.len());
    let mut weight = 0.0;
    for branch in 0..1u32 << measured {
        let outcomes: Vec<u8> =
            (0..measured).map(|i| ((branch >> (measured - 1 - i)) & 1) as u8).collect();
        let specs = specs_for(angles, &outcomes)?;
        let (p, post) = match measurement_cascade(cluster, &specs) {
            Ok(v) => v,
            Err(ladderflow_core::Error::ZeroProbabilityBranch) => continue,
            Err(e) => return Err(DriverError::Core(e)),
        };
        let rho = post.partial_trace(keep).map_err(DriverError::Core)?;
        for r in 0..acc.dim() {
            for c in 0..acc.dim() {
                acc.set(r, c, acc.get(r, c) + rho.entry(r, c) * p);
            }
        }
        weight += p;
    }
    let scaled = acc.scale(ladderflow_core::Complex64::new(1.0 / weight, 0.0));
    DensityMatrix::new(keep.to_vec(), scaled).map_err(DriverError::Core)
}

fn run_verify_generators(args: VerifyGeneratorsArgs) -> Result<(), DriverError> {
    if args.n != 4 && args.n != 6 {
        return Err(DriverError::Config(String::from(
            "transformed generators are tabulated for --n 4 and --n 6",
        )));
    }
    let m = (args.n - 3) as usize;
    let graph = LadderGraph::new(args.n).map_err(DriverError::Core)?;
    let cluster = prepare_cluster(&graph);
    let mut rng = ChaCha12Rng::seed_from_u64(args.seed);
    let mut worst: f64 = 0.0;
    let mut first_rendered: Option<Vec<String>> = None;
    for _ in 0..args.trials {
        let angles: Vec<f64> =
            (0..m).map(|_| rng.random_range(0.0..core::f64::consts::TAU)).collect();
        let outcomes: Vec<u8> = (0..m).map(|_| rng.random_range(0..=1u8)).collect();
        let specs = specs_for(&angles, &outcomes)?;
        let (_, post) = measurement_cascade(&cluster, &specs).map_err(DriverError::Core)?;
        let generators =
            paper_generators(args.n, &angles, &outcomes).map_err(DriverError::Core)?;
        let labels: Vec<u32> = post.labels().to_vec();
        if first_rendered.is_none() {
            first_rendered = Some(generators.iter().map(|g| g.render(&labels)).collect());
        }
        for generator in &generators {
            let e = pauli_expectation(&post, generator).map_err(DriverError::Core)?;
            worst = worst.max((e - 1.0).abs());
        }
    }
    println!("n={} trials={} worst |<g>-1| = {:.3e}", args.n, args.trials, worst);
    if let Some(rendered) = first_rendered {
        println!("sample transformed generators (first trial):");
        for line in rendered {
            println!("  {line}");
        }
    }
    if worst < 1e-10 {
        println!("PASS: every transformed generator stabilizes its simulated branch");
        Ok(())
    } else {
        Err(DriverError::Core(ladderflow_core::Error::NumericalFailure(format!(
            "generator expectation deviates by {worst:e}"
        ))))
    }
}

fn run_census(args: CensusArgs) -> Result<(), DriverError> {
    let graph = LadderGraph::new(args.n).map_err(DriverError::Core)?;
    let m = args.n as usize - 3;
    let angles = parse_angle_list(&args.angles, m, "census")?;
    let cluster = prepare_cluster(&graph);
    let branches: Vec<Vec<u8>> = match &args.outcomes {
        Some(list) => vec![parse_outcome_list(list, m)?],
        None => (0..1u32 << m)
            .map(|b| (0..m).map(|i| ((b >> (m - 1 - i)) & 1) as u8).collect())
            .collect(),
    };
    for outcomes in branches {
        let specs = specs_for(&angles, &outcomes)?;
        match measurement_cascade(&cluster, &specs) {
            Ok((p, post)) => {
                let report = stabilizer_census(&post).map_err(DriverError::Core)?;
                let bits: String = outcomes.iter().map(|b| char::from(b'0' + b)).collect();
                println!(
                    "s={bits} p={:.6} count={} stabilizer={}",
                    p, report.count, report.is_stabilizer
                );
            }
            Err(ladderflow_core::Error::ZeroProbabilityBranch) => {
                let bits: String = outcomes.iter().map(|b| char::from(b'0' + b)).collect();
                println!("s={bits} p=0 (zero-probability branch skipped)");
            }
            Err(e) => return Err(DriverError::Core(e)),
        }
    }
    Ok(())
}

fn run_trend(args: TrendArgs) -> Result<(), DriverError> {
    let preset = Preset::parse(&args.preset)
        .ok_or_else(|| DriverError::Config(format!("unknown preset '{}'", args.preset)))?;
    let sizes: Vec<u32> = args
        .sizes
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| DriverError::Config(format!("bad ladder size '{s}'")))
        })
        .collect::<Result<_, _>>()?;
    if sizes.is_empty() {
        return Err(DriverError::Config(String::from("--sizes must name at least one ladder")));
    }
    let report = trend_report(preset, args.grid, &sizes)?;
    print!("{report}");
    Ok(())
}
