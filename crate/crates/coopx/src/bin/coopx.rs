//! Thin command-line front end over the `coopx` library.
//!
//! Exit codes: 0 when every requested check passes, 1 on usage or I/O
//! problems, 2 when a mathematical invariant the tool verifies is violated
//! (a report check fails, a schedule does not complete, or a replayed
//! broadcast is outside its sender's decodable span).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use coopx::error::{Error, Result};
use coopx::generators::{
    counterexample_instance, hardness_instance, named_graph, random_disjoint_instance,
    random_instance,
};
use coopx::instance::Instance;
use coopx::io;
use coopx::report::{
    graph_report, graph_sweep_header, graph_sweep_row, instance_report, render_graph_human,
    render_human, sweep_header, sweep_row, Algorithm, Report, ReportOptions,
};
use coopx::simulator::{brute_force_nc, simulate, verify_complete, OracleLimits, OracleMode};

#[derive(Parser)]
#[command(
    name = "coopx",
    version,
    about = "Cooperative data exchange: bounds, schedules, and exact optima on graph topologies"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write an instance (or named graph) as coopx-v1 JSON.
    Generate {
        #[command(subcommand)]
        family: GenerateCmd,
    },
    /// Analyze one instance: bounds, schedules, optional exact optima.
    Report(ReportArgs),
    /// Run a family of instances and emit one CSV row per report.
    Sweep {
        #[command(subcommand)]
        family: SweepCmd,
    },
    /// Replay a schedule on an instance and emit the per-round rank trace.
    Simulate {
        instance: PathBuf,
        schedule: PathBuf,
        /// Write the trace CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Brute-force the exact optimum round count with a witness schedule.
    Oracle(OracleArgs),
}

#[derive(Subcommand)]
enum GenerateCmd {
    /// A graph from the catalog (no holdings).
    Named {
        /// One of: k23_plus_edge, path(n), cycle(n), star(n), complete(n).
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The two-part gap construction on 2mk vertices.
    Counterexample {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// k bridged copies of a base graph around an empty-handed hub.
    Hardness {
        /// Catalog name of the base graph.
        #[arg(long)]
        base: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random connected instance.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Edge probability before connectivity patching.
        #[arg(long, default_value_t = 0.35)]
        p: f64,
        /// Probability of each extra (vertex, packet) holding.
        #[arg(long, default_value_t = 0.25, conflicts_with = "disjoint")]
        holding_p: f64,
        /// Give every packet exactly one owner.
        #[arg(long)]
        disjoint: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ReportArgs {
    /// Instance (or graph-only) JSON file.
    instance: PathBuf,
    /// Also brute-force the exact optima (small instances only).
    #[arg(long)]
    with_oracle: bool,
    /// Raise or lower the oracle's vertex cap.
    #[arg(long)]
    oracle_limit_n: Option<usize>,
    /// Raise or lower the oracle's packet cap.
    #[arg(long)]
    oracle_limit_k: Option<usize>,
    /// Comma-separated algorithms to run instead of the automatic pick.
    #[arg(long, value_delimiter = ',')]
    algorithms: Vec<String>,
    /// Field modulus for the emitted schedules (any prime; payloads are 0/1).
    #[arg(long)]
    q: Option<u32>,
    /// Write the full JSON report here (stdout shows the human summary).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SweepCmd {
    /// The gap construction over ranges of m and k.
    Counterexample {
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        #[arg(long = "ks", value_delimiter = ',', default_values_t = [2usize, 3])]
        ks: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Copies-around-a-hub instances over base graphs and k.
    Hardness {
        #[arg(long, value_delimiter = ',', default_values_t = [
            "path(3)".to_string(), "cycle(5)".to_string(), "k23_plus_edge".to_string()
        ])]
        bases: Vec<String>,
        #[arg(long = "ks", value_delimiter = ',', default_values_t = [2usize, 3])]
        ks: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random instances.
    Random {
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[arg(long, default_value_t = 0.35)]
        p: f64,
        #[arg(long, default_value_t = 0.25)]
        holding_p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Brute-force exact optima where the instance fits the caps.
        #[arg(long)]
        with_oracle: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Covering and dominating numbers across the graph catalog.
    Named {
        #[arg(long, value_delimiter = ',', default_values_t = [
            "k23_plus_edge".to_string(),
            "path(4)".to_string(),
            "cycle(6)".to_string(),
            "star(5)".to_string(),
            "complete(5)".to_string(),
        ])]
        names: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct OracleArgs {
    instance: PathBuf,
    #[arg(long, value_enum, default_value_t = OracleModeArg::Coded)]
    mode: OracleModeArg,
    /// Field modulus; the coded search only supports 2.
    #[arg(long, default_value_t = 2)]
    q: u32,
    #[arg(long)]
    oracle_limit_n: Option<usize>,
    #[arg(long)]
    oracle_limit_k: Option<usize>,
    /// Write the witness schedule as coopx-v1 JSON.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleModeArg {
    Uncoded,
    Coded,
}

impl From<OracleModeArg> for OracleMode {
    fn from(m: OracleModeArg) -> OracleMode {
        match m {
            OracleModeArg::Uncoded => OracleMode::Uncoded,
            OracleModeArg::Coded => OracleMode::Coded,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                // a replayed schedule that claims an impossible payload is a
                // mathematical inconsistency, not a usage problem
                Error::UndecodablePayload { .. } => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Generate { family } => cmd_generate(family),
        Command::Report(args) => cmd_report(args),
        Command::Sweep { family } => cmd_sweep(family),
        Command::Simulate {
            instance,
            schedule,
            out,
        } => cmd_simulate(&instance, &schedule, out.as_deref()),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => io::write_text(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_generate(family: GenerateCmd) -> Result<ExitCode> {
    let (json, out) = match family {
        GenerateCmd::Named { name, out } => (io::graph_to_json(&named_graph(&name)?)?, out),
        GenerateCmd::Counterexample { m, k, out } => {
            (io::instance_to_json(&counterexample_instance(m, k)?)?, out)
        }
        GenerateCmd::Hardness { base, k, out } => {
            let g = named_graph(&base)?;
            (io::instance_to_json(&hardness_instance(&g, k)?)?, out)
        }
        GenerateCmd::Random {
            n,
            k,
            p,
            holding_p,
            disjoint,
            seed,
            out,
        } => {
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let inst = if disjoint {
                random_disjoint_instance(n, k, p, &mut rng)?
            } else {
                random_instance(n, k, p, holding_p, &mut rng)?
            };
            (io::instance_to_json(&inst)?, out)
        }
    };
    emit(out.as_deref(), &json)?;
    Ok(ExitCode::SUCCESS)
}

fn read_report_options(args: &ReportArgs) -> Result<ReportOptions> {
    let algorithms = if args.algorithms.is_empty() {
        None
    } else {
        Some(
            args.algorithms
                .iter()
                .map(|s| Algorithm::parse(s))
                .collect::<Result<Vec<_>>>()?,
        )
    };
    Ok(ReportOptions {
        algorithms,
        with_oracle: args.with_oracle,
        oracle_limit_n: args.oracle_limit_n,
        oracle_limit_k: args.oracle_limit_k,
        q: args.q,
    })
}

fn cmd_report(args: ReportArgs) -> Result<ExitCode> {
    let text = std::fs::read_to_string(&args.instance).map_err(|source| Error::Io {
        path: args.instance.clone(),
        source,
    })?;

    if !io::json_is_instance(&text)? {
        // graph-only file: covering and dominating numbers, no schedules
        let report = graph_report(&io::graph_from_json(&text)?)?;
        print!("{}", render_graph_human(&report));
        if let Some(out) = &args.out {
            io::write_text(out, &report.to_json()?)?;
        }
        return Ok(ExitCode::SUCCESS);
    }

    let inst = io::instance_from_json(&text)?;
    let opts = read_report_options(&args)?;
    let report = instance_report(&inst, &opts)?;
    print!("{}", render_human(&report));
    if let Some(out) = &args.out {
        io::write_text(out, &report.to_json()?)?;
    }
    Ok(report_exit(&report))
}

fn report_exit(report: &Report) -> ExitCode {
    if report.all_checks_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn cmd_sweep(family: SweepCmd) -> Result<ExitCode> {
    let mut rows = vec![];
    let mut all_passed = true;
    let out_path;

    match family {
        SweepCmd::Counterexample { max_m, ks, out } => {
            out_path = out;
            rows.push(sweep_header());
            for m in 1..=max_m {
                for &k in &ks {
                    let inst = counterexample_instance(m, k)?;
                    let report = instance_report(&inst, &ReportOptions::default())?;
                    all_passed &= report.all_checks_passed;
                    rows.push(sweep_row(
                        "counterexample",
                        &format!("m={m};k={k}"),
                        &report,
                    ));
                }
            }
        }
        SweepCmd::Hardness { bases, ks, out } => {
            out_path = out;
            rows.push(sweep_header());
            for base in &bases {
                let g = named_graph(base)?;
                for &k in &ks {
                    let inst = hardness_instance(&g, k)?;
                    let report = instance_report(&inst, &ReportOptions::default())?;
                    all_passed &= report.all_checks_passed;
                    rows.push(sweep_row(
                        "hardness",
                        &format!("base={base};k={k}"),
                        &report,
                    ));
                }
            }
        }
        SweepCmd::Random {
            count,
            max_n,
            max_k,
            p,
            holding_p,
            seed,
            with_oracle,
            out,
        } => {
            out_path = out;
            rows.push(sweep_header());
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            let opts = ReportOptions {
                with_oracle,
                ..Default::default()
            };
            for i in 0..count {
                use rand::Rng;
                let n = rng.gen_range(2..=max_n.max(2));
                let k = rng.gen_range(1..=max_k.max(1));
                let inst = random_instance(n, k, p, holding_p, &mut rng)?;
                let report = instance_report(&inst, &opts)?;
                all_passed &= report.all_checks_passed;
                rows.push(sweep_row(
                    "random",
                    &format!("seed={seed};i={i};n={n};k={k}"),
                    &report,
                ));
            }
        }
        SweepCmd::Named { names, out } => {
            out_path = out;
            rows.push(graph_sweep_header());
            for name in &names {
                let g = named_graph(name)?;
                rows.push(graph_sweep_row(name, &graph_report(&g)?));
            }
        }
    }

    let mut csv = rows.join("\n");
    csv.push('\n');
    emit(out_path.as_deref(), &csv)?;
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn cmd_simulate(instance: &Path, schedule_path: &Path, out: Option<&Path>) -> Result<ExitCode> {
    let inst = io::read_instance(instance)?;
    let schedule = io::read_schedule(schedule_path)?;
    let trace = simulate(&inst, &schedule)?;
    let csv = io::trace_to_csv(&trace);
    emit(out, &csv)?;

    let check = verify_complete(&inst, &schedule)?;
    if check.complete {
        eprintln!(
            "complete: every client decodes all {} packet(s) after {} round(s)",
            inst.k(),
            schedule.len()
        );
        Ok(ExitCode::SUCCESS)
    } else {
        let short: Vec<String> = check
            .deficiencies
            .iter()
            .enumerate()
            .filter(|(_, &missing)| missing > 0)
            .map(|(v, missing)| format!("vertex {v} short {missing}"))
            .collect();
        eprintln!(
            "INCOMPLETE after {} round(s): {}",
            schedule.len(),
            short.join(", ")
        );
        Ok(ExitCode::from(2))
    }
}

fn cmd_oracle(args: OracleArgs) -> Result<ExitCode> {
    let inst: Instance = io::read_instance(&args.instance)?;
    let mode: OracleMode = args.mode.into();
    if mode == OracleMode::Coded && args.q != 2 {
        return Err(Error::InvalidParameter(format!(
            "the coded search runs over GF(2); got --q {}",
            args.q
        )));
    }
    coopx::gf::PrimeField::new(args.q)?;

    let defaults = mode.default_limits();
    let limits = OracleLimits {
        max_n: args.oracle_limit_n.unwrap_or(defaults.max_n),
        max_k: args.oracle_limit_k.unwrap_or(defaults.max_k),
    };
    let (rounds, mut witness) = brute_force_nc(&inst, mode, Some(limits))?;
    witness.q = args.q;

    println!("{} optimum: {} round(s)", mode.label(), rounds);
    if witness.is_empty() {
        println!("witness: empty schedule (every client is already complete)");
    } else {
        println!("witness:");
        for (i, b) in witness.rounds.iter().enumerate() {
            println!(
                "  round {}: sender {} broadcasts {}",
                i + 1,
                b.sender,
                b.render()
            );
        }
    }
    if let Some(out) = &args.out {
        io::write_schedule(out, &witness)?;
    }
    Ok(ExitCode::SUCCESS)
}
