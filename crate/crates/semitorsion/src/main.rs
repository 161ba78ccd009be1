use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use semitorsion::parse::{format_list, parse_ideal, parse_semigroup};
use semitorsion::report::{HwJson, InfoReport, TauReport};
use semitorsion::search::{self, Mode, SearchSpec};
use semitorsion_core::hypersurface::{dual_symmetric, HypersurfaceSemigroup};
use semitorsion_core::{hw, torsion};

/// Torsion in tensor products of relative ideals over numerical semigroups.
#[derive(Debug, Parser)]
#[command(name = "semitorsion", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Frobenius number, gaps and symmetry of a semigroup.
    Info {
        /// Generators, e.g. "5,7".
        semigroup: String,
        #[arg(long)]
        json: bool,
    },
    /// Torsion length of A ⊗ B.
    Tau {
        #[arg(long)]
        semigroup: String,
        #[arg(long = "ideal-a")]
        ideal_a: String,
        #[arg(long = "ideal-b")]
        ideal_b: String,
        /// Print the nonzero τ_z values.
        #[arg(long)]
        profile: bool,
        /// Print the graph Γ_z in DOT format instead.
        #[arg(long, value_name = "Z", allow_hyphen_values = true)]
        dot: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Minimal generators of the dual ideal A* = S - A.
    Dual {
        #[arg(long)]
        semigroup: String,
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value_t = DualMethod::Bruteforce)]
        method: DualMethod,
    },
    /// Irreducible triples for every gap (JSON); exits 2 on a zero count.
    Hw {
        #[arg(long)]
        semigroup: String,
    },
    /// Exhaustive campaign over <a, b> with a·b ≤ --ab-max.
    Search {
        #[arg(long)]
        mode: Mode,
        #[arg(long = "ab-max")]
        ab_max: i64,
        /// Generator range width; defaults to a + b.
        #[arg(long = "gen-window")]
        gen_window: Option<i64>,
        #[arg(long = "mu-max", default_value_t = 4)]
        mu_max: usize,
        /// Worker threads; 0 uses every core.
        #[arg(long, env = "SEMITORSION_JOBS", default_value_t = 0)]
        jobs: usize,
        /// Output file; CSV when it ends in .csv, JSON lines otherwise.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extra random general-semigroup cases (oracle-compare only).
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DualMethod {
    Formula,
    Bruteforce,
    Symmetric,
}

/// A completed computation that found a counterexample or inconsistency.
#[derive(Debug)]
struct Violation(String);

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Violation {}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<Violation>() => {
            eprintln!("violation: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> anyhow::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Info { semigroup, json } => {
            let s = parse_semigroup(&semigroup)?;
            let info = InfoReport::new(&s);
            if json {
                writeln!(out, "{}", serde_json::to_string(&info)?)?;
            } else {
                writeln!(out, "semigroup     {s}")?;
                writeln!(out, "frobenius     {}", info.frobenius)?;
                writeln!(out, "multiplicity  {}", info.multiplicity)?;
                writeln!(out, "genus         {}", info.genus)?;
                writeln!(out, "gaps          {}", format_list(&info.gaps))?;
                writeln!(out, "symmetric     {}", info.symmetric)?;
            }
        }
        Command::Tau {
            semigroup,
            ideal_a,
            ideal_b,
            profile,
            dot,
            json,
        } => {
            let s = parse_semigroup(&semigroup)?;
            let a = parse_ideal(&s, &ideal_a)?;
            let b = parse_ideal(&s, &ideal_b)?;
            if let Some(z) = dot {
                write!(out, "{}", torsion::gamma_graph(&a, &b, z)?.to_dot())?;
                return Ok(());
            }
            let p = torsion::torsion_profile(&a, &b)?;
            let report = TauReport::new(&s, a.generators(), b.generators(), &p, profile);
            if json {
                writeln!(out, "{}", serde_json::to_string(&report)?)?;
            } else {
                writeln!(out, "tau      {}", report.tau)?;
                writeln!(out, "support  {}", report.support)?;
                writeln!(out, "window   {}..={}", report.window.0, report.window.1)?;
                for e in report.profile.iter().flatten() {
                    writeln!(out, "tau_{} = {}", e.z, e.tau_z)?;
                }
            }
        }
        Command::Dual {
            semigroup,
            ideal,
            method,
        } => {
            let s = parse_semigroup(&semigroup)?;
            let a = parse_ideal(&s, &ideal)?;
            let d = match method {
                DualMethod::Bruteforce => a.dual(),
                DualMethod::Symmetric => dual_symmetric(&a)?,
                DualMethod::Formula => {
                    HypersurfaceSemigroup::from_semigroup(&s)?.dual_formula(&a)?
                }
            };
            writeln!(out, "{}", format_list(d.generators()))?;
        }
        Command::Hw { semigroup } => {
            let s = parse_semigroup(&semigroup)?;
            let report = hw::hw_check_semigroup(&s)?;
            writeln!(out, "{}", serde_json::to_string(&HwJson::new(&s, &report))?)?;
            if !report.all_positive {
                let gaps: Vec<i64> = report.counterexamples().map(|g| g.n).collect();
                bail!(Violation(format!(
                    "no irreducible triples for gaps {}",
                    format_list(&gaps)
                )));
            }
        }
        Command::Search {
            mode,
            ab_max,
            gen_window,
            mu_max,
            jobs,
            out: path,
            seed,
            samples,
        } => {
            if gen_window.is_some_and(|w| w < 1) {
                bail!("--gen-window must be positive");
            }
            let spec = SearchSpec {
                mode,
                ab_max,
                gen_window,
                mu_max,
                seed,
                samples,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .context("starting worker threads")?;
            let csv = path
                .as_ref()
                .is_some_and(|p| p.extension().is_some_and(|e| e == "csv"));
            let mut sink: Box<dyn Write + Send> = match &path {
                Some(p) => Box::new(BufWriter::new(
                    File::create(p).with_context(|| format!("creating {}", p.display()))?,
                )),
                None => Box::new(BufWriter::new(io::stdout())),
            };
            if csv {
                writeln!(sink, "{}", mode.csv_header())?;
            }
            let summary = pool.install(|| {
                search::run(&spec, |r| {
                    if csv {
                        writeln!(sink, "{}", r.csv_row())
                    } else {
                        serde_json::to_writer(&mut sink, r)?;
                        writeln!(sink)
                    }
                })
            })?;
            sink.flush()?;
            drop(sink);
            let text = serde_json::to_string(&summary)?;
            if path.is_some() {
                writeln!(out, "{text}")?;
            } else {
                eprintln!("{text}");
            }
            if summary.violations > 0 {
                bail!(Violation(format!(
                    "{} of {} records violate the {} checks",
                    summary.violations, summary.tuples, summary.mode
                )));
            }
        }
    }
    out.flush()?;
    Ok(())
}
