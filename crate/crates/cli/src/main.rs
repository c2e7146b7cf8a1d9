//! `toricsq`: analyze, compare and enumerate characteristic pairs.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;
use toricsq::census::{enumerate, selfcheck, write_jsonl};
use toricsq::steenrod::normalize_two_local;
use toricsq::{
    classify_degenerate_triangle, compare_rigidity, cup_form, degenerate_g, degenerate_sq2,
    edge_contract, p_valuation, parse_pair_file, CensusFilter, CharacteristicPair, Error, Report,
};

#[derive(Parser)]
#[command(name = "toricsq", version, about = "Invariants of 4-dimensional toric orbifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of one pair file.
    Analyze {
        file: PathBuf,
        /// Also report p-local smooth vertices for this prime (repeatable).
        #[arg(long = "prime", value_parser = parse_prime)]
        primes: Vec<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Rigidity comparison of two pair files.
    Compare {
        file1: PathBuf,
        file2: PathBuf,
        /// Entry bound for the cup-form congruence search.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        bound: u32,
    },
    /// Contract every edge except E_i, E_{n+1}, E_{n+2}.
    Contract {
        file: PathBuf,
        #[arg(long)]
        edge: usize,
        /// Rotate a 2-local smooth vertex into the last position first.
        #[arg(long)]
        normalize: bool,
    },
    /// Cup-product form on H², or the reason it is unavailable.
    Cup { file: PathBuf },
    /// Enumerate pairs up to symmetry and write one JSON line per class.
    Census {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        edges: u64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        bound: i64,
        #[arg(long)]
        filter: Option<CensusFilter>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (defaults to all cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run the property suite over a census; exits 1 on any violation.
    Selfcheck {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        edges: u64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        bound: i64,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn parse_prime(s: &str) -> std::result::Result<i64, String> {
    let p: i64 = s.parse().map_err(|e| format!("{e}"))?;
    match p_valuation(1, p) {
        Ok(_) => Ok(p),
        Err(Error::NotPrime(_)) => Err(format!("{p} is not a prime")),
        Err(e) => Err(e.to_string()),
    }
}

fn read_pair(path: &Path) -> Result<CharacteristicPair> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_pair_file(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(write: impl FnOnce(&mut io::StdoutLock<'_>) -> io::Result<()>) -> Result<()> {
    match write(&mut io::stdout().lock()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    let text = serde_json::to_string(value)?;
    emit(|out| writeln!(out, "{text}"))
}

fn render_text(r: &Report) -> String {
    let list = |v: &[usize]| {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    };
    let mut lines = vec![
        ("edges", r.pair().to_string()),
        ("g", r.g.to_string()),
        ("betti2", r.betti2.to_string()),
    ];
    for (p, v) in &r.smooth_vertices_by_prime {
        lines.push(("smooth", format!("p={p}: {}", list(v))));
    }
    lines.extend([
        ("sq1 on H2", r.sq1_h2.to_string()),
        ("sq1 on H3", r.sq1_h3.to_string()),
        ("sq2", r.sq2.to_string()),
        (
            "terms",
            format!("{:?} (vertex {} last)", r.criterion_terms, r.witness_vertex),
        ),
        (
            "splitting",
            serde_json::to_string(&r.splitting).unwrap_or_default(),
        ),
        (
            "spin",
            match &r.spin {
                Some(s) => format!("{:?}", s.w2_vanishes.unwrap_or(false)),
                None => "n/a (not quasi-toric)".into(),
            },
        ),
        (
            "cup form",
            r.cup_form.as_ref().map_or("n/a".into(), |c| format!("{c:?}")),
        ),
    ]);
    for w in &r.warnings {
        lines.push(("note", w.clone()));
    }
    lines
        .into_iter()
        .map(|(k, v)| format!("{k:<12}{v}\n"))
        .collect()
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(0) => bail!("--jobs must be at least 1"),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build()?;
            Ok(pool.install(f))
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Analyze { file, primes, json } => {
            let report = Report::build(&read_pair(&file)?, &primes)?;
            if json {
                print_json(&report)?;
            } else {
                emit(|out| out.write_all(render_text(&report).as_bytes()))?;
            }
        }
        Command::Compare { file1, file2, bound } => {
            let verdict = compare_rigidity(&read_pair(&file1)?, &read_pair(&file2)?, bound)?;
            print_json(&verdict)?;
        }
        Command::Contract { file, edge, normalize } => {
            let mut pair = read_pair(&file)?;
            if normalize {
                pair = normalize_two_local(&pair)?.0;
            }
            let triple = edge_contract(&pair, edge)?;
            print_json(&json!({
                "pair": pair,
                "triple": triple,
                "classification": classify_degenerate_triangle(&triple)?,
                "g_i": degenerate_g(&triple)?,
                "sq2": degenerate_sq2(&triple)?,
            }))?;
        }
        Command::Cup { file } => print_json(&cup_form(&read_pair(&file)?)?)?,
        Command::Census {
            edges,
            bound,
            filter,
            out,
            jobs,
        } => {
            let records = with_jobs(jobs, || enumerate(edges as usize, bound, filter))??;
            match out {
                Some(path) => {
                    let file = File::create(&path)
                        .with_context(|| format!("creating {}", path.display()))?;
                    write_jsonl(&records, BufWriter::new(file))?;
                }
                None => emit(|out| write_jsonl(&records, out))?,
            }
        }
        Command::Selfcheck { edges, bound, jobs } => {
            let summary = with_jobs(jobs, || selfcheck(edges as usize, bound))??;
            emit(|out| {
                for v in &summary.violations {
                    writeln!(out, "violation: {v}")?;
                }
                writeln!(
                    out,
                    "m={} B={}: {} pairs, {} classes, {} violations",
                    summary.m,
                    summary.bound,
                    summary.pairs,
                    summary.records,
                    summary.violations.len()
                )
            })?;
            if !summary.passed() {
                bail!("selfcheck failed");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
