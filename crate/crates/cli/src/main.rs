//! `aqshape`: growth-rate tables, maximal shapes, cohomology bounds,
//! certification sweeps and leading terms from the command line.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use aqshape::asymptotics::{gamma_factor, leading_term, IdealFactorization, PacketConvention};
use aqshape::growth::{coh_bound, CohQuery};
use aqshape::infchar::rho;
use aqshape::rational::{self, to_decimal, Rational};
use aqshape::sarnakxue::{
    sx_row, verify_density, verify_maxsl2, verify_qd_bound, verify_table1, Certificate, DensityRow, REFERENCE_TABLE,
};
use aqshape::shapes::{delta_max, delta_max_report, GlobalCohRep};
use aqshape::UnorderedPartition;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Environment variable capping the rank range of `verify` sweeps.
const MAX_N_ENV: &str = "AQSHAPE_MAX_N";

#[derive(Parser)]
#[command(
    name = "aqshape",
    version,
    about = "Exact growth exponents for cohomological representations of U(p,q)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Growth exponents against the density goal for Arthur-SL₂ types.
    SxTable {
        /// Semicolon-separated partitions, e.g. "(2,2);(3,2,2)". Defaults to the reference rows.
        #[arg(long)]
        q: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Maximal Arthur-SL₂ types and refined shapes of a representation.
    DeltaMax {
        /// JSON file holding {"places":[…], "kappa":±1}.
        #[arg(long)]
        rep: PathBuf,
    },
    /// Contributing representations and the exponent bound for a cohomology group.
    CohBounds {
        /// Signature as P,Q.
        #[arg(long)]
        signature: String,
        #[arg(long, conflicts_with = "hodge", required_unless_present = "hodge")]
        degree: Option<u64>,
        /// Hodge weight as A,B.
        #[arg(long)]
        hodge: Option<String>,
        /// "rho" or a comma-separated decreasing list of rationals.
        #[arg(long, default_value = "rho")]
        infchar: String,
    },
    /// Exhaustive certification sweeps.
    Verify {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        max_n: Option<u32>,
    },
    /// Symbolic leading term of the limit multiplicity for an odd GSK-maxed representation.
    LeadingTerm {
        #[arg(long)]
        rep: PathBuf,
        /// "binom" (binomial(T₁, ⌊T₁/2⌋) per place) or "rank"/"example1" (N per place).
        #[arg(long, default_value = "binom")]
        packet_convention: String,
    },
    /// Euler factor Γ_{n₁,…}(𝔫).
    Euler {
        /// Comma-separated nonzero integers, e.g. "2" or "3,1,-1".
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        /// Ideal as "q^e,q,…"; empty for the unit ideal.
        #[arg(long, default_value = "")]
        ideal: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    QdBound,
    Density,
    Maxsl2,
    Table1,
}

enum Outcome {
    Ok,
    Violations,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violations) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::SxTable { q, format } => sx_table(q.as_deref(), format),
        Command::DeltaMax { rep } => {
            let rep = read_rep(&rep)?;
            print_json(&delta_max_report(&rep)?)
        }
        Command::CohBounds {
            signature,
            degree,
            hodge,
            infchar,
        } => {
            let (p, q) = parse_pair(&signature).context("--signature")?;
            let query = match (degree, hodge) {
                (Some(i), None) => CohQuery::Degree(i),
                (None, Some(h)) => {
                    let (a, b) = parse_pair(&h).context("--hodge")?;
                    CohQuery::Hodge(a.into(), b.into())
                }
                _ => bail!("give exactly one of --degree and --hodge"),
            };
            let lambda = parse_infchar(&infchar, p + q)?;
            coh_bounds(p, q, &lambda, query)
        }
        Command::Verify { target, max_n } => verify(target, max_n),
        Command::LeadingTerm { rep, packet_convention } => {
            let rep = read_rep(&rep)?;
            let convention: PacketConvention = packet_convention.parse()?;
            print_json(&leading_term(&rep, convention)?)
        }
        Command::Euler { gamma, ideal } => {
            let ns = gamma
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .with_context(|| format!("bad --gamma entry {t:?}"))
                })
                .collect::<Result<Vec<_>>>()?;
            let ideal: IdealFactorization = ideal.parse()?;
            println!("{}", rational::to_string(&gamma_factor(&ns, &ideal)?));
            Ok(Outcome::Ok)
        }
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<Outcome> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(Outcome::Ok)
}

fn read_rep(path: &PathBuf) -> Result<GlobalCohRep> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_pair(s: &str) -> Result<(u32, u32)> {
    let (a, b) = s.split_once(',').with_context(|| format!("expected A,B, got {s:?}"))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

fn parse_infchar(s: &str, n: u32) -> Result<Vec<Rational>> {
    if s.trim() == "rho" {
        return Ok(rho(n));
    }
    let lam = s.split(',').map(rational::parse).collect::<aqshape::Result<Vec<_>>>()?;
    if lam.len() != n as usize {
        bail!("infinitesimal character has {} entries, rank is {n}", lam.len());
    }
    Ok(lam)
}

fn sx_table(q: Option<&str>, format: Format) -> Result<Outcome> {
    let qs: Vec<UnorderedPartition> = match q {
        Some(s) => s
            .split(';')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse())
            .collect::<aqshape::Result<_>>()?,
        None => REFERENCE_TABLE.iter().map(|r| r.partition()).collect(),
    };
    let rows: Vec<DensityRow> = qs.iter().map(sx_row).collect();
    match format {
        Format::Json => print_json(&rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout().lock());
            w.write_record(["Q", "max_R_minus_1", "max_R0_minus_1", "sx_goal", "trivial", "eps"])?;
            for r in &rows {
                w.write_record([
                    r.q.to_string(),
                    rational::to_string(&r.provable.main),
                    rational::to_string(&r.conjectural.main),
                    to_decimal(&r.sx_goal, 2),
                    r.trivial.to_string(),
                    r.provable.eps.to_string(),
                ])?;
            }
            w.flush()?;
            Ok(Outcome::Ok)
        }
    }
}

fn coh_bounds(p: u32, q: u32, lambda: &[Rational], query: CohQuery) -> Result<Outcome> {
    let bound = coh_bound(p, q, lambda, query)?;
    let contributors = bound
        .contributors
        .iter()
        .map(|c| {
            let global = GlobalCohRep::new(vec![c.rep.clone()], None)?;
            Ok(json!({
                "rep": c.rep,
                "R": c.r,
                "q_max": c.q_max,
                "delta_max": delta_max(&global),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    print_json(&json!({ "contributors": contributors, "bound": bound.bound }))
}

fn verify(target: Target, max_n: Option<u32>) -> Result<Outcome> {
    let cap = match std::env::var(MAX_N_ENV) {
        Ok(v) => Some(v.trim().parse::<u32>().with_context(|| format!("{MAX_N_ENV}={v:?}"))?),
        Err(_) => None,
    };
    let range = |default: u32| {
        let n = max_n.unwrap_or(default);
        cap.map_or(n, |c| n.min(c))
    };
    let cert: Certificate = match target {
        Target::QdBound => verify_qd_bound(range(60)),
        Target::Density => verify_density(range(60)),
        Target::Maxsl2 => verify_maxsl2(range(14)),
        Target::Table1 => verify_table1(),
    };
    print_json(&cert)?;
    Ok(if cert.passed() {
        Outcome::Ok
    } else {
        Outcome::Violations
    })
}
