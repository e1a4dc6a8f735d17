use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use adideals::affine::{lattice_points_in_simplex, simplex_face_codim, simplex_vertices};
use adideals::duality::Duality;
use adideals::ideals::{narayana_polynomial, sim_polynomial, up_closure};
use adideals::linalg::format_q;
use adideals::record::{parse_generators, IdealRecord};
use adideals::verify::{run_claim, Scope, VerifyConfig, CLAIMS};
use adideals::{enumerate_ideals, CartanType, RootSystem};
use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;

#[derive(Parser)]
#[command(name = "adideals", version, about = "Ad-nilpotent ideals of Borel subalgebras")]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Do not print the version banner on stderr.
    #[arg(long, global = true)]
    no_banner: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SystemArgs {
    /// Cartan type, A through G.
    #[arg(long = "type", short = 't')]
    cartan_type: CartanType,
    #[arg(long, short = 'r')]
    rank: usize,
}

impl SystemArgs {
    fn build(&self) -> Result<RootSystem, Failure> {
        RootSystem::new(self.cartan_type, self.rank).map_err(Failure::usage)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Statistic {
    Sim,
    Gen,
}

#[derive(Subcommand)]
enum Command {
    /// List every ideal, one record per line.
    Enumerate {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Coefficients of the simple-root or generator-count polynomial.
    Stats {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, value_enum, default_value = "sim")]
        statistic: Statistic,
    },
    /// Record of the dual of the ideal with the given generators.
    Dual {
        #[command(flatten)]
        system: SystemArgs,
        /// Comma-separated roots: `(i,j)` boxes, `1121` coefficients, or `1+2+2` sums.
        #[arg(long, allow_hyphen_values = true)]
        generators: String,
    },
    /// Run the named checks and report pass or fail.
    Verify {
        /// Run only these claims.
        #[arg(long)]
        claim: Vec<String>,
        /// Ranks up to 4 only.
        #[arg(long, conflicts_with = "full")]
        quick: bool,
        #[arg(long)]
        full: bool,
        /// Skip E8 in the full scope.
        #[arg(long)]
        no_e8: bool,
        /// Emit a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Vertices and coroot-lattice points of the simplex.
    Simplex {
        #[command(flatten)]
        system: SystemArgs,
    },
}

/// An error with its exit code.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl Failure {
    fn usage(e: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: EXIT_USAGE,
            err: e.into(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        Failure { code: 1, err }
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure {
            code: 1,
            err: err.into(),
        }
    }
}

fn enumerate(rs: &RootSystem, format: Format, out: &mut impl Write) -> Result<(), Failure> {
    let duality = Duality::new(rs).ok();
    let records: Vec<IdealRecord> = enumerate_ideals(rs)
        .par_iter()
        .map(|i| IdealRecord::new(i, duality.as_ref()))
        .collect();
    match format {
        Format::Json => {
            for r in &records {
                serde_json::to_writer(&mut *out, r).context("writing json")?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["type", "rank", "ideal_index", "size", "sim", "gen", "class", "generators"])
                .context("writing csv")?;
            for (k, r) in records.iter().enumerate() {
                w.write_record([
                    r.type_label.clone(),
                    r.rank.to_string(),
                    k.to_string(),
                    r.size.to_string(),
                    r.sim.to_string(),
                    r.gen.to_string(),
                    r.class.to_string(),
                    r.generator_string(),
                ])
                .context("writing csv")?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn dual(rs: &RootSystem, generators: &str, out: &mut impl Write) -> Result<(), Failure> {
    let duality = Duality::new(rs).map_err(|e| Failure {
        code: EXIT_UNSUPPORTED,
        err: anyhow::anyhow!("{e} (requested {})", rs.label()),
    })?;
    let gamma = parse_generators(rs, generators).map_err(Failure::usage)?;
    let star = up_closure(rs, &duality.dual(&gamma));
    serde_json::to_writer(&mut *out, &IdealRecord::new(&star, Some(&duality))).context("writing json")?;
    writeln!(out)?;
    Ok(())
}

fn simplex(rs: &RootSystem, out: &mut impl Write) -> Result<(), Failure> {
    let show = |c: &[adideals::Q]| c.iter().map(format_q).collect::<Vec<_>>().join(" ");
    writeln!(out, "# vertices")?;
    for v in simplex_vertices(rs) {
        let tag = if v.in_coroot_lattice(rs) { " integral" } else { "" };
        writeln!(out, "{}{tag}", show(&v.coords))?;
    }
    writeln!(out, "# lattice points (coordinates, face codimension)")?;
    for d in lattice_points_in_simplex(rs) {
        writeln!(out, "{}\t{}", show(&d.coords), simplex_face_codim(rs, &d))?;
    }
    Ok(())
}

fn verify(
    claims: &[String],
    quick: bool,
    no_e8: bool,
    json: bool,
    out: &mut impl Write,
) -> Result<(), Failure> {
    let cfg = VerifyConfig {
        scope: if quick { Scope::Quick } else { Scope::Full },
        include_e8: !no_e8,
        ..VerifyConfig::default()
    };
    let names: Vec<&str> = if claims.is_empty() {
        CLAIMS.iter().map(|c| c.0).collect()
    } else {
        claims.iter().map(String::as_str).collect()
    };
    let mut reports = Vec::new();
    for name in names {
        let report = run_claim(name, &cfg).map_err(|e| {
            let known: Vec<&str> = CLAIMS.iter().map(|c| c.0).collect();
            Failure::usage(anyhow::anyhow!("{e}; known claims: {}", known.join(", ")))
        })?;
        if !json {
            let status = if report.passed { "PASS" } else { "FAIL" };
            writeln!(
                out,
                "{status} {:<20} {} checks",
                report.name, report.checks
            )?;
            for note in &report.notes {
                writeln!(out, "    {note}")?;
            }
            for f in &report.failures {
                writeln!(out, "    failure: {f}")?;
            }
        }
        reports.push(report);
    }
    let passed = reports.iter().all(|r| r.passed);
    if json {
        let value = serde_json::json!({
            "scope": cfg.scope,
            "passed": passed,
            "claims": reports,
        });
        serde_json::to_writer_pretty(&mut *out, &value).context("writing json")?;
        writeln!(out)?;
    }
    if passed {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_VERIFY,
            err: anyhow::anyhow!("verification failed"),
        })
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(Failure::usage)?;
    }
    if !cli.no_banner {
        eprintln!("adideals {}", env!("CARGO_PKG_VERSION"));
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match &cli.command {
        Command::Enumerate { system, format } => enumerate(&system.build()?, *format, &mut out)?,
        Command::Stats { system, statistic } => {
            let rs = system.build()?;
            let coeffs = match statistic {
                Statistic::Sim => sim_polynomial(&rs),
                Statistic::Gen => narayana_polynomial(&rs),
            };
            let line: Vec<String> = coeffs.iter().map(u64::to_string).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
        Command::Dual { system, generators } => dual(&system.build()?, generators, &mut out)?,
        Command::Verify {
            claim,
            quick,
            full: _,
            no_e8,
            json,
        } => verify(claim, *quick, *no_e8, *json, &mut out)?,
        Command::Simplex { system } => simplex(&system.build()?, &mut out)?,
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, err }) => {
            eprintln!("error: {err:#}");
            ExitCode::from(code)
        }
    }
}
