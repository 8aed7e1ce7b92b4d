use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use modrep::specfile::{eval_extra, load_path, Loaded, Overrides, SpecError};
use modrep::suite::{all_passed, run_suite, summary, SuiteConfig};
use modrep_core::adequacy::{check_adequacy, AdequacyReport};
use modrep_core::cohom::ext1;
use modrep_core::modstruct::{chop, Module};
use modrep_core::sl2lab::Tier;
use serde::Serialize;

const EXIT_ADEQUATE: u8 = 0;
const EXIT_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_WEAK_ONLY: u8 = 10;
const EXIT_NOT_WEAK: u8 = 11;

#[derive(Parser)]
#[command(name = "modrep", version, about = "Exact modular representations of finite matrix groups")]
struct Cli {
    /// Seed for randomised splitting.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Largest group to enumerate.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Extend the coefficient field to degree k * N over the prime field.
    #[arg(long = "ext-degree", global = true)]
    ext_degree: Option<u32>,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Summary,
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Acceptance,
    Stretch,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the adequacy conditions for the module of a spec file.
    Check { spec: PathBuf },
    /// Composition factors of the module of a spec file.
    Chop { spec: PathBuf },
    /// Ext^1 from the module to itself or to another expression.
    Ext {
        spec: PathBuf,
        /// Second argument W of Ext^1(V, W).
        #[arg(long = "with")]
        with: Option<String>,
    },
    /// Run the scenario registry.
    VerifySuite {
        #[arg(long, value_enum, default_value_t = TierArg::Acceptance)]
        tier: TierArg,
        /// Scenario id or id prefix; repeatable.
        #[arg(long)]
        filter: Vec<String>,
        /// Directory holding optional generator fixtures.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Serialize)]
struct CheckOutput<'a> {
    group_order: usize,
    #[serde(flatten)]
    report: &'a AdequacyReport,
}

#[derive(Serialize)]
struct FactorOut {
    dim: usize,
    multiplicity: usize,
    fingerprint: String,
}

#[derive(Serialize)]
struct ChopOutput {
    group_order: usize,
    dim: usize,
    factors: Vec<FactorOut>,
}

#[derive(Serialize)]
struct ExtOutput {
    dim_v: usize,
    dim_w: usize,
    z1: usize,
    b1: usize,
    ext1: usize,
}

/// Write to stdout; a closed pipe is not an error.
fn out(text: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush());
}

fn emit<T: Serialize>(format: Format, value: &T, text: String) {
    match format {
        Format::Json => {
            out(&(serde_json::to_string_pretty(value).expect("serialisable output") + "\n"));
            eprint!("{text}");
        }
        Format::Summary => out(&text),
    }
}

fn load(cli: &Cli, spec: &Path) -> Result<Loaded, SpecError> {
    let ov = Overrides { seed: cli.seed, cap: cli.cap, ext_degree: cli.ext_degree };
    load_path(spec, ov)
}

fn check(cli: &Cli, spec: &Path) -> Result<u8, SpecError> {
    let l = load(cli, spec)?;
    let report = check_adequacy(&l.rep)?;
    let text = format!(
        "dim {} over F_{}: p | dim: {}, span {}/{}, ext1(V,V) = {}; {}\n",
        report.dim,
        l.target.order(),
        !report.dim_coprime,
        report.span_dim,
        report.dim * report.dim,
        report.ext1_self,
        if report.adequate {
            "adequate"
        } else if report.weakly_adequate {
            "weakly adequate only"
        } else {
            "not weakly adequate"
        }
    );
    emit(cli.format, &CheckOutput { group_order: l.group.len(), report: &report }, text);
    Ok(if report.adequate {
        EXIT_ADEQUATE
    } else if report.weakly_adequate {
        EXIT_WEAK_ONLY
    } else {
        EXIT_NOT_WEAK
    })
}

fn chop_cmd(cli: &Cli, spec: &Path) -> Result<u8, SpecError> {
    let l = load(cli, spec)?;
    let factors = chop(&Module::from(&l.rep), l.seed)?;
    let out = ChopOutput {
        group_order: l.group.len(),
        dim: l.rep.dim(),
        factors: factors
            .iter()
            .map(|c| FactorOut { dim: c.dim, multiplicity: c.multiplicity, fingerprint: format!("{:016x}", c.fingerprint) })
            .collect(),
    };
    let dims: Vec<String> = factors.iter().map(|c| format!("{}^{}", c.dim, c.multiplicity)).collect();
    emit(cli.format, &out, format!("composition factor dims: {}\n", dims.join(" ")));
    Ok(EXIT_ADEQUATE)
}

fn ext_cmd(cli: &Cli, spec: &Path, with: Option<&str>) -> Result<u8, SpecError> {
    let l = load(cli, spec)?;
    let w = match with {
        Some(src) => eval_extra(&l, src)?,
        None => l.rep.clone(),
    };
    let r = ext1(&l.rep, &w)?;
    let out = ExtOutput { dim_v: l.rep.dim(), dim_w: w.dim(), z1: r.z1, b1: r.b1, ext1: r.h1 };
    emit(cli.format, &out, format!("dim Ext^1(V, W) = {} (Z^1 {}, B^1 {})\n", r.h1, r.z1, r.b1));
    Ok(EXIT_ADEQUATE)
}

fn verify(cli: &Cli, tier: TierArg, filter: &[String], fixtures: Option<PathBuf>) -> Result<u8, String> {
    let cfg = SuiteConfig {
        tier: Some(match tier {
            TierArg::Acceptance => Tier::Acceptance,
            TierArg::Stretch => Tier::Stretch,
        }),
        filters: filter.to_vec(),
        seed: cli.seed.unwrap_or(0),
        threads: cli.threads,
        fixtures,
    };
    let results = run_suite(&cfg).map_err(|e| e.to_string())?;
    if results.is_empty() {
        return Err("no scenario matches the filter".into());
    }
    emit(cli.format, &results, summary(&results));
    Ok(if all_passed(&results) { EXIT_ADEQUATE } else { EXIT_FAILED })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Check { spec } => check(&cli, spec).map_err(|e| e.to_string()),
        Command::Chop { spec } => chop_cmd(&cli, spec).map_err(|e| e.to_string()),
        Command::Ext { spec, with } => ext_cmd(&cli, spec, with.as_deref()).map_err(|e| e.to_string()),
        Command::VerifySuite { tier, filter, fixtures } => verify(&cli, *tier, filter, fixtures.clone()),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
