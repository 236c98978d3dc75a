//! `directions`: command-line experiments on k-directions sets.
//!
//! Every command prints a JSON report on standard output (CSV for a bare
//! `enumerate`) and, given `--out`, writes the same artifacts to files.
//! Exit status: 0 success, 1 precondition failure, 2 resource limit,
//! 64 usage error, 70 internal error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use kdirections::budget::Budget;
use kdirections::constructor::{construct, factorial, verify_construction, ConstructOptions, Construction, VerifyParams};
use kdirections::density::{chain_check, covering_radius, net_audit, ratio_gap, sphere_net, witness_tuple, ChainOptions};
use kdirections::enumeration::{directions_with, ground_set, GroundRule, GroundSet, Sampling};
use kdirections::exact::ExactCoord;
use kdirections::remark::demo_remark;
use kdirections::targets::{TargetPoint, TargetSpec};
use kdirections::{Error, ErrorClass, SCHEMA_VERSION};

const EXIT_PRECONDITION: u8 = 1;
const EXIT_RESOURCE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_INTERNAL: u8 = 70;

/// Sample count used by measuring commands when the tuple budget is
/// exceeded and no `--sample` is given. It is echoed in the report.
const DEFAULT_SAMPLES: u64 = 1_000_000;

#[derive(Parser)]
#[command(name = "directions", version, about = "Experiments on directions sets of subsets of the natural numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the primitive directions of D^k(A) or its distinct-entry part.
    Enumerate(EnumerateArgs),
    /// Covering radius of a direction cloud over a sphere net.
    Density(DensityArgs),
    /// Block maxima of consecutive ratios a_n/a_(n-1) - 1.
    RatioGap(RatioGapArgs),
    /// A tuple of A pointing near x, with its certificate.
    Witness(WitnessArgs),
    /// Build A for a target set; optionally verify it.
    Construct(ConstructArgs),
    /// Build A for a target set and compare its directions with the target.
    Verify(ConstructArgs),
    /// Covering radii in dimensions k and k-1.
    Chain(ChainArgs),
    /// Repeated entries accumulating outside the target.
    DemoRemark(RemarkArgs),
    /// Monte-Carlo audit of a sphere net's mesh.
    NetAudit(NetAuditArgs),
}

#[derive(Args, Clone)]
struct GroundArgs {
    /// naturals, primes, powers-of-B, polynomial-D or explicit
    #[arg(long, default_value = "naturals")]
    rule: String,
    /// Bound N of the materialized prefix
    #[arg(long = "N", default_value_t = 100)]
    n: u64,
    /// Comma-separated elements for the explicit rule
    #[arg(long, value_delimiter = ',')]
    elements: Vec<u64>,
}

impl GroundArgs {
    fn load(&self, budget: &Budget) -> Result<GroundSet, Error> {
        if self.rule == "explicit" {
            return GroundSet::explicit_u64(&self.elements);
        }
        let rule: GroundRule = self.rule.parse()?;
        ground_set(&rule, self.n, budget)
    }
}

#[derive(Args, Clone)]
struct CloudArgs {
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Only tuples with pairwise distinct entries
    #[arg(long)]
    distinct: bool,
    /// Sample this many random tuples when |A|^k exceeds the tuple budget
    /// (measuring commands default to 1000000)
    #[arg(long)]
    sample: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl CloudArgs {
    fn sampling(&self) -> Option<Sampling> {
        self.sample.map(|samples| Sampling { samples, seed: self.seed })
    }

    fn sampling_or_default(&self) -> Sampling {
        Sampling {
            samples: self.sample.unwrap_or(DEFAULT_SAMPLES),
            seed: self.seed,
        }
    }
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    ground: GroundArgs,
    #[command(flatten)]
    cloud: CloudArgs,
    /// Write <OUT>.csv and <OUT>.json instead of CSV on standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DensityArgs {
    #[command(flatten)]
    ground: GroundArgs,
    #[command(flatten)]
    cloud: CloudArgs,
    /// Net resolution
    #[arg(long, default_value_t = 0.01)]
    h: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RatioGapArgs {
    #[command(flatten)]
    ground: GroundArgs,
    #[arg(long, default_value_t = 4)]
    windows: usize,
    /// Write <OUT>.json and the trend as <OUT>.csv
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WitnessArgs {
    #[command(flatten)]
    ground: GroundArgs,
    /// Coordinates of x, exact: decimals, p/q, sqrt(r) or q*sqrt(r)
    #[arg(long, value_delimiter = ',', required = true)]
    x: Vec<String>,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConstructArgs {
    /// Target file
    #[arg(long)]
    spec: PathBuf,
    /// Number of construction steps
    #[arg(long = "M", default_value_t = 20)]
    m: u64,
    /// Run the verification after constructing
    #[arg(long)]
    verify: bool,
    /// Tail start for the backward check, as a step index
    #[arg(long = "L")]
    l: Option<u64>,
    #[arg(long, default_value_t = 0.05)]
    h: f64,
    #[arg(long, default_value_t = 1e-3)]
    tolerance: f64,
    /// Build custom targets that carry no closure certificate
    #[arg(long)]
    allow_unverified: bool,
    /// Stem for <OUT>.jsonl, <OUT>.elements.csv and <OUT>.verify.json
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ChainArgs {
    #[command(flatten)]
    ground: GroundArgs,
    /// Use the set constructed for this target instead of --rule
    #[arg(long)]
    spec: Option<PathBuf>,
    #[arg(long = "M", default_value_t = 20)]
    m: u64,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 0.05)]
    h: f64,
    #[arg(long)]
    distinct: bool,
    /// Keep distinct-entry tuples with entries >= L! only
    #[arg(long = "L")]
    l: Option<u64>,
    #[arg(long)]
    sample: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RemarkArgs {
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long = "M", default_value_t = 15)]
    m: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct NetAuditArgs {
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 0.2)]
    h: f64,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("directions: {e}");
            ExitCode::from(match e.class() {
                ErrorClass::Precondition => EXIT_PRECONDITION,
                ErrorClass::Resource => EXIT_RESOURCE,
                ErrorClass::Internal => EXIT_INTERNAL,
            })
        }
    }
}

fn run(command: Command) -> Result<(), Error> {
    let budget = Budget::from_env()?;
    match command {
        Command::Enumerate(a) => enumerate(a, &budget),
        Command::Density(a) => density(a, &budget),
        Command::RatioGap(a) => {
            let set = a.ground.load(&budget)?;
            let stat = ratio_gap(&set, a.windows)?;
            if let Some(out) = &a.out {
                stat.write_trend_csv(fs::File::create(out.with_extension("csv"))?)?;
            }
            emit(&stat, a.out.as_deref())
        }
        Command::Witness(a) => witness(a, &budget),
        Command::Construct(a) => construct_cmd(a, &budget, false),
        Command::Verify(a) => construct_cmd(a, &budget, true),
        Command::Chain(a) => chain(a, &budget),
        Command::DemoRemark(a) => emit(&demo_remark(a.k, a.m, &budget)?, a.out.as_deref()),
        Command::NetAudit(a) => {
            let net = sphere_net(a.k, a.h, &budget)?;
            emit(&net_audit(&net, a.samples, a.seed), a.out.as_deref())
        }
    }
}

/// Pretty JSON on standard output and, if requested, in `<out>.json`.
fn emit<T: Serialize>(report: &T, out: Option<&Path>) -> Result<(), Error> {
    let mut text = serde_json::to_string_pretty(report)?;
    text.push('\n');
    if let Some(out) = out {
        fs::write(out.with_extension("json"), &text)?;
    }
    io::stdout().write_all(text.as_bytes())?;
    Ok(())
}

fn enumerate(a: EnumerateArgs, budget: &Budget) -> Result<(), Error> {
    let set = a.ground.load(budget)?;
    let cloud = directions_with(&set, a.cloud.k, a.cloud.distinct, budget, a.cloud.sampling())?;
    match &a.out {
        Some(stem) => {
            cloud.export(stem)?;
            emit(&cloud.metadata(), None)
        }
        None => cloud.write_csv(io::stdout().lock()),
    }
}

fn density(a: DensityArgs, budget: &Budget) -> Result<(), Error> {
    let set = a.ground.load(budget)?;
    let plan = a.cloud.sampling_or_default();
    let cloud = directions_with(&set, a.cloud.k, a.cloud.distinct, budget, Some(plan))?;
    let net = sphere_net(a.cloud.k, a.h, budget)?;
    let report = covering_radius(&cloud, &net)?;
    emit(
        &json!({
            "schema_version": SCHEMA_VERSION,
            "rule": a.ground.rule,
            "report": report,
            "tuples_examined": cloud.tuples_examined(),
            "sampling": cloud.sampled().then(|| json!({"samples": plan.samples, "seed": plan.seed})),
        }),
        a.out.as_deref(),
    )
}

fn witness(a: WitnessArgs, budget: &Budget) -> Result<(), Error> {
    let set = a.ground.load(budget)?;
    let coords = a
        .x
        .iter()
        .map(|s| s.trim().parse::<ExactCoord>())
        .collect::<Result<Vec<_>, _>>()?;
    let x = TargetPoint::new(coords)?;
    let w = witness_tuple(&set, &x, a.m)?;
    emit(
        &json!({
            "schema_version": SCHEMA_VERSION,
            "rule": a.ground.rule,
            "N": a.ground.n,
            "x": x.unit().coords(),
            "m": a.m,
            "tuple": w.tuple.entries().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "predecessors": w.predecessors.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "rho": w.tuple.direction().coords(),
            "error": w.error,
            "bound": w.bound,
            "bound_constant": 2,
        }),
        a.out.as_deref(),
    )
}

fn build(spec: &TargetSpec, m: u64, allow_unverified: bool) -> Result<Construction, Error> {
    construct(
        spec,
        m,
        &ConstructOptions {
            allow_unverified,
            ..ConstructOptions::default()
        },
    )
}

fn construct_cmd(a: ConstructArgs, budget: &Budget, force_verify: bool) -> Result<(), Error> {
    let spec = TargetSpec::load(&a.spec)?;
    let run = build(&spec, a.m, a.allow_unverified)?;
    let set = run.ground_set();
    let verification = if a.verify || force_verify {
        let mut params = VerifyParams::new(a.m, a.l.unwrap_or(a.m / 2), a.h);
        params.tolerance = a.tolerance;
        Some(verify_construction(&set, &spec, &params, budget)?)
    } else {
        None
    };
    if let Some(stem) = &a.out {
        let mut dump = Vec::new();
        run.write_dump(&mut dump)?;
        fs::write(stem.with_extension("jsonl"), dump)?;
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_path(stem.with_extension("elements.csv"))?;
        w.write_record(["value", "m", "i"])?;
        for (v, ps) in set.elements().iter().zip(set.provenance().unwrap_or_default()) {
            for p in ps {
                w.write_record([v.to_string(), p.m.to_string(), p.i.to_string()])?;
            }
        }
        w.flush()?;
        if let Some(v) = &verification {
            let mut text = serde_json::to_string_pretty(v)?;
            text.push('\n');
            fs::write(stem.with_extension("verify.json"), text)?;
        }
    }
    emit(
        &json!({
            "schema_version": SCHEMA_VERSION,
            "kind": spec.kind(),
            "k": spec.k(),
            "M": a.m,
            "elements": set.len(),
            "max_element_digits": set.elements().last().map_or(0, |e| e.to_string().len()),
            "max_rho_error_from_m4": run.records().iter().filter(|r| r.m >= 4).map(|r| r.rho_error).fold(0.0, f64::max),
            "verification": verification,
        }),
        None,
    )
}

fn chain(a: ChainArgs, budget: &Budget) -> Result<(), Error> {
    let set = match &a.spec {
        Some(path) => build(&TargetSpec::load(path)?, a.m, false)?.ground_set(),
        None => a.ground.load(budget)?,
    };
    let options = ChainOptions {
        distinct_only: a.distinct,
        tail_threshold: a.l.map(factorial),
        sampling: Some(Sampling {
            samples: a.sample.unwrap_or(DEFAULT_SAMPLES),
            seed: a.seed,
        }),
    };
    let report = chain_check(&set, a.k, a.h, &options, budget)?;
    let sampled = report.upper.sampled || report.lower.sampled;
    emit(
        &json!({
            "schema_version": SCHEMA_VERSION,
            "report": report,
            "sampling": sampled.then(|| json!({"samples": a.sample.unwrap_or(DEFAULT_SAMPLES), "seed": a.seed})),
        }),
        a.out.as_deref(),
    )
}
