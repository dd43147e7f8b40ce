//! Subcommands and their argument types.
//!
//! Exit status: 0 when every asserted property holds, 1 when one fails (the
//! report then contains the failing instance), 2 for invalid arguments or
//! unreadable input.

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use induced_core::constructions::{generate, ConstructionSpec, Kind};
use induced_core::first::{verify_first_selection, BoundSpec, Method};
use induced_core::second::{
    check_cubic_lemma, delaunay_graph, gen_interval_upper, grid_depth_map, interval_depth_profile,
    interval_partition_holds, planarity_check, rectangle_grid_counts, rectangle_threshold_met, sample_subset,
    InducedSubset,
};
use induced_core::{contains, depth_brute, depth_fast, has_fast_path, Family, PointSet, RationalPoint, Variant};
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::formats::{parse_point_set, parse_subset, write_grid_csv, write_point_set, Frame};
use crate::report::{rows, BoundReport, Envelope, PointJson};
use crate::suite::{self, CriterionReport};

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exit {
    /// Every asserted property holds.
    Ok = 0,
    /// A property failed.
    Failed = 1,
    /// Invalid configuration or input.
    Usage = 2,
}

/// Exact verification of selection lemmas for objects induced by point pairs.
#[derive(Debug, Parser)]
#[command(name = "induced", version, about)]
pub struct Cli {
    /// The subcommand to run.
    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a construction and write it as a point-set file.
    Gen(GenArgs),
    /// Depth of one point, by brute force and by the fast engine.
    Depth(DepthArgs),
    /// Find a piercing point and compare its depth with the lower bound.
    Pierce(PierceArgs),
    /// Check a lower bound on many random sets.
    Verify(VerifyArgs),
    /// Second selection for a subset of induced objects.
    Second(SecondArgs),
    /// Delaunay graph of a family and its planarity.
    Delaunay(DelaunayArgs),
    /// Run the full acceptance suite.
    Selftest(SelftestArgs),
}

/// Report format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    /// Versioned JSON.
    #[default]
    Json,
    /// Comma-separated values, where the command has a table to offer.
    Csv,
    /// A short human-readable summary.
    Text,
}

/// Finder used by `pierce` and `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Best depth over all candidates.
    Optimal,
    /// The family's constructive finder.
    Constructive,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Optimal => Method::Optimal,
            MethodArg::Constructive => Method::Constructive,
        }
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("unknown family `{s}`; expected one of {}", names.join(", "))
    })
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    match s {
        "strong" => Ok(Variant::Strong),
        "weak" => Ok(Variant::Weak),
        _ => Err(format!("unknown variant `{s}`; expected strong or weak")),
    }
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    Kind::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Kind::ALL.iter().map(|k| k.name()).collect();
        format!("unknown construction `{s}`; expected one of {}", names.join(", "))
    })
}

fn parse_ratio(s: &str) -> Result<Ratio<i128>, String> {
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let num: i128 = num.trim().parse().map_err(|e| format!("`{s}`: {e}"))?;
    let den: i128 = den.trim().parse().map_err(|e| format!("`{s}`: {e}"))?;
    if den == 0 {
        return Err(format!("`{s}`: zero denominator"));
    }
    Ok(Ratio::new(num, den))
}

/// Where and how to write the report.
#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// A point set read from a file or generated at random.
#[derive(Debug, Args)]
pub struct InputArgs {
    /// Point-set file.
    #[arg(long = "in", conflicts_with_all = ["n", "seed"])]
    pub input: Option<PathBuf>,
    /// Number of random points (requires --seed).
    #[arg(long)]
    pub n: Option<usize>,
    /// Dimension of random points.
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Seed of the random set.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Generate origin-symmetric random sets.
    #[arg(long)]
    pub symmetric: bool,
}

impl InputArgs {
    fn load(&self) -> anyhow::Result<(PointSet, Frame)> {
        if let Some(path) = &self.input {
            return read_points(path);
        }
        match (self.n, self.seed) {
            (Some(n), Some(seed)) => Ok((suite::random_set(n, self.d, seed, self.symmetric)?, Frame::Cartesian)),
            (Some(_), None) => bail!("--seed is required for random input"),
            _ => bail!("give either --in FILE or --n N --seed S"),
        }
    }
}

fn read_points(path: &PathBuf) -> anyhow::Result<(PointSet, Frame)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_point_set(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Arguments of `gen`.
#[derive(Debug, Args)]
pub struct GenArgs {
    /// Construction: circle, semicircle, chain, line, grid, threearc, random or symmetric.
    #[arg(value_parser = parse_kind)]
    pub kind: Kind,
    /// Number of points.
    #[arg(long)]
    pub n: usize,
    /// Dimension.
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Radius of circular constructions, spacing of lattice ones, range of random ones.
    #[arg(long)]
    pub scale: Option<i64>,
    /// Seed; required by the random constructions.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Arguments of `depth`.
#[derive(Debug, Args)]
pub struct DepthArgs {
    /// Family of induced objects.
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    /// Query point as comma-separated rationals, e.g. `3/2,-7`.
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
    #[command(flatten)]
    #[allow(missing_docs)]
    pub input: InputArgs,
    #[command(flatten)]
    #[allow(missing_docs)]
    pub output: OutputArgs,
}

/// Arguments of `pierce`.
#[derive(Debug, Args)]
pub struct PierceArgs {
    /// Family of induced objects.
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    /// `strong` (members only) or `weak`.
    #[arg(long, value_parser = parse_variant)]
    pub variant: Variant,
    /// Finder to run.
    #[arg(long, value_enum, default_value_t = MethodArg::Optimal)]
    pub method: MethodArg,
    /// Override the linear slack of the bound, as `p/q`.
    #[arg(long, value_parser = parse_ratio)]
    pub slack: Option<Ratio<i128>>,
    #[command(flatten)]
    #[allow(missing_docs)]
    pub input: InputArgs,
    #[command(flatten)]
    #[allow(missing_docs)]
    pub output: OutputArgs,
}

/// Arguments of `verify`.
#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Family of induced objects.
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    /// `strong` (members only) or `weak`.
    #[arg(long, value_parser = parse_variant)]
    pub variant: Variant,
    /// Finder to run.
    #[arg(long, value_enum, default_value_t = MethodArg::Constructive)]
    pub method: MethodArg,
    /// Number of random sets; trial `t` uses seed `seed + t`.
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Override the linear slack of the bound, as `p/q`.
    #[arg(long, value_parser = parse_ratio)]
    pub slack: Option<Ratio<i128>>,
    /// Number of points per set.
    #[arg(long)]
    pub n: usize,
    /// Dimension.
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    /// Base seed.
    #[arg(long)]
    pub seed: u64,
    /// Use origin-symmetric sets and the symmetric bounds.
    #[arg(long)]
    pub symmetric: bool,
    #[command(flatten)]
    #[allow(missing_docs)]
    pub output: OutputArgs,
}

/// Arguments of `second`.
#[derive(Debug, Args)]
pub struct SecondArgs {
    /// interval, rect, skyline, downtri or disk.
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    /// Number of objects sampled from the random set (requires --seed).
    #[arg(long)]
    pub m: Option<usize>,
    /// Subset file with the inducing pairs (used with --in).
    #[arg(long, requires = "input")]
    pub subset: Option<PathBuf>,
    /// Use the prefix-interval upper construction on `1..=n` (intervals only).
    #[arg(long, conflicts_with_all = ["input", "seed", "subset"])]
    pub upper: bool,
    #[command(flatten)]
    #[allow(missing_docs)]
    pub input: InputArgs,
    #[command(flatten)]
    #[allow(missing_docs)]
    pub output: OutputArgs,
}

/// Arguments of `delaunay`.
///
/// Random input (`--n`, `--seed`) is redrawn until it is in general position
/// for all three families; see [`suite::delaunay_set`].
#[derive(Debug, Args)]
pub struct DelaunayArgs {
    /// skyline, downtri or disk.
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[command(flatten)]
    #[allow(missing_docs)]
    pub input: InputArgs,
    #[command(flatten)]
    #[allow(missing_docs)]
    pub output: OutputArgs,
}

/// Arguments of `selftest`.
#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Base seed of every criterion.
    #[arg(long)]
    pub seed: u64,
    /// Run only these criteria (1 to 7); all when absent.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<u8>,
    #[command(flatten)]
    #[allow(missing_docs)]
    pub output: OutputArgs,
}

/// Parses arguments, runs the command and returns the exit status.
///
/// Usage errors and unreadable input are printed to standard error.
pub fn main_with<I, T>(args: I) -> Exit
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Exit::Usage } else { Exit::Ok };
        }
    };
    match run(&cli) {
        Ok(true) => Exit::Ok,
        Ok(false) => Exit::Failed,
        Err(e) => {
            eprintln!("error: {e:#}");
            Exit::Usage
        }
    }
}

/// A rendered report in the formats a command supports.
struct Rendered {
    json: String,
    text: String,
    csv: Option<String>,
}

fn emit(output: &OutputArgs, rendered: Rendered) -> anyhow::Result<()> {
    let body = match output.format {
        Format::Json => rendered.json,
        Format::Text => rendered.text,
        Format::Csv => rendered.csv.ok_or_else(|| anyhow!("this command has no CSV output"))?,
    };
    write_out(output.out.as_ref(), &body)
}

fn write_out(out: Option<&PathBuf>, body: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

/// Runs a parsed command. `Ok(false)` means an asserted property failed.
pub fn run(cli: &Cli) -> anyhow::Result<bool> {
    match &cli.command {
        Command::Gen(args) => gen(args),
        Command::Depth(args) => depth(args),
        Command::Pierce(args) => pierce(args),
        Command::Verify(args) => verify(args),
        Command::Second(args) => second(args),
        Command::Delaunay(args) => delaunay(args),
        Command::Selftest(args) => selftest(args),
    }
}

fn gen(args: &GenArgs) -> anyhow::Result<bool> {
    let random = matches!(args.kind, Kind::RandomGeneral | Kind::RandomSymmetric);
    if random && args.seed.is_none() {
        bail!("--seed is required for random constructions");
    }
    let mut spec = ConstructionSpec::new(args.kind, args.n).with_dim(args.d).with_seed(args.seed.unwrap_or(0));
    if let Some(scale) = args.scale {
        spec = spec.with_scale(scale);
    }
    let set = generate(&spec)?;
    let mut header = format!("# induced gen {} --n {} --d {}", args.kind.name(), args.n, args.d);
    if let Some(scale) = args.scale {
        header += &format!(" --scale {scale}");
    }
    if let Some(seed) = args.seed {
        header += &format!(" --seed {seed}");
    }
    write_out(args.out.as_ref(), &format!("{header}\n{}", write_point_set(&set, Frame::Cartesian)))?;
    Ok(true)
}

fn parse_point(s: &str) -> anyhow::Result<RationalPoint> {
    let coords = s.split(',').map(|w| parse_ratio(w.trim()).map(|r| (*r.numer(), *r.denom())));
    let coords = coords.collect::<Result<Vec<_>, _>>().map_err(|e| anyhow!("--point {e}"))?;
    Ok(RationalPoint::from_ratios(&coords)?)
}

#[derive(Serialize)]
struct DepthBody {
    family: &'static str,
    n: usize,
    point: PointJson,
    brute: u64,
    fast: Option<u64>,
    fast_error: Option<String>,
}

fn depth(args: &DepthArgs) -> anyhow::Result<bool> {
    let (set, _) = args.input.load()?;
    let p = parse_point(&args.point)?;
    let brute = depth_brute(&set, args.family, &p)?.depth;
    let (fast, fast_error) = if has_fast_path(args.family, set.dim()) {
        match depth_fast(&set, args.family, &p) {
            Ok(r) => (Some(r.depth), None),
            Err(e) => (None, Some(e.to_string())),
        }
    } else {
        (None, Some("no fast path".to_owned()))
    };
    let holds = fast.is_none_or(|f| f == brute);
    let text = format!(
        "{} depth at {p}: brute {brute}, fast {}\n",
        args.family,
        fast.map_or_else(|| fast_error.clone().unwrap_or_default(), |f| f.to_string())
    );
    let body = DepthBody {
        family: args.family.name(),
        n: set.len(),
        point: PointJson::new(&p, set.index_of(&p)),
        brute,
        fast,
        fast_error,
    };
    emit(&args.output, Rendered { json: Envelope::new("depth", holds, body).to_json(), text, csv: None })?;
    Ok(holds)
}

fn bound_spec(
    family: Family,
    variant: Variant,
    d: usize,
    symmetric: bool,
    method: MethodArg,
    slack: Option<Ratio<i128>>,
) -> BoundSpec {
    let zero = Ratio::from_integer(0);
    let mut spec = suite::lower_spec(family, variant, d, symmetric)
        .unwrap_or_else(|| BoundSpec::lower(family, variant, zero, zero));
    spec = spec.with_method(method.into());
    if let Some(slack) = slack {
        spec = spec.with_slack(slack);
    }
    spec
}

#[derive(Serialize)]
struct PierceBody {
    #[serde(flatten)]
    check: BoundReport,
    points: Option<Vec<Vec<i64>>>,
}

fn pierce(args: &PierceArgs) -> anyhow::Result<bool> {
    let (set, _) = args.input.load()?;
    let symmetric = args.input.symmetric || (set.dim() == 2 && set.is_origin_symmetric());
    let spec = bound_spec(args.family, args.variant, set.dim(), symmetric, args.method, args.slack);
    let check = verify_first_selection(&set, &spec)?;
    let report = BoundReport::new(&check, args.input.seed);
    let text = format!(
        "{} {}: depth {} at {} (required {}) {}\n",
        args.family,
        args.variant,
        check.observed,
        check.point,
        check.required,
        if check.holds { "holds" } else { "FAILS" }
    );
    let body = PierceBody { check: report, points: (!check.holds).then(|| rows(&set)) };
    emit(&args.output, Rendered { json: Envelope::new("pierce", check.holds, body).to_json(), text, csv: None })?;
    Ok(check.holds)
}

#[derive(Serialize)]
struct TrialReport {
    trial: usize,
    #[serde(flatten)]
    check: BoundReport,
    replay: Option<String>,
    points: Option<Vec<Vec<i64>>>,
}

#[derive(Serialize)]
struct VerifyBody {
    family: &'static str,
    variant: &'static str,
    n: usize,
    d: usize,
    seed: u64,
    trials: usize,
    failed: usize,
    results: Vec<TrialReport>,
}

fn verify(args: &VerifyArgs) -> anyhow::Result<bool> {
    if args.trials == 0 {
        bail!("--trials must be positive");
    }
    let spec = bound_spec(args.family, args.variant, args.d, args.symmetric, args.method, args.slack);
    args.family.check_dim(args.d)?;
    let results = (0..args.trials)
        .into_par_iter()
        .map(|t| {
            let seed = args.seed.wrapping_add(t as u64);
            let set = suite::random_set(args.n, args.d, seed, args.symmetric)?;
            let check = verify_first_selection(&set, &spec)?;
            let failed = !check.holds;
            let flag = if args.symmetric { " --symmetric" } else { "" };
            Ok(TrialReport {
                trial: t,
                check: BoundReport::new(&check, Some(seed)),
                replay: failed.then(|| {
                    format!(
                        "induced verify --family {} --variant {} --n {} --d {} --seed {seed} --trials 1{flag}",
                        args.family, args.variant, args.n, args.d
                    )
                }),
                points: failed.then(|| rows(&set)),
            })
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let failed = results.iter().filter(|r| !r.check.holds).count();
    let mut text = String::new();
    for r in &results {
        let c = &r.check;
        let verdict = if c.holds { "ok" } else { "FAIL" };
        text += &format!(
            "trial {} seed {}: depth {} required {} {verdict}\n",
            r.trial,
            c.seed.unwrap_or(0),
            c.observed,
            c.required.exact
        );
    }
    text += &format!("{failed} of {} trials failed\n", args.trials);
    let body = VerifyBody {
        family: args.family.name(),
        variant: args.variant.name(),
        n: args.n,
        d: args.d,
        seed: args.seed,
        trials: args.trials,
        failed,
        results,
    };
    emit(&args.output, Rendered { json: Envelope::new("verify", failed == 0, body).to_json(), text, csv: None })?;
    Ok(failed == 0)
}

fn second_instance(args: &SecondArgs) -> anyhow::Result<(PointSet, InducedSubset)> {
    let family = args.family;
    if args.upper {
        if family != Family::Interval {
            bail!("--upper is only defined for intervals");
        }
        let (n, m) = args.input.n.zip(args.m).ok_or_else(|| anyhow!("--upper needs --n and --m"))?;
        return Ok(gen_interval_upper(n, m)?);
    }
    if let (Some(path), Some(subset)) = (&args.input.input, &args.subset) {
        let (set, _) = read_points(path)?;
        let text = fs::read_to_string(subset).with_context(|| format!("reading {}", subset.display()))?;
        let subset = parse_subset(&text, set.len(), family).with_context(|| format!("parsing {}", subset.display()))?;
        return Ok((set, subset));
    }
    let d = if family == Family::Interval { 1 } else { 2 };
    if args.input.input.is_none() && args.input.d != 2 && args.input.d != d {
        bail!("{family} subsets live in dimension {d}");
    }
    let (set, _) = if args.input.input.is_some() {
        args.input.load()?
    } else {
        let (n, seed) = args
            .input
            .n
            .zip(args.input.seed)
            .ok_or_else(|| anyhow!("give --in FILE --subset FILE, or --n N --m M --seed S"))?;
        (suite::random_set(n, d, seed, false)?, Frame::Cartesian)
    };
    let m = args.m.ok_or_else(|| anyhow!("--m is required unless --subset is given"))?;
    let seed = args.input.seed.ok_or_else(|| anyhow!("--seed is required to sample a subset"))?;
    let subset = sample_subset(&set, family, m, seed)?;
    Ok((set, subset))
}

#[derive(Serialize)]
struct IntervalBody {
    n: usize,
    m: usize,
    max: u64,
    argmax: usize,
    bound_holds: bool,
    partition_holds: bool,
    depths: Vec<u64>,
    points: Option<Vec<Vec<i64>>>,
    pairs: Option<Vec<(usize, usize)>>,
}

#[derive(Serialize)]
struct CubicBody {
    parts: usize,
    failed: usize,
    holds: bool,
}

#[derive(Serialize)]
struct RectangleBody {
    n: usize,
    m: usize,
    threshold_met: bool,
    max: u64,
    argmax: Vec<i64>,
    bound_holds: bool,
    sum_depth: u64,
    sum_grid_counts: u64,
    identity_holds: bool,
    cubic: CubicBody,
    points: Option<Vec<Vec<i64>>>,
    pairs: Option<Vec<(usize, usize)>>,
}

#[derive(Serialize)]
struct MeasureBody {
    family: &'static str,
    n: usize,
    m: usize,
    candidates: usize,
    max: u64,
    argmax: PointJson,
    m2_over_n2: f64,
}

fn second(args: &SecondArgs) -> anyhow::Result<bool> {
    let (set, subset) = second_instance(args)?;
    let (n, m) = (set.len(), subset.len());
    match args.family {
        Family::Interval => {
            let profile = interval_depth_profile(&set, &subset)?;
            let partition_holds = interval_partition_holds(&set, &subset)?;
            let holds = profile.bound_holds && partition_holds;
            let text = format!(
                "intervals n={n} m={m}: max depth {} at point {} (bound {}), partition {}\n",
                profile.max,
                profile.argmax,
                if profile.bound_holds { "holds" } else { "FAILS" },
                if partition_holds { "holds" } else { "FAILS" }
            );
            let mut csv = String::from("x,depth\n");
            for (p, d) in set.points().iter().zip(&profile.depths) {
                csv += &format!("{},{d}\n", p.coord(0));
            }
            let body = IntervalBody {
                n,
                m,
                max: profile.max,
                argmax: profile.argmax,
                bound_holds: profile.bound_holds,
                partition_holds,
                depths: profile.depths,
                points: (!holds).then(|| rows(&set)),
                pairs: (!holds).then(|| subset.pairs().to_vec()),
            };
            emit(
                &args.output,
                Rendered { json: Envelope::new("second", holds, body).to_json(), text, csv: Some(csv) },
            )?;
            Ok(holds)
        }
        Family::Rectangle => {
            let map = grid_depth_map(&set, &subset)?;
            let counts = rectangle_grid_counts(&set, &subset)?;
            let cubic = check_cubic_lemma(&set, &subset)?;
            let (sum_depth, sum_grid_counts) = (map.total(), counts.iter().sum::<u64>());
            let identity_holds = sum_depth == sum_grid_counts;
            let holds = map.bound_holds && identity_holds && cubic.holds;
            let argmax = vec![map.grid.xs[map.argmax.0], map.grid.ys[map.argmax.1]];
            let text = format!(
                "rectangles n={n} m={m}: max I_g {} at ({}, {}), bound {}, sum I_g {sum_depth} vs sum J_r {sum_grid_counts}, cubic lemma {}\n",
                map.max,
                argmax[0],
                argmax[1],
                if map.bound_holds { "holds" } else { "FAILS" },
                if cubic.holds { "holds" } else { "FAILS" }
            );
            let csv = write_grid_csv(&map);
            let body = RectangleBody {
                n,
                m,
                threshold_met: rectangle_threshold_met(n, m),
                max: map.max,
                argmax,
                bound_holds: map.bound_holds,
                sum_depth,
                sum_grid_counts,
                identity_holds,
                cubic: CubicBody {
                    parts: cubic.checks.len(),
                    failed: cubic.checks.iter().filter(|c| !c.holds).count(),
                    holds: cubic.holds,
                },
                points: (!holds).then(|| rows(&set)),
                pairs: (!holds).then(|| subset.pairs().to_vec()),
            };
            emit(
                &args.output,
                Rendered { json: Envelope::new("second", holds, body).to_json(), text, csv: Some(csv) },
            )?;
            Ok(holds)
        }
        Family::Skyline | Family::DownTriangle | Family::Disk => {
            let (point, max, candidates) = measure_subset(&set, &subset)?;
            let text =
                format!("{} n={n} m={m}: max depth {max} over {candidates} candidates at {point}\n", args.family);
            let body = MeasureBody {
                family: args.family.name(),
                n,
                m,
                candidates,
                max,
                argmax: PointJson::new(&point, set.index_of(&point)),
                m2_over_n2: (m * m) as f64 / (n * n) as f64,
            };
            emit(&args.output, Rendered { json: Envelope::new("second", true, body).to_json(), text, csv: None })?;
            Ok(true)
        }
        other => bail!("second selection is not implemented for {other}"),
    }
}

/// Largest number of subset objects containing a candidate, over the members
/// and the centroids of the inducing pairs. A measurement, not a bound.
fn measure_subset(set: &PointSet, subset: &InducedSubset) -> anyhow::Result<(RationalPoint, u64, usize)> {
    let mut candidates: Vec<RationalPoint> = set.points().iter().map(RationalPoint::from).collect();
    for &(i, j) in subset.pairs() {
        let (a, b) = (set.point(i), set.point(j));
        let num = (0..set.dim()).map(|k| a.coord(k) as i128 + b.coord(k) as i128).collect();
        candidates.push(RationalPoint::new(num, 2)?);
    }
    let family = subset.family();
    let scored = candidates
        .par_iter()
        .map(|c| {
            let mut count = 0u64;
            for &(i, j) in subset.pairs() {
                count += u64::from(contains(family, set.point(i), set.point(j), c)?);
            }
            Ok(count)
        })
        .collect::<Result<Vec<u64>, induced_core::GeomError>>()?;
    let (best, &max) =
        scored.iter().enumerate().max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0))).expect("at least one point");
    Ok((candidates[best].clone(), max, candidates.len()))
}

#[derive(Serialize)]
struct DelaunayBody {
    family: &'static str,
    n: usize,
    edges: usize,
    euler_bound: bool,
    planar: bool,
    graph: Vec<(usize, usize)>,
    points: Option<Vec<Vec<i64>>>,
}

fn delaunay(args: &DelaunayArgs) -> anyhow::Result<bool> {
    let set = match (&args.input.input, args.input.n, args.input.seed) {
        (None, Some(n), Some(seed)) => suite::delaunay_set(n, seed)?,
        _ => args.input.load()?.0,
    };
    let graph = delaunay_graph(&set, args.family)?;
    let report = planarity_check(set.len(), &graph);
    let holds = report.euler_bound && report.planar;
    let text = format!(
        "{} Delaunay graph: n={} edges={} euler bound {} planar {}\n",
        args.family, report.n, report.edges, report.euler_bound, report.planar
    );
    let mut csv = String::from("a,b\n");
    for (a, b) in &graph {
        csv += &format!("{a},{b}\n");
    }
    let body = DelaunayBody {
        family: args.family.name(),
        n: report.n,
        edges: report.edges,
        euler_bound: report.euler_bound,
        planar: report.planar,
        graph,
        points: (!holds).then(|| rows(&set)),
    };
    emit(&args.output, Rendered { json: Envelope::new("delaunay", holds, body).to_json(), text, csv: Some(csv) })?;
    Ok(holds)
}

#[derive(Serialize)]
struct SelftestBody {
    seed: u64,
    criteria: Vec<CriterionReport>,
}

fn selftest(args: &SelftestArgs) -> anyhow::Result<bool> {
    let ids: Vec<u8> = if args.only.is_empty() { (1..=7).collect() } else { args.only.clone() };
    if let Some(bad) = ids.iter().find(|id| !(1..=7).contains(*id)) {
        bail!("criterion {bad} cannot run inside selftest; choose from 1 to 7");
    }
    let mut criteria = Vec::with_capacity(ids.len());
    for id in ids {
        let start = Instant::now();
        let report = suite::run_criterion(id, args.seed);
        let verdict = if report.holds { "pass" } else { "FAIL" };
        eprintln!("criterion {id} ({}): {verdict} in {:.1} s", report.name, start.elapsed().as_secs_f64());
        criteria.push(report);
    }
    let holds = criteria.iter().all(|c| c.holds);
    let mut text = String::new();
    for c in &criteria {
        let verdict = if c.holds { "pass" } else { "FAIL" };
        text += &format!(
            "criterion {} {}: {verdict} ({} instances, {} checks, {} failed)\n",
            c.id, c.name, c.instances, c.checks, c.failed
        );
    }
    let body = SelftestBody { seed: args.seed, criteria };
    emit(&args.output, Rendered { json: Envelope::new("selftest", holds, body).to_json(), text, csv: None })?;
    Ok(holds)
}
