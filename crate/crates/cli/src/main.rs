use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use geopack::solver::{gpack_with_catalog, gt_with_catalog, Invariant};
use geopack::{
    enumerate_maximal_geodesics, gpack_exact, gpack_tree, gt_exact, parse_edge_list, run_suite, tree_path, Error,
    FamilySpec, Graph, Outcome, SolveLimits, SolveReport, Suite, VerifyOptions,
};
use num_rational::Ratio;
use serde::Serialize;
use serde_json::json;

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "geopack",
    version,
    about = "Geodesic packing and transversal numbers of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Gpack,
    Gt,
    Both,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Edge list or JSON graph file; `-` reads standard input.
    #[arg(long)]
    file: Option<PathBuf>,

    /// Family spec such as `rook:3` or `strong(path:3,path:4)`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
struct Limits {
    /// Maximum number of maximal geodesics to enumerate.
    #[arg(long, default_value_t = geopack::geodesic::DEFAULT_CAP)]
    cap: usize,

    /// Time budget per solver run, in seconds.
    #[arg(long, default_value_t = 60.0)]
    time_budget: f64,

    /// Search-node budget per solver run.
    #[arg(long, default_value_t = SolveLimits::default().node_budget)]
    node_budget: u64,

    /// Run independent solves on separate threads.
    #[arg(long)]
    parallel: bool,
}

impl Limits {
    fn solve_limits(&self) -> Result<SolveLimits, Error> {
        if !(self.time_budget.is_finite() && self.time_budget > 0.0) {
            return Err(Error::Spec("--time-budget must be a positive number of seconds".into()));
        }
        Ok(SolveLimits {
            max_geodesics: self.cap,
            time_budget: Duration::from_secs_f64(self.time_budget),
            node_budget: self.node_budget,
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute gpack and/or gt with witnesses.
    Compute {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Which::Both)]
        invariant: Which,
        #[command(flatten)]
        limits: Limits,
    },
    /// List every maximal geodesic.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = geopack::geodesic::DEFAULT_CAP)]
        cap: usize,
    },
    /// Print a family member as an edge list or JSON graph.
    Generate {
        #[arg(long)]
        family: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        /// Order of the random graphs; drawn per item when omitted.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 20)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        limits: Limits,
    },
    /// Tabulate gt / gpack over a range of a one-parameter family.
    Ratio {
        /// path, cycle, star, complete, complete_bipartite (balanced) or rook.
        family: String,
        /// Inclusive range such as `2..4`.
        range: String,
        #[command(flatten)]
        limits: Limits,
    },
    /// Linear-time gpack of a tree with its leaf pairs.
    Tree {
        #[command(flatten)]
        input: Input,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn exit_code(error: &Error) -> u8 {
    match error {
        Error::BudgetExceeded { .. } | Error::EnumerationOverflow { .. } => EXIT_BUDGET,
        _ => EXIT_INPUT,
    }
}

fn read_graph(input: &Input) -> Result<Graph, Error> {
    if let Some(spec) = &input.family {
        return spec.parse::<FamilySpec>()?.generate();
    }
    let path = input.file.as_ref().expect("clap enforces one input");
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Spec(format!("reading stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Error::Spec(format!("reading {}: {e}", path.display())))?
    };
    if text.trim_start().starts_with('{') {
        Graph::from_json(&text)
    } else {
        parse_edge_list(&text)
    }
}

fn solve(g: &Graph, invariant: Invariant, limits: &SolveLimits) -> Result<(SolveReport, u64), Error> {
    let outcome = match invariant {
        Invariant::Gpack => gpack_exact(g, limits).map(|s| (SolveReport::from_packing(&s), s.stats.millis)),
        Invariant::Gt => gt_exact(g, limits).map(|s| (SolveReport::from_transversal(&s), s.stats.millis)),
    };
    outcome.or_else(|e| SolveReport::from_budget(invariant, &e).map(|r| (r, 0)).ok_or(e))
}

fn solve_all(g: &Graph, which: Which, limits: &SolveLimits, parallel: bool) -> Result<Vec<(SolveReport, u64)>, Error> {
    let invariants: &[Invariant] = match which {
        Which::Gpack => &[Invariant::Gpack],
        Which::Gt => &[Invariant::Gt],
        Which::Both => &[Invariant::Gpack, Invariant::Gt],
    };
    if parallel && invariants.len() > 1 {
        std::thread::scope(|scope| {
            let handles: Vec<_> = invariants
                .iter()
                .map(|&i| scope.spawn(move || solve(g, i, limits)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("solver thread panicked"))
                .collect()
        })
    } else {
        invariants.iter().map(|&i| solve(g, i, limits)).collect()
    }
}

fn cmd_compute(input: &Input, which: Which, limits: &Limits, format: Format) -> Result<u8, Error> {
    let g = read_graph(input)?;
    let results = solve_all(&g, which, &limits.solve_limits()?, limits.parallel)?;
    let exact = results.iter().all(|(r, _)| r.exact);
    let ratio = match results.as_slice() {
        [(p, _), (t, _)] if exact && p.value > 0 => Some(Ratio::new(t.value, p.value)),
        _ => None,
    };
    match format {
        Format::Json => {
            let reports: Vec<&SolveReport> = results.iter().map(|(r, _)| r).collect();
            let mut out = json!({ "n": g.n(), "m": g.edge_count(), "results": reports });
            if let Some(r) = ratio {
                out["ratio"] = json!(r.to_string());
            }
            println!("{out}");
        }
        Format::Text => {
            println!("graph: {} vertices, {} edges", g.n(), g.edge_count());
            for (r, millis) in &results {
                if r.exact {
                    println!("{} = {}", r.invariant.name(), r.value);
                    println!("  witness: {}", r.witness);
                    println!("  search: {} nodes, {millis} ms", r.stats.nodes);
                } else {
                    println!(
                        "{} in [{}, {}] (budget exceeded, not exact)",
                        r.invariant.name(),
                        r.bounds.lower,
                        r.bounds.upper
                    );
                }
            }
            if let Some(r) = ratio {
                println!("gt / gpack = {r}");
            }
        }
    }
    Ok(if exact { 0 } else { EXIT_BUDGET })
}

fn cmd_enumerate(input: &Input, cap: usize, format: Format) -> Result<u8, Error> {
    let g = read_graph(input)?;
    let catalog = enumerate_maximal_geodesics(&g, cap)?;
    match format {
        Format::Json => println!("{}", catalog.to_json()),
        Format::Text => {
            for p in catalog.geodesics() {
                println!(
                    "{}",
                    p.vertices()
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
            if catalog.is_complete() {
                println!("# {} maximal geodesics", catalog.len());
            } else {
                println!(
                    "# stopped after {} maximal geodesics (cap {})",
                    catalog.len(),
                    catalog.cap()
                );
            }
        }
    }
    Ok(if catalog.is_complete() { 0 } else { EXIT_BUDGET })
}

fn cmd_generate(family: &str, format: Format) -> Result<u8, Error> {
    let g = family.parse::<FamilySpec>()?.generate()?;
    match format {
        Format::Json => println!("{}", g.to_json()),
        Format::Text => print!("{}", g.to_edge_list()),
    }
    Ok(0)
}

fn cmd_verify(
    suite: Suite,
    n: Option<usize>,
    count: usize,
    seed: u64,
    limits: &Limits,
    format: Format,
) -> Result<u8, Error> {
    let opts = VerifyOptions {
        n,
        count,
        seed,
        limits: limits.solve_limits()?,
        parallel: limits.parallel,
    };
    let report = run_suite(suite, &opts);
    let (pass, fail, inconclusive) = (
        report.count(Outcome::Pass),
        report.count(Outcome::Fail),
        report.count(Outcome::Inconclusive),
    );
    match format {
        Format::Json => println!("{}", serde_json::to_string(&report).expect("plain data")),
        Format::Text => {
            for item in &report.items {
                let tag = match item.outcome {
                    Outcome::Pass => "PASS",
                    Outcome::Fail => "FAIL",
                    Outcome::Inconclusive => "INCONCLUSIVE",
                };
                if item.detail.is_empty() {
                    println!("{tag} {}", item.name);
                } else {
                    println!("{tag} {}: {}", item.name, item.detail);
                }
            }
            println!(
                "{suite}: {pass}/{} passed, {fail} failed, {inconclusive} inconclusive",
                report.items.len()
            );
        }
    }
    Ok(if fail > 0 {
        EXIT_FAIL
    } else if inconclusive > 0 {
        EXIT_BUDGET
    } else {
        0
    })
}

fn parse_range(range: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Spec(format!("expected a range like 2..4, got `{range}`"));
    let (lo, hi) = range.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let (lo, hi): (usize, usize) = (
        lo.trim().parse().map_err(|_| bad())?,
        hi.trim().parse().map_err(|_| bad())?,
    );
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn family_member(name: &str, n: usize) -> Result<FamilySpec, Error> {
    let spec = match name {
        "complete_bipartite" => format!("complete_bipartite:{n},{n}"),
        "path" | "cycle" | "star" | "complete" | "rook" => format!("{name}:{n}"),
        other => {
            return Err(Error::Spec(format!(
                "ratio needs a one-parameter family, got `{other}`"
            )))
        }
    };
    spec.parse()
}

#[derive(Serialize)]
struct RatioRow {
    n: usize,
    gt: SolveReportSummary,
    gpack: SolveReportSummary,
    ratio: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    curve: Option<String>,
}

#[derive(Serialize)]
struct SolveReportSummary {
    value: usize,
    exact: bool,
    lower: usize,
    upper: usize,
}

impl From<&SolveReport> for SolveReportSummary {
    fn from(r: &SolveReport) -> Self {
        SolveReportSummary {
            value: r.value,
            exact: r.exact,
            lower: r.bounds.lower,
            upper: r.bounds.upper,
        }
    }
}

impl std::fmt::Display for SolveReportSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.exact {
            write!(f, "{}", self.value)
        } else {
            write!(f, "[{},{}]", self.lower, self.upper)
        }
    }
}

fn cmd_ratio(family: &str, range: &str, limits: &Limits, format: Format) -> Result<u8, Error> {
    let (lo, hi) = parse_range(range)?;
    let solve_limits = limits.solve_limits()?;
    let mut rows = Vec::new();
    for n in lo..=hi {
        let g = family_member(family, n)?.generate()?;
        let catalog = enumerate_maximal_geodesics(&g, solve_limits.max_geodesics)?;
        catalog.require_complete()?;
        let gpack = gpack_with_catalog(&g, &catalog, &solve_limits)
            .map(|s| SolveReport::from_packing(&s))
            .or_else(|e| SolveReport::from_budget(Invariant::Gpack, &e).ok_or(e))?;
        let gt = gt_with_catalog(&g, &catalog, &solve_limits)
            .map(|s| SolveReport::from_transversal(&s))
            .or_else(|e| SolveReport::from_budget(Invariant::Gt, &e).ok_or(e))?;
        let ratio = (gpack.exact && gt.exact && gpack.value > 0).then(|| Ratio::new(gt.value, gpack.value).to_string());
        let curve = (family == "rook" && n > 0).then(|| Ratio::new(3 * (n * n + 2 - 2 * n), n * n).to_string());
        rows.push(RatioRow {
            n,
            gt: (&gt).into(),
            gpack: (&gpack).into(),
            ratio,
            curve,
        });
    }
    let exact = rows.iter().all(|r| r.gt.exact && r.gpack.exact);
    match format {
        Format::Json => println!("{}", json!({ "family": family, "rows": rows })),
        Format::Text => {
            let curve_header = if family == "rook" { "  3(1-2/n+2/n^2)" } else { "" };
            println!(
                "{:>3}  {:>8}  {:>8}  {:>8}{curve_header}",
                "n", "gt", "gpack", "gt/gpack"
            );
            for r in &rows {
                let ratio = r.ratio.as_deref().unwrap_or("-");
                let curve = r.curve.as_deref().map(|c| format!("  {c:>15}")).unwrap_or_default();
                println!(
                    "{:>3}  {:>8}  {:>8}  {:>8}{curve}",
                    r.n,
                    r.gt.to_string(),
                    r.gpack.to_string(),
                    ratio
                );
            }
        }
    }
    Ok(if exact { 0 } else { EXIT_BUDGET })
}

fn cmd_tree(input: &Input, format: Format) -> Result<u8, Error> {
    let t = read_graph(input)?;
    let result = gpack_tree(&t)?;
    match format {
        Format::Json => println!("{}", result.to_json()),
        Format::Text => {
            println!("gpack = {}", result.value());
            let mut pairs = result.pairs().to_vec();
            pairs.sort_unstable();
            for (u, v) in pairs {
                let path = tree_path(&t, u, v);
                println!(
                    "  {u} {v}: {}",
                    path.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                );
            }
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Compute {
            input,
            invariant,
            limits,
        } => cmd_compute(&input, invariant, &limits, cli.format),
        Command::Enumerate { input, cap } => cmd_enumerate(&input, cap, cli.format),
        Command::Generate { family } => cmd_generate(&family, cli.format),
        Command::Verify {
            suite,
            n,
            count,
            seed,
            limits,
        } => cmd_verify(suite, n, count, seed, &limits, cli.format),
        Command::Ratio { family, range, limits } => cmd_ratio(&family, &range, &limits, cli.format),
        Command::Tree { input } => cmd_tree(&input, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
