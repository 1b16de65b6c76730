//! Command implementations. Every command resolves its input graph the
//! same way (file or generator, reduced to the largest component with a
//! warning), renders one or more tables, and reports the number of
//! invariant violations it found so main can pick the exit code.

use std::fmt;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use hyperecc::dist::{
    approximate_all_distances, approximate_all_distances_estimated, error_stats,
    sampled_admissible_delta, sampled_distance_stats, smallest_admissible_delta, DistanceEstimate,
    EstimateMode, StretchEstimator,
};
use hyperecc::ecc::{distortion, estimate_eccentricities, Strategy, TreeVariant};
use hyperecc::gen;
use hyperecc::hyperbolicity::{
    four_point_delta, four_point_delta_sampled, four_point_delta_seeded, HyperbolicityReport,
};
use hyperecc::oracle::{all_eccentricities, center_geometry, distance_matrix};
use hyperecc::verify::{check_distance_estimate, verify_graph, verify_suite, VerifyOptions};
use hyperecc::{Budget, Graph};

use crate::table::ReportTable;
use crate::{Command, InputArgs};

pub enum CliError {
    Usage(String),
    Core(hyperecc::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<hyperecc::Error> for CliError {
    fn from(e: hyperecc::Error) -> CliError {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Core(hyperecc::Error::from(e))
    }
}

impl CliError {
    /// 1 invariant violation, 2 usage or parse trouble, 3 budget refusal.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) if e.is_budget() => 3,
            CliError::Core(hyperecc::Error::ContractViolation(_)) => 1,
            CliError::Core(_) => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Runs one subcommand and returns how many invariant violations it found.
pub fn dispatch(cmd: Command) -> CliResult<u32> {
    match cmd {
        Command::Stats { input, sample } => cmd_stats(&input, sample),
        Command::Trees { input, start } => cmd_trees(&input, start),
        Command::Distances {
            input,
            root,
            delta,
            rho,
            sample,
            dump_dhat,
        } => cmd_distances(&input, root, delta, rho, sample, dump_dhat.as_deref()),
        Command::Verify { input, start, dhat } => cmd_verify(&input, start, dhat.as_deref()),
        Command::Hyperbolicity { input, sample } => cmd_hyperbolicity(&input, sample),
    }
}

fn parse_gen_spec(spec: &str, seed: u64) -> CliResult<Graph> {
    const GRAMMAR: &str =
        "expected path:N, cycle:N, grid:RxC, star:LEAVES, complete:N, random:N,P or tree:N";
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| usage(format!("bad generator spec {spec:?}: {GRAMMAR}")))?;
    let bad = |detail: &str| usage(format!("bad generator spec {spec:?}: {detail}"));
    let count = |s: &str| -> CliResult<usize> {
        s.parse()
            .map_err(|_| bad(&format!("{s:?} is not a vertex count")))
    };
    match kind {
        "path" => Ok(gen::path(count(rest)?.max(1))),
        "cycle" => {
            let n = count(rest)?;
            if n < 3 {
                return Err(bad("cycles need at least 3 vertices"));
            }
            Ok(gen::cycle(n))
        }
        "grid" => {
            let (r, c) = rest.split_once('x').ok_or_else(|| bad("grid takes RxC"))?;
            Ok(gen::grid(count(r)?.max(1), count(c)?.max(1)))
        }
        "star" => Ok(gen::star(count(rest)?.max(1))),
        "complete" => Ok(gen::complete(count(rest)?.max(1))),
        "tree" => Ok(gen::random_tree(count(rest)?.max(1), seed)),
        "random" => {
            let (n, p) = rest
                .split_once(',')
                .ok_or_else(|| bad("random takes N,P"))?;
            let n = count(n)?;
            let p: f64 = p
                .parse()
                .map_err(|_| bad(&format!("{p:?} is not an edge probability")))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(bad("edge probability must be in [0, 1]"));
            }
            gen::random_connected(n, p, seed, 10_000)
                .map_err(|_| bad("no connected sample found; raise P"))
        }
        _ => Err(bad(GRAMMAR)),
    }
}

fn load_graph(args: &InputArgs) -> CliResult<Graph> {
    let g = match (&args.input, &args.gen) {
        (Some(path), _) => Graph::from_path(path)?,
        (None, Some(spec)) => parse_gen_spec(spec, args.seed)?,
        (None, None) => return Err(usage("provide --input PATH or --gen SPEC")),
    };
    if g.is_connected() {
        return Ok(g);
    }
    let total = g.vertex_count();
    let (reduced, _) = g.largest_component();
    eprintln!(
        "warning: input is disconnected; analyzing the largest component ({} of {total} vertices)",
        reduced.vertex_count()
    );
    Ok(reduced)
}

fn budget_from(args: &InputArgs) -> Budget {
    let mut b = Budget::default();
    if let Some(limit) = args.budget {
        b.max_edge_visits = limit;
        b.max_entries = limit;
    }
    b.force = args.force;
    b
}

fn emit(args: &InputArgs, text: &str) -> CliResult<()> {
    match &args.out {
        Some(path) => {
            let mut f = File::create(path)?;
            f.write_all(text.as_bytes())?;
            Ok(())
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn delta4_cell(report: &HyperbolicityReport) -> String {
    if report.exact {
        report.delta4.to_string()
    } else {
        format!("{}*", report.delta4)
    }
}

/// Exact four-point scan when affordable, otherwise a sampled lower bound
/// (random quadruples if the matrix fits, BFS-seeded subset if not), and
/// `None` when even that exceeds the budget.
fn delta4_best_effort(
    g: &Graph,
    m: Option<&hyperecc::DistanceMatrix>,
    samples: u64,
    seed: u64,
    budget: &Budget,
) -> CliResult<Option<HyperbolicityReport>> {
    if let Some(m) = m {
        match four_point_delta(m, budget) {
            Ok(r) => return Ok(Some(r)),
            Err(e) if e.is_budget() => return Ok(Some(four_point_delta_sampled(m, samples, seed))),
            Err(e) => return Err(e.into()),
        }
    }
    match four_point_delta_seeded(g, 64, seed, budget) {
        Ok(r) => Ok(Some(r)),
        Err(e) if e.is_budget() => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn cmd_stats(args: &InputArgs, sample: u64) -> CliResult<u32> {
    let g = load_graph(args)?;
    let budget = budget_from(args);
    let n = g.vertex_count();
    let m = g.edge_count();

    let mut table = ReportTable::new(&[
        "n",
        "m",
        "center_size",
        "avg_degree",
        "rad",
        "diam",
        "center_diam",
        "center_connected",
        "delta4",
    ]);
    let mut row = vec![
        n.to_string(),
        m.to_string(),
        "-".to_string(),
        format!("{:.3}", 2.0 * m as f64 / n as f64),
        "-".to_string(),
        "-".to_string(),
        "-".to_string(),
        "-".to_string(),
        "-".to_string(),
    ];

    match all_eccentricities(&g, &budget) {
        Ok(profile) => {
            let geometry = center_geometry(&g, &profile);
            row[2] = profile.center.len().to_string();
            row[4] = profile.rad.to_string();
            row[5] = profile.diam.to_string();
            row[6] = geometry.center_diam.to_string();
            row[7] = yes_no(geometry.center_connected).to_string();
        }
        Err(e) if e.is_budget() => {}
        Err(e) => return Err(e.into()),
    }

    let matrix = match distance_matrix(&g, &budget) {
        Ok(m) => Some(m),
        Err(e) if e.is_budget() => None,
        Err(e) => return Err(e.into()),
    };
    if let Some(r) = delta4_best_effort(&g, matrix.as_ref(), sample, args.seed, &budget)? {
        row[8] = delta4_cell(&r);
    }

    table.push(row);
    emit(args, &table.render(args.pretty))?;
    Ok(0)
}

fn cmd_trees(args: &InputArgs, start: u32) -> CliResult<u32> {
    let g = load_graph(args)?;
    let budget = budget_from(args);
    let n = g.vertex_count();
    let profile = all_eccentricities(&g, &budget)?;

    let refined = estimate_eccentricities(&g, Strategy::Refined, start)?;
    let pair = refined
        .pair
        .as_ref()
        .expect("refined strategy finds a pair");
    let c = refined.root;
    let heights_from_c = g.bfs(c)?.height;
    let to_center = |v: u32| heights_from_c[v as usize];
    let center_distance = profile.center.iter().map(|&x| to_center(x)).min().unwrap();
    let cover_radius = profile.center.iter().map(|&x| to_center(x)).max().unwrap();

    let mut summary = ReportTable::new(&[
        "scans",
        "pair_distance",
        "rad_gap",
        "middle_ecc",
        "middle_gap",
        "center_distance",
        "cover_radius",
    ]);
    summary.push(vec![
        pair.scans.to_string(),
        pair.distance.to_string(),
        (2 * profile.rad - pair.distance).to_string(),
        profile.ecc[c as usize].to_string(),
        (profile.ecc[c as usize] - profile.rad).to_string(),
        center_distance.to_string(),
        cover_radius.to_string(),
    ]);

    let mut trees = ReportTable::new(&["tree", "root", "tree_diam", "k_max", "k_avg", "histogram"]);
    for (variant, label) in [
        (TreeVariant::T1, "T1"),
        (TreeVariant::T2, "T2"),
        (TreeVariant::T3, "T3"),
    ] {
        let mut tree = hyperecc::ecc::build_approx_tree(&g, variant, Some(&profile), start)?;
        hyperecc::ecc::tree_eccentricities(&mut tree);
        let d = distortion(&tree.ecc, &profile);
        let histogram = d
            .histogram
            .iter()
            .enumerate()
            .map(|(k, &count)| format!("{k}:{:.1}", 100.0 * count as f64 / n as f64))
            .collect::<Vec<_>>()
            .join(",");
        trees.push(vec![
            label.to_string(),
            tree.root.to_string(),
            tree.diam.to_string(),
            d.k_max.to_string(),
            format!("{:.3}", d.k_avg),
            histogram,
        ]);
    }

    let text = format!(
        "{}\n{}",
        summary.render(args.pretty),
        trees.render(args.pretty)
    );
    emit(args, &text)?;
    Ok(0)
}

/// Rows most distant from the root, ties to the smaller id; mirrors how
/// sampled error statistics pick their sources.
fn furthest_rows(g: &Graph, root: u32, count: usize) -> CliResult<Vec<u32>> {
    let heights = g.bfs(root)?.height;
    let mut order: Vec<u32> = (0..g.vertex_count() as u32).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(heights[v as usize]), v));
    order.truncate(count.max(1));
    order.sort_unstable();
    Ok(order)
}

fn cmd_distances(
    args: &InputArgs,
    root: Option<u32>,
    delta: Option<u32>,
    rho: Option<u32>,
    sample: Option<usize>,
    dump: Option<&Path>,
) -> CliResult<u32> {
    let g = load_graph(args)?;
    let budget = budget_from(args);
    let n = g.vertex_count() as u32;
    let root = match root {
        Some(r) if r < n => r,
        Some(r) => {
            return Err(usage(format!("root {r} out of range for {n} vertices")));
        }
        None => estimate_eccentricities(&g, Strategy::Refined, 0)?.root,
    };
    let rows = match sample {
        Some(k) => Some(furthest_rows(&g, root, k)?),
        None => None,
    };
    let flag = |value: u32| match rows {
        Some(_) => format!("{value}*"),
        None => value.to_string(),
    };

    let mut table;
    let mut to_dump: Option<DistanceEstimate> = None;

    if let Some(rho) = rho {
        let m = distance_matrix(&g, &budget)?;
        let estimator = StretchEstimator::new(&m);
        let est = approximate_all_distances_estimated(&g, rho, &estimator, root, &budget)?;
        let stats = error_stats(&est, &m);
        table = ReportTable::new(&["rho", "delta_max", "delta_avg", "within_band"]);
        table.push(vec![
            rho.to_string(),
            stats.max_err.to_string(),
            format!("{:.3}", stats.avg_err),
            yes_no(stats.min_err >= 0 && stats.max_err <= 2 * rho as i64 + 2).to_string(),
        ]);
        to_dump = Some(est);
    } else {
        table = ReportTable::new(&["delta", "delta_max", "delta_avg", "admissible"]);
        let mut dump_lambda = delta;
        if let Some(delta) = delta {
            let stats = match &rows {
                Some(rows) => sampled_distance_stats(&g, delta, root, rows, &budget)?,
                None => {
                    let m = distance_matrix(&g, &budget)?;
                    error_stats(&approximate_all_distances(&g, delta, root, &budget)?, &m)
                }
            };
            table.push(vec![
                flag(delta),
                stats.max_err.to_string(),
                format!("{:.3}", stats.avg_err),
                yes_no(stats.max_err <= delta as i64 + 1).to_string(),
            ]);
        } else {
            let search = match &rows {
                Some(rows) => sampled_admissible_delta(&g, root, rows, &budget)?,
                None => {
                    let m = distance_matrix(&g, &budget)?;
                    smallest_admissible_delta(&g, root, &m, &budget)?
                }
            };
            for row in &search.rows {
                table.push(vec![
                    flag(row.delta),
                    row.stats.max_err.to_string(),
                    format!("{:.3}", row.stats.avg_err),
                    yes_no(row.admissible).to_string(),
                ]);
            }
            dump_lambda = Some(search.delta);
        }
        if dump.is_some() {
            let lambda = dump_lambda.expect("search always yields a slack");
            to_dump = Some(approximate_all_distances(&g, lambda, root, &budget)?);
        }
    }

    if let Some(path) = dump {
        let est = to_dump.expect("estimate prepared for dumping");
        let mut w = BufWriter::new(File::create(path)?);
        est.write_binary(&mut w)?;
        w.flush()?;
    }
    emit(args, &table.render(args.pretty))?;
    Ok(0)
}

fn cmd_verify(args: &InputArgs, start: u32, dhat: Option<&Path>) -> CliResult<u32> {
    let budget = budget_from(args);
    let mut table = ReportTable::keyed();
    let violations: Vec<(String, &'static str, String)>;

    if let Some(path) = dhat {
        let g = load_graph(args)?;
        let mut reader = BufReader::new(File::open(path)?);
        let est = DistanceEstimate::read_binary(&mut reader)?;
        if est.vertex_count() != g.vertex_count() {
            return Err(usage(format!(
                "estimate file covers {} vertices but the graph has {}",
                est.vertex_count(),
                g.vertex_count()
            )));
        }
        let m = distance_matrix(&g, &budget)?;
        let allowed = match est.mode {
            EstimateMode::ExactPower => est.lambda_or_rho + 1,
            EstimateMode::Estimator => 2 * est.lambda_or_rho + 2,
        };
        violations = check_distance_estimate(&est, &m, allowed)
            .into_iter()
            .map(|v| (path.display().to_string(), v.rule, v.detail))
            .collect();
        table.pair(
            "pairs_checked",
            g.vertex_count() * (g.vertex_count() - 1) / 2,
        );
        table.pair("allowed_over_error", allowed);
    } else if args.input.is_some() || args.gen.is_some() {
        let g = load_graph(args)?;
        let report = verify_graph(&g, &VerifyOptions { start, budget })?;
        table.pair("tau", report.tau);
        table.pair("rad", report.rad);
        table.pair("diam", report.diam);
        table.pair("checks", report.checks);
        violations = report
            .violations
            .into_iter()
            .map(|v| ("-".to_string(), v.rule, v.detail))
            .collect();
    } else {
        let outcome = verify_suite(args.seed, &VerifyOptions { start, budget })?;
        table.pair("graphs", outcome.graphs);
        table.pair("checks", outcome.checks);
        violations = outcome
            .violations
            .into_iter()
            .map(|(name, v)| (name, v.rule, v.detail))
            .collect();
    }

    table.pair("violations", violations.len());
    let mut text = table.render(args.pretty);
    let mut detail = ReportTable::new(&["violation", "source", "rule", "detail"]);
    let count = violations.len() as u32;
    for (source, rule, message) in violations {
        detail.push(vec![
            "violation".to_string(),
            source,
            rule.to_string(),
            message,
        ]);
    }
    if count > 0 {
        text.push('\n');
        text.push_str(&detail.render(args.pretty));
    }
    emit(args, &text)?;
    Ok(count)
}

fn cmd_hyperbolicity(args: &InputArgs, sample: Option<u64>) -> CliResult<u32> {
    let g = load_graph(args)?;
    let budget = budget_from(args);
    let report = match sample {
        Some(k) => {
            let m = distance_matrix(&g, &budget)?;
            four_point_delta_sampled(&m, k, args.seed)
        }
        None => {
            let matrix = match distance_matrix(&g, &budget) {
                Ok(m) => Some(m),
                Err(e) if e.is_budget() => None,
                Err(e) => return Err(e.into()),
            };
            delta4_best_effort(&g, matrix.as_ref(), 100_000, args.seed, &budget)?.ok_or(
                hyperecc::Error::BudgetExceeded {
                    what: "seeded four-point scan",
                    needed: 64 * g.edge_count() as u64,
                    limit: budget.max_edge_visits,
                    unit: "edge visits",
                },
            )?
        }
    };
    let mut table = ReportTable::keyed();
    table.pair("delta4", report.delta4);
    table.pair(
        "witness",
        report
            .witness
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    );
    table.pair("thinness_bound", report.thinness_bound);
    table.pair("mode", if report.exact { "exact" } else { "sampled" });
    emit(args, &table.render(args.pretty))?;
    Ok(0)
}
