//! Command-line interface.
//!
//! Exit codes: 0 success, 1 check failure (a verification or scan found a
//! mismatch, collision, or was aborted by budget), 2 bad input or exceeded
//! budget on a direct computation.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::chromatic::{
    beta_expansion, chi_delcon, chi_enumerate, chi_loebl, chi_orientations_formula, chi_tilde,
    chi_tilde_mobius, leading_coeff, leading_coeff_orientations, leading_coeff_tree,
    normalized_fingerprint, reciprocity_lhs, reciprocity_rhs, stable_evaluation,
};
use crate::config::{OutputFormat, RunConfig};
use crate::error::{Error, Result};
use crate::gpartitions::{count_gpartitions, gpartition_series, leading_coeff_via_gpartitions};
use crate::graphs::{Graph, WeightVector};
use crate::harness::io::{load_graph_file, parse_lambda_csv};
use crate::harness::scan::scan_trees;
use crate::harness::verify::{verify_suite, VerifyLevel};
use crate::qalgebra::{QPoly, QRat, XPoly};

#[derive(Parser)]
#[command(
    name = "qchrom",
    version,
    about = "Exact q-chromatic polynomials of graphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Worker count for the scanner (default: QCHROM_JOBS or all CPUs).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest explicit n accepted.
    #[arg(long = "budget-max-n", global = true)]
    budget_max_n: Option<u64>,
    /// Bound on n^d for one brute-force enumeration.
    #[arg(long = "budget-oracle-work", global = true)]
    budget_oracle_work: Option<u128>,
    /// Bound on 2^|E| for edge-subset sums.
    #[arg(long = "budget-edge-subsets", global = true)]
    budget_edge_subsets: Option<u64>,
    /// Bound on inspected vertex partitions during flat enumeration.
    #[arg(long = "budget-flats", global = true)]
    budget_flats: Option<u64>,
    /// Bound on Lambda_V for the unit-weight reduction.
    #[arg(long = "budget-reduction-weight", global = true)]
    budget_reduction_weight: Option<u64>,
    /// Largest d the tree scanner accepts.
    #[arg(long = "budget-scan-d", global = true)]
    budget_scan_d: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Enumerate,
    Mobius,
    Orientations,
    Loebl,
    Delcon,
    Interpolate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Auto,
    Tree,
    Orientations,
    Gpartition,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Compute chi (needs --n) or chi-tilde by the chosen method.
    Poly {
        #[arg(long)]
        graph: String,
        /// Comma-separated positive vertex weights (default: all ones).
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value_t = MethodArg::Interpolate)]
        method: MethodArg,
        /// Number of colors (required by enumerate/orientations/loebl/delcon).
        #[arg(long)]
        n: Option<u64>,
    },
    /// Leading coefficient of chi-tilde plus the normalized fingerprint.
    Leading {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value_t = RouteArg::Auto)]
        route: RouteArg,
    },
    /// The beta_j table of the q-binomial expansion (unit weights).
    Beta {
        #[arg(long)]
        graph: String,
    },
    /// Reciprocity left side, right side, and equality verdict.
    Reciprocity {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// G-partition counts p_G(n) and the generating function P_G(q).
    Gpartitions {
        #[arg(long)]
        graph: String,
        /// Largest n to tabulate (default 20).
        #[arg(long)]
        upto: Option<u64>,
    },
    /// P_G(q) versus the stable principal evaluation chi-tilde(q, 1/(1-q)).
    Stable {
        #[arg(long)]
        graph: String,
    },
    /// Scan all non-isomorphic trees on D vertices for fingerprint collisions.
    Trees {
        #[arg(long)]
        vertices: usize,
    },
    /// Run the cross-method verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
    },
}

/// Entry point; returns the process exit code.
pub fn cli(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own message (also for --help/--version)
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let config = build_config(&cli);
    match run(&cli, &config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn build_config(cli: &Cli) -> RunConfig {
    let mut config = RunConfig::default();
    if let Some(n) = cli.budget_max_n {
        config.max_n = n;
    }
    if let Some(w) = cli.budget_oracle_work {
        config.max_oracle_work = w;
    }
    if let Some(s) = cli.budget_edge_subsets {
        config.max_edge_subsets = s;
    }
    if let Some(f) = cli.budget_flats {
        config.max_flat_partitions = f;
    }
    if let Some(r) = cli.budget_reduction_weight {
        config.max_reduction_weight = r;
    }
    if let Some(s) = cli.budget_scan_d {
        config.max_scan_d = s;
    }
    config.jobs = cli
        .jobs
        .or_else(|| {
            std::env::var("QCHROM_JOBS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(0);
    config.format = match cli.format {
        FormatArg::Text => OutputFormat::Text,
        FormatArg::Json => OutputFormat::Json,
        FormatArg::Latex => OutputFormat::Latex,
    };
    config
}

fn load_inputs(path: &str, lambda_arg: &Option<String>) -> Result<(Graph, WeightVector)> {
    let (graph, file_lambda) = load_graph_file(path)?;
    let lambda = match lambda_arg {
        Some(csv) => parse_lambda_csv(csv, graph.vertex_count())?,
        None => file_lambda.unwrap_or_else(|| WeightVector::unit(graph.vertex_count())),
    };
    Ok((graph, lambda))
}

fn check_n(n: u64, config: &RunConfig) -> Result<()> {
    if n > config.max_n {
        return Err(Error::BudgetExceeded(format!(
            "n = {n} exceeds max_n = {} (raise --budget-max-n)",
            config.max_n
        )));
    }
    Ok(())
}

fn render_qpoly(p: &QPoly, format: OutputFormat) -> String {
    match format {
        OutputFormat::Latex => p.latex(),
        _ => p.to_string(),
    }
}

fn render_qrat(r: &QRat, format: OutputFormat) -> String {
    match format {
        OutputFormat::Latex => r.latex(),
        _ => r.to_string(),
    }
}

fn render_xpoly(p: &XPoly, format: OutputFormat) -> String {
    match format {
        OutputFormat::Latex => p.latex(),
        _ => p.to_string(),
    }
}

fn run(cli: &Cli, config: &RunConfig) -> Result<i32> {
    match &cli.command {
        Command::Poly {
            graph,
            lambda,
            method,
            n,
        } => run_poly(graph, lambda, *method, *n, config),
        Command::Leading {
            graph,
            lambda,
            route,
        } => run_leading(graph, lambda, *route, config),
        Command::Beta { graph } => run_beta(graph, config),
        Command::Reciprocity { graph, n, lambda } => run_reciprocity(graph, *n, lambda, config),
        Command::Gpartitions { graph, upto } => run_gpartitions(graph, *upto, config),
        Command::Stable { graph } => run_stable(graph, config),
        Command::Trees { vertices } => run_trees(*vertices, config),
        Command::Verify { level } => run_verify(*level, config),
    }
}

fn run_poly(
    path: &str,
    lambda_arg: &Option<String>,
    method: MethodArg,
    n: Option<u64>,
    config: &RunConfig,
) -> Result<i32> {
    let (graph, lambda) = load_inputs(path, lambda_arg)?;
    let needs_unit = matches!(method, MethodArg::Orientations | MethodArg::Loebl);
    if needs_unit && !lambda.is_unit() {
        return Err(Error::InvalidInput(
            "methods orientations and loebl support unit weights only".into(),
        ));
    }
    let method_name = match method {
        MethodArg::Enumerate => "enumerate",
        MethodArg::Mobius => "mobius",
        MethodArg::Orientations => "orientations",
        MethodArg::Loebl => "loebl",
        MethodArg::Delcon => "delcon",
        MethodArg::Interpolate => "interpolate",
    };
    match method {
        MethodArg::Interpolate | MethodArg::Mobius => {
            let tilde = match method {
                MethodArg::Interpolate => chi_tilde(&graph, &lambda, config)?.tilde,
                _ => chi_tilde_mobius(&graph, &lambda, config)?,
            };
            if config.format == OutputFormat::Json {
                println!(
                    "{}",
                    json!({
                        "schema": "qchrom/1",
                        "command": "poly",
                        "method": method_name,
                        "d": graph.vertex_count(),
                        "lambda": lambda.weights(),
                        "chi_tilde": tilde,
                    })
                );
            } else {
                println!("chi_tilde(q, x) = {}", render_xpoly(&tilde, config.format));
            }
        }
        _ => {
            let n = n.ok_or_else(|| {
                Error::InvalidInput(format!("--n is required for method {method_name}"))
            })?;
            check_n(n, config)?;
            let chi = match method {
                MethodArg::Enumerate => chi_enumerate(&graph, &lambda, n, config)?,
                MethodArg::Delcon => chi_delcon(&graph, &lambda, n, config)?,
                MethodArg::Orientations => chi_orientations_formula(&graph, n),
                MethodArg::Loebl => chi_loebl(&graph, n, config)?,
                _ => unreachable!(),
            };
            if config.format == OutputFormat::Json {
                println!(
                    "{}",
                    json!({
                        "schema": "qchrom/1",
                        "command": "poly",
                        "method": method_name,
                        "d": graph.vertex_count(),
                        "lambda": lambda.weights(),
                        "n": n,
                        "chi": chi,
                    })
                );
            } else if method == MethodArg::Loebl {
                // 0-based color convention; q^d * value matches the others
                println!("chi_hat(q, {n}) = {}", render_qpoly(&chi, config.format));
            } else {
                println!("chi(q, {n}) = {}", render_qpoly(&chi, config.format));
            }
        }
    }
    Ok(0)
}

fn run_leading(
    path: &str,
    lambda_arg: &Option<String>,
    route: RouteArg,
    config: &RunConfig,
) -> Result<i32> {
    let (graph, lambda) = load_inputs(path, lambda_arg)?;
    let unit = lambda.is_unit();
    let route = match route {
        RouteArg::Auto => {
            if unit {
                RouteArg::Orientations
            } else if graph.is_tree() {
                RouteArg::Tree
            } else {
                // direct interpolation handles weighted non-trees
                RouteArg::Auto
            }
        }
        r => r,
    };
    let (route_name, coeff) = match route {
        RouteArg::Tree => ("tree", leading_coeff_tree(&graph, &lambda, config)?),
        RouteArg::Orientations => {
            if !unit {
                return Err(Error::InvalidInput(
                    "route orientations requires unit weights".into(),
                ));
            }
            ("orientations", leading_coeff_orientations(&graph))
        }
        RouteArg::Gpartition => {
            if !unit {
                return Err(Error::InvalidInput(
                    "route gpartition requires unit weights".into(),
                ));
            }
            ("gpartition", leading_coeff_via_gpartitions(&graph, config)?)
        }
        RouteArg::Auto => ("direct", leading_coeff(&graph, &lambda, config)?),
    };
    let fingerprint = unit.then(|| normalized_fingerprint(&graph));
    if config.format == OutputFormat::Json {
        println!(
            "{}",
            json!({
                "schema": "qchrom/1",
                "command": "leading",
                "route": route_name,
                "d": graph.vertex_count(),
                "lambda": lambda.weights(),
                "leading_coeff": coeff,
                "fingerprint": fingerprint,
            })
        );
    } else {
        println!(
            "leading coefficient = {}",
            render_qrat(&coeff, config.format)
        );
        if let Some(fp) = fingerprint {
            println!(
                "normalized fingerprint = {}",
                render_qpoly(&fp, config.format)
            );
        }
    }
    Ok(0)
}

fn run_beta(path: &str, config: &RunConfig) -> Result<i32> {
    let (graph, lambda) = load_inputs(path, &None)?;
    if !lambda.is_unit() {
        return Err(Error::InvalidInput(
            "beta expansion is defined for unit weights".into(),
        ));
    }
    let expansion = beta_expansion(&graph);
    if config.format == OutputFormat::Json {
        println!(
            "{}",
            json!({
                "schema": "qchrom/1",
                "command": "beta",
                "d": expansion.d,
                "chromatic_number": expansion.xi,
                "betas": expansion.betas,
            })
        );
    } else {
        println!("d = {}, chromatic number = {}", expansion.d, expansion.xi);
        for (j, beta) in expansion.betas.iter().enumerate() {
            println!("beta_{j} = {}", render_qpoly(beta, config.format));
        }
    }
    Ok(0)
}

fn run_reciprocity(
    path: &str,
    n: u64,
    lambda_arg: &Option<String>,
    config: &RunConfig,
) -> Result<i32> {
    if n == 0 {
        return Err(Error::InvalidInput("reciprocity needs n >= 1".into()));
    }
    check_n(n, config)?;
    let (graph, lambda) = load_inputs(path, lambda_arg)?;
    let lhs = reciprocity_lhs(&graph, &lambda, n, config)?;
    let rhs = reciprocity_rhs(&graph, &lambda, n, config)?;
    let equal = lhs == QRat::from_poly(rhs.clone());
    if config.format == OutputFormat::Json {
        println!(
            "{}",
            json!({
                "schema": "qchrom/1",
                "command": "reciprocity",
                "n": n,
                "lhs": lhs,
                "rhs": rhs,
                "equal": equal,
            })
        );
    } else {
        println!("lhs = {}", render_qrat(&lhs, config.format));
        println!("rhs = {}", render_qpoly(&rhs, config.format));
        println!("verdict: {}", if equal { "equal" } else { "MISMATCH" });
    }
    Ok(if equal { 0 } else { 1 })
}

fn run_gpartitions(path: &str, upto: Option<u64>, config: &RunConfig) -> Result<i32> {
    let (graph, _) = load_inputs(path, &None)?;
    let upto = upto.unwrap_or(20).min(config.n_trunc as u64);
    let series = gpartition_series(&graph, config)?;
    // cross-check the tabulated prefix against brute force
    for n in 0..=upto {
        let brute = count_gpartitions(&graph, n, config)?;
        if series.prefix[n as usize] != num_bigint::BigInt::from(brute) {
            return Err(Error::InternalMismatch(format!(
                "series prefix differs at n = {n}"
            )));
        }
    }
    if config.format == OutputFormat::Json {
        println!(
            "{}",
            json!({
                "schema": "qchrom/1",
                "command": "gpartitions",
                "d": graph.vertex_count(),
                "series": series.series,
                "prefix": series.prefix.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "upto": upto,
            })
        );
    } else {
        println!("P_G(q) = {}", render_qrat(&series.series, config.format));
        for n in 0..=upto {
            println!("p_G({n}) = {}", series.prefix[n as usize]);
        }
    }
    Ok(0)
}

fn run_stable(path: &str, config: &RunConfig) -> Result<i32> {
    let (graph, _) = load_inputs(path, &None)?;
    let unit = WeightVector::unit(graph.vertex_count());
    let series = gpartition_series(&graph, config)?.series;
    let stable = stable_evaluation(&graph, &unit, config)?;
    let equal = series == stable;
    if config.format == OutputFormat::Json {
        println!(
            "{}",
            json!({
                "schema": "qchrom/1",
                "command": "stable",
                "p_g": series,
                "stable_evaluation": stable,
                "equal": equal,
            })
        );
    } else {
        println!(
            "P_G(q)               = {}",
            render_qrat(&series, config.format)
        );
        println!(
            "chi_tilde(q, 1/(1-q)) = {}",
            render_qrat(&stable, config.format)
        );
        println!("verdict: {}", if equal { "equal" } else { "MISMATCH" });
    }
    Ok(if equal { 0 } else { 1 })
}

fn run_trees(vertices: usize, config: &RunConfig) -> Result<i32> {
    let report = scan_trees(vertices, config)?;
    if config.format == OutputFormat::Json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        );
    } else {
        println!(
            "d = {}: {} trees, {} collisions, {} audited, {} worker(s), {} ms",
            report.d,
            report.tree_count,
            report.collisions.len(),
            report.runtime_stats.audited,
            report.runtime_stats.workers,
            report.elapsed_ms
        );
        if let Some(marker) = &report.aborted {
            println!("{marker}");
        }
        for (form, fingerprint) in &report.fingerprints {
            println!("{form}  {fingerprint}");
        }
        for collision in &report.collisions {
            println!(
                "COLLISION {:?} share {}",
                collision.trees, collision.fingerprint
            );
        }
        for form in &report.audit_failures {
            println!("AUDIT FAILURE {form}");
        }
    }
    let clean = report.collisions.is_empty()
        && report.audit_failures.is_empty()
        && report.aborted.is_none();
    Ok(if clean { 0 } else { 1 })
}

fn run_verify(level: LevelArg, config: &RunConfig) -> Result<i32> {
    let level = match level {
        LevelArg::Quick => VerifyLevel::Quick,
        LevelArg::Full => VerifyLevel::Full,
    };
    let report = verify_suite(config, level)?;
    if config.format == OutputFormat::Json {
        println!(
            "{}",
            serde_json::to_string(&report).expect("report serializes")
        );
    } else {
        for check in &report.checks {
            if check.pass {
                println!("PASS {} ({})", check.name, check.details);
            } else {
                println!(
                    "FAIL {} ({})",
                    check.name,
                    check
                        .counterexample
                        .as_deref()
                        .unwrap_or("no instance recorded")
                );
            }
        }
        for note in &report.info {
            println!("info: {note}");
        }
    }
    Ok(if report.all_pass() { 0 } else { 1 })
}
