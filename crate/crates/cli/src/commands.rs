use std::fs::File;
use std::io::BufReader;

use girthcut::bounds::{bound_report, table_rows, sigma_upper_bound};
use girthcut::graph::{builtin, load_edge_list, Graph};
use girthcut::rounding::{expected_cut_exact, monte_carlo_with_threads};
use girthcut::solution::{build_vectors, profile, Mode, ProfileKind};
use girthcut::Error;

use crate::render::{self, GraphInfo, SolveReport};
use crate::{Format, GraphSource, EXIT_INGESTION, EXIT_PRECONDITION, EXIT_USAGE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        Self { code: EXIT_PRECONDITION, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) | Error::Usage(_) | Error::UnknownGraph { .. } => EXIT_USAGE,
            Error::Certification(_) | Error::Generation(_) => EXIT_PRECONDITION,
            Error::Ingestion { .. } => EXIT_INGESTION,
        };
        Self { code, message: e.to_string() }
    }
}

/// Parses `3`, `3,5,7` or an inclusive range `3..9`.
pub fn parse_list(text: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::usage(format!("cannot parse `{text}` as a list or range"));
    let values: Vec<usize> = if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        (lo..=hi).collect()
    } else {
        text.split(',')
            .map(|t| t.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?
    };
    if values.is_empty() {
        return Err(CliError::usage(format!("`{text}` is an empty range")));
    }
    Ok(values)
}

fn check_degree_and_k(d: usize, k: usize) -> Result<(), CliError> {
    if d < 3 {
        return Err(CliError::usage(format!("--d must be at least 3, got {d}")));
    }
    if k < 1 {
        return Err(CliError::usage("--k must be at least 1"));
    }
    Ok(())
}

pub fn cmd_bound(d: usize, k: usize, kind: ProfileKind, format: Format) -> Result<String, CliError> {
    check_degree_and_k(d, k)?;
    let report = bound_report(d, k, kind)?;
    Ok(render::bound(&report, sigma_upper_bound(d, k), format))
}

pub fn cmd_table(pairs: &[(usize, usize)], format: Format) -> Result<String, CliError> {
    if pairs.is_empty() {
        return Err(CliError::usage("empty table"));
    }
    for &(k, d) in pairs {
        check_degree_and_k(d, k)?;
    }
    let rows = table_rows(pairs)?;
    Ok(render::table(&rows, format))
}

fn load(source: &GraphSource) -> Result<(String, Graph), CliError> {
    match (&source.graph, &source.builtin) {
        (Some(path), None) => {
            let file = File::open(path).map_err(|e| CliError {
                code: EXIT_INGESTION,
                message: format!("cannot open {}: {e}", path.display()),
            })?;
            let graph = load_edge_list(BufReader::new(file)).map_err(|e| CliError {
                code: EXIT_INGESTION,
                message: format!("{}: {e}", path.display()),
            })?;
            Ok((path.display().to_string(), graph))
        }
        (None, Some(name)) => Ok((format!("builtin:{name}"), builtin(name)?)),
        _ => Err(CliError::usage("give exactly one of --graph or --builtin")),
    }
}

fn graph_info(label: String, graph: &Graph) -> GraphInfo {
    let girth = graph.girth();
    GraphInfo {
        source: label,
        n: graph.n(),
        m: graph.m(),
        d: graph.regular_degree().ok(),
        girth: girth.finite(),
        k_max: girth.finite().map(|g| g / 2),
        diameter: graph.diameter(),
    }
}

pub fn cmd_graph_info(source: &GraphSource, format: Format) -> Result<String, CliError> {
    let (label, graph) = load(source)?;
    Ok(render::graph_info(&graph_info(label, &graph), format))
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_solve(
    source: &GraphSource,
    k: Option<usize>,
    kind: ProfileKind,
    mode: Mode,
    samples: u64,
    seed: u64,
    threads: Option<usize>,
    format: Format,
) -> Result<String, CliError> {
    if samples == 0 {
        return Err(CliError::usage("--samples must be at least 1"));
    }
    let (label, graph) = load(source)?;
    let info = graph_info(label, &graph);
    let d = match info.d {
        Some(d) => d,
        None => {
            let v = graph.regular_degree().unwrap_err();
            return Err(CliError::precondition(format!(
                "graph is not regular: vertex {v} has degree {}, vertex 0 has degree {}",
                graph.degree(v),
                graph.degree(0)
            )));
        }
    };
    if d < 3 {
        return Err(CliError::precondition(format!("graph degree must be at least 3, got {d}")));
    }
    let k = match (k, mode) {
        (Some(0), _) => return Err(CliError::usage("--k must be at least 1")),
        (Some(k), _) => k,
        (None, Mode::Strict) => info
            .k_max
            .ok_or_else(|| CliError::usage("graph has no cycle; pass --k"))?,
        (None, Mode::Practical) => info
            .diameter
            .ok_or_else(|| CliError::usage("graph is disconnected; pass --k"))?
            .max(1),
    };

    let profile = profile(kind, d, k)?;
    let solution = build_vectors(&graph, &profile, mode)?;
    let expected_cut = expected_cut_exact(&solution);
    let rounding = monte_carlo_with_threads(&solution, samples, seed, threads)?;

    let report = SolveReport {
        graph: info,
        k,
        mode,
        profile: kind,
        sigma: profile.sigma,
        alphas: profile.alphas.clone(),
        sdp_objective: solution.sdp_objective(),
        expected_cut,
        expected_fraction: expected_cut / graph.m() as f64,
        max_edge_deviation: match mode {
            Mode::Strict => Some(solution.max_edge_deviation()),
            Mode::Practical => None,
        },
        edge_inner_products: match mode {
            Mode::Strict => None,
            Mode::Practical => Some(
                graph
                    .edges()
                    .iter()
                    .zip(solution.edge_products())
                    .map(|(&(u, v), &value)| render::EdgeProduct { u, v, value })
                    .collect(),
            ),
        },
        rounding,
    };
    Ok(render::solve(&report, format))
}
