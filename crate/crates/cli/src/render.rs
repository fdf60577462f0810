//! Text, CSV and JSON renderings. Relative expectations and normalized values
//! are truncated to five decimals; everything else is printed at full
//! precision.

use std::f64::consts::{PI, SQRT_2};
use std::fmt::Write;

use girthcut::bounds::{
    truncate, truncated_string, BoundReport, QAOA_C_INFINITY, TABLE_DECIMALS, THRESHOLD_C_INFINITY,
};
use girthcut::rounding::RoundingReport;
use girthcut::solution::{Mode, ProfileKind};
use serde::Serialize;

use crate::{Format, SCHEMA_VERSION};

fn trunc(x: f64) -> f64 {
    truncate(x, TABLE_DECIMALS)
}

fn trunc_str(x: f64) -> String {
    truncated_string(x, TABLE_DECIMALS)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn opt<T: ToString>(v: Option<T>, none: &str) -> String {
    v.map_or_else(|| none.to_string(), |v| v.to_string())
}

fn profile_name(p: ProfileKind) -> &'static str {
    match p {
        ProfileKind::Optimal => "optimal",
        ProfileKind::ClosedForm => "closedform",
    }
}

fn mode_name(m: Mode) -> &'static str {
    match m {
        Mode::Strict => "strict",
        Mode::Practical => "practical",
    }
}

#[derive(Serialize)]
struct ReferenceConstants {
    explicit_vector: f64,
    qaoa_depth2: f64,
    threshold_depth2: f64,
}

const REFERENCE: ReferenceConstants = ReferenceConstants {
    explicit_vector: SQRT_2 / PI,
    qaoa_depth2: QAOA_C_INFINITY,
    threshold_depth2: THRESHOLD_C_INFINITY,
};

#[derive(Serialize)]
struct BoundJson {
    schema_version: u32,
    command: &'static str,
    d: usize,
    k: usize,
    profile: ProfileKind,
    sigma_opt: f64,
    sigma_w: f64,
    sigma_upper_bound: f64,
    cut_fraction: f64,
    xi_ev: f64,
    xi_ev_opt: f64,
    xi_lyons: f64,
    normalized_value: f64,
    reference_c_infinity: ReferenceConstants,
}

pub fn bound(r: &BoundReport, sigma_upper_bound: f64, format: Format) -> String {
    match format {
        Format::Json => json(&BoundJson {
            schema_version: SCHEMA_VERSION,
            command: "bound",
            d: r.d,
            k: r.k,
            profile: r.profile,
            sigma_opt: r.sigma_opt,
            sigma_w: r.sigma_w,
            sigma_upper_bound,
            cut_fraction: r.cut_fraction,
            xi_ev: trunc(r.xi_ev),
            xi_ev_opt: trunc(r.xi_ev_opt),
            xi_lyons: trunc(r.xi_lyons),
            normalized_value: trunc(r.normalized_value),
            reference_c_infinity: REFERENCE,
        }),
        Format::Csv => format!(
            "d,k,profile,sigma_opt,sigma_w,sigma_upper_bound,cut_fraction,xi_ev,xi_ev_opt,xi_lyons,normalized_value\n\
             {},{},{},{},{},{},{},{},{},{},{}\n",
            r.d,
            r.k,
            profile_name(r.profile),
            r.sigma_opt,
            r.sigma_w,
            sigma_upper_bound,
            r.cut_fraction,
            trunc_str(r.xi_ev),
            trunc_str(r.xi_ev_opt),
            trunc_str(r.xi_lyons),
            trunc_str(r.normalized_value),
        ),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "d = {}, k = {}, profile = {}", r.d, r.k, profile_name(r.profile));
            let _ = writeln!(s, "  sigma (optimal, lambda_min A_k)   {}", r.sigma_opt);
            let _ = writeln!(s, "  sigma (closed form, w^T A_k w)    {}", r.sigma_w);
            let _ = writeln!(s, "  sigma upper bound (closed form)   {}", sigma_upper_bound);
            let _ = writeln!(s, "  cut fraction guarantee            {}", r.cut_fraction);
            let _ = writeln!(s, "  xi_ev (closed form)               {}", trunc_str(r.xi_ev));
            let _ = writeln!(s, "  xi_ev (optimal)                   {}", trunc_str(r.xi_ev_opt));
            let _ = writeln!(s, "  xi_lyons                          {}", trunc_str(r.xi_lyons));
            let _ = writeln!(s, "  normalized value c_d              {}", trunc_str(r.normalized_value));
            let _ = writeln!(
                s,
                "  large-d reference c_inf: explicit vector {}, QAOA ~{}, threshold ~{}",
                trunc_str(REFERENCE.explicit_vector),
                QAOA_C_INFINITY,
                THRESHOLD_C_INFINITY
            );
            s
        }
    }
}

#[derive(Serialize)]
struct TableRow {
    k: usize,
    d: usize,
    xi_ev: f64,
    xi_lyons: f64,
}

#[derive(Serialize)]
struct TableJson {
    schema_version: u32,
    command: &'static str,
    rows: Vec<TableRow>,
}

pub fn table(rows: &[BoundReport], format: Format) -> String {
    match format {
        Format::Json => json(&TableJson {
            schema_version: SCHEMA_VERSION,
            command: "table",
            rows: rows
                .iter()
                .map(|r| TableRow { k: r.k, d: r.d, xi_ev: trunc(r.xi_ev), xi_lyons: trunc(r.xi_lyons) })
                .collect(),
        }),
        Format::Csv => {
            let mut s = String::from("k,d,xi_ev,xi_lyons\n");
            for r in rows {
                let _ = writeln!(s, "{},{},{},{}", r.k, r.d, trunc_str(r.xi_ev), trunc_str(r.xi_lyons));
            }
            s
        }
        Format::Text => {
            let mut s = String::from(" k   d  explicit vector  Lyons bound\n");
            for r in rows {
                let _ = writeln!(
                    s,
                    "{:>2} {:>3}  {:>15}  {:>11}",
                    r.k,
                    r.d,
                    trunc_str(r.xi_ev),
                    trunc_str(r.xi_lyons)
                );
            }
            s
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphInfo {
    pub source: String,
    pub n: usize,
    pub m: usize,
    /// Common degree; `None` for irregular graphs.
    pub d: Option<usize>,
    /// `None` for forests.
    pub girth: Option<usize>,
    pub k_max: Option<usize>,
    /// `None` for disconnected graphs.
    pub diameter: Option<usize>,
}

#[derive(Serialize)]
struct GraphInfoJson<'a> {
    schema_version: u32,
    command: &'static str,
    #[serde(flatten)]
    info: &'a GraphInfo,
}

pub fn graph_info(info: &GraphInfo, format: Format) -> String {
    match format {
        Format::Json => json(&GraphInfoJson { schema_version: SCHEMA_VERSION, command: "graph-info", info }),
        Format::Csv => format!(
            "source,n,m,d,girth,k_max,diameter\n{},{},{},{},{},{},{}\n",
            info.source,
            info.n,
            info.m,
            opt(info.d, ""),
            opt(info.girth, ""),
            opt(info.k_max, ""),
            opt(info.diameter, "")
        ),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "graph     {}", info.source);
            let _ = writeln!(s, "n         {}", info.n);
            let _ = writeln!(s, "m         {}", info.m);
            let _ = writeln!(s, "degree    {}", opt(info.d, "irregular"));
            let _ = writeln!(s, "girth     {}", opt(info.girth, "inf"));
            let _ = writeln!(s, "k_max     {}", opt(info.k_max, "inf"));
            let _ = writeln!(s, "diameter  {}", opt(info.diameter, "inf (disconnected)"));
            s
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeProduct {
    pub u: usize,
    pub v: usize,
    pub value: f64,
}

pub struct SolveReport {
    pub graph: GraphInfo,
    pub k: usize,
    pub mode: Mode,
    pub profile: ProfileKind,
    pub sigma: f64,
    pub alphas: Vec<f64>,
    pub sdp_objective: f64,
    pub expected_cut: f64,
    pub expected_fraction: f64,
    pub max_edge_deviation: Option<f64>,
    pub edge_inner_products: Option<Vec<EdgeProduct>>,
    pub rounding: RoundingReport,
}

#[derive(Serialize)]
struct MonteCarloJson {
    samples: u64,
    seed: u64,
    mean_fraction: f64,
    /// `null` when only one sample was drawn.
    std_error: Option<f64>,
    best_sample: u64,
    best_size: usize,
    best_fraction: f64,
    best_assignment: String,
}

#[derive(Serialize)]
struct SolveJson<'a> {
    schema_version: u32,
    command: &'static str,
    graph: &'a GraphInfo,
    k: usize,
    mode: Mode,
    profile: ProfileKind,
    sigma: f64,
    alphas: &'a [f64],
    sdp_objective: f64,
    expected_cut: f64,
    expected_fraction: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_edge_deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_inner_products: Option<&'a [EdgeProduct]>,
    monte_carlo: MonteCarloJson,
}

fn std_error(r: &RoundingReport) -> Option<f64> {
    (!r.std_error.is_nan()).then_some(r.std_error)
}

pub fn solve(r: &SolveReport, format: Format) -> String {
    let m = r.graph.m.max(1) as f64;
    let mc = &r.rounding;
    let best_fraction = mc.best.size as f64 / m;
    match format {
        Format::Json => json(&SolveJson {
            schema_version: SCHEMA_VERSION,
            command: "solve",
            graph: &r.graph,
            k: r.k,
            mode: r.mode,
            profile: r.profile,
            sigma: r.sigma,
            alphas: &r.alphas,
            sdp_objective: r.sdp_objective,
            expected_cut: r.expected_cut,
            expected_fraction: r.expected_fraction,
            max_edge_deviation: r.max_edge_deviation,
            edge_inner_products: r.edge_inner_products.as_deref(),
            monte_carlo: MonteCarloJson {
                samples: mc.samples,
                seed: mc.seed,
                mean_fraction: mc.mean_fraction,
                std_error: std_error(mc),
                best_sample: mc.best_sample,
                best_size: mc.best.size,
                best_fraction,
                best_assignment: mc.best.bits(),
            },
        }),
        Format::Csv => {
            let mut s = String::from(
                "graph,n,m,d,k,mode,profile,sigma,sdp_objective,expected_cut,expected_fraction,\
                 samples,seed,mean_fraction,std_error,best_size,best_assignment\n",
            );
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                r.graph.source,
                r.graph.n,
                r.graph.m,
                opt(r.graph.d, ""),
                r.k,
                mode_name(r.mode),
                profile_name(r.profile),
                r.sigma,
                r.sdp_objective,
                r.expected_cut,
                r.expected_fraction,
                mc.samples,
                mc.seed,
                mc.mean_fraction,
                opt(std_error(mc), ""),
                mc.best.size,
                mc.best.bits()
            );
            s
        }
        Format::Text => {
            let mut s = String::new();
            let g = &r.graph;
            let _ = writeln!(
                s,
                "graph {}: n = {}, m = {}, d = {}, girth = {}",
                g.source,
                g.n,
                g.m,
                opt(g.d, "irregular"),
                opt(g.girth, "inf")
            );
            let _ = writeln!(s, "k = {}, mode = {}, profile = {}", r.k, mode_name(r.mode), profile_name(r.profile));
            let _ = writeln!(s, "sigma                 {}", r.sigma);
            let alphas: Vec<String> = r.alphas.iter().map(|a| a.to_string()).collect();
            let _ = writeln!(s, "alphas                [{}]", alphas.join(", "));
            if let Some(dev) = r.max_edge_deviation {
                let _ = writeln!(s, "max |v_i.v_j - sigma| {dev:e}");
            }
            let _ = writeln!(s, "sdp objective         {}", r.sdp_objective);
            let _ = writeln!(s, "expected cut          {}", r.expected_cut);
            let _ = writeln!(s, "expected fraction     {}", r.expected_fraction);
            let _ = writeln!(s, "samples               {} (seed {})", mc.samples, mc.seed);
            let _ = writeln!(s, "mean fraction         {}", mc.mean_fraction);
            let _ = writeln!(s, "std error             {}", opt(std_error(mc), "n/a"));
            let _ = writeln!(s, "best cut              {} / {} (sample {})", mc.best.size, g.m, mc.best_sample);
            let _ = writeln!(s, "best assignment       {}", mc.best.bits());
            let _ = writeln!(s, "best fraction         {best_fraction}");
            if let Some(products) = &r.edge_inner_products {
                let _ = writeln!(s, "edge inner products");
                for e in products {
                    let _ = writeln!(s, "  {} {} {}", e.u, e.v, e.value);
                }
            }
            s
        }
    }
}
