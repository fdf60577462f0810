//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use girthcut::bounds::{lyons_xi, normalized_value, relative_expectation, theorem2_threshold};
use girthcut::graph::{builtin, Graph, BUILTIN_NAMES};
use girthcut::rounding::{monte_carlo, sample_rng};
use girthcut::solution::{build_vectors, optimal_profile, Mode};
use girthcut::spectral::{closed_form_w, path_operator, sigma_closed_form, CoefficientProfile, Variant};
use girthcut_cli::{cmd_table, Format};
use nalgebra::{DMatrix, SymmetricEigen};
use rand::Rng;
use rand_distr::StandardNormal;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

/// Published table, (k, d, explicit vector, Lyons bound).
const PUBLISHED: [(usize, usize, &str, &str); 8] = [
    (3, 3, "0.78656", "0.75000"),
    (3, 4, "0.76180", "0.72727"),
    (3, 5, "0.74883", "0.71428"),
    (3, 6, "0.74085", "0.70588"),
    (3, 7, "0.73543", "0.70000"),
    (3, 8, "0.73151", "0.69565"),
    (3, 9, "0.72855", "0.69230"),
    (4, 3, "0.85927", "0.81818"),
];

fn published_table() -> Check {
    let start = Instant::now();
    let pairs: Vec<(usize, usize)> = PUBLISHED.iter().map(|&(k, d, _, _)| (k, d)).collect();
    let csv = cmd_table(&pairs, Format::Csv).map_err(|e| e.message)?;
    let elapsed = start.elapsed();
    let mut lines = csv.lines();
    ensure(lines.next() == Some("k,d,xi_ev,xi_lyons"), || "bad header".into())?;
    let mut matched = 0;
    for (&(k, d, ev, ly), line) in PUBLISHED.iter().zip(lines) {
        let expected = format!("{k},{d},{ev},{ly}");
        ensure(line == expected, || format!("row {line} != {expected}"))?;
        matched += 2;
    }
    ensure(matched == 16, || format!("only {matched} values compared"))?;
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("16/16 values match, {elapsed:?}"))
}

fn closed_form_identities() -> Check {
    let start = Instant::now();
    let mut worst_b: f64 = 0.0;
    let mut worst_w: f64 = 0.0;
    for d in 3..=20 {
        for k in 2..=30 {
            let b = path_operator(d, k, Variant::B).map_err(|e| e.to_string())?;
            let kf = k as f64;
            let closed = 2.0 * b.b() * (kf * PI / (kf + 1.0)).cos();
            worst_b = worst_b.max((b.min_eigenpair().value - closed).abs());
            let a = path_operator(d, k, Variant::A).map_err(|e| e.to_string())?;
            let form = a.quadratic_form(&closed_form_w(k)).map_err(|e| e.to_string())?;
            worst_w = worst_w.max((form - sigma_closed_form(d, k)).abs());
        }
    }
    let elapsed = start.elapsed();
    ensure(worst_b <= 1e-12, || format!("λ_min(B_k) off by {worst_b:e}"))?;
    ensure(worst_w <= 1e-12, || format!("wᵀA_k w off by {worst_w:e}"))?;
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("max errors {worst_b:.1e} / {worst_w:.1e}, {elapsed:?}"))
}

fn inequality_chain() -> Check {
    let mut min_gap = f64::INFINITY;
    for d in 3..=20 {
        for k in 2..=30 {
            let a = path_operator(d, k, Variant::A).map_err(|e| e.to_string())?;
            let lambda = a.min_eigenpair().value;
            let form = a.quadratic_form(&closed_form_w(k)).map_err(|e| e.to_string())?;
            let df = d as f64;
            let plain = -2.0 * (df - 1.0).sqrt() / df * (PI / (k as f64 + 1.0)).cos();
            ensure(lambda <= form, || format!("d={d} k={k}: λ_min {lambda} > wᵀAw {form}"))?;
            ensure(form < plain, || format!("d={d} k={k}: wᵀAw {form} ≥ {plain}"))?;
            min_gap = min_gap.min(plain - form);
        }
    }
    Ok(format!("holds on d∈[3,20], k∈[2,30]; smallest strict gap {min_gap:.2e}"))
}

fn lyons_comparison() -> Check {
    let mut cases = 0;
    for d in 3..=64 {
        for k in 3..=32 {
            let xi = relative_expectation(sigma_closed_form(d, k), d);
            let ly = lyons_xi(d, k);
            ensure(xi > ly, || format!("d={d} k={k}: ξ_EV {xi} ≤ ξ_L {ly}"))?;
            cases += 1;
        }
    }
    for (k, expected) in [(3, 9.26), (4, 3.82), (5, 2.75)] {
        let t = theorem2_threshold(k).map_err(|e| e.to_string())?;
        ensure((t - expected).abs() <= 0.01, || format!("k={k}: threshold {t}"))?;
    }
    Ok(format!("ξ_EV > ξ_L on {cases} grid points; thresholds 9.26/3.82/2.75"))
}

/// All-pairs distances by Floyd–Warshall, independent of the BFS balls.
fn all_pairs(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut d = vec![vec![usize::MAX / 4; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

/// Column i is v_i.
fn materialize(g: &Graph, profile: &CoefficientProfile) -> DMatrix<f64> {
    let dist = all_pairs(g);
    DMatrix::from_fn(g.n(), g.n(), |j, i| {
        if dist[i][j] < profile.k { profile.alphas[dist[i][j]] } else { 0.0 }
    })
}

fn cage_feasibility() -> Check {
    let mut notes = Vec::new();
    for (name, k) in [("heawood", 3), ("tutte_coxeter", 4)] {
        let g = builtin(name).map_err(|e| e.to_string())?;
        let profile = optimal_profile(3, k).map_err(|e| e.to_string())?;
        let lambda = path_operator(3, k, Variant::A).map_err(|e| e.to_string())?.min_eigenpair().value;
        let s = build_vectors(&g, &profile, Mode::Strict).map_err(|e| e.to_string())?;
        let norm_dev = s.max_norm_deviation();
        ensure(norm_dev <= 1e-12, || format!("{name}: norm deviation {norm_dev:e}"))?;
        for &p in s.edge_products() {
            ensure((p - lambda).abs() <= 1e-10, || format!("{name}: edge product {p} vs λ {lambda}"))?;
        }
        let v = materialize(&g, &profile);
        let min_eig = SymmetricEigen::new(v.transpose() * v).eigenvalues.min();
        ensure(min_eig >= -1e-9, || format!("{name}: Gram min eigenvalue {min_eig:e}"))?;
        notes.push(format!("{name} Gram λ_min {min_eig:.1e}"));
    }
    Ok(notes.join(", "))
}

fn rounding_consistency() -> Check {
    let g = builtin("heawood").map_err(|e| e.to_string())?;
    let s = build_vectors(&g, &optimal_profile(3, 3).map_err(|e| e.to_string())?, Mode::Strict)
        .map_err(|e| e.to_string())?;
    let start = Instant::now();
    let r = monte_carlo(&s, 1_000_000, 42).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let exact = (-(5f64.sqrt()) / 3.0).acos() / PI;
    let z = (r.mean_fraction - exact).abs() / r.std_error;
    ensure(z <= 3.0, || format!("mean {} vs {exact}: {z:.2} standard errors", r.mean_fraction))?;
    within(elapsed, Duration::from_secs(30))?;
    Ok(format!("mean {:.6} vs {exact:.6} ({z:.2} se), {elapsed:?}", r.mean_fraction))
}

fn factor_of_iid_identity() -> Check {
    let mut worst: f64 = 0.0;
    for name in BUILTIN_NAMES {
        let g = builtin(name).map_err(|e| e.to_string())?;
        let k = g.certify().map_err(|e| e.to_string())?.k_max().unwrap_or(1);
        let profile = optimal_profile(3, k).map_err(|e| e.to_string())?;
        let s = build_vectors(&g, &profile, Mode::Strict).map_err(|e| e.to_string())?;
        let v = materialize(&g, &profile);
        let mut rng = sample_rng(2024, 0);
        let z: Vec<f64> = (0..g.n()).map(|_| rng.sample(StandardNormal)).collect();
        for i in 0..g.n() {
            let dense: f64 = (0..g.n()).map(|j| v[(j, i)] * z[j]).sum();
            worst = worst.max((dense - s.project(i, &z)).abs());
        }
    }
    ensure(worst <= 1e-12, || format!("max discrepancy {worst:e}"))?;
    Ok(format!("all {} built-ins, max discrepancy {worst:.1e}", BUILTIN_NAMES.len()))
}

fn normalized_values() -> Check {
    let c8 = normalized_value(8, sigma_closed_form(8, 3));
    ensure((c8 - 0.454).abs() <= 1e-3, || format!("c_8 = {c8}"))?;
    let big = 1_000_000;
    let c_big = normalized_value(big, sigma_closed_form(big, 3));
    let limit = 2f64.sqrt() / PI;
    ensure((c_big - limit).abs() <= 1e-3, || format!("c_(10^6) = {c_big}"))?;
    Ok(format!("c_8 = {c8:.5}, c_(10^6) = {c_big:.5} (√2/π = {limit:.5})"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("published comparison table", published_table),
        ("closed-form spectral identities", closed_form_identities),
        ("inequality chain λ_min ≤ wᵀAw < cos bound", inequality_chain),
        ("relative expectation beats Lyons on grid; thresholds", lyons_comparison),
        ("strict-mode feasibility on cages", cage_feasibility),
        ("Monte Carlo rounding consistency (N = 10^6)", rounding_consistency),
        ("factor-of-i.i.d. projection identity", factor_of_iid_identity),
        ("normalized values c_8 and large d", normalized_values),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
