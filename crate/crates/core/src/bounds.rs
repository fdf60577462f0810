//! Closed-form guarantees and the comparison against the Lyons bound.
//!
//! Cut fractions are compared through the relative expectation ξ, defined by
//! E[W]/m = arccos(−2b·ξ)/π with b = √(d−1)/d, and through the normalized
//! value c_d defined by E[W]/m = 1/2 + c_d/√d.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rounding::separation_probability;
use crate::solution::{closed_form_profile, optimal_profile, ProfileKind};
use crate::spectral::sigma_closed_form;

/// Decimal places kept when rendering table values.
pub const TABLE_DECIMALS: u32 = 5;

/// Large-degree normalized value quoted for depth-2 QAOA.
pub const QAOA_C_INFINITY: f64 = 0.41;
/// Large-degree normalized value quoted for the depth-2 threshold algorithm.
pub const THRESHOLD_C_INFINITY: f64 = 0.42;

/// The (k, d) rows of the published comparison table.
pub const PUBLISHED_ROWS: [(usize, usize); 8] =
    [(3, 3), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8), (3, 9), (4, 3)];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub d: usize,
    pub k: usize,
    pub profile: ProfileKind,
    /// λ_min(A_k).
    pub sigma_opt: f64,
    /// wᵀA_k w for the closed-form vector w.
    pub sigma_w: f64,
    /// Relative expectation of `sigma_w`.
    pub xi_ev: f64,
    /// Relative expectation of `sigma_opt`.
    pub xi_ev_opt: f64,
    pub xi_lyons: f64,
    /// arccos(σ)/π for the selected profile.
    pub cut_fraction: f64,
    /// c_d for the selected profile.
    pub normalized_value: f64,
}

fn b_coefficient(d: usize) -> f64 {
    let df = d as f64;
    (df - 1.0).sqrt() / df
}

/// ξ = σ / (−2√(d−1)/d).
pub fn relative_expectation(sigma: f64, d: usize) -> f64 {
    sigma / (-2.0 * b_coefficient(d))
}

/// Lyons's relative expectation (k−1)/(k−1/d).
pub fn lyons_xi(d: usize, k: usize) -> f64 {
    let (df, kf) = (d as f64, k as f64);
    (kf - 1.0) / (kf - 1.0 / df)
}

/// Degree above which cos(π/(k+1)) ≥ 1 − ½(π/(k+1))² alone already beats
/// the Lyons bound: (k − (k−1)/(1 − ½(π/(k+1))²))⁻¹.
pub fn theorem2_threshold(k: usize) -> Result<f64> {
    if k < 3 {
        return Err(Error::Domain(format!("threshold is defined for k ≥ 3, got {k}")));
    }
    let kf = k as f64;
    let quad = 1.0 - 0.5 * (PI / (kf + 1.0)).powi(2);
    Ok(1.0 / (kf - (kf - 1.0) / quad))
}

/// c_d = √d·(arccos(σ)/π − 1/2).
pub fn normalized_value(d: usize, sigma: f64) -> f64 {
    (d as f64).sqrt() * (separation_probability(sigma) - 0.5)
}

pub fn bound_report(d: usize, k: usize, profile: ProfileKind) -> Result<BoundReport> {
    let sigma_opt = optimal_profile(d, k)?.sigma;
    let sigma_w = closed_form_profile(d, k)?.sigma;
    let sigma = match profile {
        ProfileKind::Optimal => sigma_opt,
        ProfileKind::ClosedForm => sigma_w,
    };
    Ok(BoundReport {
        d,
        k,
        profile,
        sigma_opt,
        sigma_w,
        xi_ev: relative_expectation(sigma_w, d),
        xi_ev_opt: relative_expectation(sigma_opt, d),
        xi_lyons: lyons_xi(d, k),
        cut_fraction: separation_probability(sigma),
        normalized_value: normalized_value(d, sigma),
    })
}

/// The closed-form upper bound on σ that the cut guarantee is stated with.
pub fn sigma_upper_bound(d: usize, k: usize) -> f64 {
    sigma_closed_form(d, k)
}

/// One row per (k, d), k-major. ξ_EV comes from the closed-form vector w.
pub fn comparison_table(ks: &[usize], ds: &[usize]) -> Result<Vec<BoundReport>> {
    let pairs: Vec<(usize, usize)> = ks
        .iter()
        .flat_map(|&k| ds.iter().map(move |&d| (k, d)))
        .collect();
    table_rows(&pairs)
}

/// Rows for an explicit list of (k, d) pairs, in the given order.
pub fn table_rows(pairs: &[(usize, usize)]) -> Result<Vec<BoundReport>> {
    if pairs.is_empty() {
        return Err(Error::Domain("k and d ranges must be nonempty".into()));
    }
    pairs
        .iter()
        .map(|&(k, d)| bound_report(d, k, ProfileKind::ClosedForm))
        .collect()
}

/// Truncates toward zero at `places` decimals.
///
/// The value is first rounded to 12 decimals so that representation error
/// (0.7 stored as 0.6999…) does not push it down a digit.
pub fn truncate(x: f64, places: u32) -> f64 {
    truncated_string(x, places).parse().expect("formatted float parses")
}

/// Decimal rendering of [`truncate`] with exactly `places` digits.
pub fn truncated_string(x: f64, places: u32) -> String {
    let wide = format!("{:.12}", x);
    let (int, frac) = wide.split_once('.').expect("fixed formatting has a point");
    let s = format!("{int}.{}", &frac[..places as usize]);
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}
