//! Weighted path operators and their minimum eigenpairs.
//!
//! Minimizing the common edge inner product over radial coefficient profiles
//! is a Rayleigh quotient problem for a k×k symmetric tridiagonal matrix with
//! zero diagonal. Variant A couples the root shell with weight 1/√d and every
//! later shell with √(d−1)/d; variant B is the Toeplitz matrix that uses
//! √(d−1)/d everywhere and has a closed-form spectrum.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

const INVERSE_ITERATION_SEED: u64 = 0x6769_7274_6863_7574;
const MIN_INVERSE_ITERATIONS: usize = 2;
const MAX_INVERSE_ITERATIONS: usize = 8;
const RESIDUAL_TARGET: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Variant {
    /// First coupling is 1/√d, the rest √(d−1)/d.
    A,
    /// Every coupling is √(d−1)/d.
    B,
}

/// The k×k symmetric tridiagonal, zero-diagonal path matrix for degree d.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathOperator {
    k: usize,
    d: usize,
    a: f64,
    b: f64,
    variant: Variant,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Eigenpair {
    pub value: f64,
    /// Unit Euclidean norm, first nonzero entry positive.
    pub vector: Vec<f64>,
}

/// Radial coefficients α_0..α_{k−1} for degree d and the edge inner product
/// σ they achieve on any d-regular graph of girth at least 2k.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientProfile {
    pub d: usize,
    pub k: usize,
    pub alphas: Vec<f64>,
    pub sigma: f64,
}

pub fn path_operator(d: usize, k: usize, variant: Variant) -> Result<PathOperator> {
    PathOperator::new(d, k, variant)
}

impl PathOperator {
    pub fn new(d: usize, k: usize, variant: Variant) -> Result<Self> {
        if d < 3 {
            return Err(Error::Domain(format!("degree must be at least 3, got {d}")));
        }
        if k < 1 {
            return Err(Error::Domain("k must be at least 1".into()));
        }
        let df = d as f64;
        Ok(Self {
            k,
            d,
            a: 1.0 / df.sqrt(),
            b: (df - 1.0).sqrt() / df,
            variant,
        })
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// Entry (0, 1) of variant A.
    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Off-diagonal entry (i, i+1).
    pub fn coupling(&self, i: usize) -> f64 {
        match (self.variant, i) {
            (Variant::A, 0) => self.a,
            _ => self.b,
        }
    }

    /// The k−1 super-diagonal entries.
    pub fn off_diagonal(&self) -> Vec<f64> {
        (0..self.k.saturating_sub(1)).map(|i| self.coupling(i)).collect()
    }

    /// Dense row-major copy, mostly useful for tests and debugging.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut m = vec![vec![0.0; self.k]; self.k];
        for i in 0..self.k.saturating_sub(1) {
            m[i][i + 1] = self.coupling(i);
            m[i + 1][i] = self.coupling(i);
        }
        m
    }

    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_len(x)?;
        let mut y = vec![0.0; self.k];
        for i in 0..self.k.saturating_sub(1) {
            let c = self.coupling(i);
            y[i] += c * x[i + 1];
            y[i + 1] += c * x[i];
        }
        Ok(y)
    }

    /// xᵀMx evaluated from the tridiagonal structure.
    pub fn quadratic_form(&self, x: &[f64]) -> Result<f64> {
        self.check_len(x)?;
        Ok(2.0
            * (0..self.k.saturating_sub(1))
                .map(|i| self.coupling(i) * x[i] * x[i + 1])
                .sum::<f64>())
    }

    /// Number of eigenvalues strictly below `x`, from the LDLᵀ pivots.
    pub fn sturm_count(&self, x: f64) -> usize {
        let pivmin = f64::MIN_POSITIVE * self.b.max(self.a).powi(2).max(1.0);
        let mut count = 0;
        let mut q = -x;
        for i in 0..self.k {
            if i > 0 {
                let c = self.coupling(i - 1);
                q = -x - c * c / q;
            }
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Smallest eigenvalue by Sturm bisection, bracketed from below.
    pub fn min_eigenvalue(&self) -> f64 {
        if self.k == 1 {
            return 0.0;
        }
        // Gershgorin: every row has at most two off-diagonal entries, each ≤ a.
        let radius = 2.0 * self.a.max(self.b);
        let mut lo = -radius - f64::EPSILON;
        let mut hi = radius + f64::EPSILON;
        loop {
            let mid = lo + 0.5 * (hi - lo);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.sturm_count(mid) >= 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        lo
    }

    pub fn min_eigenpair(&self) -> Eigenpair {
        let value = self.min_eigenvalue();
        if self.k == 1 {
            return Eigenpair {
                value,
                vector: vec![1.0],
            };
        }
        let off = self.off_diagonal();
        let mut rng = ChaCha8Rng::seed_from_u64(INVERSE_ITERATION_SEED);
        let mut x: Vec<f64> = (0..self.k).map(|_| rng.random_range(-1.0..1.0)).collect();
        normalize(&mut x);
        for it in 0..MAX_INVERSE_ITERATIONS {
            solve_shifted(&off, value, &mut x);
            normalize(&mut x);
            if it + 1 >= MIN_INVERSE_ITERATIONS && self.residual(value, &x) <= RESIDUAL_TARGET {
                break;
            }
        }
        fix_sign(&mut x);
        Eigenpair { value, vector: x }
    }

    /// Closed-form minimum eigenvalue 2b·cos(kπ/(k+1)) of variant B.
    pub fn b_min_eigenvalue(&self) -> Result<f64> {
        if self.variant != Variant::B {
            return Err(Error::Usage(
                "closed-form minimum eigenvalue is only defined for variant B".into(),
            ));
        }
        let k = self.k as f64;
        Ok(2.0 * self.b * (k * PI / (k + 1.0)).cos())
    }

    /// ‖Mx − λx‖_∞.
    pub fn residual(&self, value: f64, x: &[f64]) -> f64 {
        let y = match self.apply(x) {
            Ok(y) => y,
            Err(_) => return f64::INFINITY,
        };
        y.iter()
            .zip(x)
            .map(|(yi, xi)| (yi - value * xi).abs())
            .fold(0.0, f64::max)
    }

    fn check_len(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.k {
            return Err(Error::Domain(format!(
                "vector has length {}, operator has order {}",
                x.len(),
                self.k
            )));
        }
        Ok(())
    }
}

/// Solves (T − shift·I) y = rhs in place, where T is symmetric tridiagonal
/// with zero diagonal and super-diagonal `off`. Gaussian elimination with
/// partial pivoting; exactly singular pivots are perturbed, which is what
/// inverse iteration wants.
fn solve_shifted(off: &[f64], shift: f64, rhs: &mut [f64]) {
    let n = rhs.len();
    let scale = off.iter().fold(0.0_f64, |m, v| m.max(v.abs())).max(shift.abs()).max(1.0);
    let tiny = f64::EPSILON * scale;
    let mut diag = vec![-shift; n];
    let mut sup1: Vec<f64> = off.to_vec();
    let mut sup2 = vec![0.0; n.saturating_sub(2)];

    for i in 0..n - 1 {
        let sub = off[i];
        if diag[i].abs() >= sub.abs() {
            if diag[i] == 0.0 {
                diag[i] = tiny;
            }
            let l = sub / diag[i];
            diag[i + 1] -= l * sup1[i];
            if i + 1 < n - 1 {
                let s2 = if i < sup2.len() { sup2[i] } else { 0.0 };
                sup1[i + 1] -= l * s2;
            }
            rhs[i + 1] -= l * rhs[i];
        } else {
            let l = diag[i] / sub;
            let old_sup1 = sup1[i];
            let old_sup2 = if i < sup2.len() { sup2[i] } else { 0.0 };
            diag[i] = sub;
            sup1[i] = diag[i + 1];
            let next_sup1 = if i + 1 < n - 1 { sup1[i + 1] } else { 0.0 };
            if i < sup2.len() {
                sup2[i] = next_sup1;
            }
            diag[i + 1] = old_sup1 - l * sup1[i];
            if i + 1 < n - 1 {
                sup1[i + 1] = old_sup2 - l * next_sup1;
            }
            rhs.swap(i, i + 1);
            rhs[i + 1] -= l * rhs[i];
        }
    }
    if diag[n - 1] == 0.0 {
        diag[n - 1] = tiny;
    }

    for i in (0..n).rev() {
        let mut acc = rhs[i];
        if i + 1 < n {
            acc -= sup1[i] * rhs[i + 1];
        }
        if i + 2 < n {
            acc -= sup2[i] * rhs[i + 2];
        }
        rhs[i] = acc / diag[i];
    }
}

fn normalize(x: &mut [f64]) {
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    x.iter_mut().for_each(|v| *v /= norm);
}

fn fix_sign(x: &mut [f64]) {
    if let Some(first) = x.iter().copied().find(|v| *v != 0.0) {
        if first < 0.0 {
            x.iter_mut().for_each(|v| *v = -*v);
        }
    }
}

/// Minimum eigenvector of the Toeplitz variant B_k:
/// w_ℓ = √(2/(k+1))·sin((ℓ+1)kπ/(k+1)).
pub fn closed_form_w(k: usize) -> Vec<f64> {
    let kf = k as f64;
    let scale = (2.0 / (kf + 1.0)).sqrt();
    (0..k)
        .map(|l| scale * (((l + 1) as f64) * kf * PI / (kf + 1.0)).sin())
        .collect()
}

/// wᵀA_k w written out in closed form:
/// −(2√(d−1)/d)·(cos(π/(k+1)) + (√(d/(d−1)) − 1)·(2/(k+1))·sin(π/(k+1))·sin(2π/(k+1))).
pub fn sigma_closed_form(d: usize, k: usize) -> f64 {
    let df = d as f64;
    let theta = PI / (k as f64 + 1.0);
    let correction =
        ((df / (df - 1.0)).sqrt() - 1.0) * (2.0 / (k as f64 + 1.0)) * theta.sin() * (2.0 * theta).sin();
    -2.0 * (df - 1.0).sqrt() / df * (theta.cos() + correction)
}

/// Number of vertices at distance exactly `l` from a vertex in a d-regular
/// graph whose radius-`l` balls are trees: 1, d, d(d−1), d(d−1)², …
pub fn shell_size(d: usize, l: usize) -> f64 {
    if l == 0 {
        1.0
    } else {
        d as f64 * (d as f64 - 1.0).powi(l as i32 - 1)
    }
}

/// Maps a unit vector β to radial coefficients: α_0 = β_0 and
/// α_ℓ = β_ℓ / √(d(d−1)^{ℓ−1}).
pub fn beta_to_alpha(beta: &[f64], d: usize) -> Result<CoefficientProfile> {
    if beta.is_empty() {
        return Err(Error::Domain("beta must be nonempty".into()));
    }
    let norm = beta.iter().map(|v| v * v).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::Domain(format!("beta must have unit norm, got {norm}")));
    }
    let op = PathOperator::new(d, beta.len(), Variant::A)?;
    let beta: Vec<f64> = beta.iter().map(|v| v / norm).collect();
    let sigma = op.quadratic_form(&beta)?;
    let alphas = beta
        .iter()
        .enumerate()
        .map(|(l, v)| v / shell_size(d, l).sqrt())
        .collect();
    Ok(CoefficientProfile {
        d,
        k: beta.len(),
        alphas,
        sigma,
    })
}

impl CoefficientProfile {
    /// α_0² + Σ_ℓ d(d−1)^{ℓ−1}·α_ℓ², which is 1 for a valid profile.
    pub fn norm_constraint(&self) -> f64 {
        self.alphas
            .iter()
            .enumerate()
            .map(|(l, a)| shell_size(self.d, l) * a * a)
            .sum()
    }

    /// α_ℓ, zero beyond the profile's radius.
    pub fn alpha(&self, l: usize) -> f64 {
        self.alphas.get(l).copied().unwrap_or(0.0)
    }
}
