//! The explicit vector solution.
//!
//! Vertex i gets the vector v_i with entry α_{dist(i,j)} at coordinate j when
//! dist(i,j) < k and zero elsewhere. Vectors are stored sparsely as their
//! radius-(k−1) balls; nothing of length n per vertex is materialized.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{beta_to_alpha, closed_form_w, CoefficientProfile, PathOperator, Variant};

const NORM_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Requires girth ≥ 2k; every edge has inner product σ.
    Strict,
    /// Any k on a regular graph; vectors are renormalized explicitly and edge
    /// products vary.
    Practical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileKind {
    /// Minimum eigenvector of A_k.
    Optimal,
    /// Closed-form minimum eigenvector of B_k.
    #[serde(rename = "closedform")]
    ClosedForm,
}

pub fn optimal_profile(d: usize, k: usize) -> Result<CoefficientProfile> {
    let pair = PathOperator::new(d, k, Variant::A)?.min_eigenpair();
    let mut profile = beta_to_alpha(&pair.vector, d)?;
    profile.sigma = pair.value;
    Ok(profile)
}

pub fn closed_form_profile(d: usize, k: usize) -> Result<CoefficientProfile> {
    // Validates d and k before touching w.
    PathOperator::new(d, k, Variant::A)?;
    beta_to_alpha(&closed_form_w(k), d)
}

pub fn profile(kind: ProfileKind, d: usize, k: usize) -> Result<CoefficientProfile> {
    match kind {
        ProfileKind::Optimal => optimal_profile(d, k),
        ProfileKind::ClosedForm => closed_form_profile(d, k),
    }
}

/// Unit vectors for every vertex of a graph plus their edge inner products.
#[derive(Debug, Clone)]
pub struct VectorSolution<'g> {
    graph: &'g Graph,
    profile: CoefficientProfile,
    mode: Mode,
    scales: Vec<f64>,
    // CSR layout: the support of v_i is entries[offsets[i]..offsets[i + 1]].
    offsets: Vec<usize>,
    entries: Vec<(usize, f64)>,
    edge_products: Vec<f64>,
}

pub fn build_vectors<'g>(
    graph: &'g Graph,
    profile: &CoefficientProfile,
    mode: Mode,
) -> Result<VectorSolution<'g>> {
    VectorSolution::build(graph, profile, mode)
}

impl<'g> VectorSolution<'g> {
    pub fn build(graph: &'g Graph, profile: &CoefficientProfile, mode: Mode) -> Result<Self> {
        check_preconditions(graph, profile, mode)?;
        let n = graph.n();
        let radius = profile.k - 1;
        let mut offsets = Vec::with_capacity(n + 1);
        let mut entries = Vec::new();
        let mut scales = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        offsets.push(0);
        for v in 0..n {
            let start = entries.len();
            entries.extend(
                graph
                    .ball(v, radius, &mut seen)
                    .into_iter()
                    .map(|(u, dist)| (u, profile.alpha(dist))),
            );
            let norm_sq: f64 = entries[start..].iter().map(|(_, w)| w * w).sum();
            let scale = match mode {
                Mode::Strict => {
                    if (norm_sq - 1.0).abs() > NORM_TOLERANCE {
                        return Err(Error::Certification(format!(
                            "vertex {v} has squared norm {norm_sq}, expected 1"
                        )));
                    }
                    1.0
                }
                Mode::Practical => {
                    let s = 1.0 / norm_sq.sqrt();
                    entries[start..].iter_mut().for_each(|(_, w)| *w *= s);
                    s
                }
            };
            scales.push(scale);
            offsets.push(entries.len());
        }

        let mut solution = Self {
            graph,
            profile: profile.clone(),
            mode,
            scales,
            offsets,
            entries,
            edge_products: Vec::new(),
        };
        let products = graph
            .edges()
            .par_iter()
            .map_init(
                || vec![0.0; n],
                |buf, &(i, j)| solution.sparse_dot(i, j, buf),
            )
            .collect();
        solution.edge_products = products;
        Ok(solution)
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn profile(&self) -> &CoefficientProfile {
        &self.profile
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Per-vertex normalization factors; all 1 in strict mode.
    pub fn scales(&self) -> &[f64] {
        &self.scales
    }

    /// Nonzero coordinates of v_i as `(coordinate, value)`.
    pub fn support(&self, i: usize) -> &[(usize, f64)] {
        &self.entries[self.offsets[i]..self.offsets[i + 1]]
    }

    /// Inner products in the order of [`Graph::edges`].
    pub fn edge_products(&self) -> &[f64] {
        &self.edge_products
    }

    pub fn norm(&self, i: usize) -> f64 {
        self.support(i).iter().map(|(_, w)| w * w).sum::<f64>().sqrt()
    }

    /// v_i · v_j for any pair of vertices.
    pub fn inner_product(&self, i: usize, j: usize) -> f64 {
        let mut buf = vec![0.0; self.graph.n()];
        self.sparse_dot(i, j, &mut buf)
    }

    /// r · v_i = Σ_j α_{dist(i,j)}·r_j, with `r` indexed by vertex.
    pub fn project(&self, i: usize, r: &[f64]) -> f64 {
        self.support(i).iter().map(|&(u, w)| w * r[u]).sum()
    }

    /// (1/2)·Σ_{edges}(1 − v_i·v_j).
    pub fn sdp_objective(&self) -> f64 {
        0.5 * self.edge_products.iter().map(|p| 1.0 - p).sum::<f64>()
    }

    /// max over edges of |v_i·v_j − σ|.
    pub fn max_edge_deviation(&self) -> f64 {
        self.edge_products
            .iter()
            .map(|p| (p - self.profile.sigma).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_norm_deviation(&self) -> f64 {
        (0..self.graph.n())
            .map(|i| (self.norm(i) - 1.0).abs())
            .fold(0.0, f64::max)
    }

    fn sparse_dot(&self, i: usize, j: usize, buf: &mut [f64]) -> f64 {
        for &(u, w) in self.support(i) {
            buf[u] = w;
        }
        let dot = self.support(j).iter().map(|&(u, w)| w * buf[u]).sum();
        for &(u, _) in self.support(i) {
            buf[u] = 0.0;
        }
        dot
    }
}

fn check_preconditions(graph: &Graph, profile: &CoefficientProfile, mode: Mode) -> Result<()> {
    if profile.k < 1 || profile.alphas.len() != profile.k {
        return Err(Error::Domain(format!(
            "profile has k = {} but {} coefficients",
            profile.k,
            profile.alphas.len()
        )));
    }
    let d = match mode {
        Mode::Strict => {
            let cert = graph.certify()?;
            if cert.d == profile.d && !cert.admits(profile.k) {
                return Err(Error::Certification(format!(
                    "girth {} < 2k = {}",
                    cert.girth,
                    2 * profile.k
                )));
            }
            cert.d
        }
        Mode::Practical => graph.regular_degree().map_err(|v| {
            Error::Certification(format!(
                "graph is not regular: vertex {v} has degree {}, vertex 0 has degree {}",
                graph.degree(v),
                graph.degree(0)
            ))
        })?,
    };
    if d != profile.d {
        return Err(Error::Certification(format!(
            "graph degree {d} does not match profile degree {}",
            profile.d
        )));
    }
    Ok(())
}
