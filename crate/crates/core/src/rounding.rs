//! Hyperplane rounding of a [`VectorSolution`].
//!
//! A random Gaussian direction r cuts edge (i, j) with probability
//! arccos(v_i·v_j)/π. Sampling never forms r in n dimensions per vertex:
//! drawing one standard normal z_j per vertex and setting
//! x_i = Σ_j α_{dist(i,j)}·z_j gives exactly r·v_i with r = z, so each label
//! is a linear factor of the i.i.d. field restricted to a radius-(k−1) ball.

use std::f64::consts::PI;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solution::VectorSolution;

/// A two-sided vertex partition. `true` is the positive side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cut {
    pub assignment: Vec<bool>,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RoundingReport {
    pub samples: u64,
    pub seed: u64,
    pub mean_fraction: f64,
    /// Standard error of the mean; NaN when only one sample was drawn.
    pub std_error: f64,
    pub best_sample: u64,
    pub best: Cut,
}

impl Cut {
    pub fn new(graph: &Graph, assignment: Vec<bool>) -> Result<Self> {
        let size = cut_size(graph, &assignment)?;
        Ok(Self { assignment, size })
    }

    /// Assignment as a string of `0` (negative side) and `1` (positive side).
    pub fn bits(&self) -> String {
        self.assignment.iter().map(|&s| if s { '1' } else { '0' }).collect()
    }
}

/// Number of edges whose endpoints have different labels.
pub fn cut_size(graph: &Graph, assignment: &[bool]) -> Result<usize> {
    if assignment.len() != graph.n() {
        return Err(Error::Domain(format!(
            "assignment has length {}, graph has {} vertices",
            assignment.len(),
            graph.n()
        )));
    }
    Ok(graph
        .edges()
        .iter()
        .filter(|&&(u, v)| assignment[u] != assignment[v])
        .count())
}

/// Probability that a random hyperplane separates two unit vectors with
/// inner product `p`. The input is clamped to [−1, 1].
pub fn separation_probability(p: f64) -> f64 {
    p.clamp(-1.0, 1.0).acos() / PI
}

/// E[W] = (1/π)·Σ_{edges} arccos(v_i·v_j).
pub fn expected_cut_exact(solution: &VectorSolution<'_>) -> f64 {
    solution
        .edge_products()
        .iter()
        .map(|&p| separation_probability(p))
        .sum()
}

/// One round: an i.i.d. standard normal per vertex (drawn in vertex order),
/// then the sign of each vertex's projection. Exact zeros go to the positive
/// side.
pub fn hyperplane_round<R: Rng + ?Sized>(solution: &VectorSolution<'_>, rng: &mut R) -> Cut {
    let mut z = vec![0.0; solution.graph().n()];
    let mut assignment = vec![false; z.len()];
    let size = round_into(solution, rng, &mut z, &mut assignment);
    Cut { assignment, size }
}

fn round_into<R: Rng + ?Sized>(
    solution: &VectorSolution<'_>,
    rng: &mut R,
    z: &mut [f64],
    assignment: &mut [bool],
) -> usize {
    z.iter_mut().for_each(|x| *x = rng.sample(StandardNormal));
    for (i, side) in assignment.iter_mut().enumerate() {
        *side = solution.project(i, z) >= 0.0;
    }
    solution
        .graph()
        .edges()
        .iter()
        .filter(|&&(u, v)| assignment[u] != assignment[v])
        .count()
}

/// Generator for sample `index` under `seed`: the seed picks the ChaCha key
/// and the sample index picks the stream, so every sample's draws are fixed
/// independently of scheduling.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// `samples` independent rounds on the global rayon pool.
pub fn monte_carlo(solution: &VectorSolution<'_>, samples: u64, seed: u64) -> Result<RoundingReport> {
    monte_carlo_with_threads(solution, samples, seed, None)
}

/// Like [`monte_carlo`], optionally on a dedicated pool of `threads` workers.
/// The report is identical for every thread count.
pub fn monte_carlo_with_threads(
    solution: &VectorSolution<'_>,
    samples: u64,
    seed: u64,
    threads: Option<usize>,
) -> Result<RoundingReport> {
    if samples == 0 {
        return Err(Error::Domain("need at least one sample".into()));
    }
    let sizes = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Domain(format!("cannot start {t} sampler threads: {e}")))?
            .install(|| sample_sizes(solution, samples, seed)),
        None => sample_sizes(solution, samples, seed),
    };
    Ok(summarize(solution, &sizes, seed))
}

fn sample_sizes(solution: &VectorSolution<'_>, samples: u64, seed: u64) -> Vec<u32> {
    let n = solution.graph().n();
    (0..samples)
        .into_par_iter()
        .map_init(
            || (vec![0.0; n], vec![false; n]),
            |(z, assignment), index| {
                let mut rng = sample_rng(seed, index);
                round_into(solution, &mut rng, z, assignment) as u32
            },
        )
        .collect()
}

fn summarize(solution: &VectorSolution<'_>, sizes: &[u32], seed: u64) -> RoundingReport {
    let m = solution.graph().m().max(1) as f64;
    let count = sizes.len() as f64;
    let mean = sizes.iter().map(|&s| s as f64 / m).sum::<f64>() / count;
    let std_error = if sizes.len() > 1 {
        let var = sizes
            .iter()
            .map(|&s| (s as f64 / m - mean).powi(2))
            .sum::<f64>()
            / (count - 1.0);
        (var / count).sqrt()
    } else {
        f64::NAN
    };
    let (best_index, _) = sizes
        .iter()
        .enumerate()
        .fold((0, 0), |(bi, bs), (i, &s)| if s > bs { (i, s) } else { (bi, bs) });
    let best = hyperplane_round(solution, &mut sample_rng(seed, best_index as u64));
    RoundingReport {
        samples: sizes.len() as u64,
        seed,
        mean_fraction: mean,
        std_error,
        best_sample: best_index as u64,
        best,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{builtin, cycle};
    use crate::solution::{build_vectors, optimal_profile, Mode};
    use crate::spectral::CoefficientProfile;

    #[test]
    fn cut_size_examples() {
        let c4 = cycle(4);
        assert_eq!(cut_size(&c4, &[true, false, true, false]).unwrap(), 4);
        assert_eq!(cut_size(&c4, &[true; 4]).unwrap(), 0);
        assert!(cut_size(&c4, &[true; 3]).is_err());

        let p = builtin("petersen").unwrap();
        let assignment: Vec<bool> = (0..10).map(|i| (i * 7 + 3) % 4 < 2).collect();
        let mut brute = 0;
        for u in 0..10 {
            for v in (u + 1)..10 {
                if p.has_edge(u, v) && assignment[u] != assignment[v] {
                    brute += 1;
                }
            }
        }
        assert_eq!(cut_size(&p, &assignment).unwrap(), brute);
    }

    #[test]
    fn expected_cut_examples() {
        let g = builtin("heawood").unwrap();
        let s = build_vectors(&g, &optimal_profile(3, 3).unwrap(), Mode::Strict).unwrap();
        let expected = 21.0 / PI * (-(5f64.sqrt()) / 3.0).acos();
        assert!((expected_cut_exact(&s) - expected).abs() < 1e-9);
        assert!((expected_cut_exact(&s) - 16.12213).abs() < 1e-5);

        let s = build_vectors(&g, &optimal_profile(3, 1).unwrap(), Mode::Strict).unwrap();
        assert!((expected_cut_exact(&s) - 10.5).abs() < 1e-12);

        let s = build_vectors(&g, &optimal_profile(3, 2).unwrap(), Mode::Strict).unwrap();
        let expected = 21.0 / PI * (-1.0 / 3f64.sqrt()).acos();
        assert!((expected_cut_exact(&s) - expected).abs() < 1e-9);
    }

    #[test]
    fn clamping_guards_overshoot() {
        assert_eq!(separation_probability(-1.0 - 1e-15), 1.0);
        assert_eq!(separation_probability(1.0 + 1e-15), 0.0);
    }

    #[test]
    fn antipodal_edge_always_cut() {
        // d = 1 is outside the profile constructors' domain; build α by hand.
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let h = 0.5f64.sqrt();
        let profile = CoefficientProfile { d: 1, k: 2, alphas: vec![h, -h], sigma: -1.0 };
        let s = build_vectors(&g, &profile, Mode::Practical).unwrap();
        assert!((s.edge_products()[0] + 1.0).abs() < 1e-15);
        for i in 0..200 {
            let cut = hyperplane_round(&s, &mut sample_rng(5, i));
            assert_eq!(cut.size, 1);
        }
    }

    #[test]
    fn orthogonal_vectors_cut_half_the_time() {
        let g = builtin("mcgee").unwrap();
        let s = build_vectors(&g, &optimal_profile(3, 1).unwrap(), Mode::Strict).unwrap();
        let r = monte_carlo(&s, 20_000, 11).unwrap();
        assert!((r.mean_fraction - 0.5).abs() < 4.0 * r.std_error);
    }

    #[test]
    fn single_sample_report() {
        let g = builtin("heawood").unwrap();
        let s = build_vectors(&g, &optimal_profile(3, 3).unwrap(), Mode::Strict).unwrap();
        let r = monte_carlo(&s, 1, 3).unwrap();
        assert!(r.std_error.is_nan());
        assert_eq!(r.mean_fraction, r.best.size as f64 / 21.0);
        assert!(matches!(monte_carlo(&s, 0, 3), Err(Error::Domain(_))));
    }

    #[test]
    fn reports_independent_of_thread_count() {
        let g = builtin("tutte_coxeter").unwrap();
        let s = build_vectors(&g, &optimal_profile(3, 4).unwrap(), Mode::Strict).unwrap();
        let one = monte_carlo_with_threads(&s, 5_000, 42, Some(1)).unwrap();
        let four = monte_carlo_with_threads(&s, 5_000, 42, Some(4)).unwrap();
        let global = monte_carlo(&s, 5_000, 42).unwrap();
        assert_eq!(one, four);
        assert_eq!(one, global);
        assert_eq!(one.best.size, cut_size(&g, &one.best.assignment).unwrap());
    }

    #[test]
    fn same_key_same_cut() {
        let g = builtin("pappus").unwrap();
        let s = build_vectors(&g, &optimal_profile(3, 3).unwrap(), Mode::Strict).unwrap();
        let a = hyperplane_round(&s, &mut sample_rng(9, 17));
        let b = hyperplane_round(&s, &mut sample_rng(9, 17));
        let c = hyperplane_round(&s, &mut sample_rng(9, 18));
        assert_eq!(a, b);
        assert_ne!(a.assignment, c.assignment);
    }
}
