//! Random regular graphs from the pairing (configuration) model.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Girth, Graph};
use crate::error::{Error, Result};

pub const DEFAULT_ATTEMPT_BUDGET: usize = 10_000;

/// Samples a simple d-regular graph on `n` vertices with girth at least
/// `min_girth`, deterministically for a given seed.
pub fn random_regular(n: usize, d: usize, min_girth: usize, seed: u64) -> Result<Graph> {
    random_regular_with_budget(n, d, min_girth, seed, DEFAULT_ATTEMPT_BUDGET)
}

/// Pairing-model sampling with rejection. Each attempt shuffles the n·d
/// half-edges and pairs them consecutively; outcomes with loops, parallel
/// edges or a short cycle are discarded.
pub fn random_regular_with_budget(
    n: usize,
    d: usize,
    min_girth: usize,
    seed: u64,
    attempts: usize,
) -> Result<Graph> {
    if !(n * d).is_multiple_of(2) {
        return Err(Error::Domain(format!("n·d must be even, got n={n}, d={d}")));
    }
    if n < d + 1 {
        return Err(Error::Domain(format!("need n ≥ d + 1, got n={n}, d={d}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::with_capacity(d); n];

    'attempt: for _ in 0..attempts {
        points.shuffle(&mut rng);
        adjacency.iter_mut().for_each(Vec::clear);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adjacency[u].contains(&v) {
                continue 'attempt;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let g = Graph::from_adjacency(adjacency.clone());
        let ok = match g.girth() {
            Girth::Infinite => true,
            Girth::Finite(girth) => girth >= min_girth,
        };
        if ok {
            return Ok(g);
        }
    }
    Err(Error::Generation(format!(
        "no simple {d}-regular graph on {n} vertices with girth ≥ {min_girth} after {attempts} attempts"
    )))
}
