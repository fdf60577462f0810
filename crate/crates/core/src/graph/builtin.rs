//! Small cubic cages and near-cages used as test fixtures.

use super::Graph;
use crate::error::{Error, Result};

pub const BUILTIN_NAMES: [&str; 5] = ["petersen", "heawood", "pappus", "mcgee", "tutte_coxeter"];

/// Looks up a built-in graph by name.
///
/// | name            | n  | m  | girth |
/// |-----------------|----|----|-------|
/// | `petersen`      | 10 | 15 | 5     |
/// | `heawood`       | 14 | 21 | 6     |
/// | `pappus`        | 18 | 27 | 6     |
/// | `mcgee`         | 24 | 36 | 7     |
/// | `tutte_coxeter` | 30 | 45 | 8     |
///
/// All five are 3-regular.
pub fn builtin(name: &str) -> Result<Graph> {
    match name {
        "petersen" => Ok(petersen()),
        "heawood" => Ok(lcf(&[5, -5], 7)),
        "pappus" => Ok(lcf(&[5, 7, -7, 7, -7, -5], 3)),
        "mcgee" => Ok(lcf(&[12, 7, -7], 8)),
        "tutte_coxeter" => Ok(lcf(&[-13, -9, 7, -7, 9, 13], 5)),
        _ => Err(Error::UnknownGraph {
            name: name.to_string(),
            valid: BUILTIN_NAMES.iter().map(|s| s.to_string()).collect(),
        }),
    }
}

fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("fixture is valid")
}

/// Hamiltonian cubic graph from LCF notation `[jumps]^repeats`: a Hamilton
/// cycle on n = |jumps|·repeats vertices plus a chord from vertex i to
/// i + jumps[i mod |jumps|].
fn lcf(jumps: &[i64], repeats: usize) -> Graph {
    let n = jumps.len() * repeats;
    let ni = n as i64;
    let cycle = (0..n).map(|i| (i, (i + 1) % n));
    let chords = (0..n).map(|i| {
        let j = (i as i64 + jumps[i % jumps.len()]).rem_euclid(ni) as usize;
        (i, j)
    });
    Graph::from_edges(n, cycle.chain(chords).collect::<Vec<_>>()).expect("fixture is valid")
}
