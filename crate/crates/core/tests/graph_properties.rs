use girthcut::graph::{builtin, load_edge_list, random_regular, Girth, Graph, BUILTIN_NAMES};
use girthcut::spectral::shell_size;
use proptest::prelude::*;

/// Shortest cycle of length ≤ `limit` by enumerating simple paths from each
/// start vertex through larger-numbered vertices only.
fn brute_force_girth(g: &Graph, limit: usize) -> Option<usize> {
    fn extend(g: &Graph, start: usize, path: &mut Vec<usize>, limit: usize, best: &mut Option<usize>) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                let len = path.len();
                *best = Some(best.map_or(len, |b| b.min(len)));
            } else if w > start && !path.contains(&w) && path.len() < limit {
                path.push(w);
                extend(g, start, path, limit, best);
                path.pop();
            }
        }
    }
    let mut best = None;
    for start in 0..g.n() {
        extend(g, start, &mut vec![start], limit, &mut best);
    }
    best
}

fn arbitrary_graph() -> impl Strategy<Value = Graph> {
    (3usize..=16).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..(2 * n)).prop_map(move |pairs| {
            Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn bfs_girth_matches_cycle_enumeration(g in arbitrary_graph()) {
        let brute = brute_force_girth(&g, 10);
        match g.girth() {
            Girth::Finite(girth) if girth <= 10 => prop_assert_eq!(brute, Some(girth)),
            _ => prop_assert_eq!(brute, None),
        }
    }

    #[test]
    fn edge_list_ingestion_dedups(pairs in proptest::collection::vec((0usize..20, 0usize..20), 1..60)) {
        let pairs: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
        prop_assume!(!pairs.is_empty());
        let text: String = pairs.iter().map(|(u, v)| format!("{u} {v}\n")).collect();
        let g = load_edge_list(text.as_bytes()).unwrap();
        let mut expected: Vec<(usize, usize)> =
            pairs.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        expected.sort_unstable();
        expected.dedup();
        prop_assert_eq!(g.edges(), &expected[..]);
        let max_id = pairs.iter().map(|&(u, v)| u.max(v)).max().unwrap();
        prop_assert_eq!(g.n(), max_id + 1);
        prop_assert_eq!(g.m() * 2, (0..g.n()).map(|v| g.degree(v)).sum::<usize>());
    }
}

#[test]
fn random_regular_graphs_match_brute_force() {
    for seed in 0..20 {
        let g = random_regular(16, 3, 3, seed).unwrap();
        let cert = g.certify().unwrap();
        assert_eq!(cert.d, 3);
        assert_eq!(cert.girth.finite(), brute_force_girth(&g, 10));
    }
}

fn assert_tree_like_balls(g: &Graph) {
    let cert = g.certify().unwrap();
    let girth = cert.girth.finite().unwrap();
    let radius = (girth - 1) / 2;
    for v in 0..g.n() {
        let ball = g.distances_within(v, radius).unwrap();
        for l in 0..=radius {
            let count = ball.iter().filter(|&&(_, dist)| dist == l).count();
            assert_eq!(count as f64, shell_size(cert.d, l), "vertex {v}, distance {l}");
        }
    }
}

#[test]
fn builtin_balls_are_tree_like() {
    for name in BUILTIN_NAMES {
        assert_tree_like_balls(&builtin(name).unwrap());
    }
}

#[test]
fn random_high_girth_balls_are_tree_like() {
    let g = random_regular(40, 3, 5, 17).unwrap();
    assert!(g.girth() >= Girth::Finite(5));
    assert_tree_like_balls(&g);
}

#[test]
fn heawood_ball_sizes() {
    let g = builtin("heawood").unwrap();
    let ball = g.distances_within(0, 2).unwrap();
    let sizes: Vec<usize> = (0..=2).map(|l| ball.iter().filter(|&&(_, d)| d == l).count()).collect();
    assert_eq!(sizes, vec![1, 3, 6]);
}
