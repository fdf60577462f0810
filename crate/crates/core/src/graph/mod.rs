//! Simple undirected graphs, edge-list ingestion and (degree, girth)
//! certificates.

mod builtin;
mod generate;

use std::collections::VecDeque;
use std::io::BufRead;

use serde::Serialize;

use crate::error::{Error, Result};

pub use builtin::{builtin, BUILTIN_NAMES};
pub use generate::{random_regular, random_regular_with_budget, DEFAULT_ATTEMPT_BUDGET};

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Girth of a graph; forests have no cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

/// Verified degree and girth of a regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphCertificate {
    pub d: usize,
    pub girth: Girth,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_none(),
        }
    }
}

impl GraphCertificate {
    /// Largest k with girth ≥ 2k; `None` stands for unbounded (forests).
    pub fn k_max(&self) -> Option<usize> {
        self.girth.finite().map(|g| g / 2)
    }

    pub fn admits(&self, k: usize) -> bool {
        self.k_max().is_none_or(|kmax| k <= kmax)
    }
}

impl Graph {
    /// Builds a simple graph on `n` vertices. Duplicate edges collapse; self
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Domain(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_adjacency(adjacency))
    }

    fn from_adjacency(mut adjacency: Vec<Vec<usize>>) -> Self {
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        let edges = adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        Self { adjacency, edges }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency
            .get(u)
            .is_some_and(|nbrs| nbrs.binary_search(&v).is_ok())
    }

    /// Common degree, or the first vertex whose degree differs from vertex 0.
    pub fn regular_degree(&self) -> std::result::Result<usize, usize> {
        let d = self.adjacency.first().map_or(0, Vec::len);
        match (0..self.n()).find(|&v| self.degree(v) != d) {
            Some(v) => Err(v),
            None => Ok(d),
        }
    }

    /// Exact girth: BFS from every root, closing a cycle at the first non-tree
    /// edge seen. O(n·m).
    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        let mut touched = Vec::new();
        for root in 0..n {
            dist[root] = 0;
            touched.push(root);
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                // Any cycle found from here on is at least 2·dist[u] + 1 long.
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adjacency[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        touched.push(w);
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if dist[w] == dist[u] {
                            break 'bfs;
                        }
                    }
                }
            }
            for &v in &touched {
                dist[v] = usize::MAX;
                parent[v] = usize::MAX;
            }
            touched.clear();
            queue.clear();
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Checks regularity and computes the exact girth.
    pub fn certify(&self) -> Result<GraphCertificate> {
        if self.n() == 0 {
            return Err(Error::Certification("graph has no vertices".into()));
        }
        let d = self.regular_degree().map_err(|v| {
            Error::Certification(format!(
                "graph is not regular: vertex {v} has degree {}, vertex 0 has degree {}",
                self.degree(v),
                self.degree(0)
            ))
        })?;
        Ok(GraphCertificate {
            d,
            girth: self.girth(),
        })
    }

    /// Truncated BFS: every vertex within `radius` of `root` with its
    /// distance, in BFS order (so distances are non-decreasing).
    pub fn distances_within(&self, root: usize, radius: usize) -> Result<Vec<(usize, usize)>> {
        if root >= self.n() {
            return Err(Error::Domain(format!(
                "vertex {root} out of range for {} vertices",
                self.n()
            )));
        }
        let mut seen = vec![false; self.n()];
        Ok(self.ball(root, radius, &mut seen))
    }

    /// Like [`Graph::distances_within`] but reuses a caller-owned `seen`
    /// buffer, which must be all-false on entry and is all-false on return.
    pub(crate) fn ball(&self, root: usize, radius: usize, seen: &mut [bool]) -> Vec<(usize, usize)> {
        let mut out = vec![(root, 0)];
        seen[root] = true;
        let mut head = 0;
        while head < out.len() {
            let (u, du) = out[head];
            head += 1;
            if du == radius {
                continue;
            }
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    out.push((w, du + 1));
                }
            }
        }
        for &(v, _) in &out {
            seen[v] = false;
        }
        out
    }

    /// Longest shortest path; `None` for disconnected graphs.
    pub fn diameter(&self) -> Option<usize> {
        let mut seen = vec![false; self.n()];
        let mut diam = 0;
        for v in 0..self.n() {
            let ball = self.ball(v, usize::MAX, &mut seen);
            if ball.len() != self.n() {
                return None;
            }
            diam = diam.max(ball.last().map_or(0, |&(_, d)| d));
        }
        Some(diam)
    }
}

/// Parses whitespace-separated `u v` pairs with 0-based ids. Blank lines and
/// lines starting with `#` are skipped; the vertex count is the largest id
/// plus one.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::Ingestion {
            line: lineno,
            message: e.to_string(),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Ingestion {
                line: lineno,
                message: format!("expected two vertex ids, found {} fields", fields.len()),
            });
        }
        let parse = |tok: &str| -> Result<usize> {
            if tok.starts_with('-') && tok[1..].parse::<u64>().is_ok() {
                return Err(Error::Ingestion {
                    line: lineno,
                    message: format!("negative vertex id `{tok}`"),
                });
            }
            tok.parse::<usize>().map_err(|_| Error::Ingestion {
                line: lineno,
                message: format!("unparsable vertex id `{tok}`"),
            })
        };
        let u = parse(fields[0])?;
        let v = parse(fields[1])?;
        if u == v {
            return Err(Error::Ingestion {
                line: lineno,
                message: format!("self-loop at vertex {u}"),
            });
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

/// Cycle graph C_n.
pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are in range")
}
