use serde::{Deserialize, Serialize};

use super::AdjacencyMatrix;

/// Exact counts by enumeration. Edge pairs are unordered; vertex-edge pairs
/// are `(vertex, edge)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub k4_count: u64,
    pub n_j_disjoint: [u64; 5],
    /// endpoint, adjacent to both, to exactly one, to neither
    pub vertex_edge_class_counts: [u64; 4],
    /// third endpoints adjacent, non-adjacent
    pub shared_edge_class_counts: [u64; 2],
    pub max_lambda_subgraph_edges: u64,
    /// `sum_e m_e`
    pub lambda_subgraph_edge_total: u64,
}

pub fn census(g: &AdjacencyMatrix) -> CensusReport {
    let n = g.n();
    let adj = |a: usize, b: usize| g.adjacent(a, b);

    let mut k4 = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if adj(a, b) && adj(a, c) && adj(a, d) && adj(b, c) && adj(b, d) && adj(c, d) {
                        k4 += 1;
                    }
                }
            }
        }
    }

    let edges = g.edges();
    let mut n_j = [0u64; 5];
    let mut shared = [0u64; 2];
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            let common = [(a, c), (a, d), (b, c), (b, d)].iter().find(|(x, y)| x == y).copied();
            match common {
                Some((x, _)) => {
                    let u = if x == a { b } else { a };
                    let w = if x == c { d } else { c };
                    shared[if adj(u, w) { 0 } else { 1 }] += 1;
                }
                None => {
                    let j = [(a, c), (a, d), (b, c), (b, d)].iter().filter(|&&(x, y)| adj(x, y)).count();
                    n_j[j] += 1;
                }
            }
        }
    }

    let mut ve = [0u64; 4];
    for x in 0..n {
        for &(a, b) in &edges {
            let class = if x == a || x == b {
                0
            } else {
                match (adj(x, a), adj(x, b)) {
                    (true, true) => 1,
                    (false, false) => 3,
                    _ => 2,
                }
            };
            ve[class] += 1;
        }
    }

    let subs = lambda_subgraphs(g);
    let total = subs.iter().map(|s| s.edges.len() as u64).sum();
    let max = subs.iter().map(|s| s.edges.len() as u64).max().unwrap_or(0);

    CensusReport {
        k4_count: k4,
        n_j_disjoint: n_j,
        vertex_edge_class_counts: ve,
        shared_edge_class_counts: shared,
        max_lambda_subgraph_edges: max,
        lambda_subgraph_edge_total: total,
    }
}

/// Subgraph induced on the common neighbours of one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaSubgraph {
    pub edge: (usize, usize),
    pub vertices: Vec<usize>,
    /// pairs of indices into `vertices`
    pub edges: Vec<(usize, usize)>,
}

impl LambdaSubgraph {
    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.vertices.len()];
        for &(i, j) in &self.edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    /// Local indices of the `w` highest-degree vertices (ties by index).
    pub fn top(&self, w: usize) -> Vec<usize> {
        let deg = self.degrees();
        let mut idx: Vec<usize> = (0..deg.len()).collect();
        idx.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
        idx.truncate(w);
        idx
    }

    /// `(m, alpha, beta)` for the split into the top-`w` set and the rest.
    pub fn split_stats(&self, w: usize) -> (u64, u64, u64) {
        let top = self.top(w);
        let mut in_top = vec![false; self.vertices.len()];
        for &i in &top {
            in_top[i] = true;
        }
        let deg = self.degrees();
        let alpha = top.iter().map(|&i| deg[i]).sum();
        let beta = self.edges.iter().filter(|&&(i, j)| in_top[i] && in_top[j]).count() as u64;
        (self.edges.len() as u64, alpha, beta)
    }
}

pub fn lambda_subgraphs(g: &AdjacencyMatrix) -> Vec<LambdaSubgraph> {
    g.edges()
        .into_iter()
        .map(|(a, b)| {
            let vertices: Vec<usize> = (0..g.n()).filter(|&x| g.adjacent(a, x) && g.adjacent(b, x)).collect();
            let mut edges = Vec::new();
            for i in 0..vertices.len() {
                for j in i + 1..vertices.len() {
                    if g.adjacent(vertices[i], vertices[j]) {
                        edges.push((i, j));
                    }
                }
            }
            LambdaSubgraph { edge: (a, b), vertices, edges }
        })
        .collect()
}
