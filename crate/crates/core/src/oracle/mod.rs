//! Reference strongly regular graphs and brute-force censuses.
//!
//! Everything here is ground truth for validating the closed-form counts and
//! bounds used by the pipeline; nothing in the decision path depends on it.

mod census;
mod field;
mod realize;
mod selfcheck;

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, SrgError};
use crate::params::SrgParams;

pub use census::{census, lambda_subgraphs, CensusReport, LambdaSubgraph};
pub use field::FiniteField;
pub use realize::{realize_representation, Realization};
pub use selfcheck::{self_check, SelfCheckEntry, REFERENCE_GRAPHS};

/// Symmetric, irreflexive adjacency stored as one bitset row per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl AdjacencyMatrix {
    pub fn new(n: usize) -> Self {
        AdjacencyMatrix { n, rows: vec![vec![0; n.div_ceil(64)]; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b && a < self.n && b < self.n);
        self.rows[a][b / 64] |= 1 << (b % 64);
        self.rows[b][a / 64] |= 1 << (a % 64);
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.rows[a][b / 64] >> (b % 64) & 1 == 1
    }

    pub fn degree(&self, a: usize) -> usize {
        self.rows[a].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn common(&self, a: usize, b: usize) -> usize {
        self.rows[a].iter().zip(&self.rows[b]).map(|(x, y)| (x & y).count_ones() as usize).sum()
    }

    pub fn neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&b| self.adjacent(a, b))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.adjacent(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Parameters read off the graph, if it is strongly regular.
    pub fn srg_parameters(&self) -> Option<SrgParams> {
        let n = self.n;
        let k = self.degree(0);
        if (0..n).any(|a| self.degree(a) != k) {
            return None;
        }
        let (mut lambda, mut mu) = (None, None);
        for a in 0..n {
            for b in a + 1..n {
                let slot = if self.adjacent(a, b) { &mut lambda } else { &mut mu };
                let c = self.common(a, b);
                match slot {
                    None => *slot = Some(c),
                    Some(x) if *x != c => return None,
                    _ => {}
                }
            }
        }
        SrgParams::new(n as u64, k as u64, lambda? as u64, mu? as u64).ok()
    }

    /// `A^2 + (mu - lambda) A - (k - mu) I = mu J`, entry by entry.
    pub fn satisfies_srg_identity(&self, p: &SrgParams) -> bool {
        let (k, l, m) = (p.k as i64, p.lambda as i64, p.mu as i64);
        (0..self.n).all(|a| {
            (0..self.n).all(|b| {
                let a2 = if a == b { self.degree(a) as i64 } else { self.common(a, b) as i64 };
                let adj = self.adjacent(a, b) as i64;
                let id = (a == b) as i64;
                a2 + (m - l) * adj - (k - m) * id == m
            })
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RefGraph {
    Petersen,
    Paley(u32),
    Triangular(u32),
    Rook(u32),
}

impl fmt::Display for RefGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RefGraph::Petersen => write!(f, "petersen"),
            RefGraph::Paley(q) => write!(f, "paley({q})"),
            RefGraph::Triangular(n) => write!(f, "triangular({n})"),
            RefGraph::Rook(n) => write!(f, "rook({n})"),
        }
    }
}

impl FromStr for RefGraph {
    type Err = SrgError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if s == "petersen" {
            return Ok(RefGraph::Petersen);
        }
        let bad = || SrgError::Oracle(format!("unknown graph name {s:?}"));
        let (name, arg) = s.split_once('(').ok_or_else(bad)?;
        let n: u32 = arg.strip_suffix(')').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        match name {
            "paley" => Ok(RefGraph::Paley(n)),
            "triangular" => Ok(RefGraph::Triangular(n)),
            "rook" => Ok(RefGraph::Rook(n)),
            _ => Err(bad()),
        }
    }
}

impl RefGraph {
    pub fn expected_params(&self) -> Result<SrgParams> {
        let (v, k, l, m) = match *self {
            RefGraph::Petersen => (10, 3, 0, 1),
            RefGraph::Paley(q) => {
                let q = q as u64;
                (q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4)
            }
            RefGraph::Triangular(n) => {
                let n = n as u64;
                (n * (n - 1) / 2, 2 * (n - 2), n - 2, 4)
            }
            RefGraph::Rook(n) => {
                let n = n as u64;
                (n * n, 2 * (n - 1), n - 2, 2)
            }
        };
        SrgParams::new(v, k, l, m)
    }

    /// Builds the graph and checks the defining identity for its standard
    /// parameters.
    pub fn construct(&self) -> Result<AdjacencyMatrix> {
        let g = match *self {
            RefGraph::Petersen => petersen(),
            RefGraph::Paley(q) => paley(q)?,
            RefGraph::Triangular(n) => triangular(n)?,
            RefGraph::Rook(n) => rook(n)?,
        };
        let params = self.expected_params()?;
        if !g.satisfies_srg_identity(&params) {
            return Err(SrgError::Oracle(format!("{self} fails the SRG identity for {params}")));
        }
        Ok(g)
    }
}

pub fn construct(name: &str) -> Result<AdjacencyMatrix> {
    name.parse::<RefGraph>()?.construct()
}

/// Kneser graph K(5,2).
fn petersen() -> AdjacencyMatrix {
    let pairs: Vec<(u32, u32)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut g = AdjacencyMatrix::new(pairs.len());
    for (i, x) in pairs.iter().enumerate() {
        for (j, y) in pairs.iter().enumerate().skip(i + 1) {
            if x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

fn paley(q: u32) -> Result<AdjacencyMatrix> {
    if q % 4 != 1 || q > 101 {
        return Err(SrgError::Oracle(format!("paley({q}) needs a prime power q = 1 mod 4, q <= 101")));
    }
    let f = FiniteField::new(q).ok_or_else(|| SrgError::Oracle(format!("paley({q}): {q} is not a prime power")))?;
    let sq = f.nonzero_squares();
    let mut g = AdjacencyMatrix::new(q as usize);
    for a in 0..q {
        for b in a + 1..q {
            if sq[f.sub(a, b) as usize] {
                g.add_edge(a as usize, b as usize);
            }
        }
    }
    Ok(g)
}

fn triangular(n: u32) -> Result<AdjacencyMatrix> {
    if !(4..=10).contains(&n) {
        return Err(SrgError::Oracle(format!("triangular({n}) needs 4 <= n <= 10")));
    }
    let pairs: Vec<(u32, u32)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut g = AdjacencyMatrix::new(pairs.len());
    for (i, x) in pairs.iter().enumerate() {
        for (j, y) in pairs.iter().enumerate().skip(i + 1) {
            if x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

fn rook(n: u32) -> Result<AdjacencyMatrix> {
    if !(2..=8).contains(&n) {
        return Err(SrgError::Oracle(format!("rook({n}) needs 2 <= n <= 8")));
    }
    let n = n as usize;
    let mut g = AdjacencyMatrix::new(n * n);
    for a in 0..n * n {
        for b in a + 1..n * n {
            if a / n == b / n || a % n == b % n {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_parameters() {
        for (name, t) in [
            ("petersen", (10, 3, 0, 1)),
            ("paley(13)", (13, 6, 2, 3)),
            ("paley(9)", (9, 4, 1, 2)),
            ("rook(4)", (16, 6, 2, 2)),
            ("triangular(7)", (21, 10, 5, 4)),
        ] {
            let g = construct(name).unwrap();
            let p = g.srg_parameters().unwrap();
            assert_eq!((p.v, p.k, p.lambda, p.mu), t, "{name}");
        }
    }

    #[test]
    fn invalid_orders() {
        assert!(construct("paley(7)").is_err());
        assert!(construct("paley(21)").is_err());
        assert!(construct("paley(105)").is_err());
        assert!(construct("rook(9)").is_err());
        assert!(construct("triangular(11)").is_err());
        assert!(construct("cube(3)").is_err());
    }

    #[test]
    fn name_round_trip() {
        for g in [RefGraph::Petersen, RefGraph::Paley(29), RefGraph::Triangular(6), RefGraph::Rook(5)] {
            assert_eq!(g.to_string().parse::<RefGraph>().unwrap(), g);
        }
    }
}
