use nalgebra::{DMatrix, SymmetricEigen};

use super::AdjacencyMatrix;
use crate::error::{Result, SrgError};
use crate::params::{derive_spectrum, SpectrumOutcome};

/// Floating-point vertex vectors spanning the `s`-eigenspace. Test-only: used
/// to cross-check symbolic Gram entries against real vectors.
#[derive(Debug, Clone)]
pub struct Realization {
    pub dim: usize,
    pub vectors: Vec<Vec<f64>>,
}

impl Realization {
    pub fn dot(&self, a: usize, b: usize) -> f64 {
        self.vectors[a].iter().zip(&self.vectors[b]).map(|(x, y)| x * y).sum()
    }

    pub fn sum(&self, idx: &[usize]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        for &i in idx {
            for (o, x) in out.iter_mut().zip(&self.vectors[i]) {
                *o += x;
            }
        }
        out
    }

    pub fn gram(&self) -> DMatrix<f64> {
        let n = self.vectors.len();
        DMatrix::from_fn(n, n, |i, j| self.dot(i, j))
    }
}

pub fn realize_representation(g: &AdjacencyMatrix) -> Result<Realization> {
    let params = g
        .srg_parameters()
        .ok_or_else(|| SrgError::Oracle("graph is not strongly regular".into()))?;
    let sp = match derive_spectrum(&params)? {
        SpectrumOutcome::Integral(sp) => sp,
        SpectrumOutcome::NotApplicable(r) => return Err(SrgError::NotApplicable(format!("{params}: {r:?}"))),
    };
    let n = g.n();
    let a = DMatrix::from_fn(n, n, |i, j| if g.adjacent(i, j) { 1.0 } else { 0.0 });
    let eig = SymmetricEigen::new(a);
    let cols: Vec<usize> = (0..n)
        .filter(|&i| {
            let ev: f64 = eig.eigenvalues[i];
            (ev - sp.s as f64).abs() < 1e-6
        })
        .collect();
    if cols.len() as u64 != sp.g {
        return Err(SrgError::Oracle(format!("found {} eigenvectors for s={}, expected {}", cols.len(), sp.s, sp.g)));
    }
    // the projection onto the eigenspace has constant diagonal g/v
    let scale = (n as f64 / sp.g as f64).sqrt();
    let vectors = (0..n)
        .map(|u| cols.iter().map(|&c| eig.eigenvectors[(u, c)] * scale).collect())
        .collect();
    Ok(Realization { dim: cols.len(), vectors })
}
