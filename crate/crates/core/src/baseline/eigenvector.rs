use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::ranking::{Algorithm, ImportanceRanking};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 100_000;

#[derive(Debug, Clone, PartialEq)]
pub struct EigenvectorResult {
    /// Unit-length leading eigenvector of the weighted adjacency matrix.
    pub vector: Vec<f64>,
    /// Rayleigh quotient `v^T A v`.
    pub eigenvalue: f64,
    pub iterations: usize,
}

fn multiply(g: &WeightedGraph, v: &[f64], shift: f64, out: &mut [f64]) {
    for (i, o) in out.iter_mut().enumerate() {
        *o = shift * v[i] + g.neighbors(i).iter().map(|nb| nb.weight * v[nb.node]).sum::<f64>();
    }
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
}

fn residual(g: &WeightedGraph, v: &[f64], scratch: &mut [f64]) -> (f64, f64) {
    multiply(g, v, 0.0, scratch);
    let lambda: f64 = v.iter().zip(scratch.iter()).map(|(a, b)| a * b).sum();
    let res = v.iter().zip(scratch.iter()).map(|(a, b)| (b - lambda * a).abs()).fold(0.0, f64::max);
    (lambda, res)
}

/// Power iteration from the uniform vector.
///
/// Iterates with `A + l I` (`l` the mean edge weight) rather than `A`: the
/// eigenvectors are the same, but the shift separates the `+lambda` and
/// `-lambda` eigenvalues of bipartite graphs, where plain iteration
/// oscillates forever. Converged once successive unit iterates differ by
/// less than `tol` in max norm and `||A v - lambda v||_inf < tol * max(1, lambda)`.
pub fn eigenvector_scores(g: &WeightedGraph, tol: f64, max_iter: usize) -> Result<EigenvectorResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let n = g.node_count();
    if n == 0 {
        return Ok(EigenvectorResult { vector: Vec::new(), eigenvalue: 0.0, iterations: 0 });
    }
    let shift =
        if g.edge_count() == 0 { 1.0 } else { g.edges().iter().map(|e| e.weight).sum::<f64>() / g.edge_count() as f64 };

    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut next = vec![0.0; n];
    let mut scratch = vec![0.0; n];
    let mut last_residual = f64::INFINITY;
    for iter in 1..=max_iter {
        multiply(g, &v, shift, &mut next);
        normalize(&mut next);
        let diff = v.iter().zip(&next).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        std::mem::swap(&mut v, &mut next);
        if diff < tol {
            let (lambda, res) = residual(g, &v, &mut scratch);
            last_residual = res;
            if res < tol * lambda.max(1.0) {
                return Ok(EigenvectorResult { vector: v, eigenvalue: lambda, iterations: iter });
            }
        }
    }
    if last_residual.is_infinite() {
        last_residual = residual(g, &v, &mut scratch).1;
    }
    Err(Error::NotConverged { iterations: max_iter, residual: last_residual })
}

pub fn eigenvector(g: &WeightedGraph, tol: f64, max_iter: usize) -> Result<ImportanceRanking> {
    let result = eigenvector_scores(g, tol, max_iter)?;
    ImportanceRanking::from_scores(Algorithm::Ec, &result.vector)
}
