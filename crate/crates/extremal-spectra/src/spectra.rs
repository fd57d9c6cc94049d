//! Dense symmetric eigensolver and spectrum-level checks.
//!
//! The solver is a cyclic Jacobi iteration: sweep the strict upper triangle
//! in a fixed row-major order, rotate away every entry above threshold,
//! repeat until the largest off-diagonal entry drops below `SWEEP_TOL` or
//! the sweep cap is reached. At order 64 and below this is plenty fast, it
//! is deterministic for a fixed input, and it yields the full spectrum with
//! eigenvectors in one shot. The residual reported alongside the spectrum
//! is measured against the original input matrix, so callers can gate on
//! solver quality without trusting the iteration.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::Serialize;

/// Largest off-diagonal magnitude at which a sweep is considered converged.
pub const SWEEP_TOL: f64 = 1e-12;

/// Hard cap on Jacobi sweeps; reached only by pathological inputs.
pub const MAX_SWEEPS: usize = 100;

/// Full spectrum of a symmetric matrix.
///
/// `values` are sorted descending. When requested, `vectors[i]` is the unit
/// eigenvector paired with `values[i]`, sign-fixed so its largest-magnitude
/// entry is positive. `residual` is `max_i ||A x_i - values[i] x_i||_inf`
/// measured against the input matrix.
#[derive(Debug, Clone, Serialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vectors: Option<Vec<Vec<f64>>>,
    pub residual: f64,
}

impl Spectrum {
    pub fn lambda_1(&self) -> f64 {
        self.values[0]
    }

    pub fn lambda_n(&self) -> f64 {
        *self.values.last().expect("nonempty spectrum")
    }
}

/// Dense row-major adjacency matrix of `g`.
pub fn adjacency_matrix(g: &Graph) -> Vec<f64> {
    let n = g.n();
    let mut a = vec![0.0; n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    a
}

/// Eigendecomposition of a symmetric `n` by `n` row-major matrix.
///
/// The input must be symmetric; only the upper triangle drives the
/// rotations but the residual check reads the full matrix.
pub fn eigen_symmetric(n: usize, a: &[f64], want_vectors: bool) -> Spectrum {
    assert_eq!(a.len(), n * n, "matrix must be n by n");
    let mut w = a.to_vec();
    // Eigenvector accumulator, identity to start.
    let mut vec = vec![0.0; n * n];
    for i in 0..n {
        vec[i * n + i] = 1.0;
    }

    for _sweep in 0..MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                off = off.max(w[p * n + q].abs());
            }
        }
        if off <= SWEEP_TOL {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = w[p * n + q];
                if apq.abs() <= SWEEP_TOL {
                    continue;
                }
                // Symmetric Schur rotation zeroing w[p][q].
                let theta = (w[q * n + q] - w[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                w[p * n + p] -= t * apq;
                w[q * n + q] += t * apq;
                w[p * n + q] = 0.0;
                w[q * n + p] = 0.0;
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = w[i * n + p];
                    let aiq = w[i * n + q];
                    w[i * n + p] = c * aip - s * aiq;
                    w[p * n + i] = w[i * n + p];
                    w[i * n + q] = s * aip + c * aiq;
                    w[q * n + i] = w[i * n + q];
                }
                for i in 0..n {
                    let vip = vec[i * n + p];
                    let viq = vec[i * n + q];
                    vec[i * n + p] = c * vip - s * viq;
                    vec[i * n + q] = s * vip + c * viq;
                }
            }
        }
    }

    // Sort descending by eigenvalue; the stable sort keeps column order
    // among exact ties, so the output is deterministic.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        w[j * n + j]
            .partial_cmp(&w[i * n + i])
            .expect("finite eigenvalues")
    });
    let values: Vec<f64> = order.iter().map(|&i| w[i * n + i]).collect();

    let mut vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| (0..n).map(|i| vec[i * n + col]).collect())
        .collect();
    // Sign convention: make the largest-magnitude entry positive, first
    // such index winning ties, so eigenvectors are reproducible.
    for x in &mut vectors {
        let mut best = 0;
        for (i, xi) in x.iter().enumerate() {
            if xi.abs() > x[best].abs() {
                best = i;
            }
        }
        if x[best] < 0.0 {
            for xi in x.iter_mut() {
                *xi = -*xi;
            }
        }
    }

    let mut residual = 0.0f64;
    for (k, x) in vectors.iter().enumerate() {
        for i in 0..n {
            let mut ax = 0.0;
            for j in 0..n {
                ax += a[i * n + j] * x[j];
            }
            residual = residual.max((ax - values[k] * x[i]).abs());
        }
    }

    Spectrum {
        values,
        vectors: if want_vectors { Some(vectors) } else { None },
        residual,
    }
}

/// Adjacency spectrum of a graph.
pub fn graph_spectrum(g: &Graph, want_vectors: bool) -> Spectrum {
    eigen_symmetric(g.n(), &adjacency_matrix(g), want_vectors)
}

/// Largest adjacency eigenvalue of `g`.
pub fn spectral_radius(g: &Graph) -> f64 {
    graph_spectrum(g, false).lambda_1()
}

/// Smallest adjacency eigenvalue of `g`.
pub fn least_eigenvalue(g: &Graph) -> f64 {
    graph_spectrum(g, false).lambda_n()
}

/// Quadratic form x^T A(g) x computed edgewise as the sum of 2 x_u x_v
/// over the edges, never through a matrix product.
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> Result<f64> {
    if x.len() != g.n() {
        return Err(Error::DimensionMismatch {
            got: x.len(),
            want: g.n(),
        });
    }
    let mut sum = 0.0;
    for (u, v) in g.edges() {
        sum += 2.0 * x[u] * x[v];
    }
    Ok(sum)
}

/// Worst per-vertex defect of the eigenvalue equation:
/// max_i |lambda x_i - sum of x_j over neighbors j of i|.
pub fn eigen_equation_residual(g: &Graph, lambda: f64, x: &[f64]) -> Result<f64> {
    if x.len() != g.n() {
        return Err(Error::DimensionMismatch {
            got: x.len(),
            want: g.n(),
        });
    }
    let mut worst = 0.0f64;
    for i in 0..g.n() {
        let mut s = 0.0;
        for j in crate::graph::iter_bits(g.neighbors(i)) {
            s += x[j];
        }
        worst = worst.max((lambda * x[i] - s).abs());
    }
    Ok(worst)
}

/// Difference of complement quadratic forms,
/// x^T A(g^c) x - x^T A(h^c) x, for graphs on a common vertex set and a
/// unit vector x. The J - I parts cancel, leaving
/// rayleigh_quotient(h, x) - rayleigh_quotient(g, x).
pub fn complement_rayleigh_gap(g: &Graph, h: &Graph, x: &[f64]) -> Result<f64> {
    if g.n() != h.n() {
        return Err(Error::OrderMismatch(g.n(), h.n()));
    }
    Ok(rayleigh_quotient(h, x)? - rayleigh_quotient(g, x)?)
}

/// One evaluated inequality instance: does `lhs >= rhs` hold within 1e-9?
/// These records only report; nothing downstream asserts on them.
#[derive(Debug, Clone, Serialize)]
pub struct AuditRecord {
    pub claim: String,
    pub instance: String,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    /// lhs - rhs; negative beyond tolerance exactly when the claim fails.
    pub gap: f64,
}

impl AuditRecord {
    pub fn check_ge(claim: &str, instance: &str, lhs: f64, rhs: f64) -> Self {
        AuditRecord {
            claim: claim.to_string(),
            instance: instance.to_string(),
            lhs,
            rhs,
            holds: lhs >= rhs - 1e-9,
            gap: lhs - rhs,
        }
    }
}

/// Evaluates the claimed bound "spectral radius >= 2 sigma / n" on a
/// connected graph and reports whether it held. The claim is false in
/// general for adjacency matrices (P3 is a counterexample), which is why
/// this is an audit and never an assertion.
pub fn transmission_bound_audit(g: &Graph) -> Result<AuditRecord> {
    let sigma = g.transmission()? as f64;
    let lhs = spectral_radius(g);
    let rhs = 2.0 * sigma / g.n() as f64;
    Ok(AuditRecord::check_ge(
        "lambda1 >= 2*sigma/n",
        &crate::graph6::encode(g),
        lhs,
        rhs,
    ))
}

/// Panics unless the spectrum meets the solver quality gates on `g`:
/// residual within budget, eigenvalue sum near zero, eigenvalue square sum
/// near twice the edge count. Scans call this on every spectrum they use.
pub fn assert_spectrum_sane(g: &Graph, sp: &Spectrum) {
    let max_row_sum = (0..g.n()).map(|u| g.degree(u)).max().unwrap_or(0) as f64;
    let budget = 1e-9 * max_row_sum.max(1.0);
    assert!(
        sp.residual <= budget,
        "residual {} above budget {}",
        sp.residual,
        budget
    );
    let trace: f64 = sp.values.iter().sum();
    assert!(trace.abs() <= 1e-8, "eigenvalue sum {} not near zero", trace);
    let sq: f64 = sp.values.iter().map(|v| v * v).sum();
    let expect = 2.0 * g.edge_count() as f64;
    assert!(
        (sq - expect).abs() <= 1e-6,
        "eigenvalue square sum {} vs 2|E| = {}",
        sq,
        expect
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, path_graph, Graph};

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{} vs {}", a, b);
    }

    #[test]
    fn k2_spectrum() {
        let sp = graph_spectrum(&complete_graph(2).unwrap(), false);
        assert_close(sp.values[0], 1.0, 1e-12);
        assert_close(sp.values[1], -1.0, 1e-12);
    }

    #[test]
    fn complete_graph_closed_form() {
        for n in 2..=10 {
            let g = complete_graph(n).unwrap();
            let sp = graph_spectrum(&g, false);
            assert_close(sp.values[0], (n - 1) as f64, 1e-9);
            for v in &sp.values[1..] {
                assert_close(*v, -1.0, 1e-9);
            }
            assert_spectrum_sane(&g, &sp);
        }
    }

    #[test]
    fn star_spectrum() {
        // K_{1,3}: +-sqrt(3) and two zeros.
        let g = complete_bipartite(1, 3).unwrap();
        let sp = graph_spectrum(&g, true);
        let r3 = 3f64.sqrt();
        assert_close(sp.values[0], r3, 1e-10);
        assert_close(sp.values[1], 0.0, 1e-10);
        assert_close(sp.values[2], 0.0, 1e-10);
        assert_close(sp.values[3], -r3, 1e-10);
        assert_spectrum_sane(&g, &sp);
    }

    #[test]
    fn complete_bipartite_radius() {
        let g = complete_bipartite(2, 5).unwrap();
        assert_close(spectral_radius(&g), 10f64.sqrt(), 1e-10);
    }

    #[test]
    fn least_eigenvalue_of_empty_graph_is_zero() {
        let g = Graph::new(4).unwrap();
        assert_close(least_eigenvalue(&g), 0.0, 1e-15);
    }

    #[test]
    fn eigenvectors_satisfy_the_eigen_equation() {
        let g = path_graph(5).unwrap();
        let sp = graph_spectrum(&g, true);
        let vectors = sp.vectors.as_ref().unwrap();
        for (k, x) in vectors.iter().enumerate() {
            let r = eigen_equation_residual(&g, sp.values[k], x).unwrap();
            assert!(r <= 1e-9, "residual {} at index {}", r, k);
            // A perturbed vector must fit the equation strictly worse.
            let mut y = x.clone();
            y[0] += 0.1;
            let norm: f64 = y.iter().map(|t| t * t).sum::<f64>().sqrt();
            for t in y.iter_mut() {
                *t /= norm;
            }
            let rp = eigen_equation_residual(&g, sp.values[k], &y).unwrap();
            assert!(rp > r, "perturbation did not worsen the residual");
        }
    }

    #[test]
    fn rayleigh_quotient_edgewise() {
        let g = complete_graph(2).unwrap();
        let v = 1.0 / 2f64.sqrt();
        assert_close(rayleigh_quotient(&g, &[v, v]).unwrap(), 1.0, 1e-12);
        assert_close(rayleigh_quotient(&g, &[0.0, 0.0]).unwrap(), 0.0, 0.0);
        assert!(rayleigh_quotient(&g, &[1.0]).is_err());
    }

    #[test]
    fn gap_identity_for_single_edge_addition() {
        let g = path_graph(4).unwrap();
        let h = g.with_edge(0, 3);
        let x = [0.3, -0.2, 0.6, 0.7];
        let gap = complement_rayleigh_gap(&g, &h, &x).unwrap();
        assert_close(gap, 2.0 * x[0] * x[3], 1e-15);
        assert_close(complement_rayleigh_gap(&g, &g, &x).unwrap(), 0.0, 0.0);
        let short = complete_graph(3).unwrap();
        assert!(complement_rayleigh_gap(&g, &short, &x).is_err());
    }

    #[test]
    fn transmission_audit_examples() {
        // Complete graphs satisfy the bound with equality.
        let rec = transmission_bound_audit(&complete_graph(5).unwrap()).unwrap();
        assert!(rec.holds);
        assert_close(rec.lhs, 4.0, 1e-10);
        assert_close(rec.rhs, 4.0, 1e-12);
        // P3 refutes it: lambda1 = sqrt(2) < 8/3.
        let rec = transmission_bound_audit(&path_graph(3).unwrap()).unwrap();
        assert!(!rec.holds);
        assert_close(rec.lhs, 2f64.sqrt(), 1e-10);
        assert_close(rec.rhs, 8.0 / 3.0, 1e-12);
        assert!(rec.gap < 0.0);
        // Disconnected input is an error, not a record.
        assert!(transmission_bound_audit(&Graph::new(3).unwrap()).is_err());
    }

    #[test]
    fn residual_is_measured_against_the_input() {
        let g = complete_bipartite(3, 4).unwrap();
        let sp = graph_spectrum(&g, true);
        assert!(sp.residual <= 1e-12);
        assert_spectrum_sane(&g, &sp);
    }
}
