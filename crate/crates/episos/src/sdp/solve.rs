//! Smoothed spectral maximization of the feasibility margin.
//!
//! The margin `λ(p) = min eigenvalue over all blocks of C_b − Σ p_i A_{b,i}`
//! is concave in `p`. It is maximized through the softmin surrogate
//!
//! ```text
//! F_μ(p) = −μ · ln Σ_{b,k} exp(−λ_{b,k}(p) / μ)   (→ λ(p) as μ → 0)
//! ```
//!
//! with gradient `∂F/∂p_i = −Σ_b ⟨W_b, A_{b,i}⟩` where `W_b` is the
//! softmin-weighted spectral projector — ascended by L-BFGS with Armijo
//! backtracking under an annealed μ schedule. Deterministic: the start
//! point is the origin and the schedule is fixed.

use nalgebra::{DMatrix, SymmetricEigen};

use super::{SdpBlock, SdpProblem};

#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Witness entries may dip this far below zero and still count.
    pub feasibility_tol: f64,
    /// Margin (normalized) demanded for `CertificateFound`; configurable
    /// down to 0 for boundary problems.
    pub margin_tol: f64,
    /// Total inner-iteration budget across the annealing schedule.
    pub max_iters: usize,
    /// Reserved for randomized restarts; the default path is fully
    /// deterministic.
    pub seed: u64,
    /// Declare success early if the normalized margin exceeds this.
    pub lambda_cap: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            feasibility_tol: 1e-8,
            margin_tol: 1e-7,
            max_iters: 500,
            seed: 0,
            lambda_cap: 1e3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdpStatus {
    /// A point with margin above the tolerance was found (or, with a zero
    /// margin tolerance, within feasibility tolerance of the boundary).
    CertificateFound,
    /// The search converged or stalled below tolerance. Not a proof of
    /// infeasibility.
    NoCertificate,
    /// Non-finite numbers or no progress at all.
    NumericalFailure,
}

#[derive(Debug, Clone)]
pub struct SdpSolution {
    pub status: SdpStatus,
    /// Multiplier values in problem scale, aligned with
    /// `SdpProblem::multipliers`.
    pub multipliers: Vec<f64>,
    /// `C_b − Σ p_i A_{b,i}` per block, problem scale.
    pub witnesses: Vec<DMatrix<f64>>,
    /// Best margin found, normalized by the problem scale.
    pub lambda_star: f64,
    /// Best margin in problem scale.
    pub lambda_raw: f64,
    pub iterations: usize,
}

struct DenseBlock {
    c: DMatrix<f64>,
    /// (multiplier id, normalized matrix, norm used)
    terms: Vec<(usize, DMatrix<f64>)>,
}

fn frobenius(m: &DMatrix<f64>) -> f64 {
    m.iter().map(|x| x * x).sum::<f64>().sqrt()
}

struct Objective {
    blocks: Vec<DenseBlock>,
    nvars: usize,
}

impl Objective {
    fn assemble(&self, p: &[f64]) -> Vec<DMatrix<f64>> {
        self.blocks
            .iter()
            .map(|b| {
                let mut x = b.c.clone();
                for (id, a) in &b.terms {
                    x -= a * p[*id];
                }
                x
            })
            .collect()
    }

    /// Smoothed margin and gradient at `p`.
    fn eval(&self, p: &[f64], mu: f64) -> (f64, Vec<f64>) {
        let mats = self.assemble(p);
        let eigs: Vec<SymmetricEigen<f64, nalgebra::Dyn>> =
            mats.into_iter().map(SymmetricEigen::new).collect();
        let lambda_min = eigs
            .iter()
            .flat_map(|e| e.eigenvalues.iter().copied())
            .fold(f64::INFINITY, f64::min);
        let mut z = 0.0;
        for e in &eigs {
            for &l in e.eigenvalues.iter() {
                z += (-(l - lambda_min) / mu).exp();
            }
        }
        let f = lambda_min - mu * z.ln();
        let mut grad = vec![0.0; self.nvars];
        for (b, e) in eigs.iter().enumerate() {
            let dim = e.eigenvalues.len();
            // W = Σ w_k v_k v_kᵀ with softmin weights
            let mut w = DMatrix::zeros(dim, dim);
            for k in 0..dim {
                let wk = (-(e.eigenvalues[k] - lambda_min) / mu).exp() / z;
                if wk > 1e-300 {
                    let v = e.eigenvectors.column(k);
                    w.syger(wk, &v, &v, 1.0);
                }
            }
            for (id, a) in &self.blocks[b].terms {
                let mut dot = 0.0;
                for i in 0..dim {
                    for j in 0..dim {
                        dot += w[(i, j)] * a[(i, j)];
                    }
                }
                grad[*id] -= dot;
            }
        }
        (f, grad)
    }

    fn exact_margin(&self, p: &[f64]) -> f64 {
        self.assemble(p)
            .into_iter()
            .flat_map(|x| SymmetricEigen::new(x).eigenvalues.iter().copied().collect::<Vec<_>>())
            .fold(f64::INFINITY, f64::min)
    }
}

/// Solve the margin maximization. Deterministic for a fixed config.
pub fn solve(problem: &SdpProblem, config: &SolverConfig) -> SdpSolution {
    let nvars = problem.multipliers.len();

    // Normalize: C by the overall scale, each A to unit Frobenius norm.
    let mut scale: f64 = 1.0;
    for b in &problem.blocks {
        scale = scale.max(frobenius(&SdpProblem::to_dense(&b.c)));
    }
    let mut term_norms = vec![1.0_f64; nvars];
    let mut blocks = Vec::with_capacity(problem.blocks.len());
    for b in &problem.blocks {
        let mut terms = Vec::with_capacity(b.terms.len());
        for (id, a) in &b.terms {
            let dense = SdpProblem::to_dense(a);
            let norm = frobenius(&dense).max(1e-300);
            // A multiplier shared across blocks keeps one norm; the first
            // block seen wins (the matrices have comparable scales).
            if (term_norms[*id] - 1.0).abs() < f64::EPSILON {
                term_norms[*id] = norm;
            }
            terms.push((*id, dense / term_norms[*id]));
        }
        blocks.push(DenseBlock {
            c: SdpProblem::to_dense(&b.c) / scale,
            terms,
        });
    }
    let objective = Objective { blocks, nvars };

    if !objective
        .blocks
        .iter()
        .all(|b| b.c.iter().all(|x| x.is_finite()))
    {
        return failure(problem, nvars, scale, &term_norms);
    }

    // Annealed L-BFGS ascent.
    let mut p = vec![0.0; nvars];
    let mut iterations = 0usize;
    let mut best_p = p.clone();
    let mut best_margin = objective.exact_margin(&p);
    let mus = [1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9];
    let rounds = mus.len();
    let per_round = (config.max_iters / rounds).max(10);

    for &mu in &mus {
        let (mut f, mut grad) = objective.eval(&p, mu);
        let mut history: Vec<(Vec<f64>, Vec<f64>, f64)> = Vec::new(); // (s, y, rho)
        for _ in 0..per_round {
            iterations += 1;
            // two-loop recursion on the ascent direction
            let mut dir = grad.clone();
            let mut alphas = Vec::with_capacity(history.len());
            for (s, y, rho) in history.iter().rev() {
                let alpha = rho * dot(s, &dir);
                axpy(&mut dir, -alpha, y);
                alphas.push(alpha);
            }
            if let Some((s, y, _)) = history.last() {
                let gamma = dot(s, y) / dot(y, y).max(1e-300);
                if gamma.is_finite() && gamma > 0.0 {
                    for d in dir.iter_mut() {
                        *d *= gamma;
                    }
                }
            }
            for ((s, y, rho), alpha) in history.iter().zip(alphas.into_iter().rev()) {
                let beta = rho * dot(y, &dir);
                axpy(&mut dir, alpha - beta, s);
            }
            if dot(&dir, &grad) <= 0.0 {
                dir = grad.clone();
                history.clear();
            }
            let gnorm = dot(&grad, &grad).sqrt();
            if gnorm < 1e-14 {
                break;
            }
            // Armijo backtracking
            let mut step = 1.0;
            let slope = dot(&dir, &grad);
            let mut accepted = false;
            for _ in 0..40 {
                let trial: Vec<f64> = p
                    .iter()
                    .zip(dir.iter())
                    .map(|(x, d)| x + step * d)
                    .collect();
                let (ft, gt) = objective.eval(&trial, mu);
                if ft.is_finite() && ft >= f + 1e-4 * step * slope {
                    let s: Vec<f64> = trial.iter().zip(p.iter()).map(|(a, b)| a - b).collect();
                    let y: Vec<f64> = gt.iter().zip(grad.iter()).map(|(a, b)| a - b).collect();
                    let sy = dot(&s, &y);
                    if sy.abs() > 1e-300 && sy < 0.0 {
                        // ascent: y = g_new − g_old has s·y < 0 for concave F
                        history.push((s, y.clone(), 1.0 / sy));
                        if history.len() > 12 {
                            history.remove(0);
                        }
                    }
                    p = trial;
                    f = ft;
                    grad = gt;
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if !accepted {
                break;
            }
            if f > config.lambda_cap {
                break;
            }
        }
        let margin = objective.exact_margin(&p);
        if margin > best_margin {
            best_margin = margin;
            best_p = p.clone();
        }
        if best_margin > config.lambda_cap {
            break;
        }
    }

    if !best_margin.is_finite() || best_p.iter().any(|x| !x.is_finite()) {
        return failure(problem, nvars, scale, &term_norms);
    }

    // Unscale multipliers: p_true = p̂ · scale / ‖A‖.
    let multipliers: Vec<f64> = best_p
        .iter()
        .zip(term_norms.iter())
        .map(|(phat, norm)| phat * scale / norm)
        .collect();
    let witnesses: Vec<DMatrix<f64>> = problem
        .blocks
        .iter()
        .map(|b| {
            let mut x = SdpProblem::to_dense(&b.c);
            for (id, a) in &b.terms {
                x -= SdpProblem::to_dense(a) * multipliers[*id];
            }
            x
        })
        .collect();

    let found = best_margin > config.margin_tol
        || (config.margin_tol <= 0.0 && best_margin >= -config.feasibility_tol);
    SdpSolution {
        status: if found {
            SdpStatus::CertificateFound
        } else {
            SdpStatus::NoCertificate
        },
        multipliers,
        witnesses,
        lambda_star: best_margin,
        lambda_raw: best_margin * scale,
        iterations,
    }
}

fn failure(
    problem: &SdpProblem,
    nvars: usize,
    _scale: f64,
    _norms: &[f64],
) -> SdpSolution {
    SdpSolution {
        status: SdpStatus::NumericalFailure,
        multipliers: vec![0.0; nvars],
        witnesses: problem
            .blocks
            .iter()
            .map(|b| SdpProblem::to_dense(&b.c))
            .collect(),
        lambda_star: f64::NAN,
        lambda_raw: f64::NAN,
        iterations: 0,
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

fn axpy(dst: &mut [f64], alpha: f64, x: &[f64]) {
    for (d, v) in dst.iter_mut().zip(x.iter()) {
        *d += alpha * v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffalg::rat;
    use crate::reduction::QuadraticForm;
    use crate::sdp::{assemble, assemble_joint, JointBlock};

    fn q(dim: usize, entries: &[((usize, usize), i64)]) -> QuadraticForm {
        QuadraticForm::from_entries(dim, entries.iter().map(|&(k, v)| (k, rat(v))).collect())
    }

    #[test]
    fn psd_without_constraints_is_found() {
        let e = q(2, &[((0, 0), 2), ((1, 1), 3)]);
        let p = assemble(&e, &[]).unwrap();
        let sol = solve(&p, &SolverConfig::default());
        assert_eq!(sol.status, SdpStatus::CertificateFound);
        assert!(sol.multipliers.is_empty());
    }

    #[test]
    fn indefinite_without_constraints_is_rejected() {
        let e = q(2, &[((0, 0), 1), ((1, 1), -1)]);
        let p = assemble(&e, &[]).unwrap();
        let sol = solve(&p, &SolverConfig::default());
        assert_eq!(sol.status, SdpStatus::NoCertificate);
        assert!(sol.lambda_star < -1e-6);
    }

    #[test]
    fn one_multiplier_repair() {
        // C = diag(1, -1), A = diag(0, -1): p = 1 + margin works
        let e = q(2, &[((0, 0), 1), ((1, 1), -1)]);
        let a = q(2, &[((1, 1), -1)]);
        let p = assemble(&e, &[&a]).unwrap();
        let sol = solve(&p, &SolverConfig::default());
        assert_eq!(sol.status, SdpStatus::CertificateFound);
        // witness consistency: recompute C − pA
        let w = &sol.witnesses[0];
        assert!((w[(0, 0)] - 1.0).abs() < 1e-9);
        assert!((w[(1, 1)] - (-1.0 + sol.multipliers[0])).abs() < 1e-9);
    }

    #[test]
    fn jointly_infeasible_shared_multiplier() {
        // Block 1 needs x ≥ 1/2 (from 2x − 1 ≥ 0 at entry (0,0)),
        // block 2 needs −2x − 1 ≥ 0, i.e. x ≤ −1/2: jointly impossible.
        let b1 = JointBlock {
            c: q(1, &[((0, 0), -1)]),
            terms: vec![("x".into(), q(1, &[((0, 0), -2)]))],
        };
        let b2 = JointBlock {
            c: q(1, &[((0, 0), -1)]),
            terms: vec![("x".into(), q(1, &[((0, 0), 2)]))],
        };
        let p = assemble_joint(&[b1.clone(), b2.clone()], &["x"]).unwrap();
        let sol = solve(&p, &SolverConfig::default());
        assert_eq!(sol.status, SdpStatus::NoCertificate);
        // each block alone is feasible
        for b in [b1, b2] {
            let single = assemble_joint(&[b], &["x"]).unwrap();
            let sol = solve(&single, &SolverConfig::default());
            assert_eq!(sol.status, SdpStatus::CertificateFound);
        }
    }

    #[test]
    fn determinism_and_scale_invariance() {
        let e = q(2, &[((0, 0), 1), ((0, 1), 4), ((1, 1), -1)]);
        let a = q(2, &[((0, 1), 1)]);
        let p = assemble(&e, &[&a]).unwrap();
        let s1 = solve(&p, &SolverConfig::default());
        let s2 = solve(&p, &SolverConfig::default());
        assert_eq!(s1.multipliers, s2.multipliers);
        assert_eq!(s1.status, s2.status);
        let scaled = p.scaled(&crate::diffalg::ratio(7, 3));
        let s3 = solve(&scaled, &SolverConfig::default());
        assert_eq!(s1.status, s3.status);
    }
}
