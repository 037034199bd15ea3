//! Semidefinite feasibility: find multipliers `p` with
//! `C − Σ p_i A_i ⪰ 0`, possibly across several blocks sharing
//! multipliers.
//!
//! The solver maximizes the smallest eigenvalue over `p` (the margin
//! formulation `max λ s.t. C − Σ p_i A_i ⪰ λI`, shared across blocks); a
//! strictly positive optimum yields an interior feasible point that
//! survives rational rounding, while boundary problems report `λ* ≈ 0`
//! and hand the kernel structure to the certificate stage.

mod sdpa;
mod solve;

use std::collections::HashMap;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::diffalg::Rat;
use crate::reduction::QuadraticForm;

pub use sdpa::{export_sdpa, parse_sdpa, SdpaError};
pub use solve::{solve, SdpSolution, SdpStatus, SolverConfig};

/// One PSD block: `C − Σ p_i A_i ⪰ 0`, terms keyed by multiplier index.
#[derive(Debug, Clone)]
pub struct SdpBlock {
    pub dim: usize,
    pub c: QuadraticForm,
    pub terms: Vec<(usize, QuadraticForm)>,
}

/// A multi-block feasibility problem with named multipliers.
#[derive(Debug, Clone)]
pub struct SdpProblem {
    pub multipliers: Vec<String>,
    pub blocks: Vec<SdpBlock>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AssembleError {
    #[error("constraint {index} lives on a different basis (dim {got}, expected {want})")]
    BasisMismatch {
        index: usize,
        got: usize,
        want: usize,
    },
    #[error("multiplier name {0:?} appears in several blocks without being declared shared")]
    NameCollision(String),
}

/// Single-block assembly: `C = Ê`, `A_i = R̂_i`, multipliers `p1..pN`.
pub fn assemble(
    e_hat: &QuadraticForm,
    suite: &[&QuadraticForm],
) -> Result<SdpProblem, AssembleError> {
    let dim = e_hat.dim();
    let mut terms = Vec::with_capacity(suite.len());
    let mut names = Vec::with_capacity(suite.len());
    for (i, r) in suite.iter().enumerate() {
        if r.dim() != dim {
            return Err(AssembleError::BasisMismatch {
                index: i,
                got: r.dim(),
                want: dim,
            });
        }
        names.push(format!("p{}", i + 1));
        terms.push((i, (*r).clone()));
    }
    Ok(SdpProblem {
        multipliers: names,
        blocks: vec![SdpBlock {
            dim,
            c: e_hat.clone(),
            terms,
        }],
    })
}

/// A block of a joint problem: `C` plus named `A` matrices.
#[derive(Debug, Clone)]
pub struct JointBlock {
    pub c: QuadraticForm,
    pub terms: Vec<(String, QuadraticForm)>,
}

/// Multi-block assembly. Multipliers named in `shared` may appear in any
/// block; other names must be unique to one block.
pub fn assemble_joint(
    blocks: &[JointBlock],
    shared: &[&str],
) -> Result<SdpProblem, AssembleError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut owner: HashMap<String, usize> = HashMap::new();
    let mut out_blocks = Vec::with_capacity(blocks.len());
    for (b, block) in blocks.iter().enumerate() {
        let dim = block.c.dim();
        let mut terms = Vec::with_capacity(block.terms.len());
        for (i, (name, a)) in block.terms.iter().enumerate() {
            if a.dim() != dim {
                return Err(AssembleError::BasisMismatch {
                    index: i,
                    got: a.dim(),
                    want: dim,
                });
            }
            let is_shared = shared.contains(&name.as_str());
            if !is_shared {
                if let Some(&prev) = owner.get(name) {
                    if prev != b {
                        return Err(AssembleError::NameCollision(name.clone()));
                    }
                }
                owner.insert(name.clone(), b);
            }
            let id = *index.entry(name.clone()).or_insert_with(|| {
                names.push(name.clone());
                names.len() - 1
            });
            terms.push((id, a.clone()));
        }
        out_blocks.push(SdpBlock {
            dim,
            c: block.c.clone(),
            terms,
        });
    }
    Ok(SdpProblem {
        multipliers: names,
        blocks: out_blocks,
    })
}

impl SdpProblem {
    /// Scale every matrix by a positive rational; feasibility status is
    /// invariant under this.
    pub fn scaled(&self, s: &Rat) -> SdpProblem {
        SdpProblem {
            multipliers: self.multipliers.clone(),
            blocks: self
                .blocks
                .iter()
                .map(|b| SdpBlock {
                    dim: b.dim,
                    c: b.c.scaled(s),
                    terms: b.terms.iter().map(|(i, a)| (*i, a.scaled(s))).collect(),
                })
                .collect(),
        }
    }

    /// Dense f64 view of a quadratic form as a symmetric matrix.
    pub(crate) fn to_dense(q: &QuadraticForm) -> nalgebra::DMatrix<f64> {
        let n = q.dim();
        let mut m = nalgebra::DMatrix::zeros(n, n);
        for ((i, j), _) in q.entries() {
            let v = q.matrix_entry(*i, *j).to_f64().unwrap_or(f64::NAN);
            m[(*i, *j)] = v;
            m[(*j, *i)] = v;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffalg::rat;

    fn q(dim: usize, entries: &[((usize, usize), i64)]) -> QuadraticForm {
        QuadraticForm::from_entries(
            dim,
            entries.iter().map(|&(k, v)| (k, rat(v))).collect(),
        )
    }

    #[test]
    fn assemble_shapes() {
        let e = q(3, &[((0, 0), 1), ((1, 1), -1)]);
        let r1 = q(3, &[((1, 2), 5), ((2, 2), -4)]);
        let r2 = q(3, &[((0, 2), 1)]);
        let p = assemble(&e, &[&r1, &r2]).unwrap();
        assert_eq!(p.blocks.len(), 1);
        assert_eq!(p.blocks[0].dim, 3);
        assert_eq!(p.multipliers, vec!["p1", "p2"]);
    }

    #[test]
    fn assemble_rejects_basis_mismatch() {
        let e = q(3, &[((0, 0), 1)]);
        let bad = q(2, &[((0, 0), 1)]);
        assert!(matches!(
            assemble(&e, &[&bad]),
            Err(AssembleError::BasisMismatch { .. })
        ));
    }

    #[test]
    fn joint_collision_detection() {
        let block = |name: &str| JointBlock {
            c: q(2, &[((0, 0), 1), ((1, 1), 1)]),
            terms: vec![(name.to_string(), q(2, &[((0, 1), 1)]))],
        };
        assert!(matches!(
            assemble_joint(&[block("x"), block("x")], &[]),
            Err(AssembleError::NameCollision(_))
        ));
        let ok = assemble_joint(&[block("x"), block("x")], &["x"]).unwrap();
        assert_eq!(ok.multipliers, vec!["x"]);
        assert_eq!(ok.blocks.len(), 2);
    }
}
