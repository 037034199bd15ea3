//! Sum-of-squares certificates for heat-flow entropy inequalities.
//!
//! Let `p_t` be a probability density smoothed by the heat semigroup,
//! `d p_t/dt = (1/2)∇²p_t`. The signs of the derivatives `d^m H(X_t)/dt^m`
//! of the differential entropy, and the concavity of the entropy power
//! `N(X_t)`, reduce to statements of the form
//!
//! ```text
//! ∫ E / p_t^{2m-1} dx  ≥ 0
//! ```
//!
//! where `E` is a differential form: a polynomial in `p_t` and its spatial
//! derivatives whose monomials all have degree `2m` and total order `2m`.
//! The prover works in four stages:
//!
//! 1. generate differential forms `R` with `∫ R / p_t^{2m-1} dx = 0`
//!    (integration by parts, the divergence theorem, and heat-flow lifting
//!    of lower-order relations) — module [`constraints`];
//! 2. rewrite everything as quadratic forms over the basis of degree-`m`,
//!    total-order-`m` monomials and eliminate what does not fit — module
//!    [`reduction`];
//! 3. search numerically for multipliers `p_i` making
//!    `Ê − Σ p_i R̂_i` positive semidefinite — module [`sdp`];
//! 4. round the multipliers to rationals and re-prove semidefiniteness
//!    exactly, yielding a machine-checkable certificate — module
//!    [`certificate`].
//!
//! An independent Gaussian-moment oracle ([`oracle`]) validates every
//! generated constraint and every target against closed forms, using only
//! exact rational arithmetic.

pub mod certificate;
pub mod cli;
pub mod constraints;
pub mod diffalg;
pub mod oracle;
pub mod pipeline;
pub mod reduction;
pub mod sdp;
pub mod targets;

pub use diffalg::{DiffForm, Derivative, Monomial, Rat};
