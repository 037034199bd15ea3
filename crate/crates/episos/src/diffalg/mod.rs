//! Exact symbolic algebra for differential polynomials in `p_t`.
//!
//! The atoms are partial derivatives of `p_t`, identified by a multi-index
//! over the `n` coordinates. Monomials are multisets of derivatives; a
//! differential form is a rational linear combination of monomials. Three
//! gradings matter throughout:
//!
//! * **degree** — number of derivative factors counted with multiplicity,
//! * **order** — the largest derivative order among the factors,
//! * **total order** — Σ exponent · order over the factors.
//!
//! A `k`-th order differential form has every monomial of degree `k` and
//! total order `k`. Spatial differentiation raises total order by one and
//! preserves degree; the heat-flow derivative `d/dt = (1/2)∇²` applied
//! factorwise raises total order by two.
//!
//! All coefficients are exact rationals. Monomial comparison follows the
//! graded-by-position convention used by the constraint pipeline: two
//! derivatives compare at the highest coordinate where their multi-indices
//! differ, and two monomials compare at the greatest derivative where their
//! exponents differ.

mod derivative;
mod elim;
mod form;
mod monomial;
mod text;

pub use derivative::Derivative;
pub use elim::{gaussian_eliminate, reduce_against, EliminationBasis, NaturalOrder, TermOrder};
pub use form::DiffForm;
pub use monomial::Monomial;
pub use text::{parse_diff_form, ParseError};

/// Exact rational coefficient type used across the whole pipeline.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for the rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}
