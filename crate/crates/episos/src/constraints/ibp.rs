//! Integration-by-parts constraints.
//!
//! Take a monomial `M` of degree `2m` and total order `2m`, pick a factor
//! `v` of positive order (the pivot) and a coordinate `ℓ` the pivot is
//! differentiated in. Peeling one `∂/∂x_ℓ` off the pivot and integrating
//! by parts (the boundary term vanishes) yields
//!
//! ```text
//! o = 1:  R = M + p ∂_ℓM₁ − (2m−1) M₁ ∂_ℓp,            M = v·M₁
//! o > 1:  R = M + v′ (p ∂_ℓM₂ − (2m−2) M₂ ∂_ℓp),       M₁ = p·M₂, v′ = v with ∂_ℓ removed
//! ```
//!
//! a constraint of the same degree and total order. Pivots whose result
//! would leave the order-`2m−1` derivative alphabet are rejected, as are
//! `o > 1` pivots when `M₁` has no density factor to absorb.

use thiserror::Error;

use crate::diffalg::{rat, Derivative, DiffForm, Monomial};

use super::{Constraint, Provenance};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IbpError {
    #[error("pivot has order zero")]
    OrderZeroPivot,
    #[error("pivot is not a factor of the monomial")]
    PivotNotFactor,
    #[error("pivot is not differentiated in coordinate {0}")]
    CoordNotInPivot(usize),
    #[error("no density factor to absorb a higher-order pivot")]
    NoDensityFactor,
    #[error("result leaves the order-{0} derivative alphabet")]
    OrderCapExceeded(u32),
}

/// All monomials over derivatives of order at most `max_order` in
/// dimension `n` with the exact degree and total order given, in
/// descending monomial order.
pub fn enumerate_monomials(
    n: usize,
    max_order: u32,
    degree: u32,
    total_order: u32,
) -> Vec<Monomial> {
    // Alphabet of positive-order derivatives, descending.
    let mut alphabet = Vec::new();
    for ord in 1..=max_order.min(total_order) {
        collect_derivatives(n, ord, &mut alphabet);
    }
    alphabet.sort_by(|a, b| b.cmp(a));

    let mut out = Vec::new();
    let mut stack: Vec<(Derivative, u32)> = Vec::new();
    fn recurse(
        alphabet: &[Derivative],
        idx: usize,
        degree_left: u32,
        order_left: u32,
        n: usize,
        stack: &mut Vec<(Derivative, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if order_left == 0 {
            // pad with density factors
            let mut factors = stack.clone();
            if degree_left > 0 {
                factors.push((Derivative::density(n), degree_left));
            }
            out.push(Monomial::new(n, factors));
            return;
        }
        if idx == alphabet.len() || degree_left == 0 {
            return;
        }
        let v = &alphabet[idx];
        let ord = v.order();
        let max_e = (order_left / ord).min(degree_left);
        for e in (0..=max_e).rev() {
            if e > 0 {
                stack.push((v.clone(), e));
            }
            recurse(
                alphabet,
                idx + 1,
                degree_left - e,
                order_left - e * ord,
                n,
                stack,
                out,
            );
            if e > 0 {
                stack.pop();
            }
        }
    }
    recurse(
        &alphabet,
        0,
        degree,
        total_order,
        n,
        &mut stack,
        &mut out,
    );
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

fn collect_derivatives(n: usize, order: u32, out: &mut Vec<Derivative>) {
    fn rec(n: usize, slot: usize, left: u32, mi: &mut Vec<u32>, out: &mut Vec<Derivative>) {
        if slot == n - 1 {
            mi.push(left);
            out.push(Derivative::new(mi.clone()));
            mi.pop();
            return;
        }
        for h in 0..=left {
            mi.push(h);
            rec(n, slot + 1, left - h, mi, out);
            mi.pop();
        }
    }
    let mut mi = Vec::with_capacity(n);
    rec(n, 0, order, &mut mi, out);
}

/// Largest derivative order appearing in a form.
fn max_factor_order(form: &DiffForm) -> u32 {
    form.terms().map(|(m, _)| m.order()).max().unwrap_or(0)
}

/// One integration-by-parts constraint from `(M, pivot, coord)`.
pub fn ibp_constraint(
    m: u32,
    mono: &Monomial,
    pivot: &Derivative,
    coord: usize,
) -> Result<DiffForm, IbpError> {
    ibp_constraint_capped(m, mono, pivot, coord, true)
}

/// As [`ibp_constraint`], optionally admitting results that leave the
/// order-`(2m−1)` alphabet.
pub fn ibp_constraint_capped(
    m: u32,
    mono: &Monomial,
    pivot: &Derivative,
    coord: usize,
    enforce_cap: bool,
) -> Result<DiffForm, IbpError> {
    let o = pivot.order();
    if o == 0 {
        return Err(IbpError::OrderZeroPivot);
    }
    if pivot.multi_index()[coord] == 0 {
        return Err(IbpError::CoordNotInPivot(coord));
    }
    let m1 = mono
        .div_derivative(pivot)
        .ok_or(IbpError::PivotNotFactor)?;
    let n = mono.dimension();
    let p = Derivative::density(n);
    let dp = DiffForm::monomial(Monomial::new(n, vec![(p.clone().raised(coord), 1)]), rat(1));
    let p_form = DiffForm::monomial(Monomial::density_power(n, 1), rat(1));

    let r = if o == 1 {
        // R = M + p ∂_ℓM₁ − (2m−1) M₁ ∂_ℓp
        let m1_form = DiffForm::monomial(m1.clone(), rat(1));
        let d_m1 = m1_form.differentiate(coord);
        let lead = DiffForm::monomial(mono.clone(), rat(1));
        &(&lead + &(&p_form * &d_m1))
            - &(&m1_form * &dp).scaled(&rat(2 * i64::from(m) - 1))
    } else {
        let m2 = m1
            .div_derivative(&p)
            .ok_or(IbpError::NoDensityFactor)?;
        let vp = pivot.lowered(coord);
        let m2_form = DiffForm::monomial(m2, rat(1));
        let bracket = &(&p_form * &m2_form.differentiate(coord))
            - &(&m2_form * &dp).scaled(&rat(2 * i64::from(m) - 2));
        let lead = DiffForm::monomial(mono.clone(), rat(1));
        &lead + &bracket.mul_monomial(&Monomial::new(n, vec![(vp, 1)]))
    };

    let cap = 2 * m - 1;
    if enforce_cap && max_factor_order(&r) > cap {
        return Err(IbpError::OrderCapExceeded(cap));
    }
    Ok(r)
}

/// The full integration-by-parts pool: every monomial of degree `2m` and
/// total order `2m` over the order-`(2m−1)` alphabet in dimension `n`,
/// every admissible pivot factor and peel coordinate, deduplicated up to
/// scalar multiple.
pub fn ibp_pool(m: u32, n: usize) -> Vec<Constraint> {
    let mut raw = Vec::new();
    for mono in enumerate_monomials(n, 2 * m - 1, 2 * m, 2 * m) {
        let pivots: Vec<Derivative> = mono
            .positive_order_factors()
            .map(|(d, _)| d.clone())
            .collect();
        for pivot in pivots {
            for coord in 0..n {
                if pivot.multi_index()[coord] == 0 {
                    continue;
                }
                if let Ok(form) = ibp_constraint(m, &mono, &pivot, coord) {
                    raw.push(Constraint {
                        form,
                        provenance: Provenance::Ibp {
                            monomial: DiffForm::monomial(mono.clone(), rat(1)).to_string(),
                            pivot: pivot.multi_index().to_vec(),
                            coord,
                        },
                        m,
                    });
                }
            }
        }
    }
    super::dedup(raw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffalg::{rat, DiffForm};

    fn t1(c: i64, pairs: &[(u32, u32)]) -> DiffForm {
        DiffForm::term1(rat(c), pairs)
    }

    fn mono1(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::new(
            1,
            pairs
                .iter()
                .map(|&(ord, e)| (Derivative::new(vec![ord]), e))
                .collect(),
        )
    }

    #[test]
    fn worked_sixth_order_example() {
        // M = f f₂ f₁⁴, pivot f₂ → R = 5 f f₁⁴ f₂ − 4 f₁⁶
        let mono = mono1(&[(0, 1), (2, 1), (1, 4)]);
        let r = ibp_constraint(3, &mono, &Derivative::new(vec![2]), 0).unwrap();
        let want = &t1(5, &[(0, 1), (1, 4), (2, 1)]) + &t1(-4, &[(1, 6)]);
        assert_eq!(r, want);
    }

    #[test]
    fn two_index_worked_example() {
        // M = p² (∂p/∂x_a)(∂³p/∂x_a²∂x_b), pivot the third-order factor
        // peeled in x_a → p²(∂³p/∂²x_a∂x_b)(∂p/∂x_a)
        //   + (∂²p/∂x_a∂x_b)(p²∂²p/∂²x_a − p(∂p/∂x_a)²)
        let n = 2;
        let mono = Monomial::new(
            n,
            vec![
                (Derivative::density(n), 2),
                (Derivative::new(vec![1, 0]), 1),
                (Derivative::new(vec![2, 1]), 1),
            ],
        );
        let r = ibp_constraint(2, &mono, &Derivative::new(vec![2, 1]), 0).unwrap();
        let want = [
            DiffForm::term(n, rat(1), &[(&[0, 0], 2), (&[1, 0], 1), (&[2, 1], 1)]),
            DiffForm::term(n, rat(1), &[(&[0, 0], 2), (&[1, 1], 1), (&[2, 0], 1)]),
            DiffForm::term(n, rat(-1), &[(&[0, 0], 1), (&[1, 1], 1), (&[1, 0], 2)]),
        ]
        .iter()
        .fold(DiffForm::zero(n), |acc, t| &acc + t);
        assert_eq!(r, want);
    }

    #[test]
    fn pure_boundary_monomial_keeps_only_its_lead() {
        // M = p^{2m−1} ∂²p/∂x²: the correction bracket cancels term by
        // term, leaving R = M (whose integral against 1/p^{2m−1} is a
        // plain total derivative).
        let mono = mono1(&[(0, 5), (2, 1)]);
        let r = ibp_constraint(3, &mono, &Derivative::new(vec![2]), 0).unwrap();
        assert_eq!(r, t1(1, &[(0, 5), (2, 1)]));
    }

    #[test]
    fn order_cap_rejects_runaway_pivot() {
        // M = f⁴f₁f₅ with pivot f₁ would create f₆ at m = 3
        let mono = mono1(&[(0, 4), (1, 1), (5, 1)]);
        let err = ibp_constraint(3, &mono, &Derivative::new(vec![1]), 0).unwrap_err();
        assert_eq!(err, IbpError::OrderCapExceeded(5));
    }

    #[test]
    fn enumerate_monomials_one_dim_third_order() {
        // degree 6, total order 6 over f₀…f₅: the ten order partitions
        let monos = enumerate_monomials(1, 5, 6, 6);
        assert_eq!(monos.len(), 10);
        // all homogeneous, descending, unique
        for m in &monos {
            assert_eq!(m.degree(), 6);
            assert_eq!(m.total_order(), 6);
        }
        for w in monos.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn enumerate_monomials_zero_total_order() {
        let monos = enumerate_monomials(1, 5, 3, 0);
        assert_eq!(monos.len(), 1);
        assert_eq!(monos[0], Monomial::density_power(1, 3));
    }

    #[test]
    fn third_order_univariate_pool_is_the_six() {
        let pool = ibp_pool(3, 1);
        assert_eq!(pool.len(), 6);
        let expected: Vec<DiffForm> = vec![
            // R1..R6 of the sixth-order univariate family
            &t1(5, &[(0, 1), (1, 4), (2, 1)]) + &t1(-4, &[(1, 6)]),
            &(&t1(2, &[(0, 3), (1, 1), (2, 1), (3, 1)]) + &t1(1, &[(0, 3), (2, 3)]))
                + &t1(-2, &[(0, 2), (1, 2), (2, 2)]),
            &(&t1(1, &[(0, 4), (1, 1), (5, 1)]) + &t1(1, &[(0, 4), (2, 1), (4, 1)]))
                + &t1(-1, &[(0, 3), (1, 2), (4, 1)]),
            &(&t1(1, &[(0, 3), (1, 2), (4, 1)]) + &t1(2, &[(0, 3), (1, 1), (2, 1), (3, 1)]))
                + &t1(-2, &[(0, 2), (1, 3), (3, 1)]),
            &(&t1(1, &[(0, 2), (1, 3), (3, 1)]) + &t1(3, &[(0, 2), (1, 2), (2, 2)]))
                + &t1(-3, &[(0, 1), (1, 4), (2, 1)]),
            &(&t1(1, &[(0, 4), (2, 1), (4, 1)]) + &t1(1, &[(0, 4), (3, 2)]))
                + &t1(-1, &[(0, 3), (1, 1), (2, 1), (3, 1)]),
        ];
        for want in &expected {
            let want = want.to_primitive();
            assert!(
                pool.iter().any(|c| c.form.to_primitive() == want),
                "missing constraint {want}"
            );
        }
    }

    #[test]
    fn second_order_univariate_pool() {
        // m = 2, n = 1: exactly the two relations
        let pool = ibp_pool(2, 1);
        assert_eq!(pool.len(), 2);
        let r1 = &(&t1(1, &[(0, 2), (1, 1), (3, 1)]) + &t1(1, &[(0, 2), (2, 2)]))
            + &t1(-1, &[(0, 1), (1, 2), (2, 1)]);
        let r2 = &t1(3, &[(0, 1), (1, 2), (2, 1)]) + &t1(-2, &[(1, 4)]);
        for want in [r1, r2] {
            let want = want.to_primitive();
            assert!(pool.iter().any(|c| c.form.to_primitive() == want));
        }
    }
}
