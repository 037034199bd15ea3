//! Heat-flow lifting of constraints.
//!
//! If `∫ R / p^{2m−1} dx = 0` for all `t`, differentiating under the
//! integral and applying the heat equation gives the order-`(m+1)`
//! constraint
//!
//! ```text
//! R₁ = p² dR/dt − (2m−1) R p (dp/dt)
//! ```
//!
//! of degree `2m+2` and total order `2m+2`. At the family level the
//! Laplacian sum contributes one fresh summed letter.

use crate::diffalg::{rat, ratio, Derivative, DiffForm, Monomial};

use super::{Constraint, Family, Provenance};

/// Concrete lift: `R₁ = p² dR/dt − (2m−1) R p dp/dt`.
pub fn lift_constraint(c: &Constraint) -> Constraint {
    let n = c.form.dimension();
    let p = DiffForm::monomial(Monomial::density_power(n, 1), rat(1));
    let p2 = DiffForm::monomial(Monomial::density_power(n, 2), rat(1));
    let dp_dt = p.heat_time_derivative();
    let scale = rat(2 * i64::from(c.m) - 1);
    let lifted = &(&p2 * &c.form.heat_time_derivative()) - &(&(&c.form * &p) * &dp_dt).scaled(&scale);
    Constraint {
        form: lifted,
        provenance: Provenance::Lift {
            parent: Box::new(c.provenance.clone()),
        },
        m: c.m + 1,
    }
}

/// Family lift: the template gains one summed letter `c` and becomes
/// `(1/2)[p² ∂²_c(template) − (2m−1) template · p · ∂²p/∂x_c²]`, where
/// `∂²_c` raises one factor at a time by two in the new letter.
pub fn lift_family(fam: &Family) -> Family {
    let k = fam.letters();
    let kk = k + 1;
    let embed: Vec<usize> = (0..k).collect();
    let ext = fam.template.remap(&embed, kk);

    // Per-factor double bump in the new coordinate.
    let mut bumped = DiffForm::zero(kk);
    for (mono, coef) in ext.terms() {
        for (v, e) in mono.factors() {
            let rest = mono.div_derivative(v).expect("factor divides");
            let lifted = rest.mul_derivative(&v.raised(k).raised(k), 1);
            bumped.add_term(lifted, coef * rat(i64::from(*e)));
        }
    }

    let p2 = DiffForm::monomial(Monomial::density_power(kk, 2), rat(1));
    let p_fcc = DiffForm::monomial(
        Monomial::new(
            kk,
            vec![
                (Derivative::density(kk), 1),
                (Derivative::density(kk).raised(k).raised(k), 1),
            ],
        ),
        rat(1),
    );
    let scale = rat(2 * i64::from(fam.m) - 1);
    let template = (&(&p2 * &bumped) - &(&ext * &p_fcc).scaled(&scale)).scaled(&ratio(1, 2));

    Family {
        template,
        free: fam.free,
        summed: fam.summed + 1,
        provenance: Provenance::Lift {
            parent: Box::new(fam.provenance.clone()),
        },
        m: fam.m + 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifting_zero_gives_zero() {
        let c = Constraint {
            form: DiffForm::zero(2),
            provenance: Provenance::Handwritten { label: "z".into() },
            m: 2,
        };
        assert!(lift_constraint(&c).form.is_zero());
    }

    #[test]
    fn lift_raises_both_gradings_by_two() {
        let c = Constraint {
            form: &DiffForm::term1(rat(3), &[(0, 2), (1, 1), (3, 1)])
                + &DiffForm::term1(rat(-1), &[(0, 1), (1, 2), (2, 1)]),
            provenance: Provenance::Handwritten { label: "r".into() },
            m: 2,
        };
        let lifted = lift_constraint(&c);
        assert_eq!(lifted.m, 3);
        assert!(lifted.form.is_homogeneous(6, 6));
    }

    #[test]
    fn family_lift_commutes_with_instantiation() {
        // instantiate-then-lift equals lift-then-instantiate
        let fam = Family {
            template: &DiffForm::term(2, rat(1), &[(&[0, 0], 2), (&[1, 2], 1), (&[1, 0], 1)])
                + &DiffForm::term(2, rat(-1), &[(&[0, 0], 1), (&[0, 2], 1), (&[1, 0], 2)]),
            free: 0,
            summed: 2,
            provenance: Provenance::Handwritten { label: "t".into() },
            m: 2,
        };
        for n in 1..=3usize {
            let direct: Vec<DiffForm> = fam
                .instantiate(n)
                .iter()
                .map(|c| lift_constraint(c).form.clone())
                .collect();
            let via_family: Vec<DiffForm> = lift_family(&fam)
                .instantiate(n)
                .iter()
                .map(|c| c.form.clone())
                .collect();
            assert_eq!(direct, via_family);
        }
    }
}
