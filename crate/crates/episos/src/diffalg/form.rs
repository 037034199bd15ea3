use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Derivative, Monomial, Rat};

/// A finite rational linear combination of monomials.
///
/// Zero coefficients are never stored; the zero form has an empty term map
/// but still remembers its ambient dimension.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiffForm {
    dimension: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl DiffForm {
    pub fn zero(n: usize) -> Self {
        DiffForm {
            dimension: n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(n: usize, terms: Vec<(Monomial, Rat)>) -> Self {
        let mut f = DiffForm::zero(n);
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    }

    /// Single-monomial form.
    pub fn monomial(m: Monomial, coef: Rat) -> Self {
        let mut f = DiffForm::zero(m.dimension());
        f.add_term(m, coef);
        f
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Terms in descending monomial order (leading term first).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter().rev()
    }

    /// Greatest monomial present, if any.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        debug_assert_eq!(m.dimension(), self.dimension);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, c: &Rat) -> DiffForm {
        if c.is_zero() {
            return DiffForm::zero(self.dimension);
        }
        DiffForm {
            dimension: self.dimension,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    /// Multiply by a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> DiffForm {
        DiffForm {
            dimension: self.dimension,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Exact spatial partial derivative: the Leibniz rule over every
    /// monomial, each factor's multi-index incremented at `coord`.
    pub fn differentiate(&self, coord: usize) -> DiffForm {
        assert!(coord < self.dimension, "coordinate out of range");
        let mut out = DiffForm::zero(self.dimension);
        for (m, c) in &self.terms {
            for (v, e) in m.factors() {
                let rest = m.div_derivative(v).expect("factor divides");
                let raised = rest.mul_derivative(&v.raised(coord), 1);
                out.add_term(raised, c * Rat::from_integer((*e).into()));
            }
        }
        out
    }

    /// Heat-flow time derivative `d/dt = (1/2) Σ_i ∂²/∂x_i²` applied to
    /// every derivative factor via the Leibniz rule. Degree is preserved
    /// and, on a homogeneous form, total order rises by exactly 2.
    pub fn heat_time_derivative(&self) -> DiffForm {
        let half = Rat::new(1.into(), 2.into());
        let mut out = DiffForm::zero(self.dimension);
        for (m, c) in &self.terms {
            for (v, e) in m.factors() {
                let rest = m.div_derivative(v).expect("factor divides");
                let scale = &half * c * Rat::from_integer((*e).into());
                for coord in 0..self.dimension {
                    let lifted = rest.mul_derivative(&v.raised(coord).raised(coord), 1);
                    out.add_term(lifted, scale.clone());
                }
            }
        }
        out
    }

    /// True iff every monomial has degree `k` and total order `k`.
    pub fn is_differential_form_of_order(&self, k: u32) -> bool {
        self.terms
            .keys()
            .all(|m| m.degree() == k && m.total_order() == k)
    }

    /// True iff every monomial shares the given degree and total order.
    pub fn is_homogeneous(&self, degree: u32, total_order: u32) -> bool {
        self.terms
            .keys()
            .all(|m| m.degree() == degree && m.total_order() == total_order)
    }

    /// Re-map coordinates of every monomial into dimension `n`
    /// (instantiation of symbolic index letters).
    pub fn remap(&self, assignment: &[usize], n: usize) -> DiffForm {
        let mut out = DiffForm::zero(n);
        for (m, c) in &self.terms {
            out.add_term(m.remap(assignment, n), c.clone());
        }
        out
    }

    /// Divide every coefficient so the form becomes primitive: integer
    /// coefficients with no common factor and a positive leading
    /// coefficient. Returns the scalar the original form is a multiple of.
    pub fn normalize_primitive(&mut self) -> Rat {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.terms.is_empty() {
            return Rat::one();
        }
        let mut den_lcm = BigInt::from(1);
        let mut num_gcd = BigInt::from(0);
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut scale = Rat::new(den_lcm, num_gcd);
        let lead = self.terms.values().next_back().unwrap();
        if (lead * &scale) < Rat::zero() {
            scale = -scale;
        }
        for c in self.terms.values_mut() {
            *c = &*c * &scale;
        }
        Rat::one() / scale
    }

    /// Primitive copy (see [`Self::normalize_primitive`]).
    pub fn to_primitive(&self) -> DiffForm {
        let mut f = self.clone();
        f.normalize_primitive();
        f
    }
}

impl Add for &DiffForm {
    type Output = DiffForm;
    fn add(self, rhs: &DiffForm) -> DiffForm {
        debug_assert_eq!(self.dimension, rhs.dimension);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &DiffForm {
    type Output = DiffForm;
    fn sub(self, rhs: &DiffForm) -> DiffForm {
        debug_assert_eq!(self.dimension, rhs.dimension);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &DiffForm {
    type Output = DiffForm;
    fn neg(self) -> DiffForm {
        self.scaled(&-Rat::one())
    }
}

impl Mul for &DiffForm {
    type Output = DiffForm;
    fn mul(self, rhs: &DiffForm) -> DiffForm {
        debug_assert_eq!(self.dimension, rhs.dimension);
        let mut out = DiffForm::zero(self.dimension);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Debug for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::render_diff_form(self))
    }
}

/// Convenience constructors used heavily in tests and golden transcriptions.
impl DiffForm {
    /// One-dimensional monomial `c * Π f_ord^exp` from `(order, exponent)`
    /// pairs; `f_0` is the density.
    pub fn term1(coef: Rat, pairs: &[(u32, u32)]) -> DiffForm {
        let m = Monomial::new(
            1,
            pairs
                .iter()
                .map(|&(ord, e)| (Derivative::new(vec![ord]), e))
                .collect(),
        );
        DiffForm::monomial(m, coef)
    }

    /// n-dimensional monomial from `(multi-index, exponent)` pairs.
    pub fn term(n: usize, coef: Rat, pairs: &[(&[u32], u32)]) -> DiffForm {
        let m = Monomial::new(
            n,
            pairs
                .iter()
                .map(|&(mi, e)| {
                    assert_eq!(mi.len(), n);
                    (Derivative::new(mi.to_vec()), e)
                })
                .collect(),
        );
        DiffForm::monomial(m, coef)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;

    fn f1(pairs: &[(u32, u32)], c: Rat) -> DiffForm {
        DiffForm::term1(c, pairs)
    }

    #[test]
    fn differentiate_power_rule() {
        // d/dx f1^2 = 2 f1 f2
        let form = f1(&[(1, 2)], rat(1));
        let got = form.differentiate(0);
        assert_eq!(got, f1(&[(1, 1), (2, 1)], rat(2)));
    }

    #[test]
    fn differentiate_product_rule() {
        // d/dx (f * f2) = f1 f2 + f f3
        let form = f1(&[(0, 1), (2, 1)], rat(1));
        let got = form.differentiate(0);
        let want = &f1(&[(1, 1), (2, 1)], rat(1)) + &f1(&[(0, 1), (3, 1)], rat(1));
        assert_eq!(got, want);
    }

    #[test]
    fn differentiate_fourth_power() {
        // d/dx f1^4 = 4 f1^3 f2
        let form = f1(&[(1, 4)], rat(1));
        assert_eq!(form.differentiate(0), f1(&[(1, 3), (2, 1)], rat(4)));
    }

    #[test]
    fn heat_derivative_single_factor() {
        // d f1/dt = (1/2) f3 in n = 1
        let form = f1(&[(1, 1)], rat(1));
        assert_eq!(form.heat_time_derivative(), f1(&[(3, 1)], ratio(1, 2)));
    }

    #[test]
    fn heat_derivative_leibniz() {
        // d (f1^2)/dt = f1 f3
        let form = f1(&[(1, 2)], rat(1));
        assert_eq!(
            form.heat_time_derivative(),
            f1(&[(1, 1), (3, 1)], rat(1))
        );
    }

    #[test]
    fn heat_derivative_dimension_two() {
        // d(dp/dx1)/dt = 1/2 (d^3p/dx1^3 + d^3p/dx1 dx2^2)
        let form = DiffForm::term(2, rat(1), &[(&[1, 0], 1)]);
        let want = &DiffForm::term(2, ratio(1, 2), &[(&[3, 0], 1)])
            + &DiffForm::term(2, ratio(1, 2), &[(&[1, 2], 1)]);
        assert_eq!(form.heat_time_derivative(), want);
    }

    #[test]
    fn grading_conservation() {
        // degree fixed, total order +1 under d/dx; +2 under d/dt
        let form = &f1(&[(0, 2), (3, 1)], rat(3)) + &f1(&[(1, 1), (2, 1), (0, 1)], ratio(-1, 2));
        assert!(form.is_homogeneous(3, 3));
        assert!(form.differentiate(0).is_homogeneous(3, 4));
        assert!(form.heat_time_derivative().is_homogeneous(3, 5));
    }

    #[test]
    fn primitive_normalization() {
        let mut form = &f1(&[(1, 2)], ratio(-2, 3)) + &f1(&[(0, 1), (2, 1)], ratio(-4, 3));
        // leading monomial is f f2 (has f2 factor) -> coefficient -4/3; sign flips
        let scale = form.normalize_primitive();
        assert_eq!(form, &f1(&[(1, 2)], rat(1)) + &f1(&[(0, 1), (2, 1)], rat(2)));
        assert_eq!(scale, ratio(-2, 3));
    }
}
