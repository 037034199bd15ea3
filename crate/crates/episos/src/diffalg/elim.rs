//! Rational Gaussian elimination over differential forms, treating
//! monomials as the variables.
//!
//! Rows are kept fully inter-reduced (reduced row echelon form) and
//! normalized to primitive integer coefficients with a positive leading
//! coefficient, so the output basis is the canonical RREF of the input
//! span: deterministic and independent of input order. The monomial
//! ordering is pluggable; the quadratic/non-quadratic layered order of the
//! reduction stage is one instance.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_traits::Zero;

use super::{DiffForm, Monomial, Rat};

/// A total order on monomials used to pick pivots.
pub trait TermOrder {
    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering;
}

/// The natural monomial order.
#[derive(Clone, Copy, Default)]
pub struct NaturalOrder;

impl TermOrder for NaturalOrder {
    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.cmp(b)
    }
}

/// An inter-reduced row basis under a chosen term order.
pub struct EliminationBasis<O: TermOrder> {
    order: O,
    rows: Vec<DiffForm>,
    leads: HashMap<Monomial, usize>,
    back_substitute: bool,
}

impl<O: TermOrder> EliminationBasis<O> {
    pub fn new(order: O) -> Self {
        EliminationBasis {
            order,
            rows: Vec::new(),
            leads: HashMap::new(),
            back_substitute: true,
        }
    }

    /// Forward-only variant: cheaper when only the rank is needed.
    pub fn forward_only(order: O) -> Self {
        EliminationBasis {
            order,
            rows: Vec::new(),
            leads: HashMap::new(),
            back_substitute: false,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows in descending leading-monomial order.
    pub fn sorted_rows(&self) -> Vec<DiffForm> {
        let mut rows = self.rows.clone();
        rows.sort_by(|a, b| {
            let la = self.leading(a).expect("basis rows are nonzero");
            let lb = self.leading(b).expect("basis rows are nonzero");
            self.order.cmp(lb, la)
        });
        rows
    }

    pub fn rows(&self) -> &[DiffForm] {
        &self.rows
    }

    /// Greatest monomial of `f` under this basis' order.
    pub fn leading<'f>(&self, f: &'f DiffForm) -> Option<&'f Monomial> {
        f.terms().map(|(m, _)| m).max_by(|a, b| self.order.cmp(a, b))
    }

    /// Reduce `f` against the basis. When `combination` is given, it
    /// accumulates `(row index, multiplier)` pairs such that
    /// `f = residue + Σ multiplier · row`.
    pub fn reduce(&self, f: &DiffForm, mut combination: Option<&mut Vec<(usize, Rat)>>) -> DiffForm {
        let mut r = f.clone();
        loop {
            // Greatest monomial of r that is some row's lead.
            let target = r
                .terms()
                .filter(|(m, _)| self.leads.contains_key(*m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .max_by(|a, b| self.order.cmp(&a.0, &b.0));
            let Some((m, c)) = target else { break };
            let idx = self.leads[&m];
            let row = &self.rows[idx];
            let lead_coef = row.coefficient(&m);
            let mult = &c / &lead_coef;
            r = &r - &row.scaled(&mult);
            debug_assert!(r.coefficient(&m).is_zero());
            if let Some(comb) = combination.as_deref_mut() {
                comb.push((idx, mult));
            }
        }
        r
    }

    /// Insert a form, reducing it first. Returns true when the rank grew.
    pub fn insert(&mut self, f: &DiffForm) -> bool {
        let mut r = self.reduce(f, None);
        if r.is_zero() {
            return false;
        }
        r.normalize_primitive();
        let lead = self.leading(&r).expect("nonzero").clone();
        if self.back_substitute {
            let lead_coef = r.coefficient(&lead);
            for row in self.rows.iter_mut() {
                let c = row.coefficient(&lead);
                if !c.is_zero() {
                    *row = &*row - &r.scaled(&(&c / &lead_coef));
                    row.normalize_primitive();
                }
            }
        }
        let idx = self.rows.len();
        self.rows.push(r);
        self.leads.insert(lead, idx);
        true
    }
}

/// Row-reduce a family of forms to the canonical basis of their span.
///
/// Every input reduces to zero against the output, leading monomials are
/// strictly decreasing, and rows are primitive.
pub fn gaussian_eliminate<O: TermOrder>(forms: &[DiffForm], order: O) -> Vec<DiffForm>
where
    O: Clone,
{
    let mut basis = EliminationBasis::new(order);
    for f in forms {
        basis.insert(f);
    }
    basis.sorted_rows()
}

/// Reduce `form` against an already-computed row basis, returning the
/// residue and the combination over the rows (indexed as given).
pub fn reduce_against(form: &DiffForm, rows: &[DiffForm]) -> (DiffForm, Vec<(usize, Rat)>) {
    let mut basis = EliminationBasis::new(NaturalOrder);
    for row in rows {
        let grew = basis.insert(row);
        assert!(grew, "reduction basis rows must be independent");
    }
    // Row order inside the basis equals the given order, so indices line up.
    let mut comb = Vec::new();
    let residue = basis.reduce(form, Some(&mut comb));
    let mut merged: HashMap<usize, Rat> = HashMap::new();
    for (i, c) in comb {
        *merged.entry(i).or_insert_with(Rat::zero) += c;
    }
    let mut comb: Vec<(usize, Rat)> = merged
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    comb.sort_by_key(|(i, _)| *i);
    (residue, comb)
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;

    fn f1(c: Rat, pairs: &[(u32, u32)]) -> DiffForm {
        DiffForm::term1(c, pairs)
    }

    #[test]
    fn scalar_duplicates_collapse() {
        let r = &f1(rat(5), &[(0, 1), (1, 4), (2, 1)]) + &f1(rat(-4), &[(1, 6)]);
        let rows = gaussian_eliminate(&[r.clone(), r.scaled(&rat(2))], NaturalOrder);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0], r); // already primitive
    }

    #[test]
    fn elimination_is_sound() {
        let a = &f1(rat(1), &[(2, 2)]) + &f1(rat(1), &[(1, 1), (3, 1)]);
        let b = &f1(rat(2), &[(2, 2)]) + &f1(rat(1), &[(0, 1), (4, 1)]);
        let c = &a + &b.scaled(&ratio(3, 7));
        let rows = gaussian_eliminate(&[a.clone(), b.clone(), c.clone()], NaturalOrder);
        assert_eq!(rows.len(), 2);
        // every input reduces to zero against the output
        for input in [&a, &b, &c] {
            let (residue, _) = reduce_against(input, &rows);
            assert!(residue.is_zero());
        }
    }

    #[test]
    fn combination_reconstructs_input() {
        let a = &f1(rat(1), &[(2, 2)]) + &f1(rat(1), &[(1, 1), (3, 1)]);
        let b = &f1(rat(2), &[(2, 2)]) + &f1(rat(1), &[(0, 1), (4, 1)]);
        let rows = gaussian_eliminate(&[a.clone(), b.clone()], NaturalOrder);
        let target = &a.scaled(&ratio(-2, 5)) + &b.scaled(&rat(3));
        let (residue, comb) = reduce_against(&target, &rows);
        assert!(residue.is_zero());
        let mut rebuilt = DiffForm::zero(1);
        for (i, c) in &comb {
            rebuilt = &rebuilt + &rows[*i].scaled(c);
        }
        assert_eq!(rebuilt, target);
    }

    #[test]
    fn rref_is_input_order_independent() {
        let a = &f1(rat(1), &[(2, 2)]) + &f1(rat(1), &[(1, 1), (3, 1)]);
        let b = &f1(rat(2), &[(2, 2)]) + &f1(rat(1), &[(0, 1), (4, 1)]);
        let c = &a.scaled(&rat(4)) + &b.scaled(&rat(-1));
        let r1 = gaussian_eliminate(&[a.clone(), b.clone(), c.clone()], NaturalOrder);
        let r2 = gaussian_eliminate(&[c, b, a], NaturalOrder);
        assert_eq!(r1, r2);
    }
}
