//! Reduction to quadratic forms over the degree-`m` basis.
//!
//! The monomials of degree `m` and total order `m` become scalar
//! variables `m_i`. Every constraint is row-reduced under a layered order
//! in which any non-quadratic monomial outranks every quadratic one
//! (a product `m_i m_j`), splitting the pool into purely quadratic rows
//! `Ĉ₁` and rows with non-quadratic leads `Ĉ₂`. Intrinsic relations
//! `m_i m_j − m_k m_l` join `Ĉ₁`, and the target is freed of
//! non-quadratic monomials by eliminating against `Ĉ₂`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::constraints::{intrinsic_relations, Constraint, SuiteError};
use crate::diffalg::{
    gaussian_eliminate, rat, DiffForm, EliminationBasis, Monomial, Rat, TermOrder,
};

/// The ordered quadratic basis `m_1 > m_2 > …` for a problem instance.
#[derive(Debug, Clone)]
pub struct QuadBasis {
    elements: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    m: u32,
    n: usize,
}

impl QuadBasis {
    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn dimension(&self) -> usize {
        self.n
    }
}

/// Degree-`m`, total-order-`m` monomials in dimension `n`, descending.
pub fn quad_basis(m: u32, n: usize) -> QuadBasis {
    let elements = crate::constraints::enumerate_monomials(n, m, m, m);
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    QuadBasis {
        elements,
        index,
        m,
        n,
    }
}

/// A symmetric quadratic form over the basis, stored as coefficients of
/// the products `m_i m_j` for `i ≤ j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    entries: BTreeMap<(usize, usize), Rat>,
    dim: usize,
}

impl QuadraticForm {
    pub fn zero(dim: usize) -> Self {
        QuadraticForm {
            entries: BTreeMap::new(),
            dim,
        }
    }

    pub fn from_entries(dim: usize, entries: Vec<((usize, usize), Rat)>) -> Self {
        let mut q = QuadraticForm::zero(dim);
        for ((i, j), c) in entries {
            q.add(i, j, c);
        }
        q
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coefficient of the product `m_i m_j`.
    pub fn coefficient(&self, i: usize, j: usize) -> Rat {
        let key = (i.min(j), i.max(j));
        self.entries.get(&key).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&mut self, i: usize, j: usize, c: Rat) {
        if c.is_zero() {
            return;
        }
        let key = (i.min(j), i.max(j));
        let entry = self.entries.entry(key).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.entries.remove(&key);
        }
    }

    /// Product-coefficient entries, `(i ≤ j, coefficient of m_i m_j)`.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rat)> {
        self.entries.iter()
    }

    /// Symmetric-matrix entry: off-diagonal coefficients halved.
    pub fn matrix_entry(&self, i: usize, j: usize) -> Rat {
        let c = self.coefficient(i, j);
        if i == j {
            c
        } else {
            c / rat(2)
        }
    }

    pub fn scaled(&self, s: &Rat) -> QuadraticForm {
        if s.is_zero() {
            return QuadraticForm::zero(self.dim);
        }
        QuadraticForm {
            entries: self.entries.iter().map(|(k, c)| (*k, c * s)).collect(),
            dim: self.dim,
        }
    }

    pub fn add_assign(&mut self, other: &QuadraticForm, scale: &Rat) {
        for ((i, j), c) in &other.entries {
            self.add(*i, *j, c * scale);
        }
    }

    /// Expand back into the differential-form world.
    pub fn as_diff_form(&self, basis: &QuadBasis) -> DiffForm {
        let mut out = DiffForm::zero(basis.dimension());
        for ((i, j), c) in &self.entries {
            out.add_term(basis.elements[*i].mul(&basis.elements[*j]), c.clone());
        }
        out
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|((i, j), c)| {
                if i == j {
                    format!("{} m{}^2", c, i + 1)
                } else {
                    format!("{} m{} m{}", c, i + 1, j + 1)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Layered order: non-quadratic monomials outrank quadratic ones.
#[derive(Clone)]
pub struct LayeredOrder {
    quadratic: HashSet<Monomial>,
}

impl LayeredOrder {
    pub fn new(basis: &QuadBasis) -> Self {
        let mut quadratic = HashSet::new();
        for i in 0..basis.len() {
            for j in i..basis.len() {
                quadratic.insert(basis.elements[i].mul(&basis.elements[j]));
            }
        }
        LayeredOrder { quadratic }
    }

    pub fn is_quadratic(&self, m: &Monomial) -> bool {
        self.quadratic.contains(m)
    }
}

impl TermOrder for LayeredOrder {
    fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let ca = !self.is_quadratic(a);
        let cb = !self.is_quadratic(b);
        ca.cmp(&cb).then_with(|| a.cmp(b))
    }
}

/// Rewrite a form as a quadratic form where possible. Each factorable
/// monomial goes to its canonical factorization — greatest left factor,
/// then greatest right factor; the rest is returned as the residual.
pub fn quadratize(form: &DiffForm, basis: &QuadBasis) -> (QuadraticForm, DiffForm) {
    let mut quad = QuadraticForm::zero(basis.len());
    let mut residual = DiffForm::zero(form.dimension());
    'terms: for (mono, coef) in form.terms() {
        for i in 0..basis.len() {
            if let Some(rest) = mono.div(&basis.elements[i]) {
                if let Some(j) = basis.position(&rest) {
                    if j >= i {
                        quad.add(i, j, coef.clone());
                        continue 'terms;
                    }
                }
            }
        }
        residual.add_term(mono.clone(), coef.clone());
    }
    (quad, residual)
}

/// The split pool: purely quadratic rows (plus intrinsic relations) and
/// rows with non-quadratic leading monomials.
pub struct SplitSuite {
    pub basis: QuadBasis,
    /// Ĉ₁: quadratic rows from elimination, then intrinsic relations.
    pub quadratic: Vec<QuadraticForm>,
    /// How many of `quadratic` came from elimination (the rest are
    /// intrinsic relations).
    pub pre_intrinsic: usize,
    /// Ĉ₂: rows with non-quadratic leads, descending.
    pub nonquadratic: Vec<DiffForm>,
    /// Indices into `quadratic` forming a maximal independent subset.
    pub independent: Vec<usize>,
}

impl SplitSuite {
    pub fn n2(&self) -> usize {
        self.independent.len()
    }

    pub fn intrinsic_count(&self) -> usize {
        self.quadratic.len() - self.pre_intrinsic
    }

    /// The independent quadratic rows the SDP consumes.
    pub fn sdp_rows(&self) -> Vec<&QuadraticForm> {
        self.independent
            .iter()
            .map(|&i| &self.quadratic[i])
            .collect()
    }
}

/// Sparse rational row reduction over quadratic-entry keys, forward only.
struct QuadRank {
    rows: Vec<BTreeMap<(usize, usize), Rat>>,
    leads: HashMap<(usize, usize), usize>,
}

impl QuadRank {
    fn new() -> Self {
        QuadRank {
            rows: Vec::new(),
            leads: HashMap::new(),
        }
    }

    /// Returns true when the row grew the rank.
    fn insert(&mut self, q: &QuadraticForm) -> bool {
        let mut row: BTreeMap<(usize, usize), Rat> =
            q.entries.iter().map(|(k, c)| (*k, c.clone())).collect();
        loop {
            let Some((&lead, _)) = row.iter().next_back() else {
                return false;
            };
            let Some(&idx) = self.leads.get(&lead) else {
                break;
            };
            let pivot_row = self.rows[idx].clone();
            let factor = &row[&lead] / &pivot_row[&lead];
            for (k, c) in pivot_row.iter() {
                let entry = row.entry(*k).or_insert_with(Rat::zero);
                *entry -= c * &factor;
                if entry.is_zero() {
                    row.remove(k);
                }
            }
        }
        let lead = *row.iter().next_back().unwrap().0;
        self.leads.insert(lead, self.rows.len());
        self.rows.push(row);
        true
    }
}

/// Procedure steps 3 and 4: split the pool and append intrinsic relations.
pub fn split_suite(constraints: &[Constraint], basis: &QuadBasis) -> SplitSuite {
    let order = LayeredOrder::new(basis);
    let forms: Vec<DiffForm> = constraints.iter().map(|c| c.form.clone()).collect();
    let rows = gaussian_eliminate(&forms, order.clone());

    let mut quadratic = Vec::new();
    let mut nonquadratic = Vec::new();
    for row in rows {
        let lead = row
            .terms()
            .map(|(m, _)| m)
            .max_by(|a, b| order.cmp(a, b))
            .expect("rows are nonzero")
            .clone();
        if order.is_quadratic(&lead) {
            let (q, residual) = quadratize(&row, basis);
            debug_assert!(residual.is_zero(), "quadratic-lead row fully quadratic");
            quadratic.push(q);
        } else {
            nonquadratic.push(row);
        }
    }
    let pre_intrinsic = quadratic.len();
    for rel in intrinsic_relations(basis.elements()) {
        let mut q = QuadraticForm::zero(basis.len());
        q.add(rel.left.0, rel.left.1, rat(1));
        q.add(rel.right.0, rel.right.1, rat(-1));
        quadratic.push(q);
    }

    let mut rank = QuadRank::new();
    let mut independent = Vec::new();
    for (i, q) in quadratic.iter().enumerate() {
        if rank.insert(q) {
            independent.push(i);
        }
    }

    SplitSuite {
        basis: basis.clone(),
        quadratic,
        pre_intrinsic,
        nonquadratic,
        independent,
    }
}

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Suite(#[from] SuiteError),
    #[error("non-quadratic monomials survive elimination: {leftover}")]
    Step5Fail { leftover: String },
}

/// Procedure step 5: eliminate non-quadratic monomials from the target.
///
/// Returns the quadratic form `Ê` and the multipliers over the `Ĉ₂` rows
/// with `target = Σ comb · Ĉ₂ + Ê` exactly.
pub fn eliminate_target(
    target: &DiffForm,
    split: &SplitSuite,
) -> Result<(QuadraticForm, Vec<(usize, Rat)>), ReductionError> {
    let order = LayeredOrder::new(&split.basis);
    let mut basis = EliminationBasis::new(order);
    for row in &split.nonquadratic {
        let grew = basis.insert(row);
        debug_assert!(grew, "nonquadratic rows are independent");
    }
    let mut comb_raw = Vec::new();
    let residue = basis.reduce(target, Some(&mut comb_raw));
    let (quad, residual) = quadratize(&residue, &split.basis);
    if !residual.is_zero() {
        return Err(ReductionError::Step5Fail {
            leftover: residual.to_string().replace('\n', "; "),
        });
    }
    let mut merged: HashMap<usize, Rat> = HashMap::new();
    for (i, c) in comb_raw {
        *merged.entry(i).or_insert_with(Rat::zero) += c;
    }
    let mut comb: Vec<(usize, Rat)> = merged.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    comb.sort_by_key(|(i, _)| *i);
    Ok((quad, comb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constraints::constraint_suite;
    use crate::diffalg::ratio;
    use crate::targets::build_f;

    fn basis31() -> QuadBasis {
        quad_basis(3, 1)
    }

    #[test]
    fn basis_sizes_match_known_instances() {
        assert_eq!(quad_basis(3, 1).len(), 3);
        assert_eq!(quad_basis(4, 1).len(), 5);
        assert_eq!(quad_basis(5, 1).len(), 7);
        assert_eq!(quad_basis(3, 2).len(), 14);
        assert_eq!(quad_basis(2, 2).len(), 6);
    }

    #[test]
    fn univariate_third_order_basis_listing() {
        let b = basis31();
        let want = [
            DiffForm::term1(rat(1), &[(0, 2), (3, 1)]),
            DiffForm::term1(rat(1), &[(0, 1), (1, 1), (2, 1)]),
            DiffForm::term1(rat(1), &[(1, 3)]),
        ];
        for (i, w) in want.iter().enumerate() {
            let got = DiffForm::monomial(b.elements()[i].clone(), rat(1));
            assert_eq!(&got, w, "basis element {i}");
        }
    }

    #[test]
    fn quadratize_splits_target() {
        // F_{3,1} → (1/4)m₁² − (1/2)m₁m₂ + (1/4)m₂²
        //          + residual (1/4)f⁴f₁f₅ − (1/8)f³f₁²f₄
        let b = basis31();
        let f = build_f(3, 1).unwrap();
        let (q, residual) = quadratize(&f, &b);
        assert_eq!(q.coefficient(0, 0), ratio(1, 4));
        assert_eq!(q.coefficient(0, 1), ratio(-1, 2));
        assert_eq!(q.coefficient(1, 1), ratio(1, 4));
        assert_eq!(q.coefficient(2, 2), rat(0));
        let want_residual = &DiffForm::term1(ratio(1, 4), &[(0, 4), (1, 1), (5, 1)])
            + &DiffForm::term1(ratio(-1, 8), &[(0, 3), (1, 2), (4, 1)]);
        assert_eq!(residual, want_residual);
    }

    #[test]
    fn quadratize_without_factorization_is_all_residual() {
        // f f₁⁴ f₃ admits no split into two basis monomials
        let b = basis31();
        let f = DiffForm::term1(rat(1), &[(0, 1), (1, 4), (3, 1)]);
        let (q, residual) = quadratize(&f, &b);
        assert!(q.is_zero());
        assert_eq!(residual, f);
    }

    fn quad_proportional(a: &QuadraticForm, b: &QuadraticForm) -> bool {
        let ea: Vec<_> = a.entries().collect();
        let eb: Vec<_> = b.entries().collect();
        if ea.len() != eb.len() || ea.is_empty() != eb.is_empty() {
            return false;
        }
        if ea.is_empty() {
            return true;
        }
        if ea[0].0 != eb[0].0 {
            return false;
        }
        let scale = ea[0].1 / eb[0].1;
        ea.iter()
            .zip(eb.iter())
            .all(|((ka, ca), (kb, cb))| ka == kb && *ca == &(*cb * &scale))
    }

    #[test]
    fn univariate_third_order_split() {
        // Ĉ₁ = {5m₂m₃ − 4m₃², m₁m₃ + 3m₂² − (12/5)m₃²} up to scalar,
        // Ĉ₂ has 4 rows, no intrinsic relations, N₂ = 2.
        let b = basis31();
        let suite = constraint_suite(3, 1).unwrap();
        let split = split_suite(&suite, &b);
        assert_eq!(split.quadratic.len(), 2);
        assert_eq!(split.nonquadratic.len(), 4);
        assert_eq!(split.intrinsic_count(), 0);
        assert_eq!(split.n2(), 2);

        let want1 = QuadraticForm::from_entries(3, vec![((1, 2), rat(5)), ((2, 2), rat(-4))]);
        let want2 = QuadraticForm::from_entries(
            3,
            vec![((0, 2), rat(5)), ((1, 1), rat(15)), ((2, 2), rat(-12))],
        );
        for want in [&want1, &want2] {
            assert!(
                split.quadratic.iter().any(|g| quad_proportional(g, want)),
                "missing quadratic row {want}"
            );
        }
    }

    #[test]
    fn univariate_third_order_target_elimination() {
        // Ê = (1/2)m₁² − m₁m₂ − (1/2)m₂² + (3/5)m₃²
        let b = basis31();
        let suite = constraint_suite(3, 1).unwrap();
        let split = split_suite(&suite, &b);
        let f = build_f(3, 1).unwrap();
        let (e_hat, comb) = eliminate_target(&f, &split).unwrap();
        assert_eq!(e_hat.coefficient(0, 0), ratio(1, 2));
        assert_eq!(e_hat.coefficient(0, 1), rat(-1));
        assert_eq!(e_hat.coefficient(1, 1), ratio(-1, 2));
        assert_eq!(e_hat.coefficient(2, 2), ratio(3, 5));
        // exactness: target = Σ comb·C₂ + Ê as differential forms
        let mut rebuilt = e_hat.as_diff_form(&b);
        for (i, c) in &comb {
            rebuilt = &rebuilt + &split.nonquadratic[*i].scaled(c);
        }
        assert_eq!(rebuilt, f);
    }

    #[test]
    fn already_quadratic_target_is_identity() {
        let b = basis31();
        let suite = constraint_suite(3, 1).unwrap();
        let split = split_suite(&suite, &b);
        let target =
            &DiffForm::term1(rat(2), &[(0, 4), (3, 2)]) + &DiffForm::term1(rat(7), &[(1, 6)]);
        let (q, comb) = eliminate_target(&target, &split).unwrap();
        assert!(comb.is_empty());
        assert_eq!(q.coefficient(0, 0), rat(2));
        assert_eq!(q.coefficient(2, 2), rat(7));
    }

    #[test]
    fn fourth_order_univariate_split() {
        let b = quad_basis(4, 1);
        let suite = constraint_suite(4, 1).unwrap();
        let split = split_suite(&suite, &b);
        assert_eq!(split.pre_intrinsic, 7);
        assert_eq!(split.nonquadratic.len(), 7);
        assert_eq!(split.intrinsic_count(), 1);
        assert_eq!(split.n2(), 8);
    }
}
