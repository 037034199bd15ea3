//! Generation of the vanishing-integral relations the prover combines.
//!
//! An `m`-th order constraint is a differential form `R` of degree `2m`
//! and total order `2m` with `∫ R / p_t^{2m−1} dx = 0` for every
//! admissible density. Three mechanisms produce them:
//!
//! * **integration by parts** on a single monomial ([`ibp`]),
//! * **the divergence theorem** on scalar products of iterated gradients
//!   and Laplacians ([`nabla`]),
//! * **heat-flow lifting** of an order-`m` constraint to order `m+1`
//!   ([`lift`]).
//!
//! Constraints over abstract index letters are [`Family`] values:
//! dimension-`k` templates whose letters are instantiated at concrete
//! coordinates, some letters summed. [`suite::constraint_suite`] assembles
//! the deduplicated pool for each supported problem.

pub mod golden;
mod ibp;
mod intrinsic;
mod lift;
mod nabla;
pub mod suite;

use std::fmt;

use crate::diffalg::DiffForm;

pub use ibp::{enumerate_monomials, ibp_constraint, ibp_constraint_capped, ibp_pool, IbpError};
pub use intrinsic::{intrinsic_relations, QuadRelation};
pub use lift::{lift_constraint, lift_family};
pub use nabla::{nabla_constraint, nabla_families, nabla_pool, NablaError};
pub use suite::{constraint_suite, costa_problem_ii_suite, SuiteError};

/// Where a constraint came from; keeps the pool auditable and gives
/// certificates something stable to reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// Integration by parts: source monomial, pivot factor, peel coordinate.
    Ibp {
        monomial: String,
        pivot: Vec<u32>,
        coord: usize,
    },
    /// Divergence theorem on the power signature (with vector pairing).
    Nabla { powers: Vec<u32> },
    /// Heat-flow lift of a lower-order constraint.
    Lift { parent: Box<Provenance> },
    /// Quadratic relation between basis monomials.
    Intrinsic { pairs: ((usize, usize), (usize, usize)) },
    /// Hand-encoded reference family.
    Handwritten { label: String },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Ibp {
                monomial,
                pivot,
                coord,
            } => write!(f, "ibp[{monomial}; pivot d{pivot:?}; x{coord}]"),
            Provenance::Nabla { powers } => write!(f, "nabla{powers:?}"),
            Provenance::Lift { parent } => write!(f, "lift[{parent}]"),
            Provenance::Intrinsic { pairs } => write!(
                f,
                "intrinsic[m{}m{} = m{}m{}]",
                pairs.0 .0, pairs.0 .1, pairs.1 .0, pairs.1 .1
            ),
            Provenance::Handwritten { label } => write!(f, "given[{label}]"),
        }
    }
}

/// A concrete constraint: `∫ form / p^{2m−1} dx = 0`.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub form: DiffForm,
    pub provenance: Provenance,
    pub m: u32,
}

/// A constraint family over abstract index letters.
///
/// The template lives in dimension `free + summed`; the first `free`
/// coordinates are free letters (one instantiated constraint per
/// assignment), the rest are summed over all coordinates.
#[derive(Debug, Clone)]
pub struct Family {
    pub template: DiffForm,
    pub free: usize,
    pub summed: usize,
    pub provenance: Provenance,
    pub m: u32,
}

impl Family {
    pub fn letters(&self) -> usize {
        self.free + self.summed
    }

    /// Rename summed letters canonically: per term, pick the permutation
    /// of the summed coordinates that minimizes the monomial (valid
    /// because each term's summation indices are private to it).
    pub fn canonical_renamed(&self) -> Family {
        let k = self.letters();
        let mut out = DiffForm::zero(k);
        let perms = permutations(self.summed);
        for (mono, coef) in self.template.terms() {
            let mut best = None;
            for perm in &perms {
                let mut assignment: Vec<usize> = (0..k).collect();
                for (i, &p) in perm.iter().enumerate() {
                    assignment[self.free + i] = self.free + p;
                }
                let candidate = mono.remap(&assignment, k);
                best = match best {
                    None => Some(candidate),
                    Some(b) if candidate < b => Some(candidate),
                    keep => keep,
                };
            }
            out.add_term(best.expect("at least one permutation"), coef.clone());
        }
        Family {
            template: out,
            free: self.free,
            summed: self.summed,
            provenance: self.provenance.clone(),
            m: self.m,
        }
    }

    /// Canonical renaming plus primitive normalization: the key used for
    /// scalar-insensitive comparisons.
    pub fn canonical(&self) -> Family {
        let mut fam = self.canonical_renamed();
        fam.template.normalize_primitive();
        fam
    }

    /// Instantiate at concrete dimension `n`: one constraint per assignment
    /// of the free letters, summing the template over every assignment of
    /// the summed letters.
    pub fn instantiate(&self, n: usize) -> Vec<Constraint> {
        let k = self.letters();
        let mut out = Vec::new();
        for free_assign in assignments(self.free, n) {
            let mut sum = DiffForm::zero(n);
            for summed_assign in assignments(self.summed, n) {
                let mut assignment = Vec::with_capacity(k);
                assignment.extend_from_slice(&free_assign);
                assignment.extend_from_slice(&summed_assign);
                sum = &sum + &self.template.remap(&assignment, n);
            }
            out.push(Constraint {
                form: sum,
                provenance: self.provenance.clone(),
                m: self.m,
            });
        }
        out
    }
}

/// All assignments of `slots` letters to coordinates `[0, n)`, in
/// lexicographic order.
pub(crate) fn assignments(slots: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..slots {
        let mut next = Vec::with_capacity(out.len() * n);
        for prefix in &out {
            for c in 0..n {
                let mut v = prefix.clone();
                v.push(c);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

pub(crate) fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..k).collect();
    permute(&mut items, 0, &mut out);
    out
}

fn permute(items: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == items.len() {
        out.push(items.clone());
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, out);
        items.swap(start, i);
    }
}

/// Remove exact duplicates and nonzero scalar multiples, dropping zero
/// forms; the first occurrence survives.
pub fn dedup(constraints: Vec<Constraint>) -> Vec<Constraint> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for c in constraints {
        if c.form.is_zero() {
            continue;
        }
        let key = c.form.to_primitive();
        if seen.insert(key) {
            out.push(c);
        }
    }
    out
}

/// Remove exact duplicates only (scalar multiples kept), dropping zero
/// forms; the first occurrence survives.
pub fn dedup_exact(constraints: Vec<Constraint>) -> Vec<Constraint> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for c in constraints {
        if c.form.is_zero() {
            continue;
        }
        if seen.insert(c.form.clone()) {
            out.push(c);
        }
    }
    out
}

/// Family-level dedup up to scalar multiple and renaming of summed letters.
pub fn dedup_families(families: Vec<Family>) -> Vec<Family> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for fam in families {
        if fam.template.is_zero() {
            continue;
        }
        let canon = fam.canonical();
        if seen.insert(canon.template.clone()) {
            out.push(fam);
        }
    }
    out
}

/// Family-level dedup up to renaming of summed letters only; scalar
/// multiples survive as separate entries.
pub fn dedup_families_exact(families: Vec<Family>) -> Vec<Family> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for fam in families {
        if fam.template.is_zero() {
            continue;
        }
        let canon = fam.canonical_renamed();
        if seen.insert(canon.template.clone()) {
            out.push(fam);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffalg::{rat, DiffForm};

    #[test]
    fn dedup_collapses_scalar_multiples() {
        let r = &DiffForm::term1(rat(5), &[(0, 1), (1, 4), (2, 1)])
            + &DiffForm::term1(rat(-4), &[(1, 6)]);
        let pool = vec![
            Constraint {
                form: r.clone(),
                provenance: Provenance::Handwritten { label: "a".into() },
                m: 3,
            },
            Constraint {
                form: r.scaled(&rat(-3)),
                provenance: Provenance::Handwritten { label: "b".into() },
                m: 3,
            },
            Constraint {
                form: r.clone(),
                provenance: Provenance::Handwritten { label: "c".into() },
                m: 3,
            },
            Constraint {
                form: DiffForm::zero(1),
                provenance: Provenance::Handwritten { label: "z".into() },
                m: 3,
            },
        ];
        let kept = dedup(pool);
        assert_eq!(kept.len(), 1);
        assert!(matches!(
            &kept[0].provenance,
            Provenance::Handwritten { label } if label == "a"
        ));
    }

    #[test]
    fn summed_letter_renaming_is_identified() {
        // f_aa f_b^2 with (a,b) both summed equals f_bb f_a^2 after renaming
        let t1 = DiffForm::term(2, rat(1), &[(&[2, 0], 1), (&[0, 1], 2)]);
        let t2 = DiffForm::term(2, rat(1), &[(&[0, 2], 1), (&[1, 0], 2)]);
        let mk = |template: DiffForm| Family {
            template,
            free: 0,
            summed: 2,
            provenance: Provenance::Handwritten { label: "t".into() },
            m: 2,
        };
        let kept = dedup_families(vec![mk(t1), mk(t2)]);
        assert_eq!(kept.len(), 1);
    }

    #[test]
    fn instantiation_sums_summed_letters() {
        // template f_a f_b, a free, b summed, n = 2:
        // two constraints f_a (f_0 + f_1) for a = 0, 1
        let template = DiffForm::term(2, rat(1), &[(&[1, 0], 1), (&[0, 1], 1)]);
        let fam = Family {
            template,
            free: 1,
            summed: 1,
            provenance: Provenance::Handwritten { label: "t".into() },
            m: 1,
        };
        let inst = fam.instantiate(2);
        assert_eq!(inst.len(), 2);
        let want0 = &DiffForm::term(2, rat(1), &[(&[1, 0], 2)])
            + &DiffForm::term(2, rat(1), &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(inst[0].form, want0);
    }
}
