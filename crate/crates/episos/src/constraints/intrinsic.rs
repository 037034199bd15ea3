//! Intrinsic quadratic relations between basis monomials.
//!
//! When the products `m_i m_j` and `m_k m_l` are the same monomial of
//! `p_t`-derivatives, the quadratic form `m_i m_j − m_k m_l` vanishes
//! identically; the SDP needs these relations spelled out because it
//! treats the `m_i` as independent scalars. Per group of pairs sharing one
//! product, a spanning set of `g − 1` relations against the group's first
//! pair is emitted.

use std::collections::BTreeMap;

use crate::diffalg::Monomial;

/// `left` and `right` are index pairs `(i ≤ j)` into the quadratic basis
/// with `m_i m_j = m_k m_l` as monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadRelation {
    pub left: (usize, usize),
    pub right: (usize, usize),
}

/// All intrinsic relations for an ordered quadratic basis.
pub fn intrinsic_relations(basis: &[Monomial]) -> Vec<QuadRelation> {
    let mut groups: BTreeMap<Monomial, Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..basis.len() {
        for j in i..basis.len() {
            groups
                .entry(basis[i].mul(&basis[j]))
                .or_default()
                .push((i, j));
        }
    }
    let mut out = Vec::new();
    for (_, pairs) in groups {
        let anchor = pairs[0];
        for &other in &pairs[1..] {
            out.push(QuadRelation {
                left: anchor,
                right: other,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffalg::Derivative;

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
    fn fourth_order_univariate_relation() {
        // p²f₂² · f₁⁴ = (p f₁² f₂)² is the single relation in this basis
        let basis = vec![
            mono1(&[(0, 3), (4, 1)]),
            mono1(&[(0, 2), (3, 1), (1, 1)]),
            mono1(&[(0, 2), (2, 2)]),
            mono1(&[(0, 1), (2, 1), (1, 2)]),
            mono1(&[(1, 4)]),
        ];
        let rels = intrinsic_relations(&basis);
        assert_eq!(rels.len(), 1);
        assert_eq!(
            rels[0],
            QuadRelation {
                left: (2, 4),
                right: (3, 3)
            }
        );
    }

    #[test]
    fn third_order_univariate_has_none() {
        let basis = vec![
            mono1(&[(0, 2), (3, 1)]),
            mono1(&[(0, 1), (1, 1), (2, 1)]),
            mono1(&[(1, 3)]),
        ];
        assert!(intrinsic_relations(&basis).is_empty());
    }
}
