use std::cmp::Ordering;
use std::fmt;

use super::Derivative;

/// A product of derivatives with positive integer exponents.
///
/// Factors are kept sorted descending by the derivative order, with no
/// zero exponents; this canonical shape makes equality, hashing and the
/// monomial order cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    /// `(derivative, exponent)` pairs, descending by derivative, exponents > 0.
    factors: Vec<(Derivative, u32)>,
    dimension: usize,
}

impl Monomial {
    /// Build from arbitrary (derivative, exponent) pairs; merges duplicates
    /// and drops zero exponents.
    pub fn new(n: usize, factors: Vec<(Derivative, u32)>) -> Self {
        let mut fs: Vec<(Derivative, u32)> =
            factors.into_iter().filter(|(_, e)| *e > 0).collect();
        fs.sort_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(Derivative, u32)> = Vec::with_capacity(fs.len());
        for (d, e) in fs {
            debug_assert_eq!(d.dimension(), n);
            match merged.last_mut() {
                Some((last, le)) if *last == d => *le += e,
                _ => merged.push((d, e)),
            }
        }
        Monomial {
            factors: merged,
            dimension: n,
        }
    }

    /// `p_t^k` in dimension `n`. `k = 0` gives the empty monomial (unit).
    pub fn density_power(n: usize, k: u32) -> Self {
        Monomial::new(n, vec![(Derivative::density(n), k)])
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn factors(&self) -> &[(Derivative, u32)] {
        &self.factors
    }

    /// Σ exponents.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    /// Largest derivative order among the factors.
    pub fn order(&self) -> u32 {
        self.factors.iter().map(|(d, _)| d.order()).max().unwrap_or(0)
    }

    /// Σ exponent · order.
    pub fn total_order(&self) -> u32 {
        self.factors.iter().map(|(d, e)| e * d.order()).sum()
    }

    /// Exponent of a given derivative (0 if absent).
    pub fn exponent_of(&self, v: &Derivative) -> u32 {
        self.factors
            .iter()
            .find(|(d, _)| d == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Exponent of `p_t` itself.
    pub fn density_exponent(&self) -> u32 {
        self.exponent_of(&Derivative::density(self.dimension))
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.dimension, other.dimension);
        let mut fs = self.factors.clone();
        fs.extend(other.factors.iter().cloned());
        Monomial::new(self.dimension, fs)
    }

    /// Multiply by a single derivative.
    pub fn mul_derivative(&self, v: &Derivative, e: u32) -> Monomial {
        let mut fs = self.factors.clone();
        fs.push((v.clone(), e));
        Monomial::new(self.dimension, fs)
    }

    /// Divide out one power of `v`; `None` if `v` does not divide.
    pub fn div_derivative(&self, v: &Derivative) -> Option<Monomial> {
        let mut fs = self.factors.clone();
        let pos = fs.iter().position(|(d, _)| d == v)?;
        if fs[pos].1 == 1 {
            fs.remove(pos);
        } else {
            fs[pos].1 -= 1;
        }
        Some(Monomial {
            factors: fs,
            dimension: self.dimension,
        })
    }

    /// Exact division by another monomial, if it divides.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.clone();
        for (d, e) in &other.factors {
            for _ in 0..*e {
                out = out.div_derivative(d)?;
            }
        }
        Some(out)
    }

    /// Re-map coordinates of every factor (see [`Derivative::remap`]).
    pub fn remap(&self, assignment: &[usize], n: usize) -> Monomial {
        Monomial::new(
            n,
            self.factors
                .iter()
                .map(|(d, e)| (d.remap(assignment, n), *e))
                .collect(),
        )
    }

    /// Distinct derivative factors of positive order.
    pub fn positive_order_factors(&self) -> impl Iterator<Item = &(Derivative, u32)> {
        self.factors.iter().filter(|(d, _)| d.order() > 0)
    }
}

/// Total order extending the derivative order: walk both factor lists in
/// descending derivative order; at the greatest derivative where the
/// exponents differ, the larger exponent wins.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.factors.iter().peekable();
        let mut b = other.factors.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => {
                    // Remaining factors on the left only: left has a positive
                    // exponent where right has zero, at a smaller derivative.
                    return Ordering::Greater;
                }
                (None, Some(_)) => return Ordering::Less,
                (Some((da, ea)), Some((db, eb))) => match da.cmp(db) {
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Less => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (d, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "{d:?}^{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 1-D monomial from (order, exponent) pairs.
    pub(crate) fn mono1(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::new(
            1,
            pairs
                .iter()
                .map(|&(ord, e)| (Derivative::new(vec![ord]), e))
                .collect(),
        )
    }

    #[test]
    fn gradings() {
        // f^2 f_3 has degree 3, order 3, total order 3
        let m = mono1(&[(0, 2), (3, 1)]);
        assert_eq!(m.degree(), 3);
        assert_eq!(m.order(), 3);
        assert_eq!(m.total_order(), 3);
    }

    #[test]
    fn quadratic_basis_order_d31() {
        // m1 = f^2 f3 > m2 = f f1 f2 > m3 = f1^3
        let m1 = mono1(&[(0, 2), (3, 1)]);
        let m2 = mono1(&[(0, 1), (1, 1), (2, 1)]);
        let m3 = mono1(&[(1, 3)]);
        assert!(m1 > m2);
        assert!(m2 > m3);
        assert!(m1 > m3);
    }

    #[test]
    fn higher_factor_dominates() {
        // f f1^4 f2 > f1^6
        let a = mono1(&[(0, 1), (1, 4), (2, 1)]);
        let b = mono1(&[(1, 6)]);
        assert!(a > b);
    }

    #[test]
    fn reflexive_and_division() {
        let m = mono1(&[(0, 1), (1, 4), (2, 1)]);
        assert_eq!(m.cmp(&m), Ordering::Equal);
        let q = m.div(&mono1(&[(1, 2)])).unwrap();
        assert_eq!(q, mono1(&[(0, 1), (1, 2), (2, 1)]));
        assert!(m.div(&mono1(&[(3, 1)])).is_none());
    }
}
