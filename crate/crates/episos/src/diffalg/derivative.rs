use std::cmp::Ordering;
use std::fmt;

/// A partial derivative of `p_t`, identified by its multi-index.
///
/// `multi_index[i]` is the number of differentiations in coordinate `i`;
/// the all-zero multi-index denotes `p_t` itself. The ambient dimension is
/// the length of the multi-index.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Derivative {
    multi_index: Vec<u32>,
}

impl Derivative {
    pub fn new(multi_index: Vec<u32>) -> Self {
        Derivative { multi_index }
    }

    /// `p_t` itself in dimension `n`.
    pub fn density(n: usize) -> Self {
        Derivative {
            multi_index: vec![0; n],
        }
    }

    /// First-order derivative in coordinate `coord`.
    pub fn unit(n: usize, coord: usize) -> Self {
        let mut mi = vec![0; n];
        mi[coord] = 1;
        Derivative { multi_index: mi }
    }

    pub fn dimension(&self) -> usize {
        self.multi_index.len()
    }

    pub fn multi_index(&self) -> &[u32] {
        &self.multi_index
    }

    /// Sum of the multi-index; 0 denotes the density itself.
    pub fn order(&self) -> u32 {
        self.multi_index.iter().sum()
    }

    pub fn is_density(&self) -> bool {
        self.order() == 0
    }

    /// Derivative with one more differentiation in `coord`.
    pub fn raised(&self, coord: usize) -> Self {
        let mut mi = self.multi_index.clone();
        mi[coord] += 1;
        Derivative { multi_index: mi }
    }

    /// Derivative with one fewer differentiation in `coord`.
    ///
    /// Panics if there is none to remove.
    pub fn lowered(&self, coord: usize) -> Self {
        let mut mi = self.multi_index.clone();
        assert!(mi[coord] > 0, "cannot lower coordinate {coord}");
        mi[coord] -= 1;
        Derivative { multi_index: mi }
    }

    /// Re-map coordinates: entry `i` of the multi-index is added onto
    /// coordinate `assignment[i]` of a dimension-`n` derivative. Used to
    /// instantiate symbolic index letters at concrete coordinates.
    pub fn remap(&self, assignment: &[usize], n: usize) -> Self {
        let mut mi = vec![0u32; n];
        for (slot, &count) in self.multi_index.iter().enumerate() {
            mi[assignment[slot]] += count;
        }
        Derivative { multi_index: mi }
    }
}

/// Total order on derivatives of equal dimension: compare at the highest
/// coordinate where the multi-indices differ, larger entry wins.
impl Ord for Derivative {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(
            self.dimension(),
            other.dimension(),
            "comparing derivatives of different dimension"
        );
        for (h, s) in self
            .multi_index
            .iter()
            .rev()
            .zip(other.multi_index.iter().rev())
        {
            match h.cmp(s) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Derivative {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Derivative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d(")?;
        for (i, h) in self.multi_index.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{h}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(mi: &[u32]) -> Derivative {
        Derivative::new(mi.to_vec())
    }

    #[test]
    fn one_dimensional_order_wins() {
        // f3 vs f2 in n = 1
        assert!(d(&[3]) > d(&[2]));
    }

    #[test]
    fn highest_differing_coordinate_decides() {
        // d^3/dx1^2 dx2 vs d^3/dx1 dx2^2: compare at coordinate 2, 1 < 2
        assert!(d(&[2, 1]) < d(&[1, 2]));
    }

    #[test]
    fn reflexive() {
        let v = d(&[1, 0, 2]);
        assert_eq!(v.cmp(&v), Ordering::Equal);
    }

    #[test]
    fn remap_merges_slots() {
        // letters (a,b,c) -> coordinates (0,0,1)
        let v = d(&[3, 2, 1]);
        assert_eq!(v.remap(&[0, 0, 1], 2), d(&[5, 1]));
    }
}
