//! Divergence-theorem constraints.
//!
//! Scalar products `Q = Π_i ∇^{(k_i)} p` with `Σ k_i = 2m` and
//! `k_i ≤ 2m−1` integrate by parts against `1/p^{2m−1}` with vanishing
//! boundary term. `∇^{(2i)}` is the `i`-fold Laplacian, `∇^{(2i+1)}` its
//! gradient; odd-order factors are vectors and are contracted pairwise,
//! so a signature contributes one expression per pairing class.
//!
//! After assigning one abstract letter per Laplacian and one per
//! contraction, `Q` is a single monomial over `m` letters, all summed, and
//! the constraint is exactly the integration-by-parts relation obtained by
//! peeling the outermost derivative of a factor with the largest order:
//! the contraction letter when that factor is a vector, its last Laplacian
//! letter otherwise.

use thiserror::Error;

use crate::diffalg::{Derivative, Monomial};

use super::{dedup, dedup_families, ibp_constraint, Constraint, Family, Provenance};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NablaError {
    #[error("the product is not a scalar (odd number of odd powers)")]
    NotScalar,
    #[error("all powers are zero; nothing to integrate by parts")]
    AllZero,
    #[error("power {0} exceeds the order cap {1}")]
    OverCap(u32, u32),
}

/// Partitions of `total` into parts `1..=max_part`, descending parts,
/// lexicographically descending.
fn partitions(total: u32, max_part: u32) -> Vec<Vec<u32>> {
    fn rec(left: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        let hi = max.min(left);
        for part in (1..=hi).rev() {
            prefix.push(part);
            rec(left - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, max_part, &mut Vec::new(), &mut out);
    out
}

/// The pairing of the odd entries of a (descending) signature: vector
/// factors contract adjacently in sorted order, matching the left-to-right
/// reading of the `∗`-product.
fn adjacent_pairing(odd_orders: &[u32]) -> Vec<(u32, u32)> {
    odd_orders.chunks(2).map(|c| (c[0], c[1])).collect()
}

/// The scalar product monomial for one signature and pairing, over `m`
/// abstract letters, together with the pivot (largest-order factor) and
/// the coordinate to peel.
fn assemble_product(
    m: u32,
    signature: &[u32],
    pairing: &[(u32, u32)],
) -> (Monomial, Derivative, usize) {
    let letters = m as usize;
    let mut next_letter = 0usize;
    let mut factors: Vec<Vec<u32>> = Vec::new();

    // Contraction letters, one per pair; each matched side later consumes
    // an entry of its own order.
    let mut pool: Vec<(u32, usize)> = Vec::new(); // (order, shared letter)
    for &(x, y) in pairing {
        let shared = next_letter;
        next_letter += 1;
        pool.push((x, shared));
        pool.push((y, shared));
    }

    let mut first_factor_contraction = None;
    for (fi, &k) in signature.iter().enumerate() {
        let mut mi = vec![0u32; letters];
        if k % 2 == 1 {
            let pos = pool
                .iter()
                .position(|(ord, _)| *ord == k)
                .expect("pairing covers every odd order");
            let (_, shared) = pool.remove(pos);
            mi[shared] += 1;
            if fi == 0 {
                first_factor_contraction = Some(shared);
            }
            for _ in 0..(k - 1) / 2 {
                mi[next_letter] += 2;
                next_letter += 1;
            }
        } else {
            for _ in 0..k / 2 {
                mi[next_letter] += 2;
                next_letter += 1;
            }
        }
        factors.push(mi);
    }
    debug_assert_eq!(next_letter, letters);

    // Pivot: the factor of largest order (factor 0; the signature is
    // descending). Peel its outermost derivative: the contraction letter
    // when the factor is a vector, its last Laplacian letter otherwise.
    let pivot_mi = factors[0].clone();
    let peel = if signature[0] % 2 == 1 {
        first_factor_contraction.expect("pivot is paired")
    } else {
        pivot_mi
            .iter()
            .rposition(|&h| h >= 2)
            .expect("even factor has a Laplacian letter")
    };

    let degree = 2 * m;
    let mut mono_factors: Vec<(Derivative, u32)> = factors
        .into_iter()
        .map(|mi| (Derivative::new(mi), 1))
        .collect();
    let used: u32 = mono_factors.iter().map(|(_, e)| *e).sum();
    if used < degree {
        mono_factors.push((Derivative::density(letters), degree - used));
    }
    (
        Monomial::new(letters, mono_factors),
        Derivative::new(pivot_mi),
        peel,
    )
}

/// One divergence-theorem constraint family from a power signature.
///
/// Signatures list the positive powers only (density factors are implied);
/// the pairing picks how odd-order vector factors contract.
pub fn nabla_constraint(
    m: u32,
    signature: &[u32],
    pairing: &[(u32, u32)],
) -> Result<Family, NablaError> {
    let cap = 2 * m - 1;
    if signature.iter().any(|&k| k > cap) {
        return Err(NablaError::OverCap(
            *signature.iter().max().unwrap(),
            cap,
        ));
    }
    if signature.is_empty() {
        return Err(NablaError::AllZero);
    }
    let odd_count = signature.iter().filter(|&&k| k % 2 == 1).count();
    if odd_count % 2 == 1 {
        return Err(NablaError::NotScalar);
    }
    let (q, pivot, peel) = assemble_product(m, signature, pairing);
    let form = ibp_constraint(m, &q, &pivot, peel).expect("largest-order pivot stays in alphabet");
    Ok(Family {
        template: form,
        free: 0,
        summed: m as usize,
        provenance: Provenance::Nabla {
            powers: signature.to_vec(),
        },
        m,
    })
}

/// All distinct divergence-theorem families at order `m` (letter level).
pub fn nabla_families(m: u32) -> Vec<Family> {
    let mut fams = Vec::new();
    for signature in partitions(2 * m, 2 * m - 1) {
        let odd: Vec<u32> = signature.iter().copied().filter(|k| k % 2 == 1).collect();
        if let Ok(fam) = nabla_constraint(m, &signature, &adjacent_pairing(&odd)) {
            fams.push(fam);
        }
    }
    dedup_families(fams)
}

/// Concrete divergence-theorem constraints in dimension `n`.
pub fn nabla_pool(m: u32, n: usize) -> Vec<Constraint> {
    let mut out = Vec::new();
    for fam in nabla_families(m) {
        out.extend(fam.instantiate(n));
    }
    dedup(out)
}
