//! Hand-encoded reference constraints used as regression anchors.
//!
//! Every form here is validated twice over: the Gaussian-moment oracle
//! checks the vanishing integral, and the generators must reproduce each
//! one up to scalar multiple. Letters map to template coordinates as
//! `a → 0`, `b → 1`, `c → 2`.

use crate::diffalg::{rat, ratio, DiffForm, Rat};

fn c(num: i64, den: i64) -> Rat {
    ratio(num, den)
}

/// Dimension-2 term helper: density power plus `(multi-index, exponent)`
/// derivative factors.
fn t2(coef: Rat, p: u32, factors: &[([u32; 2], u32)]) -> DiffForm {
    let mut pairs: Vec<(&[u32], u32)> = vec![(&[0, 0][..], p)];
    for (mi, e) in factors {
        pairs.push((&mi[..], *e));
    }
    DiffForm::term(2, coef, &pairs)
}

fn t3(coef: Rat, p: u32, factors: &[([u32; 3], u32)]) -> DiffForm {
    let mut pairs: Vec<(&[u32], u32)> = vec![(&[0, 0, 0][..], p)];
    for (mi, e) in factors {
        pairs.push((&mi[..], *e));
    }
    DiffForm::term(3, coef, &pairs)
}

fn sum(parts: Vec<DiffForm>) -> DiffForm {
    let n = parts[0].dimension();
    parts.iter().fold(DiffForm::zero(n), |acc, t| &acc + t)
}

/// First divergence-theorem family at second order:
/// `p²(∂³p/∂x_a∂x_b²)(∂p/∂x_a) + (∂²p/∂x_a²)[p²(∂²p/∂x_b²) − p(∂p/∂x_b)²]`.
pub fn costa_divergence_family_1() -> DiffForm {
    sum(vec![
        t2(rat(1), 2, &[([1, 2], 1), ([1, 0], 1)]),
        t2(rat(1), 2, &[([2, 0], 1), ([0, 2], 1)]),
        t2(rat(-1), 1, &[([2, 0], 1), ([0, 1], 2)]),
    ])
}

/// Second divergence-theorem family at second order:
/// `p(∂²p/∂x_a²)(∂p/∂x_b)² + 2(∂p/∂x_a)[p(∂²p/∂x_a∂x_b)(∂p/∂x_b) − (∂p/∂x_a)(∂p/∂x_b)²]`.
pub fn costa_divergence_family_2() -> DiffForm {
    sum(vec![
        t2(rat(1), 1, &[([2, 0], 1), ([0, 1], 2)]),
        t2(rat(2), 1, &[([1, 0], 1), ([1, 1], 1), ([0, 1], 1)]),
        t2(rat(-2), 0, &[([1, 0], 2), ([0, 1], 2)]),
    ])
}

/// The seventeen two-letter integration-by-parts families entering the
/// entropy-power-concavity proof.
pub fn costa_ibp_families() -> Vec<DiffForm> {
    vec![
        // R1
        sum(vec![
            t2(rat(1), 2, &[([0, 3], 1), ([0, 1], 1)]),
            t2(rat(1), 2, &[([0, 2], 2)]),
            t2(rat(-1), 1, &[([0, 2], 1), ([0, 1], 2)]),
        ]),
        // R2
        sum(vec![
            t2(rat(1), 2, &[([0, 3], 1), ([1, 0], 1)]),
            t2(rat(1), 2, &[([0, 2], 1), ([1, 1], 1)]),
            t2(rat(-1), 1, &[([0, 2], 1), ([1, 0], 1), ([0, 1], 1)]),
        ]),
        // R3
        sum(vec![
            t2(rat(1), 2, &[([1, 2], 1), ([0, 1], 1)]),
            t2(rat(1), 2, &[([1, 1], 1), ([0, 2], 1)]),
            t2(rat(-1), 1, &[([1, 1], 1), ([0, 1], 2)]),
        ]),
        // R4 (the density factor in the second term reads p² like its peers)
        sum(vec![
            t2(rat(1), 2, &[([1, 2], 1), ([1, 0], 1)]),
            t2(rat(1), 2, &[([1, 1], 2)]),
            t2(rat(-1), 1, &[([1, 1], 1), ([1, 0], 1), ([0, 1], 1)]),
        ]),
        // R5
        sum(vec![
            t2(rat(1), 2, &[([2, 1], 1), ([0, 1], 1)]),
            t2(rat(1), 2, &[([1, 1], 2)]),
            t2(rat(-1), 1, &[([1, 1], 1), ([1, 0], 1), ([0, 1], 1)]),
        ]),
        // R6
        sum(vec![
            t2(rat(1), 2, &[([2, 1], 1), ([1, 0], 1)]),
            t2(rat(1), 2, &[([1, 1], 1), ([2, 0], 1)]),
            t2(rat(-1), 1, &[([1, 1], 1), ([1, 0], 2)]),
        ]),
        // R7
        sum(vec![
            t2(rat(1), 2, &[([3, 0], 1), ([0, 1], 1)]),
            t2(rat(1), 2, &[([2, 0], 1), ([1, 1], 1)]),
            t2(rat(-1), 1, &[([2, 0], 1), ([1, 0], 1), ([0, 1], 1)]),
        ]),
        // R8
        sum(vec![
            t2(rat(1), 2, &[([3, 0], 1), ([1, 0], 1)]),
            t2(rat(1), 2, &[([2, 0], 2)]),
            t2(rat(-1), 1, &[([2, 0], 1), ([1, 0], 2)]),
        ]),
        // R9
        sum(vec![
            t2(rat(1), 1, &[([0, 2], 1), ([1, 0], 2)]),
            t2(rat(2), 1, &[([1, 0], 1), ([1, 1], 1), ([0, 1], 1)]),
            t2(rat(-2), 0, &[([1, 0], 2), ([0, 1], 2)]),
        ]),
        // R10
        sum(vec![
            t2(rat(2), 1, &[([1, 0], 1), ([0, 1], 1), ([0, 2], 1)]),
            t2(rat(1), 1, &[([0, 1], 2), ([1, 1], 1)]),
            t2(rat(-2), 0, &[([1, 0], 1), ([0, 1], 3)]),
        ]),
        // R11
        sum(vec![
            t2(rat(3), 1, &[([0, 1], 2), ([0, 2], 1)]),
            t2(rat(-2), 0, &[([0, 1], 4)]),
        ]),
        // R12
        sum(vec![
            t2(rat(1), 1, &[([1, 1], 1), ([1, 0], 2)]),
            t2(rat(2), 1, &[([1, 0], 1), ([2, 0], 1), ([0, 1], 1)]),
            t2(rat(-2), 0, &[([1, 0], 3), ([0, 1], 1)]),
        ]),
        // R13
        sum(vec![
            t2(rat(2), 1, &[([1, 1], 1), ([1, 0], 1), ([0, 1], 1)]),
            t2(rat(1), 1, &[([2, 0], 1), ([0, 1], 2)]),
            t2(rat(-2), 0, &[([1, 0], 2), ([0, 1], 2)]),
        ]),
        // R14
        sum(vec![
            t2(rat(3), 1, &[([1, 1], 1), ([0, 1], 2)]),
            t2(rat(-2), 0, &[([1, 0], 1), ([0, 1], 3)]),
        ]),
        // R15
        sum(vec![
            t2(rat(3), 1, &[([2, 0], 1), ([1, 0], 2)]),
            t2(rat(-2), 0, &[([1, 0], 4)]),
        ]),
        // R16
        sum(vec![
            t2(rat(2), 1, &[([2, 0], 1), ([1, 0], 1), ([0, 1], 1)]),
            t2(rat(1), 1, &[([1, 0], 2), ([1, 1], 1)]),
            t2(rat(-2), 0, &[([1, 0], 3), ([0, 1], 1)]),
        ]),
        // R17
        sum(vec![
            t2(rat(1), 1, &[([2, 0], 1), ([0, 1], 2)]),
            t2(rat(2), 1, &[([1, 0], 1), ([1, 1], 1), ([0, 1], 1)]),
            t2(rat(-2), 0, &[([1, 0], 2), ([0, 1], 2)]),
        ]),
    ]
}

/// The six three-letter divergence-theorem families at third order
/// (all letters summed).
pub fn third_order_divergence_families() -> Vec<DiffForm> {
    vec![
        sum(vec![
            t3(rat(1), 4, &[([1, 0, 0], 1), ([1, 2, 2], 1)]),
            t3(rat(1), 4, &[([2, 2, 0], 1), ([0, 0, 2], 1)]),
            t3(rat(-1), 3, &[([0, 0, 1], 2), ([2, 2, 0], 1)]),
        ]),
        sum(vec![
            t3(rat(1), 4, &[([0, 0, 2], 1), ([2, 2, 0], 1)]),
            t3(rat(1), 4, &[([1, 0, 2], 1), ([1, 2, 0], 1)]),
            t3(rat(-1), 3, &[([1, 0, 0], 1), ([1, 2, 0], 1), ([0, 0, 2], 1)]),
        ]),
        sum(vec![
            t3(rat(1), 3, &[([0, 0, 1], 2), ([2, 2, 0], 1)]),
            t3(rat(2), 3, &[([1, 2, 0], 1), ([0, 0, 1], 1), ([1, 0, 1], 1)]),
            t3(rat(-2), 2, &[([1, 2, 0], 1), ([0, 0, 1], 2), ([1, 0, 0], 1)]),
        ]),
        sum(vec![
            t3(rat(1), 3, &[([1, 0, 0], 1), ([1, 2, 0], 1), ([0, 0, 2], 1)]),
            t3(rat(1), 3, &[([0, 1, 0], 1), ([2, 0, 0], 1), ([0, 1, 2], 1)]),
            t3(rat(1), 3, &[([2, 0, 0], 1), ([0, 0, 2], 1), ([0, 2, 0], 1)]),
            t3(rat(-2), 2, &[([0, 1, 0], 2), ([2, 0, 0], 1), ([0, 0, 2], 1)]),
        ]),
        sum(vec![
            t3(rat(1), 2, &[([1, 2, 0], 1), ([0, 0, 1], 2), ([1, 0, 0], 1)]),
            t3(rat(1), 2, &[([0, 0, 1], 2), ([2, 0, 0], 1), ([0, 2, 0], 1)]),
            t3(
                rat(2),
                2,
                &[([2, 0, 0], 1), ([0, 1, 0], 1), ([0, 0, 1], 1), ([0, 1, 1], 1)],
            ),
            t3(rat(-3), 1, &[([2, 0, 0], 1), ([0, 1, 0], 2), ([0, 0, 1], 2)]),
        ]),
        sum(vec![
            t3(rat(1), 1, &[([2, 0, 0], 1), ([0, 1, 0], 2), ([0, 0, 1], 2)]),
            t3(
                rat(2),
                1,
                &[([1, 0, 0], 1), ([0, 1, 0], 1), ([0, 0, 1], 2), ([1, 1, 0], 1)],
            ),
            t3(
                rat(2),
                1,
                &[([1, 0, 0], 1), ([0, 1, 0], 2), ([0, 0, 1], 1), ([1, 0, 1], 1)],
            ),
            t3(rat(-4), 0, &[([1, 0, 0], 2), ([0, 1, 0], 2), ([0, 0, 1], 2)]),
        ]),
    ]
}

/// The two heat-flow lifts of the second-order divergence families
/// (three letters, all summed).
pub fn lifted_divergence_families() -> Vec<DiffForm> {
    vec![
        sum(vec![
            t3(c(1, 2), 4, &[([1, 0, 2], 1), ([1, 2, 0], 1)]),
            t3(c(1, 2), 4, &[([1, 0, 0], 1), ([1, 2, 2], 1)]),
            t3(c(-1, 2), 3, &[([1, 0, 0], 1), ([1, 2, 0], 1), ([0, 0, 2], 1)]),
            t3(c(1, 2), 4, &[([2, 0, 2], 1), ([0, 2, 0], 1)]),
            t3(c(1, 2), 4, &[([2, 0, 0], 1), ([0, 2, 2], 1)]),
            t3(c(-1, 2), 3, &[([2, 0, 0], 1), ([0, 2, 0], 1), ([0, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([2, 0, 2], 1), ([0, 1, 0], 2)]),
            t3(rat(-1), 3, &[([2, 0, 0], 1), ([0, 1, 0], 1), ([0, 1, 2], 1)]),
            t3(rat(1), 2, &[([2, 0, 0], 1), ([0, 1, 0], 2), ([0, 0, 2], 1)]),
        ]),
        sum(vec![
            t3(c(1, 2), 3, &[([2, 0, 2], 1), ([0, 1, 0], 2)]),
            t3(rat(1), 3, &[([2, 0, 0], 1), ([0, 1, 0], 1), ([0, 1, 2], 1)]),
            t3(rat(-1), 2, &[([2, 0, 0], 1), ([0, 1, 0], 2), ([0, 0, 2], 1)]),
            t3(
                rat(1),
                3,
                &[([1, 1, 2], 1), ([0, 1, 0], 1), ([1, 0, 0], 1)],
            ),
            t3(
                rat(1),
                3,
                &[([1, 1, 0], 1), ([0, 1, 2], 1), ([1, 0, 0], 1)],
            ),
            t3(
                rat(1),
                3,
                &[([1, 1, 0], 1), ([0, 1, 0], 1), ([1, 0, 2], 1)],
            ),
            t3(
                rat(-2),
                2,
                &[([1, 1, 0], 1), ([0, 1, 0], 1), ([1, 0, 0], 1), ([0, 0, 2], 1)],
            ),
            t3(rat(-2), 2, &[([1, 0, 0], 1), ([0, 1, 0], 2), ([1, 0, 2], 1)]),
            t3(rat(-2), 2, &[([1, 0, 0], 2), ([0, 1, 0], 1), ([0, 1, 2], 1)]),
            t3(rat(3), 1, &[([1, 0, 0], 2), ([0, 1, 0], 2), ([0, 0, 2], 1)]),
        ]),
    ]
}

/// The twenty heat-flow lifts of the two-letter integration-by-parts
/// families: free letters `(a, b)`, summed letter `c`.
pub fn lifted_ibp_families() -> Vec<DiffForm> {
    vec![
        // L1
        sum(vec![
            t3(c(3, 2), 3, &[([1, 0, 0], 2), ([2, 0, 2], 1)]),
            t3(rat(3), 3, &[([1, 0, 0], 1), ([2, 0, 0], 1), ([1, 0, 2], 1)]),
            t3(rat(-3), 2, &[([1, 0, 0], 2), ([2, 0, 0], 1), ([0, 0, 2], 1)]),
            t3(rat(-4), 2, &[([1, 0, 2], 1), ([1, 0, 0], 3)]),
            t3(rat(3), 1, &[([0, 0, 2], 1), ([1, 0, 0], 4)]),
        ]),
        // L2
        sum(vec![
            t3(c(3, 2), 3, &[([0, 1, 0], 2), ([0, 2, 2], 1)]),
            t3(rat(3), 3, &[([0, 1, 0], 1), ([0, 2, 0], 1), ([0, 1, 2], 1)]),
            t3(rat(-3), 2, &[([0, 1, 0], 2), ([0, 2, 0], 1), ([0, 0, 2], 1)]),
            t3(rat(-4), 2, &[([0, 1, 2], 1), ([0, 1, 0], 3)]),
            t3(rat(3), 1, &[([0, 0, 2], 1), ([0, 1, 0], 4)]),
        ]),
        // L3
        sum(vec![
            t3(c(3, 2), 3, &[([1, 1, 2], 1), ([1, 0, 0], 2)]),
            t3(rat(3), 3, &[([1, 1, 0], 1), ([1, 0, 0], 1), ([1, 0, 2], 1)]),
            t3(rat(-3), 2, &[([1, 1, 0], 1), ([1, 0, 0], 2), ([0, 0, 2], 1)]),
            t3(rat(-3), 2, &[([0, 1, 0], 1), ([1, 0, 0], 2), ([1, 0, 2], 1)]),
            t3(rat(3), 1, &[([0, 1, 0], 1), ([1, 0, 0], 3), ([0, 0, 2], 1)]),
            t3(rat(-1), 2, &[([0, 1, 2], 1), ([1, 0, 0], 3)]),
        ]),
        // L4
        sum(vec![
            t3(c(3, 2), 3, &[([1, 1, 2], 1), ([0, 1, 0], 2)]),
            t3(rat(3), 3, &[([1, 1, 0], 1), ([0, 1, 0], 1), ([0, 1, 2], 1)]),
            t3(rat(-3), 2, &[([1, 1, 0], 1), ([0, 1, 0], 2), ([0, 0, 2], 1)]),
            t3(rat(-3), 2, &[([0, 1, 2], 1), ([1, 0, 0], 1), ([0, 1, 0], 2)]),
            t3(rat(-1), 2, &[([1, 0, 2], 1), ([0, 1, 0], 3)]),
            t3(rat(3), 1, &[([1, 0, 0], 1), ([0, 1, 0], 3), ([0, 0, 2], 1)]),
        ]),
        // L5
        sum(vec![
            t3(c(1, 2), 4, &[([1, 0, 2], 1), ([3, 0, 0], 1)]),
            t3(c(1, 2), 4, &[([1, 0, 0], 1), ([3, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([1, 0, 0], 1), ([3, 0, 0], 1), ([0, 0, 2], 1)]),
            t3(rat(1), 4, &[([2, 0, 2], 1), ([2, 0, 0], 1)]),
            t3(c(-1, 2), 3, &[([2, 0, 0], 2), ([0, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([1, 0, 0], 2), ([2, 0, 2], 1)]),
            t3(rat(-1), 3, &[([1, 0, 0], 1), ([2, 0, 0], 1), ([1, 0, 2], 1)]),
            t3(rat(1), 2, &[([1, 0, 0], 2), ([2, 0, 0], 1), ([0, 0, 2], 1)]),
        ]),
        // L6
        sum(vec![
            t3(c(1, 2), 4, &[([0, 1, 2], 1), ([0, 3, 0], 1)]),
            t3(c(1, 2), 4, &[([0, 1, 0], 1), ([0, 3, 2], 1)]),
            t3(c(-1, 2), 3, &[([0, 1, 0], 1), ([0, 3, 0], 1), ([0, 0, 2], 1)]),
            t3(rat(1), 4, &[([0, 2, 2], 1), ([0, 2, 0], 1)]),
            t3(c(-1, 2), 3, &[([0, 2, 0], 2), ([0, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([0, 1, 0], 2), ([0, 2, 2], 1)]),
            t3(rat(-1), 3, &[([0, 1, 0], 1), ([0, 2, 0], 1), ([0, 1, 2], 1)]),
            t3(rat(1), 2, &[([0, 1, 0], 2), ([0, 2, 0], 1), ([0, 0, 2], 1)]),
        ]),
        // L7
        sum(vec![
            t3(c(1, 2), 4, &[([2, 1, 2], 1), ([1, 0, 0], 1)]),
            t3(c(1, 2), 4, &[([2, 1, 0], 1), ([1, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([2, 1, 0], 1), ([1, 0, 0], 1), ([0, 0, 2], 1)]),
            t3(c(1, 2), 4, &[([1, 1, 2], 1), ([2, 0, 0], 1)]),
            t3(c(-1, 2), 3, &[([1, 1, 2], 1), ([1, 0, 0], 2)]),
            t3(c(1, 2), 4, &[([1, 1, 0], 1), ([2, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([1, 1, 0], 1), ([2, 0, 0], 1), ([0, 0, 2], 1)]),
            t3(rat(-1), 3, &[([1, 1, 0], 1), ([1, 0, 0], 1), ([1, 0, 2], 1)]),
            t3(rat(1), 2, &[([1, 1, 0], 1), ([1, 0, 0], 2), ([0, 0, 2], 1)]),
        ]),
        // L8
        sum(vec![
            t3(c(1, 2), 4, &[([1, 2, 2], 1), ([0, 1, 0], 1)]),
            t3(c(1, 2), 4, &[([1, 2, 0], 1), ([0, 1, 2], 1)]),
            t3(c(-1, 2), 3, &[([1, 2, 0], 1), ([0, 1, 0], 1), ([0, 0, 2], 1)]),
            t3(c(1, 2), 4, &[([0, 2, 0], 1), ([1, 1, 2], 1)]),
            t3(c(-1, 2), 3, &[([1, 1, 2], 1), ([0, 1, 0], 2)]),
            t3(c(1, 2), 4, &[([0, 2, 2], 1), ([1, 1, 0], 1)]),
            t3(c(-1, 2), 3, &[([0, 2, 0], 1), ([1, 1, 0], 1), ([0, 0, 2], 1)]),
            t3(rat(-1), 3, &[([1, 1, 0], 1), ([0, 1, 0], 1), ([0, 1, 2], 1)]),
            t3(rat(1), 2, &[([1, 1, 0], 1), ([0, 1, 0], 2), ([0, 0, 2], 1)]),
        ]),
        // L9
        sum(vec![
            t3(c(1, 2), 4, &[([1, 0, 0], 1), ([1, 2, 2], 1)]),
            t3(c(1, 2), 4, &[([1, 0, 2], 1), ([1, 2, 0], 1)]),
            t3(c(-1, 2), 3, &[([1, 0, 0], 1), ([1, 2, 0], 1), ([0, 0, 2], 1)]),
            t3(rat(1), 4, &[([1, 1, 2], 1), ([1, 1, 0], 1)]),
            t3(c(-1, 2), 3, &[([1, 1, 2], 1), ([0, 1, 0], 1), ([1, 0, 0], 1)]),
            t3(c(-1, 2), 3, &[([1, 1, 0], 2), ([0, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([1, 1, 0], 1), ([0, 1, 0], 1), ([1, 0, 2], 1)]),
            t3(
                rat(1),
                2,
                &[([1, 1, 0], 1), ([0, 1, 0], 1), ([1, 0, 0], 1), ([0, 0, 2], 1)],
            ),
            t3(c(-1, 2), 3, &[([1, 1, 0], 1), ([0, 1, 2], 1), ([1, 0, 0], 1)]),
        ]),
        // L10
        sum(vec![
            t3(c(1, 2), 4, &[([1, 0, 0], 1), ([1, 2, 2], 1)]),
            t3(c(1, 2), 4, &[([1, 0, 2], 1), ([1, 2, 0], 1)]),
            t3(c(-1, 2), 3, &[([1, 0, 0], 1), ([1, 2, 0], 1), ([0, 0, 2], 1)]),
            t3(c(1, 2), 4, &[([2, 0, 0], 1), ([0, 2, 2], 1)]),
            t3(c(-1, 2), 3, &[([1, 0, 0], 2), ([0, 2, 2], 1)]),
            t3(c(1, 2), 4, &[([2, 0, 2], 1), ([0, 2, 0], 1)]),
            t3(c(-1, 2), 3, &[([2, 0, 0], 1), ([0, 0, 2], 1), ([0, 2, 0], 1)]),
            t3(rat(-1), 3, &[([1, 0, 0], 1), ([0, 2, 0], 1), ([1, 0, 2], 1)]),
            t3(rat(1), 2, &[([1, 0, 0], 2), ([0, 2, 0], 1), ([0, 0, 2], 1)]),
        ]),
        // L11
        sum(vec![
            t3(c(1, 2), 4, &[([0, 1, 0], 1), ([2, 1, 2], 1)]),
            t3(c(1, 2), 4, &[([0, 1, 2], 1), ([2, 1, 0], 1)]),
            t3(c(-1, 2), 3, &[([0, 1, 0], 1), ([2, 1, 0], 1), ([0, 0, 2], 1)]),
            t3(c(1, 2), 4, &[([2, 0, 2], 1), ([0, 2, 0], 1)]),
            t3(c(-1, 2), 3, &[([0, 1, 0], 2), ([2, 0, 2], 1)]),
            t3(c(1, 2), 4, &[([2, 0, 0], 1), ([0, 2, 2], 1)]),
            t3(c(-1, 2), 3, &[([2, 0, 0], 1), ([0, 0, 2], 1), ([0, 2, 0], 1)]),
            t3(rat(-1), 3, &[([0, 1, 0], 1), ([2, 0, 0], 1), ([0, 1, 2], 1)]),
            t3(rat(1), 2, &[([0, 1, 0], 2), ([2, 0, 0], 1), ([0, 0, 2], 1)]),
        ]),
        // L12
        sum(vec![
            t3(c(1, 2), 4, &[([0, 1, 0], 1), ([2, 1, 2], 1)]),
            t3(c(1, 2), 4, &[([0, 1, 2], 1), ([2, 1, 0], 1)]),
            t3(c(-1, 2), 3, &[([0, 1, 0], 1), ([2, 1, 0], 1), ([0, 0, 2], 1)]),
            t3(rat(1), 4, &[([1, 1, 2], 1), ([1, 1, 0], 1)]),
            t3(c(-1, 2), 3, &[([1, 1, 2], 1), ([0, 1, 0], 1), ([1, 0, 0], 1)]),
            t3(c(-1, 2), 3, &[([1, 1, 0], 2), ([0, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([1, 1, 0], 1), ([0, 1, 0], 1), ([1, 0, 2], 1)]),
            t3(
                rat(1),
                2,
                &[([1, 1, 0], 1), ([0, 1, 0], 1), ([1, 0, 0], 1), ([0, 0, 2], 1)],
            ),
            t3(c(-1, 2), 3, &[([1, 1, 0], 1), ([0, 1, 2], 1), ([1, 0, 0], 1)]),
        ]),
        // L13
        sum(vec![
            t3(c(1, 2), 4, &[([3, 0, 2], 1), ([0, 1, 0], 1)]),
            t3(c(1, 2), 4, &[([3, 0, 0], 1), ([0, 1, 2], 1)]),
            t3(c(-1, 2), 3, &[([3, 0, 0], 1), ([0, 1, 0], 1), ([0, 0, 2], 1)]),
            t3(c(1, 2), 4, &[([1, 1, 0], 1), ([2, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([2, 0, 2], 1), ([1, 0, 0], 1), ([0, 1, 0], 1)]),
            t3(c(1, 2), 4, &[([2, 1, 2], 1), ([2, 0, 0], 1)]),
            t3(c(-1, 2), 3, &[([1, 1, 0], 1), ([2, 0, 0], 1), ([0, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([2, 0, 0], 1), ([1, 0, 2], 1), ([0, 1, 0], 1)]),
            t3(
                rat(1),
                2,
                &[([2, 0, 0], 1), ([1, 0, 0], 1), ([0, 1, 0], 1), ([0, 0, 2], 1)],
            ),
            t3(c(-1, 2), 3, &[([2, 0, 0], 1), ([1, 0, 0], 1), ([0, 1, 2], 1)]),
        ]),
        // L14
        sum(vec![
            t3(c(1, 2), 4, &[([2, 1, 2], 1), ([1, 0, 0], 1)]),
            t3(c(1, 2), 4, &[([2, 1, 0], 1), ([1, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([2, 1, 0], 1), ([1, 0, 0], 1), ([0, 0, 2], 1)]),
            t3(c(1, 2), 4, &[([1, 1, 0], 1), ([2, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([2, 0, 2], 1), ([1, 0, 0], 1), ([0, 1, 0], 1)]),
            t3(c(1, 2), 4, &[([1, 1, 2], 1), ([2, 0, 0], 1)]),
            t3(c(-1, 2), 3, &[([1, 1, 0], 1), ([2, 0, 0], 1), ([0, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([2, 0, 0], 1), ([1, 0, 2], 1), ([0, 1, 0], 1)]),
            t3(
                rat(1),
                2,
                &[([2, 0, 0], 1), ([1, 0, 0], 1), ([0, 1, 0], 1), ([0, 0, 2], 1)],
            ),
            t3(c(-1, 2), 3, &[([2, 0, 0], 1), ([1, 0, 0], 1), ([0, 1, 2], 1)]),
        ]),
        // L15
        sum(vec![
            t3(c(1, 2), 4, &[([1, 2, 2], 1), ([0, 1, 0], 1)]),
            t3(c(1, 2), 4, &[([1, 2, 0], 1), ([0, 1, 2], 1)]),
            t3(c(-1, 2), 3, &[([1, 2, 0], 1), ([0, 1, 0], 1), ([0, 0, 2], 1)]),
            t3(c(1, 2), 4, &[([0, 2, 2], 1), ([1, 1, 0], 1)]),
            t3(c(-1, 2), 3, &[([0, 2, 2], 1), ([1, 0, 0], 1), ([0, 1, 0], 1)]),
            t3(c(1, 2), 4, &[([0, 2, 0], 1), ([1, 1, 2], 1)]),
            t3(c(-1, 2), 3, &[([0, 2, 0], 1), ([1, 1, 0], 1), ([0, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([0, 2, 0], 1), ([1, 0, 2], 1), ([0, 1, 0], 1)]),
            t3(
                rat(1),
                2,
                &[([0, 2, 0], 1), ([1, 0, 0], 1), ([0, 1, 0], 1), ([0, 0, 2], 1)],
            ),
            t3(c(-1, 2), 3, &[([0, 2, 0], 1), ([1, 0, 0], 1), ([0, 1, 2], 1)]),
        ]),
        // L16
        sum(vec![
            t3(c(1, 2), 4, &[([0, 3, 2], 1), ([1, 0, 0], 1)]),
            t3(c(1, 2), 4, &[([0, 3, 0], 1), ([1, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([0, 3, 0], 1), ([1, 0, 0], 1), ([0, 0, 2], 1)]),
            t3(c(1, 2), 4, &[([0, 2, 2], 1), ([1, 1, 0], 1)]),
            t3(c(-1, 2), 3, &[([0, 2, 2], 1), ([1, 0, 0], 1), ([0, 1, 0], 1)]),
            t3(c(1, 2), 4, &[([0, 2, 0], 1), ([1, 1, 2], 1)]),
            t3(c(-1, 2), 3, &[([0, 2, 0], 1), ([1, 1, 0], 1), ([0, 0, 2], 1)]),
            t3(c(-1, 2), 3, &[([0, 2, 0], 1), ([1, 0, 2], 1), ([0, 1, 0], 1)]),
            t3(
                rat(1),
                2,
                &[([0, 2, 0], 1), ([1, 0, 0], 1), ([0, 1, 0], 1), ([0, 0, 2], 1)],
            ),
            t3(c(-1, 2), 3, &[([0, 2, 0], 1), ([1, 0, 0], 1), ([0, 1, 2], 1)]),
        ]),
        // L17
        sum(vec![
            t3(c(1, 2), 3, &[([1, 1, 2], 1), ([1, 0, 0], 2)]),
            t3(rat(1), 3, &[([1, 1, 0], 1), ([1, 0, 0], 1), ([1, 0, 2], 1)]),
            t3(rat(-1), 2, &[([1, 1, 0], 1), ([1, 0, 0], 2), ([0, 0, 2], 1)]),
            t3(rat(1), 3, &[([2, 0, 0], 1), ([1, 0, 0], 1), ([0, 1, 2], 1)]),
            t3(rat(-1), 2, &[([0, 1, 2], 1), ([1, 0, 0], 3)]),
            t3(rat(1), 3, &[([2, 0, 2], 1), ([1, 0, 0], 1), ([0, 1, 0], 1)]),
            t3(
                rat(-2),
                2,
                &[([2, 0, 0], 1), ([1, 0, 0], 1), ([0, 1, 0], 1), ([0, 0, 2], 1)],
            ),
            t3(rat(1), 3, &[([2, 0, 0], 1), ([1, 0, 2], 1), ([0, 1, 0], 1)]),
            t3(rat(-3), 2, &[([0, 1, 0], 1), ([1, 0, 0], 2), ([1, 0, 2], 1)]),
            t3(rat(3), 1, &[([0, 1, 0], 1), ([1, 0, 0], 3), ([0, 0, 2], 1)]),
        ]),
        // L18
        sum(vec![
            t3(c(1, 2), 3, &[([1, 0, 0], 2), ([0, 2, 2], 1)]),
            t3(rat(1), 3, &[([1, 0, 0], 1), ([0, 2, 0], 1), ([1, 0, 2], 1)]),
            t3(rat(-1), 2, &[([1, 0, 0], 2), ([0, 2, 0], 1), ([0, 0, 2], 1)]),
            t3(rat(1), 3, &[([1, 1, 0], 1), ([0, 1, 2], 1), ([1, 0, 0], 1)]),
            t3(rat(-2), 2, &[([1, 0, 0], 2), ([0, 1, 0], 1), ([0, 1, 2], 1)]),
            t3(rat(1), 3, &[([1, 1, 2], 1), ([0, 1, 0], 1), ([1, 0, 0], 1)]),
            t3(
                rat(-2),
                2,
                &[([1, 1, 0], 1), ([0, 1, 0], 1), ([1, 0, 0], 1), ([0, 0, 2], 1)],
            ),
            t3(rat(1), 3, &[([1, 1, 0], 1), ([0, 1, 0], 1), ([1, 0, 2], 1)]),
            t3(rat(-2), 2, &[([1, 0, 0], 1), ([0, 1, 0], 2), ([1, 0, 2], 1)]),
            t3(rat(3), 1, &[([1, 0, 0], 2), ([0, 1, 0], 2), ([0, 0, 2], 1)]),
        ]),
        // L19
        sum(vec![
            t3(c(1, 2), 3, &[([0, 1, 0], 2), ([2, 0, 2], 1)]),
            t3(rat(1), 3, &[([0, 1, 0], 1), ([2, 0, 0], 1), ([0, 1, 2], 1)]),
            t3(rat(-1), 2, &[([0, 1, 0], 2), ([2, 0, 0], 1), ([0, 0, 2], 1)]),
            t3(rat(1), 3, &[([1, 1, 2], 1), ([0, 1, 0], 1), ([1, 0, 0], 1)]),
            t3(rat(1), 3, &[([1, 1, 0], 1), ([0, 1, 2], 1), ([1, 0, 0], 1)]),
            t3(rat(1), 3, &[([1, 1, 0], 1), ([0, 1, 0], 1), ([1, 0, 2], 1)]),
            t3(
                rat(-2),
                2,
                &[([1, 1, 0], 1), ([0, 1, 0], 1), ([1, 0, 0], 1), ([0, 0, 2], 1)],
            ),
            t3(rat(-2), 2, &[([1, 0, 0], 1), ([0, 1, 0], 2), ([1, 0, 2], 1)]),
            t3(rat(-2), 2, &[([1, 0, 0], 2), ([0, 1, 0], 1), ([0, 1, 2], 1)]),
            t3(rat(3), 1, &[([1, 0, 0], 2), ([0, 1, 0], 2), ([0, 0, 2], 1)]),
        ]),
        // L20
        sum(vec![
            t3(rat(1), 3, &[([0, 2, 2], 1), ([1, 0, 0], 1), ([0, 1, 0], 1)]),
            t3(rat(1), 3, &[([0, 2, 0], 1), ([1, 0, 0], 1), ([0, 1, 2], 1)]),
            t3(rat(1), 3, &[([0, 2, 0], 1), ([1, 0, 2], 1), ([0, 1, 0], 1)]),
            t3(
                rat(-2),
                2,
                &[([0, 2, 0], 1), ([1, 0, 0], 1), ([0, 1, 0], 1), ([0, 0, 2], 1)],
            ),
            t3(rat(1), 3, &[([1, 1, 0], 1), ([0, 1, 0], 1), ([0, 1, 2], 1)]),
            t3(rat(-3), 2, &[([0, 1, 2], 1), ([1, 0, 0], 1), ([0, 1, 0], 2)]),
            t3(c(1, 2), 3, &[([1, 1, 2], 1), ([0, 1, 0], 2)]),
            t3(rat(-1), 2, &[([1, 1, 0], 1), ([0, 1, 0], 2), ([0, 0, 2], 1)]),
            t3(rat(-1), 2, &[([1, 0, 2], 1), ([0, 1, 0], 3)]),
            t3(rat(3), 1, &[([1, 0, 0], 1), ([0, 1, 0], 3), ([0, 0, 2], 1)]),
        ]),
    ]
}

/// The six univariate third-order integration-by-parts constraints.
pub fn univariate_third_order() -> Vec<DiffForm> {
    let t = |coef: Rat, pairs: &[(u32, u32)]| DiffForm::term1(coef, pairs);
    vec![
        &t(rat(5), &[(0, 1), (1, 4), (2, 1)]) + &t(rat(-4), &[(1, 6)]),
        sum(vec![
            t(rat(2), &[(0, 3), (1, 1), (2, 1), (3, 1)]),
            t(rat(1), &[(0, 3), (2, 3)]),
            t(rat(-2), &[(0, 2), (1, 2), (2, 2)]),
        ]),
        sum(vec![
            t(rat(1), &[(0, 4), (1, 1), (5, 1)]),
            t(rat(1), &[(0, 4), (2, 1), (4, 1)]),
            t(rat(-1), &[(0, 3), (1, 2), (4, 1)]),
        ]),
        sum(vec![
            t(rat(1), &[(0, 3), (1, 2), (4, 1)]),
            t(rat(2), &[(0, 3), (1, 1), (2, 1), (3, 1)]),
            t(rat(-2), &[(0, 2), (1, 3), (3, 1)]),
        ]),
        sum(vec![
            t(rat(1), &[(0, 2), (1, 3), (3, 1)]),
            t(rat(3), &[(0, 2), (1, 2), (2, 2)]),
            t(rat(-3), &[(0, 1), (1, 4), (2, 1)]),
        ]),
        sum(vec![
            t(rat(1), &[(0, 4), (2, 1), (4, 1)]),
            t(rat(1), &[(0, 4), (3, 2)]),
            t(rat(-1), &[(0, 3), (1, 1), (2, 1), (3, 1)]),
        ]),
    ]
}

/// The fourteen univariate fourth-order integration-by-parts constraints.
pub fn univariate_fourth_order() -> Vec<DiffForm> {
    let t = |coef: Rat, pairs: &[(u32, u32)]| DiffForm::term1(coef, pairs);
    vec![
        // R1
        &t(rat(7), &[(0, 1), (1, 6), (2, 1)]) + &t(rat(-6), &[(1, 8)]),
        // R2
        sum(vec![
            t(rat(3), &[(0, 4), (1, 1), (2, 2), (3, 1)]),
            t(rat(1), &[(0, 4), (2, 4)]),
            t(rat(-3), &[(0, 3), (1, 2), (2, 3)]),
        ]),
        // R3
        sum(vec![
            t(rat(1), &[(0, 6), (1, 1), (7, 1)]),
            t(rat(1), &[(0, 6), (2, 1), (6, 1)]),
            t(rat(-1), &[(0, 5), (1, 2), (6, 1)]),
        ]),
        // R4
        sum(vec![
            t(rat(2), &[(0, 5), (1, 1), (3, 1), (4, 1)]),
            t(rat(1), &[(0, 5), (2, 1), (3, 2)]),
            t(rat(-2), &[(0, 4), (1, 2), (3, 2)]),
        ]),
        // R5
        sum(vec![
            t(rat(1), &[(0, 5), (1, 2), (6, 1)]),
            t(rat(2), &[(0, 5), (1, 1), (2, 1), (5, 1)]),
            t(rat(-2), &[(0, 4), (1, 3), (5, 1)]),
        ]),
        // R6
        sum(vec![
            t(rat(2), &[(0, 3), (1, 3), (2, 1), (3, 1)]),
            t(rat(3), &[(0, 3), (1, 2), (2, 3)]),
            t(rat(-4), &[(0, 2), (1, 4), (2, 2)]),
        ]),
        // R7
        sum(vec![
            t(rat(1), &[(0, 4), (1, 3), (5, 1)]),
            t(rat(3), &[(0, 4), (1, 2), (2, 1), (4, 1)]),
            t(rat(-3), &[(0, 3), (1, 4), (4, 1)]),
        ]),
        // R8
        sum(vec![
            t(rat(1), &[(0, 3), (1, 4), (4, 1)]),
            t(rat(4), &[(0, 3), (1, 3), (2, 1), (3, 1)]),
            t(rat(-4), &[(0, 2), (1, 5), (3, 1)]),
        ]),
        // R9
        sum(vec![
            t(rat(1), &[(0, 2), (1, 5), (3, 1)]),
            t(rat(5), &[(0, 2), (1, 4), (2, 2)]),
            t(rat(-5), &[(0, 1), (1, 6), (2, 1)]),
        ]),
        // R10
        sum(vec![
            t(rat(1), &[(0, 5), (2, 2), (4, 1)]),
            t(rat(2), &[(0, 5), (2, 1), (3, 2)]),
            t(rat(-2), &[(0, 4), (1, 1), (2, 2), (3, 1)]),
        ]),
        // R11
        sum(vec![
            t(rat(1), &[(0, 6), (3, 1), (5, 1)]),
            t(rat(1), &[(0, 6), (4, 2)]),
            t(rat(-1), &[(0, 5), (1, 1), (3, 1), (4, 1)]),
        ]),
        // R12
        sum(vec![
            t(rat(1), &[(0, 5), (1, 1), (2, 1), (5, 1)]),
            t(rat(1), &[(0, 5), (1, 1), (3, 1), (4, 1)]),
            t(rat(1), &[(0, 5), (2, 2), (4, 1)]),
            t(rat(-2), &[(0, 4), (1, 2), (2, 1), (4, 1)]),
        ]),
        // R13
        sum(vec![
            t(rat(1), &[(0, 6), (2, 1), (6, 1)]),
            t(rat(1), &[(0, 6), (3, 1), (5, 1)]),
            t(rat(-1), &[(0, 5), (1, 1), (2, 1), (5, 1)]),
        ]),
        // R14
        sum(vec![
            t(rat(1), &[(0, 4), (1, 2), (2, 1), (4, 1)]),
            t(rat(1), &[(0, 4), (1, 2), (3, 2)]),
            t(rat(2), &[(0, 4), (1, 1), (2, 2), (3, 1)]),
            t(rat(-3), &[(0, 3), (1, 3), (2, 1), (3, 1)]),
        ]),
    ]
}
