//! Exact Gaussian-moment validation.
//!
//! For a centered diagonal Gaussian density `p(x) = Π_a g_{v_a}(x_a)`,
//! every derivative is a polynomial multiple of the density itself:
//! `d^k g/dx^k = q_k(x) g(x)` with `q_0 = 1` and
//! `q_{k+1} = q_k' − (x/v) q_k`. A monomial of derivatives of degree `2m`
//! divided by `p^{2m−1}` therefore reduces to `polynomial · p`, and its
//! integral evaluates in closed form through the moments
//! `E[x^{2k}] = (2k−1)!! v^k`, `E[x^{odd}] = 0` — exact rational
//! arithmetic end to end.
//!
//! This gives a validation path independent of the constraint pipeline:
//! generated constraints must integrate to exactly zero, and the
//! entropy-derivative targets must match the closed form
//! `d^m H/dt^m = (−1)^{m−1} (m−1)!/2 · Σ_a v_a^{−m}` for Gaussians.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::diffalg::{rat, DiffForm, Rat};
use crate::targets::{Sense, TargetProblem};

/// A centered diagonal Gaussian, one positive rational variance per
/// coordinate (any heat-flow time is folded into the variances).
#[derive(Debug, Clone)]
pub struct GaussianSpec {
    variances: Vec<Rat>,
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("variances must be positive")]
    BadVariance,
    #[error("form of dimension {form} against a {spec}-dimensional Gaussian")]
    DimensionMismatch { form: usize, spec: usize },
    #[error("form is not homogeneous of degree {0}")]
    NotHomogeneous(u32),
}

impl GaussianSpec {
    pub fn new(variances: Vec<Rat>) -> Result<Self, OracleError> {
        if variances.is_empty() || variances.iter().any(|v| *v <= Rat::zero()) {
            return Err(OracleError::BadVariance);
        }
        Ok(GaussianSpec { variances })
    }

    pub fn isotropic(n: usize, v: Rat) -> Result<Self, OracleError> {
        Self::new(vec![v; n])
    }

    pub fn dimension(&self) -> usize {
        self.variances.len()
    }

    pub fn variances(&self) -> &[Rat] {
        &self.variances
    }
}

/// Dense univariate polynomial with rational coefficients, index = power.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Poly(Vec<Rat>);

impl Poly {
    fn one() -> Self {
        Poly(vec![Rat::one()])
    }

    fn normalize(mut self) -> Self {
        while self.0.last().map_or(false, |c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly(vec![]);
        }
        let mut out = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out).normalize()
    }

    fn derivative(&self) -> Poly {
        if self.0.len() <= 1 {
            return Poly(vec![]);
        }
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
        .normalize()
    }

    /// Subtract `(x/v) · self`, then add the derivative: the quotient
    /// recurrence `q_{k+1} = q_k' − (x/v) q_k`.
    fn quotient_step(&self, v: &Rat) -> Poly {
        let mut shifted = vec![Rat::zero()];
        shifted.extend(self.0.iter().map(|c| -(c / v)));
        let mut out = Poly(shifted);
        for (k, c) in self.derivative().0.into_iter().enumerate() {
            if out.0.len() <= k {
                out.0.resize(k + 1, Rat::zero());
            }
            out.0[k] += c;
        }
        out.normalize()
    }
}

/// `q_k` for the 1-D Gaussian of variance `v`: `g^{(k)} = q_k · g`.
fn hermite_quotient(k: u32, v: &Rat) -> Poly {
    let mut q = Poly::one();
    for _ in 0..k {
        q = q.quotient_step(v);
    }
    q
}

/// `E[x^k]` for the centered 1-D Gaussian of variance `v`.
fn moment(k: usize, v: &Rat) -> Rat {
    if k % 2 == 1 {
        return Rat::zero();
    }
    let mut out = Rat::one();
    let mut i = k as i64 - 1;
    while i > 0 {
        out *= rat(i);
        i -= 2;
    }
    for _ in 0..k / 2 {
        out *= v;
    }
    out
}

fn expectation(poly: &Poly, v: &Rat) -> Rat {
    poly.0
        .iter()
        .enumerate()
        .map(|(k, c)| c * moment(k, v))
        .fold(Rat::zero(), |acc, t| acc + t)
}

/// Exact value of `∫ form / p^{2m−1} dx` for a diagonal Gaussian.
///
/// The form must be homogeneous of degree `2m`, so exactly one density
/// factor survives and the integral is a plain rational number.
pub fn gaussian_expectation(
    form: &DiffForm,
    m: u32,
    spec: &GaussianSpec,
) -> Result<Rat, OracleError> {
    if form.dimension() != spec.dimension() {
        return Err(OracleError::DimensionMismatch {
            form: form.dimension(),
            spec: spec.dimension(),
        });
    }
    if !form.terms().all(|(mono, _)| mono.degree() == 2 * m) {
        return Err(OracleError::NotHomogeneous(2 * m));
    }
    let n = spec.dimension();
    let mut total = Rat::zero();
    for (mono, coef) in form.terms() {
        let mut value = coef.clone();
        for a in 0..n {
            let v = &spec.variances[a];
            let mut qa = Poly::one();
            for (d, e) in mono.factors() {
                let q = hermite_quotient(d.multi_index()[a], v);
                for _ in 0..*e {
                    qa = qa.mul(&q);
                }
            }
            value *= expectation(&qa, v);
            if value.is_zero() {
                break;
            }
        }
        total += value;
    }
    Ok(total)
}

/// Closed form of `d^m H/dt^m` for the diagonal Gaussian:
/// `(−1)^{m−1} (m−1)!/2 · Σ_a v_a^{−m}`.
pub fn entropy_derivative_closed_form(m: u32, spec: &GaussianSpec) -> Rat {
    let mut fact = Rat::one();
    for i in 1..i64::from(m) {
        fact *= rat(i);
    }
    let sign = if m % 2 == 1 { rat(1) } else { rat(-1) };
    let mut sum = Rat::zero();
    for v in &spec.variances {
        let mut vm = Rat::one();
        for _ in 0..m {
            vm *= v;
        }
        sum += vm.recip();
    }
    sign * fact * sum / rat(2)
}

/// Outcome of checking a target's sign on a batch of Gaussians.
#[derive(Debug, Clone)]
pub struct SignReport {
    pub values: Vec<Rat>,
    pub all_satisfy: bool,
}

/// Evaluate the target on each Gaussian and check the demanded sign.
/// Gaussians satisfy every claim in scope, so a violation indicates a
/// pipeline bug rather than a counterexample.
pub fn sign_check(
    target: &TargetProblem,
    specs: &[GaussianSpec],
) -> Result<SignReport, OracleError> {
    let mut values = Vec::with_capacity(specs.len());
    let mut ok = true;
    for spec in specs {
        let value = gaussian_expectation(&target.target, target.m, spec)?;
        ok &= match target.sense {
            Sense::Nonnegative => value >= Rat::zero(),
            Sense::Nonpositive => value <= Rat::zero(),
        };
        values.push(value);
    }
    Ok(SignReport {
        values,
        all_satisfy: ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffalg::ratio;
    use crate::targets::{build_f, build_j2, build_target, ProblemKind};

    fn iso(n: usize, num: i64, den: i64) -> GaussianSpec {
        GaussianSpec::isotropic(n, ratio(num, den)).unwrap()
    }

    #[test]
    fn quotient_recurrence_small_orders() {
        // v = 1: q1 = −x, q2 = x² − 1, q3 = −x³ + 3x
        let v = rat(1);
        assert_eq!(hermite_quotient(1, &v), Poly(vec![rat(0), rat(-1)]));
        assert_eq!(hermite_quotient(2, &v), Poly(vec![rat(-1), rat(0), rat(1)]));
        assert_eq!(
            hermite_quotient(3, &v),
            Poly(vec![rat(0), rat(3), rat(0), rat(-1)])
        );
    }

    #[test]
    fn first_derivative_energy() {
        // ∫ (1/2) f₁²/f dx = 1/(2v)
        let f = build_f(1, 1).unwrap();
        let got = gaussian_expectation(&f, 1, &iso(1, 1, 1)).unwrap();
        assert_eq!(got, ratio(1, 2));
        let got2 = gaussian_expectation(&f, 1, &iso(1, 3, 1)).unwrap();
        assert_eq!(got2, ratio(1, 6));
    }

    #[test]
    fn matches_entropy_closed_form() {
        for m in 1..=4u32 {
            for n in 1..=3usize {
                for (num, den) in [(1i64, 1i64), (2, 1), (5, 3)] {
                    let spec = iso(n, num, den);
                    let f = build_f(m, n).unwrap();
                    let got = gaussian_expectation(&f, m, &spec).unwrap();
                    let want = entropy_derivative_closed_form(m, &spec);
                    assert_eq!(got, want, "m = {m}, n = {n}, v = {num}/{den}");
                }
            }
        }
    }

    #[test]
    fn anisotropic_third_derivative() {
        // variances (1, 2): (m−1)!/2 · (1 + 1/8) = 9/8
        let spec = GaussianSpec::new(vec![rat(1), rat(2)]).unwrap();
        let f = build_f(3, 2).unwrap();
        assert_eq!(
            gaussian_expectation(&f, 3, &spec).unwrap(),
            ratio(9, 8)
        );
    }

    #[test]
    fn linearity() {
        let a = build_f(2, 2).unwrap();
        let b = build_j2(2);
        let spec = GaussianSpec::new(vec![ratio(2, 3), ratio(7, 2)]).unwrap();
        let combo = &a.scaled(&ratio(3, 5)) + &b.scaled(&ratio(-2, 7));
        let lhs = gaussian_expectation(&combo, 2, &spec).unwrap();
        let rhs = ratio(3, 5) * gaussian_expectation(&a, 2, &spec).unwrap()
            + ratio(-2, 7) * gaussian_expectation(&b, 2, &spec).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn concavity_target_signs() {
        let t = build_target(ProblemKind::CostaConcrete, 2, 1).unwrap();
        let specs = vec![iso(1, 1, 1), iso(1, 2, 1), iso(1, 5, 3)];
        let report = sign_check(&t, &specs).unwrap();
        assert!(report.all_satisfy);
        let t32 = build_target(ProblemKind::Dmn, 3, 2).unwrap();
        let report = sign_check(&t32, &[GaussianSpec::new(vec![rat(1), rat(2)]).unwrap()])
            .unwrap();
        assert!(report.all_satisfy);
        assert_eq!(report.values[0], ratio(9, 8));
    }

    #[test]
    fn generated_constraints_vanish() {
        let specs = [
            GaussianSpec::new(vec![rat(1), rat(2)]).unwrap(),
            GaussianSpec::new(vec![ratio(1, 2), ratio(7, 3)]).unwrap(),
        ];
        for c in crate::constraints::constraint_suite(2, 2).unwrap() {
            for spec in &specs {
                assert_eq!(
                    gaussian_expectation(&c.form, 2, spec).unwrap(),
                    Rat::zero(),
                    "constraint {} fails to vanish",
                    c.provenance
                );
            }
        }
    }
}
