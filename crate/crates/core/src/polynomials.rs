//! Dense univariate polynomials over the rationals.
//!
//! A [`DensePolynomial`] stores coefficients by degree in one of two bases:
//! the monomial basis `1, x, x^2, ...` or the falling-factorial basis
//! `1, x^[1], x^[2], ...`. Conversions go through the Stirling matrices and
//! are exact.
//!
//! Two root finders live here. [`rational_roots`] deflates every rational root
//! found by the rational-root theorem and is exact. [`roots_numeric`] runs
//! Durand–Kerner iteration in double precision and is used only where the
//! roots may be irrational.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::{stirling1_table, stirling2};
use crate::error::{Error, Result};
use crate::{Complex64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    FallingFactorial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePolynomial {
    coeffs: Vec<Rational>,
    basis: Basis,
}

impl DensePolynomial {
    /// Builds a polynomial from coefficients indexed by degree; trailing
    /// zeros are dropped.
    pub fn new(mut coeffs: Vec<Rational>, basis: Basis) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs, basis }
    }

    pub fn monomial(coeffs: Vec<Rational>) -> Self {
        Self::new(coeffs, Basis::Monomial)
    }

    pub fn zero(basis: Basis) -> Self {
        Self {
            coeffs: Vec::new(),
            basis,
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(vec![c])
    }

    /// `∏ (x - r)` in the monomial basis.
    pub fn from_roots(roots: &[Rational]) -> Self {
        let mut coeffs = vec![Rational::one()];
        for r in roots {
            let mut next = vec![Rational::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            coeffs = next;
        }
        Self::monomial(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, degree: usize) -> Rational {
        self.coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Exact evaluation in the polynomial's own basis.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        match self.basis {
            Basis::Monomial => {
                for c in self.coeffs.iter().rev() {
                    acc = acc * x + c;
                }
            }
            Basis::FallingFactorial => {
                // β0 + x(β1 + (x-1)(β2 + (x-2)(...)))
                for (j, c) in self.coeffs.iter().enumerate().rev() {
                    acc = acc * (x - Rational::from_integer(BigInt::from(j))) + c;
                }
            }
        }
        acc
    }

    pub fn convert_basis(&self, target: Basis) -> Self {
        if self.basis == target || self.is_zero() {
            return Self::new(self.coeffs.clone(), target);
        }
        let deg = self.coeffs.len() - 1;
        let mut out = vec![Rational::zero(); deg + 1];
        match target {
            Basis::Monomial => {
                // x^[i] = Σ_j (-1)^{i-j} c(i, j) x^j
                let s1 = stirling1_table(deg as u32);
                for (i, beta) in self.coeffs.iter().enumerate() {
                    if beta.is_zero() {
                        continue;
                    }
                    for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                        let c = Rational::from_integer(s1[i][j].clone()) * beta;
                        if (i - j) % 2 == 1 {
                            *slot -= c;
                        } else {
                            *slot += c;
                        }
                    }
                }
            }
            Basis::FallingFactorial => {
                // x^i = Σ_m S(i, m) x^[m]
                for (i, a) in self.coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (m, slot) in out.iter_mut().enumerate().take(i + 1) {
                        let s2 = stirling2(i as u32, m as u32);
                        if !s2.is_zero() {
                            *slot += Rational::from_integer(s2) * a;
                        }
                    }
                }
            }
        }
        Self::new(out, target)
    }

    fn to_monomial(&self) -> Self {
        self.convert_basis(Basis::Monomial)
    }

    /// Sum, returned in the monomial basis.
    pub fn add(&self, other: &Self) -> Self {
        let a = self.to_monomial();
        let b = other.to_monomial();
        let len = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..len).map(|i| a.coeff(i) + b.coeff(i)).collect();
        Self::monomial(coeffs)
    }

    /// Product, returned in the monomial basis.
    pub fn mul(&self, other: &Self) -> Self {
        let a = self.to_monomial();
        let b = other.to_monomial();
        if a.is_zero() || b.is_zero() {
            return Self::zero(Basis::Monomial);
        }
        let mut coeffs = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                coeffs[i + j] += x * y;
            }
        }
        Self::monomial(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.basis)
    }

    /// Divides by `(x - r)` in the monomial basis, returning quotient and remainder.
    pub fn divide_linear(&self, r: &Rational) -> (Self, Rational) {
        let p = self.to_monomial();
        if p.is_zero() {
            return (p, Rational::zero());
        }
        let deg = p.coeffs.len() - 1;
        let mut quotient = vec![Rational::zero(); deg];
        let mut carry = Rational::zero();
        for i in (0..=deg).rev() {
            let value = &p.coeffs[i] + &carry * r;
            if i == 0 {
                return (Self::monomial(quotient), value);
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    fn to_complex_coeffs(&self) -> Vec<Complex64> {
        self.to_monomial()
            .coeffs
            .iter()
            .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
            .collect()
    }
}

impl fmt::Display for DensePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var = |j: usize| match (self.basis, j) {
            (_, 0) => String::new(),
            (Basis::Monomial, 1) => "x".to_string(),
            (Basis::Monomial, _) => format!("x^{j}"),
            (Basis::FallingFactorial, _) => format!("x^[{j}]"),
        };
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let v = var(j);
            if v.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{v}")?;
            } else {
                write!(f, "({mag})*{v}")?;
            }
        }
        Ok(())
    }
}

/// Output of [`roots_numeric`].
#[derive(Clone, Debug)]
pub struct NumericRoots {
    pub roots: Vec<Complex64>,
    /// `|p(root)|` for each root, same order.
    pub residuals: Vec<f64>,
    pub iterations: usize,
}

pub const MAX_DURAND_KERNER_ITERATIONS: usize = 1000;

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// Bound on the rounding error of evaluating `p` at `z` by Horner's rule.
fn horner_error_bound(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    let magnitude = coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm());
    4.0 * coeffs.len() as f64 * f64::EPSILON * magnitude
}

/// All complex roots (with multiplicity) by Durand–Kerner iteration.
///
/// Initial guesses sit on a circle of radius `1 + max |a_i / a_n|` with an
/// irrational angular offset. Iteration stops when every root moved less than
/// `tol`, or when every residual is already at the rounding-error floor of
/// its Horner evaluation. Clustered roots of a multiple root are returned as
/// they are.
pub fn roots_numeric(p: &DensePolynomial, tol: f64) -> Result<NumericRoots> {
    match p.degree() {
        Some(d) if d >= 1 => {}
        _ => {
            return Err(Error::Precondition(
                "numeric root finding needs a polynomial of degree >= 1".into(),
            ))
        }
    }
    durand_kerner(&p.to_complex_coeffs(), tol)
}

/// [`roots_numeric`] on complex coefficients indexed by degree.
pub fn durand_kerner(coeffs: &[Complex64], tol: f64) -> Result<NumericRoots> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
        coeffs.pop();
    }
    if coeffs.len() < 2 {
        return Err(Error::Precondition(
            "numeric root finding needs a polynomial of degree >= 1".into(),
        ));
    }
    let degree = coeffs.len() - 1;
    if coeffs
        .iter()
        .any(|c| !(c.re.is_finite() && c.im.is_finite()))
    {
        return Err(Error::Precondition(
            "coefficients do not fit in double precision".into(),
        ));
    }
    let lead = coeffs[degree];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();

    let radius = 1.0 + monic[..degree].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..degree)
        .map(|i| {
            let angle = std::f64::consts::TAU * i as f64 / degree as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let residuals_of =
        |z: &[Complex64]| -> Vec<f64> { z.iter().map(|&r| horner(&coeffs, r).norm()).collect() };

    for iteration in 1..=MAX_DURAND_KERNER_ITERATIONS {
        let mut max_step: f64 = 0.0;
        for i in 0..degree {
            let zi = z[i];
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    denom *= zi - zj;
                }
            }
            if denom.norm() == 0.0 {
                // Coincident iterates: nudge apart.
                denom = Complex64::new(f64::EPSILON, f64::EPSILON);
            }
            let step = horner(&monic, zi) / denom;
            if step.re.is_finite() && step.im.is_finite() {
                z[i] = zi - step;
                max_step = max_step.max(step.norm());
            }
        }
        let at_floor = z
            .iter()
            .all(|&r| horner(&monic, r).norm() <= horner_error_bound(&monic, r));
        if max_step < tol || at_floor {
            let residuals = residuals_of(&z);
            return Ok(NumericRoots {
                roots: z,
                residuals,
                iterations: iteration,
            });
        }
    }
    let residuals = residuals_of(&z);
    let max_residual = residuals.iter().cloned().fold(0.0, f64::max);
    Err(Error::NonConvergence {
        iterations: MAX_DURAND_KERNER_ITERATIONS,
        best: z,
        residuals,
        max_residual,
    })
}

/// Upper limit on rational-root candidates `±p/q` tried by [`rational_roots`].
pub const MAX_RATIONAL_ROOT_CANDIDATES: usize = 1_000_000;

/// Largest trial divisor used when factoring the extreme coefficients.
const TRIAL_DIVISION_LIMIT: u64 = 10_000_000;

/// Deflates every rational root of `p`.
///
/// Returns the roots (with multiplicity, ascending) and the remainder, so that
/// `∏ (x - r) · remainder == p`. The remainder keeps `p`'s leading coefficient
/// and has no rational roots.
pub fn rational_roots(p: &DensePolynomial) -> Result<(Vec<Rational>, DensePolynomial)> {
    let mut rest = p.to_monomial();
    if rest.is_zero() {
        return Err(Error::Precondition(
            "zero polynomial has no finite root set".into(),
        ));
    }
    let mut roots = Vec::new();

    // Zero roots first so the constant term is nonzero below.
    while rest.coeffs.len() > 1 && rest.coeffs[0].is_zero() {
        roots.push(Rational::zero());
        rest = drop_zero_root(&rest);
    }
    if rest.coeffs.len() <= 1 {
        return Ok((roots, rest));
    }

    let ints = integer_coefficients(&rest);
    let a0 = ints[0].abs();
    let an = ints[ints.len() - 1].abs();
    let num_divs = divisors(&a0)?;
    let den_divs = divisors(&an)?;
    let count = 2usize
        .saturating_mul(num_divs.len())
        .saturating_mul(den_divs.len());
    if count > MAX_RATIONAL_ROOT_CANDIDATES {
        return Err(Error::DivisorSearchOverflow {
            cap: MAX_RATIONAL_ROOT_CANDIDATES,
        });
    }

    let mut candidates: Vec<Rational> = Vec::with_capacity(count);
    for q in &den_divs {
        for num in &num_divs {
            let c = Rational::new(num.clone(), q.clone());
            if c.denom() == q {
                candidates.push(-c.clone());
                candidates.push(c);
            }
        }
    }
    candidates.sort();
    candidates.dedup();

    for c in candidates {
        loop {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            let (quotient, remainder) = rest.divide_linear(&c);
            if !remainder.is_zero() {
                break;
            }
            roots.push(c.clone());
            rest = quotient;
        }
    }
    roots.sort();
    Ok((roots, rest))
}

fn drop_zero_root(p: &DensePolynomial) -> DensePolynomial {
    DensePolynomial::monomial(p.coeffs[1..].to_vec())
}

/// Primitive integer polynomial proportional to `p`.
fn integer_coefficients(p: &DensePolynomial) -> Vec<BigInt> {
    let lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let scaled: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = scaled.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    scaled.into_iter().map(|c| c / &content).collect()
}

/// Positive divisors of `n > 0`, ascending, by trial division.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut rest = n.clone();
    let mut d: u64 = 2;
    while BigInt::from(d) * BigInt::from(d) <= rest {
        if d > TRIAL_DIVISION_LIMIT {
            return Err(Error::DivisorSearchOverflow {
                cap: MAX_RATIONAL_ROOT_CANDIDATES,
            });
        }
        let bd = BigInt::from(d);
        let mut e = 0;
        while (&rest % &bd).is_zero() {
            rest /= &bd;
            e += 1;
        }
        if e > 0 {
            factors.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut power = BigInt::one();
            for _ in 0..=e {
                next.push(d * &power);
                power *= &prime;
            }
        }
        divs = next;
        if divs.len() > MAX_RATIONAL_ROOT_CANDIDATES {
            return Err(Error::DivisorSearchOverflow {
                cap: MAX_RATIONAL_ROOT_CANDIDATES,
            });
        }
    }
    divs.sort();
    Ok(divs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn mono(c: &[i64]) -> DensePolynomial {
        DensePolynomial::monomial(c.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn convert_basis_examples() {
        let falling = DensePolynomial::new(vec![rat(0), rat(0), rat(1)], Basis::FallingFactorial);
        assert_eq!(falling.convert_basis(Basis::Monomial), mono(&[0, -1, 1]));

        let square = mono(&[0, 0, 1]);
        let f = square.convert_basis(Basis::FallingFactorial);
        assert_eq!(f.basis(), Basis::FallingFactorial);
        assert_eq!(f.coeffs(), &[rat(0), rat(1), rat(1)]);

        let zero = DensePolynomial::zero(Basis::Monomial);
        assert!(zero.convert_basis(Basis::FallingFactorial).is_zero());
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let p = mono(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(mono(&[0, 0]).degree(), None);
    }

    #[test]
    fn eval_examples() {
        let p = mono(&[6, -5, 1]);
        assert_eq!(p.eval(&rat(2)), rat(0));
        assert_eq!(p.eval(&rat(0)), rat(6));
        assert_eq!(mono(&[-2, 1]).eval(&ratio(7, 2)), ratio(3, 2));
    }

    #[test]
    fn eval_in_falling_basis() {
        let f = DensePolynomial::new(vec![rat(1), rat(2), rat(3)], Basis::FallingFactorial);
        // 1 + 2x + 3x(x-1) at x = 5/2 is 1 + 5 + 3*(5/2)(3/2)
        assert_eq!(f.eval(&ratio(5, 2)), rat(6) + ratio(45, 4));
    }

    #[test]
    fn display() {
        assert_eq!(mono(&[6, -5, 1]).to_string(), "x^2 - (5)*x + 6");
        assert_eq!(DensePolynomial::zero(Basis::Monomial).to_string(), "0");
    }

    #[test]
    fn numeric_roots_simple() {
        let r = roots_numeric(&mono(&[-1, 0, 1]), 1e-12).unwrap();
        let mut re: Vec<f64> = r.roots.iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        assert!((re[0] + 1.0).abs() < 1e-10);
        assert!((re[1] - 1.0).abs() < 1e-10);
        assert!(r.roots.iter().all(|z| z.im.abs() < 1e-10));
    }

    #[test]
    fn numeric_roots_of_triple_root_cluster_near_one() {
        let p = mono(&[-1, 3, -3, 1]);
        let roots = match roots_numeric(&p, 1e-12) {
            Ok(r) => r.roots,
            Err(Error::NonConvergence { best, .. }) => best,
            Err(e) => panic!("{e}"),
        };
        assert_eq!(roots.len(), 3);
        for z in roots {
            assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-3, "{z}");
        }
    }

    #[test]
    fn numeric_roots_quintic() {
        let p = mono(&[-120, 274, -225, 85, -15, 1]);
        let r = roots_numeric(&p, 1e-12).unwrap();
        let mut re: Vec<f64> = r.roots.iter().map(|z| z.re).collect();
        re.sort_by(f64::total_cmp);
        for (i, v) in re.iter().enumerate() {
            assert!((v - (i + 1) as f64).abs() < 1e-8, "{re:?}");
        }
        assert!(r.residuals.iter().all(|&e| e < 1e-6));
    }

    #[test]
    fn numeric_roots_rejects_constants() {
        assert!(roots_numeric(&mono(&[3]), 1e-9).is_err());
    }

    #[test]
    fn rational_roots_examples() {
        let (roots, rem) = rational_roots(&mono(&[6, -5, 1])).unwrap();
        assert_eq!(roots, vec![rat(2), rat(3)]);
        assert_eq!(rem, mono(&[1]));

        let (roots, rem) = rational_roots(&mono(&[-2, 0, 1])).unwrap();
        assert!(roots.is_empty());
        assert_eq!(rem, mono(&[-2, 0, 1]));

        let (roots, rem) = rational_roots(&mono(&[1, -3, 2])).unwrap();
        assert_eq!(roots, vec![ratio(1, 2), rat(1)]);
        assert_eq!(rem, mono(&[2]));
    }

    #[test]
    fn rational_roots_with_zero_and_repeated_roots() {
        let p = DensePolynomial::from_roots(&[rat(0), rat(0), rat(-3), rat(-3), ratio(2, 3)]);
        let (roots, rem) = rational_roots(&p).unwrap();
        assert_eq!(roots, vec![rat(-3), rat(-3), rat(0), rat(0), ratio(2, 3)]);
        assert_eq!(rem, mono(&[1]));
    }

    #[test]
    fn divide_linear_reconstructs() {
        let p = mono(&[5, 0, -2, 7]);
        let r = ratio(-3, 2);
        let (q, rem) = p.divide_linear(&r);
        let back = q.mul(&mono(&[0, 1]).add(&DensePolynomial::constant(-r.clone())));
        assert_eq!(back.add(&DensePolynomial::constant(rem)), p);
    }
}
