//! Moser polynomials and the expansion of `p_k(A^(s))` in power sums of `A`.
//!
//! The Moser polynomial is
//!
//! ```text
//! F_{s,k}(x) = Σ_{j=1}^{s} (-1)^{j-1} j^{k-1} C(x, s-j)
//! ```
//!
//! and for `n >= max(s, k)` its value at `n` is the coefficient of `p_k(A)` in
//! `p_k(A^(s))`. The full expansion `Q_{s,k,n} = Σ_λ c_λ p_λ` runs over
//! partitions `λ` of `k`; [`c_lambda`] evaluates each coefficient from a sum
//! over compositions and [`c_lambda_alt`] is a second, independently indexed
//! form of the same sum.
//!
//! The `check_*` functions evaluate the known identities between these
//! objects exactly and report whether they hold.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    binomial, binomial_int, eulerian, factorial, for_each_composition, partitions_of,
    stirling1_table, stirling2, Partition,
};
use crate::error::{Error, Result};
use crate::polynomials::DensePolynomial;
use crate::Rational;

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn big(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// `F_{s,k}(x)` from its defining sum. `s = 0` gives the empty sum, zero.
pub fn moser_value(s: u32, k: u32, x: &Rational) -> Rational {
    // C(x, i) for i = 0..s-1, built incrementally.
    let mut binomials = Vec::with_capacity(s as usize);
    let mut c = Rational::one();
    for i in 0..s {
        binomials.push(c.clone());
        c = c * (x - int(i as i64)) / int(i as i64 + 1);
    }
    let mut acc = Rational::zero();
    for j in 1..=s {
        let term = big(BigInt::from(j).pow(k.saturating_sub(1))) * &binomials[(s - j) as usize];
        if j % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `F_{s,k}(x)` written through Eulerian numbers:
/// `(-1)^{s-1} Σ_{j=0}^{s-1} (-1)^j <k-1, s-j-1> C(x-k, j)`.
pub fn moser_value_eulerian_form(s: u32, k: u32, x: &Rational) -> Rational {
    if s == 0 {
        return Rational::zero();
    }
    let shifted = x - int(k as i64);
    let mut acc = Rational::zero();
    for j in 0..s {
        let e = eulerian(k - 1, (s - j - 1) as i64);
        if e.is_zero() {
            continue;
        }
        let term = big(e) * binomial(&shifted, j as i64);
        if j % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    if (s - 1) % 2 == 1 {
        -acc
    } else {
        acc
    }
}

/// The two Stirling-number forms of `F_{s,k}(x)`:
///
/// ```text
/// Σ_{i=1}^{k} (-1)^{i-1} (i-1)! S(k, i) C(x-i, s-i)
/// Σ_{i=0}^{k-1} (-1)^{i+k-1} i! S(k-1, i) C(x-i-1, s-1)
/// ```
///
/// The second sum starts at `i = 0`; that term only survives for `k = 1`.
pub fn moser_value_stirling_forms(s: u32, k: u32, x: &Rational) -> (Rational, Rational) {
    if s == 0 {
        return (Rational::zero(), Rational::zero());
    }
    let mut first = Rational::zero();
    for i in 1..=k {
        let st = stirling2(k, i);
        if st.is_zero() {
            continue;
        }
        let term = big(factorial(i - 1) * st) * binomial(&(x - int(i as i64)), s as i64 - i as i64);
        if (i - 1) % 2 == 1 {
            first -= term;
        } else {
            first += term;
        }
    }

    let mut second = Rational::zero();
    for i in 0..k {
        let st = stirling2(k - 1, i);
        if st.is_zero() {
            continue;
        }
        let term = big(factorial(i) * st) * binomial(&(x - int(i as i64 + 1)), s as i64 - 1);
        if (i + k - 1) % 2 == 1 {
            second -= term;
        } else {
            second += term;
        }
    }
    (first, second)
}

/// Moser polynomial `F_{s,k}` in the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoserPolynomial {
    pub s: u32,
    pub k: u32,
    pub poly: DensePolynomial,
}

impl MoserPolynomial {
    /// `(s-1)! F_{s,k}(x)`, which has integer coefficients.
    pub fn normalized(&self) -> Vec<BigInt> {
        let scale = big(factorial(self.s - 1));
        self.poly
            .coeffs()
            .iter()
            .map(|c| {
                let v = c * &scale;
                assert!(
                    v.is_integer(),
                    "normalized Moser coefficient {v} is not an integer"
                );
                v.to_integer()
            })
            .collect()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.poly.eval(x)
    }
}

/// Monomial coefficients of `F_{s,k}`:
/// coefficient of `x^j` is `(-1)^{s+j-1} Σ_{i=j}^{s-1} (s-i)^{k-1} c(i, j) / i!`.
pub fn moser_coefficients(s: u32, k: u32) -> Result<MoserPolynomial> {
    if s == 0 || k == 0 {
        return Err(Error::Precondition(format!(
            "Moser polynomial needs s >= 1 and k >= 1, got s = {s}, k = {k}"
        )));
    }
    let s1 = stirling1_table(s);
    let mut coeffs = Vec::with_capacity(s as usize);
    for j in 0..s {
        let mut inner = Rational::zero();
        for i in j..s {
            let c = &s1[i as usize][j as usize];
            if c.is_zero() {
                continue;
            }
            inner += big(BigInt::from(s - i).pow(k - 1) * c) / big(factorial(i));
        }
        coeffs.push(if (s + j - 1) % 2 == 1 { -inner } else { inner });
    }
    Ok(MoserPolynomial {
        s,
        k,
        poly: DensePolynomial::monomial(coeffs),
    })
}

fn check_partition(k: u32, lam: &Partition) -> Result<()> {
    if lam.weight() != k {
        return Err(Error::WeightMismatch {
            parts: lam.parts().to_vec(),
            expected: k,
            actual: lam.weight(),
        });
    }
    Ok(())
}

fn check_indices(s: u32, k: u32, n: u32) -> Result<()> {
    if s == 0 || k == 0 || n == 0 {
        return Err(Error::Precondition(format!(
            "s, k, n must be positive, got s = {s}, k = {k}, n = {n}"
        )));
    }
    if k > n || s > n {
        return Err(Error::Precondition(format!(
            "the expansion requires k <= n and s <= n, got s = {s}, k = {k}, n = {n}"
        )));
    }
    Ok(())
}

/// `λ_1! ... λ_d! δ_1! ... δ_q!`
fn multinomial_denominator(lam: &Partition) -> BigInt {
    let parts = lam.parts().iter().map(|&p| factorial(p));
    let mults = lam.multiplicities().into_iter().map(factorial);
    parts.chain(mults).product()
}

/// `Σ_{m ∈ compositions(t, d)} ∏ m_i^{λ_i - 1}`
fn composition_power_sum(t: u32, lam: &Partition) -> BigInt {
    let mut acc = BigInt::zero();
    for_each_composition(t, lam.len() as u32, |m| {
        let term: BigInt = m
            .iter()
            .zip(lam.parts())
            .map(|(&mi, &li)| BigInt::from(mi).pow(li - 1))
            .product();
        acc += term;
    });
    acc
}

/// Multiplies the signed composition sum by `k!`, divides by the multinomial
/// denominator, and insists the division is exact.
fn finish_coefficient(k: u32, lam: &Partition, sum: BigInt) -> BigInt {
    let numerator = factorial(k) * sum;
    let (q, r) = numerator.div_rem(&multinomial_denominator(lam));
    assert!(
        r.is_zero(),
        "c_lambda for {lam}: prefactor division left remainder {r}"
    );
    q
}

/// Coefficient of `p_λ` in `p_k(A^(s))` for an `n`-multiset `A`:
///
/// ```text
/// c_λ = (-1)^{s+d} k! / (∏ λ_i! ∏ δ_j!) · Σ_{p=0}^{s} (-1)^p C(n, p) Σ_{M} ∏ m_i^{λ_i - 1}
/// ```
///
/// with `M` over length-`d` compositions of `s - p`.
pub fn c_lambda(s: u32, k: u32, n: u32, lam: &Partition) -> Result<BigInt> {
    check_indices(s, k, n)?;
    check_partition(k, lam)?;
    let d = lam.len() as u32;
    if d > s {
        return Ok(BigInt::zero());
    }
    let mut sum = BigInt::zero();
    for p in 0..=(s - d) {
        let inner = composition_power_sum(s - p, lam);
        if inner.is_zero() {
            continue;
        }
        let term = binomial_int(n as i64, p as i64) * inner;
        if p % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    if (s + d) % 2 == 1 {
        sum = -sum;
    }
    Ok(finish_coefficient(k, lam, sum))
}

/// Same coefficient, summed over compositions `M` of every total `|M| <= s`
/// with weight `(-1)^{|M|} C(n, s - |M|)` and overall sign `(-1)^d`.
pub fn c_lambda_alt(s: u32, k: u32, n: u32, lam: &Partition) -> Result<BigInt> {
    check_indices(s, k, n)?;
    check_partition(k, lam)?;
    let d = lam.len() as u32;
    let mut sum = BigInt::zero();
    for total in 1..=s {
        let inner = composition_power_sum(total, lam);
        if inner.is_zero() {
            continue;
        }
        let term = binomial_int(n as i64, (s - total) as i64) * inner;
        if total % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    if d % 2 == 1 {
        sum = -sum;
    }
    Ok(finish_coefficient(k, lam, sum))
}

/// `Q_{s,k,n}`: the expansion of `p_k(A^(s))` as `Σ_λ c_λ p_λ(A)`.
///
/// Terms are kept in partition enumeration order (reverse-lexicographic) and
/// zero coefficients are omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPolynomial {
    pub s: u32,
    pub k: u32,
    pub n: u32,
    terms: Vec<(Partition, BigInt)>,
}

impl QPolynomial {
    pub fn terms(&self) -> &[(Partition, BigInt)] {
        &self.terms
    }

    pub fn coefficient(&self, lam: &Partition) -> BigInt {
        self.terms
            .iter()
            .find(|(p, _)| p == lam)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// `M_{s,k,n}`, the coefficient of the one-part partition `{k}`.
    pub fn top_coefficient(&self) -> BigInt {
        match self.terms.first() {
            Some((p, c)) if p.len() == 1 => c.clone(),
            _ => BigInt::zero(),
        }
    }

    /// `Q̃_{s,k,n}`: every term except `{k}`.
    pub fn without_top(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.len() > 1)
                .cloned()
                .collect(),
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&QPolynomialJson::from(self)).expect("QPolynomial serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: QPolynomialJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let lam = Partition::new(t.partition)?;
            check_partition(raw.k, &lam)?;
            let coeff: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            if !coeff.is_zero() {
                terms.push((lam, coeff));
            }
        }
        let order = partitions_of(raw.k);
        terms.sort_by_key(|(p, _)| order.iter().position(|q| q == p));
        Ok(Self {
            s: raw.s,
            k: raw.k,
            n: raw.n,
            terms,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct QPolynomialJson {
    s: u32,
    k: u32,
    n: u32,
    terms: Vec<TermJson>,
}

impl From<&QPolynomial> for QPolynomialJson {
    fn from(q: &QPolynomial) -> Self {
        Self {
            s: q.s,
            k: q.k,
            n: q.n,
            terms: q
                .terms
                .iter()
                .map(|(p, c)| TermJson {
                    partition: p.parts().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

pub fn q_polynomial(s: u32, k: u32, n: u32) -> Result<QPolynomial> {
    check_indices(s, k, n)?;
    let mut terms = Vec::new();
    for lam in partitions_of(k) {
        let c = c_lambda(s, k, n, &lam)?;
        if !c.is_zero() {
            terms.push((lam, c));
        }
    }
    Ok(QPolynomial { s, k, n, terms })
}

/// `F_{s,k}(n) == (-1)^k F_{n-s,k}(n)`, with `F_{t,k} = 0` for `t <= 0`.
pub fn check_duality(s: u32, k: u32, n: u32) -> bool {
    let x = int(n as i64);
    let lhs = moser_value(s, k, &x);
    let mirrored = if s > n {
        Rational::zero()
    } else {
        moser_value(n - s, k, &x)
    };
    let rhs = if k % 2 == 1 { -mirrored } else { mirrored };
    lhs == rhs
}

/// `M_{s,k,n+1} = M_{s,k,n} + M_{s-1,k,n}` and
/// `M_{s,k+1,n} = s M_{s,k,n} - n M_{s-1,k,n-1}`. Requires `s >= 1`, `n >= 1`.
pub fn check_recurrences(s: u32, k: u32, n: u32) -> bool {
    if s == 0 || n == 0 {
        return false;
    }
    let m = |s: u32, k: u32, n: u32| moser_value(s, k, &int(n as i64));
    let first = m(s, k, n + 1) == m(s, k, n) + m(s - 1, k, n);
    let second = m(s, k + 1, n) == int(s as i64) * m(s, k, n) - int(n as i64) * m(s - 1, k, n - 1);
    first && second
}

/// `F_{s+d,k}(x+d) = Σ_{j=0}^{d} C(d,j) F_{s+j,k}(x)` and
/// `F_{s,k}(x+d) = F_{s,k}(x) + Σ_{j=0}^{d-1} F_{s-1,k}(x+j)`.
pub fn check_multistep(s: u32, k: u32, x: &Rational, d: u32) -> bool {
    if s == 0 {
        return false;
    }
    let shifted = x + int(d as i64);
    let lhs = moser_value(s + d, k, &shifted);
    let rhs: Rational = (0..=d)
        .map(|j| big(binomial_int(d as i64, j as i64)) * moser_value(s + j, k, x))
        .sum();
    let telescoped: Rational = moser_value(s, k, x)
        + (0..d)
            .map(|j| moser_value(s - 1, k, &(x + int(j as i64))))
            .sum::<Rational>();
    lhs == rhs && moser_value(s, k, &shifted) == telescoped
}

/// Compares `(1-x)^{n-k} A_{k-1}(x)` with `Σ_{s>=1} (-1)^{s-1} F_{s,k}(n) x^{s-1}`.
pub fn eulerian_poly_identity(k: u32, n: u32) -> bool {
    if k < 2 || n < k {
        return false;
    }
    let row: Vec<Rational> = (0..k as i64 - 1).map(|m| big(eulerian(k - 1, m))).collect();
    let mut lhs = DensePolynomial::monomial(row);
    let one_minus_x = DensePolynomial::monomial(vec![int(1), int(-1)]);
    for _ in 0..(n - k) {
        lhs = lhs.mul(&one_minus_x);
    }
    let x = int(n as i64);
    // F_{s,k}(n) = 0 once s >= n, so n + 1 terms cover every nonzero coefficient.
    let rhs: Vec<Rational> = (1..=n + 1)
        .map(|s| {
            let v = moser_value(s, k, &x);
            if (s - 1) % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    lhs == DensePolynomial::monomial(rhs)
}

/// `Σ_{i=0}^{s} C(i, j) C(n-i, n-s) = C(n+1, s-j)`.
pub fn check_binomial_identity(s: u32, j: u32, n: u32) -> bool {
    let (s, j, n) = (s as i64, j as i64, n as i64);
    let lhs: BigInt = (0..=s)
        .map(|i| binomial_int(i, j) * binomial_int(n - i, n - s))
        .sum();
    lhs == binomial_int(n + 1, s - j)
}

/// `<n, k> = Σ_{i=k}^{n-1} (-1)^{i-k} C(i, k) (n-i)! S(n, n-i)` for `n >= 1`.
pub fn check_eulerian_stirling_identity(n: u32, k: u32) -> bool {
    if n == 0 {
        return false;
    }
    let mut acc = BigInt::zero();
    for i in k..n {
        let term = binomial_int(i as i64, k as i64) * factorial(n - i) * stirling2(n, n - i);
        if (i - k) % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc == eulerian(n, k as i64)
}

/// Signs of the monomial coefficients follow `(-1)^{s+j-1}`.
pub fn has_alternating_signs(p: &MoserPolynomial) -> bool {
    p.poly.coeffs().iter().enumerate().all(|(j, c)| {
        if c.is_zero() {
            return true;
        }
        let expect_negative = (p.s as usize + j - 1) % 2 == 1;
        c.is_negative() == expect_negative
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn moser_value_examples() {
        assert_eq!(moser_value(1, 4, &ratio(7, 3)), rat(1));
        assert_eq!(moser_value(2, 5, &rat(5)), rat(-11));
        assert_eq!(moser_value(2, 3, &rat(4)), rat(0));
        assert_eq!(moser_value(2, 2, &rat(4)), rat(2));
        assert_eq!(moser_value(0, 3, &rat(4)), rat(0));
    }

    #[test]
    fn moser_coefficient_examples() {
        let f = moser_coefficients(2, 2).unwrap();
        assert_eq!(f.poly.coeffs(), &[rat(-2), rat(1)]);

        let f = moser_coefficients(3, 2).unwrap();
        assert_eq!(f.poly.coeffs(), &[rat(3), ratio(-5, 2), ratio(1, 2)]);
        assert_eq!(
            f.normalized(),
            vec![BigInt::from(6), BigInt::from(-5), BigInt::from(1)]
        );

        let f = moser_coefficients(1, 7).unwrap();
        assert_eq!(f.poly.coeffs(), &[rat(1)]);

        // k = 1: F_{2,1}(x) = x - 1
        let f = moser_coefficients(2, 1).unwrap();
        assert_eq!(f.poly.coeffs(), &[rat(-1), rat(1)]);
    }

    #[test]
    fn c_lambda_examples() {
        assert_eq!(c_lambda(2, 2, 7, &part(&[1, 1])).unwrap(), BigInt::from(1));
        assert_eq!(
            c_lambda(2, 3, 5, &part(&[1, 1, 1])).unwrap(),
            BigInt::zero()
        );
        for (s, k, n) in [(2, 5, 5), (3, 4, 6), (4, 4, 9)] {
            assert_eq!(
                big(c_lambda(s, k, n, &part(&[k])).unwrap()),
                moser_value(s, k, &rat(n as i64))
            );
        }
        assert!(matches!(
            c_lambda(2, 3, 5, &part(&[2, 2])),
            Err(Error::WeightMismatch { .. })
        ));
        assert!(c_lambda(2, 6, 5, &part(&[6])).is_err());
    }

    #[test]
    fn c_lambda_alt_examples() {
        assert_eq!(
            c_lambda_alt(2, 2, 4, &part(&[1, 1])).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            c_lambda_alt(3, 4, 6, &part(&[2, 1, 1])).unwrap(),
            c_lambda(3, 4, 6, &part(&[2, 1, 1])).unwrap()
        );
        assert_eq!(c_lambda_alt(1, 3, 3, &part(&[3])).unwrap(), BigInt::from(1));
    }

    #[test]
    fn q_polynomial_examples() {
        let q = q_polynomial(2, 2, 4).unwrap();
        assert_eq!(
            q.terms(),
            &[
                (part(&[2]), BigInt::from(2)),
                (part(&[1, 1]), BigInt::from(1))
            ]
        );
        assert_eq!(q.top_coefficient(), BigInt::from(2));

        let q = q_polynomial(1, 5, 7).unwrap();
        assert_eq!(q.terms(), &[(part(&[5]), BigInt::from(1))]);

        let q = q_polynomial(2, 3, 4).unwrap();
        assert!(q.terms().iter().all(|(p, _)| p.len() > 1));
        assert_eq!(q.top_coefficient(), BigInt::zero());

        assert!(q_polynomial(2, 3, 2).is_err());
        assert!(q_polynomial(5, 3, 4).is_err());
    }

    #[test]
    fn q_polynomial_json() {
        let q = q_polynomial(2, 2, 4).unwrap();
        let text = q.to_json();
        assert_eq!(
            text,
            r#"{"s":2,"k":2,"n":4,"terms":[{"partition":[2],"coeff":"2"},{"partition":[1,1],"coeff":"1"}]}"#
        );
        assert_eq!(QPolynomial::from_json(&text).unwrap(), q);
        assert!(QPolynomial::from_json(
            r#"{"s":2,"k":2,"n":4,"terms":[{"partition":[1,2],"coeff":"1"}]}"#
        )
        .is_err());
    }

    #[test]
    fn eulerian_form_examples() {
        assert_eq!(moser_value_eulerian_form(2, 2, &rat(4)), rat(2));
        assert_eq!(moser_value_eulerian_form(1, 5, &rat(9)), rat(1));
        for s in 1..=6u32 {
            for k in 1..=6u32 {
                let expected = big(eulerian(k - 1, s as i64 - 1));
                let expected = if (s - 1) % 2 == 1 {
                    -expected
                } else {
                    expected
                };
                assert_eq!(moser_value_eulerian_form(s, k, &rat(k as i64)), expected);
            }
        }
    }

    #[test]
    fn stirling_form_examples() {
        assert_eq!(moser_value_stirling_forms(2, 2, &rat(4)), (rat(2), rat(2)));
        assert_eq!(
            moser_value_stirling_forms(1, 6, &ratio(3, 2)),
            (rat(1), rat(1))
        );
        assert_eq!(moser_value_stirling_forms(1, 1, &rat(5)), (rat(1), rat(1)));
        let expected = moser_value(3, 4, &rat(7));
        assert_eq!(
            moser_value_stirling_forms(3, 4, &rat(7)),
            (expected.clone(), expected)
        );
    }

    #[test]
    fn identity_examples() {
        assert!(check_duality(2, 2, 5));
        assert!(check_duality(1, 3, 3));
        assert!(check_duality(4, 6, 9));
        assert!(check_recurrences(2, 2, 4));
        assert!(check_recurrences(5, 3, 8));
        assert!(check_multistep(2, 3, &rat(5), 1));
        assert!(check_multistep(2, 4, &rat(6), 3));
        assert!(check_multistep(1, 2, &rat(3), 2));
        assert!(eulerian_poly_identity(2, 2));
        assert!(eulerian_poly_identity(3, 4));
        assert!(eulerian_poly_identity(2, 5));
        assert!(check_binomial_identity(2, 1, 4));
        assert!(check_binomial_identity(3, 3, 6));
        assert!(check_binomial_identity(5, 2, 9));
        assert!(check_eulerian_stirling_identity(8, 3));
    }

    #[test]
    fn recurrence_values() {
        let m = |s, k, n: i64| moser_value(s, k, &rat(n));
        assert_eq!(m(2, 2, 5), rat(3));
        assert_eq!(m(1, 2, 4), rat(1));
        assert_eq!(m(2, 3, 4), rat(2) * m(2, 2, 4) - rat(4) * m(1, 2, 3));
    }

    #[test]
    fn alternating_signs() {
        for s in 1..=8 {
            for k in 1..=8 {
                assert!(has_alternating_signs(&moser_coefficients(s, k).unwrap()));
            }
        }
    }
}
