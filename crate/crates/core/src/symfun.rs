//! Multisets, power sums and elementary symmetric functions.
//!
//! [`s_sums`] is the brute-force ground truth for everything else: it lists
//! the `C(n, s)` sums of `s` distinct-index elements directly. The
//! generating-function tables [`series_lhs`] and [`series_rhs`] compare
//!
//! ```text
//! Σ_{j,m} p_j(A^(m))/j! x^j y^m  =  (1+y)^n exp( Σ_{j,m>=1} (-1)^{m-1} p_j(A)/j! m^{j-1} x^j y^m )
//! ```
//!
//! coefficient by coefficient, the left side by enumeration and the right side
//! by exact truncated series arithmetic.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::{binomial_int, factorial};
use crate::error::{Error, Result};
use crate::moser::{moser_value, QPolynomial};
use crate::polynomials::{roots_numeric, DensePolynomial};
use crate::rng::SplitMix64;
use crate::{Complex64, Rational};

/// Largest `C(n, s)` that [`s_sums`] will enumerate.
pub const MAX_S_SUMS: u128 = 2_000_000;

/// Largest truncation order accepted by the series tables.
pub const MAX_SERIES_ORDER: usize = 12;

/// Unordered collection of rationals, stored sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NumberMultiset {
    elements: Vec<Rational>,
}

impl NumberMultiset {
    pub fn new(mut elements: Vec<Rational>) -> Self {
        elements.sort();
        Self { elements }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Self::new(
            values
                .iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect(),
        )
    }

    pub fn elements(&self) -> &[Rational] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `-A`
    pub fn negate(&self) -> Self {
        Self::new(self.elements.iter().map(|a| -a).collect())
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.elements
            .iter()
            .map(|a| Complex64::new(a.to_f64().unwrap_or(f64::NAN), 0.0))
            .collect()
    }
}

impl fmt::Display for NumberMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// `p_1 .. p_m` of an `n`-multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumVector {
    values: Vec<Rational>,
    source_size: usize,
}

impl PowerSumVector {
    pub fn new(values: Vec<Rational>, source_size: usize) -> Self {
        Self {
            values,
            source_size,
        }
    }

    /// `p_1, p_2, ...`
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn source_size(&self) -> usize {
        self.source_size
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `p_k`, with `p_0 = n`. Panics past the stored length.
    pub fn get(&self, k: usize) -> Rational {
        if k == 0 {
            Rational::from_integer(BigInt::from(self.source_size))
        } else {
            self.values[k - 1].clone()
        }
    }
}

pub fn power_sums(a: &NumberMultiset, upto: usize) -> PowerSumVector {
    let mut sums = vec![Rational::zero(); upto];
    for x in a.elements() {
        let mut power = Rational::one();
        for slot in sums.iter_mut() {
            power *= x;
            *slot += &power;
        }
    }
    PowerSumVector::new(sums, a.len())
}

/// Visits every strictly increasing `s`-tuple of indices below `n`.
pub(crate) fn for_each_combination<F: FnMut(&[usize])>(n: usize, s: usize, mut visit: F) {
    if s > n {
        return;
    }
    let mut idx: Vec<usize> = (0..s).collect();
    loop {
        visit(&idx);
        let mut i = s;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - s + i {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..s {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn combination_count(n: usize, s: usize) -> u128 {
    binomial_int(n as i64, s as i64)
        .to_u128()
        .unwrap_or(u128::MAX)
}

/// `A^(s)`: all sums over `s` distinct indices.
pub fn s_sums(a: &NumberMultiset, s: usize) -> Result<NumberMultiset> {
    let n = a.len();
    if s == 0 || s > n {
        return Err(Error::SExceedsN { s, n });
    }
    let count = combination_count(n, s);
    if count > MAX_S_SUMS {
        return Err(Error::EnumerationTooLarge {
            count,
            cap: MAX_S_SUMS,
        });
    }
    let elems = a.elements();
    let mut out = Vec::with_capacity(count as usize);
    for_each_combination(n, s, |idx| {
        out.push(idx.iter().map(|&i| &elems[i]).sum());
    });
    Ok(NumberMultiset::new(out))
}

/// Complex `s`-sums, in combination order (not sorted).
pub fn s_sums_complex(a: &[Complex64], s: usize) -> Vec<Complex64> {
    let mut out = Vec::new();
    for_each_combination(a.len(), s, |idx| {
        out.push(idx.iter().map(|&i| a[i]).sum());
    });
    out
}

pub fn power_sum_complex(a: &[Complex64], k: u32) -> Complex64 {
    a.iter().map(|z| z.powu(k)).sum()
}

/// `e_k` of complex values by expanding `∏ (1 + a_i t)`.
pub fn elementary_symmetric_complex(a: &[Complex64], k: usize) -> Complex64 {
    let mut e = vec![Complex64::new(0.0, 0.0); k + 1];
    e[0] = Complex64::new(1.0, 0.0);
    for &x in a {
        for j in (1..=k).rev() {
            let prev = e[j - 1];
            e[j] += prev * x;
        }
    }
    e[k]
}

/// `e_k(A)` by expanding `∏ (1 + a_i t)`.
pub fn elementary_symmetric(a: &NumberMultiset, k: usize) -> Result<Rational> {
    if k > a.len() {
        return Err(Error::Precondition(format!(
            "e_{k} undefined for a multiset of size {}",
            a.len()
        )));
    }
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for x in a.elements() {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * x;
            e[j] += add;
        }
    }
    Ok(e.swap_remove(k))
}

/// Newton–Girard: `k e_k = Σ_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i`. Returns `e_1..e_m`.
pub fn newton_p_to_e(p: &PowerSumVector) -> Vec<Rational> {
    let m = p.len();
    let mut e = Vec::with_capacity(m + 1);
    e.push(Rational::one());
    for k in 1..=m {
        let mut acc = Rational::zero();
        for i in 1..=k {
            let term = &e[k - i] * &p.values[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / Rational::from_integer(BigInt::from(k)));
    }
    e.remove(0);
    e
}

/// Inverse of [`newton_p_to_e`]:
/// `p_k = (-1)^{k-1} k e_k + Σ_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i}`.
pub fn newton_e_to_p(e: &[Rational]) -> PowerSumVector {
    let m = e.len();
    let mut p: Vec<Rational> = Vec::with_capacity(m);
    for k in 1..=m {
        let mut acc = Rational::from_integer(BigInt::from(k)) * &e[k - 1];
        if k % 2 == 0 {
            acc = -acc;
        }
        for i in 1..k {
            let term = &e[i - 1] * &p[k - i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    PowerSumVector::new(p, m)
}

/// `Σ_λ c_λ ∏ p_{λ_i}`.
pub fn apply_q(q: &QPolynomial, p: &PowerSumVector) -> Result<Rational> {
    if p.len() < q.k as usize {
        return Err(Error::Precondition(format!(
            "Q_(s={},k={},n={}) needs {} power sums, got {}",
            q.s,
            q.k,
            q.n,
            q.k,
            p.len()
        )));
    }
    let mut acc = Rational::zero();
    for (lam, c) in q.terms() {
        let mut term = Rational::from_integer(c.clone());
        for &part in lam.parts() {
            term *= &p.values[part as usize - 1];
        }
        acc += term;
    }
    Ok(acc)
}

/// `T_z(A) = {a + z}`.
pub fn translate(a: &NumberMultiset, z: &Rational) -> NumberMultiset {
    NumberMultiset::new(a.elements().iter().map(|x| x + z).collect())
}

/// `p_k(T_z(A)) = Σ_{i=0}^{k} C(k, i) p_{k-i}(A) z^i`, with `p_0 = n`.
pub fn translated_power_sum(p: &PowerSumVector, z: &Rational, k: usize) -> Result<Rational> {
    if k > p.len() {
        return Err(Error::Precondition(format!(
            "need p_1..p_{k}, only {} available",
            p.len()
        )));
    }
    let mut acc = Rational::zero();
    let mut zi = Rational::one();
    for i in 0..=k {
        acc += Rational::from_integer(binomial_int(k as i64, i as i64)) * p.get(k - i) * &zi;
        zi *= z;
    }
    Ok(acc)
}

/// Truncated bivariate coefficient table indexed `(j, m)` for `x^j y^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable {
    pub max_j: usize,
    pub max_m: usize,
    entries: Vec<Vec<Rational>>,
}

impl SeriesTable {
    fn zeros(max_j: usize, max_m: usize) -> Self {
        Self {
            max_j,
            max_m,
            entries: vec![vec![Rational::zero(); max_m + 1]; max_j + 1],
        }
    }

    pub fn get(&self, j: usize, m: usize) -> &Rational {
        &self.entries[j][m]
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.max_j, self.max_m);
        for (j1, row) in self.entries.iter().enumerate() {
            for (m1, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j2 in 0..=self.max_j - j1 {
                    for m2 in 0..=self.max_m - m1 {
                        let b = &other.entries[j2][m2];
                        if !b.is_zero() {
                            out.entries[j1 + j2][m1 + m2] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// `exp(self)` for a series with zero constant term, as
    /// `Σ_r self^r / r!`; with no pure-`x` or pure-`y` terms the powers vanish
    /// past `min(max_j, max_m)`.
    fn exp_nilpotent(&self) -> Self {
        debug_assert!(self.entries[0][0].is_zero());
        let mut result = Self::zeros(self.max_j, self.max_m);
        result.entries[0][0] = Rational::one();
        let mut power = result.clone();
        let order = self.max_j.min(self.max_m);
        for r in 1..=order {
            power = power.mul(self);
            let inv = Rational::new(BigInt::one(), factorial(r as u32));
            for (dst, src) in result.entries.iter_mut().zip(&power.entries) {
                for (d, s) in dst.iter_mut().zip(src) {
                    if !s.is_zero() {
                        *d += s * &inv;
                    }
                }
            }
        }
        result
    }
}

fn check_series_bounds(max_j: usize, max_m: usize) -> Result<()> {
    if max_j > MAX_SERIES_ORDER || max_m > MAX_SERIES_ORDER {
        return Err(Error::Precondition(format!(
            "series truncation ({max_j}, {max_m}) exceeds {MAX_SERIES_ORDER}"
        )));
    }
    Ok(())
}

/// `p_j(A^(m)) / j!` by direct enumeration of `m`-sums.
pub fn series_lhs(a: &NumberMultiset, max_j: usize, max_m: usize) -> Result<SeriesTable> {
    check_series_bounds(max_j, max_m)?;
    let n = a.len();
    let mut table = SeriesTable::zeros(max_j, max_m);
    table.entries[0][0] = Rational::one();
    for m in 1..=max_m.min(n) {
        let sums = s_sums(a, m)?;
        // p_0 counts the sums.
        table.entries[0][m] = Rational::from_integer(BigInt::from(sums.len()));
        let p = power_sums(&sums, max_j);
        for j in 1..=max_j {
            table.entries[j][m] = p.get(j) / Rational::from_integer(factorial(j as u32));
        }
    }
    Ok(table)
}

/// `(1+y)^n exp(Σ_{j,m>=1} (-1)^{m-1} (p_j(A)/j!) m^{j-1} x^j y^m)`, truncated.
pub fn series_rhs(a: &NumberMultiset, max_j: usize, max_m: usize) -> Result<SeriesTable> {
    check_series_bounds(max_j, max_m)?;
    let n = a.len();
    let p = power_sums(a, max_j);
    let mut arg = SeriesTable::zeros(max_j, max_m);
    for j in 1..=max_j {
        let scaled = p.get(j) / Rational::from_integer(factorial(j as u32));
        for m in 1..=max_m {
            let mut v = &scaled * Rational::from_integer(BigInt::from(m).pow(j as u32 - 1));
            if m % 2 == 0 {
                v = -v;
            }
            arg.entries[j][m] = v;
        }
    }
    let mut binom = SeriesTable::zeros(max_j, max_m);
    for m in 0..=max_m {
        binom.entries[0][m] = Rational::from_integer(binomial_int(n as i64, m as i64));
    }
    Ok(binom.mul(&arg.exp_nilpotent()))
}

/// Checks that `e_k(A^(s)) - M_{s,k,n} e_k(A)` depends only on `e_1..e_{k-1}`.
///
/// Each trial draws an integer multiset `A` with entries in `[-3, 3]`, keeps
/// its power sums except `p_k`, which is shifted by a nonzero integer, and
/// realises the shifted power sums as a complex multiset `B` through the
/// numeric root finder. Both multisets share `e_1..e_{k-1}`; the quantity above
/// must agree across the pair within `1e-6`, relative to its magnitude when that
/// exceeds one.
pub fn esym_top_coefficient_check(
    s: usize,
    k: usize,
    n: usize,
    trials: usize,
    rng: &mut SplitMix64,
) -> Result<bool> {
    const TOL: f64 = 1e-6;
    if s == 0 || k == 0 || s > n || k > n {
        return Err(Error::Precondition(format!(
            "need 1 <= s, k <= n, got s = {s}, k = {k}, n = {n}"
        )));
    }
    let m = moser_value(s as u32, k as u32, &Rational::from_integer(BigInt::from(n)))
        .to_f64()
        .unwrap_or(f64::NAN);
    for _ in 0..trials {
        let a = NumberMultiset::new(
            (0..n)
                .map(|_| Rational::from_integer(rng.range_i64(-3, 3).into()))
                .collect(),
        );
        let p = power_sums(&a, n);
        let mut shifted = p.values().to_vec();
        let delta = rng.range_i64(1, 3) * if rng.next_u64() & 1 == 0 { 1 } else { -1 };
        shifted[k - 1] += Rational::from_integer(delta.into());
        let e_b = newton_p_to_e(&PowerSumVector::new(shifted, n));
        let poly = monic_from_elementary(&e_b);
        let b = roots_numeric(&poly, 1e-14)?.roots;

        let a_sums = s_sums(&a, s)?;
        // e_k of a multiset with fewer than k elements is zero.
        let e_sums = if k > a_sums.len() {
            Rational::zero()
        } else {
            elementary_symmetric(&a_sums, k)?
        };
        let lhs_a = e_sums.to_f64().unwrap_or(f64::NAN)
            - m * elementary_symmetric(&a, k)?.to_f64().unwrap_or(f64::NAN);
        let b_sums = s_sums_complex(&b, s);
        let lhs_b =
            elementary_symmetric_complex(&b_sums, k) - m * e_b[k - 1].to_f64().unwrap_or(f64::NAN);
        let scale = 1f64.max(lhs_a.abs()).max(lhs_b.norm());
        if (Complex64::new(lhs_a, 0.0) - lhs_b).norm() > TOL * scale {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `x^n - e_1 x^{n-1} + e_2 x^{n-2} - ...`
pub fn monic_from_elementary(e: &[Rational]) -> DensePolynomial {
    let n = e.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    for (i, ek) in e.iter().enumerate() {
        let k = i + 1;
        coeffs[n - k] = if k % 2 == 1 { -ek.clone() } else { ek.clone() };
    }
    DensePolynomial::monomial(coeffs)
}

/// `Z_{n,k}`: the `k`-th roots of unity padded with `n - k` zeros.
pub fn roots_of_unity_multiset(n: usize, k: usize) -> Vec<Complex64> {
    let mut out: Vec<Complex64> = (0..k)
        .map(|m| Complex64::from_polar(1.0, std::f64::consts::TAU * m as f64 / k as f64))
        .collect();
    out.resize(n.max(k), Complex64::new(0.0, 0.0));
    out
}

pub(crate) fn abs_max(values: &[Rational]) -> Rational {
    values
        .iter()
        .map(|v| v.abs())
        .max()
        .unwrap_or_else(Rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moser::q_polynomial;
    use crate::{rat, ratio};

    fn ints(v: &[i64]) -> NumberMultiset {
        NumberMultiset::from_integers(v)
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(
            power_sums(&ints(&[1, 2, 3]), 3).values(),
            &[rat(6), rat(14), rat(36)]
        );
        assert!(power_sums(&ints(&[0, 0]), 4)
            .values()
            .iter()
            .all(Zero::is_zero));
        let half = NumberMultiset::new(vec![ratio(1, 2)]);
        assert_eq!(power_sums(&half, 2).values(), &[ratio(1, 2), ratio(1, 4)]);
        assert_eq!(power_sums(&ints(&[1, 2, 3]), 3).get(0), rat(3));
    }

    #[test]
    fn s_sum_examples() {
        assert_eq!(s_sums(&ints(&[0, 1, 2]), 2).unwrap(), ints(&[1, 2, 3]));
        assert_eq!(
            s_sums(&ints(&[1, 4, 5, 6]), 2).unwrap(),
            ints(&[5, 6, 7, 9, 10, 11])
        );
        assert_eq!(
            s_sums(&ints(&[2, 3, 4, 7]), 2).unwrap(),
            ints(&[5, 6, 7, 9, 10, 11])
        );
        assert_eq!(s_sums(&ints(&[3, -1, 8]), 3).unwrap(), ints(&[10]));
        assert!(matches!(
            s_sums(&ints(&[1, 2]), 3),
            Err(Error::SExceedsN { .. })
        ));
        assert_eq!(s_sums(&ints(&[1, 2, 3, 4, 5, 6]), 3).unwrap().len(), 20);
    }

    #[test]
    fn s_sums_cap() {
        let big = NumberMultiset::from_integers(&[0; 30]);
        assert!(matches!(
            s_sums(&big, 15),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn elementary_examples() {
        let a = ints(&[1, 2, 3]);
        assert_eq!(elementary_symmetric(&a, 1).unwrap(), rat(6));
        assert_eq!(elementary_symmetric(&a, 2).unwrap(), rat(11));
        assert_eq!(elementary_symmetric(&a, 3).unwrap(), rat(6));
        assert_eq!(elementary_symmetric(&a, 0).unwrap(), rat(1));
        assert_eq!(elementary_symmetric(&ints(&[1, -1]), 2).unwrap(), rat(-1));
        assert!(elementary_symmetric(&a, 4).is_err());
    }

    #[test]
    fn newton_examples() {
        let p = PowerSumVector::new(vec![rat(6), rat(14), rat(36)], 3);
        assert_eq!(newton_p_to_e(&p), vec![rat(6), rat(11), rat(6)]);
        assert_eq!(
            newton_e_to_p(&[rat(6), rat(11), rat(6)]).values(),
            p.values()
        );
        let zeros = PowerSumVector::new(vec![rat(0); 4], 4);
        assert!(newton_p_to_e(&zeros).iter().all(Zero::is_zero));
        let single = PowerSumVector::new(vec![ratio(5, 7)], 1);
        assert_eq!(newton_p_to_e(&single), vec![ratio(5, 7)]);
        assert_eq!(newton_e_to_p(&[ratio(5, 7)]).values(), &[ratio(5, 7)]);
    }

    #[test]
    fn apply_q_examples() {
        let a = ints(&[1, 2, 3, 5]);
        let q = q_polynomial(2, 2, 4).unwrap();
        let got = apply_q(&q, &power_sums(&a, 2)).unwrap();
        assert_eq!(got, rat(199));
        assert_eq!(power_sums(&s_sums(&a, 2).unwrap(), 2).get(2), rat(199));

        let q = q_polynomial(1, 3, 4).unwrap();
        assert_eq!(
            apply_q(&q, &power_sums(&a, 3)).unwrap(),
            power_sums(&a, 3).get(3)
        );

        // p_3 drops out of Q_{2,3,4}: changing p_3 alone leaves the value unchanged.
        let q = q_polynomial(2, 3, 4).unwrap();
        let p = power_sums(&a, 3);
        let mut bumped = p.values().to_vec();
        bumped[2] += rat(17);
        assert_eq!(
            apply_q(&q, &p).unwrap(),
            apply_q(&q, &PowerSumVector::new(bumped, 4)).unwrap()
        );
        assert!(apply_q(&q, &power_sums(&a, 2)).is_err());
    }

    #[test]
    fn translation_examples() {
        let a = ints(&[1, 2]);
        let p = power_sums(&a, 2);
        assert_eq!(translated_power_sum(&p, &rat(1), 2).unwrap(), rat(13));
        assert_eq!(power_sums(&translate(&a, &rat(1)), 2).get(2), rat(13));
        assert_eq!(translated_power_sum(&p, &rat(0), 2).unwrap(), p.get(2));
        let zero = ints(&[0]);
        assert_eq!(
            translated_power_sum(&power_sums(&zero, 3), &rat(5), 3).unwrap(),
            rat(125)
        );
    }

    #[test]
    fn series_tables_agree_small() {
        let a = ints(&[1, 2]);
        let lhs = series_lhs(&a, 3, 3).unwrap();
        let rhs = series_rhs(&a, 3, 3).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.get(0, 0), &rat(1));
        for j in 0..=3 {
            assert!(rhs.get(j, 3).is_zero());
        }
        assert!(series_lhs(&a, 13, 2).is_err());
    }

    #[test]
    fn esym_check_examples() {
        let mut rng = SplitMix64::new(11);
        assert!(esym_top_coefficient_check(2, 2, 4, 5, &mut rng).unwrap());
        assert!(esym_top_coefficient_check(1, 3, 4, 3, &mut rng).unwrap());
        assert!(esym_top_coefficient_check(3, 3, 5, 5, &mut rng).unwrap());
    }

    #[test]
    fn combination_enumeration_counts() {
        for n in 0..8 {
            for s in 0..=n {
                let mut count = 0;
                for_each_combination(n, s, |idx| {
                    assert!(idx.windows(2).all(|w| w[0] < w[1]));
                    count += 1;
                });
                assert_eq!(count as u128, combination_count(n, s), "n={n} s={s}");
            }
        }
    }
}
