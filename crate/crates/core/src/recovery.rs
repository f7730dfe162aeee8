//! Rebuilding an `n`-multiset `A` from its `s`-sums.
//!
//! The route is the power-sum one. `p_1(A^(s)) = M_{s,1,n} p_1(A)` gives
//! `p_1(A)`; for each later `k`,
//!
//! ```text
//! p_k(A) = (p_k(A^(s)) - Q̃_{s,k,n}(p_1(A), ..., p_{k-1}(A))) / M_{s,k,n}
//! ```
//!
//! Once `p_1..p_n` are known, Newton–Girard gives `e_1..e_n` and `A` is the
//! root multiset of `x^n - e_1 x^{n-1} + ... ± e_n`. Every division by
//! `M_{s,k,n} = F_{s,k}(n)` is cleared up front by [`solvability`].

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::combinatorics::binomial_int;
use crate::error::{Error, Result};
use crate::moser::{moser_value, q_polynomial};
use crate::polynomials::{durand_kerner, rational_roots, roots_numeric};
use crate::symfun::{
    abs_max, apply_q, for_each_combination, monic_from_elementary, newton_p_to_e, power_sums,
    s_sums, s_sums_complex, NumberMultiset, PowerSumVector,
};
use crate::{Complex64, Rational};

/// `F_{s,k}(n)` for `k = 1..n` and where it vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvabilityReport {
    pub n: usize,
    pub s: usize,
    pub values: Vec<BigInt>,
    pub vanishing_k: Vec<u32>,
    pub solvable: bool,
}

impl SolvabilityReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "s": self.s,
            "values": self.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "vanishing_k": self.vanishing_k,
            "solvable": self.solvable,
        })
    }
}

pub fn solvability(n: usize, s: usize) -> Result<SolvabilityReport> {
    if s == 0 || s > n {
        return Err(Error::SExceedsN { s, n });
    }
    let x = Rational::from_integer(BigInt::from(n));
    let values: Vec<BigInt> = (1..=n as u32)
        .map(|k| moser_value(s as u32, k, &x).to_integer())
        .collect();
    let vanishing_k: Vec<u32> = values
        .iter()
        .zip(1..)
        .filter(|(v, _)| v.is_zero())
        .map(|(_, k)| k)
        .collect();
    Ok(SolvabilityReport {
        n,
        s,
        solvable: vanishing_k.is_empty(),
        values,
        vanishing_k,
    })
}

fn check_input_size(len: usize, n: usize, s: usize) -> Result<()> {
    if s == 0 || s > n {
        return Err(Error::SExceedsN { s, n });
    }
    let expected = binomial_int(n as i64, s as i64)
        .to_u128()
        .unwrap_or(u128::MAX);
    if len as u128 != expected {
        return Err(Error::SizeMismatch {
            n,
            s,
            expected,
            actual: len,
        });
    }
    Ok(())
}

fn require_solvable(n: usize, s: usize) -> Result<SolvabilityReport> {
    let report = solvability(n, s)?;
    if !report.solvable {
        return Err(Error::Unsolvable {
            n,
            s,
            vanishing_k: report.vanishing_k,
        });
    }
    Ok(report)
}

/// `p_1(A) .. p_n(A)` from `S = A^(s)`.
pub fn recover_power_sums(sums: &NumberMultiset, n: usize, s: usize) -> Result<PowerSumVector> {
    check_input_size(sums.len(), n, s)?;
    let report = require_solvable(n, s)?;
    let target = power_sums(sums, n);
    let mut recovered: Vec<Rational> = Vec::with_capacity(n);
    for k in 1..=n {
        let q = q_polynomial(s as u32, k as u32, n as u32)?;
        let top = Rational::from_integer(report.values[k - 1].clone());
        debug_assert_eq!(q.top_coefficient(), report.values[k - 1]);
        // Q̃ only touches p_1..p_{k-1}; pad p_k with zero to satisfy apply_q.
        let mut known = recovered.clone();
        known.push(Rational::zero());
        let rest = apply_q(&q.without_top(), &PowerSumVector::new(known, n))?;
        recovered.push((target.get(k) - rest) / top);
    }
    Ok(PowerSumVector::new(recovered, n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecoveryMode {
    Exact,
    Numeric,
    /// Exact first, numeric when the polynomial has irrational roots.
    Auto,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RecoveredMultiset {
    Exact(NumberMultiset),
    /// Sorted by `(re, im)`.
    Numeric(Vec<Complex64>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct RecoveryResult {
    pub multiset: RecoveredMultiset,
    /// Largest deviation between recomputed and input s-sums; zero when exact.
    pub residual: f64,
    pub power_sums: PowerSumVector,
}

impl RecoveryResult {
    pub fn mode_name(&self) -> &'static str {
        match self.multiset {
            RecoveredMultiset::Exact(_) => "exact",
            RecoveredMultiset::Numeric(_) => "numeric",
        }
    }

    pub fn exact(&self) -> Option<&NumberMultiset> {
        match &self.multiset {
            RecoveredMultiset::Exact(m) => Some(m),
            RecoveredMultiset::Numeric(_) => None,
        }
    }

    /// `{"mode", "multiset", "residual", "power_sums"}` with rationals as strings.
    pub fn to_json(&self) -> serde_json::Value {
        let multiset = match &self.multiset {
            RecoveredMultiset::Exact(m) => serde_json::Value::from(
                m.elements()
                    .iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>(),
            ),
            RecoveredMultiset::Numeric(z) => {
                serde_json::Value::from(z.iter().map(|c| vec![c.re, c.im]).collect::<Vec<_>>())
            }
        };
        serde_json::json!({
            "mode": self.mode_name(),
            "multiset": multiset,
            "residual": self.residual.to_string(),
            "power_sums": self.power_sums.values().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Rebuilds `A` from `S = A^(s)` and checks the answer against `S`.
///
/// Exact mode needs every root to be rational. Numeric mode accepts the
/// Durand–Kerner roots when the bottleneck matching of recomputed to input s-sums
/// stays within `tol · max(1, max |S|)`.
pub fn recover(
    sums: &NumberMultiset,
    n: usize,
    s: usize,
    mode: RecoveryMode,
    tol: f64,
) -> Result<RecoveryResult> {
    let power_sums = recover_power_sums(sums, n, s)?;
    let e = newton_p_to_e(&power_sums);
    let poly = monic_from_elementary(&e);

    if mode != RecoveryMode::Numeric {
        let (roots, remainder) = rational_roots(&poly)?;
        let remainder_degree = remainder.degree().unwrap_or(0);
        if remainder_degree == 0 {
            let a = NumberMultiset::new(roots);
            if s_sums(&a, s)? != *sums {
                return Err(Error::VerificationFailed {
                    deviation: "exact s-sums differ".into(),
                });
            }
            return Ok(RecoveryResult {
                multiset: RecoveredMultiset::Exact(a),
                residual: 0.0,
                power_sums,
            });
        }
        if mode == RecoveryMode::Exact {
            return Err(Error::IrrationalRoots { remainder_degree });
        }
    }

    let mut roots = roots_numeric(&poly, tol)?.roots;
    sort_complex(&mut roots);
    let scale = abs_max(sums.elements())
        .to_f64()
        .unwrap_or(f64::INFINITY)
        .max(1.0);
    let residual = matching_deviation(&s_sums_complex(&roots, s), &sums.to_complex());
    // Also rejects a NaN residual.
    if residual.is_nan() || residual > tol * scale {
        return Err(Error::VerificationFailed {
            deviation: residual.to_string(),
        });
    }
    Ok(RecoveryResult {
        multiset: RecoveredMultiset::Numeric(roots),
        residual,
        power_sums,
    })
}

/// Floating-point recovery from s-sums that are not rational.
#[derive(Clone, Debug, PartialEq)]
pub struct ApproxRecovery {
    /// Sorted by `(re, im)`.
    pub roots: Vec<Complex64>,
    pub residual: f64,
    pub power_sums: Vec<Complex64>,
}

/// The same power-sum route as [`recover`], carried out in double precision.
/// The integer coefficients of each `Q_{s,k,n}` stay exact until they
/// multiply floating values.
pub fn recover_approx(sums: &[Complex64], n: usize, s: usize, tol: f64) -> Result<ApproxRecovery> {
    check_input_size(sums.len(), n, s)?;
    let report = require_solvable(n, s)?;
    let mut recovered: Vec<Complex64> = Vec::with_capacity(n);
    for k in 1..=n {
        let target: Complex64 = sums.iter().map(|z| z.powu(k as u32)).sum();
        let q = q_polynomial(s as u32, k as u32, n as u32)?;
        let mut rest = Complex64::new(0.0, 0.0);
        for (lam, c) in q.without_top().terms() {
            let mut term = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
            for &part in lam.parts() {
                term *= recovered[part as usize - 1];
            }
            rest += term;
        }
        let top = report.values[k - 1].to_f64().unwrap_or(f64::NAN);
        recovered.push((target - rest) / top);
    }

    // Newton–Girard in floating point.
    let mut e = vec![Complex64::new(1.0, 0.0)];
    for k in 1..=n {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 1..=k {
            let term = e[k - i] * recovered[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / k as f64);
    }
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    for (k, ek) in e.iter().enumerate() {
        coeffs[n - k] = if k % 2 == 1 { -ek } else { *ek };
    }
    let mut roots = durand_kerner(&coeffs, tol)?.roots;
    sort_complex(&mut roots);
    let scale = sums.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let residual = matching_deviation(&s_sums_complex(&roots, s), sums);
    // Also rejects a NaN residual.
    if residual.is_nan() || residual > tol * scale {
        return Err(Error::VerificationFailed {
            deviation: residual.to_string(),
        });
    }
    Ok(ApproxRecovery {
        roots,
        residual,
        power_sums: recovered,
    })
}

pub fn sort_complex(values: &mut [Complex64]) {
    values.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// Bottleneck assignment: the smallest `d` such that `found` and `expected`
/// can be paired one-to-one with every pair within distance `d`. Binary search
/// over the candidate distances, each tested by augmenting-path matching.
pub fn matching_deviation(found: &[Complex64], expected: &[Complex64]) -> f64 {
    if found.len() != expected.len() {
        return f64::INFINITY;
    }
    if found.is_empty() {
        return 0.0;
    }
    let dist: Vec<Vec<f64>> = found
        .iter()
        .map(|z| expected.iter().map(|w| (z - w).norm()).collect())
        .collect();
    let mut candidates: Vec<f64> = dist.iter().flatten().copied().collect();
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();
    let (mut lo, mut hi) = (0, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if perfect_matching(&dist, candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    candidates[lo]
}

fn perfect_matching(dist: &[Vec<f64>], limit: f64) -> bool {
    fn augment(
        u: usize,
        dist: &[Vec<f64>],
        limit: f64,
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for v in 0..dist.len() {
            if dist[u][v] <= limit && !seen[v] {
                seen[v] = true;
                if owner[v].is_none_or(|w| augment(w, dist, limit, seen, owner)) {
                    owner[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; dist.len()];
    (0..dist.len()).all(|u| {
        let mut seen = vec![false; dist.len()];
        augment(u, dist, limit, &mut seen, &mut owner)
    })
}

pub const MAX_AMBIGUITY_N: usize = 8;
pub const MAX_AMBIGUITY_RANGE: i64 = 12;

/// Shifts a pair so the smallest element of either side is zero, and orders
/// the two sides.
pub fn normalize_pair(a: &NumberMultiset, b: &NumberMultiset) -> (NumberMultiset, NumberMultiset) {
    let min = a
        .elements()
        .iter()
        .chain(b.elements())
        .min()
        .cloned()
        .unwrap_or_else(Rational::zero);
    let shift =
        |m: &NumberMultiset| NumberMultiset::new(m.elements().iter().map(|x| x - &min).collect());
    let (a, b) = (shift(a), shift(b));
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Distinct integer `n`-multisets with entries in `[0, range_bound]` that share
/// their `s`-sum multiset.
///
/// Pairs are reported up to translation via [`normalize_pair`], ordered by the
/// largest element of the pair, then lexicographically, and truncated at
/// `size_cap`.
pub fn find_ambiguous_pairs(
    n: usize,
    s: usize,
    range_bound: i64,
    size_cap: usize,
) -> Result<Vec<(NumberMultiset, NumberMultiset)>> {
    if n == 0 || n > MAX_AMBIGUITY_N || !(0..=MAX_AMBIGUITY_RANGE).contains(&range_bound) {
        return Err(Error::Precondition(format!(
            "ambiguity search needs 1 <= n <= {MAX_AMBIGUITY_N} and 0 <= range_bound <= {MAX_AMBIGUITY_RANGE}"
        )));
    }
    if s == 0 || s > n {
        return Err(Error::SExceedsN { s, n });
    }

    let mut groups: BTreeMap<Vec<i64>, Vec<Vec<i64>>> = BTreeMap::new();
    let mut current = vec![0i64; n];
    loop {
        let mut sums = Vec::new();
        for_each_combination(n, s, |idx| {
            sums.push(idx.iter().map(|&i| current[i]).sum::<i64>())
        });
        sums.sort_unstable();
        groups.entry(sums).or_default().push(current.clone());

        // Next non-decreasing tuple.
        let Some(pos) = current.iter().rposition(|&v| v < range_bound) else {
            break;
        };
        let v = current[pos] + 1;
        for slot in &mut current[pos..] {
            *slot = v;
        }
    }

    let mut pairs: BTreeSet<(Vec<i64>, Vec<i64>)> = BTreeSet::new();
    for members in groups.values().filter(|m| m.len() > 1) {
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                let min = a.iter().chain(b).min().copied().unwrap_or(0);
                let shift = |m: &Vec<i64>| m.iter().map(|x| x - min).collect::<Vec<_>>();
                let (a, b) = (shift(a), shift(b));
                pairs.insert(if a <= b { (a, b) } else { (b, a) });
            }
        }
    }
    let mut pairs: Vec<_> = pairs.into_iter().collect();
    pairs.sort_by_key(|(a, b)| (*a.iter().chain(b).max().unwrap_or(&0), a.clone(), b.clone()));
    pairs.truncate(size_cap);
    Ok(pairs
        .into_iter()
        .map(|(a, b)| {
            (
                NumberMultiset::from_integers(&a),
                NumberMultiset::from_integers(&b),
            )
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn ints(v: &[i64]) -> NumberMultiset {
        NumberMultiset::from_integers(v)
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn solvability_examples() {
        let r = solvability(4, 2).unwrap();
        assert_eq!(r.values, big(&[3, 2, 0, -4]));
        assert_eq!(r.vanishing_k, vec![3]);
        assert!(!r.solvable);

        let r = solvability(5, 2).unwrap();
        assert_eq!(r.values, big(&[4, 3, 1, -3, -11]));
        assert!(r.solvable);

        let r = solvability(6, 1).unwrap();
        assert!(r.values.iter().all(|v| *v == BigInt::from(1)));
        assert!(r.solvable);
        assert!(solvability(3, 4).is_err());
    }

    #[test]
    fn recover_power_sums_examples() {
        let a = ints(&[1, 2, 3, 4, 6]);
        let s = s_sums(&a, 2).unwrap();
        let p = recover_power_sums(&s, 5, 2).unwrap();
        assert_eq!(
            p.values(),
            &[rat(16), rat(66), rat(316), rat(1650), rat(9076)]
        );
        assert_eq!(p, power_sums(&a, 5));

        let single = NumberMultiset::new(vec![ratio(-7, 3)]);
        assert_eq!(
            recover_power_sums(&single, 1, 1).unwrap().values(),
            &[ratio(-7, 3)]
        );

        assert!(matches!(
            recover_power_sums(&ints(&[1, 2, 3]), 5, 2),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn recover_examples() {
        let a = ints(&[1, 2, 3, 4, 6]);
        let r = recover(&s_sums(&a, 2).unwrap(), 5, 2, RecoveryMode::Exact, 1e-9).unwrap();
        assert_eq!(r.exact(), Some(&a));
        assert_eq!(r.residual, 0.0);

        let zeros = ints(&[0, 0, 0]);
        let r = recover(&s_sums(&zeros, 2).unwrap(), 3, 2, RecoveryMode::Auto, 1e-9).unwrap();
        assert_eq!(r.exact(), Some(&zeros));

        let err = recover(
            &ints(&[5, 6, 7, 9, 10, 11]),
            4,
            2,
            RecoveryMode::Exact,
            1e-9,
        )
        .unwrap_err();
        match err {
            Error::Unsolvable { vanishing_k, .. } => assert_eq!(vanishing_k, vec![3]),
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn recover_numeric_mode_on_rational_input() {
        let a = ints(&[-4, 1, 2, 7, 9]);
        let s = s_sums(&a, 3).unwrap();
        let r = recover(&s, 5, 3, RecoveryMode::Numeric, 1e-9).unwrap();
        assert_eq!(r.mode_name(), "numeric");
        let RecoveredMultiset::Numeric(z) = &r.multiset else {
            panic!()
        };
        assert!(matching_deviation(z, &a.to_complex()) < 1e-8);
    }

    #[test]
    fn recovery_json_shape() {
        let a = ints(&[0, 1, 5]);
        let r = recover(&s_sums(&a, 2).unwrap(), 3, 2, RecoveryMode::Exact, 1e-9).unwrap();
        assert_eq!(
            r.to_json().to_string(),
            r#"{"mode":"exact","multiset":["0","1","5"],"power_sums":["6","26","126"],"residual":"0"}"#
        );
    }

    #[test]
    fn approx_recovery_of_irrational_entries() {
        let r2 = 2f64.sqrt();
        let a = [r2, -r2, 1.0, 0.5 * r2, 3.0];
        let a: Vec<Complex64> = a.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let s = s_sums_complex(&a, 2);
        let got = recover_approx(&s, 5, 2, 1e-12).unwrap();
        assert!(matching_deviation(&got.roots, &a) < 1e-6);
    }

    #[test]
    fn ambiguity_search_examples() {
        let pairs = find_ambiguous_pairs(4, 2, 7, usize::MAX).unwrap();
        let witness = normalize_pair(&ints(&[1, 4, 5, 6]), &ints(&[2, 3, 4, 7]));
        assert!(pairs.contains(&witness));
        assert!(find_ambiguous_pairs(5, 2, 7, 10).unwrap().is_empty());
        assert!(find_ambiguous_pairs(3, 2, 5, 10).unwrap().is_empty());
        assert!(find_ambiguous_pairs(9, 2, 5, 10).is_err());
        assert!(find_ambiguous_pairs(4, 2, 13, 10).is_err());
        assert_eq!(find_ambiguous_pairs(4, 2, 7, 3).unwrap().len(), 3);
    }

    #[test]
    fn normalize_pair_orders_and_shifts() {
        let (a, b) = normalize_pair(&ints(&[2, 3, 4, 7]), &ints(&[1, 4, 5, 6]));
        assert_eq!(a, ints(&[0, 3, 4, 5]));
        assert_eq!(b, ints(&[1, 2, 3, 6]));
    }
}
