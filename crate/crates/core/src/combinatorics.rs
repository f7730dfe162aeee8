//! Exact combinatorial primitives.
//!
//! Everything here is computed with arbitrary-precision integers. Enumeration
//! orders are fixed: partitions come out in reverse-lexicographic order of
//! their parts (`[4], [3,1], [2,2], [2,1,1], [1,1,1,1]`) and compositions in
//! lexicographic order (`(1,3), (2,2), (3,1)`), so anything keyed on them
//! serialises byte-for-byte the same on every run.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Integer partition: non-increasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition {
                parts,
                reason: "no parts",
            });
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be positive",
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be non-increasing",
            });
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Run lengths of equal parts, in order of appearance.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut runs: Vec<u32> = Vec::new();
        let mut prev = None;
        for &p in &self.parts {
            if prev == Some(p) {
                *runs.last_mut().unwrap() += 1;
            } else {
                runs.push(1);
                prev = Some(p);
            }
        }
        runs
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Ordered sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Precondition(format!(
                "composition parts must be positive and non-empty: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `x (x-1) ... (x-p+1)`; the empty product for `p = 0`.
pub fn falling_power(x: &Rational, p: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..p {
        acc *= &term;
        term -= Rational::one();
    }
    acc
}

/// Generalised binomial `C(x, j) = x^[j] / j!`, zero for `j < 0`.
pub fn binomial(x: &Rational, j: i64) -> Rational {
    if j < 0 {
        return Rational::zero();
    }
    let j = j as u32;
    falling_power(x, j) / Rational::from_integer(factorial(j))
}

/// `C(n, j)` for integer `n` of either sign; zero for `j < 0`.
pub fn binomial_int(n: i64, j: i64) -> BigInt {
    if j < 0 {
        return BigInt::zero();
    }
    if n >= 0 && j > n {
        return BigInt::zero();
    }
    // Multiplicative form keeps every intermediate an integer.
    let mut acc = BigInt::one();
    for i in 0..j {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// All partitions of `k`, in reverse-lexicographic order of their parts.
pub fn partitions_of(k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    let mut current = Vec::with_capacity(k as usize);
    fill_partitions(k, k, &mut current, &mut out);
    out
}

fn fill_partitions(rest: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=rest.min(max_part)).rev() {
        current.push(part);
        fill_partitions(rest - part, part, current, out);
        current.pop();
    }
}

/// All length-`d` compositions of `t`, lexicographic. Empty when `d > t`.
pub fn compositions_of(t: u32, d: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    if d == 0 || d > t {
        return out;
    }
    for_each_composition(t, d, |parts| {
        out.push(Composition {
            parts: parts.to_vec(),
        })
    });
    out
}

/// Visits the length-`d` compositions of `t` in lexicographic order without
/// allocating one vector per composition.
pub fn for_each_composition<F: FnMut(&[u32])>(t: u32, d: u32, mut visit: F) {
    if d == 0 || d > t {
        return;
    }
    let d = d as usize;
    // Start at (1, ..., 1, t-d+1) and step like an odometer.
    let mut parts = vec![1u32; d];
    parts[d - 1] = t - (d as u32 - 1);
    loop {
        visit(&parts);
        // Find the rightmost position (excluding the last) that can grow:
        // growing position i needs the tail after it to give up one unit.
        let mut i = d - 1;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            let tail: u32 = parts[i + 1..].iter().sum();
            if tail > (d - i - 1) as u32 {
                break;
            }
        }
        parts[i] += 1;
        let tail: u32 = parts[i + 1..].iter().sum::<u32>() - 1;
        for p in parts[i + 1..d - 1].iter_mut() {
            *p = 1;
        }
        parts[d - 1] = tail - (d - i - 2) as u32;
    }
}

/// Eulerian number `<n, m>` by its explicit alternating sum.
///
/// Zero for `m < 0` and for `m >= n` when `n >= 1`; `<0, 0> = 1`, which is
/// what the explicit sum gives and what the empty permutation has.
pub fn eulerian(n: u32, m: i64) -> BigInt {
    if m < 0 {
        return BigInt::zero();
    }
    if n == 0 {
        return if m == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if m >= n as i64 {
        return BigInt::zero();
    }
    let mut acc = BigInt::zero();
    for j in 0..=m {
        let term = binomial_int(n as i64 + 1, j) * BigInt::from(m + 1 - j).pow(n);
        if j.is_odd() {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

/// Row `n` of the Eulerian triangle, `<n, 0> .. <n, n-1>` (just `[1]` for `n = 0`).
pub fn eulerian_row(n: u32) -> Vec<BigInt> {
    let len = n.max(1) as i64;
    (0..len).map(|m| eulerian(n, m)).collect()
}

/// Unsigned Stirling numbers of the first kind, `c(i, j)` for `0 <= j <= i <= max`.
pub fn stirling1_table(max: u32) -> Vec<Vec<BigInt>> {
    let max = max as usize;
    let mut table = vec![vec![BigInt::zero(); max + 1]; max + 1];
    table[0][0] = BigInt::one();
    for i in 1..=max {
        for j in 1..=i {
            let carried = &table[i - 1][j] * BigInt::from(i - 1);
            table[i][j] = &table[i - 1][j - 1] + carried;
        }
    }
    table
}

/// Unsigned Stirling number of the first kind.
pub fn stirling1_unsigned(i: u32, j: u32) -> BigInt {
    if j > i {
        return BigInt::zero();
    }
    stirling1_table(i)[i as usize][j as usize].clone()
}

/// Stirling number of the second kind from the explicit alternating sum
/// `S(n, m) = (1/m!) Σ_j (-1)^{m-j} C(m, j) j^n`.
pub fn stirling2(n: u32, m: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..=m {
        let term = binomial_int(m as i64, j as i64) * BigInt::from(j).pow(n);
        if (m - j) % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    let (q, r) = acc.div_rem(&factorial(m));
    assert!(
        r.is_zero(),
        "S({n}, {m}): alternating sum not divisible by {m}!"
    );
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn parts(list: &[Partition]) -> Vec<Vec<u32>> {
        list.iter().map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn falling_power_examples() {
        assert_eq!(falling_power(&rat(5), 3), rat(60));
        assert_eq!(falling_power(&ratio(7, 2), 0), rat(1));
        assert_eq!(falling_power(&rat(3), 5), rat(0));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(&rat(5), 2), rat(10));
        assert_eq!(binomial(&rat(4), -1), rat(0));
        assert_eq!(binomial(&rat(-1), 3), rat(-1));
        assert_eq!(binomial_int(-1, 3), BigInt::from(-1));
        assert_eq!(binomial_int(7, 9), BigInt::zero());
        assert_eq!(binomial(&ratio(1, 2), 2), ratio(-1, 8));
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(parts(&partitions_of(1)), vec![vec![1]]);
        assert_eq!(
            parts(&partitions_of(4)),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(partitions_of(5).len(), 7);
    }

    #[test]
    fn partition_validation_and_multiplicities() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_err());
        let p = Partition::new(vec![3, 3, 2, 1, 1, 1]).unwrap();
        assert_eq!(p.weight(), 11);
        assert_eq!(p.multiplicities(), vec![2, 1, 3]);
        assert_eq!(p.to_string(), "{3,3,2,1,1,1}");
    }

    #[test]
    fn composition_enumeration() {
        let c: Vec<Vec<u32>> = compositions_of(4, 2)
            .iter()
            .map(|c| c.parts().to_vec())
            .collect();
        assert_eq!(c, vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        let c: Vec<Vec<u32>> = compositions_of(3, 3)
            .iter()
            .map(|c| c.parts().to_vec())
            .collect();
        assert_eq!(c, vec![vec![1, 1, 1]]);
        assert!(compositions_of(2, 3).is_empty());
        let c: Vec<Vec<u32>> = compositions_of(5, 1)
            .iter()
            .map(|c| c.parts().to_vec())
            .collect();
        assert_eq!(c, vec![vec![5]]);
    }

    #[test]
    fn compositions_are_lexicographic() {
        let all = compositions_of(9, 4);
        for w in all.windows(2) {
            assert!(w[0].parts() < w[1].parts());
        }
    }

    #[test]
    fn eulerian_examples() {
        assert_eq!(eulerian(4, 1), BigInt::from(11));
        assert_eq!(eulerian(8, 3), BigInt::from(15619));
        assert_eq!(eulerian(5, 5), BigInt::zero());
        assert_eq!(eulerian(5, -1), BigInt::zero());
        assert_eq!(eulerian(0, 0), BigInt::one());
    }

    #[test]
    fn stirling_examples() {
        assert_eq!(stirling1_unsigned(4, 2), BigInt::from(11));
        assert_eq!(stirling1_unsigned(0, 0), BigInt::one());
        assert_eq!(stirling1_unsigned(3, 0), BigInt::zero());
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(6, 6), BigInt::one());
        assert_eq!(stirling2(3, 5), BigInt::zero());
        assert_eq!(stirling2(0, 0), BigInt::one());
        assert_eq!(stirling2(3, 0), BigInt::zero());
    }
}
