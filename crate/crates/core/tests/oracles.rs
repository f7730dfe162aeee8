//! Brute-force oracles, written without reference to the library's formulas.

use moser::combinatorics::{eulerian, partitions_of, stirling1_unsigned, stirling2};
use moser::moser::{c_lambda, moser_value, q_polynomial};
use moser::recovery::{find_ambiguous_pairs, normalize_pair, solvability};
use moser::symfun::{
    power_sum_complex, power_sums, roots_of_unity_multiset, s_sums, s_sums_complex,
};
use moser::verify::random_rational_multiset;
use moser::{rat, BigInt, NumberMultiset, Rational, SplitMix64};
use num_traits::{One, ToPrimitive, Zero};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn cycles(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut count = 0;
    for start in 0..p.len() {
        if !seen[start] {
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = p[i];
            }
        }
    }
    count
}

#[test]
fn eulerian_counts_descents() {
    for n in 1..=7usize {
        let mut counts = vec![0u64; n];
        for p in permutations(n) {
            counts[p.windows(2).filter(|w| w[0] > w[1]).count()] += 1;
        }
        for (m, &c) in counts.iter().enumerate() {
            assert_eq!(eulerian(n as u32, m as i64), BigInt::from(c), "<{n},{m}>");
        }
    }
}

#[test]
fn stirling1_counts_cycles() {
    for n in 0..=7usize {
        let mut counts = vec![0u64; n + 1];
        for p in permutations(n) {
            counts[cycles(&p)] += 1;
        }
        for (j, &c) in counts.iter().enumerate() {
            assert_eq!(
                stirling1_unsigned(n as u32, j as u32),
                BigInt::from(c),
                "c({n},{j})"
            );
        }
    }
}

#[test]
fn stirling2_counts_set_partitions() {
    // Restricted growth strings enumerate set partitions.
    fn rgs(n: usize, prefix: &mut Vec<usize>, counts: &mut Vec<u64>) {
        if prefix.len() == n {
            counts[prefix.iter().max().map_or(0, |m| m + 1)] += 1;
            return;
        }
        let limit = prefix.iter().max().map_or(0, |m| m + 1);
        for b in 0..=limit {
            prefix.push(b);
            rgs(n, prefix, counts);
            prefix.pop();
        }
    }
    for n in 0..=8usize {
        let mut counts = vec![0u64; n + 1];
        rgs(n, &mut Vec::new(), &mut counts);
        for (m, &c) in counts.iter().enumerate() {
            assert_eq!(stirling2(n as u32, m as u32), BigInt::from(c), "S({n},{m})");
        }
    }
}

#[allow(clippy::needless_range_loop)]
fn solve(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        rhs.swap(col, pivot);
        for r in 0..n {
            if r != col && !rows[r][col].is_zero() {
                let f = &rows[r][col] / &rows[col][col];
                for c in col..n {
                    let sub = &f * &rows[col][c];
                    rows[r][c] -= sub;
                }
                let sub = &f * &rhs[col];
                rhs[r] -= sub;
            }
        }
    }
    Some((0..n).map(|i| &rhs[i] / &rows[i][i]).collect())
}

/// Recover the coefficients of p_k(A^(s)) in the p_lambda basis by sampling
/// random multisets and solving the resulting linear system.
#[test]
fn c_lambda_matches_interpolation() {
    let mut rng = SplitMix64::new(7);
    for n in 1..=6u32 {
        for k in 1..=n.min(5) {
            for s in 1..=n {
                let parts = partitions_of(k);
                let mut attempt = 0;
                let solution = loop {
                    attempt += 1;
                    assert!(attempt < 20, "singular sampling for s={s} k={k} n={n}");
                    let mut rows = Vec::new();
                    let mut rhs = Vec::new();
                    for _ in 0..parts.len() {
                        let a = random_rational_multiset(&mut rng, n as usize, 5);
                        let p = power_sums(&a, k as usize);
                        rows.push(
                            parts
                                .iter()
                                .map(|lam| lam.parts().iter().map(|&i| p.get(i as usize)).product())
                                .collect(),
                        );
                        rhs.push(
                            power_sums(&s_sums(&a, s as usize).unwrap(), k as usize)
                                .get(k as usize),
                        );
                    }
                    if let Some(x) = solve(rows, rhs) {
                        break x;
                    }
                };
                for (lam, value) in parts.iter().zip(solution) {
                    let c = c_lambda(s, k, n, lam).unwrap();
                    assert_eq!(
                        Rational::from_integer(c),
                        value,
                        "c_{lam} s={s} k={k} n={n}"
                    );
                }
            }
        }
    }
}

#[test]
fn roots_of_unity_isolate_the_moser_coefficient() {
    for n in 1..=8usize {
        for k in 1..=n {
            let z = roots_of_unity_multiset(n, k);
            for s in 1..=n {
                let got = power_sum_complex(&s_sums_complex(&z, s), k as u32) / k as f64;
                let expected = moser_value(s as u32, k as u32, &rat(n as i64))
                    .to_f64()
                    .unwrap();
                assert!(
                    (got.re - expected).abs() < 1e-6 && got.im.abs() < 1e-6,
                    "s={s} k={k} n={n}"
                );
            }
        }
    }
}

#[test]
fn moser_value_is_top_coefficient() {
    for n in 1..=9u32 {
        for k in 1..=n {
            for s in 1..=n {
                let q = q_polynomial(s, k, n).unwrap();
                assert_eq!(
                    Rational::from_integer(q.top_coefficient()),
                    moser_value(s, k, &rat(n as i64))
                );
            }
        }
    }
}

#[test]
fn ambiguity_witness_is_found_by_brute_force() {
    let a = NumberMultiset::from_integers(&[1, 4, 5, 6]);
    let b = NumberMultiset::from_integers(&[2, 3, 4, 7]);
    assert_eq!(s_sums(&a, 2).unwrap(), s_sums(&b, 2).unwrap());
    let pairs = find_ambiguous_pairs(4, 2, 7, usize::MAX).unwrap();
    assert!(pairs.contains(&normalize_pair(&a, &b)));
    assert!(solvability(4, 2).unwrap().vanishing_k == vec![3]);
}

#[test]
fn power_sum_of_single_element() {
    let a = NumberMultiset::new(vec![Rational::one() / rat(3)]);
    assert_eq!(power_sums(&a, 3).get(3), Rational::one() / rat(27));
}
