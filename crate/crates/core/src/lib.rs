//! Exact arithmetic for Moser polynomials and the multiset recovery problem.
//!
//! For an `n`-multiset `A` and `1 <= s <= n`, the `s`-sum multiset `A^(s)` holds
//! the `C(n, s)` sums of `s` distinct-index elements of `A`. Every power sum
//! `p_k(A^(s))` with `k <= n` is an integer polynomial in `p_1(A), ..., p_k(A)`
//! whose top coefficient is the value of the Moser polynomial `F_{s,k}` at `n`.
//! When none of `F_{s,1}(n), ..., F_{s,n}(n)` vanish, `A` can be rebuilt from
//! `A^(s)` one power sum at a time.
//!
//! The crate is organised as:
//!
//! * [`combinatorics`]: binomials, falling powers, partitions, compositions,
//!   Eulerian and Stirling numbers.
//! * [`polynomials`]: dense univariate polynomials over the rationals in the
//!   monomial or falling-factorial basis, plus exact and numeric root finding.
//! * [`moser`]: Moser polynomials, the `c_λ` coefficients and [`QPolynomial`].
//! * [`symfun`]: multisets, power sums, elementary symmetric functions,
//!   Newton–Girard conversion and the bivariate generating-function tables.
//! * [`recovery`]: solvability reports, power-sum recovery and reconstruction.
//! * [`verify`]: the seeded property suites behind `moser verify`.
//!
//! All exact values are [`Rational`] (`num_rational::BigRational`) or
//! `num_bigint::BigInt`; floating point only appears on the numeric root path.

pub mod combinatorics;
pub mod error;
pub mod io;
pub mod moser;
pub mod polynomials;
pub mod recovery;
pub mod rng;
pub mod symfun;
pub mod verify;

pub use num_bigint::BigInt;
pub use num_complex::Complex64;
pub use num_rational::BigRational;

/// Exact arbitrary-precision rational; always stored in lowest terms.
pub type Rational = BigRational;

pub use combinatorics::{Composition, Partition};
pub use error::{Error, Result};
pub use moser::{MoserPolynomial, QPolynomial};
pub use polynomials::{Basis, DensePolynomial};
pub use recovery::{RecoveryMode, RecoveryResult, SolvabilityReport};
pub use rng::SplitMix64;
pub use symfun::{NumberMultiset, PowerSumVector, SeriesTable};

/// Integer-valued rational.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den` as a reduced rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
