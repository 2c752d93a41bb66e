//! Exact rational and integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers and rationals;
//! nothing is ever rounded. The pieces are:
//!
//! * [`DegreeVector`], a vector in `Q^k` used for grading-group elements;
//! * [`IntMatrix`] / [`RationalMatrix`] with [`snf`] and an exact linear solver;
//! * [`positive_functional_or_certificate`], the Gordan alternative decided
//!   by Fourier–Motzkin elimination;
//! * [`bounded_nonneg_solutions`], enumeration of short nonnegative integer
//!   combinations hitting a target.

mod enumerate;
mod gordan;
mod matrix;
mod vector;

pub use enumerate::bounded_nonneg_solutions;
pub use gordan::{positive_functional_or_certificate, GordanOutcome};
pub use matrix::{snf, IntMatrix, RationalMatrix, SmithForm};
pub use vector::DegreeVector;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational number. Always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("generator {0} is the zero vector")]
    ZeroGenerator(usize),
    #[error("matrix is not rectangular")]
    NotRectangular,
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num/den`; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn common_denominator<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a Rational>,
{
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Scale a nonzero rational vector to the primitive integer vector on the
/// same ray: clear denominators, then divide by the gcd of the entries.
pub fn primitive_integer_vector(values: &[Rational]) -> Vec<BigInt> {
    let den = common_denominator(values);
    let ints: Vec<BigInt> = values
        .iter()
        .map(|q| (q * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Exact floor of a rational as an integer.
pub fn floor(q: &Rational) -> BigInt {
    q.floor().to_integer()
}

/// `true` iff `q` is a (possibly negative) integer.
pub fn is_integral(q: &Rational) -> bool {
    q.denom().is_one()
}
