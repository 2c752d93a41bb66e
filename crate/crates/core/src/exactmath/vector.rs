use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{rat, MathError, Rational};

/// An exact element of `Q^k`.
///
/// Grading groups are represented by their embedding into a rational vector
/// space, so a degree is just a rational vector of the grading's rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeVector {
    entries: Vec<Rational>,
}

impl DegreeVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        DegreeVector { entries }
    }

    pub fn zero(dimension: usize) -> Self {
        DegreeVector {
            entries: vec![Rational::zero(); dimension],
        }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        DegreeVector {
            entries: values.iter().map(|&v| rat(v)).collect(),
        }
    }

    /// The `i`-th standard basis vector of `Q^dimension`.
    pub fn unit(dimension: usize, i: usize) -> Self {
        let mut v = Self::zero(dimension);
        v.entries[i] = rat(1);
        v
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(super::is_integral)
    }

    pub fn check_dimension(&self, expected: usize) -> Result<(), MathError> {
        if self.dimension() == expected {
            Ok(())
        } else {
            Err(MathError::DimensionMismatch {
                expected,
                found: self.dimension(),
            })
        }
    }

    /// Dot product; panics on mismatched dimensions.
    pub fn dot(&self, other: &DegreeVector) -> Rational {
        assert_eq!(self.dimension(), other.dimension(), "dot: dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, factor: &Rational) -> DegreeVector {
        DegreeVector {
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn scale_int(&self, factor: u64) -> DegreeVector {
        self.scale(&Rational::from_integer(BigInt::from(factor)))
    }

    /// Integer entries, if every entry is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|q| super::is_integral(q).then(|| q.to_integer()))
            .collect()
    }

    /// Strictly positive in every coordinate.
    pub fn is_positive(&self) -> bool {
        self.entries.iter().all(Signed::is_positive)
    }
}

impl Index<usize> for DegreeVector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

impl Add for &DegreeVector {
    type Output = DegreeVector;

    fn add(self, rhs: &DegreeVector) -> DegreeVector {
        assert_eq!(self.dimension(), rhs.dimension(), "add: dimension mismatch");
        DegreeVector {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &DegreeVector {
    type Output = DegreeVector;

    fn sub(self, rhs: &DegreeVector) -> DegreeVector {
        assert_eq!(self.dimension(), rhs.dimension(), "sub: dimension mismatch");
        DegreeVector {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &DegreeVector {
    type Output = DegreeVector;

    fn neg(self) -> DegreeVector {
        DegreeVector {
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<Rational>> for DegreeVector {
    fn from(entries: Vec<Rational>) -> Self {
        DegreeVector::new(entries)
    }
}
