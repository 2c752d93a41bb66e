use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactmath::{snf, DegreeVector, IntMatrix, Rational, RationalMatrix};
use crate::polyring::{GradingSpec, Polynomial};

use super::StillmanError;

/// The universal grading making a set of polynomials homogeneous.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinestGrading {
    pub grading: GradingSpec,
    /// Invariant factors `> 1` of `Z^n / relations`; dropped from the grading.
    pub torsion: Vec<BigInt>,
}

impl FinestGrading {
    pub fn rank(&self) -> usize {
        self.grading.rank()
    }

    /// Degree of a homogeneous polynomial in this grading.
    pub fn degree_of(&self, f: &Polynomial) -> Option<DegreeVector> {
        let m = f.monomials().next()?;
        let mut acc = DegreeVector::zero(self.rank());
        for &(v, e) in m.pairs() {
            acc = &acc + &self.grading.degree(v)?.scale_int(u64::from(e));
        }
        Some(acc)
    }
}

/// Finest grading of `k[x_0..x_{n-1}]` for which every generator is
/// homogeneous.
///
/// Each generator contributes the relations `m_j - m_0` between its
/// exponent vectors. With `U D V` the Smith form of the relation matrix and
/// `r` its rank, `x -> x V` identifies `Z^n / rowspace` with
/// `⊕ Z/s_i ⊕ Z^(n-r)`, so variable `j` gets row `j` of `V` restricted to
/// the last `n - r` columns.
pub fn finest_grading(gens: &[Polynomial], nvars: usize) -> Result<FinestGrading, StillmanError> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, f) in gens.iter().enumerate() {
        if f.is_zero() {
            return Err(StillmanError::InvalidParameter(format!("generator {i} is zero")));
        }
        if f.max_var().is_some_and(|v| v >= nvars) {
            return Err(StillmanError::InvalidParameter(format!(
                "generator {i} uses a variable beyond the first {nvars}"
            )));
        }
        let mut monos = f.monomials().map(|m| m.to_dense(nvars));
        let first = monos.next().expect("nonzero polynomial");
        for m in monos {
            rows.push(
                m.iter()
                    .zip(&first)
                    .map(|(a, b)| BigInt::from(i64::from(*a) - i64::from(*b)))
                    .collect(),
            );
        }
    }
    let (r, right, torsion) = if rows.is_empty() {
        (0, IntMatrix::identity(nvars), Vec::new())
    } else {
        let form = snf(&IntMatrix::from_rows(rows)?);
        let torsion = form
            .invariant_factors()
            .into_iter()
            .filter(|s| !s.is_one())
            .collect();
        (form.rank(), form.right, torsion)
    };
    let rank = nvars - r;
    let degrees = (0..nvars)
        .map(|j| {
            DegreeVector::new(
                (r..nvars)
                    .map(|c| Rational::from_integer(right.get(j, c).clone()))
                    .collect(),
            )
        })
        .collect();
    let grading = GradingSpec::new(rank, degrees)?;
    let out = FinestGrading { grading, torsion };
    for (i, f) in gens.iter().enumerate() {
        if !is_homogeneous_for(&out.grading, f) {
            return Err(StillmanError::Internal(format!(
                "generator {i} is not homogeneous for the finest grading"
            )));
        }
    }
    Ok(out)
}

fn monomial_degree_in(grading: &GradingSpec, m: &crate::polyring::Monomial) -> DegreeVector {
    m.pairs()
        .iter()
        .fold(DegreeVector::zero(grading.rank()), |acc, &(v, e)| {
            &acc + &grading.degrees()[v].scale_int(u64::from(e))
        })
}

pub(crate) fn is_homogeneous_for(grading: &GradingSpec, f: &Polynomial) -> bool {
    let mut degs = f.monomials().map(|m| monomial_degree_in(grading, m));
    match degs.next() {
        None => true,
        Some(first) => degs.all(|d| d == first),
    }
}

/// A matrix `X` with `deg_other(x_j) = deg_finest(x_j) X` for every
/// variable, i.e. `other` is a coarsening of `finest` through `X`. `None` if
/// `other` does not factor through `finest`.
pub fn factor_through(finest: &GradingSpec, other: &GradingSpec) -> Option<RationalMatrix> {
    if finest.len() != other.len() {
        return None;
    }
    if finest.rank() == 0 || other.rank() == 0 {
        // only the trivial grading factors through the zero group
        let trivial = other.degrees().iter().all(DegreeVector::is_zero);
        return trivial.then(|| RationalMatrix::zeros(finest.rank(), other.rank()));
    }
    let f = RationalMatrix::from_rows(finest.degrees().iter().map(|d| d.entries().to_vec()).collect()).ok()?;
    let g = RationalMatrix::from_rows(other.degrees().iter().map(|d| d.entries().to_vec()).collect()).ok()?;
    let x = f.solve(&g)?;
    (f.mul(&x) == g).then_some(x)
}

/// Degrees of `gens` after pushing the finest grading through `x`.
pub fn coarsen_degrees(degrees: &[DegreeVector], x: &RationalMatrix) -> Vec<DegreeVector> {
    degrees
        .iter()
        .map(|d| {
            DegreeVector::new(
                (0..x.cols())
                    .map(|c| {
                        d.entries()
                            .iter()
                            .enumerate()
                            .fold(Rational::zero(), |acc, (r, a)| acc + a * x.get(r, c))
                    })
                    .collect(),
            )
        })
        .collect()
}
