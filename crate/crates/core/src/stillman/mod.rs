//! Stillman-type bounds for multigraded ideals.
//!
//! When the support of a connected grading has bounded factorization, a
//! height functional `w` turns any degree bound `d` into the standard-degree
//! bound `⌊w·d⌋` ([`flatten_degree_bound`]), and standard-graded bounds
//! apply. Without bounded factorization, [`non_bf_counterexample`] builds
//! ideals of fixed degree sequence with unbounded projective dimension.
//! [`stillman_report`] collects the available bounds for one ideal.

mod families;
mod finest;
mod report;

pub use families::{burch_kohn_family, mccullough_family, non_bf_counterexample, FactorizationCert};
pub use finest::{coarsen_degrees, factor_through, finest_grading, FinestGrading};
pub use report::{
    homogenizing_weight, known_bounds, lookup_known_bound, parse_known_bounds, stillman_report, BoundReport,
    KnownBound, ReportOptions,
};

use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::exactmath::{DegreeVector, MathError};
use crate::monoid::{HeightWitness, MonoidError, NonBfCertificate};
use crate::polyring::RingError;
use crate::resolution::ResolutionError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StillmanError {
    #[error("grading is not connected: variable `{0}` has degree zero")]
    NotConnected(String),
    #[error("support does not have bounded factorization: {0}")]
    NotBoundedFactorization(NonBfCertificate),
    #[error("monoid has bounded factorization, so no counterexample exists")]
    BoundedFactorization,
    #[error("a generator has a monomial outside its degree bound")]
    DegreeSequenceViolated,
    #[error("degree {0} is not bounded below by the height witness")]
    NegativeHeight(DegreeVector),
    #[error("{0}")]
    InvalidParameter(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
    #[error(transparent)]
    Math(#[from] MathError),
}

/// A degree bound for each generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(Vec<DegreeVector>);

impl DegreeSequence {
    pub fn new(degrees: Vec<DegreeVector>) -> Result<Self, StillmanError> {
        let Some(first) = degrees.first() else {
            return Err(StillmanError::InvalidParameter("empty degree sequence".into()));
        };
        let dim = first.dimension();
        for d in &degrees {
            d.check_dimension(dim)?;
        }
        Ok(DegreeSequence(degrees))
    }

    pub fn degrees(&self) -> &[DegreeVector] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `⌊w·d⌋`: every monomial of degree `<= d` has at most this many
/// variable factors, since each contributes at least 1 to `w`.
pub fn flatten_degree_bound(w: &HeightWitness, d: &DegreeVector) -> Result<u64, StillmanError> {
    if d.dimension() != w.functional().dimension() {
        return Err(MathError::DimensionMismatch {
            expected: w.functional().dimension(),
            found: d.dimension(),
        }
        .into());
    }
    let n = w.length_bound(d);
    if n.is_negative() {
        return Err(StillmanError::NegativeHeight(d.clone()));
    }
    n.to_u64()
        .ok_or_else(|| StillmanError::InvalidParameter(format!("bound for {d} does not fit in 64 bits")))
}
