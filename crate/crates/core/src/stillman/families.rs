use num_bigint::BigInt;
use num_traits::One;

use crate::exactmath::{DegreeVector, Rational};
use crate::monoid::{self, FgMonoid};
use crate::polyring::{CoefficientField, GradingSpec, IdealPresentation, MGPolyRing, Monomial, Polynomial};

use super::StillmanError;

/// `I_n = <x^n, y^n, x^(n-1) z_1 + x^(n-2) y z_2 + ... + y^(n-1) z_n>` in
/// `k[x, y, z_1, ..., z_n]` with every variable in degree `1/n`.
pub fn mccullough_family(n: usize) -> Result<IdealPresentation, StillmanError> {
    if n < 1 {
        return Err(StillmanError::InvalidParameter(format!("McCullough family needs n >= 1, got {n}")));
    }
    let mut names = vec!["x".to_string(), "y".to_string()];
    names.extend((1..=n).map(|i| format!("z{i}")));
    let degree = DegreeVector::new(vec![Rational::new(BigInt::one(), BigInt::from(n))]);
    let grading = GradingSpec::new(1, vec![degree; n + 2])?;
    let ring = MGPolyRing::new(names, grading, CoefficientField::default())?;
    let e = |k: usize| k as u32;
    let third = Polynomial::from_terms((1..=n).map(|i| {
        (
            Monomial::from_pairs([(0, e(n - i)), (1, e(i - 1)), (i + 1, 1)]),
            Rational::one(),
        )
    }));
    let gens = vec![
        Polynomial::term(Monomial::from_pairs([(0, e(n))]), Rational::one()),
        Polynomial::term(Monomial::from_pairs([(1, e(n))]), Rational::one()),
        third,
    ];
    Ok(IdealPresentation::new(ring, gens)?)
}

/// `f_1 = Π x_i`, `f_2 = Π y_i`, `f_3 = Σ_i Π_{j≠i} x_j y_j` over
/// `variables`, the first `n` of which are the `x_i`.
fn burch_kohn_generators(n: usize) -> Vec<Polynomial> {
    let xs: Vec<usize> = (0..n).collect();
    let ys: Vec<usize> = (n..2 * n).collect();
    let f3 = Polynomial::from_terms((0..n).map(|i| {
        let vars = (0..n).filter(|&j| j != i).flat_map(|j| [(j, 1), (n + j, 1)]);
        (Monomial::from_pairs(vars), Rational::one())
    }));
    vec![Polynomial::product_of_vars(&xs), Polynomial::product_of_vars(&ys), f3]
}

fn burch_kohn_names(n: usize) -> Vec<String> {
    (1..=n)
        .map(|i| format!("x{i}"))
        .chain((1..=n).map(|i| format!("y{i}")))
        .collect()
}

/// The three Burch–Kohn generators in `k[x_1..x_n, y_1..y_n]`, standard
/// grading.
pub fn burch_kohn_family(n: usize) -> Result<IdealPresentation, StillmanError> {
    if n < 2 {
        return Err(StillmanError::InvalidParameter(format!(
            "Burch-Kohn family needs n >= 2, got {n} (f_3 would be a unit)"
        )));
    }
    let ring = MGPolyRing::new(burch_kohn_names(n), GradingSpec::standard(2 * n), CoefficientField::default())?;
    Ok(IdealPresentation::new(ring, burch_kohn_generators(n))?)
}

/// A factorization `target = parts[0] + ... + parts[B-1]` into nonzero
/// elements of a monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationCert {
    pub target: DegreeVector,
    pub parts: Vec<DegreeVector>,
}

impl FactorizationCert {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The parts are nonzero and sum to the target.
    pub fn verify(&self) -> bool {
        let dim = self.target.dimension();
        let sum = self
            .parts
            .iter()
            .fold(DegreeVector::zero(dim), |acc, p| &acc + p);
        sum == self.target && self.parts.iter().all(|p| !p.is_zero() && p.dimension() == dim)
    }
}

/// Counterexample to a uniform bound for a monoid without bounded
/// factorization: a length-`b` factorization `d = d_1 + ... + d_b` and the
/// Burch–Kohn ideal in `k[x_1..x_b, y_1..y_b]` graded by
/// `deg x_i = deg y_i = d_i`. Then `f_1`, `f_2` have degree `d`, every
/// monomial `Π_{j≠i} x_j y_j` of `f_3` has degree `2d - 2d_i <= 2d`, and the
/// projective dimension is `b + 2`.
///
/// The factorization is the zero relation repeated until at least `b - 1`
/// parts are available, followed by `d` itself; adjacent parts are then
/// merged left to right, never creating a zero part, until `b` remain.
pub fn non_bf_counterexample(
    m: &FgMonoid,
    b: usize,
) -> Result<(MGPolyRing, IdealPresentation, FactorizationCert), StillmanError> {
    if b < 2 {
        return Err(StillmanError::InvalidParameter(format!("need b >= 2, got {b}")));
    }
    let (bf, _, cert) = monoid::has_bounded_factorization(m);
    if bf {
        return Err(StillmanError::BoundedFactorization);
    }
    let cert = cert.expect("non-BF verdict carries a certificate");
    let in_relation = |g: &DegreeVector| cert.relation.iter().any(|(h, _)| h == g);
    let d = m
        .generators()
        .iter()
        .find(|g| !in_relation(g))
        .unwrap_or(&m.generators()[0])
        .clone();
    let relation = cert.parts();
    let rounds = (b - 1).div_ceil(relation.len());
    let mut parts: Vec<DegreeVector> = Vec::with_capacity(rounds * relation.len() + 1);
    for _ in 0..rounds {
        parts.extend(relation.iter().cloned());
    }
    parts.push(d.clone());

    while parts.len() > b {
        let adjacent = (0..parts.len() - 1).find(|&i| !(&parts[i] + &parts[i + 1]).is_zero());
        let (i, j) = match adjacent {
            Some(i) => (i, i + 1),
            // with at least three nonzero parts some pair has a nonzero sum
            None => (0..parts.len())
                .flat_map(|i| (i + 1..parts.len()).map(move |j| (i, j)))
                .find(|&(i, j)| !(&parts[i] + &parts[j]).is_zero())
                .ok_or_else(|| StillmanError::Internal("no nonzero merge available".into()))?,
        };
        let merged = &parts[i] + &parts[j];
        parts[i] = merged;
        parts.remove(j);
    }
    let cert = FactorizationCert { target: d, parts };
    if !cert.verify() {
        return Err(StillmanError::Internal("factorization certificate failed".into()));
    }

    let degrees: Vec<DegreeVector> = cert.parts.iter().chain(cert.parts.iter()).cloned().collect();
    let grading = GradingSpec::new(m.dimension(), degrees)?;
    let ring = MGPolyRing::new(burch_kohn_names(b), grading, CoefficientField::default())?;
    let ideal = IdealPresentation::new(ring.clone(), burch_kohn_generators(b))?;
    Ok((ring, ideal, cert))
}
