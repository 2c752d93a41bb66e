//! Polynomial rings graded by a subgroup of `Q^k`.
//!
//! Grading data is independent of any monomial order; orders only appear in
//! [`crate::resolution`].

mod poly;

pub use poly::{Monomial, Polynomial};

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactmath::{DegreeVector, MathError, RationalMatrix};
use crate::monoid::{self, FgMonoid, MonoidError};

pub const DEFAULT_PRIME: u32 = 32003;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("variable index {0} is out of range")]
    UnknownVariable(usize),
    #[error("grading has rank {expected} but a degree has {found} entries")]
    RankMismatch { expected: usize, found: usize },
    #[error("expected {expected} degrees, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("ideal generators must be nonzero")]
    ZeroGenerator,
    #[error("{0} is not a prime below 2^31")]
    InvalidPrime(u64),
    #[error("target generators do not contain the current support generator {0}")]
    MissingSupportGenerator(DegreeVector),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
    #[error(transparent)]
    Math(#[from] MathError),
}

/// Coefficient field of a ring: `QQ` or `GF(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    Rationals,
    Prime(u32),
}

impl CoefficientField {
    pub fn prime(p: u64) -> Result<Self, RingError> {
        if p >= (1 << 31) || !monoid::builtin::is_prime(p) {
            return Err(RingError::InvalidPrime(p));
        }
        Ok(CoefficientField::Prime(p as u32))
    }
}

impl Default for CoefficientField {
    fn default() -> Self {
        CoefficientField::Prime(DEFAULT_PRIME)
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "QQ"),
            CoefficientField::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// Degree of every variable, all of the same rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradingSpec {
    rank: usize,
    degrees: Vec<DegreeVector>,
}

impl GradingSpec {
    pub fn new(rank: usize, degrees: Vec<DegreeVector>) -> Result<Self, RingError> {
        for d in &degrees {
            if d.dimension() != rank {
                return Err(RingError::RankMismatch {
                    expected: rank,
                    found: d.dimension(),
                });
            }
        }
        Ok(GradingSpec { rank, degrees })
    }

    /// Every variable in degree 1.
    pub fn standard(nvars: usize) -> Self {
        GradingSpec {
            rank: 1,
            degrees: vec![DegreeVector::from_ints(&[1]); nvars],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degrees(&self) -> &[DegreeVector] {
        &self.degrees
    }

    pub fn degree(&self, var: usize) -> Option<&DegreeVector> {
        self.degrees.get(var)
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }
}

/// A polynomial ring with named variables, a grading and a coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MGPolyRing {
    variables: Vec<String>,
    grading: GradingSpec,
    field: CoefficientField,
}

impl MGPolyRing {
    pub fn new(
        variables: Vec<String>,
        grading: GradingSpec,
        field: CoefficientField,
    ) -> Result<Self, RingError> {
        let mut seen = BTreeSet::new();
        for v in &variables {
            if !seen.insert(v.as_str()) {
                return Err(RingError::DuplicateVariable(v.clone()));
            }
        }
        if grading.len() != variables.len() {
            return Err(RingError::LengthMismatch {
                expected: variables.len(),
                found: grading.len(),
            });
        }
        Ok(MGPolyRing {
            variables,
            grading,
            field,
        })
    }

    /// `k[names]` with every variable in degree 1.
    pub fn standard(names: &[&str], field: CoefficientField) -> Result<Self, RingError> {
        let vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let grading = GradingSpec::standard(vars.len());
        Self::new(vars, grading, field)
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn grading(&self) -> &GradingSpec {
        &self.grading
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn with_field(&self, field: CoefficientField) -> MGPolyRing {
        MGPolyRing {
            field,
            ..self.clone()
        }
    }

    pub fn with_grading(&self, grading: GradingSpec) -> Result<MGPolyRing, RingError> {
        MGPolyRing::new(self.variables.clone(), grading, self.field)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn format(&self, f: &Polynomial) -> String {
        f.format_with(&self.variables)
    }

    fn check_poly(&self, f: &Polynomial) -> Result<(), RingError> {
        match f.max_var() {
            Some(v) if v >= self.nvars() => Err(RingError::UnknownVariable(v)),
            _ => Ok(()),
        }
    }
}

/// An ideal given by a list of nonzero generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealPresentation {
    ring: MGPolyRing,
    generators: Vec<Polynomial>,
}

impl IdealPresentation {
    pub fn new(ring: MGPolyRing, generators: Vec<Polynomial>) -> Result<Self, RingError> {
        for g in &generators {
            if g.is_zero() {
                return Err(RingError::ZeroGenerator);
            }
            ring.check_poly(g)?;
        }
        Ok(IdealPresentation { ring, generators })
    }

    pub fn ring(&self) -> &MGPolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Same generators in a ring with a different grading or field.
    pub fn with_ring(&self, ring: MGPolyRing) -> Result<Self, RingError> {
        IdealPresentation::new(ring, self.generators.clone())
    }

    /// Distinct variables occurring in the generators.
    pub fn used_variables(&self) -> BTreeSet<usize> {
        self.generators.iter().flat_map(Polynomial::variables).collect()
    }
}

/// `Σ e_i deg(x_i)`.
pub fn monomial_degree(ring: &MGPolyRing, m: &Monomial) -> Result<DegreeVector, RingError> {
    let mut out = DegreeVector::zero(ring.grading.rank);
    for &(v, e) in m.pairs() {
        let d = ring.grading.degree(v).ok_or(RingError::UnknownVariable(v))?;
        out = &out + &d.scale_int(u64::from(e));
    }
    Ok(out)
}

/// The common degree of all monomials of `f`, if they share one.
pub fn is_homogeneous(ring: &MGPolyRing, f: &Polynomial) -> Result<Option<DegreeVector>, RingError> {
    let mut degree: Option<DegreeVector> = None;
    for m in f.monomials() {
        let d = monomial_degree(ring, m)?;
        match &degree {
            None => degree = Some(d),
            Some(prev) if *prev != d => return Ok(None),
            _ => {}
        }
    }
    degree.map(Some).ok_or(RingError::ZeroPolynomial)
}

/// The support monoid, generated by the nonzero variable degrees, together
/// with the indices of variables of degree zero.
pub fn support_monoid(ring: &MGPolyRing) -> Result<(FgMonoid, Vec<usize>), RingError> {
    let zero_vars: Vec<usize> = (0..ring.nvars())
        .filter(|&i| ring.grading.degrees[i].is_zero())
        .collect();
    let m = FgMonoid::new(ring.grading.rank, ring.grading.degrees.clone())?;
    Ok((m, zero_vars))
}

/// Degree-zero part is the field: no variable of degree zero and a pointed
/// support (then no nonconstant monomial can have degree zero).
pub fn is_connected(ring: &MGPolyRing) -> Result<bool, RingError> {
    let (m, zero_vars) = support_monoid(ring)?;
    Ok(zero_vars.is_empty() && monoid::is_pointed(&m).0)
}

/// Every monomial of generator `i` has degree `<=_Λ d[i]` in the support
/// monoid (reflexive order).
pub fn degree_sequence_check(ideal: &IdealPresentation, d: &[DegreeVector]) -> Result<bool, RingError> {
    let gens = ideal.generators();
    if d.len() != gens.len() {
        return Err(RingError::LengthMismatch {
            expected: gens.len(),
            found: d.len(),
        });
    }
    let (m, _) = support_monoid(&ideal.ring)?;
    for (f, bound) in gens.iter().zip(d) {
        bound.check_dimension(m.dimension())?;
        for mono in f.monomials() {
            let deg = monomial_degree(&ideal.ring, mono)?;
            if !monoid::leq(&m, &deg, bound)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A ring regraded through a linear map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regraded {
    pub ring: MGPolyRing,
    /// For rank-1 targets: whether every variable degree is positive.
    pub positive: Option<bool>,
}

/// Push every variable degree through `hom` (a `k' x k` matrix acting on
/// column vectors).
pub fn regrade(ring: &MGPolyRing, hom: &RationalMatrix) -> Result<Regraded, RingError> {
    let k = ring.grading.rank;
    if hom.cols() != k {
        return Err(RingError::RankMismatch {
            expected: k,
            found: hom.cols(),
        });
    }
    let degrees: Vec<DegreeVector> = ring
        .grading
        .degrees
        .iter()
        .map(|d| apply_hom(hom, d))
        .collect();
    let positive =
        (hom.rows() == 1).then(|| degrees.iter().all(|d| d[0].is_positive()));
    let grading = GradingSpec::new(hom.rows(), degrees)?;
    Ok(Regraded {
        ring: ring.with_grading(grading)?,
        positive,
    })
}

pub(crate) fn apply_hom(hom: &RationalMatrix, d: &DegreeVector) -> DegreeVector {
    DegreeVector::new(
        (0..hom.rows())
            .map(|r| {
                hom.row(r)
                    .iter()
                    .zip(d.entries())
                    .fold(num_rational::BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect(),
    )
}

/// Add one fresh variable for every target degree that is not yet the degree
/// of some variable, so that the support becomes generated by `target`.
pub fn adjoin_support_variables(
    ring: &MGPolyRing,
    target: &[DegreeVector],
) -> Result<MGPolyRing, RingError> {
    for t in target {
        t.check_dimension(ring.grading.rank)?;
    }
    let (m, _) = support_monoid(ring)?;
    if let Some(missing) = m.generators().iter().find(|g| !target.contains(g)) {
        return Err(RingError::MissingSupportGenerator(missing.clone()));
    }
    let mut variables = ring.variables.clone();
    let mut degrees = ring.grading.degrees.clone();
    let mut counter = 0usize;
    let mut added = BTreeSet::new();
    for t in target {
        if t.is_zero() || m.generators().contains(t) || !added.insert(t.clone()) {
            continue;
        }
        let name = loop {
            counter += 1;
            let candidate = format!("u{counter}");
            if !variables.contains(&candidate) {
                break candidate;
            }
        };
        variables.push(name);
        degrees.push(t.clone());
    }
    let grading = GradingSpec::new(ring.grading.rank, degrees)?;
    MGPolyRing::new(variables, grading, ring.field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio, Rational};
    use proptest::prelude::*;

    fn dv(v: &[i64]) -> DegreeVector {
        DegreeVector::from_ints(v)
    }

    fn ring(names: &[&str], degrees: Vec<DegreeVector>) -> MGPolyRing {
        let rank = degrees[0].dimension();
        MGPolyRing::new(
            names.iter().map(|s| s.to_string()).collect(),
            GradingSpec::new(rank, degrees).unwrap(),
            CoefficientField::default(),
        )
        .unwrap()
    }

    fn hirzebruch() -> MGPolyRing {
        ring(
            &["x0", "x1", "x2", "x3"],
            vec![dv(&[1, 0]), dv(&[-2, 1]), dv(&[1, 0]), dv(&[0, 1])],
        )
    }

    fn mono(pairs: &[(usize, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            MGPolyRing::standard(&["x", "x"], CoefficientField::Rationals),
            Err(RingError::DuplicateVariable(_))
        ));
        assert!(GradingSpec::new(2, vec![dv(&[1])]).is_err());
        assert!(CoefficientField::prime(32003).is_ok());
        assert!(CoefficientField::prime(32001).is_err());
        let r = MGPolyRing::standard(&["x"], CoefficientField::Rationals).unwrap();
        assert!(IdealPresentation::new(r.clone(), vec![Polynomial::zero()]).is_err());
        assert!(matches!(
            IdealPresentation::new(r, vec![Polynomial::var(3)]),
            Err(RingError::UnknownVariable(3))
        ));
    }

    #[test]
    fn degrees_of_monomials() {
        let std = MGPolyRing::standard(&["x", "y"], CoefficientField::Rationals).unwrap();
        assert_eq!(monomial_degree(&std, &mono(&[(0, 2), (1, 1)])).unwrap(), dv(&[3]));

        let half = DegreeVector::new(vec![ratio(1, 2)]);
        let mc = ring(&["x", "y", "z1", "z2"], vec![half; 4]);
        assert_eq!(monomial_degree(&mc, &mono(&[(0, 1), (2, 1)])).unwrap(), dv(&[1]));

        assert_eq!(
            monomial_degree(&hirzebruch(), &mono(&[(0, 1), (1, 1)])).unwrap(),
            dv(&[-1, 1])
        );
        assert!(monomial_degree(&std, &mono(&[(5, 1)])).is_err());
    }

    #[test]
    fn homogeneity() {
        let std = MGPolyRing::standard(&["x", "y"], CoefficientField::Rationals).unwrap();
        let x = Polynomial::var(0);
        let y = Polynomial::var(1);
        let f = &(&x * &x) + &(&y * &y);
        assert_eq!(is_homogeneous(&std, &f).unwrap(), Some(dv(&[2])));
        let g = &(&x * &x) + &y;
        assert_eq!(is_homogeneous(&std, &g).unwrap(), None);
        assert_eq!(is_homogeneous(&std, &Polynomial::zero()), Err(RingError::ZeroPolynomial));

        // f3 = x2*y2 + x1*y1 with x1, y1 in (1,0) and x2, y2 in (0,1)
        let r = ring(
            &["x1", "x2", "y1", "y2"],
            vec![dv(&[1, 0]), dv(&[0, 1]), dv(&[1, 0]), dv(&[0, 1])],
        );
        let f3 = &Polynomial::product_of_vars(&[1, 3]) + &Polynomial::product_of_vars(&[0, 2]);
        assert_eq!(is_homogeneous(&r, &f3).unwrap(), None);
    }

    #[test]
    fn support_monoids() {
        let std = MGPolyRing::standard(&["x", "y"], CoefficientField::Rationals).unwrap();
        assert_eq!(support_monoid(&std).unwrap().0.generators(), &[dv(&[1])]);
        assert_eq!(
            support_monoid(&hirzebruch()).unwrap().0.generators(),
            &[dv(&[1, 0]), dv(&[-2, 1]), dv(&[0, 1])]
        );
        let s2 = ring(
            &["x1", "x2", "y1", "y2"],
            vec![dv(&[-1, 1]), dv(&[-2, 1]), dv(&[1, 1]), dv(&[2, 1])],
        );
        let gens: BTreeSet<DegreeVector> =
            support_monoid(&s2).unwrap().0.generators().iter().cloned().collect();
        assert_eq!(
            gens,
            BTreeSet::from([dv(&[-1, 1]), dv(&[1, 1]), dv(&[-2, 1]), dv(&[2, 1])])
        );
    }

    #[test]
    fn connectedness() {
        let std = MGPolyRing::standard(&["x", "y"], CoefficientField::Rationals).unwrap();
        assert!(is_connected(&std).unwrap());
        let zero = ring(&["x", "z"], vec![dv(&[0]), dv(&[1])]);
        assert!(!is_connected(&zero).unwrap());
        assert_eq!(support_monoid(&zero).unwrap().1, vec![0]);
        let line = ring(&["x", "y"], vec![dv(&[1, -1]), dv(&[-1, 1])]);
        assert!(!is_connected(&line).unwrap());
    }

    #[test]
    fn degree_sequences() {
        let n2_ring = ring(&["x1", "x2", "y1", "y2"], vec![dv(&[1, 0]), dv(&[0, 1]), dv(&[1, 0]), dv(&[0, 1])]);
        // Burch-type generators with parts (1,0), (0,1): d = (1,1)
        let f1 = Polynomial::product_of_vars(&[0, 1]);
        let f2 = Polynomial::product_of_vars(&[2, 3]);
        let f3 = &Polynomial::product_of_vars(&[1, 3]) + &Polynomial::product_of_vars(&[0, 2]);
        let ideal = IdealPresentation::new(n2_ring, vec![f1, f2, f3]).unwrap();
        let d = dv(&[1, 1]);
        let two_d = dv(&[2, 2]);
        assert!(degree_sequence_check(&ideal, &[d.clone(), d.clone(), two_d]).unwrap());
        assert!(!degree_sequence_check(&ideal, &[d.clone(), d.clone(), d.clone()]).unwrap());
        assert!(degree_sequence_check(&ideal, std::slice::from_ref(&d)).is_err());

        let std = MGPolyRing::standard(&["x", "y"], CoefficientField::Rationals).unwrap();
        let x = Polynomial::var(0);
        let y = Polynomial::var(1);
        let ideal = IdealPresentation::new(std, vec![&x * &x, &(&y * &y) * &y]).unwrap();
        assert!(!degree_sequence_check(&ideal, &[dv(&[1]), dv(&[3])]).unwrap());
        assert!(degree_sequence_check(&ideal, &[dv(&[2]), dv(&[3])]).unwrap());

        let line = ring(&["x", "y"], vec![dv(&[1]), dv(&[-1])]);
        let ideal = IdealPresentation::new(line, vec![Polynomial::var(0)]).unwrap();
        assert!(matches!(
            degree_sequence_check(&ideal, &[dv(&[1])]),
            Err(RingError::Monoid(MonoidError::NotPointed(_)))
        ));
    }

    #[test]
    fn regrading() {
        let sum = RationalMatrix::from_rows(vec![vec![rat(1), rat(1), rat(1)]]).unwrap();
        let e = [dv(&[3, 0, 0]), dv(&[0, 3, 0]), dv(&[0, 0, 3])];
        for d in &e {
            assert_eq!(apply_hom(&sum, d), dv(&[3]));
        }

        let h = hirzebruch();
        let same = regrade(&h, &RationalMatrix::identity(2)).unwrap();
        assert_eq!(same.ring, h);
        assert_eq!(same.positive, None);

        let flat = RationalMatrix::from_rows(vec![vec![rat(1), rat(3)]]).unwrap();
        let r = regrade(&h, &flat).unwrap();
        assert_eq!(r.positive, Some(true));
        assert_eq!(r.ring.grading().degrees(), &[dv(&[1]), dv(&[1]), dv(&[1]), dv(&[3])]);
        assert!(regrade(&h, &sum).is_err());
    }

    #[test]
    fn adjoining_support_variables() {
        let r = ring(&["x"], vec![dv(&[2])]);
        let t = adjoin_support_variables(&r, &[dv(&[1]), dv(&[2])]).unwrap();
        assert_eq!(t.variables(), &["x".to_string(), "u1".to_string()]);
        assert_eq!(t.grading().degree(1), Some(&dv(&[1])));

        assert_eq!(adjoin_support_variables(&r, &[dv(&[2])]).unwrap(), r);
        assert!(matches!(
            adjoin_support_variables(&r, &[dv(&[1])]),
            Err(RingError::MissingSupportGenerator(_))
        ));

        let partial = ring(&["x0", "x1", "x2"], vec![dv(&[1, 0]), dv(&[-2, 1]), dv(&[1, 0])]);
        let full = [dv(&[1, 0]), dv(&[-2, 1]), dv(&[0, 1])];
        let t = adjoin_support_variables(&partial, &full).unwrap();
        assert_eq!(t.nvars(), 4);
        assert_eq!(t.grading().degree(3), Some(&dv(&[0, 1])));
        let (m, _) = support_monoid(&t).unwrap();
        assert_eq!(m.generators().len(), 3);
    }

    fn random_grading() -> impl Strategy<Value = Vec<Vec<i64>>> {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, 2), 1..=5)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn connected_implies_pointed(degs in random_grading()) {
            let names: Vec<String> = (0..degs.len()).map(|i| format!("x{i}")).collect();
            let grading = GradingSpec::new(2, degs.iter().map(|d| dv(d)).collect()).unwrap();
            let r = MGPolyRing::new(names, grading, CoefficientField::Rationals).unwrap();
            if is_connected(&r).unwrap() {
                prop_assert!(monoid::is_pointed(&support_monoid(&r).unwrap().0).0);
            }
        }

        #[test]
        fn graded_multiplication(
            degs in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 2), 3),
            a in proptest::collection::vec(0u32..3, 3),
            b in proptest::collection::vec(0u32..3, 3),
            c in -5i64..5,
        ) {
            let r = ring(&["x", "y", "z"], degs.iter().map(|d| dv(d)).collect());
            let ma = Monomial::from_dense(&a);
            let mb = Monomial::from_dense(&b);
            let f = Polynomial::term(ma, rat(1));
            let g = Polynomial::term(mb, rat(c));
            prop_assume!(!g.is_zero());
            let df = is_homogeneous(&r, &f).unwrap().unwrap();
            let dg = is_homogeneous(&r, &g).unwrap().unwrap();
            let prod = &f * &g;
            prop_assert_eq!(is_homogeneous(&r, &prod).unwrap(), Some(&df + &dg));
        }

        #[test]
        fn regrade_commutes_with_degree(
            degs in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 2), 3),
            hom in proptest::collection::vec(-2i64..=2, 4),
            exps in proptest::collection::vec(0u32..4, 3),
        ) {
            let r = ring(&["x", "y", "z"], degs.iter().map(|d| dv(d)).collect());
            let m = RationalMatrix::from_rows(vec![
                vec![rat(hom[0]), rat(hom[1])],
                vec![rat(hom[2]), rat(hom[3])],
            ]).unwrap();
            let regraded = regrade(&r, &m).unwrap().ring;
            let mono = Monomial::from_dense(&exps);
            let before = monomial_degree(&r, &mono).unwrap();
            prop_assert_eq!(monomial_degree(&regraded, &mono).unwrap(), apply_hom(&m, &before));
        }

        #[test]
        fn degree_sequence_is_monotone(
            e in proptest::collection::vec(0u32..3, 4),
            slack in proptest::collection::vec(0u32..2, 3),
        ) {
            let h = hirzebruch();
            let f = Polynomial::term(Monomial::from_dense(&e), rat(1));
            let ideal = IdealPresentation::new(h.clone(), vec![f.clone()]).unwrap();
            let d = monomial_degree(&h, f.monomials().next().unwrap()).unwrap();
            prop_assert!(degree_sequence_check(&ideal, std::slice::from_ref(&d)).unwrap());
            let gens = [dv(&[1, 0]), dv(&[-2, 1]), dv(&[0, 1])];
            let bigger = gens.iter().zip(&slack).fold(d, |acc, (g, &s)| &acc + &g.scale_int(u64::from(s)));
            prop_assert!(degree_sequence_check(&ideal, &[bigger]).unwrap());
        }

        #[test]
        fn adjoining_keeps_homogeneity(
            exps_a in proptest::collection::vec(0u32..3, 3),
            exps_b in proptest::collection::vec(0u32..3, 3),
        ) {
            let partial = ring(&["x0", "x1", "x2"], vec![dv(&[1, 0]), dv(&[-2, 1]), dv(&[1, 0])]);
            let full = [dv(&[1, 0]), dv(&[-2, 1]), dv(&[0, 1])];
            let bigger = adjoin_support_variables(&partial, &full).unwrap();
            let f = Polynomial::from_terms([
                (Monomial::from_dense(&exps_a), Rational::from_integer(1.into())),
                (Monomial::from_dense(&exps_b), Rational::from_integer(2.into())),
            ]);
            prop_assert_eq!(
                is_homogeneous(&partial, &f).unwrap(),
                is_homogeneous(&bigger, &f).unwrap()
            );
        }
    }
}
