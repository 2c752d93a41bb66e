//! Support monoids.
//!
//! A finitely generated submonoid of `Q^k` is pointed exactly when some linear
//! functional is positive on its generators, and then that functional is a
//! height function: every factorization of `g` into nonzero elements has at
//! most `⌊c·g⌋` parts. So for [`FgMonoid`] pointedness, bounded factorization
//! and the existence of a flattening map to `Z` all coincide, and one
//! Gordan computation decides them.
//!
//! The named infinitely generated monoids live in [`builtin`].

pub mod builtin;

pub use builtin::{
    descending_chain_bound, prime_reciprocal_canonical, unbounded_factorization_witness,
    BuiltinMonoid, PrimeReciprocalForm,
};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactmath::{
    self, bounded_nonneg_solutions, positive_functional_or_certificate, DegreeVector, GordanOutcome,
    MathError, Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error(transparent)]
    Math(#[from] MathError),
    #[error("monoid is not pointed (relation {0}); membership search is unbounded")]
    NotPointed(NonBfCertificate),
    #[error("{0} is not an element of the monoid")]
    NotMember(String),
    #[error("generators must have integer entries")]
    NonIntegerGenerators,
    #[error("expected a nonnegative rational, found {0}")]
    Negative(Rational),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("height witness is not positive on every generator")]
    InvalidWitness,
}

/// A finitely generated submonoid of `Q^k`.
///
/// Zero generators are dropped and duplicates removed on construction; the
/// Gordan alternative for the generators is computed once and kept.
#[derive(Debug, Clone)]
pub struct FgMonoid {
    dimension: usize,
    generators: Vec<DegreeVector>,
    outcome: GordanOutcome,
}

impl PartialEq for FgMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.dimension == other.dimension && self.generators == other.generators
    }
}

impl Eq for FgMonoid {}

impl FgMonoid {
    pub fn new(dimension: usize, generators: Vec<DegreeVector>) -> Result<Self, MonoidError> {
        let mut kept: Vec<DegreeVector> = Vec::with_capacity(generators.len());
        for g in generators {
            g.check_dimension(dimension)?;
            if !g.is_zero() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        let outcome = positive_functional_or_certificate(&kept)?;
        Ok(FgMonoid {
            dimension,
            generators: kept,
            outcome,
        })
    }

    /// Build from integer tuples; the dimension is taken from the first one.
    pub fn from_int_tuples(tuples: &[&[i64]]) -> Result<Self, MonoidError> {
        let dim = tuples.first().map_or(0, |t| t.len());
        Self::new(dim, tuples.iter().map(|t| DegreeVector::from_ints(t)).collect())
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> &[DegreeVector] {
        &self.generators
    }

    /// The Gordan outcome for the generators.
    pub fn gordan(&self) -> &GordanOutcome {
        &self.outcome
    }

    fn witness(&self) -> Result<HeightWitness, MonoidError> {
        match &self.outcome {
            GordanOutcome::Witness(c) => Ok(HeightWitness {
                functional: c.clone(),
            }),
            GordanOutcome::Certificate(l) => Err(MonoidError::NotPointed(self.certificate(l))),
        }
    }

    fn certificate(&self, multiplicities: &[u64]) -> NonBfCertificate {
        NonBfCertificate::from_multiplicities(&self.generators, multiplicities)
    }
}

/// A linear functional taking values `>= 1` on every generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightWitness {
    functional: DegreeVector,
}

impl HeightWitness {
    /// Checks the functional against `gens` before accepting it.
    pub fn new(gens: &[DegreeVector], functional: DegreeVector) -> Result<Self, MonoidError> {
        if verify_height_witness(gens, &functional)? {
            Ok(HeightWitness { functional })
        } else {
            Err(MonoidError::InvalidWitness)
        }
    }

    pub fn functional(&self) -> &DegreeVector {
        &self.functional
    }

    pub fn value(&self, g: &DegreeVector) -> Rational {
        self.functional.dot(g)
    }

    /// `⌊c·g⌋`, an upper bound on the length of any factorization of `g`.
    pub fn length_bound(&self, g: &DegreeVector) -> BigInt {
        exactmath::floor(&self.value(g))
    }
}

/// A nontrivial nonnegative relation `Σ m_i g_i = 0` among generators.
///
/// `element` is a generator occurring in the relation; adding the relation
/// to it `k` times gives factorizations of unbounded length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonBfCertificate {
    pub element: DegreeVector,
    pub relation: Vec<(DegreeVector, u64)>,
}

impl NonBfCertificate {
    fn from_multiplicities(gens: &[DegreeVector], multiplicities: &[u64]) -> Self {
        let relation: Vec<(DegreeVector, u64)> = gens
            .iter()
            .zip(multiplicities)
            .filter(|(_, &m)| m > 0)
            .map(|(g, &m)| (g.clone(), m))
            .collect();
        let element = relation[0].0.clone();
        NonBfCertificate { element, relation }
    }

    /// Total number of parts in the relation.
    pub fn length(&self) -> u64 {
        self.relation.iter().map(|(_, m)| m).sum()
    }

    /// The relation parts in order, each generator repeated by multiplicity.
    pub fn parts(&self) -> Vec<DegreeVector> {
        self.relation
            .iter()
            .flat_map(|(g, m)| std::iter::repeat_n(g.clone(), *m as usize))
            .collect()
    }

    pub fn verify(&self) -> bool {
        let Some(dim) = self.relation.first().map(|(g, _)| g.dimension()) else {
            return false;
        };
        let sum = self
            .relation
            .iter()
            .fold(DegreeVector::zero(dim), |acc, (g, m)| &acc + &g.scale_int(*m));
        sum.is_zero() && self.relation.iter().any(|(_, m)| *m > 0)
    }

    /// A factorization of `element` into `1 + rounds * length()` nonzero parts.
    pub fn long_factorization(&self, rounds: usize) -> Vec<DegreeVector> {
        let mut parts = vec![self.element.clone()];
        for _ in 0..rounds {
            parts.extend(self.parts());
        }
        parts
    }
}

impl fmt::Display for NonBfCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .relation
            .iter()
            .map(|(g, m)| format!("{m}*{g}"))
            .collect();
        write!(f, "{} = 0", terms.join(" + "))
    }
}

/// `true` iff no nontrivial nonnegative combination of generators vanishes.
pub fn is_pointed(m: &FgMonoid) -> (bool, Option<NonBfCertificate>) {
    match m.gordan() {
        GordanOutcome::Witness(_) => (true, None),
        GordanOutcome::Certificate(l) => (false, Some(m.certificate(l))),
    }
}

/// Bounded factorization verdict with its evidence.
///
/// For finitely generated monoids in `Q^k` this agrees with [`is_pointed`]:
/// a positive functional bounds factorization lengths, and a zero relation
/// can be added to any element arbitrarily often.
pub fn has_bounded_factorization(
    m: &FgMonoid,
) -> (bool, Option<HeightWitness>, Option<NonBfCertificate>) {
    match m.witness() {
        Ok(w) => (true, Some(w), None),
        Err(MonoidError::NotPointed(cert)) => (false, None, Some(cert)),
        Err(_) => unreachable!("witness() only fails with NotPointed"),
    }
}

/// `c·g >= 1` for every generator.
pub fn verify_height_witness(gens: &[DegreeVector], c: &DegreeVector) -> Result<bool, MonoidError> {
    for g in gens {
        g.check_dimension(c.dimension())?;
    }
    Ok(gens.iter().all(|g| c.dot(g) >= Rational::one()))
}

/// Membership of `q`, searched up to the height bound `⌊c·q⌋`.
pub fn member(m: &FgMonoid, q: &DegreeVector) -> Result<bool, MonoidError> {
    q.check_dimension(m.dimension)?;
    let w = m.witness()?;
    if q.is_zero() {
        return Ok(true);
    }
    let bound = w.length_bound(q);
    if bound.is_negative() || bound.is_zero() {
        return Ok(false);
    }
    let bound = bound.to_u64().expect("length bound out of range");
    Ok(!bounded_nonneg_solutions(&m.generators, q, bound)?.is_empty())
}

/// `g <=_Λ h`, i.e. `h - g` lies in the monoid.
pub fn leq(m: &FgMonoid, g: &DegreeVector, h: &DegreeVector) -> Result<bool, MonoidError> {
    g.check_dimension(m.dimension)?;
    h.check_dimension(m.dimension)?;
    member(m, &(h - g))
}

/// The longest factorization of `g` into generators.
pub fn max_factorization_length(
    m: &FgMonoid,
    w: &HeightWitness,
    g: &DegreeVector,
) -> Result<u64, MonoidError> {
    g.check_dimension(m.dimension)?;
    if !verify_height_witness(&m.generators, w.functional())? {
        return Err(MonoidError::InvalidWitness);
    }
    let bound = w.length_bound(g);
    if bound.is_negative() {
        return Err(MonoidError::NotMember(g.to_string()));
    }
    let bound = bound.to_u64().expect("length bound out of range");
    bounded_nonneg_solutions(&m.generators, g, bound)?
        .iter()
        .map(|x| x.iter().sum::<u64>())
        .max()
        .ok_or_else(|| MonoidError::NotMember(g.to_string()))
}

/// An integer functional positive on every generator, if one exists.
pub fn flattening_exists(m: &FgMonoid) -> Result<Option<DegreeVector>, MonoidError> {
    if !m.generators.iter().all(DegreeVector::is_integral) {
        return Err(MonoidError::NonIntegerGenerators);
    }
    Ok(m.gordan().witness().map(|c| {
        let ints = exactmath::primitive_integer_vector(c.entries());
        DegreeVector::new(ints.into_iter().map(Rational::from_integer).collect())
    }))
}

/// Parse the generator-list syntax `(1,0);(-2,1);(0,1)`.
pub fn parse_generators(text: &str) -> Result<Vec<DegreeVector>, String> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_tuple)
        .collect()
}

/// Parse one rational tuple such as `(1/2,-3)`.
pub fn parse_tuple(text: &str) -> Result<DegreeVector, String> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| format!("expected a parenthesized tuple, found `{text}`"))?;
    if inner.trim().is_empty() {
        return Ok(DegreeVector::new(Vec::new()));
    }
    inner
        .split(',')
        .map(|s| parse_rational(s.trim()))
        .collect::<Result<Vec<_>, _>>()
        .map(DegreeVector::new)
}

/// Parse `a` or `a/b` with an optional sign.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let bad = || format!("malformed rational `{text}`");
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let valid = |s: &str, signed: bool| {
        let digits = if signed {
            s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s)
        } else {
            s
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return Err(bad());
    }
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(format!("zero denominator in `{text}`"));
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};

    fn dv(v: &[i64]) -> DegreeVector {
        DegreeVector::from_ints(v)
    }

    fn hirzebruch() -> FgMonoid {
        FgMonoid::from_int_tuples(&[&[1, 0], &[-2, 1], &[0, 1]]).unwrap()
    }

    #[test]
    fn construction_strips_zero_and_duplicates() {
        let m = FgMonoid::from_int_tuples(&[&[1, 0], &[0, 0], &[1, 0], &[0, 1]]).unwrap();
        assert_eq!(m.generators(), &[dv(&[1, 0]), dv(&[0, 1])]);
        assert!(FgMonoid::new(2, vec![dv(&[1])]).is_err());
    }

    #[test]
    fn pointedness_examples() {
        let orthant = FgMonoid::from_int_tuples(&[&[1, 0], &[0, 1]]).unwrap();
        assert!(is_pointed(&orthant).0);

        let line = FgMonoid::from_int_tuples(&[&[1, -1], &[-1, 1]]).unwrap();
        let (p, cert) = is_pointed(&line);
        assert!(!p);
        let cert = cert.unwrap();
        assert!(cert.verify());
        assert_eq!(cert.relation, vec![(dv(&[1, -1]), 1), (dv(&[-1, 1]), 1)]);

        assert!(is_pointed(&hirzebruch()).0);
    }

    #[test]
    fn bounded_factorization_examples() {
        let n = FgMonoid::from_int_tuples(&[&[1]]).unwrap();
        let (bf, w, _) = has_bounded_factorization(&n);
        assert!(bf);
        assert_eq!(w.unwrap().functional(), &dv(&[1]));

        let m = FgMonoid::from_int_tuples(&[&[1, 0], &[-1, 0], &[0, 1]]).unwrap();
        let (bf, w, cert) = has_bounded_factorization(&m);
        assert!(!bf && w.is_none());
        let cert = cert.unwrap();
        assert_eq!(cert.relation, vec![(dv(&[1, 0]), 1), (dv(&[-1, 0]), 1)]);
        let long = cert.long_factorization(4);
        assert_eq!(long.len(), 9);
        let sum = long.iter().fold(DegreeVector::zero(2), |a, g| &a + g);
        assert_eq!(sum, cert.element);

        let (bf, w, _) = has_bounded_factorization(&hirzebruch());
        assert!(bf);
        assert!(verify_height_witness(hirzebruch().generators(), w.unwrap().functional()).unwrap());
    }

    #[test]
    fn height_witness_checks() {
        let halfplane: Vec<DegreeVector> = (1..=5)
            .flat_map(|n| [dv(&[-n, 1]), dv(&[n, 1])])
            .collect();
        assert!(verify_height_witness(&halfplane, &dv(&[0, 1])).unwrap());
        assert!(!verify_height_witness(&[dv(&[0, 1])], &dv(&[1, 0])).unwrap());
        assert!(verify_height_witness(hirzebruch().generators(), &dv(&[1, 3])).unwrap());
        assert!(verify_height_witness(&[dv(&[0, 1])], &dv(&[1])).is_err());
        assert!(HeightWitness::new(&[dv(&[0, 1])], dv(&[1, 0])).is_err());
    }

    #[test]
    fn membership() {
        let m = FgMonoid::from_int_tuples(&[&[2], &[3]]).unwrap();
        assert!(!member(&m, &dv(&[1])).unwrap());
        assert!(member(&m, &dv(&[7])).unwrap());
        assert!(member(&m, &dv(&[0])).unwrap());
        assert!(!member(&m, &dv(&[-4])).unwrap());
        assert!(member(&hirzebruch(), &dv(&[1, 1])).unwrap());

        let line = FgMonoid::from_int_tuples(&[&[1], &[-1]]).unwrap();
        assert!(matches!(member(&line, &dv(&[3])), Err(MonoidError::NotPointed(_))));
    }

    #[test]
    fn divisibility_order() {
        let n2 = FgMonoid::from_int_tuples(&[&[1, 0], &[0, 1]]).unwrap();
        assert!(leq(&n2, &dv(&[1, 0]), &dv(&[2, 1])).unwrap());
        assert!(!leq(&n2, &dv(&[1, 0]), &dv(&[0, 1])).unwrap());
        assert!(!leq(&n2, &dv(&[0, 1]), &dv(&[1, 0])).unwrap());
        assert!(leq(&hirzebruch(), &dv(&[-2, 1]), &dv(&[0, 2])).unwrap());
    }

    #[test]
    fn factorization_lengths() {
        let n = FgMonoid::from_int_tuples(&[&[1]]).unwrap();
        let w = has_bounded_factorization(&n).1.unwrap();
        assert_eq!(max_factorization_length(&n, &w, &dv(&[5])).unwrap(), 5);

        let m = FgMonoid::from_int_tuples(&[&[2], &[3]]).unwrap();
        let w = has_bounded_factorization(&m).1.unwrap();
        assert_eq!(max_factorization_length(&m, &w, &dv(&[7])).unwrap(), 3);
        assert!(matches!(
            max_factorization_length(&m, &w, &dv(&[1])),
            Err(MonoidError::NotMember(_))
        ));

        let h = hirzebruch();
        let w = HeightWitness::new(h.generators(), dv(&[1, 3])).unwrap();
        assert_eq!(max_factorization_length(&h, &w, &dv(&[0, 2])).unwrap(), 6);
        assert_eq!(w.length_bound(&dv(&[0, 2])), BigInt::from(6));
    }

    #[test]
    fn flattening() {
        let n2 = FgMonoid::from_int_tuples(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(flattening_exists(&n2).unwrap(), Some(dv(&[1, 1])));
        let line = FgMonoid::from_int_tuples(&[&[1, 0], &[-1, 0]]).unwrap();
        assert_eq!(flattening_exists(&line).unwrap(), None);
        let phi = flattening_exists(&hirzebruch()).unwrap().unwrap();
        assert!(phi.is_integral());
        assert!(hirzebruch().generators().iter().all(|g| phi.dot(g) >= rat(1)));

        let frac = FgMonoid::new(1, vec![DegreeVector::new(vec![ratio(1, 2)])]).unwrap();
        assert_eq!(flattening_exists(&frac), Err(MonoidError::NonIntegerGenerators));
    }

    #[test]
    fn generator_syntax() {
        let gens = parse_generators("(1,0);(-2,1);(0,1)").unwrap();
        assert_eq!(gens, vec![dv(&[1, 0]), dv(&[-2, 1]), dv(&[0, 1])]);
        let gens = parse_generators(" (1/2) ; (3) ").unwrap();
        assert_eq!(gens[0], DegreeVector::new(vec![ratio(1, 2)]));
        assert!(parse_generators("(1,x)").is_err());
        assert!(parse_generators("1,0").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("--1").is_err());
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
    }
}
