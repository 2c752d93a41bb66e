use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::exactmath::{floor, DegreeVector};
use crate::monoid::{self, HeightWitness};
use crate::polyring::{self, IdealPresentation};
use crate::resolution::{self, ResolutionOptions};

use super::finest::{finest_grading, FinestGrading};
use super::{flatten_degree_bound, DegreeSequence, StillmanError};

const KNOWN_BOUNDS: &str = include_str!("../../data/known_bounds.txt");

/// A table entry: ideals generated in these standard degrees have
/// projective dimension at most `bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownBound {
    pub degrees: Vec<u64>,
    pub bound: usize,
}

/// Parse the shipped table: `(d1,...,dn) -> bound` per line, `#` comments.
pub fn known_bounds() -> Vec<KnownBound> {
    parse_known_bounds(KNOWN_BOUNDS).expect("shipped known-bounds table is well formed")
}

pub fn parse_known_bounds(text: &str) -> Result<Vec<KnownBound>, String> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = || format!("line {}: expected `(d1,...,dn) -> bound`", n + 1);
        let (lhs, rhs) = line.split_once("->").ok_or_else(bad)?;
        let inner = lhs
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?;
        let mut degrees = inner
            .split(',')
            .map(|s| s.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        degrees.sort_unstable();
        let bound = rhs.trim().parse::<usize>().map_err(|_| bad())?;
        out.push(KnownBound { degrees, bound });
    }
    Ok(out)
}

/// Entry matching the sorted degree sequence exactly.
pub fn lookup_known_bound(degrees: &[u64]) -> Option<KnownBound> {
    let mut key = degrees.to_vec();
    key.sort_unstable();
    known_bounds().into_iter().find(|k| k.degrees == key)
}

/// What the analysis can say about the projective dimension of `S / I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    /// Minimal generators of the support monoid.
    pub support_generators: Vec<DegreeVector>,
    /// The support has bounded factorization (always true in a report; the
    /// negative verdict is returned as an error with its certificate).
    pub support_bf: bool,
    /// Integral functional, at least 1 on every support generator.
    pub height_witness: DegreeVector,
    /// The degree bound used for each generator: the supplied one, or the
    /// generator's own degree when it is homogeneous.
    pub degree_bounds: Vec<Option<DegreeVector>>,
    /// Standard-degree bound per generator from the height witness.
    pub flattening_bounds: Vec<u64>,
    /// Largest total degree of a monomial in each generator.
    pub flattened_degrees: Vec<u64>,
    pub known_bound: Option<KnownBound>,
    /// Number of distinct variables occurring in the generators.
    pub hilbert_bound: usize,
    pub pdim: Option<usize>,
    /// Weight vector the resolution was computed under.
    pub pdim_weight: Option<Vec<u64>>,
    /// `pdim == number of generators`, when `pdim` is known.
    pub regular_sequence: Option<bool>,
    pub finest: FinestGrading,
    /// Generator degrees in the finest grading.
    pub refined_degrees: Vec<DegreeVector>,
}

impl BoundReport {
    /// `pdim <= hilbert_bound`, and `pdim <= known bound` when both exist.
    pub fn is_consistent(&self) -> bool {
        match self.pdim {
            None => true,
            Some(p) => p <= self.hilbert_bound && self.known_bound.as_ref().is_none_or(|k| p <= k.bound),
        }
    }

    /// Smallest of the available upper bounds.
    pub fn best_upper_bound(&self) -> usize {
        let mut best = self.hilbert_bound;
        if let Some(k) = &self.known_bound {
            best = best.min(k.bound);
        }
        if let Some(p) = self.pdim {
            best = best.min(p);
        }
        best
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "support generators: {}", join(&self.support_generators))?;
        writeln!(f, "bounded factorization: {} (height witness {})", self.support_bf, self.height_witness)?;
        writeln!(f, "flattening bounds: [{}]", join(&self.flattening_bounds))?;
        writeln!(f, "flattened degrees: [{}]", join(&self.flattened_degrees))?;
        match &self.known_bound {
            Some(k) => writeln!(f, "known bound: {} for ({})", k.bound, join(&k.degrees))?,
            None => writeln!(f, "known bound: none")?,
        }
        writeln!(f, "hilbert bound: {}", self.hilbert_bound)?;
        match self.pdim {
            Some(p) => writeln!(f, "pdim: {p}")?,
            None => writeln!(f, "pdim: not computed")?,
        }
        if let Some(r) = self.regular_sequence {
            writeln!(f, "regular sequence: {r}")?;
        }
        writeln!(f, "finest grading rank: {}", self.finest.rank())?;
        if !self.finest.torsion.is_empty() {
            writeln!(f, "finest grading torsion: {}", join(&self.finest.torsion))?;
        }
        write!(f, "refined degrees: {}", join(&self.refined_degrees))
    }
}

/// Options for [`stillman_report`].
#[derive(Debug, Clone)]
pub struct ReportOptions {
    pub compute_pdim: bool,
    /// Weight for the resolution; found automatically when absent.
    pub weight: Option<Vec<u64>>,
    pub resolution: ResolutionOptions,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            compute_pdim: true,
            weight: None,
            resolution: ResolutionOptions::default(),
        }
    }
}

/// All-ones if it homogenizes the generators, else the flattening weight
/// `w · deg(x_j)` scaled to integers, if that does.
pub fn homogenizing_weight(ideal: &IdealPresentation, witness: &DegreeVector) -> Option<Vec<u64>> {
    let n = ideal.ring().nvars();
    let homogeneous = |w: &[u64]| {
        ideal
            .generators()
            .iter()
            .all(|g| resolution::weighted_homogeneous_degree(g, n, w).is_some())
    };
    let ones = vec![1u64; n];
    if homogeneous(&ones) {
        return Some(ones);
    }
    let values: Vec<_> = ideal
        .ring()
        .grading()
        .degrees()
        .iter()
        .map(|d| witness.dot(d))
        .collect();
    let den = values.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let weights: Option<Vec<u64>> = values
        .iter()
        .map(|q| (q * crate::exactmath::Rational::from_integer(den.clone())).to_integer().to_u64())
        .collect();
    let weights = weights.filter(|w| w.iter().all(|&x| x > 0))?;
    homogeneous(&weights).then_some(weights)
}

/// Assemble the bound report for an ideal in a connected graded ring.
pub fn stillman_report(
    ideal: &IdealPresentation,
    d: Option<&DegreeSequence>,
    opts: &ReportOptions,
) -> Result<BoundReport, StillmanError> {
    let ring = ideal.ring();
    let (support, zero_vars) = polyring::support_monoid(ring)?;
    if let Some(&v) = zero_vars.first() {
        return Err(StillmanError::NotConnected(ring.variables()[v].clone()));
    }
    let (bf, witness, cert) = monoid::has_bounded_factorization(&support);
    if !bf {
        return Err(StillmanError::NotBoundedFactorization(
            cert.expect("non-BF verdict carries a certificate"),
        ));
    }
    let witness = witness.expect("BF verdict carries a witness");
    let integral = monoid::flattening_exists(&support)
        .ok()
        .flatten()
        .unwrap_or_else(|| witness.functional().clone());
    let witness = HeightWitness::new(support.generators(), integral)?;

    let gens = ideal.generators();
    if let Some(seq) = d {
        if !polyring::degree_sequence_check(ideal, seq.degrees())? {
            return Err(StillmanError::DegreeSequenceViolated);
        }
    }
    let mut degree_bounds = Vec::with_capacity(gens.len());
    let mut flattening_bounds = Vec::with_capacity(gens.len());
    for (i, g) in gens.iter().enumerate() {
        let bound = match d {
            Some(seq) => Some(seq.degrees()[i].clone()),
            None => polyring::is_homogeneous(ring, g)?,
        };
        let n = match &bound {
            Some(b) => flatten_degree_bound(&witness, b)?,
            // inhomogeneous without a supplied bound: bound each monomial
            None => {
                let mut best = 0u64;
                for m in g.monomials() {
                    let v = floor(&witness.value(&polyring::monomial_degree(ring, m)?));
                    best = best.max(v.to_u64().unwrap_or(0));
                }
                best
            }
        };
        degree_bounds.push(bound);
        flattening_bounds.push(n);
    }
    let flattened_degrees: Vec<u64> = gens.iter().map(|g| g.total_degree()).collect();
    let known_bound = lookup_known_bound(&flattened_degrees);
    let hilbert_bound = ideal.used_variables().len();

    let (pdim, pdim_weight) = if opts.compute_pdim {
        let weight = match &opts.weight {
            Some(w) => Some(w.clone()),
            None => homogenizing_weight(ideal, witness.functional()),
        };
        match weight {
            Some(w) => (Some(resolution::pdim_with(ideal, &w, &opts.resolution)?), Some(w)),
            None => (None, None),
        }
    } else {
        (None, None)
    };
    let regular_sequence = pdim.map(|p| p == gens.len());

    let finest = finest_grading(gens, ring.nvars())?;
    let refined_degrees = gens
        .iter()
        .map(|g| finest.degree_of(g).expect("nonzero generator"))
        .collect();

    let report = BoundReport {
        support_generators: support.generators().to_vec(),
        support_bf: true,
        height_witness: witness.functional().clone(),
        degree_bounds,
        flattening_bounds,
        flattened_degrees,
        known_bound,
        hilbert_bound,
        pdim,
        pdim_weight,
        regular_sequence,
        finest,
        refined_degrees,
    };
    if !report.is_consistent() {
        return Err(StillmanError::Internal("report violates its own bounds".into()));
    }
    Ok(report)
}
