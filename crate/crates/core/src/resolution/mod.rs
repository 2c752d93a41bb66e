//! Gröbner bases, syzygies, free resolutions and projective dimension.
//!
//! The engines are generic over a [`Field`]; the public entry points pick
//! [`PrimeField`] or [`RationalField`] from the ring's
//! [`CoefficientField`]. Resolutions are computed by iterated Schreyer
//! syzygies under degrevlex with the homogenizing weight, then made minimal
//! by cancelling unit entries.

mod field;
mod groebner;
mod minimal;
mod order;
mod schreyer;
mod vector;

pub use field::{Field, PrimeField, RationalField};
pub use minimal::BettiTable;
pub use order::TermOrder;

use std::sync::atomic::{AtomicBool, Ordering as AtomicOrdering};
use std::sync::Arc;

use thiserror::Error;

use crate::polyring::{CoefficientField, IdealPresentation, MGPolyRing, Monomial, Polynomial};
use order::{weighted_degree, ModuleOrder};
use schreyer::{Complex, Mat};
use vector::{Poly, Term, Vector};

macro_rules! dispatch {
    ($field:expr, |$f:ident| $body:expr) => {
        match $field {
            CoefficientField::Prime(p) => {
                let $f = &PrimeField::new(p);
                $body
            }
            CoefficientField::Rationals => {
                let $f = &RationalField;
                $body
            }
        }
    };
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("weight {0} is not positive")]
    NonPositiveWeight(usize),
    #[error("expected {expected} weights, found {found}")]
    WeightLength { expected: usize, found: usize },
    #[error("generator {0} is not homogeneous for the weight vector")]
    Inhomogeneous(usize),
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
    #[error("a coefficient of generator {0} is not defined over the coefficient field")]
    NotInField(usize),
    #[error("module elements have different ranks")]
    RankMismatch,
    #[error("the ideal is the whole ring")]
    UnitIdeal,
    #[error("complex is not graded: entry ({row}, {col}) of d_{index} has the wrong degree")]
    Ungraded { index: usize, row: usize, col: usize },
    #[error("computation cancelled")]
    Cancelled,
    #[error("pair queue exceeded the limit of {0}")]
    PairLimit(usize),
    #[error("internal error: {0}")]
    Internal(String),
}

/// Cooperative cancellation flag shared between a caller and a computation.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        CancelToken::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, AtomicOrdering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(AtomicOrdering::Relaxed)
    }
}

/// Resource controls for long computations.
#[derive(Debug, Clone, Default)]
pub struct ResolutionOptions {
    /// Checked between S-pairs and cancellation steps.
    pub cancel: Option<CancelToken>,
    /// Upper bound on the number of queued S-pairs.
    pub max_pairs: Option<usize>,
}

pub(crate) type Control = ResolutionOptions;

impl ResolutionOptions {
    pub(crate) fn check_cancel(&self) -> Result<(), ResolutionError> {
        match &self.cancel {
            Some(t) if t.is_cancelled() => Err(ResolutionError::Cancelled),
            _ => Ok(()),
        }
    }

    pub(crate) fn check_pairs(&self, n: usize) -> Result<(), ResolutionError> {
        match self.max_pairs {
            Some(limit) if n > limit => Err(ResolutionError::PairLimit(limit)),
            _ => Ok(()),
        }
    }
}

/// Matrix of polynomials with weighted degrees on rows and columns.
///
/// Column `j` is the image of the `j`-th basis element of the source, so
/// entry `(i, j)` has degree `col_degrees[j] - row_degrees[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    entries: Vec<Vec<Polynomial>>,
    row_degrees: Vec<u64>,
    col_degrees: Vec<u64>,
}

impl PolyMatrix {
    /// Rows are given as vectors of entries; degrees label rows and columns.
    pub fn new(entries: Vec<Vec<Polynomial>>, row_degrees: Vec<u64>, col_degrees: Vec<u64>) -> Result<Self, ResolutionError> {
        if entries.len() != row_degrees.len() || entries.iter().any(|r| r.len() != col_degrees.len()) {
            return Err(ResolutionError::RankMismatch);
        }
        Ok(PolyMatrix {
            entries,
            row_degrees,
            col_degrees,
        })
    }

    pub fn rows(&self) -> usize {
        self.row_degrees.len()
    }

    pub fn cols(&self) -> usize {
        self.col_degrees.len()
    }

    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row][col]
    }

    pub fn row_degrees(&self) -> &[u64] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[u64] {
        &self.col_degrees
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.iter().all(Polynomial::is_zero))
    }

    /// Product over `Q` (entries of a prime-field complex are symmetric
    /// representatives, so reduce before comparing with zero).
    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, ResolutionError> {
        if self.cols() != other.rows() {
            return Err(ResolutionError::RankMismatch);
        }
        let entries = (0..self.rows())
            .map(|i| {
                (0..other.cols())
                    .map(|j| {
                        (0..self.cols()).fold(Polynomial::zero(), |acc, k| {
                            &acc + &(self.get(i, k) * other.get(k, j))
                        })
                    })
                    .collect()
            })
            .collect();
        PolyMatrix::new(entries, self.row_degrees.clone(), other.col_degrees.clone())
    }
}

/// A graded free resolution `S = F_0 <- F_1 <- ... <- F_L` of `S / I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeResolutionComplex {
    field: CoefficientField,
    weights: Vec<u64>,
    differentials: Vec<PolyMatrix>,
    degrees: Vec<Vec<u64>>,
}

impl FreeResolutionComplex {
    /// Assemble from differentials `d_1, d_2, ...`; row and column degrees
    /// of consecutive maps must agree.
    pub fn new(field: CoefficientField, weights: Vec<u64>, differentials: Vec<PolyMatrix>) -> Result<Self, ResolutionError> {
        for w in differentials.windows(2) {
            if w[0].col_degrees != w[1].row_degrees {
                return Err(ResolutionError::RankMismatch);
            }
        }
        let degrees = match differentials.first() {
            None => vec![vec![0]],
            Some(d) => std::iter::once(d.row_degrees.clone())
                .chain(differentials.iter().map(|m| m.col_degrees.clone()))
                .collect(),
        };
        Ok(FreeResolutionComplex {
            field,
            weights,
            differentials,
            degrees,
        })
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// `d_1, d_2, ...`
    pub fn differentials(&self) -> &[PolyMatrix] {
        &self.differentials
    }

    /// Ranks `β_0, β_1, ..., β_L`.
    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    /// Number of differentials.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    /// Weighted degrees of the basis of each free module.
    pub fn degrees(&self) -> &[Vec<u64>] {
        &self.degrees
    }

    /// Betti table read off the ranks (graded Betti numbers only when the
    /// complex is minimal).
    pub fn betti(&self) -> BettiTable {
        BettiTable::from_degrees(&self.degrees)
    }

    /// `d_i * d_{i+1} = 0` over the coefficient field.
    pub fn is_complex(&self) -> Result<bool, ResolutionError> {
        dispatch!(self.field, |f| {
            let c = complex_from_public(f, self)?;
            Ok(c.is_complex(f))
        })
    }

    /// No differential contains a nonzero constant.
    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().all(|d| {
            d.entries
                .iter()
                .all(|r| r.iter().all(|p| p.is_zero() || p.total_degree() > 0))
        })
    }
}


fn to_exp(m: &Monomial, nvars: usize) -> Vec<u32> {
    m.to_dense(nvars)
}

fn poly_to_vector<F: Field>(
    field: &F,
    ord: &ModuleOrder,
    f: &Polynomial,
    nvars: usize,
    comp: usize,
    index: usize,
) -> Result<Vector<F::Elem>, ResolutionError> {
    let mut terms = Vec::with_capacity(f.len());
    for (m, c) in f.terms() {
        let coef = field
            .embed_rational(c)
            .ok_or(ResolutionError::NotInField(index))?;
        terms.push(Term {
            exp: to_exp(m, nvars),
            comp,
            coef,
        });
    }
    Ok(Vector::from_terms(field, ord, terms))
}

fn vector_to_polys<F: Field>(field: &F, v: &Vector<F::Elem>, rank: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::zero(); rank];
    for t in &v.terms {
        out[t.comp].add_term(Monomial::from_dense(&t.exp), field.to_rational(&t.coef));
    }
    out
}

fn poly_to_public<F: Field>(field: &F, p: &Poly<F::Elem>) -> Polynomial {
    Polynomial::from_terms(
        p.terms
            .iter()
            .map(|(e, c)| (Monomial::from_dense(e), field.to_rational(c))),
    )
}

fn poly_from_public<F: Field>(field: &F, p: &Polynomial, nvars: usize, index: usize) -> Result<Poly<F::Elem>, ResolutionError> {
    let mut terms = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        let coef = field
            .embed_rational(c)
            .ok_or(ResolutionError::NotInField(index))?;
        terms.push((to_exp(m, nvars), coef));
    }
    Ok(Poly::from_terms(field, terms))
}

fn complex_to_public<F: Field>(field: &F, kind: CoefficientField, weights: &[u64], c: &Complex<F::Elem>) -> FreeResolutionComplex {
    let differentials = c
        .diffs
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let entries = (0..m.rows)
                .map(|r| m.cols.iter().map(|col| poly_to_public(field, &col[r])).collect())
                .collect();
            PolyMatrix {
                entries,
                row_degrees: c.degrees[i].clone(),
                col_degrees: c.degrees[i + 1].clone(),
            }
        })
        .collect();
    FreeResolutionComplex {
        field: kind,
        weights: weights.to_vec(),
        differentials,
        degrees: c.degrees.clone(),
    }
}

fn complex_from_public<F: Field>(field: &F, c: &FreeResolutionComplex) -> Result<Complex<F::Elem>, ResolutionError> {
    let nvars = c.weights.len();
    let mut diffs = Vec::new();
    for (i, d) in c.differentials.iter().enumerate() {
        let mut cols = Vec::with_capacity(d.cols());
        for j in 0..d.cols() {
            let mut col = Vec::with_capacity(d.rows());
            for r in 0..d.rows() {
                let p = d.get(r, j);
                if p.max_var().is_some_and(|v| v >= nvars) {
                    return Err(ResolutionError::WeightLength {
                        expected: p.max_var().unwrap_or(0) + 1,
                        found: nvars,
                    });
                }
                col.push(poly_from_public(field, p, nvars, i)?);
            }
            cols.push(col);
        }
        diffs.push(Mat { rows: d.rows(), cols });
    }
    Ok(Complex {
        nvars,
        diffs,
        degrees: c.degrees.clone(),
    })
}

fn check_weights(nvars: usize, weights: &[u64]) -> Result<(), ResolutionError> {
    if weights.len() != nvars {
        return Err(ResolutionError::WeightLength {
            expected: nvars,
            found: weights.len(),
        });
    }
    match weights.iter().position(|&w| w == 0) {
        Some(i) => Err(ResolutionError::NonPositiveWeight(i)),
        None => Ok(()),
    }
}

/// Weighted degree of a homogeneous polynomial, `None` otherwise.
pub fn weighted_homogeneous_degree(f: &Polynomial, nvars: usize, weights: &[u64]) -> Option<u64> {
    let mut degs = f.monomials().map(|m| weighted_degree(&to_exp(m, nvars), weights));
    let first = degs.next()?;
    degs.all(|d| d == first).then_some(first)
}

fn ideal_vectors<F: Field>(
    field: &F,
    ord: &ModuleOrder,
    nvars: usize,
    gens: &[Polynomial],
) -> Result<Vec<Vector<F::Elem>>, ResolutionError> {
    gens.iter()
        .enumerate()
        .map(|(i, g)| {
            if g.is_zero() {
                return Err(ResolutionError::ZeroGenerator(i));
            }
            poly_to_vector(field, ord, g, nvars, 0, i)
        })
        .collect()
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// The output is checked before it is returned: every S-polynomial reduces
/// to zero and the basis is reduced.
pub fn groebner_basis(ring: &MGPolyRing, gens: &[Polynomial], order: &TermOrder) -> Result<Vec<Polynomial>, ResolutionError> {
    groebner_basis_with(ring, gens, order, &ResolutionOptions::default())
}

pub fn groebner_basis_with(
    ring: &MGPolyRing,
    gens: &[Polynomial],
    order: &TermOrder,
    opts: &ResolutionOptions,
) -> Result<Vec<Polynomial>, ResolutionError> {
    let nvars = ring.nvars();
    order.check_vars(nvars)?;
    dispatch!(ring.field(), |f| {
        let ord = ModuleOrder::ideal(order.clone(), nvars);
        let vs = ideal_vectors(f, &ord, nvars, gens)?;
        let gb = groebner::buchberger(f, &ord, vs, true, opts)?;
        self_check(f, &ord, &gb)?;
        Ok(gb
            .iter()
            .map(|g| vector_to_polys(f, g, 1).remove(0))
            .collect())
    })
}

/// Reduced Gröbner basis of a submodule of `S^r`, position over term with
/// the first component largest.
pub fn module_groebner_basis(
    ring: &MGPolyRing,
    gens: &[Vec<Polynomial>],
    order: &TermOrder,
) -> Result<Vec<Vec<Polynomial>>, ResolutionError> {
    let nvars = ring.nvars();
    order.check_vars(nvars)?;
    let rank = gens.first().map_or(0, Vec::len);
    if gens.iter().any(|g| g.len() != rank) {
        return Err(ResolutionError::RankMismatch);
    }
    dispatch!(ring.field(), |f| {
        let ord = ModuleOrder::pot(order.clone());
        let mut vs = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            let mut terms = Vec::new();
            for (c, p) in g.iter().enumerate() {
                terms.extend(poly_to_vector(f, &ord, p, nvars, c, i)?.terms);
            }
            let v = Vector::from_terms(f, &ord, terms);
            if v.is_zero() {
                return Err(ResolutionError::ZeroGenerator(i));
            }
            vs.push(v);
        }
        let gb = groebner::buchberger(f, &ord, vs, false, &ResolutionOptions::default())?;
        self_check(f, &ord, &gb)?;
        Ok(gb.iter().map(|g| vector_to_polys(f, g, rank)).collect())
    })
}

fn self_check<F: Field>(field: &F, ord: &ModuleOrder, gb: &[Vector<F::Elem>]) -> Result<(), ResolutionError> {
    if !groebner::is_reduced(field, gb) || !groebner::is_groebner(field, ord, gb) {
        return Err(ResolutionError::Internal("Gröbner basis self-check failed".into()));
    }
    Ok(())
}

/// Generators of `{ (a_1, ..., a_m) : sum a_i f_i = 0 }`.
///
/// Computed from a Gröbner basis of the rows `(f_i | e_i)` in
/// `S^{1+m}` under position over term: the elements with no first
/// coordinate form a Gröbner basis of the syzygy module.
pub fn syzygies(ring: &MGPolyRing, gens: &[Polynomial]) -> Result<Vec<Vec<Polynomial>>, ResolutionError> {
    let nvars = ring.nvars();
    let m = gens.len();
    dispatch!(ring.field(), |f| {
        let ord = ModuleOrder::pot(TermOrder::standard(nvars));
        let mut vs = Vec::with_capacity(m);
        for (i, g) in gens.iter().enumerate() {
            if g.is_zero() {
                return Err(ResolutionError::ZeroGenerator(i));
            }
            let mut v = poly_to_vector(f, &ord, g, nvars, 0, i)?;
            v.terms.push(Term {
                exp: vec![0; nvars],
                comp: i + 1,
                coef: f.one(),
            });
            vs.push(v);
        }
        let gb = groebner::buchberger(f, &ord, vs, false, &ResolutionOptions::default())?;
        Ok(gb
            .iter()
            .filter(|g| g.lead().comp > 0)
            .map(|g| vector_to_polys(f, g, m + 1).split_off(1))
            .collect())
    })
}

fn homogeneous_vectors<F: Field>(
    field: &F,
    nvars: usize,
    weights: &[u64],
    gens: &[Polynomial],
) -> Result<Vec<Vector<F::Elem>>, ResolutionError> {
    check_weights(nvars, weights)?;
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            return Err(ResolutionError::ZeroGenerator(i));
        }
        if weighted_homogeneous_degree(g, nvars, weights).is_none() {
            return Err(ResolutionError::Inhomogeneous(i));
        }
    }
    let ord = ModuleOrder::ideal(TermOrder::DegRevLex { weights: weights.to_vec() }, nvars);
    ideal_vectors(field, &ord, nvars, gens)
}

/// Schreyer free resolution of `S / I` (not necessarily minimal). The
/// relation `d_i d_{i+1} = 0` is verified before returning.
pub fn free_resolution(ideal: &IdealPresentation, weights: &[u64]) -> Result<FreeResolutionComplex, ResolutionError> {
    free_resolution_with(ideal, weights, &ResolutionOptions::default())
}

pub fn free_resolution_with(
    ideal: &IdealPresentation,
    weights: &[u64],
    opts: &ResolutionOptions,
) -> Result<FreeResolutionComplex, ResolutionError> {
    let ring = ideal.ring();
    let nvars = ring.nvars();
    dispatch!(ring.field(), |f| {
        let vs = homogeneous_vectors(f, nvars, weights, ideal.generators())?;
        let c = schreyer::resolve(f, weights, vs, opts)?;
        if !c.is_complex(f) {
            return Err(ResolutionError::Internal("d_i d_(i+1) != 0".into()));
        }
        Ok(complex_to_public(f, ring.field(), weights, &c))
    })
}

fn euler_characteristic(ranks: &[usize]) -> i64 {
    ranks
        .iter()
        .enumerate()
        .map(|(i, &r)| if i % 2 == 0 { r as i64 } else { -(r as i64) })
        .sum()
}

fn check_graded(c: &FreeResolutionComplex) -> Result<(), ResolutionError> {
    let nvars = c.weights.len();
    for (index, d) in c.differentials.iter().enumerate() {
        for r in 0..d.rows() {
            for j in 0..d.cols() {
                let p = d.get(r, j);
                if p.is_zero() {
                    continue;
                }
                let ok = p.max_var().is_none_or(|v| v < nvars)
                    && d.col_degrees[j].checked_sub(d.row_degrees[r])
                        == weighted_homogeneous_degree(p, nvars, &c.weights);
                if !ok {
                    return Err(ResolutionError::Ungraded {
                        index: index + 1,
                        row: r,
                        col: j,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Cancel unit entries to obtain a minimal complex, and read off its Betti
/// table. Every entry must be homogeneous of the degree its labels demand.
pub fn minimalize(c: &FreeResolutionComplex) -> Result<(FreeResolutionComplex, BettiTable), ResolutionError> {
    check_graded(c)?;
    dispatch!(c.field, |f| {
        let inner = complex_from_public(f, c)?;
        let min = minimal::minimalize(f, &inner, &ResolutionOptions::default())?;
        if euler_characteristic(&inner.ranks()) != euler_characteristic(&min.ranks()) {
            return Err(ResolutionError::Internal("rank accounting failed".into()));
        }
        let out = complex_to_public(f, c.field, &c.weights, &min);
        let betti = BettiTable::from_degrees(&min.degrees);
        Ok((out, betti))
    })
}

/// Graded Betti table of the minimal free resolution of `S / I`.
pub fn betti_table(ideal: &IdealPresentation, weights: &[u64], opts: &ResolutionOptions) -> Result<BettiTable, ResolutionError> {
    let ring = ideal.ring();
    dispatch!(ring.field(), |f| minimal_betti(f, ring.nvars(), weights, ideal.generators(), opts))
}

fn minimal_betti<F: Field>(
    field: &F,
    nvars: usize,
    weights: &[u64],
    gens: &[Polynomial],
    opts: &ResolutionOptions,
) -> Result<BettiTable, ResolutionError> {
    let vs = homogeneous_vectors(field, nvars, weights, gens)?;
    let c = schreyer::resolve(field, weights, vs, opts)?;
    let min = minimal::minimalize(field, &c, opts)?;
    if !minimal::is_minimal(&min) || !min.is_complex(field) {
        return Err(ResolutionError::Internal("minimal complex check failed".into()));
    }
    if euler_characteristic(&c.ranks()) != euler_characteristic(&min.ranks()) {
        return Err(ResolutionError::Internal("rank accounting failed".into()));
    }
    Ok(BettiTable::from_degrees(&min.degrees))
}

/// Projective dimension of `S / I`: the length of its minimal free
/// resolution.
pub fn pdim(ideal: &IdealPresentation, weights: &[u64]) -> Result<usize, ResolutionError> {
    pdim_with(ideal, weights, &ResolutionOptions::default())
}

pub fn pdim_with(ideal: &IdealPresentation, weights: &[u64], opts: &ResolutionOptions) -> Result<usize, ResolutionError> {
    betti_table(ideal, weights, opts)?
        .length()
        .ok_or(ResolutionError::UnitIdeal)
}

/// `true` iff the projective dimension of `S / <gens>` equals the number of
/// generators.
pub fn is_regular_sequence(ring: &MGPolyRing, gens: &[Polynomial], weights: &[u64]) -> Result<bool, ResolutionError> {
    let betti = dispatch!(ring.field(), |f| minimal_betti(
        f,
        ring.nvars(),
        weights,
        gens,
        &ResolutionOptions::default()
    ))?;
    let pd = betti.length().ok_or(ResolutionError::UnitIdeal)?;
    Ok(pd == gens.len())
}
