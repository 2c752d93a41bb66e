//! Named infinitely generated monoids, given by membership predicates and
//! canonical forms rather than generator lists.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::MonoidError;
use crate::exactmath::{DegreeVector, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BuiltinMonoid {
    /// `(Z × Z_{>0}) ∪ {(0,0)}` in `Z^2`.
    HalfplanePlusOrigin,
    /// The submonoid of `Q_{>=0}` generated by `1/p` for every prime `p`.
    PrimeReciprocal,
    /// The submonoid of `Q` generated by `1` and `n + 1/p_n` for `n >= 1`,
    /// where `p_n` is the `n`-th prime.
    PrimeShift,
}

impl BuiltinMonoid {
    pub fn dimension(self) -> usize {
        match self {
            BuiltinMonoid::HalfplanePlusOrigin => 2,
            BuiltinMonoid::PrimeReciprocal | BuiltinMonoid::PrimeShift => 1,
        }
    }

    pub fn contains(self, q: &DegreeVector) -> Result<bool, MonoidError> {
        q.check_dimension(self.dimension())?;
        Ok(match self {
            BuiltinMonoid::HalfplanePlusOrigin => {
                q.is_integral() && (q[1].is_positive() || q.is_zero())
            }
            BuiltinMonoid::PrimeReciprocal => {
                !q[0].is_negative() && prime_reciprocal_canonical(&q[0])?.is_some()
            }
            BuiltinMonoid::PrimeShift => prime_shift_member(&q[0]),
        })
    }

    pub fn has_bounded_factorization(self) -> bool {
        !matches!(self, BuiltinMonoid::PrimeReciprocal)
    }

    /// Whether a homomorphism to `Z_{>=0}` vanishing only at zero exists.
    ///
    /// `PrimeShift` has bounded factorization but no such map: `1` and every
    /// `1/p_n` lie in its group, forcing `φ(1)` to be divisible by all primes.
    pub fn admits_flattening(self) -> bool {
        matches!(self, BuiltinMonoid::HalfplanePlusOrigin)
    }

    /// A superadditive height, zero only at zero, when one exists:
    /// `(n, m) ↦ m` on the half-plane and `q ↦ ⌊q⌋` on `PrimeShift`
    /// (every generator there is at least 1).
    pub fn height(self, q: &DegreeVector) -> Result<Option<BigInt>, MonoidError> {
        if !self.contains(q)? {
            return Err(MonoidError::NotMember(q.to_string()));
        }
        Ok(match self {
            BuiltinMonoid::HalfplanePlusOrigin => Some(q[1].to_integer()),
            BuiltinMonoid::PrimeShift => Some(q[0].floor().to_integer()),
            BuiltinMonoid::PrimeReciprocal => None,
        })
    }
}

/// `h_1 + Σ h_k / p_k` with `0 < h_k < p_k` and distinct primes `p_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeReciprocalForm {
    pub integer_part: BigInt,
    /// `(p_k, h_k)` sorted by prime.
    pub parts: Vec<(u64, u64)>,
}

impl PrimeReciprocalForm {
    pub fn value(&self) -> Rational {
        self.parts.iter().fold(
            Rational::from_integer(self.integer_part.clone()),
            |acc, &(p, h)| acc + Rational::new(BigInt::from(h), BigInt::from(p)),
        )
    }
}

/// Canonical form of `q` in the prime-reciprocal monoid, or `None` when `q`
/// is not a member.
///
/// With `q = a/D`, the residues are forced modulo each prime of `D` by the
/// Chinese remainder theorem, so the form exists iff `D` is squarefree and the
/// leftover integer part is nonnegative.
pub fn prime_reciprocal_canonical(q: &Rational) -> Result<Option<PrimeReciprocalForm>, MonoidError> {
    if q.is_negative() {
        return Err(MonoidError::Negative(q.clone()));
    }
    let Some(primes) = squarefree_factors(q.denom()) else {
        return Ok(None);
    };
    let a = q.numer();
    let d = q.denom();
    let mut parts = Vec::with_capacity(primes.len());
    let mut rest = q.clone();
    for p in primes {
        let pb = BigInt::from(p);
        let cofactor = (d / &pb).mod_floor(&pb);
        let inv = mod_inverse(&cofactor, &pb).expect("cofactor is a unit mod p");
        let h = (a * inv).mod_floor(&pb);
        debug_assert!(!h.is_zero());
        rest -= Rational::new(h.clone(), pb);
        parts.push((p, h.to_u64().expect("residue below a u64 prime")));
    }
    debug_assert!(rest.is_integer());
    let integer_part = rest.to_integer();
    if integer_part.is_negative() {
        return Ok(None);
    }
    Ok(Some(PrimeReciprocalForm {
        integer_part,
        parts,
    }))
}

/// `h_1 + h_2 + ... + h_l` from the canonical form of `q`.
///
/// This is the count offered as a bound on strictly descending chains from
/// `q`, but it is not one: residues carry, so `g <= q` does not give
/// `g_k <= h_k`. From `1` (value 1) the chain `1 > 4/5 > 3/5 > 2/5 > 1/5 > 0`
/// descends by `1/5` at every step.
pub fn descending_chain_bound(q: &Rational) -> Result<BigInt, MonoidError> {
    let form = prime_reciprocal_canonical(q)?.ok_or_else(|| MonoidError::NotMember(q.to_string()))?;
    Ok(form
        .parts
        .iter()
        .fold(form.integer_part, |acc, &(_, h)| acc + BigInt::from(h)))
}

/// `p` copies of `1/p`: a factorization of `1` of length `p`.
pub fn unbounded_factorization_witness(p: u64) -> Result<Vec<Rational>, MonoidError> {
    if !is_prime(p) {
        return Err(MonoidError::NotPrime(p));
    }
    let part = Rational::new(BigInt::one(), BigInt::from(p));
    Ok(vec![part; p as usize])
}

fn prime_shift_member(q: &Rational) -> bool {
    if q.is_negative() {
        return false;
    }
    let Some(primes) = squarefree_factors(q.denom()) else {
        return false;
    };
    let d = q.denom();
    let a = q.numer();
    // the fractional part forces h_n copies of n + 1/p_n; whatever remains
    // must be a nonnegative integer, supplied by copies of 1 (and by p_n
    // further copies of the same generator, which add integers)
    let mut rest = q.clone();
    for p in primes {
        let pb = BigInt::from(p);
        let cofactor = (d / &pb).mod_floor(&pb);
        let inv = mod_inverse(&cofactor, &pb).expect("cofactor is a unit mod p");
        let h = (a * inv).mod_floor(&pb);
        let n = prime_index(p);
        let generator = Rational::from_integer(BigInt::from(n)) + Rational::new(BigInt::one(), pb);
        rest -= Rational::from_integer(h) * generator;
    }
    !rest.is_negative()
}

/// Distinct prime factors of `n` if `n` is squarefree.
fn squarefree_factors(n: &BigInt) -> Option<Vec<u64>> {
    let mut n = n.to_u64()?;
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return None;
            }
            primes.push(p);
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    Some(primes)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(m);
    g.gcd.is_one().then(|| g.x.mod_floor(m))
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `n` such that `p` is the `n`-th prime (`2` is the first).
fn prime_index(p: u64) -> u64 {
    (2..=p).filter(|&k| is_prime(k)).count() as u64
}
