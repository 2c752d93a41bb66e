use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::exactmath::Rational;

/// Coefficient arithmetic for the Gröbner and resolution engines.
///
/// Fields are passed around as small context values so that the prime can be
/// chosen at run time.
pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// Image of a rational number, if its denominator is invertible.
    fn embed_rational(&self, q: &Rational) -> Option<Self::Elem>;
    /// A rational representative (symmetric residues for prime fields).
    fn to_rational(&self, a: &Self::Elem) -> Rational;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// `GF(p)` for a prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Self {
        assert!((2..(1 << 31)).contains(&p), "prime out of range");
        PrimeField { p }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    fn reduce_big(&self, n: &BigInt) -> u32 {
        n.mod_floor(&BigInt::from(self.p))
            .to_u32()
            .expect("residue fits in u32")
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((u64::from(*a) * u64::from(*b)) % u64::from(self.p)) as u32
    }

    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        // Fermat: a^(p-2)
        let mut base = u64::from(*a);
        let mut exp = self.p - 2;
        let m = u64::from(self.p);
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        acc as u32
    }

    fn embed_rational(&self, q: &Rational) -> Option<u32> {
        let den = self.reduce_big(q.denom());
        if den == 0 {
            return None;
        }
        Some(self.mul(&self.reduce_big(q.numer()), &self.inv(&den)))
    }

    fn to_rational(&self, a: &u32) -> Rational {
        let v = i64::from(*a);
        let p = i64::from(self.p);
        let sym = if v > p / 2 { v - p } else { v };
        Rational::from_integer(BigInt::from(sym))
    }
}

/// The rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn inv(&self, a: &Rational) -> Rational {
        assert!(!a.is_zero(), "inverse of zero in QQ");
        a.recip()
    }

    fn embed_rational(&self, q: &Rational) -> Option<Rational> {
        Some(q.clone())
    }

    fn to_rational(&self, a: &Rational) -> Rational {
        a.clone()
    }
}
