use std::cmp::Ordering;

use super::ResolutionError;

/// Dense exponent vector used inside the engines.
pub(crate) type Exp = Vec<u32>;

/// Monomial order on `k[x_0, ..., x_{n-1}]`, with `x_0 > x_1 > ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermOrder {
    /// Pure lexicographic order. Weights play no role.
    Lex,
    /// Weighted degree first, ties broken reverse-lexicographically.
    DegRevLex { weights: Vec<u64> },
}

impl TermOrder {
    /// Degrevlex with the given positive weights.
    pub fn degrevlex(weights: Vec<u64>) -> Result<Self, ResolutionError> {
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(ResolutionError::NonPositiveWeight(i));
        }
        Ok(TermOrder::DegRevLex { weights })
    }

    /// Degrevlex with all weights 1.
    pub fn standard(nvars: usize) -> Self {
        TermOrder::DegRevLex {
            weights: vec![1; nvars],
        }
    }

    pub(crate) fn check_vars(&self, nvars: usize) -> Result<(), ResolutionError> {
        match self {
            TermOrder::Lex => Ok(()),
            TermOrder::DegRevLex { weights } if weights.len() == nvars => Ok(()),
            TermOrder::DegRevLex { weights } => Err(ResolutionError::WeightLength {
                expected: nvars,
                found: weights.len(),
            }),
        }
    }

    /// Compare `a + sa` with `b + sb`, where missing shifts count as zero.
    pub(crate) fn cmp_shifted(&self, a: &[u32], sa: Option<&[u32]>, b: &[u32], sb: Option<&[u32]>) -> Ordering {
        let at = |v: usize| a[v] + sa.map_or(0, |s| s[v]);
        let bt = |v: usize| b[v] + sb.map_or(0, |s| s[v]);
        match self {
            TermOrder::Lex => {
                for v in 0..a.len() {
                    match at(v).cmp(&bt(v)) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            TermOrder::DegRevLex { weights } => {
                let mut da = 0u64;
                let mut db = 0u64;
                for (v, w) in weights.iter().enumerate() {
                    da += w * u64::from(at(v));
                    db += w * u64::from(bt(v));
                }
                if da != db {
                    return da.cmp(&db);
                }
                for v in (0..a.len()).rev() {
                    match at(v).cmp(&bt(v)) {
                        Ordering::Equal => continue,
                        // a smaller exponent in the last variable means a larger monomial
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub(crate) fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.cmp_shifted(a, None, b, None)
    }
}

/// Order on terms `m * e_c` of a free module.
#[derive(Debug, Clone)]
pub(crate) struct ModuleOrder {
    pub base: TermOrder,
    pub kind: ModuleKind,
}

#[derive(Debug, Clone)]
pub(crate) enum ModuleKind {
    /// Position over term: a smaller component index is larger.
    Pot,
    /// Compare `m * shift[c]` in the base order, then prefer the smaller rank.
    Schreyer { shifts: Vec<Exp>, ranks: Vec<usize> },
}

impl ModuleOrder {
    pub fn pot(base: TermOrder) -> Self {
        ModuleOrder {
            base,
            kind: ModuleKind::Pot,
        }
    }

    /// Rank-one module ordered by the base order.
    pub fn ideal(base: TermOrder, nvars: usize) -> Self {
        ModuleOrder {
            base,
            kind: ModuleKind::Schreyer {
                shifts: vec![vec![0; nvars]],
                ranks: vec![0],
            },
        }
    }

    pub fn cmp(&self, a: &[u32], ca: usize, b: &[u32], cb: usize) -> Ordering {
        match &self.kind {
            ModuleKind::Pot => cb.cmp(&ca).then_with(|| self.base.cmp(a, b)),
            ModuleKind::Schreyer { shifts, ranks } => self
                .base
                .cmp_shifted(a, Some(&shifts[ca]), b, Some(&shifts[cb]))
                .then_with(|| ranks[cb].cmp(&ranks[ca])),
        }
    }
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn lcm(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// `b - a`, assuming `a | b`.
pub(crate) fn quotient(b: &[u32], a: &[u32]) -> Exp {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

pub(crate) fn product(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

pub(crate) fn weighted_degree(a: &[u32], weights: &[u64]) -> u64 {
    a.iter().zip(weights).map(|(e, w)| u64::from(*e) * w).sum()
}

/// Bitmask of the variables with positive exponent, folded modulo 64.
pub(crate) fn support_mask(a: &[u32]) -> u64 {
    a.iter()
        .enumerate()
        .filter(|(_, e)| **e > 0)
        .fold(0, |m, (v, _)| m | (1u64 << (v % 64)))
}
