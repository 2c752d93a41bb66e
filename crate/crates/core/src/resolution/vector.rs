use std::cmp::Ordering;

use super::field::Field;
use super::order::{product, Exp, ModuleOrder};

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Term<E> {
    pub exp: Exp,
    pub comp: usize,
    pub coef: E,
}

/// Element of a free module, terms sorted strictly descending in a module
/// order. Polynomials are vectors living in component 0.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Vector<E> {
    pub terms: Vec<Term<E>>,
}

impl<E: Clone> Vector<E> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term<E> {
        &self.terms[0]
    }

    /// Collect unsorted terms, combining duplicates and dropping zeros.
    pub fn from_terms<F>(field: &F, ord: &ModuleOrder, mut terms: Vec<Term<E>>) -> Self
    where
        F: Field<Elem = E>,
    {
        terms.sort_by(|a, b| ord.cmp(&b.exp, b.comp, &a.exp, a.comp));
        let mut out: Vec<Term<E>> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.exp == t.exp => {
                    last.coef = field.add(&last.coef, &t.coef);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !field.is_zero(&t.coef));
        Vector { terms: out }
    }

    /// Divide by the leading coefficient.
    pub fn make_monic<F: Field<Elem = E>>(&mut self, field: &F) {
        if self.terms.is_empty() {
            return;
        }
        let inv = field.inv(&self.terms[0].coef);
        if field.is_one(&inv) {
            return;
        }
        for t in &mut self.terms {
            t.coef = field.mul(&t.coef, &inv);
        }
    }

    /// `c * m * self`; the order is preserved since it is a module order.
    pub fn mul_term<F: Field<Elem = E>>(&self, field: &F, m: &[u32], c: &E) -> Self {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exp: product(&t.exp, m),
                    comp: t.comp,
                    coef: field.mul(&t.coef, c),
                })
                .collect(),
        }
    }
}

/// `a + c * m * b`, merging in the module order.
pub(crate) fn add_scaled<F: Field>(
    field: &F,
    ord: &ModuleOrder,
    a: &Vector<F::Elem>,
    c: &F::Elem,
    m: &[u32],
    b: &Vector<F::Elem>,
) -> Vector<F::Elem> {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let mut i = 0;
    let mut j = 0;
    let mut pending: Option<Exp> = None;
    while i < a.terms.len() || j < b.terms.len() {
        if j < b.terms.len() && pending.is_none() {
            pending = Some(product(&b.terms[j].exp, m));
        }
        let order = match (a.terms.get(i), &pending) {
            (Some(ta), Some(pb)) => ord.cmp(&ta.exp, ta.comp, pb, b.terms[j].comp),
            (Some(_), None) => Ordering::Greater,
            (None, _) => Ordering::Less,
        };
        match order {
            Ordering::Greater => {
                out.push(a.terms[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let coef = field.mul(c, &b.terms[j].coef);
                if !field.is_zero(&coef) {
                    out.push(Term {
                        exp: pending.take().expect("pending term"),
                        comp: b.terms[j].comp,
                        coef,
                    });
                } else {
                    pending = None;
                }
                j += 1;
            }
            Ordering::Equal => {
                let coef = field.add(&a.terms[i].coef, &field.mul(c, &b.terms[j].coef));
                if !field.is_zero(&coef) {
                    out.push(Term {
                        exp: pending.take().expect("pending term"),
                        comp: b.terms[j].comp,
                        coef,
                    });
                } else {
                    pending = None;
                }
                i += 1;
                j += 1;
            }
        }
    }
    Vector { terms: out }
}

/// Sparse polynomial used in matrix entries: `(exponent, coefficient)` pairs
/// sorted by exponent vector, strictly ascending. The order is only a
/// canonical form, not a monomial order.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Poly<E> {
    pub terms: Vec<(Exp, E)>,
}

impl<E: Clone> Poly<E> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_terms<F: Field<Elem = E>>(field: &F, mut terms: Vec<(Exp, E)>) -> Self {
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Exp, E)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 = field.add(&last.1, &c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !field.is_zero(c));
        Poly { terms: out }
    }

    /// The constant coefficient if the polynomial is a nonzero constant.
    pub fn as_unit(&self) -> Option<&E> {
        match self.terms.as_slice() {
            [(e, c)] if e.iter().all(|&x| x == 0) => Some(c),
            _ => None,
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        if field.is_zero(c) {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), field.mul(a, c)))
                .collect(),
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&self.terms[i].1, &other.terms[j].1);
                    if !field.is_zero(&c) {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { terms: out }
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                terms.push((product(ea, eb), field.mul(ca, cb)));
            }
        }
        Poly::from_terms(field, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::field::PrimeField;
    use crate::resolution::order::TermOrder;

    #[test]
    fn add_scaled_cancels_leading_terms() {
        let f = PrimeField::new(101);
        let ord = ModuleOrder::ideal(TermOrder::standard(2), 2);
        // a = x^2 + y^2, b = x + y, a - x*b = y^2 - xy
        let a = Vector::from_terms(
            &f,
            &ord,
            vec![
                Term { exp: vec![2, 0], comp: 0, coef: 1 },
                Term { exp: vec![0, 2], comp: 0, coef: 1 },
            ],
        );
        let b = Vector::from_terms(
            &f,
            &ord,
            vec![
                Term { exp: vec![1, 0], comp: 0, coef: 1 },
                Term { exp: vec![0, 1], comp: 0, coef: 1 },
            ],
        );
        let r = add_scaled(&f, &ord, &a, &100, &[1, 0], &b);
        let got: Vec<(Exp, u32)> = r.terms.iter().map(|t| (t.exp.clone(), t.coef)).collect();
        assert_eq!(got, vec![(vec![1, 1], 100), (vec![0, 2], 1)]);
    }

    #[test]
    fn poly_product() {
        let f = PrimeField::new(7);
        let p = Poly::from_terms(&f, vec![(vec![1, 0], 1), (vec![0, 1], 1)]);
        let q = Poly::from_terms(&f, vec![(vec![1, 0], 1), (vec![0, 1], 6)]);
        let r = p.mul(&f, &q);
        assert_eq!(r.terms, vec![(vec![0, 2], 6), (vec![2, 0], 1)]);
        assert!(r.add(&f, &r.scale(&f, &6)).is_zero());
        assert_eq!(Poly::from_terms(&f, vec![(vec![0, 0], 3)]).as_unit(), Some(&3));
    }
}
