use std::collections::HashSet;

use super::field::Field;
use super::order::{coprime, divides, lcm, quotient, support_mask, Exp, ModuleOrder};
use super::vector::{add_scaled, Vector};
use super::{Control, ResolutionError};

/// Leading data of a basis element, cached for divisor searches.
#[derive(Debug, Clone)]
pub(crate) struct Lead {
    pub exp: Exp,
    pub comp: usize,
    pub mask: u64,
}

impl Lead {
    pub fn of<E: Clone>(v: &Vector<E>) -> Self {
        let t = v.lead();
        Lead {
            exp: t.exp.clone(),
            comp: t.comp,
            mask: support_mask(&t.exp),
        }
    }
}

/// Index of the first lead dividing `exp * e_comp`.
pub(crate) fn find_divisor(leads: &[Lead], exp: &[u32], comp: usize, skip: Option<usize>) -> Option<usize> {
    let mask = support_mask(exp);
    leads.iter().enumerate().position(|(i, l)| {
        Some(i) != skip && l.comp == comp && l.mask & !mask == 0 && divides(&l.exp, exp)
    })
}

/// Reduce the leading term repeatedly until it is not divisible.
pub(crate) fn top_reduce<F: Field>(
    field: &F,
    ord: &ModuleOrder,
    mut v: Vector<F::Elem>,
    basis: &[Vector<F::Elem>],
    leads: &[Lead],
) -> Vector<F::Elem> {
    while !v.is_zero() {
        let t = v.lead();
        let Some(k) = find_divisor(leads, &t.exp, t.comp, None) else {
            break;
        };
        let q = quotient(&t.exp, &leads[k].exp);
        let c = field.neg(&field.div(&t.coef, &basis[k].lead().coef));
        v = add_scaled(field, ord, &v, &c, &q, &basis[k]);
    }
    v
}

/// Full reduction: no term of the result is divisible by a lead.
pub(crate) fn full_reduce<F: Field>(
    field: &F,
    ord: &ModuleOrder,
    v: Vector<F::Elem>,
    basis: &[Vector<F::Elem>],
    leads: &[Lead],
    skip: Option<usize>,
) -> Vector<F::Elem> {
    let mut rest = v;
    let mut done = Vec::new();
    while !rest.is_zero() {
        let t = rest.lead();
        match find_divisor(leads, &t.exp, t.comp, skip) {
            Some(k) => {
                let q = quotient(&t.exp, &leads[k].exp);
                let c = field.neg(&field.div(&t.coef, &basis[k].lead().coef));
                rest = add_scaled(field, ord, &rest, &c, &q, &basis[k]);
            }
            None => {
                let t = rest.terms.remove(0);
                done.push(t);
            }
        }
    }
    Vector { terms: done }
}

/// S-vector of two monic elements with leads in the same component.
pub(crate) fn s_vector<F: Field>(
    field: &F,
    ord: &ModuleOrder,
    a: &Vector<F::Elem>,
    b: &Vector<F::Elem>,
) -> Vector<F::Elem> {
    let l = lcm(&a.lead().exp, &b.lead().exp);
    let qa = quotient(&l, &a.lead().exp);
    let qb = quotient(&l, &b.lead().exp);
    let ca = field.inv(&a.lead().coef);
    let cb = field.neg(&field.inv(&b.lead().coef));
    let left = a.mul_term(field, &qa, &ca);
    add_scaled(field, ord, &left, &cb, &qb, b)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Exp,
    comp: usize,
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
///
/// Pairs are processed by the normal strategy (smallest lcm first). The
/// chain criterion is always applied; the coprime-leads criterion only when
/// `ideal` is set, since it fails for modules.
pub(crate) fn buchberger<F: Field>(
    field: &F,
    ord: &ModuleOrder,
    gens: Vec<Vector<F::Elem>>,
    ideal: bool,
    ctl: &Control,
) -> Result<Vec<Vector<F::Elem>>, ResolutionError> {
    let mut basis: Vec<Vector<F::Elem>> = Vec::new();
    let mut leads: Vec<Lead> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let insert = |g: Vector<F::Elem>,
                      basis: &mut Vec<Vector<F::Elem>>,
                      leads: &mut Vec<Lead>,
                      pairs: &mut Vec<Pair>,
                      pending: &mut HashSet<(usize, usize)>|
     -> Result<(), ResolutionError> {
        let lead = Lead::of(&g);
        let j = basis.len();
        for (i, l) in leads.iter().enumerate() {
            if l.comp == lead.comp {
                pairs.push(Pair {
                    i,
                    j,
                    lcm: lcm(&l.exp, &lead.exp),
                    comp: lead.comp,
                });
                pending.insert((i, j));
            }
        }
        basis.push(g);
        leads.push(lead);
        ctl.check_pairs(pairs.len())
    };

    for g in gens {
        ctl.check_cancel()?;
        let mut g = top_reduce(field, ord, g, &basis, &leads);
        if g.is_zero() {
            continue;
        }
        g.make_monic(field);
        insert(g, &mut basis, &mut leads, &mut pairs, &mut pending)?;
    }

    while !pairs.is_empty() {
        ctl.check_cancel()?;
        let mut best = 0;
        for k in 1..pairs.len() {
            let (a, b) = (&pairs[k], &pairs[best]);
            if ord.cmp(&a.lcm, a.comp, &b.lcm, b.comp).is_lt() {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        pending.remove(&(pair.i, pair.j));

        if ideal && coprime(&leads[pair.i].exp, &leads[pair.j].exp) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && leads[k].comp == pair.comp
                && divides(&leads[k].exp, &pair.lcm)
                && !pending.contains(&(pair.i.min(k), pair.i.max(k)))
                && !pending.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_vector(field, ord, &basis[pair.i], &basis[pair.j]);
        let mut r = top_reduce(field, ord, s, &basis, &leads);
        if r.is_zero() {
            continue;
        }
        r.make_monic(field);
        insert(r, &mut basis, &mut leads, &mut pairs, &mut pending)?;
    }

    Ok(interreduce(field, ord, basis))
}

/// Drop redundant elements, fully reduce the rest, normalize and sort
/// descending by leading term.
pub(crate) fn interreduce<F: Field>(
    field: &F,
    ord: &ModuleOrder,
    basis: Vec<Vector<F::Elem>>,
) -> Vec<Vector<F::Elem>> {
    let leads: Vec<Lead> = basis.iter().map(Lead::of).collect();
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len()).any(|k| {
                k != i
                    && leads[k].comp == leads[i].comp
                    && divides(&leads[k].exp, &leads[i].exp)
                    && (leads[k].exp != leads[i].exp || k < i)
            })
        })
        .collect();
    let minimal: Vec<Vector<F::Elem>> = keep.iter().map(|&i| basis[i].clone()).collect();
    let min_leads: Vec<Lead> = minimal.iter().map(Lead::of).collect();
    let mut out: Vec<Vector<F::Elem>> = (0..minimal.len())
        .map(|i| {
            let mut g = full_reduce(field, ord, minimal[i].clone(), &minimal, &min_leads, Some(i));
            g.make_monic(field);
            g
        })
        .collect();
    out.sort_by(|a, b| {
        let (ta, tb) = (a.lead(), b.lead());
        ord.cmp(&tb.exp, tb.comp, &ta.exp, ta.comp)
    });
    out
}

/// Every S-vector of `basis` reduces to zero modulo `basis`.
pub(crate) fn is_groebner<F: Field>(field: &F, ord: &ModuleOrder, basis: &[Vector<F::Elem>]) -> bool {
    let leads: Vec<Lead> = basis.iter().map(Lead::of).collect();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if leads[i].comp != leads[j].comp {
                continue;
            }
            let s = s_vector(field, ord, &basis[i], &basis[j]);
            if !full_reduce(field, ord, s, basis, &leads, None).is_zero() {
                return false;
            }
        }
    }
    true
}

/// The basis is reduced: monic, and no term of any element is divisible by
/// the lead of another.
pub(crate) fn is_reduced<F: Field>(field: &F, basis: &[Vector<F::Elem>]) -> bool {
    let leads: Vec<Lead> = basis.iter().map(Lead::of).collect();
    basis.iter().enumerate().all(|(i, g)| {
        field.is_one(&g.lead().coef)
            && g
                .terms
                .iter()
                .all(|t| find_divisor(&leads, &t.exp, t.comp, Some(i)).is_none())
    })
}
