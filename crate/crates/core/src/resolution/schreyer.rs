use super::field::Field;
use super::groebner::{buchberger, find_divisor, Lead};
use super::order::{divides, lcm, product, quotient, weighted_degree, Exp, ModuleKind, ModuleOrder, TermOrder};
use super::vector::{add_scaled, Poly, Term, Vector};
use super::{Control, ResolutionError};

/// Column-major polynomial matrix over a field.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Mat<E> {
    pub rows: usize,
    pub cols: Vec<Vec<Poly<E>>>,
}

impl<E: Clone> Mat<E> {
    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Mat<E>) -> Mat<E> {
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let mut out = vec![Poly::zero(); self.rows];
                for (k, entry) in col.iter().enumerate() {
                    if entry.is_zero() {
                        continue;
                    }
                    for (r, a) in self.cols[k].iter().enumerate() {
                        if !a.is_zero() {
                            out[r] = out[r].add(field, &a.mul(field, entry));
                        }
                    }
                }
                out
            })
            .collect();
        Mat {
            rows: self.rows,
            cols,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(Poly::is_zero))
    }
}

/// Graded free complex `F_0 <- F_1 <- ... <- F_L` with `F_0` of rank one
/// in degree 0. `diffs[i]` is `d_{i+1}`; `degrees[i]` lists the weighted
/// degrees of the basis of `F_i`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Complex<E> {
    pub nvars: usize,
    pub diffs: Vec<Mat<E>>,
    pub degrees: Vec<Vec<u64>>,
}

impl<E: Clone> Complex<E> {
    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    pub fn is_complex<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.diffs
            .windows(2)
            .all(|w| w[0].mul(field, &w[1]).is_zero())
    }
}

fn to_column<E: Clone>(v: &Vector<E>, rows: usize) -> Vec<Poly<E>> {
    let mut buckets: Vec<Vec<(Exp, E)>> = vec![Vec::new(); rows];
    for t in &v.terms {
        buckets[t.comp].push((t.exp.clone(), t.coef.clone()));
    }
    buckets
        .into_iter()
        .map(|mut terms| {
            terms.sort_by(|a, b| a.0.cmp(&b.0));
            Poly { terms }
        })
        .collect()
}

/// Free resolution of `S / <gens>` by iterated Schreyer syzygies.
///
/// Every generator must be homogeneous for `weights`; the term order is
/// degrevlex with the same weights.
pub(crate) fn resolve<F: Field>(
    field: &F,
    weights: &[u64],
    gens: Vec<Vector<F::Elem>>,
    ctl: &Control,
) -> Result<Complex<F::Elem>, ResolutionError> {
    let nvars = weights.len();
    let base = TermOrder::DegRevLex {
        weights: weights.to_vec(),
    };
    let mut order = ModuleOrder::ideal(base.clone(), nvars);
    let mut level = buchberger(field, &order, gens, true, ctl)?;
    let mut diffs = Vec::new();
    let mut degrees: Vec<Vec<u64>> = vec![vec![0]];

    while !level.is_empty() {
        ctl.check_cancel()?;
        sort_level(&mut level, &order);
        let prev = degrees.last().expect("degrees nonempty").clone();
        let rows = prev.len();
        degrees.push(
            level
                .iter()
                .map(|g| weighted_degree(&g.lead().exp, weights) + prev[g.lead().comp])
                .collect(),
        );
        diffs.push(Mat {
            rows,
            cols: level.iter().map(|g| to_column(g, rows)).collect(),
        });
        let next_order = induced_order(&base, &order, &level);
        let syz = schreyer_syzygies(field, &order, &next_order, &level, ctl)?;
        order = next_order;
        level = syz;
        if diffs.len() > nvars + 1 {
            return Err(ResolutionError::Internal("resolution did not terminate".into()));
        }
    }
    Ok(Complex {
        nvars,
        diffs,
        degrees,
    })
}

/// Order the basis so that, within a component, the exponent of the first
/// variable occurring in any lead is non-increasing. Schreyer syzygy leads
/// then avoid one more variable per step, which bounds the length.
fn sort_level<E: Clone>(level: &mut [Vector<E>], ord: &ModuleOrder) {
    let nvars = level.first().map_or(0, |g| g.lead().exp.len());
    let Some(var) = (0..nvars).find(|&v| level.iter().any(|g| g.lead().exp[v] > 0)) else {
        return;
    };
    level.sort_by(|a, b| {
        let (ta, tb) = (a.lead(), b.lead());
        ta.comp
            .cmp(&tb.comp)
            .then_with(|| tb.exp[var].cmp(&ta.exp[var]))
            .then_with(|| ord.cmp(&tb.exp, tb.comp, &ta.exp, ta.comp))
    });
}

/// Schreyer order on the free module whose basis maps to `level`.
fn induced_order<E: Clone>(base: &TermOrder, prev: &ModuleOrder, level: &[Vector<E>]) -> ModuleOrder {
    let ModuleKind::Schreyer {
        shifts: prev_shifts,
        ranks: prev_ranks,
    } = &prev.kind
    else {
        unreachable!("resolution levels use Schreyer orders")
    };
    let shifts: Vec<Exp> = level
        .iter()
        .map(|g| product(&g.lead().exp, &prev_shifts[g.lead().comp]))
        .collect();
    let mut idx: Vec<usize> = (0..level.len()).collect();
    idx.sort_by_key(|&i| (prev_ranks[level[i].lead().comp], i));
    let mut ranks = vec![0; level.len()];
    for (r, i) in idx.into_iter().enumerate() {
        ranks[i] = r;
    }
    ModuleOrder {
        base: base.clone(),
        kind: ModuleKind::Schreyer { shifts, ranks },
    }
}

/// Gröbner basis of the syzygies of `level` (itself a Gröbner basis for
/// `ord`) under the induced order `next`.
///
/// Only pairs whose lead `(lcm / lm_i) e_i` is minimal among the leads with
/// the same `i` are used; these generate the lead module of the syzygies.
fn schreyer_syzygies<F: Field>(
    field: &F,
    ord: &ModuleOrder,
    next: &ModuleOrder,
    level: &[Vector<F::Elem>],
    ctl: &Control,
) -> Result<Vec<Vector<F::Elem>>, ResolutionError> {
    let leads: Vec<Lead> = level.iter().map(Lead::of).collect();
    let mut out = Vec::new();
    for i in 0..level.len() {
        let mut cands: Vec<(usize, Exp)> = Vec::new();
        for j in i + 1..level.len() {
            if leads[j].comp == leads[i].comp {
                let l = lcm(&leads[i].exp, &leads[j].exp);
                cands.push((j, quotient(&l, &leads[i].exp)));
            }
        }
        ctl.check_pairs(cands.len())?;
        for (a, (j, q)) in cands.iter().enumerate() {
            let redundant = cands
                .iter()
                .enumerate()
                .any(|(b, (_, q2))| b != a && divides(q2, q) && (q2 != q || b < a));
            if redundant {
                continue;
            }
            ctl.check_cancel()?;
            out.push(pair_syzygy(field, ord, next, level, &leads, i, *j, q)?);
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn pair_syzygy<F: Field>(
    field: &F,
    ord: &ModuleOrder,
    next: &ModuleOrder,
    level: &[Vector<F::Elem>],
    leads: &[Lead],
    i: usize,
    j: usize,
    qi: &[u32],
) -> Result<Vector<F::Elem>, ResolutionError> {
    let ci = level[i].lead().coef.clone();
    let cj = level[j].lead().coef.clone();
    let l = product(qi, &leads[i].exp);
    let qj = quotient(&l, &leads[j].exp);
    // cj * qi * g_i - ci * qj * g_j
    let left = level[i].mul_term(field, qi, &cj);
    let mut s = add_scaled(field, ord, &left, &field.neg(&ci), &qj, &level[j]);
    let mut terms = vec![
        Term {
            exp: qi.to_vec(),
            comp: i,
            coef: cj,
        },
        Term {
            exp: qj,
            comp: j,
            coef: field.neg(&ci),
        },
    ];
    while !s.is_zero() {
        let t = s.lead();
        let Some(k) = find_divisor(leads, &t.exp, t.comp, None) else {
            return Err(ResolutionError::Internal(
                "S-vector does not reduce to zero".into(),
            ));
        };
        let q = quotient(&t.exp, &leads[k].exp);
        let c = field.div(&t.coef, &level[k].lead().coef);
        s = add_scaled(field, ord, &s, &field.neg(&c), &q, &level[k]);
        terms.push(Term {
            exp: q,
            comp: k,
            coef: field.neg(&c),
        });
    }
    let mut v = Vector::from_terms(field, next, terms);
    v.make_monic(field);
    Ok(v)
}
