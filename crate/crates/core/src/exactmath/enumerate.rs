use std::collections::BTreeSet;

use num_traits::{Signed, ToPrimitive, Zero};

use super::{DegreeVector, MathError, Rational};

/// All `x >= 0` with `Σ x_i gens_i == target` and `Σ x_i <= length_bound`.
///
/// Generators may have negative coordinates, so the only pruning available in
/// general is the length bound; the last coordinate is solved for directly.
pub fn bounded_nonneg_solutions(
    gens: &[DegreeVector],
    target: &DegreeVector,
    length_bound: u64,
) -> Result<BTreeSet<Vec<u64>>, MathError> {
    let dim = target.dimension();
    for g in gens {
        g.check_dimension(dim)?;
    }
    let mut out = BTreeSet::new();
    if gens.is_empty() {
        if target.is_zero() {
            out.insert(Vec::new());
        }
        return Ok(out);
    }
    let mut coeffs = vec![0u64; gens.len()];
    search(gens, target, length_bound, 0, &mut coeffs, &mut out);
    Ok(out)
}

fn search(
    gens: &[DegreeVector],
    remaining: &DegreeVector,
    budget: u64,
    index: usize,
    coeffs: &mut Vec<u64>,
    out: &mut BTreeSet<Vec<u64>>,
) {
    let last = gens.len() - 1;
    if index == last {
        if gens[last].is_zero() {
            // a zero generator absorbs any leftover length
            if remaining.is_zero() {
                for k in 0..=budget {
                    coeffs[last] = k;
                    out.insert(coeffs.clone());
                }
                coeffs[last] = 0;
            }
            return;
        }
        if let Some(k) = exact_multiple(&gens[last], remaining) {
            if k <= budget {
                coeffs[last] = k;
                out.insert(coeffs.clone());
                coeffs[last] = 0;
            }
        }
        return;
    }
    let mut rem = remaining.clone();
    for k in 0..=budget {
        coeffs[index] = k;
        search(gens, &rem, budget - k, index + 1, coeffs, out);
        rem = &rem - &gens[index];
    }
    coeffs[index] = 0;
}

/// `k >= 0` with `k * g == v`, if one exists.
fn exact_multiple(g: &DegreeVector, v: &DegreeVector) -> Option<u64> {
    let pivot = (0..g.dimension()).find(|&i| !g[i].is_zero())?;
    let k: Rational = &v[pivot] / &g[pivot];
    if k.is_negative() || !super::is_integral(&k) {
        return None;
    }
    (g.scale(&k) == *v).then(|| k.to_integer().to_u64()).flatten()
}
