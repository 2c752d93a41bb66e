use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{MathError, Rational};

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, MathError> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(MathError::NotRectangular);
        }
        let nrows = rows.len();
        Ok(IntMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for tests and small literals.
    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, MathError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// An `rows x cols` matrix with no entries still needs a column count, so
    /// this builds one explicitly.
    pub fn with_shape(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, MathError> {
        if entries.len() != rows * cols {
            return Err(MathError::NotRectangular);
        }
        Ok(IntMatrix {
            rows,
            cols,
            data: entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product: shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Determinant of a square matrix (fraction-free Bareiss elimination).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for c in 0..self.cols {
            let v = self.get(src, c) * factor;
            self.data[dst * self.cols + c] += v;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for r in 0..self.rows {
            let v = self.get(r, src) * factor;
            self.data[r * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Result of [`snf`]: `left * input * right == diagonal`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub left: IntMatrix,
    pub diagonal: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    /// The nonzero invariant factors `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.diagonal.rows.min(self.diagonal.cols);
        (0..n)
            .map(|i| self.diagonal.get(i, i).clone())
            .filter(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form with unimodular transforms.
///
/// Returns `U, D, V` with `U * a * V = D`, `U` and `V` unimodular and `D`
/// diagonal with nonnegative entries forming a divisibility chain.
pub fn snf(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pr, pc)) = smallest_nonzero(&d, t) else {
            break;
        };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        loop {
            // the smallest entry of row and column t becomes the pivot
            let best_row = (t + 1..m)
                .filter(|&i| !d.get(i, t).is_zero())
                .min_by_key(|&i| d.get(i, t).magnitude().clone());
            let best_col = (t + 1..n)
                .filter(|&j| !d.get(t, j).is_zero())
                .min_by_key(|&j| d.get(t, j).magnitude().clone());
            let pivot_mag = d.get(t, t).magnitude().clone();
            let row_mag = best_row.map(|i| d.get(i, t).magnitude().clone());
            let col_mag = best_col.map(|j| d.get(t, j).magnitude().clone());
            match (row_mag, col_mag) {
                (Some(r), c) if r < pivot_mag && c.as_ref().is_none_or(|c| r <= *c) => {
                    let i = best_row.unwrap_or(t);
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                }
                (_, Some(c)) if c < pivot_mag => {
                    let j = best_col.unwrap_or(t);
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                }
                _ => {}
            }

            let pivot = d.get(t, t).clone();
            let mut changed = false;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let neg = -nearest_quotient(d.get(i, t), &pivot);
                d.add_row_multiple(i, t, &neg);
                u.add_row_multiple(i, t, &neg);
                changed |= !d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let neg = -nearest_quotient(d.get(t, j), &pivot);
                d.add_col_multiple(j, t, &neg);
                v.add_col_multiple(j, t, &neg);
                changed |= !d.get(t, j).is_zero();
            }
            if changed {
                continue;
            }
            // row and column are clear; enforce divisibility on the block
            let offender = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !d.get(i, j).is_multiple_of(&pivot));
            match offender {
                Some((i, _)) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithForm {
        left: u,
        diagonal: d,
        right: v,
    }
}

/// Quotient of `a / b` rounded to the nearest integer, so the remainder is at most `|b| / 2`.
fn nearest_quotient(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if r.magnitude() * 2u32 > *b.magnitude() {
        q + 1
    } else {
        q
    }
}

fn smallest_nonzero(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let x = d.get(i, j);
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, b)| ax < *b) {
                best = Some(((i, j), ax));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, MathError> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(MathError::NotRectangular);
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product: shape mismatch");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * rhs.get(k, j);
                    out.data[i * rhs.cols + j] += prod;
                }
            }
        }
        out
    }

    /// Some `X` with `self * X == rhs`, or `None` if the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, rhs: &RationalMatrix) -> Option<RationalMatrix> {
        assert_eq!(self.rows, rhs.rows, "solve: row count mismatch");
        let (m, n, k) = (self.rows, self.cols, rhs.cols);
        let width = n + k;
        let mut aug: Vec<Vec<Rational>> = (0..m)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend_from_slice(rhs.row(r));
                row
            })
            .collect();

        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..m).find(|&i| !aug[i][c].is_zero()) else {
                continue;
            };
            aug.swap(r, p);
            let inv = aug[r][c].recip();
            for x in aug[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..m {
                if i == r || aug[i][c].is_zero() {
                    continue;
                }
                let f = aug[i][c].clone();
                let pivot_row = aug[r].clone();
                for (x, p) in aug[i][c..width].iter_mut().zip(&pivot_row[c..width]) {
                    *x -= &f * p;
                }
            }
            pivots.push(c);
            r += 1;
            if r == m {
                break;
            }
        }
        if aug[r..].iter().any(|row| row[n..].iter().any(|x| !x.is_zero())) {
            return None;
        }
        let mut x = RationalMatrix::zeros(n, k);
        for (i, &c) in pivots.iter().enumerate() {
            for j in 0..k {
                x.set(c, j, aug[i][n + j].clone());
            }
        }
        Some(x)
    }

    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<Rational>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..self.rows {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = &a[i][c] / &a[r][c];
                let (top, bottom) = a.split_at_mut(i);
                for (x, p) in bottom[0][c..].iter_mut().zip(&top[r][c..]) {
                    *x -= &f * p;
                }
            }
            r += 1;
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check_snf(a: &IntMatrix) -> SmithForm {
        let s = snf(a);
        assert_eq!(s.left.mul(a).mul(&s.right), s.diagonal, "U*A*V != D for\n{a}");
        assert!(s.diagonal.is_diagonal());
        assert_eq!(s.left.determinant().abs(), BigInt::one());
        assert_eq!(s.right.determinant().abs(), BigInt::one());
        let diag: Vec<BigInt> = (0..a.rows().min(a.cols()))
            .map(|i| s.diagonal.get(i, i).clone())
            .collect();
        assert!(diag.iter().all(|x| !x.is_negative()));
        for w in diag.windows(2) {
            if !w[0].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]), "divisibility chain broken: {diag:?}");
            } else {
                assert!(w[1].is_zero());
            }
        }
        s
    }

    #[test]
    fn identity_is_its_own_form() {
        let i = IntMatrix::identity(2);
        let s = check_snf(&i);
        assert_eq!(s.left, i);
        assert_eq!(s.right, i);
        assert_eq!(s.diagonal, i);
    }

    #[test]
    fn single_row_with_unit_gcd() {
        let a = IntMatrix::from_i64(&[&[1, 1, -2]]).unwrap();
        let s = check_snf(&a);
        assert_eq!(s.diagonal, IntMatrix::from_i64(&[&[1, 0, 0]]).unwrap());
    }

    #[test]
    fn diag_two_three() {
        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]).unwrap();
        let s = check_snf(&a);
        assert_eq!(s.diagonal, IntMatrix::from_i64(&[&[1, 0], &[0, 6]]).unwrap());
    }

    #[test]
    fn transforms_stay_small_on_a_wide_matrix() {
        // entries used to blow up to thousands of bits at this size
        let mut state = 12345u64;
        let rows: Vec<Vec<BigInt>> = (0..12)
            .map(|_| {
                (0..18)
                    .map(|_| {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        BigInt::from((state >> 33) as i64 % 19 - 9)
                    })
                    .collect()
            })
            .collect();
        let s = check_snf(&IntMatrix::from_rows(rows).unwrap());
        let widest = s.left.data.iter().chain(&s.right.data).map(|x| x.bits()).max().unwrap();
        assert!(widest < 256, "{widest} bits");
    }

    #[test]
    fn empty_and_zero_matrices() {
        let z = IntMatrix::zeros(2, 3);
        let s = check_snf(&z);
        assert_eq!(s.rank(), 0);
        let e = IntMatrix::zeros(0, 4);
        let s = check_snf(&e);
        assert_eq!(s.right, IntMatrix::identity(4));
    }

    #[test]
    fn determinant_small() {
        let a = IntMatrix::from_i64(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 4]]).unwrap();
        // expand along the middle row: -1 * (2*4 - 1*1)
        assert_eq!(a.determinant(), BigInt::from(-7));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = RationalMatrix::from_rows(vec![
            vec![Rational::from_integer(1.into()), Rational::from_integer(1.into())],
            vec![Rational::from_integer(2.into()), Rational::from_integer(2.into())],
        ])
        .unwrap();
        let b = RationalMatrix::from_rows(vec![
            vec![Rational::from_integer(3.into())],
            vec![Rational::from_integer(6.into())],
        ])
        .unwrap();
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        let bad = RationalMatrix::from_rows(vec![
            vec![Rational::from_integer(3.into())],
            vec![Rational::from_integer(7.into())],
        ])
        .unwrap();
        assert!(a.solve(&bad).is_none());
        assert_eq!(a.rank(), 1);
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-6i64..=6, r * c).prop_map(move |v| {
                IntMatrix::with_shape(r, c, v.into_iter().map(BigInt::from).collect()).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(120))]
        #[test]
        fn snf_postconditions(a in small_matrix()) {
            let s = check_snf(&a);
            // product of invariant factors of a square matrix is |det|
            if a.rows() == a.cols() {
                let prod = (0..a.rows()).fold(BigInt::one(), |acc, i| acc * s.diagonal.get(i, i));
                prop_assert_eq!(prod, a.determinant().abs());
            }
        }
    }
}
