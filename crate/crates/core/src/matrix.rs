//! Dense arbitrary-precision integer matrices, Smith and Hermite normal
//! forms, and the small exact rational solvers the geometry layer needs.

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};
use num::{Integer, One, Signed, Zero};

/// Row-major integer matrix with explicit dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Int>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntegerMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flat_map(|row| row.iter().cloned()).collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&v| Int::from(v)).collect())
                .collect::<Vec<_>>(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Int) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Int::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// v * self for a row vector v.
    pub fn vec_mul(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.rows, v.len());
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| &v[i] * self.get(i, j)).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += q * row[b]
    fn add_row(&mut self, a: usize, b: usize, q: &Int) {
        for j in 0..self.cols {
            let v = self.get(a, j) + q * self.get(b, j);
            self.set(a, j, v);
        }
    }

    /// col[a] += q * col[b]
    fn add_col(&mut self, a: usize, b: usize, q: &Int) {
        for i in 0..self.rows {
            let v = self.get(i, a) + q * self.get(i, b);
            self.set(i, a, v);
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self.get(a, j).clone();
            self.set(a, j, v);
        }
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let pivot = (k + 1..n).find(|&i| !m.get(i, k).is_zero());
                match pivot {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Int::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, Int::zero());
            }
            prev = m.get(k, k).clone();
        }
        sign * m.get(n - 1, n - 1).clone()
    }

    /// Exact inverse of a matrix with determinant ±1.
    pub fn inverse_unimodular(&self) -> Result<IntegerMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let det = self.det();
        if !(det.clone().abs().is_one()) {
            return Err(Error::Internal("inverse_unimodular on non-unimodular matrix"));
        }
        // Gauss-Jordan over the rationals; entries of the result are integers.
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| Rat::from_integer(self.get(i, j).clone())).collect())
            .collect();
        let mut inv: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            Rat::one()
                        } else {
                            Rat::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&i| !a[i][col].is_zero())
                .ok_or(Error::Internal("singular matrix in inverse"))?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] = &a[col][j] / &p;
                inv[col][j] = &inv[col][j] / &p;
            }
            for i in 0..n {
                if i != col && !a[i][col].is_zero() {
                    let f = a[i][col].clone();
                    for j in 0..n {
                        a[i][j] = &a[i][j] - &f * &a[col][j];
                        inv[i][j] = &inv[i][j] - &f * &inv[col][j];
                    }
                }
            }
        }
        let mut out = IntegerMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                if !inv[i][j].is_integer() {
                    return Err(Error::Internal("non-integer entry in unimodular inverse"));
                }
                out.set(i, j, inv[i][j].to_integer());
            }
        }
        Ok(out)
    }
}

/// Smith normal form: U * A * V = S with S diagonal, d_1 | d_2 | ..., all
/// d_i >= 0, and U, V unimodular.
pub fn smith_normal_form(a: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix, IntegerMatrix) {
    let mut s = a.clone();
    let mut u = IntegerMatrix::identity(a.rows());
    let mut v = IntegerMatrix::identity(a.cols());
    let n = a.rows().min(a.cols());

    for t in 0..n {
        'pivot: loop {
            // Smallest nonzero entry in the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..s.rows() {
                for j in t..s.cols() {
                    if !s.get(i, j).is_zero() {
                        let better = match &best {
                            None => true,
                            Some((bi, bj)) => s.get(i, j).abs() < s.get(*bi, *bj).abs(),
                        };
                        if better {
                            best = Some((i, j));
                        }
                    }
                }
            }
            let (pi, pj) = match best {
                Some(p) => p,
                None => break 'pivot, // trailing block is zero
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..s.rows() {
                if !s.get(i, t).is_zero() {
                    let q = -s.get(i, t).div_floor(s.get(t, t));
                    s.add_row(i, t, &q);
                    u.add_row(i, t, &q);
                    if !s.get(i, t).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..s.cols() {
                if !s.get(t, j).is_zero() {
                    let q = -s.get(t, j).div_floor(s.get(t, t));
                    s.add_col(j, t, &q);
                    v.add_col(j, t, &q);
                    if !s.get(t, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }
            // Pivot divides every entry of the trailing block, or we fold the
            // offending row in and start over.
            for i in t + 1..s.rows() {
                for j in t + 1..s.cols() {
                    if !s.get(i, j).mod_floor(s.get(t, t)).is_zero() {
                        s.add_row(t, i, &Int::one());
                        u.add_row(t, i, &Int::one());
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    (s, u, v)
}

/// Row-style Hermite normal form H = U * A (U unimodular): pivots positive,
/// entries above each pivot reduced into [0, pivot), zero rows last.
pub fn hermite_normal_form(a: &IntegerMatrix) -> (IntegerMatrix, IntegerMatrix) {
    let mut h = a.clone();
    let mut u = IntegerMatrix::identity(a.rows());
    let mut pivot_row = 0;
    for col in 0..h.cols() {
        if pivot_row >= h.rows() {
            break;
        }
        // Euclid's algorithm down the column.
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..h.rows() {
                if !h.get(i, col).is_zero() {
                    let better = match best {
                        None => true,
                        Some(b) => h.get(i, col).abs() < h.get(b, col).abs(),
                    };
                    if better {
                        best = Some(i);
                    }
                }
            }
            let b = match best {
                Some(b) => b,
                None => break,
            };
            h.swap_rows(pivot_row, b);
            u.swap_rows(pivot_row, b);
            let mut done = true;
            for i in pivot_row + 1..h.rows() {
                if !h.get(i, col).is_zero() {
                    let q = -h.get(i, col).div_floor(h.get(pivot_row, col));
                    h.add_row(i, pivot_row, &q);
                    u.add_row(i, pivot_row, &q);
                    if !h.get(i, col).is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if h.get(pivot_row, col).is_zero() {
            continue;
        }
        if h.get(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        for i in 0..pivot_row {
            let q = -h.get(i, col).div_floor(h.get(pivot_row, col));
            if !q.is_zero() {
                h.add_row(i, pivot_row, &q);
                u.add_row(i, pivot_row, &q);
            }
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Rank over the rationals.
pub fn rank(a: &IntegerMatrix) -> usize {
    let (s, _, _) = smith_normal_form(a);
    (0..a.rows().min(a.cols()))
        .filter(|&i| !s.get(i, i).is_zero())
        .count()
}

/// Basis of the integer kernel { x : A x = 0 }, returned as rows. The basis
/// is saturated (it generates the full kernel lattice) because V is
/// unimodular in U A V = S.
pub fn kernel_basis(a: &IntegerMatrix) -> Vec<Vec<Int>> {
    let (s, _, v) = smith_normal_form(a);
    let r = (0..a.rows().min(a.cols()))
        .filter(|&i| !s.get(i, i).is_zero())
        .count();
    (r..a.cols()).map(|j| v.col(j)).collect()
}

/// Solve A x = b exactly over the rationals. Returns None if inconsistent.
/// When the system is underdetermined an arbitrary solution is returned.
pub fn solve_rational(a: &IntegerMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows(), b.len());
    let rows = a.rows();
    let cols = a.cols();
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rat> = (0..cols)
                .map(|j| Rat::from_integer(a.get(i, j).clone()))
                .collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        if prow >= rows {
            break;
        }
        let p = (prow..rows).find(|&i| !m[i][col].is_zero());
        let p = match p {
            Some(p) => p,
            None => continue,
        };
        m.swap(prow, p);
        let d = m[prow][col].clone();
        for j in col..=cols {
            m[prow][j] = &m[prow][j] / &d;
        }
        for i in 0..rows {
            if i != prow && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=cols {
                    m[i][j] = &m[i][j] - &f * &m[prow][j];
                }
            }
        }
        pivots.push((prow, col));
        prow += 1;
    }
    for i in prow..rows {
        if !m[i][cols].is_zero() {
            return None; // inconsistent
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, c) in pivots {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn is_unimodular(m: &IntegerMatrix) -> bool {
        m.det().abs().is_one()
    }

    #[test]
    fn snf_identity() {
        let a = IntegerMatrix::identity(3);
        let (s, u, v) = smith_normal_form(&a);
        assert_eq!(s, IntegerMatrix::identity(3));
        assert_eq!(u.mul(&a).mul(&v), s);
    }

    #[test]
    fn snf_divisibility_chain() {
        let a = IntegerMatrix::from_i64(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 1]]);
        let (s, u, v) = smith_normal_form(&a);
        assert_eq!(u.mul(&a).mul(&v), s);
        assert!(is_unimodular(&u));
        assert!(is_unimodular(&v));
        let d: Vec<Int> = (0..3).map(|i| s.get(i, i).clone()).collect();
        // invariant factors of Z/2 + Z/3 + Z/1
        assert_eq!(d, vec![int(1), int(1), int(6)]);
        for i in 0..2 {
            assert!(d[i + 1].clone() % &d[i] == int(0));
        }
    }

    #[test]
    fn snf_rank_deficient() {
        let a = IntegerMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let (s, u, v) = smith_normal_form(&a);
        assert_eq!(u.mul(&a).mul(&v), s);
        assert_eq!(rank(&a), 1);
        assert!(s.get(1, 1).is_zero());
    }

    #[test]
    fn hnf_reproduces_matrix() {
        let a = IntegerMatrix::from_i64(&[&[4, 7, 2], &[6, 3, 9], &[0, 5, 5]]);
        let (h, u) = hermite_normal_form(&a);
        assert!(is_unimodular(&u));
        assert_eq!(u.mul(&a), h);
    }

    #[test]
    fn kernel_is_saturated() {
        // Kernel of (1 2 3) contains (-2,1,0) and (-3,0,1); any integer kernel
        // vector must be an integer combination of the basis.
        let a = IntegerMatrix::from_i64(&[&[1, 2, 3]]);
        let basis = kernel_basis(&a);
        assert_eq!(basis.len(), 2);
        for b in &basis {
            let s: Int = b
                .iter()
                .zip([1i64, 2, 3])
                .map(|(x, c)| x * Int::from(c))
                .sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn solve_exact() {
        let a = IntegerMatrix::from_i64(&[&[2, 1], &[1, 3]]);
        let b = vec![Rat::from_integer(int(4)), Rat::from_integer(int(7))];
        let x = solve_rational(&a, &b).unwrap();
        assert_eq!(x[0], crate::arith::rat(1, 1));
        assert_eq!(x[1], crate::arith::rat(2, 1));
    }

    #[test]
    fn inverse_unimodular_roundtrip() {
        let a = IntegerMatrix::from_i64(&[&[1, 1, 2], &[0, 1, 5], &[0, 0, 1]]);
        let inv = a.inverse_unimodular().unwrap();
        assert_eq!(a.mul(&inv), IntegerMatrix::identity(3));
    }
}
