//! Dense integer matrices with exact determinant, rank and Smith normal form,
//! plus the handful of rational linear-algebra routines the checks need.

use super::rational::{bigint_json, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::Value;
use std::fmt;
use std::ops::Mul;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl ZMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ZMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(*v));
            }
        }
        m
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, v) in entries.iter().enumerate() {
            m.set(i, i, BigInt::from(*v));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn neg(&self) -> Self {
        ZMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| -v).collect() }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul_vec_rational(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| Rational::from_integer(a.clone()) * b)
                    .sum()
            })
            .collect()
    }

    /// `ᵗx M y` for rational vectors.
    pub fn bilinear(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let my = self.mul_vec_rational(y);
        x.iter().zip(&my).map(|(a, b)| a * b).sum()
    }

    pub fn bilinear_int(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let my = self.mul_vec(y);
        x.iter().zip(&my).map(|(a, b)| a * b).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    /// Rank over `ℚ`.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Rational>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| Rational::from_integer(v.clone())).collect())
            .collect();
        rank_rational(&rows)
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().abs().is_one()
    }

    /// Smith normal form: unimodular `U`, `V` and diagonal `S` with `U·M·V = S`
    /// and each diagonal entry dividing the next.
    pub fn smith_normal_form(&self) -> (ZMatrix, ZMatrix, ZMatrix) {
        let (m, n) = (self.rows, self.cols);
        let mut s = self.clone();
        let mut u = ZMatrix::identity(m);
        let mut v = ZMatrix::identity(n);
        for t in 0..m.min(n) {
            loop {
                // smallest nonzero entry of the trailing block becomes the pivot
                let mut best: Option<(usize, usize)> = None;
                for i in t..m {
                    for j in t..n {
                        let x = s.get(i, j);
                        if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < s.get(bi, bj).abs()) {
                            best = Some((i, j));
                        }
                    }
                }
                let Some((pi, pj)) = best else {
                    return (u, s, v);
                };
                s.swap_rows(t, pi);
                u.swap_rows(t, pi);
                s.swap_cols(t, pj);
                v.swap_cols(t, pj);
                let mut clean = true;
                for i in t + 1..m {
                    let q = s.get(i, t).div_floor(s.get(t, t));
                    if !q.is_zero() {
                        s.add_row_multiple(i, t, &-&q);
                        u.add_row_multiple(i, t, &-&q);
                    }
                    clean &= s.get(i, t).is_zero();
                }
                for j in t + 1..n {
                    let q = s.get(t, j).div_floor(s.get(t, t));
                    if !q.is_zero() {
                        s.add_col_multiple(j, t, &-&q);
                        v.add_col_multiple(j, t, &-&q);
                    }
                    clean &= s.get(t, j).is_zero();
                }
                if !clean {
                    continue;
                }
                let pivot = s.get(t, t).clone();
                let bad_row = (t + 1..m).find(|&i| (t + 1..n).any(|j| !s.get(i, j).is_multiple_of(&pivot)));
                match bad_row {
                    Some(i) => {
                        s.add_row_multiple(t, i, &BigInt::one());
                        u.add_row_multiple(t, i, &BigInt::one());
                    }
                    None => break,
                }
            }
            if s.get(t, t).is_negative() {
                s.negate_row(t);
                u.negate_row(t);
            }
        }
        (u, s, v)
    }

    /// Nonzero diagonal entries of the Smith normal form.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let (_, s, _) = self.smith_normal_form();
        (0..s.rows.min(s.cols)).map(|i| s.get(i, i).clone()).filter(|d| !d.is_zero()).collect()
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

    /// row[dst] += k · row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let add = self.get(src, j) * k;
            self.data[dst * self.cols + j] += add;
        }
    }

    /// col[dst] += k · col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let add = self.get(i, src) * k;
            self.data[i * self.cols + dst] += add;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array(self.row(i).iter().map(bigint_json).collect()))
                .collect(),
        )
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| i64::try_from(v).ok()).collect())
            .collect()
    }
}

impl Mul for &ZMatrix {
    type Output = ZMatrix;
    fn mul(self, rhs: &ZMatrix) -> ZMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = ZMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = a * rhs.get(k, j);
                    out.data[i * rhs.cols + j] += add;
                }
            }
        }
        out
    }
}

impl fmt::Display for ZMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Rank over `ℚ` of a list of rows.
pub fn rank_rational(rows: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for i in rank + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &pivot;
            for j in c..ncols {
                let sub = &f * &a[rank][j];
                a[i][j] -= sub;
            }
        }
        rank += 1;
    }
    rank
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("linear system is underdetermined (rank {rank} < {unknowns} unknowns)")]
    Underdetermined { rank: usize, unknowns: usize },
}

/// Unique solution of an (possibly overdetermined) consistent system `A x = b`.
pub fn solve_rational(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>, SolveError> {
    assert_eq!(a.len(), b.len());
    let n = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for j in c..=n {
            m[rank][j] /= &pivot;
        }
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let sub = &f * &m[rank][j];
                    m[i][j] -= sub;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    if m[rank..].iter().any(|row| !row[n].is_zero()) {
        return Err(SolveError::Inconsistent);
    }
    if rank < n {
        return Err(SolveError::Underdetermined { rank, unknowns: n });
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][n].clone();
    }
    Ok(x)
}

/// Inertia `(positive, negative, zero)` of a symmetric rational matrix, by
/// congruence diagonalization.
pub fn inertia(sym: &[Vec<Rational>]) -> (usize, usize, usize) {
    let n = sym.len();
    let mut a: Vec<Vec<Rational>> = sym.to_vec();
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    while k < n {
        let diag = (k..n).find(|&i| !a[i][i].is_zero());
        let pivot_row = match diag {
            Some(i) => i,
            None => {
                let off = (k..n).flat_map(|i| (k..n).map(move |j| (i, j))).find(|&(i, j)| i != j && !a[i][j].is_zero());
                let Some((i, j)) = off else { break };
                // row/col i += row/col j makes the (i,i) entry 2·a[i][j]
                for c in 0..n {
                    let add = a[j][c].clone();
                    a[i][c] += add;
                }
                for r in 0..n {
                    let add = a[r][j].clone();
                    a[r][i] += add;
                }
                i
            }
        };
        a.swap(k, pivot_row);
        for row in a.iter_mut() {
            row.swap(k, pivot_row);
        }
        let d = a[k][k].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &d;
            for c in 0..n {
                let sub = &f * &a[k][c];
                a[i][c] -= sub;
            }
            for r in 0..n {
                let sub = &f * &a[r][k];
                a[r][i] -= sub;
            }
        }
        k += 1;
    }
    (pos, neg, n - pos - neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn diag_of(s: &ZMatrix) -> Vec<i64> {
        (0..s.rows().min(s.cols())).map(|i| i64::try_from(s.get(i, i)).unwrap()).collect()
    }

    fn check_snf(m: &ZMatrix) -> Vec<i64> {
        let (u, s, v) = m.smith_normal_form();
        assert_eq!(&(&u * m) * &v, s);
        assert!(u.is_unimodular() && v.is_unimodular());
        diag_of(&s)
    }

    #[test]
    fn snf_identity_and_diagonal() {
        assert_eq!(check_snf(&ZMatrix::identity(2)), vec![1, 1]);
        assert_eq!(check_snf(&ZMatrix::diagonal(&[2, 4])), vec![2, 4]);
    }

    #[test]
    fn snf_hyperbolic_two() {
        assert_eq!(check_snf(&ZMatrix::from_i64(&[vec![0, 2], vec![2, 0]])), vec![2, 2]);
    }

    #[test]
    fn snf_non_divisible_diagonal() {
        assert_eq!(check_snf(&ZMatrix::diagonal(&[4, 6])), vec![2, 12]);
    }

    #[test]
    fn determinant_and_rank() {
        let m = ZMatrix::from_i64(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]);
        assert_eq!(m.det(), BigInt::from(4));
        let singular = ZMatrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(singular.det(), BigInt::zero());
        assert_eq!(singular.rank(), 1);
        let swap = ZMatrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(swap.det(), BigInt::from(-1));
    }

    #[test]
    fn solve_overdetermined_consistent() {
        let a = vec![vec![int(1), int(1)], vec![int(1), int(-1)], vec![int(2), int(0)]];
        let b = vec![int(3), int(1), int(4)];
        assert_eq!(solve_rational(&a, &b).unwrap(), vec![int(2), int(1)]);
        let bad = vec![int(3), int(1), int(5)];
        assert_eq!(solve_rational(&a, &bad), Err(SolveError::Inconsistent));
    }

    #[test]
    fn inertia_of_hyperbolic_plane() {
        let u = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(inertia(&u), (1, 1, 0));
        let d = vec![vec![int(-2), int(0)], vec![int(0), int(0)]];
        assert_eq!(inertia(&d), (0, 1, 1));
    }
}
