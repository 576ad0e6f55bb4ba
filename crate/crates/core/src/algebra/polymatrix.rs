use std::fmt;
use std::ops::Mul;

use itertools::Itertools;

use super::unipoly::gcd_all;
use super::{bareiss_det, Scalar, ScalarMatrix, UniPoly};

/// Dense row-major matrix over `Q[t]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<UniPoly>,
}

/// Result of unimodular row reduction of `m`.
///
/// `transform * m == echelon` and `m == inverse * echelon`, with `transform`
/// and `inverse` mutually inverse unimodular matrices. Rows `rank..` of the
/// echelon form are zero.
#[derive(Clone, Debug)]
pub struct UnimodularReduction {
    pub echelon: UniPolyMatrix,
    pub transform: UniPolyMatrix,
    pub inverse: UniPolyMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl UniPolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        UniPolyMatrix { rows, cols, data: vec![UniPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = UniPoly::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<UniPoly>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must equal rows * cols");
        UniPolyMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<UniPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_columns(rows: usize, columns: &[Vec<UniPoly>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    /// Constant polynomial matrix.
    pub fn from_scalar(m: &ScalarMatrix) -> Self {
        Self::from_vec(m.rows(), m.cols(), m.entries().iter().cloned().map(UniPoly::constant).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[UniPoly] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<UniPoly> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_columns(self.rows, &cols.iter().map(|&j| self.column(j)).collect::<Vec<_>>())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), self.cols);
        for (a, &i) in rows.iter().enumerate() {
            for j in 0..self.cols {
                m[(a, j)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(UniPoly::is_zero)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.data.iter().filter_map(UniPoly::degree).max()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Entrywise evaluation at `t = t0`.
    pub fn eval(&self, t0: &Scalar) -> ScalarMatrix {
        ScalarMatrix::from_vec(self.rows, self.cols, self.data.iter().map(|p| p.eval(t0)).collect())
    }

    /// Determinant by fraction-free elimination. Panics if not square.
    pub fn det(&self) -> UniPoly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        if self.rows == 0 {
            return UniPoly::one();
        }
        bareiss_det(self.rows, &self.data)
    }

    /// All `k x k` minors, rows and columns in lexicographic order.
    pub fn minors(&self, k: usize) -> Vec<UniPoly> {
        if k == 0 {
            return vec![UniPoly::one()];
        }
        let mut out = Vec::new();
        for rows in (0..self.rows).combinations(k) {
            for cols in (0..self.cols).combinations(k) {
                let mut sub = Vec::with_capacity(k * k);
                for &i in &rows {
                    for &j in &cols {
                        sub.push(self[(i, j)].clone());
                    }
                }
                out.push(bareiss_det(k, &sub));
            }
        }
        out
    }

    /// Monic gcd of the nonzero `k x k` minors; `None` when they all vanish.
    pub fn minor_gcd(&self, k: usize) -> Option<UniPoly> {
        gcd_all(&self.minors(k))
    }

    /// Rank over the rational function field `Q(t)`.
    pub fn generic_rank(&self) -> usize {
        self.row_reduce(false).rank
    }

    /// Unimodular row reduction to echelon form by Euclidean steps.
    ///
    /// Pivots are monic. With `hermite` set, entries above each pivot are
    /// also reduced modulo it, which makes the echelon form the (unique)
    /// Hermite normal form of the row module.
    pub fn row_reduce(&self, hermite: bool) -> UnimodularReduction {
        let mut red = Reducer {
            r: self.clone(),
            w: Self::identity(self.rows),
            u: Self::identity(self.rows),
        };
        let mut pivot_row = 0;
        let mut pivot_cols = Vec::new();
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            loop {
                let nonzero: Vec<usize> = (pivot_row..self.rows)
                    .filter(|&i| !red.r[(i, col)].is_zero())
                    .collect();
                let Some(&p) = nonzero.iter().min_by_key(|&&i| red.r[(i, col)].degree()) else {
                    break;
                };
                if nonzero.len() == 1 {
                    red.swap(p, pivot_row);
                    let lc = red.r[(pivot_row, col)].leading_coeff().expect("nonzero").clone();
                    red.scale(pivot_row, &lc.recip());
                    if hermite {
                        for i in 0..pivot_row {
                            let (q, _) = red.r[(i, col)]
                                .div_rem(&red.r[(pivot_row, col)])
                                .expect("pivot is nonzero");
                            if !q.is_zero() {
                                red.add_row(i, pivot_row, &-&q);
                            }
                        }
                    }
                    pivot_cols.push(col);
                    pivot_row += 1;
                    break;
                }
                for &q in nonzero.iter().filter(|&&i| i != p) {
                    let (quot, _) = red.r[(q, col)].div_rem(&red.r[(p, col)]).expect("pivot is nonzero");
                    red.add_row(q, p, &-&quot);
                }
            }
        }
        UnimodularReduction {
            echelon: red.r,
            transform: red.w,
            inverse: red.u,
            rank: pivot_row,
            pivot_cols,
        }
    }

    /// Canonical basis of the `Q[t]`-module spanned by the columns, in
    /// column Hermite form: each column's first nonzero entry is monic, these
    /// pivot rows strictly increase, and entries in a pivot row to the left
    /// of the pivot are reduced modulo it.
    pub fn column_hermite_form(&self) -> UniPolyMatrix {
        let red = self.transpose().row_reduce(true);
        red.echelon.select_rows(&(0..red.rank).collect::<Vec<_>>()).transpose()
    }
}

struct Reducer {
    r: UniPolyMatrix,
    w: UniPolyMatrix,
    u: UniPolyMatrix,
}

impl Reducer {
    /// row `target += f * row source`
    fn add_row(&mut self, target: usize, source: usize, f: &UniPoly) {
        for j in 0..self.r.cols {
            let delta = f * &self.r[(source, j)];
            self.r[(target, j)] = &self.r[(target, j)] + &delta;
        }
        for j in 0..self.w.cols {
            let delta = f * &self.w[(source, j)];
            self.w[(target, j)] = &self.w[(target, j)] + &delta;
        }
        for i in 0..self.u.rows {
            let delta = f * &self.u[(i, target)];
            self.u[(i, source)] = &self.u[(i, source)] - &delta;
        }
    }

    fn swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.r.cols {
            self.r.data.swap(a * self.r.cols + j, b * self.r.cols + j);
        }
        for j in 0..self.w.cols {
            self.w.data.swap(a * self.w.cols + j, b * self.w.cols + j);
        }
        for i in 0..self.u.rows {
            self.u.data.swap(i * self.u.cols + a, i * self.u.cols + b);
        }
    }

    fn scale(&mut self, row: usize, c: &Scalar) {
        for j in 0..self.r.cols {
            self.r[(row, j)] = self.r[(row, j)].scale(c);
        }
        for j in 0..self.w.cols {
            self.w[(row, j)] = self.w[(row, j)].scale(c);
        }
        let inv = c.recip();
        for i in 0..self.u.rows {
            self.u[(i, row)] = self.u[(i, row)].scale(&inv);
        }
    }
}

impl std::ops::Index<(usize, usize)> for UniPolyMatrix {
    type Output = UniPoly;
    fn index(&self, (i, j): (usize, usize)) -> &UniPoly {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for UniPolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut UniPoly {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &UniPolyMatrix {
    type Output = UniPolyMatrix;
    fn mul(self, rhs: &UniPolyMatrix) -> UniPolyMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = UniPolyMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] = &out[(i, j)] + &prod;
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("[{}]", self[(i, j)])).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn reduction_invariants() {
        let m = UniPolyMatrix::from_rows(vec![
            vec![p(&[0, 1]), p(&[1]), p(&[2, 0, 1])],
            vec![p(&[0, 0, 1]), p(&[0, 1]), p(&[0, 2, 0, 1])],
            vec![p(&[1]), p(&[-1, 3]), p(&[5])],
        ]);
        let red = m.row_reduce(false);
        assert_eq!(&red.transform * &m, red.echelon);
        assert_eq!(&red.inverse * &red.echelon, m);
        assert_eq!(&red.transform * &red.inverse, UniPolyMatrix::identity(3));
        assert_eq!(red.rank, 2);
        assert!(red.transform.det().is_constant());
    }

    #[test]
    fn hermite_form_is_canonical() {
        let base = UniPolyMatrix::from_rows(vec![vec![p(&[1])], vec![p(&[0, 1])]]);
        let scaled = UniPolyMatrix::from_rows(vec![vec![p(&[-3])], vec![p(&[0, -3])]]);
        assert_eq!(base.column_hermite_form(), scaled.column_hermite_form());
        assert_eq!(base.column_hermite_form(), base);

        let two = UniPolyMatrix::from_rows(vec![
            vec![p(&[1]), p(&[0, 1])],
            vec![p(&[1, 1]), p(&[2])],
            vec![p(&[0, 0, 1]), p(&[1])],
        ]);
        let mixed = &two * &UniPolyMatrix::from_rows(vec![vec![p(&[2]), p(&[0, 1])], vec![p(&[1]), p(&[1, 0, 1])]]);
        // det of the first mixing matrix is 2t^2 - t + 2, a non-unit, so the module shrinks
        let uni = UniPolyMatrix::from_rows(vec![vec![p(&[1]), p(&[0, 1])], vec![p(&[0]), p(&[-1])]]);
        assert_eq!((&two * &uni).column_hermite_form(), two.column_hermite_form());
        assert_ne!(mixed.column_hermite_form(), two.column_hermite_form());
    }

    #[test]
    fn minors_and_rank() {
        let m = UniPolyMatrix::from_rows(vec![vec![p(&[1]), p(&[0, 1])], vec![p(&[0, 1]), p(&[0, 0, 1])]]);
        assert_eq!(m.generic_rank(), 1);
        assert!(m.det().is_zero());
        assert_eq!(m.minor_gcd(1), Some(p(&[1])));
        assert_eq!(m.minor_gcd(2), None);
    }
}
