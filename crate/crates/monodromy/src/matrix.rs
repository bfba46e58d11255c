//! Dense matrices over an exact scalar field, plus a small integer-matrix
//! companion type.
//!
//! Everything in the crate happens at rank ≤ 2(k−1) for single-digit `k`, so
//! the implementations favor clarity over asymptotics: textbook
//! multiplication, Gaussian elimination for rank/determinant/solving, and
//! Faddeev–LeVerrier for the characteristic polynomial. The latter is chosen
//! deliberately: its only divisions are by the integers `1, …, n`, which stay
//! exact in every scalar domain used here (including `Q(λ)`), and it needs no
//! pivoting logic in a field with zero divisors of symbolic expressions.

use std::fmt;

use crate::scalars::poly::Poly;
use crate::scalars::rational::Rational;
use crate::scalars::Scalar;

/// A dense `rows × cols` matrix over `F`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { F::one() } else { F::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Conjugate transpose with respect to the scalar conjugation.
    pub fn conj_transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conjugate())
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * b.clone());
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).clone() + rhs.get(i, j).clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).clone() - rhs.get(i, j).clone())
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    let a = self.get(i, j);
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc + a.clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    pub fn trace(&self) -> F {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut acc = F::zero();
        for i in 0..self.rows {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Row echelon form by Gaussian elimination; returns the echelon matrix,
    /// the pivot column indices, and the determinant scale `(−1)^swaps · Π
    /// pivots` accumulated so far (meaningful for square input).
    fn echelon(&self) -> (Matrix<F>, Vec<usize>, F) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut det = F::one();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    let a = m.get(row, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(row, j, b);
                    m.set(p, j, a);
                }
                det = -det;
            }
            let pivot = m.get(row, col).clone();
            det = det * pivot.clone();
            let pivot_inv = pivot.inv().expect("nonzero pivot in a field");
            for r in (row + 1)..m.rows {
                let factor = m.get(r, col).clone() * pivot_inv.clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let v = m.get(r, j).clone() - factor.clone() * m.get(row, j).clone();
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots, det)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let (_, pivots, det) = self.echelon();
        if pivots.len() == self.rows {
            det
        } else {
            F::zero()
        }
    }

    /// Inverse by Gauss–Jordan on `[A | I]`; `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        for col in 0..n {
            let p = (col..n).find(|&r| !aug.get(r, col).is_zero())?;
            if p != col {
                for j in 0..2 * n {
                    let a = aug.get(col, j).clone();
                    let b = aug.get(p, j).clone();
                    aug.set(col, j, b);
                    aug.set(p, j, a);
                }
            }
            let inv = aug.get(col, col).clone().inv().unwrap();
            for j in 0..2 * n {
                let v = aug.get(col, j).clone() * inv.clone();
                aug.set(col, j, v);
            }
            for r in 0..n {
                if r == col || aug.get(r, col).is_zero() {
                    continue;
                }
                let factor = aug.get(r, col).clone();
                for j in 0..2 * n {
                    let v = aug.get(r, j).clone() - factor.clone() * aug.get(col, j).clone();
                    aug.set(r, j, v);
                }
            }
        }
        Some(Matrix::from_fn(n, n, |i, j| aug.get(i, j + n).clone()))
    }

    /// Characteristic polynomial `det(xI − A)` by the Faddeev–LeVerrier
    /// recurrence `N₁ = A, c_j = −tr(A·N_{j−1} …)/j`; all divisions are by
    /// the integers `1, …, n`, hence exact over any of our scalar domains.
    pub fn char_poly(&self) -> Poly<F> {
        assert_eq!(self.rows, self.cols, "characteristic polynomial of a non-square matrix");
        let n = self.rows;
        let mut coeffs = vec![F::zero(); n + 1];
        coeffs[n] = F::one();
        let mut nmat = self.clone();
        for j in 1..=n {
            let c = (-nmat.trace()).div_nat(j as u64);
            coeffs[n - j] = c.clone();
            if j < n {
                let shifted = nmat.add(&Matrix::identity(n).scale(&c));
                nmat = self.mul(&shifted);
            }
        }
        Poly::from_coeffs(coeffs)
    }

    /// A maximal linearly independent subset of the columns, returned as the
    /// original column vectors (in column order).
    pub fn independent_columns(&self) -> Vec<Vec<F>> {
        // Incremental elimination: keep reduced echelon rows of accepted
        // columns; a new column is accepted iff its reduction is nonzero.
        let mut reduced: Vec<Vec<F>> = Vec::new(); // echelonized accepted columns
        let mut out = Vec::new();
        for j in 0..self.cols {
            let mut v = self.column(j);
            for r in reduced.iter() {
                let lead = r.iter().position(|x| !x.is_zero()).unwrap();
                if !v[lead].is_zero() {
                    let factor = v[lead].clone() * r[lead].inv().unwrap();
                    for (vi, ri) in v.iter_mut().zip(r.iter()) {
                        *vi = vi.clone() - factor.clone() * ri.clone();
                    }
                }
            }
            if v.iter().any(|x| !x.is_zero()) {
                out.push(self.column(j));
                reduced.push(v);
                reduced.sort_by_key(|r| r.iter().position(|x| !x.is_zero()).unwrap());
            }
        }
        out
    }

    /// Solves `A x = b`; `None` if inconsistent or underdetermined pivots
    /// are hit (only used with square invertible systems in this crate).
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(self.rows, b.len());
        let inv = self.inverse()?;
        Some(inv.mul_vec(b))
    }
}

impl<F: Scalar> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| strings.iter().map(|row| row[j].len()).max().unwrap_or(0))
            .collect();
        for row in &strings {
            write!(f, "[")?;
            for (j, s) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{s:>w$}", w = widths[j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// A square integer matrix, used for intersection forms and the symplectic
/// shadow where entries are genuinely integral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut out = IntMatrix::zeros(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..self.n {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        IntMatrix::from_fn(self.n, |i, j| self.get(j, i))
    }

    pub fn is_identity(&self) -> bool {
        *self == IntMatrix::identity(self.n)
    }

    /// Lifts into any scalar field.
    pub fn lift<F: Scalar>(&self) -> Matrix<F> {
        Matrix::from_fn(self.n, self.n, |i, j| F::from_i64(self.get(i, j)))
    }

    pub fn det(&self) -> Rational {
        self.lift::<Rational>().det()
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.n, v.len());
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = IntMatrix::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::rat;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| Rational::from_i64(x)).collect()).collect(),
        )
    }

    #[test]
    fn product_and_identity() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let i = Matrix::<Rational>::identity(2);
        assert_eq!(a.mul(&i), a);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), m(&[&[2, 1], &[4, 3]]));
        assert!(!a.is_identity());
        assert!(i.is_identity());
    }

    #[test]
    fn determinant_rank_inverse() {
        let a = m(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]);
        assert_eq!(a.det(), Rational::from_i64(4));
        assert_eq!(a.rank(), 3);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let singular = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.det(), Rational::from_i64(0));
        assert_eq!(singular.rank(), 1);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn char_poly_companion_and_cayley_hamilton() {
        // Companion matrix of x³ − 2x² + 3x − 5.
        let a = m(&[&[0, 0, 5], &[1, 0, -3], &[0, 1, 2]]);
        let cp = a.char_poly();
        assert_eq!(cp, Poly::from_i64(&[-5, 3, -2, 1]));
        // Cayley–Hamilton: cp(A) = 0.
        let mut acc = Matrix::<Rational>::zeros(3, 3);
        for (i, c) in cp.coeffs().iter().enumerate() {
            acc = acc.add(&a.pow(i as u64).scale(c));
        }
        assert_eq!(acc, Matrix::zeros(3, 3));
    }

    #[test]
    fn char_poly_of_identity() {
        let i = Matrix::<Rational>::identity(4);
        // (x − 1)⁴ = x⁴ − 4x³ + 6x² − 4x + 1.
        assert_eq!(i.char_poly(), Poly::from_i64(&[1, -4, 6, -4, 1]));
    }

    #[test]
    fn independent_columns_spans_column_space() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]);
        let cols = a.independent_columns();
        assert_eq!(cols.len(), 2);
        assert_eq!(cols[0], vec![rat(1, 1), rat(2, 1), rat(0, 1)]);
        assert_eq!(cols[1], vec![rat(3, 1), rat(6, 1), rat(1, 1)]);
    }

    #[test]
    fn power_matches_repeated_multiplication() {
        let a = m(&[&[1, 1], &[0, 1]]);
        assert_eq!(a.pow(5), m(&[&[1, 5], &[0, 1]]));
        assert!(a.pow(0).is_identity());
    }

    #[test]
    fn int_matrix_roundtrip() {
        let j = IntMatrix::from_fn(2, |i, k| if i == 0 && k == 1 { 1 } else if i == 1 && k == 0 { -1 } else { 0 });
        assert_eq!(j.mul(&j.transpose()), IntMatrix::identity(2));
        assert_eq!(j.det(), Rational::from_i64(1));
        assert_eq!(j.mul_vec(&[3, 4]), vec![4, -3]);
        assert_eq!(j.lift::<Rational>().get(1, 0), &Rational::from_i64(-1));
    }

    #[test]
    fn solve_square_system() {
        let a = m(&[&[2, 0], &[1, 3]]);
        let x = a.solve(&[rat(4, 1), rat(11, 1)]).unwrap();
        assert_eq!(x, vec![rat(2, 1), rat(3, 1)]);
    }
}
