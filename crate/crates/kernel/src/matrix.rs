//! Dense exact matrices.

use std::fmt;

use crate::{KernelError, Scalar, UPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::solve_linear`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub rank: usize,
    pub kernel_basis: Vec<Vec<Scalar>>,
    pub particular: Option<Vec<Scalar>>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect())
    }

    pub fn from_cols(cols: &[Vec<Scalar>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn diag(d: &[Scalar]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut p = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = &self[(i, k)];
                if x.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let y = &o[(k, j)];
                    if !y.is_zero() {
                        p[(i, j)] += x * y;
                    }
                }
            }
        }
        p
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in product");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix::new(self.rows, self.cols, self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix::new(self.rows, self.cols, self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix::new(self.rows, self.cols, self.data.iter().map(|a| a * c).collect())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// Reduced row echelon form and pivot columns (Gauss-Jordan).
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                let x = &m[(r, j)] * &inv;
                m[(r, j)] = x;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        let d = &f * &m[(r, j)];
                        m[(i, j)] -= &d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut e = crate::SparseEchelon::new(self.cols);
        for i in 0..self.rows {
            e.insert_dense(self.row(i));
        }
        e.rank()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(i, f)];
                }
                v
            })
            .collect()
    }

    /// Rank, kernel basis and, when `rhs` is given, one particular solution of `M x = rhs`.
    pub fn solve_linear(&self, rhs: Option<&[Scalar]>) -> Result<Solution, KernelError> {
        if self.rows == 0 || self.cols == 0 {
            return Err(KernelError::DimensionMismatch("empty matrix".into()));
        }
        let kernel_basis = self.kernel();
        let rank = self.cols - kernel_basis.len();
        let particular = match rhs {
            None => None,
            Some(b) => {
                if b.len() != self.rows {
                    return Err(KernelError::DimensionMismatch(format!(
                        "rhs has length {}, matrix has {} rows",
                        b.len(),
                        self.rows
                    )));
                }
                let mut aug = Matrix::zeros(self.rows, self.cols + 1);
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        aug[(i, j)] = self[(i, j)].clone();
                    }
                    aug[(i, self.cols)] = b[i].clone();
                }
                let (r, pivots) = aug.rref();
                if pivots.last() == Some(&self.cols) {
                    return Err(KernelError::InconsistentSystem);
                }
                let mut x = vec![Scalar::zero(); self.cols];
                for (i, &p) in pivots.iter().enumerate() {
                    x[p] = r[(i, self.cols)].clone();
                }
                Some(x)
            }
        };
        Ok(Solution { rank, kernel_basis, particular })
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<Scalar, KernelError> {
        if !self.is_square() {
            return Err(KernelError::NonSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Scalar::one());
        }
        let mut m = self.clone();
        let mut sign = false;
        let mut prev = Scalar::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return Ok(Scalar::zero());
                };
                m.swap_rows(k, p);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
                m[(i, k)] = Scalar::zero();
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        Ok(if sign { -d } else { d })
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Characteristic polynomial `det(x I - M)` via reduction to Hessenberg form.
    pub fn char_poly(&self) -> Result<UPoly, KernelError> {
        if !self.is_square() {
            return Err(KernelError::NonSquare);
        }
        let n = self.rows;
        let mut h = self.clone();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| !h[(i, m - 1)].is_zero()) else {
                continue;
            };
            h.swap_rows(i, m);
            h.swap_cols(i, m);
            let inv = h[(m, m - 1)].inv().expect("nonzero pivot");
            for j in m + 1..n {
                if h[(j, m - 1)].is_zero() {
                    continue;
                }
                let u = &h[(j, m - 1)] * &inv;
                for k in 0..n {
                    let d = &u * &h[(m, k)];
                    h[(j, k)] -= &d;
                }
                for k in 0..n {
                    let d = &u * &h[(k, j)];
                    h[(k, m)] += &d;
                }
            }
        }
        let x = UPoly::x();
        let mut p: Vec<UPoly> = vec![UPoly::one()];
        for m in 1..=n {
            let mut next = (&x - &UPoly::constant(h[(m - 1, m - 1)].clone())).mul(&p[m - 1]);
            let mut t = Scalar::one();
            for i in (1..m).rev() {
                t = &t * &h[(i, i - 1)];
                if t.is_zero() {
                    break;
                }
                let c = &t * &h[(i - 1, m - 1)];
                next = &next - &p[i - 1].scale(&c);
            }
            p.push(next);
        }
        Ok(p.pop().expect("nonempty"))
    }

    /// Evaluate a polynomial at this square matrix.
    pub fn eval_poly(&self, f: &UPoly) -> Matrix {
        let n = self.rows;
        let mut acc = Matrix::zeros(n, n);
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(self).add(&Matrix::identity(n).scale(c));
        }
        acc
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        let s = Matrix::identity(3).solve_linear(None).unwrap();
        assert_eq!(s.rank, 3);
        assert!(s.kernel_basis.is_empty());
    }

    #[test]
    fn proportional_rows() {
        let m = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        let s = m.solve_linear(None).unwrap();
        assert_eq!(s.rank, 1);
        assert_eq!(s.kernel_basis, vec![vec![Scalar::int(-1), Scalar::int(1)]]);
    }

    #[test]
    fn inconsistent_rhs() {
        let m = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        let err = m.solve_linear(Some(&[Scalar::int(1), Scalar::int(3)])).unwrap_err();
        assert_eq!(err, KernelError::InconsistentSystem);
        let ok = m.solve_linear(Some(&[Scalar::int(1), Scalar::int(2)])).unwrap();
        let x = ok.particular.unwrap();
        assert_eq!(m.mul_vec(&x), vec![Scalar::int(1), Scalar::int(2)]);
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = Matrix::from_i64(&[&[0, 2, 1], &[3, -1, 4], &[5, 0, -2]]);
        assert_eq!(m.det().unwrap(), Scalar::int(57));
        assert_eq!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).det().unwrap(), Scalar::zero());
        assert_eq!(Matrix::zeros(2, 3).det(), Err(KernelError::NonSquare));
    }

    #[test]
    fn char_poly_of_diagonal() {
        let m = Matrix::diag(&[Scalar::int(1), Scalar::int(2), Scalar::int(2)]);
        let expected = UPoly::from_roots(&[Scalar::int(1), Scalar::int(2), Scalar::int(2)]);
        assert_eq!(m.char_poly().unwrap(), expected);
        let id = Matrix::identity(3).char_poly().unwrap();
        assert_eq!(id, UPoly::from_roots(&[Scalar::one(), Scalar::one(), Scalar::one()]));
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
