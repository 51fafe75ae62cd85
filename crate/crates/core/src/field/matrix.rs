//! Dense matrices over a [`Field`], with exact rank, kernel and span solving.
//!
//! Over ℚ the forward pass is fraction-free (Bareiss) on integer rows; over
//! ℚ(a) it is plain Gauss-Jordan, each scalar operation reducing to lowest
//! terms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{vector, Field, Scalar, Vector};
use crate::error::{check_dim, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, field: field.clone(), entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: Vec<Vector>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            check_dim(c, row.len())?;
            for x in row {
                if x.field() != *field {
                    return Err(Error::MixedFields(field.clone(), x.field()));
                }
                entries.push(x);
            }
        }
        Ok(Matrix { rows: r, cols: c, field: field.clone(), entries })
    }

    /// Matrix whose columns are `cols`, each of length `rows`.
    pub fn from_columns(field: &Field, rows: usize, cols: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            check_dim(rows, col.len())?;
            for (i, x) in col.iter().enumerate() {
                if x.field() != *field {
                    return Err(Error::MixedFields(field.clone(), x.field()));
                }
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        check_dim(self.cols, v.len())?;
        Ok((0..self.rows).map(|i| vector::dot(&self.field, self.row(i), v)).collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.cols, other.rows)?;
        let mut out = Self::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Submatrix on the given row and column indices, in the given order.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Self::zeros(&self.field, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn determinant(&self) -> Result<Scalar> {
        check_dim(self.rows, self.cols)?;
        let mut a = self.row_vectors();
        let n = self.rows;
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return Ok(self.field.zero());
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det = det * &a[c][c];
            let inv = a[c][c].recip()?;
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let factor = -(&a[r][c] * &inv);
                let pivot_row = a[c].clone();
                vector::axpy(&mut a[r], &factor, &pivot_row);
            }
        }
        Ok(det)
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Matrix> {
        check_dim(self.rows, self.cols)?;
        let n = self.rows;
        let mut aug = Self::zeros(&self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let ech = rref(&aug);
        if ech.pivots.len() < n || ech.pivots[n - 1] >= n {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Self::zeros(&self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, ech.rows[i][n + j].clone());
            }
        }
        Ok(inv)
    }
}

/// Reduced row echelon form: nonzero rows only, with pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vector>,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination to reduced row echelon form.
pub fn rref(m: &Matrix) -> Echelon {
    let mut a = m.row_vectors();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].recip().expect("nonzero pivot");
        a[r] = vector::scale(&inv, &a[r]);
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = -&row[c];
                vector::axpy(row, &factor, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

/// Fraction-free row echelon form of a rational matrix.
///
/// Rows are first cleared of denominators; the forward pass keeps every
/// entry an integer minor, so each division below is exact.
fn bareiss(m: &Matrix) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let row: Vec<&BigRational> =
                m.row(i).iter().map(|x| x.as_rational().expect("rational entry")).collect();
            let lcm = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..m.cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..m.cols {
                let num = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "inexact Bareiss division");
                row[j] = num / &prev;
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankKernel {
    pub rank: usize,
    /// One vector per free column, in increasing column order; the free
    /// variable is 1, the other free variables 0.
    pub kernel: Vec<Vector>,
}

/// Exact rank and kernel basis.
pub fn rank_and_kernel(m: &Matrix) -> RankKernel {
    match m.field() {
        Field::Rational => rank_and_kernel_bareiss(m),
        Field::RationalFunction(_) => {
            let ech = rref(m);
            let kernel = kernel_from_rref(m.field(), m.cols, &ech);
            RankKernel { rank: ech.pivots.len(), kernel }
        }
    }
}

/// Rank only; skips kernel extraction.
pub fn rank(m: &Matrix) -> usize {
    match m.field() {
        Field::Rational => bareiss(m).1.len(),
        Field::RationalFunction(_) => rref(m).pivots.len(),
    }
}

fn free_columns(cols: usize, pivots: &[usize]) -> Vec<usize> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols).filter(|&c| !is_pivot[c]).collect()
}

fn kernel_from_rref(field: &Field, cols: usize, ech: &Echelon) -> Vec<Vector> {
    free_columns(cols, &ech.pivots)
        .into_iter()
        .map(|f| {
            let mut v = field.zero_vector(cols);
            v[f] = field.one();
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

fn rank_and_kernel_bareiss(m: &Matrix) -> RankKernel {
    let (rows, pivots) = bareiss(m);
    let kernel = free_columns(m.cols, &pivots)
        .into_iter()
        .map(|f| {
            let mut v = vec![BigRational::zero(); m.cols];
            v[f] = BigRational::one();
            // Back substitution, bottom pivot first.
            for (row, &p) in rows.iter().zip(&pivots).rev() {
                let mut acc = BigRational::zero();
                for (j, x) in row.iter().enumerate().skip(p + 1) {
                    if !x.is_zero() && !v[j].is_zero() {
                        acc += BigRational::from_integer(x.clone()) * &v[j];
                    }
                }
                v[p] = -acc / BigRational::from_integer(row[p].clone());
            }
            v.into_iter().map(Scalar::Rational).collect()
        })
        .collect();
    RankKernel { rank: pivots.len(), kernel }
}

/// Coefficients `c` with `Σ c_i basis_i = target`, or `None` when the target
/// is outside the span. With a dependent basis, non-pivot coefficients are 0.
pub fn solve_in_span(field: &Field, basis: &[Vector], target: &[Scalar]) -> Result<Option<Vector>> {
    let dim = target.len();
    for x in target {
        if x.field() != *field {
            return Err(Error::MixedFields(field.clone(), x.field()));
        }
    }
    let mut cols = basis.to_vec();
    cols.push(target.to_vec());
    let aug = Matrix::from_columns(field, dim, &cols)?;
    let ech = rref(&aug);
    let k = basis.len();
    if ech.pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coeffs = field.zero_vector(k);
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        coeffs[p] = row[k].clone();
    }
    Ok(Some(coeffs))
}

/// Indices of a maximal independent subset of `vectors`, chosen greedily in order.
pub fn independent_subset(field: &Field, dim: usize, vectors: &[Vector]) -> Result<Vec<usize>> {
    let m = Matrix::from_columns(field, dim, vectors)?;
    Ok(rref(&m).pivots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rational;
        Matrix::from_rows(&f, rows.iter().map(|r| r.iter().map(|&x| f.from_int(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn identity_has_full_rank() {
        let rk = rank_and_kernel(&Matrix::identity(&Field::Rational, 2));
        assert_eq!(rk.rank, 2);
        assert!(rk.kernel.is_empty());
    }

    #[test]
    fn single_row_kernel_over_function_field() {
        let f = Field::rational_function("a");
        let a = f.indeterminate().unwrap();
        let m = Matrix::from_rows(&f, vec![vec![f.one(), a.clone()]]).unwrap();
        let rk = rank_and_kernel(&m);
        assert_eq!(rk.rank, 1);
        assert_eq!(rk.kernel, vec![vec![-a, f.one()]]);
    }

    #[test]
    fn zero_matrix_kernel_is_standard_basis() {
        let m = Matrix::zeros(&Field::Rational, 3, 3);
        let rk = rank_and_kernel(&m);
        assert_eq!(rk.rank, 0);
        let f = Field::Rational;
        assert_eq!(rk.kernel, (0..3).map(|i| f.unit_vector(3, i)).collect::<Vec<_>>());
    }

    #[test]
    fn bareiss_matches_rref_parametrization() {
        let m = qm(&[&[2, 4, -2, 6], &[1, 2, 0, 1], &[3, 6, -2, 7]]);
        let fast = rank_and_kernel(&m);
        let ech = rref(&m);
        assert_eq!(fast.rank, ech.pivots.len());
        assert_eq!(fast.kernel, kernel_from_rref(&Field::Rational, 4, &ech));
        for v in &fast.kernel {
            assert!(vector::is_zero(&m.mul_vec(v).unwrap()));
        }
    }

    #[test]
    fn span_solving() {
        let f = Field::Rational;
        let e = |i| f.unit_vector(2, i);
        assert_eq!(solve_in_span(&f, &[e(0)], &e(1)).unwrap(), None);
        let t = vec![f.from_int(3), f.from_int(-2)];
        assert_eq!(solve_in_span(&f, &[e(0), e(1)], &t).unwrap(), Some(t.clone()));

        let fa = Field::rational_function("a");
        let a = fa.indeterminate().unwrap();
        let b = vec![fa.one(), a.clone()];
        let t = vec![fa.from_int(2), fa.from_int(2) * a];
        assert_eq!(solve_in_span(&fa, &[b], &t).unwrap(), Some(vec![fa.from_int(2)]));
    }

    #[test]
    fn determinant_and_inverse() {
        let m = qm(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant().unwrap(), Field::Rational.one());
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&Field::Rational, 2));
        assert!(matches!(qm(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::SingularMatrix)));
    }
}
