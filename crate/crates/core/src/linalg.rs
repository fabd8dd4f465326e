//! Exact linear algebra over a [`FieldSpec`]: row reduction, canonical
//! subspaces, kernels and linear solves.

use crate::field::{FieldSpec, Scalar};

pub type Vector = Vec<Scalar>;

pub fn zero_vec(field: &FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vec(field: &FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(s: &Scalar, a: &[Scalar]) -> Vector {
    a.iter().map(|x| s * x).collect()
}

/// `acc += s * v`
pub fn axpy(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(s * x);
        }
    }
}

/// A dense matrix stored row-major; `rows` is the target dimension when the
/// matrix represents a linear map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![zero_vec(&field, cols); rows],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.data[i][i] = field.one();
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, cols: &[Vector]) -> Self {
        let mut m = Matrix::zero(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..rows {
                m.data[i][j] = c[i].clone();
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vector {
        self.data.iter().map(|r| r[j].clone()).collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        debug_assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                let mut acc = self.field.zero();
                for (a, b) in row.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `self * other`
    pub fn mul(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.cols, other.rows);
        let cols: Vec<Vector> = (0..other.cols)
            .map(|j| self.apply(&other.column(j)))
            .collect();
        Matrix::from_columns(self.field, self.rows, &cols)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_columns(self.field, self.cols, &self.data)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| sub_vec(a, b))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        Subspace::span(self.field, self.cols, self.data.iter().cloned()).dim()
    }

    /// Basis of `{ v : self * v = 0 }`.
    pub fn kernel(&self) -> Vec<Vector> {
        let s = Subspace::span(self.field, self.cols, self.data.iter().cloned());
        let free = s.free_columns();
        free.iter()
            .map(|&f| {
                let mut v = unit_vec(&self.field, self.cols, f);
                for (row, &p) in s.rows.iter().zip(&s.pivots) {
                    v[p] = -&row[f];
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let (x, null) = solve(self, &Matrix::identity(self.field, n))?;
        null.is_empty().then_some(x)
    }
}

/// Solves `a * x = b` for `x`. Returns one particular solution together with
/// a basis of the homogeneous solutions (each column of `x` may be shifted by
/// any combination of them), or `None` when inconsistent.
pub fn solve(a: &Matrix, b: &Matrix) -> Option<(Matrix, Vec<Vector>)> {
    debug_assert_eq!(a.rows, b.rows);
    let field = a.field;
    let mut aug: Vec<Vector> = a
        .data
        .iter()
        .zip(&b.data)
        .map(|(ra, rb)| ra.iter().chain(rb.iter()).cloned().collect())
        .collect();
    let pivots = rref_in_place(&mut aug, a.cols);
    // inconsistent rows: zero on the coefficient part, nonzero on the rhs
    for row in aug.iter().skip(pivots.len()) {
        if !is_zero_vec(&row[a.cols..]) {
            return None;
        }
    }
    let mut x = Matrix::zero(field, a.cols, b.cols);
    for (r, &p) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            x.data[p][j] = aug[r][a.cols + j].clone();
        }
    }
    Some((x, a.kernel()))
}

/// Reduces `rows` to reduced row echelon form looking only at the first
/// `ncols` columns for pivots; returns the pivot columns. Zero rows end up
/// at the bottom.
fn rref_in_place(rows: &mut [Vector], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        rows[r] = rows[r].iter().map(|x| &inv * x).collect();
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = -&row[c];
                axpy(row, &f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A subspace of `F^n` held in reduced row echelon form, so equality of
/// subspaces is equality of representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    pub field: FieldSpec,
    pub ambient: usize,
    pub rows: Vec<Vector>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Subspace {
            field,
            ambient: n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, n: usize) -> Self {
        Subspace::span(field, n, (0..n).map(|i| unit_vec(&field, n, i)))
    }

    pub fn span(field: FieldSpec, n: usize, vecs: impl IntoIterator<Item = Vector>) -> Self {
        let mut rows: Vec<Vector> = vecs.into_iter().filter(|v| !is_zero_vec(v)).collect();
        let pivots = rref_in_place(&mut rows, n);
        rows.truncate(pivots.len());
        Subspace {
            field,
            ambient: n,
            rows,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    /// Remainder of `v` modulo the subspace: zero in every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let f = -&out[p];
                axpy(&mut out, &f, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn le(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(
            self.field,
            self.ambient,
            self.rows.iter().chain(other.rows.iter()).cloned(),
        )
    }

    pub fn with(&self, vecs: impl IntoIterator<Item = Vector>) -> Subspace {
        Subspace::span(
            self.field,
            self.ambient,
            self.rows.iter().cloned().chain(vecs),
        )
    }

    /// Coordinates not used as pivots; the unit vectors on these columns
    /// span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vector {
        v.iter().map(|&x| FieldSpec::Rationals.from_i64(x)).collect()
    }

    #[test]
    fn span_is_canonical() {
        let f = FieldSpec::Rationals;
        let a = Subspace::span(f, 3, vec![q(&[1, 2, 3]), q(&[2, 4, 7])]);
        let b = Subspace::span(f, 3, vec![q(&[0, 0, 1]), q(&[3, 6, 9]), q(&[1, 2, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&q(&[1, 2, 0])));
        assert!(!a.contains(&q(&[0, 1, 0])));
        assert_eq!(a.free_columns(), vec![1]);
    }

    #[test]
    fn kernel_and_solve() {
        let f = FieldSpec::Rationals;
        let m = Matrix {
            field: f,
            rows: 2,
            cols: 3,
            data: vec![q(&[1, 1, 0]), q(&[0, 1, 1])],
        };
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(is_zero_vec(&m.apply(&k[0])));
        let b = Matrix::from_columns(f, 2, &[q(&[2, 3])]);
        let (x, null) = solve(&m, &b).unwrap();
        assert_eq!(m.apply(&x.column(0)), q(&[2, 3]));
        assert_eq!(null.len(), 1);
        let inc = Matrix {
            field: f,
            rows: 2,
            cols: 1,
            data: vec![q(&[1]), q(&[1])],
        };
        assert!(solve(&inc, &Matrix::from_columns(f, 2, &[q(&[1, 2])])).is_none());
    }

    #[test]
    fn inverse_over_f2() {
        let f = FieldSpec::Prime(2);
        let m = Matrix {
            field: f,
            rows: 2,
            cols: 2,
            data: vec![
                vec![f.one(), f.one()],
                vec![f.zero(), f.one()],
            ],
        };
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f, 2));
        let sing = Matrix {
            field: f,
            rows: 2,
            cols: 2,
            data: vec![vec![f.one(), f.one()], vec![f.one(), f.one()]],
        };
        assert!(sing.inverse().is_none());
    }
}
