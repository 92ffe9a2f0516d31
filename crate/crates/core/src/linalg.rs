//! Exact linear algebra over an arbitrary field: reduced echelon form,
//! rank, kernel bases and canonical subspaces.
//!
//! Matrices are stored as sparse rows (sorted column/value pairs); the
//! coboundary matrices of an n-dimensional algebra have n^4 rows but only
//! a handful of entries per row, so dense storage is never materialized.

use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Error, PartialEq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("subspace is not contained in the ambient candidate")]
    NotContained,
    #[error("matrix is singular")]
    SingularMatrix,
}

/// Sparse row: (column, value) pairs sorted by column, values nonzero.
pub type SparseRow<K> = Vec<(usize, K)>;

/// A sparse-row matrix over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<K: Field> {
    rows: usize,
    cols: usize,
    data: Vec<SparseRow<K>>,
}

impl<K: Field> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, K::one())]).collect(),
        }
    }

    pub fn from_dense(rows: Vec<Vec<K>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let data = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "ragged matrix");
                r.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        Matrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    /// Build from pre-assembled sparse rows. Entries must be sorted by
    /// column; zero entries are filtered out.
    pub fn from_sparse_rows(rows: Vec<SparseRow<K>>, cols: usize) -> Self {
        let nrows = rows.len();
        let data = rows
            .into_iter()
            .map(|r| {
                debug_assert!(r.windows(2).all(|w| w[0].0 < w[1].0));
                r.into_iter()
                    .filter(|(c, v)| {
                        assert!(*c < cols, "column index out of bounds");
                        !v.is_zero()
                    })
                    .collect()
            })
            .collect();
        Matrix {
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> K {
        assert!(r < self.rows && c < self.cols, "entry access out of bounds");
        match self.data[r].binary_search_by_key(&c, |e| e.0) {
            Ok(i) => self.data[r][i].1.clone(),
            Err(_) => K::zero(),
        }
    }

    pub fn row(&self, r: usize) -> &SparseRow<K> {
        &self.data[r]
    }

    pub fn dense_row(&self, r: usize) -> Vec<K> {
        let mut out = vec![K::zero(); self.cols];
        for (c, v) in &self.data[r] {
            out[*c] = v.clone();
        }
        out
    }

    /// Vertical concatenation. Column counts must agree.
    pub fn stack(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, other.cols, "stack: column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[K]) -> Result<Vec<K>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok(self
            .data
            .iter()
            .map(|row| {
                row.iter().fold(K::zero(), |acc, (c, a)| {
                    acc + a.clone() * v[*c].clone()
                })
            })
            .collect())
    }

    /// The unique reduced row echelon form; the row space is preserved.
    pub fn rref(&self) -> Matrix<K> {
        let (done, _) = self.rref_rows();
        let mut data = done;
        // pad with zero rows so the shape matches the input
        data.resize(self.rows, Vec::new());
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// RREF rows without zero padding plus their pivot columns.
    fn rref_rows(&self) -> (Vec<SparseRow<K>>, Vec<usize>) {
        let mut work: Vec<SparseRow<K>> =
            self.data.iter().filter(|r| !r.is_empty()).cloned().collect();
        let mut done: Vec<SparseRow<K>> = Vec::new();

        loop {
            // pivot: minimal leading column, then fewest nonzeros
            let mut best: Option<usize> = None;
            for (i, r) in work.iter().enumerate() {
                match best {
                    None => best = Some(i),
                    Some(b) => {
                        let (bc, bl) = (work[b][0].0, work[b].len());
                        let (rc, rl) = (r[0].0, r.len());
                        if rc < bc || (rc == bc && rl < bl) {
                            best = Some(i);
                        }
                    }
                }
            }
            let Some(b) = best else { break };
            let mut pivot = work.swap_remove(b);
            let lead = pivot[0].1.clone();
            if !lead.is_one() {
                for e in &mut pivot {
                    e.1 = e.1.clone() / lead.clone();
                }
            }
            let pcol = pivot[0].0;
            let eliminate = |row: &mut SparseRow<K>| {
                if let Ok(i) = row.binary_search_by_key(&pcol, |e| e.0) {
                    let c = row[i].1.clone();
                    row_axpy(row, &c, &pivot);
                }
            };
            work.retain_mut(|r| {
                eliminate(r);
                !r.is_empty()
            });
            for r in &mut done {
                eliminate(r);
            }
            done.push(pivot);
        }
        done.sort_by_key(|r| r[0].0);
        let pivots = done.iter().map(|r| r[0].0).collect();
        (done, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref_rows().0.len()
    }

    /// Canonical basis of the right null space {v : M v = 0}.
    pub fn kernel_basis(&self) -> Subspace<K> {
        let (rows, pivots) = self.rref_rows();
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.cols];
            for p in &pivots {
                s[*p] = true;
            }
            s
        };
        let mut basis_rows = Vec::new();
        for f in 0..self.cols {
            if pivot_set[f] {
                continue;
            }
            let mut v: SparseRow<K> = Vec::new();
            for (i, p) in pivots.iter().enumerate() {
                if let Ok(j) = rows[i].binary_search_by_key(&f, |e| e.0) {
                    v.push((*p, -rows[i][j].1.clone()));
                }
            }
            v.push((f, K::one()));
            v.sort_by_key(|e| e.0);
            basis_rows.push(v);
        }
        Subspace::from_matrix(Matrix::from_sparse_rows(basis_rows, self.cols))
    }

    /// Inverse of a square matrix via Gauss-Jordan on [A | I].
    pub fn inverse(&self) -> Result<Matrix<K>, LinalgError> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let aug_rows: Vec<SparseRow<K>> = self
            .data
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.clone();
                row.push((n + i, K::one()));
                row
            })
            .collect();
        let aug = Matrix::from_sparse_rows(aug_rows, 2 * n);
        let (done, pivots) = aug.rref_rows();
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, p)| *p != i) {
            return Err(LinalgError::SingularMatrix);
        }
        let inv_rows = done
            .into_iter()
            .take(n)
            .map(|r| {
                r.into_iter()
                    .filter(|(c, _)| *c >= n)
                    .map(|(c, v)| (c - n, v))
                    .collect()
            })
            .collect();
        Ok(Matrix::from_sparse_rows(inv_rows, n))
    }
}

/// row := row - c * src, both sorted sparse rows.
fn row_axpy<K: Field>(row: &mut SparseRow<K>, c: &K, src: &SparseRow<K>) {
    let mut out: SparseRow<K> = Vec::with_capacity(row.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < src.len() {
        let take_row = j >= src.len() || (i < row.len() && row[i].0 < src[j].0);
        let take_src = i >= row.len() || (j < src.len() && src[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_src {
            out.push((src[j].0, -(c.clone() * src[j].1.clone())));
            j += 1;
        } else {
            let v = row[i].1.clone() - c.clone() * src[j].1.clone();
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    *row = out;
}

/// A linear subspace of K^ambient with a canonical (RREF, pivot-sorted)
/// row basis, so equal subspaces have identical representations.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<K: Field> {
    ambient: usize,
    basis: Vec<SparseRow<K>>,
}

impl<K: Field> Subspace<K> {
    /// Subspace spanned by the rows of `m`, canonicalized.
    pub fn from_matrix(m: Matrix<K>) -> Self {
        let (basis, _) = m.rref_rows();
        Subspace {
            ambient: m.ncols(),
            basis,
        }
    }

    pub fn from_spanning_rows(rows: Vec<Vec<K>>, ambient: usize) -> Self {
        let m = if rows.is_empty() {
            Matrix::zero(0, ambient)
        } else {
            let m = Matrix::from_dense(rows);
            assert_eq!(m.ncols(), ambient, "spanning rows have wrong length");
            m
        };
        Subspace::from_matrix(m)
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_matrix(Matrix::identity(ambient))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = Vec<K>> + '_ {
        self.basis.iter().map(|r| {
            let mut v = vec![K::zero(); self.ambient];
            for (c, x) in r {
                v[*c] = x.clone();
            }
            v
        })
    }

    pub fn basis_matrix(&self) -> Matrix<K> {
        Matrix::from_sparse_rows(self.basis.clone(), self.ambient)
    }

    /// True iff `v` lies in the span of the basis.
    pub fn contains(&self, v: &[K]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        let mut rem: SparseRow<K> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (c, x.clone()))
            .collect();
        for row in &self.basis {
            let pcol = row[0].0;
            if let Ok(i) = rem.binary_search_by_key(&pcol, |e| e.0) {
                let c = rem[i].1.clone();
                row_axpy(&mut rem, &c, row);
            }
        }
        Ok(rem.is_empty())
    }

    /// dim(big) - dim(small), after checking small is contained in self.
    pub fn quotient_dim(&self, small: &Subspace<K>) -> Result<usize, LinalgError> {
        if small.ambient != self.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                got: small.ambient,
            });
        }
        for v in small.basis_rows() {
            if !self.contains(&v)? {
                return Err(LinalgError::NotContained);
            }
        }
        Ok(self.dim() - small.dim())
    }

    pub fn sum(&self, other: &Subspace<K>) -> Subspace<K> {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_matrix(self.basis_matrix().stack(&other.basis_matrix()))
    }

    pub fn is_subspace_of(&self, other: &Subspace<K>) -> Result<bool, LinalgError> {
        for v in self.basis_rows() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{qi, Q};

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_dense(
            rows.iter()
                .map(|r| r.iter().map(|x| qi(*x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_identity_fixed() {
        let id = m(&[&[1, 0], &[0, 1]]);
        assert_eq!(id.rref(), id);
    }

    #[test]
    fn rref_rank_one() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.rref(), m(&[&[1, 2], &[0, 0]]));
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn rref_zero_matrix() {
        let z: Matrix<Q> = Matrix::zero(3, 5);
        assert_eq!(z.rref(), z);
    }

    #[test]
    fn kernel_of_zero_is_full() {
        let z: Matrix<Q> = Matrix::zero(4, 4);
        assert_eq!(z.kernel_basis(), Subspace::full(4));
    }

    #[test]
    fn kernel_rank_one() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let k = a.kernel_basis();
        assert_eq!(k.dim(), 1);
        // canonical rep of span{(-2,1)}
        assert!(k.contains(&[qi(-2), qi(1)]).unwrap());
        assert!(!k.contains(&[qi(1), qi(0)]).unwrap());
    }

    #[test]
    fn quotient_dims() {
        let big = Subspace::<Q>::full(5);
        assert_eq!(big.quotient_dim(&Subspace::zero(5)).unwrap(), 5);
        assert_eq!(big.quotient_dim(&big.clone()).unwrap(), 0);
        let small = Subspace::from_spanning_rows(vec![vec![qi(0), qi(1)]], 2);
        let other = Subspace::from_spanning_rows(vec![vec![qi(1), qi(0)]], 2);
        assert_eq!(
            other.quotient_dim(&small),
            Err(LinalgError::NotContained)
        );
    }

    #[test]
    fn contains_dimension_mismatch() {
        let s = Subspace::<Q>::full(3);
        assert!(matches!(
            s.contains(&[qi(1)]),
            Err(LinalgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        let e0 = a.mul_vec(&inv.dense_row(0)).unwrap();
        // rows of inv are not columns; check A * A^{-1} = I columnwise instead
        let _ = e0;
        for j in 0..2 {
            let col: Vec<Q> = (0..2).map(|i| inv.get(i, j)).collect();
            let img = a.mul_vec(&col).unwrap();
            for i in 0..2 {
                assert_eq!(img[i], if i == j { qi(1) } else { qi(0) });
            }
        }
        let sing = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(sing.inverse(), Err(LinalgError::SingularMatrix));
    }

    #[test]
    fn canonical_form_spanning_sets() {
        let s1 = Subspace::from_spanning_rows(
            vec![vec![qi(1), qi(1), qi(0)], vec![qi(0), qi(2), qi(2)]],
            3,
        );
        let s2 = Subspace::from_spanning_rows(
            vec![vec![qi(1), qi(3), qi(2)], vec![qi(2), qi(2), qi(0)]],
            3,
        );
        assert_eq!(s1, s2);
    }
}
