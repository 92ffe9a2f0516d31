//! Structure-constant algebras: bracket evaluation, the Leibniz identity,
//! annihilators, the lower central series, filiform predicates, basis
//! changes and the associated graded algebra.
//!
//! Basis vectors are indexed 0..n-1 internally; constructors accept the
//! 1-based indices used in multiplication tables.

use thiserror::Error;

use crate::field::{Field, Q};
use crate::linalg::{LinalgError, Matrix, Subspace};

#[derive(Debug, Error, PartialEq)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("basis change matrix is singular")]
    SingularMatrix,
    #[error("algebra is not filiform")]
    NotFiliform,
    #[error("bracket does not respect the filtration degrees")]
    NotFiltered,
}

/// A finite-dimensional algebra given by its structure constants
/// c^k_{ij}: [x_i, x_j] = sum_k c^k_{ij} x_k.
#[derive(Debug, Clone, PartialEq)]
pub struct Algebra<K: Field = Q> {
    dim: usize,
    sc: Vec<K>, // dense tensor, index ((i * n) + j) * n + k
    label: Option<String>,
}

impl<K: Field> Algebra<K> {
    pub fn zero(dim: usize) -> Self {
        Algebra {
            dim,
            sc: vec![K::zero(); dim * dim * dim],
            label: None,
        }
    }

    /// Build from 1-based table entries ((i, j, k), c): [x_i, x_j] += c x_k.
    pub fn from_table(dim: usize, entries: &[((usize, usize, usize), K)]) -> Self {
        let mut a: Algebra<K> = Algebra::zero(dim);
        for ((i, j, k), c) in entries {
            assert!(
                (1..=dim).contains(i) && (1..=dim).contains(j) && (1..=dim).contains(k),
                "table index out of range"
            );
            let cur = a.c(i - 1, j - 1, k - 1).clone() + c.clone();
            a.set_c(i - 1, j - 1, k - 1, cur);
        }
        a
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        ((i * self.dim) + j) * self.dim + k
    }

    /// 0-based structure constant c^k_{ij}.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &K {
        &self.sc[self.idx(i, j, k)]
    }

    pub fn set_c(&mut self, i: usize, j: usize, k: usize, v: K) {
        let idx = self.idx(i, j, k);
        self.sc[idx] = v;
    }

    pub fn sc_tensor(&self) -> &[K] {
        &self.sc
    }

    /// Structure constants equal entrywise (labels ignored).
    pub fn same_table(&self, other: &Algebra<K>) -> bool {
        self.dim == other.dim && self.sc == other.sc
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> Algebra<L> {
        Algebra {
            dim: self.dim,
            sc: self.sc.iter().map(f).collect(),
            label: self.label.clone(),
        }
    }

    /// [x_i, x_j] as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<K> {
        (0..self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// Bilinear bracket of two coordinate vectors.
    pub fn bracket(&self, u: &[K], v: &[K]) -> Result<Vec<K>, AlgebraError> {
        for w in [u, v] {
            if w.len() != self.dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: self.dim,
                    got: w.len(),
                });
            }
        }
        let mut out = vec![K::zero(); self.dim];
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let s = u[i].clone() * v[j].clone();
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] = out[k].clone() + s.clone() * c.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// All basis triples (0-based) violating the Leibniz identity
    /// [x_i,[x_j,x_k]] = [[x_i,x_j],x_k] - [[x_i,x_k],x_j], with the
    /// nonzero defect vector. Trilinearity makes basis triples sufficient.
    pub fn leibniz_defect(&self) -> Vec<(usize, usize, usize, Vec<K>)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let inner = self.bracket_basis(j, k);
                    let ei: Vec<K> = unit(n, i);
                    let lhs = self.bracket(&ei, &inner).unwrap();
                    let ij = self.bracket_basis(i, j);
                    let ik = self.bracket_basis(i, k);
                    let r1 = self.bracket(&ij, &unit(n, k)).unwrap();
                    let r2 = self.bracket(&ik, &unit(n, j)).unwrap();
                    let defect: Vec<K> = (0..n)
                        .map(|s| lhs[s].clone() - r1[s].clone() + r2[s].clone())
                        .collect();
                    if defect.iter().any(|x| !x.is_zero()) {
                        out.push((i, j, k, defect));
                    }
                }
            }
        }
        out
    }

    pub fn is_leibniz(&self) -> bool {
        self.leibniz_defect().is_empty()
    }

    /// Bracket anticommutative on the nose (a Leibniz algebra that is Lie).
    pub fn is_anticommutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    self.c(i, j, k).clone() + self.c(j, i, k).clone() == K::zero()
                })
            })
        })
    }

    /// {v : [x_i, v] = 0 for all i}, as the kernel of the stacked
    /// right-multiplication system.
    pub fn right_annihilator(&self) -> Subspace<K> {
        let n = self.dim;
        // rows indexed by (i, k), columns by j, entry c^k_{ij}
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            for k in 0..n {
                let row: Vec<(usize, K)> = (0..n)
                    .filter_map(|j| {
                        let c = self.c(i, j, k);
                        (!c.is_zero()).then(|| (j, c.clone()))
                    })
                    .collect();
                rows.push(row);
            }
        }
        Matrix::from_sparse_rows(rows, n).kernel_basis()
    }

    /// L^1 = L, L^{k+1} = [L^k, L], until stabilization.
    pub fn lower_central_series(&self) -> Vec<Subspace<K>> {
        let n = self.dim;
        let mut series = vec![Subspace::full(n)];
        loop {
            let prev = series.last().unwrap();
            let mut spanning = Vec::new();
            for b in prev.basis_rows() {
                for j in 0..n {
                    spanning.push(self.bracket(&b, &unit(n, j)).unwrap());
                }
            }
            let next = Subspace::from_spanning_rows(spanning, n);
            if &next == prev {
                break;
            }
            series.push(next);
            if series.last().unwrap().dim() == 0 {
                break;
            }
        }
        series
    }

    pub fn series_dims(&self) -> Vec<usize> {
        self.lower_central_series()
            .iter()
            .map(Subspace::dim)
            .collect()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().dim() == 0
    }

    /// First k with L^k = 0 (1-based), or None if the series stabilizes
    /// above zero.
    pub fn nilindex(&self) -> Option<usize> {
        let s = self.lower_central_series();
        if s.last().unwrap().dim() == 0 {
            Some(s.len())
        } else {
            None
        }
    }

    /// dim L^i = n - i for 2 <= i <= n. Dimensions below 2 are not
    /// filiform by convention.
    pub fn is_filiform(&self) -> bool {
        let n = self.dim;
        if n < 2 {
            return false;
        }
        let s = self.lower_central_series();
        // require dims (n, n-2, n-3, ..., 1, 0)
        if s.last().unwrap().dim() != 0 || s.len() != n {
            return false;
        }
        s.iter()
            .enumerate()
            .all(|(idx, sub)| sub.dim() == if idx == 0 { n } else { n - idx - 1 })
    }

    /// Transport the bracket through the invertible basis change g:
    /// new [x, y] = g([g^{-1} x, g^{-1} y]).
    pub fn apply_basis_change(&self, g: &Matrix<K>) -> Result<Algebra<K>, AlgebraError> {
        let n = self.dim;
        assert_eq!(g.nrows(), n);
        assert_eq!(g.ncols(), n);
        let ginv = g.inverse().map_err(|e| match e {
            LinalgError::SingularMatrix => AlgebraError::SingularMatrix,
            _ => AlgebraError::SingularMatrix,
        })?;
        // columns of g^{-1} are the images of the basis vectors
        let pre: Vec<Vec<K>> = (0..n)
            .map(|j| (0..n).map(|i| ginv.get(i, j)).collect())
            .collect();
        let mut out = Algebra::zero(n);
        for i in 0..n {
            for j in 0..n {
                let w = self.bracket(&pre[i], &pre[j])?;
                let img = apply_matrix(g, &w);
                for (k, v) in img.into_iter().enumerate() {
                    if !v.is_zero() {
                        out.set_c(i, j, k, v);
                    }
                }
            }
        }
        out.label = self.label.clone();
        Ok(out)
    }
}

/// Columns of `m` applied to vector `v` (m * v for dense v).
pub fn apply_matrix<K: Field>(m: &Matrix<K>, v: &[K]) -> Vec<K> {
    m.mul_vec(v).expect("matrix/vector dimension mismatch")
}

pub fn unit<K: Field>(n: usize, i: usize) -> Vec<K> {
    let mut v = vec![K::zero(); n];
    v[i] = K::one();
    v
}

impl<K: Field> Algebra<K> {
    /// Adapted basis for a filiform algebra: the first two input basis
    /// vectors reduced modulo L^2 (completed by RREF pivots if they are
    /// dependent), then pivot-minimal preimages of each L^i / L^{i+1}.
    fn adapted_basis(&self) -> Result<Vec<Vec<K>>, AlgebraError> {
        if !self.is_filiform() {
            return Err(AlgebraError::NotFiliform);
        }
        let n = self.dim;
        let series = self.lower_central_series();
        let l2 = &series[1];
        let mut basis: Vec<Vec<K>> = Vec::with_capacity(n);
        // degree-1 part: reduce e_0, e_1, ... modulo L^2, keep the first
        // two that stay independent
        let mut deg1 = Subspace::zero(n);
        for i in 0..n {
            let v = reduce_mod(&unit(n, i), l2);
            if v.iter().all(Zero::is_zero) {
                continue;
            }
            let cand = deg1.sum(&Subspace::from_spanning_rows(vec![v.clone()], n));
            if cand.dim() > deg1.dim() {
                deg1 = cand;
                basis.push(v);
            }
            if basis.len() == 2 {
                break;
            }
        }
        if basis.len() != 2 {
            return Err(AlgebraError::NotFiliform);
        }
        // one preimage per L^i / L^{i+1}, i >= 2
        for i in 1..series.len() - 1 {
            let big = &series[i];
            let small = &series[i + 1];
            let mut found = None;
            for v in big.basis_rows() {
                let r = reduce_mod(&v, small);
                if r.iter().any(|x| !x.is_zero()) {
                    found = Some(r);
                    break;
                }
            }
            basis.push(found.ok_or(AlgebraError::NotFiliform)?);
        }
        Ok(basis)
    }

    /// gr(L) = sum of L^i / L^{i+1} with the induced bracket, in the
    /// adapted basis.
    pub fn associated_graded(&self) -> Result<Algebra<K>, AlgebraError> {
        let n = self.dim;
        let basis = self.adapted_basis()?;
        let series = self.lower_central_series();
        // degree of adapted basis vector: y_1, y_2 have degree 1,
        // y_{d+1} has degree d for d >= 2
        let degree = |idx: usize| if idx < 2 { 1 } else { idx };
        let mut out = Algebra::zero(n);
        for a in 0..n {
            for b in 0..n {
                let w = self.bracket(&basis[a], &basis[b])?;
                if w.iter().all(Zero::is_zero) {
                    continue;
                }
                let d = degree(a) + degree(b);
                // L^d is series[d-1]; beyond the series L^d = 0, so a
                // nonzero bracket there violates the filtration
                if d > series.len() - 1 {
                    return Err(AlgebraError::NotFiltered);
                }
                // [L^p, L^q] <= L^{p+q} for Leibniz algebras
                if !series[d - 1].contains(&w).map_err(|_| AlgebraError::NotFiltered)? {
                    return Err(AlgebraError::NotFiltered);
                }
                let gen_idx = d; // basis[d] generates L_d = L^d / L^{d+1}, d >= 2
                if gen_idx >= n {
                    continue;
                }
                let coeff = component_along(&w, &basis[gen_idx], &series[d])?;
                if !coeff.is_zero() {
                    out.set_c(a, b, gen_idx, coeff);
                }
            }
        }
        out.label = self.label.clone();
        Ok(out)
    }

    /// Identity-witness natural gradedness: gr(L), transported from the
    /// adapted basis back to the input coordinates, has the same structure
    /// constants as L. Sufficient for the catalog algebras; not a full
    /// isomorphism search.
    pub fn is_naturally_graded_witness(&self) -> Result<bool, AlgebraError> {
        let basis = self.adapted_basis()?;
        let gr = self.associated_graded()?;
        let n = self.dim;
        // columns of b are the adapted basis vectors in input coordinates
        let b = Matrix::from_dense(
            (0..n)
                .map(|r| (0..n).map(|c| basis[c][r].clone()).collect())
                .collect(),
        );
        Ok(gr.apply_basis_change(&b)?.same_table(self))
    }
}

/// Reduce v modulo a subspace in RREF: eliminate the pivot coordinates.
fn reduce_mod<K: Field>(v: &[K], s: &Subspace<K>) -> Vec<K> {
    let mut out = v.to_vec();
    for row in s.basis_rows() {
        let pivot = row.iter().position(|x| !x.is_zero());
        if let Some(p) = pivot {
            let c = out[p].clone() / row[p].clone();
            if c.is_zero() {
                continue;
            }
            for i in 0..out.len() {
                out[i] = out[i].clone() - c.clone() * row[i].clone();
            }
        }
    }
    out
}

/// Coefficient c with w = c * gen (mod rest), assuming w in span(gen) + rest.
fn component_along<K: Field>(
    w: &[K],
    gen: &[K],
    rest: &Subspace<K>,
) -> Result<K, AlgebraError> {
    let wr = reduce_mod(w, rest);
    let gr = reduce_mod(gen, rest);
    let p = gr
        .iter()
        .position(|x| !x.is_zero())
        .ok_or(AlgebraError::NotFiltered)?;
    let c = wr[p].clone() / gr[p].clone();
    // consistency: wr must be exactly c * gr
    for i in 0..wr.len() {
        if wr[i].clone() - c.clone() * gr[i].clone() != K::zero() {
            return Err(AlgebraError::NotFiltered);
        }
    }
    Ok(c)
}

use num_traits::Zero;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, FamilySpec};
    use crate::field::qi;

    fn f1(n: usize) -> Algebra {
        build(&FamilySpec::plain("F1graded", n)).unwrap()
    }

    #[test]
    fn bracket_f14() {
        let a = f1(4);
        let x1 = unit(4, 0);
        let x2 = unit(4, 1);
        assert_eq!(a.bracket(&x2, &x1).unwrap(), unit::<Q>(4, 2));
        assert_eq!(a.bracket(&x1, &x2).unwrap(), vec![qi(0); 4]);
    }

    #[test]
    fn abelian_bracket_zero() {
        let a: Algebra = Algebra::zero(3);
        let u = vec![qi(1), qi(2), qi(3)];
        assert_eq!(a.bracket(&u, &u).unwrap(), vec![qi(0); 3]);
        assert!(a.is_leibniz());
        assert_eq!(a.right_annihilator().dim(), 3);
        assert_eq!(a.series_dims(), vec![3, 0]);
    }

    #[test]
    fn one_dim_square_is_not_leibniz() {
        let a: Algebra = Algebra::from_table(1, &[((1, 1, 1), qi(1))]);
        let defects = a.leibniz_defect();
        assert_eq!(defects.len(), 1);
        let (i, j, k, d) = &defects[0];
        assert_eq!((*i, *j, *k), (0, 0, 0));
        assert_eq!(d, &vec![qi(1)]);
    }

    #[test]
    fn right_annihilator_f14() {
        let a = f1(4);
        let ann = a.right_annihilator();
        assert_eq!(ann.dim(), 3);
        for i in 1..4 {
            assert!(ann.contains(&unit(4, i)).unwrap());
        }
        assert!(!ann.contains(&unit(4, 0)).unwrap());
    }

    #[test]
    fn series_dims_catalog() {
        let nf5 = build(&FamilySpec::plain("NF", 5)).unwrap();
        assert_eq!(nf5.series_dims(), vec![5, 4, 3, 2, 1, 0]);
        assert_eq!(nf5.nilindex(), Some(6));
        let f15 = f1(5);
        assert_eq!(f15.series_dims(), vec![5, 3, 2, 1, 0]);
    }

    #[test]
    fn filiform_predicates() {
        assert!(f1(5).is_filiform());
        assert!(!build(&FamilySpec::plain("NF", 5)).unwrap().is_filiform());
        assert!(!Algebra::<Q>::zero(4).is_filiform());
        assert!(!Algebra::<Q>::zero(1).is_filiform());
    }

    #[test]
    fn basis_change_identity_and_round_trip() {
        let a = f1(4);
        let id = Matrix::identity(4);
        assert!(a.apply_basis_change(&id).unwrap().same_table(&a));

        let g = Matrix::from_dense(vec![
            vec![qi(1), qi(2), qi(0), qi(0)],
            vec![qi(0), qi(1), qi(0), qi(3)],
            vec![qi(0), qi(0), qi(1), qi(0)],
            vec![qi(1), qi(0), qi(0), qi(1)],
        ]);
        let ginv = g.inverse().unwrap();
        let b = a.apply_basis_change(&g).unwrap();
        assert!(b.apply_basis_change(&ginv).unwrap().same_table(&a));
        assert!(b.is_leibniz());
    }

    #[test]
    fn singular_basis_change_rejected() {
        let a = f1(3);
        let g: Matrix<Q> = Matrix::zero(3, 3);
        assert_eq!(
            a.apply_basis_change(&g).unwrap_err(),
            AlgebraError::SingularMatrix
        );
    }

    #[test]
    fn graded_fixed_points() {
        for spec in [
            FamilySpec::plain("F1graded", 5),
            FamilySpec::plain("F2graded", 5),
            FamilySpec::with_params("F3graded", 6, &[("alpha", qi(1))]),
        ] {
            let a = build(&spec).unwrap();
            assert!(a.is_naturally_graded_witness().unwrap(), "{:?}", spec);
        }
    }

    #[test]
    fn graded_kills_top_term() {
        // F1 family with theta = 1, n = 4: the theta x_n term dies in gr
        let a = build(&FamilySpec::with_params("F1", 4, &[("theta", qi(1))])).unwrap();
        let gr = a.associated_graded().unwrap();
        assert!(gr.same_table(&f1(4)));
        assert!(!a.is_naturally_graded_witness().unwrap());

        // F1 with alpha4 = 1, n = 5: degree-raising term is not graded
        let b = build(&FamilySpec::with_params("F1", 5, &[("alpha4", qi(1))])).unwrap();
        assert!(!b.is_naturally_graded_witness().unwrap());
    }

    #[test]
    fn graded_requires_filiform() {
        let abelian: Algebra = Algebra::zero(4);
        assert_eq!(
            abelian.is_naturally_graded_witness().unwrap_err(),
            AlgebraError::NotFiliform
        );
    }

    #[test]
    fn annihilator_closure() {
        let a = build(&FamilySpec::plain("F2graded", 5)).unwrap();
        let ann = a.right_annihilator();
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                let sq = a.bracket(&unit(n, i), &unit(n, i)).unwrap();
                assert!(ann.contains(&sq).unwrap());
                let mut sym = a.bracket(&unit(n, i), &unit(n, j)).unwrap();
                let ji = a.bracket(&unit(n, j), &unit(n, i)).unwrap();
                for k in 0..n {
                    sym[k] = sym[k].clone() + ji[k].clone();
                }
                assert!(ann.contains(&sym).unwrap());
            }
        }
    }
}
