//! The Loday cochain complex for the adjoint module: the general
//! coboundary operator, derivations, 2-cocycles, 2-coboundaries, second
//! cohomology dimensions and the named cochains of the three filiform
//! families.
//!
//! Cochain coordinates are flattened lexicographically in
//! (i_1, ..., i_m, k); this ordering is shared with the JSON surface.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{unit, Algebra};
use crate::field::Q;
use crate::linalg::{Matrix, SparseRow, Subspace};

#[derive(Debug, Error, PartialEq)]
pub enum CohomologyError {
    #[error("algebra does not satisfy the Leibniz identity")]
    NotLeibniz,
    #[error("algebra bracket is not anticommutative")]
    NotLie,
    #[error("coboundaries are not contained in cocycles")]
    NotAComplex,
    #[error("unknown cochain label {0}")]
    UnknownLabel(String),
    #[error("label index out of range for this family and dimension: {0}")]
    IndexOutOfFamilyRange(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// A degree-m multilinear map L^{tensor m} -> L stored as the coefficient
/// tensor t^k_{i_1..i_m}.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain {
    degree: usize,
    dim: usize,
    coeffs: Vec<Q>, // length dim^(degree+1)
}

impl Cochain {
    pub fn zero(degree: usize, dim: usize) -> Self {
        assert!(degree >= 1);
        Cochain {
            degree,
            dim,
            coeffs: vec![Q::zero(); dim.pow(degree as u32 + 1)],
        }
    }

    /// Build from 1-based entries ((args..., k), c): f(x_{args}) += c x_k.
    pub fn from_entries(degree: usize, dim: usize, entries: &[(&[usize], usize, Q)]) -> Self {
        let mut f = Cochain::zero(degree, dim);
        for (args, k, c) in entries {
            assert_eq!(args.len(), degree);
            let args0: Vec<usize> = args.iter().map(|a| a - 1).collect();
            let idx = f.index(&args0, k - 1);
            f.coeffs[idx] = f.coeffs[idx].clone() + c.clone();
        }
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, args: &[usize], k: usize) -> usize {
        let mut idx = 0;
        for a in args {
            debug_assert!(*a < self.dim);
            idx = idx * self.dim + a;
        }
        idx * self.dim + k
    }

    /// 0-based coefficient t^k_{args}.
    pub fn coeff(&self, args: &[usize], k: usize) -> &Q {
        &self.coeffs[self.index(args, k)]
    }

    pub fn set_coeff(&mut self, args: &[usize], k: usize, v: Q) {
        let idx = self.index(args, k);
        self.coeffs[idx] = v;
    }

    /// f(x_{args}) as a coordinate vector, 0-based argument indices.
    pub fn value(&self, args: &[usize]) -> Vec<Q> {
        (0..self.dim).map(|k| self.coeff(args, k).clone()).collect()
    }

    /// Multilinear evaluation on coordinate vectors.
    pub fn eval(&self, vectors: &[&[Q]]) -> Vec<Q> {
        assert_eq!(vectors.len(), self.degree);
        let n = self.dim;
        let mut out = vec![Q::zero(); n];
        let mut args = vec![0usize; self.degree];
        loop {
            let scale = args
                .iter()
                .zip(vectors)
                .fold(Q::one(), |acc, (a, v)| acc * v[*a].clone());
            if !scale.is_zero() {
                for k in 0..n {
                    let c = self.coeff(&args, k);
                    if !c.is_zero() {
                        out[k] = out[k].clone() + scale.clone() * c.clone();
                    }
                }
            }
            // advance the multi-index
            let mut pos = self.degree;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                args[pos] += 1;
                if args[pos] < n {
                    break;
                }
                args[pos] = 0;
            }
        }
    }

    /// Flattened coordinate vector, lexicographic in (i_1, ..., i_m, k).
    pub fn flatten(&self) -> Vec<Q> {
        self.coeffs.clone()
    }

    pub fn from_flat(degree: usize, dim: usize, coeffs: Vec<Q>) -> Result<Self, CohomologyError> {
        let expected = dim.pow(degree as u32 + 1);
        if coeffs.len() != expected {
            return Err(CohomologyError::DimensionMismatch {
                expected,
                got: coeffs.len(),
            });
        }
        Ok(Cochain {
            degree,
            dim,
            coeffs,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Q) -> Cochain {
        Cochain {
            degree: self.degree,
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.dim, other.dim);
        Cochain {
            degree: self.degree,
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Cochain {
        self.scale(&-Q::one())
    }
}

/// The general Loday coboundary: for f of degree m,
/// (d^m f)(x_1, ..., x_{m+1}) =
///   [x_1, f(x_2, ..., x_{m+1})]
///   + sum_{i=2}^{m+1} (-1)^i [f(x_1, ..., ^x_i, ..., x_{m+1}), x_i]
///   + sum_{i<j} (-1)^{j+1} f(x_1, ..., [x_i, x_j] at slot i, ..., ^x_j, ...).
pub fn coboundary(a: &Algebra, f: &Cochain) -> Cochain {
    let n = a.dim();
    assert_eq!(f.dim(), n, "cochain/algebra dimension mismatch");
    let m = f.degree();
    let mut out = Cochain::zero(m + 1, n);
    let mut args = vec![0usize; m + 1];
    'outer: loop {
        let mut val = vec![Q::zero(); n];
        // [x_1, f(x_2, ..)]
        let tail: Vec<usize> = args[1..].to_vec();
        let fv = f.value(&tail);
        let br = a.bracket(&unit(n, args[0]), &fv).unwrap();
        add_assign(&mut val, &br, &Q::one());
        // (-1)^i [f(.. without i ..), x_i]
        for i in 1..=m {
            let rest: Vec<usize> = args
                .iter()
                .enumerate()
                .filter(|(p, _)| *p != i)
                .map(|(_, v)| *v)
                .collect();
            let fv = f.value(&rest);
            let br = a.bracket(&fv, &unit(n, args[i])).unwrap();
            let sign = if (i + 1) % 2 == 0 { Q::one() } else { -Q::one() };
            add_assign(&mut val, &br, &sign);
        }
        // (-1)^{j+1} f(..., [x_i, x_j], ..., ^x_j, ...)
        for i in 0..m {
            for j in (i + 1)..=m {
                let sign = if (j + 2) % 2 == 0 { Q::one() } else { -Q::one() };
                let inner = a.bracket_basis(args[i], args[j]);
                for (l, c) in inner.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut rest: Vec<usize> = Vec::with_capacity(m);
                    for (p, v) in args.iter().enumerate() {
                        if p == j {
                            continue;
                        }
                        rest.push(if p == i { l } else { *v });
                    }
                    let fv = f.value(&rest);
                    add_assign(&mut val, &fv, &(sign.clone() * c.clone()));
                }
            }
        }
        for (k, v) in val.into_iter().enumerate() {
            if !v.is_zero() {
                out.set_coeff(&args, k, v);
            }
        }
        // advance
        let mut pos = m + 1;
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            args[pos] += 1;
            if args[pos] < n {
                break;
            }
            args[pos] = 0;
        }
    }
    out
}

fn add_assign(acc: &mut [Q], v: &[Q], scale: &Q) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = a.clone() + scale.clone() * x.clone();
        }
    }
}

/// Sparse matrix of d^1 : C^1 -> C^2. Rows are indexed by ((a, b), s)
/// lexicographically, columns by (u, t): f(x_u) = sum_t f^t_u x_t.
fn d1_matrix(a: &Algebra) -> Matrix<Q> {
    let n = a.dim();
    let col = |u: usize, t: usize| u * n + t;
    let mut rows: Vec<SparseRow<Q>> = Vec::with_capacity(n * n * n);
    for xa in 0..n {
        for xb in 0..n {
            for s in 0..n {
                let mut row: Vec<(usize, Q)> = Vec::new();
                // (d^1 f)(a, b) = [x_a, f(b)] + [f(a), x_b] - f([x_a, x_b])
                for t in 0..n {
                    let c = a.c(xa, t, s);
                    if !c.is_zero() {
                        row.push((col(xb, t), c.clone()));
                    }
                    let c = a.c(t, xb, s);
                    if !c.is_zero() {
                        row.push((col(xa, t), c.clone()));
                    }
                }
                for l in 0..n {
                    let c = a.c(xa, xb, l);
                    if !c.is_zero() {
                        row.push((col(l, s), -c.clone()));
                    }
                }
                rows.push(collect_row(row));
            }
        }
    }
    Matrix::from_sparse_rows(rows, n * n)
}

/// Sparse matrix of d^2 : C^2 -> C^3. Rows indexed by ((a, b, c), s),
/// columns by (u, v, t) in the shared lexicographic flattening.
fn d2_matrix(alg: &Algebra) -> Matrix<Q> {
    let n = alg.dim();
    let col = |u: usize, v: usize, t: usize| (u * n + v) * n + t;
    let mut rows: Vec<SparseRow<Q>> = Vec::with_capacity(n * n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for s in 0..n {
                    let mut row: Vec<(usize, Q)> = Vec::new();
                    // [x_a, phi(b, c)] - [phi(a, b), x_c] + [phi(a, c), x_b]
                    for t in 0..n {
                        let k = alg.c(a, t, s);
                        if !k.is_zero() {
                            row.push((col(b, c, t), k.clone()));
                        }
                        let k = alg.c(t, c, s);
                        if !k.is_zero() {
                            row.push((col(a, b, t), -k.clone()));
                        }
                        let k = alg.c(t, b, s);
                        if !k.is_zero() {
                            row.push((col(a, c, t), k.clone()));
                        }
                    }
                    // + phi(a, [b, c]) - phi([a, b], c) + phi([a, c], b)
                    for l in 0..n {
                        let k = alg.c(b, c, l);
                        if !k.is_zero() {
                            row.push((col(a, l, s), k.clone()));
                        }
                        let k = alg.c(a, b, l);
                        if !k.is_zero() {
                            row.push((col(l, c, s), -k.clone()));
                        }
                        let k = alg.c(a, c, l);
                        if !k.is_zero() {
                            row.push((col(l, b, s), k.clone()));
                        }
                    }
                    rows.push(collect_row(row));
                }
            }
        }
    }
    Matrix::from_sparse_rows(rows, n * n * n)
}

/// Sort by column and merge duplicate entries.
fn collect_row(mut row: Vec<(usize, Q)>) -> SparseRow<Q> {
    row.sort_by_key(|e| e.0);
    let mut out: SparseRow<Q> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv = lv.clone() + v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// Derivations: ker(d^1), as a subspace of the flattened n^2-space.
pub fn derivation_space(a: &Algebra) -> Subspace<Q> {
    d1_matrix(a).kernel_basis()
}

fn require_leibniz(a: &Algebra) -> Result<(), CohomologyError> {
    if a.is_leibniz() {
        Ok(())
    } else {
        Err(CohomologyError::NotLeibniz)
    }
}

/// 2-cocycles ZL^2 = ker(d^2), a subspace of the flattened n^3-space.
pub fn zl2(a: &Algebra) -> Result<Subspace<Q>, CohomologyError> {
    require_leibniz(a)?;
    Ok(d2_matrix(a).kernel_basis())
}

/// 2-coboundaries BL^2 = im(d^1).
pub fn bl2(a: &Algebra) -> Result<Subspace<Q>, CohomologyError> {
    require_leibniz(a)?;
    let n = a.dim();
    let mut rows = Vec::with_capacity(n * n);
    for u in 0..n {
        for t in 0..n {
            let mut f = Cochain::zero(1, n);
            f.set_coeff(&[u], t, Q::one());
            rows.push(coboundary(a, &f).flatten());
        }
    }
    Ok(Subspace::from_spanning_rows(rows, n * n * n))
}

/// dim HL^2 = dim ZL^2 - dim BL^2, with the containment BL^2 in ZL^2
/// checked.
pub fn hl2_dim(a: &Algebra) -> Result<usize, CohomologyError> {
    let z = zl2(a)?;
    let b = bl2(a)?;
    z.quotient_dim(&b).map_err(|_| CohomologyError::NotAComplex)
}

/// The skew-symmetric cocycles Z^2 (Lie infinitesimal deformations) of an
/// anticommutative algebra.
pub fn skew_cocycles2(a: &Algebra) -> Result<Subspace<Q>, CohomologyError> {
    if !a.is_anticommutative() {
        return Err(CohomologyError::NotLie);
    }
    require_leibniz(a)?;
    let n = a.dim();
    let col = |u: usize, v: usize, t: usize| (u * n + v) * n + t;
    // extra rows phi^t_{uv} + phi^t_{vu} = 0 (u <= v)
    let mut rows: Vec<SparseRow<Q>> = Vec::new();
    for u in 0..n {
        for v in u..n {
            for t in 0..n {
                if u == v {
                    rows.push(vec![(col(u, u, t), Q::one())]);
                } else {
                    rows.push(vec![(col(u, v, t), Q::one()), (col(v, u, t), Q::one())]);
                }
            }
        }
    }
    let skew = Matrix::from_sparse_rows(rows, n * n * n);
    Ok(d2_matrix(a).stack(&skew).kernel_basis())
}

/// Which family's labeled cochains to construct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabeledFamily {
    /// F^1_n of the graded catalog (Thm-3.2-style labels).
    F1,
    /// F^2_n (Thm-3.12-style labels).
    F2,
    /// F^3_n(0) (the three non-skew complement cochains).
    F3Zero,
}

/// Symbolic cochain names used by the bases of ZL^2 and BL^2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CochainLabel {
    Phi(usize, usize),
    Psi(usize),
    Xi1,
    Xi2,
    Eta(usize, usize),
}

impl std::fmt::Display for CochainLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CochainLabel::Phi(j, k) => write!(f, "phi_{j},{k}"),
            CochainLabel::Psi(j) => write!(f, "psi_{j}"),
            CochainLabel::Xi1 => write!(f, "xi_1"),
            CochainLabel::Xi2 => write!(f, "xi_2"),
            CochainLabel::Eta(j, k) => write!(f, "eta_{j},{k}"),
        }
    }
}

fn range_err(label: &CochainLabel) -> CohomologyError {
    CohomologyError::IndexOutOfFamilyRange(label.to_string())
}

/// The explicit 2-cochain a label denotes on the given family at
/// dimension n. Indices are the conventional 1-based ones.
pub fn named_cochain(
    family: LabeledFamily,
    n: usize,
    label: &CochainLabel,
) -> Result<Cochain, CohomologyError> {
    match family {
        LabeledFamily::F1 => named_cochain_f1(n, label),
        LabeledFamily::F2 => named_cochain_f2(n, label),
        LabeledFamily::F3Zero => named_cochain_f3(n, label),
    }
}

fn named_cochain_f1(n: usize, label: &CochainLabel) -> Result<Cochain, CohomologyError> {
    let one = Q::one;
    match label {
        CochainLabel::Phi(j, 1) => {
            if !(2..=n - 1).contains(j) {
                return Err(range_err(label));
            }
            let mut entries: Vec<(&[usize], usize, Q)> = Vec::new();
            let head = [*j, 1];
            entries.push((&head, 1, one()));
            let tails: Vec<[usize; 2]> = (2..=n - 1).map(|i| [i, j + 1]).collect();
            for (idx, t) in tails.iter().enumerate() {
                entries.push((t, idx + 3, -one())); // -x_{i+1}
            }
            Ok(Cochain::from_entries(2, n, &entries))
        }
        CochainLabel::Phi(j, k) => {
            if !(1..=n).contains(j) || !(2..=n).contains(k) {
                return Err(range_err(label));
            }
            Ok(Cochain::from_entries(2, n, &[(&[*j, 1], *k, one())]))
        }
        CochainLabel::Psi(j) => {
            if !(2..=n).contains(j) {
                return Err(range_err(label));
            }
            let args: Vec<[usize; 2]> = (2..=n - j + 2).map(|i| [i, 2]).collect();
            let entries: Vec<(&[usize], usize, Q)> = args
                .iter()
                .enumerate()
                .map(|(idx, a)| (a.as_slice(), j + (idx + 2) - 2, one()))
                .collect();
            Ok(Cochain::from_entries(2, n, &entries))
        }
        CochainLabel::Xi1 => {
            let mut f = Cochain::zero(2, n);
            f.set_coeff(&[0, 1], 0, one()); // xi1(x1, x2) = x1
            for i in 3..=n {
                f.set_coeff(&[i - 1, 1], i - 1, Q::from_integer((i as i64 - 2).into()));
            }
            for i in 2..=n - 1 {
                f.set_coeff(&[i - 1, 2], i, -one()); // xi1(x_i, x3) = -x_{i+1}
            }
            Ok(f)
        }
        CochainLabel::Xi2 => Ok(Cochain::from_entries(2, n, &[(&[1, 2], n, one())])),
        CochainLabel::Eta(j, k) => {
            let phi = |j, k| named_cochain_f1(n, &CochainLabel::Phi(j, k));
            match (*j, *k) {
                (1, k) if (2..=n - 1).contains(&k) => phi(1, k + 1),
                (2, 1) => named_cochain_f1(n, &CochainLabel::Psi(3)),
                (j, 1) if (3..=n).contains(&j) => phi(j - 1, 1),
                (j, k) if (3..=n).contains(&j) && j <= k && k <= n => phi(j - 1, k),
                (j, k) if (3..=n).contains(&j) && 2 <= k && k < j => {
                    Ok(phi(j - 1, k)?.add(&phi(j, k + 1)?.neg()))
                }
                _ => Err(range_err(label)),
            }
        }
    }
}

fn named_cochain_f2(n: usize, label: &CochainLabel) -> Result<Cochain, CohomologyError> {
    let one = Q::one;
    match label {
        CochainLabel::Phi(j, 1) => {
            if !(1..=n - 2).contains(j) {
                return Err(range_err(label));
            }
            let mut f = Cochain::zero(2, n);
            f.set_coeff(&[j - 1, 0], 0, one()); // phi(x_j, x1) = x1
            for i in 1..=n - 2 {
                f.set_coeff(&[i - 1, *j], i, -one()); // phi(x_i, x_{j+1}) = -x_{i+1}
            }
            Ok(f)
        }
        CochainLabel::Phi(j, k) => {
            if !(1..=n).contains(j) || !(2..=n).contains(k) {
                return Err(range_err(label));
            }
            Ok(Cochain::from_entries(2, n, &[(&[*j, 1], *k, one())]))
        }
        CochainLabel::Psi(1) => {
            let mut f = Cochain::zero(2, n);
            f.set_coeff(&[n - 1, 0], 0, one()); // psi1(x_n, x1) = x1
            for i in 1..=n - 1 {
                f.set_coeff(&[i - 1, n - 1], i - 1, -Q::from_integer((i as i64).into()));
            }
            Ok(f)
        }
        CochainLabel::Psi(j) if (2..=n - 1).contains(j) => {
            let mut f = Cochain::zero(2, n);
            for i in 1..=n - j {
                // psi_j(x_i, x_n) = x_{j+i-1}
                f.set_coeff(&[i - 1, n - 1], j + i - 2, one());
            }
            Ok(f)
        }
        CochainLabel::Psi(j) if *j == n => {
            Ok(Cochain::from_entries(2, n, &[(&[1, n], n, one())]))
        }
        CochainLabel::Psi(j) if *j == n + 1 => {
            Ok(Cochain::from_entries(2, n, &[(&[n, n], n - 1, one())]))
        }
        CochainLabel::Psi(j) if *j == n + 2 => {
            Ok(Cochain::from_entries(2, n, &[(&[n, n], n, one())]))
        }
        CochainLabel::Psi(_) => Err(range_err(label)),
        CochainLabel::Eta(j, k) => {
            let phi = |j, k| named_cochain_f2(n, &CochainLabel::Phi(j, k));
            let psi = |j| named_cochain_f2(n, &CochainLabel::Psi(j));
            match (*j, *k) {
                (j, 1) if (2..=n - 1).contains(&j) => {
                    Ok(phi(j - 1, 1)?.add(&phi(j, 2)?.neg()))
                }
                (j, k) if (2..=n - 1).contains(&j) && j <= k && k < n => {
                    phi(j - 1, k)
                }
                (j, k) if (2..=n - 1).contains(&j) && 2 <= k && k < j => {
                    Ok(phi(j - 1, k)?.add(&phi(j, k + 1)?.neg()))
                }
                (j, k) if (2..=n - 1).contains(&j) && k == n => phi(j - 1, n),
                (j, 1) if j == n => Ok(phi(n, 2)?.add(&psi(2)?)),
                (j, k) if j == n && (2..=n - 2).contains(&k) => phi(n, k + 1),
                _ => Err(range_err(label)),
            }
        }
        _ => Err(CohomologyError::UnknownLabel(label.to_string())),
    }
}

fn named_cochain_f3(n: usize, label: &CochainLabel) -> Result<Cochain, CohomologyError> {
    let one = Q::one;
    match label {
        CochainLabel::Psi(1) => Ok(Cochain::from_entries(2, n, &[(&[1, 1], n, one())])),
        CochainLabel::Psi(2) => Ok(Cochain::from_entries(2, n, &[(&[1, 2], n, one())])),
        CochainLabel::Psi(3) => Ok(Cochain::from_entries(2, n, &[(&[2, 2], n, one())])),
        CochainLabel::Psi(_) => Err(range_err(label)),
        _ => Err(CohomologyError::UnknownLabel(label.to_string())),
    }
}

/// All Thm-3.2-style ZL^2 basis labels for F^1_n.
pub fn zl2_labels_f1(n: usize) -> Vec<CochainLabel> {
    let mut out = Vec::new();
    for j in 2..=n - 1 {
        out.push(CochainLabel::Phi(j, 1));
    }
    for j in 1..=n {
        for k in 2..=n {
            out.push(CochainLabel::Phi(j, k));
        }
    }
    for j in 2..=n {
        out.push(CochainLabel::Psi(j));
    }
    out.push(CochainLabel::Xi1);
    out.push(CochainLabel::Xi2);
    out
}

/// All Prop-3.4-style BL^2 basis labels for F^1_n.
pub fn bl2_labels_f1(n: usize) -> Vec<CochainLabel> {
    let mut out = Vec::new();
    for k in 2..=n - 1 {
        out.push(CochainLabel::Eta(1, k));
    }
    out.push(CochainLabel::Eta(2, 1));
    for j in 3..=n {
        for k in 1..=n {
            out.push(CochainLabel::Eta(j, k));
        }
    }
    out
}

/// HL^2 representatives of F^1_n: psi2, xi1, xi2, phi_{1,2}, phi_{n,k}
/// (2 <= k <= n), psi_j (4 <= j <= n). 2n classes.
pub fn hl2_representatives_f1(n: usize) -> Vec<CochainLabel> {
    let mut out = vec![
        CochainLabel::Psi(2),
        CochainLabel::Xi1,
        CochainLabel::Xi2,
        CochainLabel::Phi(1, 2),
    ];
    for k in 2..=n {
        out.push(CochainLabel::Phi(n, k));
    }
    for j in 4..=n {
        out.push(CochainLabel::Psi(j));
    }
    out
}

/// All Thm-3.12-style ZL^2 basis labels for F^2_n.
pub fn zl2_labels_f2(n: usize) -> Vec<CochainLabel> {
    let mut out = Vec::new();
    for j in 1..=n - 2 {
        out.push(CochainLabel::Phi(j, 1));
    }
    for j in 1..=n {
        for k in 2..=n {
            out.push(CochainLabel::Phi(j, k));
        }
    }
    for j in 1..=n + 2 {
        out.push(CochainLabel::Psi(j));
    }
    out
}

/// All Prop-3.14-style BL^2 basis labels for F^2_n.
pub fn bl2_labels_f2(n: usize) -> Vec<CochainLabel> {
    let mut out = Vec::new();
    for j in 2..=n - 1 {
        for k in 1..=n {
            out.push(CochainLabel::Eta(j, k));
        }
    }
    out.push(CochainLabel::Eta(n, 1));
    for k in 2..=n - 2 {
        out.push(CochainLabel::Eta(n, k));
    }
    out
}

/// HL^2 representatives of F^2_n: phi_{n,n}, phi_{n-1,k} (2 <= k <= n),
/// psi_j (1 <= j <= n+2). 2n + 2 classes.
pub fn hl2_representatives_f2(n: usize) -> Vec<CochainLabel> {
    let mut out = vec![CochainLabel::Phi(n, n)];
    for k in 2..=n {
        out.push(CochainLabel::Phi(n - 1, k));
    }
    for j in 1..=n + 2 {
        out.push(CochainLabel::Psi(j));
    }
    out
}
