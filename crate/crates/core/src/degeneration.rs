//! One-parameter basis-change families g_t with rational-function
//! entries, the transported bracket [x, y]_t = g_t [g_t^{-1} x, g_t^{-1} y],
//! and the t -> 0 limit algebra.

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::Algebra;
use crate::field::Q;
use crate::linalg::Matrix;
use crate::ratfun::RatFun;

/// Algebra whose structure constants are rational functions in t.
pub type ParamAlgebra = Algebra<RatFun>;
/// An n x n matrix of rational functions in t; invertible over the
/// function field means g_t is invertible for all but finitely many t.
pub type ParamBasisChange = Matrix<RatFun>;

#[derive(Debug, Error, PartialEq)]
pub enum DegenerationError {
    #[error("basis-change family is singular as a matrix over the function field")]
    SingularFamily,
    #[error("structure constants have poles at t = 0 in entries {0:?}")]
    PoleAtZero(Vec<(usize, usize, usize)>),
}

/// Constant family: every entry the given rational, independent of t.
pub fn promote(a: &Algebra<Q>) -> ParamAlgebra {
    a.map(|c| RatFun::constant(c.clone()))
}

/// Diagonal family diag(t^e_1, ..., t^e_n); negative exponents allowed.
pub fn diagonal_powers(exponents: &[i64]) -> ParamBasisChange {
    let n = exponents.len();
    let rows = exponents
        .iter()
        .map(|e| RatFun::t().pow(*e))
        .enumerate()
        .map(|(i, v)| vec![(i, v)])
        .collect();
    Matrix::from_sparse_rows(rows, n)
}

/// The transported bracket [x, y]_t = g_t [g_t^{-1} x, g_t^{-1} y] as a
/// parametric algebra. Specializing at any non-pole t0 agrees with
/// applying the specialized basis change directly.
pub fn conjugate_family(
    a: &Algebra<Q>,
    g: &ParamBasisChange,
) -> Result<ParamAlgebra, DegenerationError> {
    promote(a)
        .apply_basis_change(g)
        .map_err(|_| DegenerationError::SingularFamily)
}

/// The matrix g(t0) over the rationals; None if some entry has a pole.
pub fn specialize_matrix(g: &ParamBasisChange, t0: &Q) -> Option<Matrix<Q>> {
    let mut rows = Vec::with_capacity(g.nrows());
    for r in 0..g.nrows() {
        let mut row = Vec::with_capacity(g.row(r).len());
        for (c, v) in g.row(r) {
            row.push((*c, v.eval(t0)?));
        }
        row.retain(|(_, v)| !v.is_zero());
        rows.push(row);
    }
    Some(Matrix::from_sparse_rows(rows, g.ncols()))
}

/// The algebra at t = t0; None if some structure constant has a pole.
pub fn specialize(p: &ParamAlgebra, t0: &Q) -> Option<Algebra<Q>> {
    let n = p.dim();
    let mut out = Algebra::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = p.c(i, j, k);
                if !v.is_zero() {
                    out.set_c(i, j, k, v.eval(t0)?);
                }
            }
        }
    }
    Some(out)
}

/// Evaluate every structure constant at t = 0, or report the entries
/// whose reduced form has a pole there.
pub fn limit_at_zero(p: &ParamAlgebra) -> Result<Algebra<Q>, DegenerationError> {
    let n = p.dim();
    let mut out = Algebra::zero(n);
    let mut poles = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = p.c(i, j, k);
                match v.value_at_zero() {
                    Some(c) => {
                        if !c.is_zero() {
                            out.set_c(i, j, k, c);
                        }
                    }
                    None => poles.push((i, j, k)),
                }
            }
        }
    }
    if poles.is_empty() {
        if let Some(l) = p.label() {
            out = out.with_label(format!("{l}@t=0"));
        }
        Ok(out)
    } else {
        Err(DegenerationError::PoleAtZero(poles))
    }
}

/// True iff the limit of the conjugated family exists and equals the
/// target's structure constants exactly.
pub fn degenerates_via(
    a: &Algebra<Q>,
    g: &ParamBasisChange,
    target: &Algebra<Q>,
) -> Result<bool, DegenerationError> {
    let fam = conjugate_family(a, g)?;
    match limit_at_zero(&fam) {
        Ok(lim) => Ok(lim.same_table(target)),
        Err(DegenerationError::PoleAtZero(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    
    use crate::catalog::{build, FamilySpec};
    use crate::field::{q, qi};
    use crate::ratfun::Poly;
    use num_traits::One;

    fn t() -> RatFun {
        RatFun::t()
    }

    #[test]
    fn constant_family_round_trip() {
        let a = build(&FamilySpec::plain("NF", 4)).unwrap();
        let g = Matrix::<RatFun>::identity(4);
        let fam = conjugate_family(&a, &g).unwrap();
        assert!(limit_at_zero(&fam).unwrap().same_table(&a));
        assert!(specialize(&fam, &qi(7)).unwrap().same_table(&a));
    }

    #[test]
    fn mu_tilde_to_lambda() {
        // g_t(x1) = x1, g_t(x_i) = t x_i sends mu_tilde(0, a3, ..., a_n)
        // to lambda(0, 0, a3, ..., a_n)
        for n in 4..=6 {
            let params: Vec<(String, Q)> = (3..=n)
                .map(|k| (format!("alpha{k}"), qi(k as i64 - 2)))
                .collect();
            let pref: Vec<(&str, Q)> =
                params.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
            let src = build(&FamilySpec::with_params("mu_tilde", n, &pref)).unwrap();
            let lam_params: Vec<(&str, Q)> = params
                .iter()
                .map(|(k, v)| (k.as_str(), v.clone()))
                .map(|(k, v)| (k.strip_prefix("alph").unwrap(), v))
                .collect();
            let tgt = build(&FamilySpec::with_params("lambda", n, &lam_params)).unwrap();
            let mut exps = vec![1i64; n];
            exps[0] = 0;
            let g = diagonal_powers(&exps);
            assert!(degenerates_via(&src, &g, &tgt).unwrap());
        }
    }

    #[test]
    fn nf3_scaling_has_pole() {
        let a = build(&FamilySpec::plain("NF", 3)).unwrap();
        let g = diagonal_powers(&[1, 0, 0]);
        let fam = conjugate_family(&a, &g).unwrap();
        // [x1, x1]_t = t^{-2} x2
        assert_eq!(*fam.c(0, 0, 1), t().pow(-2));
        match limit_at_zero(&fam) {
            Err(DegenerationError::PoleAtZero(entries)) => {
                assert!(entries.contains(&(0, 0, 1)));
            }
            other => panic!("expected a pole, got {other:?}"),
        }
        // cross-check the exponent by specialization
        for t0 in [q(1, 2), q(1, 4)] {
            let direct = a
                .apply_basis_change(&specialize_matrix(&g, &t0).unwrap())
                .unwrap();
            assert_eq!(*direct.c(0, 0, 1), t0.clone().recip() * t0.recip());
        }
    }

    #[test]
    fn nf4_to_abelian() {
        let a = build(&FamilySpec::plain("NF", 4)).unwrap();
        let g = diagonal_powers(&[0, 1, 2, 3]);
        let abelian: Algebra<Q> = Algebra::zero(4);
        assert!(degenerates_via(&a, &g, &abelian).unwrap());
    }

    #[test]
    fn remark_source_to_nu1() {
        // single-generated source: chain, [x_{n-1}, x1] = x_n + sum a_k x_k,
        // [x_n, x1] = x_n; g_t scales only x_n
        let n = 5;
        let aks = [(2usize, qi(1)), (3, qi(0)), (4, qi(0))]; // sum = 1
        let mut table: Vec<((usize, usize, usize), Q)> = (1..=n - 2)
            .map(|i| ((i, 1, i + 1), qi(1)))
            .collect();
        table.push(((n - 1, 1, n), qi(1)));
        for (k, v) in &aks {
            table.push(((n - 1, 1, *k), v.clone()));
        }
        table.push(((n, 1, n), qi(1)));
        let src = Algebra::from_table(n, &table);
        assert!(src.is_leibniz());
        let mut exps = vec![0i64; n];
        exps[n - 1] = 1;
        let g = diagonal_powers(&exps);
        let nu1 = build(&FamilySpec::with_params("nu1", n, &[("a2", qi(1))])).unwrap();
        assert!(degenerates_via(&src, &g, &nu1).unwrap());
    }

    #[test]
    fn identity_family_cannot_change_algebra() {
        let f1 = build(&FamilySpec::plain("F1graded", 4)).unwrap();
        let f2 = build(&FamilySpec::plain("F2graded", 4)).unwrap();
        let g = Matrix::<RatFun>::identity(4);
        assert!(!degenerates_via(&f1, &g, &f2).unwrap());
    }

    #[test]
    fn singular_family_rejected() {
        let a = build(&FamilySpec::plain("NF", 3)).unwrap();
        // rank-deficient over the function field: rows t, t, 1
        let g = Matrix::from_dense(vec![
            vec![t(), RatFun::zero(), RatFun::zero()],
            vec![t(), RatFun::zero(), RatFun::zero()],
            vec![RatFun::zero(), RatFun::zero(), RatFun::one()],
        ]);
        assert_eq!(
            conjugate_family(&a, &g).unwrap_err(),
            DegenerationError::SingularFamily
        );
    }

    #[test]
    fn specialization_consistency() {
        let a = build(&FamilySpec::plain("F2graded", 4)).unwrap();
        // a non-diagonal family: x1 -> x1 + t x2, others scaled
        let one = RatFun::one;
        let zero = RatFun::zero;
        let g = Matrix::from_dense(vec![
            vec![one(), zero(), zero(), zero()],
            vec![t(), t(), zero(), zero()],
            vec![zero(), zero(), t().pow(2), zero()],
            vec![
                zero(),
                zero(),
                zero(),
                RatFun::new(Poly::one(), Poly::t() + Poly::constant(qi(2))),
            ],
        ]);
        let fam = conjugate_family(&a, &g).unwrap();
        for t0 in [q(1, 2), qi(2), qi(-1)] {
            let direct = a
                .apply_basis_change(&specialize_matrix(&g, &t0).unwrap())
                .unwrap();
            assert!(specialize(&fam, &t0).unwrap().same_table(&direct), "{t0}");
        }
    }
}
