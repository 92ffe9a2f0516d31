//! Randomized invariants over the exact kernels: elimination, bracket
//! bilinearity, basis-change round trips and the complex property.

use num_traits::{One, Zero};
use proptest::prelude::*;

use filiform::algebra::Algebra;
use filiform::cohomology::{coboundary, Cochain};
use filiform::field::Q;
use filiform::linalg::Matrix;

fn rational() -> impl Strategy<Value = Q> {
    (-5i64..=5, 1i64..=4).prop_map(|(p, q)| Q::new(p.into(), q.into()))
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix<Q>> {
    proptest::collection::vec(proptest::collection::vec(rational(), n), n)
        .prop_map(Matrix::from_dense)
}

fn algebra(n: usize) -> impl Strategy<Value = Algebra> {
    proptest::collection::vec(rational(), n * n * n).prop_map(move |cs| {
        let mut a = Algebra::zero(n);
        let mut it = cs.into_iter();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    a.set_c(i, j, k, it.next().unwrap());
                }
            }
        }
        a
    })
}

fn cochain1(n: usize) -> impl Strategy<Value = Cochain> {
    proptest::collection::vec(rational(), n * n).prop_map(move |cs| {
        let mut f = Cochain::zero(1, n);
        let mut it = cs.into_iter();
        for u in 0..n {
            for t in 0..n {
                f.set_coeff(&[u], t, it.next().unwrap());
            }
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in matrix(4)) {
        let r = m.rref();
        prop_assert_eq!(r.rref(), r);
    }

    #[test]
    fn rank_nullity(m in matrix(4)) {
        prop_assert_eq!(m.rank() + m.kernel_basis().dim(), 4);
    }

    #[test]
    fn kernel_vectors_annihilate(m in matrix(4)) {
        for v in m.kernel_basis().basis_rows() {
            prop_assert!(m.mul_vec(&v).unwrap().iter().all(Q::is_zero));
        }
    }

    #[test]
    fn inverse_round_trip(m in matrix(3)) {
        if let Ok(inv) = m.inverse() {
            let mut prod = Vec::new();
            for r in 0..3 {
                let row: Vec<Q> = (0..3).map(|c| {
                    m.row(r).iter().map(|(k, v)| {
                        v.clone() * inv.row(*k).iter()
                            .find(|(cc, _)| *cc == c)
                            .map(|(_, x)| x.clone())
                            .unwrap_or_else(Q::zero)
                    }).fold(Q::zero(), |a, b| a + b)
                }).collect();
                prod.push(row);
            }
            for (r, row) in prod.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    prop_assert_eq!(v, &if r == c { Q::one() } else { Q::zero() });
                }
            }
        }
    }

    #[test]
    fn bracket_is_bilinear(
        a in algebra(3),
        x in proptest::collection::vec(rational(), 3),
        y in proptest::collection::vec(rational(), 3),
        z in proptest::collection::vec(rational(), 3),
        s in rational(),
    ) {
        // [x + s z, y] = [x, y] + s [z, y]
        let lhs_arg: Vec<Q> = x.iter().zip(&z)
            .map(|(xi, zi)| xi.clone() + s.clone() * zi.clone())
            .collect();
        let lhs = a.bracket(&lhs_arg, &y).unwrap();
        let xy = a.bracket(&x, &y).unwrap();
        let zy = a.bracket(&z, &y).unwrap();
        for k in 0..3 {
            prop_assert_eq!(
                lhs[k].clone(),
                xy[k].clone() + s.clone() * zy[k].clone()
            );
        }
    }

    #[test]
    fn basis_change_round_trip(a in algebra(3), g in matrix(3)) {
        if let Ok(ginv) = g.inverse() {
            let conj = a.apply_basis_change(&g).unwrap();
            let back = conj.apply_basis_change(&ginv).unwrap();
            prop_assert!(back.same_table(&a));
        }
    }

    #[test]
    fn basis_change_preserves_leibniz_defect_count(a in algebra(3), g in matrix(3)) {
        if g.inverse().is_ok() {
            let conj = a.apply_basis_change(&g).unwrap();
            prop_assert_eq!(a.is_leibniz(), conj.is_leibniz());
        }
    }

    #[test]
    fn complex_property_on_leibniz_algebras(f in cochain1(4), theta in rational()) {
        // a genuine Leibniz algebra: the n = 4 first-family member
        let spec = filiform::catalog::FamilySpec::with_params(
            "F1", 4, &[("theta", theta), ("alpha4", Q::one())],
        );
        let a = filiform::catalog::build(&spec).unwrap();
        prop_assert!(coboundary(&a, &coboundary(&a, &f)).is_zero());
    }
}
