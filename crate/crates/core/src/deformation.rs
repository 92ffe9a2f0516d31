//! Linear deformations L + t*phi, the quadratic integrability test, and
//! pointwise verification that the displayed polynomial constraint
//! systems of the `mu35` and `nu` families agree with the Leibniz defect.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{unit, Algebra};
use crate::catalog::{build, CatalogError, FamilySpec};
use crate::cohomology::{coboundary, Cochain, CohomologyError};
use crate::field::Q;

/// The family mu_0 + t*phi for a 2-cochain phi.
#[derive(Debug, Clone)]
pub struct LinearDeformation {
    pub base: Algebra,
    pub direction: Cochain,
    pub t: Q,
}

/// The algebra with structure constants sc + t * phi. At t = 0 this is
/// the base exactly.
pub fn deform(d: &LinearDeformation) -> Algebra {
    let n = d.base.dim();
    assert_eq!(d.direction.degree(), 2, "direction must be a 2-cochain");
    assert_eq!(d.direction.dim(), n, "direction/base dimension mismatch");
    let mut out = d.base.clone();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let c = d.direction.coeff(&[i, j], k);
                if !c.is_zero() {
                    let v = out.c(i, j, k).clone() + d.t.clone() * c.clone();
                    out.set_c(i, j, k, v);
                }
            }
        }
    }
    out
}

/// Outcome of the linear integrability test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Integrability {
    Integrable,
    /// d^2(phi) != 0; the 0-based triple indexes a nonzero component.
    NotACocycle { witness: (usize, usize, usize) },
    /// phi is a cocycle but phi(x, phi(y, z)) - phi(phi(x, y), z)
    /// + phi(phi(x, z), y) != 0 at the 0-based witness triple.
    QuadraticFailure { witness: (usize, usize, usize) },
}

impl Integrability {
    pub fn is_integrable(&self) -> bool {
        matches!(self, Integrability::Integrable)
    }
}

/// phi applied to (x_i, v) for a coordinate vector v.
fn phi_basis_vec(phi: &Cochain, i: usize, v: &[Q]) -> Vec<Q> {
    let n = phi.dim();
    let mut out = vec![Q::zero(); n];
    for (j, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for k in 0..n {
            let p = phi.coeff(&[i, j], k);
            if !p.is_zero() {
                out[k] = out[k].clone() + c.clone() * p.clone();
            }
        }
    }
    out
}

/// True iff mu_0 + t*phi is a Leibniz bracket for every t: phi must be a
/// 2-cocycle and satisfy the quadratic condition
/// phi(x, phi(y, z)) - phi(phi(x, y), z) + phi(phi(x, z), y) = 0
/// on all basis triples.
pub fn integrable_linear(
    base: &Algebra,
    phi: &Cochain,
) -> Result<Integrability, CohomologyError> {
    if !base.is_leibniz() {
        return Err(CohomologyError::NotLeibniz);
    }
    let n = base.dim();
    assert_eq!(phi.degree(), 2, "phi must be a 2-cochain");
    assert_eq!(phi.dim(), n, "phi/base dimension mismatch");
    let d = coboundary(base, phi);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if d.value(&[i, j, k]).iter().any(|x| !x.is_zero()) {
                    return Ok(Integrability::NotACocycle {
                        witness: (i, j, k),
                    });
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let a = phi_basis_vec(phi, i, &phi.value(&[j, k]));
                let b = phi.eval(&[&phi.value(&[i, j]), &unit(n, k)]);
                let c = phi.eval(&[&phi.value(&[i, k]), &unit(n, j)]);
                let bad = (0..n).any(|s| {
                    !(a[s].clone() - b[s].clone() + c[s].clone()).is_zero()
                });
                if bad {
                    return Ok(Integrability::QuadraticFailure {
                        witness: (i, j, k),
                    });
                }
            }
        }
    }
    Ok(Integrability::Integrable)
}

/// One evaluated polynomial constraint.
#[derive(Debug, Clone, Serialize)]
pub struct Constraint {
    pub name: String,
    pub holds: bool,
}

/// Result of evaluating a family's displayed constraint system against
/// the brute-force Leibniz defect of the constructed product.
#[derive(Debug, Clone, Serialize)]
pub struct ConstraintReport {
    pub family_id: String,
    pub n: usize,
    pub constraints: Vec<Constraint>,
    pub all_hold: bool,
    pub defect_empty: bool,
    /// Whether constraint satisfaction and defect emptiness agree; the
    /// displayed systems characterize the Leibniz law, so these should
    /// coincide (for `nu` only inside the reduction regime).
    pub agree: bool,
    /// For `nu`: whether the parameters lie in the regime b1 = 0, a_n = 0,
    /// c1 = -b_n under which the displayed system was derived. None for
    /// families whose system is unconditional.
    pub regime_holds: Option<bool>,
}

/// Evaluate the displayed constraint system of `mu35` or `nu` at concrete
/// parameters and compare with the Leibniz defect of the built algebra.
pub fn verify_constraint_system(spec: &FamilySpec) -> Result<ConstraintReport, CatalogError> {
    let n = spec.n;
    let get = |name: &str| -> Q {
        spec.params
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Q::zero)
    };
    let mut constraints: Vec<Constraint> = Vec::new();
    let mut push = |name: String, lhs: Q| {
        constraints.push(Constraint {
            holds: lhs.is_zero(),
            name,
        });
    };
    let regime_holds = match spec.family_id.as_str() {
        "mu35" => {
            push("b2 = 0".into(), get("b2"));
            for k in 1..=n {
                let ak = get(&format!("a{k}"));
                push(format!("c1*a{k} = 0"), get("c1") * ak.clone());
                push(format!("cn*a{k} = 0"), get("cn") * ak.clone());
                for i in 4..=n {
                    push(format!("b{i}*a{k} = 0"), get(&format!("b{i}")) * ak.clone());
                }
            }
            None
        }
        "nu" => {
            let b = |i: usize| get(&format!("b{i}"));
            let a = |k: usize| get(&format!("a{k}"));
            push(format!("b{} = 0", n + 2), b(n + 2));
            for k in 2..=n - 1 {
                push(
                    format!("b{}*a{k} + b{}*b{k} = 0", n - 1, n),
                    b(n - 1) * a(k) + b(n) * b(k),
                );
            }
            for i in 2..=n - 2 {
                for k in 2..=i {
                    push(format!("b{}*a{k} = 0", n - i), b(n - i) * a(k));
                }
                for k in i + 1..=n - 1 {
                    push(
                        format!("b{}*a{k} + b{}*b{} = 0", n - i, n, k - i + 1),
                        b(n - i) * a(k) + b(n) * b(k - i + 1),
                    );
                }
            }
            for k in 2..=n - 2 {
                push(format!("b{}*a{k} = 0", n + 1), b(n + 1) * a(k));
            }
            push(
                format!("b{}*(a{} + 2*b{}) = 0", n + 1, n - 1, n),
                b(n + 1) * (a(n - 1) + b(n) + b(n)),
            );
            let in_regime = get("b1").is_zero()
                && get(&format!("a{n}")).is_zero()
                && (get("c1") + b(n)).is_zero();
            Some(in_regime)
        }
        other => {
            return Err(CatalogError::BadParams(format!(
                "no displayed constraint system for family `{other}`"
            )));
        }
    };
    let algebra = build(spec)?;
    let defect_empty = algebra.is_leibniz();
    let all_hold = constraints.iter().all(|c| c.holds);
    Ok(ConstraintReport {
        family_id: spec.family_id.clone(),
        n,
        all_hold,
        defect_empty,
        agree: all_hold == defect_empty,
        regime_holds,
        constraints,
    })
}
