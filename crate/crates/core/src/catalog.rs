//! Constructors for the named algebras and parameterized families, each
//! emitting exact rational structure constants.
//!
//! Parameter naming follows the multiplication tables: `alpha`, `theta`,
//! `a2`..`an`, `b1`..`b{n+2}`, `c1`, `cn`, and `c_i_j_k` for the free
//! antisymmetric coefficients of the third filiform family.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::Algebra;
use crate::field::Q;

#[derive(Debug, Error, PartialEq)]
pub enum CatalogError {
    #[error("bad parameters: {0}")]
    BadParams(String),
}

/// A catalog family identifier, its dimension and named parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    pub family_id: String,
    pub n: usize,
    pub params: Vec<(String, Q)>,
}

impl FamilySpec {
    pub fn plain(family_id: &str, n: usize) -> Self {
        FamilySpec {
            family_id: family_id.to_string(),
            n,
            params: Vec::new(),
        }
    }

    pub fn with_params(family_id: &str, n: usize, params: &[(&str, Q)]) -> Self {
        FamilySpec {
            family_id: family_id.to_string(),
            n,
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
        }
    }

    fn get(&self, name: &str) -> Q {
        self.params
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Q::zero)
    }
}

pub const FAMILY_IDS: &[&str] = &[
    "NF", "F1graded", "F2graded", "F3graded", "F1", "F2", "F3", "mu_tilde",
    "mu35", "lambda", "R", "nu", "nu1", "nu2", "nu3", "nu4", "nu5",
];

fn bad(msg: impl Into<String>) -> CatalogError {
    CatalogError::BadParams(msg.into())
}

fn check_names(spec: &FamilySpec, allowed: &dyn Fn(&str) -> bool) -> Result<(), CatalogError> {
    for (name, _) in &spec.params {
        if !allowed(name) {
            return Err(bad(format!(
                "unknown parameter `{name}` for family {}",
                spec.family_id
            )));
        }
    }
    Ok(())
}

fn indexed(prefix: &str, name: &str, lo: usize, hi: usize) -> bool {
    name.strip_prefix(prefix)
        .and_then(|s| s.parse::<usize>().ok())
        .is_some_and(|i| (lo..=hi).contains(&i))
}

/// Validates the alpha parameter of the third family: alpha in {0, 1},
/// and alpha = 0 when n is odd.
fn check_alpha(spec: &FamilySpec) -> Result<Q, CatalogError> {
    let alpha = spec.get("alpha");
    if !alpha.is_zero() && !alpha.is_one() {
        return Err(bad("alpha must be 0 or 1"));
    }
    if spec.n % 2 == 1 && !alpha.is_zero() {
        return Err(bad("alpha = 0 is required for odd n"));
    }
    Ok(alpha)
}

/// Build the algebra described by `spec`. All families require n >= 3
/// except NF (n >= 2). The `mu35` family deliberately admits parameter
/// values whose product violates the Leibniz identity.
pub fn build(spec: &FamilySpec) -> Result<Algebra, CatalogError> {
    let n = spec.n;
    let min_n = if spec.family_id == "NF" { 2 } else { 3 };
    if n < min_n {
        return Err(bad(format!(
            "family {} requires n >= {min_n}",
            spec.family_id
        )));
    }
    let mut t: Vec<((usize, usize, usize), Q)> = Vec::new();
    let one = Q::one;
    match spec.family_id.as_str() {
        "NF" => {
            check_names(spec, &|_| false)?;
            for i in 1..n {
                t.push(((i, 1, i + 1), one()));
            }
        }
        "F1graded" => {
            check_names(spec, &|_| false)?;
            for i in 2..n {
                t.push(((i, 1, i + 1), one()));
            }
        }
        "F2graded" => {
            check_names(spec, &|_| false)?;
            for i in 1..=n - 2 {
                t.push(((i, 1, i + 1), one()));
            }
        }
        "F3graded" => {
            check_names(spec, &|name| name == "alpha")?;
            let alpha = check_alpha(spec)?;
            for i in 2..n {
                t.push(((i, 1, i + 1), one()));
                t.push(((1, i, i + 1), -one()));
            }
            if !alpha.is_zero() {
                for i in 2..n {
                    let sign = if i % 2 == 1 { one() } else { -one() };
                    t.push(((i, n + 1 - i, n), alpha.clone() * sign));
                }
            }
        }
        "F1" => {
            check_names(spec, &|name| {
                name == "theta" || indexed("alpha", name, 4, n)
            })?;
            for i in 2..n {
                t.push(((i, 1, i + 1), one()));
            }
            t.push(((1, 2, n), spec.get("theta")));
            for j in 2..=n.saturating_sub(2) {
                for m in 4..=n + 2 - j {
                    t.push(((j, 2, m + j - 2), spec.get(&format!("alpha{m}"))));
                }
            }
        }
        "F2" => {
            check_names(spec, &|name| {
                name == "gamma" || indexed("beta", name, 3, n.saturating_sub(1))
            })?;
            for i in 1..=n - 2 {
                t.push(((i, 1, i + 1), one()));
            }
            for j in 1..=n.saturating_sub(3) {
                for m in 3..=n - j {
                    t.push(((j, n, m + j - 1), spec.get(&format!("beta{m}"))));
                }
            }
            t.push(((n, n, n - 1), spec.get("gamma")));
        }
        "F3" => {
            check_names(spec, &|name| {
                matches!(name, "theta1" | "theta2" | "theta3" | "alpha")
                    || parse_free_coeff(name, n).is_some()
            })?;
            let alpha = check_alpha(spec)?;
            for i in 2..n {
                t.push(((i, 1, i + 1), one()));
            }
            for i in 3..n {
                t.push(((1, i, i + 1), -one()));
            }
            t.push(((1, 1, n), spec.get("theta1")));
            t.push(((1, 2, 3), -one()));
            t.push(((1, 2, n), spec.get("theta2")));
            t.push(((2, 2, n), spec.get("theta3")));
            for (name, v) in &spec.params {
                if let Some((i, j, k)) = parse_free_coeff(name, n) {
                    t.push(((i, j, k), v.clone()));
                    t.push(((j, i, k), -v.clone()));
                }
            }
            if !alpha.is_zero() {
                for i in 2..n {
                    let sign = if i % 2 == 1 { one() } else { -one() };
                    t.push(((i, n + 1 - i, n), alpha.clone() * sign));
                }
            }
        }
        "mu_tilde" => {
            check_names(spec, &|name| indexed("alpha", name, 2, n))?;
            for i in 1..n {
                t.push(((i, 1, i + 1), one()));
            }
            for k in 2..=n {
                t.push(((n, 1, k), spec.get(&format!("alpha{k}"))));
            }
        }
        "mu35" => {
            check_names(spec, &|name| {
                indexed("a", name, 1, n)
                    || name == "b2"
                    || indexed("b", name, 4, n)
                    || matches!(name, "c1" | "cn")
            })?;
            let c1 = spec.get("c1");
            t.push(((1, 1, 2), spec.get("a1")));
            for i in 2..n {
                t.push(((i, 1, i + 1), one()));
            }
            for k in 2..=n {
                t.push(((n, 1, k), spec.get(&format!("a{k}"))));
            }
            t.push(((1, 2, 1), c1.clone()));
            t.push(((1, 2, n), spec.get("cn")));
            for i in 2..=n {
                let diag = Q::from_integer((i as i64 - 2).into()) * c1.clone()
                    + spec.get("b2");
                t.push(((i, 2, i), diag));
                for k in 4..=n + 2 - i {
                    t.push(((i, 2, k + i - 2), spec.get(&format!("b{k}"))));
                }
            }
            for i in 2..n {
                t.push(((i, 3, i + 1), -c1.clone()));
            }
        }
        "lambda" => {
            check_names(spec, &|name| indexed("a", name, 1, n))?;
            t.push(((1, 1, 2), spec.get("a1")));
            for i in 2..n {
                t.push(((i, 1, i + 1), one()));
            }
            for k in 2..=n {
                t.push(((n, 1, k), spec.get(&format!("a{k}"))));
            }
        }
        "R" => {
            check_names(spec, &|_| false)?;
            for i in 2..n {
                t.push(((i, 1, i + 1), one()));
            }
            t.push(((1, 2, 1), one()));
            for i in 3..=n {
                t.push(((i, 2, i), Q::from_integer((i as i64 - 2).into())));
            }
            for i in 2..n {
                t.push(((i, 3, i + 1), -one()));
            }
        }
        "nu" => {
            check_names(spec, &|name| {
                indexed("a", name, 2, n) || indexed("b", name, 1, n + 2) || name == "c1"
            })?;
            let b1 = spec.get("b1");
            for i in 1..=n - 2 {
                t.push(((i, 1, i + 1), one()));
            }
            for k in 2..=n {
                t.push(((n - 1, 1, k), spec.get(&format!("a{k}"))));
            }
            t.push(((n, 1, 1), b1.clone()));
            t.push(((n, 1, n), spec.get("c1")));
            t.push(((1, n, 1), -b1.clone()));
            for k in 2..=n {
                t.push(((1, n, k), spec.get(&format!("b{k}"))));
            }
            for i in 2..n {
                t.push(((i, n, i), -Q::from_integer((i as i64).into()) * b1.clone()));
                for k in 2..=n - i {
                    t.push(((i, n, k + i - 1), spec.get(&format!("b{k}"))));
                }
            }
            t.push(((n, n, n - 1), spec.get(&format!("b{}", n + 1))));
            t.push(((n, n, n), spec.get(&format!("b{}", n + 2))));
        }
        "nu1" => {
            check_names(spec, &|name| indexed("a", name, 2, n - 1))?;
            let total: Q = (2..n).map(|k| spec.get(&format!("a{k}"))).sum();
            if !total.is_one() {
                return Err(bad("nu1 requires sum of a_k to equal 1"));
            }
            for i in 1..=n - 2 {
                t.push(((i, 1, i + 1), one()));
            }
            for k in 2..n {
                t.push(((n - 1, 1, k), spec.get(&format!("a{k}"))));
            }
            t.push(((n, 1, n), one()));
        }
        "nu2" => {
            check_names(spec, &|_| false)?;
            for i in 1..=n - 2 {
                t.push(((i, 1, i + 1), one()));
            }
            t.push(((n, 1, 1), one()));
            for i in 1..n {
                t.push(((i, n, i), -Q::from_integer((i as i64).into())));
            }
        }
        "nu3" => {
            check_names(spec, &|name| indexed("b", name, 2, n - 1))?;
            for i in 1..=n - 2 {
                t.push(((i, 1, i + 1), one()));
            }
            t.push(((n - 1, 1, n - 1), -one()));
            t.push(((n, 1, n), -one()));
            t.push(((1, n, n), one()));
            for k in 2..n {
                t.push(((1, n, k), spec.get(&format!("b{k}"))));
            }
            for i in 2..=n - 2 {
                for k in 2..=n - i {
                    t.push(((i, n, k + i - 1), spec.get(&format!("b{k}"))));
                }
            }
        }
        "nu4" => {
            check_names(spec, &|_| false)?;
            for i in 1..=n - 2 {
                t.push(((i, 1, i + 1), one()));
            }
            t.push(((n - 1, 1, n - 1), -Q::from_integer(2.into())));
            t.push(((n, 1, n), -one()));
            t.push(((1, n, n), one()));
            t.push(((n, n, n - 1), one()));
        }
        "nu5" => {
            check_names(spec, &|name| indexed("a", name, 2, n - 1))?;
            for i in 1..=n - 2 {
                t.push(((i, 1, i + 1), one()));
            }
            for k in 2..n {
                t.push(((n - 1, 1, k), spec.get(&format!("a{k}"))));
            }
            t.push(((n, 1, n), -one()));
            t.push(((1, n, n), one()));
        }
        other => {
            return Err(bad(format!("unknown family `{other}`")));
        }
    }
    let label = format!("{}_{}", spec.family_id, n);
    Ok(Algebra::from_table(n, &t).with_label(label))
}

/// Free antisymmetric coefficient name `c_i_j_k` of the F3 family:
/// 2 <= i < j <= n-1 and i + j + 1 <= k <= n.
fn parse_free_coeff(name: &str, n: usize) -> Option<(usize, usize, usize)> {
    let mut parts = name.strip_prefix("c_")?.split('_');
    let i: usize = parts.next()?.parse().ok()?;
    let j: usize = parts.next()?.parse().ok()?;
    let k: usize = parts.next()?.parse().ok()?;
    if parts.next().is_some() {
        return None;
    }
    (2 <= i && i < j && j < n && i + j < k && k <= n).then_some((i, j, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::qi;

    #[test]
    fn f3graded_even_alpha_table() {
        let a = build(&FamilySpec::with_params("F3graded", 6, &[("alpha", qi(1))]))
            .unwrap();
        // [x2, x5] = -x6 and [x3, x4] = x6
        assert_eq!(*a.c(1, 4, 5), qi(-1));
        assert_eq!(*a.c(4, 1, 5), qi(1));
        assert_eq!(*a.c(2, 3, 5), qi(1));
        assert_eq!(*a.c(3, 2, 5), qi(-1));
        assert!(a.is_leibniz());
    }

    #[test]
    fn f3graded_odd_alpha_rejected() {
        let err = build(&FamilySpec::with_params("F3graded", 5, &[("alpha", qi(1))]))
            .unwrap_err();
        assert!(matches!(err, CatalogError::BadParams(_)));
    }

    #[test]
    fn r_table_n5() {
        let a = build(&FamilySpec::plain("R", 5)).unwrap();
        for i in 2..=4 {
            assert_eq!(*a.c(i - 1, 0, i), qi(1)); // [x_i, x1] = x_{i+1}
        }
        assert_eq!(*a.c(0, 1, 0), qi(1)); // [x1, x2] = x1
        for i in 3..=5 {
            assert_eq!(*a.c(i - 1, 1, i - 1), qi(i as i64 - 2));
        }
        for i in 2..=4 {
            assert_eq!(*a.c(i - 1, 2, i), qi(-1)); // [x_i, x3] = -x_{i+1}
        }
        assert!(a.is_leibniz());
    }

    #[test]
    fn nu2_table_n5() {
        let a = build(&FamilySpec::plain("nu2", 5)).unwrap();
        for i in 1..=3 {
            assert_eq!(*a.c(i - 1, 0, i), qi(1));
        }
        assert_eq!(*a.c(4, 0, 0), qi(1)); // [x5, x1] = x1
        for i in 1..=4 {
            assert_eq!(*a.c(i - 1, 4, i - 1), qi(-(i as i64)));
        }
        assert!(a.is_leibniz());
    }

    #[test]
    fn nu1_constraint() {
        assert!(build(&FamilySpec::with_params("nu1", 5, &[("a2", qi(1))])).is_ok());
        let err =
            build(&FamilySpec::with_params("nu1", 5, &[("a2", qi(2))])).unwrap_err();
        assert!(matches!(err, CatalogError::BadParams(_)));
    }

    #[test]
    fn unknown_family_and_params() {
        assert!(build(&FamilySpec::plain("nope", 4)).is_err());
        assert!(build(&FamilySpec::with_params("NF", 4, &[("x", qi(1))])).is_err());
        assert!(build(&FamilySpec::plain("F1graded", 2)).is_err());
    }

    #[test]
    fn mu35_non_leibniz_parameters() {
        // c1 = 1 with a2 = 1 violates c1 a_k = 0
        let a = build(&FamilySpec::with_params(
            "mu35",
            5,
            &[("c1", qi(1)), ("a2", qi(1))],
        ))
        .unwrap();
        assert!(!a.is_leibniz());
        // b4 = 1 alone satisfies every constraint
        let b = build(&FamilySpec::with_params("mu35", 5, &[("b4", qi(1))])).unwrap();
        assert!(b.is_leibniz());
    }

    #[test]
    fn graded_families_are_filiform() {
        for id in ["F1graded", "F2graded", "F3graded"] {
            let a = build(&FamilySpec::plain(id, 6)).unwrap();
            assert!(a.is_filiform(), "{id}");
            assert!(a.is_naturally_graded_witness().unwrap(), "{id}");
        }
    }
}
