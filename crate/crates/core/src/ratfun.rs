//! Univariate polynomials and rational functions in the parameter `t`
//! over the exact rationals. These are the matrix entries of degeneration
//! witnesses g_t; the field operations let the generic elimination kernels
//! invert g_t symbolically.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::field::{Field, Q};

/// Polynomial in t with rational coefficients, low degree first, no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: Q) -> Self {
        Poly::new(vec![c])
    }

    pub fn t() -> Self {
        Poly::new(vec![Q::zero(), Q::one()])
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    fn divmod(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let dd = d.coeffs.len() - 1;
        let lead = d.leading();
        let mut quo = vec![Q::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() >= d.coeffs.len() && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap().clone() / lead.clone();
            quo[k] = c.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                let v = rem[k + i].clone() - c.clone() * dc.clone();
                rem[k + i] = v;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quo), Poly::new(rem))
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let lead = a.leading();
            Poly::new(a.coeffs.into_iter().map(|c| c / lead.clone()).collect())
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| self.coeff(i) + rhs.coeff(i))
                .collect(),
        )
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.into_iter().map(Neg::neg).collect())
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::new(vec![]);
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = out[i + j].clone() + a.clone() * b.clone();
                out[i + j] = v;
            }
        }
        Poly::new(out)
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly { coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(Q::one())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "t")?,
                1 => write!(f, "{c}*t")?,
                _ if c.is_one() => write!(f, "t^{i}")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Reduced rational function num/den with monic denominator.
#[derive(Debug, Clone, PartialEq)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFun {
                num,
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.divmod(&g);
        let (den, _) = den.divmod(&g);
        let lead = den.leading();
        let norm = |p: Poly| {
            Poly::new(
                p.coeffs
                    .into_iter()
                    .map(|c| c / lead.clone())
                    .collect(),
            )
        };
        RatFun {
            num: norm(num),
            den: norm(den),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Q) -> Self {
        RatFun::from_poly(Poly::constant(c))
    }

    pub fn t() -> Self {
        RatFun::from_poly(Poly::t())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// A reduced fraction has a pole at 0 exactly when t divides the
    /// denominator.
    pub fn has_pole_at_zero(&self) -> bool {
        self.den.coeff(0).is_zero() && !self.is_zero()
    }

    pub fn value_at_zero(&self) -> Option<Q> {
        if self.has_pole_at_zero() {
            None
        } else {
            Some(self.num.coeff(0) / self.den.coeff(0))
        }
    }

    /// Evaluate at t = x; None at a pole of the reduced form.
    pub fn eval(&self, x: &Q) -> Option<Q> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().is_none_or(|d| d == 0) && self.den.is_one()
    }

    pub fn pow(&self, e: i64) -> RatFun {
        let mut acc = RatFun::one();
        let base = if e >= 0 {
            self.clone()
        } else {
            RatFun::new(self.den.clone(), self.num.clone())
        };
        for _ in 0..e.unsigned_abs() {
            acc = acc * base.clone();
        }
        acc
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        RatFun::new(
            self.num.clone() * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        self + (-rhs)
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        RatFun::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl Div for RatFun {
    type Output = RatFun;
    fn div(self, rhs: RatFun) -> RatFun {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFun::new(self.num * rhs.den, self.den * rhs.num)
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

// RatFun satisfies the Field bound used by the elimination kernels.
const _: () = {
    const fn assert_field<K: Field>() {}
    assert_field::<RatFun>()
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, qi};

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|c| qi(*c)).collect())
    }

    #[test]
    fn poly_gcd_is_monic() {
        // (t+1)(t+2) and (t+1)(t+3)
        let a = p(&[2, 3, 1]);
        let b = p(&[3, 4, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
    }

    #[test]
    fn ratfun_reduces() {
        // t^2 / t = t
        let r = RatFun::new(p(&[0, 0, 1]), p(&[0, 1]));
        assert_eq!(r, RatFun::t());
        assert!(!r.has_pole_at_zero());
        // 1/t has a pole at zero
        let inv = RatFun::new(p(&[1]), p(&[0, 1]));
        assert!(inv.has_pole_at_zero());
        assert_eq!(inv.value_at_zero(), None);
        assert_eq!(inv.eval(&q(1, 2)), Some(qi(2)));
    }

    #[test]
    fn field_arithmetic() {
        let t = RatFun::t();
        let one = RatFun::one();
        let r = (t.clone() + one.clone()) / t.clone();
        // (t+1)/t - 1/t = 1
        let s = r - one.clone() / t;
        assert_eq!(s, one);
    }

    #[test]
    fn pow_negative() {
        let t = RatFun::t();
        assert_eq!(t.pow(-2), RatFun::one() / (t.clone() * t));
    }
}
