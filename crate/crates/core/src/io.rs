//! JSON documents for algebras, cochains and degeneration witnesses.
//!
//! All numbers travel as exact strings: rationals as "p/q" (or "p"),
//! rational functions as expressions in `t` like "1/t" or "(t+1)/t^2".
//! Decimals are rejected; nothing is ever emitted in floating point.

use std::collections::BTreeMap;
use std::str::FromStr;

use num::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::Algebra;
use crate::cohomology::Cochain;
use crate::field::Q;
use crate::linalg::Matrix;
use crate::ratfun::{Poly, RatFun};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error, PartialEq)]
pub enum IoError {
    #[error("cannot parse rational `{0}` (use \"p/q\" or \"p\"; decimals are not accepted)")]
    BadRational(String),
    #[error("cannot parse rational function: {0}")]
    BadExpression(String),
    #[error("index out of range: {0}")]
    BadIndex(String),
    #[error("unsupported schema version `{0}`")]
    BadSchema(String),
    #[error("malformed document: {0}")]
    BadDocument(String),
}

/// Exact rational from "p/q" or "p".
pub fn parse_rational(s: &str) -> Result<Q, IoError> {
    let bad = || IoError::BadRational(s.to_string());
    let mut parts = s.splitn(2, '/');
    let num = parts.next().ok_or_else(bad)?.trim();
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    match parts.next() {
        None => Ok(Q::from_integer(num)),
        Some(den) => {
            let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if den == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Q::new(num, den))
        }
    }
}

/// "p/q", or "p" when the denominator is one.
pub fn format_rational(r: &Q) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A serialized algebra: 1-based indices, absent entries are zero.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AlgebraDocument {
    pub schema_version: String,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<String>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    /// map from k (as string) to the rational coefficient "p/q"
    pub coeffs: BTreeMap<String, String>,
}

pub fn algebra_to_doc(a: &Algebra) -> AlgebraDocument {
    let n = a.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut coeffs = BTreeMap::new();
            for k in 0..n {
                let c = a.c(i, j, k);
                if !num_traits::Zero::is_zero(c) {
                    coeffs.insert((k + 1).to_string(), format_rational(c));
                }
            }
            if !coeffs.is_empty() {
                brackets.push(BracketEntry {
                    i: i + 1,
                    j: j + 1,
                    coeffs,
                });
            }
        }
    }
    AlgebraDocument {
        schema_version: SCHEMA_VERSION.to_string(),
        dim: n,
        label: a.label().map(str::to_string),
        brackets,
    }
}

fn check_schema(v: &str) -> Result<(), IoError> {
    if v == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(IoError::BadSchema(v.to_string()))
    }
}

pub fn doc_to_algebra(doc: &AlgebraDocument) -> Result<Algebra, IoError> {
    check_schema(&doc.schema_version)?;
    let n = doc.dim;
    let mut entries: Vec<((usize, usize, usize), Q)> = Vec::new();
    for b in &doc.brackets {
        for (k, v) in &b.coeffs {
            let k: usize = k
                .parse()
                .map_err(|_| IoError::BadIndex(k.clone()))?;
            for idx in [b.i, b.j, k] {
                if !(1..=n).contains(&idx) {
                    return Err(IoError::BadIndex(format!(
                        "({}, {}, {k}) in dimension {n}",
                        b.i, b.j
                    )));
                }
            }
            entries.push(((b.i, b.j, k), parse_rational(v)?));
        }
    }
    let mut a = Algebra::from_table(n, &entries);
    if let Some(l) = &doc.label {
        a = a.with_label(l.clone());
    }
    Ok(a)
}

/// A serialized cochain: 1-based argument tuples, absent entries zero.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CochainDocument {
    pub schema_version: String,
    pub dim: usize,
    pub degree: usize,
    pub entries: Vec<CochainEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CochainEntry {
    pub args: Vec<usize>,
    pub coeffs: BTreeMap<String, String>,
}

pub fn cochain_to_doc(f: &Cochain) -> CochainDocument {
    let n = f.dim();
    let m = f.degree();
    let mut entries = Vec::new();
    let mut args = vec![0usize; m];
    loop {
        let mut coeffs = BTreeMap::new();
        for k in 0..n {
            let c = f.coeff(&args, k);
            if !num_traits::Zero::is_zero(c) {
                coeffs.insert((k + 1).to_string(), format_rational(c));
            }
        }
        if !coeffs.is_empty() {
            entries.push(CochainEntry {
                args: args.iter().map(|a| a + 1).collect(),
                coeffs,
            });
        }
        let mut pos = m;
        loop {
            if pos == 0 {
                return CochainDocument {
                    schema_version: SCHEMA_VERSION.to_string(),
                    dim: n,
                    degree: m,
                    entries,
                };
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

pub fn doc_to_cochain(doc: &CochainDocument) -> Result<Cochain, IoError> {
    check_schema(&doc.schema_version)?;
    let n = doc.dim;
    if doc.degree == 0 {
        return Err(IoError::BadDocument("degree must be at least 1".into()));
    }
    let mut f = Cochain::zero(doc.degree, n);
    for e in &doc.entries {
        if e.args.len() != doc.degree {
            return Err(IoError::BadDocument(format!(
                "argument tuple {:?} does not match degree {}",
                e.args, doc.degree
            )));
        }
        if e.args.iter().any(|a| !(1..=n).contains(a)) {
            return Err(IoError::BadIndex(format!("{:?}", e.args)));
        }
        let args0: Vec<usize> = e.args.iter().map(|a| a - 1).collect();
        for (k, v) in &e.coeffs {
            let k: usize = k.parse().map_err(|_| IoError::BadIndex(k.clone()))?;
            if !(1..=n).contains(&k) {
                return Err(IoError::BadIndex(k.to_string()));
            }
            f.set_coeff(&args0, k - 1, parse_rational(v)?);
        }
    }
    Ok(f)
}

/// A degeneration witness: the dense n x n matrix of rational-function
/// expressions, row-major, acting on coordinates.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct WitnessDocument {
    pub schema_version: String,
    pub dim: usize,
    pub entries: Vec<Vec<String>>,
}

pub fn doc_to_witness(doc: &WitnessDocument) -> Result<Matrix<RatFun>, IoError> {
    check_schema(&doc.schema_version)?;
    let n = doc.dim;
    if doc.entries.len() != n || doc.entries.iter().any(|r| r.len() != n) {
        return Err(IoError::BadDocument(format!(
            "witness matrix must be {n} x {n}"
        )));
    }
    let mut rows = Vec::with_capacity(n);
    for row in &doc.entries {
        let mut parsed = Vec::with_capacity(n);
        for e in row {
            parsed.push(parse_ratfun(e)?);
        }
        rows.push(parsed);
    }
    Ok(Matrix::from_dense(rows))
}

/// Parse a rational-function expression in `t`: integer and "p/q"
/// literals, the symbol t, `+ - * / ^`, parentheses. `^` takes an
/// integer exponent, possibly negative.
pub fn parse_ratfun(s: &str) -> Result<RatFun, IoError> {
    let mut p = ExprParser {
        src: s.as_bytes(),
        pos: 0,
        input: s,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
    input: &'a str,
}

impl ExprParser<'_> {
    fn err(&self, msg: &str) -> IoError {
        IoError::BadExpression(format!("{msg} at byte {} in `{}`", self.pos, self.input))
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos) == Some(&b' ') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFun, IoError> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc + rhs } else { acc - rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFun, IoError> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            if op == b'/' {
                if num_traits::Zero::is_zero(&rhs) {
                    return Err(self.err("division by zero"));
                }
                acc = acc / rhs;
            } else {
                acc = acc * rhs;
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFun, IoError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFun, IoError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()? as i64;
            let e = if neg { -e } else { e };
            if e < 0 && num_traits::Zero::is_zero(&base) {
                return Err(self.err("zero to a negative power"));
            }
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RatFun, IoError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b't') => {
                self.pos += 1;
                Ok(RatFun::t())
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RatFun::from_poly(Poly::constant(Q::from_integer(n.into()))))
            }
            Some(b'.') => Err(self.err("decimals are not accepted")),
            _ => Err(self.err("expected a value")),
        }
    }

    fn integer(&mut self) -> Result<u64, IoError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .src
            .get(self.pos)
            .is_some_and(u8::is_ascii_digit)
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        if self.src.get(self.pos) == Some(&b'.') {
            return Err(self.err("decimals are not accepted"));
        }
        self.input[start..self.pos]
            .parse()
            .map_err(|_| self.err("integer too large"))
    }
}

/// Format a rational function the witness grammar can re-parse.
pub fn format_ratfun(r: &RatFun) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, FamilySpec};
    use crate::field::{q, qi};
    use num_traits::Zero;

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("3/4").unwrap(), q(3, 4));
        assert_eq!(parse_rational("-7").unwrap(), qi(-7));
        assert_eq!(parse_rational("6/4").unwrap(), q(3, 2)); // reduced
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&q(-3, 2)), "-3/2");
        assert_eq!(format_rational(&qi(5)), "5");
    }

    #[test]
    fn algebra_document_round_trip() {
        for id in ["NF", "F1graded", "R", "nu2"] {
            let a = build(&FamilySpec::plain(id, 5)).unwrap();
            let doc = algebra_to_doc(&a);
            let json = serde_json::to_string(&doc).unwrap();
            let back: AlgebraDocument = serde_json::from_str(&json).unwrap();
            let b = doc_to_algebra(&back).unwrap();
            assert!(a.same_table(&b), "{id}");
            assert_eq!(a.label(), b.label());
        }
    }

    #[test]
    fn document_validation() {
        let mut doc = algebra_to_doc(&build(&FamilySpec::plain("NF", 3)).unwrap());
        doc.schema_version = "99".into();
        assert!(matches!(doc_to_algebra(&doc), Err(IoError::BadSchema(_))));
        let mut doc = algebra_to_doc(&build(&FamilySpec::plain("NF", 3)).unwrap());
        doc.brackets[0].i = 7;
        assert!(matches!(doc_to_algebra(&doc), Err(IoError::BadIndex(_))));
    }

    #[test]
    fn cochain_document_round_trip() {
        use crate::cohomology::{named_cochain, CochainLabel, LabeledFamily};
        let f = named_cochain(LabeledFamily::F1, 5, &CochainLabel::Xi1).unwrap();
        let doc = cochain_to_doc(&f);
        assert_eq!(doc.degree, 2);
        let back = doc_to_cochain(&doc).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn ratfun_expressions() {
        let t = RatFun::t;
        assert_eq!(parse_ratfun("t^2").unwrap(), t().pow(2));
        assert_eq!(parse_ratfun("1/t").unwrap(), t().pow(-1));
        assert_eq!(parse_ratfun("t^-2").unwrap(), t().pow(-2));
        assert_eq!(
            parse_ratfun("(t+1)/t").unwrap(),
            (t() + RatFun::constant(qi(1))) / t()
        );
        assert_eq!(parse_ratfun("-3/2*t").unwrap(), RatFun::constant(q(-3, 2)) * t());
        assert_eq!(parse_ratfun("0").unwrap(), RatFun::zero());
        assert_eq!(parse_ratfun(" 2 * ( t - 1 ) ").unwrap(),
            RatFun::constant(qi(2)) * (t() - RatFun::constant(qi(1))));
        assert!(parse_ratfun("0.5").is_err());
        assert!(parse_ratfun("t^1.5").is_err());
        assert!(parse_ratfun("1/0").is_err());
        assert!(parse_ratfun("t t").is_err());
        assert!(parse_ratfun("(t").is_err());
    }

    #[test]
    fn ratfun_display_reparses() {
        for s in ["t^2", "(t+1)/t", "1/t", "3/2", "t - 5"] {
            let v = parse_ratfun(s).unwrap();
            assert_eq!(parse_ratfun(&format_ratfun(&v)).unwrap(), v, "{s}");
        }
    }

    #[test]
    fn witness_document() {
        let doc = WitnessDocument {
            schema_version: SCHEMA_VERSION.into(),
            dim: 2,
            entries: vec![
                vec!["1".into(), "0".into()],
                vec!["0".into(), "t".into()],
            ],
        };
        let m = doc_to_witness(&doc).unwrap();
        assert_eq!(m.get(1, 1), RatFun::t());
        let bad = WitnessDocument {
            schema_version: SCHEMA_VERSION.into(),
            dim: 2,
            entries: vec![vec!["1".into()]],
        };
        assert!(matches!(doc_to_witness(&bad), Err(IoError::BadDocument(_))));
    }
}
