//! Sparse multivariate polynomials over ℚ(i) in a declared set of parameters.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::gauss::GaussRat;
use crate::error::{Error, Result};

/// The ordered parameter list of a polynomial ring. Order fixes both the
/// exponent-vector layout and the graded-lex printing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamSet {
    names: Vec<String>,
}

impl ParamSet {
    pub fn new<I, T>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for name in names {
            let name = name.into();
            if !is_ident(&name) || name == "i" {
                return Err(Error::Parse { input: name, reason: "not a parameter name".into() });
            }
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateParam(name));
            }
            out.push(name);
        }
        Ok(Arc::new(Self { names: out }))
    }

    pub fn empty() -> Arc<Self> {
        Arc::new(Self { names: Vec::new() })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The polynomial consisting of the single parameter `name`.
    pub fn var(self: &Arc<Self>, name: &str) -> Result<Poly> {
        let idx = self.index_of(name).ok_or_else(|| Error::UnknownParam(name.to_string()))?;
        let mut exps = vec![0; self.len()];
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(exps), GaussRat::one());
        Ok(Poly { ring: Some(self.clone()), terms })
    }

    pub(crate) fn joined(&self) -> String {
        self.names.join(", ")
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Exponent vector, graded lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Monomial(Vec<u32>);

impl Monomial {
    fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn is_const(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with Gaussian-rational coefficients.
///
/// Constant polynomials carry no ring, so they mix freely with polynomials of
/// any parameter set and compare equal to the corresponding `GaussRat`. A
/// non-constant polynomial remembers its `ParamSet`; combining polynomials of
/// two different sets is an error (the checked methods) or a panic (the
/// operator overloads).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: Option<Arc<ParamSet>>,
    terms: BTreeMap<Monomial, GaussRat>,
}

fn join_rings(
    a: &Option<Arc<ParamSet>>,
    b: &Option<Arc<ParamSet>>,
) -> Result<Option<Arc<ParamSet>>> {
    match (a, b) {
        (None, None) => Ok(None),
        (Some(r), None) | (None, Some(r)) => Ok(Some(r.clone())),
        (Some(x), Some(y)) => {
            if Arc::ptr_eq(x, y) || x == y {
                Ok(Some(x.clone()))
            } else {
                Err(Error::RingMismatch { left: x.joined(), right: y.joined() })
            }
        }
    }
}

impl Poly {
    pub fn constant(c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        Poly { ring: None, terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussRat::from_int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::constant(GaussRat::ratio(num, den))
    }

    pub fn ring(&self) -> Option<&Arc<ParamSet>> {
        self.ring.as_ref()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.ring.is_none()
    }

    /// The value of a degree-0 polynomial.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.values().next().cloned().unwrap_or_else(GaussRat::zero))
    }

    /// Names of the parameters that actually occur.
    pub fn params(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        if let Some(ring) = &self.ring {
            for m in self.terms.keys() {
                for (i, &e) in m.0.iter().enumerate() {
                    if e > 0 {
                        out.insert(ring.names[i].clone());
                    }
                }
            }
        }
        out
    }

    /// Terms keyed by the ring of `ring`, lifting constants to full-length exponent vectors.
    fn terms_in(&self, ring: &Option<Arc<ParamSet>>) -> BTreeMap<Monomial, GaussRat> {
        match (ring, &self.ring) {
            (Some(r), None) => self
                .terms
                .values()
                .map(|c| (Monomial(vec![0; r.len()]), c.clone()))
                .collect(),
            _ => self.terms.clone(),
        }
    }

    fn normalized(ring: Option<Arc<ParamSet>>, mut terms: BTreeMap<Monomial, GaussRat>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        if terms.keys().all(Monomial::is_const) {
            let c = terms.into_values().next();
            return Poly::constant(c.unwrap_or_else(GaussRat::zero));
        }
        Poly { ring, terms }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let ring = join_rings(&self.ring, &rhs.ring)?;
        let mut terms = self.terms_in(&ring);
        for (m, c) in rhs.terms_in(&ring) {
            let e = terms.entry(m).or_insert_with(GaussRat::zero);
            *e = e.clone() + c;
        }
        Ok(Self::normalized(ring, terms))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&-rhs.clone())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let ring = join_rings(&self.ring, &rhs.ring)?;
        let a = self.terms_in(&ring);
        let b = rhs.terms_in(&ring);
        let mut terms: BTreeMap<Monomial, GaussRat> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let e = terms.entry(ma.mul(mb)).or_insert_with(GaussRat::zero);
                *e = e.clone() + ca.clone() * cb.clone();
            }
        }
        Ok(Self::normalized(ring, terms))
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c.clone())).collect();
        Self::normalized(self.ring.clone(), terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    /// Exact quotient by a single nonzero term `c·m`, when every term of
    /// `self` is divisible by `m`. General polynomial division is not
    /// supported and yields `InexactDivision`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        if d.terms.len() != 1 {
            return Err(Error::InexactDivision);
        }
        let ring = join_rings(&self.ring, &d.ring)?;
        let (dm, dc) = d.terms_in(&ring).into_iter().next().expect("one term");
        let inv = dc.checked_inv()?;
        let mut terms = BTreeMap::new();
        for (m, c) in self.terms_in(&ring) {
            if !dm.divides(&m) {
                return Err(Error::InexactDivision);
            }
            let q = Monomial(m.0.iter().zip(&dm.0).map(|(a, b)| a - b).collect());
            terms.insert(q, c * inv.clone());
        }
        Ok(Self::normalized(ring, terms))
    }

    /// Full evaluation; every occurring parameter must be assigned.
    pub fn eval(&self, assignment: &BTreeMap<String, GaussRat>) -> Result<GaussRat> {
        let Some(ring) = &self.ring else {
            return Ok(self.as_constant().expect("constant"));
        };
        let mut values = Vec::with_capacity(ring.len());
        for (i, name) in ring.names.iter().enumerate() {
            let used = self.terms.keys().any(|m| m.0[i] > 0);
            match assignment.get(name) {
                Some(v) => values.push(v.clone()),
                None if used => return Err(Error::MissingParam(name.clone())),
                None => values.push(GaussRat::zero()),
            }
        }
        let mut acc = GaussRat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t * v.clone();
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Simultaneous substitution of polynomials for parameters; unassigned
    /// parameters stay symbolic.
    pub fn substitute(&self, assignment: &BTreeMap<String, Poly>) -> Result<Self> {
        let Some(ring) = &self.ring else {
            return Ok(self.clone());
        };
        let mut vars = Vec::with_capacity(ring.len());
        for name in &ring.names {
            vars.push(match assignment.get(name) {
                Some(p) => p.clone(),
                None => ring.var(name)?,
            });
        }
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for (v, &e) in vars.iter().zip(&m.0) {
                for _ in 0..e {
                    t = t.checked_mul(v)?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// Total degree in the named parameter.
    pub fn degree_in(&self, name: &str) -> u32 {
        let Some(idx) = self.ring.as_ref().and_then(|r| r.index_of(name)) else {
            return 0;
        };
        self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0)
    }
}

/// `poly_arith` kinds; polynomial division is not part of the contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(p: &Poly, q: &Poly, op: PolyOp) -> Result<Poly> {
    match op {
        PolyOp::Add => p.checked_add(q),
        PolyOp::Sub => p.checked_sub(q),
        PolyOp::Mul => p.checked_mul(q),
    }
}

pub fn poly_eval(p: &Poly, assignment: &BTreeMap<String, GaussRat>) -> Result<GaussRat> {
    p.eval(assignment)
}

pub fn poly_is_zero(p: &Poly) -> bool {
    p.terms.is_empty()
}

impl From<GaussRat> for Poly {
    fn from(c: GaussRat) -> Self {
        Poly::constant(c)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        self.checked_add(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self.checked_sub(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        self.checked_mul(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let terms = self.terms.into_iter().map(|(m, c)| (m, -c)).collect();
        Poly { ring: self.ring, terms }
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly { ring: None, terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(GaussRat::one())
    }
}

fn fmt_monomial(ring: &ParamSet, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (name, &e) in ring.names.iter().zip(&m.0) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

/// One signed term `c*m` with a real or purely imaginary coefficient `c`.
fn fmt_term(c: &GaussRat, mono: &str) -> String {
    let s = c.to_string();
    match s.as_str() {
        "1" => mono.to_string(),
        "-1" => format!("-{mono}"),
        _ => format!("{s}*{mono}"),
    }
}

impl fmt::Display for Poly {
    /// Compact grammar form, highest graded-lex term first: `2*alpha2+1`,
    /// `lambda^2-theta^2`. Complex coefficients of non-constant monomials are
    /// split into a real and an imaginary term so the output re-parses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(ring) = &self.ring else {
            return write!(f, "{}", self.as_constant().expect("constant"));
        };
        let mut pieces: Vec<String> = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            if m.is_const() {
                if c.re.is_zero() || c.im.is_zero() {
                    pieces.push(c.to_string());
                } else {
                    pieces.push(GaussRat::real(c.re.clone()).to_string());
                    pieces.push(GaussRat::new(Zero::zero(), c.im.clone()).to_string());
                }
                continue;
            }
            let mono = fmt_monomial(ring, m);
            if !c.re.is_zero() {
                pieces.push(fmt_term(&GaussRat::real(c.re.clone()), &mono));
            }
            if !c.im.is_zero() {
                pieces.push(fmt_term(&GaussRat::new(Zero::zero(), c.im.clone()), &mono));
            }
        }
        let mut out = String::new();
        for (k, p) in pieces.iter().enumerate() {
            if k > 0 && !p.starts_with('-') {
                out.push('+');
            }
            out.push_str(p);
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<ParamSet> {
        ParamSet::new(["lambda", "theta", "alpha2"]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let l = r.var("lambda").unwrap();
        let t = r.var("theta").unwrap();
        let p = poly_arith(&(l.clone() + t.clone()), &(l.clone() - t.clone()), PolyOp::Mul).unwrap();
        assert_eq!(p, l.pow(2) - t.pow(2));
        assert_eq!(p.to_string(), "lambda^2-theta^2");
    }

    #[test]
    fn adding_zero_is_identity() {
        let r = ring();
        let p = r.var("theta").unwrap() * Poly::from_int(3) + Poly::one();
        assert_eq!(poly_arith(&p, &Poly::zero(), PolyOp::Add).unwrap(), p);
    }

    #[test]
    fn square_of_affine() {
        let r = ring();
        let a = Poly::from_int(2) * r.var("alpha2").unwrap() + Poly::one();
        let sq = poly_arith(&a, &a, PolyOp::Mul).unwrap();
        let a2 = r.var("alpha2").unwrap();
        assert_eq!(sq, Poly::from_int(4) * a2.pow(2) + Poly::from_int(4) * a2 + Poly::one());
        assert_eq!(sq.to_string(), "4*alpha2^2+4*alpha2+1");
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = ParamSet::new(["lambda"]).unwrap().var("lambda").unwrap();
        let b = ParamSet::new(["theta"]).unwrap().var("theta").unwrap();
        assert!(matches!(poly_arith(&a, &b, PolyOp::Add), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn evaluation() {
        let r = ring();
        let p = r.var("lambda").unwrap().pow(2) - r.var("theta").unwrap().pow(2);
        let mut s = BTreeMap::new();
        s.insert("lambda".to_string(), GaussRat::from_int(2));
        s.insert("theta".to_string(), GaussRat::from_int(1));
        assert_eq!(poly_eval(&p, &s).unwrap(), GaussRat::from_int(3));

        let c = Poly::constant(GaussRat::ratio(7, 3));
        assert_eq!(poly_eval(&c, &BTreeMap::new()).unwrap(), GaussRat::ratio(7, 3));

        let res = Poly::from_int(2) * r.var("alpha2").unwrap() + Poly::one();
        let mut s = BTreeMap::new();
        s.insert("alpha2".to_string(), GaussRat::ratio(-1, 2));
        assert_eq!(poly_eval(&res, &s).unwrap(), GaussRat::zero());
    }

    #[test]
    fn missing_parameter_is_named() {
        let r = ring();
        let p = r.var("theta").unwrap();
        assert_eq!(poly_eval(&p, &BTreeMap::new()), Err(Error::MissingParam("theta".into())));
    }

    #[test]
    fn zero_tests() {
        let r = ring();
        let l = r.var("lambda").unwrap();
        let t = r.var("theta").unwrap();
        let p = l.clone() * Poly::from_int(5) + t.clone();
        assert!(poly_is_zero(&(p.clone() - p)));
        let res = Poly::from_int(2) * r.var("alpha2").unwrap() + Poly::one();
        assert!(!poly_is_zero(&res));
        let q = (l.clone() + t.clone()) * (l.clone() - t.clone()) - l.pow(2) + t.pow(2);
        assert!(poly_is_zero(&q));
    }

    #[test]
    fn constants_round_trip_and_drop_ring() {
        let r = ring();
        let l = r.var("lambda").unwrap();
        let c = (l.clone() + Poly::from_int(2)) - l;
        assert!(c.is_constant());
        assert_eq!(c.as_constant(), Some(GaussRat::from_int(2)));
        assert_eq!(c, Poly::from_int(2));
    }

    #[test]
    fn single_term_division() {
        let r = ring();
        let t = r.var("theta").unwrap();
        let l = r.var("lambda").unwrap();
        let p = Poly::from_int(3) * t.clone() * l.clone() + t.pow(2);
        assert_eq!(p.div_exact(&t).unwrap(), Poly::from_int(3) * l.clone() + t.clone());
        assert_eq!(l.div_exact(&t), Err(Error::InexactDivision));
        assert_eq!(l.div_exact(&Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn substitution_composes() {
        let r = ring();
        let l = r.var("lambda").unwrap();
        let t = r.var("theta").unwrap();
        let p = l.clone() * l.clone() + t.clone();
        let mut m = BTreeMap::new();
        m.insert("lambda".to_string(), t.clone() + Poly::one());
        assert_eq!(p.substitute(&m).unwrap(), t.pow(2) + Poly::from_int(3) * t + Poly::one());
    }

    #[test]
    fn complex_coefficients_print_split() {
        let r = ring();
        let c = Poly::constant(GaussRat::from_int(1) + GaussRat::i() * GaussRat::from_int(2));
        let p = c.clone() * r.var("theta").unwrap() + c;
        assert_eq!(p.to_string(), "theta+2i*theta+1+2i");
    }
}
