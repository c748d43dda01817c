//! Exact multivariate Laurent polynomials over `Z` in the variables `Y[s,l]`.
//!
//! A [`LaurentPoly`] is a finite map from [`Monomial`]s to non-zero
//! big-integer coefficients. Monomials are totally ordered by descending
//! graded-lexicographic order (total degree first, then lexicographic on the
//! exponent vector with variables ordered by `(s, l)`); this order fixes the
//! canonical text and JSON forms.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("variable Y[{s},{l}] is outside the ambient range (m = {m}, r = {r})")]
    OutOfRange { s: i64, l: i64, m: u32, r: u32 },
    #[error("no value assigned to Y[{0},{1}]")]
    MissingAssignment(u32, u32),
    #[error("Y[{0},{1}] is assigned zero")]
    ZeroValue(u32, u32),
    #[error("cannot parse polynomial at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// The variable `Y[s,l]`: cycle `s`, letter `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VarIndex {
    pub s: u32,
    pub l: u32,
}

impl VarIndex {
    pub const fn new(s: u32, l: u32) -> Self {
        VarIndex { s, l }
    }
}

impl fmt::Display for VarIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y[{},{}]", self.s, self.l)
    }
}

/// Ambient variable range `1 <= s <= m`, `1 <= l <= r`.
///
/// References to `Y[s,0]` and `Y[s,r+1]` resolve to the constant `1`; any
/// other reference outside the range is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarSpace {
    pub m: u32,
    pub r: u32,
}

impl VarSpace {
    pub fn new(m: u32, r: u32) -> Self {
        VarSpace { m, r }
    }

    pub fn y(&self, s: i64, l: i64) -> Result<Monomial, LaurentError> {
        self.y_pow(s, l, 1)
    }

    pub fn y_pow(&self, s: i64, l: i64, e: i32) -> Result<Monomial, LaurentError> {
        let (m, r) = (self.m as i64, self.r as i64);
        if s < 1 || s > m || l < 0 || l > r + 1 {
            return Err(LaurentError::OutOfRange { s, l, m: self.m, r: self.r });
        }
        if l == 0 || l == r + 1 {
            return Ok(Monomial::one());
        }
        Ok(Monomial::var_pow(VarIndex::new(s as u32, l as u32), e))
    }

    /// `Y[s1,l1] / Y[s2,l2]` with sentinel resolution on both factors.
    pub fn ratio(&self, num: (i64, i64), den: (i64, i64)) -> Result<Monomial, LaurentError> {
        Ok(&self.y(num.0, num.1)? * &self.y_pow(den.0, den.1, -1)?)
    }
}

/// A Laurent monomial `Π Y[s,l]^e`, stored sorted by variable with no zero
/// exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(VarIndex, i32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: VarIndex) -> Self {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: VarIndex, e: i32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { exps: vec![(v, e)] }
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs,
    /// combining repeats and dropping zero exponents.
    pub fn from_exponents<I: IntoIterator<Item = (VarIndex, i32)>>(it: I) -> Self {
        let mut acc: BTreeMap<VarIndex, i32> = BTreeMap::new();
        for (v, e) in it {
            *acc.entry(v).or_insert(0) += e;
        }
        Monomial { exps: acc.into_iter().filter(|&(_, e)| e != 0).collect() }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[(VarIndex, i32)] {
        &self.exps
    }

    pub fn exponent(&self, v: VarIndex) -> i32 {
        self.exps
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn inv(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect() }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial { exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect() }
    }

    pub fn variables(&self) -> impl Iterator<Item = VarIndex> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn eval(&self, point: &BTreeMap<VarIndex, BigRational>) -> Result<BigRational, LaurentError> {
        let mut acc = BigRational::one();
        for &(v, e) in &self.exps {
            let x = point.get(&v).ok_or(LaurentError::MissingAssignment(v.s, v.l))?;
            if x.is_zero() {
                return Err(LaurentError::ZeroValue(v.s, v.l));
            }
            let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
            acc = if e > 0 { acc * p } else { acc / p };
        }
        Ok(acc)
    }

    fn lex_cmp(&self, other: &Monomial) -> Ordering {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.exps, &other.exps);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, ea)), None) => return ea.cmp(&0),
                (None, Some(&(_, eb))) => return 0.cmp(&eb),
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(&eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

/// Graded-lexicographic: larger total degree is greater; ties are broken by
/// the first variable (in `(s, l)` order) whose exponents differ.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Mul<&'a Monomial> for &'a Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &'a Monomial) -> Monomial {
        let (a, b) = (&self.exps, &rhs.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { exps: out }
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        &self * &rhs
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (idx, &(v, e)) in self.exps.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A Laurent polynomial with big-integer coefficients in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn monomial(m: Monomial) -> Self {
        LaurentPoly::term(BigInt::one(), m)
    }

    pub fn term(c: BigInt, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        LaurentPoly::term(c.into(), Monomial::one())
    }

    pub fn var(v: VarIndex) -> Self {
        LaurentPoly::monomial(Monomial::var(v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, c: BigInt, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (k * m, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// The single monomial of a one-term polynomial with coefficient 1.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    /// Multiplicative inverse, which exists only for `±monomial`.
    pub fn inverse(&self) -> Option<LaurentPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if c.abs().is_one() {
            Some(LaurentPoly::term(c.clone(), m.inv()))
        } else {
            None
        }
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Sum of coefficients, i.e. the value at `Y ≡ 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn variables(&self) -> std::collections::BTreeSet<VarIndex> {
        self.terms.keys().flat_map(|m| m.variables()).collect()
    }

    pub fn eval(&self, point: &BTreeMap<VarIndex, BigRational>) -> Result<BigRational, LaurentError> {
        if let Some((v, _)) = point.iter().find(|(_, x)| x.is_zero()) {
            return Err(LaurentError::ZeroValue(v.s, v.l));
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            acc += m.eval(point)? * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Deterministic text form, e.g. `2*Y[1,2]*Y[2,2]^-1 + 1*Y[3,2]^-1`.
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(PolyJson::from(self)).expect("polynomial JSON is always serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolyJson::from(self)).expect("polynomial JSON is always serializable")
    }

    pub fn from_json(s: &str) -> Result<LaurentPoly, LaurentError> {
        let pj: PolyJson = serde_json::from_str(s)
            .map_err(|e| LaurentError::Parse { pos: e.column(), msg: e.to_string() })?;
        pj.try_into()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Parser { src: s, pos: 0 }.poly()
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, LaurentError> {
        Err(LaurentError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), LaurentError> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(format!("expected `{tok}`"))
        }
    }

    fn integer(&mut self) -> Result<&str, LaurentError> {
        let start = self.pos;
        let rest = self.rest();
        let mut len = 0;
        if rest.starts_with('-') {
            len = 1;
        }
        len += rest[len..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 || &rest[..len] == "-" {
            return self.err("expected integer");
        }
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn small<T: FromStr>(&mut self) -> Result<T, LaurentError> {
        let tok = self.integer()?.to_string();
        match tok.parse() {
            Ok(v) => Ok(v),
            Err(_) => self.err(format!("integer `{tok}` out of range")),
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly, LaurentError> {
        if self.src == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut p = LaurentPoly::zero();
        loop {
            let c: BigInt = self.integer()?.parse().expect("digits parse as BigInt");
            let mut factors = Vec::new();
            while self.eat("*") {
                self.expect("Y[")?;
                let s: u32 = self.small()?;
                self.expect(",")?;
                let l: u32 = self.small()?;
                self.expect("]")?;
                let e: i32 = if self.eat("^") { self.small()? } else { 1 };
                factors.push((VarIndex::new(s, l), e));
            }
            p.add_term(c, Monomial::from_exponents(factors));
            if self.pos == self.src.len() {
                return Ok(p);
            }
            self.expect(" + ")?;
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exps: Vec<(u32, u32, i32)>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        PolyJson {
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    coeff: c.to_string(),
                    exps: m.exponents().iter().map(|&(v, e)| (v.s, v.l, e)).collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for LaurentPoly {
    type Error = LaurentError;

    fn try_from(pj: PolyJson) -> Result<Self, Self::Error> {
        let mut p = LaurentPoly::zero();
        for t in pj.terms {
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| LaurentError::Parse { pos: 0, msg: format!("bad coefficient `{}`", t.coeff) })?;
            p.add_term(c, Monomial::from_exponents(t.exps.into_iter().map(|(s, l, e)| (VarIndex::new(s, l), e))));
        }
        Ok(p)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::constant(1)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &'a LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(c.clone(), m.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (m, c) in rhs.terms {
            self.add_term(c, m);
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.clone().neg()
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += &(-rhs);
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ca * cb, ma * mb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        LaurentPoly::monomial(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(s: u32, l: u32) -> LaurentPoly {
        LaurentPoly::var(VarIndex::new(s, l))
    }

    fn yinv(s: u32, l: u32) -> LaurentPoly {
        LaurentPoly::monomial(Monomial::var_pow(VarIndex::new(s, l), -1))
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn add_doubles_equal_monomials() {
        let p = &y(1, 2) * &yinv(2, 2);
        let sum = &p + &p;
        assert_eq!(sum.num_terms(), 1);
        assert_eq!(sum.canonical_string(), "2*Y[1,2]*Y[2,2]^-1");
        assert_eq!(&p + &LaurentPoly::zero(), p);
    }

    #[test]
    fn add_disjoint_monomials() {
        let p = &yinv(3, 2) + &(&y(2, 1) * &yinv(2, 3));
        assert_eq!(p.num_terms(), 2);
        assert!(p.terms().all(|(_, c)| c.is_one()));
    }

    #[test]
    fn mul_cancels() {
        let cbar31 = yinv(3, 1);
        let cbar32 = &y(3, 1) * &yinv(3, 2);
        assert_eq!(&cbar31 * &cbar32, yinv(3, 2));
        assert_eq!(&y(1, 1) * &yinv(1, 1), LaurentPoly::one());
        let p = &y(1, 1) + &yinv(2, 3);
        assert_eq!(&p * &LaurentPoly::one(), p);
    }

    #[test]
    fn eval_rational() {
        let p = &yinv(2, 1) + &(&y(1, 1) * &yinv(1, 2));
        let point: BTreeMap<_, _> = [
            (VarIndex::new(2, 1), q(2, 1)),
            (VarIndex::new(1, 1), q(3, 1)),
            (VarIndex::new(1, 2), q(4, 1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(p.eval(&point).unwrap(), q(5, 4));
        assert_eq!(LaurentPoly::one().eval(&BTreeMap::new()).unwrap(), q(1, 1));
    }

    #[test]
    fn eval_errors() {
        let p = y(1, 1);
        assert_eq!(p.eval(&BTreeMap::new()), Err(LaurentError::MissingAssignment(1, 1)));
        let point: BTreeMap<_, _> = [(VarIndex::new(1, 1), q(0, 1))].into_iter().collect();
        assert_eq!(p.eval(&point), Err(LaurentError::ZeroValue(1, 1)));
    }

    #[test]
    fn canonical_zero_and_constant() {
        assert_eq!(LaurentPoly::zero().canonical_string(), "0");
        assert_eq!(LaurentPoly::constant(-3).canonical_string(), "-3");
        assert_eq!("0".parse::<LaurentPoly>().unwrap(), LaurentPoly::zero());
    }

    #[test]
    fn graded_lex_order() {
        // degree 1 before degree 0 before degree -1
        let p = &(&y(1, 1) + &LaurentPoly::one()) + &yinv(1, 1);
        assert_eq!(p.canonical_string(), "1*Y[1,1] + 1 + 1*Y[1,1]^-1");
        // same degree: Y[1,1] outranks Y[1,2]
        let p = &y(1, 2) + &y(1, 1);
        assert_eq!(p.canonical_string(), "1*Y[1,1] + 1*Y[1,2]");
    }

    #[test]
    fn sentinels_resolve_to_one() {
        let vs = VarSpace::new(3, 3);
        assert!(vs.y(2, 0).unwrap().is_one());
        assert!(vs.y(2, 4).unwrap().is_one());
        assert_eq!(vs.y(2, 3).unwrap(), Monomial::var(VarIndex::new(2, 3)));
        assert!(matches!(vs.y(0, 1), Err(LaurentError::OutOfRange { .. })));
        assert!(matches!(vs.y(4, 1), Err(LaurentError::OutOfRange { .. })));
        assert!(matches!(vs.y(1, 5), Err(LaurentError::OutOfRange { .. })));
        assert!(matches!(vs.y(1, -1), Err(LaurentError::OutOfRange { .. })));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("2*X[1,1]".parse::<LaurentPoly>().is_err());
        assert!("2*Y[1,1] +".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn json_shape() {
        let p = (&y(1, 2) * &yinv(2, 2)).scale(&BigInt::from(2));
        assert_eq!(p.to_json(), r#"{"terms":[{"coeff":"2","exps":[[1,2,1],[2,2,-1]]}]}"#);
        assert_eq!(LaurentPoly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn inverse_only_for_unit_monomials() {
        assert_eq!(y(1, 1).inverse(), Some(yinv(1, 1)));
        assert_eq!((-y(1, 1)).inverse(), Some(-yinv(1, 1)));
        assert_eq!(LaurentPoly::constant(2).inverse(), None);
        assert_eq!((&y(1, 1) + &y(1, 2)).inverse(), None);
    }
}
