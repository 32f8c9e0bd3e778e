//! The finite chain ring R = F_q + u F_q with u^2 = 0, and its ring
//! automorphisms Theta_{theta,beta}(a + ub) = theta(a) + beta*theta(b)*u,
//! where theta is a power of the Frobenius and beta is a nonzero scalar.
//!
//! a + ub is a unit iff a != 0, and then (a + ub)^-1 = a^-1 - u a^-2 b.

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use std::fmt;
use std::sync::Arc;

/// An element a + u*b of R.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RElement {
    a: FieldElement,
    b: FieldElement,
}

impl RElement {
    pub fn new(a: FieldElement, b: FieldElement) -> Result<Self> {
        if !a.same_spec(&b) {
            return Err(Error::SpecMismatch);
        }
        Ok(RElement { a, b })
    }

    pub fn from_field(a: FieldElement) -> Self {
        let b = a.spec().zero();
        RElement { a, b }
    }

    /// u * b.
    pub fn u_times(b: FieldElement) -> Self {
        let a = b.spec().zero();
        RElement { a, b }
    }

    pub fn zero(spec: &Arc<FieldSpec>) -> Self {
        RElement {
            a: spec.zero(),
            b: spec.zero(),
        }
    }

    pub fn one(spec: &Arc<FieldSpec>) -> Self {
        RElement {
            a: spec.one(),
            b: spec.zero(),
        }
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }

    pub fn b(&self) -> &FieldElement {
        &self.b
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        self.a.spec()
    }

    pub fn same_spec(&self, other: &Self) -> bool {
        self.a.same_spec(&other.a)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Units are exactly the elements with nonzero field part.
    pub fn is_unit(&self) -> bool {
        !self.a.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        Ok(RElement {
            a: self.a.add(&rhs.a)?,
            b: self.b.add(&rhs.b)?,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        Ok(RElement {
            a: self.a.sub(&rhs.a)?,
            b: self.b.sub(&rhs.b)?,
        })
    }

    pub fn neg(&self) -> Self {
        RElement {
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }

    /// (a1 + ub1)(a2 + ub2) = a1 a2 + u (a1 b2 + b1 a2), since u^2 = 0.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        let a = self.a.mul(&rhs.a)?;
        let b = self.a.mul(&rhs.b)?.add(&self.b.mul(&rhs.a)?)?;
        Ok(RElement { a, b })
    }

    /// (a + ub)^-1 = a^-1 - u a^-2 b for a != 0.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotInvertible(format!(
                "{self} has nilpotent field part"
            )));
        }
        let a_inv = self.a.inverse()?;
        let b = a_inv.mul(&a_inv)?.mul(&self.b)?.neg();
        let inv = RElement { a: a_inv, b };
        debug_assert!(inv.mul(self).expect("same spec").is_one());
        Ok(inv)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = RElement::one(self.spec());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// All q^2 elements of R, field part varying slowest.
    pub fn all_elements(spec: &Arc<FieldSpec>) -> Result<Vec<Self>> {
        let field = spec.elements()?;
        let mut out = Vec::with_capacity(field.len() * field.len());
        for a in &field {
            for b in &field {
                out.push(RElement {
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
        Ok(out)
    }

    /// The (q-1) * q units of R.
    pub fn units(spec: &Arc<FieldSpec>) -> Result<Vec<Self>> {
        Ok(Self::all_elements(spec)?
            .into_iter()
            .filter(RElement::is_unit)
            .collect())
    }

    /// Parses `<a> + u*<b>` with either part optional, e.g. `1+u`, `u*w`,
    /// `w+1`, `1+u*(w+1)`, `-1`.
    pub fn parse(spec: &Arc<FieldSpec>, s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::ParseError("empty ring element".into()));
        }
        let mut acc = RElement::zero(spec);
        for (term, negate) in split_top_level_terms(&compact)? {
            let parsed = Self::parse_term(spec, &term)?;
            let parsed = if negate { parsed.neg() } else { parsed };
            acc = acc.add(&parsed)?;
        }
        Ok(acc)
    }

    fn parse_term(spec: &Arc<FieldSpec>, term: &str) -> Result<Self> {
        let stripped = strip_outer_parens(term);
        if stripped != term {
            return Self::parse(spec, stripped);
        }
        if term == "u" {
            return Ok(RElement::u_times(spec.one()));
        }
        if let Some(rest) = term.strip_prefix("u*") {
            let inner = strip_outer_parens(rest);
            return Ok(RElement::u_times(spec.parse_element(inner)?));
        }
        if let Some(rest) = term.strip_suffix("*u") {
            let inner = strip_outer_parens(rest);
            return Ok(RElement::u_times(spec.parse_element(inner)?));
        }
        if term.contains('u') {
            return Err(Error::ParseError(format!(
                "cannot parse u-part of term: {term}"
            )));
        }
        Ok(RElement::from_field(
            spec.parse_element(strip_outer_parens(term))?,
        ))
    }
}

fn strip_outer_parens(s: &str) -> &str {
    if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        // only strip if the parens actually match each other
        let mut depth = 0i32;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth < 0 && i < inner.len() - 1 {
                        return s;
                    }
                }
                _ => {}
            }
        }
        if depth == 0 {
            return inner;
        }
    }
    s
}

/// Splits on top-level + and - (outside parentheses), returning
/// (term, negated) pairs.
pub(crate) fn split_top_level_terms(s: &str) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut depth = 0i32;
    let mut first = true;
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::ParseError(format!("unbalanced parentheses: {s}")));
                }
                cur.push(c);
            }
            '+' | '-' if depth == 0 => {
                if first && cur.is_empty() {
                    neg = c == '-';
                } else {
                    if cur.is_empty() {
                        return Err(Error::ParseError(format!("dangling sign in: {s}")));
                    }
                    out.push((std::mem::take(&mut cur), neg));
                    neg = c == '-';
                }
            }
            _ => cur.push(c),
        }
        first = false;
    }
    if depth != 0 {
        return Err(Error::ParseError(format!("unbalanced parentheses: {s}")));
    }
    if cur.is_empty() {
        return Err(Error::ParseError(format!("dangling sign in: {s}")));
    }
    out.push((cur, neg));
    Ok(out)
}

impl fmt::Display for RElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if !self.a.is_zero() {
            parts.push(self.a.to_string());
        }
        if !self.b.is_zero() {
            if self.b.is_one() {
                parts.push("u".to_string());
            } else {
                let b = self.b.to_string();
                if b.contains('+') || b.contains('-') {
                    parts.push(format!("u*({b})"));
                } else {
                    parts.push(format!("u*{b}"));
                }
            }
        }
        write!(f, "{}", parts.join("+"))
    }
}

/// Theta_{theta,beta}: a + ub -> theta(a) + beta*theta(b)*u with
/// theta = Frobenius^r. The order (least e >= 1 with Theta^e = id) is
/// detected numerically on the generating set {w, u} and cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingAutomorphism {
    r: usize,
    beta: FieldElement,
    order: usize,
}

impl RingAutomorphism {
    pub fn new(r: usize, beta: FieldElement) -> Result<Self> {
        if beta.is_zero() {
            return Err(Error::InvalidParameter("beta must be nonzero".into()));
        }
        let spec = Arc::clone(beta.spec());
        let r = r % spec.m();
        let mut aut = RingAutomorphism { r, beta, order: 0 };
        aut.order = aut.detect_order(&spec)?;
        Ok(aut)
    }

    fn detect_order(&self, spec: &Arc<FieldSpec>) -> Result<usize> {
        let gen_w = RElement::from_field(spec.gen());
        let gen_u = RElement::u_times(spec.one());
        let (mut w, mut u) = (gen_w.clone(), gen_u.clone());
        let cap = spec.m() * (spec.q()? as usize);
        for e in 1..=cap {
            w = self.apply(&w)?;
            u = self.apply(&u)?;
            if w == gen_w && u == gen_u {
                return Ok(e);
            }
        }
        Err(Error::Internal("automorphism order not found".into()))
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn beta(&self) -> &FieldElement {
        &self.beta
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        self.beta.spec()
    }

    pub fn apply(&self, x: &RElement) -> Result<RElement> {
        if !x.a.same_spec(&self.beta) {
            return Err(Error::SpecMismatch);
        }
        let a = x.a.frobenius(self.r);
        let b = self.beta.mul(&x.b.frobenius(self.r))?;
        RElement::new(a, b)
    }

    /// Theta^k for k >= 0 (reduced mod the order).
    pub fn apply_pow(&self, x: &RElement, k: usize) -> Result<RElement> {
        let mut acc = x.clone();
        for _ in 0..(k % self.order) {
            acc = self.apply(&acc)?;
        }
        Ok(acc)
    }

    /// Theta^k for signed k, using Theta^-1 = Theta^(order-1).
    pub fn apply_pow_signed(&self, x: &RElement, k: i64) -> Result<RElement> {
        self.apply_pow(x, self.normalize_exponent(k))
    }

    /// Reduces a signed exponent to [0, order).
    pub fn normalize_exponent(&self, k: i64) -> usize {
        let e = self.order as i64;
        (((k % e) + e) % e) as usize
    }

    /// Is x fixed by Theta (i.e. in the fixed subring R^Theta)?
    pub fn fixes(&self, x: &RElement) -> Result<bool> {
        Ok(self.apply(x)? == *x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Arc<FieldSpec> {
        FieldSpec::new(2, 2, vec![1, 1, 1]).unwrap()
    }

    fn f5() -> Arc<FieldSpec> {
        FieldSpec::new(5, 1, vec![0, 1]).unwrap()
    }

    fn r(spec: &Arc<FieldSpec>, s: &str) -> RElement {
        RElement::parse(spec, s).unwrap()
    }

    #[test]
    fn one_plus_u_squares_to_one() {
        let f = f4();
        let e = r(&f, "1+u");
        assert!(e.mul(&e).unwrap().is_one());
        let x = r(&f, "w+u*(w+1)");
        assert_eq!(x.mul(&RElement::one(&f)).unwrap(), x);
        let u = r(&f, "u");
        assert!(u.mul(&u).unwrap().is_zero());
    }

    #[test]
    fn inverses() {
        let f = f4();
        assert_eq!(r(&f, "1+u").inverse().unwrap(), r(&f, "1+u"));
        assert!(RElement::one(&f).inverse().unwrap().is_one());
        let f5 = f5();
        let x = r(&f5, "2+u");
        let inv = x.inverse().unwrap();
        assert_eq!(inv, r(&f5, "3+u"));
        assert!(x.mul(&inv).unwrap().is_one());
        assert!(matches!(r(&f, "u").inverse(), Err(Error::NotInvertible(_))));
        assert!(RElement::zero(&f).inverse().is_err());
    }

    #[test]
    fn unit_census_q4() {
        let f = f4();
        assert_eq!(RElement::all_elements(&f).unwrap().len(), 16);
        assert_eq!(RElement::units(&f).unwrap().len(), 12);
    }

    #[test]
    fn frobenius_twist_acts_on_both_parts() {
        let f = f4();
        let theta = RingAutomorphism::new(1, f.one()).unwrap();
        assert_eq!(theta.apply(&r(&f, "w+u")).unwrap(), r(&f, "w+1+u"));
        // beta = 1 fixes the prime-subfield pairs
        assert!(theta.fixes(&r(&f, "1+u")).unwrap());
        assert!(!theta.fixes(&r(&f, "w")).unwrap());
        assert!(theta.fixes(&RElement::zero(&f)).unwrap());
        // beta = w scales the u-part
        let scale = RingAutomorphism::new(0, f.gen()).unwrap();
        assert_eq!(scale.apply(&r(&f, "u")).unwrap(), r(&f, "u*w"));
    }

    #[test]
    fn automorphism_orders() {
        let f = f4();
        assert_eq!(RingAutomorphism::new(1, f.one()).unwrap().order(), 2);
        assert_eq!(RingAutomorphism::new(0, f.one()).unwrap().order(), 1);
        assert_eq!(RingAutomorphism::new(0, f.gen()).unwrap().order(), 3);
        assert!(RingAutomorphism::new(1, f.zero()).is_err());
    }

    #[test]
    fn automorphism_is_multiplicative_exhaustively() {
        let f = f4();
        let theta = RingAutomorphism::new(1, f.one()).unwrap();
        let all = RElement::all_elements(&f).unwrap();
        for x in &all {
            for y in &all {
                let lhs = theta.apply(&x.mul(y).unwrap()).unwrap();
                let rhs = theta
                    .apply(x)
                    .unwrap()
                    .mul(&theta.apply(y).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
                let lhs = theta.apply(&x.add(y).unwrap()).unwrap();
                let rhs = theta
                    .apply(x)
                    .unwrap()
                    .add(&theta.apply(y).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn signed_exponents() {
        let f = f4();
        let theta = RingAutomorphism::new(1, f.one()).unwrap();
        let x = r(&f, "w+u");
        assert_eq!(
            theta.apply_pow_signed(&x, -1).unwrap(),
            theta.apply(&x).unwrap()
        );
        assert_eq!(theta.apply_pow_signed(&x, -2).unwrap(), x);
        assert_eq!(theta.normalize_exponent(-3), 1);
    }

    #[test]
    fn text_roundtrip() {
        let f = f4();
        for e in RElement::all_elements(&f).unwrap() {
            assert_eq!(r(&f, &e.to_string()), e);
        }
        let f5 = f5();
        assert_eq!(r(&f5, "3+u*2").to_string(), "3+u*2");
        assert_eq!(r(&f5, "2*u"), r(&f5, "u*2"));
        assert_eq!(r(&f5, "-1"), RElement::from_field(f5.constant(4)));
        assert!(RElement::parse(&f5, "u*(1").is_err());
        assert!(RElement::parse(&f5, "").is_err());
        assert!(RElement::parse(&f5, "q").is_err());
    }
}
