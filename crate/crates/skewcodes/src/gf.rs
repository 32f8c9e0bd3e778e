//! Finite fields F_q = F_p[z]/(modulus), q = p^m, with the Frobenius maps
//! used as coefficient-field automorphisms elsewhere in the crate.
//!
//! Elements are reduced polynomial residues in the generator `w` (the class
//! of z). All arithmetic is exact; inverses are computed as a^(q-2).

use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// Description of a finite field F_p[z]/(modulus).
///
/// `modulus` is stored low-to-high, has degree `m`, is monic and irreducible
/// over F_p; all of this is checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    m: usize,
    modulus: Vec<u64>,
}

/// An element of F_q: `coeffs[i]` is the coefficient of w^i, reduced mod p,
/// with fixed length m.
#[derive(Debug, Clone)]
pub struct FieldElement {
    spec: Arc<FieldSpec>,
    coeffs: Vec<u64>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Work cap for construction-time exhaustive checks (irreducibility, element
/// enumeration). Everything in this crate is desk scale; the cap only guards
/// against absurd inputs.
const ENUMERATION_CAP: u128 = 1 << 24;

impl FieldSpec {
    /// Builds and validates a field description.
    pub fn new(p: u64, m: usize, modulus: Vec<u64>) -> Result<Arc<FieldSpec>> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("p = {p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidParameter("m must be at least 1".into()));
        }
        if modulus.len() != m + 1 {
            return Err(Error::InvalidParameter(format!(
                "modulus must list m+1 = {} coefficients (got {})",
                m + 1,
                modulus.len()
            )));
        }
        let modulus: Vec<u64> = modulus.into_iter().map(|c| c % p).collect();
        if modulus[m] != 1 {
            return Err(Error::InvalidParameter("modulus must be monic".into()));
        }
        let spec = FieldSpec { p, m, modulus };
        spec.q()?; // q must be representable
        spec.check_irreducible()?;
        Ok(Arc::new(spec))
    }

    /// Parses the textual form `p=<int>,m=<int>,mod=<c0,...,cm>`.
    pub fn parse_text(s: &str) -> Result<Arc<FieldSpec>> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = s
            .strip_prefix("p=")
            .ok_or_else(|| Error::ParseError(format!("field spec must start with p=: {s}")))?;
        let (p_str, rest) = rest
            .split_once(",m=")
            .ok_or_else(|| Error::ParseError(format!("field spec missing m=: {s}")))?;
        let (m_str, mod_str) = rest
            .split_once(",mod=")
            .ok_or_else(|| Error::ParseError(format!("field spec missing mod=: {s}")))?;
        let p: u64 = p_str
            .parse()
            .map_err(|_| Error::ParseError(format!("bad p: {p_str}")))?;
        let m: usize = m_str
            .parse()
            .map_err(|_| Error::ParseError(format!("bad m: {m_str}")))?;
        let modulus = mod_str
            .split(',')
            .map(|c| {
                c.parse::<u64>()
                    .map_err(|_| Error::ParseError(format!("bad modulus coefficient: {c}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        FieldSpec::new(p, m, modulus)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// q = p^m.
    pub fn q(&self) -> Result<u128> {
        let mut q: u128 = 1;
        for _ in 0..self.m {
            q = q
                .checked_mul(self.p as u128)
                .ok_or_else(|| Error::InvalidParameter("p^m overflows".into()))?;
        }
        Ok(q)
    }

    fn check_irreducible(&self) -> Result<()> {
        // Trial division by every monic polynomial of degree 1..=m/2.
        let mut work: u128 = 0;
        for d in 1..=self.m / 2 {
            let count = (self.p as u128).pow(d as u32);
            work += count;
            if work > ENUMERATION_CAP {
                return Err(Error::InvalidParameter(
                    "modulus too large for exhaustive irreducibility check".into(),
                ));
            }
            let mut divisor = vec![0u64; d + 1];
            divisor[d] = 1;
            loop {
                if fp_poly_rem_is_zero(&self.modulus, &divisor, self.p) {
                    return Err(Error::InvalidParameter(format!(
                        "modulus is reducible (divisible by a degree-{d} factor)"
                    )));
                }
                // odometer over the d low coefficients
                let mut i = 0;
                loop {
                    if i == d {
                        break;
                    }
                    divisor[i] += 1;
                    if divisor[i] < self.p {
                        break;
                    }
                    divisor[i] = 0;
                    i += 1;
                }
                if i == d {
                    break;
                }
            }
        }
        Ok(())
    }

    /// All q field elements, in odometer order (constants first).
    pub fn elements(self: &Arc<Self>) -> Result<Vec<FieldElement>> {
        let q = self.q()?;
        if q > ENUMERATION_CAP {
            return Err(Error::BudgetExceeded {
                required: q,
                budget: ENUMERATION_CAP,
            });
        }
        let mut out = Vec::with_capacity(q as usize);
        let mut coeffs = vec![0u64; self.m];
        loop {
            out.push(FieldElement {
                spec: Arc::clone(self),
                coeffs: coeffs.clone(),
            });
            let mut i = 0;
            loop {
                if i == self.m {
                    break;
                }
                coeffs[i] += 1;
                if coeffs[i] < self.p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == self.m {
                break;
            }
        }
        Ok(out)
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement {
            spec: Arc::clone(self),
            coeffs: vec![0; self.m],
        }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.constant(1)
    }

    /// The constant c (reduced mod p).
    pub fn constant(self: &Arc<Self>, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.m];
        coeffs[0] = c % self.p;
        FieldElement {
            spec: Arc::clone(self),
            coeffs,
        }
    }

    /// The generator w (class of z). For m = 1 this reduces to a constant.
    pub fn gen(self: &Arc<Self>) -> FieldElement {
        self.element_from_poly(&[0, 1])
    }

    /// Builds an element from polynomial coefficients of any length,
    /// reducing modulo p and the field modulus.
    pub fn element_from_poly(self: &Arc<Self>, coeffs: &[u64]) -> FieldElement {
        let mut v: Vec<u64> = coeffs.iter().map(|c| c % self.p).collect();
        if v.len() < self.m {
            v.resize(self.m, 0);
        }
        // fold w^i for i >= m down using w^m = -(modulus tail)
        for i in (self.m..v.len()).rev() {
            let c = v[i];
            v[i] = 0;
            if c == 0 {
                continue;
            }
            for j in 0..self.m {
                let neg = (self.p - self.modulus[j]) % self.p;
                v[i - self.m + j] = (v[i - self.m + j] + c * neg) % self.p;
            }
        }
        v.truncate(self.m);
        FieldElement {
            spec: Arc::clone(self),
            coeffs: v,
        }
    }

    /// Parses an element written as a polynomial in `w` over F_p,
    /// e.g. `0`, `1`, `w+1`, `2*w^2+1`, `-1`.
    pub fn parse_element(self: &Arc<Self>, s: &str) -> Result<FieldElement> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::ParseError("empty field element".into()));
        }
        let mut acc = self.zero();
        for (term, negate) in split_signed_terms(&compact)? {
            let parsed = self.parse_term(&term)?;
            let parsed = if negate { parsed.neg() } else { parsed };
            acc = acc.add(&parsed)?;
        }
        Ok(acc)
    }

    fn parse_term(self: &Arc<Self>, term: &str) -> Result<FieldElement> {
        if term.is_empty() {
            return Err(Error::ParseError("empty term in field element".into()));
        }
        let bad = || Error::ParseError(format!("bad field element term: {term}"));
        match term.find('w') {
            None => {
                let c: u64 = term.parse().map_err(|_| bad())?;
                Ok(self.constant(c))
            }
            Some(pos) => {
                let coef_str = &term[..pos];
                let coef: u64 = if coef_str.is_empty() {
                    1
                } else {
                    coef_str.trim_end_matches('*').parse().map_err(|_| bad())?
                };
                let rest = &term[pos + 1..];
                let exp: usize = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .ok_or_else(bad)?
                        .parse()
                        .map_err(|_| bad())?
                };
                let mut poly = vec![0u64; exp + 1];
                poly[exp] = coef;
                Ok(self.element_from_poly(&poly))
            }
        }
    }
}

/// Splits a sum like `a+b-c` into (term, negated) pairs. No parentheses at
/// this level; field elements are flat sums of monomials in w.
fn split_signed_terms(s: &str) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut chars = s.chars().peekable();
    // leading sign
    if let Some(&c) = chars.peek() {
        if c == '-' {
            neg = true;
            chars.next();
        } else if c == '+' {
            chars.next();
        }
    }
    for c in chars {
        if c == '+' || c == '-' {
            if cur.is_empty() {
                return Err(Error::ParseError(format!("dangling sign in: {s}")));
            }
            out.push((std::mem::take(&mut cur), neg));
            neg = c == '-';
        } else {
            cur.push(c);
        }
    }
    if cur.is_empty() {
        return Err(Error::ParseError(format!("dangling sign in: {s}")));
    }
    out.push((cur, neg));
    Ok(out)
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mods: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
        write!(f, "p={},m={},mod={}", self.p, self.m, mods.join(","))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_spec(other) && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl FieldElement {
    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn same_spec(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.spec, &other.spec) || self.spec == other.spec
    }

    fn check_spec(&self, other: &Self) -> Result<()> {
        if self.same_spec(other) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_spec(rhs)?;
        let p = self.spec.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| (a + b) % p)
            .collect();
        Ok(FieldElement {
            spec: Arc::clone(&self.spec),
            coeffs,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let p = self.spec.p;
        FieldElement {
            spec: Arc::clone(&self.spec),
            coeffs: self.coeffs.iter().map(|&c| (p - c) % p).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_spec(rhs)?;
        let m = self.spec.m;
        let p = self.spec.p;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        Ok(self.spec.element_from_poly(&prod))
    }

    /// a^e by square-and-multiply; a^0 = 1 including for a = 0.
    pub fn pow(&self, mut e: u128) -> Self {
        let mut base = self.clone();
        let mut acc = self.spec.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same spec");
            }
            base = base.mul(&base).expect("same spec");
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, computed as a^(q-2).
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible("zero field element".into()));
        }
        let q = self.spec.q()?;
        let inv = self.pow(q - 2);
        debug_assert!(inv.mul(self).expect("same spec").is_one());
        Ok(inv)
    }

    /// theta^r(a) = a^(p^r), computed by repeated p-th powering.
    /// r is reduced mod m since the Frobenius has order m.
    pub fn frobenius(&self, r: usize) -> Self {
        let steps = if self.spec.m == 0 { 0 } else { r % self.spec.m };
        let mut acc = self.clone();
        for _ in 0..steps {
            acc = acc.pow(self.spec.p as u128);
        }
        acc
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (k, c) {
                (0, _) => format!("{c}"),
                (1, 1) => "w".to_string(),
                (1, _) => format!("{c}*w"),
                (_, 1) => format!("w^{k}"),
                (_, _) => format!("{c}*w^{k}"),
            };
            terms.push(t);
        }
        write!(f, "{}", terms.join("+"))
    }
}

/// Is `b` an exact divisor of `a` over F_p? Both low-to-high, b nonzero with
/// a unit leading coefficient (fields: any nonzero lead works).
fn fp_poly_rem_is_zero(a: &[u64], b: &[u64], p: u64) -> bool {
    let db = b.len() - 1;
    let lead_inv = mod_inverse(b[db], p);
    let mut rem: Vec<u64> = a.to_vec();
    while rem.len() > db && rem.last() == Some(&0) {
        rem.pop();
    }
    while rem.len() - 1 >= db && rem.iter().any(|&c| c != 0) {
        let dr = rem.len() - 1;
        if rem[dr] == 0 {
            rem.pop();
            continue;
        }
        let scale = (rem[dr] * lead_inv) % p;
        for j in 0..=db {
            let idx = dr - db + j;
            let sub = (scale * b[j]) % p;
            rem[idx] = (rem[idx] + p - sub) % p;
        }
        rem.pop();
        if dr == db {
            break;
        }
    }
    rem.iter().all(|&c| c == 0)
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime, a nonzero mod p: a^(p-2)
    let mut e = p - 2;
    let mut base = a % p;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Does x^2 = -1 have a solution in F_q? Answered both by exhaustive search
/// and by the congruence p^m = 1 (mod 4); the two must agree.
pub fn minus_one_is_square(spec: &Arc<FieldSpec>) -> Result<bool> {
    if spec.p() == 2 {
        return Err(Error::EvenCharacteristic);
    }
    let minus_one = spec.one().neg();
    let by_search = spec
        .elements()?
        .iter()
        .any(|e| e.mul(e).expect("same spec") == minus_one);
    let by_congruence = spec.q()? % 4 == 1;
    if by_search != by_congruence {
        return Err(Error::Internal(
            "square search disagrees with the mod-4 congruence".into(),
        ));
    }
    Ok(by_search)
}

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
pub fn multiplicative_order(a: u128, n: u128) -> Result<u128> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "order modulo {n} undefined"
        )));
    }
    let a = a % n;
    if gcd(a, n) != 1 {
        return Err(Error::NotCoprime { a, n });
    }
    let mut acc = a;
    let mut ord = 1u128;
    while acc != 1 {
        acc = acc * a % n;
        ord += 1;
    }
    Ok(ord)
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
