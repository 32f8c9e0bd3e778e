//! Commutative factorization machinery: decompose xⁿ−1 (n = 2k) into the
//! pairwise-coprime self-reciprocal central factors fᵢ^{pˢ}(x²), working
//! over the fixed subfield of θ and lifting the result into R[x;Θ].

use crate::chain_ring::{RElement, RingAutomorphism};
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::skew_poly::SkewPoly;
use std::fmt;
use std::sync::Arc;

/// Candidate cap for exhaustive irreducible enumeration.
const FACTOR_ENUM_BUDGET: u128 = 1 << 24;

/// A commutative polynomial over a finite field, in the variable y.
/// Coefficients are stored low-to-high with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommPoly {
    spec: Arc<FieldSpec>,
    coeffs: Vec<FieldElement>,
}

impl CommPoly {
    pub fn new(spec: Arc<FieldSpec>, coeffs: Vec<FieldElement>) -> Result<Self> {
        for c in &coeffs {
            if c.spec().p() != spec.p() || c.spec().modulus() != spec.modulus() {
                return Err(Error::SpecMismatch);
            }
        }
        let mut p = CommPoly { spec, coeffs };
        p.trim();
        Ok(p)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(FieldElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero(spec: &Arc<FieldSpec>) -> Self {
        CommPoly {
            spec: Arc::clone(spec),
            coeffs: Vec::new(),
        }
    }

    pub fn one(spec: &Arc<FieldSpec>) -> Self {
        CommPoly {
            spec: Arc::clone(spec),
            coeffs: vec![spec.one()],
        }
    }

    /// yᵈ − 1.
    pub fn y_pow_minus_one(spec: &Arc<FieldSpec>, d: usize) -> Self {
        let mut coeffs = vec![spec.zero(); d + 1];
        coeffs[0] = spec.one().neg();
        coeffs[d] = spec.one();
        let mut p = CommPoly {
            spec: Arc::clone(spec),
            coeffs,
        };
        p.trim();
        p
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.spec.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(FieldElement::is_one)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k).add(&rhs.coeff(k))?);
        }
        CommPoly::new(Arc::clone(&self.spec), coeffs)
    }

    pub fn neg(&self) -> Self {
        CommPoly {
            spec: Arc::clone(&self.spec),
            coeffs: self.coeffs.iter().map(FieldElement::neg).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(CommPoly::zero(&self.spec));
        }
        let mut coeffs = vec![self.spec.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b)?)?;
            }
        }
        CommPoly::new(Arc::clone(&self.spec), coeffs)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = CommPoly::one(&self.spec);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn divmod(&self, g: &Self) -> Result<(Self, Self)> {
        let Some(dg) = g.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = g.coeffs.last().expect("nonzero").inverse()?;
        let mut r = self.clone();
        let mut q = vec![self.spec.zero(); self.coeffs.len()];
        while let Some(df) = r.degree() {
            if df < dg {
                break;
            }
            let c = r.coeffs.last().expect("nonzero").mul(&lead_inv)?;
            let dq = df - dg;
            q[dq] = q[dq].add(&c)?;
            for j in 0..=dg {
                let t = g.coeff(j).mul(&c)?;
                r.coeffs[dq + j] = r.coeffs[dq + j].sub(&t)?;
            }
            r.trim();
        }
        Ok((CommPoly::new(Arc::clone(&self.spec), q)?, r))
    }

    pub fn divides(&self, f: &Self) -> Result<bool> {
        Ok(f.divmod(self)?.1.is_zero())
    }

    /// The monic reciprocal f♮ = f(0)⁻¹ · yᵈ f(1/y); requires f(0) ≠ 0.
    pub fn monic_reciprocal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible("zero polynomial".into()));
        }
        let c0_inv = self.coeffs[0].inverse()?;
        let coeffs = self
            .coeffs
            .iter()
            .rev()
            .map(|c| c.mul(&c0_inv))
            .collect::<Result<Vec<_>>>()?;
        CommPoly::new(Arc::clone(&self.spec), coeffs)
    }

    pub fn is_self_reciprocal(&self) -> Result<bool> {
        Ok(*self == self.monic_reciprocal()?)
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{k}"),
            };
            let term = if k == 0 {
                c.to_string()
            } else if c.is_one() {
                var
            } else {
                let cs = c.to_string();
                if cs.contains('+') || cs.contains('-') {
                    format!("({cs})*{var}")
                } else {
                    format!("{cs}*{var}")
                }
            };
            terms.push(term);
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// The fixed subfield F_{p^d} of θ = Frobenius^r on F_{p^m}, d = gcd(r, m),
/// together with an embedding into the big field.
#[derive(Debug, Clone)]
pub struct SubfieldEmbedding {
    sub: Arc<FieldSpec>,
    /// Image in F_q of the subfield generator (a root of the subfield
    /// modulus that is fixed by θ).
    root: FieldElement,
}

impl SubfieldEmbedding {
    pub fn subfield(&self) -> &Arc<FieldSpec> {
        &self.sub
    }

    pub fn root(&self) -> &FieldElement {
        &self.root
    }

    /// Maps Σ cᵢ·sⁱ in the subfield to Σ cᵢ·rootⁱ in F_q.
    pub fn embed(&self, e: &FieldElement) -> Result<FieldElement> {
        let spec = self.root.spec();
        let mut acc = spec.zero();
        let mut power = spec.one();
        for &c in e.coeffs() {
            let term = spec.constant(c).mul(&power)?;
            acc = acc.add(&term)?;
            power = power.mul(&self.root)?;
        }
        Ok(acc)
    }
}

/// Writes k = t·pˢ with gcd(t, p) = 1.
pub fn split_length(k: u128, p: u64) -> Result<(u32, u128)> {
    if k == 0 {
        return Err(Error::InvalidParameter("length must be positive".into()));
    }
    let mut s = 0u32;
    let mut t = k;
    while t % u128::from(p) == 0 {
        t /= u128::from(p);
        s += 1;
    }
    Ok((s, t))
}

/// The fixed subfield of the Frobenius part of the automorphism, with an
/// embedding into F_q.
pub fn fixed_subfield(aut: &RingAutomorphism) -> Result<SubfieldEmbedding> {
    let spec = aut.spec();
    let p = spec.p();
    let m = spec.m();
    let d = if aut.r() == 0 { m } else { gcd(aut.r(), m) };
    if d == m {
        return Ok(SubfieldEmbedding {
            sub: Arc::clone(spec),
            root: spec.gen(),
        });
    }
    let sub = find_irreducible_modulus(p, d)?;
    // A root of the subfield modulus inside F_q generates the image; every
    // root lies in the fixed field of θ since d divides gcd(r, m).
    let coeffs: Vec<FieldElement> = sub.modulus().iter().map(|&c| spec.constant(c)).collect();
    for e in spec.elements()? {
        let mut acc = spec.zero();
        let mut power = spec.one();
        for c in &coeffs {
            acc = acc.add(&c.mul(&power)?)?;
            power = power.mul(&e)?;
        }
        if acc.is_zero() {
            let fixed = e.frobenius(aut.r()) == e;
            if !fixed {
                continue;
            }
            return Ok(SubfieldEmbedding { sub, root: e });
        }
    }
    Err(Error::Internal(format!(
        "no θ-fixed root of the degree-{d} subfield modulus found in F_{}^{}",
        p, m
    )))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Smallest (in coefficient order) monic irreducible of degree d over F_p.
fn find_irreducible_modulus(p: u64, d: usize) -> Result<Arc<FieldSpec>> {
    let mut coeffs = vec![0u64; d];
    loop {
        let mut modulus = coeffs.clone();
        modulus.push(1);
        if let Ok(spec) = FieldSpec::new(p, d, modulus) {
            return Ok(spec);
        }
        let mut pos = 0;
        loop {
            if pos == d {
                return Err(Error::Internal(format!(
                    "no irreducible of degree {d} over F_{p}"
                )));
            }
            coeffs[pos] += 1;
            if coeffs[pos] < p {
                break;
            }
            coeffs[pos] = 0;
            pos += 1;
        }
    }
}

/// Complete irreducible factorization over the coefficient field by
/// smallest-degree-first trial division; verified by re-multiplication.
pub fn factor_commutative(f: &CommPoly) -> Result<Vec<(CommPoly, u32)>> {
    if f.is_zero() || !f.is_monic() {
        return Err(Error::InvalidParameter(
            "factorization requires a monic nonzero polynomial".into(),
        ));
    }
    let spec = Arc::clone(f.spec());
    let q = spec.q()?;
    let elems = spec.elements()?;
    let mut remaining = f.clone();
    let mut out: Vec<(CommPoly, u32)> = Vec::new();
    let mut d = 1usize;
    while remaining.degree() > Some(0) {
        let deg_left = remaining.degree().expect("nonzero");
        if d > deg_left / 2 {
            // what is left is irreducible
            out.push((remaining.clone(), 1));
            break;
        }
        let count = q.pow(d as u32);
        if count > FACTOR_ENUM_BUDGET {
            return Err(Error::BudgetExceeded {
                required: count,
                budget: FACTOR_ENUM_BUDGET,
            });
        }
        let mut idx = vec![0usize; d];
        'cands: loop {
            let mut coeffs: Vec<FieldElement> = idx.iter().map(|&i| elems[i].clone()).collect();
            coeffs.push(spec.one());
            let cand = CommPoly::new(Arc::clone(&spec), coeffs)?;
            let mut mult = 0u32;
            while cand.divides(&remaining)? {
                remaining = remaining.divmod(&cand)?.0;
                mult += 1;
            }
            if mult > 0 {
                // smallest-degree-first trial division only ever splits
                // off irreducibles
                out.push((cand, mult));
            }
            if remaining.degree() <= Some(0) {
                break 'cands;
            }
            let mut pos = 0;
            loop {
                if pos == d {
                    break 'cands;
                }
                idx[pos] += 1;
                if idx[pos] < elems.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
        d += 1;
    }
    // re-multiplication check
    let mut product = CommPoly::one(&spec);
    for (g, mult) in &out {
        product = product.mul(&g.pow(*mult)?)?;
    }
    if product != *f {
        return Err(Error::Internal(format!(
            "factorization of {f} failed re-multiplication"
        )));
    }
    Ok(out)
}

/// Groups the irreducible factors of a squarefree yᵗ−1 into pairwise
/// coprime self-reciprocal blocks: self-reciprocal irreducibles stand
/// alone; the rest pair off as h·h♮.
pub fn group_self_reciprocal(factors: &[CommPoly]) -> Result<Vec<CommPoly>> {
    let mut pool: Vec<CommPoly> = factors.to_vec();
    let mut out = Vec::new();
    while let Some(h) = pool.pop() {
        if h.is_self_reciprocal()? {
            out.push(h);
            continue;
        }
        let partner = h.monic_reciprocal()?;
        let Some(pos) = pool.iter().position(|g| *g == partner) else {
            return Err(Error::Internal(format!(
                "factor {h} has no reciprocal partner {partner} in a squarefree yᵗ−1 factorization"
            )));
        };
        pool.remove(pos);
        out.push(h.mul(&partner)?);
    }
    out.reverse();
    Ok(out)
}

/// The central factorization of xⁿ−1 for n = 2k: each block is
/// fᵢ^{pˢ}(x²) with fᵢ self-reciprocal over the fixed subfield,
/// k = t·pˢ, gcd(t, p) = 1.
#[derive(Debug, Clone)]
pub struct CentralFactorization {
    n: usize,
    s: u32,
    t: u128,
    embedding: SubfieldEmbedding,
    factors: Vec<(CommPoly, u128)>,
    lifted: Vec<SkewPoly>,
}

impl CentralFactorization {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn t(&self) -> u128 {
        self.t
    }

    pub fn embedding(&self) -> &SubfieldEmbedding {
        &self.embedding
    }

    /// The self-reciprocal subfield factors fᵢ with multiplicity pˢ.
    pub fn factors(&self) -> &[(CommPoly, u128)] {
        &self.factors
    }

    /// The lifted central blocks fᵢ^{pˢ}(x²) in R[x;Θ].
    pub fn lifted(&self) -> &[SkewPoly] {
        &self.lifted
    }
}

/// Decomposes xⁿ−1 into central self-reciprocal blocks, checking the
/// re-multiplication and centrality of every block.
pub fn decompose_xn_minus_1(n: usize, aut: &RingAutomorphism) -> Result<CentralFactorization> {
    if n == 0 || n % 2 != 0 {
        return Err(Error::UnsupportedLength {
            n,
            reason: "the factorization applies to even lengths n = 2k".into(),
        });
    }
    if aut.order() != 2 {
        return Err(Error::OrderMismatch {
            expected: 2,
            found: aut.order(),
        });
    }
    let spec = aut.spec();
    let p = spec.p();
    let k = n / 2;
    let (s, t) = split_length(k as u128, p)?;
    let embedding = fixed_subfield(aut)?;
    let sub = Arc::clone(embedding.subfield());
    let base = CommPoly::y_pow_minus_one(&sub, t as usize);
    let irreducibles = factor_commutative(&base)?;
    for (_, mult) in &irreducibles {
        debug_assert_eq!(*mult, 1, "yᵗ−1 is squarefree when gcd(t, p) = 1");
    }
    let flat: Vec<CommPoly> = irreducibles.into_iter().map(|(g, _)| g).collect();
    let grouped = group_self_reciprocal(&flat)?;
    let mult = u128::from(p).pow(s);
    let mut factors = Vec::new();
    let mut lifted = Vec::new();
    for f in grouped {
        let raised = f.pow(mult as u32)?;
        let lift = lift_even(&raised, &embedding, aut)?;
        if !lift.is_central()? {
            return Err(Error::Internal(format!(
                "lifted factor {lift} is not central"
            )));
        }
        factors.push((f, mult));
        lifted.push(lift);
    }
    let one = RElement::one(spec);
    let modulus = SkewPoly::x_pow_minus(aut, n, &one)?;
    let mut product = SkewPoly::one(aut);
    for l in &lifted {
        product = product.mul(l)?;
    }
    if product != modulus {
        return Err(Error::Internal(format!(
            "central factor product {product} differs from x^{n} - 1"
        )));
    }
    Ok(CentralFactorization {
        n,
        s,
        t,
        embedding,
        factors,
        lifted,
    })
}

/// Lifts F(y) to F(x²) with coefficients embedded into R (zero u-part).
fn lift_even(
    f: &CommPoly,
    embedding: &SubfieldEmbedding,
    aut: &RingAutomorphism,
) -> Result<SkewPoly> {
    let spec = aut.spec();
    let deg = f.degree().unwrap_or(0);
    let mut coeffs = vec![RElement::zero(spec); 2 * deg + 1];
    for (j, c) in f.coeffs().iter().enumerate() {
        coeffs[2 * j] = RElement::from_field(embedding.embed(c)?);
    }
    SkewPoly::new(aut.clone(), coeffs)
}
