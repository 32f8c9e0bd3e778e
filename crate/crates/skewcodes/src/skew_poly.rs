//! The skew polynomial ring R[x;Θ] under the twisted rule x·a = Θ(a)x:
//! multiplication, left/right division, gcrd/lcrm via the Euclidean chain
//! (with exact fallbacks where the chain meets a non-unit leading
//! coefficient), skew reciprocals, centrality, and dual generators.

use crate::chain_ring::{split_top_level_terms, RElement, RingAutomorphism};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Candidate cap for the exhaustive fallbacks below.
const FALLBACK_ENUM_BUDGET: u128 = 1 << 22;

/// A polynomial Σ cᵢxⁱ over R with multiplication twisted by Θ.
/// Coefficients are stored low-to-high with no trailing zeros; the zero
/// polynomial has an empty coefficient sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewPoly {
    aut: RingAutomorphism,
    coeffs: Vec<RElement>,
}

impl SkewPoly {
    pub fn new(aut: RingAutomorphism, coeffs: Vec<RElement>) -> Result<Self> {
        for c in &coeffs {
            if !c.a().same_spec(aut.beta()) {
                return Err(Error::SpecMismatch);
            }
        }
        let mut p = SkewPoly { aut, coeffs };
        p.trim();
        Ok(p)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(RElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero(aut: &RingAutomorphism) -> Self {
        SkewPoly {
            aut: aut.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(aut: &RingAutomorphism) -> Self {
        SkewPoly {
            aut: aut.clone(),
            coeffs: vec![RElement::one(aut.spec())],
        }
    }

    pub fn constant(aut: &RingAutomorphism, c: RElement) -> Result<Self> {
        SkewPoly::new(aut.clone(), vec![c])
    }

    pub fn monomial(aut: &RingAutomorphism, c: RElement, k: usize) -> Result<Self> {
        let mut coeffs = vec![RElement::zero(aut.spec()); k];
        coeffs.push(c);
        SkewPoly::new(aut.clone(), coeffs)
    }

    pub fn x_pow(aut: &RingAutomorphism, k: usize) -> Self {
        SkewPoly::monomial(aut, RElement::one(aut.spec()), k).expect("same spec")
    }

    /// xⁿ − λ.
    pub fn x_pow_minus(aut: &RingAutomorphism, n: usize, lambda: &RElement) -> Result<Self> {
        let mut coeffs = vec![RElement::zero(aut.spec()); n + 1];
        coeffs[0] = lambda.neg();
        coeffs[n] = RElement::one(aut.spec());
        SkewPoly::new(aut.clone(), coeffs)
    }

    pub fn aut(&self) -> &RingAutomorphism {
        &self.aut
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        self.aut.spec()
    }

    pub fn coeffs(&self) -> &[RElement] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> RElement {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| RElement::zero(self.spec()))
    }

    pub fn leading(&self) -> Option<&RElement> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(RElement::is_one)
    }

    /// All nonzero coefficients are units (the hypothesis under which the
    /// Euclidean chain's uniqueness argument is valid).
    pub fn has_unit_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero() || c.is_unit())
    }

    fn same_aut(&self, other: &Self) -> Result<()> {
        if self.aut != other.aut {
            return Err(Error::AutomorphismMismatch);
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_aut(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k).add(&rhs.coeff(k))?);
        }
        SkewPoly::new(self.aut.clone(), coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        SkewPoly {
            aut: self.aut.clone(),
            coeffs: self.coeffs.iter().map(RElement::neg).collect(),
        }
    }

    /// (f·g)_k = Σ_{i+j=k} f_i · Θ^i(g_j).
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.same_aut(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(SkewPoly::zero(&self.aut));
        }
        let mut coeffs =
            vec![RElement::zero(self.spec()); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, fi) in self.coeffs.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            for (j, gj) in rhs.coeffs.iter().enumerate() {
                if gj.is_zero() {
                    continue;
                }
                let term = fi.mul(&self.aut.apply_pow(gj, i)?)?;
                coeffs[i + j] = coeffs[i + j].add(&term)?;
            }
        }
        SkewPoly::new(self.aut.clone(), coeffs)
    }

    /// c·f (constant on the left scales every coefficient by c).
    pub fn scale_left(&self, c: &RElement) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| c.mul(x))
            .collect::<Result<Vec<_>>>()?;
        SkewPoly::new(self.aut.clone(), coeffs)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = SkewPoly::one(&self.aut);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Normalizes to the monic left-associate lead⁻¹ · f.
    pub fn monic(&self) -> Result<Self> {
        match self.leading() {
            None => Err(Error::NotInvertible("zero polynomial".into())),
            Some(l) if !l.is_unit() => Err(Error::NotInvertible(format!(
                "leading coefficient {l} is not a unit"
            ))),
            Some(l) => self.scale_left(&l.inverse()?),
        }
    }

    fn check_divisor(&self, g: &Self) -> Result<()> {
        self.same_aut(g)?;
        match g.leading() {
            None => Err(Error::DivisionByZero),
            Some(l) if !l.is_unit() => Err(Error::NotAUnit(format!(
                "cannot divide by {g}: leading coefficient {l} is not a unit"
            ))),
            Some(_) => Ok(()),
        }
    }

    /// Right division: f = g·q + r with deg r < deg g.
    pub fn right_divmod(&self, g: &Self) -> Result<(Self, Self)> {
        self.check_divisor(g)?;
        let dg = g.degree().expect("nonzero divisor");
        let lead_inv = g.leading().expect("nonzero divisor").inverse()?;
        let mut r = self.clone();
        let mut q = vec![RElement::zero(self.spec()); self.coeffs.len()];
        while let Some(df) = r.degree() {
            if df < dg {
                break;
            }
            let top = r.leading().expect("nonzero remainder");
            // (g · c x^dq) has top coefficient g_dg · Θ^dg(c)
            let c = self
                .aut
                .apply_pow_signed(&lead_inv.mul(top)?, -(dg as i64))?;
            let dq = df - dg;
            q[dq] = q[dq].add(&c)?;
            let term = g.mul(&SkewPoly::monomial(&self.aut, c, dq)?)?;
            r = r.sub(&term)?;
        }
        let q = SkewPoly::new(self.aut.clone(), q)?;
        debug_assert_eq!(*self, g.mul(&q).unwrap().add(&r).unwrap());
        Ok((q, r))
    }

    /// Left division: f = q·g + r with deg r < deg g.
    pub fn left_divmod(&self, g: &Self) -> Result<(Self, Self)> {
        self.check_divisor(g)?;
        let dg = g.degree().expect("nonzero divisor");
        let glead = g.leading().expect("nonzero divisor").clone();
        let mut r = self.clone();
        let mut q = vec![RElement::zero(self.spec()); self.coeffs.len()];
        while let Some(df) = r.degree() {
            if df < dg {
                break;
            }
            let top = r.leading().expect("nonzero remainder");
            let dq = df - dg;
            // (c x^dq · g) has top coefficient c · Θ^dq(g_dg)
            let c = top.mul(&self.aut.apply_pow(&glead, dq)?.inverse()?)?;
            q[dq] = q[dq].add(&c)?;
            let term = SkewPoly::monomial(&self.aut, c, dq)?.mul(g)?;
            r = r.sub(&term)?;
        }
        let q = SkewPoly::new(self.aut.clone(), q)?;
        debug_assert_eq!(*self, q.mul(g).unwrap().add(&r).unwrap());
        Ok((q, r))
    }

    /// Does d right-divide self (self = q·d exactly)?
    pub fn is_right_divisible_by(&self, d: &Self) -> Result<bool> {
        Ok(self.left_divmod(d)?.1.is_zero())
    }

    /// Greatest common right divisor: the monic polynomial of maximal
    /// degree right-dividing both inputs. Inputs must have unit
    /// coefficients. Computed by the Euclidean chain on left divisions;
    /// if the chain meets a remainder it cannot divide by, the answer is
    /// completed exactly (a nonzero constant remainder forces gcrd 1; a
    /// longer remainder falls back to a bounded exhaustive divisor search).
    pub fn gcrd(f: &Self, g: &Self) -> Result<Self> {
        f.same_aut(g)?;
        if f.is_zero() && g.is_zero() {
            return Err(Error::InvalidParameter(
                "gcrd of two zero polynomials".into(),
            ));
        }
        for input in [f, g] {
            if !input.has_unit_coefficients() {
                return Err(Error::UnsupportedCoefficients(format!(
                    "{input} has a non-unit nonzero coefficient"
                )));
            }
        }
        if f.is_zero() {
            return g.monic();
        }
        if g.is_zero() {
            return f.monic();
        }
        let (mut a, mut b) = (f.clone(), g.clone());
        let result = loop {
            if b.is_zero() {
                break a.monic()?;
            }
            if b.degree() == Some(0) {
                // No monic polynomial of positive degree right-divides a
                // nonzero constant, so the only common divisors are units.
                break SkewPoly::one(&f.aut);
            }
            if !b.leading().expect("nonzero").is_unit() {
                break Self::gcrd_by_search(&a, &b)?;
            }
            let (_, r) = a.left_divmod(&b)?;
            a = b;
            b = r;
        };
        debug_assert!(f.is_right_divisible_by(&result).unwrap());
        debug_assert!(g.is_right_divisible_by(&result).unwrap());
        Ok(result)
    }

    /// Exhaustive maximal-degree common right divisor of a and b, scanning
    /// monic candidates by descending degree.
    fn gcrd_by_search(a: &Self, b: &Self) -> Result<Self> {
        let aut = &a.aut;
        let elems = RElement::all_elements(aut.spec())?;
        let dmax = a
            .degree()
            .expect("nonzero")
            .min(b.degree().expect("nonzero"));
        for d in (1..=dmax).rev() {
            let count = (elems.len() as u128).pow(d as u32);
            if count > FALLBACK_ENUM_BUDGET {
                return Err(Error::BudgetExceeded {
                    required: count,
                    budget: FALLBACK_ENUM_BUDGET,
                });
            }
            let mut best: Option<SkewPoly> = None;
            for lower in Odometer::new(&elems, d) {
                let mut coeffs = lower;
                coeffs.push(RElement::one(aut.spec()));
                let cand = SkewPoly::new(aut.clone(), coeffs)?;
                if a.is_right_divisible_by(&cand)? && b.is_right_divisible_by(&cand)? {
                    best = Some(match best {
                        Some(prev) => lex_min(prev, cand),
                        None => cand,
                    });
                }
            }
            if let Some(found) = best {
                return Ok(found);
            }
        }
        Ok(SkewPoly::one(aut))
    }

    /// Least common right multiple: the monic polynomial h of minimal
    /// degree with h = a·f and h = b·g. Computed by the cofactor-tracking
    /// Euclidean chain, with an exact linear-solve fallback when the chain
    /// stalls; the degree identity deg h = deg f + deg g − deg gcrd(f, g)
    /// is checked.
    pub fn lcrm(f: &Self, g: &Self) -> Result<Self> {
        f.same_aut(g)?;
        for input in [f, g] {
            if !input.has_unit_coefficients() {
                return Err(Error::UnsupportedCoefficients(format!(
                    "{input} has a non-unit nonzero coefficient"
                )));
            }
        }
        if f.is_zero() || g.is_zero() {
            return Ok(SkewPoly::zero(&f.aut));
        }
        let target = f.degree().expect("nonzero") + g.degree().expect("nonzero")
            - Self::gcrd(f, g)?.degree().expect("gcrd is nonzero");
        let chain = Self::lcrm_by_chain(f, g)?;
        let result = match chain {
            Some(h) if h.degree() == Some(target) => h,
            _ => Self::lcrm_by_solve(f, g, target)?,
        };
        if !result.is_right_divisible_by(f)? || !result.is_right_divisible_by(g)? {
            return Err(Error::Internal(format!(
                "common multiple {result} fails divisibility"
            )));
        }
        Ok(result)
    }

    /// Euclidean chain with cofactor tracking: maintains r = u·f + v·g;
    /// at the first zero remainder, u·f is a common left multiple.
    /// Returns None if the chain stalls or normalization fails.
    fn lcrm_by_chain(f: &Self, g: &Self) -> Result<Option<Self>> {
        let (mut r_prev, mut r_cur) = (f.clone(), g.clone());
        let (mut u_prev, mut u_cur) = (SkewPoly::one(&f.aut), SkewPoly::zero(&f.aut));
        loop {
            if r_cur.is_zero() {
                let h = u_cur.mul(f)?;
                return match h.monic() {
                    Ok(m) => Ok(Some(m)),
                    Err(_) => Ok(None),
                };
            }
            if !r_cur.leading().expect("nonzero").is_unit() {
                return Ok(None);
            }
            let (q, r_next) = r_prev.left_divmod(&r_cur)?;
            let u_next = u_prev.sub(&q.mul(&u_cur)?)?;
            r_prev = r_cur;
            r_cur = r_next;
            u_prev = u_cur;
            u_cur = u_next;
        }
    }

    /// Finds the minimal-degree monic h = a·f = b·g by solving the F_q-linear
    /// system in the coefficients of a and b for increasing deg h, and picks
    /// the lexicographically smallest solution for determinism.
    fn lcrm_by_solve(f: &Self, g: &Self, target: usize) -> Result<Self> {
        let aut = &f.aut;
        let spec = aut.spec();
        let m = spec.m();
        let df = f.degree().expect("nonzero");
        let dg = g.degree().expect("nonzero");
        for cap in df.max(dg)..=df + dg {
            let da = cap - df;
            let db = cap - dg;
            // Unknowns: a_0..a_{da-1} (a_da is fixed to 1), b_0..b_{db};
            // each R unknown contributes an (alpha, beta) pair of F_q
            // unknowns, each of which is m prime-field coordinates wide —
            // but F_q itself is the scalar field here, so one column each.
            let unknowns = da + db + 1;
            let ncols = 2 * unknowns;
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            for k in 0..=cap {
                let mut row_a = vec![spec.zero(); ncols];
                let mut row_b = vec![spec.zero(); ncols];
                let mut fixed = RElement::zero(spec);
                // a_i · Θ^i(f_{k-i})
                for i in 0..=da.min(k) {
                    let j = k - i;
                    if j > df {
                        continue;
                    }
                    let c = aut.apply_pow(&f.coeff(j), i)?;
                    if i == da {
                        fixed = fixed.add(&c)?;
                        continue;
                    }
                    let (ca, cb) = (c.a().clone(), c.b().clone());
                    row_a[2 * i] = row_a[2 * i].add(&ca)?;
                    row_b[2 * i] = row_b[2 * i].add(&cb)?;
                    row_b[2 * i + 1] = row_b[2 * i + 1].add(&ca)?;
                }
                // − b_j · Θ^j(g_{k-j})
                for j in 0..=db.min(k) {
                    let l = k - j;
                    if l > dg {
                        continue;
                    }
                    let c = aut.apply_pow(&g.coeff(l), j)?.neg();
                    let col = 2 * (da + j);
                    let (ca, cb) = (c.a().clone(), c.b().clone());
                    row_a[col] = row_a[col].add(&ca)?;
                    row_b[col] = row_b[col].add(&cb)?;
                    row_b[col + 1] = row_b[col + 1].add(&ca)?;
                }
                rows.push(row_a);
                rhs.push(fixed.a().neg());
                rows.push(row_b);
                rhs.push(fixed.b().neg());
            }
            let Some((particular, kernel)) = linalg::solve_affine(&rows, &rhs)? else {
                continue;
            };
            // Enumerate the solution space when small; otherwise the
            // canonical particular solution alone keeps the result
            // deterministic.
            let q = spec.q()?;
            let dim = kernel.len() as u32;
            let solutions: Vec<Vec<crate::gf::FieldElement>> =
                if q.checked_pow(dim).is_some_and(|c| c <= 4096) {
                    let field = spec.elements()?;
                    let mut sols = Vec::new();
                    for ts in Odometer::new(&field, kernel.len()) {
                        let mut v = particular.clone();
                        for (t, kvec) in ts.iter().zip(&kernel) {
                            for (dst, kc) in v.iter_mut().zip(kvec) {
                                *dst = dst.add(&kc.mul(t)?)?;
                            }
                        }
                        sols.push(v);
                    }
                    sols
                } else {
                    vec![particular]
                };
            let mut best: Option<SkewPoly> = None;
            for sol in solutions {
                let mut a_coeffs = Vec::with_capacity(da + 1);
                for i in 0..da {
                    a_coeffs.push(RElement::new(sol[2 * i].clone(), sol[2 * i + 1].clone())?);
                }
                a_coeffs.push(RElement::one(spec));
                let a = SkewPoly::new(aut.clone(), a_coeffs)?;
                let h = a.mul(f)?.monic()?;
                debug_assert_eq!(h.degree(), Some(cap));
                best = Some(match best {
                    Some(prev) => lex_min(prev, h),
                    None => h,
                });
            }
            let h = best.expect("at least the particular solution");
            let _ = m;
            if cap != target {
                return Err(Error::DegreeError(format!(
                    "least common right multiple has degree {cap}, expected {target}"
                )));
            }
            return Ok(h);
        }
        Err(Error::DegreeError(format!(
            "no common right multiple of {f} and {g} within degree {}",
            df + dg
        )))
    }

    /// h* with coefficient i equal to Θ^i(h_{deg h − i}).
    pub fn skew_reciprocal(&self) -> Result<Self> {
        let Some(m) = self.degree() else {
            return Ok(self.clone());
        };
        let mut coeffs = Vec::with_capacity(m + 1);
        for i in 0..=m {
            coeffs.push(self.aut.apply_pow(&self.coeff(m - i), i)?);
        }
        SkewPoly::new(self.aut.clone(), coeffs)
    }

    /// h♮ = Θ^{deg h}(h₀)⁻¹ · h*, the monic associate of the reciprocal.
    pub fn monic_skew_reciprocal(&self) -> Result<Self> {
        let Some(m) = self.degree() else {
            return Err(Error::NotInvertible("zero polynomial".into()));
        };
        let h0 = self.coeff(0);
        if !h0.is_unit() {
            return Err(Error::NotInvertible(format!(
                "constant coefficient {h0} is not a unit"
            )));
        }
        let norm = self.aut.apply_pow(&h0, m)?.inverse()?;
        self.skew_reciprocal()?.scale_left(&norm)
    }

    /// True iff f lies in the center R^Θ[x^e]: every exponent carrying a
    /// nonzero coefficient is a multiple of e = |Θ| and every such
    /// coefficient is Θ-fixed. Cross-checked in debug builds against the
    /// definition (commuting with x and with constants that generate R).
    pub fn is_central(&self) -> Result<bool> {
        let e = self.aut.order();
        let mut structural = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k % e != 0 || !self.aut.fixes(c)? {
                structural = false;
                break;
            }
        }
        #[cfg(debug_assertions)]
        {
            let x = SkewPoly::x_pow(&self.aut, 1);
            let mut definitional = self.mul(&x)? == x.mul(self)?;
            let spec = self.spec();
            for gen in [
                RElement::from_field(spec.gen()),
                RElement::u_times(spec.one()),
            ] {
                let c = SkewPoly::constant(&self.aut, gen)?;
                definitional = definitional && self.mul(&c)? == c.mul(self)?;
            }
            debug_assert_eq!(structural, definitional);
        }
        Ok(structural)
    }

    /// Coefficientwise Θ.
    pub fn apply_phi(&self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| self.aut.apply(c))
            .collect::<Result<Vec<_>>>()?;
        SkewPoly::new(self.aut.clone(), coeffs)
    }

    /// Generator of the Hermitian dual of the Θ-λ-constacyclic code
    /// generated by monic g: with xⁿ−λ = h·g, returns the monic associate
    /// of φ(h*). Validated against exhaustive annihilator computation in
    /// the code-level tests.
    pub fn dual_generator(g: &Self, n: usize, lambda: &RElement) -> Result<Self> {
        if !g.is_monic() {
            return Err(Error::InvalidParameter(format!("{g} is not monic")));
        }
        if !lambda.is_unit() {
            return Err(Error::InvalidParameter(format!(
                "shift constant {lambda} is not a unit"
            )));
        }
        if g.degree() > Some(n) {
            return Err(Error::DegreeError(format!(
                "deg {g} exceeds the code length {n}"
            )));
        }
        let modulus = SkewPoly::x_pow_minus(&g.aut, n, lambda)?;
        let (h, r) = modulus.left_divmod(g)?;
        if !r.is_zero() {
            return Err(Error::NotADivisor(format!(
                "{g} does not right-divide x^{n} - ({lambda})"
            )));
        }
        h.skew_reciprocal()?.apply_phi()?.monic()
    }

    /// Parses the term format `<RElement>*x^<k>` joined by `+`, accepting
    /// unordered terms, implicit coefficient 1, bare `x`, and `-`.
    pub fn parse(aut: &RingAutomorphism, s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::ParseError("empty polynomial".into()));
        }
        let spec = aut.spec();
        let mut acc = SkewPoly::zero(aut);
        for (term, negate) in split_top_level_terms(&compact)? {
            let (coeff, k) = match term.find('x') {
                None => (RElement::parse(spec, &term)?, 0),
                Some(pos) => {
                    let prefix = &term[..pos];
                    let suffix = &term[pos + 1..];
                    let coeff = if prefix.is_empty() {
                        RElement::one(spec)
                    } else if let Some(c) = prefix.strip_suffix('*') {
                        RElement::parse(spec, c)?
                    } else {
                        return Err(Error::ParseError(format!(
                            "expected `*` before x in term: {term}"
                        )));
                    };
                    let k = if suffix.is_empty() {
                        1
                    } else if let Some(kstr) = suffix.strip_prefix('^') {
                        kstr.parse::<usize>()
                            .map_err(|_| Error::ParseError(format!("bad exponent in: {term}")))?
                    } else {
                        return Err(Error::ParseError(format!(
                            "expected `^` after x in term: {term}"
                        )));
                    };
                    (coeff, k)
                }
            };
            let coeff = if negate { coeff.neg() } else { coeff };
            acc = acc.add(&SkewPoly::monomial(aut, coeff, k)?)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for SkewPoly {
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
                1 => "x".to_string(),
                _ => format!("x^{k}"),
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

/// Odometer over all length-`len` tuples drawn from `items`, in ascending
/// lexicographic order with the last position most significant.
pub(crate) struct Odometer<'a, T: Clone> {
    items: &'a [T],
    idx: Vec<usize>,
    done: bool,
}

impl<'a, T: Clone> Odometer<'a, T> {
    pub(crate) fn new(items: &'a [T], len: usize) -> Self {
        Odometer {
            items,
            idx: vec![0; len],
            done: items.is_empty() && len > 0,
        }
    }
}

impl<T: Clone> Iterator for Odometer<'_, T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().map(|&i| self.items[i].clone()).collect();
        let mut pos = 0;
        loop {
            if pos == self.idx.len() {
                self.done = true;
                break;
            }
            self.idx[pos] += 1;
            if self.idx[pos] < self.items.len() {
                break;
            }
            self.idx[pos] = 0;
            pos += 1;
        }
        Some(out)
    }
}

/// Deterministic total order on polynomials: by degree, then coefficients
/// from the highest power down, each compared by its coordinate vectors.
pub(crate) fn lex_cmp(a: &SkewPoly, b: &SkewPoly) -> Ordering {
    let da = a.coeffs().len();
    let db = b.coeffs().len();
    if da != db {
        return da.cmp(&db);
    }
    for k in (0..da).rev() {
        let (ca, cb) = (a.coeff(k), b.coeff(k));
        let key = |e: &RElement| (e.a().coeffs().to_vec(), e.b().coeffs().to_vec());
        match key(&ca).cmp(&key(&cb)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn lex_min(a: SkewPoly, b: SkewPoly) -> SkewPoly {
    if lex_cmp(&b, &a) == Ordering::Less {
        b
    } else {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use proptest::prelude::*;

    fn f4_frobenius() -> RingAutomorphism {
        let spec = FieldSpec::new(2, 2, vec![1, 1, 1]).unwrap();
        RingAutomorphism::new(1, spec.one()).unwrap()
    }

    fn poly(aut: &RingAutomorphism, s: &str) -> SkewPoly {
        SkewPoly::parse(aut, s).unwrap()
    }

    #[test]
    fn skew_mul_examples() {
        let aut = f4_frobenius();
        let f = poly(&aut, "x + 1+u");
        assert_eq!(f.mul(&f).unwrap(), poly(&aut, "x^2 + 1"));
        let g = poly(&aut, "x^2 + (1+u)*x + 1");
        assert_eq!(g.mul(&SkewPoly::one(&aut)).unwrap(), g);
        // x·w = Θ(w)x = (w+1)x ≠ w·x
        let x = SkewPoly::x_pow(&aut, 1);
        let w = SkewPoly::constant(&aut, RElement::parse(aut.spec(), "w").unwrap()).unwrap();
        assert_eq!(x.mul(&w).unwrap(), poly(&aut, "(w+1)*x"));
        assert_ne!(x.mul(&w).unwrap(), w.mul(&x).unwrap());
    }

    #[test]
    fn right_division_examples() {
        let aut = f4_frobenius();
        let big = poly(&aut, "x^6 + 1");
        let g = poly(&aut, "x^3 + 1+u");
        let (q, r) = big.right_divmod(&g).unwrap();
        assert_eq!(q, g);
        assert!(r.is_zero());
        let (q, r) = g.right_divmod(&g).unwrap();
        assert!(q.is_one() && r.is_zero());
        let (q, r) = poly(&aut, "x^2 + 1")
            .right_divmod(&poly(&aut, "x + 1+u"))
            .unwrap();
        assert_eq!(q, poly(&aut, "x + 1+u"));
        assert!(r.is_zero());
        assert!(matches!(
            g.right_divmod(&SkewPoly::zero(&aut)),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(
            g.right_divmod(&poly(&aut, "u*x + 1")),
            Err(Error::NotAUnit(_))
        ));
    }

    #[test]
    fn left_division_examples() {
        let aut = f4_frobenius();
        let f = poly(&aut, "x^3 + 1+u");
        let g = poly(&aut, "x^2 + (1+u)*x + 1");
        let (q, r) = f.left_divmod(&g).unwrap();
        assert_eq!(q, poly(&aut, "x + 1+u"));
        assert!(r.is_zero());
        let (q, r) = f.left_divmod(&f).unwrap();
        assert!(q.is_one() && r.is_zero());
        let (q, r) = poly(&aut, "x^2").left_divmod(&poly(&aut, "x")).unwrap();
        assert_eq!(q, poly(&aut, "x"));
        assert!(r.is_zero());
    }

    #[test]
    fn gcrd_examples() {
        let aut = f4_frobenius();
        assert_eq!(
            SkewPoly::gcrd(&poly(&aut, "x^2 + 1"), &poly(&aut, "x + 1+u")).unwrap(),
            poly(&aut, "x + 1+u")
        );
        // gcrd(f, f) is the monic associate of f
        let f = poly(&aut, "(1+u)*x + 1");
        assert_eq!(SkewPoly::gcrd(&f, &f).unwrap(), poly(&aut, "x + 1+u"));
        assert!(
            SkewPoly::gcrd(&poly(&aut, "x^2 + 1"), &poly(&aut, "x^2 + (1+u)*x + 1"))
                .unwrap()
                .is_one()
        );
        // chain hits the constant remainder u; the answer is still exact
        assert!(SkewPoly::gcrd(&poly(&aut, "x + 1"), &poly(&aut, "x + 1+u"))
            .unwrap()
            .is_one());
        // stall on a longer remainder (u·x) exercises the search fallback
        assert!(
            SkewPoly::gcrd(&poly(&aut, "x^2 + (1+u)*x + 1"), &poly(&aut, "x^2 + x + 1"))
                .unwrap()
                .is_one()
        );
        assert!(matches!(
            SkewPoly::gcrd(&poly(&aut, "u*x + 1"), &poly(&aut, "x")),
            Err(Error::UnsupportedCoefficients(_))
        ));
    }

    #[test]
    fn lcrm_examples() {
        let aut = f4_frobenius();
        assert_eq!(
            SkewPoly::lcrm(&poly(&aut, "x + 1+u"), &poly(&aut, "x^2 + (1+u)*x + 1")).unwrap(),
            poly(&aut, "x^3 + 1+u")
        );
        let f = poly(&aut, "(1+u)*x + 1");
        assert_eq!(SkewPoly::lcrm(&f, &f).unwrap(), poly(&aut, "x + 1+u"));
        // the chain stalls on remainder u; the linear fallback resolves it
        assert_eq!(
            SkewPoly::lcrm(&poly(&aut, "x + 1"), &poly(&aut, "x + 1+u")).unwrap(),
            poly(&aut, "x^2 + 1")
        );
    }

    #[test]
    fn lcrm_degree_identity_on_stall_pair() {
        let aut = f4_frobenius();
        let f = poly(&aut, "x^2 + (1+u)*x + 1");
        let g = poly(&aut, "x^2 + x + 1");
        let h = SkewPoly::lcrm(&f, &g).unwrap();
        assert_eq!(h.degree(), Some(4));
        assert!(h.is_right_divisible_by(&f).unwrap());
        assert!(h.is_right_divisible_by(&g).unwrap());
    }

    #[test]
    fn reciprocal_examples() {
        let aut = f4_frobenius();
        assert_eq!(
            poly(&aut, "x + 1+u").skew_reciprocal().unwrap(),
            poly(&aut, "(1+u)*x + 1")
        );
        assert!(SkewPoly::one(&aut).skew_reciprocal().unwrap().is_one());
        assert_eq!(
            poly(&aut, "x^3 + 1+u").skew_reciprocal().unwrap(),
            poly(&aut, "(1+u)*x^3 + 1")
        );
        assert_eq!(
            poly(&aut, "x + 1+u").monic_skew_reciprocal().unwrap(),
            poly(&aut, "x + 1+u")
        );
        let g = poly(&aut, "x^2 + (1+u)*x + 1");
        assert_eq!(g.monic_skew_reciprocal().unwrap(), g);
        assert_eq!(
            poly(&aut, "x + 1").monic_skew_reciprocal().unwrap(),
            poly(&aut, "x + 1")
        );
        assert!(matches!(
            poly(&aut, "x + u").monic_skew_reciprocal(),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn reciprocal_involution() {
        let aut = f4_frobenius();
        for c in RElement::units(aut.spec()).unwrap() {
            let h = SkewPoly::new(aut.clone(), vec![c, RElement::one(aut.spec())]).unwrap();
            let twice = h
                .monic_skew_reciprocal()
                .unwrap()
                .monic_skew_reciprocal()
                .unwrap();
            assert_eq!(twice, h);
        }
        let h = poly(&aut, "x^3 + 1+u");
        assert_eq!(
            h.monic_skew_reciprocal()
                .unwrap()
                .monic_skew_reciprocal()
                .unwrap(),
            h
        );
        // the normalization constant is twisted by Θ^i across the support,
        // so ♮ is not an involution once the constant coefficient is not
        // Θ-fixed and an odd-degree coefficient is nonzero:
        // (x²+wx+w)♮ = x²+wx+w², and (x²+wx+w²)♮ = x²+x+w
        let h = poly(&aut, "x^2 + w*x + w");
        let once = h.monic_skew_reciprocal().unwrap();
        assert_eq!(once, poly(&aut, "x^2 + w*x + w^2"));
        let twice = once.monic_skew_reciprocal().unwrap();
        assert_eq!(twice, poly(&aut, "x^2 + x + w"));
        assert_ne!(twice, h);
        // with only even-degree support the twist cannot act: ♮ swaps
        // x²+w and x²+w² and squares to the identity on them
        let h = poly(&aut, "x^2 + w");
        assert_eq!(h.monic_skew_reciprocal().unwrap(), poly(&aut, "x^2 + w^2"));
        assert_eq!(
            h.monic_skew_reciprocal()
                .unwrap()
                .monic_skew_reciprocal()
                .unwrap(),
            h
        );
    }

    #[test]
    fn centrality_examples() {
        let aut = f4_frobenius();
        assert!(poly(&aut, "x^6 + 1").is_central().unwrap());
        assert!(SkewPoly::one(&aut).is_central().unwrap());
        assert!(!poly(&aut, "w*x^2").is_central().unwrap());
        assert!(!poly(&aut, "x^3").is_central().unwrap());
        assert!(poly(&aut, "u*x^2").is_central().unwrap());
    }

    #[test]
    fn central_elements_commute() {
        let aut = f4_frobenius();
        let central = poly(&aut, "x^2 + 1");
        for g in [
            poly(&aut, "x + w"),
            poly(&aut, "w*x^3 + u*x + 1+u"),
            poly(&aut, "x^2 + (w+u)*x"),
        ] {
            assert_eq!(central.mul(&g).unwrap(), g.mul(&central).unwrap());
        }
    }

    #[test]
    fn phi_examples() {
        let aut = f4_frobenius();
        assert_eq!(
            poly(&aut, "w*x + u").apply_phi().unwrap(),
            poly(&aut, "(w+1)*x + u")
        );
        let fixed = poly(&aut, "x^2 + 1+u");
        assert_eq!(fixed.apply_phi().unwrap(), fixed);
        let f = poly(&aut, "w*x^2 + (w+u*w)*x + 1");
        assert_eq!(f.apply_phi().unwrap().apply_phi().unwrap(), f);
    }

    #[test]
    fn dual_generator_examples() {
        let aut = f4_frobenius();
        let one = RElement::one(aut.spec());
        let g = poly(&aut, "x^3 + 1+u");
        assert_eq!(SkewPoly::dual_generator(&g, 6, &one).unwrap(), g);
        let full = poly(&aut, "x^2 + 1");
        assert!(SkewPoly::dual_generator(&full, 2, &one).unwrap().is_one());
        let g = poly(&aut, "x + 1+u");
        assert_eq!(SkewPoly::dual_generator(&g, 2, &one).unwrap(), g);
        assert!(matches!(
            SkewPoly::dual_generator(&poly(&aut, "x + u"), 2, &one),
            Err(Error::NotADivisor(_))
        ));
        assert!(SkewPoly::dual_generator(&poly(&aut, "(1+u)*x + 1"), 2, &one).is_err());
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let aut = f4_frobenius();
        let cases = [
            "x^3 + 1+u",
            "x^2 + (1+u)*x + 1",
            "x^2 + w",
            "(w+1)*x",
            "u*x^2 + w*x + u*(w+1)",
            "0",
            "1",
        ];
        for s in cases {
            let p = poly(&aut, s);
            assert_eq!(poly(&aut, &p.to_string()), p, "roundtrip of {s}");
        }
        assert_eq!(poly(&aut, "x^3 + 1+u").to_string(), "x^3 + 1+u");
        assert_eq!(
            poly(&aut, "1+u + x^3"),
            poly(&aut, "x^3 + 1+u"),
            "unordered terms accumulate"
        );
        assert_eq!(poly(&aut, "x"), SkewPoly::x_pow(&aut, 1));
        assert!(SkewPoly::parse(&aut, "x^").is_err());
        assert!(SkewPoly::parse(&aut, "wx").is_err());
        assert!(SkewPoly::parse(&aut, "").is_err());
    }

    #[test]
    fn negacyclic_modulus_over_odd_characteristic() {
        let spec = FieldSpec::new(5, 1, vec![0, 1]).unwrap();
        let aut = RingAutomorphism::new(0, spec.constant(4)).unwrap();
        let lambda = RElement::from_field(spec.constant(4));
        let modulus = SkewPoly::x_pow_minus(&aut, 2, &lambda).unwrap();
        assert_eq!(modulus, SkewPoly::parse(&aut, "x^2 + 1").unwrap());
    }

    fn arb_relement(aut: RingAutomorphism) -> impl Strategy<Value = RElement> {
        let all = RElement::all_elements(aut.spec()).unwrap();
        (0..all.len()).prop_map(move |i| all[i].clone())
    }

    fn arb_poly(aut: RingAutomorphism, max_deg: usize) -> impl Strategy<Value = SkewPoly> {
        let inner = aut.clone();
        proptest::collection::vec(arb_relement(aut), 0..=max_deg + 1)
            .prop_map(move |coeffs| SkewPoly::new(inner.clone(), coeffs).unwrap())
    }

    proptest! {
        #[test]
        fn mul_is_associative_and_distributive(
            f in arb_poly(f4_frobenius(), 4),
            g in arb_poly(f4_frobenius(), 4),
            h in arb_poly(f4_frobenius(), 4),
        ) {
            let fg_h = f.mul(&g).unwrap().mul(&h).unwrap();
            let f_gh = f.mul(&g.mul(&h).unwrap()).unwrap();
            prop_assert_eq!(fg_h, f_gh);
            let lhs = f.mul(&g.add(&h).unwrap()).unwrap();
            let rhs = f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = f.add(&g).unwrap().mul(&h).unwrap();
            let rhs = f.mul(&h).unwrap().add(&g.mul(&h).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn division_roundtrips(
            f in arb_poly(f4_frobenius(), 5),
            g in arb_poly(f4_frobenius(), 3),
        ) {
            prop_assume!(!g.is_zero() && g.leading().unwrap().is_unit());
            let (q, r) = f.right_divmod(&g).unwrap();
            prop_assert_eq!(&f, &g.mul(&q).unwrap().add(&r).unwrap());
            prop_assert!(r.degree() < g.degree() || r.is_zero());
            let (q, r) = f.left_divmod(&g).unwrap();
            prop_assert_eq!(&f, &q.mul(&g).unwrap().add(&r).unwrap());
            prop_assert!(r.degree() < g.degree() || r.is_zero());
        }

        #[test]
        fn gcrd_lcrm_contracts(
            f in arb_poly(f4_frobenius(), 2),
            g in arb_poly(f4_frobenius(), 2),
        ) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            prop_assume!(f.has_unit_coefficients() && g.has_unit_coefficients());
            let d = SkewPoly::gcrd(&f, &g).unwrap();
            prop_assert!(f.is_right_divisible_by(&d).unwrap());
            prop_assert!(g.is_right_divisible_by(&d).unwrap());
            let h = SkewPoly::lcrm(&f, &g).unwrap();
            prop_assert!(h.is_right_divisible_by(&f).unwrap());
            prop_assert!(h.is_right_divisible_by(&g).unwrap());
            prop_assert_eq!(
                h.degree().unwrap() + d.degree().unwrap(),
                f.degree().unwrap() + g.degree().unwrap()
            );
        }
    }
}
