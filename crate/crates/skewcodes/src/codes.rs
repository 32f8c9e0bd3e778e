//! Linear codes over R: generator matrices from polynomials, twisted
//! shifts, Hermitian duality, self-duality checks, and exact brute-force
//! distance computation. Module membership over R is decided through the
//! F_q coordinate expansion (a-parts first, then u-parts), which realizes
//! the two-stage row reduction the chain-ring structure calls for.

use crate::chain_ring::{RElement, RingAutomorphism};
use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::gray;
use crate::linalg;
use crate::skew_poly::{Odometer, SkewPoly};
use std::fmt;
use std::str::FromStr;

/// Default enumeration budget for distance computations.
pub const DEFAULT_DISTANCE_BUDGET: u128 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Hamming,
    Lee,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::Hamming => write!(f, "hamming"),
            Metric::Lee => write!(f, "lee"),
        }
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hamming" => Ok(Metric::Hamming),
            "lee" => Ok(Metric::Lee),
            other => Err(Error::ParseError(format!(
                "unknown metric {other}; expected hamming or lee"
            ))),
        }
    }
}

/// The twisted shift ρ_{Θ,λ}(a₀,…,a_{n−1}) = (Θ(λa_{n−1}), Θ(a₀), …, Θ(a_{n−2})).
#[derive(Debug, Clone)]
pub struct ShiftOperator {
    aut: RingAutomorphism,
    lambda: RElement,
}

impl ShiftOperator {
    pub fn new(aut: RingAutomorphism, lambda: RElement) -> Result<Self> {
        if !lambda.is_unit() {
            return Err(Error::NotAUnit(format!("shift constant {lambda}")));
        }
        if !lambda.a().same_spec(aut.beta()) {
            return Err(Error::SpecMismatch);
        }
        Ok(ShiftOperator { aut, lambda })
    }

    pub fn aut(&self) -> &RingAutomorphism {
        &self.aut
    }

    pub fn lambda(&self) -> &RElement {
        &self.lambda
    }

    pub fn apply(&self, v: &[RElement]) -> Result<Vec<RElement>> {
        let n = v.len();
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut out = Vec::with_capacity(n);
        out.push(self.aut.apply(&self.lambda.mul(&v[n - 1])?)?);
        for e in &v[..n - 1] {
            out.push(self.aut.apply(e)?);
        }
        Ok(out)
    }
}

/// A linear code over R given by a generator matrix (the code is the set
/// of left R-combinations of the rows).
#[derive(Debug, Clone)]
pub struct LinearCode {
    n: usize,
    rows: Vec<Vec<RElement>>,
    aut: RingAutomorphism,
    lambda: Option<RElement>,
}

impl LinearCode {
    pub fn from_rows(aut: RingAutomorphism, n: usize, rows: Vec<Vec<RElement>>) -> Result<Self> {
        for row in &rows {
            if row.len() != n {
                return Err(Error::InvalidParameter(format!(
                    "generator row of length {} in a code of length {n}",
                    row.len()
                )));
            }
            for e in row {
                if !e.a().same_spec(aut.beta()) {
                    return Err(Error::SpecMismatch);
                }
            }
        }
        Ok(LinearCode {
            n,
            rows,
            aut,
            lambda: None,
        })
    }

    pub fn with_lambda(mut self, lambda: RElement) -> Self {
        self.lambda = Some(lambda);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<RElement>] {
        &self.rows
    }

    pub fn aut(&self) -> &RingAutomorphism {
        &self.aut
    }

    pub fn lambda(&self) -> Option<&RElement> {
        self.lambda.as_ref()
    }

    /// F_q coordinates of an R vector: a-parts first, then u-parts.
    fn fq_coords(&self, v: &[RElement]) -> Vec<FieldElement> {
        let mut out = Vec::with_capacity(2 * self.n);
        for e in v {
            out.push(e.a().clone());
        }
        for e in v {
            out.push(e.b().clone());
        }
        out
    }

    fn relements_from_coords(&self, v: &[FieldElement]) -> Result<Vec<RElement>> {
        (0..self.n)
            .map(|i| RElement::new(v[i].clone(), v[self.n + i].clone()))
            .collect()
    }

    /// Reduced F_q basis of the code: the R-span of the rows equals the
    /// F_q-span of the rows together with their u-multiples.
    fn expansion(&self) -> Result<(Vec<Vec<FieldElement>>, Vec<usize>)> {
        let spec = self.aut.spec();
        let mut fq_rows = Vec::with_capacity(2 * self.rows.len());
        for row in &self.rows {
            fq_rows.push(self.fq_coords(row));
            let u_row: Vec<RElement> = row
                .iter()
                .map(|e| RElement::new(spec.zero(), e.a().clone()))
                .collect::<Result<_>>()?;
            fq_rows.push(self.fq_coords(&u_row));
        }
        let pivots = linalg::rref(&mut fq_rows)?;
        Ok((fq_rows, pivots))
    }

    /// log_q of the code size.
    pub fn rank_fq(&self) -> Result<usize> {
        Ok(self.expansion()?.1.len())
    }

    /// |C| = q^rank.
    pub fn cardinality(&self) -> Result<u128> {
        let q = self.aut.spec().q()?;
        let rank = self.rank_fq()? as u32;
        q.checked_pow(rank).ok_or(Error::BudgetExceeded {
            required: u128::MAX,
            budget: u128::MAX,
        })
    }

    pub fn contains(&self, v: &[RElement]) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "vector of length {} tested against a code of length {}",
                v.len(),
                self.n
            )));
        }
        let (basis, pivots) = self.expansion()?;
        linalg::in_row_space(&basis, &pivots, &self.fq_coords(v))
    }

    /// All q^rank codewords, within budget.
    pub fn codewords(&self, budget: u128) -> Result<Vec<Vec<RElement>>> {
        let spec = self.aut.spec();
        let q = spec.q()?;
        let (basis, _) = self.expansion()?;
        let rank = basis.len() as u32;
        let count = q.checked_pow(rank).ok_or(Error::BudgetExceeded {
            required: u128::MAX,
            budget,
        })?;
        if count > budget {
            return Err(Error::BudgetExceeded {
                required: count,
                budget,
            });
        }
        let elems = spec.elements()?;
        let mut out = Vec::with_capacity(count as usize);
        for combo in Odometer::new(&elems, basis.len()) {
            let mut acc = vec![spec.zero(); 2 * self.n];
            for (c, row) in combo.iter().zip(&basis) {
                if c.is_zero() {
                    continue;
                }
                for (dst, src) in acc.iter_mut().zip(row) {
                    *dst = dst.add(&src.mul(c)?)?;
                }
            }
            out.push(self.relements_from_coords(&acc)?);
        }
        Ok(out)
    }

    /// Generator matrix of the Gray image: Φ applied to an F_q basis of
    /// the code, giving a rank × 2n matrix over F_q.
    pub fn gray_generator_matrix(&self) -> Result<Vec<Vec<FieldElement>>> {
        let (basis, _) = self.expansion()?;
        basis
            .iter()
            .map(|row| gray::gray_map(&self.relements_from_coords(row)?))
            .collect()
    }

    /// {"n":…, "k":…, "rows":[[…]]} with entries in the ring-element text
    /// format.
    pub fn matrix_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "k": self.rows.len(),
            "rows": self.rows.iter().map(|row| {
                row.iter().map(|e| e.to_string()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

/// The k×n generator matrix of the code generated by monic g of degree
/// n−k: row j carries Θʲ(g₀)…Θʲ(g_{n−k−1}) starting at column j, followed
/// by a 1 — the coefficient vector of xʲ·g.
pub fn generator_matrix_from(g: &SkewPoly, n: usize) -> Result<LinearCode> {
    let aut = g.aut().clone();
    let spec = aut.spec();
    let Some(d) = g.degree() else {
        return Err(Error::DegreeError(
            "the zero polynomial generates no code".into(),
        ));
    };
    if !g.is_monic() {
        return Err(Error::InvalidParameter(format!("{g} is not monic")));
    }
    if d > n {
        return Err(Error::DegreeError(format!(
            "deg {g} exceeds the code length {n}"
        )));
    }
    let k = n - d;
    let mut rows = Vec::with_capacity(k);
    for j in 0..k {
        let mut row = vec![RElement::zero(spec); n];
        for i in 0..=d {
            row[j + i] = aut.apply_pow(&g.coeff(i), j)?;
        }
        rows.push(row);
    }
    LinearCode::from_rows(aut, n, rows)
}

/// Is the code closed under the given twisted shift? Exact via generator
/// membership: the shift is additive and semilinear, so closure of the
/// generator rows is equivalent to closure of the code.
pub fn is_skew_constacyclic(code: &LinearCode, op: &ShiftOperator) -> Result<bool> {
    for row in code.rows() {
        if !code.contains(&op.apply(row)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// ⟨x, y⟩_H = Σ xᵢ·Θ(yᵢ); requires |Θ| = 2.
pub fn hermitian_inner_product(
    x: &[RElement],
    y: &[RElement],
    aut: &RingAutomorphism,
) -> Result<RElement> {
    if aut.order() != 2 {
        return Err(Error::OrderMismatch {
            expected: 2,
            found: aut.order(),
        });
    }
    if x.len() != y.len() {
        return Err(Error::InvalidParameter(format!(
            "inner product of vectors of lengths {} and {}",
            x.len(),
            y.len()
        )));
    }
    let mut acc = RElement::zero(aut.spec());
    for (a, b) in x.iter().zip(y) {
        acc = acc.add(&a.mul(&aut.apply(b)?)?)?;
    }
    Ok(acc)
}

/// C = C^⊥H: all pairwise row products vanish and |C| = |R|^{n/2}.
pub fn is_hermitian_self_dual(code: &LinearCode) -> Result<bool> {
    if code.aut().order() != 2 {
        return Err(Error::OrderMismatch {
            expected: 2,
            found: code.aut().order(),
        });
    }
    if code.n() % 2 != 0 {
        return Ok(false);
    }
    for x in code.rows() {
        for y in code.rows() {
            if !hermitian_inner_product(x, y, code.aut())?.is_zero() {
                return Ok(false);
            }
        }
    }
    // |C| = |R|^{n/2} = q^n
    Ok(code.rank_fq()? == code.n())
}

/// The polynomial self-duality identity: for monic g of degree k = n/2
/// with unit constant term, builds the explicit second factor
/// Θ^{−k−1}(g₀⁻¹) + Σ_{i=1}^{k−1} Θ^{i−k−1}(g₀⁻¹·g_{k−i})·xⁱ + x^k
/// and tests g · (that factor) = xⁿ − λ. Negative Θ-powers are taken in
/// the order-2 group, Θ⁻¹ = Θ.
pub fn check_selfdual_condition(g: &SkewPoly, n: usize, lambda: &RElement) -> Result<bool> {
    let aut = g.aut().clone();
    if aut.order() != 2 {
        return Err(Error::OrderMismatch {
            expected: 2,
            found: aut.order(),
        });
    }
    if n % 2 != 0 {
        return Err(Error::UnsupportedLength {
            n,
            reason: "the self-duality identity applies to even lengths".into(),
        });
    }
    let k = n / 2;
    if g.degree() != Some(k) {
        return Err(Error::DegreeError(format!(
            "the generator must have degree {k} for length {n}, got {g}"
        )));
    }
    if !g.is_monic() {
        return Err(Error::InvalidParameter(format!("{g} is not monic")));
    }
    let g0 = g.coeff(0);
    if !g0.is_unit() {
        return Err(Error::NotInvertible(format!(
            "constant coefficient {g0} is not a unit"
        )));
    }
    let g0_inv = g0.inverse()?;
    let spec = aut.spec();
    let mut coeffs = vec![RElement::zero(spec); k + 1];
    coeffs[0] = aut.apply_pow_signed(&g0_inv, -(k as i64) - 1)?;
    for i in 1..k {
        let prod = g0_inv.mul(&g.coeff(k - i))?;
        coeffs[i] = aut.apply_pow_signed(&prod, i as i64 - k as i64 - 1)?;
    }
    coeffs[k] = RElement::one(spec);
    let second = SkewPoly::new(aut.clone(), coeffs)?;
    let product = g.mul(&second)?;
    Ok(product == SkewPoly::x_pow_minus(&aut, n, lambda)?)
}

/// The reciprocal form of the self-duality test: g·g♮ = xⁿ − 1.
pub fn selfdual_by_reciprocal(g: &SkewPoly, n: usize) -> Result<bool> {
    let aut = g.aut();
    let product = g.mul(&g.monic_skew_reciprocal()?)?;
    let one = RElement::one(aut.spec());
    Ok(product == SkewPoly::x_pow_minus(aut, n, &one)?)
}

/// Exact minimum weight over all nonzero codewords.
pub fn min_distance(code: &LinearCode, metric: Metric, budget: u128) -> Result<usize> {
    let words = code.codewords(budget)?;
    let mut best: Option<usize> = None;
    for w in &words {
        if w.iter().all(RElement::is_zero) {
            continue;
        }
        let weight = match metric {
            Metric::Hamming => w.iter().filter(|e| !e.is_zero()).count(),
            Metric::Lee => gray::lee_weight(w)?,
        };
        best = Some(best.map_or(weight, |b| b.min(weight)));
    }
    best.ok_or_else(|| Error::InvalidParameter("the zero code has no nonzero codeword".into()))
}

/// The index-ℓ quasi-twisted shift with no field twist: rotate by ℓ
/// positions, multiplying the wrapped entries by λ.
pub fn quasi_twisted_block_shift(
    v: &[RElement],
    ell: usize,
    lambda: &RElement,
) -> Result<Vec<RElement>> {
    let n = v.len();
    if n == 0 || ell == 0 || n % ell != 0 {
        return Err(Error::InvalidParameter(format!(
            "block size {ell} does not divide the length {n}"
        )));
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        if i < ell {
            out.push(lambda.mul(&v[n - ell + i])?);
        } else {
            out.push(v[i - ell].clone());
        }
    }
    Ok(out)
}
