//! End-to-end construction of all self-dual twisted-cyclic generator
//! polynomials of a given even length, plus closed-form existence
//! predicates for self-dual twisted-cyclic and twisted-negacyclic codes.
//!
//! The construction decomposes xⁿ−1 into central factors, searches each
//! factor F for the set G = {g monic, unit constant term : g♮·g = F} by
//! exhaustive enumeration (an exact replacement for elimination-based
//! solving, flagged in the report), and combines one choice per factor
//! through least common left multiples.

use crate::chain_ring::{RElement, RingAutomorphism};
use crate::codes::{self, Metric};
use crate::error::{Error, Result};
use crate::factorize::{decompose_xn_minus_1, CentralFactorization};
use crate::gf::multiplicative_order;
use crate::skew_poly::{Odometer, SkewPoly};
use std::fmt;
use std::str::FromStr;

/// Default candidate budget for the factor-set searches.
pub const DEFAULT_SEARCH_BUDGET: u128 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Existence {
    Exists,
    NotExists,
    NotCovered,
}

impl fmt::Display for Existence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Existence::Exists => write!(f, "exists"),
            Existence::NotExists => write!(f, "not_exists"),
            Existence::NotCovered => write!(f, "not_covered"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeKind {
    Cyclic,
    Negacyclic,
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeKind::Cyclic => write!(f, "cyclic"),
            CodeKind::Negacyclic => write!(f, "negacyclic"),
        }
    }
}

impl FromStr for CodeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cyclic" => Ok(CodeKind::Cyclic),
            "negacyclic" => Ok(CodeKind::Negacyclic),
            other => Err(Error::ParseError(format!(
                "unknown code kind {other}; expected cyclic or negacyclic"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConstructOptions {
    pub search_budget: u128,
    pub distance_budget: u128,
    pub compute_distances: bool,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions {
            search_budget: DEFAULT_SEARCH_BUDGET,
            distance_budget: codes::DEFAULT_DISTANCE_BUDGET,
            compute_distances: false,
        }
    }
}

/// Full output of the construction: the central factorization, the
/// candidate set per factor, the surviving generators with verification
/// results, the outputs rejected by the final checks, and the alternate
/// combination (lclm of the gᵢ instead of the gᵢ♮) for comparison.
#[derive(Debug, Clone)]
pub struct ConstructionReport {
    n: usize,
    aut: RingAutomorphism,
    factorization: CentralFactorization,
    candidate_sets: Vec<Vec<SkewPoly>>,
    generators: Vec<SkewPoly>,
    alt_generators: Vec<SkewPoly>,
    readings_agree: bool,
    rejected: Vec<SkewPoly>,
    skipped_tuples: usize,
    verified: Vec<bool>,
    distances: Option<Vec<(usize, usize)>>,
}

impl ConstructionReport {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn aut(&self) -> &RingAutomorphism {
        &self.aut
    }

    pub fn factorization(&self) -> &CentralFactorization {
        &self.factorization
    }

    pub fn candidate_sets(&self) -> &[Vec<SkewPoly>] {
        &self.candidate_sets
    }

    pub fn generators(&self) -> &[SkewPoly] {
        &self.generators
    }

    /// Outputs of the alternate combination lclm(g₁, …, g_l); the primary
    /// reading combines the reciprocals lclm(g₁♮, …, g_l♮).
    pub fn alt_generators(&self) -> &[SkewPoly] {
        &self.alt_generators
    }

    pub fn readings_agree(&self) -> bool {
        self.readings_agree
    }

    /// Combined outputs that failed a final check (degree, unit
    /// coefficients when n/2 is odd, or the self-duality identity).
    pub fn rejected(&self) -> &[SkewPoly] {
        &self.rejected
    }

    /// Factor-choice tuples whose lclm computation was not expressible
    /// (non-unit coefficients in an intermediate).
    pub fn skipped_tuples(&self) -> usize {
        self.skipped_tuples
    }

    pub fn verified(&self) -> &[bool] {
        &self.verified
    }

    /// Per-generator (Hamming, Lee) minimum distances when requested.
    pub fn distances(&self) -> Option<&[(usize, usize)]> {
        self.distances.as_deref()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let strings = |v: &[SkewPoly]| -> Vec<String> { v.iter().map(|g| g.to_string()).collect() };
        let distances = match &self.distances {
            Some(list) => {
                let mut map = serde_json::Map::new();
                for (g, (h, l)) in self.generators.iter().zip(list) {
                    map.insert(g.to_string(), serde_json::json!({"hamming": h, "lee": l}));
                }
                serde_json::Value::Object(map)
            }
            None => serde_json::json!({}),
        };
        serde_json::json!({
            "n": self.n,
            "field": self.aut.spec().to_string(),
            "automorphism": {
                "r": self.aut.r(),
                "beta": self.aut.beta().to_string(),
                "order": self.aut.order(),
            },
            "factors": strings(self.factorization.lifted()),
            "G": self.candidate_sets.iter().map(|s| strings(s)).collect::<Vec<_>>(),
            "generators": strings(&self.generators),
            "verified": self.verified,
            "distances": distances,
            "alternate_generators": strings(&self.alt_generators),
            "readings_agree": self.readings_agree,
            "rejected": strings(&self.rejected),
            "skipped_tuples": self.skipped_tuples,
            "method": "exhaustive factor-set enumeration",
        })
    }
}

/// The exact set of monic degree-d polynomials g with unit constant
/// coefficient satisfying g♮·g = F, where F is monic, central, of degree
/// 2d. Found by exhaustive enumeration over all (q²−q)·q^{2(d−1)}
/// coefficient tuples.
pub fn search_factor_set(f: &SkewPoly, budget: u128) -> Result<Vec<SkewPoly>> {
    let aut = f.aut().clone();
    let spec = aut.spec();
    let Some(deg) = f.degree() else {
        return Err(Error::InvalidParameter(
            "cannot search factors of the zero polynomial".into(),
        ));
    };
    if !f.is_monic() {
        return Err(Error::InvalidParameter(format!("{f} is not monic")));
    }
    if deg % 2 != 0 {
        return Err(Error::DegreeError(format!(
            "factor search needs an even-degree target, got degree {deg}"
        )));
    }
    if !f.is_central()? {
        return Err(Error::InvalidParameter(format!("{f} is not central")));
    }
    let d = deg / 2;
    if d == 0 {
        return Ok(vec![SkewPoly::one(&aut)]);
    }
    let q = spec.q()?;
    let r_size = q.checked_mul(q).ok_or(Error::BudgetExceeded {
        required: u128::MAX,
        budget,
    })?;
    let units = r_size - q;
    let mut count = units;
    for _ in 1..d {
        count = count.checked_mul(r_size).ok_or(Error::BudgetExceeded {
            required: u128::MAX,
            budget,
        })?;
    }
    if count > budget {
        return Err(Error::BudgetExceeded {
            required: count,
            budget,
        });
    }
    let unit_elems = RElement::units(spec)?;
    let all = RElement::all_elements(spec)?;
    let one = RElement::one(spec);
    let mut out = Vec::new();
    for g0 in &unit_elems {
        for middle in Odometer::new(&all, d - 1) {
            let mut coeffs = Vec::with_capacity(d + 1);
            coeffs.push(g0.clone());
            coeffs.extend(middle);
            coeffs.push(one.clone());
            let g = SkewPoly::new(aut.clone(), coeffs)?;
            if g.monic_skew_reciprocal()?.mul(&g)? == *f {
                out.push(g);
            }
        }
    }
    Ok(out)
}

fn lclm_fold(polys: &[SkewPoly]) -> Result<SkewPoly> {
    let mut acc = polys[0].monic()?;
    for p in &polys[1..] {
        acc = SkewPoly::lcrm(&acc, p)?;
    }
    Ok(acc)
}

fn dedup_polys(polys: Vec<SkewPoly>) -> Vec<SkewPoly> {
    let mut out: Vec<SkewPoly> = Vec::new();
    for p in polys {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

fn same_poly_set(a: &[SkewPoly], b: &[SkewPoly]) -> bool {
    a.len() == b.len() && a.iter().all(|p| b.contains(p)) && b.iter().all(|p| a.contains(p))
}

/// Split the combined outputs into accepted generators and rejected
/// candidates. Accepted: monic of degree n/2 (with all-unit nonzero
/// coefficients when n/2 is odd) passing the self-duality identity.
fn vet_outputs(
    outputs: Vec<SkewPoly>,
    n: usize,
    k_odd: bool,
    one: &RElement,
) -> Result<(Vec<SkewPoly>, Vec<SkewPoly>)> {
    let mut kept = Vec::new();
    let mut rejected = Vec::new();
    for g in outputs {
        if g.degree() != Some(n / 2) || (k_odd && !g.has_unit_coefficients()) {
            rejected.push(g);
            continue;
        }
        match codes::check_selfdual_condition(&g, n, one) {
            Ok(true) => kept.push(g),
            Ok(false) | Err(Error::NotInvertible(_)) => rejected.push(g),
            Err(e) => return Err(e),
        }
    }
    Ok((kept, rejected))
}

/// All generator polynomials of self-dual twisted-cyclic codes of even
/// length n reachable through the central factorization: decompose
/// xⁿ−1, search every factor set, combine one choice per factor with
/// lclm(g₁♮, …, g_l♮) over the full Cartesian product, deduplicate, and
/// verify each output.
pub fn construct_selfdual(
    n: usize,
    aut: &RingAutomorphism,
    opts: &ConstructOptions,
) -> Result<ConstructionReport> {
    if n == 0 || n % 2 != 0 {
        return Err(Error::UnsupportedLength {
            n,
            reason: "the construction needs an even length".into(),
        });
    }
    if aut.order() != 2 {
        return Err(Error::OrderMismatch {
            expected: 2,
            found: aut.order(),
        });
    }
    let spec = aut.spec();
    let one = RElement::one(spec);
    let factorization = decompose_xn_minus_1(n, aut)?;
    let mut candidate_sets = Vec::new();
    for f in factorization.lifted() {
        candidate_sets.push(search_factor_set(f, opts.search_budget)?);
    }

    let k = n / 2;
    let k_odd = k % 2 == 1;
    let mut primary_raw = Vec::new();
    let mut alt_raw = Vec::new();
    let mut skipped_tuples = 0usize;
    if candidate_sets.iter().all(|s| !s.is_empty()) {
        let lens: Vec<usize> = candidate_sets.iter().map(Vec::len).collect();
        let mut idx = vec![0usize; lens.len()];
        loop {
            let tuple: Vec<&SkewPoly> = idx
                .iter()
                .enumerate()
                .map(|(i, &j)| &candidate_sets[i][j])
                .collect();
            let recips: Vec<SkewPoly> = tuple
                .iter()
                .map(|g| g.monic_skew_reciprocal())
                .collect::<Result<_>>()?;
            match lclm_fold(&recips) {
                Ok(g) => primary_raw.push(g),
                Err(Error::UnsupportedCoefficients(_)) | Err(Error::DegreeError(_)) => {
                    skipped_tuples += 1;
                }
                Err(e) => return Err(e),
            }
            let plain: Vec<SkewPoly> = tuple.iter().map(|&g| g.clone()).collect();
            match lclm_fold(&plain) {
                Ok(g) => alt_raw.push(g),
                Err(Error::UnsupportedCoefficients(_)) | Err(Error::DegreeError(_)) => {
                    skipped_tuples += 1;
                }
                Err(e) => return Err(e),
            }
            // advance the mixed-radix index
            let mut pos = 0;
            loop {
                if pos == lens.len() {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < lens[pos] {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == lens.len() {
                break;
            }
        }
    }

    let (generators, rejected) = vet_outputs(dedup_polys(primary_raw), n, k_odd, &one)?;
    let (alt_generators, _) = vet_outputs(dedup_polys(alt_raw), n, k_odd, &one)?;
    let readings_agree = same_poly_set(&generators, &alt_generators);

    let modulus = SkewPoly::x_pow_minus(aut, n, &one)?;
    let mut verified = Vec::with_capacity(generators.len());
    let mut distances = opts.compute_distances.then(Vec::new);
    for g in &generators {
        let divides = modulus.is_right_divisible_by(g)?;
        let identity = codes::check_selfdual_condition(g, n, &one)?;
        let code = codes::generator_matrix_from(g, n)?.with_lambda(one.clone());
        let matrix = codes::is_hermitian_self_dual(&code)?;
        verified.push(divides && identity && matrix);
        if let Some(list) = distances.as_mut() {
            list.push((
                codes::min_distance(&code, Metric::Hamming, opts.distance_budget)?,
                codes::min_distance(&code, Metric::Lee, opts.distance_budget)?,
            ));
        }
    }

    Ok(ConstructionReport {
        n,
        aut: aut.clone(),
        factorization,
        candidate_sets,
        generators,
        alt_generators,
        readings_agree,
        rejected,
        skipped_tuples,
        verified,
        distances,
    })
}

/// All monic degree-d right divisors of xⁿ−λ, by exhaustive enumeration
/// of q^{2d} coefficient tuples. Divisors of xⁿ−λ automatically have
/// unit constant terms since λ is a unit.
pub fn right_divisors_of_degree(
    aut: &RingAutomorphism,
    n: usize,
    d: usize,
    lambda: &RElement,
    budget: u128,
) -> Result<Vec<SkewPoly>> {
    let spec = aut.spec();
    let modulus = SkewPoly::x_pow_minus(aut, n, lambda)?;
    if d > n {
        return Ok(Vec::new());
    }
    if d == 0 {
        return Ok(vec![SkewPoly::one(aut)]);
    }
    let q = spec.q()?;
    let r_size = q * q;
    let mut count: u128 = 1;
    for _ in 0..d {
        count = count.checked_mul(r_size).ok_or(Error::BudgetExceeded {
            required: u128::MAX,
            budget,
        })?;
    }
    if count > budget {
        return Err(Error::BudgetExceeded {
            required: count,
            budget,
        });
    }
    let all = RElement::all_elements(spec)?;
    let one = RElement::one(spec);
    let mut out = Vec::new();
    for lower in Odometer::new(&all, d) {
        let mut coeffs = lower;
        coeffs.push(one.clone());
        let cand = SkewPoly::new(aut.clone(), coeffs)?;
        if modulus.is_right_divisible_by(&cand)? {
            out.push(cand);
        }
    }
    Ok(out)
}

/// Independent brute-force oracle: all monic degree-(n/2) right divisors
/// of xⁿ−λ passing the self-duality identity.
pub fn exhaustive_selfdual_search(
    aut: &RingAutomorphism,
    n: usize,
    lambda: &RElement,
    budget: u128,
) -> Result<Vec<SkewPoly>> {
    if n % 2 != 0 {
        return Err(Error::UnsupportedLength {
            n,
            reason: "self-dual codes need even length".into(),
        });
    }
    let mut out = Vec::new();
    for g in right_divisors_of_degree(aut, n, n / 2, lambda, budget)? {
        if codes::check_selfdual_condition(&g, n, lambda)? {
            out.push(g);
        }
    }
    Ok(out)
}

fn pow_mod(base: u128, exp: usize, modulus: u128) -> u128 {
    let mut acc: u128 = 1 % modulus;
    let mut b = base % modulus;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % modulus;
        }
        b = b * b % modulus;
        e >>= 1;
    }
    acc
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_existence_params(p: u64, m: usize, k: u128) -> Result<()> {
    if p < 2 || m == 0 || k == 0 {
        return Err(Error::InvalidParameter(format!(
            "existence query needs p ≥ 2, m ≥ 1, k ≥ 1; got p={p}, m={m}, k={k}"
        )));
    }
    Ok(())
}

/// Existence of Hermitian self-dual twisted-cyclic codes of length 2k
/// over F_{p^m} + uF_{p^m} with an order-2 automorphism. Even p: always.
/// Odd p, even k: exists iff p^m ≡ 1 (mod 4). Odd p, odd k: the known
/// results settle only the negacyclic variant, so the cyclic question is
/// not covered.
pub fn exists_theta_cyclic(p: u64, m: usize, k: u128) -> Result<Existence> {
    check_existence_params(p, m, k)?;
    if p == 2 {
        return Ok(Existence::Exists);
    }
    if k % 2 == 0 {
        if pow_mod(p as u128, m, 4) == 1 {
            Ok(Existence::Exists)
        } else {
            Ok(Existence::NotExists)
        }
    } else {
        Ok(Existence::NotCovered)
    }
}

/// The negacyclic variant: for odd p and odd k such codes always exist;
/// in characteristic 2 the negacyclic and cyclic questions coincide.
/// Odd p with even k is not covered by the known results.
pub fn exists_theta_negacyclic(p: u64, m: usize, k: u128) -> Result<Existence> {
    check_existence_params(p, m, k)?;
    if p == 2 {
        return exists_theta_cyclic(p, m, k);
    }
    if k % 2 == 1 {
        Ok(Existence::Exists)
    } else {
        Ok(Existence::NotCovered)
    }
}

/// Existence of Hermitian self-dual codes of length 2k generated by a
/// skew binomial x^k + c, for Θ built from the r-th Frobenius power with
/// unit scaling β = 1. Requires odd p with p^m ≡ 1 (mod 4).
/// Cyclic: p ≡ 3 (mod 4), k and m even, r odd.
/// Negacyclic: k odd and either p ≡ 1 (mod 4), or p ≡ 3 (mod 4) with m
/// and r even.
pub fn exists_binomial(p: u64, m: usize, r: usize, k: u128, kind: CodeKind) -> Result<bool> {
    check_existence_params(p, m, k)?;
    if p == 2 || pow_mod(p as u128, m, 4) != 1 {
        return Err(Error::NotCovered(format!(
            "the binomial criterion needs odd p with p^m ≡ 1 (mod 4); got p={p}, m={m}"
        )));
    }
    Ok(match kind {
        CodeKind::Cyclic => p % 4 == 3 && k % 2 == 0 && m % 2 == 0 && r % 2 == 1,
        CodeKind::Negacyclic => {
            k % 2 == 1 && (p % 4 == 1 || (p % 4 == 3 && m % 2 == 0 && r % 2 == 0))
        }
    })
}

/// No Hermitian self-dual twisted-cyclic or twisted-negacyclic code over
/// a chain ring of odd characteristic is generated by a skew trinomial.
pub fn trinomial_exists(_p: u64, _m: usize, _r: usize, _k: u128, _kind: CodeKind) -> bool {
    false
}

/// The order obstruction for n = 2k with k odd, gcd(p^m, n) = 1 and p^m
/// odd: when the multiplicative order of p^m modulo n is even, no
/// non-trivial self-dual twisted-cyclic code of length n exists.
pub fn order_obstruction(n: u128, p: u64, m: usize) -> Result<bool> {
    check_existence_params(p, m, 1)?;
    if n % 2 != 0 || (n / 2) % 2 != 1 {
        return Err(Error::NotCovered(format!(
            "the order obstruction applies to n = 2k with k odd; got n={n}"
        )));
    }
    let mut q: u128 = 1;
    for _ in 0..m {
        q = q
            .checked_mul(p as u128)
            .ok_or_else(|| Error::InvalidParameter("p^m overflows".into()))?;
    }
    if q % 2 == 0 {
        return Err(Error::NotCovered(
            "the order obstruction needs odd characteristic".into(),
        ));
    }
    if gcd_u128(q, n) != 1 {
        return Err(Error::NotCovered(format!(
            "the order obstruction needs gcd(p^m, n) = 1; got p^m={q}, n={n}"
        )));
    }
    Ok(multiplicative_order(q % n, n)? % 2 == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;

    fn f4_frobenius() -> RingAutomorphism {
        let spec = FieldSpec::new(2, 2, vec![1, 1, 1]).unwrap();
        RingAutomorphism::new(1, spec.one()).unwrap()
    }

    fn poly(aut: &RingAutomorphism, s: &str) -> SkewPoly {
        SkewPoly::parse(aut, s).unwrap()
    }

    fn poly_set(aut: &RingAutomorphism, texts: &[&str]) -> Vec<SkewPoly> {
        texts.iter().map(|s| poly(aut, s)).collect()
    }

    #[test]
    fn factor_set_examples() {
        let aut = f4_frobenius();
        let g1 = search_factor_set(&poly(&aut, "x^2 + 1"), 1 << 20).unwrap();
        assert!(same_poly_set(&g1, &poly_set(&aut, &["x + u + 1", "x + 1"])));

        // besides the four members with unit or zero coefficients, the
        // exhaustive search finds two with a zero-divisor x-coefficient;
        // both re-multiply to x⁴+x²+1 in either order (g♮·g and g·g♮)
        let g2 = search_factor_set(&poly(&aut, "x^4 + x^2 + 1"), 1 << 20).unwrap();
        assert!(same_poly_set(
            &g2,
            &poly_set(
                &aut,
                &[
                    "x^2 + (u+1)*x + 1",
                    "x^2 + x + 1",
                    "x^2 + w^2",
                    "x^2 + w",
                    "x^2 + u*w*x + w",
                    "x^2 + u*w^2*x + w^2",
                ]
            )
        ));
        for g in &g2 {
            let f = poly(&aut, "x^4 + x^2 + 1");
            let rec = g.monic_skew_reciprocal().unwrap();
            assert_eq!(rec.mul(g).unwrap(), f);
        }

        let trivial = search_factor_set(&SkewPoly::one(&aut), 1 << 20).unwrap();
        assert_eq!(trivial, vec![SkewPoly::one(&aut)]);

        assert!(matches!(
            search_factor_set(&poly(&aut, "x^2 + 1"), 4),
            Err(Error::BudgetExceeded { .. })
        ));
        // x² + w is not central (w is not fixed by the Frobenius)
        assert!(search_factor_set(&poly(&aut, "x^2 + w"), 1 << 20).is_err());
    }

    #[test]
    fn construct_length_six() {
        let aut = f4_frobenius();
        let report = construct_selfdual(6, &aut, &ConstructOptions::default()).unwrap();
        let lifted: Vec<String> = report
            .factorization()
            .lifted()
            .iter()
            .map(|f| f.to_string())
            .collect();
        assert_eq!(lifted, vec!["x^2 + 1", "x^4 + x^2 + 1"]);
        assert!(report.generators().contains(&poly(&aut, "x^3 + u + 1")));
        assert!(report.verified().iter().all(|&v| v));
        assert!(report.readings_agree());
        for g in report.generators() {
            assert_eq!(g.degree(), Some(3));
            assert!(g.is_monic());
        }
    }

    #[test]
    fn construct_length_two() {
        let aut = f4_frobenius();
        let report = construct_selfdual(2, &aut, &ConstructOptions::default()).unwrap();
        assert!(same_poly_set(
            report.generators(),
            &poly_set(&aut, &["x + 1", "x + 1 + u"])
        ));
        assert!(report.verified().iter().all(|&v| v));
        assert!(report.rejected().is_empty());
    }

    #[test]
    fn construct_rejects_odd_length() {
        let aut = f4_frobenius();
        assert!(matches!(
            construct_selfdual(5, &aut, &ConstructOptions::default()),
            Err(Error::UnsupportedLength { .. })
        ));
    }

    #[test]
    fn construct_with_distances() {
        let aut = f4_frobenius();
        let opts = ConstructOptions {
            compute_distances: true,
            ..ConstructOptions::default()
        };
        let report = construct_selfdual(2, &aut, &opts).unwrap();
        let distances = report.distances().unwrap();
        assert_eq!(distances.len(), report.generators().len());
        for &(h, l) in distances {
            assert!(h >= 1 && l >= 1);
        }
        let json = report.to_json();
        assert_eq!(json["n"], 2);
        assert!(json["distances"].as_object().map_or(0, |m| m.len()) > 0);
        assert_eq!(json["method"], "exhaustive factor-set enumeration");
    }

    #[test]
    fn empty_factor_set_gives_empty_generators() {
        // over F₅ + uF₅ with Θ: u ↦ −u, the factor x²−1 admits no g with
        // g♮g = x²−1, so length 4 yields no generators by this route
        let spec = FieldSpec::new(5, 1, vec![0, 1]).unwrap();
        let aut = RingAutomorphism::new(0, spec.constant(4)).unwrap();
        assert_eq!(aut.order(), 2);
        let report = construct_selfdual(4, &aut, &ConstructOptions::default()).unwrap();
        assert!(report.candidate_sets().iter().any(|s| s.is_empty()));
        assert!(report.generators().is_empty());
    }

    #[test]
    fn divisor_enumeration_and_oracle() {
        let aut = f4_frobenius();
        let one = RElement::one(aut.spec());
        let divisors = right_divisors_of_degree(&aut, 2, 1, &one, 1 << 16).unwrap();
        // x² − 1 = x² + 1 over F₄+uF₄: the degree-1 right divisors x + c
        // are exactly those with c·Θ(c) = 1
        assert_eq!(divisors.len(), 6);
        for g in &divisors {
            assert!(g.has_unit_coefficients());
        }
        let found = exhaustive_selfdual_search(&aut, 2, &one, 1 << 16).unwrap();
        // all six divisors pass the self-duality identity at length 2
        assert_eq!(found.len(), 6);
        assert!(found.contains(&poly(&aut, "x + 1")));
        assert!(found.contains(&poly(&aut, "x + w")));
    }

    #[test]
    fn oracle_contains_construct_output() {
        // the factor-set route is sound but not complete: the brute-force
        // oracle reaches self-dual generators whose lclm combinations are
        // not expressible over unit coefficients (counts frozen below)
        let aut = f4_frobenius();
        let one = RElement::one(aut.spec());
        let expected = [(2usize, 2usize, 6usize), (4, 4, 8), (6, 2, 36)];
        for (n, constructed, found) in expected {
            let report = construct_selfdual(n, &aut, &ConstructOptions::default()).unwrap();
            let oracle = exhaustive_selfdual_search(&aut, n, &one, 1 << 20).unwrap();
            for g in report.generators() {
                assert!(oracle.contains(g), "n={n}: {g} missing from oracle");
            }
            assert_eq!(report.generators().len(), constructed, "n={n}");
            assert_eq!(oracle.len(), found, "n={n}");
            // every oracle member is a genuinely self-dual generator by
            // the matrix criterion
            for g in &oracle {
                let code = codes::generator_matrix_from(g, n)
                    .unwrap()
                    .with_lambda(one.clone());
                assert!(codes::is_hermitian_self_dual(&code).unwrap(), "n={n}: {g}");
            }
        }
    }

    #[test]
    fn theta_cyclic_existence_table() {
        assert_eq!(exists_theta_cyclic(5, 1, 2).unwrap(), Existence::Exists);
        assert_eq!(exists_theta_cyclic(3, 1, 2).unwrap(), Existence::NotExists);
        assert_eq!(exists_theta_cyclic(2, 2, 1).unwrap(), Existence::Exists);
        assert_eq!(exists_theta_cyclic(2, 2, 4).unwrap(), Existence::Exists);
        assert_eq!(exists_theta_cyclic(3, 2, 2).unwrap(), Existence::Exists);
        assert_eq!(exists_theta_cyclic(3, 1, 3).unwrap(), Existence::NotCovered);
        assert_eq!(exists_theta_negacyclic(3, 1, 3).unwrap(), Existence::Exists);
        assert_eq!(exists_theta_negacyclic(2, 3, 2).unwrap(), Existence::Exists);
        assert_eq!(
            exists_theta_negacyclic(5, 1, 2).unwrap(),
            Existence::NotCovered
        );
        assert!(exists_theta_cyclic(0, 1, 1).is_err());
    }

    #[test]
    fn binomial_existence_table() {
        assert!(exists_binomial(3, 2, 1, 2, CodeKind::Cyclic).unwrap());
        assert!(!exists_binomial(5, 1, 1, 2, CodeKind::Cyclic).unwrap());
        assert!(exists_binomial(5, 2, 2, 3, CodeKind::Negacyclic).unwrap());
        assert!(exists_binomial(5, 1, 2, 3, CodeKind::Negacyclic).unwrap());
        assert!(!exists_binomial(3, 2, 2, 3, CodeKind::Cyclic).unwrap());
        assert!(exists_binomial(3, 2, 2, 3, CodeKind::Negacyclic).unwrap());
        // p ≡ 3 (mod 4) with odd m gives p^m ≡ 3 (mod 4): out of scope
        assert!(matches!(
            exists_binomial(3, 1, 1, 2, CodeKind::Cyclic),
            Err(Error::NotCovered(_))
        ));
        assert!(matches!(
            exists_binomial(2, 2, 1, 2, CodeKind::Cyclic),
            Err(Error::NotCovered(_))
        ));
        assert!(!trinomial_exists(5, 2, 1, 3, CodeKind::Cyclic));
        assert!(!trinomial_exists(5, 2, 1, 3, CodeKind::Negacyclic));
    }

    #[test]
    fn order_obstruction_examples() {
        // 3, 9, 7, 1: the order of 3 modulo 10 is 4, which is even
        assert!(order_obstruction(10, 3, 1).unwrap());
        // the order of any odd q modulo 2 is 1, which is odd
        assert!(!order_obstruction(2, 3, 1).unwrap());
        assert!(!order_obstruction(2, 5, 2).unwrap());
        // q ≡ 1 mod n gives order 1
        assert!(!order_obstruction(6, 7, 1).unwrap());
        assert!(matches!(
            order_obstruction(8, 3, 1),
            Err(Error::NotCovered(_))
        ));
        assert!(matches!(
            order_obstruction(10, 2, 1),
            Err(Error::NotCovered(_))
        ));
        assert!(matches!(
            order_obstruction(10, 5, 1),
            Err(Error::NotCovered(_))
        ));
    }
}
