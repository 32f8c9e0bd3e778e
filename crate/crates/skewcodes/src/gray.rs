//! The Gray map Φ(a+ub) = (b, a+b) from Rⁿ to F_q^{2n}, the Lee weight,
//! and the permutation calculus that transports the twisted shift to the
//! Gray side: the quasi-twisted shift σ, the scaling map μ, the Nechaev
//! permutation ϱ, and the substitution isomorphism υ.

use crate::chain_ring::{RElement, RingAutomorphism};
use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::skew_poly::SkewPoly;

/// Φ applied componentwise: the first block collects the u-parts b, the
/// second block the sums a+b.
pub fn gray_map(v: &[RElement]) -> Result<Vec<FieldElement>> {
    let mut first = Vec::with_capacity(v.len());
    let mut second = Vec::with_capacity(v.len());
    for e in v {
        first.push(e.b().clone());
        second.push(e.a().add(e.b())?);
    }
    first.extend(second);
    Ok(first)
}

/// The inverse of Φ: (b, c) ↦ (c − b) + u·b.
pub fn gray_inverse(g: &[FieldElement]) -> Result<Vec<RElement>> {
    if g.len() % 2 != 0 {
        return Err(Error::UnsupportedLength {
            n: g.len(),
            reason: "a Gray image has even length".into(),
        });
    }
    let n = g.len() / 2;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let b = g[i].clone();
        let a = g[n + i].sub(&b)?;
        out.push(RElement::new(a, b)?);
    }
    Ok(out)
}

/// Lee weight: the Hamming weight of the Gray image.
pub fn lee_weight(v: &[RElement]) -> Result<usize> {
    Ok(gray_map(v)?.iter().filter(|e| !e.is_zero()).count())
}

/// The Gray-side shift σ with σ∘Φ = Φ∘ρ_{Θ,λ}: away from the wrap both
/// blocks shift like a θ-twisted cyclic shift; at the wrap position the
/// unit λ = λₐ + u·λᵦ mixes the blocks:
/// given B = first_{n−1} and C = second_{n−1} (so the last ring entry is
/// (C−B) + uB), the wrapped ring entry is Θ(λ·((C−B) + uB)).
pub fn quasi_twisted_shift(
    g: &[FieldElement],
    aut: &RingAutomorphism,
    lambda: &RElement,
) -> Result<Vec<FieldElement>> {
    if g.len() % 2 != 0 {
        return Err(Error::UnsupportedLength {
            n: g.len(),
            reason: "a Gray image has even length".into(),
        });
    }
    if !lambda.is_unit() {
        return Err(Error::NotAUnit(format!("shift constant {lambda}")));
    }
    let n = g.len() / 2;
    let mut out = vec![g[0].spec().zero(); 2 * n];
    let r = aut.r();
    for i in 1..n {
        out[i] = g[i - 1].frobenius(r);
        out[n + i] = g[n + i - 1].frobenius(r);
    }
    let b_last = &g[n - 1];
    let c_last = &g[2 * n - 1];
    let a_last = c_last.sub(b_last)?;
    // Θ(λ·(a + ub)) = θ(λₐa) + β·θ(λₐb + λᵦa)·u
    let new_a = lambda.a().mul(&a_last)?.frobenius(r);
    let new_b = aut.beta().mul(
        &lambda
            .a()
            .mul(b_last)?
            .add(&lambda.b().mul(&a_last)?)?
            .frobenius(r),
    )?;
    out[0] = new_b.clone();
    out[n] = new_a.add(&new_b)?;
    Ok(out)
}

/// μ(c₀, …, c_{n−1}) = (c₀, (1+u)c₁, …, (1+u)^{n−1}c_{n−1}) for odd n in
/// characteristic 2 (where (1+u)² = 1).
pub fn mu_permutation(v: &[RElement]) -> Result<Vec<RElement>> {
    if v.is_empty() || v.len() % 2 == 0 {
        return Err(Error::UnsupportedLength {
            n: v.len(),
            reason: "the scaling map is defined for odd lengths".into(),
        });
    }
    let spec = v[0].spec();
    if spec.p() != 2 {
        return Err(Error::NotCovered(
            "the scaling map needs characteristic 2 so that (1+u)² = 1".into(),
        ));
    }
    let unit = RElement::new(spec.one(), spec.one())?;
    let mut out = Vec::with_capacity(v.len());
    let mut scale = RElement::one(spec);
    for e in v {
        out.push(scale.mul(e)?);
        scale = scale.mul(&unit)?;
    }
    Ok(out)
}

/// The Nechaev permutation ϱ on Gray vectors of odd underlying length n:
/// transposes positions i and n+i for every odd i ≤ n−2.
pub fn nechaev_permutation(g: &[FieldElement]) -> Result<Vec<FieldElement>> {
    if g.len() % 2 != 0 {
        return Err(Error::UnsupportedLength {
            n: g.len(),
            reason: "a Gray image has even length".into(),
        });
    }
    let n = g.len() / 2;
    if n % 2 == 0 {
        return Err(Error::UnsupportedLength {
            n,
            reason: "the block permutation is defined for odd underlying lengths".into(),
        });
    }
    let mut out = g.to_vec();
    let mut i = 1;
    while i + 2 <= n {
        out.swap(i, n + i);
        i += 2;
    }
    Ok(out)
}

/// υ(c(x)) = c(λx) for λ = 1+u, odd n, characteristic 2: coefficient i is
/// multiplied by λ·Θ(λ)·…·Θ^{i−1}(λ); the result is reduced mod xⁿ−λ.
pub fn upsilon(c: &SkewPoly, n: usize, lambda: &RElement) -> Result<SkewPoly> {
    if n % 2 == 0 {
        return Err(Error::UnsupportedLength {
            n,
            reason: "the substitution isomorphism is defined for odd lengths".into(),
        });
    }
    let spec = c.spec();
    if spec.p() != 2 {
        return Err(Error::NotCovered(
            "the substitution isomorphism needs characteristic 2".into(),
        ));
    }
    let expected = RElement::new(spec.one(), spec.one())?;
    if *lambda != expected {
        return Err(Error::NotCovered(format!(
            "the substitution isomorphism is stated for the unit 1+u, got {lambda}"
        )));
    }
    let aut = c.aut();
    let mut coeffs = Vec::with_capacity(c.coeffs().len());
    let mut accum = RElement::one(spec);
    for (i, ci) in c.coeffs().iter().enumerate() {
        coeffs.push(ci.mul(&accum)?);
        // extend λ·Θ(λ)·…·Θ^{i-1}(λ) by Θ^i(λ)
        accum = accum.mul(&aut.apply_pow(lambda, i)?)?;
    }
    let image = SkewPoly::new(aut.clone(), coeffs)?;
    let modulus = SkewPoly::x_pow_minus(aut, n, lambda)?;
    Ok(image.right_divmod(&modulus)?.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::ShiftOperator;
    use crate::gf::FieldSpec;
    use std::sync::Arc;

    fn f4_frobenius() -> RingAutomorphism {
        let spec = FieldSpec::new(2, 2, vec![1, 1, 1]).unwrap();
        RingAutomorphism::new(1, spec.one()).unwrap()
    }

    fn rvec(aut: &RingAutomorphism, parts: &[&str]) -> Vec<RElement> {
        parts
            .iter()
            .map(|s| RElement::parse(aut.spec(), s).unwrap())
            .collect()
    }

    fn fvec(aut: &RingAutomorphism, parts: &[&str]) -> Vec<FieldElement> {
        parts
            .iter()
            .map(|s| aut.spec().parse_element(s).unwrap())
            .collect()
    }

    #[test]
    fn gray_map_examples() {
        let aut = f4_frobenius();
        let row = rvec(&aut, &["1+u", "0", "0", "1", "0", "0"]);
        let image = gray_map(&row).unwrap();
        assert_eq!(
            image,
            fvec(
                &aut,
                &["1", "0", "0", "0", "0", "0", "0", "0", "0", "1", "0", "0"]
            )
        );
        let zero = rvec(&aut, &["0", "0"]);
        assert!(gray_map(&zero).unwrap().iter().all(FieldElement::is_zero));
        assert_eq!(
            gray_map(&rvec(&aut, &["u"])).unwrap(),
            fvec(&aut, &["1", "1"])
        );
        // inverse round trip over all of R
        let all = RElement::all_elements(aut.spec()).unwrap();
        for e in all {
            let v = vec![e.clone()];
            assert_eq!(gray_inverse(&gray_map(&v).unwrap()).unwrap(), v);
        }
    }

    #[test]
    fn lee_weight_examples() {
        let aut = f4_frobenius();
        assert_eq!(lee_weight(&rvec(&aut, &["1+u"])).unwrap(), 1);
        assert_eq!(lee_weight(&rvec(&aut, &["0", "0"])).unwrap(), 0);
        assert_eq!(
            lee_weight(&rvec(&aut, &["1+u", "0", "0", "1", "0", "0"])).unwrap(),
            2
        );
    }

    #[test]
    fn quasi_twisted_shift_examples() {
        let spec = FieldSpec::new(2, 2, vec![1, 1, 1]).unwrap();
        // Θ = id, λ = 1: plain blockwise cyclic shift
        let id_aut = RingAutomorphism::new(0, spec.one()).unwrap();
        let g = fvec(&id_aut, &["1", "w", "0", "w+1"]);
        assert_eq!(
            quasi_twisted_shift(&g, &id_aut, &RElement::one(&spec)).unwrap(),
            fvec(&id_aut, &["w", "1", "w+1", "0"])
        );
        // Frobenius, field-level λ = 1: blockwise θ-twisted shift
        let aut = f4_frobenius();
        let g = fvec(&aut, &["w", "0", "1", "w"]);
        assert_eq!(
            quasi_twisted_shift(&g, &aut, &RElement::one(&spec)).unwrap(),
            fvec(&aut, &["0", "w+1", "w+1", "1"])
        );
    }

    #[test]
    fn shift_commutes_with_gray_exhaustively() {
        let aut = f4_frobenius();
        let spec = Arc::clone(aut.spec());
        let all = RElement::all_elements(&spec).unwrap();
        let lambdas = [
            RElement::one(&spec),
            RElement::new(spec.one(), spec.one()).unwrap(),
            RElement::new(spec.gen(), spec.one()).unwrap(),
        ];
        for lambda in &lambdas {
            let rho = ShiftOperator::new(aut.clone(), lambda.clone()).unwrap();
            // n = 2 exhaustive: 256 vectors
            for a in &all {
                for b in &all {
                    let v = vec![a.clone(), b.clone()];
                    let lhs = gray_map(&rho.apply(&v).unwrap()).unwrap();
                    let rhs = quasi_twisted_shift(&gray_map(&v).unwrap(), &aut, lambda).unwrap();
                    assert_eq!(lhs, rhs, "λ = {lambda}");
                }
            }
        }
    }

    #[test]
    fn mu_examples() {
        let aut = f4_frobenius();
        assert_eq!(
            mu_permutation(&rvec(&aut, &["1", "1", "1"])).unwrap(),
            rvec(&aut, &["1", "1+u", "1"])
        );
        let zero = rvec(&aut, &["0", "0", "0"]);
        assert_eq!(mu_permutation(&zero).unwrap(), zero);
        let c = rvec(&aut, &["w", "u", "1+u"]);
        assert_eq!(
            mu_permutation(&c).unwrap(),
            rvec(&aut, &["w", "u", "1+u"])
                .iter()
                .enumerate()
                .map(|(i, e)| if i % 2 == 1 {
                    RElement::new(aut.spec().one(), aut.spec().one())
                        .unwrap()
                        .mul(e)
                        .unwrap()
                } else {
                    e.clone()
                })
                .collect::<Vec<_>>()
        );
        assert!(mu_permutation(&rvec(&aut, &["1", "1"])).is_err());
    }

    #[test]
    fn nechaev_examples() {
        let aut = f4_frobenius();
        let g = fvec(&aut, &["1", "w", "0", "w+1", "1", "w"]);
        // n = 3: the only transposition is (1, 4)
        assert_eq!(
            nechaev_permutation(&g).unwrap(),
            fvec(&aut, &["1", "1", "0", "w+1", "w", "w"])
        );
        // even indices are fixed points
        let h = nechaev_permutation(&g).unwrap();
        for i in [0usize, 2, 3, 5] {
            assert_eq!(h[i], g[i]);
        }
        // n = 5: transpositions (1,6) and (3,8)
        let g10: Vec<FieldElement> = (0..10)
            .map(|i| aut.spec().constant(u64::from(i % 2 == 0)))
            .collect();
        let h10 = nechaev_permutation(&g10).unwrap();
        assert_eq!(h10[1], g10[6]);
        assert_eq!(h10[6], g10[1]);
        assert_eq!(h10[3], g10[8]);
        assert_eq!(h10[8], g10[3]);
        assert!(nechaev_permutation(&fvec(&aut, &["1", "0", "1", "0"])).is_err());
    }

    #[test]
    fn gray_mu_nechaev_identity_exhaustive_n3() {
        let aut = f4_frobenius();
        let all = RElement::all_elements(aut.spec()).unwrap();
        for a in all.iter().take(6) {
            for b in &all {
                for c in &all {
                    let v = vec![a.clone(), b.clone(), c.clone()];
                    let lhs = gray_map(&mu_permutation(&v).unwrap()).unwrap();
                    let rhs = nechaev_permutation(&gray_map(&v).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn upsilon_examples() {
        let aut = f4_frobenius();
        let spec = Arc::clone(aut.spec());
        let lambda = RElement::new(spec.one(), spec.one()).unwrap();
        let one = SkewPoly::one(&aut);
        assert_eq!(upsilon(&one, 3, &lambda).unwrap(), one);
        let x = SkewPoly::x_pow(&aut, 1);
        assert_eq!(
            upsilon(&x, 3, &lambda).unwrap(),
            SkewPoly::parse(&aut, "(1+u)*x").unwrap()
        );
        let x2 = SkewPoly::x_pow(&aut, 2);
        assert_eq!(upsilon(&x2, 3, &lambda).unwrap(), x2);
        assert!(upsilon(&x, 4, &lambda).is_err());
        assert!(upsilon(&x, 3, &RElement::one(&spec)).is_err());
    }

    #[test]
    fn gray_is_an_isometry() {
        let aut = f4_frobenius();
        let all = RElement::all_elements(aut.spec()).unwrap();
        for a in &all {
            for b in &all {
                let v = vec![a.clone()];
                let w = vec![b.clone()];
                let diff = vec![a.sub(b).unwrap()];
                let gv = gray_map(&v).unwrap();
                let gw = gray_map(&w).unwrap();
                let hamming = gv.iter().zip(&gw).filter(|(x, y)| x != y).count();
                assert_eq!(lee_weight(&diff).unwrap(), hamming);
            }
        }
    }
}
