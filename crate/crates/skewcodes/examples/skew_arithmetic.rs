//! Run with: cargo run --example skew_arithmetic
//!
//! The twisted polynomial ring R[x;Θ] where x·a = Θ(a)·x: products that
//! depend on the order of the factors, right and left division with
//! remainder, greatest common right divisors, least common left
//! multiples, and the skew reciprocal h ↦ h♮.

use skewcodes::{FieldSpec, Result, RingAutomorphism, SkewPoly};

fn main() -> Result<()> {
    let f4 = FieldSpec::new(2, 2, vec![1, 1, 1])?;
    let aut = RingAutomorphism::new(1, f4.one())?;

    // Multiplication is not commutative: moving x past a coefficient
    // applies Θ to it.
    let x = SkewPoly::parse(&aut, "x")?;
    let c = SkewPoly::parse(&aut, "w")?;
    println!("x * w = {}", x.mul(&c)?);
    println!("w * x = {}", c.mul(&x)?);

    let f = SkewPoly::parse(&aut, "x^2 + w*x + 1")?;
    let g = SkewPoly::parse(&aut, "x + w")?;
    println!("\nf = {f}");
    println!("g = {g}");
    println!("f * g = {}", f.mul(&g)?);
    println!("g * f = {}", g.mul(&f)?);

    // Right division writes f = g·q + rem with deg rem < deg g.
    let (q, rem) = f.right_divmod(&g)?;
    println!("\nright division of f by g: q = {q}, rem = {rem}");
    assert_eq!(g.mul(&q)?.add(&rem)?, f);

    // Left division factors from the other side: f = q'·g + rem'.
    let (lq, lrem) = f.left_divmod(&g)?;
    println!("left division of f by g:  q = {lq}, rem = {lrem}");
    assert_eq!(lq.mul(&g)?.add(&lrem)?, f);

    // x⁶ − 1 factors through x³ + 1 on the right; the quotient is exact.
    let modulus = SkewPoly::parse(&aut, "x^6 + 1")?;
    let h = SkewPoly::parse(&aut, "x^3 + 1")?;
    println!(
        "\nx^6 + 1 right-divisible by x^3 + 1: {}",
        modulus.is_right_divisible_by(&h)?
    );

    // gcrd and lcrm tie the divisibility lattice together: every common
    // right divisor divides the gcrd, and the lcrm is the smallest monic
    // polynomial both factors divide on the right.
    let a = SkewPoly::parse(&aut, "x^2 + 1")?;
    let b = SkewPoly::parse(&aut, "x^2 + x + 1")?;
    println!("\ngcrd(x^2 + 1, x^2 + x + 1) = {}", SkewPoly::gcrd(&a, &b)?);
    let l = SkewPoly::lcrm(&a, &b)?;
    println!("lcrm(x^2 + 1, x^2 + x + 1) = {l}");
    assert!(l.is_right_divisible_by(&a)?);
    assert!(l.is_right_divisible_by(&b)?);

    // The skew reciprocal reverses coefficients with a Θ-twist and
    // rescales to monic: h♮ = Θ^m(h₀)⁻¹ · h*. Unlike the commutative
    // reversal it need not be an involution.
    let h = SkewPoly::parse(&aut, "x^2 + w*x + w")?;
    let h1 = h.monic_skew_reciprocal()?;
    let h2 = h1.monic_skew_reciprocal()?;
    println!("\nh    = {h}");
    println!("h♮   = {h1}");
    println!("h♮♮  = {h2}   (≠ h: the twist survives on odd-degree terms)");
    Ok(())
}
