//! Run with: cargo run --example verify_generator
//!
//! Three independent ways to test that a generator polynomial yields a
//! Hermitian self-dual code, applied to a generator that passes all of
//! them and to one where the criteria genuinely disagree: the explicit
//! second-factor identity, the reciprocal-product test g·g♮ = xⁿ − 1,
//! and the matrix criterion G·Θ(G)ᵀ = 0 with |C| = |R|^{n/2}.

use skewcodes::codes::{
    check_selfdual_condition, generator_matrix_from, is_hermitian_self_dual, selfdual_by_reciprocal,
};
use skewcodes::{FieldSpec, RElement, Result, RingAutomorphism, SkewPoly};

fn report(g: &SkewPoly, n: usize) -> Result<()> {
    let one = RElement::one(g.aut().spec());
    println!("g = {g} at length {n}:");
    println!(
        "  second-factor identity: {}",
        check_selfdual_condition(g, n, &one)?
    );
    println!(
        "  reciprocal product:     {}",
        selfdual_by_reciprocal(g, n)?
    );
    let code = generator_matrix_from(g, n)?;
    println!(
        "  matrix criterion:       {}",
        is_hermitian_self_dual(&code)?
    );
    println!("  generator matrix:");
    for row in code.rows() {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        println!("    {}", cells.join("  "));
    }
    Ok(())
}

fn main() -> Result<()> {
    let f4 = FieldSpec::new(2, 2, vec![1, 1, 1])?;
    let aut = RingAutomorphism::new(1, f4.one())?;

    // x³ + (1+u) right-divides x⁶ − 1 and passes every criterion.
    let g = SkewPoly::parse(&aut, "x^3 + 1+u")?;
    report(&g, 6)?;

    // x³ + w also generates a self-dual code (the matrix test is the
    // ground truth), yet its reciprocal product misses x⁶ − 1. The
    // product reading deviates in both directions: here it is false on
    // a self-dual code, while at length 4 the divisor x² + (1+uw)
    // satisfies g·g♮ = x⁴ − 1 without being self-dual.
    println!();
    let g = SkewPoly::parse(&aut, "x^3 + w")?;
    report(&g, 6)?;

    println!();
    let g = SkewPoly::parse(&aut, "x^2 + 1+u*w")?;
    report(&g, 4)?;

    Ok(())
}
