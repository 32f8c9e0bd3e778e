//! Run with: cargo run --example gray_images
//!
//! The Gray map Φ(a + ub) = (b, a + b) from Rⁿ to F_q^{2n}: Lee weights,
//! the distance-doubling picture for a self-dual code, and the
//! intertwining identities that make Gray images of twisted-cyclic codes
//! quasi-twisted: Φ∘ρ = σ∘Φ and Φ∘μ = ϱ∘Φ.

use skewcodes::codes::{
    generator_matrix_from, min_distance, ShiftOperator, DEFAULT_DISTANCE_BUDGET,
};
use skewcodes::gray::{
    gray_map, lee_weight, mu_permutation, nechaev_permutation, quasi_twisted_shift,
};
use skewcodes::{FieldSpec, Metric, RElement, Result, RingAutomorphism};

fn show(v: &[RElement]) -> String {
    let cells: Vec<String> = v.iter().map(|e| e.to_string()).collect();
    format!("({})", cells.join(", "))
}

fn show_f<T: std::fmt::Display>(v: &[T]) -> String {
    let cells: Vec<String> = v.iter().map(|e| e.to_string()).collect();
    format!("({})", cells.join(", "))
}

fn main() -> Result<()> {
    let f4 = FieldSpec::new(2, 2, vec![1, 1, 1])?;
    let aut = RingAutomorphism::new(1, f4.one())?;

    // Φ splits each coordinate a + ub into the pair (b, a + b); the Lee
    // weight of the source equals the Hamming weight of the image.
    let v: Vec<RElement> = ["1+u", "0", "w"]
        .iter()
        .map(|s| RElement::parse(&f4, s))
        .collect::<Result<_>>()?;
    let image = gray_map(&v)?;
    println!("v      = {}", show(&v));
    println!("Φ(v)   = {}", show_f(&image));
    println!("lee weight of v = {}", lee_weight(&v)?);

    // For the self-dual code <x³ + (1+u)> of length 6 the Gray image is
    // a [12, 6] code over F_4 whose Hamming distance is the source's Lee
    // distance.
    let g = skewcodes::SkewPoly::parse(&aut, "x^3 + 1+u")?;
    let code = generator_matrix_from(&g, 6)?;
    let hamming = min_distance(&code, Metric::Hamming, DEFAULT_DISTANCE_BUDGET)?;
    let lee = min_distance(&code, Metric::Lee, DEFAULT_DISTANCE_BUDGET)?;
    println!("\ncode <{g}> of length 6: d_H = {hamming}, d_Lee = {lee}");
    println!(
        "gray image: a [{}, {}] code over F_4 with minimum distance {lee}",
        12,
        code.gray_generator_matrix()?.len()
    );

    // Intertwining: applying the twisted shift ρ before Φ matches the
    // quasi-twisted double-shift σ after Φ …
    let lambda = RElement::parse(&f4, "1+u")?;
    let rho = ShiftOperator::new(aut.clone(), lambda.clone())?;
    let shifted_then_mapped = gray_map(&rho.apply(&v)?)?;
    let mapped_then_shifted = quasi_twisted_shift(&image, &aut, &lambda)?;
    println!("\nΦ(ρ(v)) = {}", show_f(&shifted_then_mapped));
    println!("σ(Φ(v)) = {}", show_f(&mapped_then_shifted));
    assert_eq!(shifted_then_mapped, mapped_then_shifted);

    // … and composing Φ with the scaling map μ (odd length, char 2)
    // matches the Nechaev permutation ϱ on the image.
    let v2: Vec<RElement> = ["w", "1", "u"]
        .iter()
        .map(|s| RElement::parse(&f4, s))
        .collect::<Result<_>>()?;
    let mu_then_mapped = gray_map(&mu_permutation(&v2)?)?;
    let mapped_then_permuted = nechaev_permutation(&gray_map(&v2)?)?;
    println!("\nv2      = {}", show(&v2));
    println!("Φ(μ(v2)) = {}", show_f(&mu_then_mapped));
    println!("ϱ(Φ(v2)) = {}", show_f(&mapped_then_permuted));
    assert_eq!(mu_then_mapped, mapped_then_permuted);
    Ok(())
}
