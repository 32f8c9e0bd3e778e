//! Run with: cargo run --example field_arithmetic
//!
//! Arithmetic in F_q and in the chain ring R = F_q + uF_q (u² = 0):
//! building a field from its modulus, Frobenius powers, units of R and
//! their inverses, and the ring automorphisms Θ_{θ,β} of order two.

use skewcodes::{FieldSpec, RElement, Result, RingAutomorphism};

fn main() -> Result<()> {
    // F_4 = F_2[w]/(w² + w + 1); coefficients are listed constant first.
    let f4 = FieldSpec::new(2, 2, vec![1, 1, 1])?;
    let w = f4.parse_element("w")?;
    println!("working in F_4 with w^2 = w + 1");
    println!("w^2      = {}", w.mul(&w)?);
    println!("w^3      = {}", w.pow(3));
    println!("w + w^2  = {}", w.add(&w.mul(&w)?)?);
    println!("1/w      = {}", w.inverse()?);

    // The Frobenius a ↦ a^p generates the Galois group.
    println!("frobenius: w ↦ {}", w.frobenius(1));
    println!("frobenius twice: w ↦ {}", w.frobenius(2));

    // R = F_4 + uF_4 has 16 elements, 12 of them units (a ≠ 0).
    let units = RElement::units(&f4)?;
    println!("\nR = F_4 + uF_4 has {} units:", units.len());
    for r in &units {
        println!("  ({})⁻¹ = {}", r, r.inverse()?);
    }

    // Θ_{θ,β}(a + ub) = θ(a) + βθ(b)u with θ the Frobenius; over F_4 the
    // choice r = 1, β = 1 has order two, as the squares below confirm.
    let aut = RingAutomorphism::new(1, f4.one())?;
    println!(
        "\nautomorphism Θ (r = {}, β = {}), order {}:",
        aut.r(),
        aut.beta(),
        aut.order()
    );
    let sample = RElement::parse(&f4, "w + u*(w+1)")?;
    println!("Θ({sample}) = {}", aut.apply(&sample)?);
    println!("Θ²({sample}) = {}", aut.apply(&aut.apply(&sample)?)?);

    // Over F_25 = F_5[w]/(w² + 2) the order-two automorphisms allow any
    // β with β⁶ = 1; β = −1 pairs with the identity on residues (r = 0).
    let f25 = FieldSpec::new(5, 2, vec![2, 0, 1])?;
    let minus_one = f25.constant(4);
    let nega = RingAutomorphism::new(0, minus_one)?;
    let v = RElement::parse(&f25, "3 + u*2")?;
    println!("\nover F_25 with Θ_{{id,−1}}: Θ({v}) = {}", nega.apply(&v)?);
    Ok(())
}
