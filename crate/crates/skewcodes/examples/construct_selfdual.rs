//! Run with: cargo run --example construct_selfdual
//!
//! The full construction pipeline at length 6 over F_4 + uF_4: factor
//! x⁶ − 1 into central self-reciprocal pieces, search each piece for the
//! degree-halving factors g with g♮·g equal to the piece, combine one
//! choice per piece with a least common left multiple, and verify every
//! generator that survives.

use skewcodes::constructor::{construct_selfdual, ConstructOptions};
use skewcodes::{FieldSpec, Result, RingAutomorphism};

fn main() -> Result<()> {
    let f4 = FieldSpec::new(2, 2, vec![1, 1, 1])?;
    let aut = RingAutomorphism::new(1, f4.one())?;
    let n = 6;

    let opts = ConstructOptions {
        compute_distances: true,
        ..ConstructOptions::default()
    };
    let report = construct_selfdual(n, &aut, &opts)?;

    println!("x^{n} - 1 factors into central self-reciprocal pieces:");
    for f in report.factorization().lifted() {
        println!("  {f}");
    }

    println!("\ncandidate factors per piece (g with g♮·g = piece):");
    for (i, set) in report.candidate_sets().iter().enumerate() {
        println!("  G{}: {} candidates", i + 1, set.len());
        for g in set {
            println!("    {g}");
        }
    }

    println!("\nself-dual generators found:");
    for (i, g) in report.generators().iter().enumerate() {
        let verified = report.verified()[i];
        print!("  {g}  [verified: {verified}]");
        if let Some(d) = report.distances() {
            let (hamming, lee) = d[i];
            print!("  d_H = {hamming}, d_Lee = {lee}");
        }
        println!();
    }

    // The combination step can also be read with the reciprocals on the
    // other side; the report records whether both readings agree.
    println!(
        "\nalternate lclm reading agrees: {}",
        report.readings_agree()
    );
    println!(
        "candidates rejected by the self-duality check: {}",
        report.rejected().len()
    );
    println!(
        "factor tuples skipped (lclm leaves the unit-coefficient domain): {}",
        report.skipped_tuples()
    );

    // Every reported generator right-divides x⁶ − 1 and generates a
    // Hermitian self-dual code; the JSON form carries the same data.
    println!("\nJSON report:\n{}", report.to_json());
    Ok(())
}
