//! Run with: cargo run --example existence
//!
//! Closed-form existence answers for Hermitian self-dual twisted-cyclic
//! and twisted-negacyclic codes of length 2k over F_q + uF_q, the
//! skew-binomial special cases, and the order obstruction that rules out
//! non-trivial self-dual codes at certain lengths.

use skewcodes::constructor::{
    exists_binomial, exists_theta_cyclic, exists_theta_negacyclic, order_obstruction,
};
use skewcodes::{CodeKind, Result};

fn main() -> Result<()> {
    println!("existence of self-dual codes of length n = 2k over F_(p^m) + uF_(p^m)");
    println!(
        "{:>3} {:>2} {:>3}   {:<12} negacyclic",
        "p", "m", "k", "cyclic"
    );
    for (p, m, k) in [
        (2u64, 2usize, 3u128),
        (2, 3, 4),
        (3, 1, 1),
        (3, 1, 2),
        (5, 1, 2),
        (5, 2, 2),
        (5, 1, 3),
        (7, 1, 2),
        (13, 1, 4),
    ] {
        let cyclic = exists_theta_cyclic(p, m, k)?;
        let negacyclic = exists_theta_negacyclic(p, m, k)?;
        println!(
            "{p:>3} {m:>2} {k:>3}   {:<12} {negacyclic}",
            cyclic.to_string()
        );
    }

    // The binomial criterion answers when a generator of the simple shape
    // xᵏ − a − ub exists; it needs p^m ≡ 1 (mod 4) in odd characteristic.
    println!("\nskew-binomial generators x^k - (a + ub):");
    for (p, m, r, k, kind) in [
        (3u64, 2usize, 1usize, 2u128, CodeKind::Cyclic),
        (3, 2, 2, 3, CodeKind::Negacyclic),
        (5, 1, 0, 3, CodeKind::Negacyclic),
        (5, 1, 0, 2, CodeKind::Cyclic),
    ] {
        let answer = exists_binomial(p, m, r, k, kind)?;
        println!("  p={p}, m={m}, r={r}, k={k}, {kind}: {answer}");
    }

    // When the multiplicative order of p^m modulo n is even, no
    // non-trivial self-dual code of that length exists. Length 10 over
    // F_3 is obstructed; length 2 is not.
    println!("\norder obstruction (n = 2k, k odd, gcd(n, p) = 1):");
    for (n, p, m) in [(10u128, 3u64, 1usize), (2, 3, 1), (6, 7, 1)] {
        let blocked = order_obstruction(n, p, m)?;
        println!(
            "  n={n}, q={p}^{m}: {}",
            if blocked {
                "obstructed"
            } else {
                "not obstructed"
            }
        );
    }
    Ok(())
}
