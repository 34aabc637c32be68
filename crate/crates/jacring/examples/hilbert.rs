//! Hilbert function of a Jacobian ring, degree by degree.
//!
//! For a smooth form the partials are a regular sequence, so the quotient
//! is an Artinian complete intersection: its Hilbert function matches the
//! generating series ((1 - t^{d-1}) / (1 - t))^{n+1} and is symmetric
//! around the socle degree.
//!
//! Run with: cargo run --example hilbert

use jacring::{graded_dimension, parse_polynomial, socle_degree, Field, JacobianRing, Result};

fn main() -> Result<()> {
    let field = Field::Rationals;
    let fermat = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", field, 5)?;
    let jr = JacobianRing::new(fermat.clone())?;

    println!("F = {fermat} over {field}");
    println!(
        "{:>3} {:>8} {:>8} {:>12}",
        "k", "dim R_k", "dim J_k", "dim (R/J)_k"
    );
    for k in 0..=6 {
        println!(
            "{:>3} {:>8} {:>8} {:>12}",
            k,
            graded_dimension(5, k),
            jr.ideal_dimension(k),
            jr.hilbert_value(k)
        );
    }

    let sigma = socle_degree(4, 3);
    println!("\nsocle degree: {sigma}");
    print!("Gorenstein symmetry h(k) = h({sigma}-k): ");
    let symmetric = (0..=sigma).all(|k| jr.hilbert_value(k) == jr.hilbert_value(sigma - k));
    println!("{symmetric}");
    assert!(symmetric);

    // The coset bases behind those dimensions are explicit standard
    // monomials; degree 2 keeps the ten squarefree products.
    let basis: Vec<String> = jr.coset_basis(2).iter().map(|m| m.to_string()).collect();
    println!("standard monomials of degree 2: {}", basis.join(", "));
    Ok(())
}
