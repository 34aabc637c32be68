//! The tangent-space side of the etale criterion, with certificates.
//!
//! After adapting coordinates so the hyperplane is x0 = 0, vector fields
//! V = sum L_i d/dx_i (L_i linear in x1..x4, one Euler-type relation) map
//! to sum L_i dF/dx_i in R_3 / (x0 R_2 + span F). Each kernel element
//! carries an exact identity sum L_i F'_i = x0 Q + 3 a F whose class [Q]
//! is a nonzero kernel element of multiplication by x0.
//!
//! Run with: cargo run --example tangent_kernel

use jacring::{parse_polynomial, tangent_kernel, Field, LinearForm, Result};

fn main() -> Result<()> {
    let field = Field::Rationals;
    let fermat = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", field, 5)?;
    let l = LinearForm::new(parse_polynomial("x0", field, 5)?)?;

    let report = tangent_kernel(&fermat, &l)?;
    println!("kernel dimension: {}", report.kernel_dimension);
    for element in &report.elements {
        let cert = &element.certificate;
        println!("\nV = {}", element.vector_field);
        println!("  Q = {}", cert.witness_form);
        println!("  a = {}", cert.scale);
        println!(
            "  identity sum L_i F'_i = x0 Q + 3 a F verified: {}",
            cert.verify(&report.adapted_form, &element.vector_field)
        );
    }

    // At a generic hyperplane the kernel vanishes.
    let generic = LinearForm::new(parse_polynomial("x0+x1+x2+x3+x4", field, 5)?)?;
    let trivial = tangent_kernel(&fermat, &generic)?;
    println!(
        "\nat x0+x1+x2+x3+x4: kernel dimension {}",
        trivial.kernel_dimension
    );
    Ok(())
}
