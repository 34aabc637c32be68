//! The etale criterion on the Fermat cubic threefold.
//!
//! A hyperplane avoiding the dual hypersurface cuts a smooth cubic surface,
//! and the section map is etale there exactly when multiplication by the
//! hyperplane's linear form is injective from degree 2 to degree 3 of the
//! Jacobian ring. Both the multiplication kernel and the tangent-space
//! kernel are computed independently and compared.
//!
//! Run with: cargo run --example etale

use jacring::{etale_check, parse_polynomial, Field, LinearForm, Result};

fn main() -> Result<()> {
    let field = Field::Rationals;
    let fermat = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", field, 5)?;

    for hyperplane in ["x0", "x0+x1+x2+x3+x4", "x0+x1"] {
        let l = LinearForm::new(parse_polynomial(hyperplane, field, 5)?)?;
        let verdict = etale_check(&fermat, &l)?;
        println!("H: {hyperplane}");
        println!("  status: {:?}", verdict.status);
        if let (Some(wlp), Some(tangent)) = (
            verdict.wlp_kernel_dimension,
            verdict.tangent_kernel_dimension,
        ) {
            println!("  xL kernel dimension:      {wlp}");
            println!("  tangent kernel dimension: {tangent}");
            println!(
                "  two routes agree:         {}",
                verdict.crosscheck_passed.unwrap_or(false)
            );
        }
    }
    Ok(())
}
