//! The characteristic-2 counterexample to the weak Lefschetz property.
//!
//! Over F_2 the Jacobian ideal of the Fermat cubic is generated by the
//! squares of all linear forms, so l * (l * m) always dies in degree 3:
//! no multiplication map x l is injective, exhaustively over all 31
//! projective classes.
//!
//! Run with: cargo run --example char2_fermat

use jacring::{
    char2_fermat_demo, parse_polynomial, wlp_exhaustive, ExhaustiveOutcome, Field, JacobianRing,
    Result,
};

fn main() -> Result<()> {
    let report = char2_fermat_demo()?;
    println!(
        "[l m] nonzero in degree 2:  {}",
        report.product_class_nonzero
    );
    println!(
        "[l^2 m] zero in degree 3:   {}",
        report.repeated_product_class_zero
    );
    println!(
        "span of the {} squares: dimension {}, equals J_2: {}",
        report.forms_enumerated,
        report.squares_span_dimension,
        report.squares_span_equals_ideal_piece
    );

    let fermat = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", Field::Prime(2), 5)?;
    let jr = JacobianRing::new(fermat)?;
    match wlp_exhaustive(&jr, 2, None)? {
        ExhaustiveOutcome::NoneInjective { failures } => {
            println!("\nall {} classes fail; kernel dimensions:", failures.len());
            for (form, dim) in failures.iter().take(5) {
                println!("  x({form}): kernel dimension {dim}");
            }
            println!("  ...");
        }
        ExhaustiveOutcome::Witness { form, .. } => {
            unreachable!("no witness exists over F_2, found {form}")
        }
    }
    Ok(())
}
