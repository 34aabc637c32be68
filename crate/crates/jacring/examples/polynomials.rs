//! The exact polynomial front end: parsing, differentiation, the Euler
//! identity, linear changes of coordinates and hyperplane restriction.
//!
//! Run with: cargo run --example polynomials

use jacring::{parse_polynomial, Field, LinearForm, Polynomial, Result};

fn main() -> Result<()> {
    let q = Field::Rationals;
    let fermat = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", q, 5)?;
    println!("F     = {fermat}");
    println!("dF/dx0 = {}", fermat.partial_derivative(0));

    // The same derivative in small characteristic.
    let f2 = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", Field::Prime(2), 5)?;
    let f3 = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", Field::Prime(3), 5)?;
    println!("over F2: dF/dx0 = {}", f2.partial_derivative(0));
    println!("over F3: dF/dx0 = {}", f3.partial_derivative(0));

    // sum x_i dF/dx_i = deg(F) * F holds formally in every characteristic.
    for (label, form) in [("Q", &fermat), ("F2", &f2), ("F3", &f3)] {
        println!("Euler identity over {label}: {}", form.euler_check()?);
    }

    // Adapting coordinates so that a chosen linear form becomes x0.
    let l = LinearForm::new(parse_polynomial("x0 + 2*x1 - x4", q, 5)?)?;
    let a = l.coordinates_sending_to_x0();
    let adapted = l.poly().change_of_coordinates(&a)?;
    println!("L = {l} maps to {adapted} under its adapting substitution");
    assert_eq!(adapted, Polynomial::variable(q, 5, 0));

    // Restricting to the hyperplane L = 0 eliminates one variable exactly.
    let section = l.restrict(&fermat);
    println!("F restricted to L = 0: {section}");
    assert_eq!(section.num_vars(), 4);
    assert_eq!(section.homogeneous_degree()?, 3);
    Ok(())
}
