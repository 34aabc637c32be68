//! Uniqueness of the Euler relation among linear syzygies.
//!
//! For a smooth form, the only tuples of linear forms (M_0, ..., M_4) with
//! sum M_i F'_i in span F are the multiples of the Euler tuple
//! (x0, ..., x4). Degenerate forms have larger kernels: a cone in five
//! variables frees the slot of its vanishing partial.
//!
//! Run with: cargo run --example koszul

use jacring::{koszul_linear_relations, parse_polynomial, Field, Result};

fn main() -> Result<()> {
    let q = Field::Rationals;
    let fermat = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", q, 5)?;
    let basis = koszul_linear_relations(&fermat)?;
    println!(
        "Fermat cubic: relation kernel dimension {}",
        basis.dimension()
    );
    for relation in &basis.relations {
        let tuple: Vec<String> = relation
            .components()
            .iter()
            .map(|m| m.to_string())
            .collect();
        println!(
            "  ({}) with sum M_i F'_i = {} * F  [euler multiple: {}]",
            tuple.join(", "),
            relation.form_multiple(),
            relation.is_euler_multiple()
        );
        assert!(relation.verify(&fermat));
    }

    let cone = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3", q, 5)?;
    let cone_basis = koszul_linear_relations(&cone)?;
    println!(
        "cone in five variables: relation kernel dimension {}",
        cone_basis.dimension()
    );

    let f3 = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", Field::Prime(3), 5)?;
    let degenerate = koszul_linear_relations(&f3)?;
    println!(
        "Fermat over F3 (all partials vanish): kernel dimension {}",
        degenerate.dimension()
    );
    Ok(())
}
