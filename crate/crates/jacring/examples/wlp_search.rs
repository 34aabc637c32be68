//! Seeded search for weak Lefschetz witnesses.
//!
//! Injectivity of xL on the middle graded piece is a Zariski-open condition
//! on L, so a handful of random draws finds a witness on any smooth cubic
//! threefold in characteristic 0; every returned witness is re-verified on
//! a freshly built model.
//!
//! Run with: cargo run --example wlp_search

use jacring::{
    multiplication_map, parse_polynomial, random_smooth_form, wlp_search, CoeffPolicy, Field,
    JacobianRing, Result, WlpOutcome,
};

fn main() -> Result<()> {
    let field = Field::Rationals;
    let fermat = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", field, 5)?;
    let jr = JacobianRing::new(fermat)?;

    let witness = wlp_search(&jr, 2, 20, 0xA11CE)?;
    println!(
        "Fermat cubic: {:?} after {} trial(s)",
        witness.outcome, witness.trials
    );
    if let Some(l) = &witness.witness {
        let map = multiplication_map(&jr, l, 2)?;
        println!(
            "  rank of xL on the 10-dimensional middle piece: {}",
            map.rank()
        );
    }

    // The same search on a random smooth cubic threefold.
    let random_cubic = random_smooth_form(5, 3, field, 2024, CoeffPolicy::default(), 16)?;
    println!("\nrandom smooth cubic: {random_cubic}");
    let jr = JacobianRing::new(random_cubic)?;
    let witness = wlp_search(&jr, 2, 20, 0xB0B)?;
    match &witness.outcome {
        WlpOutcome::WitnessFound { witness: form } => {
            println!("  witness after {} trial(s): {form}", witness.trials)
        }
        other => println!("  {other:?}"),
    }

    // A form with no witness at all: the Fermat cubic in characteristic 2.
    let f2 = parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3 + x4^3", Field::Prime(2), 5)?;
    let jr2 = JacobianRing::new(f2)?;
    let failed = wlp_search(&jr2, 2, 20, 1)?;
    println!(
        "\nFermat over F2: {:?} after {} trials",
        failed.outcome, failed.trials
    );
    Ok(())
}
